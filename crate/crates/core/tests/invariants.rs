//! Algebraic invariants checked on randomized inputs.

use laguerre_words::laguerre::{
    expand_in_laguerre_basis, laguerre_polynomial, linearization_coefficients, phi, phi_series,
    transform,
};
use laguerre_words::oracle::{
    contains_vincular, count_avoiding_words, count_carlitz_parts_factorizations,
    count_cyclic_avoiding_words, restrict, star_product, Factorization, Letter, Word,
    DEFAULT_BUDGET,
};
use laguerre_words::patterns::{g_contain, VincularPattern};
use laguerre_words::{Rat, Series, TPoly};
use num_traits::{One, Signed};
use proptest::prelude::*;

fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn arb_tpoly(max_deg: usize) -> impl Strategy<Value = TPoly> {
    prop::collection::vec((0..=max_deg, arb_rat()), 0..=6)
        .prop_map(TPoly::from_coeffs)
}

/// Series of fixed order with small rational `t`-polynomial coefficients.
fn arb_series(order: usize) -> impl Strategy<Value = Series> {
    prop::collection::vec(arb_tpoly(3), order + 1).prop_map(Series::from_coeffs)
}

/// `t`-free series with zero constant term.
fn arb_tfree_no_const(order: usize) -> impl Strategy<Value = Series> {
    prop::collection::vec(arb_rat(), order)
        .prop_map(|cs| {
            let mut coeffs = vec![TPoly::zero()];
            coeffs.extend(cs.into_iter().map(TPoly::constant));
            Series::from_coeffs(coeffs)
        })
}

fn arb_word(max_len: usize, alphabet: Letter) -> impl Strategy<Value = Word> {
    prop::collection::vec(1..=alphabet, 0..=max_len).prop_map(Word)
}

fn arb_factorization(alphabet_lo: Letter, alphabet_hi: Letter) -> impl Strategy<Value = Factorization> {
    prop::collection::vec(
        prop::collection::vec(alphabet_lo..=alphabet_hi, 1..=3).prop_map(Word),
        0..=3,
    )
    .prop_map(Factorization)
}

fn assert_normalized(c: &Rat) {
    assert!(c.denom().is_positive());
    assert!(num_integer::gcd(c.numer().abs(), c.denom().clone()).is_one());
}

proptest! {
    #[test]
    fn tpoly_ring_axioms(a in arb_tpoly(8), b in arb_tpoly(8), c in arb_tpoly(8)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &(-&a), TPoly::zero());
        prop_assert_eq!(&a * &TPoly::one(), a.clone());
    }

    #[test]
    fn phi_is_linear(a in arb_tpoly(8), b in arb_tpoly(8), c in arb_rat()) {
        prop_assert_eq!(phi(&(&a + &b)), phi(&a) + phi(&b));
        prop_assert_eq!(phi(&a.scale(&c)), c * phi(&a));
    }

    #[test]
    fn series_inverse_round_trip(tail in prop::collection::vec(arb_tpoly(3), 6)) {
        let mut coeffs = vec![TPoly::one()];
        coeffs.extend(tail);
        let d = Series::from_coeffs(coeffs);
        let inv = d.invert().unwrap();
        prop_assert_eq!(&d * &inv, Series::one(6));
    }

    #[test]
    fn rational_reconstructs_numerator(n in arb_series(6), d in arb_series(6)) {
        let d = {
            // Replace the constant term with 1 so the series is invertible.
            let mut coeffs = d.coeffs().to_vec();
            coeffs[0] = TPoly::one();
            Series::from_coeffs(coeffs)
        };
        let q = Series::rational(&n, &d, 6).unwrap();
        prop_assert_eq!(&q * &d, n);
    }

    #[test]
    fn exp_is_a_homomorphism(a in arb_tfree_no_const(6), b in arb_tfree_no_const(6)) {
        let lhs = (&a + &b).exp().unwrap();
        let rhs = &a.exp().unwrap() * &b.exp().unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn coefficients_stay_normalized(a in arb_tpoly(6), b in arb_tpoly(6)) {
        let p = &(&a * &b) + &a;
        for (_, c) in p.iter() {
            assert_normalized(c);
        }
        let e = expand_in_laguerre_basis(&p);
        for (_, c) in e.iter() {
            assert_normalized(c);
        }
    }

    #[test]
    fn laguerre_expansion_round_trips(p in arb_tpoly(10)) {
        let e = expand_in_laguerre_basis(&p);
        prop_assert_eq!(e.to_poly(), p);
    }

    #[test]
    fn phi_of_exponential_is_geometric(f in arb_tfree_no_const(8)) {
        // phi(e^{t f(x)}) = 1/(1 - f(x)) for t-free f.
        let tf = f.scale_t(&TPoly::t());
        let lhs = phi_series(&tf.exp().unwrap());
        let rhs = Series::rational(&Series::one(8), &(&Series::one(8) - &f), 8).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn linearization_matches_combinatorial_count(i in 0usize..=4, j in 0usize..=4) {
        let e = linearization_coefficients::<Rat>(i, j);
        let top = e.max_index().unwrap_or(0).max(i + j);
        for k in 0..=top {
            let count = count_carlitz_parts_factorizations(i, j, k);
            prop_assert_eq!(e.coeff(k), Rat::from(count));
        }
    }

    #[test]
    fn transform_produces_laguerre_carriers(blocks in prop::collection::vec(1usize..=3, 1..=2)) {
        let g = g_contain(&VincularPattern::new(blocks), 6);
        let s = transform(&g).unwrap();
        prop_assert!(s.is_laguerre_carrier());
    }

    #[test]
    fn restriction_preserves_length(fac in arb_factorization(1, 4)) {
        let left: Vec<Letter> = vec![1, 2];
        let right: Vec<Letter> = vec![3, 4];
        let a = restrict(&fac, &left);
        let b = restrict(&fac, &right);
        prop_assert_eq!(a.len() + b.len(), fac.len());
        // Restriction is idempotent.
        prop_assert_eq!(restrict(&a, &left), a.clone());
    }

    #[test]
    fn star_product_members_restrict_to_inputs(
        phi1 in arb_factorization(1, 2),
        phi2 in arb_factorization(3, 4),
    ) {
        let members = star_product(&[phi1.clone()], &[phi2.clone()]).unwrap();
        prop_assert!(!members.is_empty());
        for f in &members {
            prop_assert_eq!(restrict(f, &[1, 2]), phi1.clone());
            prop_assert_eq!(restrict(f, &[3, 4]), phi2.clone());
        }
        // Distinct interleavings stay distinct.
        let mut sorted = members.clone();
        sorted.sort();
        sorted.dedup();
        prop_assert_eq!(sorted.len(), members.len());
    }

    #[test]
    fn single_block_containment_is_a_run(w in arb_word(8, 3), m in 1usize..=4) {
        let has_run = (1..=3).any(|c| {
            w.0.windows(m).any(|win| win.iter().all(|&s| s == c))
        }) && w.len() >= m;
        prop_assert_eq!(contains_vincular(&w, &VincularPattern::single(m)), has_run);
    }

    #[test]
    fn cyclic_counts_bounded_by_straight(k in 1usize..=3, m in 2usize..=3, n in 0usize..=6) {
        let pat = VincularPattern::single(m);
        let cyclic = count_cyclic_avoiding_words(k, &pat, n, DEFAULT_BUDGET).unwrap();
        let straight = count_avoiding_words(k, &pat, n, DEFAULT_BUDGET).unwrap();
        prop_assert!(cyclic <= straight);
    }
}

#[test]
fn laguerre_generating_function_identity() {
    // sum_k l_k(t) x^k = exp(t x / (1 + x)) up to order 12.
    let order = 12;
    let one_plus_x = &Series::one(order) + &Series::x_pow(1, order);
    let x_over = Series::rational(&Series::x_pow(1, order), &one_plus_x, order).unwrap();
    let expo = x_over.scale_t(&TPoly::t()).exp().unwrap();
    for k in 0..=order {
        assert_eq!(expo.coeff(k), &laguerre_polynomial::<Rat>(k));
    }
}

#[test]
fn near_orthogonality_table() {
    // phi(l_i l_j) = 2[i=j] + [|i-j|=1] for i, j >= 1.
    for i in 1..=10usize {
        for j in 1..=10usize {
            let p = &laguerre_polynomial::<Rat>(i) * &laguerre_polynomial(j);
            let expect = if i == j {
                rat(2, 1)
            } else if i.abs_diff(j) == 1 {
                rat(1, 1)
            } else {
                rat(0, 1)
            };
            assert_eq!(phi(&p), expect, "phi(l_{i} l_{j})");
        }
    }
}

#[test]
fn delta_identity_table() {
    // phi(i * l_i l_j / t) = [i = j] for i, j >= 1.
    for i in 1..=10usize {
        for j in 1..=10usize {
            let q = laguerre_polynomial::<Rat>(i).div_t().unwrap();
            let p = (&q * &laguerre_polynomial(j)).scale(&rat(i as i64, 1));
            let expect = if i == j { rat(1, 1) } else { rat(0, 1) };
            assert_eq!(phi(&p), expect, "phi(i l_{i} l_{j} / t)");
        }
    }
}
