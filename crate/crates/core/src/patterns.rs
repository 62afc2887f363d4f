//! Counting formulas: Carlitz and run-limited arrangement counts,
//! m-Carlitz generating functions, vincular-pattern avoidance, cyclic
//! avoidance of uniform patterns, and the hybrid subword-avoidance method.
//!
//! Every generating function produced here is validated coefficient by
//! coefficient against the enumeration oracle in the test suites.

use crate::laguerre::{
    divide_by_t, divide_series_by_t, factorial, laguerre_polynomial, phi, phi_series, transform,
};
use crate::oracle::{compositions, Letter, Word};
use crate::ring::{Scalar, UVVar};
use crate::{Count, Error, Rat, Series, TPoly, UVPoly};

use num_bigint::BigInt;
use num_traits::One;

/// A vincular pattern of ones `1^{m_1} - 1^{m_2} - ... - 1^{m_n}`:
/// `n` runs of equal letters, consecutive inside each run, with arbitrary
/// gaps at the dashes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VincularPattern {
    blocks: Vec<usize>,
}

impl VincularPattern {
    /// Builds a pattern from its run lengths.
    ///
    /// # Panics
    /// If `blocks` is empty or contains a zero.
    pub fn new(blocks: Vec<usize>) -> Self {
        assert!(!blocks.is_empty(), "pattern needs at least one block");
        assert!(blocks.iter().all(|&m| m >= 1), "blocks must be positive");
        VincularPattern { blocks }
    }

    /// The single-block pattern `1^m`.
    pub fn single(m: usize) -> Self {
        Self::new(vec![m])
    }

    /// The uniform pattern `1^m - 1^m - ... - 1^m` with `n` blocks.
    pub fn uniform(m: usize, n: usize) -> Self {
        Self::new(vec![m; n])
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    /// Total number of ones in the pattern.
    pub fn total(&self) -> usize {
        self.blocks.iter().sum()
    }

    /// True iff all blocks are equal, as the cyclic operations require.
    pub fn is_uniform(&self) -> bool {
        self.blocks.windows(2).all(|w| w[0] == w[1])
    }
}

/// One letter of a multiset: its id, its multiplicity, and an optional
/// run cap (runs of the letter must be strictly shorter than the cap).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LetterSpec {
    pub letter: Letter,
    pub count: usize,
    pub run_cap: Option<usize>,
}

/// A multiset of letters with optional per-letter run caps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultisetSpec {
    entries: Vec<LetterSpec>,
}

impl MultisetSpec {
    /// # Panics
    /// If two entries share a letter id or a run cap is below 2.
    pub fn new(entries: Vec<LetterSpec>) -> Self {
        for (i, a) in entries.iter().enumerate() {
            assert!(
                entries[i + 1..].iter().all(|b| b.letter != a.letter),
                "letter ids must be distinct"
            );
            assert!(a.run_cap.map_or(true, |m| m >= 2), "run caps must be >= 2");
        }
        MultisetSpec { entries }
    }

    /// Multiplicities only, letters numbered from 1, no run caps.
    pub fn from_counts(counts: &[usize]) -> Self {
        Self::new(
            counts
                .iter()
                .enumerate()
                .map(|(i, &count)| LetterSpec {
                    letter: (i + 1) as Letter,
                    count,
                    run_cap: None,
                })
                .collect(),
        )
    }

    /// Multiplicities with a common run cap on every letter.
    pub fn with_uniform_cap(counts: &[usize], cap: usize) -> Self {
        Self::new(
            counts
                .iter()
                .enumerate()
                .map(|(i, &count)| LetterSpec {
                    letter: (i + 1) as Letter,
                    count,
                    run_cap: Some(cap),
                })
                .collect(),
        )
    }

    /// `(count, cap)` pairs, letters numbered from 1.
    pub fn with_caps(pairs: &[(usize, usize)]) -> Self {
        Self::new(
            pairs
                .iter()
                .enumerate()
                .map(|(i, &(count, cap))| LetterSpec {
                    letter: (i + 1) as Letter,
                    count,
                    run_cap: Some(cap),
                })
                .collect(),
        )
    }

    pub fn entries(&self) -> &[LetterSpec] {
        &self.entries
    }

    /// Total number of letters counting multiplicity.
    pub fn total(&self) -> usize {
        self.entries.iter().map(|e| e.count).sum()
    }
}

fn rat_to_count(r: Rat) -> Count {
    assert!(
        r.is_integer(),
        "internal invariant violated: formula produced non-integer count {r}"
    );
    r.to_integer()
}

/// `sum_{i=0}^{r} t^i/i!`, the Laguerre series of all factorizations of at
/// most `r` copies of one letter.
fn exp_partial(r: usize) -> TPoly {
    TPoly::from_coeffs((0..=r).map(|i| (i, Rat::new(BigInt::one(), factorial(i)))))
}

/// Coefficient of `x^n` in `exp(t (x - x^m)/(1 - x^m))`: the Laguerre
/// series of one-letter factorizations of length `n` with every part
/// shorter than `m`.
pub fn p_polynomial(m: usize, n: usize) -> TPoly {
    let numer = &Series::x_pow(1, n) - &Series::x_pow(m, n);
    let denom = &Series::one(n) - &Series::x_pow(m, n);
    let inner = Series::rational(&numer, &denom, n)
        .expect("denominator has unit constant term")
        .scale_t(&TPoly::t());
    inner
        .exp()
        .expect("inner series has zero constant term")
        .coeff(n)
        .clone()
}

/// Number of Carlitz arrangements of a multiset: letter `i` used exactly
/// `counts[i]` times, no two adjacent letters equal.
pub fn carlitz_arrangements(counts: &[usize]) -> Count {
    let product = counts.iter().fold(TPoly::one(), |acc, &n| {
        &acc * &laguerre_polynomial(n)
    });
    rat_to_count(phi(&product))
}

/// Number of arrangements of the multiset in which every run of letter `i`
/// is shorter than its cap. Letters without a cap are unconstrained.
pub fn run_limited_arrangements(spec: &MultisetSpec) -> Count {
    let product = spec.entries().iter().fold(TPoly::one(), |acc, e| {
        let factor = match e.run_cap {
            Some(m) => p_polynomial(m, e.count),
            None => TPoly::term(e.count, Rat::new(BigInt::one(), factorial(e.count))),
        };
        &acc * &factor
    });
    rat_to_count(phi(&product))
}

/// Total number of words over `maxima.len()` letters with letter `i` used
/// at most `maxima[i]` times, the empty word included.
pub fn bounded_multiplicity_count(maxima: &[usize]) -> Count {
    let product = maxima
        .iter()
        .fold(TPoly::one(), |acc, &r| &acc * &exp_partial(r));
    rat_to_count(phi(&product))
}

/// Generating function for `k`-ary `m`-Carlitz words by length:
/// `(1 - x^m) / (1 - kx + (k-1)x^m)`.
pub fn m_carlitz_gf(k: usize, m: usize, order: usize) -> Series {
    let numer = &Series::one(order) - &Series::x_pow(m, order);
    let kx = Series::x_pow(1, order).scale(&Rat::from_int(k as i64));
    let denom = &(&Series::one(order) - &kx)
        + &Series::x_pow(m, order).scale(&Rat::from_int(k as i64 - 1));
    Series::rational(&numer, &denom, order).expect("denominator has unit constant term")
}

/// Smirnov sum `1/(1 - sum_i s_i/(1+s_i))` after substituting the given
/// series for the letter markers: the weight of all Carlitz words.
pub fn smirnov_weight_sum(substitutions: &[Series], order: usize) -> Result<Series, Error> {
    let mut total = Series::zero(order);
    for s in substitutions {
        if !s.coeff(0).is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let s = s.truncate(order);
        total = &total + &Series::rational(&s, &(&Series::one(order) + &s), order)?;
    }
    (&Series::one(order) - &total).invert()
}

/// `1 - x` as a series.
fn one_minus_x(order: usize) -> Series {
    &Series::one(order) - &Series::x_pow(1, order)
}

/// `1 - x - u(x - x^m)` as a u-polynomial.
fn containment_denominator(m: usize, order: usize) -> UVPoly {
    let lin = &Series::x_pow(1, order) - &Series::x_pow(m, order);
    &UVPoly::from_series(one_minus_x(order)) - &UVPoly::monomial(1, 0, lin, order)
}

/// Generating function for one-letter factorizations CONTAINING the
/// pattern, `u` marking parts and `x` marking length.
///
/// Built from the minimal-containment recursion: a first factor completing
/// `1^{m_1}`, one multiplier per further block, and a free tail.
pub fn g_contain(pattern: &VincularPattern, order: usize) -> UVPoly {
    let n = order;
    let blocks = pattern.blocks();
    let m1 = blocks[0];
    let first_numer = UVPoly::monomial(1, 0, &Series::x_pow(m1, n) * &one_minus_x(n), n);
    let mut g = UVPoly::rational(&first_numer, &containment_denominator(m1, n), n)
        .expect("denominator has unit constant term");
    for &mi in &blocks[1..] {
        let bump_numer = UVPoly::monomial(
            1,
            0,
            &Series::x_pow(mi, n) * &(&Series::one(n) - &Series::x_pow(mi, n)),
            n,
        );
        let bump = UVPoly::rational(&bump_numer, &containment_denominator(mi, n), n)
            .expect("denominator has unit constant term");
        let factor = &UVPoly::from_series(Series::x_pow(mi, n)) + &bump;
        g = &g * &factor;
    }
    let tail_denom = &UVPoly::from_series(one_minus_x(n))
        - &UVPoly::monomial(1, 0, Series::x_pow(1, n), n);
    UVPoly::rational(&g, &tail_denom, n).expect("denominator has unit constant term")
}

/// Generating function for `k`-ary words avoiding the pattern, by length.
pub fn vincular_avoiders_gf(k: usize, pattern: &VincularPattern, order: usize) -> Series {
    let e_tx = Series::monomial(1, TPoly::t(), order)
        .exp()
        .expect("tx has zero constant term");
    let contained = transform(&g_contain(pattern, order)).expect("g_contain is v-free");
    let avoiding = &e_tx - &contained;
    phi_series(&avoiding.pow(k))
}

fn g_uniform(m: usize, blocks: usize, order: usize) -> UVPoly {
    g_contain(&VincularPattern::uniform(m, blocks), order)
}

/// Generating function `H` of one-letter factorizations avoiding the
/// uniform pattern with `n` blocks of length `m`: `u` marks parts, `v` the
/// length of the first factor, `x` the total length.
///
/// Assembled additively: all factorizations minus the containing ones,
/// split by how much of the pattern sits inside the first factor. Every
/// denominator in this decomposition has a unit constant term.
pub fn h_series(m: usize, n: usize, order: usize) -> UVPoly {
    let nn = order;
    let one = UVPoly::one(nn);
    let vx = |p: usize| UVPoly::monomial(0, p, Series::x_pow(p, nn), nn);
    let inv_one_minus_vx = (&one - &vx(1)).invert().expect("unit constant term");
    let u1 = UVPoly::monomial(1, 0, Series::one(nn), nn);
    let one_minus_x_uv = UVPoly::from_series(one_minus_x(nn));
    let den_ux = &one_minus_x_uv - &UVPoly::monomial(1, 0, Series::x_pow(1, nn), nn);
    // (1-x)/(1-x-ux): factorizations appended after the first factor.
    let tail = &one_minus_x_uv * &den_ux.invert().expect("unit constant term");

    // All one-letter factorizations: 1 + u vx/(1-vx) * tail.
    let mut h = &one + &(&(&(&u1 * &vx(1)) * &inv_one_minus_vx) * &tail);

    // First factor avoids 1^m, remainder contains the full pattern.
    let a0 = &(&u1 * &(&(&vx(1) - &vx(m)) * &inv_one_minus_vx)) * &g_uniform(m, n, nn);
    h = &h - &a0;

    // First factor contains exactly i blocks, remainder contains n-i.
    for i in 1..n {
        let prefix = &(&vx(i * m) * &(&one - &vx(m))) * &inv_one_minus_vx;
        let ai = &(&u1 * &prefix) * &g_uniform(m, n - i, nn);
        h = &h - &ai;
    }

    // First factor already contains the whole pattern, remainder free.
    let an = &(&u1 * &(&vx(n * m) * &inv_one_minus_vx)) * &tail;
    &h - &an
}

/// Generating function for `k`-ary words cyclically avoiding the uniform
/// pattern with `n` blocks of length `m`.
pub fn cyclic_avoiders_gf(k: usize, m: usize, n: usize, order: usize) -> Result<Series, Error> {
    assert!(k >= 1 && m >= 1 && n >= 1);
    let h = h_series(m, n, order);
    let u1 = UVPoly::monomial(1, 0, Series::one(order), order);
    let derived = &u1 * &h.derivative(UVVar::U).derivative(UVVar::V).substitute_v_one();
    let transformed = transform(&derived)?;
    // The u-derivative kills the u^0 term, so division by t must succeed;
    // a failure here is an internal inconsistency.
    let f = divide_series_by_t(&transformed)?;
    let h1 = transform(&h.substitute_v_one())?;
    let bracket = &h1.pow(k - 1) - &Series::one(order);
    let middle = phi_series(&(&f * &bracket));
    let tail_numer = &Series::x_pow(1, order) - &Series::x_pow(m * n, order);
    let tail = Series::rational(&tail_numer, &one_minus_x(order), order)?;
    let k_r = Rat::from_int(k as i64);
    Ok(&(&Series::one(order) + &middle.scale(&k_r)) + &tail.scale(&k_r))
}

/// Weight of all nonempty words cyclically avoiding `1^m`, with the given
/// series substituted for the letter markers.
pub fn cyclic_m_avoiders_weighted(
    m: usize,
    substitutions: &[Series],
    order: usize,
) -> Result<Series, Error> {
    assert!(m >= 2);
    let one = Series::one(order);
    let mc = Rat::from_int(m as i64);
    let mut direct = Series::zero(order);
    let mut coupled_numer = Series::zero(order);
    let mut coupled_denom_sum = Series::zero(order);
    for s in substitutions {
        if !s.coeff(0).is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let s = s.truncate(order);
        let s_m = s.pow(m);
        let s_m1 = &s_m * &s;
        let s_2m = &s_m * &s_m;
        // (s^{2m} - m s^{m+1} + (m-1) s^m) / ((s^m - 1)(s - 1))
        let numer = &(&s_2m - &s_m1.scale(&mc)) + &s_m.scale(&(mc.clone() - Rat::from_int(1)));
        let denom = &(&s_m - &one) * &(&s - &one);
        direct = &direct + &Series::rational(&numer, &denom, order)?;
        // ((m-1) s^{m+1} - m s^m + s) / (s^m - 1)^2
        let numer2 = &(&s_m1.scale(&(mc.clone() - Rat::from_int(1))) - &s_m.scale(&mc)) + &s;
        let denom2 = &(&s_m - &one) * &(&s_m - &one);
        coupled_numer = &coupled_numer + &Series::rational(&numer2, &denom2, order)?;
        // (s^m - s) / (s^m - 1)
        coupled_denom_sum =
            &coupled_denom_sum + &Series::rational(&(&s_m - &s), &(&s_m - &one), order)?;
    }
    let coupled = &coupled_numer * &(&one - &coupled_denom_sum).invert()?;
    Ok(&direct + &coupled)
}

/// Generating function for cyclic Carlitz compositions by sum:
/// `sum_i x^i/(1+x^i)^2 / (1 - sum_i x^i/(1+x^i)) + sum_i x^{2i}/(1+x^i)`.
/// Only part sizes up to the order contribute.
pub fn cyclic_carlitz_compositions_gf(order: usize) -> Series {
    let one = Series::one(order);
    let mut numer = Series::zero(order);
    let mut denom_sum = Series::zero(order);
    let mut extra = Series::zero(order);
    for i in 1..=order {
        let xi = Series::x_pow(i, order);
        let base = &one + &xi;
        let base_sq = &base * &base;
        numer = &numer + &Series::rational(&xi, &base_sq, order).expect("unit constant term");
        denom_sum = &denom_sum + &Series::rational(&xi, &base, order).expect("unit constant term");
        if 2 * i <= order {
            extra = &extra
                + &Series::rational(&Series::x_pow(2 * i, order), &base, order)
                    .expect("unit constant term");
        }
    }
    let coupled = &numer * &(&one - &denom_sum).invert().expect("unit constant term");
    &coupled + &extra
}

/// Number of arrangements using letter `i` exactly `counts[i]` times whose
/// every rotation has all runs shorter than `m`.
///
/// All multiplicities must be positive; a zero multiplicity would leave a
/// `t`-constant in the product and is rejected.
pub fn cyclic_run_limited_arrangements(m: usize, counts: &[usize]) -> Result<Count, Error> {
    if counts.iter().any(|&n| n == 0) {
        return Err(Error::NonzeroConstant);
    }
    // A single letter sits outside the product formula: the only
    // arrangement is one run of the full multiplicity.
    if let [n] = counts {
        return Ok(Count::from(u8::from(*n < m)));
    }
    let product = counts
        .iter()
        .fold(TPoly::one(), |acc, &n| &acc * &p_polynomial(m, n));
    let quotient = divide_by_t(&product)?;
    let total = Rat::from_int(counts.iter().sum::<usize>() as i64);
    Ok(rat_to_count(phi(&quotient) * total))
}

/// The brute-forced Laguerre series of factorizations over the forbidden
/// word's letters (bounded by the available multiplicities) with no part
/// containing the forbidden word as a contiguous subword.
pub fn subword_avoid_focus_series(
    available: &MultisetSpec,
    forbidden: &Word,
) -> Result<TPoly, Error> {
    let mut focus: Vec<Letter> = forbidden.0.clone();
    focus.sort_unstable();
    focus.dedup();
    let mut caps = Vec::with_capacity(focus.len());
    for &c in &focus {
        let entry = available
            .entries()
            .iter()
            .find(|e| e.letter == c && e.count > 0)
            .ok_or(Error::LetterMissing { letter: c })?;
        caps.push(entry.count);
    }

    let mut series = TPoly::zero();
    let mut letters: Vec<Letter> = Vec::new();
    collect_bounded_words(&focus, &mut caps.clone(), &mut letters, &mut |word| {
        for comp in compositions(word.len()) {
            let mut offset = 0;
            let ok = comp.iter().all(|&size| {
                let part = &word[offset..offset + size];
                offset += size;
                !part
                    .windows(forbidden.0.len())
                    .any(|w| w == forbidden.0.as_slice())
            });
            if ok {
                series = &series + &laguerre_polynomial(comp.len());
            }
        }
    });
    Ok(series)
}

fn collect_bounded_words(
    letters: &[Letter],
    remaining: &mut [usize],
    current: &mut Vec<Letter>,
    visit: &mut impl FnMut(&[Letter]),
) {
    visit(current);
    for i in 0..letters.len() {
        if remaining[i] > 0 {
            remaining[i] -= 1;
            current.push(letters[i]);
            collect_bounded_words(letters, remaining, current, visit);
            current.pop();
            remaining[i] += 1;
        }
    }
}

/// Number of words formable from the available multiset (each letter used
/// at most its multiplicity, the empty word included) containing no
/// occurrence of `forbidden` as a contiguous subword.
pub fn subword_avoid_count(available: &MultisetSpec, forbidden: &Word) -> Result<Count, Error> {
    let focus_series = subword_avoid_focus_series(available, forbidden)?;
    let mut focus: Vec<Letter> = forbidden.0.clone();
    focus.sort_unstable();
    focus.dedup();
    let rest = available
        .entries()
        .iter()
        .filter(|e| !focus.contains(&e.letter))
        .fold(TPoly::one(), |acc, e| &acc * &exp_partial(e.count));
    Ok(rat_to_count(phi(&(&focus_series * &rest))))
}
