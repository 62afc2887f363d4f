//! Every closed-form generating function cross-checked against the
//! brute-force enumerators on exhaustive small grids.

use std::collections::BTreeMap;

use laguerre_words::laguerre::{expand_in_laguerre_basis, laguerre_polynomial};
use laguerre_words::oracle::{
    compositions, count_arrangements, count_avoiding_words, count_cyclic_avoiding_words,
    cyclically_avoids, enumerate_one_letter_factorizations, factorization_contains,
    respects_run_caps, Letter, Word, DEFAULT_BUDGET,
};
use laguerre_words::patterns::{
    carlitz_arrangements, cyclic_avoiders_gf, cyclic_carlitz_compositions_gf,
    cyclic_m_avoiders_weighted, cyclic_run_limited_arrangements, g_contain, h_series,
    m_carlitz_gf, run_limited_arrangements, smirnov_weight_sum, subword_avoid_count,
    vincular_avoiders_gf, MultisetSpec, VincularPattern,
};
use laguerre_words::{Count, Rat, Series, TPoly};
use num_traits::Zero;

fn int(c: &TPoly) -> Count {
    let r = c.coeff(0);
    assert!(c.is_constant(), "expected a t-free coefficient");
    assert!(r.is_integer(), "expected an integer, got {r}");
    r.to_integer()
}

fn ints(s: &Series) -> Vec<Count> {
    s.coeffs().iter().map(int).collect()
}

#[test]
fn vincular_avoiders_match_word_oracle() {
    let patterns: Vec<Vec<usize>> = vec![
        vec![2],
        vec![3],
        vec![4],
        vec![2, 2],
        vec![2, 3],
        vec![3, 2],
        vec![1, 2],
        vec![2, 1],
        vec![1, 1],
        vec![2, 2, 1],
    ];
    for blocks in patterns {
        let pat = VincularPattern::new(blocks);
        for k in 1..=3usize {
            let gf = ints(&vincular_avoiders_gf(k, &pat, 8));
            for (n, got) in gf.iter().enumerate() {
                let want = count_avoiding_words(k, &pat, n, DEFAULT_BUDGET).unwrap();
                assert_eq!(got, &want, "k={k} pattern={:?} n={n}", pat.blocks());
            }
        }
    }
}

#[test]
fn m_carlitz_matches_word_oracle() {
    for k in 1..=4usize {
        for m in 2..=4usize {
            let gf = ints(&m_carlitz_gf(k, m, 8));
            let pat = VincularPattern::single(m);
            for (n, got) in gf.iter().enumerate() {
                let want = count_avoiding_words(k, &pat, n, DEFAULT_BUDGET).unwrap();
                assert_eq!(got, &want, "k={k} m={m} n={n}");
            }
        }
    }
}

/// Collapses the (length, parts, first-part) oracle table to (length, parts).
fn by_length_and_parts(
    table: &BTreeMap<(usize, usize, usize), u64>,
) -> BTreeMap<(usize, usize), u64> {
    let mut out = BTreeMap::new();
    for (&(l, a, _), &c) in table {
        *out.entry((l, a)).or_insert(0) += c;
    }
    out
}

#[test]
fn g_contain_matches_factorization_oracle() {
    let max_len = 8;
    for blocks in [vec![2, 2], vec![2, 1], vec![3], vec![1, 2]] {
        let pat = VincularPattern::new(blocks);
        let table = enumerate_one_letter_factorizations(max_len, DEFAULT_BUDGET, |phi| {
            factorization_contains(phi, &pat)
        })
        .unwrap();
        let table = by_length_and_parts(&table);
        let g = g_contain(&pat, max_len);
        for l in 0..=max_len {
            for a in 0..=max_len {
                let got = int(g.term(a, 0).coeff(l));
                let want = Count::from(table.get(&(l, a)).copied().unwrap_or(0));
                assert_eq!(got, want, "pattern={:?} length={l} parts={a}", pat.blocks());
            }
        }
    }
}

#[test]
fn h_series_matches_factorization_oracle() {
    let max_len = 7;
    for (m, n) in [(2, 1), (2, 2), (3, 1), (2, 3), (3, 2)] {
        let pat = VincularPattern::uniform(m, n);
        let table = enumerate_one_letter_factorizations(max_len, DEFAULT_BUDGET, |phi| {
            !factorization_contains(phi, &pat)
        })
        .unwrap();
        let h = h_series(m, n, max_len);
        for l in 0..=max_len {
            for a in 0..=max_len {
                for b in 0..=max_len {
                    let got = int(h.term(a, b).coeff(l));
                    let want = Count::from(table.get(&(l, a, b)).copied().unwrap_or(0));
                    assert_eq!(got, want, "m={m} n={n} length={l} parts={a} first={b}");
                }
            }
        }
    }
}

/// Compositions of `total` whose adjacent parts differ.
fn count_carlitz_compositions(total: usize) -> Count {
    Count::from(
        compositions(total)
            .iter()
            .filter(|c| c.windows(2).all(|w| w[0] != w[1]))
            .count(),
    )
}

#[test]
fn smirnov_matches_carlitz_composition_oracle() {
    let order = 10;
    let subs: Vec<Series> = (1..=order).map(|i| Series::x_pow(i, order)).collect();
    let gf = ints(&smirnov_weight_sum(&subs, order).unwrap());
    for (n, got) in gf.iter().enumerate() {
        assert_eq!(got, &count_carlitz_compositions(n), "n={n}");
    }
}

#[test]
fn cyclic_avoiders_match_word_oracle() {
    for k in [2usize, 3] {
        for m in [2usize, 3] {
            for n in [2usize, 3] {
                let gf = ints(&cyclic_avoiders_gf(k, m, n, 10).unwrap());
                let pat = VincularPattern::uniform(m, n);
                for (len, got) in gf.iter().enumerate() {
                    let want = count_cyclic_avoiding_words(k, &pat, len, DEFAULT_BUDGET).unwrap();
                    assert_eq!(got, &want, "k={k} m={m} n={n} len={len}");
                }
            }
        }
    }
}

#[test]
fn weighted_cyclic_matches_single_block_gf() {
    let order = 10;
    for k in 1..=4usize {
        for m in 2..=4usize {
            let subs = vec![Series::x_pow(1, order); k];
            let weighted = cyclic_m_avoiders_weighted(m, &subs, order).unwrap();
            let total = &Series::one(order) + &weighted;
            let direct = cyclic_avoiders_gf(k, m, 1, order).unwrap();
            assert_eq!(ints(&total), ints(&direct), "k={k} m={m}");
        }
    }
}

#[test]
fn weighted_cyclic_specializes_to_carlitz_compositions() {
    let order = 12;
    let subs: Vec<Series> = (1..=order).map(|i| Series::x_pow(i, order)).collect();
    let weighted = cyclic_m_avoiders_weighted(2, &subs, order).unwrap();
    assert_eq!(ints(&weighted), ints(&cyclic_carlitz_compositions_gf(order)));
}

/// A composition counts as cyclically Carlitz when its part word avoids a
/// double letter in every rotation: every single-part composition
/// qualifies, longer ones need distinct adjacent parts including the
/// wrap-around pair.
fn count_cyclic_carlitz_compositions(total: usize) -> Count {
    Count::from(
        compositions(total)
            .iter()
            .filter(|c| !c.is_empty())
            .filter(|c| {
                let word = Word(c.iter().map(|&p| p as Letter).collect());
                c.len() == 1 || cyclically_avoids(&word, &VincularPattern::single(2))
            })
            .count(),
    )
}

#[test]
fn cyclic_carlitz_compositions_match_oracle() {
    let order = 12;
    let gf = ints(&cyclic_carlitz_compositions_gf(order));
    for (n, got) in gf.iter().enumerate() {
        assert_eq!(got, &count_cyclic_carlitz_compositions(n), "n={n}");
    }
}

/// All multiset count vectors with the given number of letters and total.
fn count_vectors(letters: usize, total: usize) -> Vec<Vec<usize>> {
    if letters == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 1..=total.saturating_sub(letters - 1) {
        for mut rest in count_vectors(letters - 1, total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[test]
fn run_limited_matches_arrangement_oracle() {
    for letters in 1..=3usize {
        for total in letters..=7 {
            for counts in count_vectors(letters, total) {
                for cap in 2..=3usize {
                    let spec = MultisetSpec::with_uniform_cap(&counts, cap);
                    let got = run_limited_arrangements(&spec);
                    let want = count_arrangements(&spec, DEFAULT_BUDGET, |w| {
                        respects_run_caps(w, &spec)
                    })
                    .unwrap();
                    assert_eq!(got, want, "counts={counts:?} cap={cap}");
                }
                let carlitz = carlitz_arrangements(&counts);
                let spec = MultisetSpec::from_counts(&counts);
                let pat = VincularPattern::single(2);
                let want = count_arrangements(&spec, DEFAULT_BUDGET, |w| {
                    !laguerre_words::oracle::contains_vincular(w, &pat)
                })
                .unwrap();
                assert_eq!(carlitz, want, "counts={counts:?} carlitz");
            }
        }
    }
}

#[test]
fn cyclic_run_limited_matches_rotation_oracle() {
    for letters in 1..=3usize {
        for total in letters..=9 {
            for counts in count_vectors(letters, total) {
                for m in 2..=3usize {
                    let got = cyclic_run_limited_arrangements(m, &counts).unwrap();
                    let spec = MultisetSpec::from_counts(&counts);
                    let pat = VincularPattern::single(m);
                    let want = count_arrangements(&spec, DEFAULT_BUDGET, |w| {
                        cyclically_avoids(w, &pat)
                    })
                    .unwrap();
                    assert_eq!(got, want, "counts={counts:?} m={m}");
                }
            }
        }
    }
}

#[test]
fn subword_avoidance_matches_brute_force() {
    // (counts, forbidden word) over letters numbered from 1.
    let cases: Vec<(Vec<usize>, Vec<Letter>)> = vec![
        (vec![2, 2], vec![1, 2]),
        (vec![3, 2], vec![1, 2, 1]),
        (vec![2, 1, 2], vec![1, 3]),
        (vec![3, 3], vec![1, 1, 2]),
        (vec![2, 2, 2], vec![2, 3]),
        (vec![4, 1], vec![1, 1]),
    ];
    for (counts, forbidden) in cases {
        let spec = MultisetSpec::from_counts(&counts);
        let forbidden = Word(forbidden);
        let got = subword_avoid_count(&spec, &forbidden).unwrap();

        // Every word using each letter at most its multiplicity, the empty
        // word included, with no contiguous occurrence of the forbidden
        // word.
        let mut want = Count::zero();
        let mut remaining = counts.clone();
        let mut current: Vec<Letter> = Vec::new();
        fn visit(
            remaining: &mut [usize],
            current: &mut Vec<Letter>,
            forbidden: &[Letter],
            acc: &mut Count,
        ) {
            if !current.ends_with(forbidden) {
                *acc += 1;
                for i in 0..remaining.len() {
                    if remaining[i] > 0 {
                        remaining[i] -= 1;
                        current.push(i as Letter + 1);
                        visit(remaining, current, forbidden, acc);
                        current.pop();
                        remaining[i] += 1;
                    }
                }
            }
        }
        visit(&mut remaining, &mut current, &forbidden.0, &mut want);
        assert_eq!(got, want, "counts={counts:?} forbidden={:?}", forbidden.0);
    }
}

#[test]
fn laguerre_product_counts_carlitz_parts_factorizations() {
    // The l_k coefficient of prod_i l_{r_i} counts factorizations of the
    // multiset's arrangements into k Carlitz parts.
    for letters in 1..=3usize {
        for total in letters..=7 {
            for counts in count_vectors(letters, total) {
                let product = counts
                    .iter()
                    .fold(TPoly::one(), |acc, &r| &acc * &laguerre_polynomial(r));
                let expansion = expand_in_laguerre_basis(&product);

                let mut tally: BTreeMap<usize, u64> = BTreeMap::new();
                let spec = MultisetSpec::from_counts(&counts);
                count_arrangements(&spec, DEFAULT_BUDGET, |w| {
                    for comp in compositions(w.len()) {
                        let mut offset = 0;
                        let carlitz_parts = comp.iter().all(|&size| {
                            let part = &w.0[offset..offset + size];
                            offset += size;
                            part.windows(2).all(|p| p[0] != p[1])
                        });
                        if carlitz_parts {
                            *tally.entry(comp.len()).or_insert(0) += 1;
                        }
                    }
                    false
                })
                .unwrap();

                for k in 0..=total {
                    let want = Rat::from(Count::from(tally.get(&k).copied().unwrap_or(0)));
                    assert_eq!(expansion.coeff(k), want, "counts={counts:?} k={k}");
                }
            }
        }
    }
}
