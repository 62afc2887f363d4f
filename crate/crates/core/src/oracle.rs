//! Brute-force ground truth.
//!
//! Everything here is deliberately a dumb exhaustive enumerator: words,
//! arrangements, compositions and factorizations are materialized and
//! checked one by one, so the formula side has an independent witness.
//! Budgets are explicit so the validation suites have predictable runtime.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::laguerre::laguerre_polynomial;
use crate::patterns::{MultisetSpec, VincularPattern};
use crate::{Count, Error, Series};

/// Default enumeration budget (number of candidate objects).
pub const DEFAULT_BUDGET: u64 = 10_000_000;

pub type Letter = u32;

/// A word: a finite sequence of letters.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The rotation moving the last letter to the front.
    pub fn rotate(&self) -> Word {
        let mut out = self.0.clone();
        if let Some(last) = out.pop() {
            out.insert(0, last);
        }
        Word(out)
    }
}

/// An ordered list of nonempty words, the "parts" or "factors".
/// The empty factorization has no parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Factorization(pub Vec<Word>);

impl Factorization {
    pub fn empty() -> Self {
        Factorization(Vec::new())
    }

    pub fn parts(&self) -> usize {
        self.0.len()
    }

    /// Total number of letters, counting multiplicity.
    pub fn len(&self) -> usize {
        self.0.iter().map(Word::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of the first factor, or 0 for the empty factorization.
    pub fn first_len(&self) -> usize {
        self.0.first().map_or(0, Word::len)
    }
}

/// Tries to place the pattern's blocks, in order, as runs of the letter `c`
/// starting at or after `from`.
fn place_blocks(letters: &[Letter], c: Letter, blocks: &[usize], from: usize) -> bool {
    let Some((&m, rest)) = blocks.split_first() else {
        return true;
    };
    for start in from..letters.len().saturating_sub(m - 1) {
        if letters[start..start + m].iter().all(|&s| s == c)
            && place_blocks(letters, c, rest, start + m)
        {
            return true;
        }
    }
    false
}

fn contains_with_letter_filter(
    letters: &[Letter],
    pattern: &VincularPattern,
    skip: Option<Letter>,
) -> bool {
    let mut candidates: Vec<Letter> = letters.to_vec();
    candidates.sort_unstable();
    candidates.dedup();
    candidates
        .iter()
        .filter(|&&c| Some(c) != skip)
        .any(|&c| place_blocks(letters, c, pattern.blocks(), 0))
}

/// True iff `w` contains the vincular pattern: there are increasing indices
/// carrying equal letters, consecutive inside each block and free at the
/// dashes.
pub fn contains_vincular(w: &Word, pattern: &VincularPattern) -> bool {
    contains_with_letter_filter(&w.0, pattern, None)
}

/// Pattern containment for factorizations: the word obtained by inserting a
/// single separator between adjacent factors contains the pattern without
/// using the separator.
pub fn factorization_contains(phi: &Factorization, pattern: &VincularPattern) -> bool {
    if phi.is_empty() {
        return false;
    }
    let sep: Letter = phi
        .0
        .iter()
        .flat_map(|p| p.0.iter())
        .max()
        .map_or(0, |&m| m + 1);
    let mut joined = Vec::with_capacity(phi.len() + phi.parts());
    for (i, part) in phi.0.iter().enumerate() {
        if i > 0 {
            joined.push(sep);
        }
        joined.extend_from_slice(&part.0);
    }
    contains_with_letter_filter(&joined, pattern, Some(sep))
}

/// True iff every rotation of `w` avoids the pattern.
pub fn cyclically_avoids(w: &Word, pattern: &VincularPattern) -> bool {
    let mut current = w.clone();
    for _ in 0..w.len().max(1) {
        if contains_vincular(&current, pattern) {
            return false;
        }
        current = current.rotate();
    }
    true
}

/// Restriction of a factorization to a letter subset: the maximal
/// subset-only subwords of the parts, in order.
pub fn restrict(phi: &Factorization, subset: &[Letter]) -> Factorization {
    let mut out = Vec::new();
    for part in &phi.0 {
        let mut current = Vec::new();
        for &s in &part.0 {
            if subset.contains(&s) {
                current.push(s);
            } else if !current.is_empty() {
                out.push(Word(std::mem::take(&mut current)));
            }
        }
        if !current.is_empty() {
            out.push(Word(current));
        }
    }
    Factorization(out)
}

fn check_budget(needed: u128, budget: u64) -> Result<(), Error> {
    if needed > budget as u128 {
        return Err(Error::BudgetExceeded {
            needed,
            budget: budget as u128,
        });
    }
    Ok(())
}

fn for_each_kary_word(
    k: usize,
    length: usize,
    budget: u64,
    mut f: impl FnMut(&Word),
) -> Result<(), Error> {
    check_budget((k as u128).pow(length as u32), budget)?;
    let mut letters = vec![1 as Letter; length];
    if length == 0 || k == 0 {
        if length == 0 {
            f(&Word(Vec::new()));
        }
        return Ok(());
    }
    loop {
        f(&Word(letters.clone()));
        // Odometer increment over {1..k}^length.
        let mut pos = length;
        loop {
            if pos == 0 {
                return Ok(());
            }
            pos -= 1;
            if letters[pos] < k as Letter {
                letters[pos] += 1;
                break;
            }
            letters[pos] = 1;
        }
        let _ = pos;
    }
}

/// Number of `k`-ary words of the given length avoiding the pattern, by
/// exhaustive scan.
pub fn count_avoiding_words(
    k: usize,
    pattern: &VincularPattern,
    length: usize,
    budget: u64,
) -> Result<Count, Error> {
    let mut count = Count::from(0u32);
    for_each_kary_word(k, length, budget, |w| {
        if !contains_vincular(w, pattern) {
            count += 1;
        }
    })?;
    Ok(count)
}

/// Number of `k`-ary words of the given length cyclically avoiding the
/// pattern.
pub fn count_cyclic_avoiding_words(
    k: usize,
    pattern: &VincularPattern,
    length: usize,
    budget: u64,
) -> Result<Count, Error> {
    let mut count = Count::from(0u32);
    for_each_kary_word(k, length, budget, |w| {
        if cyclically_avoids(w, pattern) {
            count += 1;
        }
    })?;
    Ok(count)
}

fn multinomial(counts: &[usize]) -> BigInt {
    let total: usize = counts.iter().sum();
    let mut out = crate::laguerre::factorial(total);
    for &c in counts {
        out /= crate::laguerre::factorial(c);
    }
    out
}

/// Counts distinct arrangements of the multiset satisfying the predicate.
pub fn count_arrangements(
    spec: &MultisetSpec,
    budget: u64,
    mut predicate: impl FnMut(&Word) -> bool,
) -> Result<Count, Error> {
    let counts: Vec<usize> = spec.entries().iter().map(|e| e.count).collect();
    let total_arrangements = multinomial(&counts);
    let needed = u128::try_from(&total_arrangements).map_err(|_| Error::BudgetExceeded {
        needed: u128::MAX,
        budget: budget as u128,
    })?;
    check_budget(needed, budget)?;

    let letters: Vec<Letter> = spec.entries().iter().map(|e| e.letter).collect();
    let total: usize = counts.iter().sum();
    let mut remaining = counts;
    let mut word = Vec::with_capacity(total);
    let mut count = Count::from(0u32);
    fn rec(
        letters: &[Letter],
        remaining: &mut [usize],
        word: &mut Vec<Letter>,
        total: usize,
        count: &mut Count,
        predicate: &mut impl FnMut(&Word) -> bool,
    ) {
        if word.len() == total {
            if predicate(&Word(word.clone())) {
                *count += 1;
            }
            return;
        }
        for i in 0..letters.len() {
            if remaining[i] > 0 {
                remaining[i] -= 1;
                word.push(letters[i]);
                rec(letters, remaining, word, total, count, predicate);
                word.pop();
                remaining[i] += 1;
            }
        }
    }
    rec(
        &letters,
        &mut remaining,
        &mut word,
        total,
        &mut count,
        &mut predicate,
    );
    Ok(count)
}

/// All compositions of `total` into positive parts.
pub fn compositions(total: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=total {
        for mut rest in compositions(total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn one_letter_factorization(parts: &[usize]) -> Factorization {
    Factorization(parts.iter().map(|&p| Word(vec![1; p])).collect())
}

/// Tallies one-letter factorizations up to `max_length` satisfying the
/// predicate, keyed by (total length, number of parts, first-part length).
///
/// Since the letter is fixed, factorizations are enumerated as compositions
/// of the length.
pub fn enumerate_one_letter_factorizations(
    max_length: usize,
    budget: u64,
    mut predicate: impl FnMut(&Factorization) -> bool,
) -> Result<BTreeMap<(usize, usize, usize), u64>, Error> {
    let needed: u128 = (0..=max_length as u32)
        .map(|l| 2u128.pow(l.saturating_sub(1)))
        .sum();
    check_budget(needed, budget)?;
    let mut table = BTreeMap::new();
    for length in 0..=max_length {
        for comp in compositions(length) {
            let phi = one_letter_factorization(&comp);
            if predicate(&phi) {
                *table
                    .entry((length, phi.parts(), phi.first_len()))
                    .or_insert(0u64) += 1;
            }
        }
    }
    Ok(table)
}

/// The Laguerre series of a finite factorization set with the
/// length-exponent weight: `sum_phi x^{len(phi)} l_{parts(phi)}(t)`.
pub fn laguerre_series_of_finite_set(set: &[Factorization], order: usize) -> Series {
    let mut out = Series::zero(order);
    for phi in set {
        if phi.len() > order {
            continue;
        }
        let term = Series::monomial(phi.len(), laguerre_polynomial(phi.parts()), order);
        out = &out + &term;
    }
    out
}

fn alphabet_of(set: &[Factorization]) -> Vec<Letter> {
    let mut letters: Vec<Letter> = set
        .iter()
        .flat_map(|phi| phi.0.iter().flat_map(|p| p.0.iter().copied()))
        .collect();
    letters.sort_unstable();
    letters.dedup();
    letters
}

/// Substitutes the parts of `phi1`/`phi2` for the a's/b's of a two-letter
/// skeleton factorization.
fn substitute_skeleton(
    skeleton: &[Vec<u8>],
    phi1: &Factorization,
    phi2: &Factorization,
) -> Factorization {
    let mut next1 = phi1.0.iter();
    let mut next2 = phi2.0.iter();
    let parts = skeleton
        .iter()
        .map(|sk_part| {
            let mut letters = Vec::new();
            for &sym in sk_part {
                let part = if sym == 0 {
                    next1.next().expect("skeleton a-count matches phi1")
                } else {
                    next2.next().expect("skeleton b-count matches phi2")
                };
                letters.extend_from_slice(&part.0);
            }
            Word(letters)
        })
        .collect();
    Factorization(parts)
}

/// All interleavings of two factorization sets on disjoint alphabets:
/// factorizations whose restriction to each alphabet recovers a member of
/// the respective set. Generated via Carlitz two-letter skeletons with part
/// substitution.
pub fn star_product(
    set_a: &[Factorization],
    set_b: &[Factorization],
) -> Result<Vec<Factorization>, Error> {
    let alpha_a = alphabet_of(set_a);
    let alpha_b = alphabet_of(set_b);
    if let Some(&letter) = alpha_a.iter().find(|l| alpha_b.contains(l)) {
        return Err(Error::AlphabetOverlap { letter });
    }
    let mut out = Vec::new();
    for phi1 in set_a {
        for phi2 in set_b {
            for skeleton in carlitz_skeletons(phi1.parts(), phi2.parts()) {
                out.push(substitute_skeleton(&skeleton, phi1, phi2));
            }
        }
    }
    Ok(out)
}

/// All factorizations of words with `i` a's (0) and `j` b's (1) whose every
/// part is Carlitz.
fn carlitz_skeletons(i: usize, j: usize) -> Vec<Vec<Vec<u8>>> {
    let mut words: Vec<Vec<u8>> = Vec::new();
    fn gen_words(a_left: usize, b_left: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if a_left == 0 && b_left == 0 {
            out.push(cur.clone());
            return;
        }
        if a_left > 0 {
            cur.push(0);
            gen_words(a_left - 1, b_left, cur, out);
            cur.pop();
        }
        if b_left > 0 {
            cur.push(1);
            gen_words(a_left, b_left - 1, cur, out);
            cur.pop();
        }
    }
    gen_words(i, j, &mut Vec::new(), &mut words);

    let mut out = Vec::new();
    for word in words {
        for comp in compositions(word.len()) {
            let mut parts: Vec<Vec<u8>> = Vec::with_capacity(comp.len());
            let mut offset = 0;
            for &size in &comp {
                parts.push(word[offset..offset + size].to_vec());
                offset += size;
            }
            if parts
                .iter()
                .all(|p| p.windows(2).all(|w| w[0] != w[1]))
            {
                out.push(parts);
            }
        }
    }
    out
}

/// Number of two-letter Carlitz-parts factorizations with `k` parts, `i`
/// of one letter and `j` of the other; the combinatorial definition of the
/// linearization coefficients.
pub fn count_carlitz_parts_factorizations(i: usize, j: usize, k: usize) -> Count {
    let mut count = Count::from(0u32);
    for skeleton in carlitz_skeletons(i, j) {
        if skeleton.len() == k {
            count += 1;
        }
    }
    count
}

impl From<&[usize]> for Factorization {
    fn from(parts: &[usize]) -> Self {
        one_letter_factorization(parts)
    }
}

/// True iff every run of a capped letter is strictly shorter than its cap.
pub fn respects_run_caps(w: &Word, spec: &MultisetSpec) -> bool {
    for entry in spec.entries() {
        let Some(cap) = entry.run_cap else {
            continue;
        };
        let mut run = 0usize;
        for &s in &w.0 {
            if s == entry.letter {
                run += 1;
                if run >= cap {
                    return false;
                }
            } else {
                run = 0;
            }
        }
    }
    true
}
