//! Brute-force reference implementations.
//!
//! Everything here works straight from the definitions, on decoded strings
//! or by exhaustive enumeration, and shares no code with the factorizers,
//! the suffix array, the DAWG or the PST. Slow on purpose.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::RleError;
use crate::factor::{Factor, Factorization};
use crate::rle::{RlFactor, RleString};

/// Greedy s-factorization by comparing every earlier start position
/// character by character. References point at the leftmost longest
/// earlier occurrence.
pub fn naive_s_factorize<T: Copy + Eq>(text: &[T]) -> Factorization<T> {
    let mut factors = Vec::new();
    let mut i = 0;
    while i < text.len() {
        let mut best = 0;
        let mut src = 0;
        for j in 0..i {
            let l = text[j..].iter().zip(&text[i..]).take_while(|(a, b)| a == b).count();
            if l > best {
                best = l;
                src = j;
            }
        }
        if best == 0 {
            factors.push(Factor::Literal(text[i]));
            i += 1;
        } else {
            factors.push(Factor::Ref { src: src + 1, len: best });
            i += best;
        }
    }
    Factorization { factors }
}

/// Second, independent rendering of the same definition: the factor at `i`
/// is the longest `w = text[i..i+len]` that occurs at least twice inside
/// `text[..i+len]`. Cubic; for cross-checking [`naive_s_factorize`].
pub fn naive_s_factor_lengths_by_search<T: Copy + Eq>(text: &[T]) -> Vec<usize> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < text.len() {
        let mut len = 1;
        while i + len < text.len() {
            let next = len + 1;
            let w = &text[i..i + next];
            let hay = &text[..i + next];
            let count = hay.windows(next).filter(|win| *win == w).count();
            if count >= 2 {
                len = next;
            } else {
                break;
            }
        }
        // A length-1 factor is a literal or a reference; either way it has length 1.
        out.push(len);
        i += len;
    }
    out
}

/// Length of the longest prefix of `pattern` that is a substring of `text`.
pub fn naive_longest_prefix_in<T: Eq>(text: &[T], pattern: &[T]) -> usize {
    let mut best = 0;
    for start in 0..text.len() {
        let l = text[start..].iter().zip(pattern).take_while(|(a, b)| a == b).count();
        best = best.max(l);
    }
    best
}

/// Comparison-sort suffix array of the run sequence (0-based run indices),
/// with the standard slice order: shorter suffix first on a prefix tie.
pub fn naive_rle_suffix_array<T: Ord>(rle: &RleString<T>) -> Vec<usize> {
    let runs = rle.runs();
    let mut sa: Vec<usize> = (0..runs.len()).collect();
    sa.sort_by(|&i, &j| runs[i..].cmp(&runs[j..]));
    sa
}

/// All distinct run-level substrings (including the empty one) of `runs`.
pub fn run_substrings<T: Ord + Copy>(runs: &[RlFactor<T>]) -> BTreeSet<Vec<RlFactor<T>>> {
    let mut out = BTreeSet::new();
    out.insert(Vec::new());
    for i in 0..runs.len() {
        for j in i..runs.len() {
            out.insert(runs[i..=j].to_vec());
        }
    }
    out
}

/// End positions (1-based run indices) of the occurrences of `u` in `runs`;
/// the empty sequence ends everywhere in `0..=n`.
pub fn end_positions<T: Eq>(runs: &[RlFactor<T>], u: &[RlFactor<T>]) -> BTreeSet<usize> {
    if u.is_empty() {
        return (0..=runs.len()).collect();
    }
    if u.len() > runs.len() {
        return BTreeSet::new();
    }
    runs.windows(u.len()).enumerate().filter(|(_, w)| *w == u).map(|(i, _)| i + u.len()).collect()
}

/// One class of run substrings sharing the same end-position set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndPosClass<T> {
    pub end_positions: BTreeSet<usize>,
    /// Members, shortest first.
    pub members: Vec<Vec<RlFactor<T>>>,
}

impl<T> EndPosClass<T> {
    pub fn longest(&self) -> &[RlFactor<T>] {
        self.members.last().expect("classes are never empty")
    }
}

pub const ENDPOS_RUN_LIMIT: usize = 16;

/// Groups every run substring by its end-position set.
pub fn naive_endpos_classes<T: Ord + Copy>(rle: &RleString<T>) -> Result<Vec<EndPosClass<T>>, RleError> {
    let runs = rle.runs();
    if runs.len() > ENDPOS_RUN_LIMIT {
        return Err(RleError::TooLarge { runs: runs.len(), limit: ENDPOS_RUN_LIMIT });
    }
    let mut groups: BTreeMap<BTreeSet<usize>, Vec<Vec<RlFactor<T>>>> = BTreeMap::new();
    for u in run_substrings(runs) {
        groups.entry(end_positions(runs, &u)).or_default().push(u);
    }
    Ok(groups
        .into_iter()
        .map(|(end_positions, mut members)| {
            members.sort_by_key(Vec::len);
            EndPosClass { end_positions, members }
        })
        .collect())
}

/// Largest `p` such that the run `ch^p` immediately followed by the runs of
/// `body` occurs in `runs`; 0 if none.
pub fn naive_preceding_exponent<T: Eq + Copy>(runs: &[RlFactor<T>], body: &[RlFactor<T>], ch: T) -> usize {
    let mut best = 0;
    for start in 1..runs.len() {
        if runs[start..].starts_with(body) && runs[start - 1].ch == ch {
            best = best.max(runs[start - 1].exp);
        }
    }
    best
}

/// Linear-scan mirror of [`crate::pst::PstPairSet`].
#[derive(Clone, Debug)]
pub struct PstReference<X, Y> {
    pairs: Vec<(X, Y)>,
}

impl<X, Y> Default for PstReference<X, Y> {
    fn default() -> Self {
        PstReference { pairs: Vec::new() }
    }
}

impl<X: Ord + Copy, Y: Ord + Copy> PstReference<X, Y> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(X, Y)] {
        &self.pairs
    }

    pub fn contains_x(&self, x: X) -> bool {
        self.pairs.iter().any(|p| p.0 == x)
    }

    pub fn insert(&mut self, x: X, y: Y) {
        assert!(!self.contains_x(x));
        self.pairs.push((x, y));
    }

    pub fn delete(&mut self, x: X, y: Y) {
        let at = self.pairs.iter().position(|&p| p == (x, y)).expect("pair not present");
        self.pairs.swap_remove(at);
    }

    pub fn sorted(&self) -> Vec<(X, Y)> {
        let mut v = self.pairs.clone();
        v.sort();
        v
    }

    pub fn min_x_in_rectangle(&self, lo: X, hi: X, min_y: Y) -> Option<(X, Y)> {
        self.pairs.iter().filter(|p| lo <= p.0 && p.0 <= hi && p.1 >= min_y).min_by_key(|p| p.0).copied()
    }

    pub fn max_x_in_rectangle(&self, lo: X, hi: X, min_y: Y) -> Option<(X, Y)> {
        self.pairs.iter().filter(|p| lo <= p.0 && p.0 <= hi && p.1 >= min_y).max_by_key(|p| p.0).copied()
    }

    pub fn max_y_in_range(&self, lo: X, hi: X) -> Option<(X, Y)> {
        let mut best: Option<(X, Y)> = None;
        for &p in self.pairs.iter().filter(|p| lo <= p.0 && p.0 <= hi) {
            best = match best {
                Some(b) if b.1 > p.1 || (b.1 == p.1 && b.0 < p.0) => Some(b),
                _ => Some(p),
            };
        }
        best
    }
}
