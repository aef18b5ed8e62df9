//! Suffix array of a run sequence over the run alphabet.
//!
//! Suffixes are compared run by run using the order on [`RlFactor`]
//! (character, then exponent). This is generally *not* the order of the
//! decoded suffixes: `a^3 b^5 ...` sorts before `a^4` here although the
//! decoded `aaab...` sorts after `aaaa`.
//!
//! Construction maps each run to its rank among the distinct runs and
//! suffix-sorts the resulting integer sequence by prefix doubling with
//! counting sorts, `O(n log n)` overall. A suffix that is a proper prefix of
//! another sorts first.

use std::cmp::Ordering;

use crate::error::RleError;
use crate::rle::{RlFactor, RleString};

/// `sa[i]` is the 0-based start run of the `i`-th smallest suffix and
/// `rank` is its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RleSuffixArray {
    sa: Vec<usize>,
    rank: Vec<usize>,
}

impl RleSuffixArray {
    pub fn build<T: Ord>(rle: &RleString<T>) -> Self {
        let alphabet = reduce_alphabet(rle.runs());
        let sa = prefix_doubling(&alphabet);
        let mut rank = vec![0; sa.len()];
        for (i, &s) in sa.iter().enumerate() {
            rank[s] = i;
        }
        RleSuffixArray { sa, rank }
    }

    pub fn sa(&self) -> &[usize] {
        &self.sa
    }

    pub fn rank(&self) -> &[usize] {
        &self.rank
    }

    pub fn len(&self) -> usize {
        self.sa.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sa.is_empty()
    }

    /// The suffix array with 1-based run indices, as usually printed.
    pub fn one_based(&self) -> Vec<usize> {
        self.sa.iter().map(|&s| s + 1).collect()
    }
}

/// Compares the run suffixes starting at runs `i` and `j` (0-based).
pub fn suffix_compare<T: Ord>(rle: &RleString<T>, i: usize, j: usize) -> Result<Ordering, RleError> {
    let runs = rle.runs();
    for idx in [i, j] {
        if idx >= runs.len() {
            return Err(RleError::RunOutOfRange { index: idx, len: runs.len() });
        }
    }
    Ok(runs[i..].cmp(&runs[j..]))
}

/// Replaces each run by its 1-based rank among the distinct runs.
fn reduce_alphabet<T: Ord>(runs: &[RlFactor<T>]) -> Vec<usize> {
    let mut distinct: Vec<&RlFactor<T>> = runs.iter().collect();
    distinct.sort_unstable();
    distinct.dedup();
    runs.iter().map(|f| distinct.binary_search(&f).expect("run is in its own alphabet") + 1).collect()
}

/// Stable counting sort of `items` by `key`, keys in `0..buckets`.
fn counting_sort(items: &[usize], out: &mut [usize], buckets: usize, key: impl Fn(usize) -> usize) {
    let mut count = vec![0usize; buckets + 1];
    for &i in items {
        count[key(i) + 1] += 1;
    }
    for b in 1..count.len() {
        count[b] += count[b - 1];
    }
    for &i in items {
        let k = key(i);
        out[count[k]] = i;
        count[k] += 1;
    }
}

/// Suffix array of `s`, whose symbols are in `1..=n` at most. Rank 0 stands
/// for "past the end", so shorter suffixes win ties.
fn prefix_doubling(s: &[usize]) -> Vec<usize> {
    let n = s.len();
    if n == 0 {
        return Vec::new();
    }
    let mut rank = s.to_vec();
    let mut sa: Vec<usize> = (0..n).collect();
    let mut tmp = vec![0; n];
    let mut buckets = rank.iter().copied().max().unwrap_or(0) + 1;
    let mut k = 1;
    loop {
        let second = |i: usize| if i + k < n { rank[i + k] } else { 0 };
        counting_sort(&sa, &mut tmp, buckets, second);
        counting_sort(&tmp, &mut sa, buckets, |i| rank[i]);

        tmp[sa[0]] = 1;
        for w in 1..n {
            let (a, b) = (sa[w - 1], sa[w]);
            let same = rank[a] == rank[b] && second(a) == second(b);
            tmp[b] = tmp[a] + usize::from(!same);
        }
        std::mem::swap(&mut rank, &mut tmp);
        if rank[sa[n - 1]] == n {
            return sa;
        }
        buckets = n + 1;
        k *= 2;
    }
}
