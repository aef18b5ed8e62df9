//! Off-line s-factorization over the run-level suffix array.
//!
//! Let the next factor start at character `ell`, inside run `r` with `q`
//! characters of that run remaining. Instead of searching for
//! `a^q runs[r+1..]` directly, the factorizer looks for the earlier suffix
//! `runs[s..]` (`s <= r`) that shares the longest prefix with `runs[r+1..]`
//! among those whose preceding run is `a^p` with `p >= q`. Such suffixes are
//! kept in one [`PstPairSet`] per character `a`, holding
//! `(rank[s], runs[s-1].exp)` for every `s` with `runs[s-1].ch == a`, and
//! the two candidates closest to `rank[r+1]` in the suffix array are the
//! only ones that need an lcp computation.

use std::collections::BTreeMap;

use crate::factor::{Factor, Factorization};
use crate::pst::PstPairSet;
use crate::rle::{rle_lcp_counted, RleString, RunCursor};
use crate::rle_sa::RleSuffixArray;

/// Counters for the amount of work done.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OfflineStats {
    /// Run pairs examined by all lcp computations.
    pub lcp_comparisons: usize,
    /// Pairs inserted into the per-character sets.
    pub pairs_inserted: usize,
}

/// Length of the next factor and, for references, a 1-based source.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NextFactor {
    pub len: usize,
    pub src: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OfflineError {
    #[error("position {ell} is outside the text")]
    OutOfRange { ell: usize },
    #[error("suffix sets hold runs up to {have}, query needs exactly {need}")]
    NotCaughtUp { have: usize, need: usize },
}

pub struct OfflineFactorizer<'a, T> {
    rle: &'a RleString<T>,
    sa: RleSuffixArray,
    by_char: BTreeMap<T, PstPairSet<usize, usize>>,
    /// Per character, the earlier run of maximum exponent.
    widest: BTreeMap<T, usize>,
    /// Suffixes `1..=inserted` have their pair inserted.
    inserted: usize,
    stats: OfflineStats,
}

impl<'a, T: Ord + Copy> OfflineFactorizer<'a, T> {
    pub fn new(rle: &'a RleString<T>) -> Self {
        OfflineFactorizer {
            rle,
            sa: RleSuffixArray::build(rle),
            by_char: BTreeMap::new(),
            widest: BTreeMap::new(),
            inserted: 0,
            stats: OfflineStats::default(),
        }
    }

    pub fn suffix_array(&self) -> &RleSuffixArray {
        &self.sa
    }

    pub fn stats(&self) -> OfflineStats {
        self.stats
    }

    /// The pair set of character `ch`, if any pair was inserted for it.
    pub fn pairs_for(&self, ch: T) -> Option<&PstPairSet<usize, usize>> {
        self.by_char.get(&ch)
    }

    /// Highest suffix index whose pair is present (0 when none).
    pub fn inserted_upto(&self) -> usize {
        self.inserted
    }

    /// Inserts the pairs of suffixes `inserted+1..=upto`. Suffix 0 has no
    /// preceding run and never gets a pair. Idempotent.
    pub fn catch_up_insert(&mut self, upto: usize) {
        let runs = self.rle.runs();
        let upto = upto.min(runs.len().saturating_sub(1));
        while self.inserted < upto {
            self.inserted += 1;
            let s = self.inserted;
            let prev = runs[s - 1];
            self.by_char.entry(prev.ch).or_default().insert(self.sa.rank()[s], prev.exp);
            let w = self.widest.entry(prev.ch).or_insert(s - 1);
            if runs[*w].exp < prev.exp {
                *w = s - 1;
            }
            self.stats.pairs_inserted += 1;
        }
    }

    /// Computes the factor starting at 1-based `ell`, given that exactly the
    /// suffixes `1..=r` are inserted, `r` being the run containing `ell`.
    pub fn next_factor(&mut self, ell: usize) -> Result<NextFactor, OfflineError> {
        let loc = self.rle.locate(ell).map_err(|_| OfflineError::OutOfRange { ell })?;
        self.factor_at(ell, loc.run, loc.q)
    }

    fn factor_at(&mut self, ell: usize, r: usize, q: usize) -> Result<NextFactor, OfflineError> {
        if self.inserted != r {
            return Err(OfflineError::NotCaughtUp { have: self.inserted, need: r });
        }
        let runs = self.rle.runs();
        let here = runs[r];
        let set = self.by_char.get(&here.ch);
        // Widest earlier run of this character; the set's global maximum.
        let k = set.and_then(|t| t.max_y()).map_or(0, |(_, y)| y);

        if q == here.exp && q > k {
            if k == 0 {
                return Ok(NextFactor { len: 1, src: None });
            }
            let w = self.widest[&here.ch];
            return Ok(NextFactor { len: k, src: Some(self.rle.run_start(w)) });
        }

        // Occurrences of a^q: inside the current run one step back, or the
        // tail of an earlier wide enough run.
        let mut best: Option<(usize, usize)> = None;
        if let (Some(t), true) = (set, r + 1 < runs.len()) {
            let n = runs.len();
            let rd = self.sa.rank()[r + 1];
            let left = (rd > 0).then(|| t.max_x_in_rectangle(0, rd - 1, q)).flatten();
            let right = (rd + 1 < n).then(|| t.min_x_in_rectangle(rd + 1, n - 1, q)).flatten();
            for (x, _) in [left, right].into_iter().flatten() {
                let s = self.sa.sa()[x];
                let (l, cmp) = rle_lcp_counted(&runs[s..], &runs[r + 1..]);
                self.stats.lcp_comparisons += cmp;
                if best.is_none_or(|(bl, _)| l > bl) {
                    best = Some((l, s));
                }
            }
        }
        let (extra, src) = match best {
            Some((l, s)) => (l, self.rle.run_start(s) - q),
            None if q < here.exp => (0, ell - 1),
            None => (0, self.rle.run_start(self.widest[&here.ch])),
        };
        Ok(NextFactor { len: q + extra, src: Some(src) })
    }

    /// Factorizes the whole string.
    pub fn run(&mut self) -> Factorization<T> {
        let runs = self.rle.runs();
        let mut cursor = RunCursor::new();
        let mut factors = Vec::new();
        let mut ell = 1;
        while let Some(loc) = cursor.seek(self.rle, ell) {
            self.catch_up_insert(loc.run);
            let next = self.factor_at(ell, loc.run, loc.q).expect("pairs are caught up to the current run");
            factors.push(match next.src {
                None => Factor::Literal(runs[loc.run].ch),
                Some(src) => Factor::Ref { src, len: next.len },
            });
            ell += next.len;
        }
        Factorization { factors }
    }
}

/// Off-line s-factorization of `rle`.
pub fn factorize_offline<T: Ord + Copy>(rle: &RleString<T>) -> Factorization<T> {
    OfflineFactorizer::new(rle).run()
}
