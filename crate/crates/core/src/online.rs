//! On-line s-factorization: runs are pushed one at a time and factor
//! lengths are emitted as soon as they are determined.
//!
//! A factor starting `q` characters before the end of run `r` (character
//! `a`) is resolved in one of two ways.
//!
//! * It starts run `r` (`q` is the whole run) and no earlier run of `a` is
//!   at least that wide: the factor is `a^k` for the widest earlier `a^k`,
//!   or a fresh literal when there is none. Only runs before `r` are
//!   consulted, so this never needs the DAWG.
//! * Otherwise `a^q` certainly occurs earlier, and the rest of the factor
//!   is found by matching the following runs in the DAWG, requiring every
//!   occurrence to be preceded by an `a`-run of width at least `q`.
//!
//! While matching the `i`-th run after `r`, the DAWG holds exactly the runs
//! before it. Occurrences found that way start strictly before the factor
//! but may overlap it.

use std::collections::BTreeMap;

use crate::dawg::{PrefixMatch, RleDawg};
use crate::error::RleError;
use crate::rle::{RlFactor, RleString, RunCursor};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OnlineError {
    #[error(transparent)]
    Run(#[from] RleError),
    #[error("factorizer already finished")]
    Finished,
}

#[derive(Clone, Debug)]
struct Pending<T> {
    /// Run containing the factor start.
    run: usize,
    matcher: PrefixMatch<T>,
}

#[derive(Clone, Debug)]
pub struct OnlineFactorizer<T> {
    rle: RleString<T>,
    dawg: RleDawg<T>,
    /// Widest run per character among `runs[..widest_upto]`.
    widest: BTreeMap<T, usize>,
    widest_upto: usize,
    cursor: RunCursor,
    /// 1-based start of the next factor.
    ell: usize,
    pending: Option<Pending<T>>,
    emitted: Vec<usize>,
    finished: bool,
}

impl<T: Ord + Copy> Default for OnlineFactorizer<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Ord + Copy> OnlineFactorizer<T> {
    pub fn new() -> Self {
        OnlineFactorizer {
            rle: RleString::new(),
            dawg: RleDawg::new(),
            widest: BTreeMap::new(),
            widest_upto: 0,
            cursor: RunCursor::new(),
            ell: 1,
            pending: None,
            emitted: Vec::new(),
            finished: false,
        }
    }

    /// Appends a run and returns the factor lengths it completed.
    pub fn push_run(&mut self, f: RlFactor<T>) -> Result<Vec<usize>, OnlineError> {
        if self.finished {
            return Err(OnlineError::Finished);
        }
        self.rle.push(f)?;
        Ok(self.advance())
    }

    /// Closes the input and returns the remaining factor lengths.
    pub fn finish(&mut self) -> Vec<usize> {
        if self.finished {
            return Vec::new();
        }
        self.finished = true;
        let mut out = Vec::new();
        if let Some(p) = self.pending.take() {
            // every remaining character was matched
            self.emit(p.matcher.matched(), &mut out);
        }
        debug_assert_eq!(self.ell, self.rle.text_len() + 1);
        out
    }

    /// All lengths emitted so far.
    pub fn emitted(&self) -> &[usize] {
        &self.emitted
    }

    pub fn runs(&self) -> &RleString<T> {
        &self.rle
    }

    /// The automaton as currently extended; it may trail the pushed runs.
    pub fn dawg(&self) -> &RleDawg<T> {
        &self.dawg
    }

    /// Extends the automaton over all pushed runs and hands it out.
    pub fn into_dawg(mut self) -> RleDawg<T> {
        let n = self.rle.len();
        self.extend_dawg_to(n);
        self.dawg
    }

    fn emit(&mut self, len: usize, out: &mut Vec<usize>) {
        debug_assert!(len >= 1);
        self.ell += len;
        self.emitted.push(len);
        out.push(len);
    }

    fn extend_dawg_to(&mut self, runs: usize) {
        debug_assert!(self.dawg.len() <= runs);
        while self.dawg.len() < runs {
            let f = self.rle.runs()[self.dawg.len()];
            self.dawg.extend(f);
        }
    }

    fn widen_to(&mut self, runs: usize) {
        while self.widest_upto < runs {
            let f = self.rle.runs()[self.widest_upto];
            let w = self.widest.entry(f.ch).or_insert(0);
            *w = (*w).max(f.exp);
            self.widest_upto += 1;
        }
    }

    fn advance(&mut self) -> Vec<usize> {
        let mut out = Vec::new();
        loop {
            if let Some(mut p) = self.pending.take() {
                let next = p.run + 1 + p.matcher.depth();
                if next >= self.rle.len() {
                    self.pending = Some(p);
                    break;
                }
                self.extend_dawg_to(next);
                let run = self.rle.runs()[next];
                match self.dawg.match_step(&mut p.matcher, run) {
                    None => self.pending = Some(p),
                    Some(len) => self.emit(len, &mut out),
                }
                continue;
            }

            let Some(loc) = self.cursor.seek(&self.rle, self.ell) else {
                break;
            };
            let here = self.rle.runs()[loc.run];
            self.widen_to(loc.run);
            let k = self.widest.get(&here.ch).copied().unwrap_or(0);
            if loc.q == here.exp && loc.q > k {
                self.emit(k.max(1), &mut out);
                continue;
            }
            self.extend_dawg_to(loc.run + 1);
            match self.dawg.start_match(RlFactor { ch: here.ch, exp: loc.q }) {
                Ok(matcher) => self.pending = Some(Pending { run: loc.run, matcher }),
                // unreachable in practice: a^q occurs inside run `r` itself
                Err(len) => self.emit(len.max(1), &mut out),
            }
        }
        out
    }
}

/// Factor lengths of `rle`, computed on-line.
pub fn factorize_online<T: Ord + Copy>(rle: &RleString<T>) -> Vec<usize> {
    let mut fz = OnlineFactorizer::new();
    for &f in rle.runs() {
        fz.push_run(f).expect("runs of a valid RleString alternate");
    }
    fz.finish();
    fz.emitted
}
