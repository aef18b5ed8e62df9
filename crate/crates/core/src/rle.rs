//! Run-length encoding of symbol sequences.
//!
//! A string is stored as its sequence of maximal runs `a^p`. Character
//! positions are 1-based throughout the public API, run indices are 0-based
//! slice indices.

use std::cmp::Ordering;
use std::fmt;

use crate::error::RleError;

/// One run: `exp` consecutive copies of `ch`.
///
/// The derived ordering compares `ch` first and `exp` second, which is the
/// order on the run alphabet used by the run-level suffix array and DAWG.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RlFactor<T = u8> {
    pub ch: T,
    pub exp: usize,
}

impl<T> RlFactor<T> {
    /// # Panics
    ///
    /// Panics if `exp` is zero.
    pub fn new(ch: T, exp: usize) -> Self {
        assert!(exp >= 1, "run exponent must be positive");
        RlFactor { ch, exp }
    }
}

impl fmt::Display for RlFactor<u8> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ch.is_ascii_graphic() {
            write!(f, "{}^{}", self.ch as char, self.exp)
        } else {
            write!(f, "\\x{:02x}^{}", self.ch, self.exp)
        }
    }
}

/// Total order on runs: character first, then exponent.
pub fn factor_compare<T: Ord>(f: &RlFactor<T>, g: &RlFactor<T>) -> Ordering {
    f.cmp(g)
}

/// Where a character position falls inside the run sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Located {
    /// 0-based index of the run containing the position.
    pub run: usize,
    /// Number of characters from the position to the end of its run,
    /// inclusive. Always `1 <= q <= runs[run].exp`.
    pub q: usize,
}

/// A string held as its run-length encoding.
///
/// Adjacent runs always carry distinct characters and every exponent is
/// positive; `cum[i]` is the decoded length of `runs[..=i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RleString<T = u8> {
    runs: Vec<RlFactor<T>>,
    cum: Vec<usize>,
}

impl<T> Default for RleString<T> {
    fn default() -> Self {
        RleString { runs: Vec::new(), cum: Vec::new() }
    }
}

impl<T: Copy + Eq> RleString<T> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Single left-to-right scan; maximal runs.
    pub fn encode(text: &[T]) -> Self {
        let mut out = RleString::new();
        let mut iter = text.iter().copied();
        let Some(mut ch) = iter.next() else {
            return out;
        };
        let mut exp = 1;
        for c in iter {
            if c == ch {
                exp += 1;
            } else {
                out.push_unchecked(RlFactor { ch, exp });
                ch = c;
                exp = 1;
            }
        }
        out.push_unchecked(RlFactor { ch, exp });
        out
    }

    /// Builds from explicit runs, rejecting zero exponents and equal
    /// neighbouring characters.
    pub fn from_runs(runs: Vec<RlFactor<T>>) -> Result<Self, RleError> {
        let mut out = RleString { runs: Vec::with_capacity(runs.len()), cum: Vec::with_capacity(runs.len()) };
        for f in runs {
            out.push(f)?;
        }
        Ok(out)
    }

    /// Appends one run.
    pub fn push(&mut self, f: RlFactor<T>) -> Result<(), RleError> {
        if f.exp == 0 {
            return Err(RleError::ZeroExponent { index: self.runs.len() });
        }
        if self.runs.last().is_some_and(|last| last.ch == f.ch) {
            return Err(RleError::AdjacentEqual { index: self.runs.len() });
        }
        self.push_unchecked(f);
        Ok(())
    }

    fn push_unchecked(&mut self, f: RlFactor<T>) {
        let total = self.text_len() + f.exp;
        self.runs.push(f);
        self.cum.push(total);
    }

    pub fn decode(&self) -> Vec<T> {
        let mut out = Vec::with_capacity(self.text_len());
        for f in &self.runs {
            out.extend(std::iter::repeat_n(f.ch, f.exp));
        }
        out
    }
}

impl<T> RleString<T> {
    pub fn runs(&self) -> &[RlFactor<T>] {
        &self.runs
    }

    pub fn cum(&self) -> &[usize] {
        &self.cum
    }

    /// Number of runs, `n`.
    pub fn len(&self) -> usize {
        self.runs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// Decoded length, `N`.
    pub fn text_len(&self) -> usize {
        self.cum.last().copied().unwrap_or(0)
    }

    /// 1-based character position of the first character of run `run`.
    pub fn run_start(&self, run: usize) -> usize {
        if run == 0 {
            1
        } else {
            self.cum[run - 1] + 1
        }
    }

    /// Binary search for the run containing 1-based position `ell`.
    pub fn locate(&self, ell: usize) -> Result<Located, RleError> {
        if ell == 0 || ell > self.text_len() {
            return Err(RleError::PositionOutOfRange { pos: ell, len: self.text_len() });
        }
        let run = self.cum.partition_point(|&c| c < ell);
        Ok(Located { run, q: self.cum[run] - ell + 1 })
    }

    /// Number of distinct characters.
    pub fn distinct_chars(&self) -> usize
    where
        T: Ord,
    {
        let mut chars: Vec<&T> = self.runs.iter().map(|f| &f.ch).collect();
        chars.sort_unstable();
        chars.dedup();
        chars.len()
    }
}

/// Amortized O(1) replacement for [`RleString::locate`] when queried
/// positions never decrease.
///
/// The cursor holds only a run index, so the string may keep growing
/// between calls.
#[derive(Clone, Copy, Debug, Default)]
pub struct RunCursor {
    run: usize,
}

impl RunCursor {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns `None` when `ell` lies beyond the runs present so far.
    ///
    /// # Panics
    ///
    /// Panics (debug builds) if `ell` is smaller than a previously sought
    /// position or zero.
    pub fn seek<T>(&mut self, rle: &RleString<T>, ell: usize) -> Option<Located> {
        debug_assert!(ell >= 1);
        debug_assert!(self.run == 0 || rle.cum[self.run - 1] < ell, "cursor moved backwards");
        let cum = rle.cum();
        while self.run < cum.len() && cum[self.run] < ell {
            self.run += 1;
        }
        if self.run == cum.len() {
            return None;
        }
        Some(Located { run: self.run, q: cum[self.run] - ell + 1 })
    }
}

/// Length in characters of the longest common prefix of the decoded run
/// sequences `x` and `y`.
pub fn rle_lcp<T: Eq>(x: &[RlFactor<T>], y: &[RlFactor<T>]) -> usize {
    rle_lcp_counted(x, y).0
}

/// [`rle_lcp`] that also reports how many run pairs were examined.
pub fn rle_lcp_counted<T: Eq>(x: &[RlFactor<T>], y: &[RlFactor<T>]) -> (usize, usize) {
    let mut len = 0;
    let mut compared = 0;
    for (f, g) in x.iter().zip(y) {
        compared += 1;
        if f == g {
            len += f.exp;
            continue;
        }
        if f.ch == g.ch {
            len += f.exp.min(g.exp);
        }
        break;
    }
    (len, compared)
}

impl RleString<u8> {
    /// Text form: one run per line, `<byte>\t<exp>\n`.
    pub fn to_text(&self) -> String {
        use std::fmt::Write;
        let mut s = String::with_capacity(self.len() * 8);
        for f in &self.runs {
            let _ = writeln!(s, "{}\t{}", f.ch, f.exp);
        }
        s
    }

    /// Parses the output of [`RleString::to_text`]. Blank lines are ignored.
    pub fn parse_text(input: &str) -> Result<Self, RleError> {
        let mut out = RleString::new();
        for (i, line) in input.lines().enumerate() {
            let line = line.trim_end_matches('\r');
            if line.is_empty() {
                continue;
            }
            let bad = |msg: &str| RleError::Parse { line: i + 1, msg: msg.to_string() };
            let (ch, exp) = line.split_once('\t').ok_or_else(|| bad("expected <byte>\\t<exponent>"))?;
            let ch: u8 = ch.parse().map_err(|_| bad("byte value must be 0..=255"))?;
            let exp: usize = exp.parse().map_err(|_| bad("exponent must be a positive integer"))?;
            out.push(RlFactor { ch, exp }).map_err(|e| bad(&e.to_string()))?;
        }
        Ok(out)
    }
}
