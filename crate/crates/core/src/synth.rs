//! Seeded synthetic strings with a controlled number of runs.
//!
//! Run characters are drawn uniformly from `sigma` symbols, excluding the
//! previous run's character, so every drawn run is maximal. Exponents come
//! from [`RunDist`]. The last run is truncated to hit the requested length.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Geometric};

/// Distribution of run exponents.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum RunDist {
    /// `1 + G` where `G` counts failures before a success of probability `rho`.
    Geometric { rho: f64 },
    /// Uniform on `1..=max`.
    Uniform { max: usize },
}

impl RunDist {
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        match *self {
            RunDist::Geometric { rho } => {
                let g = Geometric::new(rho).expect("rho validated on construction");
                1 + usize::try_from(g.sample(rng)).unwrap_or(usize::MAX - 1)
            }
            RunDist::Uniform { max } => rng.random_range(1..=max),
        }
    }

    fn validate(&self) -> Result<(), String> {
        match *self {
            RunDist::Geometric { rho } if !(rho > 0.0 && rho <= 1.0) => {
                Err(format!("geometric parameter must be in (0, 1], got {rho}"))
            }
            RunDist::Uniform { max: 0 } => Err("uniform maximum must be at least 1".into()),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for RunDist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RunDist::Geometric { rho } => write!(f, "geometric:{rho}"),
            RunDist::Uniform { max } => write!(f, "uniform:{max}"),
        }
    }
}

/// Parses `geometric:<rho>` or `uniform:<max>`; a bare name uses
/// `rho = 0.5` or `max = 8`.
impl FromStr for RunDist {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (name, arg) = match s.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (s, None),
        };
        let dist = match name {
            "geometric" => {
                RunDist::Geometric { rho: arg.map_or(Ok(0.5), str::parse).map_err(|e| format!("bad rho: {e}"))? }
            }
            "uniform" => {
                RunDist::Uniform { max: arg.map_or(Ok(8), str::parse).map_err(|e| format!("bad maximum: {e}"))? }
            }
            _ => return Err(format!("unknown run distribution `{name}`")),
        };
        dist.validate()?;
        Ok(dist)
    }
}

/// Parameters of one synthetic string.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SynthConfig {
    /// Decoded length.
    pub len: usize,
    /// Alphabet size, at most 256. Symbols are consecutive bytes from `b'a'`.
    pub sigma: usize,
    pub dist: RunDist,
}

impl SynthConfig {
    pub fn generate<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<u8> {
        assert!((1..=256).contains(&self.sigma), "sigma must be in 1..=256");
        self.dist.validate().unwrap_or_else(|e| panic!("{e}"));
        let symbol = |i: usize| b'a'.wrapping_add(i as u8);
        let mut out = Vec::with_capacity(self.len);
        let mut prev: Option<usize> = None;
        while out.len() < self.len {
            let c = match (prev, self.sigma) {
                (_, 1) => 0,
                (None, s) => rng.random_range(0..s),
                (Some(p), s) => {
                    // uniform over the other sigma - 1 symbols
                    let c = rng.random_range(0..s - 1);
                    c + usize::from(c >= p)
                }
            };
            let exp = self.dist.sample(rng).min(self.len - out.len());
            out.extend(std::iter::repeat_n(symbol(c), exp));
            prev = Some(c);
        }
        out
    }

    /// Same as [`generate`](Self::generate) with a ChaCha8 stream seeded by `seed`.
    pub fn generate_seeded(&self, seed: u64) -> Vec<u8> {
        self.generate(&mut ChaCha8Rng::seed_from_u64(seed))
    }
}
