//! Lempel-Ziv s-factorization computed from the run-length encoding of a
//! string, in time that depends on the number of runs `n` rather than the
//! text length `N` (apart from the encoding scan itself).
//!
//! Two factorizers are provided:
//!
//! * [`offline`] builds a suffix array over the runs and answers each factor
//!   with a few range queries on per-character [`pst::PstPairSet`]s.
//!   `O(N + n log n)` time, and it reports the source of every reference.
//! * [`online`] consumes runs one at a time, maintaining a suffix automaton
//!   over runs ([`dawg::RleDawg`]) and emitting factor lengths as soon as
//!   they are final. Same time bound, lengths only.
//!
//! ```
//! use rlelz::{factorize_offline, factorize_online, RleString};
//!
//! let rle = RleString::encode(b"abaabababaaaaabbabab");
//! assert_eq!(rle.len(), 14);
//! assert_eq!(factorize_offline(&rle).lengths(), [1, 1, 1, 3, 4, 4, 1, 5]);
//! assert_eq!(factorize_online(&rle), [1, 1, 1, 3, 4, 4, 1, 5]);
//! ```
//!
//! [`oracle`] holds slow brute-force versions of everything, used by the
//! test suites and by the `naive` mode of the command-line tool.

pub mod dawg;
pub mod error;
pub mod factor;
pub mod ncd;
pub mod offline;
pub mod online;
pub mod oracle;
pub mod pst;
pub mod rle;
pub mod rle_sa;
pub mod synth;

pub use error::RleError;
pub use factor::{Factor, Factorization};
pub use offline::factorize_offline;
pub use online::{factorize_online, OnlineFactorizer};
pub use rle::{RlFactor, RleString};
