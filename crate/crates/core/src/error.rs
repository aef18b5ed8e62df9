use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RleError {
    #[error("run {index} has exponent zero")]
    ZeroExponent { index: usize },
    #[error("run {index} repeats the character of the previous run")]
    AdjacentEqual { index: usize },
    #[error("position {pos} is outside 1..={len}")]
    PositionOutOfRange { pos: usize, len: usize },
    #[error("run index {index} is outside 0..{len}")]
    RunOutOfRange { index: usize, len: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("input has {runs} runs; brute-force enumeration is limited to {limit}")]
    TooLarge { runs: usize, limit: usize },
}
