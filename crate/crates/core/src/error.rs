use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("level {n} exceeds the level cap {cap}")]
    LevelTooLarge { n: u32, cap: u32 },

    #[error("operation needs level >= {required}, got {actual}")]
    LevelTooSmall { required: u32, actual: u32 },

    #[error("basis index {index} is out of range for level {level}")]
    IndexOutOfRange { index: usize, level: u32 },

    #[error("operands live at different levels ({left} vs {right})")]
    LevelMismatch { left: u32, right: u32 },

    #[error("product engine at level {engine} cannot multiply operands at level {operand}")]
    EngineTooSmall { engine: u32, operand: u32 },

    #[error("strut constant {strut} is not valid at level {level}")]
    InvalidStrut { strut: usize, level: u32 },

    #[error("emanation table for strut {strut} is not sky-high")]
    NotSkyHigh { strut: usize },

    #[error("harmonic shift puts index {index} above the level cap {cap}")]
    HarmonicOverflow { index: usize, cap: u32 },

    #[error("assessors do not form a box-kite: {0}")]
    NotABoxKite(&'static str),

    #[error("fold mismatch: {0}")]
    FoldMismatch(&'static str),
}
