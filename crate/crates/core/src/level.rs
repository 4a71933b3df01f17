use core::fmt;

use crate::error::{Error, Result};

/// Default cap on the doubling depth (n = 8, the Voudons).
pub const DEFAULT_LEVEL_CAP: u32 = 8;

/// Absolute ceiling regardless of the configured cap. Basis indices stay far
/// below `usize::MAX` and the recursive engine is still cheap here.
pub const HARD_LEVEL_CAP: u32 = 16;

/// Number of Cayley-Dickson doublings above the reals; the algebra has
/// dimension `2^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize), serde(try_from = "u32", into = "u32"))]
pub struct Level(u32);

impl Level {
    pub const REALS: Level = Level(0);
    pub const COMPLEX: Level = Level(1);
    pub const QUATERNIONS: Level = Level(2);
    pub const OCTONIONS: Level = Level(3);
    pub const SEDENIONS: Level = Level(4);
    pub const PATHIONS: Level = Level(5);
    pub const CHINGONS: Level = Level(6);
    pub const ROUTONS: Level = Level(7);
    pub const VOUDONS: Level = Level(8);

    pub fn new(n: u32) -> Result<Self> {
        Self::with_cap(n, DEFAULT_LEVEL_CAP)
    }

    /// Like [`Level::new`] with a caller-chosen cap (itself clamped to
    /// [`HARD_LEVEL_CAP`]).
    pub fn with_cap(n: u32, cap: u32) -> Result<Self> {
        let cap = cap.min(HARD_LEVEL_CAP);
        if n > cap {
            return Err(Error::LevelTooLarge { n, cap });
        }
        Ok(Level(n))
    }

    /// Smallest level whose basis contains `index`.
    pub fn containing(index: usize) -> Level {
        let bits = usize::BITS - index.leading_zeros();
        Level(bits)
    }

    pub const fn n(self) -> u32 {
        self.0
    }

    pub const fn dim(self) -> usize {
        1 << self.0
    }

    /// Index of the generator that doubled the previous level into this one
    /// (`2^(n-1)`), or `None` for the reals.
    pub const fn generator(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(1 << (self.0 - 1))
        }
    }

    pub const fn contains(self, index: usize) -> bool {
        index < self.dim()
    }

    pub fn check_index(self, index: usize) -> Result<()> {
        if self.contains(index) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index, level: self.0 })
        }
    }

    pub fn require_at_least(self, required: u32) -> Result<()> {
        if self.0 < required {
            Err(Error::LevelTooSmall { required, actual: self.0 })
        } else {
            Ok(())
        }
    }

    pub fn name(self) -> &'static str {
        match self.0 {
            0 => "reals",
            1 => "complex numbers",
            2 => "quaternions",
            3 => "octonions",
            4 => "sedenions",
            5 => "pathions",
            6 => "chingons",
            7 => "routons",
            8 => "voudons",
            _ => "2^n-ions",
        }
    }

    /// One-letter shorthand R, C, H, O, S, P, X, U, V.
    pub fn symbol(self) -> Option<char> {
        b"RCHOSPXUV".get(self.0 as usize).map(|&b| b as char)
    }
}

impl TryFrom<u32> for Level {
    type Error = Error;

    fn try_from(n: u32) -> Result<Self> {
        Level::new(n)
    }
}

impl From<Level> for u32 {
    fn from(level: Level) -> u32 {
        level.0
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} ({})", self.0, self.name())
    }
}
