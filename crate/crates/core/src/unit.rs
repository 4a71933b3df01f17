use core::fmt;
use core::ops::{Mul, Neg};

/// A plain ±1. Also used as the edge sign of a DMZ connection, where `Plus`
/// means same-orientation diagonals annihilate and `Minus` means opposite
/// orientations do.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

pub type EdgeSign = Sign;

impl Sign {
    pub const fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub const fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn from_symbol(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Plus),
            '-' | '\u{2212}' => Some(Sign::Minus),
            _ => None,
        }
    }

    pub const fn is_negative(self) -> bool {
        matches!(self, Sign::Minus)
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for Sign {
    fn serialize<S: serde::Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
        s.serialize_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

#[cfg(feature = "serde")]
impl<'de> serde::Deserialize<'de> for Sign {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> core::result::Result<Self, D::Error> {
        let s = <alloc::string::String as serde::Deserialize>::deserialize(d)?;
        match s.as_str() {
            "+" => Ok(Sign::Plus),
            "-" => Ok(Sign::Minus),
            other => Err(serde::de::Error::invalid_value(serde::de::Unexpected::Str(other), &"\"+\" or \"-\"")),
        }
    }
}

/// `±e_index`: the result of multiplying two basis units.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SignedUnit {
    pub sign: Sign,
    pub index: usize,
}

impl SignedUnit {
    pub const ONE: SignedUnit = SignedUnit::pos(0);

    pub const fn new(sign: Sign, index: usize) -> Self {
        SignedUnit { sign, index }
    }

    pub const fn pos(index: usize) -> Self {
        SignedUnit { sign: Sign::Plus, index }
    }

    pub const fn neg(index: usize) -> Self {
        SignedUnit { sign: Sign::Minus, index }
    }
}

impl Neg for SignedUnit {
    type Output = SignedUnit;

    fn neg(self) -> SignedUnit {
        SignedUnit { sign: -self.sign, index: self.index }
    }
}

impl Mul<Sign> for SignedUnit {
    type Output = SignedUnit;

    fn mul(self, rhs: Sign) -> SignedUnit {
        SignedUnit { sign: self.sign * rhs, index: self.index }
    }
}

/// Renders as the index with a leading `-` when negative, so `-e0` prints
/// as `-0`.
impl fmt::Display for SignedUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign.is_negative() {
            write!(f, "-{}", self.index)
        } else {
            write!(f, "{}", self.index)
        }
    }
}
