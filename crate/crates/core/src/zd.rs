//! Assessors, their diagonals, and detection of dyads making zero (DMZs).

use alloc::vec::Vec;
use core::fmt;

use crate::cdp::BasisProduct;
use crate::error::{Error, Result};
use crate::level::Level;
use crate::multivector::{multiply, Multivector};
use crate::unit::Sign;

/// A plane spanned by two imaginary units whose diagonals are candidate zero
/// divisors. Always stored with `lo < hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Assessor {
    pub lo: usize,
    pub hi: usize,
}

impl Assessor {
    /// Orders the two indices. Panics if they coincide.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "an assessor needs two distinct units");
        Assessor { lo: a.min(b), hi: a.max(b) }
    }

    pub const fn inner_xor(&self) -> usize {
        self.lo ^ self.hi
    }

    pub fn min_level(&self) -> Level {
        Level::containing(self.hi)
    }

    pub fn diagonal(self, orientation: Orientation) -> Diagonal {
        Diagonal { assessor: self, orientation }
    }

    pub fn diagonals(self) -> [Diagonal; 2] {
        [self.diagonal(Orientation::Slash), self.diagonal(Orientation::Backslash)]
    }

    /// Shifts both indices up by `by`.
    pub fn shifted(&self, by: usize) -> Assessor {
        Assessor { lo: self.lo + by, hi: self.hi + by }
    }

    fn shares_unit(&self, other: &Assessor) -> bool {
        self.lo == other.lo || self.lo == other.hi || self.hi == other.lo || self.hi == other.hi
    }
}

impl fmt::Display for Assessor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lo, self.hi)
    }
}

/// `/` is `e_lo + e_hi`, `\` is `e_lo - e_hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Orientation {
    #[cfg_attr(feature = "serde", serde(rename = "/"))]
    Slash,
    #[cfg_attr(feature = "serde", serde(rename = "\\"))]
    Backslash,
}

impl Orientation {
    pub const fn sign(self) -> Sign {
        match self {
            Orientation::Slash => Sign::Plus,
            Orientation::Backslash => Sign::Minus,
        }
    }

    pub const fn flip(self) -> Orientation {
        match self {
            Orientation::Slash => Orientation::Backslash,
            Orientation::Backslash => Orientation::Slash,
        }
    }

    pub const fn symbol(self) -> char {
        match self {
            Orientation::Slash => '/',
            Orientation::Backslash => '\\',
        }
    }
}

/// The unit-coefficient dyad `e_lo ± e_hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Diagonal {
    pub assessor: Assessor,
    pub orientation: Orientation,
}

impl Diagonal {
    pub fn to_multivector(&self, level: Level) -> Result<Multivector> {
        let s = self.orientation.sign().value();
        Multivector::from_terms(level, [(self.assessor.lo, 1), (self.assessor.hi, s)])
    }
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match self.orientation {
            Orientation::Slash => '+',
            Orientation::Backslash => '-',
        };
        write!(f, "({} {} {})", self.assessor.lo, op, self.assessor.hi)
    }
}

/// A DMZ connection between two assessors: its edge sign and the third
/// assessor it emanates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Edge {
    pub sign: Sign,
    pub emanated: Assessor,
}

/// The members of a strut ensemble: every `(lo, lo ^ g ^ strut)` with
/// `0 < lo < g = 2^(n-1)`, skipping `lo == strut`. There are `g - 2`.
pub fn assessors_for_strut(level: Level, strut: usize) -> Result<Vec<Assessor>> {
    let g = level.generator().ok_or(Error::InvalidStrut { strut, level: level.n() })?;
    if strut == 0 || strut >= g {
        return Err(Error::InvalidStrut { strut, level: level.n() });
    }
    let ix = g ^ strut;
    Ok((1..g).filter(|&lo| lo != strut).map(|lo| Assessor::new(lo, lo ^ ix)).collect())
}

/// Exact four-term product of two diagonals.
pub fn dyad_product<E: BasisProduct + ?Sized>(engine: &E, d1: Diagonal, d2: Diagonal) -> Result<Multivector> {
    let x = d1.to_multivector(engine.level())?;
    let y = d2.to_multivector(engine.level())?;
    multiply(engine, &x, &y)
}

/// Allocation-free zero test for a product of two diagonals.
pub fn dyad_vanishes<E: BasisProduct + ?Sized>(engine: &E, d1: Diagonal, d2: Diagonal) -> bool {
    let (a, b) = (d1.assessor, d2.assessor);
    let s1 = d1.orientation.sign();
    let s2 = d2.orientation.sign();
    let terms = [
        engine.product(a.lo, b.lo),
        engine.product(a.lo, b.hi) * s2,
        engine.product(a.hi, b.lo) * s1,
        engine.product(a.hi, b.hi) * (s1 * s2),
    ];
    terms.iter().all(|t| {
        let sum: i64 = terms.iter().filter(|u| u.index == t.index).map(|u| u.sign.value()).sum();
        sum == 0
    })
}

/// Tests whether two assessors are joined by a DMZ edge. Assessors with
/// different inner XORs, or sharing a unit, never are.
pub fn dmz_edge<E: BasisProduct + ?Sized>(engine: &E, a1: Assessor, a2: Assessor) -> Option<Edge> {
    if a1.inner_xor() != a2.inner_xor() || a1.shares_unit(&a2) {
        return None;
    }
    let sign = if dyad_vanishes(engine, a1.diagonal(Orientation::Slash), a2.diagonal(Orientation::Slash)) {
        Sign::Plus
    } else if dyad_vanishes(engine, a1.diagonal(Orientation::Slash), a2.diagonal(Orientation::Backslash)) {
        Sign::Minus
    } else {
        return None;
    };
    let lo = a1.lo ^ a2.lo;
    Some(Edge { sign, emanated: Assessor::new(lo, lo ^ a1.inner_xor()) })
}

/// The two diagonal pairs realizing a DMZ edge, i.e. `(/,/)` and `(\,\)` for
/// a `+` edge, `(/,\)` and `(\,/)` for a `-` edge.
pub fn edge_pairings(a1: Assessor, a2: Assessor, sign: Sign) -> [(Diagonal, Diagonal); 2] {
    use Orientation::*;
    let partner = |o: Orientation| if sign == Sign::Plus { o } else { o.flip() };
    [(a1.diagonal(Slash), a2.diagonal(partner(Slash))), (a1.diagonal(Backslash), a2.diagonal(partner(Backslash)))]
}
