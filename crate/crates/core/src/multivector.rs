use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use crate::cdp::{BasisProduct, Recursive};
use crate::error::{Error, Result};
use crate::level::Level;

/// A general 2^n-ion with exact integer coefficients, stored sparsely.
/// Zero coefficients are never kept, so structural equality is value
/// equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Multivector {
    level: Level,
    coefficients: BTreeMap<usize, i64>,
}

impl Multivector {
    pub fn zero(level: Level) -> Self {
        Multivector { level, coefficients: BTreeMap::new() }
    }

    pub fn unit(level: Level, index: usize) -> Result<Self> {
        Self::from_terms(level, [(index, 1)])
    }

    /// Sums repeated indices and drops zeros.
    pub fn from_terms<I>(level: Level, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, i64)>,
    {
        let mut mv = Multivector::zero(level);
        for (index, c) in terms {
            level.check_index(index)?;
            mv.add_term(index, c);
        }
        Ok(mv)
    }

    fn add_term(&mut self, index: usize, c: i64) {
        if c == 0 {
            return;
        }
        let slot = self.coefficients.entry(index).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.coefficients.remove(&index);
        }
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn coefficient(&self, index: usize) -> i64 {
        self.coefficients.get(&index).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Nonzero `(index, coefficient)` pairs in ascending index order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.coefficients.iter().map(|(&i, &c)| (i, c))
    }

    /// Real part kept, every imaginary coefficient negated.
    pub fn conjugate(&self) -> Self {
        let coefficients = self.coefficients.iter().map(|(&i, &c)| (i, if i == 0 { c } else { -c })).collect();
        Multivector { level: self.level, coefficients }
    }

    pub fn norm_squared(&self) -> i128 {
        self.coefficients.values().map(|&c| i128::from(c) * i128::from(c)).sum()
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Multivector::zero(self.level);
        }
        let coefficients = self.coefficients.iter().map(|(&i, &c)| (i, c * k)).collect();
        Multivector { level: self.level, coefficients }
    }

    /// Same coefficients viewed at a higher level.
    pub fn lift(&self, level: Level) -> Result<Self> {
        if level < self.level {
            return Err(Error::LevelMismatch { left: self.level.n(), right: level.n() });
        }
        Ok(Multivector { level, coefficients: self.coefficients.clone() })
    }

    /// Product through the recursive engine at the operands' level.
    pub fn try_mul(&self, rhs: &Multivector) -> Result<Multivector> {
        multiply(&Recursive(self.level), self, rhs)
    }

    fn zip_with(&self, rhs: &Multivector, sign: i64) -> Multivector {
        assert_eq!(self.level, rhs.level, "multivector level mismatch");
        let mut out = self.clone();
        for (i, c) in rhs.terms() {
            out.add_term(i, sign * c);
        }
        out
    }
}

/// Bilinear extension of a basis product over both operands.
pub fn multiply<E: BasisProduct + ?Sized>(engine: &E, x: &Multivector, y: &Multivector) -> Result<Multivector> {
    if x.level != y.level {
        return Err(Error::LevelMismatch { left: x.level.n(), right: y.level.n() });
    }
    if engine.level() < x.level {
        return Err(Error::EngineTooSmall { engine: engine.level().n(), operand: x.level.n() });
    }
    let mut out = Multivector::zero(x.level);
    for (i, a) in x.terms() {
        for (j, b) in y.terms() {
            let u = engine.product(i, j);
            out.add_term(u.index, u.sign.value() * a * b);
        }
    }
    Ok(out)
}

impl Neg for &Multivector {
    type Output = Multivector;

    fn neg(self) -> Multivector {
        self.scale(-1)
    }
}

impl Add for &Multivector {
    type Output = Multivector;

    /// # Panics
    /// If the operands live at different levels.
    fn add(self, rhs: &Multivector) -> Multivector {
        self.zip_with(rhs, 1)
    }
}

impl Sub for &Multivector {
    type Output = Multivector;

    /// # Panics
    /// If the operands live at different levels.
    fn sub(self, rhs: &Multivector) -> Multivector {
        self.zip_with(rhs, -1)
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (i, c)) in self.terms().enumerate() {
            let mag = c.unsigned_abs();
            match (k, c < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mag != 1 {
                write!(f, "{mag}")?;
            }
            write!(f, "e{i}")?;
        }
        Ok(())
    }
}
