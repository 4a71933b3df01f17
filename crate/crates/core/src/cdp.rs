//! Recursive Cayley-Dickson basis products.
//!
//! A unit of index `i` at level `n` is written as a pair `(A, B)` of
//! level-`n-1` values: `(e_i, 0)` when `i < 2^(n-1)`, `(0, e_{i - 2^(n-1)})`
//! otherwise. With every doubling parameter set to -1 the product is
//!
//! ```text
//! (A, B)(C, D) = (AC - D*B, BC* + DA)
//! ```
//!
//! and the conjugate of a pure imaginary unit is its negation, so each
//! halving step contributes at most one sign flip and a possible operand swap.

use crate::error::Result;
use crate::level::Level;
use crate::unit::{Sign, SignedUnit};

/// Anything that can multiply two basis units of a fixed level.
///
/// `product` is the unchecked hot path; callers keep indices below
/// `level().dim()`.
pub trait BasisProduct {
    fn level(&self) -> Level;

    fn product(&self, i: usize, j: usize) -> SignedUnit;
}

impl<T: BasisProduct + ?Sized> BasisProduct for &T {
    fn level(&self) -> Level {
        (**self).level()
    }

    fn product(&self, i: usize, j: usize) -> SignedUnit {
        (**self).product(i, j)
    }
}

/// The recursive engine, usable at any level up to the hard cap without
/// materializing a table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Recursive(pub Level);

impl BasisProduct for Recursive {
    fn level(&self) -> Level {
        self.0
    }

    fn product(&self, i: usize, j: usize) -> SignedUnit {
        debug_assert!(self.0.contains(i) && self.0.contains(j));
        unit_product(i, j, self.0.n())
    }
}

pub fn basis_product_recursive(i: usize, j: usize, level: Level) -> Result<SignedUnit> {
    level.check_index(i)?;
    level.check_index(j)?;
    Ok(unit_product(i, j, level.n()))
}

pub(crate) fn unit_product(mut i: usize, mut j: usize, n: u32) -> SignedUnit {
    let index = i ^ j;
    let mut sign = Sign::Plus;
    let mut half = if n == 0 { 0 } else { 1usize << (n - 1) };
    while half > 0 {
        match (i >= half, j >= half) {
            (false, false) => {}
            // (a, 0)(0, d) = (0, d a)
            (false, true) => {
                let d = j - half;
                j = i;
                i = d;
            }
            // (0, b)(c, 0) = (0, b c*)
            (true, false) => {
                i -= half;
                if j != 0 {
                    sign = -sign;
                }
            }
            // (0, b)(0, d) = (-d* b, 0)
            (true, true) => {
                let b = i - half;
                let d = j - half;
                i = d;
                j = b;
                if d == 0 {
                    sign = -sign;
                }
            }
        }
        half >>= 1;
    }
    SignedUnit::new(sign, index)
}
