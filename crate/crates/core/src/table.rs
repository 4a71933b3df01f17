//! Quadrant-driven multiplication tables.
//!
//! The table for level `n + 1` is four copies of the level-`n` table with
//! indices and signs adjusted. With `g = 2^n`, quadrant I is the top-left
//! block, II top-right, III bottom-right and IV bottom-left. The "trident"
//! of a block is its top row, its leftmost column and its main diagonal;
//! only those cells get exceptional sign handling:
//!
//! * II  `(r, g+c)`:   index `g + r^c`, sign kept on the trident, flipped elsewhere.
//! * III `(g+r, g+c)`: index `r^c`, sign flipped on the leftmost column, kept on
//!   the rest of the trident, flipped elsewhere.
//! * IV  `(g+r, c)`:   content of II `(r, g+c)`, sign kept on the leftmost column,
//!   flipped on the rest of the trident, kept elsewhere.

use alloc::vec;
use alloc::vec::Vec;

use crate::cdp::BasisProduct;
use crate::level::Level;
use crate::unit::SignedUnit;

/// Dense `2^n x 2^n` table of basis products, row-major. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicationTable {
    level: Level,
    entries: Vec<SignedUnit>,
}

pub fn build_table(level: Level) -> MultiplicationTable {
    let mut size = 1usize;
    let mut entries = vec![SignedUnit::ONE];
    for _ in 0..level.n() {
        entries = double(&entries, size);
        size *= 2;
    }
    MultiplicationTable { level, entries }
}

fn double(prev: &[SignedUnit], g: usize) -> Vec<SignedUnit> {
    let w = 2 * g;
    let mut next = vec![SignedUnit::ONE; w * w];
    for r in 0..g {
        for c in 0..g {
            let base = prev[r * g + c];
            let trident = r == 0 || c == 0 || r == c;

            next[r * w + c] = base;

            let ii = SignedUnit::new(if trident { base.sign } else { -base.sign }, g + base.index);
            next[r * w + g + c] = ii;

            let iii_sign = if c == 0 {
                -base.sign
            } else if trident {
                base.sign
            } else {
                -base.sign
            };
            next[(g + r) * w + g + c] = SignedUnit::new(iii_sign, base.index);

            let iv_sign = if c == 0 {
                ii.sign
            } else if trident {
                -ii.sign
            } else {
                ii.sign
            };
            next[(g + r) * w + c] = SignedUnit::new(iv_sign, ii.index);
        }
    }
    next
}

impl MultiplicationTable {
    pub fn level(&self) -> Level {
        self.level
    }

    pub fn dim(&self) -> usize {
        self.level.dim()
    }

    pub fn get(&self, i: usize, j: usize) -> Option<SignedUnit> {
        let d = self.dim();
        (i < d && j < d).then(|| self.entries[i * d + j])
    }

    pub fn row(&self, i: usize) -> &[SignedUnit] {
        let d = self.dim();
        &self.entries[i * d..(i + 1) * d]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[SignedUnit]> + '_ {
        self.entries.chunks(self.dim())
    }
}

impl BasisProduct for MultiplicationTable {
    fn level(&self) -> Level {
        self.level
    }

    #[inline]
    fn product(&self, i: usize, j: usize) -> SignedUnit {
        self.entries[i * self.dim() + j]
    }
}
