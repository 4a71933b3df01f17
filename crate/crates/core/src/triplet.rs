use alloc::vec::Vec;
use core::fmt;

use crate::cdp::BasisProduct;
use crate::unit::SignedUnit;

/// Three imaginary indices closed under XOR, rotated so the smallest comes
/// first and `ab = +c`, `bc = +a`, `ca = +b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct NatoTriplet {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl NatoTriplet {
    /// Puts `{x, y, z}` into NATO rotation, or `None` if the indices are not
    /// a distinct nonzero XOR-closed set.
    pub fn canonical<E: BasisProduct + ?Sized>(engine: &E, x: usize, y: usize, z: usize) -> Option<Self> {
        if x == 0 || y == 0 || z == 0 || x ^ y != z || x == y {
            return None;
        }
        let dim = engine.level().dim();
        if x >= dim || y >= dim || z >= dim {
            return None;
        }
        let mut s = [x, y, z];
        s.sort_unstable();
        let [a, p, q] = s;
        if engine.product(a, p) == SignedUnit::pos(q) {
            Some(NatoTriplet { a, b: p, c: q })
        } else {
            Some(NatoTriplet { a, b: q, c: p })
        }
    }

    pub fn contains(&self, index: usize) -> bool {
        self.a == index || self.b == index || self.c == index
    }

    pub fn sorted(&self) -> [usize; 3] {
        let mut s = [self.a, self.b, self.c];
        s.sort_unstable();
        s
    }

    /// Checks all three cyclic products are positive.
    pub fn holds<E: BasisProduct + ?Sized>(&self, engine: &E) -> bool {
        engine.product(self.a, self.b) == SignedUnit::pos(self.c)
            && engine.product(self.b, self.c) == SignedUnit::pos(self.a)
            && engine.product(self.c, self.a) == SignedUnit::pos(self.b)
    }
}

impl fmt::Display for NatoTriplet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {} {})", self.a, self.b, self.c)
    }
}

/// Every associative triplet of the engine's level, ordered by their sorted
/// index sets. There are `(2^n - 1)(2^n - 2) / 6` of them.
pub fn nato_triplets<E: BasisProduct + ?Sized>(engine: &E) -> Vec<NatoTriplet> {
    let dim = engine.level().dim();
    let mut out = Vec::new();
    for a in 1..dim {
        for b in a + 1..dim {
            let c = a ^ b;
            if c > b {
                out.extend(NatoTriplet::canonical(engine, a, b, c));
            }
        }
    }
    out
}

pub fn triplet_count(n: u32) -> usize {
    let d = 1usize << n;
    (d - 1) * (d.saturating_sub(2)) / 6
}
