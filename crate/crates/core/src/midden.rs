//! Kite-chain middens: box-kite vertices shifted up by multiples of 16.

use alloc::vec::Vec;

use crate::boxkite::{box_kite, BoxKite, Vertex, EDGE_VERTICES};
use crate::cdp::BasisProduct;
use crate::census::is_zero_divisor;
use crate::error::{Error, Result};
use crate::level::{Level, DEFAULT_LEVEL_CAP};
use crate::zd::{dmz_edge, Assessor, Edge, Orientation};

/// Shift between successive harmonics: the sedenion dimension.
pub const HARMONIC_SHIFT: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HarmonicFamily {
    pub base: BoxKite,
    pub k: usize,
    pub shift: usize,
    /// Shifted vertices, indexed like the base's `A..F`.
    pub vertices: [Assessor; 6],
    /// Smallest level holding every shifted index.
    pub level: Level,
}

impl HarmonicFamily {
    pub fn vertex(&self, v: Vertex) -> Assessor {
        self.vertices[v.index()]
    }

    /// Strut-opposite pairs `(A, F)`, `(B, E)`, `(C, D)`.
    pub fn strut_pairs(&self) -> [(Assessor, Assessor); 3] {
        crate::boxkite::STRUTS.map(|(u, v)| (self.vertex(u), self.vertex(v)))
    }

    /// DMZ edges between family members, in the base's edge order.
    pub fn edges<E: BasisProduct + ?Sized>(&self, engine: &E) -> Vec<(Vertex, Vertex, Option<Edge>)> {
        EDGE_VERTICES.iter().map(|&(u, v)| (u, v, harmonic_emanation(engine, self.vertex(u), self.vertex(v)))).collect()
    }
}

pub fn harmonic_family(bk: &BoxKite, k: usize) -> Result<HarmonicFamily> {
    harmonic_family_with_shift(bk, k, HARMONIC_SHIFT, DEFAULT_LEVEL_CAP)
}

/// Shifts every vertex by `k * shift`, refusing indices beyond level `cap`.
pub fn harmonic_family_with_shift(bk: &BoxKite, k: usize, shift: usize, cap: u32) -> Result<HarmonicFamily> {
    let by = k * shift;
    let vertices = bk.vertices.map(|a| a.shifted(by));
    let top = vertices.iter().map(|a| a.hi).max().unwrap_or(0);
    let level = Level::containing(top).max(bk.level);
    if level.n() > cap {
        return Err(Error::HarmonicOverflow { index: top, cap });
    }
    Ok(HarmonicFamily { base: bk.clone(), k, shift, vertices, level })
}

/// The DMZ edge joining two harmonic assessors, if any. Its emanated
/// assessor lies below the first harmonic.
pub fn harmonic_emanation<E: BasisProduct + ?Sized>(engine: &E, a: Assessor, b: Assessor) -> Option<Edge> {
    dmz_edge(engine, a, b)
}

/// Cross-harmonic sails through one first-harmonic assessor: pairs of
/// second- and third-harmonic assessors closing a sail with it.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CrossSails {
    pub first: Assessor,
    pub sails: Vec<(Assessor, Assessor)>,
}

/// For every first-harmonic vertex of `bk`, the triples taking one
/// assessor from each of harmonics 1, 2 and 3 that are pairwise DMZ and
/// closed under emanation. Needs an engine at level 6 or above.
pub fn cross_harmonic_sails<E: BasisProduct + ?Sized>(engine: &E, bk: &BoxKite) -> Result<Vec<CrossSails>> {
    engine.level().require_at_least(Level::CHINGONS.n())?;
    let [h1, h2, h3] = [1, 2, 3].map(|k| harmonic_family(bk, k));
    let (h1, h2, h3) = (h1?, h2?, h3?);
    let closes = |x: Assessor, y: Assessor, z: Assessor| dmz_edge(engine, x, y).is_some_and(|e| e.emanated == z);
    Ok(h1
        .vertices
        .iter()
        .map(|&a| {
            let mut sails = Vec::new();
            for &b in &h2.vertices {
                for &c in &h3.vertices {
                    if closes(a, b, c) && closes(b, c, a) && closes(a, c, b) {
                        sails.push((b, c));
                    }
                }
            }
            sails.sort();
            CrossSails { first: a, sails }
        })
        .collect())
}

/// Second- and third-harmonic members of a sail as `(lo, hi)` pairs.
pub type PrintedSail = ((usize, usize), (usize, usize));

/// A printed cross-harmonic sail that did not match computation, with the
/// computed sail sharing its third-harmonic member.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SailMisprint {
    pub printed: PrintedSail,
    pub computed: Option<(Assessor, Assessor)>,
}

pub fn check_printed_sails(computed: &CrossSails, printed: &[PrintedSail]) -> Vec<SailMisprint> {
    printed
        .iter()
        .filter(|&&(b, c)| !computed.sails.iter().any(|&(x, y)| (x.lo, x.hi) == b && (y.lo, y.hi) == c))
        .map(|&(b, c)| SailMisprint {
            printed: (b, c),
            computed: computed.sails.iter().copied().find(|&(_, y)| (y.lo, y.hi) == c),
        })
        .collect()
}

/// Assessors of the kite chain at `level`: all seven sedenion box-kites
/// and every harmonic that fits.
pub fn kite_chain_assessors(level: Level) -> Result<Vec<Assessor>> {
    level.require_at_least(Level::SEDENIONS.n())?;
    let harmonics = level.dim() / HARMONIC_SHIFT;
    let mut out = Vec::with_capacity(42 * harmonics);
    for strut in 1..=7 {
        let bk = box_kite(strut)?;
        for k in 0..harmonics {
            out.extend(bk.vertices.map(|a| a.shifted(k * HARMONIC_SHIFT)));
        }
    }
    out.sort();
    Ok(out)
}

/// Kite-chain diagonals that are zero divisors at the engine's level.
pub fn kite_chain_diagonal_count<E: BasisProduct + ?Sized>(engine: &E) -> Result<usize> {
    let members = kite_chain_assessors(engine.level())?;
    Ok(members
        .iter()
        .flat_map(|a| [a.diagonal(Orientation::Slash), a.diagonal(Orientation::Backslash)])
        .filter(|&d| is_zero_divisor(engine, d))
        .count())
}

/// Moreno's irreducible zero-divisor count `(n - 3) * 84`.
pub fn moreno_prediction(level: Level) -> usize {
    (level.n() as usize).saturating_sub(3) * 84
}
