//! Box-kites: octahedral lattices of six assessors sharing one inner XOR.
//!
//! Vertices come in three strut-opposite pairs `(A, F)`, `(B, E)`, `(C, D)`
//! that never form DMZs; every other vertex pair does. Of the eight
//! triangular faces, the four closed under emanation are sails and the rest
//! are vents. Labels are normalized so `{A, B, C}` is the all-minus "triple
//! zigzag" sail, `A` holds its smallest low index, and `A.lo, B.lo, C.lo`
//! reads as a NATO triplet.

use alloc::vec::Vec;
use core::fmt;

use crate::cdp::{BasisProduct, Recursive};
use crate::error::{Error, Result};
use crate::level::Level;
use crate::unit::{Sign, SignedUnit};
use crate::zd::{assessors_for_strut, dmz_edge, dyad_product, edge_pairings, Assessor, Diagonal, Orientation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Vertex {
    A,
    B,
    C,
    D,
    E,
    F,
}

impl Vertex {
    pub const ALL: [Vertex; 6] = [Vertex::A, Vertex::B, Vertex::C, Vertex::D, Vertex::E, Vertex::F];

    pub const fn index(self) -> usize {
        self as usize
    }

    pub const fn opposite(self) -> Vertex {
        match self {
            Vertex::A => Vertex::F,
            Vertex::B => Vertex::E,
            Vertex::C => Vertex::D,
            Vertex::D => Vertex::C,
            Vertex::E => Vertex::B,
            Vertex::F => Vertex::A,
        }
    }

    pub const fn letter(self) -> char {
        (b'A' + self as u8) as char
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

use Vertex::*;

pub const SAIL_VERTICES: [[Vertex; 3]; 4] = [[A, B, C], [A, D, E], [F, D, B], [F, C, E]];
pub const VENT_VERTICES: [[Vertex; 3]; 4] = [[A, B, D], [A, E, C], [F, B, C], [F, E, D]];
pub const STRUTS: [(Vertex, Vertex); 3] = [(A, F), (B, E), (C, D)];

/// The 12 non-strut vertex pairs in a fixed order.
pub const EDGE_VERTICES: [(Vertex, Vertex); 12] =
    [(A, B), (A, C), (A, D), (A, E), (B, C), (B, D), (B, F), (C, E), (C, F), (D, E), (D, F), (E, F)];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct KiteEdge {
    pub from: Vertex,
    pub to: Vertex,
    pub sign: Sign,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum SailKind {
    Zigzag,
    Trefoil,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Sail {
    pub vertices: [Vertex; 3],
    pub kind: SailKind,
    pub minus_edges: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BoxKite {
    pub strut: usize,
    pub level: Level,
    pub vertices: [Assessor; 6],
    pub edges: Vec<KiteEdge>,
}

/// The sedenion box-kite whose strut constant is `strut` (1..=7).
pub fn box_kite(strut: usize) -> Result<BoxKite> {
    if !(1..=7).contains(&strut) {
        return Err(Error::InvalidStrut { strut, level: Level::SEDENIONS.n() });
    }
    let members = assessors_for_strut(Level::SEDENIONS, strut)?;
    let pairs = strut_pairs_of(&members, strut);
    let pairs: [(Assessor, Assessor); 3] = pairs.try_into().map_err(|_| Error::NotABoxKite("expected three struts"))?;
    kite_from_strut_pairs(&Recursive(Level::SEDENIONS), strut, pairs)
}

/// Groups ensemble members into strut-opposite pairs `(lo, lo ^ strut)`,
/// ordered by the smaller low index.
pub(crate) fn strut_pairs_of(members: &[Assessor], strut: usize) -> Vec<(Assessor, Assessor)> {
    let mut pairs: Vec<_> = members
        .iter()
        .filter(|a| a.lo < a.lo ^ strut)
        .filter_map(|a| {
            let partner = members.iter().find(|b| b.lo == a.lo ^ strut)?;
            Some((*a, *partner))
        })
        .collect();
    pairs.sort();
    pairs
}

/// Assembles and labels a box-kite from three strut-opposite pairs sharing
/// one inner XOR. Fails unless all twelve cross pairs are DMZ, exactly four
/// faces close under emanation, and exactly one of those is all-minus.
pub fn kite_from_strut_pairs<E: BasisProduct + ?Sized>(
    engine: &E,
    strut: usize,
    pairs: [(Assessor, Assessor); 3],
) -> Result<BoxKite> {
    let ix = pairs[0].0.inner_xor();
    if pairs.iter().any(|(a, b)| a.inner_xor() != ix || b.inner_xor() != ix) {
        return Err(Error::NotABoxKite("inner XORs differ"));
    }
    for (a, b) in pairs {
        if dmz_edge(engine, a, b).is_some() {
            return Err(Error::NotABoxKite("strut opposites form a DMZ"));
        }
    }

    let choose = |p: (Assessor, Assessor), k: usize| if k == 0 { p.0 } else { p.1 };
    let mut sails: Vec<[Assessor; 3]> = Vec::new();
    for mask in 0..8usize {
        let face = [choose(pairs[0], mask & 1), choose(pairs[1], (mask >> 1) & 1), choose(pairs[2], mask >> 2)];
        let mut closed = true;
        for (x, y, z) in [(0, 1, 2), (1, 2, 0), (0, 2, 1)] {
            match dmz_edge(engine, face[x], face[y]) {
                Some(e) if e.emanated == face[z] => {}
                Some(_) => closed = false,
                None => return Err(Error::NotABoxKite("missing DMZ edge")),
            }
        }
        if closed {
            sails.push(face);
        }
    }
    if sails.len() != 4 {
        return Err(Error::NotABoxKite("expected four emanation-closed sails"));
    }

    let all_minus = |face: &[Assessor; 3]| {
        [(0, 1), (1, 2), (0, 2)]
            .iter()
            .all(|&(x, y)| dmz_edge(engine, face[x], face[y]).map(|e| e.sign) == Some(Sign::Minus))
    };
    let mut zigzags = sails.iter().filter(|f| all_minus(f));
    let zigzag = *zigzags.next().ok_or(Error::NotABoxKite("no all-minus sail"))?;
    if zigzags.next().is_some() {
        return Err(Error::NotABoxKite("more than one all-minus sail"));
    }

    let mut z = zigzag;
    z.sort();
    let a = z[0];
    let (b, c) = if engine.product(a.lo, z[1].lo) == SignedUnit::pos(z[2].lo) { (z[1], z[2]) } else { (z[2], z[1]) };
    let opposite = |v: Assessor| {
        pairs
            .iter()
            .find_map(|&(p, q)| {
                if p == v {
                    Some(q)
                } else if q == v {
                    Some(p)
                } else {
                    None
                }
            })
            .expect("zigzag vertex belongs to a strut pair")
    };
    let vertices = [a, b, c, opposite(c), opposite(b), opposite(a)];

    let mut edges = Vec::with_capacity(12);
    for (u, v) in EDGE_VERTICES {
        let e =
            dmz_edge(engine, vertices[u.index()], vertices[v.index()]).ok_or(Error::NotABoxKite("missing DMZ edge"))?;
        edges.push(KiteEdge { from: u, to: v, sign: e.sign });
    }

    Ok(BoxKite { strut, level: engine.level(), vertices, edges })
}

/// Products of one strut-opposite pair: `(same, opposite)` orientation, each
/// as `(coefficient, unit index)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct StrutProduct {
    pub pair: (Vertex, Vertex),
    pub same_orientation: (i64, usize),
    pub opposite_orientation: (i64, usize),
}

impl BoxKite {
    pub fn vertex(&self, v: Vertex) -> Assessor {
        self.vertices[v.index()]
    }

    pub fn inner_xor(&self) -> usize {
        self.vertices[0].inner_xor()
    }

    pub fn label_of(&self, a: Assessor) -> Option<Vertex> {
        Vertex::ALL.into_iter().find(|v| self.vertex(*v) == a)
    }

    pub fn strut_pairs(&self) -> [(Assessor, Assessor); 3] {
        STRUTS.map(|(u, v)| (self.vertex(u), self.vertex(v)))
    }

    pub fn edge_sign(&self, u: Vertex, v: Vertex) -> Option<Sign> {
        self.edges.iter().find(|e| (e.from == u && e.to == v) || (e.from == v && e.to == u)).map(|e| e.sign)
    }

    /// Count of `(+, -)` edges.
    pub fn edge_sign_census(&self) -> (usize, usize) {
        let minus = self.edges.iter().filter(|e| e.sign == Sign::Minus).count();
        (self.edges.len() - minus, minus)
    }

    pub fn sails(&self) -> [Sail; 4] {
        SAIL_VERTICES.map(|vs| {
            let minus_edges = [(0, 1), (1, 2), (0, 2)]
                .iter()
                .filter(|&&(x, y)| self.edge_sign(vs[x], vs[y]) == Some(Sign::Minus))
                .count();
            let kind = if minus_edges == 3 { SailKind::Zigzag } else { SailKind::Trefoil };
            Sail { vertices: vs, kind, minus_edges }
        })
    }

    pub fn vents(&self) -> [[Vertex; 3]; 4] {
        VENT_VERTICES
    }

    /// All 24 unordered diagonal pairs with vanishing product.
    pub fn dmz_pairings(&self) -> Vec<(Diagonal, Diagonal)> {
        self.edges.iter().flat_map(|e| edge_pairings(self.vertex(e.from), self.vertex(e.to), e.sign)).collect()
    }

    pub fn strut_products<E: BasisProduct + ?Sized>(&self, engine: &E) -> Result<[StrutProduct; 3]> {
        let single = |d1: Diagonal, d2: Diagonal| -> Result<(i64, usize)> {
            let p = dyad_product(engine, d1, d2)?;
            let mut terms = p.terms();
            match (terms.next(), terms.next()) {
                (Some((i, c)), None) => Ok((c, i)),
                _ => Err(Error::NotABoxKite("strut product is not a single unit")),
            }
        };
        let mut out = [StrutProduct { pair: (A, F), same_orientation: (0, 0), opposite_orientation: (0, 0) }; 3];
        for (slot, (u, v)) in out.iter_mut().zip(STRUTS) {
            let (a, b) = (self.vertex(u), self.vertex(v));
            slot.pair = (u, v);
            slot.same_orientation = single(a.diagonal(Orientation::Slash), b.diagonal(Orientation::Slash))?;
            slot.opposite_orientation = single(a.diagonal(Orientation::Slash), b.diagonal(Orientation::Backslash))?;
        }
        Ok(out)
    }
}

/// Per-strut-pair unit indices landed on by strut-opposite products.
pub fn strut_products(bk: &BoxKite) -> Result<[StrutProduct; 3]> {
    bk.strut_products(&Recursive(bk.level))
}
