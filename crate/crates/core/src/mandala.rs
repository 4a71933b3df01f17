//! Emanation tables ("sand mandalas") for strut ensembles above the sedenions.
//!
//! Rows and columns share one heading order: strut-opposite assessors sit in
//! mirrored positions, so both long diagonals are void. A cell holds the
//! edge sign and low index of the assessor emanated by its row and column
//! heads, or nothing when they do not form a DMZ.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::boxkite::{box_kite, kite_from_strut_pairs, BoxKite, Vertex};
use crate::cdp::{BasisProduct, Recursive};
use crate::error::{Error, Result};
use crate::level::Level;
use crate::unit::Sign;
use crate::zd::{dmz_edge, Assessor};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Cell {
    pub sign: Sign,
    pub lo: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EmanationTable {
    pub level: Level,
    pub strut: usize,
    pub headings: Vec<Assessor>,
    pub cells: Vec<Vec<Option<Cell>>>,
}

impl EmanationTable {
    pub fn size(&self) -> usize {
        self.headings.len()
    }

    pub fn filled_count(&self) -> usize {
        self.cells.iter().flatten().filter(|c| c.is_some()).count()
    }

    /// Index of the generator one level down (8 for pathion tables).
    pub fn quarter(&self) -> usize {
        self.level.dim() / 4
    }

    /// `strut - quarter` for sky-high tables, otherwise 0.
    pub fn excess(&self) -> usize {
        self.strut.saturating_sub(self.quarter())
    }

    pub fn inner_xor(&self) -> usize {
        self.headings[0].inner_xor()
    }

    pub fn cell(&self, r: usize, c: usize) -> Option<Cell> {
        self.cells.get(r)?.get(c).copied().flatten()
    }

    /// The full emanated assessor at `(r, c)`.
    pub fn emanated(&self, r: usize, c: usize) -> Option<Assessor> {
        self.cell(r, c).map(|cell| Assessor::new(cell.lo, cell.lo ^ self.inner_xor()))
    }

    pub fn quadrant(&self, r: usize, c: usize) -> Quadrant {
        let half = self.size() / 2;
        match (r < half, c < half) {
            (true, true) => Quadrant::NW,
            (true, false) => Quadrant::NE,
            (false, true) => Quadrant::SW,
            (false, false) => Quadrant::SE,
        }
    }

    /// Zero-based rows (and columns) of the border-distance-`X` ring.
    pub fn ring_lines(&self) -> Option<(usize, usize)> {
        let x = self.excess();
        (x > 0 && x <= self.size() / 2).then(|| (x - 1, self.size() - x))
    }

    pub fn filled(&self) -> impl Iterator<Item = (usize, usize, Cell)> + '_ {
        self.cells
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().enumerate().filter_map(move |(c, cell)| cell.map(|x| (r, c, x))))
    }
}

/// Heading order for a strut ensemble: the smaller member of each strut pair
/// `(lo, lo ^ strut)` in ascending order, then their partners in reverse.
pub fn heading_order(level: Level, strut: usize) -> Result<Vec<Assessor>> {
    let g = level.generator().ok_or(Error::InvalidStrut { strut, level: level.n() })?;
    if strut == 0 || strut >= g {
        return Err(Error::InvalidStrut { strut, level: level.n() });
    }
    let ix = g ^ strut;
    let left: BTreeSet<usize> = (1..g).filter(|&l| l != strut).map(|l| l.min(l ^ strut)).collect();
    let at = |lo: usize| Assessor::new(lo, lo ^ ix);
    Ok(left.iter().map(|&l| at(l)).chain(left.iter().rev().map(|&l| at(l ^ strut))).collect())
}

/// Pathion emanation table for `strut` in `1..=15`.
pub fn build_emanation_table(strut: usize) -> Result<EmanationTable> {
    build_emanation_table_at(&Recursive(Level::PATHIONS), strut)
}

/// Emanation table at the engine's level.
pub fn build_emanation_table_at<E: BasisProduct + ?Sized>(engine: &E, strut: usize) -> Result<EmanationTable> {
    let level = engine.level();
    let headings = heading_order(level, strut)?;
    let m = headings.len();
    let mut cells = vec![vec![None; m]; m];
    for r in 0..m {
        for c in 0..m {
            if r == c {
                continue;
            }
            cells[r][c] = dmz_edge(engine, headings[r], headings[c]).map(|e| Cell { sign: e.sign, lo: e.emanated.lo });
        }
    }
    Ok(EmanationTable { level, strut, headings, cells })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Quadrant {
    NW,
    NE,
    SW,
    SE,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct QuadrantSigns {
    pub nw: Sign,
    pub ne: Sign,
    pub sw: Sign,
    pub se: Sign,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SkyHighGeometry {
    pub excess: usize,
    pub ring_cells: usize,
    pub green_cells: usize,
    /// Distinct `(sign, lo)` entries outside the ring.
    pub green_entries: BTreeSet<(Sign, usize)>,
    /// Quadrants holding green entries equal to the quarter index.
    pub quarter_quadrants: BTreeSet<Quadrant>,
    /// Quadrants holding green entries equal to the excess.
    pub excess_quadrants: BTreeSet<Quadrant>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum TableKind {
    Full,
    Polarized(QuadrantSigns),
    SkyHigh(SkyHighGeometry),
    Irregular,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Classification {
    pub strut: usize,
    pub filled: usize,
    pub kind: TableKind,
}

pub fn classify_table(t: &EmanationTable) -> Classification {
    let m = t.size();
    let filled = t.filled_count();
    let kind = if filled == m * (m - 2) {
        match uniform_quadrant_signs(t) {
            Some(q) => TableKind::Polarized(q),
            None => TableKind::Full,
        }
    } else {
        sky_high_geometry(t).map_or(TableKind::Irregular, TableKind::SkyHigh)
    };
    Classification { strut: t.strut, filled, kind }
}

fn uniform_quadrant_signs(t: &EmanationTable) -> Option<QuadrantSigns> {
    let mut seen: [Option<Sign>; 4] = [None; 4];
    for (r, c, cell) in t.filled() {
        let slot = &mut seen[t.quadrant(r, c) as usize];
        match slot {
            None => *slot = Some(cell.sign),
            Some(s) if *s != cell.sign => return None,
            Some(_) => {}
        }
    }
    Some(QuadrantSigns { nw: seen[0]?, ne: seen[1]?, sw: seen[2]?, se: seen[3]? })
}

/// Checks the ring-plus-green layout: every non-void ring cell filled, and
/// every other filled cell holding the quarter index or the excess.
fn sky_high_geometry(t: &EmanationTable) -> Option<SkyHighGeometry> {
    let (a, b) = t.ring_lines()?;
    let m = t.size();
    let on_ring = |r: usize, c: usize| r == a || r == b || c == a || c == b;
    let void = |r: usize, c: usize| r == c || r + c == m - 1;
    let ring_slots = (0..m).flat_map(|r| (0..m).map(move |c| (r, c))).filter(|&(r, c)| on_ring(r, c) && !void(r, c));
    let mut ring_cells = 0;
    for (r, c) in ring_slots {
        t.cell(r, c)?;
        ring_cells += 1;
    }
    let (quarter, excess) = (t.quarter(), t.excess());
    let mut geo = SkyHighGeometry {
        excess,
        ring_cells,
        green_cells: 0,
        green_entries: BTreeSet::new(),
        quarter_quadrants: BTreeSet::new(),
        excess_quadrants: BTreeSet::new(),
    };
    for (r, c, cell) in t.filled().filter(|&(r, c, _)| !on_ring(r, c)) {
        geo.green_cells += 1;
        geo.green_entries.insert((cell.sign, cell.lo));
        if cell.lo == quarter {
            geo.quarter_quadrants.insert(t.quadrant(r, c));
        } else if cell.lo == excess {
            geo.excess_quadrants.insert(t.quadrant(r, c));
        } else {
            return None;
        }
    }
    Some(geo)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Arm {
    Row,
    Column,
}

/// One position of a folded ring arm: the four table cells stacked on it
/// and the target vertex whose indices they carry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FoldedCell {
    pub arm: Arm,
    pub position: usize,
    pub cells: [(usize, usize); 4],
    pub vertex: Vertex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FoldResult {
    pub strut: usize,
    pub target: BoxKite,
    pub overlay: Vec<FoldedCell>,
    pub green_units: BTreeSet<usize>,
}

/// Folds a pathion sky-high along its row and column mid-lines. On each ring
/// arm the six folded positions must stack exactly the `lo` and `hi` of the
/// six vertices of the sedenion box-kite whose strut is the excess.
pub fn fold(t: &EmanationTable) -> Result<FoldResult> {
    if t.level != Level::PATHIONS {
        return Err(Error::LevelMismatch { left: t.level.n(), right: Level::PATHIONS.n() });
    }
    let (a, b) = t.ring_lines().ok_or(Error::NotSkyHigh { strut: t.strut })?;
    let target = box_kite(t.excess())?;
    let m = t.size();
    let mut overlay = Vec::with_capacity(12);
    for arm in [Arm::Row, Arm::Column] {
        let mut used = BTreeSet::new();
        for p in (0..m / 2).filter(|&p| p != a) {
            let mut cells = [(a, p), (a, m - 1 - p), (b, p), (b, m - 1 - p)];
            if arm == Arm::Column {
                cells = cells.map(|(r, c)| (c, r));
            }
            let mut units = BTreeSet::new();
            for (r, c) in cells {
                units.insert(t.cell(r, c).ok_or(Error::FoldMismatch("empty ring cell"))?.lo);
            }
            let vertex = Vertex::ALL
                .into_iter()
                .find(|&v| {
                    let x = target.vertex(v);
                    units.len() == 2 && units.contains(&x.lo) && units.contains(&x.hi)
                })
                .ok_or(Error::FoldMismatch("folded cell is not a target vertex"))?;
            if !used.insert(vertex) {
                return Err(Error::FoldMismatch("target vertex covered twice"));
            }
            overlay.push(FoldedCell { arm, position: p, cells, vertex });
        }
    }
    let green_units =
        t.filled().filter(|&(r, c, _)| !(r == a || r == b || c == a || c == b)).map(|(_, _, cell)| cell.lo).collect();
    Ok(FoldResult { strut: t.strut, target, overlay, green_units })
}

/// Splits a pathion sky-high ensemble into its three box-kites, ordered by
/// the low index of vertex `A`.
pub fn partition_sky_high(strut: usize) -> Result<Vec<BoxKite>> {
    partition_sky_high_at(&Recursive(Level::PATHIONS), strut)
}

pub fn partition_sky_high_at<E: BasisProduct + ?Sized>(engine: &E, strut: usize) -> Result<Vec<BoxKite>> {
    let level = engine.level();
    let quarter = level.dim() / 4;
    if strut <= quarter {
        return Err(Error::NotSkyHigh { strut });
    }
    let headings = heading_order(level, strut)?;
    let half = headings.len() / 2;
    let pairs: Vec<(Assessor, Assessor)> = (0..half).map(|i| (headings[i], headings[headings.len() - 1 - i])).collect();
    let cross_dmz = |p: &(Assessor, Assessor), q: &(Assessor, Assessor)| {
        [p.0, p.1].iter().all(|&x| [q.0, q.1].iter().all(|&y| dmz_edge(engine, x, y).is_some()))
    };
    let mut kites = Vec::new();
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            if !cross_dmz(&pairs[i], &pairs[j]) {
                continue;
            }
            for k in j + 1..pairs.len() {
                if cross_dmz(&pairs[i], &pairs[k]) && cross_dmz(&pairs[j], &pairs[k]) {
                    kites.push(kite_from_strut_pairs(engine, strut, [pairs[i], pairs[j], pairs[k]])?);
                }
            }
        }
    }
    kites.sort_by_key(|k| k.vertices[0].lo);
    Ok(kites)
}
