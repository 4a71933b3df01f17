//! JSON documents. Each carries a `kind` tag and a `data` payload and
//! round-trips through serde unchanged.

use std::collections::{BTreeMap, BTreeSet};

use boxkite_core::boxkite::{KiteEdge, Sail, StrutProduct};
use boxkite_core::census::CensusReport;
use boxkite_core::mandala::{Classification, EmanationTable, FoldResult, FoldedCell};
use boxkite_core::midden::{CrossSails, HarmonicFamily, SailMisprint};
use boxkite_core::triplet::NatoTriplet;
use boxkite_core::zd::{Assessor, Edge};
use boxkite_core::{BoxKite, Level, MultiplicationTable, SignedUnit, Vertex};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "data", rename_all = "lowercase")]
pub enum Document {
    Table(TableDoc),
    Triplets(TripletsDoc),
    Boxkite(BoxKiteDoc),
    Mandala(MandalaDoc),
    Fold(FoldDoc),
    Partition(PartitionDoc),
    Harmonics(HarmonicsDoc),
    Census(CensusReport),
    Verify(CensusReport),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDoc {
    pub level: Level,
    pub rows: Vec<Vec<SignedUnit>>,
}

impl From<&MultiplicationTable> for TableDoc {
    fn from(t: &MultiplicationTable) -> Self {
        TableDoc { level: t.level(), rows: t.rows().map(<[SignedUnit]>::to_vec).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripletsDoc {
    pub level: Level,
    pub count: usize,
    pub triplets: Vec<NatoTriplet>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxKiteDoc {
    pub strut: usize,
    pub level: Level,
    pub inner_xor: usize,
    pub vertices: BTreeMap<Vertex, Assessor>,
    pub edges: Vec<KiteEdge>,
    pub sails: Vec<Sail>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub strut_products: Vec<StrutProduct>,
}

impl BoxKiteDoc {
    pub fn new(bk: &BoxKite, strut_products: Vec<StrutProduct>) -> Self {
        BoxKiteDoc {
            strut: bk.strut,
            level: bk.level,
            inner_xor: bk.inner_xor(),
            vertices: Vertex::ALL.into_iter().map(|v| (v, bk.vertex(v))).collect(),
            edges: bk.edges.clone(),
            sails: bk.sails().to_vec(),
            strut_products,
        }
    }

    /// The box-kite this document describes.
    pub fn to_box_kite(&self) -> Option<BoxKite> {
        let mut vertices = [Assessor { lo: 0, hi: 0 }; 6];
        for v in Vertex::ALL {
            vertices[v.index()] = *self.vertices.get(&v)?;
        }
        Some(BoxKite { strut: self.strut, level: self.level, vertices, edges: self.edges.clone() })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MandalaDoc {
    pub table: EmanationTable,
    pub classification: Classification,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoldDoc {
    pub strut: usize,
    pub target: BoxKiteDoc,
    pub overlay: Vec<FoldedCell>,
    pub green_units: BTreeSet<usize>,
}

impl From<&FoldResult> for FoldDoc {
    fn from(f: &FoldResult) -> Self {
        FoldDoc {
            strut: f.strut,
            target: BoxKiteDoc::new(&f.target, Vec::new()),
            overlay: f.overlay.clone(),
            green_units: f.green_units.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionDoc {
    pub strut: usize,
    pub kites: Vec<BoxKiteDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HarmonicEdge {
    pub from: Vertex,
    pub to: Vertex,
    pub edge: Option<Edge>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HarmonicsDoc {
    pub strut: usize,
    pub k: usize,
    pub shift: usize,
    pub level: Level,
    pub vertices: BTreeMap<Vertex, Assessor>,
    pub edges: Vec<HarmonicEdge>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cross: Option<Vec<CrossSails>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub misprints: Vec<SailMisprint>,
}

impl HarmonicsDoc {
    pub fn new(f: &HarmonicFamily, edges: Vec<HarmonicEdge>) -> Self {
        HarmonicsDoc {
            strut: f.base.strut,
            k: f.k,
            shift: f.shift,
            level: f.level,
            vertices: Vertex::ALL.into_iter().map(|v| (v, f.vertex(v))).collect(),
            edges,
            cross: None,
            misprints: Vec::new(),
        }
    }
}
