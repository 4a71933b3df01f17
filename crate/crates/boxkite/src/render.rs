//! Text, CSV and SVG renderings. Hex digits appear only in mandala text,
//! CSV and SVG; JSON keeps decimal indices.

use std::fmt::Write as _;

use boxkite_core::boxkite::STRUTS;
use boxkite_core::census::{CensusReport, ClaimKind};
use boxkite_core::mandala::{classify_table, Cell, EmanationTable, TableKind};
use boxkite_core::zd::Assessor;
use boxkite_core::{Level, Sign, Vertex};

use crate::doc::{BoxKiteDoc, FoldDoc, HarmonicsDoc, PartitionDoc, TableDoc, TripletsDoc};

#[derive(Debug, thiserror::Error)]
pub enum ParseError {
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("empty document")]
    Empty,
    #[error("bad header entry {0:?}")]
    Header(String),
    #[error("bad cell {0:?}")]
    Cell(String),
    #[error("row {row} has {got} cells, expected {want}")]
    RowWidth { row: usize, got: usize, want: usize },
    #[error("headings do not describe a strut ensemble")]
    Headings,
}

fn csv_writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new())
}

fn finish(w: csv::Writer<Vec<u8>>) -> Vec<u8> {
    w.into_inner().expect("writing to memory cannot fail")
}

fn hex(i: usize) -> String {
    format!("{i:X}")
}

fn cell_glyph(c: Option<Cell>) -> String {
    match c {
        None => String::new(),
        Some(Cell { sign: Sign::Minus, lo }) => format!("-{}", hex(lo)),
        Some(Cell { sign: Sign::Plus, lo }) => hex(lo),
    }
}

// Multiplication tables

pub fn table_text(t: &TableDoc) -> String {
    let w = t.rows.len().saturating_sub(1).to_string().len() + 2;
    let mut out = String::new();
    for row in &t.rows {
        let line: Vec<String> = row.iter().map(|u| format!("{:>w$}", u.to_string())).collect();
        out.push_str(&line.join(""));
        out.push('\n');
    }
    out
}

pub fn table_csv(t: &TableDoc) -> Vec<u8> {
    let mut w = csv_writer();
    for row in &t.rows {
        w.write_record(row.iter().map(ToString::to_string)).expect("in-memory csv");
    }
    finish(w)
}

const CELL: usize = 28;
const MARGIN: usize = 36;

fn svg_open(out: &mut String, width: usize, height: usize) {
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="monospace" font-size="11">"#
    );
}

fn svg_rect(out: &mut String, x: usize, y: usize, fill: &str) {
    let _ = writeln!(
        out,
        r##"<rect x="{x}" y="{y}" width="{CELL}" height="{CELL}" fill="{fill}" stroke="#999999" stroke-width="0.5"/>"##
    );
}

fn svg_text(out: &mut String, x: usize, y: usize, text: &str) {
    let _ = writeln!(out, r#"<text x="{x}" y="{y}" text-anchor="middle" dominant-baseline="central">{text}</text>"#);
}

pub fn table_svg(t: &TableDoc) -> String {
    let n = t.rows.len();
    let side = MARGIN + n * CELL + 8;
    let mut out = String::new();
    svg_open(&mut out, side, side);
    for i in 0..n {
        svg_text(&mut out, MARGIN + i * CELL + CELL / 2, MARGIN / 2, &i.to_string());
        svg_text(&mut out, MARGIN / 2, MARGIN + i * CELL + CELL / 2, &i.to_string());
    }
    for (i, row) in t.rows.iter().enumerate() {
        for (j, u) in row.iter().enumerate() {
            let (x, y) = (MARGIN + j * CELL, MARGIN + i * CELL);
            svg_rect(&mut out, x, y, if u.sign.is_negative() { "#f4c7c3" } else { "#ffffff" });
            svg_text(&mut out, x + CELL / 2, y + CELL / 2, &u.to_string());
        }
    }
    out.push_str("</svg>\n");
    out
}

// Emanation tables

pub fn mandala_text(t: &EmanationTable) -> String {
    let m = t.size();
    let mut out = String::new();
    let _ = writeln!(out, "strut {} at {}, inner xor {}", t.strut, t.level, t.inner_xor());
    let _ = write!(out, "{:>4}", "");
    for h in &t.headings {
        let _ = write!(out, "{:>4}", hex(h.lo));
    }
    out.push('\n');
    for r in 0..m {
        let _ = write!(out, "{:>4}", hex(t.headings[r].lo));
        for c in 0..m {
            let g = if r == c { ".".to_string() } else { cell_glyph(t.cell(r, c)) };
            let _ = write!(out, "{:>4}", if g.is_empty() { "_".to_string() } else { g });
        }
        out.push('\n');
    }
    let class = classify_table(t);
    let _ = writeln!(out, "filled {}: {}", class.filled, kind_label(&class.kind));
    out
}

fn kind_label(k: &TableKind) -> String {
    match k {
        TableKind::Full => "full".into(),
        TableKind::Polarized(q) => format!("polarized NW {} NE {} SW {} SE {}", q.nw, q.ne, q.sw, q.se),
        TableKind::SkyHigh(s) => {
            format!("sky-high X={} ring {} green {}", s.excess, s.ring_cells, s.green_cells)
        }
        TableKind::Irregular => "irregular".into(),
    }
}

/// Header of heading lo-indices, then one row per heading.
pub fn mandala_csv(t: &EmanationTable) -> Vec<u8> {
    let mut w = csv_writer();
    w.write_record(t.headings.iter().map(|h| hex(h.lo))).expect("in-memory csv");
    for row in &t.cells {
        w.write_record(row.iter().map(|&c| cell_glyph(c))).expect("in-memory csv");
    }
    finish(w)
}

fn parse_hex(s: &str) -> Option<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_hexdigit()) {
        return None;
    }
    usize::from_str_radix(s, 16).ok()
}

fn parse_cell(s: &str) -> Result<Option<Cell>, ParseError> {
    if s.is_empty() {
        return Ok(None);
    }
    let bad = || ParseError::Cell(s.to_string());
    let mut chars = s.chars();
    let (sign, rest) = match chars.next().and_then(Sign::from_symbol) {
        Some(sign) => (sign, chars.as_str()),
        None => (Sign::Plus, s),
    };
    Ok(Some(Cell { sign, lo: parse_hex(rest).ok_or_else(bad)? }))
}

/// Inverse of [`mandala_csv`]. The strut is the one index in `1..g`
/// missing from the headings, where `g = size + 2`.
pub fn parse_mandala_csv(bytes: &[u8]) -> Result<EmanationTable, ParseError> {
    let mut rdr = csv::ReaderBuilder::new().has_headers(false).flexible(true).from_reader(bytes);
    let mut records = rdr.records();
    let header = records.next().ok_or(ParseError::Empty)??;
    let los: Vec<usize> = header
        .iter()
        .map(|h| parse_hex(h).ok_or_else(|| ParseError::Header(h.to_string())))
        .collect::<Result<_, _>>()?;
    let m = los.len();
    let g = m + 2;
    if !g.is_power_of_two() || g < 8 {
        return Err(ParseError::Headings);
    }
    let missing: Vec<usize> = (1..g).filter(|i| !los.contains(i)).collect();
    let [strut] = missing[..] else { return Err(ParseError::Headings) };
    let level = Level::new(g.trailing_zeros() + 1).map_err(|_| ParseError::Headings)?;
    let ix = g ^ strut;
    let headings: Vec<Assessor> = los.iter().map(|&lo| Assessor::new(lo, lo ^ ix)).collect();
    let mut cells = Vec::with_capacity(m);
    for (row, rec) in records.enumerate() {
        let rec = rec?;
        if rec.len() != m {
            return Err(ParseError::RowWidth { row, got: rec.len(), want: m });
        }
        cells.push(rec.iter().map(parse_cell).collect::<Result<Vec<_>, _>>()?);
    }
    if cells.len() != m {
        return Err(ParseError::RowWidth { row: cells.len(), got: 0, want: m });
    }
    Ok(EmanationTable { level, strut, headings, cells })
}

/// Colour key: white on the void diagonals, gray where a cell is expected
/// but empty, green for the strut-constant units of a sky-high table, red
/// for every other filled cell.
pub fn mandala_svg(t: &EmanationTable) -> String {
    let m = t.size();
    let green: Vec<usize> = if t.excess() > 0 { vec![t.quarter(), t.excess()] } else { Vec::new() };
    let width = MARGIN + m * CELL + 8;
    let height = width + 70;
    let mut out = String::new();
    svg_open(&mut out, width, height);
    let _ = writeln!(out, "<title>emanation table, strut {}</title>", t.strut);
    for (i, h) in t.headings.iter().enumerate() {
        svg_text(&mut out, MARGIN + i * CELL + CELL / 2, MARGIN / 2, &hex(h.lo));
        svg_text(&mut out, MARGIN / 2, MARGIN + i * CELL + CELL / 2, &hex(h.lo));
    }
    for r in 0..m {
        for c in 0..m {
            let (x, y) = (MARGIN + c * CELL, MARGIN + r * CELL);
            let void = r == c || t.headings[r].lo ^ t.headings[c].lo == t.strut;
            let cell = t.cell(r, c);
            let fill = match cell {
                _ if void => "#ffffff",
                None => "#bdbdbd",
                Some(x) if green.contains(&x.lo) => "#4caf50",
                Some(_) => "#e53935",
            };
            svg_rect(&mut out, x, y, fill);
            if let Some(x0) = cell {
                svg_text(&mut out, x + CELL / 2, y + CELL / 2, &cell_glyph(Some(x0)));
            }
        }
    }
    let ly = MARGIN + m * CELL + 20;
    for (k, (fill, label)) in
        [("#ffffff", "void"), ("#bdbdbd", "empty"), ("#4caf50", "strut constant"), ("#e53935", "filled")]
            .iter()
            .enumerate()
    {
        let x = 8 + k * 120;
        let _ = writeln!(out, r##"<rect x="{x}" y="{ly}" width="14" height="14" fill="{fill}" stroke="#999999"/>"##);
        let _ = writeln!(out, r#"<text x="{}" y="{}">{label}</text>"#, x + 20, ly + 11);
    }
    let _ = writeln!(
        out,
        r#"<text x="8" y="{}">sign: "-D" is a negative edge (opposite diagonals vanish), "D" is positive (same diagonals vanish)</text>"#,
        ly + 40
    );
    out.push_str("</svg>\n");
    out
}

// Other structures

pub fn triplets_text(d: &TripletsDoc) -> String {
    let mut out = format!("{} triplets at {}\n", d.count, d.level);
    for t in &d.triplets {
        let _ = writeln!(out, "{t}");
    }
    out
}

pub fn triplets_csv(d: &TripletsDoc) -> Vec<u8> {
    let mut w = csv_writer();
    w.write_record(["a", "b", "c"]).expect("in-memory csv");
    for t in &d.triplets {
        w.write_record([t.a, t.b, t.c].map(|i| i.to_string())).expect("in-memory csv");
    }
    finish(w)
}

fn boxkite_lines(out: &mut String, d: &BoxKiteDoc) {
    let _ = writeln!(out, "box-kite strut {} at {}, inner xor {}", d.strut, d.level, d.inner_xor);
    for (v, a) in &d.vertices {
        let _ = writeln!(out, "  {v} {a}");
    }
    let struts: Vec<String> = STRUTS.iter().map(|(u, v)| format!("{u}{v}")).collect();
    let _ = writeln!(out, "  struts {}", struts.join(" "));
    for e in &d.edges {
        let _ = writeln!(out, "  edge {}{} {}", e.from, e.to, e.sign);
    }
    for s in &d.sails {
        let [a, b, c] = s.vertices;
        let _ = writeln!(out, "  sail {a}{b}{c} {:?}", s.kind);
    }
    for p in &d.strut_products {
        let _ = writeln!(
            out,
            "  strut {}{} same {:+}e{} opposite {:+}e{}",
            p.pair.0,
            p.pair.1,
            p.same_orientation.0,
            p.same_orientation.1,
            p.opposite_orientation.0,
            p.opposite_orientation.1
        );
    }
}

pub fn boxkite_text(d: &BoxKiteDoc) -> String {
    let mut out = String::new();
    boxkite_lines(&mut out, d);
    out
}

pub fn boxkite_csv(d: &BoxKiteDoc) -> Vec<u8> {
    let mut w = csv_writer();
    w.write_record(["vertex", "lo", "hi"]).expect("in-memory csv");
    for (v, a) in &d.vertices {
        w.write_record([v.to_string(), a.lo.to_string(), a.hi.to_string()]).expect("in-memory csv");
    }
    finish(w)
}

pub fn fold_text(d: &FoldDoc) -> String {
    let units: Vec<String> = d.green_units.iter().map(ToString::to_string).collect();
    let mut out = format!("fold of strut {} (green units {})\n", d.strut, units.join(", "));
    for f in &d.overlay {
        let cells: Vec<String> = f.cells.iter().map(|(r, c)| format!("({r},{c})")).collect();
        let _ = writeln!(out, "  {:?} {} -> {} {}", f.arm, f.position, f.vertex, cells.join(" "));
    }
    boxkite_lines(&mut out, &d.target);
    out
}

pub fn fold_csv(d: &FoldDoc) -> Vec<u8> {
    let mut w = csv_writer();
    w.write_record(["arm", "position", "vertex", "lo", "hi", "cells"]).expect("in-memory csv");
    for f in &d.overlay {
        let a = d.target.vertices[&f.vertex];
        let cells: Vec<String> = f.cells.iter().map(|(r, c)| format!("{r}:{c}")).collect();
        w.write_record([
            format!("{:?}", f.arm).to_lowercase(),
            f.position.to_string(),
            f.vertex.to_string(),
            a.lo.to_string(),
            a.hi.to_string(),
            cells.join(" "),
        ])
        .expect("in-memory csv");
    }
    finish(w)
}

pub fn partition_text(d: &PartitionDoc) -> String {
    let mut out = format!("strut {} splits into {} box-kites\n", d.strut, d.kites.len());
    for k in &d.kites {
        let row: Vec<String> = k.vertices.values().map(ToString::to_string).collect();
        let _ = writeln!(out, "  {}", row.join(" "));
    }
    out
}

pub fn partition_csv(d: &PartitionDoc) -> Vec<u8> {
    let mut w = csv_writer();
    w.write_record(["kite", "vertex", "lo", "hi"]).expect("in-memory csv");
    for (i, k) in d.kites.iter().enumerate() {
        for (v, a) in &k.vertices {
            w.write_record([i.to_string(), v.to_string(), a.lo.to_string(), a.hi.to_string()]).expect("in-memory csv");
        }
    }
    finish(w)
}

pub fn harmonics_text(d: &HarmonicsDoc) -> String {
    let mut out = format!("strut {} harmonic k={} (shift {}) at {}\n", d.strut, d.k, d.shift, d.level);
    let row: Vec<String> = Vertex::ALL.iter().map(|v| format!("{v}{}", d.vertices[v])).collect();
    let _ = writeln!(out, "  {}", row.join(" "));
    for e in &d.edges {
        match e.edge {
            Some(x) => {
                let _ = writeln!(out, "  edge {}{} {} -> {}", e.from, e.to, x.sign, x.emanated);
            }
            None => {
                let _ = writeln!(out, "  edge {}{} none", e.from, e.to);
            }
        }
    }
    for c in d.cross.iter().flatten() {
        let sails: Vec<String> = c.sails.iter().map(|(b, c)| format!("{b}{c}")).collect();
        let _ = writeln!(out, "  cross {}: {}", c.first, sails.join(" "));
    }
    for m in &d.misprints {
        let computed = m.computed.map_or("none".to_string(), |(b, c)| format!("{b}{c}"));
        let _ = writeln!(out, "  printed {:?}{:?} computed {computed}", m.printed.0, m.printed.1);
    }
    out
}

pub fn harmonics_csv(d: &HarmonicsDoc) -> Vec<u8> {
    let mut w = csv_writer();
    w.write_record(["from", "to", "sign", "emanated_lo", "emanated_hi"]).expect("in-memory csv");
    for e in &d.edges {
        let tail = match e.edge {
            Some(x) => [x.sign.to_string(), x.emanated.lo.to_string(), x.emanated.hi.to_string()],
            None => Default::default(),
        };
        let [s, lo, hi] = tail;
        w.write_record([e.from.to_string(), e.to.to_string(), s, lo, hi]).expect("in-memory csv");
    }
    finish(w)
}

pub fn census_text(r: &CensusReport) -> String {
    let mut out = format!("census at {}\n", r.level);
    let _ = writeln!(out, "  zero-divisor diagonals {}", r.zd_diagonal_count);
    let _ = writeln!(out, "  triplets {}", r.triplet_count);
    for (k, v) in &r.formula_predictions {
        let _ = writeln!(out, "  prediction {k} {v}");
    }
    for (s, n) in &r.per_strut_pairings {
        let _ = writeln!(out, "  strut {s:>3} pairings {n}");
    }
    for c in &r.claims {
        let tag = match (c.kind, c.passed) {
            (ClaimKind::Check, true) => "PASS",
            (ClaimKind::Check, false) => "FAIL",
            (ClaimKind::Report, true) => "same",
            (ClaimKind::Report, false) => "diff",
        };
        let _ =
            writeln!(out, "  [{tag}] {}: {} (expected {}, observed {})", c.id, c.description, c.expected, c.observed);
    }
    for d in &r.discrepancies {
        let _ = writeln!(out, "  discrepancy: {d}");
    }
    if !r.claims.is_empty() {
        let fails = r.failures().count();
        let _ = writeln!(out, "{} checks failed", fails);
    }
    out
}

pub fn census_csv(r: &CensusReport) -> Vec<u8> {
    let mut w = csv_writer();
    w.write_record(["id", "kind", "expected", "observed", "passed"]).expect("in-memory csv");
    w.write_record(["zd_diagonal_count", "report", "", &r.zd_diagonal_count.to_string(), "true"])
        .expect("in-memory csv");
    w.write_record(["triplet_count", "report", "", &r.triplet_count.to_string(), "true"]).expect("in-memory csv");
    for (s, n) in &r.per_strut_pairings {
        w.write_record([format!("pairings-s{s}"), "report".into(), String::new(), n.to_string(), "true".into()])
            .expect("in-memory csv");
    }
    for c in &r.claims {
        let kind = match c.kind {
            ClaimKind::Check => "check",
            ClaimKind::Report => "report",
        };
        w.write_record([c.id.as_str(), kind, &c.expected, &c.observed, if c.passed { "true" } else { "false" }])
            .expect("in-memory csv");
    }
    finish(w)
}
