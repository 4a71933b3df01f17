//! Acceptance suite: one line per criterion, non-zero exit on any failure.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use boxkite_core::boxkite::{box_kite, strut_products, SailKind, Vertex};
use boxkite_core::census::{dmz_pairing_census, zd_diagonal_census, zd_diagonal_census_within};
use boxkite_core::golden;
use boxkite_core::mandala::{
    build_emanation_table, classify_table, fold, partition_sky_high, Quadrant, QuadrantSigns, TableKind,
};
use boxkite_core::midden::{
    check_printed_sails, cross_harmonic_sails, harmonic_family, kite_chain_diagonal_count, moreno_prediction,
};
use boxkite_core::triplet::nato_triplets;
use boxkite_core::zd::{assessors_for_strut, dmz_edge, dyad_product, dyad_vanishes, Assessor, Orientation};
use boxkite_core::{build_table, BasisProduct, Level, Recursive, Sign, SignedUnit};
use rand::rngs::SmallRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn golden_table() -> Outcome {
    let t = build_table(Level::SEDENIONS);
    let rows = golden::sedenion_rows();
    let mut matched = 0;
    for (i, row) in rows.iter().enumerate() {
        for (j, &u) in row.iter().enumerate() {
            ensure!(t.product(i, j) == u, "cell ({i},{j}): built {:?}, printed {:?}", t.product(i, j), u);
            matched += 1;
        }
    }
    ensure!(matched == 256, "only {matched} cells compared");
    Ok("256/256 cells".into())
}

fn oracle_equivalence() -> Outcome {
    let mut cells = 0usize;
    for n in 0..=6 {
        let level = Level::new(n).unwrap();
        let t = build_table(level);
        let r = Recursive(level);
        for i in 0..level.dim() {
            for j in 0..level.dim() {
                ensure!(t.product(i, j) == r.product(i, j), "n={n} ({i},{j})");
                cells += 1;
            }
        }
    }
    let mut rng = SmallRng::seed_from_u64(0x5eed_b0c5);
    for n in [7, 8] {
        let level = Level::new(n).unwrap();
        let t = build_table(level);
        let r = Recursive(level);
        for _ in 0..100_000 {
            let (i, j) = (rng.gen_range(0..level.dim()), rng.gen_range(0..level.dim()));
            ensure!(t.product(i, j) == r.product(i, j), "n={n} ({i},{j})");
        }
    }
    Ok(format!("{cells} exhaustive cells, 2 x 10^5 random pairs"))
}

fn box_kite_atlas() -> Outcome {
    for (strut, row) in golden::PRINTED_BOX_KITES {
        let bk = box_kite(strut).map_err(|e| e.to_string())?;
        ensure!(bk.vertices.map(|a| (a.lo, a.hi)) == row, "strut {strut} vertices {:?}", bk.vertices);
        ensure!(bk.edge_sign_census() == (6, 6), "strut {strut} edge signs {:?}", bk.edge_sign_census());
        let sails = bk.sails();
        let zigzags = sails.iter().filter(|s| s.kind == SailKind::Zigzag && s.minus_edges == 3).count();
        let trefoils = sails.iter().filter(|s| s.kind == SailKind::Trefoil && s.minus_edges == 1).count();
        ensure!((zigzags, trefoils) == (1, 3), "strut {strut} sails {sails:?}");
        ensure!(sails[0].vertices == [Vertex::A, Vertex::B, Vertex::C], "zigzag is not ABC");
        let mut landed = BTreeSet::new();
        for p in strut_products(&bk).map_err(|e| e.to_string())? {
            landed.insert(p.same_orientation.1);
            landed.insert(p.opposite_orientation.1);
        }
        ensure!(landed == BTreeSet::from([8, strut]), "strut {strut} products land on {landed:?}");
    }
    Ok("7 box-kites".into())
}

fn worked_dmz() -> Outcome {
    let s = build_table(Level::SEDENIONS);
    let (b, c) = (Assessor::new(4, 10), Assessor::new(7, 9));
    let p = dyad_product(&s, b.diagonal(Orientation::Slash), c.diagonal(Orientation::Backslash))
        .map_err(|e| e.to_string())?;
    ensure!(p.is_zero(), "product is {p}");
    let e = dmz_edge(&s, b, c).ok_or("no edge")?;
    ensure!(e.sign == Sign::Minus, "edge sign {}", e.sign);
    ensure!(e.emanated == Assessor::new(3, 13), "emanated {}", e.emanated);
    Ok("(e4+e10)(e7-e9) = 0, emanates (3, 13), sign -".into())
}

fn counts() -> Outcome {
    for (n, want) in [(3, 7), (4, 35), (5, 155), (6, 651)] {
        let got = nato_triplets(&build_table(Level::new(n).unwrap())).len();
        ensure!(got == want, "n={n}: {got} triplets");
    }
    let s = build_table(Level::SEDENIONS);
    let p = build_table(Level::PATHIONS);
    ensure!(zd_diagonal_census(&s) == 84, "n=4 census {}", zd_diagonal_census(&s));
    ensure!(zd_diagonal_census(&p) == 588, "n=5 census {}", zd_diagonal_census(&p));
    ensure!(zd_diagonal_census_within(&p, |a| a.hi < 16) == 84, "sedenion subset census");
    for strut in 1..16 {
        let got = dmz_pairing_census(&p, strut).map_err(|e| e.to_string())?;
        let want = if strut <= 8 { 168 } else { 72 };
        ensure!(got == want, "n=5 strut {strut}: {got} pairings");
    }
    for strut in 1..8 {
        let got = dmz_pairing_census(&s, strut).map_err(|e| e.to_string())?;
        ensure!(got == 24, "n=4 strut {strut}: {got} pairings");
        ensure!(box_kite(strut).unwrap().dmz_pairings().len() == 24, "box-kite {strut} pairings");
    }
    Ok("7/35/155/651, 84, 588, 168|72, 24".into())
}

fn mandala_geometry() -> Outcome {
    let c8 = classify_table(&build_emanation_table(8).map_err(|e| e.to_string())?);
    let want = QuadrantSigns { nw: Sign::Minus, ne: Sign::Plus, sw: Sign::Plus, se: Sign::Minus };
    ensure!(c8.filled == 168 && c8.kind == TableKind::Polarized(want), "strut 8: {c8:?}");
    for strut in 9..16 {
        let t = build_emanation_table(strut).map_err(|e| e.to_string())?;
        let x = strut - 8;
        let c = classify_table(&t);
        let TableKind::SkyHigh(g) = c.kind else { return Err(format!("strut {strut}: {:?}", c.kind)) };
        ensure!(t.ring_lines() == Some((x - 1, 14 - x)), "strut {strut} ring at {:?}", t.ring_lines());
        ensure!(
            g.ring_cells == 48 && g.green_cells == 24,
            "strut {strut}: {} ring, {} green",
            g.ring_cells,
            g.green_cells
        );
        ensure!(
            g.green_entries == BTreeSet::from([(Sign::Minus, 8), (Sign::Plus, x)]),
            "strut {strut} green entries {:?}",
            g.green_entries
        );
        ensure!(
            g.quarter_quadrants == BTreeSet::from([Quadrant::NE, Quadrant::SW]),
            "strut {strut}: 8s in {:?}",
            g.quarter_quadrants
        );
        ensure!(
            g.excess_quadrants == BTreeSet::from([Quadrant::NW, Quadrant::SE]),
            "strut {strut}: Xs in {:?}",
            g.excess_quadrants
        );
    }
    Ok("7 sky-highs: 48 ring + 24 green; strut 8 polarized".into())
}

fn fold_and_partition() -> Outcome {
    let t = build_emanation_table(11).map_err(|e| e.to_string())?;
    let f = fold(&t).map_err(|e| e.to_string())?;
    ensure!(f.target.strut == 3, "folded onto strut {}", f.target.strut);
    let got: BTreeSet<_> = f.target.vertices.iter().map(|a| (a.lo, a.hi)).collect();
    ensure!(got == BTreeSet::from([(2, 9), (1, 10), (7, 12), (6, 13), (5, 14), (4, 15)]), "fold target {got:?}");
    ensure!(f.green_units == BTreeSet::from([3, 8]), "green units {:?}", f.green_units);
    let kites = partition_sky_high(11).map_err(|e| e.to_string())?;
    let rows: Vec<_> = kites.iter().map(|k| k.vertices.map(|a| (a.lo, a.hi))).collect();
    ensure!(rows == golden::STRUT_11_PARTITION, "partition rows {rows:?}");
    let mut all = BTreeSet::new();
    for k in &kites {
        let ps = k.dmz_pairings();
        ensure!(ps.len() == 24, "kite with {} pairings", ps.len());
        all.extend(ps);
    }
    ensure!(all.len() == 72, "union holds {} pairings", all.len());
    Ok("fold -> strut 3; 24 + 24 + 24 = 72".into())
}

fn middens() -> Outcome {
    let bk = box_kite(3).map_err(|e| e.to_string())?;
    for (k, row) in (1..=3).zip(golden::STRUT_3_HARMONICS) {
        let f = harmonic_family(&bk, k).map_err(|e| e.to_string())?;
        let got: Vec<_> = f.strut_pairs().iter().flat_map(|(a, b)| [(a.lo, a.hi), (b.lo, b.hi)]).collect();
        ensure!(got == row, "k={k}: {got:?}");
    }
    let c = build_table(Level::CHINGONS);
    let cross = cross_harmonic_sails(&c, &bk).map_err(|e| e.to_string())?;
    let first = cross.iter().find(|x| x.first == Assessor::new(17, 26)).ok_or("(17, 26) missing")?;
    ensure!(first.sails.len() == 4, "{} sails", first.sails.len());
    for &(b, d) in &first.sails {
        let a = first.first;
        ensure!(
            dmz_edge(&c, a, b).is_some() && dmz_edge(&c, a, d).is_some() && dmz_edge(&c, b, d).is_some(),
            "sail {a} {b} {d} not pairwise DMZ"
        );
    }
    let misprints = check_printed_sails(first, &golden::PRINTED_CROSS_SAILS);
    ensure!(misprints.len() == 1, "{} misprints", misprints.len());
    let m = misprints[0];
    ensure!(m.printed.0 == (37, 47), "misprint at {:?}", m.printed);
    let fix = m.computed.ok_or("no computed sail for the misprint")?;
    ensure!(fix.0 == Assessor::new(37, 46), "computed {}", fix.0);
    let kc = kite_chain_diagonal_count(&c).map_err(|e| e.to_string())?;
    let moreno = moreno_prediction(Level::CHINGONS);
    ensure!(kc == 336 && moreno == 252, "kite chain {kc}, Moreno {moreno}");
    Ok(format!("printed (37, 47) reported as (37, 46); kite chain {kc} vs Moreno {moreno}"))
}

fn property_suites() -> Outcome {
    let mut checks = 0usize;
    for n in 0..=5 {
        let level = Level::new(n).unwrap();
        let t = build_table(level);
        for i in 0..level.dim() {
            for j in 0..level.dim() {
                let u = t.product(i, j);
                ensure!(u.index == i ^ j, "xor law n={n} ({i},{j})");
                if i != 0 && j != 0 && i != j {
                    ensure!(t.product(j, i) == -u, "anticommutation n={n} ({i},{j})");
                } else if i == j && i != 0 {
                    ensure!(u == SignedUnit::neg(0), "square n={n} {i}");
                }
                checks += 1;
            }
        }
    }
    for level in [Level::SEDENIONS, Level::PATHIONS] {
        let t = build_table(level);
        let dim = level.dim();
        for lo in 1..dim {
            for hi in lo + 1..dim {
                let a = Assessor::new(lo, hi);
                ensure!(
                    !dyad_vanishes(&t, a.diagonal(Orientation::Slash), a.diagonal(Orientation::Backslash)),
                    "same assessor {a}"
                );
                for lo2 in 1..dim {
                    let b = Assessor { lo: lo2, hi: lo2 ^ a.inner_xor() };
                    if b.hi <= lo2 || [b.lo, b.hi].iter().any(|x| *x == lo || *x == hi) {
                        continue;
                    }
                    for d1 in a.diagonals() {
                        for d2 in b.diagonals() {
                            let ab = dyad_product(&t, d1, d2).map_err(|e| e.to_string())?;
                            let ba = dyad_product(&t, d2, d1).map_err(|e| e.to_string())?;
                            ensure!(ba == -&ab, "reversal {d1} {d2}");
                            checks += 1;
                        }
                    }
                }
            }
        }
        for strut in 1..level.generator().unwrap() {
            let members = assessors_for_strut(level, strut).map_err(|e| e.to_string())?;
            for &a in &members {
                for &b in &members {
                    if let Some(e) = dmz_edge(&t, a, b) {
                        let c = e.emanated;
                        ensure!(
                            dmz_edge(&t, a, c).map(|x| x.emanated) == Some(b)
                                && dmz_edge(&t, b, c).map(|x| x.emanated) == Some(a),
                            "emanation {a} {b} -> {c} does not close"
                        );
                        checks += 1;
                    }
                }
            }
        }
    }
    for strut in 1..16 {
        let t = build_emanation_table(strut).map_err(|e| e.to_string())?;
        let m = t.size();
        for r in 0..m {
            for c in 0..m {
                ensure!(t.cell(r, c) == t.cell(c, r), "mirror s={strut} ({r},{c})");
                ensure!(
                    t.cell(r, c).map(|x| x.lo) == t.cell(m - 1 - r, m - 1 - c).map(|x| x.lo),
                    "reverse order s={strut} ({r},{c})"
                );
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} checks, 0 failures"))
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, name: "golden sedenion table", limit: Some(Duration::from_secs(1)), run: golden_table },
        Criterion { id: 2, name: "oracle equivalence", limit: Some(Duration::from_secs(10)), run: oracle_equivalence },
        Criterion { id: 3, name: "box-kite atlas", limit: Some(Duration::from_secs(1)), run: box_kite_atlas },
        Criterion { id: 4, name: "worked DMZ", limit: None, run: worked_dmz },
        Criterion { id: 5, name: "counts", limit: Some(Duration::from_secs(30)), run: counts },
        Criterion { id: 6, name: "mandala geometry", limit: None, run: mandala_geometry },
        Criterion { id: 7, name: "fold and partition", limit: None, run: fold_and_partition },
        Criterion { id: 8, name: "kite-chain middens", limit: Some(Duration::from_secs(60)), run: middens },
        Criterion { id: 9, name: "property suites", limit: None, run: property_suites },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match (outcome, c.limit) {
            (Ok(_), Some(limit)) if elapsed > limit => Err(format!("took {elapsed:.2?}, limit {limit:?}")),
            (o, _) => o,
        };
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d.as_str()),
            Err(d) => ("FAIL", d.as_str()),
        };
        failed += usize::from(outcome.is_err());
        println!("[{tag}] {} {} ({elapsed:.2?}): {detail}", c.id, c.name);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
