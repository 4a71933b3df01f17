//! Counts and products recomputed from scratch with a dense Cayley-Dickson
//! multiply that shares no code with the library, then compared.

use std::collections::{BTreeMap, BTreeSet};

use boxkite_core::cdp::BasisProduct;
use boxkite_core::census::{dmz_pairing_census, per_strut_pairings, zd_diagonal_census, zd_diagonal_census_within};
use boxkite_core::midden::kite_chain_diagonal_count;
use boxkite_core::{basis_product_recursive, build_table, Level, Recursive, Sign};

fn conj(x: &[i64]) -> Vec<i64> {
    x.iter().enumerate().map(|(i, &v)| if i == 0 { v } else { -v }).collect()
}

fn add(x: &[i64], y: &[i64], s: i64) -> Vec<i64> {
    x.iter().zip(y).map(|(a, b)| a + s * b).collect()
}

/// (a, b)(c, d) = (ac - d*b, bc* + da) on dense coefficient vectors.
fn dense_mul(x: &[i64], y: &[i64]) -> Vec<i64> {
    if x.len() == 1 {
        return vec![x[0] * y[0]];
    }
    let h = x.len() / 2;
    let (a, b) = x.split_at(h);
    let (c, d) = y.split_at(h);
    let left = add(&dense_mul(a, c), &dense_mul(&conj(d), b), -1);
    let right = add(&dense_mul(b, &conj(c)), &dense_mul(d, a), 1);
    [left, right].concat()
}

fn unit(dim: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; dim];
    v[i] = 1;
    v
}

/// Oracle unit table as (sign, index).
fn oracle_table(n: u32) -> Vec<Vec<(i64, usize)>> {
    let dim = 1 << n;
    (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| {
                    let p = dense_mul(&unit(dim, i), &unit(dim, j));
                    let k = p.iter().position(|&v| v != 0).unwrap();
                    (p[k], k)
                })
                .collect()
        })
        .collect()
}

fn vanishes(t: &[Vec<(i64, usize)>], (a, b, s): (usize, usize, i64), (c, d, u): (usize, usize, i64)) -> bool {
    let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
    for (i, x) in [(a, 1), (b, s)] {
        for (j, y) in [(c, 1), (d, u)] {
            let (sg, k) = t[i][j];
            *acc.entry(k).or_default() += sg * x * y;
        }
    }
    acc.values().all(|&v| v == 0)
}

fn all_diagonals(dim: usize, admit: impl Fn(usize, usize) -> bool) -> Vec<(usize, usize, i64)> {
    let mut out = Vec::new();
    for lo in 1..dim {
        for hi in lo + 1..dim {
            if admit(lo, hi) {
                out.push((lo, hi, 1));
                out.push((lo, hi, -1));
            }
        }
    }
    out
}

/// All-pairs census with no inner-XOR shortcut.
fn oracle_zd_count(t: &[Vec<(i64, usize)>], admit: impl Fn(usize, usize) -> bool) -> usize {
    let ds = all_diagonals(t.len(), admit);
    ds.iter().filter(|&&d1| ds.iter().any(|&d2| (d1.0, d1.1) != (d2.0, d2.1) && vanishes(t, d1, d2))).count()
}

fn oracle_pairings(t: &[Vec<(i64, usize)>], strut: usize) -> usize {
    let g = t.len() / 2;
    let ds: Vec<_> = (1..g)
        .filter(|&lo| lo != strut)
        .flat_map(|lo| {
            let hi = lo ^ g ^ strut;
            [(lo.min(hi), lo.max(hi), 1), (lo.min(hi), lo.max(hi), -1)]
        })
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut count = 0;
    for i in 0..ds.len() {
        for j in i + 1..ds.len() {
            count += usize::from(vanishes(t, ds[i], ds[j]));
        }
    }
    count
}

#[test]
fn engines_agree_with_dense_oracle() {
    for n in 0..=6 {
        let level = Level::new(n).unwrap();
        let o = oracle_table(n);
        let t = build_table(level);
        for (i, row) in o.iter().enumerate() {
            for (j, &want) in row.iter().enumerate() {
                let u = t.product(i, j);
                assert_eq!((u.sign.value(), u.index), want, "n={n} ({i},{j})");
            }
        }
    }
}

#[test]
fn hand_expanded_product() {
    let u = basis_product_recursive(17, 20, Level::PATHIONS).unwrap();
    assert_eq!((u.sign, u.index), (Sign::Minus, 5));
    assert_eq!(oracle_table(5)[17][20], (-1, 5));
}

#[test]
fn strut_opposite_product_is_two_e8() {
    let x = add(&unit(16, 3), &unit(16, 10), 1);
    let y = add(&unit(16, 2), &unit(16, 11), -1);
    assert_eq!(dense_mul(&x, &y), [vec![0; 8], vec![2], vec![0; 7]].concat());
}

#[test]
fn zero_divisor_census_matches_oracle() {
    let o4 = oracle_table(4);
    let o5 = oracle_table(5);
    assert_eq!(oracle_zd_count(&o4, |_, _| true), 84);
    assert_eq!(oracle_zd_count(&o5, |_, _| true), 588);
    assert_eq!(oracle_zd_count(&o5, |_, hi| hi < 16), 84);
    assert_eq!(zd_diagonal_census(&build_table(Level::SEDENIONS)), 84);
    let p = build_table(Level::PATHIONS);
    assert_eq!(zd_diagonal_census(&p), 588);
    assert_eq!(zd_diagonal_census_within(&p, |a| a.hi < 16), 84);
}

#[test]
fn pairing_census_matches_oracle() {
    let o5 = oracle_table(5);
    let p = build_table(Level::PATHIONS);
    for s in 1..16 {
        let want = oracle_pairings(&o5, s);
        assert_eq!(want, if s <= 8 { 168 } else { 72 });
        assert_eq!(dmz_pairing_census(&p, s).unwrap(), want);
    }
    let o4 = oracle_table(4);
    let s4 = build_table(Level::SEDENIONS);
    for s in 1..8 {
        assert_eq!(oracle_pairings(&o4, s), 24);
        assert_eq!(dmz_pairing_census(&s4, s).unwrap(), 24);
    }
}

#[test]
fn chingon_pairing_histogram() {
    let o6 = oracle_table(6);
    let c = build_table(Level::CHINGONS);
    let hist = per_strut_pairings(&c);
    for s in 1..32 {
        let want = match s {
            1..=8 | 16 => 840,
            9..=15 => 456,
            17..=24 => 168,
            _ => 552,
        };
        assert_eq!(oracle_pairings(&o6, s), want, "strut {s}");
        assert_eq!(hist[&s], want, "strut {s}");
    }
}

#[test]
fn kite_chain_counts_match_oracle() {
    let o6 = oracle_table(6);
    let c = build_table(Level::CHINGONS);
    let sedenion_kites: Vec<(usize, usize)> = (1..8)
        .flat_map(|s| (1..8).filter(move |&lo| lo != s).map(move |lo| (lo, lo ^ 8 ^ s)))
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    assert_eq!(sedenion_kites.len(), 42);
    let chain: Vec<(usize, usize)> =
        (0..4).flat_map(|k| sedenion_kites.iter().map(move |&(a, b)| (a + 16 * k, b + 16 * k))).collect();
    let ds = all_diagonals(64, |_, _| true);
    let count = chain
        .iter()
        .flat_map(|&(a, b)| [(a, b, 1), (a, b, -1)])
        .filter(|&d| ds.iter().any(|&e| (e.0, e.1) != (d.0, d.1) && vanishes(&o6, d, e)))
        .count();
    assert_eq!(count, 336);
    assert_eq!(kite_chain_diagonal_count(&c).unwrap(), 336);
    assert_eq!(kite_chain_diagonal_count(&Recursive(Level::PATHIONS)).unwrap(), 168);
}

#[test]
fn index_24_rules() {
    let o = oracle_table(5);
    for (u, &p) in o[24].iter().enumerate().take(8).skip(1) {
        assert_eq!(p, (1, 24 + u));
    }
    for (u, v, w) in [(1, 2, 3), (1, 4, 5), (1, 7, 6), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 6, 5)] {
        assert_eq!(o[24 + u][24 + v], (1, w));
    }
    let g = |n: u32| 1usize << (n - 1);
    for n in 1..=6 {
        let r = Recursive(Level::new(n).unwrap());
        for u in 1..g(n) {
            let p = r.product(u, g(n));
            assert_eq!((p.sign, p.index), (Sign::Plus, u + g(n)));
        }
    }
}
