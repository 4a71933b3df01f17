//! Reference data transcribed from published tables. Used by the test
//! suites and by the `verify` report, which compares it against computed
//! structures rather than trusting it.

/// The 16x16 sedenion multiplication table, one row per line, led by the
/// row index. `-0` is the negative real unit.
pub const SEDENION_TABLE: &str = "
      0   0   1   2   3   4   5   6   7   8   9  10  11  12  13  14  15
      1   1  -0   3  -2   5  -4  -7   6   9  -8 -11  10 -13  12  15 -14
      2   2  -3  -0   1   6   7  -4  -5  10  11  -8  -9 -14 -15  12  13
      3   3   2  -1  -0   7  -6   5  -4  11 -10   9  -8 -15  14 -13  12
      4   4  -5  -6  -7  -0   1   2   3  12  13  14  15  -8  -9 -10 -11
      5   5   4  -7   6  -1  -0  -3   2  13 -12  15 -14   9  -8  11 -10
      6   6   7   4  -5  -2   3  -0  -1  14 -15 -12  13  10 -11  -8   9
      7   7  -6   5   4  -3  -2   1  -0  15  14 -13 -12  11  10  -9  -8
      8   8  -9 -10 -11 -12 -13 -14 -15  -0   1   2   3   4   5   6   7
      9   9   8 -11  10 -13  12  15 -14  -1  -0  -3   2  -5   4   7  -6
     10  10  11   8  -9 -14 -15  12  13  -2   3  -0  -1  -6  -7   4   5
     11  11 -10   9   8 -15  14 -13  12  -3  -2   1  -0  -7   6  -5   4
     12  12  13  14  15   8  -9 -10 -11  -4   5   6   7  -0  -1  -2  -3
     13  13 -12  15 -14   9   8  11 -10  -5  -4   7  -6   1  -0   3  -2
     14  14 -15 -12  13  10 -11   8   9  -6  -7  -4   5   2  -3  -0   1
     15  15  14 -13 -12  11  10  -9   8  -7   6  -5  -4   3   2  -1  -0
";

/// Box-kite vertex table: strut constant, then `(lo, hi)` at `A..F`.
pub const PRINTED_BOX_KITES: [(usize, [(usize, usize); 6]); 7] = [
    (1, [(3, 10), (6, 15), (5, 12), (4, 13), (7, 14), (2, 11)]),
    (2, [(1, 11), (7, 13), (6, 12), (4, 14), (5, 15), (3, 9)]),
    (3, [(2, 9), (5, 14), (7, 12), (4, 15), (6, 13), (1, 10)]),
    (4, [(1, 13), (2, 14), (3, 15), (7, 11), (6, 10), (5, 9)]),
    (5, [(2, 15), (4, 9), (6, 11), (3, 14), (1, 12), (7, 10)]),
    (6, [(3, 13), (4, 10), (7, 9), (1, 15), (2, 12), (5, 11)]),
    (7, [(1, 14), (4, 11), (5, 10), (2, 13), (3, 12), (6, 9)]),
];

pub const OCTONION_TRIPLETS: &str = "(1 2 3) (1 4 5) (1 7 6) (2 4 6) (2 5 7) (3 4 7) (3 6 5)";

/// Triplets new at the sedenion level.
pub const SEDENION_TRIPLETS: &str = "
    (1 8 9) (1 11 10) (1 13 12) (1 14 15) (2 8 10) (2 9 11) (2 14 12) (2 15 13)
    (3 8 11) (3 10 9) (3 13 14) (3 15 12) (4 8 12) (4 9 13) (4 10 14) (4 11 15)
    (5 8 13) (5 10 15) (5 12 9) (5 14 11) (6 8 14) (6 11 13) (6 12 10) (6 15 9)
    (7 8 15) (7 9 14) (7 12 11) (7 13 10)
";

/// Triplets new at the pathion level, as printed. `(13 16 19)` stands where
/// `(13 16 29)` belongs.
pub const PATHION_TRIPLETS: &str = "
    (1 16 17) (1 19 18) (1 21 20) (1 22 23) (1 25 24) (1 26 27) (1 28 29) (1 31 30)
    (2 16 18) (2 17 19) (2 22 20) (2 23 21) (2 26 24) (2 27 25) (2 28 30) (2 29 31)
    (3 16 19) (3 18 17) (3 21 22) (3 23 20) (3 25 26) (3 27 24) (3 28 31) (3 30 29)
    (4 16 20) (4 17 21) (4 18 22) (4 19 23) (4 28 24) (4 29 25) (4 30 26) (4 31 27)
    (5 16 21) (5 18 23) (5 20 17) (5 22 19) (5 25 28) (5 27 30) (5 29 24) (5 31 26)
    (6 16 22) (6 19 21) (6 20 18) (6 23 17) (6 25 31) (6 26 28) (6 29 27) (6 30 24)
    (7 16 23) (7 17 22) (7 20 19) (7 21 18) (7 26 29) (7 27 28) (7 30 25) (7 31 24)
    (8 16 24) (8 17 25) (8 18 26) (8 19 27) (8 20 28) (8 21 29) (8 22 30) (8 23 31)
    (9 16 25) (9 18 27) (9 20 29) (9 23 30) (9 24 17) (9 26 19) (9 28 21) (9 31 22)
    (10 16 26) (10 19 25) (10 20 30) (10 21 31) (10 24 18) (10 27 17) (10 28 22) (10 29 23)
    (11 16 27) (11 17 26) (11 20 31) (11 22 29) (11 24 19) (11 25 18) (11 28 23) (11 30 21)
    (12 16 28) (12 21 25) (12 22 26) (12 23 27) (12 24 20) (12 29 17) (12 30 18) (12 31 19)
    (13 16 19) (13 17 28) (13 19 30) (13 23 26) (13 24 21) (13 25 20) (13 27 22) (13 31 18)
    (14 16 30) (14 17 31) (14 18 28) (14 21 27) (14 24 22) (14 25 23) (14 26 20) (14 29 19)
    (15 16 31) (15 18 29) (15 19 28) (15 22 25) (15 24 23) (15 26 21) (15 27 20) (15 30 17)
";

/// Strut-1 pathion emanation table headings, low then high indices.
pub const STRUT_1_HEADINGS_LO: [usize; 14] = [2, 4, 6, 8, 10, 12, 14, 15, 13, 11, 9, 7, 5, 3];
pub const STRUT_1_HEADINGS_HI: [usize; 14] = [19, 21, 23, 25, 27, 29, 31, 30, 28, 26, 24, 22, 20, 18];

/// Strut-1 emanation table body. Each row starts with its heading in hex;
/// `.` is an empty cell and a `-` prefix marks a negative edge sign. The
/// print renders 13 (`D`) as `L` or `C` in some cells.
pub const STRUT_1_TABLE: &str = "
     2  . -6  4 -A  8 -E  C -L  F -9  B -5  7  .
     4 -6  .  2 -C -E  8  A -B -9  F  C -3  .  7
     6  4  2  .  E  C  A  8 -9 -B -L -F  . -3 -5
     8 -A -C  E  .  2  4 -6  7 -5 -3  . -F  C  B
     A  8 -E  C  2  . -6  4 -5  7  . -3 -L  F -9
     C -E  8  A  4 -6  .  2 -3  .  7 -5 -B -9  F
     E  C  A  8 -6  4  2  .  . -3 -5  7 -9 -B -L
     F -L -B -9  7 -5 -3  .  .  2  4 -6  8  A  C
     D  F -9 -B -5  7  . -3  2  . -6  4  A  8 -E
     B -9  F -L -3  .  7 -5  4 -6  .  2  C -E  8
     9  B  C -F  . -3 -5  7 -6  4  2  .  E -C -A
     7 -5 -3  . -F -L -B -9  8  A  C  E  .  2  4
     5  7  . -3  C  F -9 -B  A  8 -E -C  2  . -6
     3  .  7 -5  B -9  F -L  C -E  8 -A  4 -6  .
";

/// Unreadable glyphs that stand for 13 in [`STRUT_1_TABLE`].
pub const STRUT_1_GLYPH_ALIASES: [char; 2] = ['L', 'C'];

/// The three box-kites of the strut-11 sky-high, rows of `A..F`.
pub const STRUT_11_PARTITION: [[(usize, usize); 6]; 3] = [
    [(1, 26), (8, 19), (9, 18), (2, 25), (3, 24), (10, 17)],
    [(4, 31), (8, 19), (12, 23), (7, 28), (3, 24), (15, 20)],
    [(6, 29), (8, 19), (14, 21), (5, 30), (3, 24), (13, 22)],
];

/// Strut-3 assessor harmonics for `k = 1, 2, 3`, listed as strut pairs
/// `(A, F)`, `(B, E)`, `(C, D)`.
pub const STRUT_3_HARMONICS: [[(usize, usize); 6]; 3] = [
    [(18, 25), (17, 26), (21, 30), (22, 29), (23, 28), (20, 31)],
    [(34, 41), (33, 42), (37, 46), (38, 45), (39, 44), (36, 47)],
    [(50, 57), (49, 58), (53, 62), (54, 61), (55, 60), (52, 63)],
];

/// The four printed cross-harmonic sails through `(17, 26)`, as
/// `(k = 2, k = 3)` assessors. The second one is printed as `(37, 47)`.
pub const PRINTED_CROSS_SAILS: [((usize, usize), (usize, usize)); 4] =
    [((36, 47), (53, 62)), ((37, 47), (52, 63)), ((38, 45), (55, 60)), ((39, 44), (54, 61))];

pub const ZD_DIAGONALS_SEDENIONS: usize = 84;
pub const ZD_DIAGONALS_PATHIONS: usize = 588;
pub const KITE_CHAIN_DIAGONALS_CHINGONS: usize = 336;

use alloc::vec::Vec;

use crate::unit::{Sign, SignedUnit};

/// Parses [`SEDENION_TABLE`] into rows of signed units.
pub fn sedenion_rows() -> Vec<Vec<SignedUnit>> {
    SEDENION_TABLE
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            l.split_whitespace()
                .skip(1)
                .map(|tok| {
                    let (sign, digits) = match tok.strip_prefix('-') {
                        Some(rest) => (Sign::Minus, rest),
                        None => (Sign::Plus, tok),
                    };
                    SignedUnit::new(sign, digits.parse().expect("printed table holds integers"))
                })
                .collect()
        })
        .collect()
}

/// Parses a listing of `(a b c)` groups, keeping printed order.
pub fn parse_triplets(text: &str) -> Vec<[usize; 3]> {
    text.split(')')
        .filter_map(|chunk| {
            let body = chunk.split('(').nth(1)?;
            let mut it = body.split_whitespace().map(|t| t.parse::<usize>().ok());
            Some([it.next()??, it.next()??, it.next()??])
        })
        .collect()
}

/// A printed emanation-table cell: sign and the glyph standing for the
/// emanated low index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrintedCell {
    pub sign: Sign,
    pub glyph: char,
}

/// Parses [`STRUT_1_TABLE`] into 14 rows of 14 optional cells.
pub fn strut_1_cells() -> Vec<Vec<Option<PrintedCell>>> {
    STRUT_1_TABLE
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            l.split_whitespace()
                .skip(1)
                .map(|tok| {
                    if tok == "." {
                        return None;
                    }
                    let (sign, rest) = match tok.strip_prefix('-') {
                        Some(r) => (Sign::Minus, r),
                        None => (Sign::Plus, tok),
                    };
                    Some(PrintedCell { sign, glyph: rest.chars().next().expect("non-empty cell") })
                })
                .collect()
        })
        .collect()
}
