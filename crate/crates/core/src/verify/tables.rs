//! Reference coefficient tables for four pretzel families, plus the
//! maximality table of `J_2(P(8,6,i))`.

/// A table of normalized lowest coefficients, one row per `k` from 1.
pub struct GoldenTable {
    pub title: &'static str,
    pub regions: &'static str,
    /// Color of the reduced colored Jones polynomial `J_N`, as an expression in `k`.
    pub jones: &'static str,
    pub window: &'static str,
    pub rows: &'static [&'static [i64]],
    /// Rows from this index on are only checked on request.
    pub stretch_from: usize,
}

pub const TABLE_1: GoldenTable = GoldenTable {
    title: "J_2(P(8,6,k)), lowest k+1",
    regions: "8,6,k",
    jones: "2",
    window: "k+1",
    rows: &[
        &[1, -1],
        &[1, -1, 3],
        &[1, -1, 3, -4],
        &[1, -1, 3, -4, 6],
        &[1, -1, 3, -4, 6, -8],
        &[1, -1, 3, -4, 6, -8, 10],
        &[1, -1, 3, -4, 6, -8, 10, -11],
        &[1, -1, 3, -4, 6, -8, 10, -11, 13],
        &[1, -1, 3, -4, 6, -8, 10, -11, 13, -13],
        &[1, -1, 3, -4, 6, -8, 10, -11, 13, -13, 14],
    ],
    stretch_from: 10,
};

pub const TABLE_2: GoldenTable = GoldenTable {
    title: "J_2(P(k,k,2)), lowest k+1",
    regions: "k,k,2",
    jones: "2",
    window: "k+1",
    rows: &[
        &[1, -1],
        &[1, -1, 3],
        &[1, -1, 3, -3],
        &[1, -1, 3, -3, 5],
        &[1, -1, 3, -3, 5, -6],
        &[1, -1, 3, -3, 5, -6, 7],
        &[1, -1, 3, -3, 5, -6, 7, -8],
        &[1, -1, 3, -3, 5, -6, 7, -8, 9],
        &[1, -1, 3, -3, 5, -6, 7, -8, 9, -10],
        &[1, -1, 3, -3, 5, -6, 7, -8, 9, -10, 11],
    ],
    stretch_from: 10,
};

/// Indexed by the cable color 3, which is `J_4` in the `J_N` convention.
pub const TABLE_3: GoldenTable = GoldenTable {
    title: "cable color 3 of P(k+2,k+4,k+1), lowest 3k+1",
    regions: "k+2,k+4,k+1",
    jones: "4",
    window: "3*k+1",
    rows: &[
        &[1, -1, -1, 0],
        &[1, -1, -1, 0, 4, 0, -4],
        &[1, -1, -1, 0, 4, 0, -4, -5, 7, 6],
        &[1, -1, -1, 0, 4, 0, -4, -5, 7, 6, -1, -13, 1],
        &[1, -1, -1, 0, 4, 0, -4, -5, 7, 6, -1, -13, 1, 7, 9, -8],
        &[1, -1, -1, 0, 4, 0, -4, -5, 7, 6, -1, -13, 1, 7, 9, -8, -3, -5, 5],
        &[1, -1, -1, 0, 4, 0, -4, -5, 7, 6, -1, -13, 1, 7, 9, -8, -3, -5, 5, -1, 13, -4],
    ],
    stretch_from: 7,
};

/// Indexed by the cable color `k`, i.e. `J_{k+1}`.
pub const TABLE_4: GoldenTable = GoldenTable {
    title: "cable color k of P(2,5,k), lowest k+1",
    regions: "2,5,k",
    jones: "k+1",
    window: "k+1",
    rows: &[
        &[1, -1],
        &[1, -1, -1],
        &[1, -1, -1, 0],
        &[1, -1, -1, 0, 0],
        &[1, -1, -1, 0, 0, 1],
        &[1, -1, -1, 0, 0, 1, 0],
        &[1, -1, -1, 0, 0, 1, 0, 1],
    ],
    stretch_from: 5,
};

/// `J_2(P(8,6,i))` to `i+2` terms: consecutive rows agree on `i+1` terms only.
pub const MAXIMALITY: GoldenTable = GoldenTable {
    title: "J_2(P(8,6,i)), lowest i+2",
    regions: "8,6,k",
    jones: "2",
    window: "k+2",
    rows: &[&[1, -1, 2], &[1, -1, 3, -3], &[1, -1, 3, -4, 5]],
    stretch_from: 3,
};

pub const GOLDEN_TABLES: [&GoldenTable; 5] = [&TABLE_1, &TABLE_2, &TABLE_3, &TABLE_4, &MAXIMALITY];
