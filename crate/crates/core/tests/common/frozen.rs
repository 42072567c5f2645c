//! Oracle values for n = 3, 4, 5, produced by the plain enumerator in
//! `naive.rs` and frozen here. Rows are `(n, k, value)`; `k` is the
//! invariant value for finite cases and the bicomponent count otherwise.

#![allow(dead_code)]

pub type Row = (u64, u64, u64);

pub const RADIUS_MAX_ARCS: &[Row] = &[
    (3, 1, 6), (3, 2, 3),
    (4, 1, 12), (4, 2, 8), (4, 3, 6),
    (5, 1, 20), (5, 2, 15), (5, 3, 12), (5, 4, 10),
];

pub const QUASI_DIAMETER_MAX_ARCS: &[Row] = &[
    (3, 1, 6), (3, 2, 4),
    (4, 1, 12), (4, 2, 10), (4, 3, 6),
    (5, 1, 20), (5, 2, 18), (5, 3, 12), (5, 4, 10),
];

pub const INF_D_MAX_ARCS: &[Row] = &[
    (3, 2, 4), (3, 3, 3),
    (4, 2, 9), (4, 3, 7), (4, 4, 6),
    (5, 2, 16), (5, 3, 13), (5, 4, 11), (5, 5, 10),
];

pub const INF_DM_MAX_ARCS: &[Row] = &[
    (3, 2, 2), (3, 3, 2),
    (4, 2, 6), (4, 3, 6), (4, 4, 5),
    (5, 2, 12), (5, 3, 12), (5, 4, 10), (5, 5, 9),
];

pub const INF_R_MAX_ARCS: &[Row] = &[
    (3, 2, 2), (3, 3, 2),
    (4, 2, 6), (4, 3, 6), (4, 4, 5),
    (5, 2, 12), (5, 3, 12), (5, 4, 10), (5, 5, 9),
];

pub const INF_RM_MAX_ARCS: &[Row] = &[
    (3, 2, 2), (3, 3, 1),
    (4, 2, 6), (4, 3, 4), (4, 4, 4),
    (5, 2, 12), (5, 3, 9), (5, 4, 8), (5, 5, 7),
];

pub const D_CRITICAL_LABELED: &[Row] = &[
    (3, 2, 6), (3, 3, 6),
    (4, 2, 14), (4, 3, 36), (4, 4, 24),
    (5, 2, 30), (5, 3, 150), (5, 4, 240), (5, 5, 120),
];

pub const DM_CRITICAL_LABELED: &[Row] = &[
    (3, 2, 3), (3, 3, 6),
    (4, 2, 7), (4, 3, 36), (4, 4, 36),
    (5, 2, 15), (5, 3, 150), (5, 4, 360), (5, 5, 240),
];

pub const R_CRITICAL_LABELED: &[Row] = &[
    (3, 2, 3), (3, 3, 3),
    (4, 2, 7), (4, 3, 18), (4, 4, 12),
    (5, 2, 15), (5, 3, 75), (5, 4, 120), (5, 5, 60),
];

pub const RM_CRITICAL_LABELED: &[Row] = &[
    (3, 2, 3), (3, 3, 6),
    (4, 2, 7), (4, 3, 36), (4, 4, 30),
    (5, 2, 15), (5, 3, 150), (5, 4, 300), (5, 5, 240),
];

pub const D_CRITICAL_CLASSES: &[Row] = &[
    (3, 2, 2), (3, 3, 1),
    (4, 2, 3), (4, 3, 3), (4, 4, 1),
    (5, 2, 4), (5, 3, 6), (5, 4, 4), (5, 5, 1),
];

pub const DM_CRITICAL_CLASSES: &[Row] = &[
    (3, 2, 1), (3, 3, 2),
    (4, 2, 2), (4, 3, 4), (4, 4, 3),
    (5, 2, 2), (5, 3, 8), (5, 4, 9), (5, 5, 4),
];

pub const R_CRITICAL_CLASSES: &[Row] = &[
    (3, 2, 1), (3, 3, 1),
    (4, 2, 2), (4, 3, 2), (4, 4, 1),
    (5, 2, 2), (5, 3, 4), (5, 4, 3), (5, 5, 1),
];

pub const RM_CRITICAL_CLASSES: &[Row] = &[
    (3, 2, 1), (3, 3, 1),
    (4, 2, 2), (4, 3, 3), (4, 4, 2),
    (5, 2, 2), (5, 3, 6), (5, 4, 6), (5, 5, 3),
];

pub const MAX_RADIUS_LABELED: &[Row] = &[
    (3, 1, 1), (3, 2, 8),
    (4, 1, 1), (4, 2, 81), (4, 3, 24),
    (5, 1, 1), (5, 2, 1024), (5, 3, 120), (5, 4, 120),
];

pub const MAX_RADIUS_CLASSES: &[Row] = &[
    (3, 1, 1), (3, 2, 2),
    (4, 1, 1), (4, 2, 6), (4, 3, 1),
    (5, 1, 1), (5, 2, 13), (5, 3, 2), (5, 4, 1),
];

pub const MAX_QD_LABELED: &[Row] = &[
    (3, 1, 1), (3, 2, 3),
    (4, 1, 1), (4, 2, 6), (4, 3, 72),
    (5, 1, 1), (5, 2, 10), (5, 3, 600), (5, 4, 240),
];

pub const MAX_QD_CLASSES: &[Row] = &[
    (3, 1, 1), (3, 2, 1),
    (4, 1, 1), (4, 2, 1), (4, 3, 4),
    (5, 1, 1), (5, 2, 1), (5, 3, 10), (5, 4, 2),
];
