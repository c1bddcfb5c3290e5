//! Reference Hasse diagrams for golden tests.
//!
//! Configurations use the compact line notation (origin digit fenced by `_`);
//! moves are `(site, occurrence)` pairs. Covers are `(upper, lower)`.

#![allow(dead_code)]

/// `((site, occurrence), (site, occurrence))`, upper move first.
pub type MoveCover = ((i64, u64), (i64, u64));

pub const LINE5_CONFIGS: &[&str] = &[
    "10_2_2", "10_3_01", "11_0_3", "11_1_11", "1_3_1", "2_1_2", "2_2_01", "3_0_11", "_5_",
];

pub const LINE5_CONFIGS_COVERS: &[(&str, &str)] = &[
    ("10_2_2", "10_3_01"),
    ("10_2_2", "11_0_3"),
    ("10_3_01", "11_1_11"),
    ("11_0_3", "11_1_11"),
    ("1_3_1", "2_1_2"),
    ("2_1_2", "10_2_2"),
    ("2_1_2", "2_2_01"),
    ("2_2_01", "10_3_01"),
    ("2_2_01", "3_0_11"),
    ("3_0_11", "11_1_11"),
    ("_5_", "1_3_1"),
];

pub const LINE6_CONFIGS: &[&str] = &[
    "101_1_21",
    "101_2_02",
    "101_2_101",
    "102_0_12",
    "102_0_201",
    "102_1_011",
    "10_3_2",
    "10_4_01",
    "110_1_12",
    "110_1_201",
    "110_2_011",
    "111_0_111",
    "11_1_3",
    "11_2_11",
    "12_0_21",
    "12_1_02",
    "12_1_101",
    "1_4_1",
    "20_1_21",
    "20_2_02",
    "20_2_101",
    "21_0_12",
    "21_0_201",
    "21_1_011",
    "2_2_2",
    "2_3_01",
    "3_0_3",
    "3_1_11",
    "_6_",
];

pub const LINE6_CONFIGS_COVERS: &[(&str, &str)] = &[
    ("101_1_21", "101_2_02"),
    ("101_2_02", "101_2_101"),
    ("101_2_02", "102_0_12"),
    ("101_2_101", "102_0_201"),
    ("102_0_12", "102_0_201"),
    ("102_0_12", "110_1_12"),
    ("102_0_201", "102_1_011"),
    ("102_0_201", "110_1_201"),
    ("102_1_011", "110_2_011"),
    ("10_3_2", "10_4_01"),
    ("10_3_2", "11_1_3"),
    ("10_4_01", "11_2_11"),
    ("110_1_12", "110_1_201"),
    ("110_1_201", "110_2_011"),
    ("110_2_011", "111_0_111"),
    ("11_1_3", "11_2_11"),
    ("11_2_11", "12_0_21"),
    ("12_0_21", "12_1_02"),
    ("12_0_21", "20_1_21"),
    ("12_1_02", "12_1_101"),
    ("12_1_02", "20_2_02"),
    ("12_1_101", "20_2_101"),
    ("1_4_1", "2_2_2"),
    ("20_1_21", "101_1_21"),
    ("20_1_21", "20_2_02"),
    ("20_2_02", "101_2_02"),
    ("20_2_02", "20_2_101"),
    ("20_2_02", "21_0_12"),
    ("20_2_101", "101_2_101"),
    ("20_2_101", "21_0_201"),
    ("21_0_12", "102_0_12"),
    ("21_0_12", "21_0_201"),
    ("21_0_201", "102_0_201"),
    ("21_0_201", "21_1_011"),
    ("21_1_011", "102_1_011"),
    ("2_2_2", "10_3_2"),
    ("2_2_2", "2_3_01"),
    ("2_2_2", "3_0_3"),
    ("2_3_01", "10_4_01"),
    ("2_3_01", "3_1_11"),
    ("3_0_3", "11_1_3"),
    ("3_0_3", "3_1_11"),
    ("3_1_11", "11_2_11"),
    ("_6_", "1_4_1"),
];

pub const LINE5_ONLY_MOVE: &[((i64, u64), &str)] = &[
    ((-1, 1), "3_0_11"),
    ((0, 1), "_5_"),
    ((0, 2), "1_3_1"),
    ((0, 3), "10_3_01"),
    ((1, 1), "11_0_3"),
];

pub const LINE6_ONLY_MOVE: &[((i64, u64), &str)] = &[
    ((-2, 1), "21_1_011"),
    ((-1, 1), "3_1_11"),
    ((-1, 2), "12_1_101"),
    ((-1, 3), "102_1_011"),
    ((0, 1), "_6_"),
    ((0, 2), "1_4_1"),
    ((0, 3), "10_4_01"),
    ((0, 4), "11_2_11"),
    ((0, 5), "101_2_101"),
    ((0, 6), "110_2_011"),
    ((1, 1), "11_1_3"),
    ((1, 2), "101_1_21"),
    ((1, 3), "110_1_201"),
    ((2, 1), "110_1_12"),
];

pub const LINE5_MOVES: &[(i64, u64)] = &[(-1, 1), (0, 1), (0, 2), (0, 3), (1, 1)];

pub const LINE5_MOVES_COVERS: &[MoveCover] = &[
    ((0, 1), (0, 2)),
    ((0, 2), (-1, 1)),
    ((0, 2), (0, 3)),
    ((0, 2), (1, 1)),
];

pub const LINE6_MOVES: &[(i64, u64)] = &[
    (-2, 1),
    (-1, 1),
    (-1, 2),
    (-1, 3),
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 4),
    (0, 5),
    (0, 6),
    (1, 1),
    (1, 2),
    (1, 3),
    (2, 1),
];

pub const LINE6_MOVES_COVERS: &[MoveCover] = &[
    ((-2, 1), (-1, 3)),
    ((-1, 1), (0, 4)),
    ((-1, 2), (-2, 1)),
    ((-1, 2), (0, 5)),
    ((-1, 3), (0, 6)),
    ((0, 1), (0, 2)),
    ((0, 2), (-1, 1)),
    ((0, 2), (0, 3)),
    ((0, 2), (1, 1)),
    ((0, 3), (0, 4)),
    ((0, 4), (-1, 2)),
    ((0, 4), (1, 2)),
    ((0, 5), (-1, 3)),
    ((0, 5), (1, 3)),
    ((1, 1), (0, 4)),
    ((1, 2), (0, 5)),
    ((1, 2), (2, 1)),
    ((1, 3), (0, 6)),
    ((2, 1), (1, 3)),
];

pub const LINE8_MOVES: &[(i64, u64)] = &[
    (-3, 1),
    (-2, 1),
    (-2, 2),
    (-2, 3),
    (-1, 1),
    (-1, 2),
    (-1, 3),
    (-1, 4),
    (-1, 5),
    (-1, 6),
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 4),
    (0, 5),
    (0, 6),
    (0, 7),
    (0, 8),
    (0, 9),
    (0, 10),
    (1, 1),
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 5),
    (1, 6),
    (2, 1),
    (2, 2),
    (2, 3),
    (3, 1),
];

pub const LINE8_MOVES_COVERS: &[MoveCover] = &[
    ((-3, 1), (-2, 3)),
    ((-2, 1), (-1, 4)),
    ((-2, 2), (-3, 1)),
    ((-2, 2), (-1, 5)),
    ((-2, 3), (-1, 6)),
    ((-1, 1), (-1, 2)),
    ((-1, 1), (0, 6)),
    ((-1, 2), (-2, 1)),
    ((-1, 2), (-1, 3)),
    ((-1, 3), (0, 7)),
    ((-1, 4), (-2, 2)),
    ((-1, 4), (0, 8)),
    ((-1, 5), (-2, 3)),
    ((-1, 5), (0, 9)),
    ((-1, 6), (0, 10)),
    ((0, 1), (0, 2)),
    ((0, 2), (-1, 1)),
    ((0, 2), (0, 3)),
    ((0, 2), (1, 1)),
    ((0, 3), (0, 4)),
    ((0, 4), (-1, 2)),
    ((0, 4), (0, 5)),
    ((0, 4), (1, 2)),
    ((0, 5), (-1, 3)),
    ((0, 5), (0, 6)),
    ((0, 5), (1, 3)),
    ((0, 6), (0, 7)),
    ((0, 7), (-1, 4)),
    ((0, 7), (1, 4)),
    ((0, 8), (-1, 5)),
    ((0, 8), (1, 5)),
    ((0, 9), (-1, 6)),
    ((0, 9), (1, 6)),
    ((1, 1), (0, 6)),
    ((1, 1), (1, 2)),
    ((1, 2), (1, 3)),
    ((1, 2), (2, 1)),
    ((1, 3), (0, 7)),
    ((1, 4), (0, 8)),
    ((1, 4), (2, 2)),
    ((1, 5), (0, 9)),
    ((1, 5), (2, 3)),
    ((1, 6), (0, 10)),
    ((2, 1), (1, 4)),
    ((2, 2), (1, 5)),
    ((2, 2), (3, 1)),
    ((2, 3), (1, 6)),
    ((3, 1), (2, 3)),
];

pub const ENDGAME10_MOVES: &[(i64, u64)] = &[
    (-4, 1),
    (-3, 1),
    (-3, 2),
    (-2, 1),
    (-2, 2),
    (-2, 3),
    (-1, 1),
    (-1, 2),
    (-1, 3),
    (-1, 4),
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 4),
    (0, 5),
    (1, 1),
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 1),
    (2, 2),
    (2, 3),
    (3, 1),
    (3, 2),
    (4, 1),
];

pub const ENDGAME10_MOVES_COVERS: &[MoveCover] = &[
    ((-4, 1), (-3, 2)),
    ((-3, 1), (-4, 1)),
    ((-3, 1), (-2, 2)),
    ((-3, 2), (-2, 3)),
    ((-2, 1), (-3, 1)),
    ((-2, 1), (-1, 2)),
    ((-2, 2), (-3, 2)),
    ((-2, 2), (-1, 3)),
    ((-2, 3), (-1, 4)),
    ((-1, 1), (-2, 1)),
    ((-1, 1), (0, 2)),
    ((-1, 2), (-2, 2)),
    ((-1, 2), (0, 3)),
    ((-1, 3), (-2, 3)),
    ((-1, 3), (0, 4)),
    ((-1, 4), (0, 5)),
    ((0, 1), (-1, 1)),
    ((0, 1), (1, 1)),
    ((0, 2), (-1, 2)),
    ((0, 2), (1, 2)),
    ((0, 3), (-1, 3)),
    ((0, 3), (1, 3)),
    ((0, 4), (-1, 4)),
    ((0, 4), (1, 4)),
    ((1, 1), (0, 2)),
    ((1, 1), (2, 1)),
    ((1, 2), (0, 3)),
    ((1, 2), (2, 2)),
    ((1, 3), (0, 4)),
    ((1, 3), (2, 3)),
    ((1, 4), (0, 5)),
    ((2, 1), (1, 2)),
    ((2, 1), (3, 1)),
    ((2, 2), (1, 3)),
    ((2, 2), (3, 2)),
    ((2, 3), (1, 4)),
    ((3, 1), (2, 2)),
    ((3, 1), (4, 1)),
    ((3, 2), (2, 3)),
    ((4, 1), (3, 2)),
];

pub const ENDGAME20_MOVES: &[(i64, u64)] = &[
    (-9, 1),
    (-8, 1),
    (-8, 2),
    (-7, 1),
    (-7, 2),
    (-7, 3),
    (-6, 1),
    (-6, 2),
    (-6, 3),
    (-6, 4),
    (-5, 1),
    (-5, 2),
    (-5, 3),
    (-5, 4),
    (-5, 5),
    (-4, 1),
    (-4, 2),
    (-4, 3),
    (-4, 4),
    (-4, 5),
    (-4, 6),
    (-3, 1),
    (-3, 2),
    (-3, 3),
    (-3, 4),
    (-3, 5),
    (-3, 6),
    (-3, 7),
    (-2, 1),
    (-2, 2),
    (-2, 3),
    (-2, 4),
    (-2, 5),
    (-2, 6),
    (-2, 7),
    (-2, 8),
    (-1, 1),
    (-1, 2),
    (-1, 3),
    (-1, 4),
    (-1, 5),
    (-1, 6),
    (-1, 7),
    (-1, 8),
    (-1, 9),
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 4),
    (0, 5),
    (0, 6),
    (0, 7),
    (0, 8),
    (0, 9),
    (0, 10),
    (1, 1),
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 5),
    (1, 6),
    (1, 7),
    (1, 8),
    (1, 9),
    (2, 1),
    (2, 2),
    (2, 3),
    (2, 4),
    (2, 5),
    (2, 6),
    (2, 7),
    (2, 8),
    (3, 1),
    (3, 2),
    (3, 3),
    (3, 4),
    (3, 5),
    (3, 6),
    (3, 7),
    (4, 1),
    (4, 2),
    (4, 3),
    (4, 4),
    (4, 5),
    (4, 6),
    (5, 1),
    (5, 2),
    (5, 3),
    (5, 4),
    (5, 5),
    (6, 1),
    (6, 2),
    (6, 3),
    (6, 4),
    (7, 1),
    (7, 2),
    (7, 3),
    (8, 1),
    (8, 2),
    (9, 1),
];

pub const ENDGAME20_MOVES_COVERS: &[MoveCover] = &[
    ((-9, 1), (-8, 2)),
    ((-8, 1), (-9, 1)),
    ((-8, 1), (-7, 2)),
    ((-8, 2), (-7, 3)),
    ((-7, 1), (-8, 1)),
    ((-7, 1), (-6, 2)),
    ((-7, 2), (-8, 2)),
    ((-7, 2), (-6, 3)),
    ((-7, 3), (-6, 4)),
    ((-6, 1), (-7, 1)),
    ((-6, 1), (-5, 2)),
    ((-6, 2), (-7, 2)),
    ((-6, 2), (-5, 3)),
    ((-6, 3), (-7, 3)),
    ((-6, 3), (-5, 4)),
    ((-6, 4), (-5, 5)),
    ((-5, 1), (-6, 1)),
    ((-5, 1), (-4, 2)),
    ((-5, 2), (-6, 2)),
    ((-5, 2), (-4, 3)),
    ((-5, 3), (-6, 3)),
    ((-5, 3), (-4, 4)),
    ((-5, 4), (-6, 4)),
    ((-5, 4), (-4, 5)),
    ((-5, 5), (-4, 6)),
    ((-4, 1), (-5, 1)),
    ((-4, 1), (-3, 2)),
    ((-4, 2), (-5, 2)),
    ((-4, 2), (-3, 3)),
    ((-4, 3), (-5, 3)),
    ((-4, 3), (-3, 4)),
    ((-4, 4), (-5, 4)),
    ((-4, 4), (-3, 5)),
    ((-4, 5), (-5, 5)),
    ((-4, 5), (-3, 6)),
    ((-4, 6), (-3, 7)),
    ((-3, 1), (-4, 1)),
    ((-3, 1), (-2, 2)),
    ((-3, 2), (-4, 2)),
    ((-3, 2), (-2, 3)),
    ((-3, 3), (-4, 3)),
    ((-3, 3), (-2, 4)),
    ((-3, 4), (-4, 4)),
    ((-3, 4), (-2, 5)),
    ((-3, 5), (-4, 5)),
    ((-3, 5), (-2, 6)),
    ((-3, 6), (-4, 6)),
    ((-3, 6), (-2, 7)),
    ((-3, 7), (-2, 8)),
    ((-2, 1), (-3, 1)),
    ((-2, 1), (-1, 2)),
    ((-2, 2), (-3, 2)),
    ((-2, 2), (-1, 3)),
    ((-2, 3), (-3, 3)),
    ((-2, 3), (-1, 4)),
    ((-2, 4), (-3, 4)),
    ((-2, 4), (-1, 5)),
    ((-2, 5), (-3, 5)),
    ((-2, 5), (-1, 6)),
    ((-2, 6), (-3, 6)),
    ((-2, 6), (-1, 7)),
    ((-2, 7), (-3, 7)),
    ((-2, 7), (-1, 8)),
    ((-2, 8), (-1, 9)),
    ((-1, 1), (-2, 1)),
    ((-1, 1), (0, 2)),
    ((-1, 2), (-2, 2)),
    ((-1, 2), (0, 3)),
    ((-1, 3), (-2, 3)),
    ((-1, 3), (0, 4)),
    ((-1, 4), (-2, 4)),
    ((-1, 4), (0, 5)),
    ((-1, 5), (-2, 5)),
    ((-1, 5), (0, 6)),
    ((-1, 6), (-2, 6)),
    ((-1, 6), (0, 7)),
    ((-1, 7), (-2, 7)),
    ((-1, 7), (0, 8)),
    ((-1, 8), (-2, 8)),
    ((-1, 8), (0, 9)),
    ((-1, 9), (0, 10)),
    ((0, 1), (-1, 1)),
    ((0, 1), (1, 1)),
    ((0, 2), (-1, 2)),
    ((0, 2), (1, 2)),
    ((0, 3), (-1, 3)),
    ((0, 3), (1, 3)),
    ((0, 4), (-1, 4)),
    ((0, 4), (1, 4)),
    ((0, 5), (-1, 5)),
    ((0, 5), (1, 5)),
    ((0, 6), (-1, 6)),
    ((0, 6), (1, 6)),
    ((0, 7), (-1, 7)),
    ((0, 7), (1, 7)),
    ((0, 8), (-1, 8)),
    ((0, 8), (1, 8)),
    ((0, 9), (-1, 9)),
    ((0, 9), (1, 9)),
    ((1, 1), (0, 2)),
    ((1, 1), (2, 1)),
    ((1, 2), (0, 3)),
    ((1, 2), (2, 2)),
    ((1, 3), (0, 4)),
    ((1, 3), (2, 3)),
    ((1, 4), (0, 5)),
    ((1, 4), (2, 4)),
    ((1, 5), (0, 6)),
    ((1, 5), (2, 5)),
    ((1, 6), (0, 7)),
    ((1, 6), (2, 6)),
    ((1, 7), (0, 8)),
    ((1, 7), (2, 7)),
    ((1, 8), (0, 9)),
    ((1, 8), (2, 8)),
    ((1, 9), (0, 10)),
    ((2, 1), (1, 2)),
    ((2, 1), (3, 1)),
    ((2, 2), (1, 3)),
    ((2, 2), (3, 2)),
    ((2, 3), (1, 4)),
    ((2, 3), (3, 3)),
    ((2, 4), (1, 5)),
    ((2, 4), (3, 4)),
    ((2, 5), (1, 6)),
    ((2, 5), (3, 5)),
    ((2, 6), (1, 7)),
    ((2, 6), (3, 6)),
    ((2, 7), (1, 8)),
    ((2, 7), (3, 7)),
    ((2, 8), (1, 9)),
    ((3, 1), (2, 2)),
    ((3, 1), (4, 1)),
    ((3, 2), (2, 3)),
    ((3, 2), (4, 2)),
    ((3, 3), (2, 4)),
    ((3, 3), (4, 3)),
    ((3, 4), (2, 5)),
    ((3, 4), (4, 4)),
    ((3, 5), (2, 6)),
    ((3, 5), (4, 5)),
    ((3, 6), (2, 7)),
    ((3, 6), (4, 6)),
    ((3, 7), (2, 8)),
    ((4, 1), (3, 2)),
    ((4, 1), (5, 1)),
    ((4, 2), (3, 3)),
    ((4, 2), (5, 2)),
    ((4, 3), (3, 4)),
    ((4, 3), (5, 3)),
    ((4, 4), (3, 5)),
    ((4, 4), (5, 4)),
    ((4, 5), (3, 6)),
    ((4, 5), (5, 5)),
    ((4, 6), (3, 7)),
    ((5, 1), (4, 2)),
    ((5, 1), (6, 1)),
    ((5, 2), (4, 3)),
    ((5, 2), (6, 2)),
    ((5, 3), (4, 4)),
    ((5, 3), (6, 3)),
    ((5, 4), (4, 5)),
    ((5, 4), (6, 4)),
    ((5, 5), (4, 6)),
    ((6, 1), (5, 2)),
    ((6, 1), (7, 1)),
    ((6, 2), (5, 3)),
    ((6, 2), (7, 2)),
    ((6, 3), (5, 4)),
    ((6, 3), (7, 3)),
    ((6, 4), (5, 5)),
    ((7, 1), (6, 2)),
    ((7, 1), (8, 1)),
    ((7, 2), (6, 3)),
    ((7, 2), (8, 2)),
    ((7, 3), (6, 4)),
    ((8, 1), (7, 2)),
    ((8, 1), (9, 1)),
    ((8, 2), (7, 3)),
    ((9, 1), (8, 2)),
];
