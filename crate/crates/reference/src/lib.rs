//! Reference values for the (64,48) PAC example, the minimum-weight tables
//! for `N = 32, 64, 128, 256` and the `m = 6` beta-expansion ranks.

/// Frozen set of the (64,48) code.
pub const PAC_FROZEN: [usize; 16] = [0, 1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 16, 17, 18, 32, 33];

/// Convolution polynomial of the (64,48) PAC code.
pub const PAC_P: [u8; 4] = [1, 0, 1, 1];

/// Top-left 10 x 10 block of `M` for the (64,48) PAC code.
pub const M_BLOCK: [&str; 10] = [
    "1000000000",
    "1100000000",
    "0010000000",
    "1011000000",
    "1110100000",
    "1001110000",
    "0101001000",
    "1111101100",
    "1000011010",
    "1100010111",
];

/// Reliability rank (0 = most reliable) of the monomial with mask `col`,
/// `m = 6`, `beta = 2^(1/4)`.
pub const M6_BETA_RANK: [usize; 64] = [
    0, 1, 2, 6, 3, 8, 9, 18, 4, 10, 11, 21, 13, 23, 25, 37, 5, 12, 14, 24, 16, 27, 29, 41, 19, 30, 32, 43, 35, 46, 48,
    56, 7, 15, 17, 28, 20, 31, 33, 44, 22, 34, 36, 47, 39, 49, 51, 58, 26, 38, 40, 50, 42, 52, 53, 59, 45, 54, 55, 60,
    57, 61, 62, 63,
];

/// Co-dimensions where the lower bound meets the polar count, `m = 7`.
pub const NON_IMPROVABLE_M7: [(usize, usize); 7] = [
    (1, 11),
    (31, 43),
    (70, 74),
    (76, 81),
    (101, 108),
    (118, 121),
    (125, 127),
];

/// Co-dimensions where the lower bound meets the polar count, `m = 8`.
pub const NON_IMPROVABLE_M8: [(usize, usize); 8] = [
    (1, 16),
    (49, 73),
    (123, 128),
    (136, 147),
    (188, 204),
    (228, 235),
    (248, 249),
    (253, 255),
];

/// Rows 0..34 of the (64,48) PAC code: index, monomial, row polynomial,
/// complementary index, complemented monomial, complemented polynomial.
pub const PAC_ROWS: [(usize, &str, &str, usize, &str, &str); 35] = [
    (
        0,
        "x0x1x2x3x4x5",
        "x0x1x2x3x4x5 + x0x2x3x4x5 + x2x3x4x5",
        63,
        "1",
        "x0x1 + x1 + 1",
    ),
    (
        1,
        "x1x2x3x4x5",
        "x0x1x3x4x5 + x1x2x3x4x5 + x2x3x4x5",
        62,
        "x0",
        "x0x1 + x0 + x2",
    ),
    (
        2,
        "x0x2x3x4x5",
        "x0x1x3x4x5 + x0x2x3x4x5 + x1x3x4x5",
        61,
        "x1",
        "x0x2 + x1 + x2",
    ),
    (
        3,
        "x2x3x4x5",
        "x0x3x4x5 + x1x3x4x5 + x2x3x4x5",
        60,
        "x0x1",
        "x0x1 + x0x2 + x1x2",
    ),
    (
        4,
        "x0x1x3x4x5",
        "x0x1x3x4x5 + x0x3x4x5 + x3x4x5",
        59,
        "x2",
        "x0x1x2 + x1x2 + x2",
    ),
    (
        5,
        "x1x3x4x5",
        "x0x1x2x4x5 + x1x3x4x5 + x3x4x5",
        58,
        "x0x2",
        "x0x1x2 + x0x2 + x3",
    ),
    (
        6,
        "x0x3x4x5",
        "x0x1x2x4x5 + x0x3x4x5 + x1x2x4x5",
        57,
        "x1x2",
        "x0x3 + x1x2 + x3",
    ),
    (
        7,
        "x3x4x5",
        "x0x2x4x5 + x1x2x4x5 + x3x4x5",
        56,
        "x0x1x2",
        "x0x1x2 + x0x3 + x1x3",
    ),
    (
        8,
        "x0x1x2x4x5",
        "x0x1x2x4x5 + x0x2x4x5 + x2x4x5",
        55,
        "x3",
        "x0x1x3 + x1x3 + x3",
    ),
    (
        9,
        "x1x2x4x5",
        "x0x1x4x5 + x1x2x4x5 + x2x4x5",
        54,
        "x0x3",
        "x0x1x3 + x0x3 + x2x3",
    ),
    (
        10,
        "x0x2x4x5",
        "x0x1x4x5 + x0x2x4x5 + x1x4x5",
        53,
        "x1x3",
        "x0x2x3 + x1x3 + x2x3",
    ),
    (
        11,
        "x2x4x5",
        "x0x4x5 + x1x4x5 + x2x4x5",
        52,
        "x0x1x3",
        "x0x1x3 + x0x2x3 + x1x2x3",
    ),
    (
        12,
        "x0x1x4x5",
        "x0x1x4x5 + x0x4x5 + x4x5",
        51,
        "x2x3",
        "x0x1x2x3 + x1x2x3 + x2x3",
    ),
    (
        13,
        "x1x4x5",
        "x0x1x2x3x5 + x1x4x5 + x4x5",
        50,
        "x0x2x3",
        "x0x1x2x3 + x0x2x3 + x4",
    ),
    (
        14,
        "x0x4x5",
        "x0x1x2x3x5 + x0x4x5 + x1x2x3x5",
        49,
        "x1x2x3",
        "x0x4 + x1x2x3 + x4",
    ),
    (
        15,
        "x4x5",
        "x0x2x3x5 + x1x2x3x5 + x4x5",
        48,
        "x0x1x2x3",
        "x0x1x2x3 + x0x4 + x1x4",
    ),
    (
        16,
        "x0x1x2x3x5",
        "x0x1x2x3x5 + x0x2x3x5 + x2x3x5",
        47,
        "x4",
        "x0x1x4 + x1x4 + x4",
    ),
    (
        17,
        "x1x2x3x5",
        "x0x1x3x5 + x1x2x3x5 + x2x3x5",
        46,
        "x0x4",
        "x0x1x4 + x0x4 + x2x4",
    ),
    (
        18,
        "x0x2x3x5",
        "x0x1x3x5 + x0x2x3x5 + x1x3x5",
        45,
        "x1x4",
        "x0x2x4 + x1x4 + x2x4",
    ),
    (
        19,
        "x2x3x5",
        "x0x3x5 + x1x3x5 + x2x3x5",
        44,
        "x0x1x4",
        "x0x1x4 + x0x2x4 + x1x2x4",
    ),
    (
        20,
        "x0x1x3x5",
        "x0x1x3x5 + x0x3x5 + x3x5",
        43,
        "x2x4",
        "x0x1x2x4 + x1x2x4 + x2x4",
    ),
    (
        21,
        "x1x3x5",
        "x0x1x2x5 + x1x3x5 + x3x5",
        42,
        "x0x2x4",
        "x0x1x2x4 + x0x2x4 + x3x4",
    ),
    (
        22,
        "x0x3x5",
        "x0x1x2x5 + x0x3x5 + x1x2x5",
        41,
        "x1x2x4",
        "x0x3x4 + x1x2x4 + x3x4",
    ),
    (
        23,
        "x3x5",
        "x0x2x5 + x1x2x5 + x3x5",
        40,
        "x0x1x2x4",
        "x0x1x2x4 + x0x3x4 + x1x3x4",
    ),
    (
        24,
        "x0x1x2x5",
        "x0x1x2x5 + x0x2x5 + x2x5",
        39,
        "x3x4",
        "x0x1x3x4 + x1x3x4 + x3x4",
    ),
    (
        25,
        "x1x2x5",
        "x0x1x5 + x1x2x5 + x2x5",
        38,
        "x0x3x4",
        "x0x1x3x4 + x0x3x4 + x2x3x4",
    ),
    (
        26,
        "x0x2x5",
        "x0x1x5 + x0x2x5 + x1x5",
        37,
        "x1x3x4",
        "x0x2x3x4 + x1x3x4 + x2x3x4",
    ),
    (
        27,
        "x2x5",
        "x0x5 + x1x5 + x2x5",
        36,
        "x0x1x3x4",
        "x0x1x3x4 + x0x2x3x4 + x1x2x3x4",
    ),
    (
        28,
        "x0x1x5",
        "x0x1x5 + x0x5 + x5",
        35,
        "x2x3x4",
        "x0x1x2x3x4 + x1x2x3x4 + x2x3x4",
    ),
    (
        29,
        "x1x5",
        "x0x1x2x3x4 + x1x5 + x5",
        34,
        "x0x2x3x4",
        "x0x1x2x3x4 + x0x2x3x4 + x5",
    ),
    (
        30,
        "x0x5",
        "x0x1x2x3x4 + x0x5 + x1x2x3x4",
        33,
        "x1x2x3x4",
        "x0x5 + x1x2x3x4 + x5",
    ),
    (
        31,
        "x5",
        "x0x2x3x4 + x1x2x3x4 + x5",
        32,
        "x0x1x2x3x4",
        "x0x1x2x3x4 + x0x5 + x1x5",
    ),
    (
        32,
        "x0x1x2x3x4",
        "x0x1x2x3x4 + x0x2x3x4 + x2x3x4",
        31,
        "x5",
        "x5+x1x5+x0x1x5",
    ),
    (
        33,
        "x1x2x3x4",
        "x0x1x3x4 + x1x2x3x4 + x2x3x4",
        30,
        "x0x5",
        "x2x5+x0x5+x0x1x5",
    ),
    (
        34,
        "x0x2x3x4",
        "x0x1x3x4 + x0x2x3x4 + x1x3x4",
        29,
        "x1x5",
        "x2x5+x1x5+x0x2x5",
    ),
];

/// `(N - k, wmin, lower bound, polar count)` for `m = 5`.
pub const BOUNDS_M5: [(usize, u64, u128, u128); 30] = [
    (2, 2, 240, 240),
    (3, 2, 112, 112),
    (4, 2, 48, 48),
    (5, 2, 16, 16),
    (6, 4, 120, 1240),
    (7, 4, 120, 728),
    (8, 4, 120, 472),
    (9, 4, 120, 344),
    (10, 4, 120, 216),
    (11, 4, 120, 152),
    (12, 4, 56, 88),
    (13, 4, 56, 56),
    (14, 4, 24, 24),
    (15, 4, 8, 8),
    (16, 4, 8, 8),
    (17, 8, 28, 364),
    (18, 8, 28, 236),
    (19, 8, 28, 172),
    (20, 8, 28, 108),
    (21, 8, 28, 76),
    (22, 8, 28, 44),
    (23, 8, 28, 28),
    (24, 8, 12, 12),
    (25, 8, 4, 4),
    (26, 16, 6, 62),
    (27, 16, 6, 30),
    (28, 16, 6, 14),
    (29, 16, 6, 6),
    (30, 16, 2, 2),
    (31, 32, 1, 1),
];

/// `(N - k, wmin, lower bound, polar count)` for `m = 6`.
pub const BOUNDS_M6: [(usize, u64, u128, u128); 62] = [
    (2, 2, 992, 992),
    (3, 2, 480, 480),
    (4, 2, 224, 224),
    (5, 2, 96, 96),
    (6, 2, 32, 32),
    (7, 2, 32, 32),
    (8, 4, 496, 6320),
    (9, 4, 496, 4272),
    (10, 4, 496, 3248),
    (11, 4, 496, 2224),
    (12, 4, 496, 1712),
    (13, 4, 496, 1200),
    (14, 4, 496, 944),
    (15, 4, 496, 688),
    (16, 4, 240, 432),
    (17, 4, 240, 304),
    (18, 4, 112, 176),
    (19, 4, 112, 176),
    (20, 4, 112, 112),
    (21, 4, 48, 48),
    (22, 4, 48, 48),
    (23, 4, 16, 16),
    (24, 4, 16, 16),
    (25, 4, 16, 16),
    (26, 4, 16, 16),
    (27, 8, 120, 2456),
    (28, 8, 120, 1944),
    (29, 8, 120, 1432),
    (30, 8, 120, 1176),
    (31, 8, 120, 920),
    (32, 8, 120, 664),
    (33, 8, 120, 536),
    (34, 8, 120, 408),
    (35, 8, 120, 280),
    (36, 8, 120, 216),
    (37, 8, 120, 152),
    (38, 8, 120, 152),
    (39, 8, 56, 88),
    (40, 8, 56, 56),
    (41, 8, 24, 24),
    (42, 8, 24, 24),
    (43, 8, 8, 8),
    (44, 8, 8, 8),
    (45, 8, 8, 8),
    (46, 16, 28, 556),
    (47, 16, 28, 428),
    (48, 16, 28, 300),
    (49, 16, 28, 236),
    (50, 16, 28, 172),
    (51, 16, 28, 108),
    (52, 16, 28, 76),
    (53, 16, 28, 44),
    (54, 16, 28, 28),
    (55, 16, 12, 12),
    (56, 16, 4, 4),
    (57, 16, 4, 4),
    (58, 32, 6, 62),
    (59, 32, 6, 30),
    (60, 32, 6, 14),
    (61, 32, 6, 6),
    (62, 32, 2, 2),
    (63, 64, 1, 1),
];

/// `(N - k, wmin, polar count)` at the non-improvable co-dimensions for `m = 7`.
pub const BOUNDS_M7_LISTED: [(usize, u64, u128); 49] = [
    (2, 2, 4032),
    (3, 2, 1984),
    (4, 2, 960),
    (5, 2, 448),
    (6, 2, 192),
    (7, 2, 192),
    (8, 2, 64),
    (9, 2, 64),
    (10, 2, 64),
    (11, 2, 64),
    (31, 4, 224),
    (32, 4, 224),
    (33, 4, 96),
    (34, 4, 96),
    (35, 4, 96),
    (36, 4, 96),
    (37, 4, 96),
    (38, 4, 32),
    (39, 4, 32),
    (40, 4, 32),
    (41, 4, 32),
    (42, 4, 32),
    (43, 4, 32),
    (70, 8, 112),
    (71, 8, 112),
    (72, 8, 48),
    (73, 8, 48),
    (74, 8, 48),
    (76, 8, 16),
    (77, 8, 16),
    (78, 8, 16),
    (79, 8, 16),
    (80, 8, 16),
    (81, 8, 16),
    (101, 16, 56),
    (102, 16, 24),
    (103, 16, 24),
    (104, 16, 24),
    (105, 16, 8),
    (106, 16, 8),
    (107, 16, 8),
    (108, 16, 8),
    (118, 32, 28),
    (119, 32, 12),
    (120, 32, 4),
    (121, 32, 4),
    (125, 64, 6),
    (126, 64, 2),
    (127, 128, 1),
];
