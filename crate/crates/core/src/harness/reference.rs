//! Richness thresholds as published for Tables 2 to 9, kept for comparison.
//!
//! Positive entries are thresholds, negative entries the number of factors
//! missing from the length-`10^6` prefix. Keys match series names in the
//! repro manifests; column `i` is factor length `i + 1`.

/// `(series, row)` pairs of one table.
pub type ReferenceTable = &'static [(&'static str, &'static [i64])];

/// Expansions of `0..30` in base 7/3.
pub const TABLE1: [&str; 30] = [
    "ε", "3", "6", "32", "35", "61", "64", "320", "323", "326", "352", "355", "611", "614", "640",
    "643", "646", "3202", "3205", "3231", "3234", "3260", "3263", "3266", "3522", "3525", "3551",
    "3554", "6110", "6113",
];

pub const TABLE2: ReferenceTable = &[
    (
        "wmin_3-2",
        &[
            2, 6, 51, 54, 123, 358, 787, 1479, 2643, 7272, 18200, 39358, 65137, 154725, 390091,
            821322, -63,
        ],
    ),
    (
        "wmin_5-2",
        &[
            3, 6, 11, 52, 221, 228, 661, 992, 2589, 6507, 16605, 31442, 71030, 189740, 309169,
            827260, -64,
        ],
    ),
    (
        "wmin_7-2",
        &[
            2, 8, 34, 86, 115, 201, 905, 1126, 3160, 5725, 21722, 41938, 77728, 208773, 384796,
            894414, -60,
        ],
    ),
    (
        "wmin_9-2",
        &[
            4, 7, 29, 42, 128, 188, 626, 2365, 5589, 6548, 23435, 32075, 81088, 190265, 358020,
            914320, -61,
        ],
    ),
    (
        "sqrt2_base2",
        &[
            2, 10, 19, 22, 133, 459, 517, 1806, 3259, 7185, 18928, 32231, 83298, 166437, 396117,
            847032, -53,
        ],
    ),
    (
        "pi_base2",
        &[
            3, 5, 20, 25, 102, 400, 540, 1351, 3790, 8034, 17225, 35851, 71909, 160119, 405148,
            824328, -63,
        ],
    ),
    (
        "random_base2",
        &[
            3, 6, 17, 68, 171, 185, 548, 1683, 2989, 6813, 12979, 28729, 78115, 145390, 454016,
            723874, -68,
        ],
    ),
    (
        "expected_base2",
        &[
            1, 5, 16, 44, 110, 266, 621, 1419, 3194, 7097, 15615, 34069, 73817, 158991, 340695,
            726817, 1544487,
        ],
    ),
];

pub const TABLE3: ReferenceTable = &[
    (
        "wmin_4-3",
        &[
            3, 16, 165, 389, 1329, 4607, 21521, 82002, 198800, 636034, -625,
        ],
    ),
    (
        "wmin_5-3",
        &[
            5, 32, 70, 396, 1926, 5768, 16366, 58164, 252503, 643016, -586,
        ],
    ),
    (
        "wmin_7-3",
        &[
            4, 19, 98, 573, 1837, 5099, 16181, 58426, 169456, 850881, -669,
        ],
    ),
    (
        "wmin_8-3",
        &[
            3, 35, 79, 342, 1469, 5752, 17148, 48774, 224920, 624652, -625,
        ],
    ),
    (
        "sqrt2_base3",
        &[
            4, 15, 66, 377, 1290, 7404, 16511, 56260, 211187, 790264, -629,
        ],
    ),
    (
        "pi_base3",
        &[
            6, 15, 119, 348, 1978, 6379, 15779, 79122, 183178, 584098, -647,
        ],
    ),
    (
        "random_base3",
        &[
            9, 22, 175, 490, 1118, 5479, 17382, 66200, 213250, 692671, -616,
        ],
    ),
    (
        "expected_base3",
        &[
            3, 19, 88, 355, 1334, 4805, 16818, 57663, 194615, 648719, 2140774,
        ],
    ),
];

pub const TABLE4: ReferenceTable = &[
    (
        "wmin_5-4",
        &[4, 62, 333, 1371, 6932, 33260, 143470, 826461, -5840],
    ),
    (
        "wmin_7-4",
        &[4, 47, 430, 2201, 6680, 31757, 164198, 902744, -5664],
    ),
    (
        "wmin_9-4",
        &[10, 39, 309, 1290, 6417, 35636, 181371, 857616, -5803],
    ),
    (
        "sqrt2_base4",
        &[10, 46, 236, 1486, 8795, 35655, 149755, 673039, -5818],
    ),
    (
        "pi_base4",
        &[4, 55, 236, 1624, 9359, 34933, 177634, 702834, -5740],
    ),
    (
        "random_base4",
        &[9, 35, 268, 2309, 6858, 36779, 164101, 604566, -5830],
    ),
    (
        "expected_base4",
        &[5, 44, 266, 1419, 7097, 34069, 158991, 726817, 3270678],
    ),
];

pub const TABLE5: ReferenceTable = &[
    (
        "wmin_6-5",
        &[5, 81, 791, 3939, 26288, 136085, 942627, -30081],
    ),
    (
        "wmin_7-5",
        &[7, 62, 887, 4374, 37118, 145118, 916558, -29994],
    ),
    ("wmin_8-5", &[18, 94, 923, 3629, 23224, 188051, -1, -30304]),
    (
        "wmin_9-5",
        &[5, 135, 617, 4571, 20674, 191759, 752732, -30131],
    ),
    (
        "sqrt2_base5",
        &[6, 109, 640, 3435, 22803, 140840, 844882, -30422],
    ),
    ("pi_base5", &[9, 63, 887, 6655, 24784, 150127, -1, -30251]),
    (
        "random_base5",
        &[10, 109, 472, 4375, 32282, 171534, 900053, -30399],
    ),
    (
        "expected_base5",
        &[8, 80, 603, 4023, 25147, 150884, 880161, 5029493],
    ),
];

pub const TABLE6: ReferenceTable = &[
    ("wmin_7-6", &[6, 228, 1316, 7943, 70475, 518489, -7970]),
    ("sqrt2_base6", &[12, 157, 1150, 8021, 74028, 468743, -7828]),
    ("pi_base6", &[15, 122, 1534, 12856, 73806, 583632, -7827]),
    ("random_base6", &[15, 137, 1354, 9120, 61776, 545873, -7908]),
    (
        "expected_base6",
        &[10, 129, 1161, 9288, 69663, 501577, 3511045],
    ),
];

pub const TABLE7: ReferenceTable = &[
    ("wmin_8-7", &[7, 252, 1921, 18438, 166562, -17]),
    ("wmin_9-7", &[26, 175, 1765, 16825, 163228, -19]),
    ("sqrt2_base7", &[8, 133, 1979, 17959, 150677, -19]),
    ("pi_base7", &[11, 347, 2119, 17795, 137191, -25]),
    ("random_base7", &[13, 245, 1879, 17087, 185739, -33]),
    ("expected_base7", &[13, 190, 2002, 18688, 163524, 1373606]),
];

pub const TABLE8: ReferenceTable = &[
    ("wmin_9-8", &[8, 405, 2968, 34776, 303176, -5738]),
    ("sqrt2_base8", &[31, 202, 3321, 27763, 399910, -5742]),
    ("pi_base8", &[15, 369, 2554, 36141, 355165, -5758]),
    ("random_base8", &[21, 375, 3825, 36054, 346188, -5816]),
    ("expected_base8", &[16, 266, 3194, 34069, 340695, 3270678]),
];

pub const TABLE9: ReferenceTable = &[
    (
        "u1",
        &[
            7, 28, 101, 324, 1467, 5186, 15357, 61842, 196505, 794699, -638,
        ],
    ),
    (
        "u2",
        &[
            6, 19, 131, 445, 1513, 5865, 13673, 60611, 201995, 586281, -660,
        ],
    ),
    (
        "u3",
        &[
            6, 20, 79, 376, 1890, 4379, 30884, 62889, 207741, 675919, -608,
        ],
    ),
    (
        "u4",
        &[
            6, 19, 125, 459, 2036, 5461, 16702, 55581, 196247, 646705, -642,
        ],
    ),
    (
        "u5",
        &[
            5, 32, 219, 551, 1734, 5119, 20158, 69743, 192828, 699757, -608,
        ],
    ),
    (
        "u6",
        &[
            4, 41, 112, 368, 1420, 4054, 21026, 67403, 170275, 706085, -628,
        ],
    ),
    (
        "u7",
        &[
            5, 31, 67, 296, 1332, 6259, 16860, 68380, 196740, 650223, -608,
        ],
    ),
    (
        "u8",
        &[
            12, 24, 102, 302, 1435, 5665, 14792, 64001, 261771, 630669, -595,
        ],
    ),
    (
        "u9",
        &[
            3, 17, 64, 339, 1684, 5916, 15667, 61957, 186713, 604557, -634,
        ],
    ),
    (
        "u10",
        &[
            7, 24, 220, 399, 1403, 4792, 19613, 67004, 163180, 655187, -681,
        ],
    ),
    (
        "u11",
        &[
            4, 24, 118, 551, 1376, 5161, 19444, 65987, 165643, 670311, -613,
        ],
    ),
    (
        "u12",
        &[
            5, 15, 98, 327, 1145, 7172, 18647, 63339, 186010, 589654, -632,
        ],
    ),
    (
        "u13",
        &[
            5, 25, 46, 264, 1320, 6031, 16866, 55016, 208499, 871809, -660,
        ],
    ),
    (
        "u14",
        &[
            3, 20, 103, 407, 1657, 5582, 19505, 55349, 291635, 720286, -665,
        ],
    ),
    (
        "u15",
        &[
            4, 14, 151, 408, 1441, 3791, 16716, 61525, 208025, 642467, -624,
        ],
    ),
    (
        "u16",
        &[
            4, 38, 82, 258, 1085, 5424, 20403, 76416, 232390, 632903, -642,
        ],
    ),
    (
        "u17",
        &[
            7, 29, 135, 944, 1811, 5536, 13357, 58023, 222863, 885517, -629,
        ],
    ),
    (
        "u18",
        &[
            11, 45, 112, 405, 1607, 4943, 18437, 61846, 228336, 750062, -604,
        ],
    ),
    (
        "u19",
        &[
            4, 13, 91, 535, 1223, 4607, 23991, 49271, 215391, 799419, -608,
        ],
    ),
    (
        "u20",
        &[
            3, 49, 121, 663, 1944, 4639, 18637, 61147, 243133, 608729, -588,
        ],
    ),
    (
        "sqrt2_base3",
        &[
            4, 15, 66, 377, 1290, 7404, 16511, 56260, 211187, 790264, -629,
        ],
    ),
    (
        "pi_base3",
        &[
            6, 15, 119, 348, 1978, 6379, 15779, 79122, 183178, 584098, -647,
        ],
    ),
    (
        "random_base3",
        &[
            6, 12, 149, 401, 1790, 3931, 17273, 64530, 199859, 718105, -617,
        ],
    ),
    (
        "expected_base3",
        &[
            3, 19, 88, 335, 1334, 4805, 16818, 57663, 194615, 648719, 2140774,
        ],
    ),
];

/// Reference rows of `table2` .. `table9`.
pub fn reference_table(id: &str) -> Option<ReferenceTable> {
    Some(match id {
        "table2" => TABLE2,
        "table3" => TABLE3,
        "table4" => TABLE4,
        "table5" => TABLE5,
        "table6" => TABLE6,
        "table7" => TABLE7,
        "table8" => TABLE8,
        "table9" => TABLE9,
        _ => return None,
    })
}

/// Published row for `series` in table `id`.
pub fn reference_row(id: &str, series: &str) -> Option<&'static [i64]> {
    reference_table(id)?
        .iter()
        .find(|(k, _)| *k == series)
        .map(|(_, v)| *v)
}
