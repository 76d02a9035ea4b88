//! Reference feature table: 8 cryptojacking platform scripts, 10 malicious
//! samples, and 10 benign applications, with the 17 features in canonical
//! column order. Used as the shared fixture for correlation, selection, and
//! clustering tests and for the distribution benchmarks.
//!
//! Values are carried verbatim from the upstream measurement table with one
//! correction: the coinhive volume cell is recorded there with an extra
//! digit (274970) that contradicts both the row's own length/vocabulary
//! identity (3226 * log2(368) = 27497) and the table's own class mean; the
//! consistent value 27497 is used.

use crate::features::FeatureVector;

pub const LABEL_CRYPTOJACKING: &str = "cryptojacking";
pub const LABEL_MALICIOUS: &str = "malicious";
pub const LABEL_BENIGN: &str = "benign";

pub struct FixtureRow {
    pub name: &'static str,
    pub label: &'static str,
    pub values: [f64; 17],
}

#[rustfmt::skip]
pub const FEATURE_TABLE: [FixtureRow; 28] = [
    // columns: M, M_d, B, D, E, c_l, T, eta, V, eta1, n1, eta2, n2, params, sloc, physical, M_s
    FixtureRow { name: "deepMiner",      label: LABEL_CRYPTOJACKING, values: [184.0, 44.2, 14.1, 113.0, 4810434.0, 4667.0, 267246.0, 554.0, 42533.0, 47.0, 2440.0, 507.0, 2227.0, 75.0, 416.0, 499.0, 67.8] },
    FixtureRow { name: "Authedmine",     label: LABEL_CRYPTOJACKING, values: [168.0, 26.5, 19.7, 82.8, 4912255.0, 6096.0, 272903.0, 844.0, 59259.0, 41.0, 3247.0, 803.0, 2849.0, 73.0, 633.0, 784.0, 62.8] },
    FixtureRow { name: "Hashing",        label: LABEL_CRYPTOJACKING, values: [138.0, 29.1, 7.2, 94.6, 2185379.0, 2794.0, 124138.0, 342.0, 24393.0, 38.0, 1469.0, 315.0, 1415.0, 37.0, 412.0, 505.0, 68.2] },
    FixtureRow { name: "Miner",          label: LABEL_CRYPTOJACKING, values: [133.0, 27.7, 9.3, 90.5, 2537930.0, 3239.0, 140996.0, 403.0, 28032.0, 39.0, 1690.0, 364.0, 1549.0, 49.0, 479.0, 617.0, 64.1] },
    FixtureRow { name: "Coinhive",       label: LABEL_CRYPTOJACKING, values: [131.0, 27.5, 9.1, 94.8, 2608021.0, 3226.0, 144890.0, 368.0, 27497.0, 37.0, 1697.0, 331.0, 1529.0, 48.0, 476.0, 594.0, 63.7] },
    FixtureRow { name: "Crypto-loot",    label: LABEL_CRYPTOJACKING, values: [128.0, 39.7, 11.4, 88.1, 3034935.0, 3788.0, 168607.0, 546.0, 34443.0, 45.0, 1962.0, 501.0, 1826.0, 62.0, 322.0, 389.0, 70.3] },
    FixtureRow { name: "Freecontent",    label: LABEL_CRYPTOJACKING, values: [117.0, 28.3, 8.1, 89.4, 2180394.0, 2884.0, 121133.0, 350.0, 24373.0, 38.0, 1469.0, 312.0, 1415.0, 37.0, 412.0, 505.0, 62.7] },
    FixtureRow { name: "JSEcoin",        label: LABEL_CRYPTOJACKING, values: [64.0, 17.2, 10.2, 62.9, 1945165.0, 3257.0, 108064.0, 716.0, 30888.0, 45.0, 1878.0, 671.0, 1379.0, 49.0, 372.0, 412.0, 64.7] },
    FixtureRow { name: "20160209",       label: LABEL_MALICIOUS,     values: [92.0, 21.5, 5.6, 25.1, 423925.0, 1833.0, 23551.0, 580.0, 16826.0, 27.0, 1032.0, 553.0, 801.0, 22.0, 427.0, 503.0, 44.4] },
    FixtureRow { name: "20161126",       label: LABEL_MALICIOUS,     values: [62.0, 15.3, 4.2, 24.6, 315735.0, 1563.0, 17540.0, 292.0, 12800.0, 17.0, 798.0, 275.0, 765.0, 0.0, 403.0, 481.0, 90.5] },
    FixtureRow { name: "20170110",       label: LABEL_MALICIOUS,     values: [14.0, 4.4, 15.0, 26.7, 1211305.0, 4704.0, 67294.0, 782.0, 45210.0, 15.0, 2740.0, 767.0, 1964.0, 232.0, 313.0, 564.0, 93.6] },
    FixtureRow { name: "20170507",       label: LABEL_MALICIOUS,     values: [6.0, 24.0, 5.9, 11.1, 199917.0, 1864.0, 11106.0, 777.0, 17897.0, 18.0, 942.0, 759.0, 922.0, 1.0, 25.0, 890.0, 71.7] },
    FixtureRow { name: "20160927",       label: LABEL_MALICIOUS,     values: [3.0, 1.4, 4.0, 32.5, 393555.0, 1575.0, 21864.0, 204.0, 12084.0, 13.0, 957.0, 191.0, 618.0, 0.0, 213.0, 98.0, 23.2] },
    FixtureRow { name: "20170322",       label: LABEL_MALICIOUS,     values: [2.0, 18.1, 11.8, 7.1, 253442.0, 3514.0, 14080.0, 1123.0, 35607.0, 9.0, 1762.0, 1114.0, 1752.0, 3.0, 11.0, 1738.0, 90.9] },
    FixtureRow { name: "20170303",       label: LABEL_MALICIOUS,     values: [2.0, 8.6, 0.2, 9.4, 8338.0, 147.0, 463.0, 63.0, 878.0, 13.0, 73.0, 50.0, 74.0, 4.0, 23.0, 55.0, 78.7] },
    FixtureRow { name: "20160407",       label: LABEL_MALICIOUS,     values: [1.0, 33.3, 0.1, 2.7, 207.0, 19.0, 11.0, 16.0, 76.0, 5.0, 12.0, 11.0, 7.0, 0.0, 3.0, 3.0, 78.9] },
    FixtureRow { name: "20170501",       label: LABEL_MALICIOUS,     values: [1.0, 0.9, 2.1, 3.3, 21464.0, 758.0, 1192.0, 322.0, 6314.0, 5.0, 431.0, 317.0, 327.0, 0.0, 105.0, 105.0, 35.9] },
    FixtureRow { name: "20160810",       label: LABEL_MALICIOUS,     values: [1.0, 12.5, 0.5, 11.9, 20148.0, 275.0, 1119.0, 70.0, 1685.0, 6.0, 255.0, 64.0, 20.0, 0.0, 8.0, 13.0, 60.4] },
    FixtureRow { name: "The Boat",       label: LABEL_BENIGN,        values: [2135.0, 69.3, 110.8, 392.0, 130285522.0, 31916.0, 7238084.0, 1364.0, 332361.0, 59.0, 17341.0, 1305.0, 14575.0, 852.0, 3084.0, 3349.0, 66.7] },
    FixtureRow { name: "IBM Design",     label: LABEL_BENIGN,        values: [2119.0, 68.3, 110.9, 397.1, 132237213.0, 32018.0, 7346511.0, 1351.0, 332981.0, 59.0, 17393.0, 1292.0, 14625.0, 853.0, 3103.0, 3372.0, 66.7] },
    FixtureRow { name: "Histography",    label: LABEL_BENIGN,        values: [1743.0, 40.7, 95.2, 249.5, 71325242.0, 26627.0, 3962513.0, 1704.0, 285833.0, 55.0, 14963.0, 1649.0, 11663.0, 803.0, 4278.0, 5043.0, 59.4] },
    FixtureRow { name: "Know Lupus",     label: LABEL_BENIGN,        values: [1006.0, 28.1, 92.9, 170.4, 47474425.0, 25120.0, 2637468.0, 2181.0, 278600.0, 54.0, 13424.0, 2127.0, 11696.0, 615.0, 3583.0, 4288.0, 65.2] },
    FixtureRow { name: "tota11y",        label: LABEL_BENIGN,        values: [815.0, 38.8, 59.4, 227.7, 40563065.0, 17486.0, 2253503.0, 1167.0, 178157.0, 52.0, 9764.0, 1115.0, 7722.0, 412.0, 2099.0, 2336.0, 62.9] },
    FixtureRow { name: "Masi Tupungato", label: LABEL_BENIGN,        values: [784.0, 58.2, 47.1, 185.0, 26199193.0, 14296.0, 1455510.0, 958.0, 141585.0, 43.0, 7875.0, 915.0, 6421.0, 238.0, 1347.0, 1470.0, 67.2] },
    FixtureRow { name: "Fillipo",        label: LABEL_BENIGN,        values: [703.0, 42.9, 43.1, 194.3, 25139766.0, 12900.0, 1396653.0, 1045.0, 129377.0, 54.0, 7132.0, 991.0, 5768.0, 269.0, 1637.0, 1770.0, 61.5] },
    FixtureRow { name: "Leg Work",       label: LABEL_BENIGN,        values: [412.0, 75.7, 34.0, 241.3, 24651056.0, 11100.0, 1369503.0, 589.0, 102143.0, 45.0, 5835.0, 544.0, 5265.0, 66.0, 544.0, 633.0, 65.9] },
    FixtureRow { name: "Code Conf",      label: LABEL_BENIGN,        values: [409.0, 27.8, 41.1, 197.1, 24336420.0, 12500.0, 1352023.0, 939.0, 123437.0, 49.0, 7162.0, 890.0, 5338.0, 315.0, 1469.0, 1753.0, 64.9] },
    FixtureRow { name: "Louis Browns",   label: LABEL_BENIGN,        values: [368.0, 35.6, 21.2, 106.7, 6792400.0, 6529.0, 377355.0, 862.0, 63667.0, 51.0, 3393.0, 811.0, 3136.0, 68.0, 1034.0, 1357.0, 53.3] },
];

/// The fixture as labeled feature vectors, in table order.
pub fn labeled_vectors() -> Vec<(String, FeatureVector)> {
    FEATURE_TABLE
        .iter()
        .map(|r| (r.label.to_string(), FeatureVector::from_array(r.values)))
        .collect()
}

/// Rows of one class, as plain feature arrays.
pub fn class_matrix(label: &str) -> Vec<[f64; 17]> {
    FEATURE_TABLE
        .iter()
        .filter(|r| r.label == label)
        .map(|r| r.values)
        .collect()
}
