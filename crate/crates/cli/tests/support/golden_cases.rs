//! Commands whose outputs are frozen under `tests/golden`.

use std::path::PathBuf;

pub const CASES: &[(&str, &[&str])] = &[
    ("basis_empty_2.txt", &["basis", "∅", "2", "0", "1"]),
    ("basis_1_3.txt", &["basis", "(1)", "3", "1", "2"]),
    ("basis_21_3.txt", &["basis", "(2,1)", "3", "1", "3"]),
    ("basis_22_3.json", &["basis", "(2,2)", "3", "1/2", "2", "--json"]),
    ("paths_22_3_1.txt", &["paths", "(2,2)", "3", "1", "1", "2", "3/2"]),
    ("paths_21_4_2.txt", &["paths", "(2,1)", "4", "2", "1", "3", "2"]),
    ("figure_1.svg", &["figures", "1"]),
    ("figure_2.svg", &["figures", "2"]),
    ("figure_3.svg", &["figures", "3"]),
    ("figure_4.svg", &["figures", "4"]),
    ("figure_6.svg", &["figures", "6"]),
    ("figure_7.svg", &["figures", "7"]),
];

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}
