//! Fixed regression catalogs.

use crate::spec::GroupSpec;

const SOLUBLE: &[(&str, &str)] = &[
    ("C_2", "cyclic 2"),
    ("C_3", "cyclic 3"),
    ("C_4", "cyclic 4"),
    ("C_5", "cyclic 5"),
    ("C_6", "cyclic 6"),
    ("C_7", "cyclic 7"),
    ("C_8", "cyclic 8"),
    ("C_9", "cyclic 9"),
    ("C_10", "cyclic 10"),
    ("C_11", "cyclic 11"),
    ("C_12", "cyclic 12"),
    ("C_13", "cyclic 13"),
    ("C_14", "cyclic 14"),
    ("C_15", "cyclic 15"),
    ("C_16", "cyclic 16"),
    ("C_2^2", "elementary 2 2"),
    ("C_2^3", "elementary 2 3"),
    ("C_2^4", "elementary 2 4"),
    ("C_3^2", "elementary 3 2"),
    ("C_3^3", "elementary 3 3"),
    ("C_5^2", "elementary 5 2"),
    ("D_3", "dihedral 3"),
    ("D_4", "dihedral 4"),
    ("D_5", "dihedral 5"),
    ("D_6", "dihedral 6"),
    ("D_7", "dihedral 7"),
    ("D_8", "dihedral 8"),
    ("D_9", "dihedral 9"),
    ("D_10", "dihedral 10"),
    ("D_11", "dihedral 11"),
    ("D_12", "dihedral 12"),
    ("Q_8", "quaternion8"),
    ("A_4", "alternating 4"),
    ("S_4", "symmetric 4"),
    ("F_4^2:C_3", "affine 2 2 [[0,1],[1,1]] power 2"),
    ("C_3^2:C_2", "affine 3 1 [[2]] power 2"),
    ("C_3^3:C_2", "affine 3 1 [[2]] power 3"),
    ("F_20", "affine 5 1 [[2]]"),
    ("F_42", "affine 7 1 [[3]]"),
    ("C_7:C_3", "affine 7 1 [[2]]"),
    ("C_3^2:C_4", "affine 3 2 [[0,1],[2,0]]"),
    ("C_2^3:C_7", "affine 2 3 [[0,1,0],[0,0,1],[1,1,0]]"),
    ("C_2^2:S_3", "affine 2 2 [[0,1],[1,1]] [[0,1],[1,0]]"),
    ("C_4 x C_2", "direct_product (cyclic 4) (cyclic 2)"),
    ("C_6 x C_6", "direct_product (cyclic 6) (cyclic 6)"),
    ("C_2 x S_3", "direct_product (cyclic 2) (symmetric 3)"),
    ("C_3 x S_3", "direct_product (cyclic 3) (symmetric 3)"),
    ("C_5 x S_3", "direct_product (cyclic 5) (symmetric 3)"),
    (
        "C_2^2 x S_3",
        "direct_product (elementary 2 2) (symmetric 3)",
    ),
    ("S_3 x S_3", "direct_product (symmetric 3) (symmetric 3)"),
    ("S_3 x D_5", "direct_product (symmetric 3) (dihedral 5)"),
    ("C_2 x Q_8", "direct_product (cyclic 2) (quaternion8)"),
    ("C_2 x D_4", "direct_product (cyclic 2) (dihedral 4)"),
    ("C_2 x A_4", "direct_product (cyclic 2) (alternating 4)"),
    ("C_3 x A_4", "direct_product (cyclic 3) (alternating 4)"),
    ("C_2 x S_4", "direct_product (cyclic 2) (symmetric 4)"),
    ("C_3 x S_4", "direct_product (cyclic 3) (symmetric 4)"),
    (
        "C_2 x C_3^2:C_2",
        "direct_product (affine 3 1 [[2]] power 2) (cyclic 2)",
    ),
];

const INSOLUBLE: &[(&str, &str)] = &[("A_5", "alternating 5"), ("S_5", "symmetric 5")];

/// Constructions realising each listed exceptional case of the ratio
/// inequality, tagged with the case number.
const EXCEPTIONAL: &[(u8, &str, &str)] = &[
    (1, "F_4^2:C_3", "affine 2 2 [[0,1],[1,1]] power 2"),
    (2, "C_3^2:C_2", "affine 3 1 [[2]] power 2"),
    (
        2,
        "C_2 x C_3^2:C_2",
        "direct_product (affine 3 1 [[2]] power 2) (cyclic 2)",
    ),
    (3, "A_4", "affine 2 2 [[0,1],[1,1]]"),
    (3, "S_4", "affine 2 2 [[0,1],[1,1]] [[0,1],[1,0]]"),
    (3, "D_5", "affine 5 1 [[4]]"),
    (3, "F_20", "affine 5 1 [[2]]"),
    (3, "D_7", "affine 7 1 [[6]]"),
    (3, "C_7:C_3", "affine 7 1 [[2]]"),
    (3, "F_42", "affine 7 1 [[3]]"),
    (4, "S_3", "affine 3 1 [[2]]"),
    (
        4,
        "C_2 x S_3",
        "direct_product (affine 3 1 [[2]]) (cyclic 2)",
    ),
    (
        4,
        "C_3 x S_3",
        "direct_product (affine 3 1 [[2]]) (cyclic 3)",
    ),
];

fn specs(list: &[(&str, &str)]) -> Vec<GroupSpec> {
    list.iter()
        .map(|(label, text)| text.parse::<GroupSpec>().unwrap().with_label(*label))
        .collect()
}

/// Soluble groups of order at most 200.
pub fn soluble_catalog() -> Vec<GroupSpec> {
    specs(SOLUBLE)
}

pub fn insoluble_catalog() -> Vec<GroupSpec> {
    specs(INSOLUBLE)
}

/// `(case, spec)` pairs for the exceptional cases 1–4.
pub fn exceptional_catalog() -> Vec<(u8, GroupSpec)> {
    EXCEPTIONAL
        .iter()
        .map(|(case, label, text)| (*case, text.parse::<GroupSpec>().unwrap().with_label(*label)))
        .collect()
}

/// Groups on which the Monte Carlo estimator is checked against the exact value.
pub fn monte_carlo_catalog() -> Vec<GroupSpec> {
    specs(&[
        ("C_2^2", "elementary 2 2"),
        ("S_3", "symmetric 3"),
        ("C_6", "cyclic 6"),
        ("D_4", "dihedral 4"),
        ("A_4", "alternating 4"),
    ])
}

/// Groups with nontrivial Frattini subgroup.
pub fn frattini_catalog() -> Vec<GroupSpec> {
    specs(&[
        ("C_4", "cyclic 4"),
        ("C_8", "cyclic 8"),
        ("C_9", "cyclic 9"),
        ("Q_8", "quaternion8"),
        ("D_4", "dihedral 4"),
    ])
}
