//! Known exact values used by `verify-oracle` as fixed reference checks.

/// `(partition, s, t, dim_loc)` for every partition of size 1 through 7.
pub const SMALL_CAPACITIES: [(&str, u32, u32, u32); 44] = [
    ("(1)", 0, 0, 0),
    ("(2)", 1, 1, 1),
    ("(1,1)", 1, 1, 1),
    ("(3)", 1, 1, 1),
    ("(2,1)", 1, 1, 1),
    ("(1,1,1)", 1, 1, 1),
    ("(4)", 1, 1, 1),
    ("(3,1)", 2, 1, 2),
    ("(2,2)", 2, 1, 2),
    ("(2,1,1)", 2, 1, 2),
    ("(1,1,1,1)", 1, 1, 1),
    ("(5)", 1, 1, 1),
    ("(4,1)", 2, 1, 2),
    ("(3,2)", 2, 2, 2),
    ("(3,1,1)", 2, 2, 2),
    ("(2,2,1)", 2, 2, 2),
    ("(2,1,1,1)", 2, 1, 2),
    ("(1,1,1,1,1)", 1, 1, 1),
    ("(6)", 1, 1, 1),
    ("(5,1)", 2, 1, 2),
    ("(4,2)", 2, 2, 2),
    ("(4,1,1)", 2, 2, 2),
    ("(3,3)", 2, 1, 2),
    ("(3,2,1)", 2, 2, 2),
    ("(3,1,1,1)", 2, 2, 2),
    ("(2,2,2)", 2, 1, 2),
    ("(2,2,1,1)", 2, 2, 2),
    ("(2,1,1,1,1)", 2, 1, 2),
    ("(1,1,1,1,1,1)", 1, 1, 1),
    ("(7)", 1, 1, 1),
    ("(6,1)", 2, 1, 2),
    ("(5,2)", 2, 2, 2),
    ("(5,1,1)", 2, 2, 2),
    ("(4,3)", 2, 2, 2),
    ("(4,2,1)", 3, 2, 3),
    ("(4,1,1,1)", 2, 2, 2),
    ("(3,3,1)", 3, 2, 3),
    ("(3,2,2)", 3, 2, 3),
    ("(3,2,1,1)", 3, 2, 3),
    ("(3,1,1,1,1)", 2, 2, 2),
    ("(2,2,2,1)", 2, 2, 2),
    ("(2,2,1,1,1)", 2, 2, 2),
    ("(2,1,1,1,1,1)", 2, 1, 2),
    ("(1,1,1,1,1,1,1)", 1, 1, 1),
];

/// `(r, n_first, F_r)` for the layers settled exactly.
pub const INITIAL_FIRST_OCCURRENCES: [(u32, u32, &[&str]); 4] = [
    (0, 1, &["(1)"]),
    (1, 2, &["(2)", "(1,1)"]),
    (2, 4, &["(3,1)", "(2,2)", "(2,1,1)"]),
    (3, 7, &["(4,2,1)", "(3,3,1)", "(3,2,2)", "(3,2,1,1)"]),
];
