// @generated by examples/generate_exceptional_table.rs; do not edit by hand.

/// `(α, β)` pairs: `β` is the lexicographically least witness for `α`.
pub(super) static EXCEPTIONAL: &[(&[usize], &[usize])] = &[
    (&[4, 3, 2, 1, 1], &[7, 2, 1, 1]),
    (&[5, 3, 2, 1, 1], &[6, 3, 2, 1]),
    (&[6, 3, 2, 1, 1], &[4, 4, 3, 2]),
    (&[7, 3, 2, 1, 1], &[3, 3, 2, 2, 2, 2]),
    (&[6, 5, 3, 2, 1], &[11, 2, 1, 1, 1, 1]),
    (&[7, 5, 3, 2, 1], &[6, 5, 4, 3]),
    (&[8, 5, 3, 2, 1], &[4, 3, 3, 3, 3, 2, 1]),
    (&[9, 5, 3, 2, 1], &[4, 3, 3, 3, 2, 2, 2, 1]),
    (&[10, 5, 3, 2, 1], &[6, 6, 3, 2, 2, 2]),
    (&[11, 5, 3, 2, 1], &[4, 4, 2, 2, 2, 2, 2, 2, 2]),
    (&[4, 2, 1, 1], &[3, 3, 2]),
    (&[6, 3, 2, 1], &[4, 4, 2, 2]),
    (&[6, 4, 3, 1], &[3, 3, 3, 3, 2]),
    (&[7, 4, 3, 1], &[8, 7]),
    (&[8, 4, 3, 1], &[5, 5, 2, 2, 2]),
    (&[6, 4, 3, 2, 1], &[7, 5, 4]),
    (&[7, 4, 3, 2, 1], &[5, 4, 4, 3, 1]),
    (&[8, 4, 3, 2, 1], &[3, 3, 3, 3, 2, 2, 2]),
    (&[9, 4, 3, 2, 1], &[6, 5, 3, 2, 2, 1]),
    (&[10, 4, 3, 2, 1], &[4, 4, 2, 2, 2, 2, 2, 2]),
    (&[6, 5, 4, 2, 1], &[9, 3, 3, 2, 1]),
    (&[7, 5, 4, 2, 1], &[4, 4, 4, 4, 3]),
    (&[8, 5, 4, 2, 1], &[3, 3, 3, 3, 3, 3, 2]),
    (&[9, 5, 4, 2, 1], &[5, 5, 3, 3, 3, 2]),
    (&[10, 5, 4, 2, 1], &[4, 4, 3, 3, 2, 2, 2, 2]),
    (&[11, 5, 4, 2, 1], &[5, 5, 3, 2, 2, 2, 2, 2]),
    (&[12, 5, 4, 2, 1], &[5, 4, 2, 2, 2, 2, 2, 2, 2, 1]),
    (&[7, 6, 5, 2, 1], &[12, 2, 2, 2, 1, 1, 1]),
    (&[8, 6, 5, 2, 1], &[5, 5, 4, 4, 4]),
    (&[9, 6, 5, 2, 1], &[3, 3, 3, 3, 3, 3, 3, 2]),
    (&[10, 6, 5, 2, 1], &[3, 3, 3, 3, 3, 3, 2, 2, 2]),
    (&[11, 6, 5, 2, 1], &[5, 3, 3, 3, 3, 2, 2, 2, 1, 1]),
    (&[12, 6, 5, 2, 1], &[5, 5, 3, 3, 2, 2, 2, 2, 2]),
    (&[13, 6, 5, 2, 1], &[6, 6, 3, 2, 2, 2, 2, 2, 2]),
    (&[14, 6, 5, 2, 1], &[6, 4, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1]),
    (&[8, 7, 6, 2, 1], &[4, 4, 4, 4, 4, 4]),
    (&[9, 7, 6, 2, 1], &[5, 5, 5, 5, 3, 2]),
    (&[10, 7, 6, 2, 1], &[3, 3, 3, 3, 3, 3, 3, 3, 2]),
    (&[11, 7, 6, 2, 1], &[3, 3, 3, 3, 3, 3, 3, 2, 2, 2]),
    (&[12, 7, 6, 2, 1], &[4, 4, 3, 3, 3, 3, 2, 2, 2, 2]),
    (&[13, 7, 6, 2, 1], &[3, 3, 3, 3, 3, 2, 2, 2, 2, 2, 2, 2]),
    (&[14, 7, 6, 2, 1], &[6, 6, 3, 3, 2, 2, 2, 2, 2, 2]),
    (&[15, 7, 6, 2, 1], &[7, 7, 3, 2, 2, 2, 2, 2, 2, 2]),
    (&[16, 7, 6, 2, 1], &[7, 4, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1]),
    (&[9, 8, 7, 2, 1], &[4, 4, 4, 4, 4, 4, 3]),
    (&[10, 8, 7, 2, 1], &[5, 5, 4, 4, 4, 4, 2]),
    (&[11, 8, 7, 2, 1], &[3, 3, 3, 3, 3, 3, 3, 3, 3, 2]),
    (&[12, 8, 7, 2, 1], &[3, 3, 3, 3, 3, 3, 3, 3, 2, 2, 2]),
    (&[13, 8, 7, 2, 1], &[4, 4, 3, 3, 3, 3, 3, 2, 2, 2, 2]),
    (&[14, 8, 7, 2, 1], &[5, 5, 3, 3, 3, 3, 2, 2, 2, 2, 2]),
    (&[15, 8, 7, 2, 1], &[3, 3, 3, 3, 3, 2, 2, 2, 2, 2, 2, 2, 2, 2]),
    (&[16, 8, 7, 2, 1], &[7, 7, 3, 3, 2, 2, 2, 2, 2, 2, 2]),
    (&[17, 8, 7, 2, 1], &[8, 8, 3, 2, 2, 2, 2, 2, 2, 2, 2]),
    (&[18, 8, 7, 2, 1], &[8, 4, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1]),
    (&[6, 5, 4, 3, 1], &[13, 2, 1, 1, 1, 1]),
    (&[7, 5, 4, 3, 1], &[9, 2, 2, 2, 2, 2, 1]),
    (&[8, 5, 4, 3, 1], &[5, 4, 4, 4, 3, 1]),
    (&[9, 5, 4, 3, 1], &[5, 4, 3, 3, 3, 3, 1]),
    (&[10, 5, 4, 3, 1], &[3, 3, 3, 3, 3, 2, 2, 2, 2]),
    (&[11, 5, 4, 3, 1], &[3, 3, 3, 3, 2, 2, 2, 2, 2, 2]),
    (&[12, 5, 4, 3, 1], &[6, 6, 3, 2, 2, 2, 2, 2]),
    (&[13, 5, 4, 3, 1], &[5, 5, 2, 2, 2, 2, 2, 2, 2, 2]),
    (&[7, 6, 5, 3, 1], &[10, 3, 3, 3, 2, 1]),
    (&[8, 6, 5, 3, 1], &[4, 4, 4, 4, 4, 3]),
    (&[9, 6, 5, 3, 1], &[4, 4, 4, 4, 4, 2, 2]),
    (&[10, 6, 5, 3, 1], &[4, 3, 3, 3, 3, 3, 3, 2, 1]),
    (&[11, 6, 5, 3, 1], &[5, 5, 3, 3, 3, 3, 2, 2]),
    (&[12, 6, 5, 3, 1], &[4, 4, 3, 3, 3, 2, 2, 2, 2, 2]),
    (&[13, 6, 5, 3, 1], &[4, 3, 3, 3, 2, 2, 2, 2, 2, 2, 2, 1]),
    (&[14, 6, 5, 3, 1], &[4, 3, 3, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1]),
    (&[15, 6, 5, 3, 1], &[6, 5, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1]),
    (&[8, 7, 6, 3, 1], &[5, 5, 5, 5, 5]),
    (&[9, 7, 6, 3, 1], &[5, 5, 4, 4, 4, 4]),
    (&[10, 7, 6, 3, 1], &[4, 4, 4, 4, 4, 3, 2, 2]),
    (&[11, 7, 6, 3, 1], &[4, 3, 3, 3, 3, 3, 3, 3, 2, 1]),
    (&[12, 7, 6, 3, 1], &[3, 3, 3, 3, 3, 3, 3, 2, 2, 2, 2]),
    (&[13, 7, 6, 3, 1], &[4, 4, 4, 4, 2, 2, 2, 2, 2, 2, 2]),
    (&[14, 7, 6, 3, 1], &[5, 5, 3, 3, 3, 2, 2, 2, 2, 2, 2]),
    (&[15, 7, 6, 3, 1], &[5, 3, 3, 3, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1]),
    (&[16, 7, 6, 3, 1], &[4, 3, 3, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1]),
    (&[17, 7, 6, 3, 1], &[7, 5, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1]),
    (&[9, 8, 7, 3, 1], &[4, 4, 4, 4, 4, 4, 4]),
    (&[10, 8, 7, 3, 1], &[6, 6, 5, 4, 4, 4]),
    (&[11, 8, 7, 3, 1], &[4, 4, 4, 4, 4, 3, 3, 2, 2]),
    (&[12, 8, 7, 3, 1], &[4, 3, 3, 3, 3, 3, 3, 3, 3, 2, 1]),
    (&[13, 8, 7, 3, 1], &[3, 3, 3, 3, 3, 3, 3, 3, 2, 2, 2, 2]),
    (&[14, 8, 7, 3, 1], &[4, 4, 3, 3, 3, 3, 3, 2, 2, 2, 2, 2]),
    (&[15, 8, 7, 3, 1], &[3, 3, 3, 3, 3, 3, 2, 2, 2, 2, 2, 2, 2, 2]),
    (&[16, 8, 7, 3, 1], &[6, 6, 3, 3, 3, 2, 2, 2, 2, 2, 2, 2]),
    (&[17, 8, 7, 3, 1], &[6, 3, 3, 3, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1]),
    (&[18, 8, 7, 3, 1], &[4, 3, 3, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1]),
    (&[19, 8, 7, 3, 1], &[8, 5, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1]),
    (&[10, 9, 8, 3, 1], &[4, 4, 4, 4, 4, 4, 4, 3]),
    (&[11, 9, 8, 3, 1], &[5, 5, 4, 4, 4, 4, 4, 2]),
    (&[12, 9, 8, 3, 1], &[4, 4, 4, 4, 4, 3, 3, 3, 2, 2]),
    (&[13, 9, 8, 3, 1], &[4, 3, 3, 3, 3, 3, 3, 3, 3, 3, 2, 1]),
    (&[14, 9, 8, 3, 1], &[3, 3, 3, 3, 3, 3, 3, 3, 3, 2, 2, 2, 2]),
    (&[15, 9, 8, 3, 1], &[4, 4, 3, 3, 3, 3, 3, 3, 2, 2, 2, 2, 2]),
    (&[16, 9, 8, 3, 1], &[5, 5, 3, 3, 3, 3, 3, 2, 2, 2, 2, 2, 2]),
    (&[17, 9, 8, 3, 1], &[3, 3, 3, 3, 3, 3, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2]),
    (&[18, 9, 8, 3, 1], &[7, 7, 3, 3, 3, 2, 2, 2, 2, 2, 2, 2, 2]),
    (&[19, 9, 8, 3, 1], &[7, 3, 3, 3, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1]),
    (&[20, 9, 8, 3, 1], &[4, 3, 3, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1]),
    (&[21, 9, 8, 3, 1], &[9, 5, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1]),
    (&[11, 10, 9, 3, 1], &[4, 4, 4, 4, 4, 4, 4, 3, 3]),
    (&[12, 10, 9, 3, 1], &[5, 5, 4, 4, 4, 4, 4, 3, 2]),
    (&[13, 10, 9, 3, 1], &[4, 4, 4, 4, 4, 3, 3, 3, 3, 2, 2]),
    (&[14, 10, 9, 3, 1], &[4, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 2, 1]),
    (&[15, 10, 9, 3, 1], &[3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 2, 2, 2, 2]),
    (&[16, 10, 9, 3, 1], &[4, 4, 3, 3, 3, 3, 3, 3, 3, 2, 2, 2, 2, 2]),
    (&[17, 10, 9, 3, 1], &[5, 5, 3, 3, 3, 3, 3, 3, 2, 2, 2, 2, 2, 2]),
    (&[18, 10, 9, 3, 1], &[6, 6, 3, 3, 3, 3, 3, 2, 2, 2, 2, 2, 2, 2]),
    (&[19, 10, 9, 3, 1], &[3, 3, 3, 3, 3, 3, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2]),
    (&[20, 10, 9, 3, 1], &[8, 8, 3, 3, 3, 2, 2, 2, 2, 2, 2, 2, 2, 2]),
    (&[21, 10, 9, 3, 1], &[8, 3, 3, 3, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1]),
    (&[22, 10, 9, 3, 1], &[4, 3, 3, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1]),
    (&[23, 10, 9, 3, 1], &[10, 5, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1]),
];
