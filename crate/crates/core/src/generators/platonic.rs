//! Rotation tables of the five platonic solids, counterclockwise seen from outside.

pub(crate) const TETRAHEDRON: &[&[usize]] = &[&[3, 1, 2], &[2, 0, 3], &[3, 0, 1], &[1, 0, 2]];

pub(crate) const CUBE: &[&[usize]] = &[
    &[4, 1, 2],
    &[3, 0, 5],
    &[6, 0, 3],
    &[2, 1, 7],
    &[5, 0, 6],
    &[7, 1, 4],
    &[4, 2, 7],
    &[6, 3, 5],
];

pub(crate) const OCTAHEDRON: &[&[usize]] = &[
    &[5, 2, 4, 3],
    &[4, 2, 5, 3],
    &[4, 0, 5, 1],
    &[5, 0, 4, 1],
    &[3, 0, 2, 1],
    &[2, 0, 3, 1],
];

pub(crate) const ICOSAHEDRON: &[&[usize]] = &[
    &[5, 7, 1, 2, 6],
    &[8, 2, 0, 7, 3],
    &[4, 6, 0, 1, 8],
    &[9, 8, 1, 7, 11],
    &[10, 6, 2, 8, 9],
    &[11, 7, 0, 6, 10],
    &[10, 5, 0, 2, 4],
    &[3, 1, 0, 5, 11],
    &[4, 2, 1, 3, 9],
    &[4, 8, 3, 11, 10],
    &[5, 6, 4, 9, 11],
    &[10, 9, 3, 7, 5],
];

pub(crate) const DODECAHEDRON: &[&[usize]] = &[
    &[10, 8, 9],
    &[16, 9, 11],
    &[14, 10, 12],
    &[17, 12, 16],
    &[15, 8, 13],
    &[19, 11, 15],
    &[18, 13, 14],
    &[18, 17, 19],
    &[4, 0, 14],
    &[1, 0, 15],
    &[2, 0, 16],
    &[17, 1, 5],
    &[18, 2, 3],
    &[19, 4, 6],
    &[8, 2, 6],
    &[9, 4, 5],
    &[10, 1, 3],
    &[7, 3, 11],
    &[7, 6, 12],
    &[7, 5, 13],
];
