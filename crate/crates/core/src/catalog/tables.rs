//! Integer data of the explicit matrices. Butson matrices are stored as
//! exponent tables; entries are `exp(2πi·e/q)` for the stated `q`.

/// Self-R-dual Butson matrix of order 9, `q = 3`.
pub(crate) const B9_SELFDUAL: [[u8; 9]; 9] = [
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 1, 1, 2, 2, 2],
    [0, 0, 0, 2, 2, 2, 1, 1, 1],
    [0, 1, 2, 0, 1, 2, 0, 1, 2],
    [0, 1, 2, 1, 2, 0, 2, 0, 1],
    [0, 1, 2, 2, 0, 1, 1, 2, 0],
    [0, 2, 1, 0, 2, 1, 0, 2, 1],
    [0, 2, 1, 1, 0, 2, 2, 1, 0],
    [0, 2, 1, 2, 1, 0, 1, 0, 2],
];

/// Its 2-unitary conjugate dressing, `q = 3`.
pub(crate) const C9_TWO_UNITARY: [[u8; 9]; 9] = [
    [0, 0, 0, 0, 2, 1, 0, 1, 2],
    [0, 0, 0, 1, 0, 2, 2, 0, 1],
    [0, 0, 0, 2, 1, 0, 1, 2, 0],
    [0, 1, 2, 0, 0, 0, 0, 2, 1],
    [1, 2, 0, 2, 2, 2, 0, 2, 1],
    [2, 0, 1, 1, 1, 1, 0, 2, 1],
    [0, 2, 1, 0, 1, 2, 0, 0, 0],
    [2, 1, 0, 0, 1, 2, 1, 1, 1],
    [1, 0, 2, 0, 1, 2, 2, 2, 2],
];

/// Isolated Butson matrix of order 9, `q = 6`.
pub(crate) const B9_0: [[u8; 9]; 9] = [
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 5, 3, 2, 5, 3, 2, 1, 5],
    [0, 3, 3, 0, 1, 5, 4, 1, 3],
    [0, 2, 0, 2, 0, 2, 4, 4, 4],
    [0, 5, 1, 0, 3, 3, 4, 3, 1],
    [0, 3, 5, 2, 3, 5, 2, 5, 1],
    [0, 0, 2, 4, 2, 0, 2, 4, 4],
    [0, 3, 3, 4, 5, 1, 0, 3, 1],
    [0, 1, 5, 4, 3, 3, 0, 1, 3],
];

/// 3-unitary real Hadamard matrix of order 8, `q = 2`.
pub(crate) const H8: [[u8; 8]; 8] = [
    [1, 1, 1, 0, 1, 0, 0, 0],
    [1, 1, 1, 0, 0, 1, 1, 1],
    [1, 1, 0, 1, 1, 0, 1, 1],
    [0, 0, 1, 0, 1, 0, 1, 1],
    [1, 0, 1, 1, 1, 1, 0, 1],
    [0, 1, 0, 0, 1, 1, 0, 1],
    [0, 1, 1, 1, 0, 0, 0, 1],
    [0, 1, 1, 1, 1, 1, 1, 0],
];

/// First record of the order-16 binary Butson class times `P16`, `q = 2`.
pub(crate) const B16_1_P16: [[u8; 16]; 16] = [
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 1, 1, 0, 1, 0, 0, 1, 0, 1, 1, 0, 1, 0],
    [0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0],
    [0, 0, 1, 1, 0, 0, 1, 1, 1, 1, 0, 0, 1, 1, 0, 0],
    [0, 1, 0, 1, 1, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1],
    [0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1],
    [0, 1, 1, 0, 1, 0, 0, 1, 0, 1, 1, 0, 1, 0, 0, 1],
    [0, 1, 1, 0, 0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1],
    [0, 0, 1, 1, 1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 1, 1],
    [0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1],
    [0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1],
    [0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0],
    [0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0],
    [0, 1, 0, 1, 0, 1, 0, 1, 1, 0, 1, 0, 1, 0, 1, 0],
    [0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0],
];

/// Eighth record of the order-16 Butson class with `q = 4`.
pub(crate) const B16_8: [[u8; 16]; 16] = [
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 2, 2, 2, 2, 2, 2],
    [0, 0, 0, 0, 2, 2, 2, 2, 0, 0, 0, 0, 2, 2, 2, 2],
    [0, 0, 0, 0, 2, 2, 2, 2, 2, 2, 2, 2, 0, 0, 0, 0],
    [0, 0, 2, 2, 0, 0, 2, 2, 0, 0, 2, 2, 0, 0, 2, 2],
    [0, 0, 2, 2, 0, 0, 2, 2, 2, 2, 0, 0, 2, 2, 0, 0],
    [0, 0, 2, 2, 2, 2, 0, 0, 0, 0, 2, 2, 2, 2, 0, 0],
    [0, 0, 2, 2, 2, 2, 0, 0, 2, 2, 0, 0, 0, 0, 2, 2],
    [0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2],
    [0, 2, 0, 2, 0, 2, 0, 2, 2, 0, 2, 0, 2, 0, 2, 0],
    [0, 2, 0, 2, 2, 0, 2, 0, 0, 2, 0, 2, 2, 0, 2, 0],
    [0, 2, 0, 2, 2, 0, 2, 0, 2, 0, 2, 0, 0, 2, 0, 2],
    [0, 2, 2, 0, 0, 2, 2, 0, 1, 3, 3, 1, 1, 3, 3, 1],
    [0, 2, 2, 0, 0, 2, 2, 0, 3, 1, 1, 3, 3, 1, 1, 3],
    [0, 2, 2, 0, 2, 0, 0, 2, 1, 3, 3, 1, 3, 1, 1, 3],
    [0, 2, 2, 0, 2, 0, 0, 2, 3, 1, 1, 3, 1, 3, 3, 1],
];

/// Orthogonal 2-unitary representative of order 16 (times 2).
pub(crate) const O16: [[i8; 16]; 16] = [
    [1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1],
    [0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, -1, 0, 0, -1, 0],
    [0, 0, -1, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, -1, 0, 0],
    [0, 0, 0, -1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0],
    [0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0],
    [-1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1],
    [0, 0, 0, -1, 0, 0, 1, 0, 0, -1, 0, 0, -1, 0, 0, 0],
    [0, 0, -1, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, -1, 0, 0],
    [0, 0, -1, 0, 0, 0, 0, -1, -1, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 1, 0, 0, 1, 0, 0, -1, 0, 0, 1, 0, 0, 0],
    [-1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1],
    [0, -1, 0, 0, -1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0],
    [0, 0, 0, -1, 0, 0, -1, 0, 0, -1, 0, 0, 1, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, -1, -1, 0, 0, 0, 0, -1, 0, 0],
    [0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0],
    [1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1],
];

/// Isolated order-9 matrix as `(sign, p)` meaning `sign·y^p`.
pub(crate) const N9_0: [[(i8, i8); 9]; 9] = [
    [(1, 0), (1, 0), (1, 0), (1, 0), (1, 0), (1, 0), (1, 0), (1, 0), (1, 0)],
    [(1, 0), (1, 1), (1, 2), (-1, 0), (-1, 1), (1, 1), (1, 3), (1, 3), (1, 1)],
    [(1, 0), (1, 2), (1, 4), (-1, 1), (1, 2), (-1, 3), (1, 4), (1, 2), (1, 0)],
    [
        (1, 0),
        (-1, 4),
        (-1, 3),
        (1, 3),
        (-1, 3),
        (-1, 2),
        (-1, 4),
        (-1, 2),
        (-1, 0),
    ],
    [
        (1, 0),
        (-1, 0),
        (1, 2),
        (-1, -1),
        (1, 0),
        (1, 0),
        (1, 1),
        (1, 2),
        (1, -1),
    ],
    [(1, 0), (1, 3), (-1, 1), (-1, 0), (1, 2), (1, 3), (1, 1), (1, 1), (1, 1)],
    [
        (1, 0),
        (1, 1),
        (1, 0),
        (-1, -1),
        (1, 2),
        (1, 2),
        (-1, 0),
        (1, 0),
        (1, -1),
    ],
    [(1, 0), (1, 4), (1, 2), (-1, 1), (1, 4), (1, 2), (1, 2), (-1, 3), (1, 0)],
    [(1, 0), (1, 3), (1, 4), (-1, 3), (1, 4), (1, 2), (1, 3), (1, 2), (-1, 0)],
];

/// Core of the order-16 affine family as `(m, p)` meaning `i^m·a^p`.
pub(crate) const T16_1_CORE: [[(u8, i8); 15]; 15] = [
    [
        (2, 0),
        (3, 1),
        (0, 1),
        (2, 1),
        (1, 1),
        (0, 0),
        (2, 0),
        (0, 0),
        (2, 0),
        (2, 1),
        (1, 1),
        (0, 0),
        (2, 0),
        (0, 1),
        (3, 1),
    ],
    [
        (1, 0),
        (0, 1),
        (2, 1),
        (0, 1),
        (2, 1),
        (3, 0),
        (2, 0),
        (3, 0),
        (2, 0),
        (0, 1),
        (2, 1),
        (1, 0),
        (0, 0),
        (0, 1),
        (2, 1),
    ],
    [
        (0, 0),
        (2, 0),
        (2, 0),
        (2, 0),
        (2, 0),
        (0, 0),
        (0, 0),
        (0, 0),
        (0, 0),
        (2, 0),
        (2, 0),
        (0, 0),
        (0, 0),
        (2, 0),
        (2, 0),
    ],
    [
        (2, 0),
        (0, 0),
        (2, 0),
        (2, 0),
        (0, 0),
        (2, 0),
        (0, 0),
        (0, -1),
        (1, -1),
        (3, 1),
        (0, 1),
        (2, -1),
        (3, -1),
        (1, 1),
        (2, 1),
    ],
    [
        (0, 0),
        (1, 1),
        (0, 1),
        (2, 1),
        (3, 1),
        (2, 0),
        (2, 0),
        (3, 0),
        (1, 0),
        (3, 1),
        (2, 1),
        (3, 0),
        (1, 0),
        (1, 1),
        (0, 1),
    ],
    [
        (3, 0),
        (2, 1),
        (2, 1),
        (0, 1),
        (0, 1),
        (1, 0),
        (2, 0),
        (2, 0),
        (1, 0),
        (1, 1),
        (3, 1),
        (0, 0),
        (3, 0),
        (1, 1),
        (3, 1),
    ],
    [
        (2, 0),
        (2, 0),
        (0, 0),
        (0, 0),
        (2, 0),
        (2, 0),
        (0, 0),
        (2, -1),
        (3, -1),
        (3, 1),
        (0, 1),
        (0, -1),
        (1, -1),
        (1, 1),
        (2, 1),
    ],
    [
        (3, 0),
        (3, 2),
        (2, 2),
        (1, 1),
        (3, 1),
        (1, 1),
        (3, 1),
        (1, 0),
        (2, 0),
        (0, 2),
        (1, 2),
        (3, 1),
        (1, 1),
        (3, 1),
        (1, 1),
    ],
    [
        (2, 0),
        (1, 1),
        (2, 1),
        (3, 1),
        (0, 1),
        (3, 0),
        (3, 0),
        (2, 0),
        (0, 0),
        (2, 1),
        (1, 1),
        (1, 0),
        (1, 0),
        (3, 1),
        (0, 1),
    ],
    [
        (1, 0),
        (2, 1),
        (0, 1),
        (1, 1),
        (1, 1),
        (2, 0),
        (3, 0),
        (1, 0),
        (0, 0),
        (0, 1),
        (2, 1),
        (2, 0),
        (3, 0),
        (3, 1),
        (3, 1),
    ],
    [
        (3, 0),
        (1, 2),
        (0, 2),
        (1, 1),
        (3, 1),
        (3, 1),
        (1, 1),
        (1, 0),
        (2, 0),
        (2, 2),
        (3, 2),
        (1, 1),
        (3, 1),
        (3, 1),
        (1, 1),
    ],
    [
        (0, 0),
        (0, 0),
        (0, 0),
        (3, 1),
        (2, 1),
        (0, -1),
        (3, -1),
        (2, -1),
        (1, -1),
        (1, 1),
        (0, 1),
        (2, 0),
        (2, 0),
        (2, 0),
        (2, 0),
    ],
    [
        (2, 0),
        (3, 1),
        (0, 1),
        (3, 1),
        (0, 1),
        (1, 0),
        (1, 0),
        (3, 0),
        (3, 0),
        (1, 1),
        (2, 1),
        (2, 0),
        (0, 0),
        (2, 1),
        (1, 1),
    ],
    [
        (1, 0),
        (0, 1),
        (2, 1),
        (1, 1),
        (1, 1),
        (0, 0),
        (1, 0),
        (2, 0),
        (3, 0),
        (3, 1),
        (3, 1),
        (3, 0),
        (2, 0),
        (2, 1),
        (0, 1),
    ],
    [
        (0, 0),
        (2, 0),
        (2, 0),
        (3, 1),
        (2, 1),
        (2, -1),
        (1, -1),
        (0, -1),
        (3, -1),
        (1, 1),
        (0, 1),
        (2, 0),
        (2, 0),
        (0, 0),
        (0, 0),
    ],
];
