"""Frozen reference data used by the claim registry and the golden tests.

The canonical enumeration of the 120 positive roots below, together with the
index lists of the five adjoint-action submodules, is the fixed external
reference that the engine's own enumeration and submodule generation are
checked against.
"""

E8_POSITIVE_ROOTS = (
    (1, 0, 0, 0, 0, 0, 0, 0),
    (0, 1, 0, 0, 0, 0, 0, 0),
    (0, 0, 1, 0, 0, 0, 0, 0),
    (0, 0, 0, 1, 0, 0, 0, 0),
    (0, 0, 0, 0, 1, 0, 0, 0),
    (0, 0, 0, 0, 0, 1, 0, 0),
    (0, 0, 0, 0, 0, 0, 1, 0),
    (0, 0, 0, 0, 0, 0, 0, 1),
    (1, 0, 1, 0, 0, 0, 0, 0),
    (0, 1, 0, 1, 0, 0, 0, 0),
    (0, 0, 1, 1, 0, 0, 0, 0),
    (0, 0, 0, 1, 1, 0, 0, 0),
    (0, 0, 0, 0, 1, 1, 0, 0),
    (0, 0, 0, 0, 0, 1, 1, 0),
    (0, 0, 0, 0, 0, 0, 1, 1),
    (1, 0, 1, 1, 0, 0, 0, 0),
    (0, 1, 1, 1, 0, 0, 0, 0),
    (0, 1, 0, 1, 1, 0, 0, 0),
    (0, 0, 1, 1, 1, 0, 0, 0),
    (0, 0, 0, 1, 1, 1, 0, 0),
    (0, 0, 0, 0, 1, 1, 1, 0),
    (0, 0, 0, 0, 0, 1, 1, 1),
    (1, 1, 1, 1, 0, 0, 0, 0),
    (1, 0, 1, 1, 1, 0, 0, 0),
    (0, 1, 1, 1, 1, 0, 0, 0),
    (0, 1, 0, 1, 1, 1, 0, 0),
    (0, 0, 1, 1, 1, 1, 0, 0),
    (0, 0, 0, 1, 1, 1, 1, 0),
    (0, 0, 0, 0, 1, 1, 1, 1),
    (1, 1, 1, 1, 1, 0, 0, 0),
    (1, 0, 1, 1, 1, 1, 0, 0),
    (0, 1, 1, 2, 1, 0, 0, 0),
    (0, 1, 1, 1, 1, 1, 0, 0),
    (0, 1, 0, 1, 1, 1, 1, 0),
    (0, 0, 1, 1, 1, 1, 1, 0),
    (0, 0, 0, 1, 1, 1, 1, 1),
    (1, 1, 1, 2, 1, 0, 0, 0),
    (1, 1, 1, 1, 1, 1, 0, 0),
    (1, 0, 1, 1, 1, 1, 1, 0),
    (0, 1, 1, 2, 1, 1, 0, 0),
    (0, 1, 1, 1, 1, 1, 1, 0),
    (0, 1, 0, 1, 1, 1, 1, 1),
    (0, 0, 1, 1, 1, 1, 1, 1),
    (1, 1, 2, 2, 1, 0, 0, 0),
    (1, 1, 1, 2, 1, 1, 0, 0),
    (1, 1, 1, 1, 1, 1, 1, 0),
    (1, 0, 1, 1, 1, 1, 1, 1),
    (0, 1, 1, 2, 2, 1, 0, 0),
    (0, 1, 1, 2, 1, 1, 1, 0),
    (0, 1, 1, 1, 1, 1, 1, 1),
    (1, 1, 2, 2, 1, 1, 0, 0),
    (1, 1, 1, 2, 2, 1, 0, 0),
    (1, 1, 1, 2, 1, 1, 1, 0),
    (1, 1, 1, 1, 1, 1, 1, 1),
    (0, 1, 1, 2, 2, 1, 1, 0),
    (0, 1, 1, 2, 1, 1, 1, 1),
    (1, 1, 2, 2, 2, 1, 0, 0),
    (1, 1, 2, 2, 1, 1, 1, 0),
    (1, 1, 1, 2, 2, 1, 1, 0),
    (1, 1, 1, 2, 1, 1, 1, 1),
    (0, 1, 1, 2, 2, 2, 1, 0),
    (0, 1, 1, 2, 2, 1, 1, 1),
    (1, 1, 2, 3, 2, 1, 0, 0),
    (1, 1, 2, 2, 2, 1, 1, 0),
    (1, 1, 2, 2, 1, 1, 1, 1),
    (1, 1, 1, 2, 2, 2, 1, 0),
    (1, 1, 1, 2, 2, 1, 1, 1),
    (0, 1, 1, 2, 2, 2, 1, 1),
    (1, 2, 2, 3, 2, 1, 0, 0),
    (1, 1, 2, 3, 2, 1, 1, 0),
    (1, 1, 2, 2, 2, 2, 1, 0),
    (1, 1, 2, 2, 2, 1, 1, 1),
    (1, 1, 1, 2, 2, 2, 1, 1),
    (0, 1, 1, 2, 2, 2, 2, 1),
    (1, 2, 2, 3, 2, 1, 1, 0),
    (1, 1, 2, 3, 2, 2, 1, 0),
    (1, 1, 2, 3, 2, 1, 1, 1),
    (1, 1, 2, 2, 2, 2, 1, 1),
    (1, 1, 1, 2, 2, 2, 2, 1),
    (1, 2, 2, 3, 2, 2, 1, 0),
    (1, 2, 2, 3, 2, 1, 1, 1),
    (1, 1, 2, 3, 3, 2, 1, 0),
    (1, 1, 2, 3, 2, 2, 1, 1),
    (1, 1, 2, 2, 2, 2, 2, 1),
    (1, 2, 2, 3, 3, 2, 1, 0),
    (1, 2, 2, 3, 2, 2, 1, 1),
    (1, 1, 2, 3, 3, 2, 1, 1),
    (1, 1, 2, 3, 2, 2, 2, 1),
    (1, 2, 2, 4, 3, 2, 1, 0),
    (1, 2, 2, 3, 3, 2, 1, 1),
    (1, 2, 2, 3, 2, 2, 2, 1),
    (1, 1, 2, 3, 3, 2, 2, 1),
    (1, 2, 3, 4, 3, 2, 1, 0),
    (1, 2, 2, 4, 3, 2, 1, 1),
    (1, 2, 2, 3, 3, 2, 2, 1),
    (1, 1, 2, 3, 3, 3, 2, 1),
    (2, 2, 3, 4, 3, 2, 1, 0),
    (1, 2, 3, 4, 3, 2, 1, 1),
    (1, 2, 2, 4, 3, 2, 2, 1),
    (1, 2, 2, 3, 3, 3, 2, 1),
    (2, 2, 3, 4, 3, 2, 1, 1),
    (1, 2, 3, 4, 3, 2, 2, 1),
    (1, 2, 2, 4, 3, 3, 2, 1),
    (2, 2, 3, 4, 3, 2, 2, 1),
    (1, 2, 3, 4, 3, 3, 2, 1),
    (1, 2, 2, 4, 4, 3, 2, 1),
    (2, 2, 3, 4, 3, 3, 2, 1),
    (1, 2, 3, 4, 4, 3, 2, 1),
    (2, 2, 3, 4, 4, 3, 2, 1),
    (1, 2, 3, 5, 4, 3, 2, 1),
    (2, 2, 3, 5, 4, 3, 2, 1),
    (1, 3, 3, 5, 4, 3, 2, 1),
    (2, 3, 3, 5, 4, 3, 2, 1),
    (2, 2, 4, 5, 4, 3, 2, 1),
    (2, 3, 4, 5, 4, 3, 2, 1),
    (2, 3, 4, 6, 4, 3, 2, 1),
    (2, 3, 4, 6, 5, 3, 2, 1),
    (2, 3, 4, 6, 5, 4, 2, 1),
    (2, 3, 4, 6, 5, 4, 3, 1),
    (2, 3, 4, 6, 5, 4, 3, 2),
)

# Positive-root indices spanning the 42-dimensional positive half of the
# embedded so(14) image (first root coordinate 0).
SO14_PLUS_INDICES = (
    2, 3, 4, 5, 6, 7, 8, 10, 11, 12, 13, 14, 15,
    17, 18, 19, 20, 21, 22, 25, 26, 27, 28, 29, 32, 33,
    34, 35, 36, 40, 41, 42, 43, 48, 49, 50, 55, 56, 61,
    62, 68, 74,
)

# Indices of the 64 root vectors spanning the spinor module generated from
# root 112 (first root coordinate 1).  The mirrored Y-list spans the module
# generated from Y_1.
SPINOR_MODULE_INDICES = (
    1, 9, 16, 23, 24, 30, 31, 37, 38, 39, 44, 45, 46,
    47, 51, 52, 53, 54, 57, 58, 59, 60, 63, 64, 65, 66,
    67, 69, 70, 71, 72, 73, 75, 76, 77, 78, 79, 80, 81,
    82, 83, 84, 85, 86, 87, 88, 89, 90, 91, 92, 93, 94,
    95, 96, 98, 99, 100, 102, 103, 105, 106, 108, 110, 112,
)

# Indices of the 14 root vectors spanning the vector module generated from
# root 120 (first root coordinate 2).  The mirrored Y-list spans the module
# generated from Y_97.
VECTOR_MODULE_INDICES = (
    97, 101, 104, 107, 109, 111, 113, 114, 115, 116, 117, 118, 119,
    120,
)

# Left-nested bracket words over simple generators realizing the four
# root-vector module generators, each up to a nonzero integer scalar.
GENERATOR_WORDS = {
    "X74": ("X", (4, 5, 6, 7, 8, 2, 3, 4, 5, 6, 7), 74),
    "X112": ("X", (3, 4, 2, 1, 5, 4, 3, 6, 5, 4, 7, 2, 6, 5, 8, 7, 6, 4, 5, 3, 4, 2), 112),
    "X120": ("X", (8, 7, 6, 5, 4, 3, 2, 1, 4, 5, 6, 7, 3, 4, 5, 6, 2, 4, 5, 3, 4, 2, 1, 3, 4, 5, 6, 7, 8), 120),
    "Y97": ("Y", (5, 4, 2, 3, 6, 4, 1, 3, 5, 4, 7, 2, 6, 5, 4, 3, 1), 97),
}
