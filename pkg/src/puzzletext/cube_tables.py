"""Facelet permutation tables for the six clockwise quarter turns.

Generated by tools/derive_cube_tables.py; do not edit by hand.
Applying one clockwise turn of `face`: new[i] = old[CLOCKWISE_PERMS[face][i]].
"""

CLOCKWISE_PERMS = {
    "U": (
         6,  3,  0,  7,  4,  1,  8,  5,  2, 36, 37, 38, 12, 13, 14, 15, 16, 17,
         9, 10, 11, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32, 33, 34, 35,
        45, 46, 47, 39, 40, 41, 42, 43, 44, 18, 19, 20, 48, 49, 50, 51, 52, 53,
    ),
    "R": (
         0,  1, 20,  3,  4, 23,  6,  7, 26, 15, 12,  9, 16, 13, 10, 17, 14, 11,
        18, 19, 29, 21, 22, 32, 24, 25, 35, 27, 28, 42, 30, 31, 39, 33, 34, 36,
         8, 37, 38,  5, 40, 41,  2, 43, 44, 45, 46, 47, 48, 49, 50, 51, 52, 53,
    ),
    "F": (
         0,  1,  2,  3,  4,  5, 53, 50, 47,  6, 10, 11,  7, 13, 14,  8, 16, 17,
        24, 21, 18, 25, 22, 19, 26, 23, 20, 15, 12,  9, 30, 31, 32, 33, 34, 35,
        36, 37, 38, 39, 40, 41, 42, 43, 44, 45, 46, 27, 48, 49, 28, 51, 52, 29,
    ),
    "D": (
         0,  1,  2,  3,  4,  5,  6,  7,  8,  9, 10, 11, 12, 13, 14, 24, 25, 26,
        18, 19, 20, 21, 22, 23, 51, 52, 53, 33, 30, 27, 34, 31, 28, 35, 32, 29,
        36, 37, 38, 39, 40, 41, 15, 16, 17, 45, 46, 47, 48, 49, 50, 42, 43, 44,
    ),
    "B": (
        11, 14, 17,  3,  4,  5,  6,  7,  8,  9, 10, 35, 12, 13, 34, 15, 16, 33,
        18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32, 45, 48, 51,
        42, 39, 36, 43, 40, 37, 44, 41, 38,  2, 46, 47,  1, 49, 50,  0, 52, 53,
    ),
    "L": (
        44,  1,  2, 41,  4,  5, 38,  7,  8,  9, 10, 11, 12, 13, 14, 15, 16, 17,
         0, 19, 20,  3, 22, 23,  6, 25, 26, 18, 28, 29, 21, 31, 32, 24, 34, 35,
        36, 37, 33, 39, 40, 30, 42, 43, 27, 51, 48, 45, 52, 49, 46, 53, 50, 47,
    ),
}
