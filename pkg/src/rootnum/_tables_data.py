"""Fitted local root-number data for residue characteristics 2
and 3 (generated by tools/fit_local_tables.py; do not edit)."""

TABLES = {
    (2, 'I0*', 4, 6, 8): ((3, 4, 2), {
        (5, 3, 1): 1,
        (5, 7, 1): 1,
    }),
    (2, 'I0*', 4, 6, 9): ((3, 4, 2), {
        (1, 1, 1): 1,
        (1, 3, 3): -1,
        (1, 5, 1): -1,
        (1, 7, 3): 1,
    }),
    (2, 'I0*', 6, 7, 8): ((3, 4, 2), {
        (3, 3, 1): 1,
        (3, 7, 1): 1,
        (5, 3, 1): 1,
        (5, 7, 1): 1,
        (7, 3, 1): 1,
        (7, 7, 1): 1,
    }),
    (2, 'I0*', 6, 8, 10): ((3, 4, 2), {
        (1, 1, 1): -1,
        (3, 3, 1): -1,
        (5, 5, 1): -1,
        (7, 7, 1): -1,
    }),
    (2, 'I0*', 7, 7, 8): ((3, 4, 2), {
        (1, 3, 1): -1,
        (3, 7, 1): -1,
        (5, 7, 1): -1,
        (7, 3, 1): -1,
    }),
    (2, 'I0*', 7, 8, 10): ((3, 4, 2), {
        (1, 5, 1): 1,
        (3, 7, 1): -1,
        (5, 1, 1): 1,
        (7, 3, 1): -1,
    }),
    (2, 'I0*', 8, 7, 8): ((3, 4, 2), {
        (3, 7, 1): -1,
        (7, 3, 1): -1,
    }),
    (2, 'I0*', 8, 8, 10): ((3, 4, 2), {
        (1, 3, 1): -1,
        (1, 5, 1): 1,
        (3, 1, 1): 1,
        (3, 7, 1): -1,
        (5, 1, 1): 1,
        (5, 7, 1): -1,
        (7, 3, 1): -1,
        (7, 5, 1): 1,
    }),
    (2, 'I0*', 9, 7, 8): ((3, 4, 2), {
        (0, 3, 1): -1,
        (0, 7, 1): -1,
    }),
    (2, 'I0*', 9, 8, 10): ((3, 4, 2), {
        (0, 1, 1): 1,
        (0, 3, 1): -1,
        (0, 5, 1): 1,
        (0, 7, 1): -1,
    }),
    (2, 'I1*', 4, 6, 8): ((3, 4, 2), {
        (5, 1, 1): 1,
        (5, 5, 1): -1,
    }),
    (2, 'I1*', 6, 7, 8): ((3, 4, 2), {
        (1, 1, 1): 1,
        (1, 5, 1): -1,
        (5, 1, 1): 1,
        (5, 5, 1): -1,
    }),
    (2, 'I2*', 4, 6, 10): ((3, 4, 2), {
        (1, 5, 1): 1,
    }),
    (2, 'I2*', 6, 10, 12): ((3, 4, 2), {
        (3, 7, 1): 1,
        (7, 7, 1): 1,
    }),
    (2, 'I2*', 6, 11, 12): ((3, 4, 2), {
        (3, 0, 1): -1,
        (7, 0, 1): -1,
    }),
    (2, 'I3*', 6, 10, 12): ((3, 4, 2), {
        (1, 7, 3): 1,
        (5, 7, 3): -1,
    }),
    (2, 'I3*', 6, 11, 12): ((3, 4, 2), {
        (1, 0, 3): -1,
        (5, 0, 3): 1,
    }),
    (2, 'I4*', 4, 6, 12): ((3, 4, 2), {
        (1, 1, 1): -1,
    }),
    (2, 'I4*', 6, 9, 14): ((3, 4, 2), {
        (5, 1, 1): 1,
        (5, 3, 3): 1,
        (5, 5, 1): 1,
        (5, 7, 3): 1,
    }),
    (2, 'II', 4, 5, 4): ((3, 4, 2), {
        (1, 1, 1): 1,
        (1, 5, 1): 1,
        (3, 3, 1): -1,
        (5, 1, 1): 1,
        (5, 5, 1): 1,
        (7, 7, 1): -1,
    }),
    (2, 'II', 4, 6, 7): ((3, 4, 2), {
        (3, 1, 3): -1,
        (3, 5, 3): 1,
        (7, 1, 1): -1,
        (7, 3, 1): 1,
        (7, 5, 1): 1,
        (7, 7, 1): -1,
    }),
    (2, 'II', 4, 7, 6): ((3, 4, 2), {
        (1, 7, 3): 1,
        (5, 1, 3): 1,
        (5, 3, 3): 1,
        (5, 5, 3): 1,
        (5, 7, 3): 1,
    }),
    (2, 'II', 4, 8, 6): ((3, 4, 2), {
        (1, 1, 3): -1,
        (1, 3, 3): -1,
        (1, 5, 3): -1,
        (1, 7, 3): -1,
        (5, 3, 3): -1,
    }),
    (2, 'II', 4, 9, 6): ((3, 4, 2), {
        (1, 1, 3): -1,
        (1, 3, 3): -1,
        (1, 5, 3): -1,
        (1, 7, 3): -1,
        (5, 3, 3): -1,
    }),
    (2, 'II', 4, 10, 6): ((3, 4, 2), {
        (1, 1, 3): -1,
        (1, 3, 3): -1,
        (1, 5, 3): -1,
        (1, 7, 3): -1,
        (5, 3, 3): -1,
    }),
    (2, 'II', 4, 11, 6): ((3, 4, 2), {
        (1, 0, 3): -1,
        (5, 0, 3): -1,
    }),
    (2, 'II', 5, 5, 4): ((3, 4, 2), {
        (1, 3, 1): 1,
        (3, 7, 1): 1,
        (5, 7, 1): 1,
        (7, 3, 1): 1,
    }),
    (2, 'II', 5, 6, 6): ((3, 4, 2), {
        (1, 5, 1): -1,
        (1, 7, 1): -1,
        (3, 1, 1): 1,
        (3, 7, 1): 1,
        (5, 1, 1): -1,
        (5, 3, 1): -1,
        (7, 3, 1): 1,
        (7, 5, 1): 1,
    }),
    (2, 'II', 6, 5, 4): ((3, 4, 2), {
        (3, 7, 1): -1,
        (7, 3, 1): -1,
    }),
    (2, 'II', 6, 6, 6): ((3, 4, 2), {
        (1, 3, 1): -1,
        (1, 5, 1): 1,
        (3, 1, 1): 1,
        (3, 7, 1): -1,
        (5, 1, 1): 1,
        (5, 7, 1): -1,
        (7, 3, 1): -1,
        (7, 5, 1): 1,
    }),
    (2, 'II', 7, 5, 4): ((3, 4, 2), {
        (1, 3, 1): -1,
        (3, 7, 1): -1,
        (5, 7, 1): -1,
        (7, 3, 1): -1,
    }),
    (2, 'II', 7, 6, 6): ((3, 4, 2), {
        (1, 5, 1): 1,
        (3, 7, 1): -1,
        (5, 1, 1): 1,
        (7, 3, 1): -1,
    }),
    (2, 'II', 8, 5, 4): ((3, 4, 2), {
        (3, 7, 1): -1,
        (7, 3, 1): -1,
    }),
    (2, 'II', 8, 6, 6): ((3, 4, 2), {
        (1, 3, 1): -1,
        (1, 5, 1): 1,
        (3, 1, 1): 1,
        (3, 7, 1): -1,
        (5, 1, 1): 1,
        (5, 7, 1): -1,
        (7, 3, 1): -1,
        (7, 5, 1): 1,
    }),
    (2, 'II', 9, 5, 4): ((3, 4, 2), {
        (0, 3, 1): -1,
        (0, 7, 1): -1,
    }),
    (2, 'II', 9, 6, 6): ((3, 4, 2), {
        (0, 1, 1): 1,
        (0, 3, 1): -1,
        (0, 5, 1): 1,
        (0, 7, 1): -1,
    }),
    (2, 'II*', 8, 9, 12): ((3, 4, 2), {
        (3, 7, 1): -1,
        (7, 3, 1): -1,
    }),
    (2, 'II*', 8, 10, 14): ((3, 4, 2), {
        (1, 3, 1): -1,
        (1, 5, 1): 1,
        (3, 1, 1): 1,
        (3, 7, 1): -1,
        (5, 1, 1): 1,
        (5, 7, 1): -1,
        (7, 3, 1): -1,
        (7, 5, 1): 1,
    }),
    (2, 'II*', 9, 9, 12): ((3, 4, 2), {
        (0, 3, 1): -1,
        (0, 7, 1): -1,
    }),
    (2, 'II*', 9, 10, 14): ((3, 4, 2), {
        (0, 1, 1): 1,
        (0, 3, 1): -1,
        (0, 5, 1): 1,
        (0, 7, 1): -1,
    }),
    (2, 'III', 4, 5, 4): ((3, 4, 2), {
        (1, 3, 1): 1,
        (5, 7, 1): 1,
    }),
    (2, 'III', 4, 7, 6): ((3, 4, 2), {
        (3, 1, 1): 1,
        (3, 3, 1): -1,
        (3, 5, 1): 1,
        (3, 7, 1): -1,
        (7, 1, 1): 1,
        (7, 3, 1): 1,
        (7, 5, 1): -1,
        (7, 7, 1): -1,
    }),
    (2, 'III', 4, 8, 6): ((3, 4, 2), {
        (3, 1, 1): -1,
        (3, 3, 1): -1,
        (3, 5, 1): -1,
        (3, 7, 1): -1,
        (7, 1, 1): -1,
        (7, 3, 1): -1,
        (7, 5, 1): -1,
        (7, 7, 1): -1,
    }),
    (2, 'III', 4, 9, 6): ((3, 4, 2), {
        (3, 1, 1): -1,
        (3, 3, 1): -1,
        (3, 5, 1): -1,
        (3, 7, 1): -1,
        (7, 1, 1): 1,
        (7, 3, 1): 1,
        (7, 5, 1): 1,
        (7, 7, 1): 1,
    }),
    (2, 'III', 4, 10, 6): ((3, 4, 2), {
        (3, 1, 1): -1,
        (3, 3, 1): -1,
        (3, 5, 1): -1,
        (3, 7, 1): -1,
        (7, 1, 1): 1,
        (7, 3, 1): 1,
        (7, 5, 1): 1,
        (7, 7, 1): 1,
    }),
    (2, 'III', 4, 11, 6): ((3, 4, 2), {
        (3, 0, 1): -1,
        (7, 0, 1): 1,
    }),
    (2, 'III', 5, 5, 4): ((3, 4, 2), {
        (1, 5, 1): 1,
        (3, 1, 1): -1,
        (3, 5, 1): 1,
        (5, 1, 1): -1,
        (5, 5, 1): 1,
        (7, 5, 1): 1,
    }),
    (2, 'III', 5, 7, 8): ((3, 4, 2), {
        (1, 1, 3): -1,
        (1, 3, 3): 1,
        (1, 7, 3): -1,
        (3, 5, 3): -1,
        (5, 1, 3): -1,
        (5, 7, 3): -1,
        (7, 1, 3): 1,
    }),
    (2, 'III', 5, 8, 9): ((3, 4, 2), {
        (1, 1, 1): -1,
        (1, 3, 1): 1,
        (1, 5, 1): -1,
        (1, 7, 1): 1,
        (3, 1, 3): -1,
        (5, 5, 1): 1,
        (7, 1, 3): 1,
    }),
    (2, 'III', 5, 9, 9): ((3, 4, 2), {
        (1, 3, 3): 1,
        (3, 3, 1): 1,
        (5, 3, 3): -1,
        (7, 1, 1): -1,
        (7, 3, 1): -1,
        (7, 5, 1): -1,
        (7, 7, 1): -1,
    }),
    (2, 'III', 5, 10, 9): ((3, 4, 2), {
        (1, 3, 3): 1,
        (3, 3, 1): 1,
        (5, 1, 3): -1,
        (5, 3, 3): -1,
        (5, 5, 3): -1,
        (5, 7, 3): -1,
        (7, 1, 1): -1,
        (7, 3, 1): -1,
        (7, 5, 1): -1,
        (7, 7, 1): -1,
    }),
    (2, 'III', 5, 11, 9): ((3, 4, 2), {
        (1, 0, 3): 1,
        (3, 0, 1): 1,
        (5, 0, 3): -1,
        (7, 0, 1): -1,
    }),
    (2, 'III*', 4, 6, 10): ((3, 4, 2), {
        (1, 3, 1): -1,
    }),
    (2, 'III*', 7, 9, 12): ((3, 4, 2), {
        (1, 1, 1): 1,
        (1, 5, 1): -1,
        (1, 7, 1): 1,
        (3, 3, 1): 1,
        (3, 5, 1): -1,
        (3, 7, 1): -1,
        (5, 1, 1): 1,
        (5, 3, 1): -1,
        (5, 5, 1): -1,
        (7, 1, 1): 1,
        (7, 3, 1): 1,
        (7, 7, 1): -1,
    }),
    (2, 'III*', 7, 10, 14): ((3, 4, 2), {
        (1, 3, 3): -1,
        (3, 5, 3): 1,
        (5, 7, 3): -1,
        (7, 1, 3): 1,
    }),
    (2, 'III*', 7, 11, 15): ((5, 6, 4), {
        (1, 0, 3): -1,
        (1, 0, 11): -1,
        (3, 0, 1): -1,
        (3, 0, 9): -1,
        (5, 0, 7): 1,
        (5, 0, 15): 1,
        (7, 0, 5): 1,
        (7, 0, 13): 1,
        (9, 0, 3): -1,
        (9, 0, 11): -1,
        (11, 0, 1): -1,
        (11, 0, 9): -1,
        (13, 0, 7): 1,
        (13, 0, 15): 1,
        (15, 0, 5): 1,
        (15, 0, 13): 1,
    }),
    (2, 'IV', 4, 5, 4): ((3, 4, 2), {
        (3, 5, 1): -1,
        (7, 1, 1): -1,
    }),
    (2, 'IV', 6, 5, 4): ((3, 4, 2), {
        (1, 5, 1): -1,
        (3, 5, 1): -1,
        (5, 1, 1): -1,
        (5, 5, 1): -1,
        (7, 5, 1): -1,
    }),
    (2, 'IV', 7, 5, 4): ((3, 4, 2), {
        (1, 5, 1): -1,
        (3, 1, 1): -1,
        (3, 5, 1): -1,
        (5, 1, 1): -1,
        (5, 5, 1): -1,
        (7, 5, 1): -1,
    }),
    (2, 'IV', 8, 5, 4): ((3, 4, 2), {
        (1, 5, 1): -1,
        (3, 5, 1): -1,
        (5, 1, 1): -1,
        (5, 5, 1): -1,
        (7, 5, 1): -1,
    }),
    (2, 'IV', 9, 5, 4): ((3, 4, 2), {
        (0, 1, 1): -1,
        (0, 5, 1): -1,
    }),
    (2, 'IV*', 7, 7, 8): ((3, 4, 2), {
        (1, 5, 1): -1,
        (3, 1, 1): -1,
        (5, 1, 1): -1,
        (7, 5, 1): -1,
    }),
    (2, 'IV*', 8, 7, 8): ((3, 4, 2), {
        (1, 5, 1): -1,
        (5, 1, 1): -1,
    }),
    (2, 'IV*', 9, 7, 8): ((3, 4, 2), {
        (0, 1, 1): -1,
        (0, 5, 1): -1,
    }),
    (3, 'I0*', 3, 6, 6): ((2, 2, 2), {
        (1, 1, 1): -1,
        (1, 2, 1): -1,
        (1, 4, 1): -1,
        (1, 5, 1): -1,
        (1, 7, 1): -1,
        (1, 8, 1): -1,
        (2, 1, 8): -1,
        (2, 2, 8): -1,
        (2, 4, 8): -1,
        (2, 5, 8): -1,
        (2, 7, 8): -1,
        (2, 8, 8): -1,
    }),
    (3, 'I0*', 3, 7, 6): ((2, 2, 2), {
        (1, 1, 1): -1,
        (1, 2, 1): -1,
        (1, 4, 1): -1,
        (1, 5, 1): -1,
        (1, 7, 1): -1,
        (1, 8, 1): -1,
        (2, 1, 8): -1,
        (2, 2, 8): -1,
        (2, 4, 8): -1,
        (2, 5, 8): -1,
        (2, 7, 8): -1,
        (2, 8, 8): -1,
    }),
    (3, 'I0*', 3, 8, 6): ((2, 2, 2), {
        (1, 0, 1): -1,
        (2, 0, 8): -1,
    }),
    (3, 'II', 2, 3, 3): ((2, 2, 2), {
        (2, 1, 7): -1,
        (2, 4, 1): 1,
        (2, 5, 1): -1,
        (2, 8, 7): 1,
    }),
    (3, 'II', 2, 3, 4): ((2, 2, 2), {
        (1, 2, 2): 1,
        (1, 2, 5): 1,
        (1, 2, 8): 1,
        (1, 4, 1): 1,
        (1, 4, 4): 1,
        (1, 4, 7): 1,
        (1, 5, 1): 1,
        (1, 5, 4): 1,
        (1, 5, 7): 1,
        (1, 7, 2): 1,
        (1, 7, 5): 1,
        (1, 7, 8): 1,
    }),
    (3, 'II', 2, 4, 3): ((2, 2, 2), {
        (1, 1, 1): -1,
        (1, 2, 1): 1,
        (1, 4, 1): -1,
        (1, 5, 1): 1,
        (1, 7, 1): -1,
        (1, 8, 1): 1,
        (2, 1, 8): 1,
        (2, 2, 8): -1,
        (2, 4, 8): 1,
        (2, 5, 8): -1,
        (2, 7, 8): 1,
        (2, 8, 8): -1,
    }),
    (3, 'II', 3, 4, 5): ((2, 2, 2), {
        (1, 1, 2): -1,
        (1, 2, 8): 1,
        (1, 4, 5): -1,
        (1, 5, 5): 1,
        (1, 7, 8): -1,
        (1, 8, 2): 1,
        (2, 1, 5): -1,
        (2, 2, 2): 1,
        (2, 4, 8): -1,
        (2, 5, 8): 1,
        (2, 7, 2): -1,
        (2, 8, 5): 1,
    }),
    (3, 'II', 4, 3, 3): ((2, 2, 2), {
        (1, 1, 8): -1,
        (1, 2, 5): -1,
        (1, 7, 5): 1,
        (1, 8, 8): 1,
        (2, 1, 8): -1,
        (2, 2, 5): -1,
        (2, 7, 5): 1,
        (2, 8, 8): 1,
    }),
    (3, 'II', 5, 4, 5): ((2, 2, 2), {
        (1, 1, 8): -1,
        (1, 2, 5): 1,
        (1, 4, 2): -1,
        (1, 5, 2): 1,
        (1, 7, 5): -1,
        (1, 8, 8): 1,
        (2, 1, 8): -1,
        (2, 2, 5): 1,
        (2, 4, 2): -1,
        (2, 5, 2): 1,
        (2, 7, 5): -1,
        (2, 8, 8): 1,
    }),
    (3, 'II', 6, 3, 3): ((2, 2, 2), {
        (1, 1, 8): -1,
        (1, 2, 5): -1,
        (1, 7, 5): 1,
        (1, 8, 8): 1,
        (2, 1, 8): -1,
        (2, 2, 5): -1,
        (2, 7, 5): 1,
        (2, 8, 8): 1,
    }),
    (3, 'II', 7, 3, 3): ((2, 2, 2), {
        (0, 1, 8): -1,
        (0, 2, 5): -1,
        (0, 7, 5): 1,
        (0, 8, 8): 1,
    }),
    (3, 'II', 7, 4, 5): ((2, 2, 2), {
        (0, 1, 8): -1,
        (0, 2, 5): 1,
        (0, 4, 2): -1,
        (0, 5, 2): 1,
        (0, 7, 5): -1,
        (0, 8, 8): 1,
    }),
    (3, 'III', 2, 3, 3): ((2, 2, 2), {
        (2, 2, 4): 1,
        (2, 7, 4): 1,
    }),
    (3, 'III', 2, 5, 3): ((2, 2, 2), {
        (1, 1, 1): 1,
        (1, 2, 1): 1,
        (1, 4, 1): 1,
        (1, 5, 1): 1,
        (1, 7, 1): 1,
        (1, 8, 1): 1,
        (2, 1, 8): 1,
        (2, 2, 8): 1,
        (2, 4, 8): 1,
        (2, 5, 8): 1,
        (2, 7, 8): 1,
        (2, 8, 8): 1,
    }),
    (3, 'III', 2, 6, 3): ((2, 2, 2), {
        (1, 1, 1): 1,
        (1, 2, 1): 1,
        (1, 4, 1): 1,
        (1, 5, 1): 1,
        (1, 7, 1): 1,
        (1, 8, 1): 1,
        (2, 1, 8): 1,
        (2, 2, 8): 1,
        (2, 4, 8): 1,
        (2, 5, 8): 1,
        (2, 7, 8): 1,
        (2, 8, 8): 1,
    }),
    (3, 'III', 2, 7, 3): ((2, 2, 2), {
        (1, 1, 1): 1,
        (1, 2, 1): 1,
        (1, 4, 1): 1,
        (1, 5, 1): 1,
        (1, 7, 1): 1,
        (1, 8, 1): 1,
        (2, 1, 8): 1,
        (2, 2, 8): 1,
        (2, 4, 8): 1,
        (2, 5, 8): 1,
        (2, 7, 8): 1,
        (2, 8, 8): 1,
    }),
    (3, 'III', 2, 8, 3): ((2, 2, 2), {
        (1, 0, 1): 1,
        (2, 0, 8): 1,
    }),
    (3, 'III', 3, 3, 3): ((2, 2, 2), {
        (1, 4, 2): 1,
        (1, 5, 2): 1,
        (2, 4, 2): 1,
        (2, 5, 2): 1,
    }),
    (3, 'III', 4, 3, 3): ((2, 2, 2), {
        (1, 4, 2): 1,
        (1, 5, 2): 1,
        (2, 4, 2): 1,
        (2, 5, 2): 1,
    }),
    (3, 'III', 5, 3, 3): ((2, 2, 2), {
        (1, 4, 2): 1,
        (1, 5, 2): 1,
        (2, 4, 2): 1,
        (2, 5, 2): 1,
    }),
    (3, 'III', 6, 3, 3): ((2, 2, 2), {
        (1, 4, 2): 1,
        (1, 5, 2): 1,
        (2, 4, 2): 1,
        (2, 5, 2): 1,
    }),
    (3, 'III', 7, 3, 3): ((2, 2, 2), {
        (0, 4, 2): 1,
        (0, 5, 2): 1,
    }),
    (3, 'III*', 4, 8, 9): ((2, 2, 2), {
        (1, 0, 1): 1,
        (2, 0, 8): 1,
    }),
    (3, 'III*', 5, 6, 9): ((2, 2, 2), {
        (1, 4, 2): 1,
        (1, 5, 2): 1,
        (2, 4, 2): 1,
        (2, 5, 2): 1,
    }),
    (3, 'III*', 7, 6, 9): ((2, 2, 2), {
        (0, 4, 2): 1,
        (0, 5, 2): 1,
    }),
    (3, 'IV', 2, 3, 5): ((2, 2, 2), {
        (1, 1, 1): 1,
        (1, 1, 4): 1,
        (1, 1, 7): 1,
        (1, 8, 2): 1,
        (1, 8, 5): 1,
        (1, 8, 8): 1,
    }),
    (3, 'IV', 3, 5, 6): ((2, 2, 2), {
        (1, 1, 7): -1,
        (1, 2, 7): -1,
        (1, 4, 7): -1,
        (1, 5, 7): -1,
        (1, 7, 7): -1,
        (1, 8, 7): -1,
        (2, 1, 5): 1,
        (2, 2, 5): 1,
        (2, 4, 5): 1,
        (2, 5, 5): 1,
        (2, 7, 5): 1,
        (2, 8, 5): 1,
    }),
    (3, 'IV', 4, 5, 7): ((2, 2, 2), {
        (1, 1, 8): -1,
        (1, 2, 5): 1,
        (1, 4, 2): -1,
        (1, 5, 2): 1,
        (1, 7, 5): -1,
        (1, 8, 8): 1,
        (2, 1, 8): -1,
        (2, 2, 5): 1,
        (2, 4, 2): -1,
        (2, 5, 2): 1,
        (2, 7, 5): -1,
        (2, 8, 8): 1,
    }),
    (3, 'IV', 6, 5, 7): ((2, 2, 2), {
        (1, 1, 8): -1,
        (1, 2, 5): 1,
        (1, 4, 2): -1,
        (1, 5, 2): 1,
        (1, 7, 5): -1,
        (1, 8, 8): 1,
        (2, 1, 8): -1,
        (2, 2, 5): 1,
        (2, 4, 2): -1,
        (2, 5, 2): 1,
        (2, 7, 5): -1,
        (2, 8, 8): 1,
    }),
    (3, 'IV', 7, 5, 7): ((2, 2, 2), {
        (0, 1, 8): -1,
        (0, 2, 5): 1,
        (0, 4, 2): -1,
        (0, 5, 2): 1,
        (0, 7, 5): -1,
        (0, 8, 8): 1,
    }),
    (3, 'IV*', 4, 6, 10): ((2, 2, 2), {
        (1, 2, 2): 1,
        (1, 2, 5): 1,
        (1, 2, 8): 1,
        (1, 4, 1): -1,
        (1, 4, 4): -1,
        (1, 4, 7): -1,
    }),
    (3, 'IV*', 4, 7, 9): ((2, 2, 2), {
        (1, 1, 1): -1,
        (1, 4, 1): -1,
        (1, 7, 1): -1,
        (2, 1, 8): -1,
        (2, 4, 8): -1,
        (2, 7, 8): -1,
    }),
    (3, 'IV*', 5, 6, 9): ((2, 2, 2), {
        (1, 1, 8): 1,
        (1, 2, 5): 1,
        (1, 7, 5): -1,
        (1, 8, 8): -1,
        (2, 1, 8): 1,
        (2, 2, 5): 1,
        (2, 7, 5): -1,
        (2, 8, 8): -1,
    }),
    (3, 'IV*', 6, 7, 11): ((2, 2, 2), {
        (1, 1, 8): 1,
        (1, 2, 5): -1,
        (1, 4, 2): 1,
        (1, 5, 2): -1,
        (1, 7, 5): 1,
        (1, 8, 8): -1,
        (2, 1, 8): 1,
        (2, 2, 5): -1,
        (2, 4, 2): 1,
        (2, 5, 2): -1,
        (2, 7, 5): 1,
        (2, 8, 8): -1,
    }),
    (3, 'IV*', 7, 6, 9): ((2, 2, 2), {
        (0, 1, 8): 1,
        (0, 2, 5): 1,
        (0, 7, 5): -1,
        (0, 8, 8): -1,
    }),
    (3, 'IV*', 7, 7, 11): ((2, 2, 2), {
        (0, 1, 8): 1,
        (0, 2, 5): -1,
        (0, 4, 2): 1,
        (0, 5, 2): -1,
        (0, 7, 5): 1,
        (0, 8, 8): -1,
    }),
}
