"""Frozen recognition table: signatures of the normal-form germs.

Regenerated by build_signature_table(); the test suite asserts the
shipped data matches a fresh generation from the normal forms.
"""

SIGNATURES = [
    ('A', (1,), (2, 1, 2, ((1,), (1,)), (1,))),
    ('A', (2,), (2, 2, 1, ((2,),), ())),
    ('A', (3,), (2, 3, 2, ((1,), (1,)), (2,))),
    ('A', (4,), (2, 4, 1, ((2, 2),), ())),
    ('A', (5,), (2, 5, 2, ((1,), (1,)), (3,))),
    ('A', (6,), (2, 6, 1, ((2, 2, 2),), ())),
    ('A', (7,), (2, 7, 2, ((1,), (1,)), (4,))),
    ('A', (8,), (2, 8, 1, ((2, 2, 2, 2),), ())),
    ('A', (9,), (2, 9, 2, ((1,), (1,)), (5,))),
    ('A', (10,), (2, 10, 1, ((2, 2, 2, 2, 2),), ())),
    ('A', (11,), (2, 11, 2, ((1,), (1,)), (6,))),
    ('A', (12,), (2, 12, 1, ((2, 2, 2, 2, 2, 2),), ())),
    ('A', (13,), (2, 13, 2, ((1,), (1,)), (7,))),
    ('A', (14,), (2, 14, 1, ((2, 2, 2, 2, 2, 2, 2),), ())),
    ('A', (15,), (2, 15, 2, ((1,), (1,)), (8,))),
    ('A', (16,), (2, 16, 1, ((2, 2, 2, 2, 2, 2, 2, 2),), ())),
    ('A', (17,), (2, 17, 2, ((1,), (1,)), (9,))),
    ('A', (18,), (2, 18, 1, ((2, 2, 2, 2, 2, 2, 2, 2, 2),), ())),
    ('A', (19,), (2, 19, 2, ((1,), (1,)), (10,))),
    ('D', (4,), (3, 4, 3, ((1,), (1,), (1,)), (1, 1, 1))),
    ('D', (5,), (3, 5, 2, ((1,), (2,)), (2,))),
    ('D', (6,), (3, 6, 3, ((1,), (1,), (1,)), (1, 1, 2))),
    ('D', (7,), (3, 7, 2, ((1,), (2, 2)), (2,))),
    ('D', (8,), (3, 8, 3, ((1,), (1,), (1,)), (1, 1, 3))),
    ('D', (9,), (3, 9, 2, ((1,), (2, 2, 2)), (2,))),
    ('D', (10,), (3, 10, 3, ((1,), (1,), (1,)), (1, 1, 4))),
    ('D', (11,), (3, 11, 2, ((1,), (2, 2, 2, 2)), (2,))),
    ('D', (12,), (3, 12, 3, ((1,), (1,), (1,)), (1, 1, 5))),
    ('D', (13,), (3, 13, 2, ((1,), (2, 2, 2, 2, 2)), (2,))),
    ('D', (14,), (3, 14, 3, ((1,), (1,), (1,)), (1, 1, 6))),
    ('E', (6,), (3, 6, 1, ((3,),), ())),
    ('E', (7,), (3, 7, 2, ((1,), (2,)), (3,))),
    ('E', (8,), (3, 8, 1, ((3, 2),), ())),
    ('B', (3, 6), (3, 10, 3, ((1,), (1,), (1,)), (2, 2, 2))),
    ('B', (3, 12), (3, 22, 3, ((1,), (1,), (1,)), (4, 4, 4))),
    ('B', (4, 6), (4, 15, 2, ((2,), (2,)), (6,))),
    ('B', (6, 6), (6, 25, 6, ((1,), (1,), (1,), (1,), (1,), (1,)), (1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1))),
    ('C', (3, 7), (3, 11, 2, ((1,), (2, 2)), (4,))),
    ('C', (3, 8), (3, 12, 3, ((1,), (1,), (1,)), (2, 2, 3))),
    ('C', (3, 9), (3, 13, 2, ((1,), (2, 2, 2)), (4,))),
    ('C', (3, 12), (3, 16, 3, ((1,), (1,), (1,)), (2, 2, 5))),
    ('C', (3, 15), (3, 19, 2, ((1,), (2, 2, 2, 2, 2, 2)), (4,))),
    ('C', (6, 6), (4, 13, 4, ((1,), (1,), (1,), (1,)), (1, 1, 1, 1, 2, 2))),
    ('C', (6, 9), (4, 16, 3, ((1,), (1,), (2, 2, 2)), (2, 2, 2))),
    ('C', (6, 12), (4, 19, 4, ((1,), (1,), (1,), (1,)), (1, 1, 1, 1, 2, 5))),
    ('D47', (4, 7), (4, 16, 3, ((1,), (1,), (2,)), (2, 3, 3))),
    ('Sp', (1,), (4, 18, 1, ((4, 2, 2, 2),), ())),
    ('Sp', (2,), (4, 21, 2, ((2,), (2,)), (9,))),
]
