"""Reduction tables as printed, transcribed cell by cell.

Each table is a start system, the Cremona index sequence (the underlined
columns), and the printed rows ``(t, mults, k)``.  ``None`` marks a blank
cell, which stands for an entry that is no longer positive.  ``k`` is
``None`` on the last row.  Parametric tables use strings such as ``"3m-2"``.
"""

_ = None

N6 = dict(
    var="m",
    steps=[(1, 2, 3, 4), (3, 4, 5, 6), (1, 2, 5, 6)],
    rows=[
        ("12m-1", ["7m"] * 6, "-4m-2"),
        ("8m-3", ["3m-2"] * 4 + ["7m"] * 2, "-4m-2"),
        ("4m-5", ["3m-2", "3m-2", _, _, "3m-2", "3m-2"], "-4m-2"),
        ("-7", [_] * 6, None),
    ],
)

_SEQ7 = [(1, 2, 3, 4), (1, 5, 6, 7), (2, 3, 4, 5), (1, 2, 6, 7), (3, 4, 6, 7)]
N7_SLOPE = dict(
    steps=_SEQ7,
    rows=[
        (28, [15] * 7, -4),
        (24, [11, 11, 11, 11, 15, 15, 15], -8),
        (16, [3, 11, 11, 11, 7, 7, 7], -8),
        (8, [3, 3, 3, 3, -1, 7, 7], -4),
        (4, [-1, -1, 3, 3, -1, 3, 3], -4),
        (0, [-1] * 7, None),
    ],
)
N7_FREE = dict(
    steps=_SEQ7,
    rows=[
        (1, [0] * 7, 2),
        (3, [2, 2, 2, 2, 0, 0, 0], 4),
        (7, [6, 2, 2, 2, 4, 4, 4], 4),
        (11, [6, 6, 6, 6, 4, 4, 4], 2),
        (13, [8, 8, 6, 6, 4, 6, 6], 2),
        (15, [8, 8, 8, 8, 4, 8, 8], None),
    ],
)

N12 = dict(
    steps=[(1, 2, 3, 4), (1, 5, 6, 7), (1, 2, 3, 8), (4, 5, 6, 7), (1, 2, 4, 8), (3, 5, 6, 7),
           (1, 3, 4, 8), (5, 6, 7, 8)],
    rows=[
        (126, [95, 57, 57, 57, 57, 57, 57, 57], -14),
        (112, [81, 43, 43, 43, 57, 57, 57, 57], -28),
        (84, [53, 43, 43, 43, 29, 29, 29, 57], -28),
        (56, [25, 15, 15, 43, 29, 29, 29, 29], -18),
        (38, [25, 15, 15, 25, 11, 11, 11, 29], -18),
        (20, [7, _, 15, 7, 11, 11, 11, 11], -8),
        (12, [7, _, 7, 7, 3, 3, 3, 11], -8),
        (4, [_, _, _, _, 3, 3, 3, 3], -4),
        (0, [_] * 8, None),
    ],
)

_SEQ16 = [(1, 2, 3, 4), (1, 5, 6, 7), (1, 2, 8, 9), (1, 3, 4, 5), (1, 6, 7, 8), (1, 2, 3, 9),
          (1, 4, 5, 6), (1, 4, 7, 9)]
N16_SLOPE = dict(
    steps=_SEQ16,
    rows=[
        (22, [18, 9, 9, 9, 9, 9, 9, 9, 9], -1),
        (21, [17, 8, 8, 8, 9, 9, 9, 9, 9], -2),
        (19, [15, 8, 8, 8, 7, 7, 7, 9, 9], -3),
        (16, [12, 5, 8, 8, 7, 7, 7, 6, 6], -3),
        (13, [9, 5, 5, 5, 4, 7, 7, 6, 6], -3),
        (10, [6, 5, 5, 5, 4, 4, 4, 3, 6], -2),
        (8, [4, 3, 3, 5, 4, 4, 4, 3, 4], -1),
        (7, [3, 3, 3, 4, 3, 3, 4, 3, 4], -1),
        (6, [2, 3, 3, 3, 3, 3, 3, 3, 3], None),
    ],
)
N16_FREE = dict(
    steps=_SEQ16,
    rows=[
        (1, [0] * 9, 2),
        (3, [2, 2, 2, 2, 0, 0, 0, 0, 0], 4),
        (7, [6, 2, 2, 2, 4, 4, 4, 0, 0], 6),
        (13, [12, 8, 2, 2, 4, 4, 4, 6, 6], 6),
        (19, [18, 8, 8, 8, 10, 4, 4, 6, 6], 6),
        (25, [24, 8, 8, 8, 10, 10, 10, 12, 6], 4),
        (29, [28, 12, 12, 8, 10, 10, 10, 12, 10], 2),
        (31, [30, 12, 12, 10, 10, 10, 12, 12, 12], -2),
        (29, [28, 12, 12, 8, 10, 10, 10, 12, 10], None),
    ],
)

_SEQ35 = [(1, 2, 3, 4), (5, 6, 7, 8), (5, 6, 9, 10), (7, 8, 9, 10), (1, 2, 3, 5)]
N35_SLOPE = dict(
    steps=_SEQ35,
    rows=[
        (67, [42, 42, 42, 35, 21, 21, 21, 21, 21, 21], -27),
        (40, [15, 15, 15, 8, 21, 21, 21, 21, 21, 21], -4),
        (36, [15, 15, 15, 8, 17, 17, 17, 17, 21, 21], -4),
        (32, [15, 15, 15, 8, 13, 13, 17, 17, 17, 17], -4),
        (28, [15, 15, 15, 8, 13, 13, 13, 13, 13, 13], -2),
        (26, [13, 13, 13, 8, 11, 13, 13, 13, 13, 13], None),
    ],
)
N35_FREE = dict(
    steps=_SEQ35,
    rows=[
        (1, [0] * 10, 2),
        (3, [2, 2, 2, 2, 0, 0, 0, 0, 0, 0], 6),
        (9, [2, 2, 2, 2, 6, 6, 6, 6, 0, 0], 6),
        (15, [2, 2, 2, 2, 12, 12, 6, 6, 6, 6], 6),
        (21, [2, 2, 2, 2, 12, 12, 12, 12, 12, 12], 24),
        (45, [26, 26, 26, 2, 36, 12, 12, 12, 12, 12], None),
    ],
)

# columns m1, (m2)^3, (m3)^4 expanded to eight entries
CASE2_S5 = dict(
    var="r",
    steps=[(1, 2, 3, 4), (5, 6, 7, 8), (1, 2, 3, 4), (5, 6, 7, 8)],
    rows=[
        ("6r-3", ["4r-2"] + ["3r-2"] * 3 + ["3r-2"] * 4, "-r+2"),
        ("5r-1", ["3r"] + ["2r"] * 3 + ["3r-2"] * 4, "-2r+6"),
        ("3r+5", ["3r"] + ["2r"] * 3 + ["r+4"] * 4, "-3r+10"),
        ("15", ["10"] + ["10-r"] * 3 + ["r+4"] * 4, "-4r+14"),
        ("29-4r", ["10"] + ["10-r"] * 3 + ["18-3r"] * 4, None),
    ],
)

# the trailing "..." columns are further points of multiplicity 4; seven shown
CASE4_S4 = dict(
    steps=[(1, 2, 3, 4), (3, 4, 5, 6)],
    rows=[
        (7, [4] * 7, -2),
        (5, [2, 2, 2, 2, 4, 4, 4], -2),
        (3, [2, 2, 0, 0, 2, 2, 4], None),
    ],
)

CASE4_VDIM = {8: (15, 57, -325), 7: (13, 36, -161), 6: (11, 21, -57), 5: (9, 11, -1)}

B_TABLE = {
    1: "1", 2: "1", 3: "1", 4: "4/3", 5: "5/3", 6: "12/7", 7: "28/15", 8: "2", 12: "126/57",
    14: "7/3", 16: "22/9", 17: "5/2", 21: "8/3", 24: "107/39", 30: "3", 35: "67/21",
}

# cells where the replay and the printed table disagree: (table, row, column) with
# column 0 the degree, 1.. the multiplicities and "k" the k-column
KNOWN_DEVIATIONS = {
    "n7_free": {(3, 5), (4, 5), (5, 5)},
    "n16_free": {(7, "k"), (7, 5), (7, 6), (7, 7), (7, 9),
                 (8, 0), (8, 1), (8, 4), (8, 5), (8, 6), (8, 7), (8, 9)},
}
