"""Published reference tables, transcribed verbatim (including any typos)."""

# CB2(h, y, z) values; rows y = 0..7, columns z = 0..15, None where the bar cannot exist.
_ = None
CB2_TABLE_15 = [
    [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15],
    [_, _, 3, 2, 5, 4, 7, 6, 9, 8, 11, 10, 13, 12, 15, 14],
    [_, _, _, _, 6, 7, 4, 5, 10, 11, 8, 9, 14, 15, 13, 12],
    [_, _, _, _, 7, 6, 5, 4, 11, 10, 9, 8, 15, 14, 13, 12],
    [_, _, _, _, _, _, _, _, 12, 13, 14, 15, 8, 9, 10, 11],
    [_, _, _, _, _, _, _, _, 13, 12, 15, 14, 9, 8, 11, 10],
    [_, _, _, _, _, _, _, _, 14, 15, 12, 13, 10, 11, 8, 9],
    [_, _, _, _, _, _, _, _, 15, 14, 13, 12, 11, 10, 9, 8],
]

# Two-pile nim with one pass, x, y = 0..12.
GP_TABLE_12 = [
    [0, 2, 1, 4, 3, 6, 5, 8, 7, 10, 9, 12, 11],
    [2, 1, 0, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12],
    [1, 0, 2, 5, 7, 3, 8, 4, 6, 12, 11, 10, 9],
    [4, 3, 5, 1, 0, 2, 7, 6, 9, 8, 12, 13, 10],
    [3, 4, 7, 0, 1, 8, 9, 2, 5, 6, 13, 14, 15],
    [6, 5, 3, 2, 8, 1, 0, 9, 4, 7, 14, 15, 13],
    [5, 6, 8, 7, 9, 0, 1, 3, 2, 4, 15, 16, 14],
    [8, 7, 4, 6, 2, 9, 3, 1, 0, 5, 16, 17, 18],
    [7, 8, 6, 9, 5, 4, 2, 0, 1, 3, 17, 18, 16],
    [10, 9, 12, 8, 6, 7, 4, 5, 3, 1, 0, 19, 2],
    [9, 10, 11, 12, 13, 14, 15, 16, 17, 0, 1, 2, 3],
    [12, 11, 10, 13, 14, 15, 16, 17, 18, 19, 2, 1, 0],
    [11, 12, 9, 10, 15, 13, 14, 18, 16, 2, 3, 0, 1],
]
