"""Reference values for genus 3, transcribed as plain data.

Used by the self-test, the acceptance suite and the ambient-space oracle.
Exponents are strings so that the transcription stays literal.
"""

# datum -> (open character, compactified character, age), rational base
TABLE_POSITIVE_DIM = {
    "(2;8)": ("L^5", "L^5+3L^4+6L^3+6L^2+3L+1", "1/2"),
    "(3;4,1)": ("L^2", "L^2+2L+1", "5/3"),
    "(3;1,4)": ("L^2", "L^2+2L+1", "7/3"),
    "(4;4,0,0)": ("L", "L+1", "2"),
    "(4;0,0,4)": ("L", "L+1", "3"),
    "(4;2,3,0)": ("L^2-L", "L^2+2L+1", "7/4"),
    "(4;0,3,2)": ("L^2-L", "L^2+2L+1", "9/4"),
    "(4;2,0,2)": ("L-1", "L+1", "5/2"),
    "(6;1,0,2,0,1)": ("L-1", "L+1", "5/2"),
    "(6;1,0,1,2,0)": ("L-1", "L+1", "8/3"),
    "(6;0,2,1,0,1)": ("L-1", "L+1", "7/3"),
}

# datum -> age, zero-dimensional sectors with rational base
TABLE_ZERO_DIM = {
    "(7;2,0,0,0,1,0)": "20/7",
    "(7;0,1,0,0,0,2)": "22/7",
    "(7;1,1,0,1,0,0)": "3",
    "(7;0,0,1,0,1,1)": "3",
    "(7;1,0,2,0,0,0)": "23/7",
    "(7;0,0,0,2,0,1)": "19/7",
    "(7;0,2,1,0,0,0)": "24/7",
    "(7;0,0,0,1,2,0)": "18/7",
    "(8;2,0,0,0,0,1,0)": "13/4",
    "(8;0,1,0,0,0,0,2)": "11/4",
    "(8;1,1,0,0,1,0,0)": "3",
    "(8;0,0,1,0,0,1,1)": "3",
    "(8;0,1,2,0,0,0,0)": "11/4",
    "(8;0,0,0,0,2,1,0)": "13/4",
    "(9;1,1,0,0,0,1,0,0)": "31/9",
    "(9;0,0,1,0,0,0,1,1)": "23/9",
    "(9;1,0,1,0,1,0,0,0)": "26/9",
    "(9;0,0,0,1,0,1,0,1)": "28/9",
    "(9;0,1,1,1,0,0,0,0)": "29/9",
    "(9;0,0,0,0,1,1,1,0)": "25/9",
    "(12;10100001000)": "10/3",
    "(12;00010000101)": "8/3",
    "(12;10001100000)": "13/4",
    "(12;00000110001)": "11/4",
    "(12;00111000000)": "8/3",
    "(12;00000011100)": "10/3",
    "(14;1000011000000)": "51/14",
    "(14;0000001100001)": "33/14",
    "(14;0100101000000)": "41/14",
    "(14;0000001010010)": "43/14",
    "(14;0011001000000)": "45/14",
    "(14;0000001001100)": "39/14",
}

# the four sectors over a base of positive genus
POSITIVE_GENUS_DATA = ("(1,2;4)", "(1,3;1,1)", "(1,4;0,2,0)", "(2,2;0)")

# orbifold Poincare polynomial of M_3: degree -> multiplicity
CR_OPEN = {
    "0": 1, "1": 1, "2": 2, "3": 1, "10/3": 1, "7/2": 1, "4": 4, "9/2": 2,
    "14/3": 2, "33/7": 1, "5": 5, "46/9": 1, "36/7": 1, "16/3": 3, "38/7": 1,
    "11/2": 4, "50/9": 1, "39/7": 1, "17/3": 1, "40/7": 1, "52/9": 1,
    "41/7": 1, "6": 10, "43/7": 1, "56/9": 1, "44/7": 1, "19/3": 1,
    "45/7": 1, "58/9": 1, "13/2": 3, "46/7": 1, "20/3": 2, "48/7": 1,
    "62/9": 1, "51/7": 1,
}

# compactified orbifold Poincare polynomial of M_3
CR_COMPACT = {
    "0": 1, "1": 1, "2": 4, "3": 4, "10/3": 1, "7/2": 1, "4": 16, "9/2": 1,
    "14/3": 2, "33/7": 1, "5": 12, "46/9": 1, "36/7": 1, "16/3": 5,
    "38/7": 1, "11/2": 5, "50/9": 1, "39/7": 1, "40/7": 1, "52/9": 1,
    "41/7": 1, "6": 31, "43/7": 1, "56/9": 1, "44/7": 1, "45/7": 1,
    "58/9": 1, "13/2": 5, "46/7": 1, "20/3": 5, "48/7": 1, "62/9": 1,
    "7": 12, "51/7": 1, "22/3": 2, "15/2": 1, "8": 16, "17/2": 1, "26/3": 1,
    "9": 4, "10": 4, "11": 1, "12": 1,
}

# bigraded display: (L-exponent, t-degree) -> multiplicity.  Products such as
# L^a t^b (2 + L t) are expanded.
CR_BIGRADED = {
    ("0", "0"): 1,
    ("1/2", "1"): 1,
    ("1", "2"): 2,
    ("3/2", "3"): 1,
    ("2", "4"): 3, ("5/2", "4"): 1,
    ("5/2", "5"): 2, ("3", "5"): 3,
    ("3", "6"): 5, ("7/2", "6"): 2, ("4", "6"): 2, ("6", "6"): 1,
    # L^{7/4} t^{7/2} (1 + L t)
    ("7/4", "7/2"): 1, ("11/4", "9/2"): 1,
    # L^{9/4} t^{9/2} (1 + L t)
    ("9/4", "9/2"): 1, ("13/4", "11/2"): 1,
    ("11/4", "11/2"): 3,
    ("13/4", "13/2"): 3,
    ("5/3", "10/3"): 1,
    # L^{7/3} t^{14/3} (2 + L t)
    ("7/3", "14/3"): 2, ("10/3", "17/3"): 1,
    # L^{8/3} t^{16/3} (3 + L t)
    ("8/3", "16/3"): 3, ("11/3", "19/3"): 1,
    ("10/3", "20/3"): 2,
    ("33/14", "33/7"): 1, ("18/7", "36/7"): 1, ("19/7", "38/7"): 1,
    ("39/14", "39/7"): 1, ("20/7", "40/7"): 1, ("41/14", "41/7"): 1,
    ("43/14", "43/7"): 1, ("22/7", "44/7"): 1, ("45/14", "45/7"): 1,
    ("23/7", "46/7"): 1, ("24/7", "48/7"): 1, ("51/14", "51/7"): 1,
    ("23/9", "46/9"): 1, ("25/9", "50/9"): 1, ("26/9", "52/9"): 1,
    ("28/9", "56/9"): 1, ("29/9", "58/9"): 1, ("31/9", "62/9"): 1,
}

TOTAL_DIMENSION_OPEN = 62
