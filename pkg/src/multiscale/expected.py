"""Published reference values checked by :mod:`multiscale.verify`.

Values are transcribed as printed, including the few that the computation
does not reproduce; the verifier reports those as failures rather than
silently correcting them.
"""

FULL_N = 65_536_000
TWIN_LEVEL3_N = 8_192_000

LEVEL1_PRIME_HISTOGRAM = {
    0: 4_832_539, 2: 684_373, 8: 750_452, 10: 65_993, 32: 749_658, 34: 66_147, 40: 75_799,
    106: 1, 128: 683_626, 130: 131_841, 136: 65_801, 138: 9_773, 160: 66_219, 162: 9_778,
}

# shares of level-1 blocks with 0, 1, 2, 3-4 primes; tolerance 0.5 percentage point
BLOCK_PROPORTIONS = {"0": 0.59, "1": 0.3501, "2": 0.05, "3-4": 0.0024}
BLOCK_PROPORTION_TOL = 0.005

LI_OVER_PI = 1.0002
PSI_LI_OVER_N1 = 1.01439
MULTI_OVER_PSI_LI = 1.04124
RATIO_TOL = 0.001

LEVEL1_POSITIONS = {1: 0.1181526, 3: 0.1181420, 5: 0.1181155, 7: 0.1180466}
LEVEL1_POSITION_TOL = 2e-7

LEVEL2_POSITIONS = {
    0: 0.409912, 1: 0.410776, 2: 0.409876, 3: 0.409734,
    4: 0.410438, 5: 0.410192, 6: 0.409737, 7: 0.410057,
}
LEVEL2_POSITION_TOL = 2e-6
LEVEL2_SEARCH_ORDER = (1, 4, 5, 7, 0, 2, 6, 3)

LEVEL2_PRIME_PREFIX = (255, 255, 255, 191, 251, 127, 255)
LEVEL3_CONSTANT_PREFIX = 367
LEVEL3_FIRST_DEVIATION = (367, 223)
LEVEL3_PRIME_HISTOGRAM = {
    31: 1, 55: 1, 59: 1, 63: 8, 95: 17, 111: 14, 115: 2, 118: 1, 119: 18,
    123: 11, 125: 11, 126: 14, 127: 1233, 159: 8, 175: 8, 179: 1, 181: 1,
    183: 10, 187: 17, 189: 8, 190: 14, 191: 1257, 205: 1, 207: 7, 211: 1,
    214: 2, 215: 10, 219: 18, 221: 10, 222: 16, 223: 1206, 231: 13, 235: 14,
    237: 19, 238: 19, 239: 1200, 243: 5, 245: 11, 246: 17, 247: 1253, 249: 12,
    250: 12, 251: 1243, 252: 11, 253: 1216, 254: 1272, 255: 117_756,
}
LEVEL3_STATED_MISSING = 208
LEVEL3_MIN_PRIMES = 5

TWIN_LEVEL2_PREFIX = (245, 12, 98, 136, 80, 16, 8, 64, 65, 4, 160, 0, 7, 18, 0, 1, 24, 128, 0, 65)
TWIN_LEVEL2_DISTINCT = 108
TWIN_LEVEL2_STATED_MISSING = 147
TWIN_LEVEL3_PREFIX = (255, 237, 219, 119, 253, 114, 59, 31, 247, 231, 12, 209, 234, 248, 174, 92,
                      214, 108, 83, 62)
TWIN_LEVEL3_DISTINCT = 256

MERSENNE_K_MAX = 4001
MERSENNE_M_MAX = 500
MERSENNE_HISTOGRAM = {0: 1968, 2: 15, 8: 9, 10: 1, 42: 1, 128: 6}
MERSENNE_EXPONENTS = {
    2: (7, 13, 17, 19, 31, 61, 89, 107, 127, 251, 607, 1279, 2203, 2281, 3217),
    8: (9, 29, 213, 221, 233, 545, 689, 2321, 3237),
    10: (5,),
    42: (3,),
    128: (39, 715, 1983, 2319, 2499, 3775),
}
MERSENNE_LEVEL2 = {
    3203: 1, 115: 2, 595: 2, 1267: 2, 51: 4, 4243: 4, 99: 8, 2195: 8,
    83: 16, 515: 16, 2275: 16, 4419: 32, 19: 130, 3: 229,
}
MERSENNE_OFFSET_COUNTS = {1: 15, 3: 9, 5: 0, 7: 6}
MERSENNE_STATED_NONZERO = (2, 8, 10, 42, 128)
MERSENNE_LEVEL2_NONEMPTY = 14
MERSENNE_LEVEL2_BLOCKS = 501
MERSENNE_EMPTY_FRACTION = 0.972

# first 49 values of each sequence laid out as a spiral, row by row
SPIRAL_PRIME_LEVEL1 = (
    (34, 0, 8, 10, 130, 32, 128),
    (136, 32, 2, 128, 40, 138, 130),
    (0, 160, 8, 10, 162, 128, 40),
    (32, 10, 162, 106, 40, 32, 2),
    (0, 8, 8, 40, 34, 130, 32),
    (32, 34, 8, 40, 2, 138, 0),
    (128, 40, 130, 2, 8, 34, 8),
)
SPIRAL_PRIME_LEVEL2 = (
    (158, 223, 157, 182, 239, 254, 83),
    (246, 221, 251, 111, 182, 183, 239),
    (220, 253, 251, 191, 255, 255, 122),
    (159, 255, 127, 255, 255, 239, 243),
    (59, 237, 255, 255, 95, 254, 157),
    (111, 252, 58, 255, 123, 253, 249),
    (247, 222, 189, 189, 115, 223, 238),
)
SPIRAL_TWIN_LEVEL2 = (
    (136, 16, 1, 48, 8, 68, 80),
    (64, 24, 1, 0, 18, 7, 32),
    (0, 128, 80, 136, 98, 0, 0),
    (2, 0, 16, 245, 12, 160, 1),
    (0, 65, 8, 64, 65, 4, 137),
    (8, 96, 0, 36, 64, 0, 32),
    (4, 10, 0, 0, 16, 0, 0),
)
SPIRAL_TWIN_LEVEL3 = (
    (65, 244, 255, 235, 74, 125, 28),
    (27, 214, 92, 174, 248, 234, 139),
    (211, 108, 253, 119, 219, 209, 152),
    (163, 83, 114, 255, 237, 12, 235),
    (219, 62, 59, 31, 247, 231, 198),
    (199, 249, 110, 27, 191, 84, 210),
    (208, 233, 247, 181, 228, 204, 6),
)
