"""Published constant tables, stored exactly as printed.

Shapes are part of the contract: Hartmann-3 A and P are 4x3 with alpha length
4; Hartmann-6 A and P are 4x6 with c length 4; Shekel A is m x 4 with c length
m; Langermann A is 5x2 with c = [1, 2, 5, 2, 3]; Judge A, B, C have length 20;
Kowalik a and b have length 11; the fifth De Jong grid is 25x2; the
Muller-Brown parameter table has 4 rows; the Gaussian fit targets have 8 rows;
the Meyer fit targets have 16 rows; the Power Sum right-hand side is
(8, 18, 44, 114).
"""

import numpy as np

HARTMANN3_ALPHA = np.array([1.0, 1.2, 3.0, 3.2])
HARTMANN3_A = np.array(
    [
        [3.0, 10.0, 30.0],
        [0.1, 10.0, 35.0],
        [3.0, 10.0, 30.0],
        [0.1, 10.0, 35.0],
    ]
)
HARTMANN3_P = 1e-4 * np.array(
    [
        [3689.0, 1170.0, 2673.0],
        [4699.0, 4387.0, 7470.0],
        [1091.0, 8732.0, 5547.0],
        [381.0, 5743.0, 8828.0],
    ]
)

HARTMANN6_C = np.array([1.0, 1.2, 3.0, 3.2])
HARTMANN6_A = np.array(
    [
        [10.0, 3.0, 17.0, 3.5, 1.7, 8.0],
        [0.05, 10.0, 17.0, 0.1, 8.0, 14.0],
        [3.0, 3.5, 1.7, 10.0, 17.0, 8.0],
        [17.0, 8.0, 0.05, 10.0, 0.1, 14.0],
    ]
)
HARTMANN6_P = np.array(
    [
        [0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5586],
        [0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991],
        [0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650],
        [0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381],
    ]
)

SHEKEL_A = np.array(
    [
        [4.0, 4.0, 4.0, 4.0],
        [1.0, 1.0, 1.0, 1.0],
        [8.0, 8.0, 8.0, 8.0],
        [6.0, 6.0, 6.0, 6.0],
        [3.0, 7.0, 3.0, 7.0],
        [2.0, 9.0, 2.0, 9.0],
        [5.0, 5.0, 3.0, 3.0],
        [8.0, 1.0, 8.0, 1.0],
        [6.0, 2.0, 6.0, 2.0],
        [7.0, 3.6, 7.0, 3.6],
    ]
)
SHEKEL_C = np.array([0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5])

LANGERMANN_A = np.array([[3.0, 5.0], [5.0, 2.0], [2.0, 1.0], [1.0, 4.0], [7.0, 9.0]])
LANGERMANN_C = np.array([1.0, 2.0, 5.0, 2.0, 3.0])

JUDGE_A = np.array(
    [4.284, 4.149, 3.877, 0.533, 2.211, 2.389, 2.145, 3.231, 1.998, 1.379,
     2.106, 1.428, 1.011, 2.179, 2.858, 1.388, 1.651, 1.593, 1.046, 2.152]
)
JUDGE_B = np.array(
    [0.286, 0.973, 0.384, 0.276, 0.973, 0.543, 0.957, 0.948, 0.543, 0.797,
     0.936, 0.889, 0.006, 0.828, 0.399, 0.617, 0.939, 0.784, 0.072, 0.889]
)
JUDGE_C = np.array(
    [0.645, 0.585, 0.310, 0.058, 0.455, 0.779, 0.259, 0.202, 0.028, 0.099,
     0.296, 0.296, 0.175, 0.180, 0.842, 0.039, 0.103, 0.620, 0.158, 0.704]
)

KOWALIK_A = np.array(
    [0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627, 0.0456, 0.0342, 0.0323,
     0.0235, 0.0246]
)
KOWALIK_B = np.array(
    [4.0, 2.0, 1.0, 1.0 / 2.0, 1.0 / 4.0, 1.0 / 6.0, 1.0 / 8.0, 1.0 / 10.0,
     1.0 / 12.0, 1.0 / 14.0, 1.0 / 16.0]
)

# 25 foxhole centers, exactly as printed (note the second column runs over
# {-16, -8, 0, 8, 16}, not the symmetric grid other sources use).
DEJONG5_A = np.array(
    [
        [-32.0, -16.0], [-16.0, -16.0], [-32.0, -8.0], [-16.0, -8.0],
        [-32.0, 0.0], [-16.0, 0.0], [-32.0, 8.0], [-16.0, 8.0],
        [-32.0, 16.0], [-16.0, 16.0], [0.0, -16.0], [0.0, -8.0],
        [0.0, 0.0], [0.0, 8.0], [0.0, 16.0], [16.0, -16.0],
        [16.0, -8.0], [16.0, 0.0], [16.0, 8.0], [16.0, 16.0],
        [32.0, -16.0], [32.0, -8.0], [32.0, 0.0], [32.0, 8.0], [32.0, 16.0],
    ]
)

MULLER_BROWN = {
    "A": np.array([-200.0, -100.0, -170.0, 15.0]),
    "a": np.array([-1.0, -1.0, -6.5, 0.7]),
    "b": np.array([0.0, 0.0, 11.0, 0.6]),
    "c": np.array([-10.0, -10.0, -6.5, 0.7]),
    "x0": np.array([1.0, 0.0, -0.5, -1.0]),
    "y0": np.array([0.0, 0.5, 1.5, 1.0]),
}

GAUSSIAN_Y = np.array([0.0009, 0.0044, 0.0175, 0.0540, 0.1295, 0.2420, 0.3521, 0.3989])

MEYER_Y = np.array(
    [34780.0, 28610.0, 23650.0, 19630.0, 16370.0, 13720.0, 11540.0, 9744.0,
     8261.0, 7030.0, 6005.0, 5147.0, 4427.0, 3820.0, 3307.0, 2872.0]
)

POWER_SUM_B = np.array([8.0, 18.0, 44.0, 114.0])


CONSTANT_TABLES = {
    "hartmann-3": {"alpha": HARTMANN3_ALPHA, "A": HARTMANN3_A, "P": HARTMANN3_P},
    "hartmann-6": {"c": HARTMANN6_C, "A": HARTMANN6_A, "P": HARTMANN6_P},
    "shekel-n5": {"A": SHEKEL_A[:5], "c": SHEKEL_C[:5]},
    "shekel-n7": {"A": SHEKEL_A[:7], "c": SHEKEL_C[:7]},
    "shekel-n10": {"A": SHEKEL_A, "c": SHEKEL_C},
    "langermann": {"A": LANGERMANN_A, "c": LANGERMANN_C},
    "judge": {"A": JUDGE_A, "B": JUDGE_B, "C": JUDGE_C},
    "kowalik": {"a": KOWALIK_A, "b": KOWALIK_B},
    "de-jong-n5": {"A": DEJONG5_A},
    "muller-brown": MULLER_BROWN,
    "gaussian": {"y": GAUSSIAN_Y},
    "meyer": {"y": MEYER_Y},
    "power-sum": {"b": POWER_SUM_B},
}
