"""Catalog definitions, names H through M."""

import numpy as np

from ..errors import DomainError
from .constants import (
    HARTMANN3_A,
    HARTMANN3_ALPHA,
    HARTMANN3_P,
    HARTMANN6_A,
    HARTMANN6_C,
    HARTMANN6_P,
    JUDGE_A,
    JUDGE_B,
    JUDGE_C,
    KOWALIK_A,
    KOWALIK_B,
    LANGERMANN_A,
    LANGERMANN_C,
    MULLER_BROWN,
)
from .model import (
    BOTH,
    PAPER_CLAIMED,
    VERIFIED,
    entry,
    om,
    per_coord_bounds,
    require,
)

E = np.e
PI = np.pi


def _happy_cat(x, alpha=0.125):
    n = x.size
    r2 = np.sum(x * x)
    return float(((r2 - n) ** 2) ** alpha + (0.5 * r2 + np.sum(x)) / n + 0.5)


def _hartmann_3(x):
    inner = np.sum(HARTMANN3_A * (x - HARTMANN3_P) ** 2, axis=1)
    return float(-np.sum(HARTMANN3_ALPHA * np.exp(-inner)))


def _hartmann_6(x):
    inner = np.sum(HARTMANN6_A * (x - HARTMANN6_P) ** 2, axis=1)
    return float(-np.sum(HARTMANN6_C * np.exp(-inner)))


def _helical_valley(x):
    if x[0] == 0.0 and x[1] == 0.0:
        raise DomainError("helical-valley: polar angle undefined at the z-axis")
    theta = np.arctan2(x[1], x[0]) / (2.0 * PI)
    r = np.sqrt(x[0] ** 2 + x[1] ** 2)
    return float(100.0 * ((x[2] - 10.0 * theta) ** 2 + (r - 1.0) ** 2) + x[2] ** 2)


def _himmelblau(x):
    return float((x[0] + x[1] ** 2 - 7.0) ** 2 + (x[0] ** 2 + x[1] - 11.0) ** 2)


def _holder_envelope(x):
    return np.exp(abs(1.0 - np.sqrt(x[0] ** 2 + x[1] ** 2) / PI))


def _holder_table(x):
    return float(-abs(np.sin(x[0]) * np.cos(x[1]) * _holder_envelope(x)))


def _holder_table_n2(x):
    return float(-abs(np.sin(x[0]) * np.cos(x[1]) * np.cos(x[0] * x[1]) * _holder_envelope(x)))


def _holzman(x):
    require(x[0] != 0.0, "holzman", "division by zero")
    i = np.arange(0, 99)
    u = 25.0 + (-50.0 * np.log(0.01 * (i + 1))) ** (2.0 / 3.0)
    base = u - x[1]
    expo = x[2]
    if np.any(base < 0.0) and expo != np.round(expo):
        raise DomainError("holzman: fractional power of a negative base")
    with np.errstate(over="ignore"):  # large exponents legitimately saturate to inf
        return float(np.sum(-0.1 * (i + 1) + np.exp(base**expo / x[0])))


def _holzman_n2(x):
    i = np.arange(1, x.size + 1)
    return float(np.sum(i * x**4))


def _hosaki(x):
    poly = 1.0 - 8.0 * x[0] + 7.0 * x[0] ** 2 - 7.0 / 3.0 * x[0] ** 3 + 0.25 * x[0] ** 4
    return float(poly * x[1] ** 2 * np.exp(-x[1]))


def _hosaki_exponential(x):
    poly = x[0] ** 4 / 4.0 - 7.0 * x[0] ** 3 / 3.0 + 7.0 * x[0] ** 2 - 8.0 * x[0] + 1.0
    return float(10.0 * (-x[0] ** 3 + x[1]) ** 2 + poly * np.exp(-x[0] ** 2))


def _hqing(x):
    return float(-x[0] ** 4 + x[0] ** 2 + 16.0 * x[1] ** 4 - 16.0 * x[1] ** 2)


def _hump(x):
    return float(
        x[0] ** 6 / 3.0
        - 2.1 * x[0] ** 4
        + 4.0 * x[0] ** 2
        + x[0] * x[1]
        + 4.0 * x[1] ** 4
        - 4.0 * x[1] ** 2
    )


def _infinity(x):
    require(x != 0.0, "infinity", "sin(x)/x undefined at x = 0")
    return float(np.sin(x[0]) / x[0] * np.sin(x[1]) / x[1])


def _inverted_cosine_wave(x):
    u = x[:-1] ** 2 + x[1:] ** 2 + 0.5 * x[:-1] * x[1:]
    return float(-np.sum(np.exp(-u / 8.0) * np.cos(4.0 * np.sqrt(u))))


def _jennrich_sampson(x):
    i = np.arange(1, 11)
    return float(np.sum((2.0 + 2.0 * i - (np.exp(i * x[0]) + np.exp(i * x[1]))) ** 2))


def _judge(x):
    r = x[0] + JUDGE_B * x[1] + JUDGE_C * x[1] ** 2 - JUDGE_A
    return float(np.sum(r * r))


def _katsuura(x, depth=32):
    k = np.arange(1, depth + 1)
    pow2 = 2.0**k
    factors = [
        1.0 + (i + 1) * np.sum(np.round(pow2 * xi) / pow2) for i, xi in enumerate(x)
    ]
    return float(np.prod(factors))


def _keane(x):
    r = np.sqrt(x[0] ** 2 + x[1] ** 2)
    require(r != 0.0, "keane", "division by zero at the origin")
    return float(np.sin(x[0] - x[1]) ** 2 * np.sin(x[0] + x[1]) ** 2 / r)


def _keane_n2(x):
    r = np.sqrt(x[0] ** 2 + x[1] ** 2) + 1e-8
    return float(np.sin(x[0] - x[1]) ** 2 * np.sin(x[0] + x[1]) ** 2 / r)


def _kowalik(x):
    denom = KOWALIK_B**2 + KOWALIK_B * x[2] + x[3]
    require(denom != 0.0, "kowalik", "division by zero")
    r = KOWALIK_A - x[0] * (KOWALIK_B**2 + KOWALIK_B * x[1]) / denom
    return float(np.sum(r * r))


def _langermann(x):
    d = np.sum((x[None, :] - LANGERMANN_A) ** 2, axis=1)
    return float(-np.sum(LANGERMANN_C * np.exp(-d / PI) * np.cos(PI * d)))


def _lennard_jones(x):
    pts = x.reshape(-1, 3)
    total = 0.0
    for i in range(len(pts) - 1):
        d2 = np.sum((pts[i + 1 :] - pts[i]) ** 2, axis=1)
        require(d2 > 0.0, "lennard-jones", "coincident atoms")
        inv6 = 1.0 / d2**3
        total += float(np.sum(inv6 * inv6 - inv6))
    return total


def _leon(x):
    return float((1.0 - x[0]) ** 2 + 100.0 * (x[1] - x[0] ** 2) ** 2)


def _levy_core(x):
    y = 1.0 + (x - 1.0) / 4.0
    head = np.sin(PI * y[0]) ** 2
    mid = np.sum((y[:-1] - 1.0) ** 2 * (1.0 + 10.0 * np.sin(PI * y[:-1] + 1.0) ** 2))
    tail = (y[-1] - 1.0) ** 2 * (1.0 + np.sin(2.0 * PI * y[-1]) ** 2)
    return float(head + mid + tail)


def _levy_n8(x):
    y = 1.0 + (x - 1.0) / 4.0
    head = np.sin(PI * y[0]) ** 2
    mid = np.sum((y[:-1] - 1.0) ** 2 * (1.0 + 10.0 * np.sin(PI * y[1:] + 1.0) ** 2))
    tail = (y[-1] - 1.0) ** 2 * (1.0 + np.sin(2.0 * PI * x[-1]) ** 2)
    return float(head + mid + tail)


def _levy_n5(x):
    i = np.arange(1.0, 6.0)
    return float(
        np.sum(i * np.cos((i - 1.0) * x[0] + i))
        * np.sum(i * np.cos((i + 1.0) * x[1] + i))
        + (x[0] + 1.42513) ** 2
        + (x[1] + 0.80032) ** 2
    )


def _levy_n13(x):
    return float(
        np.sin(3.0 * PI * x[0]) ** 2
        + (x[0] - 1.0) ** 2 * (1.0 + np.sin(3.0 * PI * x[1]) ** 2)
        + (x[1] - 1.0) ** 2 * (1.0 + np.sin(2.0 * PI * x[1]) ** 2)
    )


def _matyas(x):
    return float(0.26 * (x[0] ** 2 + x[1] ** 2) - 0.48 * x[0] * x[1])


def _mccormick(x):
    return float(
        np.sin(x[0] + x[1]) + (x[0] - x[1]) ** 2 - 1.5 * x[0] + 2.5 * x[1] + 1.0
    )


def _mccormick_with_noise(x, rng):
    return float(_mccormick(x) + rng.uniform(-1.0, 1.0))


def _meyer(x):
    i = np.arange(1, 17)
    t = 45.0 + 5.0 * i
    denom = t + x[2]
    require(denom != 0.0, "meyer", "division by zero")
    from .constants import MEYER_Y

    r = x[0] * np.exp(x[1] / denom) - MEYER_Y
    return float(np.sum(r * r))


def _michalewicz(x, m=10):
    i = np.arange(1, x.size + 1)
    return float(-np.sum(np.sin(x) * np.sin(i * x * x / PI) ** (2 * m)))


def _michalewicz_n2(x):
    return float(
        -0.5 * np.sin(x[0] ** 2 / PI) ** 20 * np.sin(x[0])
        - 0.5 * np.sin(2.0 * x[1] ** 2 / PI) ** 20 * np.sin(x[1])
    )


def _michalewicz_with_noise(x, rng):
    return float(_michalewicz(x) + rng.uniform(-1.0, 1.0))


def _miele_cantrell(x):
    return float(
        (np.exp(-x[0]) - x[1]) ** 4
        + 100.0 * (x[1] - x[2]) ** 6
        + np.tan(x[2] - x[3]) ** 4
        + x[0] ** 8
    )


def _mishra_n1(x):
    g = x.size - np.sum(x[:-1])
    base = 1.0 + g
    require(base > 0.0, "mishra-n1", "real power of a non-positive base")
    return float(base**g)


def _mishra_n2(x):
    g = x.size - np.sum(0.5 * (x[:-1] + x[1:]))
    base = 1.0 + g
    require(base > 0.0, "mishra-n2", "real power of a non-positive base")
    return float(base**g)


def _mishra_n3(x):
    return float(
        np.sqrt(abs(np.cos(np.sqrt(x[0] ** 2 + x[1] ** 2)))) + 0.01 * (x[0] + x[1])
    )


def _mishra_n4(x):
    return float(
        np.sqrt(abs(np.sin(np.sqrt(x[0] ** 2 + x[1] ** 2)))) + 0.01 * (x[0] + x[1])
    )


def _mishra_n5(x):
    inner = (
        np.sin((np.cos(x[0]) + np.cos(x[1])) ** 2) ** 2
        + np.cos(np.sin(x[0]) + np.sin(x[1])) ** 2
        + x[0]
    )
    return float(inner**2 + 0.01 * (x[0] + x[1]))


def _mishra_n6(x):
    inner = (
        np.sin((np.cos(x[0]) + np.cos(x[1])) ** 2) ** 2
        - np.cos((np.sin(x[0]) + np.sin(x[1])) ** 2) ** 2
        + x[0]
    )
    require(inner != 0.0, "mishra-n6", "log of zero")
    return float(
        -np.log(inner**2) + 0.1 * ((x[0] - 1.0) ** 2 + (x[1] - 1.0) ** 2)
    )


def _mishra_n7(x):
    fact = float(np.prod(np.arange(1, x.size + 1)))
    return float(np.prod(x - fact) ** 2)


_DECANOMIAL_P = np.array(
    [1.0, -20.0, 180.0, -960.0, 3360.0, -8064.0, 13440.0, -15360.0, 11520.0, -5120.0, 1024.0]
)
_DECANOMIAL_Q = np.array([1.0, 12.0, 54.0, 108.0, 81.0])


def _mishra_n8(x):
    p = np.polyval(_DECANOMIAL_P, x[0])
    q = np.polyval(_DECANOMIAL_Q, x[1])
    return float((0.001 * abs(p + q)) ** 2)


def _mishra_n9(x):
    a = 2.0 * x[0] ** 3 + 5.0 * x[0] * x[1] + 4.0 * x[2] - 2.0 * x[0] * x[2] ** 3 - 18.0
    b = x[0] + x[1] ** 2 + x[0] * x[2] ** 2 - 22.0
    c = 8.0 * x[1] + 2.0 * x[1] * x[2] + 2.0 * x[1] ** 2 + 3.0 * x[2] ** 2 - 52.0
    return float((a * b**2 * c + a * b * c**2 + b**2 + (x[0] + x[1] - x[2]) ** 2) ** 2)


def _mishra_n10(x):
    return float((abs(x[0] + x[1]) - abs(x[0]) - abs(x[1])) ** 2)


def _mishra_n11(x):
    n = x.size
    ax = np.abs(x)
    return float((np.sum(ax) / n - np.prod(ax) ** (1.0 / n)) ** 2)


def _mishras_bird(x):
    return float(
        (x[0] - x[1]) ** 2
        + np.exp((1.0 - np.sin(x[1])) ** 2) * np.cos(x[0])
        + np.exp((1.0 - np.cos(x[0])) ** 2) * np.sin(x[1])
    )


def _muller_brown(x):
    p = MULLER_BROWN
    dx = x[0] - p["x0"]
    dy = x[1] - p["y0"]
    return float(np.sum(p["A"] * np.exp(p["a"] * dx**2 + p["b"] * dx * dy + p["c"] * dy**2)))


DEFS = [
    entry(
        "happy-cat",
        _happy_cat,
        bounds=(-2.0, 2.0),
        dim=("scalable", 1),
        props="C D NS SC M",
        params={"alpha": 0.125},
        optima=[om(0.0, ("all", -1.0), VERIFIED, tol=1e-9)],
        notes=(
            "the exponent alpha is never stated; the customary 1/8 is used",
            "the published two-dimensional reduction is structurally different and is not registered",
        ),
    ),
    entry(
        "hartmann-3",
        _hartmann_3,
        aliases=("hartman-3",),
        bounds=(0.0, 1.0),
        dim=3,
        props="C D NS NSC M",
        constants="hartmann-3",
        optima=[om(-3.8627, (0.1146, 0.5556, 0.8525), BOTH, tol=1e-3)],
    ),
    entry(
        "hartmann-6",
        _hartmann_6,
        aliases=("hartman-6", "hartman-n6"),
        bounds=(0.0, 1.0),
        dim=6,
        props="C D NS NSC M",
        constants="hartmann-6",
        optima=[
            om(
                -3.3223,
                (0.20169, 0.150011, 0.476874, 0.275332, 0.311652, 0.6573),
                PAPER_CLAIMED,
                note="published location lists five coordinates (sixth, 0.6573, restored); the value belongs to the canonical P table",
            ),
            om(-3.3066053, (0.202713, 0.149784, 0.474454, 0.275887, 0.31135, 0.654031), VERIFIED, tol=1e-4),
        ],
        notes=(
            "the printed P table deviates from the canonical one (first row ends 0.5586, "
            "not 0.5886); the table is kept exactly as printed, which shifts the minimum "
            "to -3.30661",
        ),
    ),
    entry(
        "helical-valley",
        _helical_valley,
        bounds=(-10.0, 10.0),
        dim=3,
        props="C D NS SC M",
        optima=[om(0.0, (1.0, 0.0, 0.0), BOTH, tol=1e-9)],
        notes=("published polar-angle branches are garbled; the standard atan2 definition is used",),
    ),
    entry(
        "himmelblau",
        _himmelblau,
        bounds=(-6.0, 6.0),
        dim=2,
        props="C D NS NSC M",
        optima=[
            om(0.0, (0.0, 0.0), PAPER_CLAIMED, note="published root; evaluates to 170"),
            om(0.0, (-1.0, 1.0), PAPER_CLAIMED, note="published root; evaluates to 130"),
            om(0.0, (3.0, 2.0), VERIFIED, tol=1e-9),
            om(0.0, (-2.805118, 3.131312), VERIFIED, tol=1e-9),
            om(0.0, (-3.779310, -3.283186), VERIFIED, tol=1e-9),
            om(0.0, (3.584428, -1.848126), VERIFIED, tol=1e-9),
        ],
        tier=1,
        notes=(
            "the two published solutions are not roots of the printed system; the four "
            "classic minima are recorded instead",
        ),
    ),
    entry(
        "holder-table",
        _holder_table,
        aliases=("holder-table-1",),
        bounds=(-10.0, 10.0),
        dim=2,
        props="C D S NSC M",
        optima=[
            om(-19.2085, (8.055, 9.664), BOTH, tol=1e-3, note="attained at all four sign combinations"),
            om(-26.9203, (9.6645, 9.6645), PAPER_CLAIMED, note="belongs to the cos*cos variant, not this form"),
        ],
        tier=1,
        notes=(
            "published cos*cos body cannot reach the stated -19.2085; the canonical sin*cos "
            "form (identical to the second printed variant) is used",
            "published range [-5, 5] excludes the table minima; the conventional [-10, 10] box is used",
        ),
    ),
    entry(
        "holder-table-2",
        _holder_table,
        bounds=(-10.0, 10.0),
        dim=2,
        props="C D S NSC M",
        optima=[om(-19.208502, (8.055023, 9.664590), VERIFIED, tol=1e-3)],
        notes=(
            "prints the sin*cos body that the resolved base holder-table adopts; registered as a duplicate on purpose",
            "published range [-5, 5] excludes the table minima; [-10, 10] is used",
        ),
    ),
    entry(
        "holder-table-n2",
        _holder_table_n2,
        bounds=(-10.0, 10.0),
        dim=2,
        props="C D S NSC M",
        notes=("published range [-5, 5] excludes the table minima; [-10, 10] is used",),
    ),
    entry(
        "holzman",
        _holzman,
        bounds=per_coord_bounds((0.1, 100.0), (0.0, 25.6), (0.0, 5.0)),
        dim=3,
        props="C D NS NSC M",
        optima=[om(0.0, None, PAPER_CLAIMED, note="claimed at x = y = 0, where the formula is singular")],
        notes=("transcription suspect: the prose describes reciprocal influences unrelated to the printed sum",),
    ),
    entry(
        "holzman-n2",
        _holzman_n2,
        bounds=(-10.0, 10.0),
        dim=("scalable", 1),
        props="C D S SC U",
        optima=[om(0.0, ("all", 0.0), VERIFIED, tol=1e-9)],
        notes=("the printed sum starts the weight at i = 0; one-based weights are used so every coordinate counts",),
    ),
    entry(
        "hosaki",
        _hosaki,
        bounds=per_coord_bounds((0.0, 5.0), (0.0, 6.0)),
        dim=2,
        props="C D NS NSC M",
        optima=[om(-2.3458, (4.0, 2.0), BOTH, tol=1e-3)],
        notes=("published decay e^{-x1 x1^2} drops the x2^2 e^{-x2} factor; the canonical form is used",),
    ),
    entry(
        "hosaki-exponential",
        _hosaki_exponential,
        bounds=(-5.0, 5.0),
        dim=2,
        props="C D NS NSC M",
    ),
    entry(
        "hosaki-exponential-with-noise",
        _hosaki_exponential,
        bounds=(-5.0, 5.0),
        dim=2,
        props="C D NS NSC M",
        notes=("despite the published name, no noise term is printed; identical to hosaki-exponential",),
    ),
    entry(
        "hqing",
        _hqing,
        bounds=(-5.0, 5.0),
        dim=2,
        props="C D S NSC M",
        optima=[om(0.0, (0.0, 0.0), BOTH, tol=1e-9, note="stationary only; the box corners go far lower")],
    ),
    entry(
        "hump",
        _hump,
        bounds=(-5.0, 5.0),
        dim=2,
        props="C D NS NSC M",
        optima=[
            om(0.0, (0.0898, -0.7126), PAPER_CLAIMED, note="published value; these points actually give about -1.03"),
            om(-1.031628, (0.0898, -0.7126), VERIFIED, tol=1e-3),
            om(-1.031628, (-0.0898, 0.7126), VERIFIED, tol=1e-3),
        ],
    ),
    entry(
        "infinity",
        _infinity,
        bounds=(-10.0, 10.0),
        dim=2,
        props="C D S NSC M",
        notes=(
            'published "range [-0.2172, 1]" is the value range; [-10, 10] is used as the box',
            "undefined on the axes (division by zero)",
        ),
    ),
    entry(
        "inverted-cosine-wave",
        _inverted_cosine_wave,
        bounds=(-5.0, 5.0),
        dim=("scalable", 2),
        props="C D NS SC M",
        optima=[om(-1.0, ("all", 0.0), VERIFIED, tol=1e-9, dim=2, note="-(n-1) in general")],
    ),
    entry(
        "jennrich-sampson",
        _jennrich_sampson,
        bounds=(-1.0, 1.0),
        dim=2,
        props="C D NS NSC M",
        optima=[om(124.3622, (0.257825, 0.257825), BOTH, tol=0.13)],
        notes=("published squaring is misplaced; the canonical (2 + 2i - (e^{ix} + e^{iy}))^2 residual is used",),
    ),
    entry(
        "judge",
        _judge,
        bounds=(-10.0, 10.0),
        dim=2,
        props="C D NS NSC M",
        constants="judge",
        optima=[
            om(16.0817, (0.864, 1.235), PAPER_CLAIMED, note="the value belongs to the canonical C column"),
            om(16.1956093, (0.8676211, 1.2259747), VERIFIED, tol=1e-4),
        ],
        notes=(
            "printed three-variable residual resolved to the canonical two-variable "
            "quadratic regression, which the stated minimizer requires",
            "the printed C column repeats 0.296 where the canonical table has 0.142; the "
            "table is kept exactly as printed, which shifts the minimum to 16.1956",
        ),
    ),
    entry(
        "katsuura",
        _katsuura,
        bounds=(0.0, 100.0),
        dim=("scalable", 1),
        props="C ND NS SC M",
        params={"depth": 32},
        optima=[om(1.0, ("all", 0.0), BOTH, tol=1e-9)],
        notes=(
            "the alternative published range [-1000, 1000] drives factors negative and "
            "breaks the stated minimum of 1; the nonnegative [0, 100] range is used",
        ),
    ),
    entry(
        "keane",
        _keane,
        bounds=(-10.0, 10.0),
        dim=2,
        props="C D NS NSC M",
        optima=[
            om(0.6736, (1.3932, 0.0), BOTH, tol=1e-3, note="a maximum, in fact; the function vanishes on the diagonals")
        ],
    ),
    entry(
        "keane-n2",
        _keane_n2,
        bounds=(-6.97, 6.97),
        dim=2,
        props="C D NS NSC M",
    ),
    entry(
        "kearfott",
        _keane_n2,
        bounds=(-3.0, 3.0),
        dim=2,
        props="C D NS NSC M",
        optima=[
            om(0.0, (1.224744871391589, 0.7071067811865476), PAPER_CLAIMED, note="evaluates to about 0.15, not 0")
        ],
        notes=(
            "printed identically to keane-n2; registered as a duplicate on purpose",
            "no range is published; [-3, 3] encloses the stated points",
        ),
    ),
    entry(
        "kowalik",
        _kowalik,
        bounds=(-5.0, 5.0),
        dim=4,
        props="C D NS NSC M",
        constants="kowalik",
        optima=[om(3.0748e-4, (0.192, 0.190, 0.123, 0.135), BOTH, tol=1e-5)],
        notes=("printed subscripts garbled; the canonical single-b-vector rational fit is used",),
    ),
    entry(
        "langermann",
        _langermann,
        bounds=(-10.0, 10.0),
        dim=2,
        props="C D NS NSC M",
        constants="langermann",
        optima=[om(-5.162, (2.0029, 1.006), BOTH, tol=1e-3)],
        notes=(
            "the weight vector c is only printed with the second variant and is shared",
            "printed without the leading minus, which the stated negative minimum requires",
        ),
    ),
    entry(
        "langermann-n2",
        _langermann,
        bounds=(-1.52, 10.0),
        dim=2,
        props="C D NS NSC M",
        constants="langermann",
        optima=[om(-5.1621259, (2.00299219, 1.006096), VERIFIED, tol=1e-3)],
        notes=("same body as langermann (the resolved base form already carries the minus)",),
    ),
    entry(
        "lennard-jones",
        _lennard_jones,
        bounds=(-5.0, 5.0),
        dim=("scalable", 6, 3),
        props="C D NS SC M",
        optima=[
            om(
                -0.25,
                (0.0, 0.0, 0.0, 1.122462048309373, 0.0, 0.0),
                VERIFIED,
                tol=1e-9,
                dim=6,
                note="two atoms at the pair-equilibrium distance 2^(1/6)",
            )
        ],
    ),
    entry(
        "leon",
        _leon,
        bounds=(-1.2, 1.2),
        dim=2,
        props="C D NS NSC U",
        optima=[om(0.0, (1.0, 1.0), VERIFIED, tol=1e-9)],
        notes=(
            "prints the two-dimensional rosenbrock body and names it as such; registered separately",
            "no range is published; the conventional [-1.2, 1.2] box is used",
        ),
    ),
    entry(
        "levy",
        _levy_core,
        bounds=(-10.0, 10.0),
        dim=("scalable", 1),
        props="C D NS SC M",
        optima=[om(0.0, ("all", 1.0), BOTH, tol=1e-9)],
        notes=("the printed bracketing repeats the tail term inside the sum; the standard single tail is used",),
    ),
    entry(
        "levy-n3",
        _levy_core,
        bounds=(-10.0, 10.0),
        dim=("scalable", 1),
        props="C D NS SC M",
        optima=[om(0.0, ("all", 1.0), BOTH, tol=1e-9)],
        notes=("printed identically to levy; registered as a duplicate on purpose",),
    ),
    entry(
        "levy-n5",
        _levy_n5,
        bounds=(-10.0, 10.0),
        dim=2,
        props="C D NS NSC M",
        optima=[om(-176.1375, (-1.3068, -1.4248), BOTH, tol=0.18)],
        notes=("printed cosine phases garbled; the canonical shubert-style phases are used",),
    ),
    entry(
        "levy-n8",
        _levy_n8,
        bounds=(-10.0, 10.0),
        dim=("scalable", 1),
        props="C D NS SC M",
        optima=[om(0.0, ("all", 1.0), VERIFIED, tol=1e-9)],
    ),
    entry(
        "levy-n13",
        _levy_n13,
        bounds=(-10.0, 10.0),
        dim=2,
        props="C D NS NSC M",
        optima=[om(0.0, (1.0, 1.0), BOTH, tol=1e-9)],
        tier=1,
    ),
    entry(
        "levy-and-gomez",
        None,
        bounds=(-3.0, 3.0),
        dim=2,
        props="C D NS NSC M",
        optima=[om(-1.03162, (0.08984, -0.71265), PAPER_CLAIMED)],
        tier=3,
        tier3_reason="constrained formulation (sine inequality on the domain); constrained optimization is out of scope",
    ),
    entry(
        "matyas",
        _matyas,
        bounds=(-10.0, 10.0),
        dim=2,
        props="C D NS NSC M",
        optima=[om(0.0, (0.0, 0.0), BOTH, tol=1e-9)],
        tier=1,
    ),
    entry(
        "mccormick",
        _mccormick,
        bounds=per_coord_bounds((-1.5, 4.0), (-3.0, 4.0)),
        dim=2,
        props="C D NS NSC M",
        optima=[om(-1.9132, (-0.54719, -1.54719), BOTH, tol=1e-3)],
    ),
    entry(
        "mccormick-with-noise",
        _mccormick_with_noise,
        bounds=per_coord_bounds((-1.5, 4.0), (-3.0, 4.0)),
        dim=2,
        props="C D NS NSC M ST",
        optima=[om(-1.9132, (-0.5471, -1.5471), PAPER_CLAIMED, note="expectation only; the output carries U(-1,1) noise")],
    ),
    entry(
        "meyer",
        _meyer,
        bounds=per_coord_bounds((1e-4, 1.0), (1.0, 10000.0), (1.0, 1000.0)),
        dim=3,
        props="C D NS NSC M",
        constants="meyer",
        optima=[
            om(87.9458, (0.02, 4000.0, 250.0), PAPER_CLAIMED, note="stated point is far from the fit optimum"),
            om(87.945855, (0.0056096369, 6181.3462891, 345.2236328), VERIFIED, tol=1e-3),
        ],
        notes=(
            "printed residual lacks the least-squares sum; the canonical sixteen-point fit is used",
            "no range is published; the box is chosen to contain the fit optimum",
        ),
    ),
    entry(
        "michalewicz",
        _michalewicz,
        bounds=(0.0, PI),
        dim=("scalable", 1),
        props="C D S SC M",
        params={"m": 10},
        optima=[
            om(-1.8013, (2.202906, 1.570796), BOTH, tol=1e-3, dim=2, note="value published; minimizer standard"),
            om(-4.6876, None, PAPER_CLAIMED, dim=5),
            om(-9.6601, None, PAPER_CLAIMED, dim=10),
        ],
        tier=1,
    ),
    entry(
        "michalewicz-n2",
        _michalewicz_n2,
        bounds=(0.0, PI),
        dim=2,
        props="C D S NSC M",
    ),
    entry(
        "michalewicz-with-noise",
        _michalewicz_with_noise,
        bounds=(0.0, PI),
        dim=("scalable", 1),
        props="C D S SC M ST",
    ),
    entry(
        "miele-cantrell",
        _miele_cantrell,
        bounds=(-1.0, 1.0),
        dim=4,
        props="C D NS NSC M",
        optima=[om(0.0, (0.0, 1.0, 1.0, 1.0), BOTH, tol=1e-9)],
    ),
    entry(
        "mishra-n1",
        _mishra_n1,
        aliases=("mishra",),
        bounds=(0.0, 1.0),
        dim=("scalable", 1),
        props="C D NS SC M",
        optima=[om(2.0, ("all", 1.0), VERIFIED, tol=1e-9)],
    ),
    entry(
        "mishra-n2",
        _mishra_n2,
        bounds=(0.0, 1.0),
        dim=("scalable", 1),
        props="C D NS NSC M",
        optima=[om(2.0, ("all", 1.0), BOTH, tol=1e-9)],
    ),
    entry(
        "mishra-n3",
        _mishra_n3,
        bounds=(-10.0, 10.0),
        dim=2,
        props="C D NS NSC M",
        optima=[
            om(-0.1846, (-10.0, -10.0), PAPER_CLAIMED, note="evaluates to about -0.13 there"),
            om(-0.19992971, ("all", -9.996486610856323), VERIFIED, tol=1e-6, dim=2, note="on the cos zero circle r = 4.5 pi"),
        ],
        notes=("printed with the linear term under the root; the standard outside placement keeps it real",),
    ),
    entry(
        "mishra-n4",
        _mishra_n4,
        bounds=(-10.0, 10.0),
        dim=2,
        props="C D NS NSC M",
        optima=[
            om(-0.1994, (-10.0, -10.0), PAPER_CLAIMED, note="evaluates to about +0.80 there"),
            om(-0.17771530, ("all", -8.885765876316732), VERIFIED, tol=1e-6, dim=2, note="on the sin zero circle r = 4 pi"),
        ],
        notes=("printed with the linear term under the root; the standard outside placement keeps it real",),
    ),
    entry(
        "mishra-n5",
        _mishra_n5,
        bounds=(-10.0, 10.0),
        dim=2,
        props="C D NS NSC M",
        optima=[
            om(
                -1.01982,
                (-1.986, -10.0),
                PAPER_CLAIMED,
                note="unreachable: the squared bracket bounds f below by 0.01(x0 + x1) >= -0.2",
            )
        ],
    ),
    entry(
        "mishra-n6",
        _mishra_n6,
        bounds=(-10.0, 10.0),
        dim=2,
        props="C D NS NSC M",
        optima=[om(-2.283, (2.886, 1.823), BOTH, tol=3e-3)],
        notes=(
            "published sign of the cosine block and the regularizer garbled; the canonical "
            "-log form with 0.1((x-1)^2 + (y-1)^2) is used",
        ),
    ),
    entry(
        "mishra-n7",
        _mishra_n7,
        bounds=(-10.0, 10.0),
        dim=("scalable", 1),
        props="C D NS NSC M",
        optima=[om(0.0, ("all", 2.0), BOTH, tol=1e-9, dim=2, note="any point with some x_i = n! attains 0")],
    ),
    entry(
        "mishra-n8",
        _mishra_n8,
        aliases=("decanomial",),
        bounds=(-10.0, 10.0),
        dim=2,
        props="C D NS NSC M",
        optima=[
            om(0.0, (-3.0, 2.0), PAPER_CLAIMED, note="published coordinates are swapped"),
            om(0.0, (2.0, -3.0), VERIFIED, tol=1e-9),
        ],
        notes=(
            "two printed polynomial coefficients (13344, 2624) corrected to the factored "
            "decanomial (x-2)^10 values (13440, 1024)",
        ),
    ),
    entry(
        "mishra-n9",
        _mishra_n9,
        bounds=(-10.0, 10.0),
        dim=3,
        props="C D NS NSC M",
        optima=[om(0.0, (1.0, 2.0, 3.0), PAPER_CLAIMED, note="does not vanish under the printed coefficients")],
    ),
    entry(
        "mishra-n10",
        _mishra_n10,
        bounds=(-10.0, 10.0),
        dim=2,
        props="C D NS SC M",
        optima=[om(0.0, ("all", 1.0), BOTH, tol=1e-9, note="any same-sign pair attains 0")],
    ),
    entry(
        "mishra-n11",
        _mishra_n11,
        aliases=("am-gm",),
        bounds=(-10.0, 10.0),
        dim=("scalable", 1),
        props="C D NS NSC M",
        optima=[
            om(2.0, None, PAPER_CLAIMED, note="the AM-GM gap vanishes at any equal-magnitude point; 2 is not attained as a minimum"),
            om(0.0, ("all", 1.0), VERIFIED, tol=1e-9),
        ],
    ),
    entry(
        "mishras-bird",
        _mishras_bird,
        bounds=(-10.0, 10.0),
        dim=2,
        props="C D NS SC M",
        optima=[
            om(0.0, (-3.1302, -1.5821), PAPER_CLAIMED, note="published value; the point actually gives about -106.76"),
            om(-106.7645, (-3.1302468, -1.5821422), VERIFIED, tol=1e-3),
        ],
    ),
    entry(
        "muller-brown",
        _muller_brown,
        bounds=per_coord_bounds((-1.5, 1.0), (-0.5, 2.5)),
        dim=2,
        props="C D NS NSC M",
        constants="muller-brown",
        optima=[om(-146.6995, (-0.5528, 1.4417), BOTH, tol=0.15)],
    ),
]
