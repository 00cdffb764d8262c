"""Catalog definitions, names N through R."""

import numpy as np

from ..errors import DomainError
from .constants import POWER_SUM_B
from .model import (
    BOTH,
    PAPER_CLAIMED,
    VERIFIED,
    dim_power_bounds,
    entry,
    om,
    per_coord_bounds,
    require,
)

E = np.e
PI = np.pi


def _parsopoulos(x):
    return float(np.cos(x[0]) ** 2 + np.sin(x[1]) ** 2)


def _pathological(x):
    a, b = x[:-1], x[1:]
    num = np.sin(np.sqrt(100.0 * a**2 + b**2)) ** 2 - 0.5
    den = 0.001 * (a**2 - 2.0 * a * b + b**2) ** 2 + 1.0
    return float(np.sum(0.5 + num / den))


def _paviani(x):
    require((x > 2.0) & (x < 10.0), "paviani", "log outside (2, 10)")
    return float(
        np.sum(np.log(x - 2.0) ** 2 + np.log(10.0 - x) ** 2) - np.prod(x) ** 0.2
    )


def _pen_holder(x):
    inner = abs(
        np.cos(x[0]) * np.cos(x[1]) * np.exp(abs(1.0 - np.sqrt(x[0] ** 2 + x[1] ** 2) / PI))
    )
    if inner == 0.0:
        return 0.0
    return float(-np.exp(-1.0 / inner))


def _penalty_u(x, a, k, m):
    return np.where(
        x > a, k * (x - a) ** m, np.where(x < -a, k * (-x - a) ** m, 0.0)
    )


def _penalty_n1(x):
    n = x.size
    y = 1.0 + (x + 1.0) / 4.0
    head = 10.0 * np.sin(PI * y[0]) ** 2
    mid = np.sum((y[:-1] - 1.0) ** 2 * (1.0 + 10.0 * np.sin(PI * y[1:]) ** 2))
    tail = (y[-1] - 1.0) ** 2
    return float(PI / n * (head + mid + tail) + np.sum(_penalty_u(x, 10.0, 100.0, 4.0)))


def _penalty_n2(x):
    head = np.sin(3.0 * PI * x[0]) ** 3
    mid = np.sum((x[:-1] - 1.0) ** 2 * (1.0 + np.sin(3.0 * PI * x[1:]) ** 3))
    tail = (x[-1] - 1.0) ** 2 * (1.0 + np.sin(2.0 * PI * x[-1]) ** 2)
    return float(0.1 * (head + mid + tail) + np.sum(_penalty_u(x, 5.0, 100.0, 4.0)))


def _perez_reche(x):
    return float(np.sin(x[0] + x[1]) + np.sin(x[0]) * np.cos(x[1]))


def _periodic(x):
    return float(
        -0.1 * np.exp(-x[0] ** 2 - x[1] ** 2)
        + np.sin(x[0]) ** 2
        + np.sin(x[1]) ** 2
        + 1.0
    )


def _perm(x, beta=0.5):
    n = x.size
    i = np.arange(1.0, n + 1.0)
    total = 0.0
    for k in range(1, n + 1):
        total += float(np.sum((i**k + beta) * ((x / i) ** k - 1.0))) ** 2
    return float(total)


def _perm_n1(x):
    return float(
        6.25 * (x[0] ** 3 * x[1] + 0.6 * x[0] ** 2 * x[1] + 0.2 * x[0] * x[1] + 0.6) ** 2
        + 6.25
        * (x[0] ** 3 * x[1] ** 2 + 0.6 * x[0] ** 2 * x[1] ** 2 + 0.2 * x[0] * x[1] ** 2 + 0.6) ** 2
        + 6.25 * (x[0] ** 3 + 0.6 * x[0] ** 2 + 0.2 * x[0] + 0.6) ** 2
    )


def _perm_0_d_beta(x, beta=10.0):
    n = x.size
    j = np.arange(1.0, n + 1.0)
    total = 0.0
    for i in range(1, n + 1):
        total += float(np.sum((j + beta) * (x**i - 1.0 / j**i))) ** 2
    return float(total)


def _pinter_cyclic(x):
    prev = np.roll(x, 1)
    nxt = np.roll(x, -1)
    return prev, nxt


def _pinter_n1(x):
    i = np.arange(1.0, x.size + 1.0)
    prev, nxt = _pinter_cyclic(x)
    f1 = np.sum(i * x * x)
    f2 = np.sum((prev + 5.0 * np.sin(x) + nxt**2) ** 2)
    f3 = np.sum(np.log(1.0 + i * (np.sin(prev) ** 2 + 2.0 * x + 3.0 * nxt) ** 2))
    return float(f1 + f2 + f3)


def _pinter_n2(x):
    i = np.arange(1.0, x.size + 1.0)
    prev, nxt = _pinter_cyclic(x)
    f1 = np.sum(i * x * x)
    f2 = np.sum(i * np.sin(np.sin(nxt) - np.sin(x)) ** 2)
    f3 = np.sum(i * np.log(1.0 + i * (prev**2 - 2.0 * x + 3.0 * nxt - np.cos(x) + 1.0) ** 2))
    return float(f1 + f2 + f3)


def _plateau(x):
    return float(30.0 + np.sum(np.abs(x)))


def _powell(x):
    a = x[0::4]
    b = x[1::4]
    c = x[2::4]
    d = x[3::4]
    return float(
        np.sum((a + 10.0 * b) ** 2 + 5.0 * (c - d) ** 2 + (b - 2.0 * c) ** 4 + 10.0 * (a - d) ** 4)
    )


def _powell_singular(x):
    return float(
        (x[0] + 10.0 * x[1]) ** 2
        + 5.0 * (x[2] - x[3]) ** 2
        + (x[1] - 2.0 * x[2]) ** 4
        + 10.0 * (x[0] - x[3]) ** 4
    )


def _powells_badly_scaled(x):
    return float(
        (1e4 * x[0] * x[1] - 1.0) ** 2 + (np.exp(-x[0]) + np.exp(-x[1]) - 1.0001) ** 2
    )


def _fletcher_powell_helical_valley(x):
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.float64(x[1]) / np.float64(x[0])
    if np.isnan(ratio):
        raise DomainError("fletcher-powell-helical-valley: angle undefined at the z-axis")
    two_pi_theta = np.arctan(ratio) if x[0] >= 0.0 else PI + np.arctan(ratio)
    theta = two_pi_theta / (2.0 * PI)
    r = np.sqrt(x[0] ** 2 + x[1] ** 2)
    return float(100.0 * ((x[2] - 100.0 * theta) ** 2 + (r - 1.0) ** 2) + x[2] ** 2)


def _powell_sum(x):
    i = np.arange(1, x.size + 1)
    return float(np.sum(np.abs(x) ** (i + 1)))


def _power_sum(x):
    i = np.arange(1, 5)
    sums = np.array([np.sum(x**k) for k in i])
    return float(np.sum((sums - POWER_SUM_B) ** 2))


def _price_n1(x):
    return float((abs(x[0]) - 5.0) ** 2 + (abs(x[1]) - 5.0) ** 2)


def _price_n3(x):
    return float(
        100.0 * (x[1] - x[0] ** 2) ** 2 + (6.4 * (x[1] - 0.5) ** 2 - x[0] - 0.6) ** 2
    )


def _price_n4(x):
    return float(
        (2.0 * x[0] ** 3 * x[1] - x[1] ** 3) ** 2 + (6.0 * x[0] - x[1] ** 2 + x[1]) ** 2
    )


def _qing(x):
    i = np.arange(1.0, x.size + 1.0)
    return float(np.sum((x * x - i) ** 2))


def _qing_variant(x):
    return float((x[0] ** 2 - 1.0) ** 2 + (x[1] ** 2 - 2.0) ** 2)


def _qing_n2(x):
    return float(
        np.sin(x[0]) ** 2
        + np.sin(x[1]) ** 2
        - np.cos(np.sqrt(2.0) * x[1] / 2.0) * np.cos(x[0])
        + x[0] ** 2 / 4000.0
        + x[1] ** 2 / 4000.0
        + 1.0
    )


def _quadratic(x):
    return float(
        128.08 * x[0] ** 2
        + 203.64 * x[1] ** 2
        + 182.25 * x[0] * x[1]
        - 138.08 * x[0]
        - 232.92 * x[1]
        - 3803.84
    )


def _quartic(x):
    i = np.arange(1, x.size + 1)
    return float(np.sum(i * x**4))


def _quartic_variant(x, rng):
    return float(_quartic(x) + rng.uniform(0.0, 1.0))


def _quintic(x):
    return float(
        np.sum(np.abs(x**5 - 3.0 * x**4 + 4.0 * x**3 + 2.0 * x**2 - 10.0 * x - 4.0))
    )


def _rana(x):
    a, b = x[:-1], x[1:]
    t1 = np.sqrt(np.abs(b + a + 1.0))
    t2 = np.sqrt(np.abs(b - a + 1.0))
    return float(
        np.sum((b + 1.0) * np.sin(t1) * np.cos(t2) + a * np.sin(t2) * np.cos(t1))
    )


def _rastrigin(x):
    return float(10.0 * x.size + np.sum(x * x - 10.0 * np.cos(2.0 * PI * x)))


def _rastrigin_modified(x):
    return float(
        -10.0 * np.cos(2.0 * PI * x[0])
        - 10.0 * np.cos(2.0 * PI * x[1])
        + x[0] ** 2
        + x[1] ** 2
        + 20.0
    )


def _rayleigh(x):
    return float(np.sqrt(x[0] ** 2 + x[1] ** 2) - np.exp(-x[0] ** 2 - x[1] ** 2))


def _ridge(x):
    return float(x[0] ** 2 + 0.1 * x[1] ** 2)


def _ripple_envelope(x):
    return np.exp(-2.0 * np.log(2.0) * ((x - 0.1) / 0.8) ** 2)


def _ripple(x):
    return float(
        np.sum(
            -_ripple_envelope(x)
            * (np.sin(5.0 * PI * x) ** 6 + 0.1 * np.cos(500.0 * PI * x) ** 2)
        )
    )


def _ripple_n25(x):
    return float(np.sum(-_ripple_envelope(x) * np.sin(5.0 * PI * x) ** 6))


def _rosenbrock(x):
    return float(np.sum(100.0 * (x[1:] - x[:-1] ** 2) ** 2 + (x[:-1] - 1.0) ** 2))


def _rosenbrock_modified(x):
    return float(
        74.0
        + 100.0 * (x[1] - x[0] ** 2) ** 2
        + (1.0 - x[0]) ** 2
        - 400.0 * np.exp(-((x[0] + 1.0) ** 2 + (x[1] + 1.0) ** 2) / 0.1)
    )


def _rosenbrock_with_sine(x):
    return float(
        100.0 * (x[1] - x[0] ** 2) ** 2
        + (1.0 - x[0]) ** 2
        + np.sin(2.0 * PI * x[0])
        + np.sin(2.0 * PI * x[1])
    )


def _rotated_ellipse(x):
    return float(7.0 * x[0] ** 2 - 6.0 * np.sqrt(3.0) * x[0] * x[1] + 13.0 * x[1] ** 2)


def _rotated_ellipse_n2(x):
    return float(x[0] ** 2 - x[0] * x[1] + x[1] ** 2)


def _rotated_hyper_ellipsoid(x):
    return float(np.sum(np.cumsum(x * x)))


def _rump(x):
    require(x[1] != 0.0, "rump", "division by zero")
    return float(
        (333.75 - x[0] ** 2) * x[1] ** 6
        + (11.0 * x[0] ** 2 * x[1] ** 2 - 121.0 * x[1] ** 4 - 2.0) * x[0] ** 2
        + x[0] / (2.0 * x[1])
        + 5.5 * x[1] ** 8
    )


DEFS = [
    entry(
        "parsopoulos",
        _parsopoulos,
        bounds=per_coord_bounds((-11.0, 11.0), (-5.0, 5.0)),
        dim=2,
        props="C D NS NSC M",
        optima=[om(0.0, (PI / 2.0, PI), BOTH, tol=1e-9, note="minima at (pi/2 + k pi, l pi)")],
        notes=("printed body squares the arguments instead of the trigonometric values; the canonical form is used",),
    ),
    entry(
        "pathological",
        _pathological,
        bounds=(-100.0, 100.0),
        dim=("scalable", 2),
        props="C D NS NSC M",
        optima=[
            om(-1.9960, None, PAPER_CLAIMED, note="unreachable; each summand is non-negative"),
            om(0.0, ("all", 0.0), VERIFIED, tol=1e-9),
        ],
    ),
    entry(
        "paviani",
        _paviani,
        bounds=(2.001, 9.999),
        dim=10,
        props="C D NS SC M",
        optima=[om(-45.778, ("all", 9.350266), BOTH, tol=0.046)],
    ),
    entry(
        "pen-holder",
        _pen_holder,
        bounds=(-11.0, 11.0),
        dim=2,
        props="C D NS NSC M",
        optima=[om(-0.9635, (9.64616, 9.64616), BOTH, tol=1e-3, note="attained at all four sign combinations")],
        notes=("published exponent misses the inner negative sign; the canonical -exp(-1/|...|) is used",),
    ),
    entry(
        "penalty-n1",
        _penalty_n1,
        bounds=(-50.0, 50.0),
        dim=("scalable", 1),
        props="C D NS SC M",
        optima=[
            om(-1.0, ("all", 0.0), PAPER_CLAIMED, note="stated claim; the function is positive at 0"),
            om(0.0, ("all", -1.0), VERIFIED, tol=1e-9),
        ],
        notes=("printed scale pi/30 hard-codes n = 30; the canonical pi/n is used",),
    ),
    entry(
        "penalty-n2",
        _penalty_n2,
        bounds=(-50.0, 50.0),
        dim=("scalable", 1),
        props="C D NS SC M",
        optima=[
            om(1.0, None, PAPER_CLAIMED, note="the all-ones point evaluates to 0; small negative values exist"),
        ],
        notes=("the printed cubed sines (vs the usual squares) are kept as printed",),
    ),
    entry(
        "perez-reche",
        _perez_reche,
        bounds=(-2.0, 2.0),
        dim=2,
        props="C D NS NSC M",
    ),
    entry(
        "periodic",
        _periodic,
        bounds=(-10.0, 10.0),
        dim=2,
        props="C D NS SC M",
        optima=[om(0.9, (0.0, 0.0), VERIFIED, tol=1e-9)],
    ),
    entry(
        "perm",
        _perm,
        bounds=dim_power_bounds(1.0, 1.0),
        dim=("scalable", 1),
        props="C D NS SC U",
        params={"beta": 0.5},
        optima=[om(0.0, (1.0, 2.0), BOTH, tol=1e-9, dim=2, note="minimizer (1, 2, ..., d) in general")],
        notes=(
            "printed squares each summand and omits the 1/i normalization, which misses "
            "the stated minimizer; the canonical inner-sum form with beta = 0.5 is used",
        ),
    ),
    entry(
        "perm-n1",
        _perm_n1,
        bounds=(-2.0, 2.0),
        dim=2,
        props="C D NS NSC U",
    ),
    entry(
        "perm-0-d-beta",
        _perm_0_d_beta,
        bounds=dim_power_bounds(1.0, 1.0),
        dim=("scalable", 1),
        props="C D NS SC U",
        params={"beta": 10.0},
        optima=[
            om(
                0.0,
                (1.0, 0.5),
                BOTH,
                tol=1e-9,
                dim=2,
                note="minimizer (1, 1/2, ..., 1/d); the published (1, 2, ..., d) belongs to the sibling perm function",
            )
        ],
        notes=("beta is never given a value; the customary 10 is used",),
    ),
    entry(
        "pinter-n1",
        _pinter_n1,
        bounds=(-10.0, 10.0),
        dim=("scalable", 1),
        props="C D NS SC M",
        optima=[om(0.0, ("all", 0.0), BOTH, tol=1e-9)],
        notes=(
            "edge indices wrap cyclically",
            "the printed per-coordinate bounds table is inconsistent (several rows have a_i > b_i); the stated [-10, 10] box is used",
        ),
    ),
    entry(
        "pinter-n2",
        _pinter_n2,
        bounds=(-10.0, 10.0),
        dim=("scalable", 1),
        props="C D NS SC M",
        optima=[om(0.0, ("all", 0.0), BOTH, tol=1e-9)],
        notes=("free summation indices read as cyclic sums over all coordinates",),
    ),
    entry(
        "plateau",
        _plateau,
        bounds=(-5.12, 5.12),
        dim=("scalable", 1),
        props="C ND S SC U",
        optima=[om(30.0, ("all", 0.0), BOTH, tol=1e-9)],
        notes=("the usual plateau floors each term; the printed continuous sum stands",),
    ),
    entry(
        "powell",
        _powell,
        bounds=(-4.0, 5.0),
        dim=("scalable", 4, 4),
        props="C D NS SC U",
        optima=[
            om(0.0, (3.0, -1.0, 0.0, 1.0), PAPER_CLAIMED, note="the customary starting point, not the minimizer"),
            om(0.0, ("all", 0.0), VERIFIED, tol=1e-9),
        ],
    ),
    entry(
        "powell-singular",
        _powell_singular,
        aliases=("powells-quartic",),
        bounds=(-10.0, 10.0),
        dim=4,
        props="C D NS SC U",
        optima=[
            om(0.0, (3.0, -1.0, 0.0, 1.0), PAPER_CLAIMED, note="the customary starting point, not the minimizer"),
            om(0.0, ("all", 0.0), VERIFIED, tol=1e-9),
        ],
    ),
    entry(
        "powells-badly-scaled",
        _powells_badly_scaled,
        bounds=(-10.0, 10.0),
        dim=2,
        props="C D NS NSC U",
        optima=[om(0.0, (1.098e-5, 9.106), BOTH, tol=1e-6)],
    ),
    entry(
        "fletcher-powell-helical-valley",
        _fletcher_powell_helical_valley,
        bounds=(-100.0, 100.0),
        dim=3,
        props="C D NS NSC U",
        optima=[om(0.0, (1.0, 0.0, 0.0), BOTH, tol=1e-9)],
    ),
    entry(
        "powell-sum",
        _powell_sum,
        bounds=(-1.0, 1.0),
        dim=("scalable", 1),
        props="C D S SC M",
        optima=[om(0.0, ("all", 0.0), BOTH, tol=1e-9)],
    ),
    entry(
        "power-sum",
        _power_sum,
        bounds=(0.0, 4.0),
        dim=4,
        props="C D NS NSC U",
        constants="power-sum",
        optima=[om(0.0, (1.0, 2.0, 2.0, 3.0), BOTH, tol=1e-9)],
    ),
    entry(
        "price-n1",
        _price_n1,
        aliases=("becker-lago",),
        bounds=(-10.0, 10.0),
        dim=2,
        props="C ND S NSC M",
        optima=[om(0.0, (5.0, 5.0), BOTH, tol=1e-9, note="four sign-mirrored minimizers")],
    ),
    entry(
        "price-n2",
        _periodic,
        bounds=(-10.0, 0.0),
        dim=2,
        props="C D NS NSC M",
        optima=[
            om(0.0, None, PAPER_CLAIMED, note='published point "(1, 2, 2, 3)" has four coordinates; dropped'),
            om(0.9, (0.0, 0.0), VERIFIED, tol=1e-9, note="on the corner of the published box"),
        ],
        notes=("identical body to periodic; registered as printed",),
    ),
    entry(
        "price-n3",
        _price_n3,
        aliases=("modified-rosenbrock", "price-rosenbrock"),
        bounds=(-5.0, 5.0),
        dim=2,
        props="C D NS NSC M",
        optima=[
            om(0.0, (1.0, 1.0), BOTH, tol=1e-9),
            om(0.0, (0.3413, 0.1164), BOTH, tol=1e-5),
        ],
        notes=("the 6.4 factor belongs inside the second residual, as the stated roots require",),
    ),
    entry(
        "price-n4",
        _price_n4,
        bounds=(-500.0, 500.0),
        dim=2,
        props="C D S SC M",
        optima=[
            om(0.0, (0.0, 0.0), BOTH, tol=1e-9),
            om(0.0, (2.0, 4.0), BOTH, tol=1e-9),
            om(0.0, (1.4643, 2.5060), PAPER_CLAIMED, note="sign of the second coordinate garbled"),
            om(0.0, (1.4643, -2.5060), VERIFIED, tol=1e-4),
        ],
    ),
    entry(
        "qing",
        _qing,
        bounds=(-500.0, 500.0),
        dim=("scalable", 1),
        props="C D S SC M",
        optima=[
            om(0.0, ("all", 0.0), PAPER_CLAIMED, note="f(0) = sum i^2; the minimizers are x_i = +/-sqrt(i)"),
            om(0.0, (1.0, 1.4142135623730951), VERIFIED, tol=1e-9, dim=2),
        ],
    ),
    entry(
        "qing-variant",
        _qing_variant,
        bounds=(-500.0, 500.0),
        dim=2,
        props="C D S NSC M",
        optima=[om(0.0, (1.0, 1.4142135623730951), BOTH, tol=1e-9, note="only the value is published")],
    ),
    entry(
        "qing-n2",
        _qing_n2,
        bounds=(-500.0, 500.0),
        dim=2,
        props="C D NS NSC M",
        optima=[om(0.0, (0.0, 0.0), BOTH, tol=1e-9)],
    ),
    entry(
        "quadratic",
        _quadratic,
        bounds=(-10.0, 10.0),
        dim=2,
        props="C D NS NSC M",
        optima=[om(-3873.7241, (0.1938, 0.4851), BOTH, tol=3.9)],
        notes=(
            "printed coefficients (+138.082, 128.018) miss the stated minimum; the "
            "canonical signs and 128.08 are used",
        ),
    ),
    entry(
        "quartic",
        _quartic,
        bounds=(-1.28, 1.28),
        dim=("scalable", 1),
        props="C D S SC U",
        optima=[om(0.0, ("all", 0.0), BOTH, tol=1e-9)],
        notes=("the printed two-dimensional reduction adds x/2 terms inconsistent with the general form; the general form stands",),
    ),
    entry(
        "quartic-variant",
        _quartic_variant,
        bounds=(-1.28, 1.28),
        dim=("scalable", 1),
        props="C D S SC ST",
        optima=[om(0.0, ("all", 0.0), PAPER_CLAIMED, note="ideal noise-free value; the output carries U(0,1) noise")],
    ),
    entry(
        "quintic",
        _quintic,
        bounds=(-10.0, 10.0),
        dim=("scalable", 1),
        props="C D S NSC M",
        optima=[
            om(0.0, ("all", -1.0), BOTH, tol=1e-9),
            om(0.0, ("all", 2.0), VERIFIED, tol=1e-9),
        ],
        notes=("the second printed polynomial line (without absolute values) is not registered",),
    ),
    entry(
        "rana",
        _rana,
        bounds=(-500.0, 500.0),
        dim=("scalable", 2),
        props="C D NS SC M",
        optima=[
            om(-928.5478, ("all", -500.0), BOTH, tol=1.0, dim=3, note="the published value matches the three-dimensional instance"),
            om(-464.2740, ("all", -500.0), VERIFIED, tol=1e-2, dim=2),
        ],
    ),
    entry(
        "rastrigin",
        _rastrigin,
        bounds=(-5.12, 5.12),
        dim=("scalable", 1),
        props="C D S SC M",
        optima=[om(0.0, ("all", 0.0), BOTH, tol=1e-9)],
        tier=1,
        notes=(
            "described as non-separable in the prose; the sum is coordinate-separable and "
            "the standard label Separable is recorded",
        ),
    ),
    entry(
        "rastrigin-modified",
        _rastrigin_modified,
        aliases=("extended-rastrigin",),
        bounds=(-5.12, 5.12),
        dim=2,
        props="C D S NSC M",
        optima=[om(0.0, (0.0, 0.0), BOTH, tol=1e-9)],
    ),
    entry(
        "rayleigh",
        _rayleigh,
        bounds=(-5.0, 5.0),
        dim=2,
        props="C D NS NSC U",
        optima=[om(-1.0, (0.0, 0.0), VERIFIED, tol=1e-9)],
    ),
    entry(
        "ridge",
        _ridge,
        bounds=(-5.0, 5.0),
        dim=2,
        props="C D S NSC U",
        optima=[om(0.0, (0.0, 0.0), VERIFIED, tol=1e-9)],
    ),
    entry(
        "ripple",
        _ripple,
        bounds=(0.0, 1.0),
        dim=2,
        props="C D NS NSC M",
        optima=[om(-2.2, ("all", 0.1), BOTH, tol=1e-9)],
    ),
    entry(
        "ripple-n25",
        _ripple_n25,
        aliases=("ripple-25",),
        bounds=(0.0, 1.0),
        dim=2,
        props="C D NS NSC M",
        optima=[om(-2.0, ("all", 0.1), BOTH, tol=1e-9)],
    ),
    entry(
        "rosenbrock",
        _rosenbrock,
        aliases=("banana", "rosenbrock-valley", "fletcher"),
        bounds=(-5.0, 10.0),
        dim=("scalable", 2),
        props="C D NS SC U",
        optima=[om(0.0, ("all", 1.0), BOTH, tol=1e-9)],
        tier=1,
        notes=("alternative published ranges: [-5, 5] and [-2.048, 2.048]",),
    ),
    entry(
        "rosenbrock-modified",
        _rosenbrock_modified,
        bounds=(-5.0, 2.5),
        dim=2,
        props="C D NS NSC M",
        optima=[om(34.37, (-0.9, -0.95), BOTH, tol=0.05)],
    ),
    entry(
        "rosenbrock-with-sine",
        _rosenbrock_with_sine,
        bounds=(-10.0, 10.0),
        dim=2,
        props="C D NS NSC M",
        optima=[om(0.0, (1.0, 1.0), PAPER_CLAIMED, note="the sine terms pull the true minimum slightly away")],
    ),
    entry(
        "rotated-ellipse",
        _rotated_ellipse,
        bounds=(-500.0, 500.0),
        dim=2,
        props="C D NS NSC U",
        optima=[om(0.0, (0.0, 0.0), BOTH, tol=1e-9)],
    ),
    entry(
        "rotated-ellipse-n2",
        _rotated_ellipse_n2,
        bounds=(-500.0, 500.0),
        dim=2,
        props="C D NS NSC U",
        optima=[om(0.0, (0.0, 0.0), BOTH, tol=1e-9)],
    ),
    entry(
        "rotated-hyper-ellipsoid",
        _rotated_hyper_ellipsoid,
        bounds=(-65.536, 65.536),
        dim=("scalable", 1),
        props="C D NS SC U",
        optima=[om(0.0, ("all", 0.0), VERIFIED, tol=1e-9)],
        notes=("the printed outer sum stops at d-1, leaving the last coordinate unused; the full sum is used",),
    ),
    entry(
        "rump",
        _rump,
        bounds=(-500.0, 500.0),
        dim=2,
        props="C D NS NSC U",
        optima=[om(0.0, (0.0, 0.0), PAPER_CLAIMED, note="undefined at the stated point (division by x1)")],
    ),
]
