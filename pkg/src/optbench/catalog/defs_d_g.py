"""Catalog definitions, names D through G."""

import numpy as np

from ..core import PropertySet
from ..errors import DomainError
from .constants import DEJONG5_A, GAUSSIAN_Y
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


def _damavandi(x):
    require((x[0] != 2.0) & (x[1] != 2.0), "damavandi", "0/0 on the x = 2 lines")
    ratio = np.sin(PI * (x[0] - 2.0)) * np.sin(PI * (x[1] - 2.0)) / ((x[0] - 2.0) * (x[1] - 2.0))
    return float((1.0 - abs(ratio)) ** 5 * ((x[0] - 7.0) ** 2 + 2.0 * (x[1] - 7.0) ** 2 + 2.0))


def _damavandi_n2(x):
    require((x[0] != 2.0) & (x[1] != 2.0), "damavandi-n2", "0/0 on the x = 2 lines")
    ratio = np.sin(PI * (x[0] - 2.0)) * np.sin(PI * (x[1] - 2.0)) / (
        PI**2 * (x[0] - 2.0) * (x[1] - 2.0)
    )
    return float((1.0 - ratio) ** 2 * ((x[0] - 7.0) ** 2 + 2.0 * (x[1] - 7.0) ** 2 + 2.0))


def _de_jong_modified(x):
    return float(x[0] ** 2 + x[0] * x[1] + x[1] ** 2)


def _de_jong_n5(x):
    j = np.arange(1, 26)
    denom = j + (x[0] - DEJONG5_A[:, 0]) ** 6 + (x[1] - DEJONG5_A[:, 1]) ** 6
    return float(1.0 / (0.002 + np.sum(1.0 / denom)))


def _deb_n1(x):
    return float(-np.sum(np.sin(5.0 * PI * x) ** 6) / x.size)


def _deb_n3(x):
    require(x >= 0.0, "deb-n3", "fractional power of a negative coordinate")
    return float(np.sum(np.sin(PI * (5.0 * x**0.75 - 0.25)) ** 6) / x.size)


def _deb_n4(x):
    return float(
        -np.exp(0.5 * np.sin(PI * x[1] / 16.0) * np.cos(PI * x[0] / 12.0))
        + E
        + 20.0
        - 20.0 * np.exp(-0.2 * np.sqrt(0.06 * x[0] ** 2 + 0.015 * x[1] ** 6 + 1.0))
    )


def _deckkers_aarts(x):
    r2 = x[0] ** 2 + x[1] ** 2
    return float(1e-5 * r2**4 - r2**2 + 1e5 * x[0] ** 2 + x[1] ** 2)


def _deflected_corrugated_spring(x, alpha=5.0, K=5.0):
    s = np.sum((x - alpha) ** 2)
    return float(0.1 * s - np.cos(K * np.sqrt(s)))


def _devillers_glasser(x):
    return float(1.0 / (25.0 * x[0] ** 2 + 25.0 * x[1] ** 2 + 1.0))


def _dg_series(i):
    return 0.1 * (i - 1.0)


def _devillers_glasser_n1(x):
    t = _dg_series(np.arange(1.0, 25.0))
    y = 60.137 * 1.371**t * np.sin(3.112 * t + 1.761)
    require(x[1] > 0.0, "devillers-glasser-n1", "fractional power of a non-positive base")
    r = x[0] * x[1] ** t * np.sin(x[2] * t + x[3]) - y
    return float(np.sum(r * r))


def _devillers_glasser_n2(x):
    t = _dg_series(np.arange(1.0, 25.0))
    y = 53.81 * 1.27**t * np.tanh(3.012 * t + np.sin(2.13 * t)) * np.cos(t * np.exp(0.507))
    require(x[1] > 0.0, "devillers-glasser-n2", "fractional power of a non-positive base")
    r = x[0] * x[1] ** t * np.tanh(x[2] * t + np.sin(x[3] * t)) * np.cos(t * np.exp(x[4])) - y
    return float(np.sum(r * r))


def _discus(x):
    return float(1e6 * x[0] ** 2 + np.sum(x[1:] ** 2))


def _dixon_coles(x):
    return float(
        (x[0] - 1.0) ** 2
        + (-x[0] ** 2 + x[0]) ** 2
        + (x[1] + 1.0) ** 2
        + (x[1] ** 2 + x[1]) ** 2
    )


def _dixon_price(x):
    i = np.arange(2, x.size + 1)
    return float((x[0] - 1.0) ** 2 + np.sum(i * (2.0 * x[1:] ** 2 - x[:-1]) ** 2))


def _dixon_price_n2(x):
    return float(2.0 * (-x[0] + 2.0 * x[1] ** 2) ** 2 + (x[0] - 1.0) ** 2)


def _dixon_price_n4(x):
    return float(3.0 * (-x[0] + 2.0 * x[1] ** 2) ** 2 + (x[0] - 1.0) ** 2 + (x[1] - 1.0) ** 2)


def _dixon_price_n5(x):
    return float((-x[0] + 2.0 * x[1] ** 2) ** 2 + (x[0] - 1.0) ** 2)


def _dixon_price_rosenbrock(x):
    return float(np.sum(100.0 * (x[1:] - x[:-1] ** 2) ** 8 + (x[:-1] - 1.0) ** 8))


def _dolan(x):
    return float(
        (x[0] + 1.7 * x[1]) * np.sin(x[0])
        - 1.5 * x[2]
        - 0.1 * x[3] * np.cos(x[3] + x[4] - x[0])
        + 0.2 * x[4] ** 2
        - x[1]
        - 1.0
    )


def _drop_wave(x):
    r = np.sqrt(x[0] ** 2 + x[1] ** 2)
    return float((-1.0 + np.cos(12.0 * r)) / (0.5 * (x[0] ** 2 + 0.5 * x[1] ** 2) + 2.0))


def _drop_wave_n2(x):
    r = np.sqrt(x[0] ** 2 + x[1] ** 2)
    return float((-1.0 + np.cos(12.0 * r)) / (0.5 * x[0] ** 2 + 0.5 * x[1] ** 2 + 2.0))


def _easom(x):
    return float(
        -np.exp(-((x[0] - PI) ** 2) - (x[1] - PI) ** 2) * np.cos(x[0]) * np.cos(x[1])
    )


def _easom_with_noise(x):
    return _easom(x) + 0.5


def _egg_box(x):
    return float(-((np.cos(x[0] / 2.0) * np.cos(x[1] / 2.0) + 2.0) ** 5))


def _egg_crate(x):
    return float(25.0 * np.sin(x[0]) ** 2 + 25.0 * np.sin(x[1]) ** 2 + x[0] ** 2 + x[1] ** 2)


def _egg_holder(x):
    a, b = x[:-1], x[1:]
    return float(
        np.sum(
            -(b + 47.0) * np.sin(np.sqrt(np.abs(b + a / 2.0 + 47.0)))
            - a * np.sin(np.sqrt(np.abs(a - (b + 47.0))))
        )
    )


def _eggholder_with_noise(x):
    return _egg_holder(x) + 0.5


def _el_attar_vidyasagar_dutta(x):
    return float(
        (x[0] ** 2 + x[1] - 10.0) ** 2
        + (x[0] + x[1] ** 2 - 7.0) ** 2
        + (x[0] ** 2 + x[1] ** 3 - 1.0) ** 2
    )


def _elliptic(x):
    return float(1e6 * x[0] ** 2 + x[1] ** 2)


def _elliptic_n2(x):
    return float((x[1] ** 2 + 1.0) ** 2 + (x[0] ** 2 - 2.0 * x[0] + 3.0) ** 2)


def _exp_2(x):
    return float(
        np.sum(
            (
                np.exp(-x / 10.0)
                - 5.0 * np.exp(-x / 2.0)
                + 5.0 * np.exp(-x / 10.0)
                + 5.0 * np.exp(-x)
            )
            ** 2
        )
    )


def _exponential(x):
    return float(-np.exp(-0.5 * np.sum(x * x)))


def _exponential_noise(x):
    return float(x[0] ** 2 + x[1] ** 2 + 0.5)


def _flexus(x):
    r2 = x[0] ** 2 + x[1] ** 2
    return float(r2 * np.cos(np.sqrt(r2)) - 1.0)


def _flux(x):
    return float(
        (x[0] - x[1]) ** 2 + np.sin(x[0] + x[1]) - 1.5 * x[0] + 2.5 * x[1] + 1.0
    )


def _forrester(x):
    return float((6.0 * x[0] - 2.0) ** 2 * np.sin(12.0 * x[0] - 4.0))


def _forrester_2d(x):
    return float(
        (6.0 * x[0] - 2.0) ** 2 * np.sin(12.0 * x[0] - 4.0)
        + (6.0 * x[1] - 2.0) ** 2 * np.sin(12.0 * x[1] - 4.0)
    )


def _freudenstein_roth(x):
    return float(
        (((5.0 - x[1]) * x[1] - 2.0) * x[1] + x[0] - 13.0) ** 2
        + (((x[1] + 1.0) * x[1] - 14.0) * x[1] + x[0] - 29.0) ** 2
    )


_GAUSSIAN_Y15 = np.concatenate([GAUSSIAN_Y, GAUSSIAN_Y[-2::-1]])


def _gaussian(x):
    i = np.arange(1, 16)
    t = (8.0 - i) / 2.0
    r = x[0] * np.exp(-x[1] * (t - x[2]) ** 2 / 2.0) - _GAUSSIAN_Y15
    return float(np.sum(r * r))


def _gaussian_perturbation(x):
    return float(
        np.exp(-(6.0 * x[0] ** 2 + 0.8 * x[1] ** 2))
        + np.exp(-((3.0 - x[0]) ** 2 + (2.0 - x[1]) ** 2))
    )


def _gear(x):
    require(x[2] * x[3] != 0.0, "gear", "division by zero")
    return float((1.0 / 6.931 - x[0] * x[1] / (x[2] * x[3])) ** 2)


def _gear_2d(x):
    return float(1.0 / 6.931 - (x[0] * x[1]) ** 2)


def _gear_n2(x):
    require(x[0] * x[1] != 0.0, "gear-n2", "division by zero")
    return float((1.0 / 6.931 - 1.0 / (x[0] / 12.0 * x[1] / 16.0)) ** 2)


def _giunta(x):
    u = 16.0 * x / 15.0 - 1.0
    return float(0.6 + np.sum(np.sin(u) + np.sin(u) ** 2 + np.sin(4.0 * u) / 50.0))


def _goldstein_price(x):
    a = (2.0 * x[0] - 3.0 * x[1]) ** 2 * (
        12.0 * x[0] ** 2
        - 36.0 * x[0] * x[1]
        - 32.0 * x[0]
        + 27.0 * x[1] ** 2
        + 48.0 * x[1]
        + 18.0
    ) + 30.0
    b = (x[0] + x[1] + 1.0) ** 2 * (
        3.0 * x[0] ** 2
        + 6.0 * x[0] * x[1]
        - 14.0 * x[0]
        + 3.0 * x[1] ** 2
        - 14.0 * x[1]
        + 19.0
    ) + 1.0
    return float(a * b)


def _goldstein_price_with_noise(x):
    return _goldstein_price(x) + 0.5


def _gramacy_lee_1d(v):
    if v == 0.0:
        raise DomainError("gramacy-lee: division by zero at x = 0")
    return (v - 1.0) ** 4 + np.sin(10.0 * PI * v) / (2.0 * v)


def _gramacy_lee(x):
    return float(_gramacy_lee_1d(x[0]))


def _gramacy_lee_2d(x):
    return float(_gramacy_lee_1d(x[0]) + _gramacy_lee_1d(x[1]))


def _griewank(x):
    i = np.arange(1, x.size + 1)
    return float(np.sum(x * x) / 4000.0 - np.prod(np.cos(x / np.sqrt(i))) + 1.0)


def _gulf_research(x):
    require(x[0] != 0.0, "gulf-research", "division by zero")
    i = np.arange(1, 100)
    u = 25.0 + (-50.0 * np.log(0.01 * i)) ** (1.0 / 1.5)
    r = np.exp(-np.abs(u - x[1]) ** x[2] / x[0]) - 0.01 * i
    return float(np.sum(r * r))


def _gulf_research_development(x):
    return float(
        2.0
        * (np.exp(-((x[0] - 1.0) ** 2) - (x[1] + 1.0) ** 2) + 0.004)
        * (np.exp(-((x[0] + 1.0) ** 2) - (x[1] - 1.0) ** 2) + 0.004)
        * np.exp(-((x[0] - 2.0) ** 2) - x[1] ** 2)
    )


def _hansen(x):
    i = np.arange(0.0, 5.0)
    return float(
        np.sum((i + 1.0) * np.cos(i * x[0] + i + 1.0))
        * np.sum((i + 1.0) * np.cos((i + 2.0) * x[1] + i + 1.0))
    )


DEFS = [
    entry(
        "damavandi",
        _damavandi,
        bounds=(0.0, 14.0),
        dim=2,
        props="C D NS NSC M",
        notes=(
            "printed without the pi^2 normalization of the sinc product; registered as printed",
            "alternative published range: [-5, 5]",
        ),
    ),
    entry(
        "damavandi-n2",
        _damavandi_n2,
        bounds=(0.0, 14.0),
        dim=2,
        props="C D NS NSC M",
        notes=("no range is published; the damavandi box is reused",),
    ),
    entry(
        "de-jong-modified",
        _de_jong_modified,
        bounds=(-5.12, 5.12),
        dim=2,
        props="C D NS NSC U",
        optima=[om(0.0, (0.0, 0.0), VERIFIED, tol=1e-9)],
        notes=("no range is published; the classic [-5.12, 5.12] box is reused",),
    ),
    entry(
        "de-jong-n5",
        _de_jong_n5,
        aliases=("shekels-foxholes", "foxholes"),
        bounds=(-65.536, 65.536),
        dim=2,
        props="C D NS NSC M",
        constants="de-jong-n5",
        optima=[om(0.998004, (-32.0, -16.0), VERIFIED, tol=1e-3)],
        notes=(
            "published formula garbles the classic reciprocal-of-sums; the canonical "
            "foxholes form is used with the center grid exactly as printed",
        ),
    ),
    entry(
        "deb-n1",
        _deb_n1,
        bounds=(-1.0, 1.0),
        dim=("scalable", 1),
        props="C D S SC M",
        optima=[om(-1.0, ("all", 0.1), BOTH, tol=1e-9, note="minimized on the 0.1 + 0.4k grid")],
    ),
    entry(
        "deb-n3",
        _deb_n3,
        bounds=(0.0, 1.0),
        dim=("scalable", 1),
        props="C D S SC M",
        optima=[
            om(0.0, ("all", 0.0), PAPER_CLAIMED, note="evaluates to 0.125 per coordinate at 0"),
            om(0.0, ("all", 0.05 ** (4.0 / 3.0)), VERIFIED, tol=1e-9),
        ],
        notes=("printed without the leading minus of the usual form; the printed sum stands",),
    ),
    entry(
        "deb-n4",
        _deb_n4,
        bounds=(0.0, 1.0),
        dim=2,
        props="C D NS NSC M",
    ),
    entry(
        "deckkers-aarts",
        _deckkers_aarts,
        bounds=(-20.0, 20.0),
        dim=2,
        props="C D NS NSC M",
        optima=[
            om(-24777.0, (0.0, 15.0), BOTH, tol=25.0, note="rounded claim; the exact minimum is near (0, +/-14.945)"),
            om(-24776.5183, (0.0, 14.9451), VERIFIED, tol=1e-2),
        ],
    ),
    entry(
        "deflected-corrugated-spring",
        _deflected_corrugated_spring,
        bounds=(-5.0, 5.0),
        dim=("scalable", 1),
        props="C D NS SC M",
        params={"alpha": 5.0, "K": 5.0},
        optima=[om(-1.0, ("all", 5.0), BOTH, tol=1e-9)],
        notes=(
            "alpha defaults to 5 alongside K = 5; with that choice f(alpha, ..., alpha) = -1 "
            "exactly as published (the minimizer sits on the published box edge)",
        ),
    ),
    entry(
        "devillers-glasser",
        _devillers_glasser,
        bounds=(-5.0, 5.0),
        dim=2,
        props="C D NS NSC U",
        notes=("infimum 0 approached at infinity; the origin is the maximum",),
    ),
    entry(
        "devillers-glasser-n1",
        _devillers_glasser_n1,
        bounds=(-500.0, 500.0),
        dim=4,
        props="C D NS NSC M",
        optima=[
            om(0.0, (60.137, 1.371, 3.112, 1.761), BOTH, tol=1e-9, note="only the value is published; location from the target series")
        ],
        notes=("printed growth factor 1.371^i corrected to 1.371^{t_i}, which the zero residual requires",),
    ),
    entry(
        "devillers-glasser-n2",
        _devillers_glasser_n2,
        bounds=(1.0, 60.0),
        dim=5,
        props="C D NS NSC M",
        optima=[
            om(0.0, (53.81, 1.27, 3.012, 2.13, 0.507), BOTH, tol=1e-9, note="only the value is published; location from the target series")
        ],
        notes=("printed target series puts t_i inside the final exponential; the residual form fixes it as t_i e^{0.507}",),
    ),
    entry(
        "discus",
        _discus,
        bounds=(-100.0, 100.0),
        dim=("scalable", 1),
        props="C D NS SC U",
        optima=[om(0.0, ("all", 0.0), BOTH, tol=1e-9)],
        notes=(
            "simplified transforms: the oscillation map, rotation, and shift in the "
            "published definition are replaced by identities with x_opt = 0, f_opt = 0",
        ),
    ),
    entry(
        "dixon-coles",
        _dixon_coles,
        bounds=(-10.0, 10.0),
        dim=2,
        props="C D S NSC U",
        optima=[om(0.0, (1.0, -1.0), VERIFIED, tol=1e-9)],
    ),
    entry(
        "dixon-price",
        _dixon_price,
        bounds=(-10.0, 10.0),
        dim=("scalable", 2),
        props="C D NS SC U",
        optima=[
            om(0.0, ("all", 1.0), PAPER_CLAIMED, note="published minimizer; f(1,...,1) = n(n+1)/2 - 1"),
            om(0.0, (1.0, 0.7071067811865476), VERIFIED, tol=1e-9, dim=2, note="x_i = 2^{-(2^i - 2)/2^i}"),
        ],
        tier=1,
        notes=(
            "the published minimizer (1, ..., 1) does not zero the chained terms; the "
            "standard x_i = 2^{-(2^i - 2)/2^i} does and is recorded as verified",
        ),
    ),
    entry(
        "dixon-price-n2",
        _dixon_price_n2,
        bounds=(-10.0, 10.0),
        dim=2,
        props="C D NS NSC U",
        optima=[om(0.0, (1.0, 0.7071067811865476), VERIFIED, tol=1e-9)],
    ),
    entry(
        "dixon-price-n3",
        _dixon_price_n2,
        bounds=(-10.0, 10.0),
        dim=2,
        props="C D NS NSC U",
        optima=[om(0.0, (1.0, 0.7071067811865476), VERIFIED, tol=1e-9)],
        notes=("printed identically to dixon-price-n2; registered as a duplicate on purpose",),
    ),
    entry(
        "dixon-price-n4",
        _dixon_price_n4,
        bounds=(-10.0, 10.0),
        dim=2,
        props="C D NS NSC U",
    ),
    entry(
        "dixon-price-n5",
        _dixon_price_n5,
        bounds=(-10.0, 10.0),
        dim=2,
        props="C D NS NSC U",
        optima=[om(0.0, (1.0, 0.7071067811865476), BOTH, tol=1e-9, note="only the value is published")],
    ),
    entry(
        "dixon-price-rosenbrock",
        _dixon_price_rosenbrock,
        bounds=(-30.0, 30.0),
        dim=("scalable", 2),
        props="C D NS SC U",
        optima=[om(0.0, ("all", 1.0), VERIFIED, tol=1e-9)],
    ),
    entry(
        "dolan",
        _dolan,
        bounds=(-100.0, 100.0),
        dim=5,
        props="C D NS NSC M",
        optima=[
            om(
                -1.0,
                (8.3904, 4.8142, 7.3457, 68.8824, 3.8547),
                PAPER_CLAIMED,
                note="the linear -1.5 x_2 term makes far lower values reachable in the box",
            )
        ],
        notes=('secondary claim "(7.8102) with f = -703.72878" is not a usable point and is dropped',),
    ),
    entry(
        "drop-wave",
        _drop_wave,
        bounds=(-5.12, 5.12),
        dim=2,
        props="C D NS SC M",
        optima=[om(0.0, (0.0, 0.0), BOTH, tol=1e-9, note="published global-minimum claim; see discrepancy notes")],
        tier=1,
        notes=(
            "the published claim f(0) = 0 contradicts the formula itself, which is negative "
            "wherever cos(12r) < 1; the first cosine ring already reaches about -0.98",
        ),
    ),
    entry(
        "drop-wave-n2",
        _drop_wave_n2,
        bounds=(-5.12, 5.12),
        dim=2,
        props="C D NS NSC M",
    ),
    entry(
        "dynamic-deceptive-basin",
        None,
        bounds=(-5.0, 5.0),
        dim=("scalable", 2),
        props=PropertySet(
            continuous=True,
            differentiable=False,
            separable=False,
            scalable=True,
            modality="multimodal",
            stochastic=True,
            dynamic=True,
        ),
        params={"step_sigma": 0.05, "noise_sigma": 0.1},
        tier=1,
        notes=(
            "state parameters take one Gaussian random-walk step per evaluation, so the "
            "landscape drifts; no fixed optimum exists",
            "no range is published; [-5, 5] keeps the Gaussian basin non-degenerate",
        ),
    ),
    entry(
        "complex-dynamic-deceptive-basin",
        None,
        bounds=(-5.0, 5.0),
        dim=("scalable", 1),
        props=PropertySet(
            continuous=True,
            differentiable=False,
            separable=False,
            scalable=True,
            modality="multimodal",
            stochastic=True,
            dynamic=True,
        ),
        params={"step_sigma": 0.05, "noise_base": 0.1},
        tier=1,
        notes=(
            "noise amplitude feeds back on the recent evaluation history, so past queries "
            "change future noise; no fixed optimum exists",
            "no range is published; [-5, 5] is used",
        ),
    ),
    entry(
        "easom",
        _easom,
        bounds=(-100.0, 100.0),
        dim=2,
        props="C D S SC M",
        optima=[om(-1.0, (PI, PI), BOTH, tol=1e-9)],
        tier=1,
        notes=("alternative published ranges: [-40, 40] and [-10, 10]",),
    ),
    entry(
        "easom-with-noise",
        _easom_with_noise,
        bounds=(-100.0, 100.0),
        dim=2,
        props="C D S SC M",
        optima=[om(-0.5, (PI, PI), VERIFIED, tol=1e-9)],
        notes=('the "+ 1/2" term is a constant offset as printed, not randomness',),
    ),
    entry(
        "egg-box",
        _egg_box,
        bounds=(-10.0, 10.0),
        dim=2,
        props="C D S NSC M",
        optima=[om(-243.0, (0.0, 0.0), BOTH, tol=1e-9, note="repeats on the 4*pi grid")],
        notes=('published "range [-243, -1]" is the value range; [-10, 10] is used as the box',),
    ),
    entry(
        "egg-crate",
        _egg_crate,
        bounds=(-5.0, 5.0),
        dim=2,
        props="C D S NSC M",
        optima=[om(0.0, (0.0, 0.0), BOTH, tol=1e-9)],
    ),
    entry(
        "egg-holder",
        _egg_holder,
        bounds=(-512.0, 512.0),
        dim=("scalable", 2),
        props="C D NS SC M",
        optima=[om(-959.6407, (512.0, 404.2319), BOTH, tol=1e-3, dim=2)],
    ),
    entry(
        "eggholder-with-noise",
        _eggholder_with_noise,
        bounds=(-512.0, 512.0),
        dim=("scalable", 2),
        props="C D NS SC M",
        optima=[om(-959.1407, (512.0, 404.2319), VERIFIED, tol=1e-3, dim=2)],
        notes=('the "+ 0.5" term is a constant offset as printed, not randomness',),
    ),
    entry(
        "el-attar-vidyasagar-dutta",
        _el_attar_vidyasagar_dutta,
        bounds=(-500.0, 500.0),
        dim=2,
        props="C D NS NSC U",
        optima=[om(1.7127, (3.409, -2.171), BOTH, tol=1e-3)],
    ),
    entry(
        "elliptic",
        _elliptic,
        bounds=(-5.0, 5.0),
        dim=2,
        props="C D S NSC U",
        optima=[om(0.0, (0.0, 0.0), BOTH, tol=1e-9)],
    ),
    entry(
        "elliptic-n2",
        _elliptic_n2,
        bounds=(-5.0, 5.0),
        dim=2,
        props="C D S NSC U",
        optima=[om(5.0, (1.0, 0.0), BOTH, tol=1e-9, note="published location (0, 1) swaps the coordinates")],
    ),
    entry(
        "exp-2",
        _exp_2,
        bounds=(0.0, 20.0),
        dim=("scalable", 1),
        props="C D S SC U",
        optima=[om(0.0, ("all", 0.0), PAPER_CLAIMED, note="the printed residual equals 6 at x = 0 and cannot vanish")],
    ),
    entry(
        "exponential",
        _exponential,
        bounds=(-1.0, 1.0),
        dim=("scalable", 1),
        props="C D NS SC M",
        optima=[om(-1.0, ("all", 0.0), BOTH, tol=1e-9)],
    ),
    entry(
        "exponential-noise",
        _exponential_noise,
        bounds=(-1.0, 1.0),
        dim=2,
        props="C D S NSC U",
        optima=[om(0.5, (0.0, 0.0), VERIFIED, tol=1e-9)],
        notes=(
            "printed body is a shifted two-dimensional sphere, unrelated to the exponential base function",
            'the "+ 1/2" term is a constant offset, not randomness',
        ),
    ),
    entry(
        "flexus",
        _flexus,
        bounds=(-5.0, 5.0),
        dim=2,
        props="C D NS NSC M",
    ),
    entry(
        "flux",
        _flux,
        bounds=(-100.0, 100.0),
        dim=2,
        props="C D NS NSC M",
        optima=[om(0.0, None, PAPER_CLAIMED, note='published point "(1, 1, 0)" has three coordinates; dropped')],
        notes=("identical body to mccormick on a larger box",),
    ),
    entry(
        "forrester",
        _forrester,
        bounds=(0.0, 1.0),
        dim=1,
        props="C D S NSC M",
        optima=[om(-6.020740, (0.757249,), VERIFIED, tol=1e-3)],
    ),
    entry(
        "forrester-2d",
        _forrester_2d,
        bounds=(0.0, 1.0),
        dim=2,
        props="C D S NSC M",
        optima=[om(-12.041481, (0.757249, 0.757249), VERIFIED, tol=1e-3)],
        notes=("the published 'revised' two-dimensional reduction, registered separately",),
    ),
    entry(
        "freudenstein-roth",
        _freudenstein_roth,
        bounds=(-10.0, 10.0),
        dim=2,
        props="C D NS NSC M",
        optima=[
            om(0.0, (5.0, 4.0), BOTH, tol=1e-9),
            om(48.9842, (11.41, -0.8968), BOTH, tol=0.05, note="local minimum outside the published range"),
        ],
    ),
    entry(
        "gaussian",
        _gaussian,
        bounds=(-5.0, 5.0),
        dim=3,
        props="C D NS NSC M",
        constants="gaussian",
        optima=[om(1.12793e-8, (0.4, 1.0, 0.0), BOTH, tol=1e-3)],
        notes=(
            "printed as a single residual; the canonical fifteen-point least-squares form is "
            "used, mirroring the eight printed targets symmetrically",
        ),
    ),
    entry(
        "gaussian-perturbation",
        _gaussian_perturbation,
        bounds=(-5.0, 5.0),
        dim=2,
        props="C D NS NSC M",
        notes=("strictly positive; the infimum 0 is approached at infinity",),
    ),
    entry(
        "gear",
        _gear,
        bounds=(12.0, 60.0),
        dim=4,
        props="C D NS NSC M",
        optima=[
            om(
                2.7e-12,
                (16.0, 19.0, 43.0, 49.0),
                BOTH,
                tol=1e-12,
                note='published as "2.7" with the exponent lost',
            )
        ],
    ),
    entry(
        "gear-2d",
        _gear_2d,
        bounds=(12.0, 60.0),
        dim=2,
        props="C D NS NSC M",
        notes=("the published two-dimensional reduction, registered as printed (no outer square)",),
    ),
    entry(
        "gear-n2",
        _gear_n2,
        bounds=(12.0, 60.0),
        dim=2,
        props="C D NS NSC M",
        optima=[om(0.0, (30.0, 44.3584), VERIFIED, tol=1e-9, note="any product x0*x1 = 192*6.931 attains 0")],
    ),
    entry(
        "giunta",
        _giunta,
        bounds=(-1.0, 1.0),
        dim=("scalable", 1),
        props="C D S SC M",
        optima=[om(0.06447, (0.458342, 0.458342), BOTH, tol=1e-3, dim=2)],
    ),
    entry(
        "goldstein-price",
        _goldstein_price,
        bounds=(-2.0, 2.0),
        dim=2,
        props="C D NS NSC M",
        optima=[om(3.0, (0.0, -1.0), BOTH, tol=1e-9)],
        tier=1,
    ),
    entry(
        "goldstein-price-with-noise",
        _goldstein_price_with_noise,
        bounds=(-2.0, 2.0),
        dim=2,
        props="C D NS NSC M",
        optima=[om(3.5, (0.0, -1.0), VERIFIED, tol=1e-9)],
        notes=('the "+ 1/2" term is a constant offset as printed, not randomness',),
    ),
    entry(
        "gramacy-lee",
        _gramacy_lee,
        bounds=(-0.5, 2.5),
        dim=1,
        props="C D S NSC M",
        optima=[om(-2.873899, (0.1437792,), VERIFIED, tol=1e-3, note="over the published box; the classic [0.5, 2.5] basin bottom is -0.869 instead")],
        notes=('published claim "(0, -1) where f(x*) = x^2" is not usable and is dropped',),
    ),
    entry(
        "gramacy-lee-2d",
        _gramacy_lee_2d,
        bounds=(-0.5, 2.5),
        dim=2,
        props="C D S NSC M",
        notes=("the published two-dimensional reduction, registered separately",),
    ),
    entry(
        "griewank",
        _griewank,
        bounds=(-600.0, 600.0),
        dim=("scalable", 1),
        props="C D NS SC M",
        optima=[om(0.0, ("all", 0.0), BOTH, tol=1e-9)],
        tier=1,
    ),
    entry(
        "griewank-with-noise",
        None,
        bounds=(-600.0, 600.0),
        dim=2,
        props="C D NS SC M",
        tier=3,
        tier3_reason="the additive noise term epsilon carries no distribution",
    ),
    entry(
        "gulf-research",
        _gulf_research,
        bounds=per_coord_bounds((0.1, 100.0), (0.0, 25.6), (0.0, 5.0)),
        dim=3,
        props="C D NS NSC M",
        optima=[om(0.0, (50.0, 25.0, 1.5), BOTH, tol=1e-9)],
        notes=(
            "printed residual cubes the deviation; the stated minimizer requires the "
            "canonical |u - x_2|^{x_3} form",
        ),
    ),
    entry(
        "gulf-research-development",
        _gulf_research_development,
        aliases=("weibull",),
        bounds=(-5.0, 5.0),
        dim=2,
        props="C D NS NSC M",
        optima=[om(0.0, None, PAPER_CLAIMED, note="strictly positive; the infimum 0 is approached at infinity")],
    ),
    entry(
        "hansen",
        _hansen,
        bounds=(-10.0, 10.0),
        dim=2,
        props="C D S NSC M",
        optima=[
            om(-2.345, (-7.589, -7.708), PAPER_CLAIMED, note="published value garbled; the point sits in the -176.54 basin"),
            om(-176.541793, (-7.589893, -7.708314), VERIFIED, tol=1e-3),
        ],
        notes=("index ranges restored to the canonical 0..4 so the stated minimizer is reproduced",),
    ),
]
