"""Catalog definitions, names S through Z."""

import numpy as np

from ..errors import DomainError
from .constants import SHEKEL_A, SHEKEL_C
from .model import (
    BOTH,
    PAPER_CLAIMED,
    VERIFIED,
    dim_power_bounds,
    entry,
    labels,
    om,
    per_coord_bounds,
    require,
)
from ..core import PropertySet

E = np.e
PI = np.pi


def _salomon(x):
    r = np.sqrt(np.sum(x * x))
    return float(1.0 - np.cos(2.0 * PI * r) + 0.1 * r)


def _sargan(x):
    n = x.size
    total = 0.0
    for i in range(n):
        cross = np.sum(x[i] * x) - x[i] * x[i]
        total += n * x[i] ** 2 + 0.4 * cross
    return float(-total)


def _schaffer_n1(x):
    r2 = x[0] ** 2 + x[1] ** 2
    return float((np.sin(r2) ** 2 - 0.5) / (0.001 * r2 + 1.0) ** 2 + 0.5)


def _schaffer_n2(x):
    d = x[0] ** 2 - x[1] ** 2
    r2 = x[0] ** 2 + x[1] ** 2
    return float((np.sin(d) ** 2 - 0.5) / (0.001 * r2 + 1.0) ** 2 + 0.5)


def _schaffer_n3(x):
    d = x[0] ** 2 - x[1] ** 2
    r2 = x[0] ** 2 + x[1] ** 2
    return float((np.sin(np.cos(d)) ** 2 - 0.5) / (0.001 * r2 + 1.0) ** 2 + 0.5)


def _schaffer_n4(x):
    d = x[0] ** 2 - x[1] ** 2
    r2 = x[0] ** 2 + x[1] ** 2
    return float((np.cos(np.sin(d)) ** 2 - 0.5) / (0.001 * r2 + 1.0) ** 2 + 0.5)


def _schaffer_n7(x):
    r2 = x[0] ** 2 + x[1] ** 2
    return float(r2**0.25 * (50.0 * r2**0.1 + 1.0))


def _schaffer_f6(x):
    r2 = x[0] ** 2 + x[1] ** 2
    return float((np.sin(np.sqrt(r2)) ** 2 - 0.5) / (1.0 + 0.001 * r2**2) + 0.5)


def _schaffer_f7(x):
    n = x.size
    s = np.sqrt(x[:-1] ** 2 + x[1:] ** 2)
    core = np.sum(np.sqrt(s) + np.sqrt(s) * np.sin(50.0 * s**0.2) ** 2) / (n - 1.0)
    pen = np.sum(np.maximum(0.0, np.abs(x) - 5.0) ** 2)
    return float(core**2 + 10.0 * pen)


def _schmidt_veters(x):
    require(x[1] != 0.0, "schmidt-veters", "division by zero")
    return float(
        1.0 / (1.0 + (x[0] - x[1]) ** 2)
        + np.sin((PI * x[1] + x[2]) / 2.0)
        + np.exp(((x[0] + x[1]) / x[1] - 2.0) ** 2)
    )


def _schumer_steiglitz(x):
    return float(np.sum(x**4))


def _schwefel(x):
    return float(418.9829 * x.size - np.sum(x * np.sin(np.sqrt(np.abs(x)))))


def _schwefel_1_2(x):
    return float(np.sum(np.cumsum(x) ** 2))


def _schwefel_1_2_n1(x, rng):
    return float(_schwefel_1_2(x) * (1.0 + 0.4 * abs(rng.standard_normal())))


def _schwefel_2_20(x):
    return float(np.sum(np.abs(x)))


def _schwefel_2_21(x):
    return float(np.max(np.abs(x)))


def _schwefel_2_22(x):
    ax = np.abs(x)
    return float(np.sum(ax) + np.prod(ax))


def _schwefel_2_23(x):
    return float(np.sum(x**10))


def _schwefel_2_25(x):
    return float(np.sum((x - 1.0) ** 2 + (x[0] - x * x) ** 2))


def _schwefel_2_26(x):
    return float(-np.sum(x * np.sin(np.sqrt(np.abs(x)))) / x.size)


def _schwefel_2_36(x):
    return float(-x[0] * (2.0 * x[1] - 1.0 - 2.0 * x[1] ** 2))


def _schwefel_2_40(x):
    return float(-np.sum(x))


def _schwefel_2_60(x):
    return float(max(abs(x[0] + 2.0 * x[1] - 7.0), abs(2.0 * x[0] + x[1] - 5.0)))


def _schwefel_n7(x):
    return float(np.sum(-x * np.sin(np.sqrt(np.abs(x)))))


def _shekel(m):
    A = SHEKEL_A[:m]
    c = SHEKEL_C[:m]

    def body(x):
        return float(-np.sum(1.0 / (np.sum((x[None, :] - A) ** 2, axis=1) + c)))

    return body


def _shubert(x):
    j = np.arange(1.0, 6.0)
    return float(
        np.sum(j * np.cos((j + 1.0) * x[0] + j)) * np.sum(j * np.cos((j + 1.0) * x[1] + j))
    )


def _shubert_n3(x):
    j = np.arange(1.0, 6.0)
    return float(np.sum([np.sum(j * np.sin((j + 1.0) * xi + j)) for xi in x]))


def _shubert_n4(x):
    j = np.arange(1.0, 6.0)
    return float(np.sum([np.sum(j * np.cos((j + 1.0) * xi + j)) for xi in x]))


def _sine_cosine_and_half(x):
    r = np.sqrt(x[0] ** 2 + x[1] ** 2)
    return float((np.sin(r) - np.cos(r)) / (0.001 * x[0] ** 2 + 0.001 * x[1] ** 2 + 1.0) + 0.5)


def _sine_envelope_sine_wave(x):
    r2 = x[:-1] ** 2 + x[1:] ** 2
    return float(
        np.sum((np.sin(np.sqrt(r2)) ** 2 - 0.5) / (0.001 * r2 + 1.0) ** 2) + 0.5
    )


def _sodp(x):
    i = np.arange(1, x.size + 1)
    return float(np.sum(np.abs(x) ** (i + 1)))


def _sphere(x):
    return float(np.sum(x * x))


def _step(x):
    return float(np.sum(np.floor(np.abs(x))))


def _step_n2(x):
    return float(np.sum(np.floor(np.abs(x + 0.5)) ** 2))


def _step_n3(x):
    return float(np.sum(np.floor(x * x)))


def _stepint(x):
    return float(25.0 + np.sum(np.floor(x)))


def _stretched_cosine_wave(x):
    r2 = x[0] ** 2 + x[1] ** 2
    return float(
        0.5 + r2 * np.cos(x[0] / (3.0 * PI)) * np.cos(x[1] / (3.0 * PI)) / (np.sqrt(r2) + 1e-8)
    )


def _stretched_v_sine_wave(x):
    r2 = x[1:] ** 2 + x[:-1] ** 2
    return float(np.sum(r2**0.25 * np.sin(50.0 * r2**0.1) ** 2 + 0.1))


def _styblinski_tang(x):
    return float(0.5 * np.sum(x**4 - 16.0 * x * x + 5.0 * x))


def _sum_of_different_powers(x):
    return float(abs(x[0]) ** 2 + abs(x[1]) ** 3)


def _sum_squares(x):
    i = np.arange(1, x.size + 1)
    return float(np.sum(i * x * x))


def _tablet(x):
    return float(np.exp(6.0) * x[0] ** 2 + np.sum(x[1:] ** 2))


def _testtube_holder(x):
    return float(
        -4.0
        * np.sin(x[0])
        * np.cos(x[1])
        * np.exp(abs(np.cos((x[0] ** 2 + x[1] ** 2) / 200.0)))
    )


def _thevenot(x, m=5, beta=15.0):
    return float(
        np.exp(-np.sum((x / beta) ** (2 * m)))
        - 2.0 * np.exp(-np.prod(x * x)) * np.prod(np.cos(x) ** 2)
    )


def _thurber(x):
    u = -x[0] ** 2 - 1e5 * x[0] + x[1]
    return float(np.log((u - 1000.0) ** 2 + (u + 1000.0) ** 2))


def _trec(x):
    return float(x[0] ** 4 - x[0] ** 2 + 0.1 * x[1] ** 2)


def _trecanni(x):
    return float(x[0] ** 4 - 4.0 * x[0] ** 3 + 4.0 * x[0] ** 2 + x[1] ** 2)


def _trefethen(x):
    return float(
        np.exp(np.sin(50.0 * x[0]))
        - np.sin(10.0 * x[0] + 10.0 * x[1])
        + np.sin(60.0 * np.exp(x[1]))
        + np.sin(70.0 * np.sin(x[0]))
        + np.sin(np.sin(80.0 * x[1]))
        + x[0] ** 2 / 4.0
        + x[1] ** 2 / 4.0
    )


def _trid(x):
    return float(np.sum((x - 1.0) ** 2) - np.sum(x[1:] * x[:-1]))


def _trigonometric(x):
    n = x.size
    i = np.arange(1.0, n + 1.0)
    inner = n - np.sum(np.cos(x)) + i * (1.0 - np.cos(x) - np.sin(x))
    return float(np.sum(inner**2))


def _trigonometric_n2(x):
    u = (x - 0.9) ** 2
    return float(
        1.0 + np.sum(8.0 * np.sin(7.0 * u) ** 2 + 6.0 * np.sin(14.0 * u) ** 2 + u)
    )


def _trimmed_sphere(x):
    r2 = x[0] ** 2 + x[1] ** 2
    return float(r2 if r2 < 0.5 else 0.5)


def _tripod_p(z):
    return 1.0 if z >= 0.0 else 0.0


def _tripod(x):
    px, py = _tripod_p(x[0]), _tripod_p(x[1])
    return float(
        py * (1.0 + px)
        + abs(x[0] + 50.0 * py * (1.0 - 2.0 * px))
        + abs(x[1] + 50.0 * (1.0 - 2.0 * py))
    )


def _two_axis(x):
    return float(x[0] ** 2 * x[1] ** 2)


def _urfun_n2(x):
    i = np.arange(1.0, 6.0)
    return float(
        np.sum(np.sin(2.0 * i * x[0] + i) * np.sin(2.0 * i * x[1] + i) / (i**3 * (i + 1.0)))
    )


def _ursem(x):
    return float(-np.sin(2.0 * x[0] - 0.5 * PI) - 3.0 * np.cos(x[1]) - 0.5 * x[0])


def _ursem_n3(x):
    def wave(v, freq_quad):
        envelope = (2.0 - abs(v)) / 2.0 * (3.0 - abs(v)) / 2.0
        return -np.sin(freq_quad + 0.5 * PI) * envelope

    return float(wave(x[0], 2.2 * PI * x[0]) + wave(x[1], 0.5 * PI * x[1] ** 2))


def _ursem_n4(x):
    r = np.sqrt(x[0] ** 2 + x[1] ** 2)
    return float(-3.0 * np.sin(0.5 * PI * x[0] + 0.5 * PI) * (2.0 - r) / 4.0)


def _ursem_waves(x):
    return float(
        -0.9 * x[0] ** 2
        + (x[1] ** 2 - 4.5 * x[1]) * x[0] * x[1]
        + 4.7 * np.cos(3.0 * x[0] - x[1] ** 2 * (2.0 + x[0])) * np.sin(2.5 * PI * x[0])
    )


def _ursem_wavesfun_n2(x):
    return float(
        2.5 * np.sin(3.0 * PI * x[0] / 2.0) * x[0] + 1.5 * np.sin(3.0 * PI * x[1] / 2.0) * x[1]
    )


def _venter_sobiezcchanski_sobieski(x):
    return float(
        x[0] ** 2
        - 100.0 * np.cos(x[0] ** 2)
        - 100.0 * np.cos(x[0] ** 2 / 30.0)
        + x[1] ** 2
        - 100.0 * np.cos(x[1] ** 2)
        - 100.0 * np.cos(x[1] ** 2 / 30.0)
    )


def _vincent(x):
    require(x > 0.0, "vincent", "log of a non-positive coordinate")
    return float(-np.sum(np.sin(10.0 * np.log(x))))


def _wavy(x, k=10.0, j=1.0):
    return float(1.0 - np.sum(np.cos(k * x) * np.exp(-x * x / (2.0 * j * j))) / x.size)


def _wayburn_seader(x):
    return float((2.0 * x[0] + x[1] - 4.0) ** 2 + (x[0] ** 6 + x[1] ** 4 - 17.0) ** 2)


def _wayburn_seader_n2(x):
    return float(
        (1.613 - 4.0 * (x[0] - 0.3125) ** 2 - 4.0 * (x[1] - 1.625) ** 2) ** 2
        + (x[1] - 1.0) ** 2
    )


def _wayburn_seader_n3(x):
    return float(
        2.0 * x[0] ** 3 / 3.0
        - 8.0 * x[0] ** 2
        + 33.0 * x[0]
        - x[0] * x[1]
        + 5.0
        + ((x[0] - 4.0) ** 2 + (x[1] - 5.0) ** 2 - 4.0) ** 2
    )


def _weierstrass(x, a=0.5, b=3.0, kmax=20):
    k = np.arange(0, kmax + 1)
    ak = a**k
    bk = b**k
    inner = np.sum([np.sum(ak * np.cos(2.0 * PI * bk * (xi + 0.5))) for xi in x])
    return float(inner - x.size * np.sum(ak * np.cos(PI * bk)))


def _whitley(x):
    xi = x[:, None]
    xj = x[None, :]
    y = 100.0 * (xj - xi**2) ** 2 + (1.0 - xi) ** 2
    return float(np.sum(y * y / 4000.0 - np.cos(y) + 1.0))


def _wolfe(x):
    return float(4.0 / 3.0 * (x[0] ** 2 - x[0] * x[1] + x[1] ** 2) ** 0.75 + x[2])


def _xin_she_yang_n2(x):
    return float(np.sum(np.abs(x)) * np.exp(-np.sum(np.sin(x * x))))


def _xin_she_yang_n3(x, m=5, beta=15.0):
    return float(
        np.exp(-np.sum((x / beta) ** (2 * m)))
        - 2.0 * np.exp(-np.sum(x * x)) * np.prod(np.cos(x) ** 2)
    )


def _xin_she_yang_n4(x):
    return float(
        (np.sum(np.sin(x) ** 2) - np.exp(-np.sum(x * x)))
        - np.exp(-np.sum(np.sin(np.sqrt(np.abs(x))) ** 2))
    )


def _yao_liu_n4(x):
    return float(np.max(np.abs(x)))


def _yao_liu_n9(x):
    return float(np.sum(x * x - 10.0 * np.cos(2.0 * PI * x) + 10.0))


def _zakharov(x):
    n = x.size
    i = np.arange(1.0, n + 1.0)
    s = np.sum(0.5 * i * x)
    return float(np.sum(x * x) + s**2 + s ** (4 * n))


def _zero_sum(x):
    s = np.sum(x)
    if s == 0.0:
        return 0.0
    return float(1.0 + np.sqrt(1e4 * np.sum(np.abs(x))))


def _zettl(x):
    return float((x[0] ** 2 - 2.0 * x[0] + x[1] ** 2) ** 2 + 0.25 * x[0])


def _zettl_variant(x):
    return float(
        (x[0] ** 2 - 2.0 * x[0] + x[1] ** 2) ** 2 - np.cos(x[1]) + 0.5 * x[0]
    )


def _zoom(x):
    return float((x[0] - 3.1) ** 2 + (x[1] - 3.3) ** 2 + np.sin(x[0] * x[1]))


DEFS = [
    entry(
        "salomon",
        _salomon,
        aliases=("salomons",),
        bounds=(-100.0, 100.0),
        dim=("scalable", 1),
        props="C D NS SC M",
        optima=[om(0.0, ("all", 0.0), BOTH, tol=1e-9)],
        tier=1,
        notes=("alternative published range: [-20, 20]",),
    ),
    entry(
        "sargan",
        _sargan,
        bounds=(-100.0, 100.0),
        dim=("scalable", 1),
        props="C D NS SC M",
        optima=[
            om(0.0, ("all", 0.0), BOTH, tol=1e-9, note="stationary only; the printed leading minus makes large |x| arbitrarily negative")
        ],
    ),
    entry(
        "sawtooth",
        None,
        bounds=(-20.0, 20.0),
        dim=2,
        props="C D NS NSC M",
        optima=[om(0.0, ("all", 0.0), PAPER_CLAIMED)],
        tier=3,
        tier3_reason='the angular argument "t = 2(x2, x1)" is not a well-formed expression',
    ),
    entry(
        "schaffer-n1",
        _schaffer_n1,
        bounds=(-100.0, 100.0),
        dim=2,
        props="C D NS NSC U",
        optima=[om(0.0, (0.0, 0.0), BOTH, tol=1e-9)],
        tier=1,
    ),
    entry(
        "schaffer-n2",
        _schaffer_n2,
        bounds=(-100.0, 100.0),
        dim=2,
        props="C D NS NSC U",
        optima=[om(0.0, (0.0, 0.0), BOTH, tol=1e-9)],
        tier=1,
    ),
    entry(
        "schaffer-n3",
        _schaffer_n3,
        bounds=(-100.0, 100.0),
        dim=2,
        props="C D NS NSC U",
        optima=[om(0.00156, (0.0, 1.2531), BOTH, tol=1e-4)],
    ),
    entry(
        "schaffer-n4",
        _schaffer_n4,
        bounds=(-100.0, 100.0),
        dim=2,
        props="C D NS NSC U",
        optima=[om(0.2925, (0.0, 1.2531), BOTH, tol=1e-3)],
    ),
    entry(
        "schaffer-n7",
        _schaffer_n7,
        bounds=(-100.0, 100.0),
        dim=2,
        props="C D NS NSC U",
        optima=[om(0.0, (0.0, 0.0), BOTH, tol=1e-9)],
    ),
    entry(
        "schaffer-f6",
        _schaffer_f6,
        aliases=("expanded-schaffer-f6",),
        bounds=(-100.0, 100.0),
        dim=2,
        props="C D NS SC M",
        optima=[om(0.0, (0.0, 0.0), BOTH, tol=1e-9)],
        tier=1,
        notes=("the printed denominator 1 + 0.001 r^4 (instead of the squared 1 + 0.001 r^2) stands",),
    ),
    entry(
        "schaffer-f7",
        _schaffer_f7,
        bounds=(-5.0, 5.0),
        dim=("scalable", 2),
        props="C D NS SC M",
        optima=[om(0.0, ("all", 0.0), VERIFIED, tol=1e-9)],
        notes=(
            "simplified transforms: conditioning, rotations, and shift replaced by "
            "identities with f_opt = 0; the boundary penalty uses the standard |x|-5 threshold",
        ),
    ),
    entry(
        "schaffer-f7-n1",
        _schaffer_f7,
        bounds=(-5.0, 5.0),
        dim=("scalable", 2),
        props="C D NS SC M",
        optima=[om(0.0, ("all", 0.0), VERIFIED, tol=1e-9)],
        notes=(
            "identical to schaffer-f7 once the conditioning map is replaced by the "
            "identity (the published variants differ only in that map)",
        ),
    ),
    entry(
        "schmidt-veters",
        _schmidt_veters,
        bounds=(0.0, 10.0),
        dim=3,
        props="C D NS NSC M",
        optima=[om(3.0, ("all", 0.78547), BOTH, tol=3e-3)],
        notes=("published body garbles the coupled fraction; the canonical form is used",),
    ),
    entry(
        "schumer-steiglitz",
        _schumer_steiglitz,
        bounds=(-100.0, 100.0),
        dim=("scalable", 1),
        props="C D S SC U",
        optima=[om(0.0, ("all", 0.0), BOTH, tol=1e-9)],
    ),
    entry(
        "schwefel",
        _schwefel,
        bounds=(-500.0, 500.0),
        dim=("scalable", 1),
        props="C D PS SC U",
        optima=[om(0.0, ("all", 420.9687), BOTH, tol=1e-3)],
        tier=1,
        notes=(
            "the dimensional-shift form 418.9829 d - sum x sin(sqrt|x|) is adopted, as the "
            "printed two-dimensional reduction (offset 837.9658) confirms",
        ),
    ),
    entry(
        "schwefel-1-2",
        _schwefel_1_2,
        aliases=("double-sum",),
        bounds=(-100.0, 100.0),
        dim=("scalable", 1),
        props="C D NS SC M",
        optima=[om(0.0, ("all", 0.0), BOTH, tol=1e-9)],
    ),
    entry(
        "schwefel-1-2-n1",
        _schwefel_1_2_n1,
        bounds=(-100.0, 100.0),
        dim=("scalable", 1),
        props="C D NS SC M ST",
        optima=[om(0.0, ("all", 0.0), VERIFIED, tol=1e-9, note="exact at the origin even under the multiplicative noise")],
    ),
    entry(
        "schwefel-2-20",
        _schwefel_2_20,
        bounds=(-100.0, 100.0),
        dim=("scalable", 1),
        props="C ND S SC U",
        optima=[om(0.0, ("all", 0.0), BOTH, tol=1e-9)],
    ),
    entry(
        "schwefel-2-21",
        _schwefel_2_21,
        bounds=(-100.0, 100.0),
        dim=("scalable", 1),
        props="C ND S SC U",
        optima=[om(0.0, ("all", 0.0), VERIFIED, tol=1e-9)],
    ),
    entry(
        "schwefel-2-22",
        _schwefel_2_22,
        bounds=(-10.0, 10.0),
        dim=("scalable", 1),
        props="C ND S SC U",
        optima=[om(0.0, ("all", 0.0), VERIFIED, tol=1e-9)],
    ),
    entry(
        "schwefel-2-23",
        _schwefel_2_23,
        bounds=(-10.0, 10.0),
        dim=("scalable", 1),
        props="C D NS NSC M",
        optima=[om(0.0, ("all", 0.0), VERIFIED, tol=1e-9)],
    ),
    entry(
        "schwefel-2-25",
        _schwefel_2_25,
        bounds=(-100.0, 100.0),
        dim=("scalable", 1),
        props="C D NS SC U",
        optima=[om(0.0, ("all", 1.0), VERIFIED, tol=1e-9)],
    ),
    entry(
        "schwefel-2-26",
        _schwefel_2_26,
        bounds=(-500.0, 500.0),
        dim=("scalable", 1),
        props="C D S NSC M",
        optima=[om(-418.9829, ("all", 420.9687), VERIFIED, tol=1e-3)],
    ),
    entry(
        "schwefel-2-36",
        _schwefel_2_36,
        bounds=(0.0, 500.0),
        dim=2,
        props="C D S SC M",
        optima=[om(0.0, (0.0, 0.5), VERIFIED, tol=1e-9, note="any x0 = 0 point attains 0 on this box")],
    ),
    entry(
        "schwefel-2-40",
        _schwefel_2_40,
        bounds=(0.0, 1000.0),
        dim=5,
        props="C D S SC U",
        optima=[om(-5000.0, ("all", 1000.0), BOTH, tol=1e-9, note="attained at the corner of the assumed [0, 1000] box")],
        notes=("no range is published; [0, 1000] makes the stated -5000 the boxed minimum",),
    ),
    entry(
        "schwefel-2-60",
        _schwefel_2_60,
        bounds=(-100.0, 100.0),
        dim=2,
        props="C ND S SC U",
        optima=[om(0.0, (1.0, 3.0), VERIFIED, tol=1e-9)],
    ),
    entry(
        "schwefel-n7",
        _schwefel_n7,
        bounds=(-500.0, 500.0),
        dim=("scalable", 1),
        props="C D S SC M",
        optima=[om(-837.9658, ("all", 420.9687), VERIFIED, tol=1e-3, dim=2, note="-418.9829 per coordinate")],
    ),
    entry(
        "shekel",
        None,
        bounds=(0.0, 10.0),
        dim=4,
        props="C D NS SC M",
        tier=3,
        tier3_reason="recommends m = 30 but the centers a_ij and weights c_i are never provided",
    ),
    entry(
        "shekel-n5",
        _shekel(5),
        bounds=(0.0, 10.0),
        dim=4,
        props="C D NS SC M",
        constants="shekel-n5",
        optima=[om(-10.1499, ("all", 4.0), BOTH, tol=0.011)],
    ),
    entry(
        "shekel-n7",
        _shekel(7),
        bounds=(0.0, 10.0),
        dim=4,
        props="C D NS SC M",
        constants="shekel-n7",
        optima=[om(-10.3999, ("all", 4.0), BOTH, tol=0.011)],
    ),
    entry(
        "shekel-n10",
        _shekel(10),
        bounds=(0.0, 10.0),
        dim=4,
        props="C D NS SC M",
        constants="shekel-n10",
        optima=[om(-10.5319, ("all", 4.0), BOTH, tol=0.011)],
        notes=("the printed grouping sums reciprocals per coordinate; the canonical grouping of the other variants is used",),
    ),
    entry(
        "shubert",
        _shubert,
        bounds=(-10.0, 10.0),
        dim=2,
        props="C D NS NSC M",
        optima=[om(-186.7309, (-1.425128, -0.800321), BOTH, tol=1e-3, note="18 global minima in a 3x3 pattern")],
        tier=2,
        notes=("printed cosine sums drop the j weights the stated -186.7309 requires; the canonical weighted form is used",),
    ),
    entry(
        "shubert-n3",
        _shubert_n3,
        aliases=("trigonometric-polynomial", "suharev-zilinskas"),
        bounds=(-10.0, 10.0),
        dim=("scalable", 1),
        props="C D S NSC M",
    ),
    entry(
        "shubert-n4",
        _shubert_n4,
        bounds=(-10.0, 10.0),
        dim=("scalable", 1),
        props="C D S NSC M",
    ),
    entry(
        "sine-cosine-and-half",
        _sine_cosine_and_half,
        bounds=(-5.0, 5.0),
        dim=2,
        props="C D NS NSC M",
        optima=[om(0.0, None, PAPER_CLAIMED, note="values near -0.9 exist; 0 is not the minimum")],
    ),
    entry(
        "sine-envelope-sine-wave",
        _sine_envelope_sine_wave,
        bounds=(-100.0, 100.0),
        dim=("scalable", 2),
        props="C D NS SC M",
        optima=[om(0.0, ("all", 0.0), BOTH, tol=1e-9, dim=2, note="the origin value is 0.5(2 - n) for n pairs")],
    ),
    entry(
        "sodp",
        _sodp,
        bounds=(-1.0, 1.0),
        dim=("scalable", 1),
        props="C D S SC U",
        optima=[om(0.0, ("all", 0.0), BOTH, tol=1e-9)],
        notes=("identical body to powell-sum; registered as printed",),
    ),
    entry(
        "sphere",
        _sphere,
        aliases=("de-jong",),
        bounds=(-100.0, 100.0),
        dim=("scalable", 1),
        props="C D S SC U",
        optima=[om(0.0, ("all", 0.0), BOTH, tol=1e-9)],
        tier=1,
        notes=(
            'the property line prints "Multimodal" while the prose and the classification '
            "call it unimodal; the unimodal reading is recorded",
            "alternative published range: [-5.12, 5.12]",
        ),
    ),
    entry(
        "step",
        _step,
        bounds=(-100.0, 100.0),
        dim=("scalable", 1),
        props="NC D S SC M",
        optima=[om(0.0, (-0.5, 0.5), BOTH, tol=1e-9, note="flat plateau wherever every |x_i| < 1")],
        notes=('labeled "Non-continuous, Differentiable" — the labels contradict each other and the smoothness probe logs it',),
    ),
    entry(
        "step-n2",
        _step_n2,
        bounds=(-100.0, 100.0),
        dim=("scalable", 1),
        props="NC ND S SC U",
        optima=[
            om(0.0, (-0.5, 0.5), PAPER_CLAIMED, note="the stated point sits on a step edge and evaluates to 1"),
            om(0.0, ("all", 0.0), VERIFIED, tol=1e-9),
        ],
    ),
    entry(
        "step-n3",
        _step_n3,
        bounds=(-100.0, 100.0),
        dim=("scalable", 1),
        props="NC ND S SC U",
        optima=[
            om(0.0, (-1.0, 1.0), PAPER_CLAIMED, note="the stated point sits on a step edge and evaluates to 2"),
            om(0.0, ("all", 0.0), VERIFIED, tol=1e-9),
        ],
    ),
    entry(
        "stepint",
        _stepint,
        bounds=(-5.12, 5.12),
        dim=("scalable", 1),
        props="NC ND S SC U",
        optima=[om(0.0, None, PAPER_CLAIMED, note="the floor sum reaches 25 - 6n, not 0")],
    ),
    entry(
        "stochastic",
        None,
        bounds=(-5.0, 5.0),
        dim=("scalable", 1),
        props=PropertySet(separable=True, scalable=True, modality="multimodal", stochastic=True),
        optima=[om(0.0, None, PAPER_CLAIMED, note="claimed at x_i = 1/i")],
        tier=3,
        tier3_reason="the random weights epsilon_i carry no distribution",
    ),
    entry(
        "stretched-cosine-wave",
        _stretched_cosine_wave,
        bounds=(-10.0, 10.0),
        dim=2,
        props="C D NS NSC M",
    ),
    entry(
        "stretched-v-sine-wave",
        _stretched_v_sine_wave,
        bounds=(-10.0, 10.0),
        dim=("scalable", 2),
        props="C D NS SC U",
        optima=[
            om(0.1, ("all", 0.0), VERIFIED, tol=1e-9, dim=2, note="0.1 per pair at the origin; the usual grouping multiplies instead of adding")
        ],
    ),
    entry(
        "styblinski-tang",
        _styblinski_tang,
        bounds=(-5.0, 5.0),
        dim=("scalable", 1),
        props="C D NS NSC M",
        optima=[
            om(-78.33198, ("all", -2.9035), BOTH, tol=0.079, dim=2, note="-39.16599 per coordinate"),
            om(-195.82995, ("all", -2.9035), BOTH, tol=0.196, dim=5),
        ],
        tier=1,
    ),
    entry(
        "sum-of-different-powers",
        _sum_of_different_powers,
        bounds=(-5.0, 5.0),
        dim=2,
        props="C D S NSC U",
        optima=[om(0.0, (0.0, 0.0), BOTH, tol=1e-9)],
    ),
    entry(
        "sum-squares",
        _sum_squares,
        bounds=(-5.0, 5.0),
        dim=("scalable", 1),
        props="C D S SC U",
        optima=[om(0.0, ("all", 0.0), BOTH, tol=1e-9)],
        notes=("the printed sum stops at 2; the usual any-dimension weighted sum is used",),
    ),
    entry(
        "tablet",
        _tablet,
        bounds=(-5.0, 5.0),
        dim=("scalable", 1),
        props="C D S SC U",
        optima=[om(0.0, ("all", 0.0), VERIFIED, tol=1e-9)],
        notes=("the printed trailing x_i^2 is read as the sum over the remaining coordinates",),
    ),
    entry(
        "testtube-holder",
        _testtube_holder,
        bounds=(-10.0, 10.0),
        dim=2,
        props="C D S SC M",
        optima=[
            om(-10.8722, (-PI / 2.0, 0.0), PAPER_CLAIMED, note="sign garbled; that point is the maximum"),
            om(-10.872299, (PI / 2.0, 0.0), VERIFIED, tol=1e-3),
        ],
        notes=(
            "published grouping cos(x^2 + y^2)/200 cannot reach the stated value; the "
            "canonical cos((x^2 + y^2)/200) is used",
            "published range [-1, 4] excludes the minimizer; [-10, 10] is used",
        ),
    ),
    entry(
        "thevenot",
        _thevenot,
        bounds=(-2.0 * PI, 2.0 * PI),
        dim=("scalable", 1),
        props="C D S SC M",
        params={"m": 5, "beta": 15.0},
        optima=[om(-1.0, ("all", 0.0), BOTH, tol=1e-9)],
        notes=("no range is published; [-2 pi, 2 pi] is used",),
    ),
    entry(
        "thurber",
        _thurber,
        bounds=(-5.0, 5.0),
        dim=2,
        props="C D NS NSC M",
    ),
    entry(
        "trec",
        _trec,
        bounds=(-5.0, 5.0),
        dim=2,
        props="C D S NSC M",
        optima=[om(-0.25, (0.7071067811865476, 0.0), VERIFIED, tol=1e-9, note="mirror minimizer at -sqrt(1/2)")],
    ),
    entry(
        "trecanni",
        _trecanni,
        bounds=(-5.0, 5.0),
        dim=2,
        props="C D S SC U",
        optima=[
            om(0.0, (-2.0, 0.0), PAPER_CLAIMED, note="evaluates to 64; the roots are (0, 0) and (2, 0)"),
            om(0.0, (0.0, 0.0), VERIFIED, tol=1e-9),
            om(0.0, (2.0, 0.0), VERIFIED, tol=1e-9),
        ],
        notes=("printed linear 4x term corrected to the canonical quadratic 4x^2, which the roots require",),
    ),
    entry(
        "trefethen",
        _trefethen,
        bounds=(-10.0, 10.0),
        dim=2,
        props="C D NS NSC M",
        optima=[om(-3.3068, (-0.0244, 0.2106), BOTH, tol=3.4e-3)],
    ),
    entry(
        "trid",
        _trid,
        bounds=dim_power_bounds(1.0, 2.0),
        dim=("scalable", 1),
        props="C D NS SC U",
        optima=[
            om(-50.0, (6.0, 10.0, 12.0, 12.0, 10.0, 6.0), BOTH, tol=1e-9, dim=6, note="x_i = i(d+1-i)"),
            om(-210.0, (10.0, 18.0, 24.0, 28.0, 30.0, 30.0, 28.0, 24.0, 18.0, 10.0), VERIFIED, tol=1e-9, dim=10),
        ],
        notes=(
            "printed sums collapse the indices to x_0 and x_1; the canonical body "
            "sum (x_i - 1)^2 - sum x_i x_{i-1} is used, which reproduces the stated -50 at d = 6",
            "the stated d = 10 value -200 disagrees with the canonical -210",
        ),
    ),
    entry(
        "trid-n6",
        _trid,
        bounds=(-6.0, 6.0),
        dim=6,
        props="C D NS NSC M",
        optima=[
            om(-50.0, (6.0, 10.0, 12.0, 12.0, 10.0, 6.0), BOTH, tol=1e-9, note="minimizer outside the published [-6, 6] range")
        ],
    ),
    entry(
        "trid-n10",
        _trid,
        bounds=(-100.0, 100.0),
        dim=10,
        props="C D NS NSC M",
        optima=[
            om(-200.0, None, PAPER_CLAIMED, note="the canonical value is -210"),
            om(-210.0, (10.0, 18.0, 24.0, 28.0, 30.0, 30.0, 28.0, 24.0, 18.0, 10.0), VERIFIED, tol=1e-9),
        ],
    ),
    entry(
        "trigonometric",
        _trigonometric,
        bounds=(0.0, PI),
        dim=("scalable", 1),
        props="C D NS SC M",
        optima=[om(0.0, ("all", 0.0), BOTH, tol=1e-9)],
    ),
    entry(
        "trigonometric-n2",
        _trigonometric_n2,
        bounds=(-500.0, 500.0),
        dim=("scalable", 1),
        props="C D NS SC M",
        optima=[om(1.0, ("all", 0.9), BOTH, tol=1e-9)],
    ),
    entry(
        "trimmed-sphere",
        _trimmed_sphere,
        bounds=(-10.0, 10.0),
        dim=2,
        props="C ND S NSC U",
        optima=[om(0.0, (0.0, 0.0), VERIFIED, tol=1e-9)],
    ),
    entry(
        "tripod",
        _tripod,
        bounds=(-100.0, 100.0),
        dim=2,
        props=PropertySet(continuous=False, differentiable=False, separable=False, scalable=False, modality="multimodal"),
        optima=[
            om(0.0, (-50.0, 0.0), PAPER_CLAIMED, note="evaluates to 51; the coordinates are swapped"),
            om(0.0, (0.0, -50.0), VERIFIED, tol=1e-9),
        ],
        notes=("the step function p is never defined; the standard indicator p(z) = 1 for z >= 0 is used",),
    ),
    entry(
        "two-axis",
        _two_axis,
        bounds=(-5.0, 5.0),
        dim=2,
        props="C D S NSC U",
        optima=[om(0.0, (0.0, 0.0), BOTH, tol=1e-9, note="vanishes on both axes")],
    ),
    entry(
        "urfun-n2",
        _urfun_n2,
        bounds=(-5.0, 5.0),
        dim=2,
        props="C D NS NSC M",
    ),
    entry(
        "ursem",
        _ursem,
        bounds=(-2.3, 3.0),
        dim=2,
        props="C D NS NSC M",
        optima=[om(-4.816, (1.6971, 0.0), BOTH, tol=4.9e-3)],
    ),
    entry(
        "ursem-n3",
        _ursem_n3,
        bounds=per_coord_bounds((-2.0, 2.0), (-1.5, 1.5)),
        dim=2,
        props="C D NS NSC M",
        optima=[
            om(-2.5, (0.0, 0.0), PAPER_CLAIMED, note="the printed envelopes give -3 at the origin"),
            om(-3.0, (0.0, 0.0), VERIFIED, tol=1e-9),
        ],
    ),
    entry(
        "ursem-n4",
        _ursem_n4,
        bounds=(-2.0, 2.0),
        dim=2,
        props="C D NS NSC M",
        optima=[om(-1.5, (0.0, 0.0), BOTH, tol=1e-9)],
    ),
    entry(
        "ursem-waves",
        _ursem_waves,
        bounds=per_coord_bounds((-0.9, 1.2), (-1.2, 1.2)),
        dim=2,
        props="C D NS NSC M",
        optima=[om(-8.553, (-0.6056, -1.1775), PAPER_CLAIMED, note="the stated point does not reach the stated value")],
    ),
    entry(
        "ursem-wavesfun-n2",
        _ursem_wavesfun_n2,
        bounds=per_coord_bounds((-0.9, 1.2), (-1.2, 1.2)),
        dim=2,
        props="C D NS NSC M",
        optima=[om(-7.3069, (-0.6056, -1.1775), PAPER_CLAIMED, note="the stated point does not reach the stated value")],
    ),
    entry(
        "venter-sobiezcchanski-sobieski",
        _venter_sobiezcchanski_sobieski,
        bounds=(-50.0, 10.0),
        dim=2,
        props="C D S NSC M",
        optima=[
            om(1000.0, None, PAPER_CLAIMED, note="stated value unreachable as a minimum; the origin gives -400"),
            om(-400.0, (0.0, 0.0), VERIFIED, tol=1e-9),
        ],
    ),
    entry(
        "vincent",
        _vincent,
        bounds=(0.25, 10.0),
        dim=("scalable", 1),
        props="C D S SC M",
        optima=[om(-2.0, ("all", 1.1700848), VERIFIED, tol=1e-6, dim=2, note="-1 per coordinate at x = e^{pi/20 + 2k pi/10}")],
    ),
    entry(
        "watson",
        None,
        bounds=(-5.0, 5.0),
        dim=6,
        props="C D NS SC U",
        optima=[om(0.0228, (-0.0158, 1.012, -0.2329, 1.60, -1.513, 0.9928), PAPER_CLAIMED)],
        tier=3,
        tier3_reason="the coefficient matrix d_{i,j} is never defined in the transcription",
    ),
    entry(
        "wavy",
        _wavy,
        bounds=(-PI, PI),
        dim=("scalable", 1),
        props="C D S SC M",
        params={"k": 10.0, "j": 1.0},
        optima=[
            om(0.0, (0.2, 1.0), PAPER_CLAIMED, note="stated point does not evaluate to 0"),
            om(0.0, ("all", 0.0), VERIFIED, tol=1e-9),
        ],
        notes=("the free symbols k and j take the customary values 10 and 1",),
    ),
    entry(
        "wayburn-seader",
        _wayburn_seader,
        bounds=(-500.0, 500.0),
        dim=2,
        props="C D NS SC U",
        optima=[
            om(0.0, (1.0, 2.0), BOTH, tol=1e-9),
            om(0.0, (1.5968, 0.8063), BOTH, tol=1e-5),
        ],
    ),
    entry(
        "wayburn-seader-n2",
        _wayburn_seader_n2,
        bounds=(-500.0, 500.0),
        dim=2,
        props="C D NS SC U",
        optima=[
            om(0.0, (0.20013, 1.0), BOTH, tol=1e-6),
            om(0.0, (0.42486, 1.0), BOTH, tol=1e-6),
        ],
    ),
    entry(
        "wayburn-seader-n3",
        _wayburn_seader_n3,
        bounds=(-500.0, 500.0),
        dim=2,
        props="C D NS SC U",
        optima=[
            om(0.0, ("all", 0.0), PAPER_CLAIMED, note="evaluates to 1374 at the origin"),
            om(19.10588, (5.1468967, 6.8395898), VERIFIED, tol=1e-4),
        ],
        notes=(
            "printed polynomial terms are garbled (mixed -8 x_2^2 and +33 x_1 x_2); the "
            "canonical single-variable cubic block is used",
            "published range [-0.5, 0.5] excludes the basin; [-500, 500] is used",
        ),
    ),
    entry(
        "weierstrass",
        _weierstrass,
        bounds=(-0.5, 0.5),
        dim=("scalable", 1),
        props="C D S SC M",
        params={"a": 0.5, "b": 3.0, "kmax": 20},
        optima=[om(0.0, ("all", 0.0), BOTH, tol=1e-9)],
        notes=(
            "the parameters a, b, kmax are never stated; the standard 0.5 / 3 / 20 are used, "
            "and the stray j in the constant term is read as the canonical cos(pi b^k)",
        ),
    ),
    entry(
        "whitley",
        _whitley,
        bounds=(-10.24, 10.24),
        dim=("scalable", 1),
        props="C D NS SC M",
        optima=[
            om(0.0, ("all", 0.0), PAPER_CLAIMED, note="published location; the minimum sits at the all-ones point"),
            om(0.0, ("all", 1.0), VERIFIED, tol=1e-9),
        ],
        notes=("free indices read as the canonical double sum with the composite argument y_ij",),
    ),
    entry(
        "wolfe",
        _wolfe,
        bounds=(0.0, 2.0),
        dim=3,
        props="C D S SC M",
        optima=[om(0.0, ("all", 0.0), BOTH, tol=1e-9)],
        notes=(
            "the published [-10, 10] range makes the linear third coordinate unbounded "
            "below; the conventional [0, 2] box is used",
        ),
    ),
    entry(
        "xin-she-yang-n1",
        None,
        bounds=(-2.0 * PI, 2.0 * PI),
        dim=("scalable", 1),
        props=PropertySet(separable=False, scalable=True, modality="multimodal", stochastic=True),
        tier=3,
        tier3_reason="the random weights epsilon_i carry no distribution",
    ),
    entry(
        "xin-she-yang-n2",
        _xin_she_yang_n2,
        bounds=(-2.0 * PI, 2.0 * PI),
        dim=("scalable", 1),
        props=PropertySet(differentiable=False, separable=True, scalable=True, modality="multimodal"),
        optima=[om(0.0, ("all", 0.0), BOTH, tol=1e-9)],
    ),
    entry(
        "xin-she-yang-n3",
        _xin_she_yang_n3,
        bounds=(-20.0, 20.0),
        dim=("scalable", 1),
        props="C D NS SC M",
        params={"m": 5, "beta": 15.0},
        optima=[om(-1.0, ("all", 0.0), BOTH, tol=1e-9)],
        notes=("m and beta are never stated; the values shared with thevenot (5 and 15) are used",),
    ),
    entry(
        "xin-she-yang-n4",
        _xin_she_yang_n4,
        bounds=(-10.0, 10.0),
        dim=("scalable", 1),
        props="C ND NS NSC M",
        optima=[
            om(-2.0, ("all", 0.0), VERIFIED, tol=1e-9, note="the usual product form gives -1; the printed subtraction gives -2")
        ],
    ),
    entry(
        "xin-she-yang-n7",
        None,
        bounds=(-5.0, 5.0),
        dim=("scalable", 1),
        props=PropertySet(separable=True, scalable=True, modality="multimodal", stochastic=True),
        tier=3,
        tier3_reason="prints the stochastic function's formula verbatim (undistributed epsilon_i); the intended body is unknown",
    ),
    entry(
        "yao-liu-n4",
        _yao_liu_n4,
        bounds=(-5.0, 5.0),
        dim=("scalable", 1),
        props="C ND S SC U",
        optima=[
            om(-1.0, None, PAPER_CLAIMED, note="max|x| is non-negative; the claim is garbled"),
            om(0.0, ("all", 0.0), VERIFIED, tol=1e-9),
        ],
    ),
    entry(
        "yao-liu-n9",
        _yao_liu_n9,
        bounds=(-5.12, 5.12),
        dim=("scalable", 1),
        props="C D S SC M",
        optima=[om(0.0, ("all", 0.0), BOTH, tol=1e-9)],
        notes=("the prose describes an absolute-difference function; the printed rastrigin sum is kept",),
    ),
    entry(
        "zakharov",
        _zakharov,
        bounds=(-5.0, 10.0),
        dim=("scalable", 1),
        props="C D NS SC M",
        optima=[om(0.0, ("all", 0.0), BOTH, tol=1e-9)],
        notes=("the final exponent is printed as 4n; the usual form uses 4 — the printed form stands",),
    ),
    entry(
        "zero-sum",
        _zero_sum,
        bounds=(-10.0, 10.0),
        dim=("scalable", 1),
        props=PropertySet(continuous=False, differentiable=False, separable=False, scalable=True, modality="multimodal"),
        optima=[om(0.0, ("all", 0.0), BOTH, tol=1e-9, note="any zero-sum point attains 0")],
        notes=("the penalty branch sums |x_i| as printed; the usual form uses |sum x_i|",),
    ),
    entry(
        "zettl",
        _zettl,
        bounds=(-1.0, 5.0),
        dim=2,
        props="C D NS NSC M",
        optima=[om(-0.003791, (-0.0299, 0.0), BOTH, tol=1e-4)],
    ),
    entry(
        "zettl-variant",
        _zettl_variant,
        bounds=(-5.0, 5.0),
        dim=2,
        props="C D NS NSC M",
        optima=[om(0.0, (0.0, 0.0), PAPER_CLAIMED, note="evaluates to -1 at the stated point")],
    ),
    entry(
        "zoom",
        _zoom,
        bounds=(-5.0, 5.0),
        dim=2,
        props="C D NS NSC M",
    ),
]
