"""Catalog definitions, names A through C."""

import numpy as np

from ..errors import DomainError
from .model import (
    BOTH,
    PAPER_CLAIMED,
    VERIFIED,
    entry,
    labels,
    om,
    per_coord_bounds,
    require,
)

E = np.e
PI = np.pi


def _ackley_n1(x, a=20.0, b=0.2, c=2.0 * PI):
    n = x.size
    return float(
        -a * np.exp(-b * np.sqrt(np.sum(x * x) / n))
        - np.exp(np.sum(np.cos(c * x)) / n)
        + a
        + E
    )


def _ackley_n2(x):
    return float(-200.0 * np.exp(-0.2 * np.sqrt(x[0] ** 2 + x[1] ** 2)))


def _ackley_n3(x):
    r = np.sqrt(x[0] ** 2 + x[1] ** 2)
    return float(-200.0 * np.exp(-0.02 * r) + 5.0 * np.exp(np.cos(3.0 * x[0]) + np.sin(3.0 * x[1])))


def _ackleys_path(x):
    n = x.size
    return float(
        -20.0 * np.exp(-0.2 * np.sqrt(np.sum(x * x) / n))
        - np.exp(np.sum(np.cos(2.0 * PI * x)) / n)
        + 20.0
        + E
    )


def _ackley_modified(x):
    inner = 0.5 * (np.sqrt(x[0] ** 2 + x[1] ** 2) + 0.3 * np.cos(2 * PI * x[0]) + 0.3 * np.cos(2 * PI * x[1]))
    require(inner >= 0.0, "ackley-modified", "negative radicand")
    return float(
        -20.0 * np.exp(-0.2 * np.sqrt(inner))
        - np.exp(0.5 * (np.cos(2 * PI * x[0]) + np.cos(2 * PI * x[1])))
        + E
        + 20.0
    )


def _adjiman(x):
    return float(np.cos(x[0]) * np.sin(x[1]) - x[0] / (x[1] ** 2 + 1.0))


def _alpine_n1(x):
    return float(np.sum(np.abs(x * np.sin(x) + 0.1 * x)))


def _alpine_n2(x):
    require(x >= 0.0, "alpine-n2", "sqrt of a negative coordinate")
    return float(np.prod(np.sqrt(x) * np.sin(x)))


def _aluffi_pentini(x):
    return float(0.25 * x[0] ** 4 - 0.5 * x[0] ** 2 + 0.1 * x[0] + 0.5 * x[1] ** 2)


def _attractive_sector(x):
    s = np.where(x > 0.0, 100.0, 1.0)
    return float(np.sum((s * x) ** 2) ** 0.9)


def _axis_parallel_hyper_ellipsoid(x):
    i = np.arange(1, x.size + 1)
    return float(np.sum(i * x * x))


def _bartels_conn(x):
    return float(abs(x[0] ** 2 + x[1] ** 2 + x[0] * x[1]) + abs(np.sin(x[0])) + abs(np.cos(x[1])))


def _beale(x):
    return float(
        (1.5 - x[0] + x[0] * x[1]) ** 2
        + (2.25 - x[0] + x[0] * x[1] ** 2) ** 2
        + (2.625 - x[0] + x[0] * x[1] ** 3) ** 2
    )


def _beale_with_noise(x):
    return float(
        2.25 * (0.66667 * x[0] * x[1] - 0.66667 * x[0] + 1.0) ** 2
        + 5.0625 * (0.44444 * x[0] * x[1] ** 2 - 0.44444 * x[0] + 1.0) ** 2
        + 6.89062 * (0.38095 * x[0] * x[1] ** 3 - 0.38095 * x[0] + 1.0) ** 2
        + 0.5
    )


def _becker_lago_with_decay(x):
    return float(((abs(x[0]) - 5.0) ** 2 + (abs(x[1]) - 5.0) ** 2) * np.exp(-x[0] ** 2 - x[1] ** 2))


def _bent_cigar(x):
    return float(x[0] ** 2 + 1e6 * np.sum(x * x))


def _bent_identity(x):
    r2 = x[0] ** 2 + x[1] ** 2
    return float(np.sqrt(r2) + r2)


def _biggs_t_y(terms=10):
    t = 0.1 * np.arange(1, terms + 1)
    y = np.exp(-t) - 5.0 * np.exp(-10.0 * t)
    return t, y


def _biggs_exp2(x):
    t, y = _biggs_t_y()
    return float(np.sum((np.exp(-t * x[0]) - 5.0 * np.exp(-t * x[1]) - y) ** 2))


def _biggs_exp3(x):
    t, y = _biggs_t_y()
    return float(np.sum((np.exp(-t * x[0]) - x[2] * np.exp(-t * x[1]) - y) ** 2))


def _biggs_exp4(x):
    t, y = _biggs_t_y()
    return float(np.sum((x[2] * np.exp(-t * x[0]) - x[3] * np.exp(-t * x[1]) - y) ** 2))


def _biggs_exp5(x):
    t = 0.1 * np.arange(1, 14)
    y = np.exp(-t) - 5.0 * np.exp(-10.0 * t) + 3.0 * np.exp(-4.0 * t)
    return float(
        np.sum((x[2] * np.exp(-t * x[0]) - x[3] * np.exp(-t * x[1]) + 3.0 * np.exp(-t * x[4]) - y) ** 2)
    )


def _bird(x):
    return float(
        (x[0] - x[1]) ** 2
        + np.exp((1.0 - np.sin(x[0])) ** 2) * np.cos(x[1])
        + np.exp((1.0 - np.cos(x[1])) ** 2) * np.sin(x[0])
    )


def _bird_with_noise(x):
    return _bird(x) + 0.5


def _bohachevsky_n1(x):
    a, b = x[:-1], x[1:]
    return float(
        np.sum(a * a + 2.0 * b * b - 0.3 * np.cos(3 * PI * a) - 0.4 * np.cos(4 * PI * b) + 0.7)
    )


def _bohachevsky_n2(x):
    return float(
        x[0] ** 2 + 2.0 * x[1] ** 2 - 0.3 * np.cos(3 * PI * x[0]) * np.cos(4 * PI * x[1]) + 0.3
    )


def _bohachevsky_n3(x):
    return float(x[0] ** 2 + 2.0 * x[1] ** 2 - 0.3 * np.cos(3 * PI * x[0] + 4 * PI * x[1]) + 0.3)


def _booth(x):
    return float((x[0] + 2.0 * x[1] - 7.0) ** 2 + (2.0 * x[0] + x[1] - 5.0) ** 2)


def _boothby(x):
    return float((x[0] + x[1] ** 3 - 7.0) ** 2 + (x[0] ** 2 + 11.0 * x[1] ** 2 - 11.0) ** 2)


def _box_betts(x):
    j = np.arange(1, 11)
    g = np.exp(-0.1 * j * x[0]) - np.exp(-0.1 * j * x[1]) - (np.exp(-0.1 * j) - np.exp(-j)) * x[2]
    return float(np.sum(g * g))


def _bradford(x):
    return float(
        np.sqrt(x[0] ** 2 + x[1] ** 2) + np.sin(x[0] ** 3) ** 2 * np.sin(x[1] ** 3) ** 2
    )


def _branin(x):
    return float(
        (x[1] - 5.1 * x[0] ** 2 / (4 * PI**2) + 5.0 * x[0] / PI - 6.0) ** 2
        + 10.0 * (1.0 - 1.0 / (8 * PI)) * np.cos(x[0])
        + 10.0
    )


def _branin_rcos2(x):
    return float(
        (x[1] - 5.1 * x[0] ** 2 / (4 * PI**2) + 5.0 * x[0] / PI - 6.0) ** 2
        + 10.0 * (1.0 - 1.0 / (8 * PI)) * np.cos(x[0]) * np.cos(x[1])
        + np.log(x[0] ** 2 + x[1] ** 2 + 1.0)
        + 10.0
    )


def _brent(x):
    return float((x[0] + 10.0) ** 2 + (x[1] + 10.0) ** 2 + np.exp(-x[0] ** 2 - x[1] ** 2))


def _brown(x):
    a2, b2 = x[:-1] ** 2, x[1:] ** 2
    return float(np.sum(a2 ** (b2 + 1.0) + b2 ** (a2 + 1.0)))


def _brown_almost_linear(x):
    return float((x[0] - x[1] + 1.0) ** 2 + (x[0] + x[1] - 1.0) ** 2)


def _brown_and_dennis(x):
    t = np.arange(1, 21) / 5.0
    r1 = x[0] + t * x[1] - np.exp(t)
    r2 = x[2] + x[3] * np.sin(t) - np.cos(t)
    return float(np.sum((r1 * r1 + r2 * r2) ** 2))


def _broyden_tridiagonal(x):
    padded = np.concatenate(([0.0], x, [0.0]))
    mid, prev, nxt = padded[1:-1], padded[:-2], padded[2:]
    r = (3.0 - 2.0 * mid) * mid - prev - 2.0 * nxt + 1.0
    return float(np.sum(r * r))


def _bukin_n2(x):
    return float(100.0 * (x[1] - 0.01 * x[0] ** 2 + 1.0) ** 2 + 0.01 * (x[0] + 10.0) ** 2)


def _bukin_n4(x):
    return float(100.0 * x[1] ** 2 + 0.01 * abs(x[0] + 10.0))


def _bukin_n6(x):
    return float(100.0 * np.sqrt(abs(x[1] - 0.01 * x[0] ** 2)) + 0.01 * abs(x[0] + 10.0))


def _three_hump_camel(x):
    return float(
        x[0] ** 6 / 6.0 - 1.05 * x[0] ** 4 + 2.0 * x[0] ** 2 + x[0] * x[1] + x[1] ** 2
    )


def _six_hump_camel(x):
    return float(
        (4.0 * x[1] ** 2 - 4.0) * x[1] ** 2
        + (x[0] ** 4 / 3.0 - 2.1 * x[0] ** 2 + 4.0) * x[0] ** 2
        + x[0] * x[1]
    )


def _carrom_table(x):
    r = np.sqrt(x[0] ** 2 + x[1] ** 2)
    return float(
        -np.exp(2.0 * abs(1.0 - r / PI)) * np.cos(x[0]) ** 2 * np.cos(x[1]) ** 2 / 30.0
    )


def _chameleon(x):
    return float(
        (x[0] ** 2 + x[1] ** 2 - 4.0) ** 2
        - 0.3 * np.cos(3 * PI * x[0])
        - 0.4 * np.cos(4 * PI * x[1])
        + 0.7
    )


def _chen_bird(x):
    return float(
        -0.001 / (0.001**2 + (x[0] - 0.4 * x[1] - 0.1) ** 2)
        - 0.001 / (0.001**2 + (2.0 * x[0] + x[1] - 1.5) ** 2)
    )


def _chen_v(x):
    return float(
        -0.001 / (0.001**2 + (x[0] ** 2 - x[1] ** 2 + 1.0) ** 2)
        - 0.001 / (0.001**2 + (x[0] ** 2 + x[1] ** 2 - 0.5) ** 2)
        - 0.001 / (0.001**2 + (x[0] ** 2 - x[1] ** 2) ** 2)
    )


def _chichinadze(x):
    return float(
        8.0 * np.sin(5.0 * PI * x[0] / 2.0)
        + 10.0 * np.cos(PI * x[0] / 2.0)
        + x[0] ** 2
        - 12.0 * x[0]
        - 0.2**0.5 * np.exp(-0.5 * (x[1] - 0.5) ** 2)
        + 11.0
    )


def _chung_reynolds(x):
    return float(np.sum(x * x) ** 2)


def _chung_reynolds_n2(x):
    return float((x[0] ** 2 + x[1] ** 2) ** 2 - np.cos(x[0]) * np.cos(x[1]))


def _modified_cigar(x):
    return float(x[0] ** 2 + 1e6 * np.sum(x * x) + np.sin(x[0]))


def _clunar(x):
    return float(
        (x[0] ** 2 + x[1] ** 2) ** 2
        + np.sin(3 * PI * x[0]) ** 2 / 50.0
        + np.sin(3 * PI * x[1]) ** 2 / 50.0
    )


def _composition_n1(x):
    from .defs_n_r import _rastrigin
    from .defs_s_z import _sphere, _weierstrass

    return 0.3 * _sphere(x) + 0.4 * _rastrigin(x) + 0.3 * _weierstrass(x)


def _composition_n2(x):
    from .defs_d_g import _griewank
    from .defs_n_r import _rastrigin
    from .defs_s_z import _weierstrass

    return 0.3 * _griewank(x) + 0.3 * _rastrigin(x) + 0.4 * _weierstrass(x)


def _cosine_envelope_sine_wave(x):
    return float(
        -0.1 * np.cos(5 * PI * x[0]) - 0.1 * np.cos(5 * PI * x[1]) + x[0] ** 2 + x[1] ** 2
    )


def _cosine_function(x):
    return float(-np.exp(-((x[0] - PI) ** 2) - (x[1] - PI) ** 2) * np.cos(x[0]) * np.cos(x[1]))


def _cosine_mixture(x):
    return float(-0.1 * np.sum(np.cos(5 * PI * x)) - np.sum(x * x))


def _cosine_root(x):
    return float(-np.cos(x[0]) * np.cos(x[1]) * np.sqrt(abs(x[0] * x[1])))


def _cross_in_tray(x):
    r = np.sqrt(x[0] ** 2 + x[1] ** 2)
    inner = abs(np.sin(x[0]) * np.sin(x[1]) * np.exp(abs(100.0 - r / PI)))
    return float(-0.0001 * (inner + 1.0) ** 0.1)


def _cross_leg(x):
    r = np.sqrt(x[0] ** 2 + x[1] ** 2)
    return float(-abs(np.sin(x[0]) * np.cos(x[1]) * np.exp(abs(100.0 - r / PI))))


def _cross_leg_table(x):
    r = np.sqrt(x[0] ** 2 + x[1] ** 2)
    inner = abs(np.sin(x[0]) * np.sin(x[1]) * np.exp(abs(100.0 - r / PI)))
    return float(-((inner + 1.0) ** -0.1))


def _crowned_cross(x):
    r = np.sqrt(x[0] ** 2 + x[1] ** 2)
    expo = abs(100.0 - r / PI) * abs(np.sin(x[0]) * np.sin(x[1])) + 1.0
    return float(0.0001 * np.exp(0.1 * expo))


def _csendes(x):
    require(x != 0.0, "csendes", "sin(1/x) undefined at x = 0")
    return float(np.sum((np.sin(1.0 / x) + 2.0) * x**6))


def _cube(x):
    return float(100.0 * (x[1] - x[0] ** 3) ** 2 + (1.0 - x[0]) ** 2)


def _cubic_ten(x):
    return float((abs(x[0]) - 10.0) ** 3 + (abs(x[1]) - 10.0) ** 3)


DEFS = [
    entry(
        "ackley-n1",
        _ackley_n1,
        aliases=("ackley",),
        bounds=(-32.768, 32.768),
        dim=("scalable", 1),
        props="C D NS SC M",
        params={"a": 20.0, "b": 0.2, "c": 2.0 * PI},
        optima=[om(0.0, ("all", 0.0), BOTH, tol=1e-9)],
        tier=1,
        notes=(
            "published radical sums the raw coordinates instead of their squares; "
            "the canonical mean-of-squares form is required to reach the stated minimum at 0",
            "alternative published ranges: [-15, 30] and [-5, 5]",
        ),
    ),
    entry(
        "ackley-n2",
        _ackley_n2,
        bounds=(-32.0, 32.0),
        dim=2,
        props="C D NS SC U",
        optima=[om(-200.0, (0.0, 0.0), BOTH, tol=1e-9)],
        notes=("alternative published range: [-5, 5]",),
    ),
    entry(
        "ackley-n3",
        _ackley_n3,
        bounds=(-32.0, 32.0),
        dim=2,
        props="C D S SC U",
        optima=[om(-195.629, (0.6825, -0.3607), BOTH, tol=1e-3, note="mirror minimizer at (-0.6825, -0.3607)")],
        notes=(
            "published decay rate (-0.2) and sign of the trigonometric term miss the "
            "stated minimum; the canonical -0.02 / +5 form is used",
        ),
    ),
    entry(
        "ackleys-path",
        _ackleys_path,
        bounds=(-32.0, 32.0),
        dim=("scalable", 1),
        props="C D NS SC M",
        optima=[om(0.0, ("all", 0.0), VERIFIED, tol=1e-9)],
    ),
    entry(
        "ackley-modified",
        _ackley_modified,
        bounds=(-5.0, 5.0),
        dim=2,
        props="C D NS NSC M",
        notes=("radicand can leave the real domain away from the origin; such points raise DomainError",),
    ),
    entry(
        "adjiman",
        _adjiman,
        bounds=per_coord_bounds((-1, 2), (-1, 1)),
        dim=2,
        props="C D S NSC M",
        optima=[
            om(0.0, (2.0, 1.0), PAPER_CLAIMED, note="does not evaluate to the stated value"),
            om(-2.021807, (2.0, 0.10578), VERIFIED, tol=1e-3),
        ],
        notes=("alternative published range: [-5, 5]",),
    ),
    entry(
        "alpine-n1",
        _alpine_n1,
        aliases=("alpine",),
        bounds=(-10.0, 10.0),
        dim=("scalable", 1),
        props="C D S NSC M",
        optima=[om(0.0, ("all", 0.0), BOTH, tol=1e-9)],
        tier=1,
        notes=('search range printed as "[10, 10]^D"; the symmetric [-10, 10] box is used',),
    ),
    entry(
        "alpine-n2",
        _alpine_n2,
        bounds=(0.0, 10.0),
        dim=("scalable", 1),
        props="C D S SC M",
        optima=[
            om(
                5.6162,
                ("all", 7.9171),
                PAPER_CLAIMED,
                note='published as "f(x*) = 2.8081n"; the product form actually peaks at 2.808^n there',
            )
        ],
        notes=("no search range is published; the conventional [0, 10] box keeps sqrt(x) real",),
    ),
    entry(
        "aluffi-pentini",
        _aluffi_pentini,
        aliases=("zirilli",),
        bounds=(-10.0, 10.0),
        dim=2,
        props="C D S NSC U",
        optima=[om(-0.3523, (-1.0465, 0.0), BOTH, tol=1e-3)],
    ),
    entry(
        "attractive-sector",
        _attractive_sector,
        bounds=(-5.0, 5.0),
        dim=("scalable", 1),
        props="C D NS SC U",
        optima=[om(0.0, ("all", 0.0), VERIFIED, tol=1e-9)],
        notes=(
            "simplified transforms: the oscillation map, rotations, and shift in the "
            "published definition are replaced by identities with x_opt = 0, f_opt = 0",
        ),
    ),
    entry(
        "axis-parallel-hyper-ellipsoid",
        _axis_parallel_hyper_ellipsoid,
        aliases=("weighted-sphere",),
        bounds=(-5.0, 5.0),
        dim=("scalable", 1),
        props="C D S SC U",
        optima=[om(0.0, ("all", 0.0), BOTH, tol=1e-9)],
    ),
    entry(
        "bartels-conn",
        _bartels_conn,
        bounds=(-500.0, 500.0),
        dim=2,
        props="C ND S SC M",
        optima=[om(1.0, (0.0, 0.0), VERIFIED, tol=1e-9)],
    ),
    entry(
        "beale",
        _beale,
        bounds=(-4.5, 4.5),
        dim=2,
        props="C D NS NSC M",
        optima=[om(0.0, (3.0, 0.5), BOTH, tol=1e-9)],
        tier=1,
        notes=("alternative published range: [-10, 10]",),
    ),
    entry(
        "beale-with-noise",
        _beale_with_noise,
        bounds=(-4.5, 4.5),
        dim=2,
        props="C D NS NSC M",
        optima=[om(0.5, (3.0, 0.5), VERIFIED, tol=1e-6)],
        notes=('the "+ 1/2" term is a constant offset as printed, not randomness',),
    ),
    entry(
        "becker-lago-with-decay",
        _becker_lago_with_decay,
        bounds=(-10.0, 10.0),
        dim=2,
        props="C D S NSC M",
        optima=[om(0.0, (5.0, 5.0), BOTH, tol=1e-9, note="also at the three sign-mirrored points")],
    ),
    entry(
        "bent-cigar",
        _bent_cigar,
        bounds=(-100.0, 100.0),
        dim=("scalable", 1),
        props="C D NS SC U",
        optima=[om(0.0, ("all", 0.0), BOTH, tol=1e-9)],
        notes=("the printed sum runs over every coordinate, so the first one is weighted twice",),
    ),
    entry(
        "bent-identity",
        _bent_identity,
        bounds=(-5.0, 5.0),
        dim=2,
        props="C D NS NSC U",
        optima=[om(0.0, (0.0, 0.0), BOTH, tol=1e-9)],
    ),
    entry(
        "biggs-exp2",
        _biggs_exp2,
        bounds=(0.0, 20.0),
        dim=2,
        props="C D NS NSC M",
        optima=[om(0.0, (1.0, 10.0), BOTH, tol=1e-9)],
    ),
    entry(
        "biggs-exp3",
        _biggs_exp3,
        bounds=(0.0, 20.0),
        dim=3,
        props="C D NS NSC M",
        optima=[om(0.0, (1.0, 10.0, 5.0), BOTH, tol=1e-9)],
        notes=('printed coefficient "3x_i" read as the third variable, which the stated minimizer pins down',),
    ),
    entry(
        "biggs-exp4",
        _biggs_exp4,
        bounds=(0.0, 20.0),
        dim=4,
        props="C D NS NSC M",
        optima=[om(0.0, (1.0, 10.0, 1.0, 5.0), BOTH, tol=1e-9)],
    ),
    entry(
        "biggs-exp5",
        _biggs_exp5,
        bounds=(0.0, 20.0),
        dim=5,
        props="C D NS NSC M",
        optima=[om(0.0, (1.0, 10.0, 1.0, 5.0, 4.0), BOTH, tol=1e-9)],
        notes=(
            "published target series prints e^{+10t}; the decaying e^{-10t} is required "
            "for the stated five-variable minimizer, and the stray x_6 is the constant 3",
        ),
    ),
    entry(
        "bird",
        _bird,
        bounds=(-2.0 * PI, 2.0 * PI),
        dim=2,
        props="C D NS NSC M",
        optima=[
            om(-106.7645, (4.7010, 3.1529), BOTH, tol=1e-3, note="second minimizer near (-1.5821, -3.1302)")
        ],
    ),
    entry(
        "bird-with-noise",
        _bird_with_noise,
        bounds=(-2.0 * PI, 2.0 * PI),
        dim=2,
        props="C D NS NSC M",
        optima=[om(-106.2645, (4.7010, 3.1529), VERIFIED, tol=1e-3)],
        notes=('the "+ 1/2" term is a constant offset as printed, not randomness',),
    ),
    entry(
        "bohachevsky-n1",
        _bohachevsky_n1,
        bounds=(-100.0, 100.0),
        dim=("scalable", 2),
        props="C D S NSC M",
        optima=[om(0.0, ("all", 0.0), BOTH, tol=1e-9)],
        notes=("alternative published ranges: [-50, 50] and [-15, 15]",),
    ),
    entry(
        "bohachevsky-n2",
        _bohachevsky_n2,
        bounds=(-100.0, 100.0),
        dim=2,
        props="C D NS NSC M",
        optima=[om(0.0, (0.0, 0.0), BOTH, tol=1e-9)],
    ),
    entry(
        "bohachevsky-n3",
        _bohachevsky_n3,
        bounds=(-100.0, 100.0),
        dim=2,
        props="C D NS NSC M",
        optima=[om(0.0, (0.0, 0.0), BOTH, tol=1e-9)],
    ),
    entry(
        "booth",
        _booth,
        bounds=(-10.0, 10.0),
        dim=2,
        props="C D NS NSC U",
        optima=[om(0.0, (1.0, 3.0), BOTH, tol=1e-9)],
        tier=1,
    ),
    entry(
        "boothby",
        _boothby,
        bounds=(-5.0, 5.0),
        dim=2,
        props="C D NS NSC M",
        optima=[om(13.273, (3.40, 0.005), BOTH, tol=1e-3)],
    ),
    entry(
        "box-betts",
        _box_betts,
        bounds=per_coord_bounds((0.9, 1.2), (9.0, 11.2), (0.9, 1.2)),
        dim=3,
        props="C D NS NSC M",
        optima=[om(0.0, (1.0, 10.0, 1.0), BOTH, tol=1e-9)],
        notes=(
            "published exponent grouping cannot vanish at the stated minimizer; the "
            "canonical ten-term residual form is used",
        ),
    ),
    entry(
        "box-betts-quadratic-sum",
        _box_betts,
        bounds=per_coord_bounds((0.9, 1.2), (9.0, 11.2), (0.9, 1.2)),
        dim=3,
        props="C D NS NSC M",
        optima=[om(0.0, (1.0, 10.0, 1.0), BOTH, tol=1e-9)],
        notes=(
            "published variant multiplies the decay gap instead of subtracting it and so "
            "cannot vanish at (1, 10, 1); resolves to the same canonical residual as box-betts",
        ),
    ),
    entry(
        "bradford",
        _bradford,
        bounds=(0.0, 1.0),
        dim=2,
        props="C D NS NSC M",
        optima=[om(0.0, (0.0, 0.0), VERIFIED, tol=1e-9)],
    ),
    entry(
        "branin",
        _branin,
        bounds=per_coord_bounds((-5.0, 10.0), (0.0, 15.0)),
        dim=2,
        props="C D NS NSC M",
        optima=[
            om(0.3978, (-PI, 12.275), BOTH, tol=1e-3),
            om(0.3978, (PI, 2.275), BOTH, tol=1e-3),
            om(0.3978, (3.0 * PI, 2.475), BOTH, tol=1e-3),
        ],
        notes=('printed linear term "5 x_2 / pi" corrected to the canonical 5 x_1 / pi',),
    ),
    entry(
        "branin-rcos2",
        _branin_rcos2,
        bounds=per_coord_bounds((-5.0, 10.0), (0.0, 15.0)),
        dim=2,
        props="C D S NSC M",
        optima=[om(5.559037, (-3.2, 12.53), BOTH, tol=1e-3)],
        notes=(
            "published form multiplies the cosine product by the log term; the canonical "
            "additive log is required to reach the stated minimum",
            "no range is published; the branin box is reused",
        ),
    ),
    entry(
        "brent",
        _brent,
        bounds=(-10.0, 10.0),
        dim=2,
        props="C D NS NSC U",
        optima=[om(0.0, (-10.0, -10.0), BOTH, tol=1e-9, note="exact value e^{-200}, below double precision")],
    ),
    entry(
        "brown",
        _brown,
        bounds=(-1.0, 4.0),
        dim=("scalable", 2),
        props="C D NS SC U",
        optima=[om(0.0, ("all", 0.0), BOTH, tol=1e-9)],
    ),
    entry(
        "brown-almost-linear",
        _brown_almost_linear,
        bounds=(-0.5, 0.5),
        dim=2,
        props="C D NS SC U",
        optima=[om(0.0, (0.0, 1.0), VERIFIED, tol=1e-9, note="minimizer lies outside the published range")],
    ),
    entry(
        "brown-and-dennis",
        _brown_and_dennis,
        bounds=(-25.0, 25.0),
        dim=4,
        props="C D NS NSC U",
        optima=[
            om(85822.2, (25.0, 5.0, -5.0, -1.0), PAPER_CLAIMED, note="stated point does not reach the stated value"),
            om(85822.2, (-11.5944, 13.2036, -0.4034, 0.2368), VERIFIED, tol=0.1),
        ],
        notes=("no range is published; [-25, 25] encloses the actual minimizer",),
    ),
    entry(
        "broyden-tridiagonal",
        _broyden_tridiagonal,
        bounds=(-1.0, 1.0),
        dim=("scalable", 1),
        props="C D NS SC U",
        optima=[om(0.0, ("all", -1.0), PAPER_CLAIMED, note="the residuals equal -1 at the stated point, not 0")],
        notes=(
            "printed residual drops the diagonal product and the sum of squares; the "
            "canonical tridiagonal residual with zero padding is used",
            "no range is published; [-1, 1] is used",
        ),
    ),
    entry(
        "bukin-n2",
        _bukin_n2,
        bounds=per_coord_bounds((-15.0, -5.0), (-3.0, 3.0)),
        dim=2,
        props="C D NS NSC M",
        optima=[om(0.0, (-10.0, 0.0), BOTH, tol=1e-9, note="only the value is published; location from the canonical form")],
        notes=("published formula repeats x_0 in both terms and cannot reach 0; canonical form used",),
    ),
    entry(
        "bukin-n4",
        _bukin_n4,
        bounds=per_coord_bounds((-15.0, -5.0), (-3.0, 3.0)),
        dim=2,
        props="C ND NS NSC M",
        optima=[om(0.0, (-10.0, 0.0), BOTH, tol=1e-9, note="only the value is published; location from the canonical form")],
        notes=(
            "published formula swaps the roles of the coordinates, putting its root outside "
            "the stated box; canonical orientation used",
        ),
    ),
    entry(
        "bukin-n6",
        _bukin_n6,
        bounds=per_coord_bounds((-15.0, -5.0), (-3.0, 3.0)),
        dim=2,
        props="C D NS NSC M",
        optima=[om(0.0, (-10.0, 1.0), BOTH, tol=1e-9, note="only the value is published; standard minimizer (-10, 1)")],
    ),
    entry(
        "three-hump-camel",
        _three_hump_camel,
        aliases=("camel-three-hump",),
        bounds=(-5.0, 5.0),
        dim=2,
        props="C D NS NSC M",
        optima=[om(0.0, (0.0, 0.0), BOTH, tol=1e-9)],
        tier=1,
        notes=('search range printed as "[5, 5]"; the symmetric box is used',),
    ),
    entry(
        "six-hump-camel",
        _six_hump_camel,
        aliases=("camel-six-hump",),
        bounds=per_coord_bounds((-3.0, 3.0), (-2.0, 2.0)),
        dim=2,
        props="C D NS NSC M",
        optima=[
            om(-1.0316, (0.0898, -0.7126), BOTH, tol=1e-3),
            om(-1.0316, (-0.0898, 0.7126), BOTH, tol=1e-3),
        ],
        notes=(
            'published as "(±0.0898, ±0.7126)" with value 1.0316: the minimizers pair '
            "opposite signs and the value is negative",
        ),
    ),
    entry(
        "carrom-table",
        _carrom_table,
        bounds=(-10.0, 10.0),
        dim=2,
        props="C D NS NSC M",
        optima=[
            om(-24.15682, (9.6461, 9.6461), BOTH, tol=1e-3, note="attained at all four sign combinations"),
            om(-0.09061, (0.0, 0.0), PAPER_CLAIMED, note="the adopted form gives -e^2/30 at the origin"),
        ],
        notes=(
            "published sign and decay direction miss the stated minimum by orders of "
            "magnitude; the canonical -exp(2|1 - r/pi|)/30 form is used",
        ),
    ),
    entry(
        "chameleon",
        _chameleon,
        bounds=(0.0, 16.49),
        dim=2,
        props="C D NS NSC M",
        optima=[om(0.0003, (0.005, 2.0), BOTH, tol=1e-3)],
    ),
    entry(
        "chen-bird",
        _chen_bird,
        bounds=(-500.0, 500.0),
        dim=2,
        props="C D NS NSC M",
        optima=[
            om(2000.0, (-0.3888, -0.7222), PAPER_CLAIMED, note="signs garbled in the published claim"),
            om(-2000.0, (7.0 / 18.0, 13.0 / 18.0), VERIFIED, tol=1e-6),
        ],
    ),
    entry(
        "chen-v",
        _chen_v,
        bounds=(-500.0, 500.0),
        dim=2,
        props="C D NS NSC M",
        optima=[
            om(2000.0, (0.3888, 0.7222), PAPER_CLAIMED, note="sign garbled in the published claim"),
            om(-2000.001, (0.5, 0.5), VERIFIED, tol=1e-2),
        ],
    ),
    entry(
        "chichinadze",
        _chichinadze,
        bounds=(-30.0, 30.0),
        dim=2,
        props="C D S NSC M",
        optima=[om(-42.9443, (6.1898, 0.5), BOTH, tol=1e-3)],
    ),
    entry(
        "chung-reynolds",
        _chung_reynolds,
        bounds=(-10.0, 10.0),
        dim=("scalable", 1),
        props="C D S SC U",
        optima=[om(0.0, ("all", 0.0), BOTH, tol=1e-9)],
        notes=(
            "general form printed as a sum of fourth powers; the printed two-dimensional "
            "reduction (x0^2 + x1^2)^2 pins the square-of-sum reading",
        ),
    ),
    entry(
        "chung-reynolds-n2",
        _chung_reynolds_n2,
        bounds=(-10.0, 10.0),
        dim=2,
        props="C D NS NSC M",
        optima=[om(-1.0, (0.0, 0.0), VERIFIED, tol=1e-9)],
        notes=("no range is published; the base variant's box is reused",),
    ),
    entry(
        "modified-cigar",
        _modified_cigar,
        bounds=(-10.0, 10.0),
        dim=("scalable", 1),
        props="C D NS SC M",
        optima=[om(0.0, ("all", 0.0), BOTH, tol=1e-6, note="the sine term shifts the true minimum by about -2.5e-7")],
    ),
    entry(
        "clunar",
        _clunar,
        bounds=(0.0, 64.0),
        dim=2,
        props="C D S NSC M",
        optima=[
            om(8.92e-5, (0.005, 0.005), PAPER_CLAIMED, note="grid artifact; the exact minimum sits at the origin"),
            om(0.0, (0.0, 0.0), VERIFIED, tol=1e-9),
        ],
    ),
    entry(
        "cola",
        None,
        bounds=(-4.0, 4.0),
        dim=2,
        props="C D S NSC M",
        optima=[om(11.7464, None, PAPER_CLAIMED)],
        tier=3,
        tier3_reason="the pairwise targets r_ij and d_ij are never defined in the transcription",
    ),
    entry(
        "composition-n1",
        _composition_n1,
        bounds=(-5.0, 5.0),
        dim=("scalable", 1),
        props="C D NS SC M",
        optima=[om(0.0, ("all", 0.0), VERIFIED, tol=1e-9)],
        notes=("weights 0.3/0.4/0.3 over sphere, rastrigin, and weierstrass, exactly as published",),
    ),
    entry(
        "composition-n2",
        _composition_n2,
        bounds=(-5.0, 5.0),
        dim=("scalable", 1),
        props="C D NS SC M",
        optima=[om(0.0, ("all", 0.0), VERIFIED, tol=1e-9)],
        notes=("weights 0.3/0.3/0.4 over griewank, rastrigin, and weierstrass, exactly as published",),
    ),
    entry(
        "corana",
        None,
        bounds=(-100.0, 100.0),
        dim=4,
        props=labels("SC M"),
        optima=[om(0.0, ("all", 0.0), PAPER_CLAIMED)],
        tier=3,
        tier3_reason=(
            "piecewise definition mixes z_i, v_i, and sgn(z_i^2) with an unexplained "
            "norm-rounding; not reconstructible as printed"
        ),
    ),
    entry(
        "cosine-envelope-sine-wave",
        _cosine_envelope_sine_wave,
        bounds=(-10.0, 10.0),
        dim=2,
        props="C D S NSC M",
        optima=[
            om(-0.199, (0.005, 0.005), PAPER_CLAIMED, note="grid artifact; the exact minimum sits at the origin"),
            om(-0.2, (0.0, 0.0), VERIFIED, tol=1e-9),
        ],
    ),
    entry(
        "cosine-function",
        _cosine_function,
        bounds=(-10.0, 10.0),
        dim=2,
        props="C D NS NSC M",
        optima=[
            om(0.9999, (PI, PI), PAPER_CLAIMED, note="published value drops the sign"),
            om(-1.0, (PI, PI), VERIFIED, tol=1e-9),
        ],
        notes=("identical body to easom; registered as printed", "no range is published; [-10, 10] is used"),
    ),
    entry(
        "cosine-mixture",
        _cosine_mixture,
        bounds=(-1.0, 1.0),
        dim=("scalable", 1),
        props="NC ND NS M",
        optima=[
            om(-0.2, ("all", 0.0), BOTH, dim=2, tol=1e-9, note='published as "-0.1N"; the box walls reach -0.9N')
        ],
        notes=('labeled "Non-continuous, Non-differentiable" although the formula is analytic',),
    ),
    entry(
        "cosine-mixture-n2",
        _cosine_mixture,
        bounds=(-1.0, 1.0),
        dim=("scalable", 1),
        props="C D NS M",
        optima=[
            om(0.2, None, PAPER_CLAIMED, dim=2, note="published without the sign; f(0) = -0.2 at n = 2"),
            om(0.4, None, PAPER_CLAIMED, dim=4, note="published without the sign; f(0) = -0.4 at n = 4"),
            om(-0.2, ("all", 0.0), VERIFIED, tol=1e-9, dim=2),
        ],
        notes=("second catalog appearance of the same cosine-mixture body; registered as printed",),
    ),
    entry(
        "cosine-root",
        _cosine_root,
        bounds=(-2.0 * PI, 2.0 * PI),
        dim=2,
        props="C ND NS NSC M",
        optima=[
            om(
                -6.283185307179586,
                (-6.2831, -6.2831),
                BOTH,
                tol=1e-3,
                note="published value 6.283 lacks the sign",
            )
        ],
        notes=("no search range is published; the box implied by the stated minimizer is used",),
    ),
    entry(
        "cross-in-tray",
        _cross_in_tray,
        bounds=(-15.0, 15.0),
        dim=2,
        props="C ND NS NSC M",
        optima=[om(-2.06261, (1.34941, 1.34941), BOTH, tol=1e-3, note="attained at all four sign combinations")],
        tier=1,
        notes=(
            "published formula (sin of the product, /pi grouping, +1 offset) cannot reach "
            "the stated value; the canonical resolved form is used",
        ),
    ),
    entry(
        "cross-leg",
        _cross_leg,
        bounds=(-10.0, 10.0),
        dim=2,
        props="C ND NS NSC M",
        optima=[om(-9.56e42, (0.752, 0.752), PAPER_CLAIMED, note="order-of-magnitude claim near the stated point")],
        notes=("no range is published; [-10, 10] is used",),
    ),
    entry(
        "cross-leg-table",
        _cross_leg_table,
        bounds=(-10.0, 10.0),
        dim=2,
        props="C ND NS NSC M",
        optima=[om(-1.0, (0.0, 0.0), BOTH, tol=1e-9, note="any zero of sin*sin attains -1; only the value is published")],
        notes=("published grouping has poles where the inner expression hits -1; the canonical absolute-value form is used",),
    ),
    entry(
        "crowned-cross",
        _crowned_cross,
        bounds=(-10.0, 10.0),
        dim=2,
        props="C ND NS NSC M",
        optima=[om(0.0001, (0.0, 0.0), BOTH, tol=1e-3, note="attained value is 0.0001*e^0.1")],
    ),
    entry(
        "csendes",
        _csendes,
        bounds=(-1.0, 1.0),
        dim=("scalable", 1),
        props="C D S SC M",
        optima=[
            om(0.0, ("all", 0.0), PAPER_CLAIMED, tol=1e-9, note="formula undefined at the claimed minimizer; infimum as x -> 0")
        ],
    ),
    entry(
        "cube",
        _cube,
        bounds=(-10.0, 10.0),
        dim=2,
        props="C D NS NSC U",
        optima=[
            om(0.0, (-1.0, 1.0), PAPER_CLAIMED, note="stated point does not evaluate to 0"),
            om(0.0, (1.0, 1.0), VERIFIED, tol=1e-9),
        ],
    ),
    entry(
        "cubic-ten",
        _cubic_ten,
        bounds=(-10.0, 10.0),
        dim=2,
        props="C D S NSC M",
        optima=[om(0.0, (10.0, 10.0), BOTH, tol=1e-9, note="interior points reach -2000; the claim holds only pointwise")],
    ),
]
