"""Dynamic benchmark functions with drifting state and reproducible noise.

Two objectives share the machinery: a deceptive Gaussian basin whose center
follows a random walk, and a memory-coupled variant whose noise amplitude
feeds back on the recent evaluation history.  The state parameters take one
Gaussian walk step per evaluation, so the landscape shifts as it is probed.

Stream discipline (fixed so runs are replayable): each evaluation first draws
its noise sample, then the walk increments, in that order.  A session is
single-owner; clone via snapshot/restore for concurrent use.
"""

from __future__ import annotations

import hashlib
import json
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .errors import BadDimension, CorruptSnapshot, NonFiniteInput

SNAPSHOT_VERSION = 1
SATURATION_LIMIT = 1e308

DEFAULT_STEP_SIGMA = 0.05
DEFAULT_NOISE_SIGMA = 0.1
DEFAULT_HISTORY_CAPACITY = 32


@dataclass
class DynamicState:
    theta: np.ndarray
    step_sigma: float
    history: deque = field(default_factory=lambda: deque(maxlen=DEFAULT_HISTORY_CAPACITY))
    stream: np.random.Generator = None
    eval_count: int = 0


class DynamicSession:
    """One evolving objective; kind is fixed at construction."""

    def __init__(self, kind, dimension, state, bounds, noise_sigma):
        self.kind = kind
        self.dimension = dimension
        self.state = state
        self.bounds = bounds
        self.noise_sigma = noise_sigma
        self.saturated = False

    @property
    def theta(self):
        return self.state.theta

    @property
    def eval_count(self):
        return self.state.eval_count

    @property
    def history(self):
        return self.state.history

    def noise_amplitude(self):
        """Current noise sigma; for the memory-coupled kind it depends on history."""
        if self.kind == "ddb":
            return self.noise_sigma
        hist = self.state.history
        if hist:
            # divide before summing so saturated history values cannot overflow
            n = len(hist)
            recent = float(sum(f / n for _, f in hist))
        else:
            recent = 0.0
        return self.noise_sigma * (1.0 + abs(np.sin(recent)))


def init_session(
    kind,
    dimension,
    seed,
    step_sigma=DEFAULT_STEP_SIGMA,
    history_capacity=DEFAULT_HISTORY_CAPACITY,
    noise_sigma=DEFAULT_NOISE_SIGMA,
):
    """Fresh session: theta = 0, empty history, eval_count = 0.

    ``noise_sigma`` is the noise standard deviation for the basin kind and the
    base amplitude for the memory-coupled kind; 0 suppresses noise (test mode).
    """
    if kind not in ("ddb", "cddb"):
        raise ValueError(f"unknown session kind: {kind}")
    if kind == "ddb" and dimension < 2:
        raise BadDimension("the basin uses the first two coordinates; dimension must be >= 2")
    if kind == "cddb" and dimension < 1:
        raise BadDimension("dimension must be >= 1")
    if step_sigma < 0:
        raise ValueError("step_sigma must be non-negative")
    if history_capacity < 1:
        raise ValueError("history_capacity must be positive")
    state = DynamicState(
        theta=np.zeros(dimension),
        step_sigma=float(step_sigma),
        history=deque(maxlen=int(history_capacity)),
        stream=np.random.Generator(np.random.PCG64(int(seed))),
    )
    bounds = (np.full(dimension, -5.0), np.full(dimension, 5.0))
    return DynamicSession(kind, int(dimension), state, bounds, float(noise_sigma))


def step_state(session):
    """One random-walk step: theta_i += N(0, step_sigma^2), drawn per coordinate."""
    st = session.state
    if st.step_sigma > 0.0:
        st.theta = st.theta + st.stream.normal(0.0, st.step_sigma, size=session.dimension)
    else:
        # consume the same number of draws so trajectories stay alignable
        st.stream.normal(0.0, 1.0, size=session.dimension)
    return session


def _check_input(session, x):
    x = np.asarray(x, dtype=float)
    if x.shape != (session.dimension,):
        raise BadDimension(f"expected a length-{session.dimension} vector, got {x.shape}")
    if not np.all(np.isfinite(x)):
        raise NonFiniteInput("input contains NaN or infinity")
    return x


def eval_ddb(session, x):
    """Deceptive basin value at x; draws noise, then advances the walk."""
    if session.kind != "ddb":
        raise ValueError("session is not of the basin kind")
    x = _check_input(session, x)
    theta = session.state.theta
    value = (
        np.sin(x[0] + theta[0])
        * np.cos(x[1] + theta[1])
        * np.exp(-float(np.sum((x - theta) ** 2)))
    )
    noise = session.state.stream.normal(0.0, session.noise_sigma) if session.noise_sigma > 0 else (
        session.state.stream.normal(0.0, 1.0) * 0.0
    )
    step_state(session)
    session.state.eval_count += 1
    return float(value + noise)


def _signed_power(base, expo):
    return np.sign(base) * np.abs(base) ** expo


def _abs_power(base, expo):
    b = np.abs(base)
    with np.errstate(over="ignore", divide="ignore"):
        return np.where((b == 0.0) & (expo == 0.0), 1.0, b**expo)


def eval_cddb(session, x):
    """Memory-coupled value at x; noise amplitude depends on the history mean.

    Non-integer powers of negative bases are evaluated sign-preservingly and
    0^0 := 1; overflowing values saturate at +/-1e308 and set the session flag.
    """
    if session.kind != "cddb":
        raise ValueError("session is not of the memory-coupled kind")
    x = _check_input(session, x)
    st = session.state
    theta = st.theta
    n = session.dimension
    with np.errstate(over="ignore", invalid="ignore"):
        cubic = np.sum(theta**3 * x**3)
        waves = np.sum(np.sin(x + theta))
        drifted = np.sum(theta * _signed_power(x, theta + n))
        damping = np.sum(0.1 * _abs_power(x, 2.0 * theta))
        base = float(cubic + waves + drifted + damping)
    if not np.isfinite(base):
        base = float(np.clip(np.nan_to_num(base, nan=0.0, posinf=SATURATION_LIMIT, neginf=-SATURATION_LIMIT), -SATURATION_LIMIT, SATURATION_LIMIT))
        session.saturated = True
    amp = session.noise_amplitude()
    noise = st.stream.normal(0.0, amp) if amp > 0 else st.stream.normal(0.0, 1.0) * 0.0
    value = float(base + noise)
    st.history.append((x.copy(), value))
    step_state(session)
    st.eval_count += 1
    return value


def _hexify(arr):
    return [float(v).hex() for v in np.asarray(arr, dtype=float).ravel()]


def _unhexify(items):
    return np.array([float.fromhex(s) for s in items], dtype=float)


def snapshot(session) -> bytes:
    """Serialize the full session, bit-exact, with an integrity checksum."""
    st = session.state
    payload = {
        "kind": session.kind,
        "dimension": session.dimension,
        "theta": _hexify(st.theta),
        "step_sigma": float(st.step_sigma).hex(),
        "noise_sigma": float(session.noise_sigma).hex(),
        "history_capacity": st.history.maxlen,
        "history": [[_hexify(hx), float(hf).hex()] for hx, hf in st.history],
        "eval_count": st.eval_count,
        "saturated": session.saturated,
        "stream": session.state.stream.bit_generator.state,
    }
    body = json.dumps(payload, sort_keys=True)
    digest = hashlib.sha256(body.encode()).hexdigest()
    blob = json.dumps({"version": SNAPSHOT_VERSION, "sha256": digest, "payload": payload}, sort_keys=True)
    return blob.encode()


def restore(blob: bytes) -> DynamicSession:
    """Rebuild a session that continues the evaluation sequence identically."""
    try:
        outer = json.loads(bytes(blob).decode())
        if outer.get("version") != SNAPSHOT_VERSION:
            raise CorruptSnapshot(f"unsupported snapshot version: {outer.get('version')!r}")
        payload = outer["payload"]
        body = json.dumps(payload, sort_keys=True)
        if hashlib.sha256(body.encode()).hexdigest() != outer["sha256"]:
            raise CorruptSnapshot("checksum mismatch")
        dimension = int(payload["dimension"])
        state = DynamicState(
            theta=_unhexify(payload["theta"]),
            step_sigma=float.fromhex(payload["step_sigma"]),
            history=deque(maxlen=payload["history_capacity"]),
            stream=np.random.Generator(np.random.PCG64()),
        )
        state.stream.bit_generator.state = payload["stream"]
        state.eval_count = int(payload["eval_count"])
        for hx, hf in payload["history"]:
            state.history.append((_unhexify(hx), float.fromhex(hf)))
        bounds = (np.full(dimension, -5.0), np.full(dimension, 5.0))
        session = DynamicSession(
            payload["kind"], dimension, state, bounds, float.fromhex(payload["noise_sigma"])
        )
        session.saturated = bool(payload["saturated"])
        return session
    except CorruptSnapshot:
        raise
    except Exception as exc:
        raise CorruptSnapshot(f"unreadable snapshot: {exc}") from exc
