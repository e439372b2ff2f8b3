"""Pure single-qubit states on the Bloch sphere and fingerprint encodings.

A state is parameterized by its polar and azimuthal angles (theta, phi) with
amplitudes

    |Omega> = cos(theta/2) |0> + e^{i phi} sin(theta/2) |1>.

An encoding assigns one such state to each of m messages.  Its figure of
merit is the largest pairwise overlap delta_max = max |<a|b>|^2 over distinct
messages; the smaller it is, the better a referee can tell two different
messages apart.  For m = 4 the optimum is the set of four tetrahedral states
with all pairwise overlaps equal to 1/3.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field

import numpy as np

TWO_PI = 2.0 * math.pi

#: Polar angle of the three non-pole tetrahedral states, 2*acos(1/sqrt(3)).
TETRAHEDRAL_THETA = 2.0 * math.acos(1.0 / math.sqrt(3.0))


@dataclass(frozen=True)
class BlochState:
    """A pure qubit state cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.

    theta must lie in [0, pi] (values outside are rejected, not clamped, so
    caller bugs surface immediately); phi is reduced into [0, 2 pi).
    """

    theta: float
    phi: float

    def __post_init__(self):
        if not (math.isfinite(self.theta) and math.isfinite(self.phi)):
            raise ValueError(f"angles must be finite, got ({self.theta}, {self.phi})")
        if not 0.0 <= self.theta <= math.pi:
            raise ValueError(f"theta must lie in [0, pi], got {self.theta}")
        object.__setattr__(self, "phi", self.phi % TWO_PI)

    def amplitudes(self) -> tuple[complex, complex]:
        """Amplitudes (a0, a1) in the logical basis."""
        half = 0.5 * self.theta
        return complex(math.cos(half)), math.sin(half) * complex(math.cos(self.phi), math.sin(self.phi))

    def bloch_vector(self) -> tuple[float, float, float]:
        """Cartesian unit vector (x, y, z) on the Bloch sphere."""
        st = math.sin(self.theta)
        return (st * math.cos(self.phi), st * math.sin(self.phi), math.cos(self.theta))


def make_state(theta: float, phi: float) -> BlochState:
    """Construct a state, validating theta and reducing phi mod 2 pi."""
    return BlochState(theta, phi)


def overlap(a: BlochState, b: BlochState) -> float:
    """Squared inner product |<a|b>|^2, the indistinguishability of two states.

    Computed from the amplitude expression
        <a|b> = cos(ta/2) cos(tb/2) + e^{i (pb - pa)} sin(ta/2) sin(tb/2),
    which agrees with the Bloch-vector form (1 + a.b)/2 (covered by tests).
    """
    ha, hb = 0.5 * a.theta, 0.5 * b.theta
    rel = b.phi - a.phi
    inner = math.cos(ha) * math.cos(hb) + complex(math.cos(rel), math.sin(rel)) * math.sin(ha) * math.sin(hb)
    return abs(inner) ** 2


@dataclass(frozen=True)
class Encoding:
    """An injective map from messages {0, ..., m-1} to Bloch states."""

    states: tuple[BlochState, ...]

    def __post_init__(self):
        if len(self.states) < 2:
            raise ValueError("an encoding needs at least two messages")
        m = len(self.states)
        for i in range(m):
            for j in range(i + 1, m):
                if overlap(self.states[i], self.states[j]) >= 1.0 - 1e-9:
                    raise ValueError(
                        f"states for messages {i} and {j} coincide (overlap >= 1 - 1e-9); "
                        "the message map must be injective"
                    )

    @property
    def m(self) -> int:
        return len(self.states)


def tetrahedral_encoding() -> Encoding:
    """The four-message encoding onto the vertices of a regular tetrahedron.

    Message 0 sits at the north pole, messages 1..3 at polar angle
    2*acos(1/sqrt(3)) with azimuths 2 pi w / 3.  All six pairwise overlaps
    equal 1/3, the minimum achievable for four single-qubit states.
    """
    states = [BlochState(0.0, 0.0)]
    states += [BlochState(TETRAHEDRAL_THETA, TWO_PI * w / 3.0) for w in (1, 2, 3)]
    return Encoding(tuple(states))


def delta_max(enc: Encoding) -> float:
    """Worst-case pairwise overlap over all unordered pairs of messages."""
    if enc.m < 2:
        raise ValueError("delta_max needs at least two messages")
    return max(
        overlap(enc.states[i], enc.states[j])
        for i in range(enc.m)
        for j in range(i + 1, enc.m)
    )


# ---------------------------------------------------------------------------
# Encoding search: minimize delta_max for a given message count.
# ---------------------------------------------------------------------------


def _pairwise_max_overlap(vecs: np.ndarray) -> float:
    """delta_max for an (m, 3) array of Bloch unit vectors: max (1 + a.b)/2."""
    dots = vecs @ vecs.T
    np.fill_diagonal(dots, -1.0)
    return float((1.0 + dots.max()) / 2.0)


def _vectors_to_states(vecs: np.ndarray) -> tuple[BlochState, ...]:
    out = []
    for x, y, z in vecs:
        r = math.sqrt(x * x + y * y + z * z)
        theta = math.acos(min(1.0, max(-1.0, z / r)))
        phi = math.atan2(y, x) % TWO_PI
        out.append(BlochState(theta, phi))
    return tuple(out)


def _states_to_vectors(states) -> np.ndarray:
    return np.array([s.bloch_vector() for s in states])


def _ring_layout(m: int, theta: float, with_pole: bool) -> np.ndarray:
    """m unit vectors: optionally one pole plus a ring of equally spaced states."""
    ring = m - 1 if with_pole else m
    vecs = []
    if with_pole:
        vecs.append((0.0, 0.0, 1.0))
    for j in range(ring):
        phi = TWO_PI * j / ring
        vecs.append((math.sin(theta) * math.cos(phi), math.sin(theta) * math.sin(phi), math.cos(theta)))
    return np.array(vecs)


def _refine_ring(m: int, with_pole: bool) -> np.ndarray:
    """Best ring layout: dense scan of the ring's polar angle, then golden refine."""
    f = lambda t: _pairwise_max_overlap(_ring_layout(m, t, with_pole))
    grid = np.linspace(1e-3, math.pi, 2001)
    values = [f(t) for t in grid]
    i = int(np.argmin(values))
    lo = grid[max(0, i - 1)]
    hi = grid[min(len(grid) - 1, i + 1)]
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c, d = b - invphi * (b - a), a + invphi * (b - a)
    fc, fd = f(c), f(d)
    while b - a > 1e-13:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = f(d)
    return _ring_layout(m, 0.5 * (a + b), with_pole)


def _polish(vecs: np.ndarray) -> np.ndarray:
    """Deterministic Nelder-Mead polish on the flattened vector coordinates.

    The objective renormalizes rows, so the simplex walks an unconstrained
    parameterization of the sphere product.
    """
    from scipy.optimize import minimize

    m = vecs.shape[0]

    def objective(flat):
        v = flat.reshape(m, 3)
        norms = np.linalg.norm(v, axis=1, keepdims=True)
        if np.any(norms < 1e-9):
            return 2.0
        return _pairwise_max_overlap(v / norms)

    res = minimize(objective, vecs.ravel(), method="Nelder-Mead",
                   options={"maxiter": 6000, "fatol": 1e-15, "xatol": 1e-12})
    v = res.x.reshape(m, 3)
    v /= np.linalg.norm(v, axis=1, keepdims=True)
    return v if _pairwise_max_overlap(v) < _pairwise_max_overlap(vecs) else vecs


def search_encoding(m: int, iterations: int, seed: int) -> Encoding:
    """Minimize delta_max over m-state encodings by seeded stochastic descent.

    Starts from deterministic ring layouts (pole-plus-ring and pure ring, each
    with the ring angle refined in one dimension) plus random configurations,
    runs `iterations` annealed perturbation steps on the best start, and
    finishes with a deterministic simplex polish.  Output depends only on
    (m, iterations, seed).
    """
    if m < 2:
        raise ValueError("need at least two messages")
    if iterations < 1:
        raise ValueError("iterations must be positive")
    rng = np.random.default_rng(seed)

    starts = [_refine_ring(m, with_pole=True)]
    if m > 2:
        starts.append(_refine_ring(m, with_pole=False))
    for _ in range(4):
        v = rng.normal(size=(m, 3))
        starts.append(v / np.linalg.norm(v, axis=1, keepdims=True))
    best = min(starts, key=_pairwise_max_overlap)
    best_val = _pairwise_max_overlap(best)

    # Annealed local perturbations of one endpoint of the current worst pair.
    current, current_val = best.copy(), best_val
    sigma_hi, sigma_lo = 0.4, 1e-6
    for step in range(iterations):
        sigma = sigma_hi * (sigma_lo / sigma_hi) ** (step / max(1, iterations - 1))
        dots = current @ current.T
        np.fill_diagonal(dots, -1.0)
        i, j = np.unravel_index(np.argmax(dots), dots.shape)
        idx = i if rng.random() < 0.5 else j
        proposal = current.copy()
        proposal[idx] = proposal[idx] + sigma * rng.normal(size=3)
        proposal[idx] /= np.linalg.norm(proposal[idx])
        val = _pairwise_max_overlap(proposal)
        if val < current_val:
            current, current_val = proposal, val
    if current_val < best_val:
        best, best_val = current, current_val

    best = _polish(best)
    return Encoding(_vectors_to_states(best))


# ---------------------------------------------------------------------------
# CSV serialization: header `w,theta,phi`, angles in radians.
# ---------------------------------------------------------------------------


def encoding_to_csv(enc: Encoding) -> str:
    """Serialize as CSV; float repr keeps full precision for exact round-trips."""
    lines = ["w,theta,phi"]
    for w, s in enumerate(enc.states):
        lines.append(f"{w},{s.theta!r},{s.phi!r}")
    return "\n".join(lines) + "\n"


def encoding_from_csv(text: str) -> Encoding:
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise ValueError("empty encoding CSV") from None
    if [h.strip() for h in header] != ["w", "theta", "phi"]:
        raise ValueError(f"expected header 'w,theta,phi', got {','.join(header)!r}")
    states = []
    for row in reader:
        if not row:
            continue
        if len(row) != 3:
            raise ValueError(f"row {len(states)}: expected 3 fields, got {len(row)}")
        w, theta, phi = row
        if int(w) != len(states):
            raise ValueError(f"messages must be consecutive from 0, got w={w}")
        states.append(BlochState(float(theta), float(phi)))
    return Encoding(tuple(states))
