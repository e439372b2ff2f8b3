"""Two-qubit joint states and the beam-splitter coincidence measurement.

Basis ordering throughout is |00>, |01>, |10>, |11| (first qubit = Alice's
photon, second = Bob's).  A symmetric beam splitter followed by coincidence
detection acts as a discriminator between the singlet Bell state

    |Psi-> = (|01> - |10>) / sqrt(2)

and everything orthogonal to it: only the antisymmetric component makes the
two photons leave through different ports.  An ideal apparatus therefore
fires a coincidence with probability |<Psi-|s>|^2.  Real interference is
imperfect; a dip depth d < 1 and a relative arrival delay tau wash the
measurement out toward the fully distinguishable limit 1/2:

    P(coincidence) = (1 - d_eff)/2 + d_eff * |<Psi-|s>|^2,
    d_eff = d * exp(-(tau/tau_c)^2).

At d_eff = 1 this is the ideal Bell discriminator, at d_eff = 0 the photons
are fully distinguishable and coincidences occur half the time regardless of
state; for a product state |a>|b> it reduces to (1 - d_eff * |<a|b>|^2)/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .qstate import BlochState

BASIS_LABELS = ("00", "01", "10", "11")


@dataclass(frozen=True)
class TwoQubitState:
    """Normalized amplitudes over the ordered basis |00>, |01>, |10>, |11>."""

    amplitudes: tuple[complex, complex, complex, complex]

    def __post_init__(self):
        norm = sum(abs(a) ** 2 for a in self.amplitudes)
        if abs(norm - 1.0) > 1e-12:
            raise ValueError(f"amplitudes must be normalized, got |s|^2 = {norm}")

    def _norm_sq(self) -> float:
        return sum(abs(a) ** 2 for a in self.amplitudes)


class PauliOp(Enum):
    I = "I"
    X = "X"
    Y = "Y"
    Z = "Z"

    @property
    def matrix(self) -> np.ndarray:
        return _PAULI_MATRICES[self.value]


_PAULI_MATRICES = {
    "I": np.array([[1, 0], [0, 1]], dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


@dataclass(frozen=True)
class CoincidenceModel:
    """Experimental imperfection: dip depth d in [0, 1], coherence time tau_c > 0.

    d is the fractional suppression of coincidences at zero delay for
    identical input states; tau_c sets the width of the Gaussian delay
    envelope (order lambda^2 / (c * filter bandwidth) for filtered
    down-conversion light, about a picosecond here).
    """

    d: float
    tau_c: float = 1e-12

    def __post_init__(self):
        if not 0.0 <= self.d <= 1.0:
            raise ValueError(f"dip depth must lie in [0, 1], got {self.d}")
        if not self.tau_c > 0.0:
            raise ValueError(f"coherence time must be positive, got {self.tau_c}")

    def effective_dip(self, delay: float) -> float:
        return self.d * math.exp(-((delay / self.tau_c) ** 2))


IDEAL_MODEL = CoincidenceModel(d=1.0)


def product_state(a: BlochState, b: BlochState) -> TwoQubitState:
    """Tensor product |a> x |b> of two single-photon polarization states."""
    a0, a1 = a.amplitudes()
    b0, b1 = b.amplitudes()
    return TwoQubitState((a0 * b0, a0 * b1, a1 * b0, a1 * b1))


def bell_singlet() -> TwoQubitState:
    """The singlet |Psi-> = (|01> - |10>)/sqrt(2)."""
    r = 1.0 / math.sqrt(2.0)
    return TwoQubitState((0.0, complex(r), complex(-r), 0.0))


def apply_pauli_pair(s: TwoQubitState, pa: PauliOp, pb: PauliOp) -> TwoQubitState:
    """Apply pa on Alice's qubit and pb on Bob's: (pa x pb) |s>."""
    mat = np.kron(pa.matrix, pb.matrix)
    amps = mat @ np.array(s.amplitudes, dtype=complex)
    return TwoQubitState(tuple(amps))


def singlet_fraction(s: TwoQubitState) -> float:
    """|<Psi-|s>|^2 = |s01 - s10|^2 / 2.

    Normalized by the state's own squared norm so that exact-singlet inputs
    (whose stored amplitudes carry the usual 1/sqrt(2) rounding) return
    exactly 1.0 and states with s01 = s10 return exactly 0.0.
    """
    a = s.amplitudes
    return (abs(a[1] - a[2]) ** 2) / (2.0 * s._norm_sq())


def coincidence_probability(s: TwoQubitState, model: CoincidenceModel, delay: float) -> float:
    """Probability that Roger's detectors fire in coincidence.

    (1 - d_eff)/2 + d_eff * singlet_fraction(s); the no-coincidence outcome
    has the complementary probability.
    """
    d_eff = model.effective_dip(delay)
    return (1.0 - d_eff) / 2.0 + d_eff * singlet_fraction(s)


def dip_curve(
    a: BlochState,
    b: BlochState,
    model: CoincidenceModel,
    delays,
) -> list[tuple[float, float]]:
    """Normalized coincidence rate R/R_max versus relative photon delay.

    R_max is the plateau at infinite delay (probability 1/2 for any product
    state), so R/R_max(tau) = 1 - d * |<a|b>|^2 * exp(-(tau/tau_c)^2).
    """
    delays = list(delays)
    if not delays:
        raise ValueError("delay grid must be non-empty")
    s = product_state(a, b)
    plateau = coincidence_probability(s, model, math.inf)
    return [(float(tau), coincidence_probability(s, model, tau) / plateau) for tau in delays]


def dip_curve_csv(points: list[tuple[float, float]]) -> str:
    """CSV rendering with header `tau_s,relative_rate`."""
    lines = ["tau_s,relative_rate"]
    lines += [f"{tau!r},{rate!r}" for tau, rate in points]
    return "\n".join(lines) + "\n"
