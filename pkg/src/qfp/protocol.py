"""The simultaneous-message-passing protocol state machine.

Sapna hands messages x and y to Alice and Bob, who cannot talk to each other
and each forward a single qubit to Roger.  Two variants:

* unentangled -- Alice and Bob encode their message onto a fresh photon using
  the same state mapping; Roger mixes the photons on a symmetric beam
  splitter.  A coincidence (r = 1) proves the states differed, so his pure
  strategy is z = 1 - r.
* entangled -- Alice and Bob share a singlet pair and each apply one of the
  four Pauli operations indexed by their message.  Equal messages leave the
  singlet invariant; different messages map it to another Bell state, which
  never produces a coincidence.  Here a coincidence signals equality: z = r.

Either way Roger may postprocess with the (pi0, pi1) mixed strategy: flip
z* = 1 to 0 with probability pi0 and z* = 0 to 1 with probability pi1.
Roger is correct when z matches the equality predicate [x == y].
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .qstate import BlochState, Encoding, overlap
from .strategy import success_rates
from .twophoton import (
    CoincidenceModel,
    PauliOp,
    TwoQubitState,
    apply_pauli_pair,
    bell_singlet,
    coincidence_probability,
    product_state,
)


@dataclass(frozen=True)
class Message:
    """A message value in {0, ..., m-1}."""

    value: int
    m: int

    def __post_init__(self):
        if self.m < 2:
            raise ValueError(f"message space needs m >= 2, got {self.m}")
        if not 0 <= self.value < self.m:
            raise ValueError(f"message value {self.value} outside [0, {self.m})")


class ProtocolKind(Enum):
    QUANTUM_UNENTANGLED = "quantum"
    QUANTUM_ENTANGLED = "entangled"


@dataclass(frozen=True)
class RogerStrategy:
    """Flip probabilities of Roger's mixed strategy; (0, 0) is the pure strategy."""

    pi0: float = 0.0
    pi1: float = 0.0

    def __post_init__(self):
        if not (0.0 <= self.pi0 <= 1.0 and 0.0 <= self.pi1 <= 1.0):
            raise ValueError(f"flip probabilities must lie in [0, 1], got ({self.pi0}, {self.pi1})")

    @classmethod
    def pure(cls) -> "RogerStrategy":
        return cls(0.0, 0.0)

    @property
    def is_pure(self) -> bool:
        return self.pi0 == 0.0 and self.pi1 == 0.0


@dataclass(frozen=True)
class TrialOutcome:
    x: Message
    y: Message
    r: int  # 1 = coincidence
    z: int  # Roger's answer: 1 = "same"
    correct: bool


@dataclass(frozen=True)
class AnalyticRates:
    p_same_err: float
    p_diff_err: float
    wcs_err: float


# Fixed message -> Pauli convention for the entangled protocol.  Any bijection
# works (only same/different matters), so take the lexicographic one.
_PAULI_BY_MESSAGE = (PauliOp.I, PauliOp.X, PauliOp.Y, PauliOp.Z)


def encode_unentangled(w: Message, enc: Encoding) -> BlochState:
    """Alice's or Bob's state for message w under a shared encoding."""
    if w.m != enc.m:
        raise ValueError(f"message space m={w.m} does not match encoding m={enc.m}")
    return enc.states[w.value]


def encode_entangled(w: Message) -> PauliOp:
    """The Pauli operation a party applies to its half of the singlet."""
    if w.m != 4:
        raise ValueError(f"the entangled protocol encodes two-bit messages (m=4), got m={w.m}")
    return _PAULI_BY_MESSAGE[w.value]


def joint_state(kind: ProtocolKind, x: Message, y: Message, enc: Encoding | None) -> TwoQubitState:
    """The two-photon state arriving at Roger's beam splitter."""
    if kind is ProtocolKind.QUANTUM_UNENTANGLED:
        if enc is None:
            raise ValueError("the unentangled protocol needs an encoding")
        return product_state(encode_unentangled(x, enc), encode_unentangled(y, enc))
    return apply_pauli_pair(bell_singlet(), encode_entangled(x), encode_entangled(y))


def roger_infer(kind: ProtocolKind, r: int, strategy: RogerStrategy, rng) -> int:
    """Roger's answer bit from the coincidence bit r.

    The unentangled initial inference is z* = 1 - r (a coincidence proves the
    messages differ); the entangled one is z* = r (a coincidence certifies
    the singlet, hence equal messages).  One uniform draw is always consumed
    for the flip so that the pure strategy is bitwise identical to
    Mixed(0, 0) on the same random stream.
    """
    if r not in (0, 1):
        raise ValueError(f"coincidence bit must be 0 or 1, got {r}")
    z_star = r if kind is ProtocolKind.QUANTUM_ENTANGLED else 1 - r
    u = rng.random()
    if z_star == 1:
        return 0 if u < strategy.pi0 else 1
    return 1 if u < strategy.pi1 else 0


def run_trial(
    kind: ProtocolKind,
    x: Message,
    y: Message,
    enc: Encoding | None,
    model: CoincidenceModel,
    strategy: RogerStrategy,
    rng,
) -> TrialOutcome:
    """One protocol round at zero delay.

    Consumes exactly two uniforms from `rng`: the coincidence draw, then the
    strategy flip draw.
    """
    if x.m != y.m:
        raise ValueError(f"mismatched message spaces: {x.m} vs {y.m}")
    state = joint_state(kind, x, y, enc)
    p_coin = coincidence_probability(state, model, 0.0)
    r = 1 if rng.random() < p_coin else 0
    z = roger_infer(kind, r, strategy, rng)
    correct = (z == 1) == (x.value == y.value)
    return TrialOutcome(x=x, y=y, r=r, z=z, correct=correct)


def _pure_error_rates(
    kind: ProtocolKind, delta: float, model: CoincidenceModel
) -> tuple[float, float]:
    """(p_same_err, p_diff_err) of the pure strategy, for pair overlap delta."""
    d = model.d
    if kind is ProtocolKind.QUANTUM_UNENTANGLED:
        # same: error iff coincidence fires, P = (1 - d)/2 (delta_same = 1);
        # diff: error iff no coincidence, P = (1 + d*delta)/2.
        return (1.0 - d) / 2.0, (1.0 + d * delta) / 2.0
    # Entangled: equal messages keep the singlet (coincidence prob (1+d)/2),
    # different messages give an orthogonal Bell state (coincidence prob (1-d)/2).
    return (1.0 - d) / 2.0, (1.0 - d) / 2.0


def pair_error_probability(
    kind: ProtocolKind,
    x: Message,
    y: Message,
    enc: Encoding | None,
    model: CoincidenceModel,
    strategy: RogerStrategy,
) -> float:
    """Probability that Roger errs on the specific ordered pair (x, y)."""
    if kind is ProtocolKind.QUANTUM_UNENTANGLED:
        delta = overlap(encode_unentangled(x, enc), encode_unentangled(y, enc))
    else:
        delta = 1.0 if x.value == y.value else 0.0
    p_s, p_d = _pure_error_rates(kind, delta, model)
    s_diff, s_same = success_rates(p_s, p_d, strategy.pi0, strategy.pi1)
    return 1.0 - s_same if x.value == y.value else 1.0 - s_diff


def analytic_rates(
    kind: ProtocolKind,
    enc: Encoding | None,
    model: CoincidenceModel,
    strategy: RogerStrategy,
) -> AnalyticRates:
    """Closed-form error rates; the diff rate is taken at the worst pair."""
    if kind is ProtocolKind.QUANTUM_UNENTANGLED:
        from .qstate import delta_max

        if enc is None:
            raise ValueError("the unentangled protocol needs an encoding")
        delta = delta_max(enc)
    else:
        delta = 0.0
    p_s, p_d = _pure_error_rates(kind, delta, model)
    s_diff, s_same = success_rates(p_s, p_d, strategy.pi0, strategy.pi1)
    same_err, diff_err = 1.0 - s_same, 1.0 - s_diff
    return AnalyticRates(p_same_err=same_err, p_diff_err=diff_err, wcs_err=max(same_err, diff_err))
