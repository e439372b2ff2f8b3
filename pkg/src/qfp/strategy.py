"""Roger's mixed-strategy success algebra and the equalizing optimizer.

Roger forms an initial inference z* from the coincidence bit and then flips
it randomly: z* = 1 becomes z = 0 with probability pi0, z* = 0 becomes z = 1
with probability pi1.  Against one-sided error rates p_same_err and
p_diff_err of the underlying pure strategy, his success rates are

    S_diff = pi0 * p_diff_err + (1 - pi1) * (1 - p_diff_err)
    S_same = pi1 * p_same_err + (1 - pi0) * (1 - p_same_err)

for a supplier sending different or equal messages respectively.  The
worst-case-optimal choice equalizes the two, which removes any advantage the
supplier gains from picking one case over the other.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class MixedStrategy:
    """Flip probabilities and the equalized worst-case success they achieve."""

    pi0: float
    pi1: float
    success: float

    def __post_init__(self):
        for name in ("pi0", "pi1", "success"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name} must be a probability, got {v}")


def _check_probability(name: str, v: float) -> None:
    if not 0.0 <= v <= 1.0:
        raise ValueError(f"{name} must lie in [0, 1], got {v}")


def success_rates(p_same_err: float, p_diff_err: float, pi0: float, pi1: float) -> tuple[float, float]:
    """(S_diff, S_same) for the given flip probabilities."""
    for name, v in (("p_same_err", p_same_err), ("p_diff_err", p_diff_err),
                    ("pi0", pi0), ("pi1", pi1)):
        _check_probability(name, v)
    s_diff = pi0 * p_diff_err + (1.0 - pi1) * (1.0 - p_diff_err)
    s_same = pi1 * p_same_err + (1.0 - pi0) * (1.0 - p_same_err)
    return s_diff, s_same


def optimize_mixed(p_same_err: float, p_diff_err: float) -> MixedStrategy:
    """Maximize min(S_diff, S_same) over flip probabilities.

    Randomness is only worth invoking on the error-prone side.  For
    p_diff_err >= p_same_err the optimum keeps pi1 = 0 and equalizes the two
    success rates:

        pi0     = (p_diff_err - p_same_err) / (1 + p_diff_err - p_same_err)
        success = (1 - p_same_err)          / (1 + p_diff_err - p_same_err)

    (set pi0 in S_diff = pi0 p_d + 1 - p_d equal to S_same = (1-pi0)(1-p_s)
    and solve).  The opposite ordering swaps the roles of pi0 and pi1.  Equal
    error rates need no flipping at all.  A grid search over (pi0, pi1)
    serves as the test oracle for this closed form.
    """
    _check_probability("p_same_err", p_same_err)
    _check_probability("p_diff_err", p_diff_err)
    if p_diff_err >= p_same_err:
        gap = p_diff_err - p_same_err
        pi0 = gap / (1.0 + gap)
        success = (1.0 - p_same_err) / (1.0 + gap)
        return MixedStrategy(pi0=pi0, pi1=0.0, success=success)
    gap = p_same_err - p_diff_err
    pi1 = gap / (1.0 + gap)
    success = (1.0 - p_diff_err) / (1.0 + gap)
    return MixedStrategy(pi0=0.0, pi1=pi1, success=success)


def beats_classical(success: float) -> bool:
    """Whether a worst-case success rate exceeds the classical one-bit threshold 0.5."""
    _check_probability("success", success)
    return success > 0.5
