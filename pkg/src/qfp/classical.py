"""Exact brute-force baselines for classical one-bit fingerprinting.

Model: Alice and Bob hold deterministic bit tables indexed by (message,
shared random value); each sends its single fingerprint bit to Roger, who
sees the ordered bit pair ("cell") and answers "same" (z = 1) or "different".
Sapna adversarially picks the ordered message pair, knows the whole protocol,
but never sees the shared value, which is uniform.  All probabilities here
are exact `Fraction`s.

Strategies are represented by per-message codes c_w = (a_w, b_w): bitmasks of
length n = 2^k holding Alice's and Bob's bit for every shared value.  The
statistics of a pair (x, y) reduce to the four cell counts of (a_x, b_y), so
a whole joint strategy is just a multiset of four codes.

Roger variants:

* pure      -- a deterministic answer per cell.
* mixed     -- an arbitrary answer probability per cell, optimized by an
               exact-rational LP.
* one-sided scoring -- Roger may never err when x = y, which pins his answer
  to "same" on every cell a diagonal pair can produce; randomization
  elsewhere can only hurt, so pure and mixed coincide.  This is the setting
  of the classical shared-randomness bounds this module verifies: the
  success ceiling 2/3 holds for one-sided protocols.  (In the unrestricted
  two-sided game, two shared bits already allow worst-case success 3/4 --
  e.g. Bob copies Alice's distance-2 code but always flips his bit on the
  first shared value, and Roger answers "same" iff the bits agree -- so the
  2/3 bound is specific to one-sided error.)

The k = 2 search space (186M code multisets) is cut down exactly: a value
bound for a subset of codes (same evaluator, fewer constraints) is monotone
non-increasing as codes are added, so pairs and triples that cannot beat the
best known strategy prune the enumeration without any floating-point risk.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

CELL_LABELS = ("00", "01", "10", "11")  # (Alice's bit, Bob's bit)


# ---------------------------------------------------------------------------
# Domain types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SharedRandomnessConfig:
    """Number of shared random bits; enumeration is bounded to k <= 2."""

    k: int

    def __post_init__(self):
        if not 0 <= self.k <= 2:
            raise ValueError(f"supported shared-bit counts are 0, 1, 2; got {self.k}")

    @property
    def num_values(self) -> int:
        return 1 << self.k


@dataclass(frozen=True)
class ClassicalEncoding:
    """Deterministic fingerprint table: bits[w][s] for message w, shared value s."""

    bits: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.bits:
            raise ValueError("empty encoding table")
        width = len(self.bits[0])
        for row in self.bits:
            if len(row) != width:
                raise ValueError("ragged encoding table")
            if any(b not in (0, 1) for b in row):
                raise ValueError("fingerprint bits must be 0 or 1")

    @property
    def m(self) -> int:
        return len(self.bits)

    @property
    def num_shared_values(self) -> int:
        return len(self.bits[0])

    def bit(self, w: int, s: int) -> int:
        return self.bits[w][s]


@dataclass(frozen=True)
class GameValueReport:
    """Best worst-case success with a witness strategy achieving it."""

    best_success: Fraction
    alice: ClassicalEncoding
    bob: ClassicalEncoding
    roger_rule: tuple[Fraction, Fraction, Fraction, Fraction]  # P(z=1 | cell)

    def recompute_success(self) -> Fraction:
        """Re-evaluate the witness directly over all pairs and shared values."""
        m = self.alice.m
        n = self.alice.num_shared_values
        worst = Fraction(1)
        for x in range(m):
            for y in range(m):
                q = Fraction(0)
                for s in range(n):
                    cell = 2 * self.alice.bit(x, s) + self.bob.bit(y, s)
                    q += self.roger_rule[cell]
                q /= n
                success = q if x == y else 1 - q
                worst = min(worst, success)
        return worst

    def to_json_dict(self) -> dict:
        return {
            "best_success": {
                "fraction": str(self.best_success),
                "float": float(self.best_success),
            },
            "alice_table": [list(row) for row in self.alice.bits],
            "bob_table": [list(row) for row in self.bob.bits],
            "roger_rule": {
                label: {"fraction": str(p), "float": float(p)}
                for label, p in zip(CELL_LABELS, self.roger_rule)
            },
        }


# ---------------------------------------------------------------------------
# One-bit baselines without shared randomness
# ---------------------------------------------------------------------------


def wcs_error_one_sided(m: int, g: int) -> Fraction:
    """Worst-case error of the best one-sided deterministic protocol.

    Alice and Bob share one g-bit fingerprint map f; a one-sided Roger must
    answer "same" on every cell (c, c) with c in the image of f and is free
    (optimally "different") elsewhere, so a different pair errs exactly when
    it collides under f.  All maps are enumerated; with m > 2^g every map has
    a colliding pair by pigeonhole and the worst-case error is 1.  For
    m <= 2^g an injective map exists and the error is 0.
    """
    if not 2 <= m <= 8:
        raise ValueError(f"enumeration bounded to 2 <= m <= 8, got m={m}")
    if not 1 <= g <= 2:
        raise ValueError(f"enumeration bounded to 1 <= g <= 2, got g={g}")
    nf = 1 << g
    best = Fraction(1)
    for f in itertools.product(range(nf), repeat=m):
        worst = Fraction(0)
        for x in range(m):
            for y in range(x + 1, m):
                if f[x] == f[y]:
                    worst = Fraction(1)
                    break
            if worst == 1:
                break
        best = min(best, worst)
        if best == 0:
            break
    return best


def min_wcs_error_two_sided(m: int) -> Fraction:
    """Worst-case error of the best two-sided protocol (optimal randomized Roger).

    Alice's and Bob's one-bit tables are enumerated independently.  Each
    message pair lands in exactly one cell, so Roger's optimal answer
    probability is a per-cell one-dimensional minimization: a cell carrying
    both same- and different-pairs costs max(q, 1-q) >= 1/2 (optimum
    q = 1/2); a cell carrying only one kind costs 0.  Any one-bit encoding of
    m >= 3 messages has a conflicted cell (Alice's colliding pair (x, y)
    sends (x, y) to the same cell as (y, y)), hence the 1/2 floor.
    """
    if m not in (2, 3, 4):
        raise ValueError(f"supported message counts are 2, 3, 4; got {m}")
    best = Fraction(1)
    for fa in itertools.product((0, 1), repeat=m):
        for fb in itertools.product((0, 1), repeat=m):
            carries_same = [False] * 4
            carries_diff = [False] * 4
            for x in range(m):
                for y in range(m):
                    cell = 2 * fa[x] + fb[y]
                    if x == y:
                        carries_same[cell] = True
                    else:
                        carries_diff[cell] = True
            conflicted = any(s and d for s, d in zip(carries_same, carries_diff))
            best = min(best, Fraction(1, 2) if conflicted else Fraction(0))
    return best


# ---------------------------------------------------------------------------
# Shared-randomness game: evaluators
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _cell_counts(a: int, b: int, n: int) -> tuple[int, int, int, int]:
    """Cell multiplicities (c00, c01, c10, c11) for Alice mask a, Bob mask b."""
    n11 = (a & b).bit_count()
    na, nb = a.bit_count(), b.bit_count()
    return (n - na - nb + n11, nb - n11, na - n11, n11)


def _set_rows(codeset, n):
    """Diagonal and ordered-cross count rows for a tuple of codes."""
    L = len(codeset)
    diag = tuple(_cell_counts(a, b, n) for a, b in codeset)
    cross = tuple(
        _cell_counts(codeset[i][0], codeset[j][1], n)
        for i in range(L)
        for j in range(L)
        if i != j
    )
    return diag, cross


def _eval_pure(diag, cross, n):
    """Best deterministic rule: max over the 16 cell subsets zeta of the
    worst success, everything in integer units of 1/n."""
    best, best_zeta = -1, 0
    for zeta in range(16):
        worst = n
        for c in diag:
            h = sum(c[cell] for cell in range(4) if (zeta >> cell) & 1)
            worst = min(worst, h)
        for c in cross:
            h = sum(c[cell] for cell in range(4) if (zeta >> cell) & 1)
            worst = min(worst, n - h)
        if worst > best:
            best, best_zeta = worst, zeta
    rule = tuple(Fraction((best_zeta >> cell) & 1) for cell in range(4))
    return Fraction(best, n), rule


def _eval_one_sided(diag, cross, n):
    """One-sided scoring: rule pinned to "same" on every diagonal-reachable
    cell, "different" elsewhere; value is set by the worst different pair."""
    forced = 0
    for c in diag:
        for cell in range(4):
            if c[cell]:
                forced |= 1 << cell
    worst_mass = 0
    for c in cross:
        mass = sum(c[cell] for cell in range(4) if (forced >> cell) & 1)
        worst_mass = max(worst_mass, mass)
    rule = tuple(Fraction(1) if (forced >> cell) & 1 else Fraction(0) for cell in range(4))
    return Fraction(n - worst_mass, n), rule


def _reduce_min(rows):
    """Drop rows componentwise >= another (their >= t constraint is implied)."""
    rows = set(rows)
    return tuple(sorted(
        r for r in rows
        if not any(q != r and all(qq <= rr for qq, rr in zip(q, r)) for q in rows)
    ))


def _reduce_max(rows):
    """Drop rows componentwise <= another (their <= 1-t constraint is implied)."""
    rows = set(rows)
    return tuple(sorted(
        r for r in rows
        if not any(q != r and all(qq >= rr for qq, rr in zip(q, r)) for q in rows)
    ))


def _simplex_max(objective, rows, rhs):
    """Maximize objective . x subject to rows . x <= rhs, x >= 0.

    Dense tableau simplex with Bland's rule, exact Fractions.  All right-hand
    sides here are non-negative, so the slack basis is feasible from the
    start.  Returns (optimal value, x).
    """
    m, nv = len(rows), len(objective)
    tab = [
        [Fraction(v) for v in rows[i]]
        + [Fraction(1 if i == j else 0) for j in range(m)]
        + [Fraction(rhs[i])]
        for i in range(m)
    ]
    obj = [-Fraction(v) for v in objective] + [Fraction(0)] * (m + 1)
    basis = list(range(nv, nv + m))
    while True:
        enter = next((j for j in range(nv + m) if obj[j] < 0), None)
        if enter is None:
            break
        leave, best_ratio = None, None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][-1] / tab[i][enter]
                if best_ratio is None or ratio < best_ratio or (
                    ratio == best_ratio and basis[i] < basis[leave]
                ):
                    leave, best_ratio = i, ratio
        if leave is None:
            raise ArithmeticError("unbounded LP; constraints should box all variables")
        piv = tab[leave][enter]
        tab[leave] = [v / piv for v in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [u - f * w for u, w in zip(tab[i], tab[leave])]
        if obj[enter] != 0:
            f = obj[enter]
            obj = [u - f * w for u, w in zip(obj, tab[leave])]
        basis[leave] = enter
    x = [Fraction(0)] * nv
    for i, b in enumerate(basis):
        if b < nv:
            x[b] = tab[i][-1]
    value = sum(c * v for c, v in zip(objective, x))
    return value, x


@lru_cache(maxsize=None)
def _mixed_lp(diag_key, cross_key, n):
    """max t over per-cell probabilities rho:  diag . rho >= n t,
    cross . rho <= n (1 - t), 0 <= rho <= 1.  Exact."""
    rows, rhs = [], []
    for c in diag_key:
        rows.append((-c[0], -c[1], -c[2], -c[3], n))
        rhs.append(0)
    for c in cross_key:
        rows.append((c[0], c[1], c[2], c[3], n))
        rhs.append(n)
    for i in range(4):
        box = [0] * 5
        box[i] = 1
        rows.append(tuple(box))
        rhs.append(1)
    rows.append((0, 0, 0, 0, 1))
    rhs.append(1)
    value, x = _simplex_max((0, 0, 0, 0, 1), rows, rhs)
    return value, tuple(x[:4])


def _eval_mixed(diag, cross, n):
    value, rho = _mixed_lp(_reduce_min(diag), _reduce_max(cross), n)
    return value, rho


_EVALUATORS = {
    ("pure", "two_sided"): _eval_pure,
    ("mixed", "two_sided"): _eval_mixed,
    ("pure", "one_sided"): _eval_one_sided,
    ("mixed", "one_sided"): _eval_one_sided,
}


# ---------------------------------------------------------------------------
# Shared-randomness game: enumeration drivers
# ---------------------------------------------------------------------------


def _seed_codesets(n):
    """Known-good starting strategies: symmetric codes with spread-out masks."""
    if n == 1:
        return [((0, 0), (0, 0), (1, 1), (1, 1)), ((0, 0), (1, 1), (0, 0), (1, 1))]
    if n == 2:
        return [tuple((w, w) for w in range(4))]
    # Even-weight distance-2 code on four shared values.
    return [tuple((v, v) for v in (0b0000, 0b0011, 0b0101, 0b0110))]


def _best_exhaustive(codes, n, evaluate):
    best_v, best_set, best_rule = Fraction(-1), None, None
    for cs in itertools.combinations_with_replacement(codes, 4):
        diag, cross = _set_rows(cs, n)
        v, rule = evaluate(diag, cross, n)
        if v > best_v:
            best_v, best_set, best_rule = v, cs, rule
    return best_v, best_set, best_rule


def _best_staged(codes, n, evaluate):
    """Exact pruned search over 4-code multisets (used for k = 2).

    The evaluator applied to a subset of the codes upper-bounds the value of
    any multiset containing it, so pairs (and triples) that cannot strictly
    beat the incumbent are discarded.  Multisets with a repeated code are
    covered by the pair bound (a repeat caps the value at 1/2, never above
    the seeds).
    """
    best_v, best_set, best_rule = Fraction(-1), None, None
    for cs in _seed_codesets(n):
        diag, cross = _set_rows(cs, n)
        v, rule = evaluate(diag, cross, n)
        if v > best_v:
            best_v, best_set, best_rule = v, cs, rule

    ncodes = len(codes)
    neighbors = [[] for _ in range(ncodes)]
    for i in range(ncodes):
        for j in range(i, ncodes):
            diag, cross = _set_rows((codes[i], codes[j]), n)
            v, _ = evaluate(diag, cross, n)
            if v > best_v:
                neighbors[i].append(j)
                if j > i:
                    neighbors[j].append(i)

    for c1 in range(ncodes):
        n1 = [j for j in neighbors[c1] if j > c1]
        for c2 in n1:
            adj2 = set(neighbors[c2])
            n2 = [j for j in n1 if j > c2 and j in adj2]
            if not n2:
                continue
            for c3 in n2:
                diag, cross = _set_rows((codes[c1], codes[c2], codes[c3]), n)
                v3, _ = evaluate(diag, cross, n)
                if v3 <= best_v:
                    continue
                adj3 = set(neighbors[c3])
                for c4 in n2:
                    if c4 <= c3 or c4 not in adj3:
                        continue
                    cs = (codes[c1], codes[c2], codes[c3], codes[c4])
                    diag, cross = _set_rows(cs, n)
                    v, rule = evaluate(diag, cross, n)
                    if v > best_v:
                        best_v, best_set, best_rule = v, cs, rule
    return best_v, best_set, best_rule


@lru_cache(maxsize=None)
def best_success_shared_random(
    m: int, k: int, roger: str = "mixed", scoring: str = "one_sided"
) -> GameValueReport:
    """Best worst-case success of classical one-bit fingerprinting with k
    shared random bits, by exact enumeration of joint strategies.

    roger:   "pure" (deterministic cell rule) or "mixed" (optimally
             randomized per cell).
    scoring: "one_sided" (default) forbids errors on equal messages -- the
             regime of the classical shared-randomness bounds, where success
             never exceeds 2/3; "two_sided" scores the unrestricted game.

    The returned report carries exact rationals and a witness strategy whose
    direct re-evaluation reproduces best_success.
    """
    if m != 4:
        raise ValueError(f"enumeration implemented for m = 4, got m={m}")
    if roger not in ("pure", "mixed"):
        raise ValueError(f"roger must be 'pure' or 'mixed', got {roger!r}")
    if scoring not in ("one_sided", "two_sided"):
        raise ValueError(f"scoring must be 'one_sided' or 'two_sided', got {scoring!r}")
    config = SharedRandomnessConfig(k)  # validates k
    n = config.num_values
    evaluate = _EVALUATORS[(roger, scoring)]
    codes = [(a, b) for a in range(1 << n) for b in range(1 << n)]
    if n <= 2:
        best_v, best_set, best_rule = _best_exhaustive(codes, n, evaluate)
    else:
        best_v, best_set, best_rule = _best_staged(codes, n, evaluate)
    alice = ClassicalEncoding(tuple(tuple((a >> s) & 1 for s in range(n)) for a, _ in best_set))
    bob = ClassicalEncoding(tuple(tuple((b >> s) & 1 for s in range(n)) for _, b in best_set))
    return GameValueReport(best_success=best_v, alice=alice, bob=bob, roger_rule=best_rule)
