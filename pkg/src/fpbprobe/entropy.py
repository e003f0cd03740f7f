"""Shannon and Renyi information measures over small discrete tables.

All entropies are in bits.  Conditional Renyi entropies come in three
variants (1, 2, 4); each induces an alpha-mutual-information measure
R_alpha(X) - R_alpha(X|Y).  The joint table of interest is the 2x3
distribution over (Bob's error-free sifted bit b', Eve's outcome e') built
from the discrimination triple (Q_S, Q_E, Q_?).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .discrimination import OutcomeProbs

SHANNON_WINDOW = 1e-9
DIST_TOL = 1e-10

B_GIVEN_E = "b_given_e"
E_GIVEN_B = "e_given_b"
_DIRECTIONS = (B_GIVEN_E, E_GIVEN_B)
_VARIANTS = (1, 2, 4)


@dataclass(frozen=True)
class Order:
    """Entropic order: finite alpha > 0, with alpha ~ 1 meaning Shannon.

    Values within 1e-9 of 1 take the Shannon branch, which avoids the
    catastrophic cancellation of the generic formula near alpha = 1.
    math.inf selects the min-entropy.
    """

    value: float

    def __post_init__(self):
        v = float(self.value)
        if math.isnan(v) or v <= 0.0:
            raise ValueError(f"order must be positive or inf, got {self.value!r}")
        object.__setattr__(self, "value", v)

    @property
    def is_shannon(self) -> bool:
        return abs(self.value - 1.0) <= SHANNON_WINDOW

    @property
    def is_infinite(self) -> bool:
        return math.isinf(self.value)

    @classmethod
    def shannon(cls) -> "Order":
        return cls(1.0)

    @classmethod
    def min_entropy(cls) -> "Order":
        return cls(math.inf)

    @classmethod
    def coerce(cls, a) -> "Order":
        return a if isinstance(a, cls) else cls(float(a))

    @classmethod
    def parse(cls, token: str) -> "Order":
        t = token.strip().lower()
        if t in ("inf", "infinity"):
            return cls.min_entropy()
        return cls(float(t))

    def __str__(self) -> str:
        if self.is_infinite:
            return "inf"
        return f"{self.value:g}"


@dataclass(frozen=True)
class Distribution:
    """Probability vector: nonnegative entries summing to 1 within 1e-10."""

    probs: np.ndarray

    def __post_init__(self):
        p = np.asarray(self.probs, dtype=float)
        if p.ndim != 1 or p.size == 0:
            raise ValueError("probs must be a nonempty 1-D array")
        if not np.all(np.isfinite(p)):
            raise ValueError("probabilities must be finite")
        if p.min() < -1e-12:
            raise ValueError(f"negative probability {p.min()}")
        if abs(p.sum() - 1.0) > DIST_TOL:
            raise ValueError(f"probabilities sum to {p.sum()}, not 1")
        object.__setattr__(self, "probs", np.clip(p, 0.0, None))


@dataclass(frozen=True)
class JointDistribution:
    """Joint table over (b', e'): rows index b', columns index e'.

    The canonical table is 2x3 with e' in (0, 1, ?), but any 2-D shape is
    accepted so transposes and generic tables work in the same machinery.
    """

    table: np.ndarray

    def __post_init__(self):
        t = np.asarray(self.table, dtype=float)
        if t.ndim != 2 or t.size == 0:
            raise ValueError("table must be a nonempty 2-D array")
        if not np.all(np.isfinite(t)):
            raise ValueError("joint probabilities must be finite")
        if t.min() < -1e-12:
            raise ValueError(f"negative joint probability {t.min()}")
        if abs(t.sum() - 1.0) > DIST_TOL:
            raise ValueError(f"joint probabilities sum to {t.sum()}, not 1")
        object.__setattr__(self, "table", np.clip(t, 0.0, None))

    def marginal_b(self) -> np.ndarray:
        return self.table.sum(axis=1)

    def marginal_e(self) -> np.ndarray:
        return self.table.sum(axis=0)

    def transposed(self) -> "JointDistribution":
        return JointDistribution(self.table.T)


def _probs(d) -> np.ndarray:
    if isinstance(d, Distribution):
        return d.probs
    return Distribution(np.asarray(d, dtype=float)).probs


def _table(j) -> np.ndarray:
    if isinstance(j, JointDistribution):
        return j.table
    return JointDistribution(np.asarray(j, dtype=float)).table


def _oriented(j, direction: str) -> np.ndarray:
    """Table with the conditioned variable along axis 0."""
    t = _table(j)
    if direction == B_GIVEN_E:
        return t
    if direction == E_GIVEN_B:
        return t.T
    raise ValueError(f"direction must be one of {_DIRECTIONS}, got {direction!r}")


def _neg_plog2p(p: np.ndarray) -> float:
    sup = p[p > 0.0]
    return float(-(sup * np.log2(sup)).sum() + 0.0)  # +0.0 avoids -0.0


def shannon_entropy(d) -> float:
    """-sum p log2 p with 0 log 0 = 0."""
    return _neg_plog2p(_probs(d))


def _renyi_of_array(p: np.ndarray, order: Order) -> float:
    if order.is_shannon:
        return _neg_plog2p(p)
    if order.is_infinite:
        return float(-np.log2(p.max()) + 0.0)
    a = order.value
    sup = p[p > 0.0]
    m = sup.max()
    # Factor out the peak so p**a never underflows the whole sum.
    s = float(((sup / m) ** a).sum())
    return (a * math.log2(m) + math.log2(s)) / (1.0 - a) + 0.0


def renyi_entropy(d, a) -> float:
    """Renyi entropy of the given order; Shannon at 1, min-entropy at inf."""
    return _renyi_of_array(_probs(d), Order.coerce(a))


def binary_entropy(p: float) -> float:
    """h(p) in bits, zero at both endpoints."""
    if not (math.isfinite(p) and 0.0 <= p <= 1.0):
        raise ValueError(f"p {p} outside [0, 1]")
    if p == 0.0 or p == 1.0:
        return 0.0
    return -p * math.log2(p) - (1.0 - p) * math.log2(1.0 - p)


def conditional_std(j, direction: str = B_GIVEN_E) -> float:
    """Standard conditional entropy H(X|Y), conditioning on columns."""
    t = _oriented(j, direction)
    py = t.sum(axis=0)
    total = 0.0
    for y in range(t.shape[1]):
        if py[y] > 0.0:
            total += py[y] * _neg_plog2p(t[:, y] / py[y])
    return total


def conditional_renyi(j, a, variant: int, direction: str = B_GIVEN_E) -> float:
    """Conditional Renyi entropy, one of the three variants.

    Variant 1 averages per-column Renyi entropies and also supports the
    infinite order.  Variant 2 is R_a(X,Y) - R_a(Y), which satisfies the
    chain rule by construction.  Variant 4 moves the column average
    inside the logarithm.  Variants 2 and 4 are undefined at infinite
    order; every variant reduces to the standard conditional entropy at
    order one.
    """
    if variant not in _VARIANTS:
        raise ValueError(f"variant must be one of {_VARIANTS}, got {variant!r}")
    o = Order.coerce(a)
    if o.is_shannon:
        return conditional_std(j, direction)
    t = _oriented(j, direction)
    py = t.sum(axis=0)

    if variant == 1:
        total = 0.0
        for y in range(t.shape[1]):
            if py[y] > 0.0:
                total += py[y] * _renyi_of_array(t[:, y] / py[y], o)
        return total

    if o.is_infinite:
        raise ValueError(f"variant {variant} is undefined at infinite order")
    alpha = o.value

    if variant == 2:
        return _renyi_of_array(t.ravel(), o) - _renyi_of_array(py, o)

    # Variant 4: factor out the largest conditional so the inner powers
    # cannot underflow collectively.
    peak = 0.0
    for y in range(t.shape[1]):
        if py[y] > 0.0:
            peak = max(peak, float(t[:, y].max() / py[y]))
    inner = 0.0
    for y in range(t.shape[1]):
        if py[y] > 0.0:
            cond = t[:, y] / py[y]
            cond = cond[cond > 0.0]
            inner += py[y] * float(((cond / peak) ** alpha).sum())
    return (alpha * math.log2(peak) + math.log2(inner)) / (1.0 - alpha)


def mutual_information(j) -> float:
    """H(X) + H(Y) - H(X,Y)."""
    t = _table(j)
    return (
        _neg_plog2p(t.sum(axis=1))
        + _neg_plog2p(t.sum(axis=0))
        - _neg_plog2p(t.ravel())
    )


def alpha_mutual_information(j, a, variant: int, direction: str = B_GIVEN_E) -> float:
    """R_a(X) - R_a^(variant)(X|Y) with X the conditioned variable."""
    o = Order.coerce(a)
    if o.is_shannon:
        return mutual_information(j)
    px = _oriented(j, direction).sum(axis=1)
    return _renyi_of_array(px, o) - conditional_renyi(j, o, variant, direction)


def joint_from_outcome_probs(q: OutcomeProbs) -> JointDistribution:
    """2x3 joint over (b', e') for a uniform bit and outcome triple q."""
    qs, qe, qq = q.q_success, q.q_error, q.q_inconclusive
    return JointDistribution(0.5 * np.array([[qs, qe, qq], [qe, qs, qq]]))


def _split_log2_power_sum(a: float, x: float, y: float) -> float:
    """log2(x**a + y**a) without underflow, for x, y >= 0, max > 0."""
    hi, lo = (x, y) if x >= y else (y, x)
    tail = (lo / hi) ** a if lo > 0.0 else 0.0
    return a * math.log2(hi) + math.log2(1.0 + tail)


def closed_form_i1(a, q: OutcomeProbs) -> float:
    """Variant-1 alpha-mutual information of the (b', e') table, closed form.

    Accepts finite orders other than 1 and the infinite order (which uses
    the analytic large-alpha limit).  The Shannon order is rejected; use
    closed_form_i_std.  A fully inconclusive measurement returns 0.
    """
    o = Order.coerce(a)
    qs, qe, qq = q.q_success, q.q_error, q.q_inconclusive
    rem = 1.0 - qq
    if rem <= 0.0:
        return 0.0
    if o.is_shannon:
        raise ValueError("order 1 has no variant-specific closed form; use closed_form_i_std")
    if o.is_infinite:
        return rem - rem * math.log2(rem) + rem * math.log2(max(qs, qe))
    alpha = o.value
    log_pow = _split_log2_power_sum(alpha, qs, qe)
    return rem * (
        1.0 - log_pow / (1.0 - alpha) + alpha * math.log2(rem) / (1.0 - alpha)
    )


def closed_form_i_std(q: OutcomeProbs) -> float:
    """Standard mutual information of the (b', e') table, closed form."""
    qs, qe, qq = q.q_success, q.q_error, q.q_inconclusive
    rem = 1.0 - qq

    def xlog2(v: float) -> float:
        return v * math.log2(v) if v > 0.0 else 0.0

    return rem - xlog2(rem) + xlog2(qs) + xlog2(qe)


def shor_preskill_rate(delta: float) -> float:
    """Asymptotic one-way secure-key rate max(1 - 2 h(delta), 0)."""
    if not (math.isfinite(delta) and 0.0 <= delta <= 0.5):
        raise ValueError(f"delta {delta} outside [0, 1/2]")
    return max(1.0 - 2.0 * binary_entropy(delta), 0.0)
