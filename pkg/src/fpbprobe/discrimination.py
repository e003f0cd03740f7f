"""Three-outcome discrimination of the two probe output states.

The measurement interpolates between minimum-error (Helstrom) and
unambiguous (IDP) discrimination of the symmetric pair
|theta_+/-> = (cos theta, +/- sin theta).  It is parametrized by an
auxiliary angle phi in [0, pi/4 - theta]; gamma = theta + phi and
eta = cos(2 gamma) control the inconclusive-outcome weight.  Priors are
fixed at 1/2 each; the measurement is optimal only for that symmetric
case and the API does not accept priors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import linalg
from .probe import ProbeConfig, theta_from_error_rate

QUARTER_PI = 0.25 * math.pi
PHI_SLACK = 1e-12

_EVE_OUTCOMES = ("plus", "minus", "inconclusive")


@dataclass(frozen=True)
class DiscriminationConfig:
    """Angles (theta, phi) selecting one measurement of the family.

    theta = 0 (identical inputs) is allowed: the formulas stay well
    defined (success equals error at the Helstrom end, the inconclusive
    weight reaches 1 at the unambiguous end).
    """

    theta: float
    phi: float

    def __post_init__(self):
        th, ph = float(self.theta), float(self.phi)
        if not (math.isfinite(th) and math.isfinite(ph)):
            raise ValueError("angles must be finite")
        if not 0.0 <= th <= QUARTER_PI + PHI_SLACK:
            raise ValueError(f"theta {th} outside [0, pi/4]")
        if not 0.0 <= ph <= QUARTER_PI - th + PHI_SLACK:
            raise ValueError(f"phi {ph} outside [0, pi/4 - theta]")
        object.__setattr__(self, "theta", th)
        object.__setattr__(self, "phi", ph)

    @classmethod
    def from_error_rate(cls, error_rate: float, xi: float) -> "DiscriminationConfig":
        """Measurement for a probe of given error rate at ratio xi."""
        theta = theta_from_error_rate(ProbeConfig(error_rate))
        return cls(theta, xi_to_phi(xi, theta))

    @property
    def gamma(self) -> float:
        return self.theta + self.phi

    @property
    def eta(self) -> float:
        # The phi slack can push gamma epsilon past pi/4; clamp cos(2 gamma).
        return max(math.cos(2.0 * self.gamma), 0.0)


@dataclass(frozen=True)
class Povm:
    """The three measurement operators {M_+, M_-, M_?} on a qubit."""

    m_plus: np.ndarray
    m_minus: np.ndarray
    m_inconclusive: np.ndarray

    @property
    def elements(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return (self.m_plus, self.m_minus, self.m_inconclusive)

    def completeness_residual(self) -> float:
        """Max-entry deviation of the element sum from the identity."""
        total = self.m_plus + self.m_minus + self.m_inconclusive
        return float(np.abs(total - np.eye(2)).max())

    def psd_floor(self) -> float:
        """Smallest eigenvalue over all three elements."""
        return min(
            float(linalg.hermitian_eigenvalues(m)[-1]) for m in self.elements
        )


@dataclass(frozen=True)
class OutcomeProbs:
    """Average success / error / inconclusive probabilities."""

    q_success: float
    q_error: float
    q_inconclusive: float

    def __post_init__(self):
        vals = (self.q_success, self.q_error, self.q_inconclusive)
        for v in vals:
            if not (math.isfinite(v) and -1e-12 <= v <= 1.0 + 1e-12):
                raise ValueError(f"probability {v} outside [0, 1]")
        if abs(sum(vals) - 1.0) > 1e-12:
            raise ValueError(f"outcome probabilities sum to {sum(vals)}, not 1")


def xi_to_phi(xi: float, theta: float) -> float:
    """Map the characteristic ratio xi in [0, 1] to the angle phi.

    xi = 0 is the unambiguous (IDP) scheme, xi = 1 the Helstrom scheme.
    """
    if not (math.isfinite(xi) and 0.0 <= xi <= 1.0):
        raise ValueError(f"xi {xi} outside [0, 1]")
    if not 0.0 <= theta <= QUARTER_PI + PHI_SLACK:
        raise ValueError(f"theta {theta} outside [0, pi/4]")
    return xi * (QUARTER_PI - theta)


def build_povm(cfg: DiscriminationConfig) -> Povm:
    """Measurement operators for one (theta, phi) configuration."""
    g, eta = cfg.gamma, cfg.eta
    denom = 1.0 + eta
    kp = np.array([math.sin(g), math.cos(g)], dtype=complex)
    km = np.array([math.sin(g), -math.cos(g)], dtype=complex)
    kq = np.array([1.0, 0.0], dtype=complex)
    povm = Povm(
        m_plus=np.outer(kp, kp.conj()) / denom,
        m_minus=np.outer(km, km.conj()) / denom,
        m_inconclusive=(2.0 * eta / denom) * np.outer(kq, kq.conj()),
    )
    if povm.completeness_residual() > 1e-10:
        raise AssertionError("POVM completeness residual exceeds 1e-10")
    return povm


def outcome_probs(cfg: DiscriminationConfig) -> OutcomeProbs:
    """Equal-prior averages (Q_S, Q_E, Q_?) for one configuration."""
    th, ph, eta = cfg.theta, cfg.phi, cfg.eta
    denom = 1.0 + eta
    return OutcomeProbs(
        q_success=math.sin(2.0 * th + ph) ** 2 / denom,
        q_error=math.sin(ph) ** 2 / denom,
        q_inconclusive=2.0 * eta * math.cos(th) ** 2 / denom,
    )


def error_lower_bound(theta: float, q_inconclusive: float) -> float:
    """Least possible error probability at a given inconclusive rate.

    The family built by build_povm saturates this bound for every valid
    (theta, phi).
    """
    if not 0.0 <= theta <= QUARTER_PI + PHI_SLACK:
        raise ValueError(f"theta {theta} outside [0, pi/4]")
    if not 0.0 <= q_inconclusive <= 1.0:
        raise ValueError(f"q_inconclusive {q_inconclusive} outside [0, 1]")
    cos_sq = math.cos(theta) ** 2
    radicand = 1.0 - q_inconclusive / cos_sq
    if radicand < -1e-12:
        raise ValueError("inconclusive rate too large for this theta")
    radicand = max(radicand, 0.0)
    return 0.5 * (
        1.0 - q_inconclusive - math.sin(2.0 * theta) * math.sqrt(radicand)
    )


def _validate_density(rho: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    r = linalg.as_matrix(rho)
    if r.shape != (2, 2):
        raise ValueError(f"density matrix must be 2x2, got {r.shape}")
    if np.abs(r - r.conj().T).max() > tol:
        raise ValueError("density matrix is not Hermitian within tolerance")
    if abs(np.trace(r).real - 1.0) > tol:
        raise ValueError("density matrix trace differs from 1")
    if linalg.hermitian_eigenvalues(r, tol=tol)[-1] < -tol:
        raise ValueError("density matrix is not positive semidefinite")
    return r


def born_probs(p: Povm, rho) -> np.ndarray:
    """(tr(M_+ rho), tr(M_- rho), tr(M_? rho)) for a qubit state rho."""
    r = _validate_density(rho)
    probs = np.array(
        [np.trace(m @ r).real for m in p.elements], dtype=float
    )
    return np.clip(probs, 0.0, None)
