"""Entropic uncertainty bounds for the three-outcome discrimination POVM.

The POVM is lifted to projective measurements on a qutrit via a family of
extensions carrying one free phase.  Overlap matrices between two
extensions yield measurement uncertainty bounds; optimizing the free
phases gives closed forms in eta = cos(2 gamma).  Submatrix spectral
norms of the optimized overlap matrix feed majorization bounds, and the
whole stack caps Eve's standard mutual information from above.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import linalg
from .discrimination import OutcomeProbs
from .entropy import Distribution, Order, binary_entropy, renyi_entropy, shannon_entropy

TWO_PI = 2.0 * math.pi
DEFAULT_GRID = 720
DEFAULT_REFINE_TOL = 1e-8


@dataclass(frozen=True)
class NaimarkExtension:
    """Orthonormal qutrit basis whose first two coordinates carry the POVM.

    Rows of `basis` are the extended kets for the plus, minus, and
    inconclusive outcomes.  `phase` is the unitary freedom of the
    ancillary direction; it enters only the third components.
    """

    gamma: float
    phase: float
    basis: np.ndarray


@dataclass(frozen=True)
class MajorizationData:
    """Submatrix-norm coefficients and the probability vectors they induce.

    omega = (zeta_1, zeta_2 - zeta_1, ..., 1 - zeta_{d-1}) feeds the
    direct-sum bounds; omega_prime is built the same way from
    xi_k = (1 + zeta_k)^2 / 4 and feeds the tensor-product bounds.
    """

    zeta: tuple[float, ...]
    omega: Distribution
    omega_prime: Distribution


def naimark_basis(gamma: float, phase: float = 0.0) -> NaimarkExtension:
    """Extension basis for the POVM at angle gamma, ancilla phase `phase`.

    gamma = 0 (eta = 1) is included so the eta grid can reach both ends.
    """
    if not (math.isfinite(gamma) and 0.0 <= gamma <= 0.25 * math.pi + 1e-12):
        raise ValueError(f"gamma {gamma} outside [0, pi/4]")
    if not math.isfinite(phase):
        raise ValueError("phase must be finite")
    phase = phase % TWO_PI
    eta = max(math.cos(2.0 * gamma), 0.0)
    root = math.sqrt(1.0 + eta)
    e = complex(math.cos(phase), math.sin(phase))
    sg, cg = math.sin(gamma), math.cos(gamma)
    w_plus = np.array([sg, cg, math.sqrt(eta) * e]) / root
    w_minus = np.array([sg, -cg, math.sqrt(eta) * e]) / root
    w_inc = np.array([math.sqrt(2.0 * eta), 0.0, -math.sqrt(1.0 - eta) * e]) / root
    return NaimarkExtension(gamma=gamma, phase=phase, basis=np.array([w_plus, w_minus, w_inc]))


def overlap_matrix(e1: NaimarkExtension, e2: NaimarkExtension) -> np.ndarray:
    """Unitary matrix of overlaps <w_i(phase1)|w_j(phase2)>."""
    if abs(e1.gamma - e2.gamma) > 1e-12:
        raise ValueError("extensions must share the same gamma")
    return e1.basis.conj() @ e2.basis.T


def s_max(w) -> float:
    """Largest entry modulus."""
    return float(np.abs(linalg.as_matrix(w)).max())


def s_second(w) -> float:
    """Second largest entry modulus, duplicates counted."""
    mods = np.sort(np.abs(linalg.as_matrix(w)).ravel())
    if mods.size < 2:
        raise ValueError("s_second needs at least 2 entries")
    return float(mods[-2])


def _grid_bases(gamma: float, phases: np.ndarray) -> np.ndarray:
    """Stack of extension bases over a phase grid, shape (n, 3, 3)."""
    eta = max(math.cos(2.0 * gamma), 0.0)
    root = math.sqrt(1.0 + eta)
    e = np.exp(1j * phases)
    n = phases.size
    b = np.zeros((n, 3, 3), dtype=complex)
    b[:, 0, 0] = math.sin(gamma)
    b[:, 0, 1] = math.cos(gamma)
    b[:, 0, 2] = math.sqrt(eta) * e
    b[:, 1, 0] = math.sin(gamma)
    b[:, 1, 1] = -math.cos(gamma)
    b[:, 1, 2] = math.sqrt(eta) * e
    b[:, 2, 0] = math.sqrt(2.0 * eta)
    b[:, 2, 2] = -math.sqrt(1.0 - eta) * e
    return b / root


def optimize_s_max(
    eta: float,
    grid_points: int = DEFAULT_GRID,
    refine_tol: float = DEFAULT_REFINE_TOL,
) -> tuple[float, tuple[float, float]]:
    """Minimize the peak overlap over the two free extension phases.

    Exhaustive grid (grid_points per phase) followed by coordinate
    descent down to a phase resolution of refine_tol.  Returns the
    minimized peak overlap and the minimizing phase pair.  The optimum
    certifies the closed form: it equals 1 / mu_factor(eta).
    """
    if not (math.isfinite(eta) and 0.0 <= eta <= 1.0):
        raise ValueError(f"eta {eta} outside [0, 1]")
    gamma = 0.5 * math.acos(min(eta, 1.0))
    phases = np.arange(grid_points) * (TWO_PI / grid_points)
    b = _grid_bases(gamma, phases)
    flat = b.reshape(grid_points * 3, 3)
    overlaps = np.abs(flat.conj() @ flat.T)
    smax_grid = overlaps.reshape(grid_points, 3, grid_points, 3).max(axis=(1, 3))
    k, l = np.unravel_index(np.argmin(smax_grid), smax_grid.shape)
    best_val = float(smax_grid[k, l])
    best = [float(phases[k]), float(phases[l])]

    def evaluate(phi: float, phi_prime: float) -> float:
        w = overlap_matrix(
            naimark_basis(gamma, phi % TWO_PI),
            naimark_basis(gamma, phi_prime % TWO_PI),
        )
        return s_max(w)

    step = TWO_PI / grid_points
    while step > refine_tol:
        moved = False
        for axis in (0, 1):
            for sign in (1.0, -1.0):
                trial = best.copy()
                trial[axis] += sign * step
                val = evaluate(*trial)
                if val < best_val - 1e-15:
                    best_val, best = val, trial
                    moved = True
        if not moved:
            step *= 0.5
    return best_val, (best[0] % TWO_PI, best[1] % TWO_PI)


def mu_factor(eta: float) -> float:
    """Closed-form reciprocal of the optimized peak overlap.

    Three branches with knots at eta = 0.2 and eta = 0.5; adjacent
    branches agree at the knots.
    """
    if not (math.isfinite(eta) and 0.0 <= eta <= 1.0):
        raise ValueError(f"eta {eta} outside [0, 1]")
    if eta <= 0.2:
        return (1.0 + eta) / (1.0 - eta)
    if eta <= 0.5:
        return math.sqrt((2.0 - eta) / (1.0 - eta))
    return math.sqrt((2.0 - eta) / eta)


def mu_bound(eta: float) -> float:
    """Lower bound 2 log2 mu_factor(eta) on conjugate-order entropy sums."""
    return 2.0 * math.log2(mu_factor(eta))


def coles_piani_bound(eta: float) -> float:
    """Improved Shannon-entropy lower bound for the POVM.

    log2 mu_factor(eta) plus a correction active only below eta = 0.2;
    the correction vanishes in the eta -> 0 limit and is taken as 0 at
    the knot itself.
    """
    base = math.log2(mu_factor(eta))
    if 0.0 < eta < 0.2:
        base += (eta / (2.0 * (1.0 + eta))) * math.log2((1.0 - eta) / (4.0 * eta))
    return base


def zeta2_closed_form(eta: float) -> float:
    """Closed form for the class-2 submatrix-norm coefficient."""
    if not (math.isfinite(eta) and 0.0 <= eta <= 1.0):
        raise ValueError(f"eta {eta} outside [0, 1]")
    if eta <= 0.2:
        return math.sqrt(1.0 + 2.0 * eta - 3.0 * eta * eta) / (1.0 + eta)
    if eta <= 0.5:
        return math.sqrt((2.0 - 2.0 * eta) / (2.0 - eta))
    return 1.0 / math.sqrt(2.0 - eta)


def zeta_closed_form(eta: float) -> tuple[float, float, float]:
    """(zeta_1, zeta_2, zeta_3) of the phase-optimized overlap matrix."""
    return (1.0 / mu_factor(eta), zeta2_closed_form(eta), 1.0)


def zeta_coefficients(w, tol: float = 1e-8) -> np.ndarray:
    """Max spectral norm over submatrices of class k, for k = 1..d.

    Submatrices of class k are the r x r' blocks with r + r' = k + 1;
    enumeration is brute force (d <= 4).  Unitarity forces the last
    coefficient to 1.
    """
    mat = linalg.as_matrix(w)
    d = mat.shape[0]
    if mat.shape[0] != mat.shape[1]:
        raise ValueError("overlap matrix must be square")
    if not linalg.is_unitary(mat, tol=tol):
        raise ValueError("overlap matrix is not unitary within tolerance")
    zetas = []
    for k in range(1, d + 1):
        best = 0.0
        for r in range(max(1, k + 1 - d), min(d, k) + 1):
            rp = k + 1 - r
            for rows in combinations(range(d), r):
                for cols in combinations(range(d), rp):
                    sub = mat[np.ix_(rows, cols)]
                    best = max(best, linalg.spectral_norm(sub))
        zetas.append(min(best, 1.0))
    z = np.maximum.accumulate(np.array(zetas))
    if abs(z[-1] - 1.0) > tol:
        raise ValueError(f"zeta_d = {z[-1]} differs from 1; matrix not unitary enough")
    z[-1] = 1.0
    return z


def majorization_data(zeta) -> MajorizationData:
    """Probability vectors omega and omega_prime from a zeta sequence."""
    z = np.asarray(zeta, dtype=float)
    if z.ndim != 1 or z.size < 1:
        raise ValueError("zeta must be a nonempty 1-D sequence")
    if not np.all(np.isfinite(z)):
        raise ValueError("zeta entries must be finite")
    if np.any(np.diff(z) < -1e-9):
        raise ValueError("zeta must be nondecreasing")
    if abs(z[-1] - 1.0) > 1e-8:
        raise ValueError(f"last zeta must be 1, got {z[-1]}")
    z = np.minimum(np.maximum.accumulate(z), 1.0)
    z[-1] = 1.0
    omega = np.diff(z, prepend=0.0)
    xi = ((1.0 + z) ** 2) / 4.0
    omega_prime = np.diff(xi, prepend=0.0)
    return MajorizationData(
        zeta=tuple(float(v) for v in z),
        omega=Distribution(omega),
        omega_prime=Distribution(omega_prime),
    )


def majorization_bound_tensor(md: MajorizationData, a) -> float:
    """Tensor-product bound: half the Renyi entropy of omega_prime."""
    return 0.5 * renyi_entropy(md.omega_prime, a)


def majorization_bound_direct_sum(md: MajorizationData, a) -> float:
    """Direct-sum bound on the POVM Renyi entropy.

    Half the entropy of omega for orders <= 1; for finite orders above 1
    the bound is log2(1/2 + sum(omega^alpha)/2) / (1 - alpha).  Its
    alpha -> inf limit is 0 (the argument of the log tends to 1/2 while
    the prefactor vanishes), so the infinite order returns 0.
    """
    o = Order.coerce(a)
    if o.is_infinite:
        return 0.0
    if o.is_shannon or o.value < 1.0:
        return 0.5 * renyi_entropy(md.omega, o)
    alpha = o.value
    powers = float((md.omega.probs[md.omega.probs > 0.0] ** alpha).sum())
    return math.log2(0.5 + 0.5 * powers) / (1.0 - alpha)


def majorization_entropy_bound(md: MajorizationData, a) -> float:
    """Best applicable majorization bound at the given order.

    Orders <= 1 use half the entropy of omega.  Orders > 1 compare the
    tensor-product and direct-sum forms and return the larger; at the
    infinite order the direct-sum form degenerates to 0, leaving half the
    min-entropy of omega_prime.
    """
    o = Order.coerce(a)
    if o.is_shannon or (not o.is_infinite and o.value < 1.0):
        return 0.5 * renyi_entropy(md.omega, o)
    return max(
        majorization_bound_tensor(md, o),
        majorization_bound_direct_sum(md, o),
    )


def mutual_info_upper_bound(q: OutcomeProbs, eta: float) -> float:
    """Upper bound on the standard mutual information of the (b', e') pair.

    H(E') minus the strongest Shannon-entropy lower bound for the POVM,
    where H(E') = 1 - Q_? + h(Q_?).  Valid whenever q and eta come from
    one discrimination configuration.
    """
    qq = q.q_inconclusive
    h_e = 1.0 - qq + binary_entropy(min(max(qq, 0.0), 1.0))
    md = majorization_data(zeta_closed_form(eta))
    floor = max(coles_piani_bound(eta), 0.5 * shannon_entropy(md.omega))
    return h_e - floor
