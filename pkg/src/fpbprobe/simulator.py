"""Seeded Monte-Carlo BB84 sessions with the entangling probe.

The simulator is the statistical oracle for the analytic pipeline: it
plays full rounds (random basis and bit at Alice, carrier measurement at
Bob, probe measurement at Eve) and tallies outcomes.

Randomness is counter-based for reproducibility: the bit generator is
Philox4x64 (numpy ``Philox``) keyed by the session seed, with the high
word of the 256-bit counter set to the index of a fixed-size chunk of
rounds.  Each round consumes exactly five uniforms at a deterministic
position inside its chunk, so any round's randomness is a pure function
of (seed, round index) and chunked execution in any order merges to the
same tally as a serial run.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .discrimination import DiscriminationConfig, born_probs, build_povm
from .entropy import JointDistribution, mutual_information
from .probe import MAX_ERROR_RATE, ProbeConfig, theta_from_error_rate

CHUNK_ROUNDS = 1 << 16
DRAWS_PER_ROUND = 5

EVE_OUTCOMES = ("plus", "minus", "inconclusive")
TALLY_AXES = ("basis_match", "bob_correct", "alice_bit", "eve_outcome")


@dataclass(frozen=True)
class SessionConfig:
    """Parameters of one simulated key-distribution session."""

    rounds: int
    error_rate: float
    xi: float
    seed: int

    def __post_init__(self):
        if not (isinstance(self.rounds, int) and self.rounds >= 1):
            raise ValueError(f"rounds must be a positive integer, got {self.rounds!r}")
        if not (
            isinstance(self.error_rate, (int, float))
            and math.isfinite(self.error_rate)
            and 0.0 <= self.error_rate <= MAX_ERROR_RATE
        ):
            raise ValueError(f"error_rate {self.error_rate!r} outside [0, 1/3]")
        if not (
            isinstance(self.xi, (int, float))
            and math.isfinite(self.xi)
            and 0.0 <= self.xi <= 1.0
        ):
            raise ValueError(f"xi {self.xi!r} outside [0, 1]")
        if not (isinstance(self.seed, int) and 0 <= self.seed < 2**64):
            raise ValueError("seed must be a 64-bit unsigned integer")
        object.__setattr__(self, "error_rate", float(self.error_rate))
        object.__setattr__(self, "xi", float(self.xi))

    def discrimination(self) -> DiscriminationConfig:
        return DiscriminationConfig.from_error_rate(self.error_rate, self.xi)


@dataclass
class SessionTally:
    """Counts indexed by (basis_match, bob_correct, alice_bit, eve_outcome)."""

    counts: np.ndarray
    rounds: int

    def __post_init__(self):
        c = np.asarray(self.counts, dtype=np.int64)
        if c.shape != (2, 2, 2, 3):
            raise ValueError(f"counts must have shape (2, 2, 2, 3), got {c.shape}")
        if c.min() < 0:
            raise ValueError("counts must be nonnegative")
        if int(c.sum()) != self.rounds:
            raise ValueError("counts must sum to the number of rounds")
        self.counts = c

    def merged(self, other: "SessionTally") -> "SessionTally":
        return SessionTally(self.counts + other.counts, self.rounds + other.rounds)

    @property
    def matched_rounds(self) -> int:
        return int(self.counts[1].sum())

    @property
    def sifted_error_rounds(self) -> int:
        """Basis-matched rounds in which Bob's bit flipped."""
        return int(self.counts[1, 0].sum())

    @property
    def restricted_counts(self) -> np.ndarray:
        """(alice_bit, eve_outcome) counts over error-free sifted rounds."""
        return self.counts[1, 1]

    def as_dict(self) -> dict:
        return {
            "rounds": self.rounds,
            "index_order": list(TALLY_AXES),
            "eve_outcomes": list(EVE_OUTCOMES),
            "counts": self.counts.tolist(),
        }


def conditional_probe_state(error_rate: float, bit: int, basis_matched: bool, bob_correct: bool) -> np.ndarray:
    """Normalized probe state after Bob's carrier measurement.

    The branch decompositions collapse to four families, none of which
    depends on the sending basis: matched and correct leaves the tagged
    probe state, matched and flipped leaves |->, mismatched outcomes
    leave (c, +/- sqrt(2) s) (correct bit) or |+> (flipped bit).
    """
    cfg = ProbeConfig(error_rate)
    c, s = cfg.amplitudes
    sign = 1.0 if bit == 0 else -1.0
    if basis_matched:
        if bob_correct:
            theta = theta_from_error_rate(cfg)
            return np.array([math.cos(theta), sign * math.sin(theta)], dtype=complex)
        return np.array([0.0, 1.0], dtype=complex)
    if bob_correct:
        vec = np.array([c, sign * math.sqrt(2.0) * s], dtype=complex)
        return vec / math.sqrt(1.0 + 2.0 * error_rate)
    return np.array([1.0, 0.0], dtype=complex)


def _case_tables(cfg: SessionConfig) -> tuple[np.ndarray, np.ndarray]:
    """Eve's cumulative outcome thresholds per case, and Bob's hit rates.

    Case index is bit*4 + basis_match*2 + bob_correct.  The cumulative
    table keeps only the first two thresholds (the third is 1).
    """
    povm = build_povm(cfg.discrimination())
    cum = np.zeros((8, 2), dtype=float)
    for bit in (0, 1):
        for matched in (0, 1):
            for correct in (0, 1):
                tau = conditional_probe_state(cfg.error_rate, bit, bool(matched), bool(correct))
                probs = born_probs(povm, np.outer(tau, tau.conj()))
                cum[bit * 4 + matched * 2 + correct] = np.cumsum(probs)[:2]
    p_correct = np.array([(1.0 + 2.0 * cfg.error_rate) / 2.0, 1.0 - cfg.error_rate])
    return cum, p_correct


def _run_chunk(cfg: SessionConfig, chunk_index: int, n_rounds: int,
               eve_cum: np.ndarray, p_correct: np.ndarray) -> np.ndarray:
    rng = np.random.Generator(np.random.Philox(key=cfg.seed, counter=[0, 0, 0, chunk_index]))
    u = rng.random((n_rounds, DRAWS_PER_ROUND))
    alice_basis = u[:, 0] >= 0.5
    alice_bit = (u[:, 1] >= 0.5).astype(np.int64)
    bob_basis = u[:, 2] >= 0.5
    matched = (alice_basis == bob_basis).astype(np.int64)
    correct = (u[:, 3] < p_correct[matched]).astype(np.int64)
    case = alice_bit * 4 + matched * 2 + correct
    eve = (u[:, 4, None] >= eve_cum[case]).sum(axis=1)
    composite = matched * 12 + correct * 6 + alice_bit * 3 + eve
    return np.bincount(composite, minlength=24).reshape(2, 2, 2, 3)


def run_session(cfg: SessionConfig) -> SessionTally:
    """Play cfg.rounds rounds and tally the outcomes.

    Deterministic given (config, seed); chunk tallies merge additively,
    so parallel chunk evaluation would reproduce the serial result.
    """
    eve_cum, p_correct = _case_tables(cfg)
    counts = np.zeros((2, 2, 2, 3), dtype=np.int64)
    full, rest = divmod(cfg.rounds, CHUNK_ROUNDS)
    for chunk in range(full):
        counts += _run_chunk(cfg, chunk, CHUNK_ROUNDS, eve_cum, p_correct)
    if rest:
        counts += _run_chunk(cfg, full, rest, eve_cum, p_correct)
    return SessionTally(counts, cfg.rounds)


def empirical_joint(t: SessionTally) -> JointDistribution:
    """Normalized (b', e') table over error-free sifted rounds.

    Eve's outcomes map to bit guesses by their success/error labels:
    plus guesses 0, minus guesses 1, inconclusive stays inconclusive.
    """
    sub = t.restricted_counts
    total = int(sub.sum())
    if total == 0:
        raise ValueError("no error-free sifted rounds in the tally")
    return JointDistribution(sub / total)


def empirical_mutual_information(t: SessionTally) -> float:
    """Plug-in mutual information of the empirical (b', e') table."""
    return mutual_information(empirical_joint(t))
