"""Seeded Monte Carlo BB84 sessions with the entangling probe in the channel.

Each trial: Alice draws a basis and a bit, the probe entangles with the
signal through the CNOT, Bob measures in an independently drawn basis and
Eve measures the probe in ``{|w0>, |w3>}``. Trials where Bob's basis
differs from Alice's are sifted away.

Eve guesses bit 0 on ``w3`` and bit 1 on ``w0``. She is scored on the
sifted trials Bob received correctly; on error trials the probe is left in
the bit-independent state ``alpha`` and her outcome carries no information.

Random numbers
--------------
Trial ``i`` of a session with seed ``s`` reads the four 64-bit words of
Philox-4x64 block ``i`` under key ``s`` (numpy's ``Philox``). The draw of a
trial depends only on ``(s, i)``, so results do not depend on how the
trials are chunked or ordered. Word 0 supplies Alice's basis (bit 0),
Alice's bit (bit 1) and Bob's basis (bit 2); word 1 supplies the uniform
variate that selects the joint measurement outcome.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .closed_form import ErrorRate, ErrorRateLike, as_error_rate, renyi_from_success_prob
from .statevec import EVE_W0, EVE_W3, Basis, entangle, joint_outcome_distribution

__all__ = [
    "SessionConfig",
    "SessionStats",
    "UndefinedEstimate",
    "decode",
    "outcome_table",
    "trial_words",
    "simulate_trials",
    "run_session",
    "renyi_estimate_from_counts",
]

MAX_SEED = 2**64 - 1
CHUNK = 1 << 18


class UndefinedEstimate(ValueError):
    """Raised when an estimate has no events to be computed from."""


@dataclass(frozen=True)
class SessionConfig:
    error_rate: ErrorRate
    trials: int
    seed: int

    def __post_init__(self):
        object.__setattr__(self, "error_rate", as_error_rate(self.error_rate))
        if int(self.trials) != self.trials or self.trials < 1:
            raise ValueError(f"trials must be a positive integer, got {self.trials!r}")
        if int(self.seed) != self.seed or not 0 <= self.seed <= MAX_SEED:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed!r}")
        object.__setattr__(self, "trials", int(self.trials))
        object.__setattr__(self, "seed", int(self.seed))


@dataclass(frozen=True)
class SessionStats:
    """Aggregated counts of one session.

    ``eve_correct`` counts Eve's right guesses among the
    ``error_free_count`` sifted trials without a Bob error. Estimates are
    ``None`` when their denominator is zero.
    """

    sifted_count: int
    bob_errors: int
    eve_correct: int
    disturbance_estimate: Optional[float]
    eve_accuracy_estimate: Optional[float]
    renyi_estimate_bits: Optional[float]

    @property
    def error_free_count(self) -> int:
        return self.sifted_count - self.bob_errors

    @classmethod
    def from_counts(cls, sifted_count: int, bob_errors: int, eve_correct: int) -> "SessionStats":
        sifted_count, bob_errors, eve_correct = int(sifted_count), int(bob_errors), int(eve_correct)
        scored = sifted_count - bob_errors
        disturbance = bob_errors / sifted_count if sifted_count else None
        accuracy = eve_correct / scored if scored else None
        renyi = renyi_estimate_from_counts(eve_correct, scored) if scored else None
        return cls(sifted_count, bob_errors, eve_correct, disturbance, accuracy, renyi)


def decode(eve_w: int) -> int:
    """Map Eve's probe outcome to her guess of the sifted bit."""
    if eve_w == EVE_W3:
        return 0
    if eve_w == EVE_W0:
        return 1
    raise ValueError(f"unknown probe outcome {eve_w!r}")


def outcome_table(e: ErrorRateLike) -> np.ndarray:
    """Joint outcome probabilities for every (Alice basis, Alice bit, Bob basis).

    Shape ``(2, 2, 2, 4)``; the last axis is the flattened ``[bob_bit, eve]``
    distribution, i.e. outcome ``k`` means ``bob_bit = k // 2`` and
    ``eve = k % 2``.
    """
    e = as_error_rate(e)
    table = np.empty((2, 2, 2, 4))
    for a_basis in Basis:
        for a_bit in (0, 1):
            state = entangle(e, a_basis, a_bit)
            for b_basis in Basis:
                table[a_basis, a_bit, b_basis] = joint_outcome_distribution(state, b_basis).ravel()
    return table


def trial_words(seed: int, start: int, count: int) -> np.ndarray:
    """Random words of trials ``start .. start + count - 1``, shape ``(count, 4)``."""
    bitgen = np.random.Philox(key=seed)
    if start:
        bitgen.advance(start)
    return bitgen.random_raw(4 * count).reshape(count, 4)


def simulate_trials(table: np.ndarray, words: np.ndarray) -> dict[str, np.ndarray]:
    """Per-trial outcomes for a block of random words.

    Returns arrays ``alice_basis``, ``alice_bit``, ``bob_basis``, ``bob_bit``
    and ``eve_w``.
    """
    w0 = words[:, 0]
    a_basis = (w0 & 1).astype(np.intp)
    a_bit = ((w0 >> 1) & 1).astype(np.intp)
    b_basis = ((w0 >> 2) & 1).astype(np.intp)
    u = (words[:, 1] >> np.uint64(11)).astype(np.float64) * 2.0**-53

    cum = np.cumsum(table[a_basis, a_bit, b_basis], axis=1)
    outcome = np.minimum((u[:, None] >= cum[:, :3]).sum(axis=1), 3)
    return {
        "alice_basis": a_basis,
        "alice_bit": a_bit,
        "bob_basis": b_basis,
        "bob_bit": outcome // 2,
        "eve_w": outcome % 2,
    }


def _count(trials: dict[str, np.ndarray]) -> tuple[int, int, int]:
    sifted = trials["alice_basis"] == trials["bob_basis"]
    error = sifted & (trials["bob_bit"] != trials["alice_bit"])
    # decode(): w3 -> 0, w0 -> 1
    guess = np.where(trials["eve_w"] == EVE_W3, 0, 1)
    correct = sifted & ~error & (guess == trials["alice_bit"])
    return int(sifted.sum()), int(error.sum()), int(correct.sum())


def run_session(config: SessionConfig, chunk: int = CHUNK) -> SessionStats:
    """Run ``config.trials`` transmissions and aggregate the sifted counts.

    The result depends only on ``config``; ``chunk`` bounds memory use.
    """
    table = outcome_table(config.error_rate)
    sifted = errors = correct = 0
    for start in range(0, config.trials, chunk):
        n = min(chunk, config.trials - start)
        s, er, c = _count(simulate_trials(table, trial_words(config.seed, start, n)))
        sifted += s
        errors += er
        correct += c
    return SessionStats.from_counts(sifted, errors, correct)


def renyi_estimate_from_counts(eve_correct: int, scored_count: int) -> float:
    """Plug-in order-2 Renyi information of Eve's guesses, in bits."""
    if scored_count < 1:
        raise UndefinedEstimate("no scored events: the Renyi estimate is undefined")
    if not 0 <= eve_correct <= scored_count:
        raise ValueError(f"eve_correct={eve_correct} outside [0, {scored_count}]")
    return renyi_from_success_prob(eve_correct / scored_count)
