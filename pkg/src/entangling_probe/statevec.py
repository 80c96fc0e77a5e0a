"""Two-qubit state-vector model of the probe attack.

The signal qubit is the CNOT control and the probe qubit is the target.
Joint states are real arrays of length 4 over the ordered product basis::

    index   0        1        2        3
    basis   |e0 w0>  |e0 w3>  |e1 w0>  |e1 w3>

i.e. ``np.kron(signal, probe)``. The probe starts in ``A2(E)`` and a single
CNOT entangles it with the signal.

The four BB84 signal states sit at angles ``pi/8``, ``5pi/8`` (basis B0)
and ``-pi/8``, ``3pi/8`` (basis B1) from ``|e0>``. For these angles each
signal is flipped with probability exactly ``E``.
"""

from __future__ import annotations

import enum
import math

import numpy as np

from .closed_form import ErrorRateLike, ProbeVector, as_error_rate, probe_basis_states

__all__ = [
    "Basis",
    "EVE_W0",
    "EVE_W3",
    "SIGNAL_ANGLES",
    "bb84_state",
    "cnot",
    "entangle",
    "conditional_probe",
    "joint_outcome_distribution",
    "signal_error_rate",
    "induced_error_rate",
]


class Basis(enum.IntEnum):
    B0 = 0
    B1 = 1


# column index of Eve's outcome in an OutcomeDistribution
EVE_W0 = 0
EVE_W3 = 1

SIGNAL_ANGLES = {
    (Basis.B0, 0): math.pi / 8,
    (Basis.B0, 1): 5 * math.pi / 8,
    (Basis.B1, 0): -math.pi / 8,
    (Basis.B1, 1): 3 * math.pi / 8,
}


def _check_bit(bit: int) -> int:
    if bit not in (0, 1):
        raise ValueError(f"bit must be 0 or 1, got {bit!r}")
    return int(bit)


def bb84_state(basis: Basis, bit: int) -> np.ndarray:
    """Signal vector ``(e0, e1)`` for the given basis and bit value."""
    theta = SIGNAL_ANGLES[Basis(basis), _check_bit(bit)]
    return np.array([math.cos(theta), math.sin(theta)])


def cnot(state: np.ndarray) -> np.ndarray:
    """Flip the probe when the signal is ``|e1>``.

    Only the ``|e1 w0>`` and ``|e1 w3>`` amplitudes are exchanged.
    """
    state = np.asarray(state, dtype=float)
    if state.shape != (4,):
        raise ValueError(f"joint state must have shape (4,), got {state.shape}")
    return state[[0, 1, 3, 2]]


def entangle(e: ErrorRateLike, basis: Basis, bit: int) -> np.ndarray:
    _, a2 = probe_basis_states(as_error_rate(e))
    return cnot(np.kron(bb84_state(basis, bit), a2.as_array()))


def conditional_probe(state: np.ndarray, bob_basis: Basis, bob_bit: int) -> ProbeVector:
    """Project the signal onto Bob's outcome and return the probe remainder.

    The result is unnormalized: its squared norm is the probability that
    Bob records ``bob_bit`` when measuring in ``bob_basis``.
    """
    m = np.asarray(state, dtype=float).reshape(2, 2)
    return ProbeVector.from_array(bb84_state(bob_basis, bob_bit) @ m)


def joint_outcome_distribution(state: np.ndarray, bob_basis: Basis) -> np.ndarray:
    """Born-rule probabilities of Bob's bit and Eve's probe outcome.

    Returns a ``(2, 2)`` array ``p[bob_bit, eve]`` where the column index is
    :data:`EVE_W0` or :data:`EVE_W3`.
    """
    m = np.asarray(state, dtype=float).reshape(2, 2)
    bob = np.stack([bb84_state(bob_basis, 0), bb84_state(bob_basis, 1)])
    return (bob @ m) ** 2


def signal_error_rate(e: ErrorRateLike, basis: Basis, bit: int) -> float:
    """Probability that Bob, measuring in the sender's basis, reads the
    wrong bit for one particular signal state."""
    return conditional_probe(entangle(e, basis, bit), basis, 1 - _check_bit(bit)).norm_sq()


def induced_error_rate(e: ErrorRateLike) -> float:
    """Wrong-bit probability averaged over the four BB84 signals."""
    e = as_error_rate(e)
    return sum(signal_error_rate(e, b, x) for b in Basis for x in (0, 1)) / 4.0
