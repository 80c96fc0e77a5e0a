"""Entangling-probe attack on BB84 over the full error-rate range ``0 <= E <= 1/3``.

Submodules
----------
closed_form
    Probe states, overlap and Renyi information gain in closed form.
statevec
    Two-qubit CNOT circuit realizing the probe.
mc_protocol
    Seeded Monte Carlo BB84 sessions with the probe in the channel.
reporting
    Tradeoff tables, CSV/JSON encoding and the invariant suite.
"""

from .closed_form import (
    E_MAX,
    DomainError,
    ErrorRate,
    ProbeAngle,
    ProbeStateSet,
    ProbeVector,
    correlated_states,
    eta,
    helstrom_correct_prob,
    mu_components,
    overlap_q_closed,
    overlap_q_inner,
    probe_basis_states,
    renyi_from_success_prob,
    renyi_info,
    sgn,
)
from .mc_protocol import SessionConfig, SessionStats, UndefinedEstimate, decode, renyi_estimate_from_counts, run_session
from .statevec import (
    Basis,
    bb84_state,
    cnot,
    conditional_probe,
    entangle,
    induced_error_rate,
    joint_outcome_distribution,
    signal_error_rate,
)

__version__ = "0.1.0"
