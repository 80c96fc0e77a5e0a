"""Closed-form quantities of the entangling probe.

Every function takes an error rate ``E`` in ``[0, 1/3]`` (a float or an
:class:`ErrorRate`) and evaluates the probe geometry directly:

* ``eta(E) = sqrt(8 E (1 - 2 E))``
* the probe parameter ``mu`` with ``sin(mu)`` carrying ``sgn(1 - 4 E)``
* the unit probe states ``A1``, ``A2`` and the unnormalized correlated
  states ``alpha_plus``, ``alpha_minus``, ``alpha``
* the overlap ``Q = (1 - 3E) / (1 - E)`` and the order-2 Renyi gain
  ``log2(2 - Q**2)``

Probe vectors are expressed over the orthonormal probe basis
``{|w0>, |w3>}``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np

__all__ = [
    "E_MAX",
    "DomainError",
    "ErrorRate",
    "ProbeAngle",
    "ProbeVector",
    "ProbeStateSet",
    "as_error_rate",
    "sgn",
    "eta",
    "mu_components",
    "probe_basis_states",
    "correlated_states",
    "overlap_q_inner",
    "overlap_q_closed",
    "renyi_info",
    "helstrom_correct_prob",
    "renyi_from_success_prob",
]

E_MAX = 1.0 / 3.0
SQRT2 = math.sqrt(2.0)


class DomainError(ValueError):
    """Raised for inputs outside the probe's domain of definition."""


@dataclass(frozen=True)
class ErrorRate:
    """Disturbance induced by the probe, validated to lie in ``[0, 1/3]``."""

    value: float

    def __post_init__(self):
        try:
            v = float(self.value)
        except (TypeError, ValueError) as exc:
            raise DomainError(f"error rate must be a real number, got {self.value!r}") from exc
        if not math.isfinite(v) or v < 0.0 or v > E_MAX:
            raise DomainError(f"error rate {v!r} outside the valid range [0, 1/3]")
        object.__setattr__(self, "value", v)

    def __float__(self) -> float:
        return self.value


ErrorRateLike = Union[ErrorRate, float, int, Fraction]


def as_error_rate(e: ErrorRateLike) -> ErrorRate:
    """Coerce ``e`` to an :class:`ErrorRate`, raising :class:`DomainError` if invalid."""
    return e if isinstance(e, ErrorRate) else ErrorRate(e)


@dataclass(frozen=True)
class ProbeAngle:
    cos_mu: float
    sin_mu: float


@dataclass(frozen=True)
class ProbeVector:
    """Real probe-space vector ``w0 |w0> + w3 |w3>``."""

    w0: float
    w3: float

    def as_array(self) -> np.ndarray:
        return np.array([self.w0, self.w3])

    @classmethod
    def from_array(cls, a) -> "ProbeVector":
        return cls(float(a[0]), float(a[1]))

    def norm_sq(self) -> float:
        return self.w0 * self.w0 + self.w3 * self.w3

    def norm(self) -> float:
        return math.hypot(self.w0, self.w3)

    def dot(self, other: "ProbeVector") -> float:
        return self.w0 * other.w0 + self.w3 * other.w3

    def swapped(self) -> "ProbeVector":
        """Exchange the ``|w0>`` and ``|w3>`` components."""
        return ProbeVector(self.w3, self.w0)

    def scaled(self, factor: float) -> "ProbeVector":
        return ProbeVector(factor * self.w0, factor * self.w3)

    def normalized(self) -> "ProbeVector":
        n = self.norm()
        if n == 0.0:
            raise DomainError("cannot normalize the zero probe vector")
        return ProbeVector(self.w0 / n, self.w3 / n)


@dataclass(frozen=True)
class ProbeStateSet:
    """The five probe states at one error rate.

    ``alpha_plus``, ``alpha_minus`` and ``alpha`` hold the unnormalized
    coefficients, so ``|alpha_plus|**2 == |alpha_minus|**2 == 16 (1 - E)``
    and ``|alpha|**2 == 16 E``. Use :meth:`normalized` for unit vectors.
    """

    a1: ProbeVector
    a2: ProbeVector
    alpha_plus: ProbeVector
    alpha_minus: ProbeVector
    alpha: ProbeVector
    eta: float

    def normalized(self, name: str) -> ProbeVector:
        """Unit vector along the named state.

        Raises :class:`DomainError` for ``alpha`` at ``E = 0``, where the
        error-correlated state vanishes.
        """
        vec = getattr(self, name)
        if name == "alpha" and vec.norm() == 0.0:
            raise DomainError("the error-correlated state is the zero vector at E = 0")
        return vec.normalized()


def sgn(x: float) -> int:
    """Sign function with ``sgn(0) == 0``."""
    if not math.isfinite(x):
        raise DomainError(f"sgn needs a finite argument, got {x!r}")
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def eta(e: ErrorRateLike) -> float:
    E = as_error_rate(e).value
    return math.sqrt(8.0 * E * (1.0 - 2.0 * E))


def _branch(e: ErrorRateLike) -> tuple[float, float, int]:
    """Return ``eta``, ``1 - eta`` and ``sgn(1 - 4E)``.

    ``1 - eta`` is evaluated as ``(1 - 4E)**2 / (1 + eta)``, which follows
    from ``1 - eta**2 == (1 - 4E)**2``. The direct difference cancels
    catastrophically near ``E = 1/4`` and its square root turns a 1e-16
    rounding error into a 1e-8 jump.
    """
    E = as_error_rate(e).value
    h = eta(E)
    d = 1.0 - 4.0 * E
    return h, d * d / (1.0 + h), sgn(d)


def mu_components(e: ErrorRateLike) -> ProbeAngle:
    """``cos(mu)`` and ``sin(mu)``; the sine takes the sign of ``1 - 4E``."""
    h, hc, s = _branch(e)
    return ProbeAngle(math.sqrt((1.0 + h) / 2.0), s * math.sqrt(hc / 2.0))


def probe_basis_states(e: ErrorRateLike) -> tuple[ProbeVector, ProbeVector]:
    """Return ``(A1, A2)``. ``A2`` is the probe's initial state."""
    mu = mu_components(e)
    a1 = ProbeVector(mu.cos_mu, mu.sin_mu)
    return a1, a1.swapped()


def correlated_states(e: ErrorRateLike) -> ProbeStateSet:
    h, hc, s = _branch(e)
    a1, a2 = probe_basis_states(e)
    rp = math.sqrt(1.0 + h)
    rm = s * math.sqrt(hc)
    up = SQRT2 + 1.0
    dn = SQRT2 - 1.0
    alpha_plus = ProbeVector(up * rp + dn * rm, up * rm + dn * rp)
    alpha_minus = ProbeVector(dn * rp + up * rm, dn * rm + up * rp)
    alpha = ProbeVector(rm - rp, rp - rm)
    return ProbeStateSet(a1, a2, alpha_plus, alpha_minus, alpha, h)


def overlap_q_inner(e: ErrorRateLike) -> float:
    """Overlap of the bit-correlated probe states from their inner product."""
    st = correlated_states(e)
    return st.alpha_plus.dot(st.alpha_minus) / (st.alpha_plus.norm() * st.alpha_minus.norm())


def overlap_q_closed(e: ErrorRateLike) -> float:
    E = as_error_rate(e).value
    return (1.0 - 3.0 * E) / (1.0 - E)


def _one_minus_q_sq(e: ErrorRateLike) -> float:
    # 1 - Q**2 == 4E(1 - 2E) / (1 - E)**2, free of cancellation near E = 0
    E = as_error_rate(e).value
    return 4.0 * E * (1.0 - 2.0 * E) / ((1.0 - E) * (1.0 - E))


def renyi_info(e: ErrorRateLike) -> float:
    """Maximum order-2 Renyi information gain ``log2(2 - Q**2)`` of the probe, in bits."""
    return math.log1p(_one_minus_q_sq(e)) / math.log(2.0)


def helstrom_correct_prob(e: ErrorRateLike) -> float:
    """Minimum-error success probability ``(1 + sqrt(1 - Q**2)) / 2`` for
    discriminating the two equiprobable bit-correlated probe states."""
    return 0.5 * (1.0 + math.sqrt(_one_minus_q_sq(e)))


def renyi_from_success_prob(p: float) -> float:
    """Order-2 Renyi information ``log2(2 (p**2 + (1-p)**2))`` of a binary
    guess that is right with probability ``p``."""
    bias = 2.0 * p - 1.0
    return math.log1p(bias * bias) / math.log(2.0)
