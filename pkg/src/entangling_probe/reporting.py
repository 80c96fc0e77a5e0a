"""Tabulation, serialization and the invariant checks behind ``verify``.

CSV files carry the header ``E,eta,Q,renyi_bits,helstrom_p`` and render
floats with 17 significant digits, which round-trips every double exactly.
JSON output is an array of records with the same field names.
"""

from __future__ import annotations

import csv
import io
import json
import os
import tempfile
from dataclasses import dataclass, fields
from typing import Iterable, Optional, Sequence

import numpy as np

from . import closed_form as cf
from . import statevec as sv
from .mc_protocol import SessionConfig, SessionStats

__all__ = [
    "SWEEP_FIELDS",
    "SweepRow",
    "sweep_row",
    "sweep_rows",
    "format_float",
    "parse_float",
    "rows_to_csv",
    "rows_to_json",
    "sweep_rows_from_csv",
    "SIMULATION_FIELDS",
    "simulation_record",
    "simulation_to_csv",
    "simulation_to_json",
    "verification_grid",
    "Violation",
    "verify_invariants",
    "atomic_write",
]

SWEEP_FIELDS = ("E", "eta", "Q", "renyi_bits", "helstrom_p")
MANDATORY_POINTS = (0.0, 0.25, cf.E_MAX)


@dataclass(frozen=True)
class SweepRow:
    e: float
    eta: float
    q: float
    renyi_bits: float
    helstrom_p: float

    def as_record(self) -> dict[str, float]:
        return dict(zip(SWEEP_FIELDS, (self.e, self.eta, self.q, self.renyi_bits, self.helstrom_p)))


def sweep_row(e: cf.ErrorRateLike) -> SweepRow:
    e = cf.as_error_rate(e)
    return SweepRow(e.value, cf.eta(e), cf.overlap_q_closed(e), cf.renyi_info(e), cf.helstrom_correct_prob(e))


def sweep_rows(e_min: float, e_max: float, steps: int) -> list[SweepRow]:
    """``steps`` rows uniformly spaced over ``[e_min, e_max]``, both ends included."""
    lo, hi = cf.as_error_rate(e_min).value, cf.as_error_rate(e_max).value
    if steps < 2:
        raise ValueError(f"steps must be at least 2, got {steps}")
    if not lo < hi:
        raise ValueError(f"need e_min < e_max, got [{lo!r}, {hi!r}]")
    return [sweep_row(float(e)) for e in np.linspace(lo, hi, steps)]


def format_float(x: Optional[float]) -> str:
    return "" if x is None else format(x, ".17g")


def parse_float(s: str) -> Optional[float]:
    return None if s == "" else float(s)


def _csv_text(header: Sequence[str], records: Iterable[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for rec in records:
        writer.writerow([v if isinstance(v, (int, str)) else format_float(v) for v in (rec[k] for k in header)])
    return buf.getvalue()


def rows_to_csv(rows: Iterable[SweepRow]) -> str:
    return _csv_text(SWEEP_FIELDS, (r.as_record() for r in rows))


def rows_to_json(rows: Iterable[SweepRow]) -> str:
    return json.dumps([r.as_record() for r in rows], indent=2) + "\n"


def sweep_rows_from_csv(text: str) -> list[SweepRow]:
    reader = csv.DictReader(io.StringIO(text))
    if tuple(reader.fieldnames or ()) != SWEEP_FIELDS:
        raise ValueError(f"unexpected CSV header {reader.fieldnames!r}")
    return [SweepRow(*(float(rec[k]) for k in SWEEP_FIELDS)) for rec in reader]


SIMULATION_FIELDS = (
    "E",
    "trials",
    "seed",
    "sifted_count",
    "bob_errors",
    "eve_correct",
    "disturbance_estimate",
    "eve_accuracy_estimate",
    "renyi_estimate_bits",
    "helstrom_p",
    "renyi_bits",
)


def simulation_record(config: SessionConfig, stats: SessionStats) -> dict:
    """Session counts and estimates next to their closed-form targets."""
    e = config.error_rate
    rec = {"E": e.value, "trials": config.trials, "seed": config.seed}
    rec.update({f.name: getattr(stats, f.name) for f in fields(stats)})
    rec["helstrom_p"] = cf.helstrom_correct_prob(e)
    rec["renyi_bits"] = cf.renyi_info(e)
    return rec


def simulation_to_csv(record: dict) -> str:
    return _csv_text(SIMULATION_FIELDS, [record])


def simulation_to_json(record: dict) -> str:
    return json.dumps({k: record[k] for k in SIMULATION_FIELDS}, indent=2) + "\n"


def atomic_write(path: str, text: str) -> None:
    """Write ``text`` to ``path`` via a temporary file so no partial file is left behind."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# --- invariant suite --------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    e: float
    quantity: str
    expected: float
    actual: float

    def __str__(self) -> str:
        return (
            f"E={self.e!r}: {self.quantity} expected {self.expected!r}, "
            f"got {self.actual!r} (|diff|={abs(self.expected - self.actual):.3g})"
        )


def verification_grid(grid_points: int) -> np.ndarray:
    """Uniform grid over ``[0, 1/3]`` with ``0``, ``1/4`` and ``1/3`` always present."""
    if grid_points < 1:
        raise ValueError(f"grid_points must be positive, got {grid_points}")
    pts = np.linspace(0.0, cf.E_MAX, grid_points) if grid_points > 1 else np.array([0.0])
    return np.unique(np.concatenate([pts, MANDATORY_POINTS]))


class _Checker:
    def __init__(self, tol: float):
        self.tol = tol
        self.violations: list[Violation] = []

    def close(self, e, quantity, expected, actual, tol=None):
        tol = self.tol if tol is None else tol
        if not abs(expected - actual) <= tol:
            self.violations.append(Violation(float(e), quantity, float(expected), float(actual)))

    def holds(self, e, quantity, ok: bool):
        if not ok:
            self.violations.append(Violation(float(e), quantity, 1.0, 0.0))


def verify_invariants(tolerance: float = 1e-12, grid_points: int = 1000) -> list[Violation]:
    """Check the closed-form and circuit invariants on a grid of error rates.

    Identity checks use ``tolerance``; the continuity check at ``E = 1/4``
    uses ``1000 * tolerance`` since it probes a square-root cusp. Returns
    the list of violations, empty when everything holds.
    """
    if not tolerance > 0:
        raise ValueError(f"tolerance must be positive, got {tolerance!r}")
    chk = _Checker(tolerance)
    grid = verification_grid(grid_points)
    q_prev = info_prev = None

    for e in grid:
        e = float(e)
        st = cf.correlated_states(e)
        chk.close(e, "|A1|", 1.0, st.a1.norm())
        chk.close(e, "|A2|", 1.0, st.a2.norm())
        chk.close(e, "|alpha_plus|^2", 16 * (1 - e), st.alpha_plus.norm_sq())
        chk.close(e, "|alpha_minus|^2", 16 * (1 - e), st.alpha_minus.norm_sq())
        chk.close(e, "|alpha|^2", 16 * e, st.alpha.norm_sq())
        chk.holds(e, "alpha_plus swapped == alpha_minus", st.alpha_plus.swapped() == st.alpha_minus)
        s = cf.sgn(1 - 4 * e)
        chk.close(e, "sgn(1-4E)|1-4E|", 1 - 4 * e, s * abs(1 - 4 * e))

        q_in, q_cl = cf.overlap_q_inner(e), cf.overlap_q_closed(e)
        chk.close(e, "Q inner vs closed", q_cl, q_in)
        info = cf.renyi_info(e)
        p = cf.helstrom_correct_prob(e)
        chk.close(e, "renyi from Helstrom P", info, cf.renyi_from_success_prob(p))
        if q_prev is not None:
            chk.holds(e, "Q strictly decreasing", q_cl < q_prev)
            chk.holds(e, "renyi strictly increasing", info > info_prev)
        q_prev, info_prev = q_cl, info

        # w-basis measurement on the normalized bit-0 state attains Helstrom
        chk.close(e, "w-basis success prob", p, st.alpha_minus.w3**2 / st.alpha_minus.norm_sq())

        for basis in sv.Basis:
            for bit in (0, 1):
                state = sv.entangle(e, basis, bit)
                chk.close(e, f"|joint state| {basis.name},{bit}", 1.0, float(np.linalg.norm(state)))
                chk.close(e, f"error rate {basis.name},{bit}", e, sv.signal_error_rate(e, basis, bit))
                right = sv.conditional_probe(state, basis, bit).scaled(4.0)
                target = st.alpha_minus if bit == 0 else st.alpha_plus
                chk.close(e, f"4*probe|right {basis.name},{bit} w0", target.w0, right.w0)
                chk.close(e, f"4*probe|right {basis.name},{bit} w3", target.w3, right.w3)
                wrong = sv.conditional_probe(state, basis, 1 - bit).scaled(4.0)
                cross = wrong.w0 * st.alpha.w3 - wrong.w3 * st.alpha.w0
                chk.close(e, f"probe|wrong x alpha {basis.name},{bit}", 0.0, cross)
                dist = sv.joint_outcome_distribution(state, basis)
                chk.close(e, f"outcome total {basis.name},{bit}", 1.0, float(dist.sum()))

    # continuity across the sign flip
    for delta in (1e-11, 1e-12, 1e-13):
        left, right = cf.correlated_states(0.25 - delta), cf.correlated_states(0.25 + delta)
        for name in ("a1", "a2", "alpha_plus", "alpha_minus", "alpha"):
            lv, rv = getattr(left, name), getattr(right, name)
            chk.close(0.25, f"{name}.w0 continuity (delta={delta:g})", lv.w0, rv.w0, 1000 * tolerance)
            chk.close(0.25, f"{name}.w3 continuity (delta={delta:g})", lv.w3, rv.w3, 1000 * tolerance)

    return chk.violations
