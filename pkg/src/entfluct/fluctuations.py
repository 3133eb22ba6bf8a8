"""Total variance of an observable basis, the CE criterion, and the variance
concurrence.

The total variance sum_i (<O_i^2> - <O_i>^2) measures how far a state sits from
classical reality; its maximizers are the completely entangled (CE) states,
characterized by all basis expectations vanishing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .algebra import Observable, ObservableBasis, StateVector

IMAG_TOL = 1e-10
VARIANCE_CLAMP = 1e-12
CE_TOL_DEFAULT = 1e-9
BOUND_SLACK = 1e-9


def expectation(psi: StateVector, obs: Observable) -> float:
    """Real expectation value <psi|O|psi>; rejects non-Hermitian leakage."""
    if psi.dim != obs.dim:
        raise ValueError(f"dimension mismatch: state {psi.dim}, observable {obs.dim}")
    val = np.vdot(psi.amplitudes, obs.entries @ psi.amplitudes)
    if abs(val.imag) > IMAG_TOL:
        raise ValueError("expectation has a non-negligible imaginary part")
    return float(val.real)


def expectation_vector(psi: StateVector, basis: ObservableBasis) -> np.ndarray:
    return np.array([expectation(psi, o) for o in basis])


def _variance_terms(psi: StateVector, basis: ObservableBasis) -> np.ndarray:
    if psi.dim != basis.dim:
        raise ValueError(f"dimension mismatch: state {psi.dim}, basis {basis.dim}")
    a = psi.amplitudes
    terms = np.empty(len(basis))
    for i, o in enumerate(basis):
        oa = o.entries @ a
        second = np.vdot(oa, oa).real  # <O^2> as |O psi|^2, exactly real
        first = np.vdot(a, oa)
        if abs(first.imag) > IMAG_TOL:
            raise ValueError("expectation has a non-negligible imaginary part")
        term = second - first.real**2
        if term < -VARIANCE_CLAMP:
            raise ValueError("variance summand is negative beyond tolerance")
        terms[i] = max(term, 0.0)
    return terms


def total_variance(psi: StateVector, basis: ObservableBasis) -> float:
    """Sum of variances of the basis observables in the state psi."""
    return float(np.sum(_variance_terms(psi, basis)))


def is_completely_entangled(
    psi: StateVector, basis: ObservableBasis, tol: float = CE_TOL_DEFAULT
):
    """(flag, residual): residual is max_i |<O_i>|; flag is residual <= tol.

    Linearity of expectations makes checking the basis elements sufficient for
    the whole algebra.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    residual = float(np.max(np.abs(expectation_vector(psi, basis))))
    return residual <= tol, residual


def variance_concurrence(
    psi: StateVector, basis: ObservableBasis, v_min: float, v_max: float
) -> float:
    """sqrt((V_tot - v_min) / (v_max - v_min)), clamped to [0, 1] near the edges."""
    if v_max <= v_min:
        raise ValueError("v_max must exceed v_min")
    v = total_variance(psi, basis)
    if v < v_min - BOUND_SLACK or v > v_max + BOUND_SLACK:
        raise ValueError(
            f"total variance {v} lies outside [{v_min}, {v_max}]: inconsistent bounds"
        )
    ratio = (v - v_min) / (v_max - v_min)
    return float(np.sqrt(min(max(ratio, 0.0), 1.0)))


@dataclass(frozen=True)
class FluctuationReport:
    """Expectations, total variance, CE residual and (optionally) the variance
    concurrence for a single state."""

    expectations: np.ndarray
    v_tot: float
    v_min: Optional[float]
    v_max: Optional[float]
    ce_residual: float
    ce_flag: bool
    ce_tol: float
    concurrence_variance: Optional[float]


def fluctuation_report(
    psi: StateVector,
    basis: ObservableBasis,
    v_min: Optional[float] = None,
    v_max: Optional[float] = None,
    ce_tol: float = CE_TOL_DEFAULT,
) -> FluctuationReport:
    """Assemble the full report; the variance concurrence is included only when
    both bounds are supplied."""
    exps = expectation_vector(psi, basis)
    v = total_variance(psi, basis)
    residual = float(np.max(np.abs(exps)))
    conc = None
    if v_min is not None and v_max is not None:
        conc = variance_concurrence(psi, basis, v_min, v_max)
    exps.setflags(write=False)
    return FluctuationReport(
        expectations=exps,
        v_tot=v,
        v_min=v_min,
        v_max=v_max,
        ce_residual=residual,
        ce_flag=residual <= ce_tol,
        ce_tol=ce_tol,
        concurrence_variance=conc,
    )
