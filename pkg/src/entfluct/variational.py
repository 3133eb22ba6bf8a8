"""Variational search for extremal total variance over the unit sphere of the
state space: maximizers are the completely entangled states, minimizers the
generalized coherent states.

Projected gradient ascent/descent with Armijo backtracking and seeded random
restarts. Restarts are seeded independently (counter-based generator keyed by
seed XOR restart index), so results do not depend on execution order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import ObservableBasis, StateVector

ARMIJO_C = 1e-4
MIN_STEP = 1e-20
# |Delta V| below this is indistinguishable from rounding in the objective;
# past it the line search falls back to contracting the gradient norm.
NOISE_FLOOR = 1e-14
GRAD_SHRINK = 0.9

_MODES = ("maximize", "minimize")


@dataclass(frozen=True)
class SearchConfig:
    restarts: int = 16
    max_iterations: int = 2000
    step_tolerance: float = 1e-12
    value_tolerance: float = 1e-11
    seed: int = 0
    mode: str = "maximize"

    def __post_init__(self):
        if self.restarts < 1 or self.max_iterations < 1:
            raise ValueError("restarts and max_iterations must be positive")
        if self.step_tolerance <= 0 or self.value_tolerance <= 0:
            raise ValueError("tolerances must be positive")
        if self.mode not in _MODES:
            raise ValueError(f"mode must be one of {_MODES}")
        if not 0 <= int(self.seed) < 2**64:
            raise ValueError("seed must fit in 64 unsigned bits")


@dataclass(frozen=True)
class SearchResult:
    best_state: StateVector
    best_value: float
    converged: bool
    iterations_used: int
    restart_values: np.ndarray


def gradient_total_variance(psi: StateVector, basis: ObservableBasis) -> np.ndarray:
    """Unconstrained gradient of V_tot(psi/|psi|) with respect to the complex
    amplitudes: 2 sum_i [(O_i^2 - <O_i^2>) psi - 2 <O_i> (O_i - <O_i>) psi].

    The directional derivative along a perturbation d is Re(vdot(d, grad)).
    Callers on the sphere project out the component along psi afterwards.
    """
    if psi.dim != basis.dim:
        raise ValueError(f"dimension mismatch: state {psi.dim}, basis {basis.dim}")
    a = psi.amplitudes
    grad = np.zeros_like(a)
    for o in basis:
        oa = o.entries @ a
        e1 = np.vdot(a, oa).real
        e2 = np.vdot(oa, oa).real
        grad += 2.0 * ((o.entries @ oa - e2 * a) - 2.0 * e1 * (oa - e1 * a))
    return grad


def _value_and_grad(a: np.ndarray, mats, sqmats):
    v = 0.0
    grad = np.zeros_like(a)
    for m, m2 in zip(mats, sqmats):
        ma = m @ a
        e1 = np.vdot(a, ma).real
        e2 = np.vdot(ma, ma).real
        v += e2 - e1 * e1
        grad += 2.0 * ((m2 @ a - e2 * a) - 2.0 * e1 * (ma - e1 * a))
    return v, grad


def _value(a: np.ndarray, mats):
    v = 0.0
    for m in mats:
        ma = m @ a
        e1 = np.vdot(a, ma).real
        v += np.vdot(ma, ma).real - e1 * e1
    return v


def _run_restart(a0: np.ndarray, mats, sqmats, sign: float, config: SearchConfig):
    a = a0
    v, grad = _value_and_grad(a, mats, sqmats)
    converged = False
    iterations = 0
    for iterations in range(1, config.max_iterations + 1):
        gt = grad - np.vdot(a, grad) * a
        gn = np.linalg.norm(gt)
        if gn <= config.step_tolerance:
            # stationary (includes constant landscapes)
            converged = True
            break
        direction = sign * gt

        def _try(alpha):
            cand = a + alpha * direction
            cand = cand / np.linalg.norm(cand)
            return cand, _value(cand, mats)

        alpha = 1.0
        accepted = False
        while alpha > MIN_STEP:
            cand, vc = _try(alpha)
            if sign * (vc - v) >= ARMIJO_C * alpha * gn * gn:
                # sufficient increase reached; keep halving while it helps,
                # since the first Armijo step can sit at the stability limit
                while alpha / 2 > MIN_STEP:
                    cand2, vc2 = _try(alpha / 2)
                    if sign * (vc2 - vc) <= 0:
                        break
                    alpha /= 2
                    cand, vc = cand2, vc2
                accepted = True
                break
            if abs(vc - v) <= NOISE_FLOOR * max(1.0, abs(v)):
                # objective change below rounding; contract the gradient instead
                _, gc = _value_and_grad(cand, mats, sqmats)
                gtc = gc - np.vdot(cand, gc) * cand
                if np.linalg.norm(gtc) <= GRAD_SHRINK * gn:
                    accepted = True
                    break
            alpha *= 0.5
        if not accepted:
            break
        step_norm = np.linalg.norm(cand - a)
        dv = abs(vc - v)
        a, v = cand, vc
        _, grad = _value_and_grad(a, mats, sqmats)
        if step_norm <= config.step_tolerance and dv <= config.value_tolerance:
            converged = True
            break
    return a, v, converged, iterations


def _search(basis: ObservableBasis, config: SearchConfig, state_label: str):
    mats = [o.entries for o in basis]
    sqmats = [m @ m for m in mats]
    sign = 1.0 if config.mode == "maximize" else -1.0
    dim = basis.dim
    results = []
    for k in range(config.restarts):
        rng = np.random.Generator(np.random.Philox(key=int(config.seed) ^ k))
        a0 = rng.normal(size=dim) + 1j * rng.normal(size=dim)
        a0 = a0 / np.linalg.norm(a0)
        results.append(_run_restart(a0, mats, sqmats, sign, config))
    restart_values = np.array([r[1] for r in results])
    # strict inequality keeps the lowest restart index on ties
    best_k = 0
    for k in range(1, config.restarts):
        if sign * (restart_values[k] - restart_values[best_k]) > 0:
            best_k = k
    a, v, conv, iters = results[best_k]
    restart_values.setflags(write=False)
    return SearchResult(
        best_state=StateVector(a, state_label),
        best_value=float(v),
        converged=any(r[2] for r in results),
        iterations_used=iters,
        restart_values=restart_values,
    )


def maximize_total_variance(
    basis: ObservableBasis, config: SearchConfig = None, state_label: str = "spherical"
) -> SearchResult:
    """Search for the state of maximal total variance (a CE state)."""
    if config is None:
        config = SearchConfig(mode="maximize")
    if config.mode != "maximize":
        raise ValueError("config.mode must be 'maximize'")
    return _search(basis, config, state_label)


def minimize_total_variance(
    basis: ObservableBasis, config: SearchConfig = None, state_label: str = "spherical"
) -> SearchResult:
    """Search for the state of minimal total variance (a coherent state)."""
    if config is None:
        config = SearchConfig(mode="minimize")
    if config.mode != "minimize":
        raise ValueError("config.mode must be 'minimize'")
    return _search(basis, config, state_label)
