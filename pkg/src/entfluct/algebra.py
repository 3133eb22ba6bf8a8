"""Observable algebras: spin-j generators, the local two-qubit set, Casimir sums.

All containers are immutable after construction and validate their defining
invariants (Hermiticity, unit norm, su(2) commutation) up front, so downstream
numerics never have to re-check them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

HERMITICITY_TOL = 1e-12
NORM_TOL = 1e-12
COMMUTATOR_TOL = 1e-10
ORTHOGONALITY_TOL = 1e-10

STATE_BASIS_LABELS = ("spherical", "cartesian", "qubit-pair")


def _frozen_complex_matrix(entries) -> np.ndarray:
    m = np.array(entries, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    m.setflags(write=False)
    return m


@dataclass(frozen=True)
class Observable:
    """A Hermitian operator on the state space."""

    entries: np.ndarray

    def __post_init__(self):
        m = _frozen_complex_matrix(self.entries)
        if np.max(np.abs(m - m.conj().T)) > HERMITICITY_TOL:
            raise ValueError("matrix is not Hermitian within 1e-12; refusing to symmetrize")
        object.__setattr__(self, "entries", m)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]


def _is_su2_label(label: str) -> bool:
    return label.startswith("su2-spin-") and ":" not in label


@dataclass(frozen=True)
class ObservableBasis:
    """Ordered basis of the algebra of essential observables."""

    elements: tuple
    label: str = ""

    def __post_init__(self):
        elems = tuple(self.elements)
        if not elems:
            raise ValueError("observable basis must be nonempty")
        dim = elems[0].dim
        for o in elems:
            if not isinstance(o, Observable):
                raise TypeError("basis elements must be Observable instances")
            if o.dim != dim:
                raise ValueError("dimension mismatch among basis elements")
        object.__setattr__(self, "elements", elems)
        if _is_su2_label(self.label):
            self._check_su2_commutation(elems)

    @staticmethod
    def _check_su2_commutation(elems):
        if len(elems) != 3:
            raise ValueError("su(2) basis must have exactly three generators")
        sx, sy, sz = (o.entries for o in elems)
        for a, b, c in ((sx, sy, sz), (sy, sz, sx), (sz, sx, sy)):
            if np.max(np.abs(a @ b - b @ a - 1j * c)) > COMMUTATOR_TOL:
                raise ValueError("generators do not satisfy [S_a, S_b] = i S_c")

    @property
    def dim(self) -> int:
        return self.elements[0].dim

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


@dataclass(frozen=True)
class StateVector:
    """A normalized pure state over a labeled basis."""

    amplitudes: np.ndarray
    basis_label: str

    def __post_init__(self):
        if self.basis_label not in STATE_BASIS_LABELS:
            raise ValueError(f"unknown basis label {self.basis_label!r}")
        a = np.array(self.amplitudes, dtype=complex).reshape(-1)
        if a.size == 0:
            raise ValueError("empty state vector")
        if abs(np.sum(np.abs(a) ** 2) - 1.0) > NORM_TOL:
            raise ValueError("state vector is not normalized within 1e-12")
        a.setflags(write=False)
        object.__setattr__(self, "amplitudes", a)

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    @classmethod
    def from_components(cls, components, basis_label: str, normalize: bool = False):
        a = np.array(components, dtype=complex).reshape(-1)
        if normalize:
            n = np.linalg.norm(a)
            if n == 0.0:
                raise ValueError("cannot normalize the zero vector")
            a = a / n
        return cls(a, basis_label)


def _spin_label(two_j: int) -> str:
    return f"su2-spin-{two_j // 2}" if two_j % 2 == 0 else f"su2-spin-{two_j}/2"


def spin_generators(j) -> ObservableBasis:
    """{S_x, S_y, S_z} for spin j, S_z diagonal with m = +j first.

    Ladder matrix elements are real non-negative (Condon-Shortley phases).
    """
    jj = float(j)
    two_j = round(2 * jj)
    if two_j <= 0 or abs(2 * jj - two_j) > 1e-12:
        raise ValueError(f"j must be a positive half-integer, got {j}")
    dim = two_j + 1
    m = jj - np.arange(dim)
    # <m+1| S+ |m> = sqrt(j(j+1) - m(m+1)); superdiagonal in descending-m order
    sp = np.diag(np.sqrt(jj * (jj + 1) - m[1:] * (m[1:] + 1)), k=1).astype(complex)
    sm = sp.conj().T
    sx = (sp + sm) / 2
    sy = (sp - sm) / 2j
    sz = np.diag(m).astype(complex)
    return ObservableBasis(
        (Observable(sx), Observable(sy), Observable(sz)), label=_spin_label(two_j)
    )


def local_two_qubit_basis() -> ObservableBasis:
    """{s_a (x) I, I (x) s_a} on the qubit pair, basis order uu, ud, du, dd."""
    half = spin_generators(0.5)
    eye = np.eye(2)
    elems = [Observable(np.kron(o.entries, eye)) for o in half]
    elems += [Observable(np.kron(eye, o.entries)) for o in half]
    return ObservableBasis(tuple(elems), label="local-2qubit")


def casimir(basis: ObservableBasis) -> Observable:
    """Sum of squares of the basis elements (scalar on irreducible representations)."""
    total = np.zeros((basis.dim, basis.dim), dtype=complex)
    for o in basis:
        total += o.entries @ o.entries
    return Observable(total)


def rotate_basis(basis: ObservableBasis, rotation) -> ObservableBasis:
    """Orthogonal recombination O'_a = sum_b R_ab O_b of a three-element basis."""
    r = np.asarray(rotation, dtype=float)
    if len(basis) != 3:
        raise ValueError("rotate_basis requires exactly three basis elements")
    if r.shape != (3, 3):
        raise ValueError(f"rotation must be 3x3, got shape {r.shape}")
    if np.max(np.abs(r.T @ r - np.eye(3))) > ORTHOGONALITY_TOL:
        raise ValueError("rotation matrix is not orthogonal within 1e-10")
    mats = [o.entries for o in basis]
    new = tuple(
        Observable(sum(r[a, b] * mats[b] for b in range(3))) for a in range(3)
    )
    return ObservableBasis(new, label=f"rotated:{basis.label}")
