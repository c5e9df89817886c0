"""Schmidt decomposition of bipartite pure states.

For a bipartition ``left|right`` the state is reshaped into its coefficient
matrix ``C[i, j] = <i_left j_right|psi>``. The squared Schmidt coefficients
are the eigenvalues of the Gram matrix of ``C``. We diagonalize whichever of
``C^H C`` and ``C C^H`` is smaller; the two share their nonzero spectrum, so
the reported list always has ``min(dim_left, dim_right)`` entries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import InvalidPartition
from .state import PureState

RANK_TOL = 1e-10
EQUAL_TOL = 1e-10
JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100


@dataclass(frozen=True)
class Bipartition:
    left: tuple[int, ...]
    right: tuple[int, ...]

    def __init__(self, left: Sequence[int], right: Sequence[int]):
        object.__setattr__(self, "left", tuple(int(q) for q in left))
        object.__setattr__(self, "right", tuple(int(q) for q in right))

    @classmethod
    def split(cls, num_qubits: int, left: Sequence[int]) -> Bipartition:
        """``left`` against every other qubit, both sides in ascending order."""
        left = tuple(left)
        return cls(left, [q for q in range(num_qubits) if q not in left])

    def validate(self, num_qubits: int) -> None:
        if not self.left or not self.right:
            raise InvalidPartition("both sides of a bipartition must be nonempty")
        everything = self.left + self.right
        if len(set(everything)) != len(everything):
            raise InvalidPartition(f"sides overlap or repeat qubits: {self.left} | {self.right}")
        if sorted(everything) != list(range(num_qubits)):
            raise InvalidPartition(
                f"{self.left} | {self.right} does not cover qubits 0..{num_qubits - 1}"
            )


@dataclass(frozen=True)
class SchmidtResult:
    coefficients: tuple[float, ...]
    gram_eigenvalues: tuple[float, ...]
    rank: int
    maximally_entangled: bool


def coefficient_matrix(state: PureState, partition: Bipartition) -> np.ndarray:
    partition.validate(state.num_qubits)
    order = partition.left + partition.right
    psi = state.tensor().transpose(order)
    return psi.reshape(2 ** len(partition.left), 2 ** len(partition.right))


def _eig_2x2(c: np.ndarray) -> list[float]:
    """Eigenvalues of the 2x2 Gram matrix of ``c`` from its trace and determinant.

    For the Gram matrix, trace is ``||c||_F^2`` and determinant is
    ``|det c|^2`` when ``c`` is square. The smaller root is taken as det/larger
    to avoid cancellation near rank one.
    """
    g = c.conj().T @ c if c.shape[1] == 2 else c @ c.conj().T
    trace = float(g[0, 0].real + g[1, 1].real)
    if c.shape == (2, 2):
        det = abs(c[0, 0] * c[1, 1] - c[0, 1] * c[1, 0]) ** 2
    else:
        det = float((g[0, 0] * g[1, 1]).real - abs(g[0, 1]) ** 2)
    half_gap = math.hypot(float(g[0, 0].real - g[1, 1].real) / 2, abs(g[0, 1]))
    hi = trace / 2 + half_gap
    lo = det / hi if hi > 0 else 0.0
    return [hi, lo]


def jacobi_eigenvalues(h: np.ndarray, tol: float = JACOBI_TOL) -> list[float]:
    """Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations.

    Converged once the Frobenius norm of the off-diagonal part drops below
    ``tol``.
    """
    a = np.array(h, dtype=complex)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("matrix must be square")
    off_mask = ~np.eye(n, dtype=bool)
    for _ in range(JACOBI_MAX_SWEEPS):
        if np.linalg.norm(a[off_mask]) < tol:
            return sorted((float(x) for x in a.diagonal().real), reverse=True)
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r < tol * 1e-3:
                    continue
                phase = apq / r
                theta = 0.5 * math.atan2(2 * r, (a[p, p] - a[q, q]).real)
                c, s = math.cos(theta), math.sin(theta)
                # phase-align a[p, q] to a real value, then a real plane rotation
                rot = np.array([[c, -s], [s * np.conj(phase), c * np.conj(phase)]])
                idx = [p, q]
                a[:, idx] = a[:, idx] @ rot
                a[idx, :] = rot.conj().T @ a[idx, :]
                a[p, q] = a[q, p] = 0.0
    raise ArithmeticError(f"Jacobi iteration did not converge in {JACOBI_MAX_SWEEPS} sweeps")


def gram_spectrum(c: np.ndarray) -> list[float]:
    """Descending eigenvalues of the smaller Gram matrix of ``c``."""
    if min(c.shape) == 1:
        return [float(np.vdot(c, c).real)]
    if min(c.shape) == 2:
        return _eig_2x2(c)
    g = c.conj().T @ c if c.shape[1] <= c.shape[0] else c @ c.conj().T
    return jacobi_eigenvalues(g)


def schmidt_decompose(state: PureState, partition: Bipartition) -> SchmidtResult:
    c = coefficient_matrix(state, partition)
    eig = sorted((max(0.0, float(x)) for x in gram_spectrum(c)), reverse=True)
    coeffs = [math.sqrt(x) for x in eig]
    rank = sum(1 for x in eig if x > RANK_TOL)
    nonzero = coeffs[:rank]
    maximal = rank > 1 and max(nonzero) - min(nonzero) <= EQUAL_TOL
    return SchmidtResult(tuple(coeffs), tuple(eig), max(rank, 1), maximal)


def schmidt_rank(state: PureState, partition: Bipartition) -> int:
    return schmidt_decompose(state, partition).rank
