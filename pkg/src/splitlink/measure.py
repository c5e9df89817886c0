"""Single-qubit projective measurement with Born-rule probabilities.

The measured qubit is removed from the post-measurement register; the
remaining qubits keep their original relative order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import NonOrthonormalBasis, QubitOutOfRange
from .state import PureState

PROB_TOL = 1e-12
BASIS_TOL = 1e-12


@dataclass(frozen=True)
class MeasurementRecord:
    qubit: int
    outcome: int
    probability: float
    post_state: Optional[PureState]


@dataclass(frozen=True, eq=False)
class SingleQubitBasis:
    """Two orthonormal single-qubit kets; ``kets[k]`` is outcome ``k``."""

    kets: tuple[np.ndarray, np.ndarray]

    def __post_init__(self):
        if len(self.kets) != 2:
            raise NonOrthonormalBasis("a single-qubit basis has exactly two kets")
        kets = tuple(np.array(k, dtype=complex).reshape(-1) for k in self.kets)
        if any(k.size != 2 for k in kets):
            raise NonOrthonormalBasis("single-qubit kets have two amplitudes")
        gram = np.array([[np.vdot(a, b) for b in kets] for a in kets])
        if not np.allclose(gram, np.eye(2), rtol=0.0, atol=BASIS_TOL):
            raise NonOrthonormalBasis(f"basis kets are not orthonormal: gram = {gram.tolist()}")
        for k in kets:
            k.setflags(write=False)
        object.__setattr__(self, "kets", kets)

    @classmethod
    def computational(cls) -> SingleQubitBasis:
        return cls(([1, 0], [0, 1]))

    @classmethod
    def hadamard(cls) -> SingleQubitBasis:
        """The ``{|+>, |->}`` basis."""
        s = 1 / np.sqrt(2)
        return cls(([s, s], [s, -s]))

    def __eq__(self, other):
        if not isinstance(other, SingleQubitBasis):
            return NotImplemented
        return all(np.array_equal(a, b) for a, b in zip(self.kets, other.kets))

    __hash__ = None


def _check_qubit(state: PureState, qubit: int) -> None:
    if state.num_qubits < 2:
        raise QubitOutOfRange("measurement needs at least two qubits to leave a register behind")
    if not 0 <= qubit < state.num_qubits:
        raise QubitOutOfRange(f"qubit {qubit} out of range for a {state.num_qubits}-qubit state")


def _record(qubit: int, outcome: int, branch: np.ndarray) -> MeasurementRecord:
    """Born probability and renormalized state from an unnormalized branch."""
    branch = branch.reshape(-1)
    p = float(np.vdot(branch, branch).real)
    if p < PROB_TOL:
        return MeasurementRecord(qubit, outcome, 0.0, None)
    n_rest = int(np.log2(branch.size))
    return MeasurementRecord(qubit, outcome, p, PureState(n_rest, branch / np.sqrt(p)))


def measure_computational(
    state: PureState, qubit: int
) -> tuple[MeasurementRecord, MeasurementRecord]:
    """Measure ``qubit`` in ``{|0>, |1>}`` and return the two outcome records."""
    _check_qubit(state, qubit)
    psi = state.tensor()
    return tuple(
        _record(qubit, k, np.take(psi, k, axis=qubit)) for k in (0, 1)
    )  # type: ignore[return-value]


def project_arbitrary(
    state: PureState, qubit: int, basis: SingleQubitBasis, which: int
) -> MeasurementRecord:
    """Project ``qubit`` onto ``basis.kets[which]``."""
    _check_qubit(state, qubit)
    if which not in (0, 1):
        raise ValueError(f"outcome must be 0 or 1, got {which!r}")
    bra = basis.kets[which].conj()
    branch = np.tensordot(bra, state.tensor(), axes=([0], [qubit]))
    return _record(qubit, which, branch)


def measure_in_basis(
    state: PureState, qubit: int, basis: SingleQubitBasis
) -> tuple[MeasurementRecord, MeasurementRecord]:
    return tuple(project_arbitrary(state, qubit, basis, k) for k in (0, 1))  # type: ignore[return-value]


def embed_outcome(post_state: PureState, qubit: int, ket: Sequence[complex]) -> PureState:
    """Re-insert a single-qubit ``ket`` at position ``qubit`` of ``post_state``."""
    n = post_state.num_qubits + 1
    if not 0 <= qubit < n:
        raise QubitOutOfRange(f"qubit {qubit} out of range for a {n}-qubit state")
    joint = np.multiply.outer(np.asarray(ket, dtype=complex), post_state.tensor())
    return PureState(n, np.moveaxis(joint, 0, qubit).reshape(-1))
