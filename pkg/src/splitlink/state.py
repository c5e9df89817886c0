"""Dense pure states over a handful of qubits.

Basis index convention is big-endian: qubit 0 is the leftmost symbol of the
ket, so ``|100>`` on three qubits is index 4.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DimensionMismatch, LengthMismatch, ZeroVector

NORM_TOL = 1e-12
MAX_QUBITS = 10


@dataclass(frozen=True, eq=False)
class PureState:
    """A normalized amplitude vector of length ``2**num_qubits``.

    The amplitude array is copied and frozen on construction. Use
    :func:`from_amplitudes` to build a state from an unnormalized vector.
    """

    num_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        n = self.num_qubits
        if not isinstance(n, (int, np.integer)) or isinstance(n, bool) or n < 1:
            raise ValueError(f"num_qubits must be a positive integer, got {n!r}")
        if n > MAX_QUBITS:
            raise ValueError(f"at most {MAX_QUBITS} qubits are supported, got {n}")
        amps = np.array(self.amplitudes, dtype=complex).reshape(-1)
        if amps.size != 2**n:
            raise LengthMismatch(f"expected {2**n} amplitudes for {n} qubits, got {amps.size}")
        if not np.all(np.isfinite(amps)):
            raise ValueError("amplitudes must be finite")
        norm2 = float(np.vdot(amps, amps).real)
        if abs(norm2 - 1.0) > NORM_TOL:
            raise ValueError(f"state is not normalized (squared norm {norm2!r})")
        amps.setflags(write=False)
        object.__setattr__(self, "num_qubits", int(n))
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    def tensor(self) -> np.ndarray:
        """Amplitudes reshaped to one axis of length 2 per qubit."""
        return self.amplitudes.reshape((2,) * self.num_qubits)

    def permute(self, order: Sequence[int]) -> PureState:
        """Reorder qubits: new qubit ``j`` is old qubit ``order[j]``."""
        if sorted(order) != list(range(self.num_qubits)):
            raise ValueError(f"{order!r} is not a permutation of the qubits")
        return PureState(self.num_qubits, self.tensor().transpose(order).reshape(-1))

    def __eq__(self, other):
        if not isinstance(other, PureState):
            return NotImplemented
        return self.num_qubits == other.num_qubits and np.array_equal(
            self.amplitudes, other.amplitudes
        )

    def __hash__(self):
        return hash((self.num_qubits, self.amplitudes.tobytes()))

    def __repr__(self):
        return f"PureState({self.num_qubits}, {ket_string(self)!r})"


class CanonicalState(enum.Enum):
    GHZ = "ghz"
    W = "w"
    WBAR = "wbar"
    WWBAR = "wwbar"
    STAR = "star"
    DICKE_4_2 = "dicke42"
    BELL_PHI_PLUS = "bell"


# Support of each canonical state as ket strings; all of them are uniform
# superpositions, so the support fixes the state.
_SUPPORTS: dict[CanonicalState, tuple[str, ...]] = {
    CanonicalState.GHZ: ("000", "111"),
    CanonicalState.W: ("001", "010", "100"),
    CanonicalState.WBAR: ("011", "101", "110"),
    CanonicalState.WWBAR: ("001", "010", "100", "011", "101", "110"),
    CanonicalState.STAR: ("000", "100", "101", "111"),
    CanonicalState.DICKE_4_2: tuple(
        "".join(bits)
        for bits in itertools.product("01", repeat=4)
        if bits.count("1") == 2
    ),
    CanonicalState.BELL_PHI_PLUS: ("00", "11"),
}


def canonical_support(which: CanonicalState) -> tuple[str, ...]:
    return _SUPPORTS[which]


def construct_canonical(which: CanonicalState | str) -> PureState:
    which = CanonicalState(which)
    support = _SUPPORTS[which]
    n = len(support[0])
    amps = np.zeros(2**n, dtype=complex)
    weight = 1.0 / np.sqrt(len(support))
    for ket in support:
        amps[int(ket, 2)] = weight
    return PureState(n, amps)


def from_amplitudes(num_qubits: int, amplitudes: Sequence[complex]) -> PureState:
    """Rescale ``amplitudes`` to unit norm, keeping relative phases."""
    amps = np.asarray(amplitudes, dtype=complex).reshape(-1)
    if num_qubits < 1 or amps.size != 2**num_qubits:
        raise LengthMismatch(
            f"expected {2**num_qubits if num_qubits >= 1 else '2^n'} amplitudes "
            f"for {num_qubits} qubits, got {amps.size}"
        )
    if not np.all(np.isfinite(amps)):
        raise ValueError("amplitudes must be finite")
    norm = float(np.linalg.norm(amps))
    if norm < NORM_TOL:
        raise ZeroVector("cannot normalize a zero vector")
    return PureState(num_qubits, amps / norm)


def basis_state(bits: str) -> PureState:
    """Computational basis ket, e.g. ``basis_state("010")``."""
    amps = np.zeros(2 ** len(bits), dtype=complex)
    amps[int(bits, 2)] = 1.0
    return PureState(len(bits), amps)


def product_state(*factors: PureState) -> PureState:
    amps = np.ones(1, dtype=complex)
    for f in factors:
        amps = np.kron(amps, f.amplitudes)
    return from_amplitudes(sum(f.num_qubits for f in factors), amps)


def fidelity(a: PureState, b: PureState) -> float:
    """``|<a|b>|^2``; insensitive to global phase."""
    if a.num_qubits != b.num_qubits:
        raise DimensionMismatch(
            f"cannot compare {a.num_qubits}-qubit and {b.num_qubits}-qubit states"
        )
    overlap = np.vdot(a.amplitudes, b.amplitudes)
    return float(min(1.0, abs(overlap) ** 2))


def qubit_label(index: int) -> str:
    """Letter name of a qubit: 0 -> "A", 1 -> "B", ..."""
    return chr(ord("A") + index)


def qubit_index(label: str) -> int:
    return ord(label.upper()) - ord("A")


def ket_string(state: PureState, digits: int = 6, tol: float = 1e-12) -> str:
    """Human-readable ket expansion, dropping terms with weight below ``tol``."""
    terms = []
    for idx, amp in enumerate(state.amplitudes):
        if abs(amp) ** 2 < tol:
            continue
        bits = format(idx, f"0{state.num_qubits}b")
        terms.append(f"{_format_amplitude(amp, digits)}|{bits}>")
    return " + ".join(terms).replace("+ -", "- ")


def _format_number(x: float, digits: int) -> str:
    x = round(x, digits) + 0.0  # folds -0.0
    return format(x, "g")


def _format_amplitude(amp: complex, digits: int) -> str:
    re, im = round(amp.real, digits), round(amp.imag, digits)
    if im == 0:
        return _format_number(re, digits)
    if re == 0:
        return f"{_format_number(im, digits)}j"
    sign = "+" if im > 0 else "-"
    return f"({_format_number(re, digits)}{sign}{_format_number(abs(im), digits)}j)"


def _prefactor(count: int) -> str:
    root = int(round(np.sqrt(count)))
    return f"1/{root}" if root * root == count else f"1/sqrt{count}"


def definition_string(which: CanonicalState) -> str:
    """Compact definition such as ``1/2(|000>+|100>+|101>+|111>)``."""
    support = _SUPPORTS[which]
    return f"{_prefactor(len(support))}(" + "+".join(f"|{k}>" for k in support) + ")"
