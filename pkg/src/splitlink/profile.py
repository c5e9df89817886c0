"""Splitting profiles: every computational-basis measurement of every qubit."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .measure import measure_computational
from .schmidt import Bipartition, schmidt_decompose
from .state import PureState


@dataclass(frozen=True)
class SplittingEntry:
    qubit: int
    outcome: int
    probability: float
    rank: Optional[int]
    gram_eigenvalues: Optional[tuple[float, ...]]
    post_state: Optional[PureState] = None

    @property
    def entangled(self) -> Optional[bool]:
        return None if self.rank is None else self.rank >= 2


@dataclass(frozen=True)
class SplittingProfile:
    state_label: str
    num_qubits: int
    entries: tuple[SplittingEntry, ...]

    def for_qubit(self, qubit: int) -> tuple[SplittingEntry, ...]:
        return tuple(e for e in self.entries if e.qubit == qubit)

    def entry(self, qubit: int, outcome: int) -> SplittingEntry:
        for e in self.entries:
            if e.qubit == qubit and e.outcome == outcome:
                return e
        raise KeyError((qubit, outcome))


def build_profile(state: PureState, label: str = "") -> SplittingProfile:
    """Measure each qubit in turn and record the residual Schmidt rank.

    The post-measurement register is split as its first qubit against the
    rest, which for three qubits is the pair of remaining single qubits.
    """
    rest = state.num_qubits - 1
    partition = Bipartition.split(rest, [0])
    entries = []
    for q in range(state.num_qubits):
        for rec in measure_computational(state, q):
            if rec.post_state is None:
                entries.append(SplittingEntry(q, rec.outcome, rec.probability, None, None))
                continue
            if rest == 1:
                rank, spectrum = 1, (1.0,)
            else:
                res = schmidt_decompose(rec.post_state, partition)
                rank, spectrum = res.rank, res.gram_eigenvalues
            entries.append(
                SplittingEntry(q, rec.outcome, rec.probability, rank, spectrum, rec.post_state)
            )
    return SplittingProfile(label, state.num_qubits, tuple(entries))
