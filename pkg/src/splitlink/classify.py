"""Read a three-qubit splitting profile as a link cut-profile.

A measured qubit plays the role of a cut ring; the residual pair is "linked"
when the post-measurement state has Schmidt rank 2. Only outcomes with
nonzero probability take part.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Mapping, NamedTuple, Optional

from .errors import InvalidMapping, WrongArity
from .links import LinkModel, cut, standard_models
from .profile import SplittingEntry, SplittingProfile
from .schmidt import EQUAL_TOL
from .state import qubit_label


class Analogue(enum.Enum):
    HOPF3 = "HOPF3"
    BORROMEAN = "BORROMEAN"
    CHAIN3 = "CHAIN3"
    UNCLASSIFIED = "UNCLASSIFIED"


class CutSemantics(enum.Enum):
    POSSIBILISTIC = "possibilistic"  # any outcome entangled => linked
    NECESSITARIAN = "necessitarian"  # every outcome entangled => linked


@dataclass(frozen=True)
class ClassificationResult:
    primary_analogue: Analogue
    center: Optional[int] = None
    borromean_outcomes: tuple[tuple[int, int], ...] = ()
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        if (self.center is not None) != (self.primary_analogue is Analogue.CHAIN3):
            raise ValueError("center is set exactly when the analogue is CHAIN3")
        if self.borromean_outcomes and self.primary_analogue is not Analogue.CHAIN3:
            raise ValueError("borromean outcomes only accompany a CHAIN3 verdict")


class Consistency(NamedTuple):
    consistent: bool
    mismatches: tuple[int, ...]


def _require_three(profile: SplittingProfile) -> None:
    if profile.num_qubits != 3:
        raise WrongArity(f"link analogues need 3 qubits, profile has {profile.num_qubits}")


def _live(entries) -> list[SplittingEntry]:
    return [e for e in entries if e.rank is not None]


def _entry_note(e: SplittingEntry) -> str:
    head = f"{qubit_label(e.qubit)}|{e.outcome}: p={e.probability:.6g}"
    if e.rank is None:
        return head + ", outcome never occurs"
    if e.rank == 1:
        return head + ", rank 1 (separable)"
    spectrum = ", ".join(f"{x:.6g}" for x in e.gram_eigenvalues[: e.rank])
    nonzero = e.gram_eigenvalues[: e.rank]
    kind = "maximal" if max(nonzero) - min(nonzero) <= EQUAL_TOL else "non-maximal"
    return head + f", rank {e.rank} ({kind}; spectrum {spectrum})"


def classify(profile: SplittingProfile) -> ClassificationResult:
    """Assign HOPF3, BORROMEAN, CHAIN3 or UNCLASSIFIED.

    Rules, first match wins: every live entry entangled gives HOPF3; every
    live entry separable gives BORROMEAN; exactly one qubit whose entries are
    all separable, with every other qubit having an entangled entry, gives
    CHAIN3 centered on it, and separable entries on the outer qubits are the
    Borromean-like outcomes.
    """
    _require_three(profile)
    notes = tuple(_entry_note(e) for e in profile.entries)
    live = _live(profile.entries)
    if all(e.rank >= 2 for e in live):
        return ClassificationResult(Analogue.HOPF3, notes=notes)
    if all(e.rank == 1 for e in live):
        return ClassificationResult(Analogue.BORROMEAN, notes=notes)

    severing = [
        q for q in range(3) if all(e.rank == 1 for e in _live(profile.for_qubit(q)))
    ]
    if len(severing) == 1:
        center = severing[0]
        outer = [q for q in range(3) if q != center]
        if all(any(e.rank >= 2 for e in _live(profile.for_qubit(q))) for q in outer):
            borromean_like = tuple(
                (e.qubit, e.outcome) for e in live if e.qubit != center and e.rank == 1
            )
            return ClassificationResult(Analogue.CHAIN3, center, borromean_like, notes)
    return ClassificationResult(Analogue.UNCLASSIFIED, notes=notes)


def residual_linked(
    profile: SplittingProfile, qubit: int, semantics: CutSemantics | str = CutSemantics.POSSIBILISTIC
) -> bool:
    """Whether measuring ``qubit`` counts as leaving the other two linked."""
    semantics = CutSemantics(semantics)
    verdicts = [e.rank >= 2 for e in _live(profile.for_qubit(qubit))]
    return any(verdicts) if semantics is CutSemantics.POSSIBILISTIC else all(verdicts)


def consistency_check(
    profile: SplittingProfile,
    model: LinkModel,
    qubit_to_component: Optional[Mapping[int, str]] = None,
    semantics: CutSemantics | str = CutSemantics.POSSIBILISTIC,
) -> Consistency:
    """Compare each qubit's cut verdict with the model's cut of its component.

    ``qubit_to_component`` defaults to qubit ``i`` -> ``model.components[i]``.
    Returns the qubits whose verdicts disagree.
    """
    _require_three(profile)
    if qubit_to_component is None:
        qubit_to_component = dict(enumerate(model.components))
    if set(qubit_to_component) != {0, 1, 2} or sorted(qubit_to_component.values()) != sorted(
        model.components
    ):
        raise InvalidMapping(
            f"{dict(qubit_to_component)!r} is not a bijection onto {model.components}"
        )
    mismatches = tuple(
        q
        for q in range(3)
        if residual_linked(profile, q, semantics) != bool(cut(model, qubit_to_component[q]))
    )
    return Consistency(not mismatches, mismatches)


def matching_models(
    profile: SplittingProfile, semantics: CutSemantics | str = CutSemantics.POSSIBILISTIC
) -> list[LinkModel]:
    """Standard models (labelled A, B, C) consistent with ``profile`` under the identity map."""
    return [m for m in standard_models() if consistency_check(profile, m, None, semantics).consistent]
