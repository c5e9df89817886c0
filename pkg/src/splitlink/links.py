"""Three-component links described only by what survives a single cut.

A link is reduced to its cut profile: for each component, the set of pairs
among the remaining two that are still linked once it is removed. Pairs are
frozensets of component labels.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .errors import UnknownComponent

Pair = frozenset


class LinkKind(enum.Enum):
    HOPF3 = "HOPF3"
    BORROMEAN = "BORROMEAN"
    CHAIN3 = "CHAIN3"


@dataclass(frozen=True)
class LinkModel:
    name: LinkKind
    components: tuple[str, str, str]
    cut_profile: Mapping[str, frozenset]
    center: Optional[str] = None

    def __post_init__(self):
        comps = self.components
        if len(comps) != 3 or len(set(comps)) != 3:
            raise ValueError(f"need three distinct components, got {comps!r}")
        if set(self.cut_profile) != set(comps):
            raise ValueError("cut profile must have one entry per component")
        if (self.center is not None) != (self.name is LinkKind.CHAIN3):
            raise ValueError("a center is given exactly for 3-chains")
        for cut_at, pairs in self.cut_profile.items():
            remaining = Pair(c for c in comps if c != cut_at)
            if not set(pairs) <= {remaining}:
                raise ValueError(f"after cutting {cut_at} only {set(remaining)} can be linked")
            expected_linked = {
                LinkKind.HOPF3: True,
                LinkKind.BORROMEAN: False,
                LinkKind.CHAIN3: cut_at != self.center,
            }[self.name]
            if bool(pairs) != expected_linked:
                raise ValueError(f"{self.name.value}: wrong cut result for {cut_at}")

    @property
    def title(self) -> str:
        if self.name is LinkKind.CHAIN3:
            return f"CHAIN3[center={self.center}]"
        return self.name.value


def _remaining(components: Sequence[str], cut_at: str) -> frozenset:
    return Pair(c for c in components if c != cut_at)


def hopf3(components: Sequence[str] = ("A", "B", "C")) -> LinkModel:
    comps = tuple(components)
    profile = {c: frozenset({_remaining(comps, c)}) for c in comps}
    return LinkModel(LinkKind.HOPF3, comps, profile)


def borromean(components: Sequence[str] = ("A", "B", "C")) -> LinkModel:
    comps = tuple(components)
    return LinkModel(LinkKind.BORROMEAN, comps, {c: frozenset() for c in comps})


def chain3(center: str, components: Sequence[str] = ("A", "B", "C")) -> LinkModel:
    """Open chain of three rings; the center is linked to both ends."""
    comps = tuple(components)
    if center not in comps:
        raise UnknownComponent(center)
    profile = {
        c: frozenset() if c == center else frozenset({_remaining(comps, c)}) for c in comps
    }
    return LinkModel(LinkKind.CHAIN3, comps, profile, center=center)


def cut(model: LinkModel, component: str) -> frozenset:
    try:
        return model.cut_profile[component]
    except KeyError:
        raise UnknownComponent(
            f"{component!r} is not a component of {model.title}"
        ) from None


def standard_models(components: Sequence[str] = ("A", "B", "C")) -> list[LinkModel]:
    return [hopf3(components), borromean(components)] + [
        chain3(c, components) for c in components
    ]
