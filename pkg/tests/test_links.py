import itertools

import pytest

from splitlink.errors import UnknownComponent
from splitlink.links import LinkKind, LinkModel, borromean, chain3, cut, hopf3, standard_models


def test_cut_examples():
    assert cut(hopf3(), "A") == {frozenset({"B", "C"})}
    assert cut(borromean(), "B") == frozenset()
    assert cut(chain3("C"), "C") == frozenset()


def test_outer_cut_of_chain_leaves_center_linked():
    assert cut(chain3("A"), "B") == {frozenset({"A", "C"})}


def test_unknown_component():
    with pytest.raises(UnknownComponent):
        cut(hopf3(), "D")
    with pytest.raises(UnknownComponent):
        chain3("Z")


def test_standard_models():
    models = standard_models()
    assert len(models) == 5
    assert [m.name for m in models] == [LinkKind.HOPF3, LinkKind.BORROMEAN] + [LinkKind.CHAIN3] * 3
    assert [m.center for m in models[2:]] == ["A", "B", "C"]


@pytest.mark.parametrize("perm", list(itertools.permutations("ABC")))
def test_hopf3_symmetric_under_relabeling(perm):
    model = hopf3(perm)
    for c in perm:
        assert cut(model, c) == {frozenset(set(perm) - {c})}


def test_borromean_always_falls_apart():
    assert all(cut(borromean(), c) == frozenset() for c in "ABC")


@pytest.mark.parametrize("center", "ABC")
def test_only_the_center_severs(center):
    model = chain3(center)
    empty = [c for c in model.components if not cut(model, c)]
    assert empty == [center]


def test_invariants_enforced():
    with pytest.raises(ValueError):
        LinkModel(LinkKind.HOPF3, ("A", "B", "C"), {c: frozenset() for c in "ABC"})
    with pytest.raises(ValueError):
        LinkModel(LinkKind.BORROMEAN, ("A", "B", "C"), borromean().cut_profile, center="A")
    with pytest.raises(ValueError):
        LinkModel(LinkKind.CHAIN3, ("A", "B", "C"), hopf3().cut_profile, center="A")
    with pytest.raises(ValueError):
        LinkModel(LinkKind.HOPF3, ("A", "A", "C"), {})


def test_titles():
    assert hopf3().title == "HOPF3"
    assert chain3("B").title == "CHAIN3[center=B]"
