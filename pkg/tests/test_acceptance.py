"""Exit criteria. A PASS/FAIL line per criterion is printed in the terminal summary."""

import math
import time
import timeit

import numpy as np

import oracles
from splitlink import __version__
from splitlink.classify import Analogue, classify, consistency_check
from splitlink.cli import main
from splitlink.io import ReportDocument, parse_report, render_report
from splitlink.links import chain3, hopf3
from splitlink.measure import SingleQubitBasis, measure_computational, project_arbitrary
from splitlink.profile import build_profile
from splitlink.schmidt import Bipartition, schmidt_decompose
from splitlink.state import PureState, construct_canonical, fidelity, from_amplitudes

S5 = math.sqrt(5)
GOLDEN = ((3 + S5) / 6, (3 - S5) / 6)

A, B, C = 0, 1, 2
STAR_TABLE = [
    # qubit, outcome, probability, rank, post-state amplitudes on the remaining pair
    (C, 0, 0.5, 1, [1, 0, 1, 0]),
    (C, 1, 0.5, 1, [0, 0, 1, 1]),
    (A, 0, 0.25, 1, [1, 0, 0, 0]),
    (A, 1, 0.75, 2, [1, 1, 0, 1]),
    (B, 0, 0.75, 2, [1, 0, 1, 1]),
    (B, 1, 0.25, 1, [0, 0, 0, 1]),
]


def test_criterion_1_table1_reproduction():
    wwbar = construct_canonical("wwbar")
    prof = build_profile(wwbar, "wwbar")
    assert len(prof.entries) == 6
    after_zero = from_amplitudes(2, [0, 1, 1, 1])
    after_one = from_amplitudes(2, [1, 1, 1, 0])
    for e in prof.entries:
        assert abs(e.probability - 0.5) <= 1e-12
        assert e.rank == 2
        expected = after_zero if e.outcome == 0 else after_one
        assert fidelity(e.post_state, expected) >= 1 - 1e-10
    per_call = min(timeit.repeat(lambda: build_profile(wwbar), number=100, repeat=5)) / 100
    print(f"build_profile(WWBAR): {per_call * 1e3:.3f} ms")
    assert per_call < 1e-3


def test_criterion_2_table2_reproduction():
    prof = build_profile(construct_canonical("star"), "star")
    assert len(prof.entries) == 6
    for q, k, p, r, post in STAR_TABLE:
        e = prof.entry(q, k)
        assert abs(e.probability - p) <= 1e-12
        assert e.rank == r
        assert fidelity(e.post_state, from_amplitudes(2, post)) >= 1 - 1e-10


def test_criterion_3_appendix_eigenvalues():
    seen = 0
    for name in ("wwbar", "star"):
        for e in build_profile(construct_canonical(name)).entries:
            if e.rank != 2:
                continue
            seen += 1
            assert max(abs(x - y) for x, y in zip(e.gram_eigenvalues, GOLDEN)) <= 1e-10
            assert abs(sum(e.gram_eigenvalues) - 1) <= 1e-12
    assert seen == 8  # six for WWBAR, two for Star


def test_criterion_4_classification_verdicts():
    assert classify(build_profile(construct_canonical("wwbar"))).primary_analogue is Analogue.HOPF3
    assert classify(build_profile(construct_canonical("ghz"))).primary_analogue is Analogue.BORROMEAN
    star = classify(build_profile(construct_canonical("star")))
    assert star.primary_analogue is Analogue.CHAIN3
    assert star.center == C
    assert sorted(star.borromean_outcomes) == [(A, 0), (B, 1)]


def test_criterion_5_dicke_projection():
    rec = project_arbitrary(construct_canonical("dicke42"), 3, SingleQubitBasis.hadamard(), 0)
    assert rec.post_state.num_qubits == 3
    assert fidelity(rec.post_state, construct_canonical("wwbar")) >= 1 - 1e-10


def _random_states(rng, count):
    """Dense, sparse and partly-product 3-qubit states in equal shares."""
    states = []
    for i in range(count):
        kind = i % 3
        if kind == 0:
            amps = oracles.random_amplitudes(rng, 3)
        elif kind == 1:
            amps = oracles.random_amplitudes(rng, 3, sparsity=0.6)
        else:
            single = oracles.random_amplitudes(rng, 1)
            pair = oracles.random_amplitudes(rng, 2, sparsity=0.3)
            order = rng.permutation(3)
            amps = PureState(3, np.kron(single, pair)).permute(list(order)).amplitudes
        states.append(PureState(3, amps))
    return states


def test_criterion_6_property_suite():
    rng = np.random.default_rng(6)
    start = time.perf_counter()
    states = _random_states(rng, 1000)
    verdicts = set()
    for s in states:
        amps = list(s.amplitudes)
        prof = build_profile(s)

        # (a) Born completeness
        for q in range(3):
            zero, one = measure_computational(s, q)
            assert abs(zero.probability + one.probability - 1) <= 1e-12

        # (b) ranks and spectra against the enumeration + SVD/density-matrix oracle
        for e in prof.entries:
            p, post = oracles.measure(amps, 3, e.qubit, e.outcome)
            assert abs(e.probability - p) <= 1e-12
            if post is None:
                assert e.rank is None
                continue
            expected = oracles.schmidt_spectrum(post, 2, [0])
            assert np.max(np.abs(np.array(e.gram_eigenvalues) - expected)) <= 1e-9
            assert e.rank == oracles.rank(expected)
        for q in range(3):
            res = schmidt_decompose(s, Bipartition.split(3, [q]))
            expected = oracles.schmidt_spectrum(amps, 3, [q])
            assert np.max(np.abs(np.array(res.gram_eigenvalues) - expected)) <= 1e-9
            assert res.rank == oracles.rank(expected)

        # (c) local-unitary invariance of every 1|2 spectrum
        moved = s.amplitudes
        for q in range(3):
            moved = oracles.apply_local(moved, 3, q, oracles.random_unitary(rng))
        moved = PureState(3, moved)
        for q in range(3):
            part = Bipartition.split(3, [q])
            before = np.array(schmidt_decompose(s, part).gram_eigenvalues)
            after = np.array(schmidt_decompose(moved, part).gram_eigenvalues)
            assert np.max(np.abs(before - after)) <= 1e-9

        # (d) relabeling covariance
        perm = list(rng.permutation(3))
        base = classify(prof)
        permuted = classify(build_profile(s.permute(perm)))
        new_pos = {old: new for new, old in enumerate(perm)}
        assert permuted.primary_analogue is base.primary_analogue
        assert permuted.center == (None if base.center is None else new_pos[base.center])
        assert sorted(permuted.borromean_outcomes) == sorted(
            (new_pos[q], k) for q, k in base.borromean_outcomes
        )
        verdicts.add(base.primary_analogue)

    elapsed = time.perf_counter() - start
    print(f"1000-state property suite: {elapsed:.2f} s; verdicts seen: {sorted(v.value for v in verdicts)}")
    assert len(verdicts) >= 3  # the sample exercises more than one rule
    assert elapsed < 10


def test_criterion_7_consistency_checks():
    wwbar = build_profile(construct_canonical("wwbar"))
    star = build_profile(construct_canonical("star"))
    assert consistency_check(wwbar, hopf3()).consistent
    assert consistency_check(star, chain3("C"), semantics="possibilistic").consistent
    assert not consistency_check(star, chain3("C"), semantics="necessitarian").consistent


def test_criterion_8_cli_contract(capsys, tmp_path):
    assert main(["analyze", "star", "--format", "json"]) == 0
    out = capsys.readouterr().out
    doc = parse_report(out)
    assert isinstance(doc, ReportDocument) and doc.tool_version == __version__
    assert parse_report(render_report(doc, "json")) == doc
    assert render_report(doc, "json") == out
    for q, k, p, r, _ in STAR_TABLE:
        e = doc.profile.entry(q, k)
        assert abs(e.probability - p) <= 1e-12 and e.rank == r

    bad = tmp_path / "malformed.json"
    bad.write_text('{"num_qubits": 3, "amplitudes": [[1, 0]')
    assert main(["analyze", "--file", str(bad)]) == 1
    err = capsys.readouterr().err
    assert str(bad) in err and "error" in err
