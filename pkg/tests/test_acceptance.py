"""Acceptance gate: one test and one printed PASS/FAIL line per criterion."""

import random
import time

from switchiso.classify import (
    apply_automorphism,
    automorphic_type_count,
    canonical_form,
    check_min_degree_bound,
    enumerate_isomorphism_classes,
    frustration_index,
)
from switchiso.graphs import automorphism_group, builtin_graph, enumerate_cycles
from switchiso.k6 import reference_signatures
from switchiso.signatures import (
    Signature,
    cut_space_basis,
    cycle_sign,
    is_switching_equivalent,
    negative_cycle_spectrum,
    reduce_bits,
    switch,
    unbalanced_cycle_set,
)

from oracles import orbit_count_by_averaging

K6 = builtin_graph("complete", 6)
K5 = builtin_graph("complete", 5)
K4 = builtin_graph("complete", 4)
K3 = builtin_graph("complete", 3)


def _report(num: int, name: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    line = f"criterion {num}: {status}  {name}"
    if detail:
        line += f"  [{detail}]"
    print(line)


def test_criterion_1_class_counts():
    start = time.perf_counter()
    counts = {
        "complete:6": len(enumerate_isomorphism_classes(K6)),
        "complete:5": len(enumerate_isomorphism_classes(K5)),
        "complete:4": len(enumerate_isomorphism_classes(K4)),
        "complete:3": len(enumerate_isomorphism_classes(K3)),
        "petersen": len(enumerate_isomorphism_classes(builtin_graph("petersen"))),
    }
    elapsed = time.perf_counter() - start
    want = {
        "complete:6": 16,
        "complete:5": 7,
        "complete:4": 3,
        "complete:3": 2,
        "petersen": 6,
    }
    ok = counts == want and elapsed < 10.0
    _report(1, "class counts 16/7/3/2 and petersen 6", ok, f"{elapsed:.2f}s")
    assert counts == want
    assert elapsed < 10.0


def test_criterion_2_class_spectrum_table():
    expected_triples = {
        (0, 0, 0),
        (4, 12, 24),
        (6, 18, 24),
        (8, 20, 32),
        (8, 24, 40),
        (10, 22, 36),
        (12, 24, 24),
        (10, 18, 36),
        (10, 26, 36),
        (12, 24, 32),
        (12, 20, 40),
        (14, 18, 36),
        (8, 24, 48),
        (16, 12, 48),
        (10, 30, 36),
        (20, 0, 72),
    }
    expected_by_label = {
        "sigma0": (0, 0, 0),
        "sigma1": (4, 12, 24),
        "sigma2": (6, 18, 24),
        "sigma3": (8, 20, 32),
        "sigma4": (8, 24, 40),
        "sigma5": (10, 22, 36),
        "sigma6": (12, 24, 24),
        "sigma7": (10, 18, 36),
        "sigma8": (10, 26, 36),
        "sigma9": (12, 24, 32),
        "sigma10": (12, 20, 40),
        "sigma11": (14, 18, 36),
        "sigma12": (8, 24, 48),
        "sigma13": (12, 24, 32),
        "sigma14": (12, 20, 40),
        "sigma15": (16, 12, 48),
        "sigma16": (10, 30, 36),
        "sigma17": (12, 24, 24),
        "sigma18": (20, 0, 72),
    }
    reports = enumerate_isomorphism_classes(K6, max_cycle_len=5)
    computed_triples = {r.spectrum.triple() for r in reports}
    triple_by_key = {r.canonical.bits: r.spectrum.triple() for r in reports}
    landed = {
        label: triple_by_key[canonical_form(sig).bits]
        for label, sig in reference_signatures().items()
    }
    mismatches = {
        label: (expected_by_label[label], landed[label])
        for label in landed
        if landed[label] != expected_by_label[label]
    }
    ok = computed_triples == expected_triples and not mismatches
    _report(
        2,
        "triple set and representative placement",
        ok,
        f"missing from computed: {sorted(expected_triples - computed_triples)}, "
        f"unexpected in computed: {sorted(computed_triples - expected_triples)}, "
        f"representative mismatches: {mismatches}",
    )
    assert computed_triples == expected_triples, (
        f"expected triples not produced: {sorted(expected_triples - computed_triples)}; "
        f"produced triples not expected: {sorted(computed_triples - expected_triples)}"
    )
    assert not mismatches, f"representatives landing on other triples: {mismatches}"


def test_criterion_3_coset_counts_exhaustive():
    results = {}
    for name, g, want in (
        ("complete:6", K6, 1024),
        ("complete:3", K3, 2),
        ("petersen", builtin_graph("petersen"), 64),
    ):
        basis = cut_space_basis(g)
        distinct = {reduce_bits(bits, basis) for bits in range(1 << g.m)}
        results[name] = (len(distinct), want)
        assert 1 << (g.m - g.n + g.c) == want
    ok = all(got == want for got, want in results.values())
    _report(3, "distinct coset reductions are 2^(m-n+c)", ok, str(results))
    for name, (got, want) in results.items():
        assert got == want, f"{name}: {got} != {want}"


def test_criterion_4_automorphic_type_counts():
    got = tuple(automorphic_type_count(K6, k, 2) for k in range(7))
    want = (1, 1, 2, 4, 5, 4, 2)
    ok = got == want and sum(got) == 19
    _report(4, "type counts by size with degree bound 2", ok, f"got {got}")
    assert got == want
    assert sum(got) == 19


def test_criterion_5_switching_witnesses():
    refs = reference_signatures()
    group = automorphism_group(K6)
    cases = (
        ("sigma6", {1, 2, 3}, "sigma17"),
        ("sigma10", {0, 2, 4}, "sigma14"),
        ("sigma13", {1, 3, 5}, "sigma9"),
    )
    results = {}
    for src, switch_set, dst in cases:
        switched = switch(refs[src], switch_set)
        in_orbit = any(
            apply_automorphism(switched, a) == refs[dst] for a in group
        )
        results[f"{src}->{dst}"] = in_orbit
    ok = all(results.values())
    _report(5, "stated switchings land in the partner's orbit", ok, str(results))
    assert all(results.values()), results


def test_criterion_6_frustration_and_degree_bounds():
    reports = enumerate_isomorphism_classes(K6)
    max_frustration = max(r.frustration for r in reports)
    max_degree = 0
    for r in reports:
        deg = [0] * 6
        for u, v in r.min_rep.negative_edges:
            deg[u] += 1
            deg[v] += 1
        max_degree = max(max_degree, max(deg))
    bounds_ok = all(
        check_min_degree_bound(builtin_graph("complete", n)) for n in range(3, 7)
    )
    ok = max_frustration <= 6 and max_degree <= 2 and bounds_ok
    _report(
        6,
        "frustration <= 6, minimiser degree <= 2, degree bound on K3..K6",
        ok,
        f"max frustration {max_frustration}, max degree {max_degree}",
    )
    assert max_frustration <= 6
    assert max_degree <= 2
    assert bounds_ok


def test_criterion_7_equivalence_vs_unbalanced_cycle_sets():
    # exhaustive on K4
    basis = cut_space_basis(K4)
    reduced = [reduce_bits(bits, basis) for bits in range(1 << 6)]
    cycle_sets = [unbalanced_cycle_set(Signature(K4, bits)) for bits in range(1 << 6)]
    exhaustive_ok = all(
        (reduced[b1] == reduced[b2]) == (cycle_sets[b1] == cycle_sets[b2])
        for b1 in range(1 << 6)
        for b2 in range(1 << 6)
    )
    # sampled on K5 and K6, with equivalent pairs mixed in
    rng = random.Random(97)
    sampled_trials = 0
    sampled_ok = True
    for g in (K5, K6):
        for _ in range(500):
            s1 = Signature(g, rng.randrange(1 << g.m))
            if rng.random() < 0.5:
                s2 = switch(s1, {v for v in range(g.n) if rng.random() < 0.5})
            else:
                s2 = Signature(g, rng.randrange(1 << g.m))
            same = is_switching_equivalent(s1, s2)
            if same != (unbalanced_cycle_set(s1) == unbalanced_cycle_set(s2)):
                sampled_ok = False
            sampled_trials += 1
    ok = exhaustive_ok and sampled_ok and sampled_trials >= 1000
    _report(
        7,
        "equivalence coincides with equal unbalanced cycle sets",
        ok,
        f"{sampled_trials} sampled pairs",
    )
    assert exhaustive_ok
    assert sampled_ok
    assert sampled_trials >= 1000


def test_criterion_8_structural_properties():
    # switching invariance of cycle signs: exhaustive K4, sampled K6
    cycles4 = enumerate_cycles(K4, 4)
    signs_ok = all(
        cycle_sign(switch(Signature(K4, bits), {v for v in range(4) if (s >> v) & 1}), c)
        == cycle_sign(Signature(K4, bits), c)
        for bits in range(1 << 6)
        for s in range(1 << 4)
        for c in cycles4
    )
    rng = random.Random(83)
    cycles6 = enumerate_cycles(K6, 6)
    for _ in range(100):
        sig = Signature(K6, rng.randrange(1 << 15))
        sw = switch(sig, {v for v in range(6) if rng.random() < 0.5})
        c = cycles6[rng.randrange(len(cycles6))]
        if cycle_sign(sw, c) != cycle_sign(sig, c):
            signs_ok = False
    # canonical form invariance over random switch and automorphism mixes
    group = automorphism_group(K6)
    violations = 0
    trials = 1000
    for _ in range(trials):
        sig = Signature(K6, rng.randrange(1 << 15))
        member = switch(sig, {v for v in range(6) if rng.random() < 0.5})
        member = apply_automorphism(member, group.elements[rng.randrange(group.order)])
        if canonical_form(member) != canonical_form(sig):
            violations += 1
    # partition sizes and the averaging-lemma cross count
    reports = enumerate_isomorphism_classes(K6)
    sizes_ok = sum(r.class_size for r in reports) == 1 << 15 and all(
        r.class_size % 32 == 0 for r in reports
    )
    averaged = orbit_count_by_averaging(K6)
    ok = signs_ok and violations == 0 and sizes_ok and averaged == 16 == len(reports)
    _report(
        8,
        "sign invariance, canonical invariance, partition sizes, orbit count",
        ok,
        f"{trials} trials, {violations} violations, averaged count {averaged}",
    )
    assert signs_ok
    assert violations == 0
    assert sizes_ok
    assert averaged == 16
    assert len(reports) == 16
