"""Acceptance gate: one test per criterion, one printed pass/fail line each.

Run with ``pytest tests/test_acceptance.py -v`` (add ``-s`` to see the
lines).  Criterion 6 is expected RED on one leg: the collapse-open demo
replays a construction whose advertised failure provably cannot occur over
carrier ideals; the demo therefore exits 1 by design and the criterion, as
stated, cannot pass.  See the demo output for the argument.
"""

import time

import pytest

import oracles
from idealtop import (ALL_THEOREM_IDS, Ideal, IdealSpace, SearchBounds,
                      check_local_function_laws, cli, discrete,
                      enumerate_ideals, enumerate_topologies,
                      find_counterexample, local_function,
                      local_function_by_definition, star_topology,
                      verify_exhaustive)
from idealtop import ctor_add_generic_point, ctor_add_open_point


def _report(num: int, ok: bool, detail: str) -> None:
    print(f"ACCEPTANCE {num} {'PASS' if ok else 'FAIL'}: {detail}")
    assert ok, f"criterion {num}: {detail}"


def _spaces(n):
    for top in enumerate_topologies(n):
        for ideal in enumerate_ideals(n):
            yield IdealSpace(top, ideal)


def test_criterion_1_operator_laws():
    start = time.perf_counter()
    failures = 0
    spaces = 0
    for n in (1, 2, 3):
        for s in _spaces(n):
            spaces += 1
            failures += sum(not law.holds
                            for law in check_local_function_laws(s))
    elapsed = time.perf_counter() - start
    _report(1, failures == 0 and elapsed < 10.0,
            f"5 laws x {spaces} spaces, {failures} failures, {elapsed:.1f}s")


def test_criterion_2_star_topology_sandwich():
    bad = 0
    for n in (1, 2, 3):
        for top in enumerate_topologies(n):
            base = set(top.opens())
            for ideal in enumerate_ideals(n):
                star = star_topology(IdealSpace(top, ideal))
                if not base <= set(star.opens()):
                    bad += 1
            if star_topology(IdealSpace(top, Ideal(n, 0))) != top:
                bad += 1
            improper = Ideal(n, top.full)
            if star_topology(IdealSpace(top, improper)) != discrete(n):
                bad += 1
    _report(2, bad == 0,
            f"base <= star <= discrete everywhere, trivial/improper ideals "
            f"pin both ends, {bad} violations")


def test_criterion_3_local_function_oracle_agreement():
    disagreements = 0
    checked = 0
    for n in (1, 2, 3):
        for s in _spaces(n):
            opens = s.top.opens()
            m = s.ideal.carrier
            for a in range(1 << n):
                checked += 1
                routes = {
                    local_function(s, a),
                    local_function_by_definition(s, a),
                    oracles.local_function_definitional(n, opens, m, a),
                    s.top.closure(a & ~m),
                }
                if len(routes) != 1:
                    disagreements += 1
    # deterministic spot sample at four points
    tops4 = list(enumerate_topologies(4))
    for ti in range(0, len(tops4), 37):
        top = tops4[ti]
        for carrier in (0b0000, 0b0101, 0b1000, 0b1111):
            s = IdealSpace(top, Ideal(4, carrier))
            opens = top.opens()
            for a in range(16):
                checked += 1
                routes = {
                    local_function(s, a),
                    local_function_by_definition(s, a),
                    oracles.local_function_definitional(4, opens, carrier, a),
                    top.closure(a & ~carrier),
                }
                if len(routes) != 1:
                    disagreements += 1
    _report(3, disagreements == 0,
            f"{checked} subset evaluations, 4 routes each, "
            f"{disagreements} disagreements")


def test_criterion_4_theorem_certification():
    start = time.perf_counter()
    bounds = SearchBounds(3, 3)
    not_certified = []
    for tid in ALL_THEOREM_IDS:
        r = verify_exhaustive(tid, bounds)
        if not r.certified:
            not_certified.append(tid)
        assert r.instances_checked == 1519332, tid
    elapsed = time.perf_counter() - start
    deterministic = verify_exhaustive("TC2", bounds, workers=2).same_result(
        verify_exhaustive("TC2", bounds, workers=1))
    _report(4, not not_certified and elapsed < 600.0 and deterministic,
            f"13 theorems x 1519332 instances, failures={not_certified or 'none'}, "
            f"{elapsed:.1f}s, worker-count independent={deterministic}")


def test_criterion_5_continuity_characterizations():
    from idealtop import continuity_characterizations, enumerate_maps
    bad = 0
    triples = 0
    for n_dom in (1, 2, 3):
        for n_cod in (1, 2, 3):
            for t_dom in enumerate_topologies(n_dom):
                for t_cod in enumerate_topologies(n_cod):
                    for f in enumerate_maps(n_dom, n_cod):
                        triples += 1
                        if len(set(continuity_characterizations(
                                f, t_dom, t_cod).values())) != 1:
                            bad += 1
    _report(5, bad == 0, f"5 characterizations x {triples} triples, {bad} splits")


def test_criterion_6_necessity_demos(capsys):
    results = {}
    for name in cli.DEMOS:
        results[name] = cli.main(["demo", name])
    capsys.readouterr()  # demo narration isn't part of the acceptance line
    detail = ", ".join(f"{name}={'ok' if rc == 0 else f'exit {rc}'}"
                       for name, rc in results.items())
    _report(6, all(rc == 0 for rc in results.values()), detail)


def test_criterion_7_necessity_search():
    checks = (
        ("CONTPSI", ("surjective",)),
        ("OPENBIJ", ("surjective",)),
        ("CONTPSI", ("injective",)),
    )
    ok = True
    details = []
    for tid, drop in checks:
        start = time.perf_counter()
        r = find_counterexample(tid, drop, SearchBounds(3, 3))
        elapsed = time.perf_counter() - start
        good = (r.counterexample is not None and elapsed < 60.0)
        if good:
            v = r.counterexample.verdict
            remaining = [val for name, val in v.hypotheses if name not in drop]
            spec_designated = {"CONTPSI": "a", "OPENBIJ": "a"}[tid]
            good = all(remaining) and not v.conclusion(spec_designated)
        ok = ok and good
        details.append(f"{tid}-drop-{drop[0]}:"
                       f"{'witness' if good else 'MISSING'} {elapsed:.1f}s")
    _report(7, ok, "; ".join(details))


def test_criterion_8_enumeration_counts():
    ok = True
    details = []
    expected = {1: 1, 2: 4, 3: 29, 4: 355}
    for n, want in expected.items():
        got = sum(1 for _ in enumerate_topologies(n))
        oracle = len(oracles.family_filter_topologies(n))
        ok = ok and got == want == oracle
        details.append(f"top(n={n})={got}/oracle {oracle}")
    for n in (1, 2, 3, 4):
        got = sum(1 for _ in enumerate_ideals(n))
        oracle = len(oracles.family_filter_ideals(n))
        ok = ok and got == 2 ** n == oracle
        details.append(f"ideal(n={n})={got}/oracle {oracle}")
    _report(8, ok, ", ".join(details))


def test_criterion_9_construction_fidelity():
    bad = 0
    seeds = 0
    for n in (1, 2, 3):
        for seed in _spaces(n):
            seeds += 1
            ext = ctor_add_open_point(seed)
            z = ext.new_point
            if any((local_function(ext.space, a) >> z) & 1
                   for a in range(ext.space.full + 1)):
                bad += 1
            ext = ctor_add_generic_point(seed)
            z = ext.new_point
            if any(not (local_function(ext.space, a) >> z) & 1
                   for a in range(ext.space.full + 1)
                   if not ext.space.ideal.contains(a)):
                bad += 1
    _report(9, bad == 0,
            f"{seeds} seeds: open-point never in a local function, "
            f"generic point in every non-small one, {bad} violations")
