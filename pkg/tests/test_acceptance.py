"""Acceptance criteria, one test each.

Every test records a PASS/FAIL line through the ``acceptance`` fixture; the
lines are printed together at the end of the pytest run.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import product

import numpy as np
import pytest

from fanlemma.borsuk import OddMapSpec, solve
from fanlemma.complex import validate_symmetry
from fanlemma.errors import LabelingError
from fanlemma.flag import validate_flag
from fanlemma.generators import GeneratorSpec, generate, octahedral, paper_tetra
from fanlemma.labeling import Kind, Labeling, classify, from_representatives, random_labeling
from fanlemma.oracle import OracleReport, build_graph, count_alternating, count_tucker_endpoints, verify_path
from fanlemma.pathfinder import Mode, PathGraph, PathTrace, Termination, run, trace_antipode

from .conftest import sx

FAN_CONFIGS = [(n, k, m) for n in (1, 2, 3) for k in (0, 1) for m in (n + 1, n + 2)]
PER_CONFIG = 100


@dataclass
class FanInstance:
    config: tuple[int, int, int]
    seed: int
    graph: PathGraph
    labeling: Labeling
    counts: tuple[int, int]
    trace: PathTrace
    report: OracleReport


@pytest.fixture(scope="module")
def fan_instances():
    start = time.perf_counter()
    out = []
    for idx, (n, k, m) in enumerate(FAN_CONFIGS):
        cx, fl = generate(GeneratorSpec("octahedral", n, k))
        for i in range(PER_CONFIG):
            seed = 10_000 * idx + i
            lab = random_labeling(cx, m, seed=seed, forbid_complementary=True)
            out.append(
                FanInstance(
                    (n, k, m),
                    seed,
                    PathGraph(cx, fl, lab, Mode.FAN),
                    lab,
                    count_alternating(cx, lab),
                    run(cx, fl, lab, Mode.FAN),
                    build_graph(cx, fl, lab, Mode.FAN),
                )
            )
    return out, time.perf_counter() - start


def _first(failures):
    return f"first failure: {failures[0]}" if failures else ""


def test_1_fan_parity(fan_instances, acceptance):
    instances, elapsed = fan_instances
    bad = [
        (x.config, x.seed, x.counts)
        for x in instances
        if x.counts[0] % 2 != 1 or x.counts[0] != x.counts[1]
    ]
    ok = acceptance(
        "1 Fan parity",
        not bad and elapsed < 120,
        f"{len(instances)} instances, {len(bad)} failures, {elapsed:.1f}s {_first(bad)}",
    )
    assert ok


def test_2_constructive_agreement(fan_instances, acceptance):
    instances, _ = fan_instances
    bad = []
    for x in instances:
        end = x.trace.witness.simplex
        n = x.config[0]
        alternating_tops = {s for s, t in x.report.nodes.items() if t == 3 and len(s) == n + 1}
        if (
            x.trace.termination is not Termination.ALTERNATING_N
            or end not in alternating_tops
            or not verify_path(x.report, x.trace)
        ):
            bad.append((x.config, x.seed))
    ok = acceptance("2 Constructive agreement", not bad, f"{len(instances)} traces {_first(bad)}")
    assert ok


def test_3_degree_bound(fan_instances, acceptance):
    instances, _ = fan_instances
    bad = []
    for x in instances:
        r = x.report
        n = x.config[0]
        alt_tops = {s for s, t in r.nodes.items() if t == 3 and len(s) == n + 1}
        if max(r.degree.values()) > 2 or set(r.endpoints) != {r.h0, r.neg_h0} | alt_tops:
            bad.append((x.config, x.seed))
    ok = acceptance("3 Degree bound", not bad, f"{len(instances)} graphs {_first(bad)}")
    assert ok


def test_4_endpoint_parity(fan_instances, acceptance):
    instances, _ = fan_instances
    bad = [(x.config, x.seed, x.report.endpoint_count) for x in instances if x.report.endpoint_count % 4]
    ok = acceptance("4 Endpoint parity", not bad, f"{len(instances)} graphs {_first(bad)}")
    assert ok


def test_5_antipodal_pairing(fan_instances, acceptance):
    instances, _ = fan_instances
    bad = []
    for x in instances:
        r = x.report
        closed = r.claims()["paths_antipodal_closed"]
        mirror = trace_antipode(x.graph, x.trace)
        if not closed or mirror.simplices != r.path_from(r.neg_h0):
            bad.append((x.config, x.seed))
    ok = acceptance("5 Antipodal pairing", not bad, f"{len(instances)} decompositions {_first(bad)}")
    assert ok


def test_6_tucker_witness(acceptance):
    start = time.perf_counter()
    bad = []
    total = 0
    for n in (1, 2, 3):
        for k in (0, 1):
            cx, fl = generate(GeneratorSpec("octahedral", n, k))
            edges = cx.edges()
            for i in range(PER_CONFIG):
                lab = random_labeling(cx, n, seed=1000 * (10 * n + k) + i)
                trace = run(cx, fl, lab, Mode.TUCKER)
                u, w = trace.witness.edge
                pos, neg = count_tucker_endpoints(cx, fl, lab)
                total += 1
                if (
                    trace.termination is not Termination.COMPLEMENTARY_EDGE
                    or (u, w) not in edges
                    or lab[u] + lab[w] != 0
                    or pos != neg
                    or pos % 2 != 1
                ):
                    bad.append((n, k, i, (pos, neg)))
    ok = acceptance(
        "6 Tucker witness",
        not bad,
        f"{total} labelings, {time.perf_counter() - start:.1f}s {_first(bad)}",
    )
    assert ok


def test_7_tetrahedral_example(acceptance):
    cx, fl = paper_tetra()
    sym = validate_symmetry(cx)
    flag = validate_flag(cx, fl)
    results = []
    for x, y in product((1, -1, 2, -2), repeat=2):
        lab = from_representatives(cx, 2, {0: x, 1: y})
        trace = run(cx, fl, lab, Mode.TUCKER)
        u, w = trace.witness.edge
        results.append(trace.short_circuit and lab[u] + lab[w] == 0 and cx.antipode[u] == w)
    ok = acceptance(
        "7 Tetrahedral example",
        sym.ok and flag.ok and all(results),
        f"symmetry ok={sym.ok}, flag ok={flag.ok}, "
        f"{sum(results)}/{len(results)} labelings short-circuit",
    )
    assert ok


def test_8_canonical_count(acceptance):
    cx, fl = octahedral(2)
    lab = from_representatives(cx, 3, {0: 1, 1: 2, 2: 3})
    counts = count_alternating(cx, lab)
    trace = run(cx, fl, lab, Mode.FAN)
    expected = sx(2, 1, -2, 3)
    got = trace.witness.simplex
    ok = acceptance(
        "8 Canonical count",
        counts == (1, 1) and got == expected,
        f"counts={counts}, path ends at {list(got)} labels {list(trace.witness.labels)}, "
        f"expected {list(expected)}",
    )
    assert ok


def test_9_borsuk_bound(acceptance):
    start = time.perf_counter()
    rng = np.random.default_rng(2024)
    cx, fl = octahedral(2)
    ok_runs, degenerate, bad = 0, 0, []
    for i in range(20):
        a = rng.integers(-2, 3, size=(2, 3)).astype(float)
        if not a.any():
            a[0, 0] = 1.0
        for k in (0, 1, 2):
            try:
                w = solve(cx, fl, OddMapSpec.linear(a), refinements=k)
            except LabelingError:
                degenerate += 1
                continue
            ok_runs += 1
            limit = np.abs(a).sum(axis=1).max() * w.mesh
            if w.residual > limit + 1e-12:
                bad.append((i, k, w.residual, limit))
    elapsed = time.perf_counter() - start
    ok = acceptance(
        "9 Borsuk residual bound",
        not bad and ok_runs > 0 and elapsed < 60,
        f"{ok_runs} runs within bound, {degenerate} degenerate errors, {elapsed:.1f}s {_first(bad)}",
    )
    assert ok


def test_10_property_suite(acceptance):
    rnd = random.Random(10)
    flip_bad, facet_bad, with_pairs, aa_checked = [], [], 0, 0
    for _ in range(10_000):
        size = rnd.randint(1, 6)
        labels = [rnd.choice((1, -1)) * rnd.randint(1, 9) for _ in range(size)]
        if size >= 2 and rnd.random() < 0.3:
            labels[1] = -labels[0]
        rnd.shuffle(labels)
        has_pair = any(a + b == 0 for i, a in enumerate(labels) for b in labels[i + 1:])
        with_pairs += has_pair

        c, f = classify(labels), classify([-x for x in labels])
        if (
            c.kind is not f.kind
            or c.sign != (None if f.sign is None else -f.sign)
            or c.alternating_facets != f.alternating_facets
            or c.has_complementary_edge != f.has_complementary_edge
        ):
            flip_bad.append(labels)
        if c.kind is Kind.ALMOST_ALTERNATING and not has_pair:
            aa_checked += 1
            if len(c.alternating_facets) != 2 or len(set(c.facet_signs)) != 1:
                facet_bad.append(labels)
    ok = acceptance(
        "10 Property suite",
        not flip_bad and not facet_bad,
        f"10000 multisets ({with_pairs} with zero-sum pairs, {aa_checked} almost-alternating "
        f"without), {len(flip_bad) + len(facet_bad)} failures",
    )
    assert ok
