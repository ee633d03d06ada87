"""Brute-force ground truth for the path-following solver.

Everything here is recomputed from the definitions, independently of
``pathfinder``: alternation is tested directly on the label pattern,
carriers come from enumerating the faces of every hemisphere simplex, and
adjacency is checked pair by pair. The pathfinder is only consulted at the
end, for a pointwise comparison.

Adjacency between a node and one of its facets requires, besides the facet
relation, the intersection to be alternating and its sign to match the sign
of the carrier of the union, that the larger simplex be full-dimensional in
its carrier. Without that restriction an alternating (d-1)-simplex inside
``H_d`` would also be joined to agreeable d-simplices interior to
``H_{d+1}`` containing it, and degrees of three appear.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations

from .complex import Simplex, SymmetricComplex
from .flag import HemisphereFlag
from .labeling import Labeling
from .pathfinder import Mode, PathGraph, PathTrace

_CARRIER_CACHE_ATTR = "_oracle_carriers"


def alternating_sign(labels) -> int | None:
    """Sign if ``labels`` reads k0, -k1, k2, ... (or its negative) with 0 < k0 < k1 < ..."""
    ordered = sorted(labels, key=abs)
    mags = [abs(x) for x in ordered]
    if any(b <= a for a, b in zip(mags, mags[1:])):
        return None
    first = 1 if ordered[0] > 0 else -1
    for i, x in enumerate(ordered):
        if (1 if x > 0 else -1) != first * (-1) ** i:
            return None
    return first


def count_alternating(complex_: SymmetricComplex, labeling: Labeling) -> tuple[int, int]:
    """Numbers of positive and negative alternating maximal simplices."""
    pos = neg = 0
    for top in complex_.maximal_simplices:
        s = alternating_sign([labeling[v] for v in top])
        if s == 1:
            pos += 1
        elif s == -1:
            neg += 1
    return pos, neg


def carrier_table(flag: HemisphereFlag) -> dict[Simplex, tuple[int, int] | None]:
    """Carrier ``(d, sign)`` of every face of every hemisphere simplex.

    ``None`` marks a face whose minimal level is reached on both sides.
    Cached on the flag.
    """
    cached = getattr(flag, _CARRIER_CACHE_ATTR, None)
    if cached is not None:
        return cached
    seen: dict[Simplex, set[tuple[int, int]]] = defaultdict(set)
    for d in range(len(flag.levels)):
        for sign in (1, -1):
            for s in flag.side(d, sign):
                for k in range(1, len(s) + 1):
                    for f in combinations(s, k):
                        seen[f].add((d, sign))
    table: dict[Simplex, tuple[int, int] | None] = {}
    for f, hits in seen.items():
        low = min(d for d, _ in hits)
        signs = {sign for d, sign in hits if d == low}
        table[f] = (low, signs.pop()) if len(signs) == 1 else None
    setattr(flag, _CARRIER_CACHE_ATTR, table)
    return table


def _node_type(sigma, labels, carrier, mode: Mode) -> int | None:
    d, c_sign = carrier
    k = len(sigma) - 1
    own = alternating_sign(labels)
    if k == d - 1:
        return 1 if own == c_sign else None
    if k != d:
        return None
    if own is not None:
        return 3
    facet_signs = [
        alternating_sign(labels[:i] + labels[i + 1:]) for i in range(len(labels))
    ] if len(labels) > 1 else []
    facet_signs = [s for s in facet_signs if s is not None]
    if not facet_signs:
        return None
    complementary = any(a + b == 0 for a, b in combinations(labels, 2))
    if complementary:
        if mode is Mode.TUCKER and c_sign in facet_signs:
            return 2
        return None
    return 2 if set(facet_signs) == {c_sign} else None


@dataclass
class OracleReport:
    mode: Mode
    positive_count: int
    negative_count: int
    nodes: dict[Simplex, int]
    edges: list[tuple[Simplex, Simplex]]
    degree: dict[Simplex, int]
    paths: list[list[Simplex]]
    cycles: list[list[Simplex]]
    h0: Simplex
    neg_h0: Simplex
    violations: list[str] = field(default_factory=list)
    pathfinder_mismatches: list[str] = field(default_factory=list)
    tucker_endpoints: tuple[int, int] = (0, 0)
    n: int = 0
    antipode: tuple[int, ...] = ()
    complementary: dict[Simplex, bool] = field(default_factory=dict)

    @property
    def endpoint_count(self) -> int:
        return sum(1 for d in self.degree.values() if d == 1)

    @property
    def endpoints(self) -> list[Simplex]:
        return sorted(s for s, d in self.degree.items() if d == 1)

    def path_from(self, start: Simplex) -> list[Simplex] | None:
        for p in self.paths:
            if p[0] == start:
                return p
            if p[-1] == start:
                return p[::-1]
        return None

    def claims(self) -> dict[str, bool]:
        """The degree, parity and pairing statements, evaluated on this instance."""
        out = {
            "max_degree_le_2": all(d <= 2 for d in self.degree.values()),
            "min_degree_ge_1": all(d >= 1 for d in self.degree.values()),
            "endpoints_multiple_of_4": self.endpoint_count % 4 == 0,
            "paths_antipodal_closed": self._antipodal_closed(),
            "pathfinder_agrees": not self.pathfinder_mismatches,
        }
        alt_top = {s for s, t in self.nodes.items() if t == 3 and len(s) == self.n + 1}
        expected = {self.h0, self.neg_h0} | alt_top
        if self.mode is Mode.FAN:
            out["positive_count_odd"] = self.positive_count % 2 == 1
            out["counts_equal"] = self.positive_count == self.negative_count
        else:
            pos, neg = self.tucker_endpoints
            out["tucker_counts_odd"] = pos % 2 == 1 and neg % 2 == 1
            out["tucker_counts_equal"] = pos == neg
            expected |= {s for s, t in self.nodes.items() if t == 2 and self.complementary[s]}
        out["degree_one_characterization"] = set(self.endpoints) == expected
        return out

    def _anti(self, s: Simplex) -> Simplex:
        return tuple(sorted(self.antipode[v] for v in s))

    def _antipodal_closed(self) -> bool:
        keys = {tuple(p) for p in self.paths} | {tuple(p[::-1]) for p in self.paths}
        for p in self.paths:
            image = tuple(self._anti(s) for s in p)
            if image not in keys:
                return False
            if set(image) == set(p):
                return False
        return True

    @property
    def ok(self) -> bool:
        return not self.violations and all(self.claims().values())

    def to_json(self, full: bool = False) -> dict:
        out = {
            "mode": self.mode.value,
            "positive_count": self.positive_count,
            "negative_count": self.negative_count,
            "node_count": len(self.nodes),
            "edge_count": len(self.edges),
            "endpoint_count": self.endpoint_count,
            "endpoints": [list(s) for s in self.endpoints],
            "path_lengths": [len(p) for p in self.paths],
            "cycle_count": len(self.cycles),
            "claims": self.claims(),
            "violations": self.violations,
            "pathfinder_mismatches": self.pathfinder_mismatches,
        }
        if self.mode is Mode.TUCKER:
            out["tucker_endpoints"] = list(self.tucker_endpoints)
        if full:
            out["edges"] = [[list(a), list(b)] for a, b in self.edges]
            out["paths"] = [[list(s) for s in p] for p in self.paths]
            out["cycles"] = [[list(s) for s in c] for c in self.cycles]
        return out


def build_graph(
    complex_: SymmetricComplex,
    flag: HemisphereFlag,
    labeling: Labeling,
    mode: Mode | str = Mode.FAN,
    literal: bool = False,
    compare: bool = True,
) -> OracleReport:
    """Materialize the whole graph by scanning every simplex of the complex.

    ``literal=True`` drops the full-dimensionality requirement on the larger
    simplex of an adjacent pair (see module docstring); useful only to study
    the unrestricted reading. ``compare`` cross-checks node sets and neighbor
    lists against ``pathfinder.PathGraph``.
    """
    mode = Mode(mode)
    table = carrier_table(flag)
    violations: list[str] = []
    lab = labeling.labels

    nodes: dict[Simplex, int] = {}
    carriers: dict[Simplex, tuple[int, int]] = {}
    labels_of: dict[Simplex, list[int]] = {}
    for sigma in complex_.all_simplices():
        c = table.get(sigma)
        if c is None:
            violations.append(
                f"{list(sigma)} has {'no' if sigma not in table else 'an ambiguous'} carrier"
            )
            continue
        labels = [lab[v] for v in sigma]
        t = _node_type(sigma, labels, c, mode)
        if t is not None:
            nodes[sigma] = t
            carriers[sigma] = c
            labels_of[sigma] = labels

    adjacency: dict[Simplex, set[Simplex]] = {s: set() for s in nodes}
    for rho, c in carriers.items():
        if not literal and len(rho) - 1 != c[0]:
            continue
        if len(rho) == 1:
            continue
        for i in range(len(rho)):
            tau = rho[:i] + rho[i + 1:]
            if tau not in nodes:
                continue
            sign_tau = alternating_sign(labels_of[tau])
            if sign_tau is not None and sign_tau == c[1]:
                adjacency[rho].add(tau)
                adjacency[tau].add(rho)

    edges = sorted({tuple(sorted((a, b))) for a, nb in adjacency.items() for b in nb})
    degree = {s: len(nb) for s, nb in adjacency.items()}
    for s, d in sorted(degree.items()):
        if d > 2:
            violations.append(f"node {list(s)} has degree {d}")
        if d == 0:
            violations.append(f"node {list(s)} is isolated")

    paths, cycles = _decompose(adjacency)
    complementary = {s: any(a + b == 0 for a, b in combinations(labels_of[s], 2)) for s in nodes}
    tucker = (
        sum(1 for s, t in nodes.items() if t == 2 and complementary[s] and carriers[s][1] == 1),
        sum(1 for s, t in nodes.items() if t == 2 and complementary[s] and carriers[s][1] == -1),
    )
    pos, neg = count_alternating(complex_, labeling)
    report = OracleReport(
        mode=mode,
        positive_count=pos,
        negative_count=neg,
        nodes=nodes,
        edges=edges,
        degree=degree,
        paths=paths,
        cycles=cycles,
        h0=(flag.h0,),
        neg_h0=(flag.neg_h0,),
        violations=violations,
        tucker_endpoints=tucker,
        n=complex_.n,
        antipode=complex_.antipode,
        complementary=complementary,
    )
    if compare:
        report.pathfinder_mismatches = compare_with_pathfinder(
            report, PathGraph(complex_, flag, labeling, mode), adjacency
        )
    return report


def _decompose(adjacency: dict[Simplex, set[Simplex]]):
    visited: set[Simplex] = set()
    paths: list[list[Simplex]] = []
    cycles: list[list[Simplex]] = []

    def follow(start: Simplex) -> list[Simplex]:
        out = [start]
        visited.add(start)
        prev, cur = None, start
        while True:
            nxt = [x for x in sorted(adjacency[cur]) if x != prev and x not in visited]
            if not nxt or len(adjacency[cur]) > 2:
                return out
            prev, cur = cur, nxt[0]
            visited.add(cur)
            out.append(cur)

    for s in sorted(adjacency):
        if s not in visited and len(adjacency[s]) <= 1:
            paths.append(follow(s))
    for s in sorted(adjacency):
        if s not in visited and len(adjacency[s]) == 2:
            cycles.append(follow(s))
    return paths, cycles


def compare_with_pathfinder(
    report: OracleReport, graph: PathGraph, adjacency: dict[Simplex, set[Simplex]]
) -> list[str]:
    """Pointwise differences between the oracle graph and the pathfinder's."""
    out = []
    for sigma in graph.complex.all_simplices():
        node = graph.node(sigma)
        if (node is None) != (sigma not in report.nodes):
            out.append(f"node status of {list(sigma)} differs")
        elif node is not None and node.node_type != report.nodes[sigma]:
            out.append(f"type of {list(sigma)}: pathfinder {node.node_type}, oracle {report.nodes[sigma]}")
    for sigma, t in sorted(report.nodes.items()):
        node = graph.node(sigma)
        if node is None:
            continue
        try:
            mine = {x.simplex for x in graph.neighbors(node)}
        except Exception as exc:  # surfaced as a mismatch, not a crash
            out.append(f"pathfinder neighbors of {list(sigma)} failed: {exc}")
            continue
        if mine != adjacency[sigma]:
            out.append(
                f"neighbors of {list(sigma)}: pathfinder {sorted(mine)}, oracle {sorted(adjacency[sigma])}"
            )
    return out


def verify_path(report: OracleReport, trace: PathTrace) -> bool:
    """True iff the trace is one of the oracle's paths, read from ``H_0``."""
    if not trace.nodes:
        return False
    expected = report.path_from(report.h0)
    return expected is not None and expected == trace.simplices


def count_tucker_endpoints(
    complex_: SymmetricComplex, flag: HemisphereFlag, labeling: Labeling
) -> tuple[int, int]:
    """Agreeable almost-alternating simplices with a complementary edge, by sign."""
    table = carrier_table(flag)
    pos = neg = 0
    for sigma in complex_.all_simplices():
        c = table.get(sigma)
        if c is None:
            continue
        labels = [labeling[v] for v in sigma]
        if not any(a + b == 0 for a, b in combinations(labels, 2)):
            continue
        if _node_type(sigma, labels, c, Mode.TUCKER) == 2:
            if c[1] == 1:
                pos += 1
            else:
                neg += 1
    return pos, neg
