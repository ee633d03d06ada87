"""Path following on the implicit graph of agreeable simplices.

Nodes are simplices carried by some hemisphere ``±H_d`` that are

1. alternating (d-1)-simplices whose sign matches the carrier sign,
2. almost-alternating d-simplices whose sign matches the carrier sign, or
3. alternating d-simplices of either sign.

The graph is never materialized: neighbors come straight from the flag's
incidence tables, so a walk from ``H_0`` touches only the simplices on its
path.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .complex import Simplex, SymmetricComplex, dim
from .errors import HypothesisError, StructuralAnomaly
from .flag import Carrier, HemisphereFlag
from .labeling import Kind, Labeling, SimplexClass, validate_labeling


class Mode(str, enum.Enum):
    FAN = "fan"
    TUCKER = "tucker"


class Termination(str, enum.Enum):
    ALTERNATING_N = "AlternatingN"
    COMPLEMENTARY_EDGE = "ComplementaryEdge"
    ANTIPODAL_START = "AntipodalStart"


@dataclass(frozen=True)
class Node:
    simplex: Simplex
    labels: tuple[int, ...]
    carrier: Carrier
    cls: SimplexClass
    node_type: int

    @property
    def dim(self) -> int:
        return len(self.simplex) - 1

    def to_json(self) -> dict:
        return {
            "simplex": list(self.simplex),
            "labels": list(self.labels),
            "carrier": {"dim": self.carrier.dim, "sign": self.carrier.sign},
            "type": self.node_type,
        }


@dataclass(frozen=True)
class Witness:
    simplex: Simplex
    labels: tuple[int, ...]
    edge: tuple[int, int] | None = None

    def to_json(self) -> dict:
        out = {"simplex": list(self.simplex), "labels": list(self.labels)}
        if self.edge is not None:
            out["edge"] = list(self.edge)
        return out


@dataclass
class PathTrace:
    nodes: list[Node]
    termination: Termination
    witness: Witness
    short_circuit: bool = False

    @property
    def simplices(self) -> list[Simplex]:
        return [node.simplex for node in self.nodes]

    def to_json(self) -> dict:
        return {
            "trace": [node.to_json() for node in self.nodes],
            "termination": self.termination.value,
            "witness": self.witness.to_json(),
            "short_circuit": self.short_circuit,
        }


def complementary_pair(sigma: Simplex, labels) -> tuple[int, int] | None:
    """First vertex pair of ``sigma`` whose labels sum to zero."""
    for i, u in enumerate(sigma):
        for w in sigma[i + 1:]:
            if labels[u] + labels[w] == 0:
                return (u, w)
    return None


class PathGraph:
    """The implicit graph over a labeled, flagged symmetric complex."""

    def __init__(
        self,
        complex_: SymmetricComplex,
        flag: HemisphereFlag,
        labeling: Labeling,
        mode: Mode | str = Mode.FAN,
    ):
        self.complex = complex_
        self.flag = flag
        self.labeling = labeling
        self.mode = Mode(mode)
        self._cache: dict[Simplex, Node | None] = {}

    @property
    def n(self) -> int:
        return self.complex.n

    def node(self, sigma: Simplex) -> Node | None:
        """The node for ``sigma``, or None if ``sigma`` is not a node."""
        if sigma not in self._cache:
            self._cache[sigma] = self._make_node(sigma)
        return self._cache[sigma]

    def _make_node(self, sigma: Simplex) -> Node | None:
        c = self.flag.carrier(sigma)
        labels = tuple(self.labeling.of(sigma))
        cls = self.labeling.classify(sigma)
        k = dim(sigma)
        node_type = None
        if k == c.dim - 1:
            if cls.kind is Kind.ALTERNATING and cls.sign == c.sign:
                node_type = 1
        elif k == c.dim:
            if cls.kind is Kind.ALTERNATING:
                node_type = 3
            elif cls.kind is Kind.ALMOST_ALTERNATING:
                if not cls.has_complementary_edge:
                    if cls.sign == c.sign:
                        node_type = 2
                elif self.mode is Mode.TUCKER and c.sign in cls.facet_signs:
                    node_type = 2
        if node_type is None:
            return None
        return Node(sigma, labels, c, cls, node_type)

    def start(self) -> Node:
        return self.node((self.flag.h0,))

    def _require(self, sigma: Simplex, origin: Node) -> Node:
        node = self.node(sigma)
        if node is None:
            raise StructuralAnomaly(
                f"{list(sigma)} should be a node adjacent to {list(origin.simplex)} but is not; "
                "the flag or labeling violates the solver's hypotheses"
            )
        return node

    def neighbors(self, node: Node) -> list[Node]:
        sigma, c, cls = node.simplex, node.carrier, node.cls
        if node.node_type == 1:
            cofs = self.flag.level_cofacets(sigma, c.dim, c.sign)
            if len(cofs) != 2:
                raise StructuralAnomaly(
                    f"interior face {list(sigma)} of {c} has {len(cofs)} cofacets, expected 2"
                )
            return [self._require(t, node) for t in sorted(cofs)]

        if node.node_type == 2:
            out = [
                sigma[:i] + sigma[i + 1:]
                for i, s in zip(cls.alternating_facets, cls.facet_signs)
                if s == c.sign
            ]
            return [self._require(t, node) for t in sorted(out)]

        out = []
        d = c.dim
        if d > 0:
            mags = [abs(x) for x in node.labels]
            pick = max if cls.sign == c.sign else min
            i = mags.index(pick(mags))
            out.append(self._require(sigma[:i] + sigma[i + 1:], node))
        if d < self.n:
            cofs = self.flag.level_cofacets(sigma, d + 1, cls.sign)
            if len(cofs) != 1:
                raise StructuralAnomaly(
                    f"{list(sigma)} on the boundary of {Carrier(d + 1, cls.sign)} "
                    f"has {len(cofs)} cofacets there, expected 1"
                )
            out.append(self._require(cofs[0], node))
        return out

    def is_terminal(self, node: Node) -> bool:
        if node.node_type == 3 and node.dim == self.n:
            return True
        return node.node_type == 2 and node.cls.has_complementary_edge

    def witness(self, node: Node) -> Witness:
        edge = None
        if node.cls.has_complementary_edge:
            edge = complementary_pair(node.simplex, self.labeling.labels)
        return Witness(node.simplex, node.labels, edge)


def is_node(complex_, flag, labeling, sigma: Simplex, mode: Mode | str = Mode.FAN) -> Node | None:
    return PathGraph(complex_, flag, labeling, mode).node(tuple(sigma))


def neighbors(graph: PathGraph, node: Node) -> list[Node]:
    return graph.neighbors(node)


def check_hypotheses(
    complex_: SymmetricComplex, labeling: Labeling, mode: Mode | str
) -> list[str]:
    """Hypothesis violations of the given mode, as messages (empty when fine)."""
    mode = Mode(mode)
    report = validate_labeling(complex_, labeling, forbid_complementary=mode is Mode.FAN)
    problems = report.messages()
    if mode is Mode.FAN:
        for k in range(complex_.n + 1):
            for s in sorted(complex_.closure(k)):
                if complex_.antipode_simplex(s) == s:
                    problems.append(f"simplex {list(s)} is its own antipode")
        if labeling.m <= complex_.n:
            problems.append(
                f"label bound m={labeling.m} <= n={complex_.n}: an anti-symmetric labeling "
                "without complementary edges needs m >= n+1"
            )
    return problems


def antipodal_edge(complex_: SymmetricComplex) -> tuple[int, int] | None:
    for u, w in sorted(complex_.edges()):
        if complex_.antipode[u] == w:
            return (u, w)
    return None


def run(
    complex_: SymmetricComplex,
    flag: HemisphereFlag,
    labeling: Labeling,
    mode: Mode | str = Mode.FAN,
    check: bool = True,
) -> PathTrace:
    """Follow the path of the graph that starts at ``H_0``.

    Complex and flag are assumed validated. With ``check`` the labeling is
    tested against the mode's hypotheses first and ``HypothesisError`` is
    raised on any violation.
    """
    mode = Mode(mode)
    if check:
        problems = check_hypotheses(complex_, labeling, mode)
        if problems:
            raise HypothesisError(f"{mode.value} hypotheses violated", problems)

    if mode is Mode.TUCKER:
        edge = antipodal_edge(complex_)
        if edge is not None:
            return PathTrace(
                [],
                Termination.COMPLEMENTARY_EDGE,
                Witness(edge, tuple(labeling.of(edge)), edge),
                short_circuit=True,
            )

    graph = PathGraph(complex_, flag, labeling, mode)
    return walk(graph)


def walk(graph: PathGraph) -> PathTrace:
    current = graph.start()
    if current is None:
        raise StructuralAnomaly("H_0 is not a node of the graph")
    neg_h0 = (graph.flag.neg_h0,)
    nodes = [current]
    seen = {current.simplex}
    previous: Node | None = None
    while True:
        nbrs = graph.neighbors(current)
        onward = [x for x in nbrs if previous is None or x.simplex != previous.simplex]
        if previous is not None and len(nbrs) == 1:
            break
        if len(onward) != 1:
            raise StructuralAnomaly(
                f"node {list(current.simplex)} has {len(nbrs)} neighbors; the walk cannot continue"
            )
        previous, current = current, onward[0]
        if current.simplex in seen:
            raise StructuralAnomaly(
                f"walk revisited {list(current.simplex)}: invalid instance"
            )
        seen.add(current.simplex)
        nodes.append(current)

    if current.simplex == neg_h0:
        trace = PathTrace(nodes, Termination.ANTIPODAL_START, graph.witness(current))
        raise StructuralAnomaly("path from H_0 ended at -H_0", trace)
    if current.node_type == 3 and current.dim == graph.n:
        term = Termination.ALTERNATING_N
    elif current.node_type == 2 and current.cls.has_complementary_edge:
        term = Termination.COMPLEMENTARY_EDGE
    else:
        raise StructuralAnomaly(
            f"walk stopped at {list(current.simplex)}, which is not a valid endpoint"
        )
    return PathTrace(nodes, term, graph.witness(current))


def trace_antipode(graph: PathGraph, trace: PathTrace) -> PathTrace:
    """Vertex-wise antipodal image of a trace, re-derived through the graph."""
    anti = graph.complex.antipode_simplex
    nodes = []
    for node in trace.nodes:
        image = graph.node(anti(node.simplex))
        if image is None:
            raise StructuralAnomaly(f"antipode of node {list(node.simplex)} is not a node")
        nodes.append(image)
    w = trace.witness
    edge = None
    if w.edge is not None:
        edge = tuple(sorted(graph.complex.antipode[v] for v in w.edge))
    image_simplex = anti(w.simplex)
    witness = Witness(image_simplex, tuple(graph.labeling.of(image_simplex)), edge)
    return PathTrace(nodes, trace.termination, witness, trace.short_circuit)
