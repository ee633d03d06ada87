"""Abstract symmetric simplicial complexes of the n-sphere.

A simplex is a strictly increasing tuple of vertex ids. The complex stores
its maximal simplices and an explicit antipode table; lower-dimensional faces
are derived on demand and memoized per dimension.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

Simplex = tuple[int, ...]

COORD_TOL = 1e-9


def simplex(vertices: Iterable[int]) -> Simplex:
    """Normalize an iterable of vertex ids into a canonical simplex."""
    s = tuple(sorted(int(v) for v in vertices))
    if not s:
        raise ValueError("a simplex needs at least one vertex")
    if any(a == b for a, b in zip(s, s[1:])):
        raise ValueError(f"duplicate vertex in simplex {s}")
    return s


def dim(sigma: Simplex) -> int:
    return len(sigma) - 1


def faces(sigma: Simplex, k: int) -> set[Simplex]:
    """All k-dimensional faces of ``sigma`` (the (k+1)-subsets of its vertices)."""
    if not 0 <= k <= dim(sigma):
        raise ValueError(f"face dimension {k} out of range for {sigma}")
    return set(combinations(sigma, k + 1))


def facets(sigma: Simplex) -> list[Simplex]:
    """Codimension-one faces, ordered by the index of the removed vertex."""
    return [sigma[:i] + sigma[i + 1:] for i in range(len(sigma))]


def cofacets(sigma: Simplex, pool: Iterable[Simplex]) -> set[Simplex]:
    """Members of ``pool`` having ``sigma`` as a facet."""
    target = set(sigma)
    k = len(sigma) + 1
    return {tau for tau in pool if len(tau) == k and target.issubset(tau)}


@dataclass
class SymmetryReport:
    violations: list[str] = field(default_factory=list)
    antipodal_pair_simplices: list[Simplex] = field(default_factory=list)
    self_antipodal_simplices: list[Simplex] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def has_antipodal_pair(self) -> bool:
        return bool(self.antipodal_pair_simplices)

    @property
    def has_self_antipodal(self) -> bool:
        return bool(self.self_antipodal_simplices)


class SymmetricComplex:
    """A triangulated n-sphere with a vertex involution.

    Parameters
    ----------
    n : int
        Dimension of the sphere.
    antipode : sequence of int
        ``antipode[v]`` is the id of the vertex antipodal to ``v``.
    maximal_simplices : iterable of vertex-id iterables
        The n-simplices of the triangulation.
    coords : array_like, optional
        ``(V, n+1)`` array of unit vectors, one row per vertex.

    The constructor only normalizes data; use :func:`validate_symmetry` to
    check the sphere/involution invariants.
    """

    def __init__(
        self,
        n: int,
        antipode: Sequence[int],
        maximal_simplices: Iterable[Iterable[int]],
        coords=None,
    ):
        self.n = int(n)
        self.antipode = tuple(int(a) for a in antipode)
        self.maximal_simplices = frozenset(simplex(s) for s in maximal_simplices)
        if coords is not None:
            coords = np.asarray(coords, dtype=float)
            if coords.shape != (len(self.antipode), self.n + 1):
                raise ValueError(
                    f"coords must have shape {(len(self.antipode), self.n + 1)}, "
                    f"got {coords.shape}"
                )
            coords.setflags(write=False)
        self.coords = coords
        self._closure: dict[int, frozenset[Simplex]] = {}

    @property
    def num_vertices(self) -> int:
        return len(self.antipode)

    def antipode_simplex(self, sigma: Simplex) -> Simplex:
        return tuple(sorted(self.antipode[v] for v in sigma))

    def closure(self, k: int) -> frozenset[Simplex]:
        """All k-simplices that are faces of some maximal simplex."""
        if k not in self._closure:
            if not 0 <= k <= self.n:
                raise ValueError(f"dimension {k} out of range 0..{self.n}")
            out: set[Simplex] = set()
            for top in self.maximal_simplices:
                if len(top) > k:
                    out.update(combinations(top, k + 1))
            self._closure[k] = frozenset(out)
        return self._closure[k]

    def all_simplices(self) -> list[Simplex]:
        """Every simplex of the closure, by dimension then lexicographically."""
        return [s for k in range(self.n + 1) for s in sorted(self.closure(k))]

    def contains(self, sigma: Simplex) -> bool:
        k = dim(sigma)
        return 0 <= k <= self.n and sigma in self.closure(k)

    def edges(self) -> frozenset[Simplex]:
        return self.closure(1) if self.n >= 1 else frozenset()

    def neighbors(self) -> list[set[int]]:
        """Vertex adjacency lists from the 1-skeleton."""
        adj: list[set[int]] = [set() for _ in range(self.num_vertices)]
        for u, w in self.edges():
            adj[u].add(w)
            adj[w].add(u)
        return adj

    def max_edge_length(self) -> float:
        if self.coords is None:
            raise ValueError("complex has no coordinates")
        e = np.array(sorted(self.edges()))
        return float(np.linalg.norm(self.coords[e[:, 0]] - self.coords[e[:, 1]], axis=1).max())

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymmetricComplex):
            return NotImplemented
        if (self.coords is None) != (other.coords is None):
            return False
        same_coords = self.coords is None or np.array_equal(self.coords, other.coords)
        return (
            self.n == other.n
            and self.antipode == other.antipode
            and self.maximal_simplices == other.maximal_simplices
            and same_coords
        )

    __hash__ = None

    def __repr__(self) -> str:
        return (
            f"SymmetricComplex(n={self.n}, vertices={self.num_vertices}, "
            f"maximal={len(self.maximal_simplices)})"
        )


def antipode_simplex(complex_: SymmetricComplex, sigma: Simplex) -> Simplex:
    return complex_.antipode_simplex(sigma)


def validate_symmetry(complex_: SymmetricComplex) -> SymmetryReport:
    """Check the free-involution, symmetry and closed pseudo-manifold invariants.

    Antipodal vertex pairs inside a simplex and simplices equal to their own
    antipodal image are legal here; they are reported as findings for the
    solvers to act on.
    """
    report = SymmetryReport()
    V = complex_.num_vertices
    anti = complex_.antipode
    n = complex_.n

    if n < 0:
        report.violations.append(f"negative sphere dimension {n}")
        return report

    involution_ok = True
    for v, a in enumerate(anti):
        if not 0 <= a < V:
            report.violations.append(f"antipode of vertex {v} is out of range: {a}")
            involution_ok = False
        elif a == v:
            report.violations.append(f"fixed point: antipode({v}) = {v}")
        elif anti[a] != v:
            report.violations.append(f"antipode is not an involution at vertex {v}")
            involution_ok = False

    used: set[int] = set()
    for top in sorted(complex_.maximal_simplices):
        used.update(top)
        if dim(top) != n:
            report.violations.append(f"maximal simplex {list(top)} has dimension {dim(top)} != {n}")
        if any(not 0 <= v < V for v in top):
            report.violations.append(f"maximal simplex {list(top)} uses an unknown vertex")
            involution_ok = False
    unused = sorted(set(range(V)) - used)
    if unused:
        report.violations.append(f"vertices in no maximal simplex: {unused}")
    if not involution_ok:
        return report

    for top in sorted(complex_.maximal_simplices):
        if complex_.antipode_simplex(top) not in complex_.maximal_simplices:
            report.violations.append(
                f"missing antipodal simplex: {list(complex_.antipode_simplex(top))} "
                f"(image of {list(top)})"
            )

    if n >= 1:
        incidence: dict[Simplex, int] = {}
        for top in complex_.maximal_simplices:
            if dim(top) != n:
                continue
            for f in facets(top):
                incidence[f] = incidence.get(f, 0) + 1
        for f, c in sorted(incidence.items()):
            if c != 2:
                report.violations.append(
                    f"non-manifold facet {list(f)}: in {c} maximal simplices, expected 2"
                )

    if complex_.coords is not None:
        norms = np.linalg.norm(complex_.coords, axis=1)
        for v in np.flatnonzero(np.abs(norms - 1.0) > COORD_TOL):
            report.violations.append(f"coordinate of vertex {v} is not a unit vector")
        for v in range(V):
            if v < anti[v] and not np.allclose(
                complex_.coords[anti[v]], -complex_.coords[v], atol=COORD_TOL, rtol=0
            ):
                report.violations.append(f"coordinate mismatch: coords({anti[v]}) != -coords({v})")

    for k in range(n + 1):
        for s in sorted(complex_.closure(k)):
            if k >= 1 and any(anti[v] in s for v in s):
                report.antipodal_pair_simplices.append(s)
            if complex_.antipode_simplex(s) == s:
                report.self_antipodal_simplices.append(s)
    return report
