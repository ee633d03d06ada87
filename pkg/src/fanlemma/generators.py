"""Aligned symmetric triangulations of spheres with their hemisphere flags."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product

import numpy as np

from .complex import Simplex, SymmetricComplex, simplex
from .errors import ValidationError
from .flag import HemisphereFlag

KINDS = ("octahedral", "paper-tetra")


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str = "octahedral"
    n: int = 2
    refinements: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}; expected one of {KINDS}")
        if self.kind == "paper-tetra" and self.n != 2:
            raise ValueError("paper-tetra is a triangulation of S^2; n must be 2")
        if self.n < 1:
            raise ValueError(f"sphere dimension must be >= 1, got {self.n}")
        if self.refinements < 0:
            raise ValueError("refinements must be non-negative")


def generate(spec: GeneratorSpec) -> tuple[SymmetricComplex, HemisphereFlag]:
    if spec.kind == "octahedral":
        cx, fl = octahedral(spec.n)
    else:
        cx, fl = paper_tetra()
    for _ in range(spec.refinements):
        cx, fl = barycentric(cx, fl)
    return cx, fl


def octahedral(n: int) -> tuple[SymmetricComplex, HemisphereFlag]:
    """Boundary of the (n+1)-dimensional cross-polytope.

    Vertex ``i`` is ``+e_{i+1}`` and vertex ``i + n + 1`` is ``-e_{i+1}``.
    ``H_d`` is the set of d-simplices spanned by ``±e_1..±e_d`` and ``+e_{d+1}``.
    """
    if n < 1:
        raise ValueError(f"octahedral sphere needs n >= 1, got {n}")
    k = n + 1

    def vid(i: int, sign: int) -> int:
        return i if sign > 0 else i + k

    antipode = [(v + k) % (2 * k) for v in range(2 * k)]
    coords = np.vstack([np.eye(k), -np.eye(k)])
    tops = [
        simplex(vid(i, s) for i, s in enumerate(signs))
        for signs in product((1, -1), repeat=k)
    ]
    levels = [
        [simplex([vid(i, s) for i, s in enumerate(signs)] + [vid(d, 1)])
         for signs in product((1, -1), repeat=d)]
        for d in range(n + 1)
    ]
    cx = SymmetricComplex(n, antipode, tops, coords)
    return cx, HemisphereFlag(cx, levels)


def paper_tetra() -> tuple[SymmetricComplex, HemisphereFlag]:
    """Four-vertex triangulation of S^2 that does not refine the octahedral one.

    Vertices are (1,0,0), (0,1,0), (-1,0,0), (0,-1,0). The equator is split by
    the four vertices; the upper hemisphere is cut along ``{x=0, z>=0}`` and the
    lower one along ``{y=0, z<=0}``. Combinatorially this is the boundary of a
    tetrahedron, so the vertex involution maps the upper triangles onto each
    other; the flag therefore stores the lower hemisphere explicitly.
    """
    coords = np.array([[1.0, 0, 0], [0, 1.0, 0], [-1.0, 0, 0], [0, -1.0, 0]])
    antipode = [2, 3, 0, 1]
    tops = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    cx = SymmetricComplex(2, antipode, tops, coords)
    levels = [[(0,)], [(0, 1), (1, 2)], [(0, 1, 3), (1, 2, 3)]]
    negative = [[(2,)], [(2, 3), (0, 3)], [(0, 1, 2), (0, 2, 3)]]
    return cx, HemisphereFlag(cx, levels, negative=negative)


def _chains(sigma: Simplex, ids: dict[Simplex, int]) -> set[Simplex]:
    # full flags of faces of sigma, as simplices of the subdivision
    out = set()
    for perm in permutations(sigma):
        out.add(simplex(ids[tuple(sorted(perm[: j + 1]))] for j in range(len(perm))))
    return out


def barycentric(
    complex_: SymmetricComplex, flag: HemisphereFlag
) -> tuple[SymmetricComplex, HemisphereFlag]:
    """One barycentric subdivision of a complex together with its flag.

    New vertex ids follow the parent simplices sorted by (dimension, vertices),
    so the original vertices keep their ids.
    """
    parents = complex_.all_simplices()
    ids = {s: i for i, s in enumerate(parents)}
    antipode = []
    for s in parents:
        image = complex_.antipode_simplex(s)
        if image == s:
            raise ValidationError(
                f"simplex {list(s)} is its own antipode; its barycenter would be a fixed point"
            )
        antipode.append(ids[image])

    coords = None
    if complex_.coords is not None:
        coords = np.array([complex_.coords[list(s)].mean(axis=0) for s in parents])
        coords /= np.linalg.norm(coords, axis=1, keepdims=True)

    tops: set[Simplex] = set()
    for top in complex_.maximal_simplices:
        tops |= _chains(top, ids)
    new_cx = SymmetricComplex(complex_.n, antipode, tops, coords)

    def subdivide(levels):
        return [sorted(set().union(*(_chains(s, ids) for s in level))) for level in levels]

    negative = subdivide(flag.negative) if flag.explicit_negative else None
    return new_cx, HemisphereFlag(new_cx, subdivide(flag.levels), negative=negative)
