"""Approximate antipodal zeros of odd maps via the Tucker solver.

An odd map ``f: S^n -> R^n`` is sampled at the vertices of a refined
triangulation, the induced labeling is handed to the Tucker walk, and the
complementary edge it returns brackets a sign change of one coordinate of
``f``. If ``u, w`` carry labels ``+i, -i`` then ``f_i(u)`` and ``f_i(w)`` have
opposite signs and both dominate their vectors, so

    ||f(u)||_inf = |f_i(u)| <= |f_i(u) - f_i(w)| <= L * ||u - w||

with ``L`` the infinity-norm Lipschitz constant of ``f``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .complex import SymmetricComplex
from .errors import LabelingError, ValidationError
from .flag import HemisphereFlag
from .generators import barycentric
from .labeling import induced_labeling, representatives
from .pathfinder import Mode, run


@dataclass(frozen=True)
class OddMapSpec:
    """Either a linear map ``x -> A x`` or a table of samples per vertex."""

    matrix: np.ndarray | None = None
    samples: Mapping[int, Sequence[float]] | None = None

    def __post_init__(self):
        if (self.matrix is None) == (self.samples is None):
            raise ValueError("give exactly one of matrix or samples")
        if self.matrix is not None:
            a = np.atleast_2d(np.asarray(self.matrix, dtype=float))
            if not np.all(np.isfinite(a)):
                raise ValueError("matrix entries must be finite")
            object.__setattr__(self, "matrix", a)

    @classmethod
    def linear(cls, matrix) -> "OddMapSpec":
        return cls(matrix=matrix)

    @property
    def m(self) -> int:
        if self.matrix is not None:
            return self.matrix.shape[0]
        return len(next(iter(self.samples.values())))

    @property
    def lipschitz(self) -> float | None:
        """Induced infinity-norm of the matrix (max absolute row sum)."""
        if self.matrix is None:
            return None
        return float(np.abs(self.matrix).sum(axis=1).max())

    def sample(self, complex_: SymmetricComplex) -> dict[int, np.ndarray]:
        reps = representatives(complex_)
        if self.matrix is not None:
            if complex_.coords is None:
                raise ValidationError("linear maps need vertex coordinates")
            if self.matrix.shape[1] != complex_.n + 1:
                raise ValueError(
                    f"matrix has {self.matrix.shape[1]} columns; S^{complex_.n} needs {complex_.n + 1}"
                )
            values = complex_.coords[reps] @ self.matrix.T
            return {v: values[i] for i, v in enumerate(reps)}
        missing = [v for v in reps if v not in self.samples and complex_.antipode[v] not in self.samples]
        if missing:
            raise LabelingError(f"no sample for antipodal pairs of vertices {missing}")
        out = {}
        for v in reps:
            if v in self.samples:
                out[v] = np.asarray(self.samples[v], dtype=float)
            else:
                out[v] = -np.asarray(self.samples[complex_.antipode[v]], dtype=float)
        return out


@dataclass
class BorsukWitness:
    edge: tuple[int, int]
    labels: tuple[int, int]
    point: np.ndarray | None
    value: np.ndarray
    residual: float
    bound: float | None
    mesh_bound: float | None
    mesh: float | None
    refinements: int
    trace_length: int
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "edge": list(self.edge),
            "labels": list(self.labels),
            "value": [float(x) for x in self.value],
            "residual": self.residual,
            "refinements": self.refinements,
            "trace_length": self.trace_length,
        }
        if self.point is not None:
            out["point"] = [float(x) for x in self.point]
        if self.bound is not None:
            out["bound"] = self.bound
            out["mesh_bound"] = self.mesh_bound
        if self.mesh is not None:
            out["mesh"] = self.mesh
        return out


def solve(
    complex_: SymmetricComplex,
    flag: HemisphereFlag,
    odd_map: OddMapSpec,
    refinements: int = 0,
) -> BorsukWitness:
    """Refine, sample, label and walk; return the complementary-edge witness."""
    if odd_map.m != complex_.n:
        raise ValueError(f"map has {odd_map.m} components; Borsuk-Ulam on S^{complex_.n} needs {complex_.n}")
    if refinements and odd_map.matrix is None:
        raise ValueError("sample tables are tied to the given complex and cannot be refined")
    for _ in range(refinements):
        complex_, flag = barycentric(complex_, flag)

    samples = odd_map.sample(complex_)
    labeling = induced_labeling(complex_, samples)
    trace = run(complex_, flag, labeling, Mode.TUCKER)
    u, w = trace.witness.edge

    def value(v: int) -> np.ndarray:
        if v in samples:
            return samples[v]
        return -samples[complex_.antipode[v]]

    if np.abs(value(w)).max() < np.abs(value(u)).max():
        u, w = w, u
    fu = value(u)
    residual = float(np.abs(fu).max())

    bound = mesh_bound = mesh = None
    point = None
    if complex_.coords is not None:
        point = complex_.coords[u].copy()
        mesh = complex_.max_edge_length()
        lip = odd_map.lipschitz
        if lip is not None:
            bound = lip * float(np.linalg.norm(complex_.coords[u] - complex_.coords[w]))
            mesh_bound = lip * mesh
    return BorsukWitness(
        edge=(u, w),
        labels=(labeling[u], labeling[w]),
        point=point,
        value=fu,
        residual=residual,
        bound=bound,
        mesh_bound=mesh_bound,
        mesh=mesh,
        refinements=refinements,
        trace_length=len(trace.nodes),
    )


def sweep(
    complex_: SymmetricComplex,
    flag: HemisphereFlag,
    odd_map: OddMapSpec,
    max_refinements: int,
) -> list[BorsukWitness]:
    """Witnesses for 0..max_refinements subdivisions, reusing each refinement."""
    out = []
    for k in range(max_refinements + 1):
        w = solve(complex_, flag, odd_map, 0)
        w.refinements = k
        out.append(w)
        if k < max_refinements:
            complex_, flag = barycentric(complex_, flag)
    return out
