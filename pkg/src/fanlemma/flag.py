"""Flags of hemispheres aligned with a symmetric triangulation.

Only the positive hemispheres are normally stored; the negative side of each
level is the vertex-wise antipodal image. A flag may carry an explicit
negative side for complexes whose vertex involution does not send cells to
their geometric antipodes (see ``generators.paper_tetra``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .complex import Simplex, SymmetricComplex, dim, facets, simplex
from .errors import ValidationError


@dataclass(frozen=True, order=True)
class Carrier:
    dim: int
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"carrier sign must be +1 or -1, got {self.sign}")
        if self.dim < 0:
            raise ValueError(f"carrier dimension must be >= 0, got {self.dim}")

    def flipped(self) -> "Carrier":
        return Carrier(self.dim, -self.sign)

    def __str__(self) -> str:
        return f"{'+' if self.sign > 0 else '-'}H_{self.dim}"


@dataclass
class FlagReport:
    violations: dict[int, list[str]] = field(default_factory=dict)
    explicit_negative: bool = False

    def add(self, d: int, message: str) -> None:
        self.violations.setdefault(d, []).append(message)

    @property
    def ok(self) -> bool:
        return not self.violations

    def messages(self) -> list[str]:
        return [f"d={d}: {m}" for d in sorted(self.violations) for m in self.violations[d]]


class HemisphereFlag:
    """Nested hemispheres ``H_0 ⊂ ... ⊂ H_n`` listed as d-simplices per level."""

    def __init__(
        self,
        complex_: SymmetricComplex,
        levels: Sequence[Iterable[Iterable[int]]],
        negative: Sequence[Iterable[Iterable[int]]] | None = None,
    ):
        self.complex = complex_
        self.levels: tuple[tuple[Simplex, ...], ...] = tuple(
            tuple(sorted({simplex(s) for s in level})) for level in levels
        )
        if negative is None:
            self.negative = tuple(
                tuple(sorted({complex_.antipode_simplex(s) for s in level})) for level in self.levels
            )
            self.explicit_negative = False
        else:
            self.negative = tuple(
                tuple(sorted({simplex(s) for s in level})) for level in negative
            )
            self.explicit_negative = True

    @property
    def n(self) -> int:
        return len(self.levels) - 1

    @property
    def h0(self) -> int:
        return self.levels[0][0][0]

    @property
    def neg_h0(self) -> int:
        return self.negative[0][0][0]

    def side(self, d: int, sign: int) -> tuple[Simplex, ...]:
        return self.levels[d] if sign > 0 else self.negative[d]

    @cached_property
    def _closures(self) -> list[dict[int, frozenset[Simplex]]]:
        out = []
        for d in range(len(self.levels)):
            per_sign = {}
            for sign in (1, -1):
                faces_: set[Simplex] = set()
                for s in self.side(d, sign):
                    for k in range(1, len(s) + 1):
                        faces_.update(combinations(s, k))
                per_sign[sign] = frozenset(faces_)
            out.append(per_sign)
        return out

    @cached_property
    def _incidence(self) -> list[dict[int, dict[Simplex, tuple[Simplex, ...]]]]:
        # (d-1)-face -> d-simplices of the signed level containing it
        out = []
        for d in range(len(self.levels)):
            per_sign = {}
            for sign in (1, -1):
                inc: dict[Simplex, list[Simplex]] = {}
                if d >= 1:
                    for s in self.side(d, sign):
                        for f in facets(s):
                            inc.setdefault(f, []).append(s)
                per_sign[sign] = {f: tuple(v) for f, v in inc.items()}
            out.append(per_sign)
        return out

    def in_hemisphere(self, sigma: Simplex, d: int, sign: int) -> bool:
        return sigma in self._closures[d][sign]

    def level_cofacets(self, sigma: Simplex, d: int, sign: int) -> tuple[Simplex, ...]:
        """d-simplices of the signed level ``d`` having ``sigma`` as a facet."""
        return self._incidence[d][sign].get(sigma, ())

    def carrier(self, sigma: Simplex) -> Carrier:
        """The minimal hemisphere ``±H_d`` whose closure contains ``sigma``."""
        for d in range(dim(sigma), len(self.levels)):
            pos = sigma in self._closures[d][1]
            neg = sigma in self._closures[d][-1]
            if pos and neg:
                raise ValidationError(f"ambiguous carrier for {list(sigma)} at d={d}")
            if pos or neg:
                return Carrier(d, 1 if pos else -1)
        raise ValidationError(f"no carrier for {list(sigma)}: flag is not aligned")

    def __repr__(self) -> str:
        sizes = [len(level) for level in self.levels]
        return f"HemisphereFlag(H_0={self.h0}, level sizes={sizes})"


def carrier(flag: HemisphereFlag, sigma: Simplex) -> Carrier:
    return flag.carrier(sigma)


def _boundary_counts(level: Iterable[Simplex]) -> dict[Simplex, int]:
    counts: dict[Simplex, int] = {}
    for s in level:
        for f in facets(s):
            counts[f] = counts.get(f, 0) + 1
    return counts


def validate_flag(complex_: SymmetricComplex, flag: HemisphereFlag) -> FlagReport:
    """Check the hemisphere conditions level by level.

    For each level d this verifies membership in the d-skeleton, that the
    d-simplices of ``H_d`` and ``-H_d`` are disjoint, that interior
    (d-1)-faces are shared by exactly two members, and that the boundary of
    each side is exactly ``H_{d-1} ∪ -H_{d-1}``. At the top level the two
    sides must tile the sphere.
    """
    report = FlagReport(explicit_negative=flag.explicit_negative)
    n = complex_.n
    if len(flag.levels) != n + 1:
        report.add(-1, f"flag has {len(flag.levels)} levels, expected {n + 1}")
        return report
    if len(flag.negative) != n + 1:
        report.add(-1, f"negative side has {len(flag.negative)} levels, expected {n + 1}")
        return report

    for d in range(n + 1):
        for sign in (1, -1):
            label = "H" if sign > 0 else "-H"
            for s in flag.side(d, sign):
                if dim(s) != d:
                    report.add(d, f"{label}_{d} lists {list(s)} of dimension {dim(s)}")
                elif not complex_.contains(s):
                    report.add(d, f"{label}_{d} lists {list(s)}, which is not in the complex")

    pos0, neg0 = flag.levels[0], flag.negative[0]
    if len(pos0) != 1 or len(neg0) != 1:
        report.add(0, f"H_0 must be a single vertex, got {len(pos0)} (and {len(neg0)} for -H_0)")
    elif pos0[0] == neg0[0]:
        report.add(0, f"H_0 and -H_0 coincide at {list(pos0[0])}")
    elif not 0 <= pos0[0][0] < complex_.num_vertices:
        report.add(0, f"H_0 vertex {pos0[0][0]} is not in the complex")
    elif complex_.antipode[pos0[0][0]] != neg0[0][0]:
        report.add(0, "-H_0 is not the antipode of H_0")

    for d in range(1, n + 1):
        prev_boundary = set(flag.levels[d - 1]) | set(flag.negative[d - 1])
        for sign in (1, -1):
            label = "H" if sign > 0 else "-H"
            counts = _boundary_counts(flag.side(d, sign))
            bad = sorted(f for f, c in counts.items() if c > 2)
            for f in bad:
                report.add(d, f"face {list(f)} is shared by {counts[f]} members of {label}_{d}")
            boundary = {f for f, c in counts.items() if c == 1}
            missing = sorted(prev_boundary - boundary)
            extra = sorted(boundary - prev_boundary)
            for f in missing:
                report.add(d, f"{list(f)} lies in H_{d-1} ∪ -H_{d-1} but is not on the boundary of {label}_{d}")
            for f in extra:
                report.add(d, f"boundary face {list(f)} of {label}_{d} is not in H_{d-1} ∪ -H_{d-1}")

    for d in range(n + 1):
        common = sorted(set(flag.levels[d]) & set(flag.negative[d]))
        for s in common:
            report.add(d, f"{list(s)} belongs to both H_{d} and -H_{d}")

    top = set(flag.levels[n]) | set(flag.negative[n])
    if top != set(complex_.maximal_simplices):
        uncovered = sorted(set(complex_.maximal_simplices) - top)
        report.add(n, f"H_n ∪ -H_n misses {len(uncovered)} maximal simplices")

    return report
