"""Anti-symmetric labelings and the alternating-simplex classification."""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .complex import Simplex, SymmetricComplex
from .errors import LabelingError

DEFAULT_MAX_ATTEMPTS = 1000


class Kind(enum.Enum):
    ALTERNATING = "alternating"
    ALMOST_ALTERNATING = "almost-alternating"
    OTHER = "other"


@dataclass(frozen=True)
class SimplexClass:
    """Classification of one label multiset.

    ``alternating_facets`` holds the positions (in the input order) whose
    removal leaves an alternating facet, and ``facet_signs`` the matching
    signs. ``sign`` is None for an almost-alternating simplex whose
    alternating facets disagree (only possible with a complementary edge).
    """

    kind: Kind
    sign: int | None
    alternating_facets: tuple[int, ...]
    facet_signs: tuple[int, ...]
    has_complementary_edge: bool

    @property
    def is_alternating(self) -> bool:
        return self.kind is Kind.ALTERNATING

    @property
    def is_almost_alternating(self) -> bool:
        return self.kind is Kind.ALMOST_ALTERNATING


def _sgn(x: int) -> int:
    return 1 if x > 0 else -1


def alternating_sign(labels: Sequence[int]) -> int | None:
    """Sign of the label multiset if it is alternating, else None."""
    if not labels:
        return None
    ordered = sorted(labels, key=abs)
    for a, b in zip(ordered, ordered[1:]):
        if abs(a) == abs(b) or (a > 0) == (b > 0):
            return None
    return _sgn(ordered[0])


def classify(labels: Sequence[int]) -> SimplexClass:
    labels = list(labels)
    if not labels:
        raise ValueError("cannot classify an empty simplex")
    if any(x == 0 for x in labels):
        raise ValueError(f"zero label in {labels}")
    values = set(labels)
    complementary = any(-x in values for x in values)

    found: list[tuple[int, int]] = []
    if len(labels) > 1:
        for i in range(len(labels)):
            s = alternating_sign(labels[:i] + labels[i + 1:])
            if s is not None:
                found.append((i, s))
    positions = tuple(i for i, _ in found)
    signs = tuple(s for _, s in found)

    own = alternating_sign(labels)
    if own is not None:
        return SimplexClass(Kind.ALTERNATING, own, positions, signs, complementary)
    if found:
        sign = signs[0] if len(set(signs)) == 1 else None
        return SimplexClass(Kind.ALMOST_ALTERNATING, sign, positions, signs, complementary)
    return SimplexClass(Kind.OTHER, None, positions, signs, complementary)


@dataclass(frozen=True)
class Labeling:
    m: int
    labels: tuple[int, ...]

    def __getitem__(self, v: int) -> int:
        return self.labels[v]

    def of(self, sigma: Simplex) -> list[int]:
        return [self.labels[v] for v in sigma]

    def classify(self, sigma: Simplex) -> SimplexClass:
        return classify(self.of(sigma))


@dataclass
class LabelingReport:
    antisymmetry_violations: list[int] = field(default_factory=list)
    range_violations: list[int] = field(default_factory=list)
    complementary_edges: list[Simplex] = field(default_factory=list)
    checked_edges: bool = False

    @property
    def antisymmetric(self) -> bool:
        return not self.antisymmetry_violations and not self.range_violations

    @property
    def ok(self) -> bool:
        return self.antisymmetric and not (self.checked_edges and self.complementary_edges)

    def messages(self) -> list[str]:
        out = [f"label of vertex {v} is not the negative of its antipode's" for v in self.antisymmetry_violations]
        out += [f"label of vertex {v} is zero or exceeds the bound" for v in self.range_violations]
        out += [f"complementary edge {list(e)}" for e in self.complementary_edges]
        return out


def validate_labeling(
    complex_: SymmetricComplex, labeling: Labeling, forbid_complementary: bool = False
) -> LabelingReport:
    report = LabelingReport(checked_edges=forbid_complementary)
    if len(labeling.labels) != complex_.num_vertices:
        raise LabelingError(
            f"labeling has {len(labeling.labels)} entries for {complex_.num_vertices} vertices"
        )
    for v, x in enumerate(labeling.labels):
        if x == 0 or abs(x) > labeling.m:
            report.range_violations.append(v)
        if labeling.labels[complex_.antipode[v]] != -x:
            report.antisymmetry_violations.append(v)
    if forbid_complementary:
        report.complementary_edges = sorted(
            e for e in complex_.edges() if labeling[e[0]] + labeling[e[1]] == 0
        )
    return report


def complementary_edges(complex_: SymmetricComplex, labeling: Labeling) -> list[Simplex]:
    return sorted(e for e in complex_.edges() if labeling[e[0]] + labeling[e[1]] == 0)


def representatives(complex_: SymmetricComplex) -> list[int]:
    """One vertex per antipodal pair: the smaller id."""
    return [v for v, a in enumerate(complex_.antipode) if v < a]


def from_representatives(
    complex_: SymmetricComplex, m: int, values: Mapping[int, int]
) -> Labeling:
    """Mirror labels given on some vertices to their antipodes, cross-checking overlaps."""
    labels: list[int | None] = [None] * complex_.num_vertices
    for v, x in values.items():
        v, x = int(v), int(x)
        a = complex_.antipode[v]
        for vertex, value in ((v, x), (a, -x)):
            if labels[vertex] is not None and labels[vertex] != value:
                raise LabelingError(f"inconsistent labels at vertex {vertex}: {labels[vertex]} vs {value}")
            labels[vertex] = value
    missing = [v for v, x in enumerate(labels) if x is None]
    if missing:
        raise LabelingError(f"no label for vertices {missing}")
    return Labeling(m, tuple(labels))


def random_labeling(
    complex_: SymmetricComplex,
    m: int,
    seed: int | None = None,
    forbid_complementary: bool = False,
    max_attempts: int = DEFAULT_MAX_ATTEMPTS,
) -> Labeling:
    """Draw a random anti-symmetric labeling with labels in ``±1..±m``.

    Without ``forbid_complementary`` each antipodal representative gets a
    uniform label. With it, representatives are labeled in random order, each
    uniformly among the labels that create no complementary edge with the
    vertices labeled so far; a dead end restarts the draw, up to
    ``max_attempts`` times.
    """
    if m < 1:
        raise ValueError(f"label bound must be >= 1, got {m}")
    rng = random.Random(seed)
    reps = representatives(complex_)
    choices = [x for k in range(1, m + 1) for x in (k, -k)]

    if not forbid_complementary:
        return from_representatives(complex_, m, {v: rng.choice(choices) for v in reps})

    anti = complex_.antipode
    adj = complex_.neighbors()
    for v in range(complex_.num_vertices):
        if anti[v] in adj[v]:
            raise LabelingError(
                f"vertices {v} and {anti[v]} are adjacent antipodes; "
                "every anti-symmetric labeling has a complementary edge"
            )

    for _ in range(max_attempts):
        labels = [0] * complex_.num_vertices
        order = reps[:]
        rng.shuffle(order)
        for v in order:
            banned = {-labels[u] for u in adj[v] if labels[u]}
            allowed = [x for x in choices if x not in banned]
            if not allowed:
                break
            x = rng.choice(allowed)
            labels[v], labels[anti[v]] = x, -x
        else:
            return Labeling(m, tuple(labels))
    raise LabelingError(
        f"no labeling without complementary edges found after {max_attempts} attempts"
    )


def induced_labeling(
    complex_: SymmetricComplex, samples: Mapping[int, Sequence[float]]
) -> Labeling:
    """Tucker labeling induced by an odd map sampled once per antipodal pair.

    A vertex gets ``±(i+1)`` where ``i`` is the first coordinate of largest
    absolute value and the sign is that coordinate's sign.
    """
    values: dict[int, int] = {}
    m = None
    for v, f in samples.items():
        f = np.asarray(f, dtype=float)
        if m is None:
            m = len(f)
        elif len(f) != m:
            raise LabelingError(f"sample at vertex {v} has length {len(f)}, expected {m}")
        if not np.all(np.isfinite(f)):
            raise LabelingError(f"non-finite sample at vertex {v}")
        if not np.any(f):
            raise LabelingError(f"zero sample vector at vertex {v}: the map is degenerate there")
        i = int(np.argmax(np.abs(f)))
        values[int(v)] = (i + 1) * (1 if f[i] > 0 else -1)
    if m is None:
        raise LabelingError("no samples given")
    return from_representatives(complex_, m, values)
