"""First homology of an admissible presentation in the basis i_+(gamma_1..gamma_2g)."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import NonIntegralHomologyError, NotHomologyCylinderError
from .fox import AdmissiblePresentation, GeneratorRef, abelianize, minus

IntMatrix = tuple[tuple[int, ...], ...]


class HomologyAssignment(Mapping):
    """Homology class (exponent vector of length 2g) of every generator."""

    def __init__(self, genus: int, classes: Mapping[GeneratorRef, Sequence[int]]):
        self.genus = genus
        self.rank = 2 * genus
        self._classes = {g: tuple(int(e) for e in v) for g, v in classes.items()}
        for g, v in self._classes.items():
            if len(v) != self.rank:
                raise ValueError(f"class of {g.token} has length {len(v)}, expected {self.rank}")

    def __getitem__(self, gen: GeneratorRef) -> tuple[int, ...]:
        return self._classes[gen]

    def __iter__(self) -> Iterator[GeneratorRef]:
        return iter(self._classes)

    def __len__(self) -> int:
        return len(self._classes)

    def __repr__(self) -> str:
        body = ", ".join(f"{g.token}: {v}" for g, v in self._classes.items())
        return f"HomologyAssignment(genus={self.genus}, {{{body}}})"

    def by_token(self) -> dict[str, list[int]]:
        return {g.token: list(v) for g, v in self._classes.items()}


def rref(rows: Sequence[Sequence[int | Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns (matrix, pivot columns)."""
    m = [[Fraction(x) for x in row] for row in rows]
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        p = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def exponent_sum_matrix(p: AdmissiblePresentation) -> list[list[int]]:
    """Rows = relations, columns = generators in the order Minus, Internal, Plus."""
    index = {g: i for i, g in enumerate(p.generators())}
    out = []
    for rel in p.relations:
        row = [0] * len(index)
        for gen, sign in rel:
            row[index[gen]] += sign
        out.append(row)
    return out


def homology_classes(p: AdmissiblePresentation) -> HomologyAssignment:
    """Express every generator's class in terms of the plus-generators.

    Row-reducing the exponent-sum matrix must give ``[I | M]``; then the class
    of the i-th non-plus generator is ``-M[i]``.
    """
    n = 2 * p.genus + p.internal_count
    rank = 2 * p.genus
    reduced, pivots = rref(exponent_sum_matrix(p))
    if pivots[:n] != list(range(n)) or len(pivots) != n:
        raise NotHomologyCylinderError(
            f"{p.name or 'presentation'}: exponent-sum matrix does not reduce to [I | M] "
            f"(pivot columns {pivots})")
    gens = p.generators()
    classes: dict[GeneratorRef, tuple[int, ...]] = {}
    for i in range(n):
        tail = reduced[i][n:]
        if any(x.denominator != 1 for x in tail):
            raise NonIntegralHomologyError(
                f"{p.name or 'presentation'}: class of {gens[i].token} is not integral: "
                f"{[str(-x) for x in tail]}")
        classes[gens[i]] = tuple(-int(x) for x in tail)
    for j, gen in enumerate(p.plus_generators()):
        classes[gen] = tuple(1 if k == j else 0 for k in range(rank))
    return HomologyAssignment(p.genus, classes)


def integer_det(m: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix (Bareiss fraction-free elimination)."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class MonodromyMatrix:
    """Integer 2g x 2g matrix whose i-th column is the class of i_-(gamma_i)."""

    sigma: IntMatrix

    @property
    def size(self) -> int:
        return len(self.sigma)

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.sigma]

    def det(self) -> int:
        return integer_det(self.sigma)

    def __matmul__(self, other: MonodromyMatrix) -> MonodromyMatrix:
        n = self.size
        return MonodromyMatrix(tuple(
            tuple(sum(self.sigma[i][k] * other.sigma[k][j] for k in range(n)) for j in range(n))
            for i in range(n)))


def homological_monodromy(h: HomologyAssignment) -> MonodromyMatrix:
    rank = h.rank
    cols = [h[minus(i)] for i in range(1, rank + 1)]
    sigma = tuple(tuple(cols[j][i] for j in range(rank)) for i in range(rank))
    m = MonodromyMatrix(sigma)
    if abs(m.det()) != 1:
        raise NotHomologyCylinderError(f"homological monodromy has determinant {m.det()}, not +-1")
    return m


def check_relations(p: AdmissiblePresentation, h: HomologyAssignment) -> list[int]:
    """Indices (1-based) of relations that do not abelianize to zero."""
    zero = (0,) * h.rank
    return [j for j, rel in enumerate(p.relations, 1) if abelianize(rel, h) != zero]


__all__ = [
    "HomologyAssignment",
    "MonodromyMatrix",
    "check_relations",
    "exponent_sum_matrix",
    "homological_monodromy",
    "homology_classes",
    "integer_det",
    "rref",
]
