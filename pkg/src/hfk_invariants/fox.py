"""Free-group words, admissible presentations and the abelianized Fox derivative.

Generators are written with the token syntax ``m<k>`` (i_-(gamma_k)),
``z<k>`` (internal) and ``p<k>`` (i_+(gamma_k)); a leading ``-`` marks an
inverse letter.  Words are kept exactly as written, without free reduction.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

from .algebra import LaurentPolynomial
from .errors import AdmissibilityError, GeneratorIndexError, TokenError

_TOKEN = re.compile(r"^(-?)([mzp])([1-9][0-9]*)$")


class GenClass(enum.Enum):
    MINUS = "m"
    INTERNAL = "z"
    PLUS = "p"


_ORDER = {GenClass.MINUS: 0, GenClass.INTERNAL: 1, GenClass.PLUS: 2}


@dataclass(frozen=True, order=False)
class GeneratorRef:
    kind: GenClass
    index: int

    def __post_init__(self):
        if self.index < 1:
            raise GeneratorIndexError(f"generator index must be positive, got {self.index}")

    @property
    def token(self) -> str:
        return f"{self.kind.value}{self.index}"

    def sort_key(self) -> tuple[int, int]:
        return _ORDER[self.kind], self.index

    def __str__(self) -> str:
        return self.token


def minus(k: int) -> GeneratorRef:
    return GeneratorRef(GenClass.MINUS, k)


def internal(k: int) -> GeneratorRef:
    return GeneratorRef(GenClass.INTERNAL, k)


def plus(k: int) -> GeneratorRef:
    return GeneratorRef(GenClass.PLUS, k)


Letter = tuple[GeneratorRef, int]


def parse_token(token: str) -> Letter:
    m = _TOKEN.match(token.strip()) if isinstance(token, str) else None
    if not m:
        raise TokenError(f"unknown generator token {token!r}")
    sign = -1 if m.group(1) else 1
    return GeneratorRef(GenClass(m.group(2)), int(m.group(3))), sign


def format_letter(letter: Letter) -> str:
    gen, sign = letter
    return ("-" if sign < 0 else "") + gen.token


@dataclass(frozen=True)
class Word:
    """A word in the free group; the empty word is the identity."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        for gen, sign in self.letters:
            if sign not in (1, -1):
                raise ValueError(f"letter exponent must be +1 or -1, got {sign}")

    @classmethod
    def from_tokens(cls, tokens: Iterable[str]) -> Word:
        return cls(tuple(parse_token(t) for t in tokens))

    @classmethod
    def parse(cls, text: str) -> Word:
        return cls.from_tokens(text.split())

    @classmethod
    def of(cls, *letters: GeneratorRef | Letter) -> Word:
        out = []
        for x in letters:
            out.append((x, 1) if isinstance(x, GeneratorRef) else x)
        return cls(tuple(out))

    def tokens(self) -> list[str]:
        return [format_letter(x) for x in self.letters]

    def inverse(self) -> Word:
        return Word(tuple((g, -s) for g, s in reversed(self.letters)))

    def __mul__(self, other: Word) -> Word:
        return Word(self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def generators(self) -> set[GeneratorRef]:
        return {g for g, _ in self.letters}

    def conjugate(self, w: Word) -> Word:
        """w * self * w^-1."""
        return w * self * w.inverse()

    def __str__(self) -> str:
        return " ".join(self.tokens()) or "1"


@dataclass(frozen=True)
class AdmissiblePresentation:
    """Generators m1..m2g, z1..zl, p1..p2g and 2g + l relators."""

    genus: int
    internal_count: int
    relations: tuple[Word, ...]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "relations", tuple(self.relations))

    @property
    def rank(self) -> int:
        """2g, the number of variables of the coefficient ring."""
        return 2 * self.genus

    def minus_generators(self) -> list[GeneratorRef]:
        return [minus(k) for k in range(1, 2 * self.genus + 1)]

    def internal_generators(self) -> list[GeneratorRef]:
        return [internal(k) for k in range(1, self.internal_count + 1)]

    def plus_generators(self) -> list[GeneratorRef]:
        return [plus(k) for k in range(1, 2 * self.genus + 1)]

    def generators(self) -> list[GeneratorRef]:
        return self.minus_generators() + self.internal_generators() + self.plus_generators()

    def in_range(self, gen: GeneratorRef) -> bool:
        if gen.kind is GenClass.INTERNAL:
            return gen.index <= self.internal_count
        return gen.index <= 2 * self.genus

    def with_relations(self, relations: Sequence[Word], name: str | None = None) -> AdmissiblePresentation:
        return AdmissiblePresentation(self.genus, self.internal_count, tuple(relations),
                                      self.name if name is None else name)


def validate(p: AdmissiblePresentation) -> AdmissiblePresentation:
    """Check the deficiency condition and every generator index; return p unchanged."""
    if p.genus < 1:
        raise AdmissibilityError(f"genus must be positive, got {p.genus}")
    if p.internal_count < 0:
        raise AdmissibilityError(f"internal generator count must be nonnegative, got {p.internal_count}")
    expected = 2 * p.genus + p.internal_count
    if len(p.relations) != expected:
        raise AdmissibilityError(
            f"{p.name or 'presentation'}: expected 2g + l = {expected} relations, got {len(p.relations)}")
    for j, rel in enumerate(p.relations, 1):
        for gen, _ in rel:
            if not p.in_range(gen):
                raise GeneratorIndexError(
                    f"relation {j} uses {gen.token}, outside the generators of "
                    f"genus {p.genus} with {p.internal_count} internal generators")
    return p


def abelianize(w: Word, classes: Mapping[GeneratorRef, tuple[int, ...]]) -> tuple[int, ...]:
    """Sum of the signed homology classes of the letters of w."""
    n = _rank_of(classes)
    total = [0] * n
    for gen, sign in w:
        for i, e in enumerate(classes[gen]):
            total[i] += sign * e
    return tuple(total)


def _rank_of(classes: Mapping[GeneratorRef, tuple[int, ...]]) -> int:
    rank = getattr(classes, "rank", None)
    if rank is not None:
        return rank
    for v in classes.values():
        return len(v)
    return 0


def fox_derivative(w: Word, x: GeneratorRef, classes: Mapping[GeneratorRef, tuple[int, ...]]) -> LaurentPolynomial:
    """Involuted, abelianized Fox derivative of w with respect to x.

    Each occurrence of x with exponent +1 contributes inv(ab(prefix before it));
    each occurrence with exponent -1 contributes -inv(ab(prefix through it)),
    where inv negates exponent vectors.
    """
    n = _rank_of(classes)
    prefix = [0] * n
    out: dict[tuple[int, ...], int] = {}
    for gen, sign in w:
        if sign > 0:
            if gen == x:
                k = tuple(-e for e in prefix)
                out[k] = out.get(k, 0) + 1
            for i, e in enumerate(classes[gen]):
                prefix[i] += e
        else:
            for i, e in enumerate(classes[gen]):
                prefix[i] -= e
            if gen == x:
                k = tuple(-e for e in prefix)
                out[k] = out.get(k, 0) - 1
    return LaurentPolynomial._raw({k: c for k, c in out.items() if c}, n)
