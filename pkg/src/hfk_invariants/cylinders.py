"""Presentation-level homology cylinder monoid: identity, mapping cylinders, products."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionError, NotHomologyCylinderError
from .fox import AdmissiblePresentation, GenClass, GeneratorRef, Word, internal, minus, plus, validate
from .homology import integer_det


@dataclass(frozen=True)
class FreeEndomorphism:
    """Endomorphism of the free group on gamma_1..gamma_2g.

    ``images[j]`` is the image of gamma_{j+1}, written with plus-generator
    letters (``p<k>`` stands for gamma_k).
    """

    genus: int
    images: tuple[Word, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if len(self.images) != 2 * self.genus:
            raise DimensionError(f"need {2 * self.genus} images, got {len(self.images)}")
        for w in self.images:
            for gen, _ in w:
                if gen.kind is not GenClass.PLUS or gen.index > 2 * self.genus:
                    raise DimensionError(f"image letter {gen.token} is not one of p1..p{2 * self.genus}")

    @classmethod
    def from_tokens(cls, genus: int, images: Sequence[Sequence[str]]) -> FreeEndomorphism:
        return cls(genus, tuple(Word.from_tokens(w) for w in images))

    @classmethod
    def identity(cls, genus: int) -> FreeEndomorphism:
        return cls(genus, tuple(Word.of(plus(j)) for j in range(1, 2 * genus + 1)))

    def abelianization(self) -> tuple[tuple[int, ...], ...]:
        """Integer matrix whose column j is the exponent sum of images[j]."""
        n = 2 * self.genus
        cols = []
        for w in self.images:
            col = [0] * n
            for gen, sign in w:
                col[gen.index - 1] += sign
            cols.append(col)
        return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))

    def apply(self, w: Word) -> Word:
        """Image of a word in plus letters."""
        out: list = []
        for gen, sign in w:
            img = self.images[gen.index - 1]
            out.extend((img if sign > 0 else img.inverse()).letters)
        return Word(tuple(out))

    def compose(self, other: FreeEndomorphism) -> FreeEndomorphism:
        """self o other (apply other first)."""
        return FreeEndomorphism(self.genus, tuple(self.apply(w) for w in other.images))


def identity_cylinder(genus: int) -> AdmissiblePresentation:
    if genus < 1:
        raise DimensionError("genus must be at least 1")
    rels = tuple(Word(((minus(j), 1), (plus(j), -1))) for j in range(1, 2 * genus + 1))
    return AdmissiblePresentation(genus, 0, rels, f"identity_cylinder({genus})")


def mapping_cylinder(phi: FreeEndomorphism, name: str | None = None) -> AdmissiblePresentation:
    """Relations i_-(gamma_j) * phi(gamma_j)^-1 with phi written in plus letters."""
    if abs(integer_det(phi.abelianization())) != 1:
        raise NotHomologyCylinderError("endomorphism does not induce an automorphism of homology")
    rels = tuple(Word(((minus(j), 1),)) * img.inverse() for j, img in enumerate(phi.images, 1))
    return AdmissiblePresentation(phi.genus, 0, rels, name)


def compose(p: AdmissiblePresentation, q: AdmissiblePresentation,
            name: str | None = None) -> AdmissiblePresentation:
    """Stack p on top of q: q's plus face is glued to p's minus face.

    The result keeps q's minus generators and p's plus generators; p's minus,
    p's internal, q's internal and q's plus generators become internal, in that
    order, and 2g relations identify q's plus k with p's minus k.
    """
    if p.genus != q.genus:
        raise DimensionError(f"genus mismatch: {p.genus} vs {q.genus}")
    validate(p)
    validate(q)
    n = 2 * p.genus
    lp, lq = p.internal_count, q.internal_count
    off_p_int = n
    off_q_int = n + lp
    off_q_plus = n + lp + lq

    def map_p(gen: GeneratorRef) -> GeneratorRef:
        if gen.kind is GenClass.MINUS:
            return internal(gen.index)
        if gen.kind is GenClass.INTERNAL:
            return internal(off_p_int + gen.index)
        return gen

    def map_q(gen: GeneratorRef) -> GeneratorRef:
        if gen.kind is GenClass.INTERNAL:
            return internal(off_q_int + gen.index)
        if gen.kind is GenClass.PLUS:
            return internal(off_q_plus + gen.index)
        return gen

    rels = [Word(tuple((map_p(g), s) for g, s in rel)) for rel in p.relations]
    rels += [Word(tuple((map_q(g), s) for g, s in rel)) for rel in q.relations]
    rels += [Word(((internal(off_q_plus + k), 1), (internal(k), -1))) for k in range(1, n + 1)]
    label = name if name is not None else f"({p.name or 'P'})*({q.name or 'Q'})"
    return validate(AdmissiblePresentation(p.genus, 2 * n + lp + lq, tuple(rels), label))
