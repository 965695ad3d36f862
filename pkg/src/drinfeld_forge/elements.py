"""Finite exact linear combinations of generators."""

from __future__ import annotations

from collections.abc import Iterable

from .generators import GeneratorId
from .scalars import ONE, Scalar


def _scalar(value) -> Scalar:
    return value if isinstance(value, Scalar) else Scalar(value)


class Element:
    """A Scalar-weighted sum of GeneratorIds; zero coefficients are never stored."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[GeneratorId, Scalar] | None = None):
        self._terms = {}
        if terms:
            for gid, coeff in terms.items():
                coeff = _scalar(coeff)
                if coeff:
                    self._terms[gid] = coeff

    @classmethod
    def gen(cls, gid: GeneratorId, coeff=ONE) -> Element:
        return cls({gid: _scalar(coeff)})

    @classmethod
    def zero(cls) -> Element:
        return cls()

    def terms(self) -> Iterable[tuple[GeneratorId, Scalar]]:
        return self._terms.items()

    def sorted_terms(self, index: dict[GeneratorId, int]) -> list[tuple[GeneratorId, Scalar]]:
        return sorted(self._terms.items(), key=lambda kv: index[kv[0]])

    def coeff(self, gid: GeneratorId) -> Scalar:
        return self._terms.get(gid, Scalar(0))

    def support(self) -> set[GeneratorId]:
        return set(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def add_term(self, gid: GeneratorId, coeff) -> None:
        """In-place accumulate; used by builders before an Element is shared."""
        total = self._terms.get(gid, Scalar(0)) + _scalar(coeff)
        if total:
            self._terms[gid] = total
        else:
            self._terms.pop(gid, None)

    def copy(self) -> Element:
        dup = Element()
        dup._terms.update(self._terms)
        return dup

    def __add__(self, other: Element) -> Element:
        out = Element(dict(self._terms))
        for gid, coeff in other._terms.items():
            out.add_term(gid, coeff)
        return out

    def __sub__(self, other: Element) -> Element:
        out = Element(dict(self._terms))
        for gid, coeff in other._terms.items():
            out.add_term(gid, -coeff)
        return out

    def __neg__(self) -> Element:
        return Element({gid: -coeff for gid, coeff in self._terms.items()})

    def scale(self, factor) -> Element:
        factor = _scalar(factor)
        if not factor:
            return Element()
        return Element({gid: coeff * factor for gid, coeff in self._terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self._terms == other._terms

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        bits = []
        for gid, coeff in sorted(self._terms.items()):
            bits.append(f"({coeff})*{gid.label}")
        return " + ".join(bits)

    def __repr__(self) -> str:
        return f"Element({self._terms!r})"
