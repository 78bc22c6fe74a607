"""Exact permutations of {0, ..., N-1}.

Just enough machinery for monodromy work: composition, inverse, powers,
cycle decomposition, element order, and a cycle-notation printer.  Groups
in this package have at most 3*n^2 elements, so explicit enumeration is
always affordable and nothing fancier (stabilizer chains etc.) is needed.

Composition order is fixed right-to-left: compose(a, b) applies b first,
then a.  A product like sigma0*sigma1 therefore means "rotate around the
white vertex, then around the black vertex", which is the convention the
edge-action formulas in the dessin module are written for.
"""

from __future__ import annotations

from math import lcm
from typing import Iterable, Iterator

__all__ = ["Perm", "compose", "inverse", "cycle_decomposition", "order", "cycle_string"]


class Perm:
    """An immutable bijection of {0, ..., N-1}, stored as its image tuple."""

    __slots__ = ("images", "_hash")

    images: tuple[int, ...]
    _hash: int

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError("images is not a bijection of 0..N-1")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def _unsafe(cls, images: tuple[int, ...]) -> Perm:
        # Internal fast path: caller guarantees images is a bijection.
        p = object.__new__(cls)
        p.images = images
        p._hash = hash(images)
        return p

    @classmethod
    def identity(cls, degree: int) -> Perm:
        return cls._unsafe(tuple(range(degree)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: Perm) -> Perm:
        return compose(self, other)

    def __pow__(self, k: int) -> Perm:
        if k < 0:
            return self.inverse() ** (-k)
        result = Perm.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> Perm:
        inv = [0] * len(self.images)
        for x, y in enumerate(self.images):
            inv[y] = x
        return Perm._unsafe(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == y for i, y in enumerate(self.images))

    def cycles(self) -> list[list[int]]:
        return cycle_decomposition(self)

    def order(self) -> int:
        return order(self)

    def cycle_string(self) -> str:
        return cycle_string(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Perm):
            return NotImplemented
        return self.images == other.images

    def __hash__(self) -> int:
        return self._hash

    def __iter__(self) -> Iterator[int]:
        return iter(self.images)

    def __repr__(self) -> str:
        return f"Perm({list(self.images)})"

    def __str__(self) -> str:
        return cycle_string(self)


def compose(a: Perm, b: Perm) -> Perm:
    """The bijection x -> a(b(x)); b acts first."""
    if a.degree != b.degree:
        raise ValueError(f"domain-size mismatch: {a.degree} vs {b.degree}")
    return Perm._unsafe(tuple(map(a.images.__getitem__, b.images)))


def inverse(p: Perm) -> Perm:
    return p.inverse()


def cycle_decomposition(p: Perm) -> list[list[int]]:
    """Disjoint cycles covering every point, fixed points as 1-cycles.

    Each cycle starts at its minimal point and cycles are sorted by that
    leading point, so the output is canonical and directly comparable.
    """
    images = p.images
    seen = bytearray(len(images))
    cycles: list[list[int]] = []
    for start in range(len(images)):
        if seen[start]:
            continue
        cycle = [start]
        seen[start] = 1
        x = images[start]
        while x != start:
            cycle.append(x)
            seen[x] = 1
            x = images[x]
        cycles.append(cycle)
    return cycles


def order(p: Perm) -> int:
    """Least k >= 1 with p^k = identity: the lcm of the cycle lengths."""
    images = p.images
    seen = bytearray(len(images))
    result = 1
    for start in range(len(images)):
        if seen[start]:
            continue
        length = 1
        seen[start] = 1
        x = images[start]
        while x != start:
            seen[x] = 1
            length += 1
            x = images[x]
        result = lcm(result, length)
    return result


def cycle_string(p: Perm) -> str:
    """Cycle notation like "(0 1 2)(3 4 5)"; fixed points are omitted.

    The identity, having nothing else to show, prints as "()".
    """
    parts = [
        "(" + " ".join(str(x) for x in cycle) + ")"
        for cycle in cycle_decomposition(p)
        if len(cycle) > 1
    ]
    return "".join(parts) if parts else "()"
