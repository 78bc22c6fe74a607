"""Reduced triangle triples and their number-theoretic invariants.

A rational triangle with angles (p0/n)*pi, (p1/n)*pi, (p2/n)*pi is stored
as the integer triple (p0, p1, p2) with n = p0 + p1 + p2 and
gcd(p0, p1, p2) = 1.  Everything downstream (the bicolored edge graph, its
monodromy group) is determined by this triple, and two invariants control
the group structure:

    n     = p0 + p1 + p2
    alpha = gcd(n, p0*p1 - p2**2)

alpha always divides n, and the translation subgroup of the monodromy
group has order n**2/alpha.  All arithmetic here is exact; angles are
never materialized as floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import ConsistencyError, InvalidTripleError

__all__ = [
    "Triple",
    "reduce",
    "cross_congruences",
    "predicted_orders",
    "enumerate_triples",
]


@dataclass(frozen=True, order=True)
class Triple:
    """A reduced triangle triple.

    Instances must already be in lowest terms; use :func:`reduce` to build
    one from arbitrary positive integers.
    """

    p0: int
    p1: int
    p2: int

    def __post_init__(self) -> None:
        for p in (self.p0, self.p1, self.p2):
            if not isinstance(p, int) or p < 1:
                raise InvalidTripleError(f"triple entries must be positive integers, got {self}")
        if gcd(gcd(self.p0, self.p1), self.p2) != 1:
            raise InvalidTripleError(f"{self} is not reduced; use reduce()")

    @property
    def n(self) -> int:
        """Sum of the triple: the common angle denominator."""
        return self.p0 + self.p1 + self.p2

    @property
    def alpha(self) -> int:
        """gcd(n, p0*p1 - p2**2), with the nonnegative gcd convention.

        math.gcd already treats a negative or zero second argument the way
        we need: gcd(n, 0) = n and gcd takes absolute values.
        """
        return gcd(self.n, self.p0 * self.p1 - self.p2 * self.p2)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.p0, self.p1, self.p2)

    def __str__(self) -> str:
        return f"({self.p0}, {self.p1}, {self.p2})"


def reduce(p0: int, p1: int, p2: int) -> Triple:
    """Divide (p0, p1, p2) by its gcd and return the reduced triple.

    Raises InvalidTripleError if any entry is not a positive integer.
    """
    for p in (p0, p1, p2):
        if not isinstance(p, int) or p < 1:
            raise InvalidTripleError(f"triple entries must be positive integers, got ({p0}, {p1}, {p2})")
    k = gcd(gcd(p0, p1), p2)
    return Triple(p0 // k, p1 // k, p2 // k)


def cross_congruences(t: Triple) -> int:
    """Common residue of p0*p1-p2^2, p0*p2-p1^2, p1*p2-p0^2 mod n.

    The three expressions are congruent for every triple (substitute
    p2 = -p0-p1 mod n); if they ever disagree the implementation is broken,
    so this raises ConsistencyError rather than returning quietly.
    """
    p0, p1, p2, n = t.p0, t.p1, t.p2, t.n
    residues = (
        (p0 * p1 - p2 * p2) % n,
        (p0 * p2 - p1 * p1) % n,
        (p1 * p2 - p0 * p0) % n,
    )
    if len(set(residues)) != 1:
        raise ConsistencyError(f"cross congruences differ for {t}: {residues}")
    return residues[0]


def predicted_orders(t: Triple) -> tuple[int, int]:
    """(order of the translation subgroup, order of the full monodromy group).

    These are the closed forms (n^2/alpha, 3*n^2/alpha); the group module
    recomputes both by brute-force closure.
    """
    order_n = t.n * t.n // t.alpha
    return order_n, 3 * order_n


def enumerate_triples(max_n: int) -> list[Triple]:
    """All reduced triples with p0 <= p1 <= p2 and n <= max_n.

    One canonical representative per unordered triple (alpha and every
    derived group invariant are symmetric in the entries), sorted by
    (n, p0, p1).
    """
    if max_n < 3:
        raise ValueError(f"max_n must be at least 3, got {max_n}")
    out: list[Triple] = []
    for n in range(3, max_n + 1):
        for p0 in range(1, n // 3 + 1):
            for p1 in range(p0, (n - p0) // 2 + 1):
                p2 = n - p0 - p1
                if gcd(gcd(p0, p1), p2) == 1:
                    out.append(Triple(p0, p1, p2))
    out.sort(key=lambda t: (t.n, t.p0, t.p1))
    return out
