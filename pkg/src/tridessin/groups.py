"""Monodromy group enumeration and structure verification.

For a reduced triple the monodromy group G is generated by the two edge
rotations sigma0, sigma1.  Everything this module asserts about G is
established by explicit enumeration (breadth-first closure of the
generators), never by formula alone:

    G = <sigma0, sigma1>
    N = <sigma0*sigma1, sigma1*sigma0>     the translation subgroup
    H = <sigma0>                           a rotation complement of order 3

verify_theorem() checks that N is abelian and normal, meets H trivially,
and covers G together with H -- i.e. G = N x| H -- and that N has
invariant factors (n, n/alpha), so G is (C_n x C_{n/alpha}) x| C_3.  Each
condition is tested directly on the enumerated elements, and the orders
are compared both with the closed forms and with the vector-span count
from the lattice module.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Sequence

from .dessin import build_sigma0, build_sigma1
from .errors import ConsistencyError, SizeLimitExceeded
from .lattice import phi_generators, span_order
from .perms import Perm
from .triples import Triple, predicted_orders

__all__ = [
    "DEFAULT_LIMIT",
    "GroupClosure",
    "TheoremReport",
    "closure",
    "is_abelian",
    "is_normal",
    "intersection_trivial",
    "product_covers",
    "abelian_structure",
    "conjugation_checks",
    "verify_theorem",
]

DEFAULT_LIMIT = 1_000_000


@dataclass(frozen=True)
class GroupClosure:
    """A finite permutation group, fully enumerated, with its generators."""

    generators: tuple[Perm, ...]
    elements: frozenset[Perm]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def degree(self) -> int:
        return self.generators[0].degree


def closure(generators: Sequence[Perm], limit: int = DEFAULT_LIMIT) -> GroupClosure:
    """Enumerate the group generated by `generators` (breadth-first).

    Every generator has finite order, so closing under left multiplication
    by generators alone already yields inverses and the identity.  Raises
    SizeLimitExceeded as soon as the element count passes `limit`.
    """
    if not generators:
        raise ValueError("need at least one generator")
    if limit < 1:
        raise ValueError(f"limit must be positive, got {limit}")
    degree = generators[0].degree
    if any(g.degree != degree for g in generators):
        raise ValueError("generators act on different domains")

    # Hot loop works on raw image tuples; Perm wrapping happens once at the end.
    gens = [g.images for g in generators]
    elements: set[tuple[int, ...]] = set(gens)
    boundary = list(elements)
    while boundary:
        fresh = []
        for a in gens:
            geta = a.__getitem__
            for b in boundary:
                c = tuple(map(geta, b))
                if c not in elements:
                    elements.add(c)
                    if len(elements) > limit:
                        raise SizeLimitExceeded(
                            f"group closure exceeded {limit} elements"
                        )
                    fresh.append(c)
        boundary = fresh
    return GroupClosure(
        generators=tuple(generators),
        elements=frozenset(Perm._unsafe(images) for images in elements),
    )


def is_abelian(g: GroupClosure) -> bool:
    """True iff all generator pairs commute (hence the whole group does)."""
    gens = g.generators
    return all(
        (a * b).images == (b * a).images
        for i, a in enumerate(gens)
        for b in gens[i + 1 :]
    )


def is_normal(sub: GroupClosure, ambient_generators: Sequence[Perm]) -> bool:
    """True iff conjugating sub's generators by every ambient generator stays in sub.

    Sufficient: conjugation by a fixed element is an automorphism, so it
    maps the subgroup into itself iff it maps the generators into it, and
    for finite groups "into" forces "onto".
    """
    for g in ambient_generators:
        g_inv = g.inverse()
        for s in sub.generators:
            if g * s * g_inv not in sub.elements:
                return False
    return True


def intersection_trivial(a: GroupClosure, b: GroupClosure) -> bool:
    """True iff the two element sets share exactly the identity."""
    common = a.elements & b.elements
    return len(common) == 1 and next(iter(common)).is_identity()


def product_covers(nsub: GroupClosure, h: GroupClosure, g: GroupClosure) -> bool:
    """True iff the element-wise product set {x*y : x in nsub, y in h} is all of g."""
    products = {
        Perm._unsafe(tuple(map(x.images.__getitem__, y.images)))
        for x in nsub.elements
        for y in h.elements
    }
    return products == g.elements


def abelian_structure(nsub: GroupClosure) -> tuple[int, int]:
    """Invariant factors (d1, d2) of an abelian group of rank at most 2.

    d1 is the group exponent (a finite abelian group always contains an
    element of maximal order), d2 = order/d1.  For rank <= 2 the group is
    C_d1 x C_d2 with d2 | d1; if the divisibility or the product check
    fails the input had rank > 2 and ConsistencyError is raised.
    """
    d1 = max(p.order() for p in nsub.elements)
    d2, remainder = divmod(nsub.order, d1)
    if remainder != 0 or d1 % d2 != 0:
        raise ConsistencyError(
            f"group of order {nsub.order} with exponent {d1} is not C_d1 x C_d2"
        )
    return d1, d2


def conjugation_checks(t: Triple) -> bool:
    """Verify the four conjugation identities that make N normal in G.

    With a = sigma0*sigma1 and b = sigma1*sigma0:

        sigma0 b sigma0^-1 = a
        sigma1 a sigma1^-1 = b
        sigma0 a sigma0^-1 = b^-1 a^-1
        sigma1 b sigma1^-1 = a^-1 b^-1

    All four are checked as actual permutation identities.
    """
    s0 = build_sigma0(t)
    s1 = build_sigma1(t)
    a = s0 * s1
    b = s1 * s0
    s0_inv = s0.inverse()
    s1_inv = s1.inverse()
    return (
        s0 * b * s0_inv == a
        and s1 * a * s1_inv == b
        and s0 * a * s0_inv == b.inverse() * a.inverse()
        and s1 * b * s1_inv == a.inverse() * b.inverse()
    )


@dataclass(frozen=True)
class TheoremReport:
    """Outcome of every structural check for one triple."""

    triple: tuple[int, int, int]
    order_G: int
    order_N: int
    order_H: int
    predicted_order_N: int
    predicted_order_G: int
    n_abelian: bool
    n_normal: bool
    intersection_trivial: bool
    product_covers: bool
    exponent_N: int
    invariant_factors_N: tuple[int, int]
    structure_string: str
    all_pass: bool

    def to_dict(self) -> dict:
        d = asdict(self)
        d["triple"] = list(self.triple)
        d["invariant_factors_N"] = list(self.invariant_factors_N)
        return d

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def verify_theorem(t: Triple, limit: int = DEFAULT_LIMIT) -> TheoremReport:
    """Enumerate G, N, H for the triple and check the full structure claim.

    all_pass requires every one of: |G| = 3n^2/alpha, |N| = n^2/alpha,
    |H| = 3, N abelian, N normal in G, N meets H trivially, N*H = G,
    invariant factors of N equal to (n, n/alpha), the four conjugation
    identities, and agreement of |N| with the lattice-module span count.
    """
    s0 = build_sigma0(t)
    s1 = build_sigma1(t)
    group = closure([s0, s1], limit)
    nsub = closure([s0 * s1, s1 * s0], limit)
    hsub = closure([s0], limit)

    pred_n, pred_g = predicted_orders(t)
    n_abelian = is_abelian(nsub)
    n_normal = is_normal(nsub, [s0, s1])
    trivial_meet = intersection_trivial(nsub, hsub)
    covers = product_covers(nsub, hsub, group)
    d1, d2 = abelian_structure(nsub)
    v1, v2 = phi_generators(t)

    all_pass = (
        group.order == pred_g
        and nsub.order == pred_n
        and hsub.order == 3
        and n_abelian
        and n_normal
        and trivial_meet
        and covers
        and (d1, d2) == (t.n, t.n // t.alpha)
        and conjugation_checks(t)
        and span_order(v1, v2) == nsub.order
    )
    return TheoremReport(
        triple=t.as_tuple(),
        order_G=group.order,
        order_N=nsub.order,
        order_H=hsub.order,
        predicted_order_N=pred_n,
        predicted_order_G=pred_g,
        n_abelian=n_abelian,
        n_normal=n_normal,
        intersection_trivial=trivial_meet,
        product_covers=covers,
        exponent_N=d1,
        invariant_factors_N=(d1, d2),
        structure_string=f"(C{d1} x C{d2}) : C3",
        all_pass=all_pass,
    )
