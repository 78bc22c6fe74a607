"""Translation-subgroup arithmetic in (Z/nZ)^3.

The two products sigma0*sigma1 and sigma1*sigma0 act on edges by
translating the black label within each side class.  Reading off the three
per-side translation amounts maps them to vectors

    v1 = (-p1, -p2, -p0) mod n        for sigma0*sigma1
    v2 = (-p2, -p0, -p1) mod n        for sigma1*sigma0

and the word (sigma0*sigma1)^k1 (sigma1*sigma0)^k2 corresponds to
k1*v1 + k2*v2.  Because the action on edges is faithful, the subgroup
generated by the two products is in bijection with the span of {v1, v2},
whose size is n^2/alpha.  This module computes that span by exhaustive
enumeration (the sizes involved make this cheap) and checks the integer
row-reduction identity that yields the closed form.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import ConsistencyError
from .triples import Triple

__all__ = [
    "ModVector",
    "phi_generators",
    "phi_of_word",
    "span_order",
    "verify_row_reduction",
]


@dataclass(frozen=True)
class ModVector:
    """A vector in (Z/nZ)^3; entries are stored reduced to [0, n)."""

    entries: tuple[int, int, int]
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        if len(self.entries) != 3:
            raise ValueError(f"expected 3 entries, got {self.entries}")
        reduced = tuple(e % self.modulus for e in self.entries)
        object.__setattr__(self, "entries", reduced)

    def __add__(self, other: ModVector) -> ModVector:
        self._check_compatible(other)
        return ModVector(
            tuple(a + b for a, b in zip(self.entries, other.entries)),
            self.modulus,
        )

    def scale(self, k: int) -> ModVector:
        return ModVector(tuple(k * e for e in self.entries), self.modulus)

    def _check_compatible(self, other: ModVector) -> None:
        if self.modulus != other.modulus:
            raise ValueError(f"modulus mismatch: {self.modulus} vs {other.modulus}")


def phi_generators(t: Triple) -> tuple[ModVector, ModVector]:
    """Translation vectors of sigma0*sigma1 and sigma1*sigma0."""
    n = t.n
    v1 = ModVector((-t.p1, -t.p2, -t.p0), n)
    v2 = ModVector((-t.p2, -t.p0, -t.p1), n)
    return v1, v2


def phi_of_word(k1: int, k2: int, t: Triple) -> ModVector:
    """Translation vector of the word (sigma0*sigma1)^k1 (sigma1*sigma0)^k2."""
    v1, v2 = phi_generators(t)
    return v1.scale(k1) + v2.scale(k2)


def span_order(v1: ModVector, v2: ModVector) -> int:
    """Number of distinct vectors a*v1 + b*v2 with a, b in Z/nZ.

    Exhaustive enumeration over all n^2 coefficient pairs; this is the
    oracle of record against which the closed form n^2/alpha is tested.
    """
    v1._check_compatible(v2)
    n = v1.modulus
    x1, y1, z1 = v1.entries
    x2, y2, z2 = v2.entries
    seen: set[tuple[int, int, int]] = set()
    for a in range(n):
        ax, ay, az = a * x1, a * y1, a * z1
        for b in range(n):
            seen.add(((ax + b * x2) % n, (ay + b * y2) % n, (az + b * z2) % n))
    return len(seen)


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g = gcd(a, b)."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    return old_r, old_x, old_y


def _matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    return [
        [sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def verify_row_reduction(t: Triple) -> bool:
    """Check the row-reduction identity behind the span-order formula.

    Finds s, u with s*p1 + u*p2 = 1 (mod n) -- possible since
    gcd(p1, p2, n) = 1 for a reduced triple -- multiplies the three
    matrices

        [[1, 0, 0],              [[p1, p2],       [[s, -p2],
         [-(s*p2 + u*p0), 1, 0],  [p2, p0],   x    [u,  p1]]
         [-(s*p0 + u*p1), 0, 1]]  [p0, p1]]

    over the integers, and confirms the product is congruent mod n to

        [[1, 0], [0, d], [0, -d]]      with d = p0*p1 - p2^2.

    (The third row uses the cross congruence p1^2 - p0*p2 = -d mod n.)
    Returns True on success; a mismatch names the offending entry and
    raises ConsistencyError, since the identity holds for every reduced
    triple and a failure can only be an implementation bug.
    """
    p0, p1, p2, n = t.p0, t.p1, t.p2, t.n
    g, x, y = _egcd(p1, p2)
    # gcd(p1, p2) is invertible mod n because gcd(p1, p2, n) = 1.
    g_inv = pow(g, -1, n)
    s = x * g_inv % n
    u = y * g_inv % n
    if (s * p1 + u * p2) % n != 1:
        raise ConsistencyError(f"Bezout lift failed for {t}: s={s}, u={u}")

    left = [
        [1, 0, 0],
        [-(s * p2 + u * p0), 1, 0],
        [-(s * p0 + u * p1), 0, 1],
    ]
    middle = [[p1, p2], [p2, p0], [p0, p1]]
    right = [[s, -p2], [u, p1]]
    product = _matmul(_matmul(left, middle), right)

    d = p0 * p1 - p2 * p2
    expected = [[1, 0], [0, d % n], [0, -d % n]]
    for i in range(3):
        for j in range(2):
            got = product[i][j] % n
            if got != expected[i][j]:
                raise ConsistencyError(
                    f"row reduction mismatch for {t} at entry ({i},{j}): "
                    f"{got} != {expected[i][j]} (mod {n})"
                )
    return True
