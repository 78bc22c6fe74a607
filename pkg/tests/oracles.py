"""Independent brute-force oracles used by the tests.

Everything here works directly on (m, side) pairs with plain dict/set
bookkeeping, deliberately avoiding the package's Perm machinery, so test
expectations are computed by a second route.
"""

from __future__ import annotations

from itertools import product
from math import gcd


def sigma0_image(m: int, side: int, triple: tuple[int, int, int]) -> tuple[int, int]:
    return (m, (side + 1) % 3)


def sigma1_image(m: int, side: int, triple: tuple[int, int, int]) -> tuple[int, int]:
    p0, p1, p2 = triple
    n = p0 + p1 + p2
    if side == 0:
        return ((m - p1) % n, 2)
    if side == 1:
        return ((m - p2) % n, 0)
    return ((m - p0) % n, 1)


def face_orbit_count(triple: tuple[int, int, int]) -> int:
    """Number of orbits of the map sigma0(sigma1(edge)) on (m, side) pairs."""
    n = sum(triple)
    seen: set[tuple[int, int]] = set()
    count = 0
    for start in product(range(n), range(3)):
        if start in seen:
            continue
        count += 1
        x = start
        while x not in seen:
            seen.add(x)
            x = sigma0_image(*sigma1_image(*x, triple), triple)
    return count


def unordered_reduced_triples(max_n: int) -> set[tuple[int, int, int]]:
    """All sorted reduced triples with sum <= max_n, by raw triple scan."""
    found: set[tuple[int, int, int]] = set()
    for a in range(1, max_n + 1):
        for b in range(1, max_n + 1):
            c_max = max_n - a - b
            for c in range(1, c_max + 1):
                if gcd(gcd(a, b), c) == 1:
                    found.add(tuple(sorted((a, b, c))))
    return found
