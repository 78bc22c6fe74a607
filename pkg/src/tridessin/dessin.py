"""The bicolored edge graph of a triangular billiards surface.

Unfolding the triangle (p0, p1, p2) produces 2n triangle copies; putting a
black vertex on the even (rotated) copies and a white vertex on the odd
(reflected) copies and joining copies that share a side yields a connected
bicolored graph with n black vertices, n white vertices, and 3n edges,
every vertex of degree 3.

Edges are labeled (m, i): m in {0..n-1} names the black vertex (the copy
rotated by 2*m*pi/n) and i in {0, 1, 2} the triangle side the edge
crosses.  The linear index 3*m + i identifies edges with {0..3n-1}, and
the two monodromy generators act by

    sigma0: (m, i) -> (m, i+1 mod 3)                 rotation at black vertices
    sigma1: (m, 0) -> (m - p1, 2)
            (m, 1) -> (m - p2, 0)                    rotation at white vertices
            (m, 2) -> (m - p0, 1)        (m arithmetic mod n)

Face counts, Euler characteristic, and genus come from the usual ribbon
graph bookkeeping: faces are the cycles of sigma0*sigma1, and
V - E + F = 2 - 2g.
"""

from __future__ import annotations

from dataclasses import dataclass
from io import StringIO
from math import gcd
from typing import NamedTuple

from .errors import ConsistencyError
from .perms import Perm, compose
from .triples import Triple

__all__ = [
    "EdgeLabel",
    "DessinStats",
    "build_sigma0",
    "build_sigma1",
    "stats",
    "export_dot",
    "is_connected",
    "cycle_type",
]


class EdgeLabel(NamedTuple):
    """An edge (m, i): black vertex m mod n, crossing triangle side i."""

    m: int
    side: int

    def index(self) -> int:
        return 3 * self.m + self.side

    @classmethod
    def from_index(cls, x: int) -> EdgeLabel:
        m, side = divmod(x, 3)
        return cls(m, side)

    def __str__(self) -> str:
        return f"({self.m},{self.side})"


def build_sigma0(t: Triple) -> Perm:
    """Rotation around black vertices: (m, i) -> (m, i+1 mod 3)."""
    n = t.n
    images = [0] * (3 * n)
    for m in range(n):
        base = 3 * m
        images[base] = base + 1
        images[base + 1] = base + 2
        images[base + 2] = base
    return Perm(images)


def build_sigma1(t: Triple) -> Perm:
    """Rotation around white vertices; shifts the black label by -p_j mod n."""
    n = t.n
    images = [0] * (3 * n)
    for m in range(n):
        images[3 * m] = 3 * ((m - t.p1) % n) + 2
        images[3 * m + 1] = 3 * ((m - t.p2) % n)
        images[3 * m + 2] = 3 * ((m - t.p0) % n) + 1
    return Perm(images)


def cycle_type(p: Perm) -> tuple[int, ...]:
    """Cycle lengths in decreasing order (passport entry for one rotation)."""
    return tuple(sorted((len(c) for c in p.cycles()), reverse=True))


@dataclass(frozen=True)
class DessinStats:
    """Combinatorial invariants of the edge graph for one triple."""

    black_vertices: int
    white_vertices: int
    edges: int
    faces: int
    euler_characteristic: int
    genus: int
    passport: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]


def stats(t: Triple) -> DessinStats:
    """Count vertices, edges, faces; derive Euler characteristic and genus.

    Faces are counted two independent ways: as the cycles of sigma0*sigma1,
    and from the closed form gcd(n,p0) + gcd(n,p1) + gcd(n,p2) (sigma0*sigma1
    translates each side class by a fixed step, and a step of size p on
    Z/nZ has gcd(n,p) orbits).  Disagreement raises ConsistencyError.
    """
    n = t.n
    s0 = build_sigma0(t)
    s1 = build_sigma1(t)
    face_perm = compose(s0, s1)
    faces = len(face_perm.cycles())
    expected_faces = gcd(n, t.p0) + gcd(n, t.p1) + gcd(n, t.p2)
    if faces != expected_faces:
        raise ConsistencyError(
            f"face count mismatch for {t}: cycles give {faces}, gcd formula gives {expected_faces}"
        )
    chi = 2 * n - 3 * n + faces
    if chi % 2 != 0:
        raise ConsistencyError(f"odd Euler characteristic {chi} for {t}")
    genus = (2 - chi) // 2
    if genus < 0:
        raise ConsistencyError(f"negative genus {genus} for {t}")
    return DessinStats(
        black_vertices=n,
        white_vertices=n,
        edges=3 * n,
        faces=faces,
        euler_characteristic=chi,
        genus=genus,
        passport=(cycle_type(s0), cycle_type(s1), cycle_type(face_perm)),
    )


def is_connected(t: Triple) -> bool:
    """True iff every edge is reachable from edge 0 via the two rotations."""
    s0 = build_sigma0(t).images
    s1 = build_sigma1(t).images
    total = len(s0)
    seen = bytearray(total)
    seen[0] = 1
    stack = [0]
    count = 1
    while stack:
        x = stack.pop()
        for y in (s0[x], s1[x]):
            if not seen[y]:
                seen[y] = 1
                count += 1
                stack.append(y)
    return count == total


def export_dot(t: Triple) -> str:
    """Render the bicolored graph in (undirected) DOT format.

    Black nodes b0..b{n-1} are the black-vertex labels m; white nodes
    w0..w{n-1} are the sigma1 cycles, numbered by their minimal edge index.
    Every edge carries its label "(m,i)".  Output is fully sorted, so
    repeated runs are byte-identical.
    """
    n = t.n
    s1 = build_sigma1(t)
    white_of_edge = [0] * (3 * n)
    for w, cycle in enumerate(s1.cycles()):
        for x in cycle:
            white_of_edge[x] = w

    out = StringIO()
    out.write(f"graph dessin_{t.p0}_{t.p1}_{t.p2} {{\n")
    for m in range(n):
        out.write(f'  b{m} [style=filled fillcolor=black fontcolor=white];\n')
    for w in range(n):
        out.write(f"  w{w};\n")
    for x in range(3 * n):
        label = EdgeLabel.from_index(x)
        out.write(f'  b{label.m} -- w{white_of_edge[x]} [label="{label}"];\n')
    out.write("}\n")
    return out.getvalue()
