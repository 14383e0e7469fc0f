"""Exact rational cones in the lattice Z^rho of divisor classes.

Cones are stored by primitive extremal generators.  In rank 2 the two
boundary rays are kept in counterclockwise order, which makes the stored
form canonical; in higher rank the extremal rays are kept sorted.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

Vector = tuple[int, ...]


class ConeError(ValueError):
    pass


def primitive(v: Sequence[int]) -> Vector:
    """Divide by the positive gcd of the entries; the direction is kept."""
    v = tuple(int(x) for x in v)
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        raise ConeError("zero ray")
    return tuple(x // g for x in v)


def cross(a: Sequence[int], b: Sequence[int]) -> int:
    return a[0] * b[1] - a[1] * b[0]


def dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# exact linear algebra helpers


def _solve(columns: Sequence[Vector], v: Vector):
    """Exact solution c of sum c_i columns_i = v, or None if inconsistent.

    Columns must be linearly independent.
    """
    k = len(columns)
    n = len(v)
    # augmented n x (k+1) system
    rows = [[Fraction(columns[j][i]) for j in range(k)] + [Fraction(v[i])] for i in range(n)]
    piv_row = 0
    pivots = []
    for col in range(k):
        pr = next((r for r in range(piv_row, n) if rows[r][col] != 0), None)
        if pr is None:
            return None
        rows[piv_row], rows[pr] = rows[pr], rows[piv_row]
        inv = 1 / rows[piv_row][col]
        rows[piv_row] = [x * inv for x in rows[piv_row]]
        for r in range(n):
            if r != piv_row and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[piv_row])]
        pivots.append(col)
        piv_row += 1
    for r in range(piv_row, n):
        if rows[r][k] != 0:
            return None
    return [rows[i][k] for i in range(k)]


def rank_of(vectors: Sequence[Vector]) -> int:
    if not vectors:
        return 0
    rows = [[Fraction(x) for x in v] for v in vectors]
    n = len(rows[0])
    r = 0
    for col in range(n):
        pr = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col] / rows[r][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


def _in_cone_of(gens: Sequence[Vector], v: Vector) -> bool:
    """Nonnegative combination test via Caratheodory: try every linearly
    independent subset of the generators."""
    if all(x == 0 for x in v):
        return True
    dim = len(v)
    for size in range(1, min(len(gens), dim) + 1):
        for subset in combinations(gens, size):
            if rank_of(subset) < size:
                continue
            sol = _solve(subset, v)
            if sol is not None and all(c >= 0 for c in sol):
                return True
    return False


# ---------------------------------------------------------------------------
# cones


@dataclass(frozen=True)
class RationalCone:
    """Finitely generated strictly convex cone with optional open rays.

    ``open_rays[i]`` marks ``rays[i]`` as excluded from the cone (the
    closure still contains it).
    """

    rays: tuple[Vector, ...]
    open_rays: tuple[bool, ...] = ()

    def __post_init__(self):
        rays = tuple(tuple(int(x) for x in r) for r in self.rays)
        if not rays:
            raise ConeError("a cone needs at least one ray")
        flags = tuple(bool(f) for f in self.open_rays) or (False,) * len(rays)
        if len(flags) != len(rays):
            raise ConeError("open_rays must match rays")
        object.__setattr__(self, "rays", rays)
        object.__setattr__(self, "open_rays", flags)

    @property
    def rank(self) -> int:
        return len(self.rays[0])

    @property
    def closure(self) -> "RationalCone":
        return RationalCone(self.rays)

    def with_open(self, *rays: Sequence[int]) -> "RationalCone":
        targets = {primitive(r) for r in rays}
        missing = targets - set(self.rays)
        if missing:
            raise ConeError(f"{sorted(missing)} are not generators of the cone")
        return RationalCone(self.rays, tuple(r in targets or f for r, f in zip(self.rays, self.open_rays)))

    def is_closed(self) -> bool:
        return not any(self.open_rays)

    def contains(self, v: Sequence[int]) -> bool:
        return cone_contains(self, v)

    def to_json(self) -> dict:
        return {"rays": [list(r) for r in self.rays], "open_rays": list(self.open_rays)}

    @classmethod
    def from_json(cls, obj: dict) -> "RationalCone":
        rays = [tuple(r) for r in obj["rays"]]
        flags = obj.get("open_rays") or [False] * len(rays)
        return cls(tuple(rays), tuple(flags))

    def __str__(self):
        parts = []
        for r, f in zip(self.rays, self.open_rays):
            parts.append("(" + ",".join(str(x) for x in r) + ")" + ("°" if f else ""))
        return "cone[" + ", ".join(parts) + "]"


def _extremal_2d(rays: list[Vector]) -> tuple[Vector, ...]:
    if len(rays) == 1:
        return (rays[0],)
    start = end = None
    for r in rays:
        if all(cross(r, v) > 0 or v == r for v in rays):
            start = r
        if all(cross(v, r) > 0 or v == r for v in rays):
            end = r
    if start is None or end is None:
        raise ConeError("rays do not span a strictly convex cone")
    return (start, end)


def _extremal_nd(rays: list[Vector]) -> tuple[Vector, ...]:
    for r in rays:
        if _in_cone_of(rays, tuple(-x for x in r)):
            raise ConeError("rays do not span a strictly convex cone")
    if rank_of(rays) == len(rays):
        return tuple(sorted(rays, reverse=True))
    extremal = [r for r in rays if not _in_cone_of([v for v in rays if v != r], r)]
    return tuple(sorted(extremal, reverse=True))


def cone_from_rays(rays: Sequence[Sequence[int]], open_rays: Sequence[Sequence[int]] = ()) -> RationalCone:
    """Canonical cone spanned by ``rays``; ``open_rays`` lists generators to
    mark as excluded."""
    if not rays:
        raise ConeError("cone_from_rays needs at least one ray")
    dims = {len(r) for r in rays}
    if len(dims) != 1:
        raise ConeError("rays of different ranks")
    prims = sorted({primitive(r) for r in rays})
    if len(prims[0]) == 2:
        ext = _extremal_2d(prims)
    elif len(prims[0]) == 1:
        if len(prims) > 1:
            raise ConeError("rays do not span a strictly convex cone")
        ext = tuple(prims)
    else:
        ext = _extremal_nd(prims)
    cone = RationalCone(ext)
    if open_rays:
        cone = cone.with_open(*open_rays)
    return cone


def cone_contains(C: RationalCone, v: Sequence[int]) -> bool:
    """Membership for the closed cone; open rays exclude their own
    half-line (but not the interior points near it)."""
    v = tuple(int(x) for x in v)
    if len(v) != C.rank:
        raise ConeError(f"vector of rank {len(v)} tested against a rank {C.rank} cone")
    if all(x == 0 for x in v):
        return not any(C.open_rays)
    if C.rank == 2:
        inside = _contains_2d(C.rays, v)
    else:
        inside = _in_cone_of(C.rays, v)
    if not inside:
        return False
    if any(C.open_rays):
        pv = primitive(v)
        for r, f in zip(C.rays, C.open_rays):
            if f and r == pv:
                return False
    return True


def _contains_2d(rays, v) -> bool:
    if len(rays) == 1:
        r = rays[0]
        return cross(r, v) == 0 and dot(r, v) > 0
    a, b = rays
    return cross(a, v) >= 0 and cross(v, b) >= 0


def dual_cone_2d(C: RationalCone) -> RationalCone:
    """Dual cone via the inward normals of the two boundary rays."""
    if C.rank != 2 or len(C.rays) != 2:
        raise ConeError("dual_cone_2d needs a two-ray cone in rank 2")
    a, b = C.rays
    return cone_from_rays([(-a[1], a[0]), (b[1], -b[0])])


def cone_union_2d(C1: RationalCone, C2: RationalCone) -> RationalCone:
    """Union of two rank-2 cones, which must itself be a convex cone."""
    if C1.rank != 2 or C2.rank != 2:
        raise ConeError("cone_union_2d is only defined in rank 2")
    try:
        hull = cone_from_rays(list(C1.rays) + list(C2.rays))
    except ConeError:
        raise ConeError("union is not a strictly convex cone") from None
    # the union is convex iff every hull point is in one of the pieces; in
    # rank 2 it suffices to check the bisectors between consecutive rays
    rays = sorted(set(C1.rays) | set(C2.rays), key=lambda r: _angle_key(hull.rays[0], r))
    samples = list(rays)
    for u, w in zip(rays, rays[1:]):
        samples.append(tuple(x + y for x, y in zip(u, w)))
    for s in samples:
        if not (_contains_2d(C1.rays, s) or _contains_2d(C2.rays, s)):
            raise ConeError("union of the cones is not convex")
    flags = []
    for r in hull.rays:
        flags.append(all(_ray_open(C, r) for C in (C1, C2) if _contains_2d(C.rays, r)))
    return RationalCone(hull.rays, tuple(flags))


def _ray_open(C: RationalCone, r: Vector) -> bool:
    return any(f and g == r for g, f in zip(C.rays, C.open_rays))


def _angle_key(base: Vector, r: Vector):
    # sort rays inside a pointed cone by angle measured from ``base``
    if r == base:
        return Fraction(-1)
    c, d = cross(base, r), dot(base, r)
    # monotone in the angle on (0, pi)
    return Fraction(-d, c) if c else Fraction(10**18)


def cones_equal(C1: RationalCone, C2: RationalCone) -> bool:
    return C1 == C2


def cone_subset(C1: RationalCone, C2: RationalCone) -> bool:
    """Closed-hull containment: every generator of C1 lies in C2's closure."""
    return all(cone_contains(C2.closure, r) for r in C1.rays)


# ---------------------------------------------------------------------------
# lattice maps


@dataclass(frozen=True)
class LatticeMap:
    """Integer matrix acting on column vectors; column j is the image of
    the j-th basis class."""

    matrix: tuple[tuple[int, ...], ...]
    pseudoautomorphism: bool = False

    def __post_init__(self):
        m = tuple(tuple(int(x) for x in row) for row in self.matrix)
        if not m or any(len(row) != len(m) for row in m):
            raise ConeError("lattice map must be a square matrix")
        object.__setattr__(self, "matrix", m)
        if self.pseudoautomorphism and abs(self.det()) != 1:
            raise ConeError("a pseudoautomorphism action must have determinant +-1")

    @classmethod
    def from_images(cls, images: Sequence[Sequence[int]], pseudoautomorphism: bool = False) -> "LatticeMap":
        n = len(images)
        return cls(tuple(tuple(images[j][i] for j in range(n)) for i in range(n)), pseudoautomorphism)

    @classmethod
    def identity(cls, rank: int) -> "LatticeMap":
        return cls(tuple(tuple(int(i == j) for j in range(rank)) for i in range(rank)), True)

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def image(self, j: int) -> Vector:
        return tuple(row[j] for row in self.matrix)

    def __call__(self, v: Sequence[int]) -> Vector:
        if len(v) != self.rank:
            raise ConeError("rank mismatch")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.matrix)

    def __matmul__(self, other: "LatticeMap") -> "LatticeMap":
        n = self.rank
        if other.rank != n:
            raise ConeError("rank mismatch")
        m = tuple(tuple(sum(self.matrix[i][k] * other.matrix[k][j] for k in range(n)) for j in range(n))
                  for i in range(n))
        return LatticeMap(m, self.pseudoautomorphism and other.pseudoautomorphism)

    def det(self) -> int:
        m = [[Fraction(x) for x in row] for row in self.matrix]
        n = len(m)
        det = Fraction(1)
        for c in range(n):
            pr = next((r for r in range(c, n) if m[r][c] != 0), None)
            if pr is None:
                return 0
            if pr != c:
                m[c], m[pr] = m[pr], m[c]
                det = -det
            det *= m[c][c]
            for r in range(c + 1, n):
                f = m[r][c] / m[c][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
        return int(det)

    def is_involution(self) -> bool:
        return (self @ self) == LatticeMap.identity(self.rank)

    def __eq__(self, other):
        return isinstance(other, LatticeMap) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)


def apply_map(M: LatticeMap, C: RationalCone) -> RationalCone:
    """Image cone; open flags travel with their rays."""
    if M.rank != C.rank:
        raise ConeError("rank mismatch between map and cone")
    images = [M(r) for r in C.rays]
    opened = [img for img, f in zip(images, C.open_rays) if f]
    return cone_from_rays(images, opened)


def orbit_chambers(gens: Sequence[LatticeMap], seed: RationalCone, max_word_len: int) -> list[RationalCone]:
    """Distinct images of ``seed`` under all words of length <= max_word_len,
    in breadth-first order."""
    for g in gens:
        if not g.is_involution():
            raise ConeError("orbit generators must be involutions")
        if abs(g.det()) != 1:
            raise ConeError("orbit generators must be unimodular")
    seen = {seed}
    out = [seed]
    frontier = [seed]
    for _ in range(max_word_len):
        nxt = []
        for C in frontier:
            for g in gens:
                D = apply_map(g, C)
                if D not in seen:
                    seen.add(D)
                    out.append(D)
                    nxt.append(D)
        frontier = nxt
    return out


def orthant(rank: int) -> RationalCone:
    return cone_from_rays([tuple(int(i == j) for j in range(rank)) for i in range(rank)])
