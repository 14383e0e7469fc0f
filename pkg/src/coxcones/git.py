"""Variation of GIT for Z^2-graded polynomial rings.

A weight system assigns a degree in Z^2 to every variable.  Characters
chi in the support cone are grouped into chambers by the angle order of
the distinct column rays; each chamber (and each interior wall) carries
the irrelevant ideal B_chi, the radical of the ideal generated by all
monomials of degree a positive multiple of chi.

Irrelevant ideals are found by bounded enumeration.  Variables sharing a
weight form a block; only the set of blocks a monomial touches matters for
its radical, so the search runs over block degree vectors and the answer
is rebuilt by picking one variable per touched block.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Sequence

from .cohomology import CoxPresentation
from .cones import ConeError, RationalCone, cone_contains, cone_from_rays, cross, primitive
from .polyalg import IdealBasis, Poly, PolyRing, ideal_codim

Monomial = tuple[str, ...]


class GITError(ValueError):
    pass


class NotStabilizedError(RuntimeError):
    """Enumeration at bound B and 2B gave different generators."""


@dataclass(frozen=True)
class WeightSystem:
    columns: tuple[tuple[int, int], ...]
    names: tuple[str, ...] = ()

    def __post_init__(self):
        cols = tuple((int(a), int(b)) for a, b in self.columns)
        if not cols:
            raise GITError("weight system has no columns")
        if any(c == (0, 0) for c in cols):
            raise GITError("zero weight column")
        names = tuple(self.names) or tuple(f"v{i}" for i in range(len(cols)))
        if len(names) != len(cols):
            raise GITError("one name per column")
        object.__setattr__(self, "columns", cols)
        object.__setattr__(self, "names", names)

    @classmethod
    def standard(cls, d: int, e: int, n: int) -> "WeightSystem":
        return weight_system_of(CoxPresentation.p1pn(d, e, n))

    @property
    def matrix(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return tuple(c[0] for c in self.columns), tuple(c[1] for c in self.columns)

    def blocks(self) -> list[tuple[tuple[int, int], tuple[str, ...]]]:
        """Variables grouped by weight, in order of first appearance."""
        out: dict = {}
        for name, w in zip(self.names, self.columns):
            out.setdefault(w, []).append(name)
        return [(w, tuple(v)) for w, v in out.items()]

    def support_cone(self) -> RationalCone:
        try:
            return cone_from_rays(list(self.columns))
        except ConeError:
            raise GITError("weight columns do not span a pointed cone") from None

    def ring(self) -> PolyRing:
        return PolyRing(self.names, self.columns)

    def to_json(self) -> dict:
        return {"columns": [list(c) for c in self.columns], "names": list(self.names)}


def weight_system_of(P: CoxPresentation) -> WeightSystem:
    cols, names = [], []
    for prefix, count, deg in P.blocks:
        if len(deg) != 2:
            raise GITError("weight systems need a Z^2 grading")
        # z variables are numbered from 1, as in the Cox ring
        start = 1 if prefix == "z" else 0
        for i in range(count):
            cols.append(deg)
            names.append(f"{prefix}{start + i}")
    return WeightSystem(tuple(cols), tuple(names))


@dataclass(frozen=True)
class GITChamber:
    cone: RationalCone
    generators: tuple[Monomial, ...]
    label: str
    wall: bool = False

    def to_json(self) -> dict:
        return {
            "cone": self.cone.to_json(),
            "label": self.label,
            "wall": self.wall,
            "generators": ["*".join(m) for m in self.generators],
        }


def _ordered_rays(W: WeightSystem) -> list[tuple[int, int]]:
    support = W.support_cone()
    if len(support.rays) < 2:
        raise GITError("all weight columns lie on one ray")
    start = support.rays[0]
    rays = {primitive(c) for c in W.columns}

    def angle(r):
        # pseudo-angle from ``start`` inside a pointed cone
        c, d = cross(start, r), start[0] * r[0] + start[1] * r[1]
        if c == 0:
            return Fraction(-1)
        return Fraction(-d, c)

    return sorted(rays, key=angle)


def chamber_fan(W: WeightSystem, degree_bound: int | None = None) -> list[GITChamber]:
    """Maximal chambers and the interior walls between them, in angle order
    (chamber, wall, chamber, ...)."""
    rays = _ordered_rays(W)
    pieces = []
    for i, (a, b) in enumerate(zip(rays, rays[1:])):
        if i:
            pieces.append((cone_from_rays([a]), a, True))
        pieces.append((cone_from_rays([a, b]), (a[0] + b[0], a[1] + b[1]), False))
    labels = _labels(len(rays) - 1)
    out = []
    for (cone, chi, wall), label in zip(pieces, labels):
        gens = irrelevant_ideal(W, chi, degree_bound)
        out.append(GITChamber(cone, tuple(gens), label, wall))
    return out


def _labels(chambers: int) -> list[str]:
    if chambers == 1:
        return ["Y"]
    if chambers == 2:
        return ["Y", "Z", "Y+"]
    out = []
    for i in range(chambers):
        if i:
            out.append(f"W{i}")
        out.append(f"C{i}")
    return out


def walls(W: WeightSystem) -> list[tuple[int, int]]:
    return _ordered_rays(W)[1:-1]


def default_degree_bound(W: WeightSystem, chi: Sequence[int]) -> int:
    size = max(abs(x) for c in W.columns for x in c)
    negatives = sum(1 for c in W.columns if c[0] < 0)
    return 4 * (abs(chi[0]) + abs(chi[1])) * max(size, negatives, 1)


def _positive_functional(W: WeightSystem) -> tuple[int, int]:
    a, b = W.support_cone().rays
    return (-a[1] + b[1], a[0] - b[0])


def _active_patterns(W: WeightSystem, chi, bound: int) -> set[frozenset[int]]:
    """Block index sets S admitting t_w >= 1 on S (0 elsewhere) with
    sum t_w w = k chi for some k >= 1, k |chi|_1 <= bound."""
    blocks = [w for w, _ in W.blocks()]
    ell = _positive_functional(W)

    def L(v):
        return ell[0] * v[0] + ell[1] * v[1]

    norm = abs(chi[0]) + abs(chi[1])
    kmax = bound // norm
    if kmax < 1:
        return set()
    budget = kmax * L(chi)
    found = set()
    for size in range(1, len(blocks) + 1):
        for S in combinations(range(len(blocks)), size):
            if any(found_S <= set(S) for found_S in found):
                continue  # a subset already works; S cannot be minimal
            if _pattern_reachable([blocks[i] for i in S], chi, kmax, budget, L):
                found.add(frozenset(S))
    return found


def _pattern_reachable(ws, chi, kmax, budget, L) -> bool:
    *head, last = ws
    base = (sum(w[0] for w in ws), sum(w[1] for w in ws))
    if L(base) > budget:
        return False
    # extra multiplicities on all but the last block; the last one is solved
    steps = [L(w) for w in head]

    def rec(i, acc, used):
        if i == len(head):
            return _solve_last(acc, last, chi, kmax)
        t = 0
        while used + t * steps[i] <= budget - L(base):
            nxt = (acc[0] + t * head[i][0], acc[1] + t * head[i][1])
            if rec(i + 1, nxt, used + t * steps[i]):
                return True
            t += 1
        return False

    return rec(0, base, 0)


def _solve_last(p, w, chi, kmax) -> bool:
    """Is k chi - p a nonnegative multiple of w for some 1 <= k <= kmax?"""
    c = cross(w, chi)
    cp = cross(w, p)
    if c == 0:
        if cp != 0:
            return False
        ks = range(1, kmax + 1)
    else:
        if cp % c:
            return False
        ks = [cp // c] if 1 <= cp // c <= kmax else []
    for k in ks:
        r = (k * chi[0] - p[0], k * chi[1] - p[1])
        if r == (0, 0):
            return True
        i = 0 if w[0] else 1
        if r[i] % w[i] == 0 and r[i] // w[i] > 0 and (r[0] * w[1] == r[1] * w[0]):
            return True
    return False


def _generators(W: WeightSystem, patterns) -> list[Monomial]:
    blocks = W.blocks()
    minimal = [S for S in patterns if not any(T < S for T in patterns)]
    out = set()
    for S in minimal:
        for choice in product(*(blocks[i][1] for i in sorted(S))):
            out.add(tuple(sorted(choice, key=W.names.index)))
    return sorted(out, key=lambda m: (len(m), [W.names.index(v) for v in m]))


def irrelevant_ideal(W: WeightSystem, chi: Sequence[int], degree_bound: int | None = None) -> list[Monomial]:
    """Minimal squarefree generators of B_chi, each a tuple of variable names."""
    chi = (int(chi[0]), int(chi[1]))
    if chi == (0, 0):
        raise GITError("character must be nonzero")
    if not cone_contains(W.support_cone(), chi):
        raise GITError(f"character {chi} lies outside the support cone")
    bound = degree_bound if degree_bound is not None else default_degree_bound(W, chi)
    first = _generators(W, _active_patterns(W, chi, bound))
    second = _generators(W, _active_patterns(W, chi, 2 * bound))
    if first != second:
        raise NotStabilizedError(f"irrelevant ideal at {chi} did not stabilize at bound {bound}")
    return first


# ---------------------------------------------------------------------------
# monomial ideal utilities


def minimalize(gens: Sequence[Monomial]) -> list[Monomial]:
    sets = {frozenset(m): m for m in gens}
    keep = [m for s, m in sets.items() if not any(t < s for t in sets)]
    return sorted(keep, key=lambda m: (len(m), m))


def monomial_intersection(I: Sequence[Monomial], J: Sequence[Monomial]) -> list[Monomial]:
    """Intersection of squarefree monomial ideals: minimal lcms of pairs."""
    return _canon(minimalize([tuple(sorted(set(a) | set(b))) for a in I for b in J]))


def monomial_sum(I: Sequence[Monomial], J: Sequence[Monomial]) -> list[Monomial]:
    return _canon(minimalize([tuple(sorted(m)) for m in list(I) + list(J)]))


def _canon(gens):
    return sorted((tuple(sorted(m)) for m in gens), key=lambda m: (len(m), m))


def same_ideal(I: Sequence[Monomial], J: Sequence[Monomial]) -> bool:
    return _canon(minimalize([tuple(sorted(m)) for m in I])) == _canon(minimalize([tuple(sorted(m)) for m in J]))


def monomial_polys(ring: PolyRing, gens: Sequence[Monomial]) -> list[Poly]:
    out = []
    for m in gens:
        p = ring.one()
        for v in m:
            p = p * ring.var(v)
        out.append(p)
    return out


def irr_codim(m: int, n: int) -> int:
    """Codimension of (x_0..x_m) cap (y_0..y_n) in k[x, y]."""
    if m < 1 or n < 1:
        raise GITError("factor dimensions must be at least 1")
    return min(m, n) + 1


def irr_codim_at_least_3(m: int, n: int) -> bool:
    return irr_codim(m, n) >= 3


def irr_codim_groebner(m: int, n: int) -> int:
    """Same codimension from the Groebner staircase of the explicit ideal."""
    names = [f"x{i}" for i in range(m + 1)] + [f"y{j}" for j in range(n + 1)]
    ring = PolyRing(tuple(names))
    gens = [(f"x{i}", f"y{j}") for i in range(m + 1) for j in range(n + 1)]
    return ideal_codim(IdealBasis(tuple(monomial_polys(ring, gens))))


__all__ = [
    "GITChamber", "GITError", "NotStabilizedError", "WeightSystem", "chamber_fan",
    "default_degree_bound", "irr_codim", "irr_codim_at_least_3", "irr_codim_groebner",
    "irrelevant_ideal", "minimalize", "monomial_intersection", "monomial_polys", "monomial_sum",
    "same_ideal", "walls", "weight_system_of",
]
