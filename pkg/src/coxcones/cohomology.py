"""Section counts for line bundles on products of projective spaces and on
hypersurfaces in them.

Two independent routes to ``h^0(X, O_X(a, b))``:

* the long exact sequence of ``0 -> O(D - X) -> O(D) -> O_X(D) -> 0`` with
  Kuenneth on the ambient product (:func:`h0_X`), and
* the Hilbert function of the graded ring ``k[x, y, z] / I`` resolved by the
  Koszul complex of the relations (:func:`koszul_hilbert`).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial
from typing import Sequence

from .hypersurface import AmbientProduct, Hypersurface


def binom(m: int, k: int) -> int:
    """Dimension-count binomial: zero when m < k or m < 0."""
    if k < 0 or m < k or m < 0:
        return 0
    return comb(m, k)


def binom_poly(m: int, k: int) -> Fraction:
    """m(m-1)...(m-k+1)/k!, the polynomial extension valid for all m."""
    num = 1
    for i in range(k):
        num *= m - i
    return Fraction(num, factorial(k))


@dataclass(frozen=True)
class Interval:
    """Closed integer range for a dimension the degrees alone do not pin."""

    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("empty interval")

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    def __contains__(self, v: int) -> bool:
        return self.lo <= v <= self.hi

    def __str__(self):
        return f"[{self.lo},{self.hi}]"


def _as_interval(v) -> Interval:
    return v if isinstance(v, Interval) else Interval(v, v)


def _collapse(lo: int, hi: int):
    return lo if lo == hi else Interval(lo, hi)


# ---------------------------------------------------------------------------
# ambient product


def h_projective(N: int, a: int, i: int) -> int:
    if i == 0:
        return binom(a + N, N) if a >= 0 else 0
    if i == N:
        return binom(-a - 1, N) if a <= -N - 1 else 0
    return 0


def h_product(ambient: AmbientProduct, cls: Sequence[int], i: int) -> int:
    """dim H^i of O(cls) on the product, by Kuenneth."""
    if len(cls) != ambient.rank:
        raise ValueError("class rank does not match ambient")
    # each factor has cohomology in at most one degree
    total_deg = 0
    value = 1
    for N, a in zip(ambient.dims, cls):
        if a >= 0:
            value *= h_projective(N, a, 0)
        elif a <= -N - 1:
            value *= h_projective(N, a, N)
            total_deg += N
        else:
            return 0
    return value if total_deg == i else 0


def chi_product(ambient: AmbientProduct, cls: Sequence[int]) -> Fraction:
    out = Fraction(1)
    for N, a in zip(ambient.dims, cls):
        out *= binom_poly(a + N, N)
    return out


# ---------------------------------------------------------------------------
# hypersurface


def _shift(cls, md):
    return tuple(a - d for a, d in zip(cls, md))


def euler_char_X(X: Hypersurface, cls: Sequence[int]) -> int:
    amb = X.ambient
    value = chi_product(amb, cls) - chi_product(amb, _shift(cls, X.multidegree))
    if value.denominator != 1:
        raise ArithmeticError("non-integral Euler characteristic")
    return int(value)


def h_X(X: Hypersurface, cls: Sequence[int], i: int):
    """dim H^i(X, O_X(cls)) from the ideal-sheaf sequence.

    The maps ``H^j(D - X) -> H^j(D)`` are multiplication by f: injective
    for j = 0, surjective in top degree (Serre dual of the j = 0 case).
    Elsewhere they are known only when source or target vanishes; the
    result is then an :class:`Interval`.
    """
    if i < 0 or i > X.dim:
        return 0
    amb = X.ambient
    D = tuple(cls)
    DX = _shift(D, X.multidegree)
    coker = _map_cokernel(amb, DX, D, i)
    ker = _map_kernel(amb, DX, D, i + 1)
    return _collapse(coker[0] + ker[0], coker[1] + ker[1])


def _map_rank_bounds(amb: AmbientProduct, src: int, tgt: int, j: int) -> tuple[int, int]:
    if src == 0 or tgt == 0:
        return 0, 0
    if j == 0:
        return src, src
    if j == amb.dim:
        return tgt, tgt
    return 0, min(src, tgt)


def _map_cokernel(amb, DX, D, j):
    src, tgt = h_product(amb, DX, j), h_product(amb, D, j)
    lo_rank, hi_rank = _map_rank_bounds(amb, src, tgt, j)
    return tgt - hi_rank, tgt - lo_rank


def _map_kernel(amb, DX, D, j):
    src, tgt = h_product(amb, DX, j), h_product(amb, D, j)
    lo_rank, hi_rank = _map_rank_bounds(amb, src, tgt, j)
    return src - hi_rank, src - lo_rank


def h0_X(X: Hypersurface, cls: Sequence[int]):
    return h_X(X, cls, 0)


@dataclass(frozen=True)
class CohomologyTable:
    """(i, class) -> dimension (int when exact, Interval otherwise)."""

    entries: dict = field(default_factory=dict)

    def __getitem__(self, key):
        return self.entries[key]

    def is_exact(self, key) -> bool:
        return not isinstance(self.entries[key], Interval)


def cohomology_table(X: Hypersurface, classes: Sequence[Sequence[int]]) -> CohomologyTable:
    entries = {}
    for cls in classes:
        for i in range(X.dim + 1):
            entries[(i, tuple(cls))] = h_X(X, cls, i)
    return CohomologyTable(entries)


def les_euler_char(X: Hypersurface, cls: Sequence[int]) -> int | None:
    """Alternating sum of the LES values, or None if any is an interval."""
    total = 0
    for i in range(X.dim + 1):
        v = h_X(X, cls, i)
        if isinstance(v, Interval):
            return None
        total += (-1) ** i * v
    return total


# ---------------------------------------------------------------------------
# Cox presentations and the Koszul Hilbert function


@dataclass(frozen=True)
class CoxPresentation:
    """Graded polynomial ring modulo a complete intersection.

    ``blocks`` lists ``(prefix, count, degree)`` for each group of variables
    sharing one degree; ``relation_degrees`` one degree per relation.
    """

    blocks: tuple[tuple[str, int, tuple[int, ...]], ...]
    relation_degrees: tuple[tuple[int, ...], ...]
    relations: tuple = ()

    def __post_init__(self):
        blocks = tuple((str(p), int(c), tuple(int(x) for x in deg)) for p, c, deg in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "relation_degrees", tuple(tuple(r) for r in self.relation_degrees))
        object.__setattr__(self, "relations", tuple(self.relations))
        if self.relations and len(self.relations) != len(self.relation_degrees):
            raise ValueError("relation count does not match relation degrees")

    @classmethod
    def p1pn(cls, d: int, e: int, n: int, relations: Sequence = ()) -> "CoxPresentation":
        return cls(
            (("x", 2, (1, 0)), ("y", n + 1, (0, 1)), ("z", d, (-1, e))),
            ((0, e),) * (d + 1),
            tuple(relations),
        )

    @classmethod
    def hypersurface(cls, dims: Sequence[int], multidegree: Sequence[int]) -> "CoxPresentation":
        """Ambient Cox ring modulo the single defining equation."""
        rho = len(dims)
        prefixes = "xywvuts"
        blocks = tuple((prefixes[i] if i < len(prefixes) else f"u{i}_", n + 1,
                        tuple(int(i == j) for j in range(rho))) for i, n in enumerate(dims))
        return cls(blocks, (tuple(multidegree),))

    @property
    def generator_count(self) -> int:
        return sum(c for _, c, _ in self.blocks)

    @property
    def relation_count(self) -> int:
        return len(self.relation_degrees)

    @property
    def krull_dimension(self) -> int:
        return self.generator_count - self.relation_count

    def variable_degrees(self) -> list[tuple[int, ...]]:
        return [deg for _, c, deg in self.blocks for _ in range(c)]

    def to_json(self) -> dict:
        return {
            "generators": [{"block": p, "count": c, "degree": list(deg)} for p, c, deg in self.blocks],
            "relation_degrees": [list(r) for r in self.relation_degrees],
            "relations": [str(r) for r in self.relations],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "CoxPresentation":
        blocks = tuple((g["block"], g["count"], tuple(g["degree"])) for g in obj["generators"])
        return cls(blocks, tuple(tuple(r) for r in obj["relation_degrees"]))


def _positive_functional(degrees: Sequence[tuple[int, int]]) -> tuple[int, int]:
    from .cones import cone_from_rays

    C = cone_from_rays(list(set(degrees)))
    if len(C.rays) == 1:
        return C.rays[0]
    a, b = C.rays
    # sum of the inward normals is positive on the whole cone minus 0
    return (-a[1] + b[1], a[0] - b[0])


def graded_dimension(P: CoxPresentation, cls: Sequence[int]) -> int:
    """Number of monomials of the given degree in the polynomial ring."""
    blocks = [(c, deg) for _, c, deg in P.blocks if c > 0]
    if any(len(deg) != 2 for _, deg in blocks):
        raise ValueError("graded_dimension supports rank-2 gradings")
    ell = _positive_functional([deg for _, deg in blocks])
    weights = [ell[0] * deg[0] + ell[1] * deg[1] for _, deg in blocks]
    if any(w <= 0 for w in weights):
        raise ValueError("variable degrees do not span a pointed cone")

    @lru_cache(maxsize=None)
    def count(idx: int, a: int, b: int) -> int:
        c, (da, db) = blocks[idx]
        if idx == len(blocks) - 1:
            # a = k*da, b = k*db for some k >= 0
            if da:
                if a % da:
                    return 0
                k = a // da
            elif db:
                if b % db:
                    return 0
                k = b // db
            else:
                return 0
            if k < 0 or (k * da, k * db) != (a, b):
                return 0
            return binom(k + c - 1, c - 1)
        total = 0
        budget = ell[0] * a + ell[1] * b
        kmax = budget // weights[idx] if budget >= 0 else -1
        for k in range(kmax + 1):
            total += binom(k + c - 1, c - 1) * count(idx + 1, a - k * da, b - k * db)
        return total

    return count(0, int(cls[0]), int(cls[1]))


def koszul_hilbert(P: CoxPresentation, cls: Sequence[int]) -> int:
    """Hilbert function of the quotient by a regular sequence of relations:
    alternating sum over subsets of relations of shifted monomial counts."""
    a, b = cls
    rels = P.relation_degrees
    total = 0
    for j in range(len(rels) + 1):
        sign = -1 if j % 2 else 1
        for subset in combinations(range(len(rels)), j):
            sa = sum(rels[k][0] for k in subset)
            sb = sum(rels[k][1] for k in subset)
            total += sign * graded_dimension(P, (a - sa, b - sb))
    return total


# ---------------------------------------------------------------------------
# multiplication-map hypotheses


class Certification(enum.Enum):
    CERTIFIED = "certified"
    FAILS = "fails"
    CANNOT_CERTIFY = "cannot-certify"

    def __bool__(self):
        return self is Certification.CERTIFIED


@dataclass(frozen=True)
class MumfordCheck:
    result: Certification
    reason: str
    failing: tuple = ()

    def __bool__(self):
        return bool(self.result)


def vanishing_check_mumford(X: Hypersurface, D: Sequence[int], L: Sequence[int]) -> MumfordCheck:
    """Check H^i(D - iL) = H^i(D - (i+1)L) = 0 for i = 1..h^0(L)-1.

    Those vanishings make H^0(D-L) (x) H^0(L) -> H^0(D) surjective.  Returns
    CANNOT_CERTIFY when D has no sections or a needed group is only known
    up to an interval that contains 0.
    """
    D = tuple(D)
    L = tuple(L)
    rho = X.ambient.rank
    basis = {tuple(int(i == j) for j in range(rho)) for i in range(rho)}
    if L not in basis:
        raise ValueError("L must be one of the basis classes H_i")
    h0D = _as_interval(h0_X(X, D))
    if h0D.hi == 0:
        return MumfordCheck(Certification.CANNOT_CERTIFY, "D has no sections")
    m = h0_X(X, L)
    if isinstance(m, Interval):
        return MumfordCheck(Certification.CANNOT_CERTIFY, "h^0(L) not determined")
    unknown = []
    failing = []
    for i in range(1, m):
        for shift in (i, i + 1):
            cls = tuple(a - shift * l for a, l in zip(D, L))
            v = _as_interval(h_X(X, cls, i))
            if v.lo > 0:
                failing.append((i, cls))
            elif v.hi > 0:
                unknown.append((i, cls))
    if failing:
        return MumfordCheck(Certification.FAILS, "nonzero cohomology", tuple(failing))
    if unknown:
        return MumfordCheck(Certification.CANNOT_CERTIFY, "undetermined cohomology", tuple(unknown))
    return MumfordCheck(Certification.CERTIFIED, "all vanishings hold")
