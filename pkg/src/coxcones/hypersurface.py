"""Hypersurfaces in products of projective spaces.

For ``X`` of bidegree ``(d, e)`` in ``P^1 x P^n`` the defining form is split
into slices ``f = sum_i x0^(d-i) x1^i f_i``.  From the slices we build the
companion matrix (whose determinant is ``f``), the ``(d+1) x 3`` matrix
``B`` in the y/z variables, the relations of the Cox ring, and the flip
``X --> X+`` with its inverse evaluated on points.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from typing import Sequence

import numpy as np

from .cones import LatticeMap
from .polyalg import (
    INHOMOGENEOUS,
    Poly,
    PolyMatrix,
    PolyRing,
    format_poly,
    maximal_minors,
    multidegree_of,
    parse_poly,
)


class IndeterminacyError(ValueError):
    """The point lies where the flip (or its inverse) is undefined."""


class NotOnVarietyError(ValueError):
    pass


@dataclass(frozen=True)
class AmbientProduct:
    dims: tuple[int, ...]

    def __post_init__(self):
        dims = tuple(int(n) for n in self.dims)
        if not dims or any(n < 1 for n in dims):
            raise ValueError("factor dimensions must be positive")
        object.__setattr__(self, "dims", dims)

    @property
    def rank(self) -> int:
        return len(self.dims)

    @property
    def dim(self) -> int:
        return sum(self.dims)

    def is_p1_pn(self) -> bool:
        return len(self.dims) == 2 and self.dims[0] == 1


def ambient_ring(n: int, modulus: int | None = None) -> PolyRing:
    """Coordinate ring of ``P^1 x P^n``: x0, x1 of degree (1,0), y of (0,1)."""
    names = ("x0", "x1") + tuple(f"y{j}" for j in range(n + 1))
    grading = ((1, 0),) * 2 + ((0, 1),) * (n + 1)
    return PolyRing(names, grading, modulus)


def cox_ring(d: int, e: int, n: int, modulus: int | None = None) -> PolyRing:
    """Ambient ring plus z1..zd of degree (-1, e)."""
    base = ambient_ring(n, modulus)
    names = base.names + tuple(f"z{k}" for k in range(1, d + 1))
    grading = base.grading + ((-1, e),) * d
    return PolyRing(names, grading, modulus)


def y_ring(n: int, modulus: int | None = None) -> PolyRing:
    return PolyRing(tuple(f"y{j}" for j in range(n + 1)), ((1,),) * (n + 1), modulus)


@dataclass(frozen=True)
class Hypersurface:
    ambient: AmbientProduct
    multidegree: tuple[int, ...]
    form: Poly | None = None
    slices: tuple[Poly, ...] | None = None

    def __post_init__(self):
        md = tuple(int(x) for x in self.multidegree)
        object.__setattr__(self, "multidegree", md)
        if len(md) != self.ambient.rank:
            raise ValueError("multidegree length must equal the number of factors")
        if any(x < 1 for x in md):
            raise ValueError("multidegree entries must be at least 1")
        if self.form is not None:
            deg = multidegree_of(self.form)
            if deg != md:
                raise ValueError(f"form has degree {deg}, expected {md}")
        if self.slices is not None:
            object.__setattr__(self, "slices", tuple(self.slices))
            if not self.ambient.is_p1_pn():
                raise ValueError("slices only make sense on P^1 x P^n")
            if len(self.slices) != md[0] + 1:
                raise ValueError("need d+1 slices")

    # -- constructors -------------------------------------------------------
    @classmethod
    def from_slices(cls, slices: Sequence[Poly], e: int | None = None) -> "Hypersurface":
        slices = list(slices)
        ring = slices[0].ring
        n = sum(1 for name in ring.names if name.startswith("y")) - 1
        if e is None:
            e = next(multidegree_of(s)[1] for s in slices if not s.is_zero())
        d = len(slices) - 1
        X = cls(AmbientProduct((1, n)), (d, e), slices=tuple(slices))
        f = reassemble(X.slices)
        return cls(X.ambient, X.multidegree, form=f, slices=X.slices)

    @classmethod
    def from_form(cls, f: Poly, d: int | None = None) -> "Hypersurface":
        deg = multidegree_of(f)
        if deg in (None, INHOMOGENEOUS):
            raise ValueError("form must be bihomogeneous")
        n = sum(1 for name in f.ring.names if name.startswith("y")) - 1
        if d is not None and deg[0] != d:
            raise ValueError(f"form has x-degree {deg[0]}, expected {d}")
        slices = decompose_x(f, deg[0])
        return cls(AmbientProduct((1, n)), deg, form=f, slices=tuple(slices))

    @classmethod
    def p1pn(cls, d: int, e: int, n: int) -> "Hypersurface":
        """Degree data only, no explicit form."""
        return cls(AmbientProduct((1, n)), (d, e))

    # -- properties ---------------------------------------------------------
    @property
    def dim(self) -> int:
        return self.ambient.dim - 1

    @property
    def d(self) -> int:
        return self.multidegree[0]

    @property
    def e(self) -> int:
        return self.multidegree[1]

    @property
    def n(self) -> int:
        return self.ambient.dims[1]

    @property
    def ring(self) -> PolyRing:
        if self.form is not None:
            return self.form.ring
        if self.slices is not None:
            return self.slices[0].ring
        raise ValueError("hypersurface has no explicit equation")

    def _need_slices(self) -> tuple[Poly, ...]:
        if not self.ambient.is_p1_pn():
            raise ValueError("construction requires the ambient P^1 x P^n")
        if self.slices is None:
            raise ValueError("hypersurface has no slices f_0..f_d")
        return self.slices

    def reduce_mod(self, modulus: int) -> "Hypersurface":
        ring = self.ring.with_modulus(modulus)
        slices = tuple(s.change_ring(ring) for s in self._need_slices())
        return Hypersurface.from_slices(slices, self.e)

    def to_json(self) -> dict:
        out = {"factors": list(self.ambient.dims), "multidegree": list(self.multidegree)}
        if self.form is not None:
            out["f"] = format_poly(self.form)
            if self.form.ring.modulus:
                out["modulus"] = self.form.ring.modulus
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "Hypersurface":
        ambient = AmbientProduct(tuple(obj["factors"]))
        md = tuple(obj["multidegree"])
        if obj.get("f") is None:
            return cls(ambient, md)
        if not ambient.is_p1_pn():
            raise ValueError("explicit forms are only read on P^1 x P^n")
        X = hypersurface_from_text(obj["f"], ambient.dims[1], obj.get("modulus"))
        if X.multidegree != md:
            raise ValueError(f"form has degree {X.multidegree}, expected {md}")
        return X


def reassemble(slices: Sequence[Poly]) -> Poly:
    ring = slices[0].ring
    d = len(slices) - 1
    x0, x1 = ring.var("x0"), ring.var("x1")
    f = ring.zero()
    for i, s in enumerate(slices):
        f = f + x0 ** (d - i) * x1**i * s
    return f


def decompose_x(f: Poly, d: int) -> list[Poly]:
    """Slices f_0..f_d with f = sum x0^(d-i) x1^i f_i."""
    ring = f.ring
    i0, i1 = ring.index("x0"), ring.index("x1")
    buckets: list[dict] = [dict() for _ in range(d + 1)]
    for exp, c in f.items():
        a, b = exp[i0], exp[i1]
        if a + b != d:
            raise ValueError(f"form is not of x-degree {d}")
        rest = list(exp)
        rest[i0] = rest[i1] = 0
        buckets[b][tuple(rest)] = c
    return [Poly(ring, t) for t in buckets]


def standard_slices(d: int, e: int, n: int, modulus: int | None = None) -> list[Poly]:
    """The fixture f_i = y_i^e (requires d <= n)."""
    if d > n:
        raise ValueError("f_i = y_i^e needs d <= n")
    ring = ambient_ring(n, modulus)
    return [ring.var(f"y{i}") ** e for i in range(d + 1)]


def random_slices(d: int, e: int, n: int, seed: int = 0, modulus: int | None = None,
                  density: float = 1.0, coeff_range: int = 5) -> list[Poly]:
    """Random degree-e forms in y; ``density`` < 1 gives sparse forms."""
    rng = random.Random(seed)
    ring = ambient_ring(n, modulus)
    monos = [m for m in iproduct(range(e + 1), repeat=n + 1) if sum(m) == e]
    out = []
    for _ in range(d + 1):
        terms = {}
        for m in monos:
            if rng.random() <= density:
                c = rng.randint(-coeff_range, coeff_range)
                if c:
                    terms[(0, 0) + m] = c
        if not terms:
            terms[(0, 0) + rng.choice(monos)] = 1
        out.append(Poly(ring, terms))
    return out


# ---------------------------------------------------------------------------
# matrices and relations


def companion_matrix(X: Hypersurface) -> PolyMatrix:
    """(d+1)x(d+1): x1 on the diagonal and -x0 below it in the first d
    columns, slices in the last column.  Its determinant is +f."""
    slices = X._need_slices()
    ring = slices[0].ring
    d = len(slices) - 1
    x0, x1 = ring.var("x0"), ring.var("x1")
    zero = ring.zero()
    rows = []
    for i in range(d + 1):
        row = []
        for j in range(d):
            if i == j:
                row.append(x1)
            elif i == j + 1:
                row.append(-x0)
            else:
                row.append(zero)
        row.append(slices[i])
        rows.append(tuple(row))
    return PolyMatrix(tuple(rows))


def _cox_ring_for(X: Hypersurface) -> PolyRing:
    ring = X.ring
    return cox_ring(X.d, X.e, X.n, ring.modulus)


def matrix_B(X: Hypersurface) -> PolyMatrix:
    """Rows (-z_i, z_{i+1}, f_i) with z_0 = z_{d+1} = 0."""
    slices = X._need_slices()
    R = _cox_ring_for(X)
    d = X.d
    z = [R.zero()] + [R.var(f"z{k}") for k in range(1, d + 1)] + [R.zero()]
    rows = []
    for i in range(d + 1):
        rows.append((-z[i], z[i + 1], slices[i].change_ring(R)))
    return PolyMatrix(tuple(rows))


def cox_equations(X: Hypersurface) -> list[Poly]:
    """f_0 + x1 z1, f_j - x0 z_j + x1 z_{j+1}, f_d - x0 z_d."""
    slices = X._need_slices()
    R = _cox_ring_for(X)
    d = X.d
    x0, x1 = R.var("x0"), R.var("x1")
    z = [R.zero()] + [R.var(f"z{k}") for k in range(1, d + 1)] + [R.zero()]
    return [slices[i].change_ring(R) - x0 * z[i] + x1 * z[i + 1] for i in range(d + 1)]


# ---------------------------------------------------------------------------
# points and the flip


@dataclass(frozen=True)
class ProjectivePoint:
    """Point of a product of projective spaces, first nonzero coordinate of
    each factor scaled to 1.  ``modulus=None`` means rational coordinates."""

    factors: tuple[tuple, ...]
    modulus: int | None = None

    def __post_init__(self):
        p = self.modulus
        norm = []
        for coords in self.factors:
            coords = [(int(c) % p) if p else Fraction(c) for c in coords]
            lead = next((c for c in coords if c != 0), None)
            if lead is None:
                raise ValueError("a projective factor cannot be all zero")
            inv = pow(lead, -1, p) if p else 1 / lead
            norm.append(tuple((c * inv) % p if p else c * inv for c in coords))
        object.__setattr__(self, "factors", tuple(norm))

    def coords(self) -> tuple:
        return tuple(c for f in self.factors for c in f)

    def to_json(self) -> dict:
        if self.modulus:
            return {"modulus": self.modulus, "factors": [list(map(int, f)) for f in self.factors]}
        return {"factors": [[str(c) for c in f] for f in self.factors]}

    @classmethod
    def from_json(cls, obj: dict) -> "ProjectivePoint":
        p = obj.get("modulus")
        return cls(tuple(tuple(Fraction(c) if not p else int(c) for c in f) for f in obj["factors"]), p)

    def __str__(self):
        return "×".join("(" + ":".join(str(c) for c in f) + ")" for f in self.factors)


def _field_ops(modulus):
    if modulus:
        p = modulus
        return (lambda a: a % p), (lambda a: pow(a, -1, p))
    return Fraction, (lambda a: 1 / Fraction(a))


def _slice_values(X: Hypersurface, y: Sequence, modulus) -> list:
    slices = X._need_slices()
    ring = slices[0].ring
    if ring.modulus != modulus:
        ring = ring.with_modulus(modulus)
        slices = [s.change_ring(ring) for s in slices]
    point = [0, 0] + list(y)
    return [s.evaluate(point) for s in slices]


def _binary_value(vals, x0, x1, modulus):
    d = len(vals) - 1
    total = sum(v * x0 ** (d - i) * x1**i for i, v in enumerate(vals))
    return total % modulus if modulus else total


def flip_forward(X: Hypersurface, pt: ProjectivePoint) -> ProjectivePoint:
    """Image of a point of X in P^{d-1} x P^n via the kernel of the
    companion matrix."""
    p = pt.modulus
    norm, inv = _field_ops(p)
    (x0, x1), y = pt.factors
    vals = _slice_values(X, y, p)
    if all(v == 0 for v in vals):
        raise IndeterminacyError("all slices vanish at y: flip undefined here")
    if _binary_value(vals, x0, x1, p) != 0:
        raise NotOnVarietyError("point does not lie on X")
    d = len(vals) - 1
    z = [None] * (d + 2)
    z[0] = z[d + 1] = norm(0)
    if x1 != 0:
        i1 = inv(x1)
        z[1] = norm(-vals[0] * i1)
        for j in range(1, d):
            z[j + 1] = norm((x0 * z[j] - vals[j]) * i1)
    else:
        i0 = inv(x0)
        z[d] = norm(vals[d] * i0)
        for j in range(d - 1, 0, -1):
            z[j] = norm((vals[j] + x1 * z[j + 1]) * i0)
    return ProjectivePoint((tuple(z[1:d + 1]), tuple(y)), p)


def _nullspace(rows: list[list], modulus) -> list[list]:
    """Exact right nullspace basis of a small matrix."""
    norm, inv = _field_ops(modulus)
    m = [[norm(a) for a in r] for r in rows]
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        iv = inv(m[r][c])
        m[r] = [norm(a * iv) for a in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [norm(a - f * b) for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [norm(0)] * ncols
        v[fc] = norm(1)
        for row, pc in zip(m, pivots):
            v[pc] = norm(-row[fc])
        basis.append(v)
    return basis


def flip_backward(X: Hypersurface, pt: ProjectivePoint) -> ProjectivePoint:
    """Inverse flip: (x0, x1, 1) spans the kernel of B at the point."""
    p = pt.modulus
    norm, inv = _field_ops(p)
    z, y = pt.factors
    d = len(z)
    if d != X.d:
        raise ValueError(f"point has {d} z-coordinates, expected {X.d}")
    if all(c == 0 for c in z):
        raise IndeterminacyError("all z vanish: inverse flip undefined here")
    vals = _slice_values(X, y, p)
    zz = [norm(0)] + list(z) + [norm(0)]
    rows = [[-zz[i], zz[i + 1], vals[i]] for i in range(d + 1)]
    kernel = _nullspace(rows, p)
    if len(kernel) != 1:
        raise IndeterminacyError(f"kernel of B has dimension {len(kernel)}, expected 1")
    v = kernel[0]
    if v[2] == 0:
        raise IndeterminacyError("kernel of B has vanishing last coordinate")
    s = inv(v[2])
    x0, x1 = norm(v[0] * s), norm(v[1] * s)
    if x0 == 0 and x1 == 0:
        raise IndeterminacyError("kernel of B gives x = 0")
    return ProjectivePoint(((x0, x1), tuple(y)), p)


def minors_of_B_at(X: Hypersurface, pt: ProjectivePoint) -> list:
    """Values of the 3x3 minors of B at a point of P^{d-1} x P^n.

    They vanish exactly where B has a kernel, which cuts out X+.  For d = 1
    the matrix has only two rows, there is no condition and the list is
    empty (X+ is all of P^n).
    """
    B = matrix_B(X)
    R = B.ring
    if R.modulus != pt.modulus:
        R = R.with_modulus(pt.modulus)
        B = PolyMatrix(tuple(tuple(e.change_ring(R) for e in row) for row in B.rows))
    z, y = pt.factors
    point = [0, 0] + list(y) + list(z)
    if B.shape[0] < 3:
        return []
    return [m.evaluate(point) for m in maximal_minors(B)]


def sample_points(X: Hypersurface, count: int, modulus: int, seed: int = 0,
                  max_tries: int | None = None) -> list[ProjectivePoint]:
    """Random F_p-points of X outside the indeterminacy locus.

    Picks y at random, then solves the degree-d binary form in (x0:x1)
    by evaluating it on all of P^1(F_p).
    """
    rng = random.Random(seed)
    n = X.n
    Xp = X.reduce_mod(modulus)
    t = np.arange(modulus, dtype=np.int64)
    out: list[ProjectivePoint] = []
    tries = 0
    max_tries = max_tries or 50 * count + 100
    while len(out) < count:
        tries += 1
        if tries > max_tries:
            raise RuntimeError("could not sample enough points")
        y = [rng.randrange(modulus) for _ in range(n + 1)]
        if not any(y):
            continue
        vals = _slice_values(Xp, y, modulus)
        if not any(vals):
            continue
        # roots (1:t): sum vals[i] t^i
        acc = np.zeros_like(t)
        for c in reversed(vals):
            acc = (acc * t + c) % modulus
        roots = [(1, int(r)) for r in np.nonzero(acc == 0)[0]]
        if vals[-1] == 0:
            roots.append((0, 1))
        if not roots:
            continue
        x = roots[rng.randrange(len(roots))]
        out.append(ProjectivePoint((x, tuple(y)), modulus))
    return out


def parse_point(text: str, modulus: int | None = None) -> ProjectivePoint:
    """``"1,1;1,2,0,0"`` -> point with factors (1:1) and (1:2:0:0)."""
    factors = []
    for part in text.split(";"):
        coords = [c.strip() for c in part.split(",") if c.strip()]
        if not coords:
            raise ValueError(f"empty factor in point {text!r}")
        factors.append(tuple(int(c) if modulus else Fraction(c) for c in coords))
    return ProjectivePoint(tuple(factors), modulus)


def hypersurface_from_text(f_text: str, n: int, modulus: int | None = None) -> Hypersurface:
    return Hypersurface.from_form(parse_poly(f_text, ambient_ring(n, modulus)))


# ---------------------------------------------------------------------------
# intersection theory


def _chow_product(ambient: AmbientProduct, classes: Sequence[Sequence[int]]) -> dict:
    dims = ambient.dims
    k = len(dims)
    acc = {(0,) * k: 1}
    for cls in classes:
        nxt: dict = {}
        for exp, c in acc.items():
            for i, a in enumerate(cls):
                if not a or exp[i] >= dims[i]:
                    continue
                e = list(exp)
                e[i] += 1
                e = tuple(e)
                nxt[e] = nxt.get(e, 0) + c * a
        acc = {e: c for e, c in nxt.items() if c}
    return acc


def intersection_number(X: Hypersurface, classes: Sequence[Sequence[int]]) -> int:
    """Degree of D_1 ... D_dim on X, computed in the Chow ring of the
    ambient product with [X] = sum d_i H_i."""
    if len(classes) != X.dim:
        raise ValueError(f"need exactly {X.dim} classes, got {len(classes)}")
    rho = X.ambient.rank
    for c in classes:
        if len(c) != rho:
            raise ValueError("class of wrong rank")
    prod = _chow_product(X.ambient, list(classes) + [X.multidegree])
    return prod.get(X.ambient.dims, 0)


def canonical_class(ambient: AmbientProduct, multidegree: Sequence[int]) -> tuple[int, ...]:
    return tuple(d - n - 1 for d, n in zip(multidegree, ambient.dims))


def involution_action(ambient: AmbientProduct, multidegree: Sequence[int], factor: int) -> LatticeMap:
    """Action on N^1 of the covering involution from the double cover
    forgetting a P^1 factor of degree 2 (``factor`` is 0-based)."""
    if ambient.dims[factor] != 1 or multidegree[factor] != 2:
        raise ValueError("involution needs a P^1 factor of degree 2")
    rho = ambient.rank
    images = []
    for j in range(rho):
        if j == factor:
            images.append(tuple(-1 if i == factor else multidegree[i] for i in range(rho)))
        else:
            images.append(tuple(int(i == j) for i in range(rho)))
    return LatticeMap.from_images(images, pseudoautomorphism=True)


def flip_pullback(e: int) -> LatticeMap:
    """N^1(X+) -> N^1(X) for the flip: O(1,0) |-> eH2 - H1, O(0,1) |-> H2."""
    return LatticeMap.from_images([(-1, e), (0, 1)])
