"""Exact sparse multivariate polynomials over Q or a prime field.

Polynomials live in a :class:`PolyRing`, which fixes the variable names, a
degree vector for every variable (the multigrading) and the coefficient
field.  All values are immutable.  Terms are kept in descending graded
reverse lexicographic order so iteration and printing are deterministic.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping, Sequence

INHOMOGENEOUS = "inhomogeneous"

DEFAULT_MODULUS = 10007


class RingMismatchError(ValueError):
    """Raised when two polynomials from different rings are combined."""


class BudgetExceeded(RuntimeError):
    """A Groebner computation hit its S-pair or degree cap."""


# ---------------------------------------------------------------------------
# rings and scalars


@dataclass(frozen=True)
class PolyRing:
    """Variable context: names, per-variable degree vectors, field.

    ``modulus=None`` means the rationals; otherwise a prime ``p < 2**31``.
    """

    names: tuple[str, ...]
    grading: tuple[tuple[int, ...], ...] = None
    modulus: int | None = None
    _index: dict = field(default=None, compare=False, hash=False, repr=False)

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        grading = self.grading
        if grading is None:
            grading = tuple((1,) for _ in names)
        grading = tuple(tuple(int(c) for c in g) for g in grading)
        if len(grading) != len(names):
            raise ValueError("grading must give one degree vector per variable")
        if len({len(g) for g in grading}) > 1:
            raise ValueError("degree vectors must share one length")
        object.__setattr__(self, "grading", grading)
        if self.modulus is not None:
            p = int(self.modulus)
            if p < 2 or p >= 2**31:
                raise ValueError("modulus must be a prime below 2**31")
            object.__setattr__(self, "modulus", p)
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    @property
    def nvars(self) -> int:
        return len(self.names)

    @property
    def grading_rank(self) -> int:
        return len(self.grading[0]) if self.grading else 0

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}") from None

    def coerce(self, c):
        """Bring a scalar into the coefficient field."""
        p = self.modulus
        if p is None:
            return Fraction(c)
        if isinstance(c, Fraction):
            return (c.numerator * pow(c.denominator, -1, p)) % p
        return int(c) % p

    def inv(self, c):
        if self.modulus is None:
            return 1 / Fraction(c)
        return pow(int(c), -1, self.modulus)

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.const(1)

    def const(self, c) -> "Poly":
        return Poly(self, {(0,) * self.nvars: c})

    def var(self, name: str) -> "Poly":
        i = self.index(name)
        e = [0] * self.nvars
        e[i] = 1
        return Poly(self, {tuple(e): 1})

    def gens(self) -> tuple["Poly", ...]:
        return tuple(self.var(n) for n in self.names)

    def with_modulus(self, modulus: int | None) -> "PolyRing":
        return PolyRing(self.names, self.grading, modulus)

    def monomial_degree(self, exp: Sequence[int]) -> tuple[int, ...]:
        deg = [0] * self.grading_rank
        for e, g in zip(exp, self.grading):
            if e:
                for k, gk in enumerate(g):
                    deg[k] += e * gk
        return tuple(deg)


def grevlex_key(exp: Sequence[int]) -> tuple:
    """Sort key: larger key means larger monomial in grevlex order."""
    return (sum(exp), tuple(-e for e in reversed(exp)))


# ---------------------------------------------------------------------------
# polynomials


class Poly:
    """Immutable sparse polynomial.  Use ring helpers or :func:`parse_poly`."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[tuple, object] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple, object] = {}
        n = ring.nvars
        for exp, c in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != n:
                raise ValueError("exponent vector length does not match ring")
            if any(e < 0 for e in exp):
                raise ValueError("negative exponent")
            c = ring.coerce(c)
            if exp in acc:
                c = ring.coerce(acc[exp] + c)
            acc[exp] = c
        self.ring = ring
        self._terms = _sorted_terms({e: c for e, c in acc.items() if c != 0})
        self._hash = None

    @classmethod
    def _raw(cls, ring, terms: dict) -> "Poly":
        # terms already coerced, nonzero; only sorting needed
        p = object.__new__(cls)
        p.ring = ring
        p._terms = _sorted_terms(terms)
        p._hash = None
        return p

    # -- inspection ---------------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def leading_term(self):
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        return next(iter(self._terms.items()))

    def leading_monomial(self) -> tuple:
        return self.leading_term()[0]

    def total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def coefficient(self, exp: Sequence[int]):
        return self._terms.get(tuple(exp), self.ring.coerce(0))

    def variables(self) -> set[str]:
        used = set()
        for exp in self._terms:
            used.update(self.ring.names[i] for i, e in enumerate(exp) if e)
        return used

    # -- arithmetic ---------------------------------------------------------
    def _check(self, other: "Poly"):
        if self.ring != other.ring:
            raise RingMismatchError("polynomials live in different rings")

    def _lift(self, other):
        if isinstance(other, Poly):
            self._check(other)
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._lift(other)
        return Poly._raw(self.ring, _add(self.ring, self._terms, other._terms, 1))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        return Poly._raw(self.ring, _add(self.ring, self._terms, other._terms, -1))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __neg__(self):
        ring = self.ring
        return Poly._raw(ring, {e: ring.coerce(-c) for e, c in self._terms.items()})

    def __mul__(self, other):
        other = self._lift(other)
        return Poly._raw(self.ring, _mul(self.ring, self._terms, other._terms))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> "Poly":
        ring = self.ring
        c = ring.coerce(c)
        if c == 0:
            return ring.zero()
        return Poly._raw(ring, {e: ring.coerce(v * c) for e, v in self._terms.items()})

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.names, tuple(self._terms.items())))
        return self._hash

    # -- evaluation and grading --------------------------------------------
    def evaluate(self, point: Sequence):
        """Exact value at ``point`` (one scalar per variable)."""
        ring = self.ring
        if len(point) != ring.nvars:
            raise ValueError(f"point has {len(point)} coordinates, ring has {ring.nvars}")
        pt = [ring.coerce(v) for v in point]
        p = ring.modulus
        total = ring.coerce(0)
        for exp, c in self._terms.items():
            term = c
            for v, e in zip(pt, exp):
                if e:
                    term = term * (pow(v, e, p) if p else v**e)
            total = total + term
        return ring.coerce(total)

    def substitute(self, values: Mapping[str, "Poly"]) -> "Poly":
        """Replace named variables by polynomials of the same ring."""
        ring = self.ring
        images = []
        for name in ring.names:
            img = values.get(name)
            images.append(ring.var(name) if img is None else self._lift(img))
        out = ring.zero()
        for exp, c in self._terms.items():
            term = ring.const(c)
            for img, e in zip(images, exp):
                if e:
                    term = term * img**e
            out = out + term
        return out

    def change_ring(self, ring: PolyRing) -> "Poly":
        """Map into ``ring`` by variable name; coefficients are re-coerced."""
        idx = [ring.index(n) for n in self.ring.names]
        terms = {}
        for exp, c in self._terms.items():
            new = [0] * ring.nvars
            for i, e in zip(idx, exp):
                new[i] = e
            terms[tuple(new)] = c
        return Poly(ring, terms)

    def multidegree(self):
        return multidegree_of(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def _sorted_terms(terms: dict) -> dict:
    return {e: terms[e] for e in sorted(terms, key=grevlex_key, reverse=True)}


def _add(ring, a: dict, b: dict, sign: int) -> dict:
    out = dict(a)
    for e, c in b.items():
        v = ring.coerce(out.get(e, 0) + sign * c)
        if v == 0:
            out.pop(e, None)
        else:
            out[e] = v
    return out


def _mul(ring, a: dict, b: dict) -> dict:
    out: dict = {}
    p = ring.modulus
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    if p is None:
        return {e: c for e, c in out.items() if c != 0}
    return {e: c % p for e, c in out.items() if c % p}


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def evaluate(p: Poly, point: Sequence):
    return p.evaluate(point)


def multidegree_of(p: Poly):
    """Common degree vector of all monomials, :data:`INHOMOGENEOUS`, or
    ``None`` for the zero polynomial."""
    degrees = {p.ring.monomial_degree(e) for e in p._terms}
    if not degrees:
        return None
    if len(degrees) > 1:
        return INHOMOGENEOUS
    return degrees.pop()


# ---------------------------------------------------------------------------
# text format


_TERM_RE = re.compile(r"[+-]?[^+-]+")
_FACTOR_RE = re.compile(r"\s*(?:(\d+)(?:/(\d+))?|([A-Za-z]+\d+)(?:\^(\d+))?)\s*\*?")


def parse_poly(text: str, ring: PolyRing) -> Poly:
    """Parse e.g. ``"x0^2*y1^3 - 2/3*x1^2*y0"`` into ``ring``."""
    src = text.replace(" ", "").replace("\t", "")
    if not src:
        raise ValueError("empty polynomial text")
    if src in ("0", "+0", "-0"):
        return ring.zero()
    pieces = _TERM_RE.findall(src)
    if "".join(pieces) != src:
        raise ValueError(f"cannot parse polynomial {text!r}")
    terms: dict = {}
    for piece in pieces:
        sign = -1 if piece[0] == "-" else 1
        body = piece.lstrip("+-")
        if not body:
            raise ValueError(f"dangling sign in {text!r}")
        coef = Fraction(sign)
        exp = [0] * ring.nvars
        pos = 0
        while pos < len(body):
            m = _FACTOR_RE.match(body, pos)
            if not m or m.end() == pos:
                raise ValueError(f"bad term {piece!r} in {text!r}")
            num, den, var, power = m.groups()
            if num is not None:
                coef *= Fraction(int(num), int(den) if den else 1)
            else:
                exp[ring.index(var)] += int(power) if power else 1
            pos = m.end()
        key = tuple(exp)
        terms[key] = terms.get(key, 0) + coef
    return Poly(ring, terms)


def _format_coef(c) -> str:
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return str(int(c))


def format_poly(p: Poly) -> str:
    if p.is_zero():
        return "0"
    names = p.ring.names
    out = []
    for exp, c in p._terms.items():
        factors = []
        for name, e in zip(names, exp):
            if e == 1:
                factors.append(name)
            elif e:
                factors.append(f"{name}^{e}")
        neg = isinstance(c, Fraction) and c < 0
        mag = -c if neg else c
        if factors and mag == 1:
            body = "*".join(factors)
        elif factors:
            body = _format_coef(mag) + "*" + "*".join(factors)
        else:
            body = _format_coef(mag)
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


# ---------------------------------------------------------------------------
# matrices


@dataclass(frozen=True)
class PolyMatrix:
    rows: tuple[tuple[Poly, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        if not rows or not rows[0]:
            raise ValueError("empty matrix")
        if len({len(r) for r in rows}) != 1:
            raise ValueError("ragged matrix")
        rings = {entry.ring for r in rows for entry in r}
        if len(rings) != 1:
            raise RingMismatchError("matrix entries must share one ring")
        object.__setattr__(self, "rows", rows)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    @property
    def ring(self) -> PolyRing:
        return self.rows[0][0].ring

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def swap_rows(self, i: int, j: int) -> "PolyMatrix":
        rows = list(self.rows)
        rows[i], rows[j] = rows[j], rows[i]
        return PolyMatrix(tuple(rows))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix(tuple(tuple(self.rows[i][j] for j in cols) for i in rows))

    def evaluate(self, point: Sequence) -> list[list]:
        return [[e.evaluate(point) for e in r] for r in self.rows]

    def times_vector(self, vec: Sequence[Poly]) -> tuple[Poly, ...]:
        out = []
        for r in self.rows:
            acc = self.ring.zero()
            for a, b in zip(r, vec):
                acc = acc + a * b
            out.append(acc)
        return tuple(out)


def poly_det(M: PolyMatrix) -> Poly:
    """Determinant by Laplace expansion along rows, memoized on column sets."""
    r, c = M.shape
    if r != c:
        raise ValueError(f"determinant of a non-square {r}x{c} matrix")
    if r > 10:
        raise ValueError("poly_det supports matrices up to 10x10")
    ring = M.ring
    rows = M.rows

    @lru_cache(maxsize=None)
    def minor(cols: frozenset) -> Poly:
        # determinant of the last len(cols) rows restricted to cols
        k = r - len(cols)
        if not cols:
            return ring.one()
        acc = ring.zero()
        for pos, j in enumerate(sorted(cols)):
            entry = rows[k][j]
            if entry.is_zero():
                continue
            sub = minor(cols - {j})
            if sub.is_zero():
                continue
            term = entry * sub
            acc = acc - term if pos % 2 else acc + term
        return acc

    return minor(frozenset(range(c)))


def maximal_minors(M: PolyMatrix) -> list[Poly]:
    r, c = M.shape
    k = min(r, c)
    out = []
    for rs in combinations(range(r), k):
        for cs in combinations(range(c), k):
            out.append(poly_det(M.submatrix(rs, cs)))
    return out


# ---------------------------------------------------------------------------
# Groebner bases


@dataclass(frozen=True)
class GroebnerBudget:
    max_pairs: int = 10**5
    max_degree: int = 24

    @classmethod
    def from_env(cls) -> "GroebnerBudget":
        """Read ``COXCONES_BUDGET`` as ``pairs`` or ``pairs,degree``."""
        raw = os.environ.get("COXCONES_BUDGET", "").strip()
        if not raw:
            return cls()
        parts = [s.strip() for s in raw.replace(":", ",").split(",") if s.strip()]
        try:
            values = [int(s.split("=")[-1]) for s in parts]
        except ValueError:
            raise ValueError(f"bad COXCONES_BUDGET value {raw!r}") from None
        if len(values) == 1:
            return cls(max_pairs=values[0])
        return cls(max_pairs=values[0], max_degree=values[1])


@dataclass(frozen=True)
class IdealBasis:
    generators: tuple[Poly, ...]
    order: str = "grevlex"

    def __post_init__(self):
        gens = tuple(g for g in self.generators if not g.is_zero())
        if len({g.ring for g in gens}) > 1:
            raise RingMismatchError("ideal generators must share one ring")
        object.__setattr__(self, "generators", gens)
        if self.order != "grevlex":
            raise ValueError("only grevlex is supported")

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def _monic(ring, terms: dict) -> dict:
    lead = next(iter(terms.values()))
    if lead == 1:
        return terms
    inv = ring.inv(lead)
    return {e: ring.coerce(c * inv) for e, c in terms.items()}


def _reduce_terms(ring, f: dict, basis: list[dict], full: bool = True) -> dict:
    """Remainder of ``f`` on division by monic sorted term dicts."""
    f = dict(f)
    remainder: dict = {}
    leads = [(next(iter(g)), g) for g in basis]
    while f:
        exp = max(f, key=grevlex_key)
        c = f[exp]
        for lm, g in leads:
            if _divides(lm, exp):
                shift = tuple(x - y for x, y in zip(exp, lm))
                for ge, gc in g.items():
                    e = tuple(x + y for x, y in zip(ge, shift))
                    v = ring.coerce(f.get(e, 0) - c * gc)
                    if v == 0:
                        f.pop(e, None)
                    else:
                        f[e] = v
                break
        else:
            remainder[exp] = c
            del f[exp]
            if not full:
                remainder.update(f)
                break
    return _sorted_terms(remainder)


def reduce(p: Poly, basis: IdealBasis | Sequence[Poly]) -> Poly:
    """Normal form of ``p`` with respect to ``basis`` (full reduction)."""
    ring = p.ring
    gens = [_monic(ring, dict(g._terms)) for g in basis if not g.is_zero()]
    return Poly._raw(ring, _reduce_terms(ring, p._terms, gens))


def _spoly(ring, f: dict, g: dict) -> dict:
    lf, lg = next(iter(f)), next(iter(g))
    lcm = _lcm(lf, lg)
    sf = tuple(x - y for x, y in zip(lcm, lf))
    sg = tuple(x - y for x, y in zip(lcm, lg))
    out: dict = {}
    for e, c in f.items():
        k = tuple(x + y for x, y in zip(e, sf))
        out[k] = c
    for e, c in g.items():
        k = tuple(x + y for x, y in zip(e, sg))
        v = ring.coerce(out.get(k, 0) - c)
        if v == 0:
            out.pop(k, None)
        else:
            out[k] = v
    return _sorted_terms(out)


def groebner_basis(I: IdealBasis | Sequence[Poly], budget: GroebnerBudget | None = None) -> IdealBasis:
    """Reduced grevlex Groebner basis by Buchberger's algorithm.

    Uses the coprime-leading-term and Gebauer-Moeller chain criteria and
    the normal (smallest lcm first) selection strategy.  Raises
    :class:`BudgetExceeded` instead of truncating.
    """
    if not isinstance(I, IdealBasis):
        I = IdealBasis(tuple(I))
    budget = budget or GroebnerBudget.from_env()
    gens = list(I.generators)
    if not gens:
        return IdealBasis(())
    ring = gens[0].ring
    G: list[dict] = []
    pairs: set[tuple[int, int]] = set()
    processed = 0

    def add(h: dict):
        nonlocal pairs
        h = _monic(ring, h)
        lh = next(iter(h))
        if sum(lh) > budget.max_degree:
            raise BudgetExceeded(f"polynomial degree {sum(lh)} above cap {budget.max_degree}")
        k = len(G)
        G.append(h)
        new = set()
        for i in range(k):
            if G[i] is None:
                continue
            new.add((i, k))
        # chain criterion against existing pairs
        kept = set()
        lcm_cache = {}
        for (i, j) in pairs:
            li, lj = next(iter(G[i])), next(iter(G[j]))
            lij = _lcm(li, lj)
            if (_divides(lh, lij) and _lcm(li, lh) != lij and _lcm(lj, lh) != lij):
                continue
            kept.add((i, j))
        pairs = kept
        # Gebauer-Moeller on new pairs: drop pairs whose lcm is a proper
        # multiple of another new pair's lcm
        for (i, _) in new:
            lcm_cache[i] = _lcm(next(iter(G[i])), lh)
        survivors = []
        for i in sorted(lcm_cache, key=lambda t: grevlex_key(lcm_cache[t])):
            li = lcm_cache[i]
            if any(_divides(lcm_cache[j], li) and lcm_cache[j] != li for j in survivors):
                continue
            if any(lcm_cache[j] == li for j in survivors):
                continue
            survivors.append(i)
        for i in survivors:
            pairs.add((i, k))

    for g in sorted(gens, key=lambda q: grevlex_key(q.leading_monomial())):
        r = _reduce_terms(ring, g._terms, [h for h in G if h is not None])
        if r:
            add(r)

    while pairs:
        i, j = min(pairs, key=lambda ij: (grevlex_key(_lcm(next(iter(G[ij[0]])), next(iter(G[ij[1]])))), ij))
        pairs.discard((i, j))
        processed += 1
        if processed > budget.max_pairs:
            raise BudgetExceeded(f"more than {budget.max_pairs} S-pairs processed")
        li, lj = next(iter(G[i])), next(iter(G[j]))
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue  # coprime leading monomials
        s = _spoly(ring, G[i], G[j])
        if not s:
            continue
        r = _reduce_terms(ring, s, [h for h in G if h is not None])
        if r:
            add(r)

    # minimalize then inter-reduce
    live = [h for h in G if h is not None]
    minimal = []
    for h in live:
        lh = next(iter(h))
        if any(_divides(next(iter(o)), lh) and (next(iter(o)) != lh or id(o) < id(h))
               for o in live if o is not h):
            continue
        minimal.append(h)
    reduced = []
    for idx, h in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        lead = next(iter(h))
        tail = {e: c for e, c in h.items() if e != lead}
        r = _reduce_terms(ring, tail, others)
        out = {lead: h[lead]}
        out.update(r)
        reduced.append(Poly._raw(ring, out))
    reduced.sort(key=lambda q: grevlex_key(q.leading_monomial()))
    return IdealBasis(tuple(reduced))


def ideal_contains(I: IdealBasis | Sequence[Poly], p: Poly, budget: GroebnerBudget | None = None) -> bool:
    G = groebner_basis(I, budget)
    return reduce(p, G).is_zero()


def monomial_dimension(leading: Iterable[tuple], nvars: int) -> int:
    """Krull dimension of ``k[x]/(monomials)``: size of the largest variable
    subset containing the support of no generator."""
    supports = {frozenset(i for i, e in enumerate(m) if e) for m in leading}
    supports = {s for s in supports if not any(t < s for t in supports)}
    if frozenset() in supports:
        return -1  # unit ideal
    for size in range(nvars, -1, -1):
        for subset in combinations(range(nvars), size):
            chosen = set(subset)
            if not any(s <= chosen for s in supports):
                return size
    return 0


def ideal_codim(I: IdealBasis | Sequence[Poly], ambient_var_count: int | None = None,
                budget: GroebnerBudget | None = None) -> int:
    """Codimension of the ideal, read off the leading-term staircase."""
    if not isinstance(I, IdealBasis):
        I = IdealBasis(tuple(I))
    if not I.generators:
        return 0
    nvars = ambient_var_count if ambient_var_count is not None else I.generators[0].ring.nvars
    G = groebner_basis(I, budget)
    dim = monomial_dimension((g.leading_monomial() for g in G), nvars)
    if dim < 0:
        return nvars  # unit ideal; report full codimension
    return nvars - dim


def regular_sequence_report(forms: Sequence[Poly], nvars: int | None = None,
                            budget: GroebnerBudget | None = None) -> tuple[bool, str]:
    """``(is_regular, reason)`` for homogeneous forms in a polynomial ring.

    Homogeneous forms are a regular sequence iff every prefix of length
    ``i`` cuts out codimension ``i``.  ``nvars`` restricts the count to the
    variables actually available (e.g. the y-block).
    """
    forms = list(forms)
    if not forms:
        return True, "empty"
    ring = forms[0].ring
    if nvars is None:
        used = set()
        for f in forms:
            used |= f.variables()
        nvars = len(used) if used else ring.nvars
    if len(forms) > nvars:
        return False, "too-many-forms"
    for f in forms:
        if multidegree_of(f) in (INHOMOGENEOUS, None):
            return False, "not-homogeneous"
    for i in range(1, len(forms) + 1):
        codim = ideal_codim(IdealBasis(tuple(forms[:i])), ring.nvars, budget)
        if codim != i:
            return False, f"prefix-{i}-codim-{codim}"
    return True, "regular"


def is_regular_sequence(forms: Sequence[Poly], nvars: int | None = None,
                        budget: GroebnerBudget | None = None) -> bool:
    return regular_sequence_report(forms, nvars, budget)[0]
