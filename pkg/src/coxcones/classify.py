"""Birational invariants of hypersurfaces in products of projective spaces.

:func:`classify` maps an ambient product, a multidegree and a generality
level to a :class:`ClassificationReport`: Mori dream space status, the
effective / movable / nef cones in the basis H_1..H_rho, the chambers of
the movable cone, and the Cox ring presentation when one is known.

Case tags
---------
``mxn-both-ge-2``           both factors of dimension >= 2
``p1pn-e1-bundle``          P^1 x P^n, e = 1: projective bundle over P^1
``p1pn-d1-blowup``          d = 1: blow-up of P^n
``p1pn-flip``               1 < d < n: one flip to X+
``p1pn-d-eq-n-contraction`` d = n: eH_2 - H_1 contracts to P^(n-1)
``p1pn-non-mds``            d >= n+1, e >= 2: non-closed effective cone
``p1p2-d1-blowup``          surfaces, d = 1: blow-up of P^2 in e^2 points
``p1p2-d2-double-cover``    surfaces, d = 2: double cover of P^2
``p1p2-e1-hirzebruch``      surfaces, e = 1
``p1p2-non-closed-eff``     surfaces, d >= 3 and e >= 2
``cy-m0`` / ``cy-m1`` / ``cy-m-ge-2``
                            Calabi-Yau with m factors P^1, other factors >= 2
``unclassified``            nothing applies; only bounds are reported
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from typing import Sequence

from .cohomology import CoxPresentation
from .cones import (
    ConeError,
    LatticeMap,
    RationalCone,
    apply_map,
    cone_from_rays,
    cone_union_2d,
    orthant,
)
from .hypersurface import AmbientProduct, Hypersurface, canonical_class, intersection_number, involution_action


class Level(enum.IntEnum):
    ARBITRARY = 0
    GENERAL = 1
    VERY_GENERAL = 2

    @classmethod
    def parse(cls, value) -> "Level":
        if isinstance(value, Level):
            return value
        key = str(value).strip().lower().replace("-", "_")
        try:
            return cls[key.upper()]
        except KeyError:
            raise ValueError(f"unknown generality level {value!r}") from None

    @property
    def label(self) -> str:
        return self.name.lower()


class MDSStatus(str, enum.Enum):
    YES = "yes"
    NO = "no"
    CONDITIONAL = "conditional"
    OUT_OF_CLASSIFICATION = "out_of_classification"


class ClassificationError(ValueError):
    pass


@dataclass(frozen=True)
class Chamber:
    cone: RationalCone
    label: str


@dataclass(frozen=True)
class ClassificationReport:
    ambient: tuple[int, ...]
    multidegree: tuple[int, ...]
    level: Level
    case_tag: str
    mds_status: MDSStatus
    required_level: Level
    picard_rank: int | None
    canonical: tuple[int, ...]
    eff: RationalCone | None = None
    mov: RationalCone | None = None
    nef: RationalCone | None = None
    mov_chambers: tuple[Chamber, ...] = ()
    cox: CoxPresentation | None = None
    eff_lower_bound: RationalCone | None = None
    notes: tuple[str, ...] = ()

    @property
    def is_mds(self) -> bool:
        return self.mds_status is MDSStatus.YES

    @property
    def calabi_yau(self) -> bool:
        return all(c == 0 for c in self.canonical)

    def to_json(self) -> dict:
        def cone(C):
            return None if C is None else C.to_json()

        return {
            "schema": 1,
            "ambient": list(self.ambient),
            "multidegree": list(self.multidegree),
            "level": self.level.label,
            "case_tag": self.case_tag,
            "mds": self.mds_status.value,
            "required_level": self.required_level.label,
            "picard_rank": self.picard_rank,
            "canonical": list(self.canonical),
            "calabi_yau": self.calabi_yau,
            "eff": cone(self.eff),
            "mov": cone(self.mov),
            "nef": cone(self.nef),
            "mov_chambers": [{"cone": c.cone.to_json(), "label": c.label} for c in self.mov_chambers],
            "cox": None if self.cox is None else self.cox.to_json(),
            "eff_lower_bound": cone(self.eff_lower_bound),
            "notes": list(self.notes),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "ClassificationReport":
        def cone(o):
            return None if o is None else RationalCone.from_json(o)

        cox = obj.get("cox")
        if cox is not None:
            cox = CoxPresentation.from_json(cox)
            if obj["cox"].get("relations"):
                # relation polynomials travel as text only
                cox = replace(cox, relations=tuple(obj["cox"]["relations"]))
        return cls(
            ambient=tuple(obj["ambient"]),
            multidegree=tuple(obj["multidegree"]),
            level=Level.parse(obj["level"]),
            case_tag=obj["case_tag"],
            mds_status=MDSStatus(obj["mds"]),
            required_level=Level.parse(obj["required_level"]),
            picard_rank=obj["picard_rank"],
            canonical=tuple(obj["canonical"]),
            eff=cone(obj["eff"]),
            mov=cone(obj["mov"]),
            nef=cone(obj["nef"]),
            mov_chambers=tuple(Chamber(RationalCone.from_json(c["cone"]), c["label"])
                               for c in obj["mov_chambers"]),
            cox=cox,
            eff_lower_bound=cone(obj.get("eff_lower_bound")),
            notes=tuple(obj["notes"]),
        )


# ---------------------------------------------------------------------------
# helpers


H1 = (1, 0)
H2 = (0, 1)
QUADRANT = cone_from_rays([H1, H2])


def _cone(*rays, open_rays=()):
    return cone_from_rays(list(rays), open_rays)


def subcone_lower_bound(ambient, multidegree) -> RationalCone:
    """Open cone spanned by H_1 and ne H_2 - d H_1; it lies in Eff(X) for
    every hypersurface of bidegree (d, e) in P^1 x P^n."""
    ambient = _ambient(ambient)
    if not ambient.is_p1_pn():
        raise ClassificationError("the subcone bound is only available on P^1 x P^n")
    d, e = multidegree
    n = ambient.dims[1]
    top = (-d, n * e)
    return _cone(H1, top, open_rays=(H1, top))


def _ambient(a) -> AmbientProduct:
    return a if isinstance(a, AmbientProduct) else AmbientProduct(tuple(a))


def _finish(base: dict, level: Level) -> ClassificationReport:
    """Apply the generality rule: conclusions above the given level are
    downgraded (a yes becomes conditional, a no becomes unclassified)."""
    required = base["required_level"]
    status = base["mds_status"]
    notes = list(base.get("notes", ()))
    if level < required:
        notes.append(f"verdict needs a {required.label} member; given level is {level.label}")
        if status is MDSStatus.YES:
            status = MDSStatus.CONDITIONAL
        elif status is MDSStatus.NO:
            status = MDSStatus.OUT_OF_CLASSIFICATION
            # keep only statements valid for every member
            base = dict(base, eff=None, mov=None, nef=None, mov_chambers=(), cox=None)
    base = dict(base, mds_status=status, notes=tuple(notes), level=level)
    return ClassificationReport(**base)


# ---------------------------------------------------------------------------
# case handlers; all work in the ordering where P^1 factors come first


def _two_big_factors(dims, md):
    m, n = dims
    d, e = md
    return dict(
        case_tag="mxn-both-ge-2",
        mds_status=MDSStatus.YES,
        required_level=Level.GENERAL,
        picard_rank=2,
        eff=QUADRANT, mov=QUADRANT, nef=QUADRANT,
        mov_chambers=(Chamber(QUADRANT, "X"),),
        cox=CoxPresentation.hypersurface(dims, md),
        notes=("Cox ring is the ambient Cox ring modulo f",),
    )


def _balanced_split(d: int, n: int) -> tuple[int, int, int]:
    """Splitting type of the rank-n bundle for e = 1: (a_min, a_max, #a_max)."""
    lo, r = divmod(d, n)
    return lo, lo + (1 if r else 0), r if r else n


def _p1pn_bundle(n, d, e):
    lo, hi, count_hi = _balanced_split(d, n)
    nef = _cone(H1, (-lo, 1))
    eff = _cone(H1, (-hi, 1))
    chambers = [Chamber(nef, "X")]
    if lo == hi:
        mov = nef
    elif count_hi >= 2:
        # the maximal-slope section class has base locus of codim >= 2
        mov = eff
        chambers.append(Chamber(_cone((-lo, 1), (-hi, 1)), "X+"))
    else:
        mov = nef
    n_lo = n - count_hi if lo != hi else 0
    notes = [f"kernel bundle splits as {n_lo} x O(-{lo}) + {n - n_lo} x O(-{hi})"]
    cox = CoxPresentation.p1pn(d, e, n) if d <= n else None
    return dict(
        case_tag="p1pn-e1-bundle",
        mds_status=MDSStatus.YES,
        required_level=Level.GENERAL,
        picard_rank=2,
        eff=eff, mov=mov, nef=nef,
        mov_chambers=tuple(chambers),
        cox=cox,
        notes=tuple(notes),
    )


def _rational_surface_rank(d, e):
    """Picard rank 10 - K^2 of a rational surface of bidegree (d, e) in P^1 x P^2."""
    X = Hypersurface(AmbientProduct((1, 2)), (d, e))
    K = canonical_class(X.ambient, (d, e))
    return 10 - intersection_number(X, [K, K])


def _p1pn(n, d, e):
    if e == 1:
        return _p1pn_bundle(n, d, e)
    E = (-1, e)
    if d == 1:
        eff = _cone(H1, E)
        return dict(
            case_tag="p1pn-d1-blowup",
            mds_status=MDSStatus.YES,
            required_level=Level.GENERAL,
            picard_rank=2,
            eff=eff, mov=QUADRANT, nef=QUADRANT,
            mov_chambers=(Chamber(QUADRANT, "X"),),
            cox=CoxPresentation.p1pn(d, e, n),
            notes=("second projection blows up the codim-2 locus f_0 = f_1 = 0; "
                   "exceptional divisor has class eH_2 - H_1",),
        )
    if d < n:
        eff = _cone(H1, E)
        return dict(
            case_tag="p1pn-flip",
            mds_status=MDSStatus.YES,
            required_level=Level.GENERAL,
            picard_rank=2,
            eff=eff, mov=eff, nef=QUADRANT,
            mov_chambers=(Chamber(QUADRANT, "X"), Chamber(_cone(H2, E), "X+")),
            cox=CoxPresentation.p1pn(d, e, n),
            notes=("small modification X --> X+ with pullbacks eH_2 - H_1 and H_2",),
        )
    if d == n:
        C = _cone(H1, E)
        return dict(
            case_tag="p1pn-d-eq-n-contraction",
            mds_status=MDSStatus.YES,
            required_level=Level.GENERAL,
            picard_rank=2,
            eff=C, mov=C, nef=C,
            mov_chambers=(Chamber(C, "X"),),
            cox=CoxPresentation.p1pn(d, e, n),
            notes=("eH_2 - H_1 is base point free and contracts X to P^(n-1)",),
        )
    top = (-d, n * e)
    nef = _cone(H1, top)
    return dict(
        case_tag="p1pn-non-mds",
        mds_status=MDSStatus.NO,
        required_level=Level.VERY_GENERAL,
        picard_rank=2,
        eff=_cone(H1, top, open_rays=(top,)),
        mov=_cone(H1, top, open_rays=(top,)),
        nef=nef,
        mov_chambers=(),
        cox=None,
        notes=("ne H_2 - d H_1 is nef with self-intersection 0 and no effective multiple; "
               "Eff and Mov are not closed",),
    )


def _p1p2(d, e):
    n = 2
    if e == 1:
        out = _p1pn_bundle(n, d, e)
        # on a surface every movable class is nef
        out.update(case_tag="p1p2-e1-hirzebruch", mov=out["nef"],
                   mov_chambers=(Chamber(out["nef"], "X"),), cox=None,
                   required_level=Level.VERY_GENERAL,
                   notes=out["notes"] + ("X is a Hirzebruch surface",))
        return out
    if d == 1:
        rank = _rational_surface_rank(d, e)
        yes = e <= 2
        return dict(
            case_tag="p1p2-d1-blowup",
            mds_status=MDSStatus.YES if yes else MDSStatus.NO,
            required_level=Level.VERY_GENERAL,
            picard_rank=rank,
            notes=(f"blow-up of P^2 in the {e * e} base points of a pencil of degree-{e} curves",
                   "del Pezzo surface" if yes else "infinitely many (-1)-curves; Eff is not polyhedral",
                   "Picard rank exceeds 2: cones are not reported in the H_1, H_2 basis"),
        )
    if d == 2:
        if e == 2:
            return dict(
                case_tag="p1p2-d2-double-cover",
                mds_status=MDSStatus.YES,
                required_level=Level.VERY_GENERAL,
                picard_rank=_rational_surface_rank(d, e),
                notes=("double cover of P^2 branched along a quartic: del Pezzo surface of degree 2",
                       "Picard rank exceeds 2: cones are not reported in the H_1, H_2 basis"),
            )
        C = _cone(H1, (-1, e))
        return dict(
            case_tag="p1p2-d2-double-cover",
            mds_status=MDSStatus.YES,
            required_level=Level.VERY_GENERAL,
            picard_rank=2,
            eff=C, mov=C, nef=C,
            mov_chambers=(Chamber(C, "X"),),
            cox=CoxPresentation.p1pn(d, e, n),
            notes=(f"double cover of P^2 branched along a curve of degree {2 * e}",),
        )
    # d >= 3, e >= 2
    if e == 2:
        return dict(
            case_tag="p1p2-non-closed-eff",
            mds_status=MDSStatus.NO,
            required_level=Level.VERY_GENERAL,
            picard_rank=_rational_surface_rank(d, e),
            notes=("conic bundle over P^1 with 3d singular fibres; Picard rank from Noether's formula",
                   "effective cone is not closed",
                   "Picard rank exceeds 2: cones are not reported in the H_1, H_2 basis"),
        )
    top = (-d, n * e)
    return dict(
        case_tag="p1p2-non-closed-eff",
        mds_status=MDSStatus.NO,
        required_level=Level.VERY_GENERAL,
        picard_rank=2,
        eff=_cone(H1, top, open_rays=(top,)),
        mov=_cone(H1, top, open_rays=(top,)),
        nef=_cone(H1, top),
        notes=("boundary class of Nef is strictly nef but not semiample; effective cone is not closed",),
    )


def _calabi_yau(dims, md):
    rho = len(dims)
    m = sum(1 for n in dims if n == 1)
    nef = orthant(rho)
    if m == 0:
        return dict(
            case_tag="cy-m0",
            mds_status=MDSStatus.YES,
            required_level=Level.GENERAL,
            picard_rank=rho,
            eff=nef, mov=nef, nef=nef,
            mov_chambers=(Chamber(nef, "X"),),
            cox=CoxPresentation.hypersurface(dims, md),
        )
    if m == 1:
        sigma = involution_action(AmbientProduct(dims), md, 0)
        image = apply_map(sigma, nef)
        eff = cone_from_rays(list(nef.rays) + list(image.rays))
        return dict(
            case_tag="cy-m1",
            mds_status=MDSStatus.YES,
            required_level=Level.GENERAL,
            picard_rank=rho,
            eff=eff, mov=eff, nef=nef,
            mov_chambers=(Chamber(nef, "X"), Chamber(image, "sigma*X")),
            notes=("covering involution of the double cover forgetting the P^1 factor",),
        )
    return dict(
        case_tag="cy-m-ge-2",
        mds_status=MDSStatus.NO,
        required_level=Level.GENERAL,
        picard_rank=rho,
        nef=nef,
        notes=(f"{m} covering involutions generate an infinite group of pseudoautomorphism actions",
               "movable cone is not rational polyhedral"),
    )


def _unclassified(dims, md, reason):
    return dict(
        case_tag="unclassified",
        mds_status=MDSStatus.OUT_OF_CLASSIFICATION,
        required_level=Level.ARBITRARY,
        picard_rank=None,
        notes=(reason,),
    )


# ---------------------------------------------------------------------------


def classify(ambient, multidegree: Sequence[int], level="general") -> ClassificationReport:
    ambient = _ambient(ambient)
    md = tuple(int(x) for x in multidegree)
    level = Level.parse(level)
    if len(md) != ambient.rank:
        raise ClassificationError("multidegree length must equal the number of factors")
    if any(x < 1 for x in md):
        raise ClassificationError("multidegree entries must be at least 1")
    # P^1 factors first; results are permuted back at the end
    perm = sorted(range(ambient.rank), key=lambda i: (ambient.dims[i] != 1, i))
    dims = tuple(ambient.dims[i] for i in perm)
    pmd = tuple(md[i] for i in perm)
    base = _dispatch(dims, pmd)
    canon = canonical_class(AmbientProduct(dims), pmd)
    base["canonical"] = canon
    base["ambient"] = dims
    base["multidegree"] = pmd
    if dims[0] == 1 and len(dims) == 2 and dims[1] >= 2:
        base["eff_lower_bound"] = subcone_lower_bound(AmbientProduct(dims), pmd)
    report = _finish(base, level)
    if perm != sorted(perm):
        report = _permute(report, perm)
    return report


def _dispatch(dims, md) -> dict:
    dim_x = sum(dims) - 1
    if len(dims) == 1:
        return _unclassified(dims, md, "hypersurface in a single projective space")
    if len(dims) == 2:
        a, b = dims
        if a >= 2 and b >= 2:
            return _two_big_factors(dims, md)
        if a == 1 and b >= 3:
            return _p1pn(b, *md)
        if a == 1 and b == 2:
            return _p1p2(*md)
        return _unclassified(dims, md, "curve in P^1 x P^1")
    cy = all(d == n + 1 for d, n in zip(md, dims))
    if cy and dim_x >= 3:
        return _calabi_yau(dims, md)
    return _unclassified(dims, md, "not Calabi-Yau in three or more factors")


def _permute(report: ClassificationReport, perm: list[int]) -> ClassificationReport:
    """Undo the P^1-first reordering: coordinate k of the internal basis is
    factor perm[k] of the caller's basis."""
    rho = len(perm)

    def vec(v):
        out = [0] * rho
        for k, i in enumerate(perm):
            out[i] = v[k]
        return tuple(out)

    def cone(C):
        if C is None:
            return None
        return cone_from_rays([vec(r) for r in C.rays], [vec(r) for r, f in zip(C.rays, C.open_rays) if f])

    return replace(
        report,
        ambient=vec(report.ambient),
        multidegree=vec(report.multidegree),
        canonical=vec(report.canonical),
        eff=cone(report.eff), mov=cone(report.mov), nef=cone(report.nef),
        eff_lower_bound=cone(report.eff_lower_bound),
        mov_chambers=tuple(Chamber(cone(c.cone), c.label) for c in report.mov_chambers),
        cox=None if report.cox is None else replace(
            report.cox,
            blocks=tuple((p, c, vec(deg)) for p, c, deg in report.cox.blocks),
            relation_degrees=tuple(vec(r) for r in report.cox.relation_degrees)),
    )


def mov_chamber_decomposition(report: ClassificationReport) -> list[tuple[RationalCone, str]]:
    """Nef chambers of the small modifications covering Mov(X)."""
    if report.mov is None or not report.mov_chambers:
        raise ClassificationError(f"no chamber decomposition known for case {report.case_tag}")
    return [(c.cone, c.label) for c in report.mov_chambers]


def cox_descriptor(report: ClassificationReport) -> CoxPresentation | None:
    if report.mds_status in (MDSStatus.NO, MDSStatus.OUT_OF_CLASSIFICATION):
        raise ClassificationError("no Cox presentation: X is not known to be a Mori dream space")
    return report.cox


def chambers_union(chambers: Sequence[tuple[RationalCone, str]]) -> RationalCone:
    """Union of rank-2 chambers, folded left to right."""
    cones = [c for c, _ in chambers]
    out = cones[0]
    for C in cones[1:]:
        out = cone_union_2d(out, C)
    return out


def mds_bidegree_region(n: int, d_max: int, e_max: int, level="very_general") -> dict:
    """Status of every bidegree 1 <= d <= d_max, 1 <= e <= e_max on P^1 x P^n."""
    if n < 3:
        raise ClassificationError("region scan needs n >= 3")
    out = {}
    for d in range(1, d_max + 1):
        for e in range(1, e_max + 1):
            out[(d, e)] = classify((1, n), (d, e), level).mds_status
    return out


def kawamata_reflections() -> tuple[LatticeMap, LatticeMap]:
    """The two covering involutions for tridegree (2,2,3) on P^1 x P^1 x P^2."""
    amb = AmbientProduct((1, 1, 2))
    md = (2, 2, 3)
    return involution_action(amb, md, 0), involution_action(amb, md, 1)


__all__ = [
    "Chamber", "ClassificationError", "ClassificationReport", "ConeError", "Level", "MDSStatus",
    "chambers_union", "classify", "cox_descriptor", "kawamata_reflections", "mds_bidegree_region",
    "mov_chamber_decomposition", "subcone_lower_bound",
]
