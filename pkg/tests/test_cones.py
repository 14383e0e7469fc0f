import json
from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from coxcones.cones import (
    ConeError,
    LatticeMap,
    RationalCone,
    apply_map,
    cone_contains,
    cone_from_rays,
    cone_subset,
    cone_union_2d,
    cross,
    dual_cone_2d,
    orbit_chambers,
    orthant,
    primitive,
)

Q = cone_from_rays([(1, 0), (0, 1)])
small = st.integers(-6, 6)
vec2 = st.tuples(small, small).filter(lambda v: v != (0, 0))


def pointed_pair():
    # two rays spanning a strictly convex 2d cone, in any order
    return st.tuples(vec2, vec2).filter(lambda p: cross(*p) != 0)


def test_from_rays_examples():
    assert Q.rays == ((1, 0), (0, 1))
    assert cone_from_rays([(1, 0), (1, 1), (0, 1)]) == Q
    assert cone_from_rays([(2, 0), (-4, 6)]).rays == ((1, 0), (-2, 3))


def test_from_rays_errors():
    with pytest.raises(ConeError):
        cone_from_rays([(0, 0)])
    with pytest.raises(ConeError):
        cone_from_rays([(1, 0), (-1, 0)])
    with pytest.raises(ConeError):
        cone_from_rays([(1, 0, 0), (0, 1)])


def test_primitive_keeps_direction():
    assert primitive((-4, 6)) == (-2, 3)
    assert primitive((0, -5)) == (0, -1)


def test_contains_examples():
    C = cone_from_rays([(1, 0), (-1, 2)])
    assert cone_contains(Q, (3, 5))
    assert cone_contains(C, (0, 1))
    assert not cone_contains(C, (-1, 1))
    with pytest.raises(ConeError):
        cone_contains(C, (1, 2, 3))


def test_open_ray_membership():
    C = cone_from_rays([(1, 0), (-1, 2)], open_rays=[(-1, 2)])
    assert not C.contains((-2, 4))
    assert C.contains((-1, 3))  # interior point near the open ray
    assert C.closure.contains((-2, 4))
    assert str(C) == "cone[(1,0), (-1,2)°]"


@given(st.lists(vec2, min_size=1, max_size=5), st.randoms())
def test_canonical_form_idempotent_and_order_free(rays, rnd):
    try:
        C = cone_from_rays(rays)
    except ConeError:
        return
    shuffled = list(rays)
    rnd.shuffle(shuffled)
    assert cone_from_rays(shuffled) == C
    assert cone_from_rays(list(C.rays)) == C
    if len(C.rays) == 2:
        assert cross(*C.rays) > 0  # counterclockwise


@given(pointed_pair(), vec2)
def test_duality_2d(pair, v):
    C = cone_from_rays(list(pair))
    D = dual_cone_2d(C)
    assert dual_cone_2d(D) == C
    inside = all(v[0] * u[0] + v[1] * u[1] >= 0 for u in D.rays)
    assert cone_contains(C, v) == inside


@given(pointed_pair(), vec2)
def test_contains_matches_exact_solve(pair, v):
    C = cone_from_rays(list(pair))
    (a, b), (c, d) = C.rays
    det = a * d - b * c
    s = Fraction(v[0] * d - v[1] * c, det)
    t = Fraction(a * v[1] - b * v[0], det)
    assert cone_contains(C, v) == (s >= 0 and t >= 0)


def test_union_examples():
    C2 = cone_from_rays([(0, 1), (-1, 2)])
    assert cone_union_2d(Q, C2) == cone_from_rays([(1, 0), (-1, 2)])
    assert cone_union_2d(Q, Q) == Q
    with pytest.raises(ConeError):
        cone_union_2d(Q, cone_from_rays([(-1, 0), (0, -1)]))
    with pytest.raises(ConeError):
        # disjoint pieces with a gap between them
        cone_union_2d(cone_from_rays([(1, 0), (2, 1)]), cone_from_rays([(0, 1), (-1, 1)]))


def test_union_keeps_open_flags():
    A = cone_from_rays([(1, 0), (0, 1)])
    B = cone_from_rays([(0, 1), (-1, 2)], open_rays=[(-1, 2)])
    U = cone_union_2d(A, B)
    assert U.open_rays == (False, True)


def test_apply_map_examples():
    ident = LatticeMap.identity(2)
    assert apply_map(ident, Q) == Q
    sigma = LatticeMap.from_images([(-1, 2), (0, 1)], pseudoautomorphism=True)
    assert apply_map(sigma, Q) == cone_from_rays([(-1, 2), (0, 1)])
    assert apply_map(sigma, apply_map(sigma, Q)) == Q
    assert sigma.is_involution()
    with pytest.raises(ConeError):
        apply_map(LatticeMap.identity(3), Q)


def test_pseudoautomorphism_needs_unit_determinant():
    with pytest.raises(ConeError):
        LatticeMap.from_images([(2, 0), (0, 1)], pseudoautomorphism=True)


mat = st.tuples(st.tuples(small, small), st.tuples(small, small))


@given(mat, mat, pointed_pair())
def test_apply_map_composes(m1, m2, pair):
    M1, M2 = LatticeMap(m1), LatticeMap(m2)
    assume(M1.det() != 0 and M2.det() != 0)
    C = cone_from_rays(list(pair))
    assert apply_map(M1, apply_map(M2, C)) == apply_map(M1 @ M2, C)


KAWAMATA = (
    LatticeMap.from_images([(-1, 2, 3), (0, 1, 0), (0, 0, 1)], True),
    LatticeMap.from_images([(1, 0, 0), (2, -1, 3), (0, 0, 1)], True),
)


def test_orbit_examples():
    seed = orthant(3)
    assert orbit_chambers(KAWAMATA, seed, 0) == [seed]
    assert len(orbit_chambers(KAWAMATA[:1], seed, 7)) == 2
    assert len(orbit_chambers(KAWAMATA, seed, 6)) > len(orbit_chambers(KAWAMATA, seed, 3))


def test_orbit_rejects_non_involutions():
    with pytest.raises(ConeError):
        orbit_chambers([LatticeMap(((1, 1), (0, 1)))], Q, 2)


def test_higher_rank_cones():
    C = cone_from_rays([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)])
    assert C == orthant(3)
    assert C.contains((1, 2, 3)) and not C.contains((-1, 2, 3))
    with pytest.raises(ConeError):
        cone_from_rays([(1, 0, 0), (-1, 0, 0), (0, 1, 0)])


def test_subset():
    assert cone_subset(Q, cone_from_rays([(1, 0), (-1, 2)]))
    assert not cone_subset(cone_from_rays([(1, 0), (-1, 2)]), Q)


def test_json_shape_and_round_trip():
    C = cone_from_rays([(1, 0), (-1, 2)], open_rays=[(-1, 2)])
    text = json.dumps(C.to_json())
    assert text == '{"rays": [[1, 0], [-1, 2]], "open_rays": [false, true]}'
    assert RationalCone.from_json(json.loads(text)) == C
