import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from coxcones.hypersurface import (
    AmbientProduct,
    Hypersurface,
    IndeterminacyError,
    NotOnVarietyError,
    ProjectivePoint,
    ambient_ring,
    canonical_class,
    companion_matrix,
    cox_equations,
    decompose_x,
    flip_backward,
    flip_forward,
    flip_pullback,
    intersection_number,
    involution_action,
    matrix_B,
    minors_of_B_at,
    parse_point,
    random_slices,
    reassemble,
    sample_points,
    standard_slices,
)
from coxcones.polyalg import evaluate, multidegree_of, parse_poly, poly_det

P = 10007


def fixture(d, e, n, modulus=None):
    return Hypersurface.from_slices(standard_slices(d, e, n, modulus), e)


def random_X(d, e, n, seed, modulus=None, density=1.0):
    slices = random_slices(d, e, n, seed=seed, modulus=modulus, density=density)
    if all(s.is_zero() for s in slices):
        slices[0] = standard_slices(1, e, n, modulus)[0]
    return Hypersurface.from_slices(slices, e)


# -- slices ---------------------------------------------------------------------


def test_decompose_examples():
    ring = ambient_ring(2)
    f0, f1 = parse_poly("y0^2 + y1*y2", ring), parse_poly("y2^2", ring)
    f = ring.var("x0") * f0 + ring.var("x1") * f1
    assert decompose_x(f, 1) == [f0, f1]
    assert decompose_x(parse_poly("x0^2*y0^2", ring), 2) == [parse_poly("y0^2", ring), ring.zero(), ring.zero()]
    with pytest.raises(ValueError):
        decompose_x(f, 2)


@given(st.integers(0, 10**6))
def test_reassembly(seed):
    X = random_X(2, 2, 3, seed)
    assert reassemble(decompose_x(X.form, 2)) == X.form


def test_form_degree_checked():
    ring = ambient_ring(2)
    with pytest.raises(ValueError):
        Hypersurface(AmbientProduct((1, 2)), (2, 2), form=parse_poly("x0*y0^2", ring))


# -- matrices ---------------------------------------------------------------------


def test_companion_shapes():
    X = fixture(1, 2, 3)
    A = companion_matrix(X)
    R = X.ring
    f0, f1 = X.slices
    assert A.rows == ((R.var("x1"), f0), (-R.var("x0"), f1))
    A3 = companion_matrix(fixture(2, 2, 3))
    assert A3.shape == (3, 3)
    assert [row[-1] for row in A3.rows] == list(fixture(2, 2, 3).slices)


@pytest.mark.parametrize("d", range(1, 7))
def test_det_companion_is_f(d):
    X = random_X(d, 2, 3, seed=d, density=0.5)
    assert poly_det(companion_matrix(X)) == X.form


def test_matrix_B_rows():
    X = fixture(2, 2, 3)
    B = matrix_B(X)
    R = B.ring
    z1, z2 = R.var("z1"), R.var("z2")
    f = [s.change_ring(R) for s in X.slices]
    assert B.rows == ((R.zero(), z1, f[0]), (-z1, z2, f[1]), (-z2, R.zero(), f[2]))
    X1 = fixture(1, 2, 3)
    B1 = matrix_B(X1)
    z = B1.ring.var("z1")
    g = [s.change_ring(B1.ring) for s in X1.slices]
    assert B1.rows == ((B1.ring.zero(), z, g[0]), (-z, B1.ring.zero(), g[1]))


@pytest.mark.parametrize("d", [1, 2, 3])
def test_B_times_x_gives_relations(d):
    X = random_X(d, 2, 3, seed=11)
    B = matrix_B(X)
    R = B.ring
    assert list(B.times_vector((R.var("x0"), R.var("x1"), R.one()))) == cox_equations(X)


def test_cox_equation_examples():
    X = fixture(1, 3, 3)
    R = cox_equations(X)[0].ring
    f0, f1 = (s.change_ring(R) for s in X.slices)
    x0, x1, z1 = R.var("x0"), R.var("x1"), R.var("z1")
    assert cox_equations(X) == [f0 + x1 * z1, f1 - x0 * z1]
    X2 = fixture(2, 2, 3)
    rel = cox_equations(X2)
    R2 = rel[0].ring
    assert rel[1] == X2.slices[1].change_ring(R2) - R2.var("x0") * R2.var("z1") + R2.var("x1") * R2.var("z2")
    for e in (1, 2, 3):
        for g in cox_equations(fixture(3, e, 3)):
            assert multidegree_of(g) == (0, e)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_recurrence_solves_relations_symbolically(d):
    # z from the forward recurrence kills every relation but the last; the
    # last one vanishes exactly on f = 0
    x0, x1 = sympy.symbols("x0 x1")
    fs = sympy.symbols(f"f0:{d + 1}")
    z = [None, -fs[0] / x1]
    for j in range(1, d):
        z.append((x0 * z[j] - fs[j]) / x1)
    f = sum(x0 ** (d - i) * x1**i * fs[i] for i in range(d + 1))
    rels = [fs[0] + x1 * z[1]] + [fs[j] - x0 * z[j] + x1 * z[j + 1] for j in range(1, d)]
    assert all(sympy.simplify(r) == 0 for r in rels)
    last = fs[d] - x0 * z[d]
    assert sympy.simplify(last * x1**d - f) == 0


def test_flip_pullback_unimodular():
    for e in (1, 2, 5):
        M = flip_pullback(e)
        assert abs(M.det()) == 1
        assert M((1, 0)) == (-1, e) and M((0, 1)) == (0, 1)


# -- flip on points ------------------------------------------------------------------


def test_flip_example_over_F5():
    X = fixture(2, 2, 3, 5)
    pt = parse_point("1,1;1,2,0,0", 5)
    assert evaluate(X.form, pt.coords()) == 0
    img = flip_forward(X, pt)
    assert img == parse_point("1,0;1,2,0,0", 5)
    assert flip_backward(X, img) == pt
    assert all(m == 0 for m in minors_of_B_at(X, img))


def test_flip_errors():
    X = fixture(2, 2, 3, 5)
    with pytest.raises(IndeterminacyError):
        flip_forward(X, parse_point("1,1;0,0,0,1", 5))
    with pytest.raises(NotOnVarietyError):
        flip_forward(X, parse_point("1,1;1,1,0,0", 5))
    # a point of X+ with every z_i = 0 cannot even be formed
    with pytest.raises(ValueError):
        ProjectivePoint(((0, 0), (1, 2, 0, 0)), 5)


def test_flip_at_x1_zero_uses_backward_recurrence():
    X = fixture(2, 2, 3, P)
    # x = (1:0) forces f_0(y) = 0
    pt = parse_point("1,0;0,1,1,0", P)
    img = flip_forward(X, pt)
    assert flip_backward(X, img) == pt


@pytest.mark.parametrize("d,n", [(d, n) for n in range(2, 5) for d in range(1, n + 1)])
def test_round_trip_grid(d, n):
    X = random_X(d, 2, n, seed=d * 10 + n, modulus=P)
    for pt in sample_points(X, 20, P, seed=1):
        img = flip_forward(X, pt)
        assert all(m == 0 for m in minors_of_B_at(X, img))
        assert flip_backward(X, img) == pt


def test_sampling_is_deterministic_and_on_X():
    X = fixture(3, 2, 4, P)
    a = sample_points(X, 10, P, seed=5)
    assert a == sample_points(X, 10, P, seed=5)
    assert a != sample_points(X, 10, P, seed=6)
    for pt in a:
        assert evaluate(X.form.change_ring(X.ring.with_modulus(P)), pt.coords()) == 0


def test_point_normalization_and_json():
    pt = ProjectivePoint(((2, 4), (0, 3, 6)), 7)
    assert pt.factors == ((1, 2), (0, 1, 2))
    assert ProjectivePoint.from_json(pt.to_json()) == pt
    q = parse_point("2,4;1/2,1")
    assert q.factors == ((1, 2), (1, 2))
    assert ProjectivePoint.from_json(q.to_json()) == q
    with pytest.raises(ValueError):
        ProjectivePoint(((0, 0), (1,)), 7)


def test_hypersurface_json():
    X = random_X(2, 2, 3, seed=4)
    obj = X.to_json()
    assert obj["factors"] == [1, 3] and obj["multidegree"] == [2, 2]
    assert Hypersurface.from_json(obj) == X


# -- intersection theory ---------------------------------------------------------------


def top_power_oracle(a, b, d, e, n):
    # (aH1 + bH2)^n (dH1 + eH2) on P^1 x P^n: coefficient of H1 H2^n
    return b**n * d + n * a * b ** (n - 1) * e if n >= 1 else 0


@settings(max_examples=100)
@given(st.integers(-6, 6), st.integers(-6, 6), st.integers(1, 5), st.integers(1, 4), st.integers(1, 4))
def test_top_power_formula(a, b, d, e, n):
    X = Hypersurface.p1pn(d, e, n)
    value = intersection_number(X, [(a, b)] * n)
    assert value == top_power_oracle(a, b, d, e, n)
    assert value == b ** (n - 1) * (b * d + a * e * n)


def test_intersection_examples():
    X = Hypersurface.p1pn(4, 2, 3)
    assert intersection_number(X, [(-4, 6)] * 3) == 0
    assert intersection_number(X, [(1, 0), (1, 0), (3, 7)]) == 0
    assert intersection_number(X, [(0, 1)] * 3) == 4
    assert intersection_number(X, [(1, 0), (0, 1), (0, 1)]) == 2
    with pytest.raises(ValueError):
        intersection_number(X, [(0, 1)] * 2)


@given(st.lists(st.tuples(st.integers(-4, 4), st.integers(-4, 4)), min_size=4, max_size=4), st.randoms())
def test_intersection_symmetric_and_multilinear(cls, rnd):
    X = Hypersurface.p1pn(3, 2, 3)
    base = intersection_number(X, cls[:3])
    perm = cls[:3]
    rnd.shuffle(perm)
    assert intersection_number(X, perm) == base
    summed = tuple(x + y for x, y in zip(cls[0], cls[3]))
    assert intersection_number(X, [summed] + cls[1:3]) == base + intersection_number(X, [cls[3]] + cls[1:3])


def test_intersection_three_factors():
    # (2,2,3) in P^1 x P^1 x P^2: H1 H2 H3 = 3, H3^3 = 0 ... via [X] = 2H1+2H2+3H3
    X = Hypersurface(AmbientProduct((1, 1, 2)), (2, 2, 3))
    assert intersection_number(X, [(1, 0, 0), (0, 1, 0), (0, 0, 1)]) == 3
    assert intersection_number(X, [(0, 0, 1)] * 3) == 0
    assert intersection_number(X, [(1, 0, 0), (0, 0, 1), (0, 0, 1)]) == 2


def test_canonical_class_examples():
    for n in range(2, 6):
        assert canonical_class(AmbientProduct((1, n)), (2, n + 1)) == (0, 0)
        assert canonical_class(AmbientProduct((1, n)), (5, 2)) == (3, 1 - n)
    assert canonical_class(AmbientProduct((1, 1, 2)), (2, 2, 3)) == (0, 0, 0)


def test_involution_examples():
    amb = AmbientProduct((1, 3))
    s = involution_action(amb, (2, 3), 0)
    assert s((1, 0)) == (-1, 3) and s((0, 1)) == (0, 1)
    assert s.is_involution() and abs(s.det()) == 1
    k = involution_action(AmbientProduct((1, 1, 2)), (2, 2, 3), 0)
    assert k((1, 0, 0)) == (-1, 2, 3)
    with pytest.raises(ValueError):
        involution_action(amb, (3, 3), 0)


@given(st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5), st.integers(1, 4))
def test_involution_preserves_form_on_surfaces(a, b, c, dd, e):
    # on the surfaces (2,e) in P^1 x P^2 the involution is biregular
    X = Hypersurface.p1pn(2, e, 2)
    s = involution_action(X.ambient, (2, e), 0)
    assert intersection_number(X, [s((a, b)), s((c, dd))]) == intersection_number(X, [(a, b), (c, dd)])


def test_involution_changes_form_in_higher_dimension():
    # for n >= 3 the involution is only a pseudoautomorphism: top powers move
    X = Hypersurface.p1pn(2, 2, 3)
    s = involution_action(X.ambient, (2, 2), 0)
    assert intersection_number(X, [(1, 0)] * 3) == 0
    assert intersection_number(X, [s((1, 0))] * 3) != 0
