import ast
import inspect
import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import unit_spinors, vectors
from oracles import generic_twist, sign_dist
from swingtwist import (
    AntipodalVectors,
    LengthMismatch,
    NonUnitSpinor,
    NotDecomposable,
    Representation,
    Spinor,
    SwingTwist,
    Vector3,
    ZeroVector,
    canonical,
    decompose,
    direct_rotation,
    dual,
    exp_axis_twist,
    invariant_twist,
    is_decomposable,
    rotate,
    rotation_set,
    twist_projection,
    twist_scalars,
)
from swingtwist import decomposition

R2 = math.sqrt(2.0) / 2.0
E1 = Vector3(1.0, 0.0, 0.0)
E2 = Vector3(0.0, 1.0, 0.0)
E3 = Vector3(0.0, 0.0, 1.0)
SAT, TAS = Representation.SAT, Representation.TAS


def close(x, y, tol=1e-12):
    return max(abs(a - b) for a, b in zip(x, y)) <= tol


angles = st.floats(min_value=-20.0, max_value=20.0, allow_nan=False)


# --- invariant twist -------------------------------------------------------

def test_invariant_twist_examples():
    assert invariant_twist(E3, 0.0) == Spinor(1.0)
    s = invariant_twist(E3, math.pi / 2)
    assert close(s, (0, 1, 0, 0), 1e-16)
    assert close(rotate(s, E3), E3, 1e-15)
    v = Vector3(1.0, 1.0, 1.0)
    assert (rotate(invariant_twist(v, 1.0), v) - v).norm() <= 1e-12


@given(vectors(), angles)
def test_invariant_twist_fixes_vector(v, alpha):
    s = invariant_twist(v, alpha)
    assert (rotate(s, v) - v).norm() <= 1e-12 * v.norm()
    assert close(s, exp_axis_twist(v, alpha % (2 * math.pi)), 1e-15)


def test_invariant_twist_reduces_angle():
    assert close(invariant_twist(E1, 1.0 + 4 * math.pi), invariant_twist(E1, 1.0), 1e-14)
    assert close(invariant_twist(E1, -1.0), invariant_twist(E1, 2 * math.pi - 1.0), 1e-15)


def test_invariant_twist_zero_vector():
    with pytest.raises(ZeroVector):
        invariant_twist(Vector3(0, 0, 0), 1.0)


# --- direct rotation -------------------------------------------------------

def test_direct_rotation_examples():
    v = Vector3(0.3, -2.0, 1.1)
    assert close(direct_rotation(v, v), (1, 0, 0, 0), 1e-15)
    s = direct_rotation(E1, E2)
    assert close(s, (R2, -R2, 0, 0), 1e-15)
    assert close(rotate(s, E1), E2, 1e-15)
    with pytest.raises(AntipodalVectors):
        direct_rotation(E1, -E1)


def test_direct_rotation_errors():
    with pytest.raises(ZeroVector):
        direct_rotation(Vector3(0, 0, 0), E1)
    with pytest.raises(LengthMismatch):
        direct_rotation(E1, Vector3(0, 2, 0))


@given(vectors(), vectors())
def test_direct_rotation_maps_v_onto_w(v, w_dir):
    w = w_dir * (v.norm() / w_dir.norm())
    assume((v + w).norm() > 1e-6 * v.norm())
    s = direct_rotation(v, w)
    assert s.a >= 0.0
    assert (rotate(s, v) - w).norm() <= 1e-11 * v.norm()
    # the shortest arc has no component about v
    assert abs(dual(s).dot(v)) <= 1e-12 * v.norm()


# --- rotation set ----------------------------------------------------------

def test_rotation_set_examples():
    v = Vector3(0.2, 0.5, -0.3)
    assert close(rotation_set(v, v, 0.8, SAT), invariant_twist(v, 0.8), 1e-15)
    assert close(rotation_set(E1, E2, 0.0, TAS), direct_rotation(E1, E2), 1e-15)
    s = rotation_set(E1, E2, 0.7, SAT)
    assert (rotate(s, E1) - E2).norm() <= 1e-12


@given(vectors(), vectors(), angles, st.sampled_from([SAT, TAS]))
def test_rotation_set_always_maps_v_to_w(v, w_dir, alpha, rep):
    w = w_dir * (v.norm() / w_dir.norm())
    assume((v + w).norm() > 1e-3 * v.norm())
    s = rotation_set(v, w, alpha, rep)
    assert (rotate(s, v) - w).norm() <= 1e-12 * v.norm()


# --- twist projection ------------------------------------------------------

def test_twist_projection_examples():
    assert twist_projection(Vector3(0.4, -2, 1), Spinor()) == Spinor(1.0)
    assert close(twist_projection(E3, Spinor(R2, R2, 0, 0)), (R2, R2, 0, 0), 1e-15)
    assert close(twist_projection(E3, Spinor(R2, 0, R2, 0)), (1, 0, 0, 0), 1e-15)


def test_twist_scalars_for_quarter_turn_about_e3():
    ts = twist_scalars(Spinor(R2, R2, 0, 0), E3)
    assert ts.u == pytest.approx(R2, abs=1e-16)
    assert ts.n == 1.0
    assert ts.m == pytest.approx(R2, abs=1e-16)
    assert ts.lnorm == pytest.approx(1.0, abs=1e-15)
    assert ts.k ** 2 + ts.l ** 2 == pytest.approx(1.0, abs=1e-12)


@given(unit_spinors(), vectors())
def test_twist_scalars_unit_circle(s, v):
    assume(is_decomposable(s, v))
    ts = twist_scalars(s, v)
    assert abs(ts.k ** 2 + ts.l ** 2 - 1.0) <= 1e-12


@given(unit_spinors(), vectors())
def test_twist_projection_matches_generic_products(s, v):
    assume(abs(s.a) + abs(v.dot(dual(s))) / v.norm() > 1e-3)
    fast = twist_projection(v, s)
    assert sign_dist(fast, generic_twist(list(v), list(s))) <= 1e-12
    assert fast.a >= 0.0
    assert dual(fast).cross(v).norm() <= 1e-12 * v.norm()


@given(unit_spinors(), vectors())
def test_twist_projection_is_idempotent(s, v):
    assume(is_decomposable(s, v))
    q = twist_projection(v, s)
    assert close(twist_projection(v, q), q, 1e-12)


def test_twist_projection_pure_bivector_sign():
    # zero scalar part: first non-zero bivector coefficient made positive
    s = Spinor(0.0, -R2, -R2, 0.0)
    q = twist_projection(Vector3(1.0, 0.0, 1.0), s)
    assert q.a == 0.0 and q.b > 0.0
    assert close(q, (0, R2, R2, 0), 1e-15)


def test_canonical():
    assert canonical(Spinor(-0.6, 0.8, 0, 0)) == Spinor(0.6, -0.8, 0, 0)
    assert canonical(Spinor(0.0, 0.0, -1.0, 0.0)) == Spinor(0.0, 0.0, 1.0, 0.0)
    assert canonical(Spinor(0.0, 0.6, -0.8, 0.0)) == Spinor(0.0, 0.6, -0.8, 0.0)


# --- decompose -------------------------------------------------------------

def test_decompose_identity():
    for rep in (SAT, TAS):
        st_ = decompose(Spinor(), Vector3(0.3, 0.1, -2.0), rep)
        assert st_ == SwingTwist(Spinor(1.0, 0.0, 0.0, 0.0), Spinor(1.0, 0.0, 0.0, 0.0), rep)


def test_decompose_recovers_known_factors():
    swing = direct_rotation(E3, E1)
    twist = invariant_twist(E3, math.pi / 4)
    st_ = decompose(swing * twist, E3, SAT)
    assert sign_dist(st_.swing, swing) <= 1e-15
    assert sign_dist(st_.twist, twist) <= 1e-15


def test_decompose_impossible():
    with pytest.raises(NotDecomposable):
        decompose(Spinor(0.0, 0.0, 1.0, 0.0), E3, SAT)
    with pytest.raises(NotDecomposable):
        decompose(Spinor(0.0, 0.0, 1.0, 0.0), E3, TAS)
    assert (rotate(Spinor(0.0, 0.0, 1.0, 0.0), E3) + E3).norm() == 0.0


def test_decompose_errors():
    with pytest.raises(ZeroVector):
        decompose(Spinor(), Vector3(0, 0, 0))
    with pytest.raises(NonUnitSpinor):
        decompose(Spinor(1.0, 1.0, 0.0, 0.0), E3)


def test_decompose_accepts_string_rep():
    assert decompose(Spinor(), E1, "tas").rep is TAS


@given(unit_spinors(), vectors(), st.sampled_from([SAT, TAS]))
def test_decompose_invariants(s, v, rep):
    assume(is_decomposable(s, v))
    st_ = decompose(s, v, rep)
    assert close(st_.compose(), s, 1e-12)
    assert st_.twist == twist_projection(v, s)
    assert (rotate(st_.twist, v) - v).norm() <= 1e-12 * v.norm()
    assert abs(v.dot(dual(st_.swing))) <= 1e-12 * max(1.0, v.norm())
    assert dual(st_.twist).cross(v).norm() <= 1e-12 * v.norm()


@given(unit_spinors(), vectors())
def test_sat_swing_is_direct_rotation(s, v):
    w = rotate(s, v)
    assume((w + v).norm() > 1e-3 * v.norm())
    assert sign_dist(decompose(s, v, SAT).swing, direct_rotation(v, w)) <= 1e-10


@given(unit_spinors(), vectors(), st.sampled_from([SAT, TAS]), st.sampled_from([1e-6, 1.0, 1e6]))
def test_decompose_scale_invariant(s, v, rep, lam):
    assume((rotate(s, v) + v).norm() > 1e-3 * v.norm())
    a, b = decompose(s, v, rep), decompose(s, v * lam, rep)
    assert close(a.swing, b.swing, 1e-10) and close(a.twist, b.twist, 1e-10)


@given(unit_spinors(), vectors(), st.sampled_from([SAT, TAS]))
def test_decompose_sign_invariant(s, v, rep):
    assume(is_decomposable(s, v))
    a, b = decompose(s, v, rep), decompose(-s, v, rep)
    assert b.twist == a.twist
    assert b.swing == -a.swing


@given(vectors(), vectors(), angles)
def test_decompose_inverts_rotation_set(v, w_dir, alpha):
    w = w_dir * (v.norm() / w_dir.norm())
    assume((v + w).norm() > 1e-3 * v.norm())
    s = rotation_set(v, w, alpha, SAT)
    st_ = decompose(s, v, SAT)
    assert sign_dist(st_.twist, invariant_twist(v, alpha)) <= 1e-10
    assert sign_dist(st_.swing, direct_rotation(v, w)) <= 1e-10


def test_tas_is_inverse_of_sat_of_reverse():
    s = Spinor(0.5, -0.5, 0.5, 0.5)
    v = Vector3(0.2, 1.0, -0.4)
    tas = decompose(s, v, TAS)
    sat = decompose(~s, v, SAT)
    assert sign_dist(tas.twist, ~sat.twist) <= 1e-15
    assert sign_dist(tas.swing, ~sat.swing) <= 1e-15


def test_fast_path_uses_no_trigonometry():
    trig = {"sin", "cos", "tan", "asin", "acos", "atan", "atan2", "exp", "log"}
    for fn in (decomposition.decompose, decomposition._twist):
        tree = ast.parse(inspect.getsource(fn).lstrip())
        called = {
            node.func.attr if isinstance(node.func, ast.Attribute) else getattr(node.func, "id", "")
            for node in ast.walk(tree) if isinstance(node, ast.Call)
        }
        assert not called & trig, fn.__name__
    assert inspect.getsource(decomposition._twist).count("math.sqrt") == 1


# --- is_decomposable -------------------------------------------------------

def test_is_decomposable_examples():
    assert is_decomposable(Spinor(), E3)
    assert not is_decomposable(Spinor(0.0, 0.0, 1.0, 0.0), E3)
    assert is_decomposable(Spinor(0.0, 0.0, 1.0, 0.0), E1)
    assert rotate(Spinor(0.0, 0.0, 1.0, 0.0), E1) == E1
    with pytest.raises(ZeroVector):
        is_decomposable(Spinor(), Vector3(0, 0, 0))


@given(vectors(), st.sampled_from([0.0, 1e-13, 1e-7]), st.floats(0, 2 * math.pi))
def test_is_decomposable_matches_brute_near_boundary(v, a, phi):
    # spinor a + sqrt(1 - a^2) B with the dual of B perpendicular to v
    n = v.norm()
    helper = E1 if abs(v.x) < 0.9 * n else E2
    e = v.cross(helper)
    e = e * (1.0 / e.norm())
    f = v.cross(e) * (1.0 / n)
    d = e * math.cos(phi) + f * math.sin(phi)
    r = math.sqrt(1.0 - a * a)
    s = Spinor(a, d.z * r, d.x * r, d.y * r)
    brute = (rotate(s, v) + v).norm() > 1e-9 * n
    assert is_decomposable(s, v) == brute
    if brute:
        st_ = decompose(s, v, SAT)
        assert close(st_.compose(), s, 1e-9)
    else:
        with pytest.raises(NotDecomposable):
            decompose(s, v, SAT)


@given(unit_spinors(), vectors())
def test_is_decomposable_matches_brute_random(s, v):
    brute = (rotate(s, v) + v).norm() > 1e-9 * v.norm()
    assert is_decomposable(s, v) == brute
