import pytest
from hypothesis import given, strategies as st

from conftest import SMALL_PRESETS, analyzed, load
from hopfkit.constructions import dual
from hopfkit.hopf import ElementFD, act_element_on_functional, counit, is_algebra_map, is_grouplike
from hopfkit.integrals import (chi_closed_form, compute_integrals, nakayama_chi, nakayama_omega,
                               trace_integrals, verify_bijections, verify_lemma21, verify_sstarlambda)
from hopfkit.scalar import FieldSpec


def names(H, v):
    return {H.basis[k]: str(c) for k, c in enumerate(v.coeffs) if not c.is_zero()}


def test_sweedler_integrals_by_hand():
    # with xg = -gx: h(x + gx) = eps(h)(x + gx), (x - gx)h = eps(h)(x - gx)
    H, I, G = analyzed("sweedler")
    assert names(H, I.left_H) == {"x": "1", "gx": "1"}
    assert names(H, I.right_H) == {"x": "1", "gx": "-1"}
    assert names(H, I.left_Hstar) == {"gx": "1"}
    assert names(H, I.right_Hstar) == {"x": "1"}
    assert names(H, G.g) == {"g": "1"}
    # alpha(g) = -1, alpha(x) = 0
    assert [str(c) for c in G.alpha.coeffs] == ["1", "-1", "0", "0"]


@pytest.mark.parametrize("n", [2, 3, 5, 7])
def test_cyclic_group_integrals_are_the_group_sum(n):
    H, I, G = analyzed(f"group:C{n}")
    assert all(c == 1 for c in I.left_H.coeffs)
    assert I.left_H.coeffs == I.right_H.coeffs
    assert names(H, I.left_Hstar) == {H.basis[0]: "1"}
    assert G.g == H.one() and G.alpha == H.epsilon()


@pytest.mark.parametrize("name", SMALL_PRESETS)
@given(data=st.data())
def test_integral_defining_identities(name, data):
    H, I, G = analyzed(name)
    h = ElementFD(H, [data.draw(st.integers(-3, 3)) for _ in range(H.dim)])
    assert h * I.left_H == I.left_H.scale(counit(h))
    assert I.right_H * h == I.right_H.scale(counit(h))
    assert I.left_H * h == I.left_H.scale(G.alpha(h))


@pytest.mark.parametrize("name", SMALL_PRESETS)
def test_grouplike_data(name):
    H, I, G = analyzed(name)
    assert is_grouplike(G.g) and is_algebra_map(G.alpha)
    assert G.g * G.g_inv == H.one()
    assert G.alpha * G.alpha_inv == H.epsilon()


@pytest.mark.parametrize("name", SMALL_PRESETS)
def test_battery_checks_pass(name):
    H, I, G = analyzed(name)
    for rep in (verify_lemma21(H, I, G), verify_bijections(H, I), verify_sstarlambda(H, I, G)):
        assert rep.ok, rep.summary()


@pytest.mark.parametrize("name", SMALL_PRESETS)
def test_dual_integrals_swap_sides(name):
    H, I, _ = analyzed(name)
    J = compute_integrals(dual(H))
    assert J.left_H.coeffs == I.left_Hstar.coeffs
    assert J.right_H.coeffs == I.right_Hstar.coeffs
    assert J.left_Hstar.coeffs == I.left_H.coeffs
    assert J.right_Hstar.coeffs == I.right_H.coeffs


@pytest.mark.parametrize("name", SMALL_PRESETS)
def test_nakayama_automorphisms(name):
    H, I, G = analyzed(name)
    chi = nakayama_chi(H, I)
    assert chi == chi_closed_form(H, G.alpha)
    omega = nakayama_omega(H, I)
    S, Sinv = H.antipode, H.antipode_inverse
    assert omega == Sinv @ chi @ S
    lam = I.left_Hstar
    # lambda(x h) = lambda(chi(h) x) on basis pairs
    for i in range(H.dim):
        h = H.basis_element(i)
        for j in range(H.dim):
            x = H.basis_element(j)
            assert lam(x * h) == lam(H.apply(chi, h) * x)


def test_sweedler_chi():
    # chi(h) = alpha(h_2) S^-2(h_1); alpha(g) = -1, alpha(x) = 0, S^2(x) = -x
    H, I, _ = analyzed("sweedler")
    chi = nakayama_chi(H, I)
    g, x, gx = (H.basis_element(k) for k in (1, 2, 3))
    assert H.apply(chi, g) == g.scale(-1)
    assert H.apply(chi, x) == x.scale(-1)
    assert H.apply(chi, gx) == gx


@pytest.mark.parametrize("n", [2, 3, 5, 7])
def test_trace_integrals_semisimple(n):
    H = load(f"group:C{n}")
    tr = trace_integrals(H)
    assert counit(tr.r) == n == tr.lam(H.one())
    assert H.antipode_power(2).trace() == n


def test_trace_integrals_vanish_without_cosemisimplicity():
    H = load("sweedler")
    tr = trace_integrals(H)
    assert all(c.is_zero() for c in tr.r.coeffs)
    assert tr.lam(H.one()).is_zero()


def test_bad_characteristic_group_algebra():
    F5 = FieldSpec.prime(5)
    H, I, G = analyzed("group:C5", F5)
    # eps(t) = 5 = 0, so H is not semisimple
    assert counit(I.left_H).is_zero()
    assert H.antipode_power(2).trace().is_zero()


def test_left_lambda_dual_action():
    H, I, _ = analyzed("taft:3")
    lam = I.left_Hstar
    # h -> lambda = lambda <- chi(h): spot check on the grouplike c
    c = H.basis_element(1)
    chi = nakayama_chi(H, I)
    assert act_element_on_functional(c, lam, "left") == act_element_on_functional(H.apply(chi, c), lam, "right")
