import pytest
from hypothesis import given, strategies as st

from conftest import SMALL_PRESETS, load
from hopfkit.constructions import (cop, dual, group_algebra, op, preset, structurally_equal, symmetric_group,
                                   taft, tensor)
from hopfkit.errors import AxiomFailure, UnknownPreset
from hopfkit.hopf import (AXIOMS, ElementFD, HopfPresentation, comul_coords, counit, is_cocommutative, is_grouplike,
                          verified, verify_axioms)
from hopfkit.linalg import Matrix
from hopfkit.scalar import FieldSpec

Q = FieldSpec.rationals()

# Sweedler's algebra by hand: g^2 = 1, x^2 = 0, xg = -gx,
# Delta(g) = g(x)g, Delta(x) = x(x)1 + g(x)x, S(g) = g, S(x) = -gx.
SWEEDLER_PRODUCTS = {
    ("g", "g"): {"1": 1}, ("g", "x"): {"gx": 1}, ("g", "gx"): {"x": 1},
    ("x", "g"): {"gx": -1}, ("x", "x"): {}, ("x", "gx"): {},
    ("gx", "g"): {"x": -1}, ("gx", "x"): {}, ("gx", "gx"): {},
}


def elem(H, d):
    out = H.zero()
    for name, c in d.items():
        out = out + H.basis_element(H.basis.index(name)).scale(H.field(c))
    return out


def test_sweedler_multiplication_table(sweedler):
    H = sweedler
    e = {b: H.basis_element(i) for i, b in enumerate(H.basis)}
    for (a, b), expected in SWEEDLER_PRODUCTS.items():
        assert e[a] * e[b] == elem(H, expected), (a, b)


def test_sweedler_coproduct_counit_antipode(sweedler):
    H = sweedler
    i = H.basis.index
    assert comul_coords(H.basis_element(i("x"))) == {(i("x"), i("1")): 1, (i("g"), i("x")): 1}
    assert is_grouplike(H.basis_element(i("g")))
    assert [counit(H.basis_element(k)) for k in range(4)] == [1, 1, 0, 0]
    S = H.antipode
    assert H.apply(S, H.basis_element(i("x"))) == elem(H, {"gx": -1})
    assert H.apply(S, H.basis_element(i("gx"))) == elem(H, {"x": 1})


@pytest.mark.parametrize("name", SMALL_PRESETS)
def test_axioms_pass(name):
    rep = verify_axioms(load(name))
    assert rep.ok, rep.summary()
    assert {c.name for c in rep.checks} >= set(AXIOMS)


def test_constructions_are_involutive():
    H = load("taft:3")
    assert structurally_equal(dual(dual(H)), H)
    assert structurally_equal(op(op(H)), H)
    assert structurally_equal(cop(cop(H)), H)


def test_tensor_dimension_and_axioms():
    H = tensor(load("sweedler"), load("group:C2"))
    assert H.dim == 8
    assert verify_axioms(H).ok


def test_group_algebras_are_cocommutative_and_involutive():
    H = group_algebra(symmetric_group(3))
    assert all(is_cocommutative(H.basis_element(k)) for k in range(H.dim))
    assert H.antipode_power(2).is_identity()


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_taft_antipode_order(n):
    H = load(f"taft:{n}")
    S = H.antipode
    assert S.power(2 * n).is_identity()
    assert not any(S.power(m).is_identity() for m in range(1, 2 * n))


def test_taft_over_prime_field_with_root():
    # 2 has order 3 in F_7
    F7 = FieldSpec.prime(7)
    H = taft(3, F7, F7(2))
    assert verify_axioms(H).ok


@given(st.lists(st.integers(-3, 3), min_size=9, max_size=9), st.lists(st.integers(-3, 3), min_size=9, max_size=9))
def test_taft3_random_elements(a, b):
    H = load("taft:3")
    u, v = ElementFD(H, a), ElementFD(H, b)
    S = H.antipode
    # S is an anti-algebra map
    assert H.apply(S, u * v) == H.apply(S, v) * H.apply(S, u)
    # counit is multiplicative
    assert counit(u * v) == counit(u) * counit(v)


def _c2_with(antipode_entries):
    G = load("group:C2")
    return HopfPresentation(G.field, G.basis, G.mult, G.unit, G.comult, G.counit,
                            Matrix(2, 2, antipode_entries, G.field), name="bad")


def test_wrong_antipode_has_witness():
    H = _c2_with({(0, 0): 1, (0, 1): 1})
    rep = verify_axioms(H)
    bad = rep["antipode"]
    assert bad.status == "fail"
    assert bad.witness["basis"] == ["a"]
    with pytest.raises(AxiomFailure) as exc:
        verified(H)
    assert exc.value.witness["basis"] == ["a"]


@pytest.mark.parametrize("name", ["taft:1", "group:Cx", "bogus", "dual:", "tensor:sweedler"])
def test_unknown_presets(name):
    with pytest.raises(UnknownPreset):
        preset(name)
