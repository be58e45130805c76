import pytest
from hypothesis import given, strategies as st

from hopfkit.bicross import (Bicross, bicross_battery, distinguished_alpha_bicross, distinguished_g_bicross,
                             order_of_antipode_bicross, right_integral, taft_embedding_checks,
                             verify_right_integral, verify_window_axioms)

B2, B3 = Bicross(2), Bicross(3)


@pytest.fixture(scope="module", params=[2, 3])
def battery(request):
    return request.param, bicross_battery(request.param, 4, 100)


def test_battery_passes(battery):
    n, rep = battery
    assert rep.ok, rep.summary()
    assert rep.values["order-S"] == 2 * n
    assert rep.values["order-alpha"] == n
    assert rep.values["order-g"] == "exceeds-bound"
    assert rep.values["window"] == 4


@pytest.mark.parametrize("B", [B2, B3], ids=["n2", "n3"])
def test_distinguished_grouplike(B):
    n = B.n
    g = distinguished_g_bicross(B, 4)
    assert g == B.basis(n - 1, 0, n - 1)
    assert B.antipode(g) * g == B.one()
    # powers of g move to ever higher a-degrees, so g never returns to 1
    p = g
    for _ in range(6):
        assert p != B.one()
        p = p * g


@pytest.mark.parametrize("B", [B2, B3], ids=["n2", "n3"])
def test_alpha_values(B):
    alpha = distinguished_alpha_bicross(B)
    q = B.q
    # Omega scales c^i x^j (x) a^k by q^i, so alpha(c (x) e) = q^-1
    assert alpha.c == q.inv()
    assert alpha.x.is_zero()
    powers = [alpha]
    for _ in range(B.n - 1):
        powers.append(powers[-1] * alpha)
    assert powers[-1].c == 1 and all(p.c != 1 for p in powers[:-1])


def test_right_integral_support():
    lam = right_integral(B3)
    assert lam(B3.basis(0, 2, 0)) == 1
    assert lam(B3.basis(0, 2, 1)) == 0
    assert lam(B3.one()) == 0
    assert verify_right_integral(B3, 4).ok


def test_antipode_order():
    assert order_of_antipode_bicross(B2, 2, 100).value == 4
    assert order_of_antipode_bicross(B3, 2, 5).value == "exceeds-bound"


def test_taft_embedding():
    rep = taft_embedding_checks(3)
    assert rep.ok
    # the inclusion is not a coalgebra map
    assert rep.values["embedding-comult-commutes"] is False


keys = st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(-2, 2))


@given(st.lists(st.tuples(keys, st.integers(-2, 2)), min_size=1, max_size=3),
       st.lists(st.tuples(keys, st.integers(-2, 2)), min_size=1, max_size=3))
def test_random_elements_satisfy_bialgebra_laws(us, vs):
    B = B3
    u = B.element(dict(us))
    v = B.element(dict(vs))
    assert B.counit(u * v) == B.counit(u) * B.counit(v)
    assert B.antipode(u * v) == B.antipode(v) * B.antipode(u)
    assert B.antipode(B.antipode(u), -1) == u
    # m(S (x) id) Delta = eps 1
    acc = B.element({})
    for (l, r), c in B.comul(u).items():
        acc = acc + (B.antipode(B.element({l: 1})) * B.element({r: 1})).scale(c)
    assert acc == B.one().scale(B.counit(u))


def test_window_axioms_small_window():
    assert verify_window_axioms(B2, 2).ok


def test_rejects_n_below_two():
    with pytest.raises(ValueError):
        Bicross(1)
