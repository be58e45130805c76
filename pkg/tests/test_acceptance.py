"""End-to-end acceptance criteria, one test family per criterion.

The terminal summary prints one PASS/FAIL line per criterion.
"""
import pytest

from conftest import ALL_PRESETS, analyzed, load
from hopfkit import bicross as bx
from hopfkit import qsl2
from hopfkit.cli import main
from hopfkit.constructions import dual
from hopfkit.hopf import comul_coords, counit, verify_axioms
from hopfkit.integrals import chi_closed_form, compute_integrals, nakayama_chi, trace_integrals
from hopfkit.radford import (cocommutative_integral_checks, larson_checks, mainss_battery, order_of_map,
                             secondchi_form, verify_cor37, verify_s4)
from hopfkit.scalar import FieldSpec

F5 = FieldSpec.prime(5)
q = qsl2.q


@pytest.fixture(scope="module", params=[2, 3])
def bicross_run(request):
    n = request.param
    return n, bx.bicross_battery(n, 4, 100)


# 1 -------------------------------------------------------------------------------

@pytest.mark.parametrize("name", ALL_PRESETS)
def test_criterion_01_axioms_finite(name):
    rep = verify_axioms(load(name))
    assert rep.ok, rep.summary()


@pytest.mark.parametrize("n", [2, 3])
def test_criterion_01_axioms_bicross(n):
    rep = bx.verify_window_axioms(bx.Bicross(n), 4)
    assert rep.ok, rep.summary()


def test_criterion_01_axioms_qsl2():
    rep = qsl2.verify_window_axioms(3)
    assert rep.ok, rep.summary()


# 2 -------------------------------------------------------------------------------

@pytest.mark.parametrize("name", ALL_PRESETS)
def test_criterion_02_s4_finite(name):
    H, I, G = analyzed(name)
    rep = verify_s4(H, I, G)
    assert rep.ok, rep.summary()


def test_criterion_02_s4_bicross(bicross_run):
    _, rep = bicross_run
    assert rep.status("s4-formula") == "pass"


def test_criterion_02_s4_qsl2():
    rep = qsl2.verify_s4_qsl(6)
    assert rep.ok, rep.summary()


# 3 -------------------------------------------------------------------------------

def test_criterion_03_qsl2_numbers():
    rep = qsl2.verify_chi_alpha(6)
    assert rep.ok, rep.summary()
    assert qsl2.lambda_eval(qsl2.normal_form("da")) == (q ** 2 + 1).inv()
    alpha = qsl2.solved_alpha(6)
    assert alpha == {"a": q ** -2, "b": qsl2.ZERO, "c": qsl2.ZERO, "d": q ** 2}
    chi = qsl2.solve_chi(4)
    for g, s in {"a": q ** -2, "b": qsl2.ONE, "c": qsl2.ONE, "d": q ** 2}.items():
        assert chi[g] == qsl2.QslElement.gen(g).scale(s)
    assert rep.values["degree"] == 6


# 4 -------------------------------------------------------------------------------

def test_criterion_04_bicross_numbers(bicross_run):
    n, rep = bicross_run
    assert rep.ok, rep.summary()
    assert rep.status("right-integral") == "pass"
    B = bx.Bicross(n)
    assert bx.distinguished_g_bicross(B, 4) == B.basis(n - 1, 0, n - 1)
    assert rep.values["order-alpha"] == n
    assert rep.values["order-g"] == "exceeds-bound" and rep.values["order-bound"] == 100
    assert rep.values["order-S"] == 2 * n


# 5 -------------------------------------------------------------------------------

@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_criterion_05_taft(n):
    H, I, G = analyzed(f"taft:{n}")
    assert order_of_map(H.antipode, 100).value == 2 * n
    assert counit(I.left_H).is_zero()
    assert I.left_Hstar(H.one()).is_zero()
    rep = mainss_battery(H, I)
    assert rep.values["mainss-truth"] == {k: False for k in ("i", "ii", "iii", "iv", "v", "vi")}
    assert rep.status("mainss-unanimity") == "pass"


# 6 -------------------------------------------------------------------------------

def test_criterion_06_bad_characteristic():
    H, I, G = analyzed("group:C5", F5)
    rep = mainss_battery(H, I)
    assert rep.values["mainss-truth"] == {"i": False, "ii": True, "iii": True, "iv": False, "v": True, "vi": True}
    assert rep.status("mainss-unanimity") == "not-applicable"
    t = I.left_H
    acc = H.zero()
    for (j, k), c in comul_coords(t).items():
        acc = acc + (H.apply(H.antipode, H.basis_element(k)) * H.basis_element(j)).scale(c)
    assert all(x.is_zero() for x in acc.coeffs)


# 7 -------------------------------------------------------------------------------

@pytest.mark.parametrize("n", range(2, 8))
def test_criterion_07_cyclic_traces(n):
    H, I, G = analyzed(f"group:C{n}")
    rep = verify_cor37(H, I)
    assert rep.checks and all(c.status == "pass" for c in rep.checks), rep.summary()
    tr = trace_integrals(H)
    assert counit(tr.t) == H.antipode_power(2).trace() == n == tr.lam(H.one())


def test_criterion_07_sweedler_traces_vanish():
    H = load("sweedler")
    tr = trace_integrals(H)
    assert H.antipode_power(2).trace() == 0
    assert counit(tr.t) == 0 and tr.lam(H.one()) == 0
    assert all(c.is_zero() for c in tr.t.coeffs)


# 8 -------------------------------------------------------------------------------

@pytest.mark.parametrize("name,field", [(n, None) for n in ALL_PRESETS] + [("group:C5", F5)])
def test_criterion_08_equivalences(name, field):
    H, I, G = analyzed(name, field)
    for rep in (larson_checks(H, I, G), cocommutative_integral_checks(H, I, G)):
        assert rep.ok, rep.summary()


# 9 -------------------------------------------------------------------------------

@pytest.mark.parametrize("name", ALL_PRESETS)
def test_criterion_09_cross_module(name):
    H, I, G = analyzed(name)
    J = compute_integrals(dual(H))
    assert (J.left_H.coeffs, J.right_H.coeffs) == (I.left_Hstar.coeffs, I.right_Hstar.coeffs)
    assert (J.left_Hstar.coeffs, J.right_Hstar.coeffs) == (I.left_H.coeffs, I.right_H.coeffs)
    chi = nakayama_chi(H, I)
    assert chi == chi_closed_form(H, G.alpha)
    assert chi == secondchi_form(H, G)


# 10 ------------------------------------------------------------------------------

@pytest.mark.parametrize("target", ["sweedler", "taft:3", "group:S3", "dual:taft:2", "bicross:2", "qsl2"])
def test_criterion_10_determinism(target, tmp_path, capsys):
    extra = ["--degree", "3"] if target == "qsl2" else ["--window", "2"] if target.startswith("bicross") else []
    outs = []
    for k in range(2):
        p = tmp_path / f"r{k}.json"
        assert main(["verify", target, "all", "--json", str(p)] + extra) == 0
        outs.append(p.read_bytes())
    capsys.readouterr()
    assert outs[0] == outs[1]
