"""Integrals, distinguished grouplikes and the Nakayama maps chi and Omega.

Notation: t is a left integral in H, T a right one; lam (lambda) a left
integral in H*, Lam (Lambda) a right one. alpha is the character with
t h = alpha(h) t and g the grouplike with h_1 Lam(h_2) = Lam(h) g.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import (HopfkitError, InconsistentAlpha, InconsistentG, IntegralSpaceDimensionError,
                     RescalingImpossible, SingularActionMatrix)
from .hopf import (ElementFD, FunctionalFD, HopfPresentation, act_element_on_functional,
                   act_functional_on_element, antipode_pow, comul_coords, is_algebra_map,
                   is_grouplike, left_mult_matrix, right_mult_matrix, tensor_str, verified)
from .linalg import Matrix, nullspace, rank, solve_columns
from .report import VerificationReport, first_mismatch, witness


@dataclass(frozen=True)
class IntegralData:
    left_H: ElementFD
    right_H: ElementFD
    left_Hstar: FunctionalFD
    right_Hstar: FunctionalFD


@dataclass(frozen=True)
class GrouplikeData:
    alpha: FunctionalFD
    alpha_inv: FunctionalFD
    g: ElementFD
    g_inv: ElementFD


def _stack(blocks, ncols, field) -> Matrix:
    entries = {}
    r0 = 0
    for B in blocks:
        for (r, c), v in B.entries.items():
            entries[r0 + r, c] = v
        r0 += B.nrows
    return Matrix(r0, ncols, entries, field)


def _one_dim(M: Matrix, what: str) -> tuple:
    ker = nullspace(M)
    if len(ker) != 1:
        raise IntegralSpaceDimensionError(f"space of {what} has dimension {len(ker)}, expected 1")
    return ker[0]


def _dual_integral_system(H: HopfPresentation, side: str) -> Matrix:
    """Rows (i, m): coordinate m of h_1 f(h_2) - f(h) 1 (left) or f(h_1) h_2 - f(h) 1 (right) at h = e_i."""
    n = H.dim
    entries: dict = {}

    def put(r, c, v):
        key = (r, c)
        entries[key] = entries[key] + v if key in entries else v

    for i in range(n):
        for j, k, c in H.comult[i]:
            if side == "left":
                put(i * n + j, k, c)
            else:
                put(i * n + k, j, c)
        for m, u in enumerate(H.unit):
            if u:
                put(i * n + m, i, -u)
    return Matrix(n * n, n, entries, H.field)


def compute_integrals(H: HopfPresentation) -> IntegralData:
    verified(H)
    n, F = H.dim, H.field
    eps = H.counit
    I = Matrix.identity(n, F)
    lefts, rights = [], []
    for i in range(n):
        e = H.basis_element(i)
        lefts.append(left_mult_matrix(e) - I.scale(eps[i]))
        rights.append(right_mult_matrix(e) - I.scale(eps[i]))
    t = _one_dim(_stack(lefts, n, F), "left integrals in H")
    T = _one_dim(_stack(rights, n, F), "right integrals in H")
    lam = _one_dim(_dual_integral_system(H, "left"), "left integrals in H*")
    Lam = _one_dim(_dual_integral_system(H, "right"), "right integrals in H*")
    return IntegralData(ElementFD(H, t), ElementFD(H, T), FunctionalFD(H, lam), FunctionalFD(H, Lam))


def _ratio(v: ElementFD, base: ElementFD):
    """c with v = c * base, or None."""
    k, b = base.first_nonzero()
    c = v.coeffs[k] / b
    return c if v == base.scale(c) else None


def distinguished_alpha(H: HopfPresentation, I: IntegralData) -> FunctionalFD:
    t = I.left_H
    vals = []
    for i in range(H.dim):
        c = _ratio(t * H.basis_element(i), t)
        if c is None:
            raise InconsistentAlpha(f"t*{H.basis[i]} is not a multiple of t")
        vals.append(c)
    alpha = FunctionalFD(H, vals)
    chi = nakayama_chi(H, I)
    if H.epsilon().precompose(chi) != alpha:
        raise InconsistentAlpha("alpha from t h = alpha(h) t disagrees with epsilon o chi")
    return alpha


def distinguished_g(H: HopfPresentation, I: IntegralData) -> ElementFD:
    Lam = I.right_Hstar
    k, c = Lam.first_nonzero()
    g = act_functional_on_element(Lam, H.basis_element(k), "left").scale(c.inv())
    for i in range(H.dim):
        h = H.basis_element(i)
        if act_functional_on_element(Lam, h, "left") != g.scale(Lam(h)):
            raise InconsistentG(f"h_1 Lam(h_2) != Lam(h) g at h = {H.basis[i]}")
    if not is_grouplike(g):
        raise InconsistentG(f"g = {g} is not grouplike")
    return g


def grouplikes(H: HopfPresentation, I: IntegralData) -> GrouplikeData:
    alpha = distinguished_alpha(H, I)
    g = distinguished_g(H, I)
    return GrouplikeData(alpha, alpha.precompose(H.antipode), g, antipode_pow(g, 1))


def analyze(H: HopfPresentation):
    """Integrals and grouplikes in one go."""
    I = compute_integrals(H)
    return I, grouplikes(H, I)


def _pairing(H, f: FunctionalFD, left_unknown: bool) -> Matrix:
    """M[k][j] = f(e_j e_k) if left_unknown else f(e_k e_j)."""
    n = H.dim
    rows = []
    for k in range(n):
        ek = H.basis_element(k)
        row = []
        for j in range(n):
            ej = H.basis_element(j)
            row.append(f(ej * ek) if left_unknown else f(ek * ej))
        rows.append(row)
    return Matrix.from_rows(rows, H.field)


def nakayama_chi(H: HopfPresentation, I: IntegralData) -> Matrix:
    """chi with lam(x h) = lam(chi(h) x) for all x, i.e. h -> lam = lam <- chi(h)."""
    lam = I.left_Hstar
    M = _pairing(H, lam, left_unknown=True)
    rhs = [tuple(lam(H.basis_element(k) * H.basis_element(i)) for k in range(H.dim))
           for i in range(H.dim)]
    cols = solve_columns(M, rhs)
    if cols is None or rank(M) != H.dim:
        raise SingularActionMatrix("h -> lam <- h is not bijective")
    chi = Matrix.from_columns(cols, H.field, H.dim)
    for a in range(H.dim):
        for b in range(H.dim):
            ea, eb = H.basis_element(a), H.basis_element(b)
            if H.apply(chi, ea * eb) != H.apply(chi, ea) * H.apply(chi, eb):
                raise HopfkitError(f"chi is not multiplicative at ({H.basis[a]}, {H.basis[b]})")
    return chi


def nakayama_omega(H: HopfPresentation, I: IntegralData) -> Matrix:
    """Omega with Omega(h) -> Lam = Lam <- h, i.e. Lam(x Omega(h)) = Lam(h x)."""
    Lam = I.right_Hstar
    M = _pairing(H, Lam, left_unknown=False)
    rhs = [tuple(Lam(H.basis_element(i) * H.basis_element(k)) for k in range(H.dim))
           for i in range(H.dim)]
    cols = solve_columns(M, rhs)
    if cols is None or rank(M) != H.dim:
        raise SingularActionMatrix("h -> h -> Lam is not bijective")
    omega = Matrix.from_columns(cols, H.field, H.dim)
    chi = nakayama_chi(H, I)
    S, Sinv = H.antipode, H.antipode_inverse
    if omega != Sinv @ chi @ S or omega != S @ chi @ Sinv:
        raise HopfkitError("Omega differs from S^-1 chi S or S chi S^-1")
    alpha_inv = distinguished_alpha(H, I).precompose(S)
    if H.epsilon().precompose(omega) != alpha_inv:
        raise HopfkitError("epsilon o Omega differs from alpha^-1")
    return omega


def chi_closed_form(H: HopfPresentation, alpha: FunctionalFD) -> Matrix:
    """The map h -> alpha(h_2) S^-2(h_1)."""
    S_2 = H.antipode_power(-2)
    cols = []
    for i in range(H.dim):
        acc = H.zero()
        for (j, k), c in comul_coords(H.basis_element(i)).items():
            a = alpha.coeffs[k]
            if a:
                acc = acc + H.apply(S_2, H.basis_element(j)).scale(c * a)
        cols.append(acc.coeffs)
    return Matrix.from_columns(cols, H.field, H.dim)


# -- identity batteries --------------------------------------------------------

def verify_lemma21(H: HopfPresentation, I: IntegralData, G: GrouplikeData) -> VerificationReport:
    n, F = H.dim, H.field
    t = I.left_H
    dt = comul_coords(t)
    # A[m][j]: coefficient of e_m in e^j(t_1) t_2, so t <- f = A f
    entries: dict = {}
    for (j, k), c in dt.items():
        entries[k, j] = entries[k, j] + c if (k, j) in entries else c
    A = Matrix(n, n, entries, F)
    cols = solve_columns(A, [H.unit] + [H.basis_element(i).coeffs for i in range(n)])
    if cols is None:
        raise RescalingImpossible("no functional with t <- Lam = 1")
    Lam = FunctionalFD(H, cols[0])
    rep = VerificationReport()

    def right_integral():
        for i in range(n):
            h = H.basis_element(i)
            yield H.basis[i], act_functional_on_element(Lam, h, "right"), H.one().scale(Lam(h))

    w = first_mismatch(right_integral())
    rep.add("lemma21-i-right-integral", w is None, w)

    alpha = G.alpha
    Sinv = H.antipode_inverse

    def part_ii():
        for i in range(n):
            h = H.basis_element(i)
            hstar = FunctionalFD(H, cols[i + 1])
            first = act_element_on_functional(antipode_pow(h, 1), Lam, "right")
            second = H.functional([F.zero] * n)
            for (j, k), c in comul_coords(h).items():
                a = alpha.coeffs[k]
                if a:
                    y = H.apply(Sinv, H.basis_element(j))
                    second = second + act_element_on_functional(y, Lam, "left").scale(c * a)
            yield H.basis[i], hstar, first
            yield H.basis[i], hstar, second

    w = first_mismatch(part_ii())
    rep.add("lemma21-ii-dual-element", w is None, w)

    S2 = H.antipode_power(2)
    rhs: dict = {}
    for (j, k), c in dt.items():
        left = H.apply(S2, H.basis_element(k)) * G.g
        for a, v in left.nonzero():
            key = (a, j)
            rhs[key] = rhs[key] + c * v if key in rhs else c * v
    rhs = {k: v for k, v in rhs.items() if not v.is_zero()}
    ok = rhs == dt
    rep.add("lemma21-iii-coproduct-of-t", ok,
            None if ok else witness("t", tensor_str(H, dt), tensor_str(H, rhs)))
    return rep


def verify_bijections(H: HopfPresentation, I: IntegralData, l: ElementFD | None = None) -> VerificationReport:
    """Both maps f -> f -> l and f -> l <- f must have full rank."""
    l = I.left_H if l is None else l
    n = H.dim
    rep = VerificationReport()
    for side, label in (("left", "bijection-f-acts-on-l"), ("right", "bijection-l-acted-by-f")):
        cols = [act_functional_on_element(H.dual_basis(i), l, side).coeffs for i in range(n)]
        r = rank(Matrix.from_columns(cols, H.field, n))
        rep.add(label, r == n, witness(str(l), f"rank {r}", f"rank {n}"))
    return rep


def verify_sstarlambda(H: HopfPresentation, I: IntegralData, G: GrouplikeData) -> VerificationReport:
    lam = I.left_Hstar
    g, g_inv = G.g, G.g_inv
    rep = VerificationReport()
    lhs1 = lam.precompose(H.antipode)
    rhs1 = act_element_on_functional(g_inv, lam, "left")
    lhs2 = lam.precompose(H.antipode_inverse)
    rhs2 = act_element_on_functional(g_inv, lam, "right")
    lhs3 = lam.precompose(H.antipode_power(2))
    rhs3 = act_element_on_functional(g, act_element_on_functional(g_inv, lam, "left"), "right")
    for name, a, b in (("lambda-S", lhs1, rhs1), ("lambda-S-inverse", lhs2, rhs2), ("lambda-S2", lhs3, rhs3)):
        rep.add(name, a == b, witness("lambda", a, b))
    return rep


class TraceIntegrals(NamedTuple):
    r: ElementFD
    t: ElementFD
    lam: FunctionalFD
    Lam: FunctionalFD


def trace_integrals(H: HopfPresentation) -> TraceIntegrals:
    """Dual-basis sums built from S^2; all vanish unless H is cosemisimple."""
    n = H.dim
    S2 = H.antipode_power(2)
    r, t = H.zero(), H.zero()
    for i in range(n):
        for (j, k), c in comul_coords(H.basis_element(i)).items():
            # e^i(S^2(e_j)) is the (i, j) entry of S^2
            r = r + H.basis_element(k).scale(c * S2[i, j])
            t = t + H.basis_element(j).scale(c * S2[i, k])
    lam_vals, Lam_vals = [], []
    s2e = [H.apply(S2, H.basis_element(i)) for i in range(n)]
    for m in range(n):
        x = H.basis_element(m)
        lam_vals.append(sum(((x * s2e[i]).coeffs[i] for i in range(n)), H.field.zero))
        Lam_vals.append(sum(((s2e[i] * x).coeffs[i] for i in range(n)), H.field.zero))
    out = TraceIntegrals(r, t, FunctionalFD(H, lam_vals), FunctionalFD(H, Lam_vals))
    tr = S2.trace()
    one = H.one()
    eps = H.epsilon()
    if not (eps(r) == eps(t) == tr == out.lam(one) == out.Lam(one)):
        raise HopfkitError("trace integrals disagree with Tr(S^2)")
    return out


def check_grouplike_data(H: HopfPresentation, G: GrouplikeData) -> bool:
    return (is_algebra_map(G.alpha) and is_grouplike(G.g)
            and G.alpha * G.alpha_inv == H.epsilon() and G.g * G.g_inv == H.one())
