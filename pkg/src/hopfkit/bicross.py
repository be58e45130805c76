"""The infinite-dimensional co-Frobenius bicrossproduct T_n x kA.

Basis elements are triples (i, j, k) standing for c^i x^j (x) a^k with
0 <= i, j < n and k any integer. As an algebra this is T_n (x) kA; the
coproduct twists by the grading deg(c^i x^j) = a^j:

    Delta(c^i x^j (x) a^k) = sum_t binom(j, t)_q (c^(i+t) x^(j-t) (x) a^(t+k)) (x) (c^i x^t (x) a^k)
    S(c^i x^j (x) a^k) = S_T(c^i x^j) (x) a^-(j+k)

Every check runs on a window |k| <= K of the basis.
"""
from __future__ import annotations

from itertools import product

from .constructions import is_primitive_root, primitive_root, taft
from .errors import InconsistentG, SolveFailure
from .hopf import ElementFD
from .linalg import Matrix, rank, solve_columns
from .radford import EXCEEDS, OrderResult
from .report import VerificationReport, first_mismatch, witness
from .scalar import FieldSpec, Scalar, gauss_binomial

DEFAULT_WINDOW = 4


def _acc(d: dict, key, v):
    nv = d[key] + v if key in d else v
    if nv.is_zero():
        d.pop(key, None)
    else:
        d[key] = nv


class SparseElement:
    """Finitely supported element: {(i, j, k): Scalar}."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: "Bicross", terms: dict):
        self.algebra = algebra
        self.terms = {key: v for key, v in terms.items() if not v.is_zero()}

    def __add__(self, other):
        out = dict(self.terms)
        for key, v in other.terms.items():
            _acc(out, key, v)
        return SparseElement(self.algebra, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, s):
        s = self.algebra.field(s)
        return SparseElement(self.algebra, {key: v * s for key, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SparseElement):
            return self.algebra.mul(self, other)
        return self.scale(other)

    def __eq__(self, other):
        return isinstance(other, SparseElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms):
            c = str(self.terms[key])
            name = self.algebra.name(key)
            parts.append(name if c == "1" else f"({c})*{name}")
        return " + ".join(parts)

    __repr__ = __str__


class SparseFunctional:
    """Finitely supported functional: sum of v * p_(i,j,k)."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: "Bicross", terms: dict):
        self.algebra = algebra
        self.terms = {key: v for key, v in terms.items() if not v.is_zero()}

    def __call__(self, h: SparseElement) -> Scalar:
        acc = self.algebra.field.zero
        for key, v in h.terms.items():
            w = self.terms.get(key)
            if w is not None:
                acc = acc + v * w
        return acc

    def __eq__(self, other):
        return isinstance(other, SparseFunctional) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({self.terms[k]})*p_{self.algebra.name(k)}" for k in sorted(self.terms))


class Character:
    """Algebra map determined by its values on c (x) e, x (x) e and 1 (x) a."""

    def __init__(self, algebra: "Bicross", c, x, a):
        F = algebra.field
        self.algebra = algebra
        self.c, self.x, self.a = F(c), F(x), F(a)

    def value(self, key) -> Scalar:
        i, j, k = key
        return self.c ** i * self.x ** j * self.a ** k

    def __call__(self, h: SparseElement) -> Scalar:
        acc = self.algebra.field.zero
        for key, v in h.terms.items():
            acc = acc + v * self.value(key)
        return acc

    def __mul__(self, other: "Character") -> "Character":
        B = self.algebra
        vals = []
        for gen in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
            acc = B.field.zero
            for (l, r), c in B.comul_key(gen).items():
                acc = acc + c * self.value(l) * other.value(r)
            vals.append(acc)
        return Character(B, *vals)

    def __eq__(self, other):
        return (self.c, self.x, self.a) == (other.c, other.x, other.a)

    def __hash__(self):
        return hash((self.c, self.x, self.a))

    def table(self) -> dict:
        return {"c(x)e": str(self.c), "x(x)e": str(self.x), "1(x)a": str(self.a)}


class Bicross:
    """Structure maps of T_n x kA over Q(zeta_n)."""

    def __init__(self, n: int):
        if n < 2:
            raise ValueError("the bicrossproduct needs n >= 2")
        self.n = n
        self.field = FieldSpec.cyclotomic(n)
        self.q = primitive_root(self.field, n)
        self._qp = [self.q ** e for e in range(n)]
        self._binom = {(j, t): gauss_binomial(j, t, self.q) for j in range(n) for t in range(j + 1)}
        self._comul: dict = {}
        self._S: dict = {}
        self._Sinv: dict = {}

    def __repr__(self):
        return f"bicross:{self.n}"

    # -- basis ------------------------------------------------------------

    def name(self, key) -> str:
        i, j, k = key
        parts = []
        if i:
            parts.append("c" if i == 1 else f"c^{i}")
        if j:
            parts.append("x" if j == 1 else f"x^{j}")
        left = "".join(parts) or "1"
        right = "e" if k == 0 else ("a" if k == 1 else f"a^{k}")
        return f"{left}(x){right}"

    def basis(self, i, j, k) -> SparseElement:
        return SparseElement(self, {(i % self.n, j, k): self.field.one})

    def one(self) -> SparseElement:
        return self.basis(0, 0, 0)

    def element(self, terms: dict) -> SparseElement:
        return SparseElement(self, {key: self.field(v) for key, v in terms.items()})

    def window(self, K: int):
        n = self.n
        return [(i, j, k) for k in range(-K, K + 1) for j in range(n) for i in range(n)]

    # -- structure maps -----------------------------------------------------

    def mul_key(self, a, b):
        """(coefficient, key) or None for the product of two basis triples."""
        ia, ja, ka = a
        ib, jb, kb = b
        if ja + jb >= self.n:
            return None
        return self._qp[(ja * ib) % self.n], ((ia + ib) % self.n, ja + jb, ka + kb)

    def mul(self, u: SparseElement, v: SparseElement) -> SparseElement:
        out: dict = {}
        for a, x in u.terms.items():
            for b, y in v.terms.items():
                r = self.mul_key(a, b)
                if r is not None:
                    _acc(out, r[1], x * y * r[0])
        return SparseElement(self, out)

    def comul_key(self, key) -> dict:
        if key not in self._comul:
            i, j, k = key
            n = self.n
            self._comul[key] = {
                (((i + t) % n, j - t, t + k), (i, t, k)): self._binom[j, t] for t in range(j + 1)
            }
        return self._comul[key]

    def comul(self, u: SparseElement) -> dict:
        out: dict = {}
        for key, x in u.terms.items():
            for pair, c in self.comul_key(key).items():
                _acc(out, pair, x * c)
        return out

    def counit(self, u: SparseElement) -> Scalar:
        acc = self.field.zero
        for (i, j, k), v in u.terms.items():
            if j == 0:
                acc = acc + v
        return acc

    def _taft_antipode(self, i, j):
        """S_T(c^i x^j) = S(x)^j c^-i as (coefficient, i', j')."""
        n = self.n
        coef, ci, cj = self.field.one, 0, 0
        for _ in range(j):
            # times S(x) = -c^(n-1) x
            coef = -coef * self._qp[(cj * (n - 1)) % n]
            ci, cj = (ci + n - 1) % n, cj + 1
        coef = coef * self._qp[(cj * (-i)) % n]
        return coef, (ci - i) % n, cj

    def _antipode_key(self, key):
        if key not in self._S:
            i, j, k = key
            c, i2, j2 = self._taft_antipode(i, j)
            self._S[key] = (c, (i2, j2, -(j + k)))
        return self._S[key]

    def _antipode_inverse_key(self, key):
        # S preserves j and the Taft antipode is invertible on each j-layer,
        # so S^-1 is found by inverting S on the c-index.
        if key not in self._Sinv:
            i, j, k = key
            for i0 in range(self.n):
                k0 = -k - j
                c, img = self._antipode_key((i0, j, k0))
                if img == key:
                    self._Sinv[key] = (c.inv(), (i0, j, k0))
                    break
            else:  # pragma: no cover - S is bijective on basis monomials
                raise SolveFailure(f"no preimage under S for {self.name(key)}")
        return self._Sinv[key]

    def antipode(self, u: SparseElement, power: int = 1) -> SparseElement:
        step = self._antipode_key if power >= 0 else self._antipode_inverse_key
        for _ in range(abs(power)):
            out: dict = {}
            for key, v in u.terms.items():
                c, img = step(key)
                _acc(out, img, v * c)
            u = SparseElement(self, out)
        return u

    # -- actions ------------------------------------------------------------

    def left_hit(self, f, h: SparseElement) -> SparseElement:
        """f -> h = f(h_2) h_1 for f a Character or SparseFunctional."""
        out: dict = {}
        for key, v in h.terms.items():
            for (l, r), c in self.comul_key(key).items():
                w = _eval(f, r, self)
                if not w.is_zero():
                    _acc(out, l, v * c * w)
        return SparseElement(self, out)

    def right_hit(self, h: SparseElement, f) -> SparseElement:
        """h <- f = f(h_1) h_2."""
        out: dict = {}
        for key, v in h.terms.items():
            for (l, r), c in self.comul_key(key).items():
                w = _eval(f, l, self)
                if not w.is_zero():
                    _acc(out, r, v * c * w)
        return SparseElement(self, out)


def _eval(f, key, B) -> Scalar:
    if isinstance(f, Character):
        return f.value(key)
    return f.terms.get(key, B.field.zero)


def right_integral(B: Bicross) -> SparseFunctional:
    """Lambda = p_(x^(n-1)) (x) p_e."""
    return SparseFunctional(B, {(0, B.n - 1, 0): B.field.one})


# -- window axioms --------------------------------------------------------------

def _tensor_mul(B, s: dict, t: dict) -> dict:
    out: dict = {}
    for (a, b), x in s.items():
        for (c, d), y in t.items():
            l = B.mul_key(a, c)
            r = B.mul_key(b, d)
            if l is None or r is None:
                continue
            _acc(out, (l[1], r[1]), x * y * l[0] * r[0])
    return out


def verify_window_axioms(B: Bicross, K: int = DEFAULT_WINDOW, pair_window: int | None = None) -> VerificationReport:
    """Hopf axioms on basis elements with |k| <= K.

    Single-element axioms use the whole window. Pair and triple axioms use
    all Taft parts with |k| <= pair_window (default min(K, 1)); the kA factor
    only adds exponents, so a smaller k-range already exercises every product.
    """
    pw = min(K, 1) if pair_window is None else pair_window
    W = B.window(K)
    P = B.window(pw)
    one = B.field.one
    rep = VerificationReport()
    note = f"window |k| <= {K}, pairs/triples |k| <= {pw}"

    def assoc():
        for a, b, c in product(P, repeat=3):
            ab = B.mul_key(a, b)
            bc = B.mul_key(b, c)
            lhs = None if ab is None else B.mul_key(ab[1], c)
            rhs = None if bc is None else B.mul_key(a, bc[1])
            lv = {} if lhs is None else {lhs[1]: ab[0] * lhs[0]}
            rv = {} if rhs is None else {rhs[1]: bc[0] * rhs[0]}
            yield tuple(B.name(z) for z in (a, b, c)), _fmt(B, lv), _fmt(B, rv)

    w = first_mismatch(assoc())
    rep.add("associativity", w is None, w, note)

    def unit():
        for a in W:
            h = SparseElement(B, {a: one})
            yield B.name(a), B.one() * h, h
            yield B.name(a), h * B.one(), h

    w = first_mismatch(unit())
    rep.add("unit", w is None, w, note)

    def coassoc():
        for a in W:
            left: dict = {}
            right: dict = {}
            for (l, r), c in B.comul_key(a).items():
                for (ll, lr), d in B.comul_key(l).items():
                    _acc(left, (ll, lr, r), c * d)
                for (rl, rr), d in B.comul_key(r).items():
                    _acc(right, (l, rl, rr), c * d)
            yield B.name(a), _fmt3(B, left), _fmt3(B, right)

    w = first_mismatch(coassoc())
    rep.add("coassociativity", w is None, w, note)

    def counit_ax():
        for a in W:
            left: dict = {}
            right: dict = {}
            for (l, r), c in B.comul_key(a).items():
                if l[1] == 0:
                    _acc(left, r, c)
                if r[1] == 0:
                    _acc(right, l, c)
            yield B.name(a), _fmt(B, left), _fmt(B, {a: one})
            yield B.name(a), _fmt(B, right), _fmt(B, {a: one})

    w = first_mismatch(counit_ax())
    rep.add("counit", w is None, w, note)

    def delta_mult():
        for a, b in product(P, repeat=2):
            ab = B.mul_key(a, b)
            lhs = {} if ab is None else {p: c * ab[0] for p, c in B.comul_key(ab[1]).items()}
            rhs = _tensor_mul(B, B.comul_key(a), B.comul_key(b))
            yield (B.name(a), B.name(b)), _fmt2(B, lhs), _fmt2(B, rhs)

    w = first_mismatch(delta_mult())
    rep.add("comult-multiplicative", w is None, w, note)

    def eps_mult():
        for a, b in product(P, repeat=2):
            ab = B.mul_key(a, b)
            lhs = B.field.zero if ab is None or ab[1][1] else ab[0]
            rhs = one if a[1] == 0 and b[1] == 0 else B.field.zero
            yield (B.name(a), B.name(b)), lhs, rhs

    w = first_mismatch(eps_mult())
    rep.add("counit-multiplicative", w is None, w, note)

    def antipode_ax():
        for a in W:
            h = SparseElement(B, {a: one})
            target = B.one().scale(B.counit(h))
            left = SparseElement(B, {})
            right = SparseElement(B, {})
            for (l, r), c in B.comul_key(a).items():
                L = SparseElement(B, {l: c})
                R = SparseElement(B, {r: one})
                left = left + B.antipode(L) * R
                right = right + L * B.antipode(R)
            yield B.name(a), left, target
            yield B.name(a), right, target

    w = first_mismatch(antipode_ax())
    rep.add("antipode", w is None, w, note)

    def inverse():
        for a in W:
            h = SparseElement(B, {a: one})
            yield B.name(a), B.antipode(B.antipode(h), -1), h
            yield B.name(a), B.antipode(B.antipode(h, -1)), h

    w = first_mismatch(inverse())
    rep.add("antipode-inverse", w is None, w, note)
    rep.values["window"] = K
    return rep


def _fmt(B, d: dict) -> str:
    return str(SparseElement(B, d))


def _fmt2(B, d: dict) -> str:
    if not d:
        return "0"
    return " + ".join(f"({d[p]})*{B.name(p[0])}|{B.name(p[1])}" for p in sorted(d))


def _fmt3(B, d: dict) -> str:
    if not d:
        return "0"
    return " + ".join(f"({d[p]})*{B.name(p[0])}|{B.name(p[1])}|{B.name(p[2])}" for p in sorted(d))


# -- integral and grouplikes ------------------------------------------------------

def verify_right_integral(B: Bicross, K: int = DEFAULT_WINDOW) -> VerificationReport:
    Lam = right_integral(B)
    rep = VerificationReport()

    def check():
        for a in B.window(K):
            h = B.element({a: 1})
            lhs = B.right_hit(h, Lam)
            yield B.name(a), lhs, B.one().scale(Lam(h))

    w = first_mismatch(check())
    rep.add("right-integral", w is None, w, f"window |k| <= {K}")
    rep.values["window"] = K
    return rep


def distinguished_g_bicross(B: Bicross, K: int = DEFAULT_WINDOW) -> SparseElement:
    """g from h_1 Lam(h_2) = Lam(h) g, verified on the window."""
    Lam = right_integral(B)
    wit = B.basis(0, B.n - 1, 0)
    g = B.left_hit(Lam, wit).scale(Lam(wit).inv())
    for a in B.window(K):
        h = B.element({a: 1})
        if B.left_hit(Lam, h) != g.scale(Lam(h)):
            raise InconsistentG(f"h_1 Lam(h_2) != Lam(h) g at {B.name(a)}")
    expected = B.basis(B.n - 1, 0, B.n - 1)
    if g != expected:
        raise InconsistentG(f"g = {g}, expected {expected}")
    return g


def _sparse_order(step, start, is_one, bound) -> OrderResult:
    cur = start
    for m in range(1, bound + 1):
        if is_one(cur):
            return OrderResult(m, bound)
        cur = step(cur)
    return OrderResult(EXCEEDS, bound)


def order_of_grouplike_bicross(g: SparseElement, bound: int) -> OrderResult:
    one = g.algebra.one()
    return _sparse_order(lambda x: x * g, g, lambda x: x == one, bound)


def order_of_character_bicross(alpha: Character, bound: int) -> OrderResult:
    B = alpha.algebra
    eps = Character(B, 1, 0, 1)
    return _sparse_order(lambda f: f * alpha, alpha, lambda f: f == eps, bound)


def order_of_antipode_bicross(B: Bicross, K: int, bound: int) -> OrderResult:
    """Least m with S^m = id on every window basis element."""
    W = [B.element({a: 1}) for a in B.window(K)]
    cur = [B.antipode(h) for h in W]
    for m in range(1, bound + 1):
        if all(x == h for x, h in zip(cur, W)):
            return OrderResult(m, bound)
        cur = [B.antipode(x) for x in cur]
    return OrderResult(EXCEEDS, bound)


def solve_omega(B: Bicross, hs, K: int) -> list:
    """Omega(h) with Omega(h) -> Lam = Lam <- h, i.e. Lam(x Omega(h)) = Lam(h x).

    The unknown runs over window-supported elements; test elements x run over
    the same window, which already gives a nondegenerate pairing.
    """
    Lam = right_integral(B)
    W = B.window(K)
    rows = []
    for x in W:
        ex = B.element({x: 1})
        rows.append([Lam(ex * B.element({y: 1})) for y in W])
    M = Matrix.from_rows(rows, B.field)
    if rank(M) != len(W):
        raise SolveFailure("the window pairing for Omega is degenerate")
    rhs = [tuple(Lam(h * B.element({x: 1})) for x in W) for h in hs]
    cols = solve_columns(M, rhs)
    if cols is None:
        raise SolveFailure("Omega(h) is not window-supported")
    return [SparseElement(B, dict(zip(W, col))) for col in cols]


def distinguished_alpha_bicross(B: Bicross, K: int = 2) -> Character:
    """alpha from alpha^-1 = epsilon o Omega, solved on the window.

    alpha^-1 = alpha o S is read off on the generators, inverted, and then
    checked against epsilon o Omega on every window basis element.
    """
    gens = [B.basis(1, 0, 0), B.basis(0, 1, 0), B.basis(0, 0, 1)]
    omegas = solve_omega(B, gens, K)
    ainv = Character(B, *(B.counit(o) for o in omegas))
    # a character of this algebra: alpha(x) = 0 forced by x^n = 0, grouplikes invert
    alpha = Character(B, ainv.c.inv(), ainv.x, ainv.a.inv())
    if not ainv.x.is_zero():
        raise SolveFailure("alpha^-1 does not vanish on x")
    W = B.window(K)
    omegas = solve_omega(B, [B.element({a: 1}) for a in W], K)
    for a, o in zip(W, omegas):
        h = B.element({a: 1})
        if B.counit(o) != ainv(h):
            raise SolveFailure(f"epsilon o Omega is not a character at {B.name(a)}")
        if ainv(h) != alpha(B.antipode(h)):
            raise SolveFailure(f"alpha o S differs from alpha^-1 at {B.name(a)}")
    if not is_primitive_root(alpha.c, B.n) or not alpha.a == B.field.one:
        raise SolveFailure(f"alpha has unexpected generator values {alpha.table()}")
    return alpha


def verify_s4_bicross(B: Bicross, K: int = DEFAULT_WINDOW, alpha: Character | None = None,
                      g: SparseElement | None = None) -> VerificationReport:
    alpha = distinguished_alpha_bicross(B) if alpha is None else alpha
    g = distinguished_g_bicross(B, K) if g is None else g
    g_inv = B.antipode(g)
    alpha_inv = Character(B, alpha.c.inv(), alpha.x, alpha.a.inv())
    rep = VerificationReport()
    rep.add("grouplike-inverse", g * g_inv == B.one(), witness("g", g * g_inv, "1"))

    def check():
        for a in B.window(K):
            h = B.element({a: 1})
            lhs = B.antipode(h, 4)
            rhs = g * B.right_hit(B.left_hit(alpha, h), alpha_inv) * g_inv
            yield B.name(a), lhs, rhs

    w = first_mismatch(check())
    rep.add("s4-formula", w is None, w, f"window |k| <= {K}")
    rep.values["window"] = K
    return rep


def bicross_battery(n: int, K: int = DEFAULT_WINDOW, bound: int = 100) -> VerificationReport:
    B = Bicross(n)
    rep = VerificationReport()
    rep.extend(verify_window_axioms(B, K), "axioms-")
    rep.extend(verify_right_integral(B, K))
    g = distinguished_g_bicross(B, K)
    alpha = distinguished_alpha_bicross(B)
    rep.extend(verify_s4_bicross(B, K, alpha, g))
    rep.values["g"] = str(g)
    rep.values["alpha"] = alpha.table()
    rep.values["order-S"] = order_of_antipode_bicross(B, K, bound).value
    rep.values["order-alpha"] = order_of_character_bicross(alpha, bound).value
    rep.values["order-g"] = order_of_grouplike_bicross(g, bound).value
    rep.values["order-bound"] = bound
    rep.values["window"] = K
    return rep.sorted()


def taft_embedding_checks(n: int) -> VerificationReport:
    """h -> h (x) a^0 against the finite Taft algebra over the same q."""
    B = Bicross(n)
    T = taft(n, B.field, B.q)
    rep = VerificationReport()

    def embed(h: ElementFD) -> SparseElement:
        return B.element({(i % n, i // n, 0): c for i, c in enumerate(h.coeffs) if not c.is_zero()})

    basis = [T.basis_element(i) for i in range(T.dim)]

    def mult():
        for u, v in product(basis, repeat=2):
            yield (str(u), str(v)), embed(u * v), embed(u) * embed(v)

    w = first_mismatch(mult())
    rep.add("embedding-mult", w is None, w)
    w = first_mismatch((str(u), T.epsilon()(u), B.counit(embed(u))) for u in basis)
    rep.add("embedding-counit", w is None, w)

    def comul_agrees():
        for i, u in enumerate(basis):
            mine = B.comul(embed(u))
            theirs = {}
            for j, k, c in T.comult[i]:
                theirs[(j % n, j // n, 0), (k % n, k // n, 0)] = c
            if mine != theirs:
                return False
        return True

    rep.values["embedding-comult-commutes"] = comul_agrees()
    return rep
