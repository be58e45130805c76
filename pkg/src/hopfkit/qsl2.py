"""k[SL_q(2)] over Q(q) in the PBW basis a^i b^j c^k d^l with i = 0 or l = 0.

Relations: ba = qab, ca = qac, db = qbd, dc = qcd, bc = cb,
da - q bc = 1, ad - q^-1 bc = 1.

Products are formed by right-multiplying a normal-form monomial by one
generator at a time; each rule below lands back in normal form.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product

from .errors import SolveFailure
from .linalg import Matrix, solve_columns
from .radford import EXCEEDS, OrderResult
from .report import VerificationReport, first_mismatch, witness
from .scalar import FieldSpec, Scalar, quantum_integer

QF = FieldSpec.rational_functions("q")
GENS = "abcd"
_GEN_MONO = {"a": (1, 0, 0, 0), "b": (0, 1, 0, 0), "c": (0, 0, 1, 0), "d": (0, 0, 0, 1)}
DEFAULT_DEGREE = 6

q = QF.gen()
ONE = QF.one
ZERO = QF.zero


@lru_cache(maxsize=None)
def qpow(e: int) -> Scalar:
    return q ** e


def _acc(d: dict, key, v):
    nv = d[key] + v if key in d else v
    if nv.is_zero():
        d.pop(key, None)
    else:
        d[key] = nv


def mono_name(m) -> str:
    parts = []
    for g, e in zip(GENS, m):
        if e:
            parts.append(g if e == 1 else f"{g}^{e}")
    return "".join(parts) or "1"


def degree(m) -> int:
    return sum(m)


def monomials(D: int) -> list:
    """PBW monomials of total degree <= D, sorted by degree then exponents."""
    out = []
    for tot in range(D + 1):
        for i in range(tot + 1):
            for j in range(tot - i + 1):
                for k in range(tot - i - j + 1):
                    l = tot - i - j - k
                    if i == 0 or l == 0:
                        out.append((i, j, k, l))
    return out


class QslElement:
    __slots__ = ("terms",)

    def __init__(self, terms: dict):
        self.terms = {m: v for m, v in terms.items() if not v.is_zero()}

    @classmethod
    def monomial(cls, m, coef=ONE) -> "QslElement":
        return cls({tuple(m): QF(coef)})

    @classmethod
    def gen(cls, g: str) -> "QslElement":
        return cls.monomial(_GEN_MONO[g])

    @classmethod
    def scalar(cls, s) -> "QslElement":
        return cls.monomial((0, 0, 0, 0), s)

    def __add__(self, other):
        out = dict(self.terms)
        for m, v in other.terms.items():
            _acc(out, m, v)
        return QslElement(out)

    def __sub__(self, other):
        return self + other.scale(-ONE)

    def scale(self, s):
        s = QF(s)
        return QslElement({m: v * s for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, QslElement):
            return qsl_mul(self, other)
        return self.scale(other)

    def __rmul__(self, s):
        return self.scale(s)

    def __eq__(self, other):
        return isinstance(other, QslElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: (degree(m), m)):
            c = str(self.terms[m])
            name = mono_name(m)
            if name == "1":
                parts.append(c)
            elif c == "1":
                parts.append(name)
            else:
                parts.append(f"({c})*{name}")
        return " + ".join(parts)

    __repr__ = __str__


# -- rewriting ----------------------------------------------------------------------

@lru_cache(maxsize=None)
def _times_gen(m, g: str) -> tuple:
    """Normal form of m * g as a tuple of (monomial, coefficient)."""
    i, j, k, l = m
    if g == "b":
        return (((i, j + 1, k, l), qpow(l)),)
    if g == "c":
        return (((i, j, k + 1, l), qpow(l)),)
    if g == "d":
        if i == 0:
            return (((0, j, k, l + 1), ONE),)
        # b^j c^k d = q^-(j+k) d b^j c^k and ad = 1 + q^-1 bc
        s = qpow(-(j + k))
        return (((i - 1, j, k, 0), s), ((i - 1, j + 1, k + 1, 0), s * qpow(-1)))
    if g == "a":
        if l == 0:
            return (((i + 1, j, k, 0), qpow(j + k)),)
        # d^l a = d^(l-1) + q^(2l-1) bc d^(l-1)
        return (((0, j, k, l - 1), ONE), ((0, j + 1, k + 1, l - 1), qpow(2 * l - 1)))
    raise ValueError(f"unknown generator {g!r}")


def _word(m) -> str:
    return "".join(g * e for g, e in zip(GENS, m))


@lru_cache(maxsize=None)
def _mono_mul(m1, m2) -> tuple:
    cur = {m1: ONE}
    for g in _word(m2):
        nxt: dict = {}
        for m, v in cur.items():
            for m3, c in _times_gen(m, g):
                _acc(nxt, m3, v * c)
        cur = nxt
    return tuple(cur.items())


def qsl_mul(u: QslElement, v: QslElement) -> QslElement:
    out: dict = {}
    for m1, x in u.terms.items():
        for m2, y in v.terms.items():
            xy = x * y
            for m3, c in _mono_mul(m1, m2):
                _acc(out, m3, xy * c)
    return QslElement(out)


def normal_form(word) -> QslElement:
    """Normal form of a word in the generators, e.g. "da" -> 1 + q bc."""
    out = QslElement.scalar(ONE)
    for g in word:
        if g not in _GEN_MONO:
            raise ValueError(f"unknown generator {g!r} in word {word!r}")
        out = out * QslElement.gen(g)
    return out


# -- coalgebra ----------------------------------------------------------------------

_GEN_DELTA = {
    "a": ((_GEN_MONO["a"], _GEN_MONO["a"]), (_GEN_MONO["b"], _GEN_MONO["c"])),
    "b": ((_GEN_MONO["a"], _GEN_MONO["b"]), (_GEN_MONO["b"], _GEN_MONO["d"])),
    "c": ((_GEN_MONO["c"], _GEN_MONO["a"]), (_GEN_MONO["d"], _GEN_MONO["c"])),
    "d": ((_GEN_MONO["c"], _GEN_MONO["b"]), (_GEN_MONO["d"], _GEN_MONO["d"])),
}


def tensor_mul(s: dict, t: dict) -> dict:
    out: dict = {}
    for (a, b), x in s.items():
        for (c, d), y in t.items():
            xy = x * y
            for l, cl in _mono_mul(a, c):
                for r, cr in _mono_mul(b, d):
                    _acc(out, (l, r), xy * cl * cr)
    return out


@lru_cache(maxsize=None)
def _comul_mono(m) -> tuple:
    if degree(m) == 0:
        return (((m, m), ONE),)
    # peel the last generator: m = m' * g in normal form (no rewriting needed)
    last = _word(m)[-1]
    mp = list(m)
    mp[GENS.index(last)] -= 1
    prev = dict(_comul_mono(tuple(mp)))
    gen = {pair: ONE for pair in _GEN_DELTA[last]}
    return tuple(tensor_mul(prev, gen).items())


def qsl_comul(u: QslElement) -> dict:
    out: dict = {}
    for m, x in u.terms.items():
        for pair, c in _comul_mono(m):
            _acc(out, pair, x * c)
    return out


def qsl_counit(u: QslElement) -> Scalar:
    acc = ZERO
    for (i, j, k, l), v in u.terms.items():
        if j == 0 and k == 0:
            acc = acc + v
    return acc


_S_GEN = {"a": ("d", ONE), "b": ("b", -q), "c": ("c", -q.inv()), "d": ("a", ONE)}
_SINV_GEN = {"a": ("d", ONE), "b": ("b", -q.inv()), "c": ("c", -q), "d": ("a", ONE)}


@lru_cache(maxsize=None)
def _antipode_mono(m, inverse: bool) -> tuple:
    table = _SINV_GEN if inverse else _S_GEN
    coef = ONE
    word = ""
    for g in reversed(_word(m)):
        img, c = table[g]
        coef = coef * c
        word += img
    return tuple(normal_form(word).scale(coef).terms.items())


def qsl_antipode(u: QslElement, power: int = 1) -> QslElement:
    inverse = power < 0
    for _ in range(abs(power)):
        out: dict = {}
        for m, x in u.terms.items():
            for m2, c in _antipode_mono(m, inverse):
                _acc(out, m2, x * c)
        u = QslElement(out)
    return u


# -- functionals --------------------------------------------------------------------

def lambda_mono(m) -> Scalar:
    i, j, k, l = m
    if i == 0 and l == 0 and j == k:
        sign = ONE if j % 2 == 0 else -ONE
        return sign / quantum_integer(j + 1, QF)
    return ZERO


def lambda_eval(u: QslElement) -> Scalar:
    """The left integral: lambda(b^m c^m) = (-1)^m / [m+1], zero on other monomials."""
    acc = ZERO
    for m, v in u.terms.items():
        lm = lambda_mono(m)
        if not lm.is_zero():
            acc = acc + v * lm
    return acc


def character(values: dict):
    """Algebra map with the given values on a, b, c, d, evaluated on monomials."""
    vals = [QF(values[g]) for g in GENS]

    def ev(u: QslElement) -> Scalar:
        acc = ZERO
        for m, v in u.terms.items():
            t = v
            for x, e in zip(vals, m):
                if e:
                    t = t * x ** e
            acc = acc + t
        return acc

    return ev


PAPER_ALPHA = {"a": q ** -2, "b": ZERO, "c": ZERO, "d": q ** 2}
PAPER_CHI = {"a": q ** -2, "b": ONE, "c": ONE, "d": q ** 2}  # chi(u) = PAPER_CHI[u] * u


def left_hit(f, h: QslElement) -> QslElement:
    """f -> h = f(h_2) h_1."""
    out: dict = {}
    for (l, r), c in qsl_comul(h).items():
        w = f(QslElement.monomial(r))
        if not w.is_zero():
            _acc(out, l, c * w)
    return QslElement(out)


def right_hit(h: QslElement, f) -> QslElement:
    """h <- f = f(h_1) h_2."""
    out: dict = {}
    for (l, r), c in qsl_comul(h).items():
        w = f(QslElement.monomial(l))
        if not w.is_zero():
            _acc(out, r, c * w)
    return QslElement(out)


# -- verification ------------------------------------------------------------------

WINDOW_NOTE = "window check: identities verified on PBW monomials of degree <= {D} only"


def verify_relations() -> VerificationReport:
    rep = VerificationReport()
    rels = [
        ("ba=qab", normal_form("ba"), normal_form("ab").scale(q)),
        ("ca=qac", normal_form("ca"), normal_form("ac").scale(q)),
        ("db=qbd", normal_form("db"), normal_form("bd").scale(q)),
        ("dc=qcd", normal_form("dc"), normal_form("cd").scale(q)),
        ("bc=cb", normal_form("bc"), normal_form("cb")),
        ("da-qbc=1", normal_form("da") - normal_form("bc").scale(q), QslElement.scalar(ONE)),
        ("ad-q^-1bc=1", normal_form("ad") - normal_form("bc").scale(q.inv()), QslElement.scalar(ONE)),
    ]
    w = first_mismatch(rels)
    rep.add("relations", w is None, w)
    return rep


def verify_window_axioms(D: int = 3) -> VerificationReport:
    rep = verify_relations()
    ms = monomials(D)
    E = [QslElement.monomial(m) for m in ms]
    names = [mono_name(m) for m in ms]
    note = WINDOW_NOTE.format(D=D)
    deg = [degree(m) for m in ms]
    one = QslElement.scalar(ONE)

    def assoc():
        for a, b, c in product(range(len(ms)), repeat=3):
            if deg[a] + deg[b] + deg[c] <= D:
                yield (names[a], names[b], names[c]), (E[a] * E[b]) * E[c], E[a] * (E[b] * E[c])

    w = first_mismatch(assoc())
    rep.add("associativity", w is None, w, note)

    w = first_mismatch((n, one * e, e) for n, e in zip(names, E))
    w = w or first_mismatch((n, e * one, e) for n, e in zip(names, E))
    rep.add("unit", w is None, w, note)

    def coassoc():
        for n, e in zip(names, E):
            left: dict = {}
            right: dict = {}
            for (l, r), c in qsl_comul(e).items():
                for (ll, lr), d in _comul_mono(l):
                    _acc(left, (ll, lr, r), c * d)
                for (rl, rr), d in _comul_mono(r):
                    _acc(right, (l, rl, rr), c * d)
            yield n, _fmt3(left), _fmt3(right)

    w = first_mismatch(coassoc())
    rep.add("coassociativity", w is None, w, note)

    def counit_ax():
        for n, e in zip(names, E):
            left = QslElement({})
            right = QslElement({})
            for (l, r), c in qsl_comul(e).items():
                left = left + QslElement.monomial(r, c * qsl_counit(QslElement.monomial(l)))
                right = right + QslElement.monomial(l, c * qsl_counit(QslElement.monomial(r)))
            yield n, left, e
            yield n, right, e

    w = first_mismatch(counit_ax())
    rep.add("counit", w is None, w, note)

    def delta_mult():
        for a, b in product(range(len(ms)), repeat=2):
            if deg[a] + deg[b] <= D:
                lhs = qsl_comul(E[a] * E[b])
                rhs = tensor_mul(dict(_comul_mono(ms[a])), dict(_comul_mono(ms[b])))
                yield (names[a], names[b]), _fmt2(lhs), _fmt2(rhs)

    w = first_mismatch(delta_mult())
    rep.add("comult-multiplicative", w is None, w, note)

    def eps_mult():
        for a, b in product(range(len(ms)), repeat=2):
            if deg[a] + deg[b] <= D:
                yield (names[a], names[b]), qsl_counit(E[a] * E[b]), qsl_counit(E[a]) * qsl_counit(E[b])

    w = first_mismatch(eps_mult())
    rep.add("counit-multiplicative", w is None, w, note)

    def antipode_ax():
        for n, e in zip(names, E):
            target = one.scale(qsl_counit(e))
            left = QslElement({})
            right = QslElement({})
            for (l, r), c in qsl_comul(e).items():
                L, R = QslElement.monomial(l, c), QslElement.monomial(r)
                left = left + qsl_antipode(L) * R
                right = right + L * qsl_antipode(R)
            yield n, left, target
            yield n, right, target

    w = first_mismatch(antipode_ax())
    rep.add("antipode", w is None, w, note)

    def inverse():
        for n, e in zip(names, E):
            yield n, qsl_antipode(qsl_antipode(e), -1), e
            yield n, qsl_antipode(qsl_antipode(e, -1)), e

    w = first_mismatch(inverse())
    rep.add("antipode-inverse", w is None, w, note)

    w = first_mismatch((n, normal_form(_word(m)), e) for n, m, e in zip(names, ms, E))
    rep.add("normal-form-idempotent", w is None, w, note)
    rep.values["degree"] = D
    return rep


def _fmt2(d: dict) -> str:
    if not d:
        return "0"
    return " + ".join(f"({d[p]})*{mono_name(p[0])}|{mono_name(p[1])}" for p in sorted(d))


def _fmt3(d: dict) -> str:
    if not d:
        return "0"
    return " + ".join(f"({d[p]})*{mono_name(p[0])}|{mono_name(p[1])}|{mono_name(p[2])}" for p in sorted(d))


def verify_left_integral(D: int = DEFAULT_DEGREE) -> VerificationReport:
    """h_1 lambda(h_2) = lambda(h) 1 on all monomials of degree <= D."""
    rep = VerificationReport()

    def check():
        for m in monomials(D):
            h = QslElement.monomial(m)
            yield mono_name(m), left_hit(lambda_eval, h), QslElement.scalar(lambda_eval(h))

    w = first_mismatch(check())
    rep.add("qsl2-left-integral", w is None, w, WINDOW_NOTE.format(D=D))
    rep.values["degree"] = D
    return rep


def solve_chi(D: int = DEFAULT_DEGREE, unknown_degree: int = 2) -> dict:
    """chi(u) for each generator, solved from lambda(y h) = lambda(h u) for h of degree <= D.

    The unknown y runs over monomials of degree <= unknown_degree.
    Returns {generator: QslElement}.
    """
    ys = monomials(unknown_degree)
    hs = monomials(D)
    Y = [QslElement.monomial(m) for m in ys]
    Hs = [QslElement.monomial(m) for m in hs]
    rows = [[lambda_eval(y * h) for y in Y] for h in Hs]
    M = Matrix.from_rows(rows, QF)
    rhs = [tuple(lambda_eval(h * QslElement.gen(g)) for h in Hs) for g in GENS]
    cols = solve_columns(M, rhs)
    if cols is None:
        raise SolveFailure("chi(u) has no solution supported in the chosen degree window")
    return {g: QslElement(dict(zip(ys, col))) for g, col in zip(GENS, cols)}


def verify_chi_alpha(D: int = DEFAULT_DEGREE) -> VerificationReport:
    rep = VerificationReport()
    note = WINDOW_NOTE.format(D=D)
    Hs = [(mono_name(m), QslElement.monomial(m)) for m in monomials(D)]
    chi = {g: QslElement.gen(g).scale(PAPER_CHI[g]) for g in GENS}
    alpha = character(PAPER_ALPHA)

    # (1) u -> lambda = lambda <- chi(u): lambda(h u) = lambda(chi(u) h)
    for g in GENS:
        u = QslElement.gen(g)
        w = first_mismatch((n, lambda_eval(h * u), lambda_eval(chi[g] * h)) for n, h in Hs)
        rep.add(f"chi-defining-relation-{g}", w is None, w, note)

    # (2) chi(u) = alpha(u_2) S^-2(u_1)
    for g in GENS:
        u = QslElement.gen(g)
        closed = QslElement({})
        for (l, r), c in qsl_comul(u).items():
            a = alpha(QslElement.monomial(r))
            if not a.is_zero():
                closed = closed + qsl_antipode(QslElement.monomial(l, c * a), -2)
        rep.add(f"chi-closed-form-{g}", closed == chi[g], witness(g, closed, chi[g]))

    # (3) lambda is also a right integral, so g = 1
    w = first_mismatch((n, right_hit(h, lambda_eval), QslElement.scalar(lambda_eval(h))) for n, h in Hs)
    rep.add("g-trivial", w is None, w, note)

    # the solved chi and alpha = epsilon o chi match the stated values
    solved = solve_chi(min(D, 4))
    for g in GENS:
        rep.add(f"chi-solved-{g}", solved[g] == chi[g], witness(g, solved[g], chi[g]))
    solved_alpha = {g: qsl_counit(solved[g]) for g in GENS}
    for g in GENS:
        rep.add(f"alpha-{g}", solved_alpha[g] == PAPER_ALPHA[g], witness(g, solved_alpha[g], PAPER_ALPHA[g]))
    lam_da = lambda_eval(normal_form("da"))
    expected = (q ** 2 + 1).inv()
    rep.add("lambda-da", lam_da == expected, witness("da", lam_da, expected))
    rep.values["alpha"] = {g: str(v) for g, v in solved_alpha.items()}
    rep.values["chi"] = {g: str(solved[g]) for g in GENS}
    rep.values["degree"] = D
    return rep


def solved_alpha(D: int = DEFAULT_DEGREE) -> dict:
    """alpha = epsilon o chi on the generators, with chi from :func:`solve_chi`."""
    chi = solve_chi(min(D, 4))
    return {g: qsl_counit(chi[g]) for g in GENS}


def verify_s4_qsl(D: int = DEFAULT_DEGREE, monomial_degree: int = 2, alpha_values: dict | None = None) -> VerificationReport:
    """S^4(h) = alpha -> h <- alpha^-1 (g = 1) on generators and low-degree monomials.

    alpha is the solved one unless ``alpha_values`` is given.
    """
    vals = solved_alpha(D) if alpha_values is None else alpha_values
    alpha = character(vals)
    # alpha^-1 = alpha o S; on generators S is a -> d, b -> -qb, c -> -q^-1 c, d -> a
    alpha_inv = character({"a": vals["d"], "b": -q * vals["b"], "c": -q.inv() * vals["c"], "d": vals["a"]})

    rep = VerificationReport()

    def check():
        for m in monomials(monomial_degree)[1:]:
            h = QslElement.monomial(m)
            yield mono_name(m), qsl_antipode(h, 4), right_hit(left_hit(alpha, h), alpha_inv)

    w = first_mismatch(check())
    rep.add("s4-formula", w is None, w, f"monomials of degree <= {monomial_degree}; alpha from degree {D}")
    return rep


def antipode_order(bound: int = 100):
    """Least m <= bound with S^m fixing a, b, c, d, else exceeds-bound."""
    gens = [QslElement.gen(g) for g in GENS]
    cur = [qsl_antipode(x) for x in gens]
    for m in range(1, bound + 1):
        if cur == gens:
            return OrderResult(m, bound)
        cur = [qsl_antipode(x) for x in cur]
    return OrderResult(EXCEEDS, bound)


def qsl2_battery(D: int = DEFAULT_DEGREE, bound: int = 100) -> VerificationReport:
    rep = VerificationReport()
    rep.extend(verify_window_axioms(min(D, 3)), "axioms-")
    rep.extend(verify_left_integral(D))
    rep.extend(verify_chi_alpha(D))
    rep.extend(verify_s4_qsl(D))
    rep.values["order-S"] = antipode_order(bound).value
    rep.values["order-bound"] = bound
    rep.values["degree"] = D
    rep.values["limitation"] = WINDOW_NOTE.format(D=D)
    return rep.sorted()
