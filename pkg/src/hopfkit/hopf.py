"""Finite-dimensional Hopf algebras given by structure constants.

Conventions for the four harpoon actions (f a functional, h an element):

    f -> h  = f(h_2) h_1        h <- f  = f(h_1) h_2
    <h -> f, x> = f(x h)        <f <- h, x> = f(h x)

Linear maps are matrices whose column c holds the image of basis vector c.
"""
from __future__ import annotations

from .errors import AlgebraMismatch, AxiomFailure, DivisionByZero
from .linalg import Matrix
from .report import VerificationReport, first_mismatch
from .scalar import FieldSpec, Scalar


def _sparse(vec_like, field) -> tuple:
    """Canonical sparse vector: sorted tuple of (index, nonzero Scalar)."""
    if isinstance(vec_like, dict):
        items = vec_like.items()
    elif vec_like and isinstance(vec_like[0], tuple):
        items = vec_like
    else:
        items = enumerate(vec_like)
    out = []
    for k, v in items:
        v = field(v)
        if not v.is_zero():
            out.append((k, v))
    return tuple(sorted(out, key=lambda kv: kv[0]))


def _acc(target: dict, key, value):
    if key in target:
        nv = target[key] + value
        if nv.is_zero():
            del target[key]
        else:
            target[key] = nv
    elif not value.is_zero():
        target[key] = value


class HopfPresentation:
    """Structure constants of a finite-dimensional Hopf algebra.

    ``mult`` maps ``(i, j)`` to the coordinates of e_i e_j; ``comult[i]`` lists
    triples ``(j, k, c)`` with Delta(e_i) = sum c e_j (x) e_k. The object is
    immutable in practice; axioms are checked once by :func:`verified`.
    """

    def __init__(self, field: FieldSpec, basis, mult, unit, comult, counit, antipode,
                 antipode_inverse=None, name: str | None = None):
        self.field = field
        self.basis = tuple(str(b) for b in basis)
        n = self.dim = len(self.basis)
        self.name = name or f"algebra[{n}]"
        table = {}
        for (i, j), vec in dict(mult).items():
            sv = _sparse(vec, field)
            if sv:
                table[i, j] = sv
        self.mult = table
        self.unit = tuple(field(v) for v in unit)
        self.comult = tuple(
            tuple((j, k, field(c)) for j, k, c in comult[i] if not field(c).is_zero())
            for i in range(n)
        )
        self.counit = tuple(field(v) for v in counit)
        if not isinstance(antipode, Matrix):
            antipode = Matrix.from_rows(antipode, field)
        self.antipode = antipode
        if antipode_inverse is not None and not isinstance(antipode_inverse, Matrix):
            antipode_inverse = Matrix.from_rows(antipode_inverse, field)
        self._antipode_inverse = antipode_inverse
        self._powers = {1: antipode}
        self._axioms = None
        if len(self.unit) != n or len(self.counit) != n or antipode.nrows != n or antipode.ncols != n:
            raise ValueError("structure tables do not match the dimension")

    def __repr__(self):
        return f"HopfPresentation({self.name}, dim={self.dim}, field={self.field.label})"

    @property
    def antipode_inverse(self) -> Matrix:
        if self._antipode_inverse is None:
            try:
                self._antipode_inverse = self.antipode.inverse()
            except DivisionByZero:
                raise AxiomFailure("antipode is not bijective") from None
        return self._antipode_inverse

    def antipode_power(self, k: int) -> Matrix:
        """S^k as a matrix; negative k uses S^-1."""
        if k == 0:
            return Matrix.identity(self.dim, self.field)
        if k not in self._powers:
            base = self.antipode if k > 0 else self.antipode_inverse
            self._powers[k] = base.power(abs(k))
        return self._powers[k]

    # -- elements and functionals ----------------------------------------

    def element(self, coeffs) -> "ElementFD":
        return ElementFD(self, coeffs)

    def basis_element(self, i) -> "ElementFD":
        if isinstance(i, str):
            i = self.basis.index(i)
        z, one = self.field.zero, self.field.one
        return ElementFD(self, [one if k == i else z for k in range(self.dim)])

    def one(self) -> "ElementFD":
        return ElementFD(self, self.unit)

    def zero(self) -> "ElementFD":
        return ElementFD(self, [self.field.zero] * self.dim)

    def functional(self, values) -> "FunctionalFD":
        return FunctionalFD(self, values)

    def dual_basis(self, i) -> "FunctionalFD":
        if isinstance(i, str):
            i = self.basis.index(i)
        z, one = self.field.zero, self.field.one
        return FunctionalFD(self, [one if k == i else z for k in range(self.dim)])

    def epsilon(self) -> "FunctionalFD":
        return FunctionalFD(self, self.counit)

    def apply(self, M: Matrix, h: "ElementFD") -> "ElementFD":
        self._own(h)
        return ElementFD(self, M.apply(h.coeffs))

    def _own(self, *objs):
        for o in objs:
            if o.algebra is not self:
                raise AlgebraMismatch(f"{o!r} does not belong to {self.name}")

    # -- raw coordinate kernels -------------------------------------------

    def _mul_coords(self, a, b) -> dict:
        acc: dict = {}
        mult = self.mult
        for i, x in a:
            for j, y in b:
                vec = mult.get((i, j))
                if vec:
                    xy = x * y
                    for k, c in vec:
                        _acc(acc, k, xy * c)
        return acc

    def _comul_coords(self, a) -> dict:
        acc: dict = {}
        for i, x in a:
            for j, k, c in self.comult[i]:
                _acc(acc, (j, k), x * c)
        return acc

    def _tensor_mul(self, s: dict, t: dict) -> dict:
        """Product in H (x) H of two coordinate tensors."""
        acc: dict = {}
        for (a, b), x in s.items():
            for (c, d), y in t.items():
                left = self.mult.get((a, c))
                right = self.mult.get((b, d))
                if not left or not right:
                    continue
                xy = x * y
                for k1, c1 in left:
                    for k2, c2 in right:
                        _acc(acc, (k1, k2), xy * c1 * c2)
        return acc

    def vector(self, coords: dict) -> tuple:
        z = self.field.zero
        return tuple(coords.get(k, z) for k in range(self.dim))


class _Vec:
    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: HopfPresentation, coeffs):
        coeffs = tuple(algebra.field(c) for c in coeffs)
        if len(coeffs) != algebra.dim:
            raise ValueError(f"expected {algebra.dim} coordinates, got {len(coeffs)}")
        self.algebra = algebra
        self.coeffs = coeffs

    def _same(self, other):
        if other.algebra is not self.algebra:
            raise AlgebraMismatch("operands belong to different presentations")

    def nonzero(self):
        return [(i, c) for i, c in enumerate(self.coeffs) if not c.is_zero()]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __add__(self, other):
        self._same(other)
        return type(self)(self.algebra, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._same(other)
        return type(self)(self.algebra, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return type(self)(self.algebra, [-a for a in self.coeffs])

    def scale(self, s):
        s = self.algebra.field(s)
        return type(self)(self.algebra, [a * s for a in self.coeffs])

    def __rmul__(self, s):
        if isinstance(s, (int, Scalar)) or hasattr(s, "denominator"):
            return self.scale(s)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, _Vec):
            return NotImplemented
        return self.algebra is other.algebra and type(self) is type(other) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((id(self.algebra), self.coeffs))

    def first_nonzero(self):
        return next(((i, c) for i, c in enumerate(self.coeffs) if not c.is_zero()), None)

    def normalized(self):
        """Scaled so the first nonzero coordinate is 1."""
        lead = self.first_nonzero()
        if lead is None:
            return self
        return self.scale(lead[1].inv())

    def proportional_to(self, other) -> bool:
        """True when both are nonzero multiples of one another."""
        a, b = self.first_nonzero(), other.first_nonzero()
        if a is None or b is None or a[0] != b[0]:
            return False
        return self.scale(a[1].inv()) == other.scale(b[1].inv())


class ElementFD(_Vec):
    __slots__ = ()

    def __mul__(self, other):
        if isinstance(other, ElementFD):
            return mul(self, other)
        if isinstance(other, _Vec):
            return NotImplemented
        return self.scale(other)

    def __repr__(self):
        return f"ElementFD({format_vector(self.coeffs, self.algebra.basis)})"

    def __str__(self):
        return format_vector(self.coeffs, self.algebra.basis)


class FunctionalFD(_Vec):
    __slots__ = ()

    def __call__(self, h: ElementFD) -> Scalar:
        self._same(h)
        acc = self.algebra.field.zero
        for a, b in zip(self.coeffs, h.coeffs):
            if a and b:
                acc = acc + a * b
        return acc

    def __mul__(self, other):
        if isinstance(other, FunctionalFD):
            return dual_functional_composition(self, other)
        if isinstance(other, _Vec):
            return NotImplemented
        return self.scale(other)

    def precompose(self, M: Matrix) -> "FunctionalFD":
        """The functional f o M."""
        return FunctionalFD(self.algebra, M.transpose().apply(self.coeffs))

    def __repr__(self):
        return f"FunctionalFD({format_vector(self.coeffs, [f'p_{b}' for b in self.algebra.basis])})"

    def __str__(self):
        return format_vector(self.coeffs, [f"p_{b}" for b in self.algebra.basis])


def format_vector(coeffs, names) -> str:
    terms = []
    for c, name in zip(coeffs, names):
        if c.is_zero():
            continue
        s = str(c)
        if s == "1":
            terms.append(name)
        elif s == "-1":
            terms.append(f"-{name}")
        elif any(ch in s[1:] for ch in "+- "):
            terms.append(f"({s})*{name}")
        else:
            terms.append(f"{s}*{name}")
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out


# -- operations ----------------------------------------------------------------

def mul(a: ElementFD, b: ElementFD) -> ElementFD:
    a._same(b)
    H = a.algebra
    return ElementFD(H, H.vector(H._mul_coords(a.nonzero(), b.nonzero())))


def comul(a: ElementFD) -> list:
    """Delta(a) as a list of (e_j, e_k, c) basis triples."""
    H = a.algebra
    return [(H.basis_element(j), H.basis_element(k), c)
            for (j, k), c in sorted(H._comul_coords(a.nonzero()).items())]


def comul_coords(a: ElementFD) -> dict:
    return a.algebra._comul_coords(a.nonzero())


def counit(a: ElementFD) -> Scalar:
    return a.algebra.epsilon()(a)


def antipode_pow(a: ElementFD, k: int) -> ElementFD:
    H = a.algebra
    return ElementFD(H, H.antipode_power(k).apply(a.coeffs))


def act_functional_on_element(f: FunctionalFD, h: ElementFD, side: str = "left") -> ElementFD:
    """left: f -> h = f(h_2) h_1;  right: h <- f = f(h_1) h_2."""
    f._same(h)
    H = h.algebra
    acc: dict = {}
    for (j, k), c in comul_coords(h).items():
        if side == "left":
            v, out = f.coeffs[k], j
        elif side == "right":
            v, out = f.coeffs[j], k
        else:
            raise ValueError(f"side must be 'left' or 'right', not {side!r}")
        if v:
            _acc(acc, out, c * v)
    return ElementFD(H, H.vector(acc))


def act_element_on_functional(h: ElementFD, f: FunctionalFD, side: str = "left") -> FunctionalFD:
    """left: <h -> f, x> = f(x h);  right: <f <- h, x> = f(h x)."""
    f._same(h)
    H = h.algebra
    hn = h.nonzero()
    values = []
    for m in range(H.dim):
        em = ((m, H.field.one),)
        if side == "left":
            coords = H._mul_coords(em, hn)
        elif side == "right":
            coords = H._mul_coords(hn, em)
        else:
            raise ValueError(f"side must be 'left' or 'right', not {side!r}")
        acc = H.field.zero
        for k, c in coords.items():
            if f.coeffs[k]:
                acc = acc + c * f.coeffs[k]
        values.append(acc)
    return FunctionalFD(H, values)


def dual_functional_composition(f: FunctionalFD, g: FunctionalFD) -> FunctionalFD:
    """Convolution (f g)(h) = f(h_1) g(h_2)."""
    f._same(g)
    H = f.algebra
    values = []
    for i in range(H.dim):
        acc = H.field.zero
        for j, k, c in H.comult[i]:
            if f.coeffs[j] and g.coeffs[k]:
                acc = acc + c * f.coeffs[j] * g.coeffs[k]
        values.append(acc)
    return FunctionalFD(H, values)


def convolution_power(f: FunctionalFD, m: int) -> FunctionalFD:
    H = f.algebra
    if m < 0:
        f = f.precompose(H.antipode)
        m = -m
    out = H.epsilon()
    for _ in range(m):
        out = dual_functional_composition(out, f)
    return out


def left_mult_matrix(h: ElementFD) -> Matrix:
    """Matrix of x -> h x."""
    H = h.algebra
    hn = h.nonzero()
    cols = [H.vector(H._mul_coords(hn, ((m, H.field.one),))) for m in range(H.dim)]
    return Matrix.from_columns(cols, H.field, H.dim)


def right_mult_matrix(h: ElementFD) -> Matrix:
    """Matrix of x -> x h."""
    H = h.algebra
    hn = h.nonzero()
    cols = [H.vector(H._mul_coords(((m, H.field.one),), hn)) for m in range(H.dim)]
    return Matrix.from_columns(cols, H.field, H.dim)


def is_grouplike(g: ElementFD) -> bool:
    gn = g.nonzero()
    square = {(j, k): x * y for j, x in gn for k, y in gn}
    return comul_coords(g) == square and counit(g) == 1


def is_cocommutative(h: ElementFD) -> bool:
    d = comul_coords(h)
    return all(d.get((k, j)) == c for (j, k), c in d.items())


def is_algebra_map(f: FunctionalFD) -> bool:
    H = f.algebra
    if f(H.one()) != 1:
        return False
    for i in range(H.dim):
        for j in range(H.dim):
            prod = sum((c * f.coeffs[k] for k, c in H.mult.get((i, j), ())), H.field.zero)
            if prod != f.coeffs[i] * f.coeffs[j]:
                return False
    return True


def tensor_str(H: HopfPresentation, coords: dict) -> str:
    if not coords:
        return "0"
    parts = []
    for (j, k), c in sorted(coords.items()):
        parts.append(f"{c}*{H.basis[j]}(x){H.basis[k]}")
    return " + ".join(parts)


# -- axioms --------------------------------------------------------------------

AXIOMS = (
    "associativity",
    "unit",
    "coassociativity",
    "counit",
    "comult-multiplicative",
    "counit-multiplicative",
    "antipode",
)


def verify_axioms(H: HopfPresentation) -> VerificationReport:
    """Seven named checks; each failure carries the first witness basis tuple."""
    n = H.dim
    one = H.field.one
    idx = range(n)
    e = [((i, one),) for i in idx]
    names = H.basis
    unit_n = tuple((k, c) for k, c in enumerate(H.unit) if c)
    rep = VerificationReport()

    def vec(v):
        return format_vector(v, names) if isinstance(v, tuple) else str(v)

    def assoc():
        for i in idx:
            for j in idx:
                ij = list(H._mul_coords(e[i], e[j]).items())
                for k in idx:
                    lhs = H._mul_coords(ij, e[k])
                    rhs = H._mul_coords(e[i], list(H._mul_coords(e[j], e[k]).items()))
                    if lhs != rhs:
                        yield (names[i], names[j], names[k]), H.vector(lhs), H.vector(rhs)

    w = first_mismatch(assoc(), vec)
    rep.add("associativity", w is None, w)

    def unit():
        for i in idx:
            yield names[i], H.vector(H._mul_coords(unit_n, e[i])), H.vector(dict(e[i]))
            yield names[i], H.vector(H._mul_coords(e[i], unit_n)), H.vector(dict(e[i]))

    w = first_mismatch(unit(), vec)
    rep.add("unit", w is None, w)

    def coassoc():
        for i in idx:
            left: dict = {}
            right: dict = {}
            for j, k, c in H.comult[i]:
                for a, b, d in H.comult[j]:
                    _acc(left, (a, b, k), c * d)
                for a, b, d in H.comult[k]:
                    _acc(right, (j, a, b), c * d)
            yield names[i], _fmt3(H, left), _fmt3(H, right)

    w = first_mismatch(coassoc())
    rep.add("coassociativity", w is None, w)

    def counit_ax():
        for i in idx:
            left: dict = {}
            right: dict = {}
            for j, k, c in H.comult[i]:
                if H.counit[j]:
                    _acc(left, k, c * H.counit[j])
                if H.counit[k]:
                    _acc(right, j, c * H.counit[k])
            yield names[i], H.vector(left), H.vector(dict(e[i]))
            yield names[i], H.vector(right), H.vector(dict(e[i]))

    w = first_mismatch(counit_ax(), vec)
    rep.add("counit", w is None, w)

    deltas = [H._comul_coords(e[i]) for i in idx]

    def delta_mult():
        d1 = H._comul_coords(unit_n)
        yield "1", tensor_str(H, d1), tensor_str(H, {(a, b): x * y for a, x in unit_n for b, y in unit_n})
        for i in idx:
            for j in idx:
                lhs = H._comul_coords(list(H._mul_coords(e[i], e[j]).items()))
                rhs = H._tensor_mul(deltas[i], deltas[j])
                yield (names[i], names[j]), tensor_str(H, lhs), tensor_str(H, rhs)

    w = first_mismatch(delta_mult())
    rep.add("comult-multiplicative", w is None, w)

    def eps_of(coords):
        return sum((c * H.counit[k] for k, c in coords), H.field.zero)

    def eps_mult():
        yield "1", eps_of(unit_n), one
        for i in idx:
            for j in idx:
                lhs = eps_of(H._mul_coords(e[i], e[j]).items())
                yield (names[i], names[j]), lhs, H.counit[i] * H.counit[j]

    w = first_mismatch(eps_mult())
    rep.add("counit-multiplicative", w is None, w)

    S = H.antipode

    def antipode_ax():
        cols = S.columns()
        for i in idx:
            left: dict = {}
            right: dict = {}
            for j, k, c in H.comult[i]:
                sj = [(a, v) for a, v in enumerate(cols[j]) if v]
                sk = [(a, v) for a, v in enumerate(cols[k]) if v]
                for key, v in H._mul_coords(sj, e[k]).items():
                    _acc(left, key, c * v)
                for key, v in H._mul_coords(e[j], sk).items():
                    _acc(right, key, c * v)
            target = H.vector({k: H.counit[i] * c for k, c in unit_n})
            yield names[i], H.vector(left), target
            yield names[i], H.vector(right), target

    w = first_mismatch(antipode_ax(), vec)
    rep.add("antipode", w is None, w)
    return rep


def _fmt3(H, coords: dict) -> str:
    if not coords:
        return "0"
    return " + ".join(f"{c}*{H.basis[a]}(x){H.basis[b]}(x){H.basis[k]}"
                      for (a, b, k), c in sorted(coords.items()))


def verified(H: HopfPresentation) -> HopfPresentation:
    """Run verify_axioms once (cached) and raise AxiomFailure on any failure."""
    if H._axioms is None:
        rep = verify_axioms(H)
        if rep.ok:
            inv = H.antipode_inverse
            if not (H.antipode @ inv).is_identity() or not (inv @ H.antipode).is_identity():
                raise AxiomFailure("antipode_inverse is not the inverse of the antipode")
        H._axioms = rep
    if not H._axioms.ok:
        bad = H._axioms.failures[0]
        raise AxiomFailure(f"{H.name}: axiom '{bad.name}' fails", bad.witness)
    return H
