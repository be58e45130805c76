"""Exact scalar fields: Q, F_p, Q(zeta_n) and Q(q), plus q-combinatorics."""
from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from . import _poly
from .errors import DegenerateQ, DivisionByZero, FieldMismatch, OutOfRange, ParseError


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


# -- per-kind arithmetic ---------------------------------------------------
# Values handed to these classes are already canonical.

class _RationalOps:
    def __init__(self, spec):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def from_int(self, a):
        return Fraction(a)

    def from_fraction(self, a):
        return Fraction(a)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        return 1 / a

    def is_zero(self, a):
        return a == 0

    def format(self, a):
        return str(a)

    def parse(self, s):
        return Fraction(s.strip())


class _PrimeOps:
    def __init__(self, spec):
        self.p = spec.p
        self.zero = 0
        self.one = 1 % self.p

    def from_int(self, a):
        return a % self.p

    def from_fraction(self, a):
        a = Fraction(a)
        den = a.denominator % self.p
        if den == 0:
            raise DivisionByZero(f"denominator vanishes mod {self.p}")
        return a.numerator * pow(den, -1, self.p) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        return pow(a, -1, self.p)

    def is_zero(self, a):
        return a == 0

    def format(self, a):
        return str(a)

    def parse(self, s):
        return self.from_fraction(Fraction(s.strip()))


class _CyclotomicOps:
    """Coefficient vectors modulo the n-th cyclotomic polynomial."""

    def __init__(self, spec):
        self.n = spec.n
        self.modulus = _poly.cyclotomic(spec.n)
        self.deg = len(self.modulus) - 1
        self.var = f"zeta{spec.n}"
        self.zero = ()
        self.one = _poly.ONE
        # x^k mod Phi_n for deg <= k <= 2*deg - 2
        self._reduce_table = {}
        for k in range(self.deg, 2 * self.deg - 1):
            mono = [Fraction(0)] * k + [Fraction(1)]
            self._reduce_table[k] = _poly.divmod_(tuple(mono), self.modulus)[1]

    def reduce(self, a):
        if len(a) <= self.deg:
            return _poly.trim(a)
        if len(a) - 1 > 2 * self.deg - 2:
            return _poly.divmod_(_poly.trim(a), self.modulus)[1]
        out = list(a[: self.deg])
        for k in range(self.deg, len(a)):
            c = a[k]
            if c:
                for i, r in enumerate(self._reduce_table[k]):
                    out[i] += c * r
        return _poly.trim(out)

    def from_int(self, a):
        return _poly.const(a)

    def from_fraction(self, a):
        return _poly.const(a)

    def add(self, a, b):
        return _poly.add(a, b)

    def sub(self, a, b):
        return _poly.sub(a, b)

    def mul(self, a, b):
        if not a or not b:
            return ()
        if a == _poly.ONE:
            return b
        if b == _poly.ONE:
            return a
        return self.reduce(_poly.mul(a, b))

    def neg(self, a):
        return _poly.neg(a)

    def inv(self, a):
        g, s, _ = _poly.xgcd(a, self.modulus)
        if g != _poly.ONE:
            raise DivisionByZero("element is not invertible")
        return self.reduce(s)

    def is_zero(self, a):
        return not a

    def format(self, a):
        return _poly.format_poly(a, self.var, spaced=True, explicit_one=True)

    def parse(self, s):
        return self.reduce(_poly.parse_poly(s, self.var))


class _RationalFunctionOps:
    """Pairs (num, den) of coprime polynomials with den monic."""

    def __init__(self, spec):
        self.var = spec.var
        self.zero = ((), _poly.ONE)
        self.one = (_poly.ONE, _poly.ONE)

    @staticmethod
    def make(num, den):
        if not den:
            raise DivisionByZero("zero denominator")
        if not num:
            return ((), _poly.ONE)
        if len(den) > 1:
            g = _poly.gcd(num, den)
            if len(g) > 1:
                num = _poly.divmod_(num, g)[0]
                den = _poly.divmod_(den, g)[0]
        lead = den[-1]
        if lead != 1:
            num = _poly.scale(num, 1 / lead)
            den = _poly.scale(den, 1 / lead)
        return (num, den)

    def from_int(self, a):
        return (_poly.const(a), _poly.ONE)

    def from_fraction(self, a):
        return (_poly.const(a), _poly.ONE)

    def add(self, a, b):
        if a[1] == b[1]:
            return self.make(_poly.add(a[0], b[0]), a[1])
        return self.make(
            _poly.add(_poly.mul(a[0], b[1]), _poly.mul(b[0], a[1])),
            _poly.mul(a[1], b[1]),
        )

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if not a[0] or not b[0]:
            return self.zero
        return self.make(_poly.mul(a[0], b[0]), _poly.mul(a[1], b[1]))

    def neg(self, a):
        return (_poly.neg(a[0]), a[1])

    def inv(self, a):
        return self.make(a[1], a[0])

    def is_zero(self, a):
        return not a[0]

    def format(self, a):
        num = _poly.format_poly(a[0], self.var)
        if a[1] == _poly.ONE:
            return num
        return f"({num})/({_poly.format_poly(a[1], self.var)})"

    def parse(self, s):
        s = re.sub(r"\s+", "", s)
        if s.startswith("(") and ")/(" in s and s.endswith(")"):
            num, den = s[1:-1].split(")/(", 1)
            return self.make(_poly.parse_poly(num, self.var), _poly.parse_poly(den, self.var))
        return self.make(_poly.parse_poly(s, self.var), _poly.ONE)


_OPS = {
    "Q": _RationalOps,
    "Fp": _PrimeOps,
    "cyclotomic": _CyclotomicOps,
    "Qq": _RationalFunctionOps,
}


@dataclass(frozen=True)
class FieldSpec:
    """Which exact field scalars live in.

    Use the constructors ``rationals()``, ``prime(p)``, ``cyclotomic(n)`` and
    ``rational_functions(var)``; they intern instances so identity checks are
    cheap.
    """

    kind: str
    p: int | None = None
    n: int | None = None
    var: str | None = None
    ops: object = dc_field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self):
        if self.kind not in _OPS:
            raise ValueError(f"unknown field kind {self.kind!r}")
        if self.kind == "Fp" and not _is_prime(self.p or 0):
            raise ValueError(f"{self.p} is not prime")
        if self.kind == "cyclotomic" and (self.n is None or self.n < 1):
            raise ValueError("cyclotomic index must be a positive integer")
        object.__setattr__(self, "ops", _OPS[self.kind](self))

    # constructors
    @staticmethod
    def rationals() -> "FieldSpec":
        return _interned("Q")

    @staticmethod
    def prime(p: int) -> "FieldSpec":
        return _interned("Fp", p=p)

    @staticmethod
    def cyclotomic(n: int) -> "FieldSpec":
        return _interned("cyclotomic", n=n)

    @staticmethod
    def rational_functions(var: str = "q") -> "FieldSpec":
        return _interned("Qq", var=var)

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == "Fp" else 0

    @property
    def zero(self) -> "Scalar":
        return Scalar(self, self.ops.zero)

    @property
    def one(self) -> "Scalar":
        return Scalar(self, self.ops.one)

    def gen(self) -> "Scalar":
        """zeta_n for cyclotomic fields, the indeterminate for Q(q)."""
        if self.kind == "cyclotomic":
            return Scalar(self, self.ops.reduce((Fraction(0), Fraction(1))))
        if self.kind == "Qq":
            return Scalar(self, ((Fraction(0), Fraction(1)), _poly.ONE))
        raise ValueError(f"field {self.label} has no distinguished generator")

    def __call__(self, value) -> "Scalar":
        if isinstance(value, Scalar):
            if value.field is not self and value.field != self:
                raise FieldMismatch(f"{value.field.label} vs {self.label}")
            return value
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return Scalar(self, self.ops.from_int(value))
        if isinstance(value, Fraction):
            return Scalar(self, self.ops.from_fraction(value))
        if isinstance(value, str):
            return self.parse(value)
        raise TypeError(f"cannot convert {type(value).__name__} to a scalar")

    def parse(self, text: str) -> "Scalar":
        try:
            return Scalar(self, self.ops.parse(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad scalar {text!r} for field {self.label}: {exc}") from None

    @property
    def label(self) -> str:
        if self.kind == "Q":
            return "Q"
        if self.kind == "Fp":
            return f"F{self.p}"
        if self.kind == "cyclotomic":
            return f"Q(zeta{self.n})"
        return f"Q({self.var})"

    def descriptor(self) -> dict:
        if self.kind == "Q":
            return {"field": "Q"}
        if self.kind == "Fp":
            return {"field": "Fp", "p": self.p}
        if self.kind == "cyclotomic":
            return {"field": "cyclotomic", "n": self.n}
        d = {"field": "Qq"}
        if self.var != "q":
            d["var"] = self.var
        return d

    @staticmethod
    def from_descriptor(d: dict) -> "FieldSpec":
        kind = d.get("field")
        try:
            if kind == "Q":
                return FieldSpec.rationals()
            if kind == "Fp":
                return FieldSpec.prime(int(d["p"]))
            if kind == "cyclotomic":
                return FieldSpec.cyclotomic(int(d["n"]))
            if kind == "Qq":
                return FieldSpec.rational_functions(d.get("var", "q"))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad field descriptor {d!r}: {exc}") from None
        raise ParseError(f"unknown field {kind!r}")

    @staticmethod
    def from_option(text: str) -> "FieldSpec":
        """Parse the command-line form: Q, Fp:5, cyclotomic:3, Qq."""
        head, _, arg = text.partition(":")
        if head == "Q" and not arg:
            return FieldSpec.rationals()
        if head == "Qq":
            return FieldSpec.rational_functions(arg or "q")
        if head in ("Fp", "cyclotomic") and arg.isdigit():
            return FieldSpec.from_descriptor({"field": head, "p": int(arg), "n": int(arg)})
        raise ParseError(f"bad field option {text!r}")


_INTERN: dict = {}


def _interned(kind, p=None, n=None, var=None) -> FieldSpec:
    key = (kind, p, n, var)
    spec = _INTERN.get(key)
    if spec is None:
        spec = _INTERN[key] = FieldSpec(kind, p=p, n=n, var=var)
    return spec


QQ = FieldSpec.rationals()


class Scalar:
    """An immutable element of a FieldSpec, kept in canonical form."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value):
        self.field = field
        self.value = value

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch(f"{self.field.label} vs {other.field.label}")
            return other.value
        if isinstance(other, (int, Fraction)):
            return self.field(other).value
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Scalar(self.field, self.field.ops.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Scalar(self.field, self.field.ops.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Scalar(self.field, self.field.ops.sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Scalar(self.field, self.field.ops.mul(self.value, o))

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar(self.field, self.field.ops.neg(self.value))

    def __pos__(self):
        return self

    def inv(self) -> "Scalar":
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        return Scalar(self.field, self.field.ops.inv(self.value))

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self * Scalar(self.field, o).inv()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Scalar(self.field, o) * self.inv()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inv()
        k = abs(k)
        result = self.field.one
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_zero(self) -> bool:
        return self.field.ops.is_zero(self.value)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.value == other.value and (other.field is self.field or self.field == other.field)
        if isinstance(other, (int, Fraction)):
            return self.value == self.field(other).value
        return NotImplemented

    def __hash__(self):
        return hash((self.field.kind, self.field.p, self.field.n, self.value))

    def __str__(self):
        return self.field.ops.format(self.value)

    def __repr__(self):
        return f"Scalar({self.field.label}, {self})"

    def as_fraction(self) -> Fraction:
        """Rational value; only meaningful for Q or constant elements."""
        if self.field.kind == "Q":
            return self.value
        if self.field.kind == "Fp":
            return Fraction(self.value)
        if self.field.kind == "cyclotomic":
            if len(self.value) > 1:
                raise ValueError(f"{self} is not rational")
            return self.value[0] if self.value else Fraction(0)
        num, den = self.value
        if len(num) > 1 or len(den) > 1:
            raise ValueError(f"{self} is not rational")
        return num[0] if num else Fraction(0)


# -- q-combinatorics -------------------------------------------------------

def quantum_integer(i: int, spec: FieldSpec) -> Scalar:
    """Balanced quantum integer [i] = (q^i - q^-i)/(q - q^-1), q the field generator."""
    if spec.kind not in ("Qq", "cyclotomic"):
        raise DegenerateQ(f"field {spec.label} has no parameter q")
    q = spec.gen()
    denom = q - q.inv()
    if denom.is_zero():
        raise DegenerateQ("q - q^-1 = 0")
    return (q ** i - q ** (-i)) / denom


def gauss_binomial(j: int, t: int, q):
    """Gaussian binomial {j choose t}_q via q-Pascal.

    ``q`` may be a Scalar or a plain integer/Fraction; the result has the same
    kind.
    """
    if not (0 <= t <= j):
        raise OutOfRange(f"need 0 <= t <= j, got j={j}, t={t}")
    return _gauss_table(j, q)[t]


def _gauss_table(j, q):
    one = q.field.one if isinstance(q, Scalar) else 1
    zero = one * 0
    row = [one]
    qpow = [one]
    for _ in range(j):
        qpow.append(qpow[-1] * q)
    for m in range(1, j + 1):
        new = [one] + [zero] * m
        for t in range(1, m + 1):
            upper = row[t] if t < m else zero
            new[t] = row[t - 1] + qpow[t] * upper
        row = new
    return row

