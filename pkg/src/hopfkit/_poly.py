"""Dense univariate polynomials over Q.

A polynomial is a tuple of ``Fraction`` coefficients, lowest degree first,
with no trailing zeros (the zero polynomial is ``()``).
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache

ZERO: tuple = ()
ONE = (Fraction(1),)


def trim(c) -> tuple:
    c = list(c)
    while c and not c[-1]:
        c.pop()
    return tuple(c)


def const(a) -> tuple:
    a = Fraction(a)
    return (a,) if a else ()


def degree(a) -> int:
    return len(a) - 1


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return trim(out)


def neg(a):
    return tuple(-x for x in a)


def sub(a, b):
    return add(a, neg(b))


def scale(a, s):
    if not s:
        return ()
    return tuple(x * s for x in a)


def mul(a, b):
    if not a or not b:
        return ()
    if len(a) == 1:
        return trim(a[0] * y for y in b)
    if len(b) == 1:
        return trim(x * b[0] for x in a)
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] += x * y
    return trim(out)


def divmod_(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    db = len(b) - 1
    lead = b[-1]
    if len(rem) - 1 < db:
        return (), trim(rem)
    quot = [Fraction(0)] * (len(rem) - db)
    for k in range(len(rem) - 1 - db, -1, -1):
        coef = rem[k + db] / lead
        quot[k] = coef
        if coef:
            for j, y in enumerate(b):
                rem[k + j] -= coef * y
    return trim(quot), trim(rem[:db])


def monic(a):
    if not a:
        return a
    lead = a[-1]
    if lead == 1:
        return a
    return tuple(x / lead for x in a)


def gcd(a, b):
    while b:
        a, b = b, divmod_(a, b)[1]
    return monic(a)


def xgcd(a, b):
    """Return (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = a, b
    s0, s1 = ONE, ()
    t0, t1 = (), ONE
    while r1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
        t0, t1 = t1, sub(t0, mul(q, t1))
    if not r0:
        return (), (), ()
    lead = r0[-1]
    return monic(r0), scale(s0, 1 / lead), scale(t0, 1 / lead)


def evaluate(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> tuple:
    """The n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    num = trim([Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)])
    for d in range(1, n):
        if n % d == 0:
            num, rem = divmod_(num, cyclotomic(d))
            assert not rem
    return num


# -- text form ---------------------------------------------------------------

def format_poly(a, var: str, spaced: bool = False, explicit_one: bool = False) -> str:
    """Canonical text, highest degree first."""
    if not a:
        return "0"
    parts = []
    for e in range(len(a) - 1, -1, -1):
        c = a[e]
        if not c:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            mono = var if (e == 1 and not explicit_one) else f"{var}^{e}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        parts.append(("-" if c < 0 else "+", body))
    out = []
    for k, (sign, body) in enumerate(parts):
        if k == 0:
            out.append(body if sign == "+" else "-" + body)
        elif spaced:
            out.append(f" {sign} {body}")
        else:
            out.append(sign + body)
    return "".join(out)


_TERM = re.compile(r"([+-]?)([^+-]+)")


def parse_poly(text: str, var: str) -> tuple:
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ValueError("empty polynomial")
    # one pass to make sure the terms cover the whole string
    terms = list(_TERM.finditer(s))
    if "".join(m.group(0) for m in terms) != s:
        raise ValueError(f"cannot parse polynomial {text!r}")
    coeffs: dict[int, Fraction] = {}
    for m in terms:
        sign = -1 if m.group(1) == "-" else 1
        body = m.group(2)
        if var in body:
            head, _, tail = body.partition(var)
            if tail:
                if not tail.startswith("^"):
                    raise ValueError(f"bad monomial {body!r}")
                e = int(tail[1:])
            else:
                e = 1
            if head:
                if not head.endswith("*"):
                    raise ValueError(f"bad coefficient in {body!r}")
                c = Fraction(head[:-1])
            else:
                c = Fraction(1)
        else:
            e, c = 0, Fraction(body)
        coeffs[e] = coeffs.get(e, Fraction(0)) + sign * c
    top = max(coeffs)
    return trim(coeffs.get(i, Fraction(0)) for i in range(top + 1))
