"""Preset Hopf algebras and the combinators that build new ones."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .errors import FieldMismatch, UnknownPreset
from .hopf import HopfPresentation, verified
from .linalg import Matrix
from .scalar import QQ, FieldSpec, Scalar, gauss_binomial


@dataclass(frozen=True)
class GroupTable:
    order: int
    mul: tuple
    inverse: tuple
    identity: int
    names: tuple

    def __post_init__(self):
        n = self.order
        r = range(n)
        if len(self.mul) != n or any(len(row) != n for row in self.mul):
            raise ValueError("multiplication table has the wrong shape")
        if any(not (0 <= self.mul[a][b] < n) for a in r for b in r):
            raise ValueError("multiplication table is not closed")
        e = self.identity
        if any(self.mul[e][a] != a or self.mul[a][e] != a for a in r):
            raise ValueError("identity is not neutral")
        if any(self.mul[a][self.inverse[a]] != e or self.mul[self.inverse[a]][a] != e for a in r):
            raise ValueError("inverse table is wrong")
        for a in r:
            for b in r:
                ab = self.mul[a][b]
                for c in r:
                    if self.mul[ab][c] != self.mul[a][self.mul[b][c]]:
                        raise ValueError("multiplication is not associative")


def cyclic_group(n: int, gen: str = "a") -> GroupTable:
    names = ["e"] + [gen if k == 1 else f"{gen}^{k}" for k in range(1, n)]
    return GroupTable(
        n,
        tuple(tuple((i + j) % n for j in range(n)) for i in range(n)),
        tuple((-i) % n for i in range(n)),
        0,
        tuple(names),
    )


def symmetric_group(m: int = 3) -> GroupTable:
    perms = sorted(permutations(range(m)))
    index = {p: i for i, p in enumerate(perms)}
    # (p q)(x) = p(q(x))
    mul = tuple(tuple(index[tuple(p[q[x]] for x in range(m))] for q in perms) for p in perms)
    inv = []
    for p in perms:
        q = [0] * m
        for x, y in enumerate(p):
            q[y] = x
        inv.append(index[tuple(q)])
    names = tuple("e" if p == tuple(range(m)) else "s" + "".join(str(x + 1) for x in p) for p in perms)
    return GroupTable(len(perms), mul, tuple(inv), index[tuple(range(m))], names)


def group_algebra(G: GroupTable, field: FieldSpec = QQ, name: str | None = None) -> HopfPresentation:
    n = G.order
    one = field.one
    mult = {(i, j): {G.mul[i][j]: one} for i in range(n) for j in range(n)}
    unit = [one if k == G.identity else field.zero for k in range(n)]
    comult = [[(i, i, one)] for i in range(n)]
    counit = [one] * n
    S = Matrix(n, n, {(G.inverse[i], i): one for i in range(n)}, field)
    return verified(HopfPresentation(field, G.names, mult, unit, comult, counit, S,
                                     name=name or f"k[G{n}]/{field.label}"))


# -- Taft algebras -----------------------------------------------------------

def is_primitive_root(q: Scalar, n: int) -> bool:
    if q ** n != 1:
        return False
    return all(q ** k != 1 for k in range(1, n))


def primitive_root(field: FieldSpec, n: int) -> Scalar:
    """A primitive n-th root of unity in ``field`` (ValueError if none)."""
    candidates = []
    if n == 1:
        return field.one
    if n == 2:
        candidates.append(-field.one)
    if field.kind == "cyclotomic" and field.n % n == 0:
        candidates.append(field.gen() ** (field.n // n))
    if field.kind == "cyclotomic" and field.n % 2 == 1 and (2 * field.n) % n == 0:
        # -zeta_m is a primitive 2m-th root when m is odd
        candidates.append((-field.gen()) ** (2 * field.n // n))
    if field.kind == "Fp":
        candidates.extend(field(a) for a in range(2, field.p))
    for q in candidates:
        if is_primitive_root(q, n):
            return q
    raise ValueError(f"{field.label} has no primitive {n}-th root of unity")


def _taft_name(i: int, j: int, g: str) -> str:
    if i == 0 and j == 0:
        return "1"
    cpart = "" if i == 0 else (g if i == 1 else f"{g}^{i}")
    xpart = "" if j == 0 else ("x" if j == 1 else f"x^{j}")
    return cpart + xpart


def taft(n: int, field: FieldSpec | None = None, q: Scalar | None = None,
         grouplike: str = "c", name: str | None = None) -> HopfPresentation:
    """Taft algebra T_n on the basis c^i x^j, ordered by (j, i).

    Defaults to Q(zeta_n) with q = zeta_n. Pass ``field`` and ``q`` to build it
    over another field; q must be a primitive n-th root of unity there.
    """
    if n < 2:
        raise ValueError("Taft algebras need n >= 2")
    if field is None:
        field = FieldSpec.cyclotomic(n)
    q = primitive_root(field, n) if q is None else field(q)
    if not is_primitive_root(q, n):
        raise ValueError(f"{q} is not a primitive {n}-th root of unity")
    idx = lambda i, j: j * n + i  # noqa: E731
    basis = [None] * (n * n)
    for j in range(n):
        for i in range(n):
            basis[idx(i, j)] = _taft_name(i, j, grouplike)
    one, zero = field.one, field.zero
    qp = [q ** k for k in range(n)]

    # (c^i x^j)(c^k x^l) = q^(jk) c^(i+k) x^(j+l)
    def mono_mul(a, b):
        (ca, ia, ja), (cb, ib, jb) = a, b
        if ja + jb >= n:
            return None
        return (ca * cb * qp[(ja * ib) % n], (ia + ib) % n, ja + jb)

    mult = {}
    for j in range(n):
        for i in range(n):
            for l in range(n):
                for k in range(n):
                    r = mono_mul((one, i, j), (one, k, l))
                    if r is not None:
                        mult[idx(i, j), idx(k, l)] = {idx(r[1], r[2]): r[0]}
    comult = []
    for j in range(n):
        for i in range(n):
            terms = []
            for t in range(j + 1):
                c = gauss_binomial(j, t, q)
                terms.append((idx((i + t) % n, j - t), idx(i, t), c))
            comult.append(terms)
    counit = [one if j == 0 else zero for j in range(n) for i in range(n)]
    unit = [one if k == 0 else zero for k in range(n * n)]
    # S(c^i x^j) = S(x)^j c^-i with S(x) = -c^-1 x
    S_entries = {}
    for j in range(n):
        for i in range(n):
            mono = (one, 0, 0)
            for _ in range(j):
                mono = mono_mul(mono, (-one, n - 1, 1))
            mono = mono_mul(mono, (one, (-i) % n, 0))
            S_entries[idx(mono[1], mono[2]), idx(i, j)] = mono[0]
    S = Matrix(n * n, n * n, S_entries, field)
    return verified(HopfPresentation(field, basis, mult, unit, comult, counit, S,
                                     name=name or f"taft:{n}"))


def sweedler() -> HopfPresentation:
    """Sweedler's 4-dimensional algebra: T_2 over Q with q = -1."""
    return taft(2, QQ, QQ(-1), grouplike="g", name="sweedler")


# -- combinators -----------------------------------------------------------------

def dual(H: HopfPresentation, name: str | None = None) -> HopfPresentation:
    """H* on the dual basis: convolution product, transposed tables, S^T."""
    n, field = H.dim, H.field
    mult: dict = {}
    for k in range(n):
        for i, j, c in H.comult[k]:
            mult.setdefault((i, j), {})
            mult[i, j][k] = mult[i, j].get(k, field.zero) + c
    comult = [[] for _ in range(n)]
    for (i, j), vec in sorted(H.mult.items()):
        for k, c in vec:
            comult[k].append((i, j, c))
    return verified(HopfPresentation(
        field, [f"{b}*" for b in H.basis], mult, H.counit, comult, H.unit,
        H.antipode.transpose(), H.antipode_inverse.transpose(),
        name=name or f"dual:{H.name}"))


def op(H: HopfPresentation, name: str | None = None) -> HopfPresentation:
    """Opposite multiplication; the antipode becomes S^-1."""
    mult = {(j, i): dict(vec) for (i, j), vec in H.mult.items()}
    return verified(HopfPresentation(
        H.field, H.basis, mult, H.unit, H.comult, H.counit,
        H.antipode_inverse, H.antipode, name=name or f"op:{H.name}"))


def cop(H: HopfPresentation, name: str | None = None) -> HopfPresentation:
    """Opposite comultiplication; the antipode becomes S^-1."""
    comult = [[(k, j, c) for j, k, c in terms] for terms in H.comult]
    return verified(HopfPresentation(
        H.field, H.basis, {k: dict(v) for k, v in H.mult.items()}, H.unit, comult, H.counit,
        H.antipode_inverse, H.antipode, name=name or f"cop:{H.name}"))


def tensor(H: HopfPresentation, K: HopfPresentation, name: str | None = None) -> HopfPresentation:
    if H.field != K.field:
        raise FieldMismatch(f"{H.field.label} vs {K.field.label}")
    field = H.field
    m = K.dim
    idx = lambda a, b: a * m + b  # noqa: E731
    basis = [f"{a}|{b}" for a in H.basis for b in K.basis]
    mult = {}
    for (a1, a2), u in H.mult.items():
        for (b1, b2), v in K.mult.items():
            mult[idx(a1, b1), idx(a2, b2)] = {idx(k1, k2): c1 * c2 for k1, c1 in u for k2, c2 in v}
    unit = [x * y for x in H.unit for y in K.unit]
    comult = []
    for a in range(H.dim):
        for b in range(m):
            comult.append([(idx(j1, j2), idx(k1, k2), c1 * c2)
                           for j1, k1, c1 in H.comult[a] for j2, k2, c2 in K.comult[b]])
    counit = [x * y for x in H.counit for y in K.counit]

    def kron(A, B):
        return Matrix(A.nrows * B.nrows, A.ncols * B.ncols,
                      {(idx(r1, r2), idx(c1, c2)): x * y
                       for (r1, c1), x in A.entries.items() for (r2, c2), y in B.entries.items()},
                      field)

    return verified(HopfPresentation(
        field, basis, mult, unit, comult, counit,
        kron(H.antipode, K.antipode), kron(H.antipode_inverse, K.antipode_inverse),
        name=name or f"tensor:{H.name}:{K.name}"))


def structurally_equal(H: HopfPresentation, K: HopfPresentation) -> bool:
    """Same field, dimension and structure tensors (basis labels ignored)."""
    return (H.field == K.field and H.dim == K.dim and H.mult == K.mult and H.unit == K.unit
            and [sorted(t, key=lambda x: x[:2]) for t in H.comult]
            == [sorted(t, key=lambda x: x[:2]) for t in K.comult]
            and H.counit == K.counit and H.antipode == K.antipode)


# -- preset names ----------------------------------------------------------------

FINITE_PRESETS_HELP = 'sweedler, taft:n, group:Cn, group:S3, dual:<p>, op:<p>, cop:<p>, tensor:<p>:<p>'


def _parse(tokens: list, field: FieldSpec | None):
    if not tokens:
        raise UnknownPreset("incomplete preset name")
    head = tokens.pop(0)
    if head == "sweedler":
        if field is not None and field != QQ:
            return taft(2, field, grouplike="g", name="sweedler"), "sweedler"
        return sweedler(), "sweedler"
    if head == "taft":
        if not tokens or not tokens[0].isdigit():
            raise UnknownPreset("taft needs an integer parameter, e.g. taft:3")
        n = int(tokens.pop(0))
        if n < 2:
            raise UnknownPreset("taft:n needs n >= 2")
        try:
            return taft(n, field, name=f"taft:{n}"), f"taft:{n}"
        except ValueError as exc:
            raise UnknownPreset(str(exc)) from None
    if head == "group":
        if not tokens:
            raise UnknownPreset("group needs a group name, e.g. group:C3")
        g = tokens.pop(0)
        f = field or QQ
        if g == "S3":
            return group_algebra(symmetric_group(3), f, name="group:S3"), "group:S3"
        if g.startswith("C") and g[1:].isdigit() and int(g[1:]) >= 1:
            return group_algebra(cyclic_group(int(g[1:])), f, name=f"group:{g}"), f"group:{g}"
        raise UnknownPreset(f"unknown group {g!r}")
    if head in ("dual", "op", "cop"):
        inner, label = _parse(tokens, field)
        fn = {"dual": dual, "op": op, "cop": cop}[head]
        return fn(inner, name=f"{head}:{label}"), f"{head}:{label}"
    if head == "tensor":
        start = list(tokens)
        a, la = _parse(tokens, field)
        rest = list(tokens)
        b, lb = _parse(tokens, field)
        # a rational factor is lifted to the other factor's field
        if field is None and a.field != b.field:
            if a.field == QQ:
                a, la = _parse(start, b.field)
            elif b.field == QQ:
                b, lb = _parse(rest, a.field)
        return tensor(a, b, name=f"tensor:{la}:{lb}"), f"tensor:{la}:{lb}"
    raise UnknownPreset(f"unknown preset {head!r} (known: {FINITE_PRESETS_HELP})")


def preset(name: str, field: FieldSpec | None = None) -> HopfPresentation:
    """Build a finite-dimensional preset from its colon-separated name."""
    tokens = name.split(":")
    H, _ = _parse(tokens, field)
    if tokens:
        raise UnknownPreset(f"trailing tokens in preset name {name!r}: {':'.join(tokens)}")
    return H
