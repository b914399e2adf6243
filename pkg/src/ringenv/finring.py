"""Finite commutative rings given by addition and multiplication tables.

Elements are the integers ``0 .. order-1``; every structure (ideals,
homomorphisms, decompositions) refers to them by index.  Rings are
immutable once built.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import cached_property
from math import prod

from .config import get_limits
from .errors import (InvalidAction, InvalidRing, NotLocal, NotPrime, SizeLimit,
                     ZeroRing)

Table = tuple[tuple[int, ...], ...]


def _check_table_cap(order):
    cap = get_limits().table_order
    if order > cap:
        raise SizeLimit(f"ring of order {order} exceeds table cap {cap}")


@dataclass(frozen=True, eq=False)
class FiniteRing:
    """A commutative unital ring of small order.

    ``add`` and ``mul`` are ``order x order`` tables of element indices.
    ``names`` gives display names for elements; ``factors`` is filled in
    by :func:`make_product` so components can be recovered.
    """

    add: Table
    mul: Table
    zero: int
    one: int
    label: str = "R"
    names: tuple[str, ...] | None = None
    factors: tuple[FiniteRing, ...] = field(default=(), repr=False)

    def __post_init__(self):
        n = len(self.add)
        if n < 1:
            raise InvalidRing("a ring has at least one element")
        _check_table_cap(n)
        if len(self.mul) != n or any(len(r) != n for r in self.add + self.mul):
            raise InvalidRing("tables must be square of the same size")
        if not (0 <= self.zero < n and 0 <= self.one < n):
            raise InvalidRing("zero/one out of range")
        if self.names is not None and len(self.names) != n:
            raise InvalidRing("one name per element required")

    @property
    def order(self):
        return len(self.add)

    @property
    def degenerate(self):
        return self.order == 1

    @property
    def elements(self):
        return range(self.order)

    def __repr__(self):
        return f"FiniteRing({self.label!r}, order={self.order})"

    def __len__(self):
        return self.order

    def name(self, a):
        return self.names[a] if self.names is not None else str(a)

    def index(self, name):
        if self.names is None:
            return int(name)
        return self.names.index(name)

    @cached_property
    def neg(self):
        out = [0] * self.order
        for a in self.elements:
            out[a] = self.add[a].index(self.zero)
        return tuple(out)

    def sub(self, a, b):
        return self.add[a][self.neg[b]]

    def power(self, a, k):
        r = self.one
        for _ in range(k):
            r = self.mul[r][a]
        return r

    def multiple(self, a, k):
        r = self.zero
        for _ in range(k):
            r = self.add[r][a]
        return r

    @cached_property
    def characteristic(self):
        k, x = 1, self.one
        while x != self.zero:
            x = self.add[x][self.one]
            k += 1
        return k

    def is_unit(self, a):
        return self.one in self.mul[a]

    @cached_property
    def units(self):
        return tuple(a for a in self.elements if self.is_unit(a))

    @cached_property
    def idempotents(self):
        return tuple(a for a in self.elements if self.mul[a][a] == a)

    def is_nilpotent(self, a):
        x = a
        for _ in range(self.order + 1):
            if x == self.zero:
                return True
            x = self.mul[x][a]
        return False

    def is_field(self):
        return self.order > 1 and len(self.units) == self.order - 1

    def is_reduced(self):
        return all(not self.is_nilpotent(a) for a in self.elements if a != self.zero)

    def axiom_failures(self):
        """Exhaustively check the commutative-ring axioms.

        Returns a list of human-readable failures (empty when valid).
        """
        A, M, z, u = self.add, self.mul, self.zero, self.one
        E = self.elements
        bad = []
        for a in E:
            if A[a][z] != a:
                bad.append(f"{a}+0 != {a}")
            if M[a][u] != a:
                bad.append(f"{a}*1 != {a}")
            if z not in A[a]:
                bad.append(f"{a} has no additive inverse")
            for b in E:
                if A[a][b] != A[b][a]:
                    bad.append(f"add not commutative at {a},{b}")
                if M[a][b] != M[b][a]:
                    bad.append(f"mul not commutative at {a},{b}")
        if bad:
            return bad
        for a, b in itertools.product(E, E):
            Aab, Mab = A[a][b], M[a][b]
            Ma = M[a]
            for c in E:
                if A[Aab][c] != A[a][A[b][c]]:
                    bad.append(f"add not associative at {a},{b},{c}")
                if M[Mab][c] != Ma[M[b][c]]:
                    bad.append(f"mul not associative at {a},{b},{c}")
                if Ma[A[b][c]] != A[Mab][Ma[c]]:
                    bad.append(f"not distributive at {a},{b},{c}")
            if len(bad) > 20:
                break
        return bad

    def check(self):
        bad = self.axiom_failures()
        if bad:
            raise InvalidRing("; ".join(bad[:5]))
        return self

    def to_json(self):
        doc = {"order": self.order, "add": [list(r) for r in self.add],
               "mul": [list(r) for r in self.mul], "zero": self.zero,
               "one": self.one, "label": self.label}
        if self.names is not None:
            doc["elements"] = list(self.names)
        return doc

    def dumps(self):
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, doc):
        if isinstance(doc, str):
            doc = json.loads(doc)
        ring = cls(add=_freeze(doc["add"]), mul=_freeze(doc["mul"]),
                   zero=doc["zero"], one=doc["one"], label=doc.get("label", "R"),
                   names=tuple(doc["elements"]) if "elements" in doc else None)
        if ring.order != doc["order"]:
            raise InvalidRing("order does not match table size")
        return ring

    def same_tables(self, other):
        return (self.add == other.add and self.mul == other.mul
                and self.zero == other.zero and self.one == other.one)


def _freeze(rows):
    return tuple(tuple(int(x) for x in r) for r in rows)


@dataclass(frozen=True)
class Ideal:
    ring: FiniteRing
    members: frozenset
    generators: tuple = field(default=None, compare=False)

    def __contains__(self, a):
        return a in self.members

    def __len__(self):
        return len(self.members)

    @property
    def sorted(self):
        return tuple(sorted(self.members))

    @property
    def is_proper(self):
        return self.ring.one not in self.members

    def __le__(self, other):
        return self.members <= other.members

    def __lt__(self, other):
        return self.members < other.members

    def describe(self):
        R = self.ring
        gens = self.generators if self.generators is not None else self.sorted
        return "(" + ", ".join(R.name(g) for g in gens) + ")"

    def to_json(self):
        R = self.ring
        doc = {"members": [R.name(a) for a in self.sorted]}
        if self.generators is not None:
            doc["generators"] = [R.name(a) for a in self.generators]
        return doc


@dataclass(frozen=True)
class PrimeIdeal:
    ideal: Ideal
    complement_closed: bool

    @property
    def members(self):
        return self.ideal.members

    @property
    def ring(self):
        return self.ideal.ring

    def __contains__(self, a):
        return a in self.ideal

    def recheck(self):
        return is_prime_ideal(self.ideal)


@dataclass(frozen=True, eq=False)
class RingHom:
    """A map of finite rings stored as its full image table."""

    domain: FiniteRing
    codomain: FiniteRing
    image: tuple[int, ...]

    def __call__(self, a):
        return self.image[a]

    def __eq__(self, other):
        return (isinstance(other, RingHom) and self.domain is other.domain
                and self.codomain is other.codomain and self.image == other.image)

    def __hash__(self):
        return hash((id(self.domain), id(self.codomain), self.image))

    def __matmul__(self, inner):
        """``self @ inner`` is the composite ``self o inner``."""
        return RingHom(inner.domain, self.codomain,
                       tuple(self.image[b] for b in inner.image))

    def __repr__(self):
        return f"RingHom({self.domain.label} -> {self.codomain.label}, {self.image})"

    def failures(self):
        R, S, f = self.domain, self.codomain, self.image
        bad = []
        if len(f) != R.order:
            return ["image table has wrong length"]
        if f[R.one] != S.one:
            bad.append("1 not sent to 1")
        for a in R.elements:
            for b in R.elements:
                if f[R.add[a][b]] != S.add[f[a]][f[b]]:
                    bad.append(f"not additive at {a},{b}")
                    return bad
                if f[R.mul[a][b]] != S.mul[f[a]][f[b]]:
                    bad.append(f"not multiplicative at {a},{b}")
                    return bad
        return bad

    def is_hom(self):
        return not self.failures()

    def kernel(self):
        z = self.codomain.zero
        return Ideal(self.domain, frozenset(a for a in self.domain.elements
                                            if self.image[a] == z))

    @property
    def image_set(self):
        return frozenset(self.image)

    def is_injective(self):
        return len(set(self.image)) == self.domain.order

    def is_surjective(self):
        return len(set(self.image)) == self.codomain.order

    def is_bijective(self):
        return self.is_injective() and self.is_surjective()

    def to_json(self):
        S = self.codomain
        return {"domain": self.domain.label, "codomain": S.label,
                "image": [S.name(b) for b in self.image]}


def identity(R):
    return RingHom(R, R, tuple(R.elements))


@dataclass(frozen=True)
class LocalDecomposition:
    factors: tuple[tuple[FiniteRing, int], ...]
    product: FiniteRing
    iso: RingHom

    @property
    def idempotents(self):
        return tuple(e for _, e in self.factors)

    @property
    def rings(self):
        return tuple(F for F, _ in self.factors)


@dataclass(frozen=True)
class LocalCheck:
    """Outcome of :func:`is_local`; truthy iff the ring is local."""

    maximal: Ideal | None
    witness: tuple[Ideal, Ideal] | None = None

    def __bool__(self):
        return self.maximal is not None


@dataclass(frozen=True)
class FiniteModule:
    """A finite module over a FiniteRing ``base``.

    ``act[a][m]`` is the scalar action of ring element ``a`` on module
    element ``m``.
    """

    base: FiniteRing
    add: Table
    zero: int
    act: Table
    label: str = "M"
    names: tuple[str, ...] | None = None

    @property
    def order(self):
        return len(self.add)

    def name(self, m):
        return self.names[m] if self.names is not None else str(m)

    def action_failures(self):
        A, add, act = self.base, self.add, self.act
        M = range(self.order)
        bad = []
        for m in M:
            if act[A.one][m] != m:
                bad.append(f"1.{m} != {m}")
            for n in M:
                if add[m][n] != add[n][m]:
                    bad.append(f"module addition not commutative at {m},{n}")
        for a, b in itertools.product(A.elements, A.elements):
            for m in M:
                if act[A.add[a][b]][m] != add[act[a][m]][act[b][m]]:
                    bad.append(f"(a+b)m != am+bm at {a},{b},{m}")
                if act[A.mul[a][b]][m] != act[a][act[b][m]]:
                    bad.append(f"(ab)m != a(bm) at {a},{b},{m}")
            if bad:
                return bad
        for a in A.elements:
            for m, n in itertools.product(M, M):
                if act[a][add[m][n]] != add[act[a][m]][act[a][n]]:
                    return [f"a(m+n) != am+an at {a},{m},{n}"]
        return bad


# -- constructors ----------------------------------------------------------

def _is_prime(n):
    return n >= 2 and all(n % d for d in range(2, int(n ** 0.5) + 1))


def _prime_power(q):
    for p in range(2, q + 1):
        if q % p == 0:
            k, r = 0, q
            while r % p == 0:
                r //= p
                k += 1
            return (p, k) if r == 1 else None
    return None


def make_zmod(n):
    if n < 1:
        raise ValueError("n must be positive")
    _check_table_cap(n)
    E = range(n)
    return FiniteRing(add=tuple(tuple((a + b) % n for b in E) for a in E),
                      mul=tuple(tuple((a * b) % n for b in E) for a in E),
                      zero=0, one=1 % n, label=f"Z/{n}")


def _polymulmod(a, b, modulus, p):
    """Multiply coefficient lists a*b modulo the monic ``modulus`` over F_p."""
    k = len(modulus) - 1
    res = [0] * (2 * k)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                res[i + j] = (res[i + j] + x * y) % p
    for d in range(len(res) - 1, k - 1, -1):
        c = res[d]
        if c:
            for i in range(k + 1):
                res[d - k + i] = (res[d - k + i] - c * modulus[i]) % p
    return res[:k]


def _monic_polys(p, deg):
    for coeffs in itertools.product(range(p), repeat=deg):
        yield list(coeffs) + [1]


def _divides(d, f, p):
    f = list(f)
    inv = pow(d[-1], -1, p)
    for i in range(len(f) - len(d), -1, -1):
        c = f[i + len(d) - 1] * inv % p
        if c:
            for j, x in enumerate(d):
                f[i + j] = (f[i + j] - c * x) % p
    return not any(f)


def _irreducible(p, k):
    for f in _monic_polys(p, k):
        if all(not _divides(d, f, p) for deg in range(1, k // 2 + 1)
               for d in _monic_polys(p, deg)):
            return f
    raise AssertionError("unreachable")


def _poly_name(coeffs, var):
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mono:
            parts.append(str(c))
        else:
            parts.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(parts) or "0"


def make_gf(q):
    """The field with q elements (q a prime power)."""
    pk = _prime_power(q)
    if pk is None:
        raise ValueError(f"{q} is not a prime power")
    p, k = pk
    if k == 1:
        R = make_zmod(p)
        return FiniteRing(R.add, R.mul, R.zero, R.one, label=f"F{q}")
    _check_table_cap(q)
    modulus = _irreducible(p, k)
    vecs = [[(i // p ** j) % p for j in range(k)] for i in range(q)]

    def idx(v):
        return sum(c * p ** j for j, c in enumerate(v))

    E = range(q)
    add = tuple(tuple(idx([(x + y) % p for x, y in zip(vecs[a], vecs[b])]) for b in E)
                for a in E)
    mul = tuple(tuple(idx(_polymulmod(vecs[a], vecs[b], modulus, p)) for b in E)
                for a in E)
    names = tuple(_poly_name(v, "a") for v in vecs)
    return FiniteRing(add, mul, 0, 1, label=f"F{q}", names=names)


def _wrap(label):
    return f"({label})" if " x " in label else label


def make_product(factors):
    factors = tuple(factors)
    if not factors:
        raise ValueError("product needs at least one factor")
    if len(factors) == 1:
        return factors[0]
    n = prod(F.order for F in factors)
    _check_table_cap(n)
    radix = [prod(F.order for F in factors[i + 1:]) for i in range(len(factors))]
    comps = [tuple((i // r) % F.order for F, r in zip(factors, radix)) for i in range(n)]

    def idx(c):
        return sum(x * r for x, r in zip(c, radix))

    E = range(n)
    add = tuple(tuple(idx([F.add[x][y] for F, x, y in zip(factors, comps[a], comps[b])])
                      for b in E) for a in E)
    mul = tuple(tuple(idx([F.mul[x][y] for F, x, y in zip(factors, comps[a], comps[b])])
                      for b in E) for a in E)
    names = tuple("(" + ",".join(F.name(x) for F, x in zip(factors, c)) + ")" for c in comps)
    return FiniteRing(add, mul, idx([F.zero for F in factors]), idx([F.one for F in factors]),
                      label=" x ".join(_wrap(F.label) for F in factors), names=names,
                      factors=factors)


def product_index(P, comps):
    """Index in product ring ``P`` of the tuple of factor elements ``comps``."""
    radix = 1
    idx = 0
    for F, c in zip(reversed(P.factors), reversed(tuple(comps))):
        idx += c * radix
        radix *= F.order
    return idx


def components(P, a):
    out = []
    for F in reversed(P.factors):
        out.append(a % F.order)
        a //= F.order
    return tuple(reversed(out))


def canonical_idempotents(P):
    if not P.factors:
        return (P.one,)
    return tuple(product_index(P, [F.one if i == j else F.zero
                                   for j, F in enumerate(P.factors)])
                 for i in range(len(P.factors)))


def projection(P, i):
    F = P.factors[i]
    return RingHom(P, F, tuple(components(P, a)[i] for a in P.elements))


def diagonal(maps, codomain=None):
    """The map ``a -> (f_1(a), ..., f_k(a))`` into the product of codomains."""
    maps = tuple(maps)
    R = maps[0].domain
    if len(maps) == 1:
        return maps[0]
    P = codomain or make_product([f.codomain for f in maps])
    return RingHom(R, P, tuple(product_index(P, [f(a) for f in maps]) for a in R.elements))


def product_map(maps, domain=None, codomain=None):
    """``diag(f_1, ..., f_k)`` from the product of domains to the product of codomains."""
    maps = tuple(maps)
    if len(maps) == 1:
        return maps[0]
    D = domain or make_product([f.domain for f in maps])
    C = codomain or make_product([f.codomain for f in maps])
    return RingHom(D, C, tuple(product_index(C, [f(x) for f, x in zip(maps, components(D, a))])
                               for a in D.elements))


def _relabel(R, elems, one, label, names=None):
    """Build the ring on the subset ``elems`` (closed under R's operations)."""
    elems = sorted(elems)
    pos = {a: i for i, a in enumerate(elems)}
    add = tuple(tuple(pos[R.add[a][b]] for b in elems) for a in elems)
    mul = tuple(tuple(pos[R.mul[a][b]] for b in elems) for a in elems)
    names = names or tuple(R.name(a) for a in elems)
    return FiniteRing(add, mul, pos[R.zero], pos[one], label=label, names=names), elems


def make_subring(R, gens, label=None):
    """Subring generated by ``gens``; returns the ring and the inclusion hom."""
    S = {R.zero, R.one} | set(gens)
    frontier = list(S)
    while frontier:
        new = []
        for a in frontier:
            for b in list(S):
                for c in (R.add[a][b], R.mul[a][b], R.neg[a]):
                    if c not in S:
                        S.add(c)
                        new.append(c)
        frontier = new
    sub, elems = _relabel(R, S, R.one, label or f"<{R.label}>")
    return sub, RingHom(sub, R, tuple(elems))


def make_quotient(R, I, label=None):
    if not I.members - {R.zero}:
        return R, identity(R)
    cosets = {}
    for a in R.elements:
        rep = min(R.add[a][i] for i in I.members)
        cosets.setdefault(rep, []).append(a)
    reps = sorted(cosets)
    pos = {r: k for k, r in enumerate(reps)}
    proj = [0] * R.order
    for r, members in cosets.items():
        for a in members:
            proj[a] = pos[r]
    add = tuple(tuple(proj[R.add[a][b]] for b in reps) for a in reps)
    mul = tuple(tuple(proj[R.mul[a][b]] for b in reps) for a in reps)
    names = tuple(f"[{R.name(a)}]" for a in reps)
    Q = FiniteRing(add, mul, proj[R.zero], proj[R.one],
                   label=label or f"{_wrap(R.label)}/{I.describe()}", names=names)
    return Q, RingHom(R, Q, tuple(proj))


def _integer_readings(A):
    """Each element of A as an integer multiple of 1 (A must be generated by 1)."""
    seen = {}
    x, k = A.zero, 0
    while x not in seen:
        seen[x] = k
        x = A.add[x][A.one]
        k += 1
    if len(seen) != A.order:
        raise InvalidAction(f"{A.label} is not generated by 1 additively")
    return [seen[a] for a in A.elements]


def cyclic_sum_module(A, moduli, label=None):
    """Z/m_1 + ... + Z/m_r as a module over A = Z/n, acting through ``1_A -> 1``.

    The action is well defined only when every m_i divides n; otherwise
    :func:`make_trivial_extension` reports the failed module axioms.
    """
    moduli = tuple(moduli)
    scalar = _integer_readings(A)
    vecs = list(itertools.product(*[range(m) for m in moduli]))
    index = {v: i for i, v in enumerate(vecs)}
    E = range(len(vecs))

    def plus(u, v):
        return index[tuple((x + y) % m for x, y, m in zip(u, v, moduli))]

    def times(k, u):
        return index[tuple((k * x) % m for x, m in zip(u, moduli))]

    add = tuple(tuple(plus(vecs[x], vecs[y]) for y in E) for x in E)
    act = tuple(tuple(times(scalar[a], vecs[x]) for x in E) for a in A.elements)
    if len(moduli) == 1:
        names = tuple(str(v[0]) for v in vecs)
    else:
        names = tuple("(" + ",".join(map(str, v)) + ")" for v in vecs)
    return FiniteModule(base=A, add=add, zero=0, act=act,
                        label=label or " + ".join(f"Z/{m}" for m in moduli), names=names)


def zmod_module(A, m, label=None):
    """Z/m as a module over A, acting through ``1_A -> 1``.

    Valid only when the characteristic of A is a multiple of m.
    """
    return cyclic_sum_module(A, (m,), label)


def make_trivial_extension(A, M):
    """The ring on A (+) M with (a,m)(b,n) = (ab, an + bm)."""
    bad = M.action_failures()
    if bad:
        raise InvalidAction("; ".join(bad[:3]))
    if M.order == 1:
        return A
    n = A.order * M.order
    _check_table_cap(n)
    m = M.order
    pairs = [(i // m, i % m) for i in range(n)]
    E = range(n)
    add = tuple(tuple(A.add[pairs[x][0]][pairs[y][0]] * m + M.add[pairs[x][1]][pairs[y][1]]
                      for y in E) for x in E)
    mul = []
    for x in E:
        a, u = pairs[x]
        row = []
        for y in E:
            b, v = pairs[y]
            row.append(A.mul[a][b] * m + M.add[M.act[a][v]][M.act[b][u]])
        mul.append(tuple(row))
    names = tuple(f"({A.name(a)},{M.name(u)})" for a, u in pairs)
    return FiniteRing(add, tuple(mul), A.zero * m + M.zero, A.one * m + M.zero,
                      label=f"{_wrap(A.label)} |x {M.label}", names=names)


# -- ideals ----------------------------------------------------------------

def _subgroup(R, gens, start=None):
    S = set(start) if start is not None else {R.zero}
    for x in gens:
        if x in S:
            continue
        cur = list(S)
        y = x
        while y not in S:
            for s in cur:
                S.add(R.add[s][y])
            y = R.add[y][x]
    return S


def ideal_closure(R, gens, start=None):
    gens = tuple(gens)
    multiples = {R.mul[r][g] for g in gens for r in R.elements}
    base = start.members if start is not None else None
    return Ideal(R, frozenset(_subgroup(R, sorted(multiples), base)), generators=gens)


def is_ideal(R, members):
    S = set(members)
    if R.zero not in S:
        return False
    return all(R.add[a][b] in S for a in S for b in S) and \
        all(R.mul[r][a] in S for a in S for r in R.elements)


def zero_ideal(R):
    return Ideal(R, frozenset({R.zero}), generators=())


def unit_ideal(R):
    return Ideal(R, frozenset(R.elements), generators=(R.one,))


def ideal_sum(I, J):
    return ideal_closure(I.ring, sorted(J.members), start=I)


def ideal_product(I, J):
    R = I.ring
    return ideal_closure(R, sorted({R.mul[a][b] for a in I.members for b in J.members}))


def ideal_image(f, I):
    """The ideal of the codomain generated by f(I)."""
    return ideal_closure(f.codomain, sorted({f(a) for a in I.members}))


def preimage(f, J):
    return Ideal(f.domain, frozenset(a for a in f.domain.elements if f(a) in J.members))


def nilradical(R):
    return Ideal(R, frozenset(a for a in R.elements if R.is_nilpotent(a)))


def all_ideals(R):
    """Every ideal of R, in canonical order (by sorted member list)."""
    cap = get_limits().ideal_order
    if R.order > cap:
        raise SizeLimit(f"ideal enumeration capped at order {cap}")
    found = {frozenset({R.zero}): zero_ideal(R)}
    queue = [found[frozenset({R.zero})]]
    while queue:
        I = queue.pop()
        for a in R.elements:
            if a in I.members:
                continue
            J = ideal_closure(R, (a,), start=I)
            if J.members not in found:
                gens = (I.generators or ()) + (a,)
                J = Ideal(R, J.members, generators=gens)
                found[J.members] = J
                queue.append(J)
    return sorted(found.values(), key=lambda I: (len(I), I.sorted))


def is_prime_ideal(I):
    R = I.ring
    out = [a for a in R.elements if a not in I.members]
    return bool(out) and all(R.mul[a][b] not in I.members for a in out for b in out)


def _minimal_generators(I):
    """A short generating list, for display."""
    R = I.ring
    gens = []
    cur = zero_ideal(R)
    for a in sorted(I.members):
        if a not in cur.members:
            gens.append(a)
            cur = ideal_closure(R, (a,), start=cur)
            if cur.members == I.members:
                break
    return tuple(gens)


def spectrum(R):
    """All prime ideals (all maximal, as R is finite), sorted by member list."""
    if R.degenerate:
        raise ZeroRing("the zero ring has empty spectrum")
    proper = [I for I in all_ideals(R) if I.is_proper]
    maximal = [I for I in proper if not any(I < J for J in proper)]
    primes = []
    for I in sorted(maximal, key=lambda I: I.sorted):
        I = Ideal(R, I.members, generators=_minimal_generators(I))
        primes.append(PrimeIdeal(I, is_prime_ideal(I)))
    return primes


def as_prime(R, P):
    """Validate that ``P`` (Ideal or PrimeIdeal) is a prime of R."""
    I = P.ideal if isinstance(P, PrimeIdeal) else P
    if I.ring is not R or not I.is_proper or not is_ideal(R, I.members) \
            or not is_prime_ideal(I):
        raise NotPrime(f"{I.describe()} is not a prime ideal of {R.label}")
    return PrimeIdeal(I, True)


def is_local(R):
    primes = spectrum(R)
    if len(primes) == 1:
        return LocalCheck(primes[0].ideal)
    return LocalCheck(None, (primes[0].ideal, primes[1].ideal))


def _primitive_idempotents(R):
    E = R.idempotents
    return [e for e in E if e != R.zero
            and all(R.mul[e][f] in (R.zero, e) for f in E)]


def _factor_ring(R, e):
    elems = {R.mul[a][e] for a in R.elements}
    return _relabel(R, elems, e, f"{_wrap(R.label)}*{R.name(e)}")


def local_decomposition(R):
    if R.degenerate:
        raise ZeroRing("the zero ring has no local decomposition")
    primes = spectrum(R)
    if len(primes) == 1:
        return LocalDecomposition(((R, R.one),), R, identity(R))
    prim = _primitive_idempotents(R)
    ordered = [next(e for e in prim if e not in P.members) for P in primes]
    factors, positions = [], []
    for e in ordered:
        F, elems = _factor_ring(R, e)
        factors.append((F, e))
        positions.append({a: i for i, a in enumerate(elems)})
    P = make_product([F for F, _ in factors])
    iso = RingHom(R, P, tuple(product_index(P, [pos[R.mul[a][e]]
                                                for pos, (_, e) in zip(positions, factors)])
                              for a in R.elements))
    return LocalDecomposition(tuple(factors), P, iso)


def residue_field(R, P):
    """R/P, labelled F_q."""
    P = as_prime(R, P)
    return make_quotient(R, P.ideal, label=f"F{R.order // len(P.ideal)}")


def localize_at_prime(R, P):
    """R_p, realized as the local factor of R that does not die at p."""
    P = as_prime(R, P)
    dec = local_decomposition(R)
    if len(dec.factors) == 1:
        return R, identity(R)
    for F, e in dec.factors:
        if e not in P.members:
            elems = sorted({R.mul[a][e] for a in R.elements})
            pos = {a: i for i, a in enumerate(elems)}
            return F, RingHom(R, F, tuple(pos[R.mul[a][e]] for a in R.elements))
    raise AssertionError("every prime misses exactly one primitive idempotent")


def infinite_radical(R, m):
    """Stable power of the maximal ideal and the first n with m^n = m^(n+1)."""
    loc = is_local(R)
    if not loc or loc.maximal.members != m.members:
        raise NotLocal(f"{m.describe()} is not the unique maximal ideal of {R.label}")
    power, n = m, 1
    while True:
        nxt = ideal_product(power, m)
        if nxt.members == power.members:
            return power, n
        power, n = nxt, n + 1
