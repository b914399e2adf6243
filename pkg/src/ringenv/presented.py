"""Polynomials over F_p, Groebner bases, and presented quotient algebras.

A :class:`Presentation` is ``F_p[x_1..x_k]/(relations)``.  Zero-dimensional
presentations are finite-dimensional F_p-algebras; small ones convert to
:class:`~ringenv.finring.FiniteRing` tables, larger ones are handled by
linear algebra on the standard-monomial basis.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .config import get_limits
from .errors import (NotZeroDimensional, ResourceLimit, SizeLimit, TooFewVariables,
                     UnitIdeal)
from .finring import FiniteRing, _check_table_cap, _is_prime

TERM_ORDERS = ("degrevlex", "lex")


def order_key(order):
    if order == "degrevlex":
        return lambda e: (sum(e), tuple(-x for x in reversed(e)))
    if order == "lex":
        return lambda e: e
    raise ValueError(f"unknown term order {order!r}")


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _monomial_text(e, variables):
    parts = []
    for v, k in zip(variables, e):
        if k == 1:
            parts.append(v)
        elif k > 1:
            parts.append(f"{v}^{k}")
    return "*".join(parts)


class Polynomial:
    """A polynomial over F_p with terms stored as ``{exponents: coefficient}``."""

    __slots__ = ("p", "variables", "terms")

    def __init__(self, p, variables, terms=None):
        self.p = p
        self.variables = tuple(variables)
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != len(self.variables):
                raise ValueError("exponent vector length must match variables")
            c %= p
            if c:
                clean[e] = c
        self.terms = clean

    @classmethod
    def constant(cls, p, variables, c):
        return cls(p, variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, p, variables, name):
        e = [0] * len(variables)
        e[list(variables).index(name)] = 1
        return cls(p, variables, {tuple(e): 1})

    @classmethod
    def monomial(cls, p, variables, e, c=1):
        return cls(p, variables, {tuple(e): c})

    def _new(self, terms):
        out = Polynomial.__new__(Polynomial)
        out.p, out.variables, out.terms = self.p, self.variables, terms
        return out

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.p != self.p or other.variables != self.variables:
                raise ValueError("polynomials live in different rings")
            return other
        if isinstance(other, int):
            return Polynomial.constant(self.p, self.variables, other)
        return NotImplemented

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(self.p, self.variables, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.p, self.variables, self.terms) == (other.p, other.variables, other.terms)

    def __hash__(self):
        return hash((self.p, self.variables, frozenset(self.terms.items())))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        p = self.p
        for e, c in other.terms.items():
            v = (terms.get(e, 0) + c) % p
            if v:
                terms[e] = v
            else:
                terms.pop(e, None)
        return self._new(terms)

    __radd__ = __add__

    def __neg__(self):
        return self._new({e: (-c) % self.p for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.p
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                v = (terms.get(e, 0) + c1 * c2) % p
                if v:
                    terms[e] = v
                else:
                    terms.pop(e, None)
        return self._new(terms)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = Polynomial.constant(self.p, self.variables, 1)
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c):
        return self._new({e: v * c % self.p for e, v in self.terms.items() if v * c % self.p})

    def shift(self, e, c=1):
        """Multiply by the term ``c * x^e``."""
        p = self.p
        return self._new({tuple(x + y for x, y in zip(k, e)): v * c % p
                          for k, v in self.terms.items()})

    def lead(self, order="degrevlex"):
        """Leading (exponents, coefficient) under ``order``."""
        e = max(self.terms, key=order_key(order))
        return e, self.terms[e]

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def monic(self, order="degrevlex"):
        _, c = self.lead(order)
        return self.scale(pow(c, -1, self.p))

    def sorted_terms(self, order="degrevlex"):
        return sorted(self.terms.items(), key=lambda t: order_key(order)(t[0]), reverse=True)

    def to_text(self, order="degrevlex"):
        if not self.terms:
            return "0"
        out = []
        for e, c in self.sorted_terms(order):
            mono = _monomial_text(e, self.variables)
            if not mono:
                out.append(str(c))
            elif c == 1:
                out.append(mono)
            else:
                out.append(f"{c}*{mono}")
        return " + ".join(out)

    def __repr__(self):
        return self.to_text()


@dataclass(frozen=True)
class Presentation:
    characteristic: int
    variables: tuple
    relations: tuple

    def __post_init__(self):
        if not _is_prime(self.characteristic):
            raise ValueError(f"{self.characteristic} is not prime")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("variable names must be distinct")
        for f in self.relations:
            if f.p != self.characteristic or f.variables != tuple(self.variables):
                raise ValueError("relation does not live in the presented ring")

    def poly(self, terms):
        return Polynomial(self.characteristic, self.variables, terms)

    def var(self, name):
        return Polynomial.var(self.characteristic, self.variables, name)

    def one(self):
        return Polynomial.constant(self.characteristic, self.variables, 1)

    def to_text(self):
        rels = ", ".join(f.to_text() for f in self.relations)
        return f"F{self.characteristic}[{','.join(self.variables)}]/({rels})"


def reduce_poly(f, basis, order="degrevlex"):
    """Full remainder of f modulo ``basis`` (each element monic)."""
    key = order_key(order)
    leads = [(g.lead(order)[0], g) for g in basis]
    p = f.p
    rem = {}
    cur = dict(f.terms)
    while cur:
        e = max(cur, key=key)
        c = cur[e]
        for le, g in leads:
            if _divides(le, e):
                shift = tuple(x - y for x, y in zip(e, le))
                for ge, gc in g.terms.items():
                    t = tuple(x + y for x, y in zip(ge, shift))
                    v = (cur.get(t, 0) - c * gc) % p
                    if v:
                        cur[t] = v
                    else:
                        cur.pop(t, None)
                break
        else:
            rem[e] = c
            del cur[e]
    return f._new(rem)


def s_polynomial(f, g, order="degrevlex"):
    (ef, cf), (eg, cg) = f.lead(order), g.lead(order)
    m = _lcm(ef, eg)
    p = f.p
    a = f.shift(tuple(x - y for x, y in zip(m, ef)), pow(cf, -1, p))
    b = g.shift(tuple(x - y for x, y in zip(m, eg)), pow(cg, -1, p))
    return a - b


@dataclass(frozen=True)
class GroebnerBasis:
    presentation: Presentation
    order: str
    basis: tuple
    reductions: int = 0

    @property
    def is_unit(self):
        return any(all(x == 0 for x in g.lead(self.order)[0]) for g in self.basis)

    @cached_property
    def leading_monomials(self):
        return tuple(g.lead(self.order)[0] for g in self.basis)

    def reduce(self, f):
        return reduce_poly(f, self.basis, self.order)

    def contains(self, f):
        return self.reduce(f).is_zero()

    def spolys_reduce_to_zero(self):
        """Buchberger criterion, checked on every pair."""
        return all(self.reduce(s_polynomial(f, g, self.order)).is_zero()
                   for f, g in itertools.combinations(self.basis, 2))

    def is_reduced(self):
        for i, g in enumerate(self.basis):
            if g.lead(self.order)[1] != 1:
                return False
            others = [h for j, h in enumerate(self.basis) if j != i]
            for e in g.terms:
                if any(_divides(h.lead(self.order)[0], e) for h in others):
                    return False
        return True

    def to_json(self):
        return {"order": self.order, "basis": [g.to_text(self.order) for g in self.basis]}


def buchberger(pres, order="degrevlex", budget=None):
    """Reduced Groebner basis of the relations of ``pres``.

    Pairs are processed lowest lcm degree first, ties broken by index;
    pairs with coprime leading monomials are skipped.
    """
    lim = get_limits()
    if len(pres.variables) > lim.max_variables:
        raise SizeLimit(f"at most {lim.max_variables} variables supported")
    budget = lim.spair_budget if budget is None else budget
    order_key(order)
    G = [f.monic(order) for f in pres.relations if f]
    G = [g for i, g in enumerate(G) if g not in G[:i]]
    pairs = [(i, j) for j in range(len(G)) for i in range(j)]
    done = 0
    while pairs:
        def pkey(ij):
            i, j = ij
            return (sum(_lcm(G[i].lead(order)[0], G[j].lead(order)[0])), i, j)
        pairs.sort(key=pkey)
        i, j = pairs.pop(0)
        ei, ej = G[i].lead(order)[0], G[j].lead(order)[0]
        if all(x == 0 or y == 0 for x, y in zip(ei, ej)):
            continue
        done += 1
        if done > budget:
            raise ResourceLimit(f"S-pair budget {budget} exhausted")
        r = reduce_poly(s_polynomial(G[i], G[j], order), G, order)
        if r:
            G.append(r.monic(order))
            k = len(G) - 1
            pairs.extend((a, k) for a in range(k))
    return GroebnerBasis(pres, order, _autoreduce(G, order), done)


def _autoreduce(G, order):
    key = order_key(order)
    G = sorted(G, key=lambda g: key(g.lead(order)[0]))
    minimal = []
    for g in G:
        lg = g.lead(order)[0]
        if not any(_divides(h.lead(order)[0], lg) for h in minimal):
            minimal.append(g)
    out = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        out.append(reduce_poly(g, others, order).monic(order) if others else g)
    return tuple(sorted(out, key=lambda g: key(g.lead(order)[0])))


def normal_form(f, gb):
    return gb.reduce(f)


@dataclass(frozen=True)
class ZeroDimensionality:
    zero_dimensional: bool
    standard_monomials: int | None = None

    def __bool__(self):
        return self.zero_dimensional


def _pure_power_bounds(gb):
    k = len(gb.presentation.variables)
    bounds = [None] * k
    for e in gb.leading_monomials:
        support = [i for i, x in enumerate(e) if x]
        if len(support) == 1:
            i = support[0]
            bounds[i] = e[i] if bounds[i] is None else min(bounds[i], e[i])
    return bounds


def standard_monomials(gb):
    """Monomials outside the leading-term ideal, in increasing term order."""
    bounds = _pure_power_bounds(gb)
    if any(b is None for b in bounds):
        raise NotZeroDimensional("some variable has no pure power among leading terms")
    leads = gb.leading_monomials
    mons = [e for e in itertools.product(*(range(b) for b in bounds))
            if not any(_divides(le, e) for le in leads)]
    return sorted(mons, key=order_key(gb.order))


def is_zero_dimensional(gb):
    if gb.is_unit:
        raise UnitIdeal("the relations generate the unit ideal")
    if any(b is None for b in _pure_power_bounds(gb)):
        return ZeroDimensionality(False)
    return ZeroDimensionality(True, len(standard_monomials(gb)))


class QuotientAlgebra:
    """Coordinates of a zero-dimensional quotient in its standard-monomial basis."""

    def __init__(self, gb):
        if gb.is_unit:
            raise UnitIdeal("the relations generate the unit ideal")
        zd = is_zero_dimensional(gb)
        if not zd:
            raise NotZeroDimensional("presentation is not zero-dimensional")
        cap = get_limits().presented_dimension
        if zd.standard_monomials > cap:
            raise SizeLimit(f"quotient dimension {zd.standard_monomials} exceeds {cap}")
        self.gb = gb
        self.pres = gb.presentation
        self.p = self.pres.characteristic
        self.basis = standard_monomials(gb)
        self.position = {e: i for i, e in enumerate(self.basis)}
        self.dim = len(self.basis)

    def coords(self, f):
        nf = self.gb.reduce(f)
        v = [0] * self.dim
        for e, c in nf.terms.items():
            v[self.position[e]] = c
        return v

    def poly(self, v):
        return self.pres.poly({e: c for e, c in zip(self.basis, v) if c})

    def principal_span(self, f):
        """Rows spanning the principal ideal (f) as an F_p-subspace."""
        return [self.coords(f.shift(e)) for e in self.basis]

    def contains(self, rows, v):
        return _rank(rows + [v], self.p) == _rank(rows, self.p)

    def nilpotency_index(self, f):
        """Least k with f^k = 0 in the quotient, or None."""
        g = self.gb.reduce(f)
        power = self.gb.reduce(self.pres.one())
        for k in range(1, self.dim + 2):
            power = self.gb.reduce(power * g)
            if power.is_zero():
                return k
        return None


def _rank(rows, p):
    rows = [list(r) for r in rows if any(r)]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] % p), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] % p:
                c = rows[i][col]
                rows[i] = [(x - c * y) % p for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def to_finite_ring(pres, order="degrevlex", budget=None, label=None):
    """Tabulate a zero-dimensional quotient; returns (ring, basis labels)."""
    gb = buchberger(pres, order, budget)
    p = pres.characteristic
    if gb.is_unit:
        return FiniteRing(((0,),), ((0,),), 0, 0, label=label or pres.to_text()), []
    zd = is_zero_dimensional(gb)
    if not zd:
        raise NotZeroDimensional("presentation is not zero-dimensional")
    d = zd.standard_monomials
    if p ** d > get_limits().table_order:
        raise SizeLimit(f"quotient has {p}^{d} elements")
    n = p ** d
    _check_table_cap(n)
    alg = QuotientAlgebra(gb)
    labels = [_monomial_text(e, pres.variables) or "1" for e in alg.basis]
    structure = [[alg.coords(pres.poly({a: 1}) * pres.poly({b: 1})) for b in alg.basis]
                 for a in alg.basis]
    vecs = [[(i // p ** j) % p for j in range(d)] for i in range(n)]

    def idx(v):
        return sum(c * p ** j for j, c in enumerate(v))

    E = range(n)
    add = tuple(tuple(idx([(x + y) % p for x, y in zip(vecs[a], vecs[b])]) for b in E)
                for a in E)
    mul = []
    for a in E:
        va = vecs[a]
        row = []
        for b in E:
            vb = vecs[b]
            out = [0] * d
            for i, x in enumerate(va):
                if not x:
                    continue
                for j, y in enumerate(vb):
                    if not y:
                        continue
                    c = x * y
                    for k, s in enumerate(structure[i][j]):
                        if s:
                            out[k] = (out[k] + c * s) % p
            row.append(idx(out))
        mul.append(tuple(row))
    names = tuple(alg.poly(v).to_text(order).replace(" ", "") for v in vecs)
    one = idx(alg.coords(pres.one()))
    ring = FiniteRing(add, tuple(mul), 0, one, label=label or pres.to_text(), names=names)
    return ring, labels


def fibonacci_numbers(m):
    a = [1, 1]
    while len(a) < m:
        a.append(a[-1] + a[-2])
    return a[:m]


def fibonacci_truncation(p, m):
    """Truncation to x_1..x_m of the ring with x_n = x_{n+1} x_{n+2}, x_n^(a_n + 1) = 0.

    Relations mentioning variables beyond x_m are dropped.
    """
    if m < 3:
        raise TooFewVariables("at least three variables are needed")
    names = tuple(f"x{i}" for i in range(1, m + 1))
    x = [Polynomial.var(p, names, v) for v in names]
    rels = [x[i] - x[i + 1] * x[i + 2] for i in range(m - 2)]
    rels += [x[i] ** (a + 1) for i, a in enumerate(fibonacci_numbers(m))]
    return Presentation(p, names, tuple(rels))


def principal_chain_strict(pres, elements, order="degrevlex", budget=None):
    """For consecutive (a, b): whether the principal ideal (a) sits strictly inside (b)."""
    alg = QuotientAlgebra(buchberger(pres, order, budget))
    spans = [alg.principal_span(f) for f in elements]
    coords = [alg.coords(f) for f in elements]
    out = []
    for k in range(len(elements) - 1):
        inside = alg.contains(spans[k + 1], coords[k])
        back = alg.contains(spans[k], coords[k + 1])
        out.append(inside and not back)
    return out


@dataclass(frozen=True)
class LocalCertificate:
    """Every variable is nilpotent, so (x_1..x_k) is the unique maximal ideal."""

    local: bool
    nilpotency: dict
    dimension: int

    def to_json(self):
        return {"local": self.local, "nilpotency_index": self.nilpotency,
                "dimension": self.dimension}


def local_certificate(pres, order="degrevlex", budget=None):
    """Certify locality of a zero-dimensional algebra by nilpotent generators.

    When every variable is nilpotent the ideal they generate is nil with
    quotient F_p, hence the unique maximal ideal, and it equals the
    nilradical.  ``local`` is False when some variable is not nilpotent
    (locality is then undecided by this route).
    """
    alg = QuotientAlgebra(buchberger(pres, order, budget))
    idx = {v: alg.nilpotency_index(pres.var(v)) for v in pres.variables}
    return LocalCertificate(all(k is not None for k in idx.values()), idx, alg.dim)
