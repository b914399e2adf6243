"""Exhaustive search for unital ring homomorphisms between finite rings.

This is the definition-level oracle: a map ``f: R -> F`` is a preenvelope
relative to a catalog when every map from R into a catalog ring factors
through f, and it is minimal when every endomorphism ``v`` of F with
``v o f = f`` is bijective.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement
from math import prod

from .config import get_limits
from .errors import ClassMismatch, SizeLimit
from .finring import RingHom, make_gf, make_product, make_zmod


class ClassTag(str, enum.Enum):
    FIELD = "field"
    SEMISIMPLE = "semisimple"
    DOMAIN = "domain"
    NOETHERIAN = "noetherian"

    @classmethod
    def parse(cls, value):
        return value if isinstance(value, cls) else cls(str(value).lower())


def satisfies(R, tag):
    """Class predicate on a finite ring; the zero ring belongs to no class."""
    tag = ClassTag.parse(tag)
    if R.degenerate:
        return False
    if tag is ClassTag.FIELD:
        return R.is_field()
    if tag is ClassTag.SEMISIMPLE:
        return R.is_reduced()
    if tag is ClassTag.DOMAIN:
        return all(R.mul[a][b] != R.zero for a in R.elements if a != R.zero
                   for b in R.elements if b != R.zero)
    return True


class Status(str, enum.Enum):
    EXISTS = "Exists"
    NOT_EXISTS = "NotExists"
    UNKNOWN = "Unknown"


@dataclass
class EnvelopeVerdict:
    status: Status
    cls: ClassTag | None = None
    map: object = None            # RingHom or a symbolic map descriptor
    witness: dict | None = None
    minimal: bool | None = None
    endo_count: int | None = None
    reason: str | None = None
    certificate: dict = field(default_factory=dict)
    catalog: dict | None = None

    def __post_init__(self):
        self.status = Status(self.status)
        if self.status is Status.EXISTS and self.map is None:
            raise ValueError("an Exists verdict needs a map")
        if self.status is Status.NOT_EXISTS and self.witness is None:
            raise ValueError("a NotExists verdict needs a witness")
        if self.status is Status.UNKNOWN and not self.reason:
            raise ValueError("an Unknown verdict needs a reason")

    @property
    def exists(self):
        return self.status is Status.EXISTS

    def to_json(self):
        doc = {"status": self.status.value,
               "class": self.cls.value if self.cls else None,
               "map": self.map.to_json() if self.map is not None else None,
               "witness": self.witness}
        if self.minimal is not None:
            doc["minimal"] = self.minimal
            doc["endo_count"] = self.endo_count
        if self.reason:
            doc["reason"] = self.reason
        if self.certificate:
            doc["certificate"] = self.certificate
        if self.catalog is not None:
            doc["catalog"] = self.catalog
        return doc


@dataclass(frozen=True)
class HomSet:
    domain: object
    codomain: object
    homs: tuple[RingHom, ...]

    def __len__(self):
        return len(self.homs)

    def __iter__(self):
        return iter(self.homs)


@dataclass(frozen=True)
class Catalog:
    cls: ClassTag
    rings: tuple
    provenance: str
    max_order: int

    extra_orders: tuple = ()

    def to_json(self):
        doc = {"class": self.cls.value, "max_order": self.max_order, "size": len(self.rings)}
        if self.extra_orders:
            doc["extra_orders"] = list(self.extra_orders)
        return doc


# -- enumeration -------------------------------------------------------------

def _span_with(R, S, g):
    T = set(S)
    y = g
    while y not in S:
        for s in S:
            T.add(R.add[s][y])
        y = R.add[y][g]
    return T


def additive_generators(R):
    """Greedy generating set of (R, +), starting with 1."""
    gens = [R.one]
    span = _span_with(R, {R.zero}, R.one)
    while len(span) < R.order:
        best, best_span = None, span
        for a in R.elements:
            if a in span:
                continue
            T = _span_with(R, span, a)
            if len(T) > len(best_span):
                best, best_span = a, T
        gens.append(best)
        span = best_span
    return gens


def _extend(R, S, img, g, t):
    """Extend the additive partial map ``img`` by ``g -> t``; None if inconsistent."""
    new = dict(img)
    cur = list(img.items())
    y, ty = g, t
    fresh = []
    while y not in img:
        for s, fs in cur:
            x = R.add[s][y]
            v = S.add[fs][ty]
            if x in new:
                if new[x] != v:
                    return None
            else:
                new[x] = v
                fresh.append(x)
        y, ty = R.add[y][g], S.add[ty][t]
    if img[y] != ty:
        return None
    # multiplicativity on pairs that involve a fresh element
    Rm, Sm = R.mul, S.mul
    for a in fresh:
        fa = new[a]
        for b, fb in new.items():
            c = Rm[a][b]
            if c in new and new[c] != Sm[fa][fb]:
                return None
    return new


def _check_hom_cap(R, S):
    cap = get_limits().hom_order
    if R.order > cap or S.order > cap:
        raise SizeLimit(f"hom enumeration capped at order {cap}")


def enumerate_homs(R, S):
    """All unital homomorphisms R -> S, sorted by image table."""
    _check_hom_cap(R, S)
    return _enumerate(R, S)


@lru_cache(maxsize=8192)
def _enumerate(R, S):
    gens = additive_generators(R)
    start = _extend(R, S, {R.zero: S.zero}, R.one, S.one)
    results = []

    def walk(k, img):
        if k == len(gens):
            results.append(tuple(img[a] for a in R.elements))
            return
        for t in S.elements:
            nxt = _extend(R, S, img, gens[k], t)
            if nxt is not None:
                walk(k + 1, nxt)

    if start is not None:
        walk(1, start)
    return HomSet(R, S, tuple(RingHom(R, S, im) for im in sorted(set(results))))


def factors_through(g, f):
    """Some h with ``h o f = g`` (first in canonical order), else None."""
    if g.domain is not f.domain:
        raise ValueError("maps must share their domain")
    for h in enumerate_homs(f.codomain, g.codomain):
        if all(h.image[b] == c for b, c in zip(f.image, g.image)):
            return h
    return None


def find_isomorphism(A, B, over=None):
    """A bijective hom A -> B; with ``over=(f, g)`` also require ``h o f = g``."""
    if A.order != B.order:
        return None
    for h in enumerate_homs(A, B):
        if not h.is_bijective():
            continue
        if over is not None:
            f, g = over
            if any(h.image[b] != c for b, c in zip(f.image, g.image)):
                continue
        return h
    return None


@dataclass(frozen=True)
class PreenvelopeCheck:
    ok: bool
    witness: tuple | None = None     # (S, g) that does not factor
    checked: int = 0

    def __bool__(self):
        return self.ok


def is_preenvelope(f, catalog):
    if not satisfies(f.codomain, catalog.cls):
        raise ClassMismatch(f"{f.codomain.label} is not in class {catalog.cls.value}")
    checked = 0
    for S in catalog.rings:
        through = {(h @ f).image for h in enumerate_homs(f.codomain, S)}
        for g in enumerate_homs(f.domain, S):
            checked += 1
            if g.image not in through:
                return PreenvelopeCheck(False, (S, g), checked)
    return PreenvelopeCheck(True, None, checked)


@dataclass(frozen=True)
class MinimalityCheck:
    ok: bool
    endo_count: int            # endomorphisms v of the codomain with v o f = f
    checked: int               # all endomorphisms examined
    witness: RingHom | None = None

    def __bool__(self):
        return self.ok


def is_minimal(f):
    endos = enumerate_homs(f.codomain, f.codomain)
    commuting = [v for v in endos if (v @ f).image == f.image]
    bad = next((v for v in commuting if not v.is_bijective()), None)
    return MinimalityCheck(bad is None, len(commuting), len(endos), bad)


def _witness_json(S, g):
    return {"codomain": S.label, "map": g.to_json()}


def is_envelope(f, catalog):
    pre = is_preenvelope(f, catalog)
    if not pre:
        S, g = pre.witness
        return EnvelopeVerdict(Status.NOT_EXISTS, catalog.cls, witness={
            "kind": "does_not_factor", **_witness_json(S, g)}, catalog=catalog.to_json())
    mini = is_minimal(f)
    if not mini:
        return EnvelopeVerdict(Status.NOT_EXISTS, catalog.cls, witness={
            "kind": "not_minimal", "endomorphism": mini.witness.to_json()},
            minimal=False, endo_count=mini.endo_count, catalog=catalog.to_json())
    return EnvelopeVerdict(Status.EXISTS, catalog.cls, map=f, minimal=True,
                           endo_count=mini.endo_count, catalog=catalog.to_json())


def search_envelope(R, catalog):
    """Look for any catalog-relative envelope of R among maps into the catalog."""
    candidates = 0
    for S in catalog.rings:
        for g in enumerate_homs(R, S):
            candidates += 1
            if is_preenvelope(g, catalog) and is_minimal(g):
                return is_envelope(g, catalog)
    return EnvelopeVerdict(Status.NOT_EXISTS, catalog.cls, witness={
        "kind": "no_catalog_envelope", "candidates": candidates,
        "catalog_size": len(catalog.rings)}, catalog=catalog.to_json())


# -- catalogs ----------------------------------------------------------------

def _prime_powers(limit):
    out = []
    for q in range(2, limit + 1):
        p = next(d for d in range(2, q + 1) if q % d == 0)
        r = q
        while r % p == 0:
            r //= p
        if r == 1:
            out.append(q)
    return out


@lru_cache(maxsize=None)
def _field(q):
    return make_gf(q)


@lru_cache(maxsize=None)
def _zmod(n):
    return make_zmod(n)


@lru_cache(maxsize=None)
def _product(orders):
    return make_product([_field(q) for q in orders])


def _field_products(max_order):
    qs = _prime_powers(max_order)
    combos = []
    for k in range(1, max_order.bit_length() + 1):
        for c in combinations_with_replacement(qs, k):
            if prod(c) <= max_order:
                combos.append(c)
    combos.sort(key=lambda c: (len(c), prod(c), c))
    return [_product(c) for c in combos]


@lru_cache(maxsize=None)
def build_catalog(tag, max_order):
    tag = ClassTag.parse(tag)
    if tag in (ClassTag.FIELD, ClassTag.DOMAIN):
        rings = [_field(q) for q in _prime_powers(max_order)]
        prov = f"F_q for prime powers q <= {max_order}"
        if tag is ClassTag.DOMAIN:
            prov += " (finite domains are fields)"
    elif tag is ClassTag.SEMISIMPLE:
        rings = _field_products(max_order)
        prov = f"products of finite fields of order <= {max_order}"
    else:
        rings = [_zmod(n) for n in range(2, max_order + 1)]
        rings += [_field(q) for q in _prime_powers(max_order) if not _is_prime(q)]
        rings += [R for R in _field_products(max_order) if R.factors]
        prov = f"Z/n, F_q and field products of order <= {max_order}"
    rings = tuple(rings)
    assert all(satisfies(R, tag) for R in rings)
    return Catalog(tag, rings, prov, max_order)


def _divisor_members(tag, n, max_order):
    """Class members (of the catalog families) whose order divides n but exceeds max_order."""
    qs = [q for q in _prime_powers(n) if n % q == 0]
    fields = [q for q in qs if q > max_order]
    if tag in (ClassTag.FIELD, ClassTag.DOMAIN):
        return [_field(q) for q in fields]
    combos = []
    for k in range(2, n.bit_length() + 1):
        for c in combinations_with_replacement(qs, k):
            if n % prod(c) == 0 and prod(c) > max_order:
                combos.append(c)
    combos.sort(key=lambda c: (len(c), prod(c), c))
    rings = [_field(q) for q in fields]
    if tag is ClassTag.NOETHERIAN:
        rings = [_zmod(d) for d in range(max_order + 1, n + 1) if n % d == 0] + [
            _field(q) for q in fields if not _is_prime(q)]
    return rings + [_product(c) for c in combos]


@lru_cache(maxsize=None)
def catalog_for(tag, max_order, order):
    """The bounded catalog plus the members whose order divides ``order``.

    Every map out of a ring R factors through its image, a quotient whose
    order divides |R|; for the field, domain and semisimple classes the
    image is again a member, so adding these members makes the
    catalog-relative answer the absolute one for R.
    """
    tag = ClassTag.parse(tag)
    base = build_catalog(tag, max_order)
    extra = [S for S in _divisor_members(tag, order, max_order) if satisfies(S, tag)]
    if not extra:
        return base
    return Catalog(tag, base.rings + tuple(extra), base.provenance
                   + f", plus members of order dividing {order}", max_order,
                   tuple(sorted({S.order for S in extra})))


def _is_prime(n):
    return n >= 2 and all(n % d for d in range(2, int(n ** 0.5) + 1))
