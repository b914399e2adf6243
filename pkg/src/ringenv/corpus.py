"""The finite test corpus, described in the ring language.

Every entry is a DSL string; :func:`corpus_rings` realizes them.  The
largest entry, F3[x]/(x^4), has 81 elements, so realizing the full corpus
needs ``limits(table_order=81, ideal_order=81, hom_order=81)``
(see :data:`CORPUS_LIMITS`).
"""

from __future__ import annotations

from functools import lru_cache

from .dsl import parse, to_finite
from .finring import _prime_power

CORPUS_LIMITS = {"table_order": 81, "ideal_order": 81, "hom_order": 81}
FIELD_ORDERS = (2, 3, 4, 5, 7, 8, 9)


def zmod_entries(lo=2, hi=30):
    return [f"Z/{n}" for n in range(lo, hi + 1)]


def field_entries():
    return [f"F{q}" for q in FIELD_ORDERS]


def truncated_polynomial_entries():
    out = [f"F{p}[x]/(x^{k})" for p in (2, 3) for k in range(1, 5)]
    return out + ["F2[x,y]/(x^2, x*y, y^2)"]


def trivial_extension_entries(max_order=32):
    out = []
    for p in (2, 3, 5):
        for a in range(1, 6):
            for b in range(1, a + 1):
                if p ** (a + b) <= max_order:
                    out.append(f"triv(Z/{p ** a}; cyc({p}^{b}))")
    return out


def local_entries():
    """Corpus entries that are local rings, with their orders."""
    out = []
    for n in range(2, 31):
        if _prime_power(n):
            out.append((f"Z/{n}", n))
    out += [(f"F{q}", q) for q in FIELD_ORDERS]
    for p in (2, 3):
        out += [(f"F{p}[x]/(x^{k})", p ** k) for k in range(1, 5)]
    out.append(("F2[x,y]/(x^2, x*y, y^2)", 8))
    for e in trivial_extension_entries():
        A, rest = e[len("triv(Z/"):].split(";")
        p, b = rest.strip()[len("cyc("):-2].split("^")
        out.append((e, int(A) * int(p) ** int(b)))
    return out


def product_entries(max_order=36):
    """Products A x B of two corpus local rings (A listed first) with |A||B| <= max_order."""
    locs = local_entries()
    out = []
    for i, (a, m) in enumerate(locs):
        for b, n in locs[i:]:
            if m * n <= max_order:
                out.append(f"{a} x {b}")
    return out


def corpus_entries():
    entries = (zmod_entries() + field_entries() + product_entries()
               + truncated_polynomial_entries() + trivial_extension_entries())
    return list(dict.fromkeys(entries))


@lru_cache(maxsize=None)
def realize(text):
    return to_finite(parse(text))


def corpus_rings(entries=None):
    """(text, ring) pairs; call inside ``limits(**CORPUS_LIMITS)``."""
    return [(e, realize(e)) for e in (entries if entries is not None else corpus_entries())]
