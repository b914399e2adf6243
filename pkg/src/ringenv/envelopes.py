"""Constructive envelope deciders for finite rings.

Each decider builds the envelope map from ring-theoretic data (maximal
ideal, spectrum, nilradical) without searching; :func:`verify` replays
the answer against the exhaustive oracle in :mod:`ringenv.homsearch`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import get_limits
from .errors import ClassMismatch, SizeLimit, ZeroRing
from .finring import (diagonal, ideal_image, ideal_product, identity, infinite_radical,
                      is_local, local_decomposition, localize_at_prime, make_product,
                      nilradical, preimage, product_map, residue_field,
                      is_prime_ideal, spectrum)
from .homsearch import (ClassTag, EnvelopeVerdict, Status, catalog_for, is_envelope,
                        is_minimal, search_envelope)


def _nonzero(R):
    if R.degenerate:
        raise ZeroRing("envelope deciders reject the zero ring")


def _with_minimality(verdict):
    f = verdict.map
    if f.codomain.order <= get_limits().hom_order:
        m = is_minimal(f)
        verdict.minimal = m.ok
        verdict.endo_count = m.endo_count
    return verdict


def _ideal_json(I):
    return {"generators": [I.ring.name(a) for a in (I.generators or I.sorted)],
            "members": [I.ring.name(a) for a in I.sorted]}


def field_envelope(R):
    _nonzero(R)
    loc = is_local(R)
    if not loc:
        p, q = loc.witness
        return EnvelopeVerdict(Status.NOT_EXISTS, ClassTag.FIELD, witness={
            "kind": "two_maximal_ideals", "ideals": [_ideal_json(p), _ideal_json(q)]},
            certificate={"krull_dimension": 0, "local": False})
    m = loc.maximal
    _, proj = residue_field(R, m)
    return _with_minimality(EnvelopeVerdict(
        Status.EXISTS, ClassTag.FIELD, map=proj,
        certificate={"krull_dimension": 0, "local": True, "maximal_ideal": _ideal_json(m)}))


def semisimple_envelope(R):
    _nonzero(R)
    primes = spectrum(R)
    maps = [residue_field(R, P)[1] for P in primes]
    f = diagonal(maps)
    return _with_minimality(EnvelopeVerdict(
        Status.EXISTS, ClassTag.SEMISIMPLE, map=f,
        certificate={"spectrum": [_ideal_json(P.ideal) for P in primes],
                     "residue_fields": [u.codomain.label for u in maps]}))


def domain_envelope(R):
    _nonzero(R)
    nil = nilradical(R)
    if is_prime_ideal(nil):
        _, proj = residue_field(R, nil)
        return _with_minimality(EnvelopeVerdict(
            Status.EXISTS, ClassTag.DOMAIN, map=proj,
            certificate={"nilradical": _ideal_json(nil), "nilradical_prime": True}))
    out = [a for a in R.elements if a not in nil.members]
    a, b = next((a, b) for a in out for b in out if R.mul[a][b] in nil.members)
    return EnvelopeVerdict(Status.NOT_EXISTS, ClassTag.DOMAIN, witness={
        "kind": "zero_divisor_mod_nil", "a": R.name(a), "b": R.name(b),
        "product": R.name(R.mul[a][b])},
        certificate={"nilradical": _ideal_json(nil), "nilradical_prime": False})


def local_factor_data(R):
    """Per local factor: maximal ideal, stabilization index, stable power."""
    dec = local_decomposition(R)
    data = []
    for F, e in dec.factors:
        m = is_local(F).maximal
        stable, n = infinite_radical(F, m)
        data.append({"factor": F.label, "order": F.order, "idempotent": R.name(e),
                     "stabilization_index": n, "stable_ideal_zero": len(stable) == 1})
    return data


def noetherian_envelope_finite(R):
    """Finite rings are Artinian, so the identity is the Noetherian envelope.

    The certificate still records, per local factor, the first n with
    m^n = m^(n+1) and that this stable power is zero.
    """
    _nonzero(R)
    return _with_minimality(EnvelopeVerdict(
        Status.EXISTS, ClassTag.NOETHERIAN, map=identity(R),
        certificate={"local_factors": local_factor_data(R), "artinian": True}))


DECIDERS = {
    ClassTag.FIELD: field_envelope,
    ClassTag.SEMISIMPLE: semisimple_envelope,
    ClassTag.DOMAIN: domain_envelope,
    ClassTag.NOETHERIAN: noetherian_envelope_finite,
}


def decide(R, cls):
    return DECIDERS[ClassTag.parse(cls)](R)


_PRODUCT_CLASS = {
    ClassTag.FIELD: ClassTag.SEMISIMPLE,
    ClassTag.SEMISIMPLE: ClassTag.SEMISIMPLE,
    ClassTag.NOETHERIAN: ClassTag.NOETHERIAN,
}


def product_envelope(verdicts, domain=None):
    """Diagonal of factor envelopes, as an envelope of the product ring.

    A NotExists (or Unknown) factor verdict is returned unchanged.  Pass
    ``domain`` to reuse an existing product ring of the factor domains.
    """
    verdicts = list(verdicts)
    for v in verdicts:
        if not v.exists:
            return v
    classes = {v.cls for v in verdicts}
    if len(classes) != 1 or next(iter(classes)) not in _PRODUCT_CLASS:
        raise ClassMismatch("product envelopes need one class among field, "
                            "semisimple, noetherian")
    cls = _PRODUCT_CLASS[classes.pop()]
    maps = [v.map for v in verdicts]
    if len(maps) == 1:
        return verdicts[0]
    D = domain or make_product([f.domain for f in maps])
    C = make_product([f.codomain for f in maps])
    f = product_map(maps, D, C)
    return _with_minimality(EnvelopeVerdict(
        Status.EXISTS, cls, map=f,
        certificate={"factors": [v.map.codomain.label for v in verdicts]}))


def is_restricted(f, I):
    """Whether I = f^{-1}(f(I) N)."""
    return preimage(f, ideal_image(f, I)).members == I.members


@dataclass
class EpimorphicReport:
    nil: bool
    localizations: list
    passes: bool
    explanation: str

    def to_json(self):
        return {"nil": self.nil, "localizations": self.localizations,
                "passes": self.passes, "explanation": self.explanation}


def epimorphic_noetherian_check_finite(R, I):
    """Check the nil-ideal criterion for R -> R/I to be a Noetherian envelope."""
    nil = nilradical(R)
    is_nil = I.members <= nil.members
    rows = []
    for P in spectrum(R):
        L, proj = localize_at_prime(R, P)
        I_p = ideal_image(proj, I)
        pI_p = ideal_product(ideal_image(proj, P.ideal), I_p)
        rows.append({"prime": _ideal_json(P.ideal), "local_ring": L.label,
                     "I_p": [L.name(a) for a in I_p.sorted],
                     "pI_p": [L.name(a) for a in pI_p.sorted],
                     "equal": I_p.members == pI_p.members})
    passes = is_nil and all(r["equal"] for r in rows)
    if not is_nil:
        why = "I is not contained in the nilradical"
    elif passes:
        why = "I is nil and p I_p = I_p at every prime; here I_p = 0 everywhere"
    else:
        why = ("a nonzero nil I_p in a finite local ring has p I_p strictly smaller "
               "(the maximal ideal is nilpotent), so only I = 0 passes")
    return EpimorphicReport(is_nil, rows, passes, why)


@dataclass
class Verification:
    theorem: EnvelopeVerdict
    oracle: EnvelopeVerdict
    catalog_max_order: int

    @property
    def agree(self):
        return self.theorem.status is self.oracle.status

    @property
    def status(self):
        return "agree" if self.agree else "discrepancy"

    def to_json(self):
        return {"status": self.status, "theorem": self.theorem.to_json(),
                "oracle": self.oracle.to_json(),
                "catalog_max_order": self.catalog_max_order}


def verify(R, cls, max_order=9):
    """Replay a decider's verdict against the catalog-relative oracle.

    Exists verdicts are checked by running the oracle on the constructed
    map; NotExists verdicts by searching every map into the catalog for
    an envelope.  The catalog holds the class members up to ``max_order``
    and those whose order divides |R|.
    """
    cls = ClassTag.parse(cls)
    catalog = catalog_for(cls, max_order, R.order)
    theorem = decide(R, cls)
    if theorem.exists:
        try:
            oracle = is_envelope(theorem.map, catalog)
        except SizeLimit as exc:
            oracle = EnvelopeVerdict(Status.UNKNOWN, cls, reason=str(exc))
    else:
        oracle = search_envelope(R, catalog)
    return Verification(theorem, oracle, max_order)
