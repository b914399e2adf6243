"""Deciding field, semisimple, domain and Noetherian envelopes of commutative rings.

Three backends share one vocabulary of verdicts: finite rings given by
tables (:mod:`ringenv.finring`), presented quotients of polynomial rings
over F_p (:mod:`ringenv.presented`), and symbolic trivial extensions
(:mod:`ringenv.symring`).  :mod:`ringenv.homsearch` is the brute-force
oracle the constructive deciders in :mod:`ringenv.envelopes` are checked
against.
"""

from .config import Limits, get_limits, limits
from .dsl import parse, to_text
from .envelopes import (decide, domain_envelope, field_envelope, noetherian_envelope_finite,
                        product_envelope, semisimple_envelope, verify)
from .errors import RingError
from .finring import (FiniteRing, Ideal, RingHom, local_decomposition, make_gf, make_product,
                      make_quotient, make_trivial_extension, make_zmod, nilradical, spectrum)
from .homsearch import (ClassTag, EnvelopeVerdict, Status, build_catalog, enumerate_homs,
                        is_envelope)
from .presented import Polynomial, Presentation, buchberger, normal_form, to_finite_ring
from .symring import (SymTrivExt, epimorphic_noetherian_envelope, noetherian_envelope_decision,
                      sym_envelope)

__version__ = "0.1.0"

__all__ = [
    "Limits", "get_limits", "limits", "parse", "to_text", "decide", "domain_envelope",
    "field_envelope", "noetherian_envelope_finite", "product_envelope",
    "semisimple_envelope", "verify", "RingError", "FiniteRing", "Ideal", "RingHom",
    "local_decomposition", "make_gf", "make_product", "make_quotient",
    "make_trivial_extension", "make_zmod", "nilradical", "spectrum", "ClassTag",
    "EnvelopeVerdict", "Status", "build_catalog", "enumerate_homs", "is_envelope",
    "Polynomial", "Presentation", "buchberger", "normal_form", "to_finite_ring",
    "SymTrivExt", "epimorphic_noetherian_envelope", "noetherian_envelope_decision",
    "sym_envelope",
]
