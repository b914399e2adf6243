"""Symbolic trivial extensions A |x N over Z_(p), Z and Q.

The module N is a finite direct sum of summands drawn from
``free(r)`` (A^r), ``cyc(p^k)`` (A/p^k), ``pruefer(p)`` (the p-primary
torsion divisible module) and ``Q``.  Localizations are computed by a
closed rule table, one rule per (summand kind, prime kind) pair.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

from .errors import UnsupportedBase, UnsupportedSubmodule
from .finring import _is_prime
from .homsearch import ClassTag, EnvelopeVerdict, Status

ZLOCAL, INTEGERS, RATIONALS = "Zp", "Z", "Q"


@dataclass(frozen=True)
class BaseRing:
    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind not in (ZLOCAL, INTEGERS, RATIONALS):
            raise UnsupportedBase(f"unknown base ring {self.kind!r}")
        if self.kind == ZLOCAL and (self.p is None or not _is_prime(self.p)):
            raise ValueError("Z_(p) needs a prime p")
        if self.kind != ZLOCAL and self.p is not None:
            raise ValueError(f"{self.kind} takes no prime")

    @property
    def label(self):
        return f"Z_({self.p})" if self.kind == ZLOCAL else self.kind

    def is_nonunit_prime(self, q):
        if self.kind == ZLOCAL:
            return q == self.p
        return self.kind == INTEGERS and _is_prime(q)


def z_localized(p):
    return BaseRing(ZLOCAL, p)


FREE, CYCLIC, PRUEFER, FULLQ = "free", "cyc", "pruefer", "Q"


@dataclass(frozen=True)
class Summand:
    kind: str
    p: int | None = None
    k: int = 1          # rank for free, exponent for cyc

    @property
    def label(self):
        if self.kind == FREE:
            return f"free({self.k})"
        if self.kind == CYCLIC:
            return f"cyc({self.p}^{self.k})"
        if self.kind == PRUEFER:
            return f"pruefer({self.p})"
        return "Q"

    def finitely_generated(self, base):
        """Over Q the summand Q is a copy of the base, hence free of rank one."""
        return self.kind in (FREE, CYCLIC) or (self.kind == FULLQ and base.kind == RATIONALS)

    @property
    def torsion(self):
        return self.kind in (CYCLIC, PRUEFER)


def free(rank=1):
    return Summand(FREE, None, rank)


def cyc(p, k):
    return Summand(CYCLIC, p, k)


def pruefer(p):
    return Summand(PRUEFER, p, 1)


FULL_Q = Summand(FULLQ, None, 1)


@dataclass(frozen=True)
class ModuleDescriptor:
    summands: tuple = ()

    @property
    def label(self):
        return " + ".join(s.label for s in self.summands) or "0"

    def __len__(self):
        return len(self.summands)


@dataclass(frozen=True)
class SymTrivExt:
    base: BaseRing
    module: ModuleDescriptor = field(default_factory=ModuleDescriptor)

    def __post_init__(self):
        for s in self.module.summands:
            if s.kind == FREE and s.k < 1:
                raise ValueError("free rank must be positive")
            if s.kind == CYCLIC and s.k < 1:
                raise ValueError("cyclic exponent must be positive")
            if s.kind in (CYCLIC, PRUEFER) and not self.base.is_nonunit_prime(s.p):
                raise ValueError(f"{s.label}: {s.p} is not a non-unit prime of "
                                 f"{self.base.label}")

    @property
    def label(self):
        if not self.module.summands:
            return self.base.label
        return f"{self.base.label} |x ({self.module.label})"

    @property
    def is_noetherian(self):
        return all(s.finitely_generated(self.base) for s in self.module.summands)


def triv(base, *summands):
    return SymTrivExt(base, ModuleDescriptor(tuple(summands)))


@dataclass(frozen=True)
class SymPrime:
    """Prime p^ = p |x N of the extension, indexed by a prime of the base.

    ``kind`` is "zero", "prime" (with ``q``) or "generic", the last one
    standing for every prime of Z not otherwise listed.
    """

    kind: str
    q: int | None = None

    def label(self, base):
        if self.kind == "zero":
            return "0 |x N"
        if self.kind == "generic":
            return "qZ |x N (q any other prime)"
        return f"{self.q}{base.label} |x N"

    def to_json(self, base):
        return {"kind": self.kind, "q": self.q, "label": self.label(base)}


@dataclass(frozen=True)
class SymSpectrum:
    primes: tuple
    complete: bool       # False when a generic prime stands for infinitely many

    def __iter__(self):
        return iter(self.primes)

    def __len__(self):
        return len(self.primes)


def sym_spectrum(R):
    base = R.base
    if base.kind == RATIONALS:
        return SymSpectrum((SymPrime("zero"),), True)
    if base.kind == ZLOCAL:
        return SymSpectrum((SymPrime("zero"), SymPrime("prime", base.p)), True)
    qs = sorted({s.p for s in R.module.summands if s.p is not None})
    return SymSpectrum((SymPrime("zero"),) + tuple(SymPrime("prime", q) for q in qs)
                       + (SymPrime("generic"),), False)


# -- localization rule table ---------------------------------------------------

@dataclass(frozen=True)
class Rule:
    id: str
    statement: str
    derived: bool = False


RULES = {r.id: r for r in (
    Rule("nil-in-every-prime",
         "Nil(R) = 0 |x N lies in every prime, so primes are p |x N for p prime in A"),
    Rule("localize-trivial-extension",
         "R_p^ = A_p |x N_p, I_p^ = 0 |x M_p and p^ I_p^ = 0 |x p M_p"),
    Rule("torsion-vanishes-at-zero",
         "a torsion module localizes to zero at the zero prime"),
    Rule("divisible-equals-multiple",
         "a divisible module D satisfies pD = D for every nonzero prime p"),
    Rule("primary-torsion-vanishes-elsewhere",
         "q-primary torsion localizes to zero at a prime not containing q", derived=True),
    Rule("torsion-free-survives-at-zero",
         "a nonzero torsion-free module survives localization at zero, where p^ I = 0",
         derived=True),
    Rule("nakayama-finitely-generated",
         "a nonzero finitely generated module over a local ring has pM != M", derived=True),
)}


@dataclass(frozen=True)
class SummandLocalization:
    summand: str
    localized: str       # descriptor of M_p ("0" when it vanishes)
    multiplied: str      # descriptor of p M_p
    rule: str

    @property
    def equal(self):
        return self.localized == self.multiplied

    def to_json(self):
        return {"summand": self.summand, "localized": self.localized,
                "multiplied": self.multiplied, "equal": self.equal, "rule": self.rule,
                "citation": RULES[self.rule].statement,
                "derived": RULES[self.rule].derived}


def _localize_summand(s, P, base):
    lab = s.label
    if P.kind == "zero":
        if s.torsion:
            return SummandLocalization(lab, "0", "0", "torsion-vanishes-at-zero")
        loc = "Q" if s.kind == FULLQ else f"Q^{s.k}"
        return SummandLocalization(lab, loc, "0", "torsion-free-survives-at-zero")
    q = P.q                       # None for the generic prime
    if s.kind == FULLQ:
        return SummandLocalization(lab, "Q", "Q", "divisible-equals-multiple")
    if s.kind == FREE:
        ring = f"{base.label}_({q})" if base.kind == INTEGERS else base.label
        qq = q if q is not None else "q"
        return SummandLocalization(lab, f"{ring}^{s.k}", f"{qq}{ring}^{s.k}",
                                   "nakayama-finitely-generated")
    if q != s.p:
        return SummandLocalization(lab, "0", "0", "primary-torsion-vanishes-elsewhere")
    if s.kind == PRUEFER:
        return SummandLocalization(lab, lab, lab, "divisible-equals-multiple")
    return SummandLocalization(lab, lab, f"{q}*{lab}", "nakayama-finitely-generated")


@dataclass(frozen=True)
class LocalizationData:
    prime: SymPrime
    terms: tuple

    @property
    def I_p(self):
        return tuple(t.localized for t in self.terms if t.localized != "0")

    @property
    def pI_p(self):
        return tuple(t.multiplied for t in self.terms if t.multiplied != "0")

    @property
    def equal(self):
        return self.I_p == self.pI_p

    @property
    def rules(self):
        return ("nil-in-every-prime", "localize-trivial-extension") + tuple(
            dict.fromkeys(t.rule for t in self.terms))

    def to_json(self, base):
        return {"prime": self.prime.to_json(base), "I_p": list(self.I_p) or ["0"],
                "pI_p": list(self.pI_p) or ["0"], "equal": self.equal,
                "summands": [t.to_json() for t in self.terms],
                "rules": list(self.rules)}


def _as_indices(R, M):
    """Summand indices of a sub-descriptor M (indices, Summands or a ModuleDescriptor)."""
    if isinstance(M, ModuleDescriptor):
        M = M.summands
    M = list(M)
    if all(isinstance(i, int) for i in M):
        if any(not 0 <= i < len(R.module) for i in M) or len(set(M)) != len(M):
            raise UnsupportedSubmodule("summand indices out of range")
        return tuple(sorted(M))
    available = list(enumerate(R.module.summands))
    chosen = []
    for s in M:
        hit = next((i for i, t in available if t == s and i not in chosen), None)
        if hit is None:
            raise UnsupportedSubmodule(f"{getattr(s, 'label', s)} is not a summand of N; "
                                       "only summand-aligned submodules are supported")
        chosen.append(hit)
    return tuple(sorted(chosen))


def localization_data(R, P, M):
    idx = _as_indices(R, M)
    terms = tuple(_localize_summand(R.module.summands[i], P, R.base) for i in idx)
    return LocalizationData(P, terms)


@dataclass(frozen=True)
class SymMap:
    """A symbolic ring map, recorded by kind and kernel 0 |x M."""

    domain: str
    codomain: str
    kind: str
    kernel: tuple = ()          # labels of the summands of N in the kernel
    base_kernel: str = "0"      # kernel on the A-part ("0" when injective there)
    components: tuple = ()

    def to_json(self):
        doc = {"domain": self.domain, "codomain": self.codomain, "kind": self.kind,
               "kernel": {"base": self.base_kernel, "module": list(self.kernel)}}
        if self.components:
            doc["components"] = [dict(c) for c in self.components]
        return doc


def kernel_in_nilradical(R, f):
    """Kernel 0 |x M of a symbolic map sits inside Nil(R) = 0 |x N."""
    if f.base_kernel != "0":
        return False
    have = Counter(s.label for s in R.module.summands)
    need = Counter(f.kernel)
    return all(have[k] >= v for k, v in need.items())


# -- envelopes -----------------------------------------------------------------

def _quotient_label(R, keep):
    rest = ModuleDescriptor(tuple(R.module.summands[i] for i in keep))
    return SymTrivExt(R.base, rest).label


def _candidates(R):
    n = len(R.module)
    for size in range(n + 1):
        yield from combinations(range(n), size)


def epimorphic_noetherian_envelope(R):
    """Search nil ideals 0 |x M over summand subsets M for the envelope criterion."""
    spec = sym_spectrum(R)
    report = []
    for M in _candidates(R):
        keep = [i for i in range(len(R.module)) if i not in M]
        labels = [R.module.summands[i].label for i in M]
        if not all(R.module.summands[i].finitely_generated(R.base) for i in keep):
            report.append({"M": labels, "passes": False,
                           "failure": "R/I is not Noetherian"})
            continue
        data = [localization_data(R, P, M) for P in spec]
        bad = next((d for d in data if not d.equal), None)
        if bad is not None:
            report.append({"M": labels, "passes": False,
                           "failure": f"p I_p != I_p at {bad.prime.label(R.base)}",
                           "failed_prime": bad.prime.kind,
                           "localization": bad.to_json(R.base)})
            continue
        rules = list(dict.fromkeys(r for d in data for r in d.rules))
        kind = "identity" if not M else "projection"
        f = SymMap(R.label, _quotient_label(R, keep), kind, tuple(labels))
        report.append({"M": labels, "passes": True})
        return EnvelopeVerdict(Status.EXISTS, ClassTag.NOETHERIAN, map=f, certificate={
            "nil_ideal": labels, "spectrum_complete": spec.complete,
            "localizations": [d.to_json(R.base) for d in data],
            "rules": rules, "citations": {r: RULES[r].statement for r in rules},
            "candidates": report})
    return EnvelopeVerdict(
        Status.UNKNOWN, ClassTag.NOETHERIAN, witness={"candidates": report},
        reason="no summand-aligned nil ideal satisfies p I_p = I_p with R/I Noetherian; "
               "submodules that are not sums of summands were not searched")


THEOREM_ZP_Q = "zp-trivext-q-no-noetherian-envelope"
CONJECTURE_MONO = "no-monomorphic-noetherian-envelope-conjecture"

CITATIONS = {
    THEOREM_ZP_Q: "theorem: Z_(p) |x Q does not have a Noetherian envelope",
    CONJECTURE_MONO: ("conjecture: no non-Noetherian commutative ring has a "
                      "monomorphic Noetherian envelope (open)"),
}


def _is_zp_q(R):
    return R.base.kind == ZLOCAL and R.module.summands == (FULL_Q,)


def noetherian_envelope_decision(R):
    epi = epimorphic_noetherian_envelope(R)
    if epi.exists:
        return epi
    if _is_zp_q(R):
        return EnvelopeVerdict(
            Status.NOT_EXISTS, ClassTag.NOETHERIAN,
            witness={"kind": "theorem", "rule": THEOREM_ZP_Q,
                     "citation": CITATIONS[THEOREM_ZP_Q]},
            reason=CITATIONS[THEOREM_ZP_Q],
            certificate={"rule": THEOREM_ZP_Q, "epimorphic_search": epi.witness})
    return EnvelopeVerdict(
        Status.UNKNOWN, ClassTag.NOETHERIAN, witness=epi.witness,
        reason=CITATIONS[CONJECTURE_MONO],
        certificate={"rule": CONJECTURE_MONO, "epimorphic_search": epi.witness})


def semisimple_envelope_sym(A):
    """Z_(p) -> Q x F_p, the product of the two residue fields."""
    if isinstance(A, SymTrivExt):
        A = A.base
    if A.kind != ZLOCAL:
        raise UnsupportedBase(f"only Z_(p) is supported, not {A.label}")
    p = A.p
    return SymMap(A.label, f"Q x F{p}", "canonical", components=(
        (("prime", "0"), ("residue_field", "Q"), ("map", "inclusion")),
        (("prime", f"{p}Z_({p})"), ("residue_field", f"F{p}"),
         ("map", f"reduction mod {p}")),
    ))


def sym_envelope(R, cls):
    """Envelope verdict for a symbolic ring in any of the four classes."""
    cls = ClassTag.parse(cls)
    if isinstance(R, BaseRing):
        R = SymTrivExt(R)
    base, nil = R.base, tuple(s.label for s in R.module.summands)
    to_base = R.base.label
    if cls is ClassTag.NOETHERIAN:
        return noetherian_envelope_decision(R)
    if cls is ClassTag.DOMAIN:
        kind = "identity" if not nil else "projection"
        return EnvelopeVerdict(Status.EXISTS, cls, map=SymMap(R.label, to_base, kind, nil),
                               certificate={"nilradical": list(nil) or ["0"],
                                            "nilradical_prime": True})
    if cls is ClassTag.FIELD:
        if base.kind == RATIONALS:
            kind = "identity" if not nil else "projection"
            return EnvelopeVerdict(Status.EXISTS, cls, map=SymMap(R.label, "Q", kind, nil),
                                   certificate={"local": True, "krull_dimension": 0})
        if base.kind == ZLOCAL:
            return EnvelopeVerdict(Status.NOT_EXISTS, cls, witness={
                "kind": "positive_krull_dimension",
                "chain": ["0 |x N", f"{base.p}{base.label} |x N"]},
                certificate={"local": True, "krull_dimension": 1})
        return EnvelopeVerdict(Status.NOT_EXISTS, cls, witness={
            "kind": "two_maximal_ideals", "ideals": ["2Z |x N", "3Z |x N"]},
            certificate={"local": False})
    # semisimple
    if base.kind == INTEGERS:
        return EnvelopeVerdict(Status.NOT_EXISTS, cls, witness={
            "kind": "infinite_spectrum", "primes": "qZ |x N for every prime q"})
    if base.kind == RATIONALS:
        kind = "identity" if not nil else "projection"
        return EnvelopeVerdict(Status.EXISTS, cls, map=SymMap(R.label, "Q", kind, nil),
                               certificate={"spectrum": ["0 |x N"]})
    core = semisimple_envelope_sym(base)
    f = SymMap(R.label, core.codomain, "canonical", nil, components=core.components)
    return EnvelopeVerdict(Status.EXISTS, cls, map=f, certificate={
        "spectrum": [P.label(base) for P in sym_spectrum(R)]})
