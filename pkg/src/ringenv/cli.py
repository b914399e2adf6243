"""Command line front end: ``ringenv COMMAND EXPR [options]``.

Exit codes: 0 computed (whatever the verdict), 2 parse error, 3 size or
resource limit, 4 command incompatible with the ring.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field

from . import dsl
from .config import limits
from .envelopes import decide, local_factor_data, verify
from .errors import IncompatibleCommand, ParseError, ResourceLimit, RingError, SizeLimit
from .finring import is_local, local_decomposition, nilradical, spectrum
from .homsearch import ClassTag, EnvelopeVerdict, Status
from .presented import (buchberger, is_zero_dimensional, local_certificate, normal_form,
                        principal_chain_strict)
from .symring import sym_envelope, sym_spectrum

COMMANDS = ("envelope", "spectrum", "nil", "decompose", "verify", "groebner")
CLASSES = tuple(c.value for c in ClassTag)
EXIT_OK, EXIT_PARSE, EXIT_LIMIT, EXIT_INCOMPATIBLE = 0, 2, 3, 4


@dataclass
class Report:
    input: str
    command: str
    backend: str | None = None
    classes: list | None = None
    status: str = "computed"
    verdicts: list = field(default_factory=list)
    certificates: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)
    error: dict | None = None
    exit_code: int = EXIT_OK

    def to_json(self):
        doc = {"input": self.input, "backend": self.backend, "command": self.command,
               "classes": self.classes, "status": self.status, "verdicts": self.verdicts,
               "certificates": self.certificates, "timings": self.timings,
               "exit_code": self.exit_code}
        if self.error is not None:
            doc["error"] = self.error
        return doc

    def to_text(self):
        lines = [f"input: {self.input}", f"backend: {self.backend or '-'}",
                 f"command: {self.command}", f"status: {self.status}"]
        if self.error:
            lines.append(f"error: {self.error['kind']}: {self.error['message']}")
        for v in self.verdicts:
            lines += _verdict_text(v)
        for key, value in self.certificates.items():
            lines.append(f"{key}: {json.dumps(value)}")
        return "\n".join(lines)


def _verdict_text(v):
    if "theorem" in v:          # a verification
        t, o = v["theorem"], v["oracle"]
        return [f"[{t['class']}] {v['status']}: theorem {t['status']}, oracle {o['status']}"
                f" (catalog max order {v['catalog_max_order']})"]
    head = f"[{v['class']}] {v['status']}"
    m = v.get("map")
    if m is not None:
        head += f": {m['domain']} -> {m['codomain']}"
    out = [head]
    if "minimal" in v:
        out.append(f"  minimal: {v['minimal']} ({v['endo_count']} commuting endomorphisms)")
    if v.get("witness") is not None:
        out.append(f"  witness: {json.dumps(v['witness'])}")
    if v.get("reason"):
        out.append(f"  reason: {v['reason']}")
    return out


@dataclass(frozen=True)
class DescribedMap:
    """A map recorded by description when its codomain is not tabulated."""

    domain: str
    codomain: str
    kind: str
    kernel: str

    def to_json(self):
        return {"domain": self.domain, "codomain": self.codomain, "kind": self.kind,
                "kernel": self.kernel}


# -- per-backend commands -----------------------------------------------------------

def _classes(cls):
    return [ClassTag.parse(cls)] if cls else list(ClassTag)


def _overall(statuses):
    statuses = list(statuses)
    return statuses[0] if len(set(statuses)) == 1 else "computed"


def _finite(report, R, args):
    cmd = args.command
    if cmd == "envelope":
        vs = [decide(R, c) for c in _classes(args.cls)]
        report.verdicts = [v.to_json() for v in vs]
        report.status = _overall(v.status.value for v in vs)
    elif cmd == "verify":
        checks = [verify(R, c, args.catalog_max_order) for c in _classes(args.cls)]
        report.verdicts = [c.to_json() for c in checks]
        report.status = "agree" if all(c.agree for c in checks) else "discrepancy"
    elif cmd == "spectrum":
        primes = spectrum(R)
        report.certificates["spectrum"] = [
            {"generators": [R.name(g) for g in P.ideal.generators], "size": len(P.ideal)}
            for P in primes]
        report.certificates["local"] = bool(is_local(R))
    elif cmd == "nil":
        nil = nilradical(R)
        meet = set(R.elements)
        for P in spectrum(R):
            meet &= P.members
        report.certificates["nilradical"] = nil.to_json()
        report.certificates["intersection_of_primes"] = meet == set(nil.members)
    elif cmd == "decompose":
        dec = local_decomposition(R)
        report.certificates["local_factors"] = local_factor_data(R)
        report.certificates["isomorphism"] = dec.iso.is_bijective()
    else:
        raise IncompatibleCommand(f"{cmd} needs a presented quotient")


def _presented(report, expr, args):
    pres = dsl.presentation(expr) if not isinstance(expr, dsl.Product) else None
    if args.command == "groebner":
        if pres is None:
            raise IncompatibleCommand("groebner needs a single presented quotient")
        gb = buchberger(pres, budget=args.budget)
        report.certificates["groebner"] = gb.to_json()
        report.certificates["reduced"] = gb.is_reduced()
        if gb.is_unit:
            report.certificates["unit_ideal"] = True
        else:
            zd = is_zero_dimensional(gb)
            report.certificates["zero_dimensional"] = zd.zero_dimensional
            if zd.zero_dimensional:
                report.certificates["dimension"] = zd.standard_monomials
        return
    if isinstance(expr, dsl.FibTrunc) and args.command in ("nil", "spectrum"):
        _fibonacci(report, pres, args)
    try:
        R = dsl.to_finite(expr, budget=args.budget)
    except SizeLimit as exc:
        if pres is None or args.command == "verify":
            raise
        return _large_local(report, expr, pres, args, exc)
    _finite(report, R, args)


def _fibonacci(report, pres, args):
    """x_1 survives, and (x_1) sits strictly inside (x_2) once x_3 x_4 = x_2 is present."""
    gb = buchberger(pres, budget=args.budget)
    x = [pres.var(v) for v in pres.variables]
    nf = normal_form(x[0], gb)
    report.certificates["normal_form_x1"] = nf.to_text()
    report.certificates["x1_nonzero"] = bool(nf)
    report.certificates["chain_strict"] = principal_chain_strict(pres, x[:3],
                                                                 budget=args.budget)


def _large_local(report, expr, pres, args, too_big):
    """Too large to tabulate: argue through nilpotent generators instead."""
    cert = local_certificate(pres, budget=args.budget)
    if not cert.local:
        raise too_big
    gens = list(pres.variables)
    maximal = f"({', '.join(gens)})"
    report.certificates["local"] = cert.to_json()
    report.certificates["route"] = "nilpotent generators (ring not tabulated)"
    cmd = args.command
    if cmd in ("spectrum", "nil"):
        report.certificates["maximal_ideal"] = maximal
        report.certificates["nilradical"] = maximal
        report.certificates["maximal_equals_nilradical"] = True
    if cmd == "decompose":
        report.certificates["local_factors"] = [{"factor": dsl.to_text(expr),
                                                  "dimension": cert.dimension}]
    if cmd == "envelope":
        label, p = dsl.to_text(expr), pres.characteristic
        vs = []
        for c in _classes(args.cls):
            if c is ClassTag.NOETHERIAN:
                f = DescribedMap(label, label, "identity", "0")
                vs.append(EnvelopeVerdict(Status.EXISTS, c, map=f,
                                          certificate={"artinian": True}))
            else:
                f = DescribedMap(label, f"F{p}", "projection", maximal)
                vs.append(EnvelopeVerdict(Status.EXISTS, c, map=f, certificate={
                    "local": True, "maximal_ideal": maximal, "nilradical": maximal}))
        report.verdicts = [v.to_json() for v in vs]
        report.status = "Exists"


def _symbolic(report, R, args):
    cmd = args.command
    if cmd == "envelope":
        vs = [sym_envelope(R, c) for c in _classes(args.cls)]
        report.verdicts = [v.to_json() for v in vs]
        report.status = _overall(v.status.value for v in vs)
    elif cmd in ("spectrum", "nil"):
        spec = sym_spectrum(R)
        report.certificates["spectrum"] = [P.to_json(R.base) for P in spec]
        report.certificates["spectrum_complete"] = spec.complete
        report.certificates["nilradical"] = "0 |x N" if len(R.module) else "0"
        report.certificates["noetherian"] = R.is_noetherian
    elif cmd == "decompose":
        report.certificates["local_factors"] = [{"factor": R.label,
                                                 "local": R.base.kind != "Z"}]
        report.certificates["connected"] = True
    else:
        raise IncompatibleCommand(f"{cmd} is not available for symbolic rings")


# -- driver -------------------------------------------------------------------------

def run(text, args):
    """Evaluate one expression; always returns a Report (errors become exit codes)."""
    report = Report(input=text, command=args.command,
                    classes=[args.cls] if args.cls else list(CLASSES))
    start = time.perf_counter()
    try:
        expr = dsl.parse(text)
        report.timings["parse"] = time.perf_counter() - start
        report.backend = dsl.backend(expr)
        overrides = {}
        if args.budget is not None:
            overrides["spair_budget"] = args.budget
        if args.size_cap is not None:
            overrides.update(table_order=args.size_cap, ideal_order=args.size_cap,
                             hom_order=args.size_cap)
        with limits(**overrides):
            if report.backend == "symbolic":
                _symbolic(report, dsl.to_symbolic(expr), args)
            elif report.backend == "presented":
                _presented(report, expr, args)
            else:
                if args.command == "groebner":
                    raise IncompatibleCommand("groebner needs a presented quotient")
                _finite(report, dsl.to_finite(expr), args)
    except ParseError as exc:
        report.status, report.exit_code = "error", EXIT_PARSE
        report.error = {"kind": "ParseError", "message": str(exc), "line": exc.line,
                        "col": exc.col, "expected": exc.expected}
    except (SizeLimit, ResourceLimit) as exc:
        report.status, report.exit_code = "error", EXIT_LIMIT
        report.error = {"kind": type(exc).__name__, "message": str(exc)}
    except RingError as exc:
        report.status, report.exit_code = "error", EXIT_INCOMPATIBLE
        report.error = {"kind": type(exc).__name__, "message": str(exc)}
    report.timings["total"] = time.perf_counter() - start
    return report


class _HelpFormatter(argparse.ArgumentDefaultsHelpFormatter):
    """Show defaults, except unset ones whose meaning the help text states."""

    def _get_help_string(self, action):
        if action.default is None or action.default is False:
            return action.help
        return super()._get_help_string(action)


def build_parser():
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--class", dest="cls", choices=CLASSES, default=None,
                        help="envelope class (default: all four)")
    shared.add_argument("--json", action="store_true", help="emit JSON reports")
    shared.add_argument("--catalog-max-order", type=int, default=9,
                        help="largest catalog ring used by verify")
    shared.add_argument("--budget", type=int, default=None,
                        help="S-pair budget for Groebner computations (default: 100000)")
    shared.add_argument("--size-cap", type=int, default=None,
                        help="raise the table, ideal and hom size caps (default: 64)")
    shared.add_argument("--corpus", metavar="FILE", default=None,
                        help="evaluate every non-empty line of FILE")
    parser = argparse.ArgumentParser(
        prog="ringenv", description="Decide envelopes of commutative rings.",
        formatter_class=_HelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[shared],
                           formatter_class=_HelpFormatter)
        p.add_argument("expr", nargs="?", help="ring description, e.g. 'Z/12'")
    return parser


def _corpus_lines(path):
    with open(path, encoding="utf-8") as fh:
        return [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.corpus:
        texts = _corpus_lines(args.corpus)
    elif args.expr is not None:
        texts = [args.expr]
    else:
        parser.error("an expression or --corpus FILE is required")
    reports = [run(t, args) for t in texts]
    for i, r in enumerate(reports):
        if args.json:
            print(json.dumps(r.to_json(), sort_keys=True), file=out)
        else:
            if i:
                print(file=out)
            print(r.to_text(), file=out)
    return max(r.exit_code for r in reports) if reports else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
