"""A small language for ring descriptions, shared by all three backends.

    expr    := term ('x' term)*
    term    := 'Z/' INT | 'F' INT | 'F' INT '[' ids ']' '/(' polys ')'
             | 'triv(' base ';' module ')' | 'Zp(' INT ')' | 'Q' | 'Z'
             | 'fib(' INT ',' INT ')'
    base    := 'Zp(' INT ')' | 'Z' | 'Q' | 'Z/' INT
    module  := summand ('+' summand)*
    summand := 'free(' INT ')' | 'cyc(' INT '^' INT ')' | 'pruefer(' INT ')' | 'Q'

Whitespace is ignored.  Errors are :class:`~ringenv.errors.ParseError`
with a line and column.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IncompatibleCommand, ParseError
from .finring import (_is_prime, _prime_power, cyclic_sum_module, make_gf, make_product,
                      make_trivial_extension, make_zmod)
from .presented import Polynomial, Presentation, fibonacci_truncation, to_finite_ring
from .symring import (FULL_Q, BaseRing, ModuleDescriptor, Summand, SymTrivExt, cyc,
                      free, pruefer)


@dataclass(frozen=True)
class ZMod:
    n: int


@dataclass(frozen=True)
class GF:
    q: int


@dataclass(frozen=True)
class Product:
    terms: tuple


@dataclass(frozen=True)
class PresentedQuotient:
    p: int
    variables: tuple
    relations: tuple

    def presentation(self):
        return Presentation(self.p, self.variables, self.relations)


@dataclass(frozen=True)
class SymBase:
    kind: str              # "Zp", "Z" or "Q"
    p: int | None = None

    def base_ring(self):
        return BaseRing(self.kind, self.p)


@dataclass(frozen=True)
class TrivExt:
    base: object           # SymBase or ZMod
    module: tuple          # of symring.Summand


@dataclass(frozen=True)
class FibTrunc:
    p: int
    m: int


# -- printing -------------------------------------------------------------------

def to_text(e):
    if isinstance(e, ZMod):
        return f"Z/{e.n}"
    if isinstance(e, GF):
        return f"F{e.q}"
    if isinstance(e, Product):
        return " x ".join(to_text(t) for t in e.terms)
    if isinstance(e, PresentedQuotient):
        rels = ", ".join(f.to_text() for f in e.relations)
        return f"F{e.p}[{','.join(e.variables)}]/({rels})"
    if isinstance(e, SymBase):
        return f"Zp({e.p})" if e.kind == "Zp" else e.kind
    if isinstance(e, TrivExt):
        return f"triv({to_text(e.base)}; {' + '.join(s.label for s in e.module)})"
    if isinstance(e, FibTrunc):
        return f"fib({e.p},{e.m})"
    raise TypeError(f"not a ring expression: {e!r}")


# -- parsing --------------------------------------------------------------------

class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def where(self, pos=None):
        pos = self.pos if pos is None else pos
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, col

    def fail(self, expected, pos=None):
        pos = self.pos if pos is None else pos
        line, col = self.where(pos)
        found = self.text[pos:pos + 8] or "end of input"
        raise ParseError(line, col, expected, found)

    def ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, s):
        self.ws()
        return self.text.startswith(s, self.pos)

    def eat(self, s):
        if self.peek(s):
            self.pos += len(s)
            return True
        return False

    def expect(self, s):
        if not self.eat(s):
            self.fail(repr(s))

    def integer(self, what="integer"):
        self.ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail(what)
        return int(self.text[start:self.pos]), start

    def ident(self):
        self.ws()
        start = self.pos
        t = self.text
        if self.pos < len(t) and (t[self.pos].isalpha() or t[self.pos] == "_"):
            self.pos += 1
            while self.pos < len(t) and (t[self.pos].isalnum() or t[self.pos] == "_"):
                self.pos += 1
        if start == self.pos:
            self.fail("identifier")
        return t[start:self.pos], start

    # grammar

    def expr(self):
        terms = [self.term()]
        while self.eat("x"):
            terms.append(self.term())
        self.ws()
        if self.pos != len(self.text):
            self.fail("'x' or end of input")
        return terms[0] if len(terms) == 1 else Product(tuple(terms))

    def term(self):
        self.ws()
        if self.eat("triv("):
            return self.triv()
        if self.eat("fib("):
            p, at = self.integer()
            if not _is_prime(p):
                self.fail("prime characteristic", at)
            self.expect(",")
            m, at = self.integer()
            if m < 3:
                self.fail("at least 3 variables", at)
            self.expect(")")
            return FibTrunc(p, m)
        if self.peek("F"):
            return self.finite_field_or_quotient()
        return self.base()

    def base(self):
        if self.eat("Zp("):
            p, at = self.integer()
            if not _is_prime(p):
                self.fail("prime", at)
            self.expect(")")
            return SymBase("Zp", p)
        if self.eat("Z/"):
            n, at = self.integer()
            if n < 1:
                self.fail("positive modulus", at)
            return ZMod(n)
        if self.eat("Z"):
            return SymBase("Z")
        if self.eat("Q"):
            return SymBase("Q")
        self.fail("ring term")

    def finite_field_or_quotient(self):
        self.expect("F")
        q, at = self.integer()
        if _prime_power(q) is None:
            self.fail("prime power", at)
        if not self.eat("["):
            return GF(q)
        if not _is_prime(q):
            self.fail("prime characteristic", at)
        names = []
        if not self.peek("]"):
            while True:
                name, npos = self.ident()
                if name in names:
                    self.fail("distinct variable names", npos)
                names.append(name)
                if not self.eat(","):
                    break
        self.expect("]")
        self.expect("/")
        self.expect("(")
        names = tuple(names)
        rels = []
        if not self.peek(")"):
            rels.append(self.poly(q, names))
            while self.eat(","):
                rels.append(self.poly(q, names))
        self.expect(")")
        return PresentedQuotient(q, names, tuple(rels))

    def poly(self, p, names):
        sign = -1 if self.eat("-") else 1
        out = self.mono(p, names) * sign
        while True:
            if self.eat("+"):
                out = out + self.mono(p, names)
            elif self.eat("-"):
                out = out - self.mono(p, names)
            else:
                return out

    def mono(self, p, names):
        out = self.factor(p, names)
        while self.eat("*"):
            out = out * self.factor(p, names)
        return out

    def factor(self, p, names):
        self.ws()
        if self.eat("("):
            base = self.poly(p, names)
            self.expect(")")
        elif self.pos < len(self.text) and self.text[self.pos].isdigit():
            c, _ = self.integer()
            return Polynomial.constant(p, names, c)
        else:
            name, at = self.ident()
            if name not in names:
                self.fail("declared variable", at)
            base = Polynomial.var(p, names, name)
        if self.eat("^"):
            k, _ = self.integer("exponent")
            base = base ** k
        return base

    def triv(self):
        base = self.base()
        self.expect(";")
        self.ws()
        mod_pos = self.pos
        summands = [self.summand()]
        while self.eat("+"):
            summands.append(self.summand())
        self.expect(")")
        out = TrivExt(base, tuple(summands))
        if isinstance(base, ZMod):
            for s in summands:
                if s.kind == "free":
                    continue
                if s.kind != "cyc" or base.n % (s.p ** s.k):
                    self.fail(f"free or cyclic summands dividing {base.n} over Z/{base.n}",
                              mod_pos)
        else:
            try:
                SymTrivExt(base.base_ring(), ModuleDescriptor(tuple(summands)))
            except ValueError as exc:
                self.fail(f"a valid module over {to_text(base)} ({exc})", mod_pos)
        return out

    def summand(self):
        if self.eat("free("):
            r, at = self.integer()
            if r < 1:
                self.fail("positive rank", at)
            self.expect(")")
            return free(r)
        if self.eat("cyc("):
            p, at = self.integer()
            if not _is_prime(p):
                self.fail("prime", at)
            self.expect("^")
            k, at = self.integer()
            if k < 1:
                self.fail("positive exponent", at)
            self.expect(")")
            return cyc(p, k)
        if self.eat("pruefer("):
            p, at = self.integer()
            if not _is_prime(p):
                self.fail("prime", at)
            self.expect(")")
            return pruefer(p)
        if self.eat("Q"):
            return FULL_Q
        self.fail("summand free(r), cyc(p^k), pruefer(p) or Q")


def parse(text):
    """Parse a ring description into an expression tree."""
    return _Parser(text).expr()


# -- realization ----------------------------------------------------------------

def is_symbolic(e):
    if isinstance(e, SymBase):
        return True
    return isinstance(e, TrivExt) and isinstance(e.base, SymBase)


def backend(e):
    """"symbolic", "presented" or "finite"."""
    if is_symbolic(e):
        return "symbolic"
    if isinstance(e, (PresentedQuotient, FibTrunc)):
        return "presented"
    if isinstance(e, Product) and any(isinstance(t, (PresentedQuotient, FibTrunc))
                                      for t in e.terms):
        return "presented"
    return "finite"


def presentation(e):
    if isinstance(e, PresentedQuotient):
        return e.presentation()
    if isinstance(e, FibTrunc):
        return fibonacci_truncation(e.p, e.m)
    raise IncompatibleCommand(f"{to_text(e)} is not a presented quotient")


def to_finite(e, budget=None):
    """Tabulate a finite ring expression (presented quotients are converted)."""
    if isinstance(e, ZMod):
        return make_zmod(e.n)
    if isinstance(e, GF):
        return make_gf(e.q)
    if isinstance(e, Product):
        return make_product([to_finite(t, budget) for t in e.terms])
    if isinstance(e, (PresentedQuotient, FibTrunc)):
        return to_finite_ring(presentation(e), budget=budget, label=to_text(e))[0]
    if isinstance(e, TrivExt) and isinstance(e.base, ZMod):
        A = make_zmod(e.base.n)
        moduli = []
        for s in e.module:
            moduli += [e.base.n] * s.k if s.kind == "free" else [s.p ** s.k]
        return make_trivial_extension(A, cyclic_sum_module(A, moduli))
    raise IncompatibleCommand(f"{to_text(e)} is symbolic, not finite")


def to_symbolic(e):
    if isinstance(e, SymBase):
        return SymTrivExt(e.base_ring())
    if isinstance(e, TrivExt) and isinstance(e.base, SymBase):
        return SymTrivExt(e.base.base_ring(), ModuleDescriptor(e.module))
    raise IncompatibleCommand(f"{to_text(e)} is not symbolic")


__all__ = ["ZMod", "GF", "Product", "PresentedQuotient", "SymBase", "TrivExt", "FibTrunc",
           "Summand", "parse", "to_text", "backend", "is_symbolic", "presentation",
           "to_finite", "to_symbolic"]
