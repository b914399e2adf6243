import pytest
from hypothesis import given, settings, strategies as st

from ringenv.dsl import (GF, FibTrunc, PresentedQuotient, Product, SymBase, TrivExt, ZMod,
                         backend, parse, to_finite, to_symbolic, to_text)
from ringenv.errors import IncompatibleCommand, ParseError
from ringenv.presented import Polynomial
from ringenv.symring import FULL_Q, cyc, free, pruefer


def test_parse_examples():
    assert parse("Z/12") == ZMod(12)
    e = parse("F2[x,y]/(x^2, x*y)")
    x2 = Polynomial(2, ("x", "y"), {(2, 0): 1})
    xy = Polynomial(2, ("x", "y"), {(1, 1): 1})
    assert e == PresentedQuotient(2, ("x", "y"), (x2, xy))
    e = parse("triv(Zp(3); free(1)+pruefer(3))")
    assert e == TrivExt(SymBase("Zp", 3), (free(1), pruefer(3)))
    assert parse("Q") == SymBase("Q") and parse("Z") == SymBase("Z")
    assert parse("fib(2,5)") == FibTrunc(2, 5)
    assert parse("triv(Zp(5); Q)") == TrivExt(SymBase("Zp", 5), (FULL_Q,))


def test_whitespace_and_products():
    assert parse("  Z/4 x\n F9 ") == Product((ZMod(4), GF(9)))
    assert parse("Z/2xZ/3xF4") == Product((ZMod(2), ZMod(3), GF(4)))


def test_polynomial_syntax():
    e = parse("F3[a,b]/(-a + 2*b^2 - (a - b)^2, 4)")
    a = Polynomial.var(3, ("a", "b"), "a")
    b = Polynomial.var(3, ("a", "b"), "b")
    assert e.relations == (-a + 2 * b ** 2 - (a - b) ** 2, Polynomial.constant(3, ("a", "b"), 1))
    assert parse("F3[]/()") == PresentedQuotient(3, (), ())


@pytest.mark.parametrize("text,line,col,expected", [
    ("Z/", 1, 3, "integer"),
    ("Z/12 x", 1, 7, "ring term"),
    ("F6", 1, 2, "prime power"),
    ("F4[x]/(x)", 1, 2, "prime characteristic"),
    ("F2[x]/(y)", 1, 8, "declared variable"),
    ("F2[x,x]/(x)", 1, 6, "distinct variable names"),
    ("fib(2,2)", 1, 7, "at least 3 variables"),
    ("triv(Zp(3); cyc(2^1))", 1, 13, "a valid module"),
    ("triv(Q; pruefer(3))", 1, 9, "a valid module"),
    ("triv(Z/4; cyc(2^3))", 1, 11, "free or cyclic summands"),
    ("Zp(4)", 1, 4, "prime"),
    ("Z/4\nx Z/", 2, 5, "integer"),
    ("Z/4 Z/3", 1, 5, "'x' or end of input"),
])
def test_parse_errors(text, line, col, expected):
    with pytest.raises(ParseError) as info:
        parse(text)
    err = info.value
    assert (err.line, err.col) == (line, col)
    assert err.expected.startswith(expected)


def test_backends_and_realization():
    assert backend(parse("Z/12 x F4")) == "finite"
    assert backend(parse("F2[x]/(x^2) x Z/3")) == "presented"
    assert backend(parse("triv(Z; pruefer(2))")) == "symbolic"
    assert backend(parse("triv(Z/4; cyc(2^1))")) == "finite"
    R = to_finite(parse("triv(Z/4; cyc(2^1) + free(1))"))
    assert R.order == 32 and R.axiom_failures() == []
    assert to_finite(parse("F2[x]/(x^2) x Z/3")).order == 12
    with pytest.raises(IncompatibleCommand):
        to_finite(parse("Zp(3)"))
    with pytest.raises(IncompatibleCommand):
        to_symbolic(parse("Z/3"))
    assert to_symbolic(parse("triv(Zp(3); free(1)+pruefer(3))")).label == \
        "Z_(3) |x (free(1) + pruefer(3))"


# random expression trees for the print/parse round trip

primes = st.sampled_from([2, 3, 5, 7])
prime_powers = st.sampled_from([2, 3, 4, 5, 7, 8, 9, 16, 25, 27])
zmod = st.integers(1, 200).map(ZMod)
gf = prime_powers.map(GF)
fib = st.builds(FibTrunc, primes, st.integers(3, 9))
sym_base = st.one_of(primes.map(lambda p: SymBase("Zp", p)), st.just(SymBase("Z")),
                     st.just(SymBase("Q")))


@st.composite
def presented(draw):
    p = draw(primes)
    k = draw(st.integers(0, 3))
    names = tuple(["x", "y", "z"][:k])
    rels = []
    for _ in range(draw(st.integers(0, 3))):
        terms = draw(st.dictionaries(st.tuples(*[st.integers(0, 3)] * k),
                                     st.integers(1, p - 1), max_size=4))
        rels.append(Polynomial(p, names, terms))
    return PresentedQuotient(p, names, tuple(rels))


@st.composite
def sym_triv(draw):
    base = draw(sym_base)
    if base.kind == "Q":
        pool = [free(1), free(2), FULL_Q]
    else:
        qs = [base.p] if base.kind == "Zp" else [2, 3, 5]
        pool = [free(1), free(3), FULL_Q] + [cyc(q, k) for q in qs for k in (1, 2)] + \
            [pruefer(q) for q in qs]
    summands = draw(st.lists(st.sampled_from(pool), min_size=1, max_size=4))
    return TrivExt(base, tuple(summands))


@st.composite
def finite_triv(draw):
    n = draw(st.sampled_from([2, 4, 8, 9, 12]))
    pool = [free(1), free(2)] + [cyc(p, k) for p in (2, 3) for k in (1, 2, 3) if n % p ** k == 0]
    return TrivExt(ZMod(n), tuple(draw(st.lists(st.sampled_from(pool), min_size=1,
                                                max_size=3))))


term = st.one_of(zmod, gf, fib, sym_base, presented(), sym_triv(), finite_triv())
expr = st.one_of(term, st.lists(term, min_size=2, max_size=4).map(lambda ts: Product(tuple(ts))))


@settings(max_examples=300, deadline=None)
@given(expr)
def test_round_trip(e):
    assert parse(to_text(e)) == e
