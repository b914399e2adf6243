import pytest

from ringenv.config import limits
from ringenv.envelopes import epimorphic_noetherian_check_finite
from ringenv.errors import UnsupportedBase, UnsupportedSubmodule
from ringenv.finring import (cyclic_sum_module, ideal_closure, make_trivial_extension,
                             make_zmod, zero_ideal)
from ringenv.homsearch import Status
from ringenv.symring import (CONJECTURE_MONO, FULL_Q, RULES, THEOREM_ZP_Q, BaseRing, SymPrime,
                             cyc, epimorphic_noetherian_envelope, free, kernel_in_nilradical,
                             localization_data, noetherian_envelope_decision, pruefer,
                             semisimple_envelope_sym, sym_envelope, sym_spectrum, triv,
                             z_localized)

Z, Q = BaseRing("Z"), BaseRing("Q")


def test_base_and_module_validation():
    with pytest.raises(ValueError):
        z_localized(4)
    with pytest.raises(UnsupportedBase):
        BaseRing("R")
    with pytest.raises(ValueError):
        triv(Q, pruefer(2))
    with pytest.raises(ValueError):
        triv(z_localized(3), cyc(2, 1))
    assert triv(Q, free(2), FULL_Q).label == "Q |x (free(2) + Q)"


def test_spectrum_examples():
    spec = sym_spectrum(triv(z_localized(5), FULL_Q))
    assert [P.label(z_localized(5)) for P in spec] == ["0 |x N", "5Z_(5) |x N"]
    assert len(sym_spectrum(triv(Q, FULL_Q))) == 1
    assert len(sym_spectrum(triv(z_localized(3), free(1), pruefer(3)))) == 2
    spec = sym_spectrum(triv(Z, cyc(2, 1), pruefer(5)))
    assert not spec.complete
    assert [P.kind for P in spec] == ["zero", "prime", "prime", "generic"]


def test_localization_examples():
    R = triv(z_localized(3), pruefer(3))
    at3 = localization_data(R, SymPrime("prime", 3), [pruefer(3)])
    assert at3.equal and at3.I_p == at3.pI_p == ("pruefer(3)",)
    at0 = localization_data(R, SymPrime("zero"), [pruefer(3)])
    assert at0.I_p == () and at0.equal
    S = triv(z_localized(3), FULL_Q)
    d = localization_data(S, SymPrime("zero"), [FULL_Q])
    assert d.I_p == ("Q",) and d.pI_p == () and not d.equal


def test_localization_rule_table():
    R = triv(Z, free(1), cyc(3, 2), pruefer(3), FULL_Q)
    expected = {
        ("zero", None): [False, True, True, False],
        ("prime", 3): [False, False, True, True],
        ("prime", 5): [False, True, True, True],
        ("generic", None): [False, True, True, True],
    }
    for (kind, q), flags in expected.items():
        d = localization_data(R, SymPrime(kind, q), range(4))
        assert [t.equal for t in d.terms] == flags
        assert all(t.rule in RULES for t in d.terms)


def test_unsupported_submodule():
    R = triv(z_localized(3), free(1))
    with pytest.raises(UnsupportedSubmodule):
        localization_data(R, SymPrime("zero"), [pruefer(3)])
    with pytest.raises(UnsupportedSubmodule):
        localization_data(R, SymPrime("zero"), [5])


def test_epimorphic_examples():
    v = epimorphic_noetherian_envelope(triv(z_localized(3), free(1), pruefer(3)))
    assert v.exists and v.map.codomain == "Z_(3) |x (free(1))"
    assert v.map.kernel == ("pruefer(3)",)
    v = epimorphic_noetherian_envelope(triv(z_localized(3), free(1), FULL_Q))
    assert v.status is Status.UNKNOWN
    row = next(c for c in v.witness["candidates"] if c["M"] == ["Q"])
    assert row["failed_prime"] == "zero"
    v = epimorphic_noetherian_envelope(triv(z_localized(3), free(1), cyc(3, 2)))
    assert v.exists and v.map.kind == "identity" and v.map.kernel == ()


def test_decision_examples():
    v = noetherian_envelope_decision(triv(z_localized(5), FULL_Q))
    assert v.status is Status.NOT_EXISTS and v.witness["rule"] == THEOREM_ZP_Q
    assert noetherian_envelope_decision(triv(z_localized(5), free(1), pruefer(5))).exists
    v = noetherian_envelope_decision(triv(Z, pruefer(2), FULL_Q))
    assert v.status is Status.UNKNOWN and v.certificate["rule"] == CONJECTURE_MONO


def test_unknown_never_upgraded():
    for R in [triv(Z, pruefer(2), FULL_Q), triv(Z, FULL_Q), triv(z_localized(2), free(1), FULL_Q)]:
        assert noetherian_envelope_decision(R).status is Status.UNKNOWN


def test_rational_base_is_noetherian():
    R = triv(Q, FULL_Q, free(1))
    assert R.is_noetherian
    v = noetherian_envelope_decision(R)
    assert v.exists and v.map.kind == "identity"


def test_semisimple_sym():
    assert semisimple_envelope_sym(z_localized(2)).codomain == "Q x F2"
    assert semisimple_envelope_sym(z_localized(7)).codomain == "Q x F7"
    with pytest.raises(UnsupportedBase):
        semisimple_envelope_sym(Q)


def test_noetherian_flag():
    assert triv(z_localized(3), free(1), cyc(3, 1)).is_noetherian
    assert not triv(z_localized(3), FULL_Q).is_noetherian
    assert not triv(Z, pruefer(7)).is_noetherian


def test_criterion_recheck_and_kernels():
    rings = [triv(z_localized(3), free(1), pruefer(3)), triv(Z, cyc(2, 1), pruefer(5)),
             triv(z_localized(2), pruefer(2), pruefer(2)), triv(Q, free(1)),
             triv(z_localized(5), cyc(5, 3))]
    for R in rings:
        v = epimorphic_noetherian_envelope(R)
        assert v.exists
        M = [s for s in R.module.summands if s.label in v.map.kernel]
        for P in sym_spectrum(R):
            assert localization_data(R, P, M).equal
        assert kernel_in_nilradical(R, v.map)
        for tag in ("field", "semisimple", "domain"):
            w = sym_envelope(R, tag)
            if w.exists:
                assert kernel_in_nilradical(R, w.map)


def test_sym_envelopes_by_base():
    statuses = {b.label: [sym_envelope(b, c).status.value
                          for c in ("field", "semisimple", "domain", "noetherian")]
                for b in (z_localized(3), Z, Q)}
    assert statuses == {"Z_(3)": ["NotExists", "Exists", "Exists", "Exists"],
                        "Z": ["NotExists", "NotExists", "Exists", "Exists"],
                        "Q": ["Exists", "Exists", "Exists", "Exists"]}


@pytest.mark.parametrize("p,a,b", [(2, 2, 1), (2, 3, 2), (3, 2, 1), (2, 4, 1), (5, 1, 1)])
def test_finite_analogue_agrees(p, a, b):
    # over Z/p^a only the zero nil ideal passes, as for a cyclic summand over Z_(p)
    sym = epimorphic_noetherian_envelope(triv(z_localized(p), cyc(p, b)))
    assert sym.exists and sym.map.kernel == ()
    A = make_zmod(p ** a)
    with limits(table_order=81, ideal_order=81):
        R = make_trivial_extension(A, cyclic_sum_module(A, (p ** b,)))
        module = ideal_closure(R, [R.index("(0,1)")])
        assert not epimorphic_noetherian_check_finite(R, module).passes
        assert epimorphic_noetherian_check_finite(R, zero_ideal(R)).passes
