import pytest

from ringenv.config import limits
from ringenv.errors import ClassMismatch, SizeLimit
from ringenv.finring import (RingHom, diagonal, ideal_closure, identity, make_gf, make_product,
                             make_quotient, make_subring, make_zmod, residue_field, spectrum)
from ringenv.homsearch import (ClassTag, EnvelopeVerdict, Status, build_catalog, catalog_for,
                               enumerate_homs, factors_through, find_isomorphism, is_envelope,
                               is_minimal, is_preenvelope, satisfies, search_envelope)
from ringenv.envelopes import decide


def labels(catalog):
    return [R.label for R in catalog.rings]


def projection_z4():
    Z4 = make_zmod(4)
    return make_quotient(Z4, ideal_closure(Z4, [2]))[1]


def test_enumerate_examples():
    assert len(enumerate_homs(make_zmod(4), make_zmod(2))) == 1
    assert len(enumerate_homs(make_zmod(2), make_zmod(3))) == 0
    Z6 = make_zmod(6)
    assert identity(Z6) in enumerate_homs(Z6, Z6).homs


@pytest.mark.parametrize("m,n", [(m, n) for m in range(2, 13) for n in range(2, 13)])
def test_zmod_hom_counts(m, n):
    # a unital map Z/m -> Z/n exists exactly when n divides m, and is unique
    assert len(enumerate_homs(make_zmod(m), make_zmod(n))) == (1 if m % n == 0 else 0)


@pytest.mark.parametrize("p,a,b", [(2, 1, 2), (2, 2, 2), (2, 2, 3), (2, 3, 3), (3, 1, 2),
                                   (3, 2, 2), (2, 1, 3), (2, 2, 4)])
def test_field_embedding_counts(p, a, b):
    # F_{p^a} embeds in F_{p^b} iff a | b, in exactly a ways
    count = len(enumerate_homs(make_gf(p ** a), make_gf(p ** b)))
    assert count == (a if b % a == 0 else 0)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_boolean_endomorphism_count(k):
    # unital maps F_2^k -> F_2^k correspond to maps of the k-point spectrum
    B = make_product([make_zmod(2)] * k)
    assert len(enumerate_homs(B, B)) == k ** k


def test_every_enumerated_map_is_a_hom(small_corpus):
    for _, R in small_corpus:
        for S in build_catalog("semisimple", 9).rings:
            for h in enumerate_homs(R, S):
                assert h.failures() == []


def test_hom_cap():
    with limits(hom_order=8):
        with pytest.raises(SizeLimit):
            enumerate_homs(make_zmod(9), make_zmod(3))


def test_factors_through_examples():
    f = projection_z4()
    assert factors_through(f, f) is not None
    h = factors_through(f, identity(f.domain))
    assert h.image == f.image
    h = factors_through(f, f)
    assert h == identity(f.codomain)


def test_composition_sanity(small_corpus):
    for _, R in small_corpus:
        f = decide(R, "semisimple").map
        for S in build_catalog("semisimple", 6).rings:
            for g in enumerate_homs(R, S):
                h = factors_through(g, f)
                if h is not None:
                    assert (h @ f).image == g.image


def test_preenvelope_examples():
    fields = build_catalog("field", 9)
    assert is_preenvelope(projection_z4(), fields)
    Z6 = make_zmod(6)
    to2 = enumerate_homs(Z6, make_zmod(2)).homs[0]
    check = is_preenvelope(to2, fields)
    assert not check
    S, g = check.witness
    assert S.order == 3
    K = make_gf(7)
    assert is_preenvelope(identity(K), fields)
    with pytest.raises(ClassMismatch):
        is_preenvelope(identity(make_zmod(4)), fields)


def test_minimality_examples():
    assert is_minimal(projection_z4())
    Z12 = make_zmod(12)
    f = decide(Z12, "semisimple").map
    check = is_minimal(f)
    assert check.ok and check.endo_count == 1
    F2 = make_zmod(2)
    diag = diagonal([identity(F2), identity(F2)])
    check = is_minimal(diag)
    assert not check and not check.witness.is_bijective()


def test_is_envelope_examples():
    fields = build_catalog("field", 9)
    v = is_envelope(projection_z4(), fields)
    assert v.status is Status.EXISTS and v.minimal
    Z6 = make_zmod(6)
    v = is_envelope(enumerate_homs(Z6, make_zmod(2)).homs[0], fields)
    assert v.status is Status.NOT_EXISTS and v.witness["kind"] == "does_not_factor"
    K = make_gf(8)
    assert is_envelope(identity(K), fields).exists


def test_not_minimal_preenvelope():
    F2 = make_zmod(2)
    diag = diagonal([identity(F2), identity(F2)])
    v = is_envelope(diag, build_catalog("semisimple", 9))
    assert v.status is Status.NOT_EXISTS and v.witness["kind"] == "not_minimal"


def test_catalog_examples():
    assert labels(build_catalog("field", 9)) == ["F2", "F3", "F4", "F5", "F7", "F8", "F9"]
    assert labels(build_catalog("domain", 4)) == ["F2", "F3", "F4"]
    assert labels(build_catalog("semisimple", 6)) == ["F2", "F3", "F4", "F5", "F2 x F2",
                                                      "F2 x F3"]
    for tag in ClassTag:
        assert all(satisfies(S, tag) for S in build_catalog(tag, 9).rings)


def test_catalog_extension_by_divisors():
    cat = catalog_for("field", 9, 22)
    assert "F11" in labels(cat) and cat.to_json()["extra_orders"] == [11]
    assert catalog_for("field", 9, 12) is build_catalog("field", 9)


def test_search_needs_divisor_members():
    Z22 = make_zmod(22)
    # the bounded catalog misses F11, so Z/22 -> F2 looks like an envelope there
    assert search_envelope(Z22, build_catalog("field", 9)).exists
    assert not search_envelope(Z22, catalog_for("field", 9, 22)).exists


def test_satisfies():
    assert satisfies(make_gf(4), "field")
    assert not satisfies(make_zmod(4), "semisimple")
    assert satisfies(make_product([make_zmod(2), make_zmod(3)]), "semisimple")
    assert not satisfies(make_zmod(6), "domain")
    assert satisfies(make_zmod(4), "noetherian")
    assert not satisfies(make_zmod(1), "noetherian")


def test_verdict_invariants():
    with pytest.raises(ValueError):
        EnvelopeVerdict(Status.EXISTS, ClassTag.FIELD)
    with pytest.raises(ValueError):
        EnvelopeVerdict(Status.NOT_EXISTS, ClassTag.FIELD)
    with pytest.raises(ValueError):
        EnvelopeVerdict(Status.UNKNOWN, ClassTag.FIELD)


def test_residue_maps_commute_only_trivially(small_corpus):
    for _, R in small_corpus:
        maps = [residue_field(R, P)[1] for P in spectrum(R)]
        for i, u in enumerate(maps):
            for j, w in enumerate(maps):
                hs = [h for h in enumerate_homs(u.codomain, w.codomain)
                      if (h @ u).image == w.image]
                if i == j:
                    assert hs == [identity(u.codomain)]
                else:
                    assert hs == []


def test_envelope_uniqueness(small_corpus):
    for _, R in small_corpus:
        for tag in ("field", "semisimple", "domain"):
            v = decide(R, tag)
            if not v.exists:
                continue
            catalog = catalog_for(tag, 9, R.order)
            other = search_envelope(R, catalog)
            assert other.exists
            f, g = v.map, other.map
            assert find_isomorphism(f.codomain, g.codomain, over=(f, g)) is not None


def test_image_restriction(small_corpus):
    catalog = build_catalog("semisimple", 9)
    for _, R in small_corpus:
        for S in catalog.rings:
            for f in enumerate_homs(R, S):
                if not is_preenvelope(f, catalog):
                    continue
                sub, inc = make_subring(S, set(f.image))
                pos = {a: i for i, a in enumerate(inc.image)}
                core = RingHom(R, sub, tuple(pos[b] for b in f.image))
                assert core.is_hom()
                assert is_preenvelope(core, catalog)
