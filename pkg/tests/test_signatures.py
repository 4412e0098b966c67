import pytest
from hypothesis import given, settings

from gobs import PolynomialRing, is_groebner, minimum_obstruction, signature, spolynomial
from gobs.freemod import ModuleElement, SchreyerOrder, image_of, in_monomial_module
from gobs.ring import DIVISOR_STRATEGIES, divide
from gobs.sba import run_sba
from gobs.signatures import SPair, spair_preimage, standard_spairs
from gobs.syzygy import leading_sets, syzygy_basis
from corpus import corpus
from golden import CUBICS_GRLEX_APPENDED, load
from strategies import systems
from gobs.textio import parse_module_monomial

R = PolynomialRing("x,y,z", "grlex")
F3 = (R("x^3*y - z"), R("x*y*z - 2*y"), R("x*y^2 - z^2"))


def test_spairs_sorted_ascending_example():
    o = SchreyerOrder(F3)
    rights = [p.right for p in standard_spairs(F3)]
    assert rights == [(2, (0, 0, 1)), (1, (2, 0, 0)), (2, (2, 0, 0))]
    assert rights == sorted(rights, key=o.key)


@settings(max_examples=60, deadline=None)
@given(systems(min_gens=2, max_gens=4))
def test_spairs_match_definition(F):
    o = SchreyerOrder(F)
    pairs = standard_spairs(F, dedup=False)
    assert len(pairs) == len(F) * (len(F) - 1) // 2
    for p in pairs:
        (k, g), (l, d) = p.left, p.right
        assert k < l
        assert tuple(a + b for a, b in zip(g, F[k].lm)) == tuple(a + b for a, b in zip(d, F[l].lm))
        # the left component is always Schreyer-smaller than the right one
        assert o.compare(p.left, p.right) < 0
    deduped = standard_spairs(F)
    rights = [p.right for p in deduped]
    assert len(set(rights)) == len(rights)
    assert rights == sorted(rights, key=o.key)
    assert set(rights) == {p.right for p in pairs}


def test_tie_rules_pick_partner():
    F = (R("x*y"), R("x*z"), R("x"))
    latest = {p.right: p.left[0] for p in standard_spairs(F)}
    earliest = {p.right: p.left[0] for p in standard_spairs(F, tie="earliest")}
    assert latest[(2, (0, 0, 1))] == 1 and earliest[(2, (0, 0, 1))] == 1
    assert latest[(2, (0, 1, 0))] == 0
    with pytest.raises(ValueError):
        standard_spairs(F, tie="random")


def test_spolynomial_example():
    p = SPair((1, (0, 1, 0)), (2, (0, 0, 1)))
    assert spolynomial(p, F3) == R("z^3 - 2*y^2")
    f = R("x*y - z")
    assert spolynomial(SPair((0, (0, 0, 0)), (1, (0, 0, 0))), (f, f)) == 0


def test_spolynomial_rejects_bad_pairs():
    with pytest.raises(ValueError):
        spolynomial(SPair((1, (0, 1, 0)), (1, (0, 1, 0))), F3)
    with pytest.raises(ValueError):
        spolynomial(SPair((1, (0, 0, 0)), (2, (0, 0, 1))), F3)


def test_signature_examples():
    S = PolynomialRing("x,y", "lex")
    F = (S("y"), S("x"), S("x + y"))
    syz = syzygy_basis(F)
    u = ModuleElement.basis(S, 3, 2, (0, 0))
    assert signature(F[2], u, syz) == (1, (0, 0))
    # the first generator has signature e_1 from any preimage
    assert signature(F[0], ModuleElement.basis(S, 3, 0, (0, 0)), syz) == (0, (0, 0))
    with pytest.raises(ValueError):
        signature(F[0], u, syz)
    with pytest.raises(ValueError):
        signature(S.zero, ModuleElement(S, 3), syz)


def test_min_obstruction_quadrics_lex():
    S = load("quadrics_lex")
    obs = minimum_obstruction(S.polys)
    assert obs.signature == parse_module_monomial("y*e_2", S.ring)
    assert obs.remainder.lm == S.ring("x*w^2").lm


def test_min_obstruction_tuple_10():
    S = load("cubics_grlex")
    F = tuple(S.polys) + tuple(S.ring(t) for t, _, _ in CUBICS_GRLEX_APPENDED[:7])
    assert len(F) == 10
    obs = minimum_obstruction(F)
    assert obs.signature == parse_module_monomial("x*e_10", S.ring)
    assert (obs.pair.left, obs.pair.right) == (
        parse_module_monomial("y*e_9", S.ring), parse_module_monomial("x*e_10", S.ring))
    assert obs.remainder.monic() == S.ring("x*z - 1/2*y*z")
    assert image_of(obs.preimage, F) == obs.remainder
    assert is_groebner(F) == (False, obs.signature)
    assert is_groebner(F + (obs.remainder.monic(),)) == (True, None)


def test_is_groebner_single_and_monomials():
    assert is_groebner((R("x^2 + y"),)) == (True, None)
    assert is_groebner((R("x"), R("y"))) == (True, None)


@pytest.mark.parametrize("k", range(0, 200, 3))
def test_min_obstruction_is_min_of_lsl_outside_ls(k):
    F = corpus()[k]
    sets = leading_sets(F)
    o = SchreyerOrder(F)
    outside = sorted((s for s in sets.lsl if not in_monomial_module(s, sets.ls)), key=o.key)
    obs = minimum_obstruction(F)
    assert (obs is None) == (not outside)
    if obs is not None:
        assert obs.signature == outside[0]
        # the preimage of the remainder leads at the guessed signature
        assert signature(obs.remainder, obs.preimage, syzygy_basis(F)) == obs.signature


@pytest.mark.parametrize("k", range(1, 200, 5))
def test_obstruction_independent_of_reduction_choices(k):
    F = corpus()[k]
    base = minimum_obstruction(F)
    for strategy in DIVISOR_STRATEGIES:
        for tail in (True, False):
            obs = minimum_obstruction(F, strategy=strategy, tail_reduce=tail)
            assert (obs is None) == (base is None)
            if obs is not None:
                assert obs.signature == base.signature
                assert obs.remainder.lm == base.remainder.lm or tail is False or \
                    strategy != "lowest"


@settings(max_examples=40, deadline=None)
@given(systems(min_gens=2, max_gens=3))
def test_appended_signature_equals_guess(F):
    res = run_sba(F)
    for s in res.trace.steps:
        assert s.signature == s.guessed_signature
        # the appended leading monomial is new
        assert not any(all(a <= b for a, b in zip(f.lm, s.appended.lm)) for f in s.tuple_before)


def test_spair_preimage_maps_to_remainder():
    F = F3
    for p in standard_spairs(F):
        q, r = divide(spolynomial(p, F), F)
        assert image_of(spair_preimage(p, F, q), F) == r


def test_earliest_tie_gives_same_leading_monomials():
    S = load("cubics_grlex")
    a = run_sba(S.polys)
    b = run_sba(S.polys, tie="earliest")
    assert [f.lm for f in a.appended] == [f.lm for f in b.appended]
    assert a.reduced == b.reduced
