import pytest
from hypothesis import given, settings, strategies as st

from gobs import PolynomialRing
from gobs.freemod import (
    SchreyerOrder, image_of, in_monomial_module, minimal_module_monomials,
)
from gobs.sba import run_sba
from gobs.syzygy import leading_sets, lm_syzygy_generators, syzygy_basis
from golden import load, mms
from oracles import truncated_syzygy_leads
from strategies import rings, systems

R = PolynomialRing("x,y,z", "grlex")
F3 = (R("x^3*y - z"), R("x*y*z - 2*y"), R("x*y^2 - z^2"))


def test_lm_syzygy_generators_example():
    o = SchreyerOrder(F3)
    gens = lm_syzygy_generators(F3)
    text = sorted(g.to_string(o) for g in gens)
    assert text == sorted(["-x^2*e_2 + z*e_1", "-x^2*e_3 + y*e_1", "-z*e_3 + y*e_2"]) or \
        {frozenset(g.terms) for g in gens} == {
            frozenset({(0, (0, 0, 1)), (1, (2, 0, 0))}),
            frozenset({(0, (0, 1, 0)), (2, (2, 0, 0))}),
            frozenset({(1, (0, 1, 0)), (2, (0, 0, 1))}),
        }
    assert {g.lm(o) for g in gens} == mms(R, "x^2*e_2, x^2*e_3, z*e_3")
    lms = [f.lm for f in F3]
    for g in gens:
        assert image_of(g, [R.monomial(a) for a in lms]) == 0


def test_lm_syzygy_generators_single_polynomial():
    assert lm_syzygy_generators((R("x"),)) == []


def test_lsl_quadrics_lex():
    S = load("quadrics_lex")
    assert set(leading_sets(S.polys).lsl) == mms(S.ring, "y*e_2, x^2*e_3, x*y*e_3")


def test_duplicate_generator():
    f = R("x*y - z")
    syz = syzygy_basis((f, f))
    assert syz.leading == ((1, (0, 0, 0)),)
    assert any(set(v.terms) == {(0, (0, 0, 0)), (1, (0, 0, 0))} for v in syz.elements)


def test_y_x_xplusy_lex():
    S = PolynomialRing("x,y", "lex")
    F = (S("y"), S("x"), S("x + y"))
    syz = syzygy_basis(F)
    assert all(image_of(v, F) == 0 for v in syz.elements)
    # frozen from the truncated linear-algebra oracle below
    assert syz.leading == ((1, (0, 1)), (2, (0, 0)))
    oracle = minimal_module_monomials(truncated_syzygy_leads(F, 3))
    assert oracle == list(syz.leading)


def test_final_gb_has_equal_leading_sets():
    S = load("cubics_grlex")
    final = run_sba(S.polys).final
    assert leading_sets(final).equal()


def test_cubics_grlex_f3_denominator():
    ls = set(leading_sets(F3).ls)
    assert ls == mms(R, "x^2*z^2*e_2, x^3*z*e_2, x^3*y*e_2, x^3*y*e_3, x*y*z*e_3")


def test_single_polynomial_sets_empty():
    s = leading_sets((R("x + 1"),))
    assert s.ls == () and s.lsl == ()


@pytest.mark.parametrize("F, exc", [((), ValueError), ((R.zero,), ValueError)])
def test_input_errors(F, exc):
    with pytest.raises(exc):
        syzygy_basis(F)


def test_mixed_rings_rejected():
    S = PolynomialRing("x,y,z", "lex")
    with pytest.raises(ValueError):
        syzygy_basis((R("x"), S("y")))


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_syzygy_basis_properties(data):
    F = data.draw(systems(min_gens=1, max_gens=3))
    syz = syzygy_basis(F)
    o = syz.order
    for v in syz.elements:
        assert image_of(v, F) == 0
        assert v.lead(o)[1] == 1
    sets = leading_sets(F)
    assert all(in_monomial_module(s, sets.lsl) for s in sets.ls)
    for gens in (sets.ls, sets.lsl):
        assert list(gens) == minimal_module_monomials(gens)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_leading_syzygies_match_linear_algebra(data):
    ring = data.draw(rings(orders=("grlex", "grevlex"), nvars=2))
    F = data.draw(systems(ring=ring, min_gens=2, max_gens=3, max_deg=2))
    D = 5
    oracle = minimal_module_monomials(truncated_syzygy_leads(F, D))
    ls = syzygy_basis(F).leading
    deg = lambda mm: sum(mm[1]) + F[mm[0]].degree()
    assert [s for s in ls if deg(s) <= D] == [s for s in oracle if deg(s) <= D]
