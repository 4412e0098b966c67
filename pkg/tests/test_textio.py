import pytest
from hypothesis import given, settings, strategies as st

from gobs import GF, QQ, PolynomialRing
from gobs.textio import (
    ParseError, format_module_element, format_module_monomial, parse_module_element,
    parse_module_monomial, parse_polynomial, parse_system,
)
from strategies import polynomials, rings


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_polynomial_round_trip(data):
    R = data.draw(rings())
    f = data.draw(polynomials(R, max_terms=4))
    assert parse_polynomial(str(f), R) == f


def test_parser_features():
    R = PolynomialRing("x,y,z")
    assert R("(x + y)^2") == R("x^2 + 2*x*y + y^2")
    assert R("x**2 - -y") == R("x^2 + y")
    assert R("3/6*x") == R("x/2")


@pytest.mark.parametrize("text", ["x +", "x^y", "x / y", "(x", "q*x", "x^-1", "1/0"])
def test_parse_errors(text):
    R = PolynomialRing("x,y")
    with pytest.raises(ParseError):
        parse_polynomial(text, R)


def test_parse_error_position():
    R = PolynomialRing("x,y")
    with pytest.raises(ParseError) as info:
        parse_polynomial("x + q", R, line=4, column=3)
    assert info.value.line == 4
    assert info.value.column == 7


def test_module_monomial_round_trip():
    R = PolynomialRing("x,y,z")
    for mm in [(0, (0, 0, 0)), (2, (2, 0, 1)), (1, (0, 1, 0))]:
        assert parse_module_monomial(format_module_monomial(mm, R), R) == mm
    assert format_module_monomial((1, (2, 0, 0)), R) == "x^2*e_2"


def test_module_element_round_trip():
    R = PolynomialRing("x,y")
    terms = {(0, (1, 0)): QQ(2), (1, (0, 2)): QQ(-1)}
    text = format_module_element(terms, R)
    assert parse_module_element(text, R) == terms


def test_module_element_errors():
    R = PolynomialRing("x,y")
    with pytest.raises(ParseError):
        parse_module_element("x + y", R)
    with pytest.raises(ParseError):
        parse_module_element("e_1*e_2", R)
    with pytest.raises(ParseError):
        parse_module_element("e_0", R)


SYSTEM = """\
# comment line
field: GF(5)
vars: x, y, z
order: deglex
polys:
  x*y + 4*z + 2   # trailing comment
  x*y*z + y^2 + 1
"""


def test_parse_system():
    S = parse_system(SYSTEM)
    assert S.ring.field == GF(5)
    assert S.ring.variables == ("x", "y", "z")
    assert len(S.polys) == 2
    assert S.polys[0] == S.ring("x*y - z + 2")


@pytest.mark.parametrize("bad, where", [
    (SYSTEM.replace("GF(5)", "GF(6)"), 2),
    (SYSTEM.replace("deglex", "revlex"), 4),
    (SYSTEM.replace("x*y*z", "x*y*q"), 7),
    (SYSTEM.replace("x, y, z", "x, y, x"), 3),
    (SYSTEM.replace("+ 1", "- x*y*z - y^2"), 7),
])
def test_system_errors_carry_line(bad, where):
    with pytest.raises(ParseError) as info:
        parse_system(bad)
    assert info.value.line == where


def test_weight_order_spec():
    S = parse_system(SYSTEM.replace("deglex", "weight(3, 2, 1)"))
    assert S.ring.order.kind == "weight"
    with pytest.raises(ParseError):
        parse_system(SYSTEM.replace("deglex", "weight(3, 2)"))
