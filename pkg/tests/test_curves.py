import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from trisect.curves import (INFINITE, Form, ProjPoint, fulton_mult,
                            is_singular_at, line_intersection, linear_form,
                            parse_form)
from trisect.field import Eis, W


X0 = linear_form(1, 0, 0)
X1 = linear_form(0, 1, 0)
X2 = linear_form(0, 0, 1)
ORIGIN = ProjPoint(0, 0, 1)  # origin of the affine chart x2 = 1


def test_form_basics():
    f = parse_form("x0^3 + (w)*x1^3 + (-1 - w)*x2^3")
    assert f.degree == 3
    assert f.coeffs[(0, 3, 0)] == W
    assert f.evaluate((1, 1, 1)) == Eis(0)
    assert parse_form(str(f)) == f
    g = X0 * X1 - X1 * X0
    assert not g and g.degree == -1
    with pytest.raises(ValueError):
        Form({(1, 0, 0): 1, (2, 0, 0): 1})


def test_form_parse_round_trip_samples():
    samples = [
        "x0*x1*x2",
        "x0^2*x1 + (w)*x1^2*x2 + (-1 - w)*x2^2*x0",
        "2*x0^2 + (1/3)*x1*x2",
        "(-2)*x0 + x1",
    ]
    for s in samples:
        f = parse_form(s)
        assert parse_form(str(f)) == f


def test_proj_point_canonicalisation():
    assert ProjPoint(0, 2, 2 * W) == ProjPoint(0, 1, W)
    assert ProjPoint(3, 6, 9) == ProjPoint(1, 2, 3)
    assert hash(ProjPoint(0, 2, 4)) == hash(ProjPoint(0, 1, 2))
    with pytest.raises(ValueError):
        ProjPoint(0, 0, 0)


def test_line_intersection():
    p = line_intersection(X0, X1)
    assert p == ProjPoint(0, 0, 1)
    with pytest.raises(ValueError):
        line_intersection(X0, X0.scale(W))


def test_transversal_lines():
    assert fulton_mult(X0, X1, ORIGIN) == 1
    # meeting point elsewhere: multiplicity zero
    assert fulton_mult(X0, X1, ProjPoint(0, 1, 0)) == 0


def test_conic_line_tangency():
    conic = parse_form("x0*x2 + (-1)*x1^2")
    assert fulton_mult(conic, X1, ORIGIN) == 1   # transversal branch
    assert fulton_mult(conic, X0, ORIGIN) == 2   # tangent line


def test_cusp_and_node():
    cusp = parse_form("x1^2*x2 + (-1)*x0^3")  # v^2 = u^3 at the chart origin
    assert fulton_mult(cusp, X1, ORIGIN) == 3
    assert fulton_mult(cusp, X0, ORIGIN) == 2
    assert is_singular_at(cusp, ORIGIN)
    node = parse_form("x1^2*x2 + (-1)*x0^3 + (-1)*x0^2*x2")
    assert fulton_mult(node, X1, ORIGIN) == 2
    assert is_singular_at(node, ORIGIN)
    assert not is_singular_at(parse_form("x0*x2 + (-1)*x1^2"), ORIGIN)


def test_total_contact_conics():
    # The two conics differ by x0^2, so they meet only at [0:0:1]; the whole
    # Bezout total 4 sits at that single point.
    c1 = parse_form("x0*x2 + (-1)*x1^2")
    c2 = parse_form("x0*x2 + (-1)*x1^2 + x0^2")
    assert fulton_mult(c1, c2, ORIGIN) == 4


def test_shared_component_is_infinite():
    f = X0 * X1
    g = X0 * X2
    assert fulton_mult(f, g, ProjPoint(0, 1, 1)) is INFINITE  # on x0 = 0
    assert fulton_mult(f, g, ProjPoint(1, 0, 0)) == 1         # x1 meets x2
    assert fulton_mult(f, f, ORIGIN) is INFINITE
    # multiple of the same line
    assert fulton_mult(X0, X0.scale(W), ProjPoint(0, 1, 0)) is INFINITE


def test_chart_choice_is_forced_by_largest_nonzero_coordinate():
    # A point with all coordinates nonzero: the algorithm works in chart 2.
    f = parse_form("x0 + (-1)*x1")
    g = parse_form("x0 + (-1)*x2")
    assert fulton_mult(f, g, ProjPoint(1, 1, 1)) == 1


# --- property tests ---------------------------------------------------------
#
# Random forms vanishing at [0:0:1]: any integer combination of the degree-2
# monomials other than x2^2.

_MONOS = [(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1)]
_coeff = st.integers(min_value=-3, max_value=3)


def _conic(cs):
    return Form(dict(zip(_MONOS, cs)))


conics = st.tuples(*[_coeff] * 5).map(_conic).filter(bool)


@given(conics, conics)
def test_mult_is_symmetric(f, g):
    assert fulton_mult(f, g, ORIGIN) == fulton_mult(g, f, ORIGIN)


@given(conics, conics, conics)
def test_mult_is_additive_over_products(f, g, h):
    lhs = fulton_mult(f, g * h, ORIGIN)
    mg = fulton_mult(f, g, ORIGIN)
    mh = fulton_mult(f, h, ORIGIN)
    if mg is INFINITE or mh is INFINITE:
        assert lhs is INFINITE
    else:
        assert lhs == mg + mh


@given(conics, conics)
def test_mult_positive_iff_common_point(f, g):
    m = fulton_mult(f, g, ORIGIN)
    assert m is INFINITE or m >= 1
    assume(f.evaluate((1, 2, 3)) or g.evaluate((1, 2, 3)))
    assert fulton_mult(f, g, ProjPoint(1, 2, 3)) == 0
