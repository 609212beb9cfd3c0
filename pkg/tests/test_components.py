from fractions import Fraction

import pytest

from sextics.components import (
    ComponentDecomposition,
    decompose,
    divides,
    find_conic_factors,
    find_linear_factors,
    linear_torus_split,
)
from sextics.poly import DomainError, Poly, parse_poly
from sextics.torus import TorusPair

XY = ("x", "y")


def g(text):
    return parse_poly(text, XY)


class TestDivides:
    def test_b312_quotient(self):
        f = g("-y^2 + y - x^2") ** 3 + g("y^3 - 3*y^2 + 3*y*x^2") ** 2
        q = divides(f, g("x^2 - y"))
        assert q is not None and q.degree() == 4

    def test_absent(self):
        assert divides(g("x^2 - 1"), g("x + 2")) is None

    def test_self(self):
        f = g("x^2 + y")
        assert divides(f, f) == Poly.const(1, XY)


class TestLinearFactors:
    def test_horizontal_line(self):
        assert find_linear_factors(g("y*(x^2 + y^2 - 1)")) == [g("y")]

    def test_no_rational_lines(self):
        assert find_linear_factors(g("x^2 + y^2 + 1")) == []

    def test_item5_line(self):
        f = (g("-y^2 + y - x^2") ** 3
             + g("-2*y^3 + (-3*x + 2)*y^2 + (-2*x^2 + 3*x)*y + x^3") ** 2)
        lines = find_linear_factors(f)
        assert len(lines) == 1 and lines[0].degree() == 1

    def test_vertical_and_slanted(self):
        f = g("x*(y - 2*x + 1)*(y + x)")
        lines = find_linear_factors(f)
        assert len(lines) == 3

    def test_repeated_line_found_once(self):
        lines = find_linear_factors(g("(y - x)^2*(y + 1)"))
        assert len(lines) == 2


class TestConicFactors:
    def test_seeded_product(self):
        f = g("(y - x^2)*(y^3 + x + 5)")
        assert find_conic_factors(f) == [g("x^2 - y")]

    def test_b312_one_rational_conic(self):
        f = g("-y^2 + y - x^2") ** 3 + g("y^3 - 3*y^2 + 3*y*x^2") ** 2
        conics = find_conic_factors(f)
        assert conics == [g("x^2 - y")]

    def test_irreducible_sextic(self):
        assert find_conic_factors(g("x^6 + y^6 + x*y + 1")) == []

    def test_circle(self):
        f = g("(x^2 + y^2 - 1)*(x + y + 3)")
        assert find_conic_factors(f) == [g("x^2 + y^2 - 1")]

    def test_conic_linear_in_y(self):
        f = g("(x*y + x^2 - 2)*(y^2 + x + 1)")
        found = find_conic_factors(f)
        assert g("x*y + x^2 - 2") in found

    def test_line_pair_excluded(self):
        # (x - y)(x + y) is not an irreducible conic
        f = g("(x^2 - y^2)*(y - 7)")
        assert find_conic_factors(f) == []

    def test_conjugate_line_pair_kept(self):
        # x^2 + y^2 is irreducible over Q
        f = g("(x^2 + y^2)*(y - 1)")
        assert find_conic_factors(f) == [g("x^2 + y^2")]


class TestLinearTorusSplit:
    def test_generic_split(self):
        pair = TorusPair(g("-y^2"), g("x^3 - x + y^2"))
        split = linear_torus_split(pair)
        assert split is not None
        lhs = split[0] * split[1]
        assert lhs == pair.expand()

    def test_three_a5_on_line(self):
        pair = TorusPair(g("-y^2"), g("x^3 - x"))
        split = linear_torus_split(pair)
        assert split == (g("x^3 - x + y^3"), g("x^3 - x - y^3"))

    def test_rank_two_not_applicable(self):
        pair = TorusPair(g("x*y"), g("x^3 + y^3 + 1"))
        assert linear_torus_split(pair) is None


class TestDecompose:
    def test_item2_degrees(self):
        f = (g("-y^2 + y - 4*x^2") ** 3
             + g("y^3 + (-4*x - 1)*y^2 + 4*y*x - 8*x^3") ** 2)
        d = decompose(f)
        assert d.degrees() == (1, 1) and d.residual.degree() == 4

    def test_item16_generic_split(self):
        f3 = g("y^3 + (x + 1)*y^2 + (x^2 + x)*y + 4*x^3")
        pair = TorusPair(g("-y^2"), f3)
        d = decompose(pair.expand(), (), pair)
        assert d.degrees() == (3, 3)
        assert d.is_complete()

    def test_irreducible_no_hints(self):
        f = g("x^6 + y^6 + x*y + 1")
        d = decompose(f)
        assert d.factors == () and d.residual == f

    def test_reconstruction(self):
        f = g("(y - x)*(x^2 + y^2 - 2)*(y^3 - x + 1)")
        d = decompose(f)
        assert d.reconstruct() == f or d.reconstruct() == -f \
            or d.reconstruct().primitive() == f.primitive()

    def test_hints_applied(self):
        f = g("(y^2 - x^3 + 1)*(y^4 + x + 2)")
        d = decompose(f, hints=(g("y^2 - x^3 + 1"),))
        assert (2 in [deg for _p, deg in
                      [(p, dd) for p, dd, _m in d.factors]]) or \
            d.degrees() == (3,)

    def test_multiplicity(self):
        f = g("(y - x)^2*(y + x)")
        d = decompose(f)
        assert sorted(m for _p, _d, m in d.factors) == [1, 2]

    def test_emitted_factor_idempotent(self):
        f = g("(x^2 + y^2 - 1)*(y - 2*x + 1)*(y^3 + x^3 + 3)")
        d = decompose(f)
        for p, deg, _m in d.factors:
            sub = decompose(p)
            assert sub.degrees() == (deg,)
