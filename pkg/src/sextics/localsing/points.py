"""Locating singular points exactly: rational points and conjugate clusters.

The singular locus of a squarefree curve is cut out by f = f_x = f_y = 0.
X-coordinates are found from the eliminant Res_y(f, f_y); each irreducible
factor becomes a number field in which the matching y-coordinates are read
off a univariate gcd.  Points that are conjugate over Q are kept as one
cluster with its degree; every germ computation then runs over that field.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from ..numfield import (
    NFElt,
    NumberField,
    coef_key,
    extend_field,
    factor_rational,
    nf,
    unipoly_gcd,
)
from ..poly import (
    DomainError,
    Poly,
    UniPoly,
    is_squarefree,
    poly_gcd,
    resultant,
    unipoly_squarefree_part,
)

__all__ = [
    "AlgebraicPoint",
    "NotSquarefreeError",
    "singular_points",
    "translate_to_origin",
    "specialize_x",
    "point_on_curve",
]

Coord = Union[Fraction, NFElt]


class NotSquarefreeError(DomainError):
    """The input curve has a repeated component."""


@dataclass(frozen=True)
class AlgebraicPoint:
    """A point with exact coordinates, possibly a conjugate cluster.

    `field` is None for rational points; otherwise both coordinates live in
    the number field and the point stands for all `degree` conjugates.
    """

    x: Coord
    y: Coord
    field: Optional[NumberField] = None
    degree: int = 1

    @classmethod
    def rational(cls, x, y) -> "AlgebraicPoint":
        return cls(Fraction(x), Fraction(y), None, 1)

    def is_rational(self) -> bool:
        return self.field is None

    def sort_key(self):
        mp = () if self.field is None else tuple(
            (c.numerator, c.denominator) for c in self.field.minpoly.coeffs)
        return (self.degree, mp, coef_key(self.x), coef_key(self.y))

    def label(self) -> str:
        if self.field is None:
            return "(%s, %s)" % (self.x, self.y)
        return "(%s, %s) with %s = 0" % (self.x, self.y, self.field.minpoly)

    def __str__(self) -> str:
        return self.label()


def point_on_curve(f: Poly, p: AlgebraicPoint) -> bool:
    val = f.evaluate({"x": p.x, "y": p.y})
    return not val


def translate_to_origin(f: Poly, p: AlgebraicPoint) -> Poly:
    """Germ of f at p: f(x + px, y + py) over the point's field."""
    xv = Poly.var("x", ("x", "y"))
    yv = Poly.var("y", ("x", "y"))
    fx = f.with_vars(("x", "y"))
    return fx.substitute({"x": xv + Poly.const(p.x, ("x", "y")),
                          "y": yv + Poly.const(p.y, ("x", "y"))})


def specialize_x(f: Poly, field: Optional[NumberField], x0: Coord) -> UniPoly:
    """f(x0, y) as a univariate in y over the field."""
    fx = f.with_vars(("x", "y"))
    deg = max(fx.degree_in("y"), 0)
    coeffs = [nf(field, 0)] * (deg + 1)
    for (i, j), c in fx.terms.items():
        coeffs[j] = coeffs[j] + c * (x0 ** i if i else nf(field, 1))
    return UniPoly("y", coeffs)


def _pure_x_content(f: Poly) -> Poly:
    """gcd of the y-coefficients: nonconstant iff f has a factor free of y."""
    fx = f.with_vars(("x", "y"))
    cont = None
    for e, c in fx.coeffs_in("y").items():
        cont = c if cont is None else poly_gcd(cont, c)
    return cont


def _choose_shear(f: Poly) -> int:
    for k in range(0, 40):
        g = f if k == 0 else _shear(f, k)
        if _pure_x_content(g).degree() <= 0:
            return k
    raise DomainError("no shear frees the curve of vertical components")


def _shear(f: Poly, k: int) -> Poly:
    fx = f.with_vars(("x", "y"))
    xv = Poly.var("x", ("x", "y"))
    yv = Poly.var("y", ("x", "y"))
    return fx.substitute({"x": xv + yv.scale(k)})


def singular_points(f: Poly, tower_cap: int = 12) -> list:
    """All affine points with f = f_x = f_y = 0, as points/clusters.

    Raises NotSquarefreeError for a non-reduced curve (its singular locus
    would be positive-dimensional).
    """
    fx = f.with_vars(("x", "y"))
    if fx.is_zero() or fx.is_constant():
        raise DomainError("not a curve: %s" % f)
    if not is_squarefree(fx):
        raise NotSquarefreeError("curve is not squarefree: %s" % f)
    k = _choose_shear(fx)
    g = fx if k == 0 else _shear(fx, k)
    gx = g.derivative("x")
    gy = g.derivative("y")
    if g.degree_in("y") <= 0:
        raise DomainError("curve has no y-dependence after shear")
    elim = resultant(g, gy, "y")
    if elim.is_zero():
        raise DomainError("unexpected vanishing eliminant")
    if elim.is_constant():
        return []
    ex = UniPoly.from_poly(elim)
    if ex.var != "x":
        ex = UniPoly("x", ex.coeffs)
    points = []
    for p, _mult in factor_rational(unipoly_squarefree_part(ex)):
        if p.degree() == 1:
            kfield: Optional[NumberField] = None
            theta: Coord = -p.coeffs[0] / p.coeffs[1]
        else:
            from ..numfield import integral_minpoly
            mp, scale = integral_minpoly(p)
            kfield = NumberField(mp)
            theta = kfield.generator() * (1 / scale)
        g1 = specialize_x(g, kfield, theta)
        g2 = specialize_x(gx, kfield, theta)
        g3 = specialize_x(gy, kfield, theta)
        common = unipoly_gcd(unipoly_gcd(g1, g2), g3)
        if common.degree() <= 0:
            continue
        from ..numfield import factor_over_field
        for q, _m in factor_over_field(kfield, common):
            if q.degree() == 1:
                y0 = (-q.coeffs[0]) / q.coeffs[1]
                pfield, px, py = kfield, theta, y0
                pdeg = p.degree()
            else:
                lfield, embed, y0 = extend_field(kfield, q, cap=tower_cap)
                pfield = lfield
                px = embed(theta)
                py = y0
                pdeg = p.degree() * q.degree()
            if k:
                px = px + py * k
            points.append(AlgebraicPoint(px, py, pfield, pdeg))
    points.sort(key=lambda pt: pt.sort_key())
    return points
