"""Number fields presented as Q[w]/(m(w)), flattened to a single generator.

The resolution of singularities and the singular-point finder work over
towers of these fields; every extension is immediately re-flattened via a
primitive element so elements stay simple coefficient vectors.

`field = None` denotes Q itself with plain `Fraction` elements throughout
the package.

Irreducible factorization of univariate polynomials over Q is delegated to
sympy (`factor_rational`); factorization over an extension reduces to it by
Trager's norm trick.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Tuple

import sympy

from .poly import (
    DomainError,
    Poly,
    UniPoly,
    unipoly_gcd,
    unipoly_squarefree_decomposition,
    resultant,
)

__all__ = [
    "NumberField",
    "NFElt",
    "TowerCapError",
    "nf",
    "field_degree",
    "coerce_unipoly",
    "factor_rational",
    "rational_roots",
    "factor_over_field",
    "roots_in_field",
    "extend_field",
    "coef_key",
]


class TowerCapError(DomainError):
    """An extension would exceed the configured total-degree cap."""


class NumberField:
    """Q[w]/(minpoly); minpoly monic irreducible over Q of degree >= 2."""

    __slots__ = ("minpoly", "name")

    def __init__(self, minpoly: UniPoly, name: str = "w"):
        mp = minpoly.monic()
        if mp.degree() < 2:
            raise DomainError("number field needs degree >= 2 minimal polynomial")
        object.__setattr__(self, "minpoly", UniPoly(name, mp.coeffs))
        object.__setattr__(self, "name", name)

    def __setattr__(self, *a):
        raise AttributeError("NumberField is immutable")

    @property
    def degree(self) -> int:
        return self.minpoly.degree()

    def __eq__(self, other):
        if not isinstance(other, NumberField):
            return NotImplemented
        return self.minpoly.coeffs == other.minpoly.coeffs

    def __hash__(self):
        return hash(self.minpoly.coeffs)

    def __repr__(self):
        return "NumberField(%s = 0)" % self.minpoly

    # element constructors -------------------------------------------------

    def element(self, coeffs) -> "NFElt":
        cs = [Fraction(c) if isinstance(c, (int, str)) else c for c in coeffs]
        cs = cs[: self.degree] + [Fraction(0)] * (self.degree - len(cs))
        return NFElt(self, tuple(cs))

    def generator(self) -> "NFElt":
        return self.element([0, 1])

    def from_rational(self, c) -> "NFElt":
        return self.element([Fraction(c)])


class NFElt:
    """Element of a NumberField: dense coefficient vector in the generator."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: NumberField, coeffs: Tuple[Fraction, ...]):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, *a):
        raise AttributeError("NFElt is immutable")

    def _coerce(self, other):
        if isinstance(other, NFElt):
            if other.field != self.field:
                raise DomainError("mixed number fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return NotImplemented

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        if not isinstance(other, NFElt):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return NFElt(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return NFElt(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        d = self.field.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                if b:
                    prod[i + j] += a * b
        mp = self.field.minpoly.coeffs  # monic
        for k in range(len(prod) - 1, d - 1, -1):
            c = prod[k]
            if not c:
                continue
            prod[k] = Fraction(0)
            for j in range(d):
                prod[k - d + j] -= c * mp[j]
        return NFElt(self.field, tuple(prod[:d]))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.from_rational(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def inverse(self) -> "NFElt":
        if not self:
            raise ZeroDivisionError("inverse of zero field element")
        # extended Euclid on (poly of self, minpoly) over Q; remainders and
        # cofactors are rescaled together to stop coefficient snowballing
        a = list(self.coeffs)
        while a and not a[-1]:
            a.pop()
        r0, r1 = list(self.field.minpoly.coeffs), a
        s0, s1 = [], [Fraction(1)]
        while r1:
            q, r = _dense_divmod(r0, r1)
            s = _dense_sub(s0, _dense_mul(q, s1))
            c = _dense_content(r)
            if c not in (0, 1):
                inv_c = 1 / c
                r = [x * inv_c for x in r]
                s = [x * inv_c for x in s]
            r0, r1 = r1, r
            s0, s1 = s1, s
        lead = r0[-1]
        inv = [c / lead for c in s0]
        return self.field.element(inv)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.field.from_rational(other) * self.inverse()

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise DomainError("not a rational element: %s" % self)
        return self.coeffs[0]

    def to_theta_poly(self, varname: Optional[str] = None) -> UniPoly:
        return UniPoly(varname or self.field.name, self.coeffs)

    def __str__(self):
        return str(self.to_theta_poly())

    __repr__ = __str__


def _dense_divmod(a, b):
    a = list(a)
    db = len(b) - 1
    lc = b[-1]
    q = [Fraction(0)] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        if not a[i]:
            continue
        f = a[i] / lc
        q[i - db] = f
        for j, c in enumerate(b):
            a[i - db + j] -= f * c
    while a and not a[-1]:
        a.pop()
    return q, a


def _dense_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _dense_content(a):
    num = 0
    den = 1
    for c in a:
        num = _gcd_int(num, abs(c.numerator))
        den = den * c.denominator // _gcd_int(den, c.denominator)
    return Fraction(num, den) if num else Fraction(0)


def _dense_sub(a, b):
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] -= x
    while out and not out[-1]:
        out.pop()
    return out


# ---------------------------------------------------------------------------
# generic helpers over "field = None (Q) or NumberField"
# ---------------------------------------------------------------------------


def nf(field: Optional[NumberField], value):
    """Embed a rational-ish value into the field."""
    if isinstance(value, NFElt):
        if field is None or value.field != field:
            raise DomainError("element of the wrong field")
        return value
    return Fraction(value) if field is None else field.from_rational(value)


def field_degree(field: Optional[NumberField]) -> int:
    return 1 if field is None else field.degree


def coerce_unipoly(field: Optional[NumberField], u: UniPoly) -> UniPoly:
    return UniPoly(u.var, [nf(field, c) if not isinstance(c, NFElt) else c
                           for c in u.coeffs])


def integral_minpoly(p: UniPoly):
    """(monic integer q, D) with q(D * root) = 0 for every root of p.

    Keeping minimal polynomials integer-monic stops denominator snowballing
    in element reductions; the field generator then stands for D times the
    original root.
    """
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // _gcd_int(den, c.denominator)
    ints = [c * den for c in p.coeffs]
    num = 0
    for c in ints:
        num = _gcd_int(num, abs(int(c)))
    ints = [int(c) // num for c in ints]
    n = len(ints) - 1
    an = ints[-1]
    if an < 0:
        ints = [-c for c in ints]
        an = -an
    out = [Fraction(ints[i] * an ** (n - 1 - i)) for i in range(n)]
    out.append(Fraction(1))
    return UniPoly(p.var, out), Fraction(an)


def coef_key(c) -> tuple:
    """Deterministic sort key for Fraction or NFElt coefficients."""
    if isinstance(c, NFElt):
        return (1,) + tuple((x.numerator, x.denominator) for x in c.coeffs)
    c = Fraction(c)
    return (0, (c.numerator, c.denominator))


# ---------------------------------------------------------------------------
# factorization over Q (sympy-backed) and rational roots
# ---------------------------------------------------------------------------

_SYMPY_X = sympy.Symbol("_sextics_x")


def factor_rational(u: UniPoly):
    """Irreducible monic factors of a rational UniPoly: [(factor, mult)].

    Deterministic order: by (degree, coefficient tuple).
    """
    if u.is_zero():
        raise DomainError("zero polynomial")
    if u.degree() == 0:
        return []
    den = 1
    for c in u.coeffs:
        den = den * c.denominator // _gcd_int(den, c.denominator)
    ints = [int(c * den) for c in u.coeffs]
    sp = sympy.Poly(list(reversed(ints)), _SYMPY_X, domain="QQ")
    _, factors = sp.factor_list()
    out = []
    for f, mult in factors:
        cs = [Fraction(c.p, c.q) for c in reversed(f.all_coeffs())]
        out.append((UniPoly(u.var, cs).monic(), int(mult)))
    out.sort(key=lambda fm: (fm[0].degree(),
                             tuple((c.numerator, c.denominator) for c in fm[0].coeffs)))
    return out


def _gcd_int(a, b):
    while b:
        a, b = b, a % b
    return a


def rational_roots(u: UniPoly):
    """All rational roots with multiplicities plus the root-free residual.

    Returns (sorted list of (Fraction, mult), residual UniPoly) with
    product of (var - root)^mult times residual equal to the input.
    """
    if u.is_zero():
        raise DomainError("zero polynomial")
    roots = []
    rest = u
    for f, mult in factor_rational(u):
        if f.degree() == 1:
            root = -f.coeffs[0] / f.coeffs[1]
            roots.append((root, mult))
            for _ in range(mult):
                rest = rest.divmod(UniPoly(u.var, [-root, Fraction(1)]))[0]
    roots.sort(key=lambda rm: rm[0])
    return roots, rest


def is_irreducible_rational(u: UniPoly) -> bool:
    fs = factor_rational(u)
    return len(fs) == 1 and fs[0][1] == 1 and fs[0][0].degree() == u.degree()


# ---------------------------------------------------------------------------
# factorization over an extension (Trager) and field extension / flattening
# ---------------------------------------------------------------------------


def _theta_expand(field: NumberField, u: UniPoly, yvar: str) -> Poly:
    """Bivariate rational Poly in (generator, yvar) representing u over K."""
    tn = field.name
    terms = {}
    for j, c in enumerate(u.coeffs):
        c = nf(field, c) if not isinstance(c, NFElt) else c
        for i, a in enumerate(c.coeffs):
            if a:
                terms[(i, j)] = a
    return Poly((tn, yvar), terms)


def factor_over_field(field: Optional[NumberField], u: UniPoly):
    """Irreducible monic factors over the field: [(factor, mult)]."""
    if field is None:
        return factor_rational(u)
    u = coerce_unipoly(field, u)
    if u.is_zero():
        raise DomainError("zero polynomial")
    if u.degree() == 0:
        return []
    out = []
    for sqf, mult in unipoly_squarefree_decomposition(u):
        for f in _trager_squarefree(field, sqf):
            out.append((f, mult))
    out.sort(key=lambda fm: (fm[0].degree(),
                             tuple(coef_key(c) for c in fm[0].coeffs)))
    return out


def _trager_squarefree(field: NumberField, g: UniPoly):
    """Irreducible factors over K of a monic squarefree g in K[y]."""
    if g.degree() == 1:
        return [g]
    theta = field.generator()
    mpoly = field.minpoly.to_poly((field.name,))
    s = 0
    attempts = 0
    while True:
        shift = theta * Fraction(-s)
        gs = g.shift(shift) if s else g
        norm_biv = _theta_expand(field, gs, g.var)
        norm = resultant(mpoly, norm_biv, field.name)
        nu = UniPoly.from_poly(norm) if not norm.is_constant() else UniPoly(
            g.var, [norm.constant_value()])
        if nu.var != g.var:
            nu = UniPoly(g.var, nu.coeffs)
        if unipoly_gcd(nu, nu.derivative()).degree() == 0:
            factors = []
            for h, _ in factor_rational(nu):
                hk = coerce_unipoly(field, h).shift(theta * Fraction(s))
                fk = unipoly_gcd(coerce_unipoly(field, hk), g)
                if fk.degree() > 0:
                    factors.append(fk.monic())
            total = sum(f.degree() for f in factors)
            if total == g.degree():
                return factors
        attempts += 1
        if attempts > 40:
            raise DomainError("Trager factorization failed for %s" % g)
        s = -s if s > 0 else -s + 1


def roots_in_field(field: Optional[NumberField], u: UniPoly):
    """Roots lying in the field itself: [(root, mult)], deterministic order."""
    out = []
    for f, mult in factor_over_field(field, u):
        if f.degree() == 1:
            root = -f.coeffs[0] / f.coeffs[1] if field is None else \
                (-f.coeffs[0]) / f.coeffs[1]
            out.append((root, mult))
    return out


_GEN_NAMES = "wvuzpq"


def extend_field(field: Optional[NumberField], q: UniPoly, cap: int = 0):
    """Flatten field(eta)/q(eta) to a primitive single-generator field.

    `q` must be irreducible over `field` with degree >= 2.  Returns
    (new_field, embed, eta_img) where `embed` maps old elements into the
    new field and `eta_img` is the image of the adjoined root.

    Raises TowerCapError when the absolute degree would exceed `cap` > 0.
    """
    rel = q.degree()
    total = field_degree(field) * rel
    if cap and total > cap:
        raise TowerCapError(
            "extension degree %d exceeds the tower cap %d" % (total, cap))
    if field is None:
        name = _GEN_NAMES[0]
        new = NumberField(q.monic(), name)

        def embed(c, _new=new):
            return _new.from_rational(c)

        return new, embed, new.generator()

    depth = _GEN_NAMES.index(field.name[0]) if field.name[0] in _GEN_NAMES else 0
    name = _GEN_NAMES[(depth + 1) % len(_GEN_NAMES)]
    q = coerce_unipoly(field, q.monic())
    theta = field.generator()
    mpoly = field.minpoly.to_poly((field.name,))
    zvar = "_z"
    s = 1
    attempts = 0
    while True:
        # gamma = eta + s*theta; M(z) = Res_theta(m(theta), q(z - s*theta))
        biv = _theta_expand(field, q, "_y")  # in (theta, _y)
        biv = biv.with_vars((field.name, "_y", zvar))
        zpoly = Poly.var(zvar, (field.name, "_y", zvar))
        tpoly = Poly.var(field.name, (field.name, "_y", zvar))
        shifted = biv.substitute({"_y": zpoly - tpoly.scale(s)})
        m3 = mpoly.with_vars((field.name, zvar))
        mm = m3.with_vars((field.name, zvar))
        res = resultant(mm, shifted.with_vars((field.name, zvar)), field.name)
        mu = UniPoly.from_poly(res)
        if mu.var != zvar:
            mu = UniPoly(zvar, mu.coeffs)
        if unipoly_gcd(mu, mu.derivative()).degree() == 0:
            mu_int, dscale = integral_minpoly(mu)
            new = NumberField(UniPoly("t", mu_int.coeffs), name)
            gamma = new.generator() * (1 / dscale)
            # theta image: unique common root of m(t) and q(gamma - s t)
            mt = coerce_unipoly(new, UniPoly("t", field.minpoly.coeffs))
            qt = _eval_biv_at(field, q, new, gamma, s)
            g = unipoly_gcd(mt, qt)
            if g.degree() != 1:
                attempts += 1
                s += 1
                continue
            theta_img = (-g.coeffs[0]) / g.coeffs[1]
            eta_img = gamma - theta_img * Fraction(s)

            def embed(c, _new=new, _theta=theta_img):
                if isinstance(c, NFElt):
                    acc = _new.from_rational(0)
                    for i, a in enumerate(c.coeffs):
                        if a:
                            acc = acc + _theta ** i * a
                    return acc
                return _new.from_rational(c)

            return new, embed, eta_img
        attempts += 1
        if attempts > 40:
            raise DomainError("no primitive element found for %s over %s"
                              % (q, field))
        s += 1


def _eval_biv_at(field: NumberField, q: UniPoly, new: NumberField,
                 gamma: NFElt, s: int) -> UniPoly:
    """q(gamma - s*t) as a UniPoly in t over `new`, where q is over `field`.

    Each coefficient of q is a polynomial in theta; theta becomes t.
    """
    tvar = "t"
    out = UniPoly(tvar, [])
    lin = UniPoly(tvar, [gamma, new.from_rational(-s)])  # gamma - s t
    ypow = UniPoly.const(tvar, new.from_rational(1))
    for j, c in enumerate(q.coeffs):
        c = c if isinstance(c, NFElt) else nf(field, c)
        cpoly = UniPoly(tvar, [new.from_rational(a) for a in c.coeffs])
        out = out + cpoly * ypow
        ypow = ypow * lin
    return out
