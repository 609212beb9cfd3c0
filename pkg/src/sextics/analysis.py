"""End-to-end curve analysis: the pipeline behind the CLI and the verifier.

Given a sextic (or a torus pair), work in an affine chart containing every
singular point, classify each one, assemble the configuration, decompose
into components and compute their global invariants, and split inner/outer
when a pair is available.  All output orderings are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .components import ComponentDecomposition, decompose
from .globalinv import (
    Configuration,
    DefectTable,
    ImpossibleCurveError,
    assemble_configuration,
    class_degree,
    delta_star,
    flex_count,
    genus,
    good_affine_chart,
)
from .localsing import (
    NotSquarefreeError,
    analyze_point,
    singular_points,
)
from .poly import DomainError, Poly, is_squarefree
from .torus import InnerOuterSplit, TorusPair, inner_outer_split, \
    verify_inner_correspondence

__all__ = ["CurveAnalysis", "ComponentReport", "analyze_curve"]

XY = ("x", "y")


@dataclass(frozen=True)
class ComponentReport:
    poly: Poly
    degree: int
    sings: tuple             # LocalSingularity of the component itself
    genus: Optional[int]
    class_degree: Optional[int]
    delta_star: int
    flexes: Optional[int]
    notes: tuple


@dataclass(frozen=True)
class CurveAnalysis:
    f: Poly                       # curve in the working chart
    chart: tuple                  # (alpha, beta); (0, 0) = original chart
    pair: Optional[TorusPair]
    sings: tuple                  # LocalSingularity list, sorted
    config: Configuration
    decomposition: ComponentDecomposition
    components: tuple             # ComponentReport list
    split: Optional[InnerOuterSplit]
    star_report: Optional[tuple]
    delta_star_total: int
    delta_star_ceiling: int
    notes: tuple

    def degrees(self) -> tuple:
        degs = list(self.decomposition.degrees())
        if not self.decomposition.is_complete():
            degs.append(self.decomposition.residual.degree())
        return tuple(sorted(degs))


def analyze_curve(f: Optional[Poly] = None, pair: Optional[TorusPair] = None,
                  hints: Sequence[Poly] = (), defects: Optional[DefectTable] = None,
                  tower_cap: int = 12) -> CurveAnalysis:
    """Run the full pipeline; exactly one of `f`, `pair` must be given."""
    notes = []
    if (f is None) == (pair is None):
        raise DomainError("provide exactly one of f or (f2, f3)")
    if pair is not None:
        from .poly import poly_gcd
        from .torus import DegenerateTorusError
        shared = poly_gcd(pair.f2, pair.f3)
        if shared.degree() > 0:
            raise DegenerateTorusError(
                "conic and cubic share the component %s" % shared)
        f = pair.expand()
    f = f.with_vars(XY)
    if f.is_zero() or f.is_constant():
        raise DomainError("not a curve")
    if not is_squarefree(f):
        raise NotSquarefreeError("curve is not reduced: %s" % f)

    affine_sings = singular_points(f, tower_cap)
    chart, transform = good_affine_chart(f, extra_points=affine_sings)
    if chart != (0, 0):
        notes.append("chart rotated by %r to keep all singular points affine"
                     % (chart,))
        f = transform(f, None).primitive()
        if pair is not None:
            pair = TorusPair(transform(pair.f2, 2), transform(pair.f3, 3))
        hints = [transform(h, None).primitive() for h in hints]
        affine_sings = singular_points(f, tower_cap)

    sings = tuple(analyze_point(f, p, tower_cap) for p in affine_sings)

    split = None
    star_report = None
    inner_keys = None
    if pair is not None:
        split = inner_outer_split(pair, affine_sings)
        inner_keys = {p.sort_key() for p, _i in split.inner}
        star_report = tuple(verify_inner_correspondence(pair, split, sings))
    config = assemble_configuration(sings, inner_keys)

    decomp = decompose(f, hints, pair)
    components = []
    per_component_proper = []
    parts = [(comp, cdeg) for comp, cdeg, mult in decomp.factors
             for _ in range(mult)]
    if not decomp.is_complete():
        rdeg = decomp.residual.degree()
        if 1 <= rdeg <= 5:
            # no rational line or conic divides it and a rational quintic or
            # smaller cannot hide a cubic x conic split, so it is a single
            # Q-irreducible component
            parts.append((decomp.residual.primitive(), rdeg))
            notes.append("residual of degree %d taken as one component"
                         " (no rational line or conic factor)" % rdeg)
        elif rdeg == 6 and not affine_sings:
            # a smooth projective plane curve is irreducible (any two
            # components would intersect); all singular points are affine
            # in the working chart
            parts.append((decomp.residual.primitive(), rdeg))
            notes.append("smooth sextic: irreducible")
        else:
            notes.append("decomposition incomplete: residual of degree %d"
                         % rdeg)
    for comp, cdeg in parts:
        report = _component_report(comp, cdeg, defects, tower_cap,
                                   affine_sings)
        components.append(report)
        per_component_proper.append(report.sings)
    degrees_for_ceiling = [d for _c, d in parts]
    if not decomp.is_complete() and not (1 <= decomp.residual.degree() <= 5):
        degrees_for_ceiling.append(decomp.residual.degree())
    dstar, ceiling, ok = delta_star(per_component_proper, degrees_for_ceiling)
    certified = all(c.genus is not None for c in components)
    if not certified:
        notes.append("a component is geometrically reducible (negative"
                     " genus); the Corollary-1 ceiling is not applicable to"
                     " the rational degree multiset")
    elif decomp.is_complete() and len(degrees_for_ceiling) > 1 and not ok:
        notes.append("delta* %d exceeds the Corollary-1 ceiling %d"
                     % (dstar, ceiling))
    return CurveAnalysis(f, chart, pair, sings, config, decomp,
                         tuple(components), split, star_report, dstar,
                         ceiling, tuple(notes))


def _component_report(comp: Poly, cdeg: int, defects, tower_cap,
                      candidates=None) -> ComponentReport:
    notes = []
    csings: tuple = ()
    g = None
    nstar = None
    flexes = None
    try:
        pts = _component_singular_points(comp, cdeg, tower_cap, candidates)
        csings = tuple(analyze_point(comp, p, tower_cap) for p in pts)
    except DomainError as err:
        notes.append("singular locus: %s" % err)
    try:
        g = genus(cdeg, csings)
    except ImpossibleCurveError as err:
        notes.append(str(err))
    if cdeg >= 2:
        try:
            nstar = class_degree(cdeg, csings)
        except ImpossibleCurveError as err:
            notes.append(str(err))
    if defects is not None:
        try:
            flexes = flex_count(cdeg, csings, defects)
        except DomainError as err:
            notes.append("flex count: %s" % err)
    dstar = sum(ls.delta * ls.cluster_degree for ls in csings)
    return ComponentReport(comp, cdeg, csings, g, nstar, dstar, flexes,
                           tuple(notes))


def _component_singular_points(comp: Poly, cdeg: int, tower_cap,
                               candidates):
    """Singular points of one component.

    They are always among the singular points of the whole curve, so reuse
    those when available instead of re-running the elimination.
    """
    from .localsing import multiplicity, point_on_curve
    if cdeg < 2:
        return []
    if candidates is None:
        return singular_points(comp, tower_cap)
    out = []
    for p in candidates:
        if point_on_curve(comp, p) and multiplicity(comp, p) >= 2:
            out.append(p)
    return out
