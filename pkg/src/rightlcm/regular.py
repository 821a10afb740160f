"""Partial-injection model of the left regular representation.

A monomial u_g s_p s_q* u_h* acts on S = G x| P by (h,q)x -> (g,p)x, a
partial injection with principal-ideal domain.  These maps compose
symbolically (the domain of a composite is again principal, via the ideal
intersection) and are compared pointwise on finite windows, which is the
package's brute-force oracle for the monomial calculus.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import StructuralError
from .monomials import Monomial
from .reports import Report
from .sampling import SampleSpec
from .semidirect import EMPTY_IDEAL, SdElement, SemidirectProduct


@dataclass(frozen=True)
class PartialInjection:
    """Maps dom * x -> out * x; empty when both fields are None."""

    sd: SemidirectProduct
    out: Optional[SdElement]
    dom: Optional[SdElement]

    @property
    def is_empty(self) -> bool:
        return self.out is None

    def __repr__(self):
        if self.is_empty:
            return "PartialInjection(empty)"
        return f"PartialInjection({self.dom!r}x -> {self.out!r}x)"


def empty_map(sd: SemidirectProduct) -> PartialInjection:
    return PartialInjection(sd, None, None)


def identity_map(sd: SemidirectProduct) -> PartialInjection:
    return PartialInjection(sd, sd.identity, sd.identity)


def translation(sd: SemidirectProduct, a: SdElement) -> PartialInjection:
    """V_a: the total injection s -> a*s."""
    return PartialInjection(sd, a, sd.identity)


def translation_adjoint(sd: SemidirectProduct, a: SdElement) -> PartialInjection:
    """V_a*: defined on aS by a*s -> s."""
    return PartialInjection(sd, sd.identity, a)


def ideal_indicator(sd: SemidirectProduct, a: Optional[SdElement]) -> PartialInjection:
    """e_X for X = X_a (or the empty ideal for a = None)."""
    if a is None:
        return empty_map(sd)
    return PartialInjection(sd, a, a)


def as_partial_map(sd: SemidirectProduct, m: Monomial) -> PartialInjection:
    if m.is_zero:
        return empty_map(sd)
    if m.system is not sd.system:
        raise StructuralError("monomial belongs to a different system")
    g, p, q, h = m.data
    return PartialInjection(sd, sd.element(g, p), sd.element(h, q))


def evaluate(f: PartialInjection, s: SdElement) -> Optional[SdElement]:
    if f.is_empty:
        return None
    x = f.sd.divides(f.dom, s)
    if x is None:
        return None
    return f.sd.compose(f.out, x)


def compose(f: PartialInjection, g: PartialInjection) -> PartialInjection:
    """Set-theoretic composite f(g(.)); the domain is computed through the
    constructible-ideal intersection."""
    if f.sd is not g.sd:
        raise StructuralError("maps over different systems")
    sd = f.sd
    if f.is_empty or g.is_empty:
        return empty_map(sd)
    inter = sd.ideal_intersect(g.out, f.dom)
    if inter is EMPTY_IDEAL:
        return empty_map(sd)
    c = inter.rep
    w = sd.divides(g.out, c)
    v = sd.divides(f.dom, c)
    if w is None or v is None:
        raise StructuralError("ideal intersection produced a non-member")
    return PartialInjection(sd, sd.compose(f.out, v), sd.compose(g.dom, w))


def adjoint_map(f: PartialInjection) -> PartialInjection:
    if f.is_empty:
        return f
    return PartialInjection(f.sd, f.dom, f.out)


def equal_on_window(f: PartialInjection, g: PartialInjection, window):
    """Pointwise comparison; returns (equal, counterexample)."""
    for s in window:
        fs = evaluate(f, s)
        gs = evaluate(g, s)
        if fs != gs:
            return False, {"point": repr(s), "left": repr(fs), "right": repr(gs)}
    return True, None


def is_injective_on(f: PartialInjection, window):
    seen = {}
    for s in window:
        fs = evaluate(f, s)
        if fs is None:
            continue
        if fs in seen and seen[fs] != s:
            return False, {"s": repr(seen[fs]), "t": repr(s), "image": repr(fs)}
        seen[fs] = s
    return True, None


def check_li_relations(sd: SemidirectProduct, spec: SampleSpec = SampleSpec()) -> Report:
    """Exact verification of the defining isometry/projection relations on
    a finite window: products of translations, conjugation of ideal
    indicators, the empty/full ideals, and indicator products matching
    ideal intersections."""
    report = Report("li-relations", {"system": sd.name, **spec.to_json()})
    window = sd.window(spec)
    rng = spec.rng()
    gens = [
        sd.element(g, p)
        for g in sd.group.sample(max(3, spec.g_count // 10))
        for p in sd.semigroup.enumerate_ball(max(1, spec.p_radius - 1))
    ]
    picks = [rng.choice(gens) for _ in range(min(spec.pair_count, 12))]

    ok, wit, inputs = True, None, None
    for a in picks:
        for b in picks:
            lhs = compose(translation(sd, a), translation(sd, b))
            rhs = translation(sd, sd.compose(a, b))
            eq, w = equal_on_window(lhs, rhs, window)
            if not eq:
                ok, wit, inputs = False, w, {"a": repr(a), "b": repr(b)}
                break
        if not ok:
            break
    report.add("L1-multiplicative", ok, wit, inputs)

    ok, wit, inputs = True, None, None
    for a in picks:
        for x in picks:
            lhs = compose(
                compose(translation(sd, a), ideal_indicator(sd, x)),
                translation_adjoint(sd, a),
            )
            rhs = ideal_indicator(sd, sd.compose(a, x))
            eq, w = equal_on_window(lhs, rhs, window)
            if not eq:
                ok, wit, inputs = False, w, {"a": repr(a), "x": repr(x)}
                break
        if not ok:
            break
    report.add("L2-conjugation", ok, wit, inputs)

    empty_ok = all(evaluate(empty_map(sd), s) is None for s in window)
    full_ok = all(evaluate(identity_map(sd), s) == s for s in window)
    report.add("L3-empty-and-full", empty_ok and full_ok)

    ok, wit, inputs = True, None, None
    for a in picks:
        for b in picks:
            lhs = compose(ideal_indicator(sd, a), ideal_indicator(sd, b))
            inter = sd.ideal_intersect(a, b)
            rhs = (
                empty_map(sd)
                if inter is EMPTY_IDEAL
                else ideal_indicator(sd, inter.rep)
            )
            eq, w = equal_on_window(lhs, rhs, window)
            if not eq:
                ok, wit, inputs = False, w, {"a": repr(a), "b": repr(b)}
                break
        if not ok:
            break
    report.add("L4-indicator-products", ok, wit, inputs)

    ok, wit, inputs = True, None, None
    for a in picks:
        lhs = compose(translation_adjoint(sd, a), translation(sd, a))
        eq, w = equal_on_window(lhs, identity_map(sd), window)
        if not eq:
            ok, wit, inputs = False, w, {"a": repr(a)}
            break
    report.add("isometry", ok, wit, inputs)

    ok, wit, inputs = True, None, None
    for a in picks:
        inj, w = is_injective_on(translation(sd, a), window)
        if not inj:
            ok, wit, inputs = False, w, {"a": repr(a)}
            break
    report.add("injectivity-on-window", ok, wit, inputs)
    return report
