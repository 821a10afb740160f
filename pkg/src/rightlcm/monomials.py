"""The canonical-monomial *-algebra spanned by u_g s_p s_q* u_h*.

Monomials are stored in the canonical form where the right group
coordinate lies in the fixed transversal of G/theta_q(G) and the
semigroup coordinate p carries a trivial unit part; a distinguished Zero
absorbs products that vanish.  Multiplication is Wick rewriting: the
middle block s_q* u_x s_p is resolved through right_lcm and the double
factorization solver, adjunction swaps the two halves.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .dynamics import DynamicalSystem
from .errors import ContractError, StructuralError
from .groups import GrpElement
from .scalars import ONE, RationalComplex
from .semigroups import DISJOINT, SgElement


@dataclass(frozen=True)
class Monomial:
    system: Optional[DynamicalSystem]
    data: Optional[Tuple[GrpElement, SgElement, SgElement, GrpElement]]

    @property
    def is_zero(self) -> bool:
        return self.data is None

    def __repr__(self):
        if self.is_zero:
            return "0"
        g, p, q, h = self.data
        return f"[{g!r}|{p!r}|{q!r}|{h!r}]"


ZERO = Monomial(None, None)


def canonicalize(system, g, p, q, h) -> Monomial:
    """Canonical form of u_g s_p s_q* u_h*: normalize the unit part of p
    by the twist (p, q) -> (px, qx), then pull the theta_q(G)-part of h
    across by (g, h) -> (g*theta_p(m), h*theta_q(m))."""
    P, G = system.semigroup, system.group
    P.check_member(p)
    P.check_member(q)
    G.check_member(g)
    G.check_member(h)
    p_norm, x = P.unit_normalize(p)
    if x != P.identity:
        p = p_norm
        q = P.compose(q, x)
    t, l = system.canon_rep(q, h)
    if l != G.identity:
        g = G.op(g, system.apply_endo(p, G.inv(l)))
    return Monomial(system, (g, p, q, t))


def monomial(system, g, p, q, h) -> Monomial:
    return canonicalize(system, g, p, q, h)


def identity_monomial(system) -> Monomial:
    one_g = system.group.identity
    one_p = system.semigroup.identity
    return Monomial(system, (one_g, one_p, one_p, one_g))


def projection(system, g, p) -> Monomial:
    """e_(g,p) = u_g s_p s_p* u_g*, canonicalized."""
    return canonicalize(system, g, p, p, g)


def is_projection(m: Monomial) -> bool:
    if m.is_zero:
        return False
    g, p, q, h = m.data
    return p == q and g == h


def _check_same_system(m1: Monomial, m2: Monomial):
    if m1.system is not m2.system:
        raise StructuralError("monomials from different systems")


def mult(m1: Monomial, m2: Monomial, solver_variant: int = 0) -> Monomial:
    if m1.is_zero or m2.is_zero:
        return ZERO
    _check_same_system(m1, m2)
    system = m1.system
    P, G = system.semigroup, system.group
    g1, p1, q1, h1 = m1.data
    g2, p2, q2, h2 = m2.data
    meet = P.right_lcm(q1, p2)
    if meet is DISJOINT:
        return ZERO
    x = G.op(G.inv(h1), g2)
    sol = system.solve_double(q1, p2, x, variant=solver_variant)
    if sol is None:
        return ZERO
    k, l = sol
    return canonicalize(
        system,
        G.op(g1, system.apply_endo(p1, k)),
        P.compose(p1, meet.p_comp),
        P.compose(q2, meet.q_comp),
        G.op(h2, system.apply_endo(q2, l)),
    )


def adjoint(m: Monomial) -> Monomial:
    if m.is_zero:
        return ZERO
    g, p, q, h = m.data
    return canonicalize(m.system, h, q, p, g)


def projection_product(e1: Monomial, e2: Monomial) -> Monomial:
    """Product of projections e_(g,p) e_(h,q) by the dedicated coset
    formula; must agree with mult and with the ideal intersection."""
    for e in (e1, e2):
        if not is_projection(e):
            raise ContractError(f"{e!r} is not a projection monomial")
    _check_same_system(e1, e2)
    system = e1.system
    P, G = system.semigroup, system.group
    g, p = e1.data[0], e1.data[1]
    h, q = e2.data[0], e2.data[1]
    meet = P.right_lcm(p, q)
    if meet is DISJOINT:
        return ZERO
    sol = system.solve_double(p, q, G.op(G.inv(g), h))
    if sol is None:
        return ZERO
    c = G.op(g, system.apply_endo(p, sol[0]))
    return canonicalize(system, c, meet.r, meet.r, c)


# -- formal sums ----------------------------------------------------------------


class AlgebraElement:
    """Finite formal sum of canonical monomials with exact
    rational-complex coefficients."""

    __slots__ = ("system", "terms")

    def __init__(self, system, terms=None):
        self.system = system
        self.terms = {}
        if terms:
            for m, c in terms.items():
                self._accumulate(m, c)

    def _accumulate(self, m: Monomial, c: RationalComplex):
        if m.is_zero or c.is_zero():
            return
        new = self.terms.get(m, None)
        new = c if new is None else new + c
        if new.is_zero():
            self.terms.pop(m, None)
        else:
            self.terms[m] = new

    @staticmethod
    def zero(system) -> "AlgebraElement":
        return AlgebraElement(system)

    @staticmethod
    def of(m: Monomial, coeff: RationalComplex = ONE) -> "AlgebraElement":
        return AlgebraElement(m.system, {m: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraElement)
            and self.system is other.system
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c!r}*{m!r}" for m, c in self.terms.items())


def algebra_add(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    if a.system is not b.system:
        raise StructuralError("sums from different systems")
    out = AlgebraElement(a.system, dict(a.terms))
    for m, c in b.terms.items():
        out._accumulate(m, c)
    return out


def algebra_scale(c: RationalComplex, a: AlgebraElement) -> AlgebraElement:
    out = AlgebraElement(a.system)
    for m, x in a.terms.items():
        out._accumulate(m, c * x)
    return out


def algebra_mult(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    if a.system is not b.system:
        raise StructuralError("sums from different systems")
    out = AlgebraElement(a.system)
    for m1, c1 in a.terms.items():
        for m2, c2 in b.terms.items():
            out._accumulate(mult(m1, m2), c1 * c2)
    return out


def algebra_adjoint(a: AlgebraElement) -> AlgebraElement:
    out = AlgebraElement(a.system)
    for m, c in a.terms.items():
        out._accumulate(adjoint(m), c.conjugate())
    return out


# -- serialization ---------------------------------------------------------------


def monomial_to_json(m: Monomial):
    if m.is_zero:
        return "0"
    g, p, q, h = m.data
    system = m.system
    return {
        "g": system.group.element_to_json(g),
        "p": system.semigroup.element_to_json(p),
        "q": system.semigroup.element_to_json(q),
        "h": system.group.element_to_json(h),
    }


def monomial_from_json(system, data) -> Monomial:
    if data == "0":
        return ZERO
    return canonicalize(
        system,
        system.group.element_from_json(data["g"]),
        system.semigroup.element_from_json(data["p"]),
        system.semigroup.element_from_json(data["q"]),
        system.group.element_from_json(data["h"]),
    )


def algebra_to_json(a: AlgebraElement):
    items = sorted(
        ((monomial_to_json(m), c.to_json()) for m, c in a.terms.items()),
        key=lambda mc: str(mc[0]),
    )
    return [[c, m] for m, c in items]


def algebra_from_json(system, data) -> AlgebraElement:
    out = AlgebraElement(system)
    for c, m in data:
        out._accumulate(monomial_from_json(system, m), RationalComplex.from_json(c))
    return out
