"""Fibres over the semigroup, rank-one operators and the Fock action.

Each fibre M_p is the group algebra tagged with p; the symbol g stands
for pi_p(delta_g).  Inner products go through the transfer operator
(<pi_p(delta_g), pi_p(delta_h)> is delta at the preimage of g^-1 h when it
exists), multiplication follows pi_p(delta_g) pi_q(delta_h) =
pi_pq(delta_{g theta_p(h)}), and operators are only ever applied to
vectors, never materialized, so infinite-index fibres cost nothing extra.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

from .dynamics import DynamicalSystem
from .errors import ContractError, StructuralError
from .groups import GrpElement
from .reports import Report
from .sampling import SampleSpec
from .scalars import ONE, RationalComplex
from .semigroups import DISJOINT, SgElement


class GroupAlgebraElement:
    """Finite formal sum over the group with exact coefficients."""

    __slots__ = ("group", "terms")

    def __init__(self, group, terms=None):
        self.group = group
        self.terms = {}
        if terms:
            for g, c in terms.items():
                self.accumulate(g, c)

    def accumulate(self, g: GrpElement, c: RationalComplex):
        if c.is_zero():
            return
        cur = self.terms.get(g)
        new = c if cur is None else cur + c
        if new.is_zero():
            self.terms.pop(g, None)
        else:
            self.terms[g] = new

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, GroupAlgebraElement)
            and self.group is other.group
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c!r}*d[{g!r}]" for g, c in self.terms.items())


class FibreVector:
    """Element of the fibre M_p: formal sum of pi_p(delta_g)."""

    __slots__ = ("system", "fibre", "terms")

    def __init__(self, system, fibre: SgElement, terms=None):
        system.semigroup.check_member(fibre)
        self.system = system
        self.fibre = fibre
        self.terms = {}
        if terms:
            for g, c in terms.items():
                self.accumulate(g, c)

    def accumulate(self, g: GrpElement, c: RationalComplex):
        if c.is_zero():
            return
        cur = self.terms.get(g)
        new = c if cur is None else cur + c
        if new.is_zero():
            self.terms.pop(g, None)
        else:
            self.terms[g] = new

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, FibreVector)
            and self.system is other.system
            and self.fibre == other.fibre
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.fibre, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return f"0@{self.fibre!r}"
        body = " + ".join(f"{c!r}*pi[{g!r}]" for g, c in self.terms.items())
        return f"({body})@{self.fibre!r}"


@dataclass(frozen=True)
class RankOne:
    """Theta_{xi,eta} = xi <eta, .> on the common fibre."""

    xi: FibreVector
    eta: FibreVector

    def __post_init__(self):
        if self.xi.fibre != self.eta.fibre or self.xi.system is not self.eta.system:
            raise StructuralError("rank-one legs must share a fibre")

    @property
    def fibre(self):
        return self.xi.fibre


class FockVector:
    """Finitely supported assignment fibre -> FibreVector."""

    __slots__ = ("system", "fibres")

    def __init__(self, system, fibres=None):
        self.system = system
        self.fibres = {}
        if fibres:
            for p, v in fibres.items():
                self.accumulate_vector(p, v)

    def accumulate(self, p: SgElement, g: GrpElement, c: RationalComplex):
        vec = self.fibres.get(p)
        if vec is None:
            vec = FibreVector(self.system, p)
            self.fibres[p] = vec
        vec.accumulate(g, c)
        if vec.is_zero():
            del self.fibres[p]

    def accumulate_vector(self, p: SgElement, v: FibreVector):
        for g, c in v.terms.items():
            self.accumulate(p, g, c)

    def is_zero(self):
        return not self.fibres

    def __eq__(self, other):
        return (
            isinstance(other, FockVector)
            and self.system is other.system
            and self.fibres == other.fibres
        )

    def __repr__(self):
        if not self.fibres:
            return "0_F"
        return " (+) ".join(repr(v) for v in self.fibres.values())


class ProductSystem:
    """Operations of the product system attached to a dynamical system."""

    def __init__(self, system: DynamicalSystem):
        self.system = system
        self.group = system.group
        self.semigroup = system.semigroup
        self.name = f"M({system.name})"

    # -- constructors -----------------------------------------------------------

    def basis_vector(self, p: SgElement, g: GrpElement, coeff=ONE) -> FibreVector:
        self.group.check_member(g)
        return FibreVector(self.system, p, {g: coeff})

    def zero_vector(self, p: SgElement) -> FibreVector:
        return FibreVector(self.system, p)

    def group_algebra(self, terms=None) -> GroupAlgebraElement:
        return GroupAlgebraElement(self.group, terms)

    def _check_vec(self, xi: FibreVector):
        if not isinstance(xi, FibreVector) or xi.system is not self.system:
            raise StructuralError("fibre vector from a different system")

    # -- bimodule structure -------------------------------------------------------

    def inner_product(self, xi: FibreVector, eta: FibreVector) -> GroupAlgebraElement:
        """<xi, eta>_p through the transfer operator; conjugate-linear in
        the first argument."""
        self._check_vec(xi)
        self._check_vec(eta)
        if xi.fibre != eta.fibre:
            raise StructuralError("inner product needs a common fibre")
        p = xi.fibre
        out = GroupAlgebraElement(self.group)
        for g, c in xi.terms.items():
            for h, d in eta.terms.items():
                pre = self.system.preimage(p, self.group.op(self.group.inv(g), h))
                if pre is not None:
                    out.accumulate(pre, c.conjugate() * d)
        return out

    def fibre_mult(self, xi: FibreVector, eta: FibreVector) -> FibreVector:
        """M_p x M_q -> M_pq on basis symbols: g, h -> g * theta_p(h)."""
        self._check_vec(xi)
        self._check_vec(eta)
        p, q = xi.fibre, eta.fibre
        out = FibreVector(self.system, self.semigroup.compose(p, q))
        for g, c in xi.terms.items():
            for h, d in eta.terms.items():
                out.accumulate(self.group.op(g, self.system.apply_endo(p, h)), c * d)
        return out

    def right_action(self, xi: FibreVector, a: GroupAlgebraElement) -> FibreVector:
        """xi . a with pi_p(delta_g) . delta_k = pi_p(delta_{g theta_p(k)})."""
        self._check_vec(xi)
        p = xi.fibre
        out = FibreVector(self.system, p)
        for g, c in xi.terms.items():
            for k, d in a.terms.items():
                out.accumulate(self.group.op(g, self.system.apply_endo(p, k)), c * d)
        return out

    def left_action(self, a: GroupAlgebraElement, xi: FibreVector) -> FibreVector:
        self._check_vec(xi)
        out = FibreVector(self.system, xi.fibre)
        for g, c in xi.terms.items():
            for k, d in a.terms.items():
                out.accumulate(self.group.op(k, g), d * c)
        return out

    def left_action_compact(self, p: SgElement) -> bool:
        """Whether the left action on M_p lands in the generalized
        compacts, i.e. whether the coset index of theta_p is finite."""
        return self.system.coset_index(p) is not None

    def transversal_compose(self, p: SgElement, q: SgElement) -> Iterator[GrpElement]:
        """The composed transversal {t * theta_p(t')} of G/theta_pq(G),
        enumerated diagonally so infinite factors interleave."""
        tp_iter = self.system.transversal(p)
        tq_iter = self.system.transversal(q)
        tp_cache: list = []
        tq_cache: list = []

        def fetch(cache, it, i):
            while len(cache) <= i:
                try:
                    cache.append(next(it))
                except StopIteration:
                    return None
            return cache[i]

        stage = 0
        while True:
            emitted = False
            for i in range(stage + 1):
                j = stage - i
                t = fetch(tp_cache, tp_iter, i)
                u = fetch(tq_cache, tq_iter, j)
                if t is None or u is None:
                    continue
                emitted = True
                yield self.group.op(t, self.system.apply_endo(p, u))
            if not emitted and stage > len(tp_cache) + len(tq_cache):
                return
            stage += 1

    # -- rank-one operators and iota maps ------------------------------------------

    def rank_one(self, xi: FibreVector, eta: FibreVector) -> RankOne:
        return RankOne(xi, eta)

    def basis_rank_one(self, p: SgElement, g1: GrpElement, g2: GrpElement) -> RankOne:
        return RankOne(self.basis_vector(p, g1), self.basis_vector(p, g2))

    def coset_projection(self, g: GrpElement, p: SgElement) -> RankOne:
        """The generalized rank-one projection onto the coset of g."""
        return self.basis_rank_one(p, g, g)

    def rank_one_apply(self, T: RankOne, mu: FibreVector) -> FibreVector:
        self._check_vec(mu)
        if T.fibre != mu.fibre:
            raise StructuralError("rank-one and vector fibres differ")
        return self.right_action(T.xi, self.inner_product(T.eta, mu))

    def iota_apply(self, p: SgElement, r: SgElement, T: RankOne, mu: FibreVector) -> FibreVector:
        """Apply iota_p^r(T) to mu in M_r: on basis symbols the action is
        s -> chi_{g2 theta_p(G)}(s) * g1 g2^-1 s, extended linearly; the
        zero operator when r is not in pP."""
        self._check_vec(mu)
        if T.fibre != p:
            raise StructuralError("operator does not live at fibre p")
        if mu.fibre != r:
            raise StructuralError("vector does not live at fibre r")
        out = FibreVector(self.system, r)
        if self.semigroup.divides(p, r) is None:
            return out
        for g1, c1 in T.xi.terms.items():
            for g2, c2 in T.eta.terms.items():
                weight = c1 * c2.conjugate()
                shift = self.group.op(g1, self.group.inv(g2))
                for s, cs in mu.terms.items():
                    if self.system.in_image(p, self.group.op(self.group.inv(g2), s)):
                        out.accumulate(self.group.op(shift, s), weight * cs)
        return out

    def compact_align_product(
        self, p: SgElement, q: SgElement, T_p: RankOne, T_q: RankOne
    ) -> Optional[RankOne]:
        """iota_p^r(T_p) iota_q^r(T_q) for basis rank-ones: a basis
        rank-one at the right-LCM fibre, or None for the zero operator."""
        g1, g2 = _basis_legs(T_p, p)
        h1, h2 = _basis_legs(T_q, q)
        meet = self.semigroup.right_lcm(p, q)
        if meet is DISJOINT:
            return None
        sol = self.system.solve_double(p, q, self.group.op(self.group.inv(g2), h1))
        if sol is None:
            return None
        k, l = sol
        return self.basis_rank_one(
            meet.r,
            self.group.op(g1, self.system.apply_endo(p, k)),
            self.group.op(h2, self.system.apply_endo(q, l)),
        )

    # -- Fock representation ---------------------------------------------------------

    def vacuum(self) -> FockVector:
        return self.fock_basis(self.semigroup.identity, self.group.identity)

    def fock_basis(self, w: SgElement, x: GrpElement) -> FockVector:
        v = FockVector(self.system)
        v.accumulate(w, x, ONE)
        return v

    def fock_create(self, xi: FibreVector, v: FockVector) -> FockVector:
        """psi_F(xi): place xi * eta_w at index p*w."""
        self._check_vec(xi)
        p = xi.fibre
        out = FockVector(self.system)
        for w, eta in v.fibres.items():
            out.accumulate_vector(
                self.semigroup.compose(p, w), self.fibre_mult(xi, eta)
            )
        return out

    def fock_annihilate(self, xi: FibreVector, v: FockVector) -> FockVector:
        """psi_F(xi)*: basis vectors map to basis vectors or vanish;
        conjugate-linear in xi."""
        self._check_vec(xi)
        p = xi.fibre
        out = FockVector(self.system)
        for w, eta in v.fibres.items():
            w_quot = self.semigroup.divides(p, w)
            if w_quot is None:
                continue
            for g, a in xi.terms.items():
                for x, c in eta.terms.items():
                    pre = self.system.preimage(p, self.group.op(self.group.inv(g), x))
                    if pre is not None:
                        out.accumulate(w_quot, pre, a.conjugate() * c)
        return out

    def fock_group_unitary(self, g: GrpElement, v: FockVector) -> FockVector:
        """U_g: the diagonal left action of delta_g."""
        a = self.group_algebra({g: ONE})
        out = FockVector(self.system)
        for w, eta in v.fibres.items():
            out.accumulate_vector(w, self.left_action(a, eta))
        return out

    def fock_isometry(self, p: SgElement, v: FockVector) -> FockVector:
        """S_p = psi_F(pi_p(delta_1))."""
        return self.fock_create(self.basis_vector(p, self.group.identity), v)

    def fock_isometry_adjoint(self, p: SgElement, v: FockVector) -> FockVector:
        return self.fock_annihilate(self.basis_vector(p, self.group.identity), v)

    def fock_coset_projection(self, g: GrpElement, p: SgElement, v: FockVector) -> FockVector:
        """psi^(p)(coset projection of (g,p)) = creation o annihilation."""
        xi = self.basis_vector(p, g)
        return self.fock_create(xi, self.fock_annihilate(xi, v))

    def fock_generator_projection(self, g: GrpElement, p: SgElement, v: FockVector) -> FockVector:
        """E_(g,p) = U_g S_p S_p* U_g* built from the generators."""
        step = self.fock_group_unitary(self.group.inv(g), v)
        step = self.fock_isometry_adjoint(p, step)
        step = self.fock_isometry(p, step)
        return self.fock_group_unitary(g, step)

    # -- sampled verifiers --------------------------------------------------------------

    def _sample_fock_basis(self, spec: SampleSpec, rng):
        ws = self.semigroup.enumerate_ball(spec.p_radius)
        xs = self.group.sample(spec.g_count)
        picks = []
        for _ in range(spec.vector_count):
            picks.append(self.fock_basis(rng.choice(ws), rng.choice(xs)))
        picks.append(self.vacuum())
        return picks

    def check_nica_covariance(self, spec: SampleSpec = SampleSpec()) -> Report:
        """Both sides of the covariance identity for coset projections,
        applied to sampled Fock basis vectors: the product of
        psi^(p), psi^(q) images must be the psi^(r) image at the
        right-LCM fibre, or vanish."""
        report = Report("nica-covariance", {"system": self.name, **spec.to_json()})
        rng = spec.rng()
        ps = self.semigroup.enumerate_ball(spec.p_radius)
        gs = self.group.sample(spec.g_count)
        vectors = self._sample_fock_basis(spec, rng)
        ok, wit, inputs = True, None, None
        checked = 0
        for _ in range(spec.pair_count):
            g, h = rng.choice(gs), rng.choice(gs)
            p, q = rng.choice(ps), rng.choice(ps)
            meet = self.semigroup.right_lcm(p, q)
            if meet is DISJOINT:
                rhs_data = None
            else:
                sol = self.system.solve_double(
                    p, q, self.group.op(self.group.inv(g), h)
                )
                if sol is None:
                    rhs_data = None
                else:
                    rhs_data = (
                        self.group.op(g, self.system.apply_endo(p, sol[0])),
                        meet.r,
                    )
            for v in vectors:
                lhs = self.fock_coset_projection(
                    g, p, self.fock_coset_projection(h, q, v)
                )
                rhs = (
                    FockVector(self.system)
                    if rhs_data is None
                    else self.fock_coset_projection(rhs_data[0], rhs_data[1], v)
                )
                checked += 1
                if lhs != rhs:
                    ok, wit, inputs = (
                        False,
                        {"vector": repr(v), "left": repr(lhs), "right": repr(rhs)},
                        {"g": repr(g), "p": repr(p), "h": repr(h), "q": repr(q)},
                    )
                    break
            if not ok:
                break
        report.add("nica-covariance", ok, wit, inputs, details={"checked": checked})
        return report

    def check_generator_relations(self, spec: SampleSpec = SampleSpec()) -> Report:
        """Fock-realized generators: the commutation rule
        S_p U_g = U_{theta_p(g)} S_p, isometry of S_p, and the coset
        projection product formula for E_(g,p) = U_g S_p S_p* U_g*."""
        report = Report("generator-relations", {"system": self.name, **spec.to_json()})
        rng = spec.rng()
        ps = self.semigroup.enumerate_ball(spec.p_radius)
        gs = self.group.sample(spec.g_count)
        vectors = self._sample_fock_basis(spec, rng)

        ok, wit, inputs = True, None, None
        for _ in range(spec.pair_count):
            g, p = rng.choice(gs), rng.choice(ps)
            for v in vectors:
                lhs = self.fock_isometry(p, self.fock_group_unitary(g, v))
                rhs = self.fock_group_unitary(
                    self.system.apply_endo(p, g), self.fock_isometry(p, v)
                )
                if lhs != rhs:
                    ok, wit, inputs = (
                        False,
                        {"vector": repr(v)},
                        {"g": repr(g), "p": repr(p)},
                    )
                    break
            if not ok:
                break
        report.add("commutation-rule", ok, wit, inputs)

        ok, wit, inputs = True, None, None
        for p in ps:
            for v in vectors:
                if self.fock_isometry_adjoint(p, self.fock_isometry(p, v)) != v:
                    ok, wit, inputs = False, {"vector": repr(v)}, {"p": repr(p)}
                    break
            if not ok:
                break
        report.add("isometry", ok, wit, inputs)

        ok, wit, inputs = True, None, None
        for _ in range(spec.pair_count):
            g, h = rng.choice(gs), rng.choice(gs)
            p, q = rng.choice(ps), rng.choice(ps)
            meet = self.semigroup.right_lcm(p, q)
            sol = (
                None
                if meet is DISJOINT
                else self.system.solve_double(p, q, self.group.op(self.group.inv(g), h))
            )
            for v in vectors:
                lhs = self.fock_generator_projection(
                    g, p, self.fock_generator_projection(h, q, v)
                )
                if sol is None:
                    rhs = FockVector(self.system)
                else:
                    rhs = self.fock_generator_projection(
                        self.group.op(g, self.system.apply_endo(p, sol[0])),
                        meet.r,
                        v,
                    )
                if lhs != rhs:
                    ok, wit, inputs = (
                        False,
                        {"vector": repr(v)},
                        {"g": repr(g), "p": repr(p), "h": repr(h), "q": repr(q)},
                    )
                    break
            if not ok:
                break
        report.add("projection-products", ok, wit, inputs)
        return report

    # -- serialization -----------------------------------------------------------------

    def fibre_vector_to_json(self, xi: FibreVector):
        return {
            "fibre": self.semigroup.element_to_json(xi.fibre),
            "terms": [
                [self.group.element_to_json(g), c.to_json()]
                for g, c in sorted(
                    xi.terms.items(), key=lambda gc: self.group.sort_key(gc[0])
                )
            ],
        }

    def fibre_vector_from_json(self, data) -> FibreVector:
        out = FibreVector(
            self.system, self.semigroup.element_from_json(data["fibre"])
        )
        for g, c in data["terms"]:
            out.accumulate(
                self.group.element_from_json(g), RationalComplex.from_json(c)
            )
        return out


def _basis_legs(T: RankOne, p: SgElement):
    if T.fibre != p:
        raise ContractError("rank-one lives at the wrong fibre")
    for leg in (T.xi, T.eta):
        if len(leg.terms) != 1 or next(iter(leg.terms.values())) != ONE:
            raise ContractError(
                "compact_align_product needs basis rank-ones; expand sums at the caller"
            )
    return next(iter(T.xi.terms)), next(iter(T.eta.terms))
