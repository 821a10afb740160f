"""Morphisms between dynamical systems and their induced semigroup maps.

A morphism is a pair (phi_G, phi_P): a group homomorphism descriptor plus
a generator-image table extended multiplicatively.  The admissibility
verifier checks that right-LCM data transports along phi_P and that the
double-factorization condition pulls back correctly; the independent
route re-checks the same thing through constructible-ideal intersections
of the semidirect products, and the two must agree on every sample.
"""

from __future__ import annotations

from functools import reduce
from typing import Optional

from ._backend import kernels
from .dynamics import DynamicalSystem, ShiftSystem
from .errors import StructuralError
from .groups import GrpElement, TrivialGroup
from .reports import Report
from .sampling import SampleSpec, pick_pairs
from .semidirect import EMPTY_IDEAL, SdElement
from .semigroups import DISJOINT, FreeMonoid, SgElement


class AdsMorphism:
    def __init__(
        self,
        source: DynamicalSystem,
        target: DynamicalSystem,
        phi_g: dict,
        phi_p_images,
    ):
        """phi_g: descriptor dict (kind: identity | scale | trivial |
        pushforward); phi_p_images: target elements for the source
        generators, in generator order."""
        self.source = source
        self.target = target
        self.phi_g = phi_g
        self.phi_p_images = list(phi_p_images)
        gens = source.semigroup.generators()
        if len(self.phi_p_images) != len(gens):
            raise StructuralError(
                f"expected {len(gens)} generator images, got {len(self.phi_p_images)}"
            )
        for img in self.phi_p_images:
            target.semigroup.check_member(img)
        self.name = f"{source.name} -> {target.name}"

    # -- applying the two legs --------------------------------------------------

    def apply_p(self, p: SgElement) -> SgElement:
        letters = self.source.semigroup.factor_letters(p)
        return reduce(
            self.target.semigroup.compose,
            (self.phi_p_images[i] for i in letters),
            self.target.semigroup.identity,
        )

    def apply_g(self, g: GrpElement) -> GrpElement:
        self.source.group.check_member(g)
        kind = self.phi_g.get("kind", "identity")
        G2 = self.target.group
        if kind == "identity":
            return G2.element(g.payload)
        if kind == "scale":
            c = self.phi_g["factor"]
            if isinstance(c, (list, tuple)):
                return G2.element(kernels.gauss_mul(*g.payload, *c))
            return G2.element(c * g.payload)
        if kind == "trivial":
            if not isinstance(G2, TrivialGroup):
                raise StructuralError("trivial phi_G needs a trivial target group")
            return G2.identity
        if kind == "pushforward":
            if not (
                isinstance(self.source, ShiftSystem)
                and isinstance(self.target, ShiftSystem)
            ):
                raise StructuralError("pushforward needs shift systems on both sides")
            items = {}
            for pos, val in g.payload:
                tgt = self.apply_p(SgElement(self.source.semigroup, pos)).payload
                items[tgt] = (
                    G2.base._op(items[tgt], val) if tgt in items else val
                )
            return G2.element(items.items())
        raise StructuralError(f"unknown phi_G kind {kind!r}")

    def apply_sd(self, a: SdElement) -> SdElement:
        """The induced semidirect-product homomorphism (g,p) ->
        (phi_G(g), phi_P(p))."""
        return self.target.semidirect().element(self.apply_g(a.g), self.apply_p(a.p))

    # -- verifiers -----------------------------------------------------------------

    def check_morphism(self, spec: SampleSpec = SampleSpec()) -> Report:
        report = Report("morphism", {"morphism": self.name, **spec.to_json()})
        rng = spec.rng()
        gs = self.source.group.sample(spec.g_count)
        ball = self.source.semigroup.enumerate_ball(spec.p_radius)

        ok, wit = True, None
        for g, h in pick_pairs(rng, gs, spec.pair_count):
            lhs = self.apply_g(self.source.group.op(g, h))
            rhs = self.target.group.op(self.apply_g(g), self.apply_g(h))
            if lhs != rhs:
                ok, wit = False, {"g": repr(g), "h": repr(h)}
                break
        id_ok = self.apply_g(self.source.group.identity) == self.target.group.identity
        report.add("group-homomorphism", ok and id_ok, wit)

        ok, wit = True, None
        for p, q in pick_pairs(rng, ball, spec.pair_count):
            lhs = self.apply_p(self.source.semigroup.compose(p, q))
            rhs = self.target.semigroup.compose(self.apply_p(p), self.apply_p(q))
            if lhs != rhs:
                ok, wit = False, {"p": repr(p), "q": repr(q)}
                break
        id_ok = (
            self.apply_p(self.source.semigroup.identity)
            == self.target.semigroup.identity
        )
        report.add("semigroup-homomorphism", ok and id_ok, wit)

        ok, wit = True, None
        for p in ball:
            fp = self.apply_p(p)
            for g in gs:
                lhs = self.apply_g(self.source.apply_endo(p, g))
                rhs = self.target.apply_endo(fp, self.apply_g(g))
                if lhs != rhs:
                    ok, wit = False, {"p": repr(p), "g": repr(g)}
                    break
            if not ok:
                break
        report.add("equivariance", ok, wit)
        return report

    def check_admissible(self, spec: SampleSpec = SampleSpec()) -> Report:
        """Conditions (iv) and (v) on samples, with the two structural
        shortcuts: a group source semigroup is always admissible, and a
        free-monoid source reduces (v) to a single-generator condition."""
        report = Report("admissible", {"morphism": self.name, **spec.to_json()})
        P1, P2 = self.source.semigroup, self.target.semigroup
        if P1.is_group():
            report.add("iv-right-lcm-transport", True, details={"shortcut": "P1 is a group"})
            report.add("v-double-coset", True, details={"shortcut": "P1 is a group"})
            return report

        rng = spec.rng()
        ball = P1.enumerate_ball(spec.p_radius)
        gs = self.source.group.sample(spec.g_count)
        pairs = pick_pairs(rng, ball, spec.pair_count)

        ok, wit = True, None
        for p, q in pairs:
            meet1 = P1.right_lcm(p, q)
            meet2 = P2.right_lcm(self.apply_p(p), self.apply_p(q))
            if meet1 is DISJOINT:
                if meet2 is not DISJOINT:
                    ok, wit = False, {
                        "p": repr(p),
                        "q": repr(q),
                        "target_meet": repr(meet2.r),
                    }
                    break
                continue
            if meet2 is DISJOINT:
                ok, wit = False, {"p": repr(p), "q": repr(q), "target_meet": None}
                break
            image_r = self.apply_p(meet1.r)
            if (
                P2.divides(meet2.r, image_r) is None
                or P2.divides(image_r, meet2.r) is None
            ):
                ok, wit = False, {
                    "p": repr(p),
                    "q": repr(q),
                    "phi(r1)": repr(image_r),
                    "r2": repr(meet2.r),
                }
                break
        report.add("iv-right-lcm-transport", ok, wit)

        free_monoid = isinstance(P1, FreeMonoid)
        ok, wit = True, None
        if free_monoid:
            for p in ball:
                fp = self.apply_p(p)
                for g in gs:
                    if self.target.in_image(fp, self.apply_g(g)) != self.source.in_image(p, g):
                        ok, wit = False, {"p": repr(p), "g": repr(g)}
                        break
                if not ok:
                    break
            details = {"shortcut": "free-monoid source: single-generator form"}
        else:
            details = None
            for p, q in pairs:
                if P1.right_lcm(p, q) is DISJOINT:
                    continue
                fp, fq = self.apply_p(p), self.apply_p(q)
                for g in gs:
                    src = self.source.solve_double(p, q, g) is not None
                    tgt = (
                        self.target.solve_double(fp, fq, self.apply_g(g)) is not None
                    )
                    if src != tgt:
                        ok, wit = False, {
                            "p": repr(p),
                            "q": repr(q),
                            "g": repr(g),
                            "solvable_in_source": src,
                            "solvable_in_target": tgt,
                        }
                        break
                if not ok:
                    break
        report.add("v-double-coset", ok, wit, details=details)
        return report

    def eq31_check(self, spec: SampleSpec = SampleSpec()) -> Report:
        """Ideal-transport condition for the induced semidirect
        homomorphism: intersections of principal ideals must map to
        intersections, checked through both ideal calculi."""
        report = Report("ideal-transport", {"morphism": self.name, **spec.to_json()})
        sd1 = self.source.semidirect()
        sd2 = self.target.semidirect()
        rng = spec.rng()
        pool = [
            sd1.element(g, p)
            for g in self.source.group.sample(max(4, spec.g_count // 4))
            for p in self.source.semigroup.enumerate_ball(spec.p_radius)
        ]
        ok, wit = True, None
        for _ in range(spec.pair_count):
            a, b = rng.choice(pool), rng.choice(pool)
            inter1 = sd1.ideal_intersect(a, b)
            inter2 = sd2.ideal_intersect(self.apply_sd(a), self.apply_sd(b))
            if inter1 is EMPTY_IDEAL:
                if inter2 is not EMPTY_IDEAL:
                    ok, wit = False, {
                        "a": repr(a),
                        "b": repr(b),
                        "target_rep": repr(inter2.rep),
                    }
                    break
                continue
            if inter2 is EMPTY_IDEAL:
                ok, wit = False, {"a": repr(a), "b": repr(b), "target_rep": None}
                break
            if not sd2.same_ideal(self.apply_sd(inter1.rep), inter2.rep):
                ok, wit = False, {
                    "a": repr(a),
                    "b": repr(b),
                    "phi(rep1)": repr(self.apply_sd(inter1.rep)),
                    "rep2": repr(inter2.rep),
                }
                break
        report.add("eq-ideal-transport", ok, wit)

        hom_ok, hom_wit = True, None
        for _ in range(min(spec.pair_count, 100)):
            a, b = rng.choice(pool), rng.choice(pool)
            lhs = self.apply_sd(sd1.compose(a, b))
            rhs = sd2.compose(self.apply_sd(a), self.apply_sd(b))
            if lhs != rhs:
                hom_ok, hom_wit = False, {"a": repr(a), "b": repr(b)}
                break
        report.add("semidirect-homomorphism", hom_ok, hom_wit)
        return report

    def hom_surjectivity_injectivity(self, spec: SampleSpec = SampleSpec()) -> Report:
        """Bounded image coverage of the target ball and a bounded
        collision search; semigroup-level statements only."""
        report = Report("surjectivity-injectivity", {"morphism": self.name, **spec.to_json()})
        source_ball = self.source.semigroup.enumerate_ball(2 * spec.p_radius)
        target_ball = self.target.semigroup.enumerate_ball(spec.p_radius)
        image = {self.apply_p(p) for p in source_ball}
        missing = [y for y in target_ball if y not in image]
        # findings, not failures: non-surjectivity of a perfectly good
        # morphism must not fail an aggregate report
        report.add(
            "surjectivity-estimate",
            True,
            details={
                "surjective_on_ball": not missing,
                "covered": len(target_ball) - len(missing),
                "ball": len(target_ball),
                **({"missing": repr(missing[0])} if missing else {}),
            },
        )
        collisions = {}
        collision = None
        for p in source_ball:
            fp = self.apply_p(p)
            if fp in collisions and collisions[fp] != p:
                collision = {"p": repr(collisions[fp]), "q": repr(p), "image": repr(fp)}
                break
            collisions[fp] = p
        report.add(
            "injectivity-search",
            True,
            details={
                "injective_on_ball": collision is None,
                **({"collision": collision} if collision else {}),
            },
        )
        return report

    def __repr__(self):
        return f"AdsMorphism({self.name})"


def identity_morphism(system: DynamicalSystem) -> AdsMorphism:
    return AdsMorphism(
        system, system, {"kind": "identity"}, system.semigroup.generators()
    )


def inclusion_morphism(
    source: DynamicalSystem, target: DynamicalSystem, phi_g: Optional[dict] = None
) -> AdsMorphism:
    """Map each source generator to the target element with the same
    display form."""
    images = [
        target.semigroup.parse_element(source.semigroup.format_element(g))
        for g in source.semigroup.generators()
    ]
    return AdsMorphism(source, target, phi_g or {"kind": "identity"}, images)


def collapse_morphism(
    source: DynamicalSystem, target: Optional[DynamicalSystem] = None
) -> AdsMorphism:
    """Collapse onto the trivial system: every semigroup generator maps to
    the identity and the group is killed.  A valid morphism, but the
    double-coset condition (v) fails whenever the source action has a
    proper image, since non-units land in the unit group."""
    if target is None:
        from .dynamics import TrivialSystem
        from .semigroups import FreeAbelianMonoid

        target = TrivialSystem(FreeAbelianMonoid([]))
    images = [target.semigroup.identity for _ in source.semigroup.generators()]
    return AdsMorphism(source, target, {"kind": "trivial"}, images)
