"""The semidirect product S = G x| P as a right LCM semigroup.

Elements are pairs (g, p) with (g, p)(h, q) = (g * theta_p(h), pq).  The
constructible-ideal calculus reduces to right_lcm in P plus the double
factorization solver in G; principal ideals are denoted X_(g,p).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .dynamics import DynamicalSystem
from .errors import StructuralError
from .groups import GrpElement
from .reports import Report
from .sampling import SampleSpec
from .semigroups import DISJOINT, SgElement


@dataclass(frozen=True)
class SdElement:
    system: DynamicalSystem
    g: GrpElement
    p: SgElement

    def __repr__(self):
        return f"({self.g!r},{self.p!r})"


class EmptyIdeal:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "EmptyIdeal"


EMPTY_IDEAL = EmptyIdeal()


@dataclass(frozen=True)
class PrincipalIdeal:
    rep: SdElement

    def __repr__(self):
        return f"X_{self.rep!r}"


class SemidirectProduct:
    def __init__(self, system: DynamicalSystem):
        self.system = system
        self.group = system.group
        self.semigroup = system.semigroup
        self.name = f"{system.group.name} x| {system.semigroup.name}"

    def element(self, g: GrpElement, p: SgElement) -> SdElement:
        self.group.check_member(g)
        self.semigroup.check_member(p)
        return SdElement(self.system, g, p)

    @property
    def identity(self) -> SdElement:
        return SdElement(self.system, self.group.identity, self.semigroup.identity)

    def check_member(self, a: SdElement):
        if not isinstance(a, SdElement) or a.system is not self.system:
            raise StructuralError(f"{a!r} does not belong to {self.name}")

    def compose(self, a: SdElement, b: SdElement) -> SdElement:
        self.check_member(a)
        self.check_member(b)
        return SdElement(
            self.system,
            self.group.op(a.g, self.system.apply_endo(a.p, b.g)),
            self.semigroup.compose(a.p, b.p),
        )

    def divides(self, a: SdElement, b: SdElement) -> Optional[SdElement]:
        """x with a*x == b; unique by left cancellation."""
        self.check_member(a)
        self.check_member(b)
        u = self.semigroup.divides(a.p, b.p)
        if u is None:
            return None
        k = self.system.preimage(a.p, self.group.op(self.group.inv(a.g), b.g))
        if k is None:
            return None
        return SdElement(self.system, k, u)

    def ideal_intersect(self, a: SdElement, b: SdElement):
        """X_a cap X_b as EMPTY_IDEAL or PrincipalIdeal."""
        self.check_member(a)
        self.check_member(b)
        meet = self.semigroup.right_lcm(a.p, b.p)
        if meet is DISJOINT:
            return EMPTY_IDEAL
        sol = self.system.solve_double(
            a.p, b.p, self.group.op(self.group.inv(a.g), b.g)
        )
        if sol is None:
            return EMPTY_IDEAL
        k, _ = sol
        return PrincipalIdeal(
            SdElement(
                self.system,
                self.group.op(a.g, self.system.apply_endo(a.p, k)),
                meet.r,
            )
        )

    def same_ideal(self, a: SdElement, b: SdElement) -> bool:
        return self.divides(a, b) is not None and self.divides(b, a) is not None

    def is_unit(self, a: SdElement) -> bool:
        self.check_member(a)
        return self.semigroup.is_unit(a.p)

    def unit_description(self) -> str:
        vals = sorted(
            self.semigroup.format_element(u) for u in self.semigroup.units()
        )
        units = "{±1}" if vals == ["-1", "1"] else "{" + ",".join(vals) + "}"
        return f"{self.group.name} x| {units}"

    # -- windows and sampled verifiers ----------------------------------------

    def window(self, spec: SampleSpec):
        """Finite observation window: (G-sample x P-ball) closed under one
        round of composition, deterministically ordered.  Sized by the
        dedicated window bounds, not the sampling bounds."""
        base = [
            self.element(g, p)
            for g in self.group.sample(spec.window_g_count)
            for p in self.semigroup.enumerate_ball(spec.window_p_radius)
        ]
        seen = dict.fromkeys(base)
        for a, b in itertools.product(base, base):
            seen.setdefault(self.compose(a, b))
        return sorted(
            seen,
            key=lambda s: (self.semigroup.sort_key(s.p), self.group.sort_key(s.g)),
        )

    def sample_elements(self, spec: SampleSpec, count: int):
        pool = [
            self.element(g, p)
            for g in self.group.sample(max(4, spec.g_count // 4))
            for p in self.semigroup.enumerate_ball(spec.p_radius)
        ]
        rng = spec.rng()
        return [rng.choice(pool) for _ in range(count)]

    def left_ore_sample(self, spec: SampleSpec, bound: Optional[int] = None) -> Report:
        """Bounded search for common left multiples, following the
        constructive recipe: a common element of S(g,p) and S(h,q) is
        (theta_b(h) * theta_a(g)^-1, a)(g, p) = (1, b)(h, q) once
        a*p = b*q in P."""
        bound = bound if bound is not None else spec.p_radius
        report = Report(
            "left-ore",
            {"system": self.name, "bound": bound, **spec.to_json()},
        )
        rng = spec.rng()
        gs = self.group.sample(max(4, spec.g_count // 8))
        ps = self.semigroup.enumerate_ball(max(1, spec.p_radius - 1))
        pool = [self.element(g, p) for g in gs for p in ps]
        pairs = [(rng.choice(pool), rng.choice(pool)) for _ in range(spec.pair_count)]
        for a, b in pairs:
            wit = self.semigroup.right_reversibility_witness(a.p, b.p, bound)
            inputs = {"a": repr(a), "b": repr(b)}
            if wit is None:
                report.add(
                    "left-ore-witness",
                    False,
                    witness={"found": False, "bound": bound},
                    inputs=inputs,
                )
                continue
            pa, qb = wit
            left = self.compose(
                self.element(
                    self.group.op(
                        self.system.apply_endo(qb, b.g),
                        self.group.inv(self.system.apply_endo(pa, a.g)),
                    ),
                    pa,
                ),
                a,
            )
            right = self.compose(self.element(self.group.identity, qb), b)
            report.add(
                "left-ore-witness",
                left == right,
                witness={
                    "found": True,
                    "common": repr(left),
                    "left_factor": repr(pa),
                    "right_factor": repr(qb),
                },
                inputs=inputs,
            )

        # right cancellativity on samples
        ok, witness = True, None
        sample = [rng.choice(pool) for _ in range(min(30, len(pool)))]
        for c in sample[:10]:
            seen = {}
            for a in sample:
                ac = self.compose(a, c)
                if ac in seen and seen[ac] != a:
                    ok, witness = False, {
                        "a": repr(seen[ac]),
                        "b": repr(a),
                        "c": repr(c),
                    }
                    break
                seen[ac] = a
            if not ok:
                break
        report.add("right-cancellative", ok, witness)
        return report

    # -- serialization ---------------------------------------------------------

    def element_to_json(self, a: SdElement):
        self.check_member(a)
        return {
            "g": self.group.element_to_json(a.g),
            "p": self.semigroup.element_to_json(a.p),
        }

    def element_from_json(self, data) -> SdElement:
        return SdElement(
            self.system,
            self.group.element_from_json(data["g"]),
            self.semigroup.element_from_json(data["p"]),
        )

    def parse_element(self, text: str) -> SdElement:
        """Parse "g,p" with family-specific component syntax."""
        g_text, p_text = text.split(",", 1)
        return SdElement(
            self.system,
            self.group.parse_element(g_text),
            self.semigroup.parse_element(p_text),
        )

    def __repr__(self):
        return self.name
