"""Actions of right LCM semigroups on groups by injective endomorphisms.

A dynamical system bundles a semigroup P, a group G and the action
machinery: applying endomorphisms, deciding membership in their images,
enumerating coset transversals, the canonical coset decomposition
g = t * theta_p(k), and the two-sided factorization solver
x = theta_p(k) * theta_q(l)^-1 that drives all ideal computations.

Registration runs a sampled verifier for the defining axioms (action law,
injectivity, order compatibility) and rejects systems that fail, e.g.
multiplication by |4,6> on Z or a non-injective residue action.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterator, Optional, Tuple

from ._backend import kernels
from .errors import RegistrationError, StructuralError, TruncationRequired
from .groups import (
    GaussianGroup,
    Group,
    GrpElement,
    IntGroup,
    ResidueGroup,
    ShiftGroup,
    TrivialGroup,
)
from .reports import Report
from .sampling import SampleSpec, pick_pairs
from .semigroups import DISJOINT, Meet, Semigroup, SgElement


class DynamicalSystem:
    kind = "abstract"

    def __init__(self, semigroup: Semigroup, group: Group, register=True, reg_spec=None):
        self.semigroup = semigroup
        self.group = group
        self.name = f"({group.name}, {semigroup.name}, {self.kind})"
        self.registration_report = None
        self._semidirect = None
        if register:
            spec = reg_spec or SampleSpec()
            report = self.verify_axioms(spec)
            if not report.passed:
                fail = report.failures[0]
                raise RegistrationError(
                    f"{self.name}: axiom check failed: {fail.name} with witness {fail.witness}",
                    report,
                )
            self.registration_report = report

    # -- action primitives ---------------------------------------------------

    def apply_endo(self, p: SgElement, g: GrpElement) -> GrpElement:
        raise NotImplementedError

    def preimage(self, p: SgElement, g: GrpElement) -> Optional[GrpElement]:
        raise NotImplementedError

    def in_image(self, p: SgElement, g: GrpElement) -> bool:
        return self.preimage(p, g) is not None

    def coset_index(self, p: SgElement) -> Optional[int]:
        """[G : theta_p(G)], or None when infinite."""
        raise NotImplementedError

    def transversal(self, p: SgElement) -> Iterator[GrpElement]:
        """Fixed transversal of G/theta_p(G), lazily enumerated without
        repetition."""
        raise NotImplementedError

    def transversal_list(self, p: SgElement, limit: Optional[int] = None):
        size = self.coset_index(p)
        if size is None and limit is None:
            raise TruncationRequired(
                f"transversal of {p!r} in {self.name} is infinite; pass a limit"
            )
        n = size if limit is None else (limit if size is None else min(limit, size))
        return list(itertools.islice(self.transversal(p), n))

    def canon_rep(self, p: SgElement, g: GrpElement) -> Tuple[GrpElement, GrpElement]:
        """The unique (t, k) with t in T_p and g = t * theta_p(k)."""
        raise NotImplementedError

    def _solve_double_base(self, p, q, x):
        raise NotImplementedError

    def solve_double(self, p: SgElement, q: SgElement, x: GrpElement, variant: int = 0):
        """Some (k, l) with x = theta_p(k) * theta_q(l)^-1, or None.

        ``variant`` > 0 shifts along the homogeneous solution family
        (k, l) -> (k*theta_p'(w), l*theta_q'(w)); downstream canonical
        forms must not depend on the choice, which is property-tested.
        """
        self.semigroup.check_member(p)
        self.semigroup.check_member(q)
        self.group.check_member(x)
        base = self._solve_double_base(p, q, x)
        if base is None or variant == 0:
            return base
        meet = self.semigroup.right_lcm(p, q)
        if meet is DISJOINT:
            return base
        shift = list(
            itertools.islice(self.group.enumerate_elements(), variant, variant + 1)
        )
        if not shift:
            return base
        w = shift[0]
        k, l = base
        return (
            self.group.op(k, self.apply_endo(meet.p_comp, w)),
            self.group.op(l, self.apply_endo(meet.q_comp, w)),
        )

    # -- the sampled axiom verifier -------------------------------------------

    def verify_axioms(self, spec: SampleSpec = SampleSpec()) -> Report:
        report = Report("dynamics-axioms", {"system": self.name, **spec.to_json()})
        rng = spec.rng()
        ball = self.semigroup.enumerate_ball(spec.p_radius)
        gs = self.group.sample(spec.g_count)
        pairs = pick_pairs(rng, ball, spec.pair_count)

        ok, witness = True, None
        for p, q in pairs:
            pq = self.semigroup.compose(p, q)
            for g in gs[: max(4, spec.g_count // 8)]:
                if self.apply_endo(p, self.apply_endo(q, g)) != self.apply_endo(pq, g):
                    ok, witness = False, {"p": repr(p), "q": repr(q), "g": repr(g)}
                    break
            if not ok:
                break
        report.add("action-law", ok, witness)

        identity_ok = all(self.apply_endo(self.semigroup.identity, g) == g for g in gs)
        report.add("identity-acts-trivially", identity_ok)

        ok, witness = True, None
        for p in ball:
            seen = {}
            for g in gs:
                img = self.apply_endo(p, g)
                if img in seen and seen[img] != g:
                    ok, witness = False, {
                        "p": repr(p),
                        "g": repr(seen[img]),
                        "h": repr(g),
                        "image": repr(img),
                    }
                    break
                seen[img] = g
            if not ok:
                break
        report.add("injectivity", ok, witness)

        ok, witness = True, None
        for p, q in pairs:
            meet = self.semigroup.right_lcm(p, q)
            if meet is DISJOINT:
                continue
            r = meet.r
            for g in gs:
                both = self.in_image(p, g) and self.in_image(q, g)
                if both != self.in_image(r, g):
                    ok, witness = False, {
                        "p": repr(p),
                        "q": repr(q),
                        "r": repr(r),
                        "g": repr(g),
                        "in_intersection": both,
                    }
                    break
            if not ok:
                break
        report.add("order-respecting", ok, witness)
        return report

    def semidirect(self):
        if self._semidirect is None:
            from .semidirect import SemidirectProduct

            self._semidirect = SemidirectProduct(self)
        return self._semidirect

    def __repr__(self):
        return self.name


class IntMultSystem(DynamicalSystem):
    """Integers acted on by multiplicative integer semigroups."""

    kind = "int-mult"

    def __init__(self, semigroup, group=None, **kw):
        if not hasattr(semigroup, "value"):
            raise StructuralError("int-mult needs a numeric-valued semigroup")
        group = group or IntGroup()
        if not isinstance(group, IntGroup):
            raise StructuralError("IntMultSystem acts on Z; use ResidueMultSystem for Z/n")
        super().__init__(semigroup, group, **kw)

    def _m(self, p) -> int:
        return self.semigroup.value(p)

    def apply_endo(self, p, g):
        self.group.check_member(g)
        return self.group.element(self._m(p) * g.payload)

    def preimage(self, p, g):
        self.group.check_member(g)
        m = self._m(p)
        if g.payload % m:
            return None
        return self.group.element(g.payload // m)

    def coset_index(self, p):
        return abs(self._m(p))

    def transversal(self, p):
        for t in range(abs(self._m(p))):
            yield self.group.element(t)

    def canon_rep(self, p, g):
        self.group.check_member(g)
        m = self._m(p)
        t = g.payload % abs(m)
        return self.group.element(t), self.group.element((g.payload - t) // m)

    def _solve_double_base(self, p, q, x):
        mp, mq = self._m(p), self._m(q)
        d, a, b = kernels.xgcd(mp, mq)
        if x.payload % d:
            return None
        s = x.payload // d
        return self.group.element(a * s), self.group.element(-b * s)


class ResidueMultSystem(DynamicalSystem):
    """Residue group Z/n under multiplicative integer semigroups; only
    injective actions survive registration."""

    kind = "int-mult"

    def __init__(self, semigroup, group, **kw):
        if not isinstance(group, ResidueGroup):
            raise StructuralError("ResidueMultSystem needs a residue group")
        if not hasattr(semigroup, "value"):
            raise StructuralError("int-mult needs a numeric-valued semigroup")
        super().__init__(semigroup, group, **kw)

    def _m(self, p) -> int:
        return self.semigroup.value(p) % self.group.modulus

    def apply_endo(self, p, g):
        self.group.check_member(g)
        return self.group.element(self._m(p) * g.payload)

    def preimage(self, p, g):
        self.group.check_member(g)
        m = self._m(p)
        for cand in range(self.group.modulus):
            if (m * cand) % self.group.modulus == g.payload:
                return self.group.element(cand)
        return None

    def coset_index(self, p):
        return math.gcd(self._m(p), self.group.modulus)

    def _image(self, p):
        m, n = self._m(p), self.group.modulus
        return {(m * t) % n for t in range(n)}

    def transversal(self, p):
        image = self._image(p)
        kept = []
        for t in range(self.group.modulus):
            if all((t - s) % self.group.modulus not in image for s in kept):
                kept.append(t)
                yield self.group.element(t)

    def canon_rep(self, p, g):
        self.group.check_member(g)
        for t in self.transversal(p):
            k = self.preimage(p, self.group.op(g, self.group.inv(t)))
            if k is not None:
                return t, k
        raise StructuralError("transversal scan failed")  # unreachable

    def _solve_double_base(self, p, q, x):
        mp, mq, n = self._m(p), self._m(q), self.group.modulus
        for k in range(n):
            for l in range(n):
                if (mp * k - mq * l) % n == x.payload:
                    return self.group.element(k), self.group.element(l)
        return None


class GaussMultSystem(DynamicalSystem):
    """Gaussian integers under multiplication by a coprime-generated
    multiplicative semigroup of Z[i]."""

    kind = "gauss-mult"

    def __init__(self, semigroup, group=None, **kw):
        if not hasattr(semigroup, "value"):
            raise StructuralError("gauss-mult needs a Gaussian-valued semigroup")
        super().__init__(semigroup, group or GaussianGroup(), **kw)

    def _v(self, p):
        return self.semigroup.value(p)

    def apply_endo(self, p, g):
        self.group.check_member(g)
        return self.group.element(kernels.gauss_mul(*self._v(p), *g.payload))

    def preimage(self, p, g):
        self.group.check_member(g)
        q = kernels.gauss_exactdiv(*g.payload, *self._v(p))
        return None if q is None else self.group.element(q)

    def coset_index(self, p):
        return kernels.gauss_norm(*self._v(p))

    def _coset_key(self, g_payload, v):
        # the nearest-rounding division remainder is constant on cosets,
        # so it keys G/vG without any divisibility scans
        _, _, rr, ri = kernels.gauss_divmod(*g_payload, *v)
        return (rr, ri)

    def transversal(self, p):
        """Representatives in lattice reading order: the first point of
        each coset encountered on the square shells."""
        v = self._v(p)
        n = kernels.gauss_norm(*v)
        seen = set()
        for z in self.group.enumerate_payloads():
            ck = self._coset_key(z, v)
            if ck not in seen:
                seen.add(ck)
                yield self.group.element(z)
                if len(seen) == n:
                    return

    def _canonical_rep(self, g_payload, v):
        """The transversal member of the coset of g: the coset point
        minimizing the shell reading order, found by a bounded
        closest-vector search around g/v."""
        qr, qi, rr, ri = kernels.gauss_divmod(*g_payload, *v)
        best = None
        for da in range(-2, 3):
            for db in range(-2, 3):
                zr = rr - (da * v[0] - db * v[1])
                zi = ri - (da * v[1] + db * v[0])
                key = (max(abs(zr), abs(zi)), -zi, zr)
                if best is None or key < best[0]:
                    best = (key, (zr, zi), (qr + da, qi + db))
        return best[1], best[2]

    def canon_rep(self, p, g):
        self.group.check_member(g)
        t, k = self._canonical_rep(g.payload, self._v(p))
        return self.group.element(t), self.group.element(k)

    def _solve_double_base(self, p, q, x):
        vp, vq = self._v(p), self._v(q)
        gr, gi, ar, ai, br, bi = kernels.gauss_xgcd(*vp, *vq)
        s = kernels.gauss_exactdiv(*x.payload, gr, gi)
        if s is None:
            return None
        k = kernels.gauss_mul(ar, ai, *s)
        l = kernels.gauss_mul(-br, -bi, *s)
        return self.group.element(k), self.group.element(l)


class ShiftSystem(DynamicalSystem):
    """The shift action of P on finitely supported maps P -> G0."""

    kind = "shift"

    def __init__(self, semigroup, group: ShiftGroup, **kw):
        if not isinstance(group, ShiftGroup) or group.positions is not semigroup:
            raise StructuralError("shift system needs a ShiftGroup over the same semigroup")
        super().__init__(semigroup, group, **kw)

    def apply_endo(self, p, g):
        self.group.check_member(g)
        self.semigroup.check_member(p)
        moved = [
            (self.semigroup._compose(p.payload, pos), val) for pos, val in g.payload
        ]
        return self.group.element(moved)

    def preimage(self, p, g):
        self.group.check_member(g)
        items = []
        for pos, val in g.payload:
            s = self.semigroup._divides(p.payload, pos)
            if s is None:
                return None
            items.append((s, val))
        return self.group.element(items)

    def in_image(self, p, g):
        return all(
            self.semigroup._divides(p.payload, pos) is not None
            for pos, _ in g.payload
        )

    def coset_index(self, p):
        c = self.semigroup._ideal_complement_size(p.payload)
        if c == 0:
            return 1
        if isinstance(self.group.base, TrivialGroup):
            return 1
        if c is None or not self.group.base.is_finite:
            return None
        return self.group.base.modulus**c if isinstance(self.group.base, ResidueGroup) else None

    def transversal(self, p):
        base = self.group.base
        comp_size = self.semigroup._ideal_complement_size(p.payload)
        outside = (
            pos
            for pos in self.semigroup.enumerate_payloads()
            if self.semigroup._divides(p.payload, pos) is None
        )
        yield self.group.element(())
        seen = {()}
        positions: list = []
        nonzero_vals: list = []
        val_iter = (v for v in base.enumerate_payloads() if v != base._id())
        pos_done = val_done = False
        stage = 0
        while True:
            stage += 1
            if not pos_done and len(positions) < stage:
                # a known-finite complement bounds the scan of the
                # otherwise infinite position stream
                if comp_size is not None and len(positions) >= comp_size:
                    pos_done = True
                else:
                    try:
                        positions.append(next(outside))
                    except StopIteration:
                        pos_done = True
            if not val_done and len(nonzero_vals) < stage:
                try:
                    nonzero_vals.append(next(val_iter))
                except StopIteration:
                    val_done = True
            if not positions or not nonzero_vals:
                if pos_done or val_done:
                    return
                continue
            emitted = False
            for size in range(1, len(positions) + 1):
                for combo in itertools.combinations(range(len(positions)), size):
                    for vals in itertools.product(
                        range(len(nonzero_vals)), repeat=size
                    ):
                        f = tuple(
                            (positions[i], nonzero_vals[v])
                            for i, v in zip(combo, vals)
                        )
                        if f not in seen:
                            seen.add(f)
                            emitted = True
                            yield self.group.element(f)
            if pos_done and val_done and not emitted:
                return

    def canon_rep(self, p, g):
        self.group.check_member(g)
        t_items, k_items = [], []
        for pos, val in g.payload:
            s = self.semigroup._divides(p.payload, pos)
            if s is None:
                t_items.append((pos, val))
            else:
                k_items.append((s, val))
        return self.group.element(t_items), self.group.element(k_items)

    def _solve_double_base(self, p, q, x):
        k_items, l_items = [], []
        for pos, val in x.payload:
            s = self.semigroup._divides(p.payload, pos)
            if s is not None:
                k_items.append((s, val))
            else:
                s = self.semigroup._divides(q.payload, pos)
                if s is None:
                    return None
                l_items.append((s, self.group.base._inv(val)))
        return self.group.element(k_items), self.group.element(l_items)


class TrivialSystem(DynamicalSystem):
    """The trivial action on the one-element group: monomials degenerate
    to the pure isometry calculus of the semigroup."""

    kind = "trivial"

    def __init__(self, semigroup, group=None, **kw):
        super().__init__(semigroup, group or TrivialGroup(), **kw)

    def apply_endo(self, p, g):
        return self.group.identity

    def preimage(self, p, g):
        return self.group.identity

    def coset_index(self, p):
        return 1

    def transversal(self, p):
        yield self.group.identity

    def canon_rep(self, p, g):
        return self.group.identity, self.group.identity

    def _solve_double_base(self, p, q, x):
        return self.group.identity, self.group.identity
