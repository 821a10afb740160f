"""Right LCM semigroup families with exact element arithmetic.

Every family keeps its elements in a canonical normal form (exponent
vectors, words, sign-tagged exponent vectors, exponent vectors over
Gaussian-integer generators) so that equality is literal payload equality
and all ideal computations are exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Iterator, Optional

from ._backend import kernels
from .errors import ParseError, RegistrationError, StructuralError


@dataclass(frozen=True)
class SgElement:
    semigroup: "Semigroup"
    payload: Any

    def __repr__(self):
        return self.semigroup.format_element(self)


@dataclass(frozen=True)
class Meet:
    """pP ∩ qP = rP with p*p_comp = q*q_comp = r."""

    r: SgElement
    p_comp: SgElement
    q_comp: SgElement


class Disjoint:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Disjoint"


DISJOINT = Disjoint()


class Semigroup:
    """Base class; subclasses implement the payload-level primitives."""

    name = "semigroup"

    # -- payload primitives ------------------------------------------------

    def _identity(self):
        raise NotImplementedError

    def _compose(self, a, b):
        raise NotImplementedError

    def _right_lcm(self, a, b):
        """Return (r, a_comp, b_comp) payloads or None for disjoint."""
        raise NotImplementedError

    def _divides(self, a, b):
        """Return x with a*x == b, or None."""
        raise NotImplementedError

    def _unit_payloads(self):
        return [self._identity()]

    def _generator_payloads(self):
        raise NotImplementedError

    def _ball_payloads(self, radius):
        """All products of at most ``radius`` generators, deduplicated,
        in a deterministic order."""
        seen = {self._identity(): 0}
        frontier = [self._identity()]
        for _ in range(radius):
            new = []
            for a in frontier:
                for g in self._generator_payloads():
                    c = self._compose(a, g)
                    if c not in seen:
                        seen[c] = 0
                        new.append(c)
            frontier = new
        return sorted(seen, key=self._sort_key)

    def enumerate_payloads(self) -> Iterator[Any]:
        """Lazy enumeration of the whole semigroup in canonical order."""
        radius = 0
        emitted = set()
        while True:
            radius += 1
            for p in self._ball_payloads(radius):
                if p not in emitted:
                    emitted.add(p)
                    yield p

    def _sort_key(self, payload):
        raise NotImplementedError

    def _ideal_complement_size(self, payload) -> Optional[int]:
        """|P \\ pP|, or None when infinite."""
        raise NotImplementedError

    # -- public element API ------------------------------------------------

    def element(self, payload) -> SgElement:
        return SgElement(self, self._normalize(payload))

    def _normalize(self, payload):
        return payload

    @property
    def identity(self) -> SgElement:
        return SgElement(self, self._identity())

    def check_member(self, p: SgElement):
        if not isinstance(p, SgElement) or p.semigroup is not self:
            raise StructuralError(f"element {p!r} does not belong to {self.name}")

    def compose(self, p: SgElement, q: SgElement) -> SgElement:
        self.check_member(p)
        self.check_member(q)
        return SgElement(self, self._compose(p.payload, q.payload))

    def right_lcm(self, p: SgElement, q: SgElement):
        self.check_member(p)
        self.check_member(q)
        out = self._right_lcm(p.payload, q.payload)
        if out is None:
            return DISJOINT
        r, pc, qc = out
        return Meet(SgElement(self, r), SgElement(self, pc), SgElement(self, qc))

    def divides(self, p: SgElement, q: SgElement) -> Optional[SgElement]:
        self.check_member(p)
        self.check_member(q)
        x = self._divides(p.payload, q.payload)
        return None if x is None else SgElement(self, x)

    def units(self):
        return [SgElement(self, u) for u in self._unit_payloads()]

    def is_unit(self, p: SgElement) -> bool:
        self.check_member(p)
        return self._divides(p.payload, self._identity()) is not None

    def is_group(self) -> bool:
        return all(self.is_unit(g) for g in self.generators())

    def generators(self):
        return [SgElement(self, g) for g in self._generator_payloads()]

    def enumerate_ball(self, radius: int):
        return [SgElement(self, p) for p in self._ball_payloads(radius)]

    def enumerate_elements(self) -> Iterator[SgElement]:
        for p in self.enumerate_payloads():
            yield SgElement(self, p)

    def sort_key(self, p: SgElement):
        return self._sort_key(p.payload)

    def right_reversibility_witness(self, p: SgElement, q: SgElement, bound: int):
        """Search the radius-``bound`` ball for (a, b) with a*p == b*q."""
        self.check_member(p)
        self.check_member(q)
        ball = self._ball_payloads(bound)
        left = {}
        for a in ball:
            c = self._compose(a, p.payload)
            if c not in left:
                left[c] = a
        for b in ball:
            c = self._compose(b, q.payload)
            if c in left:
                return SgElement(self, left[c]), SgElement(self, b)
        return None

    def factor_letters(self, p: SgElement):
        """Generator indices whose ordered product is p (used to extend
        generator-image tables to semigroup homomorphisms)."""
        raise NotImplementedError

    # -- unit normal form ---------------------------------------------------

    def unit_part(self, p: SgElement) -> SgElement:
        self.check_member(p)
        return self.identity

    def unit_normalize(self, p: SgElement):
        """Return (p*x, x) with x a unit making the unit part trivial."""
        return p, self.identity

    # -- formatting / serialization ------------------------------------------

    def format_element(self, p: SgElement) -> str:
        return repr(p.payload)

    def parse_element(self, text: str) -> SgElement:
        raise ParseError(f"{self.name} has no textual element syntax")

    def payload_to_json(self, payload):
        return list(payload) if isinstance(payload, tuple) else payload

    def payload_from_json(self, data):
        return self._normalize(tuple(data) if isinstance(data, list) else data)

    def element_to_json(self, p: SgElement):
        self.check_member(p)
        return self.payload_to_json(p.payload)

    def element_from_json(self, data) -> SgElement:
        return SgElement(self, self.payload_from_json(data))

    def describe(self) -> str:
        return self.name


def _check_free_over_values(semigroup, max_length):
    """Exhaustive relation search: distinct normal forms must take distinct
    numeric values up to ``max_length`` generator factors."""
    seen = {}
    for p in semigroup._ball_payloads(max_length):
        v = semigroup._value(p)
        if v in seen and seen[v] != p:
            raise RegistrationError(
                f"{semigroup.name}: generators are not free, "
                f"{seen[v]} and {p} both evaluate to {v}"
            )
        seen[v] = p


class FreeAbelianMonoid(Semigroup):
    """Free abelian monoid over named generators.

    Integer labels give multiplicative subsemigroups of Z^x such as |2,3>
    or |-2,3>; string labels give abstract copies of N^k.
    """

    def __init__(self, labels, check_length=6):
        if len(set(labels)) != len(labels):
            raise RegistrationError("duplicate generator labels")
        self.labels = tuple(labels)
        self.rank = len(self.labels)
        self.numeric = all(isinstance(v, int) for v in self.labels)
        gens = ",".join(str(v) for v in self.labels)
        self.name = f"|{gens}>" if self.numeric else f"FreeAbelian({gens})"
        if self.numeric:
            for v in self.labels:
                if v in (0, 1, -1):
                    raise RegistrationError(f"generator {v} is a unit or zero")
            _check_free_over_values(self, check_length)

    def _identity(self):
        return (0,) * self.rank

    def _compose(self, a, b):
        return kernels.vec_add(a, b)

    def _right_lcm(self, a, b):
        r = kernels.vec_max(a, b)
        return r, kernels.vec_sub_if_leq(a, r), kernels.vec_sub_if_leq(b, r)

    def _divides(self, a, b):
        return kernels.vec_sub_if_leq(a, b)

    def _generator_payloads(self):
        return [
            tuple(1 if j == i else 0 for j in range(self.rank))
            for i in range(self.rank)
        ]

    def _sort_key(self, payload):
        return (sum(payload), payload)

    def _normalize(self, payload):
        payload = tuple(int(e) for e in payload)
        if len(payload) != self.rank or any(e < 0 for e in payload):
            raise StructuralError(f"bad exponent vector {payload} for {self.name}")
        return payload

    def _ideal_complement_size(self, payload):
        if all(e == 0 for e in payload):
            return 0
        if self.rank == 1:
            return payload[0]
        return None

    def factor_letters(self, p: SgElement):
        self.check_member(p)
        out = []
        for i, e in enumerate(p.payload):
            out.extend([i] * e)
        return out

    def _value(self, payload) -> int:
        v = 1
        for base, e in zip(self.labels, payload):
            v *= base**e
        return v

    def value(self, p: SgElement) -> int:
        self.check_member(p)
        return self._value(p.payload)

    def from_exponents(self, exps) -> SgElement:
        return self.element(tuple(exps))

    def from_int(self, v: int) -> SgElement:
        exps = _factor_int_over(v, self.labels)
        if exps is None:
            raise ParseError(f"{v} is not an element of {self.name}")
        return self.element(exps)

    def format_element(self, p: SgElement) -> str:
        if self.numeric:
            return str(self._value(p.payload))
        if all(e == 0 for e in p.payload):
            return "1"
        return "*".join(
            f"{l}^{e}" if e > 1 else str(l)
            for l, e in zip(self.labels, p.payload)
            if e
        )

    def parse_element(self, text: str) -> SgElement:
        text = text.strip()
        if self.numeric:
            try:
                return self.from_int(int(text))
            except ValueError as exc:
                raise ParseError(f"expected an integer, got {text!r}") from exc
        try:
            return self.from_exponents(int(t) for t in text.split(","))
        except ValueError as exc:
            raise ParseError(f"expected comma-separated exponents, got {text!r}") from exc

    def payload_to_json(self, payload):
        return self._value(payload) if self.numeric else list(payload)

    def payload_from_json(self, data):
        if self.numeric:
            return self.from_int(data).payload
        return self._normalize(data)


def _factor_int_over(v, bases):
    """Exponents with prod(bases**e) == v, or None.  Search, not greedy:
    generator values need not be prime."""
    if v == 0:
        return None

    def rec(v, i):
        if i == len(bases):
            return () if v == 1 else None
        base = bases[i]
        e = 0
        rest = v
        while True:
            tail = rec(rest, i + 1)
            if tail is not None:
                return (e,) + tail
            if abs(rest) > 1 and rest % base == 0:
                rest //= base
                e += 1
            else:
                return None

    return rec(v, 0)


class SignedIntMonoid(Semigroup):
    """Multiplicative subsemigroup of Z^x generated by -1 and free integer
    generators, e.g. |-1,2,3>.  Unit group {1,-1}."""

    def __init__(self, labels, check_length=6):
        self.labels = tuple(labels)
        self.rank = len(self.labels)
        gens = ",".join(str(v) for v in self.labels)
        self.name = f"|-1,{gens}>"
        for v in self.labels:
            if v in (0, 1, -1):
                raise RegistrationError(f"generator {v} is a unit or zero")
        if len(set(abs(v) for v in self.labels)) != self.rank:
            raise RegistrationError("generator magnitudes must be distinct")
        _check_free_over_values(self, check_length)

    # payload: (sign, exponent tuple)

    def _identity(self):
        return (1, (0,) * self.rank)

    def _compose(self, a, b):
        return (a[0] * b[0], kernels.vec_add(a[1], b[1]))

    def _right_lcm(self, a, b):
        r = kernels.vec_max(a[1], b[1])
        return (
            (1, r),
            (a[0], kernels.vec_sub_if_leq(a[1], r)),
            (b[0], kernels.vec_sub_if_leq(b[1], r)),
        )

    def _divides(self, a, b):
        x = kernels.vec_sub_if_leq(a[1], b[1])
        return None if x is None else (a[0] * b[0], x)

    def _unit_payloads(self):
        return [self._identity(), (-1, (0,) * self.rank)]

    def _generator_payloads(self):
        zero = (0,) * self.rank
        gens = [(-1, zero)]
        for i in range(self.rank):
            gens.append((1, tuple(1 if j == i else 0 for j in range(self.rank))))
        return gens

    def _sort_key(self, payload):
        sign, exps = payload
        return (sum(exps) + (sign < 0), sum(exps), exps, sign < 0)

    def _normalize(self, payload):
        sign, exps = payload
        exps = tuple(int(e) for e in exps)
        if sign not in (1, -1) or len(exps) != self.rank or any(e < 0 for e in exps):
            raise StructuralError(f"bad signed payload {payload} for {self.name}")
        return (sign, exps)

    def _ideal_complement_size(self, payload):
        _, exps = payload
        if all(e == 0 for e in exps):
            return 0
        if self.rank == 1:
            return 2 * exps[0]
        return None

    def factor_letters(self, p: SgElement):
        self.check_member(p)
        sign, exps = p.payload
        out = [0] if sign < 0 else []
        for i, e in enumerate(exps):
            out.extend([i + 1] * e)
        return out

    def unit_part(self, p: SgElement) -> SgElement:
        self.check_member(p)
        return SgElement(self, (p.payload[0], (0,) * self.rank))

    def unit_normalize(self, p: SgElement):
        self.check_member(p)
        sign, exps = p.payload
        x = SgElement(self, (sign, (0,) * self.rank))  # sign is its own inverse
        return SgElement(self, (1, exps)), x

    def _value(self, payload) -> int:
        sign, exps = payload
        v = sign
        for base, e in zip(self.labels, exps):
            v *= base**e
        return v

    def value(self, p: SgElement) -> int:
        self.check_member(p)
        return self._value(p.payload)

    def from_int(self, v: int) -> SgElement:
        exps = _factor_int_over(abs(v), tuple(abs(l) for l in self.labels))
        if exps is None:
            raise ParseError(f"{v} is not an element of {self.name}")
        sign = 1 if v > 0 else -1
        signed = 1
        for base, e in zip(self.labels, exps):
            if base < 0 and e % 2:
                signed = -signed
        return self.element((sign * signed, exps))

    def format_element(self, p: SgElement) -> str:
        return str(self._value(p.payload))

    def parse_element(self, text: str) -> SgElement:
        try:
            return self.from_int(int(text.strip()))
        except ValueError as exc:
            raise ParseError(f"expected an integer, got {text!r}") from exc

    def payload_to_json(self, payload):
        return self._value(payload)

    def payload_from_json(self, data):
        return self.from_int(data).payload


class FreeMonoid(Semigroup):
    """Free monoid F_n^+ on a finite alphabet; elements are words."""

    def __init__(self, alphabet=("a", "b")):
        self.alphabet = tuple(alphabet)
        if any(len(c) != 1 for c in self.alphabet):
            raise RegistrationError("alphabet letters must be single characters")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise RegistrationError("duplicate letters")
        self.name = f"F_{len(self.alphabet)}^+"

    def _identity(self):
        return ""

    def _compose(self, a, b):
        return a + b

    def _right_lcm(self, a, b):
        if b.startswith(a):
            return b, b[len(a):], ""
        if a.startswith(b):
            return a, "", a[len(b):]
        return None

    def _divides(self, a, b):
        return b[len(a):] if b.startswith(a) else None

    def _generator_payloads(self):
        return list(self.alphabet)

    def _ball_payloads(self, radius):
        out = [""]
        for n in range(1, radius + 1):
            out.extend("".join(w) for w in itertools.product(self.alphabet, repeat=n))
        return out

    def _sort_key(self, payload):
        return (len(payload), tuple(self.alphabet.index(c) for c in payload))

    def _normalize(self, payload):
        if not isinstance(payload, str) or any(c not in self.alphabet for c in payload):
            raise StructuralError(f"bad word {payload!r} for {self.name}")
        return payload

    def _ideal_complement_size(self, payload):
        if payload == "":
            return 0
        if len(self.alphabet) == 1:
            return len(payload)
        return None

    def factor_letters(self, p: SgElement):
        self.check_member(p)
        return [self.alphabet.index(c) for c in p.payload]

    def from_word(self, word: str) -> SgElement:
        return self.element(word)

    def format_element(self, p: SgElement) -> str:
        return p.payload or "ε"

    def parse_element(self, text: str) -> SgElement:
        text = text.strip()
        if text in ("", "1", "ε", "e"):
            return self.identity
        return self.element(text)

    def payload_to_json(self, payload):
        return payload

    def payload_from_json(self, data):
        return self._normalize(data)


class GaussianIntMonoid(Semigroup):
    """Free abelian monoid of Gaussian integers generated by pairwise
    coprime non-units; elements are exponent vectors, their value the
    product in Z[i]."""

    def __init__(self, labels, check_length=4):
        # labels: (re, im) int pairs
        self.labels = tuple((int(a), int(b)) for a, b in labels)
        self.rank = len(self.labels)
        gens = ",".join(_format_gauss(v) for v in self.labels)
        self.name = f"Zi|{gens}>"
        for v in self.labels:
            if kernels.gauss_norm(*v) <= 1:
                raise RegistrationError(f"generator {_format_gauss(v)} is a unit or zero")
        for i in range(self.rank):
            for j in range(i + 1, self.rank):
                g = kernels.gauss_gcd(*self.labels[i], *self.labels[j])
                if kernels.gauss_norm(*g) != 1:
                    raise RegistrationError(
                        f"generators {_format_gauss(self.labels[i])} and "
                        f"{_format_gauss(self.labels[j])} share the factor {_format_gauss(g)}"
                    )
        _check_free_over_values(self, check_length)

    def _identity(self):
        return (0,) * self.rank

    def _compose(self, a, b):
        return kernels.vec_add(a, b)

    def _right_lcm(self, a, b):
        r = kernels.vec_max(a, b)
        return r, kernels.vec_sub_if_leq(a, r), kernels.vec_sub_if_leq(b, r)

    def _divides(self, a, b):
        return kernels.vec_sub_if_leq(a, b)

    def _generator_payloads(self):
        return [
            tuple(1 if j == i else 0 for j in range(self.rank))
            for i in range(self.rank)
        ]

    def _sort_key(self, payload):
        return (sum(payload), payload)

    def _normalize(self, payload):
        payload = tuple(int(e) for e in payload)
        if len(payload) != self.rank or any(e < 0 for e in payload):
            raise StructuralError(f"bad exponent vector {payload} for {self.name}")
        return payload

    def _ideal_complement_size(self, payload):
        if all(e == 0 for e in payload):
            return 0
        if self.rank == 1:
            return payload[0]
        return None

    def factor_letters(self, p: SgElement):
        self.check_member(p)
        out = []
        for i, e in enumerate(p.payload):
            out.extend([i] * e)
        return out

    def _value(self, payload):
        vr, vi = 1, 0
        for base, e in zip(self.labels, payload):
            for _ in range(e):
                vr, vi = kernels.gauss_mul(vr, vi, *base)
        return vr, vi

    def value(self, p: SgElement):
        self.check_member(p)
        return self._value(p.payload)

    def from_exponents(self, exps) -> SgElement:
        return self.element(tuple(exps))

    def from_value(self, value) -> SgElement:
        exps = _factor_gauss_over(tuple(value), self.labels)
        if exps is None:
            raise ParseError(f"{_format_gauss(value)} is not an element of {self.name}")
        return self.element(exps)

    def format_element(self, p: SgElement) -> str:
        return _format_gauss(self._value(p.payload))

    def parse_element(self, text: str) -> SgElement:
        return self.from_value(_parse_gauss(text))

    def payload_to_json(self, payload):
        return list(self._value(payload))

    def payload_from_json(self, data):
        return self.from_value(tuple(data)).payload


def _factor_gauss_over(v, bases):
    def rec(v, i):
        if i == len(bases):
            return () if v == (1, 0) else None
        e = 0
        rest = v
        while True:
            tail = rec(rest, i + 1)
            if tail is not None:
                return (e,) + tail
            nxt = kernels.gauss_exactdiv(*rest, *bases[i])
            if nxt is None or kernels.gauss_norm(*nxt) >= kernels.gauss_norm(*rest):
                return None
            rest = nxt
            e += 1

    return rec(tuple(v), 0)


def _format_gauss(v):
    re, im = v
    if im == 0:
        return str(re)
    if re == 0:
        return f"{im}i"
    return f"{re}{'+' if im > 0 else '-'}{abs(im)}i"


def _parse_gauss(text):
    text = text.strip().replace(" ", "")
    if "i" not in text:
        try:
            return int(text), 0
        except ValueError as exc:
            raise ParseError(f"bad Gaussian integer {text!r}") from exc
    body = text[:-1]  # strip the trailing i
    for k in range(len(body) - 1, 0, -1):
        if body[k] in "+-":
            try:
                return int(body[:k]), int(body[k:] or "1")
            except ValueError:
                continue
    try:
        if body in ("", "+"):
            return 0, 1
        if body == "-":
            return 0, -1
        return 0, int(body)
    except ValueError as exc:
        raise ParseError(f"bad Gaussian integer {text!r}") from exc
