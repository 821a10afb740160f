"""Group families acted on by the semigroup dynamics.

All built-in groups are abelian and written multiplicatively in the public
API (op / inv / identity) even though the payloads are additive; payloads
are hashable normal forms so elements can key exact formal sums.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Iterator

from ._backend import kernels
from .errors import ParseError, StructuralError
from .semigroups import Semigroup, SgElement


@dataclass(frozen=True)
class GrpElement:
    group: "Group"
    payload: Any

    def __repr__(self):
        return self.group.format_element(self)


class Group:
    name = "group"
    is_finite = False

    def _id(self):
        raise NotImplementedError

    def _op(self, a, b):
        raise NotImplementedError

    def _inv(self, a):
        raise NotImplementedError

    def enumerate_payloads(self) -> Iterator[Any]:
        raise NotImplementedError

    def _sort_key(self, payload):
        raise NotImplementedError

    # -- public API ----------------------------------------------------------

    def element(self, payload) -> GrpElement:
        return GrpElement(self, self._normalize(payload))

    def _normalize(self, payload):
        return payload

    @property
    def identity(self) -> GrpElement:
        return GrpElement(self, self._id())

    def check_member(self, g: GrpElement):
        if not isinstance(g, GrpElement) or g.group is not self:
            raise StructuralError(f"element {g!r} does not belong to {self.name}")

    def op(self, g: GrpElement, h: GrpElement) -> GrpElement:
        self.check_member(g)
        self.check_member(h)
        return GrpElement(self, self._op(g.payload, h.payload))

    def inv(self, g: GrpElement) -> GrpElement:
        self.check_member(g)
        return GrpElement(self, self._inv(g.payload))

    def enumerate_elements(self) -> Iterator[GrpElement]:
        for p in self.enumerate_payloads():
            yield GrpElement(self, p)

    def sample(self, count: int):
        """Deterministic sample: the first ``count`` elements in canonical
        enumeration order (all of a finite group if smaller)."""
        return list(itertools.islice(self.enumerate_elements(), count))

    def sort_key(self, g: GrpElement):
        return self._sort_key(g.payload)

    def format_element(self, g: GrpElement) -> str:
        return repr(g.payload)

    def parse_element(self, text: str) -> GrpElement:
        raise ParseError(f"{self.name} has no textual element syntax")

    def payload_to_json(self, payload):
        return payload

    def payload_from_json(self, data):
        return self._normalize(data)

    def element_to_json(self, g: GrpElement):
        self.check_member(g)
        return self.payload_to_json(g.payload)

    def element_from_json(self, data) -> GrpElement:
        return GrpElement(self, self.payload_from_json(data))


class IntGroup(Group):
    name = "Z"

    def _id(self):
        return 0

    def _op(self, a, b):
        return a + b

    def _inv(self, a):
        return -a

    def _normalize(self, payload):
        if not isinstance(payload, int):
            raise StructuralError(f"expected an integer, got {payload!r}")
        return payload

    def enumerate_payloads(self):
        yield 0
        n = 0
        while True:
            n += 1
            yield n
            yield -n

    def _sort_key(self, payload):
        return (abs(payload), payload < 0)

    def format_element(self, g):
        return str(g.payload)

    def parse_element(self, text):
        try:
            return self.element(int(text.strip()))
        except ValueError as exc:
            raise ParseError(f"expected an integer, got {text!r}") from exc


class ResidueGroup(Group):
    is_finite = True

    def __init__(self, modulus: int):
        if modulus < 1:
            raise StructuralError("modulus must be positive")
        self.modulus = modulus
        self.name = f"Z/{modulus}"

    def _id(self):
        return 0

    def _op(self, a, b):
        return (a + b) % self.modulus

    def _inv(self, a):
        return (-a) % self.modulus

    def _normalize(self, payload):
        return int(payload) % self.modulus

    def enumerate_payloads(self):
        yield from range(self.modulus)

    def _sort_key(self, payload):
        return payload

    def format_element(self, g):
        return str(g.payload)

    def parse_element(self, text):
        try:
            return self.element(int(text.strip()))
        except ValueError as exc:
            raise ParseError(f"expected an integer, got {text!r}") from exc


class GaussianGroup(Group):
    name = "Z[i]"

    def _id(self):
        return (0, 0)

    def _op(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def _inv(self, a):
        return (-a[0], -a[1])

    def _normalize(self, payload):
        a, b = payload
        return (int(a), int(b))

    def enumerate_payloads(self):
        # square shells, each in reading order (top row first, rows
        # top-to-bottom, within a row left-to-right)
        yield (0, 0)
        s = 0
        while True:
            s += 1
            for a in range(-s, s + 1):
                yield (a, s)
            for b in range(s - 1, -s, -1):
                yield (-s, b)
                yield (s, b)
            for a in range(-s, s + 1):
                yield (a, -s)

    def _sort_key(self, payload):
        a, b = payload
        return (max(abs(a), abs(b)), -b, a)

    def format_element(self, g):
        from .semigroups import _format_gauss

        return _format_gauss(g.payload)

    def parse_element(self, text):
        from .semigroups import _parse_gauss

        return self.element(_parse_gauss(text))

    def payload_to_json(self, payload):
        return list(payload)

    def payload_from_json(self, data):
        return self._normalize(tuple(data))


class TrivialGroup(Group):
    name = "{1}"
    is_finite = True

    def _id(self):
        return ()

    def _op(self, a, b):
        return ()

    def _inv(self, a):
        return ()

    def _normalize(self, payload):
        return ()

    def enumerate_payloads(self):
        yield ()

    def _sort_key(self, payload):
        return 0

    def format_element(self, g):
        return "1"

    def parse_element(self, text):
        return self.identity

    def payload_to_json(self, payload):
        return 1

    def payload_from_json(self, data):
        return ()


class ShiftGroup(Group):
    """Finitely supported maps from a right LCM semigroup of positions
    into a base group, under pointwise operation.

    Payloads are tuples of (position payload, value payload) pairs sorted
    by position order, zero values dropped.
    """

    def __init__(self, base: Group, positions: Semigroup):
        self.base = base
        self.positions = positions
        self.name = f"sum_{positions.name}({base.name})"
        self._pos_cache: list = []
        self._pos_iter = positions.enumerate_payloads()

    def _position(self, i: int):
        while len(self._pos_cache) <= i:
            self._pos_cache.append(next(self._pos_iter))
        return self._pos_cache[i]

    def _id(self):
        return ()

    def _sorted(self, items):
        return tuple(
            sorted(items, key=lambda kv: self.positions._sort_key(kv[0]))
        )

    def _op(self, a, b):
        acc = dict(a)
        for pos, val in b:
            cur = acc.get(pos)
            new = self.base._op(cur, val) if cur is not None else val
            if new == self.base._id():
                acc.pop(pos, None)
            else:
                acc[pos] = new
        return self._sorted(acc.items())

    def _inv(self, a):
        return tuple((pos, self.base._inv(val)) for pos, val in a)

    def _normalize(self, payload):
        items = {}
        for pos, val in payload:
            val = self.base._normalize(val)
            if val != self.base._id():
                items[pos] = val
        return self._sorted(items.items())

    def from_support(self, support: dict) -> GrpElement:
        """Build an element from {position SgElement: base value payload}."""
        items = []
        for pos, val in support.items():
            self.positions.check_member(pos)
            items.append((pos.payload, val))
        return self.element(items)

    def value_at(self, g: GrpElement, pos) -> Any:
        self.check_member(g)
        self.positions.check_member(pos)
        for p, v in g.payload:
            if p == pos.payload:
                return v
        return self.base._id()

    def support(self, g: GrpElement):
        self.check_member(g)
        return [SgElement(self.positions, p) for p, _ in g.payload]

    def enumerate_payloads(self):
        yield ()
        seen = {()}
        nonzero_vals: list = []
        val_iter = (
            v for v in self.base.enumerate_payloads() if v != self.base._id()
        )
        stage = 0
        while True:
            stage += 1
            try:
                self._position(stage - 1)
            except StopIteration:
                pass
            while len(nonzero_vals) < stage:
                try:
                    nonzero_vals.append(next(val_iter))
                except StopIteration:
                    break
            npos = min(stage, len(self._pos_cache))
            if npos == 0 or not nonzero_vals:
                return
            batch = []
            for size in range(1, npos + 1):
                for combo in itertools.combinations(range(npos), size):
                    for vals in itertools.product(
                        range(len(nonzero_vals)), repeat=size
                    ):
                        f = tuple(
                            (self._pos_cache[i], nonzero_vals[v])
                            for i, v in zip(combo, vals)
                        )
                        if f not in seen:
                            seen.add(f)
                            batch.append(f)
            yield from batch

    def _sort_key(self, payload):
        return (
            len(payload),
            tuple(self.positions._sort_key(p) for p, _ in payload),
            tuple(self.base._sort_key(v) for _, v in payload),
        )

    def format_element(self, g):
        if not g.payload:
            return "0"
        pos_fmt = self.positions.format_element
        parts = [
            f"{v}@{pos_fmt(SgElement(self.positions, p))}" for p, v in g.payload
        ]
        return "+".join(parts)

    def payload_to_json(self, payload):
        return [
            [self.positions.payload_to_json(p), self.base.payload_to_json(v)]
            for p, v in payload
        ]

    def payload_from_json(self, data):
        return self._normalize(
            (self.positions.payload_from_json(p), self.base.payload_from_json(v))
            for p, v in data
        )
