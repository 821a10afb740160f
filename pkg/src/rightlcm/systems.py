"""Built-in system catalog and TOML-config construction."""

from __future__ import annotations

from .dynamics import (
    DynamicalSystem,
    GaussMultSystem,
    IntMultSystem,
    ResidueMultSystem,
    ShiftSystem,
    TrivialSystem,
)
from .errors import ParseError
from .groups import IntGroup, ResidueGroup, ShiftGroup
from .sampling import SampleSpec
from .semigroups import (
    FreeAbelianMonoid,
    FreeMonoid,
    GaussianIntMonoid,
    Semigroup,
    SignedIntMonoid,
)

_LETTERS = "abcdefghijklmnopqrstuvwxyz"


def make_semigroup(cfg: dict) -> Semigroup:
    kind = cfg.get("kind")
    if kind == "free-abelian":
        if "generators" in cfg:
            return FreeAbelianMonoid(cfg["generators"])
        rank = int(cfg.get("rank", 1))
        return FreeAbelianMonoid(list(_LETTERS[:rank]))
    if kind == "free-monoid":
        if "alphabet" in cfg:
            return FreeMonoid(list(cfg["alphabet"]))
        rank = int(cfg.get("rank", 2))
        return FreeMonoid(list(_LETTERS[:rank]))
    raise ParseError(f"unknown semigroup kind {kind!r}")


def make_system(cfg: dict, register=True, reg_spec=None) -> DynamicalSystem:
    kind = cfg.get("kind")
    kw = {"register": register, "reg_spec": reg_spec}
    if kind == "int-mult":
        gens = list(cfg.get("generators", []))
        signed = -1 in gens or cfg.get("signed", False)
        free = [g for g in gens if g != -1]
        semigroup = SignedIntMonoid(free) if signed else FreeAbelianMonoid(free)
        group_cfg = cfg.get("group")
        if group_cfg and group_cfg.get("kind") == "cyclic":
            return ResidueMultSystem(
                semigroup, ResidueGroup(int(group_cfg["order"])), **kw
            )
        return IntMultSystem(semigroup, **kw)
    if kind == "gauss-mult":
        gens = [tuple(g) for g in cfg.get("generators", [])]
        return GaussMultSystem(GaussianIntMonoid(gens), **kw)
    if kind == "shift":
        semigroup = make_semigroup(cfg.get("semigroup", {"kind": "free-abelian", "rank": 1}))
        base_cfg = cfg.get("base_group", {"kind": "cyclic", "order": 2})
        if base_cfg.get("kind") == "cyclic":
            base = ResidueGroup(int(base_cfg["order"]))
        elif base_cfg.get("kind") == "integers":
            base = IntGroup()
        else:
            raise ParseError(f"unknown base group {base_cfg!r}")
        return ShiftSystem(semigroup, ShiftGroup(base, semigroup), **kw)
    if kind == "trivial-group":
        semigroup_cfg = cfg.get("semigroup", {"kind": "free-monoid", "rank": 2})
        return TrivialSystem(make_semigroup(semigroup_cfg), **kw)
    raise ParseError(f"unknown system kind {kind!r}")


def make_sample_spec(cfg: dict) -> SampleSpec:
    return SampleSpec(
        p_radius=int(cfg.get("p_ball", 3)),
        g_count=int(cfg.get("g_samples", 50)),
        pair_count=int(cfg.get("pairs", 200)),
        vector_count=int(cfg.get("vectors", 25)),
        window_g_count=int(cfg.get("window_g", 8)),
        window_p_radius=int(cfg.get("window_ball", 2)),
        seed=int(cfg.get("seed", 0)),
    )


# -- catalog used by the test suite ------------------------------------------------


def z_times(*gens) -> DynamicalSystem:
    """(Z, |gens>, multiplication); -1 among the generators turns on the
    sign component."""
    return make_system({"kind": "int-mult", "generators": list(gens)})


def gauss_system(gens=((1, 1), (3, 0))) -> DynamicalSystem:
    return make_system({"kind": "gauss-mult", "generators": [list(g) for g in gens]})


def toeplitz_shift(order=2) -> DynamicalSystem:
    """Shift of Z/order along N: the Toeplitz-type system."""
    return make_system(
        {
            "kind": "shift",
            "semigroup": {"kind": "free-abelian", "rank": 1},
            "base_group": {"kind": "cyclic", "order": order},
        }
    )


def free_shift(order=2, rank=2) -> DynamicalSystem:
    """Shift of Z/order along the free monoid on ``rank`` letters."""
    return make_system(
        {
            "kind": "shift",
            "semigroup": {"kind": "free-monoid", "rank": rank},
            "base_group": {"kind": "cyclic", "order": order},
        }
    )


def trivial_over_free(rank=2) -> DynamicalSystem:
    return make_system(
        {"kind": "trivial-group", "semigroup": {"kind": "free-monoid", "rank": rank}}
    )


def trivial_over_abelian(rank=2) -> DynamicalSystem:
    return make_system(
        {"kind": "trivial-group", "semigroup": {"kind": "free-abelian", "rank": rank}}
    )


def sign_action() -> DynamicalSystem:
    """(Z, {1,-1}, multiplication): the semigroup is a group."""
    return make_system({"kind": "int-mult", "generators": [-1]})


def standard_systems() -> dict:
    """The systems every cross-module property suite runs over."""
    return {
        "Z|2,3>": z_times(2, 3),
        "Z|-1,2,3>": z_times(-1, 2, 3),
        "Zi|1+i,3>": gauss_system(),
        "T2-shift": toeplitz_shift(2),
        "F2-shift": free_shift(2, 2),
    }
