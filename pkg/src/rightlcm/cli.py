"""Command-line front end: TOML configs in, JSON reports out.

Exit codes: 0 all checks passed, 1 at least one check failed, 2
configuration or registration error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

try:
    import tomllib
except ImportError:  # Python 3.10
    import tomli as tomllib

from .errors import (
    ContractError,
    ParseError,
    RegistrationError,
    StructuralError,
    TruncationRequired,
)
from .monomials import monomial_from_json, monomial_to_json, mult
from .product_system import ProductSystem
from .regular import check_li_relations
from .reports import merge
from .semidirect import EMPTY_IDEAL
from .semigroups import DISJOINT
from .systems import make_sample_spec, make_system


def _emit(payload) -> None:
    json.dump(payload, sys.stdout, sort_keys=True, indent=2)
    sys.stdout.write("\n")


def _load_toml(path: str) -> dict:
    with open(path, "rb") as fh:
        return tomllib.load(fh)


def load_config(path: str):
    """Registered system + sampling spec from a TOML config."""
    cfg = _load_toml(path)
    if "system" not in cfg:
        raise ParseError(f"{path}: missing [system] table")
    spec = make_sample_spec(cfg.get("verify", {}))
    system = make_system(cfg["system"], register=True, reg_spec=spec)
    return system, spec, cfg


def _report_exit(report) -> int:
    _emit(report.to_json())
    return 0 if report.passed else 1


def cmd_verify(args) -> int:
    system, spec, _ = load_config(args.config)
    ps = ProductSystem(system)
    reports = [
        system.verify_axioms(spec),
        check_li_relations(system.semidirect(), spec),
        ps.check_nica_covariance(spec),
        ps.check_generator_relations(spec),
    ]
    return _report_exit(merge("verify", {"system": system.name, **spec.to_json()}, reports))


def cmd_lcm(args) -> int:
    system, _, _ = load_config(args.config)
    P = system.semigroup
    left = P.parse_element(args.left)
    right = P.parse_element(args.right)
    out = P.right_lcm(left, right)
    if out is DISJOINT:
        _emit({"kind": "disjoint"})
    else:
        _emit(
            {
                "kind": "meet",
                "r": P.element_to_json(out.r),
                "p_comp": P.element_to_json(out.p_comp),
                "q_comp": P.element_to_json(out.q_comp),
            }
        )
    return 0


def cmd_intersect(args) -> int:
    system, _, _ = load_config(args.config)
    sd = system.semidirect()
    left = sd.parse_element(args.left)
    right = sd.parse_element(args.right)
    out = sd.ideal_intersect(left, right)
    if out is EMPTY_IDEAL:
        _emit({"kind": "empty"})
    else:
        _emit({"kind": "principal", **sd.element_to_json(out.rep)})
    return 0


def cmd_mult(args) -> int:
    system, _, _ = load_config(args.config)
    with open(args.monomials, "r", encoding="utf-8") as fh:
        items = json.load(fh)
    factors = []
    for item in items:
        if isinstance(item, list) and len(item) == 4:
            item = {"g": item[0], "p": item[1], "q": item[2], "h": item[3]}
        factors.append(monomial_from_json(system, item))
    if not factors:
        raise ParseError("empty monomial list")
    product = factors[0]
    for m in factors[1:]:
        product = mult(product, m)
    _emit(monomial_to_json(product))
    return 0


def cmd_rep_check(args) -> int:
    system, spec, _ = load_config(args.config)
    if args.radius is not None:
        spec = dataclasses.replace(
            spec, p_radius=args.radius, window_p_radius=min(args.radius, 3)
        )
    return _report_exit(check_li_relations(system.semidirect(), spec))


def cmd_fock_check(args) -> int:
    system, spec, _ = load_config(args.config)
    if args.samples is not None:
        spec = dataclasses.replace(spec, pair_count=args.samples)
    ps = ProductSystem(system)
    reports = [ps.check_nica_covariance(spec), ps.check_generator_relations(spec)]
    return _report_exit(merge("fock", {"system": system.name, **spec.to_json()}, reports))


def cmd_ore_check(args) -> int:
    system, spec, _ = load_config(args.config)
    return _report_exit(system.semidirect().left_ore_sample(spec, bound=args.bound))


def cmd_morphism_check(args) -> int:
    from .morphisms import AdsMorphism

    cfg = _load_toml(args.morphism)
    if "morphism" not in cfg:
        raise ParseError(f"{args.morphism}: missing [morphism] table")
    mcfg = cfg["morphism"]
    spec = make_sample_spec(cfg.get("verify", {}))
    source = make_system(mcfg["source"]["system"], reg_spec=spec)
    target = make_system(mcfg["target"]["system"], reg_spec=spec)
    table = mcfg.get("phi_p", {})
    images = []
    for gen in source.semigroup.generators():
        key = source.semigroup.format_element(gen)
        text = table.get(key, key)
        images.append(target.semigroup.parse_element(str(text)))
    morphism = AdsMorphism(source, target, mcfg.get("phi_g", {"kind": "identity"}), images)
    reports = [
        morphism.check_morphism(spec),
        morphism.check_admissible(spec),
        morphism.eq31_check(spec),
        morphism.hom_surjectivity_injectivity(spec),
    ]
    return _report_exit(
        merge("morphism-check", {"morphism": morphism.name, **spec.to_json()}, reports)
    )


def cmd_report(args) -> int:
    system, spec, _ = load_config(args.config)
    ps = ProductSystem(system)
    reports = [
        system.verify_axioms(spec),
        check_li_relations(system.semidirect(), spec),
        ps.check_nica_covariance(spec),
        ps.check_generator_relations(spec),
        system.semidirect().left_ore_sample(spec),
    ]
    return _report_exit(merge("report", {"system": system.name, **spec.to_json()}, reports))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rightlcm",
        description="Exact verifiers for right LCM semigroup dynamics and their monomial algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **extra):
        sp = sub.add_parser(name)
        sp.add_argument("--config", required=True, help="TOML system config")
        sp.set_defaults(func=fn)
        return sp

    add("verify", cmd_verify)

    sp = add("lcm", cmd_lcm)
    sp.add_argument("--left", required=True)
    sp.add_argument("--right", required=True)

    sp = add("intersect", cmd_intersect)
    sp.add_argument("--left", required=True, help='semidirect element "g,p"')
    sp.add_argument("--right", required=True, help='semidirect element "h,q"')

    sp = add("mult", cmd_mult)
    sp.add_argument("--monomials", required=True, help="JSON file with monomial factors")

    sp = add("rep-check", cmd_rep_check)
    sp.add_argument("--radius", type=int, default=None)

    sp = add("fock-check", cmd_fock_check)
    sp.add_argument("--samples", type=int, default=None)

    sp = add("ore-check", cmd_ore_check)
    sp.add_argument("--bound", type=int, default=None)

    mp = sub.add_parser("morphism-check")
    mp.add_argument("--morphism", required=True, help="TOML morphism description")
    mp.set_defaults(func=cmd_morphism_check)

    add("report", cmd_report)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except RegistrationError as exc:
        payload = {"error": "registration-failed", "message": str(exc)}
        if exc.report is not None:
            payload["report"] = exc.report.to_json()
        _emit(payload)
        return 2
    except (ParseError, StructuralError, ContractError, TruncationRequired) as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)})
        return 2
    except (OSError, json.JSONDecodeError, KeyError, tomllib.TOMLDecodeError) as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)})
        return 2


if __name__ == "__main__":
    sys.exit(main())
