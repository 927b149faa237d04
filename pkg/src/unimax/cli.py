"""Batch command-line frontend: classify, oracle, verify, catalog."""

from __future__ import annotations

import argparse
import json
import os
import sys

from .catalog import build_instance, catalog_names
from .classifier import (
    classify,
    m_or_h_unique,
    maximal_sylow,
    ngr0_unique,
    or_h_nontrivial,
    weakly_subnormal_sylow,
)
from .groupspec import GroupSpec, OuterLabel
from .oracle import (
    Bounds,
    FeasibilityError,
    brute_M_R,
    load_manifest,
    report_lines,
    run_verification,
    summarize,
)

SCHEMA_VERSION = 1


def _emit(payload, args) -> None:
    payload = {"schema": SCHEMA_VERSION, **payload}
    text = json.dumps(payload, sort_keys=True, indent=None, separators=(",", ":"))
    if args.output and args.output != "-":
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _fail(code: int, reason: str) -> int:
    print(f"error:{reason}", file=sys.stderr)
    return code


def _spec_from_args(args) -> GroupSpec:
    if args.name_instance:
        inst = build_instance(args.name_instance)
        if inst.spec is None:
            raise ValueError(f"instance {args.name_instance} is not almost simple")
        return inst.spec
    outer = OuterLabel() if args.outer in (None, "1") else OuterLabel(args.outer, args.outer_order)
    q = None
    if args.p is not None:
        q = args.p ** (args.f or 1)
    elif args.q is not None:
        q = args.q
    return GroupSpec(args.family, args.n, q, outer, args.sporadic)


def cmd_classify(args) -> int:
    try:
        spec = _spec_from_args(args)
        r = args.r
        v = classify(spec, r)
    except (ValueError, KeyError) as exc:
        return _fail(2, f"invalid-spec: {exc}")
    payload = v.to_json(spec, r)
    if v.is_unique:
        payload["ngr0_unique"] = ngr0_unique(spec, r)
        payload["weakly_subnormal"] = weakly_subnormal_sylow(spec, r)
        payload["or_h_nontrivial"] = or_h_nontrivial(spec, r)
        payload["m_or_h_unique"] = m_or_h_unique(spec, r)
    payload["maximal_sylow"] = maximal_sylow(spec, r)
    _emit(payload, args)
    return 0


def cmd_oracle(args) -> int:
    try:
        inst = build_instance(args.instance)
    except KeyError as exc:
        return _fail(2, f"unknown-instance: {exc}")
    bounds = Bounds.profile(args.profile)
    try:
        rep = brute_M_R(inst, args.r, bounds, seed=args.seed)
    except ValueError as exc:
        return _fail(2, f"invalid-request: {exc}")
    except FeasibilityError as exc:
        return _fail(3, f"infeasible: {exc}")
    _emit(rep.to_json(with_timing=True), args)
    return 0


def cmd_verify(args) -> int:
    try:
        manifest = load_manifest(args.manifest)
    except Exception as exc:
        return _fail(2, f"manifest-error: {exc}")
    bounds = Bounds.profile(args.profile)
    results = run_verification(
        manifest, bounds, jobs=args.jobs, seed=args.seed, only=args.only
    )
    summary = summarize(results)
    lines = report_lines(results)
    if args.output and args.output != "-":
        with open(args.output, "w") as fh:
            fh.write(lines + "\n")
    elif args.format == "json":
        print(lines)
    if args.format == "table":
        widths = "{:<14} {:>3} {:>9} {}"
        print(widths.format("instance", "r", "status", "mismatches"))
        for d in results:
            print(widths.format(d.instance, d.r, d.status, "; ".join(d.mismatches)))
    print(
        f"verify: {summary['ok']} ok, {summary['skipped']} skipped, "
        f"{summary['mismatch']} mismatches",
        file=sys.stderr,
    )
    return 1 if summary["mismatch"] else 0


def cmd_catalog(args) -> int:
    if args.describe:
        try:
            inst = build_instance(args.describe)
        except KeyError as exc:
            return _fail(2, f"unknown-instance: {exc}")
        payload = {
            "name": inst.name,
            "order": inst.group.order,
            "degree": inst.deg,
            "socle_order": inst.socle.order,
            "spec": inst.spec.to_json() if inst.spec else None,
        }
        _emit(payload, args)
        return 0
    _emit({"instances": catalog_names()}, args)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="unimax",
        description="Unique maximal overgroups of Sylow subgroups: "
        "classifier, brute-force oracle, verification harness.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(parser):
        parser.add_argument("--seed", type=int, default=0,
                            help="seed for randomized searches")
        parser.add_argument("--output", default="-",
                            help="output path (default stdout)")

    c = sub.add_parser("classify", help="classify a (GroupSpec, r) pair")
    common(c)
    c.add_argument("--family", choices=["Alt", "L", "U", "Sp", "O", "O+", "O-", "2B2",
                                        "2G2", "2F4", "3D4", "G2", "F4", "E6", "2E6",
                                        "E7", "E8", "Spor"])
    c.add_argument("--n", type=int)
    c.add_argument("--p", type=int, help="field characteristic")
    c.add_argument("--f", type=int, help="field degree (q = p^f)")
    c.add_argument("--q", type=int, help="field size directly")
    c.add_argument("--outer", default="1", help="outer label tag (1, d, f, df, d*f, g, gf, S)")
    c.add_argument("--outer-order", type=int, default=2)
    c.add_argument("--sporadic", help="sporadic group name for --family Spor")
    c.add_argument("--name", dest="name_instance", help="catalog instance shortcut")
    c.add_argument("--r", type=int, required=True)
    c.set_defaults(func=cmd_classify)

    o = sub.add_parser("oracle", help="brute-force M(R) for a catalog instance")
    common(o)
    o.add_argument("--instance", required=True)
    o.add_argument("--r", type=int, required=True)
    o.add_argument("--profile", default=os.environ.get("UNIMAX_PROFILE", "desk"))
    o.set_defaults(func=cmd_oracle)

    v = sub.add_parser("verify", help="run the manifest cross-validation")
    common(v)
    v.add_argument("--manifest", default=None, help="path to catalog.toml (default: packaged)")
    v.add_argument("--profile", default=os.environ.get("UNIMAX_PROFILE", "desk"))
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--only", help="substring filter on instance names")
    v.add_argument("--format", choices=["json", "table"], default="json")
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("catalog", help="list or describe catalog instances")
    common(g)
    g.add_argument("--describe", help="instance name to describe")
    g.set_defaults(func=cmd_catalog)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
