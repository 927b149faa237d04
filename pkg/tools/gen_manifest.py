#!/usr/bin/env python3
"""Generate src/unimax/catalog.toml.

Runs the classifier and the brute-force oracle over every catalog entry
and freezes the agreed values as the regression manifest. Aborts on any
classifier/oracle disagreement: enumeration is ground truth and a
disagreement is a bug to fix, not a value to record.
"""

import subprocess
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from unimax import numtheory as nt
from unimax.catalog import build_instance
from unimax.oracle import Bounds, FeasibilityError, _classifier_summary, brute_M_R

# instance names, split into desk and stretch tiers
DESK = [
    "A5", "A6", "A7", "A8", "A9", "A10",
    "S5", "S6", "S7", "S8", "S9", "S10",
    "L2_4", "L2_5", "L2_7", "L2_8", "L2_9", "L2_11", "L2_13", "L2_16",
    "L2_17", "L2_19", "L2_23", "L2_25", "L2_27", "L2_31", "L2_32",
    "PGL2_5", "PGL2_7", "PGL2_9", "PGL2_13", "PGL2_17", "PGL2_23",
    "PGL2_25", "PGL2_31",
    "PSigmaL2_9", "M10", "L2_9.2^2",
    "PSigmaL2_25", "L2_25.2_3", "L2_25.2^2",
    "PSigmaL2_16", "L2_16.4",
    "L2_8.3", "L2_27.3", "L2_32.5",
    "L3_2", "L3_2.2", "L3_3", "L3_3.2",
    "L3_4", "PGL3_4", "PSigmaL3_4", "L3_4.2_3", "L3_4.2_1",
    "U3_3", "U3_3.2", "U3_4",
    "Sp6_2", "Sz8", "Sz8.3", "M11",
    "A11", "A12", "A13", "S11",
]
STRETCH = [
    "L2_81.2_3", "L2_81.2^2",
    "U3_8", "U3_8.3_d", "U3_8.3_f", "U3_8.3_df", "U3_8.3^2",
]


def primes_for(inst):
    return nt.prime_divisors(inst.group.order)


def toml_quote(s):
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def fmt(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        raise ValueError("unrepresentable")
    if isinstance(v, int):
        return str(v)
    return toml_quote(v)


def main():
    git_hash = subprocess.run(
        ["git", "rev-parse", "--short", "HEAD"], capture_output=True, text=True
    ).stdout.strip()
    bounds = Bounds.profile("desk")
    lines = [
        "# Frozen cross-validation manifest: expected classifier verdicts and",
        "# oracle-derived regression values per (instance, r).",
        f'# produced at commit {git_hash}; regenerate with tools/gen_manifest.py',
        "schema = 1",
        f'produced_at = "{git_hash}"',
    ]
    total_pairs = 0
    t_start = time.time()
    for tier, names in (("desk", DESK), ("stretch", STRETCH)):
        for name in names:
            inst = build_instance(name)
            spec = inst.spec
            lines.append("")
            lines.append("[[instance]]")
            lines.append(f"name = {toml_quote(name)}")
            lines.append(f"order = {inst.group.order}")
            for r in primes_for(inst):
                t0 = time.time()
                cls = _classifier_summary(spec, r)
                oracle_status = "full"
                classes = None
                if tier == "stretch":
                    oracle_status = "stretch"
                else:
                    try:
                        rep = brute_M_R(inst, r, bounds)
                        # ground truth comparison: abort on any disagreement
                        assert (cls["outcome"] == "unique") == rep.unique, (
                            name, r, cls["outcome"], rep.unique,
                            [m.order for m in rep.members],
                        )
                        if rep.unique and cls["overgroup_order"] is not None:
                            assert cls["overgroup_order"] == rep.members[0].order, (
                                name, r, cls["overgroup_order"], rep.members[0].order
                            )
                        if rep.ngr0_is_unique_member is not None:
                            assert cls["ngr0"] == rep.ngr0_is_unique_member, (
                                name, r, "ngr0", cls["ngr0"], rep.ngr0_is_unique_member
                            )
                        assert cls["ws"] == rep.weakly_subnormal, (
                            name, r, "ws", cls["ws"], rep.weakly_subnormal
                        )
                        if rep.unique:
                            assert cls["or_h"] == (rep.or_h_order > 1), (
                                name, r, "or_h", cls["or_h"], rep.or_h_order
                            )
                            if rep.m_or_h_unique is not None:
                                assert cls["m_or_h"] == rep.m_or_h_unique, (
                                    name, r, "m_or_h", cls["m_or_h"], rep.m_or_h_unique
                                )
                        for k, val in rep.invariants.items():
                            assert val is True, (name, r, "invariant", k)
                        classes = rep.num_classes_rprime
                    except FeasibilityError as exc:
                        oracle_status = "skip"
                total_pairs += 1
                lines.append("")
                lines.append("[[instance.check]]")
                lines.append(f"r = {r}")
                lines.append(f'verdict = {toml_quote(cls["outcome"])}')
                if cls["overgroup_order"] is not None:
                    lines.append(f"overgroup_order = {cls['overgroup_order']}")
                if cls["row"] is not None:
                    lines.append(f"row = {toml_quote(cls['row'])}")
                lines.append(f"ngr0 = {fmt(cls['ngr0'])}")
                lines.append(f"ws = {fmt(cls['ws'])}")
                if cls["or_h"] is not None:
                    lines.append(f"or_h = {fmt(cls['or_h'])}")
                if cls["m_or_h"] is not None:
                    lines.append(f"m_or_h = {fmt(cls['m_or_h'])}")
                if classes is not None:
                    lines.append(f"classes = {classes}")
                if oracle_status != "full":
                    lines.append(f'profile = {toml_quote("stretch" if oracle_status == "stretch" else "desk")}')
                    lines.append(f'oracle = {toml_quote(oracle_status)}')
                print(
                    f"{name:14s} r={r:<3d} {cls['outcome']:<11s} "
                    f"oracle={oracle_status:<7s} {time.time() - t0:6.1f}s",
                    flush=True,
                )
    out = Path(__file__).resolve().parents[1] / "src" / "unimax" / "catalog.toml"
    out.write_text("\n".join(lines) + "\n")
    print(f"\nwrote {out} with {total_pairs} checks in {time.time() - t_start:.0f}s")


if __name__ == "__main__":
    main()
