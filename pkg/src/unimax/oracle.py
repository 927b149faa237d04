"""Brute-force ground truth for the classification, by exhaustive
permutation-group computation on catalog instances.

On any disagreement between the classifier and the enumeration, the
enumeration wins: it is the definition, the classifier is transcription.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from . import numtheory as nt
from .catalog import GroupInstance, build_instance
from .classifier import (
    classify,
    m_or_h_unique,
    ngr0_unique,
    or_h_nontrivial,
    weakly_subnormal_sylow,
)
from .groupspec import group_order
from .perm import conj, identity, is_identity, pmul
from .permgroup import (
    CosetAction,
    CosetTable,
    FeasibilityError,
    PermGroup,
    conjugacy_classes_of_overgroups,
    double_coset_data,
    frattini_small,
    intersection_small,
    is_solvable,
    maximal_overgroups,
    maximal_subgroups_small,
    min_coset_rep,
    normal_closure,
    normalizer_from_fixed_cosets,
    r_core_of_small,
    sylow_subgroup,
    trivial_group,
)


@dataclass(frozen=True)
class Bounds:
    name: str = "desk"
    max_group_order: int = 10**7
    max_cosets: int = 200_000
    time_budget_s: float = 60.0

    @classmethod
    def profile(cls, name: str) -> "Bounds":
        if name == "desk":
            return cls()
        if name == "stretch":
            return cls("stretch", 6 * 10**7, 400_000, 900.0)
        raise ValueError(f"unknown bounds profile {name!r}")


@dataclass
class MemberReport:
    order: int
    index: int
    gens: list
    core_free: bool | None = None
    or_h_order: int | None = None

    def to_json(self):
        return {
            "order": self.order,
            "index": self.index,
            "gens": [list(g) for g in self.gens],
            "core_free": self.core_free,
            "or_h_order": self.or_h_order,
        }


@dataclass
class OvergroupReport:
    instance: str
    r: int
    sylow_order: int
    members: list
    num_classes_rprime: int
    ngr_order: int
    ngr0_order: int | None
    unique: bool
    weakly_subnormal: bool
    ngr0_is_unique_member: bool
    or_h_order: int | None
    m_or_h_unique: bool | None
    invariants: dict = field(default_factory=dict)
    elapsed_s: float = 0.0

    def to_json(self, with_timing: bool = False):
        out = {
            "instance": self.instance,
            "r": self.r,
            "sylow_order": self.sylow_order,
            "members": [m.to_json() for m in self.members],
            "num_classes_rprime": self.num_classes_rprime,
            "ngr_order": self.ngr_order,
            "ngr0_order": self.ngr0_order,
            "unique": self.unique,
            "weakly_subnormal": self.weakly_subnormal,
            "ngr0_is_unique_member": self.ngr0_is_unique_member,
            "or_h_order": self.or_h_order,
            "m_or_h_unique": self.m_or_h_unique,
            "invariants": self.invariants,
        }
        if with_timing:
            out["elapsed_s"] = round(self.elapsed_s, 3)
        return out


def _socle_coset_perms(G: PermGroup, T: PermGroup, sub: PermGroup):
    """Permutations of the T-cosets of G induced by the generators of sub."""
    ct = CosetTable(G, T, 1024)
    out = []
    for g in sub.gens:
        out.append(tuple(ct.lookup[min_coset_rep(T, pmul(rep, g))] for rep in ct.reps))
    return out, ct.size


def socle_kernel(G: PermGroup, T: PermGroup, sub: PermGroup) -> PermGroup:
    """The kernel of sub acting on G/T, i.e. sub cap T."""
    if G.order == T.order:
        return sub
    perms, m = _socle_coset_perms(G, T, sub)
    deg = G.deg
    combined = [tuple(c) + tuple(m + x for x in g) for c, g in zip(perms, sub.gens)]
    C = PermGroup(combined, m + deg, known_order=sub.order, base_prefix=tuple(range(m)))
    kern_gens = [tuple(x - m for x in g[m:]) for lvl in C.levels[m:] for g in lvl.gens]
    import math

    korder = math.prod(len(lvl.tree) for lvl in C.levels[m:])
    return PermGroup(kern_gens, deg, known_order=korder)




def brute_M_R(
    instance: GroupInstance,
    r: int,
    bounds: Bounds = Bounds(),
    seed: int = 0,
    with_m_or_h: bool = True,
) -> OvergroupReport:
    """Enumerate M(R) and everything the corollaries talk about."""
    t0 = time.time()
    G, T = instance.group, instance.socle
    if G.order % r:
        raise ValueError(f"r = {r} does not divide |{instance.name}|")
    if G.order > bounds.max_group_order:
        raise FeasibilityError(
            f"|{instance.name}| = {G.order} exceeds {bounds.max_group_order}"
        )
    sylow_order = nt.rpart(G.order, r)
    if G.order // sylow_order > bounds.max_cosets:
        raise FeasibilityError(
            f"coset space {G.order // sylow_order} exceeds {bounds.max_cosets}"
        )
    R = sylow_subgroup(G, r, seed)
    assert R.order == sylow_order, "Sylow subgroup has the wrong order"

    reps, fixed, ct = double_coset_data(G, R, bounds.max_cosets)
    NGR = normalizer_from_fixed_cosets(G, R, fixed)
    members = maximal_overgroups(G, R, bounds.max_cosets, ct=ct)
    unique = len(members) == 1

    # R_0 = R cap T, as the kernel of R acting on G/T
    R0 = socle_kernel(G, T, R)
    direct_r0 = intersection_small(R, T, limit=2_000_000)
    assert R0.order == direct_r0.order and R0.is_subgroup_of(direct_r0)

    # N_G(R_0) via the fixed cosets of the R_0 coset space
    ngr0_order = None
    NGR0 = None
    if R0.order > 1:
        if R0.order == R.order and G.order == T.order:
            NGR0 = NGR
        else:
            idx0 = G.order // R0.order
            if idx0 <= bounds.max_cosets:
                _, fixed0, _ = double_coset_data(G, R0, bounds.max_cosets)
                NGR0 = normalizer_from_fixed_cosets(G, R0, fixed0)
        if NGR0 is not None:
            ngr0_order = NGR0.order

    num_classes = conjugacy_classes_of_overgroups(G, R, members, NGR)

    member_reports = []
    for H in members:
        mr = MemberReport(H.order, G.order // H.order, list(H.gens))
        if instance.spec is not None:
            mr.core_free = not T.is_subgroup_of(H)
        member_reports.append(mr)

    ws = False
    # None = not computable within bounds; False/True otherwise
    ngr0_is_member = None if (R0.order > 1 and NGR0 is None) else False
    or_h_order = None
    m_or_h = None
    H = members[0] if unique else None
    if unique:
        ws = H.order == NGR.order and NGR.is_subgroup_of(H)
        if NGR0 is not None:
            ngr0_is_member = H.order == NGR0.order and NGR0.is_subgroup_of(H)
        R_H = sylow_subgroup(H, r, seed)
        OrH = r_core_of_small(H, R_H, r)
        or_h_order = OrH.order
        member_reports[0].or_h_order = or_h_order
        # independent recomputation through the coset-action kernel
        if H.order // R_H.order <= 400:
            from .permgroup import core

            assert core(H, R_H, 500).order == or_h_order, "O_r(H) computations disagree"
        if with_m_or_h:
            if or_h_order == 1:
                m_or_h = False
            elif G.order // or_h_order <= bounds.max_cosets:
                M2 = maximal_overgroups(G, OrH, bounds.max_cosets)
                m_or_h = (
                    len(M2) == 1
                    and M2[0].order == H.order
                    and M2[0].is_subgroup_of(H)
                )

    inv = {}
    # Corollary: unique iff a single class of r'-index maximals
    if R0.order > 1:
        inv["cor2_4"] = unique == (num_classes == 1)
        # some member is core-free and contains N_G(R)
        if instance.spec is not None:
            inv["lemma2_3"] = any(
                m.core_free and NGR.is_subgroup_of(K)
                for m, K in zip(member_reports, members)
            )
        inv["cor2_5"] = (not unique) or (
            R.order // R0.order == G.order // T.order
        )
    else:
        inv["lemma2_2"] = len(members) >= 2
    if unique and NGR.order < G.order:
        ncl = normal_closure(G, R.gens)
        inv["lemma3_7"] = ncl.order == G.order
    if unique and ngr0_is_member and NGR0 is not None:
        inv["lemma8_1"] = check_lemma_equiv_parts(
            instance, r, H, R, R0, NGR, NGR0, bounds
        )["agree"]
    report_ngr0_member = bool(ngr0_is_member) if ngr0_is_member is not None else None

    report = OvergroupReport(
        instance.name,
        r,
        sylow_order,
        member_reports,
        num_classes,
        NGR.order,
        ngr0_order,
        unique,
        ws,
        report_ngr0_member,
        or_h_order,
        m_or_h,
        inv,
        time.time() - t0,
    )
    return report


def brute_weak_subnormal(instance: GroupInstance, r: int, bounds=Bounds(), seed=0) -> bool:
    rep = brute_M_R(instance, r, bounds, seed, with_m_or_h=False)
    return rep.weakly_subnormal


def check_lemma_equiv_parts(
    instance, r, H, R, R0, NGR, NGR0, bounds=Bounds()
) -> dict:
    """The four equivalent properties when M(R) = {H} and H = N_G(R_0):
    (i) N(R_0) = N(R); (ii) M(O_r(H)) = {H}; (iii) G = O_r(H) T;
    (iv) [R, H_0] <= R_0. Returns each and whether they agree."""
    G, T = instance.group, instance.socle
    out = {}
    out["i"] = NGR.order == NGR0.order and NGR.is_subgroup_of(NGR0)
    R_H = sylow_subgroup(H, r)
    OrH = r_core_of_small(H, R_H, r)
    if OrH.order == G.order:
        out["ii"] = False
    else:
        M2 = maximal_overgroups(G, OrH, bounds.max_cosets)
        out["ii"] = len(M2) == 1 and M2[0].order == H.order and M2[0].is_subgroup_of(H)
    join = PermGroup(list(OrH.gens) + list(T.gens), G.deg)
    out["iii"] = join.order == G.order
    # (iv) via the quotient H / R_0: images of R and H_0 must commute
    act = CosetAction(H, R0, max_cosets=20_000)
    H0 = socle_kernel(G, T, H)
    r_imgs = [act.apply(g) for g in R.gens]
    h0_imgs = [act.apply(g) for g in H0.gens]
    out["iv"] = all(pmul(a, b) == pmul(b, a) for a in r_imgs for b in h0_imgs)
    out["agree"] = len({out["i"], out["ii"], out["iii"], out["iv"]}) == 1
    return out


def check_lemma_equiv(instance: GroupInstance, r: int, bounds=Bounds(), seed=0) -> bool:
    """Drive the four-way equivalence check from scratch; True iff all
    four properties have the same truth value."""
    rep = brute_M_R(instance, r, bounds, seed, with_m_or_h=False)
    if not (rep.unique and rep.ngr0_is_unique_member):
        raise ValueError("equivalence check needs M(R) = {N_G(R_0)}")
    G, T = instance.group, instance.socle
    R = sylow_subgroup(G, r, seed)
    H = PermGroup(rep.members[0].gens, G.deg, rep.members[0].order)
    R0 = socle_kernel(G, T, R)
    _, fixed, ct = double_coset_data(G, R, bounds.max_cosets)
    NGR = normalizer_from_fixed_cosets(G, R, fixed)
    if R0.order == R.order and G.order == T.order:
        NGR0 = NGR
    else:
        _, fixed0, _ = double_coset_data(G, R0, bounds.max_cosets)
        NGR0 = normalizer_from_fixed_cosets(G, R0, fixed0)
    return check_lemma_equiv_parts(instance, r, H, R, R0, NGR, NGR0, bounds)["agree"]


# ------------------------------------------------------- section 3 checks


def check_coprime_lemma(G: PermGroup, N: PermGroup, K: PermGroup) -> bool:
    """K lies in a unique maximal subgroup of G = NK iff N is a p-group
    and K acts irreducibly on N/Phi(N). Verifies both sides agree."""
    import math

    assert math.gcd(N.order, K.order) == 1, "N and K must have coprime orders"
    assert N.order > 1
    lhs = len(maximal_overgroups(G, K, 100_000)) == 1

    pf = nt.is_prime_power(N.order)
    if pf is None:
        rhs = False
    else:
        Phi = frattini_small(N)
        quots = _quotient_cosets(N, Phi)
        rhs = _acts_irreducibly(quots, K, Phi)
    assert lhs == rhs, f"coprime lemma mismatch: unique={lhs}, irreducible={rhs}"
    return lhs


def _quotient_cosets(N: PermGroup, Phi: PermGroup):
    """Cosets of Phi in N as canonical-representative tuples."""
    phi_elems = Phi.elements()
    seen = {}
    for x in N.elements():
        key = min(pmul(p, x) for p in phi_elems)
        seen.setdefault(key, key)
    return sorted(seen)


def _acts_irreducibly(cosets, K: PermGroup, Phi: PermGroup) -> bool:
    """Is every nontrivial K-invariant subgroup of the (elementary abelian)
    quotient the whole quotient? Checked by spanning from each element."""
    phi_elems = Phi.elements()

    def canon(x):
        return min(pmul(p, x) for p in phi_elems)

    total = len(cosets)
    ident = canon(identity(K.deg))
    for v in cosets:
        if v == ident:
            continue
        span = {v, ident}
        changed = True
        while changed:
            changed = False
            snapshot = list(span)
            for x in snapshot:
                for y in snapshot:
                    z = canon(pmul(x, y))
                    if z not in span:
                        span.add(z)
                        changed = True
                for g in K.gens:
                    z = canon(conj(x, g))
                    if z not in span:
                        span.add(z)
                        changed = True
        if len(span) < total:
            return False
    return True


def check_rfrattini(G: PermGroup, r: int, limit: int = 10_000) -> bool:
    """D := preimage of Phi(G/O_r(G)) equals the intersection of all
    maximal subgroups of r'-index; also O_r(G/D) = Phi(G/D) = 1."""
    if G.order > limit:
        raise FeasibilityError(f"|G| = {G.order} exceeds {limit}")
    R = sylow_subgroup(G, r)
    OrG = r_core_of_small(G, R, r) if R.order > 1 else trivial_group(G.deg)
    act = CosetAction(G, OrG, max_cosets=limit)
    Q = act.image
    PhiQ = frattini_small(Q, limit)
    d_gens = list(OrG.gens) + [act.lift(g) for g in PhiQ.gens]
    D = PermGroup(d_gens, G.deg, known_order=OrG.order * PhiQ.order)

    maxes = maximal_subgroups_small(G, limit)
    rprime = [M for M in maxes if (G.order // M.order) % r]
    inter = G.elements(limit)
    for M in sorted(rprime, key=lambda M: M.order):
        inter = [x for x in inter if M.contains(x)]
    literal = PermGroup(
        [x for x in inter if not is_identity(x)], G.deg, known_order=len(inter)
    )
    equal = literal.order == D.order and D.is_subgroup_of(literal)

    # O_r(G/D) = Phi(G/D) = 1
    act2 = CosetAction(G, D, max_cosets=limit)
    QD = act2.image
    RQ = sylow_subgroup(QD, r)
    or_qd = r_core_of_small(QD, RQ, r) if RQ.order > 1 else trivial_group(QD.deg)
    assert or_qd.order == 1, "O_r(G/D) should be trivial"
    assert frattini_small(QD, limit).order == 1, "Phi(G/D) should be trivial"
    return equal


def check_thm39_two_primes(G: PermGroup, r: int, bounds=Bounds()) -> bool | None:
    """For r-soluble G with M(R) = {H} and R not normal: |G| has exactly
    two prime divisors. Returns None when the hypothesis fails."""
    if not is_solvable(G):
        return None
    R = sylow_subgroup(G, r)
    if R.order == 1 or R.order == G.order:
        return None
    _, fixed, ct = double_coset_data(G, R, bounds.max_cosets)
    NGR = normalizer_from_fixed_cosets(G, R, fixed)
    if NGR.order == G.order:
        return None  # R normal
    members = maximal_overgroups(G, R, bounds.max_cosets, ct=ct)
    if len(members) != 1:
        return None
    return len(nt.prime_divisors(G.order)) == 2


def oracle_maximal_sylow(instance: GroupInstance, r: int, bounds=Bounds(), seed=0) -> bool:
    """Concrete-path Sylow maximality: M(R) = {R}."""
    rep = brute_M_R(instance, r, bounds, seed, with_m_or_h=False)
    return rep.unique and rep.members[0].order == rep.sylow_order


# --------------------------------------------------------------- harness


@dataclass
class VerdictDiff:
    instance: str
    r: int
    status: str  # "ok" | "mismatch" | "skipped"
    classifier: dict
    oracle: dict | None
    expected: dict | None
    mismatches: list = field(default_factory=list)
    elapsed_s: float = 0.0

    def to_json(self):
        # timing is deliberately excluded: reports must be byte-identical
        # across runs with the same seed
        return {
            "schema": 1,
            "instance": self.instance,
            "r": self.r,
            "status": self.status,
            "classifier": self.classifier,
            "oracle": self.oracle,
            "expected": self.expected,
            "mismatches": self.mismatches,
        }


def load_manifest(path=None) -> dict:
    import importlib.resources as res

    try:
        import tomllib
    except ModuleNotFoundError:  # python 3.10
        import tomli as tomllib
    if path is None:
        data = res.files("unimax").joinpath("catalog.toml").read_bytes()
    else:
        with open(path, "rb") as fh:
            data = fh.read()
    return tomllib.loads(data.decode())


def _classifier_summary(spec, r):
    v = classify(spec, r)
    out = {
        "outcome": v.outcome,
        "overgroup_order": v.overgroup.order if v.overgroup else None,
        "row": v.overgroup.row if v.overgroup else None,
        "flags": v.flags,
        "ngr0": ngr0_unique(spec, r),
        "ws": weakly_subnormal_sylow(spec, r),
    }
    if v.is_unique:
        out["or_h"] = or_h_nontrivial(spec, r) != "No"
        out["m_or_h"] = m_or_h_unique(spec, r)
    else:
        out["or_h"] = None
        out["m_or_h"] = None
    return out


def verify_pair(name: str, r: int, bounds: Bounds, seed=0, expected=None) -> VerdictDiff:
    """Compare classifier, oracle and manifest expectation for one pair."""
    t0 = time.time()
    inst = build_instance(name)
    spec = inst.spec
    cls = _classifier_summary(spec, r)
    mismatches = []
    oracle_js = None
    status = "ok"
    try:
        rep = brute_M_R(inst, r, bounds, seed)
        oracle_js = rep.to_json()
        if (cls["outcome"] == "unique") != rep.unique:
            mismatches.append(
                f"outcome: classifier {cls['outcome']} vs oracle unique={rep.unique}"
            )
        if rep.unique and cls["overgroup_order"] is not None:
            if cls["overgroup_order"] != rep.members[0].order:
                mismatches.append(
                    f"overgroup order: classifier {cls['overgroup_order']} "
                    f"vs oracle {rep.members[0].order}"
                )
        if rep.ngr0_is_unique_member is not None:
            if cls["ngr0"] != rep.ngr0_is_unique_member:
                mismatches.append(
                    f"ngr0: classifier {cls['ngr0']} vs oracle {rep.ngr0_is_unique_member}"
                )
        if cls["ws"] != rep.weakly_subnormal:
            mismatches.append(
                f"weakly_subnormal: classifier {cls['ws']} vs oracle {rep.weakly_subnormal}"
            )
        if rep.unique:
            if cls["or_h"] != (rep.or_h_order > 1):
                mismatches.append(
                    f"or_h: classifier {cls['or_h']} vs oracle order {rep.or_h_order}"
                )
            if rep.m_or_h_unique is not None and cls["m_or_h"] != rep.m_or_h_unique:
                mismatches.append(
                    f"m_or_h: classifier {cls['m_or_h']} vs oracle {rep.m_or_h_unique}"
                )
        for key, val in rep.invariants.items():
            if val is not True:
                mismatches.append(f"invariant {key} failed")
    except FeasibilityError as exc:
        status = "skipped"
        oracle_js = {"skipped": str(exc)}

    if expected is not None:
        checks = [
            ("verdict", cls["outcome"]),
            ("overgroup_order", cls["overgroup_order"]),
            ("ngr0", cls["ngr0"]),
            ("ws", cls["ws"]),
            ("or_h", cls["or_h"]),
            ("m_or_h", cls["m_or_h"]),
        ]
        for key, got in checks:
            if key in expected and expected[key] != got:
                mismatches.append(f"manifest {key}: expected {expected[key]}, got {got}")
        if status != "skipped" and "classes" in expected:
            if expected["classes"] != oracle_js["num_classes_rprime"]:
                mismatches.append(
                    f"manifest classes: expected {expected['classes']}, "
                    f"got {oracle_js['num_classes_rprime']}"
                )

    if mismatches and status != "skipped":
        status = "mismatch"
    return VerdictDiff(name, r, status, cls, oracle_js, expected, mismatches, time.time() - t0)


def run_verification(
    manifest: dict,
    bounds: Bounds = Bounds(),
    jobs: int = 1,
    seed: int = 0,
    only: str | None = None,
) -> list[VerdictDiff]:
    """Run the full manifest; returns one VerdictDiff per (instance, r)."""
    tasks = []
    for entry in manifest["instance"]:
        name = entry["name"]
        if only and only not in name:
            continue
        for check in entry.get("check", []):
            if check.get("profile", "desk") == "stretch" and bounds.name == "desk":
                tasks.append((name, check["r"], check, True))
            else:
                tasks.append((name, check["r"], check, False))
    results = []
    if jobs > 1:
        import multiprocessing as mp

        with mp.Pool(jobs) as pool:
            args = [
                (name, r, bounds, seed, check, stretch_skip)
                for name, r, check, stretch_skip in tasks
            ]
            results = pool.starmap(_verify_task, args)
    else:
        for name, r, check, stretch_skip in tasks:
            results.append(_verify_task(name, r, bounds, seed, check, stretch_skip))
    return results


def _verify_task(name, r, bounds, seed, expected, stretch_skip):
    if stretch_skip:
        inst_spec = build_instance(name).spec
        cls = _classifier_summary(inst_spec, r)
        diff = VerdictDiff(
            name, r, "skipped", cls, {"skipped": "stretch profile only"}, expected
        )
        for key in ("verdict", "overgroup_order", "ngr0", "ws", "or_h", "m_or_h"):
            if key in expected and expected[key] != cls[
                key if key != "verdict" else "outcome"
            ]:
                diff.mismatches.append(
                    f"manifest {key}: expected {expected[key]}, got classifier"
                )
                diff.status = "mismatch"
        return diff
    return verify_pair(name, r, bounds, seed, expected)


def summarize(results: list[VerdictDiff]) -> dict:
    return {
        "total": len(results),
        "ok": sum(1 for d in results if d.status == "ok"),
        "skipped": sum(1 for d in results if d.status == "skipped"),
        "mismatch": sum(1 for d in results if d.status == "mismatch"),
    }


def report_lines(results: list[VerdictDiff]) -> str:
    return "\n".join(json.dumps(d.to_json(), sort_keys=True) for d in results)
