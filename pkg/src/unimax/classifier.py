"""The classification: which (G, r) have a unique maximal overgroup of a
Sylow r-subgroup, which overgroup it is, and the weak-subnormality /
r-core corollary predicates.

Each lookup-table row is a predicate function; every numeric side
condition is evaluated by numtheory helpers and logged into a replayable
trace. At most one row may fire per (G, r): a double fire is a hard
internal error, never a tie-break.
"""

from __future__ import annotations

import math

from . import numtheory as nt
from .numtheory import PrimeShape, PrimePowerQ
from .groupspec import (
    GroupSpec,
    NOT_UNIQUE,
    OvergroupDesc,
    TraceEntry,
    UNIQUE,
    Verdict,
    group_order,
    iso_presentations,
    normalize,
    socle_order,
)


class Ctx:
    """Trace-collecting evaluation context for one (spec, r) query."""

    def __init__(self, spec: GroupSpec, r: int):
        self.spec = spec
        self.r = r
        self.trace: list[TraceEntry] = []
        self.flags: list[str] = []

    def log(self, cond: str, value, **operands):
        self.trace.append(TraceEntry(cond, value, dict(operands)))
        return value

    # ---- logged numeric predicates

    def alpha(self, m: int, eps: int) -> bool:
        v = nt.alpha_cond(m, eps, self.spec.pq, self.r)
        return self.log("alpha", v, m=m, eps=eps, q=self.spec.q, r=self.r)

    def beta(self, m: int, eps: int) -> bool:
        v = nt.beta_cond(m, eps, self.spec.pq, self.r)
        return self.log("beta", v, m=m, eps=eps, q=self.spec.q, r=self.r)

    def square_mod(self, a: int, p: int) -> bool:
        v = nt.is_square_mod(a, p)
        return self.log("square_mod", v, a=a, p=p)

    def sylow_order(self) -> int:
        v = nt.rpart(group_order(self.spec), self.r)
        return self.log("sylow_order", v, r=self.r)

    def socle_sylow_order(self) -> int:
        v = nt.rpart(socle_order(self.spec), self.r)
        return self.log("socle_sylow_order", v, r=self.r)

    def dq(self) -> int:
        v = nt.mult_order(self.spec.q, self.r)
        return self.log("d_q(r)", v, q=self.spec.q, r=self.r)

    def in_scriptP(self) -> bool:
        v = nt.in_scriptP(self.r)
        return self.log("in_scriptP", v, r=self.r)

    def prime_shape(self, n: int) -> PrimeShape:
        v = nt.prime_shape(n)
        self.log("prime_shape", v.value, n=n)
        return v


def replay_trace_entry(entry: TraceEntry):
    """Recompute a trace entry's value from its operands (None if the
    condition kind is not independently replayable)."""
    ops = entry.operands
    if entry.cond == "alpha":
        return nt.alpha_cond(ops["m"], ops["eps"], PrimePowerQ.from_q(ops["q"]), ops["r"])
    if entry.cond == "beta":
        return nt.beta_cond(ops["m"], ops["eps"], PrimePowerQ.from_q(ops["q"]), ops["r"])
    if entry.cond == "square_mod":
        return nt.is_square_mod(ops["a"], ops["p"])
    if entry.cond == "d_q(r)":
        return nt.mult_order(ops["q"], ops["r"])
    if entry.cond == "in_scriptP":
        return nt.in_scriptP(ops["r"])
    if entry.cond == "prime_shape":
        return nt.prime_shape(ops["n"]).value
    return None


# ------------------------------------------------------- outer-label flags


def leq_psigmal2(spec: GroupSpec) -> bool:
    """G <= PSigmaL2(q) = T.<field>."""
    return spec.outer.tag in ("1", "f")


def is_pgl2(spec: GroupSpec) -> bool:
    return spec.outer.tag == "d" and spec.outer.order == 2


def leq_pgammal(spec: GroupSpec) -> bool:
    """G <= PGammaL_n(q): no graph automorphism involved."""
    return spec.outer.tag not in ("g", "gf")


def leq_pgammasp4(spec: GroupSpec) -> bool:
    """G <= PGammaSp4(q) (q even): no extraordinary graph part."""
    return spec.outer.tag not in ("g", "gf")


def leq_po_plus(spec: GroupSpec) -> bool:
    """G <= PO+_n(q) = T.<reflection>: no diagonal part."""
    return spec.outer.tag in ("1", "g")


def leq_t_phi_minus(spec: GroupSpec) -> bool:
    """G <= T.<phi> for O-_n(q): inner, field and graph-field parts only."""
    return spec.outer.tag in ("1", "f", "gf")


def _is_power_of(n: int, b: int) -> bool:
    if n < 1:
        return False
    while n % b == 0:
        n //= b
    return n == 1


def _is_2power_plus1(n: int):
    """n = 2^k + 1 -> k, else None."""
    k = (n - 1).bit_length() - 1
    return k if n >= 2 and 2**k == n - 1 else None


def _is_rpower_plus1(n: int, r: int):
    m = n - 1
    k = 0
    while m % r == 0:
        m //= r
        k += 1
    return k if m == 1 and k >= 1 else None


# ------------------------------------------------------------- order data


def gl_order(n: int, q: int) -> int:
    v = q ** (n * (n - 1) // 2)
    for i in range(1, n + 1):
        v *= q**i - 1
    return v


def gu_order(n: int, q: int) -> int:
    v = q ** (n * (n - 1) // 2)
    for i in range(1, n + 1):
        v *= q**i - (-1) ** i
    return v


# ---------------------------------------------------------------- precheck


def precheck(spec: GroupSpec, r: int, ctx: Ctx | None = None) -> Verdict | None:
    """The immediate NotUnique cases: r'-socle (so R_0 = 1) or a socle
    quotient that is not an r-group."""
    if not nt.is_prime(r):
        raise ValueError(f"r = {r} is not prime")
    ctx = ctx or Ctx(spec, r)
    t_order = socle_order(spec)
    g_order = t_order * spec.outer.order
    if not ctx.log("r_divides_G", g_order % r == 0, r=r):
        return Verdict(NOT_UNIQUE, trace=ctx.trace, flags=ctx.flags)
    if not ctx.log("r_divides_socle", t_order % r == 0, r=r):
        # R_0 = 1: |M(R)| >= 2 always
        return Verdict(NOT_UNIQUE, trace=ctx.trace, flags=ctx.flags)
    if not ctx.log("outer_is_r_group", spec.outer.is_r_group(r), outer=spec.outer.order, r=r):
        return Verdict(NOT_UNIQUE, trace=ctx.trace, flags=ctx.flags)
    return None


# ------------------------------------------------------------ table A rows


def _rows_r2(ctx: Ctx):
    """Fired rows for r = 2 (after precheck): alternating + 2B2 + Table A."""
    spec, out = ctx.spec, []
    fam, n, q = spec.family, spec.n, spec.q

    if fam == "Alt":
        k = _is_2power_plus1(n)
        if ctx.log("n_eq_2^k+1", k is not None and k >= 2, n=n, k=k):
            sym = spec.outer.tag == "S"
            h = math.factorial(n - 1) // (1 if sym else 2)
            out.append(
                OvergroupDesc(
                    "Alt2:Sn-1",
                    f"{'S' if sym else 'A'}_{n - 1}",
                    order=h,
                    socle_part_order=math.factorial(n - 1) // 2,
                )
            )
        return out

    if fam == "Spor":
        ctx.log("sporadic_r2", False, note="no sporadic case with r = 2")
        return out

    if fam == "2B2":
        # G = T since G/T is a 2-group and Out is odd
        h0 = q * q * (q - 1)
        out.append(OvergroupDesc("2B2:2:Borel", f"[{q}^2]:{q - 1} Borel", h0, h0))
        return out

    p, f = spec.p, spec.f
    if fam == "L" and n == 2:
        r0 = ctx.socle_sylow_order()
        if p == 2:
            h0 = q * (q - 1)
            out.append(
                OvergroupDesc("TableA:L2:P1", "P_1 Borel", h0 * spec.outer.order, h0)
            )
            return out
        if q == 5:
            h0 = 12
            out.append(
                OvergroupDesc(
                    "TableA:L2:C6q5", "2^{1+2}_-.O_2^-(2)", h0 * spec.outer.order, h0
                )
            )
            return out
        if q % 4 == 1 and q >= 9:
            cond = (f > 1 and _is_power_of(f, 2) and not leq_psigmal2(spec)) or (
                f == 1 and (r0 >= 16 or (r0 == 8 and is_pgl2(spec)))
            )
            if ctx.log("TableA:L2:GL1wrS2", cond, q=q, f=f, R0=r0, outer=spec.outer.tag):
                h0 = q - 1
                out.append(
                    OvergroupDesc(
                        "TableA:L2:GL1wrS2", "GL_1(q) wr S_2", h0 * spec.outer.order, h0
                    )
                )
        if q % 4 == 3 and f == 1:
            cond = r0 >= 16 or (r0 == 8 and is_pgl2(spec))
            if ctx.log("TableA:L2:GL1(q^2)", cond, q=q, R0=r0, outer=spec.outer.tag):
                h0 = q + 1
                out.append(
                    OvergroupDesc(
                        "TableA:L2:GL1(q^2)", "GL_1(q^2)", h0 * spec.outer.order, h0
                    )
                )
        return out

    if fam == "L" and n == 3 and p == 2:
        if ctx.log("TableA:L3:P12", not leq_pgammal(spec), outer=spec.outer.tag):
            h0 = q**3 * (q - 1) ** 2 // math.gcd(3, q - 1)
            out.append(
                OvergroupDesc("TableA:L3:P12", "P_{1,2} Borel", h0 * spec.outer.order, h0)
            )
        return out

    if fam == "L" and n >= 3:
        k = _is_2power_plus1(n)
        cond = (
            k is not None
            and q % 4 == 3
            and f == 1
            and not leq_pgammal(spec)
        )
        if ctx.log("TableA:Ln:GLn-1xGL1", cond, n=n, q=q, outer=spec.outer.tag):
            h0 = gl_order(n - 1, q) // math.gcd(n, q - 1)
            out.append(
                OvergroupDesc(
                    "TableA:Ln:GLn-1xGL1",
                    f"GL_{n - 1}(q) x GL_1(q)",
                    h0 * spec.outer.order,
                    h0,
                )
            )
        return out

    if fam == "U" and n == 3 and p == 2:
        h0 = q**3 * (q * q - 1) // math.gcd(3, q + 1)
        out.append(OvergroupDesc("TableA:U3:P1", "P_1", h0 * spec.outer.order, h0))
        return out

    if fam == "U":
        k = _is_2power_plus1(n)
        cond = (
            k is not None
            and q % 4 == 1
            and _is_power_of(f, 2)
            and (q >= 9 or n != 3)
        )
        if ctx.log("TableA:Un:GUn-1xGU1", cond, n=n, q=q, f=f):
            h0 = gu_order(n - 1, q) // math.gcd(n, q + 1)
            out.append(
                OvergroupDesc(
                    "TableA:Un:GUn-1xGU1",
                    f"GU_{n - 1}(q) x GU_1(q)",
                    h0 * spec.outer.order,
                    h0,
                )
            )
        return out

    if fam == "Sp" and n == 4 and p == 2 and q >= 4:
        if ctx.log("TableA:Sp4:P12", not leq_pgammasp4(spec), outer=spec.outer.tag):
            h0 = q**4 * (q - 1) ** 2
            out.append(
                OvergroupDesc("TableA:Sp4:P12", "P_{1,2} Borel", h0 * spec.outer.order, h0)
            )
        return out

    if fam == "O":
        k = _is_2power_plus1(n)
        cond = (
            k is not None
            and n >= 9
            and _is_power_of(f, 2)
            and (f > 1 or q % 8 in (1, 7))
        )
        if ctx.log("TableA:O:On-1xO1", cond, n=n, q=q, f=f):
            out.append(OvergroupDesc("TableA:O:On-1xO1", "O_{n-1}^+(q) x O_1(q)"))
        return out

    if fam == "O+":
        k = _is_2power_plus1(n - 1)
        cond = (
            k is not None
            and n >= 10
            and q % 4 == 3
            and f == 1
            and not leq_po_plus(spec)
        )
        if ctx.log("TableA:O+:On-2xO2+", cond, n=n, q=q):
            out.append(OvergroupDesc("TableA:O+:On-2xO2+", "O_{n-2}^+(q) x O_2^+(q)"))
        return out

    if fam == "O-":
        k = _is_2power_plus1(n - 1)
        cond = (
            k is not None
            and n >= 10
            and q % 4 == 1
            and _is_power_of(f, 2)
            and not leq_t_phi_minus(spec)
        )
        if ctx.log("TableA:O-:On-2xO2-", cond, n=n, q=q, f=f):
            out.append(OvergroupDesc("TableA:O-:On-2xO2-", "O_{n-2}^+(q) x O_2^-(q)"))
        return out

    # remaining exceptional families: no r = 2 cases
    ctx.log("exceptional_r2", False, family=fam)
    return out


# ------------------------------------------------- alternating rows, odd r


def _rows_alt_odd(ctx: Ctx):
    spec, r = ctx.spec, ctx.r
    n = spec.n
    out = []
    if spec.outer.tag != "1":
        # odd r forces G = T (precheck already rejects non-r-group outers)
        return out
    k = _is_rpower_plus1(n, r)
    if ctx.log("Alt:a", k is not None and k >= 2, n=n, r=r, k=k):
        out.append(
            OvergroupDesc(
                "Alt1:a:An-1", f"A_{n - 1}", math.factorial(n - 1) // 2,
                math.factorial(n - 1) // 2,
            )
        )
    if ctx.log("Alt:b", n == 2 * r, n=n, r=r):
        h = math.factorial(r) ** 2
        out.append(OvergroupDesc("Alt1:b:SrwrS2", f"(S_{r} wr S_2) cap G", h, h))
    if ctx.log("Alt:c", n == r * r, n=n, r=r):
        h = math.factorial(r) ** r * math.factorial(r) // 2
        out.append(OvergroupDesc("Alt1:c:SrwrSr", f"(S_{r} wr S_{r}) cap G", h, h))
    if n == r and r not in (11, 23):
        cond = r == 5 or not ctx.in_scriptP()
        if ctx.log("Alt:d", cond, n=n, r=r):
            h = r * (r - 1) // 2
            out.append(OvergroupDesc("Alt1:d:AGL1r", f"AGL_1({r}) cap G", h, h))
    return out


# --------------------------------------------------- classical rows, odd r


def _rows_classical_odd(ctx: Ctx):
    spec, r = ctx.spec, ctx.r
    fam, n, q = spec.family, spec.n, spec.q
    p, f = spec.p, spec.f
    e = spec.outer.order
    out = []

    if fam == "L" and n == 2:
        if r == p:
            h0 = q * (q - 1) // math.gcd(2, q - 1)
            out.append(OvergroupDesc("TableB:L2:p:P1", "P_1 Borel", h0 * e, h0))
            return out
        d = ctx.dq()
        if d == 2:
            R = ctx.sylow_order()
            if f <= 2:
                cond = r > 5 or R > r
            else:
                special = (r, p) == (3, 2) and all(
                    pow(p ** (f // k), 1, 3) != 2
                    for k in nt.prime_divisors(f)
                    if k not in (3, f)
                )
                cond = ctx.alpha(1, -1) or ctx.log(
                    "TableB:L2:r2:special32", special, q=q, f=f
                )
            if ctx.log("TableB:L2:r2", cond, q=q, r=r, f=f, R=R):
                h0 = 2 * (q + 1) // math.gcd(2, q - 1)
                out.append(OvergroupDesc("TableB:L2:r2:GL1(q^2)", "GL_1(q^2)", h0 * e, h0))
        return out

    if fam == "L":
        if r == p:
            ctx.log("Ln_r_eq_p", False, note="parabolic pair")
            return out
        d = ctx.dq()
        if d == 1:
            if n == r == 3:
                cond = (f == 1 and q % 9 == 1) or (f > 1 and _is_power_of(f, 3))
                if ctx.log("TableB:Ln:r1:n3", cond, q=q, f=f):
                    h0 = (q - 1) ** 2 * 6 // math.gcd(3, q - 1)
                    out.append(
                        OvergroupDesc("TableB:Ln:r1:GL1wrSn", "GL_1(q) wr S_3", h0 * e, h0)
                    )
            elif n == r and r >= 5:
                cond = f % 2 == 1 and ctx.alpha(1, 1)
                if ctx.log("TableB:Ln:r1:n5+", cond, n=n, f=f):
                    h0 = (q - 1) ** (n - 1) * math.factorial(n) // math.gcd(n, q - 1)
                    out.append(
                        OvergroupDesc(
                            "TableB:Ln:r1:GL1wrSn", f"GL_1(q) wr S_{n}", h0 * e, h0
                        )
                    )
            if (n, q, r) == (3, 4, 3):
                cond = spec.outer.tag == "d" and e == 3
                if ctx.log("TableB:L3:r1:GU3(2)", cond, outer=spec.outer.tag):
                    out.append(
                        OvergroupDesc("TableB:L3:r1:GU3", "GU_3(q^{1/2})", 72 * e, 72)
                    )
            return out
        if d == n:
            t = min(nt.prime_divisors(n)) if n > 1 else None
            cond_shape = _is_power_of(n, t) and t >= 3
            if not ctx.log("TableB:Ln:rn:shape", cond_shape, n=n, t=t):
                return out
            R = ctx.sylow_order()
            if f > 1:
                branch = f % 2 == 1
            else:
                branch = R > r or r != 2 * n + 1 or not ctx.square_mod(-r, p)
            cond = ctx.alpha(n, 1) and ctx.log(
                "TableB:Ln:rn:branch", branch, f=f, R=R, r=r
            )
            if ctx.log("TableB:Ln:rn", cond, n=n, q=q, r=r):
                if n == t:
                    h0 = (q**n - 1) * n // ((q - 1) * math.gcd(n, q - 1))
                    out.append(
                        OvergroupDesc(
                            "TableB:Ln:rn:GLn/t", f"GL_1(q^{n}) (Singer)", h0 * e, h0
                        )
                    )
                else:
                    out.append(
                        OvergroupDesc("TableB:Ln:rn:GLn/t", f"GL_{n // t}(q^{t})")
                    )
            return out
        ctx.log("Ln_d_intermediate", False, d=d)
        return out

    if fam == "U" and n == 3:
        if r == p:
            h0 = q**3 * (q * q - 1) // math.gcd(3, q + 1)
            out.append(OvergroupDesc("TableB:U3:p:P1", "P_1 Borel", h0 * e, h0))
            return out
        d = ctx.dq()
        if d == 2 and r == 3:
            cond = (f == 1 and q % 9 == 8) or (f > 1 and _is_power_of(f, 3))
            if ctx.log("TableB:U3:r2", cond, q=q, f=f):
                h0 = (q + 1) ** 2 * 6 // math.gcd(3, q + 1)
                out.append(
                    OvergroupDesc("TableB:U3:r2:GU1wrS3", "GU_1(q) wr S_3", h0 * e, h0)
                )
            return out
        if d == 6:
            if (q, r) == (3, 7):
                out.append(OvergroupDesc("TableB:U3:r6:L2(7)", "L_2(7)", 168, 168))
                return out
            R = ctx.sylow_order()
            cond = ctx.beta(3, -1) and ctx.log(
                "TableB:U3:r6:branch", f > 1 or R > r or r > 7, f=f, R=R, r=r
            )
            if ctx.log("TableB:U3:r6", cond, q=q, r=r):
                h0 = 3 * (q * q - q + 1) // math.gcd(3, q + 1)
                out.append(
                    OvergroupDesc("TableB:U3:r6:GU1(q^3)", "GU_1(q^3)", h0 * e, h0)
                )
            return out
        ctx.log("U3_d_other", False, d=d)
        return out

    if fam == "U":
        if r == p:
            return out
        d = ctx.dq()
        if d == 2:
            cond = n == r and r >= 5 and ctx.beta(1, -1)
            if ctx.log("TableB:Un:r2", cond, n=n, r=r):
                h0 = (q + 1) ** (n - 1) * math.factorial(n) // math.gcd(n, q + 1)
                out.append(
                    OvergroupDesc("TableB:Un:r2:GU1wrSn", f"GU_1(q) wr S_{n}", h0 * e, h0)
                )
            return out
        if d == 2 * n - 2:
            R = ctx.sylow_order()
            branch = f > 1 or R > r or r != 2 * n - 1 or ctx.square_mod(-r, p)
            cond = (
                n >= 4
                and n % 2 == 0
                and ctx.beta(n - 1, -1)
                and ctx.log("TableB:Un:r2n-2:branch", branch, f=f, R=R, r=r)
            )
            if ctx.log("TableB:Un:r2n-2", cond, n=n, q=q, r=r):
                h0 = gu_order(n - 1, q) // math.gcd(n, q + 1)
                out.append(
                    OvergroupDesc(
                        "TableB:Un:r2n-2:GUn-1xGU1",
                        f"GU_{n - 1}(q) x GU_1(q)",
                        h0 * e,
                        h0,
                    )
                )
            return out
        if d == 2 * n:
            if (n, q, r) == (5, 2, 11):
                out.append(OvergroupDesc("TableB:Un:r2n:L2(11)", "L_2(11)", 660, 660))
                return out
            t = min(nt.prime_divisors(n)) if n > 1 else None
            cond_shape = _is_power_of(n, t) and t >= 3
            if not ctx.log("TableB:Un:r2n:shape", cond_shape, n=n, t=t):
                return out
            R = ctx.sylow_order()
            branch = f > 1 or R > r or r != 2 * n + 1 or ctx.square_mod(-r, p)
            cond = ctx.beta(n, -1) and ctx.log(
                "TableB:Un:r2n:branch", branch, f=f, R=R, r=r
            )
            if ctx.log("TableB:Un:r2n", cond, n=n, q=q, r=r):
                if n == t:
                    h0 = (q**n + 1) * n // ((q + 1) * math.gcd(n, q + 1))
                    out.append(
                        OvergroupDesc("TableB:Un:r2n:GUn/t", f"GU_1(q^{n})", h0 * e, h0)
                    )
                else:
                    out.append(
                        OvergroupDesc("TableB:Un:r2n:GUn/t", f"GU_{n // t}(q^{t})")
                    )
            return out
        ctx.log("Un_d_other", False, d=d)
        return out

    if fam == "Sp":
        if r == p:
            return out
        d = ctx.dq()
        if d == 2 and (n, q, r) == (6, 2, 3):
            out.append(OvergroupDesc("TableB:Sp:r2:On-", "O_6^-(2)", 51840, 51840))
            return out
        if d == n and _is_power_of(n, 2) and n >= 4 and q % 2 == 1:
            R = ctx.sylow_order()
            if f > 2:
                branch = True
            elif f == 2:
                branch = R > r or r != 2 * n + 1 or ctx.square_mod(r, p)
            else:
                branch = R > r or r > 2 * n + 1 or (
                    r == 2 * n + 1 and not ctx.square_mod(r, p)
                )
            cond = ctx.alpha(n, 1) and ctx.log(
                "TableB:Sp:rn:branch", branch, f=f, R=R, r=r
            )
            if ctx.log("TableB:Sp:rn", cond, n=n, q=q, r=r):
                out.append(
                    OvergroupDesc("TableB:Sp:rn:Spn/2", f"Sp_{n // 2}(q^2)")
                )
            return out
        ctx.log("Sp_d_other", False, d=d)
        return out

    if fam == "O":
        if r == p:
            return out
        d = ctx.dq()
        if d == 2 and n == 2 * r + 1:
            cond = ctx.alpha(1, -1) and ctx.log(
                "TableB:O:r2:branch", r > 3 or f > 1 or q % 9 == 8, r=r, f=f, q=q
            )
            if ctx.log("TableB:O:r2", cond, n=n, q=q, r=r):
                out.append(
                    OvergroupDesc("TableB:O:r2:On-1xO1", "O_{n-1}^-(q) x O_1(q)")
                )
            return out
        if 4 <= d <= n - 3 and d % 2 == 0:
            m = n - 1
            a = 0
            while m % r == 0:
                m //= r
                a += 1
            cond = m == d and a >= 1 and ctx.alpha(d, 1)
            if ctx.log("TableB:O:ri", cond, n=n, d=d, r=r):
                out.append(
                    OvergroupDesc("TableB:O:ri:On-1xO1", "O_{n-1}^-(q) x O_1(q)")
                )
            return out
        if d == n - 1 and n >= 9:
            R = ctx.sylow_order()
            branch = (
                r > 2 * n - 1
                or R > r
                or (
                    r == 2 * n - 1
                    and (
                        (f == 2 and ctx.square_mod(r, p))
                        or (f == 1 and not ctx.square_mod(r, p))
                    )
                )
            )
            cond = ctx.alpha(n - 1, 1) and ctx.log(
                "TableB:O:rn-1:branch", branch, f=f, R=R, r=r
            )
            if ctx.log("TableB:O:rn-1", cond, n=n, q=q, r=r):
                out.append(
                    OvergroupDesc("TableB:O:rn-1:On-1xO1", "O_{n-1}^-(q) x O_1(q)")
                )
            return out
        ctx.log("O_d_other", False, d=d)
        return out

    if fam == "O-":
        if r == p:
            return out
        d = ctx.dq()
        if d == n:
            R = ctx.sylow_order()
            branch = ctx.log("TableB:O-:branch", R > r or r > n + 1, R=R, r=r, n=n)
            half = n // 2
            if nt.is_prime(half) and half >= 5:
                cond = ctx.beta(half, -1) and branch
                if ctx.log("TableB:O-:rn:GU", cond, n=n, q=q, r=r):
                    out.append(OvergroupDesc("TableB:O-:rn:GUn/2", f"GU_{half}(q)"))
            if _is_power_of(n, 2) and n >= 8:
                cond = ctx.beta(half, -1) and branch
                if ctx.log("TableB:O-:rn:O", cond, n=n, q=q, r=r):
                    out.append(
                        OvergroupDesc("TableB:O-:rn:On/2", f"O_{half}^-(q^2)")
                    )
            return out
        ctx.log("O-_d_other", False, d=d)
        return out

    if fam == "O+":
        ctx.log("O+_odd_r", False, note="no Table B rows for O+")
        return out

    raise AssertionError(fam)


# ------------------------------------------------- exceptional rows, odd r


def _rows_exceptional_odd(ctx: Ctx):
    spec, r = ctx.spec, ctx.r
    fam, q = spec.family, spec.q
    p, f = spec.p, spec.f
    e = spec.outer.order
    out = []

    if fam == "2B2":
        d = ctx.dq()
        if d == 4:
            ks = [k for k in nt.prime_divisors(f) if k not in (r, f)]
            cond = all(pow(p ** (f // k), 2, r) != r - 1 for k in ks)
            if ctx.log("TableC:2B2:r4", cond, q=q, r=r, ks=ks):
                import math as _m

                root = _m.isqrt(2 * q)
                m = q + root + 1 if (q + root + 1) % r == 0 else q - root + 1
                assert m % r == 0
                out.append(
                    OvergroupDesc(
                        "TableC:2B2:r4:torus",
                        f"({m}):4 torus normalizer (q+-sqrt(2q)+1):4",
                        4 * m * e,
                        4 * m,
                    )
                )
        else:
            ctx.log("2B2_d_other", False, d=d)
        return out

    if fam == "2G2":
        if r == 3:
            h0 = q**3 * (q - 1)
            out.append(OvergroupDesc("TableC:2G2:3:Borel", "[q^3]:(q-1)", h0 * e, h0))
            return out
        d = ctx.dq()
        if d == 6:
            if ctx.log("TableC:2G2:r6", ctx.alpha(3, -1), q=q, r=r):
                import math as _m

                root = _m.isqrt(3 * q)
                m = q + root + 1 if (q + root + 1) % r == 0 else q - root + 1
                out.append(
                    OvergroupDesc(
                        "TableC:2G2:r6:torus", "(q+-sqrt(3q)+1):6", 6 * m * e, 6 * m
                    )
                )
        else:
            ctx.log("2G2_d_other", False, d=d)
        return out

    if fam == "G2":
        d = None if r == p else ctx.dq()
        if r == 3 and d in (1, 2):
            eps = 1 if d == 1 else -1
            cond = _is_power_of(f, 3) and (
                not (p >= 5 and f == 1) or q % 9 == eps % 9
            )
            if ctx.log("TableC:G2:3", cond, q=q, eps=eps):
                out.append(
                    OvergroupDesc("TableC:G2:3:A2eps", f"SL_3^{'+' if eps == 1 else '-'}(q).2")
                )
            return out
        if d in (3, 6):
            eps = 1 if d == 3 else -1
            if p == 2:
                branch = (eps, q) != (-1, 4)
            elif p >= 5:
                R = ctx.sylow_order()
                branch = (
                    f > 3
                    or R > r
                    or r > 13
                    or (f == 3 and (r == 13 or p % 9 in (1, 8, 3, 6)))
                    or (f == 2 and ctx.square_mod(p, 13))
                    or (f == 1 and r == 13 and not ctx.square_mod(p, 13))
                )
            else:
                branch = False
            cond = ctx.alpha(3, eps) and ctx.log(
                "TableC:G2:r3eps:branch", branch, p=p, f=f
            )
            if ctx.log("TableC:G2:r3eps", cond, q=q, r=r, eps=eps):
                out.append(
                    OvergroupDesc(
                        "TableC:G2:r3eps:A2eps", f"SL_3^{'+' if eps == 1 else '-'}(q).2"
                    )
                )
            return out
        ctx.log("G2_d_other", False, d=d)
        return out

    if fam == "3D4":
        d = None if r == p else ctx.dq()
        if r == 3 and d in (1, 2):
            eps = 1 if d == 1 else -1
            if ctx.log("TableC:3D4:3", _is_power_of(f, 3), f=f, eps=eps):
                out.append(
                    OvergroupDesc(
                        "TableC:3D4:3:A2xT",
                        f"A_2^{'+' if eps == 1 else '-'}(q) x (q^2{'+' if eps == 1 else '-'}q+1)",
                    )
                )
            return out
        if d == 12:
            ks = [k for k in nt.prime_divisors(f) if k not in (3, r)]
            cond = all(pow(p ** (f // k), 6, r) != r - 1 for k in ks)
            if ctx.log("TableC:3D4:r12", cond, q=q, r=r, ks=ks):
                m = q**4 - q**2 + 1
                out.append(
                    OvergroupDesc("TableC:3D4:r12:torus", "(q^4-q^2+1):4", 4 * m * e, 4 * m)
                )
            return out
        ctx.log("3D4_d_other", False, d=d)
        return out

    if fam == "2F4":
        d = None if r == p else ctx.dq()
        if d == 12:
            cond = f >= 3 and ctx.alpha(6, -1)
            if ctx.log("TableC:2F4:r12", cond, q=q, r=r, f=f):
                out.append(
                    OvergroupDesc(
                        "TableC:2F4:r12:torus", "(q^2+-sqrt(2q^3)+q+-sqrt(2q)+1):12"
                    )
                )
        else:
            ctx.log("2F4_d_other", False, d=d)
        return out

    if fam == "F4":
        d = None if r == p else ctx.dq()
        if d == 8 and p >= 3:
            R = ctx.sylow_order()
            branch = (
                f > 2
                or r > 17
                or R > r
                or (f == 2 and (p == 3 or ctx.square_mod(p, 17)))
                or (f == 1 and not ctx.square_mod(p, 17))
            )
            cond = ctx.alpha(4, -1) and ctx.log("TableC:F4:r8:branch", branch, f=f, R=R)
            if ctx.log("TableC:F4:r8", cond, q=q, r=r):
                out.append(OvergroupDesc("TableC:F4:r8:B4", "Spin_9(q) = B_4(q)"))
            return out
        if d == 12 and p >= 3:
            R = ctx.sylow_order()
            branch = f != 3 or r > 13 or R > r or (f == 3 and p % 7 in (1, 6))
            cond = ctx.alpha(6, -1) and ctx.log("TableC:F4:r12:branch", branch, f=f, R=R)
            if ctx.log("TableC:F4:r12", cond, q=q, r=r):
                out.append(OvergroupDesc("TableC:F4:r12:3D4", "3D4(q)"))
            return out
        ctx.log("F4_d_other", False, d=d)
        return out

    if fam == "E6":
        d = None if r == p else ctx.dq()
        if d == 9:
            R = ctx.sylow_order()
            branch = (
                f > 2
                or r > 19
                or R > r
                or (f == 2 and ctx.square_mod(p, 5))
                or (
                    f == 1
                    and (not ctx.square_mod(p, 5) or not ctx.square_mod(p, 19))
                )
            )
            cond = ctx.alpha(9, 1) and ctx.log("TableC:E6:r9:branch", branch, f=f, R=R)
            if ctx.log("TableC:E6:r9", cond, q=q, r=r):
                out.append(OvergroupDesc("TableC:E6:r9:A2q3", "A_2(q^3) (x3)"))
        else:
            ctx.log("E6_d_other", False, d=d)
        return out

    if fam == "2E6":
        d = None if r == p else ctx.dq()
        if d == 18:
            R = ctx.sylow_order()
            branch = (
                f > 1
                or r > 19
                or R > r
                or (
                    f == 1
                    and (not ctx.square_mod(p, 5) or ctx.square_mod(p, 19))
                )
            )
            # the table states beta(9, 1) literally
            cond = ctx.beta(9, 1) and ctx.log("TableC:2E6:r18:branch", branch, f=f, R=R)
            if ctx.log("TableC:2E6:r18", cond, q=q, r=r):
                out.append(OvergroupDesc("TableC:2E6:r18:A2-q3", "A_2^-(q^3)"))
        else:
            ctx.log("2E6_d_other", False, d=d)
        return out

    if fam == "E7":
        d = None if r == p else ctx.dq()
        if d == 18:
            self_flags = ctx.flags
            if "e7-forthcoming" not in self_flags:
                self_flags.append("e7-forthcoming")
            R = ctx.sylow_order()
            branch = (
                f > 2
                or r > 37
                or R > r
                or (f == 2 and ctx.square_mod(p, 37))
                or (
                    f == 1
                    and ((q, r) == (2, 19) or (r == 37 and not ctx.square_mod(p, 37)))
                )
            )
            cond = ctx.alpha(18, 1) and ctx.log("TableC:E7:r18:branch", branch, f=f, R=R)
            if ctx.log("TableC:E7:r18", cond, q=q, r=r):
                out.append(OvergroupDesc("TableC:E7:r18:2E6xT", "2E6(q) x (q+1)"))
        else:
            ctx.log("E7_d_other", False, d=d)
        return out

    if fam == "E8":
        d = None if r == p else ctx.dq()
        if d in (15, 30):
            if "e8-forthcoming" not in ctx.flags:
                ctx.flags.append("e8-forthcoming")
            eps = 1 if d == 15 else -1
            R = ctx.sylow_order()
            dpr = nt.mult_order(p, r)
            branch = (
                r > 61
                or R > r
                or (
                    R == r == 61
                    and (f > 2 or (f == 2 and d == 15 and dpr in (15, 30)))
                )
            )
            cond = ctx.alpha(30, 1) and ctx.log(
                "TableC:E8:branch", branch, f=f, R=R, d_p_r=dpr
            )
            if ctx.log("TableC:E8", cond, q=q, r=r, eps=eps):
                s = "+" if eps == 1 else "-"
                out.append(
                    OvergroupDesc(
                        "TableC:E8:torus",
                        f"(q^8-{s}q^7+{s}q^5-q^4+{s}q^3-{s}q+1):30 torus normalizer",
                    )
                )
        else:
            ctx.log("E8_d_other", False, d=d)
        return out

    raise AssertionError(fam)


# ------------------------------------------------------------ sporadic rows

TABLE_D = {
    ("M11", 11): ("L_2(11)", 660),
    ("M22", 11): ("L_2(11)", 660),
    ("M23", 23): ("23:11", 253),
    ("He", 17): ("Sp_4(4):2", 1958400),
    ("Ru", 29): ("L_2(29)", 12180),
    ("Co2", 23): ("M_23", 10200960),
    ("Co3", 23): ("M_23", 10200960),
    ("J1", 19): ("19:6", 114),
    ("J3", 3): ("3^2.3^{1+2}:8", 1944),
    ("Fi24'", 29): ("29:14", 406),
    ("HN", 19): ("U_3(8):3_1", 16547328),
    ("J4", 29): ("29:28", 812),
    ("J4", 43): ("43:14", 602),
    ("Ly", 37): ("37:18", 666),
    ("Ly", 67): ("67:22", 1474),
    ("B", 47): ("47:23", 1081),
    ("M", 47): ("2.B", 2 * 4154781481226426191177580544000000),
    ("M", 59): ("L_2(59)", 102660),
    ("M", 71): ("L_2(71)", 178920),
}


def _rows_sporadic_odd(ctx: Ctx):
    spec, r = ctx.spec, ctx.r
    if spec.name == "M":
        ctx.flags.append("depends-on-DLP")
    hit = TABLE_D.get((spec.name, r))
    ctx.log("TableD", hit is not None, name=spec.name, r=r)
    if hit is None:
        return []
    type_str, order = hit
    return [OvergroupDesc(f"TableD:{spec.name}:{r}", type_str, order, order)]


# ----------------------------------------------------------------- classify


def classify(spec: GroupSpec, r: int) -> Verdict:
    """The full classification verdict for (G, r)."""
    spec = normalize(spec)
    ctx = Ctx(spec, r)
    pre = precheck(spec, r, ctx)
    if pre is not None:
        return pre

    if r == 2:
        rows = _rows_r2(ctx)
    elif spec.family == "Alt":
        rows = _rows_alt_odd(ctx)
    elif spec.family == "Spor":
        rows = _rows_sporadic_odd(ctx)
    elif spec.family in ("L", "U", "Sp", "O", "O+", "O-"):
        rows = _rows_classical_odd(ctx)
    else:
        rows = _rows_exceptional_odd(ctx)

    if len(rows) > 1:
        raise AssertionError(
            f"multiple table rows fired for {spec.describe()}, r={r}: "
            f"{[row.row for row in rows]}"
        )
    if rows:
        return Verdict(UNIQUE, rows[0], ctx.trace, ctx.flags)
    return Verdict(NOT_UNIQUE, trace=ctx.trace, flags=ctx.flags)


# --------------------------------------------------------- Table E / Cor 1.2

TABLE_E_SPORADIC = {
    ("M23", 23),
    ("J1", 19),
    ("J3", 3),
    ("J4", 29),
    ("J4", 43),
    ("Ly", 37),
    ("Ly", 67),
    ("Fi24'", 29),
    ("B", 47),
}


def _table_e_match_literal(spec: GroupSpec, r: int) -> str | None:
    """Match (G, r) against one Table E row, taking the spec literally
    (no isomorphism folding). Returns the row id or None."""
    fam, n, q = spec.family, spec.n, spec.q
    o = spec.outer
    if fam == "Alt":
        if (
            o.is_trivial
            and n == r
            and r >= 13
            and r != 23
            and not nt.in_scriptP(r)
        ):
            return "TableE:Ar"
        return None
    if fam == "Spor":
        return "TableE:spor" if (spec.name, r) in TABLE_E_SPORADIC and o.is_trivial else None
    if fam not in ("L", "U", "Sp") and fam not in ("2B2", "2G2", "3D4", "2F4", "E8"):
        return None
    if group_order(spec) % r or socle_order(spec) % r or not o.is_r_group(r):
        return None
    p, f = spec.p, spec.f

    if fam == "L" and n == 2:
        if r == p:
            return "TableE:L2:p:P1"
        if r == 2:
            r0 = nt.rpart(socle_order(spec), 2)
            if (q == 9 and not leq_psigmal2(spec)) or (
                f == 1 and nt.prime_shape(q) is PrimeShape.FERMAT and q >= 17
            ):
                return "TableE:L2:2:GL1wrS2"
            if (q == 7 and is_pgl2(spec)) or (
                f == 1 and nt.prime_shape(q) is PrimeShape.MERSENNE and q >= 31
            ):
                return "TableE:L2:2:GL1(q^2)"
            return None
        d = nt.mult_order(q, r)
        if d != 2:
            return None
        R = nt.rpart(group_order(spec), r)
        if f <= 2:
            cond = r > 5 or R > r
        else:
            special = (r, p) == (3, 2) and all(
                pow(p ** (f // k), 1, 3) != 2
                for k in nt.prime_divisors(f)
                if k not in (3, f)
            )
            cond = nt.alpha_cond(1, -1, spec.pq, r) or special
        return "TableE:L2:r2:GL1(q^2)" if cond else None

    if fam == "L" and n == 3 and r == 2:
        if p == 2 and not leq_pgammal(spec):
            return "TableE:L3:2:P12"
        return None
    if fam == "L" and n == 3 and r == 3 and q == 4:
        return "TableE:L3:3:GU3(2)" if spec.outer.tag == "d" and spec.outer.order == 3 else None
    if fam == "L" and n is not None and n >= 3:
        if r == p or not nt.is_prime(n):
            return None
        if nt.mult_order(q, r) != n:
            return None
        R = nt.rpart(group_order(spec), r)
        if f > 1:
            branch = f % 2 == 1
        else:
            branch = R > r or r != 2 * n + 1 or not nt.is_square_mod(-r, p)
        if nt.alpha_cond(n, 1, spec.pq, r) and branch:
            return "TableE:Ln:rn:GL1(q^n)"
        return None

    if fam == "U" and n == 3:
        if r == p:
            return "TableE:U3:p:P1"
        if r == 3 and q == 8 and nt.mult_order(q, 3) == 2:
            return "TableE:U3:3:GU1wrS3"
        if r != 2 and r != p and nt.mult_order(q, r) == 6:
            R = nt.rpart(group_order(spec), r)
            if nt.beta_cond(3, -1, spec.pq, r) and (f > 1 or R > r or r > 7):
                return "TableE:U3:r6:GU1(q^3)"
        return None
    if fam == "U":
        if r == p or r == 2 or not nt.is_prime(n):
            return None
        if nt.mult_order(q, r) != 2 * n:
            return None
        R = nt.rpart(group_order(spec), r)
        branch = f > 1 or R > r or r != 2 * n + 1 or nt.is_square_mod(-r, p)
        if nt.beta_cond(n, -1, spec.pq, r) and branch:
            return "TableE:Un:r2n:GU1(q^n)"
        return None

    if fam == "Sp":
        if n == 4 and r == 2 and p == 2 and q >= 4 and not leq_pgammasp4(spec):
            return "TableE:Sp4:2:P12"
        return None

    if fam == "2B2":
        if r == 2:
            return "TableE:2B2:2:Borel"
        if r != p and nt.mult_order(q, r) == 4:
            ks = [k for k in nt.prime_divisors(f) if k not in (r, f)]
            if all(pow(p ** (f // k), 2, r) != r - 1 for k in ks):
                return "TableE:2B2:r4:torus"
        return None
    if fam == "2G2":
        if r == 3:
            return "TableE:2G2:3:Borel"
        if r != p and r != 2 and nt.mult_order(q, r) == 6:
            if nt.alpha_cond(3, -1, spec.pq, r):
                return "TableE:2G2:r6:torus"
        return None
    if fam == "3D4":
        if r not in (2, p) and nt.mult_order(q, r) == 12:
            ks = [k for k in nt.prime_divisors(f) if k not in (3, r)]
            if all(pow(p ** (f // k), 6, r) != r - 1 for k in ks):
                return "TableE:3D4:r12:torus"
        return None
    if fam == "2F4":
        if r not in (2, p) and nt.mult_order(q, r) == 12:
            if f >= 3 and nt.alpha_cond(6, -1, spec.pq, r):
                return "TableE:2F4:r12:torus"
        return None
    if fam == "E8":
        if r in (2, p):
            return None
        d = nt.mult_order(q, r)
        if d in (15, 30):
            R = nt.rpart(group_order(spec), r)
            dpr = nt.mult_order(p, r)
            branch = (
                r > 61
                or R > r
                or (R == r == 61 and (f > 2 or (f == 2 and d == 15 and dpr in (15, 30))))
            )
            if nt.alpha_cond(30, 1, spec.pq, r) and branch:
                return "TableE:E8:torus"
        return None
    return None


def table_e_match(spec: GroupSpec, r: int) -> str | None:
    """Table E membership across all presentations of the group."""
    for form in iso_presentations(spec):
        row = _table_e_match_literal(form, r)
        if row:
            return row
    return None


def ngr0_unique(spec: GroupSpec, r: int) -> bool:
    """Corollary: M(R) = {N_G(R_0)} iff (G, r) is a Table E case."""
    if precheck(normalize(spec), r) is not None:
        return False
    return table_e_match(spec, r) is not None


# ------------------------------------------------------ Cor 1.3 / Table NGR2


def weakly_subnormal_sylow(spec: GroupSpec, r: int) -> bool:
    """Is a Sylow r-subgroup weakly subnormal (i.e. M(R) = {N_G(R)})?"""
    spec = normalize(spec)
    if precheck(spec, r) is not None:
        return False
    if spec.outer.is_trivial:
        return table_e_match(spec, r) is not None
    fam, n, q = spec.family, spec.n, spec.q
    tag, e = spec.outer.tag, spec.outer.order
    if r == 2 and fam == "L" and n == 2:
        # PGL2(q) with q >= 7 a Mersenne or Fermat prime
        if (
            tag == "d"
            and spec.f == 1
            and q >= 7
            and nt.prime_shape(q) in (PrimeShape.MERSENNE, PrimeShape.FERMAT)
        ):
            return True
        # L2(9).2 and L2(9).2^2 except PSigmaL2(9)
        if q == 9 and tag in ("d", "df", "d*f"):
            return True
        return False
    if r == 2 and fam == "L" and (n, q) == (3, 4):
        return tag == "g" and e == 2  # L3(4).2_3, involutory graph automorphisms
    if r == 3 and fam == "L" and (n, q) == (2, 8):
        return tag == "f" and e == 3  # L2(8).3
    if r == 3 and fam == "U" and (n, q) == (3, 8):
        return tag in ("d", "f", "df", "d*f") and e in (3, 9)  # U3(8).3 (any) and .3^2
    if r == 5 and fam == "2B2" and q == 32:
        return tag == "f" and e == 5  # 2B2(32).5
    return False


# --------------------------------------------------------- Table F / Cor 1.4


def _table_f_match_literal(spec: GroupSpec, r: int) -> str | None:
    fam, n, q = spec.family, spec.n, spec.q
    o = spec.outer
    if fam == "Alt":
        return "TableF:A9:3" if (n, r) == (9, 3) and o.is_trivial else None
    if fam not in ("L", "U", "O", "O+", "O-", "G2", "3D4"):
        return None
    p, f = spec.p, spec.f
    if fam == "L" and n == 2 and r == 2:
        R = nt.rpart(group_order(spec), 2)
        if q % 4 == 1 and q >= 13:
            if f > 1 and _is_power_of(f, 2) and not leq_psigmal2(spec):
                return "TableF:L2:GL1wrS2"
            if f == 1 and nt.prime_shape(q) is not PrimeShape.FERMAT and R >= 16:
                return "TableF:L2:GL1wrS2"
        if q % 4 == 3 and f == 1 and nt.prime_shape(q) is not PrimeShape.MERSENNE and R >= 16:
            return "TableF:L2:GL1(q^2)"
        return None
    if fam == "L" and n is not None and n >= 3:
        if r == 2:
            k = _is_2power_plus1(n)
            if (
                k is not None
                and f == 1
                and q % 4 == 3
                and o.order == 2
                and not leq_pgammal(spec)
            ):
                return "TableF:Ln:GLn-1xGL1"
            return None
        if r == p:
            return None
        if nt.mult_order(q, r) != 1:
            return None
        if n == r == 3 and ((f == 1 and q % 9 == 1) or (f > 1 and _is_power_of(f, 3))):
            return "TableF:Ln:GL1wrSn"
        if n == r and r >= 5 and f % 2 == 1 and nt.alpha_cond(1, 1, spec.pq, r):
            return "TableF:Ln:GL1wrSn"
        return None
    if fam == "U":
        if r == 2:
            k = _is_2power_plus1(n)
            if (
                k is not None
                and q % 4 == 1
                and _is_power_of(f, 2)
                and (q >= 9 or n != 3)
            ):
                return "TableF:Un:GUn-1xGU1"
            return None
        if r == p or nt.mult_order(q, r) != 2:
            return None
        if n == r == 3 and (
            (f == 1 and q % 9 == 8) or (f > 1 and _is_power_of(f, 3) and q != 8)
        ):
            return "TableF:Un:GU1wrSn"
        if n == r and r >= 5 and nt.beta_cond(1, -1, spec.pq, r):
            return "TableF:Un:GU1wrSn"
        return None
    if fam == "O" and r == 2:
        k = _is_2power_plus1(n)
        if k is not None and n >= 9 and _is_power_of(f, 2) and (f > 1 or q % 8 in (1, 7)):
            return "TableF:O:On-1xO1"
        return None
    if fam == "O+" and r == 2:
        k = _is_2power_plus1(n - 1)
        if k is not None and n >= 10 and q % 4 == 3 and f == 1 and not leq_po_plus(spec):
            return "TableF:O+"
        return None
    if fam == "O-" and r == 2:
        k = _is_2power_plus1(n - 1)
        if (
            k is not None
            and n >= 10
            and q % 4 == 1
            and _is_power_of(f, 2)
            and not leq_t_phi_minus(spec)
        ):
            return "TableF:O-"
        return None
    if fam == "G2" and r == 3 and r != p:
        d = nt.mult_order(q, 3)
        if d in (1, 2):
            eps = 1 if d == 1 else -1
            if _is_power_of(f, 3) and (not (p >= 5 and f == 1) or q % 9 == eps % 9):
                return "TableF:G2:SL3eps"
        return None
    if fam == "3D4" and r == 3 and r != p:
        if nt.mult_order(q, 3) in (1, 2) and _is_power_of(f, 3):
            return "TableF:3D4:A2xT"
        return None
    return None


def or_h_nontrivial(spec: GroupSpec, r: int) -> str:
    """Cor: which table certifies O_r(H) != 1 for the unique overgroup H.

    Returns "TableE:<row>", "TableF:<row>", or "No". Requires (G, r) to
    classify as unique.
    """
    v = classify(spec, r)
    if not v.is_unique:
        raise ValueError("O_r(H) predicate requires a unique overgroup")
    row = table_e_match(spec, r)
    if row:
        return row
    for form in iso_presentations(spec):
        row = _table_f_match_literal(form, r)
        if row:
            return row
    return "No"


# ----------------------------------------------------------------- Cor 1.5


def m_or_h_unique(spec: GroupSpec, r: int) -> bool:
    """Is M(O_r(H)) = {H} for the unique overgroup H?"""
    spec = normalize(spec)
    v = classify(spec, r)
    if not v.is_unique:
        raise ValueError("M(O_r(H)) predicate requires a unique overgroup")
    if weakly_subnormal_sylow(spec, r):
        return True
    fam, n, q = spec.family, spec.n, spec.q
    tag = spec.outer.tag
    if r != 2 or fam != "L":
        return False
    if n == 2 and tag in ("d*f", "df"):
        p, f = spec.p, spec.f
        if q == 81:
            return True
        if f == 2 and p >= 5 and nt.prime_shape(p) is PrimeShape.FERMAT:
            return True
        return False
    if n == 2 and spec.f == 1 and q % 4 == 3:
        R = nt.rpart(group_order(spec), 2)
        if R >= 16:
            assert v.overgroup.row == "TableA:L2:GL1(q^2)"
            return True
        return False
    if (n, q) == (3, 3) and tag == "g":
        return True
    return False


# ----------------------------------------------------------------- Cor 1.6

_MAXIMAL_SYLOW_CASES = [
    ("L", 2, 7, "d"),  # PGL2(7)
    ("L", 2, 9, "d"),  # PGL2(9)
    ("L", 2, 9, "df"),  # M10
    ("L", 2, 9, "d*f"),  # L2(9).2^2
]


def maximal_sylow(spec: GroupSpec, r: int) -> bool:
    """Is a Sylow r-subgroup of G itself a maximal subgroup (symbolic)?"""
    spec = normalize(spec)
    if r != 2:
        return False
    for form in iso_presentations(spec):
        if form.family != "L" or form.n != 2:
            continue
        key = (form.family, form.n, form.q, form.outer.tag)
        if key in _MAXIMAL_SYLOW_CASES:
            return True
        if (
            form.f == 1
            and form.q > 7
            and nt.prime_shape(form.q) in (PrimeShape.MERSENNE, PrimeShape.FERMAT)
            and form.outer.tag in ("1", "d")
        ):
            return True
    return False
