"""Symbolic descriptions of almost simple groups and classifier verdicts.

A GroupSpec names a socle family with parameters plus an outer-automorphism
label describing G/T at exactly the granularity the classification tables
need. Exceptional isomorphisms between small socles are normalized here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .numtheory import PrimePowerQ, is_prime, is_prime_power

CLASSICAL = ("L", "U", "Sp", "O", "O+", "O-")
EXCEPTIONAL = ("2B2", "2G2", "2F4", "3D4", "G2", "F4", "E6", "2E6", "E7", "E8")
FAMILIES = ("Alt",) + CLASSICAL + EXCEPTIONAL + ("Spor",)

# outer labels: "1" trivial, "d" diagonal, "f" field (of stated order),
# "df" the diagonal*field diagonal product (single coset class, e.g. M10),
# "d*f" the full <diagonal, field-involution> 2^2, "g" graph,
# "gf" graph-field, "S" the symmetric-group extension of Alt.
OUTER_TAGS = ("1", "d", "f", "df", "d*f", "g", "gf", "S")


@dataclass(frozen=True)
class OuterLabel:
    tag: str = "1"
    order: int = 1

    def __post_init__(self):
        if self.tag not in OUTER_TAGS:
            raise ValueError(f"unknown outer tag {self.tag!r}")
        if self.order < 1:
            raise ValueError("outer order must be >= 1")
        if self.tag == "1" and self.order != 1:
            raise ValueError("trivial outer label must have order 1")
        if self.tag != "1" and self.order == 1:
            raise ValueError(f"outer tag {self.tag!r} needs order > 1")

    def is_r_group(self, r: int) -> bool:
        n = self.order
        while n % r == 0:
            n //= r
        return n == 1

    @property
    def is_trivial(self) -> bool:
        return self.order == 1


TRIVIAL_OUTER = OuterLabel()

# orders of the sporadic groups appearing in the tables
SPORADIC_ORDERS = {
    "M11": 7920,
    "M12": 95040,
    "M22": 443520,
    "M23": 10200960,
    "M24": 244823040,
    "J1": 175560,
    "J2": 604800,
    "J3": 50232960,
    "J4": 86775571046077562880,
    "Co1": 4157776806543360000,
    "Co2": 42305421312000,
    "Co3": 495766656000,
    "Fi22": 64561751654400,
    "Fi23": 4089470473293004800,
    "Fi24'": 1255205709190661721292800,
    "HS": 44352000,
    "McL": 898128000,
    "He": 4030387200,
    "Ru": 145926144000,
    "Suz": 448345497600,
    "ON": 460815505920,
    "HN": 273030912000000,
    "Ly": 51765179004000000,
    "Th": 90745943887872000,
    "B": 4154781481226426191177580544000000,
    "M": 808017424794512875886459904961710757005754368000000000,
}


@dataclass(frozen=True)
class GroupSpec:
    """An almost simple group: socle family + parameters + outer label."""

    family: str
    n: int | None = None
    q: int | None = None
    outer: OuterLabel = TRIVIAL_OUTER
    name: str | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.family == "Alt":
            if self.n is None or self.n < 5:
                raise ValueError("Alt requires n >= 5")
            if self.outer.tag not in ("1", "S"):
                raise ValueError("Alt outer label must be trivial or S")
            if self.outer.tag == "S" and self.outer.order != 2:
                raise ValueError("symmetric extension has order 2")
        elif self.family == "Spor":
            if self.name not in SPORADIC_ORDERS:
                raise ValueError(f"unknown sporadic group {self.name!r}")
        else:
            if self.q is None or is_prime_power(self.q) is None:
                raise ValueError(f"{self.family} requires a prime power q")
            self._check_lie_params()

    def _check_lie_params(self):
        fam, n, q = self.family, self.n, self.q
        p, f = is_prime_power(q)
        if fam == "L":
            if n is None or n < 2:
                raise ValueError("L requires n >= 2")
            if n == 2 and q < 4:
                raise ValueError("L2(q) requires q >= 4")
        elif fam == "U":
            if n is None or n < 3:
                raise ValueError("U requires n >= 3")
            if n == 3 and q == 2:
                raise ValueError("U3(2) is not simple")
        elif fam == "Sp":
            if n is None or n < 4 or n % 2:
                raise ValueError("Sp requires even n >= 4")
        elif fam == "O":
            if n is None or n < 7 or n % 2 == 0 or q % 2 == 0:
                raise ValueError("O (odd dim) requires odd n >= 7 and odd q")
        elif fam in ("O+", "O-"):
            if n is None or n < 8 or n % 2:
                raise ValueError("O+/O- require even n >= 8")
        elif fam == "2B2":
            if p != 2 or f < 3 or f % 2 == 0:
                raise ValueError("2B2 requires q = 2^f, f >= 3 odd")
        elif fam == "2G2":
            # q = 3 is allowed as input; normalize() rewrites it to L2(8)
            if p != 3 or f % 2 == 0:
                raise ValueError("2G2 requires q = 3^f, f odd")
        elif fam == "2F4":
            if p != 2 or f % 2 == 0:
                raise ValueError("2F4 requires q = 2^f, f odd")
        elif fam == "G2":
            # q = 2 is allowed as input; normalize() rewrites it to U3(3)
            if q < 2:
                raise ValueError("G2 requires q >= 2")

    @property
    def pq(self) -> PrimePowerQ:
        return PrimePowerQ.from_q(self.q)

    @property
    def p(self) -> int:
        return self.pq.p

    @property
    def f(self) -> int:
        return self.pq.f

    def with_outer(self, outer: OuterLabel) -> "GroupSpec":
        return GroupSpec(self.family, self.n, self.q, outer, self.name)

    def describe(self) -> str:
        out = "" if self.outer.is_trivial else f".{self.outer.order}({self.outer.tag})"
        if self.family == "Alt":
            base = f"S{self.n}" if self.outer.tag == "S" else f"A{self.n}"
            return base
        if self.family == "Spor":
            return self.name
        if self.family in ("L", "U", "Sp"):
            return f"{self.family}{self.n}({self.q}){out}"
        if self.family in ("O", "O+", "O-"):
            sign = {"O": "", "O+": "+", "O-": "-"}[self.family]
            return f"O{sign}{self.n}({self.q}){out}"
        return f"{self.family}({self.q}){out}"

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "q": self.q,
            "outer": {"tag": self.outer.tag, "order": self.outer.order},
            "name": self.name,
        }


def socle_order(spec: GroupSpec) -> int:
    """|T| from the closed order formulas."""
    fam = spec.family
    if fam == "Alt":
        return math.factorial(spec.n) // 2
    if fam == "Spor":
        return SPORADIC_ORDERS[spec.name]
    q = spec.q
    n = spec.n
    if fam == "L":
        gl = q ** (n * (n - 1) // 2)
        for i in range(1, n + 1):
            gl *= q**i - 1
        return gl // ((q - 1) * math.gcd(n, q - 1))
    if fam == "U":
        gu = q ** (n * (n - 1) // 2)
        for i in range(2, n + 1):
            gu *= q**i - (-1) ** i
        return gu // math.gcd(n, q + 1)
    if fam == "Sp":
        m = n // 2
        val = q ** (m * m)
        for i in range(1, m + 1):
            val *= q ** (2 * i) - 1
        return val // math.gcd(2, q - 1)
    if fam == "O":
        m = (n - 1) // 2
        val = q ** (m * m)
        for i in range(1, m + 1):
            val *= q ** (2 * i) - 1
        return val // math.gcd(2, q - 1)
    if fam in ("O+", "O-"):
        m = n // 2
        eps = 1 if fam == "O+" else -1
        val = q ** (m * (m - 1)) * (q**m - eps)
        for i in range(1, m):
            val *= q ** (2 * i) - 1
        return val // math.gcd(4, q**m - eps)
    if fam == "2B2":
        return q**2 * (q - 1) * (q**2 + 1)
    if fam == "2G2":
        return q**3 * (q - 1) * (q**3 + 1)
    if fam == "G2":
        return q**6 * (q**2 - 1) * (q**6 - 1)
    if fam == "3D4":
        return q**12 * (q**2 - 1) * (q**6 - 1) * (q**8 + q**4 + 1)
    if fam == "2F4":
        return q**12 * (q - 1) * (q**3 + 1) * (q**4 - 1) * (q**6 + 1)
    if fam == "F4":
        val = q**24
        for d in (2, 6, 8, 12):
            val *= q**d - 1
        return val
    if fam == "E6":
        val = q**36
        for d in (2, 5, 6, 8, 9, 12):
            val *= q**d - 1
        return val // math.gcd(3, q - 1)
    if fam == "2E6":
        val = q**36
        for d, s in ((2, -1), (5, 1), (6, -1), (8, -1), (9, 1), (12, -1)):
            val *= q**d + s
        return val // math.gcd(3, q + 1)
    if fam == "E7":
        val = q**63
        for d in (2, 6, 8, 10, 12, 14, 18):
            val *= q**d - 1
        return val // math.gcd(2, q - 1)
    if fam == "E8":
        val = q**120
        for d in (2, 8, 12, 14, 18, 20, 24, 30):
            val *= q**d - 1
        return val
    raise AssertionError(fam)


def group_order(spec: GroupSpec) -> int:
    return socle_order(spec) * spec.outer.order


def normalize(spec: GroupSpec) -> GroupSpec:
    """Rewrite socles excluded by the classification's isomorphism list.

    L2(4) -> L2(5), L3(2) -> L2(7), L4(2) -> A8, Sp4(2)(') -> L2(9),
    G2(2)(') -> U3(3), 2G2(3)(') -> L2(8). Outer labels of order 2 (or 3)
    are carried to the canonical presentation's corresponding extension.
    """
    fam, n, q = spec.family, spec.n, spec.q
    o = spec.outer
    if fam == "L" and (n, q) == (2, 4):
        new = OuterLabel("d", 2) if o.order == 2 else o
        return GroupSpec("L", 2, 5, new)
    if fam == "L" and (n, q) == (3, 2):
        new = OuterLabel("d", 2) if o.order == 2 else o
        return GroupSpec("L", 2, 7, new)
    if fam == "L" and (n, q) == (4, 2):
        new = OuterLabel("S", 2) if o.order == 2 else o
        return GroupSpec("Alt", 8, None, new)
    if fam == "Sp" and (n, q) == (4, 2):
        # Sp4(2) itself is S6 = PSigmaL2(9); the socle is L2(9)
        new = OuterLabel("f", 2) if o.order == 2 else o
        return GroupSpec("L", 2, 9, new)
    if fam == "G2" and q == 2:
        new = OuterLabel("f", 2) if o.order == 2 else o
        return GroupSpec("U", 3, 3, new)
    if fam == "2G2" and q == 3:
        new = OuterLabel("f", 3) if o.order == 3 else o
        return GroupSpec("L", 2, 8, new)
    return spec


def iso_presentations(spec: GroupSpec) -> list[GroupSpec]:
    """All presentations of the same abstract group across the exceptional
    isomorphisms (used when scanning lookup tables keyed by socle name)."""
    spec = normalize(spec)
    out = [spec]
    fam, n, q = spec.family, spec.n, spec.q
    o = spec.outer

    def o2(tag):
        return OuterLabel(tag, 2) if o.order == 2 else o

    if fam == "Alt" and n == 5:
        out.append(GroupSpec("L", 2, 4, OuterLabel("f", 2) if o.order == 2 else o))
        out.append(GroupSpec("L", 2, 5, o2("d")))
    elif fam == "L" and (n, q) == (2, 5):
        out.append(GroupSpec("Alt", 5, None, o2("S")))
        out.append(GroupSpec("L", 2, 4, o2("f")))
    elif fam == "Alt" and n == 6:
        if o.order <= 2:
            out.append(GroupSpec("L", 2, 9, o2("f")))
    elif fam == "L" and (n, q) == (2, 9):
        if o.tag in ("1", "f"):
            out.append(GroupSpec("Alt", 6, None, o2("S")))
    elif fam == "Alt" and n == 8:
        out.append(GroupSpec("L", 4, 2, o2("g")))
    elif fam == "L" and (n, q) == (2, 7):
        out.append(GroupSpec("L", 3, 2, o2("g")))
    elif fam == "U" and (n, q) == (3, 3):
        pass  # G2(2)' normalizes here already; no further table aliases
    return out


@dataclass
class TraceEntry:
    cond: str
    value: object
    operands: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"cond": self.cond, "value": self.value, "operands": self.operands}


@dataclass
class OvergroupDesc:
    """What the classifier promises about the unique overgroup."""

    row: str
    type_string: str
    order: int | None = None  # |H| in G when the tables pin it down
    socle_part_order: int | None = None  # |H cap T|

    def to_json(self) -> dict:
        return {
            "row": self.row,
            "type": self.type_string,
            "order": self.order,
            "socle_part_order": self.socle_part_order,
        }


UNIQUE = "unique"
NOT_UNIQUE = "not_unique"
OUT_OF_SCOPE = "out_of_scope"


@dataclass
class Verdict:
    outcome: str
    overgroup: OvergroupDesc | None = None
    trace: list = field(default_factory=list)
    flags: list = field(default_factory=list)

    def __post_init__(self):
        if self.outcome not in (UNIQUE, NOT_UNIQUE, OUT_OF_SCOPE):
            raise ValueError(f"bad outcome {self.outcome!r}")
        if (self.outcome == UNIQUE) != (self.overgroup is not None):
            raise ValueError("unique verdicts carry exactly one overgroup")

    @property
    def is_unique(self) -> bool:
        return self.outcome == UNIQUE

    def to_json(self, spec: GroupSpec | None = None, r: int | None = None) -> dict:
        out = {
            "outcome": self.outcome,
            "overgroup": self.overgroup.to_json() if self.overgroup else None,
            "trace": [t.to_json() for t in self.trace],
            "flags": list(self.flags),
        }
        if spec is not None:
            out["spec"] = spec.to_json()
        if r is not None:
            out["r"] = r
        return out
