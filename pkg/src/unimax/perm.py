"""Permutations on {0, ..., deg-1} as image tuples.

A permutation is a tuple p with p[i] the image of i. Products compose
left-to-right: (pmul(p, q))[i] = q[p[i]], i.e. apply p first, then q.
Tuples keep permutations hashable and safely shareable.
"""

from __future__ import annotations

import math
from functools import reduce

Perm = tuple  # type alias: tuple[int, ...]


def identity(deg: int) -> Perm:
    return tuple(range(deg))


def is_identity(p: Perm) -> bool:
    return all(i == j for i, j in enumerate(p))


def pmul(p: Perm, q: Perm) -> Perm:
    """Apply p, then q."""
    return tuple(q[i] for i in p)


def pmul_many(perms) -> Perm:
    return reduce(pmul, perms)


def pinv(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def ppow(p: Perm, n: int) -> Perm:
    if n < 0:
        return ppow(pinv(p), -n)
    out = identity(len(p))
    base = p
    while n:
        if n & 1:
            out = pmul(out, base)
        base = pmul(base, base)
        n >>= 1
    return out


def conj(p: Perm, g: Perm) -> Perm:
    """g^-1 * p * g."""
    gi = pinv(g)
    return pmul(gi, pmul(p, g))


def order(p: Perm) -> int:
    return math.lcm(*(len(c) for c in cycles(p))) if any(i != j for i, j in enumerate(p)) else 1


def cycles(p: Perm) -> list[tuple[int, ...]]:
    """Nontrivial cycles, each rotated to start at its minimum."""
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = p[j]
        out.append(tuple(cyc))
    return out


def from_cycles(deg: int, *cycs) -> Perm:
    """Build a permutation from disjoint cycles given as point sequences."""
    images = list(range(deg))
    for cyc in cycs:
        for a, b in zip(cyc, cyc[1:]):
            images[a] = b
        if cyc:
            images[cyc[-1]] = cyc[0]
    p = tuple(images)
    if sorted(p) != list(range(deg)):
        raise ValueError("cycles are not disjoint or out of range")
    return p


def cycle_str(p: Perm) -> str:
    cycs = cycles(p)
    if not cycs:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)


def parse_cycles(s: str, deg: int) -> Perm:
    """Parse '(0 1 2)(3 4)' (or comma separated) into a permutation."""
    s = s.strip()
    if s in ("()", "", "id"):
        return identity(deg)
    if s.count("(") == 0:
        raise ValueError(f"cannot parse permutation {s!r}")
    cycs = []
    for chunk in s.replace(",", " ").split("(")[1:]:
        if ")" not in chunk:
            raise ValueError(f"cannot parse permutation {s!r}")
        body = chunk.split(")")[0].split()
        cycs.append(tuple(int(x) for x in body))
    return from_cycles(deg, *cycs)


def support(p: Perm) -> tuple[int, ...]:
    return tuple(i for i, j in enumerate(p) if i != j)


def restrict(p: Perm, points: list[int]) -> Perm:
    """Restriction to an invariant point list, renumbered 0..len-1."""
    index = {pt: k for k, pt in enumerate(points)}
    return tuple(index[p[pt]] for pt in points)


def r_element_power(p: Perm, r: int) -> Perm:
    """p raised to the r'-part of its order: an r-element (maybe identity)."""
    n = order(p)
    while n % r == 0:
        n //= r
    return ppow(p, n)
