"""Permutation-group engine: BSGS, Sylow subgroups, normalizers, coset
spaces, double cosets, maximal overgroups and cores.

Everything is deterministic: randomized element searches draw from a
caller-supplied seeded Random, and all orbit walks use fixed iteration
orders, so repeated runs produce identical results.
"""

from __future__ import annotations

import hashlib
import itertools
import math
import random
from dataclasses import dataclass

from .perm import (
    Perm,
    conj,
    identity,
    is_identity,
    order as perm_order,
    pinv,
    pmul,
    r_element_power,
)
from . import numtheory as nt


class FeasibilityError(RuntimeError):
    """A configured size bound was exceeded."""


class _Level:
    """One level of a stabilizer chain: base point, generators of the
    stabilizer of the earlier base points, and a Schreier tree."""

    __slots__ = ("bp", "gens", "tree", "tcache")

    def __init__(self, bp: int):
        self.bp = bp
        self.gens: list[Perm] = []
        self.tree: dict[int, tuple[int, int] | None] = {bp: None}
        self.tcache: dict[int, Perm] = {}

    def rebuild_orbit(self, deg: int) -> None:
        self.tree = {self.bp: None}
        self.tcache = {self.bp: identity(deg)}
        queue = [self.bp]
        head = 0
        while head < len(queue):
            a = queue[head]
            head += 1
            for gi, g in enumerate(self.gens):
                b = g[a]
                if b not in self.tree:
                    self.tree[b] = (a, gi)
                    queue.append(b)

    def extend_orbit(self, deg: int) -> None:
        """Grow the existing tree after generators were appended."""
        queue = list(self.tree)
        head = 0
        while head < len(queue):
            a = queue[head]
            head += 1
            for gi, g in enumerate(self.gens):
                b = g[a]
                if b not in self.tree:
                    self.tree[b] = (a, gi)
                    queue.append(b)

    def transversal(self, point: int, deg: int) -> Perm:
        """An element u with u(bp) = point."""
        cached = self.tcache.get(point)
        if cached is not None:
            return cached
        path = []
        a = point
        while a not in self.tcache:
            edge = self.tree[a]
            if edge is None:
                self.tcache[a] = identity(deg)
                break
            parent, gi = edge
            path.append((a, gi))
            a = parent
        u = self.tcache[a]
        for b, gi in reversed(path):
            u = pmul(u, self.gens[gi])
            self.tcache[b] = u
        return self.tcache[point]


class PermGroup:
    """A permutation group with a base and strong generating set.

    The chain is built with the deterministic Schreier-Sims algorithm;
    when the caller knows the group order in advance the construction
    stops as soon as the chain accounts for it.
    """

    def __init__(
        self,
        gens,
        deg: int | None = None,
        known_order: int | None = None,
        base_prefix: tuple[int, ...] = (),
    ):
        gens = [tuple(g) for g in gens]
        if deg is None:
            if not gens:
                raise ValueError("need deg for the trivial group")
            deg = len(gens[0])
        if any(len(g) != deg for g in gens):
            raise ValueError("inconsistent permutation degrees")
        for g in gens:
            if sorted(g) != list(range(deg)):
                raise ValueError("generator is not a permutation")
        self.deg = deg
        self.gens = [g for g in dict.fromkeys(gens) if not is_identity(g)]
        self.levels: list[_Level] = []
        for bp in base_prefix:
            lvl = _Level(bp)
            lvl.tcache = {bp: identity(deg)}
            self.levels.append(lvl)
        self._build(known_order)

    # -- construction ---------------------------------------------------

    def _strip(self, g: Perm, start: int = 0) -> tuple[Perm, int]:
        cur = g
        for i in range(start, len(self.levels)):
            lvl = self.levels[i]
            a = cur[lvl.bp]
            if a == lvl.bp:
                continue
            if a not in lvl.tree:
                return cur, i
            u = lvl.transversal(a, self.deg)
            cur = pmul(cur, pinv(u))
        return cur, len(self.levels)

    def _insert_gen(self, h: Perm, start: int, upto: int) -> None:
        """Add h as a strong generator for levels start..upto inclusive."""
        if upto == len(self.levels):
            for bp, img in enumerate(h):
                if bp != img:
                    self.levels.append(_Level(bp))
                    break
        for i in range(start, min(upto + 1, len(self.levels))):
            lvl = self.levels[i]
            lvl.gens.append(h)
            lvl.extend_orbit(self.deg)

    def _chain_order(self) -> int:
        return math.prod(len(lvl.tree) for lvl in self.levels)

    def _build(self, known_order: int | None) -> None:
        for g in self.gens:
            h, j = self._strip(g)
            if not is_identity(h):
                self._insert_gen(h, 0, j)
        if known_order is not None and self._chain_order() == known_order:
            self.order = known_order
            return
        # deterministic verification: sift all Schreier generators
        i = len(self.levels) - 1
        while i >= 0:
            lvl = self.levels[i]
            restart = False
            for a in list(lvl.tree):
                u_a = lvl.transversal(a, self.deg)
                for g in lvl.gens:
                    b = g[a]
                    u_b = lvl.transversal(b, self.deg)
                    sch = pmul(pmul(u_a, g), pinv(u_b))
                    if is_identity(sch):
                        continue
                    h, j = self._strip(sch, i + 1)
                    if not is_identity(h):
                        self._insert_gen(h, i + 1, j)
                        if known_order is not None and self._chain_order() == known_order:
                            self.order = known_order
                            return
                        i = min(j, len(self.levels) - 1)
                        restart = True
                        break
                if restart:
                    break
            if not restart:
                i -= 1
        self.order = self._chain_order()

    # -- queries ---------------------------------------------------------

    @property
    def base(self) -> tuple[int, ...]:
        return tuple(lvl.bp for lvl in self.levels)

    def strong_gens(self) -> list[Perm]:
        out: list[Perm] = []
        for lvl in self.levels:
            for g in lvl.gens:
                if g not in out:
                    out.append(g)
        return out

    def basic_orbits(self) -> list[tuple[int, ...]]:
        return [tuple(sorted(lvl.tree)) for lvl in self.levels]

    def contains(self, g: Perm) -> bool:
        if len(g) != self.deg:
            return False
        h, _ = self._strip(tuple(g))
        return is_identity(h)

    def __contains__(self, g) -> bool:
        return self.contains(g)

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return all(other.contains(g) for g in self.gens)

    def equals(self, other: "PermGroup") -> bool:
        return self.order == other.order and self.is_subgroup_of(other)

    def identity_perm(self) -> Perm:
        return identity(self.deg)

    def random_element(self, rng: random.Random) -> Perm:
        g = identity(self.deg)
        for lvl in self.levels:
            pts = sorted(lvl.tree)
            a = pts[rng.randrange(len(pts))]
            g = pmul(lvl.transversal(a, self.deg), g)
        return g

    def elements(self, limit: int = 2_000_000):
        """All elements (deterministic order). Guarded by a size limit."""
        if self.order > limit:
            raise FeasibilityError(f"group of order {self.order} too large to enumerate")
        elts = [identity(self.deg)]
        for lvl in reversed(self.levels):
            trans = [lvl.transversal(a, self.deg) for a in sorted(lvl.tree)]
            elts = [pmul(e, t) for e in elts for t in trans]
        return elts

    def conjugate_group(self, g: Perm, known_order=None) -> "PermGroup":
        return PermGroup([conj(x, g) for x in self.gens], self.deg, known_order or self.order)

    def orbit(self, point: int) -> list[int]:
        seen = {point}
        queue = [point]
        head = 0
        while head < len(queue):
            a = queue[head]
            head += 1
            for g in self.gens:
                b = g[a]
                if b not in seen:
                    seen.add(b)
                    queue.append(b)
        return sorted(seen)

    def orbits(self) -> list[list[int]]:
        seen: set[int] = set()
        out = []
        for p in range(self.deg):
            if p not in seen:
                orb = self.orbit(p)
                seen.update(orb)
                out.append(orb)
        return out

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.deg

    def element_digest(self, limit: int = 200_000) -> bytes:
        """Order-insensitive digest of the full element list (small groups)."""
        elts = sorted(self.elements(limit))
        h = hashlib.blake2b(digest_size=16)
        for e in elts:
            h.update(bytes(str(e), "ascii"))
        return h.digest()


def generated_group(gens, deg: int, known_order: int | None = None) -> PermGroup:
    return PermGroup(gens, deg, known_order)


def trivial_group(deg: int) -> PermGroup:
    return PermGroup([], deg)


@dataclass
class Subgroup:
    """A subgroup tracked together with its ambient parent group."""

    parent: PermGroup
    group: PermGroup

    def __post_init__(self):
        if self.group.deg != self.parent.deg:
            raise ValueError("subgroup must act on the parent's domain")

    @property
    def order(self) -> int:
        return self.group.order

    def index(self) -> int:
        assert self.parent.order % self.group.order == 0
        return self.parent.order // self.group.order


def subgroup(parent: PermGroup, gens, known_order: int | None = None) -> Subgroup:
    g = PermGroup(gens, parent.deg, known_order)
    return Subgroup(parent, g)


# -- normal closure, derived series, solvability -------------------------


def normal_closure(G: PermGroup, gens) -> PermGroup:
    """Smallest normal subgroup of G containing the given permutations."""
    closure = [tuple(g) for g in gens if not is_identity(tuple(g))]
    K = PermGroup(closure, G.deg)
    queue = list(closure)
    while queue:
        x = queue.pop()
        for s in G.gens:
            c = conj(x, s)
            if not K.contains(c):
                closure.append(c)
                K = PermGroup(closure, G.deg)
                queue.append(c)
    return K


def derived_subgroup(G: PermGroup) -> PermGroup:
    comms = []
    for a, b in itertools.combinations(G.gens, 2):
        comms.append(pmul(pmul(pinv(a), pinv(b)), pmul(a, b)))
    if not comms:
        return trivial_group(G.deg)
    return normal_closure(G, comms)


def is_solvable(G: PermGroup) -> bool:
    cur = G
    while cur.order > 1:
        nxt = derived_subgroup(cur)
        if nxt.order == cur.order:
            return False
        cur = nxt
    return True


def is_r_group(G: PermGroup, r: int) -> bool:
    n = G.order
    while n % r == 0:
        n //= r
    return n == 1


# -- coset spaces ---------------------------------------------------------


def min_coset_rep(R: PermGroup, g: Perm) -> Perm:
    """Canonical representative of the right coset R*g: the element whose
    base-image tuple under R's base is lexicographically minimal."""
    cur = tuple(g)
    for lvl in R.levels:
        pts = lvl.tree
        if len(pts) > 1:
            best = min(pts, key=cur.__getitem__)
            if best != lvl.bp:
                cur = pmul(lvl.transversal(best, R.deg), cur)
    return cur


class CosetTable:
    """The right cosets of R in G, as canonical representatives.

    Index 0 is the coset R itself. `action` holds, per generator of G,
    the induced map on coset indices, so the table doubles as the
    permutation action of G on the coset space.
    """

    def __init__(self, G: PermGroup, R: PermGroup, max_cosets: int):
        self.G = G
        self.R = R
        index = G.order // R.order
        if index > max_cosets:
            raise FeasibilityError(f"coset space of size {index} exceeds bound {max_cosets}")
        self.reps: list[Perm] = []
        self.lookup: dict[Perm, int] = {}
        self.action: list[list[int]] = [[] for _ in G.gens]
        start = min_coset_rep(R, identity(G.deg))
        self.reps.append(start)
        self.lookup[start] = 0
        head = 0
        while head < len(self.reps):
            rep = self.reps[head]
            for gi, g in enumerate(G.gens):
                nxt = min_coset_rep(R, pmul(rep, g))
                j = self.lookup.get(nxt)
                if j is None:
                    j = len(self.reps)
                    self.reps.append(nxt)
                    self.lookup[nxt] = j
                self.action[gi].append(j)
            head += 1
        assert len(self.reps) == index, (
            f"coset enumeration found {len(self.reps)} cosets, expected {index}"
        )

    @property
    def size(self) -> int:
        return len(self.reps)

    def image_gens(self) -> list[Perm]:
        return [tuple(col) for col in self.action]

    def coset_of(self, g: Perm) -> int:
        return self.lookup[min_coset_rep(self.R, g)]

    def fixed_by_right_mult(self, gens) -> list[int]:
        """Indices of cosets Rg with Rg*s = Rg for every s in gens."""
        out = []
        for i, rep in enumerate(self.reps):
            if all(self.lookup.get(min_coset_rep(self.R, pmul(rep, s))) == i for s in gens):
                out.append(i)
        return out


def normalizer_from_fixed_cosets(G: PermGroup, R: PermGroup, fixed_reps) -> PermGroup:
    """N_G(R) as the union of the R-fixed cosets of R in G."""
    gens = list(R.gens) + [g for g in fixed_reps if not R.contains(g)]
    return PermGroup(gens, G.deg, R.order * len(fixed_reps))


def double_coset_data(G: PermGroup, R: PermGroup, max_cosets: int, ct: CosetTable | None = None):
    """R-orbit decomposition of the coset space of R in G.

    Returns (reps, fixed, ct): one canonical representative per R\\G/R
    double coset, plus the representatives of the singleton orbits (whose
    union is exactly N_G(R)).
    """
    if ct is None:
        ct = CosetTable(G, R, max_cosets)
    seen = [False] * ct.size
    reps = []
    fixed = []
    for i in range(ct.size):
        if seen[i]:
            continue
        reps.append(ct.reps[i])
        queue = [i]
        seen[i] = True
        orbit_size = 1
        while queue:
            a = queue.pop()
            rep = ct.reps[a]
            for s in R.gens:
                b = ct.lookup[min_coset_rep(R, pmul(rep, s))]
                if not seen[b]:
                    seen[b] = True
                    orbit_size += 1
                    queue.append(b)
        if orbit_size == 1:
            fixed.append(ct.reps[i])
    return reps, fixed, ct


def double_coset_reps(G: PermGroup, R: PermGroup, max_cosets: int, ct: CosetTable | None = None):
    """One canonical representative per R\\G/R double coset."""
    reps, _, ct = double_coset_data(G, R, max_cosets, ct)
    return reps, ct


def maximal_overgroups(
    G: PermGroup,
    R: PermGroup,
    max_cosets: int = 200_000,
    ct: CosetTable | None = None,
) -> list[PermGroup]:
    """The maximal subgroups of G containing R (R proper in G).

    Candidates <R, g> over double-coset representatives g are closed
    under pairwise joins; the inclusion-maximal survivors are exactly the
    maximal elements of {K : R <= K < G}, i.e. the maximal subgroups of G
    containing R.
    """
    if R.order == G.order:
        raise ValueError("R must be a proper subgroup of G")
    reps, ct = double_coset_reps(G, R, max_cosets, ct)
    # R itself is the candidate from the identity double coset
    cands: list[PermGroup] = [PermGroup(R.gens, G.deg, R.order)]

    def known(K: PermGroup) -> bool:
        return any(c.order == K.order and K.is_subgroup_of(c) for c in cands)

    for g in reps:
        if R.contains(g):
            continue
        # G.order is an early-exit hint: joins that hit the full group stop
        # as soon as the chain accounts for it
        K = PermGroup(list(R.gens) + [g], G.deg, known_order=G.order)
        if K.order < G.order and not known(K):
            cands.append(K)
    singles = list(cands)
    # close under pairwise joins staying proper in G
    done_pairs: set[tuple[int, int]] = set()
    changed = True
    while changed:
        changed = False
        snapshot = list(cands)
        for ia, ib in itertools.combinations(range(len(snapshot)), 2):
            if (ia, ib) in done_pairs:
                continue
            done_pairs.add((ia, ib))
            A, B = snapshot[ia], snapshot[ib]
            if A.order <= B.order and A.is_subgroup_of(B):
                continue
            if B.order <= A.order and B.is_subgroup_of(A):
                continue
            J = PermGroup(list(A.gens) + list(B.gens), G.deg, known_order=G.order)
            if J.order < G.order and not known(J):
                cands.append(J)
                changed = True
    maximal = [
        K
        for K in cands
        if not any(
            other.order > K.order and K.is_subgroup_of(other) for other in cands
        )
    ]
    # completeness: every single-rep candidate lies inside a returned member
    for K in singles:
        assert any(K.is_subgroup_of(M) for M in maximal)
    return sorted(maximal, key=lambda K: (K.order, sorted(K.gens)))


def conjugacy_classes_of_overgroups(
    G: PermGroup,
    R: PermGroup,
    members,
    NGR: PermGroup | None = None,
    max_cosets: int = 200_000,
) -> int:
    """Number of G-conjugacy classes among subgroups containing R.

    Valid for members all containing the Sylow subgroup R: H and K are
    G-conjugate iff H^n = K for some n in N_G(R), so only a transversal
    of R in N_G(R) needs to be searched.
    """
    if NGR is None:
        _, fixed, _ = double_coset_data(G, R, max_cosets)
        NGR = normalizer_from_fixed_cosets(G, R, fixed)
    trans = CosetTable(NGR, R, max_cosets).reps
    classes: list[PermGroup] = []
    for H in members:
        placed = False
        for K in classes:
            if K.order != H.order:
                continue
            for t in trans:
                if all(K.contains(conj(g, t)) for g in H.gens):
                    placed = True
                    break
            if placed:
                break
        if not placed:
            classes.append(H)
    return len(classes)


# -- normalizers and Sylow subgroups --------------------------------------


def _element_list(H: PermGroup, limit: int = 10_000) -> list[Perm]:
    if H.order > limit:
        raise FeasibilityError(
            f"normalizer orbit needs element enumeration; |H| = {H.order} exceeds {limit}"
        )
    return sorted(H.elements(limit))


def _digest_elements(elts: list[Perm]) -> bytes:
    h = hashlib.blake2b(digest_size=16)
    for e in elts:
        h.update(e.__repr__().encode())
    return h.digest()


def normalizer(
    G: PermGroup,
    H: PermGroup,
    element_limit: int = 10_000,
    visitor=None,
) -> PermGroup:
    """N_G(H) by orbiting H under conjugation, with Schreier generators
    for the stabilizer streamed through an optional early-exit visitor.

    The visitor receives each stabilizer element as it appears; if it
    returns a truthy value the orbit walk aborts and None is returned
    (used by the Sylow climb, which only needs one good element).
    """
    base_elts = _element_list(H, element_limit)
    d0 = _digest_elements(base_elts)
    points: dict[bytes, int] = {d0: 0}
    elt_lists: list[list[Perm]] = [base_elts]
    trans: list[Perm] = [identity(G.deg)]
    stab_gens: list[Perm] = list(H.gens)
    if visitor is not None:
        for g in H.gens:
            if visitor(g):
                return None  # pragma: no cover - H gens rarely useful
    head = 0
    while head < len(elt_lists):
        cur_elts = elt_lists[head]
        cur_t = trans[head]
        for s in G.gens:
            new_elts = sorted(conj(x, s) for x in cur_elts)
            d = _digest_elements(new_elts)
            j = points.get(d)
            if j is None:
                points[d] = len(elt_lists)
                elt_lists.append(new_elts)
                trans.append(pmul(cur_t, s))
            else:
                sch = pmul(pmul(cur_t, s), pinv(trans[j]))
                if not is_identity(sch):
                    stab_gens.append(sch)
                    if visitor is not None and visitor(sch):
                        return None
        head += 1
    N = PermGroup(stab_gens, G.deg, known_order=G.order // len(elt_lists))
    assert N.order * len(elt_lists) == G.order, "normalizer orbit-stabilizer mismatch"
    return N


def sylow_subgroup(G: PermGroup, r: int, seed: int = 0) -> PermGroup:
    """A Sylow r-subgroup, by climbing normalizers of r-subgroups.

    Any r-element of N_G(S) - S extends S (the join is automatically an
    r-group since S is normal in it), so the climb streams normalizer
    stabilizer elements and extends as soon as one works.
    """
    target = nt.rpart(G.order, r)
    if target == 1:
        return trivial_group(G.deg)
    rng = random.Random((seed, "sylow", r, G.order, G.deg).__repr__())
    best: Perm | None = None
    best_ord = 1
    for g in G.gens:
        y = r_element_power(g, r)
        o = perm_order(y)
        if o > best_ord:
            best, best_ord = y, o
    tries = 0
    while best is None or (best_ord < target and tries < 64):
        g = G.random_element(rng)
        y = r_element_power(g, r)
        o = perm_order(y)
        if o > best_ord:
            best, best_ord = y, o
        tries += 1
    assert best is not None, "no r-element found; r must divide |G|"
    S = PermGroup([best], G.deg)

    while S.order < target:
        found: list[Perm] = []

        def try_extend(n: Perm) -> bool:
            y = r_element_power(n, r)
            if is_identity(y) or S.contains(y):
                return False
            found.append(y)
            return True

        N = normalizer(G, S, element_limit=max(target, 10_000), visitor=try_extend)
        if found:
            S = PermGroup(list(S.gens) + [found[0]], G.deg)
            continue
        # full normalizer computed and no streamed element extended S
        if N.order < G.order:
            S = sylow_subgroup_within(N, r, S, seed)
            continue
        # S is normal in G: any r-element outside S extends
        for _ in range(4096):
            y = r_element_power(G.random_element(rng), r)
            if not is_identity(y) and not S.contains(y):
                S = PermGroup(list(S.gens) + [y], G.deg)
                break
        else:
            raise AssertionError("failed to extend normal r-subgroup; should not happen")
    assert S.order == target
    return S


def sylow_subgroup_within(N: PermGroup, r: int, S: PermGroup, seed: int) -> PermGroup:
    """A Sylow r-subgroup of N containing the normal r-subgroup S."""
    P = sylow_subgroup(N, r, seed)
    # S is normal in N, so S <= O_r(N) <= P automatically; verify cheaply
    assert S.is_subgroup_of(P), "normal r-subgroup escaped the Sylow subgroup"
    return P


# -- coset actions with kernels (cores, quotients) -------------------------


class CosetAction:
    """The action of G on the right cosets of H, with exact kernel and
    element lifting along the quotient map."""

    def __init__(self, G: PermGroup, H: PermGroup, max_cosets: int = 10_000):
        self.G = G
        self.H = H
        self.table = CosetTable(G, H, max_cosets)
        m = self.table.size
        self.num_cosets = m
        deg = G.deg
        combined = [
            tuple(col) + tuple(m + x for x in g)
            for col, g in zip(self.table.action, G.gens)
        ]
        self._combined = PermGroup(
            combined, m + deg, known_order=G.order, base_prefix=tuple(range(m))
        )
        kern_gens = []
        for lvl in self._combined.levels[m:]:
            for g in lvl.gens:
                kern_gens.append(tuple(x - m for x in g[m:]))
        kernel_order = math.prod(len(lvl.tree) for lvl in self._combined.levels[m:])
        self.kernel = PermGroup(kern_gens, deg, known_order=kernel_order)
        self.image = PermGroup(
            self.table.image_gens(), m, known_order=G.order // kernel_order
        )

    def apply(self, g: Perm) -> Perm:
        """The permutation of coset indices induced by g in G."""
        return tuple(
            self.table.lookup[min_coset_rep(self.H, pmul(rep, g))]
            for rep in self.table.reps
        )

    def lift(self, q: Perm) -> Perm:
        """Some g in G with apply(g) = q."""
        m = self.num_cosets
        cur = tuple(q) + tuple(range(m, m + self.G.deg))
        acc = identity(m + self.G.deg)
        for lvl in self._combined.levels[:m]:
            a = cur[lvl.bp]
            if a == lvl.bp:
                continue
            if a not in lvl.tree:
                raise ValueError("permutation is not in the image of the action")
            u = lvl.transversal(a, m + self.G.deg)
            cur = pmul(cur, pinv(u))
            acc = pmul(u, acc)
        g = tuple(x - m for x in acc[m:])
        assert self.apply(g) == tuple(q)
        return g


def core(G: PermGroup, H: PermGroup, max_cosets: int = 10_000) -> PermGroup:
    """The largest normal subgroup of G contained in H."""
    return CosetAction(G, H, max_cosets).kernel


def r_core_of_small(H: PermGroup, R_H: PermGroup, r: int) -> PermGroup:
    """O_r(H) as the iterated intersection of conjugates of a Sylow
    r-subgroup R_H of H. Requires R_H small enough to enumerate."""
    elts = set(_element_list(R_H, 1_000_000))
    changed = True
    while changed:
        changed = False
        for s in H.gens:
            conj_elts = {conj(x, s) for x in elts}
            if conj_elts != elts:
                elts &= conj_elts
                changed = True
    gens = sorted(elts - {identity(H.deg)})
    K = PermGroup(gens, H.deg, known_order=len(elts))
    return K


# -- element classes and full maximal-subgroup enumeration -----------------


def element_class_reps(G: PermGroup, limit: int = 10_000) -> list[Perm]:
    """One representative per conjugacy class of nontrivial elements."""
    elts = _element_list(G, limit)
    seen: set[Perm] = set()
    reps = []
    for x in elts:
        if x in seen or is_identity(x):
            continue
        reps.append(x)
        queue = [x]
        seen.add(x)
        while queue:
            y = queue.pop()
            for s in G.gens:
                c = conj(y, s)
                if c not in seen:
                    seen.add(c)
                    queue.append(c)
    return reps


def conjugates_of_subgroup(G: PermGroup, H: PermGroup, element_limit: int = 10_000):
    """All distinct G-conjugates of H (as PermGroups)."""
    base = _element_list(H, element_limit)
    seen = {_digest_elements(base)}
    out = [H]
    queue = [(base, H)]
    while queue:
        elts, K = queue.pop()
        for s in G.gens:
            celts = sorted(conj(x, s) for x in elts)
            d = _digest_elements(celts)
            if d not in seen:
                seen.add(d)
                Kc = PermGroup([conj(g, s) for g in K.gens], G.deg, H.order)
                out.append(Kc)
                queue.append((celts, Kc))
    return out


def maximal_subgroups_small(G: PermGroup, limit: int = 10_000) -> list[PermGroup]:
    """All maximal subgroups of a small group (|G| <= limit).

    Computed as the union over conjugacy-class representatives x of the
    maximal overgroups of <x>, then expanded to full conjugation orbits.
    """
    if G.order > limit:
        raise FeasibilityError(f"|G| = {G.order} exceeds small-group bound {limit}")
    if G.order == 1:
        return []
    class_maximals: list[PermGroup] = []

    def known(K):
        return any(c.order == K.order and K.is_subgroup_of(c) for c in class_maximals)

    for x in element_class_reps(G, limit):
        C = PermGroup([x], G.deg)
        if C.order == G.order:
            # G cyclic of prime order has only the trivial maximal subgroup
            if nt.is_prime(G.order):
                return [trivial_group(G.deg)]
            continue
        for M in maximal_overgroups(G, C, max_cosets=limit):
            if not known(M):
                class_maximals.append(M)
    # inclusion-maximal filtering across classes
    class_maximals = [
        M
        for M in class_maximals
        if not any(o.order > M.order and M.is_subgroup_of(o) for o in class_maximals)
    ]
    out: list[PermGroup] = []
    seen: set[bytes] = set()
    for M in class_maximals:
        for K in conjugates_of_subgroup(G, M, element_limit=limit):
            d = _digest_elements(_element_list(K, limit))
            if d not in seen:
                seen.add(d)
                out.append(K)
    return sorted(out, key=lambda K: (K.order, sorted(K.gens)))


def intersection_small(A: PermGroup, B: PermGroup, limit: int = 10_000) -> PermGroup:
    """A cap B by enumerating the smaller factor."""
    small, big = (A, B) if A.order <= B.order else (B, A)
    elts = [x for x in _element_list(small, limit) if big.contains(x)]
    return PermGroup([x for x in elts if not is_identity(x)], A.deg, known_order=len(elts))


def frattini_small(G: PermGroup, limit: int = 10_000) -> PermGroup:
    """Frattini subgroup of a small group: intersection of all maximals."""
    maxes = maximal_subgroups_small(G, limit)
    if not maxes:
        return G  # trivial group
    elts = _element_list(maxes[0], limit)
    for M in maxes[1:]:
        elts = [x for x in elts if M.contains(x)]
    return PermGroup([x for x in elts if not is_identity(x)], G.deg, known_order=len(elts))
