"""Concrete desk-scale groups as permutation groups.

Every instance is built from explicit generators (Moebius maps on a
projective line, matrices acting on projective points, or hand-rolled
permutations), then checked against its closed-form order and its socle
verified normal of the right index. Degrees stay small; orders are exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .gf import GF
from .groupspec import GroupSpec, OuterLabel, TRIVIAL_OUTER, group_order, socle_order
from .perm import Perm, conj, from_cycles, identity
from .permgroup import PermGroup

# ---------------------------------------------------------------- matrices


def mat_mul(F: GF, A, B):
    n = len(A)
    m = len(B[0])
    k = len(B)
    return tuple(
        tuple(
            _dot(F, [A[i][t] for t in range(k)], [B[t][j] for t in range(k)])
            for j in range(m)
        )
        for i in range(n)
    )


def _dot(F: GF, u, v):
    s = 0
    for a, b in zip(u, v):
        s = F.add(s, F.mul(a, b))
    return s


def mat_identity(F: GF, n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_inv(F: GF, A):
    n = len(A)
    aug = [list(A[i]) + [1 if i == j else 0 for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = F.inv(aug[col][col])
        aug[col] = [F.mul(inv, x) for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                c = aug[r][col]
                aug[r] = [F.sub(x, F.mul(c, y)) for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def mat_transpose(A):
    return tuple(tuple(A[j][i] for j in range(len(A))) for i in range(len(A[0])))


def mat_frobenius(F: GF, A, k=1):
    return tuple(tuple(F.frobenius(x, k) for x in row) for row in A)


def vec_mat(F: GF, v, A):
    return tuple(_dot(F, v, [A[t][j] for t in range(len(v))]) for j in range(len(A[0])))


def pnormalize(F: GF, v):
    """Scale so the first nonzero coordinate is 1."""
    for x in v:
        if x:
            inv = F.inv(x)
            return tuple(F.mul(inv, y) for y in v)
    raise ValueError("zero vector has no projective normalization")


def projective_points(F: GF, n):
    """All normalized points of PG(n-1, q), in lexicographic order."""
    pts = []
    for lead in range(n):
        prefix = (0,) * lead + (1,)
        tails = [()]
        for _ in range(n - lead - 1):
            tails = [t + (x,) for t in tails for x in F.elements()]
        pts.extend(prefix + t for t in tails)
    return pts


class PointAction:
    """A fixed point list with matrix / semilinear action helpers."""

    def __init__(self, F: GF, points):
        self.F = F
        self.points = list(points)
        self.index = {p: i for i, p in enumerate(self.points)}

    def perm_of_matrix(self, A) -> Perm:
        F = self.F
        return tuple(self.index[pnormalize(F, vec_mat(F, p, A))] for p in self.points)

    def perm_of_semilinear(self, frob_k: int, A=None) -> Perm:
        """v -> normalize(frobenius^k(v) * A)."""
        F = self.F
        out = []
        for p in self.points:
            v = tuple(F.frobenius(x, frob_k) for x in p)
            if A is not None:
                v = vec_mat(F, v, A)
            out.append(self.index[pnormalize(F, v)])
        return tuple(out)


def orbit_points(F: GF, seed, matrices):
    """Orbit of a projective point under right multiplication."""
    seed = pnormalize(F, seed)
    seen = {seed}
    order_list = [seed]
    head = 0
    while head < len(order_list):
        v = order_list[head]
        head += 1
        for A in matrices:
            w = pnormalize(F, vec_mat(F, v, A))
            if w not in seen:
                seen.add(w)
                order_list.append(w)
    return sorted(order_list)


# ---------------------------------------------------------------- instances


@dataclass
class GroupInstance:
    name: str
    group: PermGroup
    socle: PermGroup
    spec: GroupSpec | None
    expected_order: int

    def __post_init__(self):
        assert self.group.order == self.expected_order, (
            f"{self.name}: built order {self.group.order}, expected {self.expected_order}"
        )
        if self.spec is not None:
            assert self.socle.order == socle_order(self.spec), (
                f"{self.name}: socle order {self.socle.order} vs formula"
            )
            assert self.group.order == group_order(self.spec)
            # socle normality
            for g in self.group.gens:
                for s in self.socle.gens:
                    assert self.socle.contains(conj(s, g)), f"{self.name}: socle not normal"

    @property
    def deg(self):
        return self.group.deg


# -------------------------------------------------- alternating / symmetric


def build_alternating(n: int, symmetric: bool = False) -> GroupInstance:
    if not 5 <= n <= 13:
        raise ValueError("supported range is 5 <= n <= 13")
    a3 = from_cycles(n, (0, 1, 2))
    cyc = tuple(range(n)) if n % 2 else tuple(range(1, n))
    socle = PermGroup([a3, from_cycles(n, cyc)], known_order=math.factorial(n) // 2)
    if symmetric:
        gens = [from_cycles(n, (0, 1)), from_cycles(n, tuple(range(n)))]
        G = PermGroup(gens, known_order=math.factorial(n))
        spec = GroupSpec("Alt", n, None, OuterLabel("S", 2))
        return GroupInstance(f"S{n}", G, socle, spec, math.factorial(n))
    spec = GroupSpec("Alt", n)
    return GroupInstance(f"A{n}", socle, socle, spec, math.factorial(n) // 2)


# -------------------------------------------------------------- PSL2 family

PSL2_DECORATIONS = ("1", "d", "f2", "f3", "f4", "f5", "2_3", "2^2")


def build_psl2(q: int, decoration: str = "1") -> GroupInstance:
    """Groups with socle L2(q) acting on the projective line (q+1 points).

    Decorations: "1" the socle; "d" = PGL2(q); "f<k>" = extension by a
    field automorphism of order k; "2_3" = the diagonal*field extension
    (M10 when q = 9); "2^2" = <PGL2(q), field involution>.
    """
    from .numtheory import PrimePowerQ

    pq = PrimePowerQ.from_q(q)
    p, f = pq.p, pq.f
    F = GF(p, f)
    inf = q  # the point at infinity
    deg = q + 1

    def moebius(func) -> Perm:
        images = []
        for t in range(deg):
            images.append(func(t))
        return tuple(images)

    lam = F.primitive_element

    def translation(t):
        return F.add(t, 1) if t != inf else inf

    def mult_by(c):
        def act(t):
            if t == inf:
                return inf
            return F.mul(c, t)

        return act

    def inversion(t):
        if t == inf:
            return 0
        if t == 0:
            return inf
        return F.neg(F.inv(t))

    def frob(k):
        def act(t):
            if t == inf:
                return inf
            return F.frobenius(t, k)

        return act

    def compose(g1, g2):
        return lambda t: g2(g1(t))

    sq = F.mul(lam, lam) if p != 2 else lam
    socle_gens = [moebius(translation), moebius(mult_by(sq)), moebius(inversion)]
    t_order = q * (q * q - 1) // math.gcd(2, q - 1)
    socle = PermGroup(socle_gens, deg, known_order=t_order)

    extra: list[Perm] = []
    if decoration == "1":
        outer = TRIVIAL_OUTER
    elif decoration == "d":
        if p == 2:
            raise ValueError("PGL2 = PSL2 for even q")
        outer = OuterLabel("d", 2)
        extra = [moebius(mult_by(lam))]
    elif decoration.startswith("f"):
        k = int(decoration[1:])
        if f % k or k == 1:
            raise ValueError(f"field extension of order {k} invalid for f = {f}")
        outer = OuterLabel("f", k)
        extra = [moebius(frob(f // k))]
    elif decoration == "2_3":
        if p == 2 or f % 2:
            raise ValueError("the 2_3 extension needs q an even power of an odd prime")
        outer = OuterLabel("df", 2)
        extra = [moebius(compose(frob(f // 2), mult_by(lam)))]
    elif decoration == "2^2":
        if p == 2 or f % 2:
            raise ValueError("the 2^2 extension needs q an even power of an odd prime")
        outer = OuterLabel("d*f", 4)
        extra = [moebius(mult_by(lam)), moebius(frob(f // 2))]
    else:
        raise ValueError(f"unknown decoration {decoration!r}")

    spec = GroupSpec("L", 2, q, outer)
    total = t_order * outer.order
    G = PermGroup(socle_gens + extra, deg, known_order=total) if extra else socle
    name = {
        "1": f"L2_{q}",
        "d": f"PGL2_{q}",
        "2_3": f"L2_{q}.2_3" if q != 9 else "M10",
        "2^2": f"L2_{q}.2^2",
    }.get(decoration)
    if name is None:
        k = int(decoration[1:])
        name = f"PSigmaL2_{q}" if k == 2 else f"L2_{q}.{k}"
    return GroupInstance(name, G, socle, spec, total)


# ------------------------------------------------------------- L3 family


def _sl3_matrices(F: GF):
    lam = F.primitive_element
    gens = []
    for j in range(F.f):
        c = F.pow(lam, j) if j else 1
        gens.append(((1, c, 0), (0, 1, 0), (0, 0, 1)))
    gens.append(((0, 1, 0), (0, 0, 1), (1, 0, 0)))
    return gens


def _l3_point_line_action(F: GF, mats, extra_semilinear=()):
    """Permutations of PG(2,q) points + dual lines for matrices and the
    polarity/field maps. Returns (point list size N, perm builder)."""
    pts = projective_points(F, 3)
    act = PointAction(F, pts)
    n_pts = len(pts)

    def perm_on_both(A):
        Ainv_t = mat_transpose(mat_inv(F, A))
        p1 = act.perm_of_matrix(A)
        p2 = act.perm_of_matrix(Ainv_t)
        return tuple(list(p1) + [n_pts + x for x in p2])

    def polarity():
        swap = list(range(2 * n_pts))
        for i in range(n_pts):
            swap[i] = n_pts + i
            swap[n_pts + i] = i
        return tuple(swap)

    def field_on_both(k):
        p1 = act.perm_of_semilinear(k)
        return tuple(list(p1) + [n_pts + x for x in p1])

    return act, perm_on_both, polarity, field_on_both


def build_l3(q: int, decoration: str = "1") -> GroupInstance:
    """Groups with socle L3(q).

    Decorations: "1", "d" (PGL3), "f2" (PSigmaL3, q square), "g" (the
    polarity extension, on points+lines), "gf" (polarity * field).
    """
    from .numtheory import PrimePowerQ

    pq = PrimePowerQ.from_q(q)
    p, f = pq.p, pq.f
    F = GF(p, f)
    d = math.gcd(3, q - 1)
    t_order = socle_order(GroupSpec("L", 3, q))
    mats = _sl3_matrices(F)

    if decoration in ("1", "d", "f2"):
        pts = projective_points(F, 3)
        act = PointAction(F, pts)
        socle_gens = [act.perm_of_matrix(A) for A in mats]
        socle = PermGroup(socle_gens, len(pts), known_order=t_order)
        if decoration == "1":
            spec = GroupSpec("L", 3, q)
            return GroupInstance(f"L3_{q}", socle, socle, spec, t_order)
        if decoration == "d":
            if d == 1:
                raise ValueError("PGL3(q) = L3(q) when gcd(3, q-1) = 1")
            lam = F.primitive_element
            diag = ((lam, 0, 0), (0, 1, 0), (0, 0, 1))
            G = PermGroup(socle_gens + [act.perm_of_matrix(diag)], len(pts), t_order * d)
            spec = GroupSpec("L", 3, q, OuterLabel("d", d))
            return GroupInstance(f"PGL3_{q}", G, socle, spec, t_order * d)
        if f % 2:
            raise ValueError("f2 decoration needs square q")
        phi = act.perm_of_semilinear(f // 2)
        G = PermGroup(socle_gens + [phi], len(pts), t_order * 2)
        spec = GroupSpec("L", 3, q, OuterLabel("f", 2))
        return GroupInstance(f"PSigmaL3_{q}", G, socle, spec, t_order * 2)

    act, perm_on_both, polarity, field_on_both = _l3_point_line_action(F, mats)
    socle_gens = [perm_on_both(A) for A in mats]
    deg = 2 * len(act.points)
    socle = PermGroup(socle_gens, deg, known_order=t_order)
    if decoration == "g":
        G = PermGroup(socle_gens + [polarity()], deg, t_order * 2)
        spec = GroupSpec("L", 3, q, OuterLabel("g", 2))
        name = f"L3_{q}.2_3" if q == 4 else f"L3_{q}.2"
        return GroupInstance(name, G, socle, spec, t_order * 2)
    if decoration == "gf":
        if f % 2:
            raise ValueError("gf decoration needs square q")
        gf = tuple(polarity()[x] for x in field_on_both(f // 2))
        G = PermGroup(socle_gens + [gf], deg, t_order * 2)
        spec = GroupSpec("L", 3, q, OuterLabel("gf", 2))
        return GroupInstance(f"L3_{q}.2_1", G, socle, spec, t_order * 2)
    raise ValueError(f"unknown decoration {decoration!r}")


# ------------------------------------------------------------- U3 family


def _hermitian_conj(F: GF, x, half):
    return F.frobenius(x, half)


def _su3_matrices(F0: GF):
    """Generators of SU3(q0) over GF(q0^2), Hermitian Gram matrix = identity.

    Built first for the antidiagonal form (where root elements are
    triangular), then conjugated by a Gram-Schmidt base change.
    """
    p, f0 = F0.p, F0.f
    F = GF(p, 2 * f0)
    q0 = F0.q
    half = f0  # conjugation is frobenius^f0 on GF(q0^2)

    def cj(x):
        return F.frobenius(x, half)

    J = ((0, 0, 1), (0, 1, 0), (1, 0, 0))

    def upper(a):
        """Unipotent fixing e1 for the J-form: find b with
        b + conj(b) + a*conj(a) = 0."""
        target = F.neg(F.mul(a, cj(a)))
        for b in F.elements():
            if F.add(b, cj(b)) == target:
                return ((1, a, b), (0, 1, F.neg(cj(a))), (0, 0, 1))
        raise AssertionError("trace equation unsolvable")

    lam = F.primitive_element
    torus = ((lam, 0, 0), (0, F.pow(lam, q0 - 1), 0), (0, 0, F.pow(lam, -q0)))
    gens_J = [upper(1), upper(lam), torus]
    gens_J += [mat_mul(F, mat_mul(F, J, g), J) for g in list(gens_J)]

    # base change C with C J conj(C)^T = I (Hermitian Gram-Schmidt)
    def form(u, v):
        return _dot(F, vec_mat(F, u, J), [cj(x) for x in v])

    vecs = []
    candidates = [
        tuple(v)
        for v in [(0, 1, 0)]
        + [(1, 0, c) for c in F.elements()]
        + [(1, c, 0) for c in F.elements()]
        + [(0, c, 1) for c in F.elements()]
        + [(1, a, b) for a in F.elements() for b in F.elements()]
    ]
    for _ in range(3):
        for v in candidates:
            # orthogonalize against current basis
            w = v
            for b in vecs:
                coef = F.div(form(w, b), form(b, b))
                w = tuple(F.sub(wi, F.mul(coef, bi)) for wi, bi in zip(w, b))
            nw = form(w, w)
            if nw == 0 or all(x == 0 for x in w):
                continue
            # scale w so that form(w, w) = 1: need s with s*conj(s)*nw = 1
            scl = None
            for s in range(1, F.q):
                if F.mul(F.mul(s, cj(s)), nw) == 1:
                    scl = s
                    break
            if scl is None:
                continue
            vecs.append(tuple(F.mul(scl, x) for x in w))
            break
        else:
            raise AssertionError("hermitian basis search failed")
    C = tuple(vecs)
    Cc = tuple(tuple(cj(x) for x in row) for row in C)
    assert mat_mul(F, mat_mul(F, C, J), mat_transpose(Cc)) == mat_identity(F, 3), (
        "base change does not carry J to the identity Gram matrix"
    )
    Cinv = mat_inv(F, C)
    gens_I = [mat_mul(F, mat_mul(F, C, g), Cinv) for g in gens_J]
    return F, gens_I


def build_u3(q0: int, decoration: str = "1") -> GroupInstance:
    """Groups with socle U3(q0), acting on the q0^3 + 1 isotropic points
    of the identity-Gram Hermitian form on GF(q0^2)^3."""
    from .numtheory import PrimePowerQ

    pq = PrimePowerQ.from_q(q0)
    p, f0 = pq.p, pq.f
    F, mats = _su3_matrices(GF(p, f0))
    half = f0

    def cj(x):
        return F.frobenius(x, half)

    # isotropic projective points of the identity form
    iso = []
    for v in projective_points(F, 3):
        if _dot(F, v, [cj(x) for x in v]) == 0:
            iso.append(v)
    assert len(iso) == q0**3 + 1
    act = PointAction(F, iso)
    socle_gens = [act.perm_of_matrix(A) for A in mats]
    t_order = socle_order(GroupSpec("U", 3, q0))
    socle = PermGroup(socle_gens, len(iso), known_order=t_order)
    d = math.gcd(3, q0 + 1)

    if decoration == "1":
        spec = GroupSpec("U", 3, q0)
        return GroupInstance(f"U3_{q0}", socle, socle, spec, t_order)
    if decoration == "f2":
        # the involutory field automorphism x -> x^q0 (e.g. G2(2) = U3(3).2)
        phi = act.perm_of_semilinear(half)
        G = PermGroup(socle_gens + [phi], len(iso), t_order * 2)
        spec = GroupSpec("U", 3, q0, OuterLabel("f", 2))
        return GroupInstance(f"U3_{q0}.2", G, socle, spec, t_order * 2)
    if decoration in ("d3", "f3", "df3", "3^2"):
        if decoration != "f3" and d != 3:
            raise ValueError("diagonal part needs gcd(3, q0+1) = 3")
        extra = []
        lam = F.primitive_element
        # norm-1 scalar generating the determinant group C_{q0+1}
        mu = F.pow(lam, q0 - 1)
        diag = ((mu, 0, 0), (0, 1, 0), (0, 0, 1))
        if decoration in ("d3", "3^2"):
            extra.append(act.perm_of_matrix(diag))
        if decoration in ("f3", "3^2"):
            if (2 * f0) % 3:
                raise ValueError("field part of order 3 needs 3 | 2*f0")
            extra.append(act.perm_of_semilinear(2 * f0 // 3))
        if decoration == "df3":
            if (2 * f0) % 3:
                raise ValueError("field part of order 3 needs 3 | 2*f0")
            phi_perm = act.perm_of_semilinear(2 * f0 // 3)
            d_perm = act.perm_of_matrix(diag)
            extra.append(tuple(phi_perm[x] for x in d_perm))
        tag = {"d3": "d", "f3": "f", "df3": "df", "3^2": "d*f"}[decoration]
        order = 9 if decoration == "3^2" else 3
        G = PermGroup(socle_gens + extra, len(iso), t_order * order)
        spec = GroupSpec("U", 3, q0, OuterLabel(tag, order))
        suffix = {"d3": "3_d", "f3": "3_f", "df3": "3_df", "3^2": "3^2"}[decoration]
        return GroupInstance(f"U3_{q0}.{suffix}", G, socle, spec, t_order * order)
    raise ValueError(f"unknown decoration {decoration!r}")


# ------------------------------------------------------------------ Sz(8)


@lru_cache(maxsize=None)
def _sz8_data():
    """GF(8), the Suzuki generator matrices, and the 65-point ovoid."""
    F = GF(2, 3)
    theta = 4  # the Suzuki twist x -> x^4; theta^2 = 2q

    def tw(x):
        return F.pow(x, theta)

    def Q(a, b):
        # lower unipotent of the Suzuki group
        r3c1 = F.add(F.mul(a, tw(a)), b)  # a^{theta+1} + b
        r4c1 = F.add(F.add(F.mul(F.mul(a, a), tw(a)), F.mul(a, b)), tw(b))
        return ((1, 0, 0, 0), (a, 1, 0, 0), (r3c1, tw(a), 1, 0), (r4c1, b, a, 1))

    lam = F.primitive_element
    dmat = tuple(
        tuple(F.pow(lam, e) if i == j else 0 for j, e in enumerate((3, 2, -2, -3)))
        for i in range(4)
    )
    wmat = ((0, 0, 0, 1), (0, 0, 1, 0), (0, 1, 0, 0), (1, 0, 0, 0))
    mats = (Q(1, 0), Q(0, 1), Q(lam, 0), dmat, wmat)
    pts = tuple(orbit_points(F, (1, 0, 0, 0), mats))
    assert len(pts) == 65, f"ovoid has {len(pts)} points"
    return F, mats, pts


def build_sz8() -> GroupInstance:
    """Sz(8) from 4-dimensional matrices over GF(8), acting on the
    65-point ovoid (orbit of a singular point)."""
    F, mats, pts = _sz8_data()
    act = PointAction(F, pts)
    gens = [act.perm_of_matrix(A) for A in mats]
    order = 29120
    G = PermGroup(gens, 65, known_order=order)
    spec = GroupSpec("2B2", None, 8)
    return GroupInstance("Sz8", G, G, spec, order)


def build_sz8_3() -> GroupInstance:
    """Sz(8):3, adjoining the field automorphism (the ovoid is
    frobenius-stable since it is defined over GF(2))."""
    base = build_sz8()
    F, mats, pts = _sz8_data()
    act = PointAction(F, pts)
    phi = act.perm_of_semilinear(1)
    G = PermGroup(list(base.group.gens) + [phi], 65, known_order=29120 * 3)
    spec = GroupSpec("2B2", None, 8, OuterLabel("f", 3))
    return GroupInstance("Sz8.3", G, base.socle, spec, 29120 * 3)


# ----------------------------------------------------------------- Sp6(2)


def build_sp6_2() -> GroupInstance:
    """Sp6(2) generated by symplectic transvections, acting on the 63
    nonzero vectors of F_2^6."""
    n = 6
    # symplectic form: hyperbolic pairs (0,1), (2,3), (4,5); vectors are
    # bitmask-encoded, point index = vector value - 1
    def B(x, y):
        s = 0
        for i in range(0, n, 2):
            s ^= (x >> i & 1) * (y >> i + 1 & 1) ^ (x >> i + 1 & 1) * (y >> i & 1)
        return s

    def tv(v):
        images = []
        for idx in range(63):
            x = idx + 1
            y = x ^ (v if B(x, v) else 0)
            images.append(y - 1)
        return tuple(images)

    vs = [1, 2, 4, 8, 16, 32, 1 ^ 4, 2 ^ 8, 4 ^ 16, 8 ^ 32, 1 ^ 2 ^ 4, 2 ^ 4 ^ 8]
    gens = [tv(v) for v in vs]
    order = 1451520
    G = PermGroup(gens, 63, known_order=order)
    spec = GroupSpec("Sp", 6, 2)
    return GroupInstance("Sp6_2", G, G, spec, order)


# -------------------------------------------------------------------- M11


def build_m11() -> GroupInstance:
    a = from_cycles(11, tuple(range(11)))
    b = from_cycles(11, (2, 6, 10, 7), (3, 9, 4, 5))
    G = PermGroup([a, b], 11, known_order=7920)
    spec = GroupSpec("Spor", name="M11")
    return GroupInstance("M11", G, G, spec, 7920)


# ------------------------------------------------- small / reduction groups


def build_cyclic(n: int, name=None) -> GroupInstance:
    from .numtheory import factorize

    facs = factorize(n)
    deg = sum(p**e for p, e in facs.items()) if n > 1 else 1
    cycs = []
    start = 0
    for p, e in facs.items():
        cycs.append(tuple(range(start, start + p**e)))
        start += p**e
    g = from_cycles(deg, *cycs)
    G = PermGroup([g], deg, known_order=n) if n > 1 else PermGroup([], 1)
    return GroupInstance(name or f"C{n}", G, G, None, n)


def build_dihedral(n: int) -> GroupInstance:
    """Dihedral group of order 2n on n points."""
    rot = from_cycles(n, tuple(range(n)))
    refl = tuple((n - i) % n for i in range(n))
    G = PermGroup([rot, refl], n, known_order=2 * n)
    return GroupInstance(f"D{2 * n}", G, G, None, 2 * n)


def build_frobenius(p: int, k: int, name=None) -> GroupInstance:
    """p:k <= AGL1(p): x -> ax + b with a of multiplicative order k."""
    from .numtheory import is_prime

    assert is_prime(p) and (p - 1) % k == 0
    F = GF(p, 1)
    a = F.pow(F.primitive_element, (p - 1) // k)
    trans = tuple((x + 1) % p for x in range(p))
    mult = tuple(a * x % p for x in range(p))
    gens = [trans] + ([mult] if k > 1 else [])
    G = PermGroup(gens, p, known_order=p * k)
    return GroupInstance(name or f"F{p * k}({p}:{k})", G, G, None, p * k)


def build_agl1(q: int) -> GroupInstance:
    """AGL1(q) = q:(q-1) acting on the field."""
    from .numtheory import PrimePowerQ

    pq = PrimePowerQ.from_q(q)
    F = GF(pq.p, pq.f)
    lam = F.primitive_element
    gens = [tuple(F.add(x, b) for x in range(q)) for b in _field_basis(F)]
    gens.append(tuple(F.mul(lam, x) for x in range(q)))
    G = PermGroup(gens, q, known_order=q * (q - 1))
    return GroupInstance(f"AGL1_{q}", G, G, None, q * (q - 1))


def _field_basis(F: GF):
    """Additive generators of GF(p^f): the encodings of 1, x, ..., x^{f-1}."""
    return [pow(F.p, i) for i in range(F.f)]


def build_sl2_3() -> GroupInstance:
    """SL2(3) acting on the 8 nonzero vectors of F_3^2."""
    vecs = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]
    idx = {v: i for i, v in enumerate(vecs)}

    def mat_perm(m):
        return tuple(
            idx[((m[0][0] * a + m[1][0] * b) % 3, (m[0][1] * a + m[1][1] * b) % 3)]
            for (a, b) in vecs
        )

    gens = [mat_perm(((1, 1), (0, 1))), mat_perm(((0, 1), (2, 0)))]
    G = PermGroup(gens, 8, known_order=24)
    return GroupInstance("SL2_3", G, G, None, 24)


def build_a4_x_c2() -> GroupInstance:
    """A4 x C2 on 4 + 2 points: coprime-lemma example with reducible action."""
    gens = [
        from_cycles(6, (0, 1, 2)),
        from_cycles(6, (0, 1), (2, 3)),
        from_cycles(6, (4, 5)),
    ]
    G = PermGroup(gens, 6, known_order=24)
    return GroupInstance("A4xC2", G, G, None, 24)


def build_s4() -> GroupInstance:
    G = PermGroup([from_cycles(4, (0, 1)), from_cycles(4, (0, 1, 2, 3))], 4, 24)
    return GroupInstance("S4", G, G, None, 24)


def build_a5_wr2() -> GroupInstance:
    """(A5 x A5):2 with the swap involution, on 10 points."""
    gens = [
        from_cycles(10, (0, 1, 2)),
        from_cycles(10, (0, 1, 2, 3, 4)),
        from_cycles(10, (5, 6, 7)),
        from_cycles(10, (5, 6, 7, 8, 9)),
        from_cycles(10, (0, 5), (1, 6), (2, 7), (3, 8), (4, 9)),
    ]
    G = PermGroup(gens, 10, known_order=7200)
    socle = PermGroup(gens[:4], 10, known_order=3600)
    return GroupInstance("A5wr2", G, socle, None, 7200)


def build_direct_product(a: GroupInstance, b: GroupInstance, name: str) -> GroupInstance:
    da, db = a.group.deg, b.group.deg
    gens = [tuple(g) + tuple(range(da, da + db)) for g in a.group.gens]
    gens += [tuple(range(da)) + tuple(da + x for x in g) for g in b.group.gens]
    G = PermGroup(gens, da + db, known_order=a.group.order * b.group.order)
    return GroupInstance(name, G, G, None, a.group.order * b.group.order)


# ----------------------------------------------------------------- registry


_BUILDERS = {}


def _register(name, fn):
    _BUILDERS[name] = fn


for _n in range(5, 14):
    _register(f"A{_n}", (lambda n: (lambda: build_alternating(n)))(_n))
    _register(f"S{_n}", (lambda n: (lambda: build_alternating(n, True)))(_n))

for _q in (4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 31, 32, 81):
    _register(f"L2_{_q}", (lambda q: (lambda: build_psl2(q)))(_q))
for _q in (5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 31, 81):
    _register(f"PGL2_{_q}", (lambda q: (lambda: build_psl2(q, "d")))(_q))
for _q, _k in ((9, 2), (16, 2), (16, 4), (25, 2), (27, 3), (32, 5), (8, 3), (81, 2), (81, 4), (4, 2)):
    _name = f"PSigmaL2_{_q}" if _k == 2 else f"L2_{_q}.{_k}"
    _register(_name, (lambda q, k: (lambda: build_psl2(q, f"f{k}")))(_q, _k))
_register("M10", lambda: build_psl2(9, "2_3"))
_register("L2_9.2^2", lambda: build_psl2(9, "2^2"))
_register("L2_25.2_3", lambda: build_psl2(25, "2_3"))
_register("L2_25.2^2", lambda: build_psl2(25, "2^2"))
_register("L2_81.2_3", lambda: build_psl2(81, "2_3"))
_register("L2_81.2^2", lambda: build_psl2(81, "2^2"))

_register("L3_2", lambda: build_l3(2))
_register("L3_2.2", lambda: build_l3(2, "g"))
_register("L3_3", lambda: build_l3(3))
_register("L3_3.2", lambda: build_l3(3, "g"))
_register("L3_4", lambda: build_l3(4))
_register("PGL3_4", lambda: build_l3(4, "d"))
_register("PSigmaL3_4", lambda: build_l3(4, "f2"))
_register("L3_4.2_3", lambda: build_l3(4, "g"))
_register("L3_4.2_1", lambda: build_l3(4, "gf"))

_register("U3_3", lambda: build_u3(3))
_register("U3_3.2", lambda: build_u3(3, "f2"))
_register("U3_4", lambda: build_u3(4))
_register("U3_8", lambda: build_u3(8))
_register("U3_8.3_d", lambda: build_u3(8, "d3"))
_register("U3_8.3_f", lambda: build_u3(8, "f3"))
_register("U3_8.3_df", lambda: build_u3(8, "df3"))
_register("U3_8.3^2", lambda: build_u3(8, "3^2"))

_register("Sz8", build_sz8)
_register("Sz8.3", build_sz8_3)
_register("Sp6_2", build_sp6_2)
_register("M11", build_m11)

_register("AGL1_8", lambda: build_agl1(8))
_register("AGL1_9", lambda: build_agl1(9))
_register("F21", lambda: build_frobenius(7, 3, "F21"))
_register("F20", lambda: build_frobenius(5, 4, "F20"))
_register("S4", build_s4)
_register("SL2_3", build_sl2_3)
_register("A4xC2", build_a4_x_c2)
_register("A5wr2", build_a5_wr2)
for _n in (6, 12, 20):
    _register(f"C{_n}", (lambda n: (lambda: build_cyclic(n)))(_n))
for _n in (6, 10):
    _register(f"D{2 * _n}", (lambda n: (lambda: build_dihedral(n)))(_n))


@lru_cache(maxsize=None)
def build_instance(name: str) -> GroupInstance:
    if name not in _BUILDERS:
        raise KeyError(f"unknown catalog instance {name!r}")
    return _BUILDERS[name]()


def catalog_names():
    return sorted(_BUILDERS)


def build_reduction_examples():
    """The semidirect-product test groups for the reduction theorems."""
    return [
        build_instance("AGL1_8"),
        build_instance("AGL1_9"),
        build_instance("F21"),
        build_instance("S4"),
        build_instance("A4xC2"),
        build_instance("A5wr2"),
    ]


def build_matrix_projective(
    F: GF, mats, kind: str, name: str = "custom", expected_order: int | None = None,
    max_points: int = 200_000,
) -> GroupInstance:
    """A permutation group from invertible matrices over F acting on
    projective points.

    kind: "linear" acts on all of PG(n-1, q); "unitary" on the isotropic
    points of the identity-Gram Hermitian form (F must be a square field);
    "orbit" on the orbit of the first standard basis vector (used for
    ovoid-style actions).
    """
    n = len(mats[0])
    for A in mats:
        mat_inv(F, A)  # raises on a singular generator
    if kind == "linear":
        pts = projective_points(F, n)
    elif kind == "unitary":
        if F.f % 2:
            raise ValueError("unitary kind needs a square field")
        half = F.f // 2
        pts = [
            v
            for v in projective_points(F, n)
            if _dot(F, v, [F.frobenius(x, half) for x in v]) == 0
        ]
    elif kind == "orbit":
        seed = tuple(1 if i == 0 else 0 for i in range(n))
        pts = orbit_points(F, seed, mats)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    if not 1 <= len(pts) <= max_points:
        raise ValueError(f"point set of size {len(pts)} out of range")
    act = PointAction(F, pts)
    gens = [act.perm_of_matrix(A) for A in mats]
    G = PermGroup(gens, len(pts), known_order=expected_order)
    return GroupInstance(name, G, G, None, expected_order or G.order)


def catalog_manifest(path=None):
    """The frozen roster: (name, spec, expected checks per r) triples."""
    from .oracle import load_manifest

    manifest = load_manifest(path)
    out = []
    for entry in manifest["instance"]:
        spec = build_instance(entry["name"]).spec
        out.append((entry["name"], spec, entry.get("check", [])))
    return out
