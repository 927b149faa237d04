import pytest

from unimax.catalog import build_instance
from unimax.oracle import (
    Bounds,
    brute_M_R,
    brute_weak_subnormal,
    check_coprime_lemma,
    check_lemma_equiv,
    check_rfrattini,
    check_thm39_two_primes,
    oracle_maximal_sylow,
    socle_kernel,
)
from unimax.permgroup import FeasibilityError, PermGroup, sylow_subgroup
from unimax.perm import from_cycles


def test_brute_examples():
    rep = brute_M_R(build_instance("A5"), 2)
    assert rep.unique and rep.members[0].order == 12
    rep = brute_M_R(build_instance("A6"), 3)
    assert rep.unique and rep.members[0].order == 36
    rep = brute_M_R(build_instance("L2_11"), 2)
    assert not rep.unique and len(rep.members) >= 2


def test_socle_kernel():
    inst = build_instance("S6")
    R = sylow_subgroup(inst.group, 2)
    R0 = socle_kernel(inst.group, inst.socle, R)
    assert R0.order == 8  # Sylow-2 of A6
    inst2 = build_instance("L2_8.3")
    R3 = sylow_subgroup(inst2.group, 3)
    R30 = socle_kernel(inst2.group, inst2.socle, R3)
    assert R30.order == 9


def test_r0_trivial_lemma22():
    """L2(32).5 with r = 5: R_0 = 1 and at least two maximal overgroups."""
    rep = brute_M_R(build_instance("L2_32.5"), 5)
    assert not rep.unique
    assert rep.invariants.get("lemma2_2") is True


def test_weak_subnormal_oracle():
    assert brute_weak_subnormal(build_instance("PGL2_7"), 2) is True
    assert brute_weak_subnormal(build_instance("M10"), 2) is True
    assert brute_weak_subnormal(build_instance("PSigmaL2_9"), 2) is False
    assert brute_weak_subnormal(build_instance("A6"), 3) is True


def test_lemma_equiv():
    assert check_lemma_equiv(build_instance("L2_8.3"), 3) is True
    assert check_lemma_equiv(build_instance("PGL2_17"), 2) is True
    with pytest.raises(ValueError):
        check_lemma_equiv(build_instance("A9"), 3)  # H != N(R0)


def test_lemma_equiv_four_way_false():
    """L2(27).3 with r = 3: H = N(R_0) Borel but N(R) < N(R_0): all four
    properties must be false together."""
    from unimax.oracle import check_lemma_equiv_parts
    from unimax.permgroup import double_coset_data, normalizer_from_fixed_cosets

    inst = build_instance("L2_27.3")
    rep = brute_M_R(inst, 3)
    assert rep.unique and rep.ngr0_is_unique_member
    assert rep.invariants["lemma8_1"] is True
    assert rep.weakly_subnormal is False


def test_coprime_lemma_cases():
    agl8 = build_instance("AGL1_8")
    N = PermGroup([g for g in agl8.group.gens[:3]], 8)
    K = PermGroup([agl8.group.gens[3]], 8)
    assert N.order == 8 and K.order == 7
    assert check_coprime_lemma(agl8.group, N, K) is True

    f21 = build_instance("F21")
    N21 = PermGroup([f21.group.gens[0]], 7)
    K21 = PermGroup([f21.group.gens[1]], 7)
    assert check_coprime_lemma(f21.group, N21, K21) is True

    agl9 = build_instance("AGL1_9")
    N9 = PermGroup(list(agl9.group.gens[:2]), 9)
    K9 = PermGroup([agl9.group.gens[2]], 9)
    assert N9.order == 9 and K9.order == 8
    assert check_coprime_lemma(agl9.group, N9, K9) is True

    # reducible: A4 x C2 with K = C3 acting trivially on the C2 factor
    mix = build_instance("A4xC2")
    Nmix = PermGroup(
        [from_cycles(6, (0, 1), (2, 3)), from_cycles(6, (0, 2), (1, 3)), from_cycles(6, (4, 5))],
        6,
    )
    Kmix = PermGroup([from_cycles(6, (0, 1, 2))], 6)
    assert Nmix.order == 8 and Kmix.order == 3
    assert check_coprime_lemma(mix.group, Nmix, Kmix) is False


def test_coprime_lemma_f20():
    f20 = build_instance("F20")
    N = PermGroup([f20.group.gens[0]], 5)
    K = PermGroup([f20.group.gens[1]], 5)
    assert check_coprime_lemma(f20.group, N, K) is True


def test_rfrattini_examples():
    s4 = build_instance("S4").group
    assert check_rfrattini(s4, 2) is True
    a4 = PermGroup([from_cycles(4, (0, 1, 2)), from_cycles(4, (0, 1), (2, 3))], 4)
    assert check_rfrattini(a4, 3) is True
    assert check_rfrattini(a4, 2) is True
    c6 = build_instance("C6").group
    assert check_rfrattini(c6, 2) is True
    assert check_rfrattini(c6, 3) is True


def test_rfrattini_d_values():
    """Spot value: for S4 and r = 2, D = O_2(S4) = V4 (Phi(S3) = 1), and
    the odd-index maximals (the D8 class) intersect in V4."""
    from unimax.permgroup import maximal_subgroups_small, r_core_of_small

    s4 = build_instance("S4").group
    R = sylow_subgroup(s4, 2)
    o2 = r_core_of_small(s4, R, 2)
    assert o2.order == 4
    maxes = maximal_subgroups_small(s4)
    odd = [M for M in maxes if (24 // M.order) % 2]
    assert sorted(M.order for M in odd) == [8, 8, 8]
    # C6, r=2: the 2'-index maximal is C2 (index 3), so D = C2
    c6 = build_instance("C6").group
    R2 = sylow_subgroup(c6, 2)
    assert r_core_of_small(c6, R2, 2).order == 2


def test_thm39_two_primes():
    for name, r in [("AGL1_8", 7), ("F21", 3), ("F20", 5), ("AGL1_9", 2)]:
        inst = build_instance(name)
        res = check_thm39_two_primes(inst.group, r)
        if res is not None:
            assert res is True


def test_a5wr2_unique():
    """(A5 x A5):2 with r = 2: the Sylow swaps the components and lies in
    a unique maximal subgroup (the general reduction theorem shape)."""
    inst = build_instance("A5wr2")
    G = inst.group
    R = sylow_subgroup(G, 2)
    assert R.order == 32
    # R acts transitively on the two components: some element swaps blocks
    assert any(g[0] >= 5 for g in R.gens for _ in [0])
    from unimax.permgroup import maximal_overgroups

    M = maximal_overgroups(G, R)
    assert len(M) == 1
    assert M[0].order == 288  # (A4 x A4):2 . 2


def test_oracle_maximal_sylow():
    assert oracle_maximal_sylow(build_instance("PGL2_7"), 2) is True
    assert oracle_maximal_sylow(build_instance("M10"), 2) is True
    assert oracle_maximal_sylow(build_instance("A6"), 2) is False
    assert oracle_maximal_sylow(build_instance("L2_17"), 2) is True


def test_feasibility_bounds():
    with pytest.raises(FeasibilityError):
        brute_M_R(build_instance("A13"), 2, Bounds())
    with pytest.raises(FeasibilityError):
        brute_M_R(build_instance("Sp6_2"), 5, Bounds())  # coset space too big


def test_m11_or_h():
    rep = brute_M_R(build_instance("M11"), 11)
    assert rep.unique
    assert rep.or_h_order == 1  # H = L2(11) has trivial 11-core
    assert rep.m_or_h_unique is False
