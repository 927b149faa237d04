import pytest

from unimax.catalog import (
    build_agl1,
    build_alternating,
    build_instance,
    build_l3,
    build_psl2,
    build_reduction_examples,
    build_u3,
    catalog_names,
)
from unimax.groupspec import group_order, socle_order
from unimax.perm import conj, order as perm_order
from unimax.permgroup import normal_closure, PermGroup


def element_orders(G):
    return sorted({perm_order(x) for x in G.elements()})


def test_alternating_range():
    assert build_alternating(5).group.order == 60
    assert build_alternating(9).group.order == 181440
    inst = build_alternating(6, symmetric=True)
    assert inst.group.order == 720
    assert inst.socle.order == 360
    with pytest.raises(ValueError):
        build_alternating(4)
    with pytest.raises(ValueError):
        build_alternating(14)


def test_psl2_orders_and_socle():
    for q, expected in [(4, 60), (5, 60), (7, 168), (8, 504), (9, 360), (17, 2448)]:
        inst = build_psl2(q)
        assert inst.group.order == expected
        assert inst.deg == q + 1
    assert build_psl2(17, "d").group.order == 4896
    assert build_psl2(8, "f3").group.order == 1512
    with pytest.raises(ValueError):
        build_psl2(8, "d")  # PGL2 = PSL2 for even q
    with pytest.raises(ValueError):
        build_psl2(7, "2_3")  # needs square q


def test_l2_9_extension_fingerprints():
    """ATLAS naming pinned by element-order census: PGL2(9) has elements
    of order 10, M10 has order-8 elements but none of order 10, and
    PSigmaL2(9) has neither."""
    pgl = element_orders(build_instance("PGL2_9").group)
    m10 = element_orders(build_instance("M10").group)
    psig = element_orders(build_instance("PSigmaL2_9").group)
    assert 10 in pgl
    assert 8 in m10 and 10 not in m10
    assert 8 not in psig and 10 not in psig


def test_m10_not_inside_psigmal():
    m10 = build_instance("M10").group
    psig = build_instance("PSigmaL2_9").group
    assert not m10.is_subgroup_of(psig)


def test_l3_builders():
    assert build_l3(2).group.order == 168
    assert build_l3(4).group.order == 20160
    assert build_instance("PGL3_4").group.order == 60480
    g = build_instance("L3_4.2_3")
    assert g.group.order == 40320
    assert g.deg == 42
    # the polarity swaps the point and line blocks
    pol = [x for x in g.group.gens if x not in g.socle.gens][0] if len(g.group.gens) > len(g.socle.gens) else None


def test_l3_graph_extension_is_graph():
    """Conjugation by the adjoined involution must induce the
    inverse-transpose map, i.e. act nontrivially on the socle."""
    inst = build_l3(3, "g")
    T = inst.socle
    outer = [x for x in inst.group.gens if not T.contains(x)]
    assert outer
    for s in T.gens:
        assert T.contains(conj(s, outer[0]))


def test_u3_socle_and_extension():
    u33 = build_u3(3)
    assert u33.group.order == 6048
    assert u33.deg == 28
    g22 = build_u3(3, "f2")  # G2(2)
    assert g22.group.order == 12096
    u34 = build_u3(4)
    assert u34.group.order == 62400
    assert u34.deg == 65


def test_sz8_simplicity_fingerprint():
    inst = build_instance("Sz8")
    G = inst.group
    assert G.order == 29120
    # normal closure of sample nontrivial elements is everything
    import random

    rng = random.Random(0)
    for _ in range(5):
        x = G.random_element(rng)
        while perm_order(x) == 1:
            x = G.random_element(rng)
        assert normal_closure(G, [x]).order == G.order


def test_sz8_element_orders():
    # Sz(8) has element orders 1, 2, 4, 5, 7, 13
    G = build_instance("Sz8").group
    seen = set()
    import random

    rng = random.Random(1)
    for _ in range(300):
        seen.add(perm_order(G.random_element(rng)))
    assert seen <= {1, 2, 4, 5, 7, 13}
    assert {5, 7, 13} <= seen


def test_sp6_2():
    inst = build_instance("Sp6_2")
    assert inst.group.order == 1451520
    assert inst.group.is_transitive()


def test_m11():
    inst = build_instance("M11")
    assert inst.group.order == 7920
    assert inst.group.is_transitive()


def test_agl1():
    assert build_agl1(8).group.order == 56
    assert build_agl1(9).group.order == 72


def test_reduction_examples():
    insts = build_reduction_examples()
    orders = {i.name: i.group.order for i in insts}
    assert orders == {
        "AGL1_8": 56,
        "AGL1_9": 72,
        "F21": 21,
        "S4": 24,
        "A4xC2": 24,
        "A5wr2": 7200,
    }


def test_specs_round_trip_orders():
    for name in catalog_names():
        if name.startswith(("A1", "S1")) and name not in ("A10", "S10"):
            continue  # skip A11..A13 here (big factorials are still fast, but keep the loop tight)
        if name.startswith("U3_8") or "81" in name:
            continue  # heavier; covered in the slow suite
        inst = build_instance(name)
        if inst.spec is not None:
            assert inst.group.order == group_order(inst.spec)
            assert inst.socle.order == socle_order(inst.spec)


def test_expected_socle_index():
    for name in ("S7", "PGL2_17", "L2_8.3", "M10", "L3_4.2_3", "U3_3.2", "Sz8.3"):
        inst = build_instance(name)
        assert inst.group.order == inst.socle.order * inst.spec.outer.order


def test_build_matrix_projective_generic():
    from unimax.catalog import build_matrix_projective, _sl3_matrices
    from unimax.gf import GF

    F = GF(2, 1)
    inst = build_matrix_projective(F, _sl3_matrices(F), "linear", "L3_2_generic", 168)
    assert inst.group.order == 168
    assert inst.deg == 7
    import pytest

    with pytest.raises(ValueError):
        build_matrix_projective(F, [((0, 0, 0), (0, 1, 0), (0, 0, 1))], "linear")


def test_catalog_manifest_roster():
    from unimax.catalog import catalog_manifest

    roster = catalog_manifest()
    assert len(roster) >= 50
    names = [name for name, _, _ in roster]
    assert "A5" in names and "Sz8" in names and "M11" in names
    for name, spec, checks in roster:
        assert spec is not None
        assert checks, name
        for c in checks:
            assert c["verdict"] in ("unique", "not_unique")
