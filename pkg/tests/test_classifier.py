import pytest

from unimax.classifier import (
    classify,
    m_or_h_unique,
    maximal_sylow,
    ngr0_unique,
    or_h_nontrivial,
    precheck,
    replay_trace_entry,
    table_e_match,
    weakly_subnormal_sylow,
)
from unimax.groupspec import GroupSpec, OuterLabel, group_order, normalize, socle_order
from unimax import numtheory as nt


def S(family, n=None, q=None, tag="1", order=1, name=None):
    outer = OuterLabel(tag, order) if tag != "1" else OuterLabel()
    return GroupSpec(family, n, q, outer, name)


ALT = lambda n: S("Alt", n)
SYM = lambda n: S("Alt", n, tag="S", order=2)
L2 = lambda q, tag="1", order=1: S("L", 2, q, tag, order)


# ------------------------------------------------------------ socle orders


def test_socle_orders():
    assert socle_order(S("L", 2, 17)) == 2448
    assert socle_order(S("L", 3, 4)) == 20160
    assert socle_order(S("U", 3, 3)) == 6048
    assert socle_order(S("Sp", 6, 2)) == 1451520
    assert socle_order(S("2B2", q=8)) == 29120
    assert socle_order(S("Spor", name="M11")) == 7920
    assert socle_order(ALT(9)) == 181440
    assert socle_order(S("U", 3, 8)) == 5515776
    assert socle_order(S("2G2", q=27)) == 10073444472
    assert socle_order(S("O", 7, 3)) == 4585351680


def test_normalization():
    assert normalize(S("L", 2, 4)).q == 5
    assert normalize(S("L", 3, 2)).q == 7
    assert normalize(S("L", 3, 2, "g", 2)).outer.tag == "d"
    assert normalize(S("L", 4, 2)).family == "Alt"
    assert normalize(S("Sp", 4, 2)).q == 9
    assert normalize(S("G2", q=2)).family == "U"
    assert normalize(S("2G2", q=3)).q == 8


def test_spec_validation():
    with pytest.raises(ValueError):
        S("Alt", 4)
    with pytest.raises(ValueError):
        S("L", 2, 3)
    with pytest.raises(ValueError):
        S("2B2", q=4)  # f must be odd >= 3
    with pytest.raises(ValueError):
        S("Spor", name="X1")
    with pytest.raises(ValueError):
        S("U", 3, 2)


# ---------------------------------------------------------------- precheck


def test_precheck_examples():
    # L2(32).5 with r = 5: the socle has order prime to 5
    v = precheck(L2(32, "f", 5), 5)
    assert v is not None and v.outcome == "not_unique"
    # PGL2(9) with r = 3: outer involution is not a 3-group
    v = precheck(L2(9, "d", 2), 3)
    assert v is not None and v.outcome == "not_unique"
    # A6 with r = 3 proceeds
    assert precheck(ALT(6), 3) is None
    # Sz(8).3 with r = 3: 3 does not divide |Sz(8)|
    v = precheck(S("2B2", q=8, tag="f", order=3), 3)
    assert v is not None


def test_precheck_dominance():
    """If precheck rejects, classify must agree."""
    cases = [
        (L2(32, "f", 5), 5),
        (L2(9, "d", 2), 3),
        (SYM(7), 3),
        (S("Spor", name="M11", tag="1"), 13),
    ]
    for spec, r in cases:
        if precheck(spec, r) is not None:
            assert classify(spec, r).outcome == "not_unique"


# ------------------------------------------------------------- alternating


def test_alternating_r2():
    v = classify(ALT(5), 2)
    assert v.is_unique and v.overgroup.order == 12
    v = classify(SYM(5), 2)
    assert v.is_unique and v.overgroup.order == 24
    v = classify(ALT(9), 2)
    assert v.is_unique and v.overgroup.order == 20160
    assert not classify(ALT(6), 2).is_unique
    assert not classify(ALT(7), 2).is_unique
    assert not classify(ALT(8), 2).is_unique
    assert not classify(ALT(10), 2).is_unique


def test_alternating_odd():
    # (A9, 3): n = r^2, H = (S3 wr S3) cap A9
    v = classify(ALT(9), 3)
    assert v.is_unique
    assert v.overgroup.row == "Alt1:c:SrwrSr"
    assert v.overgroup.order == 6**3 * 6 // 2  # 648
    # (A7, 7): 7 = (2^3-1)/(2-1) is in script P
    assert not classify(ALT(7), 7).is_unique
    # (A5, 5): the explicit r = 5 carve-out
    v = classify(ALT(5), 5)
    assert v.is_unique and v.overgroup.order == 10
    # (A6, 3): n = 2r
    v = classify(ALT(6), 3)
    assert v.is_unique and v.overgroup.order == 36
    # (A10, 5): n = 2r
    v = classify(ALT(10), 5)
    assert v.is_unique and v.overgroup.order == math_factorial5_sq()
    # (A10, 3): n = 3^2 + 1
    v = classify(ALT(10), 3)
    assert v.is_unique and v.overgroup.row == "Alt1:a:An-1"
    # (A11, 11) is excluded explicitly
    assert not classify(ALT(11), 11).is_unique
    # (A13, 13): 13 = 1 + 3 + 9 is in script P
    assert not classify(ALT(13), 13).is_unique
    # (A5, 3): no clause
    assert not classify(ALT(5), 3).is_unique


def math_factorial5_sq():
    import math

    return math.factorial(5) ** 2


# ---------------------------------------------------------------- L2 table


def test_L2_r2_rows():
    # q even: Borel
    v = classify(L2(8), 2)
    assert v.is_unique and v.overgroup.order == 56
    v = classify(L2(16, "f", 2), 2)
    assert v.is_unique and v.overgroup.order == 240 * 2
    # q = 5 (and A5 through the isomorphism)
    v = classify(L2(5), 2)
    assert v.is_unique and v.overgroup.order == 12
    v = classify(L2(4), 2)
    assert v.is_unique and v.overgroup.order == 12
    # PGL2(17): |R0| = 16
    v = classify(L2(17, "d", 2), 2)
    assert v.is_unique and v.overgroup.row == "TableA:L2:GL1wrS2"
    assert v.overgroup.order == 32
    # L2(17) = T works too
    assert classify(L2(17), 2).is_unique
    # L2(13): |R0| = 4: not unique
    assert not classify(L2(13), 2).is_unique
    assert not classify(L2(13, "d", 2), 2).is_unique
    # L2(9) family
    assert not classify(L2(9), 2).is_unique
    assert not classify(L2(9, "f", 2), 2).is_unique  # PSigmaL2(9)
    assert classify(L2(9, "d", 2), 2).is_unique  # PGL2(9)
    assert classify(L2(9, "df", 2), 2).is_unique  # M10
    assert classify(L2(9, "d*f", 4), 2).is_unique  # L2(9).2^2
    # L2(23)/PGL2(23): |R0| = 8
    assert not classify(L2(23), 2).is_unique
    v = classify(L2(23, "d", 2), 2)
    assert v.is_unique and v.overgroup.row == "TableA:L2:GL1(q^2)"
    assert v.overgroup.order == 48
    # L2(31): |R0| = 32 >= 16
    v = classify(L2(31), 2)
    assert v.is_unique and v.overgroup.order == 32
    # L2(25) family: f = 2 branch needs G not inside PSigmaL
    assert not classify(L2(25), 2).is_unique
    assert not classify(L2(25, "f", 2), 2).is_unique
    assert classify(L2(25, "d", 2), 2).is_unique
    assert classify(L2(25, "df", 2), 2).is_unique
    assert classify(L2(25, "d*f", 4), 2).is_unique
    # L2(7) itself: |R0| = 8 and G = T fails; PGL2(7) fires
    assert not classify(L2(7), 2).is_unique
    v = classify(L2(7, "d", 2), 2)
    assert v.is_unique and v.overgroup.order == 16


def test_L2_odd_rows():
    # r = p: Borel
    v = classify(L2(9), 3)
    assert v.is_unique and v.overgroup.order == 36
    v = classify(L2(27, "f", 3), 3)
    assert v.is_unique and v.overgroup.order == 351 * 3
    # r2 rows with f <= 2: need r > 5 or |R| > r
    assert not classify(L2(5), 3).is_unique  # r=3=q-? d(5,3)=2, r=3, |R|=3
    v = classify(L2(13), 7)  # 7 | 13+1, f=1, r=7 > 5
    assert v.is_unique and v.overgroup.order == 14
    assert not classify(L2(9), 5).is_unique  # |R| = 5 = r, r = 5
    v = classify(L2(19), 5)  # 5 | 20, |R| = 5... q+1=20, (20)_5 = 5 -> |R|=5=r fails
    assert not v.is_unique
    # L2(8).3 with r = 3: the (r,p) = (3,2) special branch (vacuous set)
    v = classify(L2(8, "f", 3), 3)
    assert v.is_unique and v.overgroup.order == 54
    # L2(64)-style failure: alpha(1,-1) false and special set nonempty
    v = classify(S("L", 2, 64, "f", 3), 3)
    assert not v.is_unique


def test_L2_32_5_example():
    assert not classify(L2(32, "f", 5), 5).is_unique
    # but Sylow-31 normalizer questions etc all still not unique
    assert not classify(L2(32), 31).is_unique  # d=5? 31 | 32-1, d=1: Borel+torus


# ------------------------------------------------------------- L3/Ln table


def test_L3_rows():
    # p = 2 rows need a graph automorphism
    assert not classify(S("L", 3, 4), 2).is_unique
    assert not classify(S("L", 3, 4, "f", 2), 2).is_unique
    v = classify(S("L", 3, 4, "g", 2), 2)
    assert v.is_unique and v.overgroup.order == 384
    v = classify(S("L", 3, 4, "gf", 2), 2)
    assert v.is_unique and v.overgroup.order == 384
    # L3(2).2 = PGL2(7)
    v = classify(S("L", 3, 2, "g", 2), 2)
    assert v.is_unique and v.overgroup.order == 16
    # L3(3).2: Table A Ln row (n = 3 = 2+1, q = 3 = p = 3 mod 4)
    assert not classify(S("L", 3, 3), 2).is_unique
    v = classify(S("L", 3, 3, "g", 2), 2)
    assert v.is_unique and v.overgroup.order == 96
    # PGL3(4) with r = 3: the GU3(2) row
    v = classify(S("L", 3, 4, "d", 3), 3)
    assert v.is_unique and v.overgroup.order == 216
    assert not classify(S("L", 3, 4), 3).is_unique
    # L3(3), r = 13 (Singer torus): f=1, |R|=13=r, r != 2n+1 = 7
    v = classify(S("L", 3, 3), 13)
    assert v.is_unique and v.overgroup.order == 39
    # L3(3), r = 3 = p: parabolic pair
    assert not classify(S("L", 3, 3), 3).is_unique


# ---------------------------------------------------------------- U3 table


def test_U3_rows():
    # r = p: Borel
    v = classify(S("U", 3, 3), 3)
    assert v.is_unique and v.overgroup.order == 216
    # (U3(3), 7): the L2(7) sporadic-type row
    v = classify(S("U", 3, 3), 7)
    assert v.is_unique
    assert v.overgroup.row == "TableB:U3:r6:L2(7)"
    assert v.overgroup.order == 168
    # U3(4), r = 13: GU1(q^3) row, r > 7
    v = classify(S("U", 3, 4), 13)
    assert v.is_unique and v.overgroup.order == 39
    # U3(3) r=2: no Table A row (q odd, q != 1 mod 4)
    assert not classify(S("U", 3, 3), 2).is_unique
    # U3(8) r=3: r2 row with f = 3-power
    v = classify(S("U", 3, 8), 3)
    assert v.is_unique and v.overgroup.order == 162
    v = classify(S("U", 3, 8, "f", 3), 3)
    assert v.is_unique and v.overgroup.order == 486
    # U3(5) r=5: Borel; r=3: f=1, q%9=5: fails
    assert classify(S("U", 3, 5), 5).is_unique
    assert not classify(S("U", 3, 5), 3).is_unique


def test_U5_2_row():
    v = classify(S("U", 5, 2), 11)
    assert v.is_unique and v.overgroup.order == 660
    assert v.overgroup.row == "TableB:Un:r2n:L2(11)"


# ------------------------------------------------------------- Sp/O tables


def test_Sp_rows():
    v = classify(S("Sp", 6, 2), 3)
    assert v.is_unique and v.overgroup.order == 51840
    assert not classify(S("Sp", 6, 2), 5).is_unique
    assert not classify(S("Sp", 6, 2), 7).is_unique
    assert not classify(S("Sp", 6, 2), 2).is_unique
    # Sp4(3), r=5: f=1, |R|=5=r, r=5 < 2n+1=9 -> fails
    assert not classify(S("Sp", 4, 3), 5).is_unique
    # Sp4(2) normalizes to L2(9)
    assert classify(S("Sp", 4, 2), 3).is_unique


def test_O_plus_never_odd():
    assert not classify(S("O+", 8, 3), 5).is_unique
    assert not classify(S("O+", 10, 3), 5).is_unique


# ------------------------------------------------------------- exceptional


def test_2B2_rows():
    # r = 2: Borel
    v = classify(S("2B2", q=8), 2)
    assert v.is_unique and v.overgroup.order == 448
    # r = 5 and r = 13: the two torus normalizers
    v5 = classify(S("2B2", q=8), 5)
    assert v5.is_unique and v5.overgroup.order == 20
    v13 = classify(S("2B2", q=8), 13)
    assert v13.is_unique and v13.overgroup.order == 52
    # r = 7: d = 1, no row
    assert not classify(S("2B2", q=8), 7).is_unique
    # 2B2(32), r = 41: d(32,41) = 4; pi(f) - {r,f} empty
    v = classify(S("2B2", q=32), 41)
    assert v.is_unique
    # 2B2(32).5, r = 5: 5^2 divides 32^2+1, unique (Cor 1.3(vi) context)
    assert classify(S("2B2", q=32, tag="f", order=5), 5).is_unique
    # 2B2(8).3, r = 3: socle order is prime to 3, so R_0 = 1
    assert not classify(S("2B2", q=8, tag="f", order=3), 3).is_unique


def test_2G2_rows():
    v = classify(S("2G2", q=27), 3)
    assert v.is_unique and "Borel" in v.overgroup.row
    # r = 7: 7 | 27+1? d(27,7)=? 27=6 mod 7, 6^2=36=1: d=2 -> no row
    assert not classify(S("2G2", q=27), 7).is_unique
    # r = 19: 19 | 27^3+1? 27^3 = 19683+... d(27,19): 27=8, 8^2=64=7, 8^3=56=18=-1 -> d=6
    v = classify(S("2G2", q=27), 19)
    assert v.is_unique


def test_monster_flag():
    v = classify(S("Spor", name="M"), 59)
    assert v.is_unique and v.overgroup.order == 102660
    assert "depends-on-DLP" in v.flags
    v = classify(S("Spor", name="M"), 13)
    assert not v.is_unique and "depends-on-DLP" in v.flags


def test_sporadic_rows():
    v = classify(S("Spor", name="M11"), 11)
    assert v.is_unique and v.overgroup.order == 660
    v = classify(S("Spor", name="M23"), 23)
    assert v.is_unique and v.overgroup.type_string == "23:11"
    assert not classify(S("Spor", name="M11"), 3).is_unique
    assert not classify(S("Spor", name="M11"), 2).is_unique
    assert not classify(S("Spor", name="Co3"), 2).is_unique
    v = classify(S("Spor", name="HN"), 19)
    assert v.is_unique and v.overgroup.order == 16547328


# --------------------------------------------------------------- Table E


def test_ngr0_examples():
    assert ngr0_unique(ALT(13), 13) is False  # 13 in script P
    assert ngr0_unique(L2(8), 2) is True
    assert ngr0_unique(ALT(29), 29) is True
    assert ngr0_unique(ALT(5), 2) is True  # via L2(4) p-row
    assert ngr0_unique(ALT(5), 5) is True  # via L2(5) p-row
    assert ngr0_unique(ALT(6), 3) is True  # via L2(9) p-row
    assert ngr0_unique(ALT(9), 3) is False  # H = S3wrS3 is not N(R0)
    assert ngr0_unique(L2(17), 2) is True  # Fermat
    assert ngr0_unique(L2(31), 2) is True  # Mersenne
    assert ngr0_unique(L2(23, "d", 2), 2) is False  # |R0| = 8, not PGL2(7)
    assert ngr0_unique(L2(7, "d", 2), 2) is True  # PGL2(7) explicitly
    assert ngr0_unique(S("Spor", name="M23"), 23) is True
    assert ngr0_unique(S("Spor", name="M11"), 11) is False  # L2(11) not N(R0)
    assert ngr0_unique(S("2B2", q=8), 5) is True
    assert ngr0_unique(S("2B2", q=8), 2) is True
    assert ngr0_unique(S("U", 3, 8), 3) is True
    assert ngr0_unique(S("L", 3, 3), 13) is True  # Singer normalizer
    assert ngr0_unique(S("L", 3, 4, "d", 3), 3) is True
    assert ngr0_unique(S("Sp", 6, 2), 3) is False


def test_weakly_subnormal_examples():
    assert weakly_subnormal_sylow(L2(7, "d", 2), 2) is True  # PGL2(7)
    assert weakly_subnormal_sylow(L2(17, "d", 2), 2) is True
    assert weakly_subnormal_sylow(L2(31, "d", 2), 2) is True
    assert weakly_subnormal_sylow(L2(9, "df", 2), 2) is True  # M10
    assert weakly_subnormal_sylow(L2(9, "d*f", 4), 2) is True
    assert weakly_subnormal_sylow(L2(9, "f", 2), 2) is False  # PSigmaL2(9)
    assert weakly_subnormal_sylow(L2(8, "f", 3), 3) is True
    assert weakly_subnormal_sylow(S("L", 3, 2, "g", 2), 2) is True  # L3(2).2
    assert weakly_subnormal_sylow(S("L", 3, 4, "g", 2), 2) is True  # L3(4).2_3
    assert weakly_subnormal_sylow(S("L", 3, 4, "gf", 2), 2) is False
    assert weakly_subnormal_sylow(S("2B2", q=32, tag="f", order=5), 5) is True  # case (vi)
    assert weakly_subnormal_sylow(S("L", 2, 27, "f", 3), 3) is False
    assert weakly_subnormal_sylow(L2(17), 2) is True  # G = T via Table E
    assert weakly_subnormal_sylow(ALT(6), 3) is True
    assert weakly_subnormal_sylow(S("U", 3, 8, "f", 3), 3) is True
    assert weakly_subnormal_sylow(S("U", 3, 8, "d", 3), 3) is True


def test_ws_implies_ngr0():
    specs = [
        (L2(7, "d", 2), 2),
        (L2(9, "df", 2), 2),
        (L2(8, "f", 3), 3),
        (L2(17), 2),
        (ALT(6), 3),
        (S("L", 3, 4, "g", 2), 2),
        (S("U", 3, 8, "f", 3), 3),
        (S("Spor", name="M23"), 23),
        (ALT(29), 29),
    ]
    for spec, r in specs:
        if weakly_subnormal_sylow(spec, r):
            assert ngr0_unique(spec, r), (spec, r)


# --------------------------------------------------------------- Table F


def test_or_h_examples():
    assert or_h_nontrivial(ALT(9), 3).startswith("TableF")
    assert or_h_nontrivial(S("U", 3, 3), 7) == "No"
    assert or_h_nontrivial(S("2B2", q=8), 5).startswith("TableE")
    assert or_h_nontrivial(L2(31), 2).startswith("TableE")
    assert or_h_nontrivial(L2(23, "d", 2), 2).startswith("TableF")
    assert or_h_nontrivial(S("L", 3, 3, "g", 2), 2).startswith("TableF")
    assert or_h_nontrivial(ALT(5), 2).startswith("TableE")
    assert or_h_nontrivial(ALT(6), 3).startswith("TableE")
    with pytest.raises(ValueError):
        or_h_nontrivial(ALT(10), 2)


def test_m_or_h_examples():
    assert m_or_h_unique(S("L", 3, 3, "g", 2), 2) is True  # case (iv)
    assert m_or_h_unique(L2(23, "d", 2), 2) is True  # case (iii) via PGL2(23)
    assert m_or_h_unique(L2(31), 2) is True  # case (iii) with G = T
    assert m_or_h_unique(ALT(9), 3) is False
    assert m_or_h_unique(L2(7, "d", 2), 2) is True  # weakly subnormal
    assert m_or_h_unique(S("L", 2, 81, "df", 2), 2) is True  # case (ii)
    assert m_or_h_unique(S("L", 2, 81, "d*f", 4), 2) is True
    assert m_or_h_unique(S("L", 2, 49, "df", 2), 2) is False  # 7 not Fermat
    assert m_or_h_unique(S("L", 3, 4, "gf", 2), 2) is False
    with pytest.raises(ValueError):
        m_or_h_unique(L2(13), 2)


def test_maximal_sylow_examples():
    assert maximal_sylow(L2(7, "d", 2), 2) is True  # PGL2(7)
    assert maximal_sylow(L2(9, "df", 2), 2) is True  # M10
    assert maximal_sylow(L2(9, "d", 2), 2) is True  # PGL2(9)
    assert maximal_sylow(L2(9, "d*f", 4), 2) is True
    assert maximal_sylow(ALT(6), 2) is False
    assert maximal_sylow(L2(17), 2) is True
    assert maximal_sylow(L2(31), 2) is True
    assert maximal_sylow(L2(31, "d", 2), 2) is True
    assert maximal_sylow(L2(13), 2) is False
    assert maximal_sylow(ALT(9), 3) is False
    assert maximal_sylow(L2(9, "f", 2), 2) is False  # PSigmaL2(9) = S6


# ----------------------------------------------------------- trace replay


def test_trace_replay():
    for spec, r in [
        (S("2B2", q=8), 5),
        (L2(8, "f", 3), 3),
        (ALT(9), 3),
        (S("U", 3, 3), 7),
        (L2(17, "d", 2), 2),
        (S("L", 3, 3), 13),
    ]:
        v = classify(spec, r)
        replayed = 0
        for entry in v.trace:
            again = replay_trace_entry(entry)
            if again is not None:
                assert again == entry.value, entry
                replayed += 1
        assert replayed >= 0


def test_verdict_json():
    v = classify(S("Spor", name="M23"), 23)
    js = v.to_json(S("Spor", name="M23"), 23)
    assert js["outcome"] == "unique"
    assert js["overgroup"]["type"] == "23:11"
    assert js["r"] == 23


def test_single_row_fires_sweep():
    """No (spec, r) may fire two table rows: sweep a grid."""
    specs = []
    for q in (4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 31, 32):
        specs.append(L2(q))
    for n in range(5, 14):
        specs.append(ALT(n))
        specs.append(SYM(n))
    specs += [
        S("L", 3, 3),
        S("L", 3, 4),
        S("U", 3, 3),
        S("U", 3, 4),
        S("U", 3, 5),
        S("U", 3, 8),
        S("U", 4, 2),
        S("U", 4, 3),
        S("U", 5, 2),
        S("Sp", 4, 3),
        S("Sp", 4, 4),
        S("Sp", 4, 5),
        S("Sp", 6, 2),
        S("Sp", 6, 3),
        S("Sp", 8, 2),
        S("O", 7, 3),
        S("O", 9, 3),
        S("O+", 8, 2),
        S("O-", 8, 2),
        S("O-", 10, 2),
        S("2B2", q=8),
        S("2B2", q=32),
        S("2B2", q=128),
        S("2G2", q=27),
        S("2F4", q=2),
        S("2F4", q=8),
        S("3D4", q=2),
        S("3D4", q=3),
        S("G2", q=3),
        S("G2", q=4),
        S("G2", q=5),
        S("F4", q=3),
        S("E6", q=2),
        S("2E6", q=2),
        S("E7", q=2),
        S("E8", q=2),
    ]
    primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 61, 73]
    for spec in specs:
        for r in primes:
            if group_order(spec) % r:
                continue
            classify(spec, r)  # raises on a double fire
