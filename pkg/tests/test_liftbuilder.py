from fractions import Fraction as Q

import pytest

from mtlift.datum import make_datum, normalize_hodge_nodes
from mtlift.liftbuilder import (InvalidDatum, LiftDescriptor, NormalizationRequired,
                                UnsupportedType, abelianized_hodge, assemble, dkh_lift,
                                general_weak_lift, simply_connected_lift, unliftable_lift)

H = Q(1, 2)


def values(ms):
    return {v for v, _ in ms}


def test_b3_block_is_already_centred(fixture):
    (f,) = fixture("b3")
    ld = general_weak_lift(f)
    assert ld.case_tag == "general_ABCD"
    for b in ld.blocks_of(0):
        if b.compact:
            continue
        assert b.highest_weights == (3,)
        assert values(b.cochar_weights) == {H, -H}
        assert b.central_exponent == 0
        assert values(b.total_weights) == {0, 1}
    assert ld.has_flag(0, "intermediate_group_skipped")
    assert ld.derived_simply_connected


def test_a2_blocks_are_recentred():
    f = make_datum("A", 2, "a", hodge_nodes={"a": 1})
    ld = general_weak_lift(f)
    by_s = {b.highest_weights[0]: b for b in ld.blocks}
    assert values(by_s[1].cochar_weights) == {Q(2, 3), Q(-1, 3)}
    assert by_s[1].central_exponent == Q(-1, 6)
    assert values(by_s[2].cochar_weights) == {Q(1, 3), Q(-2, 3)}
    assert by_s[2].central_exponent == Q(1, 6)
    for b in ld.blocks:
        assert values(b.corrected_weights) == {H, -H}
        assert values(b.total_weights) == {0, 1}
    assert not ld.has_flag(0, "intermediate_group_skipped")


def test_d5_tail_factor():
    f = make_datum("D", 5, "a", hodge_nodes={"a": 1})
    ld = general_weak_lift(f)
    assert sorted({b.highest_weights for b in ld.blocks}) == [(4,), (5,)]
    for b in ld.blocks:
        assert values(b.cochar_weights) == {H, -H}
        assert values(b.total_weights) == {0, 1}


def test_d5_fork_factor_unliftable_form(fixture):
    (f,) = fixture("d5_dh")
    ld = general_weak_lift(f)
    assert ld.covers[0].label == "h_maximal"
    assert {b.highest_weights for b in ld.blocks} == {(1,)}
    assert {v for b in ld.blocks if not b.compact for v, _ in b.total_weights} == {0, 1}


def test_d5_fork_factor_simply_connected_form(fixture):
    (f,) = fixture("d5_dh")
    ld = dkh_lift(normalize_hodge_nodes(f))
    assert ld.case_tag == "k_odd"
    spin = [b for b in ld.blocks if b.highest_weights == (5,) and not b.compact]
    assert values(spin[0].cochar_weights) == {Q(5, 4), Q(1, 4), Q(-3, 4)}
    assert spin[0].torus_exponent == Q(-1, 4)
    assert values(spin[0].total_weights) == {1, 0, -1}
    assert ld.integral
    rows = abelianized_hodge(ld)
    assert [(r[1], r[3]) for r in rows if r[1]] == [(Q(-1, 4), Q(1, 4))]


def test_d4_triality_fixture_lift(fixture):
    (f,) = fixture("d4_triality")
    ld = simply_connected_lift(f)
    assert ld.case_tag in ("k_even_K_eq_K0", "k_even_K_quadratic")
    for b in ld.blocks:
        if b.compact:
            continue
        if b.highest_weights == (4,):
            assert values(b.cochar_weights) == {1, 0, -1}
        else:
            assert values(b.cochar_weights) == {H, -H}
        assert all(v.denominator == 1 for v, _ in b.total_weights)
    assert {r[0] for r in ld.relabelings} == {0}


def test_d6_quadratic_case(fixture):
    (f,) = fixture("d6_dh_quadratic")
    ld = simply_connected_lift(f)
    assert ld.case_tag == "k_even_K_quadratic"
    (T,) = ld.tori
    assert len(T.base) == 4 and T.real_compact
    half = [b for b in ld.blocks if b.torus_exponent == H]
    assert half and all(v.denominator == 2 for b in half for v in values(b.cochar_weights))
    for b in ld.blocks:
        if b.torus_exponent == 0 and not b.compact:
            assert all(v.denominator == 1 for v in values(b.cochar_weights))
    assert ld.integral
    assert all(a + b == 0 for _, a, _, b in abelianized_hodge(ld))


def test_d6_same_field_case(fixture):
    (f,) = fixture("d6_dh")
    ld = simply_connected_lift(f)
    assert ld.case_tag == "k_even_K_eq_K0"
    assert [t.label for t in ld.tori] == ["T_L[1]", "T_L[2]"]
    rows = abelianized_hodge(ld)
    assert {(a, b) for _, a, _, b in rows} <= {(H, -H), (0, 0)}
    assert ld.integral


def test_compact_components_carry_no_torus_weight(fixture):
    for name in ("d8_dh_compact", "d7_dh_cyclic"):
        (f,) = fixture(name)
        ld = simply_connected_lift(f)
        assert f.I_c
        for b in ld.blocks:
            if b.compact:
                assert b.torus_exponent == 0 and values(b.total_weights) == {0}
        assert ld.integral


def test_abelianized_rejects_unbalanced_pair(fixture):
    (f,) = fixture("d5_dh")
    ld = dkh_lift(normalize_hodge_nodes(f))
    a, b = ld.conjugate_lines[0]
    broken = LiftDescriptor(ld.factors, ld.tori, ld.blocks, ld.case_tags, ld.certificates,
                            ((a, a),), ld.hodge_coweights)
    with pytest.raises(ValueError):
        abelianized_hodge(broken)


def test_dkh_preconditions(fixture):
    with pytest.raises(NormalizationRequired):
        dkh_lift(make_datum("D", 6, "a", hodge_nodes={"a": 5}))
    with pytest.raises(UnsupportedType):
        dkh_lift(fixture("b3")[0])
    with pytest.raises(UnsupportedType):
        dkh_lift(fixture("d6_dr")[0])
    with pytest.raises(InvalidDatum):
        general_weak_lift(make_datum("B", 3, "a", hodge_nodes={"a": 3}))


def test_assemble_examples(fixture):
    ld = assemble(fixture("mumford"))
    assert ld.derived_simply_connected and ld.case_tags == ("general_ABCD",)
    assert {v for b in ld.blocks for v, _ in b.total_weights} == {0, 1}
    mixed = assemble(fixture("mixed"))
    assert len(mixed.tori) == 2 and len(mixed.case_tags) == 2
    assert mixed.derived_simply_connected
    empty = assemble([])
    assert empty == LiftDescriptor() and empty.blocks == ()


def test_unliftable_lift_uses_h_maximal_only_on_fork_factors(fixture):
    ld = unliftable_lift(fixture("mixed"))
    assert [c.label for c in ld.covers] == ["simply_connected", "h_maximal"]
    assert all(c.holds for c in ld.certificates)


def test_b3_covers_agree_in_both_modes(fixture):
    f = fixture("b3")
    assert assemble(f).covers == unliftable_lift(f).covers
