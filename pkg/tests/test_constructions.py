import random

import pytest
from hypothesis import given, settings

from loopsmith.constructions import (
    abelian_group,
    all_factor_sets,
    build_sts,
    constr_family,
    cyclic_group,
    direct_product,
    elementary_abelian_two,
    extension,
    factor_set,
    is_c_factor_set,
    klein_group,
    octonion_loop,
    parse_triple_system,
    random_factor_set,
    serialize_triple_system,
    standard_loop,
    steiner_loop,
    triple_system,
)
from loopsmith.core import serialize
from loopsmith.errors import (
    AlphaOrderTooSmallError,
    InadmissibleOrderError,
    InvalidFactorSetError,
    UnknownNameError,
)
from loopsmith.identities import (
    C_IDENTITY,
    CATALOG,
    check_property,
    classify_bol_moufang,
    satisfies,
)
from loopsmith.structure import isomorphic, nucleus

from conftest import klein_z3_factor_sets


# --- Steiner triple systems


def test_build_sts_fano():
    ts = build_sts(7)
    assert ts.points == 7 and len(ts.blocks) == 7


def test_build_sts_nine():
    ts = build_sts(9)
    assert len(ts.blocks) == 12


def test_build_sts_inadmissible():
    for v in (0, 2, 4, 5, 6, 8, 11, 12, 14):
        with pytest.raises(InadmissibleOrderError):
            build_sts(v)


@pytest.mark.parametrize("v", [1, 3, 7, 9, 13, 15, 19, 21, 25, 27, 31, 33])
def test_build_sts_validates(v):
    ts = build_sts(v)  # validator runs inside
    assert len(ts.blocks) == v * (v - 1) // 6


def test_triple_system_rejects_bad_blocks():
    with pytest.raises(InadmissibleOrderError):
        triple_system(7, [(1, 2, 3)] * 7)
    with pytest.raises(InadmissibleOrderError):
        triple_system(7, [(1, 2, 3), (1, 2, 4)])


def test_triple_system_text_round_trip():
    ts = build_sts(9)
    again = parse_triple_system(serialize_triple_system(ts))
    assert again == ts


# --- Steiner loops


def test_steiner_loop_of_sts9_is_ex10(fixtures):
    loop = steiner_loop(build_sts(9))
    assert check_property(loop, "steiner").holds
    assert isomorphic(loop, fixtures["ex10"]).isomorphic


def test_steiner_loop_of_fano_is_elementary_abelian():
    loop = steiner_loop(build_sts(7))
    assert isomorphic(loop, elementary_abelian_two(3)).isomorphic


def test_steiner_loop_degenerate():
    loop = steiner_loop(build_sts(1))
    assert loop.order == 2


@pytest.mark.parametrize("v", [3, 7, 9, 13, 15, 19])
def test_steiner_loops_are_c_loops(v):
    loop = steiner_loop(build_sts(v))
    assert check_property(loop, "steiner").holds
    assert satisfies(loop, C_IDENTITY).holds


# --- factor sets and extensions


def test_zero_factor_set_gives_direct_product():
    z2 = cyclic_group(2)
    fs = factor_set(z2, z2, [[0, 0], [0, 0]])
    assert extension(fs).rows == direct_product(z2, z2).rows


def test_factor_set_validation():
    z2 = cyclic_group(2)
    with pytest.raises(InvalidFactorSetError):
        factor_set(z2, z2, [[1, 0], [0, 0]])  # nonzero identity row
    with pytest.raises(InvalidFactorSetError):
        factor_set(z2, z2, [[0, 0], [0, 5]])  # out of range
    with pytest.raises(InvalidFactorSetError):
        factor_set(z2, z2, [[0, 0]])  # wrong shape


def test_family_factor_set_is_c(fixtures):
    from loopsmith.constructions import constr_family_factor_set

    fam_fs = constr_family_factor_set(cyclic_group(3), 2)
    assert is_c_factor_set(fam_fs).holds
    loop = extension(fam_fs)
    assert satisfies(loop, C_IDENTITY).holds
    assert loop.rows == fixtures["ex12"].rows  # labeling matches the bundled table


def test_family_is_ex12_up_to_isomorphism(fixtures):
    loop = constr_family(cyclic_group(3), 2)
    assert isomorphic(loop, fixtures["ex12"]).isomorphic


def test_family_rejects_small_alpha():
    with pytest.raises(AlphaOrderTooSmallError):
        constr_family(cyclic_group(4), 2)
    with pytest.raises(AlphaOrderTooSmallError):
        constr_family(klein_group(), 1)


def test_family_z4_order_16_nucleus_4():
    loop = constr_family(cyclic_group(4), 1)
    assert loop.order == 16
    assert len(nucleus(loop)) == 4
    flags = classify_bol_moufang(loop)
    assert flags["C"] and not flags["group"] and not flags["flexible"]
    assert not check_property(loop, "commutative").holds


def test_family_z5_order_20_nucleus_5():
    loop = constr_family(cyclic_group(5), 1)
    assert loop.order == 20
    assert len(nucleus(loop)) == 5
    assert satisfies(loop, C_IDENTITY).holds


def test_modified_family_mu_fails_at_h_v():
    z3 = cyclic_group(3)
    mu = [[0] * 4 for _ in range(4)]
    mu[2][3] = 2  # (v, w)
    mu[3][1] = 2  # (w, u)
    mu[3][3] = 2  # (w, w)
    mu[2][1] = 2  # (v, u): +alpha instead of -alpha
    fs = factor_set(klein_group(), z3, mu)
    verdict = is_c_factor_set(fs)
    assert not verdict.holds
    assert verdict.counterexample["h"] == 2  # h = v
    assert not satisfies(extension(fs), C_IDENTITY).holds


@settings(max_examples=60, deadline=None)
@given(klein_z3_factor_sets())
def test_c_factor_set_agrees_with_brute_force(fs):
    assert is_c_factor_set(fs).holds == satisfies(extension(fs), C_IDENTITY).holds


def test_c_factor_set_criterion_exhaustive_tiny():
    # all 2^1 mu over G = A = Z2 and a sweep of mu over G = Z2, A = Z3
    z2 = cyclic_group(2)
    z3 = cyclic_group(3)
    for fs in all_factor_sets(z2, z2):
        assert is_c_factor_set(fs).holds == satisfies(extension(fs), C_IDENTITY).holds
    for fs in all_factor_sets(z2, z3):
        assert is_c_factor_set(fs).holds == satisfies(extension(fs), C_IDENTITY).holds


# --- direct products


def test_direct_product_z2_z3_is_z6():
    assert isomorphic(direct_product(cyclic_group(2), cyclic_group(3)), cyclic_group(6)).isomorphic


def test_direct_product_order_32(fixtures):
    big = direct_product(fixtures["ex16"], cyclic_group(2))
    assert big.order == 32
    assert satisfies(big, C_IDENTITY).holds
    assert not satisfies(big, CATALOG["group"]).holds
    assert not check_property(big, "steiner").holds


def test_direct_product_preserves_shared_flags(fixtures):
    pairs = [
        (fixtures["ex10"], cyclic_group(2)),
        (fixtures["ex16"], cyclic_group(3)),
        (fixtures["ex12"], cyclic_group(2)),
    ]
    for l1, l2 in pairs:
        prod = direct_product(l1, l2)
        f1, f2, fp = (
            classify_bol_moufang(l1),
            classify_bol_moufang(l2),
            classify_bol_moufang(prod),
        )
        for name in ("C", "moufang", "flexible"):
            if f1[name] and f2[name]:
                assert fp[name], name
        if (
            check_property(l1, "commutative").holds
            and check_property(l2, "commutative").holds
        ):
            assert check_property(prod, "commutative").holds


# --- standard loops


def test_standard_cyclic():
    assert standard_loop("cyclic", 3).rows == cyclic_group(3).rows


def test_standard_unknown():
    with pytest.raises(UnknownNameError):
        standard_loop("nope")
    with pytest.raises(UnknownNameError):
        standard_loop("cyclic")


def test_octonion_loop_properties():
    loop = standard_loop("octonion16")
    flags = classify_bol_moufang(loop)
    assert flags["moufang"] and flags["extra"] and flags["C"]
    assert not check_property(loop, "commutative").holds
    assert nucleus(loop) == {0, 8}


def test_abelian_group_builder():
    z6 = abelian_group([2, 3])
    assert isomorphic(z6, cyclic_group(6)).isomorphic
    assert abelian_group([4]).rows == cyclic_group(4).rows
    with pytest.raises(InvalidFactorSetError):
        abelian_group([])
