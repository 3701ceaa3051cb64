import pytest
from hypothesis import given, settings

from loopsmith.constructions import (
    cyclic_group,
    direct_product,
    elementary_abelian_two,
)
from loopsmith.core import element_order, loop_from_rows, product
from loopsmith.errors import (
    DecompositionFailsError,
    NotASubloopError,
    NotNormalError,
    NotPowerAssociativeError,
)
from loopsmith.identities import ASSOCIATIVITY, C_IDENTITY, check_property, satisfies
from loopsmith.structure import (
    all_subloops,
    associator,
    associator_subloop,
    associator_values,
    center,
    check_assoc_family,
    cosets,
    decompose_torsion,
    generate_subloop,
    internal_direct_product,
    is_normal,
    is_subloop,
    isomorphic,
    lagrange_report,
    nucleus,
    quotient,
    relabel,
    squaring_kernel,
    subloop_table,
)

from conftest import loops

C_FIXTURE_NAMES = ("ex10", "ex12", "ex14a", "ex14b", "ex16")


# --- nuclei and center


def test_nucleus_goldens(fixtures):
    ip = fixtures["ipnuc12"]
    nuc = nucleus(ip)
    assert 1 in nuc and 2 not in nuc
    assert nucleus(fixtures["ex14a"]) == {0}
    n12 = nucleus(fixtures["ex12"])
    assert n12 == {0, 1, 2}
    assert (
        nucleus(fixtures["ex12"], "left")
        == nucleus(fixtures["ex12"], "middle")
        == nucleus(fixtures["ex12"], "right")
        == n12
    )


def test_center_goldens(fixtures):
    four = elementary_abelian_two(2)
    assert center(four) == {0, 1, 2, 3}
    assert center(fixtures["ex12"]) == {0, 1, 2}
    assert center(fixtures["ex14a"]) == {0}


# --- subloops, normality, quotients


def test_generate_subloop_goldens(fixtures):
    ex12 = fixtures["ex12"]
    assert generate_subloop(ex12, (5,)) == frozenset(range(6))
    assert generate_subloop(ex12, ()) == {0}
    assert generate_subloop(ex12, (5, 6)) == frozenset(range(12))


def test_is_normal_goldens(fixtures):
    ip = fixtures["ipnuc12"]
    assert not is_normal(ip, nucleus(ip)).holds
    assert is_normal(fixtures["ex12"], {0, 1, 2}).holds
    for loop in fixtures.values():
        assert is_normal(loop, {0}).holds
    with pytest.raises(NotASubloopError):
        is_normal(fixtures["ex12"], {0, 5})


def test_quotient_by_nucleus_is_steiner(fixtures):
    ex12 = fixtures["ex12"]
    q = quotient(ex12, {0, 1, 2})
    assert q.order == 4
    assert check_property(q, "steiner").holds
    assert satisfies(q, ASSOCIATIVITY).holds  # Klein four group


def test_quotient_degenerate_cases(fixtures):
    ex10 = fixtures["ex10"]
    assert isomorphic(quotient(ex10, {0}), ex10).isomorphic
    assert quotient(ex10, frozenset(range(10))).order == 1


def test_quotient_requires_normality(fixtures):
    ip = fixtures["ipnuc12"]
    with pytest.raises(NotNormalError):
        quotient(ip, nucleus(ip))


def test_cosets_partition(fixtures):
    ex12 = fixtures["ex12"]
    blocks = cosets(ex12, {0, 1, 2})
    assert [sorted(b) for b in blocks] == [[0, 1, 2], [3, 4, 5], [6, 7, 8], [9, 10, 11]]


# --- associators


def test_associator_goldens(fixtures):
    ex12 = fixtures["ex12"]
    assert associator(ex12, 11, 8, 9) == 2
    assert element_order(ex12, 2) == 3
    assert all(associator(ex12, 0, y, z) == 0 for y in ex12 for z in ex12)
    ex14a = fixtures["ex14a"]
    assert associator(ex14a, 13, 12, 1) == 10
    assert 10 not in nucleus(ex14a)
    assert 10 in associator_subloop(ex14a)


def test_associator_subloop_of_group_is_trivial():
    assert associator_subloop(cyclic_group(6)) == {0}


def test_associator_subloop_exponent_two_for_ex16(fixtures):
    ex16 = fixtures["ex16"]
    sub = associator_subloop(ex16)
    assert all(product(ex16, a, a) == 0 for a in sub)


# --- squaring kernel


def test_squaring_kernel(fixtures):
    ex12 = fixtures["ex12"]
    k = squaring_kernel(ex12)
    assert k == frozenset(x for x in ex12 if product(ex12, x, x) == 0)
    assert not is_subloop(ex12, k)
    assert squaring_kernel(fixtures["ex10"]) == frozenset(range(10))
    k16 = squaring_kernel(fixtures["ex16"])
    assert is_subloop(fixtures["ex16"], k16)
    assert is_normal(fixtures["ex16"], k16).holds
    assert satisfies(quotient(fixtures["ex16"], k16), ASSOCIATIVITY).holds


# --- associativity families


def test_assoc_family_goldens(fixtures):
    ex12 = fixtures["ex12"]
    assert check_assoc_family(ex12, "power-associative").holds
    assert check_assoc_family(ex12, "left-power-alt").holds
    assert check_assoc_family(ex12, "right-power-alt").holds
    verdict = check_assoc_family(ex12, "diassociative")
    assert not verdict.holds
    # the pair quoted as generating the whole loop is a genuine witness
    full = generate_subloop(ex12, (5, 6))
    assert full == frozenset(range(12))
    assert not satisfies(ex12, ASSOCIATIVITY).holds
    with pytest.raises(ValueError):
        check_assoc_family(ex12, "hexassociative")


def test_flexible_c_loops_are_diassociative(fixtures):
    for name in ("ex10", "ex14a", "ex14b", "ex16"):
        assert check_assoc_family(fixtures[name], "diassociative").holds, name


# --- Lagrange / Cauchy


def test_lagrange_goldens(fixtures):
    rep = lagrange_report(fixtures["ex14a"])
    assert not rep.weak_lagrange
    assert (0, 1, 2, 3) in rep.weak_violations
    rep10 = lagrange_report(fixtures["ex10"])
    assert not rep10.cauchy
    assert rep10.cauchy_violations == (5,)
    repz6 = lagrange_report(cyclic_group(6))
    assert repz6.weak_lagrange and repz6.monogenic_lagrange and repz6.cauchy


def test_lagrange_requires_power_associativity():
    rows = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 3, 4, 0, 1],
        [3, 4, 1, 2, 0],
        [4, 2, 0, 1, 3],
    ]
    with pytest.raises(NotPowerAssociativeError):
        lagrange_report(loop_from_rows(rows))


def test_monogenic_cosets_partition(c_loop_fixtures):
    # right cosets of any monogenic subloop partition the loop
    for loop in c_loop_fixtures.values():
        n = loop.order
        for x in loop:
            h = sorted(generate_subloop(loop, (x,)))
            assert n % len(h) == 0
            seen = set()
            blocks = set()
            for y in loop:
                block = frozenset(product(loop, a, y) for a in h)
                blocks.add(block)
                seen |= block
            assert seen == set(range(n))
            assert len(blocks) == n // len(h)


def test_element_order_divides_loop_order(c_loop_fixtures):
    for loop in c_loop_fixtures.values():
        for x in loop:
            assert loop.order % element_order(loop, x) == 0


def test_all_subloops_of_klein():
    subs = all_subloops(elementary_abelian_two(2))
    assert sorted(len(s) for s in subs) == [1, 2, 2, 2, 4]


# --- isomorphism


def test_isomorphic_goldens(fixtures):
    assert not isomorphic(fixtures["ex14a"], fixtures["ex14b"]).isomorphic
    res = isomorphic(fixtures["ex12"], fixtures["ex12"])
    assert res.isomorphic and res.mapping == tuple(range(12))
    assert not isomorphic(cyclic_group(4), elementary_abelian_two(2)).isomorphic


@settings(max_examples=30, deadline=None)
@given(loops(max_order=16))
def test_isomorphic_to_own_relabeling(loop):
    import random

    rng = random.Random(loop.order * 977)
    perm = list(range(1, loop.order))
    rng.shuffle(perm)
    other = relabel(loop, (0, *perm))
    res = isomorphic(loop, other)
    assert res.isomorphic
    m = res.mapping
    for a in loop:
        for b in loop:
            assert m[product(loop, a, b)] == product(other, m[a], m[b])


def test_isomorphism_is_equivalence_on_fixtures(fixtures):
    names = sorted(fixtures)
    for a in names:
        assert isomorphic(fixtures[a], fixtures[a]).isomorphic
    for a in names:
        for b in names:
            r1 = isomorphic(fixtures[a], fixtures[b]).isomorphic
            r2 = isomorphic(fixtures[b], fixtures[a]).isomorphic
            assert r1 == r2


# --- direct products and torsion decomposition


def test_internal_direct_product_of_z6():
    z6 = cyclic_group(6)
    res = internal_direct_product(z6, {0, 3}, {0, 2, 4})
    assert res.holds
    assert res.left_factor.order == 2 and res.right_factor.order == 3


def test_internal_direct_product_failure(fixtures):
    ex12 = fixtures["ex12"]
    res = internal_direct_product(ex12, {0, 1, 2}, {0, 3})
    assert not res.holds


def test_decompose_z6():
    u, v = decompose_torsion(cyclic_group(6))
    assert sorted(u) == [0, 3] and sorted(v) == [0, 2, 4]


def test_decompose_exponent_two(fixtures):
    u, v = decompose_torsion(fixtures["ex10"])
    assert u == frozenset(range(10)) and v == {0}


def test_decompose_product_of_ex16_and_z3(fixtures):
    big = direct_product(fixtures["ex16"], cyclic_group(3))
    u, v = decompose_torsion(big, 2)
    assert len(u) == 16 and len(v) == 3
    assert v <= nucleus(big)
    res = internal_direct_product(big, u, v)
    assert res.holds
    assert isomorphic(subloop_table(big, u), fixtures["ex16"]).isomorphic
    assert isomorphic(subloop_table(big, v), cyclic_group(3)).isomorphic


def test_decompose_failure_is_reported():
    # S3: the set of 2-power-order elements (three transpositions plus the
    # identity) is not closed, so the torsion split must report failure
    from itertools import permutations

    perms = sorted(permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    s3 = loop_from_rows(
        [
            [index[tuple(p[q[k]] for k in range(3))] for q in perms]
            for p in perms
        ]
    )
    with pytest.raises(DecompositionFailsError):
        decompose_torsion(s3, 2)


# --- C-loop structural invariants on the fixture family


def test_c_loop_invariant_pack(c_loop_fixtures):
    for name, loop in c_loop_fixtures.items():
        nl = nucleus(loop, "left")
        nm = nucleus(loop, "middle")
        nr = nucleus(loop, "right")
        assert nl == nm == nr, name
        full = nl
        assert is_normal(loop, full).holds, name
        q = quotient(loop, full)
        assert check_property(q, "steiner").holds, name
        # squares are nuclear
        for x in loop:
            assert product(loop, x, x) in full, name


def test_nonassoc_c_loop_order_congruence(c_loop_fixtures):
    for name, loop in c_loop_fixtures.items():
        if satisfies(loop, ASSOCIATIVITY).holds:
            continue
        n = loop.order
        m = len(nucleus(loop))
        assert n % 2 == 0, name
        assert n % m == 0, name
        assert (n // m) % 6 in (2, 4), name


def test_commutative_c_loop_pack(fixtures):
    ex16 = fixtures["ex16"]
    # squaring is an endomorphism
    for x in ex16:
        for y in ex16:
            xy = product(ex16, x, y)
            assert product(ex16, xy, xy) == product(
                ex16, product(ex16, x, x), product(ex16, y, y)
            )
    # associators have exponent 2 and commute with nuclear elements
    nuc = nucleus(ex16)
    for a in associator_values(ex16):
        assert product(ex16, a, a) == 0
        for m in nuc:
            assert product(ex16, a, m) == product(ex16, m, a)


def test_associators_commute_with_nucleus_when_normal(fixtures):
    for name, loop in fixtures.items():
        nuc = nucleus(loop)
        if not is_normal(loop, nuc).holds:
            continue
        for a in associator_values(loop):
            for m in nuc:
                assert product(loop, a, m) == product(loop, m, a), name
