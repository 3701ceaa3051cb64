import pytest
from hypothesis import given, settings

from loopsmith.constructions import cyclic_group
from loopsmith.core import loop_from_rows, product
from loopsmith.errors import IdentityParseError, UnknownPropertyError
from loopsmith.identities import (
    ASSOCIATIVITY,
    C_IDENTITY,
    CATALOG,
    CATALOG_IMPLICATIONS,
    check_property,
    classify_bol_moufang,
    eval_term,
    format_term,
    parse_identity,
    satisfies,
)

from conftest import loops

C_FIXTURE_NAMES = ("ex10", "ex12", "ex14a", "ex14b", "ex16")


def test_parse_c_identity():
    ident = parse_identity("x*(y*(y*z)) = ((x*y)*y)*z")
    assert ident.variables == ("x", "y", "z")
    assert ident.lhs == ("x", ("y", ("y", "z")))
    assert ident.rhs == ((("x", "y"), "y"), "z")


def test_parse_left_association():
    ident = parse_identity("x*y*z = x*(y*z)")
    assert ident.lhs == (("x", "y"), "z")


def test_parse_round_trip():
    for ident in CATALOG.values():
        again = parse_identity(str(ident))
        assert again.lhs == ident.lhs and again.rhs == ident.rhs


def test_parse_errors():
    for src, pos_matters in (
        ("x*y", False),
        ("x* = y", False),
        ("(x*y = z", False),
        ("x*y) = z", False),
        ("x = y = z", False),
        ("x ** y = z", False),
    ):
        with pytest.raises(IdentityParseError):
            parse_identity(src)


def test_satisfies_c_on_fixtures(fixtures):
    for name in C_FIXTURE_NAMES:
        assert satisfies(fixtures[name], C_IDENTITY).holds, name
    verdict = satisfies(fixtures["ipnuc12"], C_IDENTITY)
    assert not verdict.holds
    assert verdict.counterexample is not None


def test_associativity_counterexample_on_ipnuc12(fixtures):
    ip = fixtures["ipnuc12"]
    verdict = satisfies(ip, ASSOCIATIVITY)
    assert not verdict.holds
    # the documented violation: 4*(6*2) != (4*6)*2
    assert product(ip, 4, product(ip, 6, 2)) != product(ip, product(ip, 4, 6), 2)
    # the reported counterexample is the lexicographically first one
    assert verdict.counterexample == {"x": 2, "y": 6, "z": 2}


def test_trivial_identity_always_holds(fixtures):
    ident = parse_identity("x = x")
    for loop in fixtures.values():
        assert satisfies(loop, ident).holds


def test_false_verdicts_reevaluate_unequal(fixtures):
    for loop in fixtures.values():
        for ident in CATALOG.values():
            verdict = satisfies(loop, ident)
            if not verdict.holds:
                lhs = eval_term(loop, ident.lhs, verdict.counterexample)
                rhs = eval_term(loop, ident.rhs, verdict.counterexample)
                assert lhs != rhs


def test_counterexample_is_lexicographic_minimum(fixtures):
    ip = fixtures["ipnuc12"]
    verdict = satisfies(ip, C_IDENTITY)
    found = verdict.counterexample
    n = ip.order
    ident = C_IDENTITY
    for x in range(n):
        for y in range(n):
            for z in range(n):
                env = {"x": x, "y": y, "z": z}
                if eval_term(ip, ident.lhs, env) != eval_term(ip, ident.rhs, env):
                    assert env == found
                    return
    raise AssertionError("no counterexample found by exhaustive scan")


def test_classify_ex12(fixtures):
    flags = classify_bol_moufang(fixtures["ex12"])
    for name in (
        "C",
        "LC",
        "RC",
        "left-alternative",
        "right-alternative",
        "left-nuclear-square",
        "middle-nuclear-square",
        "right-nuclear-square",
    ):
        assert flags[name], name
    for name in ("flexible", "moufang", "extra", "group"):
        assert not flags[name], name


def test_classify_group_sets_all_flags():
    assert all(classify_bol_moufang(cyclic_group(3)).values())


def test_classify_ex14a(fixtures):
    flags = classify_bol_moufang(fixtures["ex14a"])
    assert flags["C"] and not flags["group"]


def test_property_goldens(fixtures):
    assert check_property(fixtures["ex10"], "steiner").holds
    assert check_property(fixtures["ipnuc12"], "inverse-property").holds
    commut = check_property(fixtures["ex12"], "commutative")
    assert not commut.holds
    x, y = commut.counterexample["x"], commut.counterexample["y"]
    assert product(fixtures["ex12"], x, y) != product(fixtures["ex12"], y, x)


def test_unknown_property():
    with pytest.raises(UnknownPropertyError):
        check_property(cyclic_group(2), "weirdness")


def test_format_term_minimal_parens():
    ident = CATALOG["C"]
    assert str(ident) == "x*(y*(y*z)) = x*y*y*z"
    again = parse_identity(str(ident))
    assert again.lhs == ident.lhs and again.rhs == ident.rhs


@settings(max_examples=40, deadline=None)
@given(loops(max_order=14))
def test_catalog_coherence(loop):
    """The inclusion lattice among the 14 varieties on arbitrary loops."""
    flags = classify_bol_moufang(loop)
    for src, implied in CATALOG_IMPLICATIONS.items():
        if flags[src]:
            for tgt in implied:
                assert flags[tgt], f"{src} should imply {tgt}"
    if flags["C"]:
        assert check_property(loop, "lip").holds
        assert check_property(loop, "rip").holds


@settings(max_examples=40, deadline=None)
@given(loops(max_order=14))
def test_steiner_characterizations(loop):
    """Steiner = totally symmetric = inverse property of exponent two."""
    steiner = check_property(loop, "steiner").holds
    assert steiner == check_property(loop, "totally-symmetric").holds
    ip = check_property(loop, "inverse-property").holds
    exp2 = all(loop.mul(x, x) == 0 for x in loop)
    assert steiner == (ip and exp2)
    if steiner:
        assert satisfies(loop, C_IDENTITY).holds


def test_c_equals_lc_and_rc_small_orders():
    """Cross-check of the pinned LC/RC representatives: on every loop of
    order up to 6 the C flag agrees with LC and RC jointly."""
    from loopsmith.search import SearchSpec, enumerate_loops

    for n in range(1, 7):
        for loop in enumerate_loops(SearchSpec(order=n, up_to_isomorphism=True)).tables:
            flags = classify_bol_moufang(loop)
            assert flags["C"] == (flags["LC"] and flags["RC"])
            if flags["LC"]:
                assert flags["left-alternative"]
                assert flags["left-nuclear-square"]
                assert flags["middle-nuclear-square"]
                assert check_property(loop, "lip").holds


def test_conjugacy_closed_properties(fixtures):
    # groups are conjugacy closed; the octonion loop is an extra loop and
    # extra loops are conjugacy closed
    from loopsmith.constructions import octonion_loop

    assert check_property(cyclic_group(6), "conjugacy-closed").holds
    assert check_property(octonion_loop(), "conjugacy-closed").holds
    assert not check_property(fixtures["ex14a"], "conjugacy-closed").holds


def test_arif_on_flexible_c_loops(fixtures):
    # commutative C-loops are flexible, hence ARIF
    for name in ("ex10", "ex16"):
        assert check_property(fixtures[name], "arif").holds
    assert not check_property(fixtures["ex12"], "arif").holds


def test_aaip_on_ip_loops(fixtures):
    assert check_property(fixtures["ipnuc12"], "aaip").holds
    assert check_property(fixtures["ex12"], "aaip").holds
