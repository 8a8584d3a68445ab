import pytest

from dtopw.approximation import compact_elements, d_approx, fin_approx, n_approx
from dtopw.errors import ClaimFailed, UnknownName
from dtopw.gallery import gallery_names, gallery_space, verify_gallery_claims
from dtopw.gallery.flats import BOT, TOP
from dtopw.gallery.regression import schema_soundness


def test_gallery_registry():
    assert gallery_names() == (
        "nat_top_upper",
        "nat_top_bot_upper",
        "example_P_scott",
        "johnstone_scott",
        "nat_cofinite",
    )
    with pytest.raises(UnknownName):
        gallery_space("nope")


# -- the flat domain with the upper topology -----------------------------------


def test_flat_order():
    X = gallery_space("nat_top_upper")
    assert X.leq(3, TOP) and not X.leq(TOP, 3)
    assert X.leq(3, 3) and not X.leq(3, 4)


def test_flat_opens_are_cofinite_top_sets():
    X = gallery_space("nat_top_upper")
    # finite nonempty sets are never open; explicit membership description
    assert X.finite_set_is_open(frozenset())
    assert not X.finite_set_is_open(frozenset({TOP}))
    assert not X.finite_set_is_open(frozenset({0, 1, TOP}))


def test_flat_top_approximations():
    X = gallery_space("nat_top_upper")
    h = X.handle(8)
    assert d_approx(h, TOP, TOP).holds
    assert not n_approx(h, TOP, TOP).holds
    # naturals approximate themselves through directed families only
    assert d_approx(h, 3, 3).holds
    assert not n_approx(h, 3, 3).holds
    assert d_approx(h, 3, TOP).holds
    assert not d_approx(h, 3, 4).holds


def test_flat_compact_element_sets():
    X = gallery_space("nat_top_upper")
    h = X.handle(6)
    kd = set(compact_elements(h, "d"))
    kn = set(compact_elements(h, "n"))
    assert TOP in kd
    assert TOP not in kn and kn == set()


def test_flat_top_singleton_directed_open_but_not_open():
    X = gallery_space("nat_top_upper")
    assert X.upper_set_is_directed_open(frozenset({TOP}))
    assert not X.finite_set_is_open(frozenset({TOP}))


def test_flat_bottom_variant():
    X = gallery_space("nat_top_bot_upper")
    h = X.handle(6)
    assert X.leq(BOT, 5) and X.leq(BOT, TOP)
    assert n_approx(h, BOT, TOP).holds  # up(bot) is everything
    assert d_approx(h, BOT, BOT).holds
    assert d_approx(h, TOP, TOP).holds
    assert not n_approx(h, TOP, TOP).holds


def test_flat_truncations_are_order_faithful_only():
    X = gallery_space("nat_top_upper")
    tr = X.truncate(4)
    assert not tr.reflects_openness
    spec = tr.space.specialization()
    for p in tr.space.carrier:
        for q in tr.space.carrier:
            assert spec.leq(p, q) == X.leq(p, q)


# -- the cofinite space -----------------------------------------------------------


def test_cofinite_discrete_specialization():
    X = gallery_space("nat_cofinite")
    assert X.leq(2, 2) and not X.leq(2, 3)


def test_cofinite_no_interior_approximation():
    X = gallery_space("nat_cofinite")
    h = X.handle(8)
    assert set(compact_elements(h, "n")) == set()
    assert set(compact_elements(h, "d")) == set(h.points)
    for F in [(0,), (0, 1), (3, 4, 5)]:
        assert not fin_approx(h, F, (7,), "n").holds


def test_cofinite_compact_open_counterexample():
    X = gallery_space("nat_cofinite")
    rep = X.compact_open_analysis()
    assert rep.passed
    assert any("not hypercompact" in line for line in rep.lines)


# -- claims and regressions ---------------------------------------------------------


@pytest.mark.parametrize("name", ["nat_top_upper", "nat_top_bot_upper", "nat_cofinite"])
def test_claims_pass(name):
    rep = verify_gallery_claims(name, depth=8)
    assert rep.passed


@pytest.mark.parametrize("name", ["nat_top_upper", "nat_top_bot_upper", "nat_cofinite"])
def test_schema_soundness(name):
    rep = schema_soundness(gallery_space(name), max_depth=6)
    assert rep.passed, rep.mismatches[:3]
