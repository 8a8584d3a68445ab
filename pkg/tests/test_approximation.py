import pytest

from dtopw.approximation import (
    compact_elements,
    compact_open_is_hypercompact,
    continuity_predicates,
    d_approx,
    fin_approx,
    finite_handle,
    is_b_space,
    is_c_space,
    is_d_quasialgebraic,
    is_hypercompactly_based,
    is_locally_hypercompact,
    locally_hypercompact_witness,
    n_approx,
)
from dtopw.errors import OracleUnavailable
from dtopw.lattices import is_hyperalgebraic, is_hypercontinuous, is_completely_distributive, m3
from dtopw.order import antichain, chain, diamond, enumerate_posets
from dtopw.topology import alexandroff, open_lattice, sierpinski


def spaces_up_to(k):
    for n in range(1, k + 1):
        for P in enumerate_posets(n):
            yield alexandroff(P)


def test_sierpinski_interior_approximation():
    h = finite_handle(sierpinski())
    assert n_approx(h, "0", "1").holds  # up(0) is the whole space
    assert n_approx(h, "0", "0").holds
    assert d_approx(h, "0", "1").holds


def test_alexandroff_spaces_have_all_points_compact():
    for X in spaces_up_to(3):
        h = finite_handle(X)
        assert set(compact_elements(h, "n")) == set(X.carrier)
        assert set(compact_elements(h, "d")) == set(X.carrier)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_relations_collapse_to_order_on_finite_spaces(k):
    for X in spaces_up_to(k):
        h = finite_handle(X)
        spec = X.specialization()
        for x in X.carrier:
            for y in X.carrier:
                expected = spec.leq(x, y)
                assert d_approx(h, x, y).holds == expected
                assert n_approx(h, x, y).holds == expected


@pytest.mark.parametrize("k", [1, 2, 3])
def test_interior_relation_implies_directed_relation(k):
    for X in spaces_up_to(k):
        h = finite_handle(X)
        for x in X.carrier:
            for y in X.carrier:
                if n_approx(h, x, y).holds:
                    assert d_approx(h, x, y).holds


@pytest.mark.parametrize("k", [1, 2, 3])
def test_approximants_form_lower_sets(k):
    for X in spaces_up_to(k):
        h = finite_handle(X)
        spec = X.specialization()
        for x in X.carrier:
            for kind in ("n", "d"):
                below = frozenset(
                    y for y in X.carrier if fin_approx(h, (y,), (x,), kind).holds
                )
                assert spec.down_set(below) == below


def test_negative_reports_carry_witnesses():
    X = alexandroff(antichain("ab"))
    h = finite_handle(X)
    r = d_approx(h, "a", "b")
    assert not r.holds
    assert r.data is not None
    schema_id, params = r.data
    assert schema_id == "explicit" and "b" in params
    rn = n_approx(h, "a", "b")
    assert not rn.holds and rn.data == "b"
    assert "APPROX d a b -> False" in r.line()


def test_fin_approx_reduces_to_point_relations():
    S = sierpinski()
    h = finite_handle(S)
    for kind in ("n", "d"):
        assert fin_approx(h, ("0",), ("1",), kind).holds == (
            fin_approx(h, ("0",), ("1",), kind).holds
        )
        assert fin_approx(h, ("0",), ("1",), kind).holds


@pytest.mark.parametrize("k", [1, 2, 3])
def test_fin_approx_is_upper_set_containment(k):
    for X in spaces_up_to(k):
        h = finite_handle(X)
        spec = X.specialization()
        pts = X.carrier
        import itertools

        for G in itertools.combinations(pts, min(2, len(pts))):
            for H in itertools.combinations(pts, 1):
                expected = set(H) <= set(spec.up_set(G))
                assert fin_approx(h, G, H, "n").holds == expected
                assert fin_approx(h, G, H, "d").holds == expected


def test_singleton_finite_set_compactness_matches_point_compactness():
    for X in spaces_up_to(3):
        h = finite_handle(X)
        for x in X.carrier:
            assert fin_approx(h, (x,), (x,), "n").holds == n_approx(h, x, x).holds


def test_missing_oracle_raises():
    from dataclasses import replace

    h = replace(finite_handle(sierpinski()), interior_up_contains=None)
    with pytest.raises(OracleUnavailable):
        n_approx(h, "0", "1")


# -- continuity classes -------------------------------------------------------


def test_sierpinski_is_c_and_b_space():
    S = sierpinski()
    assert is_c_space(S) and is_b_space(S)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_every_finite_space_is_continuous_in_all_four_senses(k):
    for X in spaces_up_to(k):
        preds = continuity_predicates(X)
        assert all(preds.values()), preds


def test_negative_control_m3_rejected():
    assert not is_completely_distributive(m3())


def test_locally_hypercompact_with_witnesses():
    D = alexandroff(diamond())
    assert is_locally_hypercompact(D)
    assert is_hypercompactly_based(D)
    W = locally_hypercompact_witness(D, "bot", frozenset(D.carrier))
    assert W is not None and "bot" in D.specialization().up_set(W)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_hypercompactness_agrees_with_lattice_conditions(k):
    for X in spaces_up_to(k):
        L = open_lattice(X)
        assert is_locally_hypercompact(X) == is_hypercontinuous(L) == True
        assert is_hypercompactly_based(X) == is_hyperalgebraic(L) == True
        assert is_d_quasialgebraic(X)


def test_compact_open_is_hypercompact_on_finite_spaces():
    for X in spaces_up_to(3):
        rep = compact_open_is_hypercompact(X)
        assert rep.passed, rep.lines
