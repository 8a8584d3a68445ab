import itertools

import pytest

from dtopw.constructions import (
    GaloisConnection,
    adjunction_holds,
    cat_product,
    check_core_compact,
    continuous_maps,
    curry_check,
    eta_diamond,
    exponential,
    ideal_completion,
    is_continuous_map,
    lower_adjoint,
    make_ideal,
    pointwise_space,
    product,
    retract_transfer,
    s_n_map,
    sup_map,
    tensor,
    topological_ideals,
)
from dtopw.errors import BoundExceeded, NotAnAdjunction, NotARetraction
from dtopw.order import MonotoneMap, antichain, chain, diamond, enumerate_posets
from dtopw.topology import alexandroff, is_homeomorphic, open_lattice, scott_topology, sierpinski


def spaces_up_to(k):
    for n in range(1, k + 1):
        for P in enumerate_posets(n):
            yield alexandroff(P)


# -- products -----------------------------------------------------------------


def test_sierpinski_squared_has_four_points_and_diamond_opens():
    S = sierpinski()
    P = product(S, S)
    assert len(P.carrier) == 4
    assert len(P.opens) == 6  # upper sets of the 2x2 diamond order
    assert tensor(S, S).opens == P.opens
    assert cat_product(S, S).opens == P.opens


def test_singleton_is_a_product_unit():
    one = alexandroff(chain("u"))
    S = sierpinski()
    P = product(one, S)
    h = {("u", x): x for x in S.carrier}
    assert {frozenset(h[p] for p in U) for U in P.opens} == S.opens


@pytest.mark.parametrize("n,m", [(1, 1), (1, 2), (2, 2), (2, 3)])
def test_three_products_coincide(n, m):
    for P in enumerate_posets(n):
        for Q in enumerate_posets(m):
            X, Y = alexandroff(P), alexandroff(Q)
            t, c, p = tensor(X, Y), cat_product(X, Y), product(X, Y)
            assert t.opens == c.opens == p.opens


def test_slice_criterion_equals_reflected_product():
    for P in enumerate_posets(2):
        for Q in enumerate_posets(2):
            X, Y = alexandroff(P), alexandroff(Q)
            assert cat_product(X, Y).opens == product(X, Y).d_topology().opens


def test_product_bound():
    big = alexandroff(antichain(range(4)))
    with pytest.raises(BoundExceeded):
        product(big, big)


# -- exponentials ----------------------------------------------------------------


def test_exponential_sierpinski_to_sierpinski_is_three_chain():
    S = sierpinski()
    E = exponential(S, S)
    assert len(E.carrier) == 3
    spec = E.specialization()
    bot = ("0", "0")
    mid = ("0", "1")
    top = ("1", "1")
    assert spec.leq(bot, mid) and spec.leq(mid, top)


def test_exponential_from_singleton_is_the_target():
    one = alexandroff(chain("u"))
    for X in spaces_up_to(2):
        E = exponential(one, X)
        assert is_homeomorphic(E, X)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_sierpinski_exponential_is_scott_open_lattice(k):
    S = sierpinski()
    for X in spaces_up_to(k):
        E = exponential(X, S)
        SO = scott_topology(open_lattice(X).poset)
        assert is_homeomorphic(E, SO)


def test_reflected_pointwise_topology_is_the_exponential():
    S = sierpinski()
    for X in spaces_up_to(2):
        PW = pointwise_space(X, S)
        assert PW.d_topology().opens == exponential(X, S).opens


def test_exponential_functoriality_on_a_sample():
    S = sierpinski()
    X = alexandroff(chain("ab"))
    E = exponential(X, S)
    # post-composition with the identity is the identity on map labels
    ident = {y: y for y in S.carrier}
    labels = {f: tuple(ident[v] for v in f) for f in E.carrier}
    assert labels == {f: f for f in E.carrier}
    # post-composition with the constant-1 map lands on the top map
    const1 = {y: "1" for y in S.carrier}
    pushed = {tuple(const1[v] for v in f) for f in E.carrier}
    assert pushed == {("1", "1")}


def test_continuous_maps_between_finite_spaces_are_monotone_maps():
    X = alexandroff(diamond())
    S = sierpinski()
    maps = continuous_maps(X, S)
    spec = X.specialization()
    for f in maps:
        for a in X.carrier:
            for b in spec.up_of(a):
                assert not (f[a] == "1" and f[b] == "0")
    assert len(maps) == len(open_lattice(X))  # characteristic maps of opens


# -- core compactness ----------------------------------------------------------------


def test_core_compact_report_sierpinski():
    rep = check_core_compact(sierpinski())
    assert rep.passed
    assert len(rep.parts) == 4


@pytest.mark.parametrize("k", [1, 2, 3])
def test_all_small_spaces_core_compact(k):
    for X in spaces_up_to(k):
        assert check_core_compact(X).passed


def test_currying_bijection_small():
    S = sierpinski()
    two = alexandroff(antichain("ab"))
    for Z, X, Y in [(S, S, S), (S, two, S), (two, S, S), (S, S, two)]:
        rep = curry_check(Z, X, Y)
        assert rep.passed, rep.lines()


# -- topological ideals ----------------------------------------------------------------


def test_make_ideal_validates():
    S = sierpinski()
    ideal = make_ideal(S, {"0", "1"})
    assert ideal.supremum == "1"
    with pytest.raises(ValueError):
        make_ideal(S, {"1"})  # not a lower set
    with pytest.raises(ValueError):
        make_ideal(alexandroff(antichain("ab")), {"a", "b"})  # not directed


def test_ideal_completion_two_chain():
    X = alexandroff(chain("ab"))
    IC = ideal_completion(X)
    assert set(IC.carrier) == {frozenset("a"), frozenset("ab")}
    assert IC.opens == alexandroff(IC.specialization()).opens
    assert len(IC.opens) == 3


def test_ideal_completion_antichain_is_discrete():
    X = alexandroff(antichain("ab"))
    IC = ideal_completion(X)
    assert set(IC.carrier) == {frozenset("a"), frozenset("b")}
    assert len(IC.opens) == 4


@pytest.mark.parametrize("k", [1, 2, 3])
def test_completion_points_are_the_order_ideals(k):
    for X in spaces_up_to(k):
        spec = X.specialization()
        ideals = {D for D in spec.directed_subsets() if spec.down_set(D) == D}
        assert set(ideal_completion(X).carrier) == ideals
        assert {I.points for I in topological_ideals(X)} == ideals


def test_sup_map_and_lower_adjoint_two_chain():
    X = alexandroff(chain("ab"))
    sup = sup_map(X)
    assert sup(frozenset("ab")) == "b"
    conn = lower_adjoint(X)
    assert conn.lower("b") == frozenset("ab")
    assert conn.lower("a") == frozenset("a")
    assert adjunction_holds(conn.lower, conn.upper)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_sup_after_approximants_is_identity(k):
    for X in spaces_up_to(k):
        conn = lower_adjoint(X)
        for x in X.carrier:
            assert conn.upper(conn.lower(x)) == x


def test_corrupted_pair_is_rejected():
    X = alexandroff(chain("ab"))
    conn = lower_adjoint(X)
    spec = conn.upper.source
    bad_lower = MonotoneMap(
        conn.lower.source, spec, {x: frozenset("a") for x in X.carrier}
    )
    assert not adjunction_holds(bad_lower, conn.upper)
    with pytest.raises(NotAnAdjunction):
        GaloisConnection(bad_lower, conn.upper)


# -- retracts --------------------------------------------------------------------------


def test_identity_retraction():
    S = sierpinski()
    i = {x: x for x in S.carrier}
    rep = retract_transfer(S, S, i, i)
    assert rep.passed


def test_chain_retracts_off_diamond():
    D = alexandroff(diamond())
    X = alexandroff(chain(("bot", "top")))
    i = {"bot": "bot", "top": "top"}
    r = {"bot": "bot", "x": "top", "y": "top", "top": "top"}
    rep = retract_transfer(X, D, r, i)
    assert rep.passed
    assert any("directed space" in line for line in rep.lines)


def test_non_retraction_rejected():
    S = sierpinski()
    i = {x: x for x in S.carrier}
    r = {"0": "0", "1": "0"}
    with pytest.raises(NotARetraction):
        retract_transfer(S, S, r, i)


# -- finite-closure maps ----------------------------------------------------------------


def test_s1_on_sierpinski_is_continuous():
    rep = s_n_map(sierpinski(), 1)
    assert rep.continuous and rep.sigma_equals_upsilon and rep.agree


def test_s2_on_antichain_sends_pairs_to_their_closure():
    X = alexandroff(antichain("ab"))
    rep = s_n_map(X, 2)
    assert rep.continuous
    assert rep.map(("a", "b")) == frozenset("ab")


def test_s_n_bound():
    with pytest.raises(BoundExceeded):
        s_n_map(sierpinski(), 4)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_s_n_continuous_and_topologies_coincide(k):
    for X in spaces_up_to(k):
        for n in (1, 2):
            rep = s_n_map(X, n)
            assert rep.continuous and rep.sigma_equals_upsilon


def test_eta_diamond_values_on_sierpinski():
    S = sierpinski()
    rep = eta_diamond(S)
    assert rep.passed
    assert rep.diamond[frozenset({"1"})] == frozenset({frozenset({"0", "1"})})
    assert rep.eta_inv[rep.diamond[frozenset({"1"})]] == frozenset({"1"})
    assert rep.diamond[frozenset()] == frozenset()


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_eta_diamond_laws(k):
    for X in spaces_up_to(k):
        assert eta_diamond(X).passed
