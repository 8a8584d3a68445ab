import pytest

from dtopw.errors import InvalidTopology, NotDirected, ParseError
from dtopw.order import antichain, chain, diamond, enumerate_posets
from dtopw.topology import (
    FiniteSpace,
    alexandroff,
    closed_lattice,
    enumerate_t0_topologies,
    find_homeomorphism,
    format_space,
    hasse_dot,
    is_homeomorphic,
    open_lattice,
    open_lattice_dot,
    parse_space,
    scott_topology,
    scott_topology_literal,
    sierpinski,
    specialization_dot,
    upper_topology,
)


def spaces_up_to(k):
    for n in range(1, k + 1):
        for P in enumerate_posets(n):
            yield alexandroff(P)


# -- validation ----------------------------------------------------------------


def test_space_requires_empty_and_carrier():
    with pytest.raises(InvalidTopology):
        FiniteSpace("ab", [frozenset("a")])


def test_space_requires_closure_under_union():
    with pytest.raises(InvalidTopology):
        FiniteSpace("abc", [frozenset(), frozenset("a"), frozenset("b"), frozenset("abc")])


def test_space_requires_t0():
    with pytest.raises(InvalidTopology):
        FiniteSpace("ab", [frozenset(), frozenset("ab")])


# -- specialization ---------------------------------------------------------------


def test_sierpinski_specialization():
    S = sierpinski()
    P = S.specialization()
    assert P.leq("0", "1") and not P.leq("1", "0")


def test_discrete_two_points_specialization_is_antichain():
    X = FiniteSpace("ab", [frozenset(), frozenset("a"), frozenset("b"), frozenset("ab")])
    P = X.specialization()
    assert not P.leq("a", "b") and not P.leq("b", "a")


def test_alexandroff_round_trip_on_diamond():
    D = diamond()
    A = alexandroff(D)
    assert len(A.opens) == 6
    assert A.specialization() == D
    assert alexandroff(A.specialization()) == A


def test_alexandroff_of_antichain_is_discrete():
    A = alexandroff(antichain("ab"))
    assert len(A.opens) == 4


# -- convergence -------------------------------------------------------------------


def test_sierpinski_convergence():
    S = sierpinski()
    assert S.converges({"1"}, "0")
    assert not S.converges({"0"}, "1")


def test_converges_requires_directed():
    A = alexandroff(antichain("ab"))
    with pytest.raises(NotDirected):
        A.converges({"a", "b"}, "a")


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_convergence_is_order_below_maximum(n):
    for X in spaces_up_to(n):
        spec = X.specialization()
        for D in spec.directed_subsets():
            mx = spec.max_of(D)
            for x in X.carrier:
                assert X.converges(D, x) == spec.leq(x, mx)


# -- directed reflection ------------------------------------------------------------


def test_sierpinski_is_directed_space():
    S = sierpinski()
    assert S.d_topology() == S
    assert S.is_directed_space()


@pytest.mark.parametrize("n", [1, 2, 3])
def test_reflection_is_the_upper_set_topology(n):
    for X in spaces_up_to(n):
        dX = X.d_topology()
        assert dX.opens == alexandroff(X.specialization()).opens
        assert dX.d_topology().opens == dX.opens
        assert X.is_directed_space()


# -- named topologies ----------------------------------------------------------------


def test_scott_equals_alexandroff_on_two_chain():
    C = chain("ab")
    assert scott_topology(C).opens == alexandroff(C).opens
    assert scott_topology_literal(C).opens == alexandroff(C).opens


def test_upper_topology_on_diamond_and_antichain():
    D = diamond()
    assert upper_topology(D).opens == alexandroff(D).opens
    A3 = antichain("abc")
    assert len(upper_topology(A3).opens) == 8  # discrete


@pytest.mark.parametrize("n", [1, 2, 3])
def test_three_topologies_coincide(n):
    for P in enumerate_posets(n):
        a = alexandroff(P).opens
        assert scott_topology_literal(P).opens == a
        assert upper_topology(P).opens == a


# -- open/closed lattices ---------------------------------------------------------------


def test_sierpinski_lattices_are_three_chains():
    S = sierpinski()
    LO, LC = open_lattice(S), closed_lattice(S)
    assert len(LO) == len(LC) == 3
    assert LO.bottom == frozenset() and LO.top == frozenset("01")


def test_discrete_two_point_lattice_is_boolean():
    X = FiniteSpace("ab", [frozenset(), frozenset("a"), frozenset("b"), frozenset("ab")])
    L = open_lattice(X)
    assert len(L) == 4
    assert L.meet(frozenset("a"), frozenset("b")) == frozenset()


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_open_and_closed_lattices_have_equal_size(n):
    for X in spaces_up_to(n):
        assert len(open_lattice(X)) == len(closed_lattice(X))


def test_interior_closure_de_morgan():
    for X in spaces_up_to(3):
        full = frozenset(X.carrier)
        for U in X.opens:
            A = full - U
            assert X.closure(A) == full - X.interior(U | (full - A) - (full - A) | U)
            assert X.closure(A) == full - X.interior(full - A)


# -- independent topology enumeration ------------------------------------------------------


@pytest.mark.parametrize("n,count", [(0, 1), (1, 1), (2, 3), (3, 19)])
def test_t0_topology_counts_match_posets(n, count):
    assert sum(1 for _ in enumerate_t0_topologies(n)) == count


def test_enumerated_topologies_are_alexandroff():
    for X in enumerate_t0_topologies(3):
        assert X.opens == alexandroff(X.specialization()).opens


# -- homeomorphism --------------------------------------------------------------------------


def test_homeomorphic_spaces():
    S = sierpinski()
    T = FiniteSpace("ab", [frozenset(), frozenset("b"), frozenset("ab")])
    h = find_homeomorphism(S, T)
    assert h == {"0": "a", "1": "b"}
    assert not is_homeomorphic(S, alexandroff(antichain("ab")))


# -- text format and DOT ----------------------------------------------------------------------


def test_space_round_trip():
    D = alexandroff(diamond())
    text = format_space(D)
    X = parse_space(text)
    assert set(map(frozenset, X.opens)) == {frozenset(map(str, U)) for U in D.opens}


def test_space_parse_errors():
    with pytest.raises(ParseError):
        parse_space("open: a\n")
    with pytest.raises(ParseError):
        parse_space("elements: a b\nopen: zz\n")
    with pytest.raises(ParseError):
        parse_space("elements: a b\nweird line\n")
    with pytest.raises(ParseError):
        parse_space("elements: a b\n")  # not T0 with only trivial opens


def test_dot_exports_are_deterministic():
    S = sierpinski()
    d1 = specialization_dot(S)
    assert d1 == specialization_dot(S)
    assert '"0" -> "1";' in d1
    assert d1.count("->") == 1
    assert hasse_dot(alexandroff(diamond())).count("->") == 4
    ol = open_lattice_dot(alexandroff(diamond()))
    assert ol.count(";") >= 6  # six open sets as nodes


def test_one_point_space_exports():
    X = FiniteSpace("a", [frozenset(), frozenset("a")])
    assert specialization_dot(X).count("->") == 0
    assert '"a";' in specialization_dot(X)
