import itertools

import pytest
from hypothesis import given, settings, strategies as st

from dtopw.errors import BoundExceeded, CycleDetected, NotMonotone, ParseError, UnknownLabel
from dtopw.order import (
    FinitePoset,
    LABELLED_POSET_COUNTS,
    MonotoneMap,
    POSET_ISO_COUNTS,
    antichain,
    chain,
    diamond,
    enumerate_posets,
    find_isomorphism,
    format_poset,
    is_isomorphic,
    parse_poset,
)


def brute_force_posets(n):
    """Independent oracle: filter every reflexive relation by the axioms."""
    labels = tuple(range(n))
    offdiag = [(i, j) for i in labels for j in labels if i != j]
    for bits in range(1 << len(offdiag)):
        rel = {(i, i) for i in labels}
        rel |= {offdiag[k] for k in range(len(offdiag)) if bits >> k & 1}
        ok = True
        for (a, b), (c, d) in itertools.product(rel, repeat=2):
            if b == c and (a, d) not in rel:
                ok = False
                break
            if a == d and b == c and a != b:
                ok = False
                break
        if ok:
            yield frozenset(rel)


# -- construction ----------------------------------------------------------


def test_from_relations_two_chain():
    P = FinitePoset.from_relations(("a", "b"), [("a", "b")])
    assert P.leq("a", "b") and not P.leq("b", "a")
    assert P.leq("a", "a")


def test_from_relations_singleton():
    P = FinitePoset.from_relations(("a",), [])
    assert P.leq("a", "a")
    assert len(P) == 1


def test_from_relations_rejects_cycles():
    with pytest.raises(CycleDetected):
        FinitePoset.from_relations(("a", "b", "c"), [("a", "b"), ("b", "c"), ("c", "a")])


def test_from_relations_rejects_unknown_labels():
    with pytest.raises(UnknownLabel):
        FinitePoset.from_relations(("a",), [("a", "zz")])


def test_constructor_requires_transitive_input():
    with pytest.raises(ValueError):
        FinitePoset(("a", "b", "c"), [("a", "b"), ("b", "c")])


def test_from_relations_output_is_transitively_closed():
    P = FinitePoset.from_relations("abc", [("a", "b"), ("b", "c")])
    assert P.leq("a", "c")
    again = FinitePoset.from_relations(P.elements, [(x, y) for x in P for y in P.up_of(x)])
    assert again == P


# -- directedness ------------------------------------------------------------


def test_antichain_pair_not_directed():
    P = antichain("ab")
    assert not P.is_directed({"a", "b"})


def test_chain_is_directed():
    P = chain("ab")
    assert P.is_directed({"a", "b"})


def test_diamond_upper_part_directed():
    D = diamond()
    assert D.is_directed({"x", "y", "top"})
    assert not D.is_directed({"x", "y"})
    assert not D.is_directed(set())


def test_directed_subsets_two_chain():
    P = chain("ab")
    assert set(P.directed_subsets()) == {frozenset("a"), frozenset("b"), frozenset("ab")}


def test_directed_subsets_antichain_and_singleton():
    assert set(antichain("ab").directed_subsets()) == {frozenset("a"), frozenset("b")}
    assert set(antichain("a").directed_subsets()) == {frozenset("a")}


def test_directed_subsets_bound():
    with pytest.raises(BoundExceeded):
        antichain(range(13)).directed_subsets()


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_every_directed_subset_has_a_maximum(n):
    for P in enumerate_posets(n):
        for D in P.directed_subsets():
            assert P.max_of(D) is not None


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_maxled_enumeration_equals_brute_force(n):
    for P in enumerate_posets(n):
        assert set(P.directed_subsets()) == set(P.directed_subsets_with_max())


# -- closure operators --------------------------------------------------------


POSETS_4 = list(enumerate_posets(4))


@settings(max_examples=120, deadline=None)
@given(
    idx=st.integers(min_value=0, max_value=len(POSETS_4) - 1),
    bits=st.integers(min_value=0, max_value=15),
)
def test_up_down_are_closure_operators(idx, bits):
    P = POSETS_4[idx]
    A = frozenset(e for i, e in enumerate(P.elements) if bits >> i & 1)
    up = P.up_set(A)
    down = P.down_set(A)
    assert A <= up and A <= down
    assert P.up_set(up) == up and P.down_set(down) == down
    B = up | {P.elements[0]}
    assert P.up_set(A) <= P.up_set(B | A)


def test_sup_inf_on_diamond():
    D = diamond()
    assert D.sup_of({"x", "y"}) == "top"
    assert D.inf_of({"x", "y"}) == "bot"
    assert D.sup_of(set()) == "bot"
    assert antichain("ab").sup_of({"a", "b"}) is None


def test_covers_and_upper_sets():
    D = diamond()
    assert set(D.covers()) == {("bot", "x"), ("bot", "y"), ("x", "top"), ("y", "top")}
    assert len(D.upper_sets()) == 6
    assert len(antichain("abcd").upper_sets()) == 16
    for U in D.upper_sets():
        assert D.is_upper(U)


# -- enumeration ----------------------------------------------------------------


@pytest.mark.parametrize("n,count", [(1, 1), (2, 3), (3, 19), (4, 219), (5, 4231)])
def test_labelled_poset_counts(n, count):
    assert LABELLED_POSET_COUNTS[n] == count
    assert sum(1 for _ in enumerate_posets(n)) == count


@pytest.mark.parametrize("n", [1, 2, 3])
def test_enumeration_matches_brute_force(n):
    expected = set(brute_force_posets(n))
    got = set()
    for P in enumerate_posets(n):
        got.add(frozenset((a, b) for a in P for b in P.up_of(a)))
    assert got == expected


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 5), (4, 16), (5, 63)])
def test_iso_class_counts(n, count):
    assert POSET_ISO_COUNTS[n] == count
    assert sum(1 for _ in enumerate_posets(n, up_to_iso=True)) == count


def test_enumeration_bound():
    with pytest.raises(BoundExceeded):
        list(enumerate_posets(7))


def test_isomorphism_search():
    P = chain("ab")
    Q = chain("xy")
    iso = find_isomorphism(P, Q)
    assert iso == {"a": "x", "b": "y"}
    assert not is_isomorphic(chain("abc"), antichain("abc"))


# -- monotone maps -------------------------------------------------------------


def test_monotone_map_validation():
    C = chain("ab")
    A = antichain("xy")
    with pytest.raises(NotMonotone):
        MonotoneMap(C, A, {"a": "x", "b": "y"})
    f = MonotoneMap(C, C, {"a": "a", "b": "a"})
    assert f("b") == "a"


def test_monotone_map_compose_and_identity():
    C = chain("ab")
    f = MonotoneMap(C, C, {"a": "a", "b": "a"})
    i = MonotoneMap.identity(C)
    assert f.then(i) == f
    assert i.then(f) == f
    assert f.then(f) == f


# -- text format ----------------------------------------------------------------


def test_poset_round_trip():
    D = diamond()
    text = format_poset(D)
    assert "elements: bot x y top" in text
    P = parse_poset(text)
    assert P.elements == D.elements
    assert all(P.leq(a, b) == D.leq(a, b) for a in D for b in D)


def test_poset_parse_errors():
    with pytest.raises(ParseError):
        parse_poset("a <= b\n")
    with pytest.raises(ParseError):
        parse_poset("elements: a b\na < b\n")
    with pytest.raises(ParseError):
        parse_poset("elements: a\na <= zz\n")
    with pytest.raises(ParseError):
        parse_poset("elements: a b\na <= b\nb <= a\n")


def test_poset_parse_comments_and_closure():
    P = parse_poset("# a chain\nelements: a b c\na <= b\nb <= c\n")
    assert P.leq("a", "c")
