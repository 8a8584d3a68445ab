import pytest

from dtopw.approximation import compact_elements, d_approx, fin_approx, n_approx
from dtopw.gallery import gallery_space, verify_gallery_claims
from dtopw.gallery.example_p import omega
from dtopw.gallery.regression import schema_soundness


@pytest.fixture(scope="module")
def P():
    return gallery_space("example_P_scott")


def test_order_clauses(P):
    # columns are chains
    assert P.leq((2, 1), (2, 5)) and not P.leq((2, 5), (2, 1))
    assert not P.leq((2, 1), (3, 1))
    # the first-column clause: (m, n) below w_i iff m = i, or m = 1 and n <= i
    assert P.leq((1, 3), omega(5))
    assert not P.leq((1, 6), omega(5))
    assert P.leq((5, 9), omega(5))
    assert not P.leq((2, 1), omega(3))
    # maximal layer is an antichain
    assert not P.leq(omega(1), omega(2))
    assert not P.leq(omega(2), (2, 9))


def test_first_column_approximates_first_omega_directedly(P):
    h = P.handle(10)
    for n in range(1, 11):
        assert d_approx(h, (1, n), omega(1)).holds
        assert not n_approx(h, (1, n), omega(1)).holds


def test_cross_column_refutations(P):
    h = P.handle(8)
    r = d_approx(h, (2, 1), omega(1))
    assert not r.holds
    # the refuting family is the first-column tail, which misses column 2
    assert "tail" in r.witness or "singleton" in r.witness


def test_interior_oracle_shapes(P):
    # up((m,k)) is open for m != 1
    assert P.interior_up_contains(((2, 1),), (2, 5))
    assert P.interior_up_contains(((2, 1),), omega(2))
    assert not P.interior_up_contains(((2, 1),), omega(3))
    # the first column and w_1 never sit in an interior of a finite up-set
    assert not P.interior_up_contains(((1, 1),), (1, 2))
    assert not P.interior_up_contains(((1, 1),), omega(1))
    assert not P.interior_up_contains((omega(1),), omega(1))


def test_compact_elements_in_truncation(P):
    h = P.handle(5)
    kn = set(compact_elements(h, "n"))
    assert (2, 3) in kn and (1, 1) not in kn
    assert omega(2) not in kn


def test_within_column_directed_approximation(P):
    h = P.handle(6)
    assert d_approx(h, (3, 1), omega(3)).holds
    assert d_approx(h, (3, 2), (3, 5)).holds
    assert not d_approx(h, (3, 2), (4, 5)).holds


def test_finite_set_approximation(P):
    h = P.handle(6)
    # a pair of column heads directed-approximates the pair of their omegas
    assert fin_approx(h, ((2, 1), (3, 1)), (omega(2), omega(3)), "d").holds
    assert not fin_approx(h, ((2, 1),), (omega(3),), "d").holds


def test_tail_closures(P):
    assert P.closure_contains(("tail", 3), omega(3))
    assert P.closure_contains(("tail", 3), (3, 9))
    assert P.closure_contains(("tail", 3), (1, 2))
    assert not P.closure_contains(("tail", 3), (1, 4))
    assert not P.closure_contains(("tail", 3), omega(2))
    assert not P.closure_contains(("tail", 3), (2, 1))


def test_claims_pass(P):
    rep = verify_gallery_claims("example_P_scott", depth=10)
    assert rep.passed
    assert len(rep.results) == 21  # ten approximation pairs plus the open column


def test_schema_soundness(P):
    rep = schema_soundness(P, max_depth=6)
    assert rep.passed, rep.mismatches[:3]
