"""Finite lattices and the order-theoretic property checks used by the
open/closed-lattice correspondence suites: distributivity, complete
distributivity, co-primes, the hyperbelow relation, hypercontinuity, and
spectra."""

from __future__ import annotations

import itertools
from typing import Iterable

from .errors import BoundExceeded, NotALattice, NotDistributive
from .order import FinitePoset, Label, _bit_indices


class FiniteLattice:
    """A finite lattice: a poset with all binary meets and joins.

    Meet/join tables are derived from the order when omitted and validated
    against it when supplied.
    """

    __slots__ = ("poset", "_meet", "_join", "bottom", "top")

    def __init__(
        self,
        elements: Iterable[Label],
        pairs: Iterable[tuple[Label, Label]],
        meet: dict | None = None,
        join: dict | None = None,
    ):
        poset = FinitePoset(elements, pairs)
        derived_meet: dict[tuple[Label, Label], Label] = {}
        derived_join: dict[tuple[Label, Label], Label] = {}
        for a, b in itertools.product(poset.elements, repeat=2):
            m = poset.inf_of((a, b))
            j = poset.sup_of((a, b))
            if m is None:
                raise NotALattice(f"{a!r} and {b!r} have no meet")
            if j is None:
                raise NotALattice(f"{a!r} and {b!r} have no join")
            derived_meet[a, b] = m
            derived_join[a, b] = j
        if meet is not None and {k: meet[k] for k in derived_meet} != derived_meet:
            raise ValueError("supplied meet table disagrees with the order")
        if join is not None and {k: join[k] for k in derived_join} != derived_join:
            raise ValueError("supplied join table disagrees with the order")
        self.poset = poset
        self._meet = derived_meet
        self._join = derived_join
        bot = poset.inf_of(poset.elements)
        top = poset.sup_of(poset.elements)
        if bot is None or top is None:
            raise NotALattice("missing bottom or top")
        self.bottom = bot
        self.top = top

    @classmethod
    def from_poset(cls, P: FinitePoset) -> "FiniteLattice":
        pairs = [(a, b) for a in P.elements for b in P.up_of(a)]
        return cls(P.elements, pairs)

    @property
    def elements(self) -> tuple:
        return self.poset.elements

    def leq(self, a: Label, b: Label) -> bool:
        return self.poset.leq(a, b)

    def meet(self, a: Label, b: Label) -> Label:
        return self._meet[a, b]

    def join(self, a: Label, b: Label) -> Label:
        return self._join[a, b]

    def meet_all(self, A: Iterable[Label]) -> Label:
        out = self.top
        for x in A:
            out = self._meet[out, x]
        return out

    def join_all(self, A: Iterable[Label]) -> Label:
        out = self.bottom
        for x in A:
            out = self._join[out, x]
        return out

    def dual(self) -> "FiniteLattice":
        return FiniteLattice.from_poset(self.poset.dual())

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteLattice) and self.poset == other.poset

    def __hash__(self) -> int:
        return hash(self.poset)

    def __len__(self) -> int:
        return len(self.poset)

    def __repr__(self) -> str:
        return f"FiniteLattice({list(self.elements)!r})"


def m3() -> FiniteLattice:
    """The five-element lattice with three incomparable atoms (not distributive)."""
    labels = ("bot", "a", "b", "c", "top")
    pairs = [("bot", x) for x in ("a", "b", "c")] + [(x, "top") for x in ("a", "b", "c")]
    P = FinitePoset.from_relations(labels, pairs)
    return FiniteLattice.from_poset(P)


# -- distributivity ----------------------------------------------------------


def is_distributive(L: FiniteLattice) -> bool:
    for a, b, c in itertools.product(L.elements, repeat=3):
        if L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c)):
            return False
    return True


def coprimes(L: FiniteLattice) -> tuple:
    """Elements p != bottom with p <= a v b implying p <= a or p <= b."""
    out = []
    for p in L.elements:
        if p == L.bottom:
            continue
        if all(
            not L.leq(p, L.join(a, b)) or L.leq(p, a) or L.leq(p, b)
            for a, b in itertools.product(L.elements, repeat=2)
        ):
            out.append(p)
    return tuple(out)


def primes(L: FiniteLattice) -> tuple:
    """Elements p != top with a ^ b <= p implying a <= p or b <= p."""
    out = []
    for p in L.elements:
        if p == L.top:
            continue
        if all(
            not L.leq(L.meet(a, b), p) or L.leq(a, p) or L.leq(b, p)
            for a, b in itertools.product(L.elements, repeat=2)
        ):
            out.append(p)
    return tuple(out)


def is_completely_distributive(L: FiniteLattice) -> bool:
    """Complete distributivity, decided for finite lattices as: distributive
    and every element is the join of the co-primes below it.  (A finite
    lattice is automatically continuous.)"""
    if not is_distributive(L):
        return False
    cp = coprimes(L)
    for x in L.elements:
        if L.join_all(c for c in cp if L.leq(c, x)) != x:
            return False
    return True


# -- hyperbelow and hypercontinuity ------------------------------------------


def hyperbelow_matrix(L: FiniteLattice) -> dict[tuple[Label, Label], bool]:
    """x hyperbelow y iff y lies in the upper-topology interior of up(x)."""
    from .topology import upper_topology

    upsilon = upper_topology(L.poset)
    out = {}
    for x in L.elements:
        inside = upsilon.interior(L.poset.up_of(x))
        for y in L.elements:
            out[x, y] = y in inside
    return out


def hyperbelow(L: FiniteLattice, x: Label, y: Label) -> bool:
    from .topology import upper_topology

    upsilon = upper_topology(L.poset)
    return y in upsilon.interior(L.poset.up_of(x))


def is_hypercontinuous(L: FiniteLattice) -> bool:
    hb = hyperbelow_matrix(L)
    for x in L.elements:
        below = [d for d in L.elements if hb[d, x]]
        if not L.poset.is_directed(below):
            return False
        if L.poset.sup_of(below) != x:
            return False
    return True


def is_hyperalgebraic(L: FiniteLattice) -> bool:
    hb = hyperbelow_matrix(L)
    for x in L.elements:
        if L.join_all(d for d in L.elements if hb[d, d] and L.leq(d, x)) != x:
            return False
    return True


def hyperbelow_open_witness(X, U: frozenset, V: frozenset) -> frozenset | None:
    """A finite F with U contained in up(F) contained in V, if one exists.

    U and V must be open in the space X; the search is exhaustive over
    subsets of V.
    """
    if not X.is_open(U) or not X.is_open(V):
        raise ValueError("U and V must be open sets of the space")
    if not X.carrier:
        return frozenset() if not U else None
    spec = X.specialization()
    vs = sorted(V, key=X.carrier.index)
    for r in range(len(vs) + 1):
        for F in itertools.combinations(vs, r):
            upF = spec.up_set(F)
            if U <= upF <= V:
                return frozenset(F)
    return None


def hyperbelow_open(X, U: frozenset, V: frozenset) -> bool:
    return hyperbelow_open_witness(X, U, V) is not None


# -- waybelow and lattice continuity ------------------------------------------


def waybelow_matrix(L: FiniteLattice) -> dict[tuple[Label, Label], bool]:
    """a waybelow b iff every directed set with supremum above b meets up(a).

    Directed subsets are enumerated as the subsets containing a maximum
    (all of them, on a finite poset).  Each family's supremum is its maximum
    and its lower closure is the maximum's principal ideal; both facts are
    verified per family below, which legitimately reduces the quantifier to
    the principal families.
    """
    P = L.poset
    down, up = P._down, P._up
    full = (1 << len(P.elements)) - 1
    for mask, m in P._maxled_masks():
        lower, ubs = 0, full
        probe = mask
        while probe:
            low = probe & -probe
            i = low.bit_length() - 1
            lower |= down[i]
            ubs &= up[i]
            probe ^= low
        if lower != down[m] or ubs != up[m]:
            raise RuntimeError("a directed family escaped its maximum; order invariant broken")
    out = {}
    for a in L.elements:
        for b in L.elements:
            out[a, b] = all(
                L.leq(a, m) for m in L.elements if L.leq(b, m)
            )
    return out


def is_continuous_lattice(L: FiniteLattice) -> bool:
    wb = waybelow_matrix(L)
    for x in L.elements:
        below = [a for a in L.elements if wb[a, x]]
        if not L.poset.is_directed(below):
            return False
        if L.poset.sup_of(below) != x:
            return False
    return True


def is_algebraic_lattice(L: FiniteLattice) -> bool:
    wb = waybelow_matrix(L)
    compacts = [a for a in L.elements if wb[a, a]]
    for x in L.elements:
        below = [a for a in compacts if L.leq(a, x)]
        if not L.poset.is_directed(below):
            return False
        if L.poset.sup_of(below) != x:
            return False
    return True


def compact_lattice_elements(L: FiniteLattice) -> tuple:
    wb = waybelow_matrix(L)
    return tuple(a for a in L.elements if wb[a, a])


# -- spectrum ------------------------------------------------------------------


def spectrum(L: FiniteLattice):
    """The space of prime elements with the hull-kernel topology
    {p : u not<= p} for u in L.  Requires a distributive lattice."""
    from .topology import FiniteSpace

    if not is_distributive(L):
        raise NotDistributive("spectrum needs a distributive lattice")
    pts = primes(L)
    opens = {frozenset(p for p in pts if not L.leq(u, p)) for u in L.elements}
    return FiniteSpace(pts, opens)
