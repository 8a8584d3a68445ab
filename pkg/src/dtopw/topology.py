"""Finite T0 spaces stored as explicit open-set families.

A finite topology is closed under all intersections, so every finite T0
space is automatically the Alexandroff space of its specialization order:
opens = upper sets.  The finite suites therefore test *agreement between
independently implemented check paths* (directed reflection, Scott/upper
constructions, lattice criteria), while every separating counterexample
lives in :mod:`dtopw.gallery`.  This degeneracy is deliberate and is itself
one of the verified facts (see the acceptance suite).
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator

from .errors import (
    BoundExceeded,
    InvalidTopology,
    NotDirected,
    ParseError,
    UnknownLabel,
)
from .order import FinitePoset, Label, _bit_indices

D_TOPOLOGY_BOUND = 10
TOPOLOGY_ENUM_BOUND = 4


class FiniteSpace:
    """A finite T0 topological space given by the full family of open sets."""

    __slots__ = ("carrier", "opens", "_index", "_open_masks", "_open_mask_set", "_min_nbhd")

    def __init__(self, carrier: Iterable[Label], opens: Iterable[Iterable[Label]]):
        carrier = tuple(carrier)
        if len(set(carrier)) != len(carrier):
            raise ValueError("carrier labels must be pairwise distinct")
        self.carrier = carrier
        self._index = {x: i for i, x in enumerate(carrier)}
        n = len(carrier)
        full = (1 << n) - 1
        masks = set()
        for U in opens:
            masks.add(self._mask(U))
        if 0 not in masks or full not in masks:
            raise InvalidTopology("opens must contain the empty set and the carrier")
        ms = sorted(masks)
        for a, b in itertools.combinations(ms, 2):
            if a | b not in masks:
                raise InvalidTopology("opens are not closed under union")
            if a & b not in masks:
                raise InvalidTopology("opens are not closed under intersection")
        min_nbhd = []
        for i in range(n):
            acc = full
            for m in ms:
                if m >> i & 1:
                    acc &= m
            min_nbhd.append(acc)
        if len(set(min_nbhd)) != n:
            raise InvalidTopology("not T0: two points share every neighbourhood")
        self._open_masks = tuple(ms)
        self._open_mask_set = frozenset(ms)
        self._min_nbhd = tuple(min_nbhd)
        self.opens = frozenset(self._unmask(m) for m in ms)

    # -- plumbing ----------------------------------------------------------

    def _idx(self, x: Label) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise UnknownLabel(repr(x)) from None

    def _mask(self, A: Iterable[Label]) -> int:
        m = 0
        for x in A:
            m |= 1 << self._idx(x)
        return m

    def _unmask(self, mask: int) -> frozenset:
        return frozenset(self.carrier[i] for i in _bit_indices(mask))

    def __len__(self) -> int:
        return len(self.carrier)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteSpace)
            and self.carrier == other.carrier
            and self.opens == other.opens
        )

    def __hash__(self) -> int:
        return hash((self.carrier, self.opens))

    def __repr__(self) -> str:
        return f"FiniteSpace({list(self.carrier)!r}, {len(self.opens)} opens)"

    # -- point-set operations ----------------------------------------------

    def is_open(self, A: Iterable[Label]) -> bool:
        return self._mask(A) in self._open_mask_set

    def is_closed(self, A: Iterable[Label]) -> bool:
        full = (1 << len(self.carrier)) - 1
        return (full & ~self._mask(A)) in self._open_mask_set

    def interior(self, A: Iterable[Label]) -> frozenset:
        m = self._mask(A)
        acc = 0
        for om in self._open_masks:
            if om & ~m == 0:
                acc |= om
        return self._unmask(acc)

    def closure(self, A: Iterable[Label]) -> frozenset:
        full = (1 << len(self.carrier)) - 1
        m = self._mask(A)
        comp = full & ~m
        acc = 0
        for om in self._open_masks:
            if om & ~comp == 0:
                acc |= om
        return self._unmask(full & ~acc)

    def minimal_neighbourhood(self, x: Label) -> frozenset:
        return self._unmask(self._min_nbhd[self._idx(x)])

    # -- specialization and convergence --------------------------------------

    def specialization(self) -> FinitePoset:
        """x below y iff every open containing x contains y (x in cl{y})."""
        if not self.carrier:
            raise ValueError("the empty space has no specialization poset")
        pairs = []
        for i, x in enumerate(self.carrier):
            for j in _bit_indices(self._min_nbhd[i]):
                pairs.append((x, self.carrier[j]))
        return FinitePoset(self.carrier, pairs)

    def converges(self, D: Iterable[Label], x: Label) -> bool:
        """True iff every open neighbourhood of x meets the directed set D."""
        dm = self._mask(D)
        if not self.specialization()._mask_directed(dm):
            raise NotDirected(f"{set(D)!r} is not directed in the specialization order")
        i = self._idx(x)
        return all(m & dm for m in self._open_masks if m >> i & 1)

    def limits(self, D: Iterable[Label]) -> frozenset:
        dm = self._mask(D)
        out = 0
        for i in range(len(self.carrier)):
            if all(m & dm for m in self._open_masks if m >> i & 1):
                out |= 1 << i
        return self._unmask(out)

    def dlim(self) -> tuple[tuple[frozenset, frozenset], ...]:
        """All pairs (D, limit set of D) for directed D."""
        spec = self.specialization()
        out = []
        for D in spec.directed_subsets():
            out.append((D, self.limits(D)))
        return tuple(out)

    # -- directed reflection -------------------------------------------------

    def d_topology(self) -> "FiniteSpace":
        """The directed reflection: all sets U such that every directed set
        converging into U meets U.  Computed literally from the definition."""
        n = len(self.carrier)
        if n > D_TOPOLOGY_BOUND:
            raise BoundExceeded(f"{n} points exceeds the directed-reflection bound {D_TOPOLOGY_BOUND}")
        if n == 0:
            return FiniteSpace(self.carrier, [frozenset()])
        spec = self.specialization()
        constraints = []  # (limit mask, D mask)
        for D in spec.directed_subsets():
            dm = self._mask(D)
            lm = self._mask(self.limits(D))
            if lm:
                constraints.append((lm, dm))
        opens = []
        for u in range(1 << n):
            if all(not (lm & u) or (dm & u) for lm, dm in constraints):
                opens.append(self._unmask(u))
        return FiniteSpace(self.carrier, opens)

    def is_directed_space(self) -> bool:
        return self.d_topology().opens == self.opens


# -- constructors from orders ---------------------------------------------


def alexandroff(P: FinitePoset) -> FiniteSpace:
    """The space of all upper sets of P."""
    return FiniteSpace(P.elements, P.upper_sets())


def scott_topology(P: FinitePoset) -> FiniteSpace:
    """Scott topology of a finite poset.

    On a finite poset every directed set contains its maximum, so the Scott
    opens are exactly the upper sets; :func:`scott_topology_literal` applies
    the inaccessibility condition verbatim and the suites check agreement.
    """
    return alexandroff(P)


def scott_topology_literal(P: FinitePoset) -> FiniteSpace:
    """Upper sets U such that sup D in U forces D to meet U, quantified over
    every directed subset with an existing supremum."""
    sups = []
    for D in P.directed_subsets():
        s = P.sup_of(D)
        if s is not None:
            sups.append((D, s))
    opens = []
    for U in P.upper_sets():
        if all(not (s in U) or (D & U) for D, s in sups):
            opens.append(U)
    return FiniteSpace(P.elements, opens)


def upper_topology(P: FinitePoset) -> FiniteSpace:
    """Topology generated by the complements of principal lower sets."""
    n = len(P.elements)
    full = (1 << n) - 1
    subbase = {full}
    for x in P.elements:
        subbase.add(full & ~P._mask(P.down_of(x)))
    base = set(subbase)
    changed = True
    while changed:
        changed = False
        for a, b in itertools.combinations(tuple(base), 2):
            c = a & b
            if c not in base:
                base.add(c)
                changed = True
    family = set(base)
    family.add(0)
    changed = True
    while changed:
        changed = False
        for a, b in itertools.combinations(tuple(family), 2):
            c = a | b
            if c not in family:
                family.add(c)
                changed = True
    return FiniteSpace(P.elements, [frozenset(P.elements[i] for i in _bit_indices(m)) for m in family])


def sierpinski() -> FiniteSpace:
    return FiniteSpace(("0", "1"), [frozenset(), frozenset({"1"}), frozenset({"0", "1"})])


# -- open/closed lattices --------------------------------------------------


def open_lattice(X: FiniteSpace):
    """The lattice of open sets under inclusion."""
    from .lattices import FiniteLattice

    elems = [X._unmask(m) for m in X._open_masks]
    pairs = [(a, b) for a in elems for b in elems if a <= b]
    return FiniteLattice(elems, pairs)


def closed_lattice(X: FiniteSpace):
    """The lattice of closed sets under inclusion (order-dual to the opens
    via complement)."""
    from .lattices import FiniteLattice

    full = frozenset(X.carrier)
    elems = [full - X._unmask(m) for m in X._open_masks]
    pairs = [(a, b) for a in elems for b in elems if a <= b]
    return FiniteLattice(elems, pairs)


def closed_sets_poset(X: FiniteSpace) -> FinitePoset:
    full = frozenset(X.carrier)
    elems = [full - X._unmask(m) for m in X._open_masks]
    pairs = [(a, b) for a in elems for b in elems if a <= b]
    return FinitePoset(elems, pairs)


# -- homeomorphism ----------------------------------------------------------


def find_homeomorphism(X: FiniteSpace, Y: FiniteSpace) -> dict | None:
    """A bijection carrying opens onto opens, or None.

    Finite T0 spaces are homeomorphic exactly when their specialization
    orders are isomorphic; the found order isomorphism is certified by
    transporting the open families.
    """
    from .order import find_isomorphism

    if len(X.carrier) != len(Y.carrier):
        return None
    if not X.carrier:
        return {}
    iso = find_isomorphism(X.specialization(), Y.specialization())
    if iso is None:
        return None
    transported = frozenset(frozenset(iso[x] for x in U) for U in X.opens)
    if transported != Y.opens:
        raise RuntimeError("order isomorphism failed to transport opens; invariant broken")
    return iso


def is_homeomorphic(X: FiniteSpace, Y: FiniteSpace) -> bool:
    return find_homeomorphism(X, Y) is not None


# -- independent enumeration of finite topologies ---------------------------


def enumerate_t0_topologies(n: int) -> Iterator[FiniteSpace]:
    """Every T0 topology on the labels 0..n-1, enumerated from the raw
    closure axioms (independent of any poset machinery)."""
    if not 0 <= n <= TOPOLOGY_ENUM_BOUND:
        raise BoundExceeded(f"n={n} outside 0..{TOPOLOGY_ENUM_BOUND}")
    labels = tuple(range(n))
    full = (1 << n) - 1
    nsub = 1 << n
    for fam_bits in range(1 << nsub):
        if not fam_bits & 1:
            continue
        if not fam_bits >> full & 1:
            continue
        members = [m for m in range(nsub) if fam_bits >> m & 1]
        ok = True
        for a, b in itertools.combinations(members, 2):
            if not fam_bits >> (a | b) & 1 or not fam_bits >> (a & b) & 1:
                ok = False
                break
        if not ok:
            continue
        nbhd = []
        for i in range(n):
            acc = full
            for m in members:
                if m >> i & 1:
                    acc &= m
            nbhd.append(acc)
        if len(set(nbhd)) != n:
            continue
        yield FiniteSpace(labels, [frozenset(j for j in range(n) if m >> j & 1) for m in members])


# -- text format and DOT export ---------------------------------------------


def render_label(x) -> str:
    if isinstance(x, frozenset):
        return "{" + ",".join(sorted(render_label(e) for e in x)) + "}"
    if isinstance(x, tuple):
        return "(" + ",".join(render_label(e) for e in x) + ")"
    return str(x)


def parse_space(text: str) -> FiniteSpace:
    """Parse the ``.space`` format: ``elements:`` line plus ``open:`` lines;
    the empty set and the carrier are implied."""
    carrier: tuple[str, ...] | None = None
    opens: list[frozenset] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("elements:"):
            if carrier is not None:
                raise ParseError(f"line {lineno}: duplicate elements line")
            carrier = tuple(line[len("elements:"):].split())
            continue
        if line.startswith("open:"):
            if carrier is None:
                raise ParseError(f"line {lineno}: 'open:' before 'elements:'")
            toks = line[len("open:"):].split()
            unknown = [t for t in toks if t not in carrier]
            if unknown:
                raise ParseError(f"line {lineno}: unknown labels {unknown!r}")
            opens.append(frozenset(toks))
            continue
        raise ParseError(f"line {lineno}: unrecognised line {raw!r}")
    if carrier is None:
        raise ParseError("missing 'elements:' line")
    opens.append(frozenset())
    opens.append(frozenset(carrier))
    try:
        return FiniteSpace(carrier, opens)
    except InvalidTopology as exc:
        raise ParseError(str(exc)) from exc


def format_space(X: FiniteSpace) -> str:
    lines = ["elements: " + " ".join(render_label(x) for x in X.carrier)]
    full = frozenset(X.carrier)
    for U in sorted(X.opens, key=lambda u: (len(u), sorted(render_label(x) for x in u))):
        if U and U != full:
            lines.append("open: " + " ".join(sorted((render_label(x) for x in U))))
    return "\n".join(lines) + "\n"


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _dot(name: str, nodes: list[str], edges: list[tuple[str, str]]) -> str:
    lines = [f"digraph {name} {{"]
    for v in sorted(nodes):
        lines.append(f"  {_dot_quote(v)};")
    for a, b in sorted(edges):
        lines.append(f"  {_dot_quote(a)} -> {_dot_quote(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def specialization_dot(X: FiniteSpace) -> str:
    P = X.specialization()
    nodes = [render_label(x) for x in P.elements]
    edges = [
        (render_label(a), render_label(b))
        for a in P.elements
        for b in P.up_of(a)
        if a != b
    ]
    return _dot("specialization", nodes, edges)


def hasse_dot(X: FiniteSpace) -> str:
    P = X.specialization()
    nodes = [render_label(x) for x in P.elements]
    edges = [(render_label(a), render_label(b)) for a, b in P.covers()]
    return _dot("hasse", nodes, edges)


def open_lattice_dot(X: FiniteSpace) -> str:
    elems = [X._unmask(m) for m in X._open_masks]
    P = FinitePoset(elems, [(a, b) for a in elems for b in elems if a <= b])
    nodes = [render_label(u) for u in elems]
    edges = [(render_label(a), render_label(b)) for a, b in P.covers()]
    return _dot("open_lattice", nodes, edges)
