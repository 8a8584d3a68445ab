"""Finite partial orders: validated construction, directed subsets, enumeration.

Labels are opaque hashable values; the public API speaks in labels and plain
frozensets.  Internally every element carries a bitmask of the elements above
and below it, which keeps the exhaustive sweeps used by the theorem suites
cheap.
"""

from __future__ import annotations

import itertools
from typing import Any, Hashable, Iterable, Iterator, Mapping

from .errors import BoundExceeded, CycleDetected, NotMonotone, ParseError, UnknownLabel

Label = Hashable

DIRECTED_ENUM_BOUND = 12
POSET_ENUM_BOUND = 6
MAXLED_ENUM_BUDGET = 1 << 22

#: number of labelled partial orders on n points, for enumeration sanity checks
LABELLED_POSET_COUNTS = {1: 1, 2: 3, 3: 19, 4: 219, 5: 4231, 6: 130023}
#: number of partial orders on n points up to isomorphism
POSET_ISO_COUNTS = {1: 1, 2: 2, 3: 5, 4: 16, 5: 63}


def _bit_indices(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class FinitePoset:
    """A finite carrier with a reflexive, antisymmetric, transitive relation.

    The constructor validates the axioms and rejects anything weaker; use
    :meth:`from_relations` to close an arbitrary relation first.
    """

    __slots__ = ("elements", "_index", "_up", "_down")

    def __init__(self, elements: Iterable[Label], pairs: Iterable[tuple[Label, Label]]):
        elements = tuple(elements)
        if not elements:
            raise ValueError("a poset needs at least one element")
        if len(set(elements)) != len(elements):
            raise ValueError("labels must be pairwise distinct")
        self.elements = elements
        self._index = {e: i for i, e in enumerate(elements)}
        n = len(elements)
        up = [1 << i for i in range(n)]
        for a, b in pairs:
            up[self._idx(a)] |= 1 << self._idx(b)
        for i in range(n):
            for j in _bit_indices(up[i]):
                if i != j and up[j] >> i & 1:
                    raise CycleDetected(
                        f"{elements[i]!r} <= {elements[j]!r} and {elements[j]!r} <= {elements[i]!r}"
                    )
                if up[j] & ~up[i]:
                    raise ValueError(
                        "relation is not transitive; use from_relations to close it"
                    )
        self._up = tuple(up)
        down = [0] * n
        for i in range(n):
            for j in _bit_indices(up[i]):
                down[j] |= 1 << i
        self._down = tuple(down)

    @classmethod
    def from_relations(cls, labels: Iterable[Label], pairs: Iterable[tuple[Label, Label]]) -> "FinitePoset":
        """Reflexive-transitive closure of ``pairs`` as a partial order.

        Raises CycleDetected if the closure would identify two distinct labels,
        UnknownLabel if a pair mentions a label outside ``labels``.
        """
        labels = tuple(labels)
        if len(set(labels)) != len(labels):
            raise ValueError("labels must be pairwise distinct")
        index = {e: i for i, e in enumerate(labels)}
        n = len(labels)
        up = [1 << i for i in range(n)]
        for a, b in pairs:
            if a not in index:
                raise UnknownLabel(repr(a))
            if b not in index:
                raise UnknownLabel(repr(b))
            up[index[a]] |= 1 << index[b]
        changed = True
        while changed:
            changed = False
            for i in range(n):
                acc = up[i]
                for j in _bit_indices(acc):
                    acc |= up[j]
                if acc != up[i]:
                    up[i] = acc
                    changed = True
        for i in range(n):
            for j in _bit_indices(up[i]):
                if i != j and up[j] >> i & 1:
                    raise CycleDetected(f"{labels[i]!r} and {labels[j]!r} lie on a cycle")
        closed = [(labels[i], labels[j]) for i in range(n) for j in _bit_indices(up[i])]
        return cls(labels, closed)

    # -- basic queries ---------------------------------------------------

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
        return frozenset(self.elements[i] for i in _bit_indices(mask))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return x in self._index

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FinitePoset)
            and self.elements == other.elements
            and self._up == other._up
        )

    def __hash__(self) -> int:
        return hash((self.elements, self._up))

    def __repr__(self) -> str:
        rel = [
            f"{a!r}<={b!r}"
            for i, a in enumerate(self.elements)
            for j, b in enumerate(self.elements)
            if i != j and self._up[i] >> j & 1
        ]
        return f"FinitePoset({list(self.elements)!r}, [{', '.join(rel)}])"

    def leq(self, a: Label, b: Label) -> bool:
        return bool(self._up[self._idx(a)] >> self._idx(b) & 1)

    def up_of(self, a: Label) -> frozenset:
        return self._unmask(self._up[self._idx(a)])

    def down_of(self, a: Label) -> frozenset:
        return self._unmask(self._down[self._idx(a)])

    def up_set(self, A: Iterable[Label]) -> frozenset:
        m = 0
        for x in A:
            m |= self._up[self._idx(x)]
        return self._unmask(m)

    def down_set(self, A: Iterable[Label]) -> frozenset:
        m = 0
        for x in A:
            m |= self._down[self._idx(x)]
        return self._unmask(m)

    def is_upper(self, A: Iterable[Label]) -> bool:
        m = self._mask(A)
        return all(self._up[i] & ~m == 0 for i in _bit_indices(m))

    def is_lower(self, A: Iterable[Label]) -> bool:
        m = self._mask(A)
        return all(self._down[i] & ~m == 0 for i in _bit_indices(m))

    # -- directedness ----------------------------------------------------

    def _mask_directed(self, mask: int) -> bool:
        if not mask:
            return False
        idxs = list(_bit_indices(mask))
        for a, b in itertools.combinations(idxs, 2):
            if not self._up[a] & self._up[b] & mask:
                return False
        return True

    def is_directed(self, A: Iterable[Label]) -> bool:
        """True iff A is nonempty and every pair in A has an upper bound in A."""
        return self._mask_directed(self._mask(A))

    def directed_subsets(self) -> tuple[frozenset, ...]:
        """All directed subsets, by brute force over every nonempty subset."""
        n = len(self.elements)
        if n > DIRECTED_ENUM_BOUND:
            raise BoundExceeded(f"{n} elements exceeds the bound {DIRECTED_ENUM_BOUND}")
        return tuple(
            self._unmask(m) for m in range(1, 1 << n) if self._mask_directed(m)
        )

    def _maxled_masks(self) -> Iterator[tuple[int, int]]:
        """(mask, index of maximum) for every subset containing a maximum."""
        n = len(self.elements)
        budget = sum(1 << bin(self._down[m] & ~(1 << m)).count("1") for m in range(n))
        if budget > MAXLED_ENUM_BUDGET:
            raise BoundExceeded(f"{budget} max-led subsets exceeds the enumeration budget")
        for m in range(n):
            strict = self._down[m] & ~(1 << m)
            s = strict
            while True:
                yield s | (1 << m), m
                if s == 0:
                    break
                s = (s - 1) & strict

    def directed_subsets_with_max(self) -> tuple[frozenset, ...]:
        """All subsets that contain a maximum element.

        In a finite poset these are exactly the directed subsets; the test
        suite checks the equivalence against :meth:`directed_subsets`.  This
        path scales to posets too large for the brute-force bound.
        """
        return tuple(self._unmask(mask) for mask, _ in self._maxled_masks())

    def max_of(self, A: Iterable[Label]) -> Label | None:
        """The maximum member of A, if A contains one."""
        m = self._mask(A)
        for i in _bit_indices(m):
            if m & ~self._down[i] == 0:
                return self.elements[i]
        return None

    def upper_bounds(self, A: Iterable[Label]) -> frozenset:
        acc = (1 << len(self.elements)) - 1
        for x in A:
            acc &= self._up[self._idx(x)]
        return self._unmask(acc)

    def lower_bounds(self, A: Iterable[Label]) -> frozenset:
        acc = (1 << len(self.elements)) - 1
        for x in A:
            acc &= self._down[self._idx(x)]
        return self._unmask(acc)

    def sup_of(self, A: Iterable[Label]) -> Label | None:
        """Least upper bound of A within the whole poset, or None."""
        acc = (1 << len(self.elements)) - 1
        for x in A:
            acc &= self._up[self._idx(x)]
        for i in _bit_indices(acc):
            if acc & ~self._up[i] == 0:
                return self.elements[i]
        return None

    def inf_of(self, A: Iterable[Label]) -> Label | None:
        acc = (1 << len(self.elements)) - 1
        for x in A:
            acc &= self._down[self._idx(x)]
        for i in _bit_indices(acc):
            if acc & ~self._down[i] == 0:
                return self.elements[i]
        return None

    def maximal_of(self, A: Iterable[Label]) -> frozenset:
        m = self._mask(A)
        return frozenset(
            self.elements[i]
            for i in _bit_indices(m)
            if self._up[i] & m & ~(1 << i) == 0
        )

    def minimal_of(self, A: Iterable[Label]) -> frozenset:
        m = self._mask(A)
        return frozenset(
            self.elements[i]
            for i in _bit_indices(m)
            if self._down[i] & m & ~(1 << i) == 0
        )

    # -- structure -------------------------------------------------------

    def covers(self) -> tuple[tuple[Label, Label], ...]:
        """All pairs (a, b) with a < b and nothing strictly between."""
        out = []
        n = len(self.elements)
        for i in range(n):
            for j in _bit_indices(self._up[i] & ~(1 << i)):
                between = self._up[i] & self._down[j] & ~(1 << i) & ~(1 << j)
                if not between:
                    out.append((self.elements[i], self.elements[j]))
        return tuple(out)

    def upper_set_masks(self) -> tuple[int, ...]:
        """Bitmasks of every upper set; depth-first over a linear extension
        (an element may join only when everything above it already has), so
        the cost is proportional to the number of upper sets."""
        n = len(self.elements)
        # maximal elements first, so everything above i is decided before i
        order = sorted(range(n), key=lambda i: bin(self._up[i]).count("1"))
        out: list[int] = []

        def walk(k: int, mask: int) -> None:
            if k == n:
                out.append(mask)
                return
            i = order[k]
            walk(k + 1, mask)
            if self._up[i] & ~(mask | (1 << i)) == 0:
                walk(k + 1, mask | (1 << i))

        walk(0, 0)
        return tuple(sorted(out))

    def upper_sets(self) -> tuple[frozenset, ...]:
        """Every upper set, in a deterministic order."""
        return tuple(self._unmask(m) for m in self.upper_set_masks())

    def dual(self) -> "FinitePoset":
        pairs = [
            (self.elements[j], self.elements[i])
            for i in range(len(self.elements))
            for j in _bit_indices(self._up[i])
        ]
        return FinitePoset(self.elements, pairs)

    def restricted(self, A: Iterable[Label]) -> "FinitePoset":
        keep = [e for e in self.elements if e in set(A)]
        pairs = [(a, b) for a in keep for b in keep if self.leq(a, b)]
        return FinitePoset(keep, pairs)


# -- common small posets -------------------------------------------------


def chain(labels: Iterable[Label]) -> FinitePoset:
    labels = tuple(labels)
    pairs = [(labels[i], labels[i + 1]) for i in range(len(labels) - 1)]
    return FinitePoset.from_relations(labels, pairs)


def antichain(labels: Iterable[Label]) -> FinitePoset:
    return FinitePoset(tuple(labels), [])


def diamond() -> FinitePoset:
    return FinitePoset.from_relations(
        ("bot", "x", "y", "top"),
        [("bot", "x"), ("bot", "y"), ("x", "top"), ("y", "top")],
    )


# -- monotone maps -------------------------------------------------------


class MonotoneMap:
    """A monotone assignment between two finite posets."""

    __slots__ = ("source", "target", "_table")

    def __init__(self, source: FinitePoset, target: FinitePoset, assignment: Mapping[Label, Label]):
        missing = [e for e in source.elements if e not in assignment]
        if missing:
            raise ValueError(f"assignment misses {missing!r}")
        table = {}
        for e in source.elements:
            v = assignment[e]
            if v not in target:
                raise UnknownLabel(repr(v))
            table[e] = v
        for a in source.elements:
            for b in source.up_of(a):
                if not target.leq(table[a], table[b]):
                    raise NotMonotone(f"{a!r} <= {b!r} but {table[a]!r} !<= {table[b]!r}")
        self.source = source
        self.target = target
        self._table = table

    @classmethod
    def identity(cls, P: FinitePoset) -> "MonotoneMap":
        return cls(P, P, {e: e for e in P.elements})

    def __call__(self, x: Label) -> Label:
        try:
            return self._table[x]
        except KeyError:
            raise UnknownLabel(repr(x)) from None

    def as_dict(self) -> dict:
        return dict(self._table)

    def then(self, g: "MonotoneMap") -> "MonotoneMap":
        """Composition x -> g(self(x)); requires matching middle poset."""
        if self.target != g.source:
            raise ValueError("maps do not compose: target/source posets differ")
        return MonotoneMap(self.source, g.target, {e: g(self(e)) for e in self.source.elements})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MonotoneMap)
            and self.source == other.source
            and self.target == other.target
            and self._table == other._table
        )

    def __hash__(self) -> int:
        return hash((self.source, self.target, tuple(self._table[e] for e in self.source.elements)))

    def __repr__(self) -> str:
        return f"MonotoneMap({self._table!r})"


def is_monotone(source: FinitePoset, target: FinitePoset, assignment: Mapping[Label, Label]) -> bool:
    try:
        MonotoneMap(source, target, assignment)
    except (NotMonotone, ValueError, UnknownLabel):
        return False
    return True


# -- isomorphism ---------------------------------------------------------


def find_isomorphism(P: FinitePoset, Q: FinitePoset) -> dict | None:
    """An order isomorphism P -> Q as a dict, or None."""
    n = len(P.elements)
    if n != len(Q.elements):
        return None

    def signature(R: FinitePoset, i: int) -> tuple[int, int]:
        return (bin(R._up[i]).count("1"), bin(R._down[i]).count("1"))

    psig = [signature(P, i) for i in range(n)]
    qsig = [signature(Q, i) for i in range(n)]
    if sorted(psig) != sorted(qsig):
        return None
    candidates = [[j for j in range(n) if qsig[j] == psig[i]] for i in range(n)]
    order = sorted(range(n), key=lambda i: len(candidates[i]))
    assigned: dict[int, int] = {}
    used: set[int] = set()

    def backtrack(k: int) -> bool:
        if k == n:
            return True
        i = order[k]
        for j in candidates[i]:
            if j in used:
                continue
            ok = True
            for i2, j2 in assigned.items():
                if (P._up[i] >> i2 & 1) != (Q._up[j] >> j2 & 1):
                    ok = False
                    break
                if (P._up[i2] >> i & 1) != (Q._up[j2] >> j & 1):
                    ok = False
                    break
            if ok:
                assigned[i] = j
                used.add(j)
                if backtrack(k + 1):
                    return True
                del assigned[i]
                used.remove(j)
        return False

    if backtrack(0):
        return {P.elements[i]: Q.elements[j] for i, j in assigned.items()}
    return None


def is_isomorphic(P: FinitePoset, Q: FinitePoset) -> bool:
    return find_isomorphism(P, Q) is not None


# -- enumeration ---------------------------------------------------------


def enumerate_posets(n: int, up_to_iso: bool = False) -> Iterator[FinitePoset]:
    """Every labelled partial order on the labels 0..n-1, exactly once.

    Backtracks over the strict-down-set of each element; partial assignments
    are pruned as soon as transitivity or antisymmetry fails.  With
    ``up_to_iso`` only one representative per isomorphism class is emitted.
    """
    if not 1 <= n <= POSET_ENUM_BOUND:
        raise BoundExceeded(f"n={n} outside 1..{POSET_ENUM_BOUND}")
    labels = tuple(range(n))
    down = [0] * n
    reps: dict[tuple, list[FinitePoset]] = {}

    def build() -> FinitePoset:
        pairs = [(labels[j], labels[i]) for i in range(n) for j in _bit_indices(down[i])]
        return FinitePoset(labels, pairs)

    def emit(P: FinitePoset) -> Iterator[FinitePoset]:
        if not up_to_iso:
            yield P
            return
        profile = tuple(sorted((bin(m).count("1"), bin(d).count("1")) for m, d in zip(P._up, P._down)))
        bucket = reps.setdefault(profile, [])
        if not any(is_isomorphic(P, R) for R in bucket):
            bucket.append(P)
            yield P

    def backtrack(i: int) -> Iterator[FinitePoset]:
        if i == n:
            yield from emit(build())
            return
        for d in range(1 << n):
            if d >> i & 1:
                continue
            ok = True
            for j in range(i):
                dj = down[j]
                if d >> j & 1:
                    if dj & ~d or dj >> i & 1:
                        ok = False
                        break
                elif dj >> i & 1:
                    if d & ~dj:
                        ok = False
                        break
            if ok:
                down[i] = d
                yield from backtrack(i + 1)
                down[i] = 0

    yield from backtrack(0)


# -- text format ----------------------------------------------------------


def parse_poset(text: str) -> FinitePoset:
    """Parse the ``.poset`` format: an ``elements:`` line, then ``a <= b`` lines."""
    labels: tuple[str, ...] | None = None
    pairs: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("elements:"):
            if labels is not None:
                raise ParseError(f"line {lineno}: duplicate elements line")
            labels = tuple(line[len("elements:"):].split())
            continue
        parts = line.split()
        if len(parts) != 3 or parts[1] != "<=":
            raise ParseError(f"line {lineno}: expected 'a <= b', got {raw!r}")
        pairs.append((parts[0], parts[2]))
    if labels is None:
        raise ParseError("missing 'elements:' line")
    try:
        return FinitePoset.from_relations(labels, pairs)
    except (CycleDetected, UnknownLabel, ValueError) as exc:
        raise ParseError(str(exc)) from exc


def format_poset(P: FinitePoset) -> str:
    lines = ["elements: " + " ".join(str(e) for e in P.elements)]
    for a, b in P.covers():
        lines.append(f"{a} <= {b}")
    return "\n".join(lines) + "\n"
