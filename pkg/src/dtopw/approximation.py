"""The two approximation relations and the continuity-class predicates.

Both relations are decided over a uniform :class:`SpaceHandle`:

* ``n_approx``: x approximates y when y lies in the interior of the upper
  set of x.  Decided exactly through the handle's interior oracle.
* ``d_approx``: x approximates y when every directed family converging to y
  meets the upper set of x.  Decided by quantifying over the handle's
  declared family schemas; for finite spaces the single schema enumerates
  every directed subset, so the answer is exact.

Every negative answer carries a machine-checkable witness: the refuting
family for the directed relation, the interior computation for the
interior-based one.
"""

from __future__ import annotations

import abc
import itertools
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

from .errors import OracleUnavailable
from .lattices import is_hyperalgebraic, is_hypercontinuous, is_completely_distributive
from .order import FinitePoset, Label
from .topology import FiniteSpace, open_lattice, render_label


@dataclass(frozen=True)
class ApproxReport:
    """Outcome of one approximation query, with its witness or refutation."""

    relation: str            # "n" or "d"
    holds: bool
    subject: tuple           # (G, H) as tuples of points
    witness: str
    depth: int | None = None
    data: Any = None

    def __bool__(self) -> bool:
        return self.holds

    def line(self) -> str:
        G, H = self.subject
        gs = ",".join(render_label(g) for g in G)
        hs = ",".join(render_label(h) for h in H)
        return f"APPROX {self.relation} {gs} {hs} -> {self.holds} (witness: {self.witness})"


class DirectedSchema(abc.ABC):
    """A parameterised class of directed families of one space.

    ``refute(G, H)`` performs the universal quantification for the directed
    relation: it returns parameters of an instance that converges to a point
    of H while missing the upper set of G, or None when no instance does.
    The pointwise rules (``contains``/``converges_to``/``meets_up``) are used
    by the soundness regressions on truncations.
    """

    schema_id: str = "?"

    @abc.abstractmethod
    def refute(self, G: tuple, H: tuple):
        ...

    @abc.abstractmethod
    def contains(self, params, point) -> bool:
        ...

    @abc.abstractmethod
    def converges_to(self, params, point) -> bool:
        ...

    @abc.abstractmethod
    def meets_up(self, params, G: tuple) -> bool:
        ...

    @abc.abstractmethod
    def sample_params(self, depth: int) -> list:
        ...

    @abc.abstractmethod
    def materialize(self, params, depth: int) -> frozenset:
        ...

    def describe(self, params) -> str:
        return f"{self.schema_id}({params!r})"


class ExplicitDirectedFamilies(DirectedSchema):
    """The schema of a finite space: every directed subset, enumerated."""

    schema_id = "explicit"

    def __init__(self, space: FiniteSpace):
        self.space = space
        self._spec = space.specialization() if space.carrier else None
        self._dlim = space.dlim() if space.carrier else ()

    def refute(self, G, H):
        up = self._spec.up_set(G)
        hset = set(H)
        for D, limits in self._dlim:
            if limits & hset and not (D & up):
                return D
        return None

    def contains(self, params, point):
        return point in params

    def converges_to(self, params, point):
        return point in self.space.limits(params)

    def meets_up(self, params, G):
        return bool(params & self._spec.up_set(G))

    def sample_params(self, depth):
        return [D for D, _ in self._dlim]

    def materialize(self, params, depth):
        return frozenset(params)

    def describe(self, params):
        return "directed set {" + ",".join(sorted(render_label(p) for p in params)) + "}"


@dataclass(frozen=True)
class SpaceHandle:
    """Uniform capability record shared by finite and presented spaces."""

    name: str
    points: tuple
    leq: Callable[[Any, Any], bool]
    schemas: tuple[DirectedSchema, ...]
    interior_up_contains: Callable[[tuple, Any], bool] | None = None
    depth: int | None = None
    truncated: bool = False
    space: Any = None

    def up_in_points(self, G: Iterable) -> frozenset:
        G = tuple(G)
        return frozenset(p for p in self.points if any(self.leq(g, p) for g in G))


def finite_handle(X: FiniteSpace, name: str = "finite") -> SpaceHandle:
    spec = X.specialization()

    def interior_up_contains(F: tuple, y) -> bool:
        return y in X.interior(spec.up_set(F))

    return SpaceHandle(
        name=name,
        points=X.carrier,
        leq=spec.leq,
        schemas=(ExplicitDirectedFamilies(X),),
        interior_up_contains=interior_up_contains,
        depth=None,
        truncated=False,
        space=X,
    )


# -- the relations -------------------------------------------------------


def fin_approx(handle: SpaceHandle, G: Iterable, H: Iterable, kind: str) -> ApproxReport:
    """Finite-set approximation: G approximates H.

    Interior kind: H inside the interior of up(G).  Directed kind: every
    directed family converging into H meets up(G).
    """
    G = tuple(G)
    H = tuple(H)
    if kind == "n":
        oracle = handle.interior_up_contains
        if oracle is None:
            raise OracleUnavailable(f"{handle.name} has no interior oracle")
        outside = [h for h in H if not oracle(G, h)]
        if outside:
            w = f"{render_label(outside[0])} outside interior(up({_fmt(G)}))"
            return ApproxReport("n", False, (G, H), w, handle.depth, data=outside[0])
        return ApproxReport(
            "n", True, (G, H), f"H inside interior(up({_fmt(G)}))", handle.depth
        )
    if kind == "d":
        for schema in handle.schemas:
            params = schema.refute(G, H)
            if params is not None:
                w = f"{schema.describe(params)} converges into H and misses up({_fmt(G)})"
                return ApproxReport(
                    "d", False, (G, H), w, handle.depth, data=(schema.schema_id, params)
                )
        k = len(handle.schemas)
        return ApproxReport(
            "d", True, (G, H), f"all families of {k} schema class(es) meet up({_fmt(G)})",
            handle.depth,
        )
    raise ValueError(f"kind must be 'n' or 'd', not {kind!r}")


def _fmt(G: tuple) -> str:
    return ",".join(render_label(g) for g in G)


def n_approx(handle: SpaceHandle, x, y) -> ApproxReport:
    return fin_approx(handle, (x,), (y,), "n")


def d_approx(handle: SpaceHandle, x, y) -> ApproxReport:
    return fin_approx(handle, (x,), (y,), "d")


def compact_elements(handle: SpaceHandle, kind: str) -> tuple:
    """Fixed points of the chosen relation within the handle's points."""
    return tuple(p for p in handle.points if fin_approx(handle, (p,), (p,), kind).holds)


# -- continuity classes on finite spaces ----------------------------------


def is_c_space(X: FiniteSpace) -> bool:
    """Every point has a neighbourhood basis of sets up(x)."""
    spec = X.specialization()
    for y in X.carrier:
        for U in X.opens:
            if y not in U:
                continue
            if not any(
                y in X.interior(spec.up_of(x)) and spec.up_of(x) <= U for x in X.carrier
            ):
                return False
    return True


def is_b_space(X: FiniteSpace) -> bool:
    """Every point has a neighbourhood basis of *open* sets up(x)."""
    spec = X.specialization()
    for y in X.carrier:
        for U in X.opens:
            if y not in U:
                continue
            if not any(
                X.interior(spec.up_of(x)) == spec.up_of(x)
                and y in spec.up_of(x)
                and spec.up_of(x) <= U
                for x in X.carrier
            ):
                return False
    return True


def d_continuity(X: FiniteSpace) -> bool:
    """Directed space whose directed-approximants below each point form a
    directed set converging to it."""
    if not X.is_directed_space():
        return False
    h = finite_handle(X)
    spec = X.specialization()
    for x in X.carrier:
        below = frozenset(y for y in X.carrier if d_approx(h, y, x).holds)
        if not spec.is_directed(below):
            return False
        if not X.converges(below, x):
            return False
    return True


def n_continuity(X: FiniteSpace) -> bool:
    """Interior-based approximants below each point form a directed set
    converging to it."""
    h = finite_handle(X)
    spec = X.specialization()
    for x in X.carrier:
        below = frozenset(y for y in X.carrier if n_approx(h, y, x).holds)
        if not spec.is_directed(below):
            return False
        if not X.converges(below, x):
            return False
    return True


def continuity_predicates(X: FiniteSpace) -> dict[str, bool]:
    """The four independently implemented continuity checks that the
    agreement suite compares."""
    return {
        "c_space": is_c_space(X),
        "d_continuous": d_continuity(X),
        "n_continuous": n_continuity(X),
        "opens_completely_distributive": is_completely_distributive(open_lattice(X)),
    }


def is_algebraic_space(X: FiniteSpace) -> bool:
    """Compact elements below each point form a directed set converging to it."""
    h = finite_handle(X)
    spec = X.specialization()
    kd = frozenset(compact_elements(h, "d"))
    for x in X.carrier:
        below = spec.down_of(x) & kd
        if not spec.is_directed(below):
            return False
        if not X.converges(below, x):
            return False
    return True


def locally_hypercompact_witness(X: FiniteSpace, x, U: frozenset) -> frozenset | None:
    spec = X.specialization()
    pool = sorted(U, key=X.carrier.index)
    for r in range(1, len(pool) + 1):
        for F in itertools.combinations(pool, r):
            upF = spec.up_set(F)
            if x in X.interior(upF) and upF <= U:
                return frozenset(F)
    return None


def is_locally_hypercompact(X: FiniteSpace) -> bool:
    """Each x in open U sits in interior(up(F)) inside up(F) inside U for
    some finite F."""
    for U in X.opens:
        for x in U:
            if locally_hypercompact_witness(X, x, U) is None:
                return False
    return True


def is_hypercompactly_based(X: FiniteSpace) -> bool:
    """Same with interior(up(F)) = up(F): a basis of open finitely
    generated upper sets."""
    spec = X.specialization()
    for U in X.opens:
        for x in U:
            found = False
            pool = sorted(U, key=X.carrier.index)
            for r in range(1, len(pool) + 1):
                for F in itertools.combinations(pool, r):
                    upF = spec.up_set(F)
                    if x in upF and upF <= U and X.interior(upF) == upF:
                        found = True
                        break
                if found:
                    break
            if not found:
                return False
    return True


def is_d_quasialgebraic(X: FiniteSpace) -> bool:
    """Finite-set analogue of algebraicity for the directed relation.

    For each x the family of finite F with F directed-approximating both
    itself and x must be directed under reverse-upper-set inclusion and
    converge to x as a filter of finitely generated upper sets.  (The
    definition mirrors the continuous/algebraic pattern; flagged as an
    interpretation in the docs.)
    """
    h = finite_handle(X)
    spec = X.specialization()
    pool = X.carrier
    for x in X.carrier:
        fam = []
        for r in range(1, len(pool) + 1):
            for F in itertools.combinations(pool, r):
                if fin_approx(h, F, F, "d").holds and fin_approx(h, F, (x,), "d").holds:
                    fam.append(frozenset(F))
        if not fam:
            return False
        # directed under F1 <= F2 iff up(F2) subset of up(F1)
        for F1, F2 in itertools.combinations(fam, 2):
            if not any(
                spec.up_set(F) <= spec.up_set(F1) and spec.up_set(F) <= spec.up_set(F2)
                for F in fam
            ):
                return False
        for U in X.opens:
            if x in U and not any(F <= U for F in fam):
                return False
    return True


@dataclass
class CheckReport:
    """A named multi-part check; used by the counterexample verifications."""

    name: str
    lines: list[str] = field(default_factory=list)
    passed: bool = True

    def record(self, ok: bool, text: str) -> None:
        self.lines.append(("PASS " if ok else "FAIL ") + text)
        if not ok:
            self.passed = False


def compact_open_is_hypercompact(X) -> CheckReport:
    """For a finite space: every open is compact in the open-set lattice and
    of the form up(minima), hence hypercompact.  Gallery spaces implement
    their own analysis (the cofinite space carries the counterexample)."""
    if not isinstance(X, FiniteSpace):
        return X.compact_open_analysis()
    rep = CheckReport("compact-open-is-hypercompact")
    spec = X.specialization() if X.carrier else None
    lat = open_lattice(X)
    directed = lat.poset.directed_subsets_with_max()
    for U in sorted(X.opens, key=lambda u: (len(u), sorted(map(render_label, u)))):
        if spec is not None and U:
            mins = spec.minimal_of(U)
            rep.record(spec.up_set(mins) == U, f"open {render_label(U)} = up(minima)")
        compact = True
        for D in directed:
            s = lat.poset.sup_of(D)
            if s is not None and U <= s and not any(U <= V for V in D):
                compact = False
                break
        rep.record(compact, f"open {render_label(U)} compact in the open lattice")
    return rep
