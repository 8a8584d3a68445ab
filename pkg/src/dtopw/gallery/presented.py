"""Infrastructure for presented spaces: countable spaces given by decidable
oracles (order, interior-of-upper-set, closure membership for coded directed
families) together with a declared list of directed-family schemas and
order-faithful finite truncations.

Each concrete space documents its schema classification: a short argument
that every directed subset is convergence-equivalent to an instance of one
of its schemas (two families are convergence-equivalent when they have the
same lower closure, hence the same limits and the same upper-set hits).  The
soundness regressions brute-force directed subsets of the truncations and
compare against the schema predictions.
"""

from __future__ import annotations

import abc
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

from ..approximation import DirectedSchema, SpaceHandle
from ..errors import ClaimFailed, OracleUnavailable
from ..order import FinitePoset
from ..topology import FiniteSpace, alexandroff


@dataclass(frozen=True)
class Truncation:
    """An order-faithful finite snapshot of a presented space.

    ``space`` is the Alexandroff space of the restricted order.  Openness
    questions about the ambient space are *not* reflected (restricting a
    cofinite-flavoured topology destroys it); convergence of finite directed
    subsets is reflected, because a finite directed set has a maximum and
    converges exactly to the points below it in any T0 space.
    """

    space: FiniteSpace
    depth: int
    reflects_openness: bool
    note: str


@dataclass
class Claim:
    claim_id: str
    description: str
    check: Callable[[], tuple[bool, str]]


@dataclass
class ClaimReport:
    space: str
    depth: int
    results: list[tuple[str, str, bool, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ok for _, _, ok, _ in self.results)

    def lines(self) -> list[str]:
        out = []
        for cid, desc, ok, witness in self.results:
            status = "PASS" if ok else "FAIL"
            out.append(f"{self.space}.{cid}: {desc} -> {status} ({witness})")
        return out

    def failures(self) -> list[str]:
        return [line for line in self.lines() if "-> FAIL" in line]


class BoundedSingletons(DirectedSchema):
    """Singleton families {z}: they converge exactly to the points below z
    and meet an upper set iff z lies in it.

    ``refute`` searches candidate points supplied by the space's
    ``refutation_candidates`` oracle; each space documents why a refuting
    point, when one exists, can be clipped into that finite candidate set.
    """

    schema_id = "singleton"

    def __init__(self, space: "PresentedSpace"):
        self.space = space

    def refute(self, G, H):
        leq = self.space.leq
        for z in self.space.refutation_candidates(G, H):
            if any(leq(h, z) for h in H) and not any(leq(g, z) for g in G):
                return z
        return None

    def contains(self, params, point):
        return point == params

    def converges_to(self, params, point):
        return self.space.leq(point, params)

    def meets_up(self, params, G):
        return any(self.space.leq(g, params) for g in G)

    def sample_params(self, depth):
        return list(self.space.points(depth))

    def materialize(self, params, depth):
        return frozenset({params})

    def describe(self, params):
        return f"singleton {{{self.space.format_point(params)}}}"


class PresentedSpace(abc.ABC):
    """A countable T0 space packaged as a bundle of decidable oracles."""

    name: str = "?"

    # -- oracles -----------------------------------------------------------

    @abc.abstractmethod
    def points(self, depth: int) -> tuple:
        """The depth-bounded truncation carrier, in a deterministic order."""

    @abc.abstractmethod
    def leq(self, x, y) -> bool:
        """The specialization order."""

    @abc.abstractmethod
    def interior_up_contains(self, F: tuple, y) -> bool:
        """Whether y lies in the interior of the upper set of the finite F."""

    @abc.abstractmethod
    def finite_set_is_open(self, U: frozenset) -> bool:
        """Whether the explicit finite set U is open in the ambient space."""

    @abc.abstractmethod
    def closure_contains(self, family, z) -> bool:
        """Membership of z in the closure of a coded directed family.

        Codes: ``("set", frozenset)`` for explicit finite families plus
        space-specific codes for the infinite schema instances.
        """

    @abc.abstractmethod
    def schemas(self) -> tuple[DirectedSchema, ...]:
        ...

    @abc.abstractmethod
    def format_point(self, p) -> str:
        ...

    def refutation_candidates(self, G, H) -> tuple:
        """A finite candidate pool that is exhaustive for singleton
        refutations of the query (see :class:`BoundedSingletons`)."""
        raise OracleUnavailable(f"{self.name} has no singleton candidate oracle")

    def claims(self, depth: int) -> list[Claim]:
        return []

    def compact_open_analysis(self):
        raise OracleUnavailable(f"{self.name} ships no compact-open analysis")

    # -- derived machinery ---------------------------------------------------

    truncation_note: str = "order-faithful; ambient openness is not reflected"

    def truncate(self, depth: int) -> Truncation:
        pts = self.points(depth)
        pairs = [(a, b) for a in pts for b in pts if self.leq(a, b)]
        space = alexandroff(FinitePoset(pts, pairs))
        return Truncation(space=space, depth=depth, reflects_openness=False, note=self.truncation_note)

    def handle(self, depth: int = 8) -> SpaceHandle:
        return SpaceHandle(
            name=self.name,
            points=self.points(depth),
            leq=self.leq,
            schemas=self.schemas(),
            interior_up_contains=self.interior_up_contains,
            depth=depth,
            truncated=True,
            space=self,
        )

    def upper_set_is_directed_open(self, U: frozenset) -> bool:
        """Whether the finite *upper* set U is directed-open: every schema
        family converging into U meets it.  (For upper U, meeting U is the
        same as meeting its upper set, so the schema quantifier applies.)"""
        if any(self.leq(x, y) and y not in U for x in U for y in U):
            raise ValueError("U must be an upper set")
        G = tuple(sorted(U, key=self.format_point))
        for schema in self.schemas():
            if schema.refute(G, G) is not None:
                return False
        return True

    def verify(self, depth: int = 8) -> ClaimReport:
        report = ClaimReport(space=self.name, depth=depth)
        for claim in self.claims(depth):
            ok, witness = claim.check()
            report.results.append((claim.claim_id, claim.description, ok, witness))
        return report


def require_pass(report: ClaimReport) -> ClaimReport:
    if not report.passed:
        raise ClaimFailed(
            f"{report.space}: {len(report.failures())} claim(s) failed:\n"
            + "\n".join(report.failures()),
            report=report,
        )
    return report
