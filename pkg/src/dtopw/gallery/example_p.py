"""The grid-with-omega-layer space: carrier (N x N) u {w_i : i in N} with the
Scott topology of the order

* (m1, n1) <= (m2, n2)  iff  m1 = m2 and n1 <= n2   (columns are chains),
* (m, n)  <= w_i        iff  m = i, or m = 1 and n <= i,
* the w_i are pairwise incomparable maximal points.

Columns and heights are indexed from 1; the first column is special by
construction (the asymmetric second clause is implemented literally).

Scott opens are the upper sets U such that w_m in U forces U to meet column
m.  Consequences implemented by the oracles below:

* up((m, k)) is open for m != 1 (its only maximal point is w_m), so the
  interior of up(F) is the union of the up-sets of the non-first-column grid
  points of up(F);
* no open set fits inside up((1, n)): an open set containing w_1 or a
  first-column point must meet infinitely many columns, while up(F) for
  finite F covers finitely many columns besides the first.  Hence the
  interior contains no first-column point and never w_1.

Schema classification: a directed set without a maximum cannot contain two
points of different columns (their upper bounds are maximal points, which
would be maxima), so it is an unbounded subset of a single column — a
column tail.  Every directed set is therefore convergence-equivalent to a
singleton (max-led case) or to the canonical tail of its column, optionally
with the column's maximal point adjoined (which is again max-led).  The
closure of a column-m tail is the column itself, w_m, and the first-column
points of height at most m.
"""

from __future__ import annotations

from ..approximation import DirectedSchema, d_approx, n_approx
from ..errors import OracleUnavailable
from .presented import BoundedSingletons, Claim, PresentedSpace

W = "w"


def omega(i: int) -> tuple:
    return (W, i)


def is_grid(p) -> bool:
    return isinstance(p, tuple) and len(p) == 2 and isinstance(p[0], int)


def is_omega(p) -> bool:
    return isinstance(p, tuple) and len(p) == 2 and p[0] == W


class _ColumnTails(DirectedSchema):
    """Unbounded subsets of one column; all tails of a column are
    convergence-equivalent, so the column index is the only parameter."""

    schema_id = "tail"
    with_top = False

    def __init__(self, space: "ExampleP"):
        self.space = space

    def refute(self, G, H):
        # a refuting column converges into H; columns named by H members are
        # bounded by the mentioned numbers, and first-column members of H
        # admit every large enough column, so one fresh column suffices
        for m in self.space.candidate_columns(G, H):
            if any(self.converges_to(m, h) for h in H) and not self.meets_up(m, G):
                return m
        return None

    def contains(self, params, point):
        if self.with_top and point == omega(params):
            return True
        return is_grid(point) and point[0] == params

    def converges_to(self, params, point):
        return self.space.tail_closure_contains(params, point)

    def meets_up(self, params, G):
        hit = any(is_grid(g) and g[0] == params for g in G)
        if self.with_top and not hit:
            hit = any(self.space.leq(g, omega(params)) for g in G)
        return hit

    def sample_params(self, depth):
        return list(range(1, depth + 1))

    def materialize(self, params, depth):
        pts = frozenset((params, k) for k in range(1, depth + 1))
        if self.with_top:
            pts |= {omega(params)}
        return pts

    def describe(self, params):
        kind = "tail+top" if self.with_top else "tail"
        return f"column-{params} {kind}"


class _ColumnTailsWithTop(_ColumnTails):
    schema_id = "tailtop"
    with_top = True


class ExampleP(PresentedSpace):
    name = "example_P_scott"
    truncation_note = (
        "order-faithful; Scott opens meet infinitely many columns, so "
        "openness facts are not reflected"
    )

    def points(self, depth: int) -> tuple:
        grid = tuple((m, n) for m in range(1, depth + 1) for n in range(1, depth + 1))
        return grid + tuple(omega(i) for i in range(1, depth + 1))

    def leq(self, x, y) -> bool:
        if x == y:
            return True
        if is_grid(x) and is_grid(y):
            return x[0] == y[0] and x[1] <= y[1]
        if is_grid(x) and is_omega(y):
            m, n = x
            i = y[1]
            return m == i or (m == 1 and n <= i)
        return False

    def format_point(self, p) -> str:
        if is_omega(p):
            return f"w{p[1]}"
        return f"({p[0]},{p[1]})"

    # -- oracles -------------------------------------------------------------

    def _ints(self, pts) -> list[int]:
        out = []
        for p in pts:
            out.extend(c for c in p if isinstance(c, int))
        return out

    def refutation_candidates(self, G, H):
        fresh = max(self._ints(tuple(G) + tuple(H)), default=0) + 1
        return self.points(fresh)

    def candidate_columns(self, G, H):
        fresh = max(self._ints(tuple(G) + tuple(H)), default=0) + 1
        return range(1, fresh + 1)

    def interior_up_contains(self, F: tuple, y) -> bool:
        if is_grid(y) and y[0] != 1:
            return any(is_grid(f) and f[0] == y[0] and f[1] <= y[1] for f in F)
        if is_omega(y) and y[1] != 1:
            return any(is_grid(f) and f[0] == y[1] for f in F)
        return False

    def finite_set_is_open(self, U: frozenset) -> bool:
        # a nonempty open contains some w_m together with column-m points,
        # whose up-sets are infinite
        return U == frozenset()

    def tail_closure_contains(self, m: int, z) -> bool:
        if z == omega(m):
            return True
        if is_grid(z) and z[0] == m:
            return True
        return is_grid(z) and z[0] == 1 and z[1] <= m

    def closure_contains(self, family, z) -> bool:
        kind = family[0]
        if kind == "set":
            return any(self.leq(z, s) for s in family[1])
        if kind in ("tail", "tailtop"):
            return self.tail_closure_contains(family[1], z)
        raise OracleUnavailable(f"unknown family code {family!r}")

    def schemas(self):
        return (BoundedSingletons(self), _ColumnTails(self), _ColumnTailsWithTop(self))

    # -- claims ----------------------------------------------------------------

    def claims(self, depth: int) -> list[Claim]:
        h = self.handle(depth)
        out = []
        for n in range(1, depth + 1):
            def d_check(n=n):
                r = d_approx(h, (1, n), omega(1))
                return r.holds, r.witness

            def n_check(n=n):
                r = n_approx(h, (1, n), omega(1))
                return not r.holds, r.witness

            out.append(
                Claim(
                    f"d_first_col_{n}",
                    f"(1,{n}) directed-approximates w1",
                    d_check,
                )
            )
            out.append(
                Claim(
                    f"no_n_first_col_{n}",
                    f"(1,{n}) does not interior-approximate w1",
                    n_check,
                )
            )
        def open_column():
            # up((2,1)) is open: its interior is itself
            ok = all(
                self.interior_up_contains(((2, 1),), z) == self.leq((2, 1), z)
                for z in self.points(depth)
            )
            return ok, "interior(up((2,1))) = up((2,1)) on the truncation"

        out.append(Claim("non_first_column_open", "up((2,1)) is its own interior", open_column))
        return out
