"""Named exhaustive suites over small-instance enumerations.

Each suite sweeps every labelled poset (or poset pair) up to the configured
size, runs independently implemented checks, and reports the failures with
their minimal failing instance.  Suite identifiers are the stable tokens the
command line accepts; the README maps each token to the property it checks.
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass, field

from . import constructions as cons
from . import approximation as approx
from . import lattices as lat
from .errors import BoundExceeded, UnknownName
from .gallery import gallery_names, gallery_space
from .gallery.regression import schema_soundness
from .order import FinitePoset, MonotoneMap, enumerate_posets
from .topology import (
    FiniteSpace,
    alexandroff,
    closed_lattice,
    enumerate_t0_topologies,
    find_homeomorphism,
    is_homeomorphic,
    open_lattice,
    render_label,
    scott_topology,
    scott_topology_literal,
    sierpinski,
    upper_topology,
)

MAX_EXHAUSTIVE_SIZE = 5
MAX_DEPTH = 12


@dataclass(frozen=True)
class SuiteConfig:
    suite_id: str = ""
    max_size: int = 4
    depth: int = 8
    jobs: int = 1
    out: str | None = None
    seed: int = 1201
    fmt: str = "text"

    def __post_init__(self):
        if self.max_size > MAX_EXHAUSTIVE_SIZE:
            raise BoundExceeded(f"max size {self.max_size} exceeds {MAX_EXHAUSTIVE_SIZE}")
        if self.depth > MAX_DEPTH:
            raise BoundExceeded(f"depth {self.depth} exceeds {MAX_DEPTH}")


@dataclass
class SuiteReport:
    suite_id: str
    instances: int = 0
    failures: list[str] = field(default_factory=list)
    lines: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, text: str) -> None:
        self.failures.append(text)

    def note(self, text: str) -> None:
        self.lines.append(text)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        head = (
            f"suite {self.suite_id}: {status} "
            f"({self.instances} instances, {len(self.failures)} failures, {self.elapsed:.1f}s)"
        )
        body = [head] + [f"  {ln}" for ln in self.lines]
        body += [f"  FAIL {f}" for f in self.failures[:20]]
        if len(self.failures) > 20:
            body.append(f"  ... and {len(self.failures) - 20} more failures")
        return "\n".join(body)

    def as_json(self) -> str:
        return json.dumps(
            {
                "suite": self.suite_id,
                "passed": self.passed,
                "instances": self.instances,
                "failures": self.failures,
                "notes": self.lines,
                "elapsed": round(self.elapsed, 3),
            },
            indent=2,
            sort_keys=True,
        )


def spaces_up_to(max_size: int):
    for n in range(1, max_size + 1):
        for k, P in enumerate(enumerate_posets(n)):
            yield f"poset[{n}]#{k}", alexandroff(P)


def poset_pairs_up_to(max_size: int):
    for n in range(1, max_size + 1):
        for i, P in enumerate(enumerate_posets(n)):
            for m in range(1, max_size + 1):
                for j, Q in enumerate(enumerate_posets(m)):
                    yield f"pair[{n}#{i},{m}#{j}]", alexandroff(P), alexandroff(Q)


# -- the suites -----------------------------------------------------------


def suite_thm_2_3(cfg: SuiteConfig) -> SuiteReport:
    """Directed-reflection laws plus the finite degeneracy oracle."""
    rep = SuiteReport("thm-2.3")
    for name, X in spaces_up_to(cfg.max_size):
        rep.instances += 1
        dX = X.d_topology()
        spec = X.specialization()
        if not all(spec.is_upper(U) for U in dX.opens):
            rep.fail(f"{name}: a directed-open set is not an upper set")
        if dX.specialization() != spec:
            rep.fail(f"{name}: the reflection changed the specialization order")
        for D in spec.directed_subsets():
            for x in X.carrier:
                if X.converges(D, x) != dX.converges(D, x):
                    rep.fail(f"{name}: convergence of {sorted(D)!r} changed")
        if dX.d_topology().opens != dX.opens:
            rep.fail(f"{name}: the reflection is not idempotent")
        if dX.opens != alexandroff(spec).opens:
            rep.fail(f"{name}: reflection differs from the upper-set topology")
    rep.note("reflection laws checked: upper sets, specialization, convergence, idempotence")

    # degeneracy: every finite T0 topology is the upper-set topology of its
    # specialization order, and convergence is order-theoretic
    topo_count = 0
    for n in range(0, min(cfg.max_size, 4) + 1):
        for X in enumerate_t0_topologies(n):
            topo_count += 1
            rep.instances += 1
            if n == 0:
                continue
            spec = X.specialization()
            if X.opens != alexandroff(spec).opens:
                rep.fail(f"T0 topology on {n} points differs from its upper-set reflection")
            for D in spec.directed_subsets():
                mx = spec.max_of(D)
                if mx is None:
                    rep.fail(f"directed set without maximum on {n} points")
                    continue
                for x in X.carrier:
                    if X.converges(D, x) != spec.leq(x, mx):
                        rep.fail(f"{n}-point space: convergence differs from order below max")
    rep.note(f"degeneracy oracle over {topo_count} independently enumerated T0 topologies")
    return rep


def _pair_task(args: tuple) -> str | None:
    """One product-comparison instance; top-level so a process pool can run it."""
    import itertools as it

    suite_id, n, i, m, j = args
    X = alexandroff(next(it.islice(enumerate_posets(n), i, None)))
    Y = alexandroff(next(it.islice(enumerate_posets(m), j, None)))
    if suite_id == "lem-2.8":
        ok = cons.cat_product(X, Y).opens == cons.product(X, Y).d_topology().opens
        msg = "slice criterion disagrees with the directed reflection"
    else:
        ok = cons.tensor(X, Y).opens == cons.cat_product(X, Y).opens == cons.product(X, Y).opens
        msg = "the three product topologies differ"
    return None if ok else f"pair[{n}#{i},{m}#{j}]: {msg}"


def _run_pair_suite(rep: SuiteReport, suite_id: str, size: int, jobs: int) -> None:
    counts = [sum(1 for _ in enumerate_posets(n)) for n in range(1, size + 1)]
    tasks = [
        (suite_id, n, i, m, j)
        for n in range(1, size + 1)
        for i in range(counts[n - 1])
        for m in range(1, size + 1)
        for j in range(counts[m - 1])
    ]
    rep.instances += len(tasks)
    if jobs > 1:
        import multiprocessing

        with multiprocessing.Pool(jobs) as pool:
            results = pool.map(_pair_task, tasks, chunksize=16)
    else:
        results = map(_pair_task, tasks)
    for res in results:
        if res is not None:
            rep.fail(res)


def suite_lem_2_8(cfg: SuiteConfig) -> SuiteReport:
    """The two-sided slice criterion computes the reflection of the product."""
    rep = SuiteReport("lem-2.8")
    size = min(cfg.max_size, 3)
    _run_pair_suite(rep, "lem-2.8", size, cfg.jobs)
    rep.note(f"pairs up to {size}x{size}: slice criterion = reflected product")
    return rep


def suite_thm_3_12(cfg: SuiteConfig) -> SuiteReport:
    """Four independently computed continuity predicates agree; the
    non-distributive five-element lattice is rejected as a negative control."""
    rep = SuiteReport("thm-3.12")
    for name, X in spaces_up_to(cfg.max_size):
        rep.instances += 1
        preds = approx.continuity_predicates(X)
        if len(set(preds.values())) != 1:
            rep.fail(f"{name}: predicates disagree: {preds}")
        if not all(preds.values()):
            rep.fail(f"{name}: a finite space failed a continuity predicate: {preds}")
    rep.instances += 1
    if lat.is_completely_distributive(lat.m3()):
        rep.fail("negative control: the non-distributive lattice passed the CD check")
    rep.note("c-space search, directed continuity, interior continuity, CD opens all agree")
    return rep


def suite_thm_3_17(cfg: SuiteConfig) -> SuiteReport:
    """Algebraicity: b-space search, compact-approximant convergence, and the
    open-lattice criterion computed independently."""
    rep = SuiteReport("thm-3.17")
    for name, X in spaces_up_to(cfg.max_size):
        rep.instances += 1
        a = approx.is_b_space(X)
        b = approx.is_algebraic_space(X)
        L = open_lattice(X)
        c = lat.is_completely_distributive(L) and lat.is_algebraic_lattice(L)
        if not (a == b == c):
            rep.fail(f"{name}: b-space={a}, algebraic={b}, lattice={c}")
        if not a:
            rep.fail(f"{name}: a finite space is not a b-space")
    rep.note("b-space, algebraic space, CD algebraic open lattice all agree")
    return rep


def suite_ideal_completion(cfg: SuiteConfig) -> SuiteReport:
    """The completion is algebraic with principal compacts; the supremum map
    and the approximant map form an adjunction splitting the identity."""
    rep = SuiteReport("ideal-completion")
    for name, X in spaces_up_to(cfg.max_size):
        rep.instances += 1
        spec = X.specialization()
        IC = cons.ideal_completion(X)
        if not approx.is_b_space(IC):
            rep.fail(f"{name}: completion is not a b-space")
        h = approx.finite_handle(IC)
        kd = set(approx.compact_elements(h, "d"))
        principals = {spec.down_of(x) for x in X.carrier}
        if kd != principals:
            rep.fail(f"{name}: compacts of the completion are not the principal ideals")
        icspec = IC.specialization()
        if not all(
            icspec.leq(A, B) == (A <= B) for A in IC.carrier for B in IC.carrier
        ):
            rep.fail(f"{name}: completion order is not inclusion")
        try:
            conn = cons.lower_adjoint(X)
        except Exception as exc:  # adjunction or continuity failure
            rep.fail(f"{name}: {exc}")
            continue
        if not cons.adjunction_holds(conn.lower, conn.upper):
            rep.fail(f"{name}: adjunction law fails")
        # ideal-net law: a directed set below x converging to x has supremum x
        for D in spec.directed_subsets():
            for x in X.carrier:
                if D <= spec.down_of(x) and X.converges(D, x) and spec.sup_of(D) != x:
                    rep.fail(f"{name}: ideal net {sorted(D)!r} misses its supremum")
        # over Scott spaces the completion's points are the order ideals
        ideals = {
            D for D in spec.directed_subsets() if spec.down_set(D) == D
        }
        if set(IC.carrier) != ideals:
            rep.fail(f"{name}: completion points differ from the order ideals")
    rep.note("completion algebraic, compacts principal, adjunction splits the identity")
    return rep


def suite_thm_4_11(cfg: SuiteConfig) -> SuiteReport:
    """Quasicontinuity: finitely-generated neighbourhood search against the
    hypercontinuity of the open lattice, and the two hyperbelow paths."""
    rep = SuiteReport("thm-4.11")
    for name, X in spaces_up_to(cfg.max_size):
        rep.instances += 1
        L = open_lattice(X)
        lh = approx.is_locally_hypercompact(X)
        hc = lat.is_hypercontinuous(L)
        if lh != hc or not lh:
            rep.fail(f"{name}: locally-hypercompact={lh}, hypercontinuous opens={hc}")
        hb = approx.is_hypercompactly_based(X)
        ha = lat.is_hyperalgebraic(L)
        if hb != ha or not hb:
            rep.fail(f"{name}: hypercompactly-based={hb}, hyperalgebraic opens={ha}")
        dq = approx.is_d_quasialgebraic(X)
        if dq != hb:
            rep.fail(f"{name}: quasialgebraic interpretation disagrees: {dq} vs {hb}")
        mat = lat.hyperbelow_matrix(L)
        for U in X.opens:
            for V in X.opens:
                if lat.hyperbelow_open(X, U, V) != mat[U, V]:
                    rep.fail(f"{name}: hyperbelow paths disagree on ({sorted(U)}, {sorted(V)})")
        rep_chk = approx.compact_open_is_hypercompact(X)
        if not rep_chk.passed:
            rep.fail(f"{name}: a compact open is not finitely generated")
    rep.note("quasicontinuity, quasialgebraicity, hyperbelow agreement, compact opens")
    return rep


def suite_thm_4_16(cfg: SuiteConfig) -> SuiteReport:
    """Closed-lattice correspondences and the spectrum round trip."""
    rep = SuiteReport("thm-4.16")
    for name, X in spaces_up_to(cfg.max_size):
        rep.instances += 1
        spec = X.specialization()
        LO = open_lattice(X)
        LC = closed_lattice(X)
        if len(LO) != len(LC):
            rep.fail(f"{name}: open and closed lattices differ in size")
        from .order import find_isomorphism

        if find_isomorphism(LC.poset, LO.poset.dual()) is None:
            rep.fail(f"{name}: closed lattice is not dual to the open lattice")
        cp = set(lat.coprimes(LC))
        principals = {spec.down_of(x) for x in X.carrier}
        if cp != principals:
            rep.fail(f"{name}: coprime closed sets are not the point closures")
        if lat.is_completely_distributive(LO) != lat.is_completely_distributive(LC):
            rep.fail(f"{name}: CD differs between opens and closeds")
        spectrum = lat.spectrum(LO)
        if not is_homeomorphic(spectrum, X):
            rep.fail(f"{name}: spectrum of the open lattice is not the space")
    rep.note("closed-lattice duality, coprimes, CD agreement, spectrum round trip")
    return rep


def suite_lem_5_2(cfg: SuiteConfig) -> SuiteReport:
    """Tensor, categorical, and topological products coincide."""
    rep = SuiteReport("lem-5.2")
    size = min(cfg.max_size, 3)
    _run_pair_suite(rep, "lem-5.2", size, cfg.jobs)
    rep.note(f"pairs up to {size}x{size}: tensor = categorical = topological product")
    return rep


def suite_thm_5_8(cfg: SuiteConfig) -> SuiteReport:
    """Core-compactness formulations, the Sierpinski exponential, and the
    currying bijection at small sizes."""
    rep = SuiteReport("thm-5.8-finite")
    s2 = sierpinski()
    for name, X in spaces_up_to(min(cfg.max_size, 3)):
        rep.instances += 1
        chk = cons.check_core_compact(X)
        if not chk.passed:
            rep.fail(f"{name}: {chk.lines()}")
        E = cons.exponential(X, s2)
        SO = scott_topology(open_lattice(X).poset)
        if not is_homeomorphic(E, SO):
            rep.fail(f"{name}: the Sierpinski exponential is not the Scott open lattice")
        PW = cons.pointwise_space(X, s2)
        if PW.d_topology().opens != E.opens:
            rep.fail(f"{name}: reflected pointwise topology differs from the exponential")
    for name, Z, X in poset_pairs_up_to(min(cfg.max_size, 2)):
        for m in range(1, min(cfg.max_size, 2) + 1):
            for Yp in enumerate_posets(m):
                rep.instances += 1
                chk = cons.curry_check(Z, X, alexandroff(Yp))
                if not chk.passed:
                    rep.fail(f"{name} -> size-{m} target: currying failed: {chk.parts}")
    rep.note("graph openness, evaluation continuity, exponentials, currying bijections")
    return rep


def suite_prop_6_1(cfg: SuiteConfig) -> SuiteReport:
    """Finite-closure maps are continuous iff the Scott and upper topologies
    on the closed-set lattice coincide, both sides computed literally."""
    rep = SuiteReport("prop-6.1")
    for name, X in spaces_up_to(min(cfg.max_size, 3)):
        for n in (1, 2):
            rep.instances += 1
            sn = cons.s_n_map(X, n)
            if not sn.continuous:
                rep.fail(f"{name}: s_{n} is not continuous")
            if not sn.sigma_equals_upsilon:
                rep.fail(f"{name}: Scott and upper topologies differ on the closed sets")
            if not sn.agree:
                rep.fail(f"{name}: continuity and topology coincidence disagree")
    rep.note("s_1, s_2 continuous; Scott = upper on closed-set lattices, independently")
    return rep


def suite_eta_diamond(cfg: SuiteConfig) -> SuiteReport:
    """Adjunction laws of the point-closure and hitting maps."""
    rep = SuiteReport("eta-diamond")
    for name, X in spaces_up_to(cfg.max_size):
        rep.instances += 1
        r = cons.eta_diamond(X)
        if not r.passed:
            rep.fail(
                f"{name}: eta_cont={r.eta_continuous}, lands={r.diamond_lands_in_scott_opens}, "
                f"inv_diamond={r.inv_after_diamond_is_identity}, "
                f"diamond_inv={r.diamond_after_inv_below_identity}, "
                f"sups=({r.diamond_preserves_sups},{r.eta_inv_preserves_sups})"
            )
    rep.note("hitting map and inverse closure map satisfy both adjunction laws")
    return rep


def suite_gallery_all(cfg: SuiteConfig) -> SuiteReport:
    """Every gallery claim plus the schema soundness regressions."""
    rep = SuiteReport("gallery-all")
    for name in gallery_names():
        space = gallery_space(name)
        depth = cfg.depth
        if name == "example_P_scott":
            depth = max(depth, 10)
        claims = space.verify(depth)
        rep.instances += len(claims.results)
        for line in claims.failures():
            rep.fail(line)
        reg = schema_soundness(space, max_depth=min(cfg.depth, 8), seed=cfg.seed)
        rep.instances += reg.checked
        for m in reg.mismatches:
            rep.fail(f"{name}: {m}")
        rep.note(f"{name}: {len(claims.results)} claims, {reg.checked} regression families")
    return rep


SUITES = {
    "thm-2.3": suite_thm_2_3,
    "lem-2.8": suite_lem_2_8,
    "thm-3.12": suite_thm_3_12,
    "thm-3.17": suite_thm_3_17,
    "ideal-completion": suite_ideal_completion,
    "thm-4.11": suite_thm_4_11,
    "thm-4.16": suite_thm_4_16,
    "lem-5.2": suite_lem_5_2,
    "thm-5.8-finite": suite_thm_5_8,
    "prop-6.1": suite_prop_6_1,
    "eta-diamond": suite_eta_diamond,
    "gallery-all": suite_gallery_all,
}


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("DTOPW_JOBS", "1")))
    except ValueError:
        return 1


def run_suite(suite_id: str, cfg: SuiteConfig | None = None) -> SuiteReport:
    if suite_id not in SUITES:
        raise UnknownName(f"unknown suite {suite_id!r}; known: {', '.join(sorted(SUITES))}")
    cfg = cfg or SuiteConfig(suite_id=suite_id)
    start = time.time()
    rep = SUITES[suite_id](cfg)
    rep.elapsed = time.time() - start
    return rep
