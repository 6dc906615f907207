"""Property suites shared by the CLI ``verify`` command and the test suite.

Each suite returns a :class:`SuiteResult`; ``failures`` holds counterexamples
as graph6 strings plus details.  Where a suite runs over ``*_shapes`` or
``bipartite_forms`` it relies on the property being invariant under vertex
relabeling (see :mod:`maxent.enumeration`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from . import families as fam
from .enumeration import all_labeled_trees, bipartite_forms, random_tree, tree_shapes
from .errors import MaxentError, TooLarge
from .graph import Graph, all_graphs, components, graph6_decode, graph6_encode, two_coloring
from .linalg import char_poly, rank_int
from .oracle import (
    apply_lc_unitary,
    apply_switching_operator,
    build_graph_state,
    max_cut_rank,
    states_equal,
    states_equal_up_to_phase,
    verify_stabilizer,
)
from .transforms import (
    chromatic_number,
    combined_orbit,
    jaeger_inverse,
    lc_path,
    line_graph,
    local_complement,
    orbit_partition,
    seidel,
    switch,
)


@dataclass
class SuiteResult:
    suite: str
    checked: int = 0
    failures: list[dict] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, g: Graph | None, **info) -> None:
        rec = {"graph6": graph6_encode(g)} if g is not None else {}
        rec.update(info)
        self.failures.append(rec)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checked": self.checked,
            "failures": self.failures,
            "details": self.details,
        }


def _cap(name: str, n: int, limit: int) -> None:
    if n > limit:
        raise TooLarge(f"suite {name} is limited to n <= {limit}")


def suite_stabilizer(n_max: int = 5, samples: int = 0, sample_max: int = 8, seed: int = 0) -> SuiteResult:
    """Graph states satisfy every stabilizer equation and are the unique joint +1 vector."""
    _cap("stabilizer", max(n_max, sample_max if samples else 0), 12)
    res = SuiteResult("stabilizer")
    for n in range(1, n_max + 1):
        for g in all_graphs(n):
            res.checked += 1
            if not verify_stabilizer(g, build_graph_state(g)):
                res.fail(g)
    rng = np.random.default_rng(seed)
    for n in range(n_max + 1, sample_max + 1) if samples else ():
        for _ in range(samples):
            g = Graph.from_edge_mask(n, int(rng.integers(0, 1 << (n * (n - 1) // 2))))
            res.checked += 1
            if not verify_stabilizer(g, build_graph_state(g)):
                res.fail(g)
    return res


def suite_prop1(n_max: int = 8) -> SuiteResult:
    """half real rank <= best GF(2) cut rank <= floor(n/2); pinned when nonsingular."""
    _cap("prop1", n_max, 10)
    res = SuiteResult("prop1")
    nonsingular = 0
    for n in range(1, n_max + 1):
        for k, g in bipartite_forms(n):
            res.checked += 1
            r = rank_int(g.adjacency())
            lb, _ = max_cut_rank(g, frozenset(range(1, k + 1)) if k else None)
            ub = n // 2
            if not (r <= 2 * lb and lb <= ub):
                res.fail(g, rank_real=r, lower=lb, upper=ub)
            if r == n:
                nonsingular += 1
                if lb != ub:
                    res.fail(g, rank_real=r, lower=lb, upper=ub, reason="nonsingular but not pinned")
    res.details = {"nonsingular_forms": nonsingular, "coverage": "bipartite forms (every labeled bipartite graph up to relabeling)"}
    return res


def suite_min_edges(n_values: list[int], workers: int | None = None) -> SuiteResult:
    res = SuiteResult("prop2-minedges")
    rows = []
    for n in n_values:
        _cap("prop2-minedges", n, fam.MAX_MIN_EDGE_N)
        for connected in (False, True):
            rep = fam.min_edge_search(n, "nonsingular_any", connected, workers)
            expected = fam.min_edge_formula(n, connected)
            res.checked += 1
            rows.append({"n": n, "connected": connected, "predicate": "nonsingular_any", "minimum": rep.optimum, "formula": expected, "witnesses": len(rep.witnesses)})
            if rep.optimum != expected:
                res.fail(None, n=n, connected=connected, found=rep.optimum, expected=expected)
        rep = fam.min_edge_search(n, "bipartite_maximal", False, workers)
        rows.append({"n": n, "connected": False, "predicate": "bipartite_maximal", "minimum": rep.optimum, "formula": None, "witnesses": len(rep.witnesses)})
    res.details = {"rows": rows}
    return res


def _check_perfect_tree(res: SuiteResult, t: Graph) -> None:
    res.checked += 1
    n = t.n
    beta = fam.matching_number_tree(t)
    r = rank_int(t.adjacency())
    cert = fam.certify_max_schmidt(t)
    if 2 * beta != n or r != n or cert.verdict != fam.MAXIMAL or cert.es_lower != n // 2:
        res.fail(t, matching=beta, rank=r, verdict=cert.verdict)


def suite_trees(n_max: int = 10, labeled_max: int = 8, random_samples: int = 10_000, random_max: int = 12, seed: int = 0) -> SuiteResult:
    """Perfect trees are nonsingular with pinned E_S; r(T) = 2 beta(T) on random trees."""
    res = SuiteResult("prop-trees")
    counts = {}
    for n in range(2, n_max + 1, 2):
        if n <= labeled_max:
            seen = 0
            for t in fam.enumerate_perfect_trees(n):
                _check_perfect_tree(res, t)
                seen += 1
            counts[n] = {"labeled": seen, "expected": fam.count_labeled_perfect_trees(n)}
            if seen != fam.count_labeled_perfect_trees(n):
                res.fail(None, n=n, enumerated=seen, expected=fam.count_labeled_perfect_trees(n))
        else:
            shapes = 0
            for t in fam.perfect_tree_shapes(n):
                _check_perfect_tree(res, t)
                shapes += 1
            counts[n] = {"shapes": shapes, "labeled_covered": fam.count_labeled_perfect_trees(n)}
    rng = np.random.default_rng(seed)
    for _ in range(random_samples):
        n = int(rng.integers(1, random_max + 1))
        t = random_tree(n, rng)
        res.checked += 1
        if rank_int(t.adjacency()) != 2 * fam.matching_number_tree(t):
            res.fail(t, reason="rank != 2 * matching number")
    res.details = {"perfect_trees": counts, "random_trees": random_samples}
    return res


def suite_unicyclic(n_max: int = 10) -> SuiteResult:
    """Elementary unicyclic graphs, and their joins with perfect trees, are nonsingular."""
    res = SuiteResult("prop-unicyclic")
    flagged = []
    for label, u in fam.elementary_unicyclic_graphs(n_max):
        res.checked += 1
        if rank_int(u.adjacency()) != u.n:
            res.fail(u, family=label, rank=rank_int(u.adjacency()))
        if two_coloring(u) is None:
            flagged.append(label)
        elif fam.certify_max_schmidt(u).verdict != fam.MAXIMAL:
            res.fail(u, family=label, reason="bipartite but not certified maximal")
        for tn in range(2, n_max - u.n + 1, 2):
            for t in fam.perfect_tree_shapes(tn):
                for a in range(1, t.n + 1):
                    for b in range(1, u.n + 1):
                        g = fam.join_tree_unicyclic(t, u, a, b)
                        res.checked += 1
                        if rank_int(g.adjacency()) != g.n:
                            res.fail(g, family=f"join({graph6_encode(t)},{label},{a},{b})")
    res.details = {"non_bipartite_flagged": len(flagged)}
    return res


def suite_jaeger(n_max: int = 8, states_max: int = 8) -> SuiteResult:
    """For nonsingular trees: the inverse graph is nonsingular and LC-equivalent, also on states."""
    res = SuiteResult("jaeger")
    for n in range(2, n_max + 1, 2):
        for t in fam.perfect_tree_shapes(n):
            res.checked += 1
            try:
                ti = jaeger_inverse(t)
            except MaxentError as exc:
                res.fail(t, error=type(exc).__name__)
                continue
            if rank_int(ti.adjacency()) != n:
                res.fail(t, reason="inverse graph singular")
            path = lc_path(t, ti)
            if path is None:
                res.fail(t, reason="inverse graph outside the LC orbit")
                continue
            if n <= states_max:
                psi, g = build_graph_state(t), t
                for v in path:
                    psi = apply_lc_unitary(psi, g, v)
                    g = local_complement(g, v)
                if not states_equal_up_to_phase(psi, build_graph_state(ti)):
                    res.fail(t, reason="state-level LC path failed", path=path)
    res.details = {"coverage": "perfect tree shapes (nonsingular trees up to relabeling)"}
    return res


def suite_tk(n_max: int = 5) -> SuiteResult:
    _cap("tk", n_max, 8)
    res = SuiteResult("tk")
    for n in range(1, n_max + 1):
        for g in all_graphs(n):
            psi = build_graph_state(g)
            for k in range(1, n + 1):
                res.checked += 1
                out = apply_switching_operator(psi, k)
                if not states_equal(out, build_graph_state(switch(g, k))):
                    res.fail(g, k=k)
                if not states_equal(apply_switching_operator(out, k), psi):
                    res.fail(g, k=k, reason="T_k not an involution")
    return res


def suite_lc_unitary(n_max: int = 5) -> SuiteResult:
    _cap("lc-unitary", n_max, 8)
    res = SuiteResult("lc-unitary")
    for n in range(1, n_max + 1):
        for g in all_graphs(n):
            psi = build_graph_state(g)
            for i in range(1, n + 1):
                res.checked += 1
                h = local_complement(g, i)
                if not states_equal_up_to_phase(apply_lc_unitary(psi, g, i), build_graph_state(h)):
                    res.fail(g, i=i)
    return res


def suite_involutions(n_max: int = 5) -> SuiteResult:
    _cap("involutions", n_max, 7)
    res = SuiteResult("involutions")
    for n in range(1, n_max + 1):
        for g in all_graphs(n):
            for i in range(1, n + 1):
                res.checked += 1
                if local_complement(local_complement(g, i), i) != g:
                    res.fail(g, op="lc", i=i)
                if switch(switch(g, i), i) != g:
                    res.fail(g, op="switch", i=i)
    return res


def suite_seidel(n_max: int = 6) -> SuiteResult:
    """Seidel characteristic polynomial is constant on switching classes."""
    _cap("seidel", n_max, 7)
    res = SuiteResult("seidel")
    for n in range(1, n_max + 1):
        polys = {}
        for g in all_graphs(n):
            polys[g.rows] = char_poly(seidel(g))
        for g in all_graphs(n):
            for i in range(1, n + 1):
                res.checked += 1
                if polys[switch(g, i).rows] != polys[g.rows]:
                    res.fail(g, i=i)
    return res


def suite_transitivity(n_values: list[int]) -> SuiteResult:
    res = SuiteResult("transitivity")
    rows = []
    for n in n_values:
        rep = combined_orbit(n)
        res.checked += 1
        rows.append(rep.to_dict())
        if not rep.transitive:
            res.fail(None, n=n, orbit_sizes=rep.orbit_sizes)
    res.details = {"reports": rows}
    return res


def suite_chromatic(n_max: int = 6) -> SuiteResult:
    """Within a switching class: chi(H) <= 2 chi(G), and chi(H) >= 2 whenever H has an edge.

    Switching classes from one vertex-switch BFS have size 2**(n-1); the
    bound is checked as max chi <= 2 * min chi per class, which is
    equivalent to checking every ordered pair.
    """
    _cap("chromatic", n_max, 7)
    res = SuiteResult("chromatic")
    edgeless_members = 0
    for n in range(1, n_max + 1):
        report = orbit_partition(n, "switch") if n <= 5 else None
        classes = report.orbits if report else _switch_classes(n)
        for members in classes:
            chis = {}
            for g6 in members:
                g = graph6_decode(g6)
                chis[g6] = (chromatic_number(g), g.num_edges)
            res.checked += len(members)
            lo = min(c for c, _ in chis.values())
            hi = max(c for c, _ in chis.values())
            if hi > 2 * lo:
                res.fail(None, class_min=lo, class_max=hi, member=members[0])
            for g6, (c, m) in chis.items():
                if m == 0:
                    edgeless_members += 1
                elif c < 2:
                    res.fail(None, member=g6, chi=c)
    res.details = {"edgeless_members_reported": edgeless_members}
    return res


def _switch_classes(n: int) -> list[list[str]]:
    total = 1 << (n * (n - 1) // 2)
    seen = bytearray(total)
    classes = []
    for mask in range(total):
        if seen[mask]:
            continue
        g = Graph.from_edge_mask(n, mask)
        members = []
        for s in range(1 << (n - 1)):
            h = g
            for v in range(n - 1):
                if s >> v & 1:
                    h = switch(h, v + 1)
            seen[h.edge_mask()] = 1
            members.append(graph6_encode(h))
        classes.append(sorted(members))
    return classes


def suite_line_graphs(n_max: int = 10, labeled_max: int = 7) -> SuiteResult:
    """Line graphs of trees have nullity 0 or 1, and are bipartite iff the tree is a path."""
    res = SuiteResult("line-graphs")
    for n in range(2, n_max + 1):
        trees = all_labeled_trees(n) if n <= labeled_max else tree_shapes(n)
        for t in trees:
            res.checked += 1
            lt = line_graph(t)
            null = lt.n - rank_int(lt.adjacency())
            if null not in (0, 1):
                res.fail(t, nullity=null)
            is_path = max(t.degree(v) for v in range(1, n + 1)) <= 2
            if (two_coloring(lt) is not None) != is_path:
                res.fail(t, reason="bipartite line graph vs path mismatch")
    res.details = {"labeled_up_to": labeled_max, "shapes_above": labeled_max}
    return res


def suite_line_rank(samples: int = 10_000, n_max: int = 8, seed: int = 0) -> SuiteResult:
    """rank L(G) >= n - 2 for random connected graphs."""
    res = SuiteResult("line-rank")
    rng = np.random.default_rng(seed)
    while res.checked < samples:
        n = int(rng.integers(2, n_max + 1))
        g = Graph.from_edge_mask(n, int(rng.integers(0, 1 << (n * (n - 1) // 2))))
        if len(components(g)) != 1:
            continue
        res.checked += 1
        lt = line_graph(g)
        if rank_int(lt.adjacency()) < n - 2:
            res.fail(g, rank=rank_int(lt.adjacency()))
    return res


def _subdivide(g: Graph, edge: tuple[int, int], extra: int) -> tuple[Graph, list[int]]:
    """Replace edge {a, b} by a path through ``extra`` new vertices; returns the path."""
    a, b = edge
    n = g.n
    rows = list(g.rows) + [0] * extra
    rows[a - 1] &= ~(1 << (b - 1))
    rows[b - 1] &= ~(1 << (a - 1))
    chain = [a - 1] + list(range(n, n + extra)) + [b - 1]
    for u, v in zip(chain, chain[1:]):
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n + extra, tuple(rows)), [v + 1 for v in chain]


def suite_nullity_ops(n_max: int = 5) -> SuiteResult:
    """Pendant-pair deletion always preserves nullity; path replacement per variant.

    Path replacement is exercised by subdividing an edge of every graph on
    at most ``n_max`` vertices and replacing the new path; only the default
    variant is a pass/fail condition, the other is tallied.
    """
    res = SuiteResult("nullity-ops")
    tallies = {v: {"checked": 0, "preserved": 0} for v in fam.PATH_VARIANTS}
    for n in range(1, n_max + 1):
        for g in all_graphs(n):
            null = fam.nullity_of(g)
            for v in range(1, n + 1):
                if g.degree(v) == 1:
                    res.checked += 1
                    if fam.nullity_of(fam.pendant_pair_delete(g, v)) != null:
                        res.fail(g, op="pendant", leaf=v)
            for edge in g.edges():
                for variant, length in fam.PATH_VARIANTS.items():
                    big, path = _subdivide(g, edge, length - 2)
                    back = fam.path_replace(big, path, variant)
                    ok = fam.nullity_of(big) == fam.nullity_of(back)
                    tallies[variant]["checked"] += 1
                    tallies[variant]["preserved"] += ok
                    if variant == fam.DEFAULT_PATH_VARIANT:
                        res.checked += 1
                        if not ok:
                            res.fail(big, op="path", variant=variant, path=path)
    res.details = {"path_variants": tallies, "default": fam.DEFAULT_PATH_VARIANT}
    return res


def suite_singular_fraction(n_values: list[int], samples: int = 1_000_000, seed: int = 0, workers: int | None = None) -> SuiteResult:
    """Exact fractions for n <= 4 (cross-checked by per-matrix Bareiss for n <= 3), Monte Carlo above."""
    res = SuiteResult("singular-fraction")
    rows = []
    for n in n_values:
        if n <= fam.MAX_EXACT_SINGULAR_N:
            rep = fam.singular_fraction(n, workers=workers)
            if n <= 3:
                count = 0
                for idx in range(1 << (n * n)):
                    m = [[idx >> (i * n + j) & 1 for j in range(n)] for i in range(n)]
                    count += rank_int(m) < n
                res.checked += 1
                if Fraction(count, 1 << (n * n)) != rep.optimum:
                    res.fail(None, n=n, batch=str(rep.optimum), scalar=f"{count}/{1 << (n * n)}")
        else:
            rep = fam.singular_fraction(n, samples=samples, seed=seed, workers=workers)
        rows.append(rep.to_dict())
    res.details = {"reports": rows}
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "stabilizer": suite_stabilizer,
    "prop1": suite_prop1,
    "prop2-minedges": suite_min_edges,
    "prop-trees": suite_trees,
    "prop-unicyclic": suite_unicyclic,
    "jaeger": suite_jaeger,
    "tk": suite_tk,
    "lc-unitary": suite_lc_unitary,
    "involutions": suite_involutions,
    "seidel": suite_seidel,
    "transitivity": suite_transitivity,
    "chromatic": suite_chromatic,
    "line-graphs": suite_line_graphs,
    "nullity-ops": suite_nullity_ops,
    "singular-fraction": suite_singular_fraction,
}
