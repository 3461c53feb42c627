"""Brute-force reference implementations and seeded random instances.

Everything here recomputes the controllability degrees and the joint
region by literal subset enumeration, sharing nothing with the flow-based
fast path except the graph value type itself.  Reachability is redone on
raw adjacency sets.  The point is a genuinely independent cross-check:
`verify` runs both routes and any disagreement is a defect.

Enumerations are budgeted and abort with a typed error instead of
silently truncating.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .digraph import Digraph, Edge, new_digraph
from .errors import InstanceTooLargeError, UnsatisfiableError


@dataclass(frozen=True)
class OracleBudget:
    max_subset_candidates: int = 10**6
    max_vertices: int = 10
    max_edges: int = 20

    def admit(self, g: Digraph) -> None:
        if g.n > self.max_vertices:
            raise InstanceTooLargeError(
                f"{g.n} vertices exceed the oracle cap of {self.max_vertices}"
            )
        if len(g.edges) > self.max_edges:
            raise InstanceTooLargeError(
                f"{len(g.edges)} edges exceed the oracle cap of {self.max_edges}"
            )

    def admit_candidates(self, count: int) -> None:
        if count > self.max_subset_candidates:
            raise InstanceTooLargeError(
                f"{count} candidate subsets exceed the oracle budget "
                f"of {self.max_subset_candidates}"
            )


def _breaks(g: Digraph, gone_edges: frozenset[Edge], gone_vertices: frozenset[int]) -> bool:
    """Literal removal-and-search breakage test on raw sets.

    Mirrors the convention that deleting every follower counts as a
    break; otherwise some surviving follower must be unreachable.
    """
    followers = set(g.followers)
    if followers and gone_vertices >= followers:
        return True
    alive = g.vertices - gone_vertices
    adj: dict[int, list[int]] = {v: [] for v in alive}
    for tail, head in g.edges:
        if (tail, head) not in gone_edges and tail in alive and head in alive:
            adj[tail].append(head)
    seen = set(g.roots)
    stack = list(g.roots)
    while stack:
        v = stack.pop()
        for head in adj[v]:
            if head not in seen:
                seen.add(head)
                stack.append(head)
    return any(v not in seen for v in followers - gone_vertices)


def _smallest_breaking_size(g: Digraph, pool: list, budget: OracleBudget) -> int:
    """Smallest k such that some k-subset of the pool breaks the graph; -1 if none."""
    total = 0
    for k in range(len(pool) + 1):
        total += comb(len(pool), k)
        budget.admit_candidates(total)
        for combo in combinations(pool, k):
            edges = frozenset(e for kind, e in combo if kind == "edge")
            vertices = frozenset(v for kind, v in combo if kind == "agent")
            if _breaks(g, edges, vertices):
                return k
    return -1


def oracle_lc(g: Digraph, budget: OracleBudget = OracleBudget()) -> int:
    """Link controllability degree by exhaustive edge-subset search."""
    budget.admit(g)
    found = _smallest_breaking_size(g, [("edge", e) for e in g.sorted_edges], budget)
    return 0 if found < 0 else found


def oracle_ac(g: Digraph, budget: OracleBudget = OracleBudget()) -> int:
    """Agent controllability degree by exhaustive follower-subset search."""
    budget.admit(g)
    found = _smallest_breaking_size(g, [("agent", v) for v in g.followers], budget)
    return 0 if found < 0 else found


def oracle_jc(g: Digraph, budget: OracleBudget = OracleBudget()) -> int:
    """Joint controllability degree by exhaustive mixed-subset search."""
    budget.admit(g)
    pool = [("edge", e) for e in g.sorted_edges] + [("agent", v) for v in g.followers]
    found = _smallest_breaking_size(g, pool, budget)
    return 0 if found < 0 else found


def oracle_joint_rs(g: Digraph, r: int, s: int, budget: OracleBudget = OracleBudget()) -> bool:
    """Literal quantifier evaluation of joint (r, s)-controllability."""
    budget.admit(g)
    if r + s == 0:
        return not _breaks(g, frozenset(), frozenset())
    edges = g.sorted_edges
    followers = g.followers
    pairs = [
        (u, v)
        for u in range(min(r, len(edges)) + 1)
        for v in range(min(s, len(followers)) + 1)
        if u + v < r + s
    ]
    budget.admit_candidates(
        sum(comb(len(edges), u) * comb(len(followers), v) for u, v in pairs)
    )
    for u, v in pairs:
        for edge_combo in combinations(edges, u):
            for vertex_combo in combinations(followers, v):
                if _breaks(g, frozenset(edge_combo), frozenset(vertex_combo)):
                    return False
    return True


def oracle_region(
    g: Digraph, budget: OracleBudget = OracleBudget()
) -> tuple[tuple[int, int], ...]:
    """All joint pairs over the [0..lc] x [0..ac] bounding box, literally."""
    lcv = oracle_lc(g, budget)
    acv = oracle_ac(g, budget)
    members = [
        (r, s)
        for r in range(lcv + 1)
        for s in range(acv + 1)
        if oracle_joint_rs(g, r, s, budget)
    ]
    return tuple(sorted(members))


def random_digraph(n: int, edge_count: int, root_count: int, seed: int) -> Digraph:
    """Uniform random valid digraph under a fixed, documented scheme.

    Roots are vertices 1..root_count (any other choice is a relabeling).
    The candidate pool is every ordered pair that is not a self-loop and
    does not point into a root, listed lexicographically; edge_count
    distinct candidates are drawn by a partial Fisher-Yates shuffle
    driven by ``random.Random(seed).randrange``, which is stable across
    platforms and versions.
    """
    n, edge_count, root_count = int(n), int(edge_count), int(root_count)
    if n < 1 or not 1 <= root_count <= n:
        raise UnsatisfiableError(f"need 1 <= root_count <= n, got n={n} roots={root_count}")
    pool = [
        (a, b)
        for a in range(1, n + 1)
        for b in range(root_count + 1, n + 1)
        if a != b
    ]
    if edge_count > len(pool):
        raise UnsatisfiableError(
            f"{edge_count} edges requested but only {len(pool)} placements are valid"
        )
    rng = random.Random(seed)
    for i in range(edge_count):
        j = rng.randrange(i, len(pool))
        pool[i], pool[j] = pool[j], pool[i]
    return new_digraph(n, range(1, root_count + 1), sorted(pool[:edge_count]))
