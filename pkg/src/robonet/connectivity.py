"""Unit-capacity flow machinery: controllability degrees and cut witnesses.

The link controllability degree (``lc``) is the size of the smallest edge
set whose removal breaks controllability; the agent controllability
degree (``ac``) is the analogue for follower removals.  Both reduce to
minimum cuts: the degree equals the minimum over followers of the number
of edge-disjoint (respectively internally vertex-disjoint) paths from the
contracted root-set to that follower.

Cuts are recovered from residual reachability after a maximum flow.  The
source-side residual set is the same for every maximum flow, so the
returned cuts are canonical and all results are deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass

from .digraph import Digraph, Edge, removal_breaks_controllability
from .errors import (
    IndexOutOfRangeError,
    TargetIsRootError,
    UncontrollableError,
)


@dataclass(frozen=True)
class FlowResult:
    """Value and canonical minimum cut of one root-to-target flow.

    ``value == len(cut_edges)`` in edge mode and ``value ==
    len(cut_vertices)`` in vertex mode (max-flow/min-cut duality).
    """

    value: int
    cut_edges: frozenset[Edge]
    cut_vertices: frozenset[int]


@dataclass(frozen=True)
class WitnessSet:
    """A minimal breaking set together with its replayed effect.

    ``unreachable`` lists the followers that lose root access when the
    witness is removed.  It is empty only for the degenerate witness that
    deletes every follower (possible when all followers are directly
    root-connected), where the break is by convention.
    """

    kind: str  # "link" | "agent" | "mixed"
    edges: frozenset[Edge]
    vertices: frozenset[int]
    unreachable: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.edges) + len(self.vertices)


class _UnitFlow:
    """Dinic's algorithm over an explicit arc list.

    Arcs are stored as parallel lists; arc ``i ^ 1`` is the reverse of
    arc ``i``.  Insertion order is fixed by the callers, which makes the
    residual structure (and hence every derived cut) deterministic.
    """

    def __init__(self, node_count: int) -> None:
        self.node_count = node_count
        self.adj: list[list[int]] = [[] for _ in range(node_count)]
        self.to: list[int] = []
        self.cap: list[int] = []
        self.tag: list[object] = []

    def add_arc(self, tail: int, head: int, cap: int, tag: object = None) -> None:
        self.adj[tail].append(len(self.to))
        self.to.append(head)
        self.cap.append(cap)
        self.tag.append(tag)
        self.adj[head].append(len(self.to))
        self.to.append(tail)
        self.cap.append(0)
        self.tag.append(None)

    def max_flow(self, source: int, sink: int) -> int:
        total = 0
        while True:
            level = self._levels(source)
            if level[sink] < 0:
                return total
            it = [0] * self.node_count
            while True:
                pushed = self._augment(source, sink, level, it)
                if not pushed:
                    break
                total += pushed

    def _levels(self, source: int) -> list[int]:
        level = [-1] * self.node_count
        level[source] = 0
        queue = [source]
        for v in queue:
            for arc in self.adj[v]:
                if self.cap[arc] > 0 and level[self.to[arc]] < 0:
                    level[self.to[arc]] = level[v] + 1
                    queue.append(self.to[arc])
        return level

    def _augment(self, v: int, sink: int, level: list[int], it: list[int]) -> int:
        if v == sink:
            return 1
        while it[v] < len(self.adj[v]):
            arc = self.adj[v][it[v]]
            head = self.to[arc]
            if self.cap[arc] > 0 and level[head] == level[v] + 1:
                if self._augment(head, sink, level, it):
                    self.cap[arc] -= 1
                    self.cap[arc ^ 1] += 1
                    return 1
            it[v] += 1
        return 0

    def source_side(self, source: int) -> set[int]:
        """Nodes reachable from the source in the final residual graph."""
        seen = {source}
        stack = [source]
        while stack:
            v = stack.pop()
            for arc in self.adj[v]:
                head = self.to[arc]
                if self.cap[arc] > 0 and head not in seen:
                    seen.add(head)
                    stack.append(head)
        return seen

    def crossing_tags(self, side: set[int]) -> list[object]:
        tags = []
        for v in side:
            for arc in self.adj[v]:
                if arc % 2 == 0 and self.cap[arc] == 0 and self.to[arc] not in side:
                    if self.tag[arc] is not None:
                        tags.append(self.tag[arc])
        return tags


def _check_target(g: Digraph, target: int) -> None:
    if target not in g.vertices:
        raise IndexOutOfRangeError(f"unknown vertex {target}")
    if target in g.root_set:
        raise TargetIsRootError(f"vertex {target} is a root")


def max_edge_disjoint(g: Digraph, target: int) -> FlowResult:
    """Maximum number of edge-disjoint root-to-target paths.

    The root-set is contracted to a single super-source.  ``cut_edges``
    is the canonical minimum edge cut induced by the residual source
    side.
    """
    _check_target(g, target)
    ids = {v: i + 1 for i, v in enumerate(sorted(g.vertices - g.root_set))}
    net = _UnitFlow(len(ids) + 1)
    for edge in g.sorted_edges:
        tail, head = edge
        tail_node = 0 if tail in g.root_set else ids[tail]
        net.add_arc(tail_node, ids[head], 1, tag=edge)
    value = net.max_flow(0, ids[target])
    side = net.source_side(0)
    cut = frozenset(net.crossing_tags(side))
    assert len(cut) == value, "max-flow/min-cut duality violated"
    return FlowResult(value=value, cut_edges=cut, cut_vertices=frozenset())


def max_vertex_disjoint(g: Digraph, target: int) -> FlowResult:
    """Minimum number of intermediate vertices separating the target.

    Computed by node splitting: every non-root vertex other than the
    target becomes a unit-capacity gadget, edges get non-binding
    capacities, and the roots are contracted to a super-source.  When
    some edge connects a root directly to the target no follower set can
    separate it; the value is then reported as ``|V| - |R|`` with the
    full follower set as the only consistent witness.
    """
    _check_target(g, target)
    followers = g.followers
    if any(tail in g.root_set for tail, head in g.edges if head == target):
        cap = len(g.vertices) - len(g.roots)
        return FlowResult(value=cap, cut_edges=frozenset(), cut_vertices=frozenset(followers))

    middle = sorted(g.vertices - g.root_set - {target})
    node_in = {v: 1 + 2 * i for i, v in enumerate(middle)}
    node_out = {v: 2 + 2 * i for i, v in enumerate(middle)}
    sink = 1 + 2 * len(middle)
    net = _UnitFlow(sink + 1)
    big = g.n + len(g.edges) + 1
    for v in middle:
        net.add_arc(node_in[v], node_out[v], 1, tag=v)
    for tail, head in g.sorted_edges:
        if tail == target:
            continue
        tail_node = 0 if tail in g.root_set else node_out[tail]
        head_node = sink if head == target else node_in[head]
        net.add_arc(tail_node, head_node, big)
    value = net.max_flow(0, sink)
    side = net.source_side(0)
    cut = frozenset(net.crossing_tags(side))
    assert len(cut) == value, "max-flow/min-cut duality violated"
    return FlowResult(value=value, cut_edges=frozenset(), cut_vertices=cut)


def link_controllability(g: Digraph) -> int:
    """Largest ``p`` such that any ``p - 1`` edge removals keep the graph controllable.

    Zero for an uncontrollable graph.  A graph without followers also
    reports zero: no removal can break it, so the degree is vacuous
    there (the value is documented rather than meaningful).
    """
    if not g.followers or not g.is_controllable():
        return 0
    return min(max_edge_disjoint(g, v).value for v in g.followers)


def agent_controllability_vertex(g: Digraph, v: int) -> int:
    """Minimum number of follower removals that disconnect ``v``, capped at ``|V| - |R|``."""
    return max_vertex_disjoint(g, v).value


def agent_controllability(g: Digraph) -> int:
    """Largest ``q`` such that any ``q - 1`` follower removals keep the graph controllable."""
    if not g.followers or not g.is_controllable():
        return 0
    return min(agent_controllability_vertex(g, v) for v in g.followers)


# Short initialisms for the two degrees, matching the report vocabulary.
lc = link_controllability
ac = agent_controllability


def _replay(g: Digraph, edges: frozenset[Edge], vertices: frozenset[int]) -> tuple[int, ...]:
    """Verify a witness breaks the graph minimally; return the stranded followers."""
    assert removal_breaks_controllability(g, edges, vertices), "witness does not break the graph"
    for edge in sorted(edges):
        assert not removal_breaks_controllability(g, edges - {edge}, vertices), (
            f"witness is not minimal: dropping {edge} still breaks"
        )
    for v in sorted(vertices):
        assert not removal_breaks_controllability(g, edges, vertices - {v}), (
            f"witness is not minimal: dropping {v} still breaks"
        )
    return g.remove_edges(edges).remove_vertices(vertices).unreachable_followers()


def min_link_cut_witness(g: Digraph) -> WitnessSet:
    """One minimal breaking edge set of size ``lc(g)``.

    Ties across followers are broken toward the smallest follower id;
    the cut itself is the canonical residual cut of that follower.
    """
    if not g.followers or not g.is_controllable():
        raise UncontrollableError("degrees are zero; every link is already critical")
    flows = {v: max_edge_disjoint(g, v) for v in g.followers}
    best = min(flows, key=lambda v: (flows[v].value, v))
    cut = flows[best].cut_edges
    unreachable = _replay(g, cut, frozenset())
    return WitnessSet(kind="link", edges=cut, vertices=frozenset(), unreachable=unreachable)


def min_agent_cut_witness(g: Digraph) -> WitnessSet:
    """One minimal breaking follower set of size ``ac(g)``.

    When every follower is directly root-connected the only breaking set
    is the full follower set, which is returned with an empty stranded
    list (the break is by convention, see
    :func:`~robonet.digraph.removal_breaks_controllability`).
    """
    if not g.followers or not g.is_controllable():
        raise UncontrollableError("degrees are zero; every agent is already critical")
    cap = len(g.vertices) - len(g.roots)
    flows = {v: max_vertex_disjoint(g, v) for v in g.followers}
    best = min(flows, key=lambda v: (flows[v].value, v))
    if flows[best].value >= cap:
        cut = frozenset(g.followers)
    else:
        cut = flows[best].cut_vertices
    unreachable = _replay(g, frozenset(), cut)
    return WitnessSet(kind="agent", edges=frozenset(), vertices=cut, unreachable=unreachable)
