"""Robustness analysis of rooted information-flow digraphs.

The package quantifies how many link, agent, or simultaneous link+agent
failures a leader-follower network can absorb while staying structurally
controllable, identifies the critical elements, and classifies the graph
by its failure sensitivity.  A brute-force oracle ships alongside the
fast path so every number can be cross-checked on small instances.
"""
from .connectivity import (
    FlowResult,
    WitnessSet,
    agent_controllability,
    agent_controllability_vertex,
    link_controllability,
    max_edge_disjoint,
    max_vertex_disjoint,
    min_agent_cut_witness,
    min_link_cut_witness,
)
from .criticality import (
    AgentIndexRecord,
    EdgeIndexRecord,
    agent_controllability_index,
    agent_criticality_index,
    agent_link_indices,
    enumerate_critical_sets,
    is_agent_critical,
    is_link_critical,
    link_controllability_index,
    link_criticality_index,
    rank_agents,
)
from .digraph import (
    Cut,
    Digraph,
    Edge,
    EdgeDuplicate,
    edge_duplicate,
    new_digraph,
    removal_breaks_controllability,
)
from .joint import (
    BoundCheck,
    Classification,
    JointRegion,
    agent_set_from_cut,
    agent_substitution_witness,
    check_bounds,
    classify,
    critical_agent_link_witness,
    is_joint_rs_controllable,
    joint_controllability,
    joint_controllability_via_duplicate,
    joint_region,
    link_set_from_agent_set,
)

__all__ = [
    "AgentIndexRecord",
    "BoundCheck",
    "Classification",
    "Cut",
    "Digraph",
    "Edge",
    "EdgeDuplicate",
    "EdgeIndexRecord",
    "FlowResult",
    "JointRegion",
    "WitnessSet",
    "agent_controllability",
    "agent_controllability_index",
    "agent_controllability_vertex",
    "agent_criticality_index",
    "agent_link_indices",
    "agent_set_from_cut",
    "agent_substitution_witness",
    "check_bounds",
    "classify",
    "critical_agent_link_witness",
    "edge_duplicate",
    "enumerate_critical_sets",
    "is_agent_critical",
    "is_joint_rs_controllable",
    "is_link_critical",
    "joint_controllability",
    "joint_controllability_via_duplicate",
    "joint_region",
    "link_controllability",
    "link_controllability_index",
    "link_criticality_index",
    "link_set_from_agent_set",
    "max_edge_disjoint",
    "max_vertex_disjoint",
    "min_agent_cut_witness",
    "min_link_cut_witness",
    "new_digraph",
    "rank_agents",
    "removal_breaks_controllability",
]
