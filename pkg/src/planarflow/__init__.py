"""Min-cost flow on outerplanar networks through planar duality.

The pipeline turns a flow problem into a circulation, prices the
circulation with face potentials found from a transshipment on the faces,
and solves that transshipment with a divide-and-conquer fat-tree solver
built on dynamic trees.
"""
from .duality import (
    CirculationInstance,
    DualTransshipment,
    Pullback,
    build_lp_dual,
    face_costs,
    flow_to_circulation,
    potential_objective,
    pullback_flow,
    recover_circulation,
    recover_potentials,
)
from .embedded import (
    DualGraph,
    EmbeddedGraph,
    FaceStructure,
    biconnected_components,
    build_embedding,
    center_vertex,
    check_outerplanar,
    contract_arc,
    geometric_dual,
    trace_faces,
)
from .fattree import FatTreeInstance, balance_excess, cap_uncapacitated
from .fattree import solve as solve_fat_tree
from .forest import CapacityForest, CostForest
from .network import (
    INF,
    INFEASIBLE,
    OPTIMAL,
    UNBOUNDED,
    FlowNetwork,
    Outcome,
    certify_optimal,
    check_feasible,
    flow_cost,
    instance_stats,
    residual,
)
from .oracle import solve_reference, solve_tiny_exhaustive
from .solver import decompose_and_solve_outerplanar

__all__ = [
    "CapacityForest", "CirculationInstance", "CostForest", "DualGraph", "DualTransshipment",
    "EmbeddedGraph", "FaceStructure", "FatTreeInstance", "FlowNetwork", "INF", "INFEASIBLE",
    "OPTIMAL", "Outcome", "Pullback", "UNBOUNDED", "balance_excess", "biconnected_components",
    "build_embedding", "build_lp_dual", "cap_uncapacitated", "center_vertex",
    "certify_optimal", "check_feasible", "check_outerplanar", "contract_arc",
    "decompose_and_solve_outerplanar", "face_costs", "flow_cost", "flow_to_circulation",
    "geometric_dual", "instance_stats", "potential_objective", "pullback_flow",
    "recover_circulation", "recover_potentials", "residual", "solve_fat_tree",
    "solve_reference", "solve_tiny_exhaustive", "trace_faces",
]
