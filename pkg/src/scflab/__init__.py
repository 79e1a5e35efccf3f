"""Symplectic curvature flow on left-invariant almost Kahler structures.

The package provides Lie algebras by structure constants (lie_core),
compatible pairs and the induced metric (ak_structure), Levi-Civita and
Chern curvature (curvature), the flow itself with RK4 integration and
drift monitoring (flow), closed-form reference families (catalog), and a
command line interface (cli).
"""

from scflab.lie_core import (
    LieAlgebra,
    ad,
    bracket,
    ce_betti,
    ce_d1,
    ce_d2,
    exact_primitive,
    jacobi_defect,
    nilpotency_step,
)
from scflab.ak_structure import (
    AlmostKahlerStructure,
    StructureDiagnostics,
    anti_invariant_part,
    check_structure,
    commutator_anti_part,
    metric_asymmetry,
    metric_of,
    sharp,
)
from scflab.curvature import (
    chern_connection,
    chern_ricci_adjoint,
    chern_ricci_trace,
    levi_civita,
    nijenhuis,
    norm_nijenhuis,
    norm_riemann,
    ricci,
    ricci_asymmetry,
    ricci_endomorphism,
    riemann,
)
from scflab.flow import (
    FlowDiagnostics,
    FlowState,
    IntegratorConfig,
    MetricDegenerateError,
    Trajectory,
    conserved_report,
    integrate,
    metric_rhs_flat_case,
    scf_rhs,
    static_behaviour,
    static_extinction_time,
    static_flow_predictor,
    static_rate,
    step_rk4,
)
from scflab.catalog import (
    CatalogEntry,
    N4FamilyParams,
    get_entry,
    heisenberg_sum,
    kodaira_thurston,
    list_entries,
    n4_entry,
    n4_family,
    random_n4_params,
    random_n4_structure,
    reduced_eta_rhs,
    symplectic_conjugate,
)

__all__ = [
    "LieAlgebra", "ad", "bracket", "ce_betti", "ce_d1", "ce_d2",
    "exact_primitive", "jacobi_defect", "nilpotency_step",
    "AlmostKahlerStructure", "StructureDiagnostics", "anti_invariant_part",
    "check_structure", "commutator_anti_part", "metric_asymmetry",
    "metric_of", "sharp",
    "chern_connection", "chern_ricci_adjoint", "chern_ricci_trace",
    "levi_civita", "nijenhuis", "norm_nijenhuis", "norm_riemann",
    "ricci", "ricci_asymmetry", "ricci_endomorphism", "riemann",
    "FlowDiagnostics", "FlowState", "IntegratorConfig",
    "MetricDegenerateError", "Trajectory", "conserved_report", "integrate",
    "metric_rhs_flat_case", "scf_rhs", "static_behaviour",
    "static_extinction_time", "static_flow_predictor", "static_rate",
    "step_rk4",
    "CatalogEntry", "N4FamilyParams", "get_entry", "heisenberg_sum",
    "kodaira_thurston", "list_entries", "n4_entry", "n4_family",
    "random_n4_params", "random_n4_structure", "reduced_eta_rhs",
    "symplectic_conjugate",
]
