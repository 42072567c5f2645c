//! Metric invariants of digraphs (diameter, radius and their "quasi"
//! variants under the symmetrised distance), criticality under arc
//! addition, the extremal and critical families, their counting formulas,
//! and an exhaustive oracle over small labeled digraphs.

pub mod condense;
pub mod criticality;
pub mod digraph;
pub mod distance;
pub mod families;
pub mod formulas;
pub mod metrics;
pub mod oracle;

pub use condense::{condensation, structure_flags, Condensation, StructureFlags};
pub use digraph::{Arc, Digraph, GraphError};
pub use distance::Distance;
pub use metrics::{all_pairs_distances, centers_and_quasicenters, metric_profile, MetricProfile};
pub use criticality::{
    arc_effect, is_critical, is_maximal, missing_arcs, ArcEffect, CriticalityError, CriticalityVerdict,
    Invariant, MaxArcsSource,
};
pub use families::{
    blow_up, build_family, maximal_quasidiameter_digraph, maximal_radius_digraph, recognize_hertz_family,
    FamilyError, FamilySpec, HertzClass,
};
pub use formulas::{
    binomial_ext, bound_closed_form, center_path_bound, count_closed_form, mu_dm3_term_sum, stirling2,
    BoundFormula, CountFormula, DomainError,
};
pub use metrics::DistanceMatrix;
pub use oracle::{
    canonical_form, count_labeled, enumerate_digraphs, iso_class_count, max_arcs_where, run_scenario,
    scenario_names, Atom, CanonicalForm, OracleError, Predicate, ScanConfig, VerificationReport,
};
