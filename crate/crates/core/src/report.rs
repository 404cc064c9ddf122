//! JSON-serializable report shapes for the command-line front end and the
//! examples. Non-finite thresholds serialize as `null`.

use serde::Serialize;

use crate::bounds::{BoundMethod, SupportBounds};
use crate::census::StructuralCensus;
use crate::game::{EnumerationOutcome, UniquenessCertificate, UniquenessStatus};
use crate::spectral::{MomentSequence, SpectrumExtremes};

/// Flat census report; per-node arrays are included on request.
#[derive(Debug, Serialize)]
pub struct CensusReport {
    pub n: usize,
    pub e: u64,
    pub triangles: u64,
    pub quadrangles: u64,
    pub pentagons: u64,
    pub degree_square_sum: u64,
    pub degree_triangle_sum: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub per_node: Option<PerNodeCounts>,
}

#[derive(Debug, Serialize)]
pub struct PerNodeCounts {
    pub degrees: Vec<u64>,
    pub triangles: Vec<u64>,
    pub quadrangles: Vec<u64>,
    pub pentagons: Vec<u64>,
}

impl CensusReport {
    pub fn new(census: &StructuralCensus, per_node: bool) -> Self {
        CensusReport {
            n: census.node_count,
            e: census.edge_count,
            triangles: census.triangles,
            quadrangles: census.quadrangles,
            pentagons: census.pentagons,
            degree_square_sum: census.degree_square_sum,
            degree_triangle_sum: census.degree_triangle_sum,
            per_node: per_node.then(|| PerNodeCounts {
                degrees: census.degrees.clone(),
                triangles: census.triangles_per_node.clone(),
                quadrangles: census.quadrangles_per_node.clone(),
                pentagons: census.pentagons_per_node.clone(),
            }),
        }
    }
}

/// Moment report: the five moments, the exact extreme eigenvalues, and the
/// closed-walk counts when the exact cross-check ran.
#[derive(Debug, Serialize)]
pub struct MomentReport {
    pub n: usize,
    pub m1: f64,
    pub m2: f64,
    pub m3: f64,
    pub m4: f64,
    pub m5: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub walk_counts: Option<Vec<u64>>,
    pub lambda_min: f64,
    pub lambda_max: f64,
}

impl MomentReport {
    pub fn new(
        moments: &MomentSequence,
        extremes: &SpectrumExtremes,
        walk_counts: Option<Vec<u64>>,
    ) -> Self {
        MomentReport {
            n: moments.node_count(),
            m1: moments.moment(1),
            m2: moments.moment(2),
            m3: moments.moment(3),
            m4: moments.moment(4),
            m5: moments.moment(5),
            walk_counts,
            lambda_min: extremes.lambda_min,
            lambda_max: extremes.lambda_max,
        }
    }
}

/// Support-bounds report; bracket and iteration count are present for
/// bisection runs only.
#[derive(Debug, Serialize)]
pub struct BoundsReport {
    pub s: usize,
    pub alpha: f64,
    pub beta: f64,
    pub method: BoundMethod,
    pub degenerate: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bracket: Option<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub iterations: Option<u32>,
}

impl From<&SupportBounds> for BoundsReport {
    fn from(b: &SupportBounds) -> Self {
        BoundsReport {
            s: b.order,
            alpha: b.alpha,
            beta: b.beta,
            method: b.method,
            degenerate: b.degenerate,
            bracket: b.bracket.map(|(lo, hi)| [lo, hi]),
            iterations: b.iterations,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct EquilibriumEntry {
    pub x: Vec<f64>,
    pub active_set: Vec<usize>,
    pub stable: bool,
    pub boundary: bool,
    pub kkt_max: f64,
}

/// Full equilibrium-set report for one game instance.
#[derive(Debug, Serialize)]
pub struct EquilibriaReport {
    pub delta: f64,
    pub status: UniquenessStatus,
    pub threshold_exact: f64,
    pub threshold_estimate: f64,
    pub delta_singular_count: usize,
    pub ambiguous_rejections: usize,
    pub equilibria: Vec<EquilibriumEntry>,
}

impl EquilibriaReport {
    pub fn new(delta: f64, certificate: &UniquenessCertificate, outcome: &EnumerationOutcome) -> Self {
        EquilibriaReport {
            delta,
            status: certificate.status,
            threshold_exact: certificate.threshold_exact,
            threshold_estimate: certificate.threshold_estimate,
            delta_singular_count: outcome.singular_subsets.len(),
            ambiguous_rejections: outcome.ambiguous_rejections,
            equilibria: outcome
                .equilibria
                .iter()
                .map(|record| EquilibriumEntry {
                    x: record.profile.actions().to_vec(),
                    active_set: record.active_set.clone(),
                    stable: record.stable,
                    boundary: record.boundary,
                    kkt_max: record.kkt_max,
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::census;
    use crate::generate;

    #[test]
    fn census_report_shape() {
        let c = census(&generate::complete(4));
        let without = serde_json::to_value(CensusReport::new(&c, false)).unwrap();
        assert_eq!(without["n"], 4);
        assert_eq!(without["triangles"], 4);
        assert!(without.get("per_node").is_none());
        let with = serde_json::to_value(CensusReport::new(&c, true)).unwrap();
        assert_eq!(with["per_node"]["degrees"][0], 3);
    }

    #[test]
    fn method_names_are_stable() {
        assert_eq!(serde_json::to_string(&BoundMethod::AnalyticCubic).unwrap(), "\"analytic-cubic\"");
        assert_eq!(serde_json::to_string(&BoundMethod::PsdBisection).unwrap(), "\"psd-bisection\"");
    }
}
