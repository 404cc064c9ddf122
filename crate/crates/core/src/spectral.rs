//! Spectral moments of the adjacency matrix, exact closed-walk counts, and
//! exact extreme eigenvalues.
//!
//! The k-th spectral moment is the average k-th power of the adjacency
//! eigenvalues, which equals the number of closed k-walks divided by the
//! node count. Moments up to order five are determined by the structural
//! census; the walk counter recomputes the same quantities by sparse
//! matrix-vector products and serves as an independent integer oracle.

use nalgebra::{DMatrix, SymmetricEigen};
use thiserror::Error;

use crate::census::StructuralCensus;
use crate::graph::Graph;

/// Highest moment order available from the census.
pub const MAX_MOMENT_ORDER: usize = 5;

#[derive(Debug, Error)]
pub enum SpectralError {
    #[error("spectral moments are undefined for a graph with no nodes")]
    UndefinedMoments,
    #[error("closed-walk counts supported up to length {MAX_MOMENT_ORDER}, requested {0}")]
    UnsupportedWalkLength(usize),
    #[error("graph has no nodes")]
    EmptyGraph,
    #[error("spectral ratios are undefined for an edgeless graph")]
    EdgelessGraph,
    #[error("not a valid moment sequence: {0}")]
    InvalidMoments(String),
}

/// Per-node structural aggregates as real numbers. This is the quantity
/// actually needed to form moments, and it admits fractional values, which
/// finite-difference perturbation of a census requires.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AggregateRates {
    pub edges: f64,
    pub triangles: f64,
    pub quadrangles: f64,
    pub pentagons: f64,
    pub degree_square_sum: f64,
    pub degree_triangle_sum: f64,
}

impl AggregateRates {
    pub fn from_census(c: &StructuralCensus) -> AggregateRates {
        let n = c.node_count as f64;
        AggregateRates {
            edges: c.edge_count as f64 / n,
            triangles: c.triangles as f64 / n,
            quadrangles: c.quadrangles as f64 / n,
            pentagons: c.pentagons as f64 / n,
            degree_square_sum: c.degree_square_sum as f64 / n,
            degree_triangle_sum: c.degree_triangle_sum as f64 / n,
        }
    }
}

/// Spectral moments `m_0 = 1, m_1, ..., m_5` of an adjacency matrix.
///
/// `m_1` is always zero (zero diagonal). When the sequence was derived from
/// an integer census the exact closed-walk numerators `n * m_k` are kept
/// alongside the floating-point values.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentSequence {
    node_count: usize,
    values: [f64; 6],
    walk_numerators: Option<[u64; 6]>,
}

impl MomentSequence {
    /// Moments from a structural census.
    ///
    /// `n m_2 = 2e`, `n m_3 = 6 Δ`, `n m_4 = 8Q + 2W2 - 2e`, and
    /// `n m_5 = 10Π + 10 C_dt - 30Δ`, where `W2` is the squared-degree sum
    /// and `C_dt` the degree-triangle sum. Each coefficient is the number of
    /// closed walks a substructure contributes; the walk-count tests pin all
    /// of them down, including the `-2e` term in the fourth moment.
    pub fn from_census(c: &StructuralCensus) -> Result<MomentSequence, SpectralError> {
        if c.node_count == 0 {
            return Err(SpectralError::UndefinedMoments);
        }
        let n = c.node_count as u64;
        let numerators = [
            n,
            0,
            2 * c.edge_count,
            6 * c.triangles,
            8 * c.quadrangles + 2 * c.degree_square_sum - 2 * c.edge_count,
            10 * c.pentagons + 10 * c.degree_triangle_sum - 30 * c.triangles,
        ];
        let nf = c.node_count as f64;
        let mut values = [0.0; 6];
        for (v, &num) in values.iter_mut().zip(&numerators) {
            *v = num as f64 / nf;
        }
        values[0] = 1.0;
        Ok(MomentSequence { node_count: c.node_count, values, walk_numerators: Some(numerators) })
    }

    /// Moments from per-node aggregate rates, validated against the basic
    /// moment inequalities. This covers published aggregate tables and
    /// perturbed censuses, where the counts are no longer integers.
    pub fn from_rates(node_count: usize, rates: &AggregateRates) -> Result<MomentSequence, SpectralError> {
        if node_count == 0 {
            return Err(SpectralError::UndefinedMoments);
        }
        let m2 = 2.0 * rates.edges;
        let m3 = 6.0 * rates.triangles;
        let m4 = 8.0 * rates.quadrangles + 2.0 * rates.degree_square_sum - 2.0 * rates.edges;
        let m5 = 10.0 * rates.pentagons + 10.0 * rates.degree_triangle_sum - 30.0 * rates.triangles;

        if m2.is_nan() || m2 < 0.0 {
            return Err(SpectralError::InvalidMoments(format!("m2 = {m2} is negative")));
        }
        let slack = 1e-9 * f64::max(1.0, m2 * m2);
        if m4 + slack < m2 * m2 {
            return Err(SpectralError::InvalidMoments(format!(
                "m4 = {m4} below m2^2 = {}",
                m2 * m2
            )));
        }
        if m2 == 0.0 && (m3 != 0.0 || m4 != 0.0 || m5 != 0.0) {
            return Err(SpectralError::InvalidMoments(
                "m2 = 0 forces all higher moments to vanish".into(),
            ));
        }
        Ok(MomentSequence {
            node_count,
            values: [1.0, 0.0, m2, m3, m4, m5],
            walk_numerators: None,
        })
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    /// `m_k` for `k <= 5`.
    pub fn moment(&self, k: usize) -> f64 {
        self.values[k]
    }

    /// All moments `[m_0, ..., m_5]`.
    pub fn values(&self) -> &[f64; 6] {
        &self.values
    }

    /// Exact closed-walk numerators `n * m_k`, present when the sequence was
    /// built from an integer census.
    pub fn walk_numerators(&self) -> Option<&[u64; 6]> {
        self.walk_numerators.as_ref()
    }
}

/// Exact numbers of closed walks of length `1..=k_max`, computed by
/// repeated sparse adjacency application to each coordinate basis vector
/// and summed over diagonal entries. Pure integer arithmetic; basis
/// directions run in parallel and the integer sums make the result
/// independent of worker count.
pub fn closed_walk_counts(g: &Graph, k_max: usize) -> Result<Vec<u64>, SpectralError> {
    use rayon::prelude::*;
    if k_max > MAX_MOMENT_ORDER {
        return Err(SpectralError::UnsupportedWalkLength(k_max));
    }
    let n = g.node_count();
    let totals = (0..n)
        .into_par_iter()
        .fold(
            // each worker carries its totals plus reusable scratch vectors
            || (vec![0u64; k_max], vec![0u64; n], vec![0u64; n]),
            |(mut acc, mut current, mut next), i| {
                current.iter_mut().for_each(|x| *x = 0);
                current[i] = 1;
                for slot in acc.iter_mut() {
                    for (u, entry) in next.iter_mut().enumerate() {
                        *entry = g.neighbors(u as u32).iter().map(|&v| current[v as usize]).sum();
                    }
                    std::mem::swap(&mut current, &mut next);
                    *slot += current[i];
                }
                (acc, current, next)
            },
        )
        .map(|(acc, _, _)| acc)
        .reduce(
            || vec![0u64; k_max],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(&b) {
                    *x += y;
                }
                a
            },
        );
    Ok(totals)
}

/// Smallest and largest adjacency eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumExtremes {
    pub lambda_min: f64,
    pub lambda_max: f64,
}

/// Exact extreme eigenvalues via dense symmetric eigendecomposition.
/// Intended for desk scale (up to a few thousand nodes).
pub fn extreme_eigenvalues(g: &Graph) -> Result<SpectrumExtremes, SpectralError> {
    let n = g.node_count();
    if n == 0 {
        return Err(SpectralError::EmptyGraph);
    }
    let mut a = DMatrix::<f64>::zeros(n, n);
    for (u, v) in g.edges() {
        a[(u as usize, v as usize)] = 1.0;
        a[(v as usize, u as usize)] = 1.0;
    }
    let eigen = SymmetricEigen::new(a);
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for &ev in eigen.eigenvalues.iter() {
        lo = lo.min(ev);
        hi = hi.max(ev);
    }
    Ok(SpectrumExtremes { lambda_min: lo, lambda_max: hi })
}

/// The two uniqueness thresholds side by side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralComparison {
    /// `-1/λ_min`, the sharper threshold.
    pub neg_inv_lambda_min: f64,
    /// `1/ρ`, the spectral-radius threshold.
    pub inv_rho: f64,
    /// Whether the inequality `-1/λ_min > 1/ρ` is certified strict, i.e. no
    /// connected component is bipartite. When a bipartite component exists
    /// the gap may still be positive numerically, but strictness is not
    /// claimed.
    pub strict: bool,
}

/// Compares `-1/λ_min` with `1/ρ`; requires at least one edge so both
/// ratios are defined.
pub fn spectral_comparison(g: &Graph) -> Result<SpectralComparison, SpectralError> {
    if g.edge_count() == 0 {
        return Err(SpectralError::EdgelessGraph);
    }
    let extremes = extreme_eigenvalues(g)?;
    Ok(SpectralComparison {
        neg_inv_lambda_min: -1.0 / extremes.lambda_min,
        inv_rho: 1.0 / extremes.lambda_max,
        strict: !g.has_bipartite_component(),
    })
}
