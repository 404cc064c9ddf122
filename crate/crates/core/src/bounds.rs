//! Inner bounds on the extreme adjacency eigenvalues from truncated
//! spectral moments.
//!
//! The adjacency spectrum, viewed as a uniform atomic measure, has its
//! support hull `[λ_min, λ_max]` squeezed from inside by the order-s bounds
//! `α_s ≥ λ_min` and `β_s ≤ λ_max`. Feasibility of a shift `c` is a
//! positive-semidefiniteness condition on the localizing matrix
//! `H_s(c) = R_odd - c · R_even` built from Hankel matrices of moments.
//! Because `R_even` is itself positive semidefinite, the feasible sets are
//! rays, so each bound is a one-variable problem: solved here either by
//! bisecting the PSD test or, for s = 2, from the closed-form roots of the
//! cubic `det H_2(c) = 0`.

use nalgebra::{DMatrix, SymmetricEigen};
use thiserror::Error;

use crate::census::StructuralCensus;
use crate::cubic::{real_cubic_roots, real_quadratic_roots};
use crate::spectral::{AggregateRates, MomentSequence, SpectralError};

/// Eigenvalue slack for declaring a tiny Hankel matrix PSD, relative to its
/// Frobenius norm.
pub const PSD_TOL: f64 = 1e-10;
/// Scaled determinant threshold below which the even Hankel matrix is
/// treated as rank-deficient.
pub const DEGENERACY_TOL: f64 = 1e-12;

#[derive(Debug, Error)]
pub enum BoundsError {
    #[error("order {0} unsupported: five moments admit orders 1 and 2")]
    UnsupportedOrder(usize),
    #[error("bisection tolerance must be positive, got {0}")]
    BadTolerance(f64),
    #[error("infeasible bracket at order {order}: moment sequence is numerically corrupt")]
    InfeasibleBracket { order: usize },
    #[error("cubic for det H_2(c) has {0} real roots; expected three")]
    DegenerateCubic(usize),
    #[error("perturbation step must be nonzero and finite, got {0}")]
    BadStep(f64),
    #[error(transparent)]
    Moments(#[from] SpectralError),
}

/// The two Hankel matrices of a truncated moment sequence at a given order:
/// `even` holds `m_0..m_2s`, `odd` holds `m_1..m_2s+1`, both `(s+1)x(s+1)`
/// with entry `(i, j)` equal to `m_{i+j}` resp. `m_{i+j+1}`.
#[derive(Debug, Clone)]
pub struct HankelPair {
    pub order: usize,
    pub even: DMatrix<f64>,
    pub odd: DMatrix<f64>,
}

/// Assembles the Hankel pair for `order` in `{1, 2}`.
pub fn hankel_matrices(m: &MomentSequence, order: usize) -> Result<HankelPair, BoundsError> {
    if order == 0 || order > 2 {
        return Err(BoundsError::UnsupportedOrder(order));
    }
    let dim = order + 1;
    let even = DMatrix::from_fn(dim, dim, |i, j| m.moment(i + j));
    let odd = DMatrix::from_fn(dim, dim, |i, j| m.moment(i + j + 1));
    Ok(HankelPair { order, even, odd })
}

/// The localizing matrix `H_s(c) = R_odd - c * R_even`; entries are affine
/// in `c` and the matrix stays symmetric Hankel.
pub fn localizing_matrix(m: &MomentSequence, order: usize, c: f64) -> Result<DMatrix<f64>, BoundsError> {
    let pair = hankel_matrices(m, order)?;
    Ok(&pair.odd - &pair.even * c)
}

fn is_psd(matrix: &DMatrix<f64>) -> bool {
    let tol = PSD_TOL * matrix.norm().max(1.0);
    let eigen = SymmetricEigen::new(matrix.clone());
    eigen.eigenvalues.iter().all(|&ev| ev >= -tol)
}

/// One converged bisection run.
#[derive(Debug, Clone, Copy)]
pub struct Bisection {
    pub value: f64,
    pub bracket: (f64, f64),
    pub iterations: u32,
}

/// Largest `c` with `H_s(c)` PSD: an upper bound on the smallest support
/// point, hence on `λ_min`. The feasible set is the ray `(-∞, α_s]`, so
/// bisection over `[-B, B]` with `B = sqrt(n m_2)` (the Frobenius bound on
/// the spectral radius) decides it.
pub fn alpha_bisect(m: &MomentSequence, order: usize, tol: f64) -> Result<Bisection, BoundsError> {
    bisect(m, order, tol, BoundSide::Lower)
}

/// Smallest `c` with `-H_s(c)` PSD: a lower bound on `λ_max`. Mirror image
/// of [`alpha_bisect`] with the feasible ray `[β_s, ∞)`.
pub fn beta_bisect(m: &MomentSequence, order: usize, tol: f64) -> Result<Bisection, BoundsError> {
    bisect(m, order, tol, BoundSide::Upper)
}

enum BoundSide {
    Lower,
    Upper,
}

fn bisect(m: &MomentSequence, order: usize, tol: f64, side: BoundSide) -> Result<Bisection, BoundsError> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(BoundsError::BadTolerance(tol));
    }
    let pair = hankel_matrices(m, order)?;
    if m.moment(2) <= 0.0 {
        // point measure at zero: both support ends coincide
        return Ok(Bisection { value: 0.0, bracket: (0.0, 0.0), iterations: 0 });
    }
    let radius = (m.node_count() as f64 * m.moment(2)).sqrt();
    let feasible = |c: f64| -> bool {
        let h = &pair.odd - &pair.even * c;
        match side {
            BoundSide::Lower => is_psd(&h),
            BoundSide::Upper => is_psd(&(-h)),
        }
    };
    // the ray end inside the bracket must be feasible, the other end not
    let (feasible_end, infeasible_end) = match side {
        BoundSide::Lower => (-radius, radius),
        BoundSide::Upper => (radius, -radius),
    };
    if !feasible(feasible_end) || feasible(infeasible_end) {
        return Err(BoundsError::InfeasibleBracket { order });
    }
    let (mut good, mut bad) = (feasible_end, infeasible_end);
    let mut iterations = 0;
    while (good - bad).abs() > tol && iterations < 200 {
        let mid = 0.5 * (good + bad);
        if feasible(mid) {
            good = mid;
        } else {
            bad = mid;
        }
        iterations += 1;
    }
    Ok(Bisection { value: good, bracket: (-radius, radius), iterations })
}

/// How a pair of support bounds was computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum BoundMethod {
    #[serde(rename = "analytic-cubic")]
    AnalyticCubic,
    #[serde(rename = "psd-bisection")]
    PsdBisection,
}

/// An inner approximation `[alpha, beta]` of the support hull of the
/// spectral measure: `λ_min <= alpha` and `beta <= λ_max`.
#[derive(Debug, Clone, Copy)]
pub struct SupportBounds {
    /// Order actually used; lower than requested when a rank-deficiency
    /// fallback applied.
    pub order: usize,
    pub alpha: f64,
    pub beta: f64,
    pub method: BoundMethod,
    /// True when the even Hankel matrix was rank-deficient at the requested
    /// order and the bounds come from a reduced order instead.
    pub degenerate: bool,
    /// Initial bracket, for bisection runs.
    pub bracket: Option<(f64, f64)>,
    /// Total bisection iterations across both bounds.
    pub iterations: Option<u32>,
}

/// Both bounds at `order` by PSD bisection, converged to `1e-9` of the
/// bracket width.
pub fn support_bounds_bisect(m: &MomentSequence, order: usize) -> Result<SupportBounds, BoundsError> {
    let radius = (m.node_count() as f64 * m.moment(2)).sqrt();
    let tol = (2.0 * radius * 1e-9).max(1e-15);
    let alpha = alpha_bisect(m, order, tol)?;
    let beta = beta_bisect(m, order, tol)?;
    Ok(SupportBounds {
        order,
        alpha: alpha.value,
        beta: beta.value,
        method: BoundMethod::PsdBisection,
        degenerate: false,
        bracket: Some(alpha.bracket),
        iterations: Some(alpha.iterations + beta.iterations),
    })
}

/// Linear polynomial `p + q c`, used to expand Hankel determinants in `c`.
#[derive(Clone, Copy)]
struct Linear {
    p: f64,
    q: f64,
}

fn poly_mul(acc: &[f64], lin: Linear) -> Vec<f64> {
    // multiply a polynomial in c by (p + q c)
    let mut out = vec![0.0; acc.len() + 1];
    for (k, &a) in acc.iter().enumerate() {
        out[k] += a * lin.p;
        out[k + 1] += a * lin.q;
    }
    out
}

fn det_poly(entries: &[[Linear; 3]; 3]) -> [f64; 4] {
    // cofactor expansion over the first row; each product of three linear
    // factors is a cubic in c
    let mut coeffs = [0.0f64; 4];
    let perms: [([usize; 3], f64); 6] = [
        ([0, 1, 2], 1.0),
        ([1, 2, 0], 1.0),
        ([2, 0, 1], 1.0),
        ([0, 2, 1], -1.0),
        ([1, 0, 2], -1.0),
        ([2, 1, 0], -1.0),
    ];
    for (cols, sign) in perms {
        let mut term = vec![sign];
        for (row, &col) in cols.iter().enumerate() {
            term = poly_mul(&term, entries[row][col]);
        }
        for (k, &t) in term.iter().enumerate() {
            coeffs[k] += t;
        }
    }
    coeffs
}

/// Coefficients `[c^0, c^1, c^2, c^3]` of `det H_2(c)`.
fn h2_determinant_coeffs(m: &MomentSequence) -> [f64; 4] {
    let entry = |k: usize| Linear { p: m.moment(k + 1), q: -m.moment(k) };
    let entries = [
        [entry(0), entry(1), entry(2)],
        [entry(1), entry(2), entry(3)],
        [entry(2), entry(3), entry(4)],
    ];
    det_poly(&entries)
}

fn even_hankel_degenerate(pair: &HankelPair) -> bool {
    let norm = pair.even.norm().max(1.0);
    let dim = pair.order + 1;
    pair.even.determinant().abs() <= DEGENERACY_TOL * norm.powi(dim as i32)
}

/// Order-1 bounds as the two roots of the quadratic `det H_1(c) = 0`.
/// A measure concentrated at a single point (no edges) collapses both
/// bounds onto that point.
pub fn support_bounds_analytic_order1(m: &MomentSequence) -> Result<SupportBounds, BoundsError> {
    let pair = hankel_matrices(m, 1)?;
    if even_hankel_degenerate(&pair) {
        // variance zero: point measure at m_1
        return Ok(SupportBounds {
            order: 1,
            alpha: m.moment(1),
            beta: m.moment(1),
            method: BoundMethod::AnalyticCubic,
            degenerate: true,
            bracket: None,
            iterations: None,
        });
    }
    // det [[m1 - c, m2 - c m1], [m2 - c m1, m3 - c m2]] expands to
    // (m2 - m1^2) c^2 + (m1 m2 - m3) c + (m1 m3 - m2^2)
    let (m1, m2, m3) = (m.moment(1), m.moment(2), m.moment(3));
    let roots = real_quadratic_roots(m2 - m1 * m1, m1 * m2 - m3, m1 * m3 - m2 * m2);
    if roots.len() != 2 {
        return Err(BoundsError::InfeasibleBracket { order: 1 });
    }
    Ok(SupportBounds {
        order: 1,
        alpha: roots[0],
        beta: roots[1],
        method: BoundMethod::AnalyticCubic,
        degenerate: false,
        bracket: None,
        iterations: None,
    })
}

/// Order-2 bounds as the smallest and largest real roots of the cubic
/// `det H_2(c) = 0`, solved in closed form.
///
/// A spectral measure with fewer than three distinct atoms makes the even
/// Hankel matrix rank-deficient and the cubic uninformative; the order-1
/// bounds are returned instead with `degenerate` set. Order-1 recovery is
/// exact for two-atom spectra, so nothing is lost in the fallback.
pub fn support_bounds_analytic(m: &MomentSequence) -> Result<SupportBounds, BoundsError> {
    let pair = hankel_matrices(m, 2)?;
    if even_hankel_degenerate(&pair) {
        let inner = support_bounds_analytic_order1(m)?;
        return Ok(SupportBounds { degenerate: true, ..inner });
    }
    let coeffs = h2_determinant_coeffs(m);
    let roots = real_cubic_roots(coeffs[3], coeffs[2], coeffs[1], coeffs[0]);
    if roots.len() < 3 {
        return Err(BoundsError::DegenerateCubic(roots.len()));
    }
    Ok(SupportBounds {
        order: 2,
        alpha: roots[0],
        beta: roots[roots.len() - 1],
        method: BoundMethod::AnalyticCubic,
        degenerate: false,
        bracket: None,
        iterations: None,
    })
}

/// Structural quantity to perturb in a sensitivity estimate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StructuralProperty {
    Edges,
    Triangles,
    Quadrangles,
    Pentagons,
    DegreeSquareSum,
    DegreeTriangleSum,
}

/// Central finite-difference estimates of how the order-2 bounds respond to
/// a structural perturbation.
#[derive(Debug, Clone, Copy)]
pub struct SensitivityEstimate {
    /// `∂ alpha / ∂ property`.
    pub alpha_derivative: f64,
    /// `∂ beta / ∂ property`.
    pub beta_derivative: f64,
}

/// Estimates `∂α_2/∂p` and `∂β_2/∂p` for a structural property `p` by
/// evaluating the analytic bounds at the census perturbed by `±h` counts.
pub fn bound_sensitivity(
    c: &StructuralCensus,
    property: StructuralProperty,
    h: f64,
) -> Result<SensitivityEstimate, BoundsError> {
    if h == 0.0 || !h.is_finite() {
        return Err(BoundsError::BadStep(h));
    }
    let n = c.node_count;
    let base = AggregateRates::from_census(c);
    let bounds_at = |offset: f64| -> Result<SupportBounds, BoundsError> {
        let mut rates = base;
        let delta = offset / n as f64;
        match property {
            StructuralProperty::Edges => rates.edges += delta,
            StructuralProperty::Triangles => rates.triangles += delta,
            StructuralProperty::Quadrangles => rates.quadrangles += delta,
            StructuralProperty::Pentagons => rates.pentagons += delta,
            StructuralProperty::DegreeSquareSum => rates.degree_square_sum += delta,
            StructuralProperty::DegreeTriangleSum => rates.degree_triangle_sum += delta,
        }
        let moments = MomentSequence::from_rates(n, &rates)?;
        support_bounds_analytic(&moments)
    };
    let plus = bounds_at(h)?;
    let minus = bounds_at(-h)?;
    Ok(SensitivityEstimate {
        alpha_derivative: (plus.alpha - minus.alpha) / (2.0 * h),
        beta_derivative: (plus.beta - minus.beta) / (2.0 * h),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::census;
    use crate::generate;
    use crate::graph::Graph;

    fn moments_of(g: &Graph) -> MomentSequence {
        MomentSequence::from_census(&census(g)).unwrap()
    }

    #[test]
    fn hankel_assembly_k3() {
        let m = moments_of(&generate::complete(3));
        let pair = hankel_matrices(&m, 1).unwrap();
        assert_eq!(pair.even, DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, 2.0]));
        assert_eq!(pair.odd, DMatrix::from_row_slice(2, 2, &[0.0, 2.0, 2.0, 2.0]));
    }

    #[test]
    fn hankel_assembly_single_edge_order2() {
        let m = moments_of(&Graph::from_edges(2, &[(0, 1)]));
        let pair = hankel_matrices(&m, 2).unwrap();
        let r4 = DMatrix::from_row_slice(3, 3, &[1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0]);
        let r5 = DMatrix::from_row_slice(3, 3, &[0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0]);
        assert_eq!(pair.even, r4);
        assert_eq!(pair.odd, r5);
        assert!(hankel_matrices(&m, 3).is_err());
    }

    #[test]
    fn hankel_empty_graph() {
        let m = moments_of(&Graph::empty(2));
        let pair = hankel_matrices(&m, 1).unwrap();
        assert_eq!(pair.even, DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, 0.0]));
        assert_eq!(pair.odd, DMatrix::zeros(2, 2));
    }

    #[test]
    fn localizing_matrix_cases() {
        let k3 = moments_of(&generate::complete(3));
        let at0 = localizing_matrix(&k3, 1, 0.0).unwrap();
        assert_eq!(at0, DMatrix::from_row_slice(2, 2, &[0.0, 2.0, 2.0, 2.0]));
        let atm1 = localizing_matrix(&k3, 1, -1.0).unwrap();
        assert_eq!(atm1, DMatrix::from_row_slice(2, 2, &[1.0, 2.0, 2.0, 4.0]));

        let edge = moments_of(&Graph::from_edges(2, &[(0, 1)]));
        let at1 = localizing_matrix(&edge, 1, 1.0).unwrap();
        assert_eq!(at1, DMatrix::from_row_slice(2, 2, &[-1.0, 1.0, 1.0, -1.0]));
    }

    #[test]
    fn bisection_recovers_two_atom_spectra() {
        // K3 spectrum {2, -1}: det H_1(c) = 2c^2 - 2c - 4 has roots -1, 2
        let m = moments_of(&generate::complete(3));
        let alpha = alpha_bisect(&m, 1, 1e-10).unwrap();
        let beta = beta_bisect(&m, 1, 1e-10).unwrap();
        assert!((alpha.value + 1.0).abs() < 1e-8);
        assert!((beta.value - 2.0).abs() < 1e-8);

        let edge = moments_of(&Graph::from_edges(2, &[(0, 1)]));
        assert!((alpha_bisect(&edge, 1, 1e-10).unwrap().value + 1.0).abs() < 1e-8);
        assert!((beta_bisect(&edge, 1, 1e-10).unwrap().value - 1.0).abs() < 1e-8);
    }

    #[test]
    fn bisection_point_measure() {
        let m = moments_of(&Graph::empty(3));
        let alpha = alpha_bisect(&m, 1, 1e-10).unwrap();
        let beta = beta_bisect(&m, 1, 1e-10).unwrap();
        assert_eq!(alpha.value, 0.0);
        assert_eq!(beta.value, 0.0);
    }

    #[test]
    fn analytic_five_cycle_is_exact() {
        // three distinct eigenvalues: five moments determine the measure
        let m = moments_of(&generate::cycle(5));
        let b = support_bounds_analytic(&m).unwrap();
        assert_eq!(b.order, 2);
        assert!(!b.degenerate);
        assert!((b.alpha - 2.0 * (4.0 * std::f64::consts::PI / 5.0).cos()).abs() < 1e-9);
        assert!((b.beta - 2.0).abs() < 1e-9);
    }

    #[test]
    fn analytic_fallback_on_two_atom_spectra() {
        let m = moments_of(&Graph::from_edges(2, &[(0, 1)]));
        let b = support_bounds_analytic(&m).unwrap();
        assert!(b.degenerate);
        assert_eq!(b.order, 1);
        assert!((b.alpha + 1.0).abs() < 1e-12);
        assert!((b.beta - 1.0).abs() < 1e-12);

        let k3 = moments_of(&generate::complete(3));
        let b = support_bounds_analytic(&k3).unwrap();
        assert!(b.degenerate);
        assert!((b.alpha + 1.0).abs() < 1e-10);
        assert!((b.beta - 2.0).abs() < 1e-10);
    }

    #[test]
    fn complete_graphs_recover_exactly_at_order1() {
        for n in 3..=8 {
            let m = moments_of(&generate::complete(n));
            let b = support_bounds_analytic(&m).unwrap();
            assert!(b.degenerate, "K_{n} has a two-atom spectrum");
            assert!((b.alpha + 1.0).abs() < 1e-8);
            assert!((b.beta - (n as f64 - 1.0)).abs() < 1e-8);
        }
    }

    #[test]
    fn sensitivity_edges_raises_beta() {
        // more edges raise m2 and with it the lower bound on lambda_max
        let c = census(&generate::petersen());
        let s = bound_sensitivity(&c, StructuralProperty::Edges, 0.25).unwrap();
        assert!(s.beta_derivative > 0.0);
        assert!(bound_sensitivity(&c, StructuralProperty::Edges, 0.0).is_err());
    }

    #[test]
    fn corrupt_moments_fail_the_bracket_check() {
        // m3 = -10 with m2 = 1 and m4 = 1.5 violates |m3| <= sqrt(m2 m4):
        // no measure has these moments, and the bracket test catches it
        let rates = AggregateRates {
            edges: 0.5,
            triangles: -10.0 / 6.0,
            quadrangles: 0.0,
            pentagons: 0.0,
            degree_square_sum: 1.25,
            degree_triangle_sum: -5.0,
        };
        let m = MomentSequence::from_rates(1, &rates).unwrap();
        assert!(matches!(
            alpha_bisect(&m, 1, 1e-10),
            Err(BoundsError::InfeasibleBracket { order: 1 })
        ));
    }

    #[test]
    fn sensitivity_rejects_invalid_perturbations() {
        // a huge negative quadrangle perturbation drives m4 below m2^2,
        // which is no longer a moment sequence
        let c = census(&generate::petersen());
        let err = bound_sensitivity(&c, StructuralProperty::Quadrangles, 1e6);
        assert!(matches!(err, Err(BoundsError::Moments(_))));
    }

    #[test]
    fn sensitivity_central_vs_forward() {
        // the gap between central and one-sided differences is O(h): it
        // should roughly halve when h does
        let c = census(&generate::petersen());
        let base = support_bounds_analytic(&MomentSequence::from_census(&c).unwrap()).unwrap();
        let gap_at = |h: f64| -> f64 {
            let central = bound_sensitivity(&c, StructuralProperty::Edges, h).unwrap();
            let mut rates = AggregateRates::from_census(&c);
            rates.edges += h / c.node_count as f64;
            let plus =
                support_bounds_analytic(&MomentSequence::from_rates(c.node_count, &rates).unwrap())
                    .unwrap();
            let forward = (plus.beta - base.beta) / h;
            (central.beta_derivative - forward).abs()
        };
        let coarse = gap_at(0.8);
        let fine = gap_at(0.4);
        assert!(coarse > 0.0, "Petersen bounds are not linear in the edge count");
        assert!(fine <= 0.75 * coarse + 1e-12, "coarse {coarse}, fine {fine}");
    }
}
