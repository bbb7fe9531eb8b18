//! The decision layer: an exact geometric Gorenstein test (minimal
//! dilation, unique relative-interior lattice point, dual-polytope
//! integrality), the closed-form classification by parameter membership,
//! and a cross-validation harness running both routes side by side.

use num_bigint::BigInt;

use crate::latgeom::{find_delta, lattice_chart, ChartImage, LatticeChart};
use crate::polykern::rational::Rational;
use crate::polykern::{dual, HPolytope, VPolytope};
use crate::tspread::{
    build_polytope, is_polynomial_ring, krull_dimension, lift_point, SpreadParams,
};
use crate::{Error, Result};

/// Which route of the algorithmic pipeline decided the verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// The generators are algebraically independent; trivially Gorenstein.
    PolynomialRing,
    /// The full polytopal pipeline ran.
    Geometric,
}

/// Complete audit trail of one decision. Points and the interior vector α
/// are reported in the projected coordinates of the *input* parameters
/// (length n−1), with zeros at the variables the n < dt normalization
/// dropped; the dual polytope lives in chart coordinates of the dilated
/// reduced polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GorensteinReport {
    pub input: SpreadParams,
    pub reduced: SpreadParams,
    pub dimension: u32,
    pub branch: Branch,
    pub delta: Option<u32>,
    pub interior_points: Vec<Vec<BigInt>>,
    pub unique_alpha: Option<Vec<BigInt>>,
    pub dual_vertices: Option<VPolytope>,
    pub dual_integral: Option<bool>,
    pub gorenstein_algorithmic: bool,
    pub gorenstein_closed_form: bool,
    pub agree: bool,
    pub a_invariant: Option<i64>,
}

/// Default dilation-search ceiling: t + d + 2 comfortably covers every
/// regime's minimal dilation.
pub fn default_delta_max(p: &SpreadParams) -> u32 {
    p.t() + p.d() + 2
}

/// Runs the full algorithmic pipeline: normalize, shortcut the degenerate
/// polynomial rings, otherwise find the minimal dilation whose relative
/// interior contains lattice points, demand uniqueness, and test
/// integrality of the dual of the recentered dilate. `delta_max` defaults
/// to [`default_delta_max`].
///
/// The shortcut covers d = 1 and the single-generator case n = (d−1)t+1
/// (after normalization) — inputs whose generator polytope is a simplex or
/// a point, trivially a polynomial ring. Other polynomial rings (the
/// boundary n = (d−1)t+2, which for t = 2 coincides with n = dt) still run
/// the geometric branch, so the report carries their dilation data.
pub fn decide_algorithmic(p: &SpreadParams, delta_max: Option<u32>) -> Result<GorensteinReport> {
    let reduced = p.reduce();
    let dimension = krull_dimension(p);
    let gorenstein_closed_form = decide_closed_form(p);
    let mut report = GorensteinReport {
        input: *p,
        reduced,
        dimension,
        branch: Branch::PolynomialRing,
        delta: None,
        interior_points: Vec::new(),
        unique_alpha: None,
        dual_vertices: None,
        dual_integral: None,
        gorenstein_algorithmic: true,
        gorenstein_closed_form,
        agree: true,
        a_invariant: None,
    };
    let single_generator = reduced.n() == (reduced.d() - 1) * reduced.t() + 1;
    if reduced.d() == 1 || single_generator {
        debug_assert!(is_polynomial_ring(&reduced));
        report.agree = report.gorenstein_algorithmic == gorenstein_closed_form;
        return Ok(report);
    }

    report.branch = Branch::Geometric;
    let poly = build_polytope(&reduced)?;
    let found = find_delta(&poly, delta_max.unwrap_or_else(|| default_delta_max(p)))?;
    let delta = found.delta;
    report.delta = Some(delta);
    report.a_invariant = Some(-i64::from(delta));
    let mut lifted: Vec<Vec<BigInt>> = found
        .interior_points
        .iter()
        .map(|pt| lift_point(p, pt, delta))
        .collect::<Result<_>>()?;
    lifted.sort();
    report.interior_points = lifted;

    if found.interior_points.len() > 1 {
        report.gorenstein_algorithmic = false;
        report.agree = report.gorenstein_algorithmic == gorenstein_closed_form;
        return Ok(report);
    }

    let alpha = &found.interior_points[0];
    let dilated = poly.dilate(&Rational::from_integer(BigInt::from(delta)))?;
    let chart = lattice_chart(&dilated)?.with_origin(alpha)?;
    let (dual_vertices, dual_integral) = dual_in_chart(&chart, &dilated)?;
    report.unique_alpha = Some(report.interior_points[0].clone());
    report.dual_vertices = Some(dual_vertices);
    report.dual_integral = Some(dual_integral);
    report.gorenstein_algorithmic = dual_integral;
    report.agree = report.gorenstein_algorithmic == gorenstein_closed_form;
    Ok(report)
}

/// Maps `dilated` through a chart anchored at an interior lattice point and
/// returns the polar dual (computed over the irredundant facets) together
/// with its integrality. The chart's origin must be interior, which makes
/// the image a full-dimensional region around 0.
pub fn dual_in_chart(chart: &LatticeChart, dilated: &HPolytope) -> Result<(VPolytope, bool)> {
    match chart.image(dilated)? {
        ChartImage::Poly(q) => {
            let dual_poly = dual(&q)?;
            let integral = dual_poly.is_integral();
            Ok((dual_poly, integral))
        }
        _ => Err(Error::NotStandardType(
            "the dilated polytope is not full-dimensional in its chart".into(),
        )),
    }
}

/// The closed-form classification by parameter membership alone.
pub fn decide_closed_form(p: &SpreadParams) -> bool {
    if p.d() == 1 {
        return true;
    }
    if p.t() == 1 {
        let (n, d) = (p.n(), p.d());
        return d == n || d == n - 1 || (d < n - 1 && n == 2 * d);
    }
    let q = p.reduce();
    let (n, d, t) = (u64::from(q.n()), u64::from(q.d()), u64::from(q.t()));
    [
        (d - 1) * t + 1,
        (d - 1) * t + 2,
        d * t,
        d * t + 1,
        d * t + d,
    ]
    .contains(&n)
}

/// The predicted minimal dilation for already-normalized parameters with
/// t, d ≥ 2, by regime of k = n − dt: k = 0 → t+d−1; 1 ≤ k ≤ d−1 → t+d;
/// k ≥ d → t+1. None outside those preconditions.
pub fn expected_delta(p: &SpreadParams) -> Option<u32> {
    let (n, d, t) = (u64::from(p.n()), u64::from(p.d()), u64::from(p.t()));
    if d < 2 || t < 2 || n < d * t {
        return None;
    }
    let k = n - d * t;
    let predicted = if k == 0 {
        t + d - 1
    } else if k < d {
        t + d
    } else {
        t + 1
    };
    Some(predicted as u32)
}

/// Outcome of a parameter sweep running both decision routes.
#[derive(Debug, Default)]
pub struct CrossCheck {
    /// Reports whose two verdicts differ (expected empty).
    pub disagreements: Vec<GorensteinReport>,
    /// Tuples whose pipeline failed, with the error (collected, not fatal).
    pub failures: Vec<(SpreadParams, Error)>,
    /// Number of tuples evaluated successfully.
    pub checked: usize,
}

/// Runs both routes for every valid (n, d, t) with d ≤ d_max, t ≤ t_max,
/// n ≤ n_max, in (d, t, n) order, and collects the disagreements.
pub fn cross_check(n_max: u32, d_max: u32, t_max: u32, delta_max: Option<u32>) -> CrossCheck {
    let mut out = CrossCheck::default();
    for d in 1..=d_max {
        for t in 1..=t_max {
            for n in 1..=n_max {
                let Ok(p) = SpreadParams::new(n, d, t) else {
                    continue;
                };
                match decide_algorithmic(&p, delta_max) {
                    Ok(r) => {
                        out.checked += 1;
                        if !r.agree {
                            out.disagreements.push(r);
                        }
                    }
                    Err(e) => out.failures.push((p, e)),
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: u32, d: u32, t: u32) -> SpreadParams {
        SpreadParams::new(n, d, t).unwrap()
    }

    fn ints(raw: &[i64]) -> Vec<BigInt> {
        raw.iter().map(|&v| BigInt::from(v)).collect()
    }

    #[test]
    fn gorenstein_with_unique_point_and_integral_dual() {
        let r = decide_algorithmic(&params(10, 5, 2), None).unwrap();
        assert_eq!(r.branch, Branch::Geometric);
        assert_eq!(r.delta, Some(6));
        assert_eq!(r.dimension, 6);
        assert_eq!(r.interior_points, vec![ints(&[5, 1, 4, 2, 3, 3, 2, 4, 1])]);
        assert_eq!(r.unique_alpha, Some(ints(&[5, 1, 4, 2, 3, 3, 2, 4, 1])));
        assert_eq!(r.dual_integral, Some(true));
        assert!(r.gorenstein_algorithmic && r.gorenstein_closed_form && r.agree);
        assert_eq!(r.a_invariant, Some(-6));
    }

    #[test]
    fn multiple_interior_points_refute_gorenstein() {
        let r = decide_algorithmic(&params(8, 3, 2), None).unwrap();
        assert_eq!(r.delta, Some(4));
        assert_eq!(
            r.interior_points,
            vec![
                ints(&[1, 2, 1, 2, 1, 2, 1]),
                ints(&[2, 1, 1, 2, 1, 2, 1]),
                ints(&[2, 1, 2, 1, 1, 2, 1]),
                ints(&[2, 1, 2, 1, 2, 1, 1]),
                ints(&[2, 1, 2, 1, 2, 1, 2]),
            ]
        );
        assert_eq!(r.dual_integral, None);
        assert!(!r.gorenstein_algorithmic && !r.gorenstein_closed_form && r.agree);
        assert_eq!(r.dimension, 8);
        assert_eq!(r.a_invariant, Some(-4));
    }

    #[test]
    fn many_interior_points_above_the_top_regime() {
        let r = decide_algorithmic(&params(10, 3, 2), None).unwrap();
        assert_eq!(r.delta, Some(4));
        assert_eq!(r.interior_points.len(), 36);
        assert!(!r.gorenstein_algorithmic && !r.gorenstein_closed_form && r.agree);
        assert_eq!(r.dimension, 10);
    }

    #[test]
    fn normalization_then_geometry() {
        let r = decide_algorithmic(&params(11, 3, 4), None).unwrap();
        assert_eq!(r.reduced, params(9, 3, 3));
        assert_eq!(r.delta, Some(5));
        assert_eq!(r.dimension, 7);
        assert_eq!(
            r.interior_points,
            vec![ints(&[3, 1, 1, 0, 2, 1, 2, 0, 1, 1])]
        );
        assert_eq!(r.dual_integral, Some(true));
        assert!(r.gorenstein_algorithmic && r.agree);
    }

    #[test]
    fn remaining_unique_point_examples() {
        let r = decide_algorithmic(&params(10, 3, 3), None).unwrap();
        assert_eq!(r.delta, Some(6));
        assert_eq!(r.interior_points, vec![ints(&[3, 1, 1, 3, 1, 1, 3, 1, 1])]);
        assert!(r.gorenstein_algorithmic && r.agree);

        let r = decide_algorithmic(&params(8, 2, 3), None).unwrap();
        assert_eq!(r.delta, Some(4));
        assert_eq!(r.interior_points, vec![ints(&[1, 1, 1, 1, 1, 1, 1])]);
        assert!(r.gorenstein_algorithmic && r.agree);

        let r = decide_algorithmic(&params(9, 3, 2), None).unwrap();
        assert_eq!(r.delta, Some(3));
        assert_eq!(r.interior_points, vec![ints(&[1, 1, 1, 1, 1, 1, 1, 1])]);
        assert!(r.gorenstein_algorithmic && r.agree);
    }

    #[test]
    fn polynomial_ring_branch() {
        // d = 1, single-generator inputs, and inputs normalizing to one
        for (n, d, t) in [(5, 3, 2), (7, 1, 3), (9, 3, 4), (2, 1, 5), (7, 4, 2)] {
            let r = decide_algorithmic(&params(n, d, t), None).unwrap();
            assert_eq!(r.branch, Branch::PolynomialRing, "({n},{d},{t})");
            assert_eq!(r.delta, None);
            assert!(r.interior_points.is_empty());
            assert!(r.gorenstein_algorithmic && r.gorenstein_closed_form && r.agree);
            assert_eq!(r.a_invariant, None);
        }
    }

    #[test]
    fn polynomial_ring_boundary_still_runs_geometry() {
        let r = decide_algorithmic(&params(6, 3, 2), None).unwrap();
        assert_eq!(r.branch, Branch::Geometric);
        assert_eq!(r.delta, Some(4));
        assert_eq!(r.interior_points, vec![ints(&[3, 1, 2, 2, 1])]);
        assert_eq!(r.dual_integral, Some(true));
        assert!(r.gorenstein_algorithmic && r.gorenstein_closed_form && r.agree);

        let r = decide_algorithmic(&params(4, 2, 2), None).unwrap();
        assert_eq!(r.branch, Branch::Geometric);
        assert_eq!(r.delta, Some(3));
        assert_eq!(r.interior_points, vec![ints(&[2, 1, 1])]);
        assert!(r.gorenstein_algorithmic && r.agree);
    }

    #[test]
    fn closed_form_memberships() {
        // (d,t) = (3,2): Gorenstein exactly at n ∈ {5,6,7,9} within reach
        for n in 5..=12 {
            let expect = [5, 6, 7, 9].contains(&n);
            assert_eq!(decide_closed_form(&params(n, 3, 2)), expect, "n={n}");
        }
        // normalization-sensitive case
        assert!(decide_closed_form(&params(11, 3, 4)));
        // spread-one classification
        assert!(decide_closed_form(&params(4, 4, 1))); // d = n
        assert!(decide_closed_form(&params(5, 4, 1))); // d = n-1
        assert!(decide_closed_form(&params(4, 2, 1))); // n = 2d, d < n-1
        assert!(!decide_closed_form(&params(14, 2, 1)));
        assert!(!decide_closed_form(&params(7, 3, 1)));
        assert!(decide_closed_form(&params(6, 3, 1))); // n = 2d
        // degree one is always a polynomial ring
        assert!(decide_closed_form(&params(9, 1, 5)));
    }

    #[test]
    fn predicted_dilations_by_regime() {
        assert_eq!(expected_delta(&params(10, 5, 2)), Some(6)); // n = dt
        assert_eq!(expected_delta(&params(9, 3, 2)), Some(3)); // n = dt+d
        assert_eq!(expected_delta(&params(8, 3, 2)), Some(5)); // n = dt+2
        assert_eq!(expected_delta(&params(7, 3, 2)), Some(5)); // n = dt+1
        assert_eq!(expected_delta(&params(10, 3, 2)), Some(3)); // n ≥ (t+1)d+1
        assert_eq!(expected_delta(&params(5, 2, 2)), Some(4)); // n = dt+1
        // out of scope: unreduced, spread one, degree one
        assert_eq!(expected_delta(&params(11, 3, 4)), None);
        assert_eq!(expected_delta(&params(6, 3, 1)), None);
        assert_eq!(expected_delta(&params(4, 1, 2)), None);
    }

    #[test]
    fn delta_bound_errors_propagate() {
        assert_eq!(
            decide_algorithmic(&params(10, 3, 2), Some(2)),
            Err(Error::DeltaBoundExceeded { delta_max: 2 })
        );
    }

    #[test]
    fn small_cross_checks_agree() {
        let sweep = cross_check(9, 3, 2, Some(7));
        assert!(sweep.disagreements.is_empty());
        assert!(sweep.failures.is_empty());
        assert!(sweep.checked > 10);
        let trivial = cross_check(6, 1, 3, None);
        assert!(trivial.disagreements.is_empty() && trivial.failures.is_empty());
    }
}
