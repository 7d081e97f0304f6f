//! Generalized hypergeometric series ₀F₂(; b₁, b₂; z).

use super::SpecialError;

/// Default cap on the number of series terms.
pub const DEFAULT_TERM_CAP: usize = 10_000;

/// Outcome of a converged series summation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult {
    pub value: f64,
    pub terms_used: usize,
    /// Geometric bound on the truncated tail (absolute).
    pub truncation_estimate: f64,
}

fn check_parameter(b: f64) -> Result<(), SpecialError> {
    if b == 0.0 || (b < 0.0 && b == b.floor()) {
        return Err(SpecialError::InvalidParameter { b });
    }
    Ok(())
}

/// `₀F₂(; b₁, b₂; z) = Σ_{k≥0} z^k / ((b₁)_k (b₂)_k k!)`.
///
/// The series is entire in z. Terms are generated by the ratio recurrence
/// `term_{k+1} = term_k · z / ((b₁+k)(b₂+k)(k+1))`; once the ratio falls
/// below 1 in magnitude the tail is bounded by the geometric series with the
/// observed ratio, and summation stops when that bound drops below
/// `1e−15·|partial sum|`.
///
/// Errors if the cap is hit first, or if cancellation between alternating
/// terms has consumed the working precision (large negative z).
pub fn hyp0f2(b1: f64, b2: f64, z: f64) -> Result<SeriesResult, SpecialError> {
    hyp0f2_with_cap(b1, b2, z, DEFAULT_TERM_CAP)
}

pub fn hyp0f2_with_cap(
    b1: f64,
    b2: f64,
    z: f64,
    cap: usize,
) -> Result<SeriesResult, SpecialError> {
    check_parameter(b1)?;
    check_parameter(b2)?;

    let mut term = 1.0_f64;
    let mut sum = 1.0_f64;
    let mut max_term = 1.0_f64;
    let mut k = 0usize;
    loop {
        if k >= cap {
            return Err(SpecialError::Nonconvergence { terms: k });
        }
        let kf = k as f64;
        let ratio = z / ((b1 + kf) * (b2 + kf) * (kf + 1.0));
        term *= ratio;
        sum += term;
        max_term = max_term.max(term.abs());
        k += 1;

        if ratio.abs() < 1.0 {
            let tail = term.abs() * ratio.abs() / (1.0 - ratio.abs());
            if tail < 1e-15 * sum.abs().max(f64::MIN_POSITIVE) {
                // Cancellation check: if the largest term dwarfs the sum, the
                // digits left are rounding noise, not the function value.
                if max_term * f64::EPSILON > 1e-12 * sum.abs().max(1.0) {
                    return Err(SpecialError::Nonconvergence { terms: k });
                }
                return Ok(SeriesResult {
                    value: sum,
                    terms_used: k + 1,
                    truncation_estimate: tail,
                });
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    /// Independent oracle: fixed-count summation with terms rebuilt from
    /// scratch each k (explicit Pochhammer products) and Kahan compensation.
    fn naive_0f2(b1: f64, b2: f64, z: f64, terms: usize) -> f64 {
        let mut sum = 0.0_f64;
        let mut comp = 0.0_f64;
        for k in 0..terms {
            let mut t = 1.0_f64;
            for j in 0..k {
                let jf = j as f64;
                t *= z / ((b1 + jf) * (b2 + jf) * (jf + 1.0));
            }
            let y = t - comp;
            let s = sum + y;
            comp = (s - sum) - y;
            sum = s;
        }
        sum
    }

    #[test]
    fn empty_sum_is_one() {
        let r = hyp0f2(0.8, 1.2, 0.0).unwrap();
        assert_eq!(r.value, 1.0);
        assert!(r.truncation_estimate <= 1e-13);
    }

    #[test]
    fn small_negative_argument_matches_naive_sum() {
        let r = hyp0f2(0.8, 1.2, -1.0 / 125.0).unwrap();
        let want = naive_0f2(0.8, 1.2, -1.0 / 125.0, 50);
        assert_abs_diff_eq!(r.value, want, epsilon = 1e-14);
        // value computed independently: 0.99167508167018725
        assert_abs_diff_eq!(r.value, 0.9916750816701872, epsilon = 1e-14);
    }

    #[test]
    fn derivative_contiguous_relation() {
        // d/dz 0F2(b1,b2;z) = 0F2(b1+1,b2+1;z)/(b1 b2), by termwise
        // differentiation; checked against a central difference at z=-0.5.
        let b1 = 0.8;
        let b2 = 1.2;
        let h = 1e-6;
        let fd = (hyp0f2(b1, b2, -0.5 + h).unwrap().value
            - hyp0f2(b1, b2, -0.5 - h).unwrap().value)
            / (2.0 * h);
        let analytic = hyp0f2(b1 + 1.0, b2 + 1.0, -0.5).unwrap().value / (b1 * b2);
        assert_abs_diff_eq!(fd, analytic, epsilon = 1e-8);
    }

    #[test]
    fn moderate_arguments_match_reference() {
        // reference values computed at 30-digit precision
        assert_abs_diff_eq!(
            hyp0f2(0.8, 1.2, -0.5).unwrap().value,
            0.5114407063214217,
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(
            hyp0f2(1.8, 2.2, -0.5).unwrap().value,
            0.8772237208114844,
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(
            hyp0f2(0.8, 1.2, -62.208).unwrap().value,
            -18.70795089577724,
            epsilon = 1e-11
        );
    }

    #[test]
    fn truncation_estimate_invariant() {
        for &z in &[-8.0, -0.5, -0.008, 0.0, 0.3, 5.0, 40.0] {
            let r = hyp0f2(0.8, 1.2, z).unwrap();
            assert!(
                r.truncation_estimate <= 1e-13 * r.value.abs().max(1.0),
                "z={z}: tail {} vs value {}",
                r.truncation_estimate,
                r.value
            );
        }
    }

    #[test]
    fn term_cap_errors() {
        assert!(matches!(
            hyp0f2_with_cap(0.8, 1.2, 100.0, 5),
            Err(SpecialError::Nonconvergence { .. })
        ));
    }

    #[test]
    fn cancellation_exhaustion_errors() {
        // z = -(18^5)/125: the alternating series loses ~30 digits.
        let z = -(18.0_f64.powi(5)) / 125.0;
        assert!(matches!(
            hyp0f2(0.8, 1.2, z),
            Err(SpecialError::Nonconvergence { .. })
        ));
    }

    #[test]
    fn invalid_parameters_rejected() {
        assert!(hyp0f2(0.0, 1.2, 1.0).is_err());
        assert!(hyp0f2(0.8, -3.0, 1.0).is_err());
        // negative non-integer is fine
        assert!(hyp0f2(-0.5, 1.2, 1.0).is_ok());
    }

    /// Forward sum vs summation in reverse order of the stored terms.
    fn dual_sums(b1: f64, b2: f64, z: f64) -> (f64, f64) {
        let mut terms = vec![1.0_f64];
        let mut term = 1.0_f64;
        for k in 0..400 {
            let kf = k as f64;
            term *= z / ((b1 + kf) * (b2 + kf) * (kf + 1.0));
            terms.push(term);
            if term.abs() < 1e-20 * terms.iter().map(|t| t.abs()).fold(0.0, f64::max) {
                break;
            }
        }
        let fwd: f64 = terms.iter().sum();
        let bwd: f64 = terms.iter().rev().sum();
        (fwd, bwd)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn dual_summation_orders_agree(
            b1 in 0.3f64..3.0,
            b2 in 0.3f64..3.0,
            z in -20.0f64..20.0,
        ) {
            let (fwd, bwd) = dual_sums(b1, b2, z);
            let r = hyp0f2(b1, b2, z).unwrap();
            prop_assert!((fwd - bwd).abs() <= 1e-13 * fwd.abs().max(1.0));
            prop_assert!((r.value - fwd).abs() <= 1e-13 * fwd.abs().max(1.0));
        }
    }
}
