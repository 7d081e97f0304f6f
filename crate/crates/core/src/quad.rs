//! Quadrature: adaptive Gauss–Kronrod on finite intervals and Gauss–Hermite
//! rules for integrals weighted by `exp(−x²)` on the whole line.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum QuadratureError {
    #[error("quadrature tolerance {requested:.3e} not reached, error estimate {achieved:.3e}")]
    ToleranceNotReached { requested: f64, achieved: f64 },
    #[error("invalid integration interval [{a}, {b}]")]
    InvalidInterval { a: f64, b: f64 },
}

// 15-point Kronrod abscissae on [0,1] side of [-1,1] (QUADPACK dqk15).
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
// 7-point Gauss weights, paired with the odd Kronrod abscissae.
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// One Gauss–Kronrod 7–15 panel. Returns `(integral, error_estimate)`.
fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let fc = f(center);
    let mut result_gauss = WG[3] * fc;
    let mut result_kronrod = WGK[7] * fc;
    for j in 0..7 {
        let x = half * XGK[j];
        let fsum = f(center - x) + f(center + x);
        result_kronrod += WGK[j] * fsum;
        if j % 2 == 1 {
            result_gauss += WG[j / 2] * fsum;
        }
    }
    let integral = result_kronrod * half;
    let err = ((result_kronrod - result_gauss) * half).abs();
    (integral, err)
}

/// Adaptive Gauss–Kronrod integration of `f` over `[a, b]` to absolute
/// tolerance `abs_tol`, by recursive bisection of the worst panels.
pub fn adaptive_quad<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    abs_tol: f64,
) -> Result<f64, QuadratureError> {
    if !a.is_finite() || !b.is_finite() || a >= b {
        return Err(QuadratureError::InvalidInterval { a, b });
    }
    const MAX_DEPTH: u32 = 48;
    let mut sum = 0.0;
    let mut err_sum = 0.0;
    // Explicit stack of (a, b, local_tol, depth).
    let mut stack = vec![(a, b, abs_tol, 0u32)];
    while let Some((lo, hi, tol, depth)) = stack.pop() {
        let (val, err) = gk15(f, lo, hi);
        // Panels that can no longer be resolved in f64 are accepted as is.
        let floor = 1e-300_f64.max(f64::EPSILON * val.abs());
        if err <= tol || err <= floor || depth >= MAX_DEPTH {
            sum += val;
            err_sum += err;
        } else {
            let mid = 0.5 * (lo + hi);
            stack.push((lo, mid, 0.5 * tol, depth + 1));
            stack.push((mid, hi, 0.5 * tol, depth + 1));
        }
    }
    if err_sum > abs_tol.max(1e-14 * sum.abs()) {
        return Err(QuadratureError::ToleranceNotReached {
            requested: abs_tol,
            achieved: err_sum,
        });
    }
    Ok(sum)
}

/// Eigenvalues of a symmetric tridiagonal matrix by the implicit-shift QL
/// algorithm (values only), ascending. `off[i]` couples `diag[i]` and
/// `diag[i+1]`.
fn tridiagonal_eigenvalues(mut d: Vec<f64>, off: &[f64]) -> Vec<f64> {
    let n = d.len();
    assert_eq!(off.len() + 1, n);
    let mut e = off.to_vec();
    e.push(0.0);
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            assert!(iter <= 60, "tridiagonal QL iteration did not converge");
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let mut s = 1.0_f64;
            let mut c = 1.0_f64;
            let mut p = 0.0_f64;
            let mut underflow = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    d.sort_by(|a, b| a.partial_cmp(b).expect("eigenvalues are finite"));
    d
}

/// Orthonormal Hermite recurrence: returns (H̃_n(z), H̃_n′(z)).
fn hermite_orthonormal(n: usize, z: f64) -> (f64, f64) {
    let mut p1 = std::f64::consts::PI.powf(-0.25);
    let mut p2 = 0.0;
    for j in 1..=n {
        let p3 = p2;
        p2 = p1;
        p1 = z * (2.0 / j as f64).sqrt() * p2 - (((j - 1) as f64) / j as f64).sqrt() * p3;
    }
    (p1, (2.0 * n as f64).sqrt() * p2)
}

/// Gauss–Hermite rule: nodes and weights for `∫ exp(−x²) f(x) dx` over ℝ.
///
/// Nodes come from the Golub–Welsch eigenvalue problem for the Jacobi
/// matrix of the Hermite recurrence, polished by one or two Newton steps on
/// the orthonormal recurrence; weights are `2 / H̃_n′(x_i)²`. Stays accurate
/// for orders in the hundreds.
#[derive(Debug, Clone)]
pub struct GaussHermite {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussHermite {
    pub fn new(n: usize) -> Self {
        assert!(n >= 2, "Gauss-Hermite rule needs at least 2 nodes");
        let diag = vec![0.0; n];
        let off: Vec<f64> = (1..n).map(|j| (j as f64 / 2.0).sqrt()).collect();
        let eigen = tridiagonal_eigenvalues(diag, &off);

        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        for i in 0..n / 2 {
            // Mirror the eigenvalue pair for exact ± symmetry, then polish.
            let mut z = 0.5 * (eigen[n - 1 - i] - eigen[i]);
            let mut pp = 0.0;
            for _ in 0..4 {
                let (h, hp) = hermite_orthonormal(n, z);
                pp = hp;
                let dz = h / hp;
                z -= dz;
                if dz.abs() <= 1e-16 * (1.0 + z.abs()) {
                    break;
                }
            }
            let w = 2.0 / (pp * pp);
            nodes[n - 1 - i] = z;
            nodes[i] = -z;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            let mid = n / 2;
            nodes[mid] = 0.0;
            let (_, pp) = hermite_orthonormal(n, 0.0);
            weights[mid] = 2.0 / (pp * pp);
        }
        GaussHermite { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Largest abscissa of the rule.
    pub fn max_node(&self) -> f64 {
        self.nodes[self.nodes.len() - 1].abs().max(self.nodes[0].abs())
    }

    /// `∫ exp(−x²) f(x) dx`.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }

    /// `E[f(Z)]` for standard normal `Z`, via `z = √2·x`.
    pub fn gaussian_expectation<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        let s = std::f64::consts::SQRT_2;
        self.integrate(|x| f(s * x)) / std::f64::consts::PI.sqrt()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }
}
