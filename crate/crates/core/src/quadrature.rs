//! Quadrature rules: Gauss–Legendre, a graded composite rule for the
//! logarithmic weight on (0,1], and the 3-point triangle rule.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

/// Gauss–Legendre nodes and weights on [-1, 1], computed by Newton iteration
/// on the Legendre recurrence and cached per order.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1, "Gauss-Legendre order must be >= 1");
    static CACHE: OnceLock<Mutex<HashMap<usize, (Vec<f64>, Vec<f64>)>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(rule) = cache.lock().unwrap().get(&n) {
        return rule.clone();
    }
    let rule = compute_gauss_legendre(n);
    cache.lock().unwrap().insert(n, rule.clone());
    rule
}

fn compute_gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Chebyshev-based initial guess.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Legendre P_n(x) and derivative via the three-term recurrence.
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

/// Gauss–Legendre rule mapped to [0, 1].
pub fn gauss_legendre_01(n: usize) -> (Vec<f64>, Vec<f64>) {
    let (x, w) = gauss_legendre(n);
    (
        x.iter().map(|t| 0.5 * (t + 1.0)).collect(),
        w.iter().map(|v| 0.5 * v).collect(),
    )
}

/// Quadrature rule for integrals `∫₀¹ g(x) · (-ln x) dx ≈ Σ wᵢ g(xᵢ)`
/// with `g` smooth. Built as a geometrically graded composite Gauss rule
/// with the log weight folded into the weights; accuracy is at the
/// 1e-13 level for analytic `g`.
#[derive(Clone)]
pub struct LogWeightRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl LogWeightRule {
    pub fn new() -> Self {
        Self::with_params(0.2, 30, 12)
    }

    pub fn with_params(ratio: f64, levels: usize, order: usize) -> Self {
        let (gx, gw) = gauss_legendre_01(order);
        let mut nodes = Vec::with_capacity(levels * order);
        let mut weights = Vec::with_capacity(levels * order);
        let mut hi = 1.0;
        for _ in 0..levels {
            let lo = hi * ratio;
            let len = hi - lo;
            for (t, w) in gx.iter().zip(&gw) {
                let x = lo + len * t;
                nodes.push(x);
                weights.push(w * len * (-x.ln()));
            }
            hi = lo;
        }
        Self { nodes, weights }
    }

    /// Apply the rule to a complex-valued smooth factor.
    pub fn integrate<F>(&self, mut g: F) -> num_complex::Complex64
    where
        F: FnMut(f64) -> num_complex::Complex64,
    {
        let mut acc = num_complex::Complex64::new(0.0, 0.0);
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            acc += g(*x) * *w;
        }
        acc
    }
}

impl Default for LogWeightRule {
    fn default() -> Self {
        Self::new()
    }
}

/// Shared instance of the log-weight rule (it is immutable).
pub fn log_rule() -> &'static LogWeightRule {
    static RULE: OnceLock<LogWeightRule> = OnceLock::new();
    RULE.get_or_init(LogWeightRule::new)
}

/// Degree-2 exact triangle rule: edge midpoints, weights 1/3 of the area.
/// Returned in barycentric coordinates (λ₁, λ₂, λ₃, weight-fraction).
pub fn triangle_midpoint_rule() -> [([f64; 3], f64); 3] {
    [
        ([0.5, 0.5, 0.0], 1.0 / 3.0),
        ([0.0, 0.5, 0.5], 1.0 / 3.0),
        ([0.5, 0.0, 0.5], 1.0 / 3.0),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_legendre_integrates_polynomials_exactly() {
        // Degree 2n-1 exactness on [-1,1].
        for n in [2, 5, 8, 16] {
            let (x, w) = gauss_legendre(n);
            for k in 0..(2 * n) {
                let num: f64 = x.iter().zip(&w).map(|(xi, wi)| wi * xi.powi(k as i32)).sum();
                let exact = if k % 2 == 0 { 2.0 / (k as f64 + 1.0) } else { 0.0 };
                assert!(
                    (num - exact).abs() < 1e-13,
                    "n={n} k={k}: {num} vs {exact}"
                );
            }
        }
    }

    #[test]
    fn log_rule_matches_known_moments() {
        // ∫₀¹ x^k (-ln x) dx = 1/(k+1)².
        let rule = log_rule();
        for k in 0..8 {
            let num: f64 = rule
                .nodes
                .iter()
                .zip(&rule.weights)
                .map(|(x, w)| w * x.powi(k))
                .sum();
            let exact = 1.0 / ((k as f64 + 1.0) * (k as f64 + 1.0));
            assert!((num - exact).abs() < 1e-13, "k={k}: {num} vs {exact}");
        }
    }

    #[test]
    fn log_rule_on_analytic_factor() {
        // ∫₀¹ cos(x)(-ln x) dx via series: Σ (-1)^m/(2m)! · 1/(2m+1)².
        let rule = log_rule();
        let num: f64 = rule
            .nodes
            .iter()
            .zip(&rule.weights)
            .map(|(x, w)| w * x.cos())
            .sum();
        let mut exact = 0.0;
        let mut fact = 1.0;
        for m in 0..12 {
            if m > 0 {
                fact *= (2 * m - 1) as f64 * (2 * m) as f64;
            }
            let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
            let p = 2 * m + 1;
            exact += sign / fact / (p * p) as f64;
        }
        assert!((num - exact).abs() < 1e-13);
    }

    #[test]
    fn triangle_rule_weights_sum_to_one() {
        let s: f64 = triangle_midpoint_rule().iter().map(|(_, w)| w).sum();
        assert!((s - 1.0).abs() < 1e-15);
    }
}
