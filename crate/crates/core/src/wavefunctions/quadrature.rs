//! Gauss-Legendre quadrature on geometrically graded panels.

use std::sync::OnceLock;

/// Nodes and weights on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLegendre {
    /// Rule of `n` points; roots of `P_n` by Newton iteration from the
    /// Chebyshev-like initial guesses.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "quadrature needs at least one node");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let nf = n as f64;
        for i in 0..n.div_ceil(2) {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre_with_derivative(n, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        Self { nodes, weights }
    }

    pub fn integrate<F: Fn(f64) -> f64>(&self, a: f64, b: f64, f: F) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (b + a);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(x, w)| w * f(mid + half * x))
            .sum::<f64>()
            * half
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let nf = n as f64;
    let d = nf * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

pub const PANEL_NODES: usize = 512;

pub fn rule_512() -> &'static GaussLegendre {
    static RULE: OnceLock<GaussLegendre> = OnceLock::new();
    RULE.get_or_init(|| GaussLegendre::new(PANEL_NODES))
}

/// Result of a panel-doubling integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PanelIntegral {
    pub value: f64,
    pub panels: usize,
    /// |I(panels) - I(panels / 2)|.
    pub change: f64,
    pub converged: bool,
}

/// Integral over `panels` log-spaced panels covering `[lo, hi]`, `0 < lo < hi`.
pub fn log_panel_integral<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64, panels: usize) -> f64 {
    let rule = rule_512();
    let ratio = (hi / lo).ln() / panels as f64;
    (0..panels)
        .map(|k| {
            let a = lo * (ratio * k as f64).exp();
            let b = if k + 1 == panels { hi } else { lo * (ratio * (k + 1) as f64).exp() };
            rule.integrate(a, b, f)
        })
        .sum()
}

/// Doubles the panel count, starting from 2, until successive results
/// differ by less than `tol`.
pub fn integrate_log_panels<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64) -> PanelIntegral {
    let mut panels = 2;
    let mut prev = log_panel_integral(&f, lo, hi, panels);
    loop {
        panels *= 2;
        let value = log_panel_integral(&f, lo, hi, panels);
        let change = (value - prev).abs();
        if change < tol || panels >= 1024 {
            return PanelIntegral {
                value,
                panels,
                change,
                converged: change < tol,
            };
        }
        prev = value;
    }
}
