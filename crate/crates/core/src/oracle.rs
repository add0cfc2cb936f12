//! Numerov shooting eigensolver for `u'' = (V(r) - e) u`, used as an
//! independent check on the closed-form spectrum.
//!
//! Levels are isolated by Sturm node counting (the number of sign changes of
//! the forward solution equals the number of eigenvalues below `e`), then
//! polished by Illinois regula falsi on the normalized Casoratian
//! `w_L(m) w_R(m+1) - w_L(m+1) w_R(m)` of the two Numerov solutions at the
//! matching point, where `w = (1 - h^2 Q / 12) u`. The Casoratian of the
//! three-term Numerov recurrence is independent of `m`, so its zeros are the
//! exact eigenvalues of the discrete problem and inherit the O(h^4) accuracy
//! of the scheme.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::pekeris::PekerisCoefficients;
use crate::spectrum::{barrier_strength, energy, lambda_index, MoleculeParams};

/// Default number of grid points before refinement.
pub const DEFAULT_GRID_POINTS: usize = 20_000;
/// Minimum accepted grid size.
pub const MIN_GRID_POINTS: usize = 1_000;
/// Maximum number of grid doublings in [`oracle_energy`].
pub const MAX_REFINEMENTS: usize = 6;
/// WKB action `int sqrt(V - e) dr` past the turning points at which the
/// grid is cut off (`e^{-70} ~ 4e-31`).
pub const TAIL_ACTION: f64 = 70.0;
/// Closest approach to the `1/(1+r)^2` pole.
pub const POLE_GAP: f64 = 1e-6;
/// The tail walk also stops once `V - e` exceeds this; the solution then
/// decays within ~1e-3 in `r`.
pub const WALL_Q: f64 = 1e6;

const RESCALE_ABOVE: f64 = 1e200;
const RESCALE_BY: f64 = 1e-200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// Centrifugal factor replaced by its Pekeris expansion.
    PekerisApprox,
    /// The unapproximated `(lambda^2 - 1/4) / (1 + r)^2` barrier.
    ExactCentrifugal,
    /// Any other potential (self tests).
    Custom,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Variant::PekerisApprox => "pekeris_approx",
            Variant::ExactCentrifugal => "exact_centrifugal",
            Variant::Custom => "custom",
        };
        f.write_str(s)
    }
}

/// Initial values at the left end of the grid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum LeftSeed {
    /// `u ~ exp(sqrt(Q) (r - r_min))`, a solution decaying into the wall.
    Decaying,
    /// `u ~ (1 + r)^p`, regular solution at the centrifugal pole.
    PowerLaw(f64),
}

pub type Potential = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A one-dimensional eigenproblem `u'' = (V(r) - e) u` on a uniform grid.
///
/// `V` and `e` are reduced (dimensionless); physical energies are
/// `energy_scale * e`.
#[derive(Clone)]
pub struct RadialProblem {
    potential: Potential,
    pub r_min: f64,
    pub r_max: f64,
    pub grid_points: usize,
    pub variant: Variant,
    pub energy_scale: f64,
    /// Reduced potential as `r -> inf`; no bound state lies above it.
    pub threshold: f64,
    pub left_seed: LeftSeed,
    step: f64,
    v: Vec<f64>,
}

impl fmt::Debug for RadialProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RadialProblem")
            .field("r_min", &self.r_min)
            .field("r_max", &self.r_max)
            .field("grid_points", &self.grid_points)
            .field("variant", &self.variant)
            .field("energy_scale", &self.energy_scale)
            .finish_non_exhaustive()
    }
}

/// Grid summary carried in results.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSpec {
    pub r_min: f64,
    pub r_max: f64,
    pub grid_points: usize,
    pub variant: Variant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Direction {
    Forward,
    Backward,
}

/// One integration leg.
#[derive(Debug, Clone)]
pub struct Shot {
    /// Grid values covering the leg up to one point past the matching index;
    /// indices are global grid indices starting at `offset`.
    pub values: Vec<f64>,
    pub offset: usize,
    pub match_index: usize,
    /// `u'(m) / u(m)` by central difference.
    pub log_derivative: f64,
    pub nodes: usize,
}

impl RadialProblem {
    pub fn new(
        potential: Potential,
        r_min: f64,
        r_max: f64,
        grid_points: usize,
        variant: Variant,
        energy_scale: f64,
        threshold: f64,
    ) -> Result<Self> {
        if !(r_min.is_finite() && r_max.is_finite() && r_min < r_max) {
            return Err(domain(format!("invalid grid range [{r_min}, {r_max}]")));
        }
        if variant == Variant::ExactCentrifugal && r_min <= -1.0 {
            return Err(domain("exact-centrifugal grid must start above r = -1"));
        }
        if grid_points < MIN_GRID_POINTS {
            return Err(domain(format!("grid needs at least {MIN_GRID_POINTS} points, got {grid_points}")));
        }
        if !(energy_scale > 0.0) {
            return Err(domain("energy scale must be positive"));
        }
        let step = (r_max - r_min) / (grid_points - 1) as f64;
        let v: Vec<f64> = (0..grid_points).map(|i| potential(r_min + step * i as f64)).collect();
        if v.iter().any(|x| !x.is_finite()) {
            return Err(domain("potential is not finite on the grid"));
        }
        Ok(Self {
            potential,
            r_min,
            r_max,
            grid_points,
            variant,
            energy_scale,
            threshold,
            left_seed: LeftSeed::Decaying,
            step,
            v,
        })
    }

    pub fn with_left_seed(mut self, seed: LeftSeed) -> Self {
        self.left_seed = seed;
        self
    }

    /// Same potential and range on a grid of `grid_points`.
    pub fn with_grid_points(&self, grid_points: usize) -> Result<Self> {
        let p = Self::new(
            self.potential.clone(),
            self.r_min,
            self.r_max,
            grid_points,
            self.variant,
            self.energy_scale,
            self.threshold,
        )?;
        Ok(p.with_left_seed(self.left_seed))
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn r_at(&self, i: usize) -> f64 {
        self.r_min + self.step * i as f64
    }

    pub fn potential_at(&self, r: f64) -> f64 {
        (self.potential)(r)
    }

    pub fn grid(&self) -> GridSpec {
        GridSpec {
            r_min: self.r_min,
            r_max: self.r_max,
            grid_points: self.grid_points,
            variant: self.variant,
        }
    }

    /// Numerov is monotone in classically forbidden regions only while
    /// `h^2 Q / 12 < 1`; require a comfortable margin at `e`.
    fn check_stability(&self, e: f64) -> Result<()> {
        let vmax = self.v.iter().copied().fold(f64::MIN, f64::max);
        let k = self.step * self.step * (vmax - e) / 12.0;
        if k >= 0.5 {
            return Err(Error::GridTooCoarse(format!(
                "h^2 Q/12 = {k:.3} at the grid edge; use more than {} points",
                self.grid_points
            )));
        }
        Ok(())
    }

    /// Outermost grid index that is classically allowed at `e`, kept away
    /// from the edges.
    pub fn matching_index(&self, e: f64) -> usize {
        let n = self.grid_points;
        let m = (0..n).rev().find(|&i| self.v[i] < e).unwrap_or(n / 2);
        m.clamp(2, n - 3)
    }

    fn left_seeds(&self, e: f64) -> (f64, f64) {
        match self.left_seed {
            LeftSeed::Decaying => {
                let q = 0.5 * (self.v[0] + self.v[1]) - e;
                (1.0, (self.step * q.max(0.0).sqrt()).exp())
            }
            LeftSeed::PowerLaw(p) => {
                let a = (1.0 + self.r_at(0)).powf(p);
                let b = (1.0 + self.r_at(1)).powf(p);
                (1.0, b / a)
            }
        }
    }

    fn right_seeds(&self, e: f64) -> (f64, f64) {
        let n = self.grid_points;
        let q = 0.5 * (self.v[n - 1] + self.v[n - 2]) - e;
        (1.0, (self.step * q.max(0.0).sqrt()).exp())
    }

    /// Runs the Numerov recurrence from the left boundary to index `stop`,
    /// storing values when `store` is set. Returns the last two values,
    /// the node count and the stored values.
    fn run_forward(&self, e: f64, stop: usize, store: bool) -> (f64, f64, usize, Vec<f64>) {
        let h2 = self.step * self.step / 12.0;
        let (u0, u1) = self.left_seeds(e);
        let mut vals = Vec::new();
        if store {
            vals.reserve(stop + 1);
            vals.push(u0);
            vals.push(u1);
        }
        let (mut prev, mut cur) = (u0, u1);
        let mut f_prev = 1.0 - h2 * (self.v[0] - e);
        let mut f_cur = 1.0 - h2 * (self.v[1] - e);
        let mut nodes = 0;
        for i in 1..stop {
            let f_next = 1.0 - h2 * (self.v[i + 1] - e);
            let next = ((12.0 - 10.0 * f_cur) * cur - f_prev * prev) / f_next;
            if next != 0.0 && cur != 0.0 && next.signum() != cur.signum() {
                nodes += 1;
            }
            prev = cur;
            cur = next;
            f_prev = f_cur;
            f_cur = f_next;
            if store {
                vals.push(cur);
            }
            if cur.abs() > RESCALE_ABOVE {
                prev *= RESCALE_BY;
                cur *= RESCALE_BY;
                if store {
                    vals.iter_mut().for_each(|x| *x *= RESCALE_BY);
                }
            }
        }
        (prev, cur, nodes, vals)
    }

    /// Mirror of [`run_forward`] from the right boundary down to `stop`.
    /// Stored values are in ascending grid order.
    fn run_backward(&self, e: f64, stop: usize, store: bool) -> (f64, f64, usize, Vec<f64>) {
        let n = self.grid_points;
        let h2 = self.step * self.step / 12.0;
        let (u0, u1) = self.right_seeds(e);
        let mut vals = Vec::new();
        if store {
            vals.reserve(n - stop);
            vals.push(u0);
            vals.push(u1);
        }
        let (mut prev, mut cur) = (u0, u1);
        let mut f_prev = 1.0 - h2 * (self.v[n - 1] - e);
        let mut f_cur = 1.0 - h2 * (self.v[n - 2] - e);
        let mut nodes = 0;
        for i in (stop + 1..n - 1).rev() {
            let f_next = 1.0 - h2 * (self.v[i - 1] - e);
            let next = ((12.0 - 10.0 * f_cur) * cur - f_prev * prev) / f_next;
            if next != 0.0 && cur != 0.0 && next.signum() != cur.signum() {
                nodes += 1;
            }
            prev = cur;
            cur = next;
            f_prev = f_cur;
            f_cur = f_next;
            if store {
                vals.push(cur);
            }
            if cur.abs() > RESCALE_ABOVE {
                prev *= RESCALE_BY;
                cur *= RESCALE_BY;
                if store {
                    vals.iter_mut().for_each(|x| *x *= RESCALE_BY);
                }
            }
        }
        vals.reverse();
        (prev, cur, nodes, vals)
    }

    /// Number of discrete eigenvalues below the reduced energy `e`.
    pub fn count_below(&self, e: f64) -> usize {
        self.run_forward(e, self.grid_points - 1, false).2
    }

    fn w(&self, i: usize, e: f64, u: f64) -> f64 {
        (1.0 - self.step * self.step * (self.v[i] - e) / 12.0) * u
    }

    /// Normalized Casoratian of the left and right solutions at `m`; continuous
    /// in `e` and zero exactly at discrete eigenvalues.
    fn matching_defect(&self, e: f64, m: usize) -> f64 {
        // left: values at m, m+1
        let (l_m, l_m1, _, _) = self.run_forward(e, m + 1, false);
        // right: values at m+1, m
        let (r_m1, r_m, _, _) = self.run_backward(e, m, false);
        let (wl0, wl1) = (self.w(m, e, l_m), self.w(m + 1, e, l_m1));
        let (wr0, wr1) = (self.w(m, e, r_m), self.w(m + 1, e, r_m1));
        let norm = ((wl0 * wl0 + wl1 * wl1) * (wr0 * wr0 + wr1 * wr1)).sqrt();
        (wl0 * wr1 - wl1 * wr0) / norm
    }
}

/// Integrates one leg at reduced energy `e` up to one point beyond the
/// outer-turning-point matching index.
pub fn numerov_integrate(problem: &RadialProblem, e: f64, direction: Direction) -> Result<Shot> {
    problem.check_stability(e)?;
    let m = problem.matching_index(e);
    numerov_integrate_to(problem, e, direction, m)
}

pub fn numerov_integrate_to(problem: &RadialProblem, e: f64, direction: Direction, m: usize) -> Result<Shot> {
    if m < 2 || m + 3 > problem.grid_points {
        return Err(domain(format!("matching index {m} outside the grid interior")));
    }
    let h = problem.step;
    let shot = match direction {
        Direction::Forward => {
            let (_, _, nodes, values) = problem.run_forward(e, m + 1, true);
            let log_derivative = (values[m + 1] - values[m - 1]) / (2.0 * h * values[m]);
            Shot {
                values,
                offset: 0,
                match_index: m,
                log_derivative,
                nodes,
            }
        }
        Direction::Backward => {
            let (_, _, nodes, values) = problem.run_backward(e, m - 1, true);
            let offset = m - 1;
            let log_derivative = (values[2] - values[0]) / (2.0 * h * values[1]);
            Shot {
                values,
                offset,
                match_index: m,
                log_derivative,
                nodes,
            }
        }
    };
    Ok(shot)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NumerovResult {
    /// Physical eigenvalue, `energy_scale * reduced`.
    pub eigenvalue: f64,
    pub reduced_eigenvalue: f64,
    pub node_count: usize,
    /// Physical energies bracketing the eigenvalue.
    pub bracket: (f64, f64),
    /// Difference of left and right log-derivatives at the matching point.
    pub residual: f64,
    pub match_r: f64,
    pub grid: GridSpec,
    /// Grid doublings performed (by [`oracle_energy`]).
    pub refinements: usize,
    /// Eigenvalue change over the last doubling, physical units.
    pub last_shift: f64,
}

/// Eigenvalue with `n` nodes. `window` and `tol` are physical energies.
pub fn find_eigenvalue(problem: &RadialProblem, n: u32, window: (f64, f64), tol: f64) -> Result<NumerovResult> {
    let scale = problem.energy_scale;
    let target = n as usize;
    let tol_red = tol / scale;
    if !(tol_red > 0.0) {
        return Err(domain("tolerance must be positive"));
    }
    let mut lo = window.0.min(window.1) / scale;
    let mut hi = (window.0.max(window.1) / scale).min(problem.threshold);
    problem.check_stability(lo)?;
    if !(lo < hi) {
        return Err(Error::NotBracketed(format!(
            "empty window below the threshold {}",
            problem.threshold * scale
        )));
    }

    // expand until count(lo) <= n < count(hi)
    let mut width = hi - lo;
    let mut tries = 0;
    while problem.count_below(lo) > target {
        lo -= width;
        width *= 2.0;
        tries += 1;
        if tries > 60 {
            return Err(Error::NotBracketed(format!("no lower bound for level {n}")));
        }
    }
    problem.check_stability(lo)?;
    tries = 0;
    while problem.count_below(hi) <= target {
        if hi >= problem.threshold {
            return Err(Error::NotBracketed(format!(
                "level n={n} not found below the threshold {} (only {} levels)",
                problem.threshold * scale,
                problem.count_below(problem.threshold)
            )));
        }
        hi = (hi + width).min(problem.threshold);
        width *= 2.0;
        tries += 1;
        if tries > 60 {
            return Err(Error::NotBracketed(format!("no upper bound for level {n}")));
        }
    }

    // isolate the level: count(lo) == n, count(hi) == n + 1
    let mut c_lo = problem.count_below(lo);
    let mut c_hi = problem.count_below(hi);
    while !(c_lo == target && c_hi == target + 1) {
        if hi - lo < tol_red {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let c = problem.count_below(mid);
        if c < c_lo || c > c_hi {
            return Err(Error::GridTooCoarse(format!(
                "node count {c} at e={mid} is not monotone between {c_lo} and {c_hi}"
            )));
        }
        if c > target {
            hi = mid;
            c_hi = c;
        } else {
            lo = mid;
            c_lo = c;
        }
    }
    if c_lo != target || c_hi != target + 1 {
        return Err(Error::NotBracketed(format!(
            "levels {c_lo}..{c_hi} could not be separated within the tolerance"
        )));
    }

    // polish
    let m = problem.matching_index(0.5 * (lo + hi));
    let mut f_lo = problem.matching_defect(lo, m);
    let mut f_hi = problem.matching_defect(hi, m);
    let mut estimate = 0.5 * (lo + hi);
    if f_lo * f_hi < 0.0 {
        let mut side = 0i8;
        for _ in 0..200 {
            if hi - lo < tol_red {
                break;
            }
            let mut x = (lo * f_hi - hi * f_lo) / (f_hi - f_lo);
            if !(x > lo && x < hi) {
                x = 0.5 * (lo + hi);
            }
            let fx = problem.matching_defect(x, m);
            estimate = x;
            if fx == 0.0 {
                lo = x;
                hi = x;
                break;
            }
            if fx * f_hi < 0.0 {
                lo = x;
                f_lo = fx;
                if side == -1 {
                    f_hi *= 0.5;
                }
                side = -1;
            } else {
                hi = x;
                f_hi = fx;
                if side == 1 {
                    f_lo *= 0.5;
                }
                side = 1;
            }
        }
    }
    // illinois can stall on one side; close the bracket by counting
    while hi - lo >= tol_red {
        let mid = 0.5 * (lo + hi);
        if problem.count_below(mid) > target {
            hi = mid;
        } else {
            lo = mid;
        }
        estimate = 0.5 * (lo + hi);
    }
    let e = estimate.clamp(lo, hi);

    let left = numerov_integrate_to(problem, e, Direction::Forward, m)?;
    let right = numerov_integrate_to(problem, e, Direction::Backward, m)?;
    let stitched = stitch(&left, &right, problem.grid_points);
    let node_count = stitched
        .iter()
        .filter(|v| **v != 0.0)
        .collect::<Vec<_>>()
        .windows(2)
        .filter(|w| w[0].signum() != w[1].signum())
        .count();

    Ok(NumerovResult {
        eigenvalue: e * scale,
        reduced_eigenvalue: e,
        node_count,
        bracket: (lo * scale, hi * scale),
        residual: left.log_derivative - right.log_derivative,
        match_r: problem.r_at(m),
        grid: problem.grid(),
        refinements: 0,
        last_shift: f64::NAN,
    })
}

/// Joins the two legs into one grid function, scaled to agree at the
/// matching point.
pub fn stitch(left: &Shot, right: &Shot, grid_points: usize) -> Vec<f64> {
    let m = left.match_index;
    let scale = left.values[m] / right.values[m - right.offset];
    let mut out = Vec::with_capacity(grid_points);
    out.extend_from_slice(&left.values[..=m]);
    out.extend(right.values[m + 1 - right.offset..].iter().map(|v| v * scale));
    out
}

/// Sampled eigenfunction at reduced energy `e`, normalized to unit
/// `int u^2 dr` (trapezoid).
pub fn eigenfunction(problem: &RadialProblem, e: f64) -> Result<Vec<f64>> {
    let m = problem.matching_index(e);
    let left = numerov_integrate_to(problem, e, Direction::Forward, m)?;
    let right = numerov_integrate_to(problem, e, Direction::Backward, m)?;
    let mut u = stitch(&left, &right, problem.grid_points);
    let norm = (u.iter().map(|x| x * x).sum::<f64>() * problem.step).sqrt();
    u.iter_mut().for_each(|x| *x /= norm);
    Ok(u)
}

/// Reduced effective potential of the Morse problem for dimension `N` and
/// rotational number `ell`, and its value at `r -> inf`.
pub fn morse_effective_potential(
    mol: &MoleculeParams,
    ell: u32,
    dimension: u32,
    variant: Variant,
) -> Result<(Potential, f64)> {
    mol.validate()?;
    let lambda = lambda_index(ell, dimension)?;
    let barrier = barrier_strength(lambda);
    let d = mol.reduced_depth();
    let alpha = mol.alpha;
    let morse = move |r: f64| {
        let e = (-alpha * r).exp();
        d * e * (e - 2.0)
    };
    match variant {
        Variant::PekerisApprox => {
            let c = PekerisCoefficients::new(alpha)?;
            let pot: Potential = Arc::new(move |r| morse(r) + barrier * c.eval(r));
            Ok((pot, barrier * c.c0))
        }
        Variant::ExactCentrifugal => {
            let pot: Potential = Arc::new(move |r| {
                let s = 1.0 + r;
                morse(r) + barrier / (s * s)
            });
            Ok((pot, 0.0))
        }
        Variant::Custom => Err(domain("custom potentials are constructed directly")),
    }
}

/// Grid range for the Morse problem at reference reduced energy `e_ref`.
///
/// Both ends sit a WKB action of [`TAIL_ACTION`] beyond the classical
/// turning points, or where `V - e` reaches [`WALL_Q`]. The right end is capped
/// where `e^{-alpha r} < 1e-16`, the left end (exact barrier) at
/// `-1 + POLE_GAP`.
pub fn morse_domain(potential: &Potential, alpha: f64, variant: Variant, e_ref: f64) -> (f64, f64) {
    let v = |r: f64| potential(r);
    let r_cap = 16.0 * std::f64::consts::LN_10 / alpha;
    let r_floor = match variant {
        Variant::ExactCentrifugal => -1.0 + POLE_GAP,
        _ => -60.0 / alpha,
    };
    let ds = 1e-3 / alpha.max(1.0);

    // minimum of the well lies near r = 0; walk outward from it
    let tail = |dir: f64, limit: f64| {
        let mut r = 0.0;
        while (r - limit) * dir < 0.0 && v(r) <= e_ref {
            r += dir * ds;
        }
        let mut action = 0.0;
        while (r - limit) * dir < 0.0 && action < TAIL_ACTION {
            let q = v(r) - e_ref;
            if q > WALL_Q {
                break;
            }
            if q > 0.0 {
                action += q.sqrt() * ds;
            }
            r += dir * ds;
        }
        if dir < 0.0 {
            r.max(limit)
        } else {
            r.min(limit)
        }
    };
    (tail(-1.0, r_floor), tail(1.0, r_cap))
}

/// Builds the eigenproblem for one `(ell, N)` channel of a molecule.
pub fn morse_problem(
    mol: &MoleculeParams,
    ell: u32,
    dimension: u32,
    variant: Variant,
    e_ref: f64,
    grid_points: usize,
) -> Result<RadialProblem> {
    let (pot, threshold) = morse_effective_potential(mol, ell, dimension, variant)?;
    let (r_min, r_max) = morse_domain(&pot, mol.alpha, variant, e_ref.min(threshold));
    let problem = RadialProblem::new(
        pot,
        r_min,
        r_max,
        grid_points,
        variant,
        mol.energy_scale_eps,
        threshold,
    )?;
    let lambda = lambda_index(ell, dimension)?;
    let pole = barrier_strength(lambda) / (1.0 + r_min).powi(2);
    let wall = mol.reduced_depth() * (-mol.alpha * r_min).exp().powi(2);
    if variant == Variant::ExactCentrifugal && pole > wall {
        let p = lambda + 0.5;
        return Ok(problem.with_left_seed(LeftSeed::PowerLaw(p)));
    }
    Ok(problem)
}

/// Default search window: closed-form estimate +-10 %, or the whole well
/// when the closed form has no such level.
fn default_window(mol: &MoleculeParams, n: u32, ell: u32, dimension: u32, threshold_ev: f64) -> (f64, f64) {
    match energy(mol, n, ell, dimension) {
        Ok(e) if e < threshold_ev => {
            let half = 0.1 * e.abs().max(mol.energy_scale_eps);
            (e - half, (e + half).min(threshold_ev))
        }
        _ => (-mol.well_depth_d * 1.05, threshold_ev),
    }
}

/// Numerov eigenvalue for `(n, ell, N)`, refining the grid from
/// [`DEFAULT_GRID_POINTS`] by doubling until the eigenvalue moves by less than
/// `tol / 10`.
pub fn oracle_energy(
    mol: &MoleculeParams,
    n: u32,
    ell: u32,
    dimension: u32,
    variant: Variant,
    tol: f64,
) -> Result<NumerovResult> {
    let (_, threshold) = morse_effective_potential(mol, ell, dimension, variant)?;
    let threshold_ev = threshold * mol.energy_scale_eps;
    let window = default_window(mol, n, ell, dimension, threshold_ev);
    let e_ref = window.1 / mol.energy_scale_eps;

    let mut points = DEFAULT_GRID_POINTS;
    let mut problem = morse_problem(mol, ell, dimension, variant, e_ref, points)?;
    let mut result = find_eigenvalue(&problem, n, window, tol)?;
    for k in 1..=MAX_REFINEMENTS {
        points = 2 * points - 1;
        problem = problem.with_grid_points(points)?;
        let width = (result.eigenvalue.abs() * 1e-3).max(10.0 * tol);
        let next = find_eigenvalue(&problem, n, (result.eigenvalue - width, result.eigenvalue + width), tol)?;
        let shift = (next.eigenvalue - result.eigenvalue).abs();
        result = NumerovResult {
            refinements: k,
            last_shift: shift,
            ..next
        };
        if shift < tol / 10.0 {
            break;
        }
    }
    Ok(result)
}

/// Oracle count of bound levels: discrete eigenvalues below the channel
/// threshold on a grid reaching `r` where `e^{-alpha r} < 1e-16`.
pub fn oracle_bound_state_count(mol: &MoleculeParams, ell: u32, dimension: u32, variant: Variant) -> Result<usize> {
    let (_, threshold) = morse_effective_potential(mol, ell, dimension, variant)?;
    let problem = morse_problem(mol, ell, dimension, variant, threshold, DEFAULT_GRID_POINTS)?;
    problem.check_stability(-mol.reduced_depth())?;
    Ok(problem.count_below(threshold))
}
