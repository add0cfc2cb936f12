//! Acceptance suite. Each criterion prints one PASS/FAIL line; the process
//! exits non-zero if any fails.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use morse_pekeris::oracle::{
    find_eigenvalue, morse_problem, oracle_bound_state_count, oracle_energy, Potential, RadialProblem, Variant,
};
use morse_pekeris::{
    builtin_registry, energy, pekeris_coefficients, spectral_params, MoleculeParams, RadialEigenfunction,
};

const NORM_TOL: f64 = 1e-8;
const ODE_TOL: f64 = 1e-6;
const ORACLE_GAP_TOL: f64 = 1e-6;
const IDENTITY_TOL: f64 = 1e-13;
const FD_TOL: f64 = 1e-6;
const FD_STEP: f64 = 1e-5;
const OSCILLATOR_TOL: f64 = 1e-8;
const ORACLE_ENERGY_TOL: f64 = 1e-9;

fn h2() -> MoleculeParams {
    builtin_registry().lookup("H2").unwrap().clone()
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

type Outcome = Result<String, String>;

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

/// Closed form vs Numerov on the Pekeris-approximated equation.
fn criterion_1() -> Outcome {
    let mol = h2();
    let mut worst = 0.0f64;
    for ell in 0..=5 {
        for n in 0..=3 {
            let closed = energy(&mol, n, ell, 3).map_err(|e| e.to_string())?;
            let oracle = oracle_energy(&mol, n, ell, 3, Variant::PekerisApprox, ORACLE_ENERGY_TOL)
                .map_err(|e| format!("oracle failed at n={n} ell={ell}: {e}"))?;
            if oracle.node_count != n as usize {
                return Err(format!("node count {} != {n} at ell={ell}", oracle.node_count));
            }
            worst = worst.max(rel(closed, oracle.eigenvalue));
        }
    }
    check(worst <= ORACLE_GAP_TOL, format!("max relative gap {worst:.3e} (tol {ORACLE_GAP_TOL:e})"))
}

fn criterion_2() -> Outcome {
    let mol = h2();
    let closed = energy(&mol, 0, 0, 3).map_err(|e| e.to_string())?;
    let oracle = oracle_energy(&mol, 0, 0, 3, Variant::PekerisApprox, ORACLE_ENERGY_TOL).map_err(|e| e.to_string())?;
    let ok = (closed - oracle.eigenvalue).abs() <= 1e-3 && (oracle.eigenvalue + 4.476).abs() <= 1e-3;
    check(ok, format!("E00 closed {closed:.6} eV, oracle {:.6} eV", oracle.eigenvalue))
}

fn criterion_3() -> Outcome {
    let mol = h2();
    let closed = spectral_params(&mol, 0, 3).map_err(|e| e.to_string())?.bound_state_count();
    let counted = oracle_bound_state_count(&mol, 0, 3, Variant::PekerisApprox).map_err(|e| e.to_string())?;
    check(
        closed as usize == counted && counted == 17,
        format!("closed-form count {closed}, oracle count {counted}"),
    )
}

/// Eigenfunctions exercised by criteria 4 and 5.
fn eigenfunctions() -> Vec<RadialEigenfunction> {
    let mol = h2();
    let mut out = Vec::new();
    for ell in 0..=5 {
        for n in 0..=3 {
            out.push(RadialEigenfunction::for_molecule(&mol, n, ell, 3).unwrap());
        }
    }
    for n in 4..17 {
        out.push(RadialEigenfunction::for_molecule(&mol, n, 0, 3).unwrap());
    }
    for (n, ell, dim) in [(0, 0, 7), (1, 0, 7), (2, 2, 5), (0, 3, 2)] {
        out.push(RadialEigenfunction::for_molecule(&mol, n, ell, dim).unwrap());
    }
    out
}

fn criterion_4() -> Outcome {
    let mut worst = 0.0f64;
    for eig in eigenfunctions() {
        let q = eig.normalization_integral();
        if !q.converged {
            return Err(format!("quadrature not converged for n={} ell={}", eig.n(), eig.state.ell));
        }
        worst = worst.max((q.value - 1.0).abs());
    }
    check(worst <= NORM_TOL, format!("max |norm - 1| = {worst:.3e} (tol {NORM_TOL:e})"))
}

fn criterion_5() -> Outcome {
    let mut worst = 0.0f64;
    for eig in eigenfunctions() {
        let res = eig.ode_residual(0.1, 2.0 * eig.kappa, 500).map_err(|e| e.to_string())?;
        worst = worst.max(res);
    }
    check(worst <= ODE_TOL, format!("max scaled residual {worst:.3e} (tol {ODE_TOL:e})"))
}

/// Three-dimensional energy written directly with ell(ell+1).
fn energy_3d_direct(mol: &MoleculeParams, n: u32, ell: u32) -> f64 {
    let a = mol.alpha;
    let c0 = 1.0 - 3.0 / a + 3.0 / (a * a);
    let c1 = 4.0 / a - 6.0 / (a * a);
    let c2 = -1.0 / a + 3.0 / (a * a);
    let ll = (ell * (ell + 1)) as f64;
    let d = mol.well_depth_d / mol.energy_scale_eps;
    let eta = (d + ll * c2).sqrt();
    let zeta_sq = 2.0 * d - ll * c1;
    let shift = n as f64 + 0.5 - zeta_sq / (2.0 * eta * a);
    mol.energy_scale_eps * (ll * c0 - a * a * shift * shift)
}

fn criterion_6() -> Outcome {
    let mol = h2();
    let mut worst_direct = 0.0f64;
    for ell in 0..=28 {
        let count = spectral_params(&mol, ell, 3).unwrap().bound_state_count();
        for n in 0..count {
            let e = energy(&mol, n, ell, 3).unwrap();
            worst_direct = worst_direct.max(rel(e, energy_3d_direct(&mol, n, ell)));
        }
    }
    let mut worst_degeneracy = 0.0f64;
    for dim in [4, 5, 7] {
        for ell in 0..=10 {
            for n in 0..=5 {
                let a = energy(&mol, n, ell, dim).unwrap();
                let b = energy(&mol, n, ell + 1, dim - 2).unwrap();
                worst_degeneracy = worst_degeneracy.max(rel(a, b));
            }
        }
    }
    let mut chen_ok = true;
    let p = spectral_params(&mol, 0, 3).unwrap();
    let c_terms = [p.barrier * p.coeffs.c0, p.barrier * p.coeffs.c1, p.barrier * p.coeffs.c2];
    chen_ok &= c_terms.iter().all(|t| *t == 0.0);
    let sqrt_d = (mol.well_depth_d / mol.energy_scale_eps).sqrt();
    let mut worst_chen = 0.0f64;
    for n in 0..p.bound_state_count() {
        let chen = -mol.energy_scale_eps * mol.alpha.powi(2) * (n as f64 + 0.5 - sqrt_d / mol.alpha).powi(2);
        worst_chen = worst_chen.max(rel(energy(&mol, n, 0, 3).unwrap(), chen));
    }
    chen_ok &= worst_chen <= IDENTITY_TOL;
    check(
        worst_direct <= IDENTITY_TOL && worst_degeneracy <= IDENTITY_TOL && chen_ok,
        format!(
            "(a) N=3 vs direct {worst_direct:.2e}; (b) degeneracy {worst_degeneracy:.2e}; (c) C-terms {c_terms:?}, Chen {worst_chen:.2e}"
        ),
    )
}

fn criterion_7() -> Outcome {
    let mut worst_sum = 0.0f64;
    let mut worst_fd = 0.0f64;
    for alpha in [1.0, 1.4405, 2.0, 5.0] {
        let c = pekeris_coefficients(alpha).unwrap();
        worst_sum = worst_sum.max((c.c0 + c.c1 + c.c2 - 1.0).abs());
        let f = |r: f64| c.c0 + c.c1 * (-alpha * r).exp() + c.c2 * (-2.0 * alpha * r).exp();
        // f - C0 - C1 - C2, evaluated without cancellation; differs from f by a constant
        let g = |r: f64| c.c1 * (-alpha * r).exp_m1() + c.c2 * (-2.0 * alpha * r).exp_m1();
        let h = FD_STEP;
        let d1 = (g(h) - g(-h)) / (2.0 * h);
        let d2 = (g(h) - 2.0 * g(0.0) + g(-h)) / (h * h);
        for err in [(f(0.0) - 1.0).abs(), (d1 + 2.0).abs(), (d2 - 6.0).abs()] {
            worst_fd = worst_fd.max(err);
        }
    }
    check(
        worst_sum <= 10.0 * f64::EPSILON && worst_fd <= FD_TOL,
        format!("max |C0+C1+C2-1| = {worst_sum:.1e}; max derivative error {worst_fd:.2e}"),
    )
}

fn criterion_8() -> Outcome {
    let mol = h2();
    let mut gaps = Vec::new();
    for ell in [1, 5, 10, 15] {
        let closed = energy(&mol, 0, ell, 3).unwrap();
        let exact = oracle_energy(&mol, 0, ell, 3, Variant::ExactCentrifugal, ORACLE_ENERGY_TOL)
            .map_err(|e| format!("exact oracle failed at ell={ell}: {e}"))?;
        gaps.push(rel(closed, exact.eigenvalue));
    }
    let ok = gaps.windows(2).all(|w| w[1] >= w[0]);
    check(ok, format!("relative gaps at ell=1,5,10,15: {:?}", gaps.iter().map(|g| format!("{g:.3e}")).collect::<Vec<_>>()))
}

fn oscillator(points: usize) -> RadialProblem {
    let pot: Potential = Arc::new(|x: f64| x * x);
    RadialProblem::new(pot, -10.0, 10.0, points, Variant::Custom, 0.5, f64::INFINITY).unwrap()
}

fn order(e1: f64, e2: f64, e3: f64) -> f64 {
    ((e1 - e2) / (e2 - e3)).abs().log2()
}

fn criterion_9() -> Outcome {
    let p = oscillator(10_000);
    let mut worst = 0.0f64;
    for n in 0..3u32 {
        let res = find_eigenvalue(&p, n, (0.0, 3.0), 1e-13).map_err(|e| e.to_string())?;
        worst = worst.max((res.eigenvalue - (n as f64 + 0.5)).abs());
    }
    let ho: Vec<f64> = [1_001, 2_001, 4_001]
        .iter()
        .map(|&pts| find_eigenvalue(&oscillator(pts), 2, (2.0, 3.0), 1e-14).unwrap().eigenvalue)
        .collect();
    let ho_order = order(ho[0], ho[1], ho[2]);

    let mol = h2();
    let e_ref = energy(&mol, 0, 0, 3).unwrap() / mol.energy_scale_eps * 0.9;
    let base = morse_problem(&mol, 0, 3, Variant::PekerisApprox, e_ref, 2_001).map_err(|e| e.to_string())?;
    let h2e: Vec<f64> = [2_001, 4_001, 8_001]
        .iter()
        .map(|&pts| {
            find_eigenvalue(&base.with_grid_points(pts).unwrap(), 0, (-4.6, -4.3), 1e-13)
                .unwrap()
                .eigenvalue
        })
        .collect();
    let h2_order = order(h2e[0], h2e[1], h2e[2]);
    let in_band = |o: f64| (3.5..=4.5).contains(&o);
    check(
        worst <= OSCILLATOR_TOL && in_band(ho_order) && in_band(h2_order),
        format!("max |E - (n+1/2)| = {worst:.2e}; order: oscillator {ho_order:.3}, H2 ground state {h2_order:.3}"),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("1 closed form vs Pekeris-ODE oracle", criterion_1),
        ("2 ground-state magnitude", criterion_2),
        ("3 bound-state count", criterion_3),
        ("4 normalization", criterion_4),
        ("5 y-form ODE residual", criterion_5),
        ("6 dimensional identities", criterion_6),
        ("7 Pekeris identities", criterion_7),
        ("8 Pekeris-vs-exact gap growth", criterion_8),
        ("9 Numerov self-test", criterion_9),
    ];
    let mut failures = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  criterion {name}: {detail} [{secs:.2} s]"),
            Err(detail) => {
                failures += 1;
                println!("FAIL  criterion {name}: {detail} [{secs:.2} s]");
            }
        }
    }
    println!("{} of 9 acceptance criteria passed", 9 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
