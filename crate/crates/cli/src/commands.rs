use std::env;
use std::path::Path;

use morse_pekeris::molecules::{load_molecules, save_molecules, MoleculeFile};
use morse_pekeris::oracle::{oracle_energy, Variant};
use morse_pekeris::{
    builtin_registry, discrepancy_profile, lambda_index, spectral_params, spectrum_table, MoleculeParams,
    RadialEigenfunction,
};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::output::{csv_comments, json_document, Cell, Format, OutputSpec, Table};
use crate::CliError;

pub const MOLECULES_ENV: &str = "MORSE_MOLECULES";

/// Built-in entries, then `MORSE_MOLECULES`, then `--molecules`.
pub fn load_registry(extra: Option<&Path>) -> Result<MoleculeFile, CliError> {
    let mut registry = builtin_registry();
    if let Some(path) = env::var_os(MOLECULES_ENV).filter(|p| !p.is_empty()) {
        registry.merge(load_molecules(Path::new(&path))?)?;
    }
    if let Some(path) = extra {
        registry.merge(load_molecules(path)?)?;
    }
    Ok(registry)
}

fn resolve<'a>(registry: &'a MoleculeFile, name: &str) -> Result<&'a MoleculeParams, CliError> {
    registry.lookup(name).map_err(|_| {
        let known: Vec<&str> = registry.names().collect();
        CliError::usage(format!("unknown molecule \"{name}\" (known: {})", known.join(", ")))
    })
}

fn molecule_meta(spec: &OutputSpec, mol: &MoleculeParams) -> Value {
    json!({
        "name": mol.name,
        "D_eV": spec.json_num(mol.well_depth_d),
        "alpha": spec.json_num(mol.alpha),
        "eps_eV": spec.json_num(mol.energy_scale_eps),
        "r0_angstrom": spec.json_num(mol.r0),
    })
}

pub fn spectrum(
    registry: &MoleculeFile,
    name: &str,
    n_max: u32,
    ell_max: u32,
    dimension: u32,
    spec: &OutputSpec,
) -> Result<(), CliError> {
    let mol = resolve(registry, name)?;
    lambda_index(0, dimension)?;
    let table = spectrum_table(mol, n_max, ell_max, dimension);
    if table.states.is_empty() {
        eprintln!("warning: no bound states for {name} with n <= {n_max}, ell <= {ell_max}, N = {dimension}");
    }

    let mut out = Table::new(vec!["n", "ell", "N", "lambda", "kappa", "energy_eV"]);
    for s in &table.states {
        out.push(vec![
            Cell::Int(s.n.into()),
            Cell::Int(s.ell.into()),
            Cell::Int(s.dimension.into()),
            Cell::Real(s.params.lambda),
            Cell::Real(s.params.kappa),
            Cell::Real(s.energy),
        ]);
    }
    let text = match spec.format {
        Format::Csv => out.csv(spec),
        Format::Json => {
            let meta = json!({
                "command": "spectrum",
                "molecule": molecule_meta(spec, mol),
                "n_max": n_max,
                "ell_max": ell_max,
                "N": dimension,
                "skipped": table.skipped.len(),
            });
            json_document(meta, out.json_rows(spec))
        }
    };
    spec.emit(&text)
}

pub fn wavefunction(
    registry: &MoleculeFile,
    name: &str,
    (n, ell, dimension): (u32, u32, u32),
    (r_min, r_max, samples): (f64, f64, usize),
    spec: &OutputSpec,
) -> Result<(), CliError> {
    let mol = resolve(registry, name)?;
    if samples < 2 {
        return Err(CliError::usage(format!("samples must be at least 2, got {samples}")));
    }
    if !(r_min.is_finite() && r_max.is_finite() && r_min < r_max) {
        return Err(CliError::usage(format!("need r_min < r_max, got [{r_min}, {r_max}]")));
    }
    let params = spectral_params(mol, ell, dimension)?;
    let count = params.bound_state_count();
    if n >= count {
        let range = if count == 0 {
            "none".to_string()
        } else {
            format!("0..={}", count - 1)
        };
        return Err(CliError::usage(format!(
            "n={n} is not bound for ell={ell}, N={dimension}; valid n: {range}"
        )));
    }
    let eig = RadialEigenfunction::for_molecule(mol, n, ell, dimension)?;

    let mut out = Table::new(vec!["r", "y", "R"]);
    for r in morse_pekeris::pekeris::uniform_grid(r_min, r_max, samples) {
        out.push(vec![Cell::Real(r), Cell::Real(eig.y_of_r(r)), Cell::Real(eig.at_r(r))]);
    }
    let text = match spec.format {
        Format::Csv => {
            let mut s = csv_comments(&[
                ("molecule", mol.name.clone()),
                ("n", n.to_string()),
                ("ell", ell.to_string()),
                ("N", dimension.to_string()),
                ("lambda", params.lambda.to_string()),
                ("kappa", spec.num(params.kappa)),
                ("energy_eV", spec.num(eig.state.energy)),
                ("norm_constant", spec.num(eig.norm_constant)),
            ]);
            s.push_str(&out.csv(spec));
            s
        }
        Format::Json => {
            let meta = json!({
                "command": "wavefunction",
                "molecule": molecule_meta(spec, mol),
                "n": n,
                "ell": ell,
                "N": dimension,
                "lambda": params.lambda,
                "kappa": spec.json_num(params.kappa),
                "energy_eV": spec.json_num(eig.state.energy),
                "norm_constant": spec.json_num(eig.norm_constant),
            });
            json_document(meta, out.json_rows(spec))
        }
    };
    spec.emit(&text)
}

pub fn pekeris(alphas: &[f64], r_min: f64, r_max: f64, samples: usize, spec: &OutputSpec) -> Result<(), CliError> {
    let mut blocks = Vec::with_capacity(alphas.len());
    for &alpha in alphas {
        let profile = discrepancy_profile(alpha, r_min, r_max, samples)?;
        let mut t = Table::new(vec!["r", "exact", "pekeris", "rel_err"]);
        for i in 0..profile.len() {
            t.push(vec![
                Cell::Real(profile.r_values[i]),
                Cell::Real(profile.exact[i]),
                Cell::Real(profile.approx[i]),
                Cell::Real(profile.relative_error[i]),
            ]);
        }
        blocks.push((alpha, t));
    }
    let text = match spec.format {
        Format::Csv => blocks
            .iter()
            .map(|(alpha, t)| format!("# alpha={alpha}\n{}", t.csv(spec)))
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Json => {
            let rows = blocks
                .iter()
                .map(|(alpha, t)| json!({ "alpha": alpha, "rows": t.json_rows(spec) }))
                .collect();
            let meta = json!({ "command": "pekeris", "r_min": r_min, "r_max": r_max, "samples": samples });
            json_document(meta, rows)
        }
    };
    spec.emit(&text)
}

struct ValidationCell {
    n: u32,
    ell: u32,
    closed: Result<f64, String>,
    pekeris: Result<f64, String>,
    exact: Result<f64, String>,
}

pub fn validate(
    registry: &MoleculeFile,
    name: &str,
    (n_max, ell_max, dimension): (u32, u32, u32),
    tol: f64,
    oracle_tol: f64,
    spec: &OutputSpec,
) -> Result<(), CliError> {
    let mol = resolve(registry, name)?;
    lambda_index(0, dimension)?;
    if !(tol > 0.0) || !(oracle_tol > 0.0) {
        return Err(CliError::usage("tolerances must be positive"));
    }
    let cells: Vec<(u32, u32)> = (0..=ell_max)
        .flat_map(|ell| (0..=n_max).map(move |n| (ell, n)))
        .collect();
    let results: Vec<ValidationCell> = cells
        .par_iter()
        .map(|&(ell, n)| {
            let closed = morse_pekeris::energy(mol, n, ell, dimension).map_err(|e| e.to_string());
            let oracle = |v| {
                oracle_energy(mol, n, ell, dimension, v, oracle_tol)
                    .map(|r| r.eigenvalue)
                    .map_err(|e| e.to_string())
            };
            let (pekeris, exact) = match closed {
                Ok(_) => (oracle(Variant::PekerisApprox), oracle(Variant::ExactCentrifugal)),
                Err(_) => (Err("skipped".into()), Err("skipped".into())),
            };
            ValidationCell {
                n,
                ell,
                closed,
                pekeris,
                exact,
            }
        })
        .collect();

    let rel = |a: f64, b: f64| ((a - b) / b).abs();
    let mut rows = Vec::new();
    let mut all_pass = true;
    let mut oracle_failed = false;
    let mut max_pekeris_gap = 0.0f64;
    let mut max_exact_gap = 0.0f64;
    for c in &results {
        let mut row = json!({ "n": c.n, "ell": c.ell, "N": dimension });
        let Ok(closed) = c.closed else {
            row["status"] = json!("not_bound");
            row["detail"] = json!(c.closed.as_ref().unwrap_err());
            rows.push(row);
            continue;
        };
        row["closed_eV"] = spec.json_num(closed);
        let mut status = "pass";
        match &c.pekeris {
            Ok(e) => {
                let gap = rel(closed, *e);
                max_pekeris_gap = max_pekeris_gap.max(gap);
                row["oracle_pekeris_eV"] = spec.json_num(*e);
                row["gap_pekeris"] = spec.json_num(gap);
                row["pass"] = json!(gap <= tol);
                if gap > tol {
                    status = "fail";
                    all_pass = false;
                }
            }
            Err(msg) => {
                status = "oracle_failed";
                row["detail"] = json!(msg);
                oracle_failed = true;
                all_pass = false;
            }
        }
        match &c.exact {
            Ok(e) => {
                let gap = rel(closed, *e);
                max_exact_gap = max_exact_gap.max(gap);
                row["oracle_exact_eV"] = spec.json_num(*e);
                row["gap_exact"] = spec.json_num(gap);
            }
            Err(msg) => {
                row["oracle_exact_eV"] = Value::Null;
                row["exact_detail"] = json!(msg);
            }
        }
        row["status"] = json!(status);
        rows.push(row);
    }

    // growth of the closed-vs-exact gap with ell, per n
    let monotone: Vec<Value> = (0..=n_max)
        .map(|n| {
            let gaps: Vec<f64> = results
                .iter()
                .filter(|c| c.n == n)
                .filter_map(|c| match (&c.closed, &c.exact) {
                    (Ok(a), Ok(b)) => Some(rel(*a, *b)),
                    _ => None,
                })
                .collect();
            json!({ "n": n, "exact_gap_nondecreasing_in_ell": gaps.windows(2).all(|w| w[1] >= w[0]) })
        })
        .collect();

    let meta = json!({
        "command": "validate",
        "molecule": molecule_meta(spec, mol),
        "n_max": n_max,
        "ell_max": ell_max,
        "N": dimension,
        "tol": tol,
        "oracle_tol_eV": oracle_tol,
        "summary": {
            "all_pass": all_pass,
            "oracle_failed": oracle_failed,
            "max_gap_pekeris": spec.json_num(max_pekeris_gap),
            "max_gap_exact": spec.json_num(max_exact_gap),
            "exact_gap_growth": monotone,
        },
    });
    spec.emit(&json_document(meta, rows))?;
    eprintln!(
        "validate {name}: max closed-vs-pekeris gap {:.3e}, max closed-vs-exact gap {:.3e}: {}",
        max_pekeris_gap,
        max_exact_gap,
        if all_pass { "PASS" } else { "FAIL" }
    );
    if oracle_failed {
        return Err(CliError::validation("oracle bracketing failed for at least one entry"));
    }
    if !all_pass {
        return Err(CliError::validation(format!("closed-form gaps exceed tol {tol}")));
    }
    Ok(())
}

fn listing(registry: &MoleculeFile) -> String {
    let mut s = String::from("name,D_eV,alpha,eps_eV,r0_angstrom,provenance\n");
    for m in &registry.entries {
        s.push_str(&format!(
            "{},{},{},{},{},\"{}\"\n",
            m.name,
            m.well_depth_d,
            m.alpha,
            m.energy_scale_eps,
            m.r0,
            m.provenance.replace('"', "\"\"")
        ));
    }
    s
}

pub fn list_molecules(registry: &MoleculeFile, format: Format) -> Result<(), CliError> {
    let text = match format {
        Format::Csv => listing(registry),
        Format::Json => registry.to_json(),
    };
    print!("{text}");
    Ok(())
}

pub fn add_molecules(mut registry: MoleculeFile, file: &Path, save: Option<&Path>) -> Result<(), CliError> {
    let extra = load_molecules(file)?;
    let mut added = extra.clone();
    registry.merge(extra)?;
    if let Some(path) = save {
        added.source_path = path.display().to_string();
        save_molecules(&added, path)?;
    }
    print!("{}", listing(&registry));
    Ok(())
}
