//! Molecule registry: the built-in H2 parameter set and a JSON exchange
//! format.
//!
//! ```json
//! { "schema_version": 1,
//!   "molecules": [ { "name": "H2", "D_eV": 4.7446, "alpha": 1.4405,
//!                    "eps_eV": 0.0075416, "r0_angstrom": 0.7416,
//!                    "provenance": "..." } ] }
//! ```

use std::collections::HashSet;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spectrum::MoleculeParams;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq)]
pub struct MoleculeFile {
    pub entries: Vec<MoleculeParams>,
    pub source_path: String,
    pub schema_version: u32,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileRepr {
    schema_version: u32,
    molecules: Vec<MoleculeParams>,
}

impl MoleculeFile {
    pub fn empty(source_path: &str) -> Self {
        Self {
            entries: Vec::new(),
            source_path: source_path.to_string(),
            schema_version: SCHEMA_VERSION,
        }
    }

    /// Checks every entry and that names are unique.
    pub fn validate(&self) -> Result<()> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::InvalidEntry {
                entry: self.source_path.clone(),
                message: format!(
                    "unsupported schema_version {} (expected {SCHEMA_VERSION})",
                    self.schema_version
                ),
            });
        }
        let mut seen = HashSet::new();
        for mol in &self.entries {
            mol.validate()?;
            if !seen.insert(mol.name.as_str()) {
                return Err(Error::InvalidEntry {
                    entry: mol.name.clone(),
                    message: "duplicate molecule name".into(),
                });
            }
        }
        Ok(())
    }

    pub fn lookup(&self, name: &str) -> Result<&MoleculeParams> {
        self.entries
            .iter()
            .find(|m| m.name == name)
            .ok_or_else(|| Error::UnknownMolecule(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|m| m.name.as_str())
    }

    /// Appends the entries of `other`; fails without modifying `self` on a
    /// name clash.
    pub fn merge(&mut self, other: MoleculeFile) -> Result<()> {
        for mol in &other.entries {
            if self.lookup(&mol.name).is_ok() {
                return Err(Error::InvalidEntry {
                    entry: mol.name.clone(),
                    message: format!("duplicate molecule name (already defined in {})", self.source_path),
                });
            }
        }
        self.entries.extend(other.entries);
        Ok(())
    }

    pub fn to_json(&self) -> String {
        let repr = FileRepr {
            schema_version: self.schema_version,
            molecules: self.entries.clone(),
        };
        let mut s = serde_json::to_string_pretty(&repr).expect("registry serializes");
        s.push('\n');
        s
    }
}

/// The built-in parameter set. `r0` for H2 is the literature equilibrium
/// bond length; only the normalization constant depends on it.
pub fn builtin_registry() -> MoleculeFile {
    let mut h2 = MoleculeParams::new("H2", 4.7446, 1.4405, 7.5416e-3, 0.7416);
    h2.provenance = "D, alpha, eps: H2 reference set; r0: external literature value".into();
    MoleculeFile {
        entries: vec![h2],
        source_path: "<builtin>".into(),
        schema_version: SCHEMA_VERSION,
    }
}

pub fn parse_molecules(text: &str, source_path: &str) -> Result<MoleculeFile> {
    let repr: FileRepr = serde_json::from_str(text).map_err(|source| Error::Parse {
        path: source_path.to_string(),
        source,
    })?;
    let file = MoleculeFile {
        entries: repr.molecules,
        source_path: source_path.to_string(),
        schema_version: repr.schema_version,
    };
    file.validate()?;
    Ok(file)
}

pub fn load_molecules(path: impl AsRef<Path>) -> Result<MoleculeFile> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)?;
    parse_molecules(&text, &path.display().to_string())
}

pub fn save_molecules(file: &MoleculeFile, path: impl AsRef<Path>) -> Result<()> {
    file.validate()?;
    fs::write(path, file.to_json())?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn builtin_h2() {
        let reg = builtin_registry();
        assert_eq!(reg.entries.len(), 1);
        let h2 = reg.lookup("H2").unwrap();
        assert_eq!(h2.alpha, 1.4405);
        assert_eq!(h2.well_depth_d, 4.7446);
        assert_eq!(h2.energy_scale_eps, 7.5416e-3);
        assert_eq!(h2.r0, 0.7416);
        assert!(h2.provenance.contains("external"));
        assert!(matches!(reg.lookup("I2"), Err(Error::UnknownMolecule(_))));
        reg.validate().unwrap();
    }

    #[test]
    fn empty_list_is_valid() {
        let f = parse_molecules(r#"{"schema_version": 1, "molecules": []}"#, "mem").unwrap();
        assert!(f.entries.is_empty());
    }

    #[test]
    fn duplicate_names_rejected() {
        let text = r#"{"schema_version": 1, "molecules": [
            {"name": "X", "D_eV": 1.0, "alpha": 1.0, "eps_eV": 0.01, "r0_angstrom": 1.0, "provenance": "a"},
            {"name": "X", "D_eV": 2.0, "alpha": 1.0, "eps_eV": 0.01, "r0_angstrom": 1.0, "provenance": "b"}
        ]}"#;
        let err = parse_molecules(text, "mem").unwrap_err().to_string();
        assert!(err.contains("\"X\"") && err.contains("duplicate"), "{err}");
    }

    #[test]
    fn negative_depth_rejected() {
        let text = r#"{"schema_version": 1, "molecules": [
            {"name": "bad", "D_eV": -1.0, "alpha": 1.0, "eps_eV": 0.01, "r0_angstrom": 1.0, "provenance": "x"}
        ]}"#;
        let err = parse_molecules(text, "mem").unwrap_err().to_string();
        assert!(err.contains("well_depth_D must be positive") && err.contains("bad"), "{err}");
    }

    #[test]
    fn parse_errors_carry_location() {
        let text = "{\"schema_version\": 1,\n \"molecules\": [ {\"name\": \"Y\", \"alpha\": 1.0} ] }";
        let err = parse_molecules(text, "mols.json").unwrap_err().to_string();
        assert!(err.contains("mols.json") && err.contains("line 2") && err.contains("D_eV"), "{err}");
        assert!(parse_molecules(r#"{"schema_version": 2, "molecules": []}"#, "m").is_err());
    }

    #[test]
    fn merge_detects_clash() {
        let mut reg = builtin_registry();
        assert!(reg.merge(builtin_registry()).is_err());
        assert_eq!(reg.entries.len(), 1);
        let mut extra = MoleculeFile::empty("extra");
        extra.entries.push(MoleculeParams::new("HCl", 4.6, 2.38, 1.3e-3, 1.27));
        reg.merge(extra).unwrap();
        assert_eq!(reg.names().collect::<Vec<_>>(), ["H2", "HCl"]);
    }

    #[test]
    fn save_and_load() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("mols.json");
        let reg = builtin_registry();
        save_molecules(&reg, &path).unwrap();
        let back = load_molecules(&path).unwrap();
        assert_eq!(back.entries, reg.entries);
    }

    proptest! {
        #[test]
        fn json_roundtrip_is_exact(
            d in 1e-6f64..1e3, alpha in 1e-3f64..50.0, eps in 1e-9f64..1.0, r0 in 1e-3f64..10.0,
        ) {
            let mut f = MoleculeFile::empty("mem");
            f.entries.push(MoleculeParams::new("M", d, alpha, eps, r0));
            let back = parse_molecules(&f.to_json(), "mem").unwrap();
            prop_assert_eq!(back.entries, f.entries);
        }
    }
}
