//! Run options and fixture overrides.

use std::fs;
use std::path::Path;

use sedenion_cd::fixtures::{OCTONION_LIKE_FORMS, SEDENION_TABLE_CSV};
use sedenion_invariants::candidate::InvFamily;
use sedenion_invariants::fixtures::FixtureSet;

use crate::CliError;

/// Fixture texts. Files found in an override directory replace the embedded
/// copies; missing files keep them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixtures {
    pub sedenion_table: String,
    pub octonion_like_forms: String,
    pub invariants: FixtureSet,
    /// Files taken from the override directory.
    pub overridden: Vec<String>,
}

impl Default for Fixtures {
    fn default() -> Fixtures {
        Fixtures {
            sedenion_table: SEDENION_TABLE_CSV.to_string(),
            octonion_like_forms: OCTONION_LIKE_FORMS.to_string(),
            invariants: FixtureSet::embedded(),
            overridden: Vec::new(),
        }
    }
}

impl Fixtures {
    pub fn from_dir(dir: &Path) -> Result<Fixtures, CliError> {
        if !dir.is_dir() {
            return Err(CliError::Io(format!("{} is not a directory", dir.display())));
        }
        let mut fx = Fixtures::default();
        let mut overridden = Vec::new();
        let mut load = |name: &str, slot: &mut String| -> Result<(), CliError> {
            let path = dir.join(name);
            if path.exists() {
                *slot = fs::read_to_string(&path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
                overridden.push(name.to_string());
            }
            Ok(())
        };
        load("sedenion_table.csv", &mut fx.sedenion_table)?;
        load("octonion_like_forms.txt", &mut fx.octonion_like_forms)?;
        for f in InvFamily::ALL {
            load(FixtureSet::file_name(f), fx.invariants.tables.get_mut(&f).expect("all families"))?;
        }
        load("g2_cl15.txt", &mut fx.invariants.g2_cl15)?;
        load("g2_cl7.txt", &mut fx.invariants.g2_cl7)?;
        fx.overridden = overridden;
        Ok(fx)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Options {
    /// Accept printed invariant rows that are invariant up to term signs,
    /// without correcting them.
    pub parity_relaxed: bool,
    /// Seed for sampled checks.
    pub seed: u64,
    pub fixtures: Fixtures,
}

impl Default for Options {
    fn default() -> Options {
        Options { parity_relaxed: false, seed: 0, fixtures: Fixtures::default() }
    }
}
