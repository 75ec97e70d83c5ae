//! Transcribed forms.

use std::collections::BTreeMap;

use sedenion_cd::AlgebraTag;
use sedenion_core::{parse_form, Blade, Multivector};

use crate::CalibrationError;

pub const FORMS: &str = include_str!("../data/forms.txt");
pub const SUBALGEBRA_FORMS: &str = include_str!("../data/subalgebra_forms.txt");

/// `name: terms` lines, blank lines and `#` comments skipped.
pub fn parse_named_forms(text: &str) -> Result<BTreeMap<String, String>, CalibrationError> {
    let mut out = BTreeMap::new();
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        let (name, terms) = line
            .split_once(':')
            .ok_or_else(|| CalibrationError::Fixture(format!("missing `:` in `{line}`")))?;
        out.insert(name.trim().to_string(), terms.trim().to_string());
    }
    Ok(out)
}

/// A transcribed form by name, in the given dimension.
pub fn form(name: &str, dim: u8) -> Multivector {
    let forms = parse_named_forms(FORMS).expect("embedded fixture parses");
    let text = forms.get(name).unwrap_or_else(|| panic!("embedded fixture has `{name}`"));
    parse_form(text, dim).expect("embedded fixture parses")
}

/// One row of the subalgebra table: the 7-form, its printed 3-form, class
/// and geometric label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubalgebraRow {
    pub index: u8,
    pub phi: Blade,
    pub theta: Multivector,
    pub class: AlgebraTag,
    pub label: String,
}

pub fn parse_subalgebra_rows(text: &str) -> Result<Vec<SubalgebraRow>, CalibrationError> {
    let bad = |l: &str| CalibrationError::Fixture(format!("bad subalgebra row `{l}`"));
    let mut rows = Vec::new();
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        let cols: Vec<&str> = line.split('|').map(str::trim).collect();
        if cols.len() != 4 {
            return Err(bad(line));
        }
        let index: u8 = cols[0].parse().map_err(|_| bad(line))?;
        let phi = Blade::from_hex(cols[1].trim_start_matches('+')).ok_or_else(|| bad(line))?;
        let theta = parse_form(cols[2], 15).map_err(|_| bad(line))?;
        let (class, label) = cols[3].split_once(' ').ok_or_else(|| bad(line))?;
        let class = class.parse().map_err(|_| bad(line))?;
        rows.push(SubalgebraRow { index, phi, theta, class, label: label.to_string() });
    }
    Ok(rows)
}

pub fn subalgebra_rows() -> Vec<SubalgebraRow> {
    parse_subalgebra_rows(SUBALGEBRA_FORMS).expect("embedded fixture parses")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_parse() {
        let forms = parse_named_forms(FORMS).unwrap();
        assert_eq!(forms.len(), 9);
        let rows = subalgebra_rows();
        assert_eq!(rows.len(), 15);
        assert!(rows.iter().all(|r| r.theta.len() == 7 && r.phi.grade() == 7));
        assert_eq!(rows[11].label, "Folly");
    }

    #[test]
    fn malformed_rows_are_rejected() {
        assert!(parse_subalgebra_rows("1 | +1234567 | +123").is_err());
        assert!(parse_named_forms("theta +123").is_err());
    }
}
