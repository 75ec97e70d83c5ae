//! Transcribed invariant tables and their resolution against generation.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use sedenion_core::form::parse_terms;
use sedenion_core::rational::parse_rational;
use sedenion_core::{Blade, Multivector, Rational};

use crate::candidate::{primaries, Candidate, InvFamily, Primary, VARIANTS};
use crate::decomposition::stabilizer_check;
use crate::invariance::{invariance, map_filter, Invariance};
use crate::InvariantError;

pub const INVARIANTS_A: &str = include_str!("../data/invariants_a.txt");
pub const INVARIANTS_OC: &str = include_str!("../data/invariants_oc.txt");
pub const INVARIANTS_PC: &str = include_str!("../data/invariants_pc.txt");
pub const INVARIANTS_OM: &str = include_str!("../data/invariants_om.txt");
pub const INVARIANTS_PM: &str = include_str!("../data/invariants_pm.txt");
pub const G2_CL7: &str = include_str!("../data/g2_cl7.txt");
pub const G2_CL15: &str = include_str!("../data/g2_cl15.txt");

pub fn table_text(f: InvFamily) -> &'static str {
    match f {
        InvFamily::A => INVARIANTS_A,
        InvFamily::OC => INVARIANTS_OC,
        InvFamily::PC => INVARIANTS_PC,
        InvFamily::OM => INVARIANTS_OM,
        InvFamily::PM => INVARIANTS_PM,
    }
}

/// A table: optional `# scale c` header, then rows of signed 2-blades.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureTable {
    pub scale: Rational,
    pub rows: Vec<Vec<(i8, Blade)>>,
}

fn signed_terms(line: &str) -> Result<Vec<(i8, Blade)>, InvariantError> {
    let terms = parse_terms(line).map_err(|e| InvariantError::Parse(e.to_string()))?;
    terms
        .into_iter()
        .map(|(b, c)| {
            if c == Rational::from_integer(1.into()) {
                Ok((1, b))
            } else if c == Rational::from_integer((-1).into()) {
                Ok((-1, b))
            } else {
                Err(InvariantError::Parse(format!("non-unit coefficient in `{line}`")))
            }
        })
        .collect()
}

fn scale_line(line: &str) -> Option<Result<Rational, InvariantError>> {
    let rest = line.strip_prefix('#')?.trim().strip_prefix("scale")?;
    Some(parse_rational(rest.trim()).ok_or_else(|| InvariantError::Parse(format!("bad scale `{line}`"))))
}

pub fn parse_table(text: &str) -> Result<FixtureTable, InvariantError> {
    let mut scale = Rational::from_integer(1.into());
    let mut rows = Vec::new();
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
        if let Some(s) = scale_line(line) {
            scale = s?;
        } else if !line.starts_with('#') {
            rows.push(signed_terms(line)?);
        }
    }
    Ok(FixtureTable { scale, rows })
}

/// Labelled rows `X: terms`, as in the G2 basis tables.
pub fn parse_labelled(text: &str) -> Result<(Rational, Vec<(String, Vec<(i8, Blade)>)>), InvariantError> {
    let mut scale = Rational::from_integer(1.into());
    let mut rows = Vec::new();
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
        if let Some(s) = scale_line(line) {
            scale = s?;
            continue;
        }
        if line.starts_with('#') {
            continue;
        }
        let (label, terms) =
            line.split_once(':').ok_or_else(|| InvariantError::Parse(format!("missing label in `{line}`")))?;
        rows.push((label.trim().to_string(), signed_terms(terms)?));
    }
    Ok((scale, rows))
}

/// Signed 2-blade rows as multivectors with the table scale.
pub fn rows_as_multivectors(dim: u8, scale: &Rational, rows: &[Vec<(i8, Blade)>]) -> Vec<Multivector> {
    rows.iter()
        .map(|r| {
            let terms = r.iter().map(|&(s, b)| (b, scale * Rational::from_integer(s.into())));
            Multivector::from_terms(dim, terms).expect("fits")
        })
        .collect()
}

/// A fixture row matched to its primary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolvedEntry {
    pub family: InvFamily,
    /// 1-based row within its table.
    pub row: usize,
    /// Printed signs, rearranged to generation order.
    pub printed: Candidate,
    /// Printed order differs from generation order.
    pub reordered: bool,
    pub printed_invariance: Invariance,
    /// The representative used downstream.
    pub resolved: Candidate,
}

impl ResolvedEntry {
    pub fn corrected(&self) -> bool {
        self.printed != self.resolved
    }
}

fn find_primary(family: InvFamily, terms: &[(i8, Blade)], all: &[Primary]) -> Option<(Primary, [i8; 4], bool)> {
    let mut set: Vec<Blade> = terms.iter().map(|t| t.1).collect();
    set.sort();
    let p = all.iter().find(|p| {
        let mut q = p.pairs.to_vec();
        q.sort();
        q == set && p.family() == family
    })?;
    let mut signs = [0i8; 4];
    for (k, b) in p.pairs.iter().enumerate() {
        signs[k] = terms.iter().find(|t| t.1 == *b)?.0;
    }
    let reordered = terms.iter().map(|t| t.1).ne(p.pairs.iter().copied());
    Some((*p, signs, reordered))
}

/// Map filter outcomes over the four variants of a representative.
pub fn map_filter_profile(c: &Candidate) -> [bool; 4] {
    VARIANTS.map(|v| map_filter(&c.times(v)))
}

/// Choice among the four single-sign corrections of an odd-parity row: prefer
/// a stabiliser pass (octonion cyclic family only), then the map filter profile
/// `(pass, pass, pass, fail)`, then all signs equal. Ties go to the earliest
/// flipped position.
pub fn correct(c: &Candidate) -> Candidate {
    let score = |b: &Candidate| {
        let stab = c.family() == InvFamily::OC && stabilizer_check(b);
        let profile = map_filter_profile(b) == [true, true, true, false];
        let uniform = b.signs.iter().all(|&s| s == b.signs[0]);
        (stab, profile, uniform)
    };
    let mut best: Option<(Candidate, (bool, bool, bool))> = None;
    for k in 0..4 {
        let mut pattern = [1i8; 4];
        pattern[k] = -1;
        let flipped = c.times(pattern);
        let s = score(&flipped);
        if best.as_ref().map_or(true, |(_, bs)| s > *bs) {
            best = Some((flipped, s));
        }
    }
    best.expect("four flips").0
}

pub fn resolve_table(family: InvFamily) -> Result<Vec<ResolvedEntry>, InvariantError> {
    resolve_table_from(family, table_text(family))
}

pub fn resolve_table_from(family: InvFamily, text: &str) -> Result<Vec<ResolvedEntry>, InvariantError> {
    let table = parse_table(text)?;
    let all = primaries();
    table
        .rows
        .iter()
        .enumerate()
        .map(|(i, terms)| {
            let (primary, signs, reordered) = find_primary(family, terms, &all)
                .ok_or_else(|| InvariantError::Unmatched(family.to_string(), i + 1))?;
            let printed = primary.with_signs(signs);
            let printed_invariance = invariance(&printed);
            let resolved = if printed_invariance.is_strict() { printed } else { correct(&printed) };
            Ok(ResolvedEntry { family, row: i + 1, printed, reordered, printed_invariance, resolved })
        })
        .collect()
}

/// All five tables, resolved.
pub fn resolved_fixtures() -> Result<BTreeMap<InvFamily, Vec<ResolvedEntry>>, InvariantError> {
    FixtureSet::embedded().resolve()
}

/// Table texts, embedded or supplied for audit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureSet {
    pub tables: BTreeMap<InvFamily, String>,
    pub g2_cl15: String,
    pub g2_cl7: String,
}

impl FixtureSet {
    pub fn embedded() -> FixtureSet {
        FixtureSet {
            tables: InvFamily::ALL.into_iter().map(|f| (f, table_text(f).to_string())).collect(),
            g2_cl15: G2_CL15.to_string(),
            g2_cl7: G2_CL7.to_string(),
        }
    }

    /// File name of each table inside a fixture directory.
    pub fn file_name(f: InvFamily) -> &'static str {
        match f {
            InvFamily::A => "invariants_a.txt",
            InvFamily::OC => "invariants_oc.txt",
            InvFamily::PC => "invariants_pc.txt",
            InvFamily::OM => "invariants_om.txt",
            InvFamily::PM => "invariants_pm.txt",
        }
    }

    pub fn resolve(&self) -> Result<BTreeMap<InvFamily, Vec<ResolvedEntry>>, InvariantError> {
        self.tables.iter().map(|(&f, text)| Ok((f, resolve_table_from(f, text)?))).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_sizes() {
        for (f, n) in [(InvFamily::A, 7), (InvFamily::OC, 21), (InvFamily::PC, 21), (InvFamily::OM, 28), (InvFamily::PM, 28)] {
            let t = parse_table(table_text(f)).unwrap();
            assert_eq!(t.rows.len(), n);
            assert!(t.rows.iter().all(|r| r.len() == 4));
        }
    }

    #[test]
    fn bad_rows() {
        assert!(parse_table("# scale x\n+12 +34").is_err());
        assert!(parse_table("+(2)e12").is_err());
        assert!(parse_labelled("+12 -34").is_err());
    }

    #[test]
    fn g2_tables() {
        let (s, rows) = parse_labelled(G2_CL15).unwrap();
        assert_eq!(s, Rational::new(1.into(), 2.into()));
        assert_eq!(rows.len(), 14);
        assert_eq!(rows[0].0, "A");
        assert_eq!(parse_labelled(G2_CL7).unwrap().1.len(), 14);
    }
}
