//! Tables embedded from the reference data set.

use crate::table::MulTable;

/// The graded sedenion table, 15 x 15.
pub const SEDENION_TABLE_CSV: &str = include_str!("../data/sedenion_table.csv");

/// Seven octonion-like 3-forms with their (A, B, C, X) counts.
pub const OCTONION_LIKE_FORMS: &str = include_str!("../data/octonion_like_forms.txt");

pub fn sedenion_table() -> MulTable {
    MulTable::from_csv(SEDENION_TABLE_CSV).expect("embedded table parses")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OctonionLikeRow {
    pub name: String,
    pub counts: [u32; 4],
    pub form: String,
}

/// Parses lines of `name A B C X form...`; `#` starts a comment.
pub fn parse_octonion_like_forms(text: &str) -> Result<Vec<OctonionLikeRow>, String> {
    let mut out = Vec::new();
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        let mut it = line.split_whitespace();
        let name = it.next().ok_or("missing name")?.to_string();
        let mut counts = [0u32; 4];
        for c in counts.iter_mut() {
            *c = it.next().and_then(|s| s.parse().ok()).ok_or_else(|| format!("bad counts in `{line}`"))?;
        }
        let form = it.collect::<Vec<_>>().join(" ");
        out.push(OctonionLikeRow { name, counts, form });
    }
    Ok(out)
}

pub fn octonion_like_forms() -> Vec<OctonionLikeRow> {
    parse_octonion_like_forms(OCTONION_LIKE_FORMS).expect("embedded forms parse")
}

/// The doubling rule that reproduces `table`, if exactly one does.
pub fn select_rule(table: &MulTable) -> Option<crate::DoublingRule> {
    let matching: Vec<_> = crate::DoublingRule::ALL
        .into_iter()
        .filter(|rule| {
            (1..=table.size() as u32).all(|a| {
                (1..=table.size() as u32).all(|b| {
                    let (s, r) = rule.basis_mul(table.level, a, b);
                    table.get(crate::CdBasis(a), crate::CdBasis(b)) == (s, crate::CdBasis(r))
                })
            })
        })
        .collect();
    (matching.len() == 1).then(|| matching[0])
}
