//! Lie closure of the signed invariant families.
//!
//! Products are the half commutator `[x, y] = (xy - yx)/2` of the 2-forms
//! `q`. A result with exactly two terms is `nz`; any other result is looked up,
//! up to scale and sign, among the 420 signed family members.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use sedenion_core::rational::frac;
use sedenion_core::{Blade, Multivector, Rational, Span};

use crate::candidate::{Candidate, InvFamily, VARIANTS};
use crate::fixtures::{resolved_fixtures, ResolvedEntry};
use crate::InvariantError;

pub type FamilyKey = (InvFamily, u8);

/// Members of each `(family, variant)`, built from the resolved fixtures.
#[derive(Debug, Clone)]
pub struct SignedFamilies {
    pub members: BTreeMap<FamilyKey, Vec<Candidate>>,
    lookup: BTreeMap<Vec<(Blade, Rational)>, BTreeSet<FamilyKey>>,
}

fn normal_key(m: &Multivector) -> Vec<(Blade, Rational)> {
    let (_, c0) = m.terms().next().expect("non-zero");
    let k = frac(1, 2) / c0.clone();
    let k = if k < Rational::from_integer(0.into()) { -k } else { k };
    m.scale(&k).terms().map(|(b, c)| (b, c.clone())).collect()
}

impl SignedFamilies {
    pub fn from_fixtures() -> Result<SignedFamilies, InvariantError> {
        Ok(SignedFamilies::from_resolved(&resolved_fixtures()?))
    }

    pub fn from_resolved(resolved: &BTreeMap<InvFamily, Vec<ResolvedEntry>>) -> SignedFamilies {
        let mut members: BTreeMap<FamilyKey, Vec<Candidate>> = BTreeMap::new();
        for (&family, entries) in resolved {
            for (v, pattern) in VARIANTS.iter().enumerate() {
                members.insert((family, v as u8 + 1), entries.iter().map(|e| e.resolved.times(*pattern)).collect());
            }
        }
        let mut lookup: BTreeMap<_, BTreeSet<FamilyKey>> = BTreeMap::new();
        for (key, cs) in &members {
            for c in cs {
                let q = c.q();
                lookup.entry(normal_key(&q)).or_default().insert(*key);
                lookup.entry(normal_key(&-&q)).or_default().insert(*key);
            }
        }
        SignedFamilies { members, lookup }
    }

    pub fn get(&self, key: FamilyKey) -> &[Candidate] {
        self.members.get(&key).map_or(&[], Vec::as_slice)
    }

    /// Family keys whose members match `m` up to scale and sign.
    pub fn classify(&self, m: &Multivector) -> Option<&BTreeSet<FamilyKey>> {
        if m.is_zero() {
            return None;
        }
        let mut k = normal_key(m);
        if let Some(hit) = self.lookup.get(&k) {
            return Some(hit);
        }
        for t in &mut k {
            t.1 = -t.1.clone();
        }
        self.lookup.get(&k)
    }
}

/// A family-level label: `nz`, or a set of `(family, variant)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CellLabel {
    Nz,
    Families(BTreeSet<FamilyKey>),
}

impl fmt::Display for CellLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let set = match self {
            CellLabel::Nz => return f.write_str("nz"),
            CellLabel::Families(s) => s,
        };
        if set.is_empty() {
            return f.write_str("0");
        }
        let mut by_family: BTreeMap<InvFamily, Vec<u8>> = BTreeMap::new();
        for &(fam, v) in set {
            by_family.entry(fam).or_default().push(v);
        }
        let parts: Vec<String> = InvFamily::ALL
            .iter()
            .filter_map(|fam| by_family.get(fam).map(|vs| (fam, vs)))
            .map(|(fam, vs)| {
                if vs.len() == 4 {
                    fam.to_string()
                } else {
                    let v: Vec<String> = vs.iter().map(u8::to_string).collect();
                    format!("{fam}({})", v.join("+"))
                }
            })
            .collect();
        f.write_str(&parts.join("+"))
    }
}

impl FromStr for CellLabel {
    type Err = InvariantError;

    /// `nz`, or `+`-joined `FAM` / `FAM(v+v..)` items, e.g. `OC(3+4)+PC`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "nz" {
            return Ok(CellLabel::Nz);
        }
        let bad = || InvariantError::Parse(format!("bad cell label `{s}`"));
        if s.is_empty() {
            return Err(bad());
        }
        let mut set = BTreeSet::new();
        let mut rest = s;
        while !rest.is_empty() {
            let end = rest.find(['(', '+']).unwrap_or(rest.len());
            let fam: InvFamily = rest[..end].parse()?;
            rest = &rest[end..];
            if let Some(inner) = rest.strip_prefix('(') {
                let close = inner.find(')').ok_or_else(bad)?;
                for v in inner[..close].split('+') {
                    let v: u8 = v.parse().map_err(|_| bad())?;
                    if !(1..=4).contains(&v) {
                        return Err(bad());
                    }
                    set.insert((fam, v));
                }
                rest = &inner[close + 1..];
            } else {
                set.extend((1..=4).map(|v| (fam, v)));
            }
            if let Some(r) = rest.strip_prefix('+') {
                rest = r;
                if rest.is_empty() {
                    return Err(bad());
                }
            } else if !rest.is_empty() {
                return Err(bad());
            }
        }
        Ok(CellLabel::Families(set))
    }
}

/// Aggregate of all commutators between two member sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellOutcome {
    pub label: CellLabel,
    pub products: usize,
    pub zero: usize,
    pub two_term: usize,
    /// Results neither two-term nor found among the family members.
    pub unmatched: usize,
    pub hits: BTreeSet<FamilyKey>,
}

pub fn commutator_cell(fams: &SignedFamilies, left: &[Candidate], right: &[Candidate]) -> (CellOutcome, Vec<Multivector>) {
    let results: Vec<Multivector> = left
        .par_iter()
        .flat_map_iter(|a| {
            let qa = a.q();
            right.iter().map(move |b| qa.commutator(&b.q()))
        })
        .collect();
    let mut out = CellOutcome {
        label: CellLabel::Nz,
        products: results.len(),
        zero: 0,
        two_term: 0,
        unmatched: 0,
        hits: BTreeSet::new(),
    };
    for r in &results {
        if r.is_zero() {
            out.zero += 1;
        } else if r.len() == 2 {
            out.two_term += 1;
        } else if let Some(keys) = fams.classify(r) {
            out.hits.extend(keys);
        } else {
            out.unmatched += 1;
        }
    }
    out.label = if out.two_term > 0 { CellLabel::Nz } else { CellLabel::Families(out.hits.clone()) };
    (out, results)
}

/// The four same-family tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ClosureTable {
    A,
    OC,
    /// Octonion and P4 mixed invariants together.
    M,
    PC,
}

impl ClosureTable {
    pub const ALL: [ClosureTable; 4] = [ClosureTable::A, ClosureTable::OC, ClosureTable::M, ClosureTable::PC];

    pub fn families(self) -> &'static [InvFamily] {
        match self {
            ClosureTable::A => &[InvFamily::A],
            ClosureTable::OC => &[InvFamily::OC],
            ClosureTable::M => &[InvFamily::OM, InvFamily::PM],
            ClosureTable::PC => &[InvFamily::PC],
        }
    }

    /// Published labels, row `alpha`, column `beta`.
    pub fn expected(self) -> [[&'static str; 4]; 4] {
        match self {
            ClosureTable::A => [
                ["A(1+2)", "A(1+2+3)", "A(2+3)", "A(4)"],
                ["A(1+2+3)", "A(1+2)", "A(2+3)", "A(4)"],
                ["A(2+3)", "A(2+3)", "A(1+2+3)", "A(4)"],
                ["A(4)", "A(4)", "A(4)", "A(1+2+3)"],
            ],
            ClosureTable::OC => [
                ["OC(1)", "OC(2)", "OC(1+3)", "OC(2+4)"],
                ["OC(2)", "OC(1)", "OC(2+4)", "OC(1+3)"],
                ["OC(1+3)", "OC(2+4)", "OC(1+3)", "OC(2+4)"],
                ["OC(2+4)", "OC(1+3)", "OC(2+4)", "OC(1+3)"],
            ],
            ClosureTable::M => [["nz"; 4]; 4],
            ClosureTable::PC => [
                ["OC(1+2)+PC(1+2)", "OC(1+2)+PC(1+2)", "OC(3+4)+PC", "OC(3+4)+PC"],
                ["OC(1+2)+PC(1+2)", "OC(1+2)+PC(1+2)", "OC(3+4)+PC", "OC(3+4)+PC"],
                ["OC(3+4)+PC", "OC(3+4)+PC", "OC(1)+PC(4)", "nz"],
                ["OC(3+4)+PC", "OC(1)+PC(4)", "nz", "OC(1)+PC(4)"],
            ],
        }
    }
}

impl fmt::Display for ClosureTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ClosureTable::A => "A",
            ClosureTable::OC => "OC",
            ClosureTable::M => "M",
            ClosureTable::PC => "PC",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellReport {
    pub alpha: u8,
    pub beta: u8,
    pub expected: CellLabel,
    pub outcome: CellOutcome,
    /// Every result lies in the span of the expected families (`None` for `nz`).
    pub in_expected_span: Option<bool>,
}

impl CellReport {
    pub fn pass(&self) -> bool {
        self.outcome.label == self.expected
    }
}

fn members_of(fams: &SignedFamilies, families: &[InvFamily], variant: u8) -> Vec<Candidate> {
    families.iter().flat_map(|&f| fams.get((f, variant)).iter().copied()).collect()
}

fn span_check(fams: &SignedFamilies, expected: &CellLabel, results: &[Multivector]) -> Option<bool> {
    let CellLabel::Families(set) = expected else { return None };
    let qs: Vec<Multivector> = set.iter().flat_map(|&k| fams.get(k).iter().map(Candidate::q)).collect();
    let span = Span::from_vectors(15, qs.iter());
    Some(results.iter().all(|r| span.contains(r)))
}

fn report_cell(fams: &SignedFamilies, left: &[Candidate], right: &[Candidate], expected: CellLabel, alpha: u8, beta: u8) -> CellReport {
    let (outcome, results) = commutator_cell(fams, left, right);
    let in_expected_span = span_check(fams, &expected, &results);
    CellReport { alpha, beta, expected, outcome, in_expected_span }
}

/// One of the four same-family tables, all sixteen cells.
pub fn family_commutator_table(fams: &SignedFamilies, table: ClosureTable) -> Vec<CellReport> {
    let expected = table.expected();
    let mut out = Vec::with_capacity(16);
    for a in 1..=4u8 {
        for b in 1..=4u8 {
            let left = members_of(fams, table.families(), a);
            let right = members_of(fams, table.families(), b);
            let label: CellLabel = expected[a as usize - 1][b as usize - 1].parse().expect("literal labels parse");
            out.push(report_cell(fams, &left, &right, label, a, b));
        }
    }
    out
}

/// A cross-family product listed in the published summary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCase {
    pub left: (InvFamily, Option<u8>),
    pub right: (Vec<InvFamily>, Option<u8>),
    pub expected: CellLabel,
    pub outcome: CellOutcome,
    pub in_expected_span: Option<bool>,
}

impl CrossCase {
    /// Variant-free cases compare families only.
    pub fn pass(&self) -> bool {
        match (self.left.1, &self.expected, &self.outcome.label) {
            (Some(_), e, got) => e == got,
            (None, CellLabel::Families(e), CellLabel::Families(got)) => {
                let fam = |s: &BTreeSet<FamilyKey>| s.iter().map(|k| k.0).collect::<BTreeSet<_>>();
                fam(e) == fam(got)
            }
            (None, e, got) => e == got,
        }
    }
}

fn all_variants(fams: &SignedFamilies, families: &[InvFamily]) -> Vec<Candidate> {
    (1..=4).flat_map(|v| members_of(fams, families, v)).collect()
}

/// The listed cross-family cases, in published order.
pub fn listed_cross_cases(fams: &SignedFamilies) -> Vec<CrossCase> {
    let mut out = Vec::new();
    for (o, p, label) in [(3, 1, "OC(2)+PC(3)"), (4, 2, "OC(2)+PC(3)"), (2, 3, "OC(1)+PC(4)"), (4, 1, "OC(1)+PC(4)")] {
        let (outcome, results) = commutator_cell(fams, fams.get((InvFamily::OC, o)), fams.get((InvFamily::PC, p)));
        let expected: CellLabel = label.parse().expect("literal");
        let in_expected_span = span_check(fams, &expected, &results);
        out.push(CrossCase {
            left: (InvFamily::OC, Some(o)),
            right: (vec![InvFamily::PC], Some(p)),
            expected,
            outcome,
            in_expected_span,
        });
    }
    let a = all_variants(fams, &[InvFamily::A]);
    let m = all_variants(fams, &[InvFamily::OM, InvFamily::PM]);
    let (outcome, results) = commutator_cell(fams, &a, &m);
    let expected: CellLabel = "OM+PM".parse().expect("literal");
    let in_expected_span = span_check(fams, &expected, &results);
    out.push(CrossCase {
        left: (InvFamily::A, None),
        right: (vec![InvFamily::OM, InvFamily::PM], None),
        expected,
        outcome,
        in_expected_span,
    });
    out
}

/// Cross-family products, variant by variant, that are not listed and not
/// `nz`. These are reported, not failed.
pub fn unlisted_cross_products(fams: &SignedFamilies) -> Vec<((FamilyKey, FamilyKey), CellOutcome)> {
    let listed = |a: FamilyKey, b: FamilyKey| {
        let oc_pc = a.0 == InvFamily::OC
            && b.0 == InvFamily::PC
            && [(3, 1), (4, 2), (2, 3), (4, 1)].contains(&(a.1, b.1));
        let a_m = a.0 == InvFamily::A && matches!(b.0, InvFamily::OM | InvFamily::PM);
        let m_m = matches!(a.0, InvFamily::OM | InvFamily::PM) && matches!(b.0, InvFamily::OM | InvFamily::PM);
        oc_pc || a_m || m_m
    };
    let mut pairs = Vec::new();
    for (i, &f) in InvFamily::ALL.iter().enumerate() {
        for &g in &InvFamily::ALL[i + 1..] {
            for a in 1..=4u8 {
                for b in 1..=4u8 {
                    if !listed((f, a), (g, b)) {
                        pairs.push(((f, a), (g, b)));
                    }
                }
            }
        }
    }
    pairs
        .into_iter()
        .filter_map(|(x, y)| {
            let (outcome, _) = commutator_cell(fams, fams.get(x), fams.get(y));
            (outcome.label != CellLabel::Nz).then_some(((x, y), outcome))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_round_trip() {
        for s in ["nz", "A(1+2)", "OC(3+4)+PC", "OC(1)+PC(4)", "OM+PM", "A(4)"] {
            let l: CellLabel = s.parse().unwrap();
            assert_eq!(l.to_string(), s);
        }
        for s in ["", "Q(1)", "A(5)", "A(1", "A+", "OC(1)x"] {
            assert!(s.parse::<CellLabel>().is_err(), "{s}");
        }
    }
}
