//! The octonion cyclic family as a copy of G2.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use sedenion_core::{Blade, Multivector, Span};

use crate::candidate::{signed_candidates, Candidate, InvFamily};
use crate::decomposition::stabilizer_check;
use crate::fixtures::{parse_labelled, resolve_table, rows_as_multivectors, ResolvedEntry, G2_CL15, G2_CL7};
use crate::invariance::map_filter;
use crate::InvariantError;

/// Relabelling of `Cl(7)` generators used by the short table.
pub const CL7_RELABEL: [u8; 7] = [3, 5, 6, 8, 11, 13, 14];

/// Signed candidates passing the map filter and the stabiliser condition on `Theta`.
pub fn automorphism_candidates() -> Vec<Candidate> {
    signed_candidates()
        .into_par_iter()
        .filter(|c| map_filter(c) && stabilizer_check(c))
        .collect()
}

/// Corrected octonion cyclic representatives.
pub fn octonion_cyclic() -> Result<Vec<Candidate>, InvariantError> {
    Ok(resolve_table(InvFamily::OC)?.into_iter().map(|e| e.resolved).collect())
}

fn closed_in(span: &Span, xs: &[Multivector]) -> (usize, usize) {
    let results: Vec<bool> = (0..xs.len())
        .into_par_iter()
        .flat_map_iter(|i| (i + 1..xs.len()).map(move |j| (i, j)))
        .map(|(i, j)| span.contains(&xs[i].commutator(&xs[j])))
        .collect();
    (results.iter().filter(|&&b| b).count(), results.len())
}

fn restrict_relabel(x: &Multivector) -> Multivector {
    let terms = x.terms().filter(|(b, _)| b.0 & !0x7f == 0).map(|(b, c)| {
        let idx: Vec<u8> = b.indices().map(|k| CL7_RELABEL[k as usize - 1]).collect();
        (Blade::from_indices(&idx), c.clone())
    });
    Multivector::from_terms(15, terms).expect("fits")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gt7Row {
    pub label: String,
    pub support_match: bool,
    pub signed_match: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct G2Report {
    /// Rank of the corrected family.
    pub rank: usize,
    /// Rank of the family as printed.
    pub printed_rank: usize,
    /// Closed commutator pairs of the corrected family, and all pairs.
    pub closure: (usize, usize),
    pub gt15_rank: usize,
    /// Labels of `Cl(15)` basis rows outside the span.
    pub gt15_outside: Vec<String>,
    pub gt15_closure: (usize, usize),
    pub gt7: Vec<Gt7Row>,
}

impl G2Report {
    pub fn pass(&self) -> bool {
        self.rank == 14
            && self.closure.0 == self.closure.1
            && self.gt15_rank == 14
            && self.gt15_outside.is_empty()
            && self.gt15_closure.0 == self.gt15_closure.1
            && self.gt7.iter().all(|r| r.signed_match)
    }
}

pub fn g2_report() -> Result<G2Report, InvariantError> {
    g2_report_from(&resolve_table(InvFamily::OC)?, G2_CL15, G2_CL7)
}

/// The report for a resolved octonion cyclic table and the two basis tables.
pub fn g2_report_from(entries: &[ResolvedEntry], cl15: &str, cl7: &str) -> Result<G2Report, InvariantError> {
    let qs: Vec<Multivector> = entries.iter().map(|e| e.resolved.q()).collect();
    let printed: Vec<Multivector> = entries.iter().map(|e| e.printed.q()).collect();
    let span = Span::from_vectors(15, qs.iter());
    let printed_rank = Span::from_vectors(15, printed.iter()).rank();

    let (s15, rows15) = parse_labelled(cl15)?;
    let (s7, rows7) = parse_labelled(cl7)?;
    let gt15 = rows_as_multivectors(15, &s15, &rows15.iter().map(|r| r.1.clone()).collect::<Vec<_>>());
    let gt7 = rows_as_multivectors(15, &s7, &rows7.iter().map(|r| r.1.clone()).collect::<Vec<_>>());

    let gt15_outside = rows15.iter().zip(&gt15).filter(|(_, x)| !span.contains(x)).map(|(r, _)| r.0.clone()).collect();
    let gt15_closure = closed_in(&span, &gt15);
    let gt7 = rows7
        .iter()
        .zip(&gt7)
        .map(|((label, _), short)| {
            let long = rows15.iter().position(|r| &r.0 == label).map(|k| restrict_relabel(&gt15[k]));
            let support_match = long.as_ref().is_some_and(|l| l.blades().eq(short.blades()));
            let signed_match = long.as_ref() == Some(short);
            Gt7Row { label: label.clone(), support_match, signed_match }
        })
        .collect();
    Ok(G2Report {
        rank: span.rank(),
        printed_rank,
        closure: closed_in(&span, &qs),
        gt15_rank: Span::from_vectors(15, gt15.iter()).rank(),
        gt15_outside,
        gt15_closure,
        gt7,
    })
}
