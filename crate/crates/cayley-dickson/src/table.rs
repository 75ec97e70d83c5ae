//! Full multiplication tables over the pure basis.

use serde::{Deserialize, Serialize};

use crate::basis::{cd_mul, CdBasis};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MulTable {
    pub level: u8,
    /// `entries[i][j] = o_{i+1} o_{j+1}` as (sign, basis).
    pub entries: Vec<Vec<(i8, CdBasis)>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableMismatch {
    pub row: CdBasis,
    pub col: CdBasis,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, thiserror::Error)]
pub enum TableParseError {
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("bad entry `{0}`")]
    Entry(String),
    #[error("table is not square over 2^n - 1 pure elements")]
    Shape,
}

fn entry_string((s, b): (i8, CdBasis)) -> String {
    format!("{}{}", if s < 0 { "-" } else { "" }, b)
}

fn parse_entry(s: &str) -> Option<(i8, CdBasis)> {
    let (sign, rest) = match s.strip_prefix('-') {
        Some(r) => (-1, r),
        None => (1, s.strip_prefix('+').unwrap_or(s)),
    };
    Some((sign, CdBasis::parse(rest)?))
}

impl MulTable {
    /// Table of A(level) over its `2^level - 1` pure elements in graded order.
    pub fn generate(level: u8) -> MulTable {
        let size = (1u32 << level) - 1;
        let entries = (1..=size)
            .map(|a| (1..=size).map(|b| cd_mul(CdBasis(a), CdBasis(b))).collect())
            .collect();
        MulTable { level, entries }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, a: CdBasis, b: CdBasis) -> (i8, CdBasis) {
        self.entries[a.0 as usize - 1][b.0 as usize - 1]
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let header: Vec<String> =
            std::iter::once("row".to_string()).chain((1..=self.size()).map(|j| CdBasis(j as u32).to_string())).collect();
        w.write_record(&header).expect("in-memory write");
        for (i, row) in self.entries.iter().enumerate() {
            let rec: Vec<String> = std::iter::once(CdBasis(i as u32 + 1).to_string())
                .chain(row.iter().map(|e| entry_string(*e)))
                .collect();
            w.write_record(&rec).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("ascii")
    }

    pub fn from_csv(text: &str) -> Result<MulTable, TableParseError> {
        let mut r = csv::Reader::from_reader(text.as_bytes());
        let mut entries = Vec::new();
        for rec in r.records() {
            let rec = rec?;
            let row: Option<Vec<(i8, CdBasis)>> = rec.iter().skip(1).map(parse_entry).collect();
            entries.push(row.ok_or_else(|| TableParseError::Entry(rec.iter().collect::<Vec<_>>().join(",")))?);
        }
        let size = entries.len();
        let level = (size + 1).trailing_zeros() as u8;
        if (1usize << level) != size + 1 || entries.iter().any(|r| r.len() != size) {
            return Err(TableParseError::Shape);
        }
        Ok(MulTable { level, entries })
    }

    /// Entries where `self` differs from `expected`.
    pub fn diff(&self, expected: &MulTable) -> Vec<TableMismatch> {
        let mut out = Vec::new();
        for (i, (ra, rb)) in self.entries.iter().zip(&expected.entries).enumerate() {
            for (j, (a, b)) in ra.iter().zip(rb).enumerate() {
                if a != b {
                    out.push(TableMismatch {
                        row: CdBasis(i as u32 + 1),
                        col: CdBasis(j as u32 + 1),
                        expected: entry_string(*b),
                        actual: entry_string(*a),
                    });
                }
            }
        }
        out
    }

    /// Number of entries compared by [`diff`](Self::diff).
    pub fn entry_count(&self) -> usize {
        self.size() * self.size()
    }
}
