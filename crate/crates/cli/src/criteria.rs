//! Acceptance criteria as groups of checks with runtime limits.

use std::time::Duration;

pub struct Criterion {
    pub number: u8,
    pub title: &'static str,
    pub groups: &'static [&'static str],
    pub limit: Option<Duration>,
    /// Fails on the published data; see the README.
    pub known_failure: bool,
}

const fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

pub const CRITERIA: [Criterion; 14] = [
    Criterion { number: 1, title: "sedenion table", groups: &["table2"], limit: secs(1), known_failure: false },
    Criterion { number: 2, title: "identity suite", groups: &["identities"], limit: secs(5), known_failure: false },
    Criterion { number: 3, title: "cube laws", groups: &["cube"], limit: None, known_failure: false },
    Criterion { number: 4, title: "idempotent quintets", groups: &["quintets"], limit: secs(60), known_failure: false },
    Criterion { number: 5, title: "octonion-like identification", groups: &["table1"], limit: None, known_failure: false },
    Criterion { number: 6, title: "sedenion census", groups: &["census"], limit: secs(60), known_failure: false },
    Criterion { number: 7, title: "algebra stacking", groups: &["stacking"], limit: None, known_failure: false },
    Criterion { number: 8, title: "sharp algebras and swap profiles", groups: &["sharp", "action"], limit: None, known_failure: false },
    Criterion { number: 9, title: "invariant generation", groups: &["generation", "fixtures"], limit: None, known_failure: false },
    Criterion { number: 10, title: "alpha/beta/delta relations", groups: &["abd"], limit: secs(60), known_failure: false },
    Criterion { number: 11, title: "automorphism isolation", groups: &["isolation"], limit: None, known_failure: false },
    Criterion { number: 12, title: "G2 structure", groups: &["g2"], limit: None, known_failure: true },
    Criterion { number: 13, title: "closure tables", groups: &["closure", "sums"], limit: None, known_failure: true },
    Criterion { number: 14, title: "render counts", groups: &["render"], limit: None, known_failure: false },
];
