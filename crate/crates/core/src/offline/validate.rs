use std::collections::BTreeMap;

use serde::Serialize;

use crate::geometry::{Edge, Instance, Kind, Matching};

/// What is wrong with a matching, if anything.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub crossings: Vec<(Edge, Edge)>,
    pub color_violations: Vec<Edge>,
    /// Points used by more than one edge.
    pub duplicate_endpoints: Vec<usize>,
    /// Unmatched points, reported only when a perfect matching was required.
    pub unmatched: Vec<usize>,
    pub matched: usize,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.crossings.is_empty()
            && self.color_violations.is_empty()
            && self.duplicate_endpoints.is_empty()
            && self.unmatched.is_empty()
    }
}

pub fn validate_matching(inst: &Instance, m: &Matching, require_perfect: bool) -> ValidationReport {
    let edges: Vec<Edge> = m.edges().collect();
    let mut uses: BTreeMap<usize, usize> = BTreeMap::new();
    for &(a, b) in &edges {
        *uses.entry(a).or_default() += 1;
        *uses.entry(b).or_default() += 1;
    }
    let mut report = ValidationReport {
        duplicate_endpoints: uses.iter().filter(|(_, &c)| c > 1).map(|(&i, _)| i).collect(),
        matched: uses.len(),
        ..Default::default()
    };
    if inst.kind() == Kind::Bnm {
        report.color_violations = edges.iter().copied().filter(|&(a, b)| !inst.compatible(a, b)).collect();
    }
    for (k, &e) in edges.iter().enumerate() {
        for &f in &edges[k + 1..] {
            // shared endpoints are already reported above
            if let Ok(true) = inst.crosses(e, f) {
                report.crossings.push((e, f));
            }
        }
    }
    if require_perfect {
        report.unmatched = (0..inst.len()).filter(|i| !uses.contains_key(i)).collect();
    }
    report
}
