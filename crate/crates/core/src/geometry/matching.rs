use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An unordered index pair, stored with the smaller index first.
pub type Edge = (usize, usize);

fn normalize(i: usize, j: usize) -> Edge {
    if i < j {
        (i, j)
    } else {
        (j, i)
    }
}

/// A set of index pairs over an instance.
///
/// [`Matching::insert`] keeps the one-edge-per-point invariant; geometric
/// validity (no crossings, colors) is checked by
/// [`crate::offline::validate_matching`] and by the online harness.
/// [`Matching::from_edges_unchecked`] exists so that broken matchings can be
/// represented and reported on.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "Vec<Edge>", into = "Vec<Edge>")]
pub struct Matching {
    edges: BTreeSet<Edge>,
    partner: BTreeMap<usize, usize>,
}

impl Matching {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_edges_unchecked(edges: impl IntoIterator<Item = Edge>) -> Self {
        let mut m = Matching::new();
        for (i, j) in edges {
            m.edges.insert(normalize(i, j));
            m.partner.entry(i).or_insert(j);
            m.partner.entry(j).or_insert(i);
        }
        m
    }

    /// Adds `{i, j}`; both endpoints must be distinct and currently free.
    pub fn insert(&mut self, i: usize, j: usize) -> Result<()> {
        if i == j {
            return Err(Error::InvalidInstance(format!("self-loop at {i}")));
        }
        if let Some(&k) = self.partner.get(&i).or_else(|| self.partner.get(&j)) {
            let busy = if self.partner.contains_key(&i) { i } else { j };
            return Err(Error::IllegalMatch {
                point: busy,
                target: k,
            });
        }
        self.edges.insert(normalize(i, j));
        self.partner.insert(i, j);
        self.partner.insert(j, i);
        Ok(())
    }

    pub fn partner(&self, i: usize) -> Option<usize> {
        self.partner.get(&i).copied()
    }

    pub fn is_matched(&self, i: usize) -> bool {
        self.partner.contains_key(&i)
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&normalize(i, j))
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Number of distinct matched points.
    pub fn matched_points(&self) -> usize {
        self.edges
            .iter()
            .flat_map(|&(a, b)| [a, b])
            .collect::<BTreeSet<_>>()
            .len()
    }
}

impl From<Vec<Edge>> for Matching {
    fn from(v: Vec<Edge>) -> Self {
        Matching::from_edges_unchecked(v)
    }
}

impl From<Matching> for Vec<Edge> {
    fn from(m: Matching) -> Self {
        m.edges.into_iter().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_enforces_one_edge_per_point() {
        let mut m = Matching::new();
        m.insert(3, 1).unwrap();
        assert!(m.contains(1, 3));
        assert_eq!(m.partner(3), Some(1));
        assert!(m.insert(1, 2).is_err());
        assert!(m.insert(4, 4).is_err());
        m.insert(0, 2).unwrap();
        assert_eq!(m.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 3)]);
        assert_eq!(m.matched_points(), 4);
    }

    #[test]
    fn unchecked_keeps_duplicates_for_reporting() {
        let m = Matching::from_edges_unchecked([(0, 1), (1, 2)]);
        assert_eq!(m.len(), 2);
        assert_eq!(m.matched_points(), 3);
    }
}
