use std::collections::BTreeMap;
use std::ops::Bound;

use super::{Edge, Instance, Matching};
use crate::error::Result;

/// Points `j < i` that `i` could be matched to without crossing `current`:
/// unmatched, color-compatible, and with segment `{i, j}` disjoint from every
/// edge. Straightforward reference implementation, `O(i * |current|)`.
pub fn available_set(instance: &Instance, current: &Matching, i: usize) -> Vec<usize> {
    (0..i)
        .filter(|&j| !current.is_matched(j) && instance.compatible(i, j))
        .filter(|&j| {
            current
                .edges()
                .all(|e| !instance.crosses((i, j), e).unwrap_or(true))
        })
        .collect()
}

/// Incremental availability for a simulation in progress.
///
/// In convex position the available points of an arrival are exactly the
/// unmatched points on the boundary of the face of the chord diagram that
/// contains it, found by walking clockwise and jumping along matched chords.
/// Other instances fall back to the pairwise crossing scan.
#[derive(Debug, Clone)]
pub struct AvailabilityTracker<'a> {
    instance: &'a Instance,
    by_rank: BTreeMap<usize, usize>,
    arrived: Vec<bool>,
    partner: Vec<Option<usize>>,
    edges: Vec<Edge>,
}

impl<'a> AvailabilityTracker<'a> {
    pub fn new(instance: &'a Instance) -> Self {
        AvailabilityTracker {
            instance,
            by_rank: BTreeMap::new(),
            arrived: vec![false; instance.len()],
            partner: vec![None; instance.len()],
            edges: Vec::new(),
        }
    }

    pub fn arrive(&mut self, i: usize) {
        if self.arrived[i] {
            return;
        }
        self.arrived[i] = true;
        if let Some(rank) = self.instance.hull_rank() {
            self.by_rank.insert(rank[i], i);
        }
    }

    pub fn has_arrived(&self, i: usize) -> bool {
        self.arrived[i]
    }

    pub fn partner(&self, i: usize) -> Option<usize> {
        self.partner[i]
    }

    /// Records edge `{i, j}`. Callers check availability first.
    pub fn commit(&mut self, i: usize, j: usize) {
        debug_assert!(self.partner[i].is_none() && self.partner[j].is_none());
        self.partner[i] = Some(j);
        self.partner[j] = Some(i);
        self.edges.push((i.min(j), i.max(j)));
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Available partners for the arrived, unmatched point `i`, ascending.
    pub fn available(&self, i: usize) -> Vec<usize> {
        if !self.arrived[i] || self.partner[i].is_some() {
            return Vec::new();
        }
        let mut out = match self.instance.hull_rank() {
            Some(rank) => self.face_walk(i, rank),
            None => self.scan(i),
        };
        out.retain(|&j| self.instance.compatible(i, j));
        out.sort_unstable();
        out
    }

    fn successor(&self, rank: usize) -> usize {
        self.by_rank
            .range((Bound::Excluded(rank), Bound::Unbounded))
            .next()
            .or_else(|| self.by_rank.iter().next())
            .map(|(_, &idx)| idx)
            .expect("walk started from an arrived point")
    }

    fn face_walk(&self, start: usize, rank: &[usize]) -> Vec<usize> {
        let mut out = Vec::new();
        let mut cur = start;
        // every arrived point is visited at most once per walk
        for _ in 0..=self.by_rank.len() {
            let next = self.successor(rank[cur]);
            if next == start {
                return out;
            }
            match self.partner[next] {
                None => {
                    out.push(next);
                    cur = next;
                }
                Some(other) => cur = other,
            }
        }
        panic!("face walk did not close; the committed edges cross");
    }

    fn scan(&self, i: usize) -> Vec<usize> {
        (0..self.arrived.len())
            .filter(|&j| j != i && self.arrived[j] && self.partner[j].is_none())
            .filter(|&j| {
                self.edges
                    .iter()
                    .all(|&e| !self.instance.crosses((i, j), e).unwrap_or(true))
            })
            .collect()
    }

    /// Snapshot of the committed edges as a [`Matching`].
    pub fn matching(&self) -> Result<Matching> {
        let mut m = Matching::new();
        for &(a, b) in &self.edges {
            m.insert(a, b)?;
        }
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{GeometryClass, Kind, Point};
    use crate::rational::Rational;
    use proptest::prelude::*;

    fn square() -> Instance {
        let pts = vec![Point::xy(0, 0), Point::xy(1, 0), Point::xy(1, 1), Point::xy(0, 1)];
        Instance::new(pts, Kind::Mnm, GeometryClass::Convex).unwrap()
    }

    #[test]
    fn small_examples() {
        let inst = square();
        let empty = Matching::new();
        assert!(available_set(&inst, &empty, 0).is_empty());
        assert_eq!(available_set(&inst, &empty, 1), vec![0]);
        let mut diag = Matching::new();
        diag.insert(0, 2).unwrap();
        // point 2 (index 1) lies on the other side of the diagonal from index 3
        assert!(available_set(&inst, &diag, 3).is_empty());
    }

    #[test]
    fn tracker_face_walk_on_square() {
        let inst = square();
        let mut t = AvailabilityTracker::new(&inst);
        for i in 0..3 {
            t.arrive(i);
        }
        t.commit(0, 2);
        t.arrive(3);
        assert!(t.available(3).is_empty());
        assert_eq!(t.available(1), Vec::<usize>::new());
    }

    fn random_circle(turns: &[u16]) -> Option<Instance> {
        let mut seen = std::collections::HashSet::new();
        let pts: Vec<Point> = turns
            .iter()
            .filter(|t| seen.insert(**t))
            .map(|&t| Point::on_circle(Rational::new(t as i64, 4096)))
            .collect();
        let even = pts.len() & !1;
        if even < 2 {
            return None;
        }
        Instance::new(pts[..even].to_vec(), Kind::Mnm, GeometryClass::Circle).ok()
    }

    proptest! {
        /// The face walk agrees with the brute-force definition, and adding
        /// edges never enlarges availability.
        #[test]
        fn face_walk_matches_reference(turns in proptest::collection::vec(0u16..4096, 2..24), picks in proptest::collection::vec(0usize..1000, 24)) {
            let Some(inst) = random_circle(&turns) else { return Ok(()); };
            let mut t = AvailabilityTracker::new(&inst);
            let mut m = Matching::new();
            let mut prev: Vec<Vec<usize>> = vec![Vec::new(); inst.len()];
            for i in 0..inst.len() {
                t.arrive(i);
                let fast = t.available(i);
                let slow = available_set(&inst, &m, i);
                prop_assert_eq!(&fast, &slow);
                // monotonicity for earlier points that are still free
                for j in 0..i {
                    if m.is_matched(j) { continue; }
                    let now: Vec<usize> = available_set(&inst, &m, j);
                    prop_assert!(now.iter().all(|x| prev[j].contains(x) || prev[j].is_empty()));
                    prev[j] = now;
                }
                if !fast.is_empty() && picks[i] % 3 != 0 {
                    let j = fast[picks[i] % fast.len()];
                    t.commit(i, j);
                    m.insert(i, j).unwrap();
                }
            }
        }
    }
}
