//! The fixed-prefix circle family for MNM.
//!
//! `4k` points sit at regular angles clockwise from the North pole. A member
//! is chosen by `j <= 2k` and a `j`-subset `S` of the first `4k - 1` gaps: one
//! point goes into the middle of each gap in `S`, and the remaining `2k - j`
//! points are spread evenly inside the last gap.

use std::collections::HashMap;

use num_integer::binomial;
use serde::Serialize;

use super::{AnnotatedInstance, Hidden};
use crate::error::{Error, Result};
use crate::geometry::{parity, Edge, GeometryClass, Instance, Kind, Matching, Point};
use crate::rational::Rational;

/// Largest point count for the completion search (bitmask width).
const COMPLETION_CAP: usize = 64;

fn prefix_turn(k: usize, m: usize) -> Rational {
    // p_m at 1/4 - (m-1)/(4k), clockwise from the North pole
    (&Rational::new(1, 4) - &Rational::new((m - 1) as i64, (4 * k) as i64)).fract()
}

/// Member `(j, S)`; `subset` holds 1-based gap numbers.
pub fn mnm_family_instance(k: usize, j: usize, subset: &[usize]) -> Result<AnnotatedInstance> {
    if k == 0 {
        return Err(Error::BadSubset("k must be positive".into()));
    }
    if j > 2 * k || subset.len() != j {
        return Err(Error::BadSubset(format!("need |S| = j <= 2k, got |S| = {}, j = {j}", subset.len())));
    }
    let mut s = subset.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.len() != subset.len() || s.iter().any(|&g| g == 0 || g >= 4 * k) {
        return Err(Error::BadSubset(format!("{subset:?} is not a set of gaps in 1..{}", 4 * k - 1)));
    }
    let gap = Rational::new(1, (4 * k) as i64);
    let mut points: Vec<Point> = (1..=4 * k).map(|m| Point::on_circle(prefix_turn(k, m))).collect();
    for &g in &s {
        let mid = &prefix_turn(k, g) - &gap.half();
        points.push(Point::on_circle(mid));
    }
    let rest = 2 * k - j;
    let last = prefix_turn(k, 4 * k);
    for t in 1..=rest {
        let step = Rational::new(t as i64, ((rest + 1) * 4 * k) as i64);
        points.push(Point::on_circle(&last - &step));
    }
    let instance = Instance::new(points, Kind::Mnm, GeometryClass::Circle)?;
    Ok(AnnotatedInstance {
        instance,
        hidden: Hidden::MnmFamily { k, j, subset: s },
    })
}

/// `sum_{j <= 2k} binomial(4k - 1, j)`.
pub fn family_size(k: usize) -> u128 {
    (0..=2 * k).map(|j| binomial(4 * k as u128 - 1, j as u128)).sum()
}

/// Every `(j, S)` of the family, `S` in lexicographic order within each `j`.
pub fn family_members(k: usize) -> Vec<(usize, Vec<usize>)> {
    fn subsets(from: usize, to: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for g in from..=to {
            if to + 1 - g < size - cur.len() {
                break;
            }
            cur.push(g);
            subsets(g + 1, to, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for j in 0..=2 * k {
        let mut subs = Vec::new();
        subsets(1, 4 * k - 1, j, &mut Vec::new(), &mut subs);
        out.extend(subs.into_iter().map(|s| (j, s)));
    }
    out
}

/// Parities of the `4k` prefix points within the full member.
pub fn parity_fingerprint(ai: &AnnotatedInstance) -> Result<Vec<u8>> {
    let Hidden::MnmFamily { k, .. } = ai.hidden else {
        return Err(Error::Precondition("not a member of the fixed-prefix family".into()));
    };
    let mut chi = parity(&ai.instance)?;
    chi.truncate(4 * k);
    Ok(chi)
}

/// Every non-crossing matching (of any size, including empty) among the
/// prefix points of a member.
pub fn prefix_priors(ai: &AnnotatedInstance) -> Result<Vec<Matching>> {
    let Hidden::MnmFamily { k, .. } = ai.hidden else {
        return Err(Error::Precondition("not a member of the fixed-prefix family".into()));
    };
    let rank = ai.instance.hull_rank().ok_or(Error::NotConvex(0))?;
    let mut prefix: Vec<usize> = (0..4 * k).collect();
    prefix.sort_by_key(|&i| rank[i]);

    fn all(points: &[usize]) -> Vec<Vec<Edge>> {
        let Some((&first, rest)) = points.split_first() else {
            return vec![Vec::new()];
        };
        let mut out = all(rest);
        for q in 0..rest.len() {
            let inside = all(&rest[..q]);
            let outside = all(&rest[q + 1..]);
            for a in &inside {
                for b in &outside {
                    let mut e = vec![(first, rest[q])];
                    e.extend_from_slice(a);
                    e.extend_from_slice(b);
                    out.push(e);
                }
            }
        }
        out
    }
    Ok(all(&prefix).into_iter().map(Matching::from_edges_unchecked).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConsistencyReport {
    /// A perfect non-crossing completion exists whose new edges all touch a
    /// point outside the prefix.
    pub consistent: bool,
    /// `|prior| >= k`.
    pub large_enough: bool,
    /// Every prior edge joins points of opposite parity.
    pub opposite_parities: bool,
}

/// Whether `prior` (edges among the prefix points) can be completed online.
///
/// Prefix points left unmatched can only be matched later to arriving points,
/// so added edges must have at least one endpoint outside the prefix.
pub fn consistent(prior: &Matching, ai: &AnnotatedInstance) -> Result<ConsistencyReport> {
    let Hidden::MnmFamily { k, .. } = ai.hidden else {
        return Err(Error::Precondition("not a member of the fixed-prefix family".into()));
    };
    let inst = &ai.instance;
    let prefix = 4 * k;
    let edges: Vec<Edge> = prior.edges().collect();
    if edges.iter().any(|&(a, b)| a >= prefix || b >= prefix) {
        return Err(Error::Precondition("prior edges must join prefix points".into()));
    }
    let chi = parity(inst)?;
    let consistent = completes(inst, &edges, |a, b| a >= prefix || b >= prefix)?;
    Ok(ConsistencyReport {
        consistent,
        large_enough: edges.len() >= k,
        opposite_parities: edges.iter().all(|&(a, b)| chi[a] != chi[b]),
    })
}

/// Whether the instance has any perfect non-crossing matching.
pub fn has_perfect_completion(inst: &Instance) -> Result<bool> {
    completes(inst, &[], |_, _| true)
}

/// Exhaustive search for a perfect non-crossing matching of a convex-position
/// instance containing `fixed`, using only new edges accepted by `allowed`.
fn completes(inst: &Instance, fixed: &[Edge], allowed: impl Fn(usize, usize) -> bool) -> Result<bool> {
    let Some(rank) = inst.hull_rank() else {
        return Err(Error::NotConvex(0));
    };
    if inst.len() > COMPLETION_CAP {
        return Err(Error::CapExceeded {
            size: inst.len(),
            cap: COMPLETION_CAP,
        });
    }
    for (x, &e) in fixed.iter().enumerate() {
        for &f in &fixed[x + 1..] {
            if inst.crosses(e, f)? {
                return Ok(false);
            }
        }
    }
    let mut order = vec![0; inst.len()];
    for (i, &r) in rank.iter().enumerate() {
        order[r] = i;
    }
    let mut free: u64 = 0;
    for i in 0..inst.len() {
        if !fixed.iter().any(|&(a, b)| a == i || b == i) {
            free |= 1 << rank[i];
        }
    }
    let mut memo = HashMap::new();
    Ok(solve(inst, &order, fixed, &allowed, free, &mut memo))
}

/// `free` is a set of hull ranks that must be matched among themselves.
fn solve(
    inst: &Instance,
    order: &[usize],
    fixed: &[Edge],
    allowed: &impl Fn(usize, usize) -> bool,
    free: u64,
    memo: &mut HashMap<u64, bool>,
) -> bool {
    if free == 0 {
        return true;
    }
    if free.count_ones() % 2 == 1 {
        return false;
    }
    if let Some(&v) = memo.get(&free) {
        return v;
    }
    let a = free.trailing_zeros() as usize;
    let rest = free & !(1 << a);
    let mut ok = false;
    let mut bits = rest;
    while bits != 0 {
        let b = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let (pa, pb) = (order[a], order[b]);
        if !allowed(pa, pb) || fixed.iter().any(|&e| inst.crosses((pa, pb), e).unwrap_or(true)) {
            continue;
        }
        // ranks strictly between a and b form one side
        let between = rest & ((1u64 << b) - 1) & !((1u64 << (a + 1)) - 1);
        let outside = rest & !between & !(1 << b);
        if solve(inst, order, fixed, allowed, between, memo) && solve(inst, order, fixed, allowed, outside, memo) {
            ok = true;
            break;
        }
    }
    memo.insert(free, ok);
    ok
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn prior_counts_are_motzkin() {
        let ai = mnm_family_instance(1, 0, &[]).unwrap();
        assert_eq!(prefix_priors(&ai).unwrap().len(), 9);
        let ai = mnm_family_instance(2, 0, &[]).unwrap();
        assert_eq!(prefix_priors(&ai).unwrap().len(), 323);
    }

    #[test]
    fn sizes() {
        assert_eq!(family_size(1), 7);
        assert_eq!(family_size(2), 99);
        assert_eq!(family_size(3), 1486);
        for k in 1..=3 {
            assert_eq!(family_members(k).len() as u128, family_size(k));
        }
    }

    #[test]
    fn minimal_member() {
        let ai = mnm_family_instance(1, 0, &[]).unwrap();
        assert_eq!(ai.instance.len(), 6);
        let turns: Vec<String> = ai.instance.points().iter().map(|p| p.angle.clone().unwrap().to_string()).collect();
        assert_eq!(turns, ["1/4", "0/1", "3/4", "1/2", "5/12", "1/3"]);
    }

    #[test]
    fn bad_subsets() {
        assert!(matches!(mnm_family_instance(1, 1, &[4]), Err(Error::BadSubset(_))));
        assert!(matches!(mnm_family_instance(1, 1, &[]), Err(Error::BadSubset(_))));
        assert!(matches!(mnm_family_instance(1, 3, &[1, 2, 3]), Err(Error::BadSubset(_))));
        assert!(matches!(mnm_family_instance(2, 2, &[1, 1]), Err(Error::BadSubset(_))));
    }

    #[test]
    fn fingerprints_injective_k1_k2() {
        for k in 1..=2 {
            let mut seen = HashSet::new();
            for (j, s) in family_members(k) {
                let ai = mnm_family_instance(k, j, &s).unwrap();
                let x = parity_fingerprint(&ai).unwrap();
                assert_eq!(x.len(), 4 * k);
                assert_eq!(x[0], 0);
                assert!(seen.insert(x), "k={k} j={j} S={s:?}");
            }
        }
    }

    #[test]
    fn consistency_examples() {
        let ai = mnm_family_instance(1, 0, &[]).unwrap();
        // the prefix alone cannot absorb both trailing points without an edge
        let empty = consistent(&Matching::new(), &ai).unwrap();
        assert!(!empty.consistent && !empty.large_enough);
        assert!(has_perfect_completion(&ai.instance).unwrap());
        // same-parity edge
        let m = Matching::from_edges_unchecked([(0, 2)]);
        let r = consistent(&m, &ai).unwrap();
        assert!(!r.consistent && !r.opposite_parities);
        // p1-p2 leaves p3-q2 and p4-q1, nested
        let m = Matching::from_edges_unchecked([(0, 1)]);
        let r = consistent(&m, &ai).unwrap();
        assert!(r.large_enough);
        assert!(r.consistent);
    }
}
