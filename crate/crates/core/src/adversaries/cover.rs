//! How many deterministic strategies does a finite family need?
//!
//! A strategy is a decision tree that may only branch on what it has seen:
//! two instances whose points coincide up to step `i` (and on which the
//! strategy therefore made the same moves) share their path to step `i`.
//! [`solvable_antichain`] lists the maximal sets of instances that one
//! strategy can solve perfectly; [`min_strategy_cover`] is the least number of
//! those sets covering the family.

use crate::error::{Error, Result};
use crate::geometry::{available_set, Edge, Instance, Kind, Matching};

/// Largest family accepted (subsets are `u64` bitmasks).
pub const DEFAULT_COVER_CAP: usize = 64;

fn maximal(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_unstable_by_key(|s| std::cmp::Reverse(s.count_ones()));
    sets.dedup();
    let mut out: Vec<u64> = Vec::new();
    for s in sets {
        if !out.iter().any(|&o| o & s == s) {
            out.push(s);
        }
    }
    out
}

fn explore(family: &[Instance], ids: &[usize], step: usize, edges: &mut Vec<Edge>) -> Vec<u64> {
    let rep = &family[ids[0]];
    let total = rep.len();
    if step == total {
        return if 2 * edges.len() == total {
            vec![ids.iter().fold(0, |m, &i| m | 1 << i)]
        } else {
            vec![0]
        };
    }
    // unmatched points beyond what the remaining arrivals can absorb
    if total - 2 * edges.len() > 2 * (total - step) {
        return vec![0];
    }

    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &i in ids {
        let p = family[i].point(step);
        match classes.iter_mut().find(|c| {
            let q = family[c[0]].point(step);
            q.coincides(p) && q.color == p.color
        }) {
            Some(c) => c.push(i),
            None => classes.push(vec![i]),
        }
    }

    let mut combined = vec![0u64];
    for class in classes {
        let inst = &family[class[0]];
        let mut options = Vec::new();
        let batch = inst.kind() == Kind::Bnm && step < inst.n();
        options.extend(explore(family, &class, step + 1, edges));
        if !batch {
            let current = Matching::from_edges_unchecked(edges.iter().copied());
            for j in available_set(inst, &current, step) {
                edges.push((j, step));
                options.extend(explore(family, &class, step + 1, edges));
                edges.pop();
            }
        }
        let options = maximal(options);
        combined = maximal(combined.iter().flat_map(|&a| options.iter().map(move |&b| a | b)).collect());
    }
    combined
}

/// Maximal subsets of `family` (as bitmasks) that one strategy solves.
pub fn solvable_antichain(family: &[Instance], cap: usize) -> Result<Vec<u64>> {
    if family.len() > cap.min(DEFAULT_COVER_CAP) {
        return Err(Error::CapExceeded {
            size: family.len(),
            cap: cap.min(DEFAULT_COVER_CAP),
        });
    }
    if family.is_empty() {
        return Ok(Vec::new());
    }
    let (kind, len) = (family[0].kind(), family[0].len());
    if family.iter().any(|f| f.kind() != kind || f.len() != len) {
        return Err(Error::Precondition("family members must share kind and size".into()));
    }
    let ids: Vec<usize> = (0..family.len()).collect();
    Ok(explore(family, &ids, 0, &mut Vec::new()))
}

fn cover_within(sets: &[u64], uncovered: u64, budget: usize) -> bool {
    if uncovered == 0 {
        return true;
    }
    if budget == 0 {
        return false;
    }
    let e = uncovered.trailing_zeros();
    sets.iter()
        .filter(|&&s| s >> e & 1 == 1)
        .any(|&s| cover_within(sets, uncovered & !s, budget - 1))
}

/// Least number of deterministic strategies that together solve every member.
pub fn min_strategy_cover(family: &[Instance], cap: usize) -> Result<usize> {
    let sets = solvable_antichain(family, cap)?;
    let all: u64 = if family.len() == 64 { u64::MAX } else { (1u64 << family.len()) - 1 };
    let reachable = sets.iter().fold(0, |m, &s| m | s);
    if reachable != all {
        let missing = (all & !reachable).trailing_zeros() as usize;
        return Err(Error::Precondition(format!("member {missing} is solved by no strategy")));
    }
    Ok((0..=family.len()).find(|&k| cover_within(&sets, all, k)).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adversaries::{bnm_red_instance, bnm_red_instance_unchecked};
    use crate::codecs::{enumerate_231_avoiding, Permutation};

    fn family(n: usize) -> Vec<Instance> {
        enumerate_231_avoiding(n)
            .unwrap()
            .map(|s| bnm_red_instance(&s).unwrap().instance)
            .collect()
    }

    #[test]
    fn catalan_many_strategies() {
        assert_eq!(min_strategy_cover(&family(1), 64).unwrap(), 1);
        assert_eq!(min_strategy_cover(&family(2), 64).unwrap(), 2);
        assert_eq!(min_strategy_cover(&family(3), 64).unwrap(), 5);
    }

    #[test]
    fn one_strategy_for_the_pair() {
        let pair: Vec<Instance> = [[2, 3, 1], [2, 1, 3]]
            .iter()
            .map(|v| bnm_red_instance_unchecked(&Permutation::new(v.to_vec()).unwrap()).unwrap().instance)
            .collect();
        assert_eq!(min_strategy_cover(&pair, 64).unwrap(), 1);
    }

    #[test]
    fn maximal_keeps_antichain() {
        assert_eq!(maximal(vec![0b1, 0b11, 0b100, 0b11, 0]), vec![0b11, 0b100]);
    }
}
