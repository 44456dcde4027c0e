use std::cmp::Ordering;

use super::numeric::{compare_total_length, LengthOrdering};
use crate::error::{Error, Result};
use crate::geometry::{Edge, Instance, Matching};

/// Largest point count accepted by the brute-force search.
pub const DEFAULT_BRUTE_FORCE_CAP: usize = 12;

#[derive(Debug, Clone, Copy)]
pub struct MinLengthConfig {
    pub cap: usize,
    /// Discard partial pairings as soon as two of their edges cross. The
    /// optimum never crosses, so this only saves time; turning it off lets
    /// the non-crossing property be checked rather than assumed.
    pub prune_crossings: bool,
}

impl Default for MinLengthConfig {
    fn default() -> Self {
        MinLengthConfig {
            cap: DEFAULT_BRUTE_FORCE_CAP,
            prune_crossings: true,
        }
    }
}

fn length_f64(inst: &Instance, (i, j): Edge) -> f64 {
    let (a, b) = (inst.point(i), inst.point(j));
    if let (Some(ta), Some(tb)) = (&a.angle, &b.angle) {
        let d = (ta - tb).fract().to_f64();
        let d = d.min(1.0 - d);
        return 2.0 * (std::f64::consts::PI * d).sin();
    }
    let (ax, ay) = a.to_f64();
    let (bx, by) = b.to_f64();
    (ax - bx).hypot(ay - by)
}

/// Calls `visit` with every perfect matching of `inst` (color-compatible
/// pairs only), pairing the smallest free index first.
pub fn enumerate_perfect_matchings(
    inst: &Instance,
    prune_crossings: bool,
    visit: &mut dyn FnMut(&[Edge]),
) {
    fn go(
        inst: &Instance,
        free: &mut Vec<bool>,
        edges: &mut Vec<Edge>,
        prune: bool,
        visit: &mut dyn FnMut(&[Edge]),
    ) {
        let Some(i) = free.iter().position(|&f| f) else {
            visit(edges);
            return;
        };
        free[i] = false;
        for j in i + 1..free.len() {
            if !free[j] || !inst.compatible(i, j) {
                continue;
            }
            if prune && edges.iter().any(|&e| inst.crosses((i, j), e).unwrap_or(true)) {
                continue;
            }
            free[j] = false;
            edges.push((i, j));
            go(inst, free, edges, prune, visit);
            edges.pop();
            free[j] = true;
        }
        free[i] = true;
    }
    let mut free = vec![true; inst.len()];
    go(inst, &mut free, &mut Vec::new(), prune_crossings, visit);
}

pub fn min_length_pm(inst: &Instance) -> Result<Matching> {
    min_length_pm_with(inst, MinLengthConfig::default())
}

/// A minimum total length perfect matching, by exhaustive search.
///
/// Floats screen the candidates; anything within a relative `1e-9` of the
/// float minimum is compared with certified intervals. Exact ties go to the
/// lexicographically smallest edge list.
pub fn min_length_pm_with(inst: &Instance, config: MinLengthConfig) -> Result<Matching> {
    if inst.len() > config.cap {
        return Err(Error::CapExceeded {
            size: inst.len(),
            cap: config.cap,
        });
    }
    let lengths: Vec<Vec<f64>> = (0..inst.len())
        .map(|i| (0..inst.len()).map(|j| if i == j { 0.0 } else { length_f64(inst, (i, j)) }).collect())
        .collect();
    let margin = |best: f64| 1e-9 * best.max(1.0);

    let mut best = f64::INFINITY;
    let mut candidates: Vec<(f64, Vec<Edge>)> = Vec::new();
    enumerate_perfect_matchings(inst, config.prune_crossings, &mut |edges| {
        let total: f64 = edges.iter().map(|&(i, j)| lengths[i][j]).sum();
        if total <= best + margin(best) {
            if total < best {
                best = total;
                candidates.retain(|(t, _)| *t <= best + margin(best));
            }
            candidates.push((total, edges.to_vec()));
        }
    });
    candidates.retain(|(t, _)| *t <= best + margin(best));

    let mut iter = candidates.into_iter().map(|(_, e)| e);
    let Some(mut winner) = iter.next() else {
        return Err(Error::NotPerfect("instance has no perfect matching".into()));
    };
    for cand in iter {
        let better = match compare_total_length(inst, &cand, &winner) {
            LengthOrdering::Decided(Ordering::Less) => true,
            LengthOrdering::Decided(Ordering::Greater) => false,
            _ => cand < winner,
        };
        if better {
            winner = cand;
        }
    }

    for (a, &e) in winner.iter().enumerate() {
        for &f in &winner[a + 1..] {
            if inst.crosses(e, f)? {
                return Err(Error::CrossingDetected(e, f));
            }
        }
    }
    let mut m = Matching::new();
    for (i, j) in winner {
        m.insert(i, j)?;
    }
    Ok(m)
}
