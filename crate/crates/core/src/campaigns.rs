//! Verification campaigns shared by the CLI and the acceptance suite.
//!
//! Each campaign returns a [`Report`] listing named checks with measured and
//! expected values. Batches go through [`crate::par`], and per-item seeds come
//! from [`derive_seed`], so a report does not depend on the execution mode.

use std::collections::HashSet;

use serde::Serialize;
use serde_json::{json, Value};

use crate::adversaries::{
    approx_lb_rate, bnm_red_instance, bnm_red_instance_unchecked, consistent, coupling_diagnostics,
    family_members, family_size, has_perfect_completion, markov_instance, min_strategy_cover,
    mnm_family_instance, parity_fingerprint, prefix_priors, red_turns, RateVariant, DEFAULT_COVER_CAP,
};
use crate::codecs::{
    catalan, dyck_rank, dyck_to_tree, dyck_unrank, elias_delta_len, enumerate_231_avoiding,
    enumerate_dyck, enumerate_trees, perm_to_tree, ranked_width, tree_rank, tree_to_dyck,
    tree_to_perm, tree_unrank, Permutation,
};
use crate::geometry::{GeometryClass, Instance, Kind, Matching};
use crate::offline::{convex_noncrossing_pm, min_length_pm_with, validate_matching, MinLengthConfig};
use crate::online::{simulate, AsapMatching, BtMatching, BtReplay, Greedy, SortedMatching, TieBreak};
use crate::par::{derive_seed, map_indexed, Execution};
use crate::random::{random_instance, seeded_rng};

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub measured: Value,
    pub expected: Value,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub campaign: String,
    pub params: Value,
    pub pass: bool,
    pub checks: Vec<Check>,
}

impl Report {
    fn new(campaign: &str, params: Value) -> Self {
        Report {
            campaign: campaign.to_string(),
            params,
            pass: true,
            checks: Vec::new(),
        }
    }

    fn push(&mut self, name: impl Into<String>, measured: impl Serialize, expected: impl Serialize, pass: bool) {
        self.pass &= pass;
        self.checks.push(Check {
            name: name.into(),
            measured: json!(measured),
            expected: json!(expected),
            pass,
        });
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

/// Outcome of one instance in a randomized campaign.
struct Outcome {
    ok: bool,
    bits: usize,
    note: Option<String>,
}

impl Outcome {
    fn failed(note: String) -> Self {
        Outcome {
            ok: false,
            bits: 0,
            note: Some(note),
        }
    }
}

fn item_seed(seed: u64, n: usize, t: usize) -> u64 {
    derive_seed(seed, ((n as u64) << 32) | t as u64)
}

/// Runs `f` on `trials` seeds per `n` and records one check per `n`.
fn per_n_checks(
    report: &mut Report,
    max_n: usize,
    trials: usize,
    mode: Execution,
    expected_bits: impl Fn(usize) -> usize,
    f: impl Fn(usize, usize) -> Outcome + Send + Sync,
) {
    let flat = map_indexed(max_n * trials, mode, |x| f(1 + x / trials, x % trials));
    for n in 1..=max_n {
        let chunk = &flat[(n - 1) * trials..n * trials];
        let failures = chunk.iter().filter(|o| !o.ok).count();
        let bits: Vec<usize> = {
            let mut b: Vec<usize> = chunk.iter().filter(|o| o.ok).map(|o| o.bits).collect();
            b.sort_unstable();
            b.dedup();
            b
        };
        let first = chunk.iter().find_map(|o| o.note.clone());
        report.push(
            format!("n={n}"),
            json!({"instances": trials, "failures": failures, "bits": bits, "first_failure": first}),
            json!({"failures": 0, "bits": [expected_bits(n)]}),
            failures == 0,
        );
    }
}

fn alternate_geometry(t: usize) -> GeometryClass {
    if t % 2 == 0 {
        GeometryClass::Circle
    } else {
        GeometryClass::Convex
    }
}

/// Tree-guided BNM matching: perfect, non-crossing, `ceil(log2 C_n)` bits.
pub fn bt_optimality(trials: usize, max_n: usize, perm_max_n: usize, seed: u64, mode: Execution) -> Report {
    let mut report = Report::new(
        "bt-optimality",
        json!({"trials": trials, "max_n": max_n, "perm_max_n": perm_max_n, "seed": seed}),
    );
    per_n_checks(&mut report, max_n, trials, mode, ranked_width, |n, t| {
        let mut rng = seeded_rng(item_seed(seed, n, t));
        let inst = random_instance(Kind::Bnm, alternate_geometry(t), n, &mut rng);
        match simulate(&BtMatching, &inst) {
            Ok(sim) => Outcome {
                ok: sim.is_perfect(&inst) && sim.bits_read == ranked_width(n),
                bits: sim.bits_read,
                note: (!sim.is_perfect(&inst)).then(|| format!("trial {t}: not perfect")),
            },
            Err(e) => Outcome::failed(format!("trial {t}: {e}")),
        }
    });

    for n in 1..=perm_max_n {
        let perms: Vec<Permutation> = enumerate_231_avoiding(n).map(|it| it.collect()).unwrap_or_default();
        let results = map_indexed(perms.len(), mode, |x| {
            let sigma = &perms[x];
            let ai = bnm_red_instance(sigma).ok()?;
            let sim = simulate(&BtMatching, &ai.instance).ok()?;
            let partners_ok = (1..=n).all(|i| sim.matching.partner(n + i - 1) == Some(sigma.at(i) - 1));
            Some(sim.is_perfect(&ai.instance) && partners_ok && sim.bits_read == ranked_width(n))
        });
        let failures = results.iter().filter(|r| **r != Some(true)).count();
        report.push(
            format!("231-avoiding family n={n}: r_i matched to b_sigma_i"),
            json!({"instances": perms.len(), "failures": failures}),
            json!({"instances": catalan(n).to_string(), "failures": 0}),
            failures == 0 && perms.len().to_string() == catalan(n).to_string(),
        );
    }
    report
}

/// ASAP MNM matching with known and unknown `n`.
pub fn asap_optimality(trials: usize, max_n: usize, seed: u64, mode: Execution) -> Report {
    let mut report = Report::new("asap-optimality", json!({"trials": trials, "max_n": max_n, "seed": seed}));
    let variants = [
        ("known n, smallest", AsapMatching { unknown_n: false, tie_break: TieBreak::Smallest }),
        ("known n, largest", AsapMatching { unknown_n: false, tie_break: TieBreak::Largest }),
        ("unknown n", AsapMatching { unknown_n: true, tie_break: TieBreak::Smallest }),
    ];
    for (label, alg) in variants {
        let expected = move |n: usize| ranked_width(n) + if alg.unknown_n { elias_delta_len(n as u64) } else { 0 };
        let before = report.checks.len();
        per_n_checks(&mut report, max_n, trials, mode, expected, |n, t| {
            let mut rng = seeded_rng(item_seed(seed, n, t));
            let inst = random_instance(Kind::Mnm, alternate_geometry(t), n, &mut rng);
            if let Err(e) = alg.decision_word(&inst) {
                return Outcome::failed(format!("trial {t}: oracle word: {e}"));
            }
            match simulate(&alg, &inst) {
                Ok(sim) => Outcome {
                    ok: sim.is_perfect(&inst) && sim.bits_read == expected(n),
                    bits: sim.bits_read,
                    note: (!sim.is_perfect(&inst)).then(|| format!("trial {t}: not perfect")),
                },
                Err(e) => Outcome::failed(format!("trial {t}: {e}")),
            }
        });
        for c in &mut report.checks[before..] {
            c.name = format!("{label}: {}", c.name);
        }
    }
    report
}

/// x-sorted MNM matching on general-position instances: exactly `3n` bits.
pub fn sorted_optimality(trials: usize, max_n: usize, seed: u64, mode: Execution) -> Report {
    let mut report = Report::new("sorted-optimality", json!({"trials": trials, "max_n": max_n, "seed": seed}));
    per_n_checks(&mut report, max_n, trials, mode, |n| 3 * n, |n, t| {
        let mut rng = seeded_rng(item_seed(seed, n, t));
        let inst = random_instance(Kind::Mnm, GeometryClass::General, n, &mut rng);
        match simulate(&SortedMatching, &inst) {
            Ok(sim) => Outcome {
                ok: sim.is_perfect(&inst) && sim.bits_read == 3 * n,
                bits: sim.bits_read,
                note: (!sim.is_perfect(&inst)).then(|| format!("trial {t}: not perfect")),
            },
            Err(e) => Outcome::failed(format!("trial {t}: {e}")),
        }
    });
    report
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Minimum number of deterministic strategies for the 231-avoiding family.
pub fn bnm_lower_bound(max_n: usize, mode: Execution) -> Report {
    let mut report = Report::new("bnm-lb", json!({"max_n": max_n}));
    let results = map_indexed(max_n, mode, |x| {
        let n = x + 1;
        let family: Vec<Instance> = enumerate_231_avoiding(n)?
            .map(|s| bnm_red_instance(&s).map(|ai| ai.instance))
            .collect::<crate::Result<_>>()?;
        min_strategy_cover(&family, DEFAULT_COVER_CAP)
    });
    for (x, r) in results.into_iter().enumerate() {
        let n = x + 1;
        let want: usize = catalan(n).to_string().parse().unwrap_or(usize::MAX);
        match r {
            Ok(cover) => report.push(
                format!("n={n}: cover = C_n"),
                json!({"cover": cover, "n_factorial": factorial(n)}),
                json!({"cover": want}),
                cover == want,
            ),
            Err(e) => report.push(format!("n={n}: cover = C_n"), e.to_string(), want, false),
        }
    }
    if max_n >= 3 {
        report.push("C_3 < 3!", json!([5, factorial(3)]), "strict", 5 < factorial(3));
    }
    let pair: crate::Result<Vec<Instance>> = [[2, 3, 1], [2, 1, 3]]
        .iter()
        .map(|v| {
            let sigma = Permutation::new(v.to_vec())?;
            Ok(bnm_red_instance_unchecked(&sigma)?.instance)
        })
        .collect();
    let cover = pair.and_then(|p| min_strategy_cover(&p, DEFAULT_COVER_CAP));
    report.push(
        "pair {R(231), R(213)}",
        cover.as_ref().map_or_else(|e| json!(e.to_string()), |c| json!(c)),
        1,
        cover == Ok(1),
    );
    report
}

/// Instances of two 231-avoiding permutations agree up to and including the
/// first index where the permutations differ.
pub fn key_lemma(max_n: usize, mode: Execution) -> Report {
    let mut report = Report::new("key-lemma", json!({"max_n": max_n}));
    for n in 1..=max_n {
        let perms: Vec<Permutation> = enumerate_231_avoiding(n).map(|it| it.collect()).unwrap_or_default();
        let turns: Vec<_> = perms.iter().map(red_turns).collect();
        let per_first = map_indexed(perms.len(), mode, |a| {
            let mut pairs = 0usize;
            let mut bad = 0usize;
            for b in a + 1..perms.len() {
                let (s, t) = (perms[a].values(), perms[b].values());
                let i = (0..n).find(|&i| s[i] != t[i]).unwrap();
                pairs += 1;
                if turns[a][..=i] != turns[b][..=i] {
                    bad += 1;
                }
            }
            (pairs, bad)
        });
        let pairs: usize = per_first.iter().map(|p| p.0).sum();
        let bad: usize = per_first.iter().map(|p| p.1).sum();
        let expected_pairs = perms.len() * perms.len().saturating_sub(1) / 2;
        report.push(
            format!("n={n}"),
            json!({"pairs": pairs, "disagreements": bad}),
            json!({"pairs": expected_pairs, "disagreements": 0}),
            bad == 0 && pairs == expected_pairs,
        );
    }
    report
}

/// Tree, Dyck and 231-avoiding counts agree with `C_n`, and every
/// rank/unrank/bijection roundtrip is the identity.
pub fn catalan_bijections(count_max_n: usize, roundtrip_max_n: usize, mode: Execution) -> Report {
    let mut report = Report::new(
        "catalan-bijections",
        json!({"count_max_n": count_max_n, "roundtrip_max_n": roundtrip_max_n}),
    );
    let counts = map_indexed(count_max_n, mode, |x| {
        let n = x + 1;
        let perms = enumerate_231_avoiding(n).map(|it| it.count()).unwrap_or(0);
        (enumerate_trees(n).len(), enumerate_dyck(n).len(), perms)
    });
    for (x, (trees, dycks, perms)) in counts.into_iter().enumerate() {
        let n = x + 1;
        let c = catalan(n).to_string();
        let same = [trees, dycks, perms].iter().all(|v| v.to_string() == c);
        report.push(
            format!("n={n}: counts"),
            json!({"trees": trees, "dyck": dycks, "perm231": perms}),
            json!({"catalan": c}),
            same,
        );
    }
    for n in 1..=roundtrip_max_n {
        let total: usize = catalan(n).to_string().parse().unwrap();
        let bad = map_indexed(total, mode, |r| {
            let r = num_bigint::BigUint::from(r);
            let Ok(t) = tree_unrank(n, &r) else { return 1 };
            let w = tree_to_dyck(&t);
            let p = tree_to_perm(&t);
            let ok = tree_rank(&t) == r
                && dyck_unrank(n, &dyck_rank(&w)).as_ref() == Ok(&w)
                && dyck_to_tree(&w) == t
                && p.is_231_avoiding()
                && perm_to_tree(&p).as_ref() == Ok(&t);
            usize::from(!ok)
        })
        .into_iter()
        .sum::<usize>();
        report.push(format!("n={n}: roundtrips"), json!({"objects": total, "failures": bad}), json!({"failures": 0}), bad == 0);
    }
    report
}

/// Counting ingredients of the fixed-prefix MNM family.
pub fn mnm_lower_bound(max_k: usize, completion_max_k: usize, mode: Execution) -> Report {
    let mut report = Report::new("mnm-lb", json!({"max_k": max_k, "completion_max_k": completion_max_k}));
    for k in 1..=max_k {
        let members = family_members(k);
        let built: Vec<_> = map_indexed(members.len(), mode, |x| {
            let (j, s) = &members[x];
            let ai = mnm_family_instance(k, *j, s).ok()?;
            let fp = parity_fingerprint(&ai).ok()?;
            Some((ai, fp))
        });
        let failed = built.iter().filter(|b| b.is_none()).count();
        let distinct: HashSet<&Vec<u8>> = built.iter().flatten().map(|(_, fp)| fp).collect();
        report.push(
            format!("k={k}: family size"),
            members.len(),
            family_size(k).to_string(),
            members.len().to_string() == family_size(k).to_string(),
        );
        report.push(
            format!("k={k}: fingerprints injective"),
            json!({"members": members.len(), "distinct": distinct.len(), "build_failures": failed}),
            json!({"distinct": members.len()}),
            failed == 0 && distinct.len() == members.len(),
        );
        if k > completion_max_k {
            continue;
        }
        let stats = map_indexed(built.len(), mode, |x| {
            let Some((ai, _)) = &built[x] else { return (false, 0, 0) };
            let complete = has_perfect_completion(&ai.instance).unwrap_or(false);
            let mut found = 0;
            let mut violations = 0;
            for prior in prefix_priors(ai).unwrap_or_default() {
                match consistent(&prior, ai) {
                    Ok(r) if r.consistent => {
                        found += 1;
                        if !(r.large_enough && r.opposite_parities) {
                            violations += 1;
                        }
                    }
                    Ok(_) => {}
                    Err(_) => violations += 1,
                }
            }
            (complete, found, violations)
        });
        let incomplete = stats.iter().filter(|s| !s.0).count();
        let without_prior = stats.iter().filter(|s| s.1 == 0).count();
        let found: usize = stats.iter().map(|s| s.1).sum();
        let violations: usize = stats.iter().map(|s| s.2).sum();
        report.push(
            format!("k={k}: perfect completion exists"),
            json!({"members_without": incomplete}),
            json!({"members_without": 0}),
            incomplete == 0,
        );
        report.push(
            format!("k={k}: consistent priors have >= k edges of opposite parity"),
            json!({"consistent_priors": found, "members_without_prior": without_prior, "violations": violations}),
            json!({"members_without_prior": 0, "violations": 0}),
            violations == 0 && without_prior == 0,
        );
    }
    report
}

struct TraceStats {
    y_le_x: bool,
    sum_x_le_u: bool,
    parents_ok: bool,
    even_y: (usize, usize),
    unmatched: usize,
    error: Option<String>,
}

/// Markov adversary against the greedy player.
pub fn coupling(n: usize, trials: usize, seed: u64, mode: Execution) -> Report {
    let mut report = Report::new("coupling", json!({"n": n, "trials": trials, "seed": seed}));
    let stats = map_indexed(trials, mode, |t| {
        let run = || -> crate::Result<TraceStats> {
            let ai = markov_instance(n, derive_seed(seed, t as u64))?;
            let sim = simulate(&Greedy, &ai.instance)?;
            let r = coupling_diagnostics(&ai, &sim)?;
            Ok(TraceStats {
                y_le_x: r.y_never_exceeds_x(),
                sum_x_le_u: r.sum_x() <= r.unmatched,
                parents_ok: ai.markov().is_some_and(|m| m.satisfies_parent_recursion()),
                even_y: r.even_y(),
                unmatched: r.unmatched,
                error: None,
            })
        };
        run().unwrap_or_else(|e| TraceStats {
            y_le_x: false,
            sum_x_le_u: false,
            parents_ok: false,
            even_y: (0, 0),
            unmatched: 0,
            error: Some(e.to_string()),
        })
    });
    let errors: Vec<&String> = stats.iter().filter_map(|s| s.error.as_ref()).collect();
    let count = |f: fn(&TraceStats) -> bool| stats.iter().filter(|s| !f(s)).count();
    let y_bad = count(|s| s.y_le_x);
    let sum_bad = count(|s| s.sum_x_le_u);
    let p_bad = count(|s| s.parents_ok);
    let (ys, yc) = stats.iter().fold((0, 0), |a, s| (a.0 + s.even_y.0, a.1 + s.even_y.1));
    let mean = if yc == 0 { f64::NAN } else { ys as f64 / yc as f64 };
    let unmatched: usize = stats.iter().map(|s| s.unmatched).sum();

    report.push("traces without errors", json!({"errors": errors.len(), "first": errors.first()}), 0, errors.is_empty());
    report.push("Y_i <= X_i on every step", json!({"violating_traces": y_bad}), 0, y_bad == 0);
    report.push("sum X_i <= unmatched on every trace", json!({"violating_traces": sum_bad}), 0, sum_bad == 0);
    report.push("P_i = 1 - P_(i-1) F_i", json!({"violating_traces": p_bad}), 0, p_bad == 0);
    report.push(
        "mean Y over even match indices",
        json!({"mean": mean, "samples": yc}),
        json!({"mean": 0.25, "tolerance": 0.02}),
        (mean - 0.25).abs() <= 0.02,
    );
    report.push(
        "mean unmatched fraction (informational)",
        unmatched as f64 / (trials.max(1) * 2 * n) as f64,
        Value::Null,
        true,
    );
    report
}

/// Documented values of the rate function at the table points.
pub const RATE_TABLE: [(f64, f64, f64); 3] = [
    (0.95, 0.045797075839, 0.002957466697),
    (0.97, 0.086479770023, 0.034522106635),
    (0.99, 0.150719388672, 0.116292699175),
];

pub fn rate_table() -> Report {
    let mut report = Report::new("rate-table", json!({"alphas": RATE_TABLE.map(|r| r.0)}));
    for (alpha, c2, c4) in RATE_TABLE {
        for (variant, want) in [(RateVariant::Abstract, c2), (RateVariant::Proof, c4)] {
            let got = approx_lb_rate(alpha, variant);
            let pass = got.as_ref().is_ok_and(|g| g.is_finite() && (g - want).abs() <= 1e-9);
            report.push(
                format!("alpha={alpha} c={}", variant.constant()),
                got.map_or_else(|e| json!(e.to_string()), |g| json!(g)),
                json!({"value": want, "tolerance": 1e-9}),
                pass,
            );
        }
    }
    report
}

/// Brute-force minimum-length matchings are non-crossing, and encoding any
/// perfect non-crossing matching as a tree and replaying it reproduces it.
pub fn offline_agreement(
    brute_trials: usize,
    max_points: usize,
    replay_trials: usize,
    replay_max_n: usize,
    seed: u64,
    mode: Execution,
) -> Report {
    let mut report = Report::new(
        "offline-agreement",
        json!({"brute_trials": brute_trials, "max_points": max_points,
               "replay_trials": replay_trials, "replay_max_n": replay_max_n, "seed": seed}),
    );
    let max_half = (max_points / 2).max(1);
    let brute = map_indexed(brute_trials, mode, |t| {
        let n = 1 + t % max_half;
        let kind = if t % 3 == 2 { Kind::Bnm } else { Kind::Mnm };
        let geometry = if t % 4 == 3 { GeometryClass::Convex } else { GeometryClass::General };
        let mut rng = seeded_rng(item_seed(seed, n, t));
        let inst = random_instance(kind, geometry, n, &mut rng);
        let config = MinLengthConfig { cap: max_points, prune_crossings: false };
        min_length_pm_with(&inst, config).is_ok_and(|m| validate_matching(&inst, &m, true).is_valid())
    });
    let bad = brute.iter().filter(|ok| !**ok).count();
    report.push(
        "min-length matching is perfect and non-crossing",
        json!({"instances": brute_trials, "failures": bad}),
        json!({"failures": 0}),
        bad == 0,
    );

    let replay = map_indexed(replay_trials, mode, |t| {
        let n = 1 + t % replay_max_n.max(1);
        let mut rng = seeded_rng(item_seed(seed ^ 0x5eed, n, t));
        let inst = random_instance(Kind::Bnm, alternate_geometry(t), n, &mut rng);
        let m: crate::Result<Matching> = if 2 * n <= max_points {
            min_length_pm_with(&inst, MinLengthConfig { cap: max_points, prune_crossings: true })
        } else {
            convex_noncrossing_pm(&inst)
        };
        m.and_then(|m| Ok(simulate(&BtReplay { matching: m.clone() }, &inst)?.matching == m))
            .unwrap_or(false)
    });
    let bad = replay.iter().filter(|ok| !**ok).count();
    report.push(
        "tree replay reproduces the matching",
        json!({"instances": replay_trials, "failures": bad}),
        json!({"failures": 0}),
        bad == 0,
    );
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_campaigns_pass() {
        let mode = Execution::Sequential;
        for r in [
            bt_optimality(20, 5, 4, 1, mode),
            asap_optimality(20, 5, 1, mode),
            sorted_optimality(20, 5, 1, mode),
            bnm_lower_bound(3, mode),
            key_lemma(4, mode),
            catalan_bijections(6, 5, mode),
            mnm_lower_bound(2, 1, mode),
            coupling(30, 50, 3, mode),
            rate_table(),
            offline_agreement(20, 8, 20, 6, 1, mode),
        ] {
            assert!(r.pass, "{}", serde_json::to_string_pretty(&r).unwrap());
        }
    }

    #[test]
    fn modes_agree() {
        let a = serde_json::to_value(sorted_optimality(10, 4, 9, Execution::Sequential)).unwrap();
        let b = serde_json::to_value(sorted_optimality(10, 4, 9, Execution::Parallel)).unwrap();
        assert_eq!(a, b);
    }
}
