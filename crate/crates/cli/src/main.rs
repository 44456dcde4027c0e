use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ncm_core::adversaries::{
    bnm_red_instance, coupling_diagnostics, markov_instance, mnm_family_instance, AnnotatedInstance, RNG_ID,
};
use ncm_core::campaigns::{self, Report};
use ncm_core::codecs::{
    catalan, dyck_rank, elias_delta_decode, elias_delta_encode, perm_to_tree, ranked_width, tree_rank,
    tree_to_dyck, tree_to_perm, tree_unrank, AdviceTape, DyckWord, Permutation,
};
use ncm_core::io::{read_instance, write_instance, GENERATOR};
use ncm_core::online::{simulate, AsapMatching, BtMatching, Greedy, OnlineAlgorithm, SortedMatching, TieBreak};
use ncm_core::par::{init_workers_from_env, Execution};
use ncm_core::random::{random_convex, random_general, seeded_rng};
use ncm_core::svg::render_svg;
use ncm_core::{Error, Kind};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_BAD_INPUT: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;

#[derive(Parser)]
#[command(name = "ncm", version, about = "Online non-crossing matching with advice")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write an instance file.
    Generate {
        family: Family,
        /// Output JSON path.
        #[arg(short, long)]
        out: PathBuf,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Permutation for bnm-perm, comma separated.
        #[arg(long, value_delimiter = ',')]
        sigma: Vec<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        j: Option<usize>,
        /// Gap numbers for mnm-family, comma separated.
        #[arg(long, value_delimiter = ',')]
        subset: Vec<usize>,
        /// Kind for the random families.
        #[arg(long)]
        kind: Option<KindArg>,
    },
    /// Run an algorithm on an instance file and print a JSON report.
    Run {
        algorithm: Algorithm,
        instance: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
        /// ASAP only: prefix the advice with the length.
        #[arg(long)]
        unknown_n: bool,
        #[arg(long, value_enum, default_value_t = TieArg::Smallest)]
        tie_break: TieArg,
    },
    /// Run a verification campaign and print a pass/fail report.
    Verify {
        check: Check,
        /// Largest n (or the trace size for coupling).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Run without the worker pool.
        #[arg(long)]
        sequential: bool,
    },
    /// Catalan and advice-tape utilities.
    Codec {
        #[command(subcommand)]
        op: CodecOp,
    },
}

#[derive(Subcommand)]
enum CodecOp {
    /// Print C_n and the ranked advice width.
    Catalan { n: usize },
    /// Print the tree, Dyck word and permutation of rank `rank` among size-n objects.
    Unrank { n: usize, rank: String },
    /// Rank a 231-avoiding permutation.
    RankPerm {
        #[arg(value_delimiter = ',')]
        sigma: Vec<usize>,
    },
    /// Rank a Dyck word given as a 0/1 string.
    RankDyck { word: String },
    EliasEncode { m: u64 },
    EliasDecode { bits: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    BnmPerm,
    MnmFamily,
    Markov,
    RandomConvex,
    RandomGeneral,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Mnm,
    Bnm,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algorithm {
    Bt,
    Asap,
    Sorted,
    Greedy,
}

#[derive(Clone, Copy, ValueEnum)]
enum TieArg {
    Smallest,
    Largest,
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    BnmLb,
    MnmLb,
    CatalanBijections,
    Coupling,
    RateTable,
    Bt,
    Asap,
    Sorted,
    KeyLemma,
    Offline,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Precondition(_) | Error::NotConvex(_) | Error::DuplicateX(..) | Error::Not231Avoiding(_) => {
                EXIT_PRECONDITION
            }
            _ => EXIT_BAD_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn bad_input(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_BAD_INPUT,
        message: message.into(),
    }
}

fn require(value: Option<usize>, name: &str) -> Result<usize, Failure> {
    value.ok_or_else(|| bad_input(format!("--{name} is required")))
}

fn within(value: usize, lo: usize, hi: usize, name: &str) -> Result<usize, Failure> {
    if value < lo || value > hi {
        return Err(bad_input(format!("--{name} must be in {lo}..={hi}, got {value}")));
    }
    Ok(value)
}

fn print_json(v: &Value) {
    use std::io::Write;
    // a closed pipe (e.g. `| head`) is not an error worth reporting
    let _ = writeln!(std::io::stdout(), "{}", serde_json::to_string_pretty(v).expect("report serializes"));
}

fn generate(
    family: Family,
    out: &Path,
    n: Option<usize>,
    seed: u64,
    sigma: Vec<usize>,
    k: Option<usize>,
    j: Option<usize>,
    subset: Vec<usize>,
    kind: Option<KindArg>,
) -> Result<(), Failure> {
    let kind_of = |default: Kind| match kind {
        Some(KindArg::Mnm) => Kind::Mnm,
        Some(KindArg::Bnm) => Kind::Bnm,
        None => default,
    };
    let (ai, name, params, seeded) = match family {
        Family::BnmPerm => {
            if sigma.is_empty() {
                return Err(bad_input("--sigma is required"));
            }
            let p = Permutation::new(sigma.clone()).map_err(|e| bad_input(e.to_string()))?;
            (bnm_red_instance(&p).map_err(|e| bad_input(e.to_string()))?, "bnm-perm", json!({"sigma": sigma}), false)
        }
        Family::MnmFamily => {
            let k = within(require(k, "k")?, 1, 8, "k")?;
            let j = require(j, "j")?;
            let ai = mnm_family_instance(k, j, &subset).map_err(|e| bad_input(e.to_string()))?;
            (ai, "mnm-family", json!({"k": k, "j": j, "subset": subset}), false)
        }
        Family::Markov => {
            let n = within(require(n, "n")?, 1, 100_000, "n")?;
            (markov_instance(n, seed)?, "markov", json!({"n": n}), true)
        }
        Family::RandomConvex => {
            let n = within(require(n, "n")?, 1, 300, "n")?;
            let kind = kind_of(Kind::Bnm);
            let inst = random_convex(kind, n, &mut seeded_rng(seed));
            (AnnotatedInstance::plain(inst), "random-convex", json!({"n": n, "kind": kind}), true)
        }
        Family::RandomGeneral => {
            let n = within(require(n, "n")?, 1, 200, "n")?;
            let kind = kind_of(Kind::Mnm);
            let inst = random_general(kind, n, &mut seeded_rng(seed));
            (AnnotatedInstance::plain(inst), "random-general", json!({"n": n, "kind": kind}), true)
        }
    };
    let meta = json!({
        "family": name,
        "params": params,
        "seed": if seeded { json!(seed) } else { Value::Null },
        "rng": if seeded { json!(if matches!(family, Family::Markov) { RNG_ID } else { "rand_chacha::ChaCha8Rng" }) } else { Value::Null },
        "generator": GENERATOR,
    });
    write_instance(out, &ai, meta)?;
    eprintln!("wrote {} points to {}", ai.instance.len(), out.display());
    Ok(())
}

fn run(algorithm: Algorithm, path: &Path, svg: Option<&Path>, unknown_n: bool, tie: TieArg) -> Result<(), Failure> {
    let (ai, meta) = read_instance(path)?;
    let tie_break = match tie {
        TieArg::Smallest => TieBreak::Smallest,
        TieArg::Largest => TieBreak::Largest,
    };
    let asap = AsapMatching { unknown_n, tie_break };
    let alg: &dyn OnlineAlgorithm = match algorithm {
        Algorithm::Bt => &BtMatching,
        Algorithm::Asap => &asap,
        Algorithm::Sorted => &SortedMatching,
        Algorithm::Greedy => &Greedy,
    };
    let inst = &ai.instance;
    let sim = simulate(alg, inst)?;
    let mut report = json!({
        "algorithm": alg.name(),
        "instance": path.display().to_string(),
        "seed": meta.get("seed").cloned().unwrap_or(Value::Null),
        "kind": inst.kind(),
        "geometry": inst.geometry(),
        "n": inst.n(),
        "points": inst.len(),
        "matched": sim.matched_points(),
        "unmatched": inst.len() - sim.matched_points(),
        "perfect": sim.is_perfect(inst),
        "bits_written": sim.bits_written,
        "bits_read": sim.bits_read,
        "violations": sim.violations,
        "edges": sim.matching.edges().map(|(a, b)| [a + 1, b + 1]).collect::<Vec<_>>(),
    });
    if algorithm == Algorithm::Bt && inst.kind() == Kind::Bnm {
        report["expected_bits"] = json!(ranked_width(inst.n()));
    }
    if ai.markov().is_some() {
        let c = coupling_diagnostics(&ai, &sim)?;
        let (ys, yc) = c.even_y();
        report["coupling"] = json!({"sum_x": c.sum_x(), "isolated": c.isolated, "even_y_sum": ys, "even_y_count": yc});
    }
    if let Some(svg) = svg {
        std::fs::write(svg, render_svg(inst, &sim.matching))
            .map_err(|e| bad_input(format!("{}: {e}", svg.display())))?;
    }
    print_json(&report);
    Ok(())
}

fn verify(check: Check, n: Option<usize>, k: Option<usize>, trials: Option<usize>, seed: u64, mode: Execution) -> Result<Report, Failure> {
    Ok(match check {
        Check::BnmLb => campaigns::bnm_lower_bound(within(n.unwrap_or(3), 1, 5, "n")?, mode),
        Check::MnmLb => {
            let k = within(k.unwrap_or(2), 1, 3, "k")?;
            campaigns::mnm_lower_bound(k, k.min(2), mode)
        }
        Check::CatalanBijections => {
            let n = within(n.unwrap_or(8), 1, 10, "n")?;
            campaigns::catalan_bijections(n, n.min(8), mode)
        }
        Check::Coupling => campaigns::coupling(
            within(n.unwrap_or(200), 1, 5_000, "n")?,
            within(trials.unwrap_or(10_000), 1, 1_000_000, "trials")?,
            seed,
            mode,
        ),
        Check::RateTable => campaigns::rate_table(),
        Check::Bt => campaigns::bt_optimality(
            within(trials.unwrap_or(500), 1, 100_000, "trials")?,
            within(n.unwrap_or(10), 1, 40, "n")?,
            n.unwrap_or(6).min(6),
            seed,
            mode,
        ),
        Check::Asap => campaigns::asap_optimality(
            within(trials.unwrap_or(500), 1, 100_000, "trials")?,
            within(n.unwrap_or(10), 1, 40, "n")?,
            seed,
            mode,
        ),
        Check::Sorted => campaigns::sorted_optimality(
            within(trials.unwrap_or(500), 1, 100_000, "trials")?,
            within(n.unwrap_or(10), 1, 40, "n")?,
            seed,
            mode,
        ),
        Check::KeyLemma => campaigns::key_lemma(within(n.unwrap_or(5), 1, 7, "n")?, mode),
        Check::Offline => campaigns::offline_agreement(
            within(trials.unwrap_or(200), 1, 100_000, "trials")?,
            12,
            within(trials.unwrap_or(500), 1, 100_000, "trials")?,
            within(n.unwrap_or(10), 1, 40, "n")?,
            seed,
            mode,
        ),
    })
}

fn parse_bits(s: &str) -> Result<Vec<bool>, Failure> {
    s.chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(bad_input(format!("not a bit: {c:?}"))),
        })
        .collect()
}

fn bit_string(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

fn codec(op: CodecOp) -> Result<(), Failure> {
    let report = match op {
        CodecOp::Catalan { n } => {
            json!({"n": n, "catalan": catalan(n).to_string(), "width": ranked_width(n)})
        }
        CodecOp::Unrank { n, rank } => {
            let r = rank.parse().map_err(|_| bad_input(format!("not a rank: {rank:?}")))?;
            let t = tree_unrank(n, &r)?;
            let perm: Vec<usize> = tree_to_perm(&t).values().to_vec();
            json!({"n": n, "rank": rank, "tree": format!("{t:?}"), "dyck": tree_to_dyck(&t).to_string(), "perm": perm})
        }
        CodecOp::RankPerm { sigma } => {
            let p = Permutation::new(sigma.clone()).map_err(|e| bad_input(e.to_string()))?;
            let t = perm_to_tree(&p)?;
            json!({"perm": sigma, "rank": tree_rank(&t).to_string(), "tree": format!("{t:?}")})
        }
        CodecOp::RankDyck { word } => {
            let w = DyckWord::new(parse_bits(&word)?)?;
            json!({"dyck": word, "rank": dyck_rank(&w).to_string()})
        }
        CodecOp::EliasEncode { m } => {
            if m == 0 {
                return Err(bad_input("Elias delta encodes positive integers"));
            }
            json!({"m": m, "code": bit_string(&elias_delta_encode(m))})
        }
        CodecOp::EliasDecode { bits } => {
            let mut tape = AdviceTape::from_bits(parse_bits(&bits)?);
            let m = elias_delta_decode(&mut tape)?;
            json!({"m": m, "bits_read": tape.bits_read()})
        }
    };
    print_json(&report);
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    init_workers_from_env();
    let result = match cli.command {
        Command::Generate {
            family,
            out,
            n,
            seed,
            sigma,
            k,
            j,
            subset,
            kind,
        } => generate(family, &out, n, seed, sigma, k, j, subset, kind),
        Command::Run {
            algorithm,
            instance,
            svg,
            unknown_n,
            tie_break,
        } => run(algorithm, &instance, svg.as_deref(), unknown_n, tie_break),
        Command::Verify {
            check,
            n,
            k,
            trials,
            seed,
            sequential,
        } => {
            let mode = if sequential { Execution::Sequential } else { Execution::available() };
            verify(check, n, k, trials, seed, mode).map(|report| {
                print_json(&serde_json::to_value(&report).expect("report serializes"));
                if !report.pass {
                    std::process::exit(EXIT_VERIFY_FAILED.into());
                }
            })
        }
        Command::Codec { op } => codec(op),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
