use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use hambypass::conditions::{
    bipartite_condition_a, classify_exception, four_vertex_condition, manoussakis_triple, meyniel_like,
    min_degree_condition, one_exception_degree, ConditionId,
};
use hambypass::families::{generate, FamilyId, FamilySpec};
use hambypass::format::{self, to_arc_list_with_header, to_dot};
use hambypass::harness::{self, evaluate, persist, scan, EvalOptions, ScanOptions, Space, Subject, TheoremId, VerifyConfig};
use hambypass::solvers::{
    bypass_through, find_spanning_dnq, hamiltonian_bypass, hamiltonian_cycle, hamiltonian_path, longest_cycle_through,
    Outcome,
};
use hambypass::SolveBudget;

/// Hamiltonian bypasses in digraphs: generators, condition checks, exact
/// solvers and a verification harness.
#[derive(Parser)]
#[command(name = "hambypass", version)]
struct Cli {
    /// Worker threads for scans (default: all cores).
    #[arg(long, global = true, env = "HAMBYPASS_WORKERS")]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Arclist,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum SolveWhat {
    Cycle,
    Path,
    Bypass,
    Dnq,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exhaustive,
    Random,
    FixedCycle,
}

#[derive(Subcommand)]
enum Command {
    /// Print a member of a digraph family.
    Gen {
        #[arg(long)]
        family: FamilyId,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        /// Arc list for the subdigraph on B (D0 only).
        #[arg(long)]
        b_arcs: Option<PathBuf>,
        /// Candidate limit for the B8 search.
        #[arg(long)]
        max_candidates: Option<u64>,
        #[arg(long, value_enum, default_value = "arclist")]
        format: OutputFormat,
    },
    /// Evaluate degree conditions (and optionally registry entries); one JSON
    /// object per line.
    Check {
        #[arg(long)]
        input: PathBuf,
        /// Conditions to evaluate (default: all that apply).
        #[arg(long = "condition")]
        conditions: Vec<ConditionId>,
        /// Threshold for threshold conditions (default: the usual one for the order).
        #[arg(long)]
        threshold: Option<usize>,
        /// `l` for condition A_l.
        #[arg(long, default_value_t = 0)]
        l: usize,
        /// Let the two pairs of the four-vertex condition share a vertex.
        #[arg(long)]
        overlapping: bool,
        /// Registry entries to evaluate.
        #[arg(long = "entry")]
        entries: Vec<TheoremId>,
        #[arg(long, default_value_t = 0)]
        budget: u64,
        /// Also match the digraph against the exceptional families.
        #[arg(long)]
        classify: bool,
    },
    /// Exact search; prints the witness or the outcome token. Exit code 0
    /// found, 1 not found, 2 budget exhausted.
    Solve {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        what: SolveWhat,
        #[arg(long, default_value_t = 2)]
        q: usize,
        /// Cycle: longest cycle through z. Bypass: bypass through z.
        #[arg(long)]
        through: Option<usize>,
        /// Smallest bypass order accepted with --through.
        #[arg(long, default_value_t = 3)]
        min_order: usize,
        #[arg(long)]
        from: Option<usize>,
        #[arg(long)]
        to: Option<usize>,
        /// Node limit, 0 for none.
        #[arg(long, default_value_t = 0)]
        budget: u64,
    },
    /// Scan a registry entry over a space; prints the record as JSON.
    Search {
        #[arg(long)]
        entry: TheoremId,
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long, default_value_t = 0.5)]
        prob: f64,
        #[arg(long, default_value_t = 1000)]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        budget: u64,
        /// Exhaustive mode: only canonical representatives.
        #[arg(long)]
        canonical: bool,
        /// Random bipartite mode: plant the fixed Hamiltonian cycle.
        #[arg(long)]
        hamiltonian: bool,
        #[arg(long)]
        max_candidates: Option<u64>,
        /// Append the record and samples to this results directory.
        #[arg(long)]
        results: Option<PathBuf>,
        /// Human-readable summary instead of JSON.
        #[arg(long)]
        table: bool,
    },
    /// Run the acceptance suite and print a pass/fail table.
    VerifyPaper {
        /// Criteria 1, 3, 4, 5, 6, 7 only.
        #[arg(long)]
        quick: bool,
        /// Run only these criteria.
        #[arg(long = "only")]
        only: Vec<u8>,
        #[arg(long, default_value_t = 0)]
        budget: u64,
        /// JSON lines instead of the table.
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: worker pool: {e}");
            return ExitCode::from(3);
        }
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(3)
        }
    }
}

fn read_input(path: &Path) -> Result<format::ArcList> {
    format::read_file(path).with_context(|| format!("reading {}", path.display()))
}

fn need(v: Option<usize>, name: &str) -> Result<usize> {
    v.with_context(|| format!("--{name} is required here"))
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Gen { family, p, k, n, q, b_arcs, max_candidates, format: out } => {
            let spec = match family {
                FamilyId::D0 => {
                    let b_sub = b_arcs.as_deref().map(read_input).transpose()?.map(|a| a.digraph);
                    FamilySpec::D0 { p: need(p, "p")?, b_sub }
                }
                FamilyId::Dpkk => FamilySpec::Dpkk { p: need(p, "p")?, k: need(k, "k")? },
                FamilyId::T5 => FamilySpec::T5,
                FamilyId::Hn => FamilySpec::Hn { n: need(n.or(p), "n")? },
                FamilyId::Dnq => FamilySpec::Dnq { n: need(n.or(p), "n")?, q: need(q, "q")? },
                FamilyId::Complete => FamilySpec::Complete { p: need(p, "p")? },
                FamilyId::Cycle => FamilySpec::Cycle { p: need(p, "p")? },
                FamilyId::B6 => FamilySpec::B6,
                FamilyId::B8 => FamilySpec::B8 { max_candidates },
            };
            let g = generate(&spec)?;
            let header = provenance(&spec, &g.digraph);
            match out {
                OutputFormat::Arclist => print!("{}", to_arc_list_with_header(&g.digraph, g.partition, &header)),
                OutputFormat::Dot => print!("{}", to_dot(&g.digraph, &format!("{family:?}"))),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { input, conditions, threshold, l, overlapping, entries, budget, classify } => {
            let list = read_input(&input)?;
            let d = &list.digraph;
            let p = d.order();
            let bip = list.partition.map(|_| list.bipartite()).transpose()?;
            let wanted = if conditions.is_empty() { ConditionId::ALL.to_vec() } else { conditions };
            for c in wanted {
                let report = match c {
                    ConditionId::MinDegree => min_degree_condition(d, threshold.unwrap_or(p)),
                    ConditionId::MeynielLike => meyniel_like(d, threshold.unwrap_or(2 * p - 2), None),
                    ConditionId::ManoussakisTriple => match manoussakis_triple(d) {
                        Ok(r) => r,
                        Err(_) => continue,
                    },
                    ConditionId::OneExceptionDegree => one_exception_degree(d),
                    ConditionId::ConditionA => match &bip {
                        Some(b) => bipartite_condition_a(b, l),
                        None => continue,
                    },
                    ConditionId::FourVertex => {
                        four_vertex_condition(d, threshold.unwrap_or((4 * p).saturating_sub(4)), overlapping)
                    }
                };
                println!("{}", serde_json::to_string(&report)?);
            }
            if classify {
                let class = classify_exception(d)?;
                println!("{}", serde_json::json!({ "exception_class": class.to_string() }));
            }
            let opts = EvalOptions { budget: SolveBudget::nodes(budget), full_breakdown: true };
            let mut defect = false;
            for e in entries {
                let subject = match &bip {
                    Some(b) if e.is_bipartite() => Subject::Bipartite(b),
                    _ => Subject::General(d),
                };
                let v = evaluate(e, subject, opts)?;
                defect |= e.is_proved() && v.status == harness::VerdictStatus::Counterexample;
                println!("{}", serde_json::to_string(&v)?);
            }
            Ok(if defect { ExitCode::FAILURE } else { ExitCode::SUCCESS })
        }
        Command::Solve { input, what, q, through, min_order, from, to, budget } => {
            let d = read_input(&input)?.digraph;
            let budget = SolveBudget::nodes(budget);
            let outcome: Outcome<Vec<usize>> = match (what, through) {
                (SolveWhat::Cycle, None) => hamiltonian_cycle(&d, budget).map(|w| w.vertices),
                (SolveWhat::Cycle, Some(z)) => longest_cycle_through(&d, z, budget)?.map(|w| w.vertices),
                (SolveWhat::Path, _) => hamiltonian_path(&d, from, to, budget)?.map(|w| w.vertices),
                (SolveWhat::Bypass, None) => hamiltonian_bypass(&d, budget).map(|w| w.vertices),
                (SolveWhat::Bypass, Some(z)) => bypass_through(&d, z, min_order, budget)?.map(|w| w.vertices),
                (SolveWhat::Dnq, _) => find_spanning_dnq(&d, q, budget)?,
            };
            Ok(match outcome {
                Outcome::Found(seq) => {
                    let s: Vec<String> = seq.iter().map(|v| v.to_string()).collect();
                    println!("{}", s.join(" "));
                    ExitCode::SUCCESS
                }
                o => {
                    println!("{}", o.token());
                    ExitCode::from(if o.is_exhausted() { 2 } else { 1 })
                }
            })
        }
        Command::Search {
            entry,
            mode,
            p,
            a,
            prob,
            count,
            seed,
            budget,
            canonical,
            hamiltonian,
            max_candidates,
            results,
            table,
        } => {
            let space = match (mode, entry.is_bipartite()) {
                (Mode::Exhaustive, false) => Space::Exhaustive { p: need(p, "p")?, canonical },
                (Mode::Exhaustive, true) => Space::ExhaustiveBipartite { a: need(a, "a")? },
                (Mode::FixedCycle, true) => Space::FixedCycle { a: need(a, "a")? },
                (Mode::FixedCycle, false) => bail!("fixed-cycle mode applies to bipartite entries only"),
                (Mode::Random, false) => Space::Random { p: need(p, "p")?, prob, count, seed },
                (Mode::Random, true) => Space::RandomBipartite { a: need(a, "a")?, prob, count, seed, hamiltonian },
            };
            let opts = ScanOptions { budget: SolveBudget::nodes(budget), max_candidates, ..ScanOptions::default() };
            let record = scan(entry, &space, &opts)?;
            if let Some(dir) = results {
                persist(&record, &dir)?;
            }
            if table {
                let c = &record.counts;
                println!("entry            {}", record.entry);
                println!("status           {:?}", record.status);
                for (k, v) in [
                    ("enumerated", c.enumerated),
                    ("hypothesis held", c.hypothesis_held),
                    ("conclusion held", c.conclusion_held),
                    ("exceptions", c.exceptions),
                    ("counterexamples", c.counterexamples),
                    ("exhausted", c.exhausted),
                ] {
                    println!("{k:<16} {v}");
                }
                for (class, n) in &record.exception_classes {
                    println!("  {class:<14} {n}");
                }
            } else {
                println!("{}", serde_json::to_string(&record)?);
            }
            Ok(if record.has_defect() { ExitCode::FAILURE } else { ExitCode::SUCCESS })
        }
        Command::VerifyPaper { quick, only, budget, json } => {
            let cfg = VerifyConfig { budget: SolveBudget::nodes(budget), ..VerifyConfig::default() };
            let ids: Vec<u8> = if !only.is_empty() {
                only
            } else if quick {
                harness::QUICK.to_vec()
            } else {
                harness::ALL.to_vec()
            };
            let results = harness::run(&ids, &cfg);
            if json {
                for r in &results {
                    println!("{}", serde_json::to_string(r)?);
                }
            } else {
                print!("{}", harness::table(&results));
            }
            Ok(if results.iter().all(|r| r.passed) { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
    }
}

/// Header lines recording how a fixture was produced.
fn provenance(spec: &FamilySpec, d: &hambypass::Digraph) -> Vec<String> {
    let mut lines = vec![format!("generated by: {spec:?}").replace('\n', " ")];
    match spec {
        FamilySpec::B6 => {
            lines.push("derivation: exhaustive 3+3 scan for strong, A_1, non-Hamiltonian; single isomorphism class".into());
        }
        FamilySpec::B8 { .. } => {
            lines.push("derivation: fixed-cycle chord scan for A_0 without a Hamiltonian bypass".into());
        }
        _ => {}
    }
    lines.push(format!("arcs: {}", d.arc_count()));
    lines
}
