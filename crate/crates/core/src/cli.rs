//! The `rado` command line.
//!
//! Exit codes: 0 success, 1 a negative domain answer (not a Rado system,
//! avoidable, witness rejected, nothing found), 2 usage or input error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::construct::{
    build_observation_solution, check_observation, ObservationInput, ObservationReport, ObservationSolution,
};
use crate::error::{RadoError, Result};
use crate::lattice::{
    count_degenerate, count_monochromatic, count_solutions, enumerate_vector_solutions_with_budget, is_degenerate,
    Coloring, DegeneracyReport, Mask, Point, DEFAULT_BUDGET,
};
use crate::mpc::{
    find_mono_mpc, generate_mpc, generate_mpc_vector, lemma_mpc_embed, mpc_contains_solution_with_budget, McGenerators,
    MpcSpec, VectorMpcSpec,
};
use crate::search::{
    export_dimacs, find_avoiding_coloring, rado_number, verify_witness, DegeneracyFilter, DistinctFilter, RadoNumber,
    SearchConfig, SearchOutcome, SearchProblem, SearchStatus, WitnessReport,
};
use crate::systems::{
    check_columns_condition_with_limit, parse_system, rank_profile, ColumnsReport, RankProfile, VectorSystem,
};

/// Environment variable consulted when `--threads` is absent.
pub const THREADS_ENV: &str = "RADO_THREADS";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "rado", version, about = "Multidimensional Rado theory toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide the columns condition for every coordinate matrix.
    CheckColumns {
        #[command(flatten)]
        input: SystemArg,
        /// Largest number of columns searched.
        #[arg(long, default_value_t = crate::systems::DEFAULT_COLUMN_LIMIT)]
        limit: usize,
        #[arg(long)]
        json: bool,
    },
    /// List the solution tuples in [1,n]^d.
    Enumerate {
        #[command(flatten)]
        input: SystemArg,
        #[arg(long)]
        n: i64,
        /// Print at most this many tuples.
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        #[arg(long)]
        json: bool,
    },
    /// Count solutions, degenerate solutions and (with --coloring) monochromatic ones.
    Count {
        #[command(flatten)]
        input: SystemArg,
        #[arg(long)]
        n: Option<i64>,
        #[arg(long, value_delimiter = ',')]
        mask: Option<Vec<usize>>,
        /// Coloring certificate; its n is used and per-color counts are reported.
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        #[arg(long)]
        json: bool,
    },
    /// Classify a point set, or count degenerate solutions of a system.
    Degenerate {
        /// Points as `x,y;x,y;...`.
        #[arg(long, conflicts_with_all = ["file", "n"])]
        points: Option<String>,
        #[arg(short = 'f', long = "system")]
        file: Option<PathBuf>,
        #[arg(long)]
        n: Option<i64>,
        #[arg(long, value_delimiter = ',')]
        mask: Option<Vec<usize>>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        #[arg(long)]
        json: bool,
    },
    /// Search [1,n]^d for a coloring with no monochromatic solution.
    Search {
        #[command(flatten)]
        problem: ProblemArgs,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        emit_witness: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Smallest n for which every coloring of [1,n]^d has a monochromatic solution.
    RadoNumber {
        #[command(flatten)]
        problem: ProblemArgs,
        #[arg(long)]
        max_n: usize,
        /// Writes the avoiding coloring of [1,n-1]^d (or of [1,max_n]^d).
        #[arg(long)]
        emit_witness: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Check a witness coloring against a system.
    Verify {
        #[command(flatten)]
        input: SystemArg,
        #[arg(long)]
        witness: PathBuf,
        #[arg(long, value_delimiter = ',')]
        mask: Option<Vec<usize>>,
        #[arg(long)]
        exclude_degenerate: bool,
        #[arg(long)]
        distinct: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        #[arg(long)]
        json: bool,
    },
    /// Write the avoidance problem for [1,n]^d as DIMACS CNF.
    ExportDimacs {
        #[command(flatten)]
        problem: ProblemArgs,
        #[arg(long)]
        n: usize,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// (m,p,c)-set tools.
    Mpc {
        #[command(subcommand)]
        command: MpcCommand,
    },
    /// Vandermonde construction for p_1 + .. + p_k = q_1 + .. + q_l.
    Observe {
        #[arg(long, value_delimiter = ',', required = true)]
        indices: Vec<u64>,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand, Debug)]
enum MpcCommand {
    /// Generate an (m,p,c)-set; repeat --gens once per coordinate for a product.
    Gen {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, required = true)]
        gens: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Find a monochromatic (m,p,c)-set in a 1-dimensional coloring.
    FindMono {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, conflicts_with = "n")]
        coloring: Option<PathBuf>,
        /// Use a random coloring of [1,n] instead of a file.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 2)]
        colors: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Embed an (M,P,c^mu)-set into an (M, c^(t-mu)P, c^t)-set.
    Embed {
        #[arg(long = "big-m")]
        big_m: usize,
        #[arg(long = "big-p")]
        big_p: i64,
        #[arg(long)]
        c: i64,
        #[arg(long)]
        mu: u32,
        #[arg(long)]
        t: u32,
        /// Generators of the (M, c^(t-mu)P, c^t)-set.
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<i64>,
        #[arg(long)]
        json: bool,
    },
    /// Search an (m,p,c)-set for a solution of one coordinate system.
    Contains {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<i64>,
        #[command(flatten)]
        input: SystemArg,
        #[arg(long, default_value_t = 0)]
        coord: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug)]
struct SystemArg {
    /// System file (JSON).
    #[arg(short = 'f', long = "system")]
    file: PathBuf,
}

#[derive(Args, Debug)]
struct SpecArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    p: i64,
    #[arg(long)]
    c: i64,
}

#[derive(Args, Debug)]
struct ProblemArgs {
    #[command(flatten)]
    input: SystemArg,
    #[arg(long, default_value_t = 2)]
    colors: usize,
    /// Solution points that must share a color (default: all).
    #[arg(long, value_delimiter = ',')]
    mask: Option<Vec<usize>>,
    #[arg(long)]
    exclude_degenerate: bool,
    /// Require the masked points to be pairwise distinct.
    #[arg(long)]
    distinct: bool,
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
}

/// `check-columns --json` output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColumnsOutput {
    pub all_satisfy: bool,
    pub coordinates: Vec<ColumnsReport>,
}

/// `enumerate --json` output; tuples as `d x k` row lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerateOutput {
    pub n: i64,
    pub total: u128,
    pub tuples: Vec<Vec<Vec<i64>>>,
}

/// `count --json` output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountOutput {
    pub n: i64,
    pub total: u128,
    pub degenerate: u128,
    pub exponent: usize,
    pub profile: Vec<RankProfile>,
    pub monochromatic: Option<Vec<u128>>,
}

/// `degenerate --json` output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DegenerateOutput {
    Classified(DegeneracyReport),
    Counted { n: i64, total: u128, degenerate: u128 },
}

/// `export-dimacs --json` output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimacsOutput {
    pub variables: usize,
    pub clauses: usize,
    pub output: Option<PathBuf>,
}

/// `mpc gen --json` output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MpcGenOutput {
    pub size: usize,
    pub bound: u128,
    pub points: Vec<Point>,
}

/// `mpc find-mono --json` output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FindMonoOutput {
    pub generators: Option<McGenerators>,
    pub set: Option<Vec<i64>>,
    pub coloring: Coloring,
}

/// `mpc embed --json` output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbedOutput {
    pub generators: McGenerators,
    pub inner_set: Vec<i64>,
}

/// `mpc contains --json` output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContainsOutput {
    pub set: Vec<i64>,
    pub solution: Option<Vec<i64>>,
}

/// `observe --json` output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObserveOutput {
    pub solution: ObservationSolution,
    pub report: ObservationReport,
}

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Output {
    fn new(code: i32, stdout: String) -> Self {
        Output {
            code,
            stdout,
            stderr: String::new(),
        }
    }
}

/// Parses `argv` (including the program name) and runs one subcommand.
pub fn run<I, T>(argv: I) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => CommandOutcome {
                    exit_code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => CommandOutcome {
                    exit_code: 2,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    match dispatch(cli.command) {
        Ok(out) => CommandOutcome {
            exit_code: out.code,
            stdout: out.stdout,
            stderr: out.stderr,
        },
        Err(e) => CommandOutcome {
            exit_code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| RadoError::InvalidArgument(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| RadoError::InvalidArgument(format!("{}: {e}", path.display())))
}

fn load_system(arg: &SystemArg) -> Result<VectorSystem> {
    parse_system(&read_file(&arg.file)?)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output serializes");
    s.push('\n');
    s
}

fn make_mask(mask: Option<Vec<usize>>, k: usize) -> Result<Mask> {
    match mask {
        Some(m) => Mask::new(m, k),
        None => Ok(Mask::all(k)),
    }
}

fn threads(flag: Option<usize>) -> usize {
    flag.or_else(|| std::env::var(THREADS_ENV).ok()?.parse().ok())
        .unwrap_or(1)
        .max(1)
}

fn rank_warnings(v: &VectorSystem) -> String {
    let mut out = String::new();
    for (i, s) in v.coordinate_systems().iter().enumerate() {
        if !s.is_full_rank() {
            let _ = writeln!(
                out,
                "warning: coordinate system {i} has dependent rows; a row basis is used"
            );
        }
    }
    out
}

fn build_problem(args: &ProblemArgs) -> Result<(SearchProblem, SearchConfig)> {
    let system = load_system(&args.input)?;
    let k = system.k();
    let mut problem = SearchProblem::new(system, args.colors, make_mask(args.mask.clone(), k)?)?;
    if args.exclude_degenerate {
        problem = problem.with_degeneracy(DegeneracyFilter::NondegenerateOnly);
    }
    if args.distinct {
        problem = problem.with_distinct(DistinctFilter::MaskedPointsDistinct);
    }
    Ok((
        problem,
        SearchConfig {
            threads: threads(args.threads),
            budget: args.budget,
        },
    ))
}

fn parse_points(text: &str) -> Result<Vec<Point>> {
    text.split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|p| {
            let coords = p
                .split(',')
                .map(|x| {
                    x.trim()
                        .parse::<i64>()
                        .map_err(|_| RadoError::InvalidArgument(format!("bad coordinate {x:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            Point::new(coords)
        })
        .collect()
}

fn parse_gens(text: &str) -> Result<McGenerators> {
    text.split(',')
        .map(|x| {
            x.trim()
                .parse::<i64>()
                .map_err(|_| RadoError::InvalidArgument(format!("bad generator {x:?}")))
        })
        .collect::<Result<Vec<_>>>()
        .map(McGenerators)
}

fn status_line(o: &SearchOutcome) -> String {
    match o.status {
        SearchStatus::Avoidable => format!(
            "n = {}: avoidable ({} constraints, {} nodes)\n",
            o.n, o.constraints, o.nodes
        ),
        SearchStatus::Unavoidable => format!(
            "n = {}: unavoidable ({} constraints, {} nodes)\n",
            o.n, o.constraints, o.nodes
        ),
        SearchStatus::TriviallyUnavoidable => format!(
            "n = {}: trivially unavoidable (point {:?} alone is a solution)\n",
            o.n,
            o.forced_constraint.as_ref().and_then(|c| c.first())
        ),
    }
}

fn dispatch(cmd: Command) -> Result<Output> {
    match cmd {
        Command::CheckColumns { input, limit, json } => {
            let v = load_system(&input)?;
            let coordinates = v
                .coordinate_systems()
                .iter()
                .map(|s| check_columns_condition_with_limit(s, limit))
                .collect::<Result<Vec<_>>>()?;
            let out = ColumnsOutput {
                all_satisfy: coordinates.iter().all(|r| r.satisfies),
                coordinates,
            };
            let text = if json {
                to_json(&out)
            } else {
                let mut s = String::new();
                for (i, r) in out.coordinates.iter().enumerate() {
                    let _ = write!(
                        s,
                        "coordinate {i}: rank {} {}",
                        r.rank,
                        if r.full_rank { "(full)" } else { "(dependent rows)" }
                    );
                    match &r.witness {
                        Some(w) => {
                            let _ = writeln!(s, ", satisfies the columns condition, blocks {:?}", w.blocks);
                        }
                        None => s.push_str(", does not satisfy the columns condition\n"),
                    }
                }
                s
            };
            Ok(Output::new(if out.all_satisfy { 0 } else { 1 }, text))
        }
        Command::Enumerate {
            input,
            n,
            limit,
            budget,
            json,
        } => {
            let v = load_system(&input)?;
            let total = count_solutions(&v, n, budget)?;
            let tuples: Vec<Vec<Vec<i64>>> = enumerate_vector_solutions_with_budget(&v, n, budget)?
                .take(limit.unwrap_or(usize::MAX))
                .map(|t| t.rows().to_vec())
                .collect();
            let text = if json {
                to_json(&EnumerateOutput { n, total, tuples })
            } else {
                let mut s = String::new();
                for t in &tuples {
                    let points: Vec<Vec<i64>> = (0..v.k()).map(|j| t.iter().map(|r| r[j]).collect()).collect();
                    let _ = writeln!(s, "{points:?}");
                }
                let _ = writeln!(s, "{total} solutions");
                s
            };
            Ok(Output::new(0, text))
        }
        Command::Count {
            input,
            n,
            mask,
            coloring,
            budget,
            json,
        } => {
            let v = load_system(&input)?;
            let mask = make_mask(mask, v.k())?;
            let coloring = coloring
                .map(|p| read_file(&p).and_then(|t| Coloring::from_json(&t)))
                .transpose()?;
            let n = match (n, &coloring) {
                (Some(n), _) => n,
                (None, Some(c)) => c.n as i64,
                (None, None) => return Err(RadoError::InvalidArgument("count needs --n or --coloring".into())),
            };
            let monochromatic = match &coloring {
                Some(c) if c.n as i64 != n => {
                    return Err(RadoError::InvalidArgument(format!(
                        "coloring has n = {}, --n is {n}",
                        c.n
                    )))
                }
                Some(c) => Some(count_monochromatic(&v, c, &mask, budget)?),
                None => None,
            };
            let profile = rank_profile(&v);
            let out = CountOutput {
                n,
                total: count_solutions(&v, n, budget)?,
                degenerate: count_degenerate(&v, n, &mask, budget)?,
                exponent: profile.iter().map(|p| p.free_columns.len()).sum(),
                profile,
                monochromatic,
            };
            let text = if json {
                to_json(&out)
            } else {
                let mut s = format!(
                    "n = {}: {} solutions, {} degenerate, growth exponent {}\n",
                    out.n, out.total, out.degenerate, out.exponent
                );
                if let Some(m) = &out.monochromatic {
                    let _ = writeln!(s, "monochromatic per color: {m:?}");
                }
                s
            };
            Ok(Output {
                code: 0,
                stdout: text,
                stderr: rank_warnings(&v),
            })
        }
        Command::Degenerate {
            points,
            file,
            n,
            mask,
            budget,
            json,
        } => {
            let out = if let Some(points) = points {
                DegenerateOutput::Classified(is_degenerate(&parse_points(&points)?)?)
            } else {
                let (Some(file), Some(n)) = (file, n) else {
                    return Err(RadoError::InvalidArgument(
                        "degenerate needs --points, or --system with --n".into(),
                    ));
                };
                let v = load_system(&SystemArg { file })?;
                let mask = make_mask(mask, v.k())?;
                DegenerateOutput::Counted {
                    n,
                    total: count_solutions(&v, n, budget)?,
                    degenerate: count_degenerate(&v, n, &mask, budget)?,
                }
            };
            let text = if json {
                to_json(&out)
            } else {
                match &out {
                    DegenerateOutput::Classified(r) if r.degenerate => format!(
                        "degenerate: direction {:?}, multipliers {:?}\n",
                        r.direction.as_ref().map(Point::coords).unwrap_or_default(),
                        r.multipliers.clone().unwrap_or_default()
                    ),
                    DegenerateOutput::Classified(_) => "non-degenerate\n".to_string(),
                    DegenerateOutput::Counted { n, total, degenerate } => {
                        format!("n = {n}: {degenerate} of {total} solutions are degenerate\n")
                    }
                }
            };
            Ok(Output::new(0, text))
        }
        Command::Search {
            problem,
            n,
            emit_witness,
            json,
        } => {
            let (p, cfg) = build_problem(&problem)?;
            let outcome = find_avoiding_coloring(&p, n, &cfg)?;
            if let (Some(path), Some(w)) = (&emit_witness, &outcome.witness) {
                write_file(path, &w.to_json())?;
            }
            let text = if json { to_json(&outcome) } else { status_line(&outcome) };
            let code = if outcome.status == SearchStatus::Avoidable {
                1
            } else {
                0
            };
            Ok(Output {
                code,
                stdout: text,
                stderr: rank_warnings(&p.system),
            })
        }
        Command::RadoNumber {
            problem,
            max_n,
            emit_witness,
            json,
        } => {
            let (p, cfg) = build_problem(&problem)?;
            let result = rado_number(&p, max_n, &cfg)?;
            let witness = match &result {
                RadoNumber::Found { previous_witness, .. } => previous_witness.as_ref(),
                RadoNumber::ExceededMax { witness, .. } => Some(witness),
            };
            if let (Some(path), Some(w)) = (&emit_witness, witness) {
                write_file(path, &w.to_json())?;
            }
            let text = if json {
                to_json(&result)
            } else {
                match &result {
                    RadoNumber::Found { n, .. } => format!("{n}\n"),
                    RadoNumber::ExceededMax { max_n, .. } => format!("avoidable up to n = {max_n}\n"),
                }
            };
            Ok(Output {
                code: if result.value().is_some() { 0 } else { 1 },
                stdout: text,
                stderr: rank_warnings(&p.system),
            })
        }
        Command::Verify {
            input,
            witness,
            mask,
            exclude_degenerate,
            distinct,
            budget,
            json,
        } => {
            let v = load_system(&input)?;
            let w = Coloring::from_json(&read_file(&witness)?)?;
            let k = v.k();
            let mut p = SearchProblem::new(v, w.r, make_mask(mask, k)?)?;
            if exclude_degenerate {
                p = p.with_degeneracy(DegeneracyFilter::NondegenerateOnly);
            }
            if distinct {
                p = p.with_distinct(DistinctFilter::MaskedPointsDistinct);
            }
            let report: WitnessReport = verify_witness(&p, &w, budget)?;
            let text = if json {
                to_json(&report)
            } else if let Some(v) = &report.violation {
                format!("FAIL: points {:?} all have color {}\n", v.points, v.color)
            } else {
                format!(
                    "PASS: {} constraints checked on [1,{}]^{}\n",
                    report.constraints_checked, report.n, w.d
                )
            };
            Ok(Output::new(if report.passes { 0 } else { 1 }, text))
        }
        Command::ExportDimacs {
            problem,
            n,
            output,
            json,
        } => {
            let (p, cfg) = build_problem(&problem)?;
            let cnf = export_dimacs(&p, n, &cfg)?;
            let dimacs = cnf.to_dimacs();
            let text = match &output {
                Some(path) => {
                    write_file(path, &dimacs)?;
                    if json {
                        to_json(&DimacsOutput {
                            variables: cnf.num_vars,
                            clauses: cnf.clauses.len(),
                            output: output.clone(),
                        })
                    } else {
                        format!(
                            "wrote {} variables, {} clauses to {}\n",
                            cnf.num_vars,
                            cnf.clauses.len(),
                            path.display()
                        )
                    }
                }
                None if json => to_json(&DimacsOutput {
                    variables: cnf.num_vars,
                    clauses: cnf.clauses.len(),
                    output: None,
                }),
                None => dimacs,
            };
            Ok(Output::new(0, text))
        }
        Command::Mpc { command } => dispatch_mpc(command),
        Command::Observe { indices, k, l, d, json } => {
            let input = ObservationInput::new(indices, k, l, d)?;
            let solution = build_observation_solution(&input);
            let report = check_observation(&solution, d, k, l);
            let ok = report.all_hold();
            let text = if json {
                to_json(&ObserveOutput { solution, report })
            } else {
                let mut s = String::new();
                for (name, pts) in [("p", &solution.p_points), ("q", &solution.q_points)] {
                    for (i, p) in pts.iter().enumerate() {
                        let coords: Vec<String> = p.iter().map(ToString::to_string).collect();
                        let _ = writeln!(s, "{name}_{} = ({})", i + 1, coords.join(", "));
                    }
                }
                let _ = writeln!(s, "{}", serde_json::to_string(&report).expect("report serializes"));
                s
            };
            Ok(Output::new(if ok { 0 } else { 1 }, text))
        }
    }
}

fn dispatch_mpc(cmd: MpcCommand) -> Result<Output> {
    match cmd {
        MpcCommand::Gen { spec, gens, json } => {
            let s = MpcSpec::new(spec.m, spec.p, spec.c)?;
            let gens = gens.iter().map(|g| parse_gens(g)).collect::<Result<Vec<_>>>()?;
            let vspec = VectorMpcSpec::uniform(s, gens.len())?;
            let points = generate_mpc_vector(&vspec, &gens)?;
            let out = MpcGenOutput {
                size: points.len(),
                bound: vspec.cardinality_bound(),
                points,
            };
            let text = if json {
                to_json(&out)
            } else if gens.len() == 1 {
                let set: Vec<i64> = out.points.iter().map(|p| p.0[0]).collect();
                format!("{set:?}\n{} elements (bound {})\n", out.size, out.bound)
            } else {
                format!("{} points (bound {})\n", out.size, out.bound)
            };
            Ok(Output::new(0, text))
        }
        MpcCommand::FindMono {
            spec,
            coloring,
            n,
            colors,
            seed,
            json,
        } => {
            let s = MpcSpec::new(spec.m, spec.p, spec.c)?;
            let coloring = match (coloring, n) {
                (Some(path), _) => Coloring::from_json(&read_file(&path)?)?,
                (None, Some(n)) => {
                    if !(1..=255).contains(&colors) {
                        return Err(RadoError::InvalidArgument("--colors must be in 1..=255".into()));
                    }
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    Coloring::new(n, 1, colors, (0..n).map(|_| rng.gen_range(0..colors) as u8).collect())?
                }
                (None, None) => return Err(RadoError::InvalidArgument("find-mono needs --coloring or --n".into())),
            };
            let generators = find_mono_mpc(&coloring, &s)?;
            let set = generators.as_ref().map(|g| generate_mpc(&s, g)).transpose()?;
            let found = generators.is_some();
            let out = FindMonoOutput {
                generators,
                set,
                coloring,
            };
            let text = if json {
                to_json(&out)
            } else {
                match (&out.generators, &out.set) {
                    (Some(g), Some(set)) => format!("generators {:?} give monochromatic set {set:?}\n", g.0),
                    _ => "no monochromatic (m,p,c)-set\n".to_string(),
                }
            };
            Ok(Output::new(if found { 0 } else { 1 }, text))
        }
        MpcCommand::Embed {
            big_m,
            big_p,
            c,
            mu,
            t,
            gens,
            json,
        } => {
            let h = lemma_mpc_embed(big_m, big_p, c, mu, t, &McGenerators(gens))?;
            let inner = MpcSpec::new(
                big_m,
                big_p,
                c.checked_pow(mu).ok_or_else(|| RadoError::Overflow("c^mu".into()))?,
            )?;
            let inner_set = generate_mpc(&inner, &h)?;
            let text = if json {
                to_json(&EmbedOutput {
                    generators: h,
                    inner_set,
                })
            } else {
                format!("h = {:?}\ninner set {inner_set:?}\n", h.0)
            };
            Ok(Output::new(0, text))
        }
        MpcCommand::Contains {
            spec,
            gens,
            input,
            coord,
            budget,
            json,
        } => {
            let s = MpcSpec::new(spec.m, spec.p, spec.c)?;
            let v = load_system(&input)?;
            if coord >= v.d() {
                return Err(RadoError::InvalidArgument(format!(
                    "--coord {coord} out of range 0..{}",
                    v.d()
                )));
            }
            let g = McGenerators(gens);
            let set = generate_mpc(&s, &g)?;
            let solution = mpc_contains_solution_with_budget(&s, &g, v.coordinate(coord), budget)?;
            let found = solution.is_some();
            let text = if json {
                to_json(&ContainsOutput { set, solution })
            } else {
                match &solution {
                    Some(x) => format!("solution {x:?} inside {set:?}\n"),
                    None => format!("no solution inside {set:?}\n"),
                }
            };
            Ok(Output::new(if found { 0 } else { 1 }, text))
        }
    }
}
