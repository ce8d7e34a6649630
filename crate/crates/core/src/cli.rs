// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Command-line front end.
//!
//! Every subcommand prints an aligned text report by default and a JSON
//! document with `--format structured`. Exit statuses:
//!
//! | status | meaning                                  |
//! |--------|------------------------------------------|
//! | 0      | success                                  |
//! | 1      | usage or parse error                     |
//! | 2      | the coloring given to `verify` is invalid |
//! | 3      | `exact` ran out of search budget         |

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{bounds_report, BoundsReport};
use crate::error::Error;
use crate::exact::{ExactSolver, DEFAULT_NODE_BUDGET};
use crate::gen::{gen_counterexample, gen_random, Profiles};
use crate::greedy::greedy_coloring;
use crate::instance::{verify_coloring, CountColoring, MultipartiteInstance, Verdict};
use crate::io::{parse_coloring, parse_instance, ColoringDoc, InstanceDoc};
use crate::sparse::{max_t_sparse, solve_lp};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID_COLORING: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "trelax",
    version,
    about = "t-relaxed colorings of complete multi-partite graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Debug, Args)]
struct InstanceArgs {
    /// Comma-separated part sizes, in any order
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, requires = "t")]
    parts: Option<Vec<i64>>,
    /// Relaxation parameter
    #[arg(long, allow_negative_numbers = true)]
    t: Option<i64>,
    /// JSON instance file with fields "t" and "parts"
    #[arg(long, conflicts_with_all = ["parts", "t"])]
    instance: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Closed-form lower and upper bounds
    Bounds {
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// A maximum t-sparse set
    Sparse {
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Greedy coloring with its extraction trace
    Greedy {
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Exact t-relaxed chromatic number by branch and bound
    Exact {
        #[command(flatten)]
        instance: InstanceArgs,
        /// Search node budget
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check a coloring file
    Verify {
        /// JSON coloring file: instance fields plus "colors"
        #[arg(long)]
        coloring: PathBuf,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Instance on which greedy is suboptimal, with a certified coloring
    Counterexample {
        /// Relaxation parameter, at least 7
        #[arg(long, allow_negative_numbers = true)]
        t: i64,
        /// Also confirm the exact value by search
        #[arg(long)]
        search: bool,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compare greedy against the exact oracle over many small instances
    Bench {
        #[arg(long, default_value_t = 4)]
        max_s: usize,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 4)]
        max_t: usize,
        /// Number of extra random instances drawn from the same caps
        #[arg(long, default_value_t = 0)]
        random: u64,
        /// First seed for the random instances
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
}

struct Report {
    text: String,
    json: String,
    code: i32,
}

impl Report {
    fn new<T: Serialize>(text: String, doc: &T, code: i32) -> Self {
        let mut json = serde_json::to_string_pretty(doc).expect("reports serialize");
        json.push('\n');
        Self { text, json, code }
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns its exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                EXIT_OK
            } else {
                let _ = write!(err, "{e}");
                EXIT_USAGE
            };
        }
    };
    let (result, format) = match cli.command {
        Command::Bounds { instance, output } => (load(&instance).map(|i| cmd_bounds(&i)), output.format),
        Command::Sparse { instance, output } => (load(&instance).map(|i| cmd_sparse(&i)), output.format),
        Command::Greedy { instance, output } => (load(&instance).map(|i| cmd_greedy(&i)), output.format),
        Command::Exact {
            instance,
            budget,
            output,
        } => (load(&instance).map(|i| cmd_exact(&i, budget)), output.format),
        Command::Verify { coloring, output } => (cmd_verify(&coloring), output.format),
        Command::Counterexample {
            t,
            search,
            budget,
            output,
        } => (cmd_counterexample(t, search, budget), output.format),
        Command::Bench {
            max_s,
            max_n,
            max_t,
            random,
            seed,
            budget,
            output,
        } => (
            cmd_bench(max_s, max_n, max_t, random, seed, budget),
            output.format,
        ),
    };
    match result {
        Ok(report) => {
            let body = match format {
                Format::Text => &report.text,
                Format::Structured => &report.json,
            };
            let _ = out.write_all(body.as_bytes());
            report.code
        }
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_USAGE
        }
    }
}

fn load(args: &InstanceArgs) -> Result<MultipartiteInstance, String> {
    match (&args.instance, &args.parts, args.t) {
        (Some(path), _, _) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            parse_instance(&text).map_err(|e| format!("{}: {e}", path.display()))
        }
        (None, Some(parts), Some(t)) => {
            MultipartiteInstance::from_signed(parts, t).map_err(|e| e.to_string())
        }
        _ => Err("give either --instance FILE or --parts a,b,c --t N".into()),
    }
}

fn matrix_text(rows: &[Vec<usize>]) -> String {
    let width = rows
        .iter()
        .flatten()
        .map(|x| x.to_string().len())
        .max()
        .unwrap_or(1);
    let mut s = String::new();
    for (r, row) in rows.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
        let _ = writeln!(s, "  color {:>2}: ({})", r + 1, cells.join(", "));
    }
    s
}

#[derive(Serialize)]
struct BoundsOut {
    instance: InstanceDoc,
    bounds: BoundsReport,
}

fn cmd_bounds(inst: &MultipartiteInstance) -> Report {
    let b = bounds_report(inst);
    let mut text = format!("{inst}\n");
    for (name, value) in [
        ("r", b.r),
        ("sigma", b.sigma),
        ("lower_2t", b.lower_2t),
        ("upper_2t", b.upper_2t),
        ("upper_delta", b.upper_delta),
        ("lower_chi", b.lower_chi),
    ] {
        let _ = writeln!(text, "{name:<12} {value}");
    }
    let doc = BoundsOut {
        instance: InstanceDoc::of(inst),
        bounds: b,
    };
    Report::new(text, &doc, EXIT_OK)
}

#[derive(Serialize)]
struct LpValue {
    i: usize,
    value: usize,
}

#[derive(Serialize)]
struct SparseOut {
    instance: InstanceDoc,
    beta_t: usize,
    /// Picks per part, in the instance's original order.
    picks: Vec<usize>,
    lp_values: Vec<LpValue>,
}

fn original_order(inst: &MultipartiteInstance, row: &[usize]) -> Vec<usize> {
    let mut out = vec![0; row.len()];
    for (j, &x) in row.iter().enumerate() {
        out[inst.original_index(j)] = x;
    }
    out
}

fn cmd_sparse(inst: &MultipartiteInstance) -> Report {
    let sel = max_t_sparse(inst);
    let lp_values: Vec<LpValue> = (2..=inst.num_parts().min(inst.t() + 1))
        .map(|i| LpValue {
            i,
            value: solve_lp(i, inst).expect("index in range").size(),
        })
        .collect();
    let picks = original_order(inst, sel.picks());
    let mut text = format!("{inst}\nbeta_t = {}\n", sel.size());
    let cells: Vec<String> = picks.iter().map(usize::to_string).collect();
    let _ = writeln!(text, "picks  = ({})", cells.join(", "));
    for lp in &lp_values {
        let _ = writeln!(text, "M_{:<4} = {}", lp.i, lp.value);
    }
    let doc = SparseOut {
        instance: InstanceDoc::of(inst),
        beta_t: sel.size(),
        picks,
        lp_values,
    };
    Report::new(text, &doc, EXIT_OK)
}

#[derive(Serialize)]
struct GreedyOut {
    #[serde(flatten)]
    coloring: ColoringDoc,
    num_colors: usize,
    class_sizes: Vec<usize>,
}

/// The extraction trace as rows `f^-1(i) = (...)  ->  (residual)`, with
/// columns in the instance's original order.
fn trace_table(inst: &MultipartiteInstance, rows: &[Vec<usize>], residuals: &[Vec<usize>]) -> String {
    let start = inst.original_sizes();
    let width = start.iter().map(|x| x.to_string().len()).max().unwrap_or(1);
    let tuple = |v: &[usize]| {
        let cells: Vec<String> = v.iter().map(|x| format!("{x:>width$}")).collect();
        format!("({})", cells.join(", "))
    };
    let label_width = format!("f^-1({}) = ", rows.len()).len();
    let row_width = tuple(&start).len();
    let mut s = format!("{:label_width$}{:row_width$}      {}\n", "", "", tuple(&start));
    for (i, (row, left)) in rows.iter().zip(residuals).enumerate() {
        let label = format!("f^-1({}) = ", i + 1);
        let _ = writeln!(s, "{label:<label_width$}{}  ->  {}", tuple(row), tuple(left));
    }
    s
}

fn cmd_greedy(inst: &MultipartiteInstance) -> Report {
    let g = greedy_coloring(inst);
    let rows = g.coloring.to_original_order(inst);
    let residuals: Vec<Vec<usize>> = g
        .residuals(inst)
        .iter()
        .map(|r| original_order(inst, r))
        .collect();
    let class_sizes: Vec<usize> = g.trace.iter().map(|s| s.size()).collect();
    let mut text = format!("greedy on {inst}: {} colors\n", g.num_colors());
    text.push_str(&trace_table(inst, &rows, &residuals));
    let doc = GreedyOut {
        coloring: ColoringDoc::of(inst, &g.coloring),
        num_colors: g.num_colors(),
        class_sizes,
    };
    Report::new(text, &doc, EXIT_OK)
}

#[derive(Serialize)]
struct ExactOut {
    instance: InstanceDoc,
    status: &'static str,
    chi: Option<usize>,
    colors: Option<Vec<Vec<usize>>>,
    nodes_explored: Option<u64>,
    lower: usize,
    upper: usize,
    budget: u64,
}

fn cmd_exact(inst: &MultipartiteInstance, budget: u64) -> Report {
    let bounds = bounds_report(inst);
    match ExactSolver::new(budget).chi_t_exact(inst) {
        Ok(out) => {
            let colors = out.witness.to_original_order(inst);
            let text = format!(
                "{inst}\nchi_t = {}\nnodes explored: {}\nwitness:\n{}",
                out.chi,
                out.nodes_explored,
                matrix_text(&colors)
            );
            let doc = ExactOut {
                instance: InstanceDoc::of(inst),
                status: "solved",
                chi: Some(out.chi),
                colors: Some(colors),
                nodes_explored: Some(out.nodes_explored),
                lower: out.chi,
                upper: out.chi,
                budget,
            };
            Report::new(text, &doc, EXIT_OK)
        }
        Err(Error::Inconclusive { lower, upper, .. }) => {
            let text = format!(
                "{inst}\ninconclusive: budget of {budget} nodes exhausted\nchi_t in [{lower}, {upper}]\n"
            );
            let doc = ExactOut {
                instance: InstanceDoc::of(inst),
                status: "inconclusive",
                chi: None,
                colors: None,
                nodes_explored: None,
                lower,
                upper: upper.min(bounds.upper()),
                budget,
            };
            Report::new(text, &doc, EXIT_INCONCLUSIVE)
        }
        Err(e) => unreachable!("chi_t_exact only fails on budget exhaustion: {e}"),
    }
}

#[derive(Serialize)]
struct ViolationOut {
    color: usize,
    part: usize,
    excess: usize,
}

#[derive(Serialize)]
struct VerifyOut {
    valid: bool,
    violations: Vec<ViolationOut>,
    error: Option<String>,
}

fn cmd_verify(path: &PathBuf) -> Result<Report, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let (inst, col) = match parse_coloring(&text) {
        Ok(parsed) => parsed,
        Err(crate::io::FormatError::Json(e)) => return Err(format!("{}: {e}", path.display())),
        Err(e) => return Ok(invalid_structure(e.to_string())),
    };
    match verify_coloring(&inst, &col) {
        Ok(Verdict::Valid) => {
            let doc = VerifyOut {
                valid: true,
                violations: vec![],
                error: None,
            };
            Ok(Report::new("valid\n".into(), &doc, EXIT_OK))
        }
        Ok(Verdict::Invalid(list)) => {
            // report parts 1-based in the file's order
            let violations: Vec<ViolationOut> = list
                .iter()
                .map(|v| ViolationOut {
                    color: v.color + 1,
                    part: inst.original_index(v.part) + 1,
                    excess: v.excess,
                })
                .collect();
            let mut text = String::from("invalid\n");
            for v in &violations {
                let _ = writeln!(
                    text,
                    "  color {} on part {}: {} same-colored neighbours too many",
                    v.color, v.part, v.excess
                );
            }
            let doc = VerifyOut {
                valid: false,
                violations,
                error: None,
            };
            Ok(Report::new(text, &doc, EXIT_INVALID_COLORING))
        }
        Err(e) => Ok(invalid_structure(e.to_string())),
    }
}

fn invalid_structure(message: String) -> Report {
    let text = format!("invalid\n  {message}\n");
    let doc = VerifyOut {
        valid: false,
        violations: vec![],
        error: Some(message),
    };
    Report::new(text, &doc, EXIT_INVALID_COLORING)
}

#[derive(Serialize)]
struct CounterexampleOut {
    instance: InstanceDoc,
    certificate: Vec<Vec<usize>>,
    certificate_valid: bool,
    lower_bound: usize,
    exact: usize,
    exact_method: &'static str,
    greedy: usize,
    greedy_trace: Vec<Vec<usize>>,
}

/// Exact value of a counterexample: the certificate gives an upper bound of
/// 3 and the lower `2t` bound (no part reaches `2t`, `n = 5t - 2 > 4t`)
/// matches it.
fn certified_chi(inst: &MultipartiteInstance, cert: &CountColoring) -> Option<usize> {
    let lower = bounds_report(inst).lower();
    (lower == cert.num_colors()).then_some(lower)
}

fn cmd_counterexample(t: i64, search: bool, budget: u64) -> Result<Report, String> {
    let t = usize::try_from(t).map_err(|_| format!("t must be non-negative, got {t}"))?;
    let (inst, cert) = gen_counterexample(t).map_err(|e| e.to_string())?;
    let valid = verify_coloring(&inst, &cert).map_err(|e| e.to_string())?.is_valid();
    let lower = bounds_report(&inst).lower();
    let (exact, method) = if search {
        let out = ExactSolver::new(budget)
            .chi_t_exact(&inst)
            .map_err(|e| e.to_string())?;
        (out.chi, "search")
    } else {
        let chi = certified_chi(&inst, &cert)
            .ok_or_else(|| format!("certificate for {inst} does not meet the lower bound"))?;
        (chi, "certificate")
    };
    let g = greedy_coloring(&inst);
    let certificate = cert.to_original_order(&inst);
    let greedy_trace = g.coloring.to_original_order(&inst);
    let residuals: Vec<Vec<usize>> = g.residuals(&inst);

    let mut text = format!("{inst}\ncertified {}-coloring:\n", cert.num_colors());
    text.push_str(&matrix_text(&certificate));
    let _ = writeln!(text, "lower bound: {lower} (n = {} > 4t)", inst.num_vertices());
    text.push_str("greedy trace:\n");
    text.push_str(&trace_table(&inst, &greedy_trace, &residuals));
    let _ = writeln!(text, "exact: {exact}, greedy: {}", g.num_colors());

    let doc = CounterexampleOut {
        instance: InstanceDoc::of(&inst),
        certificate,
        certificate_valid: valid,
        lower_bound: lower,
        exact,
        exact_method: method,
        greedy: g.num_colors(),
        greedy_trace,
    };
    Ok(Report::new(text, &doc, EXIT_OK))
}

#[derive(Serialize, Default, Clone)]
struct BenchRow {
    t: usize,
    instances: usize,
    solved: usize,
    inconclusive: usize,
    greedy_suboptimal: usize,
    max_ratio: f64,
}

#[derive(Serialize)]
struct BenchOut {
    max_s: usize,
    max_n: usize,
    max_t: usize,
    random: u64,
    seed: u64,
    budget: u64,
    per_t: Vec<BenchRow>,
    instances: usize,
    inconclusive: usize,
    greedy_suboptimal: usize,
    max_ratio: f64,
}

fn cmd_bench(
    max_s: usize,
    max_n: usize,
    max_t: usize,
    random: u64,
    seed: u64,
    budget: u64,
) -> Result<Report, String> {
    if max_s == 0 || max_n == 0 || max_t == 0 {
        return Err("bench caps must be positive".into());
    }
    let mut suite: Vec<MultipartiteInstance> = Vec::new();
    for t in 1..=max_t {
        for parts in Profiles::new(max_s, max_n) {
            suite.push(MultipartiteInstance::new(&parts, t).map_err(|e| e.to_string())?);
        }
    }
    for k in 0..random {
        suite.push(gen_random(seed.wrapping_add(k), max_s, max_n, max_t).map_err(|e| e.to_string())?);
    }
    let solver = ExactSolver::new(budget);
    // (t, greedy, exact) per instance; collected in suite order
    let results: Vec<(usize, usize, Option<usize>)> = suite
        .par_iter()
        .map(|inst| {
            let greedy = greedy_coloring(inst).num_colors();
            let exact = solver.chi_t_exact(inst).ok().map(|o| o.chi);
            (inst.t(), greedy, exact)
        })
        .collect();

    let mut per_t: Vec<BenchRow> = (1..=max_t)
        .map(|t| BenchRow {
            t,
            ..BenchRow::default()
        })
        .collect();
    for &(t, greedy, exact) in &results {
        let row = &mut per_t[t - 1];
        row.instances += 1;
        match exact {
            Some(chi) => {
                row.solved += 1;
                if greedy > chi {
                    row.greedy_suboptimal += 1;
                }
                row.max_ratio = row.max_ratio.max(greedy as f64 / chi as f64);
            }
            None => row.inconclusive += 1,
        }
    }
    let doc = BenchOut {
        max_s,
        max_n,
        max_t,
        random,
        seed,
        budget,
        instances: results.len(),
        inconclusive: per_t.iter().map(|r| r.inconclusive).sum(),
        greedy_suboptimal: per_t.iter().map(|r| r.greedy_suboptimal).sum(),
        max_ratio: per_t.iter().map(|r| r.max_ratio).fold(0.0, f64::max),
        per_t,
    };
    let mut text = format!(
        "{} instances (parts <= {max_s}, sizes <= {max_n}, t <= {max_t}, {random} random)\n",
        doc.instances
    );
    let _ = writeln!(
        text,
        "{:>4} {:>10} {:>8} {:>13} {:>11} {:>10}",
        "t", "instances", "solved", "inconclusive", "suboptimal", "max ratio"
    );
    for row in &doc.per_t {
        let _ = writeln!(
            text,
            "{:>4} {:>10} {:>8} {:>13} {:>11} {:>10.4}",
            row.t, row.instances, row.solved, row.inconclusive, row.greedy_suboptimal, row.max_ratio
        );
    }
    let _ = writeln!(
        text,
        "max ratio {:.4}, greedy suboptimal on {} instances",
        doc.max_ratio, doc.greedy_suboptimal
    );
    Ok(Report::new(text, &doc, EXIT_OK))
}
