use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use pauli_constraints::coefficients::{builtin_tables, coefficient, holds_exact, verify_table, InequalityTable, TestSpectrum};
use pauli_constraints::combinatorics::Partition;
use pauli_constraints::generators::{grassmann_kind1, grassmann_kind2, majorization_constraints, series_inequality, GeneratorError};
use pauli_constraints::permutations::Permutation;
use pauli_constraints::polyring::{builtin_schubert_table, schubert, verify_schubert_table, SparsePoly};
use pauli_constraints::polytope::{even_schedule, pipeline, PolytopeError, System};
use pauli_constraints::states::{builtin_state_tables, occupation_numbers, verify_state_table, StateSpec, StateTable, WedgeState};

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(name = "pauli", version, about = "Generalized Pauli constraints on fermionic occupation numbers")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Write JSON output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Tolerance for floating comparisons.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tolerance: f64,
}

#[derive(Subcommand)]
enum Command {
    /// Schubert polynomial of a permutation (zero-based digits like 1032, one-based
    /// comma-separated one-line, or cycles like "(1 2)(3 4)").
    Schubert {
        w: Option<String>,
        /// Recompute the bundled S4 table.
        #[arg(long)]
        table_s4: bool,
    },
    /// A single coefficient c_w^v(a).
    Coeff {
        /// Test spectrum, comma-separated and non-increasing.
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long)]
        nu: Partition,
        #[arg(short = 'r')]
        r: Option<usize>,
        /// Cycle notation.
        #[arg(short = 'v', long = "v")]
        v: String,
        /// Cycle notation.
        #[arg(short = 'w', long = "w")]
        w: String,
    },
    /// Replay the bundled inequality tables (or one table file).
    VerifyTables {
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Occupation numbers of a state given as a JSON file or an expression.
    Occupation {
        /// JSON file with {N, r, terms: [{subset, sign, radicand}]}.
        state_file: Option<PathBuf>,
        /// Expression such as "2[123]+√10[145]".
        #[arg(long)]
        expr: Option<String>,
        #[arg(short = 'r')]
        r: Option<usize>,
    },
    /// Replay the bundled extremal-state tables (or one table file).
    VerifyVertices {
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Emit an inequality family.
    Generate {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(short = 'N')]
        n: Option<usize>,
        #[arg(short = 'r')]
        r: Option<usize>,
        #[arg(short = 'p')]
        p: Option<usize>,
        #[arg(long)]
        nu: Option<Partition>,
    },
    /// Inner/outer approximation of a moment polytope.
    Polytope {
        #[arg(long)]
        nu: Partition,
        #[arg(short = 'r')]
        r: usize,
        #[arg(long, default_value_t = 1)]
        rank_bound: usize,
        /// Largest |μ| to try.
        #[arg(short = 'M', default_value_t = 8)]
        m: usize,
        /// Try every M up to the maximum instead of even M only.
        #[arg(long)]
        every_m: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Majorization,
    Grassmann1,
    Grassmann2,
    Series,
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl ToString) -> Failure {
    Failure { code: EXIT_USAGE, message: message.to_string() }
}

fn parse_permutation(s: &str) -> Result<Permutation, Failure> {
    let t = s.trim();
    if t.starts_with('(') {
        Permutation::parse_cycles(t).map_err(usage)
    } else {
        Permutation::parse_one_line(t).map_err(usage)
    }
}

fn poly_json(p: &SparsePoly) -> Value {
    json!({ "polynomial": p.format_xyz(), "terms": p })
}

fn run(cli: &Cli) -> Result<(Value, u8), Failure> {
    match &cli.command {
        Command::Schubert { w, table_s4 } => {
            if *table_s4 {
                let report = verify_schubert_table(&builtin_schubert_table()).map_err(usage)?;
                let literal = report.iter().filter(|r| r.literal_match).count();
                let unrefuted = report.iter().filter(|r| !r.literal_match && r.refutations.is_empty()).count();
                let code = if unrefuted > 0 { EXIT_MISMATCH } else { 0 };
                return Ok((json!({ "rows": report, "literal_matches": literal, "unexplained_mismatches": unrefuted }), code));
            }
            let w = w.as_deref().ok_or_else(|| usage("give a permutation or --table-s4"))?;
            let w = parse_permutation(w)?;
            Ok((json!({ "w": w.one_line(), "schubert": poly_json(&schubert(&w)) }), 0))
        }
        Command::Coeff { a, nu, r, v, w } => {
            let values: Vec<i64> = a.split(',').map(|x| x.trim().parse()).collect::<Result<_, _>>().map_err(usage)?;
            if let Some(r) = r {
                if *r != values.len() {
                    return Err(usage(format!("-r {r} does not match the length of a ({})", values.len())));
                }
            }
            let spectrum = TestSpectrum::new(values).map_err(usage)?;
            let v = parse_permutation(v)?;
            let w = parse_permutation(w)?;
            let c = coefficient(&spectrum, nu, &v, &w).map_err(usage)?;
            Ok((json!({ "c": c.to_string() }), 0))
        }
        Command::VerifyTables { input } => {
            let tables: Vec<InequalityTable> = match input {
                Some(path) => vec![read_json(path)?],
                None => builtin_tables(),
            };
            let reports: Vec<_> = tables.iter().map(verify_table).collect();
            let ok = reports.iter().all(|r| r.all_ok());
            let summary: Vec<Value> = reports
                .iter()
                .map(|r| json!({ "system": r.system, "matched": r.matched(), "rows": r.rows.len(), "report": r }))
                .collect();
            Ok((json!(summary), if ok { 0 } else { EXIT_MISMATCH }))
        }
        Command::Occupation { state_file, expr, r } => {
            let psi = match (state_file, expr) {
                (Some(path), None) => {
                    let spec: StateSpec = read_json(path)?;
                    spec.to_state().map_err(usage)?
                }
                (None, Some(e)) => {
                    let r = r.ok_or_else(|| usage("--expr needs -r"))?;
                    WedgeState::parse(e, r).map_err(usage)?
                }
                _ => return Err(usage("give exactly one of STATE_FILE or --expr")),
            };
            let occ = occupation_numbers(&psi).map_err(usage)?;
            let exact = occ.exact.as_ref().map(|v| v.iter().map(|q| q.to_string()).collect::<Vec<_>>());
            let mut report = Vec::new();
            let name = format!("wedge{}_{}", psi.n(), psi.r());
            let lambda: Vec<_> = occ.exact.clone().unwrap_or_default();
            for table in builtin_tables().into_iter().filter(|t| t.system == name) {
                for row in &table.rows {
                    let ineq = pauli_constraints::coefficients::OccupationInequality::pure(row.lambda_coeffs.clone(), row.bound);
                    let slack = ineq.slack_f64(&occ.values);
                    let holds = if occ.exact.is_some() { holds_exact(&ineq, &lambda) } else { slack >= -cli.common.tolerance };
                    report.push(json!({ "inequality": row.inequality.trim(), "slack": slack, "holds": holds }));
                }
            }
            Ok((json!({ "N": psi.n(), "r": psi.r(), "occupations": occ.values, "exact": exact, "inequalities": report }), 0))
        }
        Command::VerifyVertices { input } => {
            let tables: Vec<StateTable> = match input {
                Some(path) => vec![read_json(path)?],
                None => builtin_state_tables(),
            };
            let mut ok = true;
            let mut out = Vec::new();
            for t in &tables {
                let rows = verify_state_table(t, cli.common.tolerance);
                let matched = rows.iter().filter(|r| r.ok).count();
                ok &= matched == rows.len();
                out.push(json!({ "system": t.system, "matched": matched, "rows": rows.len(), "report": rows }));
            }
            Ok((json!(out), if ok { 0 } else { EXIT_MISMATCH }))
        }
        Command::Generate { kind, n, r, p, nu } => {
            let need = |x: &Option<usize>, flag: &str| x.ok_or_else(|| usage(format!("{flag} is required")));
            let family = match kind {
                Kind::Majorization => {
                    let nu = nu.clone().ok_or_else(|| usage("--nu is required"))?;
                    majorization_constraints(&nu, need(r, "-r")?)
                }
                Kind::Grassmann1 => grassmann_kind1(need(n, "-N")?, need(r, "-r")?),
                Kind::Grassmann2 => grassmann_kind2(need(n, "-N")?, need(p, "-p")?),
                Kind::Series => {
                    let ineq = series_inequality(need(n, "-N")?, need(p, "-p")?).map_err(generator_failure)?;
                    return Ok((json!({ "kind": "series", "inequality": ineq.to_string(), "lambda_coeffs": ineq.lambda_coeffs, "bound": ineq.bound() }), 0));
                }
            }
            .map_err(generator_failure)?;
            Ok((serde_json::to_value(&family).expect("serializable"), 0))
        }
        Command::Polytope { nu, r, rank_bound, m, every_m } => {
            if nu.height() > *r {
                return Err(usage(format!("{nu} has more than {r} rows")));
            }
            let system = System::new(nu.clone(), *r, *rank_bound);
            let schedule: Vec<usize> = if *every_m { (1..=*m).collect() } else { even_schedule(*m) };
            let report = pipeline(&system, &schedule).map_err(|e| match e {
                PolytopeError::Plethysm(p) => Failure { code: EXIT_CAP, message: p.to_string() },
                other => usage(other),
            })?;
            let code = if report.converged_at.is_none() && report.capped.is_some() { EXIT_CAP } else { 0 };
            Ok((report.to_json(), code))
        }
    }
}

fn generator_failure(e: GeneratorError) -> Failure {
    match e {
        GeneratorError::ResourceCap { .. } => Failure { code: EXIT_CAP, message: e.to_string() },
        other => usage(other),
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.common.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("pauli: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match run(&cli) {
        Ok((value, code)) => {
            let text = serde_json::to_string_pretty(&value).expect("serializable");
            match &cli.common.out {
                Some(path) => {
                    if let Err(e) = fs::write(path, text + "\n") {
                        eprintln!("pauli: {}: {e}", path.display());
                        return ExitCode::from(EXIT_USAGE);
                    }
                }
                None => {
                    use std::io::Write;
                    // A closed pipe downstream is not an error for us.
                    let _ = writeln!(std::io::stdout().lock(), "{text}");
                }
            }
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("pauli: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
