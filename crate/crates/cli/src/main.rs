use clap::{Parser, Subcommand, ValueEnum};
use kleisli_core::hyb::{emit_csv, emit_json, parse_hyb, parse_init, run_hyb, Mode, NumericConfig};
use kleisli_core::prob::{parse_prob, run_prob, run_prob_plus, AtomTable};
use kleisli_core::suites::{enumerate_by_name, orbits_by_name, run_suite, SuiteOptions, SUITES};
use kleisli_core::{Error, Maybe, SuiteReport};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "kleisli-lab", version, about = "Run hybrid and probabilistic programs and check monad laws on finite fragments")]
struct Cli {
    /// Echo every effective setting to stderr.
    #[arg(long, short, global = true, env = "KLEISLI_LAB_VERBOSE")]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug)]
struct Numeric {
    /// Event scan step in seconds.
    #[arg(long, env = "KLEISLI_LAB_H", default_value_t = 1e-3)]
    h: f64,
    /// Bisection tolerance in seconds.
    #[arg(long, env = "KLEISLI_LAB_EPS", default_value_t = 1e-9)]
    eps: f64,
    /// Event horizon in seconds.
    #[arg(long = "t-max", env = "KLEISLI_LAB_T_MAX", default_value_t = 100.0)]
    t_max: f64,
    /// Output sampling step in seconds.
    #[arg(long, env = "KLEISLI_LAB_DT", default_value_t = 0.01)]
    dt: f64,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum HybFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ProbFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, ValueEnum)]
enum Fragment {
    /// Base fragment over Dist if the program allows it, otherwise Dist∘Maybe.
    Auto,
    Base,
    Plus,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a hybrid program and emit its trajectory.
    RunHyb {
        file: PathBuf,
        /// Initial state, e.g. "p=5,v=0". Fixes the variable order.
        #[arg(long, env = "KLEISLI_LAB_INIT")]
        init: String,
        #[arg(long, env = "KLEISLI_LAB_MODE", default_value = "event", value_parser = parse_mode)]
        mode: Mode,
        #[command(flatten)]
        numeric: Numeric,
        /// Output file; stdout when absent.
        #[arg(long, short)]
        out: Option<PathBuf>,
        /// Defaults to json for a `.json` output file and csv otherwise.
        #[arg(long)]
        format: Option<HybFormat>,
    },
    /// Run a probabilistic program against an atom table.
    RunProb {
        file: PathBuf,
        /// Atom table in JSON.
        #[arg(long, env = "KLEISLI_LAB_ATOMS")]
        atoms: PathBuf,
        /// Start state; every state when absent.
        #[arg(long)]
        state: Option<String>,
        #[arg(long, value_enum, default_value_t = Fragment::Auto)]
        fragment: Fragment,
        #[arg(long, short)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = ProbFormat::Csv)]
        format: ProbFormat,
    },
    /// Run a verification suite, or `all`.
    Verify {
        #[arg(long, env = "KLEISLI_LAB_SUITE")]
        suite: String,
        #[command(flatten)]
        search: Search,
        #[arg(long, env = "KLEISLI_LAB_SAMPLES", default_value_t = 1000)]
        samples: usize,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate natural families `Tⁿ ⇒ T` on a finite fragment.
    Enumerate {
        #[arg(long)]
        monad: String,
        #[arg(long, default_value_t = 2)]
        arity: usize,
        #[arg(long = "max-carrier", env = "KLEISLI_LAB_MAX_CARRIER", default_value_t = 3)]
        max_carrier: usize,
        /// Argument weight denominators for dist.
        #[arg(long, default_value_t = 6)]
        denominator: u64,
        #[arg(long, env = "KLEISLI_LAB_BUDGET", default_value_t = 10_000_000)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// Connected components of the category of elements of `Tⁿ`.
    Orbits {
        #[arg(long)]
        monad: String,
        #[arg(long, default_value_t = 1)]
        arity: usize,
        #[arg(long = "max-carrier", env = "KLEISLI_LAB_MAX_CARRIER", default_value_t = 3)]
        max_carrier: usize,
        /// Denominator bound for dist, weight bound for multiset.
        #[arg(long, default_value_t = 4)]
        bound: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(clap::Args, Debug)]
struct Search {
    /// Overrides the suite's default largest carrier.
    #[arg(long = "max-carrier", env = "KLEISLI_LAB_MAX_CARRIER")]
    max_carrier: Option<usize>,
    #[arg(long, env = "KLEISLI_LAB_SEED", default_value_t = 42)]
    seed: u64,
    #[arg(long, env = "KLEISLI_LAB_BUDGET", default_value_t = 10_000_000)]
    budget: u64,
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Usage(String),
    Semantic(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::InvalidValue(_) | Error::DuplicateVariable(_) => Failure::Usage(e.to_string()),
            _ => Failure::Semantic(e.to_string()),
        }
    }
}

/// Writes to stdout; a closed pipe is not an error.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Semantic(format!("{}: {e}", p.display()))),
        None => {
            emit(text);
            Ok(())
        }
    }
}

fn report(r: &SuiteReport, json: bool) -> Result<(), Failure> {
    if json {
        emit(&(serde_json::to_string_pretty(r).expect("reports serialise") + "\n"));
    } else {
        emit(&r.to_string());
    }
    if r.passed() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let verbose = cli.verbose;
    let echo = |s: String| {
        if verbose {
            eprintln!("{s}");
        }
    };
    match cli.command {
        Command::RunHyb { file, init, mode, numeric, out, format } => {
            let cfg = NumericConfig { h: numeric.h, eps: numeric.eps, t_max: numeric.t_max, dt: numeric.dt };
            cfg.validate()?;
            let format = format.unwrap_or(match out.as_ref().and_then(|p| p.extension()) {
                Some(e) if e == "json" => HybFormat::Json,
                _ => HybFormat::Csv,
            });
            echo(format!("file = {}", file.display()));
            echo(format!("init = {init}"));
            echo(format!("mode = {mode:?}"));
            echo(format!("h = {:e}, eps = {:e}, t_max = {}, dt = {}", cfg.h, cfg.eps, cfg.t_max, cfg.dt));
            echo(format!("format = {format:?}"));
            let prog = parse_hyb(&read(&file)?)?;
            let (vars, x0) = parse_init(&init)?;
            let r = run_hyb(&prog, &vars, &x0, mode, &cfg)?;
            for w in &r.warnings {
                eprintln!("warning: {w}");
            }
            for h in &r.hits {
                echo(format!("event at t = {:?}: {:?}", h.time, h.state));
            }
            let text = match format {
                HybFormat::Csv => emit_csv(&r, cfg.dt)?,
                HybFormat::Json => serde_json::to_string_pretty(&emit_json(&r, cfg.dt)?).expect("json") + "\n",
            };
            write(out.as_deref(), &text)
        }
        Command::RunProb { file, atoms, state, fragment, out, format } => {
            echo(format!("file = {}", file.display()));
            echo(format!("atoms = {}", atoms.display()));
            echo(format!("state = {}", state.as_deref().unwrap_or("(all)")));
            let prog = parse_prob(&read(&file)?)?;
            let table = AtomTable::from_json_str(&read(&atoms)?)?;
            let plus = match fragment {
                Fragment::Auto => !prog.is_base(),
                Fragment::Base => false,
                Fragment::Plus => true,
            };
            echo(format!("fragment = {}", if plus { "plus" } else { "base" }));
            let states = match &state {
                Some(s) => vec![table.state(s)?],
                None => (0..table.len()).collect(),
            };
            let mut rows = Vec::new();
            for &x in &states {
                let d: Vec<(String, String)> = if plus {
                    run_prob_plus(&prog, &table, x)?.iter().map(|(y, w)| (table.state_name(y), w.to_string())).collect()
                } else {
                    run_prob(&prog, &table, x)?.iter().map(|(y, w)| (table.state_name(&Maybe::Just(*y)), w.to_string())).collect()
                };
                rows.push((table.carrier[x].clone(), d));
            }
            let text = match format {
                ProbFormat::Csv => {
                    let mut s = String::from("from,to,weight\n");
                    for (x, d) in &rows {
                        for (y, w) in d {
                            s += &format!("{x},{y},{w}\n");
                        }
                    }
                    s
                }
                ProbFormat::Json => {
                    let kernel: serde_json::Map<String, serde_json::Value> = rows
                        .iter()
                        .map(|(x, d)| (x.clone(), d.iter().map(|(y, w)| (y.clone(), serde_json::Value::from(w.as_str()))).collect()))
                        .collect();
                    let v = serde_json::json!({ "fragment": if plus { "plus" } else { "base" }, "kernel": kernel });
                    serde_json::to_string_pretty(&v).expect("json") + "\n"
                }
            };
            write(out.as_deref(), &text)
        }
        Command::Verify { suite, search, samples, json } => {
            let names: Vec<&str> = if suite == "all" {
                SUITES.to_vec()
            } else if SUITES.contains(&suite.as_str()) {
                vec![suite.as_str()]
            } else {
                return Err(Failure::Usage(format!("unknown suite `{suite}`; known: all, {}", SUITES.join(", "))));
            };
            let o = SuiteOptions { max_carrier: search.max_carrier, seed: search.seed, samples, budget: search.budget };
            echo(format!("suite = {suite}"));
            echo(format!(
                "max_carrier = {}",
                o.max_carrier.map_or("(suite default)".to_string(), |n| n.to_string())
            ));
            echo(format!("seed = {}, samples = {}, budget = {}", o.seed, o.samples, o.budget));
            let mut failed = false;
            let mut all = Vec::new();
            for name in names {
                let r = run_suite(name, &o)?;
                failed |= !r.passed();
                if json {
                    all.push(r);
                } else {
                    emit(&r.to_string());
                }
            }
            if json {
                let v = if all.len() == 1 { serde_json::to_value(&all[0]) } else { serde_json::to_value(&all) };
                emit(&(serde_json::to_string_pretty(&v.expect("reports serialise")).expect("json") + "\n"));
            }
            if failed {
                Err(Failure::Verification)
            } else {
                Ok(())
            }
        }
        Command::Enumerate { monad, arity, max_carrier, denominator, budget, json } => {
            echo(format!("monad = {monad}, arity = {arity}, max_carrier = {max_carrier}, denominator = {denominator}, budget = {budget}"));
            report(&enumerate_by_name(&monad, arity, max_carrier, denominator, budget)?, json)
        }
        Command::Orbits { monad, arity, max_carrier, bound, json } => {
            echo(format!("monad = {monad}, arity = {arity}, max_carrier = {max_carrier}, bound = {bound}"));
            report(&orbits_by_name(&monad, arity, max_carrier, bound)?, json)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Semantic(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}
