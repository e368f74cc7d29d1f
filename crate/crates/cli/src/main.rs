mod cache;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use schwinger_core::su2::su2_irrep_state;
use schwinger_core::su3::{dimension, gram_rank, sp2r_weight, tower_state, IrrepRequest};
use schwinger_core::verify::{run_suite, Fault, Suite, VerifyConfig};
use schwinger_core::{Error, IrrepState, Method, Rational, StateVector};

use cache::{Cache, CACHE_ENV};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BOUND: u8 = 3;

#[derive(Parser)]
#[command(
    name = "schwinger",
    version,
    about = "Exact SU(3) irrep states from Schwinger bosons"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build one irrep basis state.
    Irrep {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Upper indices, comma separated, each in 1..3.
        #[arg(long, value_delimiter = ',')]
        upper: Vec<u8>,
        /// Lower indices, comma separated, each in 1..3.
        #[arg(long, value_delimiter = ',')]
        lower: Vec<u8>,
        #[arg(long, value_enum, default_value_t = MethodArg::Isb)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Cache directory; defaults to $SCHWINGER_CACHE when set.
        #[arg(long)]
        cache: Option<PathBuf>,
        /// Largest accepted n + m.
        #[arg(long, default_value_t = 5)]
        max_total: usize,
    },
    /// Run a verification suite and emit a JSON report.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 5)]
        max_total: usize,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, hide = true)]
        inject_fault: Option<String>,
    },
    /// Compare the Gram rank of an (n, m) family with the dimension formula.
    Dim {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 5)]
        max_total: usize,
    },
    /// (a†·b†)^rho applied to an irrep state, with its Sp(2,R) labels.
    Tower {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_delimiter = ',')]
        upper: Vec<u8>,
        #[arg(long, value_delimiter = ',')]
        lower: Vec<u8>,
        #[arg(long)]
        rho: u32,
        /// Largest accepted n + m, and largest rho.
        #[arg(long, default_value_t = 5)]
        max_total: usize,
    },
    /// Symmetrized SU(2) state with its (j, m) labels.
    Su2Irrep {
        #[arg(long, value_delimiter = ',', required = true)]
        indices: Vec<u8>,
        #[arg(long, default_value_t = 16)]
        max_n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Explicit,
    Projection,
    Isb,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Explicit => Method::Explicit,
            MethodArg::Projection => Method::Projection,
            MethodArg::Isb => Method::Isb,
        }
    }
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Oscillator,
    Su2,
    Algebra,
    Sp2r,
    Irreps,
    Isb,
    Ladder,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Oscillator => Suite::Oscillator,
            SuiteArg::Su2 => Suite::Su2,
            SuiteArg::Algebra => Suite::Algebra,
            SuiteArg::Sp2r => Suite::Sp2r,
            SuiteArg::Irreps => Suite::Irreps,
            SuiteArg::Isb => Suite::Isb,
            SuiteArg::Ladder => Suite::Ladder,
            SuiteArg::All => Suite::All,
        }
    }
}

enum Failure {
    Usage(String),
    Bound(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceBound { .. } => Failure::Bound(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}\n\nFor more information, try '--help'.");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Bound(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_BOUND)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_FAIL)
        }
    }
}

fn bound(what: &'static str, value: usize, limit: usize) -> Result<(), Failure> {
    if value > limit {
        Err(Error::ResourceBound { what, value, limit }.into())
    } else {
        Ok(())
    }
}

fn emit(bytes: &[u8]) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    out.write_all(bytes)?;
    out.flush()?;
    Ok(())
}

fn to_json<T: Serialize>(v: &T) -> Vec<u8> {
    let mut s = serde_json::to_vec_pretty(v).expect("serializable");
    s.push(b'\n');
    s
}

fn run(cmd: Command) -> Result<ExitCode, Failure> {
    match cmd {
        Command::Irrep {
            n,
            m,
            upper,
            lower,
            method,
            format,
            cache,
            max_total,
        } => {
            let req = IrrepRequest::new(n, m, upper, lower)?;
            bound("n + m", n + m, max_total)?;
            let method = Method::from(method);
            let cache = cache
                .or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from))
                .map(Cache::open)
                .transpose()?;
            let canonical = serde_json::to_string(&serde_json::json!({
                "request": req,
                "method": method,
                "format": format,
            }))
            .expect("serializable");
            let key = Cache::key(&canonical);
            if let Some(body) = cache.as_ref().and_then(|c| c.get(&key)) {
                emit(&body)?;
                return Ok(ExitCode::SUCCESS);
            }
            let state = IrrepState::build(&req, method);
            let body = match format {
                Format::Json => to_json(&state),
                Format::Text => render_text(&state).into_bytes(),
            };
            if let Some(c) = &cache {
                c.put(&key, &canonical, &body)?;
            }
            emit(&body)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            max_total,
            out,
            inject_fault,
        } => {
            let mut config = VerifyConfig::new(max_total);
            if let Some(f) = inject_fault {
                config = config.with_fault(f.parse::<Fault>()?);
            }
            let report = run_suite(suite.into(), &config)?;
            let body = to_json(&report);
            match out {
                Some(path) => fs::write(path, &body)?,
                None => emit(&body)?,
            }
            eprintln!(
                "{}: {}/{} checks passed",
                report.suite, report.summary.passed, report.summary.total
            );
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAIL)
            })
        }
        Command::Dim { n, m, max_total } => {
            #[derive(Serialize)]
            struct Dim {
                n: usize,
                m: usize,
                gram_rank: usize,
                formula: usize,
                #[serde(rename = "match")]
                matches: bool,
            }
            let rank = gram_rank(n, m, max_total)?;
            let formula = dimension(n, m);
            emit(&to_json(&Dim {
                n,
                m,
                gram_rank: rank,
                formula,
                matches: rank == formula,
            }))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Tower {
            n,
            m,
            upper,
            lower,
            rho,
            max_total,
        } => {
            #[derive(Serialize)]
            struct Tower<'a> {
                label: [usize; 2],
                upper: &'a [u8],
                lower: &'a [u8],
                rho: u32,
                k: Rational,
                m_prime: Rational,
                terms: &'a StateVector<Rational>,
            }
            let (upper, lower) = default_indices(n, m, upper, lower);
            let req = IrrepRequest::new(n, m, upper, lower)?;
            bound("n + m", n + m, max_total)?;
            bound("rho", rho as usize, max_total)?;
            let state = tower_state(&req, rho);
            let w = sp2r_weight(&state)?;
            emit(&to_json(&Tower {
                label: [n, m],
                upper: req.upper(),
                lower: req.lower(),
                rho,
                k: w.k,
                m_prime: w.m_prime,
                terms: &state,
            }))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Su2Irrep { indices, max_n } => {
            #[derive(Serialize)]
            struct Su2<'a> {
                indices: &'a [u8],
                j: Rational,
                m: Rational,
                terms: &'a StateVector<Rational>,
            }
            bound("number of indices", indices.len(), max_n)?;
            let st = su2_irrep_state(&indices)?;
            emit(&to_json(&Su2 {
                indices: &indices,
                j: st.j(),
                m: st.m(),
                terms: &st.vector,
            }))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Without explicit indices a tower starts from the all-ones component.
fn default_indices(n: usize, m: usize, upper: Vec<u8>, lower: Vec<u8>) -> (Vec<u8>, Vec<u8>) {
    if upper.is_empty() && lower.is_empty() {
        (vec![1; n], vec![1; m])
    } else {
        (upper, lower)
    }
}

fn render_text(state: &IrrepState) -> String {
    let rows: Vec<(String, String)> = state
        .vector
        .iter()
        .map(|(mono, c)| (c.to_string(), mono.to_string()))
        .collect();
    let width = rows.iter().map(|(c, _)| c.len()).max().unwrap_or(0).max(5);
    let mut out = format!(
        "{}  method={}  terms={}\n",
        state.request,
        state.method,
        rows.len()
    );
    out.push_str(&format!("{:>width$}  n_a | n_b\n", "coeff"));
    for (c, mono) in rows {
        out.push_str(&format!("{c:>width$}  {mono}\n"));
    }
    out
}
