mod session;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use algebroid::filtered_dual::parse_functional;
use algebroid::finite_dual::{density_diagnostic, sample_dualrep, DualRep, URep};
use algebroid::hopf::{antipode_star, delta_star, hopf_axiom_suite};
use algebroid::jets::theta_matrix;
use algebroid::random::Sampler;
use algebroid::report::Report;
use algebroid::suites::Suite;
use algebroid::{AlgebraError, Envelope, Fixture, MultiIndex, Poly};
use clap::{Args, Parser, Subcommand};

use session::{load_rep, CliError, Loaded, Source};

const GRAMMAR: &str = "\
expression grammar:
  poly        integers, rationals p/q, variables x1..xk, + - * ^ and parentheses;
              ^ takes a nonnegative integer literal
  element     a poly that may also use generators X1..Xr, e.g. X1^2*(3*x1) + X2 - 1/2
  functional  eps | theta(a'; a) | {[alpha]: poly, ...} with alpha = [a1,...,ar]";

#[derive(Parser)]
#[command(name = "algebroid", version, about = "Exact computations in the enveloping Hopf algebroid of a Lie-Rinehart algebra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SourceArgs {
    /// Built-in fixture: W1, W2 or AFF
    #[arg(long)]
    fixture: Option<Fixture>,
    /// Presentation JSON document
    #[arg(long)]
    presentation: Option<PathBuf>,
    /// Session JSON document
    #[arg(long)]
    config: Option<PathBuf>,
}

impl SourceArgs {
    fn source(&self) -> Source {
        Source { fixture: self.fixture, presentation: self.presentation.clone(), config: self.config.clone() }
    }

    fn given(&self) -> bool {
        self.fixture.is_some() || self.presentation.is_some() || self.config.is_some()
    }

    fn label(&self) -> String {
        match (&self.fixture, &self.presentation, &self.config) {
            (Some(f), _, _) => f.name().to_string(),
            (_, Some(p), _) | (_, _, Some(p)) => {
                p.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "custom".into())
            }
            _ => "custom".into(),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run the Hopf algebroid axioms on a presentation, or a named property suite
    Check {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        level: Option<u32>,
        /// pbw, schauenburg, hopf, fuv, zeta, jets or all (runs over the built-in fixtures)
        #[arg(long)]
        suite: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Product of two elements of U
    Mul {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Comultiplication of an element of U
    Coprod {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        expr: String,
    },
    /// Translation map of an element of U
    Translate {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        expr: String,
    },
    /// Antipode of a functional in U*
    Antipode {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        functional: String,
        #[arg(long)]
        precision: Option<u32>,
    },
    /// Convolution product of two functionals
    Convolve {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        precision: Option<u32>,
    },
    /// Comultiplication of a functional at levels (m, n), as the table f(X^alpha X^beta)
    Deltastar {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        functional: String,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
    },
    /// The functional phi(m . -) of a representation
    Zeta {
        #[command(flatten)]
        source: SourceArgs,
        /// Representation JSON document; defaults to the first one in the session, then A
        #[arg(long)]
        rep: Option<PathBuf>,
        /// Comma-separated entries of phi
        #[arg(long)]
        phi: String,
        /// Comma-separated entries of m
        #[arg(long)]
        m: String,
        #[arg(long)]
        precision: Option<u32>,
    },
    /// The matrix of vartheta(h)^gamma against X^alpha, with its determinant
    JetsMatrix {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        level: u32,
        #[arg(long)]
        json: bool,
    },
    /// Rank of the restrictions of zeta-images to F^n U
    Density {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        level: u32,
        /// Extra representation documents
        #[arg(long)]
        rep: Vec<PathBuf>,
        /// Number of seeded random representatives to add
        #[arg(long, default_value_t = 0)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

const DEFAULT_PRECISION: u32 = 2;

struct Output {
    text: String,
    failed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, failed: false }
    }
}

fn load(source: &SourceArgs) -> Result<Loaded, CliError> {
    source.source().load()
}

fn report_output(report: &Report) -> Output {
    let total = report.lines().len();
    let failed = report.failures().count();
    let mut text = report.to_string();
    let _ = writeln!(text, "summary: {} passed, {failed} failed", total - failed);
    Output { text, failed: failed > 0 }
}

fn poly_list(env: &Envelope, text: &str) -> Result<Vec<Poly>, CliError> {
    text.split(',').map(|p| algebroid::expr::parse_poly(p, env.nvars()).map_err(CliError::from)).collect()
}

fn run(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Check { source, level, suite, seed } => match suite {
            Some(name) => {
                if source.given() || level.is_some() {
                    return Err(CliError::Usage("--suite runs over the built-in fixtures; drop --level and the presentation flags".into()));
                }
                let suites: Vec<Suite> = if name == "all" {
                    Suite::ALL.to_vec()
                } else {
                    vec![name.parse().map_err(CliError::Usage)?]
                };
                let mut report = Report::new();
                for s in suites {
                    report.extend(s.run(seed));
                }
                Ok(report_output(&report))
            }
            None => {
                let loaded = load(&source)?;
                let level = level.or(loaded.precision).unwrap_or(DEFAULT_PRECISION);
                Ok(report_output(&hopf_axiom_suite(&loaded.env, &source.label(), level, seed)))
            }
        },
        Command::Mul { source, left, right } => {
            let env = load(&source)?.env;
            let (u, v) = (env.parse(&left)?, env.parse(&right)?);
            Ok(Output::ok(format!("{}\n", env.mul(&u, &v))))
        }
        Command::Coprod { source, expr } => {
            let env = load(&source)?.env;
            let u = env.parse(&expr)?;
            Ok(Output::ok(format!("{}\n", env.coprod(&u))))
        }
        Command::Translate { source, expr } => {
            let env = load(&source)?.env;
            let u = env.parse(&expr)?;
            Ok(Output::ok(format!("{}\n", env.translate(&u))))
        }
        Command::Antipode { source, functional, precision } => {
            let loaded = load(&source)?;
            let n = precision.or(loaded.precision).unwrap_or(DEFAULT_PRECISION);
            let f = parse_functional(&loaded.env, &functional, n)?;
            Ok(Output::ok(format!("{}\n", antipode_star(&loaded.env, &f))))
        }
        Command::Convolve { source, left, right, precision } => {
            let loaded = load(&source)?;
            let n = precision.or(loaded.precision).unwrap_or(DEFAULT_PRECISION);
            let f = parse_functional(&loaded.env, &left, n)?;
            let g = parse_functional(&loaded.env, &right, n)?;
            Ok(Output::ok(format!("{}\n", algebroid::filtered_dual::convolve(&loaded.env, &f, &g))))
        }
        Command::Deltastar { source, functional, m, n } => {
            let env = load(&source)?.env;
            let f = parse_functional(&env, &functional, m + n)?;
            let table = delta_star(&env, &f, m, n)?;
            let mut text = String::new();
            for alpha in env.basis(n) {
                for beta in env.basis(m) {
                    let v = table.entry(&beta, &alpha);
                    if !v.is_zero() {
                        let _ = writeln!(text, "f(X^{alpha} X^{beta}) = {v}");
                    }
                }
            }
            if text.is_empty() {
                text.push_str("0\n");
            }
            Ok(Output::ok(text))
        }
        Command::Zeta { source, rep, phi, m, precision } => {
            let loaded = load(&source)?;
            let env = &loaded.env;
            let urep = match (&rep, loaded.reps.first()) {
                (Some(path), _) => load_rep(env, path, &session::read_file(path)?)?,
                (None, Some((path, text))) => load_rep(env, path, text)?,
                (None, None) => URep::trivial(env),
            };
            let w = DualRep::new(urep, poly_list(env, &phi)?, poly_list(env, &m)?)?;
            let n = precision.or(loaded.precision).unwrap_or(DEFAULT_PRECISION);
            Ok(Output::ok(format!("{}\n", w.zeta(env, n))))
        }
        Command::JetsMatrix { source, level, json } => {
            let env = load(&source)?.env;
            let (matrix, det) = theta_matrix(&env, level)?;
            Ok(Output::ok(if json { matrix_json(&matrix, &det) } else { matrix_text(&env, level, &matrix, &det) }))
        }
        Command::Density { source, level, rep, samples, seed } => {
            let loaded = load(&source)?;
            let env = &loaded.env;
            let k = env.nvars();
            let mut ws: Vec<DualRep> = MultiIndex::up_to_degree(k, level)
                .into_iter()
                .map(|g| DualRep::eta(env, Poly::one(k), Poly::monomial(k, g, algebroid::poly::int(1))))
                .collect();
            let mut docs = loaded.reps.clone();
            for path in &rep {
                docs.push((path.clone(), session::read_file(path)?));
            }
            for (path, text) in &docs {
                let urep = load_rep(env, path, text)?;
                let d = urep.dim();
                for p in 0..d {
                    for q in 0..d {
                        let e = |i: usize| (0..d).map(|j| if j == i { Poly::one(k) } else { Poly::zero(k) }).collect();
                        ws.push(DualRep::new(urep.clone(), e(p), e(q))?);
                    }
                }
            }
            let mut sampler = Sampler::new(seed);
            ws.extend((0..samples).map(|_| sample_dualrep(env, &mut sampler)));
            let (rank, full) = density_diagnostic(env, &ws, level);
            Ok(Output::ok(format!(
                "rank {rank} of {full} over Frac(A) at level {level} from {} representatives\n\
                 finite-level evidence only; no conclusion about density is drawn\n",
                ws.len()
            )))
        }
    }
}

fn matrix_text(env: &Envelope, level: u32, matrix: &[Vec<Poly>], det: &Poly) -> String {
    let rows: Vec<String> = MultiIndex::up_to_degree(env.nvars(), level).iter().map(|g| format!("h^{g}")).collect();
    let cols: Vec<String> = env.basis(level).iter().map(|a| format!("X^{a}")).collect();
    let cells: Vec<Vec<String>> = matrix.iter().map(|r| r.iter().map(Poly::to_string).collect()).collect();
    let label_width = rows.iter().map(String::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols.len())
        .map(|c| cells.iter().map(|r| r[c].len()).chain([cols[c].len()]).max().unwrap_or(0))
        .collect();
    let mut text = format!("{:label_width$}", "");
    for (c, w) in cols.iter().zip(&widths) {
        let _ = write!(text, "  {c:>w$}");
    }
    text.push('\n');
    for (label, row) in rows.iter().zip(&cells) {
        let _ = write!(text, "{label:label_width$}");
        for (cell, w) in row.iter().zip(&widths) {
            let _ = write!(text, "  {cell:>w$}");
        }
        text.push('\n');
    }
    let _ = writeln!(text, "det = {det}");
    text
}

fn matrix_json(matrix: &[Vec<Poly>], det: &Poly) -> String {
    let cells: Vec<Vec<String>> = matrix.iter().map(|r| r.iter().map(Poly::to_string).collect()).collect();
    let doc = serde_json::json!({ "matrix": cells, "determinant": det.to_string() });
    format!("{doc}\n")
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            let grammar = matches!(
                err,
                CliError::Algebra(AlgebraError::Syntax { .. } | AlgebraError::UnknownVariable { .. })
            );
            if grammar {
                eprintln!("{GRAMMAR}");
            }
            ExitCode::from(2)
        }
    }
}
