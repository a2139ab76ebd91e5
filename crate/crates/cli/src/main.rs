//! `dwigner`: discrete Wigner functions from the command line.
//!
//! Exit codes: 0 on success, 1 when an input fails validation, 2 on usage errors.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dwigner::algorithm::{run_parity_algorithm_noisy, STEP_LABELS};
use dwigner::fidelity::super_fidelity;
use dwigner::generators::{bloch_vector, generators, wigner_su2, wigner_su4};
use dwigner::io::{emit_grid, parse_matrix, serialize_matrix, GridFormat};
use dwigner::kernel::{kernel, wigner_grid};
use dwigner::linalg::{hermitian_eigenvalues, positivity_inequalities, validate_density};
use dwigner::states::{
    bell, gisin, gisin_from_combinations, munro, peres_horodecki, werner, werner_wigner, xstate_delta,
    xstate_marginals, xstate_wigner, BellKind, Representation, XState,
};
use dwigner::two_qubit::{delta_pair, fano_extract, wigner_pair_from_matrix};
use dwigner::{Complex64, ComplexMatrix, DensityMatrix, Error, Grid, DEFAULT_TOL};

const TOLERANCE_VAR: &str = "DWIGNER_TOLERANCE";

#[derive(Debug, Parser)]
#[command(name = "dwigner", version, about = "Discrete Wigner functions for qubits, qubit pairs and ququarts")]
struct Cli {
    /// Report errors on stderr as one JSON object.
    #[arg(long, global = true)]
    json_errors: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WignerRep {
    /// Qubit closed form (2×2 input).
    Su2,
    /// Ququart closed form (4×4 input).
    Su4,
    /// Two-qubit pair grid (4×4 input).
    Pair,
    /// Tr[G†ρ] through the mapping kernel (any N ≥ 2).
    Kernel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StateRep {
    Su4,
    Pair,
}

impl From<StateRep> for Representation {
    fn from(r: StateRep) -> Self {
        match r {
            StateRep::Su4 => Representation::Su4,
            StateRep::Pair => Representation::Pair,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DeltaRep {
    Pair,
    Xstate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Matrix,
    Wigner,
}

#[derive(Debug, clap::Args)]
struct GridOutput {
    /// Output file; stdout when absent.
    #[arg(long, short)]
    output: Option<PathBuf>,

    /// csv, json or gnuplot; inferred from the output extension, else csv.
    #[arg(long, value_parser = parse_format)]
    format: Option<GridFormat>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Wigner grid of a density matrix.
    Wigner {
        #[arg(long, short)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "su4")]
        rep: WignerRep,
        #[command(flatten)]
        out: GridOutput,
    },
    /// Named state as a matrix or a Wigner grid.
    ///
    /// Names: bell:phi+|phi-|psi+|psi-, werner:F=<f>, munro:g=<γ>, ph:x=<x>,
    /// gisin:a=<a>,b=<b>,x=<x> or gisin:diff=<a²−b²>,prod=<ab>,x=<x>, level:<k> with k in 0..=3.
    State {
        #[arg(long)]
        name: String,
        #[arg(long, value_enum, default_value = "matrix")]
        emit: Emit,
        #[arg(long, value_enum, default_value = "su4")]
        rep: StateRep,
        #[command(flatten)]
        out: GridOutput,
    },
    /// Correlation grid Δ = W − product of marginals.
    Delta {
        #[arg(long, short)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "pair")]
        rep: DeltaRep,
        #[command(flatten)]
        out: GridOutput,
    },
    /// Marginals Q_X(μ) and R_X(ν) of an X-state, as JSON.
    Marginals {
        #[arg(long, short)]
        input: PathBuf,
    },
    /// Single-ququart parity algorithm.
    Algorithm {
        /// Pulse label, 2 or 6.
        #[arg(long)]
        pulse: u8,
        /// Directory receiving one Wigner grid per step.
        #[arg(long)]
        snapshots: Option<PathBuf>,
        /// Depolarizing weight ε in [0, 1).
        #[arg(long, default_value_t = 0.0)]
        noise: f64,
        /// Snapshot format.
        #[arg(long, value_parser = parse_format, default_value = "csv")]
        format: GridFormat,
    },
    /// Super-fidelity of two density matrices.
    Fidelity {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// Density-matrix checks, eigenvalues and the trace inequalities.
    Validate {
        #[arg(long, short)]
        input: PathBuf,
    },
}

fn parse_format(s: &str) -> Result<GridFormat, Error> {
    s.parse()
}

/// A failed command: exit code, error class and message, with eigenvalues when a matrix failed
/// the density checks.
#[derive(Debug)]
struct Failure {
    code: u8,
    kind: &'static str,
    message: String,
    eigenvalues: Option<Vec<f64>>,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: 2, kind: "usage", message: message.into(), eigenvalues: None }
    }

    fn io(path: &Path, e: io::Error) -> Self {
        Self { code: 2, kind: "io", message: format!("{}: {e}", path.display()), eigenvalues: None }
    }

    fn render(&self, json: bool) -> String {
        if json {
            let mut v = serde_json::json!({ "error": self.kind, "exit_code": self.code, "message": self.message });
            if let Some(ev) = &self.eigenvalues {
                v["eigenvalues"] = ev.clone().into();
            }
            v.to_string()
        } else {
            let mut s = format!("error: {}", self.message);
            if let Some(ev) = &self.eigenvalues {
                s.push_str(&format!("\neigenvalues: {}", join_floats(ev)));
            }
            s
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (code, kind) = match &e {
            Error::UnknownState(_)
            | Error::UnknownRepresentation(_)
            | Error::Format(_)
            | Error::Pulse(_)
            | Error::OutOfRange { .. }
            | Error::Selector(_)
            | Error::GeneratorIndex { .. } => (2, "usage"),
            Error::Parse { .. } => (1, "parse"),
            _ => (1, "validation"),
        };
        Self { code, kind, message: e.to_string(), eigenvalues: None }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Self { code: 2, kind: "io", message: e.to_string(), eigenvalues: None }
    }
}

type Outcome = Result<(), Failure>;

fn join_floats(v: &[f64]) -> String {
    v.iter().map(|x| format!("{x:?}")).collect::<Vec<_>>().join(" ")
}

fn tolerance() -> Result<f64, Failure> {
    match std::env::var(TOLERANCE_VAR) {
        Err(_) => Ok(DEFAULT_TOL),
        Ok(s) => match s.trim().parse::<f64>() {
            Ok(t) if t > 0.0 && t.is_finite() => Ok(t),
            _ => Err(Failure::usage(format!("{TOLERANCE_VAR} must be a positive number, got {s:?}"))),
        },
    }
}

fn read_matrix(path: &Path) -> Result<ComplexMatrix, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::io(path, e))?;
    parse_matrix(&text).map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    })
}

/// Validates `m`; on failure the report carries the eigenvalues of its Hermitian part.
fn density(m: ComplexMatrix, tol: f64) -> Result<DensityMatrix, Failure> {
    let eigenvalues = hermitian_eigenvalues(&m.hermitian_part()).ok();
    validate_density(m, tol).map_err(|e| Failure { eigenvalues, ..Failure::from(e) })
}

fn read_density(path: &Path, tol: f64) -> Result<DensityMatrix, Failure> {
    density(read_matrix(path)?, tol)
}

fn format_for(out: &GridOutput) -> GridFormat {
    out.format.unwrap_or_else(|| match out.output.as_ref().and_then(|p| p.extension()).and_then(|e| e.to_str()) {
        Some("json") => GridFormat::Json,
        Some("dat" | "gp" | "gnuplot") => GridFormat::Gnuplot,
        _ => GridFormat::Csv,
    })
}

fn write_text(target: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Outcome {
    match target {
        Some(p) => fs::write(p, text).map_err(|e| Failure::io(p, e)),
        None => Ok(stdout.write_all(text.as_bytes())?),
    }
}

fn write_grid(grid: &Grid, out: &GridOutput, stdout: &mut dyn Write) -> Outcome {
    write_text(out.output.as_deref(), &emit_grid(grid, format_for(out)), stdout)
}

enum Named {
    Density(DensityMatrix),
    Werner(f64),
    X(XState),
}

fn parse_params(spec: &str, keys: &[&str]) -> Result<Vec<f64>, Failure> {
    let bad = || Failure::from(Error::UnknownState(spec.to_string()));
    let mut values = vec![None; keys.len()];
    for part in spec.split(',') {
        let (k, v) = part.split_once('=').ok_or_else(bad)?;
        let slot = keys.iter().position(|&key| key == k.trim()).ok_or_else(bad)?;
        values[slot] = Some(v.trim().parse::<f64>().map_err(|_| bad())?);
    }
    values.into_iter().map(|v| v.ok_or_else(bad)).collect()
}

fn named_state(name: &str, tol: f64) -> Result<Named, Failure> {
    let unknown = || Failure::from(Error::UnknownState(name.to_string()));
    let (family, args) = name.split_once(':').ok_or_else(unknown)?;
    Ok(match family {
        "bell" => Named::Density(bell(args.parse::<BellKind>()?)),
        "werner" => Named::Werner(parse_params(args, &["F"]).map_err(|_| unknown())?[0]),
        "munro" => Named::X(munro(parse_params(args, &["g"]).map_err(|_| unknown())?[0])?),
        "ph" => Named::X(peres_horodecki(parse_params(args, &["x"]).map_err(|_| unknown())?[0])?),
        "gisin" => {
            if let Ok(p) = parse_params(args, &["a", "b", "x"]) {
                Named::X(gisin(p[0], p[1], p[2])?)
            } else {
                let p = parse_params(args, &["diff", "prod", "x"]).map_err(|_| unknown())?;
                Named::X(gisin_from_combinations(p[0], p[1], p[2])?)
            }
        }
        "level" => {
            let k: usize = args.parse().map_err(|_| unknown())?;
            if k > 3 {
                return Err(unknown());
            }
            let mut psi = [Complex64::new(0.0, 0.0); 4];
            psi[k] = Complex64::new(1.0, 0.0);
            Named::Density(density(ComplexMatrix::projector(&psi), tol)?)
        }
        _ => return Err(unknown()),
    })
}

fn named_matrix(state: &Named) -> Result<ComplexMatrix, Failure> {
    Ok(match state {
        Named::Density(d) => d.matrix().clone(),
        Named::Werner(f) => werner(*f)?.into_matrix(),
        Named::X(x) => x.to_matrix(),
    })
}

fn named_wigner(state: &Named, rep: Representation) -> Result<Grid, Failure> {
    Ok(match state {
        Named::Density(d) => match rep {
            Representation::Su4 => Grid::Wigner(wigner_su4(d)?),
            Representation::Pair => Grid::Pair(wigner_pair_from_matrix(d)?),
        },
        Named::Werner(f) => werner_wigner(*f, rep)?,
        Named::X(x) => xstate_wigner(x, rep),
    })
}

fn validate_report(m: ComplexMatrix, tol: f64, stdout: &mut dyn Write) -> Outcome {
    let herm = m.hermitian_part();
    let eigenvalues = hermitian_eigenvalues(&herm)?;
    let tr = m.trace();
    writeln!(stdout, "dim {}", m.dim())?;
    writeln!(stdout, "hermiticity_defect {:?}", m.hermiticity_defect())?;
    writeln!(stdout, "trace {:?} {:?}", tr.re, tr.im)?;
    writeln!(stdout, "eigenvalues {}", join_floats(&eigenvalues))?;
    if m.dim() == 4 {
        let r = positivity_inequalities(&herm)?;
        let mark = |b: bool| if b { "holds" } else { "fails" };
        writeln!(stdout, "trace_powers {:?} {:?} {:?}", r.trace_sq, r.trace_cube, r.trace_fourth)?;
        writeln!(stdout, "inequalities {} {} {}", mark(r.ineq1), mark(r.ineq2), mark(r.ineq3))?;
    }
    match validate_density(m, tol) {
        Ok(_) => {
            writeln!(stdout, "status valid")?;
            Ok(())
        }
        Err(e) => {
            writeln!(stdout, "status invalid")?;
            Err(Failure::from(e))
        }
    }
}

fn run(cli: Cli, stdout: &mut dyn Write) -> Outcome {
    let tol = tolerance()?;
    match cli.command {
        Command::Wigner { input, rep, out } => {
            let m = read_matrix(&input)?;
            let rho = density(m, tol)?;
            let grid = match rep {
                WignerRep::Su2 => {
                    let b = bloch_vector(&rho, &generators(2)?)?;
                    Grid::Wigner(wigner_su2([b.get(1), b.get(2), b.get(3)])?)
                }
                WignerRep::Su4 => Grid::Wigner(wigner_su4(&rho)?),
                WignerRep::Pair => Grid::Pair(wigner_pair_from_matrix(&rho)?),
                WignerRep::Kernel => Grid::Wigner(wigner_grid(&rho, &*kernel(rho.dim())?)?),
            };
            write_grid(&grid, &out, stdout)
        }
        Command::State { name, emit, rep, out } => {
            let state = named_state(&name, tol)?;
            match emit {
                Emit::Matrix => {
                    let text = serialize_matrix(&named_matrix(&state)?) + "\n";
                    write_text(out.output.as_deref(), &text, stdout)
                }
                Emit::Wigner => write_grid(&named_wigner(&state, rep.into())?, &out, stdout),
            }
        }
        Command::Delta { input, rep, out } => {
            let m = read_matrix(&input)?;
            let grid = match rep {
                DeltaRep::Pair => Grid::Pair(delta_pair(&fano_extract(&density(m, tol)?)?)),
                DeltaRep::Xstate => Grid::Wigner(xstate_delta(&XState::from_matrix(&m, tol)?)),
            };
            write_grid(&grid, &out, stdout)
        }
        Command::Marginals { input } => {
            let x = XState::from_matrix(&read_matrix(&input)?, tol)?;
            let m = xstate_marginals(&x);
            writeln!(stdout, "{}", serde_json::json!({ "q": m.q, "r": m.r }))?;
            Ok(())
        }
        Command::Algorithm { pulse, snapshots, noise, format } => {
            let trace = run_parity_algorithm_noisy(pulse, noise)?;
            if let Some(dir) = snapshots {
                fs::create_dir_all(&dir).map_err(|e| Failure::io(&dir, e))?;
                let ext = match format {
                    GridFormat::Csv => "csv",
                    GridFormat::Json => "json",
                    GridFormat::Gnuplot => "dat",
                };
                for (step, label) in trace.steps.iter().zip(STEP_LABELS) {
                    let path = dir.join(format!("{label}.{ext}"));
                    let text = emit_grid(&Grid::Wigner(step.wigner.clone()), format);
                    fs::write(&path, text).map_err(|e| Failure::io(&path, e))?;
                }
            }
            let m = trace.measurement;
            writeln!(stdout, "level {}, parity {}, p={:.3}", m.level, trace.parity, m.probability)?;
            Ok(())
        }
        Command::Fidelity { a, b } => {
            let f = super_fidelity(&read_density(&a, tol)?, &read_density(&b, tol)?)?;
            writeln!(stdout, "{f:?}")?;
            Ok(())
        }
        Command::Validate { input } => validate_report(read_matrix(&input)?, tol, stdout),
    }
}

fn main() -> ExitCode {
    let json = std::env::args().any(|a| a == "--json-errors");
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            if json {
                eprintln!("{}", Failure::usage(e.kind().to_string()).render(true));
            } else {
                let _ = e.print();
            }
            return ExitCode::from(2);
        }
    };
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    match run(cli, &mut lock) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let _ = lock.flush();
            eprintln!("{}", f.render(json));
            ExitCode::from(f.code)
        }
    }
}
