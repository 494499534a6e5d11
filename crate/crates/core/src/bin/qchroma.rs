use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use qchroma_core::chromatic::{
    an_expansion, csf_bruteforce, csf_recursive, gp_expansion, graph_from_shape, SymPoly,
};
use qchroma_core::harness::{emit, exit_code, run_suites, Bounds, Format, RunOptions};
use qchroma_core::hits::{hit_numbers_basis, hit_numbers_stat};
use qchroma_core::qarith::QLaurent;
use qchroma_core::rooks::rook_number;
use qchroma_core::shapes::{parse_board, parse_shape, BoardShape};
use qchroma_core::Error;

#[derive(Parser)]
#[command(
    name = "qchroma",
    version,
    about = "Exact q-rook, q-hit and chromatic quasisymmetric computations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Tsv,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Self {
        match f {
            OutFormat::Json => Format::Json,
            OutFormat::Tsv => Format::Tsv,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum HitRoute {
    Basis,
    Stat,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum CsfRoute {
    Brute,
    Recursive,
    Gp,
    An,
}

#[derive(Subcommand)]
enum Command {
    /// q-rook numbers R_k of a shape.
    Rook {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        board: String,
        /// Single rook count; all counts up to the row count when omitted.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: OutFormat,
    },
    /// Rectangular q-hit numbers H_0..H_n of a shape.
    Hit {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        board: String,
        #[arg(long, value_enum, default_value = "both")]
        route: HitRoute,
        #[arg(long, value_enum, default_value = "json")]
        format: OutFormat,
    },
    /// Chromatic quasisymmetric polynomial of a shape in the monomial basis.
    Csf {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        board: String,
        #[arg(long)]
        colors: usize,
        #[arg(long, value_enum, default_value = "recursive")]
        route: CsfRoute,
        #[arg(long, value_enum, default_value = "json")]
        format: OutFormat,
    },
    /// Exhaustive identity sweeps.
    Verify {
        /// Suite id, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 5)]
        max_m: usize,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        max_cells: Option<usize>,
        #[arg(long, default_value_t = 6)]
        max_vertices: usize,
        /// Colour count for colouring suites (default m+n per shape).
        #[arg(long)]
        colors: Option<usize>,
        /// Restrict the sweep to one NxM board.
        #[arg(long)]
        board: Option<String>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: OutFormat,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        unsafe_bounds: bool,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

/// Usage and parameter problems exit with 2; violated identities with 1.
enum Failure {
    Usage(String),
    Violated(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NonExactDivision { .. } | Error::RouteMismatch { .. } => {
                Failure::Violated(e.to_string())
            }
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn tsv_line(values: &[QLaurent]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("\t")
}

fn write_json(out: &mut dyn Write, value: &impl Serialize) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)
}

#[derive(Serialize)]
struct RookJson<'a> {
    shape: &'a [usize],
    board: String,
    #[serde(rename = "R")]
    r: &'a [QLaurent],
}

#[derive(Serialize)]
struct HitJson<'a> {
    shape: &'a [usize],
    board: String,
    #[serde(rename = "H")]
    h: &'a [QLaurent],
    routes_agree: Option<bool>,
}

fn rook(
    s: &BoardShape,
    k: Option<usize>,
    format: OutFormat,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let values: Vec<QLaurent> = match k {
        Some(k) => vec![rook_number(s, k)],
        None => (0..=s.rows()).map(|k| rook_number(s, k)).collect(),
    };
    match format {
        OutFormat::Json => write_json(
            out,
            &RookJson {
                shape: s.parts(),
                board: s.board_label(),
                r: &values,
            },
        )?,
        OutFormat::Tsv => writeln!(out, "{}", tsv_line(&values))?,
    }
    Ok(0)
}

fn hit(
    s: &BoardShape,
    route: HitRoute,
    format: OutFormat,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let (values, agree) = match route {
        HitRoute::Basis => (hit_numbers_basis(s)?.entries, None),
        HitRoute::Stat => {
            if s.rows() > s.cols() {
                return Err(Failure::Usage(format!(
                    "hit numbers need rows <= cols, got {}",
                    s.board_label()
                )));
            }
            (hit_numbers_stat(s).entries, None)
        }
        HitRoute::Both => {
            let basis = hit_numbers_basis(s)?.entries;
            let agree = basis == hit_numbers_stat(s).entries;
            (basis, Some(agree))
        }
    };
    match format {
        OutFormat::Json => write_json(
            out,
            &HitJson {
                shape: s.parts(),
                board: s.board_label(),
                h: &values,
                routes_agree: agree,
            },
        )?,
        OutFormat::Tsv => writeln!(out, "{}", tsv_line(&values))?,
    }
    Ok(if agree == Some(false) { 1 } else { 0 })
}

fn csf(
    s: &BoardShape,
    colors: usize,
    route: CsfRoute,
    format: OutFormat,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let poly: SymPoly = match route {
        CsfRoute::Brute => csf_bruteforce(&graph_from_shape(s), colors),
        CsfRoute::Recursive => csf_recursive(s, colors),
        CsfRoute::Gp => gp_expansion(s, colors)?,
        CsfRoute::An => an_expansion(s, colors)?,
    };
    match format {
        OutFormat::Json => write_json(out, &poly)?,
        OutFormat::Tsv => {
            for (exps, c) in poly.terms() {
                let key: Vec<String> = exps.iter().map(ToString::to_string).collect();
                writeln!(out, "{}\t{c}", key.join(","))?;
            }
        }
    }
    Ok(0)
}

fn run(cli: Cli) -> Result<i32, Failure> {
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    match cli.command {
        Command::Rook {
            shape,
            board,
            k,
            format,
        } => rook(&parse_shape(&shape, &board)?, k, format, &mut lock),
        Command::Hit {
            shape,
            board,
            route,
            format,
        } => hit(&parse_shape(&shape, &board)?, route, format, &mut lock),
        Command::Csf {
            shape,
            board,
            colors,
            route,
            format,
        } => csf(
            &parse_shape(&shape, &board)?,
            colors,
            route,
            format,
            &mut lock,
        ),
        Command::Verify {
            suite,
            max_m,
            max_n,
            max_cells,
            max_vertices,
            colors,
            board,
            jobs,
            format,
            out,
            unsafe_bounds,
            inject_fault,
        } => {
            let bounds = Bounds {
                max_m,
                max_n,
                max_cells,
                max_vertices,
                colors,
                board: board.as_deref().map(parse_board).transpose()?,
            };
            let opts = RunOptions {
                jobs,
                unsafe_bounds,
                inject_fault,
            };
            let reports = run_suites(&suite, &bounds, &opts)?;
            for r in &reports {
                eprintln!(
                    "{}: {} cases, {} checks, {} failures in {:.2?}",
                    r.suite,
                    r.cases,
                    r.checks,
                    r.failures.len(),
                    r.wall_time
                );
            }
            match out {
                Some(path) => {
                    let mut file = BufWriter::new(File::create(&path)?);
                    emit(&reports, format.into(), &mut file)?;
                    file.flush()?;
                }
                None => emit(&reports, format.into(), &mut lock)?,
            }
            Ok(exit_code(&reports))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Violated(msg)) => {
            eprintln!("identity violated: {msg}");
            ExitCode::from(1)
        }
    }
}
