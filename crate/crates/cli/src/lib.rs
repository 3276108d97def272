//! Command-line front end for `fsl-core`.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use fsl_core::degenmap::{self, build_matrix, determinant, is_triangular_in_basis};
use fsl_core::verify::{
    self, CheckOptions, GridConfig, GridEntry, MatrixFault, Status, VerificationReport,
};
use fsl_core::wedge::{comm_table, ChevalleyAction};
use fsl_core::{DominantWeight, Error, Family, LieType};

mod document;

pub use document::{Kind, PolytopeDocument};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_GATE: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "fsl",
    version,
    about = "FFLV and string lattice points of types A and C"
)]
pub struct Cli {
    /// Worker threads for grid runs.
    #[arg(long, global = true, env = "FSL_THREADS")]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// FFLV lattice points.
    Fflv {
        #[command(subcommand)]
        action: PointsAction,
    },
    /// String lattice points of the lifted weight.
    Stringpoly {
        #[command(subcommand)]
        action: PointsAction,
    },
    /// Verification sweeps.
    Verify {
        #[command(subcommand)]
        action: VerifyAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum PointsAction {
    /// Write the lattice points as a JSON document.
    Points(PointsArgs),
}

#[derive(Debug, Args)]
pub struct CaseArgs {
    /// Lie type, A or C.
    #[arg(long = "type", value_parser = parse_family)]
    pub family: Family,
    #[arg(long)]
    pub rank: usize,
}

impl CaseArgs {
    fn lie_type(&self) -> Result<LieType, Error> {
        LieType::new(self.family, self.rank)
    }
}

#[derive(Debug, Args)]
pub struct PointsArgs {
    #[command(flatten)]
    pub case: CaseArgs,
    /// Coefficients of the weight in the fundamental weights of the source algebra.
    #[arg(long, value_delimiter = ',', num_args = 1)]
    pub weight: Vec<u32>,
    /// Output file; stdout if absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum VerifyAction {
    /// Compare T(FFLV points) with string points for every weight up to a level.
    Main(MainArgs),
    /// Determinant and triangularity of the degeneration matrix.
    Unimodular(SweepArgs),
    /// Folding the type A translation onto the type C translation.
    Fold(SweepArgs),
    /// Commutation of lowering operators on exterior powers.
    Comm(SweepArgs),
}

#[derive(Debug, Args)]
pub struct MainArgs {
    #[command(flatten)]
    pub case: CaseArgs,
    #[arg(long)]
    pub max_level: u32,
    /// Write the JSON report array to this file.
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Skip cases whose dimension exceeds this bound.
    #[arg(long, default_value_t = verify::DEFAULT_BUDGET)]
    pub budget: u64,
    #[arg(long, hide = true)]
    pub corrupt_fixture: bool,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub max_rank: usize,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A failure that ends the process with the given exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Gate { .. } => EXIT_GATE,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

fn write_output(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure {
            code: EXIT_USAGE,
            message: format!("{}: {e}", p.display()),
        }),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

/// Runs a parsed command, writing normal output to `out`. Returns the exit code.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<u8, Failure> {
    match &cli.command {
        Command::Fflv {
            action: PointsAction::Points(args),
        } => points(args, Kind::Fflv, out),
        Command::Stringpoly {
            action: PointsAction::Points(args),
        } => points(args, Kind::String, out),
        Command::Verify { action } => match action {
            VerifyAction::Main(args) => verify_main(args, out),
            VerifyAction::Unimodular(args) => unimodular(args.max_rank, out),
            VerifyAction::Fold(args) => fold(args.max_rank, out),
            VerifyAction::Comm(args) => comm(args.max_rank, out),
        },
    }
}

fn points(args: &PointsArgs, kind: Kind, out: &mut dyn Write) -> Result<u8, Failure> {
    let ty = args.case.lie_type()?;
    let weight = DominantWeight::new(args.weight.clone());
    let doc = match kind {
        Kind::Fflv => PolytopeDocument::fflv(&ty, &weight)?,
        Kind::String => PolytopeDocument::string(&ty, &weight)?,
    };
    write_output(args.out.as_deref(), &doc.to_json(), out)?;
    Ok(EXIT_OK)
}

fn status_word(r: &VerificationReport) -> &'static str {
    match r.status {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
        Status::Skipped => "skipped",
    }
}

fn verify_main(args: &MainArgs, out: &mut dyn Write) -> Result<u8, Failure> {
    let ty = args.case.lie_type()?;
    let fault = args.corrupt_fixture.then_some(MatrixFault {
        row: 0,
        col: 0,
        delta: 1,
    });
    let config = GridConfig {
        entries: vec![GridEntry {
            ty,
            max_level: args.max_level,
        }],
        options: CheckOptions {
            budget: args.budget,
            fault,
        },
    };
    let reports = verify::run_grid(&config)?;

    writeln!(
        out,
        "{:<22} {:>8} {:>8} {:>8}  {:<6} status",
        "case", "fflv", "string", "dim", "twist"
    )?;
    for r in &reports {
        let twist = match &r.weight_twist {
            Some(t) if t.is_fit() => "fit",
            Some(_) => "none",
            None => "-",
        };
        writeln!(
            out,
            "{:<22} {:>8} {:>8} {:>8}  {:<6} {}",
            r.case.to_string(),
            r.fflv_count,
            r.string_count,
            r.weyl_dim,
            twist,
            status_word(r)
        )?;
        if !r.missing.is_empty() {
            writeln!(
                out,
                "  missing ({} total): {:?}",
                r.missing.total, r.missing.points
            )?;
        }
        if !r.extra.is_empty() {
            writeln!(
                out,
                "  extra ({} total): {:?}",
                r.extra.total, r.extra.points
            )?;
        }
        if let Some(note) = &r.note {
            writeln!(out, "  note: {note}")?;
        }
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    writeln!(out, "{passed}/{} cases passed", reports.len())?;

    if let Some(path) = &args.json {
        let mut text = serde_json::to_string_pretty(&reports).expect("reports serialize");
        text.push('\n');
        write_output(Some(path), &text, out)?;
    }
    Ok(if verify::all_passed(&reports) {
        EXIT_OK
    } else {
        EXIT_VERIFY
    })
}

fn check_rank(max_rank: usize) -> Result<(), Failure> {
    if max_rank == 0 {
        return Err(Failure {
            code: EXIT_USAGE,
            message: "--max-rank must be at least 1".into(),
        });
    }
    Ok(())
}

fn unimodular(max_rank: usize, out: &mut dyn Write) -> Result<u8, Failure> {
    check_rank(max_rank)?;
    let mut ok = true;
    for family in [Family::A, Family::C] {
        for n in 1..=max_rank {
            let ty = LieType::new(family, n)?;
            let m = build_matrix(&ty)?;
            let det = determinant(&ty)?;
            let entries_ok = m.iter().flatten().all(|v| [0, -1, -2].contains(v));
            let triangular = is_triangular_in_basis(&ty, &m);
            let good = det.magnitude() == &1u32.into() && entries_ok && triangular;
            ok &= good;
            writeln!(
                out,
                "{ty:<4} size {:>3}  det {det:>3}  entries {}  triangular {}  {}",
                m.len(),
                if entries_ok { "ok" } else { "BAD" },
                if triangular { "yes" } else { "no" },
                if good { "ok" } else { "FAIL" }
            )?;
        }
    }
    Ok(if ok { EXIT_OK } else { EXIT_VERIFY })
}

fn fold(max_rank: usize, out: &mut dyn Write) -> Result<u8, Failure> {
    check_rank(max_rank)?;
    let mut ok = true;
    for n in 1..=max_rank {
        for i in 1..=n {
            let ta: Vec<u32> = degenmap::fundamental_translation(&LieType::a(2 * n - 1), i)?
                .into_iter()
                .map(|v| v as u32)
                .collect();
            let tc: Vec<u32> = degenmap::fundamental_translation(&LieType::c(n), i)?
                .into_iter()
                .map(|v| v as u32)
                .collect();
            let folded = degenmap::fold_vector(n, &ta)?;
            let equal = folded.0 == tc;
            ok &= equal;
            writeln!(
                out,
                "C{n} ω{i}: fold(t_A{}) = {folded}  t_C = {}  {}",
                2 * n - 1,
                fsl_core::ExponentVector(tc.clone()),
                if equal { "equal" } else { "DIFFERENT" }
            )?;
        }
    }
    Ok(if ok { EXIT_OK } else { EXIT_VERIFY })
}

fn comm(max_rank: usize, out: &mut dyn Write) -> Result<u8, Failure> {
    check_rank(max_rank)?;
    let mut ok = true;
    for m in 1..=max_rank {
        let rows = comm_table(&ChevalleyAction::new(Family::A, m))?;
        let bad: Vec<_> = rows.iter().filter(|r| !r.consistent()).collect();
        writeln!(
            out,
            "A{m}: {} triples (i, l, j), {} inconsistent",
            rows.len(),
            bad.len()
        )?;
        // Equivalence pattern in l, j (identical for every i when consistent).
        for l in 1..=m {
            let line: String = (1..=m)
                .map(|j| {
                    let all = rows
                        .iter()
                        .filter(|r| r.l == l && r.j == j)
                        .all(|r| r.equivalent);
                    if all {
                        '~'
                    } else {
                        '.'
                    }
                })
                .collect();
            writeln!(out, "  {line}")?;
        }
        for r in &bad {
            writeln!(
                out,
                "  i={} l={} j={}: commute {} equivalent {}",
                r.degree, r.l, r.j, r.commute, r.equivalent
            )?;
        }
        ok &= bad.is_empty();
    }
    Ok(if ok { EXIT_OK } else { EXIT_VERIFY })
}
