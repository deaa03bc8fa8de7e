//! `cmlab` command line: experiment drivers emitting CSV/JSON reports.
//!
//! Exit codes: `0` every asserted tolerance holds, `1` some check failed
//! (a JSON diagnostic per failed check goes to stderr), `2` usage error.
//!
//! Reports go to `--out` when given, else to `$CMLAB_OUT_DIR/<command>.<ext>`
//! when that variable is set, else to stdout.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;

use crate::angular3::{self, ReferenceTable, Segment};
use crate::geometry::{seed_stream, Chart};
use crate::liealg::{
    build_generator_basis, defining_rep, structure_constants, structure_constants_from_brackets, ClassKind,
    SymmetryClass,
};
use crate::matrixflow::{cross_check, sample_free_state, FlowOptions};
use crate::numerics;
use crate::report::{write_report, Cell, Format, Table};
use crate::separation::{
    assemble_and_residual, com_factor, radial_factor, residual_mode, segment_centre, ComRegime, GridSpec, Regime,
};
use crate::spectra2::{so2_project, so2_reference, su2_project, su2_reference, PlaneWaveParams};
use crate::{Error, Mat, Result};

/// Environment variable naming the default report directory.
pub const OUT_DIR_ENV: &str = "CMLAB_OUT_DIR";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RegimeArg {
    Free,
    Harmonic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SegmentArg {
    Low,
    High,
}

impl From<SegmentArg> for Segment {
    fn from(s: SegmentArg) -> Self {
        match s {
            SegmentArg::Low => Segment::Low,
            SegmentArg::High => Segment::High,
        }
    }
}

fn parse_class(s: &str) -> std::result::Result<ClassKind, String> {
    s.parse()
}

/// Parsed command line.
#[derive(Debug, Parser)]
#[command(name = "cmlab", version, about = "Matrix-model reductions of Calogero-Moser systems")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value = "csv")]
    pub format: FormatArg,
    /// Report path (overrides CMLAB_OUT_DIR).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generator basis, structure constants and defining-representation audits.
    Generators(GeneratorsArgs),
    /// Free matrix flow against the integrated reduced equations.
    Flow(FlowArgs),
    /// Metric, determinant and Lie-identity residuals on random chart points.
    MetricAudit(MetricAuditArgs),
    /// Two-particle plane-wave projections against Bessel closed forms.
    N2(N2Args),
    /// Three-particle angular tables.
    N3Tables(N3TablesArgs),
    /// Finite-difference residual of an assembled three-particle eigenfunction.
    Residual(ResidualArgs),
    /// Special-function and linear-algebra oracles.
    Selftest,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Generators(_) => "generators",
            Command::Flow(_) => "flow",
            Command::MetricAudit(_) => "metric-audit",
            Command::N2(_) => "n2",
            Command::N3Tables(_) => "n3-tables",
            Command::Residual(_) => "residual",
            Command::Selftest => "selftest",
        }
    }
}

#[derive(Debug, Args)]
pub struct GeneratorsArgs {
    #[arg(long, value_parser = parse_class, default_value = "orthogonal")]
    pub class: ClassKind,
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u16).range(2..=12))]
    pub n: u16,
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct FlowArgs {
    #[arg(long, value_parser = parse_class, default_value = "unitary")]
    pub class: ClassKind,
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u16).range(2..=12))]
    pub n: u16,
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    /// Number of consecutive seeds starting at `--seed`.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub seeds: u32,
    #[arg(long, default_value_t = 1.0)]
    pub t: f64,
    #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u32).range(1..))]
    pub steps: u32,
    #[arg(long, default_value_t = 0.0)]
    pub omega: f64,
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
    #[arg(long, default_value_t = 1e-9)]
    pub drift_tol: f64,
}

#[derive(Debug, Args)]
pub struct MetricAuditArgs {
    #[arg(long, value_parser = parse_class, default_value = "orthogonal")]
    pub class: ClassKind,
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u16).range(2..=6))]
    pub n: u16,
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u32).range(1..))]
    pub samples: u32,
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    /// Finite-difference step for `F` and `ν`.
    #[arg(long, default_value_t = 1e-4)]
    pub h: f64,
    #[arg(long, default_value_t = 1e-8)]
    pub det_tol: f64,
    #[arg(long, default_value_t = 1e-10)]
    pub factorization_tol: f64,
    #[arg(long, default_value_t = 1e-5)]
    pub f_tol: f64,
    #[arg(long, default_value_t = 1e-4)]
    pub nu_tol: f64,
}

#[derive(Debug, Args)]
pub struct N2Args {
    #[arg(long, value_parser = parse_class, default_value = "orthogonal")]
    pub class: ClassKind,
    /// `ν` (orthogonal) or `l` (unitary).
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    pub order: i64,
    /// Magnetic index `m` (unitary).
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub m: i64,
    #[arg(long, default_value_t = 1.3, allow_negative_numbers = true)]
    pub k1: f64,
    #[arg(long, default_value_t = -0.4, allow_negative_numbers = true)]
    pub k2: f64,
    /// Real part of the off-diagonal momentum.
    #[arg(long, default_value_t = 0.8, allow_negative_numbers = true)]
    pub k12: f64,
    /// Imaginary part of the off-diagonal momentum (unitary).
    #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
    pub ki: f64,
    #[arg(long, default_value_t = 10.0)]
    pub r_max: f64,
    #[arg(long, default_value_t = 40, value_parser = clap::value_parser!(u32).range(1..))]
    pub points: u32,
    /// Quadrature nodes (default 256 orthogonal, 48 unitary).
    #[arg(long)]
    pub quad: Option<usize>,
    /// Tolerance (default 1e-8 orthogonal, 1e-6 unitary).
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Debug, Args)]
pub struct N3TablesArgs {
    #[arg(long, value_parser = parse_class, default_value = "orthogonal")]
    pub class: ClassKind,
    /// Modes per parity block.
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u32).range(4..=2000))]
    pub dim: u32,
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..))]
    pub rows: u32,
    /// Use the full `I`-integrals instead of the printed approximation.
    #[arg(long)]
    pub exact: bool,
    /// Also write plot curves here (and the plotted modes next to it).
    #[arg(long)]
    pub figure_data: Option<PathBuf>,
    #[arg(long, default_value_t = 721, value_parser = clap::value_parser!(u32).range(3..))]
    pub figure_points: u32,
}

#[derive(Debug, Args)]
pub struct ResidualArgs {
    #[arg(long, value_parser = parse_class, default_value = "unitary")]
    pub class: ClassKind,
    #[arg(long, value_enum, default_value = "harmonic")]
    pub regime: RegimeArg,
    #[arg(long, value_enum, default_value = "low")]
    pub segment: SegmentArg,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub l: u32,
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u32).range(4..=1000))]
    pub dim: u32,
    /// Radial wave number (free regime).
    #[arg(long, default_value_t = 1.0)]
    pub k: f64,
    /// Centre-of-mass wave number (free regime).
    #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
    pub k_cm: f64,
    #[arg(long, default_value_t = 1.0)]
    pub omega: f64,
    #[arg(long, default_value_t = 0)]
    pub nu: usize,
    #[arg(long, default_value_t = 0)]
    pub n_cm: usize,
    #[arg(long, default_value_t = 1e-3)]
    pub h: f64,
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u32).range(3..=60))]
    pub points: u32,
    #[arg(long, default_value_t = 1e-3)]
    pub tol: f64,
}

/// Parse `argv` (including the program name).
pub fn parse_args<I, T>(argv: I) -> std::result::Result<RunConfig, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    RunConfig::try_parse_from(argv)
}

/// One asserted tolerance.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub check: String,
    pub value: f64,
    pub tol: f64,
    pub pass: bool,
}

impl Check {
    /// Passes when `value ≤ tol` (NaN fails).
    pub fn at_most(check: impl Into<String>, value: f64, tol: f64) -> Self {
        Self { check: check.into(), value, tol, pass: value <= tol }
    }
}

/// Report table plus the checks that decide the exit code.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub table: Table,
    pub checks: Vec<Check>,
    /// Extra `(path, table)` files, e.g. figure data.
    pub extra: Vec<(PathBuf, Table)>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }
}

/// Run the experiment without touching the file system.
pub fn execute(cfg: &RunConfig) -> Result<Outcome> {
    match &cfg.command {
        Command::Generators(a) => generators(a),
        Command::Flow(a) => flow(a),
        Command::MetricAudit(a) => metric_audit(a),
        Command::N2(a) => n2(a),
        Command::N3Tables(a) => n3_tables(a, cfg.format.into()),
        Command::Residual(a) => residual(a),
        Command::Selftest => selftest(),
    }
}

/// Where the report goes: `--out`, else `$CMLAB_OUT_DIR/<command>.<ext>`,
/// else stdout (`None`).
pub fn output_path(cfg: &RunConfig, env_dir: Option<&Path>) -> Option<PathBuf> {
    if let Some(p) = &cfg.out {
        return Some(p.clone());
    }
    let ext = Format::from(cfg.format).extension();
    env_dir.map(|d| d.join(format!("{}.{ext}", cfg.command.name())))
}

/// Run, write reports and return the exit code.
pub fn run(cfg: &RunConfig) -> i32 {
    let env_dir = std::env::var_os(OUT_DIR_ENV).map(PathBuf::from);
    let outcome = match execute(cfg) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("{}", serde_json::json!({ "command": cfg.command.name(), "error": e.to_string() }));
            return 1;
        }
    };
    let format: Format = cfg.format.into();
    let path = output_path(cfg, env_dir.as_deref());
    let mut written = write_report(&outcome.table, format, path.as_deref());
    for (p, t) in &outcome.extra {
        if written.is_ok() {
            written = write_report(t, format, Some(p));
        }
    }
    if let Err(e) = written {
        eprintln!("{}", serde_json::json!({ "command": cfg.command.name(), "error": e.to_string() }));
        return 1;
    }
    for c in outcome.checks.iter().filter(|c| !c.pass) {
        let diag = serde_json::json!({
            "command": cfg.command.name(),
            "check": c.check,
            "value": c.value,
            "tol": c.tol,
            "pass": false,
        });
        eprintln!("{diag}");
    }
    outcome.exit_code()
}

fn check_table(checks: &[Check]) -> Result<Table> {
    let mut t = Table::new(["check", "value", "tol", "pass"]);
    for c in checks {
        t.push(vec![c.check.clone().into(), c.value.into(), c.tol.into(), c.pass.into()])?;
    }
    Ok(t)
}

fn generators(a: &GeneratorsArgs) -> Result<Outcome> {
    let class = SymmetryClass::new(a.class, a.n as usize)?;
    let basis = build_generator_basis(class);
    let f = structure_constants(&basis);
    let fb = structure_constants_from_brackets(class);
    let rep = defining_rep(class, 1.0)?;
    let checks = vec![
        Check::at_most("jacobi_identity", f.jacobi_residual(), a.tol),
        Check::at_most("trace_vs_bracket", f.max_abs_difference(&fb), a.tol),
        Check::at_most("defining_rep_commutators", rep.commutator_residual(&f), a.tol),
        Check::at_most("squares_diagonal", rep.square_offdiagonal(), a.tol),
    ];
    Ok(Outcome { table: check_table(&checks)?, checks, extra: Vec::new() })
}

fn flow(a: &FlowArgs) -> Result<Outcome> {
    let class = SymmetryClass::new(a.class, a.n as usize)?;
    let opts = FlowOptions { omega: a.omega, ..FlowOptions::default() };
    let mut t = Table::new([
        "class",
        "N",
        "seed",
        "t",
        "steps",
        "max_discrepancy",
        "drift_hamiltonian",
        "drift_momentum",
        "drift_tr_l2",
        "pass",
    ]);
    let mut checks = Vec::new();
    for seed in a.seed..a.seed + a.seeds as u64 {
        let s0 = sample_free_state(class, seed, 0.1)?;
        let rep = cross_check(&s0, a.t, a.steps as usize, 100, opts, a.tol)?;
        let c1 = Check::at_most(format!("seed {seed} discrepancy"), rep.max_discrepancy, a.tol);
        let c2 = Check::at_most(format!("seed {seed} hamiltonian drift"), rep.drift.hamiltonian, a.drift_tol);
        let c3 = Check::at_most(format!("seed {seed} tr_l2 drift"), rep.drift.tr_l2, a.drift_tol);
        let pass = c1.pass && c2.pass && c3.pass;
        t.push(vec![
            a.class.to_string().into(),
            (a.n as usize).into(),
            seed.into(),
            a.t.into(),
            (a.steps as usize).into(),
            rep.max_discrepancy.into(),
            rep.drift.hamiltonian.into(),
            rep.drift.momentum.into(),
            rep.drift.tr_l2.into(),
            pass.into(),
        ])?;
        checks.extend([c1, c2, c3]);
    }
    Ok(Outcome { table: t, checks, extra: Vec::new() })
}

fn metric_audit(a: &MetricAuditArgs) -> Result<Outcome> {
    let class = SymmetryClass::new(a.class, a.n as usize)?;
    let chart = Chart::new(class);
    let mut t = Table::new([
        "class",
        "N",
        "seed",
        "residual_det",
        "residual_factorization",
        "max_F",
        "max_nu_plus_f",
        "u_condition",
    ]);
    let (mut det, mut fac, mut ff, mut nu) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for seed in seed_stream(a.seed, a.samples as usize) {
        let row = chart.audit(seed, a.h)?;
        det = det.max(row.residual_det);
        fac = fac.max(row.residual_factorization);
        ff = ff.max(row.max_f);
        nu = nu.max(row.max_nu_plus_f);
        t.push(vec![
            row.class.into(),
            row.n.into(),
            row.seed.into(),
            row.residual_det.into(),
            row.residual_factorization.into(),
            row.max_f.into(),
            row.max_nu_plus_f.into(),
            row.u_condition.into(),
        ])?;
    }
    let checks = vec![
        Check::at_most("det_identity", det, a.det_tol),
        Check::at_most("metric_factorization", fac, a.factorization_tol),
        Check::at_most("max_F", ff, a.f_tol),
        Check::at_most("max_nu_plus_f", nu, a.nu_tol),
    ];
    Ok(Outcome { table: t, checks, extra: Vec::new() })
}

fn n2(a: &N2Args) -> Result<Outcome> {
    if !(a.r_max > 0.0) {
        return Err(Error::InvalidArgument(format!("--r-max {} must be positive", a.r_max)));
    }
    let grid: Vec<f64> = (1..=a.points).map(|i| a.r_max * i as f64 / a.points as f64).collect();
    match a.class {
        ClassKind::Orthogonal => {
            let k = PlaneWaveParams::orthogonal(a.k1, a.k2, a.k12);
            let vals = so2_project(&k, a.order as f64, &grid, a.quad.unwrap_or(256))?;
            let mut t = Table::new(["r", "re_psi", "im_psi", "re_ref", "im_ref", "abs_err"]);
            let mut worst = 0.0f64;
            for (&r, v) in grid.iter().zip(&vals) {
                let reference = so2_reference(&k, a.order, r)?;
                let err = (v - reference).norm();
                worst = worst.max(err);
                t.push(vec![r.into(), v.re.into(), v.im.into(), reference.re.into(), reference.im.into(), err.into()])?;
            }
            let checks = vec![Check::at_most("so2_closed_form", worst, a.tol.unwrap_or(1e-8))];
            Ok(Outcome { table: t, checks, extra: Vec::new() })
        }
        ClassKind::Unitary => {
            if a.order < 0 {
                return Err(Error::InvalidArgument(format!("--order {} must be ≥ 0 for the unitary class", a.order)));
            }
            let l = a.order as usize;
            let k = PlaneWaveParams::unitary(a.k1, a.k2, a.k12, a.ki);
            let vals = su2_project(&k, l, a.m, &grid, a.quad.unwrap_or(48))?;
            let refs = grid.iter().map(|&r| su2_reference(&k, l, a.m, r)).collect::<Result<Vec<_>>>()?;
            let spread = ratio_spread(&vals, &refs);
            let mut t = Table::new(["r", "re_psi", "im_psi", "reference", "re_ratio", "im_ratio"]);
            for ((&r, v), &f) in grid.iter().zip(&vals).zip(&refs) {
                let ratio = if f != 0.0 { v / f } else { Complex64::new(f64::NAN, f64::NAN) };
                t.push(vec![r.into(), v.re.into(), v.im.into(), f.into(), ratio.re.into(), ratio.im.into()])?;
            }
            let checks = vec![Check::at_most("su2_ratio_spread", spread, a.tol.unwrap_or(1e-6))];
            Ok(Outcome { table: t, checks, extra: Vec::new() })
        }
    }
}

/// Relative spread `max |q(r) − q̄| / |q̄|` of `ψ(r)/f(r)`, over points where
/// `|f|` exceeds `10⁻³ max |f|` (the ratio is 0/0 at Bessel zeros).
pub fn ratio_spread(vals: &[Complex64], refs: &[f64]) -> f64 {
    let fmax = refs.iter().fold(0.0f64, |m, f| m.max(f.abs()));
    let ratios: Vec<Complex64> =
        vals.iter().zip(refs).filter(|(_, f)| f.abs() > 1e-3 * fmax).map(|(v, f)| v / *f).collect();
    if ratios.is_empty() {
        return f64::NAN;
    }
    let mean = ratios.iter().sum::<Complex64>() / ratios.len() as f64;
    ratios.iter().map(|q| (q - mean).norm()).fold(0.0, f64::max) / mean.norm()
}

fn n3_tables(a: &N3TablesArgs, format: Format) -> Result<Outcome> {
    let dim = a.dim as usize;
    let rows = a.rows as usize;
    let table = angular3::reference_tables(a.class, dim, rows, a.exact)?;
    let mut checks = Vec::new();
    let t = match &table {
        ReferenceTable::Orthogonal(rs) => {
            let mut t = Table::new(["p", "delta_b_odd", "delta_psi_odd", "delta_b_even", "delta_psi_even"]);
            let mut worst_psi = 0.0f64;
            for r in rs {
                worst_psi = worst_psi.max(r.delta_psi_odd).max(r.delta_psi_even);
                t.push(vec![
                    r.p.into(),
                    Cell::Fixed(r.delta_b_odd, 2),
                    Cell::Fixed(r.delta_psi_odd, 2),
                    Cell::Fixed(r.delta_b_even, 2),
                    Cell::Fixed(r.delta_psi_even, 2),
                ])?;
            }
            checks.push(Check::at_most("dominant_component_delta_psi_sq", worst_psi * worst_psi, 0.5));
            t
        }
        ReferenceTable::Unitary(rs) => {
            let mut t = Table::new(["l", "delta_b_low", "delta_b_high", "delta_psi"]);
            let (mut worst_psi, mut shared) = (0.0f64, 0.0f64);
            for r in rs {
                worst_psi = worst_psi.max(r.delta_psi);
                shared = shared.max((r.delta_psi - r.delta_psi_high).abs());
                t.push(vec![
                    r.l.into(),
                    Cell::Fixed(r.delta_b_low, 2),
                    Cell::Fixed(r.delta_b_high, 2),
                    Cell::Fixed(r.delta_psi, 2),
                ])?;
            }
            checks.push(Check::at_most("dominant_component_delta_psi_sq", worst_psi * worst_psi, 0.5));
            if !a.exact {
                checks.push(Check::at_most("low_high_shared_eigenvectors", shared, 1e-10));
            }
            t
        }
    };
    let mut extra = Vec::new();
    if let Some(path) = &a.figure_data {
        let fig = angular3::figure_data(a.class, dim, 4, a.figure_points as usize)?;
        let mut curves = Table::new(fig.columns.iter().cloned());
        for row in &fig.rows {
            curves.push(row.iter().map(|&v| Cell::Float(v)).collect())?;
        }
        let mut modes = Table::new(["column", "l", "b", "delta_psi"]);
        for (c, l, b, dpsi) in &fig.modes {
            modes.push(vec![c.clone().into(), (*l).into(), (*b).into(), (*dpsi).into()])?;
        }
        extra.push((path.clone(), curves));
        extra.push((modes_path(path, format), modes));
    }
    Ok(Outcome { table: t, checks, extra })
}

/// Companion file listing the plotted modes: `<stem>_modes.<ext>`.
pub fn modes_path(figure: &Path, format: Format) -> PathBuf {
    let stem = figure.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "figure".into());
    figure.with_file_name(format!("{stem}_modes.{}", format.extension()))
}

fn residual(a: &ResidualArgs) -> Result<Outcome> {
    let segment: Segment = a.segment.into();
    let mode = residual_mode(a.class, segment, a.l as usize, a.dim as usize)?;
    let (regime, com) = match a.regime {
        RegimeArg::Free => (Regime::Free { k: a.k }, ComRegime::Free { k: a.k_cm }),
        RegimeArg::Harmonic => {
            (Regime::Harmonic { nu: a.nu, omega: a.omega }, ComRegime::Harmonic { n: a.n_cm, omega: a.omega })
        }
    };
    let radial = radial_factor(3, mode.b, regime)?;
    let com = com_factor(3, com)?;
    let grid = GridSpec { points: a.points as usize, ..GridSpec::standard(segment_centre(a.class, segment)) };
    let rep = assemble_and_residual(a.class, 2, &mode, &radial, &com, &grid, a.h)?;
    let mut t = Table::new(["class", "I", "l", "regime", "grid", "h", "residual", "energy"]);
    t.push(vec![
        rep.class.to_string().into(),
        rep.i_rep.into(),
        rep.l.into(),
        rep.regime.clone().into(),
        rep.grid.into(),
        rep.h.into(),
        rep.residual.into(),
        rep.energy.into(),
    ])?;
    let checks = vec![Check::at_most("relative_residual", rep.residual, a.tol)];
    Ok(Outcome { table: t, checks, extra: Vec::new() })
}

/// Oracle checks of the numerical kernels against closed forms.
pub fn selftest_checks() -> Result<Vec<Check>> {
    let mut c = Vec::new();
    let rule = numerics::gauss_legendre(20)?;
    c.push(Check::at_most("gauss_legendre_x38", (rule.integrate(-1.0, 1.0, |x| x.powi(38)) - 2.0 / 39.0).abs(), 1e-14));
    let x: f64 = 30.0;
    let j_half = (2.0 / (std::f64::consts::PI * x)).sqrt() * x.sin();
    c.push(Check::at_most("bessel_half_order", (numerics::bessel_j(0.5, x)? - j_half).abs(), 1e-13));
    let j1 = (3.7f64.sin() / 3.7 - 3.7f64.cos()) / 3.7;
    c.push(Check::at_most("spherical_bessel_j1", (numerics::spherical_bessel_j(1, 3.7)? - j1).abs(), 1e-14));
    // ψ(x+1) = ψ(x) + 1/x
    let d = numerics::digamma(2.3)? - numerics::digamma(1.3)? - 1.0 / 1.3;
    c.push(Check::at_most("digamma_recurrence", d.abs(), 1e-13));
    let q1 = 0.3 * 0.3f64.atanh() - 1.0;
    c.push(Check::at_most(
        "legendre_q1",
        (numerics::legendre(1, 0, 0.3, numerics::LegendreKind::Q)? - q1).abs(),
        1e-15,
    ));
    let h5 = |x: f64| 32.0 * x.powi(5) - 160.0 * x.powi(3) + 120.0 * x;
    c.push(Check::at_most("hermite_5", (numerics::hermite(5, 0.7)? - h5(0.7)).abs(), 1e-12));
    let (a, z) = (0.6, 1.9);
    let l2 = 0.5 * (z * z - 2.0 * (a + 2.0) * z + (a + 1.0) * (a + 2.0));
    c.push(Check::at_most("laguerre_2", (numerics::laguerre(2, a, z)? - l2).abs(), 1e-13));
    let g = numerics::gauss_legendre(32)?;
    let mut norm = 0.0;
    for (&x, &w) in g.nodes.iter().zip(&g.weights) {
        for q in 0..64 {
            let phi = 2.0 * std::f64::consts::PI * q as f64 / 64.0;
            norm += w * (2.0 * std::f64::consts::PI / 64.0) * numerics::spherical_harmonic(3, 2, x.acos(), phi)?.norm_sqr();
        }
    }
    c.push(Check::at_most("spherical_harmonic_norm", (norm - 1.0f64).abs(), 1e-13));
    let m = Mat::from_fn(12, 12, |i, j| ((i * 7 + j * 7 + i * j) % 11) as f64 - 5.0);
    let eig = numerics::sym_eig(&m, numerics::DEFAULT_EIG_TOL)?;
    let rec = &eig.vectors * Mat::from_diagonal(&nalgebra::DVector::from_vec(eig.values.clone())) * eig.vectors.transpose();
    c.push(Check::at_most("eigen_reconstruction", (rec - &m).amax(), 1e-11));
    Ok(c)
}

fn selftest() -> Result<Outcome> {
    let checks = selftest_checks()?;
    Ok(Outcome { table: check_table(&checks)?, checks, extra: Vec::new() })
}
