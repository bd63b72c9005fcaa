//! Command-line front end. `run_cli` is the whole program; `main` only wires
//! it to the process streams.

use clap::{Parser, Subcommand};
use square_nodal::critical::{critical_zeroes, CriticalZero, Locus};
use square_nodal::render::{self, RenderSpec};
use square_nodal::scalar::canonical_theta;
use square_nodal::spectrum::enumerate_spectrum;
use square_nodal::topology::{summarize_with_grid, sweep, ThetaSamples};
use square_nodal::{verify, Catalog, Error, Family, ThetaCatalog};
use std::f64::consts::PI;
use std::io::Write;
use std::path::Path;

/// Default grid resolution for `nodal` and `sweep` when `--grid` is absent.
pub const GRID_ENV: &str = "SQUARE_NODAL_GRID";

#[derive(Parser, Debug)]
#[command(name = "square-nodal", version, about = "Nodal sets of Dirichlet eigenfunctions on the square [0,π]²")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Eigenvalues m² + n² up to a bound, grouped by value.
    Spectrum {
        #[arg(long)]
        max: f64,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
    },
    /// Chebyshev extrema and the special θ values of the (1, R) family.
    SpecialTheta {
        #[arg(long = "R", id = "R")]
        r: usize,
        #[arg(long)]
        json: bool,
    },
    /// Critical zeroes of Φ^θ_{m,n}: vertices, edges, interior.
    Critical {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_theta)]
        theta: f64,
        #[arg(long)]
        json: bool,
    },
    /// Nodal domain count and optional picture for one θ.
    Nodal {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_theta)]
        theta: f64,
        #[arg(long)]
        grid: Option<usize>,
        #[arg(long)]
        svg: Option<String>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        math_axes: bool,
    },
    /// Domain counts across a θ range.
    Sweep {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// `a,b` with each end in the θ grammar; defaults to `0,1pi`.
        #[arg(long, value_parser = parse_range)]
        range: Option<(f64, f64)>,
        #[arg(long, default_value_t = 1)]
        per_interval: usize,
        #[arg(long)]
        grid: Option<usize>,
        #[arg(long)]
        csv: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Acceptance checks, grouped by suite.
    Verify {
        #[arg(long, default_value = "all", value_parser = clap::builder::PossibleValuesParser::new(verify::SUITES))]
        suite: String,
    },
}

/// `<decimal>` is radians, `<decimal>pi` is a multiple of π; a bare `pi`
/// means π.
pub fn parse_theta(s: &str) -> Result<f64, String> {
    let t = s.trim();
    let v = match t.strip_suffix("pi").or_else(|| t.strip_suffix('π')) {
        Some("") => PI,
        Some(k) => k.trim().parse::<f64>().map_err(|e| format!("bad θ '{s}': {e}"))? * PI,
        None => t.parse::<f64>().map_err(|e| format!("bad θ '{s}': {e}"))?,
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("θ '{s}' is not finite"))
    }
}

fn parse_range(s: &str) -> Result<(f64, f64), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("range '{s}' must be a,b"))?;
    let (a, b) = (parse_theta(a)?, parse_theta(b)?);
    if a < b {
        Ok((a, b))
    } else {
        Err(format!("range '{s}' is empty"))
    }
}

/// Writes `contents` next to `path` and renames it into place.
pub fn write_atomic(path: &Path, contents: &[u8]) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

enum Failure {
    Usage(String),
    Runtime(String),
    Check,
    // stdout went away (e.g. piped into `head`)
    Closed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(_) => Failure::Usage(e.to_string()),
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Failure::Closed;
        }
        Failure::Runtime(e.to_string())
    }
}

fn env_grid() -> Result<Option<usize>, Failure> {
    match std::env::var(GRID_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Failure::Usage(format!("{GRID_ENV}='{v}' is not a grid size"))),
        Err(_) => Ok(None),
    }
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize")
}

fn join(v: &[f64]) -> String {
    v.iter().map(|x| format!("{x:.6}")).collect::<Vec<_>>().join(" ")
}

fn over_pi(v: &[f64]) -> Vec<f64> {
    v.iter().map(|&x| x / PI).collect()
}

fn locus_label(z: &CriticalZero<f64>) -> String {
    match z.locus {
        Locus::Vertex => "vertex".into(),
        Locus::Edge(e) => format!("edge {e:?}").to_lowercase(),
        Locus::Interior => "interior".into(),
    }
}

fn exec(cli: Cli, out: &mut dyn Write) -> Result<(), Failure> {
    match cli.cmd {
        Cmd::Spectrum { max, json, csv } => {
            let entries = enumerate_spectrum(max)?;
            if json {
                writeln!(out, "{}", pretty(&render::spectrum_json(&entries)))?;
            } else if csv {
                write!(out, "{}", render::spectrum_csv(&entries)?)?;
            } else {
                for e in &entries {
                    let modes: Vec<String> =
                        e.modes.iter().map(|md| format!("({},{})", md.m, md.n)).collect();
                    writeln!(out, "{:>4}  λ = {:<5} {}", e.k, e.eigenvalue, modes.join(" "))?;
                }
            }
        }
        Cmd::SpecialTheta { r, json } => {
            let cat = Catalog::new(r)?;
            let sp = ThetaCatalog::new(&cat)?;
            if json {
                writeln!(out, "{}", pretty(&render::catalog_json(&cat, &sp)))?;
            } else {
                writeln!(out, "R = {r}")?;
                writeln!(out, "q/π        {}", join(&over_pi(&cat.q)))?;
                writeln!(out, "M          {}", join(&cat.extrema))?;
                writeln!(out, "T_o/π      {}", join(&over_pi(&sp.t_o)))?;
                writeln!(out, "T_x/π      {}", join(&over_pi(&sp.t_x)))?;
                writeln!(out, "T_y/π      {}", join(&over_pi(&sp.t_y)))?;
                writeln!(out, "θ_-/π      {:.6}", cat.theta_minus / PI)?;
            }
        }
        Cmd::Critical { m, n, theta, json } => {
            let fam = Family::new(m, n, theta)?;
            let zeros = critical_zeroes(&fam)?;
            let th = canonical_theta(theta);
            if json {
                writeln!(out, "{}", pretty(&render::critical_json(m, n, th, &zeros)))?;
            } else {
                writeln!(out, "({m},{n}) θ = {}: {} critical zeroes", render::theta_label(th), zeros.len())?;
                for z in &zeros {
                    writeln!(
                        out,
                        "  x/π = {:.6}  y/π = {:.6}  {:<13} order {}{}",
                        z.x / PI,
                        z.y / PI,
                        locus_label(z),
                        z.order,
                        if z.degenerate { "  degenerate" } else { "" }
                    )?;
                }
                writeln!(out, "boundary hits: {}", square_nodal::critical::boundary_hits(&zeros))?;
            }
        }
        Cmd::Nodal { m, n, theta, grid, svg, json, math_axes } => {
            let res = grid.or(env_grid()?);
            let (s, g) = summarize_with_grid(m, n, theta, res)?;
            if let Some(path) = svg {
                let spec = RenderSpec { math_axes, ..RenderSpec::default() };
                write_atomic(Path::new(&path), render::render_nodal_svg(&s, &g, &spec)?.as_bytes())?;
            }
            if json {
                writeln!(out, "{}", pretty(&render::summary_json(&s)))?;
            } else {
                writeln!(out, "({m},{n}) θ = {}", render::theta_label(s.theta))?;
                writeln!(out, "domains: {} (grid {})", s.domain_count, s.resolution)?;
                writeln!(
                    out,
                    "critical zeroes: {} interior, {} on edges, boundary hits {}",
                    s.interior_count(),
                    s.edge_count(),
                    s.boundary_hits
                )?;
                writeln!(
                    out,
                    "Courant index {}: {}",
                    s.courant_index,
                    if s.courant_ok() { "ok" } else { "VIOLATED" }
                )?;
                if let Some(c) = s.closed_curve_count {
                    writeln!(out, "closed curves: {c}")?;
                }
            }
        }
        Cmd::Sweep { m, n, range, per_interval, grid, csv, json } => {
            let res = grid.or(env_grid()?);
            let (lo, hi) = range.unwrap_or((0.0, PI));
            let samples = if m == 1 || n == 1 {
                ThetaSamples::Auto { lo, hi, per_interval }
            } else {
                let k = 48 * per_interval.max(1);
                ThetaSamples::Explicit((0..=k).map(|i| lo + (hi - lo) * i as f64 / k as f64).collect())
            };
            let rep = sweep(m, n, &samples, res)?;
            if let Some(path) = csv {
                write_atomic(Path::new(&path), render::sweep_csv(&rep)?.as_bytes())?;
            }
            if json {
                writeln!(out, "{}", pretty(&render::sweep_json(&rep)))?;
            } else {
                for smp in &rep.samples {
                    writeln!(
                        out,
                        "θ = {}  domains {:>3}  interior {:>3}  edge {:>3}{}",
                        render::theta_label(smp.theta),
                        smp.domain_count,
                        smp.n_interior_cz,
                        smp.n_edge_cz,
                        if smp.anomaly { "  ANOMALY" } else { "" }
                    )?;
                }
                writeln!(out, "anomalies: {}", rep.anomalies())?;
            }
        }
        Cmd::Verify { suite } => {
            let mut failed = 0;
            let runners = verify::suite(&suite)?;
            for run in &runners {
                let rep = run();
                writeln!(out, "{}", rep.line())?;
                out.flush()?;
                if !rep.passed {
                    failed += 1;
                }
            }
            writeln!(out, "{}/{} passed", runners.len() - failed, runners.len())?;
            if failed > 0 {
                return Err(Failure::Check);
            }
        }
    }
    Ok(())
}

/// Runs the program on `argv` (including the program name). Returns 0 on
/// success, 1 when a check fails or a computation errors, 2 on bad usage.
pub fn run_cli_with<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match exec(cli, out) {
        Ok(()) | Err(Failure::Closed) => 0,
        Err(Failure::Check) => 1,
        Err(Failure::Runtime(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

pub fn run_cli<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_cli_with(argv, &mut stdout.lock(), &mut stderr.lock())
}
