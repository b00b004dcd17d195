//! Command-line front end: JSON in, JSON (or SVG) out for every operation
//! family. Exit codes: 0 success, 2 validation error, 3 numeric
//! non-convergence. Errors are emitted as `{code, message, path}` objects on
//! stderr.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde_json::{json, Value};

use reslab_core::contour::{marching_squares, svg_document, Window};
use reslab_core::elimination::elimination_function_seeded;
use reslab_core::json::{CoeffDto, EliminationDto, PointDto, RationalFunctionDto};
use reslab_core::szego::day_formula_exact;
use reslab_core::torus::{
    abel_check, torus_resultant, weierstrass_xi_check, TorusDivisorPair, TorusModulus,
};
use reslab_core::*;

mod parse;
use parse::{parse_complex, parse_complex_list, parse_rational_list};

#[derive(Parser)]
#[command(
    name = "reslab",
    version,
    about = "resultants, elimination functions and exponential transforms"
)]
struct Cli {
    /// Write the result to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    /// Seed rotating deterministic interpolation node sets
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Meromorphic resultant of two rational functions (exact)
    Res(ResArgs),
    /// Elimination function E(z,w) = Q/(P R) of a pair without common poles
    Elim(ElimArgs),
    /// Splitting-sum value of a truncated Toeplitz determinant
    Day(DayArgs),
    /// Strong-limit (Fourier) route to the resultant of a support-split pair
    Szego(SzegoArgs),
    /// Splitting resultants: every term and the unit sum
    Identities(IdentArgs),
    /// Exponential transform of a region
    Exptransform(ExptArgs),
    /// SVG zero contour of the algebraic boundary curve of a map image
    Boundary(BoundaryArgs),
    /// Genus-one operations: res, abel, xi
    Torus(TorusArgs),
    /// Product of local symbols over the joint support (reciprocity check)
    Weil(WeilArgs),
    /// Moment matrices and the quadrature-order report
    Moments(MomentsArgs),
}

#[derive(Args)]
struct ResArgs {
    /// Rational function JSON ({"num":[..],"den":[..]} or factored form)
    #[arg(long)]
    f: String,
    #[arg(long)]
    g: String,
}

#[derive(Args)]
struct ElimArgs {
    #[arg(long)]
    f: String,
    #[arg(long)]
    g: String,
}

#[derive(Args)]
struct DayArgs {
    /// Symbol as a factored rational function JSON
    #[arg(long)]
    h: String,
    /// Truncation order
    #[arg(long, short = 'N')]
    n: i64,
    /// Also compute the brute-force Toeplitz determinant with this
    /// coefficient window (needs K >= N - 1)
    #[arg(long, short = 'K')]
    k: Option<i64>,
}

#[derive(Args)]
struct SzegoArgs {
    #[arg(long)]
    f: String,
    #[arg(long)]
    g: String,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
}

#[derive(Args)]
struct IdentArgs {
    /// Zero points, comma-separated rationals
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    /// Pole points, comma-separated rationals
    #[arg(long, allow_hyphen_values = true)]
    b: String,
    /// Splitting size
    #[arg(long, short = 'm')]
    m: usize,
    /// Pole index set J, 1-based comma-separated
    #[arg(long, short = 'J', default_value = "")]
    j: String,
}

#[derive(Args)]
struct ExptArgs {
    #[command(subcommand)]
    region: ExptRegion,
}

#[derive(Subcommand)]
enum ExptRegion {
    /// Disk centered at --center (default 0) of radius --r
    Disk(ExptDiskArgs),
    /// Image of the unit disk under a univalent rational map --f
    Map(ExptMapArgs),
    /// Simple polygon with vertices --points "x+yi,x+yi,..."
    Polygon(ExptPolyArgs),
}

#[derive(Args)]
struct ExptDiskArgs {
    #[arg(long)]
    r: f64,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    center: String,
    #[arg(long, allow_hyphen_values = true)]
    z: String,
    #[arg(long, allow_hyphen_values = true)]
    w: String,
    /// Extended transform base points (both required together)
    #[arg(long, allow_hyphen_values = true)]
    z0: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    w0: Option<String>,
    /// Force the quadrature route instead of the closed form
    #[arg(long)]
    numeric: bool,
    #[arg(long, default_value_t = 1e-5)]
    tol: f64,
}

#[derive(Args)]
struct ExptMapArgs {
    #[arg(long)]
    f: String,
    #[arg(long, allow_hyphen_values = true)]
    z: String,
    #[arg(long, allow_hyphen_values = true)]
    w: String,
    #[arg(long, allow_hyphen_values = true)]
    z0: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    w0: Option<String>,
    /// One of qd, explicit, polydet, numeric
    #[arg(long, default_value = "qd")]
    route: String,
    #[arg(long, default_value_t = 1e-5)]
    tol: f64,
}

#[derive(Args)]
struct ExptPolyArgs {
    #[arg(long, allow_hyphen_values = true)]
    points: String,
    #[arg(long, allow_hyphen_values = true)]
    z: String,
    #[arg(long, allow_hyphen_values = true)]
    w: String,
    #[arg(long, allow_hyphen_values = true)]
    z0: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    w0: Option<String>,
    #[arg(long, default_value_t = 1e-5)]
    tol: f64,
}

#[derive(Args)]
struct BoundaryArgs {
    #[arg(long)]
    f: String,
    /// Window "x0,y0,x1,y1"
    #[arg(long, default_value = "-2,-2,2,2", allow_hyphen_values = true)]
    window: String,
    #[arg(long, default_value_t = 512)]
    resolution: usize,
}

#[derive(Args)]
struct TorusArgs {
    #[command(subcommand)]
    verb: TorusVerb,
}

#[derive(Subcommand)]
enum TorusVerb {
    /// Resultant of two divisor pairs: --a/--b zeros and poles of f,
    /// --c/--d of g (comma-separated complex numbers)
    Res(TorusResArgs),
    /// Lattice condition for a divisor pair
    Abel(TorusAbelArgs),
    /// Squared-theta identity for a degree-four splitting
    Xi(TorusXiArgs),
}

#[derive(Args)]
struct TorusResArgs {
    #[arg(long, allow_hyphen_values = true)]
    tau: String,
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    #[arg(long, allow_hyphen_values = true)]
    b: String,
    #[arg(long, allow_hyphen_values = true)]
    c: String,
    #[arg(long, allow_hyphen_values = true)]
    d: String,
}

#[derive(Args)]
struct TorusAbelArgs {
    #[arg(long, allow_hyphen_values = true)]
    tau: String,
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    #[arg(long, allow_hyphen_values = true)]
    b: String,
}

#[derive(Args)]
struct TorusXiArgs {
    #[arg(long, allow_hyphen_values = true)]
    tau: String,
    #[arg(long, allow_hyphen_values = true)]
    a1: String,
    #[arg(long, allow_hyphen_values = true)]
    a2: String,
    #[arg(long, allow_hyphen_values = true)]
    b1: String,
    #[arg(long, allow_hyphen_values = true)]
    b2: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    z0: String,
}

#[derive(Args)]
struct WeilArgs {
    /// Factored rational function JSON
    #[arg(long)]
    f: String,
    #[arg(long)]
    g: String,
}

#[derive(Args)]
struct MomentsArgs {
    #[command(subcommand)]
    region: MomentsRegion,
}

#[derive(Subcommand)]
enum MomentsRegion {
    Disk(MomentsDiskArgs),
    Map(MomentsMapArgs),
    Polygon(MomentsPolyArgs),
}

#[derive(Args)]
struct MomentsDiskArgs {
    #[arg(long)]
    r: f64,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    center: String,
    #[arg(long, short = 'N', default_value_t = 2)]
    n: usize,
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
}

#[derive(Args)]
struct MomentsMapArgs {
    #[arg(long)]
    f: String,
    #[arg(long, short = 'N', default_value_t = 2)]
    n: usize,
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
}

#[derive(Args)]
struct MomentsPolyArgs {
    #[arg(long, allow_hyphen_values = true)]
    points: String,
    #[arg(long, short = 'N', default_value_t = 2)]
    n: usize,
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("RESLAB_THREADS") {
        if let Ok(n) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global();
        }
    }
    let cli = Cli::parse();
    match run(&cli) {
        Ok(output) => {
            match &cli.out {
                Some(path) => {
                    if std::fs::write(path, &output).is_err() {
                        eprintln!(
                            "{}",
                            json!({"code": 2, "message": "cannot write output file", "path": path})
                        );
                        return ExitCode::from(2);
                    }
                }
                None => {
                    let mut stdout = std::io::stdout().lock();
                    let _ = stdout.write_all(output.as_bytes());
                    if !output.ends_with('\n') {
                        let _ = stdout.write_all(b"\n");
                    }
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            let code = e.exit_code();
            eprintln!(
                "{}",
                json!({"code": code, "message": e.error.to_string(), "path": e.path})
            );
            ExitCode::from(code as u8)
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

struct CliError {
    error: Error,
    path: String,
}

impl CliError {
    fn exit_code(&self) -> i32 {
        self.error.exit_code()
    }
}

trait Ctx<T> {
    fn ctx(self, path: &str) -> CliResult<T>;
}

impl<T> Ctx<T> for reslab_core::Result<T> {
    fn ctx(self, path: &str) -> CliResult<T> {
        self.map_err(|error| CliError {
            error,
            path: path.to_string(),
        })
    }
}

fn parse_function(s: &str, path: &str) -> CliResult<RationalFunction> {
    let dto: RationalFunctionDto = serde_json::from_str(s).map_err(|e| CliError {
        error: Error::InvalidArgument(format!("malformed JSON: {e}")),
        path: path.to_string(),
    })?;
    dto.to_function().ctx(path)
}

fn rational_value(v: &ResValue) -> Value {
    match v {
        ResValue::Finite(c) => serde_json::to_value(CoeffDto::from_value(c)).unwrap(),
        ResValue::Zero => Value::String("ZERO".to_string()),
        ResValue::Infinite => Value::String("INFINITE".to_string()),
    }
}

fn complex_value(c: Complex64) -> Value {
    json!({"re": c.re, "im": c.im})
}

fn run(cli: &Cli) -> CliResult<String> {
    let out = match &cli.command {
        Command::Res(a) => {
            let f = parse_function(&a.f, "--f")?;
            let g = parse_function(&a.g, "--g")?;
            let v = res_four_poly(&f, &g).ctx("res")?;
            // factored input also goes through the divisor route as a check
            if f.factored().is_some() {
                if let Ok(dv) = res_divisor(&f, &g) {
                    if dv != v {
                        return Err(CliError {
                            error: Error::InvalidArgument("internal route disagreement".into()),
                            path: "res".into(),
                        });
                    }
                }
            }
            json!({"value": rational_value(&v)}).to_string()
        }
        Command::Elim(a) => {
            let f = parse_function(&a.f, "--f")?;
            let g = parse_function(&a.g, "--g")?;
            let e = elimination_function_seeded(&f, &g, cli.seed).ctx("elim")?;
            serde_json::to_string(&EliminationDto::from_elimination(&e)).unwrap()
        }
        Command::Day(a) => {
            let h = parse_function(&a.h, "--h")?;
            let exact = day_formula_exact(&h, a.n).ctx("day")?;
            let mut obj = json!({
                "value": complex_value(exact.to_complex64()),
                "exact": serde_json::to_value(CoeffDto::from_value(&exact)).unwrap(),
            });
            if let Some(k) = a.k {
                let coeffs = fourier_coeffs(&h, k).ctx("day")?;
                let det = toeplitz_det(&coeffs, a.n as usize).ctx("day")?;
                obj["toeplitz"] = complex_value(det);
                obj["abs_error"] = json!((det - exact.to_complex64()).norm());
            }
            obj.to_string()
        }
        Command::Szego(a) => {
            let f = parse_function(&a.f, "--f")?;
            let g = parse_function(&a.g, "--g")?;
            let v = szego_resultant(&f, &g, a.tol).ctx("szego")?;
            let exact = res_four_poly(&f, &g).ctx("szego")?;
            let mut obj = json!({"value": complex_value(v)});
            if let ResValue::Finite(x) = &exact {
                obj["exact"] = serde_json::to_value(CoeffDto::from_value(x)).unwrap();
                obj["abs_error"] = json!((v - x.to_complex64()).norm());
            }
            obj.to_string()
        }
        Command::Identities(a) => {
            let pa = parse_rational_list(&a.a).ctx("--a")?;
            let pb = parse_rational_list(&a.b).ctx("--b")?;
            let j: Vec<usize> = if a.j.trim().is_empty() {
                vec![]
            } else {
                let idx: std::result::Result<Vec<usize>, _> =
                    a.j.split(',').map(|t| t.trim().parse::<usize>()).collect();
                let idx = idx.map_err(|_| CliError {
                    error: Error::InvalidArgument("J must be 1-based integers".into()),
                    path: "--J".into(),
                })?;
                idx.into_iter()
                    .map(|k| k.checked_sub(1).ok_or(()))
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| CliError {
                        error: Error::InvalidArgument("J indices start at 1".into()),
                        path: "--J".into(),
                    })?
            };
            let mut terms = Vec::new();
            let mut sum = ComplexRational::zero();
            for i_set in subsets_colex(pa.len(), a.m) {
                let t = splitting_resultant(&pa, &pb, &i_set, &j).ctx("identities")?;
                sum += t.clone();
                terms.push(json!({
                    "I": i_set.iter().map(|k| k + 1).collect::<Vec<_>>(),
                    "value": serde_json::to_value(CoeffDto::from_value(&t)).unwrap(),
                }));
            }
            json!({
                "terms": terms,
                "sum": serde_json::to_value(CoeffDto::from_value(&sum)).unwrap(),
            })
            .to_string()
        }
        Command::Exptransform(a) => run_exptransform(a)?,
        Command::Boundary(a) => {
            let f = parse_function(&a.f, "--f")?;
            let parts: Vec<f64> = a
                .window
                .split(',')
                .map(|t| t.trim().parse::<f64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| CliError {
                    error: Error::InvalidArgument("window must be x0,y0,x1,y1".into()),
                    path: "--window".into(),
                })?;
            if parts.len() != 4 || parts[0] >= parts[2] || parts[1] >= parts[3] {
                return Err(CliError {
                    error: Error::InvalidArgument("window must be x0,y0,x1,y1".into()),
                    path: "--window".into(),
                });
            }
            let q = schwarz_curve(&f).ctx("boundary")?;
            let window = Window::new(parts[0], parts[1], parts[2], parts[3]);
            let field = |x: f64, y: f64| {
                let z = Complex64::new(x, y);
                q.eval_complex(z, z.conj()).re
            };
            let lines = marching_squares(field, window, a.resolution);
            svg_document(&lines, window, 512)
        }
        Command::Torus(a) => run_torus(a)?,
        Command::Weil(a) => {
            let f = parse_function(&a.f, "--f")?;
            let g = parse_function(&a.g, "--g")?;
            let product = weil_product(&f, &g).ctx("weil")?;
            let df = divisor_of(&f).ctx("weil")?;
            let dg = divisor_of(&g).ctx("weil")?;
            let mut symbols = Vec::new();
            let mut points: Vec<PointP1> = df.support().cloned().collect();
            for p in dg.support() {
                if !points.contains(p) {
                    points.push(p.clone());
                }
            }
            if !points.contains(&PointP1::Infinity) {
                points.push(PointP1::Infinity);
            }
            for p in &points {
                let tau = local_symbol(&f, &g, p).ctx("weil")?;
                symbols.push(json!({
                    "point": serde_json::to_value(PointDto::from_point(p)).unwrap(),
                    "value": serde_json::to_value(CoeffDto::from_value(&tau)).unwrap(),
                }));
            }
            json!({
                "value": serde_json::to_value(CoeffDto::from_value(&product)).unwrap(),
                "symbols": symbols,
            })
            .to_string()
        }
        Command::Moments(a) => run_moments(a)?,
    };
    Ok(out)
}

fn region_from_points(points: &str) -> CliResult<RegionSpec> {
    let vs = parse_complex_list(points).ctx("--points")?;
    RegionSpec::polygon(vs).ctx("--points")
}

fn run_exptransform(a: &ExptArgs) -> CliResult<String> {
    let (region, z, w, z0w0, tol, route) = match &a.region {
        ExptRegion::Disk(d) => {
            let center = parse_complex(&d.center).ctx("--center")?;
            let region = RegionSpec::disk(center, d.r).ctx("--r")?;
            let z = parse_complex(&d.z).ctx("--z")?;
            let w = parse_complex(&d.w).ctx("--w")?;
            let z0w0 = parse_base_points(&d.z0, &d.w0)?;
            let route = if d.numeric { "numeric" } else { "disk" };
            (region, z, w, z0w0, d.tol, route.to_string())
        }
        ExptRegion::Map(m) => {
            let f = parse_function(&m.f, "--f")?;
            let region = RegionSpec::map_image(f).ctx("--f")?;
            let z = parse_complex(&m.z).ctx("--z")?;
            let w = parse_complex(&m.w).ctx("--w")?;
            let z0w0 = parse_base_points(&m.z0, &m.w0)?;
            (region, z, w, z0w0, m.tol, m.route.clone())
        }
        ExptRegion::Polygon(p) => {
            let region = region_from_points(&p.points)?;
            let z = parse_complex(&p.z).ctx("--z")?;
            let w = parse_complex(&p.w).ctx("--w")?;
            let z0w0 = parse_base_points(&p.z0, &p.w0)?;
            (region, z, w, z0w0, p.tol, "numeric".to_string())
        }
    };
    if let Some((z0, w0)) = z0w0 {
        let v = extended_exp_transform(&region, z, w, z0, w0, tol).ctx("exptransform")?;
        return Ok(json!({"value": complex_value(v)}).to_string());
    }
    let v = match (&region, route.as_str()) {
        (RegionSpec::Disk { center, radius }, "disk") if center.norm() == 0.0 => {
            exp_transform_disk(*radius, z, w).ctx("exptransform")?
        }
        (RegionSpec::MapImage { f }, "qd") => exp_transform_qd(f, z, w).ctx("exptransform")?,
        (RegionSpec::MapImage { f }, "explicit") => {
            exp_transform_explicit(f).ctx("exptransform")?.eval(z, w)
        }
        (RegionSpec::MapImage { f }, "polydet") => {
            if f.den().degree().unwrap_or(0) > 0 || !f.num().coeff(0).is_zero() {
                return Err(CliError {
                    error: Error::InvalidArgument(
                        "polydet route needs a polynomial map vanishing at 0".into(),
                    ),
                    path: "--route".into(),
                });
            }
            let coeffs: Vec<Complex64> = f.num().to_complex_coeffs()[1..].to_vec();
            exp_transform_polydet(&coeffs, z, w).ctx("exptransform")?
        }
        _ => exp_transform_numeric(&region, z, w, tol).ctx("exptransform")?,
    };
    Ok(json!({"value": complex_value(v)}).to_string())
}

fn parse_base_points(
    z0: &Option<String>,
    w0: &Option<String>,
) -> CliResult<Option<(Complex64, Complex64)>> {
    match (z0, w0) {
        (Some(z0), Some(w0)) => Ok(Some((
            parse_complex(z0).ctx("--z0")?,
            parse_complex(w0).ctx("--w0")?,
        ))),
        (None, None) => Ok(None),
        _ => Err(CliError {
            error: Error::InvalidArgument("--z0 and --w0 must be given together".into()),
            path: "--z0".into(),
        }),
    }
}

fn run_torus(a: &TorusArgs) -> CliResult<String> {
    let modulus = |tau: &str| -> CliResult<TorusModulus> {
        TorusModulus::new(parse_complex(tau).ctx("--tau")?).ctx("--tau")
    };
    Ok(match &a.verb {
        TorusVerb::Res(r) => {
            let m = modulus(&r.tau)?;
            let df = TorusDivisorPair::new(
                parse_complex_list(&r.a).ctx("--a")?,
                parse_complex_list(&r.b).ctx("--b")?,
            )
            .ctx("torus res")?;
            let dg = TorusDivisorPair::new(
                parse_complex_list(&r.c).ctx("--c")?,
                parse_complex_list(&r.d).ctx("--d")?,
            )
            .ctx("torus res")?;
            let v = torus_resultant(&df, &dg, &m).ctx("torus res")?;
            json!({"value": complex_value(v)}).to_string()
        }
        TorusVerb::Abel(ab) => {
            let m = modulus(&ab.tau)?;
            let d = TorusDivisorPair::new(
                parse_complex_list(&ab.a).ctx("--a")?,
                parse_complex_list(&ab.b).ctx("--b")?,
            )
            .ctx("torus abel")?;
            let chk = abel_check(&d, &m);
            json!({
                "ok": chk.ok,
                "lattice": {"m": chk.m, "n": chk.n},
                "residual": chk.residual,
            })
            .to_string()
        }
        TorusVerb::Xi(x) => {
            let m = modulus(&x.tau)?;
            let chk = weierstrass_xi_check(
                parse_complex(&x.a1).ctx("--a1")?,
                parse_complex(&x.a2).ctx("--a2")?,
                parse_complex(&x.b1).ctx("--b1")?,
                parse_complex(&x.b2).ctx("--b2")?,
                parse_complex(&x.z0).ctx("--z0")?,
                &m,
            )
            .ctx("torus xi")?;
            json!({
                "xi1": complex_value(chk.xi1),
                "xi2": complex_value(chk.xi2),
                "pairing_spread": chk.pairing_spread,
                "identity_deviation": chk.identity_deviation,
                "sqrt_deviation": chk.sqrt_deviation,
            })
            .to_string()
        }
    })
}

fn run_moments(a: &MomentsArgs) -> CliResult<String> {
    let (region, n, tol) = match &a.region {
        MomentsRegion::Disk(d) => (
            RegionSpec::disk(parse_complex(&d.center).ctx("--center")?, d.r).ctx("--r")?,
            d.n,
            d.tol,
        ),
        MomentsRegion::Map(m) => {
            let f = parse_function(&m.f, "--f")?;
            (RegionSpec::map_image(f).ctx("--f")?, m.n, m.tol)
        }
        MomentsRegion::Polygon(p) => (region_from_points(&p.points)?, p.n, p.tol),
    };
    let rep = moment_matrix(&region, n, tol).ctx("moments")?;
    let grid = |m: &Vec<Vec<Complex64>>| -> Value {
        Value::Array(
            m.iter()
                .map(|row| Value::Array(row.iter().map(|&c| complex_value(c)).collect()))
                .collect(),
        )
    };
    Ok(json!({
        "a": grid(&rep.a),
        "b": grid(&rep.b),
        "normalized_dets": rep.normalized_dets,
        "order": rep.order,
    })
    .to_string())
}
