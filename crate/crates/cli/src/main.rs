//! Command-line front end for the Gorenstein decision engine.
//!
//! Verbs:
//!
//! * `check n d t` — decide one parameter tuple by both routes and report.
//! * `sweep n_max d_max t_max` — cross-validate every valid tuple in range,
//!   emitting CSV (default) or a JSON report document.
//! * `monomials n d t` — list the degree-d t-spread generators.
//! * `polytope n d t [--dilate k] [--points] [--interior]` — print the
//!   H-description of the dilated generator polytope and its lattice points.
//!
//! Exit codes: 0 success (and, for `check`/`sweep`, both decision routes
//! agree), 1 usage or validation error, 2 the routes disagree, 3 a
//! search-bound or computational failure.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use tveronese::gorenstein::{decide_algorithmic, Branch, GorensteinReport};
use tveronese::latgeom::lattice_points;
use tveronese::polykern::rational::rat;
use tveronese::tspread::{build_polytope, generate, SpreadParams};
use tveronese::Error as CoreError;

const SCHEMA_VERSION: &str = "1.0";

const EXIT_OK: u8 = 0;
const EXIT_USAGE: u8 = 1;
const EXIT_DISAGREE: u8 = 2;
const EXIT_COMPUTE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "tveronese",
    version,
    about = "Decides whether the algebra spanned by the t-spread monomials of degree d in n variables is Gorenstein",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide one (n, d, t) tuple by the geometric pipeline and the
    /// closed-form classification, and report both verdicts.
    Check {
        n: u32,
        d: u32,
        t: u32,
        /// Emit a JSON report document instead of human-readable text.
        #[arg(long)]
        json: bool,
        /// Write the report to a file instead of stdout.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        /// Ceiling for the minimal-dilation search (default t + d + 2).
        #[arg(long, value_name = "K")]
        delta_max: Option<u32>,
    },
    /// Decide every valid tuple with n ≤ n_max, d ≤ d_max, t ≤ t_max and
    /// report one row per tuple, sorted by (d, t, n).
    Sweep {
        n_max: u32,
        d_max: u32,
        t_max: u32,
        /// Emit a JSON report document instead of CSV.
        #[arg(long)]
        json: bool,
        /// Write the report to a file instead of stdout.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        /// Ceiling for the minimal-dilation search (default t + d + 2).
        #[arg(long, value_name = "K")]
        delta_max: Option<u32>,
    },
    /// List the t-spread generators of degree d in descending
    /// lexicographic order, one per line, with exponent vectors.
    Monomials { n: u32, d: u32, t: u32 },
    /// Print the H-description of the k-th dilate of the projected
    /// generator polytope, optionally with its lattice points.
    Polytope {
        n: u32,
        d: u32,
        t: u32,
        /// Dilation factor k ≥ 1.
        #[arg(long, value_name = "K", default_value_t = 1)]
        dilate: u32,
        /// Also list all lattice points of the dilate.
        #[arg(long)]
        points: bool,
        /// Also list the relative-interior lattice points of the dilate.
        #[arg(long)]
        interior: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are not failures.
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let code = match cli.cmd {
        Cmd::Check {
            n,
            d,
            t,
            json,
            out,
            delta_max,
        } => cmd_check(n, d, t, json, out, delta_max),
        Cmd::Sweep {
            n_max,
            d_max,
            t_max,
            json,
            out,
            delta_max,
        } => cmd_sweep(n_max, d_max, t_max, json, out, delta_max),
        Cmd::Monomials { n, d, t } => cmd_monomials(n, d, t),
        Cmd::Polytope {
            n,
            d,
            t,
            dilate,
            points,
            interior,
        } => cmd_polytope(n, d, t, dilate, points, interior),
    };
    ExitCode::from(code)
}

/// Maps a core error to the exit code contract: validation failures are
/// usage errors, everything else is a computational failure.
fn error_exit(e: &CoreError) -> u8 {
    match e {
        CoreError::InvalidArgument(_) | CoreError::SpreadOutOfScope => EXIT_USAGE,
        _ => EXIT_COMPUTE,
    }
}

fn fail(e: &CoreError) -> u8 {
    eprintln!("error: {e}");
    error_exit(e)
}

// ---------------------------------------------------------------------------
// JSON report document
// ---------------------------------------------------------------------------

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
struct ReportDocument {
    schema_version: String,
    generated_at: String,
    entries: Vec<ReportEntry>,
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
struct ParamsJson {
    n: u32,
    d: u32,
    t: u32,
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
struct ReportEntry {
    n: u32,
    d: u32,
    t: u32,
    reduced: ParamsJson,
    dimension: u32,
    branch: String,
    delta: Option<u32>,
    interior_points: Vec<Vec<i64>>,
    alpha: Option<Vec<i64>>,
    dual_integral: Option<bool>,
    gorenstein_algorithmic: bool,
    gorenstein_closed_form: bool,
    agree: bool,
    a_invariant: Option<i64>,
}

fn small(v: &BigInt) -> i64 {
    v.to_i64().expect("lattice coordinate exceeds i64")
}

impl From<&GorensteinReport> for ReportEntry {
    fn from(r: &GorensteinReport) -> Self {
        ReportEntry {
            n: r.input.n(),
            d: r.input.d(),
            t: r.input.t(),
            reduced: ParamsJson {
                n: r.reduced.n(),
                d: r.reduced.d(),
                t: r.reduced.t(),
            },
            dimension: r.dimension,
            branch: match r.branch {
                Branch::PolynomialRing => "POLYNOMIAL_RING".to_string(),
                Branch::Geometric => "GEOMETRIC".to_string(),
            },
            delta: r.delta,
            interior_points: r
                .interior_points
                .iter()
                .map(|p| p.iter().map(small).collect())
                .collect(),
            alpha: r
                .unique_alpha
                .as_ref()
                .map(|a| a.iter().map(small).collect()),
            dual_integral: r.dual_integral,
            gorenstein_algorithmic: r.gorenstein_algorithmic,
            gorenstein_closed_form: r.gorenstein_closed_form,
            agree: r.agree,
            a_invariant: r.a_invariant,
        }
    }
}

fn document(entries: Vec<ReportEntry>) -> ReportDocument {
    ReportDocument {
        schema_version: SCHEMA_VERSION.to_string(),
        generated_at: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
        entries,
    }
}

/// Writes `text` to `out` when given, otherwise to stdout. Returns the
/// usage exit code when the path is unwritable.
fn deliver(text: &str, out: Option<&PathBuf>) -> Result<(), u8> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| {
            eprintln!("error: cannot write {}: {e}", path.display());
            EXIT_USAGE
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn join_point(p: &[BigInt]) -> String {
    let parts: Vec<String> = p.iter().map(|v| v.to_string()).collect();
    format!("({})", parts.join(","))
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

fn cmd_check(
    n: u32,
    d: u32,
    t: u32,
    json: bool,
    out: Option<PathBuf>,
    delta_max: Option<u32>,
) -> u8 {
    let p = match SpreadParams::new(n, d, t) {
        Ok(p) => p,
        Err(e) => return fail(&e),
    };
    let report = match decide_algorithmic(&p, delta_max) {
        Ok(r) => r,
        Err(e) => return fail(&e),
    };

    let text = if json {
        let doc = document(vec![ReportEntry::from(&report)]);
        let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
        s.push('\n');
        s
    } else {
        render_check(&report)
    };
    if let Err(code) = deliver(&text, out.as_ref()) {
        return code;
    }
    if report.agree {
        EXIT_OK
    } else {
        EXIT_DISAGREE
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn render_check(r: &GorensteinReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "parameters       {}", r.input);
    let _ = writeln!(s, "normalized       {}", r.reduced);
    let _ = writeln!(s, "dimension        {}", r.dimension);
    let _ = writeln!(
        s,
        "branch           {}",
        match r.branch {
            Branch::PolynomialRing => "POLYNOMIAL_RING",
            Branch::Geometric => "GEOMETRIC",
        }
    );
    match r.delta {
        Some(delta) => {
            let _ = writeln!(s, "delta            {delta}");
            let _ = writeln!(s, "a-invariant      {}", r.a_invariant.unwrap());
        }
        None => {
            let _ = writeln!(s, "delta            -");
        }
    }
    match r.interior_points.len() {
        0 => {}
        1 => {
            let _ = writeln!(s, "alpha            {}", join_point(&r.interior_points[0]));
        }
        k => {
            let _ = writeln!(s, "interior points  {k}");
            for pt in &r.interior_points {
                let _ = writeln!(s, "                 {}", join_point(pt));
            }
        }
    }
    let _ = writeln!(
        s,
        "dual integral    {}",
        match r.dual_integral {
            Some(b) => yes_no(b),
            None => "-",
        }
    );
    let _ = writeln!(
        s,
        "geometric route  {}",
        yes_no(r.gorenstein_algorithmic)
    );
    let _ = writeln!(
        s,
        "closed form      {}",
        yes_no(r.gorenstein_closed_form)
    );

    if !r.agree {
        let _ = writeln!(
            s,
            "DISAGREEMENT: geometric route says {}, closed form says {}",
            yes_no(r.gorenstein_algorithmic),
            yes_no(r.gorenstein_closed_form)
        );
        return s;
    }
    if r.gorenstein_algorithmic {
        let mut line = "Gorenstein: yes (both routes)".to_string();
        match (r.delta, &r.unique_alpha) {
            (Some(delta), Some(alpha)) => {
                let _ = write!(line, ", delta={delta}, alpha={}", join_point(alpha));
            }
            _ => line.push_str(", polynomial ring"),
        }
        let _ = writeln!(s, "{line}");
    } else if r.interior_points.len() > 1 {
        let _ = writeln!(
            s,
            "Gorenstein: no, {} interior points at delta={}",
            r.interior_points.len(),
            r.delta.unwrap()
        );
    } else {
        let _ = writeln!(
            s,
            "Gorenstein: no, dual not integral at delta={}, alpha={}",
            r.delta.unwrap(),
            join_point(r.unique_alpha.as_ref().unwrap())
        );
    }
    s
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

fn cmd_sweep(
    n_max: u32,
    d_max: u32,
    t_max: u32,
    json: bool,
    out: Option<PathBuf>,
    delta_max: Option<u32>,
) -> u8 {
    let mut reports = Vec::new();
    for d in 1..=d_max {
        for t in 1..=t_max {
            for n in 1..=n_max {
                let Ok(p) = SpreadParams::new(n, d, t) else {
                    continue;
                };
                match decide_algorithmic(&p, delta_max) {
                    Ok(r) => reports.push(r),
                    Err(e) => {
                        let hint = if matches!(e, CoreError::DeltaBoundExceeded { .. }) {
                            " (wide ranges can need a larger --delta-max)"
                        } else {
                            ""
                        };
                        eprintln!("error at {p}: {e}{hint}");
                        return error_exit(&e);
                    }
                }
            }
        }
    }
    let disagreements = reports.iter().filter(|r| !r.agree).count();

    let text = if json {
        let doc = document(reports.iter().map(ReportEntry::from).collect());
        let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
        s.push('\n');
        s
    } else {
        render_csv(&reports)
    };
    if let Err(code) = deliver(&text, out.as_ref()) {
        return code;
    }
    if let Some(path) = &out {
        println!(
            "checked {} tuple(s), {} disagreement(s); wrote {}",
            reports.len(),
            disagreements,
            path.display()
        );
    }
    if disagreements == 0 {
        EXIT_OK
    } else {
        EXIT_DISAGREE
    }
}

fn render_csv(reports: &[GorensteinReport]) -> String {
    let mut s = String::from(
        "n,d,t,reduced_n,reduced_t,dim,delta,num_interior,gorenstein_alg,gorenstein_cf,agree\n",
    );
    for r in reports {
        let delta = r.delta.map(|v| v.to_string()).unwrap_or_default();
        let _ = writeln!(
            s,
            "{},{},{},{},{},{},{},{},{},{},{}",
            r.input.n(),
            r.input.d(),
            r.input.t(),
            r.reduced.n(),
            r.reduced.t(),
            r.dimension,
            delta,
            r.interior_points.len(),
            r.gorenstein_algorithmic,
            r.gorenstein_closed_form,
            r.agree
        );
    }
    s
}

// ---------------------------------------------------------------------------
// monomials
// ---------------------------------------------------------------------------

fn cmd_monomials(n: u32, d: u32, t: u32) -> u8 {
    let p = match SpreadParams::new(n, d, t) {
        Ok(p) => p,
        Err(e) => return fail(&e),
    };
    let mut gens = generate(&p);
    // Descending lexicographic order = descending exponent-vector order.
    gens.sort();
    gens.reverse();
    for m in &gens {
        let exps: Vec<String> = m.exponents().iter().map(|e| e.to_string()).collect();
        println!("{m}\t({})", exps.join(","));
    }
    EXIT_OK
}

// ---------------------------------------------------------------------------
// polytope
// ---------------------------------------------------------------------------

fn cmd_polytope(n: u32, d: u32, t: u32, dilate: u32, points: bool, interior: bool) -> u8 {
    let p = match SpreadParams::new(n, d, t) {
        Ok(p) => p,
        Err(e) => return fail(&e),
    };
    if dilate == 0 {
        eprintln!("error: invalid argument: requires dilate >= 1");
        return EXIT_USAGE;
    }
    let poly = match build_polytope(&p) {
        Ok(poly) => poly,
        Err(e) => return fail(&e),
    };
    let dilated = match poly.dilate(&rat(dilate as i64)) {
        Ok(q) => q,
        Err(e) => return fail(&e),
    };
    print!("{dilated}");
    if points {
        match lattice_points(&dilated, false) {
            Ok(pts) => {
                println!("lattice points ({}):", pts.len());
                for pt in &pts {
                    println!("  {}", join_point(pt));
                }
            }
            Err(e) => return fail(&e),
        }
    }
    if interior {
        match lattice_points(&dilated, true) {
            Ok(pts) => {
                println!("relative-interior lattice points ({}):", pts.len());
                for pt in &pts {
                    println!("  {}", join_point(pt));
                }
            }
            Err(e) => return fail(&e),
        }
    }
    EXIT_OK
}
