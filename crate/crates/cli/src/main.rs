//! `udk`: generate, verify and audit k-planar unit distance drawings.
//!
//! Exit status: 0 when every requested verdict holds, 1 when one fails,
//! 2 on usage, parse or I/O errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use udk_core::arrangement::{
    cell_decomposition, crossing_incidence_with, density_check_with, outer_metrics_with, planarize,
    small_cells_with,
};
use udk_core::constructions::{
    bound_table, dodecagon, dodecagon_grid, rook_block, shifted_lattice, spiral_construction,
    triangular_hexagon,
};
use udk_core::faces::{discharging_audit, plane_subgraph, SplitMode};
use udk_core::model::{codec, render_svg, validate_drawing};
use udk_core::report::batch;
use udk_core::{Drawing, Error, QField};

#[derive(Parser)]
#[command(name = "udk", version, about = "k-planar unit distance drawings: constructions and audits")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    Rook,
    Dodecagon,
    Grid,
    Spiral,
    Hexlattice,
    Shifted,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exact,
    Greedy,
}

#[derive(Subcommand)]
enum Command {
    /// Build a drawing and write it in udg-drawing/1 format.
    Generate {
        #[arg(long, value_enum)]
        construction: Construction,
        /// Number of layers (grid).
        #[arg(long)]
        k: Option<usize>,
        /// Number of vertices (spiral, hexlattice, shifted).
        #[arg(long)]
        n: Option<usize>,
        /// Rotation of the rook block, as an element of Q(√3) such as `1/2` or `0,1/2`.
        #[arg(long, requires = "theta_sin", allow_hyphen_values = true)]
        theta_cos: Option<QField>,
        #[arg(long, requires = "theta_cos", allow_hyphen_values = true)]
        theta_sin: Option<QField>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check validity and k-planarity.
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// Arrangement analyses. Without flags, runs the density formula for t = 2, 3, 4.
    Analyze {
        file: PathBuf,
        #[arg(long = "density-t", allow_hyphen_values = true)]
        density_t: Vec<QField>,
        #[arg(long)]
        cells: bool,
        #[arg(long)]
        small_cells: bool,
        #[arg(long)]
        incidence_audit: bool,
        #[arg(long)]
        outer_metrics: bool,
    },
    /// Discharging audit of a 2-plane drawing.
    Audit {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "exact")]
        mode: Mode,
    },
    /// Bound and construction table for n vertices.
    Bounds {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        json: bool,
    },
    /// Render as SVG.
    Render {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 50.0)]
        scale: f64,
    },
    /// Check every drawing in a directory.
    Batch {
        #[arg(long)]
        dir: PathBuf,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

/// Outcome of a command that ran to completion.
enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    fn from(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Verdict::Pass) => ExitCode::SUCCESS,
        Ok(Verdict::Fail) => ExitCode::from(1),
        Err(e) => {
            let mut msg = e.to_string();
            for cause in e.chain().skip(1) {
                let c = cause.to_string();
                if !msg.contains(&c) {
                    msg = format!("{msg}: {c}");
                }
            }
            eprintln!("udk: {msg}");
            // Geometric failures are verdicts about the input; the rest are usage or I/O.
            let verdict = e.chain().any(|c| {
                matches!(
                    c.downcast_ref::<Error>(),
                    Some(
                        Error::Degenerate(..)
                            | Error::Precondition(_)
                            | Error::Construction { .. }
                            | Error::Inconsistency(_)
                            | Error::NonUnitRotation { .. }
                    )
                )
            });
            ExitCode::from(if verdict { 1 } else { 2 })
        }
    }
}

fn load(path: &Path) -> anyhow::Result<Drawing> {
    let (d, rep) = codec::load(path)?;
    for note in &rep.normalized {
        eprintln!("udk: note: {note}");
    }
    Ok(d)
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json value"));
}

fn need<T>(v: Option<T>, flag: &str, what: &str) -> anyhow::Result<T> {
    v.ok_or_else(|| anyhow!("--construction {what} requires {flag}"))
}

fn generate(
    c: Construction,
    k: Option<usize>,
    n: Option<usize>,
    rot: Option<(QField, QField)>,
) -> anyhow::Result<Drawing> {
    Ok(match c {
        Construction::Rook => {
            let (cos, sin) = rot.unwrap_or_else(|| (QField::new(0, 1, 1, 2), QField::ratio(1, 2)));
            rook_block(&cos, &sin)?
        }
        Construction::Dodecagon => dodecagon()?,
        Construction::Grid => dodecagon_grid(need(k, "--k", "grid")?)?,
        Construction::Spiral => spiral_construction(need(n, "--n", "spiral")?)?,
        Construction::Hexlattice => triangular_hexagon(need(n, "--n", "hexlattice")?)?,
        Construction::Shifted => shifted_lattice(need(n, "--n", "shifted")?)?,
    })
}

fn run(cmd: Command) -> anyhow::Result<Verdict> {
    match cmd {
        Command::Generate { construction, k, n, theta_cos, theta_sin, out } => {
            let rot = theta_cos.zip(theta_sin);
            let d = generate(construction, k, n, rot)?;
            codec::save(&out, &d)?;
            println!("wrote {} (n={}, e={})", out.display(), d.n(), d.e());
            Ok(Verdict::Pass)
        }
        Command::Verify { file, k } => {
            let d = load(&file)?;
            let v = validate_drawing(&d);
            let mut out = json!({ "n": d.n(), "e": d.e(), "valid": v.is_valid(), "validation": v });
            let mut ok = v.is_valid();
            if ok {
                let p = planarize(&d)?;
                let k_plane = p.crossings.is_k_plane(k);
                out["crossings"] = json!(p.crossings.count());
                out["max_crossings_per_edge"] = json!(p.crossings.max_crossings_per_edge);
                out["k"] = json!(k);
                out["k_plane"] = json!(k_plane);
                ok &= k_plane;
            }
            print_json(&out);
            Ok(Verdict::from(ok))
        }
        Command::Analyze { file, density_t, cells, small_cells, incidence_audit, outer_metrics } => {
            let d = load(&file)?;
            let p = planarize(&d)?;
            let mut ok = true;
            let mut out = json!({ "n": d.n(), "e": d.e(), "crossings": p.crossings.count() });
            let mut ts = density_t;
            if ts.is_empty() && !(cells || small_cells || incidence_audit || outer_metrics) {
                ts = (2..=4).map(QField::int).collect();
            }
            if !ts.is_empty() {
                let checks =
                    ts.iter().map(|t| density_check_with(&d, &p, t)).collect::<Result<Vec<_>, _>>()?;
                ok &= checks.iter().all(|c| c.holds);
                out["density"] = json!(checks);
            }
            if cells {
                out["cells"] = json!(cell_decomposition(&p));
            }
            if small_cells {
                let r = small_cells_with(&p);
                ok &= r.one_plane_ok != Some(false);
                out["small_cells"] = json!(r);
            }
            if incidence_audit {
                let a = crossing_incidence_with(&d, &p)?;
                ok &= a.claims_hold;
                out["incidence"] = json!(a);
            }
            if outer_metrics {
                let m = outer_metrics_with(&d, &p)?;
                ok &= !m.isoperimetric_violated;
                out["outer_metrics"] = json!(m);
            }
            print_json(&out);
            Ok(Verdict::from(ok))
        }
        Command::Audit { file, mode } => {
            let d = load(&file)?;
            let mode = match mode {
                Mode::Exact => SplitMode::Exact,
                Mode::Greedy => SplitMode::Greedy,
            };
            let split = plane_subgraph(&d, mode)?;
            let ledger = discharging_audit(&d, &split)?;
            for m in &ledger.diagnostics {
                eprintln!("udk: {m}");
            }
            print_json(&json!({ "split": split, "ledger": ledger }));
            Ok(Verdict::from(ledger.passed))
        }
        Command::Bounds { n, json } => {
            let t = bound_table(n)?;
            if json {
                print_json(&serde_json::to_value(&t)?);
            } else {
                let opt = |v: Option<i64>| v.map_or("-".to_string(), |x| x.to_string());
                println!("n                          {}", t.n);
                println!("u0 = 3n - ceil(sqrt(12n-3)) {}", t.u0);
                println!("u0 (floor form)            {}", t.u0_printed);
                println!("u1 upper 3n - sqrt(n)/100  {:.3}", t.u1_upper);
                println!("u2 upper 4n - 8            {}", t.u2_upper);
                println!("e2 upper 5n - 10           {}", t.e2_upper);
                println!("spiral floor (n >= 6)       {}", opt(t.theorem3_floor));
                println!("hexlattice edges           {}", t.hexlattice_edges);
                println!("spiral construction edges  {}", opt(t.spiral_edges.map(|e| e as i64)));
                println!("margin over u0             {}", opt(t.margin));
            }
            Ok(Verdict::Pass)
        }
        Command::Render { file, out, scale } => {
            let d = load(&file)?;
            fs::write(&out, render_svg(&d, scale))
                .with_context(|| format!("writing {}", out.display()))?;
            Ok(Verdict::Pass)
        }
        Command::Batch { dir, report } => {
            let r = batch(&dir)?;
            let text = r.to_json();
            match report {
                Some(path) => {
                    fs::write(&path, &text).with_context(|| format!("writing {}", path.display()))?;
                    eprintln!(
                        "udk: {} files, {} passed, {} failed",
                        r.summary.files, r.summary.passed, r.summary.failed
                    );
                }
                None => print!("{text}"),
            }
            Ok(Verdict::from(r.all_passed()))
        }
    }
}
