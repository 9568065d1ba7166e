use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ckgeom::cayley_klein::Kind;
use ckgeom::io::{load_scene, Scene};
use ckgeom::lab::{self, Certificate};
use ckgeom::oriented::{coherent_orientation, translate};
use ckgeom::projective::join_unchecked as join;
use ckgeom::svg::{builtin_scene, figure, FigureError};
use ckgeom::triangle::TriangleConfig;
use ckgeom::trig::{self, RightAngled};
use ckgeom::{GeomError, HomPoint};

/// Exit code for failed checks.
const FAILED: u8 = 1;
/// Exit code for unknown names and malformed input.
const USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "ckgeom", version, about = "Projective and Cayley-Klein geometry toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Geometry {
    Hyperbolic,
    Elliptic,
    Both,
}

impl Geometry {
    fn kinds(self) -> Vec<Kind> {
        match self {
            Geometry::Hyperbolic => vec![Kind::Hyperbolic],
            Geometry::Elliptic => vec![Kind::Elliptic],
            Geometry::Both => vec![Kind::Hyperbolic, Kind::Elliptic],
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Distance,
    Angle,
    SquaredTrig,
    #[value(name = "table_5_1", alias = "table-5-1")]
    Table51,
    Laws,
}

#[derive(Subcommand)]
enum Command {
    /// Certify theorems on random scenes.
    Verify {
        /// Theorem id or `all`.
        #[arg(long, default_value = "all")]
        theorem: String,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "both")]
        geometry: Geometry,
        /// Residual tolerance; defaults to GEOM_TOL, then to each theorem's own.
        #[arg(long)]
        tol: Option<f64>,
        /// Path of the JSON report.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Evaluate a measurement on named points of a scene file.
    Compute {
        #[arg(long)]
        scene: PathBuf,
        #[arg(long, value_enum)]
        op: Op,
        /// Point names.
        operands: Vec<String>,
        /// Accept unknown fields in the scene.
        #[arg(long)]
        lenient: bool,
    },
    /// Write an SVG figure.
    Figure {
        #[arg(long)]
        figure: String,
        /// Scene file, or `builtin`.
        #[arg(long, default_value = "builtin")]
        scene: String,
        #[arg(short, long)]
        output: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let r = match cli.command {
        Command::Verify { theorem, trials, seed, geometry, tol, report } => verify(&theorem, trials, seed, geometry, tol, report),
        Command::Compute { scene, op, operands, lenient } => compute(&scene, op, &operands, !lenient),
        Command::Figure { figure, scene, output } => draw(&figure, &scene, &output),
    };
    match r {
        Ok(code) => ExitCode::from(code),
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

type CliResult = Result<u8, (u8, String)>;

fn usage(e: impl std::fmt::Display) -> (u8, String) {
    (USAGE, e.to_string())
}

fn verify(theorem: &str, trials: usize, seed: u64, geometry: Geometry, tol: Option<f64>, report: Option<PathBuf>) -> CliResult {
    let ids = if theorem == "all" { lab::theorem_ids() } else { vec![lab::theorem(theorem).map_err(usage)?.id] };
    let tol = tol.or_else(|| std::env::var("GEOM_TOL").ok().and_then(|s| s.parse().ok()));
    let certs = lab::verify_many(&ids, &geometry.kinds(), seed, trials, tol).map_err(usage)?;
    for c in &certs {
        println!("{}", summary(c));
    }
    let passed = certs.iter().all(Certificate::ok);
    let doc = json!({ "seed": seed, "trials": trials, "passed": passed, "certificates": certs });
    if let Some(path) = report {
        std::fs::write(&path, serde_json::to_string_pretty(&doc).expect("serializable"))
            .map_err(|e| (FAILED, format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(if passed { 0 } else { FAILED })
}

fn summary(c: &Certificate) -> String {
    let status = if c.skipped {
        "skip"
    } else if !c.gating {
        "info"
    } else if c.passed() {
        "pass"
    } else {
        "FAIL"
    };
    format!(
        "{status:4} {:30} {:10} trials={:5} max={:.3e} tol={:.0e} failures={} {:.2}s",
        c.theorem_id,
        c.geometry,
        c.trials,
        c.max_residual,
        c.tolerance,
        c.failures.len(),
        c.wall_time
    )
}

fn operands<const N: usize>(scene: &Scene, names: &[String]) -> Result<[HomPoint; N], (u8, String)> {
    if names.len() != N {
        return Err(usage(format!("expected {N} point names, got {}", names.len())));
    }
    let mut out = [HomPoint::new(0.0, 0.0, 1.0); N];
    for (o, n) in out.iter_mut().zip(names) {
        *o = scene.point(n).map_err(usage)?;
    }
    Ok(out)
}

fn geom(e: GeomError) -> (u8, String) {
    (FAILED, e.to_string())
}

fn compute(path: &Path, op: Op, names: &[String], strict: bool) -> CliResult {
    let scene = load_scene(path, strict).map_err(usage)?;
    let m = scene.model;
    let out: Value = match op {
        Op::Distance => {
            let [a, b] = operands(&scene, names)?;
            let t = m.translate_trig(&a, &b).map_err(geom)?;
            json!({ "op": "distance", "value": m.distance(&a, &b).map_err(geom)?, "case": t.case.name() })
        }
        Op::Angle => {
            let [v, p, q] = operands(&scene, names)?;
            json!({ "op": "angle", "value": m.angle_lines(&join(&v, &p), &join(&v, &q)).map_err(geom)? })
        }
        Op::SquaredTrig => {
            let [a, b] = operands(&scene, names)?;
            let t = m.translate_trig(&a, &b).map_err(geom)?;
            let r = t.ratios;
            json!({
                "op": "squared_trig",
                "case": t.case.name(),
                "c": [r.c.re, r.c.im],
                "s": [r.s.re, r.s.im],
                "t": format!("{:?}", r.t),
                "magnitude": t.magnitude,
                "geometric": t.geometric,
                "residual": t.residual(),
            })
        }
        Op::Table51 => {
            let [a, b, c] = operands(&scene, names)?;
            let ra = RightAngled::new(m, a, b, c).map_err(geom)?;
            let t = trig::table_5_1(ra.kind(), &ra).map_err(geom)?;
            json!({
                "op": "table_5_1",
                "kind": t.kind.name(),
                "measures": t.measures,
                "rows": t.rows,
                "identities": ra.identity_residuals().map_err(geom)?,
                "residual": t.residual(),
            })
        }
        Op::Laws => {
            let [a, b, c] = operands(&scene, names)?;
            let cfg = TriangleConfig::new(m, a, b, c).map_err(geom)?;
            laws(&cfg).map_err(geom)?
        }
    };
    println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
    Ok(0)
}

fn laws(cfg: &TriangleConfig) -> ckgeom::Result<Value> {
    let (_, sines) = trig::squared_law_of_sines(cfg)?;
    let cos = trig::squared_law_of_cosines(cfg)?;
    let mut out = json!({
        "op": "laws",
        "kind": trig::classify(cfg).name(),
        "law_sines_sq": sines,
        "law_cosines_sq": cos.iter().map(|b| b.residual()).collect::<Vec<_>>(),
        "law_cosines_sq_unique": cos.iter().all(|b| b.unique(1e-8)),
    });
    if cfg.conjugate_side_pairs() == 0 {
        let ot = coherent_orientation(cfg)?;
        out["law_sines"] = json!(ot.law_of_sines().1);
        out["law_cosines"] = json!(ot.law_of_cosines());
        out["dual_law_cosines"] = json!(ot.dual_law_of_cosines());
        let t = translate(cfg)?;
        out["translation"] = json!({ "value_residual": t.value_residual, "laws": t.laws, "projective": t.projective });
    }
    Ok(out)
}

fn draw(name: &str, scene: &str, output: &Path) -> CliResult {
    let scene = if scene == "builtin" { builtin_scene() } else { load_scene(Path::new(scene), true).map_err(usage)? };
    let svg = figure(name, &scene).map_err(|e| match e {
        FigureError::Geom(g) => geom(g),
        other => usage(other),
    })?;
    std::fs::write(output, svg).map_err(|e| (FAILED, format!("cannot write {}: {e}", output.display())))?;
    Ok(0)
}
