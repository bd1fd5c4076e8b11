//! `polyhilbert`: Hilbert geometry computations on polytopes from the command line.
//!
//! Every command prints one JSON document on stdout. Exit status is 0 on
//! success, 1 for inputs outside a command's domain and 2 for malformed input.

mod input;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use polyhilbert::cone::lift;
use polyhilbert::horo::{classify_part, detour_metric, enumerate_parts, part_dimension, BusemannPoint};
use polyhilbert::metric::{face_hilbert, hilbert_cone, hilbert_cross_ratio, LogValue};
use polyhilbert::rational::{format_point, format_rational};
use polyhilbert::simplex::{coll_point_group_closure, collineation_witness_failure, point_group, MAX_GROUP_N};
use polyhilbert::tangent::{hilbert_dimension, tangent_cone};

use input::{BusemannSpec, CliError, Domain};

#[derive(Parser)]
#[command(name = "polyhilbert", version, about = "Exact Hilbert geometry of polytopes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    CrossRatio,
    Cone,
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert distance between two interior points.
    Dist {
        #[arg(long)]
        polytope: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        /// Use a single formulation instead of computing and comparing both.
        #[arg(long, value_enum)]
        method: Option<Method>,
    },
    /// Parts of the horoboundary with their classification and dimension.
    Parts {
        #[arg(long)]
        polytope: PathBuf,
    },
    /// Detour metric between two Busemann points.
    Detour {
        #[arg(long)]
        polytope: PathBuf,
        #[arg(long)]
        bp1: String,
        #[arg(long)]
        bp2: String,
    },
    /// Isometry group of the n-simplex.
    #[command(group(ArgGroup::new("report").required(true).args(["list_group", "orders", "witness"])))]
    SimplexIsom {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        list_group: bool,
        #[arg(long)]
        orders: bool,
        #[arg(long)]
        witness: bool,
    },
    /// Tangent cone at a boundary point.
    Tangent {
        #[arg(long)]
        polytope: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
    },
}

fn log_report(d: &LogValue) -> Value {
    json!({ "log_arg": d.arg_string(), "value": d.to_f64() })
}

fn dist(polytope: &Path, x: &str, y: &str, method: Option<Method>) -> Result<Value, CliError> {
    let dom = Domain::load(polytope)?;
    let (x, y) = (dom.point(x)?, dom.point(y)?);
    let via_cross = || hilbert_cross_ratio(&dom.polytope, &x, &y);
    let via_cone = || hilbert_cone(&lift(&x), &lift(&y), &dom.cone);
    let d = match method {
        Some(Method::CrossRatio) => via_cross()?,
        Some(Method::Cone) => via_cone()?,
        None => {
            let (a, b) = (via_cross()?, via_cone()?);
            if a != b {
                return Err(CliError::Domain(format!("methods disagree: {} vs {}", a.arg_string(), b.arg_string())));
            }
            a
        }
    };
    Ok(log_report(&d))
}

fn parts(polytope: &Path) -> Result<Value, CliError> {
    let dom = Domain::load(polytope)?;
    let mut counts = serde_json::Map::new();
    for label in ["facet", "other", "vertex"] {
        counts.insert(label.into(), json!(0));
    }
    let mut list = Vec::new();
    for id in enumerate_parts(&dom.cone)? {
        let class = classify_part(&dom.cone, &id)?.label();
        *counts.get_mut(class).expect("known label") = json!(counts[class].as_u64().unwrap_or(0) + 1);
        list.push(json!({
            "face": dom.to_file_indices(&id.face_active),
            "cone_index": dom.to_file_indices(&id.cone_index),
            "class": class,
            "dimension": part_dimension(&dom.cone, &id)?,
        }));
    }
    Ok(json!({ "counts": counts, "parts": list }))
}

fn busemann(dom: &Domain, text: &str) -> Result<BusemannPoint, CliError> {
    let spec = BusemannSpec::parse(text)?;
    let x = dom.cone_point(&spec.x)?;
    let p = dom.cone_point(&spec.p)?;
    let index = dom.cone_indices_of(&spec.cone_index)?;
    let base = lift(&dom.polytope.centroid());
    Ok(BusemannPoint::new(&dom.cone, &x, &index, &p, &base)?)
}

fn detour(polytope: &Path, bp1: &str, bp2: &str) -> Result<Value, CliError> {
    let dom = Domain::load(polytope)?;
    let (g, h) = (busemann(&dom, bp1)?, busemann(&dom, bp2)?);
    let delta = detour_metric(&g, &h)?;
    if !delta.is_finite() {
        return Ok(json!({ "finite": false, "log_arg": "inf" }));
    }
    let face = polyhilbert::cone::face_of(&dom.cone, g.boundary_point())?;
    let d_face = face_hilbert(g.boundary_point(), h.boundary_point(), &face)?;
    let d_cone = hilbert_cone(g.funk_point(), h.funk_point(), g.funk_cone())?;
    Ok(json!({
        "finite": true,
        "log_arg": delta.arg_string(),
        "value": delta.to_f64(),
        "decomposition": [d_face.arg_string(), d_cone.arg_string()],
    }))
}

fn simplex_isom(n: usize, list_group: bool, orders: bool) -> Result<Value, CliError> {
    if n == 0 || n > MAX_GROUP_N {
        return Err(CliError::Domain(format!("n must lie in 1..={MAX_GROUP_N}")));
    }
    if list_group {
        let elements: Vec<Value> = point_group(n, true)?
            .iter()
            .map(|g| json!({ "perm": g.perm().iter().map(|p| p + 1).collect::<Vec<_>>(), "flip": g.flip() }))
            .collect();
        return Ok(json!({ "n": n, "order": elements.len(), "elements": elements }));
    }
    if orders {
        return Ok(json!({
            "isom_point_group": point_group(n, true)?.len(),
            "coll_point_group": coll_point_group_closure(n)?,
        }));
    }
    let witness = collineation_witness_failure(n)?.map(|w| {
        json!({
            "points": w.points.iter().map(|p| format_point(p)).collect::<Vec<_>>(),
            "images": w.images.iter().map(|p| format_point(p)).collect::<Vec<_>>(),
            "minor_coords": w.minor_coords.iter().map(|c| c + 1).collect::<Vec<_>>(),
            "determinant": format_rational(&w.determinant),
        })
    });
    Ok(json!({ "witness": witness }))
}

fn tangent(polytope: &Path, z: &str) -> Result<Value, CliError> {
    let dom = Domain::load(polytope)?;
    let z = lift(&dom.point(z)?);
    let active = dom.cone.active_set(&z)?;
    if active.is_empty() {
        return Err(CliError::Domain("z is an interior point".into()));
    }
    let t = tangent_cone(&dom.cone, &z)?;
    Ok(json!({
        "indices": dom.to_file_indices(&active),
        "lineality_dim": t.lineality_dim(),
        "hilbert_dim": hilbert_dimension(&t),
    }))
}

fn run(cli: Cli) -> Result<Value, CliError> {
    match cli.command {
        Command::Dist { polytope, x, y, method } => dist(&polytope, &x, &y, method),
        Command::Parts { polytope } => parts(&polytope),
        Command::Detour { polytope, bp1, bp2 } => detour(&polytope, &bp1, &bp2),
        Command::SimplexIsom { n, list_group, orders, .. } => simplex_isom(n, list_group, orders),
        Command::Tangent { polytope, z } => tangent(&polytope, &z),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(v) => {
            let text = serde_json::to_string_pretty(&v).expect("serializable");
            // a closed pipe downstream is not an error of ours
            let _ = writeln!(std::io::stdout(), "{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
