//! Polytope files, point lists and Busemann point specifications.

use std::fmt;
use std::path::Path;

use serde::Deserialize;

use polyhilbert::cone::{cone_from_polytope, HPolytope, PolyCone};
use polyhilbert::rational::{parse_point, parse_rational, Point};
use polyhilbert::GeomError;

/// Failure classes, mapped to process exit codes.
#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Parse(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Domain(m) => write!(f, "error: {m}"),
        }
    }
}

impl From<GeomError> for CliError {
    fn from(e: GeomError) -> Self {
        match e {
            GeomError::Parse(m) => CliError::Parse(m),
            other => CliError::Domain(other.to_string()),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FacetSpec {
    normal: Vec<String>,
    offset: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PolytopeFile {
    dim: usize,
    facets: Vec<FacetSpec>,
}

/// A polytope with its cone, keeping track of file facet numbering.
pub struct Domain {
    pub polytope: HPolytope,
    pub cone: PolyCone,
    /// 1-based file position of each cone facet.
    file_index: Vec<usize>,
}

impl Domain {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))?;
        let file: PolytopeFile = serde_json::from_str(&text).map_err(|e| CliError::Parse(e.to_string()))?;
        let mut halfspaces = Vec::with_capacity(file.facets.len());
        for f in &file.facets {
            let normal = f.normal.iter().map(|s| parse_rational(s)).collect::<Result<Point, _>>()?;
            if normal.len() != file.dim {
                return Err(CliError::Parse(format!("normal of length {} in dimension {}", normal.len(), file.dim)));
            }
            halfspaces.push((normal, parse_rational(&f.offset)?));
        }
        let polytope = HPolytope::new(file.dim, halfspaces)?;
        let cone = cone_from_polytope(&polytope)?;
        let lifted: Vec<Point> = polytope
            .halfspaces()
            .iter()
            .map(|(a, b)| a.coeffs().iter().cloned().chain([-b.clone()]).collect())
            .collect();
        let as_given = PolyCone::unreduced(file.dim + 1, lifted)?;
        let file_index = cone
            .facets()
            .iter()
            .map(|f| as_given.facets().iter().position(|g| g == f).expect("reduced facets come from the file") + 1)
            .collect();
        Ok(Self { polytope, cone, file_index })
    }

    pub fn to_file_indices(&self, cone_indices: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = cone_indices.iter().map(|&i| self.file_index[i]).collect();
        out.sort_unstable();
        out
    }

    pub fn cone_indices_of(&self, file_indices: &[usize]) -> Result<Vec<usize>, CliError> {
        file_indices
            .iter()
            .map(|k| {
                self.file_index
                    .iter()
                    .position(|f| f == k)
                    .ok_or_else(|| CliError::Domain(format!("facet {k} is not a facet of the polytope")))
            })
            .collect()
    }

    pub fn point(&self, text: &str) -> Result<Point, CliError> {
        let p = parse_point(text)?;
        if p.len() != self.polytope.dim() {
            return Err(CliError::Domain(format!("expected {} coordinates, got {}", self.polytope.dim(), p.len())));
        }
        Ok(p)
    }

    pub fn cone_point(&self, text: &str) -> Result<Point, CliError> {
        let p = parse_point(text)?;
        if p.len() != self.cone.ambient_dim() {
            return Err(CliError::Domain(format!(
                "expected {} cone coordinates, got {}",
                self.cone.ambient_dim(),
                p.len()
            )));
        }
        Ok(p)
    }
}

/// Busemann point data given on the command line, in cone coordinates.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BusemannSpec {
    pub x: String,
    pub cone_index: Vec<usize>,
    pub p: String,
}

impl BusemannSpec {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(format!("Busemann point: {e}")))
    }
}
