//! Tangent cones of a polyhedral cone and the family `T(C)` they generate.

use itertools::Itertools;

use crate::cone::{IndexSet, PolyCone, MAX_ENUM_FACETS};
use crate::error::{GeomError, Result};
use crate::rational::{is_zero_vector, Rational};

/// Facets of `C` active at `z`; all of them at the origin.
pub fn tangent_cone_indices(c: &PolyCone, z: &[Rational]) -> Result<IndexSet> {
    if z.len() != c.ambient_dim() {
        return Err(GeomError::DimensionMismatch { expected: c.ambient_dim(), found: z.len() });
    }
    if is_zero_vector(z) {
        return Ok((0..c.num_facets()).collect());
    }
    c.active_set(z)
}

/// `tau(C, z)`: the cone cut out by the facets active at `z`.
///
/// Interior points and the origin both give `C` back.
pub fn tangent_cone(c: &PolyCone, z: &[Rational]) -> Result<PolyCone> {
    let idx = tangent_cone_indices(c, z)?;
    if idx.is_empty() {
        return Ok(c.clone());
    }
    c.sub_cone(&idx)
}

/// A member `C_I` of the tangent family, labelled by its facet subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangentFamilyEntry {
    pub index_set: IndexSet,
    pub cone: PolyCone,
}

/// All cones `C_I` over nonempty `I`, deduplicated by set equality.
/// The first index set reaching a given cone labels it.
pub fn tangent_family(c: &PolyCone) -> Result<Vec<TangentFamilyEntry>> {
    let n = c.num_facets();
    if n > MAX_ENUM_FACETS {
        return Err(GeomError::SizeGuard { what: "facet count", limit: MAX_ENUM_FACETS });
    }
    let mut out: Vec<TangentFamilyEntry> = Vec::new();
    for size in 1..=n {
        for index_set in (0..n).combinations(size) {
            let cone = c.sub_cone(&index_set)?;
            if !out.iter().any(|e| e.cone.same_cone(&cone)) {
                out.push(TangentFamilyEntry { index_set, cone });
            }
        }
    }
    Ok(out)
}

/// Dimension of the Hilbert geometry of `T`: ambient dimension minus one minus lineality.
pub fn hilbert_dimension(t: &PolyCone) -> usize {
    (t.ambient_dim() - 1).saturating_sub(t.lineality_dim())
}
