//! Busemann points of a polyhedral Hilbert geometry, the detour cost and
//! detour metric between them, and the resulting decomposition of the
//! horoboundary into parts.
//!
//! A Busemann point is stored as the data `(x, S, p)` of the horofunction
//!
//! ```text
//! xi(w) = RF_C(w, x) - RF_C(b, x) + F_S(w, p) - F_S(b, p)
//! ```
//!
//! where `x` is a nonzero boundary point of `C`, `S = C_J` for a nonempty
//! subset `J` of the facets active at `x`, `p` is interior to `S` and `b` is a
//! fixed base point in `C`.

use std::fmt;

use itertools::Itertools;

use crate::cone::{face_from_active, Face, IndexSet, PolyCone};
use crate::error::{GeomError, Result};
use crate::linalg::project_out;
use crate::metric::{face_hilbert, face_m_ratio, hilbert_cone, m_ratio, LogValue};
use crate::rational::{normalize_leading, Point, Rational};
use crate::tangent::hilbert_dimension;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BusemannPoint {
    base_cone: PolyCone,
    x: Point,
    cone_index: IndexSet,
    funk_cone: PolyCone,
    p: Point,
    b: Point,
}

impl BusemannPoint {
    /// Validates and canonicalizes `(x, C_J, p)` over `C` with base point `b`.
    ///
    /// `x` is rescaled so its first nonzero coordinate is `±1`; `p` loses its
    /// component along the lineality space of `C_J` and is rescaled the same way.
    pub fn new(c: &PolyCone, x: &[Rational], cone_index: &[usize], p: &[Rational], b: &[Rational]) -> Result<Self> {
        if !c.is_proper() {
            return Err(GeomError::InvalidBusemann("base cone must be proper".into()));
        }
        let d = c.ambient_dim();
        for v in [x, p, b] {
            if v.len() != d {
                return Err(GeomError::DimensionMismatch { expected: d, found: v.len() });
            }
        }
        if !c.is_interior(b) {
            return Err(GeomError::NotInterior);
        }
        let face = boundary_face(c, x)?;
        let mut cone_index = cone_index.to_vec();
        cone_index.sort_unstable();
        cone_index.dedup();
        if cone_index.is_empty() || !cone_index.iter().all(|i| face.active().contains(i)) {
            return Err(GeomError::InvalidBusemann("cone index set must be a nonempty subset of the active facets".into()));
        }
        let funk_cone = c.sub_cone(&cone_index)?;
        if !funk_cone.is_interior(p) {
            return Err(GeomError::InvalidBusemann("reference point is not interior to its cone".into()));
        }
        let p = normalize_leading(&project_out(p, funk_cone.lineality_basis()));
        Ok(Self { base_cone: c.clone(), x: normalize_leading(x), cone_index, funk_cone, p, b: b.to_vec() })
    }

    pub fn base_cone(&self) -> &PolyCone {
        &self.base_cone
    }

    pub fn boundary_point(&self) -> &[Rational] {
        &self.x
    }

    /// Facet subset `J` with `S = C_J`, sorted, 0-based in the base cone's order.
    pub fn cone_index(&self) -> &[usize] {
        &self.cone_index
    }

    pub fn funk_cone(&self) -> &PolyCone {
        &self.funk_cone
    }

    pub fn funk_point(&self) -> &[Rational] {
        &self.p
    }

    pub fn base_point(&self) -> &[Rational] {
        &self.b
    }

    /// The same horofunction data normalized at a different base point.
    pub fn rebase(&self, b: &[Rational]) -> Result<Self> {
        Self::new(&self.base_cone, &self.x, &self.cone_index, &self.p, b)
    }

    fn face(&self) -> Face {
        face_from_active(&self.base_cone, self.base_cone.active_set(&self.x).expect("validated"))
    }

    pub fn active_set(&self) -> IndexSet {
        self.base_cone.active_set(&self.x).expect("validated")
    }
}

impl fmt::Display for BusemannPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use crate::rational::format_point;
        write!(f, "(x={}, J={:?}, p={})", format_point(&self.x), self.cone_index, format_point(&self.p))
    }
}

fn boundary_face(c: &PolyCone, x: &[Rational]) -> Result<Face> {
    if crate::rational::is_zero_vector(x) {
        return Err(GeomError::ZeroPoint);
    }
    let active = c.active_set(x)?;
    if active.is_empty() {
        return Err(GeomError::NotBoundary);
    }
    Ok(face_from_active(c, active))
}

/// Horofunction limit of the straight line `(1-t) z + t y` as `t -> 0`.
pub fn busemann_from_line(c: &PolyCone, z: &[Rational], y: &[Rational], b: &[Rational]) -> Result<BusemannPoint> {
    if !c.is_interior(y) {
        return Err(GeomError::NotInterior);
    }
    let face = boundary_face(c, z)?;
    BusemannPoint::new(c, z, face.active(), y, b)
}

/// `xi(w)` as a log value (the argument may be below one).
pub fn busemann_eval(g: &BusemannPoint, w: &[Rational]) -> Result<LogValue> {
    let c = &g.base_cone;
    if !c.is_interior(w) {
        return Err(GeomError::NotInterior);
    }
    let s = &g.funk_cone;
    let r = m_ratio(&g.x, w, c)? / m_ratio(&g.x, &g.b, c)?;
    let f = m_ratio(w, &g.p, s)? / m_ratio(&g.b, &g.p, s)?;
    LogValue::from_arg(r * f)
}

fn check_compatible(g: &BusemannPoint, h: &BusemannPoint) -> Result<()> {
    if g.b != h.b || !g.base_cone.same_cone(&h.base_cone) || g.base_cone.facets() != h.base_cone.facets() {
        return Err(GeomError::MismatchedBase);
    }
    Ok(())
}

/// Detour cost `H(g, h)` in closed form; `+inf` unless the boundary point of
/// `h` lies in the closed face of `g`'s and `S ⊆ T`.
pub fn detour_cost(g: &BusemannPoint, h: &BusemannPoint) -> Result<LogValue> {
    check_compatible(g, h)?;
    let c = &g.base_cone;
    let face = g.face();
    if !face.contains(&h.x) || !g.funk_cone.is_subset_of(&h.funk_cone) {
        return Ok(LogValue::PlusInfinity);
    }
    let (s, t) = (&g.funk_cone, &h.funk_cone);
    // RF_C(b,x) + RF_F(x,y) - RF_C(b,y)
    let horo = m_ratio(&g.x, &g.b, c)? * face_m_ratio(&h.x, &g.x, &face)? / m_ratio(&h.x, &g.b, c)?;
    // F_S(b,p) + F_T(p,q) - F_T(b,q)
    let funk = m_ratio(&g.b, &g.p, s)? * m_ratio(&g.p, &h.p, t)? / m_ratio(&g.b, &h.p, t)?;
    LogValue::from_arg(horo * funk)
}

/// Detour metric `H(g,h) + H(h,g)`. When finite it is cross-checked against
/// the sum of the face Hilbert distance and the Hilbert distance in `S`.
pub fn detour_metric(g: &BusemannPoint, h: &BusemannPoint) -> Result<LogValue> {
    let delta = &detour_cost(g, h)? + &detour_cost(h, g)?;
    if delta.is_finite() {
        let expected = &face_hilbert(&g.x, &h.x, &g.face())? + &hilbert_cone(&g.p, &h.p, &g.funk_cone)?;
        if expected != delta {
            return Err(GeomError::Inconsistent(format!("detour metric {delta} differs from {expected}")));
        }
    }
    Ok(delta)
}

/// Identifies a part by the active set of its face and the facet subset of its cone.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartId {
    pub face_active: IndexSet,
    pub cone_index: IndexSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PartClass {
    VertexPart,
    FacetPart,
    Other,
}

impl PartClass {
    pub fn label(self) -> &'static str {
        match self {
            PartClass::VertexPart => "vertex",
            PartClass::FacetPart => "facet",
            PartClass::Other => "other",
        }
    }
}

pub fn part_of(g: &BusemannPoint) -> PartId {
    PartId { face_active: g.active_set(), cone_index: g.cone_index.clone() }
}

/// All parts `(F, C_J)` over the nonzero faces `F` of a proper cone, with `J`
/// ranging over nonempty subsets of the facets active on `F`.
pub fn enumerate_parts(c: &PolyCone) -> Result<Vec<PartId>> {
    if !c.is_proper() {
        return Err(GeomError::Degenerate("parts are defined for proper cones".into()));
    }
    let mut out = Vec::new();
    for (active, _) in c.boundary_faces()? {
        let mut cones: Vec<PolyCone> = Vec::new();
        for size in 1..=active.len() {
            for j in active.iter().copied().combinations(size) {
                let cone = c.sub_cone(&j)?;
                if !cones.iter().any(|k| k.same_cone(&cone)) {
                    cones.push(cone);
                    out.push(PartId { face_active: active.clone(), cone_index: j });
                }
            }
        }
    }
    Ok(out)
}

fn validate_part(c: &PolyCone, id: &PartId) -> Result<Face> {
    let valid = !id.cone_index.is_empty()
        && id.cone_index.iter().all(|i| id.face_active.contains(i))
        && c.realize_active_set(&id.face_active).is_some();
    if !valid {
        return Err(GeomError::Degenerate(format!("unknown part {id:?}")));
    }
    Ok(face_from_active(c, id.face_active.clone()))
}

/// Vertex parts come first, so in dimension one every part is a vertex part.
pub fn classify_part(c: &PolyCone, id: &PartId) -> Result<PartClass> {
    let face = validate_part(c, id)?;
    let n = c.ambient_dim() - 1;
    let full = id.cone_index == id.face_active;
    Ok(match face.dim() {
        1 if full => PartClass::VertexPart,
        d if full && d == n => PartClass::FacetPart,
        _ => PartClass::Other,
    })
}

/// Dimension of a part under the detour metric: `dim F - 1 + dim S`.
pub fn part_dimension(c: &PolyCone, id: &PartId) -> Result<usize> {
    let face = validate_part(c, id)?;
    Ok(face.dim() - 1 + hilbert_dimension(&c.sub_cone(&id.cone_index)?))
}

/// `[d_C(w, gamma(t)) - d_C(b, gamma(t))] - xi(w)` along `gamma(t) = (1-t) z + t y`.
pub fn horolimit_residual(
    c: &PolyCone,
    z: &[Rational],
    y: &[Rational],
    b: &[Rational],
    w: &[Rational],
    t: &Rational,
) -> Result<LogValue> {
    let g = busemann_from_line(c, z, y, b)?;
    let one = Rational::from_integer(1.into());
    if *t <= Rational::from_integer(0.into()) || *t > one {
        return Err(GeomError::Degenerate("t must lie in (0, 1]".into()));
    }
    let gamma: Point = z.iter().zip(y).map(|(zi, yi)| (&one - t) * zi + t * yi).collect();
    let dw = hilbert_cone(w, &gamma, c)?;
    let db = hilbert_cone(b, &gamma, c)?;
    Ok(&(&dw - &db) - &busemann_eval(&g, w)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::cone_from_polytope;
    use crate::metric::{face_funk, face_reverse_funk, funk};
    use crate::rational::{int, ipoint, point, rat};
    use crate::shapes;

    fn square_cone() -> PolyCone {
        cone_from_polytope(&shapes::square()).unwrap()
    }

    #[test]
    fn orthant_line_limit() {
        let p3 = PolyCone::positive_orthant(3);
        let one = ipoint(&[1, 1, 1]);
        let g = busemann_from_line(&p3, &ipoint(&[1, 0, 0]), &one, &one).unwrap();
        assert_eq!(g.cone_index(), &[1, 2]);
        assert!(g.funk_cone().same_cone(&PolyCone::new(3, vec![ipoint(&[0, 1, 0]), ipoint(&[0, 0, 1])]).unwrap()));
        // xi(w) = -log w1 + log max(w2, w3)
        assert_eq!(busemann_eval(&g, &ipoint(&[2, 1, 4])).unwrap(), LogValue::Finite(int(2)));
        assert_eq!(busemann_eval(&g, &ipoint(&[3, 5, 2])).unwrap(), LogValue::Finite(rat(5, 3)));
        assert!(busemann_eval(&g, &one).unwrap().is_zero());
        assert_eq!(busemann_eval(&g, &ipoint(&[0, 1, 1])), Err(GeomError::NotInterior));
    }

    #[test]
    fn square_line_limit() {
        let sq = square_cone();
        let b = point(&[(1, 2), (1, 2), (1, 1)]);
        let g = busemann_from_line(&sq, &point(&[(0, 1), (1, 2), (1, 1)]), &b, &b).unwrap();
        assert_eq!(g.cone_index(), &[0]);
        assert!(g.funk_cone().same_cone(&PolyCone::new(3, vec![ipoint(&[1, 0, 0])]).unwrap()));
        // p loses its lineality component: only the first coordinate survives
        assert_eq!(g.funk_point(), &ipoint(&[1, 0, 0])[..]);
        assert!(busemann_eval(&g, &b).unwrap().is_zero());
    }

    #[test]
    fn construction_errors() {
        let p3 = PolyCone::positive_orthant(3);
        let one = ipoint(&[1, 1, 1]);
        assert_eq!(busemann_from_line(&p3, &one, &one, &one).unwrap_err(), GeomError::NotBoundary);
        assert_eq!(busemann_from_line(&p3, &ipoint(&[0, 0, 0]), &one, &one).unwrap_err(), GeomError::ZeroPoint);
        assert_eq!(busemann_from_line(&p3, &ipoint(&[-1, 0, 0]), &one, &one).unwrap_err(), GeomError::Exterior);
        assert!(BusemannPoint::new(&p3, &ipoint(&[1, 0, 0]), &[0], &one, &one).is_err());
    }

    #[test]
    fn reference_point_invariance() {
        let sq = square_cone();
        let b = point(&[(1, 2), (1, 2), (1, 1)]);
        let x = point(&[(0, 1), (1, 4), (1, 1)]);
        let p = point(&[(1, 3), (2, 3), (1, 1)]);
        let g = BusemannPoint::new(&sq, &x, &[0], &p, &b).unwrap();
        let shifted: Point = p.iter().zip(&ipoint(&[0, 5, -7])).map(|(a, z)| a * int(2) + z).collect();
        let h = BusemannPoint::new(&sq, &x, &[0], &shifted, &b).unwrap();
        assert_eq!(g, h);
        for w in [point(&[(1, 3), (3, 4), (1, 1)]), point(&[(7, 8), (1, 8), (1, 1)])] {
            assert_eq!(busemann_eval(&g, &w).unwrap(), busemann_eval(&h, &w).unwrap());
        }
    }

    #[test]
    fn detour_examples() {
        let sq = square_cone();
        let b = point(&[(1, 2), (1, 2), (1, 1)]);
        let x = point(&[(0, 1), (1, 4), (1, 1)]);
        let y = point(&[(0, 1), (1, 2), (1, 1)]);
        let g = busemann_from_line(&sq, &x, &b, &b).unwrap();
        let h = busemann_from_line(&sq, &y, &b, &b).unwrap();
        assert!(detour_cost(&g, &g).unwrap().is_zero());
        assert_eq!(detour_cost(&g, &h).unwrap(), LogValue::Finite(int(2)));
        assert_eq!(detour_cost(&h, &g).unwrap(), LogValue::Finite(rat(3, 2)));
        assert_eq!(detour_metric(&g, &h).unwrap(), LogValue::Finite(int(3)));

        // term-by-term against the individual Funk quantities
        let face = crate::cone::face_of(&sq, &x).unwrap();
        let s = g.funk_cone();
        let horo = LogValue::Finite(m_ratio(&x, &b, &sq).unwrap());
        let horo = &(&horo + &face_reverse_funk(&x, &y, &face).unwrap()) - &LogValue::Finite(m_ratio(&y, &b, &sq).unwrap());
        let fk = &(&funk(&b, g.funk_point(), s).unwrap() + &funk(g.funk_point(), h.funk_point(), s).unwrap())
            - &funk(&b, h.funk_point(), s).unwrap();
        assert_eq!(&horo + &fk, detour_cost(&g, &h).unwrap());
        assert_eq!(face_funk(&y, &x, &face).unwrap(), LogValue::Finite(int(2)));

        let p3 = PolyCone::positive_orthant(3);
        let one = ipoint(&[1, 1, 1]);
        let e1 = busemann_from_line(&p3, &ipoint(&[1, 0, 0]), &one, &one).unwrap();
        let e2 = busemann_from_line(&p3, &ipoint(&[0, 1, 0]), &one, &one).unwrap();
        assert_eq!(detour_cost(&e1, &e2).unwrap(), LogValue::PlusInfinity);
        assert_eq!(detour_metric(&e1, &e2).unwrap(), LogValue::PlusInfinity);
    }

    #[test]
    fn mismatched_base_rejected() {
        let p3 = PolyCone::positive_orthant(3);
        let one = ipoint(&[1, 1, 1]);
        let g = busemann_from_line(&p3, &ipoint(&[1, 0, 0]), &one, &one).unwrap();
        let h = g.rebase(&ipoint(&[1, 2, 3])).unwrap();
        assert_eq!(detour_cost(&g, &h), Err(GeomError::MismatchedBase));
    }

    #[test]
    fn part_examples() {
        let p3 = PolyCone::positive_orthant(3);
        let one = ipoint(&[1, 1, 1]);
        let g = busemann_from_line(&p3, &ipoint(&[1, 0, 0]), &one, &one).unwrap();
        assert_eq!(part_of(&g), PartId { face_active: vec![1, 2], cone_index: vec![1, 2] });
        let h = BusemannPoint::new(&p3, &ipoint(&[1, 0, 0]), &[1], &one, &one).unwrap();
        assert_ne!(part_of(&g), part_of(&h));
        assert_eq!(detour_metric(&g, &h).unwrap(), LogValue::PlusInfinity);
        let scaled = busemann_from_line(&p3, &ipoint(&[5, 0, 0]), &one, &one).unwrap();
        assert_eq!(part_of(&g), part_of(&scaled));
        assert_eq!(g, scaled);
    }

    fn counts(c: &PolyCone) -> (usize, usize, usize) {
        let parts = enumerate_parts(c).unwrap();
        let class = |k| parts.iter().filter(|p| classify_part(c, p).unwrap() == k).count();
        (class(PartClass::VertexPart), class(PartClass::FacetPart), class(PartClass::Other))
    }

    #[test]
    fn part_counts() {
        assert_eq!(enumerate_parts(&square_cone()).unwrap().len(), 16);
        assert_eq!(counts(&square_cone()), (4, 4, 8));
        assert_eq!(counts(&PolyCone::positive_orthant(3)), (3, 3, 6));
        let iv = cone_from_polytope(&shapes::interval()).unwrap();
        assert_eq!(enumerate_parts(&iv).unwrap().len(), 2);
        assert_eq!(counts(&iv), (2, 0, 0));
    }

    #[test]
    fn part_dimensions() {
        let sq = square_cone();
        for id in enumerate_parts(&sq).unwrap() {
            let dim = part_dimension(&sq, &id).unwrap();
            let class = classify_part(&sq, &id).unwrap();
            assert_eq!(dim == 1, class != PartClass::Other, "{id:?}");
        }
        let bogus = PartId { face_active: vec![0, 1], cone_index: vec![0] };
        assert!(classify_part(&sq, &bogus).is_err());
    }

    #[test]
    fn residual_examples() {
        let p3 = PolyCone::positive_orthant(3);
        let one = ipoint(&[1, 1, 1]);
        let z = ipoint(&[1, 0, 0]);
        assert!(horolimit_residual(&p3, &z, &one, &one, &one, &int(1)).unwrap().is_zero());
        let w = ipoint(&[2, 1, 4]);
        let mut last = f64::INFINITY;
        for k in 4..30 {
            let t = Rational::new(1.into(), num_bigint::BigInt::from(2).pow(k));
            let r = horolimit_residual(&p3, &z, &one, &one, &w, &t).unwrap().to_f64().abs();
            assert!(r <= last + 1e-15);
            last = r;
        }
        assert!(last < 1e-6);
    }
}
