//! Polyhedral cones, polytopes and faces.
//!
//! A [`PolyCone`] is the open cone `{x : psi_i(x) > 0 for all i}`. Its facet
//! list is kept irredundant with every functional scaled so that its first
//! nonzero coefficient is `+1` or `-1`. The list keeps the caller's order, so
//! facet indices stay meaningful; set equality of cones is decided on the
//! sorted list (see [`PolyCone::same_cone`]).
//!
//! Faces are represented by active sets: the face of `x` in the closed cone
//! is `{y in cl(C) : psi_i(y) = 0 for every i active at x}`.

use itertools::Itertools;
use num_traits::{One, Signed, Zero};

use crate::error::{GeomError, Result};
use crate::linalg;
use crate::lp;
use crate::rational::{dot, is_zero_vector, normalize_leading, Point, Rational};

/// Sorted list of facet indices (0-based).
pub type IndexSet = Vec<usize>;

/// Maximum facet count for exhaustive subset enumeration.
pub const MAX_ENUM_FACETS: usize = 20;

/// A nonzero linear functional on `R^d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearFunctional(Point);

impl LinearFunctional {
    pub fn new(coeffs: Point) -> Result<Self> {
        if is_zero_vector(&coeffs) {
            return Err(GeomError::ZeroFunctional);
        }
        Ok(Self(coeffs))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        dot(&self.0, x)
    }

    fn normalized(&self) -> Self {
        Self(normalize_leading(&self.0))
    }
}

/// Where a point sits relative to an open cone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PointClass {
    Interior,
    /// On the boundary of the closed cone; carries the nonempty active set.
    Boundary(IndexSet),
    Exterior,
}

/// Open polyhedral cone `{x in R^d : psi_i(x) > 0}` with nonempty interior.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyCone {
    ambient_dim: usize,
    facets: Vec<LinearFunctional>,
    lineality_basis: Vec<Point>,
}

fn check_dim(expected: usize, v: &[Rational]) -> Result<()> {
    if v.len() != expected {
        return Err(GeomError::DimensionMismatch { expected, found: v.len() });
    }
    Ok(())
}

impl PolyCone {
    /// Builds a cone and reduces its facet list to canonical irredundant form.
    pub fn new(ambient_dim: usize, facets: Vec<Point>) -> Result<Self> {
        Ok(irredundant_hrep(&Self::unreduced(ambient_dim, facets)?))
    }

    /// Builds a cone from the facets as given (scaled, but redundancy kept).
    pub fn unreduced(ambient_dim: usize, facets: Vec<Point>) -> Result<Self> {
        if facets.is_empty() {
            return Err(GeomError::Degenerate("a cone needs at least one facet".into()));
        }
        let mut fs = Vec::with_capacity(facets.len());
        for f in facets {
            check_dim(ambient_dim, &f)?;
            fs.push(LinearFunctional::new(f)?.normalized());
        }
        let cone = Self::from_parts(ambient_dim, fs);
        if cone.find_interior_point().is_none() {
            return Err(GeomError::EmptyInterior);
        }
        Ok(cone)
    }

    fn from_parts(ambient_dim: usize, facets: Vec<LinearFunctional>) -> Self {
        let rows: Vec<Point> = facets.iter().map(|f| f.0.clone()).collect();
        let lineality_basis = linalg::nullspace(&rows, ambient_dim);
        Self { ambient_dim, facets, lineality_basis }
    }

    /// The nonnegative orthant's interior `P_d`.
    pub fn positive_orthant(d: usize) -> Self {
        let facets = (0..d)
            .map(|i| {
                let mut v = vec![Rational::zero(); d];
                v[i] = Rational::one();
                LinearFunctional(v)
            })
            .collect();
        Self::from_parts(d, facets)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn facets(&self) -> &[LinearFunctional] {
        &self.facets
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    /// Basis of the lineality space `[0]_C`, the joint kernel of all facets.
    pub fn lineality_basis(&self) -> &[Point] {
        &self.lineality_basis
    }

    pub fn lineality_dim(&self) -> usize {
        self.lineality_basis.len()
    }

    pub fn is_proper(&self) -> bool {
        self.lineality_basis.is_empty()
    }

    pub fn facet_values(&self, w: &[Rational]) -> Vec<Rational> {
        self.facets.iter().map(|f| f.eval(w)).collect()
    }

    pub fn classify(&self, w: &[Rational]) -> Result<PointClass> {
        check_dim(self.ambient_dim, w)?;
        let vals = self.facet_values(w);
        if vals.iter().any(Signed::is_negative) {
            return Ok(PointClass::Exterior);
        }
        let active: IndexSet = vals.iter().positions(Zero::is_zero).collect();
        Ok(if active.is_empty() { PointClass::Interior } else { PointClass::Boundary(active) })
    }

    pub fn is_interior(&self, w: &[Rational]) -> bool {
        w.len() == self.ambient_dim && self.facets.iter().all(|f| f.eval(w).is_positive())
    }

    pub fn in_closure(&self, w: &[Rational]) -> bool {
        w.len() == self.ambient_dim && self.facets.iter().all(|f| !f.eval(w).is_negative())
    }

    /// Active set `I(w)` of a point of the closed cone.
    pub fn active_set(&self, w: &[Rational]) -> Result<IndexSet> {
        match self.classify(w)? {
            PointClass::Interior => Ok(Vec::new()),
            PointClass::Boundary(a) => Ok(a),
            PointClass::Exterior => Err(GeomError::Exterior),
        }
    }

    /// A point with every facet value at least one, if the interior is nonempty.
    pub fn find_interior_point(&self) -> Option<Point> {
        let a: Vec<Point> = self.facets.iter().map(|f| f.0.iter().map(|c| -c).collect()).collect();
        let b = vec![-Rational::one(); a.len()];
        lp::feasible_point(&a, &b, self.ambient_dim)
    }

    /// The cone `C_I` cut out by the facets in `indices`, listed in that order.
    pub fn sub_cone(&self, indices: &[usize]) -> Result<PolyCone> {
        if indices.is_empty() {
            return Err(GeomError::Degenerate("empty facet index set".into()));
        }
        let facets = indices
            .iter()
            .map(|&i| {
                self.facets
                    .get(i)
                    .cloned()
                    .ok_or_else(|| GeomError::Degenerate(format!("facet index {i} out of range")))
            })
            .collect::<Result<Vec<_>>>()?;
        let sub = Self::from_parts(self.ambient_dim, facets);
        Ok(irredundant_hrep(&sub))
    }

    /// Sorted normalized facet list; equal for two irredundant cones iff they are equal as sets.
    pub fn canonical_key(&self) -> Vec<LinearFunctional> {
        let mut k = self.facets.clone();
        k.sort();
        k
    }

    /// Set equality of the two open cones.
    pub fn same_cone(&self, other: &PolyCone) -> bool {
        self.ambient_dim == other.ambient_dim && self.canonical_key() == other.canonical_key()
    }

    /// `self ⊆ other`, decided by Farkas: every facet of `other` must be a
    /// nonnegative combination of the facets of `self`.
    pub fn is_subset_of(&self, other: &PolyCone) -> bool {
        if self.ambient_dim != other.ambient_dim {
            return false;
        }
        let gens: Vec<Point> = self.facets.iter().map(|f| f.0.clone()).collect();
        other.facets.iter().all(|f| gens.contains(&f.0) || lp::conic_combination(&gens, &f.0).is_some())
    }

    /// Realizable active sets of nonzero boundary points, each with a witness
    /// point of that exact active set. Ordered by active-set size, then lexicographically.
    pub fn boundary_faces(&self) -> Result<Vec<(IndexSet, Point)>> {
        let n = self.facets.len();
        if n > MAX_ENUM_FACETS {
            return Err(GeomError::SizeGuard { what: "facet count", limit: MAX_ENUM_FACETS });
        }
        let mut out = Vec::new();
        for size in 1..=n {
            for subset in (0..n).combinations(size) {
                if let Some(w) = self.realize_active_set(&subset) {
                    out.push((subset, w));
                }
            }
        }
        Ok(out)
    }

    /// A nonzero point whose active set is exactly `subset`, if one exists.
    pub fn realize_active_set(&self, subset: &[usize]) -> Option<Point> {
        let mut a = Vec::new();
        let mut b = Vec::new();
        let mut has_inactive = false;
        for (i, f) in self.facets.iter().enumerate() {
            if subset.contains(&i) {
                a.push(f.0.clone());
                b.push(Rational::zero());
                a.push(f.0.iter().map(|c| -c).collect());
                b.push(Rational::zero());
            } else {
                has_inactive = true;
                a.push(f.0.iter().map(|c| -c).collect());
                b.push(-Rational::one());
            }
        }
        if !has_inactive {
            return None;
        }
        lp::feasible_point(&a, &b, self.ambient_dim)
    }
}

/// Removes facets implied by the others, keeping the survivors in their original order.
///
/// With nonempty interior, `psi_j` is implied exactly when it is a nonnegative
/// combination of the remaining functionals.
pub fn irredundant_hrep(c: &PolyCone) -> PolyCone {
    let mut keep: Vec<LinearFunctional> = Vec::new();
    for f in c.facets.iter().map(LinearFunctional::normalized) {
        if !keep.contains(&f) {
            keep.push(f);
        }
    }
    let mut j = 0;
    while j < keep.len() {
        let others: Vec<Point> = keep.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, f)| f.0.clone()).collect();
        if !others.is_empty() && lp::conic_combination(&others, &keep[j].0).is_some() {
            keep.remove(j);
        } else {
            j += 1;
        }
    }
    PolyCone::from_parts(c.ambient_dim, keep)
}

pub fn classify_point(c: &PolyCone, w: &[Rational]) -> Result<PointClass> {
    c.classify(w)
}

pub fn lineality_dim(c: &PolyCone) -> usize {
    c.lineality_dim()
}

pub fn cone_subset(s: &PolyCone, t: &PolyCone) -> bool {
    s.is_subset_of(t)
}

/// The closed face of a nonzero point of the closed cone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    parent: PolyCone,
    active: IndexSet,
    span_basis: Vec<Point>,
}

impl Face {
    pub fn parent(&self) -> &PolyCone {
        &self.parent
    }

    pub fn active(&self) -> &[usize] {
        &self.active
    }

    pub fn span_basis(&self) -> &[Point] {
        &self.span_basis
    }

    /// Linear dimension of the face.
    pub fn dim(&self) -> usize {
        self.span_basis.len()
    }

    /// Membership in the closed face.
    pub fn contains(&self, y: &[Rational]) -> bool {
        self.parent.in_closure(y) && self.active.iter().all(|&i| self.parent.facets[i].eval(y).is_zero())
    }

    /// Membership in the relatively open face (same active set).
    pub fn contains_relative_interior(&self, y: &[Rational]) -> bool {
        self.parent.active_set(y).is_ok_and(|a| a == self.active)
    }

    pub fn inactive(&self) -> impl Iterator<Item = (usize, &LinearFunctional)> {
        self.parent.facets.iter().enumerate().filter(|(i, _)| !self.active.contains(i))
    }
}

pub fn face_of(c: &PolyCone, x: &[Rational]) -> Result<Face> {
    if is_zero_vector(x) {
        check_dim(c.ambient_dim, x)?;
        return Err(GeomError::ZeroPoint);
    }
    let active = c.active_set(x)?;
    Ok(face_from_active(c, active))
}

pub(crate) fn face_from_active(c: &PolyCone, active: IndexSet) -> Face {
    let rows: Vec<Point> = active.iter().map(|&i| c.facets[i].0.clone()).collect();
    let span_basis = linalg::nullspace(&rows, c.ambient_dim);
    Face { parent: c.clone(), active, span_basis }
}

/// True iff `x` and `y` have the same face, i.e. the same active set.
pub fn same_face(c: &PolyCone, x: &[Rational], y: &[Rational]) -> Result<bool> {
    Ok(face_of(c, x)?.active == face_of(c, y)?.active)
}

/// Bounded open polytope `{x in R^n : <a_i, x> > b_i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HPolytope {
    dim: usize,
    halfspaces: Vec<(LinearFunctional, Rational)>,
    vertices: Vec<Point>,
}

/// Maximum dimension and halfspace count accepted for vertex enumeration.
pub const MAX_POLYTOPE_DIM: usize = 6;
pub const MAX_POLYTOPE_HALFSPACES: usize = 32;

impl HPolytope {
    pub fn new(dim: usize, halfspaces: Vec<(Point, Rational)>) -> Result<Self> {
        if dim == 0 || dim > MAX_POLYTOPE_DIM {
            return Err(GeomError::SizeGuard { what: "polytope dimension", limit: MAX_POLYTOPE_DIM });
        }
        if halfspaces.len() > MAX_POLYTOPE_HALFSPACES {
            return Err(GeomError::SizeGuard { what: "halfspace count", limit: MAX_POLYTOPE_HALFSPACES });
        }
        let mut hs = Vec::with_capacity(halfspaces.len());
        for (a, b) in halfspaces {
            check_dim(dim, &a)?;
            hs.push((LinearFunctional::new(a)?, b));
        }
        let mut poly = Self { dim, halfspaces: hs, vertices: Vec::new() };
        poly.check_bounded_with_interior()?;
        poly.vertices = poly.enumerate_vertices()?;
        Ok(poly)
    }

    /// Convex polygon from its vertices listed counter-clockwise.
    pub fn polygon(vertices: &[Point]) -> Result<Self> {
        let k = vertices.len();
        let mut hs = Vec::with_capacity(k);
        for i in 0..k {
            let (p, q) = (&vertices[i], &vertices[(i + 1) % k]);
            check_dim(2, p)?;
            let normal = vec![-(&q[1] - &p[1]), &q[0] - &p[0]];
            let offset = dot(&normal, p);
            hs.push((normal, offset));
        }
        Self::new(2, hs)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn halfspaces(&self) -> &[(LinearFunctional, Rational)] {
        &self.halfspaces
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        x.len() == self.dim && self.halfspaces.iter().all(|(a, b)| a.eval(x) > *b)
    }

    /// Arithmetic mean of the vertices; always an interior point.
    pub fn centroid(&self) -> Point {
        let k = Rational::from_integer(self.vertices.len().into());
        (0..self.dim)
            .map(|j| self.vertices.iter().map(|v| v[j].clone()).sum::<Rational>() / &k)
            .collect()
    }

    fn check_bounded_with_interior(&self) -> Result<()> {
        // maximize s subject to <a_i,x> - b_i >= s, s <= 1
        let n = self.dim;
        let mut a = Vec::new();
        let mut b = Vec::new();
        for (f, off) in &self.halfspaces {
            let mut row: Point = f.coeffs().iter().map(|c| -c).collect();
            row.push(Rational::one());
            a.push(row);
            b.push(-off.clone());
        }
        let mut cap = vec![Rational::zero(); n + 1];
        cap[n] = Rational::one();
        a.push(cap.clone());
        b.push(Rational::one());
        match lp::maximize_free(&cap, &a, &b) {
            lp::LpOutcome::Optimal { value, .. } if value.is_positive() => {}
            _ => return Err(GeomError::EmptyInterior),
        }
        let a: Vec<Point> = self.halfspaces.iter().map(|(f, _)| f.coeffs().iter().map(|c| -c).collect()).collect();
        let b: Vec<Rational> = self.halfspaces.iter().map(|(_, off)| -off.clone()).collect();
        for j in 0..n {
            for sign in [1i64, -1] {
                let mut c = vec![Rational::zero(); n];
                c[j] = Rational::from_integer(sign.into());
                if lp::maximize_free(&c, &a, &b) == lp::LpOutcome::Unbounded {
                    return Err(GeomError::Unbounded);
                }
            }
        }
        Ok(())
    }

    fn enumerate_vertices(&self) -> Result<Vec<Point>> {
        let mut verts: Vec<Point> = Vec::new();
        for subset in (0..self.halfspaces.len()).combinations(self.dim) {
            let a: Vec<Point> = subset.iter().map(|&i| self.halfspaces[i].0.coeffs().to_vec()).collect();
            let b: Vec<Rational> = subset.iter().map(|&i| self.halfspaces[i].1.clone()).collect();
            let Some(v) = linalg::solve(&a, &b) else { continue };
            if self.halfspaces.iter().all(|(f, off)| f.eval(&v) >= *off) && !verts.contains(&v) {
                verts.push(v);
            }
        }
        if verts.len() <= self.dim {
            return Err(GeomError::Degenerate("too few vertices".into()));
        }
        verts.sort();
        Ok(verts)
    }
}

/// All vertices of the closed polytope, sorted lexicographically.
pub fn vertex_enumeration(x: &HPolytope) -> Vec<Point> {
    x.vertices.clone()
}

/// The cone over `X` placed at height `h = 1`, with facets `<a_i, x> - b_i h`.
pub fn cone_from_polytope(x: &HPolytope) -> Result<PolyCone> {
    let facets = x
        .halfspaces
        .iter()
        .map(|(a, b)| {
            let mut v = a.coeffs().to_vec();
            v.push(-b.clone());
            v
        })
        .collect();
    let cone = PolyCone::new(x.dim + 1, facets)?;
    if !cone.is_proper() {
        return Err(GeomError::Unbounded);
    }
    Ok(cone)
}

/// Appends the height coordinate `1`.
pub fn lift(x: &[Rational]) -> Point {
    let mut v = x.to_vec();
    v.push(Rational::one());
    v
}
