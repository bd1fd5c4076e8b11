//! Isometries of the open simplex in its variation-norm model.
//!
//! The Hilbert geometry of the simplex is isometric to
//! `V = R^{n+1} / R(1,...,1)` with the variation norm. Its isometries are
//! `x -> t + pi(s x)` with a translation `t`, a coordinate permutation `pi`
//! and a sign `s = ±1`. The exponential chart carries `V` onto the projectivized
//! positive orthant; translations become positive diagonal maps and the sign
//! flip becomes the coordinate-wise reciprocal.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::cone::PolyCone;
use crate::error::{GeomError, Result};
use crate::linalg::determinant;
use crate::metric::{hilbert_cone, variation_distance};
use crate::rational::{format_point, int, rat, Point, Rational};

pub const MAX_GROUP_N: usize = 6;
pub const MAX_BALL_N: usize = 12;

/// A class of `R^{n+1}` modulo multiples of `(1, ..., 1)`, stored with first coordinate zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VClass(Point);

impl VClass {
    pub fn new(rep: Point) -> Result<Self> {
        let Some(first) = rep.first().cloned() else {
            return Err(GeomError::Degenerate("empty representative".into()));
        };
        Ok(Self(rep.into_iter().map(|v| v - &first).collect()))
    }

    pub fn from_ints(rep: &[i64]) -> Self {
        Self::new(rep.iter().map(|&v| int(v)).collect()).expect("nonempty")
    }

    pub fn zero(len: usize) -> Self {
        Self(vec![Rational::zero(); len])
    }

    pub fn representative(&self) -> &[Rational] {
        &self.0
    }

    /// Number of coordinates, `n + 1`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn norm(&self) -> Rational {
        crate::metric::variation_norm(&self.0)
    }

    pub fn distance(&self, other: &VClass) -> Rational {
        variation_distance(&self.0, &other.0)
    }

    fn neg(&self) -> VClass {
        VClass::new(self.0.iter().map(|v| -v).collect()).expect("nonempty")
    }

    fn add(&self, other: &VClass) -> VClass {
        VClass::new(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()).expect("nonempty")
    }
}

impl fmt::Display for VClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", format_point(&self.0))
    }
}

fn check_perm(perm: &[usize]) -> Result<()> {
    let mut seen = vec![false; perm.len()];
    for &p in perm {
        if p >= perm.len() || seen[p] {
            return Err(GeomError::Degenerate(format!("{perm:?} is not a permutation")));
        }
        seen[p] = true;
    }
    Ok(())
}

/// Moves coordinate `i` to position `perm[i]`.
fn permute<T: Clone>(perm: &[usize], v: &[T]) -> Vec<T> {
    let mut out = v.to_vec();
    for (i, &p) in perm.iter().enumerate() {
        out[p] = v[i].clone();
    }
    out
}

fn invert_perm(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    inv
}

/// `x -> translation + perm(flip ? -x : x)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplexIsometry {
    translation: VClass,
    perm: Vec<usize>,
    flip: bool,
}

impl SimplexIsometry {
    pub fn new(translation: VClass, perm: Vec<usize>, flip: bool) -> Result<Self> {
        check_perm(&perm)?;
        if perm.len() != translation.len() || perm.len() < 2 {
            return Err(GeomError::DimensionMismatch { expected: perm.len(), found: translation.len() });
        }
        Ok(Self { translation, perm, flip })
    }

    pub fn identity(n: usize) -> Self {
        Self { translation: VClass::zero(n + 1), perm: (0..=n).collect(), flip: false }
    }

    pub fn translation_by(t: VClass) -> Self {
        let len = t.len();
        Self { translation: t, perm: (0..len).collect(), flip: false }
    }

    pub fn permutation(perm: Vec<usize>) -> Result<Self> {
        let len = perm.len();
        Self::new(VClass::zero(len), perm, false)
    }

    /// The flip `rho(x) = -x`.
    pub fn rho(n: usize) -> Self {
        Self { flip: true, ..Self::identity(n) }
    }

    pub fn n(&self) -> usize {
        self.perm.len() - 1
    }

    pub fn translation(&self) -> &VClass {
        &self.translation
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn flip(&self) -> bool {
        self.flip
    }

    fn check(&self, len: usize) -> Result<()> {
        if len != self.perm.len() {
            return Err(GeomError::DimensionMismatch { expected: self.perm.len(), found: len });
        }
        Ok(())
    }

    pub fn apply(&self, v: &VClass) -> Result<VClass> {
        self.check(v.len())?;
        let signed = if self.flip { v.neg() } else { v.clone() };
        let moved = VClass::new(permute(&self.perm, &signed.0))?;
        Ok(self.translation.add(&moved))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SimplexIsometry) -> Result<SimplexIsometry> {
        self.check(other.perm.len())?;
        let mut moved = VClass::new(permute(&self.perm, &other.translation.0))?;
        if self.flip {
            moved = moved.neg();
        }
        Ok(SimplexIsometry {
            translation: self.translation.add(&moved),
            perm: other.perm.iter().map(|&i| self.perm[i]).collect(),
            flip: self.flip ^ other.flip,
        })
    }

    pub fn inverse(&self) -> SimplexIsometry {
        let inv = invert_perm(&self.perm);
        let back = VClass::new(permute(&inv, &self.translation.0)).expect("nonempty");
        let translation = if self.flip { back } else { back.neg() };
        SimplexIsometry { translation, perm: inv, flip: self.flip }
    }
}

pub fn apply_isometry(g: &SimplexIsometry, v: &VClass) -> Result<VClass> {
    g.apply(v)
}

pub fn compose(g: &SimplexIsometry, h: &SimplexIsometry) -> Result<SimplexIsometry> {
    g.compose(h)
}

pub fn inverse(g: &SimplexIsometry) -> SimplexIsometry {
    g.inverse()
}

/// Vertices of the unit variation ball: 0/1 vectors other than the two constants.
pub fn var_ball_vertices(n: usize) -> Result<Vec<VClass>> {
    if n == 0 {
        return Err(GeomError::Degenerate("n must be at least 1".into()));
    }
    if n > MAX_BALL_N {
        return Err(GeomError::SizeGuard { what: "variation ball dimension", limit: MAX_BALL_N });
    }
    let len = n + 1;
    let full = (1u32 << len) - 1;
    (1..full)
        .map(|mask| VClass::new((0..len).map(|i| int(i64::from((mask >> i) & 1))).collect()))
        .collect()
}

fn basis_classes(n: usize) -> Vec<VClass> {
    (0..=n)
        .map(|i| {
            let mut e = vec![Rational::zero(); n + 1];
            e[i] = Rational::one();
            VClass::new(e).expect("nonempty")
        })
        .collect()
}

/// Closure of the adjacent transpositions, plus `rho` when `with_flip`, under
/// composition. Elements are identified by their action on `V`.
pub fn point_group(n: usize, with_flip: bool) -> Result<Vec<SimplexIsometry>> {
    if n == 0 {
        return Err(GeomError::Degenerate("n must be at least 1".into()));
    }
    if n > MAX_GROUP_N {
        return Err(GeomError::SizeGuard { what: "simplex dimension", limit: MAX_GROUP_N });
    }
    let mut gens: Vec<SimplexIsometry> = (0..n)
        .map(|i| {
            let mut p: Vec<usize> = (0..=n).collect();
            p.swap(i, i + 1);
            SimplexIsometry::permutation(p).expect("valid")
        })
        .collect();
    if with_flip {
        gens.push(SimplexIsometry::rho(n));
    }
    let basis = basis_classes(n);
    let signature = |g: &SimplexIsometry| -> Vec<VClass> { basis.iter().map(|e| g.apply(e).expect("dims")).collect() };
    let id = SimplexIsometry::identity(n);
    let mut seen: HashSet<Vec<VClass>> = HashSet::from([signature(&id)]);
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for s in &gens {
            let h = s.compose(&g)?;
            if seen.insert(signature(&h)) {
                out.push(h.clone());
                queue.push_back(h);
            }
        }
    }
    Ok(out)
}

/// Order of the point group generated by permutations and `rho`.
pub fn point_group_closure(n: usize) -> Result<usize> {
    Ok(point_group(n, true)?.len())
}

/// Order of the point group of the collineations (permutations only).
pub fn coll_point_group_closure(n: usize) -> Result<usize> {
    Ok(point_group(n, false)?.len())
}

/// `(e^{v_0}, ..., e^{v_n})` for the canonical representative.
pub fn exp_chart(v: &VClass) -> Vec<f64> {
    v.0.iter().map(|c| crate::rational::to_f64(c).exp()).collect()
}

/// Coordinate-wise logarithm, normalized so the first entry is zero.
pub fn log_chart(x: &[f64]) -> Result<Vec<f64>> {
    if x.is_empty() || x.iter().any(|&c| c.partial_cmp(&0.0) != Some(std::cmp::Ordering::Greater) || !c.is_finite()) {
        return Err(GeomError::NotInterior);
    }
    let first = x[0].ln();
    Ok(x.iter().map(|c| c.ln() - first).collect())
}

/// The point `base^{v}` of the positive orthant for an integer exponent class.
pub fn exp_lattice(base: &Rational, exponents: &[i64]) -> Point {
    exponents
        .iter()
        .map(|&k| {
            let p = num_traits::pow(base.clone(), k.unsigned_abs() as usize);
            if k < 0 {
                p.recip()
            } else {
                p
            }
        })
        .collect()
}

/// Integer exponents `k` (with `k_0 = 0`) such that `x` is proportional to `base^k`.
pub fn log_lattice(base: &Rational, x: &[Rational]) -> Result<Vec<i64>> {
    if *base <= Rational::zero() || base.is_one() {
        return Err(GeomError::Degenerate("lattice base must be positive and not one".into()));
    }
    if x.is_empty() || x.iter().any(|c| !c.is_positive()) {
        return Err(GeomError::NotInterior);
    }
    let (big, flip) = if *base > Rational::one() { (base.clone(), false) } else { (base.recip(), true) };
    x.iter()
        .map(|c| {
            let mut r = c / &x[0];
            let inverted = r < Rational::one();
            if inverted {
                r = r.recip();
            }
            let mut k = 0i64;
            while r > Rational::one() {
                r /= &big;
                k += 1;
            }
            if !r.is_one() {
                return Err(GeomError::Degenerate(format!("{} is off the exponent lattice", crate::rational::format_rational(c))));
            }
            Ok(if inverted ^ flip { -k } else { k })
        })
        .collect()
}

/// Coordinate-wise reciprocal on the open positive orthant.
pub fn reciprocal_map(x: &[Rational]) -> Result<Point> {
    if x.iter().any(|c| !c.is_positive()) {
        return Err(GeomError::NotInterior);
    }
    Ok(x.iter().map(Rational::recip).collect())
}

/// Three collinear points of the simplex whose reciprocal images span a
/// three-dimensional space, with the nonzero minor certifying it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollinearityWitness {
    pub points: [Point; 3],
    pub images: [Point; 3],
    pub minor_coords: [usize; 3],
    pub determinant: Rational,
}

/// `None` for `n = 1`, where every triple of the line stays on the line.
pub fn collineation_witness_failure(n: usize) -> Result<Option<CollinearityWitness>> {
    if n == 0 {
        return Err(GeomError::Degenerate("n must be at least 1".into()));
    }
    if n == 1 {
        return Ok(None);
    }
    let r = rat(1, 4) / int(n as i64 - 1);
    let build = |a: Rational, b: Rational| -> Point {
        let mut v = vec![r.clone(); n + 1];
        v[0] = a;
        v[1] = b;
        v
    };
    let p = build(rat(1, 2), rat(1, 4));
    let q = build(rat(1, 4), rat(1, 2));
    let m: Point = p.iter().zip(&q).map(|(a, b)| (a + b) / int(2)).collect();
    let images = [reciprocal_map(&p)?, reciprocal_map(&q)?, reciprocal_map(&m)?];
    let minor_coords = [0, 1, 2];
    let rows: Vec<Vec<Rational>> = images.iter().map(|v| minor_coords.iter().map(|&i| v[i].clone()).collect()).collect();
    let det = determinant(&rows);
    if det.is_zero() {
        return Err(GeomError::Inconsistent("witness images are collinear".into()));
    }
    Ok(Some(CollinearityWitness { points: [p, q, m], images, minor_coords, determinant: det }))
}

/// The linear map `x -> P D x` with a permutation `P` and positive diagonal `D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplexCollineation {
    perm: Vec<usize>,
    diag: Point,
}

pub fn simplex_collineation(perm: Vec<usize>, diag: Point) -> Result<SimplexCollineation> {
    check_perm(&perm)?;
    if perm.len() != diag.len() {
        return Err(GeomError::DimensionMismatch { expected: perm.len(), found: diag.len() });
    }
    if diag.iter().any(|d| !d.is_positive()) {
        return Err(GeomError::Degenerate("diagonal entries must be positive".into()));
    }
    Ok(SimplexCollineation { perm, diag })
}

impl SimplexCollineation {
    pub fn apply(&self, x: &[Rational]) -> Result<Point> {
        if x.len() != self.diag.len() {
            return Err(GeomError::DimensionMismatch { expected: self.diag.len(), found: x.len() });
        }
        let scaled: Point = x.iter().zip(&self.diag).map(|(a, d)| a * d).collect();
        Ok(permute(&self.perm, &scaled))
    }

    /// The chart isometry this map induces, for a diagonal on the `base` lattice.
    pub fn chart_isometry(&self, base: &Rational) -> Result<SimplexIsometry> {
        let k = log_lattice(base, &self.diag)?;
        let t = VClass::from_ints(&permute(&self.perm, &k));
        SimplexIsometry::new(t, self.perm.clone(), false)
    }
}

/// True iff `map` preserves the Hilbert distance of `c` on every pair of samples.
pub fn is_metric_preserving(
    map: impl Fn(&[Rational]) -> Result<Point>,
    c: &PolyCone,
    samples: &[Point],
) -> Result<bool> {
    let images = samples.iter().map(|s| map(s)).collect::<Result<Vec<_>>>()?;
    if images.iter().any(|y| !c.is_interior(y)) {
        return Err(GeomError::NotInterior);
    }
    for i in 0..samples.len() {
        for j in i + 1..samples.len() {
            if hilbert_cone(&samples[i], &samples[j], c)? != hilbert_cone(&images[i], &images[j], c)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::{m_ratio, LogValue};
    use crate::rational::ipoint;

    #[test]
    fn action_examples() {
        let v = VClass::from_ints(&[1, 0, 0]);
        assert_eq!(SimplexIsometry::identity(2).apply(&v).unwrap(), v);
        let flipped = SimplexIsometry::rho(2).apply(&v).unwrap();
        assert_eq!(flipped, VClass::from_ints(&[-1, 0, 0]));
        assert_eq!(flipped.norm(), v.norm());
        let swap = SimplexIsometry::permutation(vec![1, 0, 2]).unwrap();
        assert_eq!(swap.apply(&v).unwrap(), VClass::from_ints(&[0, 1, 0]));
    }

    #[test]
    fn group_law() {
        let g = SimplexIsometry::new(VClass::from_ints(&[0, 3, -1]), vec![2, 0, 1], true).unwrap();
        let h = SimplexIsometry::new(VClass::from_ints(&[0, -2, 5]), vec![1, 0, 2], false).unwrap();
        let v = VClass::from_ints(&[4, -1, 7]);
        assert_eq!(g.compose(&h).unwrap().apply(&v).unwrap(), g.apply(&h.apply(&v).unwrap()).unwrap());
        assert_eq!(g.compose(&g.inverse()).unwrap(), SimplexIsometry::identity(2));
        assert_eq!(g.inverse().compose(&g).unwrap(), SimplexIsometry::identity(2));
        let rr = SimplexIsometry::rho(2).compose(&SimplexIsometry::rho(2)).unwrap();
        assert!(!rr.flip());
        assert!(SimplexIsometry::new(VClass::zero(3), vec![0, 0, 1], false).is_err());
    }

    #[test]
    fn ball_vertices() {
        assert_eq!(var_ball_vertices(1).unwrap().len(), 2);
        assert_eq!(var_ball_vertices(2).unwrap().len(), 6);
        assert_eq!(var_ball_vertices(3).unwrap().len(), 14);
        assert!(var_ball_vertices(3).unwrap().iter().all(|v| v.norm().is_one()));
        assert!(var_ball_vertices(13).is_err());
    }

    #[test]
    fn group_orders() {
        assert_eq!(point_group_closure(2).unwrap(), 12);
        assert_eq!(point_group_closure(3).unwrap(), 48);
        assert_eq!(coll_point_group_closure(3).unwrap(), 24);
        assert_eq!(point_group_closure(1).unwrap(), 2);
        assert_eq!(coll_point_group_closure(1).unwrap(), 2);
        assert!(point_group_closure(7).is_err());
    }

    #[test]
    fn charts() {
        let zero = VClass::zero(3);
        assert!(exp_chart(&zero).iter().all(|&c| c == 1.0));
        let v = VClass::new(vec![rat(1, 2), rat(-3, 4), int(2)]).unwrap();
        let back = log_chart(&exp_chart(&v)).unwrap();
        for (a, b) in back.iter().zip(v.representative()) {
            assert!((a - crate::rational::to_f64(b)).abs() < 1e-12);
        }
        // 2^(0,1,2) and 2^(1,1,0): Hilbert argument 8 = 2^3, variation distance 3
        let two = int(2);
        let (x, y) = (exp_lattice(&two, &[0, 1, 2]), exp_lattice(&two, &[1, 1, 0]));
        assert_eq!(x, ipoint(&[1, 2, 4]));
        let d = hilbert_cone(&x, &y, &PolyCone::positive_orthant(3)).unwrap();
        assert_eq!(d, LogValue::Finite(int(8)));
        let (kx, ky) = (log_lattice(&two, &x).unwrap(), log_lattice(&two, &y).unwrap());
        assert_eq!(VClass::from_ints(&kx).distance(&VClass::from_ints(&ky)), int(3));
        assert_eq!(log_lattice(&rat(1, 2), &x).unwrap(), vec![0, -1, -2]);
        assert!(log_lattice(&two, &ipoint(&[1, 3])).is_err());
        assert!(log_chart(&[1.0, 0.0]).is_err());
    }

    #[test]
    fn reciprocal_examples() {
        let p3 = PolyCone::positive_orthant(3);
        let one = ipoint(&[1, 1, 1]);
        assert_eq!(reciprocal_map(&one).unwrap(), one);
        let x = ipoint(&[1, 2, 4]);
        let rx = reciprocal_map(&x).unwrap();
        assert_eq!(rx, vec![int(1), rat(1, 2), rat(1, 4)]);
        assert_eq!(hilbert_cone(&one, &x, &p3).unwrap(), LogValue::Finite(int(4)));
        assert_eq!(hilbert_cone(&one, &rx, &p3).unwrap(), LogValue::Finite(int(4)));
        assert_eq!(reciprocal_map(&rx).unwrap(), x);
        let y = ipoint(&[3, 1, 2]);
        let ry = reciprocal_map(&y).unwrap();
        assert_eq!(m_ratio(&ry, &rx, &p3).unwrap(), m_ratio(&x, &y, &p3).unwrap());
        assert!(is_metric_preserving(reciprocal_map, &p3, &[one, x, y]).unwrap());
        assert!(reciprocal_map(&ipoint(&[1, 0])).is_err());
    }

    #[test]
    fn witness() {
        assert!(collineation_witness_failure(1).unwrap().is_none());
        let w = collineation_witness_failure(2).unwrap().unwrap();
        let expected = determinant(&[ipoint(&[2, 4, 4]), ipoint(&[4, 2, 4]), vec![rat(8, 3), rat(8, 3), int(4)]]);
        assert_eq!(w.determinant, expected);
        assert_eq!(w.determinant, rat(-16, 3));
        for p in &w.points {
            assert_eq!(p.iter().sum::<Rational>(), int(1));
        }
        assert!(!collineation_witness_failure(3).unwrap().unwrap().determinant.is_zero());
    }

    #[test]
    fn collineations() {
        let p3 = PolyCone::positive_orthant(3);
        let c = simplex_collineation(vec![0, 1, 2], ipoint(&[1, 2, 4])).unwrap();
        assert_eq!(c.chart_isometry(&int(2)).unwrap().translation(), &VClass::from_ints(&[0, 1, 2]));
        let samples = vec![ipoint(&[1, 1, 1]), ipoint(&[1, 2, 4]), ipoint(&[5, 1, 3])];
        assert!(is_metric_preserving(|x| c.apply(x), &p3, &samples).unwrap());
        let pc = simplex_collineation(vec![2, 0, 1], vec![rat(1, 3), int(2), int(1)]).unwrap();
        assert!(is_metric_preserving(|x| pc.apply(x), &p3, &samples).unwrap());
        assert!(simplex_collineation(vec![0, 1], ipoint(&[1, 0])).is_err());

        // a shear of the square cone that fixes the base point but bends chords
        let sq = crate::cone::cone_from_polytope(&crate::shapes::square()).unwrap();
        let shear = |x: &[Rational]| -> Result<Point> { Ok(vec![x[0].clone(), &x[1] + &x[0] / int(4) - &x[2] / int(8), x[2].clone()]) };
        let pts = vec![crate::rational::point(&[(1, 4), (1, 4), (1, 1)]), crate::rational::point(&[(1, 4), (3, 4), (1, 1)])];
        assert!(!is_metric_preserving(shear, &sq, &pts).unwrap());
    }
}
