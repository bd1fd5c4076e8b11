//! Funk, reverse-Funk and Hilbert distances on polyhedral cones and polytopes.
//!
//! Distances are logarithms of rationals. [`LogValue`] keeps the exact
//! argument and only takes a floating-point logarithm on request, so every
//! identity between distances is checked as an equality of rationals.
//!
//! For a polyhedral cone the gauge `M(y/x; C) = inf {l : y <=_C l x}` is a
//! maximum over the facet functionals: the dual cone is generated by them, and
//! a ratio of linear forms with positive denominator is maximized at an
//! extreme ray of the dual.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Sub};

use num_traits::{One, Signed, Zero};

use crate::cone::{Face, HPolytope, PolyCone};
use crate::error::{GeomError, Result};
use crate::rational::{format_rational, ln_rational, Rational};

/// `log(arg)` for an exact positive rational `arg`, or `+inf`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LogValue {
    Finite(Rational),
    PlusInfinity,
}

impl LogValue {
    /// `log 1 = 0`.
    pub fn zero() -> Self {
        LogValue::Finite(Rational::one())
    }

    pub fn from_arg(arg: Rational) -> Result<Self> {
        if !arg.is_positive() {
            return Err(GeomError::NonPositiveArgument(format_rational(&arg)));
        }
        Ok(LogValue::Finite(arg))
    }

    pub fn arg(&self) -> Option<&Rational> {
        match self {
            LogValue::Finite(a) => Some(a),
            LogValue::PlusInfinity => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, LogValue::Finite(_))
    }

    pub fn is_zero(&self) -> bool {
        self.arg().is_some_and(One::is_one)
    }

    /// `-self`; `None` for `+inf`.
    pub fn negate(&self) -> Option<Self> {
        self.arg().map(|a| LogValue::Finite(a.recip()))
    }

    /// `|self|` as a log value.
    pub fn abs(&self) -> Self {
        match self {
            LogValue::Finite(a) if *a < Rational::one() => LogValue::Finite(a.recip()),
            other => other.clone(),
        }
    }

    /// `k * self` for a nonnegative integer `k`.
    pub fn times(&self, k: u32) -> Self {
        match self {
            LogValue::Finite(a) => LogValue::Finite(num_traits::pow(a.clone(), k as usize)),
            LogValue::PlusInfinity if k == 0 => LogValue::zero(),
            LogValue::PlusInfinity => LogValue::PlusInfinity,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            LogValue::Finite(a) => ln_rational(a),
            LogValue::PlusInfinity => f64::INFINITY,
        }
    }

    /// Argument rendered as `p/q`, or `inf`.
    pub fn arg_string(&self) -> String {
        match self {
            LogValue::Finite(a) => format_rational(a),
            LogValue::PlusInfinity => "inf".into(),
        }
    }
}

impl fmt::Display for LogValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LogValue::Finite(a) => write!(f, "log({})", format_rational(a)),
            LogValue::PlusInfinity => f.write_str("inf"),
        }
    }
}

impl Ord for LogValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (LogValue::Finite(a), LogValue::Finite(b)) => a.cmp(b),
            (LogValue::Finite(_), LogValue::PlusInfinity) => Ordering::Less,
            (LogValue::PlusInfinity, LogValue::Finite(_)) => Ordering::Greater,
            (LogValue::PlusInfinity, LogValue::PlusInfinity) => Ordering::Equal,
        }
    }
}

impl PartialOrd for LogValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for &LogValue {
    type Output = LogValue;

    /// Saturating sum.
    fn add(self, rhs: &LogValue) -> LogValue {
        match (self, rhs) {
            (LogValue::Finite(a), LogValue::Finite(b)) => LogValue::Finite(a * b),
            _ => LogValue::PlusInfinity,
        }
    }
}

impl Add for LogValue {
    type Output = LogValue;
    fn add(self, rhs: LogValue) -> LogValue {
        &self + &rhs
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Sub for &LogValue {
    type Output = LogValue;

    /// # Panics
    /// When `rhs` is `+inf`.
    fn sub(self, rhs: &LogValue) -> LogValue {
        match (self, rhs) {
            (LogValue::Finite(a), LogValue::Finite(b)) => LogValue::Finite(a / b),
            (LogValue::PlusInfinity, LogValue::Finite(_)) => LogValue::PlusInfinity,
            (_, LogValue::PlusInfinity) => panic!("subtracting +inf"),
        }
    }
}

impl Sub for LogValue {
    type Output = LogValue;
    fn sub(self, rhs: LogValue) -> LogValue {
        &self - &rhs
    }
}

impl std::iter::Sum for LogValue {
    fn sum<I: Iterator<Item = LogValue>>(iter: I) -> LogValue {
        iter.fold(LogValue::zero(), |a, b| a + b)
    }
}

fn require_interior(c: &PolyCone, x: &[Rational]) -> Result<()> {
    if x.len() != c.ambient_dim() {
        return Err(GeomError::DimensionMismatch { expected: c.ambient_dim(), found: x.len() });
    }
    if !c.is_interior(x) {
        return Err(GeomError::NotInterior);
    }
    Ok(())
}

fn max_ratio<'a>(pairs: impl Iterator<Item = (Rational, &'a Rational)>) -> Rational {
    pairs
        .map(|(num, den)| num / den)
        .max()
        .expect("at least one facet")
}

/// `M(y/x; C)`, the largest facet ratio `psi_i(y) / psi_i(x)`. May be `<= 0`
/// when `y` lies outside the closed cone.
pub fn m_ratio(y: &[Rational], x: &[Rational], c: &PolyCone) -> Result<Rational> {
    require_interior(c, x)?;
    if y.len() != c.ambient_dim() {
        return Err(GeomError::DimensionMismatch { expected: c.ambient_dim(), found: y.len() });
    }
    let xv = c.facet_values(x);
    Ok(max_ratio(c.facets().iter().map(|f| f.eval(y)).zip(xv.iter())))
}

/// Funk metric `F_C(x, y) = log M(x/y; C)`.
pub fn funk(x: &[Rational], y: &[Rational], c: &PolyCone) -> Result<LogValue> {
    LogValue::from_arg(m_ratio(x, y, c)?)
}

/// Reverse-Funk metric `RF_C(x, y) = log M(y/x; C)`.
pub fn reverse_funk(x: &[Rational], y: &[Rational], c: &PolyCone) -> Result<LogValue> {
    LogValue::from_arg(m_ratio(y, x, c)?)
}

/// Hilbert's projective metric `d_C = F_C + RF_C`.
pub fn hilbert_cone(x: &[Rational], y: &[Rational], c: &PolyCone) -> Result<LogValue> {
    require_interior(c, x)?;
    require_interior(c, y)?;
    Ok(funk(x, y, c)? + reverse_funk(x, y, c)?)
}

/// Hilbert distance on an open polytope from the cross-ratio of `x`, `y`
/// and the two boundary points of their chord.
///
/// Points on the chord are parametrized as `x + s (y - x)`; lengths along a
/// line are proportional to parameter differences, so the cross-ratio stays
/// rational.
pub fn hilbert_cross_ratio(poly: &HPolytope, x: &[Rational], y: &[Rational]) -> Result<LogValue> {
    for p in [x, y] {
        if p.len() != poly.dim() {
            return Err(GeomError::DimensionMismatch { expected: poly.dim(), found: p.len() });
        }
        if !poly.contains(p) {
            return Err(GeomError::NotInterior);
        }
    }
    if x == y {
        return Ok(LogValue::zero());
    }
    let dir: Vec<Rational> = y.iter().zip(x).map(|(a, b)| a - b).collect();
    // s_back: boundary behind x (s < 0); s_fwd: boundary beyond y (s > 1)
    let mut s_back: Option<Rational> = None;
    let mut s_fwd: Option<Rational> = None;
    for (a, b) in poly.halfspaces() {
        let slope = a.eval(&dir);
        if slope.is_zero() {
            continue;
        }
        let hit = -(a.eval(x) - b) / &slope;
        if slope.is_positive() {
            if s_back.as_ref().is_none_or(|s| hit > *s) {
                s_back = Some(hit);
            }
        } else if s_fwd.as_ref().is_none_or(|s| hit < *s) {
            s_fwd = Some(hit);
        }
    }
    let (s0, s1) = match (s_back, s_fwd) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(GeomError::Unbounded),
    };
    let one = Rational::one();
    // [x', x, y, y'] = |x'y| |y'x| / (|x'x| |y'y|)
    let num = (&one - &s0) * &s1;
    let den = (-&s0) * (&s1 - &one);
    LogValue::from_arg(num / den)
}

fn face_inactive_ratio(y: &[Rational], x: &[Rational], face: &Face) -> Result<Rational> {
    let cone = face.parent();
    if x.len() != cone.ambient_dim() || y.len() != cone.ambient_dim() {
        return Err(GeomError::DimensionMismatch { expected: cone.ambient_dim(), found: y.len() });
    }
    if !face.contains_relative_interior(x) {
        return Err(GeomError::NotInterior);
    }
    if !face.contains(y) {
        return Err(GeomError::Exterior);
    }
    let pairs: Vec<(Rational, Rational)> = face.inactive().map(|(_, f)| (f.eval(y), f.eval(x))).collect();
    if pairs.is_empty() {
        return Err(GeomError::Degenerate("face has no inactive facets".into()));
    }
    Ok(max_ratio(pairs.iter().map(|(n, d)| (n.clone(), d))))
}

/// `M(y/x; F)` on a face: the largest ratio over the facets inactive on `F`.
pub fn face_m_ratio(y: &[Rational], x: &[Rational], face: &Face) -> Result<Rational> {
    face_inactive_ratio(y, x, face)
}

/// `F_F(x, y) = log M(x/y; F)`, with `y` in the relative interior of `F`.
pub fn face_funk(x: &[Rational], y: &[Rational], face: &Face) -> Result<LogValue> {
    LogValue::from_arg(face_inactive_ratio(x, y, face)?)
}

/// `RF_F(x, y) = log M(y/x; F)`, with `x` in the relative interior of `F`.
pub fn face_reverse_funk(x: &[Rational], y: &[Rational], face: &Face) -> Result<LogValue> {
    LogValue::from_arg(face_inactive_ratio(y, x, face)?)
}

/// Hilbert metric of the face, both points in its relative interior.
pub fn face_hilbert(x: &[Rational], y: &[Rational], face: &Face) -> Result<LogValue> {
    if !face.contains_relative_interior(y) {
        return Err(GeomError::NotInterior);
    }
    Ok(face_funk(x, y, face)? + face_reverse_funk(x, y, face)?)
}

/// `max_i v_i - min_j v_j`; constant on classes modulo `(1, ..., 1)`.
pub fn variation_norm(v: &[Rational]) -> Rational {
    let max = v.iter().max().cloned().unwrap_or_else(Rational::zero);
    let min = v.iter().min().cloned().unwrap_or_else(Rational::zero);
    max - min
}

pub fn variation_distance(a: &[Rational], b: &[Rational]) -> Rational {
    let d: Vec<Rational> = a.iter().zip(b).map(|(x, y)| x - y).collect();
    variation_norm(&d)
}

/// A distance whose values are logarithms of rationals.
pub trait LogMetric {
    fn distance(&self, x: &[Rational], y: &[Rational]) -> Result<LogValue>;
}

/// Hilbert's projective metric on a cone.
#[derive(Debug, Clone, Copy)]
pub struct ConeHilbert<'a>(pub &'a PolyCone);

impl LogMetric for ConeHilbert<'_> {
    fn distance(&self, x: &[Rational], y: &[Rational]) -> Result<LogValue> {
        hilbert_cone(x, y, self.0)
    }
}

/// The cross-ratio Hilbert metric on a polytope.
#[derive(Debug, Clone, Copy)]
pub struct PolytopeHilbert<'a>(pub &'a HPolytope);

impl LogMetric for PolytopeHilbert<'_> {
    fn distance(&self, x: &[Rational], y: &[Rational]) -> Result<LogValue> {
        hilbert_cross_ratio(self.0, x, y)
    }
}

/// Funk metric on a cone (asymmetric).
#[derive(Debug, Clone, Copy)]
pub struct ConeFunk<'a>(pub &'a PolyCone);

impl LogMetric for ConeFunk<'_> {
    fn distance(&self, x: &[Rational], y: &[Rational]) -> Result<LogValue> {
        require_interior(self.0, x)?;
        funk(x, y, self.0)
    }
}

/// Gromov product, stored as `2 (x|y)_r = d(x,r) + d(y,r) - d(x,y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GromovProduct {
    pub doubled: LogValue,
}

impl GromovProduct {
    pub fn value(&self) -> f64 {
        self.doubled.to_f64() / 2.0
    }
}

pub fn gromov_product(x: &[Rational], y: &[Rational], r: &[Rational], metric: &impl LogMetric) -> Result<GromovProduct> {
    let dxr = metric.distance(x, r)?;
    let dyr = metric.distance(y, r)?;
    let dxy = metric.distance(x, y)?;
    Ok(GromovProduct { doubled: &(&dxr + &dyr) - &dxy })
}

/// Checks `d(x_0,x_1) + ... + d(x_m,x_{m+1}) <= d(x_0,x_{m+1}) + eps` for every `m`.
pub fn almost_geodesic_check(points: &[Vec<Rational>], metric: &impl LogMetric, eps: &LogValue) -> Result<bool> {
    if points.len() < 2 {
        return Err(GeomError::Degenerate("need at least two points".into()));
    }
    if !eps.is_finite() || eps.arg().is_some_and(|a| *a < Rational::one()) {
        return Err(GeomError::Degenerate("epsilon must be a finite nonnegative value".into()));
    }
    let mut path = LogValue::zero();
    for m in 0..points.len() - 1 {
        path = &path + &metric.distance(&points[m], &points[m + 1])?;
        let direct = metric.distance(&points[0], &points[m + 1])?;
        if path > &direct + eps {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `j_{C,x}(y) = M(y/x; C) / M(b/x; C)`.
pub fn j_eval(c: &PolyCone, x: &[Rational], y: &[Rational], b: &[Rational]) -> Result<Rational> {
    require_interior(c, b)?;
    Ok(m_ratio(y, x, c)? / m_ratio(b, x, c)?)
}
