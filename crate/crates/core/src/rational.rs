//! Exact rational scalars and the textual point syntax.
//!
//! Literals follow `[+-]?digits(/digits)?`, e.g. `-3/4` or `2`. Points are
//! comma-separated lists of such literals.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{GeomError, Result};

/// Exact rational number, always stored in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// A vector of exact coordinates in cone space or an affine chart.
pub type Point = Vec<Rational>;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Builds a point from `(numerator, denominator)` pairs.
pub fn point(coords: &[(i64, i64)]) -> Point {
    coords.iter().map(|&(n, d)| rat(n, d)).collect()
}

/// Builds a point from integers.
pub fn ipoint(coords: &[i64]) -> Point {
    coords.iter().map(|&n| int(n)).collect()
}

fn is_digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

/// Parses a rational literal. Irrational or decimal notation is rejected.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let (negative, body) = match s.as_bytes().first() {
        Some(b'-') => (true, &s[1..]),
        Some(b'+') => (false, &s[1..]),
        _ => (false, s),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    if !is_digits(num) || den.is_some_and(|d| !is_digits(d)) {
        return Err(GeomError::Parse(format!("malformed rational literal {text:?}")));
    }
    let mut numer: BigInt = num.parse().expect("digits");
    if negative {
        numer = -numer;
    }
    let denom: BigInt = match den {
        Some(d) => d.parse().expect("digits"),
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(GeomError::Parse(format!("zero denominator in {text:?}")));
    }
    Ok(Rational::new(numer, denom))
}

/// Canonical text form: `p/q` in lowest terms, or `p` for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p/q,p/q,..."`.
pub fn parse_point(text: &str) -> Result<Point> {
    if text.trim().is_empty() {
        return Err(GeomError::Parse("empty point".into()));
    }
    text.split(',').map(parse_rational).collect()
}

pub fn format_point(p: &[Rational]) -> String {
    p.iter().map(format_rational).collect::<Vec<_>>().join(",")
}

/// Natural logarithm of a positive big integer without overflowing `f64`.
fn ln_bigint(n: &BigInt) -> f64 {
    debug_assert!(n.is_positive());
    let bits = n.bits();
    if bits <= 1000 {
        return n.to_f64().expect("finite").ln();
    }
    let shift = bits - 64;
    let top: BigInt = n >> shift;
    top.to_f64().expect("finite").ln() + shift as f64 * std::f64::consts::LN_2
}

/// Natural logarithm of a positive rational.
pub fn ln_rational(r: &Rational) -> f64 {
    assert!(r.is_positive(), "ln of non-positive rational");
    let (n, d) = (r.numer(), r.denom());
    if n.bits() <= 1000 && d.bits() <= 1000 {
        // the quotient keeps full precision when it stays in the normal range
        let q = n.to_f64().unwrap() / d.to_f64().unwrap();
        if q.is_normal() {
            return q.ln();
        }
    }
    ln_bigint(n) - ln_bigint(d)
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Scales `v` by a positive factor so that its first nonzero entry is `+1` or `-1`.
pub fn normalize_leading(v: &[Rational]) -> Point {
    match v.iter().find(|c| !c.is_zero()) {
        Some(lead) => {
            let s = lead.abs();
            v.iter().map(|c| c / &s).collect()
        }
        None => v.to_vec(),
    }
}
