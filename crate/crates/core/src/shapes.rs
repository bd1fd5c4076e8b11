//! Small reference polytopes used throughout the tests, benches and docs.

use crate::cone::HPolytope;
use crate::rational::{int, ipoint, Point, Rational};

fn build(dim: usize, hs: Vec<(Point, Rational)>) -> HPolytope {
    HPolytope::new(dim, hs).expect("reference polytope is valid")
}

/// The open interval `(0, 4)`.
pub fn interval() -> HPolytope {
    build(1, vec![(ipoint(&[1]), int(0)), (ipoint(&[-1]), int(-4))])
}

/// The open unit square, facets ordered `x > 0, x < 1, y > 0, y < 1`.
pub fn square() -> HPolytope {
    hypercube(2)
}

/// The standard 2-simplex `{x, y > 0, x + y < 1}`.
pub fn triangle() -> HPolytope {
    simplex(2)
}

/// A convex pentagon with integer vertices.
pub fn pentagon() -> HPolytope {
    HPolytope::polygon(&[ipoint(&[0, 0]), ipoint(&[2, 0]), ipoint(&[3, 2]), ipoint(&[1, 3]), ipoint(&[-1, 2])])
        .expect("pentagon is convex")
}

/// The open unit cube in `R^3`.
pub fn cube() -> HPolytope {
    hypercube(3)
}

/// `(0,1)^n`, facets ordered `x_1 > 0, x_1 < 1, x_2 > 0, ...`.
pub fn hypercube(n: usize) -> HPolytope {
    let mut hs = Vec::with_capacity(2 * n);
    for i in 0..n {
        let mut e = vec![int(0); n];
        e[i] = int(1);
        hs.push((e.clone(), int(0)));
        e[i] = int(-1);
        hs.push((e, int(-1)));
    }
    build(n, hs)
}

/// The standard `n`-simplex `{x_i > 0, sum x_i < 1}`.
pub fn simplex(n: usize) -> HPolytope {
    let mut hs = Vec::with_capacity(n + 1);
    for i in 0..n {
        let mut e = vec![int(0); n];
        e[i] = int(1);
        hs.push((e, int(0)));
    }
    hs.push((vec![int(-1); n], int(-1)));
    build(n, hs)
}
