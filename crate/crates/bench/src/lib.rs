//! Benchmark fixtures.

use polyhilbert::{rational::rat, Point};

/// Points on the open diagonal of the unit square, lifted to the cone.
pub fn diagonal_points(count: usize) -> Vec<Point> {
    (1..=count)
        .map(|k| {
            let t = rat(k as i64, count as i64 + 1);
            vec![t.clone(), t, rat(1, 1)]
        })
        .collect()
}
