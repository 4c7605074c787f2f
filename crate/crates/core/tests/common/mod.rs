#![allow(dead_code)]

use degree_roots::num_complex::Complex64;
use pathfinding::kuhn_munkres::kuhn_munkres_min;
use pathfinding::matrix::Matrix;

/// Largest pair distance under the assignment minimising total distance.
/// Distances are scaled to integers at 2^-40 resolution.
pub fn matched_max_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len(), "root counts differ");
    if a.is_empty() {
        return 0.0;
    }
    let scale = (1u64 << 40) as f64;
    let weights = Matrix::from_fn(a.len(), b.len(), |(i, j)| ((a[i] - b[j]).norm() * scale).round() as i64);
    let (_, assignment) = kuhn_munkres_min(&weights);
    assignment
        .iter()
        .enumerate()
        .map(|(i, &j)| (a[i] - b[j]).norm())
        .fold(0.0, f64::max)
}
