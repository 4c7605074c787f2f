//! Aberth–Ehrlich simultaneous iteration on `f64` complex coefficients.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::horner;

/// Angular offset of the starting points, in radians. Any value that is not
/// a rational multiple of pi keeps the start off the real axis and breaks
/// conjugate symmetry.
pub const START_OFFSET: f64 = 0.4 * std::f64::consts::SQRT_2;

pub const MAX_SWEEPS: usize = 1000;

#[derive(Clone, Debug)]
pub struct Outcome {
    pub roots: Vec<Complex64>,
    pub sweeps: usize,
    pub converged: bool,
}

/// Cauchy's radius `1 + max |a_k / a_d|`, for coefficients of any sign.
pub fn cauchy_radius(coeffs: &[Complex64]) -> f64 {
    let lead = coeffs.last().map_or(1.0, |c| c.norm());
    1.0 + coeffs[..coeffs.len() - 1]
        .iter()
        .map(|c| c.norm() / lead)
        .fold(0.0, f64::max)
}

/// Starting points equally spaced on the circle `|z| = radius`.
pub fn initial_points(degree: usize, radius: f64) -> Vec<Complex64> {
    (0..degree)
        .map(|j| {
            let theta = 2.0 * PI * j as f64 / degree as f64 + START_OFFSET;
            Complex64::from_polar(radius, theta)
        })
        .collect()
}

/// Runs the iteration until every approximation is frozen or the sweep budget
/// is spent. `coeffs` is lowest power first with a nonzero leading entry.
pub fn solve(coeffs: &[Complex64], radius: f64, max_sweeps: usize) -> Outcome {
    let degree = coeffs.len().saturating_sub(1);
    if degree == 0 {
        return Outcome {
            roots: Vec::new(),
            sweeps: 0,
            converged: true,
        };
    }
    if degree == 1 {
        return Outcome {
            roots: vec![-coeffs[0] / coeffs[1]],
            sweeps: 0,
            converged: true,
        };
    }

    let eps = f64::EPSILON;
    let mut z = initial_points(degree, radius);
    let mut frozen = vec![false; degree];
    let mut sweeps = 0;

    while sweeps < max_sweeps && frozen.iter().any(|f| !f) {
        sweeps += 1;
        for i in 0..degree {
            if frozen[i] {
                continue;
            }
            let zi = z[i];
            let (p, dp) = horner::eval_with_derivative(coeffs, zi);
            if p.norm() <= 4.0 * degree as f64 * eps * horner::abs_scale(coeffs, zi) {
                frozen[i] = true;
                continue;
            }
            let mut repulsion = Complex64::new(0.0, 0.0);
            for (j, &zj) in z.iter().enumerate() {
                if j != i {
                    let diff = zi - zj;
                    if diff.norm() > 0.0 {
                        repulsion += diff.inv();
                    }
                }
            }
            let denom = dp - p * repulsion;
            let step = if denom.norm() > 0.0 && denom.is_finite() {
                p / denom
            } else {
                // stationary point: nudge off it deterministically
                Complex64::new(eps.sqrt(), eps.sqrt()) * zi.norm().max(1.0)
            };
            if !step.is_finite() {
                continue;
            }
            z[i] = zi - step;
            if step.norm() <= 2.0 * eps * z[i].norm() {
                frozen[i] = true;
            }
        }
    }

    Outcome {
        converged: frozen.iter().all(|&f| f),
        roots: z,
        sweeps,
    }
}

/// Newton steps from `z` on compensated values, stopping as soon as the
/// correction stops shrinking.
pub fn polish(
    coeffs: &[Complex64],
    deriv: &[Complex64],
    mut z: Complex64,
    max_steps: usize,
) -> Complex64 {
    let mut last = f64::INFINITY;
    for _ in 0..max_steps {
        let p = horner::eval_compensated(coeffs, z);
        if p.norm() == 0.0 {
            break;
        }
        let dp = horner::eval_compensated(deriv, z);
        if dp.norm() == 0.0 {
            break;
        }
        let step = p / dp;
        let size = step.norm();
        if !step.is_finite() || size >= last {
            break;
        }
        z -= step;
        last = size;
        if size <= f64::EPSILON * z.norm() {
            break;
        }
    }
    z
}
