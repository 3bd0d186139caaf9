//! Floating-point polynomial roots by the Aberth–Ehrlich iteration.

use num_complex::Complex64;

use crate::error::{Error, Result};

pub fn horner(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

fn horner_with_derivative(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// All complex roots of `Σ coeffs[i] z^i`, with multiplicity.
pub fn aberth_roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    let mut coeffs = coeffs.to_vec();
    while coeffs.last().is_some_and(|c| *c == Complex64::new(0.0, 0.0)) {
        coeffs.pop();
    }
    let n = coeffs.len().saturating_sub(1);
    if n == 0 {
        return Ok(Vec::new());
    }
    let lead = coeffs[n];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    // Cauchy bound for the initial circle.
    let radius = 1.0 + monic[..n].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let start = 0.4_f64;
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius * 0.5, start + 2.0 * std::f64::consts::PI * k as f64 / n as f64))
        .collect();
    let mut converged = vec![false; n];
    for _ in 0..500 {
        let mut all = true;
        for i in 0..n {
            if converged[i] {
                continue;
            }
            let (p, dp) = horner_with_derivative(&monic, z[i]);
            if p.norm() == 0.0 {
                converged[i] = true;
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| {
                    let d = z[i] - z[j];
                    if d.norm() == 0.0 {
                        Complex64::new(0.0, 0.0)
                    } else {
                        d.inv()
                    }
                })
                .sum();
            let denom = Complex64::new(1.0, 0.0) - ratio * repulsion;
            let step = if denom.norm() == 0.0 || !denom.is_finite() { ratio } else { ratio / denom };
            if !step.is_finite() {
                continue;
            }
            z[i] -= step;
            if step.norm() <= 1e-15 * (1.0 + z[i].norm()) {
                converged[i] = true;
            } else {
                all = false;
            }
        }
        if all {
            return Ok(z);
        }
    }
    // Clusters of multiple roots converge slowly; accept if residuals are tiny.
    let scale: f64 = monic.iter().map(|c| c.norm()).sum();
    let ok = z.iter().all(|&r| {
        let m = r.norm().max(1.0).powi(n as i32);
        horner(&monic, r).norm() <= 1e-6 * scale * m
    });
    if ok {
        Ok(z)
    } else {
        Err(Error::NoConvergence)
    }
}

pub fn real_roots(coeffs: &[f64]) -> Result<Vec<Complex64>> {
    aberth_roots(&coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect::<Vec<_>>())
}

/// Group values within `tol` of each other (single linkage), preserving first-seen order.
pub fn cluster(values: &[Complex64], tol: f64) -> Vec<Vec<usize>> {
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut owner = vec![usize::MAX; values.len()];
    for i in 0..values.len() {
        let mut target = None;
        for j in 0..i {
            if (values[i] - values[j]).norm() <= tol {
                let g = owner[j];
                match target {
                    None => target = Some(g),
                    Some(t) if t != g => {
                        let moved = std::mem::take(&mut groups[g]);
                        for &m in &moved {
                            owner[m] = t;
                        }
                        groups[t].extend(moved);
                    }
                    _ => {}
                }
            }
        }
        let g = target.unwrap_or_else(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        owner[i] = g;
        groups[g].push(i);
    }
    groups.retain(|g| !g.is_empty());
    groups
}
