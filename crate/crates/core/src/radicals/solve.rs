//! Closed-form solutions of equations of degree at most three.

use super::chebyshev::chebyshev_preimages;
use super::expr::Tracked;
use crate::error::{Error, Result};
use crate::poly::{rat, ExactPolynomial};

fn check_leading(a: &Tracked) -> Result<()> {
    if a.is_exact_zero() || a.value.norm() == 0.0 {
        Err(Error::DegenerateLeading)
    } else {
        Ok(())
    }
}

/// Root of `a z + b = 0`.
pub fn solve_linear(a: &Tracked, b: &Tracked) -> Result<Vec<Tracked>> {
    check_leading(a)?;
    Ok(vec![b.neg().div(a)?])
}

/// Roots of `a z^2 + b z + c = 0`, in the cancellation-free form
/// `q / a`, `c / q` with `q = -(b + sqrt(b^2 - 4ac)) / 2`.
pub fn solve_quadratic(a: &Tracked, b: &Tracked, c: &Tracked) -> Result<Vec<Tracked>> {
    check_leading(a)?;
    let disc = b.mul(b).sub(&a.mul(c).scale(&rat(4)));
    let exact = disc.as_rational().and_then(crate::poly::rational_sqrt).map(Tracked::rational);
    let candidates = match exact {
        Some(r) => vec![r.neg(), r],
        None => disc.roots(2),
    };
    let s = candidates
        .into_iter()
        .max_by(|x, y| (b.value + x.value).norm().total_cmp(&(b.value + y.value).norm()))
        .expect("two candidates");
    let q = b.add(&s).scale(&(rat(-1) / rat(2)));
    if q.is_exact_zero() || q.value.norm() == 0.0 {
        let double = b.neg().div(&a.scale(&rat(2)))?;
        return Ok(vec![double.clone(), double]);
    }
    Ok(vec![q.div(a)?, c.div(&q)?])
}

/// Roots of `a z^3 + b z^2 + c z + d = 0`, by critical values: after the shift
/// `z = u - b/(3a)` the cubic is `a u^3 + e u + f`. With `e = 0` it is a pure
/// cube; otherwise the scaling `u = κ t`, `κ^2 = -4e/(3a)`, turns it into
/// `C·P_3(t) + f` with `C = -eκ/3`.
pub fn solve_cubic_tracked(a: &Tracked, b: &Tracked, c: &Tracked, d: &Tracked) -> Result<Vec<Tracked>> {
    check_leading(a)?;
    let three_a = a.scale(&rat(3));
    let h = b.neg().div(&three_a)?;
    let e = c.sub(&b.mul(b).div(&three_a)?);
    let f = d.sub(&b.mul(c).div(&three_a)?).add(&b.mul(b).mul(b).scale(&rat(2)).div(&a.mul(a).scale(&rat(27)))?);
    let scale = c.value.norm() + b.value.norm().powi(2) / a.value.norm();
    let cube_case = match e.as_rational() {
        Some(r) => num_traits::Zero::is_zero(r),
        None => e.value.norm() <= 1e-14 * scale,
    };
    let us: Vec<Tracked> = if cube_case {
        f.neg().div(a)?.roots(3)
    } else {
        let kappa = e.scale(&rat(-4)).div(&three_a)?.sqrt();
        let big_c = e.mul(&kappa).scale(&(rat(-1) / rat(3)));
        let target = f.neg().div(&big_c)?;
        chebyshev_preimages(3, &target).iter().map(|t| kappa.mul(t)).collect()
    };
    Ok(us.iter().map(|u| u.add(&h)).collect())
}

fn require_degree(p: &ExactPolynomial, expected: usize) -> Result<()> {
    if p.is_zero() || p.degree() != expected {
        return Err(Error::InvalidDegree { expected, found: p.degree() });
    }
    Ok(())
}

fn coefficients_minus(p: &ExactPolynomial, v: &Tracked) -> Vec<Tracked> {
    let mut cs: Vec<Tracked> = p.coeffs().iter().map(|c| Tracked::rational(c.clone())).collect();
    cs[0] = cs[0].sub(v);
    cs
}

/// Roots of the cubic `p(z) = 0`.
pub fn solve_cubic(p: &ExactPolynomial) -> Result<Vec<Tracked>> {
    solve_cubic_at(p, &Tracked::int(0))
}

/// Roots of `p(z) = v` for a cubic `p`.
pub fn solve_cubic_at(p: &ExactPolynomial, v: &Tracked) -> Result<Vec<Tracked>> {
    require_degree(p, 3)?;
    let cs = coefficients_minus(p, v);
    solve_cubic_tracked(&cs[3], &cs[2], &cs[1], &cs[0])
}

/// Roots of `p(z) = v` for `1 <= deg p <= 4`, with multiplicity.
pub fn solve_equation(p: &ExactPolynomial, v: &Tracked) -> Result<Vec<Tracked>> {
    let cs = coefficients_minus(p, v);
    match p.degree() {
        1 => solve_linear(&cs[1], &cs[0]),
        2 => solve_quadratic(&cs[2], &cs[1], &cs[0]),
        3 => solve_cubic_tracked(&cs[3], &cs[2], &cs[1], &cs[0]),
        4 => super::pencil::solve_quartic_pencil_at(p, v),
        found => Err(Error::InvalidDegree { expected: 4, found }),
    }
}
