//! Polynomial decomposition, classification of indecomposable factors by
//! their critical data, and inversion in radicals through the factors.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::covering::{BranchingDatum, DatumEntry};
use crate::error::{Error, Result};
use crate::numeric::{aberth_roots, cluster};
use crate::perm::{lcm_all, Permutation};
use crate::poly::{rat, rational_to_f64, split_square, ExactPolynomial};
use crate::radicals::{chebyshev, chebyshev_preimages, solve_equation, Tracked};

/// Tolerance for merging critical values, relative to the largest sum of
/// term magnitudes `Σ |a_i| |z|^i` over the critical points.
pub const CRITICAL_VALUE_TOLERANCE: f64 = 1e-8;

/// A finite critical value with the ramification indices above it.
#[derive(Clone, Debug, Serialize)]
pub struct CriticalValue {
    pub label: String,
    pub value: [f64; 2],
    pub order: u64,
    /// `(critical point, ramification index)` for each critical point over this value.
    pub points: Vec<([f64; 2], u64)>,
}

fn c2(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

/// Finite critical values of `p`, sorted by real then imaginary part.
pub fn critical_values(p: &ExactPolynomial) -> Result<Vec<CriticalValue>> {
    if p.is_zero() || p.degree() < 2 {
        return Err(Error::InvalidDegree { expected: 2, found: p.degree() });
    }
    let dp = p.derivative();
    if dp.is_zero() {
        return Err(Error::DerivativeDegenerate);
    }
    let mut points: Vec<(Complex64, u64)> = Vec::new();
    for (factor, mult) in dp.square_free_factorization() {
        let coeffs: Vec<Complex64> = factor.to_f64().into_iter().map(|c| Complex64::new(c, 0.0)).collect();
        for z in aberth_roots(&coeffs)? {
            points.push((z, mult as u64 + 1));
        }
    }
    let values: Vec<Complex64> = points.iter().map(|(z, _)| p.eval_complex(*z)).collect();
    let magnitudes: Vec<f64> = p.to_f64().iter().map(|c| c.abs()).collect();
    let spread = points
        .iter()
        .map(|(z, _)| magnitudes.iter().rev().fold(0.0, |acc, c| acc * z.norm() + c))
        .fold(f64::MIN_POSITIVE, f64::max);
    let mut groups = cluster(&values, CRITICAL_VALUE_TOLERANCE * spread);
    let centre = |g: &Vec<usize>| values[g[0]];
    groups.sort_by(|a, b| {
        let (x, y) = (centre(a), centre(b));
        let tie = 1e-9 * spread;
        if (x.re - y.re).abs() > tie {
            x.re.total_cmp(&y.re)
        } else {
            x.im.total_cmp(&y.im)
        }
    });
    Ok(groups
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let value = g.iter().map(|&k| values[k]).sum::<Complex64>() / g.len() as f64;
            let pts: Vec<([f64; 2], u64)> = g.iter().map(|&k| (c2(points[k].0), points[k].1)).collect();
            CriticalValue {
                label: format!("v{}", i + 1),
                value: c2(value),
                order: lcm_all(pts.iter().map(|p| p.1)),
                points: pts,
            }
        })
        .collect())
}

/// Branching datum of `p` as a map of the sphere: finite critical values
/// `v1, v2, …` and the point `inf` with order `deg p`.
pub fn critical_datum(p: &ExactPolynomial) -> Result<BranchingDatum> {
    let mut entries: Vec<DatumEntry> =
        critical_values(p)?.into_iter().map(|cv| DatumEntry { point: cv.label, order: cv.order }).collect();
    entries.push(DatumEntry { point: "inf".into(), order: p.degree() as u64 });
    BranchingDatum::new(entries)
}

/// Inner factor of degree `s` (monic, no constant term) and outer factor of
/// degree `r` with `p = g ∘ h`, if such a pair exists.
fn split_with_degrees(p: &ExactPolynomial, r: usize, s: usize) -> Option<(ExactPolynomial, ExactPolynomial)> {
    let n = p.degree();
    let q = p.monic();
    let mut h_coeffs = vec![BigRational::zero(); s + 1];
    h_coeffs[s] = rat(1);
    let r_rat = rat(r as i64);
    for k in 1..s {
        let h = ExactPolynomial::new(h_coeffs.clone());
        let current = h.pow(r).coeff(n - k);
        h_coeffs[s - k] = (q.coeff(n - k) - current) / &r_rat;
    }
    let h = ExactPolynomial::new(h_coeffs);
    let mut rem = q;
    let mut g_coeffs = Vec::with_capacity(r + 1);
    for _ in 0..=r {
        let (quot, remainder) = rem.div_rem(&h).ok()?;
        if remainder.degree() > 0 {
            return None;
        }
        g_coeffs.push(remainder.coeff(0));
        rem = quot;
    }
    if !rem.is_zero() {
        return None;
    }
    let g = ExactPolynomial::new(g_coeffs).scale(&p.leading());
    (g.compose(&h) == *p).then_some((g, h))
}

/// Indecomposable factors `g1, …, gr` with `p = g1 ∘ … ∘ gr`.
///
/// The outer degree is tried in increasing order, so `z^6` splits as
/// `z^2 ∘ z^3`. Inner factors are monic with zero constant term.
pub fn decompose_poly(p: &ExactPolynomial) -> Vec<ExactPolynomial> {
    let n = p.degree();
    if n <= 3 {
        return vec![p.clone()];
    }
    for r in 2..n {
        if !n.is_multiple_of(r) {
            continue;
        }
        if let Some((g, h)) = split_with_degrees(p, r, n / r) {
            let mut out = decompose_poly(&g);
            out.extend(decompose_poly(&h));
            return out;
        }
    }
    vec![p.clone()]
}

pub fn compose_all(factors: &[ExactPolynomial]) -> ExactPolynomial {
    factors.iter().rev().fold(ExactPolynomial::x(), |inner, g| g.compose(&inner))
}

/// `a + b·√d` with `d` a square-free integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadSurd {
    #[serde(with = "crate::poly::rational_string")]
    pub rational: BigRational,
    #[serde(with = "crate::poly::rational_string")]
    pub surd: BigRational,
    #[serde(with = "bigint_string")]
    pub radicand: BigInt,
}

mod bigint_string {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};
    use std::str::FromStr;

    pub fn serialize<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&n.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let raw = String::deserialize(d)?;
        BigInt::from_str(&raw).map_err(serde::de::Error::custom)
    }
}

impl QuadSurd {
    pub fn rational(r: BigRational, radicand: &BigInt) -> Self {
        QuadSurd { rational: r, surd: BigRational::zero(), radicand: radicand.clone() }
    }

    fn d(&self) -> BigRational {
        BigRational::from_integer(self.radicand.clone())
    }

    pub fn is_rational(&self) -> bool {
        self.surd.is_zero()
    }

    pub fn add(&self, o: &QuadSurd) -> QuadSurd {
        QuadSurd { rational: &self.rational + &o.rational, surd: &self.surd + &o.surd, radicand: self.radicand.clone() }
    }

    pub fn mul(&self, o: &QuadSurd) -> QuadSurd {
        QuadSurd {
            rational: &self.rational * &o.rational + &self.surd * &o.surd * self.d(),
            surd: &self.rational * &o.surd + &self.surd * &o.rational,
            radicand: self.radicand.clone(),
        }
    }

    pub fn scale(&self, r: &BigRational) -> QuadSurd {
        QuadSurd { rational: &self.rational * r, surd: &self.surd * r, radicand: self.radicand.clone() }
    }

    pub fn inverse(&self) -> Result<QuadSurd> {
        let norm = &self.rational * &self.rational - &self.surd * &self.surd * self.d();
        if norm.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(QuadSurd { rational: &self.rational / &norm, surd: -&self.surd / &norm, radicand: self.radicand.clone() })
    }

    pub fn pow(&self, e: usize) -> QuadSurd {
        (0..e).fold(QuadSurd::rational(rat(1), &self.radicand), |acc, _| acc.mul(self))
    }

    /// Value with `√d` read as the principal square root.
    pub fn value(&self) -> Complex64 {
        let root = Complex64::new(rational_to_f64(&self.d()), 0.0).sqrt();
        rational_to_f64(&self.rational) + root * rational_to_f64(&self.surd)
    }

    /// As a radical expression, reusing the given square root of `d`.
    pub fn to_tracked(&self, sqrt_d: &Tracked) -> Tracked {
        let a = Tracked::rational(self.rational.clone());
        if self.is_rational() {
            return a;
        }
        a.add(&sqrt_d.scale(&self.surd))
    }
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            write!(f, "{}", self.rational)
        } else if self.rational.is_zero() {
            write!(f, "{}*sqrt({})", self.surd, self.radicand)
        } else {
            write!(f, "{} + {}*sqrt({})", self.rational, self.surd, self.radicand)
        }
    }
}

/// `z ↦ slope·z + intercept`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearMap {
    pub slope: QuadSurd,
    pub intercept: QuadSurd,
}

/// `p = outer ∘ model ∘ inner` with `model` either `z^n` or `P_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorWitness {
    pub outer: LinearMap,
    pub inner: LinearMap,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FactorTag {
    PowerLike,
    ChebyshevLike,
    Degree4OrLess,
    Obstructed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorClass {
    pub tag: FactorTag,
    pub degree: usize,
    pub witness: Option<FactorWitness>,
    /// Critical datum, computed for factors of degree above four.
    pub datum: Option<BranchingDatum>,
}

fn power_witness(p: &ExactPolynomial) -> Option<FactorWitness> {
    let n = p.degree();
    let lead = p.leading();
    let z0 = -p.coeff(n - 1) / (rat(n as i64) * &lead);
    let delta = p.eval(&z0);
    let model = ExactPolynomial::linear(rat(1), -&z0).pow(n).scale(&lead);
    if &model + &ExactPolynomial::constant(delta.clone()) != *p {
        return None;
    }
    let one = BigInt::one();
    Some(FactorWitness {
        outer: LinearMap { slope: QuadSurd::rational(lead, &one), intercept: QuadSurd::rational(delta, &one) },
        inner: LinearMap { slope: QuadSurd::rational(rat(1), &one), intercept: QuadSurd::rational(-z0, &one) },
    })
}

fn chebyshev_witness(p: &ExactPolynomial) -> Option<FactorWitness> {
    let n = p.degree();
    let lead = p.leading();
    let z0 = -p.coeff(n - 1) / (rat(n as i64) * &lead);
    let q = p.taylor_shift(&z0);
    let sub = q.coeff(n - 2);
    if sub.is_zero() {
        return None;
    }
    let alpha_sq = -(rat(n as i64) * q.coeff(n)) / (rat(4) * &sub);
    let (s, d) = split_square(&alpha_sq);
    let alpha = if d.is_one() {
        QuadSurd::rational(s, &d)
    } else {
        QuadSurd { rational: BigRational::zero(), surd: s, radicand: d.clone() }
    };
    let pn = chebyshev(n);
    let two_pow = rat(2).pow((n - 1) as i32);
    let gamma = QuadSurd::rational(q.coeff(n), &d).mul(&alpha.pow(n).scale(&two_pow).inverse().ok()?);
    let delta = QuadSurd::rational(q.coeff(0), &d).add(&gamma.scale(&-pn.coeff(0)));
    for j in 0..=n {
        let mut coeff = gamma.mul(&alpha.pow(j)).scale(&pn.coeff(j));
        if j == 0 {
            coeff = coeff.add(&delta);
        }
        if !coeff.is_rational() || coeff.rational != q.coeff(j) {
            return None;
        }
    }
    let zero_shift = alpha.mul(&QuadSurd::rational(-z0, &d));
    Some(FactorWitness {
        outer: LinearMap { slope: gamma, intercept: delta },
        inner: LinearMap { slope: alpha, intercept: zero_shift },
    })
}

/// Classify an indecomposable polynomial by its critical datum, with an
/// exactly verified linear witness for the power and Chebyshev cases.
pub fn classify_factor(p: &ExactPolynomial) -> Result<FactorClass> {
    if decompose_poly(p).len() > 1 {
        return Err(Error::NotIndecomposable);
    }
    let degree = p.degree();
    if degree <= 4 {
        return Ok(FactorClass { tag: FactorTag::Degree4OrLess, degree, witness: None, datum: None });
    }
    let datum = critical_datum(p)?;
    let n = degree as u64;
    let orders = datum.orders();
    let (tag, witness) = if orders == [n, n] {
        match power_witness(p) {
            Some(w) => (FactorTag::PowerLike, Some(w)),
            None => (FactorTag::Obstructed, None),
        }
    } else if orders == [2, 2, n] {
        match chebyshev_witness(p) {
            Some(w) => (FactorTag::ChebyshevLike, Some(w)),
            None => (FactorTag::Obstructed, None),
        }
    } else {
        (FactorTag::Obstructed, None)
    };
    Ok(FactorClass { tag, degree, witness, datum: Some(datum) })
}

#[derive(Clone, Debug, Serialize)]
pub struct RittFactor {
    pub polynomial: ExactPolynomial,
    pub class: FactorClass,
}

#[derive(Clone, Debug, Serialize)]
pub struct RittVerdict {
    pub invertible: bool,
    /// Outermost factor first.
    pub factors: Vec<RittFactor>,
}

pub fn ritt_verdict(p: &ExactPolynomial) -> Result<RittVerdict> {
    let factors = decompose_poly(p)
        .into_iter()
        .map(|g| {
            let class = classify_factor(&g)?;
            Ok(RittFactor { polynomial: g, class })
        })
        .collect::<Result<Vec<_>>>()?;
    let invertible = factors.iter().all(|f| f.class.tag != FactorTag::Obstructed);
    Ok(RittVerdict { invertible, factors })
}

fn sqrt_of(radicand: &BigInt) -> Tracked {
    Tracked::rational(BigRational::from_integer(radicand.clone())).root(2, None)
}

fn invert_factor(f: &RittFactor, y: &Tracked) -> Result<Vec<Tracked>> {
    let n = f.class.degree as u32;
    match (f.class.tag, &f.class.witness) {
        (FactorTag::Degree4OrLess, _) => solve_equation(&f.polynomial, y),
        (FactorTag::PowerLike, Some(w)) | (FactorTag::ChebyshevLike, Some(w)) => {
            let sqrt_d = sqrt_of(&w.inner.slope.radicand);
            let a = w.outer.slope.to_tracked(&sqrt_d);
            let b = w.outer.intercept.to_tracked(&sqrt_d);
            let alpha = w.inner.slope.to_tracked(&sqrt_d);
            let beta = w.inner.intercept.to_tracked(&sqrt_d);
            let u = y.sub(&b).div(&a)?;
            let ts = if f.class.tag == FactorTag::PowerLike { u.roots(n) } else { chebyshev_preimages(n, &u) };
            ts.iter().map(|t| t.sub(&beta).div(&alpha)).collect()
        }
        _ => Err(Error::NotSolvable),
    }
}

impl RittVerdict {
    /// All `deg p` solutions of `p(z) = w` as radical expressions, obtained by
    /// inverting the factors from the outermost inwards.
    pub fn preimages(&self, w: &Tracked) -> Result<Vec<Tracked>> {
        if !self.invertible {
            return Err(Error::NotSolvable);
        }
        let mut current = vec![w.clone()];
        for f in &self.factors {
            let mut next = Vec::new();
            for y in &current {
                next.extend(invert_factor(f, y)?);
            }
            current = next;
        }
        Ok(current)
    }
}

/// Monodromy of `p^{-1}` around each finite critical value, by numeric
/// continuation of the fibre along loops from a common base point.
pub fn numeric_monodromy(p: &ExactPolynomial) -> Result<Vec<Permutation>> {
    let values: Vec<Complex64> = critical_values(p)?.iter().map(|c| Complex64::new(c.value[0], c.value[1])).collect();
    let n = p.degree();
    let spread = values.iter().map(|v| v.norm()).fold(1.0, f64::max);
    let centre = values.iter().sum::<Complex64>() / values.len().max(1) as f64;
    let min_gap = values
        .iter()
        .enumerate()
        .flat_map(|(i, a)| values[i + 1..].iter().map(move |b| (a - b).norm()))
        .fold(spread, f64::min);
    let rho = 0.3 * min_gap;
    let base = (0..64)
        .map(|k| centre + Complex64::from_polar(2.0 * spread + 1.0, 0.37 + k as f64 * 0.61))
        .find(|&b| {
            values.iter().enumerate().all(|(i, &c)| {
                values.iter().enumerate().all(|(j, &other)| i == j || segment_distance(b, c, other) > 1.5 * rho)
            })
        })
        .ok_or(Error::NoConvergence)?;
    let dp = p.derivative();
    let mut start: Vec<Complex64> = {
        let mut coeffs: Vec<Complex64> = p.to_f64().into_iter().map(|c| Complex64::new(c, 0.0)).collect();
        coeffs[0] -= base;
        aberth_roots(&coeffs)?
    };
    for z in start.iter_mut() {
        *z = newton(p, &dp, *z, base, 8);
    }
    let mut perms = Vec::new();
    for &c in &values {
        let mut steps = 720;
        let perm = loop {
            if let Some(perm) = track_loop(p, &dp, &start, base, c, rho, steps) {
                break perm;
            }
            steps *= 2;
            if steps > 720 * 64 {
                return Err(Error::NoConvergence);
            }
        };
        perms.push(Permutation::new(perm)?);
    }
    debug_assert!(perms.iter().all(|q| q.degree() == n));
    Ok(perms)
}

fn segment_distance(a: Complex64, b: Complex64, p: Complex64) -> f64 {
    let ab = b - a;
    let t = ((p - a) * ab.conj()).re / ab.norm_sqr();
    let t = t.clamp(0.0, 1.0);
    (a + ab * t - p).norm()
}

fn newton(p: &ExactPolynomial, dp: &ExactPolynomial, mut z: Complex64, w: Complex64, iters: usize) -> Complex64 {
    for _ in 0..iters {
        let d = dp.eval_complex(z);
        if d.norm() == 0.0 {
            break;
        }
        let step = (p.eval_complex(z) - w) / d;
        z -= step;
        if step.norm() < 1e-15 * (1.0 + z.norm()) {
            break;
        }
    }
    z
}

fn track_loop(
    p: &ExactPolynomial,
    dp: &ExactPolynomial,
    start: &[Complex64],
    base: Complex64,
    c: Complex64,
    rho: f64,
    steps: usize,
) -> Option<Vec<usize>> {
    let dir = (c - base) / (c - base).norm();
    let near = c - dir * rho;
    let theta0 = (-dir).arg();
    let leg = steps / 4;
    let circle = steps - 2 * leg;
    let mut path: Vec<Complex64> = Vec::with_capacity(steps + 1);
    for k in 0..=leg {
        path.push(base + (near - base) * (k as f64 / leg as f64));
    }
    for k in 1..=circle {
        path.push(c + Complex64::from_polar(rho, theta0 + 2.0 * std::f64::consts::PI * k as f64 / circle as f64));
    }
    for k in 1..=leg {
        path.push(near + (base - near) * (k as f64 / leg as f64));
    }
    let mut zs = start.to_vec();
    for pair in path.windows(2) {
        let (w0, w1) = (pair[0], pair[1]);
        for z in zs.iter_mut() {
            let d = dp.eval_complex(*z);
            let predicted = if d.norm() == 0.0 { *z } else { *z + (w1 - w0) / d };
            *z = newton(p, dp, predicted, w1, 6);
        }
        let sep = min_separation(&zs);
        if !(sep.is_finite() && sep > 1e-9) {
            return None;
        }
    }
    let mut perm = vec![usize::MAX; start.len()];
    let mut used = vec![false; start.len()];
    let sep = min_separation(start);
    for (i, z) in zs.iter().enumerate() {
        let (j, d) = start.iter().enumerate().map(|(j, s)| (j, (s - z).norm())).min_by(|a, b| a.1.total_cmp(&b.1))?;
        if used[j] || d > 0.25 * sep {
            return None;
        }
        used[j] = true;
        perm[i] = j;
    }
    Some(perm)
}

fn min_separation(zs: &[Complex64]) -> f64 {
    let mut m = f64::INFINITY;
    for i in 0..zs.len() {
        for j in i + 1..zs.len() {
            m = m.min((zs[i] - zs[j]).norm());
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{GroupTable, DEFAULT_CAP};
    use crate::poly::ratio;

    fn p(c: &[i64]) -> ExactPolynomial {
        ExactPolynomial::from_i64(c)
    }

    fn zn(n: usize) -> ExactPolynomial {
        ExactPolynomial::monomial(rat(1), n)
    }

    #[test]
    fn datum_of_power_and_chebyshev() {
        let d = critical_datum(&zn(5)).unwrap();
        assert_eq!(d.orders(), vec![5, 5]);
        assert_eq!(d.order_at("inf"), Some(5));
        let d = critical_datum(&chebyshev(3)).unwrap();
        assert_eq!(d.orders(), vec![2, 2, 3]);
        let d = critical_datum(&p(&[3, 1, -2, 5, 1])).unwrap();
        assert_eq!(d.orders(), vec![2, 2, 2, 4]);
    }

    #[test]
    fn decompositions() {
        assert_eq!(decompose_poly(&zn(6)), vec![zn(2), zn(3)]);
        let p6 = chebyshev(6);
        let parts = decompose_poly(&p6);
        assert_eq!(parts.iter().map(|g| g.degree()).collect::<Vec<_>>(), vec![2, 3]);
        assert_eq!(compose_all(&parts), p6);
        assert_eq!(decompose_poly(&p(&[1, 1, 0, 0, 1])).len(), 1);
    }

    #[test]
    fn power_like_witness() {
        let q = ExactPolynomial::linear(rat(1), rat(1)).pow(5).scale(&rat(2)) - ExactPolynomial::constant(rat(3));
        let c = classify_factor(&q).unwrap();
        assert_eq!(c.tag, FactorTag::PowerLike);
        let w = c.witness.unwrap();
        assert_eq!(w.outer.slope.rational, rat(2));
        assert_eq!(w.outer.intercept.rational, rat(-3));
        assert_eq!(w.inner.slope.rational, rat(1));
        assert_eq!(w.inner.intercept.rational, rat(1));
    }

    #[test]
    fn chebyshev_like_with_surd() {
        // 9·√3·P_5(z/√3) - 7 has rational coefficients but needs √3 in its witness
        let pn = chebyshev(5);
        let s3 = QuadSurd { rational: rat(0), surd: rat(1), radicand: BigInt::from(3) };
        let inv = s3.inverse().unwrap();
        let mut poly = Vec::new();
        for j in 0..=5 {
            let c = s3.scale(&rat(9)).mul(&inv.pow(j)).scale(&pn.coeff(j));
            assert!(c.is_rational());
            poly.push(c.rational);
        }
        let q = ExactPolynomial::new(poly) + ExactPolynomial::constant(rat(-7));
        let c = classify_factor(&q).unwrap();
        assert_eq!(c.tag, FactorTag::ChebyshevLike);
        assert!(!c.witness.as_ref().unwrap().inner.slope.is_rational());
        let v = ritt_verdict(&q).unwrap();
        for z in v.preimages(&Tracked::rational(ratio(1, 3))).unwrap() {
            assert!((q.eval_complex(z.value) - 1.0 / 3.0).norm() < 1e-7);
        }
    }

    #[test]
    fn obstructed_and_p5() {
        let c = classify_factor(&p(&[0, -1, 0, 0, 0, 1])).unwrap();
        assert_eq!(c.tag, FactorTag::Obstructed);
        assert_eq!(c.datum.unwrap().orders(), vec![2, 2, 2, 2, 5]);
        assert_eq!(classify_factor(&chebyshev(5)).unwrap().tag, FactorTag::ChebyshevLike);
        assert_eq!(classify_factor(&zn(6)), Err(Error::NotIndecomposable));
    }

    #[test]
    fn verdicts() {
        assert!(!ritt_verdict(&p(&[0, -1, 0, 0, 0, 1])).unwrap().invertible);
        // P_2 ∘ z^3 ∘ (z + 1)
        let q = chebyshev(2).compose(&zn(3)).compose(&p(&[1, 1]));
        let v = ritt_verdict(&q).unwrap();
        assert!(v.invertible);
        assert_eq!(compose_all(&v.factors.iter().map(|f| f.polynomial.clone()).collect::<Vec<_>>()), q);
        let w = Tracked::rational(ratio(2, 7));
        let pre = v.preimages(&w).unwrap();
        assert_eq!(pre.len(), 6);
        for z in &pre {
            assert!((q.eval_complex(z.value) - 2.0 / 7.0).norm() < 1e-7);
            assert_eq!(z.reevaluate().unwrap(), z.value);
        }
    }

    #[test]
    fn monodromy_blocks_follow_decomposability() {
        let decomposable = chebyshev(2).compose(&p(&[0, 1, 1, 1]));
        let gens = numeric_monodromy(&decomposable).unwrap();
        let g = GroupTable::generate(6, &gens, DEFAULT_CAP).unwrap();
        assert!(g.is_transitive());
        assert!(!g.is_primitive().unwrap());
        let prime = p(&[1, -2, 0, 3, 0, 1]);
        let gens = numeric_monodromy(&prime).unwrap();
        let g = GroupTable::generate(5, &gens, 1000).unwrap();
        assert!(g.is_primitive().unwrap());
    }

    #[test]
    fn small_scale_factor_keeps_its_datum() {
        let p = ExactPolynomial::parse_high_to_low("1,-9/250,2023/3906250,-18171/4882812500,4076341/305175781250000,0")
            .unwrap();
        let c = classify_factor(&p).unwrap();
        assert_eq!(c.datum.unwrap().orders(), vec![2, 2, 5]);
        assert_eq!(c.tag, FactorTag::ChebyshevLike);
    }
}
