//! Quartic equations through the pencil of conics `Q1 + λ Q2`, where
//! `Q1 = a y^2 + b x y + c x^2 + d x + e` and `Q2 = y - x^2` cut out the
//! roots of `a x^4 + b x^3 + c x^2 + d x + e` on the parabola `y = x^2`.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::expr::Tracked;
use super::solve::{solve_cubic_tracked, solve_equation};
use crate::error::{Error, Result};
use crate::poly::{nearby_rationals, rat, ratio, rational_to_f64, ExactPolynomial};

/// Field operations shared by exact-radical and plain floating-point scalars.
pub trait Scalar: Clone {
    fn from_rational(r: &BigRational) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Result<Self>;
    fn neg(&self) -> Self;
    fn sqrt(&self) -> Self;
    fn value(&self) -> Complex64;
}

impl Scalar for Tracked {
    fn from_rational(r: &BigRational) -> Self {
        Tracked::rational(r.clone())
    }
    fn add(&self, o: &Self) -> Self {
        Tracked::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Tracked::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Tracked::mul(self, o)
    }
    fn div(&self, o: &Self) -> Result<Self> {
        Tracked::div(self, o)
    }
    fn neg(&self) -> Self {
        Tracked::neg(self)
    }
    fn sqrt(&self) -> Self {
        Tracked::sqrt(self)
    }
    fn value(&self) -> Complex64 {
        self.value
    }
}

impl Scalar for Complex64 {
    fn from_rational(r: &BigRational) -> Self {
        Complex64::new(rational_to_f64(r), 0.0)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Result<Self> {
        if o.norm() == 0.0 {
            Err(Error::DivisionByZero)
        } else {
            Ok(self / o)
        }
    }
    fn neg(&self) -> Self {
        -self
    }
    fn sqrt(&self) -> Self {
        Complex64::sqrt(*self)
    }
    fn value(&self) -> Complex64 {
        *self
    }
}

pub type Matrix3<S> = [[S; 3]; 3];

/// Symmetric 3×3 matrix of a conic in coordinates `(x, y, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conic {
    #[serde(with = "matrix_strings")]
    pub matrix: Matrix3<BigRational>,
}

mod matrix_strings {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(m: &Matrix3<BigRational>, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = m.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
        rows.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Matrix3<BigRational>, D::Error> {
        let rows = Vec::<Vec<String>>::deserialize(d)?;
        let parse = |i: usize, j: usize| -> std::result::Result<BigRational, D::Error> {
            let s = rows
                .get(i)
                .and_then(|r| r.get(j))
                .ok_or_else(|| serde::de::Error::custom("conic matrix must be 3x3"))?;
            crate::poly::parse_rational(s).map_err(serde::de::Error::custom)
        };
        let mut out: Matrix3<BigRational> = Default::default();
        for (i, row) in out.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = parse(i, j)?;
            }
        }
        Ok(out)
    }
}

impl Conic {
    pub fn new(matrix: Matrix3<BigRational>) -> Result<Self> {
        let symmetric = (0..3).all(|i| (0..i).all(|j| matrix[i][j] == matrix[j][i]));
        if !symmetric {
            return Err(Error::InvalidNumber("conic matrix is not symmetric".into()));
        }
        Ok(Conic { matrix })
    }

    /// The quadratic form at `(x, y, w)`.
    pub fn eval(&self, p: [Complex64; 3]) -> Complex64 {
        let m = self.matrix.each_ref().map(|r| r.each_ref().map(rational_to_f64));
        quadratic_form(&m.map(|r| r.map(|x| Complex64::new(x, 0.0))), p)
    }

    pub fn det(&self) -> BigRational {
        det3(&self.matrix)
    }
}

fn det3(m: &Matrix3<BigRational>) -> BigRational {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]) - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

pub fn quadratic_form(m: &Matrix3<Complex64>, p: [Complex64; 3]) -> Complex64 {
    let mut s = Complex64::new(0.0, 0.0);
    for i in 0..3 {
        for j in 0..3 {
            s += p[i] * m[i][j] * p[j];
        }
    }
    s
}

fn quartic_coefficients(p: &ExactPolynomial) -> Result<[BigRational; 5]> {
    if p.is_zero() || p.degree() != 4 {
        return Err(Error::InvalidDegree { expected: 4, found: p.degree() });
    }
    Ok([p.coeff(0), p.coeff(1), p.coeff(2), p.coeff(3), p.coeff(4)])
}

/// Matrix of `Q1` for `a x^4 + b x^3 + c x^2 + d x + e`, given low to high.
fn q1_matrix<S: Scalar>(cs: &[S; 5]) -> Matrix3<S> {
    let half = S::from_rational(&ratio(1, 2));
    let [e, d, c, b, a] = cs.clone();
    let b2 = b.mul(&half);
    let d2 = d.mul(&half);
    let zero = S::from_rational(&BigRational::zero());
    [[c, b2.clone(), d2.clone()], [b2, a, zero.clone()], [d2, zero, e]]
}

/// Matrix of `Q2 = y - x^2`.
fn q2_matrix() -> Matrix3<BigRational> {
    let z = BigRational::zero();
    let h = ratio(1, 2);
    [[rat(-1), z.clone(), z.clone()], [z.clone(), z.clone(), h.clone()], [z, h, BigRational::zero()]]
}

/// `det(M1 + λ M2)`, low to high in `λ`:
/// `(a c e - b^2 e/4 - a d^2/4) + (b d/4 - a e) λ - (c/4) λ^2 + λ^3/4`.
fn pencil_cubic<S: Scalar>(cs: &[S; 5]) -> [S; 4] {
    let [e, d, c, b, a] = cs.clone();
    let q = S::from_rational(&ratio(1, 4));
    let c0 = a.mul(&c).mul(&e).sub(&b.mul(&b).mul(&e).mul(&q)).sub(&a.mul(&d).mul(&d).mul(&q));
    let c1 = b.mul(&d).mul(&q).sub(&a.mul(&e));
    let c2 = c.mul(&q).neg();
    [c0, c1, c2, q]
}

fn pencil_member<S: Scalar>(m1: &Matrix3<S>, lambda: &S) -> Matrix3<S> {
    let m2 = q2_matrix();
    let mut out = m1.clone();
    for i in 0..3 {
        for j in 0..3 {
            if !m2[i][j].is_zero() {
                out[i][j] = m1[i][j].add(&lambda.mul(&S::from_rational(&m2[i][j])));
            }
        }
    }
    out
}

/// `Q1`, `Q2` and the cubic `det(M1 + λ M2)` whose roots give the singular members.
pub fn build_pencil(p: &ExactPolynomial) -> Result<(Conic, Conic, ExactPolynomial)> {
    let cs = quartic_coefficients(p)?;
    let q1 = Conic::new(q1_matrix(&cs))?;
    let q2 = Conic::new(q2_matrix())?;
    let cubic = ExactPolynomial::new(pencil_cubic(&cs).to_vec());
    Ok((q1, q2, cubic))
}

impl Scalar for BigRational {
    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Result<Self> {
        if o.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(self / o)
        }
    }
    fn neg(&self) -> Self {
        -self
    }
    /// Only meaningful on rational squares; used for matrix assembly, never for splitting.
    fn sqrt(&self) -> Self {
        crate::poly::rational_sqrt(self).unwrap_or_else(|| self.clone())
    }
    fn value(&self) -> Complex64 {
        Complex64::new(rational_to_f64(self), 0.0)
    }
}

fn frobenius<S: Scalar>(m: &Matrix3<S>) -> f64 {
    m.iter().flatten().map(|x| x.value().norm_sqr()).sum::<f64>().sqrt()
}

fn det_value<S: Scalar>(m: &Matrix3<S>) -> Complex64 {
    let v = m.each_ref().map(|r| r.each_ref().map(Scalar::value));
    v[0][0] * (v[1][1] * v[2][2] - v[1][2] * v[2][1]) - v[0][1] * (v[1][0] * v[2][2] - v[1][2] * v[2][0])
        + v[0][2] * (v[1][0] * v[2][1] - v[1][1] * v[2][0])
}

/// Singularity test `|det| <= 1e-10 (1 + ‖M‖^3)`.
pub fn is_singular<S: Scalar>(m: &Matrix3<S>) -> bool {
    det_value(m).norm() <= 1e-10 * (1.0 + frobenius(m).powi(3))
}

/// Two lines whose product is a multiple of the singular conic `m`.
///
/// With `B = adj(M) = -p pᵀ` for the double point `p`, the matrix
/// `M + [p]×` has rank one and its nonzero row and column are the lines.
/// A rank-one conic is a double line and is returned twice.
pub fn split_matrix<S: Scalar>(m: &Matrix3<S>) -> Result<([S; 3], [S; 3])> {
    if !is_singular(m) {
        return Err(Error::NotSingular);
    }
    let cof = |i: usize, j: usize| -> S {
        let (r0, r1) = match i {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        let (c0, c1) = match j {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        let minor = m[r0][c0].mul(&m[r1][c1]).sub(&m[r0][c1].mul(&m[r1][c0]));
        if (i + j).is_multiple_of(2) {
            minor
        } else {
            minor.neg()
        }
    };
    // adjugate is the transpose of the cofactor matrix; symmetric here
    let adj: Matrix3<S> =
        [[cof(0, 0), cof(1, 0), cof(2, 0)], [cof(0, 1), cof(1, 1), cof(2, 1)], [cof(0, 2), cof(1, 2), cof(2, 2)]];
    let norm = frobenius(m);
    let i = (0..3).max_by(|&a, &b| adj[a][a].value().norm().total_cmp(&adj[b][b].value().norm())).expect("three");
    if adj[i][i].value().norm() <= 1e-12 * (1.0 + norm * norm) {
        let j = (0..3).max_by(|&a, &b| m[a][a].value().norm().total_cmp(&m[b][b].value().norm())).expect("three");
        let line = m[j].clone();
        if line.iter().all(|x| x.value().norm() == 0.0) {
            return Err(Error::DegenerateQuartic("conic matrix vanishes".into()));
        }
        return Ok((line.clone(), line));
    }
    let beta = adj[i][i].neg().sqrt();
    let p: [S; 3] = [adj[0][i].div(&beta)?, adj[1][i].div(&beta)?, adj[2][i].div(&beta)?];
    let cross: Matrix3<S> = {
        let z = S::from_rational(&BigRational::zero());
        [[z.clone(), p[2].clone(), p[1].neg()], [p[2].neg(), z.clone(), p[0].clone()], [p[1].clone(), p[0].neg(), z]]
    };
    let mut c = m.clone();
    for r in 0..3 {
        for s in 0..3 {
            c[r][s] = m[r][s].add(&cross[r][s]);
        }
    }
    let (mut br, mut bc) = (0, 0);
    for r in 0..3 {
        for s in 0..3 {
            if c[r][s].value().norm() > c[br][bc].value().norm() {
                br = r;
                bc = s;
            }
        }
    }
    let row = c[br].clone();
    let col = [c[0][bc].clone(), c[1][bc].clone(), c[2][bc].clone()];
    Ok((row, col))
}

pub type Line = [Complex64; 3];

/// Numeric split of a rational singular conic.
pub fn split_singular_conic(c: &Conic) -> Result<(Line, Line)> {
    let m: Matrix3<Tracked> = c.matrix.clone().map(|r| r.map(Tracked::rational));
    let (l, k) = split_matrix(&m)?;
    Ok((l.map(|x| x.value), k.map(|x| x.value)))
}

/// Numeric split of a complex singular conic.
pub fn split_singular_numeric(m: &Matrix3<Complex64>) -> Result<(Line, Line)> {
    split_matrix(m)
}

fn cross<S: Scalar>(l: &[S; 3], m: &[S; 3]) -> [S; 3] {
    [
        l[1].mul(&m[2]).sub(&l[2].mul(&m[1])),
        l[2].mul(&m[0]).sub(&l[0].mul(&m[2])),
        l[0].mul(&m[1]).sub(&l[1].mul(&m[0])),
    ]
}

/// The pencil pipeline on `a x^4 + ... + e` (low to high) with radical
/// coefficients; assumes four distinct roots.
fn quartic_generic(cs: &[Tracked; 5]) -> Result<Vec<Tracked>> {
    let cubic = pencil_cubic(cs);
    let lambdas = solve_cubic_tracked(&cubic[3], &cubic[2], &cubic[1], &cubic[0])?;
    let scale = 1.0 + lambdas.iter().map(|l| l.value.norm()).fold(0.0, f64::max);
    let mut pair = (0, 1);
    let mut best = -1.0;
    for i in 0..3 {
        for j in i + 1..3 {
            let sep = (lambdas[i].value - lambdas[j].value).norm();
            if sep > best {
                best = sep;
                pair = (i, j);
            }
        }
    }
    if best <= 1e-12 * scale {
        return Err(Error::DegenerateQuartic("singular members of the pencil coincide".into()));
    }
    let m1 = q1_matrix(cs);
    let first = split_matrix(&pencil_member(&m1, &lambdas[pair.0]))?;
    let second = split_matrix(&pencil_member(&m1, &lambdas[pair.1].decoupled()))?;
    let mut roots = Vec::new();
    for l in [&first.0, &first.1] {
        for m in [&second.0, &second.1] {
            let pt = cross(l, m);
            let size = pt.iter().map(|x| x.value.norm()).fold(0.0, f64::max);
            if pt[2].value.norm() <= 1e-12 * size {
                continue;
            }
            let x = pt[0].div(&pt[2])?;
            let y = pt[1].div(&pt[2])?;
            let off = (y.value - x.value * x.value).norm();
            if off <= 1e-6 * (1.0 + x.value.norm_sqr()) {
                roots.push(x);
            }
        }
    }
    if roots.len() != 4 {
        return Err(Error::DegenerateQuartic(format!("{} of 4 line intersections lie on the parabola", roots.len())));
    }
    Ok(roots)
}

/// `x^4`-free fallback for `a x^4 + c x^2 + e`: two square roots of the quadratic's roots.
fn biquadratic(cs: &[Tracked; 5]) -> Result<Vec<Tracked>> {
    let ys = super::solve::solve_quadratic(&cs[4], &cs[2], &cs[0])?;
    let mut out = Vec::new();
    for y in ys {
        out.extend(y.roots(2));
    }
    Ok(out)
}

/// Replace values that are exactly rational roots of `q` by the rational itself.
fn snap_rational(q: &ExactPolynomial, roots: Vec<Tracked>) -> Vec<Tracked> {
    roots
        .into_iter()
        .map(|r| {
            if r.value.im.abs() > 1e-6 * (1.0 + r.value.norm()) {
                return r;
            }
            for cand in nearby_rationals(r.value.re, 1_000_000).into_iter().rev() {
                if (rational_to_f64(&cand) - r.value.re).abs() <= 1e-6 * (1.0 + r.value.norm())
                    && q.eval(&cand).is_zero()
                {
                    return Tracked::rational(cand);
                }
            }
            r
        })
        .collect()
}

/// Roots of `p(x) = v` for a quartic `p`, with multiplicity.
pub fn solve_quartic_pencil_at(p: &ExactPolynomial, v: &Tracked) -> Result<Vec<Tracked>> {
    let coeffs = quartic_coefficients(p)?;
    if let Some(vr) = v.as_rational() {
        let q = p - &ExactPolynomial::constant(vr.clone());
        if !q.is_square_free() {
            let mut roots = Vec::new();
            for (factor, mult) in q.square_free_factorization() {
                let part = solve_equation(&factor, &Tracked::int(0))?;
                for _ in 0..mult {
                    roots.extend(part.iter().cloned());
                }
            }
            return Ok(snap_rational(&q, roots));
        }
    }
    let mut cs: [Tracked; 5] = coeffs.map(Tracked::rational);
    cs[0] = cs[0].sub(v);
    let roots = match quartic_generic(&cs) {
        Ok(r) => r,
        Err(Error::DegenerateQuartic(msg)) => {
            if cs[1].is_exact_zero() && cs[3].is_exact_zero() {
                biquadratic(&cs)?
            } else {
                return Err(Error::DegenerateQuartic(msg));
            }
        }
        Err(e) => return Err(e),
    };
    Ok(match v.as_rational() {
        Some(vr) => snap_rational(&(p - &ExactPolynomial::constant(vr.clone())), roots),
        None => roots,
    })
}

/// Roots of the quartic `p(x) = 0`, with multiplicity.
pub fn solve_quartic_pencil(p: &ExactPolynomial) -> Result<Vec<Tracked>> {
    solve_quartic_pencil_at(p, &Tracked::int(0))
}
