//! Chebyshev polynomials and the radical inverses of `z^n` and `P_n`.

use num_complex::Complex64;

use super::expr::{RadicalExpr, Tracked};
use crate::poly::{rat, ExactPolynomial};

/// `P_n` with `cos(n t) = P_n(cos t)`.
pub fn chebyshev(n: usize) -> ExactPolynomial {
    let mut prev = ExactPolynomial::one();
    if n == 0 {
        return prev;
    }
    let mut cur = ExactPolynomial::x();
    let two_z = ExactPolynomial::from_i64(&[0, 2]);
    for _ in 1..n {
        let next = &(&two_z * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `Root(n, w)`, or `w` itself when `n = 1`.
pub fn invert_power(n: u32, w: &RadicalExpr) -> RadicalExpr {
    RadicalExpr::root(n, w)
}

/// The nested-radical inverse of `w = P_n(z)`:
/// `(root_n(w + i sqrt(1 - w^2)) + root_n(w - i sqrt(1 - w^2))) / 2`.
/// Both occurrences of the square root are one shared node.
pub fn invert_chebyshev(n: u32, w: &RadicalExpr) -> RadicalExpr {
    let one = RadicalExpr::int(1);
    let s = RadicalExpr::root(2, &one.sub(&w.mul(w)));
    let is = RadicalExpr::i().mul(&s);
    let plus = w.add(&is);
    let minus = w.sub(&is);
    let sum = RadicalExpr::root(n, &plus).add(&RadicalExpr::root(n, &minus));
    sum.div(&RadicalExpr::int(2))
}

/// The `n` preimages of `w` under `z^n`, with multiplicity.
pub fn power_preimages(n: u32, w: &Tracked) -> Vec<Tracked> {
    w.roots(n)
}

/// The `n` preimages of `w` under `P_n`, with multiplicity.
///
/// Uses the same radicals as [`invert_chebyshev`] with the two `n`-th roots
/// coupled: the second is written as the reciprocal of the first. The square
/// root branch is chosen so that `|w + i sqrt(1 - w^2)| >= 1`.
pub fn chebyshev_preimages(n: u32, w: &Tracked) -> Vec<Tracked> {
    if n == 1 {
        return vec![w.clone()];
    }
    let one = Tracked::int(1);
    let s_roots = one.sub(&w.mul(w)).roots(2);
    let candidates: Vec<Tracked> = s_roots.iter().map(|s| w.add(&Tracked::i().mul(s))).collect();
    let big = if candidates[0].value.norm() >= candidates[1].value.norm() { &candidates[0] } else { &candidates[1] };
    let half = rat(1) / rat(2);
    big.roots(n)
        .into_iter()
        .map(|c| {
            let inv = one.div(&c).unwrap_or_else(|_| c.clone());
            c.add(&inv).scale(&half)
        })
        .collect()
}

/// `P_n(z)` in floating point by the recurrence.
pub fn chebyshev_eval(n: usize, z: Complex64) -> Complex64 {
    let mut prev = Complex64::new(1.0, 0.0);
    if n == 0 {
        return prev;
    }
    let mut cur = z;
    for _ in 1..n {
        let next = 2.0 * z * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ratio;

    #[test]
    fn small_chebyshev() {
        assert_eq!(chebyshev(0), ExactPolynomial::one());
        assert_eq!(chebyshev(2), ExactPolynomial::from_i64(&[-1, 0, 2]));
        assert_eq!(chebyshev(3), ExactPolynomial::from_i64(&[0, -3, 0, 4]));
        assert_eq!(chebyshev(5), ExactPolynomial::from_i64(&[0, 5, 0, -20, 0, 16]));
    }

    #[test]
    fn semigroup() {
        for m in 1..=6 {
            for n in 1..=6 {
                let pm = chebyshev(m);
                let pn = chebyshev(n);
                assert_eq!(pm.compose(&pn), chebyshev(m * n));
                assert_eq!(pn.compose(&pm), chebyshev(m * n));
            }
        }
    }

    #[test]
    fn inverse_values() {
        let e = invert_chebyshev(2, &RadicalExpr::int(-1));
        assert!(e.eval_multi().unwrap().iter().any(|z| z.norm() < 1e-9));
        let e = invert_chebyshev(3, &RadicalExpr::int(-1));
        let vals = e.eval_multi().unwrap();
        assert!(vals.iter().any(|z| (z + 1.0).norm() < 1e-9));
        assert!(vals.iter().any(|z| (z - 0.5).norm() < 1e-9));
    }

    #[test]
    fn power_inverse() {
        let w = RadicalExpr::int(8);
        assert!(invert_power(1, &w).ptr_eq(&w));
        assert_eq!(invert_power(3, &w).eval_multi().unwrap().len(), 3);
    }

    #[test]
    fn coupled_preimages_are_complete() {
        for n in 1..=7u32 {
            for w in [ratio(-1, 1), ratio(1, 3), ratio(5, 2), ratio(-40, 1)] {
                let t = Tracked::rational(w.clone());
                let pre = chebyshev_preimages(n, &t);
                assert_eq!(pre.len(), n as usize);
                let p = chebyshev(n as usize);
                let wf = crate::poly::rational_to_f64(&w);
                for z in &pre {
                    assert!((p.eval_complex(z.value) - wf).norm() < 1e-8 * (1.0 + wf.abs()), "n={n} w={w}");
                    assert_eq!(z.reevaluate().unwrap(), z.value);
                }
            }
        }
    }
}
