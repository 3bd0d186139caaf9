//! Fixed inputs shared by the benchmarks.

use ramified::{Constellation, ExactPolynomial, Permutation};

/// The degree-2 covering branched at six points, of genus 2.
pub fn six_transpositions() -> Constellation {
    let t = Permutation::new(vec![1, 0]).expect("transposition");
    Constellation::from_perms(2, vec![t; 6]).expect("valid constellation")
}

/// A degree-6 covering whose monodromy is the full symmetric group.
pub fn symmetric_six() -> Constellation {
    let a = Permutation::new(vec![1, 0, 2, 3, 4, 5]).expect("transposition");
    let b = Permutation::new(vec![1, 2, 3, 4, 5, 0]).expect("6-cycle");
    Constellation::closing(6, vec![a, b]).expect("valid constellation")
}

/// `P_3 ∘ (z^2 + z) ∘ (2z - 1)`, of degree 6.
pub fn composite_sextic() -> ExactPolynomial {
    let p3 = ramified::chebyshev(3);
    p3.compose(&ExactPolynomial::from_i64(&[0, 1, 1])).compose(&ExactPolynomial::from_i64(&[-1, 2]))
}

pub fn generic_quartic() -> ExactPolynomial {
    ExactPolynomial::from_i64(&[7, -3, 5, 2, 1])
}
