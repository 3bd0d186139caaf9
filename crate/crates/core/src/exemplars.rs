//! Canonical minimal Galois constellations for the nine listed branching types.
//!
//! Cyclic, dihedral and torus exemplars are regular representations of
//! affine groups `{z -> a z + b}` acting on a finite module `(Z/m)^d`, with the
//! multiplier `a` running through the powers of a fixed integer matrix.
//! Platonic exemplars come from generator searches inside the natural
//! actions of A4, S4 and A5, regularized by Galois closure.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::classify::FamilyTag;
use crate::covering::{default_label, Constellation, Slot};
use crate::error::{Error, Result};
use crate::galois::galois_closure;
use crate::perm::{GroupTable, Permutation, DEFAULT_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExemplarSpec {
    pub family: FamilyTag,
    /// `n` for `(n,n)` and `(2,2,n)`, the module size `m` for torus types,
    /// ignored for the platonic types.
    pub param: u64,
}

impl ExemplarSpec {
    pub fn new(family: FamilyTag, param: u64) -> Self {
        ExemplarSpec { family, param }
    }

    /// Order of the exemplar's monodromy group, which is also its degree.
    pub fn group_order(&self) -> Option<u64> {
        let m = self.param;
        match self.family {
            FamilyTag::PowerNN => Some(m),
            FamilyTag::Dihedral22N => Some(2 * m),
            FamilyTag::Tetra233 => Some(12),
            FamilyTag::Octa234 => Some(24),
            FamilyTag::Icosa235 => Some(60),
            FamilyTag::Other => None,
            torus => torus.multiplier_order().map(|k| k * m * m),
        }
    }
}

/// Order-3 Eisenstein multiplier; its negative has order 6.
pub const EISENSTEIN_ORDER3: [[i64; 2]; 2] = [[0, -1], [1, -1]];
pub const EISENSTEIN_ORDER6: [[i64; 2]; 2] = [[0, 1], [-1, 1]];
pub const GAUSSIAN_ORDER4: [[i64; 2]; 2] = [[0, -1], [1, 0]];
pub const NEGATION: [[i64; 2]; 2] = [[-1, 0], [0, -1]];

pub fn exemplar(spec: &ExemplarSpec) -> Result<Constellation> {
    exemplar_with_cap(spec, DEFAULT_CAP)
}

pub fn exemplar_with_cap(spec: &ExemplarSpec, cap: usize) -> Result<Constellation> {
    let n = spec.param;
    if let Some(order) = spec.group_order() {
        if order as u128 > cap as u128 {
            return Err(Error::CapExceeded { cap });
        }
    }
    match spec.family {
        FamilyTag::PowerNN => {
            if n < 2 {
                return Err(Error::UnrealizableParam(format!("(n,n) needs n >= 2, got {n}")));
            }
            let s = Permutation::rotation(n as usize);
            Constellation::from_perms(n as usize, vec![s.clone(), s.inverse()])
        }
        FamilyTag::Dihedral22N => {
            if n < 2 {
                return Err(Error::UnrealizableParam(format!("(2,2,n) needs n >= 2, got {n}")));
            }
            let group = AffineGroup::new(n, vec![vec![-1]], 2);
            let x = group.element(1, &[0]);
            let y = group.element(1, &[1]);
            let z = group.inverse(&group.compose(&x, &y));
            Ok(group.regular_constellation(&[x, y, z]))
        }
        FamilyTag::Tetra233 => platonic(alternating(4), 3),
        FamilyTag::Octa234 => platonic(symmetric(4), 4),
        FamilyTag::Icosa235 => platonic(alternating(5), 5),
        FamilyTag::Torus236 => torus_triangle(n, EISENSTEIN_ORDER6, 6, [2, 3, 6]),
        FamilyTag::Torus333 => torus_triangle(n, EISENSTEIN_ORDER3, 3, [3, 3, 3]),
        FamilyTag::Torus244 => torus_triangle(n, GAUSSIAN_ORDER4, 4, [2, 4, 4]),
        FamilyTag::Torus2222 => {
            if n < 1 {
                return Err(Error::UnrealizableParam("torus module size must be at least 1".into()));
            }
            let group = AffineGroup::new(n, to_rows(NEGATION), 2);
            // z -> -z + b_i with b_1 - b_2 + b_3 - b_4 = 0, translations spanning the module
            let slots: Vec<AffineElement> =
                [[0, 0], [1, 0], [1, 1], [0, 1]].iter().map(|b| group.element(1, b)).collect();
            Ok(group.regular_constellation(&slots))
        }
        FamilyTag::Other => Err(Error::UnrealizableParam("no exemplar for unlisted branching data".into())),
    }
}

fn symmetric(n: usize) -> GroupTable {
    GroupTable::generate(n, &[Permutation::rotation(n), transposition(n)], DEFAULT_CAP).unwrap()
}

fn alternating(n: usize) -> GroupTable {
    let three = Permutation::from_cycles(n, &[&[0, 1, 2]]).unwrap();
    let second =
        if n % 2 == 1 { Permutation::rotation(n) } else { Permutation::from_cycles(n, &[&[0, 1], &[2, 3]]).unwrap() };
    GroupTable::generate(n, &[three, second], DEFAULT_CAP).unwrap()
}

fn transposition(n: usize) -> Permutation {
    Permutation::from_cycles(n, &[&[0, 1]]).unwrap()
}

/// First pair `(x, y)` in generation order with `x` of order 2, `y` of order
/// 3, `xy` of order `third` and `<x, y>` the whole group.
fn platonic(group: GroupTable, third: u64) -> Result<Constellation> {
    let elements = group.elements();
    for x in elements.iter().filter(|e| e.order() == 2) {
        for y in elements.iter().filter(|e| e.order() == 3) {
            let xy = x.then(y);
            if xy.order() != third {
                continue;
            }
            let sub = GroupTable::generate(group.degree(), &[x.clone(), y.clone()], group.order())?;
            if sub.order() == group.order() {
                let natural = Constellation::from_perms(group.degree(), vec![x.clone(), y.clone(), xy.inverse()])?;
                return galois_closure(&natural, DEFAULT_CAP);
            }
        }
    }
    unreachable!("platonic groups are (2,3,k)-generated")
}

fn torus_triangle(m: u64, multiplier: [[i64; 2]; 2], k: u32, orders: [u64; 3]) -> Result<Constellation> {
    if m < 1 {
        return Err(Error::UnrealizableParam("torus module size must be at least 1".into()));
    }
    let group = AffineGroup::new(m, to_rows(multiplier), k);
    let elements = group.all_elements();
    let order_of: HashMap<&AffineElement, u64> = elements.iter().map(|e| (e, group.order_of(e))).collect();
    for g1 in elements.iter().filter(|e| order_of[e] == orders[0]) {
        for g2 in elements.iter().filter(|e| order_of[e] == orders[1]) {
            let g12 = group.compose(g1, g2);
            if order_of[&g12] != orders[2] {
                continue;
            }
            if group.generated_order(&[g1.clone(), g2.clone()]) == elements.len() {
                let g3 = group.inverse(&g12);
                return Ok(group.regular_constellation(&[g1.clone(), g2.clone(), g3]));
            }
        }
    }
    Err(Error::UnrealizableParam(format!("no generating triple of orders {orders:?} for m = {m}")))
}

fn to_rows(m: [[i64; 2]; 2]) -> Vec<Vec<i64>> {
    m.iter().map(|r| r.to_vec()).collect()
}

/// `z -> A^rot z + t` on `(Z/m)^d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineElement {
    rot: u32,
    t: Vec<i64>,
}

/// The group `{z -> A^r z + t}` for a fixed integer matrix `A` of order `k` modulo `m`.
#[derive(Debug, Clone)]
pub struct AffineGroup {
    modulus: i64,
    /// `powers[r]` is `A^r` reduced mod `m`.
    powers: Vec<Vec<Vec<i64>>>,
}

impl AffineGroup {
    pub fn new(modulus: u64, matrix: Vec<Vec<i64>>, order: u32) -> Self {
        let m = modulus as i64;
        let d = matrix.len();
        let mut powers = Vec::with_capacity(order as usize);
        let mut current: Vec<Vec<i64>> = (0..d).map(|i| (0..d).map(|j| i64::from(i == j)).collect()).collect();
        for _ in 0..order {
            powers.push(current.iter().map(|r| r.iter().map(|x| x.rem_euclid(m)).collect()).collect());
            current = mat_mul(&matrix, &current);
        }
        debug_assert!(current.iter().enumerate().all(|(i, r)| r.iter().enumerate().all(|(j, &x)| (x - i64::from(
            i == j
        ))
        .rem_euclid(m)
            == 0)));
        AffineGroup { modulus: m, powers }
    }

    fn dim(&self) -> usize {
        self.powers[0].len()
    }

    fn k(&self) -> u32 {
        self.powers.len() as u32
    }

    pub fn element(&self, rot: u32, t: &[i64]) -> AffineElement {
        AffineElement { rot: rot % self.k(), t: t.iter().map(|x| x.rem_euclid(self.modulus)).collect() }
    }

    fn apply_rot(&self, rot: u32, t: &[i64]) -> Vec<i64> {
        self.powers[rot as usize]
            .iter()
            .map(|row| row.iter().zip(t).map(|(a, b)| a * b).sum::<i64>().rem_euclid(self.modulus))
            .collect()
    }

    /// `h` first, then `g`.
    pub fn compose(&self, h: &AffineElement, g: &AffineElement) -> AffineElement {
        let moved = self.apply_rot(g.rot, &h.t);
        AffineElement {
            rot: (h.rot + g.rot) % self.k(),
            t: moved.iter().zip(&g.t).map(|(a, b)| (a + b).rem_euclid(self.modulus)).collect(),
        }
    }

    pub fn identity(&self) -> AffineElement {
        self.element(0, &vec![0; self.dim()])
    }

    pub fn inverse(&self, g: &AffineElement) -> AffineElement {
        let rot = (self.k() - g.rot) % self.k();
        let t = self.apply_rot(rot, &g.t).iter().map(|x| (-x).rem_euclid(self.modulus)).collect();
        AffineElement { rot, t }
    }

    pub fn order_of(&self, g: &AffineElement) -> u64 {
        let id = self.identity();
        let mut x = g.clone();
        let mut n = 1;
        while x != id {
            x = self.compose(&x, g);
            n += 1;
        }
        n
    }

    pub fn all_elements(&self) -> Vec<AffineElement> {
        let d = self.dim();
        let m = self.modulus;
        let count = (m as usize).pow(d as u32);
        let mut out = Vec::new();
        for rot in 0..self.k() {
            for idx in 0..count {
                let mut t = Vec::with_capacity(d);
                let mut rest = idx as i64;
                for _ in 0..d {
                    t.push(rest % m);
                    rest /= m;
                }
                out.push(AffineElement { rot, t });
            }
        }
        out
    }

    pub fn generated_order(&self, gens: &[AffineElement]) -> usize {
        let id = self.identity();
        let mut seen = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = self.compose(&x, g);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        seen.len()
    }

    /// The whole group acting on itself by right multiplication by each slot element.
    pub fn regular_constellation(&self, slot_elements: &[AffineElement]) -> Constellation {
        let elements = self.all_elements();
        let index: HashMap<&AffineElement, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let slots = slot_elements
            .iter()
            .enumerate()
            .map(|(i, g)| {
                let images = elements.iter().map(|h| index[&self.compose(h, g)]).collect();
                Slot::new(default_label(i), Permutation::new(images).expect("right multiplication is a bijection"))
            })
            .collect();
        Constellation::new(elements.len(), slots).expect("slot elements generate the group with identity product")
    }
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let d = a.len();
    (0..d).map(|i| (0..d).map(|j| (0..d).map(|l| a[i][l] * b[l][j]).sum()).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covering::{branching_datum, genus_rh};
    use crate::galois::{is_galois, monodromy_group};

    fn check(spec: ExemplarSpec, degree: usize, orders: &[u64], genus: u64) {
        let c = exemplar(&spec).unwrap();
        assert_eq!(c.degree(), degree, "{spec:?}");
        assert_eq!(branching_datum(&c).0.orders(), orders, "{spec:?}");
        assert_eq!(genus_rh(&c).unwrap(), genus, "{spec:?}");
        assert!(is_galois(&c, DEFAULT_CAP).unwrap(), "{spec:?}");
    }

    #[test]
    fn named_examples() {
        check(ExemplarSpec::new(FamilyTag::Tetra233, 0), 12, &[2, 3, 3], 0);
        check(ExemplarSpec::new(FamilyTag::Torus244, 1), 4, &[2, 4, 4], 1);
        check(ExemplarSpec::new(FamilyTag::Torus2222, 1), 2, &[2, 2, 2, 2], 1);
        check(ExemplarSpec::new(FamilyTag::Dihedral22N, 3), 6, &[2, 2, 3], 0);
    }

    #[test]
    fn platonic_and_power() {
        check(ExemplarSpec::new(FamilyTag::Octa234, 0), 24, &[2, 3, 4], 0);
        check(ExemplarSpec::new(FamilyTag::Icosa235, 0), 60, &[2, 3, 5], 0);
        check(ExemplarSpec::new(FamilyTag::PowerNN, 7), 7, &[7, 7], 0);
        check(ExemplarSpec::new(FamilyTag::Dihedral22N, 2), 4, &[2, 2, 2], 0);
    }

    #[test]
    fn torus_families_for_several_m() {
        for m in 1..=4 {
            check(ExemplarSpec::new(FamilyTag::Torus236, m), (6 * m * m) as usize, &[2, 3, 6], 1);
            check(ExemplarSpec::new(FamilyTag::Torus333, m), (3 * m * m) as usize, &[3, 3, 3], 1);
            check(ExemplarSpec::new(FamilyTag::Torus244, m), (4 * m * m) as usize, &[2, 4, 4], 1);
            check(ExemplarSpec::new(FamilyTag::Torus2222, m), (2 * m * m) as usize, &[2, 2, 2, 2], 1);
        }
    }

    #[test]
    fn solvability_matches_family() {
        for tag in FamilyTag::LISTED {
            let c = exemplar(&ExemplarSpec::new(tag, 3)).unwrap();
            let g = monodromy_group(&c, DEFAULT_CAP).unwrap();
            assert_eq!(g.is_solvable(), tag != FamilyTag::Icosa235, "{tag}");
        }
    }

    #[test]
    fn rejects_bad_params() {
        assert!(matches!(exemplar(&ExemplarSpec::new(FamilyTag::PowerNN, 1)), Err(Error::UnrealizableParam(_))));
        assert!(matches!(exemplar(&ExemplarSpec::new(FamilyTag::Torus236, 0)), Err(Error::UnrealizableParam(_))));
        assert!(matches!(exemplar(&ExemplarSpec::new(FamilyTag::Other, 3)), Err(Error::UnrealizableParam(_))));
        assert!(matches!(exemplar(&ExemplarSpec::new(FamilyTag::Torus236, 100)), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn multiplier_matrices_have_stated_orders() {
        for (mat, k) in [(EISENSTEIN_ORDER3, 3), (EISENSTEIN_ORDER6, 6), (GAUSSIAN_ORDER4, 4), (NEGATION, 2)] {
            let g = AffineGroup::new(7, to_rows(mat), k);
            assert_eq!(g.order_of(&g.element(1, &[0, 0])), k as u64);
        }
    }
}
