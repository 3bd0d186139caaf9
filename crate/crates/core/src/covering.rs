//! Branched coverings of the sphere as constellations.
//!
//! A constellation of degree `n` is a list of labeled permutations of the
//! `n` sheets, one per branch point, whose left-to-right product is the
//! identity and whose joint action is transitive.

use std::collections::HashSet;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{orbit, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Slot {
    pub point: String,
    pub perm: Permutation,
}

impl Slot {
    pub fn new(point: impl Into<String>, perm: Permutation) -> Self {
        Slot { point: point.into(), perm }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawConstellation")]
pub struct Constellation {
    degree: usize,
    slots: Vec<Slot>,
}

#[derive(Deserialize)]
struct RawConstellation {
    degree: usize,
    slots: Vec<Slot>,
}

impl TryFrom<RawConstellation> for Constellation {
    type Error = Error;

    fn try_from(raw: RawConstellation) -> Result<Self> {
        Constellation::new(raw.degree, raw.slots)
    }
}

/// Labels `p1, p2, …` used when the caller does not name the branch points.
pub fn default_label(i: usize) -> String {
    format!("p{}", i + 1)
}

impl Constellation {
    pub fn new(degree: usize, slots: Vec<Slot>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidConstellation("degree must be at least 1".into()));
        }
        let mut labels = HashSet::new();
        for s in &slots {
            if s.perm.degree() != degree {
                return Err(Error::InvalidConstellation(format!(
                    "slot {} has degree {}, expected {degree}",
                    s.point,
                    s.perm.degree()
                )));
            }
            if !labels.insert(s.point.as_str()) {
                return Err(Error::InvalidConstellation(format!("point label {} repeated", s.point)));
            }
        }
        let product = slots.iter().fold(Permutation::identity(degree), |acc, s| acc.then(&s.perm));
        if !product.is_identity() {
            return Err(Error::InvalidConstellation(format!("slot product is {product}, not the identity")));
        }
        let gens: Vec<Permutation> = slots.iter().map(|s| s.perm.clone()).collect();
        if orbit(degree, &gens, 0).len() != degree {
            return Err(Error::InvalidConstellation("slot permutations do not act transitively".into()));
        }
        Ok(Constellation { degree, slots })
    }

    /// Slots labeled `p1, p2, …` in order.
    pub fn from_perms(degree: usize, perms: Vec<Permutation>) -> Result<Self> {
        let slots = perms.into_iter().enumerate().map(|(i, p)| Slot::new(default_label(i), p)).collect();
        Constellation::new(degree, slots)
    }

    /// Appends the slot that closes the product: the inverse of the product of `perms`.
    pub fn closing(degree: usize, perms: Vec<Permutation>) -> Result<Self> {
        let product = perms.iter().fold(Permutation::identity(degree), |acc, p| acc.then(p));
        let mut perms = perms;
        perms.push(product.inverse());
        Constellation::from_perms(degree, perms)
    }

    /// The degree-one covering with no branch points.
    pub fn trivial() -> Self {
        Constellation { degree: 1, slots: Vec::new() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    pub fn labels(&self) -> Vec<&str> {
        self.slots.iter().map(|s| s.point.as_str()).collect()
    }

    pub fn perms(&self) -> Vec<Permutation> {
        self.slots.iter().map(|s| s.perm.clone()).collect()
    }

    pub fn perm_at(&self, label: &str) -> Option<&Permutation> {
        self.slots.iter().find(|s| s.point == label).map(|s| &s.perm)
    }

    /// Simultaneous conjugation of every slot; `r` maps old sheet names to new ones.
    pub fn relabel(&self, r: &Permutation) -> Result<Self> {
        if r.degree() != self.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: r.degree() });
        }
        let slots = self.slots.iter().map(|s| Slot::new(s.point.clone(), s.perm.relabel(r))).collect();
        Ok(Constellation { degree: self.degree, slots })
    }

    /// Same covering with slot labels renamed positionally.
    pub fn with_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Self> {
        if labels.len() != self.slots.len() {
            return Err(Error::LabelMismatch(format!("{} labels given for {} slots", labels.len(), self.slots.len())));
        }
        let slots = self.slots.iter().zip(labels).map(|(s, l)| Slot::new(l.as_ref(), s.perm.clone())).collect();
        Constellation::new(self.degree, slots)
    }

    pub(crate) fn from_parts_unchecked(degree: usize, slots: Vec<Slot>) -> Self {
        debug_assert!(Constellation::new(degree, slots.clone()).is_ok());
        Constellation { degree, slots }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DatumEntry {
    pub point: String,
    pub order: u64,
}

/// Branch points with their orders; labels distinct, every order at least 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawDatum")]
pub struct BranchingDatum {
    entries: Vec<DatumEntry>,
}

#[derive(Deserialize)]
struct RawDatum {
    entries: Vec<DatumEntry>,
}

impl TryFrom<RawDatum> for BranchingDatum {
    type Error = Error;

    fn try_from(raw: RawDatum) -> Result<Self> {
        BranchingDatum::new(raw.entries)
    }
}

impl BranchingDatum {
    pub fn new(entries: Vec<DatumEntry>) -> Result<Self> {
        let mut labels = HashSet::new();
        for e in &entries {
            if e.order < 2 {
                return Err(Error::InvalidDatum(format!("order {} at {} is below 2", e.order, e.point)));
            }
            if !labels.insert(e.point.as_str()) {
                return Err(Error::InvalidDatum(format!("point {} listed twice", e.point)));
            }
        }
        Ok(BranchingDatum { entries })
    }

    /// Orders at points labeled `p1, p2, …`.
    pub fn from_orders(orders: &[u64]) -> Result<Self> {
        BranchingDatum::new(
            orders.iter().enumerate().map(|(i, &order)| DatumEntry { point: default_label(i), order }).collect(),
        )
    }

    pub fn entries(&self) -> &[DatumEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn order_at(&self, point: &str) -> Option<u64> {
        self.entries.iter().find(|e| e.point == point).map(|e| e.order)
    }

    /// Orders as a sorted multiset, labels dropped.
    pub fn orders(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self.entries.iter().map(|e| e.order).collect();
        v.sort_unstable();
        v
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PassportEntry {
    pub point: String,
    pub cycle_type: Vec<usize>,
}

pub type Passport = Vec<PassportEntry>;

/// The minimal datum of `c` (identity slots omitted) and its full passport.
pub fn branching_datum(c: &Constellation) -> (BranchingDatum, Passport) {
    let mut entries = Vec::new();
    let mut passport = Vec::new();
    for s in &c.slots {
        let data = s.perm.cycle_data();
        if data.order > 1 {
            entries.push(DatumEntry { point: s.point.clone(), order: data.order });
        }
        passport.push(PassportEntry { point: s.point.clone(), cycle_type: data.cycle_type });
    }
    (BranchingDatum { entries }, passport)
}

/// Genus of the total space, from `2 - 2g = 2n - Σ (n - #cycles)`.
pub fn genus_rh(c: &Constellation) -> Result<u64> {
    let n = c.degree as i64;
    let ramification: i64 = c.slots.iter().map(|s| n - s.perm.num_cycles() as i64).sum();
    let euler = 2 * n - ramification;
    if euler % 2 != 0 {
        return Err(Error::NonIntegerGenus { euler });
    }
    let genus = 1 - euler / 2;
    if genus < 0 {
        return Err(Error::NegativeGenus { euler });
    }
    Ok(genus as u64)
}

/// Every cycle length at a listed point divides the listed order; unlisted points are unbranched.
pub fn is_subject_to(c: &Constellation, d: &BranchingDatum) -> bool {
    c.slots.iter().all(|s| match d.order_at(&s.point) {
        Some(order) => s.perm.cycles().iter().all(|cy| order % cy.len() as u64 == 0),
        None => s.perm.is_identity(),
    })
}

/// `g = 1 - (n/2)(2 - Σ(1 - 1/b))` for a Galois covering of the sphere, exact.
pub fn galois_rh_genus(n: u64, orders: &[u64]) -> Ratio<i64> {
    let one = Ratio::from_integer(1);
    let sum = orders.iter().fold(Ratio::from_integer(0), |acc, &b| acc + one - Ratio::new(1, b as i64));
    one - Ratio::new(n as i64, 2) * (Ratio::from_integer(2) - sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    pub(crate) fn s3_constellation() -> Constellation {
        Constellation::closing(3, vec![p(&[1, 0, 2]), p(&[0, 2, 1])]).unwrap()
    }

    fn six_transpositions() -> Constellation {
        Constellation::from_perms(2, vec![p(&[1, 0]); 6]).unwrap()
    }

    #[test]
    fn validation_catches_each_invariant() {
        assert!(Constellation::from_perms(3, vec![p(&[1, 0, 2])]).is_err());
        assert!(Constellation::from_perms(4, vec![p(&[1, 0, 2, 3]), p(&[1, 0, 2, 3])]).is_err());
        assert!(Constellation::new(2, vec![Slot::new("a", p(&[1, 0])), Slot::new("a", p(&[1, 0]))]).is_err());
        assert!(Constellation::from_perms(3, vec![p(&[1, 0])]).is_err());
        assert!(Constellation::new(1, vec![]).is_ok());
    }

    #[test]
    fn json_load_validates() {
        let ok = r#"{"degree":2,"slots":[{"point":"a","perm":[1,0]},{"point":"b","perm":[1,0]}]}"#;
        let c: Constellation = serde_json::from_str(ok).unwrap();
        assert_eq!(c.degree(), 2);
        let bad = r#"{"degree":2,"slots":[{"point":"a","perm":[1,0]}]}"#;
        assert!(serde_json::from_str::<Constellation>(bad).is_err());
    }

    #[test]
    fn datum_of_power_map() {
        for n in 2..9 {
            let s = Permutation::rotation(n);
            let c = Constellation::from_perms(n, vec![s.clone(), s.inverse()]).unwrap();
            assert_eq!(branching_datum(&c).0.orders(), vec![n as u64, n as u64]);
        }
    }

    #[test]
    fn datum_of_s3_constellation() {
        let c = s3_constellation();
        let (d, passport) = branching_datum(&c);
        assert_eq!(d.orders(), vec![2, 2, 3]);
        assert_eq!(passport[2].cycle_type, vec![3]);
        let id = Constellation::from_perms(1, vec![Permutation::identity(1); 2]).unwrap();
        let (d, passport) = branching_datum(&id);
        assert!(d.is_empty());
        assert_eq!(passport.len(), 2);
    }

    #[test]
    fn genus_examples() {
        assert_eq!(genus_rh(&six_transpositions()).unwrap(), 2);
        assert_eq!(genus_rh(&s3_constellation()).unwrap(), 0);
        let z6 = Permutation::rotation(6);
        let c = Constellation::from_perms(6, vec![z6.pow(3), z6.pow(2), z6.clone()]).unwrap();
        assert_eq!(branching_datum(&c).0.orders(), vec![2, 3, 6]);
        assert_eq!(genus_rh(&c).unwrap(), 1);
    }

    #[test]
    fn subject_to_examples() {
        let c = s3_constellation();
        let (own, _) = branching_datum(&c);
        assert!(is_subject_to(&c, &own));
        assert!(is_subject_to(&c, &BranchingDatum::from_orders(&[2, 2, 6]).unwrap()));
        assert!(!is_subject_to(&c, &BranchingDatum::from_orders(&[2, 2, 2]).unwrap()));
        assert!(!is_subject_to(&c, &BranchingDatum::from_orders(&[2, 2]).unwrap()));
    }

    #[test]
    fn galois_genus_formula() {
        assert_eq!(galois_rh_genus(12, &[2, 3, 3]), Ratio::from_integer(0));
        assert_eq!(galois_rh_genus(24, &[2, 3, 4]), Ratio::from_integer(0));
        assert_eq!(galois_rh_genus(60, &[2, 3, 5]), Ratio::from_integer(0));
        assert_eq!(galois_rh_genus(4, &[2, 4, 4]), Ratio::from_integer(1));
        assert_eq!(galois_rh_genus(2, &[2; 6]), Ratio::from_integer(2));
        assert_eq!(galois_rh_genus(5, &[2, 3]), Ratio::new(-13, 12));
    }

    #[test]
    fn datum_validation() {
        assert!(BranchingDatum::from_orders(&[1, 2]).is_err());
        let dup = vec![DatumEntry { point: "a".into(), order: 2 }, DatumEntry { point: "a".into(), order: 3 }];
        assert!(BranchingDatum::new(dup).is_err());
    }
}
