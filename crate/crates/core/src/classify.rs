//! Recognition of the nine branching types whose subject coverings have
//! total space of genus zero or one, and the prime-degree analysis built on
//! affine actions over `Z/p`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::covering::{galois_rh_genus, BranchingDatum};
use crate::error::{Error, Result};
use crate::perm::GroupTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyTag {
    PowerNN,
    Dihedral22N,
    Tetra233,
    Octa234,
    Icosa235,
    Torus236,
    Torus333,
    Torus244,
    Torus2222,
    Other,
}

impl FamilyTag {
    pub const LISTED: [FamilyTag; 9] = [
        FamilyTag::PowerNN,
        FamilyTag::Dihedral22N,
        FamilyTag::Tetra233,
        FamilyTag::Octa234,
        FamilyTag::Icosa235,
        FamilyTag::Torus236,
        FamilyTag::Torus333,
        FamilyTag::Torus244,
        FamilyTag::Torus2222,
    ];

    pub fn is_sphere(self) -> bool {
        matches!(
            self,
            FamilyTag::PowerNN
                | FamilyTag::Dihedral22N
                | FamilyTag::Tetra233
                | FamilyTag::Octa234
                | FamilyTag::Icosa235
        )
    }

    pub fn is_torus(self) -> bool {
        matches!(self, FamilyTag::Torus236 | FamilyTag::Torus333 | FamilyTag::Torus244 | FamilyTag::Torus2222)
    }

    /// Order of the rotation part `a` in the torus groups `{z -> az + b}`.
    pub fn multiplier_order(self) -> Option<u64> {
        match self {
            FamilyTag::Torus236 => Some(6),
            FamilyTag::Torus333 => Some(3),
            FamilyTag::Torus244 => Some(4),
            FamilyTag::Torus2222 => Some(2),
            _ => None,
        }
    }

    /// Branching orders of the family; `n` is the family parameter where one exists.
    pub fn orders(self, n: u64) -> Vec<u64> {
        match self {
            FamilyTag::PowerNN => vec![n, n],
            FamilyTag::Dihedral22N => vec![2, 2, n],
            FamilyTag::Tetra233 => vec![2, 3, 3],
            FamilyTag::Octa234 => vec![2, 3, 4],
            FamilyTag::Icosa235 => vec![2, 3, 5],
            FamilyTag::Torus236 => vec![2, 3, 6],
            FamilyTag::Torus333 => vec![3, 3, 3],
            FamilyTag::Torus244 => vec![2, 4, 4],
            FamilyTag::Torus2222 => vec![2, 2, 2, 2],
            FamilyTag::Other => Vec::new(),
        }
    }

    fn cli_name(self) -> &'static str {
        match self {
            FamilyTag::PowerNN => "powernn",
            FamilyTag::Dihedral22N => "dihedral22n",
            FamilyTag::Tetra233 => "tetra233",
            FamilyTag::Octa234 => "octa234",
            FamilyTag::Icosa235 => "icosa235",
            FamilyTag::Torus236 => "torus236",
            FamilyTag::Torus333 => "torus333",
            FamilyTag::Torus244 => "torus244",
            FamilyTag::Torus2222 => "torus2222",
            FamilyTag::Other => "other",
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.cli_name())
    }
}

impl FromStr for FamilyTag {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let key = s.to_ascii_lowercase().replace(['-', '_'], "");
        FamilyTag::LISTED
            .iter()
            .chain(std::iter::once(&FamilyTag::Other))
            .find(|t| t.cli_name() == key)
            .copied()
            .ok_or_else(|| format!("unknown family {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GenusBound {
    Zero,
    One,
    Unbounded,
}

impl GenusBound {
    pub fn admits(self, genus: u64) -> bool {
        match self {
            GenusBound::Zero => genus == 0,
            GenusBound::One => genus <= 1,
            GenusBound::Unbounded => true,
        }
    }
}

impl Serialize for GenusBound {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            GenusBound::Zero => s.serialize_u8(0),
            GenusBound::One => s.serialize_u8(1),
            GenusBound::Unbounded => s.serialize_str("unbounded"),
        }
    }
}

impl<'de> Deserialize<'de> for GenusBound {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match wire::Value::deserialize(d)? {
            wire::Value::Int(0) => Ok(GenusBound::Zero),
            wire::Value::Int(1) => Ok(GenusBound::One),
            wire::Value::Str(s) if s == "unbounded" => Ok(GenusBound::Unbounded),
            _ => Err(serde::de::Error::custom("genus bound must be 0, 1 or \"unbounded\"")),
        }
    }
}

mod wire {
    use serde::Deserialize;

    #[derive(Deserialize)]
    #[serde(untagged)]
    pub enum Value {
        Int(u64),
        Str(String),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatumClass {
    pub tag: FamilyTag,
    /// The `n` of `(n,n)` and `(2,2,n)`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub param: Option<u64>,
    #[serde(skip_serializing_if = "is_false", default)]
    pub solvable_guarantee: bool,
    /// Set only for `(2,3,5)`: inverses need a degree-5 equation rather than radicals.
    #[serde(skip_serializing_if = "is_false", default)]
    pub degree_five_equation: bool,
    pub genus_bound: GenusBound,
}

fn is_false(b: &bool) -> bool {
    !*b
}

impl DatumClass {
    fn of(tag: FamilyTag, param: Option<u64>) -> Self {
        let genus_bound = if tag.is_sphere() {
            GenusBound::Zero
        } else if tag.is_torus() {
            GenusBound::One
        } else {
            GenusBound::Unbounded
        };
        DatumClass {
            tag,
            param,
            solvable_guarantee: !matches!(tag, FamilyTag::Icosa235 | FamilyTag::Other),
            degree_five_equation: tag == FamilyTag::Icosa235,
            genus_bound,
        }
    }
}

pub fn classify_datum(d: &BranchingDatum) -> DatumClass {
    classify_orders(&d.orders())
}

/// Matches in the order `(n,n)`, `(2,2,n)`, triangle types, `(2,2,2,2)`.
pub fn classify_orders(orders: &[u64]) -> DatumClass {
    let mut o = orders.to_vec();
    o.sort_unstable();
    let (tag, param) = match o.as_slice() {
        [a, b] if a == b && *a >= 2 => (FamilyTag::PowerNN, Some(*a)),
        [2, 2, n] => (FamilyTag::Dihedral22N, Some(*n)),
        [2, 3, 3] => (FamilyTag::Tetra233, None),
        [2, 3, 4] => (FamilyTag::Octa234, None),
        [2, 3, 5] => (FamilyTag::Icosa235, None),
        [2, 3, 6] => (FamilyTag::Torus236, None),
        [3, 3, 3] => (FamilyTag::Torus333, None),
        [2, 4, 4] => (FamilyTag::Torus244, None),
        [2, 2, 2, 2] => (FamilyTag::Torus2222, None),
        _ => (FamilyTag::Other, None),
    };
    DatumClass::of(tag, param)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaloisDatum {
    /// Sorted branching orders.
    pub orders: Vec<u64>,
    /// Degree of the Galois covering.
    pub n: u64,
}

/// All `(orders, n)` with `n <= n_max`, every order a divisor of `n` that is
/// at least 2, and Galois Riemann-Hurwitz genus equal to `target_genus`.
pub fn enumerate_galois_data(target_genus: u64, n_max: u64) -> Vec<GaloisDatum> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.extend(enumerate_for_degree(target_genus, n));
    }
    out
}

pub fn enumerate_for_degree(target_genus: u64, n: u64) -> Vec<GaloisDatum> {
    let divisors: Vec<u64> = (2..=n).filter(|d| n.is_multiple_of(*d)).collect();
    // Σ (1 - 1/b) = 2 - 2(1 - g)/n
    let target = Ratio::from_integer(2) - Ratio::new(2 * (1 - target_genus as i64), n as i64);
    let mut out = Vec::new();
    let mut current = Vec::new();
    search_orders(&divisors, 0, target, &mut current, &mut |orders| {
        debug_assert_eq!(galois_rh_genus(n, orders), Ratio::from_integer(target_genus as i64));
        out.push(GaloisDatum { orders: orders.to_vec(), n });
    });
    out
}

fn search_orders(
    divisors: &[u64],
    from: usize,
    remaining: Ratio<i64>,
    current: &mut Vec<u64>,
    emit: &mut dyn FnMut(&[u64]),
) {
    let zero = Ratio::from_integer(0);
    if remaining == zero && !current.is_empty() {
        emit(current);
    }
    if remaining <= zero {
        return;
    }
    for (k, &b) in divisors.iter().enumerate().skip(from) {
        let term = Ratio::from_integer(1) - Ratio::new(1, b as i64);
        // terms only grow from here on
        if term > remaining {
            break;
        }
        current.push(b);
        search_orders(divisors, k, remaining - term, current, emit);
        current.pop();
    }
}

/// An order in `(Z/p)^*`, or infinity for the multiplier `a = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RittOrder {
    Finite(u64),
    Infinite,
}

impl RittOrder {
    fn reciprocal(self) -> Ratio<i64> {
        match self {
            RittOrder::Finite(n) => Ratio::new(1, n as i64),
            RittOrder::Infinite => Ratio::from_integer(0),
        }
    }
}

impl Ord for RittOrder {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (RittOrder::Finite(a), RittOrder::Finite(b)) => a.cmp(b),
            (RittOrder::Finite(_), RittOrder::Infinite) => Ordering::Less,
            (RittOrder::Infinite, RittOrder::Finite(_)) => Ordering::Greater,
            (RittOrder::Infinite, RittOrder::Infinite) => Ordering::Equal,
        }
    }
}

impl PartialOrd for RittOrder {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for RittOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RittOrder::Finite(n) => write!(f, "{n}"),
            RittOrder::Infinite => f.write_str("inf"),
        }
    }
}

/// Infinity is `0` on the wire.
impl Serialize for RittOrder {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            RittOrder::Finite(n) => s.serialize_u64(*n),
            RittOrder::Infinite => s.serialize_u64(0),
        }
    }
}

impl<'de> Deserialize<'de> for RittOrder {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match u64::deserialize(d)? {
            0 => Ok(RittOrder::Infinite),
            1 => Err(serde::de::Error::custom("order 1 is written as 0 (infinity)")),
            n => Ok(RittOrder::Finite(n)),
        }
    }
}

/// Largest number of terms searched; beyond four, `Σ 1/n_i <= k/2 < k - 2`.
const RITT_MAX_TERMS: usize = 4;

/// Every non-decreasing solution of `Σ 1/n_i = k - 2` with `n_i >= 2` or infinite.
pub fn ritt_equation_solutions() -> Vec<Vec<RittOrder>> {
    let mut out = Vec::new();
    for k in 1..=RITT_MAX_TERMS {
        let mut current = Vec::new();
        ritt_search(k, 2, Ratio::from_integer(k as i64 - 2), &mut current, &mut out);
    }
    out
}

fn ritt_search(k: usize, min: u64, remaining: Ratio<i64>, current: &mut Vec<RittOrder>, out: &mut Vec<Vec<RittOrder>>) {
    let zero = Ratio::from_integer(0);
    let left = k - current.len();
    if left == 0 {
        if remaining == zero {
            out.push(current.clone());
        }
        return;
    }
    if remaining < zero {
        return;
    }
    if remaining == zero {
        // Only infinite terms contribute nothing.
        current.extend(std::iter::repeat_n(RittOrder::Infinite, left));
        out.push(current.clone());
        current.truncate(k - left);
        return;
    }
    // 1/n <= remaining and left/n >= remaining
    let lo = min.max((Ratio::from_integer(1) / remaining).ceil().to_integer() as u64);
    let hi = (Ratio::from_integer(left as i64) / remaining).floor().to_integer() as u64;
    for n in lo..=hi {
        let term = RittOrder::Finite(n);
        current.push(term);
        ritt_search(k, n, remaining - term.reciprocal(), current, out);
        current.pop();
    }
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Number of cycles of `z -> az + b` on `Z/p`, i.e. of preimages of the
/// corresponding critical value: 1 for a translation, `1 + (p-1)/ord(a)` otherwise.
pub fn preimage_count(a_order: RittOrder, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    match a_order {
        RittOrder::Infinite => Ok(1),
        RittOrder::Finite(0) => Err(Error::NonDivisor { order: 0, p }),
        RittOrder::Finite(a) if !(p - 1).is_multiple_of(a) => Err(Error::NonDivisor { order: a, p }),
        RittOrder::Finite(a) => Ok(1 + (p - 1) / a),
    }
}

/// Largest prime degree accepted by [`affine_embedding`].
pub const AFFINE_MAX_DEGREE: usize = 13;

/// A relabeling of the points by `Z/p` under which every generator is `z -> az + b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineEmbedding {
    pub p: u64,
    /// `relabel[x]` is the residue assigned to point `x`.
    pub relabel: Vec<u64>,
    /// `(a, b)` for each generator, in generator order.
    pub generator_maps: Vec<(u64, u64)>,
}

impl AffineEmbedding {
    /// `(a, b)` with `relabel[g(x)] = a * relabel[x] + b`, if `g` is affine in these labels.
    pub fn affine_form(&self, g: &crate::perm::Permutation) -> Option<(u64, u64)> {
        affine_form(self.p, &self.relabel, g)
    }
}

fn affine_form(p: u64, phi: &[u64], g: &crate::perm::Permutation) -> Option<(u64, u64)> {
    let inv: Vec<usize> = {
        let mut v = vec![0; phi.len()];
        for (x, &r) in phi.iter().enumerate() {
            v[r as usize] = x;
        }
        v
    };
    let b = phi[g.apply(inv[0])];
    let a = (phi[g.apply(inv[1])] + p - b) % p;
    if a == 0 {
        return None;
    }
    (0..p).all(|z| phi[g.apply(inv[z as usize])] == (a * z + b) % p).then_some((a, b))
}

/// Searches for a relabeling of a solvable transitive group of prime degree
/// that turns every element into an affine map of `Z/p`.
///
/// Point 0 is sent to 0 and point 1 to 1 (translations and scalings normalize
/// AGL(1,p)), then the remaining labels are assigned by backtracking with
/// partial-affinity pruning.
pub fn affine_embedding(g: &GroupTable) -> Result<Option<AffineEmbedding>> {
    let n = g.degree();
    if !is_prime(n as u64) || n > AFFINE_MAX_DEGREE {
        return Err(Error::NotPrimeDegree(n));
    }
    if !g.is_transitive() {
        return Err(Error::NotTransitive);
    }
    if !g.is_solvable() {
        return Err(Error::NotSolvable);
    }
    let p = n as u64;
    if n == 2 {
        let relabel = vec![0, 1];
        let generator_maps = g.generators().iter().map(|x| affine_form(p, &relabel, x).unwrap()).collect();
        return Ok(Some(AffineEmbedding { p, relabel, generator_maps }));
    }
    let order = crate::perm::orbit_bfs_order(n, g.generators(), 0);
    let mut phi: Vec<Option<u64>> = vec![None; n];
    let mut used = vec![false; n];
    phi[0] = Some(0);
    used[0] = true;
    phi[1] = Some(1);
    used[1] = true;
    let rest: Vec<usize> = order.into_iter().filter(|&x| x > 1).collect();
    if assign(p, g, &rest, 0, &mut phi, &mut used) {
        let relabel: Vec<u64> = phi.into_iter().map(Option::unwrap).collect();
        let generator_maps =
            g.generators().iter().map(|x| affine_form(p, &relabel, x).expect("checked during search")).collect();
        return Ok(Some(AffineEmbedding { p, relabel, generator_maps }));
    }
    Ok(None)
}

fn assign(p: u64, g: &GroupTable, rest: &[usize], k: usize, phi: &mut [Option<u64>], used: &mut [bool]) -> bool {
    if k == rest.len() {
        let full: Vec<u64> = phi.iter().map(|v| v.unwrap()).collect();
        return g.generators().iter().all(|x| affine_form(p, &full, x).is_some());
    }
    let x = rest[k];
    for v in 0..p {
        if used[v as usize] {
            continue;
        }
        phi[x] = Some(v);
        used[v as usize] = true;
        if g.generators().iter().all(|gen| partially_affine(p, phi, gen)) && assign(p, g, rest, k + 1, phi, used) {
            return true;
        }
        phi[x] = None;
        used[v as usize] = false;
    }
    false
}

/// Whether the known pairs `(phi(y), phi(g y))` all lie on one map `z -> az + b`, `a != 0`.
fn partially_affine(p: u64, phi: &[Option<u64>], g: &crate::perm::Permutation) -> bool {
    let pairs: Vec<(u64, u64)> = (0..phi.len()).filter_map(|y| Some((phi[y]?, phi[g.apply(y)]?))).collect();
    if pairs.len() < 2 {
        return true;
    }
    let (u0, v0) = pairs[0];
    let (u1, v1) = pairs[1];
    let du = (u1 + p - u0) % p;
    let dv = (v1 + p - v0) % p;
    let a = dv * mod_inverse(du, p) % p;
    if a == 0 {
        return false;
    }
    let b = (v0 + p * p - a * u0 % p) % p;
    pairs.iter().all(|&(u, v)| (a * u + b) % p == v)
}

pub(crate) fn mod_inverse(x: u64, p: u64) -> u64 {
    let mut result = 1u64;
    let mut base = x % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{Permutation, DEFAULT_CAP};

    fn inf() -> RittOrder {
        RittOrder::Infinite
    }

    fn f(n: u64) -> RittOrder {
        RittOrder::Finite(n)
    }

    #[test]
    fn classify_examples() {
        let icosa = classify_orders(&[2, 3, 5]);
        assert_eq!(icosa.tag, FamilyTag::Icosa235);
        assert!(!icosa.solvable_guarantee);
        assert!(icosa.degree_five_equation);
        assert_eq!(classify_orders(&[7, 2, 2]).tag, FamilyTag::Dihedral22N);
        let other = classify_orders(&[2, 3, 7]);
        assert_eq!(other.tag, FamilyTag::Other);
        assert_eq!(other.genus_bound, GenusBound::Unbounded);
        assert!(!other.solvable_guarantee);
    }

    #[test]
    fn classify_overlaps_follow_priority() {
        assert_eq!(classify_orders(&[2, 2, 2]).tag, FamilyTag::Dihedral22N);
        assert_eq!(classify_orders(&[2, 2, 2]).param, Some(2));
        assert_eq!(classify_orders(&[2, 2, 4]).tag, FamilyTag::Dihedral22N);
        assert_eq!(classify_orders(&[2, 2]).tag, FamilyTag::PowerNN);
        assert_eq!(classify_orders(&[3, 3, 3]).genus_bound, GenusBound::One);
        assert_eq!(classify_orders(&[2, 3]).tag, FamilyTag::Other);
    }

    #[test]
    fn class_json_shape() {
        let v = serde_json::to_value(classify_orders(&[2, 3, 7])).unwrap();
        assert_eq!(v["tag"], "Other");
        assert_eq!(v["genus_bound"], "unbounded");
        let back: DatumClass =
            serde_json::from_value(serde_json::to_value(classify_orders(&[2, 2, 5])).unwrap()).unwrap();
        assert_eq!(back, classify_orders(&[2, 2, 5]));
    }

    #[test]
    fn family_names_parse() {
        assert_eq!("tetra233".parse::<FamilyTag>().unwrap(), FamilyTag::Tetra233);
        assert_eq!("Torus2222".parse::<FamilyTag>().unwrap(), FamilyTag::Torus2222);
        assert!("cube".parse::<FamilyTag>().is_err());
    }

    #[test]
    fn enumeration_small_cases() {
        assert!(enumerate_galois_data(0, 1).is_empty());
        let at12 = enumerate_for_degree(0, 12);
        let orders: Vec<Vec<u64>> = at12.into_iter().map(|d| d.orders).collect();
        assert_eq!(orders, vec![vec![2, 2, 6], vec![2, 3, 3], vec![12, 12]]);
        let torus4: Vec<Vec<u64>> = enumerate_for_degree(1, 4).into_iter().map(|d| d.orders).collect();
        assert_eq!(torus4, vec![vec![2, 2, 2, 2], vec![2, 4, 4]]);
    }

    #[test]
    fn ritt_solutions_are_the_six() {
        let sols = ritt_equation_solutions();
        assert_eq!(
            sols,
            vec![
                vec![inf(), inf()],
                vec![f(2), f(2), inf()],
                vec![f(2), f(3), f(6)],
                vec![f(2), f(4), f(4)],
                vec![f(3), f(3), f(3)],
                vec![f(2), f(2), f(2), f(2)],
            ]
        );
        assert_eq!(serde_json::to_string(&sols[1]).unwrap(), "[2,2,0]");
    }

    #[test]
    fn preimage_counts() {
        assert_eq!(preimage_count(f(2), 5).unwrap(), 3);
        assert_eq!(preimage_count(inf(), 7).unwrap(), 1);
        assert_eq!(preimage_count(f(4), 5).unwrap(), 2);
        assert_eq!(preimage_count(f(3), 5).unwrap_err(), Error::NonDivisor { order: 3, p: 5 });
        assert_eq!(preimage_count(f(2), 9).unwrap_err(), Error::NotPrime(9));
    }

    fn affine_perm(p: u64, a: u64, b: u64) -> Permutation {
        Permutation::new((0..p).map(|z| ((a * z + b) % p) as usize).collect()).unwrap()
    }

    #[test]
    fn dihedral_d5_embeds_with_sign_multipliers() {
        let g = GroupTable::generate(5, &[affine_perm(5, 1, 1), affine_perm(5, 4, 0)], DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 10);
        let e = affine_embedding(&g).unwrap().unwrap();
        for x in g.elements() {
            let (a, _) = e.affine_form(x).unwrap();
            assert!(a == 1 || a == 4);
        }
    }

    #[test]
    fn cyclic_and_full_affine_embed() {
        let c7 = GroupTable::generate(7, &[Permutation::rotation(7)], DEFAULT_CAP).unwrap();
        let e = affine_embedding(&c7).unwrap().unwrap();
        assert_eq!(e.generator_maps[0].0, 1);
        let agl = GroupTable::generate(5, &[affine_perm(5, 1, 1), affine_perm(5, 2, 0)], DEFAULT_CAP).unwrap();
        assert_eq!(agl.order(), 20);
        let e = affine_embedding(&agl).unwrap().unwrap();
        assert!(agl.elements().iter().all(|x| e.affine_form(x).is_some()));
    }

    #[test]
    fn affine_embedding_preconditions() {
        let s5 = GroupTable::generate(
            5,
            &[Permutation::rotation(5), affine_perm(5, 1, 0).then(&Permutation::new(vec![1, 0, 2, 3, 4]).unwrap())],
            DEFAULT_CAP,
        )
        .unwrap();
        assert_eq!(s5.order(), 120);
        assert_eq!(affine_embedding(&s5).unwrap_err(), Error::NotSolvable);
        let c4 = GroupTable::generate(4, &[Permutation::rotation(4)], DEFAULT_CAP).unwrap();
        assert_eq!(affine_embedding(&c4).unwrap_err(), Error::NotPrimeDegree(4));
    }
}
