//! Radical expressions as shared DAGs with multivalued evaluation.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::{parse_rational, rat, rational_to_f64};

static NEXT_ROOT_ID: AtomicU64 = AtomicU64::new(1);

fn fresh_id() -> u64 {
    NEXT_ROOT_ID.fetch_add(1, Ordering::Relaxed)
}

/// Cap on the number of joint branch assignments `eval_multi` will visit.
pub const DEFAULT_BRANCH_LIMIT: u128 = 1 << 20;

/// Values closer than this are reported once by `eval_multi`.
pub const DEDUP_TOLERANCE: f64 = 1e-9;

#[derive(Debug)]
pub enum Node {
    Rational(BigRational),
    ImaginaryUnit,
    Add(RadicalExpr, RadicalExpr),
    Sub(RadicalExpr, RadicalExpr),
    Mul(RadicalExpr, RadicalExpr),
    Div(RadicalExpr, RadicalExpr),
    Neg(RadicalExpr),
    /// All `index`-th roots of `arg`. Two occurrences of the same node
    /// (same `id`) always take the same branch.
    Root {
        id: u64,
        index: u32,
        arg: RadicalExpr,
    },
}

#[derive(Clone)]
pub struct RadicalExpr(Arc<Node>);

/// Branch choice per root node id; absent ids use the principal branch.
pub type Branches = BTreeMap<u64, u32>;

/// Principal `k`-th root rotated by `branch` steps of `e^{2πi/k}`.
pub fn kth_root(z: Complex64, k: u32, branch: u32) -> Complex64 {
    if z == Complex64::new(0.0, 0.0) {
        return z;
    }
    let (r, theta) = z.to_polar();
    let k = k as f64;
    Complex64::from_polar(r.powf(1.0 / k), (theta + 2.0 * std::f64::consts::PI * branch as f64) / k)
}

fn checked_div(a: Complex64, b: Complex64) -> Result<Complex64> {
    if b.norm() == 0.0 {
        return Err(Error::DivisionByZero);
    }
    let q = a / b;
    if q.is_finite() {
        Ok(q)
    } else {
        Err(Error::DivisionByZero)
    }
}

impl RadicalExpr {
    fn wrap(node: Node) -> Self {
        RadicalExpr(Arc::new(node))
    }

    pub fn node(&self) -> &Node {
        &self.0
    }

    pub fn rational(r: BigRational) -> Self {
        Self::wrap(Node::Rational(r))
    }

    pub fn int(n: i64) -> Self {
        Self::rational(rat(n))
    }

    pub fn i() -> Self {
        Self::wrap(Node::ImaginaryUnit)
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self.node() {
            Node::Rational(r) => Some(r),
            _ => None,
        }
    }

    pub fn ptr_eq(&self, other: &RadicalExpr) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    pub fn add(&self, rhs: &RadicalExpr) -> Self {
        match (self.as_rational(), rhs.as_rational()) {
            (Some(a), Some(b)) => Self::rational(a + b),
            (Some(a), _) if a.is_zero() => rhs.clone(),
            (_, Some(b)) if b.is_zero() => self.clone(),
            _ => Self::wrap(Node::Add(self.clone(), rhs.clone())),
        }
    }

    pub fn sub(&self, rhs: &RadicalExpr) -> Self {
        match (self.as_rational(), rhs.as_rational()) {
            (Some(a), Some(b)) => Self::rational(a - b),
            (_, Some(b)) if b.is_zero() => self.clone(),
            _ => Self::wrap(Node::Sub(self.clone(), rhs.clone())),
        }
    }

    pub fn mul(&self, rhs: &RadicalExpr) -> Self {
        match (self.as_rational(), rhs.as_rational()) {
            (Some(a), Some(b)) => Self::rational(a * b),
            (Some(a), _) if a.is_one() => rhs.clone(),
            (_, Some(b)) if b.is_one() => self.clone(),
            _ => Self::wrap(Node::Mul(self.clone(), rhs.clone())),
        }
    }

    /// Division; a rational zero denominator is kept symbolic and fails at evaluation.
    pub fn div(&self, rhs: &RadicalExpr) -> Self {
        match (self.as_rational(), rhs.as_rational()) {
            (Some(a), Some(b)) if !b.is_zero() => Self::rational(a / b),
            (_, Some(b)) if b.is_one() => self.clone(),
            _ => Self::wrap(Node::Div(self.clone(), rhs.clone())),
        }
    }

    pub fn neg(&self) -> Self {
        match self.as_rational() {
            Some(a) => Self::rational(-a),
            None => Self::wrap(Node::Neg(self.clone())),
        }
    }

    /// A new root node; index 1 returns the argument itself.
    pub fn root(index: u32, arg: &RadicalExpr) -> Self {
        assert!(index >= 1, "root index must be positive");
        if index == 1 {
            return arg.clone();
        }
        Self::wrap(Node::Root { id: fresh_id(), index, arg: arg.clone() })
    }

    /// Structural copy whose root nodes get new ids, so its branches are
    /// chosen independently of the original. Sharing inside the copy is kept.
    pub fn fresh_copy(&self) -> Self {
        self.fresh_copy_with_map().0
    }

    /// [`fresh_copy`](Self::fresh_copy) together with the old-to-new root id map.
    pub fn fresh_copy_with_map(&self) -> (Self, HashMap<u64, u64>) {
        fn go(
            e: &RadicalExpr,
            map: &mut HashMap<u64, RadicalExpr>,
            memo: &mut HashMap<*const Node, RadicalExpr>,
        ) -> RadicalExpr {
            let key = Arc::as_ptr(&e.0);
            if let Some(done) = memo.get(&key) {
                return done.clone();
            }
            let out = match e.node() {
                Node::Rational(_) | Node::ImaginaryUnit => e.clone(),
                Node::Add(a, b) => RadicalExpr::wrap(Node::Add(go(a, map, memo), go(b, map, memo))),
                Node::Sub(a, b) => RadicalExpr::wrap(Node::Sub(go(a, map, memo), go(b, map, memo))),
                Node::Mul(a, b) => RadicalExpr::wrap(Node::Mul(go(a, map, memo), go(b, map, memo))),
                Node::Div(a, b) => RadicalExpr::wrap(Node::Div(go(a, map, memo), go(b, map, memo))),
                Node::Neg(a) => RadicalExpr::wrap(Node::Neg(go(a, map, memo))),
                Node::Root { id, index, arg } => {
                    if let Some(r) = map.get(id) {
                        r.clone()
                    } else {
                        let r =
                            RadicalExpr::wrap(Node::Root { id: fresh_id(), index: *index, arg: go(arg, map, memo) });
                        map.insert(*id, r.clone());
                        r
                    }
                }
            };
            memo.insert(key, out.clone());
            out
        }
        let mut map = HashMap::new();
        let copy = go(self, &mut map, &mut HashMap::new());
        let ids = map
            .into_iter()
            .map(|(old, r)| match r.node() {
                Node::Root { id, .. } => (old, *id),
                _ => unreachable!("only roots are mapped"),
            })
            .collect();
        (copy, ids)
    }

    /// Distinct root nodes as `(id, index)`, inner roots before outer ones.
    pub fn roots(&self) -> Vec<(u64, u32)> {
        fn go(e: &RadicalExpr, seen: &mut Vec<(u64, u32)>, visited: &mut std::collections::HashSet<*const Node>) {
            if !visited.insert(Arc::as_ptr(&e.0)) {
                return;
            }
            match e.node() {
                Node::Rational(_) | Node::ImaginaryUnit => {}
                Node::Add(a, b) | Node::Sub(a, b) | Node::Mul(a, b) | Node::Div(a, b) => {
                    go(a, seen, visited);
                    go(b, seen, visited);
                }
                Node::Neg(a) => go(a, seen, visited),
                Node::Root { id, index, arg } => {
                    go(arg, seen, visited);
                    if !seen.iter().any(|(i, _)| i == id) {
                        seen.push((*id, *index));
                    }
                }
            }
        }
        let mut seen = Vec::new();
        go(self, &mut seen, &mut std::collections::HashSet::new());
        seen
    }

    /// Number of nodes in the DAG, counting shared nodes once.
    pub fn node_count(&self) -> usize {
        fn go(e: &RadicalExpr, visited: &mut std::collections::HashSet<*const Node>) {
            if !visited.insert(Arc::as_ptr(&e.0)) {
                return;
            }
            match e.node() {
                Node::Rational(_) | Node::ImaginaryUnit => {}
                Node::Add(a, b) | Node::Sub(a, b) | Node::Mul(a, b) | Node::Div(a, b) => {
                    go(a, visited);
                    go(b, visited);
                }
                Node::Neg(a) | Node::Root { arg: a, .. } => go(a, visited),
            }
        }
        let mut visited = std::collections::HashSet::new();
        go(self, &mut visited);
        visited.len()
    }

    /// Value under one branch assignment.
    pub fn eval_at(&self, branches: &Branches) -> Result<Complex64> {
        fn go(e: &RadicalExpr, branches: &Branches, memo: &mut HashMap<*const Node, Complex64>) -> Result<Complex64> {
            let key = Arc::as_ptr(&e.0);
            if let Some(v) = memo.get(&key) {
                return Ok(*v);
            }
            let v = match e.node() {
                Node::Rational(r) => Complex64::new(rational_to_f64(r), 0.0),
                Node::ImaginaryUnit => Complex64::new(0.0, 1.0),
                Node::Add(a, b) => go(a, branches, memo)? + go(b, branches, memo)?,
                Node::Sub(a, b) => go(a, branches, memo)? - go(b, branches, memo)?,
                Node::Mul(a, b) => go(a, branches, memo)? * go(b, branches, memo)?,
                Node::Div(a, b) => checked_div(go(a, branches, memo)?, go(b, branches, memo)?)?,
                Node::Neg(a) => -go(a, branches, memo)?,
                Node::Root { id, index, arg } => {
                    kth_root(go(arg, branches, memo)?, *index, branches.get(id).copied().unwrap_or(0))
                }
            };
            memo.insert(key, v);
            Ok(v)
        }
        go(self, branches, &mut HashMap::new())
    }

    /// Principal value: every root on branch 0.
    pub fn eval_principal(&self) -> Result<Complex64> {
        self.eval_at(&Branches::new())
    }

    /// Number of joint branch assignments over the distinct root nodes.
    pub fn branch_count(&self) -> u128 {
        self.roots().iter().fold(1u128, |acc, &(_, k)| acc.saturating_mul(k as u128))
    }

    /// Every value over all branch assignments, deduplicated.
    pub fn eval_multi(&self) -> Result<Vec<Complex64>> {
        Ok(self.eval_multi_with_limit(DEFAULT_BRANCH_LIMIT)?.values)
    }

    pub fn eval_multi_with_limit(&self, limit: u128) -> Result<MultiValue> {
        let roots = self.roots();
        let count = self.branch_count();
        if count > limit {
            return Err(Error::TooManyBranches { count, limit });
        }
        let mut values: Vec<Complex64> = Vec::new();
        let mut failed = 0usize;
        let mut digits = vec![0u32; roots.len()];
        loop {
            let branches: Branches = roots.iter().zip(&digits).map(|(&(id, _), &b)| (id, b)).collect();
            match self.eval_at(&branches) {
                Ok(v) => {
                    if !values.iter().any(|u| (u - v).norm() < DEDUP_TOLERANCE) {
                        values.push(v);
                    }
                }
                Err(Error::DivisionByZero) => failed += 1,
                Err(e) => return Err(e),
            }
            let mut pos = 0;
            loop {
                if pos == digits.len() {
                    if values.is_empty() && failed > 0 {
                        return Err(Error::DivisionByZero);
                    }
                    return Ok(MultiValue { values, failed_branches: failed });
                }
                digits[pos] += 1;
                if digits[pos] < roots[pos].1 {
                    break;
                }
                digits[pos] = 0;
                pos += 1;
            }
        }
    }
}

/// Result of evaluating over all branches.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiValue {
    pub values: Vec<Complex64>,
    /// Assignments that hit a zero denominator.
    pub failed_branches: usize,
}

impl fmt::Display for RadicalExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.node() {
            Node::Rational(r) => {
                if r.is_integer() && !r.is_negative() {
                    write!(f, "{r}")
                } else {
                    write!(f, "({r})")
                }
            }
            Node::ImaginaryUnit => write!(f, "i"),
            Node::Add(a, b) => write!(f, "({a} + {b})"),
            Node::Sub(a, b) => write!(f, "({a} - {b})"),
            Node::Mul(a, b) => write!(f, "{a}*{b}"),
            Node::Div(a, b) => write!(f, "{a}/{b}"),
            Node::Neg(a) => write!(f, "-{a}"),
            Node::Root { index: 2, arg, .. } => write!(f, "sqrt({arg})"),
            Node::Root { index, arg, .. } => write!(f, "root{index}({arg})"),
        }
    }
}

impl fmt::Debug for RadicalExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RadicalExpr({self})")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase")]
enum Wire {
    Rational { value: String },
    I,
    Add { left: Box<Wire>, right: Box<Wire> },
    Sub { left: Box<Wire>, right: Box<Wire> },
    Mul { left: Box<Wire>, right: Box<Wire> },
    Div { left: Box<Wire>, right: Box<Wire> },
    Neg { arg: Box<Wire> },
    Root { id: u64, index: u32, arg: Box<Wire> },
}

impl From<&RadicalExpr> for Wire {
    fn from(e: &RadicalExpr) -> Wire {
        let b = |x: &RadicalExpr| Box::new(Wire::from(x));
        match e.node() {
            Node::Rational(r) => Wire::Rational { value: r.to_string() },
            Node::ImaginaryUnit => Wire::I,
            Node::Add(l, r) => Wire::Add { left: b(l), right: b(r) },
            Node::Sub(l, r) => Wire::Sub { left: b(l), right: b(r) },
            Node::Mul(l, r) => Wire::Mul { left: b(l), right: b(r) },
            Node::Div(l, r) => Wire::Div { left: b(l), right: b(r) },
            Node::Neg(a) => Wire::Neg { arg: b(a) },
            Node::Root { id, index, arg } => Wire::Root { id: *id, index: *index, arg: b(arg) },
        }
    }
}

fn from_wire(w: &Wire, roots: &mut HashMap<u64, RadicalExpr>) -> Result<RadicalExpr> {
    Ok(match w {
        Wire::Rational { value } => RadicalExpr::rational(parse_rational(value)?),
        Wire::I => RadicalExpr::i(),
        Wire::Add { left, right } => RadicalExpr::wrap(Node::Add(from_wire(left, roots)?, from_wire(right, roots)?)),
        Wire::Sub { left, right } => RadicalExpr::wrap(Node::Sub(from_wire(left, roots)?, from_wire(right, roots)?)),
        Wire::Mul { left, right } => RadicalExpr::wrap(Node::Mul(from_wire(left, roots)?, from_wire(right, roots)?)),
        Wire::Div { left, right } => RadicalExpr::wrap(Node::Div(from_wire(left, roots)?, from_wire(right, roots)?)),
        Wire::Neg { arg } => RadicalExpr::wrap(Node::Neg(from_wire(arg, roots)?)),
        Wire::Root { id, index, arg } => {
            if *index < 2 {
                return Err(Error::InvalidNumber(format!("root index {index}")));
            }
            if let Some(r) = roots.get(id) {
                r.clone()
            } else {
                let r = RadicalExpr::wrap(Node::Root { id: fresh_id(), index: *index, arg: from_wire(arg, roots)? });
                roots.insert(*id, r.clone());
                r
            }
        }
    })
}

/// Nested objects tagged by `op`; root nodes carry their `id` so that
/// repeated occurrences are rejoined on input. Ids are renumbered on input.
impl Serialize for RadicalExpr {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Wire::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for RadicalExpr {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = Wire::deserialize(d)?;
        from_wire(&w, &mut HashMap::new()).map_err(serde::de::Error::custom)
    }
}

/// An expression paired with one branch assignment and its value there.
#[derive(Clone, Debug)]
pub struct Tracked {
    pub expr: RadicalExpr,
    pub branches: Branches,
    pub value: Complex64,
}

fn merge(a: &Branches, b: &Branches) -> Branches {
    let mut out = a.clone();
    for (k, v) in b {
        debug_assert!(out.get(k).is_none_or(|w| w == v), "conflicting branch for root {k}");
        out.insert(*k, *v);
    }
    out
}

impl Tracked {
    pub fn rational(r: BigRational) -> Self {
        let value = Complex64::new(rational_to_f64(&r), 0.0);
        Tracked { expr: RadicalExpr::rational(r), branches: Branches::new(), value }
    }

    pub fn int(n: i64) -> Self {
        Self::rational(rat(n))
    }

    pub fn i() -> Self {
        Tracked { expr: RadicalExpr::i(), branches: Branches::new(), value: Complex64::new(0.0, 1.0) }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.expr.as_rational()
    }

    pub fn is_exact_zero(&self) -> bool {
        self.as_rational().is_some_and(Zero::is_zero)
    }

    /// Adopt the value of whichever operand the simplifier returned, or compute it.
    fn finish(
        expr: RadicalExpr,
        branches: Branches,
        operands: &[&Tracked],
        compute: impl FnOnce() -> Complex64,
    ) -> Self {
        let value = if let Some(r) = expr.as_rational() {
            Complex64::new(rational_to_f64(r), 0.0)
        } else if let Some(t) = operands.iter().find(|t| t.expr.ptr_eq(&expr)) {
            t.value
        } else {
            compute()
        };
        Tracked { expr, branches, value }
    }

    pub fn add(&self, rhs: &Tracked) -> Self {
        Self::finish(self.expr.add(&rhs.expr), merge(&self.branches, &rhs.branches), &[self, rhs], || {
            self.value + rhs.value
        })
    }

    pub fn sub(&self, rhs: &Tracked) -> Self {
        Self::finish(self.expr.sub(&rhs.expr), merge(&self.branches, &rhs.branches), &[self, rhs], || {
            self.value - rhs.value
        })
    }

    pub fn mul(&self, rhs: &Tracked) -> Self {
        Self::finish(self.expr.mul(&rhs.expr), merge(&self.branches, &rhs.branches), &[self, rhs], || {
            self.value * rhs.value
        })
    }

    pub fn div(&self, rhs: &Tracked) -> Result<Self> {
        if rhs.is_exact_zero() {
            return Err(Error::DivisionByZero);
        }
        let q = checked_div(self.value, rhs.value)?;
        Ok(Self::finish(self.expr.div(&rhs.expr), merge(&self.branches, &rhs.branches), &[self, rhs], || q))
    }

    pub fn neg(&self) -> Self {
        Self::finish(self.expr.neg(), self.branches.clone(), &[self], || -self.value)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        self.mul(&Tracked::rational(r.clone()))
    }

    pub fn add_rational(&self, r: &BigRational) -> Self {
        self.add(&Tracked::rational(r.clone()))
    }

    /// All `k` branches of one new root node over `self`.
    pub fn roots(&self, k: u32) -> Vec<Tracked> {
        if k == 1 {
            return vec![self.clone()];
        }
        let node = RadicalExpr::root(k, &self.expr);
        let id = match node.node() {
            Node::Root { id, .. } => *id,
            _ => unreachable!("index at least 2"),
        };
        (0..k)
            .map(|b| {
                let mut branches = self.branches.clone();
                branches.insert(id, b);
                Tracked { expr: node.clone(), branches, value: kth_root(self.value, k, b) }
            })
            .collect()
    }

    /// One root node, on the branch whose value is closest to `hint`
    /// (or the principal branch when no hint is given).
    pub fn root(&self, k: u32, hint: Option<Complex64>) -> Tracked {
        let all = self.roots(k);
        match hint {
            None => all.into_iter().next().expect("k >= 1"),
            Some(h) => {
                all.into_iter().min_by(|a, b| (a.value - h).norm().total_cmp(&(b.value - h).norm())).expect("k >= 1")
            }
        }
    }

    /// Exact square root when the argument is a rational square, else a root node.
    pub fn sqrt(&self) -> Tracked {
        if let Some(r) = self.as_rational() {
            if let Some(s) = crate::poly::rational_sqrt(r) {
                return Tracked::rational(s);
            }
        }
        self.root(2, None)
    }

    /// Same value and branches on a fresh copy of the expression, so it can be
    /// combined with another branch of the same radicals.
    pub fn decoupled(&self) -> Tracked {
        let (expr, ids) = self.expr.fresh_copy_with_map();
        let branches = self.branches.iter().filter_map(|(k, v)| ids.get(k).map(|n| (*n, *v))).collect();
        Tracked { expr, branches, value: self.value }
    }

    /// Re-evaluate the expression at the recorded branches.
    pub fn reevaluate(&self) -> Result<Complex64> {
        self.expr.eval_at(&self.branches)
    }
}

impl Serialize for Tracked {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Tracked", 3)?;
        st.serialize_field("expr", &self.expr)?;
        st.serialize_field("branches", &self.branches)?;
        st.serialize_field("value", &[self.value.re, self.value.im])?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn has(values: &[Complex64], z: Complex64) -> bool {
        values.iter().any(|v| (v - z).norm() < 1e-9)
    }

    #[test]
    fn cube_roots_of_eight() {
        let e = RadicalExpr::root(3, &RadicalExpr::int(8));
        let vals = e.eval_multi().unwrap();
        assert_eq!(vals.len(), 3);
        let w = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
        for z in [Complex64::new(2.0, 0.0), 2.0 * w, 2.0 * w * w] {
            assert!(has(&vals, z));
        }
    }

    #[test]
    fn nested_square_roots() {
        let e = RadicalExpr::root(2, &RadicalExpr::root(2, &RadicalExpr::int(16)));
        let vals = e.eval_multi().unwrap();
        assert_eq!(vals.len(), 4);
        for z in
            [Complex64::new(2.0, 0.0), Complex64::new(-2.0, 0.0), Complex64::new(0.0, 2.0), Complex64::new(0.0, -2.0)]
        {
            assert!(has(&vals, z));
        }
    }

    #[test]
    fn constant_has_one_value() {
        assert_eq!(RadicalExpr::int(5).eval_multi().unwrap(), vec![Complex64::new(5.0, 0.0)]);
    }

    #[test]
    fn shared_root_is_coupled() {
        let r = RadicalExpr::root(2, &RadicalExpr::int(4));
        // r - r is zero on every branch; a fresh copy decouples it.
        let same = r.sub(&r);
        assert_eq!(same.eval_multi().unwrap(), vec![Complex64::new(0.0, 0.0)]);
        let split = r.sub(&r.fresh_copy());
        assert_eq!(split.eval_multi().unwrap().len(), 3);
    }

    #[test]
    fn division_by_zero_per_branch() {
        // 1 / (sqrt(1) - 1) fails on one branch only.
        let e = RadicalExpr::int(1).div(&RadicalExpr::root(2, &RadicalExpr::int(1)).sub(&RadicalExpr::int(1)));
        let mv = e.eval_multi_with_limit(DEFAULT_BRANCH_LIMIT).unwrap();
        assert_eq!(mv.failed_branches, 1);
        assert_eq!(mv.values.len(), 1);
        assert!((mv.values[0] + 0.5).norm() < 1e-12);
        let all_bad = RadicalExpr::int(1).div(&RadicalExpr::int(0));
        assert_eq!(all_bad.eval_multi(), Err(Error::DivisionByZero));
    }

    #[test]
    fn branch_limit() {
        let mut e = RadicalExpr::int(2);
        for _ in 0..30 {
            e = RadicalExpr::root(2, &e);
        }
        assert!(matches!(e.eval_multi(), Err(Error::TooManyBranches { .. })));
    }

    #[test]
    fn tracked_matches_reevaluation() {
        let two = Tracked::int(2);
        let roots = two.roots(3);
        for r in &roots {
            let t = r.mul(&Tracked::i()).add(&Tracked::int(1)).div(&r.sub(&Tracked::int(7))).unwrap();
            assert_eq!(t.reevaluate().unwrap(), t.value);
        }
    }

    #[test]
    fn json_round_trip_keeps_sharing() {
        let r = RadicalExpr::root(3, &RadicalExpr::int(5));
        let e = r.add(&r.mul(&RadicalExpr::i()));
        let json = serde_json::to_string(&e).unwrap();
        let back: RadicalExpr = serde_json::from_str(&json).unwrap();
        assert_eq!(back.roots().len(), 1);
        let a = e.eval_multi().unwrap();
        let b = back.eval_multi().unwrap();
        assert_eq!(a.len(), 3);
        assert!(a.iter().all(|z| has(&b, *z)));
    }

    #[test]
    fn decoupled_copy_combines() {
        let two = Tracked::int(2);
        let r = two.roots(2);
        let diff = r[0].sub(&r[1].decoupled());
        assert!((diff.value - 2.0 * 2f64.sqrt()).norm() < 1e-12);
        assert_eq!(diff.reevaluate().unwrap(), diff.value);
    }

    #[test]
    fn folding() {
        let e = RadicalExpr::int(3).add(&RadicalExpr::rational(crate::poly::ratio(1, 2)));
        assert_eq!(e.as_rational(), Some(&crate::poly::ratio(7, 2)));
        assert_eq!(RadicalExpr::root(1, &RadicalExpr::int(3)).as_rational(), Some(&rat(3)));
    }
}
