//! Permutations of `{0, …, n-1}` and fully enumerated permutation groups.
//!
//! Composition is read left to right everywhere in this crate:
//! `p.then(&q)` applies `p` first and `q` second, so
//! `p.then(&q).apply(i) == q.apply(p.apply(i))`.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default number of elements at which group enumeration gives up.
pub const DEFAULT_CAP: usize = 10_000;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::InvalidPermutation("degree must be at least 1".into()));
        }
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n {
                return Err(Error::InvalidPermutation(format!("image {x} out of range for degree {n}")));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!("image {x} repeated")));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "degree must be at least 1");
        Permutation { images: (0..n).collect() }
    }

    /// Builds a permutation from disjoint cycles; points not mentioned are fixed.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n.max(1)).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a >= n {
                    return Err(Error::InvalidPermutation(format!("point {a} out of range for degree {n}")));
                }
                if std::mem::replace(&mut touched[a], true) {
                    return Err(Error::InvalidPermutation(format!("point {a} in two cycles")));
                }
                images[a] = cycle[(k + 1) % cycle.len()];
            }
        }
        Permutation::new(images)
    }

    /// The standard n-cycle `i -> i+1 mod n`.
    pub fn rotation(n: usize) -> Self {
        Permutation { images: (0..n).map(|i| (i + 1) % n).collect() }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn inverse_apply(&self, i: usize) -> usize {
        self.images.iter().position(|&x| x == i).expect("bijection")
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "composing permutations of different degree");
        Permutation { images: self.images.iter().map(|&x| other.images[x]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        acc
    }

    /// Conjugate by a relabeling: the result maps `r(i)` to `r(self(i))`.
    pub fn relabel(&self, r: &Permutation) -> Permutation {
        r.inverse().then(self).then(r)
    }

    /// Disjoint cycles, each starting at its smallest point, fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn num_cycles(&self) -> usize {
        self.cycles().len()
    }

    pub fn cycle_data(&self) -> CycleData {
        let mut cycle_type: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        cycle_type.sort_unstable_by(|a, b| b.cmp(a));
        let order = lcm_all(cycle_type.iter().map(|&l| l as u64));
        CycleData { cycle_type, order }
    }

    pub fn order(&self) -> u64 {
        self.cycle_data().order
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        Permutation::new(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.images
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation without fixed points, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

/// `self` first, then `other`; errors instead of panicking on a degree mismatch.
pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    if p.degree() != q.degree() {
        return Err(Error::DegreeMismatch { left: p.degree(), right: q.degree() });
    }
    Ok(p.then(q))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleData {
    /// Cycle lengths in non-increasing order, fixed points included.
    pub cycle_type: Vec<usize>,
    pub order: u64,
}

pub(crate) fn lcm_all(values: impl IntoIterator<Item = u64>) -> u64 {
    values.into_iter().fold(1u64, |acc, v| {
        let g = acc.gcd(&v);
        (acc / g).checked_mul(v).expect("permutation order overflows u64")
    })
}

/// Orbit of `start` under the group generated by `gens`.
pub fn orbit(degree: usize, gens: &[Permutation], start: usize) -> Vec<usize> {
    let mut seen = vec![false; degree];
    seen[start] = true;
    let mut stack = vec![start];
    let mut out = vec![start];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                out.push(y);
                stack.push(y);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Orbit of `start` in breadth-first order over the generators.
pub fn orbit_bfs_order(degree: usize, gens: &[Permutation], start: usize) -> Vec<usize> {
    let mut seen = vec![false; degree];
    seen[start] = true;
    let mut out = vec![start];
    let mut head = 0;
    while head < out.len() {
        let x = out[head];
        head += 1;
        for g in gens {
            for y in [g.apply(x), g.inverse_apply(x)] {
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
        }
    }
    out
}

/// A finite permutation group with every element listed.
///
/// Elements appear in breadth-first generation order starting from the
/// identity, which is always `elements()[0]`.
#[derive(Debug, Clone)]
pub struct GroupTable {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    transitive: bool,
}

impl GroupTable {
    /// Breadth-first closure of `generators` under right multiplication.
    pub fn generate(degree: usize, generators: &[Permutation], cap: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidPermutation("degree must be at least 1".into()));
        }
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { left: degree, right: g.degree() });
            }
        }
        let cap = cap.max(1);
        let id = Permutation::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0)]);
        let mut head = 0;
        while head < elements.len() {
            let current = elements[head].clone();
            head += 1;
            for g in generators {
                let next = current.then(g);
                if index.contains_key(&next) {
                    continue;
                }
                if elements.len() >= cap {
                    return Err(Error::CapExceeded { cap });
                }
                index.insert(next.clone(), elements.len());
                elements.push(next);
            }
        }
        let transitive = orbit(degree, generators, 0).len() == degree;
        Ok(GroupTable { degree, generators: generators.to_vec(), elements, index, transitive })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_transitive(&self) -> bool {
        self.transitive
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| self.generators[i + 1..].iter().all(|b| a.then(b) == b.then(a)))
    }

    /// Commutator subgroup, as the normal closure of generator commutators.
    pub fn derived_subgroup(&self) -> Result<GroupTable> {
        let mut gens: Vec<Permutation> = Vec::new();
        for a in &self.generators {
            for b in &self.generators {
                let c = commutator(a, b);
                if !c.is_identity() && !gens.contains(&c) {
                    gens.push(c);
                }
            }
        }
        self.normal_closure(gens)
    }

    /// Smallest subgroup containing `gens` that is normalized by this group.
    pub fn normal_closure(&self, mut gens: Vec<Permutation>) -> Result<GroupTable> {
        let cap = self.order();
        loop {
            let sub = GroupTable::generate(self.degree, &gens, cap)?;
            let mut extra = None;
            'search: for h in &gens {
                for g in &self.generators {
                    let c = g.inverse().then(h).then(g);
                    if !sub.contains(&c) {
                        extra = Some(c);
                        break 'search;
                    }
                }
            }
            match extra {
                Some(c) => gens.push(c),
                None => return Ok(sub),
            }
        }
    }

    /// True iff the derived series reaches the trivial group.
    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().is_some_and(|g| g.order() == 1)
    }

    /// Derived series, starting with this group and ending at a perfect subgroup.
    pub fn derived_series(&self) -> Vec<GroupTable> {
        let mut series = vec![self.clone()];
        loop {
            let current = series.last().unwrap();
            if current.order() == 1 {
                return series;
            }
            let next = current.derived_subgroup().expect("subgroup fits inside its parent");
            if next.order() == current.order() {
                return series;
            }
            series.push(next);
        }
    }

    /// All nontrivial block systems of a transitive group, coarsest last.
    ///
    /// Every system is found by closing a seed set containing point 0: first
    /// the pairs `{0, i}`, then each found block enlarged by one more point.
    pub fn block_systems(&self) -> Result<Vec<Partition>> {
        if !self.transitive {
            return Err(Error::NotTransitive);
        }
        let n = self.degree;
        let mut found: BTreeSet<Partition> = BTreeSet::new();
        let mut work: Vec<Partition> = Vec::new();
        for i in 1..n {
            let p = minimal_blocks(n, &self.generators, &[0, i]);
            if p.len() > 1 && found.insert(p.clone()) {
                work.push(p);
            }
        }
        while let Some(p) = work.pop() {
            let block = p.iter().find(|b| b.contains(&0)).unwrap().clone();
            for j in 0..n {
                if block.contains(&j) {
                    continue;
                }
                let mut seed = block.clone();
                seed.push(j);
                let q = minimal_blocks(n, &self.generators, &seed);
                if q.len() > 1 && found.insert(q.clone()) {
                    work.push(q);
                }
            }
        }
        let mut out: Vec<Partition> = found.into_iter().collect();
        out.sort_by(|a, b| a[0].len().cmp(&b[0].len()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    pub fn is_primitive(&self) -> Result<bool> {
        Ok(self.block_systems()?.is_empty())
    }
}

/// Blocks sorted by their smallest point, each block sorted.
pub type Partition = Vec<Vec<usize>>;

pub fn generate_group(generators: &[Permutation], cap: usize) -> Result<GroupTable> {
    let degree = generators
        .first()
        .map(Permutation::degree)
        .ok_or_else(|| Error::InvalidPermutation("no generators given; use GroupTable::generate".into()))?;
    GroupTable::generate(degree, generators, cap)
}

pub fn is_solvable(g: &GroupTable) -> bool {
    g.is_solvable()
}

pub fn block_systems(g: &GroupTable) -> Result<Vec<Partition>> {
    g.block_systems()
}

pub fn commutator(a: &Permutation, b: &Permutation) -> Permutation {
    a.inverse().then(&b.inverse()).then(a).then(b)
}

/// Finest block system in which all of `seed` lie in one block.
pub fn minimal_blocks(n: usize, gens: &[Permutation], seed: &[usize]) -> Partition {
    let mut uf = UnionFind::new(n);
    let mut queue: Vec<(usize, usize)> = Vec::new();
    for &s in &seed[1..] {
        if uf.union(seed[0], s) {
            queue.push((seed[0], s));
        }
    }
    while let Some((a, b)) = queue.pop() {
        for g in gens {
            let (x, y) = (g.apply(a), g.apply(b));
            if uf.union(x, y) {
                queue.push((x, y));
            }
        }
    }
    uf.classes()
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }

    fn classes(&mut self) -> Partition {
        let n = self.parent.len();
        let mut by_root: HashMap<usize, Vec<usize>> = HashMap::new();
        for x in 0..n {
            let r = self.find(x);
            by_root.entry(r).or_default().push(x);
        }
        let mut out: Partition = by_root.into_values().collect();
        out.sort();
        out
    }
}

/// Whether `elements` is closed under composition.
pub fn is_closed(elements: &[Permutation]) -> bool {
    let set: HashSet<&Permutation> = elements.iter().collect();
    elements.iter().all(|a| elements.iter().all(|b| set.contains(&a.then(b))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn compose_is_left_to_right() {
        assert_eq!(compose(&perm(&[1, 0, 2]), &perm(&[0, 2, 1])).unwrap(), perm(&[2, 0, 1]));
        let t = perm(&[1, 0]);
        assert_eq!(compose(&t, &Permutation::identity(2)).unwrap(), t);
    }

    #[test]
    fn compose_rejects_degree_mismatch() {
        let err = compose(&Permutation::identity(2), &Permutation::identity(3)).unwrap_err();
        assert_eq!(err, Error::DegreeMismatch { left: 2, right: 3 });
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![0, 2]).is_err());
        assert!(Permutation::new(vec![]).is_err());
        assert!(serde_json::from_str::<Permutation>("[1,1,0]").is_err());
        assert_eq!(serde_json::from_str::<Permutation>("[1,0,2]").unwrap(), perm(&[1, 0, 2]));
    }

    #[test]
    fn cycle_data_examples() {
        let id = Permutation::identity(5).cycle_data();
        assert_eq!(id.cycle_type, vec![1; 5]);
        assert_eq!(id.order, 1);
        let dbl = perm(&[1, 0, 3, 2]).cycle_data();
        assert_eq!(dbl.cycle_type, vec![2, 2]);
        assert_eq!(dbl.order, 2);
        let p = Permutation::from_cycles(5, &[&[0, 1], &[2, 3, 4]]).unwrap();
        assert_eq!(p.order(), 6);
    }

    #[test]
    fn display_uses_cycle_notation() {
        assert_eq!(perm(&[1, 2, 0, 3]).to_string(), "(0 1 2)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
    }

    #[test]
    fn generate_small_groups() {
        let s3 = generate_group(&[perm(&[1, 0, 2]), perm(&[0, 2, 1])], DEFAULT_CAP).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(s3.is_transitive());
        let c5 = generate_group(&[Permutation::rotation(5)], DEFAULT_CAP).unwrap();
        assert_eq!(c5.order(), 5);
        assert!(c5.is_transitive());
        let t = generate_group(&[perm(&[1, 0, 2, 3])], DEFAULT_CAP).unwrap();
        assert_eq!(t.order(), 2);
        assert!(!t.is_transitive());
        assert!(s3.elements()[0].is_identity());
    }

    #[test]
    fn generation_respects_cap() {
        let gens = [Permutation::rotation(6), perm(&[1, 0, 2, 3, 4, 5])];
        assert_eq!(generate_group(&gens, 100).unwrap_err(), Error::CapExceeded { cap: 100 });
        assert_eq!(generate_group(&gens, 720).unwrap().order(), 720);
    }

    #[test]
    fn solvability_of_s4_and_a5() {
        let s4 = generate_group(&[Permutation::rotation(4), perm(&[1, 0, 2, 3])], DEFAULT_CAP).unwrap();
        let series: Vec<usize> = s4.derived_series().iter().map(GroupTable::order).collect();
        assert_eq!(series, vec![24, 12, 4, 1]);
        assert!(s4.is_solvable());

        let a5 = generate_group(&[perm(&[1, 2, 0, 3, 4]), Permutation::rotation(5)], DEFAULT_CAP).unwrap();
        assert_eq!(a5.order(), 60);
        assert!(!a5.is_solvable());
        for n in 1..=30 {
            let c = generate_group(&[Permutation::rotation(n)], DEFAULT_CAP).unwrap();
            assert!(c.is_solvable(), "C{n}");
        }
    }

    #[test]
    fn blocks_of_c4_and_s3() {
        let c4 = generate_group(&[Permutation::rotation(4)], DEFAULT_CAP).unwrap();
        assert_eq!(c4.block_systems().unwrap(), vec![vec![vec![0, 2], vec![1, 3]]]);
        let s3 = generate_group(&[perm(&[1, 0, 2]), perm(&[0, 2, 1])], DEFAULT_CAP).unwrap();
        assert!(s3.block_systems().unwrap().is_empty());
        let not_transitive = generate_group(&[perm(&[1, 0, 2])], DEFAULT_CAP).unwrap();
        assert_eq!(not_transitive.block_systems().unwrap_err(), Error::NotTransitive);
    }

    #[test]
    fn blocks_beyond_single_pairs() {
        // Regular C2^3: seven systems of pairs and seven of quadruples.
        let gens = [perm(&[1, 0, 3, 2, 5, 4, 7, 6]), perm(&[2, 3, 0, 1, 6, 7, 4, 5]), perm(&[4, 5, 6, 7, 0, 1, 2, 3])];
        let g = generate_group(&gens, DEFAULT_CAP).unwrap();
        let systems = g.block_systems().unwrap();
        assert_eq!(systems.len(), 14);
        assert!(systems[..7].iter().all(|s| s[0].len() == 2));
        assert!(systems[7..].iter().all(|s| s[0].len() == 4));
    }
}
