#![allow(dead_code)]

use std::collections::BTreeSet;

use num_complex::Complex64;
use ramified::{Constellation, Permutation};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn perm(images: Vec<usize>) -> Permutation {
    Permutation::new(images).expect("valid permutation")
}

pub fn random_perm(rng: &mut StdRng, n: usize) -> Permutation {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    perm(v)
}

/// A uniformly relabeled permutation whose cycle lengths all divide `order`.
pub fn random_perm_dividing(rng: &mut StdRng, n: usize, order: u64) -> Permutation {
    let divisors: Vec<usize> = (1..=n).filter(|k| order.is_multiple_of(*k as u64)).collect();
    let mut lengths = Vec::new();
    let mut left = n;
    while left > 0 {
        let fits: Vec<usize> = divisors.iter().copied().filter(|&k| k <= left).collect();
        let k = *fits.choose(rng).expect("1 always fits");
        lengths.push(k);
        left -= k;
    }
    let mut points: Vec<usize> = (0..n).collect();
    points.shuffle(rng);
    let mut images: Vec<usize> = (0..n).collect();
    let mut at = 0;
    for k in lengths {
        let cyc = &points[at..at + k];
        for i in 0..k {
            images[cyc[i]] = cyc[(i + 1) % k];
        }
        at += k;
    }
    perm(images)
}

pub fn is_transitive(n: usize, gens: &[Permutation]) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g.images()[x];
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Product of all slots taken left to right, computed without the library's composition.
pub fn product(n: usize, perms: &[Permutation]) -> Vec<usize> {
    (0..n).map(|start| perms.iter().fold(start, |x, p| p.images()[x])).collect()
}

fn inverse_images(images: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; images.len()];
    for (i, &j) in images.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

/// Random valid constellation with `k` slots: the first `k - 1` slots are
/// drawn by `draw`, the last closes the product. Gives up after `attempts`
/// intransitive draws.
pub fn try_random_constellation_with(
    rng: &mut StdRng,
    n: usize,
    k: usize,
    attempts: usize,
    mut draw: impl FnMut(&mut StdRng, usize) -> Permutation,
) -> Option<Constellation> {
    for _ in 0..attempts {
        let mut perms: Vec<Permutation> = (0..k - 1).map(|i| draw(rng, i)).collect();
        perms.push(perm(inverse_images(&product(n, &perms))));
        if is_transitive(n, &perms) {
            return Some(Constellation::from_perms(n, perms).expect("valid by construction"));
        }
    }
    None
}

pub fn random_constellation(rng: &mut StdRng, max_degree: usize) -> Constellation {
    let n = rng.gen_range(1..=max_degree);
    let k = rng.gen_range(2..=4);
    try_random_constellation_with(rng, n, k, usize::MAX, |r, _| random_perm(r, n)).expect("unbounded attempts")
}

fn count_cycles(images: &[usize]) -> usize {
    let mut seen = vec![false; images.len()];
    let mut cycles = 0;
    for s in 0..images.len() {
        if !seen[s] {
            cycles += 1;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = images[x];
            }
        }
    }
    cycles
}

/// Euler characteristic of the total space, counted from cycles directly.
pub fn euler_characteristic(c: &Constellation) -> i64 {
    let n = c.degree() as i64;
    let ramification: i64 = c.perms().iter().map(|p| n - count_cycles(p.images()) as i64).sum();
    2 * n - ramification
}

pub fn genus_oracle(c: &Constellation) -> i64 {
    1 - euler_characteristic(c) / 2
}

pub type Elements = BTreeSet<Vec<usize>>;

/// Closure of a generating set under composition, by breadth-first search.
pub fn naive_group(n: usize, gens: &[Vec<usize>]) -> Elements {
    let identity: Vec<usize> = (0..n).collect();
    let mut all: Elements = BTreeSet::new();
    all.insert(identity.clone());
    let mut frontier = vec![identity];
    while let Some(g) = frontier.pop() {
        for s in gens {
            let h: Vec<usize> = g.iter().map(|&x| s[x]).collect();
            if all.insert(h.clone()) {
                frontier.push(h);
            }
        }
    }
    all
}

fn commutator(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (ai, bi) = (inverse_images(a), inverse_images(b));
    (0..a.len()).map(|x| b[a[bi[ai[x]]]]).collect()
}

/// Derived subgroup as the normal closure of the commutators of the generators.
pub fn naive_derived(n: usize, gens: &[Vec<usize>]) -> (Elements, Vec<Vec<usize>>) {
    let group = naive_group(n, gens);
    let mut accepted: Vec<Vec<usize>> = Vec::new();
    let mut derived = naive_group(n, &accepted);
    for a in gens {
        for b in gens {
            let c = commutator(a, b);
            for h in &group {
                let hi = inverse_images(h);
                let conj: Vec<usize> = (0..n).map(|x| h[c[hi[x]]]).collect();
                if !derived.contains(&conj) {
                    accepted.push(conj);
                    derived = naive_group(n, &accepted);
                }
            }
        }
    }
    (derived, accepted)
}

/// Solvability through the derived series.
pub fn naive_is_solvable(n: usize, gens: &[Vec<usize>]) -> bool {
    let mut order = naive_group(n, gens).len();
    let mut gens = gens.to_vec();
    loop {
        if order == 1 {
            return true;
        }
        let (derived, next) = naive_derived(n, &gens);
        if derived.len() == order {
            return false;
        }
        order = derived.len();
        gens = next;
    }
}

fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut labels = vec![0usize; n];
    fn rec(i: usize, max: usize, labels: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == labels.len() {
            out.push(labels.clone());
            return;
        }
        for l in 0..=max + 1 {
            labels[i] = l;
            rec(i + 1, max.max(l), labels, out);
        }
    }
    if n > 0 {
        rec(1, 0, &mut labels, &mut out);
    }
    out
}

/// Every partition preserved by all generators, as sorted lists of sorted blocks.
pub fn brute_force_block_systems(n: usize, gens: &[Permutation]) -> BTreeSet<Vec<Vec<usize>>> {
    let mut out = BTreeSet::new();
    for labels in set_partitions(n) {
        let invariant = gens.iter().all(|g| {
            let mut image_label = vec![usize::MAX; n];
            (0..n).all(|x| {
                let l = labels[x];
                let m = labels[g.images()[x]];
                if image_label[l] == usize::MAX {
                    image_label[l] = m;
                    true
                } else {
                    image_label[l] == m
                }
            })
        });
        if invariant {
            let blocks = labels.iter().max().map_or(0, |m| m + 1);
            let mut partition: Vec<Vec<usize>> =
                (0..blocks).map(|b| (0..n).filter(|&x| labels[x] == b).collect()).collect();
            partition.sort();
            out.insert(partition);
        }
    }
    out
}

pub fn normalize_partition(p: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut blocks: Vec<Vec<usize>> = p
        .iter()
        .map(|b| {
            let mut b = b.clone();
            b.sort_unstable();
            b
        })
        .collect();
    blocks.sort();
    blocks
}

/// The action of a constellation's slots on the blocks of an invariant partition.
pub fn quotient(c: &Constellation, blocks: &[Vec<usize>]) -> Constellation {
    let mut block_of = vec![0; c.degree()];
    for (b, block) in blocks.iter().enumerate() {
        for &x in block {
            block_of[x] = b;
        }
    }
    let perms =
        c.perms().iter().map(|p| perm(blocks.iter().map(|block| block_of[p.images()[block[0]]]).collect())).collect();
    Constellation::new(
        blocks.len(),
        c.slots()
            .iter()
            .zip::<Vec<Permutation>>(perms)
            .map(|(s, p)| ramified::covering::Slot::new(s.point.clone(), p))
            .collect(),
    )
    .expect("quotient of a constellation")
}

/// Simultaneous iteration for all roots of a polynomial given low to high.
pub fn durand_kerner(coeffs: &[f64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| Complex64::new(c / lead, 0.0)).collect();
    let eval = |z: Complex64| monic.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c);
    let radius = 1.0 + monic[..n].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32) * radius.min(2.0)).collect();
    for _ in 0..5000 {
        let mut change: f64 = 0.0;
        for i in 0..n {
            let denom = (0..n).filter(|&j| j != i).fold(Complex64::new(1.0, 0.0), |acc, j| acc * (roots[i] - roots[j]));
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
            change = change.max(step.norm());
        }
        if change < 1e-15 {
            break;
        }
    }
    // Newton polishing on the original polynomial.
    for r in roots.iter_mut() {
        for _ in 0..3 {
            let (mut p, mut dp) = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
            for c in monic.iter().rev() {
                dp = dp * *r + p;
                p = p * *r + c;
            }
            if dp.norm() > 1e-12 {
                *r -= p / dp;
            }
        }
    }
    roots
}

/// Greedy matching of two multisets of complex numbers within `tol`.
pub fn multisets_match(got: &[Complex64], want: &[Complex64], tol: f64) -> bool {
    if got.len() != want.len() {
        return false;
    }
    let mut used = vec![false; want.len()];
    let mut order: Vec<usize> = (0..got.len()).collect();
    order.sort_by(|&a, &b| got[a].re.total_cmp(&got[b].re).then(got[a].im.total_cmp(&got[b].im)));
    order.iter().all(|&i| {
        let best = (0..want.len())
            .filter(|&j| !used[j])
            .min_by(|&a, &b| (got[i] - want[a]).norm().total_cmp(&(got[i] - want[b]).norm()));
        match best {
            Some(j) if (got[i] - want[j]).norm() < tol * (1.0 + want[j].norm()) => {
                used[j] = true;
                true
            }
            _ => false,
        }
    })
}
