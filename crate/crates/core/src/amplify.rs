//! Unbranched cyclic covers of a covering surface, built by
//! Reidemeister–Schreier rewriting over the free group on the slots.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::covering::{genus_rh, Constellation, Slot};
use crate::error::{Error, Result};
use crate::galois::monodromy_group;
use crate::perm::Permutation;

/// One letter of a free-group word: generator index, possibly inverted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn pos(generator: usize) -> Self {
        Letter { generator, inverse: false }
    }

    pub fn neg(generator: usize) -> Self {
        Letter { generator, inverse: true }
    }

    fn inverted(self) -> Self {
        Letter { generator: self.generator, inverse: !self.inverse }
    }
}

pub type Word = Vec<Letter>;

fn invert_word(w: &[Letter]) -> Word {
    w.iter().rev().map(|l| l.inverted()).collect()
}

/// A cycle of one slot, as seen from the subgroup fixing sheet 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PunctureWord {
    pub slot: usize,
    /// Smallest sheet on the cycle, where the loop is entered.
    pub sheet: usize,
    pub length: usize,
    /// Word in Schreier generator indices.
    pub word: Word,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SchreierData {
    pub base: Constellation,
    /// `transversal[j]` carries sheet 0 to sheet `j`, in the first `k - 1` slot generators.
    pub transversal: Vec<Word>,
    /// Each generator `t_j x_i t_{j x_i}^{-1}` that is not a tree edge.
    pub schreier_generators: Vec<Word>,
    pub puncture_words: Vec<PunctureWord>,
    /// `edge_index[j][i]`: Schreier generator attached to the edge `(j, x_i)`, `None` on tree edges.
    pub edge_index: Vec<Vec<Option<usize>>>,
}

impl SchreierData {
    pub fn rank(&self) -> usize {
        self.schreier_generators.len()
    }

    /// Rewrite a word in slot generators read from `sheet`, returning the
    /// Schreier word and the sheet it ends on.
    pub fn rewrite(&self, sheet: usize, word: &[Letter]) -> (Word, usize) {
        let perms = self.base.perms();
        let mut out = Vec::new();
        let mut cur = sheet;
        for l in word {
            let p = &perms[l.generator];
            if l.inverse {
                let prev = p.inverse_apply(cur);
                if let Some(s) = self.edge_index[prev][l.generator] {
                    out.push(Letter::neg(s));
                }
                cur = prev;
            } else {
                if let Some(s) = self.edge_index[cur][l.generator] {
                    out.push(Letter::pos(s));
                }
                cur = p.apply(cur);
            }
        }
        (out, cur)
    }
}

/// Free-group word for one turn around slot `i`. The last slot is
/// eliminated through the product relation.
fn slot_word(i: usize, k: usize) -> Word {
    if i + 1 < k {
        vec![Letter::pos(i)]
    } else {
        (0..k - 1).rev().map(Letter::neg).collect()
    }
}

pub fn schreier_data(c: &Constellation) -> Result<SchreierData> {
    let genus = genus_rh(c)?;
    if genus < 1 {
        return Err(Error::GenusTooSmall { genus });
    }
    let n = c.degree();
    let k = c.slots().len();
    let perms = c.perms();
    let free = k - 1;

    let mut transversal: Vec<Option<Word>> = vec![None; n];
    let mut tree = vec![vec![false; free]; n];
    transversal[0] = Some(Vec::new());
    let mut queue = VecDeque::from([0usize]);
    while let Some(j) = queue.pop_front() {
        for (i, row) in tree[j].iter_mut().enumerate() {
            let next = perms[i].apply(j);
            if transversal[next].is_none() {
                let mut w = transversal[j].clone().expect("visited");
                w.push(Letter::pos(i));
                transversal[next] = Some(w);
                *row = true;
                queue.push_back(next);
            }
        }
    }
    let transversal: Vec<Word> =
        transversal.into_iter().map(|t| t.ok_or(Error::NotTransitive)).collect::<Result<_>>()?;

    let mut schreier_generators = Vec::new();
    let mut edge_index = vec![vec![None; free]; n];
    for j in 0..n {
        for i in 0..free {
            if tree[j][i] {
                continue;
            }
            let mut w = transversal[j].clone();
            w.push(Letter::pos(i));
            w.extend(invert_word(&transversal[perms[i].apply(j)]));
            edge_index[j][i] = Some(schreier_generators.len());
            schreier_generators.push(w);
        }
    }

    let mut data =
        SchreierData { base: c.clone(), transversal, schreier_generators, puncture_words: Vec::new(), edge_index };
    let mut punctures = Vec::new();
    for (slot, p) in perms.iter().enumerate() {
        let turn = slot_word(slot, k);
        for cycle in p.cycles() {
            let sheet = cycle[0];
            let word: Word = turn.iter().copied().cycle().take(turn.len() * cycle.len()).collect();
            let (word, end) = data.rewrite(sheet, &word);
            debug_assert_eq!(end, sheet);
            punctures.push(PunctureWord { slot, sheet, length: cycle.len(), word });
        }
    }
    data.puncture_words = punctures;
    Ok(data)
}

/// Abelianized exponent sums of a Schreier word.
fn abelianize(word: &[Letter], rank: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); rank];
    for l in word {
        if l.inverse {
            v[l.generator] -= 1;
        } else {
            v[l.generator] += 1;
        }
    }
    v
}

/// A basis of the integer kernel `{v : M v = 0}` of a matrix with `cols` columns,
/// by unimodular column reduction.
fn integer_kernel(rows: &[Vec<BigInt>], cols: usize) -> Vec<Vec<BigInt>> {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let mut u: Vec<Vec<BigInt>> =
        (0..cols).map(|i| (0..cols).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect();
    // Column ops act on m's columns and on u's columns together.
    let col_op = |m: &mut Vec<Vec<BigInt>>, u: &mut Vec<Vec<BigInt>>, a: usize, b: usize, q: &BigInt| {
        // column a -= q * column b
        for row in m.iter_mut().chain(u.iter_mut()) {
            let t = &row[b] * q;
            row[a] -= t;
        }
    };
    let swap = |m: &mut Vec<Vec<BigInt>>, u: &mut Vec<Vec<BigInt>>, a: usize, b: usize| {
        for row in m.iter_mut().chain(u.iter_mut()) {
            row.swap(a, b);
        }
    };
    let mut pivot = 0;
    for r in 0..m.len() {
        if pivot == cols {
            break;
        }
        loop {
            let best = (pivot..cols).filter(|&j| !m[r][j].is_zero()).min_by(|&a, &b| m[r][a].abs().cmp(&m[r][b].abs()));
            let Some(best) = best else { break };
            swap(&mut m, &mut u, pivot, best);
            let mut done = true;
            for j in pivot + 1..cols {
                if !m[r][j].is_zero() {
                    let q = m[r][j].div_floor(&m[r][pivot]);
                    col_op(&mut m, &mut u, j, pivot, &q);
                    if !m[r][j].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                pivot += 1;
                break;
            }
        }
    }
    (pivot..cols).map(|j| u.iter().map(|row| row[j].clone()).collect()).collect()
}

/// Homomorphism from the Schreier generators onto `Z/d` that kills every puncture word.
pub fn puncture_killing_map(data: &SchreierData, d: u64) -> Result<Vec<u64>> {
    let rank = data.rank();
    let rows: Vec<Vec<BigInt>> = data.puncture_words.iter().map(|p| abelianize(&p.word, rank)).collect();
    let kernel = integer_kernel(&rows, rank);
    let modulus = BigInt::from(d);
    let mut best_image = 1u64;
    for v in &kernel {
        let g = v.iter().fold(modulus.clone(), |g, x| g.gcd(x));
        let image = (&modulus / &g).to_u64().unwrap_or(1);
        if image == d {
            return Ok(v.iter().map(|x| x.mod_floor(&modulus).to_u64().expect("reduced")).collect());
        }
        best_image = best_image.max(image);
    }
    Err(Error::NoSurjection { d, image_order: best_image })
}

/// Composite covering `X̃ → X → sphere` of degree `d · deg(c)`, where
/// `X̃ → X` is an unbranched cyclic cover of order `d`.
pub fn cyclic_unbranched_extension(c: &Constellation, d: u64) -> Result<Constellation> {
    if d < 2 {
        return Err(Error::InvalidDatum(format!("cover order must be at least 2, got {d}")));
    }
    let data = schreier_data(c)?;
    let phi = puncture_killing_map(&data, d)?;
    let n = c.degree();
    let du = d as usize;
    let perms = c.perms();
    let k = perms.len();
    let mut lifted: Vec<Permutation> = Vec::with_capacity(k);
    for (i, p) in perms.iter().enumerate().take(k - 1) {
        let mut images = vec![0; n * du];
        for j in 0..n {
            let shift = data.edge_index[j][i].map_or(0, |s| phi[s] as usize);
            for r in 0..du {
                images[j * du + r] = p.apply(j) * du + (r + shift) % du;
            }
        }
        lifted.push(Permutation::new(images)?);
    }
    let product = lifted.iter().fold(Permutation::identity(n * du), |acc, p| acc.then(p));
    lifted.push(product.inverse());
    let slots = c.slots().iter().zip(lifted).map(|(s, p)| Slot::new(s.point.clone(), p)).collect();
    Constellation::new(n * du, slots)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmplifyReport {
    pub d: u64,
    pub genus_before: u64,
    pub genus_after: u64,
    pub monodromy_order_before: usize,
    pub monodromy_order_after: usize,
}

/// Extension together with a summary of genera and monodromy orders.
pub fn amplify(c: &Constellation, d: u64, cap: usize) -> Result<(Constellation, AmplifyReport)> {
    let extended = cyclic_unbranched_extension(c, d)?;
    let report = AmplifyReport {
        d,
        genus_before: genus_rh(c)?,
        genus_after: genus_rh(&extended)?,
        monodromy_order_before: monodromy_group(c, cap)?.order(),
        monodromy_order_after: monodromy_group(&extended, cap)?.order(),
    };
    Ok((extended, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::FamilyTag;
    use crate::covering::{branching_datum, is_subject_to};
    use crate::exemplars::{exemplar, ExemplarSpec};
    use crate::perm::DEFAULT_CAP;

    fn six_transpositions() -> Constellation {
        let t = Permutation::new(vec![1, 0]).unwrap();
        Constellation::from_perms(2, vec![t; 6]).unwrap()
    }

    #[test]
    fn hyperelliptic_counts() {
        let data = schreier_data(&six_transpositions()).unwrap();
        assert_eq!(data.rank(), 9);
        assert_eq!(data.puncture_words.len(), 6);
        assert_eq!(data.transversal.len(), 2);
    }

    #[test]
    fn torus_rank_identity() {
        let c = exemplar(&ExemplarSpec::new(FamilyTag::Torus2222, 1)).unwrap();
        let data = schreier_data(&c).unwrap();
        assert_eq!(data.rank(), 2 + data.puncture_words.len() - 1);
        assert_eq!(data.rank(), 5);
    }

    #[test]
    fn sphere_rejected() {
        assert!(matches!(schreier_data(&Constellation::trivial()), Err(Error::GenusTooSmall { genus: 0 })));
    }

    #[test]
    fn schreier_generators_fix_sheet_zero() {
        let c = exemplar(&ExemplarSpec::new(FamilyTag::Torus244, 2)).unwrap();
        let data = schreier_data(&c).unwrap();
        let perms = c.perms();
        for w in &data.schreier_generators {
            let end = w.iter().fold(0, |cur, l| {
                if l.inverse {
                    perms[l.generator].inverse_apply(cur)
                } else {
                    perms[l.generator].apply(cur)
                }
            });
            assert_eq!(end, 0);
        }
    }

    #[test]
    fn genus_grows_linearly() {
        let base = six_transpositions();
        let (datum, _) = branching_datum(&base);
        for (d, genus) in [(2, 3), (3, 4), (5, 6)] {
            let (ext, report) = amplify(&base, d, DEFAULT_CAP).unwrap();
            assert_eq!(ext.degree(), 2 * d as usize);
            assert_eq!(report.genus_after, genus);
            assert!(is_subject_to(&ext, &datum));
            assert_eq!(branching_datum(&ext).0, datum);
            assert_eq!(report.monodromy_order_after % (d as usize), 0);
            assert_eq!(report.monodromy_order_after % report.monodromy_order_before, 0);
        }
    }

    #[test]
    fn torus_over_torus() {
        let c = exemplar(&ExemplarSpec::new(FamilyTag::Torus333, 1)).unwrap();
        let ext = cyclic_unbranched_extension(&c, 2).unwrap();
        assert_eq!(genus_rh(&ext).unwrap(), 1);
    }

    #[test]
    fn kernel_of_small_matrix() {
        let rows = vec![vec![BigInt::from(2), BigInt::from(4), BigInt::from(6)]];
        let ker = integer_kernel(&rows, 3);
        assert_eq!(ker.len(), 2);
        for v in ker {
            let s: BigInt = rows[0].iter().zip(&v).map(|(a, b)| a * b).sum();
            assert!(s.is_zero());
        }
    }
}
