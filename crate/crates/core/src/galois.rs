//! Monodromy groups, Galois closures, fibered products and domination.

use std::collections::HashSet;

use crate::covering::{Constellation, Slot};
use crate::error::{Error, Result};
use crate::perm::{GroupTable, Permutation};

pub fn monodromy_group(c: &Constellation, cap: usize) -> Result<GroupTable> {
    GroupTable::generate(c.degree(), &c.perms(), cap)
}

/// A connected covering is Galois exactly when its monodromy acts regularly.
pub fn is_galois(c: &Constellation, cap: usize) -> Result<bool> {
    Ok(monodromy_group(c, cap)?.order() == c.degree())
}

/// Minimal Galois covering dominating `c`: the monodromy group acting on
/// itself by right multiplication, points indexed in generation order.
pub fn galois_closure(c: &Constellation, cap: usize) -> Result<Constellation> {
    let group = monodromy_group(c, cap)?;
    Ok(regular_constellation(&group, c.slots()))
}

/// Regular representation of the slot elements, which must lie in `group`.
pub(crate) fn regular_constellation(group: &GroupTable, slots: &[Slot]) -> Constellation {
    let elements = group.elements();
    let slots = slots
        .iter()
        .map(|s| {
            let images = elements.iter().map(|e| group.index_of(&e.then(&s.perm)).expect("group is closed")).collect();
            Slot::new(s.point.clone(), Permutation::new(images).expect("right multiplication is a bijection"))
        })
        .collect();
    Constellation::from_parts_unchecked(group.order(), slots)
}

/// Common label order for two constellations, with identity padding where a
/// label is missing from one side. Shared labels must appear in the same
/// relative order in both.
pub fn align_labels(
    c1: &Constellation,
    c2: &Constellation,
) -> Result<(Vec<String>, Vec<Permutation>, Vec<Permutation>)> {
    let a = c1.labels();
    let b = c2.labels();
    let in_b: HashSet<&str> = b.iter().copied().collect();
    let in_a: HashSet<&str> = a.iter().copied().collect();
    let shared_a: Vec<&str> = a.iter().copied().filter(|l| in_b.contains(l)).collect();
    let shared_b: Vec<&str> = b.iter().copied().filter(|l| in_a.contains(l)).collect();
    if shared_a != shared_b {
        return Err(Error::LabelMismatch(format!(
            "shared points appear as {shared_a:?} in one covering and {shared_b:?} in the other"
        )));
    }
    let mut merged: Vec<String> = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        while i < a.len() && !in_b.contains(a[i]) {
            merged.push(a[i].to_string());
            i += 1;
        }
        while j < b.len() && !in_a.contains(b[j]) {
            merged.push(b[j].to_string());
            j += 1;
        }
        if i < a.len() && j < b.len() {
            debug_assert_eq!(a[i], b[j]);
            merged.push(a[i].to_string());
            i += 1;
            j += 1;
        }
    }
    let lookup =
        |c: &Constellation, l: &str| c.perm_at(l).cloned().unwrap_or_else(|| Permutation::identity(c.degree()));
    let p1 = merged.iter().map(|l| lookup(c1, l)).collect();
    let p2 = merged.iter().map(|l| lookup(c2, l)).collect();
    Ok((merged, p1, p2))
}

/// One irreducible component of a fibered product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberedComponent {
    pub constellation: Constellation,
    /// `pairs[k] = (i, j)`: point `k` lies over point `i` of the first factor and `j` of the second.
    pub pairs: Vec<(usize, usize)>,
}

impl FiberedComponent {
    /// Whether the projection to `second` is unbranched: every cycle of a
    /// component slot is as long as the cycle of `second` it lies over.
    pub fn projects_unbranched_to(&self, second: &Constellation) -> bool {
        self.constellation.slots().iter().all(|s| {
            let over = second.perm_at(&s.point).cloned().unwrap_or_else(|| Permutation::identity(second.degree()));
            let lengths = cycle_length_table(&over);
            s.perm.cycles().iter().all(|cy| cy.len() == lengths[self.pairs[cy[0]].1])
        })
    }

    pub fn projects_unbranched_to_first(&self, first: &Constellation) -> bool {
        self.constellation.slots().iter().all(|s| {
            let over = first.perm_at(&s.point).cloned().unwrap_or_else(|| Permutation::identity(first.degree()));
            let lengths = cycle_length_table(&over);
            s.perm.cycles().iter().all(|cy| cy.len() == lengths[self.pairs[cy[0]].0])
        })
    }
}

fn cycle_length_table(p: &Permutation) -> Vec<usize> {
    let mut out = vec![0; p.degree()];
    for cy in p.cycles() {
        for &x in &cy {
            out[x] = cy.len();
        }
    }
    out
}

/// Orbits of the diagonal action on pairs of sheets, ordered by smallest pair.
pub fn fibered_product(c1: &Constellation, c2: &Constellation) -> Result<Vec<FiberedComponent>> {
    let (labels, p1, p2) = align_labels(c1, c2)?;
    let (n1, n2) = (c1.degree(), c2.degree());
    let mut seen = vec![false; n1 * n2];
    let mut components = Vec::new();
    for start in 0..n1 * n2 {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut orbit = vec![start];
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            head += 1;
            let (i, j) = (x / n2, x % n2);
            for (a, b) in p1.iter().zip(&p2) {
                let y = a.apply(i) * n2 + b.apply(j);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
        }
        orbit.sort_unstable();
        let mut local = vec![usize::MAX; n1 * n2];
        for (k, &x) in orbit.iter().enumerate() {
            local[x] = k;
        }
        let slots = labels
            .iter()
            .zip(p1.iter().zip(&p2))
            .map(|(l, (a, b))| {
                let images = orbit.iter().map(|&x| local[a.apply(x / n2) * n2 + b.apply(x % n2)]).collect();
                Slot::new(l.clone(), Permutation::new(images).expect("orbit is invariant"))
            })
            .collect();
        components.push(FiberedComponent {
            constellation: Constellation::from_parts_unchecked(orbit.len(), slots),
            pairs: orbit.iter().map(|&x| (x / n2, x % n2)).collect(),
        });
    }
    Ok(components)
}

/// A covering map from `c1`'s sheets onto `c2`'s commuting with every slot,
/// if one exists.
pub fn find_domination(c1: &Constellation, c2: &Constellation) -> Result<Option<Vec<usize>>> {
    let (_, p1, p2) = align_labels(c1, c2)?;
    let (n1, n2) = (c1.degree(), c2.degree());
    if n1 % n2 != 0 {
        return Ok(None);
    }
    'candidate: for target in 0..n2 {
        let mut phi = vec![usize::MAX; n1];
        phi[0] = target;
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for (a, b) in p1.iter().zip(&p2) {
                let y = a.apply(x);
                let expected = b.apply(phi[x]);
                if phi[y] == usize::MAX {
                    phi[y] = expected;
                    stack.push(y);
                } else if phi[y] != expected {
                    continue 'candidate;
                }
            }
        }
        return Ok(Some(phi));
    }
    Ok(None)
}

pub fn dominates(c1: &Constellation, c2: &Constellation) -> Result<bool> {
    Ok(find_domination(c1, c2)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covering::{branching_datum, genus_rh};
    use crate::perm::DEFAULT_CAP;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    fn s3_constellation() -> Constellation {
        Constellation::closing(3, vec![p(&[1, 0, 2]), p(&[0, 2, 1])]).unwrap()
    }

    fn power(n: usize) -> Constellation {
        let s = Permutation::rotation(n);
        Constellation::from_perms(n, vec![s.clone(), s.inverse()]).unwrap()
    }

    #[test]
    fn monodromy_examples() {
        assert_eq!(monodromy_group(&power(7), DEFAULT_CAP).unwrap().order(), 7);
        assert_eq!(monodromy_group(&s3_constellation(), DEFAULT_CAP).unwrap().order(), 6);
    }

    #[test]
    fn galois_property() {
        assert!(is_galois(&power(6), DEFAULT_CAP).unwrap());
        assert!(!is_galois(&s3_constellation(), DEFAULT_CAP).unwrap());
        let two = Constellation::from_perms(2, vec![p(&[1, 0]); 4]).unwrap();
        assert!(is_galois(&two, DEFAULT_CAP).unwrap());
    }

    #[test]
    fn closure_of_s3_constellation() {
        let closure = galois_closure(&s3_constellation(), DEFAULT_CAP).unwrap();
        assert_eq!(closure.degree(), 6);
        assert!(is_galois(&closure, DEFAULT_CAP).unwrap());
        assert_eq!(branching_datum(&closure).0.orders(), vec![2, 2, 3]);
        assert_eq!(genus_rh(&closure).unwrap(), 0);
        assert!(dominates(&closure, &s3_constellation()).unwrap());
    }

    #[test]
    fn closure_of_galois_is_same_degree() {
        let six = Constellation::from_perms(2, vec![p(&[1, 0]); 6]).unwrap();
        let closure = galois_closure(&six, DEFAULT_CAP).unwrap();
        assert_eq!(closure.degree(), 2);
        assert_eq!(genus_rh(&closure).unwrap(), 2);
        assert!(dominates(&closure, &six).unwrap() && dominates(&six, &closure).unwrap());
    }

    #[test]
    fn fibered_product_examples() {
        let two = Constellation::from_perms(2, vec![p(&[1, 0]); 2]).unwrap();
        let comps = fibered_product(&two, &two).unwrap();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.constellation.degree() == 2));
        assert_eq!(comps[0].pairs, vec![(0, 0), (1, 1)]);

        let c = s3_constellation();
        let with_trivial = fibered_product(&c, &Constellation::trivial()).unwrap();
        assert_eq!(with_trivial.len(), 1);
        assert!(dominates(&with_trivial[0].constellation, &c).unwrap());
        assert!(dominates(&c, &with_trivial[0].constellation).unwrap());

        let closure = galois_closure(&c, DEFAULT_CAP).unwrap();
        let comps = fibered_product(&c, &closure).unwrap();
        assert_eq!(comps.iter().map(|w| w.constellation.degree()).sum::<usize>(), 18);
        assert!(comps.iter().all(|w| w.projects_unbranched_to(&closure)));
    }

    #[test]
    fn label_alignment() {
        let a = Constellation::new(2, vec![Slot::new("x", p(&[1, 0])), Slot::new("y", p(&[1, 0]))]).unwrap();
        let b = Constellation::new(2, vec![Slot::new("y", p(&[1, 0])), Slot::new("z", p(&[1, 0]))]).unwrap();
        let (labels, pa, pb) = align_labels(&a, &b).unwrap();
        assert_eq!(labels, vec!["x", "y", "z"]);
        assert!(pa[2].is_identity() && pb[0].is_identity());
        let swapped = Constellation::new(2, vec![Slot::new("y", p(&[1, 0])), Slot::new("x", p(&[1, 0]))]).unwrap();
        assert!(matches!(fibered_product(&a, &swapped), Err(Error::LabelMismatch(_))));
    }

    #[test]
    fn cyclic_does_not_dominate_dihedral() {
        // D4 on the square's vertices, datum (2,2,4).
        let x = p(&[1, 0, 3, 2]);
        let y = p(&[0, 3, 2, 1]);
        let d4 = Constellation::closing(4, vec![x, y]).unwrap();
        assert_eq!(branching_datum(&d4).0.orders(), vec![2, 2, 4]);
        assert!(!dominates(&power(4), &d4).unwrap());
        assert!(dominates(&galois_closure(&d4, DEFAULT_CAP).unwrap(), &d4).unwrap());
    }
}
