//! Quotient groups `H/N` as coset tables.

use std::collections::HashMap;

use crate::error::{GroupError, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Cosets of a normal subgroup with their multiplication table. Coset `0` is
/// the kernel itself; cosets are ordered by their smallest element, which is
/// also the representative.
#[derive(Clone, Debug)]
pub struct QuotientGroup {
    ambient: PermGroup,
    kernel: PermGroup,
    cosets: Vec<Vec<Permutation>>,
    coset_of: HashMap<Permutation, usize>,
    table: Vec<Vec<usize>>,
}

impl QuotientGroup {
    pub fn ambient(&self) -> &PermGroup {
        &self.ambient
    }

    pub fn kernel(&self) -> &PermGroup {
        &self.kernel
    }

    pub fn order(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.cosets.len() == 1
    }

    pub fn cosets(&self) -> &[Vec<Permutation>] {
        &self.cosets
    }

    pub fn representative(&self, coset: usize) -> &Permutation {
        &self.cosets[coset][0]
    }

    pub fn representatives(&self) -> impl Iterator<Item = &Permutation> {
        self.cosets.iter().map(|c| &c[0])
    }

    /// Index of the coset containing `p`, if `p` lies in the ambient group.
    pub fn coset_index(&self, p: &Permutation) -> Option<usize> {
        self.coset_of.get(p).copied()
    }

    pub fn multiply(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    /// Left-regular representation on the cosets: coset `a` becomes the
    /// permutation `x ↦ a·x` of `{0..|H/N|}`. Faithful, so the result is
    /// isomorphic to the quotient.
    pub fn regular_representation(&self) -> PermGroup {
        let n = self.order();
        let elements = (0..n)
            .map(|a| Permutation::from_images(self.table[a].clone()).expect("rows of a group table are bijections"))
            .collect();
        PermGroup::from_closed_set(n, elements)
    }

    /// The regular-representation permutation of one coset.
    pub fn regular_element(&self, coset: usize) -> Permutation {
        Permutation::from_images(self.table[coset].clone()).expect("rows of a group table are bijections")
    }
}

/// `h / n`. Fails unless `n` is a normal subgroup of `h`; the error names a
/// conjugation that leaves `n`.
pub fn quotient(h: &PermGroup, n: &PermGroup) -> Result<QuotientGroup> {
    if !n.is_subgroup_of(h) {
        return Err(GroupError::NotSubgroup(format!(
            "kernel {n:?} is not contained in {h:?}"
        )));
    }
    if let Some((element, by)) = n.normality_violation(h) {
        return Err(GroupError::NotNormal {
            element: element.to_string(),
            by: by.to_string(),
        });
    }
    let mut coset_of: HashMap<Permutation, usize> = HashMap::with_capacity(h.order());
    let mut cosets: Vec<Vec<Permutation>> = Vec::new();
    // Ambient elements are sorted, so the first unseen element is the
    // smallest member of its coset.
    for x in h.elements() {
        if coset_of.contains_key(x) {
            continue;
        }
        let idx = cosets.len();
        let mut coset: Vec<Permutation> = n.elements().iter().map(|k| x.mul_unchecked(k)).collect();
        coset.sort_unstable();
        for y in &coset {
            coset_of.insert(y.clone(), idx);
        }
        cosets.push(coset);
    }
    let table = cosets
        .iter()
        .map(|a| cosets.iter().map(|b| coset_of[&a[0].mul_unchecked(&b[0])]).collect())
        .collect();
    debug_assert_eq!(cosets.len() * n.order(), h.order());
    Ok(QuotientGroup {
        ambient: h.clone(),
        kernel: n.clone(),
        cosets,
        coset_of,
        table,
    })
}
