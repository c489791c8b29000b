//! Saturation of `ℝ[H] ⊆ ℝ[Γ]` with respect to a subgroup `Λ ≤ N_Γ(H)`:
//! for every `ỹ ∈ ℝ[H]`, `(Γ·ỹ) ∩ ℝ[H] = Λ·ỹ`.
//!
//! The condition ranges over an uncountable space, but it reduces to a finite
//! check. Conjugation permutes the basis, so whether `γ·ỹ` lies in `ℝ[H]`
//! depends only on `S = supp(ỹ)`: it does iff `γSγ⁻¹ ⊆ H`. When the
//! coefficients of `ỹ` are pairwise distinct, `γ·ỹ = λ·ỹ` forces
//! `γsγ⁻¹ = λsλ⁻¹` for every `s ∈ S`, and repeated coefficients only relax
//! this. So the definition holds iff for all `S ⊆ H` and `γ ∈ Γ` with
//! `γSγ⁻¹ ⊆ H` some `λ ∈ Λ` agrees with `γ` on `S` under conjugation.
//!
//! That per-`S` condition only depends on the subgroup `⟨S⟩`, which the
//! search uses to stop once every subgroup of `H` has been generated by some
//! subset already checked.

use std::collections::HashSet;
use std::sync::Arc;

use num_traits::Num;

use crate::algebra::{AlgebraVector, SubalgebraSpan, Symbol};
use crate::error::{GroupError, Result};
use crate::group::{PermGroup, DEFAULT_SUBGROUP_CAP};
use crate::perm::Permutation;
use crate::subgroups::SubgroupLattice;
use crate::table::{CayleyTable, ElementSet};

/// Above this `|H|` the unpruned `2^|H|` enumeration refuses to run.
pub const EXHAUSTIVE_SUPPORT_LIMIT: usize = 20;

/// A support pattern `S ⊆ H` and an element `γ` with `γSγ⁻¹ ⊆ H` that no
/// element of `Λ` imitates on `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaturationWitness {
    pub gamma: Permutation,
    /// Sorted.
    pub support: Vec<Permutation>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Saturation {
    Saturated,
    Violated(SaturationWitness),
}

impl Saturation {
    pub fn is_saturated(&self) -> bool {
        matches!(self, Saturation::Saturated)
    }

    pub fn witness(&self) -> Option<&SaturationWitness> {
        match self {
            Saturation::Saturated => None,
            Saturation::Violated(w) => Some(w),
        }
    }
}

/// Index data shared by both search strategies.
struct Frame<'a> {
    g: &'a PermGroup,
    h: &'a PermGroup,
    /// `conj[γ][s]`: position in `h` of `γ s γ⁻¹`, or `None` if it leaves `h`.
    conj: Vec<Vec<Option<usize>>>,
    /// Positions in `g` of the elements of `Λ`.
    lambda: Vec<usize>,
}

impl<'a> Frame<'a> {
    fn new(g: &'a PermGroup, h: &'a PermGroup, lambda: &PermGroup) -> Result<Self> {
        if !h.is_subgroup_of(g) {
            return Err(GroupError::NotSubgroup(format!("{h:?} is not inside {g:?}")));
        }
        if !lambda.is_subgroup_of(g) {
            return Err(GroupError::NotSubgroup(format!("Λ = {lambda:?} is not inside {g:?}")));
        }
        if let Some(l) = lambda
            .generators()
            .iter()
            .find(|l| h.generators().iter().any(|x| !h.contains(&l.conjugate(x))))
        {
            return Err(GroupError::NotStabilizing(l.to_string()));
        }
        let conj = g
            .elements()
            .iter()
            .map(|gamma| h.elements().iter().map(|s| h.index_of(&gamma.conjugate(s))).collect())
            .collect();
        let lambda = lambda
            .elements()
            .iter()
            .map(|l| g.index_of(l).expect("Λ ≤ g"))
            .collect();
        Ok(Self { g, h, conj, lambda })
    }

    /// First `γ` (in canonical order) witnessing a violation on `support`.
    fn violating_gamma(&self, support: &[usize]) -> Option<usize> {
        (0..self.conj.len()).find(|&gamma| {
            let row = &self.conj[gamma];
            let images: Option<Vec<usize>> = support.iter().map(|&s| row[s]).collect();
            match images {
                None => false,
                Some(images) => !self.lambda.iter().any(|&l| {
                    let lrow = &self.conj[l];
                    support.iter().zip(&images).all(|(&s, &img)| lrow[s] == Some(img))
                }),
            }
        })
    }

    fn witness(&self, support: &[usize], gamma: usize) -> SaturationWitness {
        SaturationWitness {
            gamma: self.g.elements()[gamma].clone(),
            support: support.iter().map(|&s| self.h.elements()[s].clone()).collect(),
        }
    }
}

/// Decides saturation of `ℝ[h]` in `ℝ[g]` for the subgroup `lambda`.
///
/// Violations are reported with the lexicographically smallest
/// `(|S|, S, γ)`.
pub fn is_saturated(g: &PermGroup, h: &PermGroup, lambda: &PermGroup) -> Result<Saturation> {
    is_saturated_capped(g, h, lambda, DEFAULT_SUBGROUP_CAP)
}

pub fn is_saturated_capped(g: &PermGroup, h: &PermGroup, lambda: &PermGroup, cap: usize) -> Result<Saturation> {
    let frame = Frame::new(g, h, lambda)?;
    let lattice = SubgroupLattice::new(h, cap)?;
    let table: &CayleyTable = &lattice.table;
    let target = lattice.sets.len();
    let mut covered: HashSet<ElementSet> = HashSet::new();
    let n = h.order();
    for k in 0..=n {
        let mut combo: Vec<usize> = (0..k).collect();
        loop {
            let span = table.closure(&combo);
            if covered.insert(span) {
                if let Some(gamma) = frame.violating_gamma(&combo) {
                    return Ok(Saturation::Violated(frame.witness(&combo, gamma)));
                }
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
        if covered.len() == target {
            return Ok(Saturation::Saturated);
        }
    }
    Err(GroupError::Inconsistent(
        "subsets failed to generate every subgroup".into(),
    ))
}

/// Literal enumeration of all `2^|h|` support patterns against every `γ`,
/// with no pruning. Used to cross-check [`is_saturated`].
pub fn is_saturated_exhaustive(g: &PermGroup, h: &PermGroup, lambda: &PermGroup) -> Result<Saturation> {
    if h.order() > EXHAUSTIVE_SUPPORT_LIMIT {
        return Err(GroupError::CapExceeded {
            what: format!("exhaustive saturation check over 2^{} supports", h.order()),
            cap: EXHAUSTIVE_SUPPORT_LIMIT,
        });
    }
    let frame = Frame::new(g, h, lambda)?;
    let n = h.order();
    let mut best: Option<(Vec<usize>, usize)> = None;
    for mask in 0u32..(1 << n) {
        let support: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        if let Some(gamma) = frame.violating_gamma(&support) {
            let better = match &best {
                None => true,
                Some((s, gm)) => (support.len(), &support, gamma) < (s.len(), s, *gm),
            };
            if better {
                best = Some((support, gamma));
            }
        }
    }
    Ok(match best {
        None => Saturation::Saturated,
        Some((s, gamma)) => Saturation::Violated(frame.witness(&s, gamma)),
    })
}

/// Replays a witness on the symbolic generic point supported on `S`: checks
/// that `γ·w̃` lands in `ℝ[h]` and differs from every `λ·w̃`.
pub fn replay_witness(g: &PermGroup, h: &PermGroup, lambda: &PermGroup, witness: &SaturationWitness) -> Result<bool> {
    let ambient = Arc::new(g.clone());
    let span = SubalgebraSpan::new(Arc::clone(&ambient), h.clone())?;
    let point: AlgebraVector<Symbol> = AlgebraVector::generic(ambient, &witness.support)?;
    if !point.lies_in(&span) {
        return Ok(false);
    }
    let moved = point.conjugation_act(&witness.gamma)?;
    if !moved.lies_in(&span) {
        return Ok(false);
    }
    for l in lambda.elements() {
        if point.conjugation_act(l)? == moved {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The defining condition at one point: `(g·ỹ) ∩ ℝ[h] = Λ·ỹ`.
pub fn orbit_condition_holds<T: Clone + Num>(
    h: &PermGroup,
    lambda: &PermGroup,
    point: &AlgebraVector<T>,
) -> Result<bool> {
    let g = Arc::clone(point.group());
    let span = SubalgebraSpan::new(Arc::clone(&g), h.clone())?;
    let mut ambient_orbit: Vec<AlgebraVector<T>> = Vec::new();
    for gamma in g.elements() {
        let v = point.conjugation_act(gamma)?;
        if v.lies_in(&span) && !ambient_orbit.contains(&v) {
            ambient_orbit.push(v);
        }
    }
    let mut lambda_orbit: Vec<AlgebraVector<T>> = Vec::new();
    for l in lambda.elements() {
        let v = point.conjugation_act(l)?;
        if !lambda_orbit.contains(&v) {
            lambda_orbit.push(v);
        }
    }
    Ok(ambient_orbit.len() == lambda_orbit.len() && lambda_orbit.iter().all(|v| ambient_orbit.contains(v)))
}

/// Advances `combo` to the next `k`-subset of `0..n` in lexicographic order.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    for i in (0..k).rev() {
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
