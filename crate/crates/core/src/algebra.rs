//! The group algebra `ℝ[Γ]` with exact coefficients and the conjugation
//! action `δ · Σ c_γ γ = Σ c_γ δγδ⁻¹`.
//!
//! Vectors are generic over the coefficient type. Arithmetic needs a
//! `num_traits::Num` field such as `BigRational`; the action only moves
//! coefficients around, so it also works for [`Symbol`] labels, which model a
//! point whose coordinates are pairwise distinct without choosing numbers.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::Num;

use crate::error::{GroupError, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// A formal coefficient label. Distinct labels stand for distinct generic
/// real numbers, so two symbolic vectors are equal exactly when they agree as
/// label assignments.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Symbol(pub u32);

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c{}", self.0)
    }
}

/// An element `Σ c_γ γ` of the group algebra of `group`. Absent keys are
/// zero coefficients; arithmetic never stores an explicit zero.
#[derive(Clone)]
pub struct AlgebraVector<T> {
    group: Arc<PermGroup>,
    coefficients: BTreeMap<Permutation, T>,
}

impl<T: PartialEq> PartialEq for AlgebraVector<T> {
    fn eq(&self, other: &Self) -> bool {
        same_group(&self.group, &other.group) && self.coefficients == other.coefficients
    }
}

impl<T: fmt::Debug> fmt::Debug for AlgebraVector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            return f.write_str("0");
        }
        for (k, (g, c)) in self.coefficients.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c:?}·{g}")?;
        }
        Ok(())
    }
}

fn same_group(a: &Arc<PermGroup>, b: &Arc<PermGroup>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl<T: Clone> AlgebraVector<T> {
    pub fn zero(group: Arc<PermGroup>) -> Self {
        Self {
            group,
            coefficients: BTreeMap::new(),
        }
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    /// Elements with a stored (nonzero) coefficient, in canonical order.
    pub fn support(&self) -> impl Iterator<Item = &Permutation> {
        self.coefficients.keys()
    }

    pub fn support_len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficient(&self, g: &Permutation) -> Option<&T> {
        self.coefficients.get(g)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &T)> {
        self.coefficients.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// True iff the vector lies in `ℝ[H]`, i.e. its support is inside `H`.
    pub fn lies_in(&self, span: &SubalgebraSpan) -> bool {
        self.coefficients.keys().all(|g| span.basis().contains(g))
    }

    /// `δ · a`: relabels the support by `γ ↦ δγδ⁻¹`, keeping coefficients.
    pub fn conjugation_act(&self, delta: &Permutation) -> Result<Self> {
        if !self.group.contains(delta) {
            return Err(GroupError::NotInGroup(delta.to_string()));
        }
        let coefficients = self
            .coefficients
            .iter()
            .map(|(g, c)| (delta.conjugate(g), c.clone()))
            .collect();
        Ok(Self {
            group: Arc::clone(&self.group),
            coefficients,
        })
    }

    /// Builds a vector from explicit terms; later duplicates overwrite
    /// earlier ones.
    fn from_map(group: Arc<PermGroup>, terms: impl IntoIterator<Item = (Permutation, T)>) -> Result<Self> {
        let mut coefficients = BTreeMap::new();
        for (g, c) in terms {
            if !group.contains(&g) {
                return Err(GroupError::NotInGroup(g.to_string()));
            }
            coefficients.insert(g, c);
        }
        Ok(Self { group, coefficients })
    }
}

impl AlgebraVector<Symbol> {
    /// The generic point `Σ cᵢ sᵢ` over `support`, with one fresh label per
    /// element in the order given.
    pub fn generic(group: Arc<PermGroup>, support: &[Permutation]) -> Result<Self> {
        Self::from_map(
            group,
            support.iter().enumerate().map(|(i, g)| (g.clone(), Symbol(i as u32))),
        )
    }
}

impl<T: Clone + Num> AlgebraVector<T> {
    /// `1·γ`.
    pub fn basis(group: Arc<PermGroup>, gamma: &Permutation) -> Result<Self> {
        Self::from_terms(group, [(gamma.clone(), T::one())])
    }

    /// Sums repeated terms and drops zero coefficients.
    pub fn from_terms(group: Arc<PermGroup>, terms: impl IntoIterator<Item = (Permutation, T)>) -> Result<Self> {
        let mut out = Self::zero(group);
        for (g, c) in terms {
            if !out.group.contains(&g) {
                return Err(GroupError::NotInGroup(g.to_string()));
            }
            out.accumulate(g, c);
        }
        Ok(out)
    }

    fn accumulate(&mut self, g: Permutation, c: T) {
        use std::collections::btree_map::Entry;
        match self.coefficients.entry(g) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if same_group(&self.group, &other.group) {
            Ok(())
        } else {
            Err(GroupError::AlgebraMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (g, c) in &other.coefficients {
            out.accumulate(g.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, k: &T) -> Self {
        if k.is_zero() {
            return Self::zero(Arc::clone(&self.group));
        }
        Self {
            group: Arc::clone(&self.group),
            coefficients: self
                .coefficients
                .iter()
                .map(|(g, c)| (g.clone(), k.clone() * c.clone()))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// Convolution product: the coefficient of `ν` is `Σ_{γδ=ν} c_γ d_δ`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = Self::zero(Arc::clone(&self.group));
        for (g, c) in &self.coefficients {
            for (d, e) in &other.coefficients {
                out.accumulate(g.mul_unchecked(d), c.clone() * e.clone());
            }
        }
        Ok(out)
    }

    /// The multiplicative identity `1·e`.
    pub fn one(group: Arc<PermGroup>) -> Self {
        let e = group.identity().clone();
        let mut out = Self::zero(group);
        out.coefficients.insert(e, T::one());
        out
    }
}

/// `ℝ[H] ⊆ ℝ[Γ]`, represented by the subgroup `H` itself: the conjugation
/// action permutes the canonical basis, so membership in the span is
/// support containment in `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubalgebraSpan {
    ambient: Arc<PermGroup>,
    basis: PermGroup,
}

impl SubalgebraSpan {
    pub fn new(ambient: Arc<PermGroup>, basis: PermGroup) -> Result<Self> {
        if !basis.is_subgroup_of(&ambient) {
            return Err(GroupError::NotSubgroup(format!(
                "span basis {basis:?} is not inside {ambient:?}"
            )));
        }
        Ok(Self { ambient, basis })
    }

    pub fn ambient(&self) -> &Arc<PermGroup> {
        &self.ambient
    }

    pub fn basis(&self) -> &PermGroup {
        &self.basis
    }

    fn basis_vectors(&self) -> Vec<AlgebraVector<Symbol>> {
        self.basis
            .elements()
            .iter()
            .map(|eta| {
                AlgebraVector::generic(Arc::clone(&self.ambient), std::slice::from_ref(eta))
                    .expect("basis elements lie in the ambient group")
            })
            .collect()
    }
}

fn check_ambient(g: &PermGroup, span: &SubalgebraSpan) -> Result<()> {
    if span.basis.is_subgroup_of(g) && span.ambient.as_ref() == g {
        Ok(())
    } else {
        Err(GroupError::NotSubgroup(format!(
            "span basis {:?} is not a subgroup of {g:?}",
            span.basis
        )))
    }
}

/// `Stab^g(ℝ[H]) = {γ ∈ g : γ·ℝ[H] ⊆ ℝ[H]}`, computed from the action on each
/// basis vector.
pub fn subspace_stabilizer(g: &PermGroup, span: &SubalgebraSpan) -> Result<PermGroup> {
    check_ambient(g, span)?;
    let basis = span.basis_vectors();
    let mut elements = Vec::new();
    for gamma in g.elements() {
        let mut keeps = true;
        for v in &basis {
            if !v.conjugation_act(gamma)?.lies_in(span) {
                keeps = false;
                break;
            }
        }
        if keeps {
            elements.push(gamma.clone());
        }
    }
    Ok(PermGroup::from_closed_set(g.degree(), elements))
}

/// `g^{ℝ[H]} = {γ ∈ g : γ·β = β for all β ∈ ℝ[H]}`, computed from the action
/// on each basis vector.
pub fn subspace_fixer(g: &PermGroup, span: &SubalgebraSpan) -> Result<PermGroup> {
    check_ambient(g, span)?;
    let basis = span.basis_vectors();
    let mut elements = Vec::new();
    for gamma in g.elements() {
        let mut fixes = true;
        for v in &basis {
            if v.conjugation_act(gamma)? != *v {
                fixes = false;
                break;
            }
        }
        if fixes {
            elements.push(gamma.clone());
        }
    }
    Ok(PermGroup::from_closed_set(g.degree(), elements))
}

/// Whether `g` acts on `ℝ[g]` with trivial kernel.
pub fn is_action_effective(g: &PermGroup) -> bool {
    let ambient = Arc::new(g.clone());
    let span = SubalgebraSpan::new(Arc::clone(&ambient), g.clone()).expect("g ≤ g");
    let kernel = subspace_fixer(g, &span).expect("g ≤ g");
    debug_assert_eq!(kernel.is_trivial(), g.center().is_trivial());
    kernel.is_trivial()
}
