//! Finite permutation groups with fully enumerated element sets.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{GroupError, Result};
use crate::perm::Permutation;

pub const DEFAULT_CLOSURE_CAP: usize = 10_000;
pub const DEFAULT_SUBGROUP_CAP: usize = 120;
pub const DEFAULT_ISOMORPHISM_CAP: usize = 60;

/// Environment variable overriding every group-order cap at once.
pub const ORDER_CAP_ENV: &str = "ORBISTRUCT_ORDER_CAP";

/// Group-order caps for the operations whose cost grows with the order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub closure: usize,
    pub subgroups: usize,
    pub isomorphism: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            closure: DEFAULT_CLOSURE_CAP,
            subgroups: DEFAULT_SUBGROUP_CAP,
            isomorphism: DEFAULT_ISOMORPHISM_CAP,
        }
    }
}

impl Limits {
    pub fn uniform(cap: usize) -> Self {
        Self {
            closure: cap,
            subgroups: cap,
            isomorphism: cap,
        }
    }

    /// Defaults, or a uniform cap taken from `ORBISTRUCT_ORDER_CAP` when set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(ORDER_CAP_ENV) {
            Ok(raw) => raw
                .trim()
                .parse::<usize>()
                .ok()
                .filter(|&c| c > 0)
                .map(Self::uniform)
                .ok_or_else(|| GroupError::Parse {
                    pos: 0,
                    msg: format!("{ORDER_CAP_ENV} must be a positive integer, got {raw:?}"),
                }),
            Err(_) => Ok(Self::default()),
        }
    }
}

/// A finite permutation group. Equality and hashing look only at the
/// element set, so two groups built from different generators compare equal
/// when they are the same subgroup of `Sym(n)`.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    /// Sorted lexicographically; the identity is always first.
    elements: Vec<Permutation>,
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermGroup {}

impl Hash for PermGroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.degree.hash(state);
        self.elements.hash(state);
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermGroup(order {}, degree {}, <", self.order(), self.degree)?;
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(">)")
    }
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        Self {
            degree,
            generators: Vec::new(),
            elements: vec![Permutation::identity(degree)],
        }
    }

    /// Smallest group containing `generators`, with the default closure cap.
    pub fn generate(degree: usize, generators: &[Permutation]) -> Result<Self> {
        Self::generate_capped(degree, generators, DEFAULT_CLOSURE_CAP)
    }

    /// Breadth-first closure under right multiplication by the generators.
    pub fn generate_capped(degree: usize, generators: &[Permutation], cap: usize) -> Result<Self> {
        for g in generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let gens: Vec<Permutation> = generators
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let identity = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::from([identity.clone()]);
        let mut queue = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = x.mul_unchecked(g);
                if seen.insert(y.clone()) {
                    if seen.len() > cap {
                        return Err(GroupError::CapExceeded {
                            what: "group closure".into(),
                            cap,
                        });
                    }
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort_unstable();
        Ok(Self {
            degree,
            generators: gens,
            elements,
        })
    }

    /// Wraps an element set already known to be a group.
    pub(crate) fn from_closed_set(degree: usize, mut elements: Vec<Permutation>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        let generators = small_generating_set(degree, &elements);
        Self {
            degree,
            generators,
            elements,
        }
    }

    /// Wraps an element set after checking that it is a group.
    pub fn from_elements(degree: usize, elements: Vec<Permutation>) -> Result<Self> {
        if elements.iter().any(|p| p.degree() != degree) {
            return Err(GroupError::NotSubgroup("mixed degrees".into()));
        }
        let set: HashSet<&Permutation> = elements.iter().collect();
        if !set.contains(&Permutation::identity(degree)) {
            return Err(GroupError::NotSubgroup("missing identity".into()));
        }
        for a in &elements {
            for b in &elements {
                let ab = a.mul_unchecked(b);
                if !set.contains(&ab) {
                    return Err(GroupError::NotSubgroup(format!("{a} * {b} = {ab} is not in the set")));
                }
            }
        }
        Ok(Self::from_closed_set(degree, elements))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn identity(&self) -> &Permutation {
        &self.elements[0]
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.elements.binary_search(p).is_ok()
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators[i + 1..]
                .iter()
                .all(|b| a.mul_unchecked(b) == b.mul_unchecked(a))
        })
    }

    /// Same group acting on `degree ≥ self.degree()` points.
    pub fn extend_to(&self, degree: usize) -> Result<Self> {
        if degree == self.degree {
            return Ok(self.clone());
        }
        let elements = self
            .elements
            .iter()
            .map(|p| p.extend_to(degree))
            .collect::<Result<Vec<_>>>()?;
        let generators = self
            .generators
            .iter()
            .map(|p| p.extend_to(degree))
            .collect::<Result<Vec<_>>>()?;
        // Padding with fixed points preserves the lexicographic order.
        Ok(Self {
            degree,
            generators,
            elements,
        })
    }

    /// True iff every element of `self` lies in `g`.
    pub fn is_subgroup_of(&self, g: &PermGroup) -> bool {
        self.degree == g.degree
            && g.order().is_multiple_of(self.order())
            && self.generators.iter().all(|x| g.contains(x))
    }

    /// True iff `self ≤ g` and `self` is normalized by every element of `g`.
    pub fn is_normal_in(&self, g: &PermGroup) -> bool {
        self.is_subgroup_of(g) && self.normality_violation(g).is_none()
    }

    /// A pair `(x, γ)` with `x ∈ self`, `γ ∈ g`, and `γxγ⁻¹ ∉ self`.
    pub(crate) fn normality_violation(&self, g: &PermGroup) -> Option<(Permutation, Permutation)> {
        g.generators.iter().find_map(|gamma| {
            self.generators
                .iter()
                .find(|x| !self.contains(&gamma.conjugate(x)))
                .map(|x| (x.clone(), gamma.clone()))
        })
    }

    pub fn intersection(&self, other: &PermGroup) -> PermGroup {
        let elements = self.elements.iter().filter(|p| other.contains(p)).cloned().collect();
        Self::from_closed_set(self.degree, elements)
    }

    /// `γ · self · γ⁻¹`.
    pub fn conjugate_by(&self, gamma: &Permutation) -> PermGroup {
        let elements: Vec<_> = self.elements.iter().map(|x| gamma.conjugate(x)).collect();
        let mut conj = Self::from_closed_set(self.degree, elements);
        conj.generators = self.generators.iter().map(|x| gamma.conjugate(x)).collect();
        conj.generators.sort_unstable();
        conj
    }

    /// Subgroup generated by `self` and `other`.
    pub fn join(&self, other: &PermGroup) -> Result<PermGroup> {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Self::generate(self.degree, &gens)
    }

    /// The set `self · other`, sorted and deduplicated. Not necessarily a group.
    pub fn product_set(&self, other: &PermGroup) -> Vec<Permutation> {
        let set: BTreeSet<Permutation> = self
            .elements
            .iter()
            .flat_map(|a| other.elements.iter().map(move |b| a.mul_unchecked(b)))
            .collect();
        set.into_iter().collect()
    }

    fn require_subgroup(&self, h: &PermGroup) -> Result<()> {
        if h.is_subgroup_of(self) {
            Ok(())
        } else {
            Err(GroupError::NotSubgroup(format!("{h:?} is not contained in {self:?}")))
        }
    }

    /// `N_self(h) = {γ : γhγ⁻¹ = h}`.
    pub fn normalizer(&self, h: &PermGroup) -> Result<PermGroup> {
        self.require_subgroup(h)?;
        let elements = self
            .elements
            .iter()
            .filter(|gamma| h.generators.iter().all(|x| h.contains(&gamma.conjugate(x))))
            .cloned()
            .collect();
        Ok(Self::from_closed_set(self.degree, elements))
    }

    /// `C_self(h) = {γ : γη = ηγ for all η ∈ h}`.
    pub fn centralizer(&self, h: &PermGroup) -> Result<PermGroup> {
        self.require_subgroup(h)?;
        let elements = self
            .elements
            .iter()
            .filter(|gamma| h.generators.iter().all(|x| gamma.conjugate(x) == *x))
            .cloned()
            .collect();
        let c = Self::from_closed_set(self.degree, elements);
        debug_assert!(c.is_normal_in(&self.normalizer(h)?));
        Ok(c)
    }

    pub fn center(&self) -> PermGroup {
        self.centralizer(self).expect("a group is a subgroup of itself")
    }

    /// All distinct conjugates of `h` in `self`, sorted.
    pub fn subgroup_conjugacy_class(&self, h: &PermGroup) -> Result<Vec<PermGroup>> {
        self.require_subgroup(h)?;
        let mut seen: HashSet<Vec<Permutation>> = HashSet::new();
        let mut class = Vec::new();
        for gamma in &self.elements {
            let c = h.conjugate_by(gamma);
            if seen.insert(c.elements.clone()) {
                class.push(c);
            }
        }
        class.sort_by(|a, b| a.elements.cmp(&b.elements));
        debug_assert_eq!(
            class.len() * self.normalizer(h)?.order(),
            self.order(),
            "orbit-stabilizer"
        );
        Ok(class)
    }

    /// Histogram of element orders.
    pub fn element_order_histogram(&self) -> Vec<(usize, usize)> {
        let mut counts: HashMap<usize, usize> = HashMap::new();
        for p in &self.elements {
            *counts.entry(p.order()).or_default() += 1;
        }
        let mut v: Vec<_> = counts.into_iter().collect();
        v.sort_unstable();
        v
    }
}

/// `h ≤ g`. Degree mismatch yields `false`.
pub fn is_subgroup(h: &PermGroup, g: &PermGroup) -> bool {
    h.is_subgroup_of(g)
}

/// Greedy generating set, trying high-order elements first so that the result
/// stays small.
fn small_generating_set(degree: usize, elements: &[Permutation]) -> Vec<Permutation> {
    let mut candidates: Vec<&Permutation> = elements.iter().filter(|p| !p.is_identity()).collect();
    candidates.sort_by_key(|p| std::cmp::Reverse(p.order()));
    let mut gens: Vec<Permutation> = Vec::new();
    let mut span: HashSet<Permutation> = HashSet::from([Permutation::identity(degree)]);
    for c in candidates {
        if span.len() == elements.len() {
            break;
        }
        if span.contains(c) {
            continue;
        }
        gens.push(c.clone());
        // Extend the span by closing under the new generator set.
        let mut queue: VecDeque<Permutation> = span.iter().cloned().collect();
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = x.mul_unchecked(g);
                if span.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
    }
    gens.sort_unstable();
    gens
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle::parse_cycles;

    fn p(s: &str, n: usize) -> Permutation {
        parse_cycles(s, Some(n)).unwrap()
    }

    fn grp(n: usize, gens: &[&str]) -> PermGroup {
        let gens: Vec<_> = gens.iter().map(|s| p(s, n)).collect();
        PermGroup::generate(n, &gens).unwrap()
    }

    #[test]
    fn closure_orders() {
        assert_eq!(grp(5, &["(1 2 3)", "(1 2)(3 4)"]).order(), 12);
        assert_eq!(grp(5, &["(1 2 3 4 5)", "(1 2 3)"]).order(), 60);
        assert_eq!(grp(5, &[]).order(), 1);
        assert_eq!(grp(5, &["()"]).order(), 1);
    }

    #[test]
    fn closure_cap_is_reported() {
        let gens = [p("(1 2 3 4 5)", 5), p("(1 2)", 5)];
        let err = PermGroup::generate_capped(5, &gens, 100).unwrap_err();
        assert_eq!(
            err,
            GroupError::CapExceeded {
                what: "group closure".into(),
                cap: 100
            }
        );
        assert!(err.to_string().contains("100"));
    }

    #[test]
    fn equal_groups_compare_equal() {
        let a = grp(4, &["(1 2 3 4)", "(1 2)"]);
        let b = grp(4, &["(1 2)", "(2 3)", "(3 4)"]);
        assert_eq!(a, b);
        assert_eq!(a.elements()[0], Permutation::identity(4));
    }

    #[test]
    fn subgroup_relations() {
        let a5 = grp(5, &["(1 2 3 4 5)", "(1 2 3)"]);
        let a4 = grp(5, &["(1 2 3)", "(1 2)(3 4)"]);
        let a3 = grp(5, &["(1 2 3)"]);
        let s3 = grp(5, &["(1 2 3)", "(1 2)"]);
        assert!(is_subgroup(&a3, &a4));
        assert!(!is_subgroup(&a4, &a3));
        assert!(!is_subgroup(&s3, &a5));
        assert!(!is_subgroup(&grp(4, &["(1 2 3)"]), &a5));
    }

    #[test]
    fn normalizers_and_centralizers_in_a5() {
        let a5 = grp(5, &["(1 2 3 4 5)", "(1 2 3)"]);
        let a4 = grp(5, &["(1 2 3)", "(1 2)(3 4)"]);
        let a3 = grp(5, &["(1 2 3)"]);
        assert_eq!(a5.normalizer(&a3).unwrap().order(), 6);
        assert_eq!(a5.normalizer(&a4).unwrap(), a4);
        assert_eq!(a5.normalizer(&PermGroup::trivial(5)).unwrap(), a5);
        assert_eq!(a5.centralizer(&a3).unwrap(), a3);
        assert!(a5.centralizer(&a4).unwrap().is_trivial());
        assert_eq!(a5.centralizer(&PermGroup::trivial(5)).unwrap(), a5);
        assert!(a3.normalizer(&a4).is_err());
        assert!(a3.centralizer(&a4).is_err());
    }

    #[test]
    fn centers() {
        assert!(grp(5, &["(1 2 3 4 5)", "(1 2 3)"]).center().is_trivial());
        assert!(grp(4, &["(1 2 3)", "(1 2)(3 4)"]).center().is_trivial());
        let z3 = grp(3, &["(1 2 3)"]);
        assert_eq!(z3.center(), z3);
    }

    #[test]
    fn conjugacy_class_sizes() {
        let a5 = grp(5, &["(1 2 3 4 5)", "(1 2 3)"]);
        let a4 = grp(5, &["(1 2 3)", "(1 2)(3 4)"]);
        let a3 = grp(5, &["(1 2 3)"]);
        assert_eq!(a5.subgroup_conjugacy_class(&a3).unwrap().len(), 10);
        assert_eq!(a5.subgroup_conjugacy_class(&a4).unwrap().len(), 5);
        assert_eq!(a5.subgroup_conjugacy_class(&a5).unwrap(), vec![a5.clone()]);
    }

    #[test]
    fn from_elements_validates() {
        let a3 = grp(3, &["(1 2 3)"]);
        assert_eq!(PermGroup::from_elements(3, a3.elements().to_vec()).unwrap(), a3);
        assert!(PermGroup::from_elements(3, vec![Permutation::identity(3), p("(1 2 3)", 3)]).is_err());
    }

    #[test]
    fn extension_keeps_structure() {
        let a4 = grp(4, &["(1 2 3)", "(1 2)(3 4)"]);
        let lifted = a4.extend_to(5).unwrap();
        assert_eq!(lifted, grp(5, &["(1 2 3)", "(1 2)(3 4)"]));
    }

    #[test]
    fn env_cap_parsing() {
        assert_eq!(Limits::uniform(7).subgroups, 7);
        assert_eq!(Limits::default().isomorphism, 60);
    }
}
