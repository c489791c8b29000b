//! Inherited suborbifold structures for a chain `Δ ≤ B ≤ Γ`.
//!
//! `Γ` acts on `Ũ = ℝ[Γ]` by conjugation; `Ṽ = ℝ[B]` and `W̃ = ℝ[Δ]` are the
//! candidate suborbifold charts at the origin. A structure on `ℝ[H]` is a
//! choice of `Λ ≤ Stab^Γ(ℝ[H])`; its intrinsic isotropy is `Λ/Ω` with `Ω` the
//! part of `Λ` fixing `ℝ[H]` pointwise. The canonical choice takes `Λ` to be
//! the whole stabilizer, which is `N_Γ(H)`, and then `Ω = C_Γ(H)`.

use std::sync::Arc;

use crate::algebra::{subspace_fixer, subspace_stabilizer, AlgebraVector, SubalgebraSpan, Symbol};
use crate::error::{GroupError, Result};
use crate::group::{Limits, PermGroup};
use crate::iso::{is_isomorphic_capped, named_iso_class_capped};
use crate::perm::Permutation;
use crate::quotient::{quotient, QuotientGroup};
use crate::saturation::{is_saturated_capped, Saturation};
use crate::subgroups::all_subgroups_capped;

/// A validated chain `Δ ≤ B ≤ Γ` on a common degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupChain {
    gamma: PermGroup,
    b: PermGroup,
    delta: PermGroup,
}

/// Which of the inclusions `{e} ⊊ Δ ⊊ B ⊊ Γ` are strict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Properness {
    pub delta_nontrivial: bool,
    pub delta_below_b: bool,
    pub b_below_gamma: bool,
}

impl Properness {
    pub fn is_proper(&self) -> bool {
        self.delta_nontrivial && self.delta_below_b && self.b_below_gamma
    }
}

impl SubgroupChain {
    pub fn new(gamma: PermGroup, b: PermGroup, delta: PermGroup) -> Result<Self> {
        if !b.is_subgroup_of(&gamma) {
            return Err(GroupError::NotSubgroup("B is not a subgroup of Γ".into()));
        }
        if !delta.is_subgroup_of(&b) {
            return Err(GroupError::NotSubgroup("Δ is not a subgroup of B".into()));
        }
        Ok(Self { gamma, b, delta })
    }

    pub fn gamma(&self) -> &PermGroup {
        &self.gamma
    }

    pub fn b(&self) -> &PermGroup {
        &self.b
    }

    pub fn delta(&self) -> &PermGroup {
        &self.delta
    }

    pub fn properness(&self) -> Properness {
        Properness {
            delta_nontrivial: !self.delta.is_trivial(),
            delta_below_b: self.delta.order() < self.b.order(),
            b_below_gamma: self.b.order() < self.gamma.order(),
        }
    }

    /// `(γΔγ⁻¹, γBγ⁻¹)` inside the same `Γ`.
    pub fn conjugate_by(&self, gamma: &Permutation) -> Result<Self> {
        if !self.gamma.contains(gamma) {
            return Err(GroupError::NotInGroup(gamma.to_string()));
        }
        Ok(Self {
            gamma: self.gamma.clone(),
            b: self.b.conjugate_by(gamma),
            delta: self.delta.conjugate_by(gamma),
        })
    }
}

/// The short exact sequence `1 → Ω → Λ → Λ/Ω → 1` and whether it splits.
#[derive(Debug, Clone)]
pub struct ExactSequence {
    omega: PermGroup,
    lambda: PermGroup,
    quotient: QuotientGroup,
    complement: Option<PermGroup>,
}

impl ExactSequence {
    pub fn new(omega: &PermGroup, lambda: &PermGroup, limits: &Limits) -> Result<Self> {
        let q = quotient(lambda, omega)?;
        let complement = find_complement(lambda, omega, limits)?;
        Ok(Self {
            omega: omega.clone(),
            lambda: lambda.clone(),
            quotient: q,
            complement,
        })
    }

    pub fn omega(&self) -> &PermGroup {
        &self.omega
    }

    pub fn lambda(&self) -> &PermGroup {
        &self.lambda
    }

    pub fn quotient(&self) -> &QuotientGroup {
        &self.quotient
    }

    /// Image of a section `σ` of the quotient map, when one exists.
    pub fn complement(&self) -> Option<&PermGroup> {
        self.complement.as_ref()
    }

    pub fn is_split(&self) -> bool {
        self.complement.is_some()
    }
}

/// Whether the sequence splits, with the complement `H ≤ Λ` (`H ∩ Ω = {e}`,
/// `|H|·|Ω| = |Λ|`) as witness.
pub fn is_split(seq: &ExactSequence) -> (bool, Option<&PermGroup>) {
    (seq.is_split(), seq.complement())
}

/// A complement to the normal subgroup `omega` in `lambda`, searched over the
/// subgroups of `lambda` in canonical order.
pub fn find_complement(lambda: &PermGroup, omega: &PermGroup, limits: &Limits) -> Result<Option<PermGroup>> {
    if omega.is_trivial() {
        return Ok(Some(lambda.clone()));
    }
    if omega.order() == lambda.order() {
        return Ok(Some(PermGroup::trivial(lambda.degree())));
    }
    let want = lambda.order() / omega.order();
    Ok(all_subgroups_capped(lambda, limits.subgroups)?
        .into_iter()
        .find(|h| h.order() == want && h.intersection(omega).is_trivial()))
}

/// `Stab^g(ℝ[h])`, cross-checked against `N_g(h)`.
pub fn canonical_lambda(g: &PermGroup, h: &PermGroup) -> Result<PermGroup> {
    let span = SubalgebraSpan::new(Arc::new(g.clone()), h.clone())?;
    let stab = subspace_stabilizer(g, &span)?;
    let normalizer = g.normalizer(h)?;
    if stab != normalizer {
        return Err(GroupError::Inconsistent(format!(
            "stabilizer of the span has order {}, normalizer has order {}",
            stab.order(),
            normalizer.order()
        )));
    }
    Ok(stab)
}

/// `Λ/Ω` with `Ω = Λ ∩ C_g(h)`. Fails if `Λ` does not stabilize `ℝ[h]`.
pub fn intrinsic_isotropy(g: &PermGroup, h: &PermGroup, lambda: &PermGroup) -> Result<QuotientGroup> {
    Ok(SuborbifoldModel::new(g, h, lambda)?.isotropy)
}

/// One suborbifold structure on `ℝ[H] ⊆ ℝ[Γ]` at the origin.
#[derive(Debug, Clone)]
pub struct SuborbifoldModel {
    ambient: PermGroup,
    span: PermGroup,
    lambda: PermGroup,
    omega: PermGroup,
    isotropy: QuotientGroup,
}

impl SuborbifoldModel {
    pub fn new(g: &PermGroup, h: &PermGroup, lambda: &PermGroup) -> Result<Self> {
        if !h.is_subgroup_of(g) {
            return Err(GroupError::NotSubgroup(format!("{h:?} is not inside {g:?}")));
        }
        if !lambda.is_subgroup_of(g) {
            return Err(GroupError::NotSubgroup(format!("Λ = {lambda:?} is not inside {g:?}")));
        }
        let ambient = Arc::new(g.clone());
        let span = SubalgebraSpan::new(Arc::clone(&ambient), h.clone())?;
        let basis: Vec<AlgebraVector<Symbol>> = h
            .elements()
            .iter()
            .map(|eta| AlgebraVector::generic(Arc::clone(&ambient), std::slice::from_ref(eta)))
            .collect::<Result<_>>()?;
        for l in lambda.generators() {
            for v in &basis {
                if !v.conjugation_act(l)?.lies_in(&span) {
                    return Err(GroupError::NotStabilizing(l.to_string()));
                }
            }
        }
        let omega = lambda.intersection(&subspace_fixer(g, &span)?);
        let isotropy = quotient(lambda, &omega)?;
        Ok(Self {
            ambient: g.clone(),
            span: h.clone(),
            lambda: lambda.clone(),
            omega,
            isotropy,
        })
    }

    /// The structure with `Λ = Stab^g(ℝ[h])`.
    pub fn canonical(g: &PermGroup, h: &PermGroup) -> Result<Self> {
        Self::new(g, h, &canonical_lambda(g, h)?)
    }

    pub fn ambient(&self) -> &PermGroup {
        &self.ambient
    }

    pub fn span_subgroup(&self) -> &PermGroup {
        &self.span
    }

    pub fn lambda(&self) -> &PermGroup {
        &self.lambda
    }

    pub fn omega(&self) -> &PermGroup {
        &self.omega
    }

    pub fn isotropy(&self) -> &QuotientGroup {
        &self.isotropy
    }

    pub fn exact_sequence(&self, limits: &Limits) -> Result<ExactSequence> {
        ExactSequence::new(&self.omega, &self.lambda, limits)
    }

    pub fn saturation(&self, limits: &Limits) -> Result<Saturation> {
        is_saturated_capped(&self.ambient, &self.span, &self.lambda, limits.subgroups)
    }

    pub fn is_full(&self) -> bool {
        is_full(&self.ambient, &self.lambda)
    }
}

/// `Λ = Γ` at the modeled point.
pub fn is_full(g: &PermGroup, lambda: &PermGroup) -> bool {
    g == lambda
}

/// `Γ_Q^P` computed inside `Γ_P = N_Γ(B)/C_Γ(B)`.
#[derive(Debug, Clone)]
pub struct DirectRoute {
    /// `Γ_P` as cosets.
    pub gamma_p: QuotientGroup,
    /// `Γ_P` in its regular representation; the groups below live here.
    pub gamma_p_regular: PermGroup,
    /// Elements of `Γ_P` mapping `ℝ[Δ]` into itself.
    pub stabilizer: PermGroup,
    /// Elements of `Γ_P` fixing `ℝ[Δ]` pointwise.
    pub fixer: PermGroup,
    pub isotropy: QuotientGroup,
}

/// Route 1: let the cosets of `C_Γ(B)` in `N_Γ(B)` act on `ℝ[Δ]` through their
/// representatives, take the stabilizer and pointwise fixer of `ℝ[Δ]` in
/// `Γ_P`, and form their quotient.
pub fn gamma_q_p_direct(chain: &SubgroupChain) -> Result<DirectRoute> {
    let (g, b, d) = (chain.gamma(), chain.b(), chain.delta());
    let nb = canonical_lambda(g, b)?;
    let cb = {
        let span_b = SubalgebraSpan::new(Arc::new(g.clone()), b.clone())?;
        subspace_fixer(g, &span_b)?
    };
    let gamma_p = quotient(&nb, &cb)?;

    let ambient = Arc::new(g.clone());
    let span_d = SubalgebraSpan::new(Arc::clone(&ambient), d.clone())?;
    let basis: Vec<AlgebraVector<Symbol>> = d
        .elements()
        .iter()
        .map(|eta| AlgebraVector::generic(Arc::clone(&ambient), std::slice::from_ref(eta)))
        .collect::<Result<_>>()?;

    let mut stab = Vec::new();
    let mut fix = Vec::new();
    for (c, coset) in gamma_p.cosets().iter().enumerate() {
        let act = |x: &Permutation| -> Result<Vec<AlgebraVector<Symbol>>> {
            basis.iter().map(|v| v.conjugation_act(x)).collect()
        };
        let images = act(&coset[0])?;
        // C_Γ(B) fixes ℝ[B] ⊇ ℝ[Δ] pointwise, so every member acts alike.
        for other in &coset[1..] {
            if act(other)? != images {
                return Err(GroupError::Inconsistent(format!(
                    "coset members {} and {other} act differently on the span",
                    coset[0]
                )));
            }
        }
        if images.iter().all(|v| v.lies_in(&span_d)) {
            stab.push(gamma_p.regular_element(c));
            if images == basis {
                fix.push(gamma_p.regular_element(c));
            }
        }
    }
    let degree = gamma_p.order();
    let stabilizer = PermGroup::from_elements(degree, stab)
        .map_err(|e| GroupError::Inconsistent(format!("stabilizer in Γ_P is not a subgroup: {e}")))?;
    let fixer = PermGroup::from_elements(degree, fix)
        .map_err(|e| GroupError::Inconsistent(format!("pointwise fixer in Γ_P is not a subgroup: {e}")))?;
    let isotropy = quotient(&stabilizer, &fixer)?;
    Ok(DirectRoute {
        gamma_p_regular: gamma_p.regular_representation(),
        gamma_p,
        stabilizer,
        fixer,
        isotropy,
    })
}

/// `Γ_Q^P` as a subquotient of `Γ`.
#[derive(Debug, Clone)]
pub struct FormulaRoute {
    /// `(N_Γ(Δ) ∩ N_Γ(B)) · C_Γ(Δ)`.
    pub numerator: PermGroup,
    /// `C_Γ(Δ)`.
    pub denominator: PermGroup,
    pub isotropy: QuotientGroup,
}

/// Route 2: `[(N_Γ(Δ) ∩ N_Γ(B)) · C_Γ(Δ)] / C_Γ(Δ)`, with the product set
/// checked to be a subgroup before quotienting.
pub fn gamma_q_p_formula(chain: &SubgroupChain) -> Result<FormulaRoute> {
    let (g, b, d) = (chain.gamma(), chain.b(), chain.delta());
    let nd = g.normalizer(d)?;
    let nb = g.normalizer(b)?;
    let cd = g.centralizer(d)?;
    let product = nd.intersection(&nb).product_set(&cd);
    let numerator = PermGroup::from_elements(g.degree(), product)
        .map_err(|e| GroupError::Inconsistent(format!("(N(Δ) ∩ N(B))·C(Δ) is not a subgroup: {e}")))?;
    let isotropy = quotient(&numerator, &cd)?;
    Ok(FormulaRoute {
        numerator,
        denominator: cd,
        isotropy,
    })
}

/// A quotient together with its label and a concrete permutation model.
#[derive(Debug, Clone)]
pub struct LabeledGroup {
    pub label: String,
    pub order: usize,
    pub abelian: bool,
    /// Regular representation of the quotient.
    pub model: PermGroup,
}

impl LabeledGroup {
    pub fn of_quotient(q: &QuotientGroup, limits: &Limits) -> Self {
        Self::of_group(q.regular_representation(), limits)
    }

    pub fn of_group(model: PermGroup, limits: &Limits) -> Self {
        Self {
            label: named_iso_class_capped(&model, limits.isomorphism),
            order: model.order(),
            abelian: model.is_abelian(),
            model,
        }
    }
}

/// A user-chosen structure on `ℝ[Δ] ⊆ ℝ[Γ]`.
#[derive(Debug, Clone)]
pub struct CustomQLevel {
    pub model: SuborbifoldModel,
    pub isotropy: LabeledGroup,
    /// Whether its isotropy is isomorphic to `Γ_Q^P`.
    pub matches_gamma_q_p: bool,
    /// Whether its isotropy is isomorphic to `Γ_Q^O`.
    pub matches_gamma_q_o: bool,
    pub saturation: Saturation,
    pub sequence: ExactSequence,
}

/// Everything known about one chain.
#[derive(Debug, Clone)]
pub struct InheritanceReport {
    pub chain: SubgroupChain,
    pub properness: Properness,
    pub centerless: bool,
    /// `P^O`: `Λ = N_Γ(B)`.
    pub p_in_o: SuborbifoldModel,
    /// `Q^O`: `Λ = N_Γ(Δ)`.
    pub q_in_o: SuborbifoldModel,
    pub gamma_p_o: LabeledGroup,
    pub gamma_q_o: LabeledGroup,
    pub gamma_q_p_route1: LabeledGroup,
    pub gamma_q_p_route2: LabeledGroup,
    pub direct: DirectRoute,
    pub formula: FormulaRoute,
    pub routes_agree: bool,
    /// `Γ_Q^O ≅ Γ_Q^P`.
    pub canonical_compatible: bool,
    /// `Γ_Q^P` and `Γ_Q^O` coincide as subquotients of `N_Γ(Δ)/C_Γ(Δ)`.
    pub equal_as_subquotients: bool,
    pub p_saturated_in_o: Saturation,
    pub q_saturated_in_o: Saturation,
    /// `Q^P` in `P`: orbits of `Γ_P` on `ℝ[Δ]` are the `N_Γ(B)`-orbits and
    /// those of `Stab^{Γ_P}(ℝ[Δ])` are the `N_Γ(Δ) ∩ N_Γ(B)`-orbits.
    pub q_saturated_in_p: Saturation,
    pub p_sequence_in_o: ExactSequence,
    pub q_sequence_in_o: ExactSequence,
    pub q_sequence_in_p: ExactSequence,
    pub p_full_in_o: bool,
    pub q_full_in_o: bool,
    pub q_full_in_p: bool,
    pub custom_q: Option<CustomQLevel>,
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, Default)]
pub struct AnalysisOptions {
    pub limits: Limits,
    /// Analyze groups with a nontrivial center instead of rejecting them.
    pub allow_center: bool,
    /// Alternative `Λ` for `ℝ[Δ] ⊆ ℝ[Γ]`.
    pub q_lambda: Option<PermGroup>,
}

/// Full classification of a chain in a centerless `Γ`, with default limits.
pub fn analyze_chain(chain: &SubgroupChain) -> Result<InheritanceReport> {
    analyze_chain_with(chain, &AnalysisOptions::default())
}

pub fn analyze_chain_with(chain: &SubgroupChain, opts: &AnalysisOptions) -> Result<InheritanceReport> {
    let limits = &opts.limits;
    let (g, b, d) = (chain.gamma(), chain.b(), chain.delta());
    let mut warnings = Vec::new();

    let center = g.center();
    let centerless = center.is_trivial();
    if !centerless {
        if !opts.allow_center {
            return Err(GroupError::NotCenterless(center.order()));
        }
        warnings.push(format!(
            "Γ has a center of order {}; its conjugation action is not effective",
            center.order()
        ));
    }
    let properness = chain.properness();
    if !properness.is_proper() {
        warnings.push("chain is not proper ({e} ⊊ Δ ⊊ B ⊊ Γ fails)".into());
    }

    let p_in_o = SuborbifoldModel::canonical(g, b)?;
    let q_in_o = SuborbifoldModel::canonical(g, d)?;
    let direct = gamma_q_p_direct(chain)?;
    let formula = gamma_q_p_formula(chain)?;

    let gamma_p_o = LabeledGroup::of_quotient(p_in_o.isotropy(), limits);
    let gamma_q_o = LabeledGroup::of_quotient(q_in_o.isotropy(), limits);
    let route1 = LabeledGroup::of_quotient(&direct.isotropy, limits);
    let route2 = LabeledGroup::of_quotient(&formula.isotropy, limits);

    let routes_agree = is_isomorphic_capped(&route1.model, &route2.model, limits.isomorphism)?;
    let canonical_compatible = is_isomorphic_capped(&gamma_q_o.model, &route1.model, limits.isomorphism)?;
    let equal_as_subquotients = formula.numerator == *q_in_o.lambda();

    let p_saturated_in_o = p_in_o.saturation(limits)?;
    let q_saturated_in_o = q_in_o.saturation(limits)?;
    let nd_nb = q_in_o.lambda().intersection(p_in_o.lambda());
    let q_saturated_in_p = is_saturated_capped(p_in_o.lambda(), d, &nd_nb, limits.subgroups)?;

    let p_sequence_in_o = p_in_o.exact_sequence(limits)?;
    let q_sequence_in_o = q_in_o.exact_sequence(limits)?;
    let q_sequence_in_p = ExactSequence::new(&direct.fixer, &direct.stabilizer, limits)?;

    let custom_q = match &opts.q_lambda {
        None => None,
        Some(lambda) => {
            let model = SuborbifoldModel::new(g, d, lambda)?;
            let isotropy = LabeledGroup::of_quotient(model.isotropy(), limits);
            Some(CustomQLevel {
                matches_gamma_q_p: is_isomorphic_capped(&isotropy.model, &route1.model, limits.isomorphism)?,
                matches_gamma_q_o: is_isomorphic_capped(&isotropy.model, &gamma_q_o.model, limits.isomorphism)?,
                saturation: model.saturation(limits)?,
                sequence: model.exact_sequence(limits)?,
                isotropy,
                model,
            })
        }
    };

    Ok(InheritanceReport {
        chain: chain.clone(),
        properness,
        centerless,
        p_full_in_o: p_in_o.is_full(),
        q_full_in_o: q_in_o.is_full(),
        q_full_in_p: direct.stabilizer.order() == direct.gamma_p.order(),
        p_in_o,
        q_in_o,
        gamma_p_o,
        gamma_q_o,
        gamma_q_p_route1: route1,
        gamma_q_p_route2: route2,
        direct,
        formula,
        routes_agree,
        canonical_compatible,
        equal_as_subquotients,
        p_saturated_in_o,
        q_saturated_in_o,
        q_saturated_in_p,
        p_sequence_in_o,
        q_sequence_in_o,
        q_sequence_in_p,
        custom_q,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle::parse_generator_list;
    use crate::iso::{is_isomorphic, named_iso_class};

    fn grp(gens: &str, n: usize) -> PermGroup {
        let (n, gens) = parse_generator_list(gens, Some(n)).unwrap();
        PermGroup::generate(n, &gens).unwrap()
    }

    fn a5() -> PermGroup {
        grp("(1 2 3 4 5);(1 2 3)", 5)
    }
    fn a4() -> PermGroup {
        grp("(1 2 3);(1 2)(3 4)", 5)
    }
    fn a3() -> PermGroup {
        grp("(1 2 3)", 5)
    }

    #[test]
    fn canonical_lambdas() {
        assert_eq!(canonical_lambda(&a5(), &a4()).unwrap(), a4());
        let l = canonical_lambda(&a5(), &a3()).unwrap();
        assert_eq!(l.order(), 6);
        assert_eq!(named_iso_class(&l), "S3");
        assert_eq!(canonical_lambda(&a5(), &a5()).unwrap(), a5());
    }

    #[test]
    fn intrinsic_isotropy_examples() {
        let (g, b, d) = (a5(), a4(), a3());
        let p = intrinsic_isotropy(&g, &b, &canonical_lambda(&g, &b).unwrap()).unwrap();
        assert_eq!(named_iso_class(&p.regular_representation()), "A4");
        let q = intrinsic_isotropy(&g, &d, &canonical_lambda(&g, &d).unwrap()).unwrap();
        assert_eq!(named_iso_class(&q.regular_representation()), "Z2");
        let q_small = intrinsic_isotropy(&g, &d, &d).unwrap();
        assert!(q_small.is_trivial());
        assert!(matches!(
            intrinsic_isotropy(&g, &d, &grp("(1 4)(2 5)", 5)),
            Err(GroupError::NotStabilizing(_))
        ));
    }

    #[test]
    fn gamma_q_p_on_the_alternating_chain() {
        let chain = SubgroupChain::new(a5(), a4(), a3()).unwrap();
        let direct = gamma_q_p_direct(&chain).unwrap();
        assert!(direct.isotropy.is_trivial());
        assert_eq!(direct.stabilizer.order(), 3);
        assert_eq!(direct.fixer.order(), 3);
        let formula = gamma_q_p_formula(&chain).unwrap();
        assert!(formula.isotropy.is_trivial());
        assert_eq!(formula.numerator, a3());
    }

    #[test]
    fn self_chain_recovers_gamma_p() {
        // With Δ = B the substructure is the whole chart of P.
        let chain = SubgroupChain::new(a5(), a4(), a4()).unwrap();
        let direct = gamma_q_p_direct(&chain).unwrap();
        assert_eq!(direct.isotropy.order(), direct.gamma_p.order());
        assert_eq!(direct.isotropy.order(), 12);
        assert_eq!(gamma_q_p_formula(&chain).unwrap().isotropy.order(), 12);
    }

    #[test]
    fn normal_abelian_delta_in_s4() {
        // N(V₄) = S₄ and C(V₄) = V₄, so both routes give S₄/V₄ ≅ S₃.
        let s4 = grp("(1 2 3 4);(1 2)", 4);
        let v4 = grp("(1 2)(3 4);(1 3)(2 4)", 4);
        let chain = SubgroupChain::new(s4.clone(), v4.clone(), v4).unwrap();
        let formula = gamma_q_p_formula(&chain).unwrap();
        assert_eq!(formula.isotropy.order(), 6);
        assert!(!formula.isotropy.is_abelian());
        assert_eq!(gamma_q_p_direct(&chain).unwrap().isotropy.order(), 6);
    }

    #[test]
    fn routes_agree_on_dihedral_chain() {
        let s4 = grp("(1 2 3 4);(1 2)", 4);
        let d4 = grp("(1 2 3 4);(1 3)", 4);
        let z2 = grp("(1 3)(2 4)", 4);
        let chain = SubgroupChain::new(s4, d4, z2).unwrap();
        let direct = gamma_q_p_direct(&chain).unwrap();
        let formula = gamma_q_p_formula(&chain).unwrap();
        assert_eq!(direct.isotropy.order(), formula.isotropy.order());
        assert!(is_isomorphic(
            &direct.isotropy.regular_representation(),
            &formula.isotropy.regular_representation()
        )
        .unwrap());
    }

    #[test]
    fn split_sequences() {
        let limits = Limits::default();
        let s3 = grp("(1 2 3);(1 2)", 3);
        let z3 = grp("(1 2 3)", 3);
        let seq = ExactSequence::new(&z3, &s3, &limits).unwrap();
        let h = seq.complement().unwrap();
        assert_eq!(h.order(), 2);
        assert!(h.intersection(&z3).is_trivial());

        let trivial = ExactSequence::new(&PermGroup::trivial(3), &s3, &limits).unwrap();
        assert!(trivial.is_split());

        let z4 = grp("(1 2 3 4)", 4);
        let z2 = grp("(1 3)(2 4)", 4);
        let seq = ExactSequence::new(&z2, &z4, &limits).unwrap();
        assert_eq!(is_split(&seq), (false, None));
        assert_eq!(seq.quotient().order(), 2);
    }

    #[test]
    fn fullness() {
        assert!(!is_full(&a5(), &a4()));
        assert!(is_full(&a5(), &a5()));
        assert!(!is_full(&a5(), &a5().normalizer(&a3()).unwrap()));
    }

    #[test]
    fn the_alternating_chain_report() {
        let chain = SubgroupChain::new(a5(), a4(), a3()).unwrap();
        let report = analyze_chain(&chain).unwrap();
        assert_eq!(report.gamma_p_o.label, "A4");
        assert_eq!(report.gamma_q_o.label, "Z2");
        assert_eq!(report.gamma_q_p_route1.label, "1");
        assert_eq!(report.gamma_q_p_route2.label, "1");
        assert!(report.routes_agree);
        assert!(!report.canonical_compatible);
        assert!(!report.equal_as_subquotients);
        assert!(!report.p_saturated_in_o.is_saturated());
        assert!(report.properness.is_proper());
        assert!(report.warnings.is_empty());
    }

    #[test]
    fn abelian_ambient_is_rejected() {
        let z6 = grp("(1 2 3 4 5 6)", 6);
        let z3 = grp("(1 3 5)(2 4 6)", 6);
        let chain = SubgroupChain::new(z6.clone(), z3, PermGroup::trivial(6)).unwrap();
        assert_eq!(analyze_chain(&chain).unwrap_err(), GroupError::NotCenterless(6));
        let opts = AnalysisOptions {
            allow_center: true,
            ..Default::default()
        };
        let report = analyze_chain_with(&chain, &opts).unwrap();
        assert_eq!(report.warnings.len(), 2);
    }

    #[test]
    fn custom_lambda_recovers_q_p() {
        let chain = SubgroupChain::new(a5(), a4(), a3()).unwrap();
        let opts = AnalysisOptions {
            q_lambda: Some(a3()),
            ..Default::default()
        };
        let report = analyze_chain_with(&chain, &opts).unwrap();
        let custom = report.custom_q.unwrap();
        assert_eq!(custom.isotropy.label, "1");
        assert!(custom.matches_gamma_q_p);
        assert!(!custom.matches_gamma_q_o);
    }
}
