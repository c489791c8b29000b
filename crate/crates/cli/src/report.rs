//! Serializable report documents and their text rendering.

use std::fmt::Write as _;

use orbistruct::saturation::Saturation;
use orbistruct::substructure::{CustomQLevel, LabeledGroup};
use orbistruct::{render, ExactSequence, InheritanceReport, PermGroup, SweepResult, SweepSummary};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub command: Vec<String>,
    pub payload: Payload,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
#[allow(clippy::large_enum_variant)]
pub enum Payload {
    Analysis(AnalysisDoc),
    Sweep(SweepDoc),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDoc {
    pub name: Option<String>,
    pub degree: usize,
    pub order: usize,
    pub generators: Vec<String>,
}

impl GroupDoc {
    pub fn new(g: &PermGroup, name: Option<&str>) -> Self {
        Self {
            name: name.map(String::from),
            degree: g.degree(),
            order: g.order(),
            generators: g.generators().iter().map(render).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsotropyDoc {
    pub label: String,
    pub order: usize,
    pub abelian: bool,
}

impl From<&LabeledGroup> for IsotropyDoc {
    fn from(g: &LabeledGroup) -> Self {
        Self {
            label: g.label.clone(),
            order: g.order,
            abelian: g.abelian,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub gamma: String,
    pub support: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SaturationDoc {
    pub saturated: bool,
    pub witness: Option<WitnessDoc>,
}

impl From<&Saturation> for SaturationDoc {
    fn from(s: &Saturation) -> Self {
        Self {
            saturated: s.is_saturated(),
            witness: s.witness().map(|w| WitnessDoc {
                gamma: render(&w.gamma),
                support: w.support.iter().map(render).collect(),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceDoc {
    pub lambda_order: usize,
    pub omega_order: usize,
    pub split: bool,
    pub complement: Option<GroupDoc>,
}

impl From<&ExactSequence> for SequenceDoc {
    fn from(s: &ExactSequence) -> Self {
        Self {
            lambda_order: s.lambda().order(),
            omega_order: s.omega().order(),
            split: s.is_split(),
            complement: s.complement().map(|c| GroupDoc::new(c, None)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelDoc {
    pub saturated: SaturationDoc,
    pub sequence: SequenceDoc,
    pub full: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CustomQDoc {
    pub lambda: GroupDoc,
    pub isotropy: IsotropyDoc,
    pub matches_gamma_q_p: bool,
    pub matches_gamma_q_o: bool,
    pub saturated: SaturationDoc,
    pub sequence: SequenceDoc,
}

impl CustomQDoc {
    fn new(c: &CustomQLevel, lambda_name: Option<&str>) -> Self {
        Self {
            lambda: GroupDoc::new(c.model.lambda(), lambda_name),
            isotropy: (&c.isotropy).into(),
            matches_gamma_q_p: c.matches_gamma_q_p,
            matches_gamma_q_o: c.matches_gamma_q_o,
            saturated: (&c.saturation).into(),
            sequence: (&c.sequence).into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisDoc {
    pub gamma: GroupDoc,
    pub b: GroupDoc,
    pub delta: GroupDoc,
    pub proper: bool,
    pub centerless: bool,
    pub gamma_p_o: IsotropyDoc,
    pub gamma_q_o: IsotropyDoc,
    pub gamma_q_p: IsotropyDoc,
    pub gamma_q_p_formula: IsotropyDoc,
    pub canonical_compatible: bool,
    pub routes_agree: bool,
    pub equal_as_subquotients: bool,
    pub p_in_o: LevelDoc,
    pub q_in_o: LevelDoc,
    pub q_in_p: LevelDoc,
    pub custom_q: Option<CustomQDoc>,
    pub warnings: Vec<String>,
}

/// Names for the groups of a chain, where the user gave them.
#[derive(Debug, Clone, Copy, Default)]
pub struct ChainNames<'a> {
    pub gamma: Option<&'a str>,
    pub b: Option<&'a str>,
    pub delta: Option<&'a str>,
    pub lambda: Option<&'a str>,
}

impl AnalysisDoc {
    pub fn new(r: &InheritanceReport, names: ChainNames<'_>) -> Self {
        Self {
            gamma: GroupDoc::new(r.chain.gamma(), names.gamma),
            b: GroupDoc::new(r.chain.b(), names.b),
            delta: GroupDoc::new(r.chain.delta(), names.delta),
            proper: r.properness.is_proper(),
            centerless: r.centerless,
            gamma_p_o: (&r.gamma_p_o).into(),
            gamma_q_o: (&r.gamma_q_o).into(),
            gamma_q_p: (&r.gamma_q_p_route1).into(),
            gamma_q_p_formula: (&r.gamma_q_p_route2).into(),
            canonical_compatible: r.canonical_compatible,
            routes_agree: r.routes_agree,
            equal_as_subquotients: r.equal_as_subquotients,
            p_in_o: LevelDoc {
                saturated: (&r.p_saturated_in_o).into(),
                sequence: (&r.p_sequence_in_o).into(),
                full: r.p_full_in_o,
            },
            q_in_o: LevelDoc {
                saturated: (&r.q_saturated_in_o).into(),
                sequence: (&r.q_sequence_in_o).into(),
                full: r.q_full_in_o,
            },
            q_in_p: LevelDoc {
                saturated: (&r.q_saturated_in_p).into(),
                sequence: (&r.q_sequence_in_p).into(),
                full: r.q_full_in_p,
            },
            custom_q: r.custom_q.as_ref().map(|c| CustomQDoc::new(c, names.lambda)),
            warnings: r.warnings.clone(),
        }
    }

    pub fn is_unsaturated(&self) -> bool {
        !(self.p_in_o.saturated.saturated && self.q_in_o.saturated.saturated && self.q_in_p.saturated.saturated)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummaryDoc {
    pub total_chains: usize,
    pub incompatible: usize,
    pub p_not_saturated: usize,
    pub p_not_split: usize,
    pub route_mismatches: usize,
}

impl From<&SweepSummary> for SummaryDoc {
    fn from(s: &SweepSummary) -> Self {
        Self {
            total_chains: s.total_chains,
            incompatible: s.incompatible,
            p_not_saturated: s.p_not_saturated,
            p_not_split: s.p_not_split,
            route_mismatches: s.route_mismatches,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweptChainDoc {
    pub class_size: usize,
    pub report: AnalysisDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepDoc {
    pub group: GroupDoc,
    pub only_incompatible: bool,
    pub only_unsaturated: bool,
    /// Over every chain class, before filtering.
    pub summary: SummaryDoc,
    pub chains: Vec<SweptChainDoc>,
    pub warnings: Vec<String>,
}

impl SweepDoc {
    pub fn new(s: &SweepResult, only_incompatible: bool, only_unsaturated: bool) -> Self {
        let chains = s
            .chains
            .iter()
            .map(|c| SweptChainDoc {
                class_size: c.class_size,
                report: AnalysisDoc::new(&c.report, ChainNames::default()),
            })
            .filter(|c| !only_incompatible || !c.report.canonical_compatible)
            .filter(|c| !only_unsaturated || c.report.is_unsaturated())
            .collect();
        Self {
            group: GroupDoc::new(&s.group, Some(&s.group_name)),
            only_incompatible,
            only_unsaturated,
            summary: (&s.summary).into(),
            chains,
            warnings: s.warnings.clone(),
        }
    }
}

fn group_line(g: &GroupDoc) -> String {
    let gens = if g.generators.is_empty() {
        "()".to_string()
    } else {
        g.generators.join(", ")
    };
    match &g.name {
        Some(name) => format!("{name} (order {}, generated by {gens})", g.order),
        None => format!("order {}, generated by {gens}", g.order),
    }
}

fn iso(g: &IsotropyDoc) -> String {
    format!("{} (order {})", g.label, g.order)
}

fn saturation_text(s: &SaturationDoc) -> String {
    match &s.witness {
        None => "yes".into(),
        Some(w) => format!("no, γ = {} on S = {{{}}}", w.gamma, w.support.join(", ")),
    }
}

fn sequence_text(s: &SequenceDoc) -> String {
    let split = if s.split { "splits" } else { "does not split" };
    format!("|Λ| = {}, |Ω| = {}, {split}", s.lambda_order, s.omega_order)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn analysis_text(a: &AnalysisDoc, out: &mut String) {
    let _ = writeln!(out, "Γ  {}", group_line(&a.gamma));
    let _ = writeln!(out, "B  {}", group_line(&a.b));
    let _ = writeln!(out, "Δ  {}", group_line(&a.delta));
    let _ = writeln!(out, "Γ_P^O  {}", iso(&a.gamma_p_o));
    let _ = writeln!(out, "Γ_Q^O  {}", iso(&a.gamma_q_o));
    let _ = writeln!(out, "Γ_Q^P  {}", iso(&a.gamma_q_p));
    if a.gamma_q_p_formula != a.gamma_q_p {
        let _ = writeln!(out, "Γ_Q^P by formula  {}", iso(&a.gamma_q_p_formula));
    }
    let _ = writeln!(out, "canonical_compatible  {}", a.canonical_compatible);
    let _ = writeln!(out, "routes_agree  {}", a.routes_agree);
    let _ = writeln!(out, "equal_as_subquotients  {}", a.equal_as_subquotients);
    for (name, level) in [("P in O", &a.p_in_o), ("Q in O", &a.q_in_o), ("Q in P", &a.q_in_p)] {
        let _ = writeln!(
            out,
            "{name}: saturated {}; {}; full {}",
            saturation_text(&level.saturated),
            sequence_text(&level.sequence),
            yes_no(level.full)
        );
    }
    if let Some(c) = &a.custom_q {
        let _ = writeln!(out, "Q with Λ = {}", group_line(&c.lambda));
        let _ = writeln!(out, "  isotropy  {}", iso(&c.isotropy));
        let _ = writeln!(out, "  matches Γ_Q^P  {}", c.matches_gamma_q_p);
        let _ = writeln!(out, "  matches Γ_Q^O  {}", c.matches_gamma_q_o);
        let _ = writeln!(
            out,
            "  saturated {}; {}",
            saturation_text(&c.saturated),
            sequence_text(&c.sequence)
        );
    }
}

pub fn sweep_text(s: &SweepDoc, out: &mut String) {
    let _ = writeln!(out, "sweep of {}", group_line(&s.group));
    let m = &s.summary;
    let _ = writeln!(
        out,
        "{} chain classes: {} incompatible, {} with P not saturated, {} with P not split, {} route mismatches",
        m.total_chains, m.incompatible, m.p_not_saturated, m.p_not_split, m.route_mismatches
    );
    for (i, c) in s.chains.iter().enumerate() {
        let r = &c.report;
        let _ = writeln!(
            out,
            "[{}] |B| = {}, |Δ| = {}, {} conjugate chains: Γ_P^O {}, Γ_Q^O {}, Γ_Q^P {}, compatible {}, P saturated {}, P split {}",
            i + 1,
            r.b.order,
            r.delta.order,
            c.class_size,
            r.gamma_p_o.label,
            r.gamma_q_o.label,
            r.gamma_q_p.label,
            yes_no(r.canonical_compatible),
            yes_no(r.p_in_o.saturated.saturated),
            yes_no(r.p_in_o.sequence.split),
        );
        let _ = writeln!(out, "    B = {}", r.b.generators.join(", "));
        let _ = writeln!(out, "    Δ = {}", r.delta.generators.join(", "));
    }
}
