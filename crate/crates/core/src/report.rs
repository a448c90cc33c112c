//! Serializable reports behind every CLI verb. All of them carry
//! `"schema": "qcenter/1"`; rationals are `"p/q"` strings.

use serde::{Deserialize, Serialize};

use crate::characters::CharacterEngine;
use crate::error::{Error, Result};
use crate::exec::Limits;
use crate::lattice::{
    alpha_diamond, case_lattice, classify_lattice_case, even_weight_lattice, root_lattice,
    verify_lattice_case, weight_lattice, LatticeCase,
};
use crate::monoid::{
    classify_sequence, hilbert_basis_with, minimal_sequences_a_with, NSequence, PsiElement,
};
use crate::presentation::{
    build_presentation_with, completeness_report, default_completeness_bound, verify_soundness,
    BinomialRelation, CompletenessReport, DegreeKind,
};
use crate::rational::serde_pq;
use crate::root_system::{cartan_data, cartan_determinant, positive_root_count, Family, LieType, Weight};
use crate::weyl::{orbit, weyl_group_order};
use crate::Rational;

fn small_dimension(e: &CharacterEngine, w: &Weight) -> Result<u64> {
    u64::try_from(e.dimension(w)?).map_err(|_| Error::Overflow("module dimension"))
}

pub const SCHEMA: &str = "qcenter/1";

/// Report body wrapped with the schema tag and the verb that produced it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Envelope<T> {
    pub schema: String,
    pub command: String,
    #[serde(flatten)]
    pub body: T,
}

impl<T> Envelope<T> {
    pub fn new(command: &str, body: T) -> Self {
        Envelope { schema: SCHEMA.to_string(), command: command.to_string(), body }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    #[serde(rename = "type")]
    pub lie_type: LieType,
    pub rank: usize,
    pub polynomial: bool,
    pub case: LatticeCase,
    pub psi_min_size: usize,
    pub relation_count: usize,
    pub cartan_determinant: i64,
    pub weyl_group_order: u64,
    pub positive_roots: usize,
}

pub fn classify_report(t: LieType, limits: &Limits) -> Result<ClassifyReport> {
    let p = build_presentation_with(t, limits)?;
    Ok(ClassifyReport {
        lie_type: t,
        rank: t.rank(),
        polynomial: p.is_polynomial,
        case: classify_lattice_case(t),
        psi_min_size: p.generators.len(),
        relation_count: p.relations.len(),
        cartan_determinant: cartan_determinant(t),
        weyl_group_order: weyl_group_order(t),
        positive_roots: positive_root_count(t),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeReport {
    #[serde(rename = "type")]
    pub lie_type: LieType,
    pub rank: usize,
    pub case: LatticeCase,
    pub root_lattice: Vec<Vec<i64>>,
    pub weight_lattice: Vec<Vec<i64>>,
    pub even_weight_lattice: Vec<Vec<i64>>,
    pub case_lattice: Vec<Vec<i64>>,
    /// `[Λ : Q]`.
    pub index: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha_diamond: Option<Weight>,
    pub verified: bool,
}

pub fn lattice_report(t: LieType) -> Result<LatticeReport> {
    let case = classify_lattice_case(t);
    let q = root_lattice(t);
    let diamond = match case {
        LatticeCase::TwoQPlusDiamond => Some(alpha_diamond(t)?),
        _ => None,
    };
    Ok(LatticeReport {
        lie_type: t,
        rank: t.rank(),
        case,
        root_lattice: q.hnf_basis().to_vec(),
        weight_lattice: weight_lattice(t).hnf_basis().to_vec(),
        even_weight_lattice: even_weight_lattice(t).hnf_basis().to_vec(),
        case_lattice: case_lattice(t, case)?.hnf_basis().to_vec(),
        index: q.determinant(),
        alpha_diamond: diamond,
        verified: verify_lattice_case(t)?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisEntry {
    pub weight: Weight,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<String>,
    #[serde(with = "serde_pq")]
    pub square_length: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BasisMethod {
    BoxSearch,
    NSequences,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertBasisReport {
    #[serde(rename = "type")]
    pub lie_type: LieType,
    pub rank: usize,
    pub method: BasisMethod,
    pub box_bounds: Vec<u64>,
    pub count: usize,
    pub elements: Vec<BasisEntry>,
}

/// Box search when it fits the budget; type A falls back to the n-sequence
/// enumeration (ordered the same way) when the box is too large.
pub fn hilbert_basis_report(t: LieType, limits: &Limits) -> Result<HilbertBasisReport> {
    let type_a = t.family() == Family::A && t.rank() >= 2;
    let class_of = |w: &Weight| -> Result<Option<String>> {
        if !type_a {
            return Ok(None);
        }
        let seq = NSequence::from_weight(w).expect("basis weights are dominant");
        Ok(Some(classify_sequence(t.rank(), &seq)?.tag().to_string()))
    };
    let (method, bounds, elements): (BasisMethod, Vec<u64>, Vec<PsiElement>) = match hilbert_basis_with(t, limits) {
        Ok(b) => (BasisMethod::BoxSearch, b.box_bounds, b.elements),
        Err(Error::BudgetExceeded { .. }) if type_a => {
            let data = cartan_data(t);
            let mut elements: Vec<PsiElement> = minimal_sequences_a_with(t.rank(), limits)?
                .into_iter()
                .map(|(s, _)| {
                    let w = s.to_weight();
                    PsiElement { square_length: data.inner(&w, &w), weight: w }
                })
                .collect();
            elements.sort_by(|a, b| {
                b.square_length.cmp(&a.square_length).then_with(|| b.weight.cmp(&a.weight))
            });
            let bounds = (1..=t.rank())
                .map(|i| crate::monoid::minimal_single_multiplier(t, i))
                .collect::<Result<_>>()?;
            (BasisMethod::NSequences, bounds, elements)
        }
        Err(e) => return Err(e),
    };
    let elements = elements
        .into_iter()
        .map(|e| {
            Ok(BasisEntry { class: class_of(&e.weight)?, weight: e.weight, square_length: e.square_length })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HilbertBasisReport {
        lie_type: t,
        rank: t.rank(),
        method,
        box_bounds: bounds,
        count: elements.len(),
        elements,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorEntry {
    pub name: String,
    pub weight: Weight,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationReport {
    #[serde(rename = "type")]
    pub lie_type: LieType,
    pub rank: usize,
    pub polynomial: bool,
    pub generators: Vec<GeneratorEntry>,
    pub relations: Vec<BinomialRelation>,
    /// Relations as `lhs = rhs`, factors in generator order.
    pub relation_text: Vec<String>,
    pub sound: bool,
    pub completeness_bound: u64,
    pub degree_kind: DegreeKind,
    /// Absent when the bounded check exceeded the budget.
    pub completeness: Option<CompletenessReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

pub fn presentation_report(t: LieType, bound: Option<u64>, limits: &Limits) -> Result<PresentationReport> {
    let p = build_presentation_with(t, limits)?;
    let bound = bound.unwrap_or_else(|| default_completeness_bound(t));
    let (completeness, note) = match completeness_report(&p, bound, limits) {
        Ok(r) => (Some(r), None),
        Err(Error::BudgetExceeded { what, needed, limit, .. }) => {
            (None, Some(format!("completeness check skipped: {what} needs more than {limit} (at least {needed})")))
        }
        Err(e) => return Err(e),
    };
    Ok(PresentationReport {
        lie_type: t,
        rank: t.rank(),
        polynomial: p.is_polynomial,
        generators: p
            .generators
            .iter()
            .map(|g| GeneratorEntry {
                name: g.name.clone(),
                weight: g.weight.weight.clone(),
                class: g.class.map(|c| c.tag().to_string()),
            })
            .collect(),
        relation_text: p.relations.iter().map(|r| p.format_relation(r)).collect(),
        relations: p.relations.clone(),
        sound: verify_soundness(&p),
        completeness_bound: bound,
        degree_kind: DegreeKind::for_type(t),
        completeness,
        note,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReport {
    #[serde(rename = "type")]
    pub lie_type: LieType,
    pub weight: Weight,
    pub dominant: Weight,
    pub size: usize,
    pub elements: Vec<Weight>,
}

pub fn orbit_report(t: LieType, w: &Weight, limits: &Limits) -> Result<OrbitReport> {
    let o = orbit(t, w, limits.orbit_size)?;
    Ok(OrbitReport {
        lie_type: t,
        weight: w.clone(),
        dominant: o.dominant_rep().clone(),
        size: o.size(),
        elements: o.sorted(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorComponent {
    pub weight: Weight,
    pub multiplicity: u64,
    pub dimension: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorReport {
    #[serde(rename = "type")]
    pub lie_type: LieType,
    pub left: Weight,
    pub right: Weight,
    pub left_dimension: u64,
    pub right_dimension: u64,
    pub components: Vec<TensorComponent>,
}

pub fn tensor_report(t: LieType, left: &Weight, right: &Weight, limits: &Limits) -> Result<TensorReport> {
    let e = CharacterEngine::new(t, limits.clone())?;
    let r = e.tensor(left, right)?;
    let mut components = Vec::new();
    // highest constituents first
    for (w, c) in r.terms.iter().rev() {
        components.push(TensorComponent {
            weight: w.clone(),
            multiplicity: c.to_integer() as u64,
            dimension: small_dimension(&e, w)?,
        });
    }
    Ok(TensorReport {
        lie_type: t,
        left: left.clone(),
        right: right.clone(),
        left_dimension: small_dimension(&e, left)?,
        right_dimension: small_dimension(&e, right)?,
        components,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterEntry {
    pub weight: Weight,
    pub multiplicity: u64,
    pub orbit_size: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterReport {
    #[serde(rename = "type")]
    pub lie_type: LieType,
    pub highest: Weight,
    pub dimension: u64,
    pub dominant_weights: Vec<CharacterEntry>,
}

pub fn character_report(t: LieType, lambda: &Weight, limits: &Limits) -> Result<CharacterReport> {
    let e = CharacterEngine::new(t, limits.clone())?;
    let ch = e.character(lambda)?;
    let mut dominant_weights = Vec::new();
    for (w, &m) in ch.multiplicities.iter().rev() {
        dominant_weights.push(CharacterEntry { weight: w.clone(), multiplicity: m, orbit_size: e.orbit_size(w)? });
    }
    Ok(CharacterReport { lie_type: t, highest: lambda.clone(), dimension: small_dimension(&e, lambda)?, dominant_weights })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: String,
    pub passed: usize,
    pub failed: usize,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}
