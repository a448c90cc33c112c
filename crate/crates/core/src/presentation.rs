//! Generators and binomial relations for the monoid algebra `ℂ(q)[Ψ]`, with
//! bounded-degree soundness and completeness checks.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Limits;
use crate::monoid::{
    hilbert_basis_with, minimal_sequences_a_with, norm_coefficient, special_coefficient,
    special_indices, type_a_modulus, GeneratorClass, PsiElement, PsiTester,
};
use crate::root_system::{cartan_data, Family, LieType, Weight};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidGenerator {
    pub name: String,
    pub weight: PsiElement,
    /// Type A only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<GeneratorClass>,
}

pub type Monomial = BTreeMap<String, u64>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BinomialRelation {
    pub lhs: Monomial,
    pub rhs: Monomial,
}

impl BinomialRelation {
    pub fn new<'a>(
        lhs: impl IntoIterator<Item = (&'a str, u64)>,
        rhs: impl IntoIterator<Item = (&'a str, u64)>,
    ) -> Self {
        let collect = |it: &mut dyn Iterator<Item = (&'a str, u64)>| {
            let mut m = Monomial::new();
            for (name, e) in it {
                if e > 0 {
                    *m.entry(name.to_string()).or_insert(0) += e;
                }
            }
            m
        };
        BinomialRelation {
            lhs: collect(&mut lhs.into_iter()),
            rhs: collect(&mut rhs.into_iter()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub lie_type: LieType,
    pub generators: Vec<MonoidGenerator>,
    pub relations: Vec<BinomialRelation>,
    pub is_polynomial: bool,
}

impl Presentation {
    pub fn generator(&self, name: &str) -> Option<&MonoidGenerator> {
        self.generators.iter().find(|g| g.name == name)
    }

    fn index_of(&self) -> HashMap<&str, usize> {
        self.generators.iter().enumerate().map(|(i, g)| (g.name.as_str(), i)).collect()
    }

    /// `x_1^3 x_2`, factors in generator order.
    pub fn format_monomial(&self, m: &Monomial) -> String {
        let mut parts: Vec<String> = Vec::new();
        for g in &self.generators {
            match m.get(&g.name) {
                Some(0) | None => {}
                Some(1) => parts.push(g.name.clone()),
                Some(e) => parts.push(format!("{}^{}", g.name, e)),
            }
        }
        for (name, e) in m {
            if self.generator(name).is_none() && *e > 0 {
                parts.push(format!("{name}^{e}"));
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }

    pub fn format_relation(&self, r: &BinomialRelation) -> String {
        format!("{} = {}", self.format_monomial(&r.lhs), self.format_monomial(&r.rhs))
    }

    fn exponent_vector(&self, index: &HashMap<&str, usize>, m: &Monomial) -> Option<Vec<u32>> {
        let mut v = vec![0u32; self.generators.len()];
        for (name, &e) in m {
            v[*index.get(name.as_str())?] += u32::try_from(e).ok()?;
        }
        Some(v)
    }

    fn monomial_from_vector(&self, v: &[u32]) -> Monomial {
        v.iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (self.generators[i].name.clone(), e as u64))
            .collect()
    }

    fn evaluate(&self, v: &[u32]) -> Weight {
        let mut w = Weight::zero(self.lie_type.rank());
        for (g, &e) in self.generators.iter().zip(v) {
            if e > 0 {
                w = w.add(&g.weight.weight.scale(e as i64));
            }
        }
        w
    }
}

/// Types whose center is a polynomial algebra.
pub fn classify_polynomial(t: LieType) -> bool {
    match t.family() {
        Family::A => t.rank() == 1,
        Family::B | Family::C => true,
        Family::D => t.rank() % 2 == 0,
        Family::E => t.rank() != 6,
        Family::F | Family::G => true,
    }
}

pub fn build_presentation(t: LieType) -> Result<Presentation> {
    build_presentation_with(t, &Limits::default())
}

pub fn build_presentation_with(t: LieType, limits: &Limits) -> Result<Presentation> {
    if t.family() == Family::A && t.rank() >= 2 {
        return type_a_presentation(t, limits);
    }
    let n = t.rank();
    let lam = |i: usize| Weight::fundamental(n, i);
    let (listed, relations): (Vec<Weight>, Vec<BinomialRelation>) = if classify_polynomial(t) {
        ((1..=n).map(lam).collect(), vec![])
    } else if t.family() == Family::D {
        let mut gens: Vec<Weight> = (1..=n - 2).map(lam).collect();
        gens.push(lam(n - 1).scale(2));
        gens.push(lam(n).scale(2));
        gens.push(lam(n - 1).add(&lam(n)));
        let (a, b, c) = (format!("t_{}", n - 1), format!("t_{n}"), format!("t_{}", n + 1));
        (gens, vec![BinomialRelation::new([(a.as_str(), 1), (b.as_str(), 1)], [(c.as_str(), 2)])])
    } else {
        e6_listing()
    };
    let basis = hilbert_basis_with(t, limits)?;
    let mut computed: Vec<Weight> = basis.weights();
    let mut expected = listed.clone();
    computed.sort();
    expected.sort();
    if computed != expected {
        return Err(Error::Inconsistent(format!(
            "computed minimal generating set of {t} differs from the listed generators"
        )));
    }
    let data = cartan_data(t);
    let generators = listed
        .into_iter()
        .enumerate()
        .map(|(j, w)| MonoidGenerator {
            name: format!("t_{}", j + 1),
            weight: PsiElement { square_length: data.inner(&w, &w), weight: w },
            class: None,
        })
        .collect();
    Ok(Presentation { lie_type: t, generators, relations, is_polynomial: classify_polynomial(t) })
}

fn e6_listing() -> (Vec<Weight>, Vec<BinomialRelation>) {
    let lam = |i: usize| Weight::fundamental(6, i);
    let gens = vec![
        lam(1).scale(3),
        lam(2),
        lam(3).scale(3),
        lam(4),
        lam(5).scale(3),
        lam(6).scale(3),
        lam(1).add(&lam(3)),
        lam(1).add(&lam(6)),
        lam(3).add(&lam(5)),
        lam(5).add(&lam(6)),
        lam(1).add(&lam(5).scale(2)),
        lam(1).scale(2).add(&lam(5)),
        lam(3).add(&lam(6).scale(2)),
        lam(3).scale(2).add(&lam(6)),
    ];
    let r = |l: &[(&str, u64)], rr: &[(&str, u64)]| {
        BinomialRelation::new(l.iter().copied(), rr.iter().copied())
    };
    let rels = vec![
        r(&[("t_1", 1), ("t_3", 1)], &[("t_7", 3)]),
        r(&[("t_1", 1), ("t_6", 1)], &[("t_8", 3)]),
        r(&[("t_3", 1), ("t_5", 1)], &[("t_9", 3)]),
        r(&[("t_8", 1), ("t_9", 1)], &[("t_7", 1), ("t_10", 1)]),
        r(&[("t_7", 1), ("t_9", 2)], &[("t_3", 1), ("t_11", 1)]),
        r(&[("t_7", 2), ("t_9", 1)], &[("t_3", 1), ("t_12", 1)]),
        r(&[("t_7", 1), ("t_8", 2)], &[("t_1", 1), ("t_13", 1)]),
        r(&[("t_7", 2), ("t_8", 1)], &[("t_1", 1), ("t_14", 1)]),
    ];
    (gens, rels)
}

fn type_a_presentation(t: LieType, limits: &Limits) -> Result<Presentation> {
    let n = t.rank();
    let r = type_a_modulus(n);
    let data = cartan_data(t);
    let seqs = minimal_sequences_a_with(n, limits)?;
    let mut generators = Vec::with_capacity(seqs.len());
    let mut ordinary = Vec::new();
    for (seq, class) in &seqs {
        let name = match class {
            GeneratorClass::Single { index, .. } => format!("x_{index}"),
            GeneratorClass::Special { index, .. } => format!("y_{index}"),
            GeneratorClass::Ordinary => {
                ordinary.push(seq.clone());
                format!("w_{}", ordinary.len())
            }
        };
        let w = seq.to_weight();
        generators.push(MonoidGenerator {
            name,
            weight: PsiElement { square_length: data.inner(&w, &w), weight: w },
            class: Some(*class),
        });
    }
    let mut relations = Vec::new();
    for k in special_indices(n) {
        let d = special_coefficient(n, k)?;
        let g = r.gcd(&(k as u64));
        let (x1, xk, yk) = ("x_1".to_string(), format!("x_{k}"), format!("y_{k}"));
        relations.push(BinomialRelation::new(
            [(x1.as_str(), d / g), (xk.as_str(), 1)],
            [(yk.as_str(), r / g)],
        ));
    }
    for (j, seq) in ordinary.iter().enumerate() {
        let norm = norm_coefficient(n, seq)?;
        let wj = format!("w_{}", j + 1);
        let ys: Vec<(String, u64)> = special_indices(n)
            .into_iter()
            .map(|k| (format!("y_{k}"), seq.0[k - 1]))
            .collect();
        relations.push(BinomialRelation::new(
            [("x_1", norm), (wj.as_str(), 1)],
            ys.iter().map(|(s, e)| (s.as_str(), *e)),
        ));
    }
    Ok(Presentation { lie_type: t, generators, relations, is_polynomial: false })
}

/// Every relation names known generators, has distinct sides, and both sides
/// evaluate to the same weight.
pub fn verify_soundness(p: &Presentation) -> bool {
    let index = p.index_of();
    p.relations.iter().all(|rel| {
        match (p.exponent_vector(&index, &rel.lhs), p.exponent_vector(&index, &rel.rhs)) {
            (Some(l), Some(r)) => l != r && p.evaluate(&l) == p.evaluate(&r),
            _ => false,
        }
    })
}

/// How monomial degree is measured for the completeness bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DegreeKind {
    /// `|t| = Σ i·t_i`.
    Weighted,
    CoefficientSum,
}

impl DegreeKind {
    pub fn for_type(t: LieType) -> Self {
        if t.family() == Family::A && t.rank() >= 2 {
            DegreeKind::Weighted
        } else {
            DegreeKind::CoefficientSum
        }
    }

    pub fn degree(self, w: &Weight) -> u64 {
        match self {
            DegreeKind::Weighted => {
                w.0.iter().enumerate().map(|(i, &c)| (i as u64 + 1) * c.max(0) as u64).sum()
            }
            DegreeKind::CoefficientSum => w.0.iter().map(|&c| c.max(0) as u64).sum(),
        }
    }
}

/// `4r` for type A_n (weighted degree), coefficient sum 8 otherwise.
pub fn default_completeness_bound(t: LieType) -> u64 {
    match DegreeKind::for_type(t) {
        DegreeKind::Weighted => 4 * type_a_modulus(t.rank()),
        DegreeKind::CoefficientSum => 8,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertRow {
    pub degree: u64,
    /// Elements of `Ψ` of this degree, by direct enumeration.
    pub psi_elements: u64,
    /// Congruence classes of generator monomials of this degree.
    pub classes: u64,
}

/// A weight whose factorizations fall into several classes; one
/// representative monomial per class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompletenessWitness {
    pub weight: Weight,
    pub degree: u64,
    pub representatives: Vec<Monomial>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompletenessReport {
    pub bound: u64,
    pub degree_kind: DegreeKind,
    pub monomials: u64,
    pub fibers: u64,
    /// Fibers with more than one congruence class.
    pub disconnected_fibers: u64,
    pub complete: bool,
    pub witness: Option<CompletenessWitness>,
    pub hilbert_function: Vec<HilbertRow>,
    pub hilbert_agreement: bool,
}

pub fn verify_completeness(p: &Presentation, degree_bound: u64) -> Result<bool> {
    Ok(completeness_report(p, degree_bound, &Limits::default())?.complete)
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }
}

/// Enumerates generator monomials up to the degree bound, groups them by
/// weight and joins factorizations that differ by one relation rewrite. The
/// relations generate the congruence up to the bound iff every fiber is a
/// single class.
pub fn completeness_report(p: &Presentation, bound: u64, limits: &Limits) -> Result<CompletenessReport> {
    let kind = DegreeKind::for_type(p.lie_type);
    let index = p.index_of();
    let mut rels: Vec<(Vec<u32>, Vec<u32>)> = Vec::new();
    for rel in &p.relations {
        match (p.exponent_vector(&index, &rel.lhs), p.exponent_vector(&index, &rel.rhs)) {
            (Some(l), Some(r)) => rels.push((l, r)),
            _ => {
                return Err(Error::Inconsistent(format!(
                    "relation {} names an unknown generator",
                    p.format_relation(rel)
                )))
            }
        }
    }
    let gen_deg: Vec<u64> = p.generators.iter().map(|g| kind.degree(&g.weight.weight)).collect();
    if gen_deg.contains(&0) {
        return Err(Error::Inconsistent("generator of degree zero".into()));
    }

    let monomials = enumerate_monomials(&gen_deg, bound, limits)?;
    let weights = limits.execution.map(&monomials, |m| p.evaluate(m));
    let mut fibers: HashMap<Weight, Vec<Vec<u32>>> = HashMap::new();
    for (m, w) in monomials.iter().zip(weights) {
        fibers.entry(w).or_default().push(m.clone());
    }
    let mut fibers: Vec<(Weight, Vec<Vec<u32>>)> = fibers.into_iter().collect();
    fibers.sort_by(|a, b| (kind.degree(&a.0), &a.0).cmp(&(kind.degree(&b.0), &b.0)));

    let classes = limits.execution.map(&fibers, |(_, ms)| fiber_classes(ms, &rels));

    let mut by_degree: BTreeMap<u64, (u64, u64)> = BTreeMap::new();
    let mut witness = None;
    let mut disconnected = 0u64;
    for ((w, _), comps) in fibers.iter().zip(&classes) {
        let d = kind.degree(w);
        by_degree.entry(d).or_default().1 += comps.len() as u64;
        if comps.len() > 1 {
            disconnected += 1;
            if witness.is_none() {
                witness = Some(CompletenessWitness {
                    weight: w.clone(),
                    degree: d,
                    representatives: comps.iter().map(|m| p.monomial_from_vector(m)).collect(),
                });
            }
        }
    }
    for w in enumerate_psi_by_degree(p.lie_type, kind, bound, limits)? {
        by_degree.entry(kind.degree(&w)).or_default().0 += 1;
    }
    let hilbert_function: Vec<HilbertRow> = by_degree
        .into_iter()
        .map(|(degree, (psi_elements, classes))| HilbertRow { degree, psi_elements, classes })
        .collect();
    let hilbert_agreement = hilbert_function.iter().all(|r| r.psi_elements == r.classes);
    Ok(CompletenessReport {
        bound,
        degree_kind: kind,
        monomials: monomials.len() as u64,
        fibers: fibers.len() as u64,
        disconnected_fibers: disconnected,
        complete: disconnected == 0,
        witness,
        hilbert_function,
        hilbert_agreement,
    })
}

/// All exponent vectors with `Σ e_i·deg_i ≤ bound`, including the empty one.
fn enumerate_monomials(deg: &[u64], bound: u64, limits: &Limits) -> Result<Vec<Vec<u32>>> {
    fn go(
        deg: &[u64],
        pos: usize,
        left: u64,
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
        cap: usize,
    ) -> Result<()> {
        if pos == deg.len() {
            if out.len() >= cap {
                return Err(Error::BudgetExceeded {
                    what: "generator monomials",
                    needed: cap as u128 + 1,
                    limit: cap as u128,
                    hint: Some("lower --degree-bound or raise --budget".into()),
                });
            }
            out.push(cur.clone());
            return Ok(());
        }
        let mut e = 0u64;
        while e * deg[pos] <= left {
            cur[pos] = e as u32;
            go(deg, pos + 1, left - e * deg[pos], cur, out, cap)?;
            e += 1;
        }
        cur[pos] = 0;
        Ok(())
    }
    let mut out = Vec::new();
    go(deg, 0, bound, &mut vec![0; deg.len()], &mut out, limits.monomials)?;
    Ok(out)
}

/// Smallest member of each congruence class in one fiber, sorted.
fn fiber_classes(ms: &[Vec<u32>], rels: &[(Vec<u32>, Vec<u32>)]) -> Vec<Vec<u32>> {
    if ms.len() == 1 {
        return vec![ms[0].clone()];
    }
    let pos: HashMap<&[u32], usize> = ms.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect();
    let mut dsu = Dsu((0..ms.len()).collect());
    let mut next = vec![0u32; ms[0].len()];
    for (i, m) in ms.iter().enumerate() {
        for (l, r) in rels {
            for (from, to) in [(l, r), (r, l)] {
                if from.iter().zip(m).all(|(a, b)| a <= b) {
                    for k in 0..m.len() {
                        next[k] = m[k] - from[k] + to[k];
                    }
                    if let Some(&j) = pos.get(next.as_slice()) {
                        dsu.union(i, j);
                    }
                }
            }
        }
    }
    let mut reps: BTreeMap<usize, &Vec<u32>> = BTreeMap::new();
    for (i, m) in ms.iter().enumerate() {
        let root = dsu.find(i);
        let e = reps.entry(root).or_insert(m);
        if m < *e {
            *e = m;
        }
    }
    let mut out: Vec<Vec<u32>> = reps.into_values().cloned().collect();
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// Elements of `Ψ` of degree at most `bound`, by direct enumeration of
/// dominant weights.
fn enumerate_psi_by_degree(t: LieType, kind: DegreeKind, bound: u64, limits: &Limits) -> Result<Vec<Weight>> {
    let n = t.rank();
    let step: Vec<u64> = match kind {
        DegreeKind::Weighted => (1..=n as u64).collect(),
        DegreeKind::CoefficientSum => vec![1; n],
    };
    let mut all = Vec::new();
    let mut cur = vec![0i64; n];
    fn go(step: &[u64], pos: usize, left: u64, cur: &mut Vec<i64>, out: &mut Vec<Weight>, cap: usize) -> Result<()> {
        if pos == step.len() {
            if out.len() >= cap {
                return Err(Error::BudgetExceeded {
                    what: "dominant weight enumeration",
                    needed: cap as u128 + 1,
                    limit: cap as u128,
                    hint: None,
                });
            }
            out.push(Weight(cur.clone()));
            return Ok(());
        }
        let mut e = 0u64;
        while e * step[pos] <= left {
            cur[pos] = e as i64;
            go(step, pos + 1, left - e * step[pos], cur, out, cap)?;
            e += 1;
        }
        cur[pos] = 0;
        Ok(())
    }
    go(&step, 0, bound, &mut cur, &mut all, limits.monomials)?;
    let tester = PsiTester::new(t);
    Ok(limits
        .execution
        .map(&all, |w| tester.contains(w).then(|| w.clone()))
        .into_iter()
        .flatten()
        .collect())
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.generators {
            writeln!(f, "{} = {}", g.name, g.weight.weight)?;
        }
        for r in &self.relations {
            writeln!(f, "{}", self.format_relation(r))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> LieType {
        s.parse().unwrap()
    }

    fn rel_strings(p: &Presentation) -> Vec<String> {
        p.relations.iter().map(|r| p.format_relation(r)).collect()
    }

    #[test]
    fn a2_presentation() {
        let p = build_presentation(ty("A2")).unwrap();
        let names: Vec<&str> = p.generators.iter().map(|g| g.name.as_str()).collect();
        assert_eq!(names, ["x_1", "x_2", "y_2"]);
        assert_eq!(rel_strings(&p), ["x_1 x_2 = y_2^3"]);
        assert!(verify_soundness(&p));
        assert!(verify_completeness(&p, 18).unwrap());
    }

    #[test]
    fn a2_without_relation_is_incomplete() {
        let mut p = build_presentation(ty("A2")).unwrap();
        p.relations.clear();
        let rep = completeness_report(&p, 12, &Limits::default()).unwrap();
        assert!(!rep.complete);
        let w = rep.witness.unwrap();
        assert_eq!(w.weight, Weight(vec![3, 3]));
        assert_eq!(w.representatives.len(), 2);
        assert!(!rep.hilbert_agreement);
    }

    #[test]
    fn a3_presentation() {
        let p = build_presentation(ty("A3")).unwrap();
        assert_eq!(p.generators.len(), 4);
        assert_eq!(rel_strings(&p), ["x_1 x_3 = y_3^2"]);
        assert!(verify_completeness(&p, default_completeness_bound(p.lie_type)).unwrap());
    }

    #[test]
    fn a4_relations() {
        let p = build_presentation(ty("A4")).unwrap();
        assert_eq!(p.generators.len(), 14);
        assert_eq!(p.relations.len(), 10);
        let rels = rel_strings(&p);
        assert!(rels.contains(&"x_1^3 x_2 = y_2^5".to_string()));
        assert!(rels.contains(&"x_1^2 x_3 = y_3^5".to_string()));
        assert!(verify_soundness(&p));
    }

    #[test]
    fn d_odd_and_polynomial() {
        let p = build_presentation(ty("D7")).unwrap();
        assert_eq!(p.generators.len(), 8);
        assert_eq!(rel_strings(&p), ["t_6 t_7 = t_8^2"]);
        assert!(verify_completeness(&p, 8).unwrap());
        let b3 = build_presentation(ty("B3")).unwrap();
        assert!(b3.is_polynomial && b3.relations.is_empty() && b3.generators.len() == 3);
        let c3 = build_presentation(ty("C3")).unwrap();
        assert!(verify_completeness(&c3, 6).unwrap());
    }

    #[test]
    fn e6_listing_is_sound() {
        let p = build_presentation(ty("E6")).unwrap();
        assert_eq!((p.generators.len(), p.relations.len()), (14, 8));
        assert!(verify_soundness(&p));
    }

    #[test]
    fn corrupted_relation_is_unsound() {
        let mut p = build_presentation(ty("E6")).unwrap();
        *p.relations[3].lhs.get_mut("t_8").unwrap() += 1;
        assert!(!verify_soundness(&p));
        let mut q = build_presentation(ty("A2")).unwrap();
        q.relations[0].rhs = q.relations[0].lhs.clone();
        assert!(!verify_soundness(&q));
    }

    #[test]
    fn polynomial_classification() {
        for (s, expect) in [("D6", true), ("D5", false), ("E6", false), ("E7", true), ("A1", true), ("A2", false)] {
            assert_eq!(classify_polynomial(ty(s)), expect, "{s}");
        }
    }
}
