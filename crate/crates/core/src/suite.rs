//! Reproduction suite run by `qcenter verify --suite paper`: the published
//! tables, case lists, generating sets and relation lists, checked against
//! what the library computes.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::appendix::{fundamental_weights_table, simple_roots_table};
use crate::characters::CharacterEngine;
use crate::error::Result;
use crate::exec::Limits;
use crate::lattice::{verify_d_odd_refinement, verify_lattice_case};
use crate::monoid::{
    brute_force_generation_check, default_generation_bound, hilbert_basis_with,
    minimal_sequences_a_with, norm_coefficient, special_coefficient, special_sequence,
    type_a_modulus, GeneratorClass, NSequence, PsiTester,
};
use crate::presentation::{
    build_presentation_with, classify_polynomial, completeness_report,
    default_completeness_bound, verify_soundness, Presentation,
};
use crate::rational::int;
use crate::report::{CheckResult, VerifyReport};
use crate::root_system::{cartan_data, cartan_matrix, fundamental_weight_in_roots, Family, LieType, Weight};
use crate::weyl::{dominance_less_in, weyl_group_order};

fn ty(s: &str) -> LieType {
    s.parse().expect("suite type names are valid")
}

fn w(v: &[i64]) -> Weight {
    Weight(v.to_vec())
}

/// Types covered by the table and lattice checks.
pub fn table_types() -> Vec<LieType> {
    let mut out = Vec::new();
    for (f, lo) in [(Family::A, 1), (Family::B, 2), (Family::C, 2), (Family::D, 4)] {
        for n in lo..=10 {
            out.push(LieType::new(f, n).expect("admissible"));
        }
    }
    out.extend(["E6", "E7", "E8", "F4", "G2"].map(ty));
    out
}

/// A relation with each side reduced to a multiset of generator weights,
/// sides in canonical order.
type WeightRelation = (BTreeMap<Weight, u64>, BTreeMap<Weight, u64>);

fn canonical(a: BTreeMap<Weight, u64>, b: BTreeMap<Weight, u64>) -> WeightRelation {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

fn parse_side(text: &str, names: &HashMap<String, Weight>) -> Option<BTreeMap<Weight, u64>> {
    let mut out = BTreeMap::new();
    for factor in text.split_whitespace() {
        let (name, e) = match factor.split_once('^') {
            Some((n, e)) => (n, e.parse().ok()?),
            None => (factor, 1),
        };
        *out.entry(names.get(name)?.clone()).or_insert(0) += e;
    }
    Some(out)
}

/// Parses `lhs = rhs` lines written with the given names.
pub fn parse_relations(lines: &[&str], names: &HashMap<String, Weight>) -> Option<BTreeSet<WeightRelation>> {
    lines
        .iter()
        .map(|line| {
            let (l, r) = line.split_once('=')?;
            Some(canonical(parse_side(l, names)?, parse_side(r, names)?))
        })
        .collect()
}

pub fn presentation_relations_by_weight(p: &Presentation) -> BTreeSet<WeightRelation> {
    let names: HashMap<&str, &Weight> =
        p.generators.iter().map(|g| (g.name.as_str(), &g.weight.weight)).collect();
    let side = |m: &BTreeMap<String, u64>| {
        m.iter().map(|(n, &e)| (names[n.as_str()].clone(), e)).collect::<BTreeMap<_, _>>()
    };
    p.relations.iter().map(|r| canonical(side(&r.lhs), side(&r.rhs))).collect()
}

fn weight_set(ws: impl IntoIterator<Item = Weight>) -> BTreeSet<Weight> {
    ws.into_iter().collect()
}

/// Listed generating set of `Ψ` for E6.
pub fn e6_generators() -> Vec<Weight> {
    [
        [3, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0],
        [0, 0, 3, 0, 0, 0],
        [0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 3, 0],
        [0, 0, 0, 0, 0, 3],
        [1, 0, 1, 0, 0, 0],
        [1, 0, 0, 0, 0, 1],
        [0, 0, 1, 0, 1, 0],
        [0, 0, 0, 0, 1, 1],
        [1, 0, 0, 0, 2, 0],
        [2, 0, 0, 0, 1, 0],
        [0, 0, 1, 0, 0, 2],
        [0, 0, 2, 0, 0, 1],
    ]
    .iter()
    .map(|v| w(v))
    .collect()
}

pub const E6_RELATIONS: [&str; 8] = [
    "t_1 t_3 = t_7^3",
    "t_1 t_6 = t_8^3",
    "t_3 t_5 = t_9^3",
    "t_8 t_9 = t_7 t_10",
    "t_7 t_9^2 = t_3 t_11",
    "t_7^2 t_9 = t_3 t_12",
    "t_7 t_8^2 = t_1 t_13",
    "t_7^2 t_8 = t_1 t_14",
];

/// Listed generating set of `Ψ` for D_n, n odd.
pub fn d_odd_generators(n: usize) -> Vec<Weight> {
    let lam = |i| Weight::fundamental(n, i);
    let mut out: Vec<Weight> = (1..=n - 2).map(lam).collect();
    out.push(lam(n - 1).scale(2));
    out.push(lam(n).scale(2));
    out.push(lam(n - 1).add(&lam(n)));
    out
}

/// Listed A4 data: generating set, ordinary sequences (in the listed order)
/// and relations written with `x_k`, `y_k`, `w_i`.
pub fn a4_listing() -> (Vec<Weight>, Vec<Weight>, [&'static str; 10]) {
    let basis = [
        [5, 0, 0, 0],
        [0, 5, 0, 0],
        [0, 0, 5, 0],
        [0, 0, 0, 5],
        [3, 1, 0, 0],
        [2, 0, 1, 0],
        [1, 0, 0, 1],
        [0, 1, 1, 0],
        [1, 2, 0, 0],
        [1, 0, 3, 0],
        [0, 1, 0, 2],
        [0, 3, 0, 1],
        [0, 0, 2, 1],
        [0, 0, 1, 3],
    ]
    .iter()
    .map(|v| w(v))
    .collect::<Vec<_>>();
    let ordinary = basis[7..].to_vec();
    let relations = [
        "x_1^3 x_2 = y_2^5",
        "x_1^2 x_3 = y_3^5",
        "x_1 x_4 = y_4^5",
        "x_1 w_1 = y_2 y_3",
        "x_1 w_2 = y_2^2",
        "x_1 w_3 = y_3^3",
        "x_1 w_4 = y_2 y_4^2",
        "x_1^2 w_5 = y_2^3 y_4",
        "x_1 w_6 = y_3^2 y_4",
        "x_1 w_7 = y_3 y_4^3",
    ];
    (basis, ordinary, relations)
}

/// Names for the listed A4 relations: `x_k = 5λ_k`, `y_k` the special
/// sequences, `w_i` the ordinary ones in listed order.
pub fn a4_names() -> HashMap<String, Weight> {
    let (_, ordinary, _) = a4_listing();
    let mut names = HashMap::new();
    for k in 1..=4 {
        names.insert(format!("x_{k}"), Weight::fundamental(4, k).scale(5));
    }
    for k in 2..=4 {
        names.insert(format!("y_{k}"), special_sequence(4, k).expect("k ∉ {1, r}").to_weight());
    }
    for (i, o) in ordinary.into_iter().enumerate() {
        names.insert(format!("w_{}", i + 1), o);
    }
    names
}

struct Suite {
    checks: Vec<CheckResult>,
}

impl Suite {
    fn record(&mut self, name: &str, outcome: Result<(bool, String)>) {
        let (passed, detail) = match outcome {
            Ok(x) => x,
            Err(e) => (false, format!("error: {e}")),
        };
        self.checks.push(CheckResult { name: name.to_string(), passed, detail });
    }
}

pub fn run_paper_suite(limits: &Limits) -> VerifyReport {
    let mut s = Suite { checks: Vec::new() };
    s.record("base change tables", check_tables());
    s.record("even sublattice cases", check_lattices());
    s.record("polynomial types", check_polynomial_types(limits));
    s.record("D odd generating sets", check_d_odd_sets(limits));
    s.record("E6 generating set", check_e6_set(limits));
    s.record("A2 presentation", check_small_a(2, "x_1 x_2 = y_2^3", limits));
    s.record("A3 presentation", check_small_a(3, "x_1 x_3 = y_3^2", limits));
    s.record("A4 presentation", check_a4(limits));
    s.record("D odd relation", check_d_odd_relation(limits));
    s.record("E6 relations", check_e6_relations(limits));
    for t in ["D5", "D7", "E6"] {
        s.record(&format!("{t} bounded completeness"), check_completeness(ty(t), limits));
    }
    s.record("negative controls", check_negative_controls(limits));
    s.record("n-sequence correspondence", check_sequences(limits));
    s.record("character ring", check_characters(limits));
    s.record("generation oracle", check_generation(limits));
    let passed = s.checks.iter().filter(|c| c.passed).count();
    VerifyReport { suite: "paper".into(), passed, failed: s.checks.len() - passed, checks: s.checks }
}

fn check_tables() -> Result<(bool, String)> {
    let mut bad = Vec::new();
    let types = table_types();
    for &t in &types {
        let computed: Vec<_> =
            (1..=t.rank()).map(|i| fundamental_weight_in_roots(t, i).map(|c| c.0)).collect::<Result<_>>()?;
        if computed != fundamental_weights_table(t) || cartan_matrix(t) != simple_roots_table(t) {
            bad.push(t.to_string());
        }
    }
    Ok((bad.is_empty(), format!("{} types; mismatches: {bad:?}", types.len())))
}

fn check_lattices() -> Result<(bool, String)> {
    let mut bad = Vec::new();
    let types = table_types();
    for &t in &types {
        if !verify_lattice_case(t)? {
            bad.push(t.to_string());
        }
    }
    let refinement = [5, 7, 9].iter().map(|&n| verify_d_odd_refinement(n)).collect::<Result<Vec<_>>>()?;
    let ok = bad.is_empty() && refinement.iter().all(|&x| x);
    Ok((ok, format!("{} types, failures {bad:?}; D odd refinement n=5,7,9: {refinement:?}", types.len())))
}

fn check_polynomial_types(limits: &Limits) -> Result<(bool, String)> {
    let names = [
        "A1", "B2", "B3", "B4", "B5", "B6", "C2", "C3", "C4", "C5", "C6", "D4", "D6", "D8", "E7", "E8", "F4", "G2",
    ];
    let mut bad = Vec::new();
    for name in names {
        let t = ty(name);
        let basis = hilbert_basis_with(t, limits)?;
        let p = build_presentation_with(t, limits)?;
        let fundamentals = weight_set((1..=t.rank()).map(|i| Weight::fundamental(t.rank(), i)));
        if basis.len() != t.rank()
            || weight_set(basis.weights()) != fundamentals
            || !p.relations.is_empty()
            || !classify_polynomial(t)
        {
            bad.push(name);
        }
    }
    Ok((bad.is_empty(), format!("{} types with |Ψ_min| = rank and no relations; failures {bad:?}", names.len())))
}

fn check_d_odd_sets(limits: &Limits) -> Result<(bool, String)> {
    let mut ok = true;
    for n in [5, 7] {
        let t = LieType::new(Family::D, n)?;
        let b = hilbert_basis_with(t, limits)?;
        ok &= b.len() == n + 1 && weight_set(b.weights()) == weight_set(d_odd_generators(n));
    }
    Ok((ok, "D5, D7: n+1 generators, exact set".into()))
}

fn check_e6_set(limits: &Limits) -> Result<(bool, String)> {
    let b = hilbert_basis_with(ty("E6"), limits)?;
    let ok = b.len() == 14 && weight_set(b.weights()) == weight_set(e6_generators());
    Ok((ok, format!("{} generators computed", b.len())))
}

fn check_small_a(n: usize, relation: &str, limits: &Limits) -> Result<(bool, String)> {
    let p = build_presentation_with(LieType::new(Family::A, n)?, limits)?;
    let names: HashMap<String, Weight> =
        p.generators.iter().map(|g| (g.name.clone(), g.weight.weight.clone())).collect();
    let listed = parse_relations(&[relation], &names);
    let ok = p.generators.len() == n + 1
        && listed.as_ref() == Some(&presentation_relations_by_weight(&p))
        && verify_soundness(&p);
    Ok((ok, format!("{} generators; {}", p.generators.len(), p.format_relation(&p.relations[0]))))
}

fn check_a4(limits: &Limits) -> Result<(bool, String)> {
    let t = ty("A4");
    let (basis, ordinary, relations) = a4_listing();
    let b = hilbert_basis_with(t, limits)?;
    let p = build_presentation_with(t, limits)?;
    let seqs = minimal_sequences_a_with(4, limits)?;
    let count = |tag: &str| seqs.iter().filter(|(_, c)| c.tag() == tag).count();
    let computed_ordinary = weight_set(
        seqs.iter().filter(|(_, c)| *c == GeneratorClass::Ordinary).map(|(s, _)| s.to_weight()),
    );
    let listed = parse_relations(&relations, &a4_names());
    let ok = weight_set(b.weights()) == weight_set(basis)
        && (count("single"), count("special"), count("ordinary")) == (4, 3, 7)
        && computed_ordinary == weight_set(ordinary)
        && p.relations.len() == 10
        && listed.as_ref() == Some(&presentation_relations_by_weight(&p))
        && verify_soundness(&p);
    Ok((ok, format!("{} generators, {} relations", p.generators.len(), p.relations.len())))
}

fn check_d_odd_relation(limits: &Limits) -> Result<(bool, String)> {
    let mut ok = true;
    let mut shown = Vec::new();
    for n in [5, 7] {
        let t = LieType::new(Family::D, n)?;
        let p = build_presentation_with(t, limits)?;
        let names: HashMap<String, Weight> =
            (1..=n + 1).map(|j| (format!("t_{j}"), d_odd_generators(n)[j - 1].clone())).collect();
        let line = format!("t_{} t_{n} = t_{}^2", n - 1, n + 1);
        ok &= parse_relations(&[line.as_str()], &names).as_ref() == Some(&presentation_relations_by_weight(&p))
            && verify_soundness(&p);
        shown.push(p.format_relation(&p.relations[0]));
    }
    Ok((ok, shown.join("; ")))
}

fn check_e6_relations(limits: &Limits) -> Result<(bool, String)> {
    let p = build_presentation_with(ty("E6"), limits)?;
    let names: HashMap<String, Weight> =
        e6_generators().into_iter().enumerate().map(|(j, g)| (format!("t_{}", j + 1), g)).collect();
    let ok = parse_relations(&E6_RELATIONS, &names).as_ref() == Some(&presentation_relations_by_weight(&p))
        && verify_soundness(&p);
    Ok((ok, format!("{} relations, all sound", p.relations.len())))
}

fn check_completeness(t: LieType, limits: &Limits) -> Result<(bool, String)> {
    let p = build_presentation_with(t, limits)?;
    let bound = default_completeness_bound(t);
    let r = completeness_report(&p, bound, limits)?;
    let detail = match &r.witness {
        None => format!("bound {bound}: {} monomials in {} fibers, one class each", r.monomials, r.fibers),
        Some(wit) => format!(
            "bound {bound}: {} of {} fibers split; first at {} ({})",
            r.disconnected_fibers,
            r.fibers,
            wit.weight,
            wit.representatives.iter().map(|m| p.format_monomial(m)).collect::<Vec<_>>().join(" vs ")
        ),
    };
    Ok((r.complete, detail))
}

fn check_negative_controls(limits: &Limits) -> Result<(bool, String)> {
    let mut corrupted = build_presentation_with(ty("E6"), limits)?;
    *corrupted.relations[3].rhs.get_mut("t_10").expect("t_10 in relation") += 1;
    let unsound = !verify_soundness(&corrupted);
    let mut stripped = build_presentation_with(ty("A2"), limits)?;
    stripped.relations.clear();
    let incomplete = !completeness_report(&stripped, 18, limits)?.complete;
    Ok((unsound && incomplete, format!("corrupted relation rejected: {unsound}; A2 without relation incomplete: {incomplete}")))
}

fn check_sequences(limits: &Limits) -> Result<(bool, String)> {
    let mut ok = true;
    let mut ordinary_total = 0;
    for n in 2..=8 {
        let t = LieType::new(Family::A, n)?;
        let r = type_a_modulus(n);
        let seqs = minimal_sequences_a_with(n, limits)?;
        let basis = hilbert_basis_with(t, limits)?;
        ok &= weight_set(basis.weights()) == weight_set(seqs.iter().map(|(s, _)| s.to_weight()));
        ok &= seqs.len() == basis.len();
        for k in (2..=n).filter(|&k| k as u64 != r) {
            let d = special_coefficient(n, k)?;
            // least d ≥ 0 with dλ_1 + λ_k in Ψ
            let least = (0..).find(|&d| (d + k as u64) % r == 0).expect("exists");
            ok &= d == least;
        }
        for (s, c) in &seqs {
            if *c != GeneratorClass::Ordinary {
                continue;
            }
            ordinary_total += 1;
            let norm = norm_coefficient(n, s)?;
            let mut lhs = s.0.clone();
            lhs[0] += norm * r;
            let mut rhs = vec![0u64; n];
            for k in (2..=n).filter(|&k| k as u64 != r) {
                let e = special_sequence(n, k)?;
                for (x, y) in rhs.iter_mut().zip(&e.0) {
                    *x += s.0[k - 1] * y;
                }
            }
            ok &= norm > 0 && NSequence(lhs) == NSequence(rhs);
        }
    }
    Ok((ok, format!("n = 2..8; {ordinary_total} ordinary sequences checked")))
}

fn check_characters(limits: &Limits) -> Result<(bool, String)> {
    let mut pairs = 0;
    let mut ok = true;
    for name in ["A1", "A2", "B2", "G2", "A3"] {
        let t = ty(name);
        let e = CharacterEngine::new(t, limits.clone())?;
        let n = t.rank();
        let small: Vec<Weight> = small_dominant(n, 2);
        for (i, a) in small.iter().enumerate() {
            for b in &small[i..] {
                let ab = e.tensor(a, b)?;
                let ba = e.tensor(b, a)?;
                let mut total = 0u128;
                for (g, c) in &ab.terms {
                    ok &= c.is_integer() && *c > int(0);
                    total += c.to_integer() as u128 * e.dimension(g)?;
                }
                ok &= ab == ba && total == e.dimension(a)? * e.dimension(b)?;
                pairs += 1;
            }
        }
    }
    let mut orbit_weights = 0;
    for name in ["A2", "B2", "G2"] {
        let t = ty(name);
        let data = cartan_data(t);
        let e = CharacterEngine::new(t, limits.clone())?;
        for lam in small_dominant(t.rank(), 8) {
            if data.inner(&lam, &lam) > int(8) {
                continue;
            }
            orbit_weights += 1;
            let o = e.orbit_sum(&lam)?;
            let lead = int((weyl_group_order(t) / e.orbit_size(&lam)?) as i64);
            ok &= o.coefficient(&lam) == lead;
            ok &= o.support().all(|g| *g == lam || dominance_less_in(&data, g, &lam));
        }
    }
    let mut theta = 0;
    for n in [2, 3] {
        let t = LieType::new(Family::A, n)?;
        let r = type_a_modulus(n);
        let e = CharacterEngine::new(t, limits.clone())?;
        let tester = PsiTester::new(t);
        for lam in small_dominant(n, 3 * r as i64) {
            let seq = NSequence::from_weight(&lam).expect("dominant");
            if seq.weighted_degree() > 3 * r || !tester.contains(&lam) {
                continue;
            }
            theta += 1;
            ok &= e.theta_support(&lam)?;
        }
    }
    Ok((ok, format!("{pairs} tensor pairs, {orbit_weights} orbit sums, {theta} theta supports")))
}

/// Dominant weights with coefficient sum at most `max`.
fn small_dominant(n: usize, max: i64) -> Vec<Weight> {
    let mut out = vec![Weight::zero(n)];
    for i in 0..n {
        let mut next = Vec::new();
        for base in &out {
            let used: i64 = base.0.iter().sum();
            for v in 0..=(max - used) {
                let mut x = base.clone();
                x.0[i] = v;
                next.push(x);
            }
        }
        out = next;
    }
    out
}

fn check_generation(limits: &Limits) -> Result<(bool, String)> {
    let mut ok = true;
    let mut removals = 0;
    for name in ["A2", "A3", "A4", "A5", "A6", "D5", "D7", "E6"] {
        let t = ty(name);
        let b = hilbert_basis_with(t, limits)?;
        let bound = default_generation_bound(&b);
        let gens = b.weights();
        ok &= brute_force_generation_check(t, bound, &gens, limits)?;
        for i in 0..gens.len() {
            let mut fewer = gens.clone();
            fewer.remove(i);
            ok &= !brute_force_generation_check(t, bound, &fewer, limits)?;
            removals += 1;
        }
    }
    Ok((ok, format!("8 types at twice the largest generator square length; {removals} removals detected")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn listed_names_cover_relations() {
        let (_, _, rels) = a4_listing();
        assert_eq!(parse_relations(&rels, &a4_names()).unwrap().len(), 10);
        assert!(parse_relations(&["q_1 = x_1"], &a4_names()).is_none());
    }

    #[test]
    fn small_dominant_counts() {
        assert_eq!(small_dominant(2, 2).len(), 6);
        assert_eq!(small_dominant(3, 1).len(), 4);
    }
}
