//! Plain-text tables.

use std::fmt::Write;

use qcenter::presentation::DegreeKind;
use qcenter::rational::to_pq;
use qcenter::report::{
    CharacterReport, ClassifyReport, HilbertBasisReport, LatticeReport, OrbitReport,
    PresentationReport, TensorReport, VerifyReport,
};

fn rows(out: &mut String, pairs: &[(&str, String)]) {
    let width = pairs.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    for (k, v) in pairs {
        let pad = width - k.chars().count();
        let _ = writeln!(out, "{k}{}  {v}", " ".repeat(pad));
    }
}

fn matrix(out: &mut String, title: &str, m: &[Vec<i64>]) {
    let _ = writeln!(out, "{title}");
    let width = m.iter().flatten().map(|x| x.to_string().len()).max().unwrap_or(1);
    for row in m {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
        let _ = writeln!(out, "  [{}]", cells.join(" "));
    }
}

pub fn classify(r: &ClassifyReport) -> String {
    let mut s = String::new();
    rows(
        &mut s,
        &[
            ("type", r.lie_type.to_string()),
            ("polynomial", r.polynomial.to_string()),
            ("case", r.case.to_string()),
            ("|Ψ_min|", r.psi_min_size.to_string()),
            ("relations", r.relation_count.to_string()),
            ("det cartan", r.cartan_determinant.to_string()),
            ("|W|", r.weyl_group_order.to_string()),
            ("positive roots", r.positive_roots.to_string()),
        ],
    );
    s
}

pub fn lattice(r: &LatticeReport) -> String {
    let mut s = String::new();
    let mut head = vec![
        ("type", r.lie_type.to_string()),
        ("case", r.case.to_string()),
        ("[Λ:Q]", r.index.to_string()),
    ];
    if let Some(d) = &r.alpha_diamond {
        head.push(("α◇", d.to_string()));
    }
    head.push(("verified", r.verified.to_string()));
    rows(&mut s, &head);
    matrix(&mut s, "Q (HNF, λ-coordinates)", &r.root_lattice);
    matrix(&mut s, "Q ∩ 2Λ", &r.even_weight_lattice);
    matrix(&mut s, &format!("{} lattice", r.case), &r.case_lattice);
    s
}

pub fn hilbert_basis(r: &HilbertBasisReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "Ψ_min for {}: {} elements (box bounds {:?})", r.lie_type, r.count, r.box_bounds);
    let width = r.elements.iter().map(|e| e.weight.to_string().len()).max().unwrap_or(0);
    for e in &r.elements {
        let class = e.class.as_deref().map(|c| format!("  {c}")).unwrap_or_default();
        let _ = writeln!(s, "  {:<width$}  (λ,λ) = {}{class}", e.weight.to_string(), to_pq(&e.square_length));
    }
    s
}

pub fn presentation(r: &PresentationReport) -> String {
    let mut s = String::new();
    let names: Vec<&str> = r.generators.iter().map(|g| g.name.as_str()).collect();
    let quotient = if r.relations.is_empty() { String::new() } else { " / I".into() };
    let _ = writeln!(s, "Z(U_q({})) ≅ C(q)[{}]{quotient}", r.lie_type, names.join(", "));
    let _ = writeln!(s, "generators");
    let width = names.iter().map(|n| n.len()).max().unwrap_or(0);
    for g in &r.generators {
        let _ = writeln!(s, "  {:<width$}  {}", g.name, g.weight);
    }
    if !r.relation_text.is_empty() {
        let _ = writeln!(s, "relations");
        for line in &r.relation_text {
            let _ = writeln!(s, "  {line}");
        }
    }
    let degree = match r.degree_kind {
        DegreeKind::Weighted => "weighted degree |t|",
        DegreeKind::CoefficientSum => "coefficient sum",
    };
    let _ = writeln!(s, "sound         {}", r.sound);
    match &r.completeness {
        Some(c) => {
            let _ = writeln!(
                s,
                "complete      {} ({degree} ≤ {}: {} monomials, {} fibers, {} split)",
                c.complete, c.bound, c.monomials, c.fibers, c.disconnected_fibers
            );
            if let Some(w) = &c.witness {
                let reps: Vec<String> = w
                    .representatives
                    .iter()
                    .map(|m| {
                        let parts: Vec<String> = r
                            .generators
                            .iter()
                            .filter_map(|g| match m.get(&g.name) {
                                Some(1) => Some(g.name.clone()),
                                Some(e) => Some(format!("{}^{e}", g.name)),
                                None => None,
                            })
                            .collect();
                        parts.join(" ")
                    })
                    .collect();
                let _ = writeln!(s, "  witness {} (degree {}): {}", w.weight, w.degree, reps.join(" | "));
            }
            let _ = writeln!(s, "hilbert fn    {}", if c.hilbert_agreement { "agrees" } else { "differs" });
        }
        None => {
            let _ = writeln!(s, "complete      unchecked");
        }
    }
    if let Some(n) = &r.note {
        let _ = writeln!(s, "note: {n}");
    }
    s
}

pub fn orbit(r: &OrbitReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "W·{} in {}: {} elements, dominant {}", r.weight, r.lie_type, r.size, r.dominant);
    for w in &r.elements {
        let _ = writeln!(s, "  {w}");
    }
    s
}

pub fn tensor(r: &TensorReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "L{} ⊗ L{} in {} (dim {} × {} = {})",
        r.left,
        r.right,
        r.lie_type,
        r.left_dimension,
        r.right_dimension,
        r.left_dimension * r.right_dimension
    );
    let width = r.components.iter().map(|c| c.weight.to_string().len()).max().unwrap_or(0);
    for c in &r.components {
        let _ = writeln!(s, "  {:<width$}  × {}  dim {}", c.weight.to_string(), c.multiplicity, c.dimension);
    }
    s
}

pub fn character(r: &CharacterReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "L{} in {}: dim {}", r.highest, r.lie_type, r.dimension);
    let _ = writeln!(s, "  dominant weight  mult  orbit");
    let width = r.dominant_weights.iter().map(|c| c.weight.to_string().len()).max().unwrap_or(0).max(15);
    for c in &r.dominant_weights {
        let _ = writeln!(s, "  {:<width$}  {:>4}  {:>5}", c.weight.to_string(), c.multiplicity, c.orbit_size);
    }
    s
}

pub fn verify(r: &VerifyReport) -> String {
    let mut s = String::new();
    let width = r.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    for c in &r.checks {
        let tag = if c.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(s, "{tag}  {:<width$}  {}", c.name, c.detail);
    }
    let _ = writeln!(s, "{} passed, {} failed", r.passed, r.failed);
    s
}
