use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use qcenter::characters::CharacterEngine;
use qcenter::lattice::hermite_normal_form;
use qcenter::monoid::{hilbert_basis, minimal_sequences_a, psi_contains, type_a_modulus, PsiTester};
use qcenter::presentation::{build_presentation, verify_soundness};
use qcenter::root_system::cartan_determinant;
use qcenter::weyl::{orbit, simple_reflection, weyl_group_order};
use qcenter::{Error, Family, IntegerLattice, LieType, Limits, Rational, Weight};

fn type_a(n: usize) -> LieType {
    LieType::new(Family::A, n).unwrap()
}

#[test]
fn psi_in_type_a_is_degree_divisibility() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=8);
        let v = Weight((0..n).map(|_| rng.gen_range(0..12)).collect());
        let r = type_a_modulus(n);
        let degree: i64 = v.0.iter().enumerate().map(|(i, &x)| (i as i64 + 1) * x).sum();
        assert_eq!(psi_contains(type_a(n), &v).unwrap(), degree % r as i64 == 0, "A{n} {v}");
    }
}

#[test]
fn sequence_count_matches_box_search() {
    for n in 2..=7 {
        let seqs = minimal_sequences_a(n).unwrap();
        assert_eq!(seqs.len(), hilbert_basis(type_a(n)).unwrap().len(), "A{n}");
    }
}

#[test]
fn soundness_for_every_small_type() {
    let mut checked = 0;
    for t in LieType::all_up_to(10) {
        let p = match build_presentation(t) {
            Ok(p) => p,
            Err(Error::BudgetExceeded { .. }) => continue,
            Err(e) => panic!("{t}: {e}"),
        };
        assert!(verify_soundness(&p), "{t}");
        checked += 1;
    }
    assert!(checked >= 30);
}

fn small_type() -> impl Strategy<Value = LieType> {
    prop::sample::select(vec!["A1", "A2", "A3", "B2", "C3", "D4", "D5", "G2", "F4", "E6"])
        .prop_map(|s| s.parse().unwrap())
}

fn dominant(t: LieType, max: i64) -> impl Strategy<Value = Weight> {
    prop::collection::vec(0..=max, t.rank()).prop_map(Weight)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn basis_sums_stay_in_psi(t in small_type(), picks in prop::collection::vec(any::<prop::sample::Index>(), 1..6)) {
        let basis = hilbert_basis(t).unwrap().weights();
        let tester = PsiTester::new(t);
        let sum = picks.iter().fold(Weight::zero(t.rank()), |acc, i| acc.add(i.get(&basis)));
        prop_assert!(tester.contains(&sum));
    }

    #[test]
    fn psi_contains_multiples_by_the_index(t in small_type(), seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let v = Weight((0..t.rank()).map(|_| rng.gen_range(0..6)).collect());
        let u = Weight((0..t.rank()).map(|_| rng.gen_range(0..6)).collect());
        prop_assert!(psi_contains(t, &v.scale(cartan_determinant(t))).unwrap());
        if psi_contains(t, &v).unwrap() && psi_contains(t, &u).unwrap() {
            prop_assert!(psi_contains(t, &v.add(&u)).unwrap());
        }
    }

    #[test]
    fn hnf_is_idempotent(rows in prop::collection::vec(prop::collection::vec(-9i64..=9, 3), 1..6)) {
        let wide: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
        let h = hermite_normal_form(wide, 3).unwrap();
        prop_assert_eq!(hermite_normal_form(h.clone(), 3).unwrap(), h.clone());
        if h.len() == 3 {
            let l = IntegerLattice::from_generators(&rows, 3).unwrap();
            let again = IntegerLattice::from_generators(l.hnf_basis(), 3).unwrap();
            prop_assert_eq!(l.hnf_basis(), again.hnf_basis());
            for r in &rows {
                prop_assert!(l.contains(&Weight(r.clone())));
            }
        }
    }
}

fn rank_two_or_three() -> impl Strategy<Value = LieType> {
    prop::sample::select(vec!["A1", "A2", "A3", "B2", "C3", "G2"]).prop_map(|s| s.parse().unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn tensor_is_symmetric_and_preserves_dimension(t in rank_two_or_three(), seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let mut pick = || Weight((0..t.rank()).map(|_| rng.gen_range(0..=2)).collect());
        let (a, b) = (pick(), pick());
        let e = CharacterEngine::new(t, Limits::default()).unwrap();
        let ab = e.tensor(&a, &b).unwrap();
        prop_assert_eq!(&ab, &e.tensor(&b, &a).unwrap());
        let total: u128 = ab.terms.iter().map(|(g, c)| c.to_integer() as u128 * e.dimension(g).unwrap()).sum();
        prop_assert_eq!(total, e.dimension(&a).unwrap() * e.dimension(&b).unwrap());
    }

    #[test]
    fn characters_are_weyl_invariant(t in rank_two_or_three(), l in (0i64..=3, 0i64..=3, 0i64..=3)) {
        let coords = [l.0, l.1, l.2];
        let lambda = Weight(coords[..t.rank()].to_vec());
        let e = CharacterEngine::new(t, Limits::default()).unwrap();
        let full: BTreeSet<(Weight, u64)> = e.full_character(&lambda).unwrap().into_iter().collect();
        for i in 1..=t.rank() {
            let moved: BTreeSet<(Weight, u64)> =
                full.iter().map(|(w, m)| (simple_reflection(t, i, w).unwrap(), *m)).collect();
            prop_assert_eq!(&moved, &full);
        }
        let total: u64 = full.iter().map(|(_, m)| m).sum();
        prop_assert_eq!(total as u128, e.dimension(&lambda).unwrap());
    }

    #[test]
    fn orbit_sum_round_trips(t in rank_two_or_three(), l in dominant("A3".parse().unwrap(), 3)) {
        let lambda = Weight(l.0[..t.rank()].to_vec());
        let e = CharacterEngine::new(t, Limits::default()).unwrap();
        let o = e.orbit_sum(&lambda).unwrap();
        // expand each character back into dominant multiplicities
        let mut back: std::collections::BTreeMap<Weight, Rational> = Default::default();
        for (g, c) in &o.terms {
            for (mu, m) in &e.character(g).unwrap().multiplicities {
                *back.entry(mu.clone()).or_default() += *c * Rational::from_integer(*m as i64);
            }
        }
        back.retain(|_, c| *c != Rational::from_integer(0));
        let size = orbit(t, &lambda, 100_000).unwrap().size() as u64;
        let lead = (weyl_group_order(t) / size) as i64;
        let expect: std::collections::BTreeMap<Weight, Rational> =
            [(lambda.clone(), Rational::from_integer(lead))].into();
        prop_assert_eq!(back, expect);
    }
}
