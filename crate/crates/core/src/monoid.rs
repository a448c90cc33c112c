//! The dominant monoid `Ψ = {λ ∈ Λ⁺ : 2λ ∈ Q}` and its minimal generating set.
//!
//! For type A the monoid is modelled by n-sequences `t` (the fundamental
//! coordinates of λ): `λ ∈ Ψ` iff `r` divides `|t| = Σ i·t_i`, where
//! `r = (n+1)/gcd(n+1, 2)`.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Limits;
use crate::lattice::{root_lattice, IntegerLattice};
use crate::rational::{int, serde_pq, Rational};
use crate::root_system::{cartan_data, CartanData, Family, LieType, Weight};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PsiElement {
    pub weight: Weight,
    #[serde(with = "serde_pq")]
    pub square_length: Rational,
}

/// Minimal generating set of `Ψ`, ordered by square length descending with
/// ties broken by descending lexicographic order of the coordinates. Since
/// `μ > ν` among dominant weights forces `(μ,μ) > (ν,ν)`, larger elements in
/// the dominance order always come first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertBasis {
    pub lie_type: LieType,
    pub elements: Vec<PsiElement>,
    /// `c_i`: least positive multiple of `λ_i` lying in `Ψ`.
    pub box_bounds: Vec<u64>,
}

impl HilbertBasis {
    pub fn weights(&self) -> Vec<Weight> {
        self.elements.iter().map(|e| e.weight.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Membership test for `Ψ` backed by the root lattice HNF.
#[derive(Clone, Debug)]
pub struct PsiTester {
    root_lattice: IntegerLattice,
}

impl PsiTester {
    pub fn new(t: LieType) -> Self {
        PsiTester { root_lattice: root_lattice(t) }
    }

    pub fn contains(&self, w: &Weight) -> bool {
        w.is_dominant() && self.root_lattice.contains(&w.scale(2))
    }
}

pub fn psi_contains(t: LieType, w: &Weight) -> Result<bool> {
    t.check_weight(w)?;
    Ok(PsiTester::new(t).contains(w))
}

/// `r = (n+1) / gcd(n+1, 2)` for type A_n.
pub fn type_a_modulus(n: usize) -> u64 {
    let m = n as u64 + 1;
    m / m.gcd(&2)
}

pub(crate) fn square_length(data: &CartanData, w: &Weight) -> Rational {
    data.inner(w, w)
}

/// Least `c > 0` with `c·λ_i ∈ Ψ` (1-based `i`).
pub fn minimal_single_multiplier(t: LieType, i: usize) -> Result<u64> {
    t.check_index(i)?;
    Ok(single_multiplier_in(&cartan_data(t), i - 1))
}

fn single_multiplier_in(data: &CartanData, i: usize) -> u64 {
    // 2cλ_i ∈ Q iff c clears every denominator of 2·(root coordinates of λ_i)
    data.inv_cartan_transpose
        .iter()
        .map(|row| (row[i] * int(2)).denom().unsigned_abs())
        .fold(1u64, |acc, d| acc.lcm(&d))
}

fn order_elements(data: &CartanData, weights: impl IntoIterator<Item = Weight>) -> Vec<PsiElement> {
    let mut out: Vec<PsiElement> = weights
        .into_iter()
        .map(|w| PsiElement { square_length: square_length(data, &w), weight: w })
        .collect();
    out.sort_by(compare_basis_order);
    out
}

fn compare_basis_order(a: &PsiElement, b: &PsiElement) -> Ordering {
    b.square_length.cmp(&a.square_length).then_with(|| b.weight.cmp(&a.weight))
}

pub fn hilbert_basis(t: LieType) -> Result<HilbertBasis> {
    hilbert_basis_with(t, &Limits::default())
}

/// Box search: every element of `Ψ_min` is either some `c_i λ_i` or lies in
/// the box `0 ≤ t_i < c_i`, because any element with `t_i ≥ c_i` splits off
/// `c_i λ_i`. Inside the box an element is minimal iff no smaller nonzero
/// element of `Ψ` lies below it componentwise (differences of comparable
/// elements of `Ψ` stay in `Ψ`).
pub fn hilbert_basis_with(t: LieType, limits: &Limits) -> Result<HilbertBasis> {
    let data = cartan_data(t);
    let n = t.rank();
    let bounds: Vec<u64> = (0..n).map(|i| single_multiplier_in(&data, i)).collect();
    let total: u128 = bounds.iter().map(|&c| c as u128).product();
    if total > limits.box_candidates {
        let hint = (t.family() == Family::A)
            .then(|| "use the n-sequence enumeration for type A".to_string());
        return Err(Error::BudgetExceeded {
            what: "hilbert basis box",
            needed: total,
            limit: limits.box_candidates,
            hint,
        });
    }
    let tester = PsiTester::new(t);
    let minimal = box_minimal_elements(&bounds, limits, |w| tester.contains(w));
    let singles = (0..n).map(|i| Weight::fundamental(n, i + 1).scale(bounds[i] as i64));
    let elements = order_elements(&data, minimal.into_iter().chain(singles));
    Ok(HilbertBasis { lie_type: t, elements, box_bounds: bounds })
}

/// Nonzero members of the box `Π [0, c_i)` that satisfy `member` and have
/// no other nonzero member below them componentwise.
pub(crate) fn box_minimal_elements<F>(bounds: &[u64], limits: &Limits, member: F) -> Vec<Weight>
where
    F: Fn(&Weight) -> bool + Sync + Send,
{
    let n = bounds.len();
    let total: usize = bounds.iter().map(|&c| c as usize).product();
    let mut strides = vec![1usize; n];
    for i in 1..n {
        strides[i] = strides[i - 1] * bounds[i - 1] as usize;
    }
    let decode = |mut idx: usize| {
        let mut w = vec![0i64; n];
        for i in 0..n {
            w[i] = (idx % bounds[i] as usize) as i64;
            idx /= bounds[i] as usize;
        }
        Weight(w)
    };
    let exec = limits.execution;

    let mut is_member = vec![false; total];
    exec.fill(&mut is_member, |idx| idx != 0 && member(&decode(idx)));

    // below[idx]: some nonzero member lies componentwise below idx (inclusive);
    // one prefix-OR pass per axis, independent across blocks of that axis
    let mut below = is_member.clone();
    for axis in 0..n {
        let s = strides[axis];
        let c = bounds[axis] as usize;
        exec.for_each_chunk_mut(&mut below, s * c, |block| {
            for k in 1..c {
                let (prev, cur) = block.split_at_mut(k * s);
                let prev = &prev[(k - 1) * s..];
                for j in 0..s {
                    cur[j] |= prev[j];
                }
            }
        });
    }

    exec.filter_map_range(0..total, |idx| {
        if !is_member[idx] {
            return None;
        }
        let w = decode(idx);
        let reducible = (0..n).any(|i| w.0[i] > 0 && below[idx - strides[i]]);
        (!reducible).then_some(w)
    })
}

/// An n-tuple of naturals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NSequence(pub Vec<u64>);

impl NSequence {
    pub fn from_weight(w: &Weight) -> Option<Self> {
        w.0.iter().map(|&c| u64::try_from(c).ok()).collect::<Option<Vec<_>>>().map(NSequence)
    }

    pub fn to_weight(&self) -> Weight {
        Weight(self.0.iter().map(|&c| c as i64).collect())
    }

    /// `|t| = Σ i·t_i` with 1-based `i`.
    pub fn weighted_degree(&self) -> u64 {
        self.0.iter().enumerate().map(|(i, &t)| (i as u64 + 1) * t).sum()
    }

    pub fn is_of_type(&self, k: u64) -> bool {
        self.weighted_degree() % k == 0
    }

    fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] != 0).collect()
    }
}

impl fmt::Display for NSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Single / special / ordinary classification of minimal type-A sequences.
/// Indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "lowercase")]
pub enum GeneratorClass {
    /// `r_k λ_k` with `r_k = r / gcd(r, k)`.
    Single { index: usize, multiplier: u64 },
    /// `d_k λ_1 + λ_k`.
    Special { index: usize, coefficient: u64 },
    Ordinary,
}

impl GeneratorClass {
    pub fn tag(&self) -> &'static str {
        match self {
            GeneratorClass::Single { .. } => "single",
            GeneratorClass::Special { .. } => "special",
            GeneratorClass::Ordinary => "ordinary",
        }
    }
}

fn check_type_a_rank(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::NotApplicable {
            operation: "n-sequence model",
            subject: format!("n = {n} (requires n ≥ 2)"),
        });
    }
    Ok(())
}

/// `d_k`: `r - k` for `k < r`, `2r - k` for `r < k ≤ n`; undefined for `k ∈ {1, r}`.
pub fn special_coefficient(n: usize, k: usize) -> Result<u64> {
    check_type_a_rank(n)?;
    let r = type_a_modulus(n);
    let k64 = k as u64;
    if k == 0 || k > n || k64 == 1 || k64 == r {
        return Err(Error::NotApplicable {
            operation: "special_coefficient",
            subject: format!("k = {k} for n = {n} (r = {r})"),
        });
    }
    Ok(if k64 < r { r - k64 } else { 2 * r - k64 })
}

/// The special sequence `e(k) = ξ(d_k λ_1 + λ_k)`.
pub fn special_sequence(n: usize, k: usize) -> Result<NSequence> {
    let d = special_coefficient(n, k)?;
    let mut t = vec![0u64; n];
    t[0] += d;
    t[k - 1] += 1;
    Ok(NSequence(t))
}

/// Indices `k ∉ {1, r}`, i.e. those carrying a special generator.
pub fn special_indices(n: usize) -> Vec<usize> {
    let r = type_a_modulus(n) as usize;
    (2..=n).filter(|&k| k != r).collect()
}

/// Classifies a minimal n-sequence of type r.
pub fn classify_sequence(n: usize, t: &NSequence) -> Result<GeneratorClass> {
    check_type_a_rank(n)?;
    if t.0.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: t.0.len() });
    }
    let r = type_a_modulus(n);
    let support = t.support();
    if support.len() == 1 {
        let k = support[0] + 1;
        return Ok(GeneratorClass::Single { index: k, multiplier: t.0[k - 1] });
    }
    for k in special_indices(n) {
        if special_sequence(n, k)? == *t {
            return Ok(GeneratorClass::Special { index: k, coefficient: special_coefficient(n, k)? });
        }
    }
    let _ = r;
    Ok(GeneratorClass::Ordinary)
}

/// `‖t‖ = (−t_1 + Σ_{k ∉ {1,r}} t_k d_k) / r` for an ordinary sequence.
pub fn norm_coefficient(n: usize, t: &NSequence) -> Result<u64> {
    if classify_sequence(n, t)? != GeneratorClass::Ordinary || t.0.iter().all(|&x| x == 0) {
        return Err(Error::NotApplicable {
            operation: "norm_coefficient",
            subject: format!("non-ordinary sequence {t}"),
        });
    }
    let r = type_a_modulus(n) as i64;
    let mut num = -(t.0[0] as i64);
    for k in special_indices(n) {
        num += t.0[k - 1] as i64 * special_coefficient(n, k)? as i64;
    }
    if num <= 0 || num % r != 0 {
        return Err(Error::NotApplicable {
            operation: "norm_coefficient",
            subject: format!("sequence {t} (not a minimal sequence of type {r})"),
        });
    }
    Ok((num / r) as u64)
}

pub fn minimal_sequences_a(n: usize) -> Result<Vec<(NSequence, GeneratorClass)>> {
    minimal_sequences_a_with(n, &Limits::default())
}

/// All minimal n-sequences of type r.
///
/// Reading `t` as the multiset holding `t_k` copies of the residue `k mod r`,
/// minimal sequences are the minimal zero-sum multisets (label `r` itself is
/// zero and only occurs in the single `λ_r`). Each one is a zero-sum-free
/// multiset plus its largest label, so a depth-first walk over zero-sum-free
/// multisets in nondecreasing label order meets every one exactly once. The
/// walk tracks the set of nonempty subset sums as a bitmask; zero-sum-free
/// multisets have length below `r`, which bounds the search.
pub fn minimal_sequences_a_with(
    n: usize,
    limits: &Limits,
) -> Result<Vec<(NSequence, GeneratorClass)>> {
    check_type_a_rank(n)?;
    if n > limits.sequence_rank {
        return Err(Error::BudgetExceeded {
            what: "n-sequence rank",
            needed: n as u128,
            limit: limits.sequence_rank as u128,
            hint: None,
        });
    }
    let r = type_a_modulus(n) as usize;
    let labels: Vec<usize> = (1..=n).filter(|&k| k != r).collect();
    let mut found: BTreeSet<Vec<u64>> = BTreeSet::new();
    if r <= n {
        let mut t = vec![0u64; n];
        t[r - 1] = 1;
        found.insert(t);
    }

    struct Walk<'a> {
        r: usize,
        labels: &'a [usize],
        counts: Vec<u64>,
        found: &'a mut BTreeSet<Vec<u64>>,
    }

    impl Walk<'_> {
        fn rotate(&self, mask: u128, by: usize) -> u128 {
            let full = if self.r == 128 { u128::MAX } else { (1u128 << self.r) - 1 };
            if by == 0 {
                return mask;
            }
            ((mask << by) | (mask >> (self.r - by))) & full
        }

        fn go(&mut self, start: usize, sums: u128, total: usize) {
            for li in start..self.labels.len() {
                let k = self.labels[li];
                let res = k % self.r;
                self.counts[k - 1] += 1;
                if (total + res) % self.r == 0 {
                    self.found.insert(self.counts.clone());
                } else {
                    let next = sums | (1u128 << res) | self.rotate(sums, res);
                    if next & 1 == 0 {
                        self.go(li, next, (total + res) % self.r);
                    }
                }
                self.counts[k - 1] -= 1;
            }
        }
    }

    if r > 128 {
        return Err(Error::BudgetExceeded {
            what: "n-sequence modulus",
            needed: r as u128,
            limit: 128,
            hint: None,
        });
    }
    let mut walk = Walk { r, labels: &labels, counts: vec![0; n], found: &mut found };
    walk.go(0, 0, 0);

    let mut out = found
        .into_iter()
        .map(|t| {
            let seq = NSequence(t);
            classify_sequence(n, &seq).map(|c| (seq, c))
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort_by(|(a, ca), (b, cb)| sequence_order(a, ca).cmp(&sequence_order(b, cb)));
    Ok(out)
}

/// Singles by index, then specials by index, then ordinary sequences by
/// weighted degree and descending lexicographic order.
fn sequence_order(t: &NSequence, class: &GeneratorClass) -> (u8, usize, u64, std::cmp::Reverse<Vec<u64>>) {
    match *class {
        GeneratorClass::Single { index, .. } => (0, index, 0, std::cmp::Reverse(vec![])),
        GeneratorClass::Special { index, .. } => (1, index, 0, std::cmp::Reverse(vec![])),
        GeneratorClass::Ordinary => {
            (2, 0, t.weighted_degree(), std::cmp::Reverse(t.0.clone()))
        }
    }
}

/// Dominant weights in `Ψ` with square length at most `bound`, sorted by
/// square length. The form is positive on every pair of fundamental weights,
/// so the square length grows with each coordinate and the walk can prune.
pub fn enumerate_psi(t: LieType, bound: Rational, limits: &Limits) -> Result<Vec<PsiElement>> {
    let data = cartan_data(t);
    let n = t.rank();
    let mut dominant = Vec::new();
    let mut cur = Weight::zero(n);
    fn walk(
        data: &CartanData,
        pos: usize,
        cur: &mut Weight,
        bound: Rational,
        out: &mut Vec<Weight>,
        cap: usize,
    ) -> Result<()> {
        if pos == cur.rank() {
            if out.len() >= cap {
                return Err(Error::BudgetExceeded {
                    what: "dominant weight enumeration",
                    needed: cap as u128 + 1,
                    limit: cap as u128,
                    hint: None,
                });
            }
            out.push(cur.clone());
            return Ok(());
        }
        loop {
            walk(data, pos + 1, cur, bound, out, cap)?;
            cur.0[pos] += 1;
            if square_length(data, cur) > bound {
                cur.0[pos] = 0;
                return Ok(());
            }
        }
    }
    walk(&data, 0, &mut cur, bound, &mut dominant, limits.monomials)?;
    let tester = PsiTester::new(t);
    let mut out: Vec<PsiElement> = limits
        .execution
        .map(&dominant, |w| {
            tester
                .contains(w)
                .then(|| PsiElement { weight: w.clone(), square_length: square_length(&data, w) })
        })
        .into_iter()
        .flatten()
        .collect();
    out.sort_by(|a, b| a.square_length.cmp(&b.square_length).then_with(|| a.weight.cmp(&b.weight)));
    Ok(out)
}

/// Twice the largest square length in `basis`, so every generator and all
/// pairwise sums of small generators fall inside the checked region.
pub fn default_generation_bound(basis: &HilbertBasis) -> Rational {
    basis.elements.iter().map(|e| e.square_length).max().unwrap_or_else(|| int(0)) * int(2)
}

/// Whether every element of `Ψ` with square length at most `bound` is an
/// N-combination of `generators` (dynamic programming in order of square
/// length).
pub fn brute_force_generation_check(
    t: LieType,
    bound: Rational,
    generators: &[Weight],
    limits: &Limits,
) -> Result<bool> {
    for g in generators {
        t.check_weight(g)?;
    }
    let elements = enumerate_psi(t, bound, limits)?;
    let mut generated: HashSet<Weight> = HashSet::with_capacity(elements.len());
    for e in &elements {
        let w = &e.weight;
        let ok = w.is_zero()
            || generators
                .iter()
                .any(|g| !g.is_zero() && g.le_componentwise(w) && generated.contains(&w.sub(g)));
        if !ok {
            return Ok(false);
        }
        generated.insert(w.clone());
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> LieType {
        s.parse().unwrap()
    }

    fn w(v: &[i64]) -> Weight {
        Weight(v.to_vec())
    }

    fn weight_set(b: &HilbertBasis) -> BTreeSet<Weight> {
        b.weights().into_iter().collect()
    }

    #[test]
    fn psi_examples() {
        assert!(psi_contains(ty("A4"), &Weight::zero(4)).unwrap());
        assert!(psi_contains(ty("A4"), &w(&[1, 0, 0, 1])).unwrap());
        assert!(!psi_contains(ty("A2"), &w(&[1, 0])).unwrap());
        assert!(!psi_contains(ty("A2"), &w(&[-3, 0])).unwrap());
    }

    #[test]
    fn single_multiplier_examples() {
        assert_eq!(minimal_single_multiplier(ty("A4"), 1).unwrap(), 5);
        assert_eq!(minimal_single_multiplier(ty("A3"), 2).unwrap(), 1);
        assert_eq!(minimal_single_multiplier(ty("E6"), 2).unwrap(), 1);
        for n in 2..=10 {
            let r = type_a_modulus(n);
            for i in 1..=n {
                let expect = r / r.gcd(&(i as u64));
                let t = LieType::new(Family::A, n).unwrap();
                assert_eq!(minimal_single_multiplier(t, i).unwrap(), expect);
            }
        }
    }

    #[test]
    fn hilbert_basis_a2() {
        let b = hilbert_basis(ty("A2")).unwrap();
        assert_eq!(b.weights(), vec![w(&[3, 0]), w(&[0, 3]), w(&[1, 1])]);
        assert_eq!(b.box_bounds, vec![3, 3]);
    }

    #[test]
    fn hilbert_basis_d5_b4_a1() {
        let d5 = weight_set(&hilbert_basis(ty("D5")).unwrap());
        let expect: BTreeSet<Weight> = [
            w(&[1, 0, 0, 0, 0]),
            w(&[0, 1, 0, 0, 0]),
            w(&[0, 0, 1, 0, 0]),
            w(&[0, 0, 0, 2, 0]),
            w(&[0, 0, 0, 0, 2]),
            w(&[0, 0, 0, 1, 1]),
        ]
        .into();
        assert_eq!(d5, expect);
        let b4 = weight_set(&hilbert_basis(ty("B4")).unwrap());
        assert_eq!(b4, (1..=4).map(|i| Weight::fundamental(4, i)).collect());
        assert_eq!(hilbert_basis(ty("A1")).unwrap().weights(), vec![w(&[1])]);
    }

    #[test]
    fn hilbert_basis_e6_has_fourteen() {
        assert_eq!(hilbert_basis(ty("E6")).unwrap().len(), 14);
    }

    #[test]
    fn basis_order_respects_dominance() {
        for t in [ty("A4"), ty("E6"), ty("D5")] {
            let b = hilbert_basis(t).unwrap();
            let data = cartan_data(t);
            for (i, a) in b.elements.iter().enumerate() {
                for c in &b.elements[..i] {
                    assert!(!crate::weyl::dominance_less_in(&data, &c.weight, &a.weight));
                }
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let limits = Limits { box_candidates: 10, ..Limits::default() };
        match hilbert_basis_with(ty("A4"), &limits) {
            Err(Error::BudgetExceeded { needed: 625, hint: Some(_), .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(hilbert_basis(ty("A10")).is_err());
    }

    #[test]
    fn sequences_small_ranks() {
        let a2 = minimal_sequences_a(2).unwrap();
        let got: Vec<(Vec<u64>, &str)> = a2.iter().map(|(s, c)| (s.0.clone(), c.tag())).collect();
        assert_eq!(
            got,
            vec![(vec![3, 0], "single"), (vec![0, 3], "single"), (vec![1, 1], "special")]
        );
        let a3 = minimal_sequences_a(3).unwrap();
        let got: Vec<(Vec<u64>, &str)> = a3.iter().map(|(s, c)| (s.0.clone(), c.tag())).collect();
        assert_eq!(
            got,
            vec![
                (vec![2, 0, 0], "single"),
                (vec![0, 1, 0], "single"),
                (vec![0, 0, 2], "single"),
                (vec![1, 0, 1], "special"),
            ]
        );
    }

    #[test]
    fn sequences_a4_counts() {
        let a4 = minimal_sequences_a(4).unwrap();
        let count = |tag: &str| a4.iter().filter(|(_, c)| c.tag() == tag).count();
        assert_eq!((count("single"), count("special"), count("ordinary")), (4, 3, 7));
        let ordinary: BTreeSet<Vec<u64>> = a4
            .iter()
            .filter(|(_, c)| *c == GeneratorClass::Ordinary)
            .map(|(s, _)| s.0.clone())
            .collect();
        assert!(ordinary.contains(&vec![0, 1, 1, 0]));
        assert!(ordinary.contains(&vec![0, 0, 1, 3]));
    }

    #[test]
    fn sequences_reject_bad_ranks() {
        assert!(minimal_sequences_a(1).is_err());
        assert!(minimal_sequences_a(11).is_err());
        let wide = Limits { sequence_rank: 11, ..Limits::default() };
        assert!(minimal_sequences_a_with(11, &wide).is_ok());
    }

    #[test]
    fn special_coefficients() {
        assert_eq!(special_coefficient(4, 2).unwrap(), 3);
        assert_eq!(special_coefficient(3, 3).unwrap(), 1);
        assert_eq!(special_coefficient(5, 4).unwrap(), 2);
        assert!(special_coefficient(5, 3).is_err());
        assert!(special_coefficient(4, 1).is_err());
    }

    #[test]
    fn norm_examples() {
        let s = |v: &[u64]| NSequence(v.to_vec());
        assert_eq!(norm_coefficient(4, &s(&[1, 2, 0, 0])).unwrap(), 1);
        assert_eq!(norm_coefficient(4, &s(&[0, 3, 0, 1])).unwrap(), 2);
        assert_eq!(norm_coefficient(4, &s(&[0, 0, 1, 3])).unwrap(), 1);
        assert!(norm_coefficient(4, &s(&[3, 1, 0, 0])).is_err());
        assert!(norm_coefficient(4, &s(&[5, 0, 0, 0])).is_err());
    }

    #[test]
    fn generation_oracle() {
        let t = ty("A2");
        let b = hilbert_basis(t).unwrap();
        let limits = Limits::default();
        assert!(brute_force_generation_check(t, int(0) - int(1), &[], &limits).unwrap());
        let bound = default_generation_bound(&b);
        assert!(brute_force_generation_check(t, bound, &b.weights(), &limits).unwrap());
        let mut fewer = b.weights();
        fewer.pop();
        assert!(!brute_force_generation_check(t, bound, &fewer, &limits).unwrap());
    }
}
