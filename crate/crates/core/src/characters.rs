//! Weyl characters on dominant weights (Freudenthal recursion), tensor
//! product decomposition and the orbit-sum / character change of basis.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Limits;
use crate::monoid::PsiTester;
use crate::rational::{int, Rational};
use crate::root_system::{cartan_data, CartanData, LieType, Weight};
use crate::weyl::{dominant_rep_in, orbit_in, weyl_group_order};

/// Serializes a weight-keyed map as a list of `[weight, value]` pairs.
mod weight_map {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<V: Serialize, S: Serializer>(m: &BTreeMap<Weight, V>, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(m.iter())
    }

    pub fn deserialize<'de, V: Deserialize<'de>, D: Deserializer<'de>>(d: D) -> std::result::Result<BTreeMap<Weight, V>, D::Error> {
        Ok(Vec::<(Weight, V)>::deserialize(d)?.into_iter().collect())
    }
}

mod rational_map {
    use super::*;
    use crate::rational::{parse_pq, to_pq};
    use serde::de::Error as _;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(m: &BTreeMap<Weight, Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(m.iter().map(|(w, c)| (w, to_pq(c))))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BTreeMap<Weight, Rational>, D::Error> {
        Vec::<(Weight, String)>::deserialize(d)?
            .into_iter()
            .map(|(w, s)| {
                parse_pq(&s).map(|c| (w, c)).ok_or_else(|| D::Error::custom(format!("bad rational {s:?}")))
            })
            .collect()
    }
}

/// Multiplicities of the dominant weights of `L(highest)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominantCharacter {
    pub highest: Weight,
    #[serde(with = "weight_map")]
    pub multiplicities: BTreeMap<Weight, u64>,
}

impl DominantCharacter {
    pub fn multiplicity(&self, mu: &Weight) -> u64 {
        self.multiplicities.get(mu).copied().unwrap_or(0)
    }
}

/// Finite combination of irreducible characters `χ(L(λ))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingElement {
    #[serde(with = "rational_map")]
    pub terms: BTreeMap<Weight, Rational>,
}

impl RingElement {
    pub fn zero() -> Self {
        RingElement { terms: BTreeMap::new() }
    }

    pub fn basis(lambda: Weight) -> Self {
        RingElement { terms: [(lambda, int(1))].into() }
    }

    pub fn coefficient(&self, lambda: &Weight) -> Rational {
        self.terms.get(lambda).copied().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, lambda: Weight, c: Rational) {
        let total = self.coefficient(&lambda) + c;
        if total.is_zero() {
            self.terms.remove(&lambda);
        } else {
            self.terms.insert(lambda, total);
        }
    }

    pub fn add(&self, other: &RingElement) -> RingElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), *c);
        }
        out
    }

    pub fn scale(&self, k: Rational) -> RingElement {
        if k.is_zero() {
            return RingElement::zero();
        }
        RingElement { terms: self.terms.iter().map(|(w, c)| (w.clone(), c * k)).collect() }
    }

    pub fn support(&self) -> impl Iterator<Item = &Weight> {
        self.terms.keys()
    }
}

/// Weyl dimension formula `∏_{α>0} (λ+ρ, α) / (ρ, α)`, in exact integers.
pub fn weyl_dimension(t: LieType, lambda: &Weight) -> Result<u128> {
    t.check_weight(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    dimension_in(&cartan_data(t), lambda)
}

fn pair_with_root(data: &CartanData, w: &Weight, root: &[i64]) -> i64 {
    // (λ_i, α_j) = δ_ij d_j
    (0..data.rank()).map(|j| w.0[j] * root[j] * data.symmetrizer[j]).sum()
}

fn dimension_in(data: &CartanData, lambda: &Weight) -> Result<u128> {
    let shifted = lambda.add(&Weight::rho(data.rank()));
    let (mut num, mut den) = (1u128, 1u128);
    for root in &data.positive_roots {
        let a = pair_with_root(data, &shifted, root) as u128;
        let b = (0..data.rank()).map(|j| root[j] * data.symmetrizer[j]).sum::<i64>() as u128;
        num = num.checked_mul(a).ok_or(Error::Overflow("weyl dimension"))?;
        den = den.checked_mul(b).ok_or(Error::Overflow("weyl dimension"))?;
        let g = num.gcd(&den);
        num /= g;
        den /= g;
    }
    if den != 1 {
        return Err(Error::Inconsistent(format!("non-integral dimension for {lambda}")));
    }
    Ok(num)
}

/// Dominant weights `μ ≤ λ` paired with their depth `ht(λ - μ)`.
fn dominant_below(data: &CartanData, lambda: &Weight, cap: usize) -> Result<Vec<(Weight, u64)>> {
    let n = data.rank();
    let rc = data.to_root_coords(lambda);
    let top: Vec<i64> = rc.0.iter().map(|c| c.floor().to_integer()).collect();
    let mut out = Vec::new();
    let mut c = vec![0i64; n];
    fn go(
        data: &CartanData,
        lambda: &Weight,
        top: &[i64],
        pos: usize,
        c: &mut Vec<i64>,
        out: &mut Vec<(Weight, u64)>,
        cap: usize,
    ) -> Result<()> {
        let n = top.len();
        if pos == n {
            let mut mu = lambda.clone();
            for j in 0..n {
                if c[j] != 0 {
                    for k in 0..n {
                        mu.0[k] -= c[j] * data.cartan[j][k];
                    }
                }
            }
            if mu.is_dominant() {
                if out.len() >= cap {
                    return Err(Error::BudgetExceeded {
                        what: "dominant weights below highest weight",
                        needed: cap as u128 + 1,
                        limit: cap as u128,
                        hint: None,
                    });
                }
                out.push((mu, c.iter().sum::<i64>() as u64));
            }
            return Ok(());
        }
        for v in 0..=top[pos] {
            c[pos] = v;
            go(data, lambda, top, pos + 1, c, out, cap)?;
        }
        c[pos] = 0;
        Ok(())
    }
    go(data, lambda, &top, 0, &mut c, &mut out, cap)?;
    out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| b.0.cmp(&a.0)));
    Ok(out)
}

/// Character computations for one type, caching irreducible characters.
pub struct CharacterEngine {
    lie_type: LieType,
    data: Arc<CartanData>,
    limits: Limits,
    characters: Mutex<HashMap<Weight, Arc<DominantCharacter>>>,
    orbit_sizes: Mutex<HashMap<Weight, u64>>,
}

impl CharacterEngine {
    pub fn new(t: LieType, limits: Limits) -> Result<Self> {
        if t.rank() > limits.character_rank {
            return Err(Error::BudgetExceeded {
                what: "character rank guard",
                needed: t.rank() as u128,
                limit: limits.character_rank as u128,
                hint: None,
            });
        }
        Ok(CharacterEngine {
            lie_type: t,
            data: cartan_data(t),
            limits,
            characters: Mutex::new(HashMap::new()),
            orbit_sizes: Mutex::new(HashMap::new()),
        })
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    fn check_dominant(&self, lambda: &Weight) -> Result<()> {
        self.lie_type.check_weight(lambda)?;
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        Ok(())
    }

    fn guard_dimension(&self, lambda: &Weight) -> Result<u128> {
        let dim = dimension_in(&self.data, lambda)?;
        if dim > self.limits.character_dim {
            return Err(Error::BudgetExceeded {
                what: "character dimension guard",
                needed: dim,
                limit: self.limits.character_dim,
                hint: None,
            });
        }
        Ok(dim)
    }

    pub fn dimension(&self, lambda: &Weight) -> Result<u128> {
        self.check_dominant(lambda)?;
        dimension_in(&self.data, lambda)
    }

    pub fn orbit_size(&self, mu: &Weight) -> Result<u64> {
        if let Some(&s) = self.orbit_sizes.lock().unwrap().get(mu) {
            return Ok(s);
        }
        let s = orbit_in(&self.data, mu, self.limits.orbit_size)?.size() as u64;
        self.orbit_sizes.lock().unwrap().insert(mu.clone(), s);
        Ok(s)
    }

    /// Freudenthal:
    /// `((λ+ρ,λ+ρ) − (μ+ρ,μ+ρ)) m(μ) = 2 Σ_{α>0} Σ_{k≥1} (μ+kα, α) m(μ+kα)`,
    /// evaluated layer by layer in depth below `λ`. Every term on the right
    /// has a dominant representative of smaller depth.
    pub fn character(&self, lambda: &Weight) -> Result<Arc<DominantCharacter>> {
        self.check_dominant(lambda)?;
        if let Some(c) = self.characters.lock().unwrap().get(lambda) {
            return Ok(c.clone());
        }
        self.guard_dimension(lambda)?;
        let data = &*self.data;
        let below = dominant_below(data, lambda, self.limits.orbit_size)?;
        let rho2 = Weight::rho(data.rank()).scale(2);
        let lambda_rc = data.to_root_coords(lambda);
        let mut mult: HashMap<Weight, u64> = HashMap::with_capacity(below.len());
        mult.insert(lambda.clone(), 1);
        let mut i = 1;
        while i < below.len() {
            let depth = below[i].1;
            let j = below[i..].iter().position(|x| x.1 != depth).map_or(below.len(), |p| i + p);
            let layer = &below[i..j];
            let values = self.limits.execution.map(layer, |(mu, _)| -> Result<u64> {
                let diff_rc = data.to_root_coords(mu);
                let c: Vec<i64> = (0..data.rank())
                    .map(|k| (lambda_rc.0[k] - diff_rc.0[k]).to_integer())
                    .collect();
                let den = pair_with_root(data, &lambda.add(mu).add(&rho2), &c);
                let mut num = 0i64;
                for (root, root_w) in data.positive_roots.iter().zip(&data.positive_root_weights) {
                    let mut nu = mu.add(root_w);
                    loop {
                        let dom = dominant_rep_in(data, &nu);
                        let Some(&m) = mult.get(&dom) else { break };
                        num += m as i64 * pair_with_root(data, &nu, root);
                        nu = nu.add(root_w);
                    }
                }
                let num = 2 * num;
                if den <= 0 || num % den != 0 {
                    return Err(Error::Inconsistent(format!(
                        "non-integral multiplicity at {mu} in L({lambda})"
                    )));
                }
                Ok((num / den) as u64)
            });
            for ((mu, _), v) in layer.iter().zip(values) {
                mult.insert(mu.clone(), v?);
            }
            i = j;
        }
        let ch = Arc::new(DominantCharacter {
            highest: lambda.clone(),
            multiplicities: mult.into_iter().filter(|(_, m)| *m > 0).collect(),
        });
        self.characters.lock().unwrap().insert(lambda.clone(), ch.clone());
        Ok(ch)
    }

    /// Every weight of `L(λ)` with its multiplicity, sorted.
    pub fn full_character(&self, lambda: &Weight) -> Result<Vec<(Weight, u64)>> {
        let ch = self.character(lambda)?;
        let mut out = Vec::new();
        for (mu, &m) in &ch.multiplicities {
            for w in orbit_in(&self.data, mu, self.limits.orbit_size)?.elements() {
                out.push((w.clone(), m));
            }
        }
        out.sort();
        Ok(out)
    }

    /// `χ(L(λ)) · χ(L(μ))` in the character basis: dominant multiplicities
    /// of the product are summed over the weights of the smaller factor,
    /// then irreducibles are peeled off from the top.
    pub fn tensor(&self, lambda: &Weight, mu: &Weight) -> Result<RingElement> {
        self.check_dominant(lambda)?;
        self.check_dominant(mu)?;
        let (dl, dm) = (self.guard_dimension(lambda)?, self.guard_dimension(mu)?);
        let (small, large) = if dl <= dm { (lambda, mu) } else { (mu, lambda) };
        let small_full = self.full_character(small)?;
        let large_ch = self.character(large)?;
        let top = lambda.add(mu);
        let data = &*self.data;
        let targets = dominant_below(data, &top, self.limits.orbit_size)?;
        let product: Vec<i64> = self.limits.execution.map(&targets, |(gamma, _)| {
            small_full
                .iter()
                .map(|(nu, m)| {
                    let rest = gamma.sub(nu);
                    *m as i64 * large_ch.multiplicity(&dominant_rep_in(data, &rest)) as i64
                })
                .sum()
        });
        let mut remaining: HashMap<Weight, i64> =
            targets.iter().map(|(g, _)| g.clone()).zip(product).collect();
        let mut out = RingElement::zero();
        for (gamma, _) in &targets {
            let c = remaining[gamma];
            if c == 0 {
                continue;
            }
            if c < 0 {
                return Err(Error::Inconsistent(format!("negative tensor coefficient at {gamma}")));
            }
            for (kappa, &k) in &self.character(gamma)?.multiplicities {
                *remaining.get_mut(kappa).expect("weights of L(γ) lie below λ+μ") -= c * k as i64;
            }
            out.add_term(gamma.clone(), int(c));
        }
        Ok(out)
    }

    pub fn multiply(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        let mut out = RingElement::zero();
        for (x, cx) in &a.terms {
            for (y, cy) in &b.terms {
                out = out.add(&self.tensor(x, y)?.scale(cx * cy));
            }
        }
        Ok(out)
    }

    /// `Σ_{w∈W} e^{w(λ)}` in the character basis, from the unitriangular
    /// recursion `o(μ) = χ(μ) − Σ_{ν<μ} K_{μν} o(ν)` on orbit sums `o`,
    /// scaled by `|W| / |O_λ|`.
    pub fn orbit_sum(&self, lambda: &Weight) -> Result<RingElement> {
        self.check_dominant(lambda)?;
        self.guard_dimension(lambda)?;
        let below = dominant_below(&self.data, lambda, self.limits.orbit_size)?;
        let mut orbit_sums: HashMap<Weight, RingElement> = HashMap::new();
        for (mu, _) in below.iter().rev() {
            let ch = self.character(mu)?;
            let mut o = RingElement::basis(mu.clone());
            for (nu, &k) in &ch.multiplicities {
                if nu != mu {
                    o = o.add(&orbit_sums[nu].scale(-int(k as i64)));
                }
            }
            orbit_sums.insert(mu.clone(), o);
        }
        let scale = weyl_group_order(self.lie_type) / self.orbit_size(lambda)?;
        Ok(orbit_sums.remove(lambda).expect("λ is among its own dominant weights").scale(int(scale as i64)))
    }

    /// `∏ χ(L(λ_i))^{a_i}` in the character basis.
    pub fn monomial(&self, exponents: &[u64]) -> Result<RingElement> {
        let n = self.lie_type.rank();
        if exponents.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: exponents.len() });
        }
        let top = Weight(exponents.iter().map(|&a| a as i64).collect());
        self.guard_dimension(&top)?;
        let mut acc = RingElement::basis(Weight::zero(n));
        for (i, &a) in exponents.iter().enumerate() {
            let fundamental = Weight::fundamental(n, i + 1);
            for _ in 0..a {
                let mut next = RingElement::zero();
                for (gamma, c) in &acc.terms {
                    next = next.add(&self.tensor(gamma, &fundamental)?.scale(*c));
                }
                acc = next;
            }
        }
        Ok(acc)
    }

    /// Whether every constituent of `z_λ = ∏ z_i^{λ_i}` lies in `Ψ`.
    pub fn theta_support(&self, lambda: &Weight) -> Result<bool> {
        self.check_dominant(lambda)?;
        let exps: Vec<u64> = lambda.0.iter().map(|&c| c as u64).collect();
        let expansion = self.monomial(&exps)?;
        let tester = PsiTester::new(self.lie_type);
        let all_in_psi = expansion.support().all(|g| tester.contains(g));
        Ok(all_in_psi)
    }
}

pub fn weight_multiplicities(t: LieType, lambda: &Weight) -> Result<DominantCharacter> {
    Ok((*CharacterEngine::new(t, Limits::default())?.character(lambda)?).clone())
}

pub fn tensor_decompose(t: LieType, lambda: &Weight, mu: &Weight) -> Result<RingElement> {
    CharacterEngine::new(t, Limits::default())?.tensor(lambda, mu)
}

pub fn orbit_sum_in_characters(t: LieType, lambda: &Weight) -> Result<RingElement> {
    CharacterEngine::new(t, Limits::default())?.orbit_sum(lambda)
}

pub fn monomial_expand(t: LieType, exponents: &[u64]) -> Result<RingElement> {
    CharacterEngine::new(t, Limits::default())?.monomial(exponents)
}

pub fn theta_support_check(t: LieType, lambda: &Weight) -> Result<bool> {
    CharacterEngine::new(t, Limits::default())?.theta_support(lambda)
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

    fn terms(r: &RingElement) -> Vec<(Vec<i64>, i64)> {
        r.terms.iter().map(|(k, v)| (k.0.clone(), v.to_integer())).collect()
    }

    #[test]
    fn multiplicity_examples() {
        let trivial = weight_multiplicities(ty("A2"), &w(&[0, 0])).unwrap();
        assert_eq!(trivial.multiplicities, [(w(&[0, 0]), 1)].into());
        let adj = weight_multiplicities(ty("A2"), &w(&[1, 1])).unwrap();
        assert_eq!(adj.multiplicities, [(w(&[1, 1]), 1), (w(&[0, 0]), 2)].into());
        let sym2 = weight_multiplicities(ty("A1"), &w(&[2])).unwrap();
        assert_eq!(sym2.multiplicities, [(w(&[2]), 1), (w(&[0]), 1)].into());
    }

    #[test]
    fn dimensions() {
        assert_eq!(weyl_dimension(ty("A2"), &w(&[1, 1])).unwrap(), 8);
        assert_eq!(weyl_dimension(ty("G2"), &w(&[0, 1])).unwrap(), 7);
        assert_eq!(weyl_dimension(ty("G2"), &w(&[1, 0])).unwrap(), 14);
        assert_eq!(weyl_dimension(ty("E8"), &w(&[0, 0, 0, 0, 0, 0, 0, 1])).unwrap(), 248);
        assert_eq!(weyl_dimension(ty("B3"), &w(&[0, 0, 1])).unwrap(), 8);
        assert_eq!(weyl_dimension(ty("C2"), &w(&[0, 1])).unwrap(), 5);
        assert!(weyl_dimension(ty("A2"), &w(&[-1, 0])).is_err());
    }

    #[test]
    fn full_dimension_matches_formula() {
        let e = CharacterEngine::new(ty("G2"), Limits::default()).unwrap();
        for lam in [w(&[1, 0]), w(&[0, 1]), w(&[2, 1]), w(&[1, 3])] {
            let total: u64 = e.full_character(&lam).unwrap().iter().map(|x| x.1).sum();
            assert_eq!(total as u128, e.dimension(&lam).unwrap());
        }
    }

    #[test]
    fn tensor_examples() {
        assert_eq!(
            terms(&tensor_decompose(ty("A2"), &w(&[1, 0]), &w(&[0, 1])).unwrap()),
            vec![(vec![0, 0], 1), (vec![1, 1], 1)]
        );
        assert_eq!(
            terms(&tensor_decompose(ty("A1"), &w(&[1]), &w(&[1])).unwrap()),
            vec![(vec![0], 1), (vec![2], 1)]
        );
        assert_eq!(
            terms(&tensor_decompose(ty("B2"), &w(&[1, 1]), &w(&[0, 0])).unwrap()),
            vec![(vec![1, 1], 1)]
        );
    }

    #[test]
    fn orbit_sum_examples() {
        assert_eq!(terms(&orbit_sum_in_characters(ty("A2"), &w(&[0, 0])).unwrap()), vec![(vec![0, 0], 6)]);
        assert_eq!(
            terms(&orbit_sum_in_characters(ty("A2"), &w(&[1, 1])).unwrap()),
            vec![(vec![0, 0], -2), (vec![1, 1], 1)]
        );
        assert_eq!(terms(&orbit_sum_in_characters(ty("A1"), &w(&[1])).unwrap()), vec![(vec![1], 1)]);
    }

    #[test]
    fn monomial_examples() {
        assert_eq!(terms(&monomial_expand(ty("A2"), &[0, 0]).unwrap()), vec![(vec![0, 0], 1)]);
        assert_eq!(
            terms(&monomial_expand(ty("A2"), &[1, 1]).unwrap()),
            vec![(vec![0, 0], 1), (vec![1, 1], 1)]
        );
        assert_eq!(terms(&monomial_expand(ty("A1"), &[2]).unwrap()), vec![(vec![0], 1), (vec![2], 1)]);
    }

    #[test]
    fn theta_examples() {
        for lam in [w(&[0, 0]), w(&[1, 1]), w(&[3, 0])] {
            assert!(theta_support_check(ty("A2"), &lam).unwrap());
        }
        assert!(!theta_support_check(ty("A2"), &w(&[1, 0])).unwrap());
    }

    #[test]
    fn guards() {
        assert!(matches!(weight_multiplicities(ty("A5"), &Weight::zero(5)), Err(Error::BudgetExceeded { .. })));
        assert!(matches!(
            weight_multiplicities(ty("A4"), &w(&[20, 20, 20, 20])),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn ring_element_serde_round_trip() {
        let r = orbit_sum_in_characters(ty("A2"), &w(&[1, 1])).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(s, r#"{"terms":[[[0,0],"-2/1"],[[1,1],"1/1"]]}"#);
        assert_eq!(serde_json::from_str::<RingElement>(&s).unwrap(), r);
    }
}
