//! Weyl group action on weights.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_system::{cartan_data, CartanData, Family, LieType, Weight};

/// A full W-orbit. Elements are kept unordered; [`WeylOrbit::sorted`] gives
/// the canonical lexicographic order used for output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylOrbit {
    dominant_rep: Weight,
    elements: HashSet<Weight>,
}

impl WeylOrbit {
    pub fn dominant_rep(&self) -> &Weight {
        &self.dominant_rep
    }

    pub fn elements(&self) -> &HashSet<Weight> {
        &self.elements
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.elements.contains(w)
    }

    pub fn sorted(&self) -> Vec<Weight> {
        let mut v: Vec<Weight> = self.elements.iter().cloned().collect();
        v.sort();
        v
    }
}

/// Serialized orbit: sorted elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitListing {
    pub dominant: Weight,
    pub size: usize,
    pub elements: Vec<Weight>,
}

impl From<&WeylOrbit> for OrbitListing {
    fn from(o: &WeylOrbit) -> Self {
        OrbitListing { dominant: o.dominant_rep.clone(), size: o.size(), elements: o.sorted() }
    }
}

/// `s_i(w)` for 1-based `i`.
pub fn simple_reflection(t: LieType, i: usize, w: &Weight) -> Result<Weight> {
    t.check_index(i)?;
    t.check_weight(w)?;
    Ok(cartan_data(t).reflect(i - 1, w))
}

/// Reflect at the leftmost negative coordinate until dominant.
pub(crate) fn dominant_rep_in(data: &CartanData, w: &Weight) -> Weight {
    let mut cur = w.clone();
    while let Some(i) = cur.0.iter().position(|&c| c < 0) {
        cur = data.reflect(i, &cur);
    }
    cur
}

pub fn dominant_representative(t: LieType, w: &Weight) -> Result<Weight> {
    t.check_weight(w)?;
    Ok(dominant_rep_in(&cartan_data(t), w))
}

pub(crate) fn orbit_in(data: &CartanData, w: &Weight, guard: usize) -> Result<WeylOrbit> {
    let dominant_rep = dominant_rep_in(data, w);
    let mut elements = HashSet::new();
    elements.insert(dominant_rep.clone());
    let mut frontier = vec![dominant_rep.clone()];
    while let Some(cur) = frontier.pop() {
        for i in 0..data.rank() {
            if cur.0[i] == 0 {
                continue;
            }
            let next = data.reflect(i, &cur);
            if !elements.contains(&next) {
                if elements.len() >= guard {
                    return Err(Error::OrbitGuard { guard, partial: elements.len() });
                }
                elements.insert(next.clone());
                frontier.push(next);
            }
        }
    }
    Ok(WeylOrbit { dominant_rep, elements })
}

/// Breadth-first closure of `w` under the simple reflections.
pub fn orbit(t: LieType, w: &Weight, size_guard: usize) -> Result<WeylOrbit> {
    t.check_weight(w)?;
    orbit_in(&cartan_data(t), w, size_guard)
}

pub fn weyl_group_order(t: LieType) -> u64 {
    let n = t.rank() as u64;
    let fact = |k: u64| (1..=k).product::<u64>();
    match t.family() {
        Family::A => fact(n + 1),
        Family::B | Family::C => (1u64 << n) * fact(n),
        Family::D => (1u64 << (n - 1)) * fact(n),
        Family::E => match n {
            6 => 51_840,
            7 => 2_903_040,
            _ => 696_729_600,
        },
        Family::F => 1152,
        Family::G => 12,
    }
}

/// `mu < lambda`: `lambda - mu` is a nonzero sum of simple roots with
/// nonnegative integer coefficients.
pub fn dominance_less(t: LieType, mu: &Weight, lambda: &Weight) -> Result<bool> {
    t.check_weight(mu)?;
    t.check_weight(lambda)?;
    Ok(dominance_less_in(&cartan_data(t), mu, lambda))
}

pub(crate) fn dominance_less_in(data: &CartanData, mu: &Weight, lambda: &Weight) -> bool {
    let diff = lambda.sub(mu);
    if diff.is_zero() {
        return false;
    }
    data.to_root_coords(&diff).to_integers().is_some_and(|c| c.iter().all(|&x| x >= 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> LieType {
        s.parse().unwrap()
    }

    #[test]
    fn reflection_examples() {
        let a2 = ty("A2");
        assert_eq!(simple_reflection(a2, 1, &Weight::zero(2)).unwrap(), Weight::zero(2));
        assert_eq!(simple_reflection(a2, 1, &Weight(vec![1, 0])).unwrap(), Weight(vec![-1, 1]));
        assert!(simple_reflection(a2, 3, &Weight(vec![1, 0])).is_err());
    }

    #[test]
    fn dominant_examples() {
        let a2 = ty("A2");
        let w = Weight(vec![2, 1]);
        assert_eq!(dominant_representative(a2, &w).unwrap(), w);
        assert_eq!(dominant_representative(a2, &Weight(vec![-1, 1])).unwrap(), Weight(vec![1, 0]));
        assert_eq!(dominant_representative(a2, &Weight(vec![-1, -1])).unwrap(), Weight(vec![1, 1]));
    }

    #[test]
    fn orbit_examples() {
        let a2 = ty("A2");
        assert_eq!(orbit(a2, &Weight::zero(2), 10).unwrap().size(), 1);
        assert_eq!(orbit(a2, &Weight(vec![1, 0]), 10).unwrap().size(), 3);
        assert_eq!(orbit(a2, &Weight(vec![1, 1]), 10).unwrap().size(), 6);
        match orbit(a2, &Weight(vec![1, 1]), 4) {
            Err(Error::OrbitGuard { guard: 4, partial }) => assert!(partial >= 4),
            other => panic!("expected guard error, got {other:?}"),
        }
    }

    #[test]
    fn group_orders_match_regular_orbits() {
        for t in LieType::all_up_to(4) {
            if t.rank() > 4 {
                continue;
            }
            let o = orbit(t, &Weight::rho(t.rank()), 1_000_000).unwrap();
            assert_eq!(o.size() as u64, weyl_group_order(t), "{t}");
        }
        assert_eq!(weyl_group_order(ty("A1")), 2);
        assert_eq!(weyl_group_order(ty("G2")), 12);
    }

    #[test]
    fn dominance_examples() {
        let a2 = ty("A2");
        let l = Weight(vec![1, 1]);
        assert!(!dominance_less(a2, &l, &l).unwrap());
        assert!(dominance_less(a2, &Weight::zero(2), &l).unwrap());
        assert!(!dominance_less(a2, &Weight(vec![1, 0]), &Weight(vec![0, 1])).unwrap());
    }
}
