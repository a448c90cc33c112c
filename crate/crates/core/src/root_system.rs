//! Cartan data for the finite-type simple Lie algebras.
//!
//! Nodes are numbered as in the usual Bourbaki diagrams: the E-series branch
//! node is 2 (attached to 4), B_n has its short simple root at node n, C_n its
//! long one at node n, F_4 is long at 1 and 2, and G_2 is long at node 1.
//!
//! Row i of the Cartan matrix holds the fundamental-weight coordinates of the
//! simple root alpha_i, i.e. `cartan[i][j] = <alpha_i, alpha_j^vee>`.
//! Public operations take 1-based node indices.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{int, invert, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] =
        [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G];
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            other => Err(Error::InvalidType(format!(
                "unknown family {other:?}; expected one of A, B, C, D, E, F, G"
            ))),
        }
    }
}

/// An admissible (family, rank) pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl TryFrom<String> for LieType {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<LieType> for String {
    fn from(t: LieType) -> Self {
        t.to_string()
    }
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            return Ok(LieType { family, rank });
        }
        let msg = match family {
            Family::A => "rank must be ≥ 1 for family A".to_string(),
            Family::B | Family::C => format!("rank must be ≥ 2 for family {family}"),
            Family::D => "rank must be ≥ 4 for family D".to_string(),
            Family::E => "rank must be 6, 7 or 8 for family E".to_string(),
            Family::F => "rank must be 4 for family F".to_string(),
            Family::G => "rank must be 2 for family G".to_string(),
        };
        Err(Error::InvalidType(msg))
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Every admissible type with classical rank at most `max_classical`,
    /// followed by the exceptional types.
    pub fn all_up_to(max_classical: usize) -> Vec<LieType> {
        let mut out = Vec::new();
        for family in [Family::A, Family::B, Family::C, Family::D] {
            for rank in 1..=max_classical {
                if let Ok(t) = LieType::new(family, rank) {
                    out.push(t);
                }
            }
        }
        for (family, rank) in
            [(Family::E, 6), (Family::E, 7), (Family::E, 8), (Family::F, 4), (Family::G, 2)]
        {
            out.push(LieType { family, rank });
        }
        out
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, got: w.rank() });
        }
        Ok(())
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank {
            return Err(Error::IndexOutOfRange { index: i, rank: self.rank });
        }
        Ok(())
    }

    /// Dynkin edges `(long, short, multiplicity)` with 0-based nodes. For
    /// simple bonds the orientation carries no meaning.
    fn edges(&self) -> Vec<(usize, usize, i64)> {
        let n = self.rank;
        let chain = |upto: usize| (0..upto).map(|i| (i, i + 1, 1)).collect::<Vec<_>>();
        match self.family {
            Family::A => chain(n - 1),
            Family::B => {
                let mut e = chain(n - 2);
                e.push((n - 2, n - 1, 2));
                e
            }
            Family::C => {
                let mut e = chain(n - 2);
                e.push((n - 1, n - 2, 2));
                e
            }
            Family::D => {
                let mut e = chain(n - 2);
                e.push((n - 3, n - 1, 1));
                e
            }
            Family::E => {
                let mut e = vec![(0, 2, 1), (2, 3, 1), (1, 3, 1)];
                e.extend((3..n - 1).map(|i| (i, i + 1, 1)));
                e
            }
            Family::F => vec![(0, 1, 1), (1, 2, 2), (2, 3, 1)],
            Family::G => vec![(0, 1, 3)],
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for LieType {
    type Err = Error;

    /// Parses labels such as `"D5"` or `"e6"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (fam, rank) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
        let family: Family = fam.parse()?;
        let rank: usize = rank
            .parse()
            .map_err(|_| Error::InvalidType(format!("cannot parse rank in {s:?}")))?;
        LieType::new(family, rank)
    }
}

/// Integer coordinates in the fundamental-weight basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The fundamental weight lambda_i (1-based).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Weight::zero(rank);
        w.0[i - 1] = 1;
        w
    }

    /// Sum of fundamental weights (rho).
    pub fn rho(rank: usize) -> Self {
        Weight(vec![1; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    /// Componentwise `self <= other`.
    pub fn le_componentwise(&self, other: &Weight) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn coefficient_sum(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Comma-separated integers, optionally wrapped in parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        if body.trim().is_empty() {
            return Err(Error::InvalidType(format!("empty weight vector {s:?}")));
        }
        body.split(',')
            .map(|p| {
                p.trim().parse::<i64>().map_err(|_| {
                    Error::InvalidType(format!(
                        "malformed weight vector {s:?}: expected comma-separated integers"
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

/// Exact rational coordinates in the simple-root basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootCoords(pub Vec<Rational>);

impl RootCoords {
    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|c| !c.is_negative())
    }

    pub fn to_integers(&self) -> Option<Vec<i64>> {
        self.0.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CartanData {
    pub lie_type: LieType,
    /// `cartan[i]` = fundamental-weight coordinates of alpha_{i+1}.
    pub cartan: Vec<Vec<i64>>,
    /// `d_i` with `cartan[i][j] * d_j == cartan[j][i] * d_i`; short roots have `d = 1`.
    pub symmetrizer: Vec<i64>,
    /// `(cartan^T)^{-1}`; column i holds lambda_{i+1} in root coordinates.
    pub inv_cartan_transpose: Vec<Vec<Rational>>,
    /// Integer root coordinates, sorted by height then lexicographically.
    pub positive_roots: Vec<Vec<i64>>,
    /// The same roots in fundamental-weight coordinates.
    pub positive_root_weights: Vec<Weight>,
    /// `gram[i][j] = (lambda_i, lambda_j)`.
    pub gram: Vec<Vec<Rational>>,
}

impl CartanData {
    fn build(t: LieType) -> CartanData {
        let n = t.rank;
        let mut cartan = vec![vec![0i64; n]; n];
        for (i, row) in cartan.iter_mut().enumerate() {
            row[i] = 2;
        }
        let edges = t.edges();
        for &(long, short, mult) in &edges {
            cartan[long][short] = -mult;
            cartan[short][long] = -1;
        }

        let symmetrizer = symmetrizer(&cartan, &edges);
        let transpose: Vec<Vec<Rational>> =
            (0..n).map(|i| (0..n).map(|j| int(cartan[j][i])).collect()).collect();
        let inv_cartan_transpose =
            invert(&transpose).expect("Cartan matrices of finite type are nonsingular");

        let gram = (0..n)
            .map(|i| {
                (0..n).map(|k| inv_cartan_transpose[k][i] * int(symmetrizer[k])).collect()
            })
            .collect();

        let positive_roots = positive_roots_closure(&cartan);
        let positive_root_weights = positive_roots
            .iter()
            .map(|c| {
                Weight((0..n).map(|k| (0..n).map(|j| c[j] * cartan[j][k]).sum()).collect())
            })
            .collect();

        CartanData {
            lie_type: t,
            cartan,
            symmetrizer,
            inv_cartan_transpose,
            positive_roots,
            positive_root_weights,
            gram,
        }
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank
    }

    /// Simple root alpha_{i+1} as a weight (0-based).
    pub fn simple_root(&self, i: usize) -> Weight {
        Weight(self.cartan[i].clone())
    }

    pub fn to_root_coords(&self, w: &Weight) -> RootCoords {
        let n = self.rank();
        RootCoords(
            (0..n)
                .map(|j| {
                    (0..n)
                        .filter(|&i| w.0[i] != 0)
                        .map(|i| self.inv_cartan_transpose[j][i] * int(w.0[i]))
                        .sum()
                })
                .collect(),
        )
    }

    /// Inverse of [`CartanData::to_root_coords`]; `None` when the result is
    /// not an integral weight.
    pub fn to_weight(&self, c: &RootCoords) -> Option<Weight> {
        let n = self.rank();
        (0..n)
            .map(|k| {
                let v: Rational = (0..n).map(|j| c.0[j] * int(self.cartan[j][k])).sum();
                v.is_integer().then(|| v.to_integer())
            })
            .collect::<Option<Vec<_>>>()
            .map(Weight)
    }

    pub fn inner(&self, a: &Weight, b: &Weight) -> Rational {
        let n = self.rank();
        let mut acc = Rational::zero();
        for i in 0..n {
            if a.0[i] == 0 {
                continue;
            }
            for k in 0..n {
                if b.0[k] != 0 {
                    acc += self.gram[i][k] * int(a.0[i] * b.0[k]);
                }
            }
        }
        acc
    }

    /// `s_i(w) = w - w_i alpha_i` for 0-based `i`.
    pub fn reflect(&self, i: usize, w: &Weight) -> Weight {
        let c = w.0[i];
        if c == 0 {
            return w.clone();
        }
        Weight(w.0.iter().zip(&self.cartan[i]).map(|(a, r)| a - c * r).collect())
    }
}

fn symmetrizer(cartan: &[Vec<i64>], edges: &[(usize, usize, i64)]) -> Vec<i64> {
    let n = cartan.len();
    let mut d: Vec<Option<Rational>> = vec![None; n];
    d[0] = Some(int(1));
    // the diagram is connected, so repeated sweeps over the edges settle every node
    while d.iter().any(|x| x.is_none()) {
        for &(a, b, _) in edges {
            match (d[a], d[b]) {
                (Some(da), None) => d[b] = Some(da * int(cartan[b][a]) / int(cartan[a][b])),
                (None, Some(db)) => d[a] = Some(db * int(cartan[a][b]) / int(cartan[b][a])),
                _ => {}
            }
        }
    }
    let d: Vec<Rational> = d.into_iter().map(Option::unwrap).collect();
    let den = d.iter().fold(1i64, |acc, x| acc.lcm(x.denom()));
    let ints: Vec<i64> = d.iter().map(|x| (x * int(den)).to_integer()).collect();
    let g = ints.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    ints.into_iter().map(|x| x / g).collect()
}

fn positive_roots_closure(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let simple: Vec<Vec<i64>> =
        (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    let mut seen: HashSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut queue = simple;
    let mut out = Vec::new();
    while let Some(beta) = queue.pop() {
        for i in 0..n {
            // <beta, alpha_i^vee>
            let pairing: i64 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
            if pairing == 0 {
                continue;
            }
            let mut next = beta.clone();
            next[i] -= pairing;
            if next.iter().all(|&c| c >= 0) && next.iter().any(|&c| c > 0) && seen.insert(next.clone()) {
                queue.push(next);
            }
        }
        out.push(beta);
    }
    out.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| a.cmp(b))
    });
    out
}

/// Memoized Cartan data for `t`.
pub fn cartan_data(t: LieType) -> Arc<CartanData> {
    static CACHE: OnceLock<Mutex<HashMap<LieType, Arc<CartanData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(d) = cache.lock().unwrap().get(&t) {
        return Arc::clone(d);
    }
    let data = Arc::new(CartanData::build(t));
    cache.lock().unwrap().entry(t).or_insert(data).clone()
}

pub fn cartan_matrix(t: LieType) -> Vec<Vec<i64>> {
    cartan_data(t).cartan.clone()
}

/// lambda_i in simple-root coordinates (1-based `i`).
pub fn fundamental_weight_in_roots(t: LieType, i: usize) -> Result<RootCoords> {
    t.check_index(i)?;
    let data = cartan_data(t);
    Ok(RootCoords(data.inv_cartan_transpose.iter().map(|row| row[i - 1]).collect()))
}

pub fn weight_to_root_coords(t: LieType, w: &Weight) -> Result<RootCoords> {
    t.check_weight(w)?;
    Ok(cartan_data(t).to_root_coords(w))
}

pub fn root_to_weight_coords(t: LieType, c: &RootCoords) -> Result<Option<Weight>> {
    if c.0.len() != t.rank {
        return Err(Error::DimensionMismatch { expected: t.rank, got: c.0.len() });
    }
    Ok(cartan_data(t).to_weight(c))
}

/// The invariant form, normalized so short roots have squared length 2.
pub fn inner_product(t: LieType, a: &Weight, b: &Weight) -> Result<Rational> {
    t.check_weight(a)?;
    t.check_weight(b)?;
    Ok(cartan_data(t).inner(a, b))
}

pub fn positive_roots(t: LieType) -> Vec<RootCoords> {
    cartan_data(t)
        .positive_roots
        .iter()
        .map(|c| RootCoords(c.iter().map(|&x| int(x)).collect()))
        .collect()
}

/// Number of positive roots, from the classical formulas.
pub fn positive_root_count(t: LieType) -> usize {
    let n = t.rank;
    match t.family {
        Family::A => n * (n + 1) / 2,
        Family::B | Family::C => n * n,
        Family::D => n * (n - 1),
        Family::E => match n {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        Family::F => 24,
        Family::G => 6,
    }
}

/// |det A| = [Lambda : Q].
pub fn cartan_determinant(t: LieType) -> i64 {
    let n = t.rank;
    match t.family {
        Family::A => (n + 1) as i64,
        Family::B | Family::C => 2,
        Family::D => 4,
        Family::E => 9 - n as i64,
        Family::F | Family::G => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn ty(s: &str) -> LieType {
        s.parse().unwrap()
    }

    #[test]
    fn admissible_types() {
        assert!(LieType::new(Family::A, 1).is_ok());
        assert!(LieType::new(Family::B, 1).is_err());
        assert!(LieType::new(Family::D, 3).is_err());
        assert!(LieType::new(Family::E, 9).is_err());
        assert!(LieType::new(Family::F, 5).is_err());
        let err = LieType::new(Family::A, 0).unwrap_err();
        assert_eq!(err.to_string(), "rank must be ≥ 1 for family A");
        assert_eq!(ty("e6"), LieType::new(Family::E, 6).unwrap());
        assert!("X3".parse::<LieType>().is_err());
    }

    #[test]
    fn cartan_examples() {
        assert_eq!(cartan_matrix(ty("G2")), vec![vec![2, -3], vec![-1, 2]]);
        assert_eq!(cartan_matrix(ty("A1")), vec![vec![2]]);
        assert_eq!(cartan_matrix(ty("A2")), vec![vec![2, -1], vec![-1, 2]]);
        assert_eq!(cartan_matrix(ty("B2")), vec![vec![2, -2], vec![-1, 2]]);
    }

    #[test]
    fn cartan_entries_and_symmetrizer() {
        for t in LieType::all_up_to(12) {
            let d = cartan_data(t);
            let n = t.rank();
            for i in 0..n {
                assert_eq!(d.cartan[i][i], 2);
                for j in 0..n {
                    if i != j {
                        assert!([0, -1, -2, -3].contains(&d.cartan[i][j]), "{t}");
                        assert_eq!(d.cartan[i][j] == 0, d.cartan[j][i] == 0);
                        assert_eq!(d.cartan[i][j] * d.symmetrizer[j], d.cartan[j][i] * d.symmetrizer[i]);
                    }
                }
            }
            assert!(d.symmetrizer.iter().all(|&x| x >= 1) && d.symmetrizer.contains(&1));
        }
        assert_eq!(cartan_data(ty("G2")).symmetrizer, vec![3, 1]);
        assert_eq!(cartan_data(ty("B3")).symmetrizer, vec![2, 2, 1]);
        assert_eq!(cartan_data(ty("C3")).symmetrizer, vec![1, 1, 2]);
        assert_eq!(cartan_data(ty("F4")).symmetrizer, vec![2, 2, 1, 1]);
    }

    #[test]
    fn inverse_transpose_is_exact() {
        for t in LieType::all_up_to(12) {
            let d = cartan_data(t);
            let n = t.rank();
            for i in 0..n {
                for j in 0..n {
                    let v: Rational =
                        (0..n).map(|k| int(d.cartan[k][i]) * d.inv_cartan_transpose[k][j]).sum();
                    assert_eq!(v, int(i64::from(i == j)), "{t}");
                }
            }
        }
    }

    #[test]
    fn fundamental_weight_examples() {
        let g2 = fundamental_weight_in_roots(ty("G2"), 1).unwrap();
        assert_eq!(g2.0, vec![int(2), int(3)]);
        let a2 = fundamental_weight_in_roots(ty("A2"), 1).unwrap();
        assert_eq!(a2.0, vec![frac(2, 3), frac(1, 3)]);
        let d5 = fundamental_weight_in_roots(ty("D5"), 4).unwrap();
        assert_eq!(d5.0, vec![frac(1, 2), int(1), frac(3, 2), frac(5, 4), frac(3, 4)]);
        assert!(matches!(
            fundamental_weight_in_roots(ty("A2"), 3),
            Err(Error::IndexOutOfRange { index: 3, rank: 2 })
        ));
    }

    #[test]
    fn base_change_examples() {
        let a4 = ty("A4");
        let c = weight_to_root_coords(a4, &Weight(vec![5, 0, 0, 0])).unwrap();
        assert_eq!(c.0, vec![int(4), int(3), int(2), int(1)]);
        let z = weight_to_root_coords(a4, &Weight::zero(4)).unwrap();
        assert!(z.0.iter().all(|x| x.is_zero()));
        assert_eq!(root_to_weight_coords(a4, &c).unwrap(), Some(Weight(vec![5, 0, 0, 0])));
        assert!(weight_to_root_coords(a4, &Weight(vec![1])).is_err());
        let half = RootCoords(vec![frac(1, 2), int(0), int(0), int(0)]);
        assert_eq!(root_to_weight_coords(a4, &half).unwrap(), None);
    }

    #[test]
    fn inner_product_examples() {
        let a1 = ty("A1");
        let l1 = Weight(vec![1]);
        assert_eq!(inner_product(a1, &l1, &l1).unwrap(), frac(1, 2));
        assert_eq!(inner_product(a1, &Weight::zero(1), &l1).unwrap(), int(0));
        // alpha_1 is the long simple root of G2 in this numbering
        let g2 = ty("G2");
        let alpha1 = Weight(vec![2, -3]);
        let alpha2 = Weight(vec![-1, 2]);
        assert_eq!(inner_product(g2, &alpha1, &alpha1).unwrap(), int(6));
        assert_eq!(inner_product(g2, &alpha2, &alpha2).unwrap(), int(2));
        for t in LieType::all_up_to(8) {
            let d = cartan_data(t);
            for i in 0..t.rank() {
                let a = d.simple_root(i);
                assert_eq!(d.inner(&a, &a), int(2 * d.symmetrizer[i]), "{t}");
            }
        }
    }

    #[test]
    fn positive_root_examples() {
        let a2: Vec<Vec<i64>> = cartan_data(ty("A2")).positive_roots.clone();
        assert_eq!(a2, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(positive_roots(ty("G2")).len(), 6);
        assert_eq!(positive_roots(ty("A1")), vec![RootCoords(vec![int(1)])]);
        for t in LieType::all_up_to(12) {
            let roots = positive_roots(t);
            assert_eq!(roots.len(), positive_root_count(t), "{t}");
            assert!(roots.iter().all(|r| r.is_nonnegative() && r.is_integral()));
        }
    }

    #[test]
    fn weight_parsing() {
        assert_eq!("1,0,-2".parse::<Weight>().unwrap(), Weight(vec![1, 0, -2]));
        assert_eq!("(3, 4)".parse::<Weight>().unwrap(), Weight(vec![3, 4]));
        assert!("1,x".parse::<Weight>().is_err());
        assert_eq!(Weight(vec![1, -2]).to_string(), "(1,-2)");
    }
}
