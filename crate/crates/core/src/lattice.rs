//! Full-rank integer lattices in fundamental-weight coordinates, kept in
//! row-style Hermite normal form so that equality is matrix equality.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_system::{cartan_data, Family, LieType, Weight};

/// Upper-triangular basis with positive pivots; entries above each pivot
/// lie in `[0, pivot)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntegerLattice {
    hnf_basis: Vec<Vec<i64>>,
}

impl IntegerLattice {
    /// Lattice spanned by `generators`; fails unless they span a full-rank
    /// sublattice of Z^dim.
    pub fn from_generators(generators: &[Vec<i64>], dim: usize) -> Result<Self> {
        let rows: Vec<Vec<i128>> =
            generators.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: rows.iter().map(Vec::len).find(|&l| l != dim).unwrap_or(0),
            });
        }
        let h = hermite_normal_form(rows, dim)?;
        if h.len() != dim {
            return Err(Error::NotApplicable {
                operation: "lattice construction",
                subject: format!("generators of rank {} < {dim}", h.len()),
            });
        }
        let hnf_basis = h
            .into_iter()
            .map(|r| r.into_iter().map(i64::try_from).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| Error::Overflow("hermite normal form"))?;
        Ok(IntegerLattice { hnf_basis })
    }

    pub fn identity(dim: usize) -> Self {
        IntegerLattice {
            hnf_basis: (0..dim).map(|i| (0..dim).map(|j| i64::from(i == j)).collect()).collect(),
        }
    }

    pub fn hnf_basis(&self) -> &[Vec<i64>] {
        &self.hnf_basis
    }

    pub fn dim(&self) -> usize {
        self.hnf_basis.len()
    }

    /// |det| of the basis, i.e. the index in Z^dim.
    pub fn determinant(&self) -> i64 {
        (0..self.dim()).map(|i| self.hnf_basis[i][i]).product()
    }

    pub fn scale(&self, k: i64) -> Self {
        let gens: Vec<Vec<i64>> =
            self.hnf_basis.iter().map(|r| r.iter().map(|x| x * k).collect()).collect();
        IntegerLattice::from_generators(&gens, self.dim()).expect("nonzero scaling keeps full rank")
    }

    pub fn sum(&self, other: &IntegerLattice) -> Result<Self> {
        let mut gens = self.hnf_basis.clone();
        gens.extend(other.hnf_basis.iter().cloned());
        IntegerLattice::from_generators(&gens, self.dim())
    }

    pub fn with_vector(&self, v: &Weight) -> Result<Self> {
        let mut gens = self.hnf_basis.clone();
        gens.push(v.0.clone());
        IntegerLattice::from_generators(&gens, self.dim())
    }

    /// Intersection via the HNF of `[[B1, B1], [B2, 0]]`: the rows whose first
    /// block vanishes carry a basis of `L1 ∩ L2` in their second block.
    pub fn intersect(&self, other: &IntegerLattice) -> Result<Self> {
        let n = self.dim();
        let mut rows: Vec<Vec<i128>> = Vec::with_capacity(2 * n);
        for r in &self.hnf_basis {
            let mut row: Vec<i128> = r.iter().map(|&x| x as i128).collect();
            row.extend(r.iter().map(|&x| x as i128));
            rows.push(row);
        }
        for r in &other.hnf_basis {
            let mut row: Vec<i128> = r.iter().map(|&x| x as i128).collect();
            row.extend(std::iter::repeat_n(0, n));
            rows.push(row);
        }
        let h = hermite_normal_form(rows, 2 * n)?;
        let tail: Vec<Vec<i64>> = h
            .iter()
            .filter(|row| row[..n].iter().all(|&x| x == 0))
            .map(|row| row[n..].iter().map(|&x| x as i64).collect())
            .collect();
        IntegerLattice::from_generators(&tail, n)
    }

    /// Back-substitution against the triangular basis.
    pub fn contains(&self, w: &Weight) -> bool {
        if w.rank() != self.dim() {
            return false;
        }
        let mut rest: Vec<i128> = w.0.iter().map(|&x| x as i128).collect();
        for (j, row) in self.hnf_basis.iter().enumerate() {
            let p = row[j] as i128;
            if rest[j] % p != 0 {
                return false;
            }
            let c = rest[j] / p;
            if c != 0 {
                for (k, &x) in row.iter().enumerate().skip(j) {
                    rest[k] -= c * x as i128;
                }
            }
        }
        true
    }

    pub fn contains_lattice(&self, other: &IntegerLattice) -> bool {
        other.hnf_basis.iter().all(|r| self.contains(&Weight(r.clone())))
    }
}

impl fmt::Display for IntegerLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.hnf_basis {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>4}")).collect();
            writeln!(f, "[{}]", cells.join(""))?;
        }
        Ok(())
    }
}

/// Row-style HNF of an integer matrix with `cols` columns; zero rows dropped.
pub fn hermite_normal_form(mut a: Vec<Vec<i128>>, cols: usize) -> Result<Vec<Vec<i128>>> {
    let m = a.len();
    let mut p = 0;
    for col in 0..cols {
        if p == m {
            break;
        }
        for i in p + 1..m {
            if a[i][col] == 0 {
                continue;
            }
            if a[p][col] == 0 {
                a.swap(p, i);
                continue;
            }
            let (x, y) = (a[p][col], a[i][col]);
            let e = x.extended_gcd(&y);
            let (g, s, t) = (e.gcd, e.x, e.y);
            let (xg, yg) = (x / g, y / g);
            for c in col..cols {
                let (u, v) = (a[p][c], a[i][c]);
                let top = s.checked_mul(u).zip(t.checked_mul(v)).and_then(|(l, r)| l.checked_add(r));
                let bot = xg.checked_mul(v).zip(yg.checked_mul(u)).and_then(|(l, r)| l.checked_sub(r));
                match (top, bot) {
                    (Some(tp), Some(bt)) => {
                        a[p][c] = tp;
                        a[i][c] = bt;
                    }
                    _ => return Err(Error::Overflow("hermite normal form")),
                }
            }
        }
        if a[p][col] == 0 {
            continue;
        }
        if a[p][col] < 0 {
            for x in a[p].iter_mut() {
                *x = -*x;
            }
        }
        let pivot = a[p][col];
        for r in 0..p {
            let q = Integer::div_floor(&a[r][col], &pivot);
            if q != 0 {
                for c in col..cols {
                    let v = a[p][c];
                    a[r][c] = a[r][c]
                        .checked_sub(q.checked_mul(v).ok_or(Error::Overflow("hermite normal form"))?)
                        .ok_or(Error::Overflow("hermite normal form"))?;
                }
            }
        }
        p += 1;
    }
    a.truncate(p);
    Ok(a)
}

/// The four shapes `Q ∩ 2Λ` can take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LatticeCase {
    /// `2Q`, strictly smaller than `2Λ`.
    #[serde(rename = "TwoQ_strict")]
    TwoQStrict,
    /// `2Λ`, strictly larger than `2Q`.
    #[serde(rename = "TwoLambda_strict")]
    TwoLambdaStrict,
    /// `2Q = 2Λ`.
    #[serde(rename = "TwoQ_equals_TwoLambda")]
    TwoQEqualsTwoLambda,
    /// `2Q + Z alpha_diamond`.
    #[serde(rename = "TwoQ_plus_diamond")]
    TwoQPlusDiamond,
}

impl fmt::Display for LatticeCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LatticeCase::TwoQStrict => "TwoQ_strict",
            LatticeCase::TwoLambdaStrict => "TwoLambda_strict",
            LatticeCase::TwoQEqualsTwoLambda => "TwoQ_equals_TwoLambda",
            LatticeCase::TwoQPlusDiamond => "TwoQ_plus_diamond",
        };
        f.write_str(s)
    }
}

/// Q, spanned by the simple roots.
pub fn root_lattice(t: LieType) -> IntegerLattice {
    IntegerLattice::from_generators(&cartan_data(t).cartan, t.rank())
        .expect("Cartan matrix has full rank")
}

pub fn weight_lattice(t: LieType) -> IntegerLattice {
    IntegerLattice::identity(t.rank())
}

/// `Q ∩ 2Λ`, computed by lattice intersection.
pub fn even_weight_lattice(t: LieType) -> IntegerLattice {
    root_lattice(t)
        .intersect(&weight_lattice(t).scale(2))
        .expect("intersection of full-rank lattices is full rank")
}

/// Sum of the odd-indexed simple roots for A_n, `alpha_{n-1} + alpha_n` for D_n.
pub fn alpha_diamond(t: LieType) -> Result<Weight> {
    let data = cartan_data(t);
    let n = t.rank();
    let pick: Vec<usize> = match t.family() {
        Family::A => (0..n).step_by(2).collect(),
        Family::D => vec![n - 2, n - 1],
        _ => {
            return Err(Error::NotApplicable {
                operation: "alpha_diamond",
                subject: format!("type {t} (only A_n and D_n)"),
            })
        }
    };
    Ok(pick.into_iter().fold(Weight::zero(n), |acc, i| acc.add(&data.simple_root(i))))
}

pub fn classify_lattice_case(t: LieType) -> LatticeCase {
    let n = t.rank();
    match t.family() {
        Family::A if n == 1 => LatticeCase::TwoLambdaStrict,
        Family::A if n % 2 == 0 => LatticeCase::TwoQStrict,
        Family::A => LatticeCase::TwoQPlusDiamond,
        Family::B | Family::C => LatticeCase::TwoLambdaStrict,
        Family::D if n % 2 == 0 => LatticeCase::TwoLambdaStrict,
        Family::D => LatticeCase::TwoQPlusDiamond,
        Family::E if n == 6 => LatticeCase::TwoQStrict,
        Family::E if n == 7 => LatticeCase::TwoLambdaStrict,
        Family::E | Family::F | Family::G => LatticeCase::TwoQEqualsTwoLambda,
    }
}

/// The lattice a case tag names for `t`.
pub fn case_lattice(t: LieType, case: LatticeCase) -> Result<IntegerLattice> {
    match case {
        LatticeCase::TwoQStrict => Ok(root_lattice(t).scale(2)),
        LatticeCase::TwoLambdaStrict | LatticeCase::TwoQEqualsTwoLambda => {
            Ok(weight_lattice(t).scale(2))
        }
        LatticeCase::TwoQPlusDiamond => root_lattice(t).scale(2).with_vector(&alpha_diamond(t)?),
    }
}

/// Whether the tagged lattice equals the intersection and the strictness
/// claim of the tag (2Q vs 2Λ) holds.
pub fn verify_lattice_case(t: LieType) -> Result<bool> {
    let case = classify_lattice_case(t);
    let named = case_lattice(t, case)?;
    let two_q = root_lattice(t).scale(2);
    let two_lambda = weight_lattice(t).scale(2);
    let strictness = match case {
        LatticeCase::TwoQEqualsTwoLambda => two_q == two_lambda,
        LatticeCase::TwoQStrict | LatticeCase::TwoLambdaStrict => two_q != two_lambda,
        LatticeCase::TwoQPlusDiamond => named != two_lambda,
    };
    Ok(strictness && named == even_weight_lattice(t))
}

pub fn lattice_contains(lattice: &IntegerLattice, w: &Weight) -> bool {
    lattice.contains(w)
}

/// Checks `2Q + Z alpha_diamond = 4Z lambda_{n-1} + 4Z lambda_n + Z alpha_diamond
/// + sum_{i <= n-2} 2Z lambda_i` for D_n, n odd.
pub fn verify_d_odd_refinement(n: usize) -> Result<bool> {
    if n < 5 || n % 2 == 0 {
        return Err(Error::NotApplicable {
            operation: "verify_d_odd_refinement",
            subject: format!("n = {n} (requires odd n ≥ 5)"),
        });
    }
    let t = LieType::new(Family::D, n)?;
    let diamond = alpha_diamond(t)?;
    let lhs = root_lattice(t).scale(2).with_vector(&diamond)?;
    let mut gens: Vec<Vec<i64>> = (1..=n)
        .map(|i| Weight::fundamental(n, i).scale(if i >= n - 1 { 4 } else { 2 }).0)
        .collect();
    gens.push(diamond.0);
    let rhs = IntegerLattice::from_generators(&gens, n)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::cartan_determinant;

    fn ty(s: &str) -> LieType {
        s.parse().unwrap()
    }

    #[test]
    fn hnf_examples() {
        assert_eq!(root_lattice(ty("A1")).hnf_basis(), &[vec![2]]);
        assert_eq!(root_lattice(ty("E8")), IntegerLattice::identity(8));
        assert_eq!(root_lattice(ty("A2")).hnf_basis(), &[vec![1, 1], vec![0, 3]]);
    }

    #[test]
    fn even_lattice_examples() {
        assert_eq!(even_weight_lattice(ty("E8")), IntegerLattice::identity(8).scale(2));
        assert_eq!(even_weight_lattice(ty("A1")).hnf_basis(), &[vec![2]]);
        assert_eq!(even_weight_lattice(ty("A2")).hnf_basis(), &[vec![2, 2], vec![0, 6]]);
    }

    #[test]
    fn alpha_diamond_examples() {
        assert_eq!(alpha_diamond(ty("D5")).unwrap(), Weight(vec![0, 0, -2, 2, 2]));
        assert_eq!(alpha_diamond(ty("A3")).unwrap(), Weight(vec![2, -2, 2]));
        assert_eq!(alpha_diamond(ty("A1")).unwrap(), Weight(vec![2]));
        assert!(alpha_diamond(ty("B3")).is_err());
    }

    #[test]
    fn case_examples() {
        assert_eq!(classify_lattice_case(ty("E6")), LatticeCase::TwoQStrict);
        assert_eq!(classify_lattice_case(ty("D6")), LatticeCase::TwoLambdaStrict);
        assert_eq!(classify_lattice_case(ty("D9")), LatticeCase::TwoQPlusDiamond);
        for t in LieType::all_up_to(10) {
            assert!(verify_lattice_case(t).unwrap(), "{t}");
        }
    }

    #[test]
    fn membership_examples() {
        let d5 = even_weight_lattice(ty("D5"));
        assert!(d5.contains(&Weight::zero(5)));
        assert!(d5.contains(&alpha_diamond(ty("D5")).unwrap()));
        let a2 = even_weight_lattice(ty("A2"));
        assert!(!a2.contains(&Weight(vec![1, 1])));
        assert!(root_lattice(ty("A2")).contains(&Weight(vec![1, 1])));
    }

    #[test]
    fn d_odd_refinement() {
        for n in [5, 7, 9, 11] {
            assert!(verify_d_odd_refinement(n).unwrap());
        }
        assert!(verify_d_odd_refinement(6).is_err());
    }

    #[test]
    fn containment_chain_and_index() {
        for t in LieType::all_up_to(10) {
            let q = root_lattice(t);
            let ev = even_weight_lattice(t);
            assert!(ev.contains_lattice(&q.scale(2)), "{t}");
            assert!(q.contains_lattice(&ev), "{t}");
            assert!(weight_lattice(t).scale(2).contains_lattice(&ev), "{t}");
            assert_eq!(q.determinant(), cartan_determinant(t), "{t}");
        }
    }

    #[test]
    fn hnf_is_idempotent() {
        for t in LieType::all_up_to(8) {
            let ev = even_weight_lattice(t);
            let again = IntegerLattice::from_generators(ev.hnf_basis(), t.rank()).unwrap();
            assert_eq!(ev, again);
        }
    }

    #[test]
    fn rank_deficient_generators_rejected() {
        assert!(IntegerLattice::from_generators(&[vec![1, 2], vec![2, 4]], 2).is_err());
    }
}
