//! Reference base-change data written out independently of the Cartan
//! computation: closed forms for the classical families and an embedded
//! fixture (`fixtures/appendix.json`) for the exceptional ones.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::Deserialize;

use crate::rational::{frac, int, parse_pq, Rational};
use crate::root_system::{Family, LieType};

#[derive(Deserialize)]
struct Fixture {
    fundamental_weights_in_roots: BTreeMap<String, Vec<Vec<String>>>,
    simple_roots_in_weights: BTreeMap<String, Vec<Vec<i64>>>,
}

fn fixture() -> &'static Fixture {
    static F: OnceLock<Fixture> = OnceLock::new();
    F.get_or_init(|| {
        serde_json::from_str(include_str!("../fixtures/appendix.json"))
            .expect("embedded appendix fixture is valid JSON")
    })
}

/// Reference root coordinates of lambda_i (1-based), one row per i.
pub fn fundamental_weights_table(t: LieType) -> Vec<Vec<Rational>> {
    let n = t.rank();
    let n_i = n as i64;
    match t.family() {
        Family::A => (1..=n_i)
            .map(|i| {
                (1..=n_i)
                    .map(|j| {
                        if j < i {
                            frac((n_i + 1 - i) * j, n_i + 1)
                        } else if j == i {
                            frac((n_i + 1 - i) * i, n_i + 1)
                        } else {
                            frac(i * (n_i + 1 - j), n_i + 1)
                        }
                    })
                    .collect()
            })
            .collect(),
        Family::B => (1..=n_i)
            .map(|i| {
                (1..=n_i)
                    .map(|j| if i == n_i { frac(j, 2) } else { int(j.min(i)) })
                    .collect()
            })
            .collect(),
        Family::C => (1..=n_i)
            .map(|i| {
                (1..=n_i)
                    .map(|j| {
                        if i == n_i {
                            if j < n_i { int(j) } else { frac(n_i, 2) }
                        } else if j < n_i {
                            int(j.min(i))
                        } else {
                            frac(i, 2)
                        }
                    })
                    .collect()
            })
            .collect(),
        Family::D => (1..=n_i)
            .map(|i| {
                (1..=n_i)
                    .map(|j| {
                        if i <= n_i - 2 {
                            if j <= n_i - 2 { int(j.min(i)) } else { frac(i, 2) }
                        } else {
                            // lambda_{n-1}, lambda_n: halves of the spinor expressions
                            let own = if i == j { n_i } else { n_i - 2 };
                            if j <= n_i - 2 { frac(j, 2) } else { frac(own, 4) }
                        }
                    })
                    .collect()
            })
            .collect(),
        Family::E | Family::F | Family::G => fixture().fundamental_weights_in_roots
            [&t.to_string()]
            .iter()
            .map(|row| row.iter().map(|s| parse_pq(s).expect("fixture rational")).collect())
            .collect(),
    }
}

/// Reference fundamental-weight coordinates of alpha_i, one row per i.
pub fn simple_roots_table(t: LieType) -> Vec<Vec<i64>> {
    let n = t.rank();
    let mut rows = vec![vec![0i64; n]; n];
    // helper on 1-based indices
    let mut set = |i: usize, entries: &[(usize, i64)]| {
        for &(j, v) in entries {
            rows[i - 1][j - 1] = v;
        }
    };
    let middle = |set: &mut dyn FnMut(usize, &[(usize, i64)]), lo: usize, hi: usize| {
        for i in lo..=hi {
            set(i, &[(i - 1, -1), (i, 2), (i + 1, -1)]);
        }
    };
    match t.family() {
        Family::A if n == 1 => set(1, &[(1, 2)]),
        Family::A => {
            set(1, &[(1, 2), (2, -1)]);
            set(n, &[(n - 1, -1), (n, 2)]);
            middle(&mut set, 2, n - 1);
        }
        Family::B if n == 2 => {
            set(1, &[(1, 2), (2, -2)]);
            set(2, &[(1, -1), (2, 2)]);
        }
        Family::B => {
            set(1, &[(1, 2), (2, -1)]);
            set(n - 1, &[(n - 2, -1), (n - 1, 2), (n, -2)]);
            set(n, &[(n - 1, -1), (n, 2)]);
            middle(&mut set, 2, n - 2);
        }
        Family::C => {
            set(1, &[(1, 2), (2, -1)]);
            set(n, &[(n - 1, -2), (n, 2)]);
            middle(&mut set, 2, n - 1);
        }
        Family::D => {
            set(1, &[(1, 2), (2, -1)]);
            middle(&mut set, 2, n - 3);
            set(n - 2, &[(n - 3, -1), (n - 2, 2), (n - 1, -1), (n, -1)]);
            set(n - 1, &[(n - 2, -1), (n - 1, 2)]);
            set(n, &[(n - 2, -1), (n, 2)]);
        }
        Family::E | Family::F | Family::G => {
            return fixture().simple_roots_in_weights[&t.to_string()].clone();
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_values() {
        let d5: LieType = "D5".parse().unwrap();
        assert_eq!(
            fundamental_weights_table(d5)[3],
            vec![frac(1, 2), int(1), frac(3, 2), frac(5, 4), frac(3, 4)]
        );
        let g2: LieType = "G2".parse().unwrap();
        assert_eq!(simple_roots_table(g2), vec![vec![2, -3], vec![-1, 2]]);
        let c3: LieType = "C3".parse().unwrap();
        assert_eq!(fundamental_weights_table(c3)[2], vec![int(1), int(2), frac(3, 2)]);
    }
}
