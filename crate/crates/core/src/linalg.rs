//! Exact linear algebra: fraction-free rank, Gram matrices and span tests.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::fock::{inner_product, FockMonomial, StateVector};
use crate::scalar::{Rational, Scalar};

/// Rank of an integer matrix by Bareiss fraction-free elimination.
///
/// Pivots are the first nonzero entry in row-major order among the
/// remaining rows and columns, so the elimination is deterministic.
pub fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    let mut used_cols = vec![false; cols];
    while rank < rows {
        // first nonzero among rows rank.. scanning row-major
        let pivot = (rank..rows).find_map(|r| {
            (0..cols)
                .find(|&c| !used_cols[c] && !m[r][c].is_zero())
                .map(|c| (r, c))
        });
        let Some((pr, pc)) = pivot else { break };
        m.swap(rank, pr);
        used_cols[pc] = true;
        let piv = m[rank][pc].clone();
        for r in (rank + 1)..rows {
            let factor = m[r][pc].clone();
            for c in 0..cols {
                if used_cols[c] && c != pc {
                    continue;
                }
                let v = &piv * &m[r][c] - &factor * &m[rank][c];
                // exact by Sylvester's identity
                m[r][c] = v / &prev;
            }
        }
        prev = piv;
        rank += 1;
    }
    rank
}

/// Rank of a rational matrix: each row is scaled by the lcm of its
/// denominators and handed to [`bareiss_rank`].
pub fn rational_rank(m: &[Vec<Rational>]) -> usize {
    let ints = m
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter()
                .map(|x| x.numer() * (&l / x.denom()))
                .collect::<Vec<_>>()
        })
        .collect();
    bareiss_rank(ints)
}

/// `G[i][j] = ⟨s_i|s_j⟩`.
pub fn gram_matrix<S: Scalar>(states: &[StateVector<S>]) -> Vec<Vec<S>> {
    states
        .iter()
        .map(|x| states.iter().map(|y| inner_product(x, y)).collect())
        .collect()
}

/// Reduced row echelon basis of a set of vectors, kept in monomial
/// coordinates. Supports exact membership tests and coordinate solves.
#[derive(Debug, Clone)]
pub struct SpanBasis<S> {
    columns: Vec<FockMonomial>,
    /// (pivot column, row) pairs in echelon form.
    rows: Vec<(usize, Vec<S>)>,
    /// Combination of input vectors producing each echelon row.
    combos: Vec<Vec<S>>,
    inputs: usize,
}

impl<S: Scalar> SpanBasis<S> {
    pub fn new(vectors: &[StateVector<S>]) -> Self {
        let mut cols: BTreeMap<FockMonomial, ()> = BTreeMap::new();
        for v in vectors {
            for m in v.monomials() {
                cols.insert(*m, ());
            }
        }
        let columns: Vec<FockMonomial> = cols.into_keys().collect();
        let mut basis = SpanBasis {
            columns,
            rows: Vec::new(),
            combos: Vec::new(),
            inputs: vectors.len(),
        };
        for (k, v) in vectors.iter().enumerate() {
            let mut combo = vec![S::zero(); vectors.len()];
            combo[k] = S::one();
            if let Some(dense) = basis.dense(v) {
                basis.insert(dense, combo);
            }
        }
        basis
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn dense(&self, v: &StateVector<S>) -> Option<Vec<S>> {
        let mut d = vec![S::zero(); self.columns.len()];
        for (m, c) in v.iter() {
            let idx = self.columns.binary_search(m).ok()?;
            d[idx] = c.clone();
        }
        Some(d)
    }

    /// Reduces `d` against the echelon rows; returns the residual and the
    /// coefficients used.
    fn reduce(&self, mut d: Vec<S>, combo: &mut [S]) -> Vec<S> {
        for ((pc, row), rc) in self.rows.iter().zip(&self.combos) {
            if d[*pc].is_zero() {
                continue;
            }
            let f = d[*pc].clone();
            for (x, y) in d.iter_mut().zip(row) {
                *x -= &(f.clone() * y);
            }
            for (x, y) in combo.iter_mut().zip(rc) {
                *x -= &(f.clone() * y);
            }
        }
        d
    }

    fn insert(&mut self, d: Vec<S>, mut combo: Vec<S>) {
        let d = self.reduce(d, &mut combo);
        let Some(pc) = d.iter().position(|x| !x.is_zero()) else {
            return;
        };
        let inv = d[pc].inv().expect("nonzero pivot");
        let row: Vec<S> = d.into_iter().map(|x| x * &inv).collect();
        let combo: Vec<S> = combo.into_iter().map(|x| x * &inv).collect();
        // keep fully reduced: clear the new pivot column from older rows
        for (i, (_, r)) in self.rows.iter_mut().enumerate() {
            if r[pc].is_zero() {
                continue;
            }
            let f = r[pc].clone();
            for (x, y) in r.iter_mut().zip(&row) {
                *x -= &(f.clone() * y);
            }
            for (x, y) in self.combos[i].iter_mut().zip(&combo) {
                *x -= &(f.clone() * y);
            }
        }
        self.rows.push((pc, row));
        self.combos.push(combo);
    }

    /// Coefficients `c` with `Σ c_k v_k = target`, or `None` if `target`
    /// is outside the span.
    pub fn solve(&self, target: &StateVector<S>) -> Option<Vec<S>> {
        let d = self.dense(target)?;
        let mut combo = vec![S::zero(); self.inputs];
        let residual = self.reduce(d, &mut combo);
        if residual.iter().all(|x| x.is_zero()) {
            // reduce subtracted; negate to get the representation
            Some(combo.into_iter().map(|x| -x).collect())
        } else {
            None
        }
    }

    pub fn contains(&self, target: &StateVector<S>) -> bool {
        self.solve(target).is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn int_matrix(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| bi(x)).collect())
            .collect()
    }

    /// Rank by plain Gaussian elimination over ℚ, as an independent route.
    fn naive_rank(rows: &[&[i64]]) -> usize {
        let mut m: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Rational::from_int(x)).collect())
            .collect();
        let cols = m.first().map_or(0, |r| r.len());
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            let piv = m[rank][c].clone();
            for r in 0..m.len() {
                if r != rank && !m[r][c].is_zero() {
                    let f = m[r][c].clone() / piv.clone();
                    let pivot_row = m[rank].clone();
                    for (x, p) in m[r].iter_mut().zip(pivot_row) {
                        *x = x.clone() - f.clone() * p;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn bareiss_small_cases() {
        let cases: Vec<Vec<&[i64]>> = vec![
            vec![&[1, 2], &[2, 4]],
            vec![&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]],
            vec![&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]],
            vec![&[0, 0], &[0, 0]],
            vec![
                &[2, -3, 5, 7],
                &[1, 1, 1, 1],
                &[3, -2, 6, 8],
                &[0, 5, -3, -5],
            ],
        ];
        for c in cases {
            assert_eq!(bareiss_rank(int_matrix(&c)), naive_rank(&c), "{c:?}");
        }
        assert_eq!(bareiss_rank(vec![]), 0);
    }

    #[test]
    fn span_solve_recovers_coefficients() {
        type Sv = StateVector<Rational>;
        let m = |a: [u32; 3]| FockMonomial::new(a, [0; 3]);
        let v1 = Sv::from_terms([
            (m([1, 0, 0]), Rational::from_int(1)),
            (m([0, 1, 0]), Rational::from_int(2)),
        ]);
        let v2 = Sv::monomial(m([0, 1, 0]));
        let v3 = v1.add(&v2);
        let basis = SpanBasis::new(&[v1.clone(), v2.clone(), v3]);
        assert_eq!(basis.rank(), 2);
        let target = v1.scale(&Rational::from_int(3)).sub(&v2);
        let c = basis.solve(&target).unwrap();
        let rebuilt = [v1.clone(), v2.clone(), v1.add(&v2)]
            .iter()
            .zip(&c)
            .fold(Sv::zero(), |acc, (v, k)| acc.add(&v.scale(k)));
        assert_eq!(rebuilt, target);
        assert!(!basis.contains(&Sv::monomial(m([0, 0, 1]))));
    }
}
