//! Integer solvability of `A·x = b` via the Smith normal form.

use serde::{Deserialize, Serialize};

use super::int::Int;
use super::snf::smith_normal_form;
use super::sparse::SparseIntMatrix;
use crate::error::{Error, Result};

/// Why `A·x = b` has no integer solution. Both variants carry a row `u`
/// with a directly checkable property, so they validate without the SNF.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// `u·A ≡ 0 (mod d)` entrywise but `u·b ≢ 0 (mod d)`.
    Divisibility {
        index: usize,
        divisor: Int,
        value: Int,
        u: Vec<Int>,
    },
    /// `u·A = 0` but `u·b ≠ 0`: `b` lies outside the rational column space.
    Residual { index: usize, value: Int, u: Vec<Int> },
}

impl Certificate {
    /// Checks the certificate against `A` and `b` from scratch.
    pub fn verify(&self, a: &SparseIntMatrix, b: &[Int]) -> bool {
        let (u, modulus) = match self {
            Certificate::Divisibility { u, divisor, .. } => (u, Some(divisor)),
            Certificate::Residual { u, .. } => (u, None),
        };
        if u.len() != a.rows() || b.len() != a.rows() {
            return false;
        }
        let ua = a.transpose().mul_vec(u).expect("shape checked");
        let ub = u.iter().zip(b).fold(Int::ZERO, |acc, (x, y)| acc + x * y);
        match modulus {
            Some(d) => {
                !d.is_zero() && ua.iter().all(|v| d.divides(v)) && !d.divides(&ub)
            }
            None => ua.iter().all(Int::is_zero) && !ub.is_zero(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Solution {
    Solvable { x: Vec<Int> },
    Unsolvable { certificate: Certificate },
}

impl Solution {
    pub fn is_solvable(&self) -> bool {
        matches!(self, Solution::Solvable { .. })
    }

    pub fn witness(&self) -> Option<&[Int]> {
        match self {
            Solution::Solvable { x } => Some(x),
            Solution::Unsolvable { .. } => None,
        }
    }
}

fn dot(row: &[Int], v: &[Int]) -> Int {
    row.iter().zip(v).fold(Int::ZERO, |acc, (x, y)| acc + x * y)
}

/// Finds an integer `x` with `A·x = b`, or certifies that none exists.
pub fn solve_integer(a: &SparseIntMatrix, b: &[Int]) -> Result<Solution> {
    if b.len() != a.rows() {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side has length {} but the matrix has {} rows",
            b.len(),
            a.rows()
        )));
    }
    let snf = smith_normal_form(a);
    let ub: Vec<Int> = snf.u.iter().map(|row| dot(row, b)).collect();
    let mut y = vec![Int::ZERO; a.cols()];
    for (i, value) in ub.iter().enumerate() {
        match snf.diagonal.get(i) {
            Some(d) => {
                if !d.divides(value) {
                    return Ok(Solution::Unsolvable {
                        certificate: Certificate::Divisibility {
                            index: i,
                            divisor: d.clone(),
                            value: value.clone(),
                            u: snf.u[i].clone(),
                        },
                    });
                }
                y[i] = value.div_floor(d);
            }
            None if !value.is_zero() => {
                return Ok(Solution::Unsolvable {
                    certificate: Certificate::Residual {
                        index: i,
                        value: value.clone(),
                        u: snf.u[i].clone(),
                    },
                });
            }
            None => {}
        }
    }
    let x: Vec<Int> = snf.v.iter().map(|row| dot(row, &y)).collect();
    let check = a.mul_vec(&x)?;
    if check != b {
        return Err(Error::Structural("witness failed re-verification".into()));
    }
    Ok(Solution::Solvable { x })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| Int::from(x)).collect()
    }

    #[test]
    fn small_systems() {
        let a = SparseIntMatrix::from_dense(&[vec![1]]);
        assert_eq!(solve_integer(&a, &ints(&[7])).unwrap().witness().unwrap(), ints(&[7]));

        let a = SparseIntMatrix::from_dense(&[vec![2]]);
        let b = ints(&[1]);
        let Solution::Unsolvable { certificate } = solve_integer(&a, &b).unwrap() else {
            panic!("2x = 1 has no integer solution");
        };
        assert!(matches!(certificate, Certificate::Divisibility { .. }));
        assert!(certificate.verify(&a, &b));

        let a = SparseIntMatrix::from_dense(&[vec![2, 3]]);
        let x = solve_integer(&a, &ints(&[1])).unwrap();
        assert_eq!(x.witness().unwrap(), ints(&[-1, 1]));
    }

    #[test]
    fn residual_certificate() {
        let a = SparseIntMatrix::from_dense(&[vec![1, 1], vec![2, 2]]);
        let b = ints(&[1, 3]);
        let Solution::Unsolvable { certificate } = solve_integer(&a, &b).unwrap() else {
            panic!("inconsistent system");
        };
        assert!(matches!(certificate, Certificate::Residual { .. }));
        assert!(certificate.verify(&a, &b));
        assert!(!certificate.verify(&a, &ints(&[1, 2])));
    }

    #[test]
    fn dimension_mismatch() {
        let a = SparseIntMatrix::from_dense(&[vec![1, 2]]);
        assert!(matches!(
            solve_integer(&a, &ints(&[1, 2])),
            Err(Error::DimensionMismatch(_))
        ));
    }
}
