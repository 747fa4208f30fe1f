//! Row reduction: fraction-free Bareiss over `Q`, plain Gauss–Jordan over `F_p`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{ExactMatrix, Field, LinalgError, Scalar};

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: ExactMatrix,
    pub pivots: Vec<usize>,
}

/// Outcome of an inversion attempt.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Inversion {
    Invertible(ExactMatrix),
    NotInvertible { rank: usize },
}

impl Inversion {
    pub fn inverse(&self) -> Option<&ExactMatrix> {
        match self {
            Inversion::Invertible(m) => Some(m),
            Inversion::NotInvertible { .. } => None,
        }
    }

    pub fn is_invertible(&self) -> bool {
        matches!(self, Inversion::Invertible(_))
    }
}

/// Solution set of `A x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AffineSolution {
    /// `particular + span(kernel)`.
    Solved {
        particular: ExactMatrix,
        kernel: Vec<ExactMatrix>,
    },
    /// A row vector `y` with `y A = 0` and `y b ≠ 0`.
    NoSolution { certificate: ExactMatrix },
}

fn rational_rows(m: &ExactMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows())
        .map(|i| {
            let row: Vec<&BigRational> = m
                .row(i)
                .iter()
                .map(|s| match s {
                    Scalar::Rational(q) => q,
                    Scalar::Residue { .. } => unreachable!("rational elimination on residues"),
                })
                .collect();
            let l = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            row.iter().map(|q| q.numer() * (&l / q.denom())).collect()
        })
        .collect()
}

/// Fraction-free forward elimination; returns the echelon rows and pivot columns.
fn bareiss_echelon(mut a: Vec<Vec<BigInt>>, cols: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, bottom) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let piv = pivot_row[c].clone();
        for row in bottom.iter_mut() {
            let lead = row[c].clone();
            for j in c..cols {
                let val = &piv * &row[j] - &lead * &pivot_row[j];
                let (q, rem) = val.div_rem(&prev);
                assert!(rem.is_zero(), "Bareiss division must be exact");
                row[j] = q;
            }
            for entry in row.iter_mut().take(c) {
                // columns left of the pivot are already zero in every lower row
                debug_assert!(entry.is_zero());
            }
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

fn rref_rational(m: &ExactMatrix) -> Rref {
    let cols = m.cols();
    let (ints, pivots) = bareiss_echelon(rational_rows(m), cols);
    let mut q: Vec<Vec<BigRational>> = ints
        .into_iter()
        .map(|row| row.into_iter().map(BigRational::from_integer).collect())
        .collect();
    for (r, &c) in pivots.iter().enumerate().rev() {
        let inv = q[r][c].recip();
        for j in c..cols {
            if !q[r][j].is_zero() {
                q[r][j] = &q[r][j] * &inv;
            }
        }
        let pivot_row = q[r].clone();
        for (i, row) in q.iter_mut().enumerate().take(r) {
            let f = row[c].clone();
            if f.is_zero() {
                continue;
            }
            debug_assert!(i < r);
            for j in c..cols {
                if !pivot_row[j].is_zero() {
                    row[j] -= &f * &pivot_row[j];
                }
            }
        }
    }
    let entries = q.into_iter().flatten().map(Scalar::Rational).collect();
    Rref {
        matrix: ExactMatrix::new(Field::Rational, m.rows(), cols, entries)
            .expect("shape preserved"),
        pivots,
    }
}

fn rref_prime(m: &ExactMatrix, p: u64) -> Rref {
    let rows = m.rows();
    let cols = m.cols();
    let mut a: Vec<Vec<u64>> = (0..rows)
        .map(|i| {
            m.row(i)
                .iter()
                .map(|s| match s {
                    Scalar::Residue { value, .. } => *value,
                    Scalar::Rational(_) => unreachable!("modular elimination on rationals"),
                })
                .collect()
        })
        .collect();
    let pm = p as u128;
    let inv = |x: u64| match (Scalar::Residue {
        value: x,
        modulus: p,
    })
    .inv()
    {
        Some(Scalar::Residue { value, .. }) => value,
        _ => unreachable!("pivot is nonzero"),
    };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, piv);
        let s = inv(a[r][c]) as u128;
        for x in a[r][c..].iter_mut() {
            *x = ((*x as u128 * s) % pm) as u64;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let f = row[c] as u128;
            for j in c..cols {
                let sub = (f * pivot_row[j] as u128) % pm;
                row[j] = ((row[j] as u128 + pm - sub) % pm) as u64;
            }
        }
        pivots.push(c);
        r += 1;
    }
    let entries = a
        .into_iter()
        .flatten()
        .map(|value| Scalar::Residue { value, modulus: p })
        .collect();
    Rref {
        matrix: ExactMatrix::new(Field::Prime(p), rows, cols, entries).expect("shape preserved"),
        pivots,
    }
}

impl ExactMatrix {
    pub fn rref(&self) -> Rref {
        match self.field() {
            Field::Rational => rref_rational(self),
            Field::Prime(p) => rref_prime(self, p),
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the null space as column vectors, one per free column in ascending order.
    pub fn kernel_basis(&self) -> Vec<ExactMatrix> {
        let Rref { matrix, pivots } = self.rref();
        kernel_from_rref(&matrix, &pivots, self.cols())
    }

    /// Basis of the column space, taken from the pivot columns of `self`.
    pub fn image_basis(&self) -> Vec<ExactMatrix> {
        self.rref().pivots.iter().map(|&c| self.column(c)).collect()
    }

    pub fn try_inverse(&self) -> Result<Inversion, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::DimensionMismatch {
                op: "inverse",
                left: self.shape(),
                right: self.shape(),
            });
        }
        let n = self.rows();
        let aug = self.hstack(&ExactMatrix::identity(self.field(), n))?;
        let Rref { matrix, pivots } = aug.rref();
        let rank = pivots.iter().filter(|&&c| c < n).count();
        if rank < n {
            return Ok(Inversion::NotInvertible { rank });
        }
        Ok(Inversion::Invertible(ExactMatrix::from_fn(
            self.field(),
            n,
            n,
            |i, j| matrix.get(i, n + j).clone(),
        )))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows()
    }

    /// Solves `self · x = b` for a single right-hand column `b`.
    pub fn solve_affine(&self, b: &ExactMatrix) -> Result<AffineSolution, LinalgError> {
        if b.cols() != 1 || b.rows() != self.rows() {
            return Err(LinalgError::DimensionMismatch {
                op: "solve_affine",
                left: self.shape(),
                right: b.shape(),
            });
        }
        let n = self.cols();
        let aug = self.hstack(b)?;
        let Rref { matrix, pivots } = aug.rref();
        if pivots.last() == Some(&n) {
            let certificate = self
                .transpose()
                .kernel_basis()
                .into_iter()
                .map(|y| y.transpose())
                .find(|y| !y.matmul(b).expect("shapes agree").is_zero())
                .expect("an inconsistent system has a separating left-kernel vector");
            return Ok(AffineSolution::NoSolution { certificate });
        }
        let mut particular = ExactMatrix::zeros(self.field(), n, 1);
        for (r, &c) in pivots.iter().enumerate() {
            particular.set(c, 0, matrix.get(r, n).clone());
        }
        let a_part = ExactMatrix::from_fn(self.field(), self.rows(), n, |i, j| {
            matrix.get(i, j).clone()
        });
        Ok(AffineSolution::Solved {
            particular,
            kernel: kernel_from_rref(&a_part, &pivots, n),
        })
    }
}

fn kernel_from_rref(rref: &ExactMatrix, pivots: &[usize], cols: usize) -> Vec<ExactMatrix> {
    let field = rref.field();
    let mut is_pivot = vec![false; cols];
    for &c in pivots {
        is_pivot[c] = true;
    }
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = ExactMatrix::zeros(field, cols, 1);
            v.set(free, 0, Scalar::one(field));
            for (r, &c) in pivots.iter().enumerate() {
                v.set(c, 0, -rref.get(r, free));
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    #[test]
    fn rref_hand_example() {
        let m = ExactMatrix::from_rows(Q, &[vec![2, 4, 2], vec![1, 2, 3], vec![0, 0, 1]]);
        let r = m.rref();
        assert_eq!(r.pivots, vec![0, 2]);
        assert_eq!(
            r.matrix,
            ExactMatrix::from_rows(Q, &[vec![1, 2, 0], vec![0, 0, 1], vec![0, 0, 0]])
        );
        let k = m.kernel_basis();
        assert_eq!(k, vec![ExactMatrix::column_vector(Q, &[-2, 1, 0])]);
    }

    #[test]
    fn inverse_with_fractions() {
        let m = ExactMatrix::from_rows(Q, &[vec![2, 1], vec![1, 1]]);
        let inv = m.try_inverse().unwrap();
        let inv = inv.inverse().unwrap();
        assert!(inv.matmul(&m).unwrap().is_identity());
        let h = ExactMatrix::from_rows(Q, &[vec![3, 6], vec![2, 4]]);
        assert_eq!(
            h.try_inverse().unwrap(),
            Inversion::NotInvertible { rank: 1 }
        );
    }

    #[test]
    fn singular_mod_two_only() {
        let m = ExactMatrix::from_rows(Q, &[vec![1, 1], vec![1, -1]]);
        assert!(m.is_invertible());
        let f2 = Field::prime(2).unwrap();
        let m2 = ExactMatrix::from_rows(f2, &[vec![1, 1], vec![1, -1]]);
        assert!(!m2.is_invertible());
        assert_eq!(
            m2.kernel_basis(),
            vec![ExactMatrix::column_vector(f2, &[1, 1])]
        );
    }

    #[test]
    fn affine_certificate() {
        let a = ExactMatrix::from_rows(Q, &[vec![1, 1], vec![2, 2]]);
        let b = ExactMatrix::column_vector(Q, &[1, 3]);
        match a.solve_affine(&b).unwrap() {
            AffineSolution::NoSolution { certificate } => {
                assert!(certificate.matmul(&a).unwrap().is_zero());
                assert!(!certificate.matmul(&b).unwrap().is_zero());
            }
            other => panic!("expected no solution, got {other:?}"),
        }
        let b = ExactMatrix::column_vector(Q, &[1, 2]);
        match a.solve_affine(&b).unwrap() {
            AffineSolution::Solved { particular, kernel } => {
                assert_eq!(a.matmul(&particular).unwrap(), b);
                assert_eq!(kernel.len(), 1);
            }
            other => panic!("expected a solution, got {other:?}"),
        }
    }
}
