use std::collections::BTreeMap;

use super::{ExactMatrix, Field, LinalgError, Scalar};

/// Row-major sparse matrix; each row lists its nonzero entries by ascending column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    field: Field,
    cols: usize,
    rows: Vec<Vec<(usize, Scalar)>>,
}

impl SparseMatrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        SparseMatrix {
            field,
            cols,
            rows: vec![Vec::new(); rows],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        SparseMatrix {
            field,
            cols: n,
            rows: (0..n).map(|i| vec![(i, Scalar::one(field))]).collect(),
        }
    }

    pub fn from_dense(m: &ExactMatrix) -> Self {
        let rows = (0..m.rows())
            .map(|i| {
                m.row(i)
                    .iter()
                    .enumerate()
                    .filter(|(_, s)| !s.is_zero())
                    .map(|(j, s)| (j, s.clone()))
                    .collect()
            })
            .collect();
        SparseMatrix {
            field: m.field(),
            cols: m.cols(),
            rows,
        }
    }

    /// Builds from `(row, col, value)` triples; repeated positions are summed.
    pub fn from_triples(
        field: Field,
        rows: usize,
        cols: usize,
        triples: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Self {
        let mut acc: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); rows];
        for (i, j, s) in triples {
            assert!(i < rows && j < cols, "entry ({i}, {j}) out of range");
            let slot = acc[i].entry(j).or_insert_with(|| Scalar::zero(field));
            *slot = &*slot + &s;
        }
        SparseMatrix {
            field,
            cols,
            rows: acc.into_iter().map(compact).collect(),
        }
    }

    pub fn to_dense(&self) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(self.field, self.rows.len(), self.cols);
        for (i, row) in self.rows.iter().enumerate() {
            for (j, s) in row {
                m.set(i, *j, s.clone());
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows.len(), self.cols)
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        match self.rows[i].binary_search_by_key(&j, |(c, _)| *c) {
            Ok(k) => self.rows[i][k].1.clone(),
            Err(_) => Scalar::zero(self.field),
        }
    }

    fn check(&self, rhs: &SparseMatrix, op: &'static str, ok: bool) -> Result<(), LinalgError> {
        if self.field != rhs.field {
            return Err(LinalgError::FieldMismatch {
                left: self.field,
                right: rhs.field,
            });
        }
        if !ok {
            return Err(LinalgError::DimensionMismatch {
                op,
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        Ok(())
    }

    /// Exact product `self · rhs`.
    pub fn matmul(&self, rhs: &SparseMatrix) -> Result<SparseMatrix, LinalgError> {
        self.check(rhs, "matmul", self.cols == rhs.rows.len())?;
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
                for (k, a) in row {
                    for (j, b) in &rhs.rows[*k] {
                        acc.entry(*j)
                            .or_insert_with(|| Scalar::zero(self.field))
                            .add_product(a, b);
                    }
                }
                compact(acc)
            })
            .collect();
        Ok(SparseMatrix {
            field: self.field,
            cols: rhs.cols,
            rows,
        })
    }

    /// Kronecker product in the `i·dimW + j` tensor basis.
    pub fn kron(&self, rhs: &SparseMatrix) -> Result<SparseMatrix, LinalgError> {
        self.check(rhs, "kron", true)?;
        let mut rows = Vec::with_capacity(self.rows.len() * rhs.rows.len());
        for left in &self.rows {
            for right in &rhs.rows {
                let mut row = Vec::with_capacity(left.len() * right.len());
                for (j, a) in left {
                    for (l, b) in right {
                        row.push((j * rhs.cols + l, a * b));
                    }
                }
                rows.push(row);
            }
        }
        Ok(SparseMatrix {
            field: self.field,
            cols: self.cols * rhs.cols,
            rows,
        })
    }

    /// First position in row-major order where the two matrices differ.
    pub fn first_difference(&self, other: &SparseMatrix) -> Option<(usize, usize)> {
        if self.shape() != other.shape() {
            return Some((0, 0));
        }
        for (i, (x, y)) in self.rows.iter().zip(&other.rows).enumerate() {
            let (mut p, mut q) = (0, 0);
            loop {
                match (x.get(p), y.get(q)) {
                    (None, None) => break,
                    (Some((j, _)), None) | (None, Some((j, _))) => return Some((i, *j)),
                    (Some((j, a)), Some((l, b))) => {
                        if j != l {
                            return Some((i, *j.min(l)));
                        }
                        if a != b {
                            return Some((i, *j));
                        }
                        p += 1;
                        q += 1;
                    }
                }
            }
        }
        None
    }
}

fn compact(row: BTreeMap<usize, Scalar>) -> Vec<(usize, Scalar)> {
    row.into_iter().filter(|(_, s)| !s.is_zero()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn agrees_with_dense() {
        let f = Field::Rational;
        let a = ExactMatrix::from_rows(f, &[vec![1, 0, 2], vec![0, -1, 0]]);
        let b = ExactMatrix::from_rows(f, &[vec![0, 3], vec![1, 1], vec![-2, 0]]);
        let (sa, sb) = (SparseMatrix::from_dense(&a), SparseMatrix::from_dense(&b));
        assert_eq!(sa.matmul(&sb).unwrap().to_dense(), a.matmul(&b).unwrap());
        assert_eq!(sa.kron(&sb).unwrap().to_dense(), a.kron(&b).unwrap());
        assert_eq!(
            SparseMatrix::from_dense(&a.matmul(&b).unwrap()),
            sa.matmul(&sb).unwrap()
        );
    }

    #[test]
    fn first_difference_is_row_major() {
        let f = Field::Rational;
        let a = ExactMatrix::from_rows(f, &[vec![1, 0], vec![0, 1]]);
        let mut b = a.clone();
        b.set(1, 0, Scalar::one(f));
        b.set(1, 1, Scalar::zero(f));
        let (sa, sb) = (SparseMatrix::from_dense(&a), SparseMatrix::from_dense(&b));
        assert_eq!(sa.first_difference(&sb), a.first_difference(&b));
        assert_eq!(sa.first_difference(&sa), None);
    }
}
