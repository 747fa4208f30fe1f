use std::fmt;

use super::{Field, LinalgError, Scalar};

/// Dense row-major matrix over a single exact field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl ExactMatrix {
    pub fn new(
        field: Field,
        rows: usize,
        cols: usize,
        entries: Vec<Scalar>,
    ) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::EntryCount {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        if let Some(bad) = entries.iter().find(|s| s.field() != field) {
            return Err(LinalgError::FieldMismatch {
                left: field,
                right: bad.field(),
            });
        }
        Ok(ExactMatrix {
            field,
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        ExactMatrix {
            field,
            rows,
            cols,
            entries: vec![Scalar::zero(field); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.entries[i * n + i] = Scalar::one(field);
        }
        m
    }

    pub fn from_fn(
        field: Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let s = f(i, j);
                assert_eq!(
                    s.field(),
                    field,
                    "from_fn produced a scalar in the wrong field"
                );
                entries.push(s);
            }
        }
        ExactMatrix {
            field,
            rows,
            cols,
            entries,
        }
    }

    /// Builds a matrix from integer entries given row by row.
    pub fn from_i64(field: Field, rows: usize, cols: usize, values: &[i64]) -> Self {
        assert_eq!(
            values.len(),
            rows * cols,
            "from_i64: wrong number of entries"
        );
        ExactMatrix {
            field,
            rows,
            cols,
            entries: values.iter().map(|&v| Scalar::from_i64(field, v)).collect(),
        }
    }

    pub fn from_rows(field: Field, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let flat: Vec<i64> = rows.iter().flatten().copied().collect();
        Self::from_i64(field, r, c, &flat)
    }

    pub fn column_vector(field: Field, values: &[i64]) -> Self {
        Self::from_i64(field, values.len(), 1, values)
    }

    /// Standard basis vector `e_i` of a `dim`-dimensional space, as a column.
    pub fn basis_vector(field: Field, dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(field, dim, 1);
        v.entries[i] = Scalar::one(field);
        v
    }

    /// The linear map sending `e_j` to `e_{images[j]}`.
    pub fn from_basis_map(field: Field, target_dim: usize, images: &[usize]) -> Self {
        let mut m = Self::zeros(field, target_dim, images.len());
        for (j, &i) in images.iter().enumerate() {
            m.entries[i * images.len() + j] = Scalar::one(field);
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        assert_eq!(value.field(), self.field, "set: scalar in the wrong field");
        self.entries[i * self.cols + j] = value;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> ExactMatrix {
        ExactMatrix {
            field: self.field,
            rows: self.rows,
            cols: 1,
            entries: (0..self.rows).map(|i| self.get(i, j).clone()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let s = self.get(i, j);
                    if i == j {
                        s.is_one()
                    } else {
                        s.is_zero()
                    }
                })
            })
    }

    fn check_field(&self, other: &ExactMatrix) -> Result<(), LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch {
                left: self.field,
                right: other.field,
            });
        }
        Ok(())
    }

    /// Exact product `self · rhs`.
    pub fn matmul(&self, rhs: &ExactMatrix) -> Result<ExactMatrix, LinalgError> {
        self.check_field(rhs)?;
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch {
                op: "matmul",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        let mut out = ExactMatrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            let out_row = &mut out.entries[i * rhs.cols..(i + 1) * rhs.cols];
            for k in 0..self.cols {
                let a = &self.entries[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                let rhs_row = &rhs.entries[k * rhs.cols..(k + 1) * rhs.cols];
                for (acc, b) in out_row.iter_mut().zip(rhs_row) {
                    if !b.is_zero() {
                        acc.add_product(a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Chained product `ms[0] · ms[1] · … · ms[n-1]`, i.e. the composite applying the last
    /// factor first.
    pub fn compose_all(ms: &[&ExactMatrix]) -> Result<ExactMatrix, LinalgError> {
        let (last, rest) = ms
            .split_last()
            .expect("compose_all needs at least one matrix");
        rest.iter()
            .rev()
            .try_fold((*last).clone(), |acc, m| m.matmul(&acc))
    }

    /// Kronecker product; realizes `self ⊗ rhs` in the `i·dimW + j` tensor basis.
    pub fn kron(&self, rhs: &ExactMatrix) -> Result<ExactMatrix, LinalgError> {
        self.check_field(rhs)?;
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        let mut out = ExactMatrix::zeros(self.field, rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let b = rhs.get(k, l);
                        if b.is_zero() {
                            continue;
                        }
                        out.entries[(i * rhs.rows + k) * cols + j * rhs.cols + l] = a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> ExactMatrix {
        ExactMatrix::from_fn(self.field, self.cols, self.rows, |i, j| {
            self.get(j, i).clone()
        })
    }

    fn zip_with(
        &self,
        rhs: &ExactMatrix,
        op: &'static str,
        f: impl Fn(&Scalar, &Scalar) -> Scalar,
    ) -> Result<ExactMatrix, LinalgError> {
        self.check_field(rhs)?;
        if self.shape() != rhs.shape() {
            return Err(LinalgError::DimensionMismatch {
                op,
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        Ok(ExactMatrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn add(&self, rhs: &ExactMatrix) -> Result<ExactMatrix, LinalgError> {
        self.zip_with(rhs, "add", |a, b| a + b)
    }

    pub fn sub(&self, rhs: &ExactMatrix) -> Result<ExactMatrix, LinalgError> {
        self.zip_with(rhs, "sub", |a, b| a - b)
    }

    pub fn scale(&self, s: &Scalar) -> ExactMatrix {
        ExactMatrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a * s).collect(),
        }
    }

    /// Stacks `self` on top of `below`.
    pub fn vstack(&self, below: &ExactMatrix) -> Result<ExactMatrix, LinalgError> {
        self.check_field(below)?;
        if self.cols != below.cols {
            return Err(LinalgError::DimensionMismatch {
                op: "vstack",
                left: self.shape(),
                right: below.shape(),
            });
        }
        let mut entries = self.entries.clone();
        entries.extend(below.entries.iter().cloned());
        Ok(ExactMatrix {
            field: self.field,
            rows: self.rows + below.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Places `right` beside `self`.
    pub fn hstack(&self, right: &ExactMatrix) -> Result<ExactMatrix, LinalgError> {
        self.check_field(right)?;
        if self.rows != right.rows {
            return Err(LinalgError::DimensionMismatch {
                op: "hstack",
                left: self.shape(),
                right: right.shape(),
            });
        }
        Ok(ExactMatrix::from_fn(
            self.field,
            self.rows,
            self.cols + right.cols,
            |i, j| {
                if j < self.cols {
                    self.get(i, j).clone()
                } else {
                    right.get(i, j - self.cols).clone()
                }
            },
        ))
    }

    /// Columns side by side; all must have the same height. `rows` fixes the height when the
    /// list is empty.
    pub fn from_columns(field: Field, rows: usize, columns: &[ExactMatrix]) -> ExactMatrix {
        ExactMatrix::from_fn(field, rows, columns.len(), |i, j| {
            columns[j].get(i, 0).clone()
        })
    }

    /// Flattens row-major into a column vector.
    pub fn vectorize(&self) -> ExactMatrix {
        ExactMatrix {
            field: self.field,
            rows: self.rows * self.cols,
            cols: 1,
            entries: self.entries.clone(),
        }
    }

    /// First position where `self` and `other` differ (same shape assumed).
    pub fn first_difference(&self, other: &ExactMatrix) -> Option<(usize, usize)> {
        if self.shape() != other.shape() {
            return Some((0, 0));
        }
        self.entries
            .iter()
            .zip(&other.entries)
            .position(|(a, b)| a != b)
            .map(|k| (k / self.cols, k % self.cols))
    }

    /// Integer entries; `None` if any entry is a non-integral rational.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        use num_traits::ToPrimitive;
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|s| match s {
                        Scalar::Rational(q) if q.is_integer() => q.numer().to_i64(),
                        Scalar::Rational(_) => None,
                        Scalar::Residue { value, .. } => i64::try_from(*value).ok(),
                    })
                    .collect()
            })
            .collect()
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "ExactMatrix<{}> {}x{} [",
            self.field, self.rows, self.cols
        )?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|s| s.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|s| s.to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Kronecker product of a list of matrices, left to right.
pub fn tensor_all(field: Field, ms: &[&ExactMatrix]) -> Result<ExactMatrix, LinalgError> {
    ms.iter()
        .try_fold(ExactMatrix::identity(field, 1), |acc, m| acc.kron(m))
}

/// Reorders tensor factors: the map `V_0 ⊗ … ⊗ V_{k-1} → V_{perm[0]} ⊗ … ⊗ V_{perm[k-1]}`.
pub fn permute_factors(field: Field, dims: &[usize], perm: &[usize]) -> ExactMatrix {
    assert_eq!(dims.len(), perm.len(), "permute_factors: arity mismatch");
    let mut seen = vec![false; perm.len()];
    for &p in perm {
        assert!(!seen[p], "permute_factors: not a permutation");
        seen[p] = true;
    }
    let total: usize = dims.iter().product();
    let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
    let mut images = Vec::with_capacity(total);
    let mut digits = vec![0usize; dims.len()];
    for src in 0..total {
        let mut rem = src;
        for t in (0..dims.len()).rev() {
            digits[t] = rem % dims[t];
            rem /= dims[t];
        }
        let mut dst = 0;
        for (t, &p) in perm.iter().enumerate() {
            dst = dst * out_dims[t] + digits[p];
        }
        images.push(dst);
    }
    ExactMatrix::from_basis_map(field, total, &images)
}

/// The symmetric braiding `V ⊗ W → W ⊗ V`.
pub fn flip(field: Field, dim_v: usize, dim_w: usize) -> ExactMatrix {
    permute_factors(field, &[dim_v, dim_w], &[1, 0])
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    #[test]
    fn identity_is_neutral() {
        let m = ExactMatrix::from_rows(Q, &[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]);
        assert_eq!(ExactMatrix::identity(Q, 3).matmul(&m).unwrap(), m);
    }

    #[test]
    fn hand_product() {
        let a = ExactMatrix::from_rows(Q, &[vec![1, 2], vec![3, 4]]);
        let b = ExactMatrix::from_rows(Q, &[vec![0, 1], vec![1, 0]]);
        let expect = ExactMatrix::from_rows(Q, &[vec![2, 1], vec![4, 3]]);
        assert_eq!(a.matmul(&b).unwrap(), expect);
    }

    #[test]
    fn product_mod_two() {
        let f2 = Field::prime(2).unwrap();
        let a = ExactMatrix::from_rows(f2, &[vec![1, 1], vec![1, 1]]);
        let v = ExactMatrix::column_vector(f2, &[1, 1]);
        assert!(a.matmul(&v).unwrap().is_zero());
    }

    #[test]
    fn matmul_errors() {
        let a = ExactMatrix::zeros(Q, 2, 3);
        assert!(matches!(
            a.matmul(&a),
            Err(LinalgError::DimensionMismatch { .. })
        ));
        let b = ExactMatrix::zeros(Field::prime(3).unwrap(), 3, 3);
        assert!(matches!(
            a.matmul(&b),
            Err(LinalgError::FieldMismatch { .. })
        ));
    }

    #[test]
    fn kron_examples() {
        assert_eq!(
            ExactMatrix::identity(Q, 2)
                .kron(&ExactMatrix::identity(Q, 3))
                .unwrap(),
            ExactMatrix::identity(Q, 6)
        );
        let swap = ExactMatrix::from_rows(Q, &[vec![0, 1], vec![1, 0]]);
        assert_eq!(swap.kron(&ExactMatrix::identity(Q, 1)).unwrap(), swap);
        let e0 = ExactMatrix::column_vector(Q, &[1, 0]);
        let e1 = ExactMatrix::column_vector(Q, &[0, 1]);
        assert_eq!(
            e0.kron(&e1).unwrap(),
            ExactMatrix::column_vector(Q, &[0, 1, 0, 0])
        );
    }

    #[test]
    fn flip_is_involutive_and_moves_basis() {
        let f = flip(Q, 2, 3);
        let g = flip(Q, 3, 2);
        assert!(g.matmul(&f).unwrap().is_identity());
        // e_1 ⊗ f_2 sits at 1*3+2 = 5 and lands on f_2 ⊗ e_1 at 2*2+1 = 5
        let v = ExactMatrix::basis_vector(Q, 6, 5);
        assert_eq!(f.matmul(&v).unwrap(), ExactMatrix::basis_vector(Q, 6, 5));
        let v = ExactMatrix::basis_vector(Q, 6, 1); // e_0 ⊗ f_1
        assert_eq!(f.matmul(&v).unwrap(), ExactMatrix::basis_vector(Q, 6, 2));
    }

    #[test]
    fn permute_matches_flip_conjugation() {
        // (A ⊗ flip_{B,C}) as a factor permutation
        let p = permute_factors(Q, &[2, 3, 2], &[0, 2, 1]);
        let q = ExactMatrix::identity(Q, 2).kron(&flip(Q, 3, 2)).unwrap();
        assert_eq!(p, q);
    }
}
