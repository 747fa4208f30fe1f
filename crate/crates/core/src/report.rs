//! Pass/fail records shared by every axiom checker.

use serde::Serialize;

use crate::exactlin::{ExactMatrix, SparseMatrix};

/// The first basis tuple at which two maps disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    /// Input basis vector, one index per tensor factor.
    pub input: Vec<usize>,
    /// Output coordinate, one index per tensor factor.
    pub output: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub name: String,
    pub passed: bool,
    pub witness: Option<Mismatch>,
}

impl AxiomCheck {
    pub fn pass(name: impl Into<String>) -> Self {
        AxiomCheck {
            name: name.into(),
            passed: true,
            witness: None,
        }
    }

    /// Compares two maps with the same source and target, given as tensor factor dimensions.
    pub fn compare(
        name: impl Into<String>,
        lhs: &ExactMatrix,
        rhs: &ExactMatrix,
        in_dims: &[usize],
        out_dims: &[usize],
    ) -> Self {
        assert_eq!(
            lhs.shape(),
            rhs.shape(),
            "compared maps must have equal shapes"
        );
        let witness = lhs.first_difference(rhs).map(|(r, c)| Mismatch {
            input: split_index(c, in_dims),
            output: split_index(r, out_dims),
            lhs: lhs.get(r, c).to_string(),
            rhs: rhs.get(r, c).to_string(),
        });
        AxiomCheck {
            name: name.into(),
            passed: witness.is_none(),
            witness,
        }
    }

    /// [`AxiomCheck::compare`] for sparse maps; reports the same first mismatch.
    pub fn compare_sparse(
        name: impl Into<String>,
        lhs: &SparseMatrix,
        rhs: &SparseMatrix,
        in_dims: &[usize],
        out_dims: &[usize],
    ) -> Self {
        assert_eq!(
            lhs.shape(),
            rhs.shape(),
            "compared maps must have equal shapes"
        );
        let witness = lhs.first_difference(rhs).map(|(r, c)| Mismatch {
            input: split_index(c, in_dims),
            output: split_index(r, out_dims),
            lhs: lhs.get(r, c).to_string(),
            rhs: rhs.get(r, c).to_string(),
        });
        AxiomCheck {
            name: name.into(),
            passed: witness.is_none(),
            witness,
        }
    }
}

/// A list of named checks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn push(&mut self, check: AxiomCheck) {
        self.checks.push(check);
    }
}

/// Mixed-radix digits of `index` for the factor dimensions `dims`, most significant first.
pub fn split_index(mut index: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (slot, &d) in out.iter_mut().zip(dims).rev() {
        *slot = index % d;
        index /= d;
    }
    out
}

/// Inverse of [`split_index`].
pub fn join_index(digits: &[usize], dims: &[usize]) -> usize {
    digits.iter().zip(dims).fold(0, |acc, (&x, &d)| acc * d + x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_round_trip() {
        let dims = [2, 3, 4];
        for i in 0..24 {
            assert_eq!(join_index(&split_index(i, &dims), &dims), i);
        }
        assert_eq!(split_index(5, &[2, 3]), vec![1, 2]);
    }
}
