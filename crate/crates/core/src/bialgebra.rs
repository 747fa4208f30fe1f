//! Bialgebras and comonoids given by structure constants over an exact field.
//!
//! The braiding is always the symmetric flip of vector spaces.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactlin::{flip, permute_factors, ExactMatrix, Field, LinalgError, Scalar};
use crate::report::{AxiomCheck, AxiomReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("dimension must be positive")]
    ZeroDimension,
    #[error("{what} has shape {found:?}, expected {expected:?}")]
    Shape {
        what: &'static str,
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error("{what} is over {found}, expected {expected}")]
    Field {
        what: &'static str,
        expected: Field,
        found: Field,
    },
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

fn check_shape(
    what: &'static str,
    m: &ExactMatrix,
    field: Field,
    expected: (usize, usize),
) -> Result<(), StructureError> {
    if m.field() != field {
        return Err(StructureError::Field {
            what,
            expected: field,
            found: m.field(),
        });
    }
    if m.shape() != expected {
        return Err(StructureError::Shape {
            what,
            expected,
            found: m.shape(),
        });
    }
    Ok(())
}

fn default_labels(dim: usize) -> Vec<String> {
    (0..dim).map(|i| format!("e{i}")).collect()
}

/// `(A, m, e, δ, ε)` with `m: A⊗A → A`, `e: k → A`, `δ: A → A⊗A`, `ε: A → k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bialgebra {
    field: Field,
    dim: usize,
    mult: ExactMatrix,
    unit: ExactMatrix,
    comult: ExactMatrix,
    counit: ExactMatrix,
    labels: Vec<String>,
}

impl Bialgebra {
    /// Checks shapes only; the axioms are checked by [`Bialgebra::validate`].
    pub fn new(
        mult: ExactMatrix,
        unit: ExactMatrix,
        comult: ExactMatrix,
        counit: ExactMatrix,
        labels: Option<Vec<String>>,
    ) -> Result<Self, StructureError> {
        let field = mult.field();
        let dim = mult.rows();
        if dim == 0 {
            return Err(StructureError::ZeroDimension);
        }
        check_shape("mult", &mult, field, (dim, dim * dim))?;
        check_shape("unit", &unit, field, (dim, 1))?;
        check_shape("comult", &comult, field, (dim * dim, dim))?;
        check_shape("counit", &counit, field, (1, dim))?;
        let labels = labels.unwrap_or_else(|| default_labels(dim));
        if labels.len() != dim {
            return Err(StructureError::Input(format!(
                "{} labels given for dimension {dim}",
                labels.len()
            )));
        }
        Ok(Bialgebra {
            field,
            dim,
            mult,
            unit,
            comult,
            counit,
            labels,
        })
    }

    /// The monoid algebra `k[M]` with `δ(x) = x⊗x` and `ε(x) = 1`; `table[i][j]` is the index
    /// of the product of elements `i` and `j`.
    pub fn monoid_algebra(
        field: Field,
        table: &[Vec<usize>],
        labels: Option<Vec<String>>,
    ) -> Result<Self, StructureError> {
        let n = table.len();
        if n == 0 {
            return Err(StructureError::ZeroDimension);
        }
        if table
            .iter()
            .any(|row| row.len() != n || row.iter().any(|&x| x >= n))
        {
            return Err(StructureError::Input(
                "multiplication table is not square".into(),
            ));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| StructureError::Input("multiplication table has no identity".into()))?;
        let images: Vec<usize> = (0..n * n).map(|c| table[c / n][c % n]).collect();
        let mult = ExactMatrix::from_basis_map(field, n, &images);
        let unit = ExactMatrix::basis_vector(field, n, identity);
        let diag: Vec<usize> = (0..n).map(|x| x * n + x).collect();
        let comult = ExactMatrix::from_basis_map(field, n * n, &diag);
        let counit = ExactMatrix::from_fn(field, 1, n, |_, _| Scalar::one(field));
        Bialgebra::new(mult, unit, comult, counit, labels)
    }

    /// The one-dimensional bialgebra `k`.
    pub fn trivial(field: Field) -> Self {
        Bialgebra::monoid_algebra(field, &[vec![0]], Some(vec!["1".into()]))
            .expect("trivial table is valid")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mult(&self) -> &ExactMatrix {
        &self.mult
    }

    pub fn unit(&self) -> &ExactMatrix {
        &self.unit
    }

    pub fn comult(&self) -> &ExactMatrix {
        &self.comult
    }

    pub fn counit(&self) -> &ExactMatrix {
        &self.counit
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Structure constant `m[i][j][k]`: coefficient of `e_k` in `e_i·e_j`.
    pub fn m(&self, i: usize, j: usize, k: usize) -> &Scalar {
        self.mult.get(k, i * self.dim + j)
    }

    /// Structure constant `c[i][j][k]`: coefficient of `e_i⊗e_j` in `δ(e_k)`.
    pub fn c(&self, i: usize, j: usize, k: usize) -> &Scalar {
        self.comult.get(i * self.dim + j, k)
    }

    pub fn id(&self) -> ExactMatrix {
        ExactMatrix::identity(self.field, self.dim)
    }

    /// The underlying coalgebra.
    pub fn coalgebra(&self) -> Comonoid {
        Comonoid {
            field: self.field,
            dim: self.dim,
            comult: self.comult.clone(),
            counit: self.counit.clone(),
            labels: self.labels.clone(),
        }
    }

    pub fn is_commutative(&self) -> bool {
        let sw = flip(self.field, self.dim, self.dim);
        self.mult.matmul(&sw).expect("shapes agree") == self.mult
    }

    pub fn is_cocommutative(&self) -> bool {
        let sw = flip(self.field, self.dim, self.dim);
        sw.matmul(&self.comult).expect("shapes agree") == self.comult
    }

    /// All ten bialgebra identities, each with the first failing basis tuple.
    pub fn validate(&self) -> AxiomReport {
        let f = self.field;
        let d = self.dim;
        let id = self.id();
        let one = ExactMatrix::identity(f, 1);
        let k = |a: &ExactMatrix, b: &ExactMatrix| a.kron(b).expect("same field");
        let mm = |a: &ExactMatrix, b: &ExactMatrix| a.matmul(b).expect("shapes agree");
        let mut r = AxiomReport::default();

        r.push(AxiomCheck::compare(
            "associativity",
            &mm(&self.mult, &k(&self.mult, &id)),
            &mm(&self.mult, &k(&id, &self.mult)),
            &[d, d, d],
            &[d],
        ));
        r.push(AxiomCheck::compare(
            "left unit",
            &mm(&self.mult, &k(&self.unit, &id)),
            &id,
            &[d],
            &[d],
        ));
        r.push(AxiomCheck::compare(
            "right unit",
            &mm(&self.mult, &k(&id, &self.unit)),
            &id,
            &[d],
            &[d],
        ));
        for check in self.coalgebra().validate().checks {
            r.push(check);
        }
        let middle = permute_factors(f, &[d, d, d, d], &[0, 2, 1, 3]);
        r.push(AxiomCheck::compare(
            "comult multiplicative",
            &mm(&self.comult, &self.mult),
            &mm(
                &k(&self.mult, &self.mult),
                &mm(&middle, &k(&self.comult, &self.comult)),
            ),
            &[d, d],
            &[d, d],
        ));
        r.push(AxiomCheck::compare(
            "counit multiplicative",
            &mm(&self.counit, &self.mult),
            &k(&self.counit, &self.counit),
            &[d, d],
            &[1],
        ));
        r.push(AxiomCheck::compare(
            "comult unital",
            &mm(&self.comult, &self.unit),
            &k(&self.unit, &self.unit),
            &[1],
            &[d, d],
        ));
        r.push(AxiomCheck::compare(
            "counit unital",
            &mm(&self.counit, &self.unit),
            &one,
            &[1],
            &[1],
        ));
        r
    }

    pub fn to_file(&self) -> StructureFile {
        let d = self.dim;
        StructureFile {
            field: self.field,
            dim: d,
            mult: Some(cube(d, |i, j, k| self.m(i, j, k).to_wire())),
            unit: Some(column_wire(&self.unit)),
            comult: cube(d, |i, j, k| self.c(i, j, k).to_wire()),
            counit: (0..d)
                .map(|i| Entry::Str(self.counit.get(0, i).to_wire()))
                .collect(),
            labels: Some(self.labels.clone()),
            grouplike: None,
        }
    }
}

/// `(C, δ, ε)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comonoid {
    field: Field,
    dim: usize,
    comult: ExactMatrix,
    counit: ExactMatrix,
    labels: Vec<String>,
}

impl Comonoid {
    pub fn new(
        comult: ExactMatrix,
        counit: ExactMatrix,
        labels: Option<Vec<String>>,
    ) -> Result<Self, StructureError> {
        let field = comult.field();
        let dim = comult.cols();
        if dim == 0 {
            return Err(StructureError::ZeroDimension);
        }
        check_shape("comult", &comult, field, (dim * dim, dim))?;
        check_shape("counit", &counit, field, (1, dim))?;
        let labels = labels.unwrap_or_else(|| default_labels(dim));
        if labels.len() != dim {
            return Err(StructureError::Input(format!(
                "{} labels given for dimension {dim}",
                labels.len()
            )));
        }
        Ok(Comonoid {
            field,
            dim,
            comult,
            counit,
            labels,
        })
    }

    /// The unit object `I = k` with its canonical comonoid structure.
    pub fn unit_object(field: Field) -> Self {
        Comonoid::set_like(field, 1)
    }

    /// `k[X]` for an `n`-element set, with every basis element grouplike.
    pub fn set_like(field: Field, n: usize) -> Self {
        let diag: Vec<usize> = (0..n).map(|x| x * n + x).collect();
        Comonoid::new(
            ExactMatrix::from_basis_map(field, n * n, &diag),
            ExactMatrix::from_fn(field, 1, n, |_, _| Scalar::one(field)),
            Some(if n == 1 {
                vec!["1".into()]
            } else {
                (0..n).map(|i| format!("x{i}")).collect()
            }),
        )
        .expect("valid shapes")
    }

    /// Divided powers truncated at degree `n-1`: `δ(x_k) = Σ_{i+j=k} x_i⊗x_j`, `ε(x_k) = [k=0]`.
    pub fn divided_power(field: Field, n: usize) -> Self {
        let comult = ExactMatrix::from_fn(field, n * n, n, |r, k| {
            Scalar::from_i64(field, i64::from(r / n + r % n == k))
        });
        let counit = ExactMatrix::basis_vector(field, n, 0).transpose();
        Comonoid::new(
            comult,
            counit,
            Some((0..n).map(|i| format!("d{i}")).collect()),
        )
        .expect("valid shapes")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn comult(&self) -> &ExactMatrix {
        &self.comult
    }

    pub fn counit(&self) -> &ExactMatrix {
        &self.counit
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn validate(&self) -> AxiomReport {
        let d = self.dim;
        let id = ExactMatrix::identity(self.field, d);
        let k = |a: &ExactMatrix, b: &ExactMatrix| a.kron(b).expect("same field");
        let mm = |a: &ExactMatrix, b: &ExactMatrix| a.matmul(b).expect("shapes agree");
        let mut r = AxiomReport::default();
        r.push(AxiomCheck::compare(
            "coassociativity",
            &mm(&k(&self.comult, &id), &self.comult),
            &mm(&k(&id, &self.comult), &self.comult),
            &[d],
            &[d, d, d],
        ));
        r.push(AxiomCheck::compare(
            "left counit",
            &mm(&k(&self.counit, &id), &self.comult),
            &id,
            &[d],
            &[d],
        ));
        r.push(AxiomCheck::compare(
            "right counit",
            &mm(&k(&id, &self.counit), &self.comult),
            &id,
            &[d],
            &[d],
        ));
        r
    }

    /// Whether `v` satisfies `δ(v) = v⊗v` and `ε(v) = 1`.
    pub fn is_grouplike(&self, v: &ExactMatrix) -> bool {
        if v.shape() != (self.dim, 1) || v.field() != self.field {
            return false;
        }
        let dv = self.comult.matmul(v).expect("shapes agree");
        let ev = self.counit.matmul(v).expect("shapes agree");
        dv == v.kron(v).expect("same field") && ev.get(0, 0).is_one()
    }

    /// Grouplike basis vectors, in basis order.
    pub fn basis_grouplikes(&self) -> Vec<Grouplike> {
        (0..self.dim)
            .map(|i| ExactMatrix::basis_vector(self.field, self.dim, i))
            .filter(|v| self.is_grouplike(v))
            .map(|vector| Grouplike { vector })
            .collect()
    }

    pub fn to_file(&self) -> StructureFile {
        let d = self.dim;
        StructureFile {
            field: self.field,
            dim: d,
            mult: None,
            unit: None,
            comult: cube(d, |i, j, k| self.comult.get(i * d + j, k).to_wire()),
            counit: (0..d)
                .map(|i| Entry::Str(self.counit.get(0, i).to_wire()))
                .collect(),
            labels: Some(self.labels.clone()),
            grouplike: None,
        }
    }
}

/// A grouplike element `g: I → C`, stored as a column vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grouplike {
    vector: ExactMatrix,
}

impl Grouplike {
    pub fn new(host: &Comonoid, vector: ExactMatrix) -> Result<Self, StructureError> {
        if !host.is_grouplike(&vector) {
            return Err(StructureError::Input("vector is not grouplike".into()));
        }
        Ok(Grouplike { vector })
    }

    pub fn vector(&self) -> &ExactMatrix {
        &self.vector
    }
}

/// The comonoid `T(C) = A⊗C` and the lifted grouplike `ḡ = e⊗g`.
#[derive(Clone, Debug)]
pub struct LiftedGrouplike {
    pub tc: Comonoid,
    pub g_bar: Grouplike,
}

/// `T(C)` with `δ = (A⊗flip⊗C)(δ_A⊗δ_C)` and `ε = ε_A⊗ε_C`.
pub fn image_comonoid(b: &Bialgebra, c: &Comonoid) -> Comonoid {
    let (a, n) = (b.dim(), c.dim());
    let mid = permute_factors(b.field(), &[a, a, n, n], &[0, 2, 1, 3]);
    let comult = mid
        .matmul(&b.comult().kron(c.comult()).expect("same field"))
        .expect("shapes agree");
    let counit = b.counit().kron(c.counit()).expect("same field");
    let labels = b
        .labels()
        .iter()
        .flat_map(|x| c.labels().iter().map(move |y| format!("{x}⊗{y}")))
        .collect();
    Comonoid::new(comult, counit, Some(labels)).expect("valid shapes")
}

pub fn lift_grouplike(b: &Bialgebra, c: &Comonoid, g: &Grouplike) -> LiftedGrouplike {
    let tc = image_comonoid(b, c);
    let v = b.unit().kron(g.vector()).expect("same field");
    let g_bar = Grouplike::new(&tc, v).expect("the lift of a grouplike is grouplike");
    LiftedGrouplike { tc, g_bar }
}

fn cube(d: usize, f: impl Fn(usize, usize, usize) -> String) -> Vec<Vec<Vec<Entry>>> {
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| (0..d).map(|k| Entry::Str(f(i, j, k))).collect())
                .collect()
        })
        .collect()
}

fn column_wire(v: &ExactMatrix) -> Vec<Entry> {
    (0..v.rows())
        .map(|i| Entry::Str(v.get(i, 0).to_wire()))
        .collect()
}

/// A structure constant: an integer literal or a `"n/d"` string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Int(i64),
    Str(String),
}

impl Entry {
    fn scalar(&self, field: Field, at: &str) -> Result<Scalar, StructureError> {
        match self {
            Entry::Int(n) => Ok(Scalar::from_i64(field, *n)),
            Entry::Str(s) => {
                Scalar::parse(field, s).map_err(|e| StructureError::Input(format!("{at}: {e}")))
            }
        }
    }
}

/// On-disk form of a bialgebra (all fields) or a comonoid (`mult` and `unit` absent).
///
/// `mult[i][j][k]` is the coefficient of `e_k` in `e_i·e_j`; `comult[i][j][k]` is the
/// coefficient of `e_i⊗e_j` in `δ(e_k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    pub field: Field,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mult: Option<Vec<Vec<Vec<Entry>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<Entry>>,
    pub comult: Vec<Vec<Vec<Entry>>>,
    pub counit: Vec<Entry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    /// Optional grouplike element of a comonoid, as coordinates.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grouplike: Option<Vec<Entry>>,
}

impl StructureFile {
    fn read_cube(
        &self,
        what: &str,
        cube: &[Vec<Vec<Entry>>],
    ) -> Result<Vec<Vec<Vec<Scalar>>>, StructureError> {
        let d = self.dim;
        if cube.len() != d {
            return Err(StructureError::Input(format!(
                "{what}: expected {d} outer entries, found {}",
                cube.len()
            )));
        }
        cube.iter()
            .enumerate()
            .map(|(i, plane)| {
                if plane.len() != d {
                    return Err(StructureError::Input(format!(
                        "{what}[{i}]: expected {d} entries, found {}",
                        plane.len()
                    )));
                }
                plane
                    .iter()
                    .enumerate()
                    .map(|(j, line)| {
                        if line.len() != d {
                            return Err(StructureError::Input(format!(
                                "{what}[{i}][{j}]: expected {d} entries, found {}",
                                line.len()
                            )));
                        }
                        line.iter()
                            .enumerate()
                            .map(|(k, e)| e.scalar(self.field, &format!("{what}[{i}][{j}][{k}]")))
                            .collect()
                    })
                    .collect()
            })
            .collect()
    }

    fn read_vector(&self, what: &str, v: &[Entry]) -> Result<ExactMatrix, StructureError> {
        if v.len() != self.dim {
            return Err(StructureError::Input(format!(
                "{what}: expected {} entries, found {}",
                self.dim,
                v.len()
            )));
        }
        let entries = v
            .iter()
            .enumerate()
            .map(|(i, e)| e.scalar(self.field, &format!("{what}[{i}]")))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ExactMatrix::new(self.field, self.dim, 1, entries)?)
    }

    fn comonoid_parts(&self) -> Result<(ExactMatrix, ExactMatrix), StructureError> {
        if self.dim == 0 {
            return Err(StructureError::ZeroDimension);
        }
        let d = self.dim;
        let c = self.read_cube("comult", &self.comult)?;
        let comult = ExactMatrix::from_fn(self.field, d * d, d, |r, k| c[r / d][r % d][k].clone());
        let counit = self.read_vector("counit", &self.counit)?.transpose();
        Ok((comult, counit))
    }

    pub fn to_bialgebra(&self) -> Result<Bialgebra, StructureError> {
        let (comult, counit) = self.comonoid_parts()?;
        let d = self.dim;
        let mult = self
            .mult
            .as_ref()
            .ok_or_else(|| StructureError::Input("mult: missing field".into()))?;
        let m = self.read_cube("mult", mult)?;
        let mult = ExactMatrix::from_fn(self.field, d, d * d, |k, c| m[c / d][c % d][k].clone());
        let unit = self
            .unit
            .as_ref()
            .ok_or_else(|| StructureError::Input("unit: missing field".into()))?;
        let unit = self.read_vector("unit", unit)?;
        Bialgebra::new(mult, unit, comult, counit, self.labels.clone())
    }

    pub fn to_comonoid(&self) -> Result<Comonoid, StructureError> {
        let (comult, counit) = self.comonoid_parts()?;
        Comonoid::new(comult, counit, self.labels.clone())
    }

    /// The declared grouplike, if any, checked against the comonoid.
    pub fn grouplike_of(&self, c: &Comonoid) -> Result<Option<Grouplike>, StructureError> {
        match &self.grouplike {
            None => Ok(None),
            Some(v) => Grouplike::new(c, self.read_vector("grouplike", v)?).map(Some),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn z2() -> Bialgebra {
        Bialgebra::monoid_algebra(Q, &[vec![0, 1], vec![1, 0]], None).unwrap()
    }

    #[test]
    fn group_algebra_validates() {
        assert!(z2().validate().all_pass());
        assert_eq!(z2().validate().checks.len(), 10);
        assert!(Bialgebra::trivial(Q).validate().all_pass());
    }

    #[test]
    fn broken_comult_is_caught() {
        let b = z2();
        // δ(g) = 1⊗g instead of g⊗g
        let mut comult = b.comult().clone();
        comult.set(3, 1, Scalar::zero(Q));
        comult.set(1, 1, Scalar::one(Q));
        let bad = Bialgebra::new(
            b.mult().clone(),
            b.unit().clone(),
            comult,
            b.counit().clone(),
            None,
        )
        .unwrap();
        let report = bad.validate();
        assert!(report.get("left counit").unwrap().passed);
        assert!(!report.get("right counit").unwrap().passed);
        let w = report.get("right counit").unwrap().witness.clone().unwrap();
        assert_eq!(w.input, vec![1]);
    }

    #[test]
    fn grouplikes() {
        let c = z2().coalgebra();
        assert!(c.is_grouplike(&ExactMatrix::column_vector(Q, &[0, 1])));
        assert!(!c.is_grouplike(&ExactMatrix::column_vector(Q, &[1, 1])));
        assert!(Comonoid::unit_object(Q).is_grouplike(&ExactMatrix::column_vector(Q, &[1])));
        assert_eq!(Comonoid::divided_power(Q, 3).basis_grouplikes().len(), 1);
    }

    #[test]
    fn shape_errors() {
        let b = z2();
        let r = Bialgebra::new(
            b.mult().clone(),
            ExactMatrix::zeros(Q, 3, 1),
            b.comult().clone(),
            b.counit().clone(),
            None,
        );
        assert!(matches!(r, Err(StructureError::Shape { what: "unit", .. })));
    }

    #[test]
    fn file_round_trip() {
        let b = z2();
        let text = serde_json::to_string(&b.to_file()).unwrap();
        let back: StructureFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_bialgebra().unwrap(), b);
    }
}
