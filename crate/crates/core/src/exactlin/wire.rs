//! Serialized matrix form: `{"field", "rows", "cols", "entries"}` with string entries.

use serde::{Deserialize, Serialize};

use super::{ExactMatrix, Field, LinalgError, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixWire {
    pub field: Field,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

impl From<&ExactMatrix> for MatrixWire {
    fn from(m: &ExactMatrix) -> Self {
        MatrixWire {
            field: m.field(),
            rows: m.rows(),
            cols: m.cols(),
            entries: (0..m.rows())
                .map(|i| m.row(i).iter().map(Scalar::to_wire).collect())
                .collect(),
        }
    }
}

impl TryFrom<&MatrixWire> for ExactMatrix {
    type Error = LinalgError;

    fn try_from(w: &MatrixWire) -> Result<Self, Self::Error> {
        if w.entries.len() != w.rows {
            return Err(LinalgError::EntryCount {
                expected: w.rows,
                found: w.entries.len(),
            });
        }
        let mut flat = Vec::with_capacity(w.rows * w.cols);
        for row in &w.entries {
            if row.len() != w.cols {
                return Err(LinalgError::EntryCount {
                    expected: w.cols,
                    found: row.len(),
                });
            }
            for s in row {
                flat.push(Scalar::parse(w.field, s)?);
            }
        }
        ExactMatrix::new(w.field, w.rows, w.cols, flat)
    }
}

impl Serialize for ExactMatrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        MatrixWire::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ExactMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let w = MatrixWire::deserialize(deserializer)?;
        ExactMatrix::try_from(&w).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_round_trip() {
        let m = ExactMatrix::new(
            Field::Rational,
            1,
            2,
            vec![
                Scalar::parse(Field::Rational, "-3/4").unwrap(),
                Scalar::from_i64(Field::Rational, 5),
            ],
        )
        .unwrap();
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(
            s,
            r#"{"field":"Q","rows":1,"cols":2,"entries":[["-3/4","5/1"]]}"#
        );
        assert_eq!(serde_json::from_str::<ExactMatrix>(&s).unwrap(), m);
    }

    #[test]
    fn residue_round_trip() {
        let f = Field::prime(5).unwrap();
        let m = ExactMatrix::from_rows(f, &[vec![4, -1], vec![7, 0]]);
        let s = serde_json::to_string(&m).unwrap();
        assert!(s.contains(r#"[["4","4"],["2","0"]]"#));
        assert_eq!(serde_json::from_str::<ExactMatrix>(&s).unwrap(), m);
    }

    #[test]
    fn ragged_rows_rejected() {
        let s = r#"{"field":"Q","rows":2,"cols":2,"entries":[["1","0"],["1"]]}"#;
        assert!(serde_json::from_str::<ExactMatrix>(s).is_err());
    }
}
