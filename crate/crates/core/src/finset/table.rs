//! Materialized monads on the skeleton `{0..N}` of finite sets.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::cartesian::{CartesianCategory, CartesianMonad};
use super::finmap::{FinMap, FinSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableObject {
    pub n: usize,
    pub size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub unit: FinMap,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mult: Option<FinMap>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableArrow {
    pub map: FinMap,
    pub image: FinMap,
}

/// A monad on finite sets recorded on every object `n ≤ bound` and every map between them.
/// Multiplications are recorded where `T(T(n))` is buildable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableMonad {
    pub name: String,
    pub bound: usize,
    pub objects: Vec<TableObject>,
    pub arrows: Vec<TableArrow>,
    #[serde(skip)]
    lookup: BTreeMap<FinMap, usize>,
}

impl TableMonad {
    pub fn materialize<M: CartesianMonad<FinSet>>(t: &M, bound: usize) -> Self {
        let cat = FinSet;
        let objects = (0..=bound)
            .map(|n| {
                assert!(t.can_apply(&cat, &n), "T({n}) is beyond the size cap");
                let size = t.apply(&cat, &n);
                TableObject {
                    n,
                    size,
                    labels: t.element_labels(&cat, &n),
                    unit: t.unit(&cat, &n),
                    mult: t.can_apply(&cat, &size).then(|| t.mult(&cat, &n)),
                }
            })
            .collect();
        let arrows = (0..=bound)
            .flat_map(|a| (0..=bound).flat_map(move |b| FinMap::all(a, b)))
            .map(|map| TableArrow {
                image: t.fmap(&cat, &map),
                map,
            })
            .collect();
        let mut table = TableMonad {
            name: t.name(),
            bound,
            objects,
            arrows,
            lookup: BTreeMap::new(),
        };
        table.reindex();
        table
    }

    fn reindex(&mut self) {
        self.lookup = self
            .arrows
            .iter()
            .enumerate()
            .map(|(k, a)| (a.map.clone(), k))
            .collect();
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        let mut t: TableMonad = serde_json::from_str(text)?;
        t.reindex();
        Ok(t)
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.objects.iter().map(|o| o.size).collect()
    }

    /// Every map between skeleton objects.
    pub fn skeleton_maps(&self) -> Vec<FinMap> {
        self.arrows.iter().map(|a| a.map.clone()).collect()
    }
}

/// Reads the recorded tables back; only skeleton objects and maps are available.
impl CartesianMonad<FinSet> for TableMonad {
    fn name(&self) -> String {
        self.name.clone()
    }

    fn apply(&self, _cat: &FinSet, x: &usize) -> usize {
        self.objects[*x].size
    }

    fn fmap(&self, _cat: &FinSet, f: &FinMap) -> FinMap {
        let k = self
            .lookup
            .get(f)
            .unwrap_or_else(|| panic!("{f:?} is not a recorded skeleton map"));
        self.arrows[*k].image.clone()
    }

    fn unit(&self, _cat: &FinSet, x: &usize) -> FinMap {
        self.objects[*x].unit.clone()
    }

    fn mult(&self, _cat: &FinSet, x: &usize) -> FinMap {
        self.objects[*x]
            .mult
            .clone()
            .unwrap_or_else(|| panic!("multiplication at {x} was not recorded"))
    }

    fn can_apply(&self, _cat: &FinSet, x: &usize) -> bool {
        *x <= self.bound
    }

    fn element_labels(&self, _cat: &FinSet, x: &usize) -> Option<Vec<String>> {
        self.objects[*x].labels.clone()
    }
}

/// Compares a table against the monad it was read from on every recorded entry.
pub fn table_matches<M: CartesianMonad<FinSet>>(table: &TableMonad, t: &M) -> bool {
    let cat = FinSet;
    table.objects.iter().all(|o| {
        o.size == t.apply(&cat, &o.n)
            && o.unit == t.unit(&cat, &o.n)
            && o.mult.as_ref().is_none_or(|m| *m == t.mult(&cat, &o.n))
    }) && table.arrows.iter().all(|a| {
        a.image == t.fmap(&cat, &a.map) && cat.source(&a.image) == t.apply(&cat, &a.map.source)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finset::monads::PowersetMonad;

    #[test]
    fn powerset_table_round_trip() {
        let t = TableMonad::materialize(&PowersetMonad, 2);
        assert_eq!(t.sizes(), vec![1, 2, 4]);
        assert_eq!(t.arrows.len(), 1 + 1 + 1 + 0 + 1 + 2 + 0 + 1 + 4);
        let back = TableMonad::from_json(&serde_json::to_string(&t).unwrap()).unwrap();
        assert_eq!(back, t);
        assert!(table_matches(&back, &PowersetMonad));
        assert_eq!(
            back.fmap(&FinSet, &FinMap::new(2, 1, vec![0, 0])).table,
            vec![0, 1, 1, 1]
        );
    }
}
