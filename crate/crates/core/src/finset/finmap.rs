use std::fmt;

use serde::{Deserialize, Serialize};

use super::cartesian::CartesianCategory;

/// A total function `{0..source} → {0..target}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FinMap {
    pub source: usize,
    pub target: usize,
    pub table: Vec<usize>,
}

impl FinMap {
    pub fn new(source: usize, target: usize, table: Vec<usize>) -> Self {
        assert_eq!(
            table.len(),
            source,
            "table length must equal the source size"
        );
        assert!(
            table.iter().all(|&y| y < target),
            "table entry out of range for target {target}"
        );
        FinMap {
            source,
            target,
            table,
        }
    }

    pub fn identity(n: usize) -> Self {
        FinMap::new(n, n, (0..n).collect())
    }

    pub fn constant(source: usize, target: usize, value: usize) -> Self {
        FinMap::new(source, target, vec![value; source])
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &FinMap) -> FinMap {
        assert_eq!(first.target, self.source, "maps are not composable");
        FinMap::new(
            first.source,
            self.target,
            first.table.iter().map(|&x| self.table[x]).collect(),
        )
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target];
        self.table
            .iter()
            .all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.target];
        for &y in &self.table {
            seen[y] = true;
        }
        seen.into_iter().all(|b| b)
    }

    pub fn is_bijective(&self) -> bool {
        self.source == self.target && self.is_injective()
    }

    /// Target elements outside the image, ascending.
    pub fn missed(&self) -> Vec<usize> {
        let mut seen = vec![false; self.target];
        for &y in &self.table {
            seen[y] = true;
        }
        (0..self.target).filter(|&y| !seen[y]).collect()
    }

    /// All maps `source → target` in lexicographic table order.
    pub fn all(source: usize, target: usize) -> AllMaps {
        AllMaps {
            source,
            target,
            next: if target == 0 && source > 0 {
                None
            } else {
                Some(vec![0; source])
            },
        }
    }

    /// Number of maps `source → target`, saturating.
    pub fn count(source: usize, target: usize) -> usize {
        let mut n: usize = 1;
        for _ in 0..source {
            n = n.saturating_mul(target);
        }
        n
    }
}

impl fmt::Debug for FinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}→{} {:?}", self.source, self.target, self.table)
    }
}

pub struct AllMaps {
    source: usize,
    target: usize,
    next: Option<Vec<usize>>,
}

impl Iterator for AllMaps {
    type Item = FinMap;

    fn next(&mut self) -> Option<FinMap> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        let mut pos = self.source;
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            succ[pos] += 1;
            if succ[pos] < self.target {
                self.next = Some(succ);
                break;
            }
            succ[pos] = 0;
        }
        Some(FinMap::new(self.source, self.target, cur))
    }
}

/// Finite sets `{0..n}` and all functions between them. Products are `a·b` with pair `(i, j)`
/// at `i·b + j`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FinSet;

impl CartesianCategory for FinSet {
    type Obj = usize;
    type Mor = FinMap;

    fn identity(&self, x: &usize) -> FinMap {
        FinMap::identity(*x)
    }

    fn compose(&self, g: &FinMap, f: &FinMap) -> FinMap {
        g.after(f)
    }

    fn source(&self, f: &FinMap) -> usize {
        f.source
    }

    fn target(&self, f: &FinMap) -> usize {
        f.target
    }

    fn terminal(&self) -> usize {
        1
    }

    fn bang(&self, x: &usize) -> FinMap {
        FinMap::constant(*x, 1, 0)
    }

    fn product(&self, x: &usize, y: &usize) -> usize {
        x * y
    }

    fn proj1(&self, x: &usize, y: &usize) -> FinMap {
        FinMap::new(x * y, *x, (0..x * y).map(|k| k / y).collect())
    }

    fn proj2(&self, x: &usize, y: &usize) -> FinMap {
        FinMap::new(x * y, *y, (0..x * y).map(|k| k % y).collect())
    }

    fn pair(&self, f: &FinMap, g: &FinMap) -> FinMap {
        assert_eq!(f.source, g.source, "pairing needs a common source");
        FinMap::new(
            f.source,
            f.target * g.target,
            (0..f.source)
                .map(|i| f.table[i] * g.target + g.table[i])
                .collect(),
        )
    }

    fn homs(&self, x: &usize, y: &usize) -> Vec<FinMap> {
        FinMap::all(*x, *y).collect()
    }

    fn hom_count(&self, x: &usize, y: &usize) -> usize {
        FinMap::count(*x, *y)
    }

    fn is_iso(&self, f: &FinMap) -> bool {
        f.is_bijective()
    }

    fn is_mono(&self, f: &FinMap) -> bool {
        f.is_injective()
    }

    fn equalizer(&self, f: &FinMap, g: &FinMap) -> FinMap {
        assert_eq!(
            (f.source, f.target),
            (g.source, g.target),
            "parallel maps required"
        );
        let keep: Vec<usize> = (0..f.source)
            .filter(|&i| f.table[i] == g.table[i])
            .collect();
        FinMap::new(keep.len(), f.source, keep)
    }

    fn factor_through(&self, f: &FinMap, mono: &FinMap) -> Option<FinMap> {
        assert_eq!(f.target, mono.target, "factorization needs a common target");
        let mut preimage = vec![None; mono.target];
        for (e, &x) in mono.table.iter().enumerate() {
            preimage[x] = Some(e);
        }
        let table = f
            .table
            .iter()
            .map(|&x| preimage[x])
            .collect::<Option<Vec<_>>>()?;
        Some(FinMap::new(f.source, mono.source, table))
    }

    fn size(&self, x: &usize) -> usize {
        *x
    }

    fn element_image(&self, f: &FinMap, k: usize) -> Option<usize> {
        Some(f.apply(k))
    }

    fn describe(&self, x: &usize) -> String {
        x.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts() {
        assert_eq!(FinMap::all(3, 2).count(), 8);
        assert_eq!(FinMap::all(0, 0).count(), 1);
        assert_eq!(FinMap::all(2, 0).count(), 0);
        assert_eq!(FinMap::all(0, 5).count(), 1);
        let v: Vec<_> = FinMap::all(2, 2).map(|m| m.table).collect();
        assert_eq!(v, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn pairing_and_projections() {
        let c = FinSet;
        let f = FinMap::new(2, 3, vec![2, 0]);
        let g = FinMap::new(2, 2, vec![1, 1]);
        let p = c.pair(&f, &g);
        assert_eq!(c.proj1(&3, &2).after(&p), f);
        assert_eq!(c.proj2(&3, &2).after(&p), g);
    }

    #[test]
    fn equalizer_factorization() {
        let c = FinSet;
        let f = FinMap::new(3, 2, vec![0, 1, 1]);
        let g = FinMap::new(3, 2, vec![0, 0, 1]);
        let e = c.equalizer(&f, &g);
        assert_eq!(e.table, vec![0, 2]);
        let h = FinMap::new(1, 3, vec![2]);
        assert_eq!(c.factor_through(&h, &e).unwrap().table, vec![1]);
        assert!(c.factor_through(&FinMap::new(1, 3, vec![1]), &e).is_none());
    }
}
