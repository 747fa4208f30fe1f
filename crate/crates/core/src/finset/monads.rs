//! Concrete monads on finite sets.

use super::cartesian::{CartesianCategory, CartesianMonad};
use super::finmap::{FinMap, FinSet};

/// The identity monad on any cartesian category.
#[derive(Clone, Copy, Debug, Default)]
pub struct IdentityMonad;

impl<C: CartesianCategory> CartesianMonad<C> for IdentityMonad {
    fn name(&self) -> String {
        "identity".into()
    }

    fn apply(&self, _cat: &C, x: &C::Obj) -> C::Obj {
        x.clone()
    }

    fn fmap(&self, _cat: &C, f: &C::Mor) -> C::Mor {
        f.clone()
    }

    fn unit(&self, cat: &C, x: &C::Obj) -> C::Mor {
        cat.identity(x)
    }

    fn mult(&self, cat: &C, x: &C::Obj) -> C::Mor {
        cat.identity(x)
    }
}

/// Largest set the power set monad will be applied to.
pub const POWERSET_CAP: usize = 16;

/// The covariant power set monad. Subsets of `{0..n}` are bitmasks, so `P(n) = {0..2^n}` in
/// numeric order; `e(x) = {x}` and `m` is union.
#[derive(Clone, Copy, Debug, Default)]
pub struct PowersetMonad;

pub fn subset_label(mask: usize, n: usize) -> String {
    let members: Vec<String> = (0..n)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| i.to_string())
        .collect();
    format!("{{{}}}", members.join(","))
}

impl CartesianMonad<FinSet> for PowersetMonad {
    fn name(&self) -> String {
        "powerset".into()
    }

    fn apply(&self, _cat: &FinSet, x: &usize) -> usize {
        assert!(
            *x <= POWERSET_CAP,
            "power set of a {x}-element set is too large"
        );
        1 << x
    }

    fn fmap(&self, _cat: &FinSet, f: &FinMap) -> FinMap {
        assert!(f.source <= POWERSET_CAP && f.target <= POWERSET_CAP);
        let table = (0..1usize << f.source)
            .map(|mask| {
                (0..f.source)
                    .filter(|i| mask >> i & 1 == 1)
                    .fold(0usize, |acc, i| acc | 1 << f.table[i])
            })
            .collect();
        FinMap::new(1 << f.source, 1 << f.target, table)
    }

    fn unit(&self, _cat: &FinSet, x: &usize) -> FinMap {
        FinMap::new(*x, 1 << x, (0..*x).map(|i| 1 << i).collect())
    }

    fn mult(&self, _cat: &FinSet, x: &usize) -> FinMap {
        let px = 1usize << x;
        assert!(px <= POWERSET_CAP, "P(P({x})) is too large");
        let table = (0..1usize << px)
            .map(|family| {
                (0..px)
                    .filter(|s| family >> s & 1 == 1)
                    .fold(0usize, |acc, s| acc | s)
            })
            .collect();
        FinMap::new(1 << px, px, table)
    }

    fn can_apply(&self, _cat: &FinSet, x: &usize) -> bool {
        *x <= POWERSET_CAP
    }

    fn element_labels(&self, _cat: &FinSet, x: &usize) -> Option<Vec<String>> {
        Some((0..1usize << x).map(|m| subset_label(m, *x)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_and_union() {
        let p = PowersetMonad;
        assert_eq!(p.apply(&FinSet, &0), 1);
        assert_eq!(p.apply(&FinSet, &3), 8);
        // P(P(1)) has elements indexed by families of {∅, {*}}; {{*}, ∅} is mask 0b11
        let m = p.mult(&FinSet, &1);
        assert_eq!(m.apply(0b11), 0b1);
        assert_eq!(m.apply(0b01), 0);
    }

    #[test]
    fn labels() {
        assert_eq!(subset_label(0b101, 3), "{0,2}");
        assert_eq!(subset_label(0, 2), "{}");
    }
}
