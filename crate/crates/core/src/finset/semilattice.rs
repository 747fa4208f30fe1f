//! Complete join-semilattices as power set algebras, the map `ω: X̄ → X×2`, and the
//! coreflection of nonempty-join semilattices into the slice over `2`.

use serde::Serialize;

use super::cartesian::CartesianMonad;
use super::finmap::{FinMap, FinSet};
use super::monads::PowersetMonad;

/// A finite complete join-semilattice on `{0..size}`, stored as binary joins plus a bottom.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompleteSemilattice {
    pub size: usize,
    pub bottom: usize,
    pub join: Vec<Vec<usize>>,
    pub leq: Vec<Vec<bool>>,
}

impl CompleteSemilattice {
    /// Reads the order off a structure map `h: P(n) → n`: `x ≤ y` iff `h{x,y} = y`.
    pub fn from_algebra(h: &FinMap) -> Result<Self, String> {
        let n = h.target;
        if h.source != 1 << n {
            return Err(format!(
                "structure map has source {} but P({n}) has {}",
                h.source,
                1usize << n
            ));
        }
        let join: Vec<Vec<usize>> = (0..n)
            .map(|x| (0..n).map(|y| h.apply(1 << x | 1 << y)).collect())
            .collect();
        let leq = (0..n)
            .map(|x| (0..n).map(|y| join[x][y] == y).collect())
            .collect();
        let lattice = CompleteSemilattice {
            size: n,
            bottom: h.apply(0),
            join,
            leq,
        };
        if !lattice.is_valid() {
            return Err("structure map does not come from a complete semilattice".into());
        }
        if lattice.structure_map() != *h {
            return Err("structure map is not the join of its own order".into());
        }
        Ok(lattice)
    }

    /// The chain `0 < 1 < … < n-1`.
    pub fn chain(n: usize) -> Self {
        assert!(n > 0, "the empty set has no bottom");
        CompleteSemilattice {
            size: n,
            bottom: 0,
            join: (0..n).map(|x| (0..n).map(|y| x.max(y)).collect()).collect(),
            leq: (0..n).map(|x| (0..n).map(|y| x <= y).collect()).collect(),
        }
    }

    /// Join of the subset encoded by `mask`; the empty join is the bottom.
    pub fn join_of(&self, mask: usize) -> usize {
        (0..self.size)
            .filter(|i| mask >> i & 1 == 1)
            .fold(self.bottom, |acc, i| self.join[acc][i])
    }

    /// `P(n) → n`, `S ↦ ⋁S`.
    pub fn structure_map(&self) -> FinMap {
        FinMap::new(
            1 << self.size,
            self.size,
            (0..1usize << self.size).map(|m| self.join_of(m)).collect(),
        )
    }

    /// Partial order, least element, and every binary join a least upper bound.
    pub fn is_valid(&self) -> bool {
        let n = self.size;
        if n == 0 || self.bottom >= n {
            return false;
        }
        let l = &self.leq;
        let order = (0..n).all(|x| l[x][x])
            && (0..n).all(|x| (0..n).all(|y| x == y || !(l[x][y] && l[y][x])))
            && (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| !(l[x][y] && l[y][z]) || l[x][z])));
        let least = (0..n).all(|x| l[self.bottom][x]);
        let lub = (0..n).all(|x| {
            (0..n).all(|y| {
                let j = self.join[x][y];
                l[x][j] && l[y][j] && (0..n).all(|z| !(l[x][z] && l[y][z]) || l[j][z])
            })
        });
        order && least && lub
    }
}

/// `X̄`: `X` with a fresh bottom at index `size`.
pub fn with_new_bottom(x: &CompleteSemilattice) -> CompleteSemilattice {
    let n = x.size;
    let old = |i: usize| i < n;
    CompleteSemilattice {
        size: n + 1,
        bottom: n,
        join: (0..=n)
            .map(|a| {
                (0..=n)
                    .map(|b| match (old(a), old(b)) {
                        (true, true) => x.join[a][b],
                        (true, false) => a,
                        (false, _) => b,
                    })
                    .collect()
            })
            .collect(),
        leq: (0..=n)
            .map(|a| {
                (0..=n)
                    .map(|b| !old(a) || (old(b) && x.leq[a][b]))
                    .collect()
            })
            .collect(),
    }
}

/// `ω: X̄ → X×2`, `x ↦ (x, 1)` and the new bottom `↦ (0_X, 0)`. The pair `(x, b)` has index `2x + b`.
pub fn omega(x: &CompleteSemilattice) -> FinMap {
    let n = x.size;
    let table = (0..=n)
        .map(|i| if i < n { 2 * i + 1 } else { 2 * x.bottom })
        .collect();
    FinMap::new(n + 1, 2 * n, table)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OmegaReport {
    pub carrier: usize,
    pub omega: FinMap,
    pub injective: bool,
    pub order_preserving: bool,
    pub bijective: bool,
    /// Pairs `(x, b)` of `X×2` outside the image.
    pub missed: Vec<(usize, usize)>,
}

pub fn omega_report(x: &CompleteSemilattice) -> OmegaReport {
    let w = omega(x);
    let bar = with_new_bottom(x);
    let product_leq = |p: usize, q: usize| x.leq[p / 2][q / 2] && p % 2 <= q % 2;
    let order_preserving = (0..bar.size)
        .all(|a| (0..bar.size).all(|b| !bar.leq[a][b] || product_leq(w.apply(a), w.apply(b))));
    OmegaReport {
        carrier: x.size,
        injective: w.is_injective(),
        bijective: w.is_bijective(),
        missed: w.missed().into_iter().map(|k| (k / 2, k % 2)).collect(),
        order_preserving,
        omega: w,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoreflectionCheck {
    pub carrier: usize,
    /// `X̄` with the extended joins is a power set algebra.
    pub extension_is_algebra: bool,
    /// `X̄ → 2` preserves all joins.
    pub slice_map_preserves_joins: bool,
    /// `ω⁻¹(1)` is closed under nonempty joins and carries the original structure.
    pub recovers_algebra: bool,
}

impl CoreflectionCheck {
    pub fn holds(&self) -> bool {
        self.extension_is_algebra && self.slice_map_preserves_joins && self.recovers_algebra
    }
}

/// Checks `r ∘ ī ≅ 1` at a nonempty-subset algebra `h⁺: P⁺(n) → n`, whose source element `k`
/// is the subset with bitmask `k + 1`.
pub fn coreflection_check(h_plus: &FinMap) -> CoreflectionCheck {
    let n = h_plus.target;
    assert_eq!(
        h_plus.source + 1,
        1 << n,
        "source must be the nonempty subsets of {n}"
    );
    let bar = n + 1;
    let old_part = (1usize << n) - 1;
    let h_bar = FinMap::new(
        1 << bar,
        bar,
        (0..1usize << bar)
            .map(|m| match m & old_part {
                0 => n,
                s => h_plus.apply(s - 1),
            })
            .collect(),
    );
    let p = PowersetMonad;
    let extension_is_algebra = h_bar.after(&p.unit(&FinSet, &bar)) == FinMap::identity(bar)
        && h_bar.after(&p.mult(&FinSet, &bar)) == h_bar.after(&p.fmap(&FinSet, &h_bar));
    let slice = FinMap::new(bar, 2, (0..bar).map(|i| usize::from(i < n)).collect());
    let slice_map_preserves_joins = (0..1usize << bar).all(|m| {
        let image_max = (0..bar)
            .filter(|i| m >> i & 1 == 1)
            .map(|i| slice.apply(i))
            .max();
        slice.apply(h_bar.apply(m)) == image_max.unwrap_or(0)
    });
    let fibre: Vec<usize> = (0..bar).filter(|&i| slice.apply(i) == 1).collect();
    let recovers_algebra = fibre == (0..n).collect::<Vec<_>>()
        && (1..1usize << n).all(|m| {
            let j = h_bar.apply(m);
            slice.apply(j) == 1 && j == h_plus.apply(m - 1)
        });
    CoreflectionCheck {
        carrier: n,
        extension_is_algebra,
        slice_map_preserves_joins,
        recovers_algebra,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_chain_omega_misses_one_zero() {
        let r = omega_report(&CompleteSemilattice::chain(2));
        assert!(r.injective && r.order_preserving && !r.bijective);
        assert_eq!(r.missed, vec![(1, 0)]);
        assert!(omega_report(&CompleteSemilattice::chain(1)).bijective);
    }

    #[test]
    fn chain_round_trips_through_structure_map() {
        let c = CompleteSemilattice::chain(3);
        assert_eq!(
            CompleteSemilattice::from_algebra(&c.structure_map()).unwrap(),
            c
        );
        let bar = with_new_bottom(&c);
        assert!(bar.is_valid());
        assert_eq!(bar.bottom, 3);
    }
}
