//! Presheaves of finite sets on a finite poset.

use std::fmt;

use serde::Serialize;

use super::cartesian::CartesianCategory;
use super::finmap::FinMap;

/// A partial order on `{0..size}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FinPoset {
    pub size: usize,
    pub leq: Vec<Vec<bool>>,
}

impl FinPoset {
    pub fn new(leq: Vec<Vec<bool>>) -> Result<Self, String> {
        let n = leq.len();
        if leq.iter().any(|row| row.len() != n) {
            return Err("order relation must be square".into());
        }
        for x in 0..n {
            if !leq[x][x] {
                return Err(format!("not reflexive at {x}"));
            }
            for y in 0..n {
                if x != y && leq[x][y] && leq[y][x] {
                    return Err(format!("not antisymmetric at {x}, {y}"));
                }
                for z in 0..n {
                    if leq[x][y] && leq[y][z] && !leq[x][z] {
                        return Err(format!("not transitive at {x} ≤ {y} ≤ {z}"));
                    }
                }
            }
        }
        Ok(FinPoset { size: n, leq })
    }

    /// `0 < 1 < … < n-1`.
    pub fn chain(n: usize) -> Self {
        FinPoset {
            size: n,
            leq: (0..n).map(|x| (0..n).map(|y| x <= y).collect()).collect(),
        }
    }

    pub fn discrete(n: usize) -> Self {
        FinPoset {
            size: n,
            leq: (0..n).map(|x| (0..n).map(|y| x == y).collect()).collect(),
        }
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x][y]
    }

    /// Elements `q ≤ p`, ascending.
    pub fn downset(&self, p: usize) -> Vec<usize> {
        (0..self.size).filter(|&q| self.leq[q][p]).collect()
    }

    /// Pairs `(p, q)` with `q < p`, ordered by `p` then `q`.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.size)
            .flat_map(|p| (0..self.size).filter(move |&q| q != p).map(move |q| (p, q)))
            .filter(|&(p, q)| self.leq[q][p])
            .collect()
    }

    /// Down-closed subsets as bitmasks, ascending.
    pub fn downsets(&self) -> Vec<usize> {
        (0..1usize << self.size)
            .filter(|m| {
                (0..self.size)
                    .all(|p| m >> p & 1 == 0 || self.downset(p).iter().all(|&q| m >> q & 1 == 1))
            })
            .collect()
    }
}

/// A functor `P^op → FinSet`: a set `X(p)` per element and `X(p) → X(q)` for each `q ≤ p`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Presheaf {
    pub sizes: Vec<usize>,
    /// `restrictions[p][q]` is present exactly when `q ≤ p`.
    pub restrictions: Vec<Vec<Option<FinMap>>>,
}

impl Presheaf {
    pub fn size_at(&self, p: usize) -> usize {
        self.sizes[p]
    }

    pub fn restriction(&self, p: usize, q: usize) -> &FinMap {
        self.restrictions[p][q]
            .as_ref()
            .unwrap_or_else(|| panic!("no restriction from {p} to {q}"))
    }

    pub fn total_size(&self) -> usize {
        self.sizes.iter().sum()
    }
}

impl fmt::Debug for Presheaf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.sizes)?;
        for (p, row) in self.restrictions.iter().enumerate() {
            for (q, r) in row.iter().enumerate() {
                if let Some(r) = r.as_ref().filter(|_| p != q) {
                    write!(f, " r{p}{q}={:?}", r.table)?;
                }
            }
        }
        Ok(())
    }
}

/// A natural transformation, one component per poset element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct NatTrans {
    pub source: Presheaf,
    pub target: Presheaf,
    pub components: Vec<FinMap>,
}

/// The presheaf category on a fixed poset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PresheafCategory {
    pub poset: FinPoset,
}

impl PresheafCategory {
    pub fn new(poset: FinPoset) -> Self {
        PresheafCategory { poset }
    }

    /// Builds a presheaf from its sizes and the restrictions along strict pairs `q < p`.
    pub fn presheaf(
        &self,
        sizes: Vec<usize>,
        strict: &[((usize, usize), FinMap)],
    ) -> Result<Presheaf, String> {
        let n = self.poset.size;
        if sizes.len() != n {
            return Err(format!("expected {n} sets, found {}", sizes.len()));
        }
        let mut restrictions: Vec<Vec<Option<FinMap>>> = (0..n)
            .map(|p| {
                (0..n)
                    .map(|q| (p == q).then(|| FinMap::identity(sizes[p])))
                    .collect()
            })
            .collect();
        for ((p, q), map) in strict {
            let (p, q) = (*p, *q);
            if p >= n || q >= n || p == q || !self.poset.leq(q, p) {
                return Err(format!("({p}, {q}) is not a strict pair of the poset"));
            }
            if map.source != sizes[p] || map.target != sizes[q] {
                return Err(format!(
                    "restriction {p}→{q} has shape {}→{}, expected {}→{}",
                    map.source, map.target, sizes[p], sizes[q]
                ));
            }
            restrictions[p][q] = Some(map.clone());
        }
        for (p, q) in self.poset.strict_pairs() {
            if restrictions[p][q].is_none() {
                return Err(format!("missing restriction {p}→{q}"));
            }
        }
        let x = Presheaf {
            sizes,
            restrictions,
        };
        self.check_functorial(&x)?;
        Ok(x)
    }

    fn check_functorial(&self, x: &Presheaf) -> Result<(), String> {
        let n = self.poset.size;
        for p in 0..n {
            for q in self.poset.downset(p) {
                for r in self.poset.downset(q) {
                    let via = x.restriction(q, r).after(x.restriction(p, q));
                    if via != *x.restriction(p, r) {
                        return Err(format!("restrictions do not compose along {r} ≤ {q} ≤ {p}"));
                    }
                }
            }
        }
        Ok(())
    }

    /// The empty presheaf, initial in the category.
    pub fn empty(&self) -> Presheaf {
        self.subterminal(0)
    }

    /// The subobject of `1` supported on a down-closed set, given as a bitmask.
    pub fn subterminal(&self, downset: usize) -> Presheaf {
        assert!(
            self.poset.downsets().contains(&downset),
            "support must be down-closed"
        );
        let sizes: Vec<usize> = (0..self.poset.size).map(|p| downset >> p & 1).collect();
        self.constant_presheaf(sizes)
    }

    /// Every subterminal presheaf, by ascending support bitmask.
    pub fn subterminals(&self) -> Vec<Presheaf> {
        self.poset
            .downsets()
            .into_iter()
            .map(|m| self.subterminal(m))
            .collect()
    }

    fn constant_presheaf(&self, sizes: Vec<usize>) -> Presheaf {
        let strict: Vec<_> = self
            .poset
            .strict_pairs()
            .into_iter()
            .map(|(p, q)| ((p, q), FinMap::constant(sizes[p], sizes[q], 0)))
            .collect();
        self.presheaf(sizes, &strict)
            .expect("constant restrictions into singletons are functorial")
    }

    /// Every presheaf with all sets of size at most `max`, in canonical order: sizes
    /// lexicographically, then restriction tables along `strict_pairs` lexicographically.
    pub fn inventory(&self, max: usize) -> Vec<Presheaf> {
        let n = self.poset.size;
        let pairs = self.poset.strict_pairs();
        let mut out = Vec::new();
        let mut sizes = vec![0usize; n];
        loop {
            let choices: Vec<Vec<FinMap>> = pairs
                .iter()
                .map(|&(p, q)| FinMap::all(sizes[p], sizes[q]).collect())
                .collect();
            let mut pick = vec![0usize; pairs.len()];
            if choices.iter().all(|c| !c.is_empty()) {
                loop {
                    let strict: Vec<_> = pairs
                        .iter()
                        .zip(&pick)
                        .enumerate()
                        .map(|(k, (&pq, &i))| (pq, choices[k][i].clone()))
                        .collect();
                    if let Ok(x) = self.presheaf(sizes.clone(), &strict) {
                        out.push(x);
                    }
                    if !advance(&mut pick, |k| choices[k].len()) {
                        break;
                    }
                }
            }
            if !advance(&mut sizes, |_| max + 1) {
                break;
            }
        }
        out
    }

    pub fn is_natural(&self, alpha: &NatTrans) -> bool {
        let (x, y) = (&alpha.source, &alpha.target);
        (0..self.poset.size).all(|p| {
            let c = &alpha.components[p];
            c.source == x.sizes[p] && c.target == y.sizes[p]
        }) && self.poset.strict_pairs().into_iter().all(|(p, q)| {
            y.restriction(p, q).after(&alpha.components[p])
                == alpha.components[q].after(x.restriction(p, q))
        })
    }

    fn nat(&self, source: &Presheaf, target: &Presheaf, components: Vec<FinMap>) -> NatTrans {
        let alpha = NatTrans {
            source: source.clone(),
            target: target.clone(),
            components,
        };
        debug_assert!(self.is_natural(&alpha), "components are not natural");
        alpha
    }
}

/// Odometer increment, least significant position last; false once it wraps around.
fn advance(digits: &mut [usize], radix: impl Fn(usize) -> usize) -> bool {
    for k in (0..digits.len()).rev() {
        digits[k] += 1;
        if digits[k] < radix(k) {
            return true;
        }
        digits[k] = 0;
    }
    false
}

impl CartesianCategory for PresheafCategory {
    type Obj = Presheaf;
    type Mor = NatTrans;

    fn identity(&self, x: &Presheaf) -> NatTrans {
        self.nat(x, x, x.sizes.iter().map(|&s| FinMap::identity(s)).collect())
    }

    fn compose(&self, g: &NatTrans, f: &NatTrans) -> NatTrans {
        assert_eq!(
            f.target, g.source,
            "natural transformations are not composable"
        );
        NatTrans {
            source: f.source.clone(),
            target: g.target.clone(),
            components: g
                .components
                .iter()
                .zip(&f.components)
                .map(|(gp, fp)| gp.after(fp))
                .collect(),
        }
    }

    fn source(&self, f: &NatTrans) -> Presheaf {
        f.source.clone()
    }

    fn target(&self, f: &NatTrans) -> Presheaf {
        f.target.clone()
    }

    fn terminal(&self) -> Presheaf {
        self.constant_presheaf(vec![1; self.poset.size])
    }

    fn bang(&self, x: &Presheaf) -> NatTrans {
        let one = self.terminal();
        self.nat(
            x,
            &one,
            x.sizes.iter().map(|&s| FinMap::constant(s, 1, 0)).collect(),
        )
    }

    fn product(&self, x: &Presheaf, y: &Presheaf) -> Presheaf {
        let sizes: Vec<usize> = x.sizes.iter().zip(&y.sizes).map(|(a, b)| a * b).collect();
        let strict: Vec<_> = self
            .poset
            .strict_pairs()
            .into_iter()
            .map(|(p, q)| {
                let (rx, ry) = (x.restriction(p, q), y.restriction(p, q));
                let table = (0..sizes[p])
                    .map(|k| rx.apply(k / y.sizes[p]) * y.sizes[q] + ry.apply(k % y.sizes[p]))
                    .collect();
                ((p, q), FinMap::new(sizes[p], sizes[q], table))
            })
            .collect();
        self.presheaf(sizes, &strict)
            .expect("products of presheaves are presheaves")
    }

    fn proj1(&self, x: &Presheaf, y: &Presheaf) -> NatTrans {
        let xy = self.product(x, y);
        let comps = (0..self.poset.size)
            .map(|p| {
                let b = y.sizes[p];
                FinMap::new(
                    xy.sizes[p],
                    x.sizes[p],
                    (0..xy.sizes[p]).map(|k| k / b).collect(),
                )
            })
            .collect();
        self.nat(&xy, x, comps)
    }

    fn proj2(&self, x: &Presheaf, y: &Presheaf) -> NatTrans {
        let xy = self.product(x, y);
        let comps = (0..self.poset.size)
            .map(|p| {
                let b = y.sizes[p];
                FinMap::new(xy.sizes[p], b, (0..xy.sizes[p]).map(|k| k % b).collect())
            })
            .collect();
        self.nat(&xy, y, comps)
    }

    fn pair(&self, f: &NatTrans, g: &NatTrans) -> NatTrans {
        assert_eq!(f.source, g.source, "pairing needs a common source");
        let target = self.product(&f.target, &g.target);
        let comps = f
            .components
            .iter()
            .zip(&g.components)
            .map(|(fp, gp)| {
                FinMap::new(
                    fp.source,
                    fp.target * gp.target,
                    (0..fp.source)
                        .map(|i| fp.apply(i) * gp.target + gp.apply(i))
                        .collect(),
                )
            })
            .collect();
        self.nat(&f.source, &target, comps)
    }

    /// Backtracks over components in element order, checking naturality as soon as both ends
    /// of a strict pair are chosen.
    fn homs(&self, x: &Presheaf, y: &Presheaf) -> Vec<NatTrans> {
        let n = self.poset.size;
        let candidates: Vec<Vec<FinMap>> = (0..n)
            .map(|p| FinMap::all(x.sizes[p], y.sizes[p]).collect())
            .collect();
        let mut out = Vec::new();
        let mut chosen: Vec<FinMap> = Vec::with_capacity(n);
        self.extend_homs(x, y, &candidates, &mut chosen, &mut out);
        out
    }

    fn is_iso(&self, f: &NatTrans) -> bool {
        f.components.iter().all(FinMap::is_bijective)
    }

    fn is_mono(&self, f: &NatTrans) -> bool {
        f.components.iter().all(FinMap::is_injective)
    }

    fn equalizer(&self, f: &NatTrans, g: &NatTrans) -> NatTrans {
        assert!(
            f.source == g.source && f.target == g.target,
            "parallel maps required"
        );
        let x = &f.source;
        let keep: Vec<Vec<usize>> = (0..self.poset.size)
            .map(|p| {
                (0..x.sizes[p])
                    .filter(|&i| f.components[p].apply(i) == g.components[p].apply(i))
                    .collect()
            })
            .collect();
        let sizes: Vec<usize> = keep.iter().map(Vec::len).collect();
        let strict: Vec<_> = self
            .poset
            .strict_pairs()
            .into_iter()
            .map(|(p, q)| {
                let r = x.restriction(p, q);
                let table = keep[p]
                    .iter()
                    .map(|&i| {
                        let j = r.apply(i);
                        keep[q]
                            .binary_search(&j)
                            .expect("equalizers are closed under restriction")
                    })
                    .collect();
                ((p, q), FinMap::new(sizes[p], sizes[q], table))
            })
            .collect();
        let e = self
            .presheaf(sizes.clone(), &strict)
            .expect("equalizer of natural maps is a presheaf");
        let comps = keep
            .into_iter()
            .enumerate()
            .map(|(p, k)| FinMap::new(sizes[p], x.sizes[p], k))
            .collect();
        self.nat(&e, x, comps)
    }

    fn factor_through(&self, f: &NatTrans, mono: &NatTrans) -> Option<NatTrans> {
        assert_eq!(f.target, mono.target, "factorization needs a common target");
        let comps = f
            .components
            .iter()
            .zip(&mono.components)
            .map(|(fp, mp)| super::finmap::FinSet.factor_through(fp, mp))
            .collect::<Option<Vec<_>>>()?;
        Some(self.nat(&f.source, &mono.source, comps))
    }

    fn size(&self, x: &Presheaf) -> usize {
        x.total_size()
    }

    fn describe(&self, x: &Presheaf) -> String {
        format!("{x:?}")
    }
}

impl PresheafCategory {
    fn extend_homs(
        &self,
        x: &Presheaf,
        y: &Presheaf,
        candidates: &[Vec<FinMap>],
        chosen: &mut Vec<FinMap>,
        out: &mut Vec<NatTrans>,
    ) {
        let p = chosen.len();
        if p == self.poset.size {
            out.push(NatTrans {
                source: x.clone(),
                target: y.clone(),
                components: chosen.clone(),
            });
            return;
        }
        for c in &candidates[p] {
            let natural = (0..p).all(|q| {
                if self.poset.leq(q, p) {
                    y.restriction(p, q).after(c) == chosen[q].after(x.restriction(p, q))
                } else if self.poset.leq(p, q) {
                    y.restriction(q, p).after(&chosen[q]) == c.after(x.restriction(q, p))
                } else {
                    true
                }
            });
            if natural {
                chosen.push(c.clone());
                self.extend_homs(x, y, candidates, chosen, out);
                chosen.pop();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two() -> PresheafCategory {
        PresheafCategory::new(FinPoset::chain(2))
    }

    #[test]
    fn inventory_on_two_chain() {
        // sizes (X0, X1) ≤ 2 with any map X1 → X0: 1+1+1+0+1+2+0+1+4
        assert_eq!(two().inventory(2).len(), 11);
    }

    #[test]
    fn subterminals_are_downsets() {
        let c = two();
        let subs = c.subterminals();
        assert_eq!(subs.len(), 3);
        assert_eq!(subs[1].sizes, vec![1, 0]);
        assert!(subs.iter().all(|u| c.is_mono(&c.bang(u))));
    }

    #[test]
    fn hom_counts() {
        let c = two();
        let one = c.terminal();
        let u = c.subterminal(0b01);
        assert_eq!(c.homs(&one, &u).len(), 0);
        assert_eq!(c.homs(&u, &one).len(), 1);
        assert_eq!(c.homs(&c.empty(), &u).len(), 1);
        let x = c
            .presheaf(vec![2, 2], &[((1, 0), FinMap::identity(2))])
            .unwrap();
        // natural endomaps of the identity-restricted presheaf: a single map of a 2-set
        assert_eq!(c.homs(&x, &x).len(), 4);
    }

    #[test]
    fn product_projections() {
        let c = two();
        let x = c
            .presheaf(vec![2, 1], &[((1, 0), FinMap::new(1, 2, vec![1]))])
            .unwrap();
        let y = c
            .presheaf(vec![2, 2], &[((1, 0), FinMap::new(2, 2, vec![0, 0]))])
            .unwrap();
        for f in c.homs(&c.product(&x, &y), &x) {
            for g in c.homs(&c.product(&x, &y), &y) {
                let h = c.pair(&f, &g);
                assert_eq!(c.compose(&c.proj1(&x, &y), &h), f);
                assert_eq!(c.compose(&c.proj2(&x, &y), &h), g);
            }
        }
    }
}
