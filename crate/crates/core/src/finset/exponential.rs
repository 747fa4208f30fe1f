//! Exponentials of presheaves and the exponential monad `(−)^u` of a subterminal `u`.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use serde::Serialize;

use super::cartesian::{CartesianCategory, CartesianMonad};
use super::finmap::FinMap;
use super::presheaf::{NatTrans, Presheaf, PresheafCategory};

/// Largest number of elements at one poset element of an exponential.
pub const EXPONENTIAL_CAP: usize = 1 << 16;

/// `Y^X` with `(Y^X)(p)` the natural families `(f_q: X(q) → Y(q))_{q ≤ p}`, listed in
/// lexicographic order of their tables.
#[derive(Clone, Debug)]
pub struct Exponential {
    pub base: Presheaf,
    pub value: Presheaf,
    pub object: Presheaf,
    downsets: Vec<Vec<usize>>,
    families: Vec<Vec<Vec<FinMap>>>,
    index: Vec<HashMap<Vec<FinMap>, usize>>,
}

impl Exponential {
    /// The family with index `k` at `p`, one map per element of the downset of `p`.
    pub fn family(&self, p: usize, k: usize) -> &[FinMap] {
        &self.families[p][k]
    }

    pub fn index_of(&self, p: usize, family: &[FinMap]) -> Option<usize> {
        self.index[p].get(family).copied()
    }

    /// The component of a family at `q`, where `q ≤ p`.
    pub fn component<'a>(&self, p: usize, family: &'a [FinMap], q: usize) -> &'a FinMap {
        let pos = self.downsets[p]
            .binary_search(&q)
            .unwrap_or_else(|_| panic!("{q} is not below {p}"));
        &family[pos]
    }

    /// `ev: Y^X × X → Y`.
    pub fn eval(&self, cat: &PresheafCategory) -> NatTrans {
        let source = cat.product(&self.object, &self.base);
        let comps = (0..cat.poset.size)
            .map(|p| {
                let b = self.base.sizes[p];
                let table = (0..source.sizes[p])
                    .map(|k| self.component(p, self.family(p, k / b), p).apply(k % b))
                    .collect();
                FinMap::new(source.sizes[p], self.value.sizes[p], table)
            })
            .collect();
        NatTrans {
            source,
            target: self.value.clone(),
            components: comps,
        }
    }

    /// The transpose `Z → Y^X` of `α: Z×X → Y`.
    pub fn curry(&self, cat: &PresheafCategory, z: &Presheaf, alpha: &NatTrans) -> NatTrans {
        let comps = (0..cat.poset.size)
            .map(|p| {
                let table = (0..z.sizes[p])
                    .map(|e| {
                        let family: Vec<FinMap> = self.downsets[p]
                            .iter()
                            .map(|&q| {
                                let zq = z.restriction(p, q).apply(e);
                                let b = self.base.sizes[q];
                                FinMap::new(
                                    b,
                                    self.value.sizes[q],
                                    (0..b)
                                        .map(|x| alpha.components[q].apply(zq * b + x))
                                        .collect(),
                                )
                            })
                            .collect();
                        self.index_of(p, &family)
                            .expect("transposes are natural families")
                    })
                    .collect();
                FinMap::new(z.sizes[p], self.object.sizes[p], table)
            })
            .collect();
        NatTrans {
            source: z.clone(),
            target: self.object.clone(),
            components: comps,
        }
    }

    /// `ev ∘ (β × 1_X)` for `β: Z → Y^X`.
    pub fn uncurry(&self, cat: &PresheafCategory, beta: &NatTrans) -> NatTrans {
        let id = cat.identity(&self.base);
        cat.compose(&self.eval(cat), &cat.product_map(beta, &id))
    }
}

impl PresheafCategory {
    /// Elements of `(Y^X)(p)` summed over all `p`, or `None` past `EXPONENTIAL_CAP` at some `p`.
    pub fn exponential_size(&self, x: &Presheaf, y: &Presheaf) -> Option<usize> {
        let mut total = 0usize;
        for p in 0..self.poset.size {
            let mut bound = 1usize;
            for q in self.poset.downset(p) {
                bound = bound.saturating_mul(FinMap::count(x.sizes[q], y.sizes[q]));
            }
            if bound > EXPONENTIAL_CAP {
                return None;
            }
            total += bound;
        }
        Some(total)
    }

    /// `Y^X`, computed pointwise as natural families over each downset.
    pub fn exponential(&self, x: &Presheaf, y: &Presheaf) -> Exponential {
        assert!(
            self.exponential_size(x, y).is_some(),
            "exponential exceeds the size cap"
        );
        let n = self.poset.size;
        let downsets: Vec<Vec<usize>> = (0..n).map(|p| self.poset.downset(p)).collect();
        let families: Vec<Vec<Vec<FinMap>>> = (0..n)
            .map(|p| {
                let mut out = Vec::new();
                self.extend_families(x, y, &downsets[p], &mut Vec::new(), &mut out);
                out
            })
            .collect();
        let index: Vec<HashMap<Vec<FinMap>, usize>> = families
            .iter()
            .map(|fs| {
                fs.iter()
                    .cloned()
                    .enumerate()
                    .map(|(k, f)| (f, k))
                    .collect()
            })
            .collect();
        let sizes: Vec<usize> = families.iter().map(Vec::len).collect();
        let strict: Vec<_> = self
            .poset
            .strict_pairs()
            .into_iter()
            .map(|(p, q)| {
                let keep: Vec<usize> = downsets[q]
                    .iter()
                    .map(|r| downsets[p].binary_search(r).expect("downsets are nested"))
                    .collect();
                let table = families[p]
                    .iter()
                    .map(|f| {
                        let restricted: Vec<FinMap> = keep.iter().map(|&i| f[i].clone()).collect();
                        index[q][&restricted]
                    })
                    .collect();
                ((p, q), FinMap::new(sizes[p], sizes[q], table))
            })
            .collect();
        let object = self
            .presheaf(sizes, &strict)
            .expect("exponentials are presheaves");
        Exponential {
            base: x.clone(),
            value: y.clone(),
            object,
            downsets,
            families,
            index,
        }
    }

    fn extend_families(
        &self,
        x: &Presheaf,
        y: &Presheaf,
        down: &[usize],
        chosen: &mut Vec<FinMap>,
        out: &mut Vec<Vec<FinMap>>,
    ) {
        let k = chosen.len();
        if k == down.len() {
            out.push(chosen.clone());
            return;
        }
        let q = down[k];
        for f in FinMap::all(x.sizes[q], y.sizes[q]) {
            let natural = (0..k).all(|i| {
                let r = down[i];
                if self.poset.leq(r, q) {
                    y.restriction(q, r).after(&f) == chosen[i].after(x.restriction(q, r))
                } else if self.poset.leq(q, r) {
                    y.restriction(r, q).after(&chosen[i]) == f.after(x.restriction(r, q))
                } else {
                    true
                }
            });
            if natural {
                chosen.push(f);
                self.extend_families(x, y, down, chosen, out);
                chosen.pop();
            }
        }
    }

    /// `Y^k: Y^B → Y^A` for `k: A → B`, by precomposition.
    pub fn precompose(&self, k: &NatTrans, from: &Exponential, to: &Exponential) -> NatTrans {
        assert!(from.base == k.target && to.base == k.source && from.value == to.value);
        let comps = (0..self.poset.size)
            .map(|p| {
                let table = (0..from.object.sizes[p])
                    .map(|i| {
                        let family: Vec<FinMap> = from
                            .family(p, i)
                            .iter()
                            .zip(&from.downsets[p])
                            .map(|(f, &q)| f.after(&k.components[q]))
                            .collect();
                        to.index_of(p, &family)
                            .expect("precomposition keeps naturality")
                    })
                    .collect();
                FinMap::new(from.object.sizes[p], to.object.sizes[p], table)
            })
            .collect();
        NatTrans {
            source: from.object.clone(),
            target: to.object.clone(),
            components: comps,
        }
    }

    pub fn is_subterminal(&self, u: &Presheaf) -> bool {
        self.is_mono(&self.bang(u))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdjunctionCheck {
    pub triples: usize,
    pub pairs_compared: usize,
    /// Currying is a bijection `Hom(Z×X, Y) → Hom(Z, Y^X)` inverted by uncurrying, on every triple.
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

/// Verifies `Hom(Z×X, Y) ≅ Hom(Z, Y^X)` for every triple drawn from `objects`.
pub fn adjunction_check(cat: &PresheafCategory, objects: &[Presheaf]) -> AdjunctionCheck {
    let mut triples = 0;
    let mut pairs_compared = 0;
    for x in objects {
        for y in objects {
            if cat.exponential_size(x, y).is_none() {
                continue;
            }
            let exp = cat.exponential(x, y);
            for z in objects {
                triples += 1;
                let left = cat.homs(&cat.product(z, x), y);
                let right = cat.homs(z, &exp.object);
                let curried: Vec<NatTrans> = left.iter().map(|a| exp.curry(cat, z, a)).collect();
                let mut seen = std::collections::HashSet::new();
                let injective = curried.iter().all(|c| seen.insert(c.clone()));
                let round_trip = left
                    .iter()
                    .zip(&curried)
                    .all(|(a, c)| exp.uncurry(cat, c) == *a);
                pairs_compared += left.len();
                if left.len() != right.len() || !injective || !round_trip {
                    return AdjunctionCheck {
                        triples,
                        pairs_compared,
                        holds: false,
                        failure: Some(format!(
                            "Z={z:?} X={x:?} Y={y:?}: |Hom(Z×X,Y)|={} |Hom(Z,Y^X)|={}",
                            left.len(),
                            right.len()
                        )),
                    };
                }
            }
        }
    }
    AdjunctionCheck {
        triples,
        pairs_compared,
        holds: true,
        failure: None,
    }
}

/// The monad `x ↦ x^u` for a subterminal `u`, with `e_x = x^{!_u}` and `m_x = x^{Δ_u}`.
#[derive(Clone, Debug)]
pub struct ExponentialMonad {
    pub u: Presheaf,
    cache: RefCell<HashMap<Presheaf, Rc<Exponential>>>,
}

impl ExponentialMonad {
    pub fn new(cat: &PresheafCategory, u: Presheaf) -> Result<Self, String> {
        if !cat.is_subterminal(&u) {
            return Err(format!("{u:?} is not subterminal"));
        }
        let diag = cat.pair(&cat.identity(&u), &cat.identity(&u));
        if !cat.is_iso(&diag) {
            return Err("the diagonal of u is not invertible".into());
        }
        Ok(ExponentialMonad {
            u,
            cache: RefCell::new(HashMap::new()),
        })
    }

    /// `x^u`, memoized.
    pub fn power(&self, cat: &PresheafCategory, x: &Presheaf) -> Rc<Exponential> {
        if let Some(e) = self.cache.borrow().get(x) {
            return Rc::clone(e);
        }
        let e = Rc::new(cat.exponential(&self.u, x));
        self.cache.borrow_mut().insert(x.clone(), Rc::clone(&e));
        e
    }

    /// `m_x` computed as `x^{Δ_u}` after the currying isomorphism `(x^u)^u ≅ x^{u×u}`.
    pub fn mult_via_diagonal(&self, cat: &PresheafCategory, x: &Presheaf) -> NatTrans {
        let u = &self.u;
        let e = self.power(cat, x);
        let ee = self.power(cat, &e.object);
        let uu = cat.product(u, u);
        let e2 = cat.exponential(&uu, x);
        let comps = (0..cat.poset.size)
            .map(|p| {
                let table = (0..ee.object.sizes[p])
                    .map(|i| {
                        let phi = ee.family(p, i);
                        let psi: Vec<FinMap> = cat
                            .poset
                            .downset(p)
                            .into_iter()
                            .map(|q| {
                                let phi_q = ee.component(p, phi, q);
                                let n = u.sizes[q];
                                let table = (0..n * n)
                                    .map(|st| {
                                        let inner = e.family(q, phi_q.apply(st / n));
                                        e.component(q, inner, q).apply(st % n)
                                    })
                                    .collect();
                                FinMap::new(n * n, x.sizes[q], table)
                            })
                            .collect();
                        e2.index_of(p, &psi)
                            .expect("uncurried families are natural")
                    })
                    .collect();
                FinMap::new(ee.object.sizes[p], e2.object.sizes[p], table)
            })
            .collect();
        let uncurry = NatTrans {
            source: ee.object.clone(),
            target: e2.object.clone(),
            components: comps,
        };
        assert!(cat.is_iso(&uncurry), "(x^u)^u → x^(u×u) must be invertible");
        let diag = cat.pair(&cat.identity(u), &cat.identity(u));
        cat.compose(&cat.precompose(&diag, &e2, &e), &uncurry)
    }

    /// `e_x` computed as `x^{!_u}` after `x ≅ x^1`.
    pub fn unit_via_bang(&self, cat: &PresheafCategory, x: &Presheaf) -> NatTrans {
        let one = cat.terminal();
        let e1 = cat.exponential(&one, x);
        let e = self.power(cat, x);
        let comps = (0..cat.poset.size)
            .map(|p| {
                let table = (0..x.sizes[p])
                    .map(|a| {
                        let family: Vec<FinMap> = cat
                            .poset
                            .downset(p)
                            .into_iter()
                            .map(|q| FinMap::new(1, x.sizes[q], vec![x.restriction(p, q).apply(a)]))
                            .collect();
                        e1.index_of(p, &family)
                            .expect("points form natural families")
                    })
                    .collect();
                FinMap::new(x.sizes[p], e1.object.sizes[p], table)
            })
            .collect();
        let to_power_one = NatTrans {
            source: x.clone(),
            target: e1.object.clone(),
            components: comps,
        };
        assert!(cat.is_iso(&to_power_one), "x → x^1 must be invertible");
        cat.compose(&cat.precompose(&cat.bang(&self.u), &e1, &e), &to_power_one)
    }
}

impl CartesianMonad<PresheafCategory> for ExponentialMonad {
    fn name(&self) -> String {
        format!("exponential by {:?}", self.u)
    }

    fn apply(&self, cat: &PresheafCategory, x: &Presheaf) -> Presheaf {
        self.power(cat, x).object.clone()
    }

    fn fmap(&self, cat: &PresheafCategory, f: &NatTrans) -> NatTrans {
        let ex = self.power(cat, &f.source);
        let ey = self.power(cat, &f.target);
        let comps = (0..cat.poset.size)
            .map(|p| {
                let table = (0..ex.object.sizes[p])
                    .map(|i| {
                        let family: Vec<FinMap> = ex
                            .family(p, i)
                            .iter()
                            .zip(cat.poset.downset(p))
                            .map(|(g, q)| f.components[q].after(g))
                            .collect();
                        ey.index_of(p, &family)
                            .expect("postcomposition keeps naturality")
                    })
                    .collect();
                FinMap::new(ex.object.sizes[p], ey.object.sizes[p], table)
            })
            .collect();
        NatTrans {
            source: ex.object.clone(),
            target: ey.object.clone(),
            components: comps,
        }
    }

    fn unit(&self, cat: &PresheafCategory, x: &Presheaf) -> NatTrans {
        let e = self.power(cat, x);
        let comps = (0..cat.poset.size)
            .map(|p| {
                let table = (0..x.sizes[p])
                    .map(|a| {
                        let family: Vec<FinMap> = cat
                            .poset
                            .downset(p)
                            .into_iter()
                            .map(|q| {
                                FinMap::constant(
                                    self.u.sizes[q],
                                    x.sizes[q],
                                    x.restriction(p, q).apply(a),
                                )
                            })
                            .collect();
                        e.index_of(p, &family)
                            .expect("constant families are natural")
                    })
                    .collect();
                FinMap::new(x.sizes[p], e.object.sizes[p], table)
            })
            .collect();
        NatTrans {
            source: x.clone(),
            target: e.object.clone(),
            components: comps,
        }
    }

    fn mult(&self, cat: &PresheafCategory, x: &Presheaf) -> NatTrans {
        let e = self.power(cat, x);
        let ee = self.power(cat, &e.object);
        let comps = (0..cat.poset.size)
            .map(|p| {
                let table = (0..ee.object.sizes[p])
                    .map(|i| {
                        let phi = ee.family(p, i);
                        let family: Vec<FinMap> = cat
                            .poset
                            .downset(p)
                            .into_iter()
                            .map(|q| {
                                let phi_q = ee.component(p, phi, q);
                                let table = (0..self.u.sizes[q])
                                    .map(|s| {
                                        e.component(q, e.family(q, phi_q.apply(s)), q).apply(s)
                                    })
                                    .collect();
                                FinMap::new(self.u.sizes[q], x.sizes[q], table)
                            })
                            .collect();
                        e.index_of(p, &family)
                            .expect("diagonal families are natural")
                    })
                    .collect();
                FinMap::new(ee.object.sizes[p], e.object.sizes[p], table)
            })
            .collect();
        NatTrans {
            source: ee.object.clone(),
            target: e.object.clone(),
            components: comps,
        }
    }

    fn can_apply(&self, cat: &PresheafCategory, x: &Presheaf) -> bool {
        cat.exponential_size(&self.u, x).is_some()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonEquivalenceWitness {
    pub u_trivial: bool,
    pub u_is_initial: bool,
    pub a: Presheaf,
    pub b: Presheaf,
    pub hom_a_b: usize,
    pub hom_a_tb: usize,
    pub found: bool,
    pub message: String,
}

/// Compares `|Hom(1, u)|` with `|Hom(1, T_u(u))|`.
pub fn non_equivalence_witness(
    cat: &PresheafCategory,
    t: &ExponentialMonad,
) -> NonEquivalenceWitness {
    let u = &t.u;
    let one = cat.terminal();
    let u_trivial = cat.is_iso(&cat.bang(u));
    let u_is_initial = u.total_size() == 0;
    let hom_a_b = cat.hom_count(&one, u);
    let hom_a_tb = cat.hom_count(&one, &t.apply(cat, u));
    let found = !u_trivial && hom_a_b != hom_a_tb;
    let message = if u_trivial {
        "no witness (u trivial)".to_string()
    } else if found {
        format!("|Hom(1,u)| = {hom_a_b} but |Hom(1,T_u(u))| = {hom_a_tb}")
    } else {
        "hom counts agree".to_string()
    };
    NonEquivalenceWitness {
        u_trivial,
        u_is_initial,
        a: one,
        b: u.clone(),
        hom_a_b,
        hom_a_tb,
        found,
        message,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finset::presheaf::FinPoset;

    #[test]
    fn power_by_lower_point() {
        let c = PresheafCategory::new(FinPoset::chain(2));
        let u = c.subterminal(0b01);
        let x = c
            .presheaf(vec![2, 1], &[((1, 0), FinMap::new(1, 2, vec![1]))])
            .unwrap();
        // x^u(p) = maps u(0) → x(0) for both p, with identity restriction
        assert_eq!(c.exponential(&u, &x).object.sizes, vec![2, 2]);
        let t = ExponentialMonad::new(&c, u).unwrap();
        assert_eq!(t.apply(&c, &c.terminal()), c.terminal());
    }

    #[test]
    fn witness_at_lower_point() {
        let c = PresheafCategory::new(FinPoset::chain(2));
        let t = ExponentialMonad::new(&c, c.subterminal(0b01)).unwrap();
        let w = non_equivalence_witness(&c, &t);
        assert!(w.found);
        assert_eq!((w.hom_a_b, w.hom_a_tb), (0, 1));
        let trivial = ExponentialMonad::new(&c, c.terminal()).unwrap();
        assert_eq!(
            non_equivalence_witness(&c, &trivial).message,
            "no witness (u trivial)"
        );
    }

    #[test]
    fn non_subterminal_rejected() {
        let c = PresheafCategory::new(FinPoset::chain(2));
        let x = c
            .presheaf(vec![2, 0], &[((1, 0), FinMap::new(0, 2, vec![]))])
            .unwrap();
        assert!(ExponentialMonad::new(&c, x).is_err());
    }
}
