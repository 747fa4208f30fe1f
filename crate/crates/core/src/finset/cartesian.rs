//! Cartesian categories, monads on them, and the checks that only need the cartesian structure.

use std::fmt::Debug;

use serde::Serialize;

/// A finitely enumerable category with finite products and equalizers.
pub trait CartesianCategory {
    type Obj: Clone + PartialEq + Debug;
    type Mor: Clone + PartialEq + Debug;

    fn identity(&self, x: &Self::Obj) -> Self::Mor;
    /// `g ∘ f`.
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Self::Mor;
    fn source(&self, f: &Self::Mor) -> Self::Obj;
    fn target(&self, f: &Self::Mor) -> Self::Obj;
    fn terminal(&self) -> Self::Obj;
    fn bang(&self, x: &Self::Obj) -> Self::Mor;
    fn product(&self, x: &Self::Obj, y: &Self::Obj) -> Self::Obj;
    fn proj1(&self, x: &Self::Obj, y: &Self::Obj) -> Self::Mor;
    fn proj2(&self, x: &Self::Obj, y: &Self::Obj) -> Self::Mor;
    /// `⟨f, g⟩` for maps with a common source.
    fn pair(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor;
    /// Every morphism `x → y`, in a canonical order.
    fn homs(&self, x: &Self::Obj, y: &Self::Obj) -> Vec<Self::Mor>;
    fn hom_count(&self, x: &Self::Obj, y: &Self::Obj) -> usize {
        self.homs(x, y).len()
    }
    fn is_iso(&self, f: &Self::Mor) -> bool;
    fn is_mono(&self, f: &Self::Mor) -> bool;
    /// A mono `e: E → X` equalizing the parallel pair `f, g: X → Y`.
    fn equalizer(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor;
    /// The unique `k` with `mono ∘ k = f`, if any.
    fn factor_through(&self, f: &Self::Mor, mono: &Self::Mor) -> Option<Self::Mor>;
    /// Total number of elements, used for size caps.
    fn size(&self, x: &Self::Obj) -> usize;
    fn describe(&self, x: &Self::Obj) -> String;

    /// Image of the `k`-th element, for categories whose objects are plain finite sets.
    fn element_image(&self, _f: &Self::Mor, _k: usize) -> Option<usize> {
        None
    }

    fn is_terminal(&self, x: &Self::Obj) -> bool {
        self.is_iso(&self.bang(x))
    }

    /// `f × g = ⟨f∘p₁, g∘p₂⟩`.
    fn product_map(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor {
        let (a, b) = (self.source(f), self.source(g));
        self.pair(
            &self.compose(f, &self.proj1(&a, &b)),
            &self.compose(g, &self.proj2(&a, &b)),
        )
    }
}

/// A monad `(T, m, e)` on a cartesian category.
pub trait CartesianMonad<C: CartesianCategory> {
    fn name(&self) -> String;
    fn apply(&self, cat: &C, x: &C::Obj) -> C::Obj;
    fn fmap(&self, cat: &C, f: &C::Mor) -> C::Mor;
    /// `e_x: x → T(x)`.
    fn unit(&self, cat: &C, x: &C::Obj) -> C::Mor;
    /// `m_x: T(T(x)) → T(x)`.
    fn mult(&self, cat: &C, x: &C::Obj) -> C::Mor;
    /// Whether `T(x)` is small enough to build.
    fn can_apply(&self, _cat: &C, _x: &C::Obj) -> bool {
        true
    }
    /// Human-readable names of the elements of `T(x)`, when the category has plain sets.
    fn element_labels(&self, _cat: &C, _x: &C::Obj) -> Option<Vec<String>> {
        None
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawCheck {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub checks: Vec<LawCheck>,
}

impl LawReport {
    pub fn record(&mut self, name: impl Into<String>, holds: bool) {
        self.checks.push(LawCheck {
            name: name.into(),
            status: if holds { Status::Pass } else { Status::Fail },
            detail: None,
        });
    }

    pub fn skip(&mut self, name: impl Into<String>, why: impl Into<String>) {
        self.checks.push(LawCheck {
            name: name.into(),
            status: Status::Skipped,
            detail: Some(why.into()),
        });
    }

    pub fn extend(&mut self, other: LawReport) {
        self.checks.extend(other.checks);
    }

    /// No check failed (skipped checks are allowed).
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawCheck> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

/// `χ_{a,b} = ⟨T(p₁), T(p₂)⟩: T(a×b) → T(a)×T(b)`.
pub fn canonical_chi<C: CartesianCategory, M: CartesianMonad<C>>(
    cat: &C,
    t: &M,
    a: &C::Obj,
    b: &C::Obj,
) -> C::Mor {
    cat.pair(
        &t.fmap(cat, &cat.proj1(a, b)),
        &t.fmap(cat, &cat.proj2(a, b)),
    )
}

/// `θ = !_{T(1)}`.
pub fn canonical_theta<C: CartesianCategory, M: CartesianMonad<C>>(cat: &C, t: &M) -> C::Mor {
    cat.bang(&t.apply(cat, &cat.terminal()))
}

/// Checks `χ_{a,1}·T(⟨1,!⟩) = ⟨1_{T(a)}, T(!_a)⟩`, identifying `a×1` with `a`.
pub fn chi_with_terminal_matches<C: CartesianCategory, M: CartesianMonad<C>>(
    cat: &C,
    t: &M,
    a: &C::Obj,
) -> bool {
    let one = cat.terminal();
    let iso = cat.pair(&cat.identity(a), &cat.bang(a));
    let lhs = cat.compose(&canonical_chi(cat, t, a, &one), &t.fmap(cat, &iso));
    let ta = t.apply(cat, a);
    let rhs = cat.pair(&cat.identity(&ta), &t.fmap(cat, &cat.bang(a)));
    lhs == rhs
}

/// Unit and associativity laws at each object, skipping components too large to build.
pub fn check_monad_laws<C: CartesianCategory, M: CartesianMonad<C>>(
    cat: &C,
    t: &M,
    objects: &[C::Obj],
) -> LawReport {
    let mut r = LawReport::default();
    for x in objects {
        let d = cat.describe(x);
        if !t.can_apply(cat, x) {
            r.skip(format!("monad laws at {d}"), "T(x) exceeds the size cap");
            continue;
        }
        let tx = t.apply(cat, x);
        if !t.can_apply(cat, &tx) {
            r.skip(format!("unit laws at {d}"), "T(T(x)) exceeds the size cap");
            r.skip(
                format!("associativity at {d}"),
                "T(T(x)) exceeds the size cap",
            );
            continue;
        }
        let m = t.mult(cat, x);
        let id = cat.identity(&tx);
        r.record(
            format!("left unit at {d}"),
            cat.compose(&m, &t.unit(cat, &tx)) == id,
        );
        r.record(
            format!("right unit at {d}"),
            cat.compose(&m, &t.fmap(cat, &t.unit(cat, x))) == id,
        );
        let ttx = t.apply(cat, &tx);
        if !t.can_apply(cat, &ttx) {
            r.skip(
                format!("associativity at {d}"),
                "T(T(T(x))) exceeds the size cap",
            );
            continue;
        }
        r.record(
            format!("associativity at {d}"),
            cat.compose(&m, &t.fmap(cat, &m)) == cat.compose(&m, &t.mult(cat, &tx)),
        );
    }
    r
}

/// `T(id) = id`, `T(g∘f) = T(g)∘T(f)`, and naturality of `e` and `m` over the given maps.
pub fn check_functoriality<C: CartesianCategory, M: CartesianMonad<C>>(
    cat: &C,
    t: &M,
    objects: &[C::Obj],
    maps: &[C::Mor],
) -> LawReport {
    let mut r = LawReport::default();
    for x in objects.iter().filter(|x| t.can_apply(cat, x)) {
        let tx = t.apply(cat, x);
        r.record(
            format!("T(id) = id at {}", cat.describe(x)),
            t.fmap(cat, &cat.identity(x)) == cat.identity(&tx),
        );
    }
    let mut composites = 0usize;
    let mut composite_ok = true;
    let mut unit_ok = true;
    let mut mult_ok = true;
    let mut mult_seen = 0usize;
    for f in maps {
        let (x, y) = (cat.source(f), cat.target(f));
        if !t.can_apply(cat, &x) || !t.can_apply(cat, &y) {
            continue;
        }
        let tf = t.fmap(cat, f);
        unit_ok &= cat.compose(&tf, &t.unit(cat, &x)) == cat.compose(&t.unit(cat, &y), f);
        let (tx, ty) = (t.apply(cat, &x), t.apply(cat, &y));
        if t.can_apply(cat, &tx) && t.can_apply(cat, &ty) {
            mult_seen += 1;
            let ttf = t.fmap(cat, &tf);
            mult_ok &= cat.compose(&tf, &t.mult(cat, &x)) == cat.compose(&t.mult(cat, &y), &ttf);
        }
        for g in maps.iter().filter(|g| cat.source(g) == y) {
            if !t.can_apply(cat, &cat.target(g)) {
                continue;
            }
            composites += 1;
            composite_ok &= t.fmap(cat, &cat.compose(g, f)) == cat.compose(&t.fmap(cat, g), &tf);
        }
    }
    r.record(format!("T preserves {composites} composites"), composite_ok);
    r.record(format!("unit natural along {} maps", maps.len()), unit_ok);
    r.record(
        format!("multiplication natural along {mult_seen} maps"),
        mult_ok,
    );
    r
}

/// The submonad `T^g ⊆ T` for a point `g: 1 → C`: at `x`, the equalizer of
/// `T(g∘!_x)` and `T(g)∘e_1∘!_{T(x)}`.
#[derive(Clone, Debug)]
pub struct EqualizerSubmonad<C: CartesianCategory, M> {
    pub inner: M,
    pub point: C::Mor,
}

impl<C: CartesianCategory, M: CartesianMonad<C>> EqualizerSubmonad<C, M> {
    /// `T^{1_1}`, the equalizer of `T(!_x)` and `e_1∘!_{T(x)}`.
    pub fn of_unit_point(cat: &C, inner: M) -> Self {
        EqualizerSubmonad {
            inner,
            point: cat.identity(&cat.terminal()),
        }
    }

    /// The mono `i_x: T^g(x) → T(x)`.
    pub fn inclusion(&self, cat: &C, x: &C::Obj) -> C::Mor {
        let t = &self.inner;
        let one = cat.terminal();
        let tx = t.apply(cat, x);
        let lhs = t.fmap(cat, &cat.compose(&self.point, &cat.bang(x)));
        let rhs = cat.compose(
            &t.fmap(cat, &self.point),
            &cat.compose(&t.unit(cat, &one), &cat.bang(&tx)),
        );
        cat.equalizer(&lhs, &rhs)
    }

    fn factor(&self, cat: &C, f: &C::Mor, onto: &C::Obj, what: &str) -> C::Mor {
        cat.factor_through(f, &self.inclusion(cat, onto))
            .unwrap_or_else(|| panic!("{what} does not factor through the equalizer"))
    }
}

impl<C: CartesianCategory, M: CartesianMonad<C>> CartesianMonad<C> for EqualizerSubmonad<C, M> {
    fn name(&self) -> String {
        format!("{}^g", self.inner.name())
    }

    fn apply(&self, cat: &C, x: &C::Obj) -> C::Obj {
        cat.source(&self.inclusion(cat, x))
    }

    fn fmap(&self, cat: &C, f: &C::Mor) -> C::Mor {
        let (x, y) = (cat.source(f), cat.target(f));
        let through = cat.compose(&self.inner.fmap(cat, f), &self.inclusion(cat, &x));
        self.factor(cat, &through, &y, "T(f)∘i")
    }

    fn unit(&self, cat: &C, x: &C::Obj) -> C::Mor {
        self.factor(cat, &self.inner.unit(cat, x), x, "the unit")
    }

    fn mult(&self, cat: &C, x: &C::Obj) -> C::Mor {
        let t = &self.inner;
        let i_x = self.inclusion(cat, x);
        let sub_x = cat.source(&i_x);
        let i_sub = self.inclusion(cat, &sub_x);
        let through = cat.compose(&t.mult(cat, x), &cat.compose(&t.fmap(cat, &i_x), &i_sub));
        self.factor(cat, &through, x, "the multiplication")
    }

    fn can_apply(&self, cat: &C, x: &C::Obj) -> bool {
        self.inner.can_apply(cat, x)
    }

    fn element_labels(&self, cat: &C, x: &C::Obj) -> Option<Vec<String>> {
        let labels = self.inner.element_labels(cat, x)?;
        let i = self.inclusion(cat, x);
        (0..cat.size(&cat.source(&i)))
            .map(|k| cat.element_image(&i, k).map(|j| labels[j].clone()))
            .collect()
    }
}

/// All Eilenberg–Moore structures `h: T(a) → a`.
pub fn enumerate_algebras<C: CartesianCategory, M: CartesianMonad<C>>(
    cat: &C,
    t: &M,
    a: &C::Obj,
) -> Vec<C::Mor> {
    let ta = t.apply(cat, a);
    let e = t.unit(cat, a);
    let m = t.mult(cat, a);
    let id = cat.identity(a);
    cat.homs(&ta, a)
        .into_iter()
        .filter(|h| cat.compose(h, &e) == id)
        .filter(|h| cat.compose(h, &m) == cat.compose(h, &t.fmap(cat, h)))
        .collect()
}

/// `⟨h, T(!_a)⟩: T(a) → a×T(1)`.
pub fn right_prehopf_component<C: CartesianCategory, M: CartesianMonad<C>>(
    cat: &C,
    t: &M,
    a: &C::Obj,
    h: &C::Mor,
) -> C::Mor {
    cat.pair(h, &t.fmap(cat, &cat.bang(a)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TerminalPreservation {
    pub t1_terminal: bool,
    /// `(object, i_x is an isomorphism)`.
    pub inclusion_iso: Vec<(String, bool)>,
    /// `T(1) ≅ 1` iff every tested `i_x` is an isomorphism.
    pub biconditional_holds: bool,
}

/// Compares `T(1) ≅ 1` with invertibility of `i: T^{1_1} → T` on the given objects, which
/// must include the terminal object.
pub fn terminal_preservation_check<C: CartesianCategory, M: CartesianMonad<C> + Clone>(
    cat: &C,
    t: &M,
    objects: &[C::Obj],
) -> TerminalPreservation {
    let one = cat.terminal();
    assert!(
        objects.contains(&one),
        "the inventory must contain the terminal object"
    );
    let t1_terminal = cat.is_terminal(&t.apply(cat, &one));
    let sub = EqualizerSubmonad::of_unit_point(cat, t.clone());
    let inclusion_iso: Vec<(String, bool)> = objects
        .iter()
        .filter(|x| t.can_apply(cat, x))
        .map(|x| (cat.describe(x), cat.is_iso(&sub.inclusion(cat, x))))
        .collect();
    let all_iso = inclusion_iso.iter().all(|(_, b)| *b);
    TerminalPreservation {
        t1_terminal,
        biconditional_holds: t1_terminal == all_iso,
        inclusion_iso,
    }
}

/// How the unit grouplike was decided.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum UnitRoute {
    /// `T(1) ≅ 1`, so the comparison is an isomorphism of categories.
    TerminalPreserved,
    /// Explicit comonad-morphism components were inspected.
    ExplicitComponents,
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaloisReport {
    pub tg_iso: bool,
    pub unit_galois: Option<bool>,
    pub g_galois: Option<bool>,
    pub route: UnitRoute,
    /// `g` Galois iff unit Galois and `T(g)` iso, on every decided instance.
    pub biconditional_holds: bool,
    /// Every tested `⟨h, T(!)⟩` bijective.
    pub right_prehopf: Option<bool>,
    pub algebras_tested: usize,
    /// Components of `(1×T(g))·S` that are not isomorphisms, by position.
    pub failing_components: Vec<usize>,
}

/// Decides the grouplike `g: 1 → C`.
///
/// `algebras` lists `(a, h)` pairs. `explicit` supplies comonad-morphism components
/// `s: a' → a×T(1)`, each with its `a`, for the unit grouplike when `T(1)` is not terminal.
pub fn galois_grouplike_report<C: CartesianCategory, M: CartesianMonad<C>>(
    cat: &C,
    t: &M,
    g: &C::Mor,
    algebras: &[(C::Obj, C::Mor)],
    explicit: Option<Vec<(C::Obj, C::Mor)>>,
) -> GaloisReport {
    let one = cat.terminal();
    let tg_iso = cat.is_iso(&t.fmap(cat, g));
    let t1 = t.apply(cat, &one);
    let (route, components) = if cat.is_terminal(&t1) {
        let comps = algebras
            .iter()
            .map(|(a, _)| {
                let to_t1 = cat.homs(a, &t1).remove(0);
                (a.clone(), cat.pair(&cat.identity(a), &to_t1))
            })
            .collect();
        (UnitRoute::TerminalPreserved, Some(comps))
    } else if let Some(comps) = explicit {
        (UnitRoute::ExplicitComponents, Some(comps))
    } else {
        (UnitRoute::Undecided, None)
    };
    let (unit_galois, g_galois, failing_components) = match &components {
        Some(comps) => {
            let unit = comps.iter().all(|(_, s)| cat.is_iso(s));
            let tg = t.fmap(cat, g);
            let failing: Vec<usize> = comps
                .iter()
                .enumerate()
                .filter_map(|(k, (a, s))| {
                    let gs = cat.compose(&cat.product_map(&cat.identity(a), &tg), s);
                    (!cat.is_iso(&gs)).then_some(k)
                })
                .collect();
            (Some(unit), Some(failing.is_empty()), failing)
        }
        None => (None, None, Vec::new()),
    };
    let biconditional_holds = match (unit_galois, g_galois) {
        (Some(u), Some(gg)) => gg == (u && tg_iso),
        _ => true,
    };
    let right_prehopf = (!algebras.is_empty()).then(|| {
        algebras
            .iter()
            .all(|(a, h)| cat.is_iso(&right_prehopf_component(cat, t, a, h)))
    });
    GaloisReport {
        tg_iso,
        unit_galois,
        g_galois,
        route,
        biconditional_holds,
        right_prehopf,
        algebras_tested: algebras.len(),
        failing_components,
    }
}
