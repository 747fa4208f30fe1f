//! End-to-end checks for the power set monad and the exponential monad of a subterminal.

use serde::Serialize;

use super::cartesian::{
    canonical_chi, check_functoriality, check_monad_laws, chi_with_terminal_matches,
    enumerate_algebras, galois_grouplike_report, right_prehopf_component,
    terminal_preservation_check, CartesianCategory, CartesianMonad, EqualizerSubmonad,
    GaloisReport, LawReport, TerminalPreservation,
};
use super::exponential::{
    adjunction_check, non_equivalence_witness, AdjunctionCheck, ExponentialMonad,
    NonEquivalenceWitness,
};
use super::finmap::{FinMap, FinSet};
use super::monads::{IdentityMonad, PowersetMonad};
use super::presheaf::{FinPoset, Presheaf, PresheafCategory};
use super::semilattice::{
    coreflection_check, omega, omega_report, CompleteSemilattice, CoreflectionCheck, OmegaReport,
};
use super::table::TableMonad;

/// Largest skeleton for the power set suite.
pub const SKELETON_CAP: usize = 4;
/// Largest carrier for exhaustive algebra enumeration.
pub const ALGEBRA_CAP: usize = 3;

pub type ProperPowerset = EqualizerSubmonad<FinSet, PowersetMonad>;

pub fn proper_powerset() -> ProperPowerset {
    EqualizerSubmonad::of_unit_point(&FinSet, PowersetMonad)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlusComponent {
    pub n: usize,
    pub labels: Vec<String>,
    /// The inclusion picks out exactly the nonempty subsets.
    pub nonempty_subsets: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraCount {
    pub carrier: usize,
    pub count: usize,
    /// Every structure map is the join map of a complete semilattice.
    pub all_semilattices: bool,
    /// Algebras whose `⟨h, T(!)⟩` is bijective.
    pub right_prehopf_bijective: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PowersetSuite {
    pub bound: usize,
    pub algebra_bound: usize,
    pub sizes: Vec<usize>,
    pub monad_laws: LawReport,
    pub functoriality: LawReport,
    pub chi: LawReport,
    pub plus_components: Vec<PlusComponent>,
    pub plus_laws: LawReport,
    pub plus_table_functoriality: LawReport,
    pub algebras: Vec<AlgebraCount>,
    pub plus_algebras: Vec<AlgebraCount>,
    pub omega: Vec<OmegaReport>,
    /// Some component of `ω` is not a bijection.
    pub omega_not_natural_iso: bool,
    pub coreflection: Vec<CoreflectionCheck>,
    pub terminal_preservation: Vec<(String, TerminalPreservation)>,
    pub galois_identity: GaloisReport,
    pub galois_p: GaloisReport,
    pub galois_plus: GaloisReport,
}

impl PowersetSuite {
    pub fn coreflection_holds(&self) -> bool {
        self.coreflection.iter().all(CoreflectionCheck::holds)
    }

    pub fn plus_is_nonempty_subsets(&self) -> bool {
        self.plus_components.iter().all(|c| c.nonempty_subsets)
    }

    pub fn algebras_are_semilattices(&self) -> bool {
        self.algebras.iter().all(|a| a.all_semilattices)
    }

    /// The expected findings: `1_1` is not Galois for `P` and is Galois for `P⁺`.
    pub fn verdict(&self) -> String {
        let word = |b: Option<bool>| match b {
            Some(true) => "Galois",
            Some(false) => "not Galois",
            None => "undecided",
        };
        format!(
            "1_1 {} for P, {} for P+",
            word(self.galois_p.g_galois),
            word(self.galois_plus.g_galois)
        )
    }
}

fn law_chi<M: CartesianMonad<FinSet>>(t: &M, bound: usize) -> LawReport {
    let cat = FinSet;
    let mut r = LawReport::default();
    for a in 0..=bound {
        r.record(
            format!("χ_{{{a},1}} = ⟨1, T(!)⟩"),
            chi_with_terminal_matches(&cat, t, &a),
        );
    }
    for a in 0..=bound {
        for b in 0..=bound {
            if a * b > bound {
                continue;
            }
            let chi = canonical_chi(&cat, t, &a, &b);
            let shape_ok = chi.source == t.apply(&cat, &(a * b))
                && chi.target == t.apply(&cat, &a) * t.apply(&cat, &b);
            r.record(format!("χ_{{{a},{b}}} shape"), shape_ok);
        }
    }
    r
}

/// All algebras `(n, h)` for carriers `0..=max`.
pub fn algebras_up_to<M: CartesianMonad<FinSet>>(t: &M, max: usize) -> Vec<(usize, FinMap)> {
    (0..=max)
        .flat_map(|n| {
            enumerate_algebras(&FinSet, t, &n)
                .into_iter()
                .map(move |h| (n, h))
        })
        .collect()
}

fn count_algebras<M: CartesianMonad<FinSet>>(
    t: &M,
    algebras: &[(usize, FinMap)],
    max: usize,
    semilattice: impl Fn(&FinMap) -> bool,
) -> Vec<AlgebraCount> {
    (0..=max)
        .map(|n| {
            let here: Vec<&FinMap> = algebras
                .iter()
                .filter(|(a, _)| *a == n)
                .map(|(_, h)| h)
                .collect();
            AlgebraCount {
                carrier: n,
                count: here.len(),
                all_semilattices: here.iter().all(|h| semilattice(h)),
                right_prehopf_bijective: here
                    .iter()
                    .filter(|h| right_prehopf_component(&FinSet, t, &n, h).is_bijective())
                    .count(),
            }
        })
        .collect()
}

pub fn powerset_suite(bound: usize) -> PowersetSuite {
    assert!(
        bound <= SKELETON_CAP,
        "skeleton bound {bound} exceeds {SKELETON_CAP}"
    );
    let cat = FinSet;
    let p = PowersetMonad;
    let plus = proper_powerset();
    let objects: Vec<usize> = (0..=bound).collect();
    let maps: Vec<FinMap> = objects
        .iter()
        .flat_map(|&a| objects.iter().flat_map(move |&b| FinMap::all(a, b)))
        .collect();
    let algebra_bound = bound.min(ALGEBRA_CAP);

    let plus_components = objects
        .iter()
        .map(|&n| {
            let i = plus.inclusion(&cat, &n);
            PlusComponent {
                n,
                labels: plus.element_labels(&cat, &n).unwrap_or_default(),
                nonempty_subsets: i.table == (1..1usize << n).collect::<Vec<_>>(),
            }
        })
        .collect();
    let plus_table = TableMonad::materialize(&plus, bound);
    let mut plus_table_functoriality = check_functoriality(&cat, &plus_table, &objects, &maps);
    plus_table_functoriality.record(
        "table agrees with the equalizer submonad",
        super::table::table_matches(&plus_table, &plus),
    );

    let p_algebras = algebras_up_to(&p, algebra_bound);
    let plus_algebras = algebras_up_to(&plus, algebra_bound);
    let semilattices: Vec<CompleteSemilattice> = p_algebras
        .iter()
        .filter_map(|(_, h)| CompleteSemilattice::from_algebra(h).ok())
        .collect();
    let omega_reports: Vec<OmegaReport> = semilattices.iter().map(omega_report).collect();
    let explicit: Vec<(usize, FinMap)> = semilattices.iter().map(|x| (x.size, omega(x))).collect();

    let id_algebras: Vec<(usize, FinMap)> =
        objects.iter().map(|&n| (n, FinMap::identity(n))).collect();
    let point = cat.identity(&1);
    PowersetSuite {
        bound,
        algebra_bound,
        sizes: objects.iter().map(|n| p.apply(&cat, n)).collect(),
        monad_laws: check_monad_laws(&cat, &p, &objects),
        functoriality: check_functoriality(&cat, &p, &objects, &maps),
        chi: law_chi(&p, bound),
        plus_components,
        plus_laws: check_monad_laws(&cat, &plus, &objects),
        plus_table_functoriality,
        algebras: count_algebras(&p, &p_algebras, algebra_bound, |h| {
            CompleteSemilattice::from_algebra(h).is_ok()
        }),
        plus_algebras: count_algebras(&plus, &plus_algebras, algebra_bound, |_| true),
        omega_not_natural_iso: omega_reports.iter().any(|r| !r.bijective),
        omega: omega_reports,
        coreflection: plus_algebras
            .iter()
            .map(|(_, h)| coreflection_check(h))
            .collect(),
        terminal_preservation: vec![
            (
                "identity".into(),
                terminal_preservation_check(&cat, &IdentityMonad, &objects),
            ),
            (
                "powerset".into(),
                terminal_preservation_check(&cat, &p, &objects),
            ),
            (
                "proper powerset".into(),
                terminal_preservation_check(&cat, &plus, &objects),
            ),
        ],
        galois_identity: galois_grouplike_report(&cat, &IdentityMonad, &point, &id_algebras, None),
        galois_p: galois_grouplike_report(&cat, &p, &point, &p_algebras, Some(explicit)),
        galois_plus: galois_grouplike_report(&cat, &plus, &point, &plus_algebras, None),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExponentialSuite {
    pub poset: FinPoset,
    pub u: Presheaf,
    pub max_set: usize,
    pub inventory_size: usize,
    pub subterminals: Vec<Presheaf>,
    pub diagonal_iso: bool,
    pub one_power_terminal: bool,
    pub monad_laws: LawReport,
    pub functoriality: LawReport,
    /// Every `m_x` on the inventory is invertible.
    pub idempotent: bool,
    /// `m_x = x^{Δ_u}` and `e_x = x^{!_u}` after the currying isomorphisms.
    pub structure_routes_agree: bool,
    pub adjunction: AdjunctionCheck,
    pub algebras_tested: usize,
    /// Every algebra's `⟨h, T(!)⟩` is bijective.
    pub right_prehopf: bool,
    pub terminal_preservation: TerminalPreservation,
    pub galois: GaloisReport,
    pub witness: NonEquivalenceWitness,
}

impl ExponentialSuite {
    pub fn all_pass(&self) -> bool {
        self.diagonal_iso
            && self.one_power_terminal
            && self.monad_laws.all_pass()
            && self.functoriality.all_pass()
            && self.idempotent
            && self.structure_routes_agree
            && self.adjunction.holds
            && self.right_prehopf
            && self.terminal_preservation.biconditional_holds
            && self.galois.biconditional_holds
            && (self.witness.found || self.witness.u_trivial)
    }
}

/// Runs every check for `(−)^u` on presheaves with sets of size at most `max_set`. `u` is
/// given by its support, a down-closed bitmask.
pub fn exponential_suite(
    poset: FinPoset,
    support: usize,
    max_set: usize,
) -> Result<ExponentialSuite, String> {
    let cat = PresheafCategory::new(poset.clone());
    if !poset.downsets().contains(&support) {
        return Err(format!("support {support:#b} is not down-closed"));
    }
    let u = cat.subterminal(support);
    let t = ExponentialMonad::new(&cat, u.clone())?;
    let inventory = cat.inventory(max_set);
    let one = cat.terminal();
    let maps: Vec<_> = inventory
        .iter()
        .flat_map(|x| inventory.iter().flat_map(|y| cat.homs(x, y)))
        .collect();
    let idempotent = inventory.iter().all(|x| cat.is_iso(&t.mult(&cat, x)));
    let structure_routes_agree = inventory.iter().all(|x| {
        t.mult_via_diagonal(&cat, x) == t.mult(&cat, x)
            && t.unit_via_bang(&cat, x) == t.unit(&cat, x)
    });
    let algebras: Vec<(Presheaf, _)> = inventory
        .iter()
        .flat_map(|x| {
            enumerate_algebras(&cat, &t, x)
                .into_iter()
                .map(move |h| (x.clone(), h))
        })
        .collect();
    let right_prehopf = algebras
        .iter()
        .all(|(a, h)| cat.is_iso(&right_prehopf_component(&cat, &t, a, h)));
    let diag = cat.pair(&cat.identity(&u), &cat.identity(&u));
    Ok(ExponentialSuite {
        subterminals: cat.subterminals(),
        diagonal_iso: cat.is_iso(&diag),
        one_power_terminal: cat.is_terminal(&t.apply(&cat, &one)),
        monad_laws: check_monad_laws(&cat, &t, &inventory),
        functoriality: check_functoriality(&cat, &t, &inventory, &maps),
        idempotent,
        structure_routes_agree,
        adjunction: adjunction_check(&cat, &inventory),
        algebras_tested: algebras.len(),
        right_prehopf,
        terminal_preservation: terminal_preservation_check(&cat, &t, &inventory),
        galois: galois_grouplike_report(&cat, &t, &cat.identity(&one), &algebras, None),
        witness: non_equivalence_witness(&cat, &t),
        inventory_size: inventory.len(),
        poset,
        u,
        max_set,
    })
}
