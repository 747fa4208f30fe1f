//! Entwined modules over `A⊗−`, the comparison functor `K_{g,C}`, coinvariants and hom spaces.

use serde::Serialize;

use crate::bialgebra::{Bialgebra, Comonoid, Grouplike};
use crate::exactlin::{ExactMatrix, Field, Scalar};
use crate::fusion::{build_chi, decide_iso, EntwiningData, IsoWitness};
use crate::report::{AxiomCheck, AxiomReport};

fn mm(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
    a.matmul(b).expect("composable maps")
}

fn kr(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
    a.kron(b).expect("same field")
}

fn eye(field: Field, n: usize) -> ExactMatrix {
    ExactMatrix::identity(field, n)
}

/// `(V, h: A⊗V → V, ρ: V → V⊗T(C))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntwinedModule {
    pub dim_v: usize,
    pub action: ExactMatrix,
    pub coaction: ExactMatrix,
}

impl EntwinedModule {
    pub fn new(action: ExactMatrix, coaction: ExactMatrix) -> Self {
        EntwinedModule {
            dim_v: action.rows(),
            action,
            coaction,
        }
    }

    /// Adds one to a single coaction entry.
    pub fn with_bumped_coaction(&self, row: usize, col: usize) -> Self {
        let mut rho = self.coaction.clone();
        let bumped = rho.get(row, col) + &Scalar::one(rho.field());
        rho.set(row, col, bumped);
        EntwinedModule::new(self.action.clone(), rho)
    }
}

/// Shape problems that make a module unusable with a given entwining.
pub fn shape_error(e: &EntwiningData, m: &EntwinedModule) -> Option<String> {
    let a = e.bialgebra().dim();
    let t = e.tc().dim();
    let v = m.dim_v;
    if m.action.shape() != (v, a * v) {
        return Some(format!(
            "action has shape {:?}, expected {:?}",
            m.action.shape(),
            (v, a * v)
        ));
    }
    if m.coaction.shape() != (v * t, v) {
        return Some(format!(
            "coaction has shape {:?}, expected {:?}",
            m.coaction.shape(),
            (v * t, v)
        ));
    }
    None
}

fn verify_action(b: &Bialgebra, m: &EntwinedModule, r: &mut AxiomReport) {
    let f = b.field();
    let (a, v, h) = (b.dim(), m.dim_v, &m.action);
    r.push(AxiomCheck::compare(
        "action unit",
        &mm(h, &kr(b.unit(), &eye(f, v))),
        &eye(f, v),
        &[v],
        &[v],
    ));
    r.push(AxiomCheck::compare(
        "action associativity",
        &mm(h, &kr(b.mult(), &eye(f, v))),
        &mm(h, &kr(&b.id(), h)),
        &[a, a, v],
        &[v],
    ));
}

fn verify_coaction(tc: &Comonoid, m: &EntwinedModule, r: &mut AxiomReport) {
    let f = tc.field();
    let (t, v, rho) = (tc.dim(), m.dim_v, &m.coaction);
    r.push(AxiomCheck::compare(
        "coaction counit",
        &mm(&kr(&eye(f, v), tc.counit()), rho),
        &eye(f, v),
        &[v],
        &[v],
    ));
    r.push(AxiomCheck::compare(
        "coaction coassociativity",
        &mm(&kr(rho, &eye(f, t)), rho),
        &mm(&kr(&eye(f, v), tc.comult()), rho),
        &[v],
        &[v, t, t],
    ));
}

fn verify_pentagon(e: &EntwiningData, m: &EntwinedModule, r: &mut AxiomReport) {
    let b = e.bialgebra();
    let f = b.field();
    let (a, t, v) = (b.dim(), e.tc().dim(), m.dim_v);
    let lhs = mm(&m.coaction, &m.action);
    let rhs = mm(
        &kr(&m.action, &eye(f, t)),
        &mm(&e.lambda(v), &kr(&b.id(), &m.coaction)),
    );
    r.push(AxiomCheck::compare(
        "pentagon",
        &lhs,
        &rhs,
        &[a, v],
        &[v, t],
    ));
}

/// Action (unit, associativity), coaction (counit, coassociativity) and the pentagon.
pub fn verify_entwined_module(e: &EntwiningData, m: &EntwinedModule) -> AxiomReport {
    if let Some(msg) = shape_error(e, m) {
        panic!("entwined module does not fit the entwining: {msg}");
    }
    let mut r = AxiomReport::default();
    verify_action(e.bialgebra(), m, &mut r);
    verify_coaction(e.tc(), m, &mut r);
    verify_pentagon(e, m, &mut r);
    r
}

/// `T(g) = id_A⊗g: A → A⊗C`.
fn t_of_g(b: &Bialgebra, g: &Grouplike) -> ExactMatrix {
    kr(&b.id(), g.vector())
}

/// `K_{g,C}(V) = (A⊗V, m⊗V, (A⊗V⊗T(g))·χ_{V,I})`: `a⊗v ↦ a₁⊗v⊗a₂⊗g`.
pub fn comparison_k(e: &EntwiningData, g: &Grouplike, dv: usize) -> EntwinedModule {
    let b = e.bialgebra();
    let f = b.field();
    let a = b.dim();
    let action = kr(b.mult(), &eye(f, dv));
    let coaction = mm(&kr(&eye(f, a * dv), &t_of_g(b, g)), &build_chi(b, dv, 1));
    let m = EntwinedModule::new(action, coaction);
    let report = verify_entwined_module(e, &m);
    assert!(
        report.all_pass(),
        "K(V) must be an entwined module: {report:?}"
    );
    m
}

/// `S_{K_{g,C}}` and `S_{K_{e,I}}` at a module `(V, h)`, with the factorization through `T(g)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComonadMorphismComponent {
    /// `(h⊗T(C))·(A⊗V⊗T(g))·χ_{V,I}: A⊗V → V⊗A⊗C`.
    pub s_g: ExactMatrix,
    /// `(h⊗A)·χ_{V,I}: A⊗V → V⊗A`.
    pub s_e: ExactMatrix,
    /// `S_{K_{g,C}} = (V⊗T(g))·S_{K_{e,I}}`.
    pub factorization: AxiomCheck,
}

pub fn comonad_morphism_component(
    b: &Bialgebra,
    c: &Comonoid,
    g: &Grouplike,
    action: &ExactMatrix,
) -> ComonadMorphismComponent {
    let f = b.field();
    let (a, n) = (b.dim(), c.dim());
    let v = action.rows();
    assert_eq!(action.cols(), a * v, "action must be A⊗V → V");
    let chi = build_chi(b, v, 1);
    let tg = t_of_g(b, g);
    let s_g = mm(
        &kr(action, &eye(f, a * n)),
        &mm(&kr(&eye(f, a * v), &tg), &chi),
    );
    let s_e = mm(&kr(action, &b.id()), &chi);
    let factored = mm(&kr(&eye(f, v), &tg), &s_e);
    let factorization = AxiomCheck::compare("factorization", &s_g, &factored, &[a, v], &[v, a, n]);
    ComonadMorphismComponent {
        s_g,
        s_e,
        factorization,
    }
}

/// The grouplike `ḡ = e⊗g` of `T(C)` as a column.
fn g_bar(b: &Bialgebra, g: &Grouplike) -> ExactMatrix {
    kr(b.unit(), g.vector())
}

/// Basis of `{v : ρ(v) = v⊗ḡ}`.
pub fn coinvariants(e: &EntwiningData, g: &Grouplike, m: &EntwinedModule) -> Vec<ExactMatrix> {
    let f = m.action.field();
    let trivial = kr(&eye(f, m.dim_v), &g_bar(e.bialgebra(), g));
    m.coaction
        .sub(&trivial)
        .expect("shapes agree")
        .kernel_basis()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FundamentalIso {
    pub coinvariant_dim: usize,
    /// `M^co⊗A → M`, `w_i⊗a ↦ h(a⊗w_i)`, columns indexed by `i·dim A + a`.
    pub canonical_map: ExactMatrix,
    pub invertible: bool,
    /// Inverse or kernel vector when the map is square.
    pub witness: Option<IsoWitness>,
}

pub fn fundamental_iso_check(
    e: &EntwiningData,
    g: &Grouplike,
    m: &EntwinedModule,
) -> FundamentalIso {
    let b = e.bialgebra();
    let f = b.field();
    let a = b.dim();
    let co = coinvariants(e, g, m);
    let mut columns = Vec::with_capacity(co.len() * a);
    for w in &co {
        for x in 0..a {
            let input = kr(&ExactMatrix::basis_vector(f, a, x), w);
            columns.push(mm(&m.action, &input));
        }
    }
    let canonical_map = ExactMatrix::from_columns(f, m.dim_v, &columns);
    let witness = canonical_map
        .is_square()
        .then(|| decide_iso(&canonical_map));
    FundamentalIso {
        coinvariant_dim: co.len(),
        invertible: witness.as_ref().is_some_and(IsoWitness::is_inverse),
        canonical_map,
        witness,
    }
}

/// Morphisms `M → N` of entwined modules.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomSpace {
    pub basis: Vec<ExactMatrix>,
    pub dimension: usize,
}

fn hom_conditions(
    e: &EntwiningData,
    m: &EntwinedModule,
    n: &EntwinedModule,
    f_map: &ExactMatrix,
) -> ExactMatrix {
    let b = e.bialgebra();
    let fld = b.field();
    let t = e.tc().dim();
    let action = mm(f_map, &m.action)
        .sub(&mm(&n.action, &kr(&b.id(), f_map)))
        .expect("shapes agree");
    let coaction = mm(&n.coaction, f_map)
        .sub(&mm(&kr(f_map, &eye(fld, t)), &m.coaction))
        .expect("shapes agree");
    action
        .vectorize()
        .vstack(&coaction.vectorize())
        .expect("same field")
}

/// Solves for all `f: V_M → V_N` commuting with both actions and both coactions.
pub fn hom_space(e: &EntwiningData, m: &EntwinedModule, n: &EntwinedModule) -> HomSpace {
    let f = e.bialgebra().field();
    let (dm, dn) = (m.dim_v, n.dim_v);
    let unknown = |k: usize| {
        let mut x = ExactMatrix::zeros(f, dn, dm);
        x.set(k / dm, k % dm, Scalar::one(f));
        x
    };
    let columns: Vec<ExactMatrix> = (0..dn * dm)
        .map(|k| hom_conditions(e, m, n, &unknown(k)))
        .collect();
    let rows = columns.first().map_or(0, ExactMatrix::rows);
    let system = ExactMatrix::from_columns(f, rows, &columns);
    let basis: Vec<ExactMatrix> = system
        .kernel_basis()
        .into_iter()
        .map(|v| ExactMatrix::from_fn(f, dn, dm, |i, j| v.get(i * dm + j, 0).clone()))
        .collect();
    for x in &basis {
        assert!(
            hom_conditions(e, m, n, x).is_zero(),
            "hom-space basis element fails a commuting condition"
        );
    }
    HomSpace {
        dimension: basis.len(),
        basis,
    }
}

/// A valid entwined module whose canonical map is not an isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonHopfWitness {
    pub module: EntwinedModule,
    pub check: FundamentalIso,
    /// Candidates inspected before the witness.
    pub examined: u64,
}

/// Entry values tried by the witness search, in search order.
pub const SEARCH_VALUES: [i64; 3] = [0, 1, -1];

fn for_each_matrix(
    field: Field,
    rows: usize,
    cols: usize,
    mut visit: impl FnMut(ExactMatrix) -> bool,
) -> bool {
    let n = rows * cols;
    let mut digits = vec![0usize; n];
    loop {
        let values: Vec<i64> = digits.iter().map(|&d| SEARCH_VALUES[d]).collect();
        if visit(ExactMatrix::from_i64(field, rows, cols, &values)) {
            return true;
        }
        let mut pos = n;
        loop {
            if pos == 0 {
                return false;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < SEARCH_VALUES.len() {
                break;
            }
            digits[pos] = 0;
        }
    }
}

/// Searches actions and coactions with entries in [`SEARCH_VALUES`] on spaces of dimension
/// `1..=max_dim`, in lexicographic order (actions outer), for a valid entwined module whose
/// canonical map `M^co⊗A → M` is not invertible.
pub fn find_non_hopf_witness(
    e: &EntwiningData,
    g: &Grouplike,
    max_dim: usize,
) -> Option<NonHopfWitness> {
    let b = e.bialgebra();
    let f = b.field();
    let (a, t) = (b.dim(), e.tc().dim());
    let mut examined = 0u64;
    let mut found = None;
    for v in 1..=max_dim {
        let done = for_each_matrix(f, v, a * v, |h| {
            let probe = EntwinedModule::new(h.clone(), ExactMatrix::zeros(f, v * t, v));
            let mut r = AxiomReport::default();
            verify_action(b, &probe, &mut r);
            if !r.all_pass() {
                examined += 1;
                return false;
            }
            for_each_matrix(f, v * t, v, |rho| {
                examined += 1;
                let m = EntwinedModule::new(h.clone(), rho);
                if !verify_entwined_module(e, &m).all_pass() {
                    return false;
                }
                let check = fundamental_iso_check(e, g, &m);
                if check.invertible {
                    return false;
                }
                found = Some(NonHopfWitness {
                    module: m,
                    check,
                    examined,
                });
                true
            })
        });
        if done {
            break;
        }
    }
    found
}

/// Invertibility of `S_{K_{g,C}}` and `S_{K_{e,I}}` on the free modules `A⊗V`, `dim V ≤ bound`,
/// and on the trivial module `(k, ε)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearGaloisReport {
    pub tg_iso: bool,
    pub unit_galois: bool,
    pub g_galois: bool,
    /// `g` Galois iff unit Galois and `T(g)` iso.
    pub biconditional_holds: bool,
    pub factorization_holds: bool,
    pub modules_tested: usize,
}

pub fn linear_galois_report(
    b: &Bialgebra,
    c: &Comonoid,
    g: &Grouplike,
    dim_bound: usize,
) -> LinearGaloisReport {
    let f = b.field();
    let actions: Vec<ExactMatrix> = std::iter::once(b.counit().clone())
        .chain((1..=dim_bound).map(|v| kr(b.mult(), &eye(f, v))))
        .collect();
    let components: Vec<ComonadMorphismComponent> = actions
        .iter()
        .map(|h| comonad_morphism_component(b, c, g, h))
        .collect();
    let tg_iso = t_of_g(b, g).is_invertible();
    let unit_galois = components.iter().all(|s| s.s_e.is_invertible());
    let g_galois = components.iter().all(|s| s.s_g.is_invertible());
    LinearGaloisReport {
        tg_iso,
        unit_galois,
        g_galois,
        biconditional_holds: g_galois == (unit_galois && tg_iso),
        factorization_holds: components.iter().all(|s| s.factorization.passed),
        modules_tested: components.len(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::{fusion_right, gamma_left};

    const Q: Field = Field::Rational;

    fn z2() -> Bialgebra {
        Bialgebra::monoid_algebra(Q, &[vec![0, 1], vec![1, 0]], None).unwrap()
    }

    fn one() -> Grouplike {
        Grouplike::new(
            &Comonoid::unit_object(Q),
            ExactMatrix::column_vector(Q, &[1]),
        )
        .unwrap()
    }

    #[test]
    fn regular_hopf_module() {
        let b = z2();
        let e = EntwiningData::new(&b, &Comonoid::unit_object(Q));
        let k = comparison_k(&e, &one(), 1);
        assert_eq!(&k.coaction, b.comult());
        let iso = fundamental_iso_check(&e, &one(), &k);
        assert_eq!(iso.coinvariant_dim, 1);
        assert!(iso.invertible);
        assert_eq!(iso.canonical_map, ExactMatrix::identity(Q, 2));
    }

    #[test]
    fn free_module_component_is_right_fusion() {
        let b = z2();
        let c = Comonoid::unit_object(Q);
        let s = comonad_morphism_component(&b, &c, &one(), b.mult());
        assert!(s.factorization.passed);
        assert_eq!(s.s_e, fusion_right(&b, 1, 1));
        assert_ne!(s.s_e, gamma_left(&b));
    }

    #[test]
    fn trivial_structure_breaks_pentagon() {
        let b = z2();
        let e = EntwiningData::new(&b, &Comonoid::unit_object(Q));
        let m = EntwinedModule::new(b.counit().clone(), b.unit().clone());
        let r = verify_entwined_module(&e, &m);
        assert!(r.get("action associativity").unwrap().passed);
        assert!(r.get("coaction coassociativity").unwrap().passed);
        assert!(!r.get("pentagon").unwrap().passed);
    }

    #[test]
    fn corrupted_coaction_fails() {
        let b = z2();
        let e = EntwiningData::new(&b, &Comonoid::unit_object(Q));
        let k = comparison_k(&e, &one(), 1).with_bumped_coaction(0, 1);
        assert!(
            !verify_entwined_module(&e, &k)
                .get("pentagon")
                .unwrap()
                .passed
        );
    }
}
