//! Fusion operators, Galois maps, antipodes, entwinings and augmentations for `T = A⊗−`.
//!
//! Objects are represented by their dimension. Index conventions follow [`crate::exactlin`]:
//! `T(V) = A⊗V` has basis `(a, v)` at `a·dim V + v`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bialgebra::{image_comonoid, Bialgebra, Comonoid};
use crate::exactlin::{
    permute_factors, tensor_all, AffineSolution, ExactMatrix, Field, Scalar, SparseMatrix,
};
use crate::report::{join_index, AxiomCheck, AxiomReport};

fn mm(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
    a.matmul(b).expect("composable maps")
}

fn kr(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
    a.kron(b).expect("same field")
}

fn eye(field: Field, n: usize) -> ExactMatrix {
    ExactMatrix::identity(field, n)
}

/// Nonzero structure constants `(i, j, k, c[i][j][k])` of the comultiplication.
fn comult_terms(b: &Bialgebra) -> Vec<(usize, usize, usize, Scalar)> {
    let d = b.dim();
    let mut out = Vec::new();
    for k in 0..d {
        for i in 0..d {
            for j in 0..d {
                let s = b.c(i, j, k);
                if !s.is_zero() {
                    out.push((i, j, k, s.clone()));
                }
            }
        }
    }
    out
}

/// Nonzero structure constants `(i, j, k, m[i][j][k])` of the multiplication.
fn mult_terms(b: &Bialgebra) -> Vec<(usize, usize, usize, Scalar)> {
    let d = b.dim();
    let mut out = Vec::new();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let s = b.m(i, j, k);
                if !s.is_zero() {
                    out.push((i, j, k, s.clone()));
                }
            }
        }
    }
    out
}

/// `T(f) = id_A ⊗ f`.
pub fn t_map(b: &Bialgebra, f: &ExactMatrix) -> ExactMatrix {
    kr(&b.id(), f)
}

/// `m_V = m ⊗ id_V: A⊗A⊗V → A⊗V`.
pub fn monad_mult(b: &Bialgebra, dv: usize) -> ExactMatrix {
    kr(b.mult(), &eye(b.field(), dv))
}

/// `e_V = e ⊗ id_V: V → A⊗V`.
pub fn monad_unit(b: &Bialgebra, dv: usize) -> ExactMatrix {
    kr(b.unit(), &eye(b.field(), dv))
}

/// `χ_{V,W} = (A⊗flip_{A,V}⊗W)(δ⊗V⊗W): A⊗V⊗W → A⊗V⊗A⊗W`, built from the structure constants.
pub fn build_chi(b: &Bialgebra, dv: usize, dw: usize) -> ExactMatrix {
    let d = b.dim();
    let mut out = ExactMatrix::zeros(b.field(), d * dv * d * dw, d * dv * dw);
    for (i, j, a, c) in comult_terms(b) {
        for v in 0..dv {
            for w in 0..dw {
                let row = join_index(&[i, v, j, w], &[d, dv, d, dw]);
                let col = join_index(&[a, v, w], &[d, dv, dw]);
                let cur = out.get(row, col) + &c;
                out.set(row, col, cur);
            }
        }
    }
    out
}

/// `χ_{V,W}` assembled from Kronecker products and a factor permutation.
pub fn build_chi_composed(b: &Bialgebra, dv: usize, dw: usize) -> ExactMatrix {
    let f = b.field();
    let d = b.dim();
    let split = tensor_all(f, &[b.comult(), &eye(f, dv), &eye(f, dw)]).expect("same field");
    let swap = permute_factors(f, &[d, d, dv, dw], &[0, 2, 1, 3]);
    mm(&swap, &split)
}

/// `θ = ε`.
pub fn theta(b: &Bialgebra) -> ExactMatrix {
    b.counit().clone()
}

/// Unitality, coassociativity and monad compatibility of `(χ, θ)` at the given dimensions.
pub fn verify_opmonoidal(b: &Bialgebra, dims: &[usize]) -> AxiomReport {
    let f = b.field();
    let d = b.dim();
    let mut r = AxiomReport::default();
    for &dv in dims {
        let chi_iv = build_chi(b, 1, dv);
        let chi_vi = build_chi(b, dv, 1);
        r.push(AxiomCheck::compare(
            format!("chi left counit V={dv}"),
            &mm(&kr(&theta(b), &eye(f, d * dv)), &chi_iv),
            &eye(f, d * dv),
            &[d, dv],
            &[d, dv],
        ));
        r.push(AxiomCheck::compare(
            format!("chi right counit V={dv}"),
            &mm(&kr(&eye(f, d * dv), &theta(b)), &chi_vi),
            &eye(f, d * dv),
            &[d, dv],
            &[d, dv],
        ));
        for &dw in dims {
            let chi = build_chi(b, dv, dw);
            r.push(AxiomCheck::compare(
                format!("chi matches composite V={dv} W={dw}"),
                &chi,
                &build_chi_composed(b, dv, dw),
                &[d, dv, dw],
                &[d, dv, d, dw],
            ));
            // χ·m_{V⊗W} = (m_V⊗m_W)·χ_{TV,TW}·T(χ_{V,W})
            let lhs = mm(&chi, &monad_mult(b, dv * dw));
            let inner = t_map(b, &chi);
            let outer = build_chi(b, d * dv, d * dw);
            let rhs = mm(
                &kr(&monad_mult(b, dv), &monad_mult(b, dw)),
                &mm(&outer, &inner),
            );
            r.push(AxiomCheck::compare(
                format!("chi multiplicative V={dv} W={dw}"),
                &lhs,
                &rhs,
                &[d, d, dv, dw],
                &[d, dv, d, dw],
            ));
            r.push(AxiomCheck::compare(
                format!("chi unital V={dv} W={dw}"),
                &mm(&chi, &monad_unit(b, dv * dw)),
                &kr(&monad_unit(b, dv), &monad_unit(b, dw)),
                &[dv, dw],
                &[d, dv, d, dw],
            ));
            for &du in dims {
                // (χ_{U,V}⊗T(W))·χ_{U⊗V,W} = (T(U)⊗χ_{V,W})·χ_{U,V⊗W}
                let lhs = mm(
                    &kr(&build_chi(b, du, dv), &eye(f, d * dw)),
                    &build_chi(b, du * dv, dw),
                );
                let rhs = mm(
                    &kr(&eye(f, d * du), &build_chi(b, dv, dw)),
                    &build_chi(b, du, dv * dw),
                );
                r.push(AxiomCheck::compare(
                    format!("chi coassociative U={du} V={dv} W={dw}"),
                    &lhs,
                    &rhs,
                    &[d, du, dv, dw],
                    &[d, du, d, dv, d, dw],
                ));
            }
        }
    }
    r
}

/// `H^l_{V,W} = (T(V)⊗m_W)·χ_{V,T(W)}` on `A⊗V⊗A⊗W`: `a⊗v⊗b⊗w ↦ a₁⊗v⊗a₂b⊗w`.
pub fn fusion_left(b: &Bialgebra, dv: usize, dw: usize) -> ExactMatrix {
    fusion_left_sparse(b, dv, dw).to_dense()
}

/// [`fusion_left`] without materializing the zeros.
pub fn fusion_left_sparse(b: &Bialgebra, dv: usize, dw: usize) -> SparseMatrix {
    let d = b.dim();
    let dims = [d, dv, d, dw];
    let n = d * dv * d * dw;
    let mt = mult_terms(b);
    let mut triples = Vec::new();
    for (i, j, a, c) in comult_terms(b) {
        for (j2, x, k, m) in &mt {
            if *j2 != j {
                continue;
            }
            let coeff = &c * m;
            for v in 0..dv {
                for w in 0..dw {
                    let row = join_index(&[i, v, *k, w], &dims);
                    let col = join_index(&[a, v, *x, w], &dims);
                    triples.push((row, col, coeff.clone()));
                }
            }
        }
    }
    SparseMatrix::from_triples(b.field(), n, n, triples)
}

/// `H^r_{V,W} = (m_V⊗T(W))·χ_{T(V),W}` from `A⊗A⊗V⊗W` to `A⊗V⊗A⊗W`: `a⊗b⊗v⊗w ↦ a₁b⊗v⊗a₂⊗w`.
pub fn fusion_right(b: &Bialgebra, dv: usize, dw: usize) -> ExactMatrix {
    let d = b.dim();
    let n = d * dv * d * dw;
    let mut out = ExactMatrix::zeros(b.field(), n, n);
    let mt = mult_terms(b);
    for (i, j, a, c) in comult_terms(b) {
        for (i2, x, k, m) in &mt {
            if *i2 != i {
                continue;
            }
            let coeff = &c * m;
            for v in 0..dv {
                for w in 0..dw {
                    let row = join_index(&[*k, v, j, w], &[d, dv, d, dw]);
                    let col = join_index(&[a, *x, v, w], &[d, d, dv, dw]);
                    let cur = out.get(row, col) + &coeff;
                    out.set(row, col, cur);
                }
            }
        }
    }
    out
}

/// `H^l_{V,W}` composed literally from `χ` and `m`.
pub fn fusion_left_composed(b: &Bialgebra, dv: usize, dw: usize) -> ExactMatrix {
    let f = b.field();
    let d = b.dim();
    let chi = build_chi(b, dv, d * dw);
    mm(&kr(&eye(f, d * dv), &monad_mult(b, dw)), &chi)
}

/// `H^r_{V,W}` composed literally from `χ` and `m`.
pub fn fusion_right_composed(b: &Bialgebra, dv: usize, dw: usize) -> ExactMatrix {
    let f = b.field();
    let d = b.dim();
    let chi = build_chi(b, d * dv, dw);
    mm(&kr(&monad_mult(b, dv), &eye(f, d * dw)), &chi)
}

/// `H^l_{V,W}` recovered from `γ_left = H^l_{I,I}` by moving `V` past the first `A`.
pub fn fusion_left_reconstructed(b: &Bialgebra, dv: usize, dw: usize) -> ExactMatrix {
    let f = b.field();
    let d = b.dim();
    let p = permute_factors(f, &[d, dv, d, dw], &[0, 2, 1, 3]);
    let p_inv = permute_factors(f, &[d, d, dv, dw], &[0, 2, 1, 3]);
    let g = kr(&gamma_left(b), &eye(f, dv * dw));
    mm(&p_inv, &mm(&g, &p))
}

/// `γ_left = (A⊗m)(δ⊗A)`: `x⊗y ↦ x₁⊗x₂y`.
pub fn gamma_left(b: &Bialgebra) -> ExactMatrix {
    mm(&kr(&b.id(), b.mult()), &kr(b.comult(), &b.id()))
}

/// `γ_right = (m⊗A)(A⊗δ)`: `x⊗y ↦ xy₁⊗y₂`.
pub fn gamma_right(b: &Bialgebra) -> ExactMatrix {
    mm(&kr(b.mult(), &b.id()), &kr(&b.id(), b.comult()))
}

/// Evidence for or against invertibility.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "matrix", rename_all = "snake_case")]
pub enum IsoWitness {
    /// A two-sided inverse.
    Inverse(ExactMatrix),
    /// A nonzero kernel vector.
    Kernel(ExactMatrix),
}

impl IsoWitness {
    pub fn is_inverse(&self) -> bool {
        matches!(self, IsoWitness::Inverse(_))
    }

    /// Re-checks the witness against `m`.
    pub fn verify(&self, m: &ExactMatrix) -> bool {
        match self {
            IsoWitness::Inverse(inv) => match (inv.matmul(m), m.matmul(inv)) {
                (Ok(l), Ok(r)) => l.is_identity() && r.is_identity(),
                _ => false,
            },
            IsoWitness::Kernel(v) => {
                !v.is_zero() && m.matmul(v).map(|x| x.is_zero()).unwrap_or(false)
            }
        }
    }
}

/// Decides invertibility of a square matrix and returns a checked witness.
pub fn decide_iso(m: &ExactMatrix) -> IsoWitness {
    let w = match m.try_inverse().expect("square matrix") {
        crate::exactlin::Inversion::Invertible(inv) => IsoWitness::Inverse(inv),
        crate::exactlin::Inversion::NotInvertible { .. } => IsoWitness::Kernel(
            m.kernel_basis()
                .into_iter()
                .next()
                .expect("a singular matrix has a kernel"),
        ),
    };
    assert!(w.verify(m), "invertibility witness failed to verify");
    w
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FusionReport {
    pub dim_v: usize,
    pub dim_w: usize,
    pub h_l: ExactMatrix,
    pub h_r: ExactMatrix,
    pub h_l_invertible: bool,
    pub h_r_invertible: bool,
    pub h_l_witness: IsoWitness,
    pub h_r_witness: IsoWitness,
}

pub fn fusion_report(b: &Bialgebra, dv: usize, dw: usize) -> FusionReport {
    let h_l = fusion_left(b, dv, dw);
    let h_r = fusion_right(b, dv, dw);
    let h_l_witness = decide_iso(&h_l);
    let h_r_witness = decide_iso(&h_r);
    FusionReport {
        dim_v: dv,
        dim_w: dw,
        h_l_invertible: h_l_witness.is_inverse(),
        h_r_invertible: h_r_witness.is_inverse(),
        h_l,
        h_r,
        h_l_witness,
        h_r_witness,
    }
}

/// Invertibility of `H^l_{I,I}`; for `A⊗−` every other component is a conjugate of it tensored
/// with an identity, so this decides left pre-Hopf.
pub fn is_left_pre_hopf(b: &Bialgebra) -> bool {
    fusion_left(b, 1, 1).is_invertible()
}

/// Invertibility of `H^r_{I,I}`, deciding right pre-Hopf in the same way.
pub fn is_right_pre_hopf(b: &Bialgebra) -> bool {
    fusion_right(b, 1, 1).is_invertible()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AntipodeResult {
    Antipode {
        matrix: ExactMatrix,
        /// Dimension of the affine solution space; `0` means unique.
        solution_dim: usize,
    },
    NoAntipode {
        /// Row vector `y` with `y·M = 0` and `y·rhs ≠ 0` for the stacked system.
        certificate: ExactMatrix,
    },
}

impl AntipodeResult {
    pub fn exists(&self) -> bool {
        matches!(self, AntipodeResult::Antipode { .. })
    }

    pub fn matrix(&self) -> Option<&ExactMatrix> {
        match self {
            AntipodeResult::Antipode { matrix, .. } => Some(matrix),
            AntipodeResult::NoAntipode { .. } => None,
        }
    }
}

/// `m(S⊗id)δ` and `m(id⊗S)δ`.
pub fn convolutions(b: &Bialgebra, s: &ExactMatrix) -> (ExactMatrix, ExactMatrix) {
    let left = mm(b.mult(), &mm(&kr(s, &b.id()), b.comult()));
    let right = mm(b.mult(), &mm(&kr(&b.id(), s), b.comult()));
    (left, right)
}

/// Solves `m(S⊗id)δ = eε = m(id⊗S)δ` for `S`, unknowns `S[s][t]` at `s·dim + t`.
pub fn solve_antipode(b: &Bialgebra) -> AntipodeResult {
    let f = b.field();
    let d = b.dim();
    let mut system = ExactMatrix::zeros(f, 2 * d * d, d * d);
    let mut add = |row: usize, col: usize, s: Scalar| {
        let cur = system.get(row, col) + &s;
        system.set(row, col, cur);
    };
    for (i, j, k, c) in comult_terms(b) {
        for (s, x, r, m) in mult_terms(b) {
            let coeff = &c * &m;
            // m(S e_i ⊗ e_j): S[s][i] multiplies e_s·e_j
            if x == j {
                add(r * d + k, s * d + i, coeff.clone());
            }
            // m(e_i ⊗ S e_j): S[x][j] multiplies e_i·e_x
            if s == i {
                add(d * d + r * d + k, x * d + j, coeff);
            }
        }
    }
    let ee = mm(b.unit(), b.counit()).vectorize();
    let rhs = ee.vstack(&ee).expect("same field");
    match system.solve_affine(&rhs).expect("shapes agree") {
        AffineSolution::Solved { particular, kernel } => {
            let matrix = ExactMatrix::from_fn(f, d, d, |s, t| particular.get(s * d + t, 0).clone());
            let (l, r) = convolutions(b, &matrix);
            let target = mm(b.unit(), b.counit());
            assert!(
                l == target && r == target,
                "antipode fails substitution check"
            );
            AntipodeResult::Antipode {
                matrix,
                solution_dim: kernel.len(),
            }
        }
        AffineSolution::NoSolution { certificate } => AntipodeResult::NoAntipode { certificate },
    }
}

/// The five equivalent Hopf criteria for `A⊗−`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HopfConsistency {
    pub antipode: bool,
    pub gamma_left: bool,
    pub gamma_right: bool,
    pub h_l: bool,
    pub h_r: bool,
}

impl HopfConsistency {
    pub fn values(&self) -> [bool; 5] {
        [
            self.antipode,
            self.gamma_left,
            self.gamma_right,
            self.h_l,
            self.h_r,
        ]
    }

    pub fn consistent(&self) -> bool {
        let v = self.values();
        v.iter().all(|&x| x == v[0])
    }

    /// The common verdict, `None` on disagreement.
    pub fn verdict(&self) -> Option<bool> {
        self.consistent().then_some(self.antipode)
    }
}

pub fn hopf_cross_check(b: &Bialgebra) -> HopfConsistency {
    HopfConsistency {
        antipode: solve_antipode(b).exists(),
        gamma_left: gamma_left(b).is_invertible(),
        gamma_right: gamma_right(b).is_invertible(),
        h_l: is_left_pre_hopf(b),
        h_r: is_right_pre_hopf(b),
    }
}

/// The entwining `λ^C_V = H^l_{V,C}: T(V⊗T(C)) → T(V)⊗T(C)`, with optional replaced components.
#[derive(Clone, Debug)]
pub struct EntwiningData {
    bialgebra: Bialgebra,
    comonoid: Comonoid,
    tc: Comonoid,
    overrides: BTreeMap<usize, ExactMatrix>,
}

impl EntwiningData {
    pub fn new(b: &Bialgebra, c: &Comonoid) -> Self {
        assert_eq!(
            b.field(),
            c.field(),
            "bialgebra and comonoid over different fields"
        );
        EntwiningData {
            bialgebra: b.clone(),
            comonoid: c.clone(),
            tc: image_comonoid(b, c),
            overrides: BTreeMap::new(),
        }
    }

    pub fn bialgebra(&self) -> &Bialgebra {
        &self.bialgebra
    }

    pub fn comonoid(&self) -> &Comonoid {
        &self.comonoid
    }

    /// The comonoid `T(C)`.
    pub fn tc(&self) -> &Comonoid {
        &self.tc
    }

    /// Component at a `dv`-dimensional object.
    pub fn lambda(&self, dv: usize) -> ExactMatrix {
        match self.overrides.get(&dv) {
            Some(m) => m.clone(),
            None => fusion_left(&self.bialgebra, dv, self.comonoid.dim()),
        }
    }

    /// [`EntwiningData::lambda`] in sparse form.
    pub fn lambda_sparse(&self, dv: usize) -> SparseMatrix {
        match self.overrides.get(&dv) {
            Some(m) => SparseMatrix::from_dense(m),
            None => fusion_left_sparse(&self.bialgebra, dv, self.comonoid.dim()),
        }
    }

    /// Replaces the component at `dv`.
    pub fn with_component(mut self, dv: usize, m: ExactMatrix) -> Self {
        let expected = self.lambda(dv).shape();
        assert_eq!(
            m.shape(),
            expected,
            "replacement component has the wrong shape"
        );
        self.overrides.insert(dv, m);
        self
    }

    /// Adds one to a single entry of the component at `dv`.
    pub fn mutated(self, dv: usize, row: usize, col: usize) -> Self {
        let mut m = self.lambda(dv);
        let f = m.field();
        let bumped = m.get(row, col) + &Scalar::one(f);
        m.set(row, col, bumped);
        self.with_component(dv, m)
    }
}

/// `λ^C` at a single dimension.
pub fn build_entwining(b: &Bialgebra, c: &Comonoid, dv: usize) -> ExactMatrix {
    EntwiningData::new(b, c).lambda(dv)
}

pub const ENTWINING_DIAGRAMS: [&str; 4] = ["unit", "counit", "pentagon", "multiplication"];

/// The four entwining diagrams at every component dimension `1..=dim_bound`.
pub fn verify_entwining_axioms(e: &EntwiningData, dim_bound: usize) -> AxiomReport {
    let b = e.bialgebra();
    let f = b.field();
    let a = b.dim();
    let t = e.tc().dim();
    let sp = SparseMatrix::from_dense;
    let smm = |x: &SparseMatrix, y: &SparseMatrix| x.matmul(y).expect("composable maps");
    let skr = |x: &SparseMatrix, y: &SparseMatrix| x.kron(y).expect("same field");
    let seye = |n: usize| SparseMatrix::identity(f, n);
    let delta = sp(e.tc().comult());
    let eps = sp(e.tc().counit());
    let unit = sp(b.unit());
    let mult = sp(b.mult());
    let mut r = AxiomReport::default();
    for v in 1..=dim_bound {
        let lam = e.lambda_sparse(v);
        let id_av = seye(a * v);

        let unit_in = skr(&unit, &seye(v * t));
        r.push(AxiomCheck::compare_sparse(
            format!("unit V={v}"),
            &smm(&lam, &unit_in),
            &unit_in,
            &[v, t],
            &[a, v, t],
        ));

        let counit_out = skr(&id_av, &eps);
        r.push(AxiomCheck::compare_sparse(
            format!("counit V={v}"),
            &smm(&counit_out, &lam),
            &counit_out,
            &[a, v, t],
            &[a, v],
        ));

        let split = skr(&id_av, &delta);
        let lhs = smm(&skr(&lam, &seye(t)), &smm(&e.lambda_sparse(v * t), &split));
        let rhs = smm(&split, &lam);
        r.push(AxiomCheck::compare_sparse(
            format!("pentagon V={v}"),
            &lhs,
            &rhs,
            &[a, v, t],
            &[a, v, t, t],
        ));

        let mult_in = skr(&mult, &seye(v * t));
        let lhs = smm(
            &mult_in,
            &smm(&e.lambda_sparse(a * v), &skr(&seye(a), &lam)),
        );
        let rhs = smm(&lam, &mult_in);
        r.push(AxiomCheck::compare_sparse(
            format!("multiplication V={v}"),
            &lhs,
            &rhs,
            &[a, a, v, t],
            &[a, v, t],
        ));
    }
    r
}

/// A single-entry perturbation of `λ` and the diagrams it breaks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MutationOutcome {
    pub dim_v: usize,
    pub row: usize,
    pub col: usize,
    pub failed_checks: Vec<String>,
}

impl MutationOutcome {
    pub fn caught(&self) -> bool {
        !self.failed_checks.is_empty()
    }
}

/// Adds one to `count` entries of `λ`, spread deterministically over dimensions `1..=dim_bound`
/// and positions, and re-runs the diagram checks after each.
pub fn mutation_sweep(e: &EntwiningData, dim_bound: usize, count: usize) -> Vec<MutationOutcome> {
    (0..count)
        .map(|k| {
            let dv = 1 + k % dim_bound;
            let (rows, cols) = e.lambda(dv).shape();
            let row = (7 * k + 3) % rows;
            let col = (11 * k + 5) % cols;
            let report = verify_entwining_axioms(&e.clone().mutated(dv, row, col), dim_bound);
            MutationOutcome {
                dim_v: dv,
                row,
                col,
                failed_checks: report.failures().map(|c| c.name.clone()).collect(),
            }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AugmentationReport {
    pub character: AxiomReport,
    pub is_augmentation: bool,
    /// `σ̄_V = (σ⊗V⊗A)·χ_{V,I}` at the requested dimension, when `σ` is a character.
    pub sigma_bar: Option<ExactMatrix>,
    pub sigma_bar_witness: Option<IsoWitness>,
}

impl AugmentationReport {
    pub fn sigma_bar_invertible(&self) -> Option<bool> {
        self.sigma_bar_witness.as_ref().map(IsoWitness::is_inverse)
    }
}

pub fn check_augmentation(b: &Bialgebra, sigma: &ExactMatrix, dv: usize) -> AugmentationReport {
    let f = b.field();
    let d = b.dim();
    assert_eq!(sigma.shape(), (1, d), "a character is a 1×dim row");
    let mut character = AxiomReport::default();
    character.push(AxiomCheck::compare(
        "multiplicative",
        &mm(sigma, b.mult()),
        &kr(sigma, sigma),
        &[d, d],
        &[1],
    ));
    character.push(AxiomCheck::compare(
        "unital",
        &mm(sigma, b.unit()),
        &eye(f, 1),
        &[1],
        &[1],
    ));
    if !character.all_pass() {
        return AugmentationReport {
            character,
            is_augmentation: false,
            sigma_bar: None,
            sigma_bar_witness: None,
        };
    }
    let sb = mm(
        &tensor_all(f, &[sigma, &eye(f, dv), &b.id()]).expect("same field"),
        &build_chi(b, dv, 1),
    );
    let w = decide_iso(&sb);
    AugmentationReport {
        character,
        is_augmentation: true,
        sigma_bar: Some(sb),
        sigma_bar_witness: Some(w),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn z2() -> Bialgebra {
        Bialgebra::monoid_algebra(Q, &[vec![0, 1], vec![1, 0]], None).unwrap()
    }

    fn idem() -> Bialgebra {
        Bialgebra::monoid_algebra(Q, &[vec![0, 1], vec![1, 1]], None).unwrap()
    }

    #[test]
    fn chi_at_unit_objects_is_comult() {
        let b = z2();
        assert_eq!(build_chi(&b, 1, 1), *b.comult());
        assert!(build_chi(&Bialgebra::trivial(Q), 2, 3).is_identity());
    }

    #[test]
    fn direct_and_composed_agree() {
        for b in [z2(), idem()] {
            for (v, w) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
                assert_eq!(build_chi(&b, v, w), build_chi_composed(&b, v, w));
                assert_eq!(fusion_left(&b, v, w), fusion_left_composed(&b, v, w));
                assert_eq!(fusion_right(&b, v, w), fusion_right_composed(&b, v, w));
                assert_eq!(fusion_left(&b, v, w), fusion_left_reconstructed(&b, v, w));
            }
        }
    }

    #[test]
    fn idempotent_monoid_collision() {
        let b = idem();
        let g = gamma_left(&b);
        // z⊗1 and z⊗z both go to z⊗z
        assert_eq!(g.column(2), g.column(3));
        assert_eq!(g.rank(), 3);
        assert!(!hopf_cross_check(&b).antipode);
        assert!(hopf_cross_check(&b).consistent());
    }

    #[test]
    fn z2_antipode_is_identity() {
        let s = solve_antipode(&z2());
        assert_eq!(s.matrix().unwrap(), &ExactMatrix::identity(Q, 2));
        assert_eq!(hopf_cross_check(&z2()).verdict(), Some(true));
    }

    #[test]
    fn sign_character() {
        let b = z2();
        let sign = ExactMatrix::from_rows(Q, &[vec![1, -1]]);
        let r = check_augmentation(&b, &sign, 1);
        assert!(r.is_augmentation);
        assert_eq!(r.sigma_bar_invertible(), Some(true));
        let bad = ExactMatrix::from_rows(Q, &[vec![0, 1]]);
        assert!(!check_augmentation(&b, &bad, 1).is_augmentation);
    }
}
