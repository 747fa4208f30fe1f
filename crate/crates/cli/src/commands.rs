//! One report builder per command.

use hopfkit_core::bialgebra::{Bialgebra, Comonoid, Grouplike};
use hopfkit_core::corpus::{self, CorpusEntry, MonadFile};
use hopfkit_core::exactlin::ExactMatrix;
use hopfkit_core::finset::{
    check_functoriality, check_monad_laws, exponential_suite, galois_grouplike_report,
    powerset_suite, terminal_preservation_check, CartesianCategory, FinMap, FinSet, GaloisReport,
    IdentityMonad, LawReport, Status as LawStatus, TerminalPreservation, SKELETON_CAP,
};
use hopfkit_core::fusion::{
    build_chi, decide_iso, fusion_left, fusion_left_composed, fusion_left_reconstructed,
    fusion_right, fusion_right_composed, gamma_left, gamma_right, hopf_cross_check, mutation_sweep,
    solve_antipode, verify_entwining_axioms, verify_opmonoidal, AntipodeResult, EntwiningData,
};
use hopfkit_core::hopfmod::{
    coinvariants, comonad_morphism_component, comparison_k, find_non_hopf_witness,
    fundamental_iso_check, linear_galois_report,
};
use hopfkit_core::report::AxiomReport;

use crate::job::{
    require_bialgebra, InputError, JobSpec, DEFAULT_PRESHEAF_SET, DEFAULT_SKELETON, POSET_CAP,
};
use crate::report::{iso_witness, Report};

/// Comonoids paired with a bialgebra: the bundled ones over its field with dimension at most 3.
fn paired_comonoids(b: &Bialgebra) -> Vec<(String, Comonoid)> {
    corpus::comonoids()
        .into_iter()
        .filter(|(_, c)| c.field() == b.field() && c.dim() <= 3)
        .collect()
}

fn unit_grouplike(b: &Bialgebra) -> (Comonoid, Grouplike) {
    let c = Comonoid::unit_object(b.field());
    let g = c.basis_grouplikes().remove(0);
    (c, g)
}

fn axioms(r: &mut Report, prefix: &str, report: &AxiomReport, consistency: bool) {
    for c in &report.checks {
        let name = format!("{prefix}{}", c.name);
        let check = if consistency {
            r.consistency(name, c.passed)
        } else {
            r.claim(name, c.passed)
        };
        if let Some(w) = &c.witness {
            check.with_witness(w);
        }
    }
}

fn laws(r: &mut Report, prefix: &str, report: &LawReport) {
    for c in &report.checks {
        let name = format!("{prefix}{}", c.name);
        match c.status {
            LawStatus::Pass => {
                r.consistency(name, true);
            }
            LawStatus::Fail => {
                r.consistency(name, false);
            }
            LawStatus::Skipped => {
                r.skipped(name, c.detail.as_deref().unwrap_or("skipped"));
            }
        }
    }
}

pub fn validate(job: &JobSpec, entry: CorpusEntry, r: &mut Report) -> Result<(), InputError> {
    match entry {
        CorpusEntry::Bialgebra(b) => {
            r.info("dimension", b.dim());
            r.info("field", b.field().to_string());
            let report = b.validate();
            axioms(r, "", &report, false);
            r.info("commutative", b.is_commutative());
            r.info("cocommutative", b.is_cocommutative());
            r.verdict = format!("bialgebra axioms hold: {}", report.all_pass());
        }
        CorpusEntry::Comonoid(c) => {
            r.info("dimension", c.dim());
            r.info("field", c.field().to_string());
            let report = c.validate();
            axioms(r, "", &report, false);
            let glike: Vec<String> = c
                .basis_grouplikes()
                .iter()
                .map(|g| grouplike_label(&c, g))
                .collect();
            r.info("basis grouplikes", glike);
            r.verdict = format!("comonoid axioms hold: {}", report.all_pass());
        }
        CorpusEntry::Monad(_) => {
            return Err(InputError(format!(
                "{} needs a bialgebra or comonoid input; use finset for monads",
                job.command.name()
            )))
        }
    }
    Ok(())
}

fn grouplike_label(c: &Comonoid, g: &Grouplike) -> String {
    let v = g.vector();
    (0..v.rows())
        .find(|&i| !v.get(i, 0).is_zero())
        .map(|i| c.labels()[i].clone())
        .unwrap_or_default()
}

pub fn hopf(job: &JobSpec, entry: CorpusEntry, r: &mut Report) -> Result<(), InputError> {
    let b = require_bialgebra(job, entry)?;
    let h = hopf_cross_check(&b);
    r.info("antipode exists", h.antipode);
    let gl = gamma_left(&b);
    r.info("gamma_left invertible", h.gamma_left)
        .with_witness(iso_witness(&gl, &decide_iso(&gl)));
    r.info("gamma_right invertible", h.gamma_right);
    r.info("H^l_{I,I} invertible", h.h_l);
    r.info("H^r_{I,I} invertible", h.h_r);
    r.consistency("five criteria agree", h.consistent());
    let check = r.claim("Hopf", h.antipode);
    match solve_antipode(&b) {
        AntipodeResult::Antipode { matrix, .. } => {
            check.with_witness(serde_json::json!({ "antipode": matrix }));
        }
        AntipodeResult::NoAntipode { .. } => {
            check.with_witness(iso_witness(&gl, &decide_iso(&gl)));
        }
    }
    r.verdict = match h.verdict() {
        Some(v) => format!("Hopf: {v}"),
        None => "criteria disagree".into(),
    };
    Ok(())
}

pub fn antipode(job: &JobSpec, entry: CorpusEntry, r: &mut Report) -> Result<(), InputError> {
    let b = require_bialgebra(job, entry)?;
    match solve_antipode(&b) {
        AntipodeResult::Antipode {
            matrix,
            solution_dim,
        } => {
            r.claim("antipode exists", true)
                .with_witness(serde_json::json!({ "antipode": matrix }));
            r.info("solution space dimension", solution_dim);
            let (left, right) = hopfkit_core::fusion::convolutions(&b, &matrix);
            let target = b.unit().matmul(b.counit()).expect("composable");
            r.consistency("m(S⊗id)δ = eε", left == target);
            r.consistency("m(id⊗S)δ = eε", right == target);
            if b.is_commutative() || b.is_cocommutative() {
                let ss = matrix.matmul(&matrix).expect("square");
                r.consistency("S∘S = id", ss.is_identity());
            } else {
                r.skipped("S∘S = id", "neither commutative nor cocommutative");
            }
            r.verdict = "antipode found".into();
        }
        AntipodeResult::NoAntipode { certificate } => {
            r.claim("antipode exists", false)
                .with_witness(serde_json::json!({ "left_kernel_certificate": certificate }));
            r.verdict = "no antipode".into();
        }
    }
    Ok(())
}

pub fn fusion(job: &JobSpec, entry: CorpusEntry, r: &mut Report) -> Result<(), InputError> {
    let b = require_bialgebra(job, entry)?;
    let dims: Vec<usize> = (1..=job.dim_bound).collect();
    axioms(r, "opmonoidal ", &verify_opmonoidal(&b, &dims), true);
    let base_l = fusion_left(&b, 1, 1).is_invertible();
    let base_r = fusion_right(&b, 1, 1).is_invertible();
    let mut uniform = true;
    for &v in &dims {
        for &w in &dims {
            let hl = fusion_left(&b, v, w);
            let hr = fusion_right(&b, v, w);
            r.consistency(
                format!("H^l_{{{v},{w}}} matches its composite"),
                hl == fusion_left_composed(&b, v, w),
            );
            r.consistency(
                format!("H^r_{{{v},{w}}} matches its composite"),
                hr == fusion_right_composed(&b, v, w),
            );
            r.consistency(
                format!("H^l_{{{v},{w}}} = conjugate of γ_left⊗id"),
                hl == fusion_left_reconstructed(&b, v, w),
            );
            let (wl, wr) = (decide_iso(&hl), decide_iso(&hr));
            uniform &= wl.is_inverse() == base_l && wr.is_inverse() == base_r;
            r.info(format!("H^l_{{{v},{w}}} invertible"), wl.is_inverse())
                .with_witness(iso_witness(&hl, &wl));
            r.info(format!("H^r_{{{v},{w}}} invertible"), wr.is_inverse())
                .with_witness(iso_witness(&hr, &wr));
        }
    }
    r.consistency("invertibility independent of V, W", uniform);
    let gr = gamma_right(&b);
    r.consistency(
        "γ_right invertible iff H^r_{I,I} invertible",
        gr.is_invertible() == base_r,
    );
    r.claim("left pre-Hopf", base_l);
    r.claim("right pre-Hopf", base_r);
    r.verdict = format!("left pre-Hopf: {base_l}, right pre-Hopf: {base_r}");
    Ok(())
}

pub fn entwine(job: &JobSpec, entry: CorpusEntry, r: &mut Report) -> Result<(), InputError> {
    let b = require_bialgebra(job, entry)?;
    let mut all = true;
    for (name, c) in paired_comonoids(&b) {
        let e = EntwiningData::new(&b, &c);
        let report = verify_entwining_axioms(&e, job.dim_bound);
        all &= report.all_pass();
        axioms(r, &format!("{name}: "), &report, false);
        let sweep = mutation_sweep(&e, job.dim_bound, 20);
        let caught = sweep.iter().filter(|m| m.caught()).count();
        let check = r.claim(
            format!("{name}: perturbations of λ detected"),
            caught == sweep.len(),
        );
        check.with_value(format!("{caught}/{}", sweep.len()));
        if let Some(m) = sweep.iter().find(|m| !m.caught()) {
            check.with_witness(m);
        }
    }
    r.verdict = format!("entwining diagrams hold: {all}");
    Ok(())
}

pub fn hopfmod(job: &JobSpec, entry: CorpusEntry, r: &mut Report) -> Result<(), InputError> {
    let b = require_bialgebra(job, entry)?;
    let (unit_c, g) = unit_grouplike(&b);
    let e = EntwiningData::new(&b, &unit_c);
    let mut fundamental = true;
    for dv in 1..=job.dim_bound {
        let k = comparison_k(&e, &g, dv);
        r.consistency(format!("K(V) entwined module, dim V={dv}"), true);
        let co = coinvariants(&e, &g, &k).len();
        r.claim(
            format!("coinvariants of K(V) have dim V, dim V={dv}"),
            co == dv,
        )
        .with_value(co);
        let iso = fundamental_iso_check(&e, &g, &k);
        fundamental &= iso.invertible;
        let check = r.claim(
            format!("M^co⊗A → M invertible at K(V), dim V={dv}"),
            iso.invertible,
        );
        if let Some(w) = &iso.witness {
            check.with_witness(iso_witness(&iso.canonical_map, w));
        }
    }
    let hopf = hopf_cross_check(&b).antipode;
    if !hopf {
        match find_non_hopf_witness(&e, &g, 2) {
            Some(w) => {
                fundamental = false;
                r.claim("fundamental theorem at every entwined module", false)
                    .with_witness(&w);
            }
            None => {
                r.info("non-Hopf witness among small modules", false);
            }
        }
    }
    for (name, c) in paired_comonoids(&b) {
        for gc in c.basis_grouplikes() {
            let label = grouplike_label(&c, &gc);
            let mut ok = true;
            let actions: Vec<ExactMatrix> = std::iter::once(b.counit().clone())
                .chain((1..=job.dim_bound).map(|v| {
                    b.mult()
                        .kron(&ExactMatrix::identity(b.field(), v))
                        .expect("same field")
                }))
                .collect();
            for h in &actions {
                ok &= comonad_morphism_component(&b, &c, &gc, h)
                    .factorization
                    .passed;
            }
            r.consistency(format!("S_g = (id⊗T(g))·S_e for {name}, g={label}"), ok);
        }
    }
    r.consistency("χ_{I,I} = δ", build_chi(&b, 1, 1) == *b.comult());
    r.verdict = format!("fundamental theorem holds on tested modules: {fundamental}");
    Ok(())
}

pub fn galois(job: &JobSpec, entry: CorpusEntry, r: &mut Report) -> Result<(), InputError> {
    if let CorpusEntry::Monad(m) = entry {
        return galois_monad(job, &m, r);
    }
    let b = require_bialgebra(job, entry)?;
    let (unit_c, _) = unit_grouplike(&b);
    let mut comonoids = vec![("comonoid_I".to_string(), unit_c)];
    comonoids.extend(
        paired_comonoids(&b)
            .into_iter()
            .filter(|(_, c)| c.dim() > 1),
    );
    let mut unit_galois = None;
    for (name, c) in &comonoids {
        for g in c.basis_grouplikes() {
            let label = grouplike_label(c, &g);
            let rep = linear_galois_report(&b, c, &g, job.dim_bound);
            let tag = format!("{name}, g={label}");
            r.info(format!("T(g) invertible ({tag})"), rep.tg_iso);
            r.info(format!("g Galois ({tag})"), rep.g_galois);
            r.consistency(
                format!("g Galois iff unit Galois and T(g) iso ({tag})"),
                rep.biconditional_holds,
            );
            r.consistency(
                format!("factorization through T(g) ({tag})"),
                rep.factorization_holds,
            );
            unit_galois.get_or_insert(rep.unit_galois);
        }
    }
    let unit = unit_galois.expect("the unit comonoid has a grouplike");
    r.claim("unit grouplike Galois", unit);
    r.verdict = format!("unit grouplike Galois: {unit}");
    Ok(())
}

fn galois_fields(r: &mut Report, label: &str, g: &GaloisReport, expect_claim: bool) {
    r.info(format!("{label}: T(g) iso"), g.tg_iso);
    r.info(format!("{label}: route"), &g.route);
    if let Some(rp) = g.right_prehopf {
        r.info(format!("{label}: every ⟨h, T(!)⟩ bijective"), rp);
    }
    r.consistency(
        format!("{label}: g Galois iff unit Galois and T(g) iso"),
        g.biconditional_holds,
    );
    match g.g_galois {
        Some(v) if expect_claim => {
            let c = r.claim(format!("{label}: 1_1 Galois"), v);
            if !g.failing_components.is_empty() {
                c.with_witness(serde_json::json!({ "failing_components": g.failing_components }));
            }
        }
        Some(v) => {
            r.info(format!("{label}: 1_1 Galois"), v);
        }
        None => {
            r.skipped(
                format!("{label}: 1_1 Galois"),
                "no route decides the unit grouplike",
            );
        }
    }
}

fn terminal(r: &mut Report, label: &str, t: &TerminalPreservation) {
    r.info(format!("{label}: T(1) terminal"), t.t1_terminal);
    r.consistency(
        format!("{label}: T(1) terminal iff every i_x invertible"),
        t.biconditional_holds,
    );
}

fn skeleton_bound(job: &JobSpec) -> Result<usize, InputError> {
    let n = job.max.unwrap_or(DEFAULT_SKELETON);
    if n > SKELETON_CAP {
        return Err(InputError(format!(
            "--max {n} exceeds the skeleton cap {SKELETON_CAP}"
        )));
    }
    Ok(n)
}

fn galois_monad(job: &JobSpec, m: &MonadFile, r: &mut Report) -> Result<(), InputError> {
    match m {
        MonadFile::Identity => {
            let n = skeleton_bound(job)?;
            let objects: Vec<usize> = (0..=n).collect();
            let algebras: Vec<(usize, FinMap)> =
                objects.iter().map(|&k| (k, FinMap::identity(k))).collect();
            let g = galois_grouplike_report(
                &FinSet,
                &IdentityMonad,
                &FinSet.identity(&1),
                &algebras,
                None,
            );
            galois_fields(r, "identity", &g, true);
            r.verdict = format!(
                "1_1 Galois for the identity monad: {}",
                g.g_galois == Some(true)
            );
        }
        MonadFile::Powerset => {
            let s = powerset_suite(skeleton_bound(job)?);
            galois_fields(r, "P", &s.galois_p, true);
            galois_fields(r, "P+", &s.galois_plus, true);
            r.verdict = s.verdict();
        }
        MonadFile::Exponential { .. } => {
            let s = run_exponential(job, m)?;
            galois_fields(r, "T_u", &s.galois, true);
            r.verdict = format!("1_1 Galois for T_u: {}", s.galois.g_galois == Some(true));
        }
    }
    Ok(())
}

fn run_exponential(
    job: &JobSpec,
    m: &MonadFile,
) -> Result<hopfkit_core::finset::ExponentialSuite, InputError> {
    let (poset, mask) = m
        .exponential_parts()
        .expect("exponential monad")
        .map_err(InputError)?;
    let cap = job.cap.unwrap_or(POSET_CAP);
    if poset.size > cap {
        return Err(InputError(format!(
            "poset of size {} exceeds the cap {cap} (raise it with --cap)",
            poset.size
        )));
    }
    exponential_suite(poset, mask, job.max.unwrap_or(DEFAULT_PRESHEAF_SET)).map_err(InputError)
}

pub fn finset(job: &JobSpec, entry: CorpusEntry, r: &mut Report) -> Result<(), InputError> {
    let CorpusEntry::Monad(m) = entry else {
        return Err(InputError("finset needs a monad input".into()));
    };
    match &m {
        MonadFile::Identity => {
            let n = skeleton_bound(job)?;
            let objects: Vec<usize> = (0..=n).collect();
            let maps: Vec<FinMap> = objects
                .iter()
                .flat_map(|&a| objects.iter().flat_map(move |&b| FinMap::all(a, b)))
                .collect();
            laws(r, "", &check_monad_laws(&FinSet, &IdentityMonad, &objects));
            laws(
                r,
                "",
                &check_functoriality(&FinSet, &IdentityMonad, &objects, &maps),
            );
            terminal(
                r,
                "identity",
                &terminal_preservation_check(&FinSet, &IdentityMonad, &objects),
            );
            galois_monad(job, &m, r)?;
        }
        MonadFile::Powerset => powerset_report(skeleton_bound(job)?, r),
        MonadFile::Exponential { .. } => exponential_report(&run_exponential(job, &m)?, r),
    }
    Ok(())
}

fn powerset_report(n: usize, r: &mut Report) {
    let s = powerset_suite(n);
    r.info("|P(n)| for n = 0..", &s.sizes);
    laws(r, "P ", &s.monad_laws);
    laws(r, "P ", &s.functoriality);
    laws(r, "P ", &s.chi);
    for c in &s.plus_components {
        r.consistency(
            format!("P^(1_1)({}) = nonempty subsets", c.n),
            c.nonempty_subsets,
        )
        .with_witness(&c.labels);
    }
    laws(r, "P+ ", &s.plus_laws);
    laws(r, "P+ table ", &s.plus_table_functoriality);
    for a in &s.algebras {
        r.info(format!("P-algebras with carrier {}", a.carrier), a.count);
        r.consistency(
            format!(
                "P-algebras with carrier {} are complete semilattices",
                a.carrier
            ),
            a.all_semilattices,
        );
        r.info(
            format!(
                "P-algebras with carrier {} with ⟨h, T(!)⟩ bijective",
                a.carrier
            ),
            a.right_prehopf_bijective,
        );
    }
    for a in &s.plus_algebras {
        r.info(format!("P+-algebras with carrier {}", a.carrier), a.count);
    }
    for (k, w) in s.omega.iter().enumerate() {
        r.info(
            format!("ω at semilattice #{k} (carrier {}) bijective", w.carrier),
            w.bijective,
        )
        .with_witness(serde_json::json!({ "omega": w.omega.table, "missed": w.missed }));
        r.consistency(
            format!("ω at semilattice #{k} injective and monotone"),
            w.injective && w.order_preserving,
        );
    }
    r.info("ω a natural isomorphism", !s.omega_not_natural_iso);
    r.consistency("r∘ī ≅ id on every P+-algebra", s.coreflection_holds());
    for (name, t) in &s.terminal_preservation {
        terminal(r, name, t);
    }
    galois_fields(r, "identity", &s.galois_identity, false);
    galois_fields(r, "P", &s.galois_p, true);
    galois_fields(r, "P+", &s.galois_plus, true);
    r.verdict = s.verdict();
}

fn exponential_report(s: &hopfkit_core::finset::ExponentialSuite, r: &mut Report) {
    r.info("u", format!("{:?}", s.u));
    r.info("presheaves in inventory", s.inventory_size);
    r.info(
        "subterminals",
        s.subterminals
            .iter()
            .map(|u| format!("{u:?}"))
            .collect::<Vec<_>>(),
    );
    r.consistency("Δ_u invertible", s.diagonal_iso);
    r.consistency("T_u(1) terminal", s.one_power_terminal);
    laws(r, "T_u ", &s.monad_laws);
    laws(r, "T_u ", &s.functoriality);
    r.consistency("every m_x invertible", s.idempotent);
    r.consistency(
        "m = x^Δ and e = x^! after currying",
        s.structure_routes_agree,
    );
    r.consistency("Hom(Z×X, Y) ≅ Hom(Z, Y^X)", s.adjunction.holds)
        .with_value(
            serde_json::json!({ "triples": s.adjunction.triples, "holds": s.adjunction.holds }),
        );
    r.info("T_u-algebras", s.algebras_tested);
    r.consistency("every ⟨h, T(!)⟩ bijective", s.right_prehopf);
    terminal(r, "T_u", &s.terminal_preservation);
    galois_fields(r, "T_u", &s.galois, true);
    let w = &s.witness;
    if w.u_trivial {
        r.info("comparison not an equivalence", w.message.as_str());
    } else {
        r.claim("comparison not an equivalence", w.found)
            .with_witness(serde_json::json!({
                "a": format!("{:?}", w.a),
                "b": format!("{:?}", w.b),
                "hom_a_b": w.hom_a_b,
                "hom_a_tb": w.hom_a_tb,
                "u_is_initial": w.u_is_initial,
            }));
    }
    r.verdict = format!(
        "T_u idempotent: {}, right pre-Hopf: {}, {}",
        s.idempotent, s.right_prehopf, w.message
    );
}
