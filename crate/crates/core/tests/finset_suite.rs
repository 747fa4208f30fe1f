use std::collections::BTreeSet;

use hopfkit_core::finset::{
    canonical_chi, coreflection_check, enumerate_algebras, exponential_suite, omega_report,
    powerset_suite, proper_powerset, terminal_preservation_check, CartesianCategory,
    CartesianMonad, CompleteSemilattice, FinPoset, FinSet, IdentityMonad, PowersetMonad,
    PresheafCategory, UnitRoute,
};

/// Join tables `mask ↦ lub` of every partial order on `n` points in which each subset has a
/// least upper bound, found by brute force over relations.
fn complete_lattice_tables(n: usize) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    let pairs = n * n;
    for rel in 0u32..1 << pairs {
        let le = |a: usize, b: usize| rel >> (a * n + b) & 1 == 1;
        let reflexive = (0..n).all(|a| le(a, a));
        let antisymmetric = (0..n).all(|a| (0..n).all(|b| a == b || !(le(a, b) && le(b, a))));
        let transitive =
            (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !(le(a, b) && le(b, c)) || le(a, c))));
        if !(reflexive && antisymmetric && transitive) {
            continue;
        }
        let lub = |mask: usize| {
            let upper: Vec<usize> = (0..n)
                .filter(|&u| (0..n).all(|x| mask >> x & 1 == 0 || le(x, u)))
                .collect();
            upper
                .iter()
                .copied()
                .find(|&u| upper.iter().all(|&v| le(u, v)))
        };
        if let Some(table) = (0..1usize << n).map(lub).collect::<Option<Vec<_>>>() {
            out.insert(table);
        }
    }
    out
}

#[test]
fn powerset_algebras_are_complete_semilattices() {
    for (n, expected) in [0, 1, 2, 6].into_iter().enumerate() {
        let oracle = complete_lattice_tables(n);
        assert_eq!(oracle.len(), expected, "oracle at {n}");
        let found: BTreeSet<Vec<usize>> = enumerate_algebras(&FinSet, &PowersetMonad, &n)
            .into_iter()
            .map(|h| h.table)
            .collect();
        assert_eq!(found, oracle, "carrier {n}");
    }
}

#[test]
fn proper_powerset_is_nonempty_subsets() {
    let plus = proper_powerset();
    for n in 0..=3usize {
        assert_eq!(plus.apply(&FinSet, &n), (1 << n) - 1);
        let i = plus.inclusion(&FinSet, &n);
        assert_eq!(i.table, (1..1usize << n).collect::<Vec<_>>());
    }
}

#[test]
fn chi_on_one_by_one() {
    let chi = canonical_chi(&FinSet, &PowersetMonad, &1, &1);
    assert_eq!(chi.table, vec![0, 3]);
}

#[test]
fn omega_at_two_chain_misses_one_zero() {
    let r = omega_report(&CompleteSemilattice::chain(2));
    assert!(r.injective && r.order_preserving);
    assert!(!r.bijective);
    assert_eq!(r.missed, vec![(1, 0)]);
    assert!(omega_report(&CompleteSemilattice::chain(1)).bijective);
}

#[test]
fn coreflection_on_all_small_plus_algebras() {
    let plus = proper_powerset();
    let mut tested = 0;
    for n in 0..=3 {
        for h in enumerate_algebras(&FinSet, &plus, &n) {
            assert!(coreflection_check(&h).holds(), "carrier {n}: {h:?}");
            tested += 1;
        }
    }
    assert_eq!(tested, 1 + 1 + 2 + 9);
}

#[test]
fn powerset_suite_findings() {
    let s = powerset_suite(3);
    assert_eq!(s.sizes, vec![1, 2, 4, 8]);
    assert!(s.monad_laws.all_pass() && s.functoriality.all_pass() && s.chi.all_pass());
    assert!(s.plus_laws.all_pass() && s.plus_table_functoriality.all_pass());
    assert!(s.plus_is_nonempty_subsets());
    assert!(s.algebras_are_semilattices());
    let counts: Vec<usize> = s.algebras.iter().map(|a| a.count).collect();
    assert_eq!(counts, vec![0, 1, 2, 6]);
    assert!(s.omega_not_natural_iso);
    assert!(s.coreflection_holds());
    assert_eq!(s.verdict(), "1_1 not Galois for P, Galois for P+");
    assert_eq!(s.galois_plus.route, UnitRoute::TerminalPreserved);
    assert_eq!(s.galois_p.route, UnitRoute::ExplicitComponents);
}

#[test]
fn terminal_preservation_both_directions() {
    let s = powerset_suite(3);
    let expected = [
        ("identity", true),
        ("powerset", false),
        ("proper powerset", true),
    ];
    for ((name, tp), (want_name, want)) in s.terminal_preservation.iter().zip(expected) {
        assert_eq!(name, want_name);
        assert_eq!(tp.t1_terminal, want, "{name}");
        assert!(tp.biconditional_holds, "{name}");
        assert_eq!(tp.inclusion_iso.iter().all(|(_, b)| *b), want, "{name}");
    }
    let objects: Vec<usize> = (0..=3).collect();
    assert!(terminal_preservation_check(&FinSet, &IdentityMonad, &objects).t1_terminal);
}

/// Presheaves on `{0<1}` with sets of size at most `max`: one per pair of sizes and map
/// `F(1) → F(0)`.
fn presheaf_count(max: usize) -> usize {
    (0..=max)
        .flat_map(|a| (0..=max).map(move |b| a.pow(b as u32)))
        .sum()
}

#[test]
fn exponential_monad_suite() {
    let s = exponential_suite(FinPoset::chain(2), 0b01, 2).unwrap();
    assert_eq!(s.u.sizes, vec![1, 0]);
    assert_eq!(s.inventory_size, presheaf_count(2));
    assert_eq!(s.inventory_size, 11);
    assert!(s.monad_laws.all_pass() && s.functoriality.all_pass());
    assert!(s.idempotent, "every m_x must be an isomorphism");
    assert!(s.one_power_terminal);
    assert!(s.right_prehopf);
    assert!(s.algebras_tested > 0);
    assert!(s.terminal_preservation.t1_terminal && s.terminal_preservation.biconditional_holds);
    assert!(s.adjunction.holds);
    assert!(s.all_pass());

    let w = &s.witness;
    let cat = PresheafCategory::new(FinPoset::chain(2));
    assert!(w.found);
    assert!(cat.is_terminal(&w.a));
    assert_eq!(w.b, s.u);
    // u(1) is empty, so u has no global sections; Hom(1, u^u) ≅ Hom(u, u) = {id}.
    assert_eq!(w.hom_a_b, 0);
    assert_eq!(w.hom_a_tb, 1);
    assert_eq!(cat.hom_count(&w.a, &w.b), 0);
}

#[test]
fn exponential_variants() {
    let full = exponential_suite(FinPoset::chain(2), 0b11, 2).unwrap();
    assert!(full.all_pass() && full.witness.u_trivial && !full.witness.found);
    let empty = exponential_suite(FinPoset::chain(2), 0, 2).unwrap();
    assert!(empty.all_pass() && empty.witness.u_is_initial && empty.witness.found);
    assert!(exponential_suite(FinPoset::chain(2), 0b10, 2).is_err());
}
