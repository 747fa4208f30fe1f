use hopfkit_core::bialgebra::Bialgebra;
use hopfkit_core::corpus::{self, MonoidTable, FIELDS};
use hopfkit_core::exactlin::{ExactMatrix, Field, Scalar};
use hopfkit_core::fusion::{convolutions, hopf_cross_check, solve_antipode, AntipodeResult};

/// Inverse of each element read straight off the table, or `None` when some element has none.
fn inverse_table(m: &MonoidTable) -> Option<Vec<usize>> {
    let n = m.table.len();
    let e = (0..n).find(|&e| (0..n).all(|x| m.table[e][x] == x && m.table[x][e] == x))?;
    (0..n)
        .map(|x| (0..n).find(|&y| m.table[x][y] == e && m.table[y][x] == e))
        .collect()
}

#[test]
fn five_criteria_agree_on_corpus() {
    for (name, b) in corpus::bialgebras() {
        let h = hopf_cross_check(&b);
        assert!(h.consistent(), "{name}: {:?}", h.values());
    }
}

#[test]
fn hopf_exactly_for_groups() {
    let tables = corpus::groups()
        .into_iter()
        .chain(corpus::idempotent_monoids());
    for m in tables {
        let expected = inverse_table(&m).is_some();
        assert_eq!(expected, m.is_group, "{}", m.name);
        for f in FIELDS {
            let b = corpus::monoid_bialgebra(&m, f);
            assert_eq!(
                hopf_cross_check(&b).verdict(),
                Some(expected),
                "{} over {f}",
                m.name
            );
        }
    }
    assert_eq!(
        hopf_cross_check(&Bialgebra::trivial(Field::Rational)).verdict(),
        Some(true)
    );
}

#[test]
fn corpus_covers_required_orders() {
    let orders: Vec<usize> = corpus::groups().iter().map(|g| g.table.len()).collect();
    for n in 1..=6 {
        assert!(orders.contains(&n), "no group of order {n}");
    }
    let idem: Vec<usize> = corpus::idempotent_monoids()
        .iter()
        .map(|m| m.table.len())
        .collect();
    assert_eq!(idem, vec![2, 3]);
}

#[test]
fn antipode_is_inverse_permutation() {
    for g in corpus::groups() {
        let inv = inverse_table(&g).unwrap();
        for f in FIELDS {
            let b = corpus::monoid_bialgebra(&g, f);
            let n = b.dim();
            let oracle = ExactMatrix::from_fn(f, n, n, |i, j| {
                if inv[j] == i {
                    Scalar::one(f)
                } else {
                    Scalar::zero(f)
                }
            });
            let AntipodeResult::Antipode {
                matrix,
                solution_dim,
            } = solve_antipode(&b)
            else {
                panic!("{} over {f}: no antipode", g.name);
            };
            assert_eq!(matrix, oracle, "{} over {f}", g.name);
            assert_eq!(solution_dim, 0, "antipode of a Hopf algebra is unique");
            let target = b.unit().matmul(b.counit()).unwrap();
            let (l, r) = convolutions(&b, &matrix);
            assert_eq!(l, target);
            assert_eq!(r, target);
            assert!(matrix.matmul(&matrix).unwrap().is_identity());
        }
    }
}

#[test]
fn idempotent_monoid_has_no_antipode_certificate() {
    for m in corpus::idempotent_monoids() {
        for f in FIELDS {
            let b = corpus::monoid_bialgebra(&m, f);
            match solve_antipode(&b) {
                AntipodeResult::NoAntipode { certificate } => assert!(!certificate.is_zero()),
                AntipodeResult::Antipode { .. } => panic!("{} over {f} has an antipode", m.name),
            }
        }
    }
}

#[test]
fn broken_comultiplication_is_rejected() {
    let g = &corpus::groups()[1];
    let good = corpus::monoid_bialgebra(g, Field::Rational);
    assert!(good.validate().all_pass());
    let mut comult = good.comult().clone();
    comult.set(1, 0, Scalar::one(Field::Rational));
    let bad = Bialgebra::new(
        good.mult().clone(),
        good.unit().clone(),
        comult,
        good.counit().clone(),
        None,
    )
    .unwrap();
    let report = bad.validate();
    assert!(!report.all_pass());
    assert!(report.failures().all(|c| c.witness.is_some()));
}
