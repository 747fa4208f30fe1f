use hopfkit_core::bialgebra::{Bialgebra, Comonoid};
use hopfkit_core::corpus;
use hopfkit_core::exactlin::{ExactMatrix, SparseMatrix};
use hopfkit_core::fusion::{
    build_entwining, fusion_left, fusion_left_composed, fusion_left_sparse,
    verify_entwining_axioms, EntwiningData,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const DIM_BOUND: usize = 2;
const MUTATIONS: usize = 20;

fn small_pairs() -> Vec<(String, Bialgebra, String, Comonoid)> {
    let mut out = Vec::new();
    for (bn, b) in corpus::bialgebras() {
        if b.dim() > 3 {
            continue;
        }
        for (cn, c) in corpus::comonoids() {
            if c.dim() <= 3 && c.field() == b.field() {
                out.push((bn.clone(), b.clone(), cn, c));
            }
        }
    }
    out
}

#[test]
fn corpus_pairs_are_entwinings() {
    let pairs = small_pairs();
    assert!(pairs.len() >= 40, "only {} pairs", pairs.len());
    for (bn, b, cn, c) in pairs {
        let report = verify_entwining_axioms(&EntwiningData::new(&b, &c), DIM_BOUND);
        assert_eq!(report.checks.len(), 4 * DIM_BOUND);
        assert!(
            report.all_pass(),
            "{bn} with {cn}: {:?}",
            report.failures().next()
        );
    }
}

#[test]
fn random_single_entry_mutations_are_caught() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for (bn, b, cn, c) in small_pairs() {
        let e = EntwiningData::new(&b, &c);
        for _ in 0..MUTATIONS {
            let dv = rng.gen_range(1..=DIM_BOUND);
            let (rows, cols) = e.lambda(dv).shape();
            let (row, col) = (rng.gen_range(0..rows), rng.gen_range(0..cols));
            let report = verify_entwining_axioms(&e.clone().mutated(dv, row, col), DIM_BOUND);
            assert!(
                !report.all_pass(),
                "{bn} with {cn}: mutation at V={dv} ({row}, {col}) went unnoticed"
            );
        }
    }
}

#[test]
fn entwining_is_the_left_fusion_operator() {
    for (bn, b, _, c) in small_pairs().into_iter().step_by(5) {
        for dv in 1..=DIM_BOUND {
            let lam = build_entwining(&b, &c, dv);
            assert_eq!(lam, fusion_left_composed(&b, dv, c.dim()), "{bn}");
            assert_eq!(
                SparseMatrix::from_dense(&lam),
                fusion_left_sparse(&b, dv, c.dim())
            );
        }
    }
}

#[test]
fn large_components_match_composed_construction() {
    let Some(corpus::CorpusEntry::Bialgebra(b)) = corpus::load("group_S3_Q") else {
        panic!("S3 missing from corpus");
    };
    let c = Comonoid::set_like(b.field(), 2);
    let composed: ExactMatrix = fusion_left_composed(&b, 3, c.dim());
    assert_eq!(fusion_left_sparse(&b, 3, c.dim()).to_dense(), composed);
    assert_eq!(fusion_left(&b, 3, c.dim()), composed);
    assert!(verify_entwining_axioms(&EntwiningData::new(&b, &c), DIM_BOUND).all_pass());
}
