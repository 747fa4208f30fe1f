//! One line per acceptance criterion. All comparisons are exact; runtime bounds are wall-clock
//! limits on this target's own build profile.

use std::collections::BTreeSet;
use std::process::{Command as Process, ExitCode};
use std::time::{Duration, Instant};

use hopfkit_cli::{run, Command, JobSpec, Outcome, Status};
use hopfkit_core::bialgebra::{Bialgebra, Comonoid};
use hopfkit_core::corpus::{self, CorpusEntry, MonoidTable, FIELDS};
use hopfkit_core::exactlin::{ExactMatrix, Scalar};
use hopfkit_core::finset::{
    enumerate_algebras, exponential_suite, omega_report, powerset_suite, CompleteSemilattice,
    FinPoset, FinSet, PowersetMonad, TerminalPreservation,
};
use hopfkit_core::fusion::{
    convolutions, hopf_cross_check, mutation_sweep, solve_antipode, verify_entwining_axioms,
    AntipodeResult, EntwiningData,
};
use hopfkit_core::hopfmod::{
    coinvariants, comonad_morphism_component, comparison_k, find_non_hopf_witness,
    fundamental_iso_check, verify_entwined_module,
};

type Verdict = Result<String, String>;

/// Criterion number, check, and wall-clock bound in seconds.
type Criterion = (usize, fn() -> Verdict, Option<u64>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn is_hopf_name(name: &str) -> bool {
    name.starts_with("group_") || name.starts_with("trivial")
}

fn criterion_1() -> Verdict {
    let all = corpus::bialgebras();
    for (name, b) in &all {
        let h = hopf_cross_check(b);
        ensure(h.consistent(), || {
            format!("{name}: criteria disagree {:?}", h.values())
        })?;
        ensure(h.verdict() == Some(is_hopf_name(name)), || {
            format!("{name}: wrong verdict")
        })?;
        let report = run(&JobSpec::new(Command::Hopf, name)).map_err(|e| e.to_string())?;
        let agree = report
            .checks
            .iter()
            .find(|c| c.name == "five criteria agree");
        ensure(agree.is_some_and(|c| c.status == Status::Pass), || {
            format!("{name}: report lacks a passing consistency check")
        })?;
        let want = if is_hopf_name(name) {
            Outcome::Pass
        } else {
            Outcome::False
        };
        ensure(report.outcome() == want, || {
            format!("{name}: outcome {:?}", report.outcome())
        })?;
    }
    Ok(format!(
        "{} bialgebras, five booleans pairwise equal",
        all.len()
    ))
}

fn inverse_table(m: &MonoidTable) -> Vec<usize> {
    let n = m.table.len();
    let e = (0..n)
        .find(|&e| (0..n).all(|x| m.table[e][x] == x && m.table[x][e] == x))
        .expect("identity");
    (0..n)
        .map(|x| {
            (0..n)
                .find(|&y| m.table[x][y] == e)
                .expect("group element has an inverse")
        })
        .collect()
}

fn criterion_2() -> Verdict {
    let mut count = 0;
    for g in corpus::groups() {
        let inv = inverse_table(&g);
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
            let AntipodeResult::Antipode { matrix, .. } = solve_antipode(&b) else {
                return Err(format!("{} over {f}: no antipode", g.name));
            };
            ensure(matrix == oracle, || {
                format!("{} over {f}: S is not g ↦ g⁻¹", g.name)
            })?;
            let target = b.unit().matmul(b.counit()).unwrap();
            let (l, r) = convolutions(&b, &matrix);
            ensure(l == target && r == target, || {
                format!("{} over {f}: convolution", g.name)
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} group algebras, S = inverse permutation"))
}

const ENTWINE_DIM_BOUND: usize = 3;
const MUTATIONS: usize = 20;

fn criterion_3() -> Verdict {
    let (mut pairs, mut caught) = (0, 0);
    for (bn, b) in corpus::bialgebras()
        .into_iter()
        .filter(|(_, b)| b.dim() <= 3)
    {
        for (cn, c) in corpus::comonoids() {
            if c.dim() > 3 || c.field() != b.field() {
                continue;
            }
            let e = EntwiningData::new(&b, &c);
            let r = verify_entwining_axioms(&e, ENTWINE_DIM_BOUND);
            ensure(r.all_pass(), || {
                format!("{bn} with {cn}: {:?}", r.failures().next())
            })?;
            for m in mutation_sweep(&e, ENTWINE_DIM_BOUND, MUTATIONS) {
                ensure(m.caught(), || {
                    format!(
                        "{bn} with {cn}: mutation at V={} ({}, {}) passed",
                        m.dim_v, m.row, m.col
                    )
                })?;
                caught += 1;
            }
            pairs += 1;
        }
    }
    Ok(format!(
        "{pairs} pairs entwine, {caught}/{caught} mutations caught"
    ))
}

fn unit_comonoid(b: &Bialgebra) -> (Comonoid, hopfkit_core::bialgebra::Grouplike) {
    let c = Comonoid::unit_object(b.field());
    let g = c.basis_grouplikes().remove(0);
    (c, g)
}

fn criterion_4() -> Verdict {
    let mut instances = 0;
    for (name, b) in corpus::bialgebras() {
        let (c, g) = unit_comonoid(&b);
        let e = EntwiningData::new(&b, &c);
        if is_hopf_name(&name) {
            for dv in 1..=3 {
                let k = comparison_k(&e, &g, dv);
                let d = coinvariants(&e, &g, &k).len();
                ensure(d == dv, || {
                    format!("{name}, V={dv}: coinvariants of dimension {d}")
                })?;
                let iso = fundamental_iso_check(&e, &g, &k);
                let verified = iso
                    .witness
                    .as_ref()
                    .is_some_and(|w| w.verify(&iso.canonical_map));
                ensure(iso.invertible && verified, || {
                    format!("{name}, V={dv}: not invertible")
                })?;
                instances += 1;
            }
        } else if name.starts_with("monoid_idem_") {
            let w = find_non_hopf_witness(&e, &g, 2)
                .ok_or_else(|| format!("{name}: no failure witness"))?;
            ensure(verify_entwined_module(&e, &w.module).all_pass(), || {
                format!("{name}: witness is not an entwined module")
            })?;
            ensure(!fundamental_iso_check(&e, &g, &w.module).invertible, || {
                format!("{name}: witness map is invertible")
            })?;
        }
    }
    Ok(format!(
        "{instances} Hopf instances, idempotent-monoid witnesses re-verified"
    ))
}

fn criterion_5() -> Verdict {
    let mut checks = 0;
    for (bn, b) in corpus::bialgebras() {
        let f = b.field();
        let mut actions = vec![b.counit().clone()];
        for v in 1..=2 {
            actions.push(b.mult().kron(&ExactMatrix::identity(f, v)).unwrap());
        }
        for (cn, c) in corpus::comonoids()
            .into_iter()
            .filter(|(_, c)| c.field() == f)
        {
            for g in c.basis_grouplikes() {
                for h in &actions {
                    let s = comonad_morphism_component(&b, &c, &g, h);
                    ensure(s.factorization.passed, || {
                        format!("{bn}, {cn}: {:?}", s.factorization)
                    })?;
                    checks += 1;
                }
            }
        }
    }
    Ok(format!("{checks} module components factor exactly"))
}

/// Join tables of every complete lattice on `n` labelled points, by brute force over relations.
fn lattice_oracle(n: usize) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    for rel in 0u32..1 << (n * n) {
        let le = |a: usize, b: usize| rel >> (a * n + b) & 1 == 1;
        let order = (0..n).all(|a| le(a, a))
            && (0..n).all(|a| (0..n).all(|b| a == b || !(le(a, b) && le(b, a))))
            && (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !(le(a, b) && le(b, c)) || le(a, c))));
        if !order {
            continue;
        }
        let lub = |mask: usize| {
            let ub: Vec<usize> = (0..n)
                .filter(|&u| (0..n).all(|x| mask >> x & 1 == 0 || le(x, u)))
                .collect();
            ub.iter().copied().find(|&u| ub.iter().all(|&v| le(u, v)))
        };
        if let Some(t) = (0..1usize << n).map(lub).collect::<Option<Vec<_>>>() {
            out.insert(t);
        }
    }
    out
}

fn criterion_6() -> Verdict {
    let s = powerset_suite(3);
    ensure(s.plus_is_nonempty_subsets(), || {
        "P⁺ is not the nonempty subsets".into()
    })?;
    for n in 0..=3 {
        let found: BTreeSet<Vec<usize>> = enumerate_algebras(&FinSet, &PowersetMonad, &n)
            .into_iter()
            .map(|h| h.table)
            .collect();
        ensure(found == lattice_oracle(n), || {
            format!("algebras on {n} differ from the oracle")
        })?;
    }
    let chain = omega_report(&CompleteSemilattice::chain(2));
    ensure(!chain.bijective && chain.missed == vec![(1, 0)], || {
        format!("ω at the 2-chain misses {:?}", chain.missed)
    })?;
    ensure(s.coreflection_holds(), || "r∘ī ≇ id on some algebra".into())?;
    let v = s.verdict();
    ensure(v == "1_1 not Galois for P, Galois for P+", || {
        format!("verdict {v:?}")
    })?;
    let counts: Vec<usize> = s.algebras.iter().map(|a| a.count).collect();
    Ok(format!("algebra counts {counts:?}, ω misses (1,0), {v}"))
}

fn both_directions(name: &str, tp: &TerminalPreservation, expected: bool) -> Result<(), String> {
    let all_iso = tp.inclusion_iso.iter().all(|(_, b)| *b);
    ensure(tp.t1_terminal == expected, || {
        format!("{name}: T(1) terminal is {}", tp.t1_terminal)
    })?;
    ensure(!tp.t1_terminal || all_iso, || {
        format!("{name}: T(1)≅1 but some i_x not iso")
    })?;
    ensure(!all_iso || tp.t1_terminal, || {
        format!("{name}: every i_x iso but T(1)≇1")
    })?;
    ensure(tp.biconditional_holds, || format!("{name}: biconditional"))
}

fn criterion_7() -> Verdict {
    let s = powerset_suite(3);
    let expected = [
        ("identity", true),
        ("powerset", false),
        ("proper powerset", true),
    ];
    for (name, want) in expected {
        let tp = s
            .terminal_preservation
            .iter()
            .find(|(n, _)| n == name)
            .ok_or_else(|| format!("{name} missing"))?;
        both_directions(name, &tp.1, want)?;
    }
    let e = exponential_suite(FinPoset::chain(2), 0b01, 2)?;
    both_directions("T_u", &e.terminal_preservation, true)?;
    Ok("identity ⇔, P ⇔ (both false), P⁺ ⇔, T_u ⇔".into())
}

fn criterion_8() -> Verdict {
    let s = exponential_suite(FinPoset::chain(2), 0b01, 2)?;
    ensure(s.u.sizes == vec![1, 0], || format!("u = {:?}", s.u))?;
    ensure(
        s.monad_laws.all_pass() && s.functoriality.all_pass(),
        || "monad laws".into(),
    )?;
    ensure(s.idempotent, || "some m_x is not iso".into())?;
    ensure(s.one_power_terminal, || "T_u(1) ≇ 1".into())?;
    ensure(s.right_prehopf, || "some ⟨h, T(!)⟩ is not bijective".into())?;
    let w = &s.witness;
    ensure(w.found && w.hom_a_b == 0 && w.hom_a_tb >= 1, || {
        w.message.clone()
    })?;
    Ok(format!(
        "{} presheaves, {} algebras, |Hom(1,u)|={} ≠ |Hom(1,T_u u)|={}",
        s.inventory_size, s.algebras_tested, w.hom_a_b, w.hom_a_tb
    ))
}

/// Every command on every bundled input it accepts, in machine format.
fn full_suite_jobs() -> Vec<(String, String)> {
    let mut jobs = Vec::new();
    for name in corpus::names() {
        let commands: &[&str] = match corpus::load(&name) {
            Some(CorpusEntry::Bialgebra(_)) => &[
                "validate", "hopf", "antipode", "fusion", "entwine", "hopfmod", "galois",
            ],
            Some(CorpusEntry::Comonoid(_)) => &["validate"],
            Some(CorpusEntry::Monad(_)) => &["finset", "galois"],
            None => unreachable!("listed names load"),
        };
        for c in commands {
            jobs.push((c.to_string(), name.clone()));
        }
    }
    jobs
}

fn run_suite(jobs: &[(String, String)]) -> Result<Vec<Vec<u8>>, String> {
    let workers = std::thread::available_parallelism()
        .map_or(4, |n| n.get())
        .min(8);
    let chunk = jobs.len().div_ceil(workers);
    std::thread::scope(|scope| {
        let handles: Vec<_> = jobs
            .chunks(chunk)
            .map(|part| {
                scope.spawn(move || {
                    part.iter()
                        .map(|(cmd, input)| {
                            let out = Process::new(env!("CARGO_BIN_EXE_hopfkit"))
                                .args([cmd.as_str(), input.as_str(), "--format", "machine"])
                                .output()
                                .map_err(|e| e.to_string())?;
                            match out.status.code() {
                                Some(0 | 1) => Ok(out.stdout),
                                c => Err(format!("{cmd} {input}: exit {c:?}")),
                            }
                        })
                        .collect::<Result<Vec<_>, String>>()
                })
            })
            .collect();
        let mut all = Vec::new();
        for h in handles {
            all.extend(h.join().expect("worker panicked")?);
        }
        Ok(all)
    })
}

fn criterion_9() -> Verdict {
    let jobs = full_suite_jobs();
    let first = run_suite(&jobs)?;
    let second = run_suite(&jobs)?;
    for ((a, b), (cmd, input)) in first.iter().zip(&second).zip(&jobs) {
        ensure(a == b, || {
            format!("{cmd} {input}: reports differ between runs")
        })?;
        ensure(!a.is_empty(), || format!("{cmd} {input}: empty report"))?;
    }
    let bytes: usize = first.iter().map(Vec::len).sum();
    Ok(format!(
        "{} reports, {bytes} bytes, identical across two runs",
        jobs.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (1, criterion_1, Some(10)),
        (2, criterion_2, None),
        (3, criterion_3, Some(30)),
        (4, criterion_4, None),
        (5, criterion_5, None),
        (6, criterion_6, Some(10)),
        (7, criterion_7, None),
        (8, criterion_8, Some(30)),
        (9, criterion_9, None),
    ];
    let mut failed = 0;
    for (n, check, limit) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let over = limit.is_some_and(|s| elapsed > Duration::from_secs(s));
        let bound = limit.map_or("unbounded".to_string(), |s| format!("< {s} s"));
        let timing = format!(
            "{:.2} s, bound {bound}, tolerance exact",
            elapsed.as_secs_f64()
        );
        match result {
            Ok(detail) if !over => println!("criterion {n}: PASS {detail} ({timing})"),
            Ok(detail) => {
                failed += 1;
                println!("criterion {n}: FAIL over time limit: {detail} ({timing})");
            }
            Err(why) => {
                failed += 1;
                println!("criterion {n}: FAIL {why} ({timing})");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
