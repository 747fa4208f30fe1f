//! Bundled example inputs, addressable by name.

use serde::{Deserialize, Serialize};

use crate::bialgebra::{Bialgebra, Comonoid, StructureFile};
use crate::exactlin::Field;
use crate::finset::FinPoset;

pub const FIELDS: [Field; 3] = [Field::Rational, Field::Prime(2), Field::Prime(3)];

/// A finite group or monoid given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidTable {
    pub name: &'static str,
    pub table: Vec<Vec<usize>>,
    pub labels: Vec<String>,
    pub is_group: bool,
}

fn cyclic(name: &'static str, n: usize) -> MonoidTable {
    MonoidTable {
        name,
        table: (0..n)
            .map(|i| (0..n).map(|j| (i + j) % n).collect())
            .collect(),
        labels: (0..n).map(|i| i.to_string()).collect(),
        is_group: true,
    }
}

fn klein() -> MonoidTable {
    MonoidTable {
        name: "Z2xZ2",
        table: (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect(),
        labels: ["(0,0)", "(0,1)", "(1,0)", "(1,1)"]
            .map(String::from)
            .to_vec(),
        is_group: true,
    }
}

/// Permutations of `{0,1,2}` in lexicographic order, multiplied by composition `(στ)(i) = σ(τ(i))`.
fn symmetric3() -> MonoidTable {
    let perms: Vec<[usize; 3]> = vec![
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let index = |p: [usize; 3]| perms.iter().position(|&q| q == p).expect("closed");
    let table = perms
        .iter()
        .map(|s| {
            perms
                .iter()
                .map(|t| index([s[t[0]], s[t[1]], s[t[2]]]))
                .collect()
        })
        .collect();
    MonoidTable {
        name: "S3",
        table,
        labels: perms
            .iter()
            .map(|p| format!("{}{}{}", p[0], p[1], p[2]))
            .collect(),
        is_group: true,
    }
}

/// Every group of order at most 6, up to isomorphism.
pub fn groups() -> Vec<MonoidTable> {
    vec![
        cyclic("Z1", 1),
        cyclic("Z2", 2),
        cyclic("Z3", 3),
        cyclic("Z4", 4),
        klein(),
        cyclic("Z5", 5),
        cyclic("Z6", 6),
        symmetric3(),
    ]
}

/// The nontrivial commutative idempotent monoids of order at most 3: `{1, z}` with `z² = z`,
/// and the chain `{1, a, 0}` with `a² = a` and `0` absorbing.
pub fn idempotent_monoids() -> Vec<MonoidTable> {
    vec![
        MonoidTable {
            name: "idem",
            table: vec![vec![0, 1], vec![1, 1]],
            labels: vec!["1".into(), "z".into()],
            is_group: false,
        },
        MonoidTable {
            name: "idem3",
            table: vec![vec![0, 1, 2], vec![1, 1, 2], vec![2, 2, 2]],
            labels: vec!["1".into(), "a".into(), "0".into()],
            is_group: false,
        },
    ]
}

/// Monads on cartesian categories, as they appear in input files.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "monad", rename_all = "snake_case", deny_unknown_fields)]
pub enum MonadFile {
    Identity,
    Powerset,
    /// `(−)^u` on presheaves over the poset `leq`, with `u` supported on the down-closed set `support`.
    Exponential {
        leq: Vec<Vec<bool>>,
        support: Vec<usize>,
    },
}

impl MonadFile {
    /// Poset and support bitmask of an exponential monad.
    pub fn exponential_parts(&self) -> Option<Result<(FinPoset, usize), String>> {
        match self {
            MonadFile::Exponential { leq, support } => Some((|| {
                let poset = FinPoset::new(leq.clone())?;
                let mut mask = 0usize;
                for &p in support {
                    if p >= poset.size {
                        return Err(format!("support element {p} is outside the poset"));
                    }
                    mask |= 1 << p;
                }
                if !poset.downsets().contains(&mask) {
                    return Err("support is not down-closed".into());
                }
                Ok((poset, mask))
            })()),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub enum CorpusEntry {
    Bialgebra(Bialgebra),
    Comonoid(Comonoid),
    Monad(MonadFile),
}

impl CorpusEntry {
    /// The on-disk form, as pretty JSON.
    pub fn to_json(&self) -> String {
        let text = match self {
            CorpusEntry::Bialgebra(b) => serde_json::to_string_pretty(&b.to_file()),
            CorpusEntry::Comonoid(c) => serde_json::to_string_pretty(&c.to_file()),
            CorpusEntry::Monad(m) => serde_json::to_string_pretty(m),
        };
        text.expect("corpus entries serialize")
    }
}

/// Reads an input document: a monad description if it has a `monad` key, otherwise a
/// structure-constant file holding a bialgebra (with `mult`) or a comonoid.
pub fn parse_input(text: &str) -> Result<CorpusEntry, String> {
    let value: serde_json::Value = serde_json::from_str(text)
        .map_err(|e| format!("line {}, column {}: {e}", e.line(), e.column()))?;
    if value.get("monad").is_some() {
        let m: MonadFile = serde_json::from_value(value).map_err(|e| format!("monad: {e}"))?;
        if let Some(Err(e)) = m.exponential_parts() {
            return Err(format!("monad: {e}"));
        }
        return Ok(CorpusEntry::Monad(m));
    }
    let file: StructureFile = serde_json::from_value(value).map_err(|e| e.to_string())?;
    if file.mult.is_some() || file.unit.is_some() {
        file.to_bialgebra()
            .map(CorpusEntry::Bialgebra)
            .map_err(|e| e.to_string())
    } else {
        file.to_comonoid()
            .map(CorpusEntry::Comonoid)
            .map_err(|e| e.to_string())
    }
}

/// Bundled bialgebras in listing order.
pub fn bialgebras() -> Vec<(String, Bialgebra)> {
    let mut out = Vec::new();
    for g in groups() {
        for f in FIELDS {
            out.push((
                format!("group_{}_{}", g.name, f.short_name()),
                monoid_bialgebra(&g, f),
            ));
        }
    }
    for m in idempotent_monoids() {
        for f in FIELDS {
            out.push((
                format!("monoid_{}_{}", m.name, f.short_name()),
                monoid_bialgebra(&m, f),
            ));
        }
    }
    out.push(("trivial_Q".into(), Bialgebra::trivial(Field::Rational)));
    out
}

pub fn monoid_bialgebra(m: &MonoidTable, f: Field) -> Bialgebra {
    Bialgebra::monoid_algebra(f, &m.table, Some(m.labels.clone()))
        .expect("bundled tables are monoids")
}

/// Bundled comonoids in listing order.
pub fn comonoids() -> Vec<(String, Comonoid)> {
    let mut out = Vec::new();
    for f in FIELDS {
        let s = f.short_name();
        out.push((format!("comonoid_I_{s}"), Comonoid::unit_object(f)));
        out.push((format!("comonoid_set2_{s}"), Comonoid::set_like(f, 2)));
        out.push((format!("comonoid_set3_{s}"), Comonoid::set_like(f, 3)));
        out.push((format!("comonoid_dp2_{s}"), Comonoid::divided_power(f, 2)));
    }
    out
}

/// Bundled monad descriptions.
pub fn monads() -> Vec<(String, MonadFile)> {
    let two = FinPoset::chain(2).leq;
    vec![
        ("identity".into(), MonadFile::Identity),
        ("powerset".into(), MonadFile::Powerset),
        (
            "presheaf_01".into(),
            MonadFile::Exponential {
                leq: two.clone(),
                support: vec![0],
            },
        ),
        (
            "presheaf_01_empty".into(),
            MonadFile::Exponential {
                leq: two.clone(),
                support: vec![],
            },
        ),
        (
            "presheaf_01_full".into(),
            MonadFile::Exponential {
                leq: two,
                support: vec![0, 1],
            },
        ),
    ]
}

/// Every bundled name.
pub fn names() -> Vec<String> {
    bialgebras()
        .into_iter()
        .map(|(n, _)| n)
        .chain(comonoids().into_iter().map(|(n, _)| n))
        .chain(monads().into_iter().map(|(n, _)| n))
        .collect()
}

pub fn load(name: &str) -> Option<CorpusEntry> {
    if let Some((_, b)) = bialgebras().into_iter().find(|(n, _)| n == name) {
        return Some(CorpusEntry::Bialgebra(b));
    }
    if let Some((_, c)) = comonoids().into_iter().find(|(n, _)| n == name) {
        return Some(CorpusEntry::Comonoid(c));
    }
    monads()
        .into_iter()
        .find(|(n, _)| n == name)
        .map(|(_, m)| CorpusEntry::Monad(m))
}
