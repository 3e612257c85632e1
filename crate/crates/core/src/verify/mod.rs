//! The identity registry and the exact verification harness.
//!
//! Each identity pairs two recipes. Symbolic identities are compared as
//! canonical rational functions of `w`, coefficient by coefficient. Sampled
//! identities first draw their extra parameters from a fixed pool of small
//! rationals, seeded per identity so that runs are reproducible and
//! independent of evaluation order.

mod registry;

use std::collections::BTreeMap;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{rat, Rational};
use crate::error::{QError, Result};
use crate::hyperterm::WValue;
use crate::special::{standard_catalog, Catalog, Recipe};

pub use registry::registry;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Mode {
    #[serde(rename = "symbolic-w")]
    Symbolic,
    #[serde(rename = "sampled")]
    Sampled,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Symbolic => "symbolic-w",
            Mode::Sampled => "sampled",
        }
    }
}

/// Builds both sides from the sampled extra parameters (empty when
/// symbolic).
pub type Builder = fn(&[Rational]) -> (Recipe, Recipe);

#[derive(Clone)]
pub struct Identity {
    pub id: &'static str,
    pub anchor: &'static str,
    pub mode: Mode,
    pub extra_params: &'static [&'static str],
    pub build: Builder,
}

impl Identity {
    pub fn sides(&self, params: &[Rational]) -> (Recipe, Recipe) {
        (self.build)(params)
    }

    /// Catalog names used by either side (at the sample point 2 for
    /// sampled identities; the structure does not depend on it).
    pub fn references(&self) -> Vec<String> {
        let params = vec![rat(2, 3); self.extra_params.len()];
        let (l, r) = self.sides(&params);
        let mut out = Vec::new();
        l.references(&mut out);
        r.references(&mut out);
        out.sort();
        out.dedup();
        out
    }

    /// Whether either side reaches catalog entry `name`.
    pub fn touches(&self, catalog: &Catalog, name: &str) -> bool {
        let deps = catalog.dependents(name);
        self.references().iter().any(|r| deps.contains(r))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub q_power: i64,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub id: String,
    pub mode: Mode,
    pub order: i64,
    pub seed: u64,
    pub samples: Vec<BTreeMap<String, String>>,
    pub status: Status,
    pub mismatch: Option<Mismatch>,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl Report {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }

    /// One-line text rendering.
    pub fn line(&self) -> String {
        let mut s = format!("{:<16} {:<5} order {}", self.id, status_word(self.status), self.order);
        if !self.samples.is_empty() {
            s.push_str(&format!(", {} samples", self.samples.len()));
        }
        if let Some(m) = &self.mismatch {
            s.push_str(&format!(": q^{} lhs {} rhs {}", m.q_power, m.lhs, m.rhs));
        }
        if let Some(e) = &self.error {
            s.push_str(&format!(": {e}"));
        }
        s
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
        Status::Error => "ERROR",
    }
}

/// `(id, anchor, mode)` for every registered identity, in registry order.
pub fn list_identities() -> Vec<(&'static str, &'static str, Mode)> {
    registry().iter().map(|i| (i.id, i.anchor, i.mode)).collect()
}

pub fn find(id: &str) -> Result<Identity> {
    registry()
        .into_iter()
        .find(|i| i.id == id)
        .ok_or_else(|| QError::UnknownName(id.to_string()))
}

/// Parameter pool for sampled identities; avoids 0 and -1..1 endpoints.
pub fn sample_pool() -> Vec<Rational> {
    let base = [(1, 3), (2, 5), (3, 2), (2, 3), (5, 2), (3, 4), (4, 3), (5, 3)];
    base.iter().flat_map(|&(n, d)| [rat(n, d), rat(-n, d)]).collect()
}

/// Draws attempted per sample before a parameter set is given up on.
const MAX_DRAWS: usize = 64;

fn id_hash(id: &str) -> u64 {
    // FNV-1a keeps per-identity streams stable across platforms.
    id.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

fn excluded_point(e: &QError) -> bool {
    matches!(e, QError::Pole { .. } | QError::DivisionByZero | QError::DegenerateFactor(_) | QError::NotInvertible(_))
}

enum Outcome {
    Agree,
    Differ(Mismatch),
}

fn compare(catalog: &Catalog, l: &Recipe, r: &Recipe, n: i64) -> Result<Outcome> {
    let ev = catalog.evaluator();
    let a = ev.eval(l, n, &WValue::Symbolic)?;
    let b = ev.eval(r, n, &WValue::Symbolic)?;
    for s in [&a, &b] {
        if s.order() < n {
            return Err(QError::BeyondTruncation { k: n, order: s.order() });
        }
    }
    Ok(match a.first_mismatch(&b, n)? {
        None => Outcome::Agree,
        Some((k, x, y)) => Outcome::Differ(Mismatch { q_power: k, lhs: x.to_string(), rhs: y.to_string() }),
    })
}

/// Verifies one identity against a given catalog.
pub fn verify_with(catalog: &Catalog, ident: &Identity, n: i64, samples: usize, seed: u64) -> Report {
    let start = Instant::now();
    let mut report = Report {
        id: ident.id.to_string(),
        mode: ident.mode,
        order: n,
        seed,
        samples: Vec::new(),
        status: Status::Pass,
        mismatch: None,
        elapsed_ms: 0,
        error: None,
    };
    let result = match ident.mode {
        Mode::Symbolic => {
            let (l, r) = ident.sides(&[]);
            compare(catalog, &l, &r, n).map(|o| vec![o])
        }
        Mode::Sampled => run_sampled(catalog, ident, n, samples, seed, &mut report.samples),
    };
    match result {
        Ok(outcomes) => {
            if let Some(m) = outcomes.into_iter().find_map(|o| match o {
                Outcome::Differ(m) => Some(m),
                Outcome::Agree => None,
            }) {
                report.status = Status::Fail;
                report.mismatch = Some(m);
            }
        }
        Err(e) => {
            report.status = Status::Error;
            report.error = Some(e.to_string());
        }
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    report
}

fn run_sampled(
    catalog: &Catalog,
    ident: &Identity,
    n: i64,
    samples: usize,
    seed: u64,
    used: &mut Vec<BTreeMap<String, String>>,
) -> Result<Vec<Outcome>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ id_hash(ident.id));
    let pool = sample_pool();
    let mut out = Vec::new();
    for _ in 0..samples {
        let mut last = None;
        let mut done = false;
        for _ in 0..MAX_DRAWS {
            let params: Vec<Rational> =
                ident.extra_params.iter().map(|_| pool.choose(&mut rng).expect("pool").clone()).collect();
            let (l, r) = ident.sides(&params);
            match compare(catalog, &l, &r, n) {
                Err(e) if excluded_point(&e) => last = Some(e),
                res => {
                    used.push(
                        ident.extra_params.iter().zip(&params).map(|(k, v)| (k.to_string(), v.to_string())).collect(),
                    );
                    out.push(res?);
                    done = true;
                    break;
                }
            }
        }
        if !done {
            return Err(last.unwrap_or_else(|| QError::InvalidTerm("no admissible sample".into())));
        }
    }
    Ok(out)
}

/// Verifies identity `id` against the built-in catalog.
pub fn verify_identity(id: &str, n: i64, samples: usize, seed: u64) -> Result<Report> {
    Ok(verify_with(standard_catalog(), &find(id)?, n, samples, seed))
}

/// Verifies every identity in `idents`, sequentially.
pub fn verify_list(catalog: &Catalog, idents: &[Identity], n: i64, samples: usize, seed: u64) -> Vec<Report> {
    idents.iter().map(|i| verify_with(catalog, i, n, samples, seed)).collect()
}

/// As [`verify_list`], evaluated concurrently; the output order is the
/// input order.
pub fn verify_list_parallel(catalog: &Catalog, idents: &[Identity], n: i64, samples: usize, seed: u64) -> Vec<Report> {
    idents.par_iter().map(|i| verify_with(catalog, i, n, samples, seed)).collect()
}

pub fn verify_all(n: i64, samples: usize, seed: u64) -> Vec<Report> {
    verify_list(standard_catalog(), &registry(), n, samples, seed)
}

pub fn verify_all_parallel(n: i64, samples: usize, seed: u64) -> Vec<Report> {
    verify_list_parallel(standard_catalog(), &registry(), n, samples, seed)
}
