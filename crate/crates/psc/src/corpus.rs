//! Corpus runs: every analysed group, every prime divisor, every selected
//! claim, aggregated into one [`Report`] in a fixed order.

use std::time::Instant;

use psc_core::verify::{Analysis, Claim, GroupAnalysis, Status, Verdict};
use psc_core::{Group, Limits};
use rayon::prelude::*;

use crate::format::{GroupEntry, GroupFile, Tag};
use crate::report::{InstanceError, Report};

/// The corpus shipped with the binary.
pub const DEFAULT_CORPUS: &str = include_str!("../corpus/default.corpus");

#[derive(Clone, Debug)]
pub struct CorpusOptions {
    pub claims: Vec<Claim>,
    pub jobs: usize,
    pub stretch: bool,
    pub limits: Limits,
    pub timing: bool,
}

impl Default for CorpusOptions {
    fn default() -> Self {
        CorpusOptions { claims: Claim::ALL.to_vec(), jobs: 1, stretch: false, limits: Limits::default(), timing: true }
    }
}

impl CorpusOptions {
    /// The resolved configuration as `key=value` pairs.
    pub fn config(&self) -> Vec<(String, String)> {
        let claims: Vec<&str> = self.claims.iter().map(|c| c.name()).collect();
        vec![
            ("claims".into(), claims.join(",")),
            ("jobs".into(), self.jobs.to_string()),
            ("stretch".into(), yes_no(self.stretch).into()),
            ("timing".into(), yes_no(self.timing).into()),
        ]
        .into_iter()
        .chain(limits_config(&self.limits))
        .collect()
    }
}

pub(crate) fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn limits_config(l: &Limits) -> Vec<(String, String)> {
    vec![
        ("max_order".into(), l.materialize.to_string()),
        ("max_cells".into(), l.materialize_cells.to_string()),
        ("max_sylow".into(), l.sylow_enumeration.to_string()),
        ("max_lattice".into(), l.subgroup_lattice.to_string()),
    ]
}

enum Outcome {
    Verdict(Verdict),
    Error(InstanceError),
}

enum Task<'a> {
    Prime { entry: &'a GroupEntry, group: &'a Group, prime: u64 },
    GroupLevel { entry: &'a GroupEntry, group: &'a Group },
}

/// Whether a corpus run analyses this entry.
pub fn selected(entry: &GroupEntry, stretch: bool) -> bool {
    !entry.has(Tag::Helper) && (stretch || !entry.has(Tag::Stretch))
}

pub fn run_corpus(file: &GroupFile, opts: &CorpusOptions) -> Report {
    let start = Instant::now();
    let built = file.build_selected(opts.limits, |e| selected(e, opts.stretch));
    let mut report = Report { config: opts.config(), ..Report::default() };
    let per_prime: Vec<Claim> = opts.claims.iter().copied().filter(|c| !c.is_group_level()).collect();
    let group_level: Vec<Claim> = opts.claims.iter().copied().filter(|c| c.is_group_level()).collect();

    // Slots keep build failures in file order alongside task results.
    let mut slots: Vec<Result<Task<'_>, Vec<Outcome>>> = Vec::new();
    for (entry, group) in file.entries.iter().zip(&built) {
        let Some(group) = group.as_ref().filter(|_| selected(entry, opts.stretch)) else {
            continue;
        };
        let name = &entry.spec.name;
        match group {
            Ok(group) => {
                if !per_prime.is_empty() {
                    for prime in group.prime_divisors() {
                        slots.push(Ok(Task::Prime { entry, group, prime }));
                    }
                }
                if !group_level.is_empty() && !group.is_solvable() {
                    slots.push(Ok(Task::GroupLevel { entry, group }));
                }
            }
            Err(e) if e.is_capacity() => {
                let skipped = opts
                    .claims
                    .iter()
                    .map(|c| {
                        Outcome::Verdict(Verdict {
                            claim: c.name().into(),
                            group: name.clone(),
                            prime: None,
                            status: Status::SkippedCapacity,
                            data: vec![("reason".into(), e.to_string())],
                            wall_time: None,
                        })
                    })
                    .collect();
                slots.push(Err(skipped));
            }
            Err(e) => slots.push(Err(vec![Outcome::Error(InstanceError {
                group: name.clone(),
                prime: None,
                claim: None,
                message: e.to_string(),
            })])),
        }
    }

    let run = |slot: &Result<Task<'_>, Vec<Outcome>>| -> Vec<Outcome> {
        match slot {
            Err(_) => Vec::new(),
            Ok(Task::Prime { entry, group, prime }) => run_prime(entry, group, *prime, &per_prime),
            Ok(Task::GroupLevel { entry, group }) => run_group_level(entry, group, &group_level),
        }
    };
    let results: Vec<Vec<Outcome>> = match rayon::ThreadPoolBuilder::new().num_threads(opts.jobs.max(1)).build() {
        Ok(pool) => pool.install(|| slots.par_iter().map(run).collect()),
        Err(_) => slots.iter().map(run).collect(),
    };

    for (slot, outcomes) in slots.into_iter().zip(results) {
        let outcomes = match slot {
            Err(fixed) => fixed,
            Ok(_) => outcomes,
        };
        for o in outcomes {
            match o {
                Outcome::Verdict(v) => report.verdicts.push(v),
                Outcome::Error(e) => report.errors.push(e),
            }
        }
    }
    report.total = Some(start.elapsed());
    report
}

fn timed(f: impl FnOnce() -> psc_core::Result<Verdict>) -> psc_core::Result<Verdict> {
    let t = Instant::now();
    let mut v = f()?;
    v.wall_time = Some(t.elapsed());
    Ok(v)
}

fn run_prime(entry: &GroupEntry, group: &Group, prime: u64, claims: &[Claim]) -> Vec<Outcome> {
    let name = &entry.spec.name;
    let error = |claim: Option<Claim>, e: psc_core::Error| {
        Outcome::Error(InstanceError {
            group: name.clone(),
            prime: Some(prime),
            claim: claim.map(|c| c.name().into()),
            message: e.to_string(),
        })
    };
    let analysis = match Analysis::new(group, name, prime) {
        Ok(a) => a,
        Err(e) => return vec![error(None, e)],
    };
    let mut out = Vec::new();
    for &claim in claims {
        match timed(|| analysis.run(claim)) {
            Ok(v) if claim == Claim::NormalStab && v.get("applicable") == Some("no") => {}
            Ok(v) => out.push(Outcome::Verdict(v)),
            Err(e) => out.push(error(Some(claim), e)),
        }
    }
    out
}

fn run_group_level(entry: &GroupEntry, group: &Group, claims: &[Claim]) -> Vec<Outcome> {
    let name = &entry.spec.name;
    let analysis = GroupAnalysis::new(group, name);
    claims
        .iter()
        .map(|&claim| match timed(|| analysis.run(claim, entry.has(Tag::OsIndexOne))) {
            Ok(v) => Outcome::Verdict(v),
            Err(e) => Outcome::Error(InstanceError {
                group: name.clone(),
                prime: None,
                claim: Some(claim.name().into()),
                message: e.to_string(),
            }),
        })
        .collect()
}
