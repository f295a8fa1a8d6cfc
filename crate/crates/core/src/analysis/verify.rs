//! Property sweeps over many permutations, with a line-oriented report.
//!
//! Report schema (tab separated, one record per input):
//!
//! ```text
//! # ctxsort verify property=<name> n=<n> mode=<exhaustive|samples> [seed=<s>] inputs=<count>
//! perm=[..]\tproperty=<name>\tresult=<PASS|FAIL|SKIP|UNDECIDED>\t<key>=<value>...
//! # summary pass=<a> fail=<b> skip=<c> undecided=<d> verdict=<PASS|FAIL>
//! ```

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::analysis::search::cds_sortable_greedy;
use crate::analysis::space::StateSpace;
use crate::analysis::theorems::rescue_in;
use crate::error::{Error, Result};
use crate::graph::build_overlap_graph;
use crate::ops;
use crate::perm::SignedPermutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Property {
    Parity,
    Rescue,
    Steps,
    SameLength,
    Commutation,
    CdsSameLength,
}

impl Property {
    pub const ALL: [Property; 6] = [
        Property::Parity,
        Property::Rescue,
        Property::Steps,
        Property::SameLength,
        Property::Commutation,
        Property::CdsSameLength,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Parity => "parity",
            Property::Rescue => "rescue",
            Property::Steps => "steps",
            Property::SameLength => "same-length",
            Property::Commutation => "commutation",
            Property::CdsSameLength => "cds-same-length",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown property '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sweep {
    Exhaustive,
    Samples { count: usize, seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    /// The property does not apply to this input (e.g. not cdr sortable).
    Skip,
    /// The state-space budget ran out.
    Undecided,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "PASS",
            Outcome::Fail => "FAIL",
            Outcome::Skip => "SKIP",
            Outcome::Undecided => "UNDECIDED",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Record {
    pub perm: SignedPermutation,
    pub property: Property,
    pub outcome: Outcome,
    pub counters: Vec<(&'static str, String)>,
}

impl Record {
    fn new(perm: &SignedPermutation, property: Property, outcome: Outcome) -> Self {
        Record {
            perm: perm.clone(),
            property,
            outcome,
            counters: Vec::new(),
        }
    }

    fn with(mut self, key: &'static str, value: impl ToString) -> Self {
        self.counters.push((key, value.to_string()));
        self
    }

    pub fn counter(&self, key: &str) -> Option<&str> {
        self.counters
            .iter()
            .find(|(k, _)| *k == key)
            .map(|(_, v)| v.as_str())
    }
}

impl fmt::Display for Record {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "perm={}\tproperty={}\tresult={}",
            self.perm, self.property, self.outcome
        )?;
        for (k, v) in &self.counters {
            write!(f, "\t{k}={v}")?;
        }
        Ok(())
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    if parts.is_empty() {
        "-".to_string()
    } else {
        parts.join(",")
    }
}

/// Checks one property on one permutation.
pub fn check(property: Property, perm: &SignedPermutation, budget: usize) -> Record {
    match property {
        Property::Commutation => return check_commutation(perm),
        Property::CdsSameLength => return check_cds_same_length(perm, budget),
        _ => {}
    }
    let space = StateSpace::cdr(perm, budget);
    if !space.is_complete() {
        return Record::new(perm, property, Outcome::Undecided).with("states", space.len());
    }
    match property {
        Property::Parity => {
            let counts = space.maximal_length_counts();
            let mut parities = counts.keys().map(|l| l % 2);
            let first = parities.next();
            let ok = parities.all(|x| Some(x) == first);
            let total = counts.values().fold(0u128, |a, &c| a.saturating_add(c));
            Record::new(perm, property, pass_if(ok))
                .with("lengths", join(counts.keys()))
                .with("sequences", total)
        }
        Property::SameLength => {
            let lengths = space.lengths_to(SignedPermutation::is_identity);
            if lengths.is_empty() {
                return Record::new(perm, property, Outcome::Skip).with("reason", "unsortable");
            }
            Record::new(perm, property, pass_if(lengths.len() == 1)).with("lengths", join(&lengths))
        }
        Property::Rescue => {
            if space.lengths_to(SignedPermutation::is_identity).is_empty() {
                return Record::new(perm, property, Outcome::Skip).with("reason", "unsortable");
            }
            let report = match rescue_in(&space) {
                Ok(r) => r,
                Err(e) => return Record::new(perm, property, Outcome::Fail).with("error", e),
            };
            let rescued = report.fixed_points.iter().filter(|e| e.rescued).count();
            let positive = report
                .fixed_points
                .iter()
                .filter(|e| e.fixed_point.entries().iter().all(|&v| v > 0))
                .count();
            let total = report.fixed_points.len();
            let reverse = (0..space.len()).any(|s| space.state(s).is_reverse_identity());
            Record::new(
                perm,
                property,
                pass_if(rescued == total && positive == total),
            )
            .with("fixed_points", total)
            .with("rescued", rescued)
            .with("positive", positive)
            .with("reverse_reachable", reverse)
        }
        Property::Steps => {
            let lengths = space.lengths_to(SignedPermutation::is_identity);
            let sorting = match lengths.len() {
                0 => {
                    return Record::new(perm, property, Outcome::Skip).with("reason", "unsortable")
                }
                1 => *lengths.first().unwrap(),
                _ => {
                    return Record::new(perm, property, Outcome::Fail)
                        .with("sorting_lengths", join(&lengths))
                }
            };
            let mut runs = 0usize;
            let mut bad = 0usize;
            let depths = space.terminal_depths();
            for (id, ks) in &depths {
                let run = cds_sortable_greedy(space.state(*id));
                for &k in ks {
                    runs += 1;
                    if !run.sorted() || k + 2 * run.steps() != sorting {
                        bad += 1;
                    }
                }
            }
            Record::new(perm, property, pass_if(bad == 0))
                .with("sorting_length", sorting)
                .with("fixed_points", depths.len())
                .with("runs", runs)
                .with("violations", bad)
        }
        Property::Commutation | Property::CdsSameLength => unreachable!(),
    }
}

fn pass_if(ok: bool) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail
    }
}

fn check_commutation(perm: &SignedPermutation) -> Record {
    let graph = build_overlap_graph(perm);
    let moves = ops::applicable_cdr_moves(perm);
    let mut bad = Vec::new();
    for m in &moves {
        let after = ops::apply_cdr(perm, *m).expect("enumerated move applies");
        let ok = matches!(graph.gcdr(m.pointer.0), Ok(g) if g == build_overlap_graph(&after));
        if !ok {
            bad.push(m.pointer);
        }
    }
    let rec = Record::new(perm, Property::Commutation, pass_if(bad.is_empty()))
        .with("pointers", moves.len());
    if bad.is_empty() {
        rec
    } else {
        rec.with("mismatch", join(bad.iter().map(|p| p.0)))
    }
}

fn check_cds_same_length(perm: &SignedPermutation, budget: usize) -> Record {
    let space = StateSpace::cds(perm, budget);
    if !space.is_complete() {
        return Record::new(perm, Property::CdsSameLength, Outcome::Undecided)
            .with("states", space.len());
    }
    let counts = space.maximal_length_counts();
    Record::new(perm, Property::CdsSameLength, pass_if(counts.len() == 1))
        .with("lengths", join(counts.keys()))
        .with("states", space.len())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub property: Property,
    pub n: usize,
    pub sweep: Sweep,
    pub budget: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub config: VerifyConfig,
    pub records: Vec<Record>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
    pub undecided: usize,
}

impl Report {
    pub fn tally(&self) -> Tally {
        let mut t = Tally::default();
        for r in &self.records {
            match r.outcome {
                Outcome::Pass => t.pass += 1,
                Outcome::Fail => t.fail += 1,
                Outcome::Skip => t.skip += 1,
                Outcome::Undecided => t.undecided += 1,
            }
        }
        t
    }

    /// No failures and nothing left undecided.
    pub fn passed(&self) -> bool {
        let t = self.tally();
        t.fail == 0 && t.undecided == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| r.outcome == Outcome::Fail)
    }

    pub fn header(&self) -> String {
        let c = &self.config;
        let mode = match c.sweep {
            Sweep::Exhaustive => "mode=exhaustive".to_string(),
            Sweep::Samples { seed, .. } => format!("mode=samples seed={seed}"),
        };
        format!(
            "# ctxsort verify property={} n={} {mode} inputs={}",
            c.property,
            c.n,
            self.records.len()
        )
    }

    pub fn summary(&self) -> String {
        let t = self.tally();
        format!(
            "# summary pass={} fail={} skip={} undecided={} verdict={}",
            t.pass,
            t.fail,
            t.skip,
            t.undecided,
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }

    /// The full report; with `failures_only`, records other than FAIL and
    /// UNDECIDED are left out.
    pub fn to_text(&self, failures_only: bool) -> String {
        let mut out = self.header();
        out.push('\n');
        for r in &self.records {
            if failures_only && matches!(r.outcome, Outcome::Pass | Outcome::Skip) {
                continue;
            }
            out.push_str(&r.to_string());
            out.push('\n');
        }
        out.push_str(&self.summary());
        out.push('\n');
        out
    }
}

/// The inputs of a sweep, in canonical order.
pub fn sweep_inputs(n: usize, sweep: Sweep) -> Vec<SignedPermutation> {
    match sweep {
        Sweep::Exhaustive => SignedPermutation::all(n).collect(),
        Sweep::Samples { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..count)
                .map(|_| SignedPermutation::random(n, &mut rng))
                .collect()
        }
    }
}

/// Checks `config.property` on every input in parallel; records keep input order.
pub fn run(config: VerifyConfig) -> Result<Report> {
    if config.n == 0 {
        return Err(Error::EmptyInput);
    }
    let inputs = sweep_inputs(config.n, config.sweep);
    Ok(run_on(config, &inputs))
}

pub fn run_on(config: VerifyConfig, inputs: &[SignedPermutation]) -> Report {
    let records = inputs
        .par_iter()
        .map(|p| check(config.property, p, config.budget))
        .collect();
    Report { config, records }
}
