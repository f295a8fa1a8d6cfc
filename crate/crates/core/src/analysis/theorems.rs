//! Executable checks of the fixed-point, rescue, steps and parity results.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::analysis::search::{
    cds_sortable_greedy, continue_cdr_run, indiscriminate_cdr_run, Selection,
};
use crate::analysis::space::StateSpace;
use crate::error::{Error, Result};
use crate::ops::{self, CdrMove, CdsMove, Move, SortTrace};
use crate::perm::{Pointer, SignedPermutation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPoints {
    /// Each reachable cdr fixed point with the numbers of cdr steps that reach it.
    pub points: Vec<(SignedPermutation, BTreeSet<usize>)>,
    pub complete: bool,
}

/// All cdr fixed points reachable from `perm`, ordered by fewest steps then
/// by permutation.
pub fn enumerate_cdr_fixed_points(perm: &SignedPermutation, budget: usize) -> FixedPoints {
    fixed_points_of(&StateSpace::cdr(perm, budget))
}

pub(crate) fn fixed_points_of(space: &StateSpace) -> FixedPoints {
    let mut points: Vec<_> = space
        .terminal_depths()
        .into_iter()
        .map(|(id, d)| (space.state(id).clone(), d))
        .collect();
    points.sort_by(|a, b| a.1.first().cmp(&b.1.first()).then_with(|| a.0.cmp(&b.0)));
    FixedPoints {
        points,
        complete: space.is_complete(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthMultiset {
    /// Number of maximal cdr sequences of each length (saturating).
    pub counts: BTreeMap<usize, u128>,
    pub complete: bool,
}

impl LengthMultiset {
    pub fn lengths(&self) -> Vec<usize> {
        self.counts.keys().copied().collect()
    }

    pub fn single_parity(&self) -> bool {
        let mut it = self.counts.keys().map(|l| l % 2);
        match it.next() {
            Some(first) => it.all(|x| x == first),
            None => true,
        }
    }
}

pub fn maximal_sequence_lengths(perm: &SignedPermutation, budget: usize) -> LengthMultiset {
    let space = StateSpace::cdr(perm, budget);
    LengthMultiset {
        counts: space.maximal_length_counts(),
        complete: space.is_complete(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: usize) -> Parity {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Parity of the length of one maximal cdr sequence (lowest pointer first).
pub fn parity(perm: &SignedPermutation) -> Parity {
    Parity::of(indiscriminate_cdr_run(perm, Selection::Lowest).0.len())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RescueEntry {
    pub fixed_point: SignedPermutation,
    pub cdr_steps: BTreeSet<usize>,
    pub cds_moves: Vec<CdsMove>,
    pub rescued: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RescueReport {
    pub input: SignedPermutation,
    pub fixed_points: Vec<RescueEntry>,
    pub complete: bool,
}

impl RescueReport {
    pub fn passed(&self) -> bool {
        self.complete && self.fixed_points.iter().all(|e| e.rescued)
    }
}

/// Runs greedy cds from every reachable cdr fixed point of a cdr-sortable
/// permutation.
pub fn verify_rescue(perm: &SignedPermutation, budget: usize) -> Result<RescueReport> {
    rescue_in(&StateSpace::cdr(perm, budget))
}

pub(crate) fn rescue_in(space: &StateSpace) -> Result<RescueReport> {
    let fp = fixed_points_of(space);
    if !fp.points.iter().any(|(p, _)| p.is_identity()) {
        if !fp.complete {
            return Err(Error::BudgetExceeded(space.len()));
        }
        return Err(Error::Precondition(format!(
            "{} is not cdr sortable",
            space.root()
        )));
    }
    let fixed_points = fp
        .points
        .into_iter()
        .map(|(fixed_point, cdr_steps)| {
            let run = cds_sortable_greedy(&fixed_point);
            RescueEntry {
                rescued: run.sorted(),
                cds_moves: run.moves,
                fixed_point,
                cdr_steps,
            }
        })
        .collect();
    Ok(RescueReport {
        input: space.root().clone(),
        fixed_points,
        complete: fp.complete,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepsReport {
    pub cdr_moves: Vec<Pointer>,
    pub fixed_point: SignedPermutation,
    pub cds_moves: Vec<CdsMove>,
    /// The unique length of a cdr sorting sequence.
    pub sorting_length: usize,
}

impl StepsReport {
    pub fn k(&self) -> usize {
        self.cdr_moves.len()
    }

    pub fn m(&self) -> usize {
        self.cds_moves.len()
    }

    pub fn total(&self) -> usize {
        self.k() + 2 * self.m()
    }

    /// The cdr run followed by the cds rescue, as a replayable trace.
    pub fn trace(&self, initial: &SignedPermutation) -> Result<SortTrace> {
        let mut t = SortTrace::new(initial.clone());
        for &p in &self.cdr_moves {
            t.apply(Move::Cdr(CdrMove { pointer: p }))?;
        }
        for &m in &self.cds_moves {
            t.apply(Move::Cds(m))?;
        }
        Ok(t)
    }
}

/// Indiscriminate cdr to a fixed point (`k` steps), then greedy cds to the
/// identity (`m` steps); checks `k + 2m` against the cdr sorting length.
pub fn cdr_steps(perm: &SignedPermutation, sel: Selection, budget: usize) -> Result<StepsReport> {
    cdr_steps_after(perm, &[], sel, budget)
}

/// As [`cdr_steps`], but the run starts with the given pointers.
pub fn cdr_steps_after(
    perm: &SignedPermutation,
    prefix: &[Pointer],
    sel: Selection,
    budget: usize,
) -> Result<StepsReport> {
    let space = StateSpace::cdr(perm, budget);
    if !space.is_complete() {
        return Err(Error::BudgetExceeded(budget));
    }
    let sorting = space.lengths_to(SignedPermutation::is_identity);
    let sorting_length = match sorting.len() {
        0 => {
            return Err(Error::Precondition(format!("{perm} is not cdr sortable")));
        }
        1 => *sorting.first().unwrap(),
        _ => {
            return Err(Error::TheoremViolation(format!(
                "sorting sequences of {perm} have lengths {sorting:?}"
            )))
        }
    };
    let mut cur = perm.clone();
    for &p in prefix {
        cur = ops::apply_cdr(&cur, CdrMove { pointer: p })?;
    }
    let (cdr_moves, fixed_point) = if prefix.is_empty() {
        indiscriminate_cdr_run(perm, sel)
    } else {
        continue_cdr_run(cur, prefix.to_vec(), sel)
    };
    let run = cds_sortable_greedy(&fixed_point);
    if !run.sorted() {
        return Err(Error::TheoremViolation(format!(
            "cdr fixed point {fixed_point} of {perm} is not cds sortable"
        )));
    }
    let report = StepsReport {
        cdr_moves,
        fixed_point,
        cds_moves: run.moves,
        sorting_length,
    };
    if report.total() != sorting_length {
        return Err(Error::TheoremViolation(format!(
            "k + 2m = {} + 2*{} differs from the sorting length {sorting_length} of {perm}",
            report.k(),
            report.m()
        )));
    }
    Ok(report)
}
