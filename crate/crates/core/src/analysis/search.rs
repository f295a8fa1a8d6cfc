use std::collections::{BTreeSet, HashMap, HashSet};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{build_overlap_graph, OrientedGraph};
use crate::ops::{self, CdsMove};
use crate::perm::{Pointer, SignedPermutation};

pub const DEFAULT_BUDGET: usize = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceKind {
    Oriented,
    Maximal,
    Total,
}

/// A sequence of pointers applied one after another, each oriented at its
/// turn, classified by the graph it ends in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointerSequence {
    pub pointers: Vec<Pointer>,
    pub kind: SequenceKind,
}

impl PointerSequence {
    /// Plays `pointers` by `gcdr` from `graph`. Fails if some pointer is
    /// not oriented at its turn.
    pub fn classify_in(graph: &OrientedGraph, pointers: Vec<Pointer>) -> Result<PointerSequence> {
        let end = play_sequence(graph, &pointers)?;
        let kind = if end.is_total_terminal() {
            SequenceKind::Total
        } else if end.is_terminal() {
            SequenceKind::Maximal
        } else {
            SequenceKind::Oriented
        };
        Ok(PointerSequence { pointers, kind })
    }

    pub fn classify(perm: &SignedPermutation, pointers: Vec<Pointer>) -> Result<PointerSequence> {
        PointerSequence::classify_in(&build_overlap_graph(perm), pointers)
    }

    pub fn len(&self) -> usize {
        self.pointers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pointers.is_empty()
    }

    /// Maximal includes total.
    pub fn is_maximal(&self) -> bool {
        self.kind != SequenceKind::Oriented
    }
}

fn play_sequence(graph: &OrientedGraph, pointers: &[Pointer]) -> Result<OrientedGraph> {
    let mut g = graph.clone();
    for p in pointers {
        g = g.gcdr(p.0)?;
    }
    Ok(g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Maximum number of states expanded.
    pub budget: usize,
    /// Memoize dead ends by their adjacency-collapsed form.
    pub collapse: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: DEFAULT_BUDGET,
            collapse: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Reached(PointerSequence),
    Unreachable,
    Undecided { explored: usize },
}

impl SearchOutcome {
    pub fn is_reached(&self) -> bool {
        matches!(self, SearchOutcome::Reached(_))
    }

    pub fn witness(&self) -> Option<&PointerSequence> {
        match self {
            SearchOutcome::Reached(w) => Some(w),
            _ => None,
        }
    }
}

struct Dfs<'a> {
    target: &'a dyn Fn(&SignedPermutation) -> bool,
    dead: HashSet<SignedPermutation>,
    opts: SearchOptions,
    explored: usize,
    path: Vec<Pointer>,
}

enum Step {
    Found,
    Dead,
    OutOfBudget,
}

impl Dfs<'_> {
    fn key(&self, perm: &SignedPermutation) -> SignedPermutation {
        if self.opts.collapse {
            perm.collapse_adjacencies()
        } else {
            perm.clone()
        }
    }

    fn visit(&mut self, perm: &SignedPermutation) -> Step {
        if (self.target)(perm) {
            return Step::Found;
        }
        if self.dead.contains(&self.key(perm)) {
            return Step::Dead;
        }
        if self.explored >= self.opts.budget {
            return Step::OutOfBudget;
        }
        self.explored += 1;
        for (ptr, next) in ops::cdr_successors(perm) {
            self.path.push(ptr);
            match self.visit(&next) {
                Step::Found => return Step::Found,
                Step::OutOfBudget => return Step::OutOfBudget,
                Step::Dead => {
                    self.path.pop();
                }
            }
        }
        let key = self.key(perm);
        self.dead.insert(key);
        Step::Dead
    }
}

fn search(
    perm: &SignedPermutation,
    opts: SearchOptions,
    target: &dyn Fn(&SignedPermutation) -> bool,
) -> SearchOutcome {
    let mut dfs = Dfs {
        target,
        dead: HashSet::new(),
        opts,
        explored: 0,
        path: Vec::new(),
    };
    match dfs.visit(perm) {
        Step::Found => {
            let seq = PointerSequence::classify(perm, dfs.path)
                .expect("search path consists of applicable moves");
            SearchOutcome::Reached(seq)
        }
        Step::Dead => SearchOutcome::Unreachable,
        Step::OutOfBudget => SearchOutcome::Undecided {
            explored: dfs.explored,
        },
    }
}

/// Depth-first search for a cdr sequence that sorts `perm` to the identity.
pub fn cdr_sortable_search(perm: &SignedPermutation, opts: SearchOptions) -> SearchOutcome {
    search(perm, opts, &SignedPermutation::is_identity)
}

/// Depth-first search for a cdr sequence ending in the reverse identity.
pub fn reverse_cdr_sortable_search(perm: &SignedPermutation, opts: SearchOptions) -> SearchOutcome {
    search(perm, opts, &SignedPermutation::is_reverse_identity)
}

/// The overlap graph has no unoriented component. Sufficient for cdr
/// sortability only when every isolated unoriented vertex is an adjacency;
/// use [`cdr_sortable_search`] for a decision.
pub fn cdr_sortable_criterion(perm: &SignedPermutation) -> bool {
    !build_overlap_graph(perm).has_unoriented_component()
}

/// Which applicable move an indiscriminate run takes next.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selection {
    Lowest,
    Seeded(u64),
}

struct Chooser {
    rng: Option<ChaCha8Rng>,
}

impl Chooser {
    fn new(sel: Selection) -> Self {
        Chooser {
            rng: match sel {
                Selection::Lowest => None,
                Selection::Seeded(s) => Some(ChaCha8Rng::seed_from_u64(s)),
            },
        }
    }

    fn pick<T: Copy>(&mut self, options: &[T]) -> Option<T> {
        match &mut self.rng {
            None => options.first().copied(),
            Some(rng) => options.choose(rng).copied(),
        }
    }
}

/// Applies cdr moves chosen by `sel` until none applies.
pub fn indiscriminate_cdr_run(
    perm: &SignedPermutation,
    sel: Selection,
) -> (Vec<Pointer>, SignedPermutation) {
    continue_cdr_run(perm.clone(), Vec::new(), sel)
}

pub(crate) fn continue_cdr_run(
    mut cur: SignedPermutation,
    mut taken: Vec<Pointer>,
    sel: Selection,
) -> (Vec<Pointer>, SignedPermutation) {
    let mut chooser = Chooser::new(sel);
    loop {
        let moves = ops::applicable_cdr_moves(&cur);
        let Some(m) = chooser.pick(&moves) else {
            return (taken, cur);
        };
        cur = ops::apply_cdr(&cur, m).expect("enumerated move applies");
        taken.push(m.pointer);
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CdsRun {
    pub moves: Vec<CdsMove>,
    pub end: SignedPermutation,
}

impl CdsRun {
    pub fn steps(&self) -> usize {
        self.moves.len()
    }

    pub fn sorted(&self) -> bool {
        self.end.is_identity()
    }
}

/// Applies the first applicable cds move until none applies.
pub fn cds_sortable_greedy(perm: &SignedPermutation) -> CdsRun {
    cds_run(perm, Selection::Lowest)
}

pub fn cds_run(perm: &SignedPermutation, sel: Selection) -> CdsRun {
    let mut chooser = Chooser::new(sel);
    let mut cur = perm.clone();
    let mut moves = Vec::new();
    loop {
        let options = ops::applicable_cds_moves(&cur);
        let Some(m) = chooser.pick(&options) else {
            return CdsRun { moves, end: cur };
        };
        cur = ops::apply_cds(&cur, m).expect("enumerated move applies");
        moves.push(m);
    }
}

/// Builds a total sequence by always playing the lowest oriented vertex
/// whose `gcdr` leaves no unoriented component.
pub fn greedy_safe_total_sequence_in(graph: &OrientedGraph) -> Result<PointerSequence> {
    if graph.has_unoriented_component() {
        return Err(Error::Precondition(
            "overlap graph has an unoriented component".into(),
        ));
    }
    let mut g = graph.clone();
    let mut seq = Vec::new();
    while !g.is_terminal() {
        let safe = g
            .oriented_vertices()
            .into_iter()
            .map(|v| (v, g.gcdr(v).expect("oriented vertex")))
            .find(|(_, h)| !h.has_unoriented_component());
        let Some((v, h)) = safe else {
            return Err(Error::TheoremViolation(format!(
                "no oriented vertex keeps every component oriented after {} moves",
                seq.len()
            )));
        };
        seq.push(Pointer(v));
        g = h;
    }
    debug_assert!(g.is_total_terminal());
    PointerSequence::classify_in(graph, seq)
}

pub fn greedy_safe_total_sequence(perm: &SignedPermutation) -> Result<PointerSequence> {
    greedy_safe_total_sequence_in(&build_overlap_graph(perm))
}

/// Oriented sequences of length `len` from `g`, passed to `visit` until it
/// returns `true` or `budget` nodes have been generated.
fn for_each_oriented_sequence(
    g: &OrientedGraph,
    len: usize,
    budget: &mut usize,
    prefix: &mut Vec<Pointer>,
    visit: &mut dyn FnMut(&[Pointer], &OrientedGraph) -> bool,
) -> Option<bool> {
    if len == 0 {
        return Some(visit(prefix, g));
    }
    for v in g.oriented_vertices() {
        if *budget == 0 {
            return None;
        }
        *budget -= 1;
        let h = g.gcdr(v).expect("oriented vertex");
        prefix.push(Pointer(v));
        let r = for_each_oriented_sequence(&h, len - 1, budget, prefix, visit);
        prefix.pop();
        match r {
            Some(false) => {}
            other => return other,
        }
    }
    Some(false)
}

/// Inserts an even number of pointers before a suffix of a maximal sequence
/// so that the result is total.
pub fn extend_to_total(
    perm: &SignedPermutation,
    maxseq: &[Pointer],
    budget: usize,
) -> Result<PointerSequence> {
    extend_to_total_in(&build_overlap_graph(perm), maxseq, budget)
}

pub fn extend_to_total_in(
    graph: &OrientedGraph,
    maxseq: &[Pointer],
    budget: usize,
) -> Result<PointerSequence> {
    let given = PointerSequence::classify_in(graph, maxseq.to_vec())?;
    match given.kind {
        SequenceKind::Total => return Ok(given),
        SequenceKind::Oriented => {
            return Err(Error::Precondition("sequence is not maximal".into()))
        }
        SequenceKind::Maximal => {}
    }
    let m = maxseq.len();
    let limit = budget;
    let mut budget = budget;
    let mut prefix_graphs = vec![graph.clone()];
    for p in maxseq {
        let next = prefix_graphs.last().unwrap().gcdr(p.0)?;
        prefix_graphs.push(next);
    }
    let max_insert = graph.vertex_count();
    let mut pairs = 1;
    while 2 * pairs <= max_insert {
        for split in (0..m).rev() {
            let suffix = &maxseq[split..];
            let mut found = None;
            let mut visit = |ins: &[Pointer], h: &OrientedGraph| match play_sequence(h, suffix) {
                Ok(end) if end.is_total_terminal() => {
                    found = Some(ins.to_vec());
                    true
                }
                _ => false,
            };
            let r = for_each_oriented_sequence(
                &prefix_graphs[split],
                2 * pairs,
                &mut budget,
                &mut Vec::new(),
                &mut visit,
            );
            if let Some(ins) = found {
                let mut out = maxseq[..split].to_vec();
                out.extend(ins);
                out.extend_from_slice(suffix);
                return PointerSequence::classify_in(graph, out);
            }
            if r.is_none() {
                return Err(Error::BudgetExceeded(limit));
            }
        }
        pairs += 1;
    }
    Err(Error::TheoremViolation(
        "no even insertion turns the maximal sequence into a total one".into(),
    ))
}

/// Lengths of all total sequences of `graph`; `None` if the budget runs out.
/// Probe for whether total sequences of a connected graph share one length.
pub fn total_sequence_lengths(graph: &OrientedGraph, budget: usize) -> Option<BTreeSet<usize>> {
    fn go(
        g: &OrientedGraph,
        memo: &mut HashMap<OrientedGraph, BTreeSet<usize>>,
        budget: &mut usize,
    ) -> Option<BTreeSet<usize>> {
        if let Some(r) = memo.get(g) {
            return Some(r.clone());
        }
        if *budget == 0 {
            return None;
        }
        *budget -= 1;
        let mut out = BTreeSet::new();
        if g.is_total_terminal() {
            out.insert(0);
        }
        for v in g.oriented_vertices() {
            let h = g.gcdr(v).expect("oriented vertex");
            out.extend(go(&h, memo, budget)?.into_iter().map(|l| l + 1));
        }
        memo.insert(g.clone(), out.clone());
        Some(out)
    }
    let mut budget = budget;
    go(graph, &mut HashMap::new(), &mut budget)
}
