//! Context directed reversal (cdr) and context directed swap (cds).
//!
//! Both operations are driven by cut positions: every pointer occurrence
//! sits in the gap to the left or right of its entry. A cdr at pointer `p`
//! reverses and negates the entries between the two cuts of `p`. A cds at
//! two interleaved pointers exchanges the first and third of the blocks
//! delimited by their four cuts.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{Pointer, SignedPermutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CdrMove {
    pub pointer: Pointer,
}

impl CdrMove {
    pub fn new(low: u32) -> Self {
        CdrMove {
            pointer: Pointer(low),
        }
    }
}

/// A cds move; constructors keep the lower pointer first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CdsMove {
    pub p: Pointer,
    pub q: Pointer,
}

impl CdsMove {
    pub fn new(a: u32, b: u32) -> Result<Self> {
        if a == b {
            return Err(Error::IdenticalPointers(a));
        }
        Ok(CdsMove {
            p: Pointer(a.min(b)),
            q: Pointer(a.max(b)),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Move {
    Cdr(CdrMove),
    Cds(CdsMove),
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Cdr(m) => write!(f, "cdr {}", m.pointer),
            Move::Cds(m) => write!(f, "cds {} {}", m.p, m.q),
        }
    }
}

pub fn cdr_applicable(perm: &SignedPermutation, m: CdrMove) -> Result<bool> {
    perm.check_pointer(m.pointer)?;
    let x = perm.signed_value(m.pointer.low());
    let y = perm.signed_value(m.pointer.high());
    Ok((x > 0) != (y > 0))
}

pub fn apply_cdr(perm: &SignedPermutation, m: CdrMove) -> Result<SignedPermutation> {
    if !cdr_applicable(perm, m)? {
        return Err(Error::NotApplicable(Move::Cdr(m)));
    }
    let pos = perm.positions();
    Ok(cdr_unchecked(perm, m.pointer, &pos))
}

pub(crate) fn cdr_unchecked(
    perm: &SignedPermutation,
    p: Pointer,
    pos: &[usize],
) -> SignedPermutation {
    let [a, b] = perm.occurrences_with(p, pos);
    let (lo, hi) = (a.cut(), b.cut());
    let mut entries = perm.entries().to_vec();
    entries[lo..hi].reverse();
    for e in &mut entries[lo..hi] {
        *e = -*e;
    }
    SignedPermutation::from_entries_unchecked(entries)
}

/// Like [`apply_cdr`], but a non-applicable move returns the input and `false`.
pub fn try_apply_cdr(perm: &SignedPermutation, m: CdrMove) -> Result<(SignedPermutation, bool)> {
    match apply_cdr(perm, m) {
        Ok(next) => Ok((next, true)),
        Err(Error::NotApplicable(_)) => Ok((perm.clone(), false)),
        Err(e) => Err(e),
    }
}

/// The four cuts of an interleaved pointer pair, in position order, when
/// both pointers are sign-homogeneous; `None` otherwise.
fn cds_cuts(perm: &SignedPermutation, m: CdsMove, pos: &[usize]) -> Option<[usize; 4]> {
    let [p1, p2] = perm.occurrences_with(m.p, pos);
    let [q1, q2] = perm.occurrences_with(m.q, pos);
    if p1.entry_sign != p2.entry_sign || q1.entry_sign != q2.entry_sign {
        return None;
    }
    let (pk1, pk2, qk1, qk2) = (p1.key(), p2.key(), q1.key(), q2.key());
    if pk1 < qk1 && qk1 < pk2 && pk2 < qk2 {
        Some([p1.cut(), q1.cut(), p2.cut(), q2.cut()])
    } else if qk1 < pk1 && pk1 < qk2 && qk2 < pk2 {
        Some([q1.cut(), p1.cut(), q2.cut(), p2.cut()])
    } else {
        None
    }
}

fn check_cds(perm: &SignedPermutation, m: CdsMove) -> Result<()> {
    perm.check_pointer(m.p)?;
    perm.check_pointer(m.q)?;
    if m.p == m.q {
        return Err(Error::IdenticalPointers(m.p.0));
    }
    Ok(())
}

pub fn cds_applicable(perm: &SignedPermutation, m: CdsMove) -> Result<bool> {
    check_cds(perm, m)?;
    Ok(cds_cuts(perm, m, &perm.positions()).is_some())
}

pub fn apply_cds(perm: &SignedPermutation, m: CdsMove) -> Result<SignedPermutation> {
    check_cds(perm, m)?;
    let pos = perm.positions();
    let cuts = cds_cuts(perm, m, &pos).ok_or(Error::NotApplicable(Move::Cds(m)))?;
    Ok(swap_blocks(perm, cuts))
}

fn swap_blocks(perm: &SignedPermutation, [c1, c2, c3, c4]: [usize; 4]) -> SignedPermutation {
    let e = perm.entries();
    let mut out = Vec::with_capacity(e.len());
    out.extend_from_slice(&e[..c1]);
    out.extend_from_slice(&e[c3..c4]);
    out.extend_from_slice(&e[c2..c3]);
    out.extend_from_slice(&e[c1..c2]);
    out.extend_from_slice(&e[c4..]);
    SignedPermutation::from_entries_unchecked(out)
}

pub fn try_apply_cds(perm: &SignedPermutation, m: CdsMove) -> Result<(SignedPermutation, bool)> {
    match apply_cds(perm, m) {
        Ok(next) => Ok((next, true)),
        Err(Error::NotApplicable(_)) => Ok((perm.clone(), false)),
        Err(e) => Err(e),
    }
}

pub fn apply_move(perm: &SignedPermutation, m: Move) -> Result<SignedPermutation> {
    match m {
        Move::Cdr(c) => apply_cdr(perm, c),
        Move::Cds(c) => apply_cds(perm, c),
    }
}

/// Applicable cdr moves in increasing pointer order.
pub fn applicable_cdr_moves(perm: &SignedPermutation) -> Vec<CdrMove> {
    let e = perm.entries();
    let mut sign = vec![false; e.len() + 2];
    for &v in e {
        sign[v.unsigned_abs() as usize] = v > 0;
    }
    (1..e.len() as u32)
        .filter(|&i| sign[i as usize] != sign[i as usize + 1])
        .map(CdrMove::new)
        .collect()
}

/// Applicable cds moves, lower pointer first, in lexicographic order.
pub fn applicable_cds_moves(perm: &SignedPermutation) -> Vec<CdsMove> {
    let pos = perm.positions();
    let n = perm.len() as u32;
    let mut out = Vec::new();
    for a in 1..n {
        for b in a + 1..n {
            let m = CdsMove {
                p: Pointer(a),
                q: Pointer(b),
            };
            if cds_cuts(perm, m, &pos).is_some() {
                out.push(m);
            }
        }
    }
    out
}

pub fn is_cdr_fixed_point(perm: &SignedPermutation) -> bool {
    applicable_cdr_moves(perm).is_empty()
}

pub fn is_cds_fixed_point(perm: &SignedPermutation) -> bool {
    applicable_cds_moves(perm).is_empty()
}

/// Successor states of `perm` under every applicable cdr move.
pub(crate) fn cdr_successors(perm: &SignedPermutation) -> Vec<(Pointer, SignedPermutation)> {
    let pos = perm.positions();
    applicable_cdr_moves(perm)
        .into_iter()
        .map(|m| (m.pointer, cdr_unchecked(perm, m.pointer, &pos)))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub op: Move,
    pub result: SignedPermutation,
}

/// A replayable record of applied moves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SortTrace {
    pub initial: SignedPermutation,
    pub steps: Vec<TraceStep>,
}

impl SortTrace {
    pub fn new(initial: SignedPermutation) -> Self {
        SortTrace {
            initial,
            steps: Vec::new(),
        }
    }

    pub fn current(&self) -> &SignedPermutation {
        self.steps.last().map_or(&self.initial, |s| &s.result)
    }

    pub fn apply(&mut self, op: Move) -> Result<&SignedPermutation> {
        let result = apply_move(self.current(), op)?;
        self.steps.push(TraceStep { op, result });
        Ok(self.current())
    }

    pub fn cdr_count(&self) -> usize {
        self.steps
            .iter()
            .filter(|s| matches!(s.op, Move::Cdr(_)))
            .count()
    }

    pub fn cds_count(&self) -> usize {
        self.steps.len() - self.cdr_count()
    }

    /// Re-applies every move from the initial permutation and checks each
    /// recorded result.
    pub fn replay(&self) -> Result<SignedPermutation> {
        let mut cur = self.initial.clone();
        for (i, step) in self.steps.iter().enumerate() {
            cur = apply_move(&cur, step.op)?;
            if cur != step.result {
                return Err(Error::TraceSyntax {
                    line: i + 2,
                    message: format!("recorded {} but replay gives {}", step.result, cur),
                });
            }
        }
        Ok(cur)
    }

    /// Line format:
    ///
    /// ```text
    /// start [-2, 1, -4, 3]
    /// step 1 cdr 2 -> [4, -1, 2, 3]
    /// step 2 cds 1 2 -> [...]
    /// end [4, -1, 2, 3]
    /// ```
    ///
    /// Pointers are written by their low index.
    pub fn to_text(&self) -> String {
        let mut out = format!("start {}\n", self.initial);
        for (i, s) in self.steps.iter().enumerate() {
            let op = match s.op {
                Move::Cdr(m) => format!("cdr {}", m.pointer.0),
                Move::Cds(m) => format!("cds {} {}", m.p.0, m.q.0),
            };
            out.push_str(&format!("step {} {} -> {}\n", i + 1, op, s.result));
        }
        out.push_str(&format!("end {}\n", self.current()));
        out
    }

    /// Parses the `start`/`step`/`end` lines of [`SortTrace::to_text`];
    /// other lines are ignored.
    pub fn from_text(text: &str) -> Result<SortTrace> {
        let syntax = |line: usize, message: &str| Error::TraceSyntax {
            line,
            message: message.to_string(),
        };
        let mut trace: Option<SortTrace> = None;
        for (i, line) in text.lines().enumerate() {
            let ln = i + 1;
            let line = line.trim();
            if let Some(rest) = line.strip_prefix("start ") {
                trace = Some(SortTrace::new(rest.parse()?));
            } else if let Some(rest) = line.strip_prefix("step ") {
                let t = trace
                    .as_mut()
                    .ok_or_else(|| syntax(ln, "step before start"))?;
                let (lhs, rhs) = rest
                    .split_once(" -> ")
                    .ok_or_else(|| syntax(ln, "missing `->`"))?;
                let words: Vec<&str> = lhs.split_whitespace().collect();
                let num = |w: &str| w.parse::<u32>().map_err(|_| syntax(ln, "bad pointer"));
                let op = match words.as_slice() {
                    [_, "cdr", a] => Move::Cdr(CdrMove::new(num(a)?)),
                    [_, "cds", a, b] => Move::Cds(CdsMove::new(num(a)?, num(b)?)?),
                    _ => return Err(syntax(ln, "expected `cdr i` or `cds i j`")),
                };
                t.steps.push(TraceStep {
                    op,
                    result: rhs.parse()?,
                });
            } else if let Some(rest) = line.strip_prefix("end ") {
                let t = trace
                    .as_ref()
                    .ok_or_else(|| syntax(ln, "end before start"))?;
                let end: SignedPermutation = rest.parse()?;
                if &end != t.current() {
                    return Err(syntax(ln, "end does not match the last step"));
                }
            }
        }
        trace.ok_or_else(|| syntax(0, "no start line"))
    }
}
