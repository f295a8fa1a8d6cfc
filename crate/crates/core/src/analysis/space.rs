use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::ops::{self, CdrMove, Move};
use crate::perm::SignedPermutation;

/// Every permutation reachable from a root by a move rule, with the move
/// graph between them. Both cdr and cds reach new states strictly
/// monotonically (each move adds adjacencies that later moves never
/// break apart), so the move graph is acyclic.
#[derive(Debug, Clone)]
pub struct StateSpace {
    states: Vec<SignedPermutation>,
    succ: Vec<Vec<(Move, usize)>>,
    /// Children before parents.
    post_order: Vec<usize>,
    /// States discovered but left unexpanded by the budget.
    truncated: Vec<bool>,
    complete: bool,
}

impl StateSpace {
    pub fn explore<F>(root: &SignedPermutation, budget: usize, successors: F) -> StateSpace
    where
        F: Fn(&SignedPermutation) -> Vec<(Move, SignedPermutation)>,
    {
        let mut space = StateSpace {
            states: vec![root.clone()],
            succ: vec![Vec::new()],
            post_order: Vec::new(),
            truncated: Vec::new(),
            complete: true,
        };
        let mut index: HashMap<SignedPermutation, usize> = HashMap::new();
        index.insert(root.clone(), 0);
        let mut expanded = vec![false];
        // (state, its children, index of the next child to visit)
        let mut stack: Vec<(usize, Vec<usize>, usize)> = Vec::new();
        let mut push = |space: &mut StateSpace, expanded: &mut Vec<bool>, s: usize| {
            expanded[s] = true;
            let mut kids = Vec::new();
            for (m, next) in successors(&space.states[s]) {
                let id = match index.get(&next) {
                    Some(&id) => id,
                    None => {
                        let id = space.states.len();
                        index.insert(next.clone(), id);
                        space.states.push(next);
                        space.succ.push(Vec::new());
                        expanded.push(false);
                        id
                    }
                };
                space.succ[s].push((m, id));
                kids.push(id);
            }
            (s, kids, 0)
        };
        let mut truncated = std::collections::HashSet::new();
        let mut budget_left = budget;
        if budget_left == 0 {
            space.complete = false;
            space.truncated = vec![true];
            space.post_order.push(0);
            return space;
        }
        budget_left -= 1;
        let frame = push(&mut space, &mut expanded, 0);
        stack.push(frame);
        while let Some((s, kids, cursor)) = stack.last_mut() {
            if *cursor == kids.len() {
                space.post_order.push(*s);
                stack.pop();
                continue;
            }
            let child = kids[*cursor];
            *cursor += 1;
            if expanded[child] {
                continue;
            }
            if budget_left == 0 {
                space.complete = false;
                truncated.insert(child);
                expanded[child] = true;
                space.post_order.push(child);
                continue;
            }
            budget_left -= 1;
            let frame = push(&mut space, &mut expanded, child);
            stack.push(frame);
        }
        space.truncated = (0..space.states.len())
            .map(|s| truncated.contains(&s))
            .collect();
        space
    }

    /// All permutations reachable from `root` by cdr.
    pub fn cdr(root: &SignedPermutation, budget: usize) -> StateSpace {
        StateSpace::explore(root, budget, |p| {
            ops::cdr_successors(p)
                .into_iter()
                .map(|(ptr, q)| (Move::Cdr(CdrMove { pointer: ptr }), q))
                .collect()
        })
    }

    /// All permutations reachable from `root` by cds.
    pub fn cds(root: &SignedPermutation, budget: usize) -> StateSpace {
        StateSpace::explore(root, budget, |p| {
            ops::applicable_cds_moves(p)
                .into_iter()
                .map(|m| {
                    (
                        Move::Cds(m),
                        ops::apply_cds(p, m).expect("enumerated move applies"),
                    )
                })
                .collect()
        })
    }

    /// False when the budget cut exploration short; derived quantities then
    /// describe only the explored part.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn root(&self) -> &SignedPermutation {
        &self.states[0]
    }

    pub fn state(&self, id: usize) -> &SignedPermutation {
        &self.states[id]
    }

    pub fn successors(&self, id: usize) -> &[(Move, usize)] {
        &self.succ[id]
    }

    fn is_leaf(&self, id: usize) -> bool {
        self.succ[id].is_empty() && !self.truncated[id]
    }

    /// Ids of terminal states (no applicable move).
    pub fn terminals(&self) -> Vec<usize> {
        (0..self.states.len())
            .filter(|&s| self.is_leaf(s))
            .collect()
    }

    /// For each terminal state, the set of path lengths from the root.
    pub fn terminal_depths(&self) -> BTreeMap<usize, BTreeSet<usize>> {
        let mut depths: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); self.states.len()];
        depths[0].insert(0);
        for &s in self.post_order.iter().rev() {
            let here: Vec<usize> = depths[s].iter().copied().collect();
            for &(_, t) in &self.succ[s] {
                depths[t].extend(here.iter().map(|d| d + 1));
            }
        }
        self.terminals()
            .into_iter()
            .map(|s| (s, std::mem::take(&mut depths[s])))
            .collect()
    }

    /// Number of maximal move sequences from the root, by length. Counts
    /// saturate at `u128::MAX`.
    pub fn maximal_length_counts(&self) -> BTreeMap<usize, u128> {
        let mut counts: Vec<BTreeMap<usize, u128>> = vec![BTreeMap::new(); self.states.len()];
        for &s in &self.post_order {
            let mut here = BTreeMap::new();
            if self.is_leaf(s) {
                here.insert(0, 1u128);
            }
            for &(_, t) in &self.succ[s] {
                for (&len, &c) in &counts[t] {
                    let e = here.entry(len + 1).or_insert(0u128);
                    *e = e.saturating_add(c);
                }
            }
            counts[s] = here;
        }
        std::mem::take(&mut counts[0])
    }

    /// Lengths of all move sequences from the root to a state satisfying `target`.
    pub fn lengths_to<F: Fn(&SignedPermutation) -> bool>(&self, target: F) -> BTreeSet<usize> {
        let mut lengths: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); self.states.len()];
        for &s in &self.post_order {
            let mut here = BTreeSet::new();
            if target(&self.states[s]) {
                here.insert(0);
            }
            for &(_, t) in &self.succ[s] {
                here.extend(lengths[t].iter().map(|l| l + 1));
            }
            lengths[s] = here;
        }
        std::mem::take(&mut lengths[0])
    }

    /// Moves along one path from the root to the state `goal`, if reachable.
    pub fn path_to(&self, goal: usize) -> Option<Vec<Move>> {
        let mut parent: Vec<Option<(usize, Move)>> = vec![None; self.states.len()];
        let mut seen = vec![false; self.states.len()];
        seen[0] = true;
        let mut queue = std::collections::VecDeque::from([0usize]);
        while let Some(s) = queue.pop_front() {
            if s == goal {
                let mut path = Vec::new();
                let mut cur = s;
                while let Some((p, m)) = parent[cur] {
                    path.push(m);
                    cur = p;
                }
                path.reverse();
                return Some(path);
            }
            for &(m, t) in &self.succ[s] {
                if !seen[t] {
                    seen[t] = true;
                    parent[t] = Some((s, m));
                    queue.push_back(t);
                }
            }
        }
        None
    }

    pub fn find(&self, perm: &SignedPermutation) -> Option<usize> {
        self.states.iter().position(|s| s == perm)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> SignedPermutation {
        text.parse().unwrap()
    }

    #[test]
    fn maxseq_example_space() {
        let space = StateSpace::cdr(&p("[1,3,5,-2,-6,4]"), 1000);
        assert!(space.is_complete());
        let counts = space.maximal_length_counts();
        assert_eq!(counts.keys().copied().collect::<Vec<_>>(), vec![1, 3, 5]);
        let sorting = space.lengths_to(SignedPermutation::is_identity);
        assert_eq!(sorting, BTreeSet::from([5]));
        let depths = space.terminal_depths();
        let gamma = space.find(&p("[1,3,5,6,2,4]")).unwrap();
        assert_eq!(depths[&gamma], BTreeSet::from([1]));
        let id = space.find(&SignedPermutation::identity(6)).unwrap();
        assert_eq!(depths[&id], BTreeSet::from([5]));
        assert_eq!(space.path_to(id).unwrap().len(), 5);
    }

    #[test]
    fn identity_space_is_a_single_terminal() {
        let space = StateSpace::cdr(&SignedPermutation::identity(4), 10);
        assert_eq!(space.len(), 1);
        assert_eq!(space.terminals(), vec![0]);
        assert_eq!(space.maximal_length_counts(), BTreeMap::from([(0, 1)]));
    }

    #[test]
    fn budget_truncation_is_reported() {
        let space = StateSpace::cdr(&p("[1,3,5,-2,-6,4]"), 2);
        assert!(!space.is_complete());
        assert!(!StateSpace::cdr(&p("[1,2]"), 0).is_complete());
    }

    #[test]
    fn sigma_two_sequences() {
        // Four isolated oriented vertices: 4! orderings, all of length 4.
        let space = StateSpace::cdr(&crate::perm::sigma(2).unwrap(), 1000);
        assert_eq!(space.maximal_length_counts(), BTreeMap::from([(4, 24)]));
    }
}
