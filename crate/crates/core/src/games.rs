//! Two-player games on oriented graphs: players alternately pick an oriented
//! vertex and apply `gcdr` there.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::analysis::Selection;
use crate::error::{Error, Result};
use crate::graph::OrientedGraph;
use crate::perm::Pointer;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Player {
    One,
    Two,
}

impl Player {
    pub fn other(self) -> Player {
        match self {
            Player::One => Player::Two,
            Player::Two => Player::One,
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Player::One => "ONE",
            Player::Two => "TWO",
        })
    }
}

/// Normal: the last player to move wins. Misere: the last player to move loses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    Normal,
    Misere,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::Normal => "normal",
            Rule::Misere => "misere",
        })
    }
}

impl FromStr for Rule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "normal" => Ok(Rule::Normal),
            "misere" | "misère" => Ok(Rule::Misere),
            _ => Err(Error::Precondition(format!("unknown rule '{s}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GameState {
    pub graph: OrientedGraph,
    pub to_move: Player,
    pub rule: Rule,
}

impl GameState {
    /// Player ONE to move.
    pub fn new(graph: OrientedGraph, rule: Rule) -> Self {
        GameState {
            graph,
            to_move: Player::One,
            rule,
        }
    }

    pub fn legal_moves(&self) -> Vec<u32> {
        self.graph.oriented_vertices()
    }

    pub fn is_over(&self) -> bool {
        self.graph.is_terminal()
    }

    pub fn play(&self, v: u32) -> Result<GameState> {
        if !matches!(self.graph.is_oriented(v), Ok(true)) {
            return Err(Error::IllegalMove(v));
        }
        Ok(GameState {
            graph: self.graph.gcdr(v)?,
            to_move: self.to_move.other(),
            rule: self.rule,
        })
    }

    /// Winner when the game ends after `moves` more moves.
    fn winner_after(&self, moves: usize) -> Player {
        let last_mover_is_to_move = moves % 2 == 1;
        let to_move_wins = match self.rule {
            Rule::Normal => last_mover_is_to_move,
            Rule::Misere => !last_mover_is_to_move,
        };
        if to_move_wins {
            self.to_move
        } else {
            self.to_move.other()
        }
    }
}

/// Winner read off the length of a single play-out (lowest vertex first).
pub fn winner_by_parity(s: &GameState) -> Player {
    s.winner_after(play_out_length(&s.graph))
}

fn play_out_length(graph: &OrientedGraph) -> usize {
    let mut g = graph.clone();
    let mut moves = 0;
    while let Some(&v) = g.oriented_vertices().first() {
        g = g.gcdr(v).expect("oriented vertex is playable");
        moves += 1;
    }
    moves
}

/// Exact winner by exhaustive game-tree search. `budget` bounds the number
/// of distinct positions evaluated.
pub fn winner_by_minimax(s: &GameState, budget: usize) -> Result<Player> {
    let mut memo = HashMap::new();
    let mover_wins = mover_wins(&s.graph, s.rule, &mut memo, budget)?;
    Ok(if mover_wins {
        s.to_move
    } else {
        s.to_move.other()
    })
}

fn mover_wins(
    g: &OrientedGraph,
    rule: Rule,
    memo: &mut HashMap<OrientedGraph, bool>,
    budget: usize,
) -> Result<bool> {
    if let Some(&w) = memo.get(g) {
        return Ok(w);
    }
    if memo.len() >= budget {
        return Err(Error::BudgetExceeded(budget));
    }
    let moves = g.oriented_vertices();
    let win = if moves.is_empty() {
        rule == Rule::Misere
    } else {
        let mut any = false;
        for v in moves {
            let child = g.gcdr(v)?;
            if !mover_wins(&child, rule, memo, budget)? {
                any = true;
                break;
            }
        }
        any
    };
    memo.insert(g.clone(), win);
    Ok(win)
}

/// Lengths of every complete play-out from `graph`.
pub fn play_out_lengths(graph: &OrientedGraph, budget: usize) -> Result<BTreeSet<usize>> {
    fn go(
        g: &OrientedGraph,
        memo: &mut HashMap<OrientedGraph, BTreeSet<usize>>,
        budget: usize,
    ) -> Result<BTreeSet<usize>> {
        if let Some(l) = memo.get(g) {
            return Ok(l.clone());
        }
        if memo.len() >= budget {
            return Err(Error::BudgetExceeded(budget));
        }
        let moves = g.oriented_vertices();
        let mut out = BTreeSet::new();
        if moves.is_empty() {
            out.insert(0);
        }
        for v in moves {
            out.extend(go(&g.gcdr(v)?, memo, budget)?.into_iter().map(|l| l + 1));
        }
        memo.insert(g.clone(), out.clone());
        Ok(out)
    }
    go(graph, &mut HashMap::new(), budget)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ply {
    pub ply: usize,
    pub player: Player,
    pub vertex: u32,
    /// Oriented vertices left after the move.
    pub remaining: usize,
}

impl fmt::Display for Ply {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ply={} player={} vertex={} remaining={}",
            self.ply,
            self.player,
            Pointer(self.vertex),
            self.remaining
        )
    }
}

impl FromStr for Ply {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |m: &str| Error::TraceSyntax {
            line: 0,
            message: format!("{m} in '{s}'"),
        };
        let mut ply = None;
        let mut player = None;
        let mut vertex = None;
        let mut remaining = None;
        for field in s.split_whitespace() {
            let (k, v) = field
                .split_once('=')
                .ok_or_else(|| bad("expected key=value"))?;
            match k {
                "ply" => ply = v.parse().ok(),
                "player" => {
                    player = match v {
                        "ONE" => Some(Player::One),
                        "TWO" => Some(Player::Two),
                        _ => None,
                    }
                }
                "vertex" => {
                    vertex = v
                        .strip_prefix('(')
                        .and_then(|r| r.split_once(','))
                        .and_then(|(a, _)| a.parse().ok())
                }
                "remaining" => remaining = v.parse().ok(),
                _ => return Err(bad("unknown key")),
            }
        }
        match (ply, player, vertex, remaining) {
            (Some(ply), Some(player), Some(vertex), Some(remaining)) => Ok(Ply {
                ply,
                player,
                vertex,
                remaining,
            }),
            _ => Err(bad("missing or malformed field")),
        }
    }
}

/// Plays until no move is left, choosing moves by `sel`. Returns the plies
/// and the final state.
pub fn play_out(s: &GameState, sel: Selection) -> (Vec<Ply>, GameState) {
    let mut rng = match sel {
        Selection::Lowest => None,
        Selection::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
    };
    let mut cur = s.clone();
    let mut plies = Vec::new();
    loop {
        let moves = cur.legal_moves();
        let pick = match &mut rng {
            None => moves.first().copied(),
            Some(r) => moves.choose(r).copied(),
        };
        let Some(v) = pick else {
            return (plies, cur);
        };
        let player = cur.to_move;
        cur = cur.play(v).expect("legal move");
        plies.push(Ply {
            ply: plies.len() + 1,
            player,
            vertex: v,
            remaining: cur.graph.oriented_count(),
        });
    }
}

/// Replays recorded plies from `s`, checking players and counts.
pub fn replay(s: &GameState, plies: &[Ply]) -> Result<GameState> {
    let mut cur = s.clone();
    for (i, p) in plies.iter().enumerate() {
        let mismatch = |what: &str| Error::TraceSyntax {
            line: i + 1,
            message: format!("{what} differs from the replayed game"),
        };
        if p.ply != i + 1 {
            return Err(mismatch("ply number"));
        }
        if p.player != cur.to_move {
            return Err(mismatch("player"));
        }
        cur = cur.play(p.vertex)?;
        if p.remaining != cur.graph.oriented_count() {
            return Err(mismatch("remaining count"));
        }
    }
    Ok(cur)
}
