//! Signed permutations and their pointers.
//!
//! A signed permutation of length `n` is written `[a1, ..., an]`; the absolute
//! values are exactly `1..=n`. Every entry `k` carries two pointers: its tail
//! `(|k|-1, |k|)` and its head `(|k|, |k|+1)`. For a positive entry the tail
//! sits on its left and the head on its right; a negative entry swaps them.
//! The pointers `(0,1)` and `(n,n+1)` have no partner and are ignored, so each
//! permutation has the `n - 1` pointers `(i, i+1)` for `1 <= i < n`, each
//! occurring exactly twice.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};

/// The pointer `(i, i+1)`, stored by its low index `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pointer(pub u32);

impl Pointer {
    pub fn low(self) -> u32 {
        self.0
    }

    pub fn high(self) -> u32 {
        self.0 + 1
    }
}

impl fmt::Display for Pointer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.0 + 1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn of(entry: i32) -> Sign {
        if entry > 0 {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

/// Whether an occurrence is the head or the tail of its entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum End {
    Head,
    Tail,
}

/// One of the two places where a pointer occurs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PointerOccurrence {
    pub pointer: Pointer,
    /// 1-based position of the entry carrying this occurrence.
    pub entry_index: usize,
    pub side: Side,
    pub entry_sign: Sign,
    pub end: End,
}

impl PointerOccurrence {
    /// Strict total order on occurrences: `2 * entry_index + side`.
    pub fn key(&self) -> usize {
        2 * self.entry_index + usize::from(self.side == Side::Right)
    }

    /// The gap between entries that this occurrence sits on, counted as the
    /// number of entries to its left.
    pub fn cut(&self) -> usize {
        match self.side {
            Side::Left => self.entry_index - 1,
            Side::Right => self.entry_index,
        }
    }
}

/// Entries at 1-based positions `position` and `position + 1` read `x, x+1`
/// (both positive) or `-(x+1), -x` (both negative).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Adjacency {
    pub position: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPermutation {
    entries: Vec<i32>,
}

impl SignedPermutation {
    pub fn new(entries: Vec<i32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyInput);
        }
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &e in &entries {
            let token = e.to_string();
            if e == 0 {
                return Err(Error::ZeroEntry(token));
            }
            let a = e.unsigned_abs() as usize;
            if a > n {
                return Err(Error::ValueOutOfRange { token, n });
            }
            if seen[a] {
                return Err(Error::DuplicateValue {
                    token,
                    value: a as u32,
                });
            }
            seen[a] = true;
        }
        Ok(SignedPermutation { entries })
    }

    /// Skips validation; callers guarantee the entries form a signed permutation.
    pub(crate) fn from_entries_unchecked(entries: Vec<i32>) -> Self {
        debug_assert!(SignedPermutation::new(entries.clone()).is_ok());
        SignedPermutation { entries }
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "a permutation has at least one entry");
        SignedPermutation {
            entries: (1..=n as i32).collect(),
        }
    }

    pub fn reverse_identity(n: usize) -> Self {
        assert!(n >= 1, "a permutation has at least one entry");
        SignedPermutation {
            entries: (1..=n as i32).rev().map(|v| -v).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn entries(&self) -> &[i32] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<i32> {
        self.entries
    }

    /// 0-based position of the entry with absolute value `value`.
    pub fn position_of(&self, value: u32) -> usize {
        self.entries
            .iter()
            .position(|e| e.unsigned_abs() == value)
            .expect("value out of range")
    }

    /// `positions[v]` is the 0-based position of absolute value `v`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![usize::MAX; self.len() + 1];
        for (i, e) in self.entries.iter().enumerate() {
            pos[e.unsigned_abs() as usize] = i;
        }
        pos
    }

    /// The signed entry whose absolute value is `value`.
    pub fn signed_value(&self, value: u32) -> i32 {
        self.entries[self.position_of(value)]
    }

    pub fn pointers(&self) -> impl Iterator<Item = Pointer> {
        (1..self.len() as u32).map(Pointer)
    }

    pub fn check_pointer(&self, p: Pointer) -> Result<()> {
        if p.0 >= 1 && (p.0 as usize) < self.len() {
            Ok(())
        } else {
            Err(Error::PointerOutOfRange {
                pointer: p.0,
                n: self.len(),
            })
        }
    }

    /// Both occurrences of `p`, ordered by position key.
    pub fn occurrences_of(&self, p: Pointer) -> Result<[PointerOccurrence; 2]> {
        self.check_pointer(p)?;
        let pos = self.positions();
        Ok(self.occurrences_with(p, &pos))
    }

    pub(crate) fn occurrences_with(&self, p: Pointer, pos: &[usize]) -> [PointerOccurrence; 2] {
        let head = {
            let idx = pos[p.low() as usize];
            let e = self.entries[idx];
            PointerOccurrence {
                pointer: p,
                entry_index: idx + 1,
                side: if e > 0 { Side::Right } else { Side::Left },
                entry_sign: Sign::of(e),
                end: End::Head,
            }
        };
        let tail = {
            let idx = pos[p.high() as usize];
            let e = self.entries[idx];
            PointerOccurrence {
                pointer: p,
                entry_index: idx + 1,
                side: if e > 0 { Side::Left } else { Side::Right },
                entry_sign: Sign::of(e),
                end: End::Tail,
            }
        };
        if head.key() < tail.key() {
            [head, tail]
        } else {
            [tail, head]
        }
    }

    /// All `2(n-1)` pointer occurrences sorted by position key.
    pub fn pointer_occurrences(&self) -> Vec<PointerOccurrence> {
        let pos = self.positions();
        let mut occ: Vec<_> = self
            .pointers()
            .flat_map(|p| self.occurrences_with(p, &pos))
            .collect();
        occ.sort_by_key(PointerOccurrence::key);
        occ
    }

    pub fn is_identity(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(i, &e)| e == i as i32 + 1)
    }

    pub fn is_reverse_identity(&self) -> bool {
        let n = self.len() as i32;
        self.entries
            .iter()
            .enumerate()
            .all(|(i, &e)| e == -(n - i as i32))
    }

    fn adjacent_at(&self, j: usize) -> bool {
        let (a, b) = (self.entries[j], self.entries[j + 1]);
        b - a == 1 && ((a > 0 && b > 0) || (a < 0 && b < 0))
    }

    pub fn find_adjacencies(&self) -> Vec<Adjacency> {
        (0..self.len() - 1)
            .filter(|&j| self.adjacent_at(j))
            .map(|j| Adjacency { position: j + 1 })
            .collect()
    }

    /// Merges each maximal run of adjacencies into one entry and renumbers
    /// the absolute values to `1..=m`, keeping order and signs.
    pub fn collapse_adjacencies(&self) -> SignedPermutation {
        let mut runs: Vec<i32> = Vec::with_capacity(self.len());
        for j in 0..self.len() {
            if j == 0 || !self.adjacent_at(j - 1) {
                runs.push(self.entries[j]);
            } else if self.entries[j] < 0 {
                // A negative run -(x+k), ..., -x is represented by its smallest value.
                *runs.last_mut().unwrap() = self.entries[j];
            }
        }
        let mut order: Vec<usize> = (0..runs.len()).collect();
        order.sort_by_key(|&i| runs[i].unsigned_abs());
        let mut out = vec![0; runs.len()];
        for (rank, &i) in order.iter().enumerate() {
            let v = rank as i32 + 1;
            out[i] = if runs[i] > 0 { v } else { -v };
        }
        SignedPermutation { entries: out }
    }

    /// Uniformly random signed permutation of length `n`.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        assert!(n >= 1, "a permutation has at least one entry");
        let mut entries: Vec<i32> = (1..=n as i32).collect();
        entries.shuffle(rng);
        for e in &mut entries {
            if rng.gen::<bool>() {
                *e = -*e;
            }
        }
        SignedPermutation { entries }
    }

    /// Every signed permutation of length `n`, `2^n * n!` of them, in a fixed order.
    pub fn all(n: usize) -> AllSignedPermutations {
        assert!(n >= 1, "a permutation has at least one entry");
        AllSignedPermutations {
            n,
            perm: (1..=n as i32).collect(),
            signs: 0,
            done: false,
        }
    }
}

/// Iterator behind [`SignedPermutation::all`]: sign masks vary fastest,
/// unsigned arrangements advance in lexicographic order.
pub struct AllSignedPermutations {
    n: usize,
    perm: Vec<i32>,
    signs: u64,
    done: bool,
}

impl Iterator for AllSignedPermutations {
    type Item = SignedPermutation;

    fn next(&mut self) -> Option<SignedPermutation> {
        if self.done {
            return None;
        }
        let entries = self
            .perm
            .iter()
            .enumerate()
            .map(|(i, &v)| if self.signs >> i & 1 == 1 { -v } else { v })
            .collect();
        self.signs += 1;
        if self.signs == 1 << self.n {
            self.signs = 0;
            self.done = !next_permutation(&mut self.perm);
        }
        Some(SignedPermutation { entries })
    }
}

fn next_permutation(v: &mut [i32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        parse_permutation(text)
    }
}

/// Parses `[1, -5, -2]`, `1 -5 -2`, `1,-5,-2` and mixtures; brackets optional.
pub fn parse_permutation(text: &str) -> Result<SignedPermutation> {
    let mut body = text.trim_matches(|c| c == ' ' || c == '\t' || c == '\r' || c == '\n');
    if let Some(rest) = body.strip_prefix('[') {
        body = rest;
    }
    if let Some(rest) = body.strip_suffix(']') {
        body = rest;
    }
    if body.trim_matches([' ', '\t']).is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut tokens = Vec::new();
    for piece in body.split(',') {
        let mut any = false;
        for tok in piece.split([' ', '\t']).filter(|t| !t.is_empty()) {
            tokens.push(tok);
            any = true;
        }
        if !any {
            return Err(Error::InvalidToken(piece.to_string()));
        }
    }
    let mut entries = Vec::with_capacity(tokens.len());
    for tok in &tokens {
        let v: i32 = tok
            .parse()
            .map_err(|_| Error::InvalidToken(tok.to_string()))?;
        entries.push(v);
    }
    SignedPermutation::new(entries).map_err(|e| match e {
        // Report the token as written rather than its normalized form.
        Error::DuplicateValue { value, .. } => {
            let token = tokens
                .iter()
                .enumerate()
                .filter(|(_, t)| t.trim_start_matches(['+', '-']).parse::<u32>() == Ok(value))
                .map(|(_, t)| t.to_string())
                .nth(1)
                .unwrap_or_else(|| value.to_string());
            Error::DuplicateValue { token, value }
        }
        other => other,
    })
}

/// One permutation per line; blank lines and lines starting with `#` are skipped.
pub fn parse_permutation_list(text: &str) -> Result<Vec<SignedPermutation>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let p = parse_permutation(trimmed).map_err(|e| Error::AtLine {
            line: i + 1,
            source: Box::new(e),
        })?;
        out.push(p);
    }
    Ok(out)
}

/// `[-2n, ..., -4, -2, 1, 3, ..., 2n+1]`, length `2n + 1`.
pub fn sigma(n: usize) -> Result<SignedPermutation> {
    if n == 0 {
        return Err(Error::ZeroFamilyIndex);
    }
    let evens = (1..=n as i32).rev().map(|k| -2 * k);
    let odds = (0..=n as i32).map(|k| 2 * k + 1);
    Ok(SignedPermutation {
        entries: evens.chain(odds).collect(),
    })
}

/// `[-2n, ..., -4, -2, 1, 3, ..., 2n-1]`, length `2n`.
pub fn tau(n: usize) -> Result<SignedPermutation> {
    if n == 0 {
        return Err(Error::ZeroFamilyIndex);
    }
    let evens = (1..=n as i32).rev().map(|k| -2 * k);
    let odds = (0..n as i32).map(|k| 2 * k + 1);
    Ok(SignedPermutation {
        entries: evens.chain(odds).collect(),
    })
}

fn fixed(entries: &[i32]) -> SignedPermutation {
    SignedPermutation::new(entries.to_vec()).expect("fixture is a valid signed permutation")
}

/// Named permutations: ciliate gene precursors, worked examples, and members
/// of the sigma/tau families.
pub fn fixtures() -> BTreeMap<&'static str, SignedPermutation> {
    let mut m = BTreeMap::new();
    m.insert(
        "u_pisces_1",
        fixed(&[1, 3, -7, -5, 14, 2, 4, 6, 9, 12, -11, -8, 13, 15, -10]),
    );
    m.insert(
        "u_pisces_2",
        fixed(&[2, 4, 6, 9, 12, -11, -8, 13, 15, -10, 1, 3, -7, -5, 14]),
    );
    m.insert("o_nova_actin1", fixed(&[3, 5, 4, 6, 8, -2, 1, 7]));
    m.insert("alpha_tbp", fixed(&[1, 3, 5, 7, 9, 11, 2, 4, 6, 8, 10, 12]));
    m.insert("example_t", fixed(&[1, -5, -2, 4, -3, 6]));
    m.insert("example_s", fixed(&[-6, 3, -4, 2, 5, -1, 7, 9, 8, 10]));
    m.insert("example_reversal", fixed(&[-2, 1, -4, 3]));
    m.insert("example_one_component", fixed(&[3, -8, -2, 5, 1, -7, 4, 6]));
    m.insert("example_maxseq", fixed(&[1, 3, 5, -2, -6, 4]));
    m.insert("example_cds", fixed(&[3, 6, 5, 2, 4, 8, 1, 7]));
    m.insert("sigma_16", sigma(16).unwrap());
    m.insert("sigma_20", sigma(20).unwrap());
    m.insert("sigma_21", sigma(21).unwrap());
    m.insert("tau_21", tau(21).unwrap());
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(text: &str) -> SignedPermutation {
        text.parse().unwrap()
    }

    #[test]
    fn parses_bracketed_and_bare_forms() {
        assert_eq!(p("[1, -5, -2, 4, -3, 6]").entries(), &[1, -5, -2, 4, -3, 6]);
        assert_eq!(p("1").entries(), &[1]);
        assert_eq!(p("  2 -1 ").entries(), &[2, -1]);
        assert_eq!(p("[2,-1]").entries(), &[2, -1]);
        assert_eq!(p("2 ,  -1").entries(), &[2, -1]);
    }

    #[test]
    fn parse_errors_name_the_token() {
        assert_eq!(
            parse_permutation("[1, 1]"),
            Err(Error::DuplicateValue {
                token: "1".into(),
                value: 1
            })
        );
        assert_eq!(
            parse_permutation("[2, -2]"),
            Err(Error::DuplicateValue {
                token: "-2".into(),
                value: 2
            })
        );
        assert_eq!(parse_permutation("[]"), Err(Error::EmptyInput));
        assert_eq!(parse_permutation("   "), Err(Error::EmptyInput));
        assert_eq!(parse_permutation("1, 0"), Err(Error::ZeroEntry("0".into())));
        assert_eq!(
            parse_permutation("1, 3"),
            Err(Error::ValueOutOfRange {
                token: "3".into(),
                n: 2
            })
        );
        assert_eq!(
            parse_permutation("1, x"),
            Err(Error::InvalidToken("x".into()))
        );
        assert!(matches!(
            parse_permutation("1,,2"),
            Err(Error::InvalidToken(_))
        ));
        assert!(matches!(
            parse_permutation("1\n2"),
            Err(Error::InvalidToken(_))
        ));
    }

    #[test]
    fn list_parsing_skips_comments_and_reports_lines() {
        let text = "# header\n[1, 2]\n\n  # indented comment\n-1\n";
        let perms = parse_permutation_list(text).unwrap();
        assert_eq!(perms, vec![p("[1,2]"), p("[-1]")]);
        match parse_permutation_list("[1]\n[1, 1]\n") {
            Err(Error::AtLine { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn occurrences_follow_the_side_rule() {
        let perm = p("[-2, 1, -4, 3]");
        let [a, b] = perm.occurrences_of(Pointer(2)).unwrap();
        assert_eq!((a.entry_index, a.side, a.end), (1, Side::Left, End::Head));
        assert_eq!((b.entry_index, b.side, b.end), (4, Side::Left, End::Tail));
        assert_eq!(a.entry_sign, Sign::Negative);
        assert_eq!(b.entry_sign, Sign::Positive);
        assert!(p("[1]").pointer_occurrences().is_empty());
        assert!(perm.occurrences_of(Pointer(4)).is_err());
        assert!(perm.occurrences_of(Pointer(0)).is_err());
    }

    #[test]
    fn arcs_of_example_t() {
        // (entry, side) pairs read off the arc drawing for T.
        let perm = p("[1, -5, -2, 4, -3, 6]");
        let expect = [
            (1, (1, Side::Right), (3, Side::Right)),
            (2, (3, Side::Left), (5, Side::Right)),
            (3, (4, Side::Left), (5, Side::Left)),
            (4, (2, Side::Right), (4, Side::Right)),
            (5, (2, Side::Left), (6, Side::Left)),
        ];
        for (ptr, first, second) in expect {
            let [a, b] = perm.occurrences_of(Pointer(ptr)).unwrap();
            assert_eq!((a.entry_index, a.side), first, "pointer {ptr}");
            assert_eq!((b.entry_index, b.side), second, "pointer {ptr}");
        }
    }

    #[test]
    fn identity_predicates() {
        assert!(p("[1,2,3]").is_identity());
        assert!(!p("[1,2,3]").is_reverse_identity());
        assert!(p("[-8,-7,-6,-5,-4,-3,-2,-1]").is_reverse_identity());
        let q = p("[-2, 1]");
        assert!(!q.is_identity() && !q.is_reverse_identity());
        assert!(p("[-1]").is_reverse_identity());
    }

    #[test]
    fn adjacency_collapse() {
        assert_eq!(p("[1,2,3]").collapse_adjacencies(), p("[1]"));
        assert_eq!(p("[3,4,1,2]").collapse_adjacencies(), p("[2,1]"));
        let q = p("[-2, 1, -4, 3]");
        assert!(q.find_adjacencies().is_empty());
        assert_eq!(q.collapse_adjacencies(), q);
        assert_eq!(
            p("[-8,-7,-6,-4,-5,-3,-2,-1]").find_adjacencies(),
            vec![
                Adjacency { position: 1 },
                Adjacency { position: 2 },
                Adjacency { position: 6 },
                Adjacency { position: 7 }
            ]
        );
        assert_eq!(p("[-3,-2,-1]").collapse_adjacencies(), p("[-1]"));
        assert_eq!(p("[-1,-2]").collapse_adjacencies(), p("[-1,-2]"));
        assert_eq!(
            p("[5, -4, -3, 1, 2]").collapse_adjacencies(),
            p("[3, -2, 1]")
        );
    }

    #[test]
    fn families() {
        assert_eq!(sigma(1).unwrap(), p("[-2, 1, 3]"));
        assert_eq!(tau(1).unwrap(), p("[-2, 1]"));
        assert_eq!(sigma(2).unwrap(), p("[-4, -2, 1, 3, 5]"));
        assert_eq!(tau(2).unwrap(), p("[-4, -2, 1, 3]"));
        assert_eq!(sigma(0), Err(Error::ZeroFamilyIndex));
        assert_eq!(tau(0), Err(Error::ZeroFamilyIndex));
        for n in 1..=1000 {
            let s = sigma(n).unwrap();
            let t = tau(n).unwrap();
            assert_eq!(s.len(), 2 * n + 1);
            assert_eq!(t.len(), 2 * n);
            assert!(SignedPermutation::new(s.into_entries()).is_ok());
            assert!(SignedPermutation::new(t.into_entries()).is_ok());
        }
    }

    #[test]
    fn fixture_table() {
        let f = fixtures();
        assert_eq!(f["o_nova_actin1"], p("[3,5,4,6,8,-2,1,7]"));
        assert_eq!(
            f["u_pisces_1"],
            p("[1,3,-7,-5,14,2,4,6,9,12,-11,-8,13,15,-10]")
        );
        assert_eq!(
            f["u_pisces_2"],
            p("[2,4,6,9,12,-11,-8,13,15,-10,1,3,-7,-5,14]")
        );
        assert_eq!(f["alpha_tbp"], p("[1,3,5,7,9,11,2,4,6,8,10,12]"));
        assert_eq!(f["sigma_16"].len(), 33);
        assert_eq!(f["sigma_20"].len(), 41);
        assert_eq!(f["sigma_21"].len(), 43);
        assert_eq!(f["tau_21"].len(), 42);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(SignedPermutation::all(1).count(), 2);
        assert_eq!(SignedPermutation::all(3).count(), 48);
        let all: std::collections::HashSet<_> = SignedPermutation::all(4).collect();
        assert_eq!(all.len(), 384);
    }

    fn arb_perm() -> impl Strategy<Value = SignedPermutation> {
        (1usize..40, any::<u64>()).prop_map(|(n, seed)| {
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            SignedPermutation::random(n, &mut rng)
        })
    }

    proptest! {
        #[test]
        fn format_parse_round_trip(perm in arb_perm()) {
            prop_assert_eq!(perm.to_string().parse::<SignedPermutation>().unwrap(), perm);
        }

        #[test]
        fn occurrences_are_paired_and_strictly_ordered(perm in arb_perm()) {
            let occ = perm.pointer_occurrences();
            prop_assert_eq!(occ.len(), 2 * (perm.len() - 1));
            prop_assert!(occ.windows(2).all(|w| w[0].key() < w[1].key()));
            let mut count = vec![0; perm.len()];
            for o in &occ {
                count[o.pointer.0 as usize] += 1;
            }
            prop_assert!(count[1..].iter().all(|&c| c == 2));
        }

        #[test]
        fn collapse_leaves_no_adjacency(perm in arb_perm()) {
            let c = perm.collapse_adjacencies();
            prop_assert!(SignedPermutation::new(c.entries().to_vec()).is_ok());
            prop_assert!(c.find_adjacencies().is_empty());
            prop_assert_eq!(c.len(), perm.len() - perm.find_adjacencies().len());
        }
    }
}
