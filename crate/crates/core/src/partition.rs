//! Integer partitions, set partitions, and the growth-word correspondence.
//!
//! A [`Partition`] is a non-increasing sequence of positive integers; inputs
//! are normalized by sorting and dropping zeros. A [`SetPartition`] splits
//! `{1..n}` into disjoint blocks ordered by least element, and corresponds
//! bijectively to a restricted-growth word ([`RgsWord`]): position `i`
//! carries the `k`-th letter exactly when `i` lies in the `k`-th block, so
//! `{1,3,5|2,4}` reads "ababa". Enumeration of all set partitions walks the
//! growth words in lexicographic order.

use std::fmt;

use crate::word::{Alphabet, Letter, Word};

/// Errors from partition parsing, validation, and enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartitionError {
    /// A part failed to parse as a positive integer.
    BadPart(String),
    /// Set-partition text did not match `{a,b|c,d}` notation.
    BadBlockFormat(String),
    /// A block was empty.
    EmptyBlock,
    /// An element appeared in two blocks (or twice in one).
    DuplicateElement(usize),
    /// An element lies outside `{1..n}`.
    OutOfRange { element: usize, n: usize },
    /// Some element of `{1..n}` is in no block.
    NotCovering { missing: usize },
    /// The word violates the restricted-growth property at this 1-based position.
    NotRestrictedGrowth { position: usize },
    /// Enumeration size outside the supported `1..=12`.
    CountOutOfRange { n: usize },
}

impl fmt::Display for PartitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionError::BadPart(s) => write!(f, "cannot parse part '{s}'"),
            PartitionError::BadBlockFormat(s) => {
                write!(f, "cannot parse set partition '{s}'; expected {{1,3|2}} notation")
            }
            PartitionError::EmptyBlock => write!(f, "blocks must be nonempty"),
            PartitionError::DuplicateElement(x) => write!(f, "element {x} appears twice"),
            PartitionError::OutOfRange { element, n } => {
                write!(f, "element {element} outside ground set 1..={n}")
            }
            PartitionError::NotCovering { missing } => {
                write!(f, "element {missing} is in no block")
            }
            PartitionError::NotRestrictedGrowth { position } => {
                write!(f, "restricted-growth property fails at position {position}")
            }
            PartitionError::CountOutOfRange { n } => {
                write!(f, "set-partition enumeration supports n in 1..=12, got {n}")
            }
        }
    }
}

impl std::error::Error for PartitionError {}

/// A non-increasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Normalizing constructor: sorts descending and drops zeros, so any
    /// multiset of non-negative integers is accepted.
    pub fn new(parts: impl IntoIterator<Item = u64>) -> Partition {
        let mut parts: Vec<u64> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// The empty partition (the unique partition of 0).
    pub fn empty() -> Partition {
        Partition { parts: Vec::new() }
    }

    /// Parses comma-separated parts; "0" and "" both denote the empty partition.
    pub fn parse(s: &str) -> Result<Partition, PartitionError> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in s.split(',') {
            let piece = piece.trim();
            let p: u64 = piece.parse().map_err(|_| PartitionError::BadPart(piece.to_string()))?;
            if p == 0 {
                return Err(PartitionError::BadPart(piece.to_string()));
            }
            parts.push(p);
        }
        Ok(Partition::new(parts))
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of parts.
    pub fn weight(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u64 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Containment of Young diagrams: every part of `inner` fits inside the
    /// corresponding part of `self`.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.parts.iter().enumerate().all(|(i, &p)| p <= self.part(i))
    }

    /// True iff no part is divisible by `k`. Panics for `k < 2`, where the
    /// question is vacuous.
    pub fn is_k_regular(&self, k: u64) -> bool {
        assert!(k >= 2, "regularity needs k >= 2");
        self.parts.iter().all(|&p| p % k != 0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let strings: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strings.join(","))
    }
}

/// A partition of `{1..n}` into disjoint nonempty blocks, ordered by least
/// element, each block sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Validates and normalizes: blocks are sorted internally and ordered by
    /// their least elements; they must be disjoint, nonempty, and cover `{1..n}`.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<SetPartition, PartitionError> {
        let mut seen = vec![false; n + 1];
        let mut blocks: Vec<Vec<usize>> = blocks;
        for block in &mut blocks {
            if block.is_empty() {
                return Err(PartitionError::EmptyBlock);
            }
            block.sort_unstable();
            for &x in block.iter() {
                if x < 1 || x > n {
                    return Err(PartitionError::OutOfRange { element: x, n });
                }
                if seen[x] {
                    return Err(PartitionError::DuplicateElement(x));
                }
                seen[x] = true;
            }
        }
        if let Some(missing) = (1..=n).find(|&x| !seen[x]) {
            return Err(PartitionError::NotCovering { missing });
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { n, blocks })
    }

    /// Parses block notation `{1,3,5|2,4}`; the ground-set size is the total
    /// element count.
    pub fn parse(s: &str) -> Result<SetPartition, PartitionError> {
        let t = s.trim();
        let inner = t
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| PartitionError::BadBlockFormat(s.to_string()))?;
        let mut blocks = Vec::new();
        let mut n = 0usize;
        for part in inner.split('|') {
            let mut block = Vec::new();
            for piece in part.split(',') {
                let piece = piece.trim();
                let x: usize =
                    piece.parse().map_err(|_| PartitionError::BadBlockFormat(s.to_string()))?;
                block.push(x);
                n += 1;
            }
            blocks.push(block);
        }
        SetPartition::new(n, blocks)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Index of the block containing `x` (0-based), or `None` outside `{1..n}`.
    pub fn block_of(&self, x: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.binary_search(&x).is_ok())
    }

    /// Block sizes as a partition of `n`.
    pub fn block_sizes(&self) -> Partition {
        Partition::new(self.blocks.iter().map(|b| b.len() as u64))
    }

    /// The corresponding restricted-growth word: position `i` carries the
    /// `k`-th letter iff `i` lies in block `k`. Supports up to 26 blocks
    /// (letters a..z).
    pub fn to_word(&self) -> RgsWord {
        assert!(self.blocks.len() <= 26, "growth words support at most 26 blocks");
        let alphabet = Alphabet::latin(self.blocks.len().max(1));
        let letters = (1..=self.n)
            .map(|i| Letter {
                index: self.block_of(i).expect("blocks cover the ground set"),
                inverse: false,
            })
            .collect();
        let word = Word::from_letters(&alphabet, letters).expect("indices in range");
        RgsWord { word }
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{{{}}}", blocks.join("|"))
    }
}

/// A word whose letters first occur in alphabetical order: the first letter
/// is the alphabet's first, and each new letter is exactly one past the
/// largest seen so far.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RgsWord {
    word: Word,
}

impl RgsWord {
    /// Validates the restricted-growth property, reporting the first
    /// violating position (1-based) on failure.
    pub fn new(word: Word) -> Result<RgsWord, PartitionError> {
        let mut max_seen: Option<usize> = None;
        for (i, l) in word.letters().iter().enumerate() {
            let limit = max_seen.map_or(0, |m| m + 1);
            if l.inverse || l.index > limit {
                return Err(PartitionError::NotRestrictedGrowth { position: i + 1 });
            }
            max_seen = Some(max_seen.map_or(l.index, |m| m.max(l.index)));
        }
        Ok(RgsWord { word })
    }

    /// Parses over the lowercase latin alphabet.
    pub fn parse(s: &str) -> Result<RgsWord, PartitionError> {
        let distinct = s.chars().filter(|c| !c.is_whitespace()).count().max(1).min(26);
        let alphabet = Alphabet::latin(distinct);
        let word = Word::parse(&alphabet, s).map_err(|_| {
            // Report the first position whose letter cannot even be indexed.
            let bad = s
                .chars()
                .filter(|c| !c.is_whitespace())
                .position(|c| alphabet.index_of(c).is_none())
                .map_or(1, |p| p + 1);
            PartitionError::NotRestrictedGrowth { position: bad }
        })?;
        RgsWord::new(word)
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// The corresponding set partition: element `i` joins the block named by
    /// the letter at position `i`.
    pub fn to_set_partition(&self) -> SetPartition {
        let n = self.word.len();
        let block_count = self
            .word
            .letters()
            .iter()
            .map(|l| l.index + 1)
            .max()
            .unwrap_or(0);
        let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); block_count];
        for (i, l) in self.word.letters().iter().enumerate() {
            blocks[l.index].push(i + 1);
        }
        SetPartition::new(n, blocks).expect("growth words induce valid partitions")
    }
}

impl fmt::Display for RgsWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word)
    }
}

/// Iterator over all set partitions of `{1..n}` in lexicographic order of
/// their growth words.
pub struct SetPartitionIter {
    n: usize,
    /// Growth string g with g[0] = 0 and g[i] <= max(g[..i]) + 1.
    state: Option<Vec<usize>>,
}

impl Iterator for SetPartitionIter {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        let g = self.state.as_mut()?;
        let alphabet = Alphabet::latin(self.n.min(26).max(1));
        let letters = g.iter().map(|&k| Letter { index: k, inverse: false }).collect();
        let word = Word::from_letters(&alphabet, letters).expect("indices below n");
        let current = RgsWord { word }.to_set_partition();

        // Advance to the lexicographic successor: bump the rightmost position
        // that can still grow, reset everything after it to 0.
        let mut i = self.n;
        loop {
            if i <= 1 {
                self.state = None;
                break;
            }
            i -= 1;
            let cap = g[..i].iter().copied().max().unwrap_or(0) + 1;
            if g[i] < cap {
                g[i] += 1;
                for x in g[i + 1..].iter_mut() {
                    *x = 0;
                }
                break;
            }
        }
        Some(current)
    }
}

/// All set partitions of `{1..n}`, one per growth word, lexicographically.
/// Supports `1 <= n <= 12`.
pub fn enumerate_set_partitions(n: usize) -> Result<SetPartitionIter, PartitionError> {
    if !(1..=12).contains(&n) {
        return Err(PartitionError::CountOutOfRange { n });
    }
    Ok(SetPartitionIter { n, state: Some(vec![0; n]) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_parse_normalizes() {
        let p = Partition::parse("3,5,3,1").unwrap();
        assert_eq!(p.parts(), [5, 3, 3, 1]);
        assert_eq!(p.to_string(), "5,3,3,1");
        assert_eq!(p.weight(), 12);
        assert_eq!(p.len(), 4);
        assert_eq!(Partition::parse("0").unwrap(), Partition::empty());
        assert_eq!(Partition::empty().to_string(), "0");
        assert!(Partition::parse("3,x").is_err());
    }

    #[test]
    fn partition_containment() {
        let outer = Partition::parse("4,2,1").unwrap();
        assert!(outer.contains(&Partition::parse("2,1").unwrap()));
        assert!(outer.contains(&Partition::empty()));
        assert!(!outer.contains(&Partition::parse("4,3").unwrap()));
        assert!(!outer.contains(&Partition::parse("1,1,1,1").unwrap()));
    }

    #[test]
    fn k_regular_examples() {
        assert!(Partition::parse("5,3,3,1").unwrap().is_k_regular(2));
        assert!(!Partition::parse("4,2").unwrap().is_k_regular(2));
        assert!(!Partition::parse("3,1").unwrap().is_k_regular(3));
    }

    #[test]
    fn partition_to_word_examples() {
        let sp = SetPartition::parse("{1,3,5|2,4}").unwrap();
        assert_eq!(sp.to_word().to_string(), "ababa");
        assert_eq!(SetPartition::parse("{1|2|3}").unwrap().to_word().to_string(), "abc");
        assert_eq!(SetPartition::parse("{1,2,3}").unwrap().to_word().to_string(), "aaa");
    }

    #[test]
    fn word_to_partition_examples() {
        assert_eq!(
            RgsWord::parse("ababa").unwrap().to_set_partition().to_string(),
            "{1,3,5|2,4}"
        );
        assert_eq!(RgsWord::parse("aa").unwrap().to_set_partition().to_string(), "{1,2}");
        assert_eq!(RgsWord::parse("aba").unwrap().to_set_partition().to_string(), "{1,3|2}");
    }

    #[test]
    fn non_growth_words_report_first_violation() {
        assert_eq!(
            RgsWord::parse("ba").unwrap_err(),
            PartitionError::NotRestrictedGrowth { position: 1 }
        );
        assert_eq!(
            RgsWord::parse("abd").unwrap_err(),
            PartitionError::NotRestrictedGrowth { position: 3 }
        );
        assert_eq!(
            RgsWord::parse("aacb").unwrap_err(),
            PartitionError::NotRestrictedGrowth { position: 3 }
        );
    }

    #[test]
    fn set_partition_validation() {
        assert_eq!(
            SetPartition::new(3, vec![vec![1, 2], vec![2, 3]]).unwrap_err(),
            PartitionError::DuplicateElement(2)
        );
        assert_eq!(
            SetPartition::new(3, vec![vec![1, 2]]).unwrap_err(),
            PartitionError::NotCovering { missing: 3 }
        );
        assert_eq!(
            SetPartition::new(2, vec![vec![1, 2], vec![]]).unwrap_err(),
            PartitionError::EmptyBlock
        );
        assert_eq!(
            SetPartition::new(2, vec![vec![1, 5]]).unwrap_err(),
            PartitionError::OutOfRange { element: 5, n: 2 }
        );
        // Normalization orders blocks by least element.
        let sp = SetPartition::new(4, vec![vec![4, 2], vec![3, 1]]).unwrap();
        assert_eq!(sp.to_string(), "{1,3|2,4}");
    }

    #[test]
    fn enumerate_small_counts() {
        assert_eq!(enumerate_set_partitions(1).unwrap().count(), 1);
        let three: Vec<String> =
            enumerate_set_partitions(3).unwrap().map(|sp| sp.to_word().to_string()).collect();
        assert_eq!(three, ["aaa", "aab", "aba", "abb", "abc"]);
        assert_eq!(enumerate_set_partitions(5).unwrap().count(), 52);
        assert!(enumerate_set_partitions(0).is_err());
        assert!(enumerate_set_partitions(13).is_err());
    }

    /// Independent count oracle: the additive triangle whose rows start with
    /// the previous row's last entry; row n ends with the number of set
    /// partitions of {1..n}.
    fn triangle_count(n: usize) -> u64 {
        let mut row = vec![1u64];
        for _ in 1..n {
            let mut next = vec![*row.last().unwrap()];
            for &x in &row {
                let last = *next.last().unwrap();
                next.push(last + x);
            }
            row = next;
        }
        *row.last().unwrap()
    }

    #[test]
    fn enumeration_counts_match_triangle_oracle() {
        let expected = [1u64, 2, 5, 15, 52, 203, 877, 4140];
        for n in 1..=8usize {
            assert_eq!(triangle_count(n), expected[n - 1]);
            assert_eq!(
                enumerate_set_partitions(n).unwrap().count() as u64,
                expected[n - 1],
                "n = {n}"
            );
        }
    }

    #[test]
    fn roundtrip_is_identity_both_ways() {
        for n in 1..=8usize {
            for sp in enumerate_set_partitions(n).unwrap() {
                let w = sp.to_word();
                assert_eq!(w.to_set_partition(), sp);
                // The reverse composition on the word side.
                let revalidated = RgsWord::parse(&w.to_string()).unwrap();
                assert_eq!(revalidated.to_set_partition().to_word().to_string(), w.to_string());
            }
        }
    }

    #[test]
    fn emitted_partitions_satisfy_block_ordering() {
        for sp in enumerate_set_partitions(6).unwrap() {
            for pair in sp.blocks().windows(2) {
                assert!(pair[0][0] < pair[1][0]);
            }
            for block in sp.blocks() {
                assert!(!block.is_empty());
                assert!(block.windows(2).all(|p| p[0] < p[1]));
            }
        }
    }

    #[test]
    fn enumeration_is_lexicographic_in_growth_words() {
        let words: Vec<String> =
            enumerate_set_partitions(5).unwrap().map(|sp| sp.to_word().to_string()).collect();
        let mut sorted = words.clone();
        sorted.sort();
        assert_eq!(words, sorted);
        let mut dedup = words.clone();
        dedup.dedup();
        assert_eq!(dedup.len(), words.len());
    }
}
