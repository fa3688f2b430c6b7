//! Context-free grammars: exact counting by length, seeded uniform word
//! generation, built-in block-pattern languages, and pattern-occurrence
//! distributions.
//!
//! Counting runs a memoized dynamic program over (nonterminal, length) and
//! (production suffix, length). The program counts parse trees, so grammars
//! are usable for word counting and sampling only when unambiguous; this is
//! checked at construction of a [`CountTable`] by comparing tree counts with
//! brute-force word enumeration at small lengths. Grammars that can derive a
//! nonterminal from itself without consuming input (for example `S -> S` or
//! `S -> A S` with nullable `A`) have infinitely many trees per word and are
//! rejected.
//!
//! Sampling picks each production, and each split of the remaining length,
//! with probability proportional to the number of completions, which makes
//! every word of the target length exactly equally likely. All randomness
//! flows through the crate's seeded generator, so a seed fully determines
//! the output.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use num::{BigRational, BigUint, One, Zero};

use crate::rng::{seeded, uniform_below, SeededRng};
use crate::word::{Alphabet, Letter, Word};

const MAX_COUNT_LENGTH: usize = 64;
const AMBIGUITY_CHECK_LENGTH: usize = 10;
const MAX_EXACT_WORDS: u64 = 1 << 24;

/// Errors from grammar parsing, counting, sampling, and distributions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GrammarError {
    /// A line did not match `Head -> body | body`.
    BadProduction(String),
    /// A body token is neither a declared head nor a single-letter terminal.
    UnknownSymbol(String),
    /// The grammar text declared no productions.
    NoProductions,
    /// The nonterminal derives itself without consuming input, so every word
    /// it yields has infinitely many derivations.
    CyclicDerivation { nonterminal: String },
    /// Some word of this length has more than one parse tree; counting and
    /// sampling are defined for unambiguous grammars only.
    Ambiguous { length: usize, words: u64, trees: u64 },
    /// Lengths are capped at 64.
    LengthTooLarge { n: usize },
    /// The grammar derives no word of this length.
    NoWordsOfLength { n: usize },
    /// Exact tallying would enumerate more than 2^24 words.
    ExactOverflow,
    /// Pattern matching needs a nonempty pattern.
    EmptyPattern,
    /// The operands are over different alphabets.
    AlphabetMismatch,
    /// A letter outside the expected alphabet.
    UnknownLetter(char),
}

impl fmt::Display for GrammarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GrammarError::BadProduction(line) => write!(f, "cannot parse production '{line}'"),
            GrammarError::UnknownSymbol(tok) => {
                write!(f, "'{tok}' is neither a nonterminal nor a single-letter terminal")
            }
            GrammarError::NoProductions => write!(f, "grammar has no productions"),
            GrammarError::CyclicDerivation { nonterminal } => {
                write!(f, "'{nonterminal}' derives itself without consuming input")
            }
            GrammarError::Ambiguous { length, words, trees } => write!(
                f,
                "grammar is ambiguous: {trees} parse trees but {words} distinct words at length {length}"
            ),
            GrammarError::LengthTooLarge { n } => {
                write!(f, "length {n} exceeds the supported maximum {MAX_COUNT_LENGTH}")
            }
            GrammarError::NoWordsOfLength { n } => {
                write!(f, "the grammar derives no word of length {n}")
            }
            GrammarError::ExactOverflow => {
                write!(f, "exact tallying would enumerate more than 2^24 words")
            }
            GrammarError::EmptyPattern => write!(f, "pattern must be nonempty"),
            GrammarError::AlphabetMismatch => write!(f, "operands use different alphabets"),
            GrammarError::UnknownLetter(c) => write!(f, "unexpected letter '{c}'"),
        }
    }
}

impl std::error::Error for GrammarError {}

/// A body symbol: terminal letter index or nonterminal index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Symbol {
    Terminal(usize),
    Nonterminal(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Production {
    head: usize,
    body: Vec<Symbol>,
}

/// A context-free grammar over single-character terminals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grammar {
    nonterminals: Vec<String>,
    terminals: Alphabet,
    productions: Vec<Production>,
    start: usize,
    /// Shortest terminal yield per nonterminal; `None` when the language is
    /// empty from that symbol.
    min_yield: Vec<Option<usize>>,
}

impl Grammar {
    /// Parses one production group per line: `S -> a S b | ;` with `;` for
    /// the empty body and `#` starting a comment line. The first head is the
    /// start symbol; a body token is a nonterminal iff it appears as a head.
    pub fn parse(text: &str) -> Result<Grammar, GrammarError> {
        let mut lines: Vec<(String, String)> = Vec::new();
        for raw in text.lines() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (head, rest) = line
                .split_once("->")
                .ok_or_else(|| GrammarError::BadProduction(line.to_string()))?;
            let head = head.trim();
            if head.is_empty() || head.contains(char::is_whitespace) {
                return Err(GrammarError::BadProduction(line.to_string()));
            }
            lines.push((head.to_string(), rest.to_string()));
        }
        if lines.is_empty() {
            return Err(GrammarError::NoProductions);
        }

        let mut nonterminals: Vec<String> = Vec::new();
        for (head, _) in &lines {
            if !nonterminals.contains(head) {
                nonterminals.push(head.clone());
            }
        }

        // Terminals in order of first appearance.
        let mut letters = String::new();
        let mut productions: Vec<(usize, Vec<String>)> = Vec::new();
        for (head, rest) in &lines {
            let head_idx = nonterminals.iter().position(|h| h == head).unwrap();
            for alt in rest.split('|') {
                let tokens: Vec<String> =
                    alt.split_whitespace().map(|t| t.to_string()).collect();
                if tokens.is_empty() {
                    return Err(GrammarError::BadProduction(format!("{head} -> {}", alt.trim())));
                }
                let body = if tokens == [";"] { Vec::new() } else { tokens };
                if body.iter().any(|t| t == ";") {
                    return Err(GrammarError::BadProduction(format!(
                        "{head} -> {}",
                        alt.trim()
                    )));
                }
                for tok in &body {
                    if nonterminals.contains(tok) {
                        continue;
                    }
                    let mut chars = tok.chars();
                    match (chars.next(), chars.next()) {
                        (Some(c), None) => {
                            if !letters.contains(c) {
                                letters.push(c);
                            }
                        }
                        _ => return Err(GrammarError::UnknownSymbol(tok.clone())),
                    }
                }
                productions.push((head_idx, body));
            }
        }
        let terminals = Alphabet::plain(if letters.is_empty() { "a" } else { &letters })
            .expect("letters deduplicated");

        let productions: Vec<Production> = productions
            .into_iter()
            .map(|(head, body)| Production {
                head,
                body: body
                    .iter()
                    .map(|tok| match nonterminals.iter().position(|h| h == tok) {
                        Some(i) => Symbol::Nonterminal(i),
                        None => Symbol::Terminal(
                            terminals
                                .index_of(tok.chars().next().expect("single char"))
                                .expect("letter registered above"),
                        ),
                    })
                    .collect(),
            })
            .collect();

        let min_yield = compute_min_yield(nonterminals.len(), &productions);
        Ok(Grammar { nonterminals, terminals, productions, start: 0, min_yield })
    }

    pub fn terminals(&self) -> &Alphabet {
        &self.terminals
    }

    pub fn nonterminals(&self) -> &[String] {
        &self.nonterminals
    }

    pub fn start_symbol(&self) -> &str {
        &self.nonterminals[self.start]
    }

    /// Distinct words of length exactly `n`, in sorted order, by bounded
    /// leftmost expansion. Guarded by the 2^24 exact-enumeration cap.
    pub fn words_of_length(&self, n: usize) -> Result<Vec<Word>, GrammarError> {
        if n > MAX_COUNT_LENGTH {
            return Err(GrammarError::LengthTooLarge { n });
        }
        let per_length = self.enumerate_words(n)?;
        Ok(per_length[n]
            .iter()
            .map(|seq| self.word_from_indices(seq))
            .collect())
    }

    fn word_from_indices(&self, seq: &[usize]) -> Word {
        let letters = seq.iter().map(|&i| Letter { index: i, inverse: false }).collect();
        Word::from_letters(&self.terminals, letters).expect("terminal indices are in range")
    }

    /// Distinct words per length 0..=max, as terminal index sequences.
    fn enumerate_words(&self, max: usize) -> Result<Vec<BTreeSet<Vec<usize>>>, GrammarError> {
        let mut out: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::new(); max + 1];
        let start_min = match self.min_yield[self.start] {
            Some(m) => m,
            None => return Ok(out), // empty language
        };
        if start_min > max {
            return Ok(out);
        }
        let mut total: u64 = 0;
        // States: (emitted terminal prefix, remaining symbols), expanding the
        // leftmost nonterminal only, pruned by shortest-yield bounds.
        let initial = (Vec::new(), vec![Symbol::Nonterminal(self.start)]);
        let mut seen: HashSet<(Vec<usize>, Vec<Symbol>)> = HashSet::new();
        let mut queue: VecDeque<(Vec<usize>, Vec<Symbol>)> = VecDeque::new();
        seen.insert(initial.clone());
        queue.push_back(initial);
        while let Some((prefix, symbols)) = queue.pop_front() {
            match symbols.first() {
                None => {
                    if out[prefix.len()].insert(prefix) {
                        total += 1;
                        if total > MAX_EXACT_WORDS {
                            return Err(GrammarError::ExactOverflow);
                        }
                    }
                }
                Some(Symbol::Terminal(t)) => {
                    let mut prefix = prefix;
                    prefix.push(*t);
                    let rest = symbols[1..].to_vec();
                    if self.feasible(&prefix, &rest, max) {
                        let state = (prefix, rest);
                        if seen.insert(state.clone()) {
                            queue.push_back(state);
                        }
                    }
                }
                Some(Symbol::Nonterminal(a)) => {
                    for prod in self.productions.iter().filter(|p| p.head == *a) {
                        let mut rest = prod.body.clone();
                        rest.extend_from_slice(&symbols[1..]);
                        if self.feasible(&prefix, &rest, max) {
                            let state = (prefix.clone(), rest);
                            if seen.insert(state.clone()) {
                                queue.push_back(state);
                            }
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Can this state still produce a word within the length bound?
    fn feasible(&self, prefix: &[usize], symbols: &[Symbol], max: usize) -> bool {
        let mut need = prefix.len();
        for s in symbols {
            need += match s {
                Symbol::Terminal(_) => 1,
                Symbol::Nonterminal(a) => match self.min_yield[*a] {
                    Some(m) => m,
                    None => return false,
                },
            };
            if need > max {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for Grammar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, nt) in self.nonterminals.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let alts: Vec<String> = self
                .productions
                .iter()
                .filter(|p| p.head == i)
                .map(|p| {
                    if p.body.is_empty() {
                        ";".to_string()
                    } else {
                        p.body
                            .iter()
                            .map(|s| match s {
                                Symbol::Terminal(t) => {
                                    self.terminals.letters()[*t].to_string()
                                }
                                Symbol::Nonterminal(a) => self.nonterminals[*a].clone(),
                            })
                            .collect::<Vec<_>>()
                            .join(" ")
                    }
                })
                .collect();
            write!(f, "{} -> {}", nt, alts.join(" | "))?;
        }
        Ok(())
    }
}

/// Shortest terminal yield per nonterminal by fixpoint iteration.
fn compute_min_yield(nts: usize, productions: &[Production]) -> Vec<Option<usize>> {
    let mut min: Vec<Option<usize>> = vec![None; nts];
    loop {
        let mut changed = false;
        for p in productions {
            let mut len = 0usize;
            let mut ok = true;
            for s in &p.body {
                match s {
                    Symbol::Terminal(_) => len += 1,
                    Symbol::Nonterminal(a) => match min[*a] {
                        Some(m) => len += m,
                        None => {
                            ok = false;
                            break;
                        }
                    },
                }
            }
            if ok && min[p.head].map_or(true, |cur| len < cur) {
                min[p.head] = Some(len);
                changed = true;
            }
        }
        if !changed {
            return min;
        }
    }
}

/// Exact parse-tree counts for one grammar up to a maximum length, plus the
/// suffix tables the uniform sampler consumes. Construction fails for
/// grammars with consumption-free derivation cycles and for grammars found
/// ambiguous at small lengths.
pub struct CountTable<'g> {
    grammar: &'g Grammar,
    max_len: usize,
    nt: HashMap<(usize, usize), BigUint>,
    suffix: HashMap<(usize, usize, usize), BigUint>,
}

impl<'g> CountTable<'g> {
    pub fn build(grammar: &'g Grammar, max_len: usize) -> Result<CountTable<'g>, GrammarError> {
        if max_len > MAX_COUNT_LENGTH {
            return Err(GrammarError::LengthTooLarge { n: max_len });
        }
        let mut table = CountTable {
            grammar,
            max_len,
            nt: HashMap::new(),
            suffix: HashMap::new(),
        };
        let check_to = max_len.max(AMBIGUITY_CHECK_LENGTH).min(MAX_COUNT_LENGTH);
        let mut active = HashSet::new();
        for n in 0..=check_to {
            table.count_nt(grammar.start, n, &mut active)?;
        }
        // Tree counts agree with distinct-word counts on an unambiguous
        // grammar; any excess at small lengths rejects it.
        let words = grammar.enumerate_words(AMBIGUITY_CHECK_LENGTH)?;
        for (n, bucket) in words.iter().enumerate() {
            let trees = table.nt[&(grammar.start, n)].clone();
            let distinct = BigUint::from(bucket.len());
            if trees != distinct {
                return Err(GrammarError::Ambiguous {
                    length: n,
                    words: bucket.len() as u64,
                    trees: u64::try_from(&trees).unwrap_or(u64::MAX),
                });
            }
        }
        Ok(table)
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    /// Number of distinct words of length `n` from the start symbol.
    pub fn count(&self, n: usize) -> Result<BigUint, GrammarError> {
        if n > self.max_len {
            return Err(GrammarError::LengthTooLarge { n });
        }
        Ok(self.nt.get(&(self.grammar.start, n)).cloned().unwrap_or_else(BigUint::zero))
    }

    fn count_nt(
        &mut self,
        a: usize,
        n: usize,
        active: &mut HashSet<(usize, usize)>,
    ) -> Result<BigUint, GrammarError> {
        if let Some(hit) = self.nt.get(&(a, n)) {
            return Ok(hit.clone());
        }
        if !active.insert((a, n)) {
            return Err(GrammarError::CyclicDerivation {
                nonterminal: self.grammar.nonterminals[a].clone(),
            });
        }
        let mut total = BigUint::zero();
        for pi in 0..self.grammar.productions.len() {
            if self.grammar.productions[pi].head == a {
                total += self.count_suffix(pi, 0, n, active)?;
            }
        }
        active.remove(&(a, n));
        self.nt.insert((a, n), total.clone());
        Ok(total)
    }

    fn count_suffix(
        &mut self,
        prod: usize,
        pos: usize,
        n: usize,
        active: &mut HashSet<(usize, usize)>,
    ) -> Result<BigUint, GrammarError> {
        if let Some(hit) = self.suffix.get(&(prod, pos, n)) {
            return Ok(hit.clone());
        }
        let body = &self.grammar.productions[prod].body;
        let result = if pos == body.len() {
            if n == 0 {
                BigUint::one()
            } else {
                BigUint::zero()
            }
        } else {
            match body[pos] {
                Symbol::Terminal(_) => {
                    if n == 0 {
                        BigUint::zero()
                    } else {
                        self.count_suffix(prod, pos + 1, n - 1, active)?
                    }
                }
                Symbol::Nonterminal(b) => {
                    let mut total = BigUint::zero();
                    for (m, rest) in self.split_range(prod, pos, n) {
                        // Tail first: its budget is strictly smaller than n
                        // whenever the head must consume, which keeps
                        // well-founded grammars cycle-free here.
                        let tail = self.count_suffix(prod, pos + 1, rest, active)?;
                        if tail.is_zero() {
                            continue;
                        }
                        let head = self.count_nt(b, m, active)?;
                        total += head * tail;
                    }
                    total
                }
            }
        };
        self.suffix.insert((prod, pos, n), result.clone());
        Ok(result)
    }

    /// Feasible (head length, tail length) splits of budget `n` at a
    /// nonterminal position, bounded by shortest yields on both sides.
    fn split_range(&self, prod: usize, pos: usize, n: usize) -> Vec<(usize, usize)> {
        let body = &self.grammar.productions[prod].body;
        let b = match body[pos] {
            Symbol::Nonterminal(b) => b,
            Symbol::Terminal(_) => unreachable!("split_range is for nonterminals"),
        };
        let head_min = match self.grammar.min_yield[b] {
            Some(m) => m,
            None => return Vec::new(),
        };
        let mut tail_min = 0usize;
        for s in &body[pos + 1..] {
            match s {
                Symbol::Terminal(_) => tail_min += 1,
                Symbol::Nonterminal(a) => match self.grammar.min_yield[*a] {
                    Some(m) => tail_min += m,
                    None => return Vec::new(),
                },
            }
        }
        if head_min + tail_min > n {
            return Vec::new();
        }
        (head_min..=n - tail_min).map(|m| (m, n - m)).collect()
    }

    /// Draws one uniformly random word of length `n` using the supplied
    /// generator. Fails when no word of that length exists.
    pub fn sample(&self, n: usize, rng: &mut SeededRng) -> Result<Word, GrammarError> {
        if n > self.max_len {
            return Err(GrammarError::LengthTooLarge { n });
        }
        let total = self.count(n)?;
        if total.is_zero() {
            return Err(GrammarError::NoWordsOfLength { n });
        }
        let mut letters = Vec::with_capacity(n);
        self.sample_nt(self.grammar.start, n, rng, &mut letters);
        Ok(self.grammar.word_from_indices(&letters))
    }

    fn weight_nt(&self, a: usize, n: usize) -> BigUint {
        self.nt.get(&(a, n)).cloned().unwrap_or_else(BigUint::zero)
    }

    fn weight_suffix(&self, prod: usize, pos: usize, n: usize) -> BigUint {
        self.suffix.get(&(prod, pos, n)).cloned().unwrap_or_else(BigUint::zero)
    }

    fn sample_nt(&self, a: usize, n: usize, rng: &mut SeededRng, out: &mut Vec<usize>) {
        let total = self.weight_nt(a, n);
        let mut ticket = uniform_below(rng, &total);
        for pi in 0..self.grammar.productions.len() {
            if self.grammar.productions[pi].head != a {
                continue;
            }
            let w = self.weight_suffix(pi, 0, n);
            if ticket < w {
                self.sample_suffix(pi, 0, n, rng, out);
                return;
            }
            ticket -= w;
        }
        unreachable!("weights sum to the nonterminal count");
    }

    fn sample_suffix(
        &self,
        prod: usize,
        pos: usize,
        n: usize,
        rng: &mut SeededRng,
        out: &mut Vec<usize>,
    ) {
        let body = &self.grammar.productions[prod].body;
        if pos == body.len() {
            debug_assert_eq!(n, 0);
            return;
        }
        match body[pos] {
            Symbol::Terminal(t) => {
                out.push(t);
                self.sample_suffix(prod, pos + 1, n - 1, rng, out);
            }
            Symbol::Nonterminal(b) => {
                let total = self.weight_suffix(prod, pos, n);
                let mut ticket = uniform_below(rng, &total);
                for (m, rest) in self.split_range(prod, pos, n) {
                    let w = self.weight_nt(b, m) * self.weight_suffix(prod, pos + 1, rest);
                    if ticket < w {
                        self.sample_nt(b, m, rng, out);
                        self.sample_suffix(prod, pos + 1, rest, rng, out);
                        return;
                    }
                    ticket -= w;
                }
                unreachable!("split weights sum to the suffix count");
            }
        }
    }
}

/// Number of distinct words of length `n` in the grammar's language.
/// Rejects cyclic and ambiguous grammars; `n` is capped at 64.
pub fn count_words(grammar: &Grammar, n: usize) -> Result<BigUint, GrammarError> {
    CountTable::build(grammar, n)?.count(n)
}

/// One uniformly random word of length `n`; the seed fully determines it.
pub fn sample_uniform(grammar: &Grammar, n: usize, seed: u64) -> Result<Word, GrammarError> {
    let table = CountTable::build(grammar, n)?;
    let mut rng = seeded(seed);
    table.sample(n, &mut rng)
}

/// The built-in block-pattern languages. All three exclude the empty word
/// (their block counts are at least 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParametricLanguage {
    /// `a^n b^n` over {a,b}, n >= 1.
    AnBn,
    /// `a^n b^n c^n` over {a,b,c}, n >= 1.
    L1,
    /// `a^n b^m c^n d^m` over {a,b,c,d}, n, m >= 1.
    L2,
}

impl ParametricLanguage {
    pub fn alphabet(self) -> Alphabet {
        let letters = match self {
            ParametricLanguage::AnBn => "ab",
            ParametricLanguage::L1 => "abc",
            ParametricLanguage::L2 => "abcd",
        };
        Alphabet::plain(letters).expect("fixed distinct letters")
    }
}

/// Membership by direct block inspection: the word must consist of maximal
/// letter blocks in alphabet order whose lengths satisfy the language's
/// equalities.
pub fn parametric_member(lang: ParametricLanguage, w: &Word) -> Result<bool, GrammarError> {
    let alphabet = lang.alphabet();
    if w.alphabet() != &alphabet {
        return Err(GrammarError::AlphabetMismatch);
    }
    // Maximal-run lengths in order of appearance, with the letter of each run.
    let mut runs: Vec<(usize, usize)> = Vec::new();
    for l in w.letters() {
        match runs.last_mut() {
            Some((letter, len)) if *letter == l.index => *len += 1,
            _ => runs.push((l.index, 1)),
        }
    }
    let block_lengths = |expected: &[usize]| -> Option<Vec<usize>> {
        if runs.len() != expected.len() {
            return None;
        }
        runs.iter()
            .zip(expected)
            .map(|(&(letter, len), &want)| (letter == want).then_some(len))
            .collect()
    };
    Ok(match lang {
        ParametricLanguage::AnBn => {
            matches!(block_lengths(&[0, 1]), Some(v) if v[0] == v[1])
        }
        ParametricLanguage::L1 => {
            matches!(block_lengths(&[0, 1, 2]), Some(v) if v[0] == v[1] && v[1] == v[2])
        }
        ParametricLanguage::L2 => {
            matches!(block_lengths(&[0, 1, 2, 3]), Some(v) if v[0] == v[2] && v[1] == v[3])
        }
    })
}

/// Convenience: parse `text` over the language's alphabet, then test it.
pub fn parametric_member_str(lang: ParametricLanguage, text: &str) -> Result<bool, GrammarError> {
    let w = Word::parse(&lang.alphabet(), text).map_err(|e| match e {
        crate::word::WordError::UnknownLetter(c) => GrammarError::UnknownLetter(c),
        _ => GrammarError::AlphabetMismatch,
    })?;
    parametric_member(lang, &w)
}

/// Number of (possibly overlapping) occurrences of `pattern` in `w`.
pub fn pattern_occurrences(w: &Word, pattern: &Word) -> Result<u64, GrammarError> {
    if pattern.is_empty() {
        return Err(GrammarError::EmptyPattern);
    }
    if w.alphabet() != pattern.alphabet() {
        return Err(GrammarError::AlphabetMismatch);
    }
    let (wl, pl) = (w.letters(), pattern.letters());
    if wl.len() < pl.len() {
        return Ok(0);
    }
    Ok(wl.windows(pl.len()).filter(|win| *win == pl).count() as u64)
}

/// Where the words come from when tallying occurrences.
pub enum WordSource<'a> {
    /// All `|A|^n` words equally likely (independent uniform letters).
    UniformWords(&'a Alphabet),
    /// Words of length n of the grammar, equally likely.
    Grammar(&'a Grammar),
}

/// Exact tally or seeded empirical estimate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistributionMode {
    Exact,
    MonteCarlo { samples: u64, seed: u64 },
}

/// The distribution of the occurrence count of a fixed pattern over random
/// words of one length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OccurrenceDistribution {
    n: usize,
    pattern: Word,
    probabilities: BTreeMap<u64, BigRational>,
    /// Sample count when estimated; `None` for exact tallies.
    samples: Option<u64>,
}

impl OccurrenceDistribution {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pattern(&self) -> &Word {
        &self.pattern
    }

    pub fn probabilities(&self) -> &BTreeMap<u64, BigRational> {
        &self.probabilities
    }

    pub fn samples(&self) -> Option<u64> {
        self.samples
    }

    pub fn probability(&self, k: u64) -> BigRational {
        self.probabilities.get(&k).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Total-variation distance: half the sum of absolute differences.
    pub fn total_variation(&self, other: &OccurrenceDistribution) -> BigRational {
        let keys: BTreeSet<u64> = self
            .probabilities
            .keys()
            .chain(other.probabilities.keys())
            .copied()
            .collect();
        let two = BigRational::from_integer(2.into());
        keys.iter()
            .map(|k| {
                let d = self.probability(*k) - other.probability(*k);
                if d < BigRational::zero() {
                    -d
                } else {
                    d
                }
            })
            .sum::<BigRational>()
            / two
    }

    /// `{"k": "p/q"}` map, the CLI serialization.
    pub fn to_string_map(&self) -> BTreeMap<String, String> {
        self.probabilities
            .iter()
            .map(|(k, p)| (k.to_string(), crate::rational::rat_str(p)))
            .collect()
    }
}

/// The distribution of pattern occurrences over words of length `n` drawn
/// from `source`, exactly or by seeded sampling.
pub fn xn_distribution(
    source: &WordSource<'_>,
    n: usize,
    pattern: &Word,
    mode: DistributionMode,
) -> Result<OccurrenceDistribution, GrammarError> {
    if pattern.is_empty() {
        return Err(GrammarError::EmptyPattern);
    }
    let mut tally: BTreeMap<u64, BigUint> = BTreeMap::new();
    let total: BigUint = match (source, mode) {
        (WordSource::UniformWords(alphabet), DistributionMode::Exact) => {
            if pattern.alphabet() != *alphabet {
                return Err(GrammarError::AlphabetMismatch);
            }
            let m = alphabet.symbol_count() as u64;
            let mut size: u64 = 1;
            for _ in 0..n {
                size = size.saturating_mul(m);
                if size > MAX_EXACT_WORDS {
                    return Err(GrammarError::ExactOverflow);
                }
            }
            let mut letters = vec![0usize; n];
            loop {
                let word = Word::from_letters(
                    alphabet,
                    letters.iter().map(|&i| Letter { index: i, inverse: false }).collect(),
                )
                .expect("indices in range");
                let k = pattern_occurrences(&word, pattern)?;
                *tally.entry(k).or_insert_with(BigUint::zero) += BigUint::one();
                // Odometer step.
                let mut pos = n;
                while pos > 0 {
                    letters[pos - 1] += 1;
                    if letters[pos - 1] < m as usize {
                        break;
                    }
                    letters[pos - 1] = 0;
                    pos -= 1;
                }
                if pos == 0 {
                    break;
                }
            }
            BigUint::from(size)
        }
        (WordSource::Grammar(grammar), DistributionMode::Exact) => {
            if pattern.alphabet() != grammar.terminals() {
                return Err(GrammarError::AlphabetMismatch);
            }
            let words = grammar.words_of_length(n)?;
            if words.is_empty() {
                return Err(GrammarError::NoWordsOfLength { n });
            }
            let total = BigUint::from(words.len());
            for word in words {
                let k = pattern_occurrences(&word, pattern)?;
                *tally.entry(k).or_insert_with(BigUint::zero) += BigUint::one();
            }
            total
        }
        (WordSource::UniformWords(alphabet), DistributionMode::MonteCarlo { samples, seed }) => {
            if pattern.alphabet() != *alphabet {
                return Err(GrammarError::AlphabetMismatch);
            }
            let m = alphabet.symbol_count();
            let mut rng = seeded(seed);
            for _ in 0..samples {
                let letters = (0..n)
                    .map(|_| Letter {
                        index: crate::rng::index_below(&mut rng, m),
                        inverse: false,
                    })
                    .collect();
                let word =
                    Word::from_letters(alphabet, letters).expect("indices in range");
                let k = pattern_occurrences(&word, pattern)?;
                *tally.entry(k).or_insert_with(BigUint::zero) += BigUint::one();
            }
            BigUint::from(samples)
        }
        (WordSource::Grammar(grammar), DistributionMode::MonteCarlo { samples, seed }) => {
            if pattern.alphabet() != grammar.terminals() {
                return Err(GrammarError::AlphabetMismatch);
            }
            let table = CountTable::build(grammar, n)?;
            if table.count(n)?.is_zero() {
                return Err(GrammarError::NoWordsOfLength { n });
            }
            let mut rng = seeded(seed);
            for _ in 0..samples {
                let word = table.sample(n, &mut rng)?;
                let k = pattern_occurrences(&word, pattern)?;
                *tally.entry(k).or_insert_with(BigUint::zero) += BigUint::one();
            }
            BigUint::from(samples)
        }
    };
    let denom = num::BigInt::from(total);
    let probabilities = tally
        .into_iter()
        .map(|(k, c)| (k, BigRational::new(num::BigInt::from(c), denom.clone())))
        .collect();
    Ok(OccurrenceDistribution {
        n,
        pattern: pattern.clone(),
        probabilities,
        samples: match mode {
            DistributionMode::Exact => None,
            DistributionMode::MonteCarlo { samples, .. } => Some(samples),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dyck() -> Grammar {
        Grammar::parse("S -> a S b S | ;").unwrap()
    }

    fn an_bn() -> Grammar {
        Grammar::parse("S -> a S b | ;").unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        let g = Grammar::parse("S -> a S b | ;\n# comment\n").unwrap();
        assert_eq!(g.to_string(), "S -> a S b | ;");
        assert_eq!(g.start_symbol(), "S");
        assert_eq!(g.terminals().letters(), ['a', 'b']);
        assert!(Grammar::parse("S a b").is_err());
        assert!(Grammar::parse("").is_err());
        assert!(matches!(
            Grammar::parse("S -> ab S").unwrap_err(),
            GrammarError::UnknownSymbol(_)
        ));
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_words(&an_bn(), 4).unwrap(), BigUint::from(1u32));
        assert_eq!(count_words(&dyck(), 6).unwrap(), BigUint::from(5u32));
        assert_eq!(count_words(&dyck(), 5).unwrap(), BigUint::zero());
    }

    #[test]
    fn dyck_counts_match_balanced_enumeration() {
        let g = dyck();
        let expected = [1u32, 1, 2, 5, 14, 42];
        for (i, &c) in expected.iter().enumerate() {
            assert_eq!(count_words(&g, 2 * i).unwrap(), BigUint::from(c), "length {}", 2 * i);
        }
        // Independent check: enumerate words and verify each is balanced.
        for n in [2usize, 4, 6, 8] {
            let words = g.words_of_length(n).unwrap();
            for w in &words {
                let mut depth = 0i64;
                for l in w.letters() {
                    depth += if l.index == 0 { 1 } else { -1 };
                    assert!(depth >= 0, "prefix dips below zero in {w}");
                }
                assert_eq!(depth, 0, "unbalanced word {w}");
            }
        }
    }

    #[test]
    fn cyclic_grammars_are_rejected() {
        let unit = Grammar::parse("S -> S | a").unwrap();
        assert_eq!(
            count_words(&unit, 3).unwrap_err(),
            GrammarError::CyclicDerivation { nonterminal: "S".into() }
        );
        // Nullable pumping: A can vanish, so S -> A S loops.
        let pump = Grammar::parse("S -> A S | b\nA -> ; | a").unwrap();
        assert!(matches!(
            count_words(&pump, 3).unwrap_err(),
            GrammarError::CyclicDerivation { .. }
        ));
        // Left recursion that always consumes is fine.
        let left = Grammar::parse("S -> S b | a").unwrap();
        assert_eq!(count_words(&left, 4).unwrap(), BigUint::one());
    }

    #[test]
    fn ambiguous_grammars_are_rejected() {
        // Two parse trees for "a": via the left or the right nullable A.
        let g = Grammar::parse("S -> A A\nA -> ; | a").unwrap();
        match count_words(&g, 2).unwrap_err() {
            GrammarError::Ambiguous { length, words, trees } => {
                assert_eq!((length, words, trees), (1, 1, 2));
            }
            other => panic!("expected ambiguity, got {other:?}"),
        }
    }

    #[test]
    fn sampling_unique_word_is_deterministic() {
        for seed in [0u64, 1, 42, 987654321] {
            let w = sample_uniform(&an_bn(), 4, seed).unwrap();
            assert_eq!(w.to_string(), "aabb");
        }
        assert_eq!(
            sample_uniform(&dyck(), 5, 7).unwrap_err(),
            GrammarError::NoWordsOfLength { n: 5 }
        );
    }

    #[test]
    fn sampling_is_uniform_within_binomial_bounds() {
        let g = dyck();
        let table = CountTable::build(&g, 6).unwrap();
        let mut rng = seeded(42);
        let mut freq: BTreeMap<String, u32> = BTreeMap::new();
        for _ in 0..10_000 {
            let w = table.sample(6, &mut rng).unwrap();
            *freq.entry(w.to_string()).or_insert(0) += 1;
        }
        assert_eq!(freq.len(), 5);
        // Five equally likely words: each count within 5 sigma of 2000,
        // sigma = sqrt(10000 * 1/5 * 4/5) = 40.
        for (w, c) in &freq {
            assert!((1800..=2200).contains(c), "{w} occurred {c} times");
        }
        // Sampled words always lie in the language slice.
        let valid = g.words_of_length(6).unwrap();
        let valid: BTreeSet<String> = valid.iter().map(|w| w.to_string()).collect();
        for w in freq.keys() {
            assert!(valid.contains(w), "{w} is not derivable");
        }
    }

    #[test]
    fn identical_seeds_reproduce_identical_words() {
        let g = dyck();
        let a = sample_uniform(&g, 12, 271828).unwrap();
        let b = sample_uniform(&g, 12, 271828).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn parametric_membership_examples() {
        use ParametricLanguage::*;
        assert!(parametric_member_str(L1, "aabbcc").unwrap());
        assert!(!parametric_member_str(L1, "abcc").unwrap());
        assert!(!parametric_member_str(L2, "aabcccd").unwrap());
        assert!(parametric_member_str(L2, "aabccd").unwrap());
        assert!(parametric_member_str(L2, "abcd").unwrap());
        assert!(!parametric_member_str(L2, "abdc").unwrap());
        assert!(parametric_member_str(AnBn, "ab").unwrap());
        assert!(parametric_member_str(AnBn, "aabb").unwrap());
        assert!(!parametric_member_str(AnBn, "").unwrap()); // empty word excluded
        assert!(!parametric_member_str(AnBn, "ba").unwrap());
        assert_eq!(
            parametric_member_str(AnBn, "abc").unwrap_err(),
            GrammarError::UnknownLetter('c')
        );
    }

    #[test]
    fn occurrence_count_examples() {
        let ab = Alphabet::plain("ab").unwrap();
        let w = |s: &str| Word::parse(&ab, s).unwrap();
        assert_eq!(pattern_occurrences(&w("aaa"), &w("aa")).unwrap(), 2);
        assert_eq!(pattern_occurrences(&w("abab"), &w("ab")).unwrap(), 2);
        assert_eq!(pattern_occurrences(&w("bbb"), &w("a")).unwrap(), 0);
        assert_eq!(pattern_occurrences(&w("ab"), &w("abab")).unwrap(), 0);
        assert_eq!(
            pattern_occurrences(&w("ab"), &w("")).unwrap_err(),
            GrammarError::EmptyPattern
        );
    }

    #[test]
    fn exact_distribution_over_uniform_words() {
        let ab = Alphabet::plain("ab").unwrap();
        let aa = Word::parse(&ab, "aa").unwrap();
        let d3 = xn_distribution(
            &WordSource::UniformWords(&ab),
            3,
            &aa,
            DistributionMode::Exact,
        )
        .unwrap();
        let r = |p: i64, q: i64| BigRational::new(p.into(), q.into());
        assert_eq!(d3.probability(0), r(5, 8));
        assert_eq!(d3.probability(1), r(1, 4));
        assert_eq!(d3.probability(2), r(1, 8));
        assert_eq!(
            d3.probabilities().values().cloned().sum::<BigRational>(),
            BigRational::one()
        );

        let d2 = xn_distribution(
            &WordSource::UniformWords(&ab),
            2,
            &aa,
            DistributionMode::Exact,
        )
        .unwrap();
        assert_eq!(d2.probability(0), r(3, 4));
        assert_eq!(d2.probability(1), r(1, 4));
    }

    #[test]
    fn exact_distribution_over_grammar_words() {
        let g = an_bn();
        let ab = Word::parse(g.terminals(), "ab").unwrap();
        let d = xn_distribution(&WordSource::Grammar(&g), 4, &ab, DistributionMode::Exact)
            .unwrap();
        assert_eq!(d.probability(1), BigRational::one());
        assert_eq!(d.probabilities().len(), 1);
    }

    #[test]
    fn monte_carlo_converges_to_exact() {
        let ab = Alphabet::plain("ab").unwrap();
        let aa = Word::parse(&ab, "aa").unwrap();
        let exact = xn_distribution(
            &WordSource::UniformWords(&ab),
            3,
            &aa,
            DistributionMode::Exact,
        )
        .unwrap();
        let sampled = xn_distribution(
            &WordSource::UniformWords(&ab),
            3,
            &aa,
            DistributionMode::MonteCarlo { samples: 100_000, seed: 42 },
        )
        .unwrap();
        assert_eq!(sampled.samples(), Some(100_000));
        let tv = exact.total_variation(&sampled);
        let bound = BigRational::new(2.into(), 100.into());
        assert!(tv < bound, "total variation {tv} not below 0.02");
    }

    #[test]
    fn distribution_serialization_shape() {
        let ab = Alphabet::plain("ab").unwrap();
        let aa = Word::parse(&ab, "aa").unwrap();
        let d = xn_distribution(
            &WordSource::UniformWords(&ab),
            2,
            &aa,
            DistributionMode::Exact,
        )
        .unwrap();
        let map = d.to_string_map();
        assert_eq!(map.get("0"), Some(&"3/4".to_string()));
        assert_eq!(map.get("1"), Some(&"1/4".to_string()));
    }
}
