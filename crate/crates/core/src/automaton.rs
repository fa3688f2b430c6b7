//! Finite automata, recognition, and rational-expression construction.
//!
//! Recognition is nondeterministic subset simulation; no determinization is
//! ever performed. [`from_expr`] compiles a [`RationalExpr`] — the closure of
//! finite languages under union, product and star — into an automaton.
//! Spontaneous (empty-label) moves exist only transiently inside the
//! construction and are eliminated by closure before the machine is
//! returned, so [`FiniteAutomaton::accepts`] never sees them.
//!
//! [`four_state_example`] ships a concrete four-state machine used across
//! the test-suite and CLI fixtures, together with a candidate expression for
//! its language whose accuracy is *checked*, not assumed: see
//! [`language_difference`].

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::word::{Alphabet, FiniteLanguage, Letter, Word};

const MAX_ENUMERATION_LEN: usize = 16;

/// Errors from automaton construction and queries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AutomatonError {
    /// State names must be unique.
    DuplicateState(String),
    /// A transition or marker references an undeclared state.
    UnknownState(String),
    /// A transition or expression uses a letter outside the alphabet.
    UnknownLetter(char),
    /// Automata run over plain alphabets; formal inverses are not letters here.
    SignedAlphabet,
    /// The queried word is over a different alphabet.
    AlphabetMismatch,
    /// Language enumeration is capped at length 16.
    BoundTooLarge { max_len: usize },
    /// The JSON file failed to parse.
    BadFile(String),
}

impl fmt::Display for AutomatonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AutomatonError::DuplicateState(s) => write!(f, "duplicate state '{s}'"),
            AutomatonError::UnknownState(s) => write!(f, "undeclared state '{s}'"),
            AutomatonError::UnknownLetter(c) => write!(f, "letter '{c}' is not in the alphabet"),
            AutomatonError::SignedAlphabet => {
                write!(f, "automata are defined over plain (unsigned) alphabets")
            }
            AutomatonError::AlphabetMismatch => {
                write!(f, "word and machine use different alphabets")
            }
            AutomatonError::BoundTooLarge { max_len } => {
                write!(f, "enumeration length {max_len} exceeds the cap {MAX_ENUMERATION_LEN}")
            }
            AutomatonError::BadFile(msg) => write!(f, "cannot parse automaton file: {msg}"),
        }
    }
}

impl std::error::Error for AutomatonError {}

/// A nondeterministic finite automaton without spontaneous moves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAutomaton {
    states: Vec<String>,
    alphabet: Alphabet,
    /// (from, letter index, to), sorted.
    transitions: Vec<(usize, usize, usize)>,
    initial: BTreeSet<usize>,
    final_states: BTreeSet<usize>,
}

/// On-disk shape:
/// `{"states":[..],"alphabet":[..],"initial":[..],"final":[..],"transitions":[[from,"a",to],..]}`.
#[derive(Serialize, Deserialize)]
struct AutomatonFile {
    states: Vec<String>,
    alphabet: Vec<char>,
    initial: Vec<String>,
    #[serde(rename = "final")]
    final_states: Vec<String>,
    transitions: Vec<(String, char, String)>,
}

impl FiniteAutomaton {
    /// Validating constructor over named states.
    pub fn new(
        states: Vec<String>,
        alphabet: Alphabet,
        transitions: &[(String, char, String)],
        initial: &[String],
        final_states: &[String],
    ) -> Result<FiniteAutomaton, AutomatonError> {
        if alphabet.is_signed() {
            return Err(AutomatonError::SignedAlphabet);
        }
        for (i, s) in states.iter().enumerate() {
            if states[..i].contains(s) {
                return Err(AutomatonError::DuplicateState(s.clone()));
            }
        }
        let index_of = |name: &String| -> Result<usize, AutomatonError> {
            states
                .iter()
                .position(|s| s == name)
                .ok_or_else(|| AutomatonError::UnknownState(name.clone()))
        };
        let mut tr = Vec::with_capacity(transitions.len());
        for (from, letter, to) in transitions {
            let l = alphabet
                .index_of(*letter)
                .ok_or(AutomatonError::UnknownLetter(*letter))?;
            tr.push((index_of(from)?, l, index_of(to)?));
        }
        tr.sort_unstable();
        tr.dedup();
        let initial: BTreeSet<usize> =
            initial.iter().map(index_of).collect::<Result<_, _>>()?;
        let final_states: BTreeSet<usize> =
            final_states.iter().map(index_of).collect::<Result<_, _>>()?;
        Ok(FiniteAutomaton { states, alphabet, transitions: tr, initial, final_states })
    }

    pub fn from_json(text: &str) -> Result<FiniteAutomaton, AutomatonError> {
        let file: AutomatonFile =
            serde_json::from_str(text).map_err(|e| AutomatonError::BadFile(e.to_string()))?;
        let letters: String = file.alphabet.iter().collect();
        let alphabet = Alphabet::plain(&letters)
            .map_err(|e| AutomatonError::BadFile(e.to_string()))?;
        FiniteAutomaton::new(
            file.states,
            alphabet,
            &file.transitions,
            &file.initial,
            &file.final_states,
        )
    }

    pub fn to_json(&self) -> String {
        let name = |i: &usize| self.states[*i].clone();
        let file = AutomatonFile {
            states: self.states.clone(),
            alphabet: self.alphabet.letters().to_vec(),
            initial: self.initial.iter().map(name).collect(),
            final_states: self.final_states.iter().map(name).collect(),
            transitions: self
                .transitions
                .iter()
                .map(|&(from, l, to)| {
                    (self.states[from].clone(), self.alphabet.letters()[l], self.states[to].clone())
                })
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("automaton serialization cannot fail")
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    /// True iff some path from an initial to a final state spells `w`.
    pub fn accepts(&self, w: &Word) -> Result<bool, AutomatonError> {
        if w.alphabet() != &self.alphabet {
            return Err(AutomatonError::AlphabetMismatch);
        }
        let mut current = self.initial.clone();
        for letter in w.letters() {
            if letter.inverse {
                return Err(AutomatonError::SignedAlphabet);
            }
            current = self.step(&current, letter.index);
            if current.is_empty() {
                return Ok(false);
            }
        }
        Ok(current.iter().any(|s| self.final_states.contains(s)))
    }

    /// Parses `text` over the machine's alphabet and runs [`Self::accepts`].
    pub fn accepts_str(&self, text: &str) -> Result<bool, AutomatonError> {
        let w = Word::parse(&self.alphabet, text).map_err(|e| match e {
            crate::word::WordError::UnknownLetter(c) => AutomatonError::UnknownLetter(c),
            _ => AutomatonError::AlphabetMismatch,
        })?;
        self.accepts(&w)
    }

    fn step(&self, from: &BTreeSet<usize>, letter: usize) -> BTreeSet<usize> {
        let mut next = BTreeSet::new();
        for &(s, l, t) in &self.transitions {
            if l == letter && from.contains(&s) {
                next.insert(t);
            }
        }
        next
    }

    /// All accepted words of length at most `max_len` (capped at 16), by
    /// breadth-first expansion of live state subsets.
    pub fn enumerate_language(&self, max_len: usize) -> Result<FiniteLanguage, AutomatonError> {
        if max_len > MAX_ENUMERATION_LEN {
            return Err(AutomatonError::BoundTooLarge { max_len });
        }
        let mut words: Vec<Word> = Vec::new();
        let mut frontier: Vec<(Vec<Letter>, BTreeSet<usize>)> =
            vec![(Vec::new(), self.initial.clone())];
        for len in 0..=max_len {
            for (prefix, subset) in &frontier {
                if subset.iter().any(|s| self.final_states.contains(s)) {
                    words.push(
                        Word::from_letters(&self.alphabet, prefix.clone())
                            .expect("letters from own alphabet"),
                    );
                }
            }
            if len == max_len {
                break;
            }
            let mut next = Vec::new();
            for (prefix, subset) in &frontier {
                for li in 0..self.alphabet.len() {
                    let stepped = self.step(subset, li);
                    if !stepped.is_empty() {
                        let mut ext = prefix.clone();
                        ext.push(Letter { index: li, inverse: false });
                        next.push((ext, stepped));
                    }
                }
            }
            frontier = next;
        }
        FiniteLanguage::new(&self.alphabet, words, max_len)
            .map_err(|_| AutomatonError::AlphabetMismatch)
    }
}

/// An expression over the rational operations; `Empty` denotes the empty
/// language, so the empty *word* is `Star(Empty)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RationalExpr {
    Empty,
    Letter(char),
    Union(Box<RationalExpr>, Box<RationalExpr>),
    Product(Box<RationalExpr>, Box<RationalExpr>),
    Star(Box<RationalExpr>),
}

impl RationalExpr {
    pub fn letter(c: char) -> RationalExpr {
        RationalExpr::Letter(c)
    }

    pub fn union(a: RationalExpr, b: RationalExpr) -> RationalExpr {
        RationalExpr::Union(Box::new(a), Box::new(b))
    }

    pub fn product(a: RationalExpr, b: RationalExpr) -> RationalExpr {
        RationalExpr::Product(Box::new(a), Box::new(b))
    }

    pub fn star(a: RationalExpr) -> RationalExpr {
        RationalExpr::Star(Box::new(a))
    }

    /// The empty-word expression `Star(Empty)`.
    pub fn epsilon() -> RationalExpr {
        RationalExpr::star(RationalExpr::Empty)
    }
}

impl fmt::Display for RationalExpr {
    /// Fully parenthesized except at the leaves; `0` is the empty language
    /// and `0*` therefore prints the empty word.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RationalExpr::Empty => write!(f, "0"),
            RationalExpr::Letter(c) => write!(f, "{c}"),
            RationalExpr::Union(a, b) => write!(f, "({a}+{b})"),
            RationalExpr::Product(a, b) => write!(f, "({a}{b})"),
            RationalExpr::Star(a) => write!(f, "{a}*"),
        }
    }
}

/// Working NFA with spontaneous moves, internal to the construction.
struct EpsNfa {
    state_count: usize,
    /// (from, Some(letter index) | None for spontaneous, to)
    edges: Vec<(usize, Option<usize>, usize)>,
    initial: BTreeSet<usize>,
    final_states: BTreeSet<usize>,
}

impl EpsNfa {
    fn closure(&self, seed: &BTreeSet<usize>) -> BTreeSet<usize> {
        let mut seen = seed.clone();
        let mut queue: VecDeque<usize> = seed.iter().copied().collect();
        while let Some(s) = queue.pop_front() {
            for &(from, label, to) in &self.edges {
                if from == s && label.is_none() && seen.insert(to) {
                    queue.push_back(to);
                }
            }
        }
        seen
    }
}

/// Compiles an expression to an automaton over the given alphabet with
/// `L(M) = L(e)`. Every letter in the expression must belong to the alphabet.
pub fn from_expr(
    alphabet: &Alphabet,
    expr: &RationalExpr,
) -> Result<FiniteAutomaton, AutomatonError> {
    if alphabet.is_signed() {
        return Err(AutomatonError::SignedAlphabet);
    }
    let mut nfa = EpsNfa {
        state_count: 0,
        edges: Vec::new(),
        initial: BTreeSet::new(),
        final_states: BTreeSet::new(),
    };
    let (start, finals) = build(alphabet, expr, &mut nfa)?;
    nfa.initial.insert(start);
    nfa.final_states = finals;

    // Eliminate spontaneous moves: each state inherits the labelled edges and
    // the accepting status of its closure.
    let mut transitions: Vec<(usize, usize, usize)> = Vec::new();
    let mut final_states: BTreeSet<usize> = BTreeSet::new();
    for s in 0..nfa.state_count {
        let reach = nfa.closure(&BTreeSet::from([s]));
        if reach.iter().any(|x| nfa.final_states.contains(x)) {
            final_states.insert(s);
        }
        for &(from, label, to) in &nfa.edges {
            if let Some(l) = label {
                if reach.contains(&from) {
                    transitions.push((s, l, to));
                }
            }
        }
    }
    transitions.sort_unstable();
    transitions.dedup();

    // Keep only states reachable from the start along labelled edges.
    let mut reachable = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(s) = queue.pop_front() {
        for &(from, _, to) in &transitions {
            if from == s && reachable.insert(to) {
                queue.push_back(to);
            }
        }
    }
    let order: Vec<usize> = reachable.iter().copied().collect();
    let rename = |old: usize| order.iter().position(|&x| x == old).unwrap();
    let states: Vec<String> = (0..order.len()).map(|i| format!("q{i}")).collect();
    let transitions: Vec<(usize, usize, usize)> = {
        let mut tr: Vec<(usize, usize, usize)> = transitions
            .iter()
            .filter(|&&(f, _, t)| reachable.contains(&f) && reachable.contains(&t))
            .map(|&(f, l, t)| (rename(f), l, rename(t)))
            .collect();
        tr.sort_unstable();
        tr
    };
    Ok(FiniteAutomaton {
        states,
        alphabet: alphabet.clone(),
        transitions,
        initial: BTreeSet::from([rename(start)]),
        final_states: final_states
            .iter()
            .filter(|s| reachable.contains(s))
            .map(|&s| rename(s))
            .collect(),
    })
}

fn fresh(nfa: &mut EpsNfa) -> usize {
    let s = nfa.state_count;
    nfa.state_count += 1;
    s
}

/// Recursive fragment builder: returns (entry state, accepting states).
fn build(
    alphabet: &Alphabet,
    expr: &RationalExpr,
    nfa: &mut EpsNfa,
) -> Result<(usize, BTreeSet<usize>), AutomatonError> {
    match expr {
        RationalExpr::Empty => Ok((fresh(nfa), BTreeSet::new())),
        RationalExpr::Letter(c) => {
            let l = alphabet.index_of(*c).ok_or(AutomatonError::UnknownLetter(*c))?;
            let s = fresh(nfa);
            let f = fresh(nfa);
            nfa.edges.push((s, Some(l), f));
            Ok((s, BTreeSet::from([f])))
        }
        RationalExpr::Union(a, b) => {
            let s = fresh(nfa);
            let (sa, fa) = build(alphabet, a, nfa)?;
            let (sb, fb) = build(alphabet, b, nfa)?;
            nfa.edges.push((s, None, sa));
            nfa.edges.push((s, None, sb));
            Ok((s, fa.union(&fb).copied().collect()))
        }
        RationalExpr::Product(a, b) => {
            let (sa, fa) = build(alphabet, a, nfa)?;
            let (sb, fb) = build(alphabet, b, nfa)?;
            for f in fa {
                nfa.edges.push((f, None, sb));
            }
            Ok((sa, fb))
        }
        RationalExpr::Star(a) => {
            let hub = fresh(nfa);
            let (sa, fa) = build(alphabet, a, nfa)?;
            nfa.edges.push((hub, None, sa));
            for f in fa {
                nfa.edges.push((f, None, hub));
            }
            Ok((hub, BTreeSet::from([hub])))
        }
    }
}

/// Words (up to `max_len`) accepted by exactly one of the two machines:
/// `(only in a, only in b)`.
pub fn language_difference(
    a: &FiniteAutomaton,
    b: &FiniteAutomaton,
    max_len: usize,
) -> Result<(Vec<Word>, Vec<Word>), AutomatonError> {
    if a.alphabet != b.alphabet {
        return Err(AutomatonError::AlphabetMismatch);
    }
    let la = a.enumerate_language(max_len)?;
    let lb = b.enumerate_language(max_len)?;
    let only_a = la.words().difference(lb.words()).cloned().collect();
    let only_b = lb.words().difference(la.words()).cloned().collect();
    Ok((only_a, only_b))
}

/// The four-state example machine over {a,b}: initial state "2", accepting
/// state "4", with a loop on "3". Its language is
/// `(ba)*a + (ba)*bba*b`.
pub fn four_state_example() -> FiniteAutomaton {
    let t = |f: &str, c: char, t: &str| (f.to_string(), c, t.to_string());
    FiniteAutomaton::new(
        vec!["1".into(), "2".into(), "3".into(), "4".into()],
        Alphabet::plain("ab").expect("two distinct letters"),
        &[
            t("1", 'b', "3"),
            t("1", 'a', "2"),
            t("2", 'a', "4"),
            t("2", 'b', "1"),
            t("3", 'b', "4"),
            t("3", 'a', "3"),
        ],
        &["2".to_string()],
        &["4".to_string()],
    )
    .expect("example machine is well-formed")
}

/// A candidate expression `((ba)*b)* + ((ba)*a)*` sometimes offered for the
/// example machine's language. It is NOT equivalent to the machine — it
/// accepts the empty word and "b", which the machine rejects — so treat it
/// as an input to [`language_difference`], not as ground truth.
pub fn four_state_example_expression() -> RationalExpr {
    use RationalExpr as E;
    let ba = || E::product(E::letter('b'), E::letter('a'));
    E::union(
        E::star(E::product(E::star(ba()), E::letter('b'))),
        E::star(E::product(E::star(ba()), E::letter('a'))),
    )
}
