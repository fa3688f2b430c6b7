//! Words over an ordered alphabet, with optional formal inverses, and the
//! algebra of finite languages.
//!
//! A [`Word`] is a finite sequence of letters drawn from an [`Alphabet`]; the
//! empty word is the monoid identity under [`Word::concat`]. Alphabets may be
//! *signed*, in which case every letter `a` has a formal inverse written
//! `a'`, and [`Word::reduce`] cancels adjacent `a a'` / `a' a` factors.
//!
//! [`FiniteLanguage`] is an explicit finite set of words together with a
//! length bound that serves as the universe for complementation. Star is
//! deliberately absent here: the star of a nonempty language is infinite, so
//! it lives on the automaton side (see [`crate::automaton`]).

use std::collections::BTreeSet;
use std::fmt;

const MAX_PRODUCT_BOUND: usize = 64;
const MAX_UNIVERSE: u64 = 1 << 24;

/// Errors from word and finite-language operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordError {
    /// The two operands live over different alphabets.
    AlphabetMismatch,
    /// Alphabet construction saw the same symbol twice.
    DuplicateLetter(char),
    /// Alphabets must contain at least one letter.
    EmptyAlphabet,
    /// A parsed or supplied letter is not part of the alphabet.
    UnknownLetter(char),
    /// An inverse mark was used over an unsigned alphabet.
    InverseInUnsigned(char),
    /// An inverse mark appeared with no letter before it.
    DanglingInverseMark,
    /// A member word exceeds the language's length bound.
    WordTooLong { len: usize, bound: usize },
    /// The bounded universe needed for this operation is too large to enumerate.
    UniverseTooLarge { bound: usize },
    /// A product would need a length bound beyond the supported maximum.
    BoundOverflow { bound: usize, max: usize },
    /// Star of a finite language is infinite; build it as an automaton instead.
    StarNotFinite,
}

impl fmt::Display for WordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordError::AlphabetMismatch => write!(f, "operands use different alphabets"),
            WordError::DuplicateLetter(c) => write!(f, "duplicate letter '{c}' in alphabet"),
            WordError::EmptyAlphabet => write!(f, "alphabet must not be empty"),
            WordError::UnknownLetter(c) => write!(f, "letter '{c}' is not in the alphabet"),
            WordError::InverseInUnsigned(c) => {
                write!(f, "inverse '{c}'' used over an unsigned alphabet")
            }
            WordError::DanglingInverseMark => write!(f, "inverse mark with no preceding letter"),
            WordError::WordTooLong { len, bound } => {
                write!(f, "word of length {len} exceeds language bound {bound}")
            }
            WordError::UniverseTooLarge { bound } => {
                write!(f, "universe up to length {bound} is too large to enumerate")
            }
            WordError::BoundOverflow { bound, max } => {
                write!(f, "product bound {bound} exceeds the supported maximum {max}")
            }
            WordError::StarNotFinite => write!(
                f,
                "star of a finite language is infinite; use automaton::from_expr"
            ),
        }
    }
}

impl std::error::Error for WordError {}

/// An ordered set of distinct letters, optionally closed under formal inverses.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    letters: Vec<char>,
    signed: bool,
}

impl Alphabet {
    /// Builds an alphabet from its letters in order. `signed` adds a formal
    /// inverse `a'` for every letter `a`.
    pub fn new(letters: &str, signed: bool) -> Result<Alphabet, WordError> {
        let letters: Vec<char> = letters.chars().collect();
        if letters.is_empty() {
            return Err(WordError::EmptyAlphabet);
        }
        for (i, &c) in letters.iter().enumerate() {
            if letters[..i].contains(&c) {
                return Err(WordError::DuplicateLetter(c));
            }
        }
        Ok(Alphabet { letters, signed })
    }

    /// Unsigned alphabet.
    pub fn plain(letters: &str) -> Result<Alphabet, WordError> {
        Alphabet::new(letters, false)
    }

    /// Alphabet with formal inverses.
    pub fn with_inverses(letters: &str) -> Result<Alphabet, WordError> {
        Alphabet::new(letters, true)
    }

    /// The first `n` lowercase latin letters, unsigned. Panics above 26.
    pub fn latin(n: usize) -> Alphabet {
        assert!((1..=26).contains(&n), "latin alphabet supports 1..=26 letters");
        let letters: String = (0..n).map(|i| (b'a' + i as u8) as char).collect();
        Alphabet::plain(&letters).expect("distinct by construction")
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false // invariant: nonempty
    }

    pub fn is_signed(&self) -> bool {
        self.signed
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    pub fn index_of(&self, c: char) -> Option<usize> {
        self.letters.iter().position(|&l| l == c)
    }

    /// Number of distinct signed letters: `len` doubled when inverses exist.
    pub fn symbol_count(&self) -> usize {
        if self.signed {
            2 * self.letters.len()
        } else {
            self.letters.len()
        }
    }

    /// All letters as `Letter` values, inverses last when signed.
    fn all_symbols(&self) -> Vec<Letter> {
        let mut out: Vec<Letter> =
            (0..self.letters.len()).map(|index| Letter { index, inverse: false }).collect();
        if self.signed {
            out.extend((0..self.letters.len()).map(|index| Letter { index, inverse: true }));
        }
        out
    }
}

/// One position of a word: a letter index and an inverse flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub index: usize,
    pub inverse: bool,
}

impl Letter {
    fn is_inverse_of(self, other: Letter) -> bool {
        self.index == other.index && self.inverse != other.inverse
    }
}

/// A finite sequence of letters over a fixed alphabet.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    alphabet: Alphabet,
    letters: Vec<Letter>,
}

impl Word {
    /// The empty word (monoid identity).
    pub fn empty(alphabet: &Alphabet) -> Word {
        Word { alphabet: alphabet.clone(), letters: Vec::new() }
    }

    /// Parses the ASCII form: letters back to back, `a'` for the inverse of
    /// `a`, whitespace ignored.
    pub fn parse(alphabet: &Alphabet, s: &str) -> Result<Word, WordError> {
        let mut letters: Vec<Letter> = Vec::new();
        for c in s.chars() {
            if c.is_whitespace() {
                continue;
            }
            if c == '\'' {
                let last = letters.last_mut().ok_or(WordError::DanglingInverseMark)?;
                if last.inverse {
                    return Err(WordError::DanglingInverseMark);
                }
                if !alphabet.signed {
                    return Err(WordError::InverseInUnsigned(alphabet.letters[last.index]));
                }
                last.inverse = true;
                continue;
            }
            let index = alphabet.index_of(c).ok_or(WordError::UnknownLetter(c))?;
            letters.push(Letter { index, inverse: false });
        }
        Ok(Word { alphabet: alphabet.clone(), letters })
    }

    pub fn from_letters(alphabet: &Alphabet, letters: Vec<Letter>) -> Result<Word, WordError> {
        for l in &letters {
            if l.index >= alphabet.len() {
                return Err(WordError::UnknownLetter('?'));
            }
            if l.inverse && !alphabet.signed {
                return Err(WordError::InverseInUnsigned(alphabet.letters[l.index]));
            }
        }
        Ok(Word { alphabet: alphabet.clone(), letters })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Monoid product: `self` followed by `v`. Does not reduce.
    pub fn concat(&self, v: &Word) -> Result<Word, WordError> {
        if self.alphabet != v.alphabet {
            return Err(WordError::AlphabetMismatch);
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&v.letters);
        Ok(Word { alphabet: self.alphabet.clone(), letters })
    }

    /// Iterated cancellation of adjacent inverse pairs; the result has no
    /// factor `a a'` or `a' a`. Idempotent; the identity on unsigned words.
    pub fn reduce(&self) -> Word {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if stack.last().is_some_and(|&top| top.is_inverse_of(l)) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        Word { alphabet: self.alphabet.clone(), letters: stack }
    }

    /// The set of cyclic permutations of the word, deduplicated.
    pub fn cyclic_class(&self) -> BTreeSet<Word> {
        let mut out = BTreeSet::new();
        if self.letters.is_empty() {
            out.insert(self.clone());
            return out;
        }
        for r in 0..self.letters.len() {
            let mut rotated = self.letters[r..].to_vec();
            rotated.extend_from_slice(&self.letters[..r]);
            out.insert(Word { alphabet: self.alphabet.clone(), letters: rotated });
        }
        out
    }
}

// Shortlex order: length first, then letter sequence. Keeps language
// serialization stable and makes the empty word least.
impl Ord for Word {
    fn cmp(&self, other: &Word) -> std::cmp::Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Word) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", self.alphabet.letters[l.index])?;
            if l.inverse {
                write!(f, "'")?;
            }
        }
        Ok(())
    }
}

/// The five finite-set language operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LangOp {
    Union,
    Intersection,
    /// Unary: applies to the second operand.
    Complement,
    Product,
    LeftQuotient,
    /// Always rejected here; star is an automaton operation.
    Star,
}

/// A finite set of words with an explicit length bound.
///
/// The bound is the universe for complementation: `A*` is infinite, so a
/// complement only makes sense relative to "all words of length at most N".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteLanguage {
    alphabet: Alphabet,
    words: BTreeSet<Word>,
    length_bound: usize,
}

impl FiniteLanguage {
    pub fn new(
        alphabet: &Alphabet,
        words: impl IntoIterator<Item = Word>,
        length_bound: usize,
    ) -> Result<FiniteLanguage, WordError> {
        let mut set = BTreeSet::new();
        for w in words {
            if w.alphabet != *alphabet {
                return Err(WordError::AlphabetMismatch);
            }
            if w.len() > length_bound {
                return Err(WordError::WordTooLong { len: w.len(), bound: length_bound });
            }
            set.insert(w);
        }
        Ok(FiniteLanguage { alphabet: alphabet.clone(), words: set, length_bound })
    }

    /// Convenience constructor from ASCII word forms.
    pub fn parse(
        alphabet: &Alphabet,
        words: &[&str],
        length_bound: usize,
    ) -> Result<FiniteLanguage, WordError> {
        let parsed: Result<Vec<Word>, WordError> =
            words.iter().map(|s| Word::parse(alphabet, s)).collect();
        FiniteLanguage::new(alphabet, parsed?, length_bound)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn words(&self) -> &BTreeSet<Word> {
        &self.words
    }

    pub fn length_bound(&self) -> usize {
        self.length_bound
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.contains(w)
    }

    /// All words over the alphabet of length at most `bound`, shortlex order.
    /// Signed alphabets enumerate inverse letters too.
    pub fn universe(alphabet: &Alphabet, bound: usize) -> Result<FiniteLanguage, WordError> {
        let m = alphabet.symbol_count() as u64;
        let mut size: u64 = 0;
        let mut level: u64 = 1;
        for _ in 0..=bound {
            size = size.saturating_add(level);
            if size > MAX_UNIVERSE {
                return Err(WordError::UniverseTooLarge { bound });
            }
            level = level.saturating_mul(m);
        }
        let symbols = alphabet.all_symbols();
        let mut words = BTreeSet::new();
        let mut frontier = vec![Vec::<Letter>::new()];
        for _ in 0..=bound {
            let mut next = Vec::new();
            for prefix in &frontier {
                words.insert(Word { alphabet: alphabet.clone(), letters: prefix.clone() });
                for &s in &symbols {
                    let mut ext = prefix.clone();
                    ext.push(s);
                    next.push(ext);
                }
            }
            frontier = next;
        }
        Ok(FiniteLanguage { alphabet: alphabet.clone(), words, length_bound: bound })
    }

    pub fn union(&self, other: &FiniteLanguage) -> Result<FiniteLanguage, WordError> {
        self.check_alphabet(other)?;
        let words: BTreeSet<Word> = self.words.union(&other.words).cloned().collect();
        Ok(FiniteLanguage {
            alphabet: self.alphabet.clone(),
            words,
            length_bound: self.length_bound.max(other.length_bound),
        })
    }

    pub fn intersection(&self, other: &FiniteLanguage) -> Result<FiniteLanguage, WordError> {
        self.check_alphabet(other)?;
        let words: BTreeSet<Word> = self.words.intersection(&other.words).cloned().collect();
        Ok(FiniteLanguage {
            alphabet: self.alphabet.clone(),
            words,
            length_bound: self.length_bound.min(other.length_bound),
        })
    }

    /// Complement within the universe of all words up to this language's bound.
    pub fn complement(&self) -> Result<FiniteLanguage, WordError> {
        let universe = FiniteLanguage::universe(&self.alphabet, self.length_bound)?;
        let words: BTreeSet<Word> = universe.words.difference(&self.words).cloned().collect();
        Ok(FiniteLanguage { alphabet: self.alphabet.clone(), words, length_bound: self.length_bound })
    }

    /// Elementwise concatenation `KL = { uv : u in K, v in L }`. The result
    /// bound is the sum of the operand bounds; overflow past the supported
    /// maximum is reported, never silently truncated.
    pub fn product(&self, other: &FiniteLanguage) -> Result<FiniteLanguage, WordError> {
        self.check_alphabet(other)?;
        let bound = self.length_bound + other.length_bound;
        if bound > MAX_PRODUCT_BOUND {
            return Err(WordError::BoundOverflow { bound, max: MAX_PRODUCT_BOUND });
        }
        let mut words = BTreeSet::new();
        for u in &self.words {
            for v in &other.words {
                words.insert(u.concat(v)?);
            }
        }
        Ok(FiniteLanguage { alphabet: self.alphabet.clone(), words, length_bound: bound })
    }

    /// Left quotient `K \ L = { u : ku in L for some k in K }`.
    pub fn left_quotient(&self, l: &FiniteLanguage) -> Result<FiniteLanguage, WordError> {
        self.check_alphabet(l)?;
        let mut words = BTreeSet::new();
        for k in &self.words {
            for w in &l.words {
                if w.len() >= k.len() && w.letters[..k.len()] == k.letters[..] {
                    words.insert(Word {
                        alphabet: self.alphabet.clone(),
                        letters: w.letters[k.len()..].to_vec(),
                    });
                }
            }
        }
        Ok(FiniteLanguage { alphabet: self.alphabet.clone(), words, length_bound: l.length_bound })
    }

    /// Sorted ASCII forms, the serialization order for the JSON array format.
    pub fn to_strings(&self) -> Vec<String> {
        self.words.iter().map(|w| w.to_string()).collect()
    }

    fn check_alphabet(&self, other: &FiniteLanguage) -> Result<(), WordError> {
        if self.alphabet != other.alphabet {
            return Err(WordError::AlphabetMismatch);
        }
        Ok(())
    }
}

/// Dispatcher over the finite-language operations. `Complement` is unary and
/// applies to `l`; `Star` is rejected because the star of a nonempty finite
/// language is infinite (build it via [`crate::automaton::from_expr`]).
pub fn lang_op(
    op: LangOp,
    k: &FiniteLanguage,
    l: &FiniteLanguage,
) -> Result<FiniteLanguage, WordError> {
    match op {
        LangOp::Union => k.union(l),
        LangOp::Intersection => k.intersection(l),
        LangOp::Complement => l.complement(),
        LangOp::Product => k.product(l),
        LangOp::LeftQuotient => k.left_quotient(l),
        LangOp::Star => Err(WordError::StarNotFinite),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    fn ab() -> Alphabet {
        Alphabet::plain("ab").unwrap()
    }

    fn signed_ab() -> Alphabet {
        Alphabet::with_inverses("ab").unwrap()
    }

    fn w(a: &Alphabet, s: &str) -> Word {
        Word::parse(a, s).unwrap()
    }

    fn random_word(a: &Alphabet, max_len: usize, rng: &mut impl Rng) -> Word {
        let len = rng.gen_range(0..=max_len);
        let letters = (0..len)
            .map(|_| Letter {
                index: rng.gen_range(0..a.len()),
                inverse: a.is_signed() && rng.gen_bool(0.5),
            })
            .collect();
        Word::from_letters(a, letters).unwrap()
    }

    #[test]
    fn alphabet_rejects_duplicates_and_empty() {
        assert_eq!(Alphabet::plain("aba").unwrap_err(), WordError::DuplicateLetter('a'));
        assert_eq!(Alphabet::plain("").unwrap_err(), WordError::EmptyAlphabet);
    }

    #[test]
    fn concat_examples() {
        let a = ab();
        assert_eq!(w(&a, "ab").concat(&w(&a, "ba")).unwrap(), w(&a, "abba"));
        assert_eq!(Word::empty(&a).concat(&w(&a, "a")).unwrap(), w(&a, "a"));
        // Concatenation never reduces, even over a signed alphabet.
        let s = signed_ab();
        let u = w(&s, "a").concat(&w(&s, "a'")).unwrap();
        assert_eq!(u.to_string(), "aa'");
        assert_eq!(u.len(), 2);
    }

    #[test]
    fn concat_alphabet_mismatch() {
        let a = ab();
        let c = Alphabet::plain("xy").unwrap();
        assert_eq!(w(&a, "a").concat(&w(&c, "x")).unwrap_err(), WordError::AlphabetMismatch);
    }

    #[test]
    fn reduce_examples() {
        let s = signed_ab();
        assert_eq!(w(&s, "aa'b").reduce(), w(&s, "b"));
        assert_eq!(w(&s, "abb'a'").reduce(), Word::empty(&s));
        assert_eq!(w(&s, "aba").reduce(), w(&s, "aba"));
    }

    #[test]
    fn reduce_is_idempotent_on_random_words() {
        let s = signed_ab();
        let mut rng = crate::rng::seeded(11);
        for _ in 0..300 {
            let word = random_word(&s, 20, &mut rng);
            let once = word.reduce();
            assert_eq!(once.reduce(), once, "word {word}");
        }
    }

    #[test]
    fn concat_associative_empty_identity() {
        let a = ab();
        let mut rng = crate::rng::seeded(12);
        for _ in 0..200 {
            let (u, v, t) = (
                random_word(&a, 6, &mut rng),
                random_word(&a, 6, &mut rng),
                random_word(&a, 6, &mut rng),
            );
            let left = u.concat(&v).unwrap().concat(&t).unwrap();
            let right = u.concat(&v.concat(&t).unwrap()).unwrap();
            assert_eq!(left, right);
            let e = Word::empty(&a);
            assert_eq!(e.concat(&u).unwrap(), u);
            assert_eq!(u.concat(&e).unwrap(), u);
        }
    }

    #[test]
    fn cyclic_class_examples() {
        let a = ab();
        let class: Vec<String> =
            w(&a, "aab").cyclic_class().iter().map(|x| x.to_string()).collect();
        assert_eq!(class, ["aab", "aba", "baa"]);
        assert_eq!(w(&a, "abab").cyclic_class().len(), 2);
        let e = Word::empty(&a);
        assert_eq!(e.cyclic_class(), BTreeSet::from([e.clone()]));
    }

    #[test]
    fn cyclic_class_size_divides_length() {
        let a = ab();
        let mut rng = crate::rng::seeded(13);
        for _ in 0..200 {
            let word = random_word(&a, 12, &mut rng);
            if !word.is_empty() {
                assert_eq!(word.len() % word.cyclic_class().len(), 0, "word {word}");
            }
        }
    }

    #[test]
    fn lang_op_examples() {
        let a = ab();
        let k = FiniteLanguage::parse(&a, &["a"], 1).unwrap();
        let l = FiniteLanguage::parse(&a, &["b"], 1).unwrap();
        assert_eq!(
            lang_op(LangOp::Union, &k, &l).unwrap().to_strings(),
            vec!["a".to_string(), "b".to_string()]
        );

        // Oracle for the quotient example: enumerate all u with a.u in L.
        let l2 = FiniteLanguage::parse(&a, &["ab", "aa"], 2).unwrap();
        let mut expected: Vec<String> = Vec::new();
        for u in FiniteLanguage::universe(&a, 2).unwrap().words() {
            let au = w(&a, "a").concat(u).unwrap();
            if l2.contains(&au) {
                expected.push(u.to_string());
            }
        }
        expected.sort();
        let mut got = lang_op(LangOp::LeftQuotient, &k, &l2).unwrap().to_strings();
        got.sort();
        assert_eq!(got, expected);
        assert_eq!(got, vec!["a".to_string(), "b".to_string()]);

        let both = FiniteLanguage::parse(&a, &["a", "b"], 1).unwrap();
        let complement = lang_op(LangOp::Complement, &both, &both).unwrap();
        assert_eq!(complement.to_strings(), vec![String::new()]); // just the empty word
    }

    #[test]
    fn star_is_rejected() {
        let a = ab();
        let k = FiniteLanguage::parse(&a, &["a"], 1).unwrap();
        assert_eq!(lang_op(LangOp::Star, &k, &k).unwrap_err(), WordError::StarNotFinite);
    }

    #[test]
    fn product_concatenates_and_reports_overflow() {
        let a = ab();
        let k = FiniteLanguage::parse(&a, &["a", "b"], 1).unwrap();
        let l = FiniteLanguage::parse(&a, &["a"], 1).unwrap();
        let kl = k.product(&l).unwrap();
        assert_eq!(kl.to_strings(), vec!["aa".to_string(), "ba".to_string()]);
        assert_eq!(kl.length_bound(), 2);

        let big = FiniteLanguage::parse(&a, &[], 60).unwrap();
        assert_eq!(
            big.product(&big).unwrap_err(),
            WordError::BoundOverflow { bound: 120, max: 64 }
        );
    }

    #[test]
    fn complement_involution_and_de_morgan() {
        let a = ab();
        let mut rng = crate::rng::seeded(14);
        let universe = FiniteLanguage::universe(&a, 3).unwrap();
        let all: Vec<Word> = universe.words().iter().cloned().collect();
        for _ in 0..50 {
            let pick = |rng: &mut crate::rng::SeededRng| {
                let words: Vec<Word> =
                    all.iter().filter(|_| rng.gen_bool(0.4)).cloned().collect();
                FiniteLanguage::new(&a, words, 3).unwrap()
            };
            let k = pick(&mut rng);
            let l = pick(&mut rng);
            assert_eq!(k.complement().unwrap().complement().unwrap(), k);
            let lhs = k.union(&l).unwrap().complement().unwrap();
            let rhs = k.complement().unwrap().intersection(&l.complement().unwrap()).unwrap();
            assert_eq!(lhs.words(), rhs.words());
        }
    }

    #[test]
    fn universe_size_guard() {
        let a = ab();
        assert!(matches!(
            FiniteLanguage::universe(&a, 40).unwrap_err(),
            WordError::UniverseTooLarge { .. }
        ));
    }

    #[test]
    fn parse_round_trips_inverses() {
        let s = signed_ab();
        let word = w(&s, "a'ba");
        assert_eq!(word.to_string(), "a'ba");
        assert_eq!(Word::parse(&s, &word.to_string()).unwrap(), word);
        assert_eq!(Word::parse(&s, "'a").unwrap_err(), WordError::DanglingInverseMark);
        assert_eq!(
            Word::parse(&ab(), "a'").unwrap_err(),
            WordError::InverseInUnsigned('a')
        );
    }
}
