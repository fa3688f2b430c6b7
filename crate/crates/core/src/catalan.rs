//! Circuits on `{1..n}`, link-function matching, catalan words, exact
//! circuit-class counts, and the limiting probabilities they converge to.
//!
//! A circuit of length h is a map π(0..h) into {1..n} with π(0) = π(h). A
//! link function L assigns a value to each step (π(i−1), π(i)); two circuits
//! are equivalent when their L-value sequences have the same equality
//! pattern. Equality patterns are labeled by words whose first letter
//! occurrences run alphabetically, and a word is *catalan* when every letter
//! occurs exactly twice and repeatedly deleting adjacent double letters
//! empties it (abba is catalan, abab is not).
//!
//! Counting fixes the additive link L(i,j) = i + j. For a catalan word w of
//! length 2k, the circuits matching w are enumerated from the k+1 generating
//! vertices (position 0 plus the first-occurrence positions): every other
//! value is forced by `π(j) = s − π(j−1)` where s is the pair's sum. A
//! circuit is counted when all values stay in range, every pair sum is at
//! most n+1, and distinct letters carry distinct sums — the strict reading;
//! without the distinctness requirement the count also includes degenerate
//! coincidences and the n³-normalized "abba" count overshoots its 1/3 limit.
//! The count divided by n^(k+1) converges to an explicit integral over the
//! unit cube, which is also estimated here by seeded Monte-Carlo sampling.

use std::collections::HashMap;
use std::fmt;

use num::{BigInt, BigRational, One, Zero};

use crate::partition::{RgsWord, SetPartition};
use crate::rng::{seeded, uniform_unit};
use crate::word::{Alphabet, Word};

const MAX_RANGE: u64 = 200;
const MAX_PAIRS: usize = 4;
const MIN_SAMPLES: u64 = 1_000;

/// Errors from circuit construction and catalan-word analysis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalanError {
    /// A circuit must close: π(0) = π(h).
    EndpointsDiffer,
    /// A circuit has length at least 1, i.e. at least two values.
    CircuitTooShort,
    /// A circuit value outside 1..=n.
    ValueOutOfRange { value: u64, n: u64 },
    /// Equivalence compares circuits of equal length only.
    LengthMismatch { left: usize, right: usize },
    /// First letter occurrences must run alphabetically (a before b ...).
    BadWordLabel(String),
    /// The operation needs a catalan word.
    NotCatalan(String),
    /// The empty word labels no circuit.
    EmptyWord,
    /// Counting supports at most 4 letter pairs.
    TooManyPairs { k: usize },
    /// Counting supports ranges up to n = 200.
    RangeTooLarge { n: u64 },
    /// A position outside 0..=2k.
    PositionOutOfRange { j: usize },
    /// Monte-Carlo estimates need at least 1000 samples.
    SamplesTooFew { samples: u64 },
    /// No closed-form polynomial is stored for this word.
    UnsupportedWord(String),
}

impl fmt::Display for CatalanError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalanError::EndpointsDiffer => write!(f, "circuit endpoints differ"),
            CatalanError::CircuitTooShort => write!(f, "a circuit has length at least 1"),
            CatalanError::ValueOutOfRange { value, n } => {
                write!(f, "circuit value {value} is outside 1..={n}")
            }
            CatalanError::LengthMismatch { left, right } => {
                write!(f, "circuit lengths differ: {left} vs {right}")
            }
            CatalanError::BadWordLabel(w) => {
                write!(f, "'{w}' is not a pattern label: first occurrences must run a, b, c, ...")
            }
            CatalanError::NotCatalan(w) => write!(f, "'{w}' is not a catalan word"),
            CatalanError::EmptyWord => write!(f, "the empty word labels no circuit"),
            CatalanError::TooManyPairs { k } => {
                write!(f, "{k} letter pairs exceed the supported maximum {MAX_PAIRS}")
            }
            CatalanError::RangeTooLarge { n } => {
                write!(f, "range {n} exceeds the supported maximum {MAX_RANGE}")
            }
            CatalanError::PositionOutOfRange { j } => write!(f, "position {j} is out of range"),
            CatalanError::SamplesTooFew { samples } => {
                write!(f, "{samples} samples are below the minimum {MIN_SAMPLES}")
            }
            CatalanError::UnsupportedWord(w) => {
                write!(f, "no closed-form polynomial is stored for '{w}'")
            }
        }
    }
}

impl std::error::Error for CatalanError {}

/// A closed walk of values: π(0..h) in {1..n} with π(0) = π(h), h ≥ 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circuit {
    n: u64,
    values: Vec<u64>,
}

impl Circuit {
    pub fn new(n: u64, values: Vec<u64>) -> Result<Circuit, CatalanError> {
        if values.len() < 2 {
            return Err(CatalanError::CircuitTooShort);
        }
        if values.first() != values.last() {
            return Err(CatalanError::EndpointsDiffer);
        }
        for &value in &values {
            if value < 1 || value > n {
                return Err(CatalanError::ValueOutOfRange { value, n });
            }
        }
        Ok(Circuit { n, values })
    }

    /// The length h (number of steps).
    pub fn len(&self) -> usize {
        self.values.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false // h >= 1 by construction
    }

    pub fn range(&self) -> u64 {
        self.n
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }
}

/// How a step (i, j) is scored.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LinkFunction {
    /// L(i, j) = i + j.
    Hankel,
    /// L(i, j) = (min, max): the unordered pair itself.
    Wigner,
}

/// A link value; both kinds are symmetric in (i, j) and unchanged when the
/// ambient range grows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LinkValue {
    Sum(u64),
    Pair(u64, u64),
}

impl fmt::Display for LinkValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinkValue::Sum(s) => write!(f, "{s}"),
            LinkValue::Pair(a, b) => write!(f, "({a},{b})"),
        }
    }
}

/// The step scores L(π(i−1), π(i)) for i = 1..h.
pub fn l_values(pi: &Circuit, link: LinkFunction) -> Vec<LinkValue> {
    pi.values
        .windows(2)
        .map(|w| match link {
            LinkFunction::Hankel => LinkValue::Sum(w[0] + w[1]),
            LinkFunction::Wigner => LinkValue::Pair(w[0].min(w[1]), w[0].max(w[1])),
        })
        .collect()
}

/// Positions 1..h grouped by equal link values, as block indices in order of
/// first appearance (0, then 1, ...).
fn equality_pattern(pi: &Circuit, link: LinkFunction) -> Vec<usize> {
    let mut classes: HashMap<LinkValue, usize> = HashMap::new();
    l_values(pi, link)
        .into_iter()
        .map(|v| {
            let next = classes.len();
            *classes.entry(v).or_insert(next)
        })
        .collect()
}

/// The word labeling a circuit's equality pattern; first occurrences run
/// alphabetically by construction. Supports up to 26 distinct link values.
pub fn match_word(pi: &Circuit, link: LinkFunction) -> RgsWord {
    let pattern = equality_pattern(pi, link);
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for (pos, &class) in pattern.iter().enumerate() {
        if class == blocks.len() {
            blocks.push(Vec::new());
        }
        blocks[class].push(pos + 1);
    }
    SetPartition::new(pattern.len(), blocks)
        .expect("classes partition the positions")
        .to_word()
}

/// True when the two circuits' link values match at the same locations:
/// equal values in one exactly where equal in the other.
pub fn circuits_equivalent(
    a: &Circuit,
    b: &Circuit,
    link: LinkFunction,
) -> Result<bool, CatalanError> {
    if a.len() != b.len() {
        return Err(CatalanError::LengthMismatch { left: a.len(), right: b.len() });
    }
    Ok(equality_pattern(a, link) == equality_pattern(b, link))
}

/// Parses a pattern label: lowercase letters whose first occurrences run
/// a, b, c, ... in order.
pub fn parse_match_word(s: &str) -> Result<Word, CatalanError> {
    let mut distinct = Vec::new();
    for c in s.chars() {
        if !c.is_ascii_lowercase() {
            return Err(CatalanError::BadWordLabel(s.to_string()));
        }
        if !distinct.contains(&c) {
            distinct.push(c);
        }
    }
    let expected: Vec<char> = ('a'..).take(distinct.len()).collect();
    if distinct != expected {
        return Err(CatalanError::BadWordLabel(s.to_string()));
    }
    let alphabet = Alphabet::latin(distinct.len().max(1));
    Word::parse(&alphabet, s).map_err(|_| CatalanError::BadWordLabel(s.to_string()))
}

/// Every letter that occurs occurs exactly twice.
pub fn is_pair_matched(w: &Word) -> bool {
    let mut counts: HashMap<usize, usize> = HashMap::new();
    for l in w.letters() {
        *counts.entry(l.index).or_insert(0) += 1;
    }
    counts.values().all(|&c| c == 2)
}

/// Pair-matched, and repeatedly deleting adjacent double letters reaches
/// the empty word. The deletion is order-independent, so a single
/// stack-cancellation pass decides it.
pub fn is_catalan(w: &Word) -> bool {
    if !is_pair_matched(w) {
        return false;
    }
    let mut stack: Vec<usize> = Vec::new();
    for l in w.letters() {
        if stack.last() == Some(&l.index) {
            stack.pop();
        } else {
            stack.push(l.index);
        }
    }
    stack.is_empty()
}

/// The nesting structure of a catalan word: for each position 1..=2k, the
/// position its pair opens at, plus the set of opening positions.
struct Pairing {
    /// opener[j−1] = position where the pair closed at j opened; openers
    /// point at themselves.
    opener: Vec<usize>,
    /// Opening (first-occurrence) positions, ascending.
    openings: Vec<usize>,
}

fn pairing(w: &Word) -> Result<Pairing, CatalanError> {
    if w.is_empty() {
        return Err(CatalanError::EmptyWord);
    }
    if !is_catalan(w) {
        return Err(CatalanError::NotCatalan(w.to_string()));
    }
    let h = w.len();
    let mut opener = vec![0usize; h];
    let mut openings = Vec::new();
    let mut stack: Vec<(usize, usize)> = Vec::new(); // (letter, position)
    for (pos0, l) in w.letters().iter().enumerate() {
        let pos = pos0 + 1;
        if let Some(&(letter, at)) = stack.last() {
            if letter == l.index {
                stack.pop();
                opener[pos - 1] = at;
                continue;
            }
        }
        stack.push((l.index, pos));
        opener[pos - 1] = pos;
        openings.push(pos);
    }
    debug_assert!(stack.is_empty(), "catalan words cancel completely");
    Ok(Pairing { opener, openings })
}

/// The generating vertices of a catalan word of length 2k: position 0 and
/// the k first-occurrence positions, ascending — k+1 in total. Every other
/// position's circuit value is forced by these.
pub fn generating_vertices(w: &Word) -> Result<Vec<usize>, CatalanError> {
    let p = pairing(w)?;
    let mut s = vec![0];
    s.extend(&p.openings);
    Ok(s)
}

/// The generating vertex that determines position j: the identity on
/// generating positions; a closing position inherits from the position just
/// before its opener. In particular phi(2k) = 0.
pub fn phi(w: &Word, j: usize) -> Result<usize, CatalanError> {
    let p = pairing(w)?;
    if j > w.len() {
        return Err(CatalanError::PositionOutOfRange { j });
    }
    let mut phi = vec![0usize; w.len() + 1];
    for pos in 1..=w.len() {
        let open = p.opener[pos - 1];
        phi[pos] = if open == pos { pos } else { phi[open - 1] };
    }
    Ok(phi[j])
}

/// Checks the count preconditions and exposes the pairing.
fn counting_setup(w: &Word, n: u64) -> Result<Pairing, CatalanError> {
    let p = pairing(w)?;
    let k = w.len() / 2;
    if k > MAX_PAIRS {
        return Err(CatalanError::TooManyPairs { k });
    }
    if n > MAX_RANGE {
        return Err(CatalanError::RangeTooLarge { n });
    }
    Ok(p)
}

/// The number of circuits on {1..n} whose additive link values match `w`:
/// equal sums exactly at equal letters, all pair sums at most n+1. Exact.
pub fn count_pi1_star(w: &Word, n: u64) -> Result<u64, CatalanError> {
    count_pi1_star_jobs(w, n, 1)
}

/// The same count with the outermost generating value π(0) split across
/// `jobs` threads; partial counts are added in ascending range order, so
/// the result is identical for every job count.
pub fn count_pi1_star_jobs(w: &Word, n: u64, jobs: usize) -> Result<u64, CatalanError> {
    let p = counting_setup(w, n)?;
    let count_range = |lo: u64, hi: u64| -> u64 {
        let mut values = vec![0i64; w.len() + 1];
        let mut total = 0u64;
        for v0 in lo..hi {
            values[0] = v0 as i64;
            total += count_from(&p, w.len(), n as i64, &mut values, 1, &mut Vec::new());
        }
        total
    };
    let jobs = jobs.max(1).min(n.max(1) as usize);
    if jobs <= 1 {
        return Ok(count_range(1, n + 1));
    }
    let chunk = n.div_ceil(jobs as u64);
    let partials: Vec<u64> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs as u64)
            .map(|j| {
                let lo = (1 + j * chunk).min(n + 1);
                let hi = (1 + (j + 1) * chunk).min(n + 1);
                let count_range = &count_range;
                scope.spawn(move || count_range(lo, hi))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    Ok(partials.iter().sum())
}

/// Depth-first assignment of circuit values from position `pos` on, with
/// `sums` holding the pair sums opened so far (innermost last).
fn count_from(
    p: &Pairing,
    h: usize,
    n: i64,
    values: &mut [i64],
    pos: usize,
    sums: &mut Vec<(usize, i64)>, // (opening position, sum)
) -> u64 {
    if pos > h {
        debug_assert_eq!(values[0], values[h], "catalan circuits close themselves");
        return 1;
    }
    let prev = values[pos - 1];
    let open = p.opener[pos - 1];
    if open == pos {
        // Opening position: free value, bounded so the pair sum stays <= n+1,
        // and the sum must differ from every other letter's sum.
        let mut total = 0;
        for v in 1..=(n + 1 - prev).min(n) {
            let s = prev + v;
            if sums.iter().any(|&(_, t)| t == s) {
                continue;
            }
            values[pos] = v;
            sums.push((pos, s));
            total += count_from(p, h, n, values, pos + 1, sums);
            sums.pop();
        }
        total
    } else {
        // Closing position: the value is forced by the pair's sum.
        let s = sums
            .iter()
            .find(|&&(at, _)| at == open)
            .map(|&(_, s)| s)
            .expect("closing follows its opening");
        let v = s - prev;
        if v < 1 || v > n {
            return 0;
        }
        values[pos] = v;
        count_from(p, h, n, values, pos + 1, sums)
    }
}

/// The exact count normalized by n^(k+1); converges to the limit integral.
pub fn pu_ratio(w: &Word, n: u64) -> Result<BigRational, CatalanError> {
    let count = count_pi1_star(w, n)?;
    let k = w.len() / 2;
    // n ≤ 200 and k ≤ 4, so n^(k+1) fits comfortably in 64 bits.
    let denom = BigInt::from(n.pow(k as u32 + 1));
    Ok(BigRational::new(BigInt::from(count), denom))
}

/// Monte-Carlo estimate of the limit: the volume of the region of the unit
/// cube [0,1]^(k+1), coordinates indexed by the generating vertices, where
/// v(phi(i−1)) + v(phi(i)) <= 1 for every opening position i. Seeded, so
/// the estimate is reproducible.
pub fn pu_integral(w: &Word, samples: u64, seed: u64) -> Result<f64, CatalanError> {
    if samples < MIN_SAMPLES {
        return Err(CatalanError::SamplesTooFew { samples });
    }
    let p = pairing(w)?;
    let h = w.len();
    // phi over all positions, plus each generating position's slot in v.
    let mut phi = vec![0usize; h + 1];
    let mut slot = vec![usize::MAX; h + 1];
    slot[0] = 0;
    let mut slots = 1;
    for pos in 1..=h {
        let open = p.opener[pos - 1];
        if open == pos {
            phi[pos] = pos;
            slot[pos] = slots;
            slots += 1;
        } else {
            phi[pos] = phi[open - 1];
        }
    }
    let mut rng = seeded(seed);
    let mut hits = 0u64;
    let mut v = vec![0.0f64; slots];
    for _ in 0..samples {
        for x in v.iter_mut() {
            *x = uniform_unit(&mut rng);
        }
        let ok = p
            .openings
            .iter()
            .all(|&i| v[slot[phi[i - 1]]] + v[slot[phi[i]]] <= 1.0);
        if ok {
            hits += 1;
        }
    }
    Ok(hits as f64 / samples as f64)
}

/// A polynomial with exact rational coefficients, ascending powers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<BigRational>) -> Polynomial {
        let mut coeffs = coeffs;
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// The exact integral over [0, 1]: sum of c_i / (i+1).
    pub fn integrate01(&self) -> BigRational {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c / BigRational::from_integer(BigInt::from(i as u64 + 1)))
            .sum()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c < &BigRational::zero();
            let magnitude = if negative { -c.clone() } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            }
            let coeff = crate::rational::rat_str(&magnitude);
            match i {
                0 => write!(f, "{coeff}")?,
                _ => {
                    if !magnitude.is_one() {
                        write!(f, "{coeff} ")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// The stored closed-form inner-integral polynomials: 1 − x for "aa" and
/// (1 − x²)/2 for "abba". Their integrals over [0,1] are the limits 1/2
/// and 1/3.
pub fn q_polynomial(w: &Word) -> Result<Polynomial, CatalanError> {
    let rat = |p: i64, q: i64| BigRational::new(p.into(), q.into());
    match w.to_string().as_str() {
        "aa" => Ok(Polynomial::new(vec![rat(1, 1), rat(-1, 1)])),
        "abba" => Ok(Polynomial::new(vec![rat(1, 2), rat(0, 1), rat(-1, 2)])),
        other => Err(CatalanError::UnsupportedWord(other.to_string())),
    }
}
