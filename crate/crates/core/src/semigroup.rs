//! Numerical semigroups and bounded pattern admissibility.
//!
//! A numerical semigroup is the set of non-negative integer combinations of
//! generators with gcd 1; it contains every integer from some point on (the
//! conductor). [`NumericalSemigroup::pattern_admitted`] checks a homogeneous
//! linear pattern against all non-increasing member tuples up to an explicit
//! cap. The verdict type keeps the cap visible: a pass is a bounded check,
//! not a theorem.

use std::fmt;

/// Errors from semigroup construction and queries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SemigroupError {
    /// At least one generator is required.
    EmptyGenerators,
    /// Generators must be positive.
    ZeroGenerator,
    /// The generators have gcd > 1, so the complement is infinite.
    GcdNotOne(u64),
    /// Membership is defined for non-negative integers only.
    NegativeInput(i64),
    /// Pattern checks must cover at least the conductor.
    BoundBelowConductor { bound: u64, conductor: u64 },
    /// Patterns need at least one variable.
    EmptyPattern,
    /// Pattern coefficients must be nonzero.
    ZeroCoefficient,
    /// A generator or coefficient failed to parse as an integer.
    BadNumber(String),
    /// The membership sieve grew past its safety cap; generators too large.
    SieveOverflow,
}

impl fmt::Display for SemigroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemigroupError::EmptyGenerators => write!(f, "need at least one generator"),
            SemigroupError::ZeroGenerator => write!(f, "generators must be positive"),
            SemigroupError::GcdNotOne(g) => {
                write!(f, "generators have gcd {g}; a numerical semigroup needs gcd 1")
            }
            SemigroupError::NegativeInput(x) => {
                write!(f, "membership is defined for x >= 0, got {x}")
            }
            SemigroupError::BoundBelowConductor { bound, conductor } => {
                write!(f, "bound {bound} is below the conductor {conductor}")
            }
            SemigroupError::EmptyPattern => write!(f, "pattern needs at least one coefficient"),
            SemigroupError::ZeroCoefficient => write!(f, "pattern coefficients must be nonzero"),
            SemigroupError::BadNumber(s) => write!(f, "cannot parse '{s}' as an integer"),
            SemigroupError::SieveOverflow => {
                write!(f, "membership sieve exceeded its safety cap")
            }
        }
    }
}

impl std::error::Error for SemigroupError {}

const SIEVE_CAP: usize = 1 << 22;

/// The set of non-negative integer combinations of a gcd-1 generator set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    conductor: u64,
    /// Membership table for 0..table.len(); everything >= conductor is a member.
    table: Vec<bool>,
}

impl NumericalSemigroup {
    pub fn new(generators: &[u64]) -> Result<NumericalSemigroup, SemigroupError> {
        if generators.is_empty() {
            return Err(SemigroupError::EmptyGenerators);
        }
        if generators.contains(&0) {
            return Err(SemigroupError::ZeroGenerator);
        }
        let mut generators: Vec<u64> = generators.to_vec();
        generators.sort_unstable();
        generators.dedup();
        let g = generators.iter().copied().fold(0, gcd);
        if g != 1 {
            return Err(SemigroupError::GcdNotOne(g));
        }

        // Sieve in doubling rounds until a run of min-generator consecutive
        // members appears: from there on, adding the smallest generator
        // reaches every larger integer.
        let multiplicity = generators[0] as usize;
        let mut len = (generators.last().copied().unwrap() as usize * 2).max(64);
        loop {
            if len > SIEVE_CAP {
                return Err(SemigroupError::SieveOverflow);
            }
            let mut table = vec![false; len];
            table[0] = true;
            for x in 1..len {
                if generators.iter().any(|&g| x >= g as usize && table[x - g as usize]) {
                    table[x] = true;
                }
            }
            if let Some(c) = first_full_run(&table, multiplicity) {
                return Ok(NumericalSemigroup { generators, conductor: c as u64, table });
            }
            len *= 2;
        }
    }

    /// Parses a comma-separated generator list, e.g. "2,3".
    pub fn parse(s: &str) -> Result<NumericalSemigroup, SemigroupError> {
        let mut gens = Vec::new();
        for piece in s.split(',') {
            let piece = piece.trim();
            let g: u64 =
                piece.parse().map_err(|_| SemigroupError::BadNumber(piece.to_string()))?;
            gens.push(g);
        }
        NumericalSemigroup::new(&gens)
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// Least c with every integer >= c a member.
    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Exact membership. Negative inputs are a domain error.
    pub fn member(&self, x: i64) -> Result<bool, SemigroupError> {
        if x < 0 {
            return Err(SemigroupError::NegativeInput(x));
        }
        let x = x as u64;
        if x >= self.conductor {
            return Ok(true);
        }
        Ok(self.table[x as usize])
    }

    /// Members up to and including `bound`, ascending.
    pub fn members_up_to(&self, bound: u64) -> Vec<u64> {
        (0..=bound).filter(|&x| self.member(x as i64).unwrap()).collect()
    }

    /// Gaps: the finitely many non-members.
    pub fn gaps(&self) -> Vec<u64> {
        (0..self.conductor).filter(|&x| !self.member(x as i64).unwrap()).collect()
    }

    /// Checks `p(s1..sn)` for membership over every non-increasing tuple of
    /// members `s1 >= ... >= sn` with `s1 <= bound`, in ascending
    /// lexicographic order, returning the first counterexample if any.
    pub fn pattern_admitted(
        &self,
        p: &LinearPattern,
        bound: u64,
    ) -> Result<PatternVerdict, SemigroupError> {
        if bound < self.conductor {
            return Err(SemigroupError::BoundBelowConductor { bound, conductor: self.conductor });
        }
        let members = self.members_up_to(bound);
        let mut tuple: Vec<u64> = Vec::with_capacity(p.len());
        if let Some(ce) = self.search_tuples(p, &members, &mut tuple) {
            return Ok(PatternVerdict::Counterexample { tuple: ce.0, value: ce.1 });
        }
        Ok(PatternVerdict::AdmittedUpToBound { bound })
    }

    fn search_tuples(
        &self,
        p: &LinearPattern,
        members: &[u64],
        tuple: &mut Vec<u64>,
    ) -> Option<(Vec<u64>, i64)> {
        if tuple.len() == p.len() {
            let value = p.eval(tuple);
            let ok = value >= 0 && self.member(value).unwrap();
            return if ok { None } else { Some((tuple.clone(), value)) };
        }
        for &m in members {
            if let Some(&prev) = tuple.last() {
                if m > prev {
                    break; // tuples are non-increasing
                }
            }
            tuple.push(m);
            let hit = self.search_tuples(p, members, tuple);
            tuple.pop();
            if hit.is_some() {
                return hit;
            }
        }
        None
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Start index of the first run of `run` consecutive true entries, if the
/// table is long enough to certify it.
fn first_full_run(table: &[bool], run: usize) -> Option<usize> {
    let mut streak = 0usize;
    for (i, &m) in table.iter().enumerate() {
        if m {
            streak += 1;
            if streak == run {
                return Some(i + 1 - run);
            }
        } else {
            streak = 0;
        }
    }
    None
}

/// A homogeneous linear polynomial with nonzero integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearPattern {
    coefficients: Vec<i64>,
}

impl LinearPattern {
    pub fn new(coefficients: &[i64]) -> Result<LinearPattern, SemigroupError> {
        if coefficients.is_empty() {
            return Err(SemigroupError::EmptyPattern);
        }
        if coefficients.contains(&0) {
            return Err(SemigroupError::ZeroCoefficient);
        }
        Ok(LinearPattern { coefficients: coefficients.to_vec() })
    }

    /// Parses comma-separated coefficients, e.g. "1,1,-1".
    pub fn parse(s: &str) -> Result<LinearPattern, SemigroupError> {
        let mut coeffs = Vec::new();
        for piece in s.split(',') {
            let piece = piece.trim();
            let c: i64 =
                piece.parse().map_err(|_| SemigroupError::BadNumber(piece.to_string()))?;
            coeffs.push(c);
        }
        LinearPattern::new(&coeffs)
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        false // invariant: at least one coefficient
    }

    pub fn eval(&self, tuple: &[u64]) -> i64 {
        assert_eq!(tuple.len(), self.coefficients.len(), "arity mismatch");
        self.coefficients
            .iter()
            .zip(tuple)
            .map(|(&c, &s)| c * s as i64)
            .sum()
    }
}

impl fmt::Display for LinearPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &c) in self.coefficients.iter().enumerate() {
            let var = i + 1;
            if i == 0 {
                match c {
                    1 => write!(f, "x{var}")?,
                    -1 => write!(f, "-x{var}")?,
                    _ => write!(f, "{c}x{var}")?,
                }
            } else {
                let sign = if c < 0 { '-' } else { '+' };
                let mag = c.unsigned_abs();
                if mag == 1 {
                    write!(f, " {sign} x{var}")?;
                } else {
                    write!(f, " {sign} {mag}x{var}")?;
                }
            }
        }
        Ok(())
    }
}

/// Outcome of a bounded pattern check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PatternVerdict {
    /// No violation among tuples with entries up to `bound`. Not a proof.
    AdmittedUpToBound { bound: u64 },
    /// The first (ascending lexicographic) violating tuple and its value.
    Counterexample { tuple: Vec<u64>, value: i64 },
}
