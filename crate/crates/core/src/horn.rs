//! Inductive triple sets for the Horn problem and partition admissibility.
//!
//! For `1 <= r <= n`, the base set over r-subsets of `{1..n}` is
//!
//! ```text
//! U(n,r) = { (I,J,K) : sum(I) + sum(J) = sum(K) + r(r+1)/2 }
//! ```
//!
//! and the inductive set `T(n,r)` keeps the triples of `U(n,r)` that satisfy,
//! for every `p < r` and every `(F,G,H)` in `T(r,p)`,
//!
//! ```text
//! sum_{f in F} i_f + sum_{g in G} j_g <= sum_{h in H} k_h + p(p+1)/2
//! ```
//!
//! where `i_f` is the f-th smallest element of `I`. A triple of partitions
//! (eigenvalue vectors) is admissible exactly when its weights balance and
//! every `T(n,r)` inequality holds; positivity of the matching
//! Littlewood-Richardson coefficient is an equivalent criterion, and the test
//! suite checks the two against each other.
//!
//! Enumeration is deliberately brute force over all `C(n,r)^3` subset
//! triples — the sizes of interest are tiny and the simple loop is the
//! behavioral reference. `*_jobs` variants split the outer subset across
//! threads; results are sorted, so the thread count never changes output.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;

use crate::partition::Partition;

/// Errors from triple-set computation and admissibility queries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HornError {
    /// Requires `1 <= r <= n`.
    RankOutOfRange { n: usize, r: usize },
    /// Admissibility over `{1..n}` needs partitions with at most n parts.
    PartitionTooLong { parts: usize, n: usize },
}

impl fmt::Display for HornError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HornError::RankOutOfRange { n, r } => {
                write!(f, "need 1 <= r <= n, got r={r}, n={n}")
            }
            HornError::PartitionTooLong { parts, n } => {
                write!(f, "partition has {parts} parts but the ambient size is {n}")
            }
        }
    }
}

impl std::error::Error for HornError {}

/// Three strictly increasing r-subsets of `{1..n}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexTriple {
    pub i: Vec<usize>,
    pub j: Vec<usize>,
    pub k: Vec<usize>,
}

impl IndexTriple {
    pub fn new(i: Vec<usize>, j: Vec<usize>, k: Vec<usize>) -> IndexTriple {
        for s in [&i, &j, &k] {
            debug_assert!(s.windows(2).all(|w| w[0] < w[1]), "subsets must increase");
        }
        IndexTriple { i, j, k }
    }

    /// The three subsets as arrays, the JSON serialization.
    pub fn as_arrays(&self) -> [&[usize]; 3] {
        [&self.i, &self.j, &self.k]
    }
}

impl fmt::Display for IndexTriple {
    /// Matches the `({1, 2}, {1, 3}, {1, 3})` table style.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn braces(f: &mut fmt::Formatter<'_>, s: &[usize]) -> fmt::Result {
            write!(f, "{{")?;
            for (pos, x) in s.iter().enumerate() {
                if pos > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "}}")
        }
        write!(f, "(")?;
        braces(f, &self.i)?;
        write!(f, ", ")?;
        braces(f, &self.j)?;
        write!(f, ", ")?;
        braces(f, &self.k)?;
        write!(f, ")")
    }
}

/// A computed `U(n,r)` or `T(n,r)`: lexicographically sorted, duplicate-free.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HornSet {
    n: usize,
    r: usize,
    triples: Vec<IndexTriple>,
}

impl HornSet {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn triples(&self) -> &[IndexTriple] {
        &self.triples
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn contains(&self, t: &IndexTriple) -> bool {
        self.triples.binary_search(t).is_ok()
    }

    /// Triples of `self` absent from `other`, in order.
    pub fn difference(&self, other: &HornSet) -> Vec<IndexTriple> {
        self.triples.iter().filter(|t| !other.contains(t)).cloned().collect()
    }
}

fn check_rank(n: usize, r: usize) -> Result<(), HornError> {
    if r == 0 || r > n {
        return Err(HornError::RankOutOfRange { n, r });
    }
    Ok(())
}

/// All triples of r-subsets of `{1..n}` satisfying the sum identity, sorted.
pub fn compute_u(n: usize, r: usize) -> Result<HornSet, HornError> {
    compute_u_jobs(n, r, 1)
}

/// As [`compute_u`], splitting the outer subset `I` over up to `jobs`
/// threads. Output is independent of `jobs`.
pub fn compute_u_jobs(n: usize, r: usize, jobs: usize) -> Result<HornSet, HornError> {
    check_rank(n, r)?;
    let subsets: Vec<Vec<usize>> = (1..=n).combinations(r).collect();
    let target = r * (r + 1) / 2;
    let sums: Vec<usize> = subsets.iter().map(|s| s.iter().sum()).collect();

    let scan = |lo: usize, hi: usize| -> Vec<IndexTriple> {
        let mut local = Vec::new();
        for ii in lo..hi {
            for jj in 0..subsets.len() {
                let need = sums[ii] + sums[jj];
                if need < target {
                    continue;
                }
                for kk in 0..subsets.len() {
                    if sums[kk] + target == need {
                        local.push(IndexTriple::new(
                            subsets[ii].clone(),
                            subsets[jj].clone(),
                            subsets[kk].clone(),
                        ));
                    }
                }
            }
        }
        local
    };

    let jobs = jobs.max(1).min(subsets.len());
    let mut triples: Vec<IndexTriple> = if jobs <= 1 {
        scan(0, subsets.len())
    } else {
        let chunk = subsets.len().div_ceil(jobs);
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..jobs)
                .map(|t| {
                    let lo = t * chunk;
                    let hi = ((t + 1) * chunk).min(subsets.len());
                    let scan = &scan;
                    scope.spawn(move || scan(lo, hi))
                })
                .collect();
            let mut all = Vec::new();
            for h in handles {
                all.extend(h.join().expect("worker panicked"));
            }
            all
        })
    };
    triples.sort();
    Ok(HornSet { n, r, triples })
}

/// The inductive filter of `U(n,r)`, memoizing the lower sets `T(r,p)`.
pub fn compute_t(n: usize, r: usize) -> Result<HornSet, HornError> {
    compute_t_jobs(n, r, 1)
}

/// As [`compute_t`], with the base enumeration and the filter pass split
/// over up to `jobs` threads. Output is independent of `jobs`.
pub fn compute_t_jobs(n: usize, r: usize, jobs: usize) -> Result<HornSet, HornError> {
    check_rank(n, r)?;
    let mut memo: HashMap<(usize, usize), Vec<IndexTriple>> = HashMap::new();
    let triples = t_inner(n, r, jobs, &mut memo)?;
    Ok(HornSet { n, r, triples })
}

fn t_inner(
    n: usize,
    r: usize,
    jobs: usize,
    memo: &mut HashMap<(usize, usize), Vec<IndexTriple>>,
) -> Result<Vec<IndexTriple>, HornError> {
    if let Some(hit) = memo.get(&(n, r)) {
        return Ok(hit.clone());
    }
    // The lower sets are tiny; compute them sequentially before filtering.
    for p in 1..r {
        t_inner(r, p, 1, memo)?;
    }
    let lower: Vec<(usize, Vec<IndexTriple>)> =
        (1..r).map(|p| (p, memo[&(r, p)].clone())).collect();
    let u = compute_u_jobs(n, r, jobs)?.triples;

    let jobs = jobs.max(1).min(u.len().max(1));
    let mut triples: Vec<IndexTriple> = if jobs <= 1 {
        u.iter().filter(|t| survives_filter(t, &lower)).cloned().collect()
    } else {
        let chunk = u.len().div_ceil(jobs).max(1);
        std::thread::scope(|scope| {
            let handles: Vec<_> = u
                .chunks(chunk)
                .map(|part| {
                    let lower = &lower;
                    scope.spawn(move || {
                        part.iter()
                            .filter(|t| survives_filter(t, lower))
                            .cloned()
                            .collect::<Vec<_>>()
                    })
                })
                .collect();
            let mut all = Vec::new();
            for h in handles {
                all.extend(h.join().expect("worker panicked"));
            }
            all
        })
    };
    triples.sort();
    memo.insert((n, r), triples.clone());
    Ok(triples)
}

/// The inductive inequality over every lower triple: positions named by
/// (F,G,H) select elements of (I,J,K) by rank.
fn survives_filter(t: &IndexTriple, lower: &[(usize, Vec<IndexTriple>)]) -> bool {
    for (p, set) in lower {
        let slack = p * (p + 1) / 2;
        for fgh in set {
            let left: usize = fgh.i.iter().map(|&f| t.i[f - 1]).sum::<usize>()
                + fgh.j.iter().map(|&g| t.j[g - 1]).sum::<usize>();
            let right: usize = fgh.k.iter().map(|&h| t.k[h - 1]).sum::<usize>() + slack;
            if left > right {
                return false;
            }
        }
    }
    true
}

/// The partition `(i_r - r, ..., i_1 - 1)` attached to a strictly increasing
/// index set: subtracting the staircase leaves a non-increasing sequence.
pub fn partition_from_indices(indices: &[usize]) -> Partition {
    assert!(
        indices.windows(2).all(|w| w[0] < w[1]),
        "index set must be strictly increasing"
    );
    Partition::new(
        indices
            .iter()
            .enumerate()
            .map(|(pos, &i)| (i - (pos + 1)) as u64),
    )
}

/// Horn admissibility of `(lambda, mu, nu)` over ambient size `n`: weights
/// balance and every inequality `sum_K nu <= sum_I lambda + sum_J mu` holds
/// over `T(n,r)` for `1 <= r < n`. Parts are indexed descending and
/// zero-padded to length n.
pub fn is_admissible(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    n: usize,
) -> Result<bool, HornError> {
    for p in [lambda, mu, nu] {
        if p.len() > n {
            return Err(HornError::PartitionTooLong { parts: p.len(), n });
        }
    }
    if lambda.weight() + mu.weight() != nu.weight() {
        return Ok(false);
    }
    let sum_at = |p: &Partition, set: &[usize]| -> u64 {
        set.iter().map(|&idx| p.part(idx - 1)).sum()
    };
    for r in 1..n {
        for t in compute_t(n, r)?.triples {
            if sum_at(nu, &t.k) > sum_at(lambda, &t.i) + sum_at(mu, &t.j) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
