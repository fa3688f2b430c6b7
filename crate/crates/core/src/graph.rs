//! Undirected multigraphs with loops: the block-clique graph of a set
//! partition, degree and handshake accounting, walk counting under the
//! loop-length-2 rule, connectivity, regularity, bipartiteness with
//! witnesses, combinatorial configurations, spectra, and centrality and
//! distance metrics.
//!
//! Conventions fixed here:
//! - The adjacency matrix stores 2 per loop on the diagonal, so row sums
//!   equal degrees and the handshake identity reads directly off the matrix.
//! - A walk step along a loop consumes length 2; every other edge consumes
//!   length 1. Walk counts therefore differ from adjacency-matrix powers
//!   exactly when loops exist, and a dedicated dynamic program computes
//!   them. Parallel edges are distinct step choices.
//! - Bipartiteness is about colorability, so there a loop is a single
//!   odd step; the length-2 rule applies to walk counting only.
//! - Shortest paths (betweenness, distances) live on the underlying simple
//!   graph: parallel edges do not multiply path counts and loops never lie
//!   on a shortest path. Betweenness counts each unordered source-target
//!   pair once, excludes the endpoints themselves, and is exact rational.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num::{BigInt, BigRational, BigUint, One, Zero};

use crate::partition::SetPartition;

const MAX_WALK_LENGTH: u64 = 20;
const MAX_SPECTRUM_VERTICES: usize = 512;
const JACOBI_SWEEP_CAP: usize = 60;

/// Errors from graph construction and analysis.
#[derive(Clone, Debug, PartialEq)]
pub enum GraphError {
    /// An endpoint outside 1..=n.
    VertexOutOfRange { v: usize, n: usize },
    /// A malformed edge-list file.
    BadEdgeList(String),
    /// Walk lengths are capped at 20.
    WalkTooLong { r: u64 },
    /// Spectra are computed for at most 512 vertices.
    TooManyVertices { n: usize },
    /// The rotation sweeps did not push the off-diagonal norm below the
    /// tolerance within the sweep cap.
    NonConvergence { sweeps: usize, off_norm: f64 },
    /// Distance statistics need a connected graph.
    Disconnected,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange { v, n } => {
                write!(f, "vertex {v} is outside 1..={n}")
            }
            GraphError::BadEdgeList(line) => write!(f, "cannot parse edge list: {line}"),
            GraphError::WalkTooLong { r } => {
                write!(f, "walk length {r} exceeds the supported maximum {MAX_WALK_LENGTH}")
            }
            GraphError::TooManyVertices { n } => {
                write!(f, "{n} vertices exceed the spectrum limit {MAX_SPECTRUM_VERTICES}")
            }
            GraphError::NonConvergence { sweeps, off_norm } => write!(
                f,
                "diagonalization stalled after {sweeps} sweeps (off-diagonal norm {off_norm:e})"
            ),
            GraphError::Disconnected => write!(f, "graph is not connected"),
        }
    }
}

impl std::error::Error for GraphError {}

/// An undirected multigraph on vertices 1..=n. Loops (`u = u`) and parallel
/// edges are allowed; a repeated pair raises the multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    /// Normalized so u <= v, sorted; each entry is one edge of the multiset.
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Multigraph, GraphError> {
        let mut normalized = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            if u < 1 || u > n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v < 1 || v > n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        Ok(Multigraph { n, edges: normalized })
    }

    /// The block-clique graph: u ~ v exactly when u and v share a block, so
    /// the result is a disjoint union of cliques, one per block.
    pub fn from_set_partition(sp: &SetPartition) -> Multigraph {
        let mut edges = Vec::new();
        for block in sp.blocks() {
            for (i, &u) in block.iter().enumerate() {
                for &v in &block[i + 1..] {
                    edges.push((u, v));
                }
            }
        }
        Multigraph::new(sp.n(), edges).expect("blocks stay within 1..=n")
    }

    /// Parses the edge-list format: a header line `n m` (vertex count, edge
    /// count), then m lines `u v`; `u u` is a loop and repeated lines raise
    /// multiplicity. Blank lines and `#` comments are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Multigraph, GraphError> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| GraphError::BadEdgeList("empty file".into()))?;
        let parse_pair = |line: &str| -> Result<(usize, usize), GraphError> {
            let mut it = line.split_whitespace();
            let bad = || GraphError::BadEdgeList(format!("expected two integers, got '{line}'"));
            let a = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            let b = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            if it.next().is_some() {
                return Err(bad());
            }
            Ok((a, b))
        };
        let (n, m) = parse_pair(header)?;
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            edges.push(parse_pair(line)?);
        }
        if edges.len() != m {
            return Err(GraphError::BadEdgeList(format!(
                "header promises {m} edges but {} follow",
                edges.len()
            )));
        }
        Multigraph::new(n, edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Size of the edge multiset (each parallel copy counted).
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Incident edge-endpoints at v; a loop contributes 2.
    pub fn degree(&self, v: usize) -> Result<usize, GraphError> {
        if v < 1 || v > self.n {
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        Ok(self.degrees()[v - 1])
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for &(u, v) in &self.edges {
            deg[u - 1] += 1;
            deg[v - 1] += 1; // loop: same cell twice, so +2 total
        }
        deg
    }

    /// The handshake identity: the degree sum equals twice the edge count
    /// (loops counting 2 toward their vertex). Both sides are computed
    /// independently; this must hold for every multigraph.
    pub fn handshake_check(&self) -> bool {
        self.degrees().iter().sum::<usize>() == 2 * self.edges.len()
    }

    pub fn adjacency_matrix(&self) -> AdjacencyMatrix {
        let mut entries = vec![vec![0u64; self.n]; self.n];
        for &(u, v) in &self.edges {
            if u == v {
                entries[u - 1][u - 1] += 2;
            } else {
                entries[u - 1][v - 1] += 1;
                entries[v - 1][u - 1] += 1;
            }
        }
        AdjacencyMatrix { entries }
    }

    /// Distinct neighbors, self excluded (simple-graph view).
    fn simple_neighbors(&self) -> Vec<BTreeSet<usize>> {
        let mut nbr = vec![BTreeSet::new(); self.n];
        for &(u, v) in &self.edges {
            if u != v {
                nbr[u - 1].insert(v);
                nbr[v - 1].insert(u);
            }
        }
        nbr
    }

    /// Non-loop multiplicities and loop counts, for the walk program.
    fn multiplicities(&self) -> (Vec<Vec<u64>>, Vec<u64>) {
        let mut mult = vec![vec![0u64; self.n]; self.n];
        let mut loops = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            if u == v {
                loops[u - 1] += 1;
            } else {
                mult[u - 1][v - 1] += 1;
                mult[v - 1][u - 1] += 1;
            }
        }
        (mult, loops)
    }

    /// Number of walks from x to y of total length exactly r, where a loop
    /// step consumes length 2 and every other step length 1. Parallel edges
    /// are distinct choices. Capped at r <= 20.
    pub fn count_walks(&self, x: usize, y: usize, r: u64) -> Result<BigUint, GraphError> {
        for v in [x, y] {
            if v < 1 || v > self.n {
                return Err(GraphError::VertexOutOfRange { v, n: self.n });
            }
        }
        if r > MAX_WALK_LENGTH {
            return Err(GraphError::WalkTooLong { r });
        }
        let (mult, loops) = self.multiplicities();
        let r = r as usize;
        // ways[l][v] = walks from x ending at v with length l consumed.
        let mut ways = vec![vec![BigUint::zero(); self.n]; r + 1];
        ways[0][x - 1] = BigUint::one();
        for l in 0..r {
            for v in 0..self.n {
                if ways[l][v].is_zero() {
                    continue;
                }
                let from = ways[l][v].clone();
                for w in 0..self.n {
                    if mult[v][w] > 0 {
                        let add = &from * BigUint::from(mult[v][w]);
                        ways[l + 1][w] += add;
                    }
                }
                if loops[v] > 0 && l + 2 <= r {
                    let add = &from * BigUint::from(loops[v]);
                    ways[l + 2][v] += add;
                }
            }
        }
        Ok(ways[r][y - 1].clone())
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let nbr = self.simple_neighbors();
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 1..=self.n {
            if seen[start - 1] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([start]);
            seen[start - 1] = true;
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &w in &nbr[v - 1] {
                    if !seen[w - 1] {
                        seen[w - 1] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_k_regular(&self, k: usize) -> bool {
        self.degrees().iter().all(|&d| d == k)
    }

    /// Two-colorability with a witness either way: the two sides, or an odd
    /// closed walk (as a vertex sequence; a loop gives the one-step walk
    /// `v, v`). Parity counts edge steps, not loop lengths.
    pub fn bipartition(&self) -> Bipartiteness {
        for &(u, v) in &self.edges {
            if u == v {
                return Bipartiteness::OddClosedWalk { walk: vec![u, u] };
            }
        }
        let nbr = self.simple_neighbors();
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        let mut parent: Vec<usize> = vec![0; self.n];
        for start in 1..=self.n {
            if color[start - 1].is_some() {
                continue;
            }
            color[start - 1] = Some(false);
            parent[start - 1] = start;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let cv = color[v - 1].expect("colored before queueing");
                for &w in &nbr[v - 1] {
                    match color[w - 1] {
                        None => {
                            color[w - 1] = Some(!cv);
                            parent[w - 1] = v;
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cv => {
                            return Bipartiteness::OddClosedWalk {
                                walk: odd_walk(&parent, v, w),
                            };
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        let mut left = Vec::new();
        let mut right = Vec::new();
        for v in 1..=self.n {
            if color[v - 1] == Some(false) {
                left.push(v);
            } else {
                right.push(v);
            }
        }
        Bipartiteness::Bipartite { left, right }
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self.bipartition(), Bipartiteness::Bipartite { .. })
    }

    /// All eigenvalues of the adjacency matrix by cyclic symmetric rotation
    /// sweeps, run until the off-diagonal norm drops below `tol` (cap: 60
    /// sweeps). At most 512 vertices.
    pub fn spectrum(&self, tol: f64) -> Result<Spectrum, GraphError> {
        if self.n > MAX_SPECTRUM_VERTICES {
            return Err(GraphError::TooManyVertices { n: self.n });
        }
        let adj = self.adjacency_matrix();
        let mut a: Vec<Vec<f64>> = adj
            .entries
            .iter()
            .map(|row| row.iter().map(|&x| x as f64).collect())
            .collect();
        let n = self.n;
        let off_norm = |a: &[Vec<f64>]| -> f64 {
            let mut s = 0.0;
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        s += a[i][j] * a[i][j];
                    }
                }
            }
            s.sqrt()
        };
        let mut sweeps = 0;
        while off_norm(&a) >= tol {
            if sweeps >= JACOBI_SWEEP_CAP {
                return Err(GraphError::NonConvergence { sweeps, off_norm: off_norm(&a) });
            }
            for p in 0..n {
                for q in p + 1..n {
                    if a[p][q] == 0.0 {
                        continue;
                    }
                    let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                    let c = 1.0 / (t * t + 1.0).sqrt();
                    let s = t * c;
                    let (app, apq, aqq) = (a[p][p], a[p][q], a[q][q]);
                    a[p][p] = c * c * app - 2.0 * s * c * apq + s * s * aqq;
                    a[q][q] = s * s * app + 2.0 * s * c * apq + c * c * aqq;
                    a[p][q] = 0.0;
                    a[q][p] = 0.0;
                    for i in 0..n {
                        if i == p || i == q {
                            continue;
                        }
                        let (aip, aiq) = (a[i][p], a[i][q]);
                        a[i][p] = c * aip - s * aiq;
                        a[p][i] = a[i][p];
                        a[i][q] = s * aip + c * aiq;
                        a[q][i] = a[i][q];
                    }
                }
            }
            sweeps += 1;
        }
        let mut eigenvalues: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
        eigenvalues.sort_by(|x, y| y.partial_cmp(x).expect("finite eigenvalues"));
        Ok(Spectrum { eigenvalues, tol, sweeps })
    }

    /// Exact rational betweenness per vertex: over unordered source-target
    /// pairs, the fraction of shortest paths passing through the vertex,
    /// endpoints excluded. Single-threaded entry point.
    pub fn betweenness(&self) -> Vec<BigRational> {
        self.betweenness_jobs(1)
    }

    /// Betweenness with the per-source passes split across `jobs` threads.
    /// Sources are independent and the reduction is in fixed order, so the
    /// result is identical for every job count.
    pub fn betweenness_jobs(&self, jobs: usize) -> Vec<BigRational> {
        let nbr = self.simple_neighbors();
        let accumulate = |sources: std::ops::Range<usize>| -> Vec<BigRational> {
            let mut acc = vec![BigRational::zero(); self.n];
            for s in sources {
                single_source_dependencies(&nbr, s, &mut acc);
            }
            acc
        };
        let jobs = jobs.max(1).min(self.n.max(1));
        let total: Vec<BigRational> = if jobs <= 1 {
            accumulate(0..self.n)
        } else {
            let chunk = self.n.div_ceil(jobs);
            let partials: Vec<Vec<BigRational>> = std::thread::scope(|scope| {
                let handles: Vec<_> = (0..jobs)
                    .map(|j| {
                        let lo = (j * chunk).min(self.n);
                        let hi = ((j + 1) * chunk).min(self.n);
                        let accumulate = &accumulate;
                        scope.spawn(move || accumulate(lo..hi))
                    })
                    .collect();
                handles.into_iter().map(|h| h.join().expect("pass panicked")).collect()
            });
            let mut total = vec![BigRational::zero(); self.n];
            for part in partials {
                for (t, p) in total.iter_mut().zip(part) {
                    *t += p;
                }
            }
            total
        };
        // Each unordered pair was seen from both endpoints; halve.
        let two = BigRational::from_integer(2.into());
        total.into_iter().map(|x| x / &two).collect()
    }

    /// Average distance over unordered vertex pairs and the diameter, by
    /// breadth-first search from every vertex. Requires connectivity.
    pub fn distance_stats(&self) -> Result<(BigRational, u64), GraphError> {
        if self.n <= 1 {
            return Ok((BigRational::zero(), 0));
        }
        let nbr = self.simple_neighbors();
        let mut sum: BigUint = BigUint::zero();
        let mut diameter = 0u64;
        for s in 0..self.n {
            let dist = bfs_distances(&nbr, s);
            for (v, d) in dist.iter().enumerate() {
                match d {
                    None => return Err(GraphError::Disconnected),
                    Some(d) if v > s => {
                        sum += BigUint::from(*d);
                        diameter = diameter.max(*d);
                    }
                    Some(_) => {}
                }
            }
        }
        let pairs = BigUint::from(self.n) * BigUint::from(self.n - 1) / BigUint::from(2u32);
        let average = BigRational::new(BigInt::from(sum), BigInt::from(pairs));
        Ok((average, diameter))
    }

    /// An incidence test: true iff the graph is connected and bipartite with
    /// sides of sizes v and b whose degrees are uniformly r and k, has no
    /// parallel edges, and no two same-side vertices share two neighbors
    /// (through any pair of points there is at most one line). Both side
    /// assignments are tried, as the bipartition is only unique up to swap.
    pub fn is_configuration(&self, v: usize, b: usize, r: usize, k: usize) -> bool {
        if !self.is_connected() {
            return false;
        }
        for w in self.edges.windows(2) {
            if w[0] == w[1] {
                return false; // parallel edges have no incidence reading
            }
        }
        let (left, right) = match self.bipartition() {
            Bipartiteness::Bipartite { left, right } => (left, right),
            Bipartiteness::OddClosedWalk { .. } => return false,
        };
        let deg = self.degrees();
        let nbr = self.simple_neighbors();
        let uniform = |side: &[usize], d: usize| side.iter().all(|&x| deg[x - 1] == d);
        let pairwise_ok = |side: &[usize]| {
            for (i, &x) in side.iter().enumerate() {
                for &y in &side[i + 1..] {
                    if nbr[x - 1].intersection(&nbr[y - 1]).count() >= 2 {
                        return false;
                    }
                }
            }
            true
        };
        let fits = |points: &[usize], lines: &[usize]| {
            points.len() == v
                && lines.len() == b
                && uniform(points, r)
                && uniform(lines, k)
                && pairwise_ok(points)
        };
        fits(&left, &right) || fits(&right, &left)
    }
}

/// Either a 2-coloring or an odd closed walk that rules one out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartiteness {
    Bipartite { left: Vec<usize>, right: Vec<usize> },
    OddClosedWalk { walk: Vec<usize> },
}

/// Closed odd walk from a same-color adjacent pair v, w: up the search tree
/// from v to the meeting point, down to w, then the edge w-v.
fn odd_walk(parent: &[usize], v: usize, w: usize) -> Vec<usize> {
    let path_to_root = |mut x: usize| {
        let mut path = vec![x];
        while parent[x - 1] != x {
            x = parent[x - 1];
            path.push(x);
        }
        path
    };
    let pv = path_to_root(v);
    let pw = path_to_root(w);
    // Trim the common tail above the lowest common ancestor.
    let mut iv = pv.len();
    let mut iw = pw.len();
    while iv > 1 && iw > 1 && pv[iv - 2] == pw[iw - 2] {
        iv -= 1;
        iw -= 1;
    }
    let mut walk: Vec<usize> = pv[..iv].to_vec();
    walk.extend(pw[..iw].iter().rev().skip(1));
    walk.push(v);
    walk
}

fn bfs_distances(nbr: &[BTreeSet<usize>], s: usize) -> Vec<Option<u64>> {
    let mut dist = vec![None; nbr.len()];
    dist[s] = Some(0);
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        let dv = dist[v].expect("queued vertices have distances");
        for &w in &nbr[v] {
            if dist[w - 1].is_none() {
                dist[w - 1] = Some(dv + 1);
                queue.push_back(w - 1);
            }
        }
    }
    dist
}

/// One source pass of the shortest-path dependency accumulation: path counts
/// by breadth-first search, then dependencies folded back in reverse
/// distance order. Adds this source's ordered-pair contributions to `acc`.
fn single_source_dependencies(nbr: &[BTreeSet<usize>], s: usize, acc: &mut [BigRational]) {
    let n = nbr.len();
    let mut sigma = vec![BigUint::zero(); n];
    let mut dist: Vec<Option<u64>> = vec![None; n];
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut order = Vec::with_capacity(n);
    sigma[s] = BigUint::one();
    dist[s] = Some(0);
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        let dv = dist[v].expect("queued vertices have distances");
        for &w1 in &nbr[v] {
            let w = w1 - 1;
            match dist[w] {
                None => {
                    dist[w] = Some(dv + 1);
                    sigma[w] = sigma[v].clone();
                    preds[w].push(v);
                    queue.push_back(w);
                }
                Some(dw) if dw == dv + 1 => {
                    let add = sigma[v].clone();
                    sigma[w] += add;
                    preds[w].push(v);
                }
                Some(_) => {}
            }
        }
    }
    let mut delta = vec![BigRational::zero(); n];
    for &w in order.iter().rev() {
        for &p in &preds[w] {
            let ratio = BigRational::new(
                BigInt::from(sigma[p].clone()),
                BigInt::from(sigma[w].clone()),
            );
            let add = ratio * (BigRational::one() + &delta[w]);
            delta[p] += add;
        }
        if w != s {
            acc[w] += &delta[w];
        }
    }
}

/// The symmetric adjacency matrix; a loop contributes 2 to its diagonal
/// entry, so every row sums to the vertex degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjacencyMatrix {
    entries: Vec<Vec<u64>>,
}

impl AdjacencyMatrix {
    pub fn entries(&self) -> &[Vec<u64>] {
        &self.entries
    }

    /// Entry for 1-based vertices x, y.
    pub fn entry(&self, x: usize, y: usize) -> u64 {
        self.entries[x - 1][y - 1]
    }

    /// The m-th matrix power, exact.
    pub fn power(&self, m: u64) -> Vec<Vec<BigUint>> {
        let n = self.entries.len();
        let mut result: Vec<Vec<BigUint>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { BigUint::one() } else { BigUint::zero() }).collect())
            .collect();
        let base: Vec<Vec<BigUint>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|&x| BigUint::from(x)).collect())
            .collect();
        for _ in 0..m {
            let mut next = vec![vec![BigUint::zero(); n]; n];
            for i in 0..n {
                for k in 0..n {
                    if result[i][k].is_zero() {
                        continue;
                    }
                    for j in 0..n {
                        if base[k][j].is_zero() {
                            continue;
                        }
                        let add = &result[i][k] * &base[k][j];
                        next[i][j] += add;
                    }
                }
            }
            result = next;
        }
        result
    }
}

/// Eigenvalues of one adjacency matrix, sorted descending, with the
/// tolerance they were computed to.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    tol: f64,
    sweeps: usize,
}

impl Spectrum {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn tolerance(&self) -> f64 {
        self.tol
    }

    pub fn sweeps(&self) -> usize {
        self.sweeps
    }

    pub fn max_eigenvalue(&self) -> Option<f64> {
        self.eigenvalues.first().copied()
    }

    /// Eigenvalues grouped into multiplicity classes at resolution 10x the
    /// tolerance: (representative value, multiplicity), sorted descending.
    pub fn grouped(&self) -> Vec<(f64, usize)> {
        let mut out: Vec<(f64, usize)> = Vec::new();
        for &ev in &self.eigenvalues {
            match out.last_mut() {
                Some((rep, count)) if (*rep - ev).abs() <= 10.0 * self.tol => *count += 1,
                _ => out.push((ev, 1)),
            }
        }
        out
    }

    /// Multiplicity of the class containing `value`, 0 when none is within
    /// the grouping resolution.
    pub fn multiplicity_near(&self, value: f64) -> usize {
        self.grouped()
            .iter()
            .find(|(rep, _)| (rep - value).abs() <= 10.0 * self.tol)
            .map_or(0, |(_, count)| *count)
    }
}
