//! Max-Cut instances: simple undirected graphs, random ensembles, cut
//! evaluation and the exhaustive maximum-cut oracle.
//!
//! Bit convention shared with the simulator: vertex `j` corresponds to bit
//! `j` of a basis-state index (vertex 0 is the least significant bit), and
//! to position `j` of a textual bitstring.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::Path;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Largest vertex count accepted by the exhaustive solver.
pub const MAX_ENUMERATION_VERTICES: usize = 24;

/// Restarts allowed to the pairing model before giving up.
pub const REGULAR_RETRY_BUDGET: usize = 10_000;

/// Undirected simple graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph, normalising every edge to `(min, max)`.
    ///
    /// Rejects self-loops, out-of-range endpoints and duplicate edges.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::param("graph must have at least one vertex"));
        }
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::param(format!(
                    "edge ({a}, {b}) out of range for {n} vertices"
                )));
            }
            if a == b {
                return Err(Error::param(format!("self-loop at vertex {a}")));
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(Error::param(format!("duplicate edge ({}, {})", e.0, e.1)));
            }
            out.push(e);
        }
        Ok(Self { n, edges: out })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let edges = (0..n).flat_map(|j| (j + 1..n).map(move |k| (j, k)));
        Self::new(n, edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::param("a cycle needs at least 3 vertices"));
        }
        Self::new(n, (0..n).map(|j| (j, (j + 1) % n)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(j, k) in &self.edges {
            deg[j] += 1;
            deg[k] += 1;
        }
        deg
    }

    /// Neighbourhood of each vertex as a bitmask. Only valid for `n <= 64`.
    pub(crate) fn adjacency_masks(&self) -> Vec<u64> {
        debug_assert!(self.n <= 64);
        let mut adj = vec![0u64; self.n];
        for &(j, k) in &self.edges {
            adj[j] |= 1 << k;
            adj[k] |= 1 << j;
        }
        adj
    }

    /// Serialises to the text format: a header line `n m` followed by one
    /// `j k` line per edge.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.edges.len());
        for &(j, k) in &self.edges {
            let _ = writeln!(s, "{j} {k}");
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let bad = |msg: String| Error::param(format!("graph text: {msg}"));
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .enumerate();
        let (_, header) = lines.next().ok_or_else(|| bad("empty input".into()))?;
        let (n, m) = parse_pair(header).ok_or_else(|| bad(format!("bad header {header:?}")))?;
        let mut edges = Vec::with_capacity(m);
        for (lineno, line) in lines {
            let e = parse_pair(line)
                .ok_or_else(|| bad(format!("line {}: bad edge {line:?}", lineno + 1)))?;
            edges.push(e);
        }
        if edges.len() != m {
            return Err(bad(format!(
                "header declares {m} edges, found {}",
                edges.len()
            )));
        }
        Self::new(n, edges)
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)?;
        Self::from_text(&text).map_err(|e| Error::Parse {
            path: path.to_path_buf(),
            message: e.to_string(),
        })
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_text())?;
        Ok(())
    }
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some((a, b))
}

/// Uniform-ish random `d`-regular graph from the pairing (configuration)
/// model. Any pairing that produces a self-loop or a repeated edge is thrown
/// away and the whole pairing is redrawn.
pub fn generate_regular(n: usize, d: usize, seed: u64) -> Result<Graph> {
    if n < 2 {
        return Err(Error::param("regular graph needs n >= 2"));
    }
    if d >= n {
        return Err(Error::param(format!("degree {d} must be below n = {n}")));
    }
    if (n * d) % 2 != 0 {
        return Err(Error::param(format!("n * d = {} is odd", n * d)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();

    'attempt: for _ in 0..REGULAR_RETRY_BUDGET {
        stubs.shuffle(&mut rng);
        let mut seen = HashSet::with_capacity(stubs.len() / 2);
        for pair in stubs.chunks_exact(2) {
            let (a, b) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if a == b || !seen.insert((a, b)) {
                continue 'attempt;
            }
        }
        let mut edges: Vec<_> = seen.into_iter().collect();
        edges.sort_unstable();
        return Graph::new(n, edges);
    }
    Err(Error::Generation(format!(
        "no simple {d}-regular pairing on {n} vertices after {REGULAR_RETRY_BUDGET} restarts"
    )))
}

/// G(n, p): each of the `n(n-1)/2` vertex pairs is an edge independently
/// with probability `prob`.
pub fn generate_erdos_renyi(n: usize, prob: f64, seed: u64) -> Result<Graph> {
    if n < 2 {
        return Err(Error::param("Erdos-Renyi graph needs n >= 2"));
    }
    if !(0.0..=1.0).contains(&prob) {
        return Err(Error::param(format!("edge probability {prob} not in [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for j in 0..n {
        for k in j + 1..n {
            if rng.random::<f64>() < prob {
                edges.push((j, k));
            }
        }
    }
    Graph::new(n, edges)
}

/// Number of edges whose endpoints receive different bits.
pub fn cut_value(graph: &Graph, assignment: &[bool]) -> Result<usize> {
    if assignment.len() != graph.n() {
        return Err(Error::param(format!(
            "assignment has length {}, graph has {} vertices",
            assignment.len(),
            graph.n()
        )));
    }
    Ok(graph
        .edges()
        .iter()
        .filter(|&&(j, k)| assignment[j] != assignment[k])
        .count())
}

/// Cut value of the basis state `index` (bit `j` is vertex `j`).
pub fn cut_value_of_index(graph: &Graph, index: u64) -> usize {
    graph
        .edges()
        .iter()
        .filter(|&&(j, k)| ((index >> j) ^ (index >> k)) & 1 == 1)
        .count()
}

/// Parses a `0`/`1` string into an assignment.
pub fn parse_bitstring(s: &str) -> Result<Vec<bool>> {
    s.chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(Error::param(format!("invalid bit {other:?} in {s:?}"))),
        })
        .collect()
}

pub fn format_bitstring(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxCutSolution {
    pub c_max: usize,
    pub witness: Vec<bool>,
}

/// Exhaustive maximum cut.
///
/// Vertex 0 is pinned to side 0 (a cut and its complement have the same
/// value) and the remaining `2^(n-1)` assignments are walked in Gray-code
/// order, updating the cut incrementally on every single-vertex flip.
pub fn max_cut_bruteforce(graph: &Graph) -> Result<MaxCutSolution> {
    let n = graph.n();
    if n > MAX_ENUMERATION_VERTICES {
        return Err(Error::Capacity {
            what: "vertices",
            value: n,
            limit: MAX_ENUMERATION_VERTICES,
        });
    }
    if graph.num_edges() == 0 {
        return Err(Error::DegenerateInstance(
            "graph has no edges; approximation ratio is undefined".into(),
        ));
    }
    let adj = graph.adjacency_masks();
    let deg: Vec<i64> = adj.iter().map(|m| i64::from(m.count_ones())).collect();

    let mut z: u64 = 0;
    let mut cut: i64 = 0;
    let mut best = (0i64, 0u64);
    for step in 1u64..(1u64 << (n - 1)) {
        let v = step.trailing_zeros() as usize + 1;
        let on_other_side = if z >> v & 1 == 0 {
            adj[v] & z
        } else {
            adj[v] & !z
        };
        cut += deg[v] - 2 * i64::from(on_other_side.count_ones());
        z ^= 1 << v;
        if cut > best.0 {
            best = (cut, z);
        }
    }
    let witness = (0..n).map(|j| best.1 >> j & 1 == 1).collect();
    Ok(MaxCutSolution {
        c_max: best.0 as usize,
        witness,
    })
}
