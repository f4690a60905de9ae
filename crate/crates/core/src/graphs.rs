//! Linial graphs, complements, chromatic polynomials, and matching counts.
//!
//! The bipartite graph `G_{t,n}` has vertex classes
//! `A_1 = {v_1, ..., v_{2n-4+t}}` and `A_2 = {v_{2n-3+t}, ..., v_{3n-5+t}}`,
//! with the `i`-th vertex of `A_2` adjacent to `v_i, ..., v_{n-3+t+i}`.
//! Labeling the rows of the Linial board `L_{t,n}` by `A_2` bottom to top
//! and its columns by `A_1` left to right turns board cells into edges, so
//! matchings of `G_{t,n}` correspond to non-attacking rook placements and
//! the matching counts by size reproduce the rook vector.
//!
//! The complement `Ḡ_{t,n}` carries the chromatic identity: its chromatic
//! polynomial equals the `(3n-5+t)`-factorial polynomial of `L_{t,n}`,
//! i.e. `c(x, Ḡ_{t,n}) = (x)_{2n-4+t} · R(x - 2n + 4 - t, L_{t,n})`.
//!
//! Chromatic polynomials are computed by memoized deletion–contraction.
//! Dense graphs (like the complements above) instead take the
//! addition–contraction direction `c(G) = c(G + uv) + c(G / uv)` toward the
//! complete-graph base case `(x)_v`, which keeps the recursion shallow; the
//! two directions are the same recurrence read both ways.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, limit, Result};
use crate::poly::falling_factorial;
use crate::{IntPoly, Limits, Poly};

/// Largest vertex count accepted by `chromatic_polynomial`.
pub const MAX_CHROMATIC_VERTICES: usize = 14;

/// Largest vertex count accepted by the generic `matchings_by_size`.
pub const MAX_MATCHING_VERTICES: usize = 12;

/// Largest `A_2` side (`n - 1`) accepted by the Linial matching recursion.
pub const MAX_LINIAL_MATCHING_ROWS: usize = 8;

/// An undirected simple graph on vertices `1, ..., vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    vertex_count: usize,
    /// Edges as ordered pairs `(i, j)` with `i < j`.
    edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    /// Validates vertex bounds and rejects loops and duplicate edges.
    pub fn new(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (x, y) in edges {
            if x == y {
                return Err(invalid(format!("self-loop at vertex {x}")));
            }
            if x == 0 || y == 0 || x > vertex_count || y > vertex_count {
                return Err(invalid(format!(
                    "edge ({x},{y}) outside 1..={vertex_count}"
                )));
            }
            let pair = (x.min(y), x.max(y));
            if !set.insert(pair) {
                return Err(invalid(format!("duplicate edge ({},{})", pair.0, pair.1)));
            }
        }
        Ok(SimpleGraph {
            vertex_count,
            edges: set,
        })
    }

    /// The edgeless graph.
    pub fn edgeless(vertex_count: usize) -> Self {
        SimpleGraph {
            vertex_count,
            edges: BTreeSet::new(),
        }
    }

    /// The complete graph `K_v`.
    pub fn complete(vertex_count: usize) -> Self {
        let mut edges = BTreeSet::new();
        for i in 1..=vertex_count {
            for j in i + 1..=vertex_count {
                edges.insert((i, j));
            }
        }
        SimpleGraph {
            vertex_count,
            edges,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order, each as `(i, j)` with `i < j`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.edges.contains(&(x.min(y), x.max(y)))
    }

    /// Neighbors of a vertex, ascending.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (1..=self.vertex_count)
            .filter(|&u| u != v && self.has_edge(u, v))
            .collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }
}

/// The bipartite Linial graph `G_{t,n}` on `3n - 5 + t` vertices.
pub fn linial_graph(t: u32, n: usize) -> Result<SimpleGraph> {
    if n < 2 {
        return Err(invalid("Linial graphs require n >= 2"));
    }
    if (n as i64) - 2 + (t as i64) < 1 {
        return Err(invalid(format!(
            "G_{{{t},{n}}} is degenerate: the A1 side needs n - 2 + t >= 1"
        )));
    }
    let a1 = 2 * n - 4 + t as usize;
    let vertices = 3 * n - 5 + t as usize;
    let mut edges = Vec::new();
    for i in 1..n {
        for j in i..=((n + t as usize + i) - 3) {
            edges.push((j, a1 + i));
        }
    }
    SimpleGraph::new(vertices, edges)
}

/// The complement graph on the same vertex set.
pub fn complement(g: &SimpleGraph) -> SimpleGraph {
    let mut edges = BTreeSet::new();
    for i in 1..=g.vertex_count {
        for j in i + 1..=g.vertex_count {
            if !g.has_edge(i, j) {
                edges.insert((i, j));
            }
        }
    }
    SimpleGraph {
        vertex_count: g.vertex_count,
        edges,
    }
}

/// A small dense working copy: `adj[i]` is the neighbor bitmask of `i`.
#[derive(Clone)]
struct AdjGraph {
    v: usize,
    adj: Vec<u16>,
}

impl AdjGraph {
    fn from_graph(g: &SimpleGraph) -> Self {
        let mut adj = vec![0u16; g.vertex_count];
        for (x, y) in g.edges() {
            adj[x - 1] |= 1 << (y - 1);
            adj[y - 1] |= 1 << (x - 1);
        }
        AdjGraph {
            v: g.vertex_count,
            adj,
        }
    }

    fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Packs the upper-triangular adjacency into an exact memo key.
    fn edge_key(&self) -> u128 {
        let mut key = 0u128;
        let mut bit = 0;
        for i in 0..self.v {
            for j in i + 1..self.v {
                if self.adj[i] >> j & 1 == 1 {
                    key |= 1 << bit;
                }
                bit += 1;
            }
        }
        key
    }

    /// Merges `j` into `i` (dropping parallel edges) and removes `j`.
    fn contract(&self, i: usize, j: usize) -> AdjGraph {
        let merged = (self.adj[i] | self.adj[j]) & !(1 << i) & !(1 << j);
        let mut adj = Vec::with_capacity(self.v - 1);
        for x in 0..self.v {
            if x == j {
                continue;
            }
            let mut m = if x == i { merged } else { self.adj[x] };
            if m >> j & 1 == 1 {
                m = (m & !(1 << j)) | 1 << i;
            }
            m &= !(1 << x);
            // Shift bits above j down by one to relabel the vertices.
            let low = m & ((1 << j) - 1);
            let high = m >> (j + 1);
            adj.push(low | high << j);
        }
        AdjGraph {
            v: self.v - 1,
            adj,
        }
    }
}

fn chromatic_rec(g: &AdjGraph, memo: &mut HashMap<(usize, u128), IntPoly>) -> IntPoly {
    let e = g.edge_count();
    if e == 0 {
        return Poly::monomial(BigInt::one(), g.v);
    }
    let total = g.v * (g.v - 1) / 2;
    if e == total {
        return falling_factorial(g.v);
    }
    let key = (g.v, g.edge_key());
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let dense = 2 * e > total;
    // Pick the first non-edge (dense) or edge (sparse).
    let mut pair = None;
    'scan: for i in 0..g.v {
        for j in i + 1..g.v {
            if (g.adj[i] >> j & 1 == 1) != dense {
                pair = Some((i, j));
                break 'scan;
            }
        }
    }
    let (i, j) = pair.expect("a graph that is neither edgeless nor complete has both");
    let contracted = chromatic_rec(&g.contract(i, j), memo);
    let mut flipped = g.clone();
    flipped.adj[i] ^= 1 << j;
    flipped.adj[j] ^= 1 << i;
    let toggled = chromatic_rec(&flipped, memo);
    let result = if dense {
        // c(G) = c(G + ij) + c(G / ij).
        &toggled + &contracted
    } else {
        // c(G) = c(G - ij) - c(G / ij).
        &toggled - &contracted
    };
    memo.insert(key, result.clone());
    result
}

/// The exact chromatic polynomial, for graphs with at most
/// `MAX_CHROMATIC_VERTICES` vertices.
pub fn chromatic_polynomial(g: &SimpleGraph) -> Result<IntPoly> {
    if g.vertex_count > MAX_CHROMATIC_VERTICES {
        return Err(limit(format!(
            "chromatic polynomial supports <= {MAX_CHROMATIC_VERTICES} vertices, got {}",
            g.vertex_count
        )));
    }
    let mut memo = HashMap::new();
    Ok(chromatic_rec(&AdjGraph::from_graph(g), &mut memo))
}

/// Counts matchings of every size in an arbitrary graph with at most
/// `MAX_MATCHING_VERTICES` vertices: entry `k` is the number of matchings
/// with `k` edges (entry 0 is always 1 for the empty matching), trailing
/// zeros trimmed.
pub fn matchings_by_size(g: &SimpleGraph) -> Result<Vec<BigInt>> {
    let v = g.vertex_count;
    if v > MAX_MATCHING_VERTICES {
        return Err(limit(format!(
            "matching enumeration supports <= {MAX_MATCHING_VERTICES} vertices, got {}",
            v
        )));
    }
    let adj = AdjGraph::from_graph(g).adj;
    let len = v / 2 + 1;
    let mut memo: HashMap<u16, Vec<BigInt>> = HashMap::new();

    fn rec(mask: u16, adj: &[u16], len: usize, memo: &mut HashMap<u16, Vec<BigInt>>) -> Vec<BigInt> {
        if mask == 0 {
            let mut base = vec![BigInt::zero(); len];
            base[0] = BigInt::one();
            return base;
        }
        if let Some(c) = memo.get(&mask) {
            return c.clone();
        }
        let v = mask.trailing_zeros() as usize;
        // v stays unmatched, or pairs with any remaining neighbor.
        let mut counts = rec(mask & !(1 << v), adj, len, memo);
        let mut nbrs = adj[v] & mask & !(1 << v);
        while nbrs != 0 {
            let u = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            let sub = rec(mask & !(1 << v) & !(1 << u), adj, len, memo);
            for k in (1..len).rev() {
                let add = sub[k - 1].clone();
                counts[k] += add;
            }
        }
        memo.insert(mask, counts.clone());
        counts
    }

    let full = if v == 0 { 0 } else { (1u32 << v) as u16 - 1 };
    let mut counts = rec(full, &adj, len, &mut memo);
    while counts.len() > 1 && counts.last().map(|c| c.is_zero()) == Some(true) {
        counts.pop();
    }
    Ok(counts)
}

/// Maximum matching size and the number of matchings attaining it.
pub fn count_maximum_matchings(g: &SimpleGraph) -> Result<(usize, BigInt)> {
    let counts = matchings_by_size(g)?;
    let size = counts.len() - 1;
    Ok((size, counts[size].clone()))
}

/// Matchings of `G_{t,n}` by size, via row-by-row assignment on the `A_2`
/// side (each row either unmatched or matched to a free vertex of its
/// window), under the default caps.
pub fn linial_matchings_by_size(t: u32, n: usize) -> Result<Vec<BigInt>> {
    linial_matchings_by_size_with(t, n, &Limits::default())
}

/// Matchings of `G_{t,n}` by size; `(n - 1 + t)^{n-1}` (the number of
/// partial assignments visited) must stay within `limits.max_enum`.
pub fn linial_matchings_by_size_with(t: u32, n: usize, limits: &Limits) -> Result<Vec<BigInt>> {
    if n < 2 {
        return Err(invalid("Linial graphs require n >= 2"));
    }
    if (n as i64) - 2 + (t as i64) < 1 {
        return Err(invalid(format!(
            "G_{{{t},{n}}} is degenerate: the A1 side needs n - 2 + t >= 1"
        )));
    }
    let rows = n - 1;
    if rows > MAX_LINIAL_MATCHING_ROWS {
        return Err(limit(format!(
            "Linial matching recursion supports n - 1 <= {MAX_LINIAL_MATCHING_ROWS} rows, got {rows}"
        )));
    }
    let visited = (n as u128 - 1 + t as u128).checked_pow(rows as u32);
    match visited {
        Some(total) if total <= limits.max_enum as u128 => {}
        _ => {
            return Err(limit(format!(
                "({})^{rows} partial matchings exceed cap {}",
                n - 1 + t as usize,
                limits.max_enum
            )))
        }
    }
    let a1 = 2 * n - 4 + t as usize;
    let mut used = vec![false; a1 + 1];
    let mut counts = vec![BigInt::zero(); n];

    fn rec(i: usize, size: usize, n: usize, t: usize, used: &mut Vec<bool>, counts: &mut Vec<BigInt>) {
        if i == n {
            counts[size] += BigInt::one();
            return;
        }
        rec(i + 1, size, n, t, used, counts);
        for j in i..=((n + t + i) - 3) {
            if !used[j] {
                used[j] = true;
                rec(i + 1, size + 1, n, t, used, counts);
                used[j] = false;
            }
        }
    }

    rec(1, 0, n, t as usize, &mut used, &mut counts);
    while counts.len() > 1 && counts.last().map(|c| c.is_zero()) == Some(true) {
        counts.pop();
    }
    Ok(counts)
}

/// Maximum matching size and count for `G_{t,n}` via the Linial recursion.
pub fn linial_count_maximum_matchings(t: u32, n: usize) -> Result<(usize, BigInt)> {
    let counts = linial_matchings_by_size(t, n)?;
    let size = counts.len() - 1;
    Ok((size, counts[size].clone()))
}

/// JSON form of a graph: `{"vertices":5,"edges":[[1,4],[2,4],[2,5],[3,5]]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphJson {
    pub fn from_graph(g: &SimpleGraph) -> Self {
        GraphJson {
            vertices: g.vertex_count(),
            edges: g.edges().map(|(i, j)| [i, j]).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<SimpleGraph> {
        SimpleGraph::new(self.vertices, self.edges.iter().map(|&[i, j]| (i, j)))
    }
}
