//! Colored rook placements, the placement-to-tree bijection, and Gessel
//! polynomials.
//!
//! A *flat placement* is an injection `f : [n-1] -> [kn]`, i.e. a maximal
//! non-attacking rook placement on an `(n-1) × kn` rectangle.  Splitting the
//! column range into `k` blocks of width `n` turns it into a *colored
//! placement* `g : [n-1] -> [n] × [k]` via
//! `Φ(f)(i) = (f(i) - n⌊(f(i)-1)/n⌋, ⌈f(i)/n⌉)`.
//!
//! Position `i` is a *j-excedance* of `g` when `g(i) = (a, j)` with `a > i`
//! and a *j-subcedance* when `a <= i`; the Gessel polynomial records these
//! statistics over all colored placements:
//!
//! `G_{n,k}(u, v) = Σ_g u^{exc(g)} v^{sub(g)}`.
//!
//! The bijection `Ψ` sends a colored placement to a labeled plane k-ary
//! tree: read `g` as the decorated functional digraph with an edge
//! `i -> a` labeled `b` for every `g(i) = (a, b)` (vertex `n` has no
//! out-edge), order the weakly connected components by their largest cycle
//! entry (the component of `n`, the only one without a cycle, goes last),
//! snip each cycle at the out-edge of its largest element, and chain the
//! components together by reattaching each snipped label to the next
//! component's former target.  Descents and ascents of `Ψ(g)` match the
//! excedances and subcedances of `g` slot for slot, which is the engine's
//! most heavily exercised invariant.  The inverse recovers the snip points
//! as the left-to-right maxima of the spine.

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, limit, Result};
use crate::multipoly::{MultiPoly, WeakComposition};
use crate::trees::{left_to_right_maxima, PlaneKaryTree};
use crate::Limits;

/// An injection `f : [n-1] -> [kn]` stored as `f[i-1] = f(i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatPlacement {
    n: usize,
    k: usize,
    f: Vec<usize>,
}

impl FlatPlacement {
    /// Validates domain size, codomain range, and injectivity.
    pub fn new(n: usize, k: usize, f: Vec<usize>) -> Result<Self> {
        if n == 0 || k == 0 {
            return Err(invalid("flat placements require n >= 1 and k >= 1"));
        }
        if f.len() != n - 1 {
            return Err(invalid(format!(
                "flat placement needs {} values, got {}",
                n - 1,
                f.len()
            )));
        }
        let mut seen = vec![false; k * n + 1];
        for &x in &f {
            if x == 0 || x > k * n {
                return Err(invalid(format!("value {x} outside 1..={}", k * n)));
            }
            if seen[x] {
                return Err(invalid(format!("value {x} repeats; f must be injective")));
            }
            seen[x] = true;
        }
        Ok(FlatPlacement { n, k, f })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `f(i)` for `1 <= i <= n-1`.
    pub fn value(&self, i: usize) -> usize {
        self.f[i - 1]
    }

    /// The underlying value vector.
    pub fn values(&self) -> &[usize] {
        &self.f
    }
}

/// An injection `g : [n-1] -> [n] × [k]` stored as `g[i-1] = (a, b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredPlacement {
    n: usize,
    k: usize,
    g: Vec<(usize, usize)>,
}

impl ColoredPlacement {
    /// Validates domain size, coordinate ranges, and injectivity.
    pub fn new(n: usize, k: usize, g: Vec<(usize, usize)>) -> Result<Self> {
        if n == 0 || k == 0 {
            return Err(invalid("colored placements require n >= 1 and k >= 1"));
        }
        if g.len() != n - 1 {
            return Err(invalid(format!(
                "colored placement needs {} pairs, got {}",
                n - 1,
                g.len()
            )));
        }
        let mut seen = vec![false; n * k];
        for &(a, b) in &g {
            if a == 0 || a > n {
                return Err(invalid(format!("first coordinate {a} outside 1..={n}")));
            }
            if b == 0 || b > k {
                return Err(invalid(format!("second coordinate {b} outside 1..={k}")));
            }
            let key = (a - 1) * k + (b - 1);
            if seen[key] {
                return Err(invalid(format!("pair ({a},{b}) repeats; g must be injective")));
            }
            seen[key] = true;
        }
        Ok(ColoredPlacement { n, k, g })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `g(i)` for `1 <= i <= n-1`.
    pub fn pair(&self, i: usize) -> (usize, usize) {
        self.g[i - 1]
    }

    /// The underlying pair vector.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.g
    }
}

/// The block decomposition `Φ : F_{n,k} -> F̃_{n,k}`.
pub fn phi(f: &FlatPlacement) -> ColoredPlacement {
    let n = f.n();
    let g = f
        .values()
        .iter()
        .map(|&x| {
            let a = x - n * ((x - 1) / n);
            let b = (x - 1) / n + 1;
            (a, b)
        })
        .collect();
    ColoredPlacement::new(n, f.k(), g).expect("phi of a valid flat placement is valid")
}

/// The inverse block decomposition: `f(i) = a + (b-1) n`.
pub fn phi_inverse(g: &ColoredPlacement) -> FlatPlacement {
    let n = g.n();
    let f = g.pairs().iter().map(|&(a, b)| a + (b - 1) * n).collect();
    FlatPlacement::new(n, g.k(), f).expect("phi inverse of a valid colored placement is valid")
}

/// The excedance and subcedance vectors of a colored placement.
pub fn exc_sub(g: &ColoredPlacement) -> (WeakComposition, WeakComposition) {
    let mut exc = WeakComposition::zeros(g.k());
    let mut sub = WeakComposition::zeros(g.k());
    for i in 1..g.n() {
        let (a, b) = g.pair(i);
        if a > i {
            exc.bump(b);
        } else {
            sub.bump(b);
        }
    }
    (exc, sub)
}

/// The decorated functional digraph of a colored placement: vertex set
/// `[n]`, one labeled out-edge `i -> a` (label `b`) per `i < n`, none from
/// `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecoratedDigraph {
    n: usize,
    k: usize,
    /// `out[v-1]` is the labeled out-edge of `v`; `None` exactly for `v = n`.
    out: Vec<Option<(usize, usize)>>,
}

impl DecoratedDigraph {
    /// Reads the digraph off a colored placement.
    pub fn from_placement(g: &ColoredPlacement) -> Self {
        let n = g.n();
        let mut out = vec![None; n];
        for i in 1..n {
            out[i - 1] = Some(g.pair(i));
        }
        DecoratedDigraph { n, k: g.k(), out }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The labeled out-edge of a vertex (`None` for vertex `n`).
    pub fn out_edge(&self, v: usize) -> Option<(usize, usize)> {
        self.out[v - 1]
    }

    /// Number of weakly connected components.
    pub fn weak_component_count(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for v in 1..=self.n {
            if let Some((t, _)) = self.out[v - 1] {
                let a = find(&mut parent, v - 1);
                let b = find(&mut parent, t - 1);
                if a != b {
                    parent[a] = b;
                }
            }
        }
        (0..self.n).filter(|&v| find(&mut parent, v) == v).count()
    }

    /// The directed cycles, each listed once.  Vertex `n` is never on a
    /// cycle since it has no out-edge.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        // 0 = unvisited, 1 = on the current walk, 2 = settled.
        let mut state = vec![0u8; self.n + 1];
        let mut cycles = Vec::new();
        for start in 1..=self.n {
            if state[start] != 0 {
                continue;
            }
            let mut walk = Vec::new();
            let mut cur = start;
            loop {
                if state[cur] == 1 {
                    let pos = walk.iter().position(|&x| x == cur).unwrap();
                    cycles.push(walk[pos..].to_vec());
                    break;
                }
                if state[cur] == 2 {
                    break;
                }
                state[cur] = 1;
                walk.push(cur);
                match self.out[cur - 1] {
                    Some((t, _)) => cur = t,
                    None => break,
                }
            }
            for &v in &walk {
                state[v] = 2;
            }
        }
        cycles
    }
}

/// The bijection `Ψ` from colored placements to labeled plane k-ary trees.
pub fn psi(g: &ColoredPlacement) -> PlaneKaryTree {
    let n = g.n();
    let digraph = DecoratedDigraph::from_placement(g);
    // Largest element of each cycle, ascending; the cycle-free component of
    // n comes last.
    let mut anchors: Vec<usize> = digraph
        .cycles()
        .iter()
        .map(|c| *c.iter().max().unwrap())
        .collect();
    anchors.sort_unstable();
    anchors.push(n);
    let root = anchors[0];
    let mut parents: Vec<Option<(usize, usize)>> = vec![None; n];
    for v in 1..=n {
        if anchors[..anchors.len() - 1].contains(&v) {
            continue; // this out-edge is snipped
        }
        parents[v - 1] = digraph.out_edge(v);
    }
    for w in anchors.windows(2) {
        let (snipped_target, label) = digraph
            .out_edge(w[0])
            .expect("cycle anchors always have out-edges");
        parents[w[1] - 1] = Some((snipped_target, label));
    }
    PlaneKaryTree::new(n, g.k(), root, parents).expect("psi always produces a valid tree")
}

/// The inverse bijection `Ψ^{-1}` from trees to colored placements.
pub fn psi_inverse(tree: &PlaneKaryTree) -> ColoredPlacement {
    let n = tree.n();
    let mut out: Vec<Option<(usize, usize)>> = (1..=n).map(|q| tree.parent_slot(q)).collect();
    let spine = tree.spine();
    let records = left_to_right_maxima(&spine);
    for w in records.windows(2) {
        let (s, t) = (w[0], w[1]);
        let j_t = spine[t - 1];
        let j_before = spine[t - 2];
        let (p, label) = out[j_t - 1]
            .take()
            .expect("spine nodes below the top have parents");
        debug_assert_eq!(p, j_before, "spine edge must point one step down");
        out[spine[s - 1] - 1] = Some((j_before, label));
    }
    let g = (1..n)
        .map(|i| out[i - 1].expect("every vertex below n regains an out-edge"))
        .collect();
    debug_assert!(out[n - 1].is_none());
    ColoredPlacement::new(n, tree.k(), g).expect("psi inverse always produces a valid placement")
}

fn injection_count(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..n.saturating_sub(1) {
        acc *= BigInt::from(k * n - i);
    }
    acc
}

/// Visits every colored placement in `F̃_{n,k}` once, in lexicographic order
/// of the pair sequence.  Fails if `(kn)_{n-1}` exceeds `limits.max_enum`.
pub fn for_each_colored_placement<F>(n: usize, k: usize, limits: &Limits, mut visit: F) -> Result<()>
where
    F: FnMut(&ColoredPlacement) -> Result<()>,
{
    if n == 0 || k == 0 {
        return Err(invalid("placement enumeration requires n >= 1 and k >= 1"));
    }
    let total = injection_count(n, k);
    if total > BigInt::from(limits.max_enum) {
        return Err(limit(format!(
            "{total} colored placements exceed cap {}",
            limits.max_enum
        )));
    }
    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(n - 1);
    let mut used = vec![false; n * k];
    fn rec<F>(
        n: usize,
        k: usize,
        pairs: &mut Vec<(usize, usize)>,
        used: &mut Vec<bool>,
        visit: &mut F,
    ) -> Result<()>
    where
        F: FnMut(&ColoredPlacement) -> Result<()>,
    {
        if pairs.len() == n - 1 {
            let placement = ColoredPlacement {
                n,
                k,
                g: pairs.clone(),
            };
            return visit(&placement);
        }
        for a in 1..=n {
            for b in 1..=k {
                let key = (a - 1) * k + (b - 1);
                if used[key] {
                    continue;
                }
                used[key] = true;
                pairs.push((a, b));
                rec(n, k, pairs, used, visit)?;
                pairs.pop();
                used[key] = false;
            }
        }
        Ok(())
    }
    rec(n, k, &mut pairs, &mut used, &mut visit)
}

/// Materializes all of `F̃_{n,k}` under the default caps.
pub fn enumerate_colored_placements(n: usize, k: usize) -> Result<Vec<ColoredPlacement>> {
    let mut out = Vec::new();
    for_each_colored_placement(n, k, &Limits::default(), |g| {
        out.push(g.clone());
        Ok(())
    })?;
    Ok(out)
}

/// The Gessel polynomial `G_{n,k} = Σ_g u^{exc(g)} v^{sub(g)}` in the `2k`
/// variables `u_1..u_k, v_1..v_k`, under the default caps.
pub fn gessel_polynomial(n: usize, k: usize) -> Result<MultiPoly> {
    gessel_polynomial_with(n, k, &Limits::default())
}

/// The Gessel polynomial; `(kn)_{n-1}` must not exceed `limits.max_enum`.
pub fn gessel_polynomial_with(n: usize, k: usize, limits: &Limits) -> Result<MultiPoly> {
    let mut acc = MultiPoly::zero(2 * k);
    let mut exps = vec![0u32; 2 * k];
    for_each_colored_placement(n, k, limits, |g| {
        exps.iter_mut().for_each(|e| *e = 0);
        for i in 1..n {
            let (a, b) = g.pair(i);
            if a > i {
                exps[b - 1] += 1;
            } else {
                exps[k + b - 1] += 1;
            }
        }
        acc.add_term(&exps, BigInt::one());
        Ok(())
    })?;
    Ok(acc)
}

/// JSON form of a flat placement: `{"n":6,"k":2,"f":[5,9,7,8,4]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FlatPlacementJson {
    pub n: usize,
    pub k: usize,
    pub f: Vec<usize>,
}

impl FlatPlacementJson {
    pub fn from_placement(f: &FlatPlacement) -> Self {
        FlatPlacementJson {
            n: f.n(),
            k: f.k(),
            f: f.values().to_vec(),
        }
    }

    pub fn to_placement(&self) -> Result<FlatPlacement> {
        FlatPlacement::new(self.n, self.k, self.f.clone())
    }
}

/// JSON form of a colored placement: `{"n":2,"k":2,"g":[[1,1]]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ColoredPlacementJson {
    pub n: usize,
    pub k: usize,
    pub g: Vec<[usize; 2]>,
}

impl ColoredPlacementJson {
    pub fn from_placement(g: &ColoredPlacement) -> Self {
        ColoredPlacementJson {
            n: g.n(),
            k: g.k(),
            g: g.pairs().iter().map(|&(a, b)| [a, b]).collect(),
        }
    }

    pub fn to_placement(&self) -> Result<ColoredPlacement> {
        ColoredPlacement::new(self.n, self.k, self.g.iter().map(|&[a, b]| (a, b)).collect())
    }
}
