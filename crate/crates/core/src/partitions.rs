//! Set partitions of `{1, ..., m}` and the Möbius function of the partition
//! lattice below an arbitrary partition.
//!
//! The partition lattice `Π_m` is ordered by refinement with the all-
//! singletons partition at the bottom.  The only lattice-theoretic quantity
//! the engine needs is `μ(0̂, σ)`, which factors over the blocks of `σ` as
//! `Π_A (-1)^{|A|-1} (|A|-1)!`; the closed form is cross-checked against a
//! recursive evaluation of the Möbius recurrence in the test suite.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{invalid, limit, Result};
use crate::poly::Poly;
use crate::{IntPoly, Limits};

/// A set partition of `{1, ..., m}` into nonempty blocks.
///
/// Canonical form: each block is sorted ascending and blocks are ordered by
/// their minima.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetPartition {
    m: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Validates and canonicalizes a partition of `{1, ..., m}`.
    pub fn new(m: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; m + 1];
        let mut count = 0usize;
        for block in &blocks {
            if block.is_empty() {
                return Err(invalid("set partition blocks must be nonempty"));
            }
            for &x in block {
                if x == 0 || x > m {
                    return Err(invalid(format!("element {x} outside 1..={m}")));
                }
                if seen[x] {
                    return Err(invalid(format!("element {x} appears twice")));
                }
                seen[x] = true;
                count += 1;
            }
        }
        if count != m {
            return Err(invalid(format!(
                "blocks cover {count} of {m} ground-set elements"
            )));
        }
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort_by_key(|b| b[0]);
        Ok(SetPartition { m, blocks })
    }

    /// Size of the ground set.
    pub fn ground_size(&self) -> usize {
        self.m
    }

    /// The blocks, in canonical order.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of blocks.
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Whether `self` refines `other` (every block of `self` is contained in
    /// a block of `other`).  This is the partition-lattice order.
    pub fn refines(&self, other: &SetPartition) -> bool {
        if self.m != other.m {
            return false;
        }
        let mut block_of = vec![0usize; self.m + 1];
        for (i, block) in other.blocks.iter().enumerate() {
            for &x in block {
                block_of[x] = i;
            }
        }
        self.blocks
            .iter()
            .all(|b| b.iter().all(|&x| block_of[x] == block_of[b[0]]))
    }
}

/// `μ(0̂, σ)` in the partition lattice, via the block-wise closed form
/// `Π_A (-1)^{|A|-1} (|A|-1)!`.
pub fn mobius_bottom(sigma: &SetPartition) -> BigInt {
    let mut acc = BigInt::one();
    for block in sigma.blocks() {
        let s = block.len();
        let mut f = BigInt::one();
        for i in 1..s {
            f *= BigInt::from(i);
        }
        if s % 2 == 0 {
            f = -f;
        }
        acc *= f;
    }
    acc
}

/// The Möbius-weighted partition-lattice sum
/// `Σ_{σ ∈ Π_m} μ(0̂, σ) Π_{A ∈ σ} factor(A)`,
/// where `factor` maps each block (elements ascending) to a polynomial.
///
/// Many factorial-polynomial and characteristic-polynomial identities take
/// this shape with a linear `factor`; callers supply the per-block value.
pub fn partition_lattice_sum<F>(m: usize, limits: &Limits, factor: F) -> Result<IntPoly>
where
    F: Fn(&[usize]) -> IntPoly,
{
    let mut acc = IntPoly::zero();
    for sigma in enumerate_set_partitions_with(m, limits)? {
        let mut term = Poly::constant(mobius_bottom(&sigma));
        for block in sigma.blocks() {
            term = &term * &factor(block);
        }
        acc = &acc + &term;
    }
    Ok(acc)
}

/// Bell number `B(m)` as a `u128`, or `None` on overflow.  Used for cap
/// checks before enumerating.
pub fn bell_number(m: usize) -> Option<u128> {
    // Bell triangle.
    let mut row: Vec<u128> = vec![1];
    for _ in 1..=m {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for &x in &row {
            let prev = *next.last().unwrap();
            next.push(prev.checked_add(x)?);
        }
        row = next;
    }
    Some(row[0])
}

/// Enumerates all set partitions of `{1, ..., m}` under the default caps.
pub fn enumerate_set_partitions(m: usize) -> Result<Vec<SetPartition>> {
    enumerate_set_partitions_with(m, &Limits::default())
}

/// Enumerates all set partitions of `{1, ..., m}`; the Bell number must not
/// exceed `limits.max_enum`.
///
/// Enumeration is by restricted growth strings, so the order is
/// deterministic.  `m = 0` yields the single empty partition.
pub fn enumerate_set_partitions_with(m: usize, limits: &Limits) -> Result<Vec<SetPartition>> {
    let bell = bell_number(m).unwrap_or(u128::MAX);
    if bell > limits.max_enum as u128 {
        return Err(limit(format!(
            "Bell({m}) = {bell} set partitions exceeds cap {}",
            limits.max_enum
        )));
    }
    let mut out = Vec::new();
    // Restricted growth string: rgs[0] = 0 and rgs[i] <= max(rgs[..i]) + 1.
    let mut rgs = vec![0usize; m];
    fn rec(rgs: &mut Vec<usize>, i: usize, max_used: usize, m: usize, out: &mut Vec<SetPartition>) {
        if i == m {
            // Restricted growth guarantees every block index up to max_used
            // is inhabited and block minima are already increasing.
            let mut blocks = vec![Vec::new(); max_used + 1];
            for (pos, &b) in rgs.iter().enumerate() {
                blocks[b].push(pos + 1);
            }
            out.push(SetPartition { m, blocks });
            return;
        }
        let cap = if i == 0 { 0 } else { max_used + 1 };
        for b in 0..=cap {
            rgs[i] = b;
            rec(rgs, i + 1, max_used.max(b), m, out);
        }
    }
    if m == 0 {
        out.push(SetPartition {
            m: 0,
            blocks: Vec::new(),
        });
    } else {
        rec(&mut rgs, 0, 0, m, &mut out);
    }
    Ok(out)
}
