//! Repeat degrees and excluded numbers.
//!
//! * membership repeat degree: number of blocks containing `x`
//! * common block repeat degree: number of blocks containing both `x` and `y`
//! * excluded number of `x` with respect to `y`: the first minus the second,
//!   i.e. the number of blocks that contain `x` but miss `y`
//!
//! The excluded number is zero exactly when `y` lies in the neighborhood of
//! `x`, which is what makes a neighborhood-free partition test possible.

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::covering::Covering;
use crate::error::{check_index, Result};
use crate::neighborhoods::PARALLEL_MIN_N;

pub fn membership_repeat_degree(c: &Covering, x: usize) -> Result<usize> {
    c.check_element(x)?;
    Ok(c.blocks_containing(x).count())
}

pub fn common_block_repeat_degree(c: &Covering, x: usize, y: usize) -> Result<usize> {
    c.check_element(x)?;
    c.check_element(y)?;
    Ok(c.blocks()
        .iter()
        .filter(|b| b.contains(x) && b.contains(y))
        .count())
}

pub fn excluded_number(c: &Covering, x: usize, y: usize) -> Result<usize> {
    Ok(membership_repeat_degree(c, x)? - common_block_repeat_degree(c, x, y)?)
}

/// True iff every member of block `k` has the same membership repeat degree.
pub fn is_uniform_block(c: &Covering, k: usize) -> Result<bool> {
    let block = c.block(k)?;
    let mut degrees = block.iter().map(|x| c.blocks_containing(x).count());
    let first = degrees.next().expect("blocks are nonempty");
    Ok(degrees.all(|d| d == first))
}

pub fn all_uniform(c: &Covering) -> bool {
    let table = DegreeTable::new(c);
    c.blocks().iter().all(|b| table.is_uniform(b))
}

/// Precomputed membership and common block repeat degrees.
///
/// Pair counts are stored once per unordered pair, diagonal included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeTable {
    membership: Vec<u32>,
    // row-major upper triangle: row x holds columns x..n
    common: Vec<u32>,
}

fn triangle_offset(n: usize, x: usize) -> usize {
    // sum over rows r < x of (n - r)
    x * n - x * (x.saturating_sub(1)) / 2
}

impl DegreeTable {
    /// Counts pairs through per-element block incidence vectors:
    /// `common(x, y)` is the popcount of `inc(x) & inc(y)`.
    pub fn new(c: &Covering) -> Self {
        let n = c.n();
        let m = c.len();
        let mut incidence = vec![FixedBitSet::with_capacity(m); n];
        for (k, b) in c.blocks().iter().enumerate() {
            for x in b.iter() {
                incidence[x].insert(k);
            }
        }
        let row = |x: usize| -> Vec<u32> {
            (x..n)
                .map(|y| incidence[x].intersection_count(&incidence[y]) as u32)
                .collect()
        };
        let rows: Vec<Vec<u32>> = if n >= PARALLEL_MIN_N {
            (0..n).into_par_iter().map(row).collect()
        } else {
            (0..n).map(row).collect()
        };
        let membership = incidence.iter().map(|i| i.count_ones(..) as u32).collect();
        let common = rows.into_iter().flatten().collect();
        let table = DegreeTable { membership, common };
        assert!(
            table.membership.iter().all(|&d| d >= 1),
            "corrupted covering: uncovered element"
        );
        table
    }

    pub fn n(&self) -> usize {
        self.membership.len()
    }

    pub fn membership(&self, x: usize) -> usize {
        self.membership[x] as usize
    }

    pub fn common(&self, x: usize, y: usize) -> usize {
        let (lo, hi) = if x <= y { (x, y) } else { (y, x) };
        self.common[triangle_offset(self.n(), lo) + (hi - lo)] as usize
    }

    pub fn excluded(&self, x: usize, y: usize) -> usize {
        self.membership(x) - self.common(x, y)
    }

    pub fn membership_checked(&self, x: usize) -> Result<usize> {
        check_index(x, self.n())?;
        Ok(self.membership(x))
    }

    pub fn common_checked(&self, x: usize, y: usize) -> Result<usize> {
        check_index(x, self.n())?;
        check_index(y, self.n())?;
        Ok(self.common(x, y))
    }

    pub fn excluded_checked(&self, x: usize, y: usize) -> Result<usize> {
        Ok(self.membership_checked(x)? - self.common_checked(x, y)?)
    }

    /// True iff all members of `set` share one membership degree.
    pub fn is_uniform(&self, set: &crate::set::ElementSet) -> bool {
        let mut it = set.iter().map(|x| self.membership[x]);
        match it.next() {
            Some(first) => it.all(|d| d == first),
            None => true,
        }
    }

    pub fn membership_degrees(&self) -> &[u32] {
        &self.membership
    }

    /// Full symmetric matrix of common degrees.
    pub fn common_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        (0..n)
            .map(|x| (0..n).map(|y| self.common(x, y)).collect())
            .collect()
    }
}

pub fn degree_table(c: &Covering) -> DegreeTable {
    DegreeTable::new(c)
}
