//! Neighborhoods `N(x)` and the family they induce.

use rayon::prelude::*;

use crate::covering::{is_partition, Block, Covering, Family};
use crate::error::Result;
use crate::partition_check::{Method, PartitionVerdict};
use crate::set::ElementSet;

/// Universes at least this large compute neighborhoods on the rayon pool.
pub(crate) const PARALLEL_MIN_N: usize = 256;

fn intersect_containing(c: &Covering, x: usize) -> ElementSet {
    let mut acc = ElementSet::full(c.n());
    for b in c.blocks_containing(x) {
        acc.intersect_with(b);
    }
    acc
}

/// Intersection of all blocks containing `x`.
pub fn neighborhood(c: &Covering, x: usize) -> Result<Block> {
    c.check_element(x)?;
    Ok(Block::new(intersect_containing(c, x)).expect("x belongs to its own neighborhood"))
}

/// `N(x)` for every element, indexed by element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborhoodMap {
    sets: Vec<ElementSet>,
}

impl NeighborhoodMap {
    pub fn new(c: &Covering) -> Self {
        let n = c.n();
        let sets = if n >= PARALLEL_MIN_N {
            (0..n)
                .into_par_iter()
                .map(|x| intersect_containing(c, x))
                .collect()
        } else {
            (0..n).map(|x| intersect_containing(c, x)).collect()
        };
        NeighborhoodMap { sets }
    }

    pub fn get(&self, x: usize) -> &ElementSet {
        &self.sets[x]
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &ElementSet> + '_ {
        self.sets.iter()
    }

    /// Smallest pair `x < y` whose neighborhoods overlap without being equal.
    pub fn first_overlap(&self) -> Option<(usize, usize)> {
        let n = self.sets.len();
        (0..n)
            .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
            .find(|&(x, y)| {
                let (a, b) = (&self.sets[x], &self.sets[y]);
                a != b && a.intersects(b)
            })
    }
}

/// The induced family `{N(x) | x in U}` with duplicates collapsed.
pub fn neighborhoods_family(c: &Covering) -> Family {
    family_of(c, &NeighborhoodMap::new(c))
}

pub(crate) fn family_of(c: &Covering, map: &NeighborhoodMap) -> Family {
    Family::new(c.universe().clone(), map.sets.clone()).expect("neighborhoods share the universe")
}

/// Ground-truth verdict: build every neighborhood and test the induced
/// family for being a partition directly.
pub fn oracle_is_neighborhood_partition(c: &Covering) -> PartitionVerdict {
    let map = NeighborhoodMap::new(c);
    let is_partition = is_partition(&family_of(c, &map));
    let witness = if is_partition {
        None
    } else {
        Some(
            map.first_overlap()
                .expect("a non-partition neighborhood family has an overlapping pair"),
        )
    };
    PartitionVerdict {
        is_partition,
        witness,
        method: Method::Oracle,
    }
}
