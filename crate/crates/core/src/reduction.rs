//! Reducible blocks and the reduct of a covering.
//!
//! A block is reducible when it is the union of other blocks. Since a
//! covering holds no duplicate blocks, any witnessing union can only use
//! proper subsets of the block, and it can always be enlarged to the union of
//! all of them. So the test reduces to one union over the contained blocks.

use crate::covering::{Block, Covering};
use crate::error::{check_index, Result};
use crate::set::ElementSet;

fn reducible_among(blocks: &[&Block], k: usize) -> bool {
    let target = blocks[k];
    let mut union = ElementSet::empty(target.universe_len());
    for (i, b) in blocks.iter().enumerate() {
        if i != k && b.is_proper_subset(target) {
            union.union_with(b);
        }
    }
    &union == target.as_set()
}

pub fn is_reducible(c: &Covering, k: usize) -> Result<bool> {
    check_index(k, c.len())?;
    let blocks: Vec<&Block> = c.blocks().iter().collect();
    Ok(reducible_among(&blocks, k))
}

/// Indices of all reducible blocks, ascending.
pub fn reducible_blocks(c: &Covering) -> Vec<usize> {
    let blocks: Vec<&Block> = c.blocks().iter().collect();
    (0..blocks.len())
        .filter(|&k| reducible_among(&blocks, k))
        .collect()
}

/// The covering with every reducible block removed at once.
pub fn reduct(c: &Covering) -> Covering {
    let reducible = reducible_blocks(c);
    if reducible.is_empty() {
        return c.clone();
    }
    let kept = c
        .blocks()
        .iter()
        .enumerate()
        .filter(|(k, _)| reducible.binary_search(k).is_err())
        .map(|(_, b)| b.as_set().clone())
        .collect();
    let r = Covering::new(c.universe().clone(), kept)
        .expect("removing reducible blocks preserves the covering");
    debug_assert!(reducible_blocks(&r).is_empty());
    r
}

/// Reduct computed one deletion at a time.
///
/// `priority` ranks the blocks of `c` by index; each step deletes the
/// highest-priority block that is reducible in the current family. Blocks
/// missing from `priority` are tried last, in index order.
pub fn reduct_by_single_deletions(c: &Covering, priority: &[usize]) -> Covering {
    let mut order: Vec<usize> = priority.iter().copied().filter(|&k| k < c.len()).collect();
    for k in 0..c.len() {
        if !order.contains(&k) {
            order.push(k);
        }
    }
    let mut alive = vec![true; c.len()];
    loop {
        let current: Vec<usize> = (0..c.len()).filter(|&k| alive[k]).collect();
        let blocks: Vec<&Block> = current.iter().map(|&k| &c.blocks()[k]).collect();
        let next = order.iter().copied().find(|&k| {
            alive[k] && {
                let pos = current.binary_search(&k).expect("alive block");
                reducible_among(&blocks, pos)
            }
        });
        match next {
            Some(k) => alive[k] = false,
            None => break,
        }
    }
    let kept = (0..c.len())
        .filter(|&k| alive[k])
        .map(|k| c.blocks()[k].as_set().clone())
        .collect();
    Covering::new(c.universe().clone(), kept)
        .expect("removing reducible blocks preserves the covering")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star() -> Covering {
        Covering::from_indices(3, &[vec![0], vec![1], vec![2], vec![0, 1], vec![0, 2]]).unwrap()
    }

    fn index_of(c: &Covering, members: &[usize]) -> usize {
        c.blocks()
            .iter()
            .position(|b| b.to_vec() == members)
            .unwrap()
    }

    #[test]
    fn unions_of_singletons_are_reducible() {
        let c = star();
        assert!(is_reducible(&c, index_of(&c, &[0, 1])).unwrap());
        assert!(is_reducible(&c, index_of(&c, &[0, 2])).unwrap());
        assert!(!is_reducible(&c, index_of(&c, &[0])).unwrap());
        assert!(is_reducible(&c, 9).is_err());
        assert_eq!(
            reduct(&c).to_labels(),
            vec![vec!["0"], vec!["1"], vec!["2"]]
        );
    }

    #[test]
    fn nested_covering_is_irreducible() {
        let c =
            Covering::from_indices(4, &[vec![0, 1, 2], vec![0, 1], vec![2, 3], vec![3]]).unwrap();
        assert!(!is_reducible(&c, index_of(&c, &[0, 1, 2])).unwrap());
        assert!(reducible_blocks(&c).is_empty());
        assert_eq!(reduct(&c), c);
    }

    #[test]
    fn triangle_is_irreducible() {
        let c = Covering::from_indices(3, &[vec![0, 1], vec![0, 2], vec![1, 2]]).unwrap();
        for k in 0..c.len() {
            assert!(!is_reducible(&c, k).unwrap());
        }
        assert_eq!(reduct(&c), c);
    }

    #[test]
    fn partition_is_its_own_reduct() {
        let c = Covering::from_indices(5, &[vec![0, 4], vec![1, 2], vec![3]]).unwrap();
        assert_eq!(reduct(&c), c);
    }

    #[test]
    fn proper_subset_that_does_not_fill_is_not_enough() {
        let c = Covering::from_indices(3, &[vec![0, 1, 2], vec![0, 1], vec![2]]).unwrap();
        let top = index_of(&c, &[0, 1, 2]);
        assert!(is_reducible(&c, top).unwrap());
        let d = Covering::from_indices(3, &[vec![0, 1, 2], vec![0, 1]]).unwrap();
        assert!(!is_reducible(&d, index_of(&d, &[0, 1, 2])).unwrap());
    }

    #[test]
    fn single_deletions_match_simultaneous() {
        let c = Covering::from_indices(
            4,
            &[
                vec![0],
                vec![1],
                vec![0, 1],
                vec![0, 1, 2, 3],
                vec![2, 3],
                vec![2],
                vec![3],
            ],
        )
        .unwrap();
        let r = reduct(&c);
        assert_eq!(
            r.to_labels(),
            vec![vec!["0"], vec!["1"], vec!["2"], vec!["3"]]
        );
        let forward: Vec<usize> = (0..c.len()).collect();
        let backward: Vec<usize> = (0..c.len()).rev().collect();
        assert_eq!(reduct_by_single_deletions(&c, &forward), r);
        assert_eq!(reduct_by_single_deletions(&c, &backward), r);
        assert_eq!(reduct_by_single_deletions(&c, &[]), r);
    }
}
