//! Covering approximation operators built from neighborhoods, and the
//! operator identities that hold exactly when the neighborhoods partition
//! the universe. These exist to cross-check the excluded-number test.
//!
//! Two of the classical lower operators share one definition
//! (`{x | N(x) ⊆ X}`); [`lower_c3`] is an alias of [`lower_c2`].

use crate::covering::Covering;
use crate::error::{Error, Result};
use crate::neighborhoods::NeighborhoodMap;
use crate::set::ElementSet;

/// The `X` an operator is applied to. May be empty or the whole universe.
pub type SubsetQuery = ElementSet;

/// Largest universe for which the identities quantified over every subset
/// are checked.
pub const DEFAULT_EXHAUSTIVE_CAP: usize = 16;

fn check_query(c: &Covering, x_set: &SubsetQuery) -> Result<()> {
    if x_set.universe_len() != c.n() {
        return Err(Error::UniverseMismatch {
            expected: c.n(),
            got: x_set.universe_len(),
        });
    }
    Ok(())
}

/// `{x | N(x) ⊆ X}`
pub fn lower_c2(c: &Covering, x_set: &SubsetQuery) -> Result<SubsetQuery> {
    check_query(c, x_set)?;
    Ok(lower_with(&NeighborhoodMap::new(c), x_set))
}

pub use self::lower_c2 as lower_c3;

/// `{x | every neighborhood containing x lies inside X}`
pub fn lower_c4(c: &Covering, x_set: &SubsetQuery) -> Result<SubsetQuery> {
    check_query(c, x_set)?;
    Ok(lower_all_with(&NeighborhoodMap::new(c), x_set))
}

/// `{x | N(x) ∩ X ≠ ∅}`
pub fn upper_c3(c: &Covering, x_set: &SubsetQuery) -> Result<SubsetQuery> {
    check_query(c, x_set)?;
    Ok(upper_with(&NeighborhoodMap::new(c), x_set))
}

/// `{x | every block containing x meets X}`
pub fn upper_cbar(c: &Covering, x_set: &SubsetQuery) -> Result<SubsetQuery> {
    check_query(c, x_set)?;
    Ok(upper_blocks(c, x_set))
}

fn lower_with(map: &NeighborhoodMap, x_set: &ElementSet) -> ElementSet {
    ElementSet::from_indices(
        map.len(),
        (0..map.len()).filter(|&x| map.get(x).is_subset(x_set)),
    )
}

fn lower_all_with(map: &NeighborhoodMap, x_set: &ElementSet) -> ElementSet {
    let n = map.len();
    // union of the neighborhoods that escape X; x survives iff none contains it
    let mut bad = ElementSet::empty(n);
    for nb in map.iter() {
        if !nb.is_subset(x_set) {
            bad.union_with(nb);
        }
    }
    ElementSet::from_indices(n, (0..n).filter(|&x| !bad.contains(x)))
}

fn upper_with(map: &NeighborhoodMap, x_set: &ElementSet) -> ElementSet {
    ElementSet::from_indices(
        map.len(),
        (0..map.len()).filter(|&x| map.get(x).intersects(x_set)),
    )
}

fn upper_blocks(c: &Covering, x_set: &ElementSet) -> ElementSet {
    ElementSet::from_indices(
        c.n(),
        (0..c.n()).filter(|&x| c.blocks_containing(x).all(|b| b.intersects(x_set))),
    )
}

fn all_subsets(n: usize, cap: usize) -> Result<impl Iterator<Item = ElementSet>> {
    if n > cap || n >= usize::BITS as usize {
        return Err(Error::UniverseTooLarge { n, cap });
    }
    Ok((0usize..1 << n)
        .map(move |mask| ElementSet::from_indices(n, (0..n).filter(move |&i| mask >> i & 1 == 1))))
}

/// True iff `lower_c4(X) = lower_c2(X)` for every `X ⊆ U`.
pub fn lower_c4_equals_lower_c2(c: &Covering) -> Result<bool> {
    lower_c4_equals_lower_c2_capped(c, DEFAULT_EXHAUSTIVE_CAP)
}

pub fn lower_c4_equals_lower_c2_capped(c: &Covering, cap: usize) -> Result<bool> {
    let map = NeighborhoodMap::new(c);
    Ok(all_subsets(c.n(), cap)?.all(|x| lower_all_with(&map, &x) == lower_with(&map, &x)))
}

/// True iff `upper_c3(lower_c3(X)) = lower_c3(X)` for every `X ⊆ U`.
pub fn upper_c3_fixes_lower_c3(c: &Covering) -> Result<bool> {
    upper_c3_fixes_lower_c3_capped(c, DEFAULT_EXHAUSTIVE_CAP)
}

pub fn upper_c3_fixes_lower_c3_capped(c: &Covering, cap: usize) -> Result<bool> {
    let map = NeighborhoodMap::new(c);
    Ok(all_subsets(c.n(), cap)?.all(|x| {
        let lower = lower_with(&map, &x);
        upper_with(&map, &lower) == lower
    }))
}

/// True iff `upper_cbar({x}) = N(x)` for every element. Linear in `n`.
pub fn upper_cbar_singletons_match_neighborhoods(c: &Covering) -> bool {
    let map = NeighborhoodMap::new(c);
    (0..c.n()).all(|x| &upper_blocks(c, &ElementSet::singleton(c.n(), x)) == map.get(x))
}
