//! Universes, blocks, coverings and set families.
//!
//! Labels exist only at the boundary. Everything inside a [`Covering`] works
//! on dense indices `0..n` and [`ElementSet`] bit vectors, and blocks are
//! always held deduplicated and in canonical order.

use std::collections::HashMap;
use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use crate::error::{check_index, Error, Result};
use crate::set::ElementSet;

/// An ordered, finite, nonempty set of labeled elements.
#[derive(Clone, PartialEq, Eq)]
pub struct Universe {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl Universe {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() {
                return Err(Error::EmptyLabel);
            }
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(Universe { labels, index })
    }

    /// Universe `{0, 1, .., n-1}` labeled by the decimal index.
    pub fn numbered(n: usize) -> Result<Self> {
        Self::new((0..n).map(|i| i.to_string()))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Always false for a constructed universe.
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Labels of the members of `set`, in index order.
    pub fn labels_of(&self, set: &ElementSet) -> Vec<String> {
        set.iter().map(|x| self.labels[x].clone()).collect()
    }
}

impl fmt::Debug for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.labels).finish()
    }
}

/// A nonempty member set of a covering.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Block(ElementSet);

impl Block {
    pub fn new(set: ElementSet) -> Option<Self> {
        if set.is_empty() {
            None
        } else {
            Some(Block(set))
        }
    }

    pub fn as_set(&self) -> &ElementSet {
        &self.0
    }

    pub fn into_set(self) -> ElementSet {
        self.0
    }
}

impl Deref for Block {
    type Target = ElementSet;

    fn deref(&self) -> &ElementSet {
        &self.0
    }
}

impl fmt::Debug for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A duplicate-free family of sets over one universe, held in canonical
/// order. Used for `Cov(C)`-style results that are not necessarily coverings.
#[derive(Clone, PartialEq, Eq)]
pub struct Family {
    universe: Arc<Universe>,
    sets: Vec<ElementSet>,
}

impl Family {
    pub fn new(universe: Arc<Universe>, sets: Vec<ElementSet>) -> Result<Self> {
        for s in &sets {
            if s.universe_len() != universe.len() {
                return Err(Error::UniverseMismatch {
                    expected: universe.len(),
                    got: s.universe_len(),
                });
            }
        }
        let mut sets = sets;
        sets.sort();
        sets.dedup();
        Ok(Family { universe, sets })
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn sets(&self) -> &[ElementSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Member labels of every set, in canonical order.
    pub fn to_labels(&self) -> Vec<Vec<String>> {
        self.sets
            .iter()
            .map(|s| self.universe.labels_of(s))
            .collect()
    }
}

impl fmt::Debug for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_labels()).finish()
    }
}

impl From<Covering> for Family {
    fn from(c: Covering) -> Self {
        Family {
            universe: c.universe,
            sets: c.blocks.into_iter().map(Block::into_set).collect(),
        }
    }
}

/// A covering of a finite universe: nonempty, pairwise distinct blocks
/// whose union is the universe.
#[derive(Clone, PartialEq, Eq)]
pub struct Covering {
    universe: Arc<Universe>,
    blocks: Vec<Block>,
}

impl Covering {
    /// Validates `sets` as a covering of `universe`. Duplicates are collapsed
    /// and blocks are put into canonical order.
    pub fn new(universe: Arc<Universe>, sets: Vec<ElementSet>) -> Result<Self> {
        let n = universe.len();
        let mut union = ElementSet::empty(n);
        let mut blocks = Vec::with_capacity(sets.len());
        for (index, set) in sets.into_iter().enumerate() {
            if set.universe_len() != n {
                return Err(Error::UniverseMismatch {
                    expected: n,
                    got: set.universe_len(),
                });
            }
            union.union_with(&set);
            blocks.push(Block::new(set).ok_or(Error::EmptyBlock { index })?);
        }
        if !union.is_full() {
            let uncovered = (0..n)
                .filter(|&x| !union.contains(x))
                .map(|x| universe.label(x).to_owned())
                .collect();
            return Err(Error::NotACovering { uncovered });
        }
        blocks.sort();
        blocks.dedup();
        Ok(Covering { universe, blocks })
    }

    /// Covering of the numbered universe `0..n` from index lists.
    pub fn from_indices<B: AsRef<[usize]>>(n: usize, blocks: &[B]) -> Result<Self> {
        let universe = Arc::new(Universe::numbered(n)?);
        let mut sets = Vec::with_capacity(blocks.len());
        for b in blocks {
            let mut s = ElementSet::empty(n);
            for &x in b.as_ref() {
                check_index(x, n)?;
                s.insert(x);
            }
            sets.push(s);
        }
        Covering::new(universe, sets)
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    /// Number of elements in the universe.
    pub fn n(&self) -> usize {
        self.universe.len()
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn block(&self, k: usize) -> Result<&Block> {
        check_index(k, self.blocks.len())?;
        Ok(&self.blocks[k])
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    /// Always false for a valid covering.
    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn check_element(&self, x: usize) -> Result<()> {
        check_index(x, self.n())
    }

    /// Blocks containing `x`.
    pub fn blocks_containing(&self, x: usize) -> impl Iterator<Item = &Block> + '_ {
        self.blocks.iter().filter(move |b| b.contains(x))
    }

    /// The family without block `k`, if that is still a covering.
    pub fn without_block(&self, k: usize) -> Result<Covering> {
        check_index(k, self.blocks.len())?;
        let sets = self
            .blocks
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .map(|(_, b)| b.as_set().clone())
            .collect();
        Covering::new(self.universe.clone(), sets)
    }

    /// Member labels of every block, in canonical order.
    pub fn to_labels(&self) -> Vec<Vec<String>> {
        self.blocks
            .iter()
            .map(|b| self.universe.labels_of(b))
            .collect()
    }
}

impl fmt::Debug for Covering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Covering")
            .field("universe", &self.universe)
            .field("blocks", &self.to_labels())
            .finish()
    }
}

fn resolve_blocks<L, B>(universe: &Universe, raw_blocks: &[B]) -> Result<Vec<ElementSet>>
where
    L: AsRef<str>,
    B: AsRef<[L]>,
{
    let n = universe.len();
    raw_blocks
        .iter()
        .enumerate()
        .map(|(index, raw)| {
            let raw = raw.as_ref();
            if raw.is_empty() {
                return Err(Error::EmptyBlock { index });
            }
            let mut s = ElementSet::empty(n);
            for label in raw {
                let label = label.as_ref();
                let x = universe
                    .index_of(label)
                    .ok_or_else(|| Error::UnknownLabel(label.to_owned()))?;
                s.insert(x);
            }
            Ok(s)
        })
        .collect()
}

/// Builds a covering over a declared universe.
///
/// Duplicate raw blocks collapse into one; the union of the blocks must be
/// exactly the declared universe.
pub fn build_covering<S, L, B>(labels: &[S], raw_blocks: &[B]) -> Result<Covering>
where
    S: AsRef<str>,
    L: AsRef<str>,
    B: AsRef<[L]>,
{
    let universe = Universe::new(labels.iter().map(|l| l.as_ref().to_owned()))?;
    let sets = resolve_blocks(&universe, raw_blocks)?;
    Covering::new(Arc::new(universe), sets)
}

/// Builds a covering whose universe is the union of the blocks, with labels
/// ordered by first appearance.
pub fn build_covering_inferred<L, B>(raw_blocks: &[B]) -> Result<Covering>
where
    L: AsRef<str>,
    B: AsRef<[L]>,
{
    let mut labels: Vec<String> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (index, raw) in raw_blocks.iter().enumerate() {
        if raw.as_ref().is_empty() {
            return Err(Error::EmptyBlock { index });
        }
        for label in raw.as_ref() {
            if seen.insert(label.as_ref()) {
                labels.push(label.as_ref().to_owned());
            }
        }
    }
    build_covering(&labels, raw_blocks)
}

/// True iff `f` is a nonempty family of nonempty, pairwise disjoint sets
/// whose union is the universe.
pub fn is_partition(f: &Family) -> bool {
    if f.is_empty() {
        return false;
    }
    let mut seen = ElementSet::empty(f.universe().len());
    for s in f.sets() {
        if s.is_empty() || s.intersects(&seen) {
            return false;
        }
        seen.union_with(s);
    }
    seen.is_full()
}

/// Canonical form of a covering: blocks deduplicated and sorted.
pub fn canonical_form(c: &Covering) -> Covering {
    let mut blocks = c.blocks.clone();
    blocks.sort();
    blocks.dedup();
    Covering {
        universe: c.universe.clone(),
        blocks,
    }
}
