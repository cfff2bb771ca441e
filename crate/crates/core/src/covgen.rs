//! Covering generators: exhaustive for tiny universes, seeded random for
//! property tests and benchmarks.

use crate::covering::Covering;
use crate::error::{Error, Result};
use crate::set::ElementSet;

/// Largest universe [`enumerate_coverings`] accepts.
pub const ENUMERATION_CAP: usize = 4;

/// Every covering of `{0, .., n-1}`, each exactly once.
///
/// The nonempty subsets are numbered by their bit mask `1..2^n`; a family is
/// a mask over those, and families are yielded in ascending family-mask
/// order.
pub fn enumerate_coverings(n: usize) -> Result<impl Iterator<Item = Covering>> {
    if n == 0 {
        return Err(Error::EmptyUniverse);
    }
    if n > ENUMERATION_CAP {
        return Err(Error::UniverseTooLarge {
            n,
            cap: ENUMERATION_CAP,
        });
    }
    let subsets = (1u32 << n) - 1;
    let full = (1u32 << n) - 1;
    Ok((1u64..1u64 << subsets).filter_map(move |family| {
        let masks: Vec<u32> = (0..subsets)
            .filter(|j| family >> j & 1 == 1)
            .map(|j| j + 1)
            .collect();
        if masks.iter().fold(0, |acc, m| acc | m) != full {
            return None;
        }
        let blocks: Vec<Vec<usize>> = masks
            .iter()
            .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
            .collect();
        Some(Covering::from_indices(n, &blocks).expect("union checked above"))
    }))
}

/// SplitMix64, used to expand a 64-bit seed into generator state.
#[derive(Clone, Debug)]
pub struct SplitMix64(u64);

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }
}

/// xoshiro256** 1.0 (Blackman and Vigna). Portable and bit-exact, so
/// fixtures generated from a seed reproduce in any language.
#[derive(Clone, Debug)]
pub struct Xoshiro256StarStar {
    s: [u64; 4],
}

impl Xoshiro256StarStar {
    pub fn from_state(s: [u64; 4]) -> Self {
        assert!(s != [0; 4], "xoshiro state must not be all zero");
        Xoshiro256StarStar { s }
    }

    /// State filled from four consecutive SplitMix64 outputs.
    pub fn seed_from_u64(seed: u64) -> Self {
        let mut sm = SplitMix64::new(seed);
        Self::from_state([sm.next_u64(), sm.next_u64(), sm.next_u64(), sm.next_u64()])
    }

    pub fn next_u64(&mut self) -> u64 {
        let s = &mut self.s;
        let result = s[1].wrapping_mul(5).rotate_left(7).wrapping_mul(9);
        let t = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = s[3].rotate_left(45);
        result
    }

    /// Uniform in `0..bound` by 128-bit multiply-high. `bound` must be > 0.
    pub fn below(&mut self, bound: u64) -> u64 {
        ((self.next_u64() as u128 * bound as u128) >> 64) as u64
    }

    /// Uniform in `[0, 1)` with 53 bits of precision.
    pub fn unit_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// Deterministic random covering of `{0, .., n-1}`.
///
/// Elements are thrown into `m` cells uniformly and empty cells are dropped,
/// giving a random partition. Each block then takes every element outside
/// its cell independently with probability `density / 2`, drawing one value
/// per (block, outside element) in index order. Blocks that end up equal
/// collapse, so the block count can fall below `m`.
pub fn random_covering(n: usize, m: usize, density: f64, seed: u64) -> Result<Covering> {
    if n == 0 {
        return Err(Error::EmptyUniverse);
    }
    let m = m.max(1);
    let density = density.clamp(0.0, 1.0);
    let mut rng = Xoshiro256StarStar::seed_from_u64(seed);

    let mut cells = vec![ElementSet::empty(n); m];
    for x in 0..n {
        cells[rng.below(m as u64) as usize].insert(x);
    }
    cells.retain(|c| !c.is_empty());

    let p = density / 2.0;
    let blocks = cells
        .iter()
        .map(|cell| {
            let mut block = cell.clone();
            for x in (0..n).filter(|&x| !cell.contains(x)) {
                if rng.unit_f64() < p {
                    block.insert(x);
                }
            }
            block
        })
        .collect();
    Covering::new(
        std::sync::Arc::new(crate::covering::Universe::numbered(n)?),
        blocks,
    )
}
