//! Self-test: runs every characterization against the neighborhood oracle
//! over exhaustive and random coverings.

use rayon::prelude::*;

use crate::approx_ops::{
    lower_c4_equals_lower_c2_capped, upper_c3_fixes_lower_c3_capped,
    upper_cbar_singletons_match_neighborhoods, DEFAULT_EXHAUSTIVE_CAP,
};
use crate::covering::Covering;
use crate::covgen::{enumerate_coverings, random_covering, Xoshiro256StarStar};
use crate::degrees::{common_block_repeat_degree, membership_repeat_degree, DegreeTable};
use crate::error::Result;
use crate::neighborhoods::{
    neighborhoods_family, oracle_is_neighborhood_partition, NeighborhoodMap,
};
use crate::partition_check::{
    check_excluded_number_with, check_reduct_sufficient, check_uniform_sufficient,
};
use crate::reduction::{reducible_blocks, reduct, reduct_by_single_deletions};

/// Number of shuffled deletion orders tried per covering.
pub const DELETION_ORDERS: usize = 3;

fn shuffled(len: usize, rng: &mut Xoshiro256StarStar) -> Vec<usize> {
    let mut v: Vec<usize> = (0..len).collect();
    for i in (1..len).rev() {
        let j = rng.below(i as u64 + 1) as usize;
        v.swap(i, j);
    }
    v
}

/// Checks every invariant on one covering; returns one message per failure.
///
/// The operator identities that enumerate all subsets run only when
/// `n <= exhaustive_cap`. `order_seed` drives the shuffled deletion orders.
pub fn check_covering(c: &Covering, exhaustive_cap: usize, order_seed: u64) -> Vec<String> {
    let mut failures = Vec::new();
    let mut fail = |msg: String| failures.push(msg);
    let n = c.n();

    let oracle = oracle_is_neighborhood_partition(c);
    let table = DegreeTable::new(c);
    let map = NeighborhoodMap::new(c);

    let excluded = check_excluded_number_with(&table);
    if excluded.is_partition != oracle.is_partition {
        fail(format!(
            "excluded-number verdict {} != oracle {}",
            excluded.is_partition, oracle.is_partition
        ));
    }
    if let Some((x, y)) = excluded.witness {
        if (table.excluded(x, y) == 0) == (table.excluded(y, x) == 0) {
            fail(format!(
                "excluded-number witness ({x},{y}) is not a violation"
            ));
        }
        if map.get(x).contains(y) == map.get(y).contains(x) {
            fail(format!(
                "excluded-number witness ({x},{y}) is not one-sided"
            ));
        }
    }
    if let Some((x, y)) = oracle.witness {
        let (a, b) = (map.get(x), map.get(y));
        if a == b || !a.intersects(b) {
            fail(format!(
                "oracle witness ({x},{y}) does not overlap unequally"
            ));
        }
    }

    if upper_cbar_singletons_match_neighborhoods(c) != oracle.is_partition {
        fail("singleton upper approximation identity disagrees with oracle".into());
    }
    if n <= exhaustive_cap {
        match lower_c4_equals_lower_c2_capped(c, exhaustive_cap) {
            Ok(v) if v != oracle.is_partition => {
                fail("lower operator identity disagrees with oracle".into())
            }
            Err(e) => fail(format!("lower operator identity: {e}")),
            _ => {}
        }
        match upper_c3_fixes_lower_c3_capped(c, exhaustive_cap) {
            Ok(v) if v != oracle.is_partition => {
                fail("upper/lower fixpoint identity disagrees with oracle".into())
            }
            Err(e) => fail(format!("upper/lower fixpoint identity: {e}")),
            _ => {}
        }
    }

    for x in 0..n {
        let direct_membership = membership_repeat_degree(c, x).expect("valid index");
        if table.membership(x) != direct_membership || direct_membership == 0 {
            fail(format!("membership degree of {x} mismatched or zero"));
        }
        if table.common(x, x) != direct_membership {
            fail(format!(
                "common degree ({x},{x}) differs from membership degree"
            ));
        }
        for y in 0..n {
            let direct = common_block_repeat_degree(c, x, y).expect("valid index");
            let mirrored = common_block_repeat_degree(c, y, x).expect("valid index");
            if direct != mirrored || table.common(x, y) != direct {
                fail(format!(
                    "common degree ({x},{y}) is not symmetric or mismatched"
                ));
            }
            if direct > table.membership(x).min(table.membership(y)) {
                fail(format!(
                    "common degree ({x},{y}) exceeds the smaller membership"
                ));
            }
            let y_in_nx = map.get(x).contains(y);
            if y_in_nx != (table.excluded(x, y) == 0) {
                fail(format!(
                    "{y} in N({x}) = {y_in_nx} but excluded number is {}",
                    table.excluded(x, y)
                ));
            }
            if y_in_nx && !map.get(y).is_subset(map.get(x)) {
                fail(format!("{y} in N({x}) but N({y}) is not inside N({x})"));
            }
        }
    }

    let r = reduct(c);
    if neighborhoods_family(&r) != neighborhoods_family(c) {
        fail("reduct changes the neighborhood family".into());
    }
    if !reducible_blocks(&r).is_empty() {
        fail("reduct still has reducible blocks".into());
    }
    let mut rng = Xoshiro256StarStar::seed_from_u64(order_seed);
    for _ in 0..DELETION_ORDERS {
        let order = shuffled(c.len(), &mut rng);
        if reduct_by_single_deletions(c, &order) != r {
            fail(format!("deletion order {order:?} gives a different reduct"));
        }
    }

    if check_reduct_sufficient(c).is_partition() && !oracle.is_partition {
        fail("reduct condition holds but neighborhoods are not a partition".into());
    }
    if check_uniform_sufficient(c).is_partition() && !oracle.is_partition {
        fail("uniform condition holds but neighborhoods are not a partition".into());
    }
    failures
}

/// Parameters of one random sample; enough to regenerate it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SampleParams {
    pub n: usize,
    pub m: usize,
    pub density: f64,
    pub seed: u64,
}

/// Random sample parameters drawn from `seed`: `n` in `[5, 24]`, `m` in
/// `[1, 2n]`, density uniform in `[0, 1)`.
pub fn sample_params(seed: u64, samples: usize) -> Vec<SampleParams> {
    let mut rng = Xoshiro256StarStar::seed_from_u64(seed);
    (0..samples)
        .map(|_| {
            let n = 5 + rng.below(20) as usize;
            let m = 1 + rng.below(2 * n as u64) as usize;
            let density = rng.unit_f64();
            let seed = rng.next_u64();
            SampleParams {
                n,
                m,
                density,
                seed,
            }
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct Failure {
    /// Where the covering came from, in replayable form.
    pub origin: String,
    pub covering: Covering,
    pub messages: Vec<String>,
}

#[derive(Clone, Debug, Default)]
pub struct Summary {
    /// `(n, coverings checked)` for the exhaustive phase.
    pub exhaustive: Vec<(usize, usize)>,
    pub random: usize,
    pub failures: Vec<Failure>,
}

impl Summary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn total(&self) -> usize {
        self.exhaustive.iter().map(|&(_, k)| k).sum::<usize>() + self.random
    }
}

pub fn run(max_n: usize, samples: usize, seed: u64) -> Result<Summary> {
    let mut summary = Summary::default();
    for n in 1..=max_n {
        let coverings: Vec<Covering> = enumerate_coverings(n)?.collect();
        let failures: Vec<Failure> = coverings
            .par_iter()
            .enumerate()
            .filter_map(|(i, c)| {
                let messages = check_covering(c, DEFAULT_EXHAUSTIVE_CAP, seed ^ i as u64);
                (!messages.is_empty()).then(|| Failure {
                    origin: format!("exhaustive n={n} #{i}"),
                    covering: c.clone(),
                    messages,
                })
            })
            .collect();
        summary.exhaustive.push((n, coverings.len()));
        summary.failures.extend(failures);
    }

    let params = sample_params(seed, samples);
    let failures: Vec<Failure> = params
        .par_iter()
        .filter_map(|p| {
            let c = match random_covering(p.n, p.m, p.density, p.seed) {
                Ok(c) => c,
                Err(e) => panic!("generator failed for {p:?}: {e}"),
            };
            let messages = check_covering(&c, DEFAULT_EXHAUSTIVE_CAP, p.seed);
            (!messages.is_empty()).then(|| Failure {
                origin: format!(
                    "gen --n {} --m {} --density {:?} --seed {}",
                    p.n, p.m, p.density, p.seed
                ),
                covering: c,
                messages,
            })
        })
        .collect();
    summary.random = params.len();
    summary.failures.extend(failures);
    Ok(summary)
}
