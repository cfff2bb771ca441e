//! Deciding whether the induced neighborhoods form a partition.
//!
//! The exact test works on the covering alone: the neighborhoods form a
//! partition iff for every pair `x, y` the excluded numbers of `x` w.r.t. `y`
//! and of `y` w.r.t. `x` are either both zero or both nonzero. Two cheaper
//! checks are sufficient but not necessary and so answer `Inconclusive`
//! rather than `false`.

use serde::Serialize;

use crate::covering::{is_partition, Covering};
use crate::degrees::DegreeTable;
use crate::error::{Error, Result};
use crate::neighborhoods::{family_of, NeighborhoodMap};
use crate::reduction::{reducible_blocks, reduct};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ExcludedNumber,
    Oracle,
    ReductSufficient,
    UniformSufficient,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::ExcludedNumber => "excluded-number",
            Method::Oracle => "oracle",
            Method::ReductSufficient => "reduct-sufficient",
            Method::UniformSufficient => "uniform-sufficient",
        }
    }
}

/// Outcome of an exact check. The witness is set iff `is_partition` is false.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionVerdict {
    pub is_partition: bool,
    /// Element indices `(x, y)` with `x < y`.
    pub witness: Option<(usize, usize)>,
    pub method: Method,
}

/// Outcome of a sufficient-only check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SufficientVerdict {
    Partition,
    Inconclusive,
}

impl SufficientVerdict {
    pub fn is_partition(self) -> bool {
        self == SufficientVerdict::Partition
    }

    pub fn name(self) -> &'static str {
        match self {
            SufficientVerdict::Partition => "partition",
            SufficientVerdict::Inconclusive => "inconclusive",
        }
    }

    fn from_bool(holds: bool) -> Self {
        if holds {
            SufficientVerdict::Partition
        } else {
            SufficientVerdict::Inconclusive
        }
    }
}

/// Exact test from excluded numbers, without building any neighborhood.
pub fn check_excluded_number(c: &Covering) -> PartitionVerdict {
    check_excluded_number_with(&DegreeTable::new(c))
}

/// Same as [`check_excluded_number`] over a precomputed table. Stops at the
/// smallest violating pair in lexicographic order.
pub fn check_excluded_number_with(table: &DegreeTable) -> PartitionVerdict {
    let n = table.n();
    let witness = (0..n)
        .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
        .find(|&(x, y)| (table.excluded(x, y) == 0) != (table.excluded(y, x) == 0));
    PartitionVerdict {
        is_partition: witness.is_none(),
        witness,
        method: Method::ExcludedNumber,
    }
}

pub fn check_reduct_sufficient(c: &Covering) -> SufficientVerdict {
    SufficientVerdict::from_bool(is_partition(&reduct(c).into()))
}

pub fn check_uniform_sufficient(c: &Covering) -> SufficientVerdict {
    SufficientVerdict::from_bool(crate::degrees::all_uniform(c))
}

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockSummary {
    pub members: Vec<String>,
    pub uniform: bool,
    pub reducible: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementSummary {
    pub element: String,
    pub membership_degree: usize,
    pub neighborhood: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub x: String,
    pub y: String,
    /// Blocks containing `x` but not `y`.
    pub excluded_x_wrt_y: usize,
    /// Blocks containing `y` but not `x`.
    pub excluded_y_wrt_x: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactVerdict {
    pub is_partition: bool,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdicts {
    pub excluded_number: ExactVerdict,
    pub oracle: ExactVerdict,
    pub reduct_sufficient: SufficientVerdict,
    pub uniform_sufficient: SufficientVerdict,
}

/// Everything the checks know about one covering, with labels in place of
/// indices. Serializes to the versioned JSON report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub is_partition: bool,
    pub universe: Vec<String>,
    pub blocks: Vec<BlockSummary>,
    pub elements: Vec<ElementSummary>,
    /// Common block repeat degrees, indexed like `universe` on both axes.
    pub common_degrees: Vec<Vec<usize>>,
    pub neighborhood_family: Vec<Vec<String>>,
    pub reduct: Vec<Vec<String>>,
    pub uniform_blocks: usize,
    pub verdicts: Verdicts,
}

/// Runs every check and cross-asserts the exact test against the oracle.
pub fn full_report(c: &Covering) -> Result<Report> {
    let universe = c.universe();
    let table = DegreeTable::new(c);
    let map = NeighborhoodMap::new(c);
    let family = family_of(c, &map);

    let excluded = check_excluded_number_with(&table);
    let oracle_is_partition = is_partition(&family);
    if excluded.is_partition != oracle_is_partition {
        return Err(Error::InternalDisagreement(format!(
            "excluded-number check says {} but the neighborhood oracle says {}",
            excluded.is_partition, oracle_is_partition
        )));
    }
    let oracle_witness = if oracle_is_partition {
        None
    } else {
        map.first_overlap()
    };

    let witness = |w: Option<(usize, usize)>| {
        w.map(|(x, y)| Witness {
            x: universe.label(x).to_owned(),
            y: universe.label(y).to_owned(),
            excluded_x_wrt_y: table.excluded(x, y),
            excluded_y_wrt_x: table.excluded(y, x),
        })
    };

    let reducible = reducible_blocks(c);
    let blocks: Vec<BlockSummary> = c
        .blocks()
        .iter()
        .enumerate()
        .map(|(k, b)| BlockSummary {
            members: universe.labels_of(b),
            uniform: table.is_uniform(b),
            reducible: reducible.binary_search(&k).is_ok(),
        })
        .collect();
    let uniform_blocks = blocks.iter().filter(|b| b.uniform).count();
    let reduct_cov = reduct(c);

    Ok(Report {
        schema_version: REPORT_SCHEMA_VERSION,
        is_partition: excluded.is_partition,
        universe: universe.labels().to_vec(),
        elements: (0..c.n())
            .map(|x| ElementSummary {
                element: universe.label(x).to_owned(),
                membership_degree: table.membership(x),
                neighborhood: universe.labels_of(map.get(x)),
            })
            .collect(),
        common_degrees: table.common_matrix(),
        neighborhood_family: family.to_labels(),
        reduct: reduct_cov.to_labels(),
        verdicts: Verdicts {
            excluded_number: ExactVerdict {
                is_partition: excluded.is_partition,
                witness: witness(excluded.witness),
            },
            oracle: ExactVerdict {
                is_partition: oracle_is_partition,
                witness: witness(oracle_witness),
            },
            reduct_sufficient: SufficientVerdict::from_bool(is_partition(&reduct_cov.into())),
            uniform_sufficient: SufficientVerdict::from_bool(uniform_blocks == blocks.len()),
        },
        uniform_blocks,
        blocks,
    })
}
