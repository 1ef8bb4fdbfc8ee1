//! Size caps for the operations whose cost grows exponentially.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::subset::MAX_ELEMENTS;

/// Largest `n` the exhaustive poset enumeration will ever accept.
pub const CENSUS_HARD_CAP: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Maximum poset / orthoset size accepted by constructors and
    /// chain/antichain enumeration.
    pub max_elements: usize,
    /// Maximum size for closed-set enumeration and the Dacey/compatibility checks.
    pub max_closed_elements: usize,
    /// Maximum number of orthoclosed sets produced by one enumeration.
    pub max_family: usize,
    /// Maximum number of elements of a materialized logic.
    pub max_lattice: usize,
    /// Maximum `n` for labeled poset enumeration (never above [`CENSUS_HARD_CAP`]).
    pub max_census_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_elements: 24,
            max_closed_elements: 20,
            max_family: 1 << 20,
            max_lattice: 4096,
            max_census_n: 6,
        }
    }
}

impl Limits {
    pub(crate) fn check_elements(&self, n: usize) -> Result<()> {
        check("element count", n, self.max_elements.min(MAX_ELEMENTS))
    }

    pub(crate) fn check_closed_elements(&self, n: usize) -> Result<()> {
        check(
            "element count for closed-set enumeration",
            n,
            self.max_closed_elements.min(MAX_ELEMENTS),
        )
    }

    pub(crate) fn check_census_n(&self, n: usize) -> Result<()> {
        check("census size", n, self.max_census_n.min(CENSUS_HARD_CAP))
    }
}

pub(crate) fn check(what: &'static str, value: usize, limit: usize) -> Result<()> {
    if value > limit {
        Err(Error::SizeLimit { what, value, limit })
    } else {
        Ok(())
    }
}
