//! Sweeps that compare the closed-form counts against the search oracle.

use rayon::prelude::*;
use serde::Serialize;

use crate::counting::{classify_n18, count, count_n18_halfcase, count_n18_maxcase, N18Case};
use crate::oracle::oracle_count;
use crate::types::{count_as_decimal, CanonicalOffset, Count, GridPoint, Neighborhood};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Mismatch {
    /// Closed form and oracle disagree.
    Oracle {
        point: GridPoint,
        #[serde(serialize_with = "count_as_decimal")]
        formula: Count,
        #[serde(serialize_with = "count_as_decimal")]
        oracle: Count,
    },
    /// The two 18-neighborhood formulas disagree where both apply.
    Overlap {
        point: GridPoint,
        #[serde(serialize_with = "count_as_decimal")]
        max_case: Count,
        #[serde(serialize_with = "count_as_decimal")]
        half_case: Count,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub extent: u64,
    pub neighborhood: Neighborhood,
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl VerifyReport {
    pub fn is_ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// All `(i, j, k)` with `0 <= k <= j <= i <= extent`, in lexicographic order.
pub fn canonical_points(extent: u64) -> Vec<CanonicalOffset> {
    let mut out = Vec::new();
    for i in 0..=extent {
        for j in 0..=i {
            for k in 0..=j {
                out.push(CanonicalOffset::from_magnitudes(i, j, k));
            }
        }
    }
    out
}

fn check_point(off: &CanonicalOffset, n: Neighborhood) -> Vec<Mismatch> {
    let point = off.to_point().expect("sweep extent fits in i64");
    let mut found = Vec::new();
    let formula = count(off, n);
    let oracle = oracle_count(point, n);
    if formula != oracle {
        found.push(Mismatch::Oracle { point, formula, oracle });
    }
    if n == Neighborhood::N18 && classify_n18(off) == N18Case::Overlap {
        let max_case = count_n18_maxcase(off).expect("overlap admits the max-coordinate formula");
        let half_case = count_n18_halfcase(off).expect("overlap admits the half-sum formula");
        if max_case != half_case {
            found.push(Mismatch::Overlap { point, max_case, half_case });
        }
    }
    found
}

/// Compare formula and oracle on every canonical point up to `extent`.
pub fn verify_region(extent: u64, n: Neighborhood) -> VerifyReport {
    let points = canonical_points(extent);
    let mismatches = points
        .par_iter()
        .flat_map_iter(|off| check_point(off, n))
        .collect();
    VerifyReport {
        extent,
        neighborhood: n,
        checked: points.len(),
        mismatches,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extent_zero() {
        for n in Neighborhood::ALL {
            let r = verify_region(0, n);
            assert_eq!(r.checked, 1);
            assert!(r.is_ok());
        }
    }

    #[test]
    fn extent_five_is_clean() {
        for n in Neighborhood::ALL {
            let r = verify_region(5, n);
            assert_eq!(r.checked, 56);
            assert!(r.is_ok(), "{n}: {:?}", r.mismatches);
        }
    }

    #[test]
    fn canonical_points_are_ordered() {
        let pts = canonical_points(3);
        assert_eq!(pts.len(), 20);
        assert!(pts.windows(2).all(|w| w[0].ijk() < w[1].ijk()));
    }
}
