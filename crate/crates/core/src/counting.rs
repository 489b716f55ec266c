//! Closed-form shortest-path counts.
//!
//! All routines take a [`CanonicalOffset`] (`i >= j >= k >= 0`) and return
//! exact counts. Every formula is a sum of multinomial coefficients over
//! step-type tallies:
//!
//! * 6-neighborhood: one trinomial, `(i+j+k)! / (i! j! k!)`.
//! * 18-neighborhood, `i >= j + k`: every step advances x; the remaining
//!   moves split into x-only, `+x±z` and `+x±y` steps. Summed over the
//!   number `a` of `+x-z` and `b` of `+x-y` steps.
//! * 18-neighborhood, `i <= j + k + 1`: with `L = ceil((i+j+k)/2)` steps,
//!   every step advances two coordinates, except for one single-axis step
//!   when the coordinate sum is odd.
//! * 26-neighborhood: the y and z step sequences are independent planar
//!   chessboard paths, so the count is `f8(i, j) * f8(i, k)`.

use std::sync::{RwLock, RwLockReadGuard};

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::types::{canonicalize, CanonicalOffset, Count, GridPoint, Neighborhood};

static FACTORIALS: RwLock<Vec<BigUint>> = RwLock::new(Vec::new());

/// Shared factorial table covering at least `0..=n`.
fn factorials(n: usize) -> RwLockReadGuard<'static, Vec<BigUint>> {
    {
        let table = FACTORIALS.read().unwrap_or_else(|e| e.into_inner());
        if table.len() > n {
            return table;
        }
    }
    {
        let mut table = FACTORIALS.write().unwrap_or_else(|e| e.into_inner());
        if table.is_empty() {
            table.push(BigUint::one());
        }
        while table.len() <= n {
            let next = table.last().unwrap() * BigUint::from(table.len());
            table.push(next);
        }
    }
    FACTORIALS.read().unwrap_or_else(|e| e.into_inner())
}

fn index(v: u128) -> usize {
    usize::try_from(v).expect("offset too large to count")
}

/// `n! / prod(part!)`, assuming the parts sum to `n`.
fn multinomial_in(table: &[BigUint], n: usize, parts: &[u64]) -> Count {
    let denom = parts
        .iter()
        .fold(BigUint::one(), |acc, &p| acc * &table[p as usize]);
    &table[n] / denom
}

/// Multinomial coefficient `n! / prod(part!)`.
pub fn multinomial(n: u64, parts: &[u64]) -> Result<Count> {
    let sum: u128 = parts.iter().map(|&p| p as u128).sum();
    if sum != n as u128 {
        return Err(Error::PartsMismatch { n, sum });
    }
    let n = index(n as u128);
    Ok(multinomial_in(&factorials(n), n, parts))
}

/// Binomial coefficient `C(n, r)`; zero when `r > n`.
pub fn binomial(n: u64, r: u64) -> Count {
    if r > n {
        return Count::default();
    }
    multinomial(n, &[r, n - r]).expect("parts sum to n")
}

/// 6-neighborhood count: the trinomial coefficient.
pub fn count_n6(off: &CanonicalOffset) -> Count {
    let (i, j, k) = off.ijk();
    let n = index(off.total());
    multinomial_in(&factorials(n), n, &[i, j, k])
}

/// Planar 8-neighborhood (chessboard) count to `(a, b)`.
///
/// The arguments may be given in either order.
pub fn count_n8_2d(a: u64, b: u64) -> Count {
    let (i, j) = if a >= b { (a, b) } else { (b, a) };
    let slack = i - j;
    let table = factorials(index(i as u128));
    (0..=slack / 2)
        .map(|down| multinomial_in(&table, i as usize, &[down, j + down, slack - 2 * down]))
        .sum()
}

/// Which of the two 18-neighborhood formulas applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum N18Case {
    /// `i > j + k + 1`: only the max-coordinate formula applies.
    MaxCase,
    /// `i < j + k`: only the half-sum formula applies.
    HalfCase,
    /// `i == j + k` or `i == j + k + 1`: both apply and agree.
    Overlap,
}

pub fn classify_n18(off: &CanonicalOffset) -> N18Case {
    let (i, j, k) = off.ijk();
    let (i, rest) = (i as u128, j as u128 + k as u128);
    if i > rest + 1 {
        N18Case::MaxCase
    } else if i < rest {
        N18Case::HalfCase
    } else {
        N18Case::Overlap
    }
}

/// 18-neighborhood count when the path length is `i` (requires `i >= j + k`).
pub fn count_n18_maxcase(off: &CanonicalOffset) -> Result<Count> {
    let (i, j, k) = off.ijk();
    if (i as u128) < j as u128 + k as u128 {
        return Err(Error::MaxCaseNotApplicable(*off));
    }
    let slack = i - j - k;
    let table = factorials(index(i as u128));
    let mut total = Count::default();
    for away in 0..=slack / 2 {
        for down in 0..=(slack / 2 - away) {
            let straight = slack - 2 * (away + down);
            total += multinomial_in(&table, i as usize, &[away, down, k + away, j + down, straight]);
        }
    }
    Ok(total)
}

/// 18-neighborhood count when the path length is `ceil((i+j+k)/2)`
/// (requires `i <= j + k + 1`).
pub fn count_n18_halfcase(off: &CanonicalOffset) -> Result<Count> {
    let (i, j, k) = off.ijk();
    if i as u128 > j as u128 + k as u128 + 1 {
        return Err(Error::HalfCaseNotApplicable(*off));
    }
    let sum = off.total();
    let len = sum.div_ceil(2);
    // i <= len holds here, so none of these underflow
    let (si, sj, sk) = ((len - i as u128) as u64, (len - j as u128) as u64, (len - k as u128) as u64);
    let len = index(len);
    let table = factorials(len);
    if sum.is_multiple_of(2) {
        return Ok(multinomial_in(&table, len, &[si, sj, sk]));
    }
    // Odd sum: one single-axis step. A zero factor drops the impossible
    // placements, so no case analysis is needed.
    let (bi, bj, bk) = (BigUint::from(si), BigUint::from(sj), BigUint::from(sk));
    let weight = &bi * &bj + &bj * &bk + &bk * &bi;
    let denom = &table[si as usize] * &table[sj as usize] * &table[sk as usize];
    Ok(&table[len] * weight / denom)
}

/// 18-neighborhood count, dispatching on [`classify_n18`]. The overlap
/// region uses the max-coordinate formula.
pub fn count_n18(off: &CanonicalOffset) -> Count {
    match classify_n18(off) {
        N18Case::MaxCase | N18Case::Overlap => count_n18_maxcase(off),
        N18Case::HalfCase => count_n18_halfcase(off),
    }
    .expect("classification guarantees applicability")
}

/// Like [`count_n18`], but in the overlap region evaluates both formulas
/// and fails if they differ.
pub fn count_n18_checked(off: &CanonicalOffset) -> Result<Count> {
    if classify_n18(off) != N18Case::Overlap {
        return Ok(count_n18(off));
    }
    let max_case = count_n18_maxcase(off)?;
    let half_case = count_n18_halfcase(off)?;
    if max_case != half_case {
        return Err(Error::OverlapDisagreement { offset: *off, max_case, half_case });
    }
    Ok(max_case)
}

/// 26-neighborhood count: product of two chessboard counts.
pub fn count_n26(off: &CanonicalOffset) -> Count {
    let (i, j, k) = off.ijk();
    count_n8_2d(i, j) * count_n8_2d(i, k)
}

pub fn count(off: &CanonicalOffset, n: Neighborhood) -> Count {
    match n {
        Neighborhood::N6 => count_n6(off),
        Neighborhood::N18 => count_n18(off),
        Neighborhood::N26 => count_n26(off),
    }
}

/// Number of shortest `n`-paths between two arbitrary grid points.
pub fn count_between(p: GridPoint, q: GridPoint, n: Neighborhood) -> Count {
    count(&canonicalize(p, q), n)
}
