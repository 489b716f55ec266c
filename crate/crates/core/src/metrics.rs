//! Digital distances: the shortest-path length between two grid points
//! under each neighborhood, plus the real-valued Minkowski distance.

use crate::error::{Error, Result};
use crate::types::{GridPoint, Neighborhood};

fn magnitudes(p: &GridPoint, q: &GridPoint) -> [u128; 3] {
    p.abs_diff(q).map(u128::from)
}

/// `(|dx|^i + |dy|^i + |dz|^i)^(1/i)` for integer order `i >= 1`.
pub fn minkowski_distance(p: GridPoint, q: GridPoint, order: u32) -> Result<f64> {
    if order < 1 {
        return Err(Error::InvalidOrder(order));
    }
    let e = f64::from(order);
    let sum: f64 = magnitudes(&p, &q).iter().map(|&m| (m as f64).powf(e)).sum();
    Ok(sum.powf(1.0 / e))
}

/// City-block distance, the 6-neighborhood path length.
pub fn d6(p: GridPoint, q: GridPoint) -> u128 {
    magnitudes(&p, &q).iter().sum()
}

/// 18-neighborhood path length: the larger of the max coordinate and
/// the rounded-up half of the coordinate sum.
pub fn d18(p: GridPoint, q: GridPoint) -> u128 {
    let m = magnitudes(&p, &q);
    let max = m.iter().copied().max().unwrap_or(0);
    let sum: u128 = m.iter().sum();
    max.max(sum.div_ceil(2))
}

/// Chessboard distance, the 26-neighborhood path length.
pub fn d26(p: GridPoint, q: GridPoint) -> u128 {
    magnitudes(&p, &q).into_iter().max().unwrap_or(0)
}

pub fn distance(p: GridPoint, q: GridPoint, n: Neighborhood) -> u128 {
    match n {
        Neighborhood::N6 => d6(p, q),
        Neighborhood::N18 => d18(p, q),
        Neighborhood::N26 => d26(p, q),
    }
}
