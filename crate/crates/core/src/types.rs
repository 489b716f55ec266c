//! Grid points, neighborhoods, canonical offsets and unit moves.
//!
//! Every counting routine in this crate works on a [`CanonicalOffset`], the
//! displacement between two points folded by the 48 symmetries of the cube
//! into `i >= j >= k >= 0`. The symmetry record is kept so the raw
//! displacement can always be recovered.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Exact, arbitrary-precision path count.
pub type Count = BigUint;

/// Serializes a [`Count`] as a decimal string.
pub(crate) fn count_as_decimal<S: serde::Serializer>(c: &Count, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(c)
}

/// A point of the unit cubic grid `Z^3`. Planar points use `z = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct GridPoint {
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

impl GridPoint {
    pub const ORIGIN: GridPoint = GridPoint { x: 0, y: 0, z: 0 };

    pub const fn new(x: i64, y: i64, z: i64) -> Self {
        GridPoint { x, y, z }
    }

    pub const fn coords(&self) -> [i64; 3] {
        [self.x, self.y, self.z]
    }

    /// Component-wise absolute difference. Never overflows: the difference
    /// of two `i64` always fits in a `u64` magnitude.
    pub fn abs_diff(&self, other: &GridPoint) -> [u64; 3] {
        [self.x.abs_diff(other.x), self.y.abs_diff(other.y), self.z.abs_diff(other.z)]
    }

    /// Translate by a unit move. Returns `None` on coordinate overflow.
    pub fn checked_step(&self, step: MoveStep) -> Option<GridPoint> {
        Some(GridPoint {
            x: self.x.checked_add(step.dx as i64)?,
            y: self.y.checked_add(step.dy as i64)?,
            z: self.z.checked_add(step.dz as i64)?,
        })
    }

    /// Translate by a unit move.
    ///
    /// Panics if a coordinate leaves the `i64` range.
    pub fn step(&self, step: MoveStep) -> GridPoint {
        self.checked_step(step).expect("grid coordinate overflow")
    }
}

impl From<[i64; 3]> for GridPoint {
    fn from(c: [i64; 3]) -> Self {
        GridPoint::new(c[0], c[1], c[2])
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

/// Parses `x,y,z`: three comma-separated signed decimal integers.
/// Whitespace around the numbers is ignored.
impl FromStr for GridPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Error::InvalidPoint(s.to_string());
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(bad());
        }
        let mut c = [0i64; 3];
        for (slot, part) in c.iter_mut().zip(&parts) {
            *slot = part.parse().map_err(|_| bad())?;
        }
        Ok(GridPoint::from(c))
    }
}

/// The three connectivities of the cubic grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Neighborhood {
    /// Face neighbors.
    N6,
    /// Face and edge neighbors.
    N18,
    /// Face, edge and vertex neighbors.
    N26,
}

impl Neighborhood {
    pub const ALL: [Neighborhood; 3] = [Neighborhood::N6, Neighborhood::N18, Neighborhood::N26];

    /// Largest number of coordinates a single step may change.
    pub const fn max_changed_coords(self) -> u8 {
        match self {
            Neighborhood::N6 => 1,
            Neighborhood::N18 => 2,
            Neighborhood::N26 => 3,
        }
    }

    /// 6, 18 or 26.
    pub const fn size(self) -> usize {
        match self {
            Neighborhood::N6 => 6,
            Neighborhood::N18 => 18,
            Neighborhood::N26 => 26,
        }
    }

    pub fn admits(self, step: MoveStep) -> bool {
        step.changed_coords() <= self.max_changed_coords()
    }

    /// Admissible unit moves, sorted lexicographically (`-1 < 0 < 1`).
    pub fn moves(self) -> Vec<MoveStep> {
        admissible_moves(self)
    }
}

impl fmt::Display for Neighborhood {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N{}", self.size())
    }
}

/// Accepts `6`, `18`, `26`, optionally prefixed with `N`/`n`.
impl FromStr for Neighborhood {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let t = t.strip_prefix(['N', 'n']).unwrap_or(t);
        match t {
            "6" => Ok(Neighborhood::N6),
            "18" => Ok(Neighborhood::N18),
            "26" => Ok(Neighborhood::N26),
            _ => Err(Error::InvalidNeighborhood(s.to_string())),
        }
    }
}

/// A unit displacement with components in `{-1, 0, 1}`, not all zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MoveStep {
    pub dx: i8,
    pub dy: i8,
    pub dz: i8,
}

impl MoveStep {
    pub fn new(dx: i8, dy: i8, dz: i8) -> Result<Self, Error> {
        let ok = |d: i8| (-1..=1).contains(&d);
        if !(ok(dx) && ok(dy) && ok(dz)) || (dx, dy, dz) == (0, 0, 0) {
            return Err(Error::InvalidStep(dx, dy, dz));
        }
        Ok(MoveStep { dx, dy, dz })
    }

    /// `|dx| + |dy| + |dz|`.
    pub fn changed_coords(&self) -> u8 {
        self.dx.unsigned_abs() + self.dy.unsigned_abs() + self.dz.unsigned_abs()
    }

    /// Smallest neighborhood that admits this step.
    pub fn neighborhood(&self) -> Neighborhood {
        match self.changed_coords() {
            1 => Neighborhood::N6,
            2 => Neighborhood::N18,
            _ => Neighborhood::N26,
        }
    }

    pub fn components(&self) -> [i8; 3] {
        [self.dx, self.dy, self.dz]
    }
}

impl fmt::Display for MoveStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.dx, self.dy, self.dz)
    }
}

/// All unit moves admitted by `n`, in lexicographic order.
pub fn admissible_moves(n: Neighborhood) -> Vec<MoveStep> {
    let mut out = Vec::with_capacity(n.size());
    for dx in -1..=1i8 {
        for dy in -1..=1i8 {
            for dz in -1..=1i8 {
                if let Ok(step) = MoveStep::new(dx, dy, dz) {
                    if n.admits(step) {
                        out.push(step);
                    }
                }
            }
        }
    }
    out
}

/// A displacement reduced to `i >= j >= k >= 0`.
///
/// `perm[s]` is the original axis (0 = x, 1 = y, 2 = z) that landed in
/// canonical slot `s`, and `signs[s]` is the sign that axis carried.
/// Hence `raw[perm[s]] = signs[s] * [i, j, k][s]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CanonicalOffset {
    i: u64,
    j: u64,
    k: u64,
    perm: [u8; 3],
    signs: [i8; 3],
}

impl CanonicalOffset {
    /// Sort three magnitudes descending. The symmetry record is the
    /// permutation that performs the sort, with all signs positive.
    pub fn from_magnitudes(a: u64, b: u64, c: u64) -> Self {
        Self::build([a, b, c], [1, 1, 1])
    }

    fn build(mags: [u64; 3], axis_signs: [i8; 3]) -> Self {
        let mut perm = [0u8, 1, 2];
        // stable: equal magnitudes keep axis order
        perm.sort_by(|&p, &q| mags[q as usize].cmp(&mags[p as usize]));
        let [a, b, c] = perm;
        CanonicalOffset {
            i: mags[a as usize],
            j: mags[b as usize],
            k: mags[c as usize],
            perm,
            signs: [axis_signs[a as usize], axis_signs[b as usize], axis_signs[c as usize]],
        }
    }

    pub const fn i(&self) -> u64 {
        self.i
    }

    pub const fn j(&self) -> u64 {
        self.j
    }

    pub const fn k(&self) -> u64 {
        self.k
    }

    pub const fn ijk(&self) -> (u64, u64, u64) {
        (self.i, self.j, self.k)
    }

    pub const fn perm(&self) -> [u8; 3] {
        self.perm
    }

    pub const fn signs(&self) -> [i8; 3] {
        self.signs
    }

    /// `i + j + k`, widened so it cannot overflow.
    pub fn total(&self) -> u128 {
        self.i as u128 + self.j as u128 + self.k as u128
    }

    pub fn is_zero(&self) -> bool {
        self.i == 0
    }

    /// The raw displacement `p - q` this offset was built from.
    pub fn displacement(&self) -> [i128; 3] {
        let mut raw = [0i128; 3];
        for (s, m) in [self.i, self.j, self.k].into_iter().enumerate() {
            raw[self.perm[s] as usize] = self.signs[s] as i128 * m as i128;
        }
        raw
    }

    /// The canonical representative `(i, j, k)` as a grid point, if it fits.
    pub fn to_point(&self) -> Option<GridPoint> {
        Some(GridPoint::new(
            i64::try_from(self.i).ok()?,
            i64::try_from(self.j).ok()?,
            i64::try_from(self.k).ok()?,
        ))
    }
}

impl fmt::Display for CanonicalOffset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.i, self.j, self.k)
    }
}

/// Fold the displacement `p - q` into canonical form.
pub fn canonicalize(p: GridPoint, q: GridPoint) -> CanonicalOffset {
    let mags = p.abs_diff(&q);
    let sign = |a: i64, b: i64| if a < b { -1 } else { 1 };
    CanonicalOffset::build(mags, [sign(p.x, q.x), sign(p.y, q.y), sign(p.z, q.z)])
}
