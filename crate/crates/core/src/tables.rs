//! Path-count tables: every point at a fixed digital distance (a shell),
//! or the planar chessboard count field.
//!
//! Counts are always written as decimal strings.

use std::collections::BTreeSet;
use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::counting::{count, count_between, count_n8_2d};
use crate::error::Result;
use crate::metrics::{d26, distance};
use crate::types::{CanonicalOffset, Count, GridPoint, Neighborhood};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    /// Points at digital distance `length` under `neighborhood`.
    Shell { neighborhood: Neighborhood, length: u64 },
    /// Planar 8-neighborhood counts for `0 <= j <= i <= max_i`, `z = 0`.
    Planar { max_i: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableEntry {
    pub point: GridPoint,
    pub distance: u128,
    pub count: Count,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub kind: TableKind,
    /// Sorted by point.
    pub entries: Vec<TableEntry>,
}

#[derive(Serialize)]
struct JsonEntry {
    point: [i64; 3],
    distance: u128,
    count: String,
}

/// Canonical points at distance `length` under `n`, with their counts.
pub fn shell_table(n: Neighborhood, length: u64) -> CountTable {
    let mut points = Vec::new();
    // every metric is at least the max coordinate
    for i in 0..=length {
        for j in 0..=i {
            for k in 0..=j {
                let off = CanonicalOffset::from_magnitudes(i, j, k);
                let p = off.to_point().expect("table length fits in i64");
                if distance(p, GridPoint::ORIGIN, n) == u128::from(length) {
                    points.push(off);
                }
            }
        }
    }
    let entries = points
        .par_iter()
        .map(|off| TableEntry {
            point: off.to_point().unwrap(),
            distance: u128::from(length),
            count: count(off, n),
        })
        .collect();
    CountTable {
        kind: TableKind::Shell { neighborhood: n, length },
        entries,
    }
}

/// Chessboard counts `f8(i, j)` for `0 <= j <= i <= max_i`.
pub fn slice_table_2d(max_i: u64) -> CountTable {
    let cells: Vec<(u64, u64)> = (0..=max_i).flat_map(|i| (0..=i).map(move |j| (i, j))).collect();
    let entries = cells
        .par_iter()
        .map(|&(i, j)| TableEntry {
            point: GridPoint::new(i as i64, j as i64, 0),
            distance: u128::from(i),
            count: count_n8_2d(i, j),
        })
        .collect();
    CountTable {
        kind: TableKind::Planar { max_i },
        entries,
    }
}

/// All images of `p` under coordinate permutation and sign changes.
fn symmetry_images(p: GridPoint, planar: bool) -> BTreeSet<GridPoint> {
    let c = p.coords();
    let perms: &[[usize; 3]] = if planar {
        &[[0, 1, 2], [1, 0, 2]]
    } else {
        &[[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]]
    };
    let mut out = BTreeSet::new();
    for perm in perms {
        for signs in 0..8u8 {
            let flip = |axis: usize| if signs & (1 << axis) != 0 { -1 } else { 1 };
            out.insert(GridPoint::new(
                flip(0) * c[perm[0]],
                flip(1) * c[perm[1]],
                flip(2) * c[perm[2]],
            ));
        }
    }
    out
}

impl CountTable {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, p: GridPoint) -> Option<&Count> {
        self.entries
            .binary_search_by(|e| e.point.cmp(&p))
            .ok()
            .map(|idx| &self.entries[idx].count)
    }

    /// Every sign/permutation image of every entry, each with its own count.
    pub fn expand_symmetry(&self) -> CountTable {
        let planar = matches!(self.kind, TableKind::Planar { .. });
        let points: BTreeSet<GridPoint> = self
            .entries
            .iter()
            .flat_map(|e| symmetry_images(e.point, planar))
            .collect();
        let points: Vec<GridPoint> = points.into_iter().collect();
        let entries = points
            .par_iter()
            .map(|&p| match self.kind {
                TableKind::Shell { neighborhood, .. } => TableEntry {
                    point: p,
                    distance: distance(p, GridPoint::ORIGIN, neighborhood),
                    count: count_between(p, GridPoint::ORIGIN, neighborhood),
                },
                TableKind::Planar { .. } => TableEntry {
                    point: p,
                    distance: d26(p, GridPoint::ORIGIN),
                    count: count_n8_2d(p.x.unsigned_abs(), p.y.unsigned_abs()),
                },
            })
            .collect();
        CountTable { kind: self.kind, entries }
    }

    fn write_delimited<W: Write>(&self, out: W, delimiter: u8) -> Result<()> {
        let mut w = csv::WriterBuilder::new()
            .delimiter(delimiter)
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(out);
        w.write_record(["i", "j", "k", "distance", "count"])?;
        for e in &self.entries {
            let [x, y, z] = e.point.coords();
            w.write_record([
                x.to_string(),
                y.to_string(),
                z.to_string(),
                e.distance.to_string(),
                e.count.to_string(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }

    /// `i,j,k,distance,count` with a header row.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        self.write_delimited(out, b',')
    }

    pub fn write_tsv<W: Write>(&self, out: W) -> Result<()> {
        self.write_delimited(out, b'\t')
    }

    /// A JSON array of `{"point": [i, j, k], "distance": d, "count": "..."}`.
    pub fn write_json<W: Write>(&self, mut out: W) -> Result<()> {
        let rows: Vec<JsonEntry> = self
            .entries
            .iter()
            .map(|e| JsonEntry {
                point: e.point.coords(),
                distance: e.distance,
                count: e.count.to_string(),
            })
            .collect();
        serde_json::to_writer(&mut out, &rows)?;
        out.write_all(b"\n")?;
        Ok(())
    }

    pub fn write_text<W: Write>(&self, mut out: W) -> Result<()> {
        match self.kind {
            TableKind::Shell { neighborhood, length } => {
                writeln!(out, "# {neighborhood} shell, distance {length}")?
            }
            TableKind::Planar { max_i } => writeln!(out, "# planar 8-neighborhood, i <= {max_i}")?,
        }
        let width = self
            .entries
            .iter()
            .map(|e| e.point.to_string().len())
            .max()
            .unwrap_or(0);
        for e in &self.entries {
            writeln!(out, "{:<width$}  {:>3}  {}", e.point.to_string(), e.distance, e.count)?;
        }
        Ok(())
    }
}
