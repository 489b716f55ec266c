//! Formula-free ground truth.
//!
//! Path counts here come from explicit search over the admissible move
//! sets. Nothing in this module calls into [`crate::counting`]; the only
//! closed forms used are the distance functions, which are themselves
//! checked against [`bfs_hop_distances`].

use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::metrics::{d26, distance};
use crate::types::{admissible_moves, Count, GridPoint, MoveStep, Neighborhood};

/// Shortest paths from the origin to `target`, as step sequences.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathList {
    pub target: GridPoint,
    pub neighborhood: Neighborhood,
    pub paths: Vec<Vec<MoveStep>>,
    /// More than `paths.len()` shortest paths exist.
    pub truncated: bool,
}

/// Counts shortest paths from the origin to `target` by pushing counts
/// forward through the distance layers, keeping only points that still lie
/// on some shortest path to `target`.
fn layered_count<D>(target: GridPoint, moves: &[MoveStep], dist: D) -> Count
where
    D: Fn(GridPoint, GridPoint) -> u128,
{
    let total = dist(GridPoint::ORIGIN, target);
    let mut layer: HashMap<GridPoint, Count> = HashMap::from([(GridPoint::ORIGIN, Count::from(1u8))]);
    for t in 0..total {
        let remaining = total - t - 1;
        let mut next: HashMap<GridPoint, Count> = HashMap::with_capacity(layer.len() * 2);
        for (u, paths) in &layer {
            for &m in moves {
                let Some(v) = u.checked_step(m) else { continue };
                // together with the step this forces dist(origin, v) == t + 1
                if dist(v, target) == remaining {
                    *next.entry(v).or_default() += paths;
                }
            }
        }
        layer = next;
    }
    layer.remove(&target).unwrap_or_default()
}

/// Number of shortest `n`-paths from the origin to `target`.
pub fn oracle_count(target: GridPoint, n: Neighborhood) -> Count {
    layered_count(target, &admissible_moves(n), |p, q| distance(p, q, n))
}

fn planar_moves() -> Vec<MoveStep> {
    admissible_moves(Neighborhood::N26)
        .into_iter()
        .filter(|m| m.dz == 0)
        .collect()
}

/// Number of shortest chessboard paths from `(0, 0)` to `(i, j)`.
pub fn oracle_count_2d(i: i64, j: i64) -> Count {
    layered_count(GridPoint::new(i, j, 0), &planar_moves(), d26)
}

/// Shortest-path hop counts from the origin to every point of the box
/// `[-radius, radius]^3`, by breadth-first search.
pub fn bfs_hop_distances(radius: u32, n: Neighborhood) -> BTreeMap<GridPoint, u32> {
    let r = i64::from(radius);
    let inside = |p: &GridPoint| p.coords().iter().all(|c| c.abs() <= r);
    let moves = admissible_moves(n);
    let mut seen = BTreeMap::from([(GridPoint::ORIGIN, 0u32)]);
    let mut queue = VecDeque::from([GridPoint::ORIGIN]);
    while let Some(u) = queue.pop_front() {
        let hops = seen[&u] + 1;
        for &m in &moves {
            let v = u.step(m);
            if inside(&v) && !seen.contains_key(&v) {
                seen.insert(v, hops);
                queue.push_back(v);
            }
        }
    }
    seen
}

/// Lists shortest `n`-paths from the origin to `target` in lexicographic
/// step order, stopping after `limit` paths.
pub fn enumerate_shortest_paths(target: GridPoint, n: Neighborhood, limit: usize) -> Result<PathList> {
    if limit == 0 {
        return Err(Error::NonPositiveLimit);
    }
    let moves = admissible_moves(n);
    let len = usize::try_from(distance(GridPoint::ORIGIN, target, n)).expect("path too long to enumerate");
    let mut walk = Walk {
        target,
        n,
        moves: &moves,
        limit,
        stack: Vec::with_capacity(len),
        paths: Vec::new(),
        truncated: false,
    };
    walk.descend(GridPoint::ORIGIN, len as u128);
    Ok(PathList {
        target,
        neighborhood: n,
        paths: walk.paths,
        truncated: walk.truncated,
    })
}

struct Walk<'a> {
    target: GridPoint,
    n: Neighborhood,
    moves: &'a [MoveStep],
    limit: usize,
    stack: Vec<MoveStep>,
    paths: Vec<Vec<MoveStep>>,
    truncated: bool,
}

impl Walk<'_> {
    /// Returns false once the search should stop.
    fn descend(&mut self, at: GridPoint, left: u128) -> bool {
        if left == 0 {
            if self.paths.len() == self.limit {
                self.truncated = true;
                return false;
            }
            self.paths.push(self.stack.clone());
            return true;
        }
        for &m in self.moves {
            let Some(v) = at.checked_step(m) else { continue };
            if distance(v, self.target, self.n) != left - 1 {
                continue;
            }
            self.stack.push(m);
            let go_on = self.descend(v, left - 1);
            self.stack.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
}
