//! Wall-clock comparison of the closed-form counts against the layered
//! search oracle on the point family `(m, m/2, m/4)`.

use std::fmt::Write as _;
use std::hint::black_box;
use std::time::{Duration, Instant};

use gridpaths_core::{count_between, distance, oracle_count, GridPoint, Neighborhood};

/// Largest digital distance the oracle is run at by default.
pub const DEFAULT_ORACLE_CAP: u128 = 60;

const FORMULA_BUDGET: Duration = Duration::from_millis(2);
const FORMULA_MAX_REPS: u32 = 1000;

#[derive(Debug, Clone)]
pub struct BenchRow {
    pub neighborhood: Neighborhood,
    pub point: GridPoint,
    pub distance: u128,
    /// Mean time of one closed-form evaluation.
    pub formula: Duration,
    /// `None` when the distance exceeds the oracle cap.
    pub oracle: Option<Duration>,
    pub equal: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct BenchReport {
    pub max_coord: u64,
    pub oracle_cap: u128,
    pub rows: Vec<BenchRow>,
}

pub fn point_family(max_coord: u64) -> Vec<GridPoint> {
    (1..=max_coord as i64).map(|m| GridPoint::new(m, m / 2, m / 4)).collect()
}

fn time_formula(p: GridPoint, n: Neighborhood) -> Duration {
    let start = Instant::now();
    let mut reps = 0u32;
    while reps < FORMULA_MAX_REPS && (reps == 0 || start.elapsed() < FORMULA_BUDGET) {
        black_box(count_between(black_box(p), GridPoint::ORIGIN, n));
        reps += 1;
    }
    start.elapsed() / reps
}

/// Times both routes on every family point up to `max_coord`, for each
/// neighborhood. Panics if `max_coord` is zero.
pub fn bench_compare(max_coord: u64, oracle_cap: u128) -> BenchReport {
    assert!(max_coord >= 1, "max_coord must be at least 1");
    let mut rows = Vec::new();
    for n in Neighborhood::ALL {
        for p in point_family(max_coord) {
            let d = distance(p, GridPoint::ORIGIN, n);
            let value = count_between(p, GridPoint::ORIGIN, n);
            let formula = time_formula(p, n);
            let (oracle, equal) = if d <= oracle_cap {
                let start = Instant::now();
                let oracle_value = oracle_count(black_box(p), n);
                (Some(start.elapsed()), Some(oracle_value == value))
            } else {
                (None, None)
            };
            rows.push(BenchRow { neighborhood: n, point: p, distance: d, formula, oracle, equal });
        }
    }
    BenchReport { max_coord, oracle_cap, rows }
}

fn micros(d: Duration) -> String {
    format!("{:.3}", d.as_secs_f64() * 1e6)
}

impl BenchReport {
    /// Every row where both routes ran produced the same count.
    pub fn all_equal(&self) -> bool {
        self.rows.iter().all(|r| r.equal != Some(false))
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "{:<5} {:<14} {:>5} {:>14} {:>14} {:>10}  equal",
            "nbhd", "point", "dist", "formula_us", "oracle_us", "speedup"
        );
        for r in &self.rows {
            let (oracle, speedup) = match r.oracle {
                Some(o) => (micros(o), format!("{:.1}x", o.as_secs_f64() / r.formula.as_secs_f64().max(1e-12))),
                None => ("skipped".to_string(), "-".to_string()),
            };
            let equal = match r.equal {
                Some(true) => "yes",
                Some(false) => "NO",
                None => "-",
            };
            let _ = writeln!(
                s,
                "{:<5} {:<14} {:>5} {:>14} {:>14} {:>10}  {}",
                r.neighborhood.to_string(),
                r.point.to_string(),
                r.distance,
                micros(r.formula),
                oracle,
                speedup,
                equal
            );
        }
        s
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("neighborhood,x,y,z,distance,formula_us,oracle_us,equal\n");
        for r in &self.rows {
            let _ = writeln!(
                s,
                "{},{},{},{},{},{},{},{}",
                r.neighborhood.size(),
                r.point.x,
                r.point.y,
                r.point.z,
                r.distance,
                micros(r.formula),
                r.oracle.map(micros).unwrap_or_default(),
                r.equal.map(|e| e.to_string()).unwrap_or_default()
            );
        }
        s
    }
}
