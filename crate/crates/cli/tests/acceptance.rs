//! Acceptance gate. Each criterion prints one PASS/FAIL line; the test
//! fails if any criterion fails. Run with `--nocapture` to see the lines.

use std::process::Command;
use std::time::{Duration, Instant};

use gridpaths_core::{
    admissible_moves, binomial, canonical_points, canonicalize, count, count_between, count_n18,
    count_n18_halfcase, count_n18_maxcase, count_n26, count_n6, count_n8_2d, d18, d26, d6, distance,
    enumerate_shortest_paths, oracle_count, shell_table, CanonicalOffset, Count, GridPoint, Neighborhood,
    TableKind,
};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

const PROPERTY_CASES: u32 = 1000;

fn c(v: u64) -> Count {
    Count::from(v)
}

fn off(i: u64, j: u64, k: u64) -> CanonicalOffset {
    CanonicalOffset::from_magnitudes(i, j, k)
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Check {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, want {want:?}"))
    }
}

fn within(start: Instant, budget: Duration) -> Check {
    let spent = start.elapsed();
    if spent <= budget {
        Ok(())
    } else {
        Err(format!("took {spent:?}, budget {budget:?}"))
    }
}

fn ac1_paper_values() -> Check {
    let start = Instant::now();
    expect_eq("N18 (3,0,0)", count_n18(&off(3, 0, 0)), c(13))?;
    expect_eq("N18 (3,1,0)", count_n18(&off(3, 1, 0)), c(12))?;
    expect_eq("N18 (2,2,2)", count_n18(&off(2, 2, 2)), c(6))?;
    expect_eq("N18 (2,2,1)", count_n18(&off(2, 2, 1)), c(15))?;
    // the paper's own coordinate order
    expect_eq("N18 (0,3,0)", count_between(GridPoint::new(0, 3, 0), GridPoint::ORIGIN, Neighborhood::N18), c(13))?;
    expect_eq("N18 (0,3,1)", count_between(GridPoint::new(0, 3, 1), GridPoint::ORIGIN, Neighborhood::N18), c(12))?;
    expect_eq("N18 (1,2,2)", count_between(GridPoint::new(1, 2, 2), GridPoint::ORIGIN, Neighborhood::N18), c(15))?;
    expect_eq("max-case (9,4,4)", count_n18_maxcase(&off(9, 4, 4)).map_err(|e| e.to_string())?, c(630))?;
    expect_eq("half-case (9,4,4)", count_n18_halfcase(&off(9, 4, 4)).map_err(|e| e.to_string())?, c(630))?;
    expect_eq("d26 (7,4,2)", d26(GridPoint::new(7, 4, 2), GridPoint::ORIGIN), 7)?;
    within(start, Duration::from_secs(1))
}

fn ac2_discrepancy_arbitration() -> Check {
    let p = GridPoint::new(9, 5, 4);
    let oracle = oracle_count(p, Neighborhood::N18);
    // frozen from an independent breadth-first path count
    expect_eq("oracle (9,5,4)", oracle.clone(), c(126))?;
    let o = off(9, 5, 4);
    expect_eq("dispatcher (9,5,4)", count_n18(&o), oracle.clone())?;
    expect_eq("max-case (9,5,4)", count_n18_maxcase(&o).map_err(|e| e.to_string())?, oracle.clone())?;
    expect_eq("half-case (9,5,4)", count_n18_halfcase(&o).map_err(|e| e.to_string())?, oracle)
}

fn ac3_oracle_sweep() -> Check {
    let start = Instant::now();
    for n in Neighborhood::ALL {
        for o in canonical_points(5) {
            let p = o.to_point().unwrap();
            expect_eq(&format!("{n} {p}"), count(&o, n), oracle_count(p, n))?;
        }
    }
    within(start, Duration::from_secs(10))
}

fn ac4_corollary_identity() -> Check {
    let start = Instant::now();
    let mut checked = 0;
    for i in 0..=30u64 {
        for j in 0..=i {
            for k in 0..=j {
                if i != j + k && i != j + k + 1 {
                    continue;
                }
                let o = off(i, j, k);
                let a = count_n18_maxcase(&o).map_err(|e| e.to_string())?;
                let b = count_n18_halfcase(&o).map_err(|e| e.to_string())?;
                expect_eq(&format!("overlap {o}"), a, b)?;
                checked += 1;
            }
        }
    }
    if checked == 0 {
        return Err("no overlap points visited".into());
    }
    within(start, Duration::from_secs(5))
}

fn ac5_product_law() -> Check {
    for i in 0..=12u64 {
        for j in 0..=i {
            for k in 0..=j {
                let o = off(i, j, k);
                expect_eq(&format!("product {o}"), count_n26(&o), count_n8_2d(i, j) * count_n8_2d(i, k))?;
            }
        }
    }
    for o in canonical_points(5) {
        let p = o.to_point().unwrap();
        expect_eq(&format!("N26 oracle {p}"), count_n26(&o), oracle_count(p, Neighborhood::N26))?;
    }

    let table = shell_table(Neighborhood::N26, 3);
    expect_eq("kind", table.kind, TableKind::Shell { neighborhood: Neighborhood::N26, length: 3 })?;
    let full = table.expand_symmetry();
    let border: Vec<Count> = (0..=3).map(|j| count_n8_2d(3, j)).collect();
    expect_eq("border", border.clone(), vec![c(7), c(6), c(3), c(1)])?;
    for j in 0..=3i64 {
        for k in 0..=3i64 {
            let cell = full
                .get(GridPoint::new(3, j, k))
                .ok_or_else(|| format!("(3,{j},{k}) missing from shell"))?;
            expect_eq(&format!("cell (3,{j},{k})"), cell.clone(), &border[j as usize] * &border[k as usize])?;
            if j == k {
                let root = cell.sqrt();
                expect_eq(&format!("square (3,{j},{j})"), &root * &root, cell.clone())?;
            }
        }
    }
    Ok(())
}

fn run_property<S: Strategy>(name: &str, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Check {
    let mut runner = TestRunner::new(Config {
        cases: PROPERTY_CASES,
        failure_persistence: None,
        ..Config::default()
    });
    runner.run(&strategy, test).map_err(|e| format!("{name}: {e}"))
}

fn ac6_structural_invariants() -> Check {
    let coords = || (-4i64..=4, -4i64..=4, -4i64..=4).prop_map(|(x, y, z)| GridPoint::new(x, y, z));
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

    run_property("permutation invariance", (coords(), 0usize..6), |(p, perm)| {
        let c3 = p.coords();
        let q = GridPoint::new(c3[perms[perm][0]], c3[perms[perm][1]], c3[perms[perm][2]]);
        for n in Neighborhood::ALL {
            let raw = oracle_count(q, n);
            prop_assert_eq!(&count_between(q, GridPoint::ORIGIN, n), &raw);
            prop_assert_eq!(&count_between(p, GridPoint::ORIGIN, n), &raw);
        }
        Ok(())
    })?;

    run_property("sign invariance", (coords(), 0u8..8), |(p, signs)| {
        let f = |axis: u8| if signs & (1 << axis) != 0 { -1 } else { 1 };
        let q = GridPoint::new(f(0) * p.x, f(1) * p.y, f(2) * p.z);
        for n in Neighborhood::ALL {
            let raw = oracle_count(q, n);
            prop_assert_eq!(&count_between(q, GridPoint::ORIGIN, n), &raw);
            prop_assert_eq!(&count_between(p, GridPoint::ORIGIN, n), &raw);
        }
        Ok(())
    })?;

    let wide = || (-1000i64..=1000, -1000i64..=1000, -1000i64..=1000).prop_map(|(x, y, z)| GridPoint::new(x, y, z));
    run_property("metric ordering", (wide(), wide()), |(p, q)| {
        prop_assert!(d26(p, q) <= d18(p, q));
        prop_assert!(d18(p, q) <= d6(p, q));
        Ok(())
    })?;

    run_property("trinomial recurrence", (1u64..40, 1u64..40, 1u64..40), |(i, j, k)| {
        let f = |a, b, c| count_n6(&off(a, b, c));
        prop_assert_eq!(f(i, j, k), f(i - 1, j, k) + f(i, j - 1, k) + f(i, j, k - 1));
        Ok(())
    })?;

    run_property("binomial specialization", (0u64..80, 0u64..80), |(i, j)| {
        prop_assert_eq!(count_n6(&off(i, j, 0)), binomial(i + j, i));
        Ok(())
    })
}

fn ac7_enumeration_consistency() -> Check {
    for n in Neighborhood::ALL {
        let moves = admissible_moves(n);
        for o in canonical_points(3) {
            let p = o.to_point().unwrap();
            let len = distance(p, GridPoint::ORIGIN, n);
            if len > 3 {
                continue;
            }
            let list = enumerate_shortest_paths(p, n, 1_000_000).map_err(|e| e.to_string())?;
            if list.truncated {
                return Err(format!("{n} {p}: truncated"));
            }
            expect_eq(&format!("{n} {p} path count"), Count::from(list.paths.len()), count(&o, n))?;
            for path in &list.paths {
                expect_eq(&format!("{n} {p} path length"), path.len() as u128, len)?;
                let end = path.iter().fold(GridPoint::ORIGIN, |at, &m| at.step(m));
                expect_eq(&format!("{n} {p} path end"), end, p)?;
                if !path.iter().all(|m| moves.contains(m)) {
                    return Err(format!("{n} {p}: inadmissible step in {path:?}"));
                }
            }
            if !list.paths.windows(2).all(|w| w[0] < w[1]) {
                return Err(format!("{n} {p}: paths not strictly increasing"));
            }
        }
    }
    Ok(())
}

fn cli(args: &[&str]) -> Result<(i32, String, String), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_gridpaths"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    Ok((
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    ))
}

fn ac8_cli_contract() -> Check {
    let (code, out, _) = cli(&["count", "--from", "0,0,0", "--to", "0,3,0", "-n", "18"])?;
    expect_eq("count exit", code, 0)?;
    expect_eq("count stdout", out.as_str(), "13\n")?;

    let (code, out, _) = cli(&["distance", "--from", "0,0,0", "--to", "7,4,2", "-n", "26"])?;
    expect_eq("distance exit", code, 0)?;
    expect_eq("distance stdout", out.as_str(), "7\n")?;

    let (code, out, _) = cli(&["verify", "--extent", "5", "-n", "all"])?;
    expect_eq("verify exit", code, 0)?;
    for n in Neighborhood::ALL {
        let line = format!("{n}: checked 56 points up to 5, 0 mismatches");
        if !out.lines().any(|l| l == line) {
            return Err(format!("verify summary missing '{line}' in {out:?}"));
        }
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 8] = [
        ("AC1 paper value reproduction", ac1_paper_values),
        ("AC2 (9,5,4) arbitration by oracle", ac2_discrepancy_arbitration),
        ("AC3 oracle equivalence sweep [0..5]^3", ac3_oracle_sweep),
        ("AC4 18-neighborhood overlap identity, i <= 30", ac4_corollary_identity),
        ("AC5 26-neighborhood product law", ac5_product_law),
        ("AC6 structural invariants (1000 cases each)", ac6_structural_invariants),
        ("AC7 enumeration consistency, distance <= 3", ac7_enumeration_consistency),
        ("AC8 CLI contract", ac8_cli_contract),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        let start = Instant::now();
        let result = check();
        let spent = start.elapsed();
        match &result {
            Ok(()) => println!("PASS  {name}  ({spent:.2?})"),
            Err(why) => {
                println!("FAIL  {name}  ({spent:.2?}): {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

#[test]
fn canonical_offset_round_trips_raw_pairs() {
    let p = GridPoint::new(-4, 7, 1);
    let q = GridPoint::new(2, 2, 2);
    let o = canonicalize(p, q);
    expect_eq("ijk", o.ijk(), (6, 5, 1)).unwrap();
    expect_eq("raw", o.displacement(), [-6, 5, -1]).unwrap();
}
