//! Acceptance criteria, one line of output each.
//!
//! Run with `cargo test -p hilb --test acceptance -- --nocapture` to see the
//! report. Time limits cover the toolkit's own work; the independent oracles
//! run outside the timed region.

mod common;

use std::time::{Duration, Instant};

use common::*;
use hilb_core::fock::{FockSpace, FockState};
use hilb_core::goettsche::SurfaceModel;
use num_bigint::BigInt;

type Outcome = Result<String, String>;
type Criterion = fn() -> (Duration, Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

/// Runs `work` under the clock, then `check` on its result.
fn timed<T>(limit: Option<Duration>, work: impl FnOnce() -> T, check: impl FnOnce(T) -> Outcome) -> (Duration, Outcome) {
    let start = Instant::now();
    let value = work();
    let elapsed = start.elapsed();
    let outcome = check(value).and_then(|detail| match limit {
        Some(l) if elapsed >= l => Err(format!("took {elapsed:?}, limit {l:?}")),
        _ => Ok(detail),
    });
    (elapsed, outcome)
}

fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

fn nakajima_constants() -> (Duration, Outcome) {
    timed(secs(1), || json(&["nakajima", "--n", "200", "--method", "both"]), |r| {
        let rows = section(&r, "constants");
        ensure!(rows.len() == 200, "{} rows", rows.len());
        for (i, row) in rows.iter().enumerate() {
            let n = i as i128 + 1;
            let expected = if n % 2 == 1 { n } else { -n };
            ensure!(int(&row["n"]) == n, "row order at {n}");
            ensure!(int(&row["recurrence"]) == expected, "recurrence c_{n} = {}", row["recurrence"]);
            ensure!(int(&row["closed"]) == expected, "closed form c_{n} = {}", row["closed"]);
        }
        Ok("c_n = (-1)^(n-1) n for n <= 200".into())
    })
}

fn exceptional_square() -> (Duration, Outcome) {
    let bases = ["p2", "hyperbolic", "zero"];
    let work = || {
        let mut out = Vec::new();
        for base in bases {
            for n in 1..=50 {
                let r = json(&["lattice", "--blowup", &n.to_string(), "--square-exceptional", "--base", base]);
                out.push((base, n, int(&section(&r, "exceptional")[0]["exceptional_square"])));
            }
        }
        out
    };
    timed(secs(1), work, |values| {
        for (base, n, sq) in values {
            ensure!(sq == -n, "E^2 = {sq} for {n} points over {base}");
        }
        Ok("E^2 = -n for n <= 50 over 3 bases".into())
    })
}

fn generator_socle() -> (Duration, Outcome) {
    let work = || (1..=25).map(|n| section(&json(&["partitions", "--n", &n.to_string()]), "partitions")).collect::<Vec<_>>();
    timed(secs(5), work, |tables| {
        let mut total = 0;
        for (i, rows) in tables.iter().enumerate() {
            let n = i + 1;
            let brute = brute_partitions(n);
            ensure!(rows.len() == brute.len(), "{} partitions of {n}", rows.len());
            for (row, parts) in rows.iter().zip(&brute) {
                let label = format!("({})", parts.iter().map(ToString::to_string).collect::<Vec<_>>().join(","));
                ensure!(text(&row["partition"]) == label, "order at {label}");
                let (g, s) = (int(&row["generators"]), int(&row["socle"]));
                ensure!(g == brute_generators(parts) as i128, "generators of {label}");
                ensure!(s == brute_socle(parts) as i128, "socle of {label}");
                ensure!(g == s + 1, "{label}: {g} generators, socle {s}");
            }
            total += rows.len();
        }
        Ok(format!("{total} partitions, n <= 25"))
    })
}

fn jump_bound() -> (Duration, Outcome) {
    timed(secs(5), || json(&["incidence", "--n", "20", "--check", "jumps"]), |r| {
        let rows = section(&r, "jumps");
        ensure!(rows.len() == 20, "{} rows", rows.len());
        let mut pairs = 0;
        for (i, row) in rows.iter().enumerate() {
            let n = i + 1;
            let mut expected_pairs = 0;
            let mut max_jump = 0;
            for lower in brute_partitions(n) {
                for upper in brute_covers(&lower) {
                    expected_pairs += 1;
                    max_jump = max_jump.max(brute_generators(&lower).abs_diff(brute_generators(&upper)));
                }
            }
            ensure!(int(&row["pairs"]) == expected_pairs as i128, "pair count at n = {n}");
            ensure!(int(&row["max_jump"]) == max_jump as i128, "max jump at n = {n}");
            ensure!(max_jump <= 1 && row["holds"] == true, "jump of {max_jump} at n = {n}");
            pairs += expected_pairs;
        }
        Ok(format!("{pairs} nested pairs, n <= 20"))
    })
}

/// Bounds table propagated from the n = 1 table `[4, 2]`.
fn strata_oracle(n: usize) -> Vec<Option<i64>> {
    let mut bounds = vec![Some(4), Some(2)];
    for m in 2..=n {
        let at = |j: usize| bounds.get(j - 1).copied().flatten();
        let mut next = vec![Some(2 * m as i64 + 2)];
        for i in 2..=bounds.len() + 1 {
            let best = [i - 1, i, i + 1].iter().filter_map(|&j| at(j).map(|d| d + j as i64 - 1)).max();
            next.push(best.map(|d| d - (i as i64 - 2)));
        }
        while next.last() == Some(&None) {
            next.pop();
        }
        bounds = next;
    }
    bounds
}

fn strata_induction() -> (Duration, Outcome) {
    timed(secs(1), || json(&["strata", "--n", "40"]), |r| {
        let induction = section(&r, "induction");
        ensure!(induction.len() == 40, "{} induction rows", induction.len());
        for row in &induction {
            ensure!(row["within_bound"] == true, "bound exceeded at n = {}", row["n"]);
            ensure!(text(&row["hypotheses"]) == "hold", "hypotheses fail at n = {}", row["n"]);
        }
        for n in 1..=40 {
            for (i, b) in strata_oracle(n).iter().enumerate() {
                let i = i as i64 + 1;
                if let Some(d) = b {
                    ensure!(*d <= 2 * n as i64 + 4 - 2 * i, "oracle bound exceeded at ({i}, {n})");
                }
            }
        }
        let oracle = strata_oracle(40);
        let table = section(&r, "table");
        for row in &table {
            let i = int(&row["i"]) as usize;
            let expected = oracle.get(i - 1).copied().flatten();
            let shown = match &row["bound"] {
                serde_json::Value::String(s) if s == "empty" => None,
                v => Some(int(v) as i64),
            };
            ensure!(shown == expected, "bound at i = {i}: {shown:?} vs {expected:?}");
            if let Some(d) = expected {
                let codim = 2 * 40 + 2 - d;
                let i = i as i64;
                ensure!(int(&row["codim"]) as i64 == codim, "codim at i = {i}");
                ensure!(i < 2 || codim >= i, "codim {codim} < {i}");
                ensure!(i < 3 || codim > i, "codim {codim} < {}", i + 1);
            }
        }
        Ok(format!("n <= 40, {} strata at n = 40", table.len()))
    })
}

fn briancon() -> (Duration, Outcome) {
    let work = || (1..=25).map(|n| json(&["betti", "--space", "punctual", "--n", &n.to_string()])).collect::<Vec<_>>();
    timed(secs(5), work, |records| {
        let p = partition_numbers(25);
        for (i, r) in records.iter().enumerate() {
            let n = i + 1;
            let betti = section(r, "betti");
            let top = betti.iter().map(|row| int(&row["degree"])).max().unwrap();
            ensure!(top == 2 * (n as i128 - 1), "top degree {top} at n = {n}");
            let cells: i128 = betti.iter().map(|row| int(&row["dimension"])).sum();
            ensure!(cells == p[n] as i128, "{cells} cells at n = {n}, p(n) = {}", p[n]);
            // dimension of the cell of λ is n - λ₁, so its count in degree 2d is #{λ : λ₁ = n - d}
            for row in &betti {
                let d = (int(&row["degree"]) / 2) as usize;
                let expected = brute_partitions(n).iter().filter(|l| l[0] == n - d).count();
                ensure!(int(&row["dimension"]) == expected as i128, "b_{} at n = {n}", 2 * d);
            }
        }
        Ok("max cell dimension n - 1, p(n) cells, n <= 25".into())
    })
}

fn two_oracle_betti() -> (Duration, Outcome) {
    timed(secs(60), || json(&["goettsche", "--betti", "1,0,1,0,1", "--torder", "6", "--compare-fixed-points"]), |r| {
        let rows = section(&r, "comparison");
        ensure!(rows.len() == 7, "{} comparison rows", rows.len());
        for row in &rows {
            ensure!(row["equal"] == true, "n = {}: {} vs {}", row["n"], row["fixed_points"], row["goettsche"]);
            ensure!(row["fixed_points"] == row["goettsche"], "rendered polynomials differ at n = {}", row["n"]);
        }
        let n2 = text(&rows[2]["fixed_points"]);
        ensure!(n2 == "1 + 2u^2 + 3u^4 + 2u^6 + u^8", "n = 2 gives {n2}");
        Ok("fixed points = product for n <= 6".into())
    })
}

fn chamber_independence() -> (Duration, Outcome) {
    timed(None, || {
        let mut out = Vec::new();
        for space in ["affine", "p2"] {
            for n in 0..=8i64 {
                let k = 2 * n * n + 3;
                let polys: Vec<String> = [(1, k), (k, 1), (2, 2 * k + 1)]
                    .iter()
                    .map(|(a, b)| {
                        let rho = format!("{a},{b}");
                        let o = run(&["--format", "json", "betti", "--space", space, "--n", &n.to_string(), "--rho", &rho]);
                        if o.code != 0 {
                            return format!("error: {}", o.stderr.trim());
                        }
                        let r: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
                        text(&section(&r, "poincare")[0]["polynomial"])
                    })
                    .collect();
                out.push((space, n as usize, polys));
            }
        }
        out
    }, |results| {
        for (space, n, polys) in results {
            ensure!(polys.iter().all(|p| !p.starts_with("error")), "{space} n = {n}: {polys:?}");
            ensure!(polys.windows(2).all(|w| w[0] == w[1]), "{space} n = {n}: {polys:?}");
            if space == "affine" {
                // cells of the affine plane have dimension n - ℓ(λ)
                let mut counts = vec![0; n + 1];
                for l in brute_partitions(n) {
                    counts[n - l.len()] += 1;
                }
                let r = json(&["betti", "--space", "affine", "--n", &n.to_string()]);
                for row in section(&r, "betti") {
                    let d = (int(&row["degree"]) / 2) as usize;
                    ensure!(int(&row["dimension"]) == counts[d] as i128, "affine b_{} at n = {n}", 2 * d);
                }
            }
        }
        Ok("3 subgroups, affine and P2, n <= 8".into())
    })
}

fn incidence_euler() -> (Duration, Outcome) {
    timed(secs(5), || json(&["incidence", "--n", "20", "--check", "euler"]), |r| {
        let rows = section(&r, "euler");
        ensure!(rows.len() == 21, "{} rows", rows.len());
        for row in &rows {
            let n = int(&row["n"]) as usize;
            let parts = brute_partitions(n);
            let pairs: usize = parts.iter().map(|l| brute_addable(l)).sum();
            // generators of λ ⊢ n+1 counted with the empty diagram's one generator at the origin replaced
            let generators: usize = parts.iter().map(|l| brute_generators(l)).sum();
            let socle: usize = brute_partitions(n + 1).iter().map(|l| brute_socle(l)).sum();
            ensure!(int(&row["nested_pairs"]) == pairs as i128, "pairs at n = {n}");
            ensure!(int(&row["generator_sum"]) == generators as i128, "generator sum at n = {n}");
            ensure!(int(&row["socle_sum"]) == socle as i128, "socle sum at n = {n}");
            ensure!(pairs == generators && pairs == socle && row["equal"] == true, "n = {n}: {pairs}, {generators}, {socle}");
        }
        Ok("pairs = generators = socle for n <= 20".into())
    })
}

fn heisenberg() -> (Duration, Outcome) {
    timed(None, || json(&["verify", "--only", "heisenberg", "--nmax", "6"]), |r| {
        let row = &section(&r, "checks")[0];
        ensure!(text(&row["status"]) == "pass", "verify: {}", row["detail"]);
        let surface = SurfaceModel::projective_plane();
        let fock = FockSpace::new(&surface, 5).map_err(|e| e.to_string())?;
        let probes = fock.probes(6);
        let expected_count: u128 = fock_dimensions(3, 6).iter().sum();
        ensure!(probes.len() as u128 == expected_count, "{} probes, expected {expected_count}", probes.len());
        // basis 1, h, pt with ⟨1, pt⟩ = ⟨h, h⟩ = 1
        let pairing = |a: usize, b: usize| i64::from(a + b == 2);
        let mut checked = 0;
        for m in 1..=5i64 {
            for k in 1..=5i64 {
                for alpha in 0..3 {
                    for beta in 0..3 {
                        let c = if m == k { (if m % 2 == 1 { m } else { -m }) * pairing(alpha, beta) } else { 0 };
                        for probe in &probes {
                            let lhs = commutator(&fock, probe, m, k, alpha, beta).map_err(|e| e.to_string())?;
                            ensure!(lhs == probe.scaled(&BigInt::from(c)), "[a_{m}({alpha}), a_-{k}({beta})] on {probe}");
                            checked += 1;
                        }
                    }
                }
            }
        }
        Ok(format!("{checked} probe evaluations, m, k <= 5, t <= 6"))
    })
}

fn commutator(fock: &FockSpace, probe: &FockState, m: i64, k: i64, alpha: usize, beta: usize) -> hilb_core::Result<FockState> {
    let one = fock.annihilate(&fock.create(probe, k, beta)?, m, alpha)?;
    let other = fock.create(&fock.annihilate(probe, m, alpha)?, k, beta)?;
    Ok(one.sub(&other))
}

/// Dimension of each `t`-weight piece of a Fock space on `classes` generators per level.
fn fock_dimensions(classes: u32, order: usize) -> Vec<u128> {
    let mut c = vec![0u128; order + 1];
    c[0] = 1;
    for m in 1..=order {
        for _ in 0..classes {
            for n in m..=order {
                c[n] += c[n - m];
            }
        }
    }
    c
}

fn fock_character() -> (Duration, Outcome) {
    let models = [("1,0,1,0,1", 3), ("1,0,22,0,1", 24)];
    let work = || models.map(|(b, _)| json(&["goettsche", "--betti", b, "--torder", "8"]));
    timed(None, work, |records| {
        for ((betti, chi), r) in models.iter().zip(&records) {
            let rows = section(r, "series");
            ensure!(rows.len() == 9, "{betti}: {} rows", rows.len());
            let euler = fock_dimensions(*chi, 8);
            for (n, row) in rows.iter().enumerate() {
                ensure!(row["fock_equal"] == true, "{betti}: character differs at t^{n}");
                ensure!(int(&row["euler"]) as u128 == euler[n], "{betti}: Euler number at n = {n}");
            }
        }
        let k3: Vec<i128> = section(&records[1], "series").iter().take(5).map(|row| int(&row["euler"])).collect();
        ensure!(k3 == [1, 24, 324, 3200, 25650], "K3 Euler numbers {k3:?}");
        Ok("P2 and K3, t-order 8".into())
    })
}

#[test]
fn acceptance() {
    let criteria: [(&str, Criterion); 11] = [
        ("nakajima constants", nakajima_constants),
        ("exceptional square", exceptional_square),
        ("generator/socle identity", generator_socle),
        ("jump bound", jump_bound),
        ("strata induction", strata_induction),
        ("punctual dimension", briancon),
        ("two-oracle Betti numbers", two_oracle_betti),
        ("chamber independence", chamber_independence),
        ("incidence Euler count", incidence_euler),
        ("Heisenberg commutators", heisenberg),
        ("Fock character", fock_character),
    ];
    let mut failed = Vec::new();
    for (i, (name, criterion)) in criteria.iter().enumerate() {
        let (elapsed, outcome) = criterion();
        let (status, detail) = match &outcome {
            Ok(d) => ("PASS", d.clone()),
            Err(d) => ("FAIL", d.clone()),
        };
        println!("{status} {:>2} {name:<26} {:>8.3}s  {detail}", i + 1, elapsed.as_secs_f64());
        if outcome.is_err() {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "criteria failed: {failed:?}");
}
