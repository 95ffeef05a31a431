//! The invariant suite behind `hilb verify`.
//!
//! Each check is an independent closure returning `Err(detail)` on the
//! first counterexample. Checks run in parallel; results are reported in
//! declaration order.

use std::collections::BTreeSet;

use hilb_core::equivariant::{
    default_rho_p2, fixed_points_p2, poincare_affine, poincare_p2, punctual_cell_dims, tangent_weights,
    CharVector, AFFINE_CHART,
};
use hilb_core::fock::FockSpace;
use hilb_core::goettsche::{fock_character, goettsche_series, SurfaceModel};
use hilb_core::incidence::{
    check_codim_hypotheses, euler_incidence, gamma_fiber_dim, nested_pairs, phi_fiber_dim, strata_base,
    strata_propagate,
};
use hilb_core::lattice::{exceptional_total_square, IntersectionLattice};
use hilb_core::monomial::{generator_count, hilbert_burch, socle_count, staircase, strata_index};
use hilb_core::nakajima::{complementary_dimensions, nakajima_closed_form, nakajima_recurrence};
use hilb_core::partition::enumerate_partitions;
use hilb_core::poly::PoincarePoly;
use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::CliError;
use crate::output::{OutputRecord, Section, Value};

type CheckResult = Result<(), String>;

pub struct Check {
    pub name: &'static str,
    pub range: String,
    run: Box<dyn Fn() -> CheckResult + Send + Sync>,
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn core<T>(r: hilb_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// Partition numbers from Euler's pentagonal recurrence.
fn pentagonal(max: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::from(0); max + 1];
    p[0] = BigInt::from(1);
    for n in 1..=max {
        let mut total = BigInt::from(0);
        for k in 1usize.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            let mut term = p[n - g1].clone();
            if g2 <= n {
                term += &p[n - g2];
            }
            if k % 2 == 1 {
                total += term;
            } else {
                total -= term;
            }
        }
        p[n] = total;
    }
    p
}

/// Coefficients of `∏ (1 - t^m)^{-chi}`.
fn euler_transform(chi: u32, order: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::from(0); order + 1];
    c[0] = BigInt::from(1);
    for m in 1..=order {
        for _ in 0..chi {
            for n in m..=order {
                let prev = c[n - m].clone();
                c[n] += prev;
            }
        }
    }
    c
}

fn check(name: &'static str, range: String, run: impl Fn() -> CheckResult + Send + Sync + 'static) -> Check {
    Check { name, range, run: Box::new(run) }
}

pub fn checks(nmax: usize) -> Vec<Check> {
    let n = nmax;
    let p2_n = nmax.min(8);
    let series_n = nmax.min(6);
    let fock_t = nmax.min(8) as u32;
    let level_max = nmax.clamp(1, 5) as i64;
    let probe_t = nmax.min(6) as u32;
    vec![
        check("partition_counts", format!("n<={n}"), move || {
            let oracle = pentagonal(n);
            for k in 0..=n {
                let count = enumerate_partitions(k).len();
                ensure!(BigInt::from(count) == oracle[k], "p({k}) = {count}, pentagonal gives {}", oracle[k]);
            }
            Ok(())
        }),
        check("conjugation", format!("n<={n}"), move || {
            for k in 0..=n {
                for l in enumerate_partitions(k) {
                    ensure!(l.conjugate().conjugate() == l, "conjugation is not an involution at {l}");
                }
            }
            Ok(())
        }),
        check("covers_cocovers", format!("n<={n}"), move || {
            for k in 0..=n {
                let mut cover_total = 0;
                for l in enumerate_partitions(k) {
                    let covers = l.covers();
                    ensure!(covers.len() == l.distinct_part_count() + 1, "cover count of {l}");
                    for m in &covers {
                        ensure!(core(m.cocovers())?.contains(&l), "{l} not a cocover of {m}");
                    }
                    cover_total += covers.len();
                }
                let mut cocover_total = 0;
                for m in enumerate_partitions(k + 1) {
                    let cocovers = core(m.cocovers())?;
                    ensure!(cocovers.len() == m.distinct_part_count(), "cocover count of {m}");
                    cocover_total += cocovers.len();
                }
                ensure!(cover_total == cocover_total, "cover relation not symmetric at n = {k}");
            }
            Ok(())
        }),
        check("generator_socle", format!("n<={n}"), move || {
            for k in 1..=n {
                for l in enumerate_partitions(k) {
                    let g = core(generator_count(&l))?;
                    let s = core(socle_count(&l))?;
                    ensure!(g == s + 1, "{l}: {g} generators, socle {s}");
                    let hb = core(hilbert_burch(&l))?;
                    ensure!(hb.rows() == hb.cols() + 1 && hb.rows() == g, "Hilbert-Burch shape of {l}");
                    let minors: BTreeSet<_> = hb.maximal_minors().iter().map(|t| t.monomial).collect();
                    let generators: BTreeSet<_> = staircase(&l).generators().iter().copied().collect();
                    ensure!(minors == generators, "maximal minors of {l} are not its generators");
                }
            }
            Ok(())
        }),
        check("jump_bound", format!("n<={n}"), move || {
            for k in 1..=n {
                for pair in nested_pairs(k) {
                    let a = core(generator_count(&pair.lower))? as i64;
                    let b = core(generator_count(&pair.upper))? as i64;
                    ensure!((a - b).abs() <= 1, "{} -> {} jumps by {}", pair.lower, pair.upper, (a - b).abs());
                }
            }
            Ok(())
        }),
        check("tangent_weights", format!("n<={n}"), move || {
            let (u, v) = AFFINE_CHART;
            for k in 0..=n {
                for l in enumerate_partitions(k) {
                    let mut w = core(tangent_weights(&l, u, v))?;
                    ensure!(w.len() == 2 * k, "{l} has {} weights", w.len());
                    let mut t = core(tangent_weights(&l.conjugate(), v, u))?;
                    w.sort();
                    t.sort();
                    ensure!(w == t, "weights of {l} not symmetric under conjugation");
                }
            }
            Ok(())
        }),
        check("affine_betti", format!("n<={n}"), move || {
            for k in 0..=n {
                let mut oracle = PoincarePoly::zero();
                for l in enumerate_partitions(k) {
                    oracle.add_cell((k - l.len()) as u32);
                }
                let s = k as i64 + 1;
                for rho in [CharVector::new(1, s), CharVector::new(s, 1), CharVector::new(2, 2 * s + 1)] {
                    let p = core(poincare_affine(k, rho))?;
                    ensure!(p == oracle, "n = {k}, rho = ({rho}): {p} vs {oracle}");
                }
            }
            Ok(())
        }),
        check("p2_chambers", format!("n<={p2_n}"), move || {
            for k in 0..=p2_n {
                let s = 2 * (k as i64) * (k as i64) + 3;
                let reference = core(poincare_p2(k, CharVector::new(1, s)))?;
                for rho in [CharVector::new(s, 1), CharVector::new(2, 2 * s + 1)] {
                    let p = core(poincare_p2(k, rho))?;
                    ensure!(p == reference, "n = {k}, rho = ({rho}): {p} vs {reference}");
                }
                ensure!(
                    reference.eval_at_one() == fixed_points_p2(k).len().into(),
                    "Euler characteristic of Hilb^{k}(P2)"
                );
            }
            Ok(())
        }),
        check("p2_goettsche", format!("n<={series_n}"), move || {
            let series = goettsche_series(&SurfaceModel::projective_plane(), series_n as u32);
            for k in 0..=series_n {
                let fixed = core(poincare_p2(k, core(default_rho_p2(k))?.rho))?;
                let slice = series.t_slice_poly(k as u32).unwrap_or_default();
                ensure!(fixed == slice, "n = {k}: fixed points {fixed}, product {slice}");
            }
            Ok(())
        }),
        check("punctual_briancon", format!("n<={n}"), move || {
            let p = pentagonal(n);
            for k in 1..=n {
                let mut dims = core(punctual_cell_dims(k))?;
                ensure!(dims.iter().max() == Some(&(k - 1)), "top punctual cell at n = {k}");
                ensure!(BigInt::from(dims.len()) == p[k], "punctual cell count at n = {k}");
                let mut by_length: Vec<_> = enumerate_partitions(k).iter().map(|l| k - l.len()).collect();
                dims.sort();
                by_length.sort();
                ensure!(dims == by_length, "n - λ₁ and n - ℓ(λ) differ at n = {k}");
                let (supported, punctual) = core(complementary_dimensions(k))?;
                ensure!(supported + punctual == 2 * k, "dimensions not complementary at n = {k}");
            }
            Ok(())
        }),
        check("incidence_euler", format!("n<={n}"), move || {
            for k in 0..=n {
                core(euler_incidence(k))?;
            }
            Ok(())
        }),
        check("fiber_duality", format!("n<={n}"), move || {
            for k in 0..=n {
                let mut phi = 0;
                for l in enumerate_partitions(k) {
                    phi += core(phi_fiber_dim(&l, !l.is_empty()))? + 1;
                }
                let mut gamma = 0;
                for m in enumerate_partitions(k + 1) {
                    let d = core(gamma_fiber_dim(&m))?;
                    ensure!(d + 2 == core(strata_index(&m, true))?, "gamma fiber over {m}");
                    gamma += d + 1;
                }
                let pairs = nested_pairs(k).len();
                ensure!(phi == pairs && gamma == pairs, "n = {k}: {phi}, {gamma}, {pairs}");
            }
            Ok(())
        }),
        check("strata_induction", format!("n<={}", n.max(1)), move || {
            let mut table = strata_base();
            loop {
                ensure!(table.satisfies_dimension_bound(), "bound exceeded at n = {}", table.n());
                ensure!(check_codim_hypotheses(&table).all_hold(), "codimension hypotheses fail at n = {}", table.n());
                if table.n() >= n {
                    return Ok(());
                }
                table = core(strata_propagate(&table))?;
            }
        }),
        check("nakajima", format!("n<={}", n.max(1)), move || {
            let seq = core(nakajima_recurrence(n.max(1) as i64))?;
            for (i, c) in seq.values().iter().enumerate() {
                let closed = core(nakajima_closed_form(i as i64 + 1))?;
                ensure!(*c == closed, "c_{} = {c}, closed form {closed}", i + 1);
            }
            Ok(())
        }),
        check("exceptional_square", format!("n<={}", n.max(1)), move || {
            let bases = [IntersectionLattice::projective_plane(), IntersectionLattice::hyperbolic(2), IntersectionLattice::rank_zero()];
            for k in 1..=n.max(1) as i64 {
                for base in &bases {
                    let sq = core(exceptional_total_square(k, base))?;
                    ensure!(sq == -k, "E² = {sq} for {k} points on a rank-{} base", base.rank());
                }
            }
            Ok(())
        }),
        check("fock_goettsche", format!("t<={fock_t}"), move || {
            for surface in [SurfaceModel::projective_plane(), SurfaceModel::k3_shaped()] {
                let series = goettsche_series(&surface, fock_t);
                ensure!(fock_character(&surface, fock_t) == series, "character differs for {:?}", surface.betti());
                let euler = euler_transform(surface.euler_characteristic(), fock_t as usize);
                ensure!(series.at_u_one() == euler, "u = 1 specialization for {:?}", surface.betti());
            }
            Ok(())
        }),
        check("heisenberg", format!("m,k<={level_max} probes t<={probe_t}"), move || {
            let surface = SurfaceModel::projective_plane();
            let fock = core(FockSpace::new(&surface, level_max as u32))?;
            let probes = fock.probes(probe_t);
            let classes = surface.basis().len();
            for m in 1..=level_max {
                for k in 1..=level_max {
                    for alpha in 0..classes {
                        for beta in 0..classes {
                            let r = core(fock.commutator_check(m, k, alpha, beta, &probes))?;
                            ensure!(r.passed(), "[a_{m}({alpha}), a_-{k}({beta})] fails on {} probes", r.failures.len());
                        }
                    }
                }
            }
            Ok(())
        }),
    ]
}

pub fn check_names() -> Vec<&'static str> {
    checks(1).into_iter().map(|c| c.name).collect()
}

/// Worker count from `HILB_THREADS`, if set to a positive integer.
pub fn thread_cap() -> Option<usize> {
    std::env::var("HILB_THREADS").ok()?.trim().parse().ok().filter(|&n| n > 0)
}

pub fn verify(nmax: usize, only: &[String]) -> Result<OutputRecord, CliError> {
    let names = check_names();
    if let Some(unknown) = only.iter().find(|o| !names.contains(&o.as_str())) {
        return Err(CliError::Usage(format!("unknown check {unknown:?}; available: {}", names.join(", "))));
    }
    let selected: Vec<Check> = checks(nmax)
        .into_iter()
        .filter(|c| only.is_empty() || only.iter().any(|o| o == c.name))
        .collect();

    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(cap) = thread_cap() {
        builder = builder.num_threads(cap);
    }
    let pool = builder.build().map_err(|e| CliError::Usage(format!("thread pool: {e}")))?;
    let outcomes: Vec<CheckResult> = pool.install(|| selected.par_iter().map(|c| (c.run)()).collect());

    let mut table = Section::new("checks", &["check", "range", "status", "detail"]);
    let mut failures = Section::new("failures", &["check", "detail"]);
    for (c, outcome) in selected.iter().zip(&outcomes) {
        let (status, detail) = match outcome {
            Ok(()) => ("pass", String::new()),
            Err(d) => {
                failures.push(vec![Value::text(c.name), Value::text(d)]);
                ("FAIL", d.clone())
            }
        };
        table.push(vec![Value::text(c.name), Value::text(&c.range), Value::text(status), Value::text(detail)]);
    }
    let failed = !failures.rows.is_empty();
    let mut record = OutputRecord::new("verify")
        .param("nmax", nmax)
        .param("checks", if only.is_empty() { "all".to_string() } else { only.join(",") })
        .section(table);
    if failed {
        record = record.section(failures);
    }
    record.ok = !failed;
    Ok(record)
}
