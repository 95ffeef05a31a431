//! One function per subcommand, each producing an [`OutputRecord`].

use hilb_core::equivariant::{
    default_rho_affine, default_rho_p2, fixed_points_p2, poincare_affine, poincare_p2, poincare_punctual,
    CharVector, RhoChoice,
};
use hilb_core::goettsche::{fock_character, goettsche_series, SurfaceModel};
use hilb_core::incidence::{
    check_codim_hypotheses, euler_incidence, gamma_fiber_dim, nested_pairs, phi_fiber_dim, strata_base,
    strata_propagate, StrataBoundTable,
};
use hilb_core::lattice::{exceptional_total_square, IntersectionLattice};
use hilb_core::monomial::{generator_count, socle_count, strata_index};
use hilb_core::nakajima::{nakajima_closed_form, nakajima_recurrence};
use hilb_core::partition::enumerate_partitions;
use hilb_core::poly::PoincarePoly;

use crate::cli::{BaseLattice, IncidenceCheck, NakajimaMethod, Space};
use crate::error::CliError;
use crate::output::{OutputRecord, Section, Value};

pub fn partitions(n: usize) -> Result<OutputRecord, CliError> {
    let mut s = Section::new(
        "partitions",
        &["index", "partition", "length", "largest", "conjugate", "generators", "socle"],
    );
    for (i, l) in enumerate_partitions(n).iter().enumerate() {
        let (gens, socle) = if l.is_empty() {
            (Value::text("-"), Value::text("-"))
        } else {
            (Value::int(generator_count(l)?), Value::int(socle_count(l)?))
        };
        s.push(vec![
            Value::int(i),
            Value::text(l),
            Value::int(l.len()),
            Value::int(l.largest_part()),
            Value::text(l.conjugate()),
            gens,
            socle,
        ]);
    }
    Ok(OutputRecord::new("partitions").param("n", n).section(s))
}

fn poincare_sections(poly: &PoincarePoly, fixed_points: usize) -> [Section; 2] {
    let mut summary = Section::new("poincare", &["polynomial", "euler", "fixed_points"]);
    summary.push(vec![Value::text(poly), Value::int(poly.eval_at_one()), Value::int(fixed_points)]);
    let mut betti = Section::new("betti", &["degree", "dimension"]);
    for (degree, c) in poly.terms() {
        betti.push(vec![Value::int(degree), Value::int(c.clone())]);
    }
    [summary, betti]
}

fn with_rho(record: OutputRecord, user: Option<CharVector>, default: impl FnOnce() -> Result<RhoChoice, CliError>) -> Result<(OutputRecord, CharVector), CliError> {
    Ok(match user {
        Some(rho) => (record.param("rho", rho).param("rho_source", "user"), rho),
        None => {
            let choice = default()?;
            let rejected: Vec<String> = choice.rejected.iter().map(|r| format!("({r})")).collect();
            let record = record
                .param("rho", choice.rho)
                .param("rho_source", "default")
                .param("rho_rejected", if rejected.is_empty() { "none".into() } else { rejected.join(" ") });
            (record, choice.rho)
        }
    })
}

pub fn betti(space: Space, n: usize, rho: Option<CharVector>) -> Result<OutputRecord, CliError> {
    let record = OutputRecord::new("betti").param("n", n);
    let (record, poly, points) = match space {
        Space::Affine => {
            let (record, rho) = with_rho(record.param("space", "affine"), rho, || Ok(default_rho_affine(n)?))?;
            (record, poincare_affine(n, rho)?, enumerate_partitions(n).len())
        }
        Space::P2 => {
            let (record, rho) = with_rho(record.param("space", "p2"), rho, || Ok(default_rho_p2(n)?))?;
            (record, poincare_p2(n, rho)?, fixed_points_p2(n).len())
        }
        Space::Punctual => {
            if rho.is_some() {
                return Err(CliError::Usage("--rho does not apply to the punctual statistic".into()));
            }
            let poly = poincare_punctual(n)?;
            (record.param("space", "punctual"), poly, enumerate_partitions(n).len())
        }
    };
    let [summary, betti] = poincare_sections(&poly, points);
    Ok(record.section(summary).section(betti))
}

pub fn incidence(n: usize, check: IncidenceCheck) -> Result<OutputRecord, CliError> {
    let mut record = OutputRecord::new("incidence").param("n", n).param("check", format!("{check:?}").to_lowercase());
    let all = check == IncidenceCheck::All;
    if all || check == IncidenceCheck::Jumps {
        let mut s = Section::new("jumps", &["n", "pairs", "max_jump", "holds"]);
        for k in 1..=n {
            let pairs = nested_pairs(k);
            let mut max_jump = 0;
            for pair in &pairs {
                let a = generator_count(&pair.lower)? as i64;
                let b = generator_count(&pair.upper)? as i64;
                max_jump = max_jump.max((a - b).abs());
            }
            let holds = max_jump <= 1;
            record.ok &= holds;
            s.push(vec![Value::int(k), Value::int(pairs.len()), Value::int(max_jump), holds.into()]);
        }
        record = record.section(s);
    }
    if all || check == IncidenceCheck::Euler {
        let mut s = Section::new("euler", &["n", "nested_pairs", "generator_sum", "socle_sum", "equal"]);
        for k in 0..=n {
            let c = euler_incidence(k)?;
            let row = [c.pairs, c.generator_sum, c.socle_sum];
            let equal = c.pairs == c.generator_sum && c.pairs == c.socle_sum;
            record.ok &= equal;
            s.push(vec![Value::int(k), Value::int(row[0]), Value::int(row[1]), Value::int(row[2]), equal.into()]);
        }
        record = record.section(s);
    }
    if all || check == IncidenceCheck::Fibers {
        let mut s = Section::new("fibers", &["n", "phi_points", "gamma_points", "pairs", "gamma_is_i_minus_2", "holds"]);
        for k in 0..=n {
            let mut phi_points = 0;
            for l in enumerate_partitions(k) {
                phi_points += phi_fiber_dim(&l, !l.is_empty())? + 1;
            }
            let mut gamma_points = 0;
            let mut i_minus_two = true;
            for m in enumerate_partitions(k + 1) {
                let d = gamma_fiber_dim(&m)?;
                gamma_points += d + 1;
                i_minus_two &= d + 2 == strata_index(&m, true)?;
            }
            let pairs = nested_pairs(k).len();
            let holds = phi_points == pairs && gamma_points == pairs && i_minus_two;
            record.ok &= holds;
            s.push(vec![
                Value::int(k),
                Value::int(phi_points),
                Value::int(gamma_points),
                Value::int(pairs),
                i_minus_two.into(),
                holds.into(),
            ]);
        }
        record = record.section(s);
    }
    Ok(record)
}

pub fn strata(n: usize) -> Result<OutputRecord, CliError> {
    if n == 0 {
        return Err(CliError::Usage("strata tables start at n = 1".into()));
    }
    let mut induction = Section::new("induction", &["n", "width", "within_bound", "hypotheses"]);
    let mut table = strata_base();
    let mut ok = true;
    loop {
        let report = check_codim_hypotheses(&table);
        let within = table.satisfies_dimension_bound();
        ok &= within && report.all_hold();
        induction.push(vec![
            Value::int(table.n()),
            Value::int(table.width()),
            within.into(),
            Value::text(if report.all_hold() { "hold" } else { "FAIL" }),
        ]);
        if table.n() == n {
            break;
        }
        table = strata_propagate(&table)?;
    }
    let mut record = OutputRecord::new("strata").param("n", n).section(induction).section(final_table(&table));
    record.ok = ok;
    Ok(record)
}

fn final_table(table: &StrataBoundTable) -> Section {
    let n = table.n() as i64;
    let mut s = Section::new(
        "table",
        &["i", "bound", "limit", "codim", "margin", "realized", "codim_ge_i", "codim_ge_i_plus_1"],
    );
    for row in check_codim_hypotheses(table).rows {
        let opt = |v: Option<i64>| v.map_or(Value::text("-"), Value::int);
        s.push(vec![
            Value::int(row.i),
            row.bound.dim().map_or(Value::text("empty"), Value::int),
            Value::int(2 * n + 4 - 2 * row.i as i64),
            opt(row.codim),
            opt(row.margin),
            row.realized.into(),
            Value::text(row.blowup_irreducible),
            Value::text(row.exceptional_irreducible),
        ]);
    }
    s
}

pub fn nakajima(n: i64, method: NakajimaMethod) -> Result<OutputRecord, CliError> {
    let record = OutputRecord::new("nakajima").param("n", n).param("method", format!("{method:?}").to_lowercase());
    let closed = |k: i64| nakajima_closed_form(k);
    let mut ok = true;
    let section = match method {
        NakajimaMethod::Recurrence => {
            let seq = nakajima_recurrence(n)?;
            let mut s = Section::new("constants", &["n", "recurrence"]);
            for (i, c) in seq.values().iter().enumerate() {
                s.push(vec![Value::int(i + 1), Value::int(c.clone())]);
            }
            s
        }
        NakajimaMethod::Closed => {
            let mut s = Section::new("constants", &["n", "closed"]);
            closed(n)?;
            for k in 1..=n {
                s.push(vec![Value::int(k), Value::int(closed(k)?)]);
            }
            s
        }
        NakajimaMethod::Both => {
            let seq = nakajima_recurrence(n)?;
            let mut s = Section::new("constants", &["n", "recurrence", "closed", "equal"]);
            for (i, c) in seq.values().iter().enumerate() {
                let k = i as i64 + 1;
                let cf = closed(k)?;
                let equal = *c == cf;
                ok &= equal;
                s.push(vec![Value::int(k), Value::int(c.clone()), Value::int(cf), equal.into()]);
            }
            s
        }
    };
    let mut record = record.section(section);
    record.ok = ok;
    Ok(record)
}

pub fn lattice(blowup: i64, square_exceptional: bool, base: BaseLattice) -> Result<OutputRecord, CliError> {
    let lattice = match base {
        BaseLattice::P2 => IntersectionLattice::projective_plane(),
        BaseLattice::Hyperbolic => IntersectionLattice::hyperbolic(1),
        BaseLattice::Zero => IntersectionLattice::rank_zero(),
    };
    let record = OutputRecord::new("lattice")
        .param("blowup", blowup)
        .param("base", format!("{base:?}").to_lowercase());
    if square_exceptional {
        let mut s = Section::new("exceptional", &["blowup", "exceptional_square"]);
        s.push(vec![Value::int(blowup), Value::int(exceptional_total_square(blowup, &lattice)?)]);
        return Ok(record.param("square_exceptional", true).section(s));
    }
    let blown = lattice.blow_up(blowup)?;
    let mut columns = vec!["class"];
    columns.extend(blown.labels().iter().map(String::as_str));
    let mut s = Section::new("gram", &columns);
    for (label, row) in blown.labels().iter().zip(blown.gram()) {
        let mut cells = vec![Value::text(label)];
        cells.extend(row.iter().map(|&v| Value::int(v)));
        s.push(cells);
    }
    Ok(record.section(s))
}

pub fn goettsche(betti: [u32; 5], torder: u32, compare_fixed_points: bool) -> Result<OutputRecord, CliError> {
    let surface = SurfaceModel::new(betti)?;
    let series = goettsche_series(&surface, torder);
    let character = fock_character(&surface, torder);
    let betti_text = betti.map(|b| b.to_string()).join(",");
    let mut record = OutputRecord::new("goettsche").param("betti", &betti_text).param("torder", torder);

    let mut s = Section::new("series", &["n", "betti", "euler", "fock_equal"]);
    let euler = series.at_u_one();
    for n in 0..=torder {
        let slice = series.t_slice_poly(n).ok_or_else(|| {
            hilb_core::Error::InvariantViolation(format!("t^{n} slice has a negative or odd-degree coefficient"))
        })?;
        let fock_equal = series.t_slice(n) == character.t_slice(n);
        record.ok &= fock_equal;
        s.push(vec![Value::int(n), Value::text(slice.render("u")), Value::int(euler[n as usize].clone()), fock_equal.into()]);
    }
    record = record.section(s);

    if compare_fixed_points {
        if betti != [1, 0, 1, 0, 1] {
            return Err(CliError::Usage(format!(
                "--compare-fixed-points needs the Betti numbers of P² (1,0,1,0,1), got {betti_text}"
            )));
        }
        let mut c = Section::new("comparison", &["n", "rho", "fixed_points", "goettsche", "equal"]);
        for n in 0..=torder {
            let rho = default_rho_p2(n as usize)?.rho;
            let fixed = poincare_p2(n as usize, rho)?;
            let from_series = series.t_slice_poly(n).unwrap_or_default();
            let equal = fixed == from_series;
            record.ok &= equal;
            c.push(vec![
                Value::int(n),
                Value::text(rho),
                Value::text(fixed.render("u")),
                Value::text(from_series.render("u")),
                equal.into(),
            ]);
        }
        record = record.param("compare_fixed_points", true).section(c);
    }
    Ok(record)
}
