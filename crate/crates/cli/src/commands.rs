use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Map, Value};

use quotdt_core::chern::{
    basis_matrix, builtin_dpr, chern_number_labels, decompose, determinant, dpr_check, mixed_chern_vector,
    reconstruct, BundleClass, ChernRing, BUILTIN_DPRS,
};
use quotdt_core::partitions::{enum_colored, enum_plane_partitions};
use quotdt_core::series::{dt_closed_formula, macmahon};
use quotdt_core::toric::{c3_via_localization, count_fixed_points, dt_series_with, DtOptions, BUILTIN_SPACES};
use quotdt_core::vertex::{
    euler_inverse, vertex_character, with_admissible_params, ParamSampler, CALIBRATED_CONVENTION,
};
use quotdt_core::{EquivParams, Error, SplitBundle, ToricSpace};

use crate::config::{Command, RunConfig};
use crate::report::{int, rat, rats, Report, Verdict};
use crate::CliError;

pub fn execute(cfg: &RunConfig) -> Result<Report, CliError> {
    match cfg.command {
        Command::Toric => toric(cfg),
        Command::Vertex => vertex(cfg),
        Command::Chern => chern(cfg),
        Command::Cobordism => cobordism(cfg),
        Command::Macmahon => macmahon_cmd(cfg),
    }
}

fn space_of(cfg: &RunConfig) -> Result<ToricSpace, CliError> {
    if cfg.charts.is_empty() {
        Ok(ToricSpace::builtin(cfg.space.as_deref().unwrap_or("p3"))?)
    } else {
        Ok(ToricSpace::from_charts("inline", cfg.charts.clone())?)
    }
}

fn bundle_of(space: &ToricSpace, cfg: &RunConfig) -> Result<SplitBundle, CliError> {
    if !cfg.lines.is_empty() {
        let r = cfg.lines.len();
        if cfg.rank.is_some_and(|x| x != r) {
            return Err(CliError::Usage(format!("rank {} but {r} lines", cfg.rank.unwrap_or(0))));
        }
        if let Some(bad) = cfg.lines.iter().find(|l| l.len() != space.num_charts()) {
            return Err(CliError::Usage(format!(
                "a line lists {} characters for {} charts",
                bad.len(),
                space.num_charts()
            )));
        }
        let characters = (0..space.num_charts()).map(|a| cfg.lines.iter().map(|l| l[a]).collect()).collect();
        return Ok(SplitBundle::new(r, characters)?);
    }
    let summands = cfg.summands()?;
    if summands.iter().all(|s| s.degrees(1) == [0]) {
        return Ok(space.trivial_bundle(summands.len()));
    }
    let g = space.picard_generators();
    let degrees: Vec<Vec<i64>> = summands.iter().map(|s| s.degrees(g)).collect();
    Ok(space.split_bundle(&degrees)?)
}

fn space_inputs(cfg: &RunConfig, space: &ToricSpace, bundle: &SplitBundle) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("space".into(), json!(space.name));
    if !cfg.charts.is_empty() {
        m.insert("charts".into(), json!(cfg.charts));
    }
    match &cfg.bundle {
        Some(b) => m.insert("bundle".into(), json!(b.iter().map(ToString::to_string).collect::<Vec<_>>())),
        None if !cfg.lines.is_empty() => m.insert("lines".into(), json!(cfg.lines)),
        None => m.insert("bundle".into(), json!(vec!["O"; bundle.rank()])),
    };
    m.insert("rank".into(), json!(bundle.rank()));
    m
}

fn params_json(p: &EquivParams) -> Value {
    json!({"s": p.s, "v": p.v})
}

fn toric(cfg: &RunConfig) -> Result<Report, CliError> {
    let space = space_of(cfg)?;
    let bundle = bundle_of(&space, cfg)?;
    let r = bundle.rank();
    let nmax = cfg.nmax.unwrap_or(2);
    let mut inputs = space_inputs(cfg, &space, &bundle);
    inputs.insert("nmax".into(), json!(nmax));
    inputs.insert("trials".into(), json!(cfg.trials));
    let mut report = Report::new("toric", Value::Object(inputs), cfg.seed);

    let opts = DtOptions { seed: cfg.seed, trials: cfg.trials, convention: CALIBRATED_CONVENTION };
    let run = dt_series_with(&space, &bundle, nmax, &opts)?;
    let c3 = c3_via_localization(&space, cfg.seed)?;
    let c3_small = i64::try_from(&c3).map_err(|_| CliError::Usage(format!("exponent {c3} out of range")))?;
    let closed = dt_closed_formula(r, c3_small, nmax);

    report.value("series", rats(run.series.coeffs()));
    report.value("closed_formula", rats(closed.coeffs()));
    report.value("c3_t_omega", int(&c3));
    report.value(
        "fixed_points",
        Value::Array((0..=nmax).map(|n| int(&count_fixed_points(&space, r, n))).collect()),
    );
    report.value("samples", Value::Array(run.samples.iter().map(params_json).collect()));
    for n in 0..=nmax {
        report.verdict(&format!("q^{n}"), Verdict::compare(run.series.coeff(n) == closed.coeff(n)));
    }
    Ok(report)
}

fn vertex(cfg: &RunConfig) -> Result<Report, CliError> {
    let space = space_of(cfg)?;
    let bundle = bundle_of(&space, cfg)?;
    let r = bundle.rank();
    let charts = space.chart_weights(&bundle)?;
    let chart = charts.get(cfg.chart_index).ok_or_else(|| {
        CliError::Usage(format!("chart index {} out of range ({} charts)", cfg.chart_index, charts.len()))
    })?;
    let nmax = cfg.nmax.unwrap_or(1);
    let mut inputs = space_inputs(cfg, &space, &bundle);
    inputs.insert("nmax".into(), json!(nmax));
    inputs.insert("chart_index".into(), json!(cfg.chart_index));
    let mut report = Report::new("vertex", Value::Object(inputs), cfg.seed);

    let points: Vec<_> = (0..=nmax).flat_map(|n| enum_colored(n, r)).collect();
    let mut vd_zero = true;
    let mut symmetric = true;
    let mut characters = Vec::with_capacity(points.len());
    for pt in &points {
        match vertex_character(pt, chart) {
            Ok(ch) => {
                symmetric &= ch.is_kappa_symmetric(chart.kappa());
                characters.push(Some(ch));
            }
            Err(Error::NonzeroFixedPart { .. }) => {
                vd_zero = false;
                characters.push(None);
            }
            Err(e) => return Err(e.into()),
        }
    }
    let mut sampler = ParamSampler::new(cfg.seed);
    let (params, inverses) = with_admissible_params(&mut sampler, r, |p| {
        characters
            .iter()
            .map(|c| c.as_ref().map(|c| euler_inverse(c, p)).transpose())
            .collect::<Result<Vec<_>, _>>()
    })?;
    let mut contributions = vec![BigRational::zero(); nmax + 1];
    let mut rows = Vec::with_capacity(points.len());
    for ((pt, ch), inv) in points.iter().zip(&characters).zip(&inverses) {
        if let Some(x) = inv {
            contributions[pt.size()] += x;
        }
        rows.push(json!({
            "point": pt.to_string(),
            "n": pt.size(),
            "character": ch.as_ref().map(|c| c.poly().to_string()),
            "terms": ch.as_ref().map(|c| c.poly().len()),
            "euler_inverse": inv.as_ref().map(rat),
        }));
    }
    for (n, c) in contributions.iter_mut().enumerate() {
        *c *= CALIBRATED_CONVENTION.factor(n);
    }
    report.value("tangent", json!(chart.tangent));
    report.value("kappa", json!(chart.kappa()));
    report.value("params", params_json(&params));
    report.value("points", Value::Array(rows));
    report.value("contributions", rats(&contributions));
    report.verdict("vd_zero", Verdict::check(vd_zero));
    report.verdict("symmetry", Verdict::check(symmetric));
    Ok(report)
}

fn ring_bundle(ring: &ChernRing, cfg: &RunConfig) -> Result<BundleClass, CliError> {
    if !cfg.lines.is_empty() {
        return Err(CliError::Usage("explicit lines only apply to toric data".into()));
    }
    let g = ring.generators().len();
    let lines = cfg
        .summands()?
        .iter()
        .map(|s| ring.linear_class(&s.degrees(g)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(BundleClass::split(ring, &lines))
}

fn ring_inputs(cfg: &RunConfig, name: &str, f: &BundleClass) -> Value {
    let bundle: Vec<String> = match &cfg.bundle {
        Some(b) => b.iter().map(ToString::to_string).collect(),
        None => vec!["O".into(); f.rank],
    };
    json!({"space": name, "bundle": bundle, "rank": f.rank})
}

fn chern_numbers(ring: &ChernRing, f: &BundleClass) -> Result<Value, CliError> {
    let labels = chern_number_labels(f.rank);
    let v = mixed_chern_vector(ring, f)?;
    Ok(Value::Array(labels.iter().zip(&v).map(|(l, x)| json!([l, rat(x)])).collect()))
}

fn chern(cfg: &RunConfig) -> Result<Report, CliError> {
    if !cfg.charts.is_empty() {
        return Err(CliError::Usage("chern works on built-in rings only".into()));
    }
    let name = cfg.space.as_deref().unwrap_or("p3");
    let ring = ChernRing::builtin(name)?;
    let f = ring_bundle(&ring, cfg)?;
    let mut report = Report::new("chern", ring_inputs(cfg, name, &f), cfg.seed);

    let twisted = ring.c3_t_omega()?;
    let direct = ring.c3_minus_c1c2()?;
    let c1c2 = ring.integrate(&ring.mul(&ring.tangent_chern(1), &ring.tangent_chern(2)));
    report.value("ring", json!(ring.name));
    report.value("generators", json!(ring.generators()));
    report.value("tangent", json!(ring.format_class(ring.tangent())));
    report.value("euler_characteristic", int(&ring.euler_characteristic()));
    report.value("c1c2", int(&c1c2));
    report.value("c3_t_omega", int(&twisted));
    report.value("c3_minus_c1c2", int(&direct));
    report.value("chern_numbers", chern_numbers(&ring, &f)?);
    report.verdict("twist_route", Verdict::check(twisted == direct));
    if BUILTIN_SPACES.contains(&name) {
        let local = c3_via_localization(&ToricSpace::builtin(name)?, cfg.seed)?;
        report.value("c3_localization", int(&local));
        report.verdict("localization", Verdict::check(local == twisted));
    }
    Ok(report)
}

fn cobordism(cfg: &RunConfig) -> Result<Report, CliError> {
    if !cfg.charts.is_empty() {
        return Err(CliError::Usage("cobordism works on built-in rings only".into()));
    }
    if let Some(name) = &cfg.builtin {
        if !BUILTIN_DPRS.contains(&name.as_str()) {
            return Err(CliError::Usage(format!("unknown relation `{name}`; known: {}", BUILTIN_DPRS.join(", "))));
        }
        let r = cfg.rank.unwrap_or(1);
        let [y, a, b, p] = builtin_dpr(name, r)?;
        let rep = dpr_check(&y, &a, &b, &p)?;
        let mut report = Report::new("cobordism", json!({"builtin": name, "rank": r}), cfg.seed);
        let sides = [&y, &a, &b, &p];
        report.value(
            "sides",
            Value::Array(
                ["Y_xi", "A", "B", "P_pi"]
                    .iter()
                    .zip(sides)
                    .zip(rep.vectors.iter().zip(&rep.exponents))
                    .map(|((role, s), (v, e))| {
                        json!({"role": role, "ring": s.ring.name, "chern_numbers": rats(v), "c3_t_omega": int(e)})
                    })
                    .collect(),
            ),
        );
        report.value("labels", json!(chern_number_labels(r)));
        report.verdict("chern_numbers", Verdict::check(rep.chern_numbers_match));
        report.verdict("exponents", Verdict::check(rep.exponent_match));
        return Ok(report);
    }
    if let Some(name) = &cfg.space {
        let ring = ChernRing::builtin(name)?;
        let f = ring_bundle(&ring, cfg)?;
        let mut report = Report::new("cobordism", ring_inputs(cfg, name, &f), cfg.seed);
        let coords = decompose(&ring, &f, f.rank)?;
        let v = mixed_chern_vector(&ring, &f)?;
        let back = reconstruct(&coords, f.rank)?;
        report.value(
            "coordinates",
            Value::Array(coords.iter().map(|(p, c)| json!([p.to_string(), rat(c)])).collect()),
        );
        report.value("labels", json!(chern_number_labels(f.rank)));
        report.value("chern_numbers", rats(&v));
        report.value("reconstructed", rats(&back));
        report.verdict("reconstruction", Verdict::check(back == v));
        return Ok(report);
    }
    let r = cfg.rank.unwrap_or(1);
    let (pairs, rows) = basis_matrix(r)?;
    let det = determinant(&rows);
    let mut report = Report::new("cobordism", json!({"rank": r}), cfg.seed);
    report.value("pairs", json!(pairs.iter().map(ToString::to_string).collect::<Vec<_>>()));
    report.value("labels", json!(chern_number_labels(r)));
    report.value("basis", Value::Array(rows.iter().map(|row| rats(row.iter())).collect()));
    report.value("determinant", rat(&det));
    report.verdict("invertible", Verdict::check(!det.is_zero()));
    Ok(report)
}

fn macmahon_cmd(cfg: &RunConfig) -> Result<Report, CliError> {
    let nmax = cfg.nmax.unwrap_or(6);
    let m = macmahon(nmax);
    let mut report = Report::new("macmahon", json!({"nmax": nmax}), cfg.seed);
    report.value("coefficients", rats(m.coeffs()));
    let checked = nmax.min(6);
    let counts: Vec<BigInt> = (0..=checked).map(|n| BigInt::from(enum_plane_partitions(n).len())).collect();
    report.verdict(
        "plane_partition_counts",
        Verdict::check(counts.iter().zip(m.coeffs()).all(|(c, x)| BigRational::from_integer(c.clone()) == *x)),
    );
    Ok(report)
}
