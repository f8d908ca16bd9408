//! One function per subcommand. Each returns the text to print, the same
//! data as JSON, and whether the check it ran succeeded.

use heisenfock_core::graded::{euler, ext_power, sym_power};
use heisenfock_core::generators::{square_grid, triangularity_report, verify_grid};
use heisenfock_core::{
    act_element, compare_dims, normal_order, s_coefficient, FockVector, GradedDims, NormalElement, Rational,
    RelationVariant,
};
use serde_json::{json, Value};

use crate::config::Config;
use crate::parser::parse_element;
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Success,
    /// A verification ran and found a counterexample.
    Failure,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub status: Status,
    pub text: String,
    pub json: Value,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Self { status: Status::Success, text, json }
    }

    fn checked(holds: bool, text: String, json: Value) -> Self {
        Self { status: if holds { Status::Success } else { Status::Failure }, text, json }
    }
}

fn normal_terms(x: &NormalElement) -> Value {
    x.terms()
        .map(|(key, c)| json!({ "word": key.canonical_word().to_string(), "coefficient": c.to_string() }))
        .collect()
}

fn fock_terms(v: &FockVector) -> Value {
    v.terms().map(|(nu, c)| json!({ "monomial": nu.to_string(), "coefficient": c.to_string() })).collect()
}

fn graded_json(w: &GradedDims) -> Value {
    w.iter().map(|(degree, dim)| json!([degree, dim])).collect()
}

pub fn normal_form(config: &Config, expr: &str) -> Result<Outcome, CliError> {
    let x = parse_element(expr, config.dimension())?;
    let normal = normal_order(&x, &config.pairing);
    let text = normal.to_string();
    let json = json!({ "normal_form": text, "terms": normal_terms(&normal) });
    Ok(Outcome::ok(text, json))
}

pub fn verify(config: &Config, max_degree: u32, variant: RelationVariant) -> Outcome {
    let report = verify_grid(&square_grid(max_degree), &config.pairing, variant);
    match &report.failure {
        None => Outcome::ok(
            format!("OK, {} relation instances verified", report.instances),
            json!({ "ok": true, "variant": variant.name(), "instances": report.instances }),
        ),
        Some(failure) => Outcome::checked(
            false,
            format!("FAILED after {} relation instances: {failure}", report.instances),
            json!({
                "ok": false,
                "variant": variant.name(),
                "instances": report.instances,
                "counterexample": {
                    "relation": failure.relation.to_string(),
                    "m": failure.m,
                    "n": failure.n,
                    "alpha": failure.alpha,
                    "beta": failure.beta,
                    "lhs": failure.lhs.to_string(),
                    "rhs": failure.rhs.to_string(),
                },
            }),
        ),
    }
}

/// Applies `expr` to `on·𝟙` (the vacuum when `on` is absent).
pub fn fock_act(config: &Config, expr: &str, on: Option<&str>) -> Result<Outcome, CliError> {
    let dim = config.dimension();
    let x = parse_element(expr, dim)?;
    let start = match on {
        Some(text) => act_element(&parse_element(text, dim)?, &FockVector::vacuum(), &config.pairing),
        None => FockVector::vacuum(),
    };
    let result = act_element(&x, &start, &config.pairing);
    let text = result.to_string();
    Ok(Outcome::ok(text.clone(), json!({ "vector": text, "terms": fock_terms(&result) })))
}

pub fn dims(d: usize, max_level: u32) -> Outcome {
    let table = compare_dims(max_level, d);
    let header = ["level", "fock", "vistoli", "status"];
    let rows: Vec<[String; 4]> = table
        .rows
        .iter()
        .map(|r| {
            let status = if r.equal() { "equal" } else { "DIFFER" };
            [r.level.to_string(), r.fock.to_string(), r.vistoli.to_string(), status.to_string()]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: [&str; 4]| -> String {
        let [a, b, c, s] = cells;
        format!("{a:>w0$}  {b:>w1$}  {c:>w2$}  {s}", w0 = widths[0], w1 = widths[1], w2 = widths[2])
    };
    let mut text = line(header);
    for row in &rows {
        text.push('\n');
        text.push_str(&line([&row[0], &row[1], &row[2], &row[3]]));
    }
    let json = json!({
        "d": d,
        "rows": table.rows.iter().map(|r| json!({
            "level": r.level, "fock": r.fock, "vistoli": r.vistoli, "equal": r.equal(),
        })).collect::<Vec<_>>(),
        "all_equal": table.all_equal(),
    });
    Outcome::checked(table.all_equal(), text, json)
}

pub fn sym_euler(config: &Config, space: &str, k: u32, exterior: bool) -> Result<Outcome, CliError> {
    let w = config.space(space)?;
    let chi = euler(&w);
    let chi_q = Rational::from_integer(chi.into());
    let mut text = format!("W = {w}, chi(W) = {chi}\n");
    let (power, expected, name) = if exterior {
        let sign = if k.is_multiple_of(2) { Rational::from_integer(1.into()) } else { Rational::from_integer((-1).into()) };
        let twisted = s_coefficient(&-&chi_q, k);
        text.push_str(&format!("s^{k}(-chi) = {twisted}\n"));
        (ext_power(&w, k), sign * twisted, "ext")
    } else {
        (sym_power(&w, k), s_coefficient(&chi_q, k), "S")
    };
    let power_chi = euler(&power);
    let holds = Rational::from_integer(power_chi.into()) == expected;
    let formula = if exterior { format!("(-1)^{k} s^{k}(-chi(W))") } else { format!("s^{k}(chi(W))") };
    text.push_str(&format!("{name}^{k} W = {power}, chi = {power_chi}\n"));
    text.push_str(&format!(
        "chi({name}^{k} W) = {formula} = {expected}: {}",
        if holds { "holds" } else { "FAILS" }
    ));
    let json = json!({
        "space": graded_json(&w),
        "chi": chi,
        "k": k,
        "power": name,
        "dims": graded_json(&power),
        "power_chi": power_chi,
        "expected": expected.to_string(),
        "holds": holds,
    });
    Ok(Outcome::checked(holds, text, json))
}

pub fn triangularity(config: &Config, weight: u32) -> Outcome {
    let report = triangularity_report(weight, &config.pairing);
    let json = json!({
        "ok": report.holds(),
        "pairs": report.pairs_checked,
        "blocks": report.blocks_checked,
        "full_rank": report.full_rank,
        "violations": report.violations.iter().map(|v| json!({
            "creation": v.key.creation.to_string(),
            "annihilation": v.key.annihilation.to_string(),
            "reason": v.reason,
        })).collect::<Vec<_>>(),
    });
    let text = if report.holds() {
        format!(
            "OK, triangular with nonzero diagonal: {} pairs, {} blocks of full rank",
            report.pairs_checked, report.blocks_checked
        )
    } else if let Some(v) = report.violations.first() {
        format!("FAILED at p({}) q({}): {}", v.key.creation, v.key.annihilation, v.reason)
    } else {
        "FAILED: a block of the transition matrix is singular".to_string()
    };
    Outcome::checked(report.holds(), text, json)
}
