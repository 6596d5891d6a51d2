//! The compute subcommands.

use std::sync::Arc;

use anyhow::{bail, Result};
use clap::ValueEnum;
use serde_json::{json, Value};
use stratakit::algebra::{
    cartan_matrix, enumerate_paths, top_dual_degree, DualDegree, QuiverPresentation,
};
use stratakit::classify::{certify, Certificate, Verdict};
use stratakit::families::{fibonacci, fibonacci_cartan};
use stratakit::homology::{
    hh_b_formula, hh_bar_oracle, hh_graded_kronecker, hh_koszul, hh_kronecker_formula,
    hh_top_formula, hh_top_formula_revised, FormulaError, HHProfile, HomologyError, Method,
    DEFAULT_MAX_DIM,
};
use stratakit::repr::{
    ext_dims, ideal_rep, min_resolution, projective_rep, quotient_by_ideal, radical, regular_rep,
    simple_rep, socle, top, PathAlgebra, Representation,
};
use stratakit::{FamilyParams, Rational};

use crate::document::{int, profile_value, Output, Table};
use crate::error::CliError;
use crate::input::Input;

pub const MAX_DIM_ENV: &str = "STRATAKIT_MAX_DIM";

/// Bar-oracle cap: the `--max-dim` flag, else `STRATAKIT_MAX_DIM`, else the library default.
pub fn resolve_cap(flag: Option<usize>) -> Result<usize> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var(MAX_DIM_ENV) {
        Ok(text) => text.trim().parse().map_err(|_| {
            CliError::Input(format!(
                "{MAX_DIM_ENV}={text:?} is not a non-negative integer"
            ))
            .into()
        }),
        Err(_) => Ok(DEFAULT_MAX_DIM),
    }
}

fn homology(e: HomologyError) -> anyhow::Error {
    CliError::Precondition(e.to_string()).into()
}

fn formula(e: FormulaError) -> anyhow::Error {
    match e {
        FormulaError::Family(f) => CliError::Input(f.to_string()).into(),
        FormulaError::Homology(h) => homology(h),
    }
}

fn profile_cell(profile: &HHProfile) -> String {
    profile.to_string()
}

pub fn cartan(input: &Input) -> Result<Output> {
    let basis =
        enumerate_paths(&input.presentation).map_err(|e| CliError::Precondition(e.to_string()))?;
    let c = cartan_matrix(&basis);
    let n = c.size();
    let vertices = input.presentation.vertices();
    let mut result = json!({
        "vertices": vertices,
        "matrix": c.entries(),
        "dimension": basis.dimension(),
    });
    if let Some(FamilyParams::An { n: order, xs, ys }) = &input.family {
        let f = fibonacci_cartan(*order, xs, ys).map_err(|e| CliError::Input(e.to_string()))?;
        let agrees = (0..2).all(|i| (0..2).all(|j| f[i][j] == c.entry(i, j).into()));
        result["fibonacci_agrees"] = json!(agrees);
    }
    let mut table = Table::new(&["row", "column", "paths"]);
    for i in 0..n {
        for j in 0..n {
            table.push(vec![
                vertices[i].clone(),
                vertices[j].clone(),
                c.entry(i, j).to_string(),
            ]);
        }
    }
    Ok(Output {
        input: input.value.clone(),
        computation: "cartan".into(),
        parameters: json!({}),
        result,
        table,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum HhMethod {
    Koszul,
    Bar,
    Formula,
    Graded,
}

impl HhMethod {
    fn name(self) -> &'static str {
        match self {
            HhMethod::Koszul => "koszul",
            HhMethod::Bar => "bar",
            HhMethod::Formula => "formula",
            HhMethod::Graded => "graded",
        }
    }
}

/// Arrow degrees when the presentation is a Kronecker quiver: two vertices, no relations, every
/// arrow from the first vertex to the second.
fn kronecker_degrees(p: &QuiverPresentation) -> Option<Vec<i64>> {
    let shape = p.vertex_count() == 2
        && p.relations().is_empty()
        && p.arrows().iter().all(|a| a.source == 0 && a.target == 1);
    shape.then(|| p.arrows().iter().map(|a| a.degree).collect())
}

pub struct HhSettings {
    pub p_max: Option<usize>,
    pub cap: usize,
}

/// One profile by one method. Formula profiles of `A_n` cover only the top degree, reported in
/// the second component.
fn hh_by(
    input: &Input,
    method: HhMethod,
    settings: &HhSettings,
) -> Result<(HHProfile, Option<i64>)> {
    let p = &input.presentation;
    Ok(match method {
        HhMethod::Koszul => (hh_koszul(p).map_err(homology)?, None),
        HhMethod::Bar => {
            let p_max = match (settings.p_max, top_dual_degree(p)) {
                (Some(p_max), _) => p_max,
                (None, DualDegree::Finite(d)) => d,
                (None, DualDegree::Infinite) => {
                    bail!(CliError::Precondition("infinite global dimension: give --p-max for the bar complex".into()))
                }
            };
            (hh_bar_oracle(p, p_max, settings.cap).map_err(homology)?, None)
        }
        HhMethod::Graded => {
            let Some(degrees) = kronecker_degrees(p) else {
                bail!(CliError::Precondition("the graded method needs a Kronecker quiver".into()));
            };
            (hh_graded_kronecker(&degrees), None)
        }
        HhMethod::Formula => match &input.family {
            Some(FamilyParams::B { x, y }) => (hh_b_formula(*x as u64, *y as u64), None),
            Some(FamilyParams::An { n, xs, ys }) => {
                let value = hh_top_formula(*n, xs, ys).map_err(formula)?;
                let dim: u64 = value
                    .try_into()
                    .map_err(|_| CliError::Precondition("top dimension does not fit in 64 bits".into()))?;
                (HHProfile::from_pairs(Method::Formula, [(*n as i64, dim)]), Some(*n as i64))
            }
            _ => match kronecker_degrees(p) {
                Some(degrees) => (hh_kronecker_formula(&degrees), None),
                None => bail!(CliError::Precondition(
                    "no closed formula for this input (families b, an and Kronecker quivers have one)".into()
                )),
            },
        },
    })
}

fn partner(method: HhMethod, input: &Input) -> HhMethod {
    match method {
        HhMethod::Koszul => HhMethod::Bar,
        HhMethod::Bar => HhMethod::Koszul,
        HhMethod::Graded => HhMethod::Formula,
        HhMethod::Formula
            if kronecker_degrees(&input.presentation).is_some()
                && input.presentation.arrows().iter().any(|a| a.degree != 0) =>
        {
            HhMethod::Graded
        }
        HhMethod::Formula => HhMethod::Koszul,
    }
}

pub fn hh(input: &Input, method: HhMethod, verify: bool, settings: &HhSettings) -> Result<Output> {
    let (profile, only_degree) = hh_by(input, method, settings)?;
    let mut result = json!({
        "method": method.name(),
        "profile": profile_value(&profile),
        "euler_characteristic": profile.euler_characteristic(),
    });
    if let Some(degree) = only_degree {
        result["degrees"] = json!([degree]);
        if let Some(FamilyParams::An { n, xs, ys }) = &input.family {
            result["revised_top"] = int(hh_top_formula_revised(*n, xs, ys).map_err(formula)?);
        }
    }
    if let Some((lo, hi)) = profile.degree_bounds {
        result["arrow_degrees"] = json!([lo, hi]);
    }
    let mut parameters = json!({ "method": method.name(), "verify": verify });
    if method == HhMethod::Bar || (verify && partner(method, input) == HhMethod::Bar) {
        parameters["max_dim"] = json!(settings.cap);
        if let Some(p_max) = settings.p_max {
            parameters["p_max"] = json!(p_max);
        }
    }
    if verify {
        let other = partner(method, input);
        let (check, _) = hh_by(input, other, settings)?;
        let agrees = match only_degree {
            Some(d) => check.get(d) == profile.get(d),
            None => check.same_dims(&profile),
        };
        if !agrees {
            bail!(CliError::Mismatch(format!(
                "{} gives {} but {} gives {}",
                method.name(),
                profile,
                other.name(),
                check
            )));
        }
        result["verified_with"] = json!(other.name());
    }
    let mut table = Table::new(&["degree", "dim"]);
    for (p, d) in profile.entries() {
        table.push(vec![p.to_string(), d.to_string()]);
    }
    Ok(Output {
        input: input.value.clone(),
        computation: "hh".into(),
        parameters,
        result,
        table,
    })
}

fn algebra(input: &Input) -> Result<Arc<PathAlgebra>> {
    PathAlgebra::new(input.presentation.clone())
        .map_err(|e| CliError::Precondition(e.to_string()).into())
}

pub fn gldim(input: &Input, max_len: usize) -> Result<Output> {
    let dual = top_dual_degree(&input.presentation);
    let a = algebra(input)?;
    let bound = match dual {
        DualDegree::Finite(d) => d + 1,
        DualDegree::Infinite => max_len,
    };
    let mut lengths = Vec::new();
    let mut table = Table::new(&["vertex", "resolution_length", "complete", "multiplicities"]);
    for v in 0..a.vertex_count() {
        let r = min_resolution(&simple_rep::<Rational>(&a, v)?, bound);
        let mult: Vec<String> = r
            .multiplicities()
            .iter()
            .map(|m| format!("{m:?}"))
            .collect();
        table.push(vec![
            input.presentation.vertices()[v].clone(),
            r.length().to_string(),
            r.is_complete().to_string(),
            mult.join(" "),
        ]);
        lengths.push(json!({
            "vertex": input.presentation.vertices()[v],
            "length": r.length(),
            "complete": r.is_complete(),
            "multiplicities": r.multiplicities(),
        }));
    }
    let all_complete = lengths.iter().all(|l| l["complete"] == json!(true));
    let global = all_complete.then(|| {
        lengths
            .iter()
            .map(|l| l["length"].as_u64().unwrap())
            .max()
            .unwrap_or(0)
    });
    let result = json!({
        "top_dual_degree": dual.finite(),
        "global_dimension": global,
        "simples": lengths,
    });
    Ok(Output {
        input: input.value.clone(),
        computation: "gldim".into(),
        parameters: json!({ "max_len": bound }),
        result,
        table,
    })
}

/// A module named on the command line: `regular`, `simple:V`, `projective:V`, `ideal:V+W` (the
/// ideal `AeA`) or `quotient:V+W` (`A/AeA`), with vertices given by name.
pub fn module_from_spec(a: &Arc<PathAlgebra>, spec: &str) -> Result<Representation<Rational>> {
    let p = a.presentation();
    let vertex = |name: &str| {
        p.vertex_index(name)
            .ok_or_else(|| CliError::Input(format!("unknown vertex `{name}` in module `{spec}`")))
    };
    let vertices = |list: &str| -> Result<Vec<usize>> {
        if list.is_empty() {
            return Ok(Vec::new());
        }
        list.split('+')
            .map(|v| vertex(v).map_err(Into::into))
            .collect()
    };
    let (kind, arg) = spec.split_once(':').unwrap_or((spec, ""));
    Ok(match kind {
        "regular" => regular_rep(a),
        "simple" => simple_rep(a, vertex(arg)?)?,
        "projective" => projective_rep(a, vertex(arg)?)?,
        "ideal" => ideal_rep(a, &vertices(arg)?),
        "quotient" => quotient_by_ideal(a, &vertices(arg)?),
        _ => bail!(CliError::Input(format!(
            "unknown module `{spec}` (regular, simple:V, projective:V, ideal:V+W, quotient:V+W)"
        ))),
    })
}

pub fn ext(input: &Input, from: &str, to: &str, p_max: usize) -> Result<Output> {
    let a = algebra(input)?;
    let m = module_from_spec(&a, from)?;
    let n = module_from_spec(&a, to)?;
    let dims = ext_dims(&m, &n, p_max)?;
    let mut table = Table::new(&["degree", "dim"]);
    for (p, d) in dims.iter().enumerate() {
        table.push(vec![p.to_string(), d.to_string()]);
    }
    Ok(Output {
        input: input.value.clone(),
        computation: "ext".into(),
        parameters: json!({ "from": from, "to": to, "p_max": p_max }),
        result: json!({ "dims": dims }),
        table,
    })
}

pub fn socle_cmd(input: &Input, module: &str) -> Result<Output> {
    let a = algebra(input)?;
    let m = module_from_spec(&a, module)?;
    let soc = socle(&m).module;
    let rad = radical(&m).module;
    let hd = top(&m).module;
    let vertices = input.presentation.vertices();
    let mut table = Table::new(&["vertex", "module", "socle", "top", "radical"]);
    for (v, name) in vertices.iter().enumerate() {
        table.push(vec![
            name.clone(),
            m.dim_at(v).to_string(),
            soc.dim_at(v).to_string(),
            hd.dim_at(v).to_string(),
            rad.dim_at(v).to_string(),
        ]);
    }
    let result = json!({
        "vertices": vertices,
        "module": m.dims(),
        "socle": soc.dims(),
        "top": hd.dims(),
        "radical": rad.dims(),
    });
    Ok(Output {
        input: input.value.clone(),
        computation: "socle".into(),
        parameters: json!({ "module": module }),
        result,
        table,
    })
}

pub fn certificate_value(c: &Certificate) -> Value {
    json!({
        "verdict": c.verdict.as_str(),
        "witness": c.witness.map(|w| json!({ "degree": w.degree, "dim": w.dim })),
        "candidates": c.candidates,
        "assumptions": {
            "two_simple_modules": c.assumptions.two_simple_modules,
            "finite_global_dimension": c.assumptions.finite_global_dimension,
            "algebraically_closed_field": c.assumptions.algebraically_closed_field,
        },
        "global_dimension": c.global_dimension,
        "profile": profile_value(&c.profile),
    })
}

pub fn certify_cmd(input: &Input) -> Result<Output> {
    let c = certify(&input.presentation).map_err(|e| CliError::Precondition(e.to_string()))?;
    let mut table = Table::new(&[
        "verdict",
        "witness_degree",
        "witness_dim",
        "candidates",
        "profile",
    ]);
    let candidates: Vec<String> = c
        .candidates
        .iter()
        .map(|(x, y)| format!("{x}:{y}"))
        .collect();
    table.push(vec![
        c.verdict.as_str().into(),
        c.witness.map(|w| w.degree.to_string()).unwrap_or_default(),
        c.witness.map(|w| w.dim.to_string()).unwrap_or_default(),
        candidates.join(" "),
        profile_cell(&c.profile),
    ]);
    debug_assert!(c.verdict != Verdict::DerivedSimple || c.witness.is_some());
    Ok(Output {
        input: input.value.clone(),
        computation: "certify".into(),
        parameters: json!({}),
        result: certificate_value(&c),
        table,
    })
}

pub fn fib(xs: &[u64], ys: &[u64], n: usize) -> Result<Output> {
    let seq = fibonacci(xs, ys, n).map_err(|e| CliError::Input(e.to_string()))?;
    let mut table = Table::new(&["k", "F_k"]);
    for (k, v) in seq.values.iter().enumerate() {
        table.push(vec![k.to_string(), v.to_string()]);
    }
    Ok(Output {
        input: json!({ "xs": xs, "ys": ys }),
        computation: "fib".into(),
        parameters: json!({ "n": n }),
        result: json!({ "values": seq.values.iter().map(int).collect::<Vec<_>>() }),
        table,
    })
}
