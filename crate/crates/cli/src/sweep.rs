//! Parameter sweeps producing one CSV row per grid point.

use std::ops::RangeInclusive;
use std::str::FromStr;

use anyhow::Result;
use clap::ValueEnum;
use rayon::prelude::*;
use stratakit::algebra::{cartan_matrix, enumerate_paths};
use stratakit::classify::{b_derived_equivalent, certify};
use stratakit::families::{an_batches, fibonacci_cartan};
use stratakit::homology::{hh_b_formula, hh_koszul, hh_top_formula, hh_top_formula_revised};
use stratakit::{build_an, build_b};

use crate::document::Table;
use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SweepKind {
    /// Top Hochschild dimension of A_n: closed formulas against the Koszul complex
    TopHh,
    /// Cartan matrices of A_n against the Fibonacci formulas
    Cartan,
    /// Certificates for A_n
    Certify,
    /// Koszul profile of B(x, y) against the closed formula
    HhB,
    /// Derived-equivalence classes among the B(x, y) of the grid
    BEquivalence,
}

/// An inclusive integer range written `lo..hi` (or a single value); `lo > hi` is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Span(pub RangeInclusive<u64>);

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| format!("`{s}` is not a range like 0..5"))
        };
        match s.split_once("..") {
            Some((lo, hi)) => Ok(Span(parse(lo)?..=parse(hi.trim_start_matches('='))?)),
            None => {
                let v = parse(s)?;
                Ok(Span(v..=v))
            }
        }
    }
}

pub struct Grid {
    pub n: Span,
    pub entries: Vec<u64>,
    pub x: Span,
    pub y: Span,
}

/// All sequences of length `len` over `values`, lexicographic.
fn sequences(len: usize, values: &[u64]) -> Vec<Vec<u64>> {
    (0..len).fold(vec![Vec::new()], |acc, _| {
        acc.into_iter()
            .flat_map(|prefix| {
                values.iter().map(move |&v| {
                    let mut s = prefix.clone();
                    s.push(v);
                    s
                })
            })
            .collect()
    })
}

fn an_points(grid: &Grid) -> Vec<(usize, Vec<u64>, Vec<u64>)> {
    let mut entries = grid.entries.clone();
    entries.sort_unstable();
    entries.dedup();
    let mut out = Vec::new();
    for n in grid.n.0.clone() {
        let n = n as usize;
        let (bx, by) = an_batches(n);
        for xs in sequences(bx, &entries) {
            for ys in sequences(by, &entries) {
                out.push((n, xs.clone(), ys));
            }
        }
    }
    out
}

fn b_points(grid: &Grid) -> Vec<(u64, u64)> {
    grid.x
        .0
        .clone()
        .flat_map(|x| grid.y.0.clone().map(move |y| (x, y)))
        .collect()
}

fn join(values: &[u64]) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(";")
}

/// Runs the grid (in parallel) and collects rows in grid order. The last column holds the error
/// message of a failed point.
pub fn sweep(kind: SweepKind, grid: &Grid) -> Result<Table> {
    if grid.entries.contains(&0) {
        return Err(CliError::Input("sequence entries must be positive".into()).into());
    }
    let (header, rows): (&[&str], Vec<Result<Vec<String>, String>>) = match kind {
        SweepKind::TopHh => (
            &[
                "n",
                "xs",
                "ys",
                "computed",
                "formula",
                "formula_equal",
                "revised",
                "revised_equal",
                "error",
            ],
            an_points(grid)
                .par_iter()
                .map(|(n, xs, ys)| {
                    let p = build_an(*n, xs, ys).map_err(|e| e.to_string())?;
                    let computed = hh_koszul(&p).map_err(|e| e.to_string())?.get(*n as i64);
                    let published = hh_top_formula(*n, xs, ys).map_err(|e| e.to_string())?;
                    let revised = hh_top_formula_revised(*n, xs, ys).map_err(|e| e.to_string())?;
                    Ok(vec![
                        n.to_string(),
                        join(xs),
                        join(ys),
                        computed.to_string(),
                        published.to_string(),
                        (published == computed.into()).to_string(),
                        revised.to_string(),
                        (revised == computed.into()).to_string(),
                    ])
                })
                .collect(),
        ),
        SweepKind::Cartan => (
            &[
                "n",
                "xs",
                "ys",
                "c11",
                "c12",
                "c21",
                "c22",
                "fibonacci_equal",
                "error",
            ],
            an_points(grid)
                .par_iter()
                .map(|(n, xs, ys)| {
                    let p = build_an(*n, xs, ys).map_err(|e| e.to_string())?;
                    let c = cartan_matrix(&enumerate_paths(&p).map_err(|e| e.to_string())?);
                    let f = fibonacci_cartan(*n, xs, ys).map_err(|e| e.to_string())?;
                    let equal = (0..2).all(|i| (0..2).all(|j| f[i][j] == c.entry(i, j).into()));
                    let mut row = vec![n.to_string(), join(xs), join(ys)];
                    row.extend(
                        [(0, 0), (0, 1), (1, 0), (1, 1)].map(|(i, j)| c.entry(i, j).to_string()),
                    );
                    row.push(equal.to_string());
                    Ok(row)
                })
                .collect(),
        ),
        SweepKind::Certify => (
            &[
                "n",
                "xs",
                "ys",
                "verdict",
                "witness_degree",
                "witness_dim",
                "candidates",
                "error",
            ],
            an_points(grid)
                .par_iter()
                .map(|(n, xs, ys)| {
                    let p = build_an(*n, xs, ys).map_err(|e| e.to_string())?;
                    let c = certify(&p).map_err(|e| e.to_string())?;
                    let candidates: Vec<String> = c
                        .candidates
                        .iter()
                        .map(|(x, y)| format!("{x}:{y}"))
                        .collect();
                    Ok(vec![
                        n.to_string(),
                        join(xs),
                        join(ys),
                        c.verdict.as_str().into(),
                        c.witness.map(|w| w.degree.to_string()).unwrap_or_default(),
                        c.witness.map(|w| w.dim.to_string()).unwrap_or_default(),
                        candidates.join(" "),
                    ])
                })
                .collect(),
        ),
        SweepKind::HhB => (
            &["x", "y", "koszul", "formula", "equal", "error"],
            b_points(grid)
                .par_iter()
                .map(|&(x, y)| {
                    let (bx, by) = (
                        u32::try_from(x).map_err(|e| e.to_string())?,
                        u32::try_from(y).map_err(|e| e.to_string())?,
                    );
                    let computed = hh_koszul(&build_b(bx, by)).map_err(|e| e.to_string())?;
                    let closed = hh_b_formula(x, y);
                    Ok(vec![
                        x.to_string(),
                        y.to_string(),
                        computed.to_string(),
                        closed.to_string(),
                        computed.same_dims(&closed).to_string(),
                    ])
                })
                .collect(),
        ),
        SweepKind::BEquivalence => {
            let points = b_points(grid);
            (
                &["x", "y", "class", "class_size", "error"],
                points
                    .iter()
                    .map(|&(x, y)| {
                        let class: Vec<String> = points
                            .iter()
                            .filter(|&&(x2, y2)| b_derived_equivalent(x, y, x2, y2))
                            .map(|(x2, y2)| format!("{x2}:{y2}"))
                            .collect();
                        Ok(vec![
                            x.to_string(),
                            y.to_string(),
                            class.join(" "),
                            class.len().to_string(),
                        ])
                    })
                    .collect(),
            )
        }
    };
    let mut table = Table::new(header);
    let all_failed = !rows.is_empty() && rows.iter().all(Result::is_err);
    let width = header.len();
    for row in rows {
        table.push(match row {
            Ok(mut cells) => {
                cells.push(String::new());
                cells
            }
            Err(message) => {
                let mut cells = vec![String::new(); width - 1];
                cells.push(message);
                cells
            }
        });
    }
    if all_failed {
        return Err(CliError::Precondition(format!(
            "every grid point failed:\n{}",
            table.to_csv()?
        ))
        .into());
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(n: &str) -> Grid {
        Grid {
            n: n.parse().unwrap(),
            entries: vec![1, 2],
            x: "0..1".parse().unwrap(),
            y: "0..1".parse().unwrap(),
        }
    }

    #[test]
    fn spans() {
        assert_eq!("0..5".parse::<Span>().unwrap(), Span(0..=5));
        assert_eq!("3".parse::<Span>().unwrap(), Span(3..=3));
        assert!("a..b".parse::<Span>().is_err());
    }

    #[test]
    fn empty_grid_has_only_a_header() {
        let t = sweep(SweepKind::TopHh, &grid("3..2")).unwrap();
        assert!(t.rows.is_empty());
        assert_eq!(t.to_csv().unwrap().lines().count(), 1);
    }

    #[test]
    fn rows_follow_grid_order() {
        let t = sweep(SweepKind::Cartan, &grid("0..2")).unwrap();
        let keys: Vec<(String, String, String)> = t
            .rows
            .iter()
            .map(|r| (r[0].clone(), r[1].clone(), r[2].clone()))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort_by_key(|(n, xs, ys)| (n.parse::<usize>().unwrap(), xs.clone(), ys.clone()));
        assert_eq!(keys, sorted);
        assert!(t.rows.iter().all(|r| r[7] == "true"));
    }
}
