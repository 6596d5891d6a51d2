//! One PASS/FAIL line per acceptance criterion. Runs as a plain binary (`harness = false`) so the
//! report is printed in order and in full.
//!
//! Criteria listed in `KNOWN_FAILURES` are reported as FAIL with their evidence but do not fail
//! the run; any other FAIL does.

use std::fs;
use std::path::Path;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use num_bigint::BigInt;
use stratakit::algebra::{quadratic_dual, top_dual_degree, DualDegree, QuiverPresentation};
use stratakit::classify::{b_derived_equivalent, certify, Verdict};
use stratakit::families::{cartan_step_factor, fibonacci_cartan, lambda_degrees_for_b};
use stratakit::homology::{
    bar_cochain_complex, bar_cochain_dims, bar_differentials_square_to_zero,
    graded_kronecker_complex, hh_bar_oracle, hh_graded_kronecker, hh_koszul, hh_kronecker_formula,
    hh_top_formula, hh_top_formula_revised, koszul_cochain_complex, CochainComplex, HHProfile,
    HomologyError,
};
use stratakit::repr::{
    ext_complex, ext_dims, is_heredity_ideal, is_quasi_hereditary_two_vertex, min_resolution,
    projective_rep, quotient_by_ideal, regular_rep, simple_rep, socle, tilting_check, PathAlgebra,
    Representation,
};
use stratakit::{build_an, build_b, build_lambda, cartan_matrix, enumerate_paths, Rational};
use stratakit_cli::input::{parse_presentation, serialize_presentation};

type Rep = Representation<Rational>;

/// Criteria that cannot pass as stated; see the decisions ledger.
const KNOWN_FAILURES: [usize; 2] = [5, 8];

/// Cap on bar cochain spaces for the oracle comparison.
const BAR_CAP: usize = 10_000_000;

/// Bar complexes at most this large are also built in full over the rationals.
const FULL_BAR_CAP: usize = 20_000;

#[derive(Default)]
struct Structural {
    complexes: usize,
    failures: Vec<String>,
}

impl Structural {
    fn check(
        &mut self,
        name: impl FnOnce() -> String,
        complex: &CochainComplex<Rational>,
        chi: i64,
    ) {
        self.complexes += 1;
        if !complex.is_complex() || complex.euler_characteristic() != chi {
            self.failures.push(name());
        }
    }

    fn check_cohomology(
        &mut self,
        name: impl FnOnce() -> String,
        complex: &CochainComplex<Rational>,
    ) {
        let chi = complex
            .cohomology_dims()
            .into_iter()
            .map(|(p, d)| {
                if p.rem_euclid(2) == 0 {
                    d as i64
                } else {
                    -(d as i64)
                }
            })
            .sum();
        self.check(name, complex, chi);
    }

    fn record(&mut self, ok: bool, name: impl FnOnce() -> String) {
        self.complexes += 1;
        if !ok {
            self.failures.push(name());
        }
    }
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn tuples<T: Copy>(len: usize, values: &[T]) -> Vec<Vec<T>> {
    (0..len).fold(vec![Vec::new()], |acc, _| {
        acc.into_iter()
            .flat_map(|t| {
                values.iter().map(move |&v| {
                    let mut t = t.clone();
                    t.push(v);
                    t
                })
            })
            .collect()
    })
}

fn degree_corpus() -> Vec<Vec<i64>> {
    let values: Vec<i64> = (-2..=2).collect();
    (0..=5).flat_map(|len| tuples(len, &values)).collect()
}

fn an_corpus(n: usize, values: &[u64]) -> Vec<(Vec<u64>, Vec<u64>)> {
    let (bx, by) = (n.div_ceil(2), n / 2);
    let mut out = Vec::new();
    for xs in tuples(bx, values) {
        for ys in tuples(by, values) {
            out.push((xs.clone(), ys));
        }
    }
    out
}

fn an(n: usize, xs: &[u64], ys: &[u64]) -> QuiverPresentation {
    build_an(n, xs, ys).expect("corpus members are valid")
}

fn algebra(p: QuiverPresentation) -> Arc<PathAlgebra> {
    PathAlgebra::new(p).expect("finite-dimensional")
}

fn pairs(profile: &HHProfile) -> Vec<(i64, u64)> {
    profile.entries().collect()
}

fn koszul_checked(
    p: &QuiverPresentation,
    name: &dyn Fn() -> String,
    s: &mut Structural,
) -> HHProfile {
    let complex = koszul_cochain_complex(p).expect("Koszul complex");
    let profile = hh_koszul(p).expect("Koszul profile");
    s.check(name, &complex, profile.euler_characteristic());
    profile
}

fn graded_structure(degrees: &[i64], profile: &HHProfile, s: &mut Structural) {
    let c = graded_kronecker_complex(degrees);
    // position 0 in total degree 0; slots of internal degree i in total degree 1 + i
    let chi = 2 + c
        .slots
        .iter()
        .map(|(&i, slots)| {
            if (1 + i).rem_euclid(2) == 0 {
                slots.len() as i64
            } else {
                -(slots.len() as i64)
            }
        })
        .sum::<i64>();
    let zero = c.slots.get(&0).map_or(0, Vec::len);
    let strand = CochainComplex::new(0, vec![2, zero], vec![c.g.clone()]);
    s.record(chi == profile.euler_characteristic(), || {
        format!("graded {degrees:?}")
    });
    s.check_cohomology(|| format!("graded strand {degrees:?}"), &strand);
}

fn criterion_1(s: &mut Structural) -> Outcome {
    let corpus = degree_corpus();
    let mut bad = Vec::new();
    for degrees in &corpus {
        let graded = hh_graded_kronecker(degrees);
        graded_structure(degrees, &graded, s);
        if !graded.same_dims(&hh_kronecker_formula(degrees)) {
            bad.push(format!("{degrees:?}"));
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "{} degree tuples of length 0..=5 over [-2,2]; mismatches: {bad:?}",
            corpus.len()
        ),
    )
}

fn criterion_2(s: &mut Structural) -> Outcome {
    let degrees = [-1, 0, 2];
    let profile = hh_graded_kronecker(&degrees);
    graded_structure(&degrees, &profile, s);
    let expected = vec![(-2, 1), (-1, 1), (0, 2), (1, 2), (2, 1), (3, 1), (4, 1)];
    let got = pairs(&profile);
    outcome(
        got == expected,
        format!("degrees {{-1,0,2}} give {profile}"),
    )
}

fn criterion_3() -> Outcome {
    let mut bad = Vec::new();
    let corpus: Vec<Vec<i64>> = degree_corpus()
        .into_iter()
        .filter(|d| !d.is_empty())
        .collect();
    for degrees in &corpus {
        let n = degrees.len() as u64;
        let h = hh_graded_kronecker(degrees);
        let a = *degrees.iter().min().unwrap();
        let b = *degrees.iter().max().unwrap();
        let (lo, hi) = (1 - b + a, 1 + b - a);
        let symmetric = (-12..=12)
            .filter(|p| !(0..=2).contains(p))
            .all(|p| h.get(p) == h.get(2 - p));
        let window = h.entries().all(|(p, _)| p == 0 || (lo..=hi).contains(&p));
        let ok = h.total() == n * n
            && symmetric
            && h.get(0) == h.get(2) + 1
            && window
            && (lo > 0 || h.get(lo) > 0);
        if !ok {
            bad.push(format!("{degrees:?}"));
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "{} nonempty tuples; symmetry checked for p outside {{0,1,2}}; failures: {bad:?}",
            corpus.len()
        ),
    )
}

fn criterion_4(s: &mut Structural) -> Outcome {
    let mut bad = Vec::new();
    for x in 0..=3u32 {
        for y in 0..=3u32 {
            let profile = koszul_checked(&build_b(x, y), &|| format!("koszul B({x},{y})"), s);
            let (xx, yy) = (u64::from(x), u64::from(y));
            let expected = if x + y == 0 {
                vec![(0, 2)]
            } else {
                [(0, xx * yy + 1), (1, xx * xx + yy * yy - 1), (2, xx * yy)]
                    .into_iter()
                    .filter(|&(_, d)| d > 0)
                    .collect()
            };
            let lambda_ok = x + y == 0 || {
                let degrees = lambda_degrees_for_b(x, y);
                let graded = hh_graded_kronecker(&degrees);
                graded_structure(&degrees, &graded, s);
                graded.same_dims(&profile)
            };
            if pairs(&profile) != expected || !lambda_ok {
                bad.push(format!("B({x},{y}): {profile}"));
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("B(x,y) for 0 <= x,y <= 3 and their Kronecker partners; mismatches: {bad:?}"),
    )
}

fn criterion_5(s: &mut Structural) -> Outcome {
    let mut members: Vec<(String, QuiverPresentation, usize)> = Vec::new();
    for n in 0..=4 {
        for (xs, ys) in an_corpus(n, &[1, 2]) {
            members.push((format!("A_{n}({xs:?},{ys:?})"), an(n, &xs, &ys), n));
        }
    }
    for x in 0..=3 {
        for y in 0..=3 {
            members.push((format!("B({x},{y})"), build_b(x, y), 3));
        }
    }
    let total = members.len();
    let mut agreed = 0;
    let mut mismatched = Vec::new();
    let mut oversized = Vec::new();
    for (name, p, p_max) in &members {
        match hh_bar_oracle(p, *p_max, BAR_CAP) {
            Ok(bar) => {
                let koszul = hh_koszul(p).expect("Koszul profile");
                let truncated = HHProfile::from_pairs(
                    koszul.method,
                    koszul.entries().filter(|&(q, _)| q <= *p_max as i64),
                );
                if bar.same_dims(&truncated) {
                    agreed += 1;
                } else {
                    mismatched.push(format!("{name}: bar {bar} vs koszul {koszul}"));
                }
                s.record(
                    bar_differentials_square_to_zero(p, *p_max, BAR_CAP) == Ok(true),
                    || format!("bar d^2 {name}"),
                );
                let small = bar_cochain_dims(p, *p_max + 1)
                    .map(|d| d.iter().all(|&v| v <= FULL_BAR_CAP as u128))
                    .unwrap_or(false);
                if small {
                    let complex = bar_cochain_complex(p, *p_max, BAR_CAP).expect("bar complex");
                    s.check_cohomology(|| format!("bar {name}"), &complex);
                }
            }
            Err(HomologyError::SizeLimit { p: q, dim, .. }) => {
                oversized.push(format!("{name} (C^{q} has dimension {dim})"))
            }
            Err(e) => mismatched.push(format!("{name}: {e}")),
        }
    }
    outcome(
        mismatched.is_empty() && oversized.is_empty(),
        format!(
            "{agreed}/{total} members agree; cap {BAR_CAP}; beyond the cap: {oversized:?}; mismatches: {mismatched:?}"
        ),
    )
}

fn mul(a: &[[BigInt; 2]; 2], e: [[u64; 2]; 2]) -> [[BigInt; 2]; 2] {
    let entry =
        |i: usize, j: usize| &a[i][0] * BigInt::from(e[0][j]) + &a[i][1] * BigInt::from(e[1][j]);
    [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]]
}

fn criterion_6() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for n in 0..=8 {
        for (xs, ys) in an_corpus(n, &[1, 2, 3]) {
            count += 1;
            let basis = enumerate_paths(&an(n, &xs, &ys)).expect("finite");
            let c = cartan_matrix(&basis);
            let computed: [[BigInt; 2]; 2] =
                [0, 1].map(|i| [0, 1].map(|j| BigInt::from(c.entry(i, j))));
            let fib = fibonacci_cartan(n, &xs, &ys).expect("formula");
            let fib: [[BigInt; 2]; 2] = fib.map(|row| row.map(BigInt::from));
            // C_n = C_{n-1} E_n, checked against the enumerated C_{n-1}
            let step_ok = n == 0 || {
                let (bx, by) = (n / 2, (n - 1) / 2);
                let prev = cartan_matrix(
                    &enumerate_paths(&an(n - 1, &xs[..bx], &ys[..by])).expect("finite"),
                );
                let prev: [[BigInt; 2]; 2] =
                    [0, 1].map(|i| [0, 1].map(|j| BigInt::from(prev.entry(i, j))));
                mul(&prev, cartan_step_factor(n, &xs, &ys)) == computed
            };
            if computed != fib || !step_ok {
                bad.push(format!("A_{n}({xs:?},{ys:?})"));
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "{count} members, closed forms and the odd and even step factors; mismatches: {bad:?}"
        ),
    )
}

fn resolution_length(a: &Arc<PathAlgebra>, vertex: usize, bound: usize) -> Option<usize> {
    let simple: Rep = simple_rep(a, vertex).expect("vertex");
    let r = min_resolution(&simple, bound);
    (r.is_complete() && r.is_exact()).then(|| r.length())
}

fn criterion_7() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for n in 0..=6 {
        for (xs, ys) in an_corpus(n, &[1, 2]) {
            count += 1;
            let p = an(n, &xs, &ys);
            let top = top_dual_degree(&p);
            let a = algebra(p);
            let lengths: Vec<Option<usize>> =
                (0..2).map(|v| resolution_length(&a, v, n + 2)).collect();
            let gl = lengths
                .iter()
                .copied()
                .collect::<Option<Vec<_>>>()
                .map(|l| l.into_iter().max().unwrap());
            if top != DualDegree::Finite(n) || gl != Some(n) {
                bad.push(format!(
                    "A_{n}({xs:?},{ys:?}): dual {top:?}, resolutions {lengths:?}"
                ));
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("{count} members with n <= 6; failures: {bad:?}"),
    )
}

fn criterion_8(s: &mut Structural) -> Outcome {
    let mut mismatches = Vec::new();
    let mut agreed = 0;
    let mut count = 0;
    let mut revised_ok = true;
    for n in 2..=5 {
        for (xs, ys) in an_corpus(n, &[1, 2]) {
            count += 1;
            let p = an(n, &xs, &ys);
            let koszul = BigInt::from(
                koszul_checked(&p, &|| format!("koszul A_{n}({xs:?},{ys:?})"), s).get(n as i64),
            );
            let published = hh_top_formula(n, &xs, &ys).expect("formula");
            revised_ok &= hh_top_formula_revised(n, &xs, &ys).expect("formula") == koszul;
            if published == koszul {
                agreed += 1;
            } else {
                mismatches.push(format!(
                    "A_{n}({xs:?},{ys:?}): formula {published}, koszul {koszul}"
                ));
            }
        }
    }
    let ones = hh_top_formula(3, &[1, 1], &[1]).expect("formula");
    let ones_ok = ones == BigInt::from(1)
        && hh_koszul(&an(3, &[1, 1], &[1]))
            .expect("Koszul profile")
            .get(3)
            == 1;
    outcome(
        mismatches.is_empty() && ones_ok,
        format!(
            "{agreed}/{count} agree; all-ones A_3 gives {ones}; corrected odd count agrees everywhere: {revised_ok}; mismatches ({}): {mismatches:?}",
            mismatches.len()
        ),
    )
}

fn criterion_9(s: &mut Structural) -> Outcome {
    let mut bad = Vec::new();
    for x in 1..=3 {
        for y in 1..=3 {
            let a = algebra(build_b(x, y));
            let quotient: Rep = quotient_by_ideal(&a, &[0]);
            let p1: Rep = projective_rep(&a, 0).expect("vertex");
            let dims = ext_dims(&quotient, &p1, 2).expect("same algebra");
            let complex = ext_complex(&quotient, &p1, 2).expect("same algebra");
            s.check_cohomology(|| format!("ext B({x},{y})"), &complex);
            if dims != vec![y as usize, x as usize, 0] {
                bad.push(format!("B({x},{y}): {dims:?}"));
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("Ext^0..2(B/Be1B, e1B) for 1 <= x,y <= 3; mismatches: {bad:?}"),
    )
}

fn criterion_10() -> Outcome {
    let mut bad = Vec::new();
    for x in 0..=3 {
        for y in 0..=3 {
            let a = algebra(build_b(x, y));
            let heredity = is_heredity_ideal(&a, &[0])
                .expect("valid subset")
                .is_heredity;
            let qh = is_quasi_hereditary_two_vertex(&a)
                .expect("two vertices")
                .quasi_hereditary;
            if !heredity || !qh {
                bad.push(format!("B({x},{y}): heredity {heredity}, qh {qh}"));
            }
        }
    }
    for n in [3, 4] {
        let a = algebra(an(n, &vec![1; n.div_ceil(2)], &vec![1; n / 2]));
        let heredity = (0..2).any(|v| {
            is_heredity_ideal(&a, &[v])
                .expect("valid subset")
                .is_heredity
        });
        let qh = is_quasi_hereditary_two_vertex(&a)
            .expect("two vertices")
            .quasi_hereditary;
        if heredity || qh {
            bad.push(format!("A_{n}: heredity {heredity}, qh {qh}"));
        }
    }
    outcome(
        bad.is_empty(),
        format!("B(x,y), x,y <= 3, and all-ones A_3, A_4; failures: {bad:?}"),
    )
}

fn criterion_11() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for n in 0..=5 {
        for (xs, ys) in an_corpus(n, &[1, 2]) {
            count += 1;
            let cert = certify(&an(n, &xs, &ys));
            let ok = match &cert {
                Ok(c) if n >= 3 => {
                    c.verdict == Verdict::DerivedSimple
                        && c.witness.map(|w| w.degree) == Some(n as i64)
                }
                Ok(c) => c.verdict == Verdict::ConsistentWithQuasiHereditary,
                Err(_) => false,
            };
            if !ok {
                bad.push(format!("A_{n}({xs:?},{ys:?}): {cert:?}"));
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("{count} members with n <= 5; failures: {bad:?}"),
    )
}

fn criterion_12() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for x in 0..=4u64 {
        for y in 0..=4u64 {
            for x2 in 0..=4u64 {
                for y2 in 0..=4u64 {
                    count += 1;
                    let unordered = (x.min(y), x.max(y)) == (x2.min(y2), x2.max(y2));
                    if b_derived_equivalent(x, y, x2, y2) != unordered {
                        bad.push(format!("({x},{y}) ~ ({x2},{y2})"));
                    }
                }
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("{count} parameter pairs; mismatches: {bad:?}"),
    )
}

fn criterion_13() -> Outcome {
    let mut bad = Vec::new();
    let mut seen = Vec::new();
    for x in [2, 3] {
        for y in [1, 2] {
            let report = tilting_check(x, y).expect("x >= 1");
            seen.push(format!(
                "B({x},{y}): hom {:?}, {} candidates",
                report.hom,
                report.candidates.len()
            ));
            if !report.is_self_orthogonal() || !report.cartan_matches.is_empty() {
                bad.push(format!(
                    "B({x},{y}): ext {:?}, matches {:?}",
                    report.ext, report.cartan_matches
                ));
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("{}; failures: {bad:?}", seen.join("; ")),
    )
}

fn criterion_14() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for n in 1..=6 {
        for (xs, ys) in an_corpus(n, &[1, 2]) {
            count += 1;
            let a = algebra(an(n, &xs, &ys));
            let regular: Rep = regular_rep(&a);
            let dims = socle(&regular).module.dims().to_vec();
            let expected_at = if n % 2 == 0 { 1 } else { 0 };
            if dims[1 - expected_at] != 0 || dims[expected_at] == 0 {
                bad.push(format!("A_{n}({xs:?},{ys:?}): socle dims {dims:?}"));
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("{count} members with 1 <= n <= 6; failures: {bad:?}"),
    )
}

fn fixture_corpus() -> Vec<(String, String)> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    let mut files: Vec<_> = fs::read_dir(&dir)
        .expect("fixture directory")
        .map(|e| e.expect("entry").path())
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|p| {
            let name = p.file_name().unwrap().to_string_lossy().into_owned();
            (name, fs::read_to_string(&p).expect("readable fixture"))
        })
        .collect()
}

fn criterion_15(s: Structural) -> Outcome {
    let mut presentations: Vec<(String, QuiverPresentation)> = Vec::new();
    let mut bad = Vec::new();
    for (name, text) in fixture_corpus() {
        match parse_presentation(&text) {
            Ok(p) => presentations.push((name, p)),
            Err(e) => bad.push(format!("{name}: {e}")),
        }
    }
    for x in 0..=4 {
        for y in 0..=4 {
            presentations.push((format!("B({x},{y})"), build_b(x, y)));
        }
    }
    for n in 0..=6 {
        for (xs, ys) in an_corpus(n, &[1, 2]) {
            presentations.push((format!("A_{n}({xs:?},{ys:?})"), an(n, &xs, &ys)));
        }
    }
    for degrees in [vec![], vec![0], vec![-1, 0, 2], vec![2, -2, 1, 1]] {
        presentations.push((format!("Kronecker {degrees:?}"), build_lambda(&degrees)));
    }
    for (name, p) in &presentations {
        if quadratic_dual(&quadratic_dual(p)) != *p {
            bad.push(format!("{name}: dual is not an involution"));
        }
        let text = serialize_presentation(p);
        match parse_presentation(&text) {
            Ok(back) if back == *p && serialize_presentation(&back) == text => {}
            _ => bad.push(format!("{name}: file round-trip")),
        }
    }
    let pass = s.failures.is_empty() && bad.is_empty();
    outcome(
        pass,
        format!(
            "{} complexes (d^2 = 0 and Euler characteristic), {} presentations (dual involution, file round-trip); failures: {:?} {bad:?}",
            s.complexes,
            presentations.len(),
            s.failures
        ),
    )
}

fn main() -> ExitCode {
    let mut structural = Structural::default();
    let mut unexpected = Vec::new();
    let mut report = |k: usize, run: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let o = run();
        let status = if o.pass { "PASS" } else { "FAIL" };
        println!(
            "criterion {k}: {status} [{:.1}s] {}",
            start.elapsed().as_secs_f64(),
            o.detail
        );
        if !o.pass && !KNOWN_FAILURES.contains(&k) {
            unexpected.push(k);
        }
    };
    report(1, &mut || criterion_1(&mut structural));
    report(2, &mut || criterion_2(&mut structural));
    report(3, &mut criterion_3);
    report(4, &mut || criterion_4(&mut structural));
    report(5, &mut || criterion_5(&mut structural));
    report(6, &mut criterion_6);
    report(7, &mut criterion_7);
    report(8, &mut || criterion_8(&mut structural));
    report(9, &mut || criterion_9(&mut structural));
    report(10, &mut criterion_10);
    report(11, &mut criterion_11);
    report(12, &mut criterion_12);
    report(13, &mut criterion_13);
    report(14, &mut criterion_14);
    let mut s = Some(std::mem::take(&mut structural));
    report(15, &mut || criterion_15(s.take().expect("runs once")));
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        eprintln!("unexpected failures: {unexpected:?}");
        ExitCode::FAILURE
    }
}
