//! Constructors for the algebra families: `B(x, y)`, graded Kronecker algebras `Λ`, the chain
//! `A_n(x̄, ȳ)`, and the generalized Fibonacci numbers describing the Cartan matrices of `A_n`.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{validate, ArrowDecl, QuiverPresentation, RawPresentation};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("sequence {name} has {got} entries but {needed} are required")]
    SequenceTooShort {
        name: &'static str,
        needed: usize,
        got: usize,
    },
    #[error("sequence {name} has a non-positive entry at position {position}")]
    NonPositiveEntry { name: &'static str, position: usize },
    #[error("the graded Kronecker algebra for B(0, 0) is degenerate (x + y must be positive)")]
    Degenerate,
}

/// Parameters naming one algebra of a family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyParams {
    B {
        x: u32,
        y: u32,
    },
    Lambda {
        degrees: Vec<i64>,
    },
    An {
        n: usize,
        xs: Vec<u64>,
        ys: Vec<u64>,
    },
}

impl FamilyParams {
    pub fn build(&self) -> Result<QuiverPresentation, FamilyError> {
        match self {
            FamilyParams::B { x, y } => Ok(build_b(*x, *y)),
            FamilyParams::Lambda { degrees } => Ok(build_lambda(degrees)),
            FamilyParams::An { n, xs, ys } => build_an(*n, xs, ys),
        }
    }
}

fn two_vertices() -> Vec<String> {
    vec!["1".to_string(), "2".to_string()]
}

fn build(raw: RawPresentation) -> QuiverPresentation {
    validate(&raw).expect("family constructors produce valid presentations")
}

/// `B(x, y)`: arrows `a.p: 1 → 2` and `b.q: 2 → 1`, with every `b.q·a.p` zero.
pub fn build_b(x: u32, y: u32) -> QuiverPresentation {
    let alphas: Vec<String> = (1..=x).map(|p| format!("a.{p}")).collect();
    let betas: Vec<String> = (1..=y).map(|q| format!("b.{q}")).collect();
    let mut arrows: Vec<ArrowDecl> = alphas.iter().map(|l| ArrowDecl::new(l, "1", "2")).collect();
    arrows.extend(betas.iter().map(|l| ArrowDecl::new(l, "2", "1")));
    let relations = betas
        .iter()
        .flat_map(|b| alphas.iter().map(move |a| (b.clone(), a.clone())))
        .collect();
    build(RawPresentation {
        vertices: two_vertices(),
        arrows,
        relations,
    })
}

/// Graded Kronecker algebra: one arrow `1 → 2` per entry of `degrees`, no relations.
pub fn build_lambda(degrees: &[i64]) -> QuiverPresentation {
    let arrows = degrees
        .iter()
        .enumerate()
        .map(|(i, &d)| ArrowDecl::new(format!("k.{}", i + 1), "1", "2").with_degree(d))
        .collect();
    build(RawPresentation {
        vertices: two_vertices(),
        arrows,
        relations: Vec::new(),
    })
}

/// The graded Kronecker algebra derived equivalent to `B(x, y)`: `y` arrows in degree 0 and
/// `x` arrows in degree 1.
pub fn lambda_for_b(x: u32, y: u32) -> Result<QuiverPresentation, FamilyError> {
    if x == 0 && y == 0 {
        return Err(FamilyError::Degenerate);
    }
    Ok(build_lambda(&lambda_degrees_for_b(x, y)))
}

pub fn lambda_degrees_for_b(x: u32, y: u32) -> Vec<i64> {
    let mut degrees = vec![0; y as usize];
    degrees.extend(std::iter::repeat_n(1, x as usize));
    degrees
}

fn check_sequence(name: &'static str, seq: &[u64], needed: usize) -> Result<(), FamilyError> {
    if seq.len() < needed {
        return Err(FamilyError::SequenceTooShort {
            name,
            needed,
            got: seq.len(),
        });
    }
    if let Some(position) = seq.iter().position(|&v| v == 0) {
        return Err(FamilyError::NonPositiveEntry { name, position });
    }
    Ok(())
}

/// Number of `α` batches (`⌊(n+1)/2⌋`) and `β` batches (`⌊n/2⌋`) of `A_n`.
pub fn an_batches(n: usize) -> (usize, usize) {
    (n.div_ceil(2), n / 2)
}

/// `A_n(x̄, ȳ)`. Arrows are declared batch by batch in construction order
/// (`a.1.*`, `b.1.*`, `a.2.*`, ...), so `A_{n-1}` is a sub-presentation of `A_n`.
pub fn build_an(n: usize, xs: &[u64], ys: &[u64]) -> Result<QuiverPresentation, FamilyError> {
    let (alpha_batches, beta_batches) = an_batches(n);
    check_sequence("x", xs, alpha_batches)?;
    check_sequence("y", ys, beta_batches)?;
    let alpha = |i: usize, j: u64| format!("a.{i}.{j}");
    let beta = |i: usize, j: u64| format!("b.{i}.{j}");
    let mut arrows = Vec::new();
    for step in 1..=n {
        let i = step.div_ceil(2);
        if step % 2 == 1 {
            arrows.extend((1..=xs[i - 1]).map(|j| ArrowDecl::new(alpha(i, j), "1", "2")));
        } else {
            arrows.extend((1..=ys[i - 1]).map(|j| ArrowDecl::new(beta(i, j), "2", "1")));
        }
    }
    let mut relations = Vec::new();
    // α_{i,j}·β_{i',j'} for i' < i
    for i in 1..=alpha_batches {
        for j in 1..=xs[i - 1] {
            for ip in 1..i.min(beta_batches + 1) {
                for jp in 1..=ys[ip - 1] {
                    relations.push((alpha(i, j), beta(ip, jp)));
                }
            }
        }
    }
    // β_{i',j'}·α_{i,j} for i ≤ i'
    for ip in 1..=beta_batches {
        for jp in 1..=ys[ip - 1] {
            for i in 1..=ip.min(alpha_batches) {
                for j in 1..=xs[i - 1] {
                    relations.push((beta(ip, jp), alpha(i, j)));
                }
            }
        }
    }
    Ok(build(RawPresentation {
        vertices: two_vertices(),
        arrows,
        relations,
    }))
}

/// Generalized Fibonacci numbers `F_0, ..., F_N` of a pair of sequences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibonacciSeq {
    pub xs: Vec<u64>,
    pub ys: Vec<u64>,
    pub values: Vec<BigUint>,
}

impl FibonacciSeq {
    pub fn get(&self, k: usize) -> &BigUint {
        &self.values[k]
    }

    pub fn last(&self) -> &BigUint {
        self.values.last().expect("F_0 is always present")
    }
}

/// Entries of `x̄` and `ȳ` needed for `F_N`: `⌊N/2⌋` and `⌊(N-1)/2⌋`.
pub fn fibonacci_requirements(n: usize) -> (usize, usize) {
    (n / 2, n.saturating_sub(1) / 2)
}

/// `F_0 = 0`, `F_1 = 1`, `F_{2m} = F_{2m-2} + F_{2m-1} x_m`, `F_{2m+1} = F_{2m-1} + F_{2m} y_m`.
pub fn fibonacci(xs: &[u64], ys: &[u64], n: usize) -> Result<FibonacciSeq, FamilyError> {
    let (need_x, need_y) = fibonacci_requirements(n);
    check_sequence("x", &xs[..need_x.min(xs.len())], need_x)?;
    check_sequence("y", &ys[..need_y.min(ys.len())], need_y)?;
    let mut values: Vec<BigUint> = vec![BigUint::zero(), BigUint::one()];
    for k in 2..=n {
        let m = k / 2;
        let next = if k % 2 == 0 {
            &values[k - 2] + &values[k - 1] * xs[m - 1]
        } else {
            &values[k - 2] + &values[k - 1] * ys[m - 1]
        };
        values.push(next);
    }
    values.truncate(n + 1);
    Ok(FibonacciSeq {
        xs: xs.to_vec(),
        ys: ys.to_vec(),
        values,
    })
}

/// `F_k(x̄, ȳ)` for a single index.
pub fn fibonacci_value(xs: &[u64], ys: &[u64], k: usize) -> Result<BigUint, FamilyError> {
    Ok(fibonacci(xs, ys, k)?.last().clone())
}

/// Cartan matrix of `A_n(x̄, ȳ)` from the generalized Fibonacci numbers:
///
/// ```text
/// C_{2m}   = [[F_{2m-1}(ȳ, Sx̄), F_{2m}(ȳ, Sx̄)], [F_{2m}(x̄, ȳ),   F_{2m+1}(x̄, ȳ)]]
/// C_{2m+1} = [[F_{2m+1}(ȳ, Sx̄), F_{2m}(ȳ, Sx̄)], [F_{2m+2}(x̄, ȳ), F_{2m+1}(x̄, ȳ)]]
/// ```
pub fn fibonacci_cartan(
    n: usize,
    xs: &[u64],
    ys: &[u64],
) -> Result<[[BigUint; 2]; 2], FamilyError> {
    let (alpha_batches, beta_batches) = an_batches(n);
    check_sequence("x", xs, alpha_batches)?;
    check_sequence("y", ys, beta_batches)?;
    let shifted: Vec<u64> = xs.iter().skip(1).copied().collect();
    let f = |k: usize| fibonacci_value(xs, ys, k);
    let g = |k: usize| fibonacci_value(ys, &shifted, k);
    let m = n / 2;
    if n.is_multiple_of(2) {
        if m == 0 {
            return Ok([
                [BigUint::one(), BigUint::zero()],
                [BigUint::zero(), BigUint::one()],
            ]);
        }
        Ok([[g(2 * m - 1)?, g(2 * m)?], [f(2 * m)?, f(2 * m + 1)?]])
    } else {
        Ok([[g(2 * m + 1)?, g(2 * m)?], [f(2 * m + 2)?, f(2 * m + 1)?]])
    }
}

/// The elementary factor `E_n` with `C_n = C_{n-1} · E_n` for `n ≥ 1`:
/// `[[1, 0], [x_{m+1}, 1]]` for `n = 2m + 1` and `[[1, y_m], [0, 1]]` for `n = 2m`.
pub fn cartan_step_factor(n: usize, xs: &[u64], ys: &[u64]) -> [[u64; 2]; 2] {
    assert!(n >= 1, "the step factor starts at n = 1");
    if n % 2 == 1 {
        [[1, 0], [xs[n.div_ceil(2) - 1], 1]]
    } else {
        [[1, ys[n / 2 - 1]], [0, 1]]
    }
}
