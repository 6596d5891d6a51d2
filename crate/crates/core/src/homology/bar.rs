//! Hochschild cohomology from the normalized bar complex relative to the vertex span `E`.
//!
//! With `r` the arrow ideal, `C^p = Hom_{E-E}(r^{⊗_E p}, A)`. A basis of `C^p` is given by pairs
//! `(a_1 ⊗ ⋯ ⊗ a_p, w)`: a tuple of nontrivial basis paths with `s(a_i) = t(a_{i+1})` and a basis
//! path `w` from `s(a_p)` to `t(a_1)`. The differential is the usual alternating sum
//!
//! ```text
//! (df)(a_1, ..., a_{p+1}) = a_1 f(a_2, ..., a_{p+1})
//!                         + Σ_i (−1)^i f(..., a_i a_{i+1}, ...)
//!                         + (−1)^{p+1} f(a_1, ..., a_p) a_{p+1}.
//! ```
//!
//! Nothing here uses the quadratic dual. Since `A` is monomial, the differential preserves the
//! multidegree `mdeg(w) − Σ mdeg(a_i) ∈ Z^{Q_1}`, and ranks are computed block by block.

use std::collections::HashMap;

use super::{CochainComplex, HHProfile, HomologyError, Method};
use crate::algebra::{enumerate_paths, Path, PathBasis, QuiverPresentation};
use crate::linalg::fraction_free::integer_rank;
use crate::linalg::{Matrix, SparseRow};
use crate::Rational;

/// Default cap on the dimension of any cochain space the oracle is allowed to build.
pub const DEFAULT_MAX_DIM: usize = 200_000;

/// Precomputed path data in terms of basis ids.
struct PathTables {
    len: Vec<usize>,
    source: Vec<usize>,
    target: Vec<usize>,
    /// `head[w][k]`: the subpath made of the first `k` acting arrows of `w`.
    head: Vec<Vec<u32>>,
    /// `tail[w][k]`: the subpath made of the last `k` acting arrows of `w`.
    tail: Vec<Vec<u32>>,
    /// `product[later][earlier]` for nontrivial paths, `u32::MAX` when zero.
    product: Vec<Vec<u32>>,
    /// Position of `w` among the basis paths parallel to it.
    parallel_pos: Vec<usize>,
    mdeg: Vec<Vec<i16>>,
    nontrivial: Vec<u32>,
}

const ZERO: u32 = u32::MAX;

impl PathTables {
    fn new(presentation: &QuiverPresentation, basis: &PathBasis) -> Self {
        let paths = basis.paths();
        let id = |p: &Path| {
            basis
                .index_of(p)
                .expect("subpaths of allowed paths are allowed") as u32
        };
        let mut head = Vec::with_capacity(paths.len());
        let mut tail = Vec::with_capacity(paths.len());
        for p in paths {
            let arrows = p.arrows();
            let l = arrows.len();
            let h: Vec<u32> = (0..=l)
                .map(|k| match k {
                    0 => id(&Path::trivial(p.source())),
                    _ => id(&Path::from_arrows(presentation, &arrows[..k]).expect("subpath")),
                })
                .collect();
            let t: Vec<u32> = (0..=l)
                .map(|k| match k {
                    0 => id(&Path::trivial(p.target())),
                    _ => id(&Path::from_arrows(presentation, &arrows[l - k..]).expect("subpath")),
                })
                .collect();
            head.push(h);
            tail.push(t);
        }
        let n = paths.len();
        let nontrivial: Vec<u32> = (0..n)
            .filter(|&i| !paths[i].is_trivial())
            .map(|i| i as u32)
            .collect();
        let mut product = vec![vec![ZERO; n]; n];
        for &later in &nontrivial {
            for &earlier in &nontrivial {
                if let Some(v) = basis.product(presentation, later as usize, earlier as usize) {
                    product[later as usize][earlier as usize] = v as u32;
                }
            }
        }
        let mut parallel_pos = vec![0; n];
        for s in 0..basis.vertex_count() {
            for t in 0..basis.vertex_count() {
                for (k, &w) in basis.parallel(s, t).iter().enumerate() {
                    parallel_pos[w] = k;
                }
            }
        }
        let arrow_count = presentation.arrows().len();
        PathTables {
            len: paths.iter().map(Path::len).collect(),
            source: paths.iter().map(Path::source).collect(),
            target: paths.iter().map(Path::target).collect(),
            head,
            tail,
            product,
            parallel_pos,
            mdeg: paths
                .iter()
                .map(|p| {
                    p.arrow_counts(arrow_count)
                        .into_iter()
                        .map(|c| c as i16)
                        .collect()
                })
                .collect(),
            nontrivial,
        }
    }
}

/// The tuples `(a_1, ..., a_p)` of one cochain degree and the slot layout of `C^p`.
struct Level {
    p: usize,
    /// Flattened tuples, `p` entries each; for `p = 0` one empty tuple per vertex.
    flat: Vec<u32>,
    source: Vec<usize>,
    target: Vec<usize>,
    index: HashMap<Vec<u32>, usize>,
    offsets: Vec<usize>,
    dim: usize,
}

impl Level {
    fn count(&self) -> usize {
        self.source.len()
    }

    fn tuple(&self, k: usize) -> &[u32] {
        &self.flat[k * self.p..(k + 1) * self.p]
    }

    fn slot(&self, tables: &PathTables, k: usize, w: u32) -> usize {
        self.offsets[k] + tables.parallel_pos[w as usize]
    }

    fn lookup(&self, tuple: &[u32], vertex_if_empty: usize) -> usize {
        if self.p == 0 {
            vertex_if_empty
        } else {
            self.index[tuple]
        }
    }
}

fn build_level(
    basis: &PathBasis,
    tables: &PathTables,
    previous: Option<&Level>,
    vertex_count: usize,
) -> Level {
    let (p, flat, source, target) = match previous {
        None => (
            0,
            Vec::new(),
            (0..vertex_count).collect(),
            (0..vertex_count).collect(),
        ),
        Some(prev) => {
            let p = prev.p + 1;
            let mut flat = Vec::new();
            let mut source = Vec::new();
            let mut target = Vec::new();
            for k in 0..prev.count() {
                for &u in &tables.nontrivial {
                    if tables.target[u as usize] == prev.source[k] {
                        flat.extend_from_slice(prev.tuple(k));
                        flat.push(u);
                        source.push(tables.source[u as usize]);
                        target.push(prev.target[k]);
                    }
                }
            }
            (p, flat, source, target)
        }
    };
    let mut level = Level {
        p,
        flat,
        source,
        target,
        index: HashMap::new(),
        offsets: Vec::new(),
        dim: 0,
    };
    if p > 0 {
        level.index = (0..level.count())
            .map(|k| (level.tuple(k).to_vec(), k))
            .collect();
    }
    let mut dim = 0;
    for k in 0..level.count() {
        level.offsets.push(dim);
        dim += basis.parallel(level.source[k], level.target[k]).len();
    }
    level.dim = dim;
    level
}

/// Dimensions of `C^0, ..., C^{p_max}` without building them.
pub fn bar_cochain_dims(
    presentation: &QuiverPresentation,
    p_max: usize,
) -> Result<Vec<u128>, HomologyError> {
    let basis = enumerate_paths(presentation)?;
    Ok(dims_from_counts(&basis, p_max))
}

fn dims_from_counts(basis: &PathBasis, p_max: usize) -> Vec<u128> {
    let n = basis.vertex_count();
    // one[s][t]: nontrivial paths from s to t; tuples[s][t]: p-tuples from s to t
    let one: Vec<Vec<u128>> = (0..n)
        .map(|s| {
            (0..n)
                .map(|t| {
                    basis
                        .parallel(s, t)
                        .iter()
                        .filter(|&&u| !basis.path(u).is_trivial())
                        .count() as u128
                })
                .collect()
        })
        .collect();
    let mut tuples: Vec<Vec<u128>> = (0..n)
        .map(|s| (0..n).map(|t| u128::from(s == t)).collect())
        .collect();
    let mut out = Vec::with_capacity(p_max + 1);
    for p in 0..=p_max {
        if p > 0 {
            // a new first-acting path u: s → m followed by a tuple m → t
            tuples = (0..n)
                .map(|s| {
                    (0..n)
                        .map(|t| {
                            (0..n)
                                .map(|m| one[s][m].saturating_mul(tuples[m][t]))
                                .fold(0u128, u128::saturating_add)
                        })
                        .collect()
                })
                .collect();
        }
        let dim = (0..n)
            .flat_map(|s| (0..n).map(move |t| (s, t)))
            .map(|(s, t)| tuples[s][t].saturating_mul(basis.parallel(s, t).len() as u128))
            .fold(0u128, u128::saturating_add);
        out.push(dim);
    }
    out
}

/// `dim HH^p` for `0 ≤ p ≤ p_max` from the relative bar complex. Fails with
/// [`HomologyError::SizeLimit`] before allocating anything if some `C^p` with `p ≤ p_max + 1`
/// exceeds `max_dim`.
pub fn hh_bar_oracle(
    presentation: &QuiverPresentation,
    p_max: usize,
    max_dim: usize,
) -> Result<HHProfile, HomologyError> {
    let Setup {
        basis,
        tables,
        levels,
        arrow_count,
    } = Setup::new(presentation, p_max, max_dim)?;
    let dims = dims_from_counts(&basis, p_max + 1);
    debug_assert!(levels.iter().zip(&dims).all(|(l, &d)| l.dim as u128 == d));
    let ranks: Vec<usize> = (0..=p_max)
        .map(|p| differential_rank(&basis, &tables, &levels[p], &levels[p + 1], arrow_count))
        .collect();
    let mut profile = HHProfile::new(Method::Bar);
    for p in 0..=p_max {
        let incoming = if p > 0 { ranks[p - 1] } else { 0 };
        profile.add(p as i64, (levels[p].dim - ranks[p] - incoming) as u64);
    }
    Ok(profile)
}

fn multidegree(tables: &PathTables, tuple: &[u32], arrow_count: usize) -> Vec<i16> {
    let mut m = vec![0i16; arrow_count];
    for &u in tuple {
        for (a, c) in m.iter_mut().zip(&tables.mdeg[u as usize]) {
            *a += c;
        }
    }
    m
}

fn block_key(tables: &PathTables, w: u32, tuple_mdeg: &[i16]) -> Vec<i16> {
    tables.mdeg[w as usize]
        .iter()
        .zip(tuple_mdeg)
        .map(|(a, b)| a - b)
        .collect()
}

/// Calls `sink(key, row)` for every row of `d^p: C^p → C^{p+1}`, where `key` is the block of the
/// row and `row` lists `(slot of C^p, coefficient)`, sorted and without zeros.
fn for_each_row(
    basis: &PathBasis,
    tables: &PathTables,
    from: &Level,
    to: &Level,
    arrow_count: usize,
    mut sink: impl FnMut(usize, &[i16], &[(usize, i64)]),
) {
    let p = from.p;
    let mut scratch: Vec<u32> = Vec::with_capacity(p);
    for k in 0..to.count() {
        let a = to.tuple(k);
        let m = multidegree(tables, a, arrow_count);
        let a_first = a[0] as usize;
        let a_last = a[p] as usize;
        // the tuples reached by the outer terms and by each inner product do not depend on w'
        let outer_left = from.lookup(&a[1..], tables.source[a_first]);
        let outer_right = from.lookup(&a[..p], tables.target[a_last]);
        let mut inner: Vec<(usize, i64)> = Vec::with_capacity(p);
        for i in 0..p {
            let v = tables.product[a[i] as usize][a[i + 1] as usize];
            if v != ZERO {
                scratch.clear();
                scratch.extend_from_slice(&a[..i]);
                scratch.push(v);
                scratch.extend_from_slice(&a[i + 2..]);
                let sign = if (i + 1) % 2 == 0 { 1 } else { -1 };
                inner.push((from.index[scratch.as_slice()], sign));
            }
        }
        let right_sign = if (p + 1).is_multiple_of(2) { 1 } else { -1 };
        for &w_prime in basis.parallel(to.source[k], to.target[k]) {
            let key = block_key(tables, w_prime as u32, &m);
            let wl = tables.len[w_prime];
            let mut row: Vec<(usize, i64)> = Vec::new();
            // a_1 · f(a_2, ..., a_{p+1}): w' = a_1 ∘ w
            let l1 = tables.len[a_first];
            if wl >= l1 && tables.tail[w_prime][l1] as usize == a_first {
                let w = tables.head[w_prime][wl - l1];
                row.push((from.slot(tables, outer_left, w), 1));
            }
            for &(t, sign) in &inner {
                row.push((from.slot(tables, t, w_prime as u32), sign));
            }
            // f(a_1, ..., a_p) · a_{p+1}: w' = w ∘ a_{p+1}
            let lp = tables.len[a_last];
            if wl >= lp && tables.head[w_prime][lp] as usize == a_last {
                let w = tables.tail[w_prime][wl - lp];
                row.push((from.slot(tables, outer_right, w), right_sign));
            }
            row.sort_unstable_by_key(|e| e.0);
            let mut merged: Vec<(usize, i64)> = Vec::with_capacity(row.len());
            for (c, v) in row {
                match merged.last_mut() {
                    Some(last) if last.0 == c => last.1 += v,
                    _ => merged.push((c, v)),
                }
            }
            merged.retain(|e| e.1 != 0);
            sink(to.slot(tables, k, w_prime as u32), &key, &merged);
        }
    }
}

/// Rank of `d^p: C^p → C^{p+1}`, computed separately on each multidegree block.
fn differential_rank(
    basis: &PathBasis,
    tables: &PathTables,
    from: &Level,
    to: &Level,
    arrow_count: usize,
) -> usize {
    // assign every column of C^p to its block
    let mut blocks: HashMap<Vec<i16>, usize> = HashMap::new();
    let mut block_cols: Vec<usize> = Vec::new();
    let mut local = vec![0usize; from.dim];
    for k in 0..from.count() {
        let m = multidegree(tables, from.tuple(k), arrow_count);
        for &w in basis.parallel(from.source[k], from.target[k]) {
            let key = block_key(tables, w as u32, &m);
            let b = *blocks.entry(key).or_insert_with(|| {
                block_cols.push(0);
                block_cols.len() - 1
            });
            local[from.slot(tables, k, w as u32)] = block_cols[b];
            block_cols[b] += 1;
        }
    }
    let mut block_rows: Vec<RowArena> =
        (0..block_cols.len()).map(|_| RowArena::default()).collect();
    let mut mapped: Vec<(usize, i64)> = Vec::new();
    for_each_row(basis, tables, from, to, arrow_count, |_, key, row| {
        if row.is_empty() {
            return;
        }
        let b = blocks[key];
        mapped.clear();
        mapped.extend(row.iter().map(|&(c, v)| (local[c], v)));
        mapped.sort_unstable_by_key(|e| e.0);
        block_rows[b].push(&mapped);
    });
    block_rows
        .iter()
        .zip(&block_cols)
        .map(|(rows, &cols)| integer_rank(&rows.rows(), cols))
        .sum()
}

/// The bar cochain complex `C^0 → ⋯ → C^{p_max+1}` itself, with full differentials. Meant for
/// small algebras (checking `d² = 0`); fails like [`hh_bar_oracle`] above the cap.
pub fn bar_cochain_complex(
    presentation: &QuiverPresentation,
    p_max: usize,
    max_dim: usize,
) -> Result<CochainComplex<Rational>, HomologyError> {
    let Setup {
        basis,
        tables,
        levels,
        arrow_count,
    } = Setup::new(presentation, p_max, max_dim)?;
    let differentials = (0..=p_max)
        .map(|p| {
            let mut rows: Vec<SparseRow<Rational>> = vec![Vec::new(); levels[p + 1].dim];
            for_each_row(
                &basis,
                &tables,
                &levels[p],
                &levels[p + 1],
                arrow_count,
                |slot, _, row| {
                    rows[slot] = row
                        .iter()
                        .map(|&(c, v)| (c, Rational::from_integer(v.into())))
                        .collect();
                },
            );
            Matrix::from_sparse_rows(levels[p + 1].dim, levels[p].dim, rows)
        })
        .collect();
    Ok(CochainComplex::new(
        0,
        levels.iter().map(|l| l.dim).collect(),
        differentials,
    ))
}

/// Everything the bar computations share: paths, lookup tables and `C^0, ..., C^{p_max+1}`.
struct Setup {
    basis: PathBasis,
    tables: PathTables,
    levels: Vec<Level>,
    arrow_count: usize,
}

impl Setup {
    fn new(
        presentation: &QuiverPresentation,
        p_max: usize,
        max_dim: usize,
    ) -> Result<Self, HomologyError> {
        if let Some(a) = presentation.arrows().iter().find(|a| a.degree != 0) {
            return Err(HomologyError::GradedInput(a.label.clone()));
        }
        let basis = enumerate_paths(presentation)?;
        let dims = dims_from_counts(&basis, p_max + 1);
        if let Some((p, &dim)) = dims.iter().enumerate().find(|(_, &d)| d > max_dim as u128) {
            return Err(HomologyError::SizeLimit {
                p,
                dim,
                cap: max_dim,
            });
        }
        let tables = PathTables::new(presentation, &basis);
        let mut levels = vec![build_level(&basis, &tables, None, basis.vertex_count())];
        for _ in 0..=p_max {
            let next = build_level(&basis, &tables, levels.last(), basis.vertex_count());
            levels.push(next);
        }
        Ok(Setup {
            basis,
            tables,
            levels,
            arrow_count: presentation.arrows().len(),
        })
    }

    fn rows(&self, p: usize, sink: impl FnMut(usize, &[i16], &[(usize, i64)])) {
        for_each_row(
            &self.basis,
            &self.tables,
            &self.levels[p],
            &self.levels[p + 1],
            self.arrow_count,
            sink,
        );
    }
}

/// Whether `d^p d^{p-1} = 0` for `1 ≤ p ≤ p_max`, in integer arithmetic and without building
/// rational matrices, so it reaches the same sizes as [`hh_bar_oracle`].
pub fn bar_differentials_square_to_zero(
    presentation: &QuiverPresentation,
    p_max: usize,
    max_dim: usize,
) -> Result<bool, HomologyError> {
    let setup = Setup::new(presentation, p_max, max_dim)?;
    let mut previous = RowArena::default();
    let mut by_slot: Vec<u32> = Vec::new();
    for p in 0..=p_max {
        let mut current = RowArena::default();
        let mut slots: Vec<u32> = vec![u32::MAX; setup.levels[p + 1].dim];
        let mut ok = true;
        let mut acc: HashMap<usize, i64> = HashMap::new();
        setup.rows(p, |slot, _, row| {
            if p > 0 && ok {
                acc.clear();
                for &(c, v) in row {
                    let k = by_slot[c];
                    if k == u32::MAX {
                        continue;
                    }
                    for (c2, v2) in previous.row(k as usize) {
                        *acc.entry(c2).or_insert(0) += v * v2;
                    }
                }
                ok = acc.values().all(|&v| v == 0);
            }
            if p < p_max {
                slots[slot] = current.starts.len() as u32;
                current.push(row);
            }
        });
        if !ok {
            return Ok(false);
        }
        previous = current;
        by_slot = slots;
    }
    Ok(true)
}

/// Compact row storage: the bar differential has millions of rows with two or three entries.
#[derive(Default)]
struct RowArena {
    starts: Vec<u32>,
    cols: Vec<u32>,
    vals: Vec<i32>,
}

impl RowArena {
    fn push(&mut self, row: &[(usize, i64)]) {
        self.starts.push(self.cols.len() as u32);
        for &(c, v) in row {
            self.cols.push(c as u32);
            self.vals.push(v as i32);
        }
    }

    fn row(&self, k: usize) -> impl Iterator<Item = (usize, i64)> + '_ {
        let end = self
            .starts
            .get(k + 1)
            .map_or(self.cols.len(), |&e| e as usize);
        (self.starts[k] as usize..end).map(|i| (self.cols[i] as usize, i64::from(self.vals[i])))
    }

    fn rows(&self) -> Vec<Vec<(usize, i64)>> {
        (0..self.starts.len())
            .map(|k| self.row(k).collect())
            .collect()
    }
}
