use std::sync::Arc;

use stratakit::algebra::{count_paths, quadratic_dual, top_dual_degree, DualDegree};
use stratakit::repr::{
    ext_dims, hom_dimension, hom_space, min_resolution, projective_rep, quotient_by_ideal,
    regular_rep, simple_rep, socle, PathAlgebra, Representation,
};
use stratakit::{build_an, build_b, Rational};

type Rep = Representation<Rational>;

fn entries_12(len: usize) -> Vec<Vec<u64>> {
    (0..1usize << len)
        .map(|mask| (0..len).map(|i| 1 + ((mask >> i) & 1) as u64).collect())
        .collect()
}

fn an_corpus(n: usize) -> Vec<(Vec<u64>, Vec<u64>)> {
    let (bx, by) = (n.div_ceil(2), n / 2);
    let mut out = Vec::new();
    for xs in entries_12(bx) {
        for ys in entries_12(by) {
            out.push((xs.clone(), ys));
        }
    }
    out
}

#[test]
fn ext_from_quotient_to_first_projective() {
    for x in 1..=3 {
        for y in 1..=3 {
            let a = PathAlgebra::new(build_b(x, y)).unwrap();
            let quotient: Rep = quotient_by_ideal(&a, &[0]);
            let p1: Rep = projective_rep(&a, 0).unwrap();
            assert_eq!(
                ext_dims(&quotient, &p1, 2).unwrap(),
                vec![y as usize, x as usize, 0],
                "B({x},{y})"
            );
        }
    }
}

#[test]
fn hom_from_projectives_counts_vertex_dimension() {
    let algebras = [
        build_b(2, 1),
        build_b(0, 3),
        build_an(3, &[2, 1], &[1]).unwrap(),
    ];
    for pres in algebras {
        let a = PathAlgebra::new(pres).unwrap();
        let modules: Vec<Rep> = vec![
            regular_rep(&a),
            simple_rep(&a, 0).unwrap(),
            quotient_by_ideal(&a, &[1]),
        ];
        for m in &modules {
            for v in 0..2 {
                let p: Rep = projective_rep(&a, v).unwrap();
                let maps = hom_space(&p, m).unwrap();
                assert_eq!(maps.len(), m.dim_at(v));
                assert!(maps.iter().all(|f| f.is_homomorphism(&p, m)));
            }
        }
    }
}

fn max_simple_resolution_length(a: &Arc<PathAlgebra>, bound: usize) -> usize {
    (0..a.vertex_count())
        .map(|v| {
            let r = min_resolution(&simple_rep::<Rational>(a, v).unwrap(), bound);
            assert!(r.is_complete() && r.is_exact());
            r.length()
        })
        .max()
        .unwrap()
}

#[test]
fn global_dimension_of_b_matches_dual_degree() {
    for x in 0..=3 {
        for y in 0..=3 {
            let pres = build_b(x, y);
            let expected = top_dual_degree(&pres).finite().unwrap();
            let a = PathAlgebra::new(pres).unwrap();
            assert_eq!(max_simple_resolution_length(&a, 4), expected, "B({x},{y})");
        }
    }
}

#[test]
fn global_dimension_of_an_is_n() {
    for n in 0..=6 {
        for (xs, ys) in an_corpus(n) {
            let pres = build_an(n, &xs, &ys).unwrap();
            assert_eq!(top_dual_degree(&pres), DualDegree::Finite(n));
            let a = PathAlgebra::new(pres).unwrap();
            assert_eq!(
                max_simple_resolution_length(&a, n + 1),
                n,
                "n = {n}, {xs:?}, {ys:?}"
            );
        }
    }
}

#[test]
fn yoneda_dimension_matches_dual() {
    for n in 0..=4 {
        for (xs, ys) in an_corpus(n) {
            let pres = build_an(n, &xs, &ys).unwrap();
            let dual_dim = count_paths(&quadratic_dual(&pres)).unwrap();
            let a = PathAlgebra::new(pres).unwrap();
            let s: Rep = simple_rep(&a, 0)
                .unwrap()
                .direct_sum(&simple_rep(&a, 1).unwrap())
                .unwrap();
            let ext = ext_dims(&s, &s, n + 1).unwrap();
            assert_eq!(ext.iter().sum::<usize>(), dual_dim, "n = {n}");
            assert_eq!(ext[0], hom_dimension(&s, &s).unwrap());
        }
    }
}

#[test]
fn socle_of_an_regular_module() {
    for n in 1..=6 {
        for (xs, ys) in an_corpus(n).into_iter().take(4) {
            let a = PathAlgebra::new(build_an(n, &xs, &ys).unwrap()).unwrap();
            let soc = socle(&regular_rep::<Rational>(&a));
            let dims = soc.module.dims().to_vec();
            if n % 2 == 0 {
                assert!(dims[0] == 0 && dims[1] > 0, "n = {n}: {dims:?}");
            } else {
                assert!(dims[1] == 0 && dims[0] > 0, "n = {n}: {dims:?}");
            }
        }
    }
}
