//! End-to-end checks of the reduction pipeline against independent oracles.

use gkm_kirwan::gkm::{hs_basis, ht_basis, project_to_hs};
use gkm_kirwan::kirwan::{kirwan_betti, ring_presentation, BasisIndex};
use gkm_kirwan::lie::{RootDatum, RootType};
use gkm_kirwan::linalg::LinearSolutionSpace;
use gkm_kirwan::poly::monomial_count;
use gkm_kirwan::rational::{q, Q};
use gkm_kirwan::schubert::SchubertDatum;
use num_rational::Rational64;
use proptest::prelude::*;

const C: [i64; 3] = [-2, -1, -4];

fn example() -> SchubertDatum {
    let d = RootDatum::new(RootType::A, 3).unwrap();
    SchubertDatum::from_coordinates(d, &[0, 1, 0], &[3, 1, 2]).unwrap()
}

/// Plain Gaussian elimination over `Rational64`, kept separate from the
/// library's fraction-free routine.
fn oracle_rank(mut rows: Vec<Vec<Rational64>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][col] != Rational64::from(0)) else {
            continue;
        };
        rows.swap(rank, p);
        for r in 0..rows.len() {
            if r != rank {
                let f = rows[r][col] / rows[rank][col];
                for c in 0..ncols {
                    let t = f * rows[rank][c];
                    rows[r][c] -= t;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Degree-d spanning vectors of H*_S(X) for the example, read off the
/// closed-form description with parameters q_1, …, q_5 in R[ν].
fn closed_form_hs(d: i64, a: [i64; 3]) -> Vec<Vec<Rational64>> {
    let [a1, a2, a3] = a;
    let gens: [(i64, [i64; 5]); 5] = [
        (0, [1, 1, 1, 1, 1]),
        (1, [0, a2, a1 + a2, a2 + a3, a1 + a2 + a3]),
        (2, [0, 0, a1 * (a1 + a2), 0, a1 * (a1 + a2 + a3)]),
        (2, [0, 0, 0, a3 * (a2 + a3), a3 * (a1 + a2 + a3)]),
        (3, [0, 0, 0, 0, 1]),
    ];
    gens.iter()
        .filter(|(shift, _)| *shift <= d)
        .map(|(_, v)| v.iter().map(|&x| Rational64::from(x)).collect())
        .collect()
}

/// b_{2d} = rank(restriction below) + rank(restriction above) − dim, since
/// K_± are the kernels of the two restrictions and H*_S embeds in the
/// fixed-point classes.
fn oracle_betti(phi: &[i64], r0: Rational64, dmax: i64) -> Vec<usize> {
    (0..=dmax)
        .map(|d| {
            let span = closed_form_hs(d, C);
            let dim = oracle_rank(span.clone());
            let restrict = |keep: &dyn Fn(i64) -> bool| {
                let rows: Vec<Vec<Rational64>> = span
                    .iter()
                    .map(|v| (0..5).filter(|&i| keep(phi[i])).map(|i| v[i]).collect())
                    .collect();
                if rows.iter().all(Vec::is_empty) {
                    0
                } else {
                    oracle_rank(rows)
                }
            };
            let below = restrict(&|p| Rational64::from(p) < r0);
            let above = restrict(&|p| Rational64::from(p) > r0);
            below + above - dim
        })
        .collect()
}

#[test]
fn hs_matches_closed_form() {
    let g = example().moment_graph(&C).unwrap();
    let hs = hs_basis(&g, &C, 6).unwrap();
    for d in 0..=6 {
        let expected: Vec<Vec<Q>> = closed_form_hs(d, C)
            .into_iter()
            .map(|v| v.into_iter().map(|x| q(*x.numer()) / q(*x.denom())).collect())
            .collect();
        let span = LinearSolutionSpace::span(5, &expected);
        assert_eq!(hs.piece(d as u32).unwrap(), &span, "degree {}", 2 * d);
    }
}

#[test]
fn upper_regime_against_oracle() {
    let phi = [-4, -3, -1, 1, 3];
    assert_eq!(oracle_betti(&phi, Rational64::from(2), 6), vec![1, 1, 1, 0, 0, 0, 0]);
    assert_eq!(kirwan_betti(&example(), &C, &q(2), 6).unwrap(), vec![1, 1, 1, 0, 0, 0, 0]);
}

#[test]
fn lower_regime_regression() {
    let phi = [-4, -3, -1, 1, 3];
    let oracle = oracle_betti(&phi, Rational64::from(0), 6);
    assert_eq!(oracle, vec![1, 2, 1, 0, 0, 0, 0]);
    assert_eq!(kirwan_betti(&example(), &C, &q(0), 6).unwrap(), oracle);

    let p = ring_presentation(&example(), &C, &q(0), 6).unwrap();
    let x = |d, i| BasisIndex { degree: d, index: i };
    assert_eq!(p.basis_cosets[1][1], vec![q(1), q(0), q(-2), q(-4), q(-6)]);
    assert_eq!(p.product(x(1, 0), x(1, 0)), Some(&[q(1)][..]));
    assert_eq!(p.product(x(1, 0), x(1, 1)), Some(&[q(1)][..]));
    assert_eq!(p.product(x(1, 1), x(1, 1)), Some(&[q(-34)][..]));
    assert_eq!(p.truncated_polynomial_height(), None);
}

#[test]
fn presentation_is_commutative_and_associative() {
    for r0 in [q(2), q(0)] {
        let p = ring_presentation(&example(), &C, &r0, 6).unwrap();
        let basis: Vec<BasisIndex> = (0..p.basis_cosets.len())
            .flat_map(|d| (0..p.basis_cosets[d].len()).map(move |i| BasisIndex { degree: d as u32, index: i }))
            .collect();
        // product of a coordinate vector with a basis element
        let times = |coords: &[Q], degree: u32, right: BasisIndex| -> Option<Vec<Q>> {
            let target = (degree + right.degree) as usize;
            let mut out = vec![q(0); *p.betti.get(target)?];
            for (i, c) in coords.iter().enumerate() {
                let prod = p.product(BasisIndex { degree, index: i }, right)?;
                for (o, x) in out.iter_mut().zip(prod) {
                    *o += c * x;
                }
            }
            Some(out)
        };
        for &a in &basis {
            for &b in &basis {
                assert_eq!(p.product(a, b), p.product(b, a));
                for &c in &basis {
                    if a.degree + b.degree + c.degree > p.degree_bound {
                        continue;
                    }
                    let ab = p.product(a, b).unwrap().to_vec();
                    let left = times(&ab, a.degree + b.degree, c);
                    let bc = p.product(b, c).unwrap().to_vec();
                    let right = times(&bc, b.degree + c.degree, a);
                    assert_eq!(left, right, "({a:?}{b:?}){c:?}");
                }
            }
        }
        assert_eq!(p.betti[0], 1);
    }
}

#[test]
fn grassmannian_equivariant_dimensions() {
    // the whole orbit: Poincaré counts of W/W_P convolved with monomials
    let d = RootDatum::new(RootType::A, 3).unwrap();
    let x = SchubertDatum::from_coordinates(d, &[0, 1, 0], &[2, 1, 3, 2]).unwrap();
    let g = x.moment_graph(&C).unwrap();
    let b = [1, 1, 2, 1, 1];
    let dims = ht_basis(&g, 4).dims();
    for (dd, &dim) in dims.iter().enumerate() {
        let expected: usize = (0..=dd).map(|e| b.get(e).copied().unwrap_or(0) * monomial_count(3, (dd - e) as u32)).sum();
        assert_eq!(dim, expected, "degree {}", 2 * dd);
    }
}

#[test]
fn other_classical_types() {
    // B2 with λ = ω1: a quadric of dimension 3, Poincaré (1,1,1,1)
    let b2 = RootDatum::new(RootType::B, 2).unwrap();
    let x = SchubertDatum::from_coordinates(b2.clone(), &[1, 0], &[1, 2, 1]).unwrap();
    assert_eq!(x.poincare_polynomial().unwrap(), vec![1, 1, 1, 1]);
    let a = [-1, -3];
    assert!(x.validate_assumption1(&a).unwrap().passed());
    let g = x.moment_graph(&a).unwrap();
    assert_eq!(hs_basis(&g, &a, 3).unwrap().dims(), vec![1, 2, 3, 4]);
    assert!(g.valency_report(3).is_empty());
    // C3, λ = ω1: CP^5
    let c3 = RootDatum::new(RootType::C, 3).unwrap();
    let orbit = c3.weyl_orbit(&c3.fundamental_weight(0)).unwrap();
    assert_eq!(orbit.len(), 6);
    let top = orbit.last().unwrap().rep.word_one_based();
    let x = SchubertDatum::from_coordinates(c3, &[1, 0, 0], &top).unwrap();
    assert_eq!(x.poincare_polynomial().unwrap(), vec![1; 6]);
    let a = [-1, -2, -5];
    let g = x.moment_graph(&a).unwrap();
    let phi = g.phi_values();
    let r0 = (&phi[2] + &phi[3]) / q(2);
    // a circle quotient of CP^n with k fixed points below the level is a
    // CP^{n-k} bundle over CP^{k-1}, so the Betti numbers sum to k(n+1-k)
    let betti = kirwan_betti(&x, &a, &r0, 5).unwrap();
    assert_eq!(betti, vec![1, 2, 3, 2, 1, 0]);
}

fn arb_invertible() -> impl Strategy<Value = Vec<Vec<i64>>> {
    // unit upper triangular times a permutation-free lower triangular
    proptest::collection::vec(-3i64..4, 16).prop_map(|e| {
        (0..4)
            .map(|i| (0..4).map(|j| if i == j { 1 } else if j > i { e[i * 4 + j] } else { 0 }).collect())
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn hs_independent_of_ht_representatives(m in arb_invertible()) {
        let g = example().moment_graph(&C).unwrap();
        let ht = ht_basis(&g, 2);
        let reference = project_to_hs(&ht, &C);
        let piece = ht.piece(1).unwrap();
        prop_assume!(piece.space.dim() == 4);
        // change of basis of the degree-2 piece by a unimodular matrix
        let basis = piece.space.basis();
        let mixed: Vec<Vec<Q>> = m
            .iter()
            .map(|row| {
                let mut v = vec![q(0); basis[0].len()];
                for (c, b) in row.iter().zip(basis) {
                    for (x, y) in v.iter_mut().zip(b) {
                        *x += q(*c) * y;
                    }
                }
                v
            })
            .collect();
        let respan = LinearSolutionSpace::span(piece.space.ambient_dim(), &mixed);
        prop_assert_eq!(&respan, &piece.space);
        let point: Vec<Q> = C.iter().map(|&c| q(c)).collect();
        let values: Vec<Q> = piece
            .monomials
            .iter()
            .map(|mono| mono.iter().zip(&point).fold(q(1), |acc, (&e, x)| acc * num_traits::pow(x.clone(), e as usize)))
            .collect();
        let projected: Vec<Vec<Q>> = mixed
            .iter()
            .map(|v| (0..5).map(|i| v[i * 3..(i + 1) * 3].iter().zip(&values).map(|(a, b)| a * b).sum()).collect())
            .collect();
        prop_assert_eq!(&LinearSolutionSpace::span(5, &projected), reference.piece(1).unwrap());
    }
}
