//! Graded pieces of `H*_T(X)` and `H*_S(X)` from GKM admissibility.
//!
//! Degrees here are polynomial degrees `d`; the cohomological degree is
//! `2d`. A degree-`d` class of `H*_T(X)` is a tuple of homogeneous
//! polynomials, one per vertex, flattened vertex-major over the graded
//! lexicographic monomial basis. A degree-`d` class of `H*_S(X)` is a vector
//! of rationals `c_v` standing for the tuple `(c_v ν^d)`.

use std::collections::HashMap;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::Root;
use crate::linalg::{rank, rank_and_nullspace, LinearSolutionSpace};
use crate::poly::{monomials, Monomial, RationalPoly};
use crate::rational::{q, Q};
use crate::schubert::MomentGraph;

/// Matrix of `m ↦ m mod γ` on degree-`d` monomials: `out[r][c]` is the
/// coefficient of monomial `r` in the remainder of monomial `c`.
fn remainder_matrix(label: &Root, monos: &[Monomial], nvars: usize) -> Vec<Vec<Q>> {
    let gamma = RationalPoly::linear_int(label.coeffs());
    let mut out = vec![vec![Q::zero(); monos.len()]; monos.len()];
    for (c, m) in monos.iter().enumerate() {
        let rem = RationalPoly::monomial(nvars, m.clone(), q(1))
            .linear_remainder(&gamma)
            .expect("roots are nonzero linear forms");
        for (r, target) in monos.iter().enumerate() {
            out[r][c] = rem.coefficient(target);
        }
    }
    out
}

/// All degree-`d` tuples admissible for `g`: every edge difference
/// `p_u - p_v` is divisible by the edge label.
pub fn admissible_space(g: &MomentGraph, d: u32) -> LinearSolutionSpace {
    let n = g.rank();
    let monos = monomials(n, d);
    let m = monos.len();
    let width = g.vertices().len() * m;
    let mut cache: HashMap<Root, Vec<Vec<Q>>> = HashMap::new();
    let mut rows = Vec::new();
    for e in g.edges() {
        let rem = cache
            .entry(e.label.clone())
            .or_insert_with(|| remainder_matrix(&e.label, &monos, n));
        for r in 0..m {
            if rem[r].iter().all(Zero::is_zero) {
                continue;
            }
            let mut row = vec![Q::zero(); width];
            for c in 0..m {
                row[e.u * m + c] = rem[r][c].clone();
                row[e.v * m + c] = -rem[r][c].clone();
            }
            rows.push(row);
        }
    }
    rank_and_nullspace(&rows, width).1
}

#[derive(Debug, Clone)]
pub struct HtPiece {
    pub degree: u32,
    pub monomials: Vec<Monomial>,
    pub space: LinearSolutionSpace,
}

/// Degreewise bases of `H*_T(X)`.
#[derive(Debug, Clone)]
pub struct GradedBasisHT {
    rank: usize,
    vertex_count: usize,
    pieces: Vec<HtPiece>,
}

impl GradedBasisHT {
    pub fn pieces(&self) -> &[HtPiece] {
        &self.pieces
    }

    pub fn piece(&self, d: u32) -> Option<&HtPiece> {
        self.pieces.get(d as usize)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.pieces.iter().map(|p| p.space.dim()).collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// The basis of degree `d` as polynomial tuples.
    pub fn tuples(&self, d: u32) -> Vec<Vec<RationalPoly>> {
        let Some(piece) = self.piece(d) else { return Vec::new() };
        let m = piece.monomials.len();
        piece
            .space
            .basis()
            .iter()
            .map(|v| {
                (0..self.vertex_count)
                    .map(|i| RationalPoly::from_coefficients(self.rank, &piece.monomials, &v[i * m..(i + 1) * m]))
                    .collect()
            })
            .collect()
    }
}

pub fn ht_basis(g: &MomentGraph, dmax: u32) -> GradedBasisHT {
    let pieces = (0..=dmax)
        .map(|d| HtPiece { degree: d, monomials: monomials(g.rank(), d), space: admissible_space(g, d) })
        .collect();
    GradedBasisHT { rank: g.rank(), vertex_count: g.vertices().len(), pieces }
}

/// Degreewise bases of `H*_S(X)` as vertex-coefficient vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedBasisHS {
    pieces: Vec<LinearSolutionSpace>,
}

impl GradedBasisHS {
    pub fn pieces(&self) -> &[LinearSolutionSpace] {
        &self.pieces
    }

    pub fn piece(&self, d: u32) -> Option<&LinearSolutionSpace> {
        self.pieces.get(d as usize)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.pieces.iter().map(LinearSolutionSpace::dim).collect()
    }

    pub fn degree_bound(&self) -> u32 {
        self.pieces.len().saturating_sub(1) as u32
    }
}

fn check_labels_regular(g: &MomentGraph, a_vals: &[i64]) -> Result<()> {
    if a_vals.len() != g.rank() {
        return Err(Error::InvalidInput(format!(
            "a has {} entries but the rank is {}",
            a_vals.len(),
            g.rank()
        )));
    }
    if let Some(e) = g.edges().iter().find(|e| e.label.value_at(a_vals) == 0) {
        return Err(Error::AssumptionFailed {
            assumption: "1",
            detail: format!("a is not regular: the edge label {} vanishes at a", e.label),
        });
    }
    Ok(())
}

/// Projects `H*_T` onto `H*_S` by `α_j ↦ c_j ν`.
pub fn project_to_hs(ht: &GradedBasisHT, a_vals: &[i64]) -> GradedBasisHS {
    let point: Vec<Q> = a_vals.iter().map(|&c| q(c)).collect();
    let pieces = ht
        .pieces
        .iter()
        .map(|piece| {
            let values: Vec<Q> = piece
                .monomials
                .iter()
                .map(|m| RationalPoly::monomial(ht.rank, m.clone(), q(1)).eval(&point))
                .collect();
            let k = values.len();
            let vectors: Vec<Vec<Q>> = piece
                .space
                .basis()
                .iter()
                .map(|v| {
                    (0..ht.vertex_count)
                        .map(|i| v[i * k..(i + 1) * k].iter().zip(&values).map(|(x, y)| x * y).sum())
                        .collect()
                })
                .collect();
            LinearSolutionSpace::span(ht.vertex_count, &vectors)
        })
        .collect();
    GradedBasisHS { pieces }
}

pub fn hs_basis(g: &MomentGraph, a_vals: &[i64], dmax: u32) -> Result<GradedBasisHS> {
    check_labels_regular(g, a_vals)?;
    Ok(project_to_hs(&ht_basis(g, dmax), a_vals))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtensionCheck {
    pub degree: u32,
    /// Rank of the restriction of degree-`d` classes of Γ to Γ_{r0}.
    pub restricted_rank: usize,
    /// Dimension of the degree-`d` admissible space of Γ_{r0}.
    pub target_dim: usize,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Assumption3Report {
    pub degree_bound: u32,
    pub per_degree: Vec<ExtensionCheck>,
}

impl Assumption3Report {
    pub fn passed(&self) -> bool {
        self.per_degree.iter().all(|c| c.passed)
    }

    pub fn summary(&self) -> String {
        let verdict = if self.passed() { "holds" } else { "fails" };
        format!(
            "extension from the truncated graph {verdict}; verified up to cohomological degree {} only",
            2 * self.degree_bound
        )
    }
}

/// Decides, degree by degree up to `dmax`, whether every class admissible
/// on Γ_{r0} extends to a class admissible on Γ.
pub fn check_assumption3(g: &MomentGraph, r0: &Q, dmax: u32) -> Assumption3Report {
    let keep = g.indices_at_or_above(r0);
    let truncated = g.induced(&keep);
    let per_degree = (0..=dmax)
        .map(|d| {
            let m = monomials(g.rank(), d).len();
            let full = admissible_space(g, d);
            let restricted: Vec<Vec<Q>> = full
                .basis()
                .iter()
                .map(|v| keep.iter().flat_map(|&i| v[i * m..(i + 1) * m].iter().cloned()).collect())
                .collect();
            let restricted_rank = rank(&restricted, keep.len() * m);
            let target_dim = admissible_space(&truncated, d).dim();
            ExtensionCheck { degree: d, restricted_rank, target_dim, passed: restricted_rank == target_dim }
        })
        .collect();
    Assumption3Report { degree_bound: dmax, per_degree }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{RootDatum, RootType};
    use crate::poly::is_divisible;
    use crate::schubert::SchubertDatum;

    const C: [i64; 3] = [-2, -1, -4];

    fn example_graph() -> MomentGraph {
        let d = RootDatum::new(RootType::A, 3).unwrap();
        SchubertDatum::from_coordinates(d, &[0, 1, 0], &[3, 1, 2])
            .unwrap()
            .moment_graph(&C)
            .unwrap()
    }

    #[test]
    fn degree_zero_is_constants() {
        let g = example_graph();
        let s = admissible_space(&g, 0);
        assert_eq!(s.dim(), 1);
        assert_eq!(s.basis()[0], vec![q(1); 5]);
    }

    #[test]
    fn single_vertex_degree_two() {
        let g = example_graph().truncate(&q(2));
        assert_eq!(admissible_space(&g, 2).dim(), 6);
    }

    #[test]
    fn example_dimensions() {
        let g = example_graph();
        let ht = ht_basis(&g, 2);
        assert_eq!(ht.dims(), vec![1, 4, 11]);
        let hs = hs_basis(&g, &C, 3).unwrap();
        assert_eq!(hs.dims(), vec![1, 2, 4, 5]);
    }

    #[test]
    fn stored_tuples_are_admissible() {
        let g = example_graph();
        let ht = ht_basis(&g, 2);
        for d in 0..=2 {
            for tuple in ht.tuples(d) {
                for e in g.edges() {
                    let diff = tuple[e.u].clone() - tuple[e.v].clone();
                    let gamma = RationalPoly::linear_int(e.label.coeffs());
                    assert!(is_divisible(&diff, &gamma).unwrap());
                }
            }
        }
    }

    #[test]
    fn removing_edges_never_shrinks() {
        let g = example_graph();
        let fewer = MomentGraph::new(g.rank(), g.vertices().to_vec(), g.edges()[..5].to_vec());
        for d in 0..3 {
            assert!(admissible_space(&fewer, d).dim() >= admissible_space(&g, d).dim());
        }
    }

    #[test]
    fn singular_direction_rejected() {
        let g = example_graph();
        assert!(hs_basis(&g, &[-2, -1, 1], 1).is_err());
        assert!(hs_basis(&g, &[-2, -1], 1).is_err());
    }

    #[test]
    fn assumption3_regimes() {
        let g = example_graph();
        assert!(check_assumption3(&g, &q(2), 4).passed());
        assert!(check_assumption3(&g, &q(0), 4).passed());
        let vacuous = check_assumption3(&g, &q(10), 2);
        assert!(vacuous.passed());
        assert!(vacuous.per_degree.iter().all(|c| c.target_dim == 0));
        assert!(check_assumption3(&g, &q(0), 6).summary().contains("degree 12"));
        // below Φ_a(s1s2λ) the square on s2λ, s1s2λ, s3s2λ, s3s1s2λ has
        // degree-2 classes that do not extend across λ
        let low = check_assumption3(&g, &q(-2), 2);
        assert!(!low.passed());
        assert_eq!((low.per_degree[1].restricted_rank, low.per_degree[1].target_dim), (4, 5));
    }
}
