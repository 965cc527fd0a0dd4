//! The kernel `K_- + K_+` of the Kirwan map and the quotient ring
//! `H*_S(X) / (K_- + K_+)`, which is the cohomology of the reduced space
//! `X //_λ S(r0)`.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gkm::{hs_basis, GradedBasisHS};
use crate::linalg::{solve_in_span, LinearSolutionSpace};
use crate::rational::{one, Q};
use crate::schubert::{MomentGraph, SchubertDatum};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelPiece {
    pub degree: u32,
    /// Classes vanishing at every vertex with Φ_a < r0.
    pub minus: LinearSolutionSpace,
    /// Classes vanishing at every vertex with Φ_a > r0.
    pub plus: LinearSolutionSpace,
    pub sum: LinearSolutionSpace,
    pub intersection_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelSpaces {
    pub pieces: Vec<KernelPiece>,
}

impl KernelSpaces {
    pub fn piece(&self, d: u32) -> Option<&KernelPiece> {
        self.pieces.get(d as usize)
    }
}

pub fn kernel_spaces(hs: &GradedBasisHS, phi: &[Q], r0: &Q) -> KernelSpaces {
    let below: Vec<usize> = (0..phi.len()).filter(|&i| phi[i] < *r0).collect();
    let above: Vec<usize> = (0..phi.len()).filter(|&i| phi[i] > *r0).collect();
    let pieces = hs
        .pieces()
        .iter()
        .enumerate()
        .map(|(d, space)| {
            let minus = space.vanishing_on(&below);
            let plus = space.vanishing_on(&above);
            let sum = minus.sum(&plus);
            let intersection_dim = minus.intersection(&plus).dim();
            KernelPiece { degree: d as u32, minus, plus, sum, intersection_dim }
        })
        .collect();
    KernelSpaces { pieces }
}

/// Builds the moment graph after checking Assumption 1 and that `r0` is a
/// regular value strictly inside Φ_a(X).
pub fn validated_graph(x: &SchubertDatum, a_vals: &[i64], r0: &Q) -> Result<MomentGraph> {
    let a1 = x.validate_assumption1(a_vals)?;
    if !a1.passed() {
        return Err(Error::AssumptionFailed { assumption: "1", detail: a1.failures().join("; ") });
    }
    let g = x.moment_graph(a_vals)?;
    if let Some(reason) = g.validate_r0(r0).failure {
        return Err(Error::AssumptionFailed { assumption: "3(i)", detail: reason });
    }
    Ok(g)
}

fn betti_from(hs: &GradedBasisHS, kernels: &KernelSpaces) -> Vec<usize> {
    hs.pieces()
        .iter()
        .zip(&kernels.pieces)
        .map(|(space, k)| space.dim() - k.sum.dim())
        .collect()
}

/// Betti numbers `b_0, b_2, …, b_{2 dmax}` of the reduced space.
pub fn kirwan_betti(x: &SchubertDatum, a_vals: &[i64], r0: &Q, dmax: u32) -> Result<Vec<usize>> {
    let g = validated_graph(x, a_vals, r0)?;
    let hs = hs_basis(&g, a_vals, dmax)?;
    let kernels = kernel_spaces(&hs, &g.phi_values(), r0);
    Ok(betti_from(&hs, &kernels))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct BasisIndex {
    pub degree: u32,
    pub index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstant {
    pub left: BasisIndex,
    pub right: BasisIndex,
    /// Coordinates of the product in the basis of degree
    /// `left.degree + right.degree`; `None` past the degree bound.
    pub product: Option<Vec<Q>>,
}

/// Presentation of `H*(X //_λ S(r0))` by basis cosets and structure
/// constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientPresentation {
    pub degree_bound: u32,
    pub betti: Vec<usize>,
    /// Per degree, vertex-coefficient representatives of the basis cosets.
    pub basis_cosets: Vec<Vec<Vec<Q>>>,
    pub structure_constants: Vec<StructureConstant>,
    kernels: Vec<LinearSolutionSpace>,
}

impl QuotientPresentation {
    /// Builds the presentation from `H*_S` and the kernel.
    ///
    /// In each degree the representatives are chosen greedily from the
    /// image of `ν^d · 1` followed by the echelon basis of `H*_S`, keeping
    /// each candidate that is independent modulo the kernel.
    pub fn new(hs: &GradedBasisHS, kernels: &KernelSpaces) -> Result<Self> {
        let betti = betti_from(hs, kernels);
        let mut basis_cosets = Vec::new();
        for (d, (space, k)) in hs.pieces().iter().zip(&kernels.pieces).enumerate() {
            let n = space.ambient_dim();
            let mut spanned = k.sum.clone();
            let mut reps = Vec::new();
            let candidates = std::iter::once(vec![one(); n]).chain(space.basis().iter().cloned());
            for c in candidates {
                if !space.contains(&c) || spanned.contains(&c) {
                    continue;
                }
                spanned = spanned.sum(&LinearSolutionSpace::span(n, std::slice::from_ref(&c)));
                reps.push(c);
            }
            if reps.len() != betti[d] {
                return Err(Error::Inconsistency(format!(
                    "degree {}: found {} coset representatives for Betti number {}",
                    2 * d,
                    reps.len(),
                    betti[d]
                )));
            }
            basis_cosets.push(reps);
        }
        let mut presentation = Self {
            degree_bound: hs.degree_bound(),
            betti,
            basis_cosets,
            structure_constants: Vec::new(),
            kernels: kernels.pieces.iter().map(|k| k.sum.clone()).collect(),
        };
        presentation.structure_constants = presentation.compute_structure_constants()?;
        Ok(presentation)
    }

    fn indices(&self) -> Vec<BasisIndex> {
        self.basis_cosets
            .iter()
            .enumerate()
            .flat_map(|(d, reps)| (0..reps.len()).map(move |i| BasisIndex { degree: d as u32, index: i }))
            .collect()
    }

    fn compute_structure_constants(&self) -> Result<Vec<StructureConstant>> {
        let indices = self.indices();
        let mut out = Vec::new();
        for &left in &indices {
            for &right in &indices {
                let degree = left.degree + right.degree;
                let product = if degree > self.degree_bound {
                    None
                } else {
                    let x = self.representative(left);
                    let y = self.representative(right);
                    let prod: Vec<Q> = x.iter().zip(y).map(|(a, b)| a * b).collect();
                    Some(self.coset_coordinates(degree, &prod).ok_or_else(|| {
                        Error::Inconsistency(format!(
                            "product of basis cosets {left:?} and {right:?} is not an S-equivariant class"
                        ))
                    })?)
                };
                out.push(StructureConstant { left, right, product });
            }
        }
        Ok(out)
    }

    pub fn representative(&self, i: BasisIndex) -> &[Q] {
        &self.basis_cosets[i.degree as usize][i.index]
    }

    /// Coordinates of the coset of `v` (a degree-`d` class of `H*_S`) in the
    /// chosen basis, or `None` if `v` is not a class of that degree.
    pub fn coset_coordinates(&self, d: u32, v: &[Q]) -> Option<Vec<Q>> {
        let reps = self.basis_cosets.get(d as usize)?;
        let kernel = &self.kernels[d as usize];
        let vectors: Vec<Vec<Q>> = reps.iter().chain(kernel.basis()).cloned().collect();
        let t = solve_in_span(&vectors, v)?;
        Some(t[..reps.len()].to_vec())
    }

    pub fn kernel(&self, d: u32) -> Option<&LinearSolutionSpace> {
        self.kernels.get(d as usize)
    }

    /// Stored product coordinates of two basis cosets.
    pub fn product(&self, left: BasisIndex, right: BasisIndex) -> Option<&[Q]> {
        self.structure_constants
            .iter()
            .find(|s| s.left == left && s.right == right)
            .and_then(|s| s.product.as_deref())
    }

    /// `Some(n)` when the ring is `Q[u]/(u^n)` for a degree-2 class `u`,
    /// with `u^n = 0` visible within the degree bound.
    pub fn truncated_polynomial_height(&self) -> Option<usize> {
        let n = self.betti.iter().take_while(|&&b| b == 1).count();
        if n == 0 || n > self.degree_bound as usize || self.betti[n..].iter().any(|&b| b != 0) {
            return None;
        }
        if n == 1 {
            return Some(1);
        }
        let u = BasisIndex { degree: 1, index: 0 };
        (1..n)
            .all(|d| {
                let x = BasisIndex { degree: d as u32 - 1, index: 0 };
                self.product(u, x).is_some_and(|c| c.len() == 1 && !c[0].is_zero())
            })
            .then_some(n)
    }
}

pub fn ring_presentation(
    x: &SchubertDatum,
    a_vals: &[i64],
    r0: &Q,
    dmax: u32,
) -> Result<QuotientPresentation> {
    let g = validated_graph(x, a_vals, r0)?;
    let hs = hs_basis(&g, a_vals, dmax)?;
    let kernels = kernel_spaces(&hs, &g.phi_values(), r0);
    QuotientPresentation::new(&hs, &kernels)
}
