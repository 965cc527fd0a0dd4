//! Dense exact linear algebra over the rationals.
//!
//! Row reduction is carried out fraction-free on integer rows (each row is
//! scaled to integers and kept primitive by dividing out its content); only
//! the final normalisation of pivots to 1 produces fractions. All subspaces
//! are stored in reduced row echelon form, which makes equality of spaces a
//! plain comparison of bases.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Q;

/// Clears denominators and divides by the content, giving a primitive
/// integer row proportional to `row`.
fn to_primitive(row: &[Q]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    make_primitive(ints)
}

fn make_primitive(mut row: Vec<BigInt>) -> Vec<BigInt> {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x = &*x / &g;
        }
    }
    row
}

/// Reduced row echelon form of the rows of a matrix with `ncols` columns.
/// Returns the nonzero rows and their pivot columns.
pub fn rref(rows: &[Vec<Q>], ncols: usize) -> (Vec<Vec<Q>>, Vec<usize>) {
    let mut work: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), ncols, "row length mismatch");
            to_primitive(r)
        })
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..ncols {
        if next == work.len() {
            break;
        }
        let Some(p) = (next..work.len())
            .filter(|&i| !work[i][col].is_zero())
            .min_by_key(|&i| work[i][col].abs())
        else {
            continue;
        };
        work.swap(next, p);
        let pivot_row = work[next].clone();
        let pv = pivot_row[col].clone();
        for (i, row) in work.iter_mut().enumerate() {
            if i == next || row[col].is_zero() {
                continue;
            }
            let g = pv.gcd(&row[col]);
            let a = &pv / &g;
            let b = &row[col] / &g;
            let combined: Vec<BigInt> = row
                .iter()
                .zip(&pivot_row)
                .map(|(x, y)| &a * x - &b * y)
                .collect();
            *row = make_primitive(combined);
        }
        pivots.push(col);
        next += 1;
    }
    work.truncate(next);
    let reduced = work
        .into_iter()
        .zip(&pivots)
        .map(|(row, &c)| {
            let pv = row[c].clone();
            row.into_iter().map(|x| Q::new(x, pv.clone())).collect()
        })
        .collect();
    (reduced, pivots)
}

pub fn rank(rows: &[Vec<Q>], ncols: usize) -> usize {
    rref(rows, ncols).1.len()
}

/// A subspace of `Q^ambient_dim`, stored by its reduced echelon basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSolutionSpace {
    ambient_dim: usize,
    basis: Vec<Vec<Q>>,
    pivots: Vec<usize>,
}

impl LinearSolutionSpace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self { ambient_dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim)
            .map(|i| unit_vector(ambient_dim, i))
            .collect();
        Self { ambient_dim, basis, pivots: (0..ambient_dim).collect() }
    }

    /// The span of `vectors`.
    pub fn span(ambient_dim: usize, vectors: &[Vec<Q>]) -> Self {
        let (basis, pivots) = rref(vectors, ambient_dim);
        Self { ambient_dim, basis, pivots }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Q>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its component along the echelon basis; zero iff `v` lies in
    /// the space.
    pub fn reduce(&self, v: &[Q]) -> Vec<Q> {
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (x, y) in r.iter_mut().zip(row) {
                *x -= &f * y;
            }
        }
        r
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    pub fn contains_space(&self, other: &Self) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Q]) -> Option<Vec<Q>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn sum(&self, other: &Self) -> Self {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let all: Vec<Vec<Q>> = self.basis.iter().chain(&other.basis).cloned().collect();
        Self::span(self.ambient_dim, &all)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let (k, l) = (self.dim(), other.dim());
        // x·U = y·V  <=>  (x, y) in the kernel of [U; -V]^T
        let system: Vec<Vec<Q>> = (0..self.ambient_dim)
            .map(|j| {
                self.basis
                    .iter()
                    .map(|u| u[j].clone())
                    .chain(other.basis.iter().map(|v| -v[j].clone()))
                    .collect()
            })
            .collect();
        let (_, kernel) = rank_and_nullspace(&system, k + l);
        let vectors: Vec<Vec<Q>> = kernel
            .basis
            .iter()
            .map(|z| combine(&z[..k], &self.basis, self.ambient_dim))
            .collect();
        Self::span(self.ambient_dim, &vectors)
    }

    /// The subspace of vectors whose coordinates in `indices` all vanish.
    pub fn vanishing_on(&self, indices: &[usize]) -> Self {
        let k = self.dim();
        let system: Vec<Vec<Q>> = indices
            .iter()
            .map(|&j| self.basis.iter().map(|u| u[j].clone()).collect())
            .collect();
        let (_, kernel) = rank_and_nullspace(&system, k);
        let vectors: Vec<Vec<Q>> = kernel
            .basis
            .iter()
            .map(|z| combine(z, &self.basis, self.ambient_dim))
            .collect();
        Self::span(self.ambient_dim, &vectors)
    }
}

/// Σ coeffs[i] · vectors[i].
pub fn combine(coeffs: &[Q], vectors: &[Vec<Q>], dim: usize) -> Vec<Q> {
    let mut out = vec![Q::zero(); dim];
    for (c, v) in coeffs.iter().zip(vectors) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            *o += c * x;
        }
    }
    out
}

/// Coefficients `t` with `Σ t_i vectors[i] = target`, if any. Free
/// coefficients are set to zero, so the answer is unique when `vectors` are
/// independent.
pub fn solve_in_span(vectors: &[Vec<Q>], target: &[Q]) -> Option<Vec<Q>> {
    let k = vectors.len();
    let rows: Vec<Vec<Q>> = (0..target.len())
        .map(|j| {
            vectors
                .iter()
                .map(|v| v[j].clone())
                .chain(std::iter::once(target[j].clone()))
                .collect()
        })
        .collect();
    let (reduced, pivots) = rref(&rows, k + 1);
    if pivots.last() == Some(&k) {
        return None;
    }
    let mut t = vec![Q::zero(); k];
    for (row, &p) in reduced.iter().zip(&pivots) {
        t[p] = row[k].clone();
    }
    Some(t)
}

pub fn unit_vector(dim: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); dim];
    v[i] = Q::one();
    v
}

/// Exact rank and reduced echelon nullspace basis of a matrix given by rows.
pub fn rank_and_nullspace(rows: &[Vec<Q>], ncols: usize) -> (usize, LinearSolutionSpace) {
    let (reduced, pivots) = rref(rows, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let null: Vec<Vec<Q>> = (0..ncols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = unit_vector(ncols, f);
            for (row, &p) in reduced.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect();
    (pivots.len(), LinearSolutionSpace::span(ncols, &null))
}
