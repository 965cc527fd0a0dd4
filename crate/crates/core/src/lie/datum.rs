use std::fmt;
use std::ops::{Add, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{q, Q};

pub const DEFAULT_RANK_CAP: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RootType {
    A,
    B,
    C,
    D,
}

impl FromStr for RootType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Self::A),
            "B" | "b" => Ok(Self::B),
            "C" | "c" => Ok(Self::C),
            "D" | "d" => Ok(Self::D),
            other => Err(Error::UnsupportedRootSystem(format!(
                "type {other:?} (supported: A, B, C, D)"
            ))),
        }
    }
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Self::A => "A",
            Self::B => "B",
            Self::C => "C",
            Self::D => "D",
        };
        f.write_str(c)
    }
}

/// A root in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(Vec<i64>);

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Self(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn as_weight(&self) -> Weight {
        Weight::new(self.0.iter().map(|&c| q(c)).collect())
    }

    /// γ(a) for `a_vals[j] = α_j(a)`.
    pub fn value_at(&self, a_vals: &[i64]) -> i64 {
        self.0.iter().zip(a_vals).map(|(g, c)| g * c).sum()
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "a{}", i + 1)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// A weight, stored by its exact coordinates in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<Q>);

impl Weight {
    pub fn new(root_coords: Vec<Q>) -> Self {
        Self(root_coords)
    }

    pub fn zero(rank: usize) -> Self {
        Self(vec![Q::zero(); rank])
    }

    pub fn root_coords(&self) -> &[Q] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self(self.0.iter().map(|x| x * c).collect())
    }

    /// Φ_a: the value Σ r_j c_j, where the weight is Σ r_j α_j and
    /// `a_vals[j] = c_j = α_j(a)`.
    pub fn pairing_a(&self, a_vals: &[i64]) -> Q {
        assert_eq!(a_vals.len(), self.0.len(), "a_vals length must equal the rank");
        self.0.iter().zip(a_vals).map(|(r, &c)| r * q(c)).sum()
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Cartan data of a classical root system.
///
/// `cartan[i][j] = <α_i^∨, α_j>`; the invariant form on simple roots is
/// `symmetrizer[i] * cartan[i][j]` (up to an overall scale).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDatum {
    root_type: RootType,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    positive_roots: Vec<Root>,
    inverse_cartan: Vec<Vec<Q>>,
}

impl RootDatum {
    pub fn new(root_type: RootType, rank: usize) -> Result<Self> {
        Self::with_rank_cap(root_type, rank, DEFAULT_RANK_CAP)
    }

    pub fn with_rank_cap(root_type: RootType, rank: usize, cap: usize) -> Result<Self> {
        let min_rank = match root_type {
            RootType::A => 1,
            RootType::B | RootType::C => 2,
            RootType::D => 3,
        };
        if rank < min_rank {
            return Err(Error::UnsupportedRootSystem(format!(
                "{root_type}{rank}: type {root_type} needs rank >= {min_rank}"
            )));
        }
        if rank > cap {
            return Err(Error::UnsupportedRootSystem(format!(
                "{root_type}{rank}: rank exceeds the configured cap {cap}"
            )));
        }
        let n = rank;
        let mut cartan = vec![vec![0i64; n]; n];
        for i in 0..n {
            cartan[i][i] = 2;
        }
        let mut symmetrizer = vec![1i64; n];
        match root_type {
            RootType::A | RootType::B | RootType::C => {
                for i in 0..n - 1 {
                    cartan[i][i + 1] = -1;
                    cartan[i + 1][i] = -1;
                }
                if root_type == RootType::B {
                    // α_n short
                    cartan[n - 1][n - 2] = -2;
                    symmetrizer = vec![2; n];
                    symmetrizer[n - 1] = 1;
                } else if root_type == RootType::C {
                    // α_n long
                    cartan[n - 2][n - 1] = -2;
                    symmetrizer[n - 1] = 2;
                }
            }
            RootType::D => {
                for i in 0..n - 2 {
                    cartan[i][i + 1] = -1;
                    cartan[i + 1][i] = -1;
                }
                cartan[n - 3][n - 1] = -1;
                cartan[n - 1][n - 3] = -1;
            }
        }
        let inverse_cartan = invert(&cartan);
        let mut datum = Self {
            root_type,
            rank,
            cartan,
            symmetrizer,
            positive_roots: Vec::new(),
            inverse_cartan,
        };
        datum.positive_roots = datum.enumerate_positive_roots();
        Ok(datum)
    }

    /// Closure of the simple roots under simple reflections, restricted to
    /// positive roots; sorted by height, then lexicographically.
    fn enumerate_positive_roots(&self) -> Vec<Root> {
        let n = self.rank;
        let mut roots: Vec<Root> = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                Root(v)
            })
            .collect();
        let mut frontier = roots.clone();
        while let Some(beta) = frontier.pop() {
            for i in 0..n {
                let k = self.simple_pairing_int(&beta, i);
                let mut img = beta.0.clone();
                img[i] -= k;
                let img = Root(img);
                if img.is_positive() && !roots.contains(&img) {
                    roots.push(img.clone());
                    frontier.push(img);
                }
            }
        }
        roots.sort_by(|a, b| a.height().cmp(&b.height()).then(b.cmp(a)));
        roots
    }

    fn simple_pairing_int(&self, root: &Root, i: usize) -> i64 {
        (0..self.rank).map(|k| self.cartan[i][k] * root.0[k]).sum()
    }

    pub fn root_type(&self) -> RootType {
        self.root_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn simple_root(&self, i: usize) -> Root {
        let mut v = vec![0; self.rank];
        v[i] = 1;
        Root(v)
    }

    /// Number of positive roots expected for the type.
    pub fn expected_positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.root_type {
            RootType::A => n * (n + 1) / 2,
            RootType::B | RootType::C => n * n,
            RootType::D => n * (n - 1),
        }
    }

    /// The symmetric invariant form on simple roots, `d_i a_ij`.
    pub fn form_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.rank)
            .map(|i| (0..self.rank).map(|j| self.symmetrizer[i] * self.cartan[i][j]).collect())
            .collect()
    }

    fn form(&self, x: &[Q], y: &[Q]) -> Q {
        let mut s = Q::zero();
        for i in 0..self.rank {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.rank {
                let f = self.symmetrizer[i] * self.cartan[i][j];
                if f != 0 {
                    s += &x[i] * &y[j] * q(f);
                }
            }
        }
        s
    }

    pub fn is_root(&self, gamma: &Root) -> bool {
        gamma.0.len() == self.rank
            && (self.positive_roots.contains(gamma)
                || self.positive_roots.contains(&Root(gamma.0.iter().map(|c| -c).collect())))
    }

    /// μ(γ^∨) = 2(μ, γ) / (γ, γ).
    pub fn coroot_pairing(&self, mu: &Weight, gamma: &Root) -> Q {
        let g: Vec<Q> = gamma.0.iter().map(|&c| q(c)).collect();
        q(2) * self.form(&mu.0, &g) / self.form(&g, &g)
    }

    /// μ(α_i^∨).
    pub fn simple_pairing(&self, mu: &Weight, i: usize) -> Q {
        (0..self.rank)
            .filter(|&k| self.cartan[i][k] != 0)
            .map(|k| &mu.0[k] * q(self.cartan[i][k]))
            .sum()
    }

    /// All simple coroot pairings, i.e. the fundamental-weight coordinates.
    pub fn fundamental_coords(&self, mu: &Weight) -> Vec<Q> {
        (0..self.rank).map(|i| self.simple_pairing(mu, i)).collect()
    }

    /// Converts fundamental-weight coordinates into a weight (root basis).
    pub fn weight_from_fundamental(&self, coords: &[i64]) -> Result<Weight> {
        if coords.len() != self.rank {
            return Err(Error::InvalidWeight(format!(
                "expected {} fundamental coordinates, got {}",
                self.rank,
                coords.len()
            )));
        }
        let m: Vec<Q> = coords.iter().map(|&c| q(c)).collect();
        Ok(Weight(
            self.inverse_cartan
                .iter()
                .map(|row| row.iter().zip(&m).map(|(a, b)| a * b).sum())
                .collect(),
        ))
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        let mut v = vec![0; self.rank];
        v[i] = 1;
        self.weight_from_fundamental(&v).expect("rank-sized vector")
    }

    pub fn is_dominant(&self, mu: &Weight) -> bool {
        (0..self.rank).all(|i| !self.simple_pairing(mu, i).is_negative())
    }

    pub fn is_regular_dominant(&self, mu: &Weight) -> bool {
        (0..self.rank).all(|i| self.simple_pairing(mu, i).is_positive())
    }

    /// s_γ μ = μ − μ(γ^∨) γ.
    pub fn reflect(&self, mu: &Weight, gamma: &Root) -> Result<Weight> {
        if !self.is_root(gamma) {
            return Err(Error::NotARoot(gamma.to_string()));
        }
        let k = self.coroot_pairing(mu, gamma);
        Ok(&mu.clone() - &gamma.as_weight().scale(&k))
    }

    pub fn simple_reflect(&self, mu: &Weight, i: usize) -> Weight {
        let k = self.simple_pairing(mu, i);
        if k.is_zero() {
            return mu.clone();
        }
        let mut v = mu.0.clone();
        v[i] -= k;
        Weight(v)
    }

    /// ρ, the sum of the fundamental weights.
    pub fn rho(&self) -> Weight {
        self.weight_from_fundamental(&vec![1; self.rank]).expect("rank-sized vector")
    }

    /// The parabolic subset {α ∈ R⁺ : λ(α^∨) = 0}.
    pub fn parabolic_roots(&self, lambda: &Weight) -> Result<Vec<Root>> {
        self.check_dominant_nonzero(lambda)?;
        Ok(self
            .positive_roots
            .iter()
            .filter(|g| self.coroot_pairing(lambda, g).is_zero())
            .cloned()
            .collect())
    }

    pub(crate) fn check_dominant_nonzero(&self, lambda: &Weight) -> Result<()> {
        if lambda.0.len() != self.rank {
            return Err(Error::InvalidWeight(format!("weight {lambda} has wrong length")));
        }
        if lambda.is_zero() {
            return Err(Error::InvalidWeight(
                "the zero weight has a one-point orbit".to_string(),
            ));
        }
        if !self.is_dominant(lambda) {
            return Err(Error::InvalidWeight(format!("{lambda} is not dominant")));
        }
        Ok(())
    }
}

/// Inverse of an integer matrix known to be invertible.
fn invert(m: &[Vec<i64>]) -> Vec<Vec<Q>> {
    let n = m.len();
    let augmented: Vec<Vec<Q>> = (0..n)
        .map(|i| {
            m[i].iter()
                .map(|&x| q(x))
                .chain((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }))
                .collect()
        })
        .collect();
    let (rows, pivots) = linalg::rref(&augmented, 2 * n);
    assert_eq!(pivots, (0..n).collect::<Vec<_>>(), "Cartan matrix must be invertible");
    rows.into_iter().map(|r| r[n..].to_vec()).collect()
}
