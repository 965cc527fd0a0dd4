//! The combinatorial shadow of a Schubert variety `X(w) ⊂ G/P`: its torus
//! fixed points, moment graph, truncations at a level `r0`, and the checks
//! that decide whether the reduction machinery applies.

use std::fmt::Write as _;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{Root, RootDatum, Weight, WeylElement};
use crate::lp;
use crate::rational::{format_q, Q};

/// A Schubert variety `X(w)` in the orbit of a dominant weight λ.
#[derive(Debug, Clone)]
pub struct SchubertDatum {
    datum: RootDatum,
    lambda: Weight,
    w: WeylElement,
    parabolic_roots: Vec<Root>,
}

impl SchubertDatum {
    /// `w` must be the minimal-length representative of its coset in
    /// `W / W_λ`.
    pub fn new(datum: RootDatum, lambda: Weight, w: WeylElement) -> Result<Self> {
        let parabolic_roots = datum.parabolic_roots(&lambda)?;
        let target = datum.act(&w, &lambda);
        let minimal = datum.min_coset_rep(&target);
        if minimal.length() != w.length() {
            return Err(Error::InvalidWeylElement(format!(
                "{w} is not a minimal coset representative modulo the stabiliser of λ; use {minimal}"
            )));
        }
        Ok(Self { datum, lambda, w: minimal, parabolic_roots })
    }

    /// Convenience constructor from fundamental-weight coordinates of λ and a
    /// 1-based reduced word for `w`.
    pub fn from_coordinates(datum: RootDatum, lambda_fund: &[i64], w_word: &[usize]) -> Result<Self> {
        if lambda_fund.iter().any(|&x| x < 0) {
            return Err(Error::InvalidWeight("λ must have non-negative coordinates".into()));
        }
        let lambda = datum.weight_from_fundamental(lambda_fund)?;
        let w = datum.element_from_word(w_word)?;
        Self::new(datum, lambda, w)
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn w(&self) -> &WeylElement {
        &self.w
    }

    pub fn parabolic_roots(&self) -> &[Root] {
        &self.parabolic_roots
    }

    /// Complex dimension of `X(w)`.
    pub fn complex_dim(&self) -> usize {
        self.w.length()
    }

    /// Fixed points `vλ` with `v <= w` on minimal coset representatives,
    /// ordered by (length, word).
    pub fn fixed_points(&self) -> Result<Vec<FixedPoint>> {
        Ok(self
            .datum
            .weyl_orbit(&self.lambda)?
            .into_iter()
            .filter(|p| self.datum.bruhat_leq(&p.rep, &self.w))
            .map(|p| FixedPoint { rep: p.rep, weight: p.weight })
            .collect())
    }

    /// Betti numbers `[b_0, b_2, b_4, …]` of `X(w)` from its Schubert cells.
    pub fn poincare_polynomial(&self) -> Result<Vec<usize>> {
        let mut betti = vec![0usize; self.w.length() + 1];
        for p in self.fixed_points()? {
            betti[p.rep.length()] += 1;
        }
        Ok(betti)
    }

    pub fn moment_graph(&self, a_vals: &[i64]) -> Result<MomentGraph> {
        check_a_vals(&self.datum, a_vals)?;
        let vertices: Vec<Vertex> = self
            .fixed_points()?
            .into_iter()
            .map(|p| Vertex { phi: p.weight.pairing_a(a_vals), rep: p.rep, weight: p.weight })
            .collect();
        let mut edges = Vec::new();
        for u in 0..vertices.len() {
            for gamma in self.datum.positive_roots() {
                let mu = &vertices[u].weight;
                if self.datum.coroot_pairing(mu, gamma).is_zero() {
                    continue;
                }
                let image = self.datum.reflect(mu, gamma)?;
                if let Some(v) = vertices.iter().position(|x| x.weight == image) {
                    if u < v {
                        edges.push(Edge { u, v, label: gamma.clone() });
                    }
                }
            }
        }
        edges.sort_by_key(|e| (e.u, e.v));
        Ok(MomentGraph { rank: self.datum.rank(), vertices, edges })
    }

    /// Checks regularity of `a`, injectivity of Φ_a on the whole orbit, and
    /// strict growth of Φ_a along the Bruhat order on the fixed points of X.
    pub fn validate_assumption1(&self, a_vals: &[i64]) -> Result<Assumption1Report> {
        check_a_vals(&self.datum, a_vals)?;
        let singular_roots: Vec<String> = self
            .datum
            .positive_roots()
            .iter()
            .filter(|g| g.value_at(a_vals) == 0)
            .map(|g| g.to_string())
            .collect();

        let orbit = self.datum.weyl_orbit(&self.lambda)?;
        let values: Vec<Q> = orbit.iter().map(|p| p.weight.pairing_a(a_vals)).collect();
        let mut collisions = Vec::new();
        for i in 0..orbit.len() {
            for j in i + 1..orbit.len() {
                if values[i] == values[j] {
                    collisions.push([orbit[i].rep.to_string(), orbit[j].rep.to_string()]);
                }
            }
        }

        let fixed = self.fixed_points()?;
        let mut monotonicity_violations = Vec::new();
        for v in &fixed {
            for u in &fixed {
                if v.rep != u.rep
                    && self.datum.bruhat_leq(&v.rep, &u.rep)
                    && v.weight.pairing_a(a_vals) >= u.weight.pairing_a(a_vals)
                {
                    monotonicity_violations.push([v.rep.to_string(), u.rep.to_string()]);
                }
            }
        }
        Ok(Assumption1Report { singular_roots, collisions, monotonicity_violations })
    }
}

fn check_a_vals(datum: &RootDatum, a_vals: &[i64]) -> Result<()> {
    if a_vals.len() != datum.rank() {
        return Err(Error::InvalidInput(format!(
            "a has {} entries but the rank is {}",
            a_vals.len(),
            datum.rank()
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPoint {
    pub rep: WeylElement,
    pub weight: Weight,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Assumption1Report {
    /// Positive roots γ with γ(a) = 0.
    pub singular_roots: Vec<String>,
    /// Pairs of orbit points with equal Φ_a.
    pub collisions: Vec<[String; 2]>,
    /// Pairs `v < u` in X with Φ_a(vλ) >= Φ_a(uλ).
    pub monotonicity_violations: Vec<[String; 2]>,
}

impl Assumption1Report {
    pub fn regular(&self) -> bool {
        self.singular_roots.is_empty()
    }

    pub fn injective(&self) -> bool {
        self.collisions.is_empty()
    }

    pub fn monotone(&self) -> bool {
        self.monotonicity_violations.is_empty()
    }

    pub fn passed(&self) -> bool {
        self.regular() && self.injective() && self.monotone()
    }

    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.regular() {
            out.push(format!("a is not regular: γ(a) = 0 for {}", self.singular_roots.join(", ")));
        }
        if !self.injective() {
            let pairs: Vec<String> =
                self.collisions.iter().map(|[x, y]| format!("{x}λ/{y}λ")).collect();
            out.push(format!("Φ_a is not injective on the orbit: {}", pairs.join(", ")));
        }
        if !self.monotone() {
            let pairs: Vec<String> = self
                .monotonicity_violations
                .iter()
                .map(|[x, y]| format!("{x} < {y}"))
                .collect();
            out.push(format!("Φ_a does not increase along the Bruhat order: {}", pairs.join(", ")));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub rep: WeylElement,
    pub weight: Weight,
    pub phi: Q,
}

/// An edge between vertices `u < v` with `s_label` exchanging their weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub label: Root,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentGraph {
    rank: usize,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
}

impl MomentGraph {
    pub fn new(rank: usize, vertices: Vec<Vertex>, edges: Vec<Edge>) -> Self {
        Self { rank, vertices, edges }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn phi_values(&self) -> Vec<Q> {
        self.vertices.iter().map(|v| v.phi.clone()).collect()
    }

    pub fn valency(&self, i: usize) -> usize {
        self.edges.iter().filter(|e| e.u == i || e.v == i).count()
    }

    /// The subgraph induced on `keep` (indices into `vertices`, ascending).
    pub fn induced(&self, keep: &[usize]) -> Self {
        let position = |i: usize| keep.iter().position(|&k| k == i);
        let vertices = keep.iter().map(|&i| self.vertices[i].clone()).collect();
        let edges = self
            .edges
            .iter()
            .filter_map(|e| {
                Some(Edge { u: position(e.u)?, v: position(e.v)?, label: e.label.clone() })
            })
            .collect();
        Self { rank: self.rank, vertices, edges }
    }

    /// Indices of the vertices with Φ_a >= r0.
    pub fn indices_at_or_above(&self, r0: &Q) -> Vec<usize> {
        (0..self.vertices.len()).filter(|&i| self.vertices[i].phi >= *r0).collect()
    }

    /// Γ_{r0}: drops the vertices with Φ_a < r0 and their edges.
    pub fn truncate(&self, r0: &Q) -> Self {
        self.induced(&self.indices_at_or_above(r0))
    }

    pub fn validate_r0(&self, r0: &Q) -> R0Report {
        let min = self.vertices.iter().map(|v| v.phi.clone()).min();
        let max = self.vertices.iter().map(|v| v.phi.clone()).max();
        let failure = match (&min, &max) {
            (Some(lo), Some(hi)) => {
                if let Some(v) = self.vertices.iter().find(|v| v.phi == *r0) {
                    Some(format!("r0 = {} is the critical value Φ_a({}λ)", r0, v.rep))
                } else if r0 <= lo || r0 >= hi {
                    Some(format!("r0 = {r0} lies outside the open interval ({lo}, {hi})"))
                } else {
                    None
                }
            }
            _ => Some("the moment graph has no vertices".to_string()),
        };
        R0Report { r0: r0.clone(), min, max, failure }
    }

    /// Vertices whose valency differs from the complex dimension.
    pub fn valency_report(&self, complex_dim: usize) -> Vec<ValencyFlag> {
        (0..self.vertices.len())
            .filter_map(|i| {
                let valency = self.valency(i);
                (valency != complex_dim).then_some(ValencyFlag { vertex: i, valency })
            })
            .collect()
    }

    /// Vertices whose weight is not a convex combination of the others.
    pub fn polytope_vertices(&self) -> Vec<usize> {
        let points: Vec<Vec<Q>> =
            self.vertices.iter().map(|v| v.weight.root_coords().to_vec()).collect();
        (0..points.len())
            .filter(|&i| {
                let others: Vec<Vec<Q>> = points
                    .iter()
                    .enumerate()
                    .filter(|&(j, p)| j != i && *p != points[i])
                    .map(|(_, p)| p.clone())
                    .collect();
                !lp::in_convex_hull(&others, &points[i])
            })
            .collect()
    }

    /// Graphviz rendering. Node ids are hyphen-joined reduced words.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph moment_graph {\n");
        for v in &self.vertices {
            let id = v.rep.label();
            let phi = format_q(&v.phi);
            let _ = writeln!(out, "  \"{id}\" [phi=\"{phi}\", label=\"{id}\\nphi={phi}\"];");
        }
        for e in &self.edges {
            let _ = writeln!(
                out,
                "  \"{}\" -- \"{}\" [label=\"{}\"];",
                self.vertices[e.u].rep.label(),
                self.vertices[e.v].rep.label(),
                e.label
            );
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct R0Report {
    pub r0: Q,
    pub min: Option<Q>,
    pub max: Option<Q>,
    pub failure: Option<String>,
}

impl R0Report {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ValencyFlag {
    pub vertex: usize,
    pub valency: usize,
}

pub fn is_palindromic(coeffs: &[usize]) -> bool {
    coeffs.iter().eq(coeffs.iter().rev())
}
