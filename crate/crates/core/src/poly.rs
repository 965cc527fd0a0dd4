//! Multivariate polynomials with exact rational coefficients in the simple
//! root symbols `a1, …, an`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{q, Q};

pub type Monomial = Vec<u32>;

/// All monomials of total degree `d` in `nvars` variables, in graded
/// lexicographic order (`a1^d` first).
pub fn monomials(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(nvars: usize, d: u32, prefix: &mut Monomial, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == nvars {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(nvars, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(nvars, d, &mut Vec::with_capacity(nvars), &mut out);
    out
}

/// Number of degree-`d` monomials in `nvars` variables, `C(d + n - 1, n - 1)`.
pub fn monomial_count(nvars: usize, d: u32) -> usize {
    if nvars == 0 {
        return usize::from(d == 0);
    }
    let (n, k) = (d as usize + nvars - 1, nvars - 1);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Q>,
}

impl RationalPoly {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    pub fn monomial(nvars: usize, exps: Monomial, c: Q) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Self { nvars, terms }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, Q::one())
    }

    /// The linear form `Σ coeffs[i] a_i`.
    pub fn linear(coeffs: &[Q]) -> Self {
        let n = coeffs.len();
        coeffs
            .iter()
            .enumerate()
            .fold(Self::zero(n), |acc, (i, c)| acc + Self::var(n, i).scale(c))
    }

    pub fn linear_int(coeffs: &[i64]) -> Self {
        Self::linear(&coeffs.iter().map(|&c| q(c)).collect::<Vec<_>>())
    }

    /// Builds a polynomial from coefficients over a monomial list.
    pub fn from_coefficients(nvars: usize, monos: &[Monomial], coeffs: &[Q]) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in monos.iter().zip(coeffs) {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn coefficient(&self, m: &[u32]) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(self.nvars, Q::one()), |acc, _| &acc * self)
    }

    pub fn eval(&self, point: &[Q]) -> Q {
        assert_eq!(point.len(), self.nvars);
        self.terms
            .iter()
            .map(|(m, c)| {
                m.iter()
                    .zip(point)
                    .fold(c.clone(), |acc, (&e, x)| acc * num_traits::pow(x.clone(), e as usize))
            })
            .sum()
    }

    /// Replaces the variable `k` by `value`.
    pub fn substitute(&self, k: usize, value: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut rest = m.clone();
            let e = rest[k];
            rest[k] = 0;
            let term = &Self::monomial(self.nvars, rest, c.clone()) * &value.pow(e);
            out = out + term;
        }
        out
    }

    /// Remainder of `self` modulo the linear form `gamma`: the variable of
    /// lowest index with a nonzero coefficient in `gamma` is eliminated.
    pub fn linear_remainder(&self, gamma: &Self) -> Result<Self> {
        if gamma.is_zero() || gamma.degree() != Some(1) || !gamma.is_homogeneous() {
            return Err(Error::InvalidInput(format!(
                "divisor must be a nonzero linear form, got {gamma}"
            )));
        }
        let k = (0..gamma.nvars)
            .find(|&i| !gamma.coefficient(&unit_exp(gamma.nvars, i)).is_zero())
            .expect("nonzero linear form");
        let gk = gamma.coefficient(&unit_exp(gamma.nvars, k));
        let others = gamma.clone() - Self::var(gamma.nvars, k).scale(&gk);
        let value = others.scale(&(-Q::one() / gk));
        Ok(self.substitute(k, &value))
    }
}

fn unit_exp(n: usize, i: usize) -> Monomial {
    let mut e = vec![0; n];
    e[i] = 1;
    e
}

/// True iff `p = gamma · r` for some polynomial `r`.
pub fn is_divisible(p: &RationalPoly, gamma: &RationalPoly) -> Result<bool> {
    Ok(p.linear_remainder(gamma)?.is_zero())
}

impl Add for RationalPoly {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Sub for RationalPoly {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for RationalPoly {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            nvars: self.nvars,
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Mul for &RationalPoly {
    type Output = RationalPoly;
    fn mul(self, rhs: &RationalPoly) -> RationalPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = RationalPoly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let m: Monomial = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                out.add_term(m, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // graded lex, highest first
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
            db.cmp(&da).then(b.cmp(a))
        });
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let vars: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(j, &e)| if e == 1 { format!("a{}", j + 1) } else { format!("a{}^{}", j + 1, e) })
                .collect();
            let coeff = if vars.is_empty() || !c.is_one() { Some(c.to_string()) } else { None };
            let body = match (coeff, vars.is_empty()) {
                (Some(c), true) => c,
                (Some(c), false) => format!("{c}*{}", vars.join("*")),
                (None, _) => vars.join("*"),
            };
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{body}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn a(i: usize) -> RationalPoly {
        RationalPoly::var(3, i)
    }

    #[test]
    fn monomial_enumeration() {
        assert_eq!(monomials(3, 0), vec![vec![0, 0, 0]]);
        assert_eq!(monomials(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        for (n, d) in [(1, 4), (3, 2), (3, 6), (4, 3)] {
            assert_eq!(monomials(n, d).len(), monomial_count(n, d));
        }
        assert_eq!(monomial_count(3, 2), 6);
    }

    #[test]
    fn explicit_factor_divides() {
        let p = &a(0) * &(a(0) + a(1));
        assert!(is_divisible(&p, &a(0)).unwrap());
    }

    #[test]
    fn unrelated_variable_does_not_divide() {
        assert!(!is_divisible(&a(1), &a(0)).unwrap());
    }

    #[test]
    fn difference_of_squares() {
        let p = &a(0) * &a(0) - &a(1) * &a(1);
        assert!(is_divisible(&p, &(a(0) + a(1))).unwrap());
        assert!(!is_divisible(&p, &(a(0) + a(2))).unwrap());
    }

    #[test]
    fn zero_divisor_rejected() {
        assert!(is_divisible(&a(0), &RationalPoly::zero(3)).is_err());
        let quadratic = &a(0) * &a(1);
        assert!(is_divisible(&a(0), &quadratic).is_err());
    }

    #[test]
    fn eval_and_display() {
        let p = &a(0) * &(a(0) + a(1).scale(&q(2)));
        assert_eq!(p.eval(&[q(1), q(2), q(3)]), q(5));
        assert_eq!(p.to_string(), "a1^2 + 2*a1*a2");
        assert_eq!(RationalPoly::zero(2).degree(), None);
    }

    fn arb_poly() -> impl Strategy<Value = RationalPoly> {
        proptest::collection::vec(((0u32..3, 0u32..3, 0u32..3), -5i64..6), 0..6).prop_map(|ts| {
            ts.into_iter().fold(RationalPoly::zero(3), |acc, ((x, y, z), c)| {
                acc + RationalPoly::monomial(3, vec![x, y, z], q(c))
            })
        })
    }

    proptest! {
        #[test]
        fn multiples_are_divisible(p in arb_poly(), g in proptest::collection::vec(-3i64..4, 3)) {
            prop_assume!(g.iter().any(|&x| x != 0));
            let gamma = RationalPoly::linear_int(&g);
            prop_assert!(is_divisible(&(&p * &gamma), &gamma).unwrap());
        }

        #[test]
        fn add_sub_roundtrip(p in arb_poly(), r in arb_poly()) {
            prop_assert_eq!((p.clone() + r.clone()) - r, p);
        }
    }
}
