use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_traits::{Signed, Zero};

use super::datum::{RootDatum, Weight};
use crate::error::{Error, Result};

pub const DEFAULT_GROUP_CAP: usize = 40320;

/// A Weyl group element, kept as a canonical reduced word together with its
/// image of ρ. Two elements are equal iff they move ρ to the same weight.
///
/// The canonical word is the lexicographically greatest reduced word; letters
/// are 0-based internally and printed 1-based.
#[derive(Debug, Clone)]
pub struct WeylElement {
    word: Vec<usize>,
    rho_image: Weight,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.rho_image == other.rho_image
    }
}

impl Eq for WeylElement {}

impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.rho_image.hash(state);
    }
}

impl WeylElement {
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// The word with 1-based letters, as users write it.
    pub fn word_one_based(&self) -> Vec<usize> {
        self.word.iter().map(|i| i + 1).collect()
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn rho_image(&self) -> &Weight {
        &self.rho_image
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// Hyphen-joined 1-based word, `e` for the identity.
    pub fn label(&self) -> String {
        if self.word.is_empty() {
            "e".to_string()
        } else {
            self.word_one_based()
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join("-")
        }
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("e");
        }
        for i in &self.word {
            write!(f, "s{}", i + 1)?;
        }
        Ok(())
    }
}

/// A point of a Weyl orbit with its minimal-length coset representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPoint {
    pub weight: Weight,
    pub rep: WeylElement,
}

impl RootDatum {
    pub fn identity(&self) -> WeylElement {
        WeylElement { word: Vec::new(), rho_image: self.rho() }
    }

    /// Applies `w` to `mu` (rightmost letter first).
    pub fn act(&self, w: &WeylElement, mu: &Weight) -> Weight {
        self.act_word(&w.word, mu)
    }

    fn act_word(&self, word: &[usize], mu: &Weight) -> Weight {
        word.iter().rev().fold(mu.clone(), |acc, &i| self.simple_reflect(&acc, i))
    }

    /// Left descents of an element given by its image of a dominant weight:
    /// indices `i` with μ(α_i^∨) < 0.
    fn descents(&self, mu: &Weight) -> Vec<usize> {
        (0..self.rank())
            .filter(|&i| self.simple_pairing(mu, i).is_negative())
            .collect()
    }

    /// Lexicographically greatest reduced word of the minimal element taking
    /// the dominant weight of `mu`'s orbit to `mu`.
    fn canonical_word(&self, mu: &Weight) -> Vec<usize> {
        let mut word = Vec::new();
        let mut x = mu.clone();
        while let Some(&i) = self.descents(&x).last() {
            word.push(i);
            x = self.simple_reflect(&x, i);
        }
        word
    }

    pub fn element_from_rho_image(&self, rho_image: Weight) -> WeylElement {
        let word = self.canonical_word(&rho_image);
        WeylElement { word, rho_image }
    }

    /// Builds an element from a 1-based word, which must be reduced.
    pub fn element_from_word(&self, word: &[usize]) -> Result<WeylElement> {
        if let Some(&bad) = word.iter().find(|&&i| i == 0 || i > self.rank()) {
            return Err(Error::InvalidWeylElement(format!(
                "letter {bad} outside 1..={}",
                self.rank()
            )));
        }
        let zero_based: Vec<usize> = word.iter().map(|i| i - 1).collect();
        let image = self.act_word(&zero_based, &self.rho());
        let element = self.element_from_rho_image(image);
        if element.length() != word.len() {
            return Err(Error::InvalidWeylElement(format!(
                "word {word:?} is not reduced (element has length {})",
                element.length()
            )));
        }
        Ok(element)
    }

    /// The minimal-length element `v` with `v·λ = mu`, for `mu` in the orbit
    /// of the dominant weight `λ`.
    pub fn min_coset_rep(&self, mu: &Weight) -> WeylElement {
        let word = self.canonical_word(mu);
        let rho_image = self.act_word(&word, &self.rho());
        WeylElement { word, rho_image }
    }

    /// `s_i · w`.
    pub fn left_multiply(&self, i: usize, w: &WeylElement) -> WeylElement {
        self.element_from_rho_image(self.simple_reflect(&w.rho_image, i))
    }

    pub fn is_left_descent(&self, i: usize, w: &WeylElement) -> bool {
        self.simple_pairing(&w.rho_image, i).is_negative()
    }

    /// Bruhat order by the lifting criterion: for a left descent `s` of `w`,
    /// `u <= w` iff `min(u, su) <= sw`.
    pub fn bruhat_leq(&self, u: &WeylElement, w: &WeylElement) -> bool {
        let mut u = u.clone();
        let mut w = w.clone();
        loop {
            if u.length() > w.length() {
                return false;
            }
            if w.is_identity() {
                return u.is_identity();
            }
            let s = w.word[0];
            w = self.left_multiply(s, &w);
            if self.is_left_descent(s, &u) {
                u = self.left_multiply(s, &u);
            }
        }
    }

    /// Bruhat order by the subword property: `u <= w` iff some subword of a
    /// reduced word of `w` multiplies to `u`. Exponential; used as an oracle.
    pub fn bruhat_leq_subword(&self, u: &WeylElement, w: &WeylElement) -> bool {
        let n = w.word.len();
        assert!(n < usize::BITS as usize, "word too long for subset search");
        (0u64..1 << n).any(|mask| {
            let sub: Vec<usize> = (0..n)
                .filter(|&k| mask & (1 << k) != 0)
                .map(|k| w.word[k])
                .collect();
            self.act_word(&sub, &self.rho()) == u.rho_image
        })
    }

    /// All elements of W, by breadth-first search; refuses groups above `cap`.
    pub fn enumerate_group(&self, cap: usize) -> Result<Vec<WeylElement>> {
        self.enumerate_subgroup(&(0..self.rank()).collect::<Vec<_>>(), cap)
    }

    /// The parabolic subgroup generated by the given simple reflections.
    pub fn enumerate_subgroup(&self, generators: &[usize], cap: usize) -> Result<Vec<WeylElement>> {
        let rho = self.rho();
        let mut seen: HashSet<Weight> = HashSet::from([rho.clone()]);
        let mut queue = VecDeque::from([rho]);
        let mut out = Vec::new();
        while let Some(x) = queue.pop_front() {
            out.push(x.clone());
            if out.len() > cap {
                return Err(Error::GroupTooLarge { cap });
            }
            for &i in generators {
                let y = self.simple_reflect(&x, i);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<WeylElement> =
            out.into_iter().map(|x| self.element_from_rho_image(x)).collect();
        elements.sort_by(|a, b| a.length().cmp(&b.length()).then(a.word.cmp(&b.word)));
        Ok(elements)
    }

    /// Order of the stabiliser of a dominant weight, generated by the simple
    /// reflections fixing it.
    pub fn stabilizer_order(&self, lambda: &Weight) -> Result<usize> {
        let gens: Vec<usize> = (0..self.rank())
            .filter(|&i| self.simple_pairing(lambda, i).is_zero())
            .collect();
        Ok(self.enumerate_subgroup(&gens, DEFAULT_GROUP_CAP)?.len())
    }

    /// The orbit Wλ with minimal coset representatives, ordered by
    /// (length, word).
    pub fn weyl_orbit(&self, lambda: &Weight) -> Result<Vec<OrbitPoint>> {
        self.check_dominant_nonzero(lambda)?;
        let mut seen: HashSet<Weight> = HashSet::from([lambda.clone()]);
        let mut queue = VecDeque::from([lambda.clone()]);
        let mut points = Vec::new();
        while let Some(mu) = queue.pop_front() {
            points.push(mu.clone());
            if points.len() > DEFAULT_GROUP_CAP {
                return Err(Error::GroupTooLarge { cap: DEFAULT_GROUP_CAP });
            }
            for i in 0..self.rank() {
                let nu = self.simple_reflect(&mu, i);
                if seen.insert(nu.clone()) {
                    queue.push_back(nu);
                }
            }
        }
        let mut orbit: Vec<OrbitPoint> = points
            .into_iter()
            .map(|weight| OrbitPoint { rep: self.min_coset_rep(&weight), weight })
            .collect();
        orbit.sort_by(|a, b| {
            a.rep
                .length()
                .cmp(&b.rep.length())
                .then(a.rep.word.cmp(&b.rep.word))
        });
        Ok(orbit)
    }
}
