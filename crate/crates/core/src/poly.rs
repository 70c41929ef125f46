//! Sparse commutative polynomials with exact coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::scalar::Scalar;

/// Exponent vector. Ordered by total degree, then by the sorted word of
/// variable indices (so `u3^2 < u3*u4 < u4^2`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_word(nvars: usize, word: &[usize]) -> Self {
        let mut e = vec![0; nvars];
        for &i in word {
            e[i] += 1;
        }
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    /// Variable indices with multiplicity, ascending.
    pub fn word(&self) -> Vec<usize> {
        let mut w = Vec::with_capacity(self.degree());
        for (i, &e) in self.0.iter().enumerate() {
            for _ in 0..e {
                w.push(i);
            }
        }
        w
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `u3^2`, `u3*u4`, `1`; variables numbered from one.
    pub fn render(&self, var: &str) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("{var}{}", i + 1)
                } else {
                    format!("{var}{}^{e}", i + 1)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// All monomials of degree `d` in the listed variables, ascending.
    pub fn all_of_degree(nvars: usize, vars: &[usize], d: usize) -> Vec<Monomial> {
        fn rec(
            vars: &[usize],
            start: usize,
            left: usize,
            cur: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if left == 0 {
                out.push(cur.clone());
                return;
            }
            for k in start..vars.len() {
                cur.push(vars[k]);
                rec(vars, k, left - 1, cur, out);
                cur.pop();
            }
        }
        let mut sorted = vars.to_vec();
        sorted.sort_unstable();
        let mut words = Vec::new();
        rec(&sorted, 0, d, &mut Vec::new(), &mut words);
        let mut out: Vec<Monomial> = words
            .iter()
            .map(|w| Monomial::from_word(nvars, w))
            .collect();
        out.sort();
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.word().cmp(&other.word()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial as a map from monomials to non-zero coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<T: Scalar> {
    nvars: usize,
    terms: BTreeMap<Monomial, T>,
}

impl<T: Scalar> Poly<T> {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: T) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::term(Monomial::var(nvars, i), T::one())
    }

    pub fn term(m: Monomial, c: T) -> Self {
        let mut p = Poly::zero(m.nvars());
        p.add_term(m, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &T)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> T {
        self.terms.get(m).cloned().unwrap_or_else(T::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: T) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.remove(&m).unwrap_or_else(T::zero) + c;
        if !entry.is_zero() {
            self.terms.insert(m, entry);
        }
    }

    pub fn add(&self, other: &Poly<T>) -> Poly<T> {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &T) -> Poly<T> {
        let mut out = Poly::zero(self.nvars);
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x.clone() * c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Poly<T>) -> Poly<T> {
        let mut out = Poly::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.mul(b), x.clone() * y.clone());
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Poly<T> {
        let mut out = Poly::constant(self.nvars, T::one());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Replaces each variable `u_i` by `images[i]`.
    pub fn substitute(&self, images: &[Poly<T>]) -> Poly<T> {
        let nv = images.first().map_or(self.nvars, |p| p.nvars);
        let mut out = Poly::zero(nv);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(nv, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&images[i].pow(e));
                }
            }
            out = out.add(&t);
        }
        out
    }

    /// Homogeneous component of degree `d`.
    pub fn component(&self, d: usize) -> Poly<T> {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            if m.degree() == d {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    /// Largest degree present, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Terms listed from the largest monomial down, e.g. `2*x2^2 - 4*x1*x2`.
    pub fn render(&self, var: &str) -> String
    where
        T: Signed2,
    {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let (neg, mag) = c.split_sign();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = m.render(var);
            if mono == "1" {
                let _ = write!(s, "{mag}");
            } else if mag == "1" {
                s.push_str(&mono);
            } else {
                let _ = write!(s, "{mag}*{mono}");
            }
        }
        s
    }
}

/// Sign split used when printing coefficients.
pub trait Signed2 {
    /// (is negative, magnitude as text)
    fn split_sign(&self) -> (bool, String);
}

impl Signed2 for num_bigint::BigInt {
    fn split_sign(&self) -> (bool, String) {
        (
            self.sign() == num_bigint::Sign::Minus,
            self.magnitude().to_string(),
        )
    }
}

impl Signed2 for i64 {
    fn split_sign(&self) -> (bool, String) {
        (*self < 0, self.unsigned_abs().to_string())
    }
}

impl Signed2 for crate::scalar::Gf2 {
    fn split_sign(&self) -> (bool, String) {
        (false, self.to_string())
    }
}

impl Signed2 for crate::Rational {
    fn split_sign(&self) -> (bool, String) {
        use num_traits::Signed;
        (self.is_negative(), self.abs().to_string())
    }
}
