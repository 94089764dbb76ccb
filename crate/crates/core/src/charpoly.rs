//! Exact Laurent polynomials in `x^mu` (mu a weight) and `q`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::rootsys::Weight;

/// Finitely supported map `(weight, q exponent) -> coefficient`; zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CharPoly {
    terms: BTreeMap<(Weight, i64), i64>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    weight: Vec<i64>,
    q: i64,
    coeff: i64,
}

impl CharPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(Weight::zero(rank), 0, 1)
    }

    pub fn monomial(mu: Weight, q: i64, coeff: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(mu, q, coeff);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, mu: Weight, q: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let key = (mu, q);
        let c = self.terms.entry(key.clone()).or_insert(0);
        *c += coeff;
        if *c == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn add_assign(&mut self, other: &CharPoly) {
        for ((mu, q), c) in &other.terms {
            self.add_term(mu.clone(), *q, *c);
        }
    }

    /// `self + x^mu q^k other`.
    pub fn add_shifted(&mut self, other: &CharPoly, mu: &Weight, k: i64) {
        for ((nu, q), c) in &other.terms {
            self.add_term(nu.add(mu), q + k, *c);
        }
    }

    /// `x^mu q^k self`.
    pub fn shifted(&self, mu: &Weight, k: i64) -> CharPoly {
        let mut out = CharPoly::zero();
        out.add_shifted(self, mu, k);
        out
    }

    pub fn coeff(&self, mu: &Weight, q: i64) -> i64 {
        self.terms.get(&(mu.clone(), q)).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, i64, i64)> {
        self.terms.iter().map(|((mu, q), c)| (mu, *q, *c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Value at `x = 1, q = 1`.
    pub fn eval_one(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Specialization `q = 1`, keeping the weights.
    pub fn at_q_one(&self) -> BTreeMap<Weight, i64> {
        let mut out = BTreeMap::new();
        for ((mu, _), c) in &self.terms {
            *out.entry(mu.clone()).or_insert(0) += c;
        }
        out.retain(|_, c| *c != 0);
        out
    }

    /// Applies `x^mu -> x^{f(mu)}` to every term.
    pub fn map_weights(&self, f: impl Fn(&Weight) -> Weight) -> CharPoly {
        let mut out = CharPoly::zero();
        for ((mu, q), c) in &self.terms {
            out.add_term(f(mu), *q, *c);
        }
        out
    }

    /// `q -> q^{-1}`.
    pub fn invert_q(&self) -> CharPoly {
        let mut out = CharPoly::zero();
        for ((mu, q), c) in &self.terms {
            out.add_term(mu.clone(), -q, *c);
        }
        out
    }

    pub fn min_coeff(&self) -> Option<i64> {
        self.terms.values().copied().min()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<TermJson> = self
            .terms
            .iter()
            .map(|((mu, q), c)| TermJson { weight: mu.0.clone(), q: *q, coeff: *c })
            .collect();
        serde_json::to_value(rows).expect("terms serialize")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, serde_json::Error> {
        let rows: Vec<TermJson> = serde_json::from_value(v.clone())?;
        let mut p = CharPoly::zero();
        for r in rows {
            p.add_term(Weight(r.weight), r.q, r.coeff);
        }
        Ok(p)
    }

    /// Builds a polynomial from `(weight, q, coeff)` triples.
    pub fn from_terms<I: IntoIterator<Item = (Vec<i64>, i64, i64)>>(it: I) -> Self {
        let mut p = CharPoly::zero();
        for (mu, q, c) in it {
            p.add_term(Weight(mu), q, c);
        }
        p
    }
}

fn format_x(mu: &Weight) -> Option<String> {
    let rank_one = mu.dim() == 1;
    let parts: Vec<String> = mu
        .0
        .iter()
        .enumerate()
        .filter(|(_, &e)| e != 0)
        .map(|(i, &e)| {
            let base = if rank_one { "x".to_string() } else { format!("x{}", i + 1) };
            if e == 1 {
                base
            } else {
                format!("{base}^{e}")
            }
        })
        .collect();
    if parts.is_empty() {
        None
    } else {
        Some(parts.join("*"))
    }
}

impl fmt::Display for CharPoly {
    /// Terms in increasing weight order, e.g. `x^-2 + 1 + x^2` or
    /// `q^2*x1^-1*x2 + 2*q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (k, ((mu, q), c)) in self.terms.iter().enumerate() {
            let mut factors = Vec::new();
            let x = format_x(mu);
            let qs = match q {
                0 => None,
                1 => Some("q".to_string()),
                _ => Some(format!("q^{q}")),
            };
            if c.abs() != 1 || (x.is_none() && qs.is_none()) {
                factors.push(c.abs().to_string());
            }
            factors.extend(qs);
            factors.extend(x);
            let body = factors.join("*");
            if k == 0 {
                if *c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if *c < 0 { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        write!(f, "{out}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_format() {
        let p = CharPoly::from_terms([(vec![-2], 0, 1), (vec![0], 0, 1), (vec![2], 0, 1)]);
        assert_eq!(p.to_string(), "x^-2 + 1 + x^2");
        let p = CharPoly::from_terms([(vec![2], 0, 1), (vec![0], 1, 1), (vec![-2], 1, 1)]);
        assert_eq!(p.to_string(), "q*x^-2 + q + x^2");
        let p = CharPoly::from_terms([(vec![-1, 1], 2, 3), (vec![0, 0], 0, -1)]);
        assert_eq!(p.to_string(), "3*q^2*x1^-1*x2 - 1");
        assert_eq!(CharPoly::zero().to_string(), "0");
    }

    #[test]
    fn arithmetic() {
        let mut p = CharPoly::one(1);
        p.add_term(Weight(vec![0]), 0, -1);
        assert!(p.is_zero());
        let a = CharPoly::from_terms([(vec![1], 0, 2), (vec![-1], 3, 1)]);
        assert_eq!(a.eval_one(), 3);
        let b = a.shifted(&Weight(vec![2]), 1);
        assert_eq!(b.coeff(&Weight(vec![3]), 1), 2);
        assert_eq!(b.invert_q().invert_q(), b);
        let json = a.to_json();
        assert_eq!(CharPoly::from_json(&json).unwrap(), a);
    }
}
