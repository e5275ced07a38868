//! Multivariate polynomials with integer coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by exponent vectors, so two equal
//! polynomials always have identical representations. Zero coefficients are
//! never stored.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    /// The polynomial consisting of the single variable `k`.
    pub fn var(nvars: usize, k: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[k] = 1;
        Self::monomial(exps, BigInt::one())
    }

    pub fn monomial(exps: Vec<u32>, c: BigInt) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Returns the constant coefficient if the polynomial has degree ≤ 0.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => {
                let (exps, c) = self.terms.iter().next().unwrap();
                exps.iter().all(|&e| e == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    fn add_term(&mut self, exps: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
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

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exps, ca * cb);
            }
        }
        out
    }

    /// Formats the polynomial using the given variable names, highest
    /// total degree first, e.g. `3*t^2*u - u + 1`.
    pub fn format(&self, vars: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        let mut out = String::new();
        for (k, (exps, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let abs = c.abs();
            let mut factors = Vec::new();
            if !abs.is_one() || exps.iter().all(|&e| e == 0) {
                factors.push(abs.to_string());
            }
            for (v, &e) in vars.iter().zip(exps.iter()) {
                match e {
                    0 => {}
                    1 => factors.push(v.clone()),
                    _ => factors.push(format!("{v}^{e}")),
                }
            }
            let _ = write!(out, "{}", factors.join("*"));
        }
        out
    }

    /// Parses the format produced by [`Poly::format`]. Whitespace is ignored.
    pub fn parse(s: &str, vars: &[String]) -> Option<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return None;
        }
        let mut out = Self::zero();
        let mut chunks = Vec::new();
        let mut current = String::new();
        for (k, ch) in compact.chars().enumerate() {
            if (ch == '+' || ch == '-') && k > 0 && !current.ends_with('^') {
                chunks.push(std::mem::take(&mut current));
            }
            current.push(ch);
        }
        chunks.push(current);
        for chunk in chunks {
            let (sign, body) = match chunk.strip_prefix('-') {
                Some(rest) => (-1, rest),
                None => (1, chunk.strip_prefix('+').unwrap_or(&chunk)),
            };
            if body.is_empty() {
                return None;
            }
            let mut coeff = BigInt::from(sign);
            let mut exps = vec![0u32; vars.len()];
            for factor in body.split('*') {
                if let Ok(n) = factor.parse::<BigInt>() {
                    coeff *= n;
                    continue;
                }
                let (name, power) = match factor.split_once('^') {
                    Some((n, p)) => (n, p.parse::<u32>().ok()?),
                    None => (factor, 1),
                };
                let idx = vars.iter().position(|v| v == name)?;
                exps[idx] += power;
            }
            out.add_term(exps, coeff);
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars() -> Vec<String> {
        vec!["t".into(), "u".into()]
    }

    #[test]
    fn difference_of_squares() {
        let one = Poly::constant(2, BigInt::one());
        let t = Poly::var(2, 0);
        let lhs = one.add(&t).mul(&one.sub(&t));
        let rhs = one.sub(&t.mul(&t));
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.format(&vars()), "-t^2 + 1");
    }

    #[test]
    fn format_parse_round_trip() {
        let p = Poly::parse("3*t^2*u - u + 1 - 2*t*u^3", &vars()).unwrap();
        let again = Poly::parse(&p.format(&vars()), &vars()).unwrap();
        assert_eq!(p, again);
        assert_eq!(p.total_degree(), 4);
        assert!(Poly::parse("3*v", &vars()).is_none());
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let t = Poly::var(2, 0);
        assert!(t.sub(&t).is_zero());
        assert_eq!(t.sub(&t).as_constant(), Some(BigInt::zero()));
    }
}
