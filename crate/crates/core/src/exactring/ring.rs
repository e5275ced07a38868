use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::Poly;
use super::RingError;

/// An exact commutative ring with identity.
///
/// Cloning is cheap; polynomial variable names are shared.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    Integers,
    Rationals,
    PrimeField(u64),
    Modular(u64),
    IntPolynomial(Arc<[String]>),
}

/// A ring element without its ring tag. Matrices store these and carry the
/// ring once; [`RingValue`] pairs an element with its ring for the public
/// scalar API.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Elem {
    Int(BigInt),
    Rat(BigRational),
    Residue(u64),
    Poly(Poly),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn inverse_mod(a: u64, m: u64) -> Option<u64> {
    let e = BigInt::from(a).extended_gcd(&BigInt::from(m));
    if !e.gcd.is_one() {
        return None;
    }
    e.x.mod_floor(&BigInt::from(m)).to_u64()
}

impl Ring {
    pub fn prime_field(p: u64) -> Result<Self, RingError> {
        if is_prime(p) {
            Ok(Ring::PrimeField(p))
        } else {
            Err(RingError::NotPrime(p))
        }
    }

    pub fn modular(n: u64) -> Result<Self, RingError> {
        if n >= 2 {
            Ok(Ring::Modular(n))
        } else {
            Err(RingError::ModulusTooSmall(n))
        }
    }

    /// Integer polynomials in the named variables (at least two, distinct).
    pub fn polynomial<S: AsRef<str>>(vars: &[S]) -> Result<Self, RingError> {
        let names: Vec<String> = vars.iter().map(|v| v.as_ref().trim().to_string()).collect();
        let valid_name = |v: &String| {
            !v.is_empty()
                && v.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
        };
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        if names.len() < 2 || sorted.len() != names.len() || !names.iter().all(valid_name) {
            return Err(RingError::BadVariables(names.join(",")));
        }
        Ok(Ring::IntPolynomial(names.into()))
    }

    fn modulus(&self) -> Option<u64> {
        match *self {
            Ring::PrimeField(p) => Some(p),
            Ring::Modular(n) => Some(n),
            _ => None,
        }
    }

    /// Number of elements, when finite.
    pub fn order(&self) -> Option<u64> {
        self.modulus()
    }

    pub fn variables(&self) -> &[String] {
        match self {
            Ring::IntPolynomial(v) => v,
            _ => &[],
        }
    }

    pub fn zero(&self) -> Elem {
        self.from_bigint(&BigInt::zero())
    }

    pub fn one(&self) -> Elem {
        self.from_bigint(&BigInt::one())
    }

    pub fn from_i64(&self, n: i64) -> Elem {
        self.from_bigint(&BigInt::from(n))
    }

    /// Image of an integer under the canonical morphism Z → R.
    pub fn from_bigint(&self, n: &BigInt) -> Elem {
        match self {
            Ring::Integers => Elem::Int(n.clone()),
            Ring::Rationals => Elem::Rat(BigRational::from_integer(n.clone())),
            Ring::PrimeField(m) | Ring::Modular(m) => {
                Elem::Residue(n.mod_floor(&BigInt::from(*m)).to_u64().unwrap())
            }
            Ring::IntPolynomial(v) => Elem::Poly(Poly::constant(v.len(), n.clone())),
        }
    }

    /// The `k`-th polynomial variable.
    pub fn var(&self, k: usize) -> Option<Elem> {
        match self {
            Ring::IntPolynomial(v) if k < v.len() => Some(Elem::Poly(Poly::var(v.len(), k))),
            _ => None,
        }
    }

    pub fn contains(&self, e: &Elem) -> bool {
        match (self, e) {
            (Ring::Integers, Elem::Int(_)) | (Ring::Rationals, Elem::Rat(_)) => true,
            (Ring::PrimeField(m) | Ring::Modular(m), Elem::Residue(r)) => r < m,
            (Ring::IntPolynomial(v), Elem::Poly(p)) => p.terms().all(|(e, _)| e.len() == v.len()),
            _ => false,
        }
    }

    pub fn is_zero(&self, e: &Elem) -> bool {
        match e {
            Elem::Int(n) => n.is_zero(),
            Elem::Rat(q) => q.is_zero(),
            Elem::Residue(r) => *r == 0,
            Elem::Poly(p) => p.is_zero(),
        }
    }

    pub fn is_one(&self, e: &Elem) -> bool {
        *e == self.one()
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match (a, b) {
            (Elem::Int(x), Elem::Int(y)) => Elem::Int(x + y),
            (Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x + y),
            (Elem::Residue(x), Elem::Residue(y)) => {
                let m = self.modulus().expect("residue outside a residue ring");
                Elem::Residue(((*x as u128 + *y as u128) % m as u128) as u64)
            }
            (Elem::Poly(x), Elem::Poly(y)) => Elem::Poly(x.add(y)),
            _ => panic!("ring element kinds do not match"),
        }
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match a {
            Elem::Int(x) => Elem::Int(-x),
            Elem::Rat(x) => Elem::Rat(-x),
            Elem::Residue(x) => {
                let m = self.modulus().expect("residue outside a residue ring");
                Elem::Residue(if *x == 0 { 0 } else { m - x })
            }
            Elem::Poly(x) => Elem::Poly(x.neg()),
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (a, b) {
            (Elem::Int(x), Elem::Int(y)) => Elem::Int(x * y),
            (Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x * y),
            (Elem::Residue(x), Elem::Residue(y)) => Elem::Residue(mul_mod(
                *x,
                *y,
                self.modulus().expect("residue outside a residue ring"),
            )),
            (Elem::Poly(x), Elem::Poly(y)) => Elem::Poly(x.mul(y)),
            _ => panic!("ring element kinds do not match"),
        }
    }

    /// Inverse of `a` if it is a unit, `None` otherwise.
    pub fn try_invert(&self, a: &Elem) -> Option<Elem> {
        match a {
            Elem::Int(x) => (x.abs().is_one()).then(|| Elem::Int(x.clone())),
            Elem::Rat(x) => (!x.is_zero()).then(|| Elem::Rat(x.recip())),
            Elem::Residue(x) => inverse_mod(*x, self.modulus()?).map(Elem::Residue),
            Elem::Poly(p) => {
                let c = p.as_constant()?;
                c.abs().is_one().then(|| Elem::Poly(p.clone()))
            }
        }
    }

    pub fn is_unit(&self, a: &Elem) -> bool {
        self.try_invert(a).is_some()
    }

    /// `a^k`; negative exponents require `a` to be a unit.
    pub fn pow(&self, a: &Elem, k: i64) -> Option<Elem> {
        let base = if k < 0 {
            self.try_invert(a)?
        } else {
            a.clone()
        };
        let mut exp = k.unsigned_abs();
        if let (Elem::Residue(r), Some(m)) = (&base, self.modulus()) {
            return Some(Elem::Residue(pow_mod(*r, exp, m)));
        }
        let mut acc = self.one();
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &sq);
            }
            exp >>= 1;
            if exp > 0 {
                sq = self.mul(&sq, &sq);
            }
        }
        Some(acc)
    }

    /// Least primitive root of a prime field, i.e. the least generator of
    /// its cyclic multiplicative group.
    pub fn primitive_root(&self) -> Option<u64> {
        let Ring::PrimeField(p) = *self else {
            return None;
        };
        if p == 2 {
            return Some(1);
        }
        let order = p - 1;
        let mut factors = Vec::new();
        let mut rest = order;
        let mut d = 2;
        while d * d <= rest {
            if rest % d == 0 {
                factors.push(d);
                while rest % d == 0 {
                    rest /= d;
                }
            }
            d += 1;
        }
        if rest > 1 {
            factors.push(rest);
        }
        (2..p).find(|&g| factors.iter().all(|&q| pow_mod(g, order / q, p) != 1))
    }

    /// Every element of a finite ring, in increasing residue order.
    pub fn elements(&self) -> Option<Vec<Elem>> {
        let m = self.modulus()?;
        Some((0..m).map(Elem::Residue).collect())
    }

    /// Every unit of a finite ring, in increasing residue order.
    pub fn units(&self) -> Option<Vec<Elem>> {
        let m = self.modulus()?;
        Some(
            (1..m)
                .filter(|&r| inverse_mod(r, m).is_some())
                .map(Elem::Residue)
                .collect(),
        )
    }

    pub fn format(&self, e: &Elem) -> String {
        match e {
            Elem::Int(x) => x.to_string(),
            Elem::Rat(q) => {
                if q.denom().is_one() {
                    q.numer().to_string()
                } else {
                    format!("{}/{}", q.numer(), q.denom())
                }
            }
            Elem::Residue(r) => r.to_string(),
            Elem::Poly(p) => p.format(self.variables()),
        }
    }

    /// Parses the decimal text form written by [`Ring::format`].
    pub fn parse(&self, s: &str) -> Result<Elem, RingError> {
        let bad = || RingError::Parse(format!("{s:?} is not an element of {self}"));
        let s = s.trim();
        match self {
            Ring::Integers => s.parse::<BigInt>().map(Elem::Int).map_err(|_| bad()),
            Ring::Rationals => {
                let q = match s.split_once('/') {
                    Some((n, d)) => {
                        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                        if d.is_zero() {
                            return Err(bad());
                        }
                        BigRational::new(n, d)
                    }
                    None => BigRational::from_integer(s.parse().map_err(|_| bad())?),
                };
                Ok(Elem::Rat(q))
            }
            Ring::PrimeField(_) | Ring::Modular(_) => {
                let n: BigInt = s.parse().map_err(|_| bad())?;
                Ok(self.from_bigint(&n))
            }
            Ring::IntPolynomial(v) => Poly::parse(s, v).map(Elem::Poly).ok_or_else(bad),
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => write!(f, "int"),
            Ring::Rationals => write!(f, "rat"),
            Ring::PrimeField(p) => write!(f, "gfp:{p}"),
            Ring::Modular(n) => write!(f, "mod:{n}"),
            Ring::IntPolynomial(v) => write!(f, "poly:{}", v.join(",")),
        }
    }
}

impl FromStr for Ring {
    type Err = RingError;

    /// Grammar: `int`, `rat`, `gfp:<p>`, `mod:<n>`, `poly:<v1>,<v2>,...`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || RingError::Parse(format!("unrecognised ring {s:?}"));
        match s.split_once(':') {
            None => match s {
                "int" => Ok(Ring::Integers),
                "rat" => Ok(Ring::Rationals),
                _ => Err(bad()),
            },
            Some(("gfp", p)) => Ring::prime_field(p.parse().map_err(|_| bad())?),
            Some(("mod", n)) => Ring::modular(n.parse().map_err(|_| bad())?),
            Some(("poly", vars)) => Ring::polynomial(&vars.split(',').collect::<Vec<_>>()),
            Some(_) => Err(bad()),
        }
    }
}

/// A ring element tagged with its ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingValue {
    ring: Ring,
    elem: Elem,
}

impl RingValue {
    pub fn new(ring: &Ring, elem: Elem) -> Result<Self, RingError> {
        if !ring.contains(&elem) {
            return Err(RingError::RingMismatch);
        }
        Ok(Self {
            ring: ring.clone(),
            elem,
        })
    }

    pub fn from_i64(ring: &Ring, n: i64) -> Self {
        Self {
            ring: ring.clone(),
            elem: ring.from_i64(n),
        }
    }

    pub fn zero(ring: &Ring) -> Self {
        Self::from_i64(ring, 0)
    }

    pub fn one(ring: &Ring) -> Self {
        Self::from_i64(ring, 1)
    }

    pub fn parse(ring: &Ring, s: &str) -> Result<Self, RingError> {
        Ok(Self {
            ring: ring.clone(),
            elem: ring.parse(s)?,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn elem(&self) -> &Elem {
        &self.elem
    }

    pub fn into_elem(self) -> Elem {
        self.elem
    }

    fn check(&self, other: &Self) -> Result<(), RingError> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(RingError::RingMismatch)
        }
    }

    fn wrap(&self, elem: Elem) -> Self {
        Self {
            ring: self.ring.clone(),
            elem,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, RingError> {
        self.check(other)?;
        Ok(self.wrap(self.ring.add(&self.elem, &other.elem)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, RingError> {
        self.check(other)?;
        Ok(self.wrap(self.ring.sub(&self.elem, &other.elem)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, RingError> {
        self.check(other)?;
        Ok(self.wrap(self.ring.mul(&self.elem, &other.elem)))
    }

    pub fn neg(&self) -> Self {
        self.wrap(self.ring.neg(&self.elem))
    }

    pub fn try_invert(&self) -> Option<Self> {
        self.ring.try_invert(&self.elem).map(|e| self.wrap(e))
    }

    pub fn pow(&self, k: i64) -> Option<Self> {
        self.ring.pow(&self.elem, k).map(|e| self.wrap(e))
    }

    pub fn is_zero(&self) -> bool {
        self.ring.is_zero(&self.elem)
    }
}

impl fmt::Display for RingValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ring.format(&self.elem))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn val(ring: &Ring, s: &str) -> RingValue {
        RingValue::parse(ring, s).unwrap()
    }

    #[test]
    fn small_arithmetic() {
        let z = Ring::Integers;
        assert_eq!(val(&z, "2").add(&val(&z, "3")).unwrap(), val(&z, "5"));
        let f5 = Ring::prime_field(5).unwrap();
        assert_eq!(val(&f5, "3").mul(&val(&f5, "4")).unwrap(), val(&f5, "2"));
        let p = Ring::polynomial(&["t", "u"]).unwrap();
        let lhs = val(&p, "1 + t").mul(&val(&p, "1 - t")).unwrap();
        assert_eq!(lhs, val(&p, "1 - t^2"));
    }

    #[test]
    fn inverses() {
        let m9 = Ring::modular(9).unwrap();
        assert_eq!(val(&m9, "2").try_invert(), Some(val(&m9, "5")));
        assert_eq!(val(&m9, "3").try_invert(), None);
        assert_eq!(val(&Ring::Integers, "2").try_invert(), None);
        assert_eq!(
            val(&Ring::Integers, "-1").try_invert(),
            Some(val(&Ring::Integers, "-1"))
        );
        let p = Ring::polynomial(&["t", "u"]).unwrap();
        assert_eq!(val(&p, "t").try_invert(), None);
        assert_eq!(val(&p, "-1").try_invert(), Some(val(&p, "-1")));
        let q = Ring::Rationals;
        assert_eq!(val(&q, "-2/6").try_invert(), Some(val(&q, "-3")));
        assert_eq!(val(&q, "0").try_invert(), None);
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        let a = RingValue::one(&Ring::Integers);
        let b = RingValue::one(&Ring::Rationals);
        assert_eq!(a.add(&b), Err(RingError::RingMismatch));
    }

    #[test]
    fn ring_name_grammar() {
        for text in ["int", "rat", "gfp:7", "mod:12", "poly:t,u"] {
            assert_eq!(text.parse::<Ring>().unwrap().to_string(), text);
        }
        assert_eq!("gfp:6".parse::<Ring>(), Err(RingError::NotPrime(6)));
        assert_eq!("mod:1".parse::<Ring>(), Err(RingError::ModulusTooSmall(1)));
        assert!("poly:t".parse::<Ring>().is_err());
        assert!("poly:t,t".parse::<Ring>().is_err());
        assert!("real".parse::<Ring>().is_err());
    }

    #[test]
    fn canonical_text_forms() {
        assert_eq!(val(&Ring::Integers, "-12").to_string(), "-12");
        assert_eq!(val(&Ring::Rationals, "4/-6").to_string(), "-2/3");
        assert_eq!(val(&Ring::prime_field(5).unwrap(), "-1").to_string(), "4");
    }

    #[test]
    fn primitive_roots() {
        let roots: Vec<_> = [2, 3, 5, 7, 11, 13, 23]
            .iter()
            .map(|&p| Ring::PrimeField(p).primitive_root().unwrap())
            .collect();
        assert_eq!(roots, vec![1, 2, 2, 3, 2, 2, 5]);
    }

    #[test]
    fn powers() {
        let f7 = Ring::prime_field(7).unwrap();
        assert_eq!(val(&f7, "3").pow(2), Some(val(&f7, "2")));
        assert_eq!(val(&f7, "3").pow(-1), Some(val(&f7, "5")));
        assert_eq!(val(&Ring::Integers, "2").pow(-1), None);
        assert_eq!(
            val(&Ring::Integers, "-1").pow(-3),
            Some(val(&Ring::Integers, "-1"))
        );
    }
}
