//! Dense univariate polynomials over the integers.
//!
//! Coefficients are stored in ascending order, so `coeffs()[i]` multiplies
//! `x^i`. The zero polynomial is the empty coefficient vector and every
//! other value has a nonzero last entry.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::frac::Frac;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BigPoly {
    coeffs: Vec<BigInt>,
}

impl BigPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        BigPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        BigPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    /// `x - r`, the linear factor vanishing at an integer.
    pub fn linear_root(r: BigInt) -> Self {
        Self::new(vec![-r, BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree of a polynomial known to be nonzero.
    fn deg(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn lead(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    /// The truncation `sum_{i<=n} a_i x^i`.
    pub fn section(&self, n: usize) -> BigPoly {
        let end = self.coeffs.len().min(n + 1);
        Self::new(self.coeffs[..end].to_vec())
    }

    pub fn scale(&self, c: &BigInt) -> BigPoly {
        if c.is_zero() {
            return Self::zero();
        }
        BigPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> BigPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        BigPoly { coeffs: v }
    }

    pub fn pow(&self, e: u32) -> BigPoly {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `p(-x)`.
    pub fn negate_variable(&self) -> BigPoly {
        BigPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact Horner evaluation at a rational point.
    pub fn eval_frac(&self, x: &Frac) -> Frac {
        let v = self.eval_homogeneous(x.num(), x.den());
        let n = self.degree().unwrap_or(0) as u32;
        Frac::new(v, num_traits::pow(x.den().clone(), n as usize)).expect("positive denominator")
    }

    /// `den^deg * p(num/den)`, an integer with the sign of `p(num/den)` when `den > 0`.
    pub fn eval_homogeneous(&self, num: &BigInt, den: &BigInt) -> BigInt {
        let Some(n) = self.degree() else {
            return BigInt::zero();
        };
        let mut acc = self.coeffs[n].clone();
        let mut dpow = BigInt::one();
        for c in self.coeffs[..n].iter().rev() {
            dpow *= den;
            acc = acc * num + c * &dpow;
        }
        acc
    }

    /// Sign of `p(x)` as -1, 0 or 1.
    pub fn sign_at(&self, x: &Frac) -> i32 {
        signum(&self.eval_homogeneous(x.num(), x.den()))
    }

    pub fn derivative(&self) -> BigPoly {
        BigPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Signed content and primitive part. The content carries the sign of
    /// the leading coefficient, so the primitive part has a positive one.
    pub fn content_primitive(&self) -> Result<(BigInt, BigPoly)> {
        let Some(lead) = self.lead() else {
            return Err(Error::ZeroPolynomial);
        };
        let mut g = self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if lead.is_negative() {
            g = -g;
        }
        Ok((g.clone(), BigPoly { coeffs: self.coeffs.iter().map(|c| c / &g).collect() }))
    }

    pub fn primitive_part(&self) -> Result<BigPoly> {
        Ok(self.content_primitive()?.1)
    }

    /// Divide every coefficient by the positive gcd, leaving the sign alone.
    pub(crate) fn primitive_keep_sign(&self) -> BigPoly {
        let g = self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        BigPoly { coeffs: self.coeffs.iter().map(|c| c / &g).collect() }
    }

    /// Pseudo-remainder `lc(d)^(deg p - deg d + 1) * p mod d`.
    pub fn pseudo_rem(&self, d: &BigPoly) -> Result<BigPoly> {
        let Some(dd) = d.degree() else {
            return Err(Error::DivisionByZero);
        };
        let Some(pd) = self.degree() else {
            return Ok(Self::zero());
        };
        if pd < dd {
            return Ok(self.clone());
        }
        let lc = &d.coeffs[dd];
        let mut r = self.coeffs.clone();
        let mut steps = pd - dd + 1;
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1;
            let top = r[k].clone();
            for c in r.iter_mut() {
                *c *= lc;
            }
            let off = k - dd;
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[off + j] -= &top * dc;
            }
            steps -= 1;
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        if steps > 0 {
            let f = num_traits::pow(lc.clone(), steps);
            for c in r.iter_mut() {
                *c *= &f;
            }
        }
        Ok(BigPoly::new(r))
    }

    /// Exact quotient `self / d` over the integers, or `None` when `d` does
    /// not divide `self` in `Z[x]`.
    pub fn div_exact(&self, d: &BigPoly) -> Option<BigPoly> {
        let dd = d.degree()?;
        let Some(pd) = self.degree() else {
            return Some(Self::zero());
        };
        if pd < dd {
            return None;
        }
        let lc = &d.coeffs[dd];
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); pd - dd + 1];
        for k in (dd..=pd).rev() {
            if r[k].is_zero() {
                continue;
            }
            let (t, rem) = r[k].div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            let off = k - dd;
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[off + j] -= &t * dc;
            }
            q[off] = t;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(BigPoly::new(q))
    }

    /// Greatest common divisor, primitive with positive leading coefficient,
    /// via the subresultant pseudo-remainder sequence.
    pub fn gcd(&self, other: &BigPoly) -> Result<BigPoly> {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Err(Error::GcdOfZeros),
            (true, false) => return other.primitive_part(),
            (false, true) => return self.primitive_part(),
            _ => {}
        }
        let (mut a, mut b) = if self.deg() >= other.deg() {
            (self.primitive_part()?, other.primitive_part()?)
        } else {
            (other.primitive_part()?, self.primitive_part()?)
        };
        let mut g = BigInt::one();
        let mut h = BigInt::one();
        loop {
            let delta = a.deg() - b.deg();
            let r = a.pseudo_rem(&b)?;
            if r.is_zero() {
                break;
            }
            if r.deg() == 0 {
                return Ok(BigPoly::one());
            }
            let div = &g * num_traits::pow(h.clone(), delta);
            a = b;
            b = BigPoly { coeffs: r.coeffs.iter().map(|c| c / &div).collect() };
            g = a.lead().expect("nonzero").clone();
            // h <- g^delta / h^(delta - 1)
            h = if delta == 0 {
                h
            } else {
                num_traits::pow(g.clone(), delta) / num_traits::pow(h, delta - 1)
            };
        }
        b.primitive_part()
    }

    /// The reciprocal polynomial `x^deg * p(1/x)`.
    pub fn reciprocal(&self) -> Result<BigPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(BigPoly::new(self.coeffs.iter().rev().cloned().collect()))
    }

    /// Whether `gcd(p, p') = 1`. Tries a few word-sized primes first; a
    /// modular gcd of degree zero at a prime not dividing the leading
    /// coefficient certifies the integer gcd is trivial.
    pub fn is_squarefree(&self) -> Result<bool> {
        let Some(n) = self.degree() else {
            return Err(Error::ZeroPolynomial);
        };
        if n == 0 {
            return Ok(true);
        }
        if modular_squarefree_certificate(self) {
            return Ok(true);
        }
        Ok(self.gcd(&self.derivative())?.deg() == 0)
    }

    /// Yun's square-free decomposition.
    pub fn squarefree_decompose(&self) -> Result<SqfDecomp> {
        let (content, f) = self.content_primitive()?;
        if f.deg() == 0 {
            return Ok(SqfDecomp { content, factors: Vec::new() });
        }
        if modular_squarefree_certificate(&f) {
            return Ok(SqfDecomp { content, factors: vec![(f, 1)] });
        }
        let df = f.derivative();
        let a0 = f.gcd(&df)?;
        let mut b = f.div_exact(&a0).expect("gcd divides f");
        let c = df.div_exact(&a0).expect("gcd divides f'");
        let mut d = &c - &b.derivative();
        let mut factors = Vec::new();
        let mut i = 1u32;
        while b.deg() > 0 {
            let a = if d.is_zero() { b.primitive_part()? } else { b.gcd(&d)? };
            let nb = b.div_exact(&a).expect("gcd divides b");
            let nc = d.div_exact(&a).expect("gcd divides d");
            if a.deg() > 0 {
                factors.push((a, i));
            }
            d = &nc - &nb.derivative();
            b = nb;
            i += 1;
        }
        Ok(SqfDecomp { content, factors })
    }

    /// Ascending decimal coefficients separated by single spaces.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
    }
}

fn signum(v: &BigInt) -> i32 {
    match v.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

const CERT_PRIMES: [u64; 3] = [2_305_843_009_213_693_951, 18_446_744_073_709_551_557, 4_294_967_291];

fn modular_squarefree_certificate(p: &BigPoly) -> bool {
    let n = p.deg();
    CERT_PRIMES.iter().any(|&m| {
        let mb = BigInt::from(m);
        let reduce = |c: &BigInt| c.mod_floor(&mb).to_u64().expect("reduced below modulus");
        if reduce(&p.coeffs[n]) == 0 {
            return false;
        }
        let f: Vec<u64> = p.coeffs.iter().map(reduce).collect();
        let df: Vec<u64> = (1..=n).map(|i| mulmod(f[i], i as u64 % m, m)).collect();
        modp_gcd_degree(f, df, m) == Some(0)
    })
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1;
    }
    r
}

fn trim_modp(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Degree of `gcd(a, b)` over `F_m`, `None` if both vanish.
fn modp_gcd_degree(mut a: Vec<u64>, mut b: Vec<u64>, m: u64) -> Option<usize> {
    trim_modp(&mut a);
    trim_modp(&mut b);
    while !b.is_empty() {
        // a <- a mod b
        let db = b.len() - 1;
        let inv = powmod(b[db], m - 2, m);
        while a.len() > db {
            let k = a.len() - 1;
            let t = mulmod(a[k], inv, m);
            let off = k - db;
            for (j, &bc) in b.iter().enumerate() {
                let s = mulmod(t, bc, m);
                let v = a[off + j];
                a[off + j] = if v >= s { v - s } else { v + (m - s) };
            }
            trim_modp(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().checked_sub(1)
}

/// `content * prod factor^multiplicity`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SqfDecomp {
    pub content: BigInt,
    pub factors: Vec<(BigPoly, u32)>,
}

impl SqfDecomp {
    pub fn reconstruct(&self) -> BigPoly {
        let mut acc = BigPoly::constant(self.content.clone());
        for (f, e) in &self.factors {
            acc = &acc * &f.pow(*e);
        }
        acc
    }
}

impl fmt::Display for BigPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for BigPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let toks: Vec<&str> = s.split_whitespace().collect();
        if toks.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        toks.iter()
            .map(|t| t.parse::<BigInt>().map_err(|_| Error::Parse(format!("not an integer: {t:?}"))))
            .collect::<Result<Vec<_>>>()
            .map(BigPoly::new)
    }
}

impl Add for &BigPoly {
    type Output = BigPoly;
    fn add(self, rhs: &BigPoly) -> BigPoly {
        let (long, short) =
            if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut v = long.coeffs.clone();
        for (a, b) in v.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        BigPoly::new(v)
    }
}

impl Neg for &BigPoly {
    type Output = BigPoly;
    fn neg(self) -> BigPoly {
        BigPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub for &BigPoly {
    type Output = BigPoly;
    fn sub(self, rhs: &BigPoly) -> BigPoly {
        self + &(-rhs)
    }
}

impl Mul for &BigPoly {
    type Output = BigPoly;
    fn mul(self, rhs: &BigPoly) -> BigPoly {
        if self.is_zero() || rhs.is_zero() {
            return BigPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        BigPoly::new(v)
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for BigPoly {
            type Output = BigPoly;
            fn $m(self, rhs: BigPoly) -> BigPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

/// Polynomial with rational coefficients, ascending.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RatPoly {
    pub coeffs: Vec<Frac>,
}

impl RatPoly {
    pub fn from_int(p: &BigPoly) -> Self {
        RatPoly { coeffs: p.coeffs().iter().cloned().map(Frac::from_int).collect() }
    }

    /// Multiply by the positive lcm of the denominators.
    pub fn clear_denominators(&self) -> BigPoly {
        let l = self.coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(c.den()));
        BigPoly::new(self.coeffs.iter().map(|c| c.num() * (&l / c.den())).collect())
    }

    pub fn to_text(&self) -> String {
        self.coeffs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> BigPoly {
        BigPoly::from_i64s(c)
    }

    #[test]
    fn ring_operations() {
        assert!((&p(&[1, 1]) + &p(&[-1, -1])).is_zero());
        assert_eq!(&p(&[-1, 1]) * &p(&[1, 1]), p(&[-1, 0, 1]));
        assert_eq!(p(&[4, 2]).scale(&3.into()), p(&[12, 6]));
        assert_eq!(p(&[0, 0, 0]), BigPoly::zero());
        assert_eq!(BigPoly::zero().degree(), None);
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(&[-2, 0, 1]).eval_frac(&Frac::ratio(3, 2)), Frac::ratio(1, 4));
        let q = p(&[5, -3, 8, 1]);
        assert_eq!(q.eval_frac(&Frac::zero()), Frac::from(5));
        // term-by-term oracle
        let c = p(&[13827, 2456, 99, 1]);
        let x = Frac::from(-7);
        let mut sum = Frac::zero();
        for (i, a) in c.coeffs().iter().enumerate() {
            sum = sum + Frac::from_int(a.clone()) * x.pow(i as u32);
        }
        assert_eq!(c.eval_frac(&x), sum);
        assert_eq!(sum, Frac::from(-343 + 99 * 49 - 2456 * 7 + 13827));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p(&[0, 0, 0, 1]).derivative(), p(&[0, 0, 3]));
        assert!(p(&[7]).derivative().is_zero());
        assert_eq!(p(&[1, -2, 1]).derivative(), p(&[-2, 2]));
    }

    #[test]
    fn content_examples() {
        assert_eq!(p(&[-6, 0, 6]).content_primitive().unwrap(), (6.into(), p(&[-1, 0, 1])));
        assert_eq!(p(&[0, -2]).content_primitive().unwrap(), ((-2).into(), p(&[0, 1])));
        assert_eq!(p(&[1, 0, 1]).content_primitive().unwrap(), (1.into(), p(&[1, 0, 1])));
        assert_eq!(BigPoly::zero().content_primitive(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 1])).unwrap(), p(&[-1, 1]));
        assert_eq!(p(&[1, 0, 1]).gcd(&p(&[-1, 0, 1])).unwrap(), BigPoly::one());
        // (x-1)^2 (x+2) and (x-1)(x+3)
        let a = &p(&[-1, 1]).pow(2) * &p(&[2, 1]);
        let b = &p(&[-1, 1]) * &p(&[3, 1]);
        assert_eq!(a.coeffs(), p(&[2, -3, 0, 1]).coeffs());
        let g = a.gcd(&b).unwrap();
        assert_eq!(g, p(&[-1, 1]));
        assert!(a.div_exact(&g).is_some() && b.div_exact(&g).is_some());
        assert_eq!(BigPoly::zero().gcd(&BigPoly::zero()), Err(Error::GcdOfZeros));
    }

    #[test]
    fn squarefree_examples() {
        let a = &p(&[-1, 1]).pow(2) * &p(&[2, 1]);
        let d = a.squarefree_decompose().unwrap();
        assert_eq!(d.content, 1.into());
        assert_eq!(d.factors, vec![(p(&[2, 1]), 1), (p(&[-1, 1]), 2)]);

        let d = p(&[-6, 0, 6]).squarefree_decompose().unwrap();
        assert_eq!(d.content, 6.into());
        assert_eq!(d.factors, vec![(p(&[-1, 0, 1]), 1)]);

        let d = p(&[1, 0, 1]).pow(3).scale(&4.into()).squarefree_decompose().unwrap();
        assert_eq!(d.content, 4.into());
        assert_eq!(d.factors, vec![(p(&[1, 0, 1]), 3)]);

        let d = p(&[-5]).squarefree_decompose().unwrap();
        assert_eq!(d.content, (-5).into());
        assert!(d.factors.is_empty());
        assert_eq!(BigPoly::zero().squarefree_decompose(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(p(&[13827, 2456, 99, 1]).reciprocal().unwrap(), p(&[1, 99, 2456, 13827]));
        assert_eq!(p(&[1, 0, 1]).reciprocal().unwrap(), p(&[1, 0, 1]));
        assert_eq!(p(&[3, 2]).reciprocal().unwrap(), p(&[2, 3]));
        assert_eq!(p(&[0, 3, 2]).reciprocal().unwrap(), p(&[2, 3]));
        assert_eq!(BigPoly::zero().reciprocal(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn text_format() {
        let q: BigPoly = "13827 2456 99 1".parse().unwrap();
        assert_eq!(q, p(&[13827, 2456, 99, 1]));
        assert_eq!(q.to_string(), "13827 2456 99 1");
        assert!("".parse::<BigPoly>().is_err());
        assert!("1 2.5".parse::<BigPoly>().is_err());
        assert!("1 x".parse::<BigPoly>().is_err());
    }

    #[test]
    fn pseudo_remainder_is_exact_multiple() {
        let a = p(&[3, 0, 2, 5, 1]);
        let b = p(&[1, 0, 3]);
        let r = a.pseudo_rem(&b).unwrap();
        // lc(b)^3 * a - r must be divisible by b
        let lhs = &a.scale(&27.into()) - &r;
        assert!(lhs.div_exact(&b).is_some());
        assert!(r.degree().unwrap() < 2);
    }

    #[test]
    fn modular_certificate_is_not_fooled_by_squares() {
        let sq = &p(&[-3, 1]).pow(2) * &p(&[1, 1, 1]);
        assert!(!sq.is_squarefree().unwrap());
        assert!(p(&[-2, 0, 1]).is_squarefree().unwrap());
    }

    fn arb_poly(max_deg: usize, bound: i64) -> impl Strategy<Value = BigPoly> {
        prop::collection::vec(-bound..=bound, 1..=max_deg + 1).prop_map(|v| BigPoly::from_i64s(&v))
    }

    fn arb_nonzero_frac() -> impl Strategy<Value = Frac> {
        (-50i64..=50, 1i64..=30)
            .prop_filter("nonzero", |(n, _)| *n != 0)
            .prop_map(|(n, d)| Frac::ratio(n, d))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]

        #[test]
        fn squarefree_reconstructs(q in arb_poly(20, 100), r in arb_poly(3, 5)) {
            // multiply by a small square so repeated factors actually occur
            let q = if r.degree().unwrap_or(0) > 0 { &q * &r.pow(2) } else { q };
            prop_assume!(!q.is_zero());
            let d = q.squarefree_decompose().unwrap();
            prop_assert_eq!(d.reconstruct(), q);
            for (i, (f, _)) in d.factors.iter().enumerate() {
                prop_assert!(f.degree().unwrap() >= 1);
                prop_assert!(f.lead().unwrap().is_positive());
                prop_assert_eq!(f.gcd(&f.derivative()).unwrap(), BigPoly::one());
                for (g, _) in &d.factors[i + 1..] {
                    prop_assert_eq!(f.gcd(g).unwrap(), BigPoly::one());
                }
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn gcd_divides_and_scales(a in arb_poly(8, 20), b in arb_poly(8, 20), r in arb_poly(4, 10)) {
            prop_assume!(!a.is_zero() && !b.is_zero() && !r.is_zero());
            let g = a.gcd(&b).unwrap();
            prop_assert!(a.pseudo_rem(&g).unwrap().is_zero());
            prop_assert!(b.pseudo_rem(&g).unwrap().is_zero());
            let gr = (&a * &r).gcd(&(&b * &r)).unwrap();
            let expect = (&r.primitive_part().unwrap() * &g).primitive_part().unwrap();
            prop_assert_eq!(gr, expect);
        }

        #[test]
        fn reciprocal_evaluation_identity(q in arb_poly(12, 30), x in arb_nonzero_frac()) {
            prop_assume!(!q.is_zero());
            let n = q.degree().unwrap() as u32;
            let lhs = q.reciprocal().unwrap().eval_frac(&x.recip().unwrap()) * x.pow(n);
            prop_assert_eq!(lhs, q.eval_frac(&x));
        }

        #[test]
        fn derivative_is_linear(a in arb_poly(15, 50), b in arb_poly(15, 50)) {
            prop_assert_eq!((&a + &b).derivative(), &a.derivative() + &b.derivative());
        }
    }
}
