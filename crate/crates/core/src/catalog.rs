//! Generators for the integer sequence families under study.
//!
//! Every family is indexed so that `a_0 != 0`. The arithmetic families are
//! shifted by one (`phi(n+1)`, `mu(n+1)`, `sigma_j(n+1)`) and the prime
//! counting family by two (`pi(n+2)`).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::frac::Frac;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeqSpec {
    /// `a_n = p_{n+1}`, the `(n+1)`-th prime.
    Primes,
    /// `a_n = F_{n+1}`.
    Fibonacci,
    /// Order-`k` Fibonacci numbers starting at the first 1.
    KFibonacci { k: u32 },
    /// `a_n = c^n`.
    Exponential { c: i64 },
    /// `a_n = C(n+k, k)`.
    Binomial { k: u32 },
    NPlus1,
    NPlus1Sq,
    /// `a_n = (n+1)^k`.
    Power { k: u32 },
    Catalan,
    /// `C(2n, n)`.
    CentralBinomial,
    /// `C(2n+1, n)`.
    CentralBinomialOdd,
    Factorial,
    /// `(2n-1)!!`, with `a_0 = 1`.
    DoubleFactorialOdd,
    /// `(2n)!!`.
    DoubleFactorialEven,
    /// `a_0 = 1`, `a_n = n^n`.
    SelfPower,
    /// `a_n = 2^(n^k)`.
    TwoPowNPowK { k: u32 },
    /// `a_n = phi(n+1)`.
    EulerPhi,
    /// `a_n = pi(n+2)`.
    PrimePi,
    /// `a_n = mu(n+1)`.
    Moebius,
    /// `a_n = sigma_j(n+1)`.
    Sigma { j: u32 },
    /// `a_n = a n^2 + b n + c`, scaled by the lcm of the denominators.
    Quadratic { a: Frac, b: Frac, c: Frac },
}

/// Family names accepted by [`SeqSpec::from_name`], with their parameters.
pub const FAMILIES: &[(&str, &str)] = &[
    ("primes", ""),
    ("fibonacci", ""),
    ("k-fibonacci", "--k K (K >= 2)"),
    ("exponential", "--c C (C != 0)"),
    ("binomial", "--k K (K >= 1)"),
    ("n-plus-1", ""),
    ("n-plus-1-sq", ""),
    ("power", "--k K (K >= 1)"),
    ("catalan", ""),
    ("central-binomial", ""),
    ("central-binomial-odd", ""),
    ("factorial", ""),
    ("double-factorial-odd", ""),
    ("double-factorial-even", ""),
    ("self-power", ""),
    ("two-pow", "--k K (K >= 2)"),
    ("phi", ""),
    ("pi", ""),
    ("mu", ""),
    ("sigma", "--j J (J >= 1)"),
    ("quadratic", "--a A --b B --c C (rationals)"),
];

/// Raw parameter strings, as they come from a command line.
#[derive(Clone, Debug, Default)]
pub struct SeqParams {
    pub k: Option<String>,
    pub c: Option<String>,
    pub j: Option<String>,
    pub a: Option<String>,
    pub b: Option<String>,
}

fn need<'a>(v: &'a Option<String>, flag: &str, family: &str) -> Result<&'a str> {
    v.as_deref().ok_or_else(|| Error::InvalidParameter(format!("{family} requires --{flag}")))
}

fn parse_int<T: std::str::FromStr>(s: &str, flag: &str) -> Result<T> {
    s.trim().parse().map_err(|_| Error::Parse(format!("--{flag}: not an integer: {s:?}")))
}

impl SeqSpec {
    pub fn from_name(name: &str, p: &SeqParams) -> Result<SeqSpec> {
        let k = || -> Result<u32> { parse_int(need(&p.k, "k", name)?, "k") };
        let spec = match name {
            "primes" => SeqSpec::Primes,
            "fibonacci" => SeqSpec::Fibonacci,
            "k-fibonacci" => SeqSpec::KFibonacci { k: k()? },
            "exponential" => SeqSpec::Exponential { c: parse_int(need(&p.c, "c", name)?, "c")? },
            "binomial" => SeqSpec::Binomial { k: k()? },
            "n-plus-1" => SeqSpec::NPlus1,
            "n-plus-1-sq" => SeqSpec::NPlus1Sq,
            "power" => SeqSpec::Power { k: k()? },
            "catalan" => SeqSpec::Catalan,
            "central-binomial" => SeqSpec::CentralBinomial,
            "central-binomial-odd" => SeqSpec::CentralBinomialOdd,
            "factorial" => SeqSpec::Factorial,
            "double-factorial-odd" => SeqSpec::DoubleFactorialOdd,
            "double-factorial-even" => SeqSpec::DoubleFactorialEven,
            "self-power" => SeqSpec::SelfPower,
            "two-pow" => SeqSpec::TwoPowNPowK { k: k()? },
            "phi" => SeqSpec::EulerPhi,
            "pi" => SeqSpec::PrimePi,
            "mu" => SeqSpec::Moebius,
            "sigma" => SeqSpec::Sigma { j: parse_int(need(&p.j, "j", name)?, "j")? },
            "quadratic" => SeqSpec::Quadratic {
                a: need(&p.a, "a", name)?.parse()?,
                b: need(&p.b, "b", name)?.parse()?,
                c: need(&p.c, "c", name)?.parse()?,
            },
            other => {
                let names: Vec<&str> = FAMILIES.iter().map(|f| f.0).collect();
                return Err(Error::InvalidParameter(format!(
                    "unknown family {other:?}; known families: {}",
                    names.join(", ")
                )));
            }
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidParameter(m.to_string()));
        match self {
            SeqSpec::KFibonacci { k } if *k < 2 => bad("k-fibonacci needs k >= 2"),
            SeqSpec::Exponential { c: 0 } => bad("exponential needs c != 0"),
            SeqSpec::Binomial { k } if *k < 1 => bad("binomial needs k >= 1"),
            SeqSpec::Power { k } if *k < 1 => bad("power needs k >= 1"),
            SeqSpec::TwoPowNPowK { k } if *k < 2 => bad("two-pow needs k >= 2"),
            SeqSpec::Sigma { j } if *j < 1 => bad("sigma needs j >= 1"),
            SeqSpec::Quadratic { a, b, c } if a.is_zero() && b.is_zero() && c.is_zero() => {
                bad("quadratic needs a nonzero coefficient")
            }
            _ => Ok(()),
        }
    }

    /// Terms `a_0 ..= a_{n_max}`.
    pub fn generate(&self, n_max: usize) -> Result<Vec<BigInt>> {
        self.validate()?;
        let len = n_max + 1;
        let big = |v: u64| BigInt::from(v);
        let terms = match self {
            SeqSpec::Primes => {
                let primes = first_primes(len);
                primes.into_iter().map(big).collect()
            }
            SeqSpec::Fibonacci => k_fibonacci(2, len),
            SeqSpec::KFibonacci { k } => k_fibonacci(*k as usize, len),
            SeqSpec::Exponential { c } => geometric(BigInt::from(*c), len),
            SeqSpec::Binomial { k } => {
                // C(n+k, k): a_{n+1} = a_n (n+k+1)/(n+1)
                ratio_recurrence(len, |n| (big(n + *k as u64 + 1), big(n + 1)))
            }
            SeqSpec::NPlus1 => (0..len as u64).map(|n| big(n + 1)).collect(),
            SeqSpec::NPlus1Sq => (0..len as u64).map(|n| big((n + 1) * (n + 1))).collect(),
            SeqSpec::Power { k } => (0..len as u64).map(|n| num_traits::pow(big(n + 1), *k as usize)).collect(),
            SeqSpec::Catalan => ratio_recurrence(len, |n| (big(4 * n + 2), big(n + 2))),
            SeqSpec::CentralBinomial => ratio_recurrence(len, |n| (big(4 * n + 2), big(n + 1))),
            SeqSpec::CentralBinomialOdd => ratio_recurrence(len, |n| (big(4 * n + 6), big(n + 2))),
            SeqSpec::Factorial => ratio_recurrence(len, |n| (big(n + 1), BigInt::one())),
            SeqSpec::DoubleFactorialOdd => ratio_recurrence(len, |n| (big(2 * n + 1), BigInt::one())),
            SeqSpec::DoubleFactorialEven => ratio_recurrence(len, |n| (big(2 * n + 2), BigInt::one())),
            SeqSpec::SelfPower => (0..len)
                .map(|n| if n == 0 { BigInt::one() } else { num_traits::pow(big(n as u64), n) })
                .collect(),
            SeqSpec::TwoPowNPowK { k } => (0..len)
                .map(|n| BigInt::one() << num_traits::pow(n, *k as usize))
                .collect(),
            SeqSpec::EulerPhi => {
                let s = Sieve::new(len + 1);
                (1..=len).map(|m| big(s.phi(m))).collect()
            }
            SeqSpec::PrimePi => {
                let s = Sieve::new(len + 2);
                let pi = s.prime_pi_table();
                (2..len + 2).map(|m| big(pi[m])).collect()
            }
            SeqSpec::Moebius => {
                let s = Sieve::new(len + 1);
                (1..=len).map(|m| BigInt::from(s.mu(m))).collect()
            }
            SeqSpec::Sigma { j } => {
                let s = Sieve::new(len + 1);
                (1..=len).map(|m| s.sigma(m, *j)).collect()
            }
            SeqSpec::Quadratic { a, b, c } => {
                let l = a.den().lcm(b.den()).lcm(c.den());
                let (a, b, c) = (a.num() * (&l / a.den()), b.num() * (&l / b.den()), c.num() * (&l / c.den()));
                (0..len as u64)
                    .map(|n| {
                        let n = big(n);
                        &a * &n * &n + &b * &n + &c
                    })
                    .collect()
            }
        };
        Ok(terms)
    }

    /// Exact `a_{n+1} / a_n`.
    pub fn ratio_exact(&self, n: usize) -> Result<Frac> {
        let t = self.generate(n + 1)?;
        if t[n].is_zero() {
            return Err(Error::DivisionByZero);
        }
        Frac::new(t[n + 1].clone(), t[n].clone())
    }
}

impl fmt::Display for SeqSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeqSpec::Primes => write!(f, "primes"),
            SeqSpec::Fibonacci => write!(f, "fibonacci"),
            SeqSpec::KFibonacci { k } => write!(f, "k-fibonacci(k={k})"),
            SeqSpec::Exponential { c } => write!(f, "exponential(c={c})"),
            SeqSpec::Binomial { k } => write!(f, "binomial(k={k})"),
            SeqSpec::NPlus1 => write!(f, "n-plus-1"),
            SeqSpec::NPlus1Sq => write!(f, "n-plus-1-sq"),
            SeqSpec::Power { k } => write!(f, "power(k={k})"),
            SeqSpec::Catalan => write!(f, "catalan"),
            SeqSpec::CentralBinomial => write!(f, "central-binomial"),
            SeqSpec::CentralBinomialOdd => write!(f, "central-binomial-odd"),
            SeqSpec::Factorial => write!(f, "factorial"),
            SeqSpec::DoubleFactorialOdd => write!(f, "double-factorial-odd"),
            SeqSpec::DoubleFactorialEven => write!(f, "double-factorial-even"),
            SeqSpec::SelfPower => write!(f, "self-power"),
            SeqSpec::TwoPowNPowK { k } => write!(f, "two-pow(k={k})"),
            SeqSpec::EulerPhi => write!(f, "phi"),
            SeqSpec::PrimePi => write!(f, "pi"),
            SeqSpec::Moebius => write!(f, "mu"),
            SeqSpec::Sigma { j } => write!(f, "sigma(j={j})"),
            SeqSpec::Quadratic { a, b, c } => write!(f, "quadratic(a={a}, b={b}, c={c})"),
        }
    }
}

fn k_fibonacci(k: usize, len: usize) -> Vec<BigInt> {
    // a_0 = ... = a_{k-2} = 0, a_{k-1} = 1; keep terms from index k-1 on
    let mut full: Vec<BigInt> = vec![BigInt::zero(); k - 1];
    full.push(BigInt::one());
    while full.len() < len + k - 1 {
        let n = full.len();
        let next = full[n - k..].iter().fold(BigInt::zero(), |s, x| s + x);
        full.push(next);
    }
    full.split_off(k - 1)
}

fn geometric(c: BigInt, len: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(len);
    let mut t = BigInt::one();
    for _ in 0..len {
        out.push(t.clone());
        t *= &c;
    }
    out
}

/// `a_0 = 1`, `a_{n+1} = a_n * num(n) / den(n)` with exact division.
fn ratio_recurrence(len: usize, step: impl Fn(u64) -> (BigInt, BigInt)) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(len);
    let mut t = BigInt::one();
    for n in 0..len as u64 {
        out.push(t.clone());
        let (p, q) = step(n);
        t = t * p / q;
    }
    out
}

/// Smallest-prime-factor sieve shared by the arithmetic families.
#[derive(Clone, Debug)]
pub struct Sieve {
    spf: Vec<u32>,
}

impl Sieve {
    /// Covers every integer `<= limit`.
    pub fn new(limit: usize) -> Self {
        let mut spf = vec![0u32; limit + 1];
        for i in 2..=limit {
            if spf[i] == 0 {
                let mut m = i;
                while m <= limit {
                    if spf[m] == 0 {
                        spf[m] = i as u32;
                    }
                    m += i;
                }
            }
        }
        Sieve { spf }
    }

    pub fn limit(&self) -> usize {
        self.spf.len() - 1
    }

    pub fn is_prime(&self, m: usize) -> bool {
        m >= 2 && self.spf[m] as usize == m
    }

    /// Prime factorisation as `(prime, exponent)` pairs.
    pub fn factor(&self, mut m: usize) -> Vec<(u64, u32)> {
        let mut out: Vec<(u64, u32)> = Vec::new();
        while m > 1 {
            let p = self.spf[m] as usize;
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            out.push((p as u64, e));
        }
        out
    }

    pub fn phi(&self, m: usize) -> u64 {
        self.factor(m).iter().fold(1, |acc, &(p, e)| acc * (p - 1) * p.pow(e - 1))
    }

    pub fn mu(&self, m: usize) -> i64 {
        let f = self.factor(m);
        if f.iter().any(|&(_, e)| e > 1) {
            0
        } else if f.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Sum of the `j`-th powers of the divisors.
    pub fn sigma(&self, m: usize, j: u32) -> BigInt {
        self.factor(m).iter().fold(BigInt::one(), |acc, &(p, e)| {
            let pj = num_traits::pow(BigInt::from(p), j as usize);
            let mut term = BigInt::one();
            let mut s = BigInt::one();
            for _ in 0..e {
                term *= &pj;
                s += &term;
            }
            acc * s
        })
    }

    /// `table[m] = pi(m)` for `m <= limit`.
    pub fn prime_pi_table(&self) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.spf.len());
        let mut c = 0;
        for m in 0..self.spf.len() {
            if self.is_prime(m) {
                c += 1;
            }
            out.push(c);
        }
        out
    }
}

/// The first `count` primes.
pub fn first_primes(count: usize) -> Vec<u64> {
    let mut limit = 32usize.max(count * 2);
    loop {
        let s = Sieve::new(limit);
        let ps: Vec<u64> = (2..=limit).filter(|&m| s.is_prime(m)).map(|m| m as u64).take(count).collect();
        if ps.len() == count {
            return ps;
        }
        limit *= 2;
    }
}

/// One row of Eulerian numbers `A(n, 0..n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerianRow {
    pub n: usize,
    pub values: Vec<BigInt>,
}

/// `A(n, m) = sum_{k=0}^{m+1} (-1)^k C(n+1, k) (m+1-k)^n`. Row 0 is `[1]`,
/// matching `A_0(x) = 1`.
pub fn eulerian_row(n: usize) -> EulerianRow {
    if n == 0 {
        return EulerianRow { n, values: vec![BigInt::one()] };
    }
    let binom: Vec<BigInt> = {
        let mut row = vec![BigInt::one()];
        for k in 0..=n {
            let next = row[k].clone() * BigInt::from(n + 1 - k) / BigInt::from(k + 1);
            row.push(next);
        }
        row
    };
    let values = (0..n)
        .map(|m| {
            (0..=m + 1).fold(BigInt::zero(), |acc, k| {
                let t = &binom[k] * num_traits::pow(BigInt::from(m + 1 - k), n);
                if k % 2 == 0 {
                    acc + t
                } else {
                    acc - t
                }
            })
        })
        .collect();
    EulerianRow { n, values }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn generate_examples() {
        assert_eq!(SeqSpec::Primes.generate(5).unwrap(), ints(&[2, 3, 5, 7, 11, 13]));
        assert_eq!(SeqSpec::Exponential { c: 1 }.generate(4).unwrap(), ints(&[1, 1, 1, 1, 1]));
        assert_eq!(SeqSpec::Moebius.generate(4).unwrap(), ints(&[1, -1, -1, 0, -1]));
        assert_eq!(SeqSpec::Fibonacci.generate(6).unwrap(), ints(&[1, 1, 2, 3, 5, 8, 13]));
        assert_eq!(SeqSpec::KFibonacci { k: 3 }.generate(6).unwrap(), ints(&[1, 1, 2, 4, 7, 13, 24]));
        assert_eq!(SeqSpec::Binomial { k: 2 }.generate(4).unwrap(), ints(&[1, 3, 6, 10, 15]));
        assert_eq!(SeqSpec::CentralBinomial.generate(4).unwrap(), ints(&[1, 2, 6, 20, 70]));
        assert_eq!(SeqSpec::CentralBinomialOdd.generate(4).unwrap(), ints(&[1, 3, 10, 35, 126]));
        assert_eq!(SeqSpec::DoubleFactorialOdd.generate(4).unwrap(), ints(&[1, 1, 3, 15, 105]));
        assert_eq!(SeqSpec::DoubleFactorialEven.generate(4).unwrap(), ints(&[1, 2, 8, 48, 384]));
        assert_eq!(SeqSpec::SelfPower.generate(4).unwrap(), ints(&[1, 1, 4, 27, 256]));
        assert_eq!(SeqSpec::TwoPowNPowK { k: 2 }.generate(3).unwrap(), ints(&[1, 2, 16, 512]));
        assert_eq!(SeqSpec::EulerPhi.generate(6).unwrap(), ints(&[1, 1, 2, 2, 4, 2, 6]));
        assert_eq!(SeqSpec::PrimePi.generate(6).unwrap(), ints(&[1, 2, 2, 3, 3, 4, 4]));
        assert_eq!(SeqSpec::Sigma { j: 1 }.generate(5).unwrap(), ints(&[1, 3, 4, 7, 6, 12]));
        assert_eq!(SeqSpec::Power { k: 3 }.generate(3).unwrap(), ints(&[1, 8, 27, 64]));
        let q = SeqSpec::Quadratic { a: Frac::ratio(1, 2), b: Frac::ratio(1, 3), c: Frac::one() };
        // 6 * (n^2/2 + n/3 + 1)
        assert_eq!(q.generate(3).unwrap(), ints(&[6, 11, 22, 39]));
    }

    fn catalan_oracle(n_max: usize) -> Vec<BigInt> {
        let mut c = vec![BigInt::one()];
        for n in 0..n_max {
            let next = &c[n] * BigInt::from(4 * n + 2) / BigInt::from(n + 2);
            c.push(next);
        }
        c
    }

    #[test]
    fn catalan_matches_recurrence_oracle() {
        assert_eq!(SeqSpec::Catalan.generate(5).unwrap(), ints(&[1, 1, 2, 5, 14, 42]));
        let t = SeqSpec::Catalan.generate(200).unwrap();
        assert_eq!(t, catalan_oracle(200));
        for n in 0..200 {
            assert_eq!(BigInt::from(n + 2) * &t[n + 1], BigInt::from(4 * n + 2) * &t[n]);
        }
    }

    fn trial_division_mu(m: u64) -> i64 {
        let (mut m, mut sign, mut d) = (m, 1i64, 2u64);
        while d * d <= m {
            if m % d == 0 {
                m /= d;
                if m % d == 0 {
                    return 0;
                }
                sign = -sign;
            }
            d += 1;
        }
        if m > 1 {
            sign = -sign;
        }
        sign
    }

    #[test]
    fn sieve_against_trial_division() {
        let t = SeqSpec::Moebius.generate(300).unwrap();
        for (n, v) in t.iter().enumerate() {
            assert_eq!(*v, BigInt::from(trial_division_mu(n as u64 + 1)));
        }
        let s = Sieve::new(1000);
        for q in [2usize, 3, 5, 97, 997] {
            assert_eq!(s.sigma(q, 1), BigInt::from(q + 1));
        }
        for sq in [4usize, 12, 18, 50, 99] {
            assert_eq!(s.mu(sq), 0);
        }
        assert_eq!(s.sigma(12, 2), BigInt::from(1 + 4 + 9 + 16 + 36 + 144));
    }

    #[test]
    fn k_fibonacci_two_is_fibonacci() {
        assert_eq!(
            SeqSpec::KFibonacci { k: 2 }.generate(100).unwrap(),
            SeqSpec::Fibonacci.generate(100).unwrap()
        );
    }

    #[test]
    fn every_family_starts_nonzero() {
        for spec in sample_specs() {
            assert!(!spec.generate(3).unwrap()[0].is_zero(), "{spec}");
        }
    }

    fn sample_specs() -> Vec<SeqSpec> {
        vec![
            SeqSpec::Primes,
            SeqSpec::Fibonacci,
            SeqSpec::KFibonacci { k: 4 },
            SeqSpec::Exponential { c: -3 },
            SeqSpec::Binomial { k: 5 },
            SeqSpec::NPlus1,
            SeqSpec::NPlus1Sq,
            SeqSpec::Power { k: 50 },
            SeqSpec::Catalan,
            SeqSpec::CentralBinomial,
            SeqSpec::CentralBinomialOdd,
            SeqSpec::Factorial,
            SeqSpec::DoubleFactorialOdd,
            SeqSpec::DoubleFactorialEven,
            SeqSpec::SelfPower,
            SeqSpec::TwoPowNPowK { k: 3 },
            SeqSpec::EulerPhi,
            SeqSpec::PrimePi,
            SeqSpec::Moebius,
            SeqSpec::Sigma { j: 7 },
            SeqSpec::Quadratic { a: Frac::one(), b: Frac::zero(), c: Frac::one() },
        ]
    }

    #[test]
    fn invalid_parameters() {
        assert!(SeqSpec::KFibonacci { k: 1 }.generate(3).is_err());
        assert!(SeqSpec::Exponential { c: 0 }.generate(3).is_err());
        assert!(SeqSpec::Sigma { j: 0 }.generate(3).is_err());
        let err = SeqSpec::from_name("nope", &SeqParams::default()).unwrap_err();
        assert!(err.to_string().contains("catalan"));
        assert!(SeqSpec::from_name("binomial", &SeqParams::default()).is_err());
        let p = SeqParams { k: Some("3".into()), ..Default::default() };
        assert_eq!(SeqSpec::from_name("binomial", &p).unwrap(), SeqSpec::Binomial { k: 3 });
    }

    #[test]
    fn ratio_examples() {
        assert_eq!(SeqSpec::Catalan.ratio_exact(1).unwrap(), Frac::from(2));
        assert_eq!(SeqSpec::Factorial.ratio_exact(3).unwrap(), Frac::from(4));
        assert_eq!(SeqSpec::Catalan.ratio_exact(3).unwrap(), Frac::ratio(14, 5));
        assert_eq!(SeqSpec::Moebius.ratio_exact(3), Err(Error::DivisionByZero));
    }

    /// Descents of every permutation of `1..=n`, tallied.
    fn descent_counts(n: usize) -> Vec<BigInt> {
        fn perms(v: &mut Vec<usize>, k: usize, out: &mut Vec<usize>) {
            if k == v.len() {
                out[v.windows(2).filter(|w| w[0] > w[1]).count()] += 1;
                return;
            }
            for i in k..v.len() {
                v.swap(k, i);
                perms(v, k + 1, out);
                v.swap(k, i);
            }
        }
        let mut counts = vec![0usize; n];
        perms(&mut (1..=n).collect(), 0, &mut counts);
        counts.into_iter().map(BigInt::from).collect()
    }

    #[test]
    fn eulerian_rows_match_permutation_oracle() {
        assert_eq!(eulerian_row(1).values, ints(&[1]));
        assert_eq!(eulerian_row(3).values, ints(&[1, 4, 1]));
        assert_eq!(eulerian_row(4).values, ints(&[1, 11, 11, 1]));
        for n in 1..=7 {
            let row = eulerian_row(n);
            assert_eq!(row.values, descent_counts(n));
            let fact: BigInt = (1..=n).map(BigInt::from).product();
            assert_eq!(row.values.iter().sum::<BigInt>(), fact);
            let mut rev = row.values.clone();
            rev.reverse();
            assert_eq!(rev, row.values);
        }
    }
}
