//! The RR transform, completely-real checks and the two table searches.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::catalog::{eulerian_row, SeqSpec};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::poly::BigPoly;
use crate::roots::count_real_roots;

/// Where the terms of a report came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Family(SeqSpec),
    Literal(BigPoly),
}

/// `b_n` for `n = 0..=n_max`, with minimality metadata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RRReport {
    pub b: Vec<usize>,
    pub n_max: usize,
    /// Smallest `n` with `b_n != n mod 2`.
    pub first_nonminimal: Option<usize>,
    /// `n - b_n`, the number of non-real roots.
    pub dual: Vec<usize>,
    pub source: Source,
}

impl RRReport {
    fn from_counts(b: Vec<usize>, source: Source) -> Self {
        let n_max = b.len() - 1;
        let first_nonminimal = b.iter().enumerate().position(|(n, &v)| v != n % 2);
        let dual = b.iter().enumerate().map(|(n, &v)| n - v).collect();
        RRReport { b, n_max, first_nonminimal, dual, source }
    }

    pub fn is_minimal(&self) -> bool {
        self.first_nonminimal.is_none()
    }

    /// Checks the six elementary properties of `b` against `terms`. Returns
    /// a description of each violation.
    pub fn property_violations(&self, terms: &[BigInt]) -> Vec<String> {
        let mut out = Vec::new();
        let b = &self.b;
        if b[0] != 0 {
            out.push(format!("b_0 = {} != 0", b[0]));
        }
        if b.len() > 1 && !terms[1].is_zero() && b[1] != 1 {
            out.push(format!("b_1 = {} but a_1 != 0", b[1]));
        }
        for (n, &v) in b.iter().enumerate() {
            let nonzero = !terms[n].is_zero();
            if v > n {
                out.push(format!("b_{n} = {v} > {n}"));
            }
            if n % 2 == 1 && nonzero && v < 1 {
                out.push(format!("b_{n} = 0 for odd n with a_n != 0"));
            }
            if n > 0 && !nonzero && v != b[n - 1] {
                out.push(format!("a_{n} = 0 but b_{n} = {v} != b_{} = {}", n - 1, b[n - 1]));
            }
            if nonzero && v % 2 != n % 2 {
                out.push(format!("b_{n} = {v} has the wrong parity"));
            }
            if v + self.dual[n] != n {
                out.push(format!("dual_{n} inconsistent"));
            }
        }
        out
    }
}

fn counts(terms: &[BigInt], n_max: usize, exec: Exec) -> Result<Vec<usize>> {
    if terms.is_empty() || terms[0].is_zero() {
        return Err(Error::LeadingTermZero);
    }
    if terms.len() < n_max + 1 {
        return Err(Error::InsufficientTerms { needed: n_max + 1, got: terms.len() });
    }
    // Only sections whose top coefficient is nonzero need a root count.
    let work: Vec<usize> = (1..=n_max).filter(|&n| !terms[n].is_zero()).collect();
    let found = exec.map_range(work.len(), |i| {
        let n = work[i];
        count_real_roots(&BigPoly::new(terms[..=n].to_vec()))
    });
    let mut b = vec![0usize; n_max + 1];
    let mut it = work.iter().zip(found);
    let mut next = it.next();
    for n in 1..=n_max {
        match next {
            Some((&m, ref r)) if m == n => {
                b[n] = r.clone()?;
                next = it.next();
            }
            _ => b[n] = b[n - 1],
        }
    }
    Ok(b)
}

/// `b_n` = number of real roots, with multiplicity, of `sum_{i<=n} a_i x^i`.
pub fn rr_transform(terms: &[BigInt], n_max: usize, exec: Exec) -> Result<RRReport> {
    let b = counts(terms, n_max, exec)?;
    let source = Source::Literal(BigPoly::new(terms[..=n_max].to_vec()));
    Ok(RRReport::from_counts(b, source))
}

/// [`rr_transform`] of a catalog family.
pub fn rr_family(spec: &SeqSpec, n_max: usize, exec: Exec) -> Result<RRReport> {
    let terms = spec.generate(n_max)?;
    let b = counts(&terms, n_max, exec)?;
    Ok(RRReport::from_counts(b, Source::Family(spec.clone())))
}

/// Newton's inequalities `a_j^2 j (d-j) >= a_{j-1} a_{j+1} (j+1)(d-j+1)`.
/// Every real-rooted polynomial satisfies them, so a failure proves the
/// presence of non-real roots.
fn newton_ok(c: &[BigInt]) -> bool {
    let d = c.len() - 1;
    (1..d).all(|j| {
        let lhs = &c[j] * &c[j] * BigInt::from(j * (d - j));
        let rhs = &c[j - 1] * &c[j + 1] * BigInt::from((j + 1) * (d - j + 1));
        lhs >= rhs
    })
}

/// True iff the degree-`d` polynomial with coefficients `c` (nonzero top
/// coefficient) has `d` real roots counted with multiplicity.
pub fn all_roots_real(p: &BigPoly) -> Result<bool> {
    let d = p.degree().ok_or(Error::ZeroPolynomial)?;
    if d == 0 {
        return Ok(true);
    }
    if !newton_ok(p.coeffs()) {
        return Ok(false);
    }
    Ok(count_real_roots(p)? == d)
}

/// Whether every section `p_i` has `i` real roots; also returns the full
/// `b` list of the coefficient sequence.
pub fn is_completely_real(p: &BigPoly) -> Result<(bool, Vec<usize>)> {
    let d = p.degree().ok_or(Error::ZeroPolynomial)?;
    if p.constant_term().is_zero() {
        return Err(Error::LeadingTermZero);
    }
    let b = counts(p.coeffs(), d, Exec::Sequential)?;
    let ok = b.iter().enumerate().all(|(i, &v)| v == i);
    Ok((ok, b))
}

/// Early-exit form of [`is_completely_real`] for searches.
fn completely_real_fast(c: &[BigInt]) -> bool {
    let d = c.len() - 1;
    if c.iter().any(Zero::is_zero) {
        return false;
    }
    if !(2..=d).all(|i| newton_ok(&c[..=i])) {
        return false;
    }
    // High sections fail first in practice.
    (2..=d).rev().all(|i| {
        count_real_roots(&BigPoly::new(c[..=i].to_vec())).map(|r| r == i).unwrap_or(false)
    })
}

fn power_terms(n: usize, k: u32) -> Vec<BigInt> {
    (0..=n).map(|i| num_traits::pow(BigInt::from(i + 1), k as usize)).collect()
}

/// Smallest `k` in `k_start..=k_cap` such that `a_i = (i+1)^k` gives
/// `b_i = i` for all `i <= n`.
pub fn find_c_n(n: usize, k_start: Option<u64>, k_cap: u64, exec: Exec) -> Option<u64> {
    exec.find_first(k_start.unwrap_or(0), k_cap, |k| completely_real_fast(&power_terms(n, k as u32)))
}

/// `prod_{i=1}^{n} (i^k x + 1)`.
pub fn build_rootprod_poly(n: usize, k: u32) -> BigPoly {
    (1..=n).fold(BigPoly::one(), |acc, i| {
        let f = BigPoly::new(vec![BigInt::one(), num_traits::pow(BigInt::from(i), k as usize)]);
        &acc * &f
    })
}

/// Smallest `k <= k_cap` with [`build_rootprod_poly`]`(n, k)` completely real.
pub fn table2_min_k(n: usize, k_cap: u64, exec: Exec) -> Option<u64> {
    exec.find_first(0, k_cap, |k| completely_real_fast(build_rootprod_poly(n, k as u32).coeffs()))
}

/// `sum_{k=0}^{n} c^(n^2 - k^2) x^k`.
pub fn build_squares_poly(c: &BigInt, n: usize) -> BigPoly {
    BigPoly::new((0..=n).map(|k| num_traits::pow(c.clone(), n * n - k * k)).collect())
}

/// The Eulerian polynomial `A_n(x) = sum_m A(n, m) x^m`.
pub fn eulerian_poly(n: usize) -> BigPoly {
    BigPoly::new(eulerian_row(n).values)
}

/// Completely-real verdict for `A_n` over `n_lo..=n_hi`.
pub fn eulerian_poly_cr_scan(n_lo: usize, n_hi: usize, exec: Exec) -> Result<Vec<(usize, bool)>> {
    if n_lo < 1 || n_lo > n_hi {
        return Err(Error::InvalidParameter(format!("need 1 <= n_lo <= n_hi, got {n_lo}..{n_hi}")));
    }
    exec.map_range(n_hi - n_lo + 1, |i| {
        let n = n_lo + i;
        is_completely_real(&eulerian_poly(n)).map(|(ok, _)| (n, ok))
    })
    .into_iter()
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn transform_examples() {
        let r = rr_family(&SeqSpec::Primes, 9, Exec::Parallel).unwrap();
        assert_eq!(r.b, vec![0, 1, 0, 1, 0, 1, 0, 1, 0, 1]);
        assert!(r.is_minimal());
        let ones = ints(&[1; 7]);
        assert_eq!(rr_transform(&ones, 6, Exec::Sequential).unwrap().b, vec![0, 1, 0, 1, 0, 1, 0]);
        let r = rr_family(&SeqSpec::Power { k: 50 }, 9, Exec::Parallel).unwrap();
        assert_eq!(r.b, vec![0, 1, 2, 3, 4, 5, 6, 5, 6, 7]);
        assert_eq!(r.first_nonminimal, Some(2));
        assert_eq!(r.dual[9], 2);
    }

    #[test]
    fn zero_terms_reuse_previous() {
        let t = ints(&[1, 0, -1, 0, 0, 2]);
        let r = rr_transform(&t, 5, Exec::Sequential).unwrap();
        assert_eq!(r.b[1], 0);
        assert_eq!(r.b[3], r.b[2]);
        assert_eq!(r.b[4], r.b[2]);
        assert!(r.property_violations(&t).is_empty());
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(rr_transform(&ints(&[0, 1]), 1, Exec::Sequential), Err(Error::LeadingTermZero));
        assert!(matches!(
            rr_transform(&ints(&[1, 1]), 3, Exec::Sequential),
            Err(Error::InsufficientTerms { .. })
        ));
    }

    #[test]
    fn completely_real_examples() {
        let p = BigPoly::from_i64s(&[13827, 2456, 99, 1]);
        assert!(is_completely_real(&p).unwrap().0);
        assert!(!is_completely_real(&p.reciprocal().unwrap()).unwrap().0);
        assert!(is_completely_real(&BigPoly::from_i64s(&[5])).unwrap().0);
        assert!(is_completely_real(&BigPoly::zero()).is_err());
        assert!(completely_real_fast(p.coeffs()));
        assert!(!completely_real_fast(p.reciprocal().unwrap().coeffs()));
    }

    #[test]
    fn newton_is_sound() {
        // (x+1)^3 is real-rooted and meets the inequalities with equality.
        assert!(newton_ok(&ints(&[1, 3, 3, 1])));
        assert!(!newton_ok(&ints(&[1, 1, 1])));
    }

    #[test]
    fn constructions() {
        let two = BigInt::from(2);
        assert_eq!(build_squares_poly(&two, 2), BigPoly::from_i64s(&[16, 8, 1]));
        assert_eq!(build_squares_poly(&two, 1), BigPoly::from_i64s(&[2, 1]));
        assert_eq!(build_squares_poly(&BigInt::from(3), 2), BigPoly::from_i64s(&[81, 27, 1]));
        assert_eq!(build_rootprod_poly(2, 0), BigPoly::from_i64s(&[1, 2, 1]));
        assert_eq!(build_rootprod_poly(2, 1), BigPoly::from_i64s(&[1, 3, 2]));
        assert_eq!(build_rootprod_poly(3, 2), BigPoly::from_i64s(&[1, 14, 49, 36]));
    }

    #[test]
    fn small_searches() {
        assert_eq!(find_c_n(0, None, 10, Exec::Sequential), Some(0));
        assert_eq!(find_c_n(2, None, 50, Exec::Parallel), Some(5));
        assert_eq!(find_c_n(2, None, 4, Exec::Parallel), None);
        assert_eq!(table2_min_k(1, 10, Exec::Sequential), Some(0));
        assert_eq!(table2_min_k(3, 10, Exec::Parallel), Some(2));
        assert_eq!(table2_min_k(5, 10, Exec::Parallel), Some(5));
    }

    #[test]
    fn eulerian_small() {
        let r = eulerian_poly_cr_scan(1, 5, Exec::Sequential).unwrap();
        assert!(r.iter().all(|&(_, ok)| ok));
        assert!(eulerian_poly_cr_scan(0, 3, Exec::Sequential).is_err());
        let a9 = eulerian_poly(9);
        assert_eq!(count_real_roots(&a9.section(4)).unwrap(), 2);
        assert_eq!(count_real_roots(&a9.section(5)).unwrap(), 3);
        assert!(!is_completely_real(&a9).unwrap().0);
        assert!(is_completely_real(&eulerian_poly(8)).unwrap().0);
    }
}
