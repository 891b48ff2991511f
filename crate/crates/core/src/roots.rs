//! Exact real-root counting and isolation.
//!
//! The primary method is Descartes' rule of signs applied to a bisection of
//! the Cauchy box: each interval is mapped onto `(0, 1)` and the sign
//! variations of `(x+1)^n q(1/(x+1))` bound the number of roots inside.
//! A Sturm chain provides an independent count for cross-checking.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::frac::Frac;
use crate::poly::BigPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RegionKind {
    /// `lo == hi` and that value is a root.
    Point,
    /// Exactly one root strictly between `lo` and `hi`; neither endpoint is a root.
    OpenInterval,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IsolRegion {
    pub lo: Frac,
    pub hi: Frac,
    pub kind: RegionKind,
}

impl IsolRegion {
    fn point(x: Frac) -> Self {
        IsolRegion { lo: x.clone(), hi: x, kind: RegionKind::Point }
    }

    fn open(lo: Frac, hi: Frac) -> Self {
        IsolRegion { lo, hi, kind: RegionKind::OpenInterval }
    }

    fn mirrored(self) -> Self {
        IsolRegion { lo: -self.hi, hi: -self.lo, kind: self.kind }
    }

    pub fn contains(&self, x: &Frac) -> bool {
        match self.kind {
            RegionKind::Point => &self.lo == x,
            RegionKind::OpenInterval => &self.lo < x && x < &self.hi,
        }
    }

    fn overlaps(&self, other: &IsolRegion) -> bool {
        match (self.kind, other.kind) {
            (RegionKind::Point, _) => other.contains(&self.lo),
            (_, RegionKind::Point) => self.contains(&other.lo),
            _ => (&self.lo).max(&other.lo) < (&self.hi).min(&other.hi),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootCountResult {
    pub total_with_multiplicity: usize,
    pub distinct: usize,
    /// Sorted by position, pairwise disjoint.
    pub regions: Vec<(IsolRegion, u32)>,
}

/// Sign changes in a coefficient sequence, zeros ignored.
pub fn sign_variations(coeffs: &[BigInt]) -> usize {
    let mut last = num_bigint::Sign::NoSign;
    let mut v = 0;
    for c in coeffs {
        let s = c.sign();
        if s == num_bigint::Sign::NoSign {
            continue;
        }
        if last != num_bigint::Sign::NoSign && s != last {
            v += 1;
        }
        last = s;
    }
    v
}

/// Cauchy bound `1 + max|a_i| / |a_n|`, rounded up. Every real root lies in `(-B, B)`.
pub fn root_bound(p: &BigPoly) -> Result<Frac> {
    Ok(Frac::from_int(cauchy_bound(p)?))
}

fn cauchy_bound(p: &BigPoly) -> Result<BigInt> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let lead = p.coeffs()[n].abs();
    let max = p.coeffs()[..n].iter().map(Signed::abs).max().unwrap_or_default();
    Ok(Frac::new(max, lead).expect("nonzero lead").ceil() + 1)
}

/// Isolating regions for the real roots of a square-free polynomial, in
/// increasing order.
pub fn isolate_real_roots(p: &BigPoly) -> Result<Vec<IsolRegion>> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Err(Error::ConstantPolynomial);
    }
    if !p.is_squarefree()? {
        return Err(Error::NotSquareFree);
    }
    Ok(isolate_squarefree(p))
}

/// Same as [`isolate_real_roots`] without the square-free check.
pub(crate) fn isolate_squarefree(p: &BigPoly) -> Vec<IsolRegion> {
    let mut out = Vec::new();
    let mut coeffs = p.coeffs().to_vec();
    let zero_root = coeffs[0].is_zero();
    if zero_root {
        // square-free: the root at zero is simple
        coeffs.remove(0);
        out.push(IsolRegion::point(Frac::zero()));
    }
    if coeffs.len() <= 1 {
        return out;
    }
    if coeffs.len() == 2 {
        let r = Frac::new(-coeffs[0].clone(), coeffs[1].clone()).expect("nonzero lead");
        return if zero_root {
            let mut v = vec![IsolRegion::point(r)];
            v.extend(out);
            v.sort_by(|a, b| a.lo.cmp(&b.lo));
            v
        } else {
            vec![IsolRegion::point(r)]
        };
    }
    let p = BigPoly::new(coeffs);
    let bound = cauchy_bound(&p).expect("degree >= 1");

    let mut neg = isolate_positive(&p.negate_variable(), &bound, zero_root);
    neg.reverse();
    let mut regions: Vec<IsolRegion> = neg.into_iter().map(IsolRegion::mirrored).collect();
    regions.append(&mut out);
    regions.extend(isolate_positive(&p, &bound, zero_root));
    regions
}

/// Roots of `p` in `(0, bound)`, given `p(0) != 0`. `zero_is_root` marks the
/// left endpoint as a root of the caller's polynomial so it is never used
/// as an interval endpoint.
fn isolate_positive(p: &BigPoly, bound: &BigInt, zero_is_root: bool) -> Vec<IsolRegion> {
    let mut out = Vec::new();
    let hi = Frac::from_int(bound.clone());
    match sign_variations(p.coeffs()) {
        0 => return out,
        1 if !zero_is_root => {
            out.push(IsolRegion::open(Frac::zero(), hi));
            return out;
        }
        _ => {}
    }
    let mut scale = BigInt::one();
    let q: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| {
            let t = c * &scale;
            scale *= bound;
            t
        })
        .collect();

    struct Node {
        q: Vec<BigInt>,
        lo: Frac,
        hi: Frac,
        lo_root: bool,
        hi_root: bool,
    }
    let mut stack = vec![Node { q: remove_power_of_two(q), lo: Frac::zero(), hi, lo_root: zero_is_root, hi_root: false }];
    while let Some(Node { q, lo, hi, lo_root, hi_root }) = stack.pop() {
        let v = descartes_unit(&q);
        if v == 0 {
            continue;
        }
        if v == 1 && !lo_root && !hi_root {
            out.push(IsolRegion::open(lo, hi));
            continue;
        }
        let mid = lo.midpoint(&hi);
        let mut left = halve(&q);
        let mid_root = left.iter().fold(BigInt::zero(), |s, c| s + c).is_zero();
        if mid_root {
            out.push(IsolRegion::point(mid.clone()));
            left = deflate_at_one(&left);
        }
        let left = remove_power_of_two(left);
        let mut right = left.clone();
        taylor_shift_one(&mut right);
        // right half is popped first; output is sorted afterwards
        stack.push(Node { q: left, lo, hi: mid.clone(), lo_root, hi_root: mid_root });
        stack.push(Node { q: right, lo: mid, hi, lo_root: mid_root, hi_root });
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out
}

/// Descartes bound for roots in `(0, 1)`, saturated at 2.
fn descartes_unit(q: &[BigInt]) -> usize {
    let mut a: Vec<BigInt> = q.iter().rev().cloned().collect();
    let n = a.len() - 1;
    let mut var = 0;
    let mut last = num_bigint::Sign::NoSign;
    let mut note = |c: &BigInt, var: &mut usize| {
        let s = c.sign();
        if s != num_bigint::Sign::NoSign {
            if last != num_bigint::Sign::NoSign && s != last {
                *var += 1;
            }
            last = s;
        }
    };
    // Taylor shift by one; a[i] is final after round i.
    for i in 0..n {
        for j in (i..n).rev() {
            let (l, r) = a.split_at_mut(j + 1);
            l[j] += &r[0];
        }
        note(&a[i], &mut var);
        if var >= 2 {
            return 2;
        }
    }
    note(&a[n], &mut var);
    var.min(2)
}

/// `q(x) -> q(x + 1)` in place.
pub(crate) fn taylor_shift_one(a: &mut [BigInt]) {
    let n = a.len().saturating_sub(1);
    for i in 0..n {
        for j in (i..n).rev() {
            let (l, r) = a.split_at_mut(j + 1);
            l[j] += &r[0];
        }
    }
}

/// `2^n q(x/2)`.
fn halve(q: &[BigInt]) -> Vec<BigInt> {
    let n = q.len() - 1;
    q.iter().enumerate().map(|(i, c)| c << (n - i)).collect()
}

/// Quotient of `q` by `x - 1`, assuming `q(1) = 0`.
fn deflate_at_one(q: &[BigInt]) -> Vec<BigInt> {
    let n = q.len() - 1;
    let mut s = vec![BigInt::zero(); n];
    s[n - 1] = q[n].clone();
    for k in (1..n).rev() {
        s[k - 1] = &q[k] + &s[k];
    }
    s
}

fn remove_power_of_two(mut q: Vec<BigInt>) -> Vec<BigInt> {
    let tz = q.iter().filter_map(BigInt::trailing_zeros).min().unwrap_or(0);
    if tz > 0 {
        for c in q.iter_mut() {
            *c >>= tz;
        }
    }
    q
}

/// A point on the extended real line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Endpoint {
    NegInfinity,
    Finite(Frac),
    PosInfinity,
}

impl From<Frac> for Endpoint {
    fn from(f: Frac) -> Self {
        Endpoint::Finite(f)
    }
}

/// Negated-remainder Sturm chain over primitive parts.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<BigPoly>,
}

impl SturmChain {
    pub fn new(p: &BigPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut chain = vec![p.primitive_keep_sign()];
        let d = p.derivative();
        if !d.is_zero() {
            chain.push(d.primitive_keep_sign());
        }
        while chain.len() >= 2 {
            let a = &chain[chain.len() - 2];
            let b = &chain[chain.len() - 1];
            let mut r = a.pseudo_rem(b)?;
            let delta = a.degree().unwrap() - b.degree().unwrap();
            // keep the multiplier lc(b)^(delta+1) positive
            if b.lead().unwrap().is_negative() && delta % 2 == 0 {
                r = -&r;
            }
            if r.is_zero() {
                break;
            }
            chain.push((-&r).primitive_keep_sign());
        }
        Ok(SturmChain { chain })
    }

    pub fn polys(&self) -> &[BigPoly] {
        &self.chain
    }

    /// Sign variations of the chain at `x`, zeros dropped.
    pub fn variations_at(&self, x: &Endpoint) -> usize {
        let signs: Vec<i32> = self
            .chain
            .iter()
            .map(|f| {
                let lead = if f.lead().unwrap().is_positive() { 1 } else { -1 };
                match x {
                    Endpoint::PosInfinity => lead,
                    Endpoint::NegInfinity => {
                        if f.degree().unwrap() % 2 == 0 {
                            lead
                        } else {
                            -lead
                        }
                    }
                    Endpoint::Finite(v) => f.sign_at(v),
                }
            })
            .filter(|&s| s != 0)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }
}

/// Distinct real roots in `(lo, hi]`. Finite endpoints must not be roots.
pub fn sturm_count(p: &BigPoly, lo: &Endpoint, hi: &Endpoint) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    for e in [lo, hi] {
        if let Endpoint::Finite(v) = e {
            if p.sign_at(v) == 0 {
                return Err(Error::EndpointIsRoot(v.to_string()));
            }
        }
    }
    if endpoint_cmp(lo, hi) != Ordering::Less {
        return Ok(0);
    }
    let chain = SturmChain::new(p)?;
    Ok(chain.variations_at(lo).saturating_sub(chain.variations_at(hi)))
}

fn endpoint_cmp(a: &Endpoint, b: &Endpoint) -> Ordering {
    use Endpoint::*;
    match (a, b) {
        (NegInfinity, NegInfinity) | (PosInfinity, PosInfinity) => Ordering::Equal,
        (NegInfinity, _) | (_, PosInfinity) => Ordering::Less,
        (_, NegInfinity) | (PosInfinity, _) => Ordering::Greater,
        (Finite(x), Finite(y)) => x.cmp(y),
    }
}

/// Roots of `p` in the open interval `(lo, hi)`, counted with multiplicity.
/// Unlike [`sturm_count`], endpoints may be roots.
pub fn roots_in_open_interval(p: &BigPoly, lo: &Frac, hi: &Frac) -> Result<usize> {
    let d = p.squarefree_decompose()?;
    let mut total = 0;
    for (f, e) in &d.factors {
        let chain = SturmChain::new(f)?;
        // at a root x of a square-free f the zero-dropped count equals V(x+)
        let mut k = chain
            .variations_at(&Endpoint::Finite(lo.clone()))
            .saturating_sub(chain.variations_at(&Endpoint::Finite(hi.clone())));
        if lo < hi && f.sign_at(hi) == 0 {
            k -= 1;
        }
        total += k * *e as usize;
    }
    Ok(total)
}

/// Real roots counted with multiplicity, following the square-free
/// decomposition and isolating each factor.
pub fn num_real_roots(p: &BigPoly) -> Result<RootCountResult> {
    let d = p.squarefree_decompose()?;
    let mut regions: Vec<(IsolRegion, u32, usize)> = Vec::new();
    for (idx, (f, e)) in d.factors.iter().enumerate() {
        regions.extend(isolate_squarefree(f).into_iter().map(|r| (r, *e, idx)));
    }
    separate(&mut regions, &d.factors);
    regions.sort_by(|a, b| a.0.lo.cmp(&b.0.lo).then(a.0.hi.cmp(&b.0.hi)));
    let total = regions.iter().map(|r| r.1 as usize).sum();
    Ok(RootCountResult {
        total_with_multiplicity: total,
        distinct: regions.len(),
        regions: regions.into_iter().map(|(r, e, _)| (r, e)).collect(),
    })
}

/// Total number of real roots with multiplicity.
pub fn count_real_roots(p: &BigPoly) -> Result<usize> {
    let d = p.squarefree_decompose()?;
    Ok(d.factors.iter().map(|(f, e)| isolate_squarefree(f).len() * *e as usize).sum())
}

/// Refine intervals from different factors until no two regions overlap.
fn separate(regions: &mut [(IsolRegion, u32, usize)], factors: &[(BigPoly, u32)]) {
    loop {
        let mut hit = None;
        'outer: for i in 0..regions.len() {
            for j in i + 1..regions.len() {
                if regions[i].0.overlaps(&regions[j].0) {
                    hit = Some((i, j));
                    break 'outer;
                }
            }
        }
        let Some((i, j)) = hit else { return };
        let width = |r: &IsolRegion| &r.hi - &r.lo;
        let k = if width(&regions[i].0) >= width(&regions[j].0) { i } else { j };
        let f = &factors[regions[k].2].0;
        regions[k].0 = refine(f, &regions[k].0);
    }
}

/// One bisection step on an open isolating interval of a square-free `f`.
fn refine(f: &BigPoly, r: &IsolRegion) -> IsolRegion {
    let mid = r.lo.midpoint(&r.hi);
    let s = f.sign_at(&mid);
    if s == 0 {
        return IsolRegion::point(mid);
    }
    if f.sign_at(&r.lo) * s < 0 {
        IsolRegion::open(r.lo.clone(), mid)
    } else {
        IsolRegion::open(mid, r.hi.clone())
    }
}
