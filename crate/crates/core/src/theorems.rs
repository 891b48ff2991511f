//! Checkers and constructions for the minimality and completely-real
//! theorems: quadratic sequences, rational term ratios, the two one-term
//! extensions, the `(x-1)^n + u x^(n+1)` family and the hyper-exponential
//! criteria.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::frac::Frac;
use crate::poly::{BigPoly, RatPoly};
use crate::roots::{count_real_roots, num_real_roots, root_bound, roots_in_open_interval};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadVerdict {
    CaseI,
    CaseII,
    CaseIIIi,
    CaseIIIii,
    /// Case III(iii), with the odd-`n` root condition checked only up to a
    /// bound.
    CaseIIIiiiCandidate,
    NotMinimal,
    Invalid,
}

impl QuadVerdict {
    pub fn name(self) -> &'static str {
        match self {
            QuadVerdict::CaseI => "case_I",
            QuadVerdict::CaseII => "case_II",
            QuadVerdict::CaseIIIi => "case_III_i",
            QuadVerdict::CaseIIIii => "case_III_ii",
            QuadVerdict::CaseIIIiiiCandidate => "case_III_iii_candidate",
            QuadVerdict::NotMinimal => "not_minimal",
            QuadVerdict::Invalid => "invalid",
        }
    }

    /// Whether the verdict predicts `b_n = n mod 2` for every `n`.
    pub fn predicts_minimal(self) -> bool {
        !matches!(self, QuadVerdict::NotMinimal | QuadVerdict::Invalid)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadClassification {
    pub verdict: QuadVerdict,
    /// Each condition evaluated, in order, with its truth value.
    pub details: Vec<(String, bool)>,
}

/// Classify `a_n = a n^2 + b n + c` by whether its RR transform is minimal.
/// For case III(iii) the root condition on `q_n` is verified for odd
/// `3 <= n <= odd_check_bound`.
pub fn classify_quadratic(a: &Frac, b: &Frac, c: &Frac, odd_check_bound: usize) -> Result<QuadClassification> {
    let mut details = Vec::new();
    let mut note = |s: &str, v: bool| {
        details.push((s.to_string(), v));
        v
    };
    let zero = Frac::zero();
    let two = Frac::from(2);
    let four = Frac::from(4);
    let nonneg = note("a >= 0, b >= 0, c >= 0", a >= &zero && b >= &zero && c >= &zero);
    let all_zero = a.is_zero() && b.is_zero() && c.is_zero();
    if !nonneg || all_zero {
        note("not all of a, b, c zero", !all_zero);
        return Ok(QuadClassification { verdict: QuadVerdict::Invalid, details });
    }
    if !note("c > 0", c > &zero) {
        return Ok(QuadClassification { verdict: QuadVerdict::NotMinimal, details });
    }
    let b_minus_a = b - a;
    let half_b = b / &two;
    let mid = &(a + b) / &two;
    let three_quarter = &(&Frac::from(3) * b - a.clone()) / &four;

    let b_gt_a = b > a;
    let verdict = if note("I: b > a and b/2 <= c < b - a", b_gt_a && &half_b <= c && c < &b_minus_a) {
        QuadVerdict::CaseI
    } else if note("II: b > a, c = b - a and b >= 2a", b_gt_a && c == &b_minus_a && b >= &(&two * a)) {
        QuadVerdict::CaseII
    } else if !note("III: c > max(0, b - a)", c > &b_minus_a) {
        QuadVerdict::NotMinimal
    } else if note("III(i): c >= (a + b)/2", c >= &mid) {
        QuadVerdict::CaseIIIi
    } else if note("III(ii): b/2 <= c <= (3b - a)/4", &half_b <= c && c <= &three_quarter) {
        QuadVerdict::CaseIIIii
    } else {
        let range = note("III(iii): (3b - a)/4 < c < (a + b)/2", &three_quarter < c && c < &mid);
        let lhs = &(&Frac::from(8) * a) * c;
        let sq = (a + b).pow(2);
        let disc = note("III(iii): 8ac >= (a + b)^2", lhs >= sq);
        if !(range && disc) {
            QuadVerdict::NotMinimal
        } else {
            let mut ok = true;
            let mut n = 3;
            while n <= odd_check_bound {
                let q = build_qn(a, b, c, n)?;
                if roots_in_open_interval(&q, &Frac::from(-1), &Frac::zero())? != 1 {
                    ok = false;
                    break;
                }
                n += 2;
            }
            let label = if ok {
                format!("III(iii): q_n has one root in (-1, 0) for odd n <= {odd_check_bound}")
            } else {
                format!("III(iii): q_{n} does not have exactly one root in (-1, 0)")
            };
            if note(&label, ok) {
                QuadVerdict::CaseIIIiiiCandidate
            } else {
                QuadVerdict::NotMinimal
            }
        }
    };
    Ok(QuadClassification { verdict, details })
}

/// `q_n = (1-x)^3 p_n` for `p_n = sum_{i<=n} (a i^2 + b i + c) x^i`, by
/// its closed form, scaled by the positive lcm of the denominators.
pub fn build_qn(a: &Frac, b: &Frac, c: &Frac, n: usize) -> Result<BigPoly> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("q_n needs n >= 2, got {n}")));
    }
    let nf = Frac::from(n as i64);
    let n1 = &nf + &Frac::one();
    let quad = |x: &Frac| &(&(a * &x.pow(2)) + &(b * x)) + c;
    let mut co = vec![Frac::zero(); n + 4];
    co[n + 3] = -quad(&nf);
    // a(2n^2 + 2n - 1) + b(2n + 1) + 2c
    let two = Frac::from(2);
    let t = &(&(&two * &nf.pow(2)) + &(&two * &nf)) - &Frac::one();
    co[n + 2] = &(&(a * &t) + &(b * &(&(&two * &nf) + &Frac::one()))) + &(&two * c);
    co[n + 1] = -quad(&n1);
    co[2] = &(a - b) + c;
    co[1] = &(a + b) - &(&two * c);
    co[0] = c.clone();
    Ok(RatPoly { coeffs: co }.clear_denominators())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioFit {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
    /// `(c n + d) a_{n+1} = (a n + b) a_n` holds for `0 <= n <= verified_through`.
    pub verified_through: usize,
    /// `a, b, c, d >= 0`, `c <= d`, `(a, b) != 0` and `(c, d) != 0`.
    pub side_conditions: bool,
}

/// Null space of a rational matrix with 4 columns, as a basis.
fn null_space(mut rows: Vec<[Frac; 4]>) -> Vec<[Frac; 4]> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..4 {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][col].recip().expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, pv) in row.iter_mut().zip(&pivot) {
                    *x = &*x - &(pv * &f);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    (0..4)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v: [Frac; 4] = Default::default();
            v[free] = Frac::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -&rows[i][free];
            }
            v
        })
        .collect()
}

fn normalize(v: &[Frac; 4]) -> [BigInt; 4] {
    let l = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.den()));
    let mut w: Vec<BigInt> = v.iter().map(|x| x.num() * (&l / x.den())).collect();
    let g = w.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() {
        w.iter_mut().for_each(|x| *x = &*x / &g);
    }
    let lead = if w[2].is_zero() { &w[3] } else { &w[2] };
    if lead.is_negative() {
        w.iter_mut().for_each(|x| *x = -&*x);
    }
    [w[0].clone(), w[1].clone(), w[2].clone(), w[3].clone()]
}

/// Fits `a_{n+1}/a_n = (a n + b)/(c n + d)` exactly to all of `terms`.
/// Returns `None` when no such ratio fits.
pub fn detect_rational_ratio(terms: &[BigInt]) -> Result<Option<RatioFit>> {
    if terms.len() < 4 {
        return Err(Error::InsufficientTerms { needed: 4, got: terms.len() });
    }
    if terms.iter().any(Zero::is_zero) {
        return Err(Error::Precondition("terms must be nonzero".into()));
    }
    let rows: Vec<[Frac; 4]> = (0..terms.len() - 1)
        .map(|n| {
            let nn = BigInt::from(n);
            [
                Frac::from(&nn * &terms[n]),
                Frac::from(terms[n].clone()),
                Frac::from(-(&nn * &terms[n + 1])),
                Frac::from(-terms[n + 1].clone()),
            ]
        })
        .collect();
    let basis = null_space(rows);
    let v = match basis.len() {
        0 => return Ok(None),
        1 => normalize(&basis[0]),
        _ => {
            // A constant ratio r leaves (a, b) = r (c, d) free; report r/1.
            let r = Frac::new(terms[1].clone(), terms[0].clone())?;
            let constant = terms.windows(2).all(|w| Frac::new(w[1].clone(), w[0].clone()).ok() == Some(r.clone()));
            if !constant {
                return Ok(None);
            }
            normalize(&[Frac::zero(), r, Frac::zero(), Frac::one()])
        }
    };
    let [a, b, c, d] = v;
    let zero = BigInt::zero();
    let side_conditions = a >= zero
        && b >= zero
        && c >= zero
        && d >= zero
        && c <= d
        && !(a.is_zero() && b.is_zero())
        && !(c.is_zero() && d.is_zero());
    Ok(Some(RatioFit { a, b, c, d, verified_through: terms.len() - 2, side_conditions }))
}

fn with_top(p: &BigPoly, u: &Frac) -> RatPoly {
    let mut co = RatPoly::from_int(p).coeffs;
    let n = p.degree().unwrap_or(0);
    co.resize(n + 1, Frac::zero());
    co.push(u.clone());
    RatPoly { coeffs: co }
}

/// Largest power of two strictly below the positive `bound`.
fn pow2_below(bound: &Frac) -> Frac {
    let mut u = Frac::one();
    while &u >= bound {
        u = &u / &Frac::from(2);
    }
    let two = Frac::from(2);
    while &(&u * &two) < bound {
        u = &u * &two;
    }
    u
}

/// For `p` of degree `n >= 1` with `n` distinct real roots, a nonzero `u`
/// with `p + u x^(n+1)` having `n + 1` distinct real roots.
pub fn extend_distinct_roots(p: &BigPoly) -> Result<(Frac, RatPoly)> {
    let n = match p.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::Precondition("degree must be at least 1".into())),
        Some(d) => d,
    };
    let rc = num_real_roots(p)?;
    if rc.distinct != n || rc.total_with_multiplicity != n {
        return Err(Error::Precondition(format!(
            "need {n} distinct real roots, found {} distinct, {} total",
            rc.distinct, rc.total_with_multiplicity
        )));
    }
    let outer = &root_bound(p)? + &Frac::one();
    let mut samples = vec![-&outer];
    for w in rc.regions.windows(2) {
        samples.push(w[0].0.hi.midpoint(&w[1].0.lo));
    }
    samples.push(outer);
    // |u s^(n+1)| < |p(s)| keeps the sign of p at every sample; zero
    // samples need nothing since q(0) = p(0).
    let mut bound: Option<Frac> = None;
    for s in &samples {
        if s.is_zero() {
            continue;
        }
        let v = p.eval_frac(s);
        debug_assert!(!v.is_zero());
        let r = &v.abs() / &s.abs().pow(n as u32 + 1);
        bound = Some(match bound {
            Some(b) if b <= r => b,
            _ => r,
        });
    }
    let mut u = pow2_below(&bound.expect("at least two nonzero samples"));
    // The extra root appears beyond the last sample.
    if p.sign_at(samples.last().unwrap()) > 0 {
        u = -u;
    }
    let q = with_top(p, &u);
    let rq = num_real_roots(&q.clear_denominators())?;
    if rq.distinct != n + 1 || rq.total_with_multiplicity != n + 1 {
        return Err(Error::Precondition("extension failed its postcondition".into()));
    }
    Ok((u, q))
}

/// Trial values of `u`: `1, 2, 1/2, 4, 1/4, ...` up to `2^64` and `2^-64`.
fn u_schedule() -> impl Iterator<Item = Frac> {
    std::iter::once(Frac::one()).chain((1..=64u32).flat_map(|e| {
        let p = Frac::from(BigInt::one() << e);
        let r = p.recip().expect("nonzero");
        [p, r]
    }))
}

/// For `p` of degree `n` with `a_0 > 0` and `n mod 2` real roots, a `u > 0`
/// with `p + u x^(n+1)` having `(n + 1) mod 2` real roots.
pub fn extend_minimal(p: &BigPoly) -> Result<(Frac, RatPoly)> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    if !p.constant_term().is_positive() {
        return Err(Error::Precondition("constant term must be positive".into()));
    }
    let have = count_real_roots(p)?;
    if have != n % 2 {
        return Err(Error::Precondition(format!("degree {n} with {have} real roots is not minimal")));
    }
    let want = (n + 1) % 2;
    let mut trials = 0;
    for u in u_schedule() {
        trials += 1;
        let q = with_top(p, &u);
        if count_real_roots(&q.clear_denominators())? == want {
            return Ok((u, q));
        }
    }
    Err(Error::BudgetExhausted(trials))
}

/// `den(u) (x-1)^n + num(u) x^(n+1)`, a positive multiple of
/// `(x-1)^n + u x^(n+1)`.
pub fn proposition_poly(n: usize, u: &Frac) -> BigPoly {
    let base = BigPoly::from_i64s(&[-1, 1]).pow(n as u32).scale(u.den());
    &base + &BigPoly::monomial(u.num().clone(), n + 1)
}

/// `-n^n / (n+1)^(n+1)`, where `x = n + 1` is a double root.
pub fn double_root_u(n: usize) -> Frac {
    let num = num_traits::pow(BigInt::from(n), n);
    let den = num_traits::pow(BigInt::from(n + 1), n + 1);
    -Frac::new(num, den).expect("nonzero")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropositionReport {
    /// `(n, u, real roots with multiplicity)`.
    pub cases: Vec<(usize, Frac, usize)>,
    /// Every case had fewer than `n + 1` real roots.
    pub holds: bool,
    /// A `u` in `(-1/6, 0)` for which `(x-1)^2 + u x^3` has 3 real roots.
    pub n2_witness: Option<Frac>,
}

/// Counts the real roots of `(x-1)^n + u x^(n+1)` for each `n` in range and
/// each sample `u`, plus the double-root value of `u` for that `n`.
pub fn proposition_scan(n_lo: usize, n_hi: usize, u_samples: &[Frac], exec: Exec) -> Result<PropositionReport> {
    if n_lo < 3 || n_lo > n_hi {
        return Err(Error::InvalidParameter(format!("need 3 <= n_lo <= n_hi, got {n_lo}..{n_hi}")));
    }
    if u_samples.iter().any(Frac::is_zero) {
        return Err(Error::InvalidParameter("u samples must be nonzero".into()));
    }
    let mut jobs = Vec::new();
    for n in n_lo..=n_hi {
        for u in u_samples.iter().cloned().chain(std::iter::once(double_root_u(n))) {
            jobs.push((n, u));
        }
    }
    let counts: Result<Vec<usize>> = exec
        .map_range(jobs.len(), |i| count_real_roots(&proposition_poly(jobs[i].0, &jobs[i].1)))
        .into_iter()
        .collect();
    let cases: Vec<_> = jobs.into_iter().zip(counts?).map(|((n, u), c)| (n, u, c)).collect();
    let holds = cases.iter().all(|(n, _, c)| *c < n + 1);
    let n2_witness = (7..=200)
        .map(|m| Frac::ratio(-1, m))
        .find(|u| count_real_roots(&proposition_poly(2, u)).ok() == Some(3));
    Ok(PropositionReport { cases, holds, n2_witness })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperExpReport {
    pub u_decreasing: bool,
    pub v_decreasing: bool,
    pub ineq_ii_holds: bool,
    pub ineq_iii_holds: bool,
    pub checked_n: usize,
}

impl HyperExpReport {
    pub fn all_hold(&self) -> bool {
        self.u_decreasing && self.v_decreasing && self.ineq_ii_holds && self.ineq_iii_holds
    }
}

/// Exact check of the three sufficient conditions for minimality of a
/// positive sequence, for `1 <= n <= n_check`:
/// `u_n = a_{2n-1}/a_{2n}` and `v_n = 2n a_{2n}/((2n+1) a_{2n+1})` strictly
/// decreasing, `sum_{i<=n} a_{2i-1} u_n^(2i-1) < a_0` and
/// `sum_{i<=n} 2i a_{2i} v_n^(2i-1) < a_1`.
pub fn hyperexp_criteria(terms: &[BigInt], n_check: usize) -> Result<HyperExpReport> {
    let needed = 2 * n_check + 2;
    if n_check == 0 || terms.len() < needed {
        return Err(Error::InsufficientTerms { needed: needed.max(4), got: terms.len() });
    }
    if terms.iter().take(needed).any(|t| !t.is_positive()) {
        return Err(Error::Precondition("terms must be positive".into()));
    }
    let a = |i: usize| Frac::from(terms[i].clone());
    let u = |n: usize| &a(2 * n - 1) / &a(2 * n);
    let v = |n: usize| {
        let num = &Frac::from(2 * n as i64) * &a(2 * n);
        let den = &Frac::from(2 * n as i64 + 1) * &a(2 * n + 1);
        &num / &den
    };
    let us: Vec<Frac> = (1..=n_check).map(u).collect();
    let vs: Vec<Frac> = (1..=n_check).map(v).collect();
    let u_decreasing = us.windows(2).all(|w| w[1] < w[0]);
    let v_decreasing = vs.windows(2).all(|w| w[1] < w[0]);
    let ineq_ii_holds = (1..=n_check).all(|n| {
        let s = (1..=n).fold(Frac::zero(), |s, i| &s + &(&a(2 * i - 1) * &us[n - 1].pow(2 * i as u32 - 1)));
        s < a(0)
    });
    let ineq_iii_holds = (1..=n_check).all(|n| {
        let s = (1..=n).fold(Frac::zero(), |s, i| {
            let t = &Frac::from(2 * i as i64) * &a(2 * i);
            &s + &(&t * &vs[n - 1].pow(2 * i as u32 - 1))
        });
        s < a(1)
    });
    Ok(HyperExpReport { u_decreasing, v_decreasing, ineq_ii_holds, ineq_iii_holds, checked_n: n_check })
}
