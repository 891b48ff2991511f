//! `rrseq`: command-line front end for the RR transform.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 search cap exhausted,
//! 3 precondition violated.

mod args;
mod output;

use std::fmt;
use std::fs;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;
use num_bigint::BigInt;
use rrseq_core::catalog::{SeqParams, SeqSpec, FAMILIES};
use rrseq_core::engine::{
    eulerian_poly_cr_scan, find_c_n, is_completely_real, rr_family, rr_transform, table2_min_k,
};
use rrseq_core::roots::{isolate_real_roots, num_real_roots, RegionKind};
use rrseq_core::theorems::{
    classify_quadratic, detect_rational_ratio, extend_distinct_roots, extend_minimal, hyperexp_criteria,
    proposition_scan, QuadVerdict,
};
use rrseq_core::{BigPoly, Error, Exec, Frac};

use args::{Cli, Command, PolyArgs, SeqArgs};

#[derive(Debug)]
struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure { code: 1, msg: msg.into() }
    }
    fn cap(msg: impl Into<String>) -> Self {
        Failure { code: 2, msg: msg.into() }
    }
    fn precondition(msg: impl Into<String>) -> Self {
        Failure { code: 3, msg: msg.into() }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.msg)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::InvalidParameter(_) => 1,
            Error::BudgetExhausted(_) => 2,
            _ => 3,
        };
        Failure { code, msg: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::usage(format!("i/o error: {e}"))
    }
}

type Outcome = Result<(), Failure>;

fn read_poly(p: &PolyArgs) -> Result<Option<BigPoly>, Failure> {
    let text = match (&p.poly, &p.poly_file) {
        (Some(s), _) => s.clone(),
        (None, Some(path)) => fs::read_to_string(path)
            .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?,
        (None, None) => return Ok(None),
    };
    Ok(Some(text.parse()?))
}

fn need_poly(p: &PolyArgs) -> Result<BigPoly, Failure> {
    read_poly(p)?.ok_or_else(|| Failure::usage("give --poly or --poly-file"))
}

fn read_seq(s: &SeqArgs) -> Result<Option<SeqSpec>, Failure> {
    let Some(name) = &s.seq else { return Ok(None) };
    let params = SeqParams { k: s.k.clone(), c: s.c.clone(), j: s.j.clone(), a: s.a.clone(), b: s.b.clone() };
    Ok(Some(SeqSpec::from_name(name, &params)?))
}

fn need_seq(s: &SeqArgs) -> Result<SeqSpec, Failure> {
    read_seq(s)?.ok_or_else(|| Failure::usage("give --seq <family>"))
}

fn frac(s: &str, flag: &str) -> Result<Frac, Failure> {
    s.parse().map_err(|_| Failure::usage(format!("--{flag}: not a rational number: {s:?}")))
}

fn run(cli: Cli, out: &mut dyn Write) -> Outcome {
    let exec = Exec::Parallel;
    let format = cli.format;
    let progress = cli.progress;
    match cli.cmd {
        Command::Rr { seq, poly, n_max } => {
            let (terms, report) = match (read_seq(&seq)?, read_poly(&poly)?) {
                (Some(_), Some(_)) => return Err(Failure::usage("give either --seq or --poly, not both")),
                (Some(spec), None) => {
                    let n = n_max.ok_or_else(|| Failure::usage("--seq needs --n-max"))?;
                    (spec.generate(n)?, rr_family(&spec, n, exec)?)
                }
                (None, Some(p)) => {
                    let terms = p.into_coeffs();
                    let n = n_max.unwrap_or(terms.len().saturating_sub(1));
                    let r = rr_transform(&terms, n, exec)?;
                    (terms, r)
                }
                (None, None) => return Err(Failure::usage("give --seq <family> or --poly <terms>")),
            };
            output::emit_report(&report, &terms, format, out)?;
        }
        Command::Count { poly } => {
            let p = need_poly(&poly)?;
            let r = num_real_roots(&p)?;
            writeln!(out, "total={} distinct={}", r.total_with_multiplicity, r.distinct)?;
            for (reg, m) in &r.regions {
                writeln!(out, "{} {} {m}", reg.lo, reg.hi)?;
            }
        }
        Command::Isolate { poly } => {
            let p = need_poly(&poly)?;
            for reg in isolate_real_roots(&p)? {
                let kind = match reg.kind {
                    RegionKind::Point => "point",
                    RegionKind::OpenInterval => "open",
                };
                writeln!(out, "{} {} {kind}", reg.lo, reg.hi)?;
            }
        }
        Command::Cn { n, k_cap, k_start, all } => {
            let lo = if all { 0 } else { n };
            for m in lo..=n {
                if progress {
                    eprintln!("searching c_{m} up to k = {k_cap}");
                }
                match find_c_n(m, k_start, k_cap, exec) {
                    Some(k) => writeln!(out, "c_{m} = {k}")?,
                    None => return Err(Failure::cap(format!("no k <= {k_cap} gives c_{m}"))),
                }
            }
        }
        Command::Table2 { n, k_cap, all } => {
            if n == 0 {
                return Err(Failure::usage("--n must be at least 1"));
            }
            let lo = if all { 1 } else { n };
            for m in lo..=n {
                if progress {
                    eprintln!("searching n = {m} up to k = {k_cap}");
                }
                match table2_min_k(m, k_cap, exec) {
                    Some(k) => writeln!(out, "n = {m}: k = {k}")?,
                    None => return Err(Failure::cap(format!("no k <= {k_cap} for n = {m}"))),
                }
            }
        }
        Command::CheckCr { poly } => {
            let p = need_poly(&poly)?;
            let (ok, b) = is_completely_real(&p)?;
            writeln!(out, "completely_real={ok}")?;
            let b: Vec<String> = b.iter().map(ToString::to_string).collect();
            writeln!(out, "b = {}", b.join(" "))?;
        }
        Command::EulerianScan { n_lo, n_hi } => {
            for (n, ok) in eulerian_poly_cr_scan(n_lo, n_hi, exec)? {
                writeln!(out, "{n} {ok}")?;
            }
        }
        Command::ClassifyQuadratic { a, b, c, odd_bound } => {
            let (a, b, c) = (frac(&a, "a")?, frac(&b, "b")?, frac(&c, "c")?);
            let cls = classify_quadratic(&a, &b, &c, odd_bound)?;
            writeln!(out, "verdict={}", cls.verdict.name())?;
            for (cond, v) in &cls.details {
                writeln!(out, "  [{v}] {cond}")?;
            }
            if cls.verdict == QuadVerdict::Invalid {
                return Err(Failure::precondition("a, b, c must be non-negative and not all zero"));
            }
        }
        Command::DetectRatio { seq, n_max } => {
            let spec = need_seq(&seq)?;
            match detect_rational_ratio(&spec.generate(n_max)?)? {
                Some(f) => writeln!(
                    out,
                    "a={} b={} c={} d={} verified_through={} side_conditions={}",
                    f.a, f.b, f.c, f.d, f.verified_through, f.side_conditions
                )?,
                None => writeln!(out, "no rational ratio fits")?,
            }
        }
        Command::ExtendDistinct { poly, iters } => {
            let mut p = need_poly(&poly)?;
            for _ in 0..iters {
                let (u, q) = extend_distinct_roots(&p)?;
                writeln!(out, "u={u} q={}", q.to_text())?;
                p = q.clear_denominators();
            }
            writeln!(out, "cleared={}", p.to_text())?;
        }
        Command::ExtendMinimal { poly, iters } => {
            let mut p = need_poly(&poly)?;
            for _ in 0..iters {
                let (u, q) = extend_minimal(&p)?;
                writeln!(out, "u={u} q={}", q.to_text())?;
                p = q.clear_denominators();
            }
            writeln!(out, "cleared={}", p.to_text())?;
        }
        Command::PropScan { n_lo, n_hi, u } => {
            let us = u.iter().map(|s| frac(s, "u")).collect::<Result<Vec<_>, _>>()?;
            let rep = proposition_scan(n_lo, n_hi, &us, exec)?;
            for (n, u, c) in &rep.cases {
                writeln!(out, "{n} {u} {c}")?;
            }
            writeln!(out, "holds={}", rep.holds)?;
            match &rep.n2_witness {
                Some(w) => writeln!(out, "n2_witness={w}")?,
                None => writeln!(out, "n2_witness=none")?,
            }
        }
        Command::Hyperexp { seq, n_check } => {
            let spec = need_seq(&seq)?;
            let r = hyperexp_criteria(&spec.generate(2 * n_check + 1)?, n_check)?;
            writeln!(out, "u_decreasing={}", r.u_decreasing)?;
            writeln!(out, "v_decreasing={}", r.v_decreasing)?;
            writeln!(out, "ineq_ii={}", r.ineq_ii_holds)?;
            writeln!(out, "ineq_iii={}", r.ineq_iii_holds)?;
            writeln!(out, "checked_n={}", r.checked_n)?;
        }
        Command::Catalog { seq, n_max } => match read_seq(&seq)? {
            Some(spec) => {
                let terms: Vec<BigInt> = spec.generate(n_max)?;
                output::emit_terms(&terms, format, out)?;
            }
            None => {
                for (name, params) in FAMILIES {
                    if params.is_empty() {
                        writeln!(out, "{name}")?;
                    } else {
                        writeln!(out, "{name} {params}")?;
                    }
                }
            }
        },
    }
    Ok(())
}

#[cfg(feature = "parallel")]
fn with_pool<T: Send>(threads: Option<u32>, f: impl FnOnce() -> T + Send) -> Result<T, Failure> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        b = b.num_threads(n as usize);
    }
    let pool = b.build().map_err(|e| Failure::usage(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

#[cfg(not(feature = "parallel"))]
fn with_pool<T: Send>(_threads: Option<u32>, f: impl FnOnce() -> T + Send) -> Result<T, Failure> {
    Ok(f())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = (|| -> Outcome {
        let mut sink: Box<dyn Write + Send> = match &cli.output {
            Some(path) => Box::new(BufWriter::new(fs::File::create(path)?)),
            None => Box::new(BufWriter::new(io::stdout())),
        };
        let threads = cli.threads;
        let r = with_pool(threads, || run(cli, &mut sink))?;
        sink.flush()?;
        r
    })();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("rrseq: {f}");
            ExitCode::from(f.code)
        }
    }
}
