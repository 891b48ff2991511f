use std::io::{self, Write};

use num_bigint::BigInt;
use rrseq_core::engine::RRReport;

use crate::args::Format;

/// One `n b_n` line per index.
pub fn emit_bfile<W: Write + ?Sized>(report: &RRReport, sink: &mut W) -> io::Result<()> {
    for (n, b) in report.b.iter().enumerate() {
        writeln!(sink, "{n} {b}")?;
    }
    Ok(())
}

pub fn emit_report<W: Write + ?Sized>(report: &RRReport, terms: &[BigInt], format: Format, sink: &mut W) -> io::Result<()> {
    match format {
        Format::Bfile => emit_bfile(report, sink),
        Format::Csv => {
            writeln!(sink, "n,a_n,b_n")?;
            for (n, b) in report.b.iter().enumerate() {
                writeln!(sink, "{n},{},{b}", terms[n])?;
            }
            Ok(())
        }
        Format::Table => {
            writeln!(sink, "{:>6}  {:>6}  {:>6}  a_n", "n", "b_n", "dual")?;
            for (n, b) in report.b.iter().enumerate() {
                writeln!(sink, "{n:>6}  {b:>6}  {:>6}  {}", report.dual[n], terms[n])?;
            }
            match report.first_nonminimal {
                None => writeln!(sink, "minimal (b_n = n mod 2) through n = {}", report.n_max),
                Some(n) => writeln!(sink, "first non-minimal index: n = {n}"),
            }
        }
    }
}

/// Integer sequence in the chosen format.
pub fn emit_terms<W: Write + ?Sized>(terms: &[BigInt], format: Format, sink: &mut W) -> io::Result<()> {
    match format {
        Format::Bfile | Format::Table => {
            for (n, a) in terms.iter().enumerate() {
                writeln!(sink, "{n} {a}")?;
            }
        }
        Format::Csv => {
            writeln!(sink, "n,a_n")?;
            for (n, a) in terms.iter().enumerate() {
                writeln!(sink, "{n},{a}")?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rrseq_core::engine::rr_transform;
    use rrseq_core::Exec;

    #[test]
    fn bfile_lines() {
        let terms: Vec<BigInt> = vec![1.into(); 4];
        let r = rr_transform(&terms, 3, Exec::Sequential).unwrap();
        let mut out = Vec::new();
        emit_bfile(&r, &mut out).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), "0 0\n1 1\n2 0\n3 1\n");

        let r = rr_transform(&terms, 0, Exec::Sequential).unwrap();
        let mut out = Vec::new();
        emit_bfile(&r, &mut out).unwrap();
        assert_eq!(out, b"0 0\n");
    }
}
