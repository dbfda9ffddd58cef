use std::io::{self, Write};

use super::{BenchRecord, MethodSummary};
use crate::adversarial::Method;

pub const RECORD_HEADER: &str =
    "trial,dist,k,N,alpha,exact,approx,greedy,expectation,ratio_approx,ratio_greedy,ratio_expectation";

pub const SUMMARY_HEADER: &str = "dist,method,mean_ratio,min_ratio,trials";

/// Renders `x` with at most `digits` significant digits, `%g` style:
/// trailing zeros dropped, scientific notation outside `1e-5 ..= 10^digits`.
pub fn format_significant(x: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -5 || exp >= digits as i32 {
        format!("{}e{}", trim_fraction(mantissa), exp)
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_fraction(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn num(x: f64) -> String {
    format_significant(x, 9)
}

fn method_column(method: Method) -> &'static str {
    match method {
        Method::Exact => "exact",
        Method::Approx => "approx",
        Method::GreedyBaseline => "greedy",
        Method::ExpectationBaseline => "expectation",
    }
}

pub fn write_records_csv<W: Write>(mut out: W, records: &[BenchRecord]) -> io::Result<()> {
    writeln!(out, "{RECORD_HEADER}")?;
    for r in records {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            r.trial,
            r.dist.tag(),
            r.k,
            r.agents,
            r.alpha,
            num(r.exact),
            num(r.approx),
            num(r.greedy),
            num(r.expectation),
            num(r.ratio(Method::Approx)),
            num(r.ratio(Method::GreedyBaseline)),
            num(r.ratio(Method::ExpectationBaseline)),
        )?;
    }
    out.flush()
}

pub fn write_summary_csv<W: Write>(mut out: W, summary: &[MethodSummary]) -> io::Result<()> {
    writeln!(out, "{SUMMARY_HEADER}")?;
    for s in summary {
        writeln!(
            out,
            "{},{},{},{},{}",
            s.dist.tag(),
            method_column(s.method),
            num(s.mean_ratio),
            num(s.min_ratio),
            s.trials
        )?;
    }
    out.flush()
}
