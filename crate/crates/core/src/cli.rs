//! Command dispatch and text rendering shared by the binary and the examples.

use std::fmt::Write as _;
use std::time::Instant;

use crate::analysis::{crown_table, exact_block, Analysis};
use crate::error::Result;
use crate::exact::ExactOptions;
use crate::group::DEFAULT_ORDER_CAP;
use crate::mc::mc_estimate;
use crate::report::{Num, Report};
use crate::spec::GroupSpec;
use crate::verify;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Exact,
    Mc { trials: u64, seed: u64 },
    Bounds,
    Crowns,
    VerifyPaper,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Exact => "exact",
            Command::Mc { .. } => "mc",
            Command::Bounds => "bounds",
            Command::Crowns => "crowns",
            Command::VerifyPaper => "verify-paper",
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    pub order_cap: usize,
    pub exact: ExactOptions,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            order_cap: DEFAULT_ORDER_CAP,
            exact: ExactOptions::default(),
        }
    }
}

fn timed<T>(report: &mut Report, key: &str, f: impl FnOnce() -> Result<T>) -> Result<T> {
    let start = Instant::now();
    let out = f()?;
    report
        .timings_ms
        .insert(key.to_string(), start.elapsed().as_millis() as u64);
    Ok(out)
}

/// Runs one command. `spec` is ignored by `verify-paper` and required otherwise.
pub fn run(cmd: &Command, spec: Option<&GroupSpec>, opts: &RunOptions) -> Result<Report> {
    let mut report = Report::new(cmd.name());
    if *cmd == Command::VerifyPaper {
        report.verify = Some(timed(&mut report, "verify", || {
            Ok(verify::run(opts.exact))
        })?);
        return Ok(report);
    }
    let spec =
        spec.ok_or_else(|| crate::error::Error::Parse("missing group description".into()))?;
    let a = timed(&mut report, "setup", || {
        let g = spec.build_with_cap(opts.order_cap)?;
        Analysis::from_group(&spec.label, &spec.to_string(), g, opts.exact)
    })?;
    report.group = Some(a.info());
    match cmd {
        Command::Exact => {
            let v = timed(&mut report, "exact", || a.exact())?;
            report.chebotarev = Some(exact_block(&v));
        }
        Command::Mc { trials, seed } => {
            let s = a.sieves()?;
            let mc = timed(&mut report, "monte_carlo", || {
                mc_estimate(&s, *trials, *seed)
            })?;
            report.monte_carlo = Some(mc);
        }
        Command::Crowns => {
            let c = timed(&mut report, "crowns", || a.crowns())?;
            report.crowns = Some(crown_table(&c));
        }
        Command::Bounds => {
            let b = timed(&mut report, "bounds", || a.bound_report())?;
            report.bounds = Some(b);
        }
        Command::VerifyPaper => unreachable!(),
    }
    Ok(report)
}

fn num(n: &Num) -> String {
    if n.rational.contains('/') {
        format!("{} ({})", n.decimal, n.rational)
    } else {
        n.rational.clone()
    }
}

fn opt(n: &Option<Num>) -> String {
    n.as_ref().map(num).unwrap_or_else(|| "-".into())
}

/// Plain-text rendering of a report.
pub fn render_table(r: &Report) -> String {
    let mut out = String::new();
    if let Some(g) = &r.group {
        let kind = if g.soluble { "soluble" } else { "insoluble" };
        let _ = writeln!(out, "group   {}  |G| = {}  {kind}", g.label, g.order);
    }
    if let Some(c) = &r.chebotarev {
        let _ = writeln!(out, "C(G)    {}", c.value.rational);
        let _ = writeln!(out, "        ~ {}", c.value.decimal);
        let _ = writeln!(
            out,
            "        {} sieves, {} terms, {}",
            c.sieve_count, c.term_count, c.method
        );
    }
    if let Some(m) = &r.monte_carlo {
        let _ = writeln!(out, "trials  {}  seed {}", m.trials, m.seed);
        let _ = writeln!(out, "mean    {:.12}", m.mean);
        let _ = writeln!(out, "var     {:.12}", m.variance);
        let _ = writeln!(out, "95% ci  [{:.12}, {:.12}]", m.ci95.0, m.ci95.1);
        let _ = writeln!(out, "max     {}", m.max_waiting_time);
    }
    if let Some(t) = &r.crowns {
        let _ = writeln!(out, "chief length {}", t.chief_length);
        let _ = writeln!(
            out,
            "{:<14} {:>3} {:>5} {:>4} {:>3} {:>5} {:>5} {:>7} {:>5} {:>8} {:>3}",
            "factor", "p", "n_raw", "q", "n", "delta", "theta", "central", "|H|", "p_fix", "m"
        );
        for c in &t.classes {
            let m = c.m.map(|m| m.to_string()).unwrap_or_else(|| "?".into());
            let _ = writeln!(
                out,
                "{:<14} {:>3} {:>5} {:>4} {:>3} {:>5} {:>5} {:>7} {:>5} {:>8} {:>3}",
                c.label,
                c.p,
                c.n_raw,
                c.q,
                c.n,
                c.delta,
                c.theta,
                c.central,
                c.h_order,
                c.p_fix.rational,
                m
            );
        }
        for e in &t.excluded {
            let why = if !e.abelian { "nonabelian" } else { "Frattini" };
            let _ = writeln!(
                out,
                "excluded factor #{} of order {} ({why})",
                e.index, e.order
            );
        }
    }
    if let Some(b) = &r.bounds {
        let _ = writeln!(out, "exact        {}", opt(&b.exact));
        let _ = writeln!(out, "d(G)         {}", b.d_g);
        let _ = writeln!(out, "crown        {}", opt(&b.thm2_bound));
        let _ = writeln!(out, "d(G) crown   {}", opt(&b.cor36_bound));
        let _ = writeln!(out, "V-property   {}", opt(&b.v_property_bound));
        let _ = writeln!(out, "5/3 sqrt|G|  {}", b.five_thirds_bound.decimal);
        for f in &b.per_factor {
            let _ = write!(
                out,
                "  {}  alpha = {}  [{} | {}]",
                f.label,
                num(&f.value),
                opt(&f.branch1),
                num(&f.branch2)
            );
            if let Some(l) = &f.ratio_check {
                let tag = match l.exceptional_case {
                    Some(k) => format!("exception {k}"),
                    None if l.passes => "below threshold".into(),
                    None => "above threshold".into(),
                };
                let _ = write!(out, "  ratio {:.6} vs {:.6} ({tag})", l.ratio, l.threshold);
            }
            if let Some(e) = &f.ratio_error {
                let _ = write!(out, "  {e}");
            }
            out.push('\n');
        }
        for (name, v) in b.verdicts.all() {
            let _ = writeln!(out, "{name:<16} {v}");
        }
        if b.five_thirds_equality {
            let _ = writeln!(out, "(equality in 5/3 sqrt|G|)");
        }
    }
    if let Some(items) = &r.verify {
        for i in items {
            let mark = if i.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "[{mark}] {:>2} {} ({} ms)", i.id, i.name, i.millis);
            let _ = writeln!(out, "        {}", i.detail);
        }
    }
    out
}
