//! The regression harness behind `verify-paper`: ten numbered checks with
//! fixed catalogs and seeds.

use std::time::Instant;

use num_rational::BigRational;
use num_traits::One;

use crate::analysis::Analysis;
use crate::bounds::{self, Verdict};
use crate::catalog;
use crate::decimal::{int, rat, render_sig, to_f64};
use crate::error::Result;
use crate::exact::{elementary_abelian_cheb, invariable_gen_prob_with, ExactOptions};
use crate::mc::mc_estimate;
use crate::report::VerifyItem;
use crate::spec::{GroupSpec, SpecKind};

pub const CHECK_COUNT: u32 = 10;

/// Seeds for the Monte Carlo check.
pub const MC_SEEDS: std::ops::Range<u64> = 0..50;
pub const MC_TRIALS: u64 = 100_000;

pub fn check_name(id: u32) -> &'static str {
    match id {
        1 => "exact values of C_2, C_2^2, C_2^3",
        2 => "elementary abelian closed form and 5/3 ratio",
        3 => "5/3 sqrt|G| on the soluble catalog",
        4 => "crown bounds on the soluble catalog",
        5 => "exceptional-case constructions",
        6 => "P_I(G,k) against tuple enumeration",
        7 => "Monte Carlo agreement",
        8 => "binomial tail sums",
        9 => "V-property sum bound on the soluble catalog",
        10 => "Frattini quotient invariance",
        _ => "unknown",
    }
}

fn elementary(p: u64, d: u32) -> GroupSpec {
    GroupSpec::new(SpecKind::Elementary(p, d))
}

fn exact_of(spec: &GroupSpec, opts: ExactOptions) -> Result<BigRational> {
    Ok(Analysis::new(spec, opts)?.exact()?.exact)
}

fn check1(opts: ExactOptions) -> Result<(bool, String)> {
    let c2 = exact_of(&elementary(2, 1), opts)?;
    let c4 = exact_of(&elementary(2, 2), opts)?;
    let c8 = exact_of(&elementary(2, 3), opts)?;
    let klein_ratio_sq = &c4 * &c4 / int(4);
    let ratio8 = to_f64(&c8) / 8f64.sqrt();
    let ok = c2 == int(2)
        && c4 == rat(10, 3)
        && klein_ratio_sq == rat(25, 9)
        && c8 == rat(94, 21)
        && (ratio8 - 1.5826).abs() <= 1e-4;
    Ok((
        ok,
        format!("C_2={c2}, C_2^2={c4}, C_2^3={c8}, C(C_2^3)/sqrt 8={ratio8:.6}"),
    ))
}

fn check2(opts: ExactOptions) -> Result<(bool, String)> {
    let mut ok = true;
    let mut parts = Vec::new();
    for p in [2u64, 3, 5] {
        for d in 1..=4u32 {
            let order = p.pow(d);
            let exact = exact_of(&elementary(p, d), opts)?;
            let closed = elementary_abelian_cheb(p, d)?;
            let sq = &exact * &exact;
            let limit = rat(25, 9) * int(order);
            let equal = sq == limit;
            let fine = exact == closed && sq <= limit && (equal == (p == 2 && d == 2));
            ok &= fine;
            if !fine {
                parts.push(format!("C_{p}^{d}: exact {exact}, closed form {closed}"));
            }
        }
    }
    let detail = if parts.is_empty() {
        "12 groups match, equality only at C_2^2".to_string()
    } else {
        parts.join("; ")
    };
    Ok((ok, detail))
}

/// Bound reports for the whole soluble catalog.
pub fn catalog_reports(opts: ExactOptions) -> Result<Vec<crate::report::BoundReport>> {
    catalog::soluble_catalog()
        .iter()
        .map(|s| Analysis::new(s, opts)?.bound_report())
        .collect()
}

fn catalog_check(
    reports: &[crate::report::BoundReport],
    pick: impl Fn(&crate::report::BoundReport) -> Vec<Verdict>,
) -> (bool, String) {
    let bad: Vec<&str> = reports
        .iter()
        .filter(|r| pick(r).iter().any(|v| *v != Verdict::Satisfied))
        .map(|r| r.group_id.as_str())
        .collect();
    if bad.is_empty() {
        (true, format!("{} groups satisfied", reports.len()))
    } else {
        (false, format!("failing: {}", bad.join(", ")))
    }
}

fn check3(reports: &[crate::report::BoundReport]) -> (bool, String) {
    let (ok, detail) = catalog_check(reports, |r| vec![r.verdicts.five_thirds]);
    let equalities: Vec<&str> = reports
        .iter()
        .filter(|r| r.five_thirds_equality)
        .map(|r| r.group_id.as_str())
        .collect();
    let eq_ok = equalities.iter().all(|&g| g == "C_2^2");
    (
        ok && eq_ok,
        format!("{detail}; equality at [{}]", equalities.join(", ")),
    )
}

fn check5(opts: ExactOptions) -> Result<(bool, String)> {
    let mut ok = true;
    let mut parts = Vec::new();
    for (case, spec) in catalog::exceptional_catalog() {
        let a = Analysis::new(&spec, opts)?;
        let exact = a.exact()?.exact;
        let strict =
            bounds::five_thirds_check(&exact, a.order(), false).verdict == Verdict::Satisfied;
        let crowns = a.crowns()?;
        let mut cases = Vec::new();
        for c in &crowns.a {
            match bounds::lemma51_check(c, a.order()) {
                Ok(l) => cases.push(match l.exceptional_case {
                    Some(k) => format!("case {k}"),
                    None => "passes".into(),
                }),
                Err(e) => {
                    ok = false;
                    cases.push(e.to_string());
                }
            }
        }
        ok &= strict;
        parts.push(format!(
            "[{case}] {} C={} ({})",
            spec.label,
            render_sig(&exact, 8),
            cases.join(", ")
        ));
    }
    Ok((ok, parts.join("; ")))
}

/// `P_I(G, k)` by enumerating all `|G|^k` tuples against the unions of
/// conjugates of the maximal subgroups.
pub fn tuple_fraction(a: &Analysis, k: u32) -> BigRational {
    let n = a.group.order();
    if n == 1 {
        return BigRational::one();
    }
    let unions: Vec<_> = a.maximals().iter().map(|m| &m.union_bits).collect();
    let mut good = 0u64;
    let mut tuple = vec![0usize; k as usize];
    let total = (n as u64).pow(k);
    for code in 0..total {
        let mut c = code;
        for t in tuple.iter_mut() {
            *t = (c % n as u64) as usize;
            c /= n as u64;
        }
        if !unions.iter().any(|u| tuple.iter().all(|&x| u.contains(x))) {
            good += 1;
        }
    }
    BigRational::new(good.into(), total.into())
}

fn check6(opts: ExactOptions) -> Result<(bool, String)> {
    let mut ok = true;
    let mut count = 0;
    let mut bad = Vec::new();
    for spec in catalog::soluble_catalog() {
        let a = Analysis::new(&spec, opts)?;
        if a.group.order() > 24 {
            continue;
        }
        count += 1;
        let s = a.sieves()?;
        for k in 1..=4 {
            let fast = invariable_gen_prob_with(&s, k, &opts)?;
            if fast != tuple_fraction(&a, k) {
                ok = false;
                bad.push(format!("{} k={k}", spec.label));
            }
        }
    }
    let detail = if bad.is_empty() {
        format!("{count} groups, k = 1..4 equal")
    } else {
        format!("mismatch: {}", bad.join(", "))
    };
    Ok((ok, detail))
}

fn check7(opts: ExactOptions) -> Result<(bool, String)> {
    let mut ok = true;
    let mut parts = Vec::new();
    for spec in catalog::monte_carlo_catalog() {
        let a = Analysis::new(&spec, opts)?;
        let exact = to_f64(&a.exact()?.exact);
        let s = a.sieves()?;
        let mut hits = 0;
        for seed in MC_SEEDS {
            let r = mc_estimate(&s, MC_TRIALS, seed)?;
            if (r.mean - exact).abs() <= 4.0 * r.std_error() {
                hits += 1;
            }
        }
        ok &= hits >= 48;
        parts.push(format!(
            "{} {hits}/{}",
            spec.label,
            MC_SEEDS.end - MC_SEEDS.start
        ));
    }
    Ok((ok, parts.join(", ")))
}

fn check8() -> Result<(bool, String)> {
    let mut ok = true;
    for l in 0..=8 {
        for p in [rat(1, 2), rat(1, 3), rat(1, 5), rat(2, 3)] {
            ok &= bounds::binomial_tail_check(l, &p, 400)?.ok;
        }
    }
    let t = bounds::binomial_tail_check(0, &rat(1, 2), 60)?;
    let gap = &t.bound - &t.partial_sum;
    let close = gap <= rat(1, 1_000_000_000);
    Ok((
        ok && t.ok && close,
        format!(
            "36 tails below 1/p; l=0, p=1/2, K=60 gap {}",
            render_sig(&gap, 3)
        ),
    ))
}

fn check10(opts: ExactOptions) -> Result<(bool, String)> {
    let mut ok = true;
    let mut parts = Vec::new();
    for spec in catalog::frattini_catalog() {
        let a = Analysis::new(&spec, opts)?;
        let full = a.exact()?.exact;
        let reduced = crate::exact::frattini_reduce(&a.group)?;
        let r = Analysis::from_group("quotient", "", reduced, opts)?;
        let red = r.exact()?.exact;
        let proper = r.group.order() < a.group.order();
        ok &= full == red && proper;
        parts.push(format!(
            "{}: {full} = C(G/Phi) {red} (|G/Phi| = {})",
            spec.label,
            r.group.order()
        ));
    }
    Ok((ok, parts.join("; ")))
}

/// Runs the checks in order; an error inside a check fails that item.
pub fn run(opts: ExactOptions) -> Vec<VerifyItem> {
    let mut items = Vec::new();
    let mut reports: Option<Result<Vec<crate::report::BoundReport>>> = None;
    for id in 1..=CHECK_COUNT {
        let start = Instant::now();
        let result = match id {
            1 => check1(opts),
            2 => check2(opts),
            3 | 4 | 9 => {
                let r = reports.get_or_insert_with(|| catalog_reports(opts));
                match r {
                    Ok(r) => Ok(match id {
                        3 => check3(r),
                        4 => catalog_check(r, |b| vec![b.verdicts.thm2, b.verdicts.cor36]),
                        _ => catalog_check(r, |b| vec![b.verdicts.v_property]),
                    }),
                    Err(e) => Err(e.clone()),
                }
            }
            5 => check5(opts),
            6 => check6(opts),
            7 => check7(opts),
            8 => check8(),
            _ => check10(opts),
        };
        let (passed, detail) = result.unwrap_or_else(|e| (false, format!("error: {e}")));
        items.push(VerifyItem {
            id,
            name: check_name(id).to_string(),
            passed,
            detail,
            millis: start.elapsed().as_millis() as u64,
        });
    }
    items
}
