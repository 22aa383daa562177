//! Effective upper bounds on `C(G)` for soluble groups, and their checks.
//!
//! All bound values are exact rationals: the only irrational inputs are
//! square roots, and every verdict that involves one is decided in squared
//! form. The constant `σ` enters as its 10-digit literal; verdicts compare
//! against the bound with `σ` rounded up by one unit in the last place.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::chief::CrownClass;
use crate::decimal::{self, int, rat};
use crate::error::{Error, Result};

pub const SIGMA_LITERAL: &str = "2.118456563";

/// `σ = 2.118456563…`, the constant bounding the expected excess of random
/// generation beyond `d(G)`.
pub fn sigma() -> BigRational {
    decimal::parse_decimal(SIGMA_LITERAL).unwrap()
}

/// `σ` rounded up in the last literal digit.
pub fn sigma_upper() -> BigRational {
    sigma() + rat(1, 1_000_000_000)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Satisfied,
    Violated,
    NotApplicable,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Satisfied => "SATISFIED",
            Verdict::Violated => "VIOLATED",
            Verdict::NotApplicable => "NOT_APPLICABLE",
        })
    }
}

/// `exact ≤ bound`, where `bound` was computed with the `σ` literal.
pub fn check_upper(exact: &BigRational, bound_with_sigma: &BigRational) -> Verdict {
    if *exact <= bound_with_sigma - sigma() + sigma_upper() {
        Verdict::Satisfied
    } else {
        Verdict::Violated
    }
}

fn ceil_div(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

fn v_size(c: &CrownClass) -> BigRational {
    int(c.v_size())
}

/// `(⌈δθ/n⌉ + q^n/(q^n-1)) |H|`
fn h_branch(c: &CrownClass) -> BigRational {
    let qn = v_size(c);
    let dt = (c.delta * c.theta) as u64;
    (int(ceil_div(dt, c.n as u64)) + &qn / (&qn - BigRational::one())) * int(c.h_order() as u64)
}

/// The crown bound
/// `Σ_{V∈A} min{(δθ + c_V)|V|, (⌈δθ/n⌉ + q^n/(q^n-1))|H_V|} + max_{V∈B} δ_V + σ`
/// with `c_V = q/(q-1)`.
pub fn theorem2_bound(a: &[CrownClass], b: &[CrownClass]) -> BigRational {
    let mut total = BigRational::zero();
    for c in a {
        let q = int(c.q);
        let cv = &q / (&q - BigRational::one());
        let first = (int((c.delta * c.theta) as u64) + cv) * v_size(c);
        total += first.min(h_branch(c));
    }
    total + int(b.iter().map(|c| c.delta).max().unwrap_or(0)) + sigma()
}

/// `d(G) Σ_{V∈A} (1 + q^n|H_V|/(q^n-1)) + σ`
pub fn corollary36_bound(a: &[CrownClass], d: usize) -> BigRational {
    let sum = a.iter().fold(BigRational::zero(), |acc, c| {
        let qn = v_size(c);
        acc + BigRational::one() + &qn * int(c.h_order() as u64) / (&qn - BigRational::one())
    });
    int(d as u64) * sum + sigma()
}

/// The `d(G)` bound when `A` is nonempty; `d(G) + σ` otherwise, where the
/// sum is empty and only the central part remains.
pub fn corollary36_effective(a: &[CrownClass], d: usize) -> BigRational {
    if a.is_empty() {
        int(d as u64) + sigma()
    } else {
        corollary36_bound(a, d)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlphaU {
    /// `(δθ + m + q/(q-1)) / p_V`; absent when `H = 1`, `m` is unknown or `p_V = 0`.
    pub branch1: Option<BigRational>,
    /// `(⌈δθ/n⌉ + q^n/(q^n-1)) |H|`, or the elementary-abelian sum when `H = 1`.
    pub branch2: BigRational,
    pub value: BigRational,
}

pub fn alpha_u(c: &CrownClass) -> AlphaU {
    if c.h_order() == 1 {
        let q = BigInt::from(c.q);
        let top = Pow::pow(&q, c.delta);
        let sum = (0..c.delta)
            .map(|i| BigRational::new(top.clone(), &top - Pow::pow(&q, i)))
            .fold(BigRational::zero(), |a, b| a + b);
        return AlphaU {
            branch1: None,
            branch2: sum.clone(),
            value: sum,
        };
    }
    let q = int(c.q);
    let branch1 = match (c.m, c.module.p_fix.is_positive()) {
        (Some(m), true) => Some(
            (int((c.delta * c.theta + m) as u64) + &q / (&q - BigRational::one()))
                / &c.module.p_fix,
        ),
        _ => None,
    };
    let branch2 = h_branch(c);
    let value = match &branch1 {
        Some(b1) => b1.clone().min(branch2.clone()),
        None => branch2.clone(),
    };
    AlphaU {
        branch1,
        branch2,
        value,
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RatioCheck {
    /// `α_U / √|G|`
    pub ratio: f64,
    /// `(5/3)(√|U| - 1)/√|U|` with `|U| = |V|^δ`
    pub threshold: f64,
    pub passes: bool,
    /// Which listed exception (1–4) matches a failing ratio.
    pub exceptional_case: Option<u8>,
    /// `|G| / (|H| |V|^δ)`
    pub lambda: BigRational,
}

/// Decides `α √U < (5/3)(√U - 1) √G` exactly.
fn ratio_below_threshold(alpha: &BigRational, u: &BigRational, g: &BigRational) -> bool {
    let c2 = rat(25, 9);
    let r = &c2 * g * (u + BigRational::one()) - alpha * alpha * u;
    if !r.is_positive() {
        return false;
    }
    let lhs = int(2) * &c2 * g;
    &lhs * &lhs * u < &r * &r
}

pub fn lemma51_check(c: &CrownClass, group_order: u64) -> Result<RatioCheck> {
    if c.central() {
        return Err(Error::NotApplicable("factor must be non-central"));
    }
    let alpha = alpha_u(c).value;
    let qn = c.v_size();
    let u = int(qn).pow(c.delta);
    let g = int(group_order);
    let lambda = &g / (int(c.h_order() as u64) * &u);
    let passes = ratio_below_threshold(&alpha, &u, &g);

    let su = decimal::to_f64(&u).sqrt();
    let ratio = decimal::to_f64(&alpha) / (group_order as f64).sqrt();
    let threshold = 5.0 / 3.0 * (su - 1.0) / su;

    let mut exceptional_case = None;
    if !passes {
        let small_h = (c.h_order() as u64) < qn;
        let lam_le = |k: i64| lambda <= int(k);
        let lam_one = lambda == BigRational::one();
        exceptional_case = match (small_h, c.delta, qn) {
            (true, 2, 4) if lam_one => Some(1),
            (true, 2, 3) if lam_le(2) => Some(2),
            (true, 1, 4..=7) if lam_one => Some(3),
            (true, 1, 3) if lam_le(3) => Some(4),
            _ => None,
        };
        if exceptional_case.is_none() {
            return Err(Error::UnexpectedException {
                delta: c.delta,
                qn,
                lambda: lambda.to_string(),
            });
        }
    }
    Ok(RatioCheck {
        ratio,
        threshold,
        passes,
        exceptional_case,
        lambda,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct BinomialTail {
    pub partial_sum: BigRational,
    pub bound: BigRational,
    pub ok: bool,
}

/// `Σ_{k=l}^{K} P(B(k, p) = l)` against `1/p`.
pub fn binomial_tail_check(l: u32, p: &BigRational, k_max: u32) -> Result<BinomialTail> {
    if !p.is_positive() || *p > BigRational::one() {
        return Err(Error::BadProbability);
    }
    let x = BigRational::one() - p;
    let mut term: BigRational = Pow::pow(p.clone(), l);
    let mut partial_sum = BigRational::zero();
    for k in l..=k_max {
        partial_sum += &term;
        // C(k+1, l)/C(k, l) = (k+1)/(k+1-l)
        term = term * int(k as u64 + 1) / int((k + 1 - l) as u64) * &x;
    }
    let bound = p.recip();
    Ok(BinomialTail {
        ok: partial_sum <= bound,
        partial_sum,
        bound,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FiveThirdsCheck {
    pub verdict: Verdict,
    pub equality: bool,
}

/// `C(G) ≤ (5/3)√|G|`, with equality allowed only for the Klein four-group.
pub fn five_thirds_check(exact: &BigRational, order: u64, is_klein: bool) -> FiveThirdsCheck {
    let lhs = exact * exact;
    let rhs = rat(25, 9) * int(order);
    let equality = lhs == rhs;
    let ok = lhs < rhs || (equality && is_klein);
    FiveThirdsCheck {
        verdict: if ok {
            Verdict::Satisfied
        } else {
            Verdict::Violated
        },
        equality,
    }
}

/// `(5/3)√|G|` rounded up at 20 digits.
pub fn five_thirds_value(order: u64) -> BigRational {
    let (_, hi) = decimal::sqrt_bounds(&int(order), 20);
    rat(5, 3) * hi
}
