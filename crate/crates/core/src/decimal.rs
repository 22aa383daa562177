//! Decimal rendering and one-sided square-root bounds for big rationals.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Fixed-point rendering with `places` digits after the point, rounded half up.
pub fn render(r: &BigRational, places: usize) -> String {
    let scale = BigInt::from(10u32).pow(places as u32);
    let scaled = r * BigRational::from_integer(scale.clone());
    let neg = scaled.is_negative();
    let abs = scaled.abs();
    let (q, rem) = abs.numer().div_rem(abs.denom());
    let mut q = q;
    if BigInt::from(2) * rem >= *abs.denom() {
        q += 1;
    }
    let digits = q.to_string();
    let (int_part, frac) = if places == 0 {
        (digits, String::new())
    } else if digits.len() > places {
        let (a, b) = digits.split_at(digits.len() - places);
        (a.to_string(), b.to_string())
    } else {
        ("0".to_string(), format!("{digits:0>places$}"))
    };
    let sign = if neg && !q.is_zero() { "-" } else { "" };
    if places == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac}")
    }
}

/// Rendering with `sig` significant digits.
pub fn render_sig(r: &BigRational, sig: usize) -> String {
    if r.is_zero() {
        return "0".into();
    }
    let abs = r.abs();
    let int_digits = abs.to_integer().to_string();
    let places = if abs >= BigRational::one() {
        sig.saturating_sub(int_digits.len())
    } else {
        // count leading zeros after the point
        let mut lead = 0usize;
        let mut x = abs.clone();
        while x < BigRational::from_integer(BigInt::from(1)) {
            x *= BigRational::from_integer(BigInt::from(10));
            lead += 1;
        }
        lead - 1 + sig
    };
    render(r, places)
}

pub fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        let s = render(r, 30);
        s.parse().unwrap_or(f64::NAN)
    })
}

/// Parses a decimal string such as `2.118456563` exactly.
pub fn parse_decimal(s: &str) -> Option<BigRational> {
    let (neg, s) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (int_part, frac) = s.split_once('.').unwrap_or((s, ""));
    let digits = format!("{int_part}{frac}");
    let n: BigInt = digits.parse().ok()?;
    let d = BigInt::from(10u32).pow(frac.len() as u32);
    let r = BigRational::new(n, d);
    Some(if neg { -r } else { r })
}

/// Parses `a/b` or an integer.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n.trim().parse().ok()?, d))
        }
        None => Some(BigRational::from_integer(s.trim().parse().ok()?)),
    }
}

/// Rationals `lo ≤ √r ≤ hi` with `hi - lo ≤ 10^-digits`.
pub fn sqrt_bounds(r: &BigRational, digits: u32) -> (BigRational, BigRational) {
    assert!(!r.is_negative());
    let scale = BigInt::from(10u32).pow(digits);
    // floor(sqrt(r * scale^2)) via floor(r * scale^2)
    let scaled = r * BigRational::from_integer(&scale * &scale);
    let fl = scaled.floor().to_integer();
    let fl = fl.to_biguint().unwrap_or_else(BigUint::zero);
    let s = fl.sqrt();
    let lo = BigRational::new(BigInt::from_biguint(Sign::Plus, s.clone()), scale.clone());
    let hi = BigRational::new(BigInt::from_biguint(Sign::Plus, s + 1u32), scale);
    (lo, hi)
}
