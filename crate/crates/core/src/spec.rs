//! Text descriptions of permutation groups.
//!
//! One group per line, tokens separated by spaces:
//!
//! ```text
//! cyclic n
//! elementary p d
//! dihedral n                      order 2n; n = 1, 2 give C_2 and C_2 x C_2
//! symmetric n
//! alternating n
//! quaternion8
//! direct_product (spec) (spec) ...
//! affine p n [[a,b],[c,d]] ... [power k]
//! perm degree (1 2 3), (1 2)
//! ```
//!
//! `affine` builds `V^k ⋊ H` on the `p^{nk}` vectors of `F_p^{nk}`, where
//! `V = F_p^n` and `H` is generated by the listed matrices acting on every
//! block of coordinates at once (row vectors, `x ↦ xA`).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::fp::{self, Matrix};
use crate::group::{PermGroup, DEFAULT_ORDER_CAP};
use crate::perm::Permutation;

/// Degree ceiling for constructed actions.
pub const MAX_DEGREE: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecKind {
    Cyclic(usize),
    Elementary(u64, u32),
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Quaternion8,
    DirectProduct(Vec<GroupSpec>),
    Affine {
        p: u64,
        n_raw: usize,
        matrices: Vec<Matrix>,
        power: u32,
    },
    Perm {
        degree: usize,
        generators: Vec<Permutation>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub kind: SpecKind,
    pub label: String,
}

fn perr(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn num<T: FromStr>(tok: Option<&str>, what: &str) -> Result<T> {
    let tok = tok.ok_or_else(|| perr(format!("missing {what}")))?;
    tok.parse().map_err(|_| perr(format!("bad {what} {tok:?}")))
}

/// Splits off a balanced `open … close` group at the start of `s`.
fn balanced(s: &str, open: char, close: char) -> Result<(&str, &str)> {
    let s = s.trim_start();
    if !s.starts_with(open) {
        return Err(perr(format!("expected {open:?} at {s:?}")));
    }
    let mut depth = 0usize;
    for (i, c) in s.char_indices() {
        if c == open {
            depth += 1;
        } else if c == close {
            depth -= 1;
            if depth == 0 {
                return Ok((&s[1..i], &s[i + 1..]));
            }
        }
    }
    Err(perr(format!("unbalanced {open:?} in {s:?}")))
}

fn parse_matrix(body: &str, p: u64, n: usize) -> Result<Matrix> {
    let mut rows = Vec::new();
    let mut rest = body.trim();
    while !rest.is_empty() {
        let (row, tail) = balanced(rest, '[', ']')?;
        let row: Vec<u64> = row
            .split(',')
            .map(|t| {
                let v: i64 = t
                    .trim()
                    .parse()
                    .map_err(|_| perr(format!("bad matrix entry {t:?}")))?;
                Ok(v.rem_euclid(p as i64) as u64)
            })
            .collect::<Result<_>>()?;
        if row.len() != n {
            return Err(perr(format!(
                "matrix row has {} entries, expected {n}",
                row.len()
            )));
        }
        rows.push(row);
        rest = tail.trim_start().trim_start_matches(',').trim_start();
    }
    if rows.len() != n {
        return Err(perr(format!(
            "matrix has {} rows, expected {n}",
            rows.len()
        )));
    }
    let m = Matrix::from_rows(p, &rows);
    if !m.is_invertible() {
        return Err(Error::NotInvertibleMatrix(p));
    }
    Ok(m)
}

fn matrix_text(m: &Matrix) -> String {
    let rows: Vec<String> = m
        .to_rows()
        .iter()
        .map(|r| {
            let r: Vec<String> = r.iter().map(|v| v.to_string()).collect();
            format!("[{}]", r.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let (word, rest) = text.split_once(char::is_whitespace).unwrap_or((text, ""));
        let rest = rest.trim();
        let mut toks = rest.split_whitespace();
        let kind = match word {
            "cyclic" => SpecKind::Cyclic(num(toks.next(), "order")?),
            "elementary" => {
                let p = num(toks.next(), "prime")?;
                if !fp::is_prime(p) {
                    return Err(Error::NotPrime(p));
                }
                SpecKind::Elementary(p, num(toks.next(), "rank")?)
            }
            "dihedral" => SpecKind::Dihedral(num(toks.next(), "n")?),
            "symmetric" => SpecKind::Symmetric(num(toks.next(), "degree")?),
            "alternating" => SpecKind::Alternating(num(toks.next(), "degree")?),
            "quaternion8" => SpecKind::Quaternion8,
            "direct_product" => {
                let mut factors = Vec::new();
                let mut s = rest;
                while !s.trim().is_empty() {
                    let (inner, tail) = balanced(s, '(', ')')?;
                    factors.push(inner.parse()?);
                    s = tail;
                }
                if factors.is_empty() {
                    return Err(perr("direct_product needs at least one factor"));
                }
                return Ok(GroupSpec::new(SpecKind::DirectProduct(factors)));
            }
            "affine" => {
                let p: u64 = num(toks.next(), "prime")?;
                if !fp::is_prime(p) {
                    return Err(Error::NotPrime(p));
                }
                let n: usize = num(toks.next(), "dimension")?;
                if n == 0 {
                    return Err(perr("dimension must be positive"));
                }
                // skip the two numeric tokens
                let mut s = rest.trim_start();
                for _ in 0..2 {
                    s = s.trim_start();
                    let end = s.find(char::is_whitespace).unwrap_or(s.len());
                    s = &s[end..];
                }
                let mut matrices = Vec::new();
                let mut s = s.trim_start();
                while s.starts_with('[') {
                    let (body, tail) = balanced(s, '[', ']')?;
                    matrices.push(parse_matrix(body, p, n)?);
                    s = tail.trim_start();
                }
                let power = match s.split_whitespace().collect::<Vec<_>>().as_slice() {
                    [] => 1,
                    ["power", k] => k.parse().map_err(|_| perr(format!("bad power {k:?}")))?,
                    other => return Err(perr(format!("unexpected tokens {other:?}"))),
                };
                if power == 0 {
                    return Err(perr("power must be positive"));
                }
                return Ok(GroupSpec::new(SpecKind::Affine {
                    p,
                    n_raw: n,
                    matrices,
                    power,
                }));
            }
            "perm" => {
                let degree: usize = num(toks.next(), "degree")?;
                let gens_text = rest
                    .trim_start()
                    .split_once(char::is_whitespace)
                    .map(|(_, g)| g)
                    .unwrap_or("");
                let generators = gens_text
                    .split(',')
                    .map(str::trim)
                    .filter(|t| !t.is_empty())
                    .map(|t| Permutation::parse_cycles(t, degree))
                    .collect::<Result<Vec<_>>>()?;
                return Ok(GroupSpec::new(SpecKind::Perm { degree, generators }));
            }
            "" => return Err(perr("empty group description")),
            other => return Err(perr(format!("unknown constructor {other:?}"))),
        };
        if let Some(extra) = toks.next() {
            return Err(perr(format!("unexpected token {extra:?}")));
        }
        Ok(GroupSpec::new(kind))
    }
}

impl GroupSpec {
    pub fn new(kind: SpecKind) -> Self {
        let label = canonical_label(&kind);
        GroupSpec { kind, label }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// The permutation action described by the spec.
    pub fn action(&self) -> Result<(usize, Vec<Permutation>)> {
        let (degree, gens) = match &self.kind {
            SpecKind::Cyclic(n) => {
                let n = (*n).max(1);
                (n, vec![cycle(n, 0, n)])
            }
            SpecKind::Elementary(p, d) => {
                let size = checked_pow(*p, *d)?;
                let gens = (0..*d as usize)
                    .map(|i| translation(*p, *d as usize, i))
                    .collect();
                (size, gens)
            }
            SpecKind::Dihedral(n) => match n {
                0 => return Err(perr("dihedral needs n >= 1")),
                1 => (2, vec![cycle(2, 0, 2)]),
                2 => return GroupSpec::new(SpecKind::Elementary(2, 2)).action(),
                &n => {
                    let refl: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
                    (n, vec![cycle(n, 0, n), Permutation::from_images(refl)?])
                }
            },
            SpecKind::Symmetric(n) => {
                let n = (*n).max(1);
                let mut gens = vec![cycle(n, 0, n)];
                if n > 2 {
                    gens.push(cycle(n, 0, 2));
                }
                (n, gens)
            }
            SpecKind::Alternating(n) => {
                let n = (*n).max(1);
                let gens = (2..n)
                    .map(|i| Permutation::from_cycles(n, &[vec![0, 1, i]]))
                    .collect::<Result<_>>()?;
                (n, gens)
            }
            SpecKind::Quaternion8 => (8, quaternion_regular()),
            SpecKind::DirectProduct(factors) => {
                let actions = factors
                    .iter()
                    .map(|f| f.action())
                    .collect::<Result<Vec<_>>>()?;
                let degree: usize = actions.iter().map(|a| a.0).sum();
                let mut gens = Vec::new();
                let mut offset = 0;
                for (d, g) in actions {
                    gens.extend(g.iter().map(|x| x.shifted(offset, degree)));
                    offset += d;
                }
                (degree, gens)
            }
            SpecKind::Affine {
                p,
                n_raw,
                matrices,
                power,
            } => {
                let dim = n_raw * *power as usize;
                let size = checked_pow(*p, dim as u32)?;
                let mut gens: Vec<Permutation> =
                    (0..dim).map(|i| translation(*p, dim, i)).collect();
                for m in matrices {
                    gens.push(linear(*p, *n_raw, *power as usize, m));
                }
                (size, gens)
            }
            SpecKind::Perm { degree, generators } => (*degree, generators.clone()),
        };
        if degree > MAX_DEGREE {
            return Err(perr(format!("degree {degree} exceeds {MAX_DEGREE}")));
        }
        Ok((degree, gens))
    }

    pub fn build(&self) -> Result<PermGroup> {
        self.build_with_cap(DEFAULT_ORDER_CAP)
    }

    pub fn build_with_cap(&self, cap: usize) -> Result<PermGroup> {
        let (degree, gens) = self.action()?;
        PermGroup::with_cap(degree, &gens, cap)
    }
}

fn canonical_label(kind: &SpecKind) -> String {
    match kind {
        SpecKind::Cyclic(n) => format!("C_{n}"),
        SpecKind::Elementary(p, 1) => format!("C_{p}"),
        SpecKind::Elementary(p, d) => format!("C_{p}^{d}"),
        SpecKind::Dihedral(1) => "C_2".into(),
        SpecKind::Dihedral(2) => "C_2^2".into(),
        SpecKind::Dihedral(n) => format!("D_{n}"),
        SpecKind::Symmetric(n) => format!("S_{n}"),
        SpecKind::Alternating(n) => format!("A_{n}"),
        SpecKind::Quaternion8 => "Q_8".into(),
        SpecKind::DirectProduct(fs) => fs
            .iter()
            .map(|f| {
                if matches!(
                    f.kind,
                    SpecKind::DirectProduct(_) | SpecKind::Affine { .. } | SpecKind::Perm { .. }
                ) {
                    format!("({})", f.label)
                } else {
                    f.label.clone()
                }
            })
            .collect::<Vec<_>>()
            .join(" x "),
        SpecKind::Affine { .. } | SpecKind::Perm { .. } => spec_text(kind),
    }
}

fn spec_text(kind: &SpecKind) -> String {
    match kind {
        SpecKind::Cyclic(n) => format!("cyclic {n}"),
        SpecKind::Elementary(p, d) => format!("elementary {p} {d}"),
        SpecKind::Dihedral(n) => format!("dihedral {n}"),
        SpecKind::Symmetric(n) => format!("symmetric {n}"),
        SpecKind::Alternating(n) => format!("alternating {n}"),
        SpecKind::Quaternion8 => "quaternion8".into(),
        SpecKind::DirectProduct(fs) => {
            let parts: Vec<String> = fs.iter().map(|f| format!("({f})")).collect();
            format!("direct_product {}", parts.join(" "))
        }
        SpecKind::Affine {
            p,
            n_raw,
            matrices,
            power,
        } => {
            let mut s = format!("affine {p} {n_raw}");
            for m in matrices {
                s.push(' ');
                s.push_str(&matrix_text(m));
            }
            if *power != 1 {
                s.push_str(&format!(" power {power}"));
            }
            s
        }
        SpecKind::Perm { degree, generators } => {
            let g: Vec<String> = generators
                .iter()
                .map(|x| {
                    if x.is_identity() {
                        "()".to_string()
                    } else {
                        x.to_string()
                    }
                })
                .collect();
            format!("perm {degree} {}", g.join(", "))
        }
    }
}

/// Prints the spec back in the input grammar.
impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&spec_text(&self.kind))
    }
}

fn checked_pow(p: u64, e: u32) -> Result<usize> {
    p.checked_pow(e)
        .filter(|&v| v <= MAX_DEGREE as u64)
        .map(|v| v as usize)
        .ok_or_else(|| perr(format!("{p}^{e} points exceed {MAX_DEGREE}")))
}

/// The cycle `(start … start+len-1)` on `degree` points.
fn cycle(degree: usize, start: usize, len: usize) -> Permutation {
    let mut images: Vec<usize> = (0..degree).collect();
    if len > 1 {
        for k in 0..len {
            images[start + k] = start + (k + 1) % len;
        }
    }
    Permutation::from_images(images).unwrap()
}

fn digits(mut x: usize, p: u64, dim: usize) -> Vec<u64> {
    let mut v = vec![0; dim];
    for d in v.iter_mut() {
        *d = (x as u64) % p;
        x /= p as usize;
    }
    v
}

fn index(v: &[u64], p: u64) -> usize {
    v.iter()
        .rev()
        .fold(0usize, |acc, &d| acc * p as usize + d as usize)
}

/// Translation by the `i`-th basis vector of `F_p^dim`.
fn translation(p: u64, dim: usize, i: usize) -> Permutation {
    let size = (p as usize).pow(dim as u32);
    let images = (0..size)
        .map(|x| {
            let mut v = digits(x, p, dim);
            v[i] = (v[i] + 1) % p;
            index(&v, p)
        })
        .collect();
    Permutation::from_images(images).unwrap()
}

/// `x ↦ xA` applied to each of the `blocks` coordinate blocks of size `n`.
fn linear(p: u64, n: usize, blocks: usize, a: &Matrix) -> Permutation {
    let dim = n * blocks;
    let size = (p as usize).pow(dim as u32);
    let images = (0..size)
        .map(|x| {
            let v = digits(x, p, dim);
            let w: Vec<u64> = v.chunks(n).flat_map(|c| a.vec_mul(c)).collect();
            index(&w, p)
        })
        .collect();
    Permutation::from_images(images).unwrap()
}

/// Right regular action of `Q_8`, with `±1, ±i, ±j, ±k` numbered `0..8`
/// as `2u + s` for unit `u ∈ {1, i, j, k}` and sign bit `s`.
fn quaternion_regular() -> Vec<Permutation> {
    // unit products: (u, v) -> (sign, w)
    let table = |u: usize, v: usize| -> (usize, usize) {
        match (u, v) {
            (0, w) | (w, 0) => (0, w),
            (a, b) if a == b => (1, 0),
            (1, 2) => (0, 3),
            (2, 3) => (0, 1),
            (3, 1) => (0, 2),
            (2, 1) => (1, 3),
            (3, 2) => (1, 1),
            (1, 3) => (1, 2),
            _ => unreachable!(),
        }
    };
    let right_mul = |g: usize| {
        let images = (0..8)
            .map(|x| {
                let (s, w) = table(x / 2, g / 2);
                2 * w + ((x % 2) ^ (g % 2) ^ s)
            })
            .collect();
        Permutation::from_images(images).unwrap()
    };
    vec![right_mul(2), right_mul(4)]
}

pub fn parse_group(text: &str) -> Result<PermGroup> {
    text.parse::<GroupSpec>()?.build()
}

/// Parses one spec per line, skipping blank lines and `#` comments.
pub fn parse_group_list(text: &str) -> Result<Vec<GroupSpec>> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(str::parse)
        .collect()
}
