//! Exact Chebotarev invariant by inclusion–exclusion over conjugate-unions.
//!
//! A tuple fails to invariably generate `G` exactly when all of its entries
//! lie in the union of the conjugates of one maximal subgroup. Writing
//! `q_T` for the fraction of `G` lying in every union of a family `T`,
//!
//! ```text
//! 1 - P_I(G, k) = Σ_{∅≠T} (-1)^{|T|+1} q_T^k
//! C(G)          = Σ_{∅≠T} (-1)^{|T|+1} / (1 - q_T)
//! ```
//!
//! Both are driven by an [`Expansion`]: the signed coefficient attached to
//! each distinct value of `q_T`. The expansion is built either by walking
//! all `2^r` families in Gray-code order or, for larger `r`, from the
//! Möbius function of the intersection lattice of the unions.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use crate::bitset::Bitset;
use crate::decimal;
use crate::error::{Error, Result};
use crate::fp;
use crate::group::{ConjClassTable, PermGroup};
use crate::subgroup::{frattini, maximal_classes, MaximalClassData, SubgroupLattice};

/// Largest `r` walked subset by subset.
pub const DEFAULT_SIEVE_CAP: usize = 24;
/// Largest intersection lattice built on the fallback path.
pub const DEFAULT_LATTICE_CAP: usize = 200_000;

/// Reduced conjugate-unions together with per-class membership signatures.
#[derive(Clone, Debug)]
pub struct SieveSystem {
    order: usize,
    reduced_unions: Vec<Bitset>,
    /// For each element class, the set of unions containing it.
    class_signatures: Vec<Bitset>,
    class_sizes: Vec<usize>,
    element_class: Vec<usize>,
}

impl SieveSystem {
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of reduced unions `r`.
    pub fn len(&self) -> usize {
        self.reduced_unions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reduced_unions.is_empty()
    }

    pub fn reduced_unions(&self) -> &[Bitset] {
        &self.reduced_unions
    }

    pub fn class_signatures(&self) -> &[Bitset] {
        &self.class_signatures
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    pub fn element_class(&self) -> &[usize] {
        &self.element_class
    }

    /// `|class| / |G|` per element class.
    pub fn class_weights(&self) -> Vec<BigRational> {
        self.class_sizes
            .iter()
            .map(|&s| decimal::rat(s as i64, self.order as i64))
            .collect()
    }

    /// Signature of the class containing element `e`.
    pub fn signature_of(&self, e: usize) -> &Bitset {
        &self.class_signatures[self.element_class[e]]
    }

    /// A tuple invariably generates iff no reduced union contains all of it.
    pub fn invariably_generates(&self, tuple: &[usize]) -> bool {
        if self.order == 1 {
            return true;
        }
        let mut alive = Bitset::full(self.len());
        for &e in tuple {
            alive.intersect_with(self.signature_of(e));
        }
        alive.is_empty()
    }
}

/// Builds the sieve system from every maximal class of `g`.
pub fn build_sieves(
    g: &PermGroup,
    classes: &ConjClassTable,
    maximals: &[MaximalClassData],
) -> Result<SieveSystem> {
    if g.is_trivial() {
        return Err(Error::TrivialGroup);
    }
    Ok(sieves_from_unions(
        g,
        classes,
        maximals.iter().map(|m| &m.union_bits),
    ))
}

/// Builds a (possibly empty) sieve system from arbitrary conjugation-invariant unions.
pub fn sieves_from_unions<'a>(
    g: &PermGroup,
    classes: &ConjClassTable,
    unions: impl IntoIterator<Item = &'a Bitset>,
) -> SieveSystem {
    let mut distinct: Vec<Bitset> = Vec::new();
    let mut seen = HashSet::new();
    for u in unions {
        assert!(!u.is_full(), "conjugate-union covers the group");
        if seen.insert(u.clone()) {
            distinct.push(u.clone());
        }
    }
    // drop unions contained in a different one
    let reduced: Vec<Bitset> = distinct
        .iter()
        .filter(|u| !distinct.iter().any(|w| w != *u && u.is_subset(w)))
        .cloned()
        .collect();
    let r = reduced.len();
    let class_signatures = classes
        .reps
        .iter()
        .map(|&rep| Bitset::from_indices(r, (0..r).filter(|&i| reduced[i].contains(rep))))
        .collect();
    SieveSystem {
        order: g.order(),
        reduced_unions: reduced,
        class_signatures,
        class_sizes: classes.sizes.clone(),
        element_class: classes.class_of.clone(),
    }
}

/// `1 - P_I(G, k) = Σ_Q c_Q (Q/|G|)^k`, keyed by the class-count `Q = q_T |G|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    order: u64,
    coeffs: BTreeMap<u64, BigInt>,
}

impl Expansion {
    pub fn coefficients(&self) -> &BTreeMap<u64, BigInt> {
        &self.coeffs
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    fn weight(&self, q: u64) -> BigRational {
        BigRational::new(BigInt::from(q), BigInt::from(self.order))
    }

    /// Probability that `k` samples all lie in a common union.
    pub fn trapped_prob(&self, k: u32) -> BigRational {
        self.coeffs
            .iter()
            .map(|(&q, c)| BigRational::from_integer(c.clone()) * Pow::pow(self.weight(q), k))
            .fold(BigRational::zero(), |a, b| a + b)
    }

    pub fn terms(&self) -> Vec<SieveTerm> {
        self.coeffs
            .iter()
            .map(|(&q, c)| {
                let weight = self.weight(q);
                let value = BigRational::from_integer(c.clone()) / (BigRational::one() - &weight);
                SieveTerm {
                    weight,
                    coefficient: c.clone(),
                    value,
                }
            })
            .collect()
    }

    pub fn expectation(&self) -> BigRational {
        self.terms()
            .into_iter()
            .fold(BigRational::zero(), |a, t| a + t.value)
    }
}

/// Walks all nonempty families of unions in Gray-code order.
pub fn expansion_gray(s: &SieveSystem, cap: usize) -> Result<Expansion> {
    let r = s.len();
    if r > cap || r > 30 {
        return Err(Error::TooManySieves { r, cap });
    }
    let n = s.order;
    let classes = s.class_sizes.len();
    // classes whose signature lacks each union
    let lacks: Vec<Vec<usize>> = (0..r)
        .map(|b| {
            (0..classes)
                .filter(|&c| !s.class_signatures[c].contains(b))
                .collect()
        })
        .collect();
    let mut missing = vec![0u32; classes];
    let mut q = n;
    let mut odd = false;
    let mut in_t = vec![false; r];
    let mut counts = vec![0i64; n + 1];
    for i in 1u64..(1u64 << r) {
        let b = i.trailing_zeros() as usize;
        if in_t[b] {
            in_t[b] = false;
            for &c in &lacks[b] {
                missing[c] -= 1;
                if missing[c] == 0 {
                    q += s.class_sizes[c];
                }
            }
        } else {
            in_t[b] = true;
            for &c in &lacks[b] {
                missing[c] += 1;
                if missing[c] == 1 {
                    q -= s.class_sizes[c];
                }
            }
        }
        odd = !odd;
        debug_assert!(q >= 1 && q < n);
        counts[q] += if odd { 1 } else { -1 };
    }
    Ok(Expansion {
        order: n as u64,
        coeffs: counts
            .into_iter()
            .enumerate()
            .filter(|(_, c)| *c != 0)
            .map(|(q, c)| (q as u64, BigInt::from(c)))
            .collect(),
    })
}

/// Builds the expansion from the intersection lattice of the unions.
///
/// With the unions as coatoms of the lattice `L ∪ {1}`, the signed count of
/// families meeting in `x` is `-μ(x, 1)`, so only distinct intersections are
/// visited.
pub fn expansion_lattice(s: &SieveSystem, cap: usize) -> Result<Expansion> {
    let r = s.len();
    let classes = s.class_sizes.len();
    let atoms: Vec<Bitset> = (0..r)
        .map(|u| {
            Bitset::from_indices(
                classes,
                (0..classes).filter(|&c| s.class_signatures[c].contains(u)),
            )
        })
        .collect();
    let mut nodes: Vec<Bitset> = Vec::new();
    let mut index: HashMap<Bitset, usize> = HashMap::new();
    for a in &atoms {
        if !index.contains_key(a) {
            index.insert(a.clone(), nodes.len());
            nodes.push(a.clone());
        }
    }
    let mut head = 0;
    while head < nodes.len() {
        for a in &atoms {
            let x = nodes[head].intersection(a);
            if !index.contains_key(&x) {
                if nodes.len() >= cap {
                    return Err(Error::TooManySieves { r, cap });
                }
                index.insert(x.clone(), nodes.len());
                nodes.push(x);
            }
        }
        head += 1;
    }
    let size_of = |x: &Bitset| -> usize { x.iter().map(|c| s.class_sizes[c]).sum() };
    let mut order: Vec<usize> = (0..nodes.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(nodes[i].count()));
    let mut mu = vec![0i64; nodes.len()];
    let mut coeffs: BTreeMap<u64, BigInt> = BTreeMap::new();
    for (pos, &i) in order.iter().enumerate() {
        let x = &nodes[i];
        let above: i64 = order[..pos]
            .iter()
            .filter(|&&j| nodes[j].count() > x.count() && x.is_subset(&nodes[j]))
            .map(|&j| mu[j])
            .sum();
        mu[i] = -1 - above;
        if mu[i] != 0 {
            *coeffs.entry(size_of(x) as u64).or_insert_with(BigInt::zero) -= mu[i];
        }
    }
    coeffs.retain(|_, c| !c.is_zero());
    Ok(Expansion {
        order: s.order as u64,
        coeffs,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Trivial,
    GrayCode,
    Lattice,
}

#[derive(Clone, Copy, Debug)]
pub struct ExactOptions {
    pub sieve_cap: usize,
    /// Use the intersection-lattice route when `r` exceeds `sieve_cap`.
    pub lattice_fallback: bool,
    pub lattice_cap: usize,
}

impl Default for ExactOptions {
    fn default() -> Self {
        ExactOptions {
            sieve_cap: DEFAULT_SIEVE_CAP,
            lattice_fallback: true,
            lattice_cap: DEFAULT_LATTICE_CAP,
        }
    }
}

impl ExactOptions {
    pub fn strict() -> Self {
        ExactOptions {
            lattice_fallback: false,
            ..Default::default()
        }
    }

    pub fn expansion(&self, s: &SieveSystem) -> Result<(Expansion, Method)> {
        match expansion_gray(s, self.sieve_cap) {
            Ok(e) => Ok((e, Method::GrayCode)),
            Err(Error::TooManySieves { .. }) if self.lattice_fallback => {
                Ok((expansion_lattice(s, self.lattice_cap)?, Method::Lattice))
            }
            Err(e) => Err(e),
        }
    }
}

/// One aggregated inclusion–exclusion term: `coefficient / (1 - weight)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SieveTerm {
    pub weight: BigRational,
    pub coefficient: BigInt,
    pub value: BigRational,
}

#[derive(Clone, Debug)]
pub struct ChebValue {
    pub exact: BigRational,
    /// 20 digits after the point.
    pub decimal: String,
    /// Terms grouped by the value of `q_T`; they sum to `exact`.
    pub terms: Vec<SieveTerm>,
    pub sieve_count: usize,
    pub method: Method,
}

impl ChebValue {
    fn new(exact: BigRational, terms: Vec<SieveTerm>, sieve_count: usize, method: Method) -> Self {
        ChebValue {
            decimal: decimal::render(&exact, 20),
            exact,
            terms,
            sieve_count,
            method,
        }
    }

    pub fn trivial() -> Self {
        ChebValue::new(BigRational::zero(), Vec::new(), 0, Method::Trivial)
    }
}

/// Exact `C(G)` over all `2^r` families; fails with `TooManySieves` beyond the default cap.
pub fn chebotarev_exact(s: &SieveSystem) -> Result<ChebValue> {
    chebotarev_exact_with(s, &ExactOptions::strict())
}

pub fn chebotarev_exact_with(s: &SieveSystem, opts: &ExactOptions) -> Result<ChebValue> {
    if s.order == 1 {
        return Ok(ChebValue::trivial());
    }
    let (e, method) = opts.expansion(s)?;
    let terms = e.terms();
    let exact = terms.iter().fold(BigRational::zero(), |a, t| a + &t.value);
    Ok(ChebValue::new(exact, terms, s.len(), method))
}

/// `P_I(G, k)`, the probability that `k` uniform elements invariably generate.
pub fn invariable_gen_prob(s: &SieveSystem, k: u32) -> Result<BigRational> {
    invariable_gen_prob_with(s, k, &ExactOptions::strict())
}

pub fn invariable_gen_prob_with(
    s: &SieveSystem,
    k: u32,
    opts: &ExactOptions,
) -> Result<BigRational> {
    if s.order == 1 {
        return Ok(BigRational::one());
    }
    let (e, _) = opts.expansion(s)?;
    Ok(BigRational::one() - e.trapped_prob(k))
}

/// `Σ_k P*_{G,V}(k)`: the same sum restricted to the unions of the classes in `omega`.
pub fn v_property_sum(
    g: &PermGroup,
    classes: &ConjClassTable,
    omega: &[&MaximalClassData],
    opts: &ExactOptions,
) -> Result<BigRational> {
    if omega.is_empty() {
        return Ok(BigRational::zero());
    }
    let s = sieves_from_unions(g, classes, omega.iter().map(|m| &m.union_bits));
    let (e, _) = opts.expansion(&s)?;
    Ok(e.expectation())
}

/// `Σ_{0≤i<δ} p^δ / (p^δ - p^i)`: expected draws to generate `C_p^δ`.
pub fn elementary_abelian_cheb(p: u64, delta: u32) -> Result<BigRational> {
    if !fp::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let top = BigInt::from(p).pow(delta);
    Ok((0..delta)
        .map(|i| BigRational::new(top.clone(), &top - BigInt::from(p).pow(i)))
        .fold(BigRational::zero(), |a, b| a + b))
}

/// `G / Φ(G)`.
pub fn frattini_reduce(g: &PermGroup) -> Result<PermGroup> {
    if g.is_trivial() {
        return Ok(g.clone());
    }
    let lattice = SubgroupLattice::new(g)?;
    let maximals = maximal_classes(g, &lattice)?;
    let phi = frattini(g, &maximals);
    if phi.order() == 1 {
        return Ok(g.clone());
    }
    Ok(g.quotient(&phi)?.0)
}

/// Exact `C(G)` from scratch: subgroups, maximal classes, sieves.
pub fn chebotarev(g: &PermGroup, opts: &ExactOptions) -> Result<ChebValue> {
    if g.is_trivial() {
        return Ok(ChebValue::trivial());
    }
    let lattice = SubgroupLattice::new(g)?;
    let maximals = maximal_classes(g, &lattice)?;
    let s = build_sieves(g, &g.conjugacy_classes(), &maximals)?;
    chebotarev_exact_with(&s, opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decimal::rat;
    use crate::group::build_group;
    use crate::perm::Permutation;

    fn p(text: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(text, n).unwrap()
    }

    fn group(n: usize, gens: &[&str]) -> PermGroup {
        let gens: Vec<Permutation> = gens.iter().map(|t| p(t, n)).collect();
        build_group(n, &gens).unwrap()
    }

    fn sieves(g: &PermGroup) -> SieveSystem {
        let lat = SubgroupLattice::new(g).unwrap();
        let m = maximal_classes(g, &lat).unwrap();
        build_sieves(g, &g.conjugacy_classes(), &m).unwrap()
    }

    #[test]
    fn sieve_examples() {
        let s = sieves(&group(3, &["(1 2 3)", "(1 2)"]));
        let mut sizes: Vec<usize> = s.reduced_unions().iter().map(|u| u.count()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![3, 4]);
        let identity_sig = s.signature_of(0);
        assert!(identity_sig.is_full());

        let s = sieves(&group(4, &["(1 2)(3 4)", "(1 3)(2 4)"]));
        assert_eq!(s.len(), 3);
        assert!(s.reduced_unions().iter().all(|u| u.count() == 2));

        let s = sieves(&group(4, &["(1 2 3 4)"]));
        assert_eq!(s.len(), 1);

        let t = build_group(1, &[]).unwrap();
        assert_eq!(
            build_sieves(&t, &t.conjugacy_classes(), &[]).unwrap_err(),
            Error::TrivialGroup
        );
    }

    #[test]
    fn exact_examples() {
        let c2 = sieves(&group(2, &["(1 2)"]));
        assert_eq!(chebotarev_exact(&c2).unwrap().exact, rat(2, 1));
        let k = sieves(&group(4, &["(1 2)(3 4)", "(1 3)(2 4)"]));
        assert_eq!(chebotarev_exact(&k).unwrap().exact, rat(10, 3));
        let s3 = sieves(&group(3, &["(1 2 3)", "(1 2)"]));
        let v = chebotarev_exact(&s3).unwrap();
        assert_eq!(v.exact, rat(19, 5));
        assert_eq!(v.decimal, "3.80000000000000000000");
        let sum = v
            .terms
            .iter()
            .fold(BigRational::zero(), |a, t| a + &t.value);
        assert_eq!(sum, v.exact);
    }

    #[test]
    fn too_many_sieves() {
        let k = sieves(&group(4, &["(1 2)(3 4)", "(1 3)(2 4)"]));
        assert_eq!(
            expansion_gray(&k, 2).unwrap_err(),
            Error::TooManySieves { r: 3, cap: 2 }
        );
    }

    #[test]
    fn probability_examples() {
        let c2 = sieves(&group(2, &["(1 2)"]));
        assert_eq!(invariable_gen_prob(&c2, 0).unwrap(), rat(0, 1));
        assert_eq!(invariable_gen_prob(&c2, 1).unwrap(), rat(1, 2));
        let s3 = sieves(&group(3, &["(1 2 3)", "(1 2)"]));
        // pairs (3-cycle, transposition) in either order: 2·2·3 = 12 of 36
        assert_eq!(invariable_gen_prob(&s3, 2).unwrap(), rat(1, 3));
        assert_eq!(invariable_gen_prob(&s3, 0).unwrap(), rat(0, 1));
    }

    #[test]
    fn elementary_closed_form() {
        assert_eq!(elementary_abelian_cheb(2, 2).unwrap(), rat(10, 3));
        assert_eq!(elementary_abelian_cheb(2, 3).unwrap(), rat(94, 21));
        assert_eq!(elementary_abelian_cheb(3, 1).unwrap(), rat(3, 2));
        assert_eq!(
            elementary_abelian_cheb(4, 1).unwrap_err(),
            Error::NotPrime(4)
        );
    }

    #[test]
    fn frattini_quotients() {
        assert_eq!(
            frattini_reduce(&group(4, &["(1 2 3 4)"])).unwrap().order(),
            2
        );
        let k = group(4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        assert_eq!(frattini_reduce(&k).unwrap().order(), 4);
    }

    #[test]
    fn gray_and_lattice_agree() {
        for g in [
            group(3, &["(1 2 3)", "(1 2)"]),
            group(4, &["(1 2)(3 4)", "(1 3)(2 4)"]),
            group(4, &["(1 2 3 4)", "(1 2)"]),
            group(6, &["(1 2 3 4 5 6)", "(1 6)(2 5)(3 4)"]),
        ] {
            let s = sieves(&g);
            assert_eq!(
                expansion_gray(&s, 24).unwrap(),
                expansion_lattice(&s, DEFAULT_LATTICE_CAP).unwrap()
            );
        }
    }
}
