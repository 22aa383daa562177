//! Chief series, abelian chief factors as `F_p`-modules, and crown data.
//!
//! A complemented abelian chief factor `V = X/Y` is described by the
//! conjugation action of the group generators on a fixed `F_p`-basis of
//! `X/Y`. From that action we read off the endomorphism field, the image
//! `H_V = G/C_G(V)`, the fixed-point probability `p_V`, and `H¹(H_V, V)`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::fp::{self, Matrix};
use crate::group::PermGroup;
use crate::subgroup::{MaximalClassData, Subgroup, SubgroupLattice};

/// Solution spaces up to this size are scanned exhaustively.
const ISO_SCAN_LIMIT: u64 = 4096;
const ISO_RANDOM_TRIALS: usize = 64;

/// Default cap on the derivation search space `|V|^s`.
pub const DERIVATION_CAP: u128 = 1 << 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorMeta {
    pub order: usize,
    pub abelian: bool,
}

/// Descending chain `G = N_0 > N_1 > … > N_r = 1` of normal subgroups.
#[derive(Clone, Debug)]
pub struct ChiefSeries {
    pub subgroups: Vec<Subgroup>,
    pub factors: Vec<FactorMeta>,
}

impl ChiefSeries {
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// `(X, Y)` for the `i`-th factor from the top.
    pub fn section(&self, i: usize) -> (&Subgroup, &Subgroup) {
        (&self.subgroups[i], &self.subgroups[i + 1])
    }
}

pub fn chief_series(g: &PermGroup, lattice: &SubgroupLattice) -> ChiefSeries {
    chief_series_by(g, lattice, |_| 0)
}

/// Builds a chief series from the bottom, letting `pick` choose among the
/// candidate minimal normal subgroups of each quotient (pulled back to `G`).
pub fn chief_series_by(
    g: &PermGroup,
    lattice: &SubgroupLattice,
    mut pick: impl FnMut(&[Subgroup]) -> usize,
) -> ChiefSeries {
    let mut chain = vec![g.trivial_subgroup()];
    while chain.last().unwrap().order() < g.order() {
        let cands = lattice.minimal_normal_over(chain.last().unwrap());
        let i = pick(&cands).min(cands.len() - 1);
        chain.push(cands[i].clone());
    }
    chain.reverse();
    let factors = chain
        .windows(2)
        .map(|w| FactorMeta {
            order: w[0].order() / w[1].order(),
            abelian: is_abelian_section(g, &w[0], &w[1]),
        })
        .collect();
    ChiefSeries {
        subgroups: chain,
        factors,
    }
}

pub fn is_abelian_section(g: &PermGroup, x: &Subgroup, y: &Subgroup) -> bool {
    let gens = x.gens();
    gens.iter()
        .all(|&a| gens.iter().all(|&b| y.contains(g.commutator(a, b))))
}

fn check_section(g: &PermGroup, x: &Subgroup, y: &Subgroup) -> Result<()> {
    if !y.is_subgroup_of(x) || y.order() == x.order() {
        return Err(Error::BadSection("Y must be a proper subgroup of X"));
    }
    if !g.is_normal(x) || !g.is_normal(y) {
        return Err(Error::BadSection("X and Y must be normal in G"));
    }
    Ok(())
}

/// Whether some subgroup `U` has `UX = G` and `U ∩ X = Y`.
pub fn is_complemented(
    g: &PermGroup,
    lattice: &SubgroupLattice,
    x: &Subgroup,
    y: &Subgroup,
) -> Result<bool> {
    check_section(g, x, y)?;
    let target = g.order() * y.order() / x.order();
    Ok(lattice
        .subgroups()
        .iter()
        .filter(|u| u.order() == target)
        .any(|u| u.bits().intersection(x.bits()) == *y.bits()))
}

/// An abelian chief factor `X/Y` with the group acting by conjugation.
#[derive(Clone, Debug)]
pub struct FactorModule {
    pub p: u64,
    pub n_raw: usize,
    /// Action of each group generator (in `G.gen_indices()` order).
    pub gen_matrices: Vec<Matrix>,
    pub h_order: usize,
    pub central: bool,
    /// Probability that a uniform element of `H_V` fixes a nonzero vector.
    pub p_fix: BigRational,
    basis: Vec<usize>,
    coset_of: Vec<usize>,
    coords: Vec<Vec<u64>>,
}

impl FactorModule {
    /// `|V| = p^n_raw`.
    pub fn size(&self) -> u64 {
        self.p.pow(self.n_raw as u32)
    }

    /// Matrix of the conjugation action of element `x` of `g`.
    pub fn matrix_of(&self, g: &PermGroup, x: usize) -> Matrix {
        let rows: Vec<Vec<u64>> = self
            .basis
            .iter()
            .map(|&b| self.coords[self.coset_of[g.conj(b, x)]].clone())
            .collect();
        Matrix::from_rows(self.p, &rows)
    }

    /// Coordinates of an element of `X` modulo `Y`.
    pub fn coordinates(&self, x: usize) -> Option<&[u64]> {
        self.coset_of
            .get(x)
            .filter(|&&c| c != usize::MAX)
            .map(|&c| self.coords[c].as_slice())
    }
}

/// Writes the conjugation action on the abelian chief factor `X/Y` as matrices.
pub fn factor_module(g: &PermGroup, x: &Subgroup, y: &Subgroup) -> Result<FactorModule> {
    check_section(g, x, y)?;
    if !is_abelian_section(g, x, y) {
        return Err(Error::NotAbelianFactor);
    }
    let index = (x.order() / y.order()) as u64;
    let (p, n_raw) = fp::prime_power(index).ok_or(Error::NotChief("order is not a prime power"))?;
    if x.gens().iter().any(|&a| !y.contains(g.pow(a, p))) {
        return Err(Error::NotChief("factor is not elementary abelian"));
    }
    let n_raw = n_raw as usize;

    // cosets of Y inside X, in discovery order
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for a in x.elements() {
        if coset_of[a] == usize::MAX {
            for b in y.elements() {
                coset_of[g.mul(b, a)] = reps.len();
            }
            reps.push(a);
        }
    }

    // greedy basis; span maps coset -> coordinates
    let mut coords: Vec<Option<Vec<u64>>> = vec![None; reps.len()];
    coords[coset_of[PermGroup::IDENTITY]] = Some(vec![0; n_raw]);
    let mut spanned = vec![coset_of[PermGroup::IDENTITY]];
    let mut basis = Vec::new();
    for &a in &reps {
        if coords[coset_of[a]].is_some() {
            continue;
        }
        let j = basis.len();
        basis.push(a);
        let mut added = Vec::new();
        for &c in &spanned {
            let base = coords[c].clone().unwrap();
            let mut elt = reps[c];
            for k in 1..p {
                elt = g.mul(elt, a);
                let mut v = base.clone();
                v[j] = k;
                let cid = coset_of[elt];
                debug_assert!(coords[cid].is_none());
                coords[cid] = Some(v);
                added.push(cid);
            }
        }
        spanned.extend(added);
    }
    debug_assert_eq!(basis.len(), n_raw);
    let coords: Vec<Vec<u64>> = coords.into_iter().map(|c| c.unwrap()).collect();

    let mut module = FactorModule {
        p,
        n_raw,
        gen_matrices: Vec::new(),
        h_order: 0,
        central: false,
        p_fix: BigRational::from_integer(1.into()),
        basis,
        coset_of,
        coords,
    };
    module.gen_matrices = g
        .gen_indices()
        .iter()
        .map(|&s| module.matrix_of(g, s))
        .collect();
    if !is_irreducible(p, n_raw, &module.gen_matrices) {
        return Err(Error::NotChief("module is reducible"));
    }
    let centralizer = g.section_centralizer(x, y)?;
    module.h_order = g.order() / centralizer.order();
    module.central = module.h_order == 1;

    let classes = g.conjugacy_classes();
    let fixing: usize = classes
        .reps
        .iter()
        .zip(&classes.sizes)
        .filter(|(&r, _)| module.matrix_of(g, r).fixed_dim() > 0)
        .map(|(_, &s)| s)
        .sum();
    module.p_fix = BigRational::new(BigInt::from(fixing), BigInt::from(g.order()));
    Ok(module)
}

/// Every nonzero vector spins up to the whole space.
fn is_irreducible(p: u64, n: usize, gens: &[Matrix]) -> bool {
    let mut ok = true;
    fp::for_each_vector(p, n, |v| {
        // one vector per line: leading nonzero coordinate equal to 1
        match v.iter().find(|&&c| c != 0) {
            Some(1) => {}
            _ => return true,
        }
        if spin_dim(p, v, gens) < n {
            ok = false;
        }
        ok
    });
    ok
}

fn spin_dim(p: u64, v: &[u64], gens: &[Matrix]) -> usize {
    let mut found: Vec<Vec<u64>> = vec![v.to_vec()];
    let mut head = 0;
    let mut rank = 1;
    while head < found.len() {
        let w = found[head].clone();
        for a in gens {
            let img = a.vec_mul(&w);
            let mut trial = found.clone();
            trial.push(img.clone());
            let r = Matrix::from_rows(p, &trial).rank();
            if r > rank {
                rank = r;
                found.push(img);
            }
        }
        head += 1;
    }
    rank
}

/// Result of a G-isomorphism test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IsoCheck {
    pub isomorphic: bool,
    /// The intertwiner space was too large to scan and random sampling
    /// found no invertible element.
    pub heuristic: bool,
}

pub fn g_isomorphism(a: &FactorModule, b: &FactorModule) -> Result<IsoCheck> {
    if a.p != b.p {
        return Err(Error::DifferentPrime(a.p, b.p));
    }
    let no = IsoCheck {
        isomorphic: false,
        heuristic: false,
    };
    if a.n_raw != b.n_raw {
        return Ok(no);
    }
    if a.gen_matrices.is_empty() {
        return Ok(IsoCheck {
            isomorphic: true,
            heuristic: false,
        });
    }
    let basis = fp::intertwiners(&a.gen_matrices, &b.gen_matrices);
    if basis.is_empty() {
        return Ok(no);
    }
    let e = basis.len();
    let space = (a.p as u128).checked_pow(e as u32).unwrap_or(u128::MAX);
    if space <= ISO_SCAN_LIMIT as u128 {
        let mut found = false;
        fp::for_each_vector(a.p, e, |c| {
            found = fp::combine(&basis, c).is_invertible();
            !found
        });
        return Ok(IsoCheck {
            isomorphic: found,
            heuristic: false,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..ISO_RANDOM_TRIALS {
        let c: Vec<u64> = (0..e).map(|_| rng.random_range(0..a.p)).collect();
        if fp::combine(&basis, &c).is_invertible() {
            return Ok(IsoCheck {
                isomorphic: true,
                heuristic: false,
            });
        }
    }
    Ok(IsoCheck {
        isomorphic: false,
        heuristic: true,
    })
}

pub fn g_isomorphic(a: &FactorModule, b: &FactorModule) -> Result<bool> {
    g_isomorphism(a, b).map(|c| c.isomorphic)
}

/// `(q, n)` with `q = |End_G(V)|` and `n = dim_{End_G(V)} V`.
pub fn endo_field(m: &FactorModule) -> Result<(u64, usize)> {
    if m.gen_matrices.is_empty() {
        // every endomorphism commutes; only a 1-dimensional module is irreducible
        return if m.n_raw == 1 {
            Ok((m.p, 1))
        } else {
            Err(Error::NotIrreducible)
        };
    }
    let basis = fp::intertwiners(&m.gen_matrices, &m.gen_matrices);
    let e = basis.len();
    if e == 0 || !m.n_raw.is_multiple_of(e) {
        return Err(Error::NotIrreducible);
    }
    if !is_field(m.p, &basis) {
        return Err(Error::NotIrreducible);
    }
    Ok((m.p.pow(e as u32), m.n_raw / e))
}

/// The span of `basis` is closed under products and its nonzero elements
/// are invertible.
pub fn is_field(p: u64, basis: &[Matrix]) -> bool {
    let e = basis.len();
    let flat = |m: &Matrix| -> Vec<u64> { m.to_rows().concat() };
    let span_rank = Matrix::from_rows(p, &basis.iter().map(flat).collect::<Vec<_>>()).rank();
    for a in basis {
        for b in basis {
            let mut rows: Vec<Vec<u64>> = basis.iter().map(flat).collect();
            rows.push(flat(&a.mul(b)));
            if Matrix::from_rows(p, &rows).rank() != span_rank {
                return false;
            }
        }
    }
    let mut ok = true;
    if (p as u128).pow(e as u32) <= ISO_SCAN_LIMIT as u128 {
        fp::for_each_vector(p, e, |c| {
            if c.iter().any(|&x| x != 0) {
                ok = fp::combine(basis, c).is_invertible();
            }
            ok
        });
    } else {
        ok = basis.iter().all(|b| b.is_invertible());
    }
    ok
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationCount {
    pub der_count: u128,
    pub inner_count: u128,
    /// `dim_{End(V)} H¹(H_V, V)`
    pub m: u32,
}

/// Counts derivations `H_V → V` by enumerating images of the generators.
///
/// `H_V` is realised as the matrix group generated by the generator
/// actions. A candidate assignment is extended along a breadth-first
/// traversal with `ζ(h s) = ζ(h)·s + ζ(s)` and kept if every edge agrees.
pub fn derivations(m: &FactorModule, cap: u128) -> Result<DerivationCount> {
    let (q, _) = endo_field(m)?;
    let p = m.p;
    let n = m.n_raw;
    let mut gens: Vec<Matrix> = Vec::new();
    for a in &m.gen_matrices {
        if !a.is_identity() && !gens.contains(a) {
            gens.push(a.clone());
        }
    }
    let v_size = (p as u128).pow(n as u32);
    let size = v_size.checked_pow(gens.len() as u32).unwrap_or(u128::MAX);
    if size > cap {
        return Err(Error::SearchCapExceeded { size, cap });
    }

    // matrix group with its right-multiplication edges
    let id = Matrix::identity(p, n);
    let mut elems = vec![id.clone()];
    let mut index: HashMap<Matrix, usize> = HashMap::from([(id, 0)]);
    let mut tree: Vec<Option<(usize, usize)>> = vec![None];
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    let mut head = 0;
    while head < elems.len() {
        for (j, s) in gens.iter().enumerate() {
            let t = elems[head].mul(s);
            let k = match index.get(&t) {
                Some(&k) => k,
                None => {
                    let k = elems.len();
                    index.insert(t.clone(), k);
                    elems.push(t);
                    tree.push(Some((head, j)));
                    k
                }
            };
            edges.push((head, j, k));
        }
        head += 1;
    }

    let add =
        |a: &[u64], b: &[u64]| -> Vec<u64> { a.iter().zip(b).map(|(x, y)| (x + y) % p).collect() };
    let mut der_count: u128 = 0;
    let s = gens.len();
    fp::for_each_vector(p, n * s, |flat| {
        let images: Vec<&[u64]> = flat.chunks(n.max(1)).take(s).collect();
        let mut zeta: Vec<Vec<u64>> = vec![vec![0; n]; elems.len()];
        for k in 1..elems.len() {
            let (parent, j) = tree[k].unwrap();
            zeta[k] = add(&gens[j].vec_mul(&zeta[parent]), images[j]);
        }
        let consistent = edges
            .iter()
            .all(|&(h, j, k)| add(&gens[j].vec_mul(&zeta[h]), images[j]) == zeta[k]);
        if consistent {
            der_count += 1;
        }
        true
    });

    // inner derivations: |V| / |C_V(H)|
    let fixed_dim = if gens.is_empty() {
        n
    } else {
        let mut stacked = Matrix::zeros(p, n, n * gens.len());
        for (j, a) in gens.iter().enumerate() {
            let d = a.sub(&Matrix::identity(p, n));
            for r in 0..n {
                for c in 0..n {
                    stacked.set(r, j * n + c, d.get(r, c));
                }
            }
        }
        n - stacked.rank()
    };
    let inner_count = v_size / (p as u128).pow(fixed_dim as u32);
    let ratio = der_count / inner_count;
    let mut mq = 0u32;
    let mut r = ratio;
    while r > 1 {
        debug_assert_eq!(r % q as u128, 0);
        r /= q as u128;
        mq += 1;
    }
    Ok(DerivationCount {
        der_count,
        inner_count,
        m: mq,
    })
}

/// One G-isomorphism class of complemented abelian chief factors.
#[derive(Clone, Debug)]
pub struct CrownClass {
    pub module: FactorModule,
    pub q: u64,
    pub n: usize,
    pub delta: u32,
    pub theta: u32,
    /// `None` when the derivation search exceeded its cap.
    pub m: Option<u32>,
    /// Position (from the top) of the first factor in the series.
    pub first_index: usize,
    pub iso_heuristic: bool,
}

impl CrownClass {
    pub fn p(&self) -> u64 {
        self.module.p
    }

    pub fn n_raw(&self) -> usize {
        self.module.n_raw
    }

    /// `q^n = |V|`
    pub fn v_size(&self) -> u64 {
        self.module.size()
    }

    pub fn h_order(&self) -> usize {
        self.module.h_order
    }

    pub fn central(&self) -> bool {
        self.module.central
    }
}

#[derive(Clone, Debug)]
pub struct OtherFactor {
    pub index: usize,
    pub order: usize,
    pub abelian: bool,
    pub complemented: bool,
}

/// Crown data: non-central (`a`) and central (`b`) classes of complemented
/// abelian chief factors, plus the factors excluded from them.
#[derive(Clone, Debug)]
pub struct Crowns {
    pub series: ChiefSeries,
    pub a: Vec<CrownClass>,
    pub b: Vec<CrownClass>,
    /// Frattini (non-complemented) abelian factors and all nonabelian factors.
    pub excluded: Vec<OtherFactor>,
}

impl Crowns {
    pub fn classes(&self) -> impl Iterator<Item = &CrownClass> {
        self.a.iter().chain(&self.b)
    }

    pub fn max_central_delta(&self) -> u32 {
        self.b.iter().map(|c| c.delta).max().unwrap_or(0)
    }
}

pub fn crown_data(g: &PermGroup, lattice: &SubgroupLattice) -> Result<Crowns> {
    crown_data_from(g, lattice, chief_series(g, lattice))
}

pub fn crown_data_from(
    g: &PermGroup,
    lattice: &SubgroupLattice,
    series: ChiefSeries,
) -> Result<Crowns> {
    let soluble = g.is_soluble();
    let mut classes: Vec<(FactorModule, usize, u32, bool)> = Vec::new();
    let mut excluded = Vec::new();
    for i in 0..series.len() {
        let (x, y) = series.section(i);
        let complemented = is_complemented(g, lattice, x, y)?;
        let meta = &series.factors[i];
        if !meta.abelian || !complemented {
            excluded.push(OtherFactor {
                index: i,
                order: meta.order,
                abelian: meta.abelian,
                complemented,
            });
            continue;
        }
        let module = factor_module(g, x, y)?;
        let mut matched = false;
        for entry in classes.iter_mut() {
            if entry.0.p != module.p {
                continue;
            }
            let check = g_isomorphism(&entry.0, &module)?;
            entry.3 |= check.heuristic;
            if check.isomorphic {
                entry.2 += 1;
                matched = true;
                break;
            }
        }
        if !matched {
            classes.push((module, i, 1, false));
        }
    }

    let mut a = Vec::new();
    let mut b = Vec::new();
    for (module, first_index, delta, iso_heuristic) in classes {
        let (q, n) = endo_field(&module)?;
        let m = if soluble {
            Some(0)
        } else {
            derivations(&module, DERIVATION_CAP).ok().map(|d| d.m)
        };
        let class = CrownClass {
            q,
            n,
            delta,
            theta: u32::from(delta > 1),
            m,
            first_index,
            iso_heuristic,
            module,
        };
        if class.central() {
            b.push(class);
        } else {
            a.push(class);
        }
    }
    let key = |c: &CrownClass| (c.p(), c.n_raw(), c.first_index);
    a.sort_by_key(key);
    b.sort_by_key(key);
    Ok(Crowns {
        series,
        a,
        b,
        excluded,
    })
}

/// Marks the maximal classes `M` whose primitive quotient `G/core_G(M)` has
/// socle G-isomorphic to `v` (or to `v × v`).
pub fn omega_membership(
    g: &PermGroup,
    lattice: &SubgroupLattice,
    maximals: &[MaximalClassData],
    v: &FactorModule,
) -> Result<Vec<bool>> {
    maximals
        .iter()
        .map(|m| {
            let core = g.subgroup_from_bits(&m.core_bits);
            let minimal = lattice.minimal_normal_over(&core);
            if minimal.is_empty() || minimal.len() > 2 {
                return Ok(false);
            }
            for n in &minimal {
                if !is_abelian_section(g, n, &core) {
                    return Ok(false);
                }
                let w = factor_module(g, n, &core)?;
                if w.p != v.p || !g_isomorphic(&w, v)? {
                    return Ok(false);
                }
            }
            Ok(true)
        })
        .collect()
}

/// Bitset of the union of conjugates for each maximal class in `omega`.
pub fn omega_classes<'a>(
    maximals: &'a [MaximalClassData],
    omega: &[bool],
) -> Vec<&'a MaximalClassData> {
    maximals
        .iter()
        .zip(omega)
        .filter(|(_, &b)| b)
        .map(|(m, _)| m)
        .collect()
}

/// Stabilizer of `v` in `H_V`, as a fraction of `|H_V|`: `|H_v| / |H|`.
pub fn stabilizer_fraction(g: &PermGroup, m: &FactorModule, v: &[u64]) -> BigRational {
    let fixing = (0..g.order())
        .filter(|&x| m.matrix_of(g, x).vec_mul(v) == v)
        .count();
    BigRational::new(BigInt::from(fixing), BigInt::from(g.order()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_group;
    use crate::perm::Permutation;

    fn p(text: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(text, n).unwrap()
    }

    fn group(n: usize, gens: &[&str]) -> PermGroup {
        let gens: Vec<Permutation> = gens.iter().map(|t| p(t, n)).collect();
        build_group(n, &gens).unwrap()
    }

    fn s3() -> PermGroup {
        group(3, &["(1 2 3)", "(1 2)"])
    }

    fn sub(g: &PermGroup, n: usize, gens: &[&str]) -> Subgroup {
        let idx: Vec<usize> = gens.iter().map(|t| g.index_of(&p(t, n)).unwrap()).collect();
        g.generate(&idx)
    }

    #[test]
    fn chief_series_examples() {
        let c6 = group(6, &["(1 2 3 4 5 6)"]);
        let lat = SubgroupLattice::new(&c6).unwrap();
        let mut orders: Vec<usize> = chief_series(&c6, &lat)
            .factors
            .iter()
            .map(|f| f.order)
            .collect();
        orders.sort();
        assert_eq!(orders, vec![2, 3]);

        let g = s3();
        let lat = SubgroupLattice::new(&g).unwrap();
        let s = chief_series(&g, &lat);
        assert_eq!(
            s.factors.iter().map(|f| f.order).collect::<Vec<_>>(),
            vec![2, 3]
        );
        assert!(s.factors.iter().all(|f| f.abelian));
    }

    #[test]
    fn complement_examples() {
        let c4 = group(4, &["(1 2 3 4)"]);
        let lat = SubgroupLattice::new(&c4).unwrap();
        let c2 = sub(&c4, 4, &["(1 3)(2 4)"]);
        assert!(!is_complemented(&c4, &lat, &c2, &c4.trivial_subgroup()).unwrap());

        let k = group(4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        let lat = SubgroupLattice::new(&k).unwrap();
        let c2 = sub(&k, 4, &["(1 2)(3 4)"]);
        assert!(is_complemented(&k, &lat, &c2, &k.trivial_subgroup()).unwrap());

        let g = s3();
        let lat = SubgroupLattice::new(&g).unwrap();
        let a3 = sub(&g, 3, &["(1 2 3)"]);
        assert!(is_complemented(&g, &lat, &a3, &g.trivial_subgroup()).unwrap());
    }

    #[test]
    fn factor_module_examples() {
        let g = s3();
        let a3 = sub(&g, 3, &["(1 2 3)"]);
        let m = factor_module(&g, &a3, &g.trivial_subgroup()).unwrap();
        assert_eq!((m.p, m.n_raw, m.h_order), (3, 1, 2));
        let t = g.index_of(&p("(1 2)", 3)).unwrap();
        assert_eq!(m.matrix_of(&g, t), Matrix::from_rows(3, &[vec![2]]));
        assert_eq!(m.p_fix, BigRational::new(1.into(), 2.into()));

        let a4 = group(4, &["(1 2 3)", "(1 2)(3 4)"]);
        let v4 = sub(&a4, 4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        let m = factor_module(&a4, &v4, &a4.trivial_subgroup()).unwrap();
        assert_eq!((m.p, m.n_raw, m.h_order), (2, 2, 3));
        assert_eq!(m.p_fix, BigRational::new(1.into(), 3.into()));
        assert_eq!(endo_field(&m).unwrap(), (4, 1));

        // central factor
        let c2 = group(2, &["(1 2)"]);
        let m = factor_module(&c2, &c2.whole(), &c2.trivial_subgroup()).unwrap();
        assert!(m.central && m.h_order == 1);
        assert!(m.gen_matrices.iter().all(|a| a.is_identity()));
        assert_eq!(m.p_fix, BigRational::from_integer(1.into()));

        // nonabelian and non-chief sections
        let s4 = group(4, &["(1 2 3 4)", "(1 2)"]);
        let a4s = sub(&s4, 4, &["(1 2 3)", "(1 2)(3 4)"]);
        let v4s = sub(&s4, 4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        assert_eq!(
            factor_module(&s4, &a4s, &s4.trivial_subgroup()).unwrap_err(),
            Error::NotAbelianFactor
        );
        let k = group(4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        assert!(matches!(
            factor_module(&k, &k.whole(), &k.trivial_subgroup()),
            Err(Error::NotChief(_))
        ));
        let _ = v4s;
    }

    #[test]
    fn isomorphism_examples() {
        let g = s3();
        let lat = SubgroupLattice::new(&g).unwrap();
        let s = chief_series(&g, &lat);
        let top = factor_module(&g, s.section(0).0, s.section(0).1).unwrap();
        let bottom = factor_module(&g, s.section(1).0, s.section(1).1).unwrap();
        assert!(g_isomorphic(&top, &top).unwrap());
        assert_eq!(
            g_isomorphic(&top, &bottom).unwrap_err(),
            Error::DifferentPrime(2, 3)
        );

        let k = group(4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        let lat = SubgroupLattice::new(&k).unwrap();
        let s = chief_series(&k, &lat);
        let m0 = factor_module(&k, s.section(0).0, s.section(0).1).unwrap();
        let m1 = factor_module(&k, s.section(1).0, s.section(1).1).unwrap();
        assert!(g_isomorphic(&m0, &m1).unwrap());
    }

    #[test]
    fn crown_examples() {
        let k = group(4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        let c = crown_data(&k, &SubgroupLattice::new(&k).unwrap()).unwrap();
        assert!(c.a.is_empty());
        assert_eq!(c.b.len(), 1);
        assert_eq!(
            (c.b[0].delta, c.b[0].q, c.b[0].n, c.b[0].theta),
            (2, 2, 1, 1)
        );

        let g = s3();
        let c = crown_data(&g, &SubgroupLattice::new(&g).unwrap()).unwrap();
        assert_eq!(c.a.len(), 1);
        let a = &c.a[0];
        assert_eq!((a.delta, a.theta, a.q, a.n, a.h_order()), (1, 0, 3, 1, 2));
        assert_eq!(c.b.len(), 1);
        assert_eq!(c.b[0].delta, 1);

        let c4 = group(4, &["(1 2 3 4)"]);
        let c = crown_data(&c4, &SubgroupLattice::new(&c4).unwrap()).unwrap();
        assert!(c.a.is_empty());
        assert_eq!(c.b.len(), 1);
        assert_eq!(c.b[0].delta, 1);
        assert_eq!(c.excluded.len(), 1);
    }

    #[test]
    fn derivation_examples() {
        // C_2 inverting F_3
        let g = s3();
        let a3 = sub(&g, 3, &["(1 2 3)"]);
        let m = factor_module(&g, &a3, &g.trivial_subgroup()).unwrap();
        let d = derivations(&m, DERIVATION_CAP).unwrap();
        assert_eq!((d.der_count, d.inner_count, d.m), (3, 3, 0));

        // GL(2,2) on F_2^2 inside S_4
        let s4 = group(4, &["(1 2 3 4)", "(1 2)"]);
        let v4 = sub(&s4, 4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        let m = factor_module(&s4, &v4, &s4.trivial_subgroup()).unwrap();
        let d = derivations(&m, DERIVATION_CAP).unwrap();
        assert_eq!((d.der_count, d.inner_count, d.m), (4, 4, 0));
        assert!(matches!(
            derivations(&m, 10),
            Err(Error::SearchCapExceeded { .. })
        ));
    }

    #[test]
    fn omega_examples() {
        use crate::subgroup::maximal_classes;
        let g = s3();
        let lat = SubgroupLattice::new(&g).unwrap();
        let maxes = maximal_classes(&g, &lat).unwrap();
        let c = crown_data(&g, &lat).unwrap();
        let omega = omega_membership(&g, &lat, &maxes, &c.a[0].module).unwrap();
        let marked: Vec<usize> = maxes
            .iter()
            .zip(&omega)
            .filter(|(_, &b)| b)
            .map(|(m, _)| m.representative.order())
            .collect();
        // only the conjugates of C_2 have core-free quotient S_3 with socle A_3
        assert_eq!(marked, vec![2]);

        let k = group(4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        let lat = SubgroupLattice::new(&k).unwrap();
        let maxes = maximal_classes(&k, &lat).unwrap();
        let c = crown_data(&k, &lat).unwrap();
        let omega = omega_membership(&k, &lat, &maxes, &c.b[0].module).unwrap();
        assert!(omega.iter().all(|&b| b));

        let c6 = group(6, &["(1 2 3 4 5 6)"]);
        let lat = SubgroupLattice::new(&c6).unwrap();
        let maxes = maximal_classes(&c6, &lat).unwrap();
        let c = crown_data(&c6, &lat).unwrap();
        let v3 = c.a.iter().chain(&c.b).find(|v| v.p() == 3).unwrap();
        let omega = omega_membership(&c6, &lat, &maxes, &v3.module).unwrap();
        let marked: Vec<usize> = maxes
            .iter()
            .zip(&omega)
            .filter(|(_, &b)| b)
            .map(|(m, _)| m.representative.order())
            .collect();
        assert_eq!(marked, vec![2]);
    }
}
