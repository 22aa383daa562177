//! Subgroup enumeration and the structural subgroups derived from it.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::group::PermGroup;

/// Default cap on `|G|` for full subgroup enumeration.
pub const DEFAULT_SUBGROUP_CAP: usize = 2000;

/// A subgroup stored as a bitset over its parent's element table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    bits: Bitset,
    order: usize,
    gens: Vec<usize>,
}

impl Subgroup {
    pub(crate) fn from_parts(bits: Bitset, gens: Vec<usize>) -> Self {
        let order = bits.count();
        Subgroup { bits, order, gens }
    }

    pub fn bits(&self) -> &Bitset {
        &self.bits
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Element indices that generate the subgroup.
    pub fn gens(&self) -> &[usize] {
        &self.gens
    }

    #[inline]
    pub fn contains(&self, e: usize) -> bool {
        self.bits.contains(e)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter()
    }
}

/// Every subgroup of a group, in canonical order (by order, then bitset).
#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    subgroups: Vec<Subgroup>,
    normal: Vec<usize>,
}

impl SubgroupLattice {
    pub fn new(g: &PermGroup) -> Result<Self> {
        Self::with_cap(g, DEFAULT_SUBGROUP_CAP)
    }

    pub fn with_cap(g: &PermGroup, cap: usize) -> Result<Self> {
        let subgroups = all_subgroups(g, cap)?;
        let normal = (0..subgroups.len())
            .filter(|&i| g.is_normal(&subgroups[i]))
            .collect();
        Ok(SubgroupLattice { subgroups, normal })
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn normal_subgroups(&self) -> impl Iterator<Item = &Subgroup> + '_ {
        self.normal.iter().map(|&i| &self.subgroups[i])
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    /// Normal subgroups `N` of `G` minimal subject to `below ⊊ N`.
    pub fn minimal_normal_over(&self, below: &Subgroup) -> Vec<Subgroup> {
        let over: Vec<&Subgroup> = self
            .normal_subgroups()
            .filter(|n| n.order() > below.order() && below.is_subgroup_of(n))
            .collect();
        over.iter()
            .filter(|n| {
                !over
                    .iter()
                    .any(|m| m.order() < n.order() && m.is_subgroup_of(n))
            })
            .map(|n| (*n).clone())
            .collect()
    }
}

/// Enumerates all subgroups by cyclic extension.
///
/// For each known subgroup `S` and each `g ∉ S`, the join `⟨S, g⟩` is
/// formed. The join only depends on the double coset `S g^k S` for `k`
/// coprime to the order of `g`, so those elements are skipped once one of
/// them has been tried.
pub fn all_subgroups(g: &PermGroup, cap: usize) -> Result<Vec<Subgroup>> {
    if g.order() > cap {
        return Err(Error::OrderCapExceeded { cap });
    }
    let n = g.order();
    let trivial = g.trivial_subgroup();
    let mut seen: HashSet<Bitset> = HashSet::from([trivial.bits().clone()]);
    let mut found = vec![trivial.clone()];
    let mut queue = VecDeque::from([trivial]);

    while let Some(s) = queue.pop_front() {
        if s.order() == n {
            continue;
        }
        let mut covered = s.bits().clone();
        let members: Vec<usize> = s.elements().collect();
        for x in 0..n {
            if covered.contains(x) {
                continue;
            }
            let joined = g.extend(&s, &[x]);
            let ord = g.element_order(x) as u64;
            for k in 1..ord {
                if num_integer::gcd(k, ord) != 1 {
                    continue;
                }
                let xk = g.pow(x, k);
                for &a in &members {
                    let axk = g.mul(a, xk);
                    for &b in &members {
                        covered.insert(g.mul(axk, b));
                    }
                }
            }
            if seen.insert(joined.bits().clone()) {
                found.push(joined.clone());
                queue.push_back(joined);
            }
        }
    }

    found.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.bits().cmp(b.bits()))
    });
    Ok(found)
}

/// One conjugacy class of maximal subgroups.
#[derive(Clone, Debug)]
pub struct MaximalClassData {
    pub representative: Subgroup,
    pub class_size: usize,
    /// Union of all conjugates.
    pub union_bits: Bitset,
    /// Intersection of all conjugates.
    pub core_bits: Bitset,
}

impl MaximalClassData {
    pub fn index(&self, group_order: usize) -> usize {
        group_order / self.representative.order()
    }
}

/// Maximal subgroups of `g`, one entry per conjugacy class.
pub fn maximal_classes(g: &PermGroup, lattice: &SubgroupLattice) -> Result<Vec<MaximalClassData>> {
    if g.is_trivial() {
        return Err(Error::TrivialGroup);
    }
    let subs = lattice.subgroups();
    let n = g.order();
    let proper: Vec<&Subgroup> = subs.iter().filter(|s| s.order() < n).collect();
    let maximal: Vec<&Subgroup> = proper
        .iter()
        .filter(|m| {
            !proper
                .iter()
                .any(|h| h.order() > m.order() && h.order() % m.order() == 0 && m.is_subgroup_of(h))
        })
        .copied()
        .collect();

    let mut assigned: HashSet<&Bitset> = HashSet::new();
    let mut out = Vec::new();
    for m in maximal {
        if assigned.contains(m.bits()) {
            continue;
        }
        // orbit of m under conjugation by the generators of g
        let mut orbit = vec![m.bits().clone()];
        let mut orbit_set: HashSet<Bitset> = HashSet::from([m.bits().clone()]);
        let mut head = 0;
        while head < orbit.len() {
            for &s in g.gen_indices() {
                let c = g.conjugate_bits(&orbit[head], s);
                if orbit_set.insert(c.clone()) {
                    orbit.push(c);
                }
            }
            head += 1;
        }
        let mut union_bits = Bitset::new(n);
        let mut core_bits = Bitset::full(n);
        for c in &orbit {
            union_bits.union_with(c);
            core_bits.intersect_with(c);
        }
        for s in subs.iter().filter(|s| orbit_set.contains(s.bits())) {
            assigned.insert(s.bits());
        }
        assert!(
            !union_bits.is_full(),
            "conjugates of a proper subgroup cover the group"
        );
        out.push(MaximalClassData {
            representative: m.clone(),
            class_size: orbit.len(),
            union_bits,
            core_bits,
        });
    }
    Ok(out)
}

/// Intersection of all maximal subgroups.
pub fn frattini(g: &PermGroup, maximals: &[MaximalClassData]) -> crate::subgroup::Subgroup {
    if g.is_trivial() {
        return g.trivial_subgroup();
    }
    let mut bits = Bitset::full(g.order());
    for m in maximals {
        bits.intersect_with(&m.core_bits);
    }
    g.subgroup_from_bits(&bits)
}

pub fn minimal_normal_subgroups(g: &PermGroup, lattice: &SubgroupLattice) -> Result<Vec<Subgroup>> {
    if g.is_trivial() {
        return Err(Error::TrivialGroup);
    }
    Ok(lattice.minimal_normal_over(&g.trivial_subgroup()))
}

/// Minimal number of generators `d(G)`.
///
/// Level `k` holds every subgroup generated by `k` elements whose first
/// element is a conjugacy-class representative; `d(G)` is the first level
/// that contains `G`.
pub fn min_generators(g: &PermGroup) -> usize {
    let n = g.order();
    if n == 1 {
        return 0;
    }
    let classes = g.conjugacy_classes();
    let mut level: HashMap<Bitset, crate::subgroup::Subgroup> = HashMap::new();
    for &r in &classes.reps {
        let c = g.generate(&[r]);
        if c.order() == n {
            return 1;
        }
        level.insert(c.bits().clone(), c);
    }
    for k in 2.. {
        let mut next: HashMap<Bitset, Subgroup> = HashMap::new();
        for s in level.values() {
            let mut covered = s.bits().clone();
            let members: Vec<usize> = s.elements().collect();
            for x in 0..n {
                if covered.contains(x) {
                    continue;
                }
                let h = g.extend(s, &[x]);
                if h.order() == n {
                    return k;
                }
                for &a in &members {
                    let ax = g.mul(a, x);
                    for &b in &members {
                        covered.insert(g.mul(ax, b));
                    }
                }
                next.entry(h.bits().clone()).or_insert(h);
            }
        }
        level = next;
    }
    unreachable!()
}
