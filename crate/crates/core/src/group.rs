//! Permutation groups with a full element table.
//!
//! Every group is enumerated completely, so membership, products and
//! subgroups all reduce to index arithmetic over the element table.

use std::collections::{HashMap, VecDeque};

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::subgroup::Subgroup;

/// Default cap on the number of enumerated elements.
pub const DEFAULT_ORDER_CAP: usize = 20_000;

/// Groups up to this order keep a full Cayley table.
const CAYLEY_TABLE_LIMIT: usize = 2048;

#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    gen_indices: Vec<usize>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    inverses: Vec<usize>,
    table: Option<Vec<u32>>,
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

/// Builds the group generated by `generators` with the default order cap.
pub fn build_group(degree: usize, generators: &[Permutation]) -> Result<PermGroup> {
    PermGroup::with_cap(degree, generators, DEFAULT_ORDER_CAP)
}

impl PermGroup {
    /// Enumerates the closure of `generators` breadth-first.
    ///
    /// Generators are sorted and deduplicated (identities dropped) first, so
    /// the element indexing depends only on the generating set.
    pub fn with_cap(degree: usize, generators: &[Permutation], cap: usize) -> Result<PermGroup> {
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let mut gens: Vec<Permutation> = generators
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        gens.sort();
        gens.dedup();

        let id = Permutation::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::new();
        index.insert(id, 0usize);
        let mut head = 0;
        while head < elements.len() {
            for s in &gens {
                let next = elements[head].compose(s);
                if !index.contains_key(&next) {
                    if elements.len() >= cap {
                        return Err(Error::OrderCapExceeded { cap });
                    }
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                }
            }
            head += 1;
        }

        let inverses = elements.iter().map(|e| index[&e.inverse()]).collect();
        let gen_indices = gens.iter().map(|g| index[g]).collect();
        let n = elements.len();
        let table = (n <= CAYLEY_TABLE_LIMIT).then(|| {
            let mut t = vec![0u32; n * n];
            for (i, a) in elements.iter().enumerate() {
                for (j, b) in elements.iter().enumerate() {
                    t[i * n + j] = index[&a.compose(b)] as u32;
                }
            }
            t
        });

        Ok(PermGroup {
            degree,
            generators: gens,
            gen_indices,
            elements,
            index,
            inverses,
            table,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Element-table indices of the generators.
    pub fn gen_indices(&self) -> &[usize] {
        &self.gen_indices
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub const IDENTITY: usize = 0;

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.index[&self.elements[a].compose(&self.elements[b])],
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `x⁻¹ a x`
    #[inline]
    pub fn conj(&self, a: usize, x: usize) -> usize {
        self.mul(self.mul(self.inv(x), a), x)
    }

    /// `a⁻¹ b⁻¹ a b`
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inv(ba), ab)
    }

    pub fn pow(&self, a: usize, mut k: u64) -> usize {
        let mut base = a;
        let mut acc = Self::IDENTITY;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != Self::IDENTITY {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.order())
            .map(|i| self.element_order(i))
            .fold(1, num_integer::lcm)
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.gen_indices;
        g.iter()
            .all(|&a| g.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_parts(Bitset::full(self.order()), self.gen_indices.clone())
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_parts(Bitset::from_indices(self.order(), [0]), Vec::new())
    }

    /// Subgroup generated by the given element indices.
    pub fn generate(&self, gens: &[usize]) -> Subgroup {
        self.extend(&self.trivial_subgroup(), gens)
    }

    /// `⟨base, extra⟩`, reusing the elements of `base` as the starting set.
    pub fn extend(&self, base: &Subgroup, extra: &[usize]) -> Subgroup {
        let mut gens: Vec<usize> = base.gens().to_vec();
        for &e in extra {
            if !base.contains(e) && !gens.contains(&e) {
                gens.push(e);
            }
        }
        if gens.len() == base.gens().len() {
            return base.clone();
        }
        let mut bits = base.bits().clone();
        let mut list: Vec<usize> = bits.iter().collect();
        let mut head = 0;
        while head < list.len() {
            let x = list[head];
            for &s in &gens {
                let y = self.mul(x, s);
                if bits.insert(y) {
                    list.push(y);
                }
            }
            head += 1;
        }
        Subgroup::from_parts(bits, gens)
    }

    /// Recovers a subgroup (with a greedy generating set) from a closed bitset.
    pub fn subgroup_from_bits(&self, bits: &Bitset) -> Subgroup {
        let mut sub = self.trivial_subgroup();
        for e in bits.iter() {
            if !sub.contains(e) {
                sub = self.extend(&sub, &[e]);
            }
        }
        debug_assert_eq!(sub.bits(), bits);
        sub
    }

    pub fn conjugate_bits(&self, bits: &Bitset, x: usize) -> Bitset {
        Bitset::from_indices(self.order(), bits.iter().map(|a| self.conj(a, x)))
    }

    pub fn is_normal(&self, sub: &Subgroup) -> bool {
        self.normalizes(sub, &self.gen_indices)
    }

    fn normalizes(&self, sub: &Subgroup, by: &[usize]) -> bool {
        by.iter()
            .all(|&s| sub.gens().iter().all(|&h| sub.contains(self.conj(h, s))))
    }

    /// Smallest subgroup containing `gens` and closed under conjugation by `by`.
    pub fn normal_closure_under(&self, gens: &[usize], by: &[usize]) -> Subgroup {
        let mut sub = self.generate(gens);
        'outer: loop {
            for &s in by {
                for &h in sub.gens() {
                    let c = self.conj(h, s);
                    if !sub.contains(c) {
                        sub = self.extend(&sub, &[c]);
                        continue 'outer;
                    }
                }
            }
            return sub;
        }
    }

    pub fn normal_closure(&self, gens: &[usize]) -> Subgroup {
        self.normal_closure_under(gens, &self.gen_indices)
    }

    /// Derived subgroup of `h`: normal closure in `h` of commutators of its generators.
    pub fn derived_subgroup(&self, h: &Subgroup) -> Subgroup {
        let gens = h.gens();
        let mut comms = Vec::new();
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                let c = self.commutator(a, b);
                if c != Self::IDENTITY {
                    comms.push(c);
                }
            }
        }
        self.normal_closure_under(&comms, gens)
    }

    pub fn derived_series(&self) -> Vec<Subgroup> {
        let mut series = vec![self.whole()];
        loop {
            let last = series.last().unwrap();
            let d = self.derived_subgroup(last);
            if d.order() == last.order() {
                return series;
            }
            let done = d.order() == 1;
            series.push(d);
            if done {
                return series;
            }
        }
    }

    pub fn is_soluble(&self) -> bool {
        self.derived_series().last().unwrap().order() == 1
    }

    pub fn conjugacy_classes(&self) -> ConjClassTable {
        let n = self.order();
        let mut class_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        let mut sizes = Vec::new();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = reps.len();
            class_of[start] = id;
            let mut queue = VecDeque::from([start]);
            let mut size = 1;
            while let Some(a) = queue.pop_front() {
                for &s in &self.gen_indices {
                    let b = self.conj(a, s);
                    if class_of[b] == usize::MAX {
                        class_of[b] = id;
                        size += 1;
                        queue.push_back(b);
                    }
                }
            }
            reps.push(start);
            sizes.push(size);
        }
        ConjClassTable {
            class_of,
            reps,
            sizes,
        }
    }

    /// Right cosets `N g` of `sub`: returns (coset id per element, representative per coset).
    pub fn right_cosets(&self, sub: &Subgroup) -> (Vec<usize>, Vec<usize>) {
        let n = self.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for g in 0..n {
            if coset_of[g] != usize::MAX {
                continue;
            }
            for h in sub.bits().iter() {
                coset_of[self.mul(h, g)] = reps.len();
            }
            reps.push(g);
        }
        (coset_of, reps)
    }

    /// Image of the action on right cosets of the normal subgroup `n`, with
    /// the natural epimorphism as an element-index map.
    pub fn quotient(&self, n: &Subgroup) -> Result<(PermGroup, Vec<usize>)> {
        if !self.is_normal(n) {
            return Err(Error::NotNormal);
        }
        let (coset_of, reps) = self.right_cosets(n);
        let k = reps.len();
        let action = |g: usize| -> Permutation {
            let images = reps.iter().map(|&r| coset_of[self.mul(r, g)]).collect();
            Permutation::from_images(images).expect("coset action is a bijection")
        };
        let gens: Vec<Permutation> = self.gen_indices.iter().map(|&s| action(s)).collect();
        let q = PermGroup::with_cap(k, &gens, usize::MAX)?;
        let epi = (0..self.order())
            .map(|g| q.index_of(&action(g)).expect("image lies in quotient"))
            .collect();
        Ok((q, epi))
    }

    /// `{g ∈ G : [g, x] ∈ y for all x ∈ x_sub}`, the centralizer of the section `x_sub / y`.
    pub fn section_centralizer(&self, x: &Subgroup, y: &Subgroup) -> Result<Subgroup> {
        if !y.bits().is_subset(x.bits()) {
            return Err(Error::BadSection("Y is not contained in X"));
        }
        if !self.is_normal(x) || !self.is_normal(y) {
            return Err(Error::BadSection("X and Y must be normal in G"));
        }
        let bits = Bitset::from_indices(
            self.order(),
            (0..self.order())
                .filter(|&g| x.gens().iter().all(|&a| y.contains(self.commutator(g, a)))),
        );
        Ok(self.subgroup_from_bits(&bits))
    }
}

/// Partition of the element table into conjugacy classes.
#[derive(Clone, Debug)]
pub struct ConjClassTable {
    pub class_of: Vec<usize>,
    pub reps: Vec<usize>,
    pub sizes: Vec<usize>,
}

impl ConjClassTable {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn members(&self, class: usize) -> impl Iterator<Item = usize> + '_ {
        self.class_of
            .iter()
            .enumerate()
            .filter(move |(_, &c)| c == class)
            .map(|(i, _)| i)
    }
}
