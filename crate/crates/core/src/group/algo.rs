//! Subgroup algorithms over a materialized ambient group.
//!
//! Every function works relative to a subgroup `K` of the ambient group so
//! that the same code computes, say, the Sylow subgroups of `G` and of
//! `N_G(Q)`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::chain::StabChain;
use super::subgroup::{self, intersect_sorted, Closure, Subgroup};
use super::table::{ElementId, ElementTable, IdSet, IDENTITY};
use super::Group;
use crate::arith::{log_p, require_prime};
use crate::perm::Permutation;
use crate::{Error, Result};

impl Group {
    fn ensure_subgroup(&self, k: &Subgroup, h: &Subgroup) -> Result<()> {
        if h.is_subgroup_of(k) {
            Ok(())
        } else {
            Err(Error::NotContained("subgroup is not contained in the ambient subgroup".into()))
        }
    }

    /// Image of `h` under conjugation `x -> g^-1 x g`.
    pub fn conjugate(&self, h: &Subgroup, g: ElementId) -> Result<Subgroup> {
        let t = self.table()?;
        Ok(conjugate_with(h, |x| t.conj(x, g)))
    }

    /// Image of `h` under conjugation by the `k`-th group generator.
    pub fn conjugate_by_generator(&self, h: &Subgroup, k: usize) -> Result<Subgroup> {
        let t = self.table()?;
        Ok(conjugate_with(h, |x| t.conj_by_generator(k, x)))
    }

    pub fn normalizer(&self, h: &Subgroup) -> Result<Subgroup> {
        self.normalizer_in(&self.whole()?, h)
    }

    /// `N_K(H)` by orbit–stabilizer on the conjugation action of `K`'s
    /// generators; the stabilizer is generated by Schreier generators.
    pub fn normalizer_in(&self, k: &Subgroup, h: &Subgroup) -> Result<Subgroup> {
        self.ensure_subgroup(k, h)?;
        let t = self.table()?;
        let orbit = ConjugationOrbit::new(t, k, h);
        let mut stab = Closure::from_subgroup(t, h);
        for i in 0..orbit.points.len() {
            for (s_idx, &s) in k.generators().iter().enumerate() {
                let j = orbit.edges[i * k.generators().len() + s_idx];
                let x = t.mul(t.mul(orbit.transversal[i], s), t.inv(orbit.transversal[j]));
                stab.add(x);
            }
        }
        Ok(stab.finish())
    }

    /// `N_K(H)` by testing every element of `K`.
    pub fn normalizer_elementwise(&self, k: &Subgroup, h: &Subgroup) -> Result<Subgroup> {
        self.ensure_subgroup(k, h)?;
        let t = self.table()?;
        let member = IdSet::from_ids(t.len(), h.elements());
        let elements: Vec<ElementId> = k
            .elements()
            .iter()
            .copied()
            .filter(|&g| h.generators().iter().all(|&x| member.contains(t.conj(x, g))))
            .collect();
        Ok(subgroup::from_elements(t, elements))
    }

    pub fn centralizer(&self, h: &Subgroup) -> Result<Subgroup> {
        self.centralizer_in(&self.whole()?, h)
    }

    /// `C_K(H)`: elements of `K` commuting with every generator of `H`.
    pub fn centralizer_in(&self, k: &Subgroup, h: &Subgroup) -> Result<Subgroup> {
        self.ensure_subgroup(k, h)?;
        self.centralizer_of_elements(k, h.generators())
    }

    /// `C_K(S)` for an arbitrary set of elements `S` (not necessarily in `K`).
    pub fn centralizer_of_elements(&self, k: &Subgroup, s: &[ElementId]) -> Result<Subgroup> {
        let t = self.table()?;
        let elements: Vec<ElementId> = k
            .elements()
            .iter()
            .copied()
            .filter(|&g| s.iter().all(|&x| t.commute(g, x)))
            .collect();
        Ok(subgroup::from_elements(t, elements))
    }

    pub fn sylow_subgroup(&self, p: u64) -> Result<Subgroup> {
        self.sylow_of(&self.whole()?, p)
    }

    /// A Sylow p-subgroup of `K`, grown one factor of `p` at a time inside
    /// successive normalizers. Trivial when `p` does not divide `|K|`.
    pub fn sylow_of(&self, k: &Subgroup, p: u64) -> Result<Subgroup> {
        require_prime(p)?;
        let t = self.table()?;
        let target = p_part_usize(k.order(), p);
        let mut current = Subgroup::trivial();
        while current.order() < target {
            let n = self.normalizer_in(k, &current)?;
            let x = n
                .elements()
                .iter()
                .copied()
                .find(|&x| {
                    !current.contains(x)
                        && is_p_power(t.order_of(x) as u64, p)
                        && current.contains(t.pow(x, p))
                })
                .expect("a proper p-subgroup has a p-element in its normalizer quotient");
            let mut c = Closure::from_subgroup(t, &current);
            c.add(x);
            current = c.finish();
        }
        Ok(current)
    }

    /// All Sylow p-subgroups of `K` (the conjugacy orbit of one of them).
    pub fn sylow_conjugates(&self, k: &Subgroup, p: u64) -> Result<Vec<Subgroup>> {
        let t = self.table()?;
        let sylow = self.sylow_of(k, p)?;
        Ok(ConjugationOrbit::new(t, k, &sylow).points)
    }

    pub fn p_core(&self, p: u64) -> Result<Subgroup> {
        self.p_core_of(&self.whole()?, p)
    }

    /// `O_p(K)`: the intersection of all Sylow p-subgroups of `K`.
    pub fn p_core_of(&self, k: &Subgroup, p: u64) -> Result<Subgroup> {
        let t = self.table()?;
        let sylows = self.sylow_conjugates(k, p)?;
        let mut acc = sylows[0].elements().to_vec();
        for s in &sylows[1..] {
            if acc.len() == 1 {
                break;
            }
            acc = intersect_sorted(&acc, s.elements());
        }
        Ok(subgroup::from_elements(t, acc))
    }

    /// `Ω₁(P)`, the subgroup generated by elements of order dividing `p`,
    /// and whether it is abelian.
    pub fn omega1(&self, pgroup: &Subgroup, p: u64) -> Result<(Subgroup, bool)> {
        require_prime(p)?;
        if log_p(pgroup.order(), p).is_none() {
            return Err(Error::InvalidArgument(alloc::format!(
                "subgroup of order {} is not a {p}-group",
                pgroup.order()
            )));
        }
        let t = self.table()?;
        let omega = subgroup::generate(
            t,
            pgroup.elements().iter().copied().filter(|&x| t.order_of(x) as u64 == p),
        );
        let abelian = self.is_abelian(&omega)?;
        Ok((omega, abelian))
    }

    pub fn is_abelian(&self, h: &Subgroup) -> Result<bool> {
        let t = self.table()?;
        let gens = h.generators();
        Ok(gens
            .iter()
            .enumerate()
            .all(|(i, &a)| gens[i + 1..].iter().all(|&b| t.commute(a, b))))
    }

    pub fn is_p_group(&self, h: &Subgroup, p: u64) -> bool {
        log_p(h.order(), p).is_some()
    }

    /// Abelian with every non-identity element of order `p`.
    pub fn is_elementary_abelian(&self, h: &Subgroup, p: u64) -> Result<bool> {
        let t = self.table()?;
        Ok(self.is_p_group(h, p)
            && h.generators().iter().all(|&x| t.order_of(x) as u64 == p)
            && self.is_abelian(h)?)
    }

    /// Whether `H` is normal in `K` (conjugating generators by generators).
    pub fn is_normal_in(&self, k: &Subgroup, h: &Subgroup) -> Result<bool> {
        self.ensure_subgroup(k, h)?;
        let t = self.table()?;
        Ok(k.generators()
            .iter()
            .all(|&g| h.generators().iter().all(|&x| h.contains(t.conj(x, g)))))
    }

    pub fn is_normal(&self, h: &Subgroup) -> Result<bool> {
        self.is_normal_in(&self.whole()?, h)
    }

    /// Smallest normal subgroup of `K` containing `seeds`.
    pub fn normal_closure_in(&self, k: &Subgroup, seeds: &[ElementId]) -> Result<Subgroup> {
        let t = self.table()?;
        let mut c = Closure::new(t);
        for &s in seeds {
            c.add(s);
        }
        let mut i = 0;
        while i < c.generators_len() {
            let d = c.generator(i);
            for &g in k.generators() {
                c.add(t.conj(d, g));
            }
            i += 1;
        }
        Ok(c.finish())
    }

    /// `[H, H]` as the normal closure of commutators of generators.
    pub fn derived_subgroup(&self, h: &Subgroup) -> Result<Subgroup> {
        let t = self.table()?;
        let gens = h.generators();
        let mut comms = Vec::new();
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                let c = t.mul(t.mul(t.inv(a), t.inv(b)), t.mul(a, b));
                if c != IDENTITY {
                    comms.push(c);
                }
            }
        }
        self.normal_closure_in(h, &comms)
    }

    /// Last term of the derived series.
    pub fn perfect_core(&self, h: &Subgroup) -> Result<Subgroup> {
        let mut current = h.clone();
        loop {
            let next = self.derived_subgroup(&current)?;
            if next.order() == current.order() {
                return Ok(current);
            }
            current = next;
        }
    }

    pub fn is_solvable_subgroup(&self, h: &Subgroup) -> Result<bool> {
        Ok(self.perfect_core(h)?.is_trivial())
    }
}

impl Closure<'_> {
    fn generators_len(&self) -> usize {
        self.generators_slice().len()
    }

    fn generator(&self, i: usize) -> ElementId {
        self.generators_slice()[i]
    }
}

pub(crate) fn conjugate_with(h: &Subgroup, f: impl Fn(ElementId) -> ElementId) -> Subgroup {
    let mut elements: Vec<ElementId> = h.elements().iter().map(|&x| f(x)).collect();
    elements.sort_unstable();
    Subgroup::from_parts(elements, h.generators().iter().map(|&x| f(x)).collect())
}

pub(crate) fn is_p_power(n: u64, p: u64) -> bool {
    log_p(n as usize, p).is_some()
}

pub(crate) fn p_part_usize(mut n: usize, p: u64) -> usize {
    let p = p as usize;
    let mut part = 1;
    while n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

/// Orbit of a subgroup under conjugation by the generators of `K`, with a
/// transversal (`H^transversal[i] = points[i]`) and the generator edges.
pub(crate) struct ConjugationOrbit {
    pub(crate) points: Vec<Subgroup>,
    pub(crate) transversal: Vec<ElementId>,
    pub(crate) edges: Vec<usize>,
}

impl ConjugationOrbit {
    pub(crate) fn new(t: &ElementTable, k: &Subgroup, h: &Subgroup) -> Self {
        let gens = k.generators();
        let mut points = alloc::vec![h.clone()];
        let mut transversal = alloc::vec![IDENTITY];
        let mut index: BTreeMap<Vec<ElementId>, usize> = BTreeMap::new();
        index.insert(h.elements().to_vec(), 0);
        let mut edges = Vec::new();
        let mut i = 0;
        while i < points.len() {
            for &s in gens {
                let image = conjugate_with(&points[i], |x| t.conj(x, s));
                let j = match index.get(image.elements()) {
                    Some(&j) => j,
                    None => {
                        let j = points.len();
                        index.insert(image.elements().to_vec(), j);
                        transversal.push(t.mul(transversal[i], s));
                        points.push(image);
                        j
                    }
                };
                edges.push(j);
            }
            i += 1;
        }
        ConjugationOrbit { points, transversal, edges }
    }
}

/// Derived series via stabilizer chains, for groups too large to materialize.
pub(crate) fn is_solvable_by_chain(degree: usize, generators: &[Permutation]) -> bool {
    let mut gens: Vec<Permutation> = generators.iter().filter(|g| !g.is_identity()).cloned().collect();
    let mut order = StabChain::new(degree, &gens).order();
    loop {
        if gens.is_empty() {
            return true;
        }
        let mut seeds = Vec::new();
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                let c = a.inverse().compose(&b.inverse()).compose(a).compose(b);
                if !c.is_identity() {
                    seeds.push(c);
                }
            }
        }
        let mut closure = seeds.clone();
        let mut chain = StabChain::new(degree, &closure);
        let mut i = 0;
        while i < closure.len() {
            for g in &gens {
                let c = g.inverse().compose(&closure[i]).compose(g);
                if !chain.contains(&c) {
                    closure.push(c);
                    chain = StabChain::new(degree, &closure);
                }
            }
            i += 1;
        }
        let next = chain.order();
        if closure.is_empty() {
            return true;
        }
        if next == order {
            return false;
        }
        order = next;
        gens = closure;
    }
}
