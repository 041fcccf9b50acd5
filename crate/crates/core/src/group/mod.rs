//! Permutation groups with exact order, membership and, below a size bound,
//! a materialized element table that the subgroup algorithms run on.

mod algo;
mod chain;
mod lattice;
mod product;
mod subgroup;
mod table;

use alloc::vec::Vec;
use num_bigint::BigUint;
use num_traits::ToPrimitive;

pub use product::{build_product, direct_product, semidirect_regular, Construction, GroupSpec};
pub use subgroup::Subgroup;
pub use table::{ElementId, ElementTable, IDENTITY};

pub(crate) use algo::{conjugate_with, is_p_power};
pub(crate) use subgroup::{from_elements, generate, intersect_sorted, Closure};

use crate::perm::Permutation;
use crate::{Error, Result};
use chain::StabChain;

/// Size bounds for the exhaustive parts of the library.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Groups up to this order get a materialized element table.
    pub materialize: usize,
    /// Materialization is also refused when `order * degree` exceeds this.
    pub materialize_cells: usize,
    /// Largest Sylow order for exhaustive p-subgroup enumeration.
    pub sylow_enumeration: usize,
    /// Largest group order for full subgroup-lattice enumeration.
    pub subgroup_lattice: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            materialize: 200_000,
            materialize_cells: 64_000_000,
            sylow_enumeration: 256,
            subgroup_lattice: 1000,
        }
    }
}

/// A finitely generated permutation group.
#[derive(Clone, Debug)]
pub struct Group {
    degree: usize,
    generators: Vec<Permutation>,
    chain: StabChain,
    order: BigUint,
    table: Option<ElementTable>,
    limits: Limits,
}

impl Group {
    pub fn generate(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::with_limits(degree, generators, Limits::default())
    }

    /// Degree is taken from the generators; an empty list is rejected.
    pub fn from_generators(generators: Vec<Permutation>) -> Result<Self> {
        let degree = generators
            .first()
            .map(|g| g.degree())
            .ok_or_else(|| Error::InvalidSpec("no generators and no degree given".into()))?;
        Self::generate(degree, generators)
    }

    pub fn with_limits(degree: usize, generators: Vec<Permutation>, limits: Limits) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidSpec("degree must be positive".into()));
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch { expected: degree, found: g.degree() });
        }
        let chain = StabChain::new(degree, &generators);
        let order = chain.order();
        let table = match order.to_usize() {
            Some(n) if n <= limits.materialize && n.saturating_mul(degree) <= limits.materialize_cells => {
                Some(ElementTable::new(degree, chain.elements(), &generators))
            }
            _ => None,
        };
        Ok(Group { degree, generators, chain, order, table, limits })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    /// Base points of the stabilizer chain (0-based).
    pub fn base(&self) -> Vec<u32> {
        self.chain.base()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain.contains(g)
    }

    pub fn is_materialized(&self) -> bool {
        self.table.is_some()
    }

    pub fn table(&self) -> Result<&ElementTable> {
        self.table.as_ref().ok_or_else(|| Error::Capacity {
            what: "group order for element materialization",
            size: alloc::format!("{}", self.order),
            limit: self.limits.materialize,
        })
    }

    /// All elements, enumerated from the stabilizer chain.
    pub fn elements(&self) -> Vec<Permutation> {
        match &self.table {
            Some(t) => t.ids().map(|x| t.permutation(x)).collect(),
            None => self.chain.elements(),
        }
    }

    pub fn id_of(&self, g: &Permutation) -> Result<ElementId> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: g.degree() });
        }
        self.table()?
            .find(g.images())
            .ok_or_else(|| Error::NotContained(alloc::format!("{g} is not an element of the group")))
    }

    pub fn permutation(&self, id: ElementId) -> Result<Permutation> {
        Ok(self.table()?.permutation(id))
    }

    /// Fails unless `h` was built from this group's element table.
    pub fn check_owned(&self, h: &Subgroup) -> Result<()> {
        let t = self.table()?;
        match h.elements().last() {
            Some(&x) if (x as usize) < t.len() => Ok(()),
            _ => Err(Error::NotContained("subgroup ids exceed the element table".into())),
        }
    }

    /// The whole group as a subgroup of itself.
    pub fn whole(&self) -> Result<Subgroup> {
        let t = self.table()?;
        let mut gens: Vec<ElementId> = Vec::new();
        for &g in t.generators() {
            if g != IDENTITY && !gens.contains(&g) {
                gens.push(g);
            }
        }
        Ok(Subgroup::from_parts(t.ids().collect(), gens))
    }

    /// The subgroup generated by the given permutations.
    pub fn subgroup(&self, generators: &[Permutation]) -> Result<Subgroup> {
        let ids = generators.iter().map(|g| self.id_of(g)).collect::<Result<Vec<_>>>()?;
        self.subgroup_from_ids(&ids)
    }

    pub fn subgroup_from_ids(&self, generators: &[ElementId]) -> Result<Subgroup> {
        let t = self.table()?;
        if let Some(&bad) = generators.iter().find(|&&g| g as usize >= t.len()) {
            return Err(Error::NotContained(alloc::format!("element id {bad} out of range")));
        }
        Ok(subgroup::generate(t, generators.iter().copied()))
    }

    /// Wraps a known subgroup element set (e.g. an intersection of subgroups).
    pub fn subgroup_from_elements(&self, elements: Vec<ElementId>) -> Result<Subgroup> {
        Ok(subgroup::from_elements(self.table()?, elements))
    }

    /// Generators of a subgroup as permutations.
    pub fn generator_permutations(&self, h: &Subgroup) -> Result<Vec<Permutation>> {
        let t = self.table()?;
        Ok(h.generators().iter().map(|&g| t.permutation(g)).collect())
    }

    /// Solvability of the whole group; works without materialization.
    pub fn is_solvable(&self) -> bool {
        match &self.table {
            Some(_) => {
                let whole = self.whole().expect("materialized");
                self.is_solvable_subgroup(&whole).expect("materialized")
            }
            None => algo::is_solvable_by_chain(self.degree, &self.generators),
        }
    }

    /// Prime divisors of the group order.
    pub fn prime_divisors(&self) -> Vec<u64> {
        crate::arith::prime_divisors(&self.order, Some(self.degree as u64))
    }
}

#[cfg(test)]
mod tests;
