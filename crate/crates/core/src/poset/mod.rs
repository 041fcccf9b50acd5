//! Posets of nontrivial p-subgroups ordered by inclusion.

mod build;
mod lemmas;
#[cfg(test)]
mod tests;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::group::{ElementId, Group, Subgroup};
use crate::topology::FinitePoset;
use crate::{arith, Error, Result};

pub use build::{build_poset, fixed_subposet, i_reduction};
pub use lemmas::{lemmaprank_eval, p_rank, retract_reduce, RankWitness, RetractOutcome};
pub(crate) use lemmas::{lemmaprank_from, p_rank_from, retract_from};

/// Which construction produced a poset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PosetKind {
    Sp,
    Ap,
    Bp,
    ISp,
    IAp,
    Fixed,
    Custom,
}

impl PosetKind {
    pub const ALL: [PosetKind; 7] = [
        PosetKind::Sp,
        PosetKind::Ap,
        PosetKind::Bp,
        PosetKind::ISp,
        PosetKind::IAp,
        PosetKind::Fixed,
        PosetKind::Custom,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PosetKind::Sp => "Sp",
            PosetKind::Ap => "Ap",
            PosetKind::Bp => "Bp",
            PosetKind::ISp => "iSp",
            PosetKind::IAp => "iAp",
            PosetKind::Fixed => "fixed",
            PosetKind::Custom => "custom",
        }
    }
}

impl fmt::Display for PosetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PosetKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PosetKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidArgument(alloc::format!("unknown poset kind `{s}`")))
    }
}

/// A finite set of nontrivial p-subgroups of a materialized group, ordered
/// by inclusion, with the conjugation action of the group's generators.
///
/// Elements are sorted by order and then by element ids, so index order is a
/// linear extension of inclusion.
#[derive(Clone, Debug)]
pub struct SubgroupPoset {
    prime: u64,
    kind: PosetKind,
    elements: Vec<Subgroup>,
    relation: FinitePoset,
    covers: Vec<(u32, u32)>,
    action: Option<Vec<Vec<u32>>>,
}

impl SubgroupPoset {
    /// Builds the inclusion poset on `members` (deduplicated). Every member
    /// must be a nontrivial p-subgroup of `group`.
    pub fn from_subgroups(group: &Group, prime: u64, kind: PosetKind, mut members: Vec<Subgroup>) -> Result<Self> {
        arith::require_prime(prime)?;
        let t = group.table()?;
        members.sort();
        members.dedup();
        for h in &members {
            group.check_owned(h)?;
            if h.is_trivial() || !crate::group::is_p_power(h.order() as u64, prime) {
                return Err(Error::InvalidArgument(alloc::format!(
                    "poset member of order {} is not a nontrivial {prime}-subgroup",
                    h.order()
                )));
            }
        }
        let relation = inclusion_relation(t.len(), &members);
        let covers = relation.covers();
        let mut poset = SubgroupPoset { prime, kind, elements: members, relation, covers, action: None };
        poset.action = poset.compute_action(group);
        Ok(poset)
    }

    pub(crate) fn empty(prime: u64, kind: PosetKind) -> Self {
        SubgroupPoset {
            prime,
            kind,
            elements: Vec::new(),
            relation: FinitePoset::default(),
            covers: Vec::new(),
            action: Some(Vec::new()),
        }
    }

    fn compute_action(&self, group: &Group) -> Option<Vec<Vec<u32>>> {
        let t = group.table().ok()?;
        let mut action = Vec::with_capacity(t.generators().len());
        for k in 0..t.generators().len() {
            let mut images = Vec::with_capacity(self.len());
            for h in &self.elements {
                let mut elems: Vec<ElementId> = h.elements().iter().map(|&x| t.conj_by_generator(k, x)).collect();
                elems.sort_unstable();
                images.push(self.position(&elems)? as u32);
            }
            action.push(images);
        }
        Some(action)
    }

    /// Index of the member with exactly this (sorted) element set.
    pub fn position(&self, elements: &[ElementId]) -> Option<usize> {
        self.elements
            .binary_search_by(|h| h.order().cmp(&elements.len()).then_with(|| h.elements().cmp(elements)))
            .ok()
    }

    pub fn index_of(&self, h: &Subgroup) -> Option<usize> {
        self.position(h.elements())
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn kind(&self) -> PosetKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Subgroup] {
        &self.elements
    }

    pub fn relation(&self) -> &FinitePoset {
        &self.relation
    }

    /// Covering pairs `(lower, upper)` of the Hasse diagram.
    pub fn covers(&self) -> &[(u32, u32)] {
        &self.covers
    }

    /// For each ambient generator, the permutation of member indices induced
    /// by conjugation; `None` when the member set is not invariant.
    pub fn action(&self) -> Option<&[Vec<u32>]> {
        self.action.as_deref()
    }

    /// Longest chain cardinality minus one, `-1` when empty.
    pub fn height(&self) -> i64 {
        self.relation.height()
    }

    pub fn maximal(&self) -> Vec<u32> {
        self.relation.maximal()
    }

    /// True when the action exists and every generator is an order
    /// automorphism.
    pub fn is_invariant(&self) -> bool {
        let Some(action) = &self.action else { return false };
        action.iter().all(|images| {
            let mut seen = vec![false; self.len()];
            images.iter().all(|&j| !core::mem::replace(&mut seen[j as usize], true))
                && (0..self.len()).all(|i| {
                    let up: Vec<u32> = {
                        let mut v: Vec<u32> = self.relation.above(i).iter().map(|&b| images[b as usize]).collect();
                        v.sort_unstable();
                        v
                    };
                    up == self.relation.above(images[i] as usize)
                })
        })
    }

    /// Induced subposet on the given member indices (sorted, distinct).
    pub fn restrict(&self, keep: &[u32], kind: PosetKind) -> SubgroupPoset {
        let relation = self.relation.induced(keep);
        let covers = relation.covers();
        let mut index = vec![u32::MAX; self.len()];
        for (new, &old) in keep.iter().enumerate() {
            index[old as usize] = new as u32;
        }
        let action = self.action.as_ref().and_then(|action| {
            action
                .iter()
                .map(|images| {
                    keep.iter()
                        .map(|&old| {
                            let j = index[images[old as usize] as usize];
                            (j != u32::MAX).then_some(j)
                        })
                        .collect::<Option<Vec<u32>>>()
                })
                .collect::<Option<Vec<_>>>()
        });
        SubgroupPoset {
            prime: self.prime,
            kind,
            elements: keep.iter().map(|&i| self.elements[i as usize].clone()).collect(),
            relation,
            covers,
            action,
        }
    }

    /// Members whose element set lies in `h`.
    pub fn members_in(&self, h: &Subgroup) -> Vec<u32> {
        (0..self.len() as u32).filter(|&i| self.elements[i as usize].is_subgroup_of(h)).collect()
    }

    /// Short human summary used by reports.
    pub fn summary(&self) -> String {
        alloc::format!(
            "{} p={} elements={} covers={} height={}",
            self.kind,
            self.prime,
            self.len(),
            self.covers.len(),
            self.height()
        )
    }
}

/// Strict inclusion between sorted members, via posting lists.
fn inclusion_relation(universe: usize, members: &[Subgroup]) -> FinitePoset {
    let mut posting: Vec<Vec<u32>> = vec![Vec::new(); universe];
    for (i, h) in members.iter().enumerate() {
        for &x in h.elements() {
            posting[x as usize].push(i as u32);
        }
    }
    let above = members
        .iter()
        .enumerate()
        .map(|(i, h)| {
            let mut lists: Vec<&[u32]> = h.generators().iter().map(|&g| posting[g as usize].as_slice()).collect();
            if lists.is_empty() {
                return (0..members.len() as u32).filter(|&j| j as usize != i).collect();
            }
            lists.sort_by_key(|l| l.len());
            let mut acc: Vec<u32> = lists[0].iter().copied().filter(|&j| j as usize > i).collect();
            for l in &lists[1..] {
                acc.retain(|j| l.binary_search(j).is_ok());
            }
            acc
        })
        .collect();
    FinitePoset::from_up_sets(above)
}
