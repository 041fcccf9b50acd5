use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::group::{conjugate_with, Group, Subgroup};
use crate::topology::FinitePoset;
use crate::{Error, Result};

/// A conjugation-closed set of subgroups of a materialized group.
#[derive(Clone, Debug)]
pub struct Family {
    label: String,
    members: Vec<Subgroup>,
}

impl Family {
    /// Fails unless the member set is closed under conjugation by the
    /// generators of `group`.
    pub fn new(group: &Group, label: impl Into<String>, mut members: Vec<Subgroup>) -> Result<Self> {
        let t = group.table()?;
        members.sort();
        members.dedup();
        for h in &members {
            group.check_owned(h)?;
        }
        let family = Family { label: label.into(), members };
        for h in &family.members {
            for &s in t.generators() {
                let image = conjugate_with(h, |x| t.conj(x, s));
                if !family.contains(&image) {
                    return Err(Error::InvalidArgument(alloc::format!(
                        "family `{}` is not closed under conjugation",
                        family.label
                    )));
                }
            }
        }
        Ok(family)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Members sorted by order, then element ids.
    pub fn members(&self) -> &[Subgroup] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, h: &Subgroup) -> bool {
        self.members.binary_search(h).is_ok()
    }

    /// Members not properly contained in another member.
    pub fn maximal(&self) -> Vec<&Subgroup> {
        self.members
            .iter()
            .enumerate()
            .filter(|(i, h)| !self.members[i + 1..].iter().any(|k| k.order() > h.order() && h.is_subgroup_of(k)))
            .map(|(_, h)| h)
            .collect()
    }
}

/// All solvable subgroups, the trivial one included.
pub fn solvable_family(group: &Group) -> Result<Family> {
    let lattice = group.subgroup_lattice()?;
    solvable_family_from(group, &lattice)
}

pub(crate) fn solvable_family_from(group: &Group, lattice: &[Subgroup]) -> Result<Family> {
    let mut members = Vec::new();
    for h in lattice {
        if group.is_solvable_subgroup(h)? {
            members.push(h.clone());
        }
    }
    Family::new(group, "SLV", members)
}

/// Outcome of the separating-family test: the first failed clause with its
/// witnesses, or `None` when all three clauses hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeparationFailure {
    /// The whole group belongs to the family.
    ContainsWhole,
    /// `sub ≤ member` with `member ∈ F`, `sub ∉ F`.
    NotSubgroupClosed { member: Subgroup, sub: Subgroup },
    /// `h ◁ k` with `k/h` solvable, `h ∈ F`, `k ∉ F`.
    NotExtensionClosed { h: Subgroup, k: Subgroup },
}

impl SeparationFailure {
    pub fn clause(&self) -> char {
        match self {
            SeparationFailure::ContainsWhole => 'a',
            SeparationFailure::NotSubgroupClosed { .. } => 'b',
            SeparationFailure::NotExtensionClosed { .. } => 'c',
        }
    }
}

/// Clauses checked in order over the full subgroup lattice: (a) `G ∉ F`,
/// (b) subgroups of members are members, (c) solvable extensions of members
/// inside their normalizers are members.
pub fn is_separating_family(group: &Group, family: &Family) -> Result<Option<SeparationFailure>> {
    let lattice = group.subgroup_lattice()?;
    separation_from(group, family, &lattice)
}

pub(crate) fn separation_from(
    group: &Group,
    family: &Family,
    lattice: &[Subgroup],
) -> Result<Option<SeparationFailure>> {
    let whole = group.whole()?;
    if family.contains(&whole) {
        return Ok(Some(SeparationFailure::ContainsWhole));
    }
    for member in family.members() {
        for sub in lattice.iter().take_while(|k| k.order() < member.order()) {
            if sub.is_subgroup_of(member) && !family.contains(sub) {
                return Ok(Some(SeparationFailure::NotSubgroupClosed { member: member.clone(), sub: sub.clone() }));
            }
        }
    }
    // perfect cores are reused across members
    let mut cores: Vec<Option<Subgroup>> = alloc::vec![None; lattice.len()];
    for h in family.members() {
        let n = group.normalizer(h)?;
        for (i, k) in lattice.iter().enumerate() {
            if k.order() <= h.order() || !h.is_subgroup_of(k) || !k.is_subgroup_of(&n) || family.contains(k) {
                continue;
            }
            if cores[i].is_none() {
                cores[i] = Some(group.perfect_core(k)?);
            }
            if cores[i].as_ref().is_some_and(|c| c.is_subgroup_of(h)) {
                return Ok(Some(SeparationFailure::NotExtensionClosed { h: h.clone(), k: k.clone() }));
            }
        }
    }
    Ok(None)
}

/// The index `(1/[N_G(H):H]) (1 - χ(K(F_{>H})))`.
pub fn os_index(group: &Group, family: &Family, h: &Subgroup) -> Result<BigRational> {
    Ok(os_index_parts(group, family, h)?.0)
}

/// The index together with `χ(K(F_{>H}))` and `[N_G(H):H]`.
pub fn os_index_parts(group: &Group, family: &Family, h: &Subgroup) -> Result<(BigRational, i64, usize)> {
    group.check_owned(h)?;
    if !h.is_trivial() && !family.contains(h) {
        return Err(Error::InvalidArgument("subgroup is neither trivial nor a family member".into()));
    }
    let above: Vec<&Subgroup> =
        family.members().iter().filter(|k| k.order() > h.order() && h.is_subgroup_of(k)).collect();
    let up_sets = (0..above.len())
        .map(|i| {
            (i + 1..above.len())
                .filter(|&j| above[j].order() > above[i].order() && above[i].is_subgroup_of(above[j]))
                .map(|j| j as u32)
                .collect()
        })
        .collect();
    let chi = FinitePoset::from_up_sets(up_sets).order_complex_euler();
    let index = group.normalizer(h)?.order() / h.order();
    let value = BigRational::new(BigInt::from(1 - chi), BigInt::from(index));
    Ok((value, chi, index))
}
