//! Claim checks producing [`Verdict`]s for one group, or one group and prime.

mod checks;
mod family;
#[cfg(test)]
mod tests;

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cell::OnceCell;
use core::fmt;
use core::str::FromStr;

use crate::group::{Group, Subgroup};
use crate::poset::{build_poset, i_reduction, PosetKind, SubgroupPoset};
use crate::topology::{poset_complex, reduced_homology, HomologyGroups};
use crate::{Error, Result};

pub use checks::{
    brown_check, invariance_check, lemmaprank_check, lemmaprank_normal_check, normal_stabilizer_search, normal_stab_check, os_index_check,
    quillen_check, retract_check, separating_check, StabilizerSearch,
};
pub use family::{is_separating_family, os_index, os_index_parts, solvable_family, Family, SeparationFailure};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    Verified,
    Refuted,
    SkippedCapacity,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::Refuted => "refuted",
            Status::SkippedCapacity => "skipped-capacity",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The parameterless claims run by the corpus harness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Claim {
    Brown,
    Quillen,
    Invariance,
    Lemmaprank,
    NormalStab,
    Separating,
    OsIndex,
}

impl Claim {
    pub const ALL: [Claim; 7] = [
        Claim::Brown,
        Claim::Quillen,
        Claim::Invariance,
        Claim::Lemmaprank,
        Claim::NormalStab,
        Claim::Separating,
        Claim::OsIndex,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Claim::Brown => "brown",
            Claim::Quillen => "quillen",
            Claim::Invariance => "invariance",
            Claim::Lemmaprank => "lemmaprank",
            Claim::NormalStab => "normal-stab",
            Claim::Separating => "separating",
            Claim::OsIndex => "os-index",
        }
    }

    /// Claims about a group alone rather than a group and a prime.
    pub fn is_group_level(self) -> bool {
        matches!(self, Claim::Separating | Claim::OsIndex)
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Claim::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidArgument(alloc::format!("unknown claim `{s}`")))
    }
}

/// The result of one check. Refuted verdicts carry their witness in `data`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub claim: String,
    pub group: String,
    pub prime: Option<u64>,
    pub status: Status,
    pub data: Vec<(String, String)>,
    /// Filled in by callers that have a clock.
    pub wall_time: Option<core::time::Duration>,
}

impl Verdict {
    pub(crate) fn new(claim: impl Into<String>, group: &str, prime: Option<u64>, status: Status) -> Self {
        Verdict { claim: claim.into(), group: group.into(), prime, status, data: Vec::new(), wall_time: None }
    }

    pub(crate) fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.data.push((key.into(), value.to_string()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.data.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub(crate) fn skipped(claim: impl Into<String>, group: &str, prime: Option<u64>, err: &Error) -> Self {
        Verdict::new(claim, group, prime, Status::SkippedCapacity).with("reason", err)
    }
}

type Cached<T> = OnceCell<core::result::Result<T, Error>>;

fn cached<T>(cell: &Cached<T>, f: impl FnOnce() -> Result<T>) -> Result<&T> {
    cell.get_or_init(f).as_ref().map_err(Clone::clone)
}

/// Lazily built posets and homology for one group and prime, shared by the
/// per-prime claims.
pub struct Analysis<'g> {
    group: &'g Group,
    name: String,
    prime: u64,
    posets: [Cached<SubgroupPoset>; 5],
    homology: [Cached<HomologyGroups>; 5],
    p_core: Cached<Subgroup>,
}

/// The five homotopy-equivalent models, in a fixed order.
pub const MODELS: [PosetKind; 5] = [PosetKind::Sp, PosetKind::Ap, PosetKind::Bp, PosetKind::ISp, PosetKind::IAp];

impl<'g> Analysis<'g> {
    pub fn new(group: &'g Group, name: &str, prime: u64) -> Result<Self> {
        crate::arith::require_prime(prime)?;
        Ok(Analysis {
            group,
            name: name.into(),
            prime,
            posets: Default::default(),
            homology: Default::default(),
            p_core: OnceCell::new(),
        })
    }

    pub fn group(&self) -> &'g Group {
        self.group
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    fn slot(kind: PosetKind) -> Result<usize> {
        MODELS
            .iter()
            .position(|&k| k == kind)
            .ok_or_else(|| Error::InvalidArgument(alloc::format!("`{kind}` is not cached")))
    }

    pub fn poset(&self, kind: PosetKind) -> Result<&SubgroupPoset> {
        let slot = Self::slot(kind)?;
        cached(&self.posets[slot], || match kind {
            PosetKind::ISp => i_reduction(self.group, self.poset(PosetKind::Sp)?),
            PosetKind::IAp => i_reduction(self.group, self.poset(PosetKind::Ap)?),
            k => build_poset(self.group, self.prime, k),
        })
    }

    pub fn homology(&self, kind: PosetKind) -> Result<&HomologyGroups> {
        let slot = Self::slot(kind)?;
        cached(&self.homology[slot], || Ok(reduced_homology(&poset_complex(self.poset(kind)?))))
    }

    pub fn p_core(&self) -> Result<&Subgroup> {
        cached(&self.p_core, || self.group.p_core(self.prime))
    }

    /// Runs a per-prime claim; group-level claims are rejected.
    pub fn run(&self, claim: Claim) -> Result<Verdict> {
        match claim {
            Claim::Brown => brown_check(self),
            Claim::Quillen => quillen_check(self),
            Claim::Invariance => invariance_check(self),
            Claim::Lemmaprank => lemmaprank_check(self),
            Claim::NormalStab => normal_stab_check(self),
            Claim::Separating | Claim::OsIndex => {
                Err(Error::InvalidArgument(alloc::format!("`{claim}` is a group-level claim")))
            }
        }
    }
}

/// Group-level state: the subgroup lattice and the solvable family.
pub struct GroupAnalysis<'g> {
    group: &'g Group,
    name: String,
    lattice: Cached<Vec<Subgroup>>,
    slv: Cached<Family>,
}

impl<'g> GroupAnalysis<'g> {
    pub fn new(group: &'g Group, name: &str) -> Self {
        GroupAnalysis { group, name: name.into(), lattice: OnceCell::new(), slv: OnceCell::new() }
    }

    pub fn group(&self) -> &'g Group {
        self.group
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn lattice(&self) -> Result<&[Subgroup]> {
        cached(&self.lattice, || self.group.subgroup_lattice()).map(Vec::as_slice)
    }

    pub fn solvable_family(&self) -> Result<&Family> {
        cached(&self.slv, || family::solvable_family_from(self.group, self.lattice()?))
    }

    /// Runs a group-level claim; `expect_index_one` pins `i_SLV(1) = 1`.
    pub fn run(&self, claim: Claim, expect_index_one: bool) -> Result<Verdict> {
        match claim {
            Claim::Separating => separating_check(self),
            Claim::OsIndex => os_index_check(self, expect_index_one),
            _ => Err(Error::InvalidArgument(alloc::format!("`{claim}` needs a prime"))),
        }
    }
}

/// `order N gens (1 2)/(3 4)` style description of a subgroup.
pub fn describe(group: &Group, h: &Subgroup) -> String {
    let gens: Vec<String> = h
        .generators()
        .iter()
        .map(|&g| group.permutation(g).map(|p| p.to_cycle_string()).unwrap_or_else(|_| "?".into()))
        .collect();
    alloc::format!("order {} gens {}", h.order(), if gens.is_empty() { "()".into() } else { gens.join("/") })
}
