use alloc::vec::Vec;

use super::{build_poset, PosetKind, SubgroupPoset};
use crate::group::{generate, Group, Subgroup};
use crate::{arith, Error, Result};

/// An elementary abelian subgroup of maximal rank, with the complement and
/// centralizer rank attaining it when it comes from a normal-subgroup split.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankWitness {
    pub rank: u32,
    pub witness: Subgroup,
    /// `(A, m_p(C_N(A)))` for split evaluations.
    pub decomposition: Option<(Subgroup, u32)>,
}

fn rank_of(h: &Subgroup, p: u64) -> u32 {
    arith::log_p(h.order(), p).expect("elementary abelian order is a prime power")
}

/// Largest member of `ap` (first in index order among ties) whose generators
/// all satisfy `inside`.
fn best_member(ap: &SubgroupPoset, inside: impl Fn(&Subgroup) -> bool) -> Option<&Subgroup> {
    let mut best: Option<&Subgroup> = None;
    for e in ap.elements().iter().rev() {
        if best.is_some_and(|b| b.order() > e.order()) {
            break;
        }
        if inside(e) {
            best = Some(e);
        }
    }
    best
}

/// `m_p(G)` with a witness.
pub fn p_rank(group: &Group, p: u64) -> Result<RankWitness> {
    let ap = build_poset(group, p, PosetKind::Ap)?;
    Ok(p_rank_from(&ap))
}

pub(crate) fn p_rank_from(ap: &SubgroupPoset) -> RankWitness {
    match best_member(ap, |_| true) {
        Some(e) => RankWitness { rank: rank_of(e, ap.prime()), witness: e.clone(), decomposition: None },
        None => RankWitness { rank: 0, witness: Subgroup::trivial(), decomposition: None },
    }
}

/// `max m_p(C_N(A)) + m_p(A)` over elementary abelian `A` with `A ∩ N = 1`.
pub fn lemmaprank_eval(group: &Group, n: &Subgroup, p: u64) -> Result<RankWitness> {
    let ap = build_poset(group, p, PosetKind::Ap)?;
    lemmaprank_from(group, &ap, n)
}

pub(crate) fn lemmaprank_from(group: &Group, ap: &SubgroupPoset, n: &Subgroup) -> Result<RankWitness> {
    let t = group.table()?;
    group.check_owned(n)?;
    if !group.is_normal(n)? {
        return Err(Error::InvalidArgument("subgroup is not normal".into()));
    }
    let p = ap.prime();
    let trivial = Subgroup::trivial();
    let candidates = core::iter::once(&trivial)
        .chain(ap.elements().iter().filter(|a| a.intersection_elements(n).len() == 1));
    let mut best: Option<RankWitness> = None;
    for a in candidates {
        let c = group.centralizer_of_elements(n, a.generators())?;
        let e = best_member(ap, |e| e.generators().iter().all(|&g| c.contains(g)));
        let c_rank = e.map_or(0, |e| rank_of(e, p));
        let value = c_rank + rank_of(a, p);
        if best.as_ref().is_none_or(|b| value > b.rank) {
            let gens = e.map(|e| e.generators()).unwrap_or(&[]).iter().chain(a.generators()).copied();
            best = Some(RankWitness {
                rank: value,
                witness: generate(t, gens),
                decomposition: Some((a.clone(), c_rank)),
            });
        }
    }
    Ok(best.expect("trivial candidate is always present"))
}

/// Result of checking the retraction hypothesis for `H ≤ G`.
#[derive(Clone, Debug)]
pub struct RetractOutcome {
    pub hypothesis_holds: bool,
    /// First `E` with `E ∩ H = 1` and `O_p(C_H(E)) = 1`.
    pub violating: Option<Subgroup>,
    /// `A_p(H)` when the hypothesis holds.
    pub reduced: Option<SubgroupPoset>,
    /// The members `E_1, …, E_r` of `A_p(G)` meeting `H` trivially, in
    /// increasing (order, ids) order.
    pub schedule: Vec<Subgroup>,
    /// For each `E_i`, the members above it that meet `H` nontrivially.
    pub links: Vec<SubgroupPoset>,
}

pub fn retract_reduce(group: &Group, h: &Subgroup, p: u64) -> Result<RetractOutcome> {
    let ap = build_poset(group, p, PosetKind::Ap)?;
    retract_from(group, &ap, h)
}

pub(crate) fn retract_from(group: &Group, ap: &SubgroupPoset, h: &Subgroup) -> Result<RetractOutcome> {
    group.check_owned(h)?;
    let p = ap.prime();
    let meets = |e: &Subgroup| e.intersection_elements(h).len() > 1;
    let schedule: Vec<u32> = (0..ap.len() as u32).filter(|&i| !meets(&ap.elements()[i as usize])).collect();
    for &i in &schedule {
        let e = &ap.elements()[i as usize];
        let c = group.centralizer_of_elements(h, e.generators())?;
        if group.p_core_of(&c, p)?.is_trivial() {
            return Ok(RetractOutcome {
                hypothesis_holds: false,
                violating: Some(e.clone()),
                reduced: None,
                schedule: Vec::new(),
                links: Vec::new(),
            });
        }
    }
    let reduced = ap.restrict(&ap.members_in(h), PosetKind::Ap);
    let links = schedule
        .iter()
        .map(|&i| {
            let up: Vec<u32> =
                ap.relation().above(i as usize).iter().copied().filter(|&j| meets(&ap.elements()[j as usize])).collect();
            ap.restrict(&up, PosetKind::Custom)
        })
        .collect();
    Ok(RetractOutcome {
        hypothesis_holds: true,
        violating: None,
        reduced: Some(reduced),
        schedule: schedule.iter().map(|&i| ap.elements()[i as usize].clone()).collect(),
        links,
    })
}
