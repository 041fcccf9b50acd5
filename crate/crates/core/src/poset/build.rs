use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::ToString;
use alloc::vec::Vec;

use super::{PosetKind, SubgroupPoset};
use crate::group::{conjugate_with, from_elements, intersect_sorted, Closure, ElementId, Group, Subgroup};
use crate::{arith, Error, Result};

/// Builds `S_p(G)`, `A_p(G)` or `B_p(G)`. Other kinds are derived posets and
/// are rejected here.
pub fn build_poset(group: &Group, p: u64, kind: PosetKind) -> Result<SubgroupPoset> {
    arith::require_prime(p)?;
    group.table()?;
    if !matches!(kind, PosetKind::Sp | PosetKind::Ap | PosetKind::Bp) {
        return Err(Error::InvalidArgument(alloc::format!("`{kind}` is not a base poset kind")));
    }
    let (sylow_order, _) = arith::p_part(group.order(), p);
    if sylow_order == 1u32.into() {
        return Ok(SubgroupPoset::empty(p, kind));
    }
    let limit = group.limits().sylow_enumeration;
    if sylow_order > limit.into() {
        return Err(Error::Capacity { what: "sylow subgroup enumeration", size: sylow_order.to_string(), limit });
    }
    let members = match kind {
        PosetKind::Sp => p_subgroup_classes(group, p)?.into_iter().flatten().collect(),
        PosetKind::Ap => elementary_abelian_subgroups(group, p)?,
        _ => radical_subgroups(group, p)?,
    };
    SubgroupPoset::from_subgroups(group, p, kind, members)
}

/// Nontrivial p-subgroups of `G`, grouped into conjugacy classes.
pub(crate) fn p_subgroup_classes(group: &Group, p: u64) -> Result<Vec<Vec<Subgroup>>> {
    let t = group.table()?;
    let sylow = group.sylow_subgroup(p)?;
    let whole = group.whole()?;
    let mut seen: BTreeSet<Vec<ElementId>> = BTreeSet::new();
    let mut classes = Vec::new();
    for q in subgroups_of_p_group(group, &sylow, p)? {
        if seen.contains(q.elements()) {
            continue;
        }
        let mut class = Vec::new();
        seen.insert(q.elements().to_vec());
        class.push(q);
        let mut i = 0;
        while i < class.len() {
            for &s in whole.generators() {
                let image = conjugate_with(&class[i], |x| t.conj(x, s));
                if seen.insert(image.elements().to_vec()) {
                    class.push(image);
                }
            }
            i += 1;
        }
        classes.push(class);
    }
    Ok(classes)
}

/// All nontrivial subgroups of the p-group `pg`, built level by level: every
/// subgroup `R > Q` with `[R:Q] = p` and `Q ◁ R` is `Q⟨x⟩` for some
/// `x ∈ N_P(Q) \ Q` with `x^p ∈ Q`.
fn subgroups_of_p_group(group: &Group, pg: &Subgroup, p: u64) -> Result<Vec<Subgroup>> {
    let t = group.table()?;
    let mut all = Vec::new();
    let mut level = alloc::vec![Subgroup::trivial()];
    while !level.is_empty() {
        let mut next: BTreeMap<Vec<ElementId>, Subgroup> = BTreeMap::new();
        for q in &level {
            let n = group.normalizer_in(pg, q)?;
            let mut produced: Vec<Subgroup> = Vec::new();
            for &x in n.elements() {
                if q.contains(x) || !q.contains(t.pow(x, p)) || produced.iter().any(|r| r.contains(x)) {
                    continue;
                }
                let mut c = Closure::from_subgroup(t, q);
                c.add(x);
                let r = c.finish();
                next.entry(r.elements().to_vec()).or_insert_with(|| r.clone());
                produced.push(r);
            }
        }
        level = next.into_values().collect();
        all.extend(level.iter().cloned());
    }
    Ok(all)
}

/// Nontrivial elementary abelian p-subgroups, grown from order-p subgroups
/// by adjoining commuting elements of order p.
fn elementary_abelian_subgroups(group: &Group, p: u64) -> Result<Vec<Subgroup>> {
    let t = group.table()?;
    let order_p: Vec<ElementId> = t.ids().filter(|&x| t.order_of(x) as u64 == p).collect();
    let mut all = Vec::new();
    let mut level: Vec<Subgroup> = {
        let mut first: BTreeMap<Vec<ElementId>, Subgroup> = BTreeMap::new();
        for &x in &order_p {
            let mut c = Closure::new(t);
            c.add(x);
            let h = c.finish();
            first.entry(h.elements().to_vec()).or_insert(h);
        }
        first.into_values().collect()
    };
    while !level.is_empty() {
        all.extend(level.iter().cloned());
        let mut next: BTreeMap<Vec<ElementId>, Subgroup> = BTreeMap::new();
        for e in &level {
            let mut produced: Vec<Subgroup> = Vec::new();
            for &y in &order_p {
                if e.contains(y)
                    || !e.generators().iter().all(|&g| t.commute(g, y))
                    || produced.iter().any(|r| r.contains(y))
                {
                    continue;
                }
                let mut c = Closure::from_subgroup(t, e);
                c.add(y);
                let r = c.finish();
                next.entry(r.elements().to_vec()).or_insert_with(|| r.clone());
                produced.push(r);
            }
        }
        level = next.into_values().collect();
    }
    Ok(all)
}

/// Members `Q` of `S_p(G)` with `O_p(N_G(Q)) = Q`, tested once per class.
fn radical_subgroups(group: &Group, p: u64) -> Result<Vec<Subgroup>> {
    let mut out = Vec::new();
    for class in p_subgroup_classes(group, p)? {
        let q = &class[0];
        let n = group.normalizer(q)?;
        if group.p_core_of(&n, p)? == *q {
            out.extend(class);
        }
    }
    Ok(out)
}

/// Intersections of nonempty sets of maximal elements of `x`, minus the
/// trivial subgroup.
pub fn i_reduction(group: &Group, x: &SubgroupPoset) -> Result<SubgroupPoset> {
    let t = group.table()?;
    let kind = match x.kind() {
        PosetKind::Sp | PosetKind::ISp => PosetKind::ISp,
        PosetKind::Ap | PosetKind::IAp => PosetKind::IAp,
        _ => PosetKind::Custom,
    };
    let mut found: BTreeSet<Vec<ElementId>> = BTreeSet::new();
    let mut list: Vec<Vec<ElementId>> = Vec::new();
    let maximal: Vec<Vec<ElementId>> =
        x.maximal().into_iter().map(|i| x.elements()[i as usize].elements().to_vec()).collect();
    for m in &maximal {
        if found.insert(m.clone()) {
            list.push(m.clone());
        }
    }
    // every member of the closure is an intersection of some member with a maximal element
    let mut i = 0;
    while i < list.len() {
        for m in &maximal {
            let meet = intersect_sorted(&list[i], m);
            if meet.len() > 1 && found.insert(meet.clone()) {
                list.push(meet);
            }
        }
        i += 1;
    }
    let members = list
        .into_iter()
        .map(|elems| match x.position(&elems) {
            Some(j) => x.elements()[j].clone(),
            None => from_elements(t, elems),
        })
        .collect();
    SubgroupPoset::from_subgroups(group, x.prime(), kind, members)
}

/// Members of `x` normalized by every generator of `k`.
pub fn fixed_subposet(group: &Group, x: &SubgroupPoset, k: &Subgroup) -> Result<SubgroupPoset> {
    let t = group.table()?;
    group.check_owned(k)?;
    let keep: Vec<u32> = (0..x.len() as u32)
        .filter(|&i| {
            let h = &x.elements()[i as usize];
            k.generators().iter().all(|&g| h.generators().iter().all(|&y| h.contains(t.conj(y, g))))
        })
        .collect();
    Ok(x.restrict(&keep, PosetKind::Fixed))
}
