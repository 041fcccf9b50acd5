//! Conjugacy classes, normal subgroups and the full subgroup lattice.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use super::algo::ConjugationOrbit;
use super::subgroup::{self, Closure, Subgroup};
use super::table::{ElementId, IDENTITY};
use super::Group;
use crate::{Error, Result};

impl Group {
    /// Conjugacy classes of elements, each sorted, ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Result<Vec<Vec<ElementId>>> {
        let t = self.table()?;
        let n = t.len();
        let mut class_of = alloc::vec![u32::MAX; n];
        let mut classes = Vec::new();
        for x in t.ids() {
            if class_of[x as usize] != u32::MAX {
                continue;
            }
            let id = classes.len() as u32;
            class_of[x as usize] = id;
            let mut members = alloc::vec![x];
            let mut i = 0;
            while i < members.len() {
                let y = members[i];
                for k in 0..t.generators().len() {
                    let z = t.conj_by_generator(k, y);
                    if class_of[z as usize] == u32::MAX {
                        class_of[z as usize] = id;
                        members.push(z);
                    }
                }
                i += 1;
            }
            members.sort_unstable();
            classes.push(members);
        }
        Ok(classes)
    }

    /// All normal subgroups, sorted by order then element ids.
    ///
    /// Every normal subgroup is a product of normal closures of conjugacy
    /// classes, so those closures are joined until nothing new appears.
    pub fn normal_subgroups(&self) -> Result<Vec<Subgroup>> {
        let t = self.table()?;
        let mut found: BTreeSet<Subgroup> = BTreeSet::new();
        found.insert(Subgroup::trivial());
        let mut minimal_closures = Vec::new();
        for class in self.conjugacy_classes()? {
            if class[0] == IDENTITY {
                continue;
            }
            let mut c = Closure::new(t);
            for &x in &class {
                c.add(x);
            }
            let n = c.finish();
            if found.insert(n.clone()) {
                minimal_closures.push(n);
            }
        }
        let mut frontier: Vec<Subgroup> = found.iter().cloned().collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for a in &frontier {
                for b in &minimal_closures {
                    if b.is_subgroup_of(a) {
                        continue;
                    }
                    let mut c = Closure::from_subgroup(t, a);
                    for &g in b.generators() {
                        c.add(g);
                    }
                    let j = c.finish();
                    if found.insert(j.clone()) {
                        next.push(j);
                    }
                }
            }
            frontier = next;
        }
        Ok(found.into_iter().collect())
    }

    /// Conjugacy class of a subgroup under the whole group.
    pub fn subgroup_class(&self, h: &Subgroup) -> Result<Vec<Subgroup>> {
        let t = self.table()?;
        Ok(ConjugationOrbit::new(t, &self.whole()?, h).points)
    }

    /// Every subgroup of the group, sorted by order then element ids.
    ///
    /// Cyclic extension over conjugacy-class representatives: each class
    /// representative is joined with every cyclic subgroup it does not
    /// contain, and new results are added together with their whole class.
    pub fn subgroup_lattice(&self) -> Result<Vec<Subgroup>> {
        let t = self.table()?;
        if t.len() > self.limits.subgroup_lattice {
            return Err(Error::Capacity {
                what: "group order for full subgroup enumeration",
                size: alloc::format!("{}", t.len()),
                limit: self.limits.subgroup_lattice,
            });
        }
        let mut cyclic_gens: Vec<ElementId> = Vec::new();
        let mut seen_cyclic: BTreeSet<Vec<ElementId>> = BTreeSet::new();
        for x in t.ids().skip(1) {
            let c = subgroup::generate(t, [x]);
            if seen_cyclic.insert(c.elements().to_vec()) {
                cyclic_gens.push(x);
            }
        }
        let mut all: BTreeMap<Vec<ElementId>, Subgroup> = BTreeMap::new();
        let trivial = Subgroup::trivial();
        all.insert(trivial.elements().to_vec(), trivial.clone());
        let mut reps = alloc::vec![trivial];
        let mut i = 0;
        while i < reps.len() {
            let h = reps[i].clone();
            for &x in &cyclic_gens {
                if h.contains(x) {
                    continue;
                }
                let mut c = Closure::from_subgroup(t, &h);
                c.add(x);
                let k = c.finish();
                if all.contains_key(k.elements()) {
                    continue;
                }
                for member in self.subgroup_class(&k)? {
                    all.insert(member.elements().to_vec(), member);
                }
                reps.push(k);
            }
            i += 1;
        }
        let mut out: Vec<Subgroup> = all.into_values().collect();
        out.sort();
        Ok(out)
    }
}
