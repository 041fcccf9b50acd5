use alloc::vec::Vec;
use core::cmp::Ordering;
use core::hash::{Hash, Hasher};

use super::table::{ElementId, ElementTable, IdSet, IDENTITY};

/// A subgroup of a materialized group, stored as its sorted element ids.
///
/// Equality, ordering and hashing only look at the element set; ordering is
/// by order first, then lexicographically by ids, which makes every sorted
/// list of subgroups a linear extension of inclusion.
#[derive(Clone, Debug)]
pub struct Subgroup {
    elements: Vec<ElementId>,
    generators: Vec<ElementId>,
}

impl Subgroup {
    pub(crate) fn from_parts(elements: Vec<ElementId>, generators: Vec<ElementId>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        debug_assert_eq!(elements.first(), Some(&IDENTITY));
        Subgroup { elements, generators }
    }

    pub fn trivial() -> Self {
        Subgroup { elements: alloc::vec![IDENTITY], generators: Vec::new() }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[ElementId] {
        &self.elements
    }

    pub fn generators(&self) -> &[ElementId] {
        &self.generators
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn contains(&self, x: ElementId) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        if self.order() > other.order() || !other.order().is_multiple_of(self.order()) {
            return false;
        }
        self.generators.iter().all(|&g| other.contains(g))
    }

    /// Element set of `self ∩ other`.
    pub fn intersection_elements(&self, other: &Subgroup) -> Vec<ElementId> {
        intersect_sorted(&self.elements, &other.elements)
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.elements.hash(state)
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.elements
            .len()
            .cmp(&other.elements.len())
            .then_with(|| self.elements.cmp(&other.elements))
    }
}

pub(crate) fn intersect_sorted(a: &[ElementId], b: &[ElementId]) -> Vec<ElementId> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => i += 1,
            Ordering::Greater => j += 1,
            Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Incremental subgroup closure over a materialized table.
pub(crate) struct Closure<'t> {
    table: &'t ElementTable,
    member: IdSet,
    elements: Vec<ElementId>,
    generators: Vec<ElementId>,
}

impl<'t> Closure<'t> {
    pub(crate) fn new(table: &'t ElementTable) -> Self {
        let mut member = IdSet::new(table.len());
        member.insert(IDENTITY);
        Closure { table, member, elements: alloc::vec![IDENTITY], generators: Vec::new() }
    }

    /// Starts from an existing subgroup without recomputing it.
    pub(crate) fn from_subgroup(table: &'t ElementTable, h: &Subgroup) -> Self {
        Closure {
            table,
            member: IdSet::from_ids(table.len(), h.elements()),
            elements: h.elements().to_vec(),
            generators: h.generators().to_vec(),
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.elements.len()
    }

    /// Adds `g` as a generator unless it is already in the closure.
    pub(crate) fn add(&mut self, g: ElementId) -> bool {
        if self.member.contains(g) {
            return false;
        }
        self.generators.push(g);
        let mut i = 0;
        while i < self.elements.len() {
            let x = self.elements[i];
            for k in 0..self.generators.len() {
                let y = self.table.mul(x, self.generators[k]);
                if self.member.insert(y) {
                    self.elements.push(y);
                }
            }
            i += 1;
        }
        true
    }

    pub(crate) fn generators_slice(&self) -> &[ElementId] {
        &self.generators
    }

    pub(crate) fn finish(mut self) -> Subgroup {
        self.elements.sort_unstable();
        Subgroup::from_parts(self.elements, self.generators)
    }
}

/// The subgroup generated by `gens`.
pub(crate) fn generate(table: &ElementTable, gens: impl IntoIterator<Item = ElementId>) -> Subgroup {
    let mut c = Closure::new(table);
    for g in gens {
        c.add(g);
    }
    c.finish()
}

/// Wraps an element set known to be a subgroup, choosing generators greedily.
pub(crate) fn from_elements(table: &ElementTable, mut elements: Vec<ElementId>) -> Subgroup {
    elements.sort_unstable();
    elements.dedup();
    let mut c = Closure::new(table);
    for &x in &elements {
        if c.len() == elements.len() {
            break;
        }
        c.add(x);
    }
    debug_assert_eq!(c.len(), elements.len(), "element set is not a subgroup");
    Subgroup::from_parts(elements, c.generators)
}
