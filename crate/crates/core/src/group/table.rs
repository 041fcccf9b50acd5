//! Materialized element tables: every element of a small group interned to
//! a dense integer id.
//!
//! Elements are stored sorted lexicographically by image list, so ids are
//! deterministic and the identity always has id 0.

use alloc::vec;
use alloc::vec::Vec;

use crate::perm::Permutation;

/// Dense identifier of an element inside one materialized group.
pub type ElementId = u32;

pub const IDENTITY: ElementId = 0;

#[derive(Clone, Debug)]
pub struct ElementTable {
    degree: usize,
    flat: Vec<u32>,
    inverse: Vec<ElementId>,
    orders: Vec<u32>,
    generators: Vec<ElementId>,
    conj: Vec<Vec<ElementId>>,
}

impl ElementTable {
    pub(crate) fn new(degree: usize, mut elements: Vec<Permutation>, gens: &[Permutation]) -> Self {
        elements.sort_unstable();
        let mut flat = Vec::with_capacity(elements.len() * degree);
        for e in &elements {
            flat.extend_from_slice(e.images());
        }
        let mut table = ElementTable {
            degree,
            flat,
            inverse: Vec::new(),
            orders: Vec::new(),
            generators: Vec::new(),
            conj: Vec::new(),
        };
        table.inverse = elements
            .iter()
            .map(|e| table.find(e.inverse().images()).expect("closed under inverses"))
            .collect();
        table.orders = elements.iter().map(|e| e.order().expect("small order") as u32).collect();
        table.generators = gens
            .iter()
            .map(|g| table.find(g.images()).expect("generator is an element"))
            .collect();
        let conj: Vec<Vec<ElementId>> = table
            .generators
            .iter()
            .map(|&g| (0..table.len() as ElementId).map(|x| table.conj(x, g)).collect())
            .collect();
        table.conj = conj;
        table
    }

    pub fn len(&self) -> usize {
        self.flat.len() / self.degree
    }

    pub fn is_empty(&self) -> bool {
        self.flat.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    #[inline]
    pub fn images(&self, id: ElementId) -> &[u32] {
        let d = self.degree;
        &self.flat[id as usize * d..(id as usize + 1) * d]
    }

    pub fn permutation(&self, id: ElementId) -> Permutation {
        Permutation::from_images_unchecked(self.images(id).to_vec())
    }

    /// Id of the element with the given image list.
    pub fn find(&self, images: &[u32]) -> Option<ElementId> {
        if images.len() != self.degree {
            return None;
        }
        let (mut lo, mut hi) = (0usize, self.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.images(mid as ElementId).cmp(images) {
                core::cmp::Ordering::Less => lo = mid + 1,
                core::cmp::Ordering::Greater => hi = mid,
                core::cmp::Ordering::Equal => return Some(mid as ElementId),
            }
        }
        None
    }

    /// `a` followed by `b`.
    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        let pa = self.images(a);
        let pb = self.images(b);
        const STACK: usize = 48;
        if self.degree <= STACK {
            let mut buf = [0u32; STACK];
            for (o, &x) in buf.iter_mut().zip(pa) {
                *o = pb[x as usize];
            }
            self.find(&buf[..self.degree]).expect("closed under products")
        } else {
            let buf: Vec<u32> = pa.iter().map(|&x| pb[x as usize]).collect();
            self.find(&buf).expect("closed under products")
        }
    }

    #[inline]
    pub fn inv(&self, a: ElementId) -> ElementId {
        self.inverse[a as usize]
    }

    /// Element order.
    #[inline]
    pub fn order_of(&self, a: ElementId) -> u32 {
        self.orders[a as usize]
    }

    /// `g^-1 x g`.
    pub fn conj(&self, x: ElementId, g: ElementId) -> ElementId {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn pow(&self, x: ElementId, e: u64) -> ElementId {
        let mut acc = IDENTITY;
        for _ in 0..e {
            acc = self.mul(acc, x);
        }
        acc
    }

    pub fn commute(&self, a: ElementId, b: ElementId) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    /// Ids of the ambient generators, in generator order.
    pub fn generators(&self) -> &[ElementId] {
        &self.generators
    }

    /// Conjugation by the `k`-th ambient generator, precomputed.
    #[inline]
    pub fn conj_by_generator(&self, k: usize, x: ElementId) -> ElementId {
        self.conj[k][x as usize]
    }

    pub fn ids(&self) -> core::ops::Range<ElementId> {
        0..self.len() as ElementId
    }
}

/// Fixed-size membership bitset over the ids of one table.
#[derive(Clone, Debug)]
pub(crate) struct IdSet {
    words: Vec<u64>,
}

impl IdSet {
    pub(crate) fn new(size: usize) -> Self {
        IdSet { words: vec![0; size.div_ceil(64)] }
    }

    pub(crate) fn from_ids(size: usize, ids: &[ElementId]) -> Self {
        let mut s = Self::new(size);
        for &x in ids {
            s.insert(x);
        }
        s
    }

    #[inline]
    pub(crate) fn contains(&self, x: ElementId) -> bool {
        self.words[x as usize >> 6] >> (x & 63) & 1 == 1
    }

    /// Returns `true` if `x` was newly inserted.
    #[inline]
    pub(crate) fn insert(&mut self, x: ElementId) -> bool {
        let w = &mut self.words[x as usize >> 6];
        let bit = 1u64 << (x & 63);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }
}
