//! Finite posets and their order complexes.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// A finite poset on `0..len`, stored as strict up-sets.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FinitePoset {
    above: Vec<Vec<u32>>,
}

impl FinitePoset {
    /// From strict up-sets; each list is sorted and must describe a
    /// transitive, irreflexive relation.
    pub fn from_up_sets(mut above: Vec<Vec<u32>>) -> Self {
        for up in &mut above {
            up.sort_unstable();
            up.dedup();
        }
        FinitePoset { above }
    }

    /// Transitive closure of covering pairs `(lower, upper)`; cycles are rejected.
    pub fn from_covers(len: usize, covers: &[(u32, u32)]) -> Result<Self> {
        let mut succ = vec![Vec::new(); len];
        for &(a, b) in covers {
            if a as usize >= len || b as usize >= len {
                return Err(Error::InvalidArgument(alloc::format!(
                    "covering pair ({a}, {b}) outside 0..{len}"
                )));
            }
            succ[a as usize].push(b);
        }
        // topological order by repeated removal of minimal elements
        let mut indeg = vec![0usize; len];
        for s in &succ {
            for &b in s {
                indeg[b as usize] += 1;
            }
        }
        let mut order: Vec<u32> = (0..len as u32).filter(|&i| indeg[i as usize] == 0).collect();
        let mut i = 0;
        while i < order.len() {
            let a = order[i] as usize;
            for &b in &succ[a] {
                indeg[b as usize] -= 1;
                if indeg[b as usize] == 0 {
                    order.push(b);
                }
            }
            i += 1;
        }
        if order.len() != len {
            return Err(Error::InvalidArgument("covering relation has a cycle".into()));
        }
        let mut above: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); len];
        for &a in order.iter().rev() {
            let mut up = BTreeSet::new();
            for &b in &succ[a as usize] {
                up.insert(b);
                up.extend(above[b as usize].iter().copied());
            }
            above[a as usize] = up;
        }
        Ok(FinitePoset { above: above.into_iter().map(|s| s.into_iter().collect()).collect() })
    }

    pub fn len(&self) -> usize {
        self.above.len()
    }

    pub fn is_empty(&self) -> bool {
        self.above.is_empty()
    }

    /// Elements strictly above `i`, sorted.
    pub fn above(&self, i: usize) -> &[u32] {
        &self.above[i]
    }

    pub fn less(&self, a: usize, b: usize) -> bool {
        self.above[a].binary_search(&(b as u32)).is_ok()
    }

    pub fn maximal(&self) -> Vec<u32> {
        (0..self.len() as u32).filter(|&i| self.above[i as usize].is_empty()).collect()
    }

    /// Covering pairs `(a, b)` with nothing strictly between, sorted.
    pub fn covers(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for a in 0..self.len() {
            let mut mine: Vec<u32> = Vec::new();
            // candidates sorted by length of their own up-set, longest first,
            // so every intermediate element is examined before what it lies under
            let mut cands: Vec<u32> = self.above[a].clone();
            cands.sort_by_key(|&b| core::cmp::Reverse(self.above[b as usize].len()));
            for b in cands {
                if mine.iter().all(|&c| !self.less(c as usize, b as usize)) {
                    mine.push(b);
                }
            }
            mine.sort_unstable();
            out.extend(mine.into_iter().map(|b| (a as u32, b)));
        }
        out
    }

    /// Longest chain cardinality minus one; `-1` when empty.
    pub fn height(&self) -> i64 {
        let n = self.len();
        // longest chain starting at i, computed from the top down
        let mut memo: Vec<i64> = vec![-1; n];
        let mut best = -1;
        for i in 0..n {
            best = best.max(self.chain_from(i, &mut memo));
        }
        best
    }

    fn chain_from(&self, i: usize, memo: &mut [i64]) -> i64 {
        if memo[i] >= 0 {
            return memo[i];
        }
        let mut h = 0;
        for &b in &self.above[i] {
            h = h.max(1 + self.chain_from(b as usize, memo));
        }
        memo[i] = h;
        h
    }

    /// Euler characteristic of the order complex, by counting chains with
    /// sign instead of listing them.
    pub fn order_complex_euler(&self) -> i64 {
        // signed[i] = Σ over chains with least element i of (-1)^(length - 1)
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| self.above[i].len());
        let mut signed = vec![0i64; n];
        for i in order {
            signed[i] = 1 - self.above[i].iter().map(|&b| signed[b as usize]).sum::<i64>();
        }
        signed.iter().sum()
    }

    /// The induced subposet on `keep` (sorted, distinct), renumbered in order.
    pub fn induced(&self, keep: &[u32]) -> FinitePoset {
        let mut index = vec![u32::MAX; self.len()];
        for (new, &old) in keep.iter().enumerate() {
            index[old as usize] = new as u32;
        }
        let above = keep
            .iter()
            .map(|&old| {
                self.above[old as usize]
                    .iter()
                    .filter_map(|&b| (index[b as usize] != u32::MAX).then_some(index[b as usize]))
                    .collect()
            })
            .collect();
        FinitePoset::from_up_sets(above)
    }
}

/// A finite simplicial complex; simplices of each dimension are stored
/// flat, sorted, with strictly increasing vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    faces: Vec<Vec<u32>>,
}

impl SimplicialComplex {
    pub fn empty(vertex_count: usize) -> Self {
        SimplicialComplex { vertex_count, faces: Vec::new() }
    }

    /// Closes the given simplices under taking faces.
    pub fn from_simplices<I, S>(vertex_count: usize, simplices: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<[u32]>,
    {
        let mut by_dim: Vec<BTreeSet<Vec<u32>>> = Vec::new();
        for s in simplices {
            let mut v = s.as_ref().to_vec();
            v.sort_unstable();
            if v.is_empty() {
                continue;
            }
            if v.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidArgument("simplex with a repeated vertex".into()));
            }
            if let Some(&bad) = v.iter().find(|&&x| x as usize >= vertex_count) {
                return Err(Error::InvalidArgument(alloc::format!(
                    "vertex {bad} outside 0..{vertex_count}"
                )));
            }
            let d = v.len() - 1;
            if by_dim.len() <= d {
                by_dim.resize(d + 1, BTreeSet::new());
            }
            by_dim[d].insert(v);
        }
        for d in (1..by_dim.len()).rev() {
            let faces: Vec<Vec<u32>> = by_dim[d]
                .iter()
                .flat_map(|s| (0..s.len()).map(move |k| {
                    let mut f = s.clone();
                    f.remove(k);
                    f
                }))
                .collect();
            by_dim[d - 1].extend(faces);
        }
        let faces = by_dim.into_iter().map(|set| set.into_iter().flatten().collect()).collect();
        Ok(SimplicialComplex { vertex_count, faces })
    }

    /// Builds directly from per-dimension flat lists that are already sorted,
    /// strictly increasing and closed under faces.
    pub(crate) fn from_sorted_faces(vertex_count: usize, faces: Vec<Vec<u32>>) -> Self {
        let c = SimplicialComplex { vertex_count, faces };
        debug_assert!(c.check_closed());
        c
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Largest dimension with simplices, `-1` when empty.
    pub fn dimension(&self) -> i64 {
        self.faces.len() as i64 - 1
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn count(&self, d: usize) -> usize {
        self.faces.get(d).map_or(0, |f| f.len() / (d + 1))
    }

    pub fn f_vector(&self) -> Vec<usize> {
        (0..self.faces.len()).map(|d| self.count(d)).collect()
    }

    pub fn simplices(&self, d: usize) -> impl ExactSizeIterator<Item = &[u32]> + '_ {
        let flat: &[u32] = self.faces.get(d).map_or(&[], |f| f.as_slice());
        flat.chunks_exact(d + 1)
    }

    pub fn simplex(&self, d: usize, i: usize) -> &[u32] {
        &self.faces[d][i * (d + 1)..(i + 1) * (d + 1)]
    }

    /// Position of a simplex in the sorted list of its dimension.
    pub fn index_of(&self, s: &[u32]) -> Option<usize> {
        let d = s.len().checked_sub(1)?;
        let n = self.count(d);
        let (mut lo, mut hi) = (0, n);
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.simplex(d, mid).cmp(s) {
                core::cmp::Ordering::Less => lo = mid + 1,
                core::cmp::Ordering::Greater => hi = mid,
                core::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    /// Relabels vertices by `map` (a permutation of `0..vertex_count`).
    pub fn relabeled(&self, map: &[u32]) -> Result<Self> {
        let all = (0..self.faces.len())
            .flat_map(|d| self.simplices(d).map(|s| s.iter().map(|&v| map[v as usize]).collect::<Vec<_>>()))
            .collect::<Vec<_>>();
        Self::from_simplices(self.vertex_count, all)
    }

    pub fn check_closed(&self) -> bool {
        for d in 1..self.faces.len() {
            for s in self.simplices(d) {
                if s.windows(2).any(|w| w[0] >= w[1]) {
                    return false;
                }
                for k in 0..s.len() {
                    let mut f = s.to_vec();
                    f.remove(k);
                    if self.index_of(&f).is_none() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Order complex: one `d`-simplex per chain of `d + 1` elements.
pub fn order_complex(poset: &FinitePoset) -> SimplicialComplex {
    let n = poset.len();
    let mut by_dim: Vec<Vec<Vec<u32>>> = Vec::new();
    let mut chain: Vec<u32> = Vec::new();
    for start in 0..n as u32 {
        chain.push(start);
        extend_chains(poset, &mut chain, &mut by_dim);
        chain.pop();
    }
    let faces = by_dim
        .into_iter()
        .map(|mut list| {
            list.sort_unstable();
            list.into_iter().flatten().collect()
        })
        .collect();
    SimplicialComplex::from_sorted_faces(n, faces)
}

fn extend_chains(poset: &FinitePoset, chain: &mut Vec<u32>, out: &mut Vec<Vec<Vec<u32>>>) {
    let d = chain.len() - 1;
    if out.len() <= d {
        out.push(Vec::new());
    }
    let mut simplex = chain.clone();
    simplex.sort_unstable();
    out[d].push(simplex);
    let top = *chain.last().expect("nonempty chain") as usize;
    for &b in poset.above(top) {
        chain.push(b);
        extend_chains(poset, chain, out);
        chain.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_and_antichain() {
        let chain = FinitePoset::from_covers(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(order_complex(&chain).f_vector(), [3, 3, 1]);
        assert_eq!(chain.height(), 2);
        assert_eq!(chain.covers(), [(0, 1), (1, 2)]);
        assert_eq!(chain.order_complex_euler(), 1);
        let diamond = FinitePoset::from_covers(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(diamond.order_complex_euler(), super::super::euler_characteristic(&order_complex(&diamond)));
        let anti = FinitePoset::from_up_sets(vec![Vec::new(); 5]);
        assert_eq!(order_complex(&anti).f_vector(), [5]);
        assert_eq!(anti.height(), 0);
        let empty = FinitePoset::default();
        assert_eq!(empty.height(), -1);
        assert!(order_complex(&empty).is_empty());
        assert!(FinitePoset::from_covers(2, &[(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn face_closure() {
        let c = SimplicialComplex::from_simplices(4, [[0u32, 1, 2].as_slice(), &[2, 3]]).unwrap();
        assert_eq!(c.f_vector(), [4, 4, 1]);
        assert!(c.check_closed());
        assert_eq!(c.index_of(&[1, 2]), Some(2));
        assert!(SimplicialComplex::from_simplices(2, [[0u32, 0]]).is_err());
        assert!(SimplicialComplex::from_simplices(2, [[0u32, 5]]).is_err());
    }
}
