//! Deterministic Schreier–Sims with Schreier vectors.
//!
//! Levels hold strong generators fixing all earlier base points; coset
//! representatives are recovered on demand by walking the Schreier tree, so
//! memory stays linear in the degree per level.

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigUint;
use num_traits::One;

use crate::perm::Permutation;

const NONE: u32 = u32::MAX;

#[derive(Clone, Debug)]
struct Level {
    base: u32,
    gens: Vec<Permutation>,
    inverses: Vec<Permutation>,
    orbit: Vec<u32>,
    parent: Vec<u32>,
    label: Vec<u32>,
}

impl Level {
    fn new(degree: usize, base: u32) -> Self {
        let mut level = Level {
            base,
            gens: Vec::new(),
            inverses: Vec::new(),
            orbit: Vec::new(),
            parent: vec![NONE; degree],
            label: vec![NONE; degree],
        };
        level.rebuild();
        level
    }

    fn push_gen(&mut self, g: Permutation) {
        self.inverses.push(g.inverse());
        self.gens.push(g);
        self.rebuild();
    }

    fn rebuild(&mut self) {
        self.parent.iter_mut().for_each(|x| *x = NONE);
        self.orbit.clear();
        self.parent[self.base as usize] = self.base;
        self.orbit.push(self.base);
        let mut i = 0;
        while i < self.orbit.len() {
            let x = self.orbit[i];
            for (k, g) in self.gens.iter().enumerate() {
                let y = g.apply(x);
                if self.parent[y as usize] == NONE {
                    self.parent[y as usize] = x;
                    self.label[y as usize] = k as u32;
                    self.orbit.push(y);
                }
            }
            i += 1;
        }
    }

    #[inline]
    fn in_orbit(&self, point: u32) -> bool {
        self.parent[point as usize] != NONE
    }

    /// `u` with `base^u = point`.
    fn coset_rep(&self, point: u32) -> Permutation {
        let mut labels = Vec::new();
        let mut x = point;
        while x != self.base {
            labels.push(self.label[x as usize]);
            x = self.parent[x as usize];
        }
        let mut u = Permutation::identity(self.parent.len());
        let mut scratch = u.clone();
        for &k in labels.iter().rev() {
            u.compose_into(&self.gens[k as usize], &mut scratch);
            core::mem::swap(&mut u, &mut scratch);
        }
        u
    }

    /// Replaces `h` by `h * u_b^-1` where `b = base^h`; `false` if `b` is
    /// outside the orbit.
    fn sift(&self, h: &mut Permutation, scratch: &mut Permutation) -> bool {
        let mut x = h.apply(self.base);
        if !self.in_orbit(x) {
            return false;
        }
        while x != self.base {
            let k = self.label[x as usize] as usize;
            h.compose_into(&self.inverses[k], scratch);
            core::mem::swap(h, scratch);
            x = self.parent[x as usize];
        }
        true
    }
}

#[derive(Clone, Debug)]
pub(crate) struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub(crate) fn new(degree: usize, generators: &[Permutation]) -> Self {
        let mut gens: Vec<Permutation> = Vec::new();
        for g in generators {
            if !g.is_identity() && !gens.contains(g) {
                gens.push(g.clone());
            }
        }
        let mut base: Vec<u32> = Vec::new();
        for g in &gens {
            if base.iter().all(|&b| g.apply(b) == b) {
                base.push(g.first_moved_point().expect("non-identity"));
            }
        }
        let mut levels: Vec<Level> = Vec::new();
        for (l, &b) in base.iter().enumerate() {
            let mut level = Level::new(degree, b);
            for g in &gens {
                if base[..l].iter().all(|&c| g.apply(c) == c) {
                    level.inverses.push(g.inverse());
                    level.gens.push(g.clone());
                }
            }
            level.rebuild();
            levels.push(level);
        }
        let mut chain = StabChain { degree, levels };
        chain.complete();
        chain
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        let mut scratch = Permutation::identity(self.degree);
        while i >= 0 {
            let lvl = i as usize;
            let found = self.find_missing_generator(lvl, &mut scratch);
            match found {
                None => i -= 1,
                Some((h, j)) => {
                    if j == self.levels.len() {
                        let b = h.first_moved_point().expect("non-identity residue");
                        self.levels.push(Level::new(self.degree, b));
                    }
                    for l in lvl + 1..=j {
                        self.levels[l].push_gen(h.clone());
                    }
                    i = j as isize;
                }
            }
        }
    }

    /// First Schreier generator of level `lvl` that does not sift through
    /// the deeper levels, with the level where sifting failed.
    fn find_missing_generator(
        &self,
        lvl: usize,
        scratch: &mut Permutation,
    ) -> Option<(Permutation, usize)> {
        let level = &self.levels[lvl];
        for &b in &level.orbit {
            let u_b = level.coset_rep(b);
            for s in &level.gens {
                let mut h = u_b.compose(s);
                let ok = level.sift(&mut h, scratch);
                debug_assert!(ok);
                if h.is_identity() {
                    continue;
                }
                let (residue, j) = self.strip_from(h, lvl + 1, scratch);
                if !residue.is_identity() {
                    return Some((residue, j));
                }
            }
        }
        None
    }

    fn strip_from(
        &self,
        mut h: Permutation,
        from: usize,
        scratch: &mut Permutation,
    ) -> (Permutation, usize) {
        for l in from..self.levels.len() {
            if !self.levels[l].sift(&mut h, scratch) {
                return (h, l);
            }
        }
        let n = self.levels.len();
        (h, n)
    }

    pub(crate) fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let mut scratch = Permutation::identity(self.degree);
        let (residue, _) = self.strip_from(g.clone(), 0, &mut scratch);
        residue.is_identity()
    }

    pub(crate) fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub(crate) fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// All group elements, built as products of coset representatives from
    /// the deepest level upwards.
    pub(crate) fn elements(&self) -> Vec<Permutation> {
        let mut current = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let reps: Vec<Permutation> = level.orbit.iter().map(|&b| level.coset_rep(b)).collect();
            let mut next = Vec::with_capacity(current.len() * reps.len());
            for s in &current {
                for u in &reps {
                    next.push(s.compose(u));
                }
            }
            current = next;
        }
        current
    }
}
