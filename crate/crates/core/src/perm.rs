//! Permutations of `{0, .., n-1}` with 1-based cycle notation for display.
//!
//! Products compose left to right: `a.compose(&b)` first applies `a`, then
//! `b`, so `i^(ab) = (i^a)^b`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree as u32).collect() }
    }

    /// Builds a permutation from its image list, rejecting non-bijections.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::InvalidArgument(alloc::format!(
                    "image list is not a bijection on {n} points"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation of the given degree from disjoint or overlapping
    /// cycles over 0-based points; cycles are multiplied left to right.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut p = Permutation::identity(degree);
        for cycle in cycles {
            let c = Self::single_cycle(degree, cycle)?;
            p = p.compose(&c);
        }
        Ok(p)
    }

    fn single_cycle(degree: usize, cycle: &[u32]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for (k, &x) in cycle.iter().enumerate() {
            if x as usize >= degree {
                return Err(Error::InvalidArgument(alloc::format!(
                    "point {} exceeds degree {degree}",
                    x + 1
                )));
            }
            if cycle[..k].contains(&x) {
                return Err(Error::InvalidArgument(alloc::format!(
                    "point {} repeated in a cycle",
                    x + 1
                )));
            }
            images[x as usize] = cycle[(k + 1) % cycle.len()];
        }
        Ok(Permutation { images })
    }

    /// Parses 1-based cycle notation such as `(1 2 3)(4 5)` or `(1,2)`.
    /// `()` and the empty string denote the identity.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let bytes = text.as_bytes();
        let mut p = Permutation::identity(degree);
        let mut i = 0;
        let err = |column: usize, message: &str| Error::Parse { column, message: message.into() };
        while i < bytes.len() {
            match bytes[i] {
                b' ' | b'\t' => i += 1,
                b'(' => {
                    let open = i;
                    i += 1;
                    let mut cycle: Vec<u32> = Vec::new();
                    loop {
                        while i < bytes.len() && matches!(bytes[i], b' ' | b'\t' | b',') {
                            i += 1;
                        }
                        if i >= bytes.len() {
                            return Err(err(open + 1, "unclosed cycle"));
                        }
                        if bytes[i] == b')' {
                            i += 1;
                            break;
                        }
                        let start = i;
                        while i < bytes.len() && bytes[i].is_ascii_digit() {
                            i += 1;
                        }
                        if start == i {
                            return Err(err(i + 1, "expected a point number"));
                        }
                        let value: u64 = text[start..i]
                            .parse()
                            .map_err(|_| err(start + 1, "point number out of range"))?;
                        if value == 0 || value > degree as u64 {
                            return Err(err(
                                start + 1,
                                &alloc::format!("point {value} outside 1..={degree}"),
                            ));
                        }
                        let point = (value - 1) as u32;
                        if cycle.contains(&point) {
                            return Err(err(start + 1, &alloc::format!("point {value} repeated")));
                        }
                        cycle.push(point);
                    }
                    if cycle.len() > 1 {
                        p = p.compose(&Self::single_cycle(degree, &cycle)?);
                    }
                }
                _ => return Err(err(i + 1, "expected '('")),
            }
        }
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation { images: self.images.iter().map(|&x| other.images[x as usize]).collect() }
    }

    pub(crate) fn compose_into(&self, other: &Permutation, out: &mut Permutation) {
        for (o, &x) in out.images.iter_mut().zip(&self.images) {
            *o = other.images[x as usize];
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn first_moved_point(&self) -> Option<u32> {
        self.images.iter().enumerate().find(|(i, &x)| *i as u32 != x).map(|(i, _)| i as u32)
    }

    /// Cycles of length at least two, each starting at its smallest point,
    /// ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = vec![start as u32];
            seen[start] = true;
            let mut x = self.images[start] as usize;
            while x != start {
                seen[x] = true;
                cycle.push(x as u32);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Order of the permutation, `None` if it does not fit in a `u64`.
    pub fn order(&self) -> Option<u64> {
        let mut acc: u64 = 1;
        for c in self.cycles() {
            let len = c.len() as u64;
            let g = crate::arith::gcd_u64(acc, len);
            acc = acc.checked_mul(len / g)?;
        }
        Some(acc)
    }

    /// The permutation acting on `offset..offset + self.degree()` inside a
    /// larger set of `degree` points.
    pub fn shifted(&self, offset: usize, degree: usize) -> Permutation {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[i + offset] = x + offset as u32;
        }
        Permutation { images }
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    pub fn to_cycle_string(&self) -> String {
        alloc::format!("{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, x) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{self}")
    }
}

impl core::ops::Mul for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    #[test]
    fn parse_and_display() {
        let p = Permutation::parse("(1 2 3)(4 5)", 5).unwrap();
        assert_eq!(p.images(), &[1, 2, 0, 4, 3]);
        assert_eq!(p.to_string(), "(1 2 3)(4 5)");
        assert_eq!(Permutation::parse("()", 3).unwrap(), Permutation::identity(3));
        assert_eq!(Permutation::parse("(1,2)", 3).unwrap().to_string(), "(1 2)");
        assert_eq!(p.order(), Some(6));
        // non-disjoint cycles multiply left to right
        let q = Permutation::parse("(1 2)(2 3)", 3).unwrap();
        assert_eq!(q.apply(0), 2);
    }

    #[test]
    fn parse_errors_carry_columns() {
        match Permutation::parse("(1 2", 3) {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 1),
            other => panic!("{other:?}"),
        }
        match Permutation::parse("(1 9)", 3) {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 4),
            other => panic!("{other:?}"),
        }
        assert!(Permutation::parse("(1 1)", 3).is_err());
        assert!(Permutation::parse("1 2", 3).is_err());
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
    }

    fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n as u32).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    proptest! {
        #[test]
        fn group_laws(a in perm_strategy(9), b in perm_strategy(9), c in perm_strategy(9)) {
            prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
            prop_assert!(a.compose(&a.inverse()).is_identity());
            prop_assert_eq!(Permutation::parse(&a.to_string(), 9).unwrap(), a.clone());
            let k = a.order().unwrap();
            prop_assert!(a.pow(k).is_identity());
        }
    }
}
