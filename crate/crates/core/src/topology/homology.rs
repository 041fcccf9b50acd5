use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use super::complex::SimplicialComplex;
use super::matrix::IntegerMatrix;
use super::sparse::sparse_snf;

/// Reduced homology in one degree: free rank and torsion coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HomologyDegree {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyDegree {
    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

/// Reduced integral homology of a complex, degrees `0..=dim`.
///
/// Comparison ignores trailing zero degrees. The reduced homology of the
/// empty complex lives in degree `-1`, which is not represented; such
/// results carry `empty_complex = true` instead.
#[derive(Clone, Debug, Default)]
pub struct HomologyGroups {
    pub degrees: Vec<HomologyDegree>,
    pub empty_complex: bool,
}

impl HomologyGroups {
    pub fn degree(&self, d: usize) -> HomologyDegree {
        self.degrees.get(d).cloned().unwrap_or_default()
    }

    pub fn rank(&self, d: usize) -> usize {
        self.degrees.get(d).map_or(0, |h| h.rank)
    }

    /// True when every degree vanishes.
    pub fn is_zero(&self) -> bool {
        self.degrees.iter().all(HomologyDegree::is_zero)
    }

    /// Compact form such as `H0=Z^4` or `H1=Z/2;H2=Z`; `0` when everything
    /// vanishes and `empty` for the empty complex.
    pub fn summary(&self) -> alloc::string::String {
        use core::fmt::Write;
        if self.empty_complex {
            return "empty".into();
        }
        let mut out = alloc::string::String::new();
        for (d, h) in self.degrees.iter().enumerate().filter(|(_, h)| !h.is_zero()) {
            if !out.is_empty() {
                out.push(';');
            }
            let mut parts: Vec<alloc::string::String> = Vec::new();
            match h.rank {
                0 => {}
                1 => parts.push("Z".into()),
                r => parts.push(alloc::format!("Z^{r}")),
            }
            parts.extend(h.torsion.iter().map(|t| alloc::format!("Z/{t}")));
            let _ = write!(out, "H{d}={}", parts.join("+"));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    fn trimmed(&self) -> &[HomologyDegree] {
        let end = self.degrees.iter().rposition(|h| !h.is_zero()).map_or(0, |i| i + 1);
        &self.degrees[..end]
    }
}

impl PartialEq for HomologyGroups {
    fn eq(&self, other: &Self) -> bool {
        self.empty_complex == other.empty_complex && self.trimmed() == other.trimmed()
    }
}

impl Eq for HomologyGroups {}

impl fmt::Display for HomologyGroups {
    /// One `H~<d> rank <r> torsion <t1,t2,...>` line per degree, `-` for no torsion.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (d, h) in self.degrees.iter().enumerate() {
            write!(f, "H~{d} rank {} torsion ", h.rank)?;
            if h.torsion.is_empty() {
                f.write_str("-")?;
            }
            for (k, t) in h.torsion.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{t}")?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

/// Rows of `∂_d` indexed by `d`-simplices, as sorted `(face, sign)` lists.
fn boundary_rows(c: &SimplicialComplex, d: usize) -> Vec<Vec<(u32, i64)>> {
    c.simplices(d)
        .map(|s| {
            let mut row: Vec<(u32, i64)> = (0..s.len())
                .map(|k| {
                    let mut face = s.to_vec();
                    face.remove(k);
                    let idx = c.index_of(&face).expect("complex is closed under faces");
                    (idx as u32, if k % 2 == 0 { 1 } else { -1 })
                })
                .collect();
            row.sort_unstable_by_key(|e| e.0);
            row
        })
        .collect()
}

/// The boundary map `C_d → C_{d-1}` with chain bases in sorted simplex
/// order and sign `(-1)^k` for dropping the `k`-th vertex. For `d = 0` this
/// is the augmentation to `Z`.
pub fn boundary_matrix(c: &SimplicialComplex, d: usize) -> IntegerMatrix {
    let cols = c.count(d);
    if d == 0 {
        let mut m = IntegerMatrix::zero(1, cols);
        for j in 0..cols {
            m.set(0, j, BigInt::from(1));
        }
        return m;
    }
    let mut m = IntegerMatrix::zero(c.count(d - 1), cols);
    for (j, row) in boundary_rows(c, d).into_iter().enumerate() {
        for (i, v) in row {
            m.set(i as usize, j, BigInt::from(v));
        }
    }
    m
}

pub fn reduced_homology(c: &SimplicialComplex) -> HomologyGroups {
    if c.is_empty() {
        return HomologyGroups { degrees: Vec::new(), empty_complex: true };
    }
    let top = c.dimension() as usize;
    // ranks[d] and torsion[d] describe ∂_d; ∂_0 is the augmentation of rank one
    let mut ranks = alloc::vec![1usize];
    let mut torsion: Vec<Vec<BigInt>> = alloc::vec![Vec::new()];
    for d in 1..=top {
        let snf = sparse_snf(c.count(d - 1), boundary_rows(c, d));
        ranks.push(snf.rank);
        torsion.push(snf.torsion);
    }
    ranks.push(0);
    torsion.push(Vec::new());
    let degrees = (0..=top)
        .map(|d| HomologyDegree {
            rank: c.count(d) - ranks[d] - ranks[d + 1],
            torsion: core::mem::take(&mut torsion[d + 1]),
        })
        .collect();
    HomologyGroups { degrees, empty_complex: false }
}

/// Alternating sum of the f-vector; `0` for the empty complex.
pub fn euler_characteristic(c: &SimplicialComplex) -> i64 {
    c.f_vector().iter().enumerate().map(|(d, &n)| if d % 2 == 0 { n as i64 } else { -(n as i64) }).sum()
}

/// Nonempty with vanishing reduced homology.
pub fn is_acyclic(c: &SimplicialComplex) -> bool {
    !c.is_empty() && reduced_homology(c).is_zero()
}
