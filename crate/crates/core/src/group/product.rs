//! Group descriptions and the two product constructions.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::table::IDENTITY;
use super::{Group, Limits};
use crate::perm::Permutation;
use crate::{Error, Result};

/// How a named group is obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Construction {
    /// Generated by explicit permutations of the declared degree.
    Explicit(Vec<Permutation>),
    /// Disjoint-support direct product of two named groups.
    Direct { left: String, right: String },
    /// `N ⋊ A` acting on the elements of `N`: `N` by right multiplication,
    /// each generator of `A` by the automorphism of `N` sending the `j`-th
    /// generator of `N` to `action[i][j]`.
    SemidirectRegular { normal: String, acting: String, action: Vec<Vec<Permutation>> },
}

/// A named group description, as read from a group file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub name: String,
    pub degree: usize,
    pub construction: Construction,
}

impl GroupSpec {
    /// Builds the group, looking up named factors through `resolve`.
    /// The constructed degree must equal the declared one.
    pub fn build<'a>(
        &self,
        resolve: impl Fn(&str) -> Option<&'a Group>,
        limits: Limits,
    ) -> Result<Group> {
        let lookup = |name: &str| {
            resolve(name).ok_or_else(|| Error::InvalidSpec(alloc::format!("unknown group `{name}`")))
        };
        let group = match &self.construction {
            Construction::Explicit(gens) => Group::with_limits(self.degree, gens.clone(), limits)?,
            Construction::Direct { left, right } => direct_product(lookup(left)?, lookup(right)?, limits)?,
            Construction::SemidirectRegular { normal, acting, action } => {
                semidirect_regular(lookup(normal)?, lookup(acting)?, action, limits)?
            }
        };
        if group.degree() != self.degree {
            return Err(Error::InvalidSpec(alloc::format!(
                "group `{}` declares degree {} but its construction has degree {}",
                self.name,
                self.degree,
                group.degree()
            )));
        }
        Ok(group)
    }
}

/// Builds the group described by `spec`; alias of [`GroupSpec::build`].
pub fn build_product<'a>(
    spec: &GroupSpec,
    resolve: impl Fn(&str) -> Option<&'a Group>,
    limits: Limits,
) -> Result<Group> {
    spec.build(resolve, limits)
}

pub fn direct_product(a: &Group, b: &Group, limits: Limits) -> Result<Group> {
    let degree = a.degree() + b.degree();
    let mut gens: Vec<Permutation> = a.generators().iter().map(|g| g.shifted(0, degree)).collect();
    gens.extend(b.generators().iter().map(|g| g.shifted(a.degree(), degree)));
    Group::with_limits(degree, gens, limits)
}

/// `N ⋊ A` realized on the regular domain of `N` (degree `|N|`).
///
/// Each acting generator's images of `N`'s generators are extended to a map
/// on all of `N`; it must be a bijective homomorphism. The resulting order is
/// `|N| * |image of A in Aut(N)|`, read off the constructed group.
pub fn semidirect_regular(
    normal: &Group,
    acting: &Group,
    action: &[Vec<Permutation>],
    limits: Limits,
) -> Result<Group> {
    let t = normal.table().map_err(|_| Error::Capacity {
        what: "normal factor order for a regular semidirect product",
        size: alloc::format!("{}", normal.order()),
        limit: limits.materialize,
    })?;
    if action.len() != acting.generators().len() {
        return Err(Error::InvalidAction(alloc::format!(
            "{} acting generators but {} image lists",
            acting.generators().len(),
            action.len()
        )));
    }
    let n = t.len();
    let ngens = t.generators();
    let mut gens = Vec::new();
    for &x in ngens {
        let images: Vec<u32> = t.ids().map(|i| t.mul(i, x)).collect();
        gens.push(Permutation::from_images_unchecked(images));
    }
    for (a, images) in action.iter().enumerate() {
        if images.len() != ngens.len() {
            return Err(Error::InvalidAction(alloc::format!(
                "acting generator {} gives {} images for {} generators",
                a + 1,
                images.len(),
                ngens.len()
            )));
        }
        let image_ids = images
            .iter()
            .map(|g| {
                if g.degree() != normal.degree() {
                    return Err(Error::DegreeMismatch { expected: normal.degree(), found: g.degree() });
                }
                t.find(g.images()).ok_or_else(|| {
                    Error::InvalidAction(alloc::format!("image {g} is not in the normal factor"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        const UNSET: u32 = u32::MAX;
        let mut phi = vec![UNSET; n];
        phi[IDENTITY as usize] = IDENTITY;
        let mut queue = vec![IDENTITY];
        let mut i = 0;
        while i < queue.len() {
            let y = queue[i];
            for (k, &x) in ngens.iter().enumerate() {
                let z = t.mul(y, x);
                let w = t.mul(phi[y as usize], image_ids[k]);
                if phi[z as usize] == UNSET {
                    phi[z as usize] = w;
                    queue.push(z);
                } else if phi[z as usize] != w {
                    return Err(Error::InvalidAction(alloc::format!(
                        "images for acting generator {} do not extend to a homomorphism",
                        a + 1
                    )));
                }
            }
            i += 1;
        }
        let mut hit = vec![false; n];
        for &v in &phi {
            if hit[v as usize] {
                return Err(Error::InvalidAction(alloc::format!(
                    "images for acting generator {} are not bijective",
                    a + 1
                )));
            }
            hit[v as usize] = true;
        }
        gens.push(Permutation::from_images_unchecked(phi));
    }
    Group::with_limits(n, gens, limits)
}
