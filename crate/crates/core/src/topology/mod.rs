//! Order complexes, boundary matrices, Smith normal form and homology.

mod complex;
mod homology;
mod matrix;
mod sparse;

pub use complex::{order_complex, FinitePoset, SimplicialComplex};
pub use homology::{boundary_matrix, euler_characteristic, is_acyclic, reduced_homology, HomologyDegree, HomologyGroups};
pub use matrix::{smith_normal_form, smith_normal_form_with_transforms, IntegerMatrix, SmithNormalForm};

use crate::poset::SubgroupPoset;

/// Order complex of a subgroup poset.
pub fn poset_complex(x: &SubgroupPoset) -> SimplicialComplex {
    order_complex(x.relation())
}
