//! Exhaustive zero-sum computations on dihedral groups and small finite
//! groups given by Cayley tables.
//!
//! * [`group`]: group models, element ids and subset masks.
//! * [`product`]: permutation-product sets with witness orderings.
//! * [`residue`]: sumsets, doubling and matched pairs in `Z_n`.
//! * [`harborth`]: the Harborth constant, by search and in closed form.
//! * [`lemma`]: exhaustive checks of the product-set size bounds for
//!   reflection subsets, with equality-case classification.

pub mod error;
pub mod group;
pub mod harborth;
pub mod lemma;
pub mod product;
pub mod residue;
pub mod scan;
pub mod symmetry;

pub use error::{Error, Result};
pub use group::{dihedral_group, DihedralElement, ElementId, GroupKind, GroupModel, SubsetMask};
pub use harborth::{
    admits_one_product, extremal_set, formula_certificate, harborth_bruteforce, harborth_formula,
    verify_remark_odd, InvariantCertificate, SearchOptions, UpperEvidence,
};
pub use product::{product_set, product_set_naive, ProductSetResult};
pub use residue::{double_set, matched_pairs, sumset, MatchedPairReport, ResidueSet};
pub use scan::Budget;
pub use symmetry::dihedral_automorphism_images;

/// Version string embedded in reports and cache keys.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
