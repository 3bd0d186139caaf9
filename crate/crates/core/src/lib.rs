//! Branched coverings of the sphere as permutation constellations.
//!
//! The crate classifies branching data by whether every covering subject to
//! them has solvable monodromy, builds Galois closures, exemplar coverings and
//! unbranched amplifications, and inverts polynomials in radicals through
//! their decomposition into power, Chebyshev and low-degree factors.

pub mod amplify;
pub mod classify;
pub mod covering;
pub mod decompose;
pub mod error;
pub mod exemplars;
pub mod galois;
pub mod numeric;
pub mod perm;
pub mod poly;
pub mod radicals;

pub use amplify::{amplify, cyclic_unbranched_extension, schreier_data, AmplifyReport, SchreierData};
pub use classify::{
    affine_embedding, classify_datum, classify_orders, enumerate_galois_data, ritt_equation_solutions, AffineEmbedding,
    DatumClass, FamilyTag, GaloisDatum, GenusBound, RittOrder,
};
pub use covering::{
    branching_datum, galois_rh_genus, genus_rh, is_subject_to, BranchingDatum, Constellation, DatumEntry, Passport,
    PassportEntry, Slot,
};
pub use decompose::{
    classify_factor, critical_datum, decompose_poly, ritt_verdict, FactorClass, FactorTag, FactorWitness, RittVerdict,
};
pub use error::{Error, Result};
pub use exemplars::{exemplar, exemplar_with_cap, ExemplarSpec};
pub use galois::{dominates, fibered_product, galois_closure, is_galois, monodromy_group, FiberedComponent};
pub use perm::{block_systems, generate_group, is_solvable, GroupTable, Partition, Permutation, DEFAULT_CAP};
pub use poly::ExactPolynomial;
pub use radicals::{
    build_pencil, chebyshev, invert_chebyshev, invert_power, solve_cubic, solve_quartic_pencil, split_singular_conic,
    Conic, RadicalExpr, Tracked,
};
