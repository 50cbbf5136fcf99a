//! The `PGL(2,F)` side: valuations, the affine Weyl group and its length
//! series, Haar normalizations, free lattices, formal and von Neumann
//! dimensions, and the Jacquet-Langlands degree table.

mod jl;
mod measure;
mod valuation;
mod weyl;

pub use jl::{jl_formal_dim, JLClass};
pub use measure::{
    depth_zero_formal_dim, haar_volumes, ihara_lattice, lattice_covolume, steinberg_degree_product,
    steinberg_formal_dim, vn_dimension_padic, HaarNormalization, HaarVolumes, PadicLattice,
    RepKind,
};
pub use valuation::{
    extension_level_arithmetic, padic_abs, padic_valuation, quadratic_extension_count,
    ultrametric_check, LevelArithmetic, Valuation,
};
pub use weyl::{weyl_closed_form, weyl_enumerate, weyl_partial_sum, ReducedWeylWord, WeylLetter};
