//! Boolean function analysis on bit-packed truth tables: Walsh-Hadamard
//! spectra, bentness tests, the Rothaus and Hodzic secondary
//! constructions with their symmetric variants, machine verification of
//! the associated bentness theorems, and an iterative generator of bent
//! functions on n + 4k variables.

pub mod anf;
pub mod constructions;
pub mod error;
pub mod function;
pub mod iteration;
pub mod spectral;
pub mod theorems;

pub use anf::AlgebraicNormalForm;
pub use constructions::{
    affine_shift_triple, hodzic, inner_product_quadratic, linear_function, mm_bent, random_mm_bent,
    rothaus, rothaus_all_variants, BentTriple, HodzicVariant, RothausVariant,
};
pub use error::{Error, Result};
pub use function::{index_of_bits, BooleanFunction, MAX_VARIABLES};
pub use iteration::{run_iteration, IterationState};
pub use spectral::{
    check_bent, composition_wht, fwht_in_place, is_bent, weight_from_spectrum, wht_fast,
    wht_naive, BentCheck, WalshSpectrum,
};
pub use theorems::{
    check_theorem1_instance, check_theorem2_instance, first_level_sum, hodzic_level_sum,
    second_level_obstruction, verify_second_level, verify_theorem1, verify_theorem2,
    Counterexample, EnumerationMode, HodzicLevelSum, SecondLevelObstruction, SweepOptions,
    VerificationReport,
};
