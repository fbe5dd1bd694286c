//! The n-rank Taft algebra, its dual, and its Drinfel'd double as exact
//! structure-constant tables over ℚ(ζ_ℓ), together with the canonical
//! quasitriangular/ribbon data and verification suites for all of it.

pub mod algebra;
pub mod elem;
pub mod expo;
pub mod rmat;
pub mod twist;
pub mod verify;

pub use algebra::{
    build_double, build_dual, build_taft, build_taft_with_limit, build_tensor_taft, Double,
    DualTaft, HopfError, HopfOps, Taft, TensorTaft, DEFAULT_DIM_LIMIT,
};
pub use elem::{antipode, coproduct, counit, mul, mul2, mul3, Elem, Elem2, Elem3, Ix};
pub use expo::{expo_add, expo_le, expo_neg, expo_sub, Expo, Params};
pub use rmat::{
    drinfeld_checks, drinfeld_u, drinfeld_u_inv, h_element, integral_checks, integrals,
    quasitriangular_checks, ribbon_checks, ribbon_element, Check, Integrals, UniversalR,
};
pub use twist::{twist_check, TwistReport};
pub use verify::{grouplike_count, verify_hopf_axioms, AxiomCfg, AxiomReport};
