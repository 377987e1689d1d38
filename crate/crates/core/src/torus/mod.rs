//! Quantization of the torus moduli space at level `r`: theta basis, curve operators,
//! the noncommutative torus, the Goldman bracket, and convention calibration.

pub mod calibration;
pub mod goldman;
pub mod nc;
pub mod operator;
pub mod theta;

pub use calibration::{
    calibrate_conventions, calibrate_conventions_with, default_pairs, CalibrationBounds, CalibrationOutcome,
    CalibrationRecord, IDENTITY_TOL, KAPPA_LEVEL,
};
pub use goldman::{
    correspondence_check, correspondence_error, fit_bracket_scale, goldman_torus, scaled_commutator, DecayTable,
    FormalTraceSum,
};
pub use nc::{nc_mul, phi, phi_product_to_sum_holds, phi_product_to_sum_residual, NCTorusElement};
pub use operator::{
    chebyshev_check, chebyshev_matrix, commutator_identity_check, cs_matrix, cs_operator, product_to_sum_check,
    CurveObservable, Level,
};
pub use theta::{theta_eval, zeta_eval, zeta_table, IM_WINDOW};
