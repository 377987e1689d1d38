//! Knot and link diagrams, the Kauffman bracket, and the Jones polynomial.

pub mod braid;
pub mod bracket;
pub mod jones;
pub mod pd;

pub use braid::{braid_closure_pd, BraidWord, Letter};
pub use bracket::{kauffman_bracket, kauffman_bracket_memo, loop_value, MAX_CROSSINGS};
pub use jones::{jones, normalize_bracket, skein_residual, skein_triple, skein_verify, writhe};
pub use pd::{parse_pd, PDCode};
