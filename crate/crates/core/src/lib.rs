//! Exact integer cohomology rings of quaternionic Grassmannians and
//! quaternionic flag varieties, with Pontryagin-class calculus.
//!
//! Rings are modelled over the integers. `A(HGr(r,n))` is
//! `Z[e_1..e_r]/(h_(n-r+1), .., h_n)` written in the Schur basis indexed by the
//! `r x (n-r)` box, and `A(HFlag(1^r; n))` is `Z[y_1..y_r]` modulo a
//! triangular ideal of complete symmetric polynomials.

pub mod error;
pub mod partition;
pub mod poly;
pub mod schur;
pub mod symfun;
pub mod grassring;
pub mod linalg;
pub mod flagring;
pub mod pontcalc;
pub mod localization;
pub mod stability;
pub mod geomaudit;

pub use error::{Error, Result};
pub use partition::Partition;
pub use poly::{Alphabet, SymPoly};
pub use schur::SchurVector;
pub use grassring::GrassSpec;
pub use flagring::FlagSpec;
