//! Numerical toolkit for slice monogenic and monogenic functions in the
//! complexified Clifford algebra ℂ⊗ℝ_n: kernels, fractional paravector powers,
//! Fourier multipliers, and contour integral representations, together with
//! the verification suites that check them.

// `!(x > 0.0)` is used on purpose so that NaN is rejected
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod clifford;
pub mod contour;
pub mod diffops;
pub mod error;
pub mod fourier;
pub mod kernels;
pub mod quad;
pub mod report;
pub mod sampling;
pub mod slice;
pub mod special;
pub mod verify;

pub use contour::{Contour, IntegralKind};
pub use clifford::{sphere_sample, CliffordElement, ImaginaryUnit, Paravector, MAX_DIM};
pub use error::{Error, Result};
pub use kernels::{Branch, Form, FsqConstants, KernelPoint, Side};
pub use report::VerificationReport;
pub use slice::{CrResidual, SliceStem};
pub use verify::{Suite, VerifyConfig};
