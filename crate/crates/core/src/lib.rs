//! Discrete Wigner functions on a d×d phase space, built from stencils on the
//! doubled 2d×2d space.
//!
//! The library covers the full pipeline: generating operators and
//! displacement algebra ([`qudit`]), the doubled phase space with its
//! Wigner/Weyl transform pair, projector, and symplectic Fourier transform
//! ([`doubled`]), stencil construction/validation/sampling ([`stencil`]),
//! phase-point-operator frames and the DWFs they generate ([`dwf`]),
//! invertible conversion between representations ([`transport`]), and JSON
//! serialization ([`io`]).
//!
//! ```
//! use dwf_core::{builtin_stencil, m_ppo_frame, wig, Dimension, Operator, StencilKind};
//!
//! let d = Dimension::new(3)?;
//! let stencil = builtin_stencil(StencilKind::Reduction, d)?;
//! let frame = m_ppo_frame(&stencil);
//! let grid = wig(&Operator::identity(d), &frame)?;
//! // the grid sums to the trace of the represented operator
//! assert!((grid.sum().re - 3.0).abs() < 1e-12);
//! # Ok::<(), dwf_core::Error>(())
//! ```

pub mod doubled;
pub mod dwf;
pub mod error;
pub mod io;
pub mod qudit;
pub mod stencil;
pub mod transport;

pub use doubled::{
    cross_correlate, doubled_ppo, doubled_weyl, doubled_wigner, project,
    projector_matrix_element, sdft, DoubledFunction, ProjectorMatrixElement,
};
pub use dwf::{
    check_marginalisation, m_ppo_frame, marginals, negativity, validate_frame, weyl, wig,
    FrameReport, FrameSource, Marginals, MubReport, PPOFrame, WignerGrid,
};
pub use error::{Error, Result};
pub use qudit::{
    clock_power, hs_inner, parity, periodic_delta, root_of_unity, shift_power, whdo, Dimension,
    Modulus, Operator, PhasePoint,
};
pub use stencil::{
    boxcar, builtin_stencil, dirichlet_kernel, sample_valid_stencil, stencils_equivalent,
    validate_stencil, validate_stencil_fourier, CriterionDomain, Stencil, StencilKind,
    ValidityReport,
};
pub use transport::{
    apply_function_map, apply_operator_map, build_function_map, FunctionMap, OperatorMap,
};
