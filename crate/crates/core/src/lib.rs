//! Fourier analysis of vector-valued signals on finite graphs.
//!
//! Signals take values in a normed space `X` (finite-dimensional `ℓ^p` or
//! sampled continuous functions). The crate provides graph matrices and
//! their eigenbases, the graph Fourier transform, mixed norms and
//! coherences, operator norms with extremal signals, uncertainty bounds,
//! and the convolution and translation operators.
//!
//! Every routine is generic over the real scalar type; the `*64` and `*32`
//! aliases fix it.

pub mod basis;
pub mod error;
pub mod exponent;
pub mod graph;
pub mod io;
pub mod matrix;
pub mod norms;
pub mod operators;
pub mod scalar;
pub mod transform;
pub mod valuespace;

pub use basis::{dft_basis, eigenbasis, OrthonormalBasis};
pub use error::{Error, Result};
pub use exponent::Exponent;
pub use graph::{standard_graph, Graph, GraphFamily};
pub use matrix::DenseMatrix;
pub use norms::{
    coherence, coherence_bounds_check, empirical_opnorm, fourier_opnorm, holder_embedding_check, mixed_norm,
    sharpness_witness, signal_norm, uncertainty_bound, uncertainty_ratio, NormReport, OpnormFormula,
    UncertaintyVariant,
};
pub use operators::{
    analyze_translation, convolution_identity, convolve, delta, kernel_range_projectors, translate,
    translation_adjoint, translation_bound, translation_inverse, translation_opnorm_hilbert, young_bound,
    ScalarSignal, TranslationAnalysis, TranslationInverse,
};
pub use scalar::{sgn, Real, C};
pub use transform::{gft, igft, parseval_check, plancherel_ratio, Signal};
pub use valuespace::{ScalarField, SpaceKind, ValueElement, ValueSpace};

pub type Basis64 = OrthonormalBasis<f64>;
pub type Basis32 = OrthonormalBasis<f32>;
pub type Matrix64 = DenseMatrix<f64>;
pub type Matrix32 = DenseMatrix<f32>;
pub type Signal64 = Signal<f64>;
pub type Signal32 = Signal<f32>;
pub type Space64 = ValueSpace<f64>;
pub type Space32 = ValueSpace<f32>;
pub type ScalarSignal64 = ScalarSignal<f64>;
pub type ScalarSignal32 = ScalarSignal<f32>;
