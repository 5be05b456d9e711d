//! Low-rank background and overlaid-foreground mask recovery for video.
//!
//! A clip `X` (pixels × frames) is modeled as `X = (1-W)∘L + W∘S`: every pixel
//! shows either the low-rank background `L` or the foreground `S`, selected by
//! the mask `W`. This crate provides
//!
//! * [`mrpca`]: masked RPCA, recovering `L` and a relaxed mask `W ∈ [0,1]`;
//! * [`emrpca`]: the extended model with a TV-regularized mask and a sparse
//!   term `E` that absorbs dynamic background;
//! * [`rpca`]: principal component pursuit with thresholded masks, as a
//!   baseline;
//! * [`metrics`], [`data`] and the shared [`prox`] kernels.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod data;
pub mod emrpca;
pub mod error;
pub mod metrics;
pub mod mrpca;
pub mod optimality;
pub mod prox;
pub mod rpca;
pub mod tensor;
pub mod trace;

pub use error::{Error, Result};
pub use tensor::{Dims, GradientField3D, Matrix, Tensor3D};
pub use trace::{IterationTrace, TraceRecord};
