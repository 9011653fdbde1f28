//! Regression by binary classification with designed and learned label encodings.
//!
//! A regression target is scaled to `[1, N]`, quantized to one of `N` levels,
//! and represented as an `M`-bit code. A bank of binary classifiers predicts
//! the code; a decoder turns the predicted code into a distribution over
//! levels and takes its expected value as the real-valued prediction.
//!
//! The crate covers the full pipeline at desk scale:
//!
//! - [`codebook`]: binary code matrices (unary, Johnson, Hadamard, random),
//!   transition/Hamming metrics, and a line-oriented file format.
//! - [`analytic`]: a Gaussian per-transition classifier error model and
//!   expected-correlation decoding, for estimating the regression error of a
//!   candidate code without training anything.
//! - [`anneal`]: simulated-annealing code design driven by the analytic model,
//!   with a random-flip and an error-based move function.
//! - [`autoenc`]: autoencoder code design from a label-distance similarity
//!   matrix, binarized to an equal split of zeros and ones.
//! - [`tensornet`]: a minimal dense-layer network with reverse-mode gradients
//!   and a plain gradient-descent optimizer; every loss in the crate is
//!   checked against central finite differences.
//! - [`rlel`]: the learned-encoding regression head (code layer, trainable
//!   decoding matrix, softmax-expectation prediction), its regularized loss,
//!   and diagnostics over the learned encoding.
//! - [`baselines`]: direct L1/L2 regression, multiclass classification with
//!   soft targets, and fixed-code training, all sharing the same backbone.
//! - [`harness`]: synthetic regression tasks, experiment runs, and sweep
//!   drivers with reproducible CSV reports.
//! - [`config`]: the flat `[section] key = value` config format used by the
//!   CLI, with strict unknown-key rejection and full-config echoes.
//!
//! Everything is deterministic given a seed: runs derive per-purpose RNG
//! streams from the configured seed and never share mutable state.

pub mod analytic;
pub mod anneal;
pub mod autoenc;
pub mod baselines;
pub mod codebook;
pub mod config;
pub mod error;
pub mod gradcheck;
pub mod harness;
pub mod rlel;
pub mod rng;
pub mod tensornet;

pub use error::{Error, Result};
