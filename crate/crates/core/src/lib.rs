//! Monte-Carlo simulator and decoders for type-based unsourced multiple
//! access (TUMA) over a cell-free massive MIMO uplink.
//!
//! The crate is organised around a simulation pipeline:
//!
//! 1. [`config`] / [`model`] — system parameters, access-point lattice,
//!    large-scale fading and noise bookkeeping;
//! 2. [`source`] — random traffic: which messages are active in each zone,
//!    with which multiplicities, and where the transmitting users sit;
//! 3. [`channel`] — codebook, user channels and the received signal;
//! 4. [`amp`] (with [`prior`], [`bank`], [`denoise`], [`onsager`]) — the
//!    centralized multisource AMP decoder;
//! 5. [`dist`] — the distributed per-access-point variant that exchanges
//!    per-sample likelihoods once, after its local iterations;
//! 6. [`ampda`] — a scalar AMP baseline operating on an effective
//!    single-observation model with residual phase errors;
//! 7. [`harness`] — seeded multi-trial experiment driver with CSV output;
//! 8. [`oracle`] — independent brute-force references (dense Gaussian
//!    densities, grid quadrature, finite differences) used by the test
//!    suite and exposed for ad-hoc checking.
//!
//! All randomness flows through caller-supplied RNGs; the harness derives
//! one independent stream per trial so results are reproducible bit for bit
//! regardless of thread count.

pub mod ampda;
pub mod amp;
pub mod bank;
pub mod channel;
pub mod config;
pub mod denoise;
pub mod dist;
pub mod error;
pub mod fastmath;
pub mod harness;
pub mod model;
pub mod onsager;
pub mod oracle;
pub mod prior;
pub mod source;

pub use amp::{run_centralized, tv_distance, CentralizedOutput};
pub use ampda::{run_ampda, AmpdaOutput, PhaseErrorModel};
pub use channel::Codebook;
pub use config::SystemConfig;
pub use dist::{run_distributed, DistributedOutput};
pub use error::{Error, Result};
pub use harness::{run_experiment, DecoderKind, ExperimentSpec, SweepAxis};
pub use model::Topology;
pub use source::Scenario;

/// Complex sample type used throughout the crate.
pub type Cx = num_complex::Complex64;
