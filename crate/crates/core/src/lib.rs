//! Multimodal flow matching for 3D molecules and periodic crystals.
//!
//! Five modalities — atom types, Cartesian coordinates, fractional
//! coordinates, lattice lengths, lattice angles — are modeled jointly by a
//! transformer denoiser trained with endpoint flow matching. The crate covers
//! the full desk-scale pipeline: the unified data model and crystallographic
//! geometry, flow interpolants and losses, the trunk-based denoiser with
//! auxiliary prediction heads, an optional rotation-equivariant variant,
//! the stochastic multimodal sampler, predictive finetuning, generation
//! metrics, and dataset/checkpoint formats.

pub mod equivariant;
pub mod finetune;
pub mod flow;
pub mod geom;
pub mod graph;
pub mod io;
pub mod lattice;
pub mod metrics;
pub mod model;
pub mod params;
pub mod rng;
pub mod sampler;
pub mod system;
pub mod tensor;
pub mod train;

pub use flow::{FlowState, LossWeights};
pub use lattice::Lattice;
pub use model::ModelConfig;
pub use params::ParameterStore;
pub use sampler::{SampleRequest, SampleSchedule};
pub use system::{AtomicSystem, DomainClass, LabelSet};
