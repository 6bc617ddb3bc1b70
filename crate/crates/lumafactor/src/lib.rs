//! Desk-scale prior-guided inverse rendering.
//!
//! Given posed images of an object with known geometry, `lumafactor` recovers
//! the albedo texture, the roughness/metallic (ORM) texture, and the HDR
//! environment illumination by differentiable Monte Carlo rendering, optionally
//! guided by a small conditional diffusion prior over material images that is
//! distilled into the optimization through an SDS+ loss. Recovered assets can
//! be relit under novel illumination and scored against ground truth.
//!
//! The crate is organized around the pipeline stages:
//!
//! * [`brdf`] — the simplified Disney/Cook-Torrance material model, its
//!   importance sampler, and analytic parameter derivatives.
//! * [`scene`] — meshes with BVH ray intersection, textures, environment maps
//!   with luminance-weighted importance sampling, cameras, and asset I/O
//!   (PFM, PNG, OBJ, JSON manifests).
//! * [`render`] — the deterministic seeded direct-illumination renderer, its
//!   auxiliary albedo/ORM buffers, and the adjoint passes that scatter
//!   image-space gradients back into texels.
//! * [`prior`] — the toy conditional v-prediction diffusion model: noise
//!   schedule, fixed linear latent codec, a small convolutional denoiser,
//!   training, classifier-free guidance and DDIM sampling.
//! * [`sds`] — the SDS+ distillation loss and its decay schedule.
//! * [`invrender`] — the outer optimization loop fitting textures and
//!   lighting to posed images, plus relighting.
//! * [`datagen`] — procedural objects, textures, illuminants and camera
//!   trajectories for building synthetic triplet datasets.
//! * [`metrics`] — PSNR/SSIM/L1, channel rescaling, and the evaluation
//!   protocol.
//!
//! The mdbook under `book/` walks through the same concepts with runnable
//! snippets; those snippets are compiled as doc-tests via [`guide`].

pub mod brdf;
pub mod buffer;
pub mod datagen;
pub mod invrender;
pub mod math;
pub mod metrics;
pub mod optim;
pub mod prior;
pub mod render;
pub mod rng;
pub mod scene;
pub mod sds;
pub mod util;

mod error;
mod guide;

pub use error::{Error, Result};
