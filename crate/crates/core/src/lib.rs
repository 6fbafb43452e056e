//! Edit distance functions of the hereditary properties `Forb(C_h^t)`, computed
//! through coloured regularity graphs (CRGs).
//!
//! The crate is organised bottom-up:
//!
//! * [`graphs`]: simple graphs, powers of cycles, induced-subgraph tests,
//!   `G(n, p)` sampling and the cycle-shortening construction.
//! * [`crg`]: coloured regularity graphs, embeddings `H -> K`, components and
//!   CRG-driven graph editing.
//! * [`qp`]: the exact quadratic program `g_K(p)` and the p-core identities.
//! * [`spectrum`]: clique spectra and the grey-clique upper bound `gamma`.
//! * [`editdist`]: brute-force edit distance, Monte Carlo estimation and the
//!   closed-form edit distance functions.
//! * [`search`]: pruned search for CRGs beating `gamma`.
//!
//! All arithmetic on weights and values is exact ([`Rational`]).

pub mod crg;
pub mod editdist;
mod error;
pub mod graphs;
pub mod qp;
pub mod rational;
pub mod search;
pub mod spectrum;

pub use crg::{Crg, EdgeColour, Embedding, VertexColour};
pub use editdist::{EstimateReport, Regime, RegimeParams};
pub use error::{Error, Result};
pub use graphs::{Cycle, Graph};
pub use qp::{DegreeProfile, QpMatrix, QpResult, WeightVector};
pub use rational::Rational;
pub use search::{CandidateReport, WeightedGraph};
pub use spectrum::CliqueSpectrum;
