//! Generalized Reed-Muller codes over Galois rings.
//!
//! ```
//! use std::sync::Arc;
//! use grm_core::galois_ring::build_tower;
//! use grm_core::grm::standard_genmat;
//! use grm_core::oracle::{brute_min_weight, DEFAULT_GUARD};
//! use grm_core::ring_base::RingParams;
//!
//! let tower = Arc::new(build_tower(RingParams::new(2, 2, 1)?, 3)?);
//! let code = standard_genmat(&tower, 1)?;
//! assert_eq!(code.rank()?, 4);
//! let report = brute_min_weight(tower.base(), &code.punctured(), DEFAULT_GUARD)?;
//! assert_eq!(report.min_weight, Some(3));
//! # Ok::<(), grm_core::error::GrmError>(())
//! ```

pub mod cyclic;
pub mod error;
pub mod galois_ring;
pub mod grm;
pub mod oracle;
pub mod ring_base;
pub mod ring_linalg;
pub mod trace_codes;
pub mod verify;
