//! Symplectic codes over finite fields built from the Plotkin sum.

pub mod additive;
pub mod certify;
pub mod code;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod gf;
pub mod grm_table;
pub mod lcdsearch;
pub mod matfile;
pub mod matgf;
pub mod plotkin;
pub mod report;
pub mod rng;
pub mod symplectic;

pub use certify::{Certified, CertifyOptions, Provenance};
pub use code::LinearCode;
pub use enumerate::{Metric, MinWeight, SearchOptions};
pub use error::{Error, Result};
pub use gf::{ExtTower, Felt, Field};
pub use matgf::Matrix;
pub use plotkin::CodeParams;
pub use report::{Analysis, CodeReport};
