//! Code families and the Plotkin-sum constructions built on them.

pub mod builders;
pub mod grm;
pub mod grs;
pub mod hamming;
pub mod hyperoval;

pub use builders::{
    grm_plotkin_codes, hyperoval_mds_codes, hyperoval_self_dual, mds_self_dual, nested_mds_codes, symplectic_mds_codes,
    HyperovalSearch, Parity, PlotkinConstruction,
};
pub use grm::Grm;
pub use grs::{extended_rs, grs_code, grs_min_weight_word, nested_mds_pair, GrsSpec};
pub use hamming::{extend_by_parity, hamming_code};
pub use hyperoval::{hyperoval_code, hyperoval_generator};
