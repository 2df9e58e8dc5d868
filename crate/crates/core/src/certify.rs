//! Distance certification with provenance.
//!
//! Small codes are enumerated exhaustively. Larger ones are handled by the
//! bounded low-weight search, which rules out every weight up to `w_max`;
//! combined with a codeword of weight `w_max + 1` that pins the distance.

use serde::{Deserialize, Serialize};

use crate::code::LinearCode;
use crate::enumerate::{self, SearchOptions};
use crate::error::{Error, Result};
use crate::gf::Felt;
use crate::matgf::Matrix;
use crate::symplectic::{self, Bounded};

/// How a distance value was obtained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "method", rename_all = "snake_case")]
pub enum Provenance {
    /// Every projective class enumerated.
    Exhaustive { classes: u64 },
    /// Every word of weight `≤ w_max` ruled out, or the lightest word found at or below it.
    Bounded { w_max: usize },
    /// Bounded search to `w_max` plus a codeword of weight `w_max + 1`.
    Certificate { w_max: usize },
    /// Taken from a parameter formula, not verified.
    Formula { citation: String },
}

/// A distance together with what is actually known about it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certified {
    /// The exact value, when established.
    pub value: Option<usize>,
    pub lower: usize,
    pub upper: Option<usize>,
    pub provenance: Provenance,
    #[serde(skip)]
    pub codeword: Option<Vec<Felt>>,
}

impl Certified {
    fn exact(value: usize, provenance: Provenance, codeword: Vec<Felt>) -> Certified {
        Certified { value: Some(value), lower: value, upper: Some(value), provenance, codeword: Some(codeword) }
    }

    pub fn formula(value: usize, citation: impl Into<String>) -> Certified {
        Certified {
            value: Some(value),
            lower: 0,
            upper: None,
            provenance: Provenance::Formula { citation: citation.into() },
            codeword: None,
        }
    }

    pub fn is_verified(&self) -> bool {
        !matches!(self.provenance, Provenance::Formula { .. }) && self.value.is_some()
    }
}

/// Limits for [`certify_symplectic`] and [`certify_hamming`].
#[derive(Clone, Copy, Debug)]
pub struct CertifyOptions {
    pub search: SearchOptions,
    /// Largest weight handed to the bounded search. A witness of weight
    /// `w` lowers it to `w − 1`.
    pub w_max: usize,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions { search: SearchOptions::default(), w_max: 3 }
    }
}

#[derive(Clone, Copy)]
enum Kind {
    Symplectic,
    Hamming,
}

/// Certifies the minimum symplectic distance of `code`. `witness`, when
/// given, must be a codeword; its weight is the target for the bounded search.
pub fn certify_symplectic(code: &LinearCode, witness: Option<&[Felt]>, opts: &CertifyOptions) -> Result<Certified> {
    if code.len() % 2 == 1 {
        return Err(Error::OddLength(code.len()));
    }
    certify(code, witness, opts, Kind::Symplectic)
}

/// Certifies the minimum Hamming distance of `code`.
pub fn certify_hamming(code: &LinearCode, witness: Option<&[Felt]>, opts: &CertifyOptions) -> Result<Certified> {
    certify(code, witness, opts, Kind::Hamming)
}

fn certify(code: &LinearCode, witness: Option<&[Felt]>, opts: &CertifyOptions, kind: Kind) -> Result<Certified> {
    if code.dim() == 0 {
        return Err(Error::ZeroCode);
    }
    let classes = enumerate::projective_classes(code.field().order(), code.dim());
    if classes <= u128::from(opts.search.budget) {
        let mw = match kind {
            Kind::Symplectic => symplectic::min_distance(code, &opts.search)?,
            Kind::Hamming => code.min_hamming_distance(&opts.search)?,
        };
        return Ok(Certified::exact(mw.weight, Provenance::Exhaustive { classes: mw.classes as u64 }, mw.codeword));
    }

    let witness_weight = match witness {
        Some(w) => {
            if !code.contains(w)? {
                return Err(Error::CriterionFailed("certificate is not a codeword".into()));
            }
            let wt = match kind {
                Kind::Symplectic => symplectic::weight(w)?,
                Kind::Hamming => enumerate::hamming_weight(w),
            };
            if wt == 0 {
                return Err(Error::CriterionFailed("certificate is the zero word".into()));
            }
            Some(wt)
        }
        None => None,
    };
    let w_max = match witness_weight {
        Some(wt) => (wt - 1).min(opts.w_max.max(1)),
        None => opts.w_max,
    };
    if w_max == 0 {
        let w = witness.expect("w_max is zero only for a weight-1 witness");
        return Ok(Certified::exact(1, Provenance::Certificate { w_max: 0 }, w.to_vec()));
    }
    let bounded = match kind {
        Kind::Symplectic => symplectic::bounded_search(code, w_max, opts.search.workers)?,
        Kind::Hamming => {
            // In the layout (c, 0) symplectic weight is Hamming weight.
            let g = code.generator();
            let padded = LinearCode::from_generator(&g.hconcat(&Matrix::zeros(code.field(), g.rows(), g.cols()))?);
            match symplectic::bounded_search(&padded, w_max, opts.search.workers)? {
                Bounded::Found { weight, codeword } => {
                    Bounded::Found { weight, codeword: codeword[..code.len()].to_vec() }
                }
                other => other,
            }
        }
    };
    Ok(match bounded {
        Bounded::Found { weight, codeword } => {
            Certified::exact(weight, Provenance::Bounded { w_max: weight }, codeword)
        }
        Bounded::NotFound { w_max } => match (witness_weight, witness) {
            (Some(wt), Some(w)) if wt == w_max + 1 => {
                Certified::exact(wt, Provenance::Certificate { w_max }, w.to_vec())
            }
            (wt, w) => Certified {
                value: None,
                lower: w_max + 1,
                upper: wt,
                provenance: Provenance::Bounded { w_max },
                codeword: w.map(<[Felt]>::to_vec),
            },
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{grm_plotkin_codes, hyperoval_self_dual};
    use crate::gf::Field;
    use std::sync::Arc;

    fn small_budget() -> CertifyOptions {
        CertifyOptions { search: SearchOptions::with_budget(10), w_max: 3 }
    }

    #[test]
    fn exhaustive_when_affordable() {
        let c = grm_plotkin_codes(&Arc::new(Field::of_order(3).unwrap()), 2, 1, 1).unwrap();
        let r = certify_symplectic(&c.so, None, &CertifyOptions::default()).unwrap();
        assert_eq!(r.value, Some(6));
        assert!(matches!(r.provenance, Provenance::Exhaustive { classes: 364 }));
    }

    #[test]
    fn certificate_route_matches_exhaustive() {
        let c = hyperoval_self_dual(2).unwrap();
        let w = c.so_witness.clone().unwrap();
        let r = certify_symplectic(&c.so, Some(&w), &small_budget()).unwrap();
        assert_eq!(r.value, Some(4));
        assert_eq!(r.provenance, Provenance::Certificate { w_max: 3 });
        let full = certify_symplectic(&c.so, None, &CertifyOptions::default()).unwrap();
        assert_eq!(full.value, Some(4));
    }

    #[test]
    fn witness_beyond_w_max_gives_bounds() {
        let c = hyperoval_self_dual(2).unwrap();
        let w = c.so_witness.clone().unwrap();
        let r = certify_symplectic(&c.so, Some(&w), &CertifyOptions { w_max: 2, ..small_budget() }).unwrap();
        assert_eq!((r.value, r.lower, r.upper), (None, 3, Some(4)));
        assert_eq!(r.provenance, Provenance::Bounded { w_max: 2 });
    }

    #[test]
    fn bounded_without_witness() {
        let c = hyperoval_self_dual(2).unwrap();
        let r = certify_symplectic(&c.so, None, &small_budget()).unwrap();
        assert_eq!((r.value, r.lower), (None, 4));
        let r = certify_symplectic(&c.so, None, &CertifyOptions { w_max: 5, ..small_budget() }).unwrap();
        assert_eq!(r.value, Some(4));
        assert_eq!(r.provenance, Provenance::Bounded { w_max: 4 });
        assert_eq!(symplectic::weight(r.codeword.as_ref().unwrap()).unwrap(), 4);
    }

    #[test]
    fn hamming_routes_agree() {
        let c = hyperoval_self_dual(2).unwrap().c2;
        let exact = certify_hamming(&c, None, &CertifyOptions::default()).unwrap();
        let bounded = certify_hamming(&c, None, &CertifyOptions { w_max: 4, ..small_budget() }).unwrap();
        assert_eq!(exact.value, Some(4));
        assert_eq!(bounded.value, Some(4));
        assert!(c.contains(bounded.codeword.as_ref().unwrap()).unwrap());
    }

    #[test]
    fn rejects_foreign_witness() {
        let c = hyperoval_self_dual(2).unwrap();
        let mut w = c.so_witness.clone().unwrap();
        let i = w.iter().position(|x| x.is_zero()).unwrap();
        w[i] = Felt::ONE;
        assert!(matches!(certify_symplectic(&c.so, Some(&w), &small_budget()), Err(Error::CriterionFailed(_))));
    }
}
