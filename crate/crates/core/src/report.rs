//! Machine-readable code reports.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::certify::{certify_hamming, certify_symplectic, Certified, CertifyOptions, Provenance};
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf::Felt;
use crate::plotkin::CodeParams;
use crate::symplectic;

pub const SCHEMA_VERSION: u32 = 1;

/// Duality and optimality flags; `None` where a flag does not apply (odd
/// length for symplectic properties) or the distance is unknown.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub so: Option<bool>,
    pub dc: Option<bool>,
    pub self_dual: Option<bool>,
    pub lcd: Option<bool>,
    pub hamming_mds: Option<bool>,
    pub symplectic_mds: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeReport {
    pub schema: u32,
    pub construction: String,
    pub params: BTreeMap<String, String>,
    pub field: String,
    pub n: usize,
    pub k: usize,
    /// Predicted symplectic parameters.
    pub predicted: Option<CodeParams>,
    /// Predicted Hamming parameters.
    pub predicted_hamming: Option<CodeParams>,
    pub d_hamming: Option<Certified>,
    pub d_symplectic: Option<Certified>,
    pub flags: Flags,
    pub singleton_defect_hamming: Option<i64>,
    pub singleton_defect_symplectic: Option<i64>,
    pub seed: Option<u64>,
    pub budget: u64,
    pub w_max: usize,
    pub notes: Vec<String>,
}

/// How one distance is certified by [`CodeReport::analyze`].
#[derive(Clone, Copy, Debug, Default)]
pub struct DistanceRequest<'a> {
    pub skip: bool,
    /// A codeword expected to have minimum weight.
    pub witness: Option<&'a [Felt]>,
    /// Overrides `certify.w_max` for this distance.
    pub w_max: Option<usize>,
}

/// Which distances [`CodeReport::analyze`] certifies, and how.
#[derive(Clone, Copy, Debug, Default)]
pub struct Analysis<'a> {
    pub hamming: DistanceRequest<'a>,
    pub symplectic: DistanceRequest<'a>,
    pub certify: CertifyOptions,
}

impl<'a> Analysis<'a> {
    pub fn new(certify: CertifyOptions) -> Self {
        Analysis { certify, ..Analysis::default() }
    }

    pub fn symplectic_witness(mut self, w: Option<&'a [Felt]>) -> Self {
        self.symplectic.witness = w;
        self
    }

    pub fn hamming_witness(mut self, w: Option<&'a [Felt]>) -> Self {
        self.hamming.witness = w;
        self
    }
}

fn distance(
    code: &LinearCode,
    req: &DistanceRequest<'_>,
    opts: &CertifyOptions,
    f: fn(&LinearCode, Option<&[Felt]>, &CertifyOptions) -> Result<Certified>,
    notes: &mut Vec<String>,
    what: &str,
) -> Result<Option<Certified>> {
    if req.skip {
        return Ok(None);
    }
    let opts = CertifyOptions { w_max: req.w_max.unwrap_or(opts.w_max), ..*opts };
    match f(code, req.witness, &opts) {
        Ok(c) => Ok(Some(c)),
        Err(Error::ZeroCode) => {
            notes.push(format!("{what} distance undefined for the zero code"));
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

impl CodeReport {
    /// Computes flags and certified distances.
    pub fn analyze(construction: &str, code: &LinearCode, a: &Analysis<'_>) -> Result<CodeReport> {
        let (n, k) = (code.len(), code.dim());
        let even = n % 2 == 0;
        let mut notes = Vec::new();

        let d_hamming = distance(code, &a.hamming, &a.certify, certify_hamming, &mut notes, "Hamming")?;
        let d_symplectic = if even {
            distance(code, &a.symplectic, &a.certify, certify_symplectic, &mut notes, "symplectic")?
        } else {
            None
        };

        let mut flags = Flags::default();
        if even {
            flags.so = Some(symplectic::is_so(code)?);
            flags.dc = Some(symplectic::is_dc(code)?);
            flags.self_dual = Some(flags.so == Some(true) && flags.dc == Some(true));
            flags.lcd = Some(k == 0 || symplectic::is_lcd(code)?);
        }
        let hd = d_hamming.as_ref().and_then(|c| c.value);
        let sd = d_symplectic.as_ref().and_then(|c| c.value);
        let singleton_defect_hamming = hd.map(|d| (n + 1 - k) as i64 - d as i64);
        let singleton_defect_symplectic = sd.map(|d| symplectic::singleton_bound(n, k) as i64 - d as i64);
        flags.hamming_mds = singleton_defect_hamming.map(|x| x == 0);
        flags.symplectic_mds = singleton_defect_symplectic.map(|x| x == 0);

        Ok(CodeReport {
            schema: SCHEMA_VERSION,
            construction: construction.to_string(),
            params: BTreeMap::new(),
            field: code.field().descriptor(),
            n,
            k,
            predicted: None,
            predicted_hamming: None,
            d_hamming,
            d_symplectic,
            flags,
            singleton_defect_hamming,
            singleton_defect_symplectic,
            seed: None,
            budget: a.certify.search.budget,
            w_max: a.certify.w_max,
            notes,
        })
    }

    /// `true` when every established distance matches its prediction.
    pub fn matches_prediction(&self) -> bool {
        fn agrees(p: &Option<CodeParams>, c: &Option<Certified>) -> bool {
            match (p.as_ref().and_then(|p| p.distance), c.as_ref().and_then(|c| c.value)) {
                (Some(p), Some(v)) => p == v,
                _ => true,
            }
        }
        agrees(&self.predicted, &self.d_symplectic) && agrees(&self.predicted_hamming, &self.d_hamming)
    }
}

fn show_distance(c: &Option<Certified>) -> String {
    match c {
        None => "-".into(),
        Some(c) => {
            let how = match &c.provenance {
                Provenance::Exhaustive { classes } => format!("exhaustive, {classes} classes"),
                Provenance::Bounded { w_max } => format!("bounded search to {w_max}"),
                Provenance::Certificate { w_max } => format!("bounded search to {w_max} + certificate"),
                Provenance::Formula { citation } => format!("formula: {citation}"),
            };
            match (c.value, c.upper) {
                (Some(v), _) => format!("{v} ({how})"),
                (None, Some(u)) => format!("in [{}, {u}] ({how})", c.lower),
                (None, None) => format!(">= {} ({how})", c.lower),
            }
        }
    }
}

fn show_flag(f: Option<bool>) -> &'static str {
    match f {
        Some(true) => "yes",
        Some(false) => "no",
        None => "-",
    }
}

impl fmt::Display for CodeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.construction)?;
        for (k, v) in &self.params {
            writeln!(f, "  {k} = {v}")?;
        }
        writeln!(f, "  {}", self.field)?;
        writeln!(f, "  n = {}, k = {}", self.n, self.k)?;
        if let Some(p) = &self.predicted_hamming {
            writeln!(f, "  predicted {p} (Hamming)")?;
        }
        if let Some(p) = &self.predicted {
            writeln!(f, "  predicted {p} (symplectic)")?;
        }
        writeln!(f, "  d_H = {}", show_distance(&self.d_hamming))?;
        writeln!(f, "  d_s = {}", show_distance(&self.d_symplectic))?;
        let fl = &self.flags;
        writeln!(
            f,
            "  SO {}  DC {}  self-dual {}  LCD {}  Hamming-MDS {}  symplectic-MDS {}",
            show_flag(fl.so),
            show_flag(fl.dc),
            show_flag(fl.self_dual),
            show_flag(fl.lcd),
            show_flag(fl.hamming_mds),
            show_flag(fl.symplectic_mds)
        )?;
        if let Some(d) = self.singleton_defect_symplectic {
            writeln!(f, "  symplectic Singleton defect {d}")?;
        }
        if let Some(s) = self.seed {
            writeln!(f, "  seed {s}")?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}
