//! Family selection and construction shared by `construct` and `export`.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use anyhow::{anyhow, Context, Result};
use clap::{Args, ValueEnum};

use symcodes_core::families::{
    grm_plotkin_codes, grs_code, grs_min_weight_word, hyperoval_code, hyperoval_mds_codes, hyperoval_self_dual,
    mds_self_dual, nested_mds_codes, symplectic_mds_codes, Grm, GrsSpec, HyperovalSearch, Parity, PlotkinConstruction,
};
use symcodes_core::plotkin::{self, ConstituentDistances};
use symcodes_core::{matfile, CodeParams, Felt, Field, LinearCode, SearchOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Reed-Solomon code on the first n field elements (--q --n --k).
    Grs,
    /// Generalized Reed-Muller code GRM_q(r, m) (--q --r --m).
    Grm,
    /// The [q+2, 3, q] hyperoval code over GF(2^m) (--m).
    Hyperoval,
    /// PP(C1, C2) for two imported codes (--c1 --c2).
    Plotkin,
    /// SO/DC codes from nested MDS codes (--q --n --k1 --k2).
    NestedMds,
    /// Symplectic MDS SO/DC codes (--q --n --k --parity).
    SymplecticMds,
    /// Symplectic MDS SO/DC codes of length 2^{m+1} + 4 from the hyperoval (--m --trials).
    HyperovalMds,
    /// Symplectic self-dual [2^{m+1} + 4, 2^m + 2, 4] code (--m).
    HyperovalSelfDual,
    /// SO/DC codes PP(GRM(i), GRM(r)^⊥) (--q --m --r --i).
    GrmPlotkin,
    /// Symplectic MDS self-dual code of length 2n (--q --n).
    MdsSelfDual,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ParityArg {
    Even,
    Odd,
}

#[derive(Args, Debug, Clone)]
pub struct FamilyArgs {
    #[arg(value_enum)]
    pub family: Family,
    #[arg(long)]
    pub q: Option<u32>,
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long)]
    pub r: Option<u32>,
    #[arg(long)]
    pub i: Option<u32>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub k1: Option<usize>,
    #[arg(long)]
    pub k2: Option<usize>,
    #[arg(long, value_enum, default_value_t = ParityArg::Even)]
    pub parity: ParityArg,
    /// Random trials for the hyperoval-mds column search.
    #[arg(long, default_value_t = 1000)]
    pub trials: u64,
    /// First constituent of `plotkin`, as a matrix file.
    #[arg(long)]
    pub c1: Option<PathBuf>,
    /// Second constituent of `plotkin`.
    #[arg(long)]
    pub c2: Option<PathBuf>,
}

/// A constructed code or Plotkin pair, with the parameters used.
pub struct Built {
    pub params: BTreeMap<String, String>,
    pub seed: Option<u64>,
    pub kind: Kind,
}

pub enum Kind {
    Single { name: String, code: LinearCode, predicted_hamming: Option<CodeParams>, witness: Option<Vec<Felt>> },
    Pair(Box<PlotkinConstruction>),
}

fn need<T: Copy>(v: Option<T>, flag: &str, family: Family) -> Result<T> {
    v.ok_or_else(|| anyhow!("{} needs --{flag}", family_name(family)))
}

pub fn family_name(f: Family) -> String {
    f.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
}

pub fn field(q: u32) -> Result<Arc<Field>> {
    Ok(Arc::new(Field::of_order(q)?))
}

pub fn read_code(path: &Path) -> Result<LinearCode> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let g = matfile::parse(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok(LinearCode::from_generator(&g))
}

/// Hamming distance within budget, `None` for the zero code or when too large.
fn hamming_distance(code: &LinearCode, opts: &SearchOptions) -> Option<usize> {
    code.min_hamming_distance(opts).ok().map(|m| m.weight)
}

fn imported_pair(a: &FamilyArgs, opts: &SearchOptions) -> Result<PlotkinConstruction> {
    let c1 = read_code(&a.c1.clone().ok_or_else(|| anyhow!("plotkin needs --c1"))?)?;
    let c2 = read_code(&a.c2.clone().ok_or_else(|| anyhow!("plotkin needs --c2"))?)?;
    let so = plotkin::plotkin_sum(&c1, &c2)?;
    let dc = plotkin::symplectic_dual(&c1, &c2)?;
    let d = ConstituentDistances {
        d1: hamming_distance(&c1, opts),
        d2: hamming_distance(&c2, opts),
        d1_dual: hamming_distance(&c1.dual(), opts),
        d2_dual: hamming_distance(&c2.dual(), opts),
    };
    let (predicted_so, predicted_dc) = plotkin::predicted_parameters(&c1, &c2, &d)?;
    let name = format!("plotkin [{}]", c1.len());
    Ok(PlotkinConstruction { name, c1, c2, so, dc, predicted_so, predicted_dc, so_witness: None, dc_witness: None })
}

pub fn build(a: &FamilyArgs, seed: u64, opts: &SearchOptions) -> Result<Built> {
    let mut params = BTreeMap::new();
    let mut record = |k: &str, v: Option<String>| {
        if let Some(v) = v {
            params.insert(k.to_string(), v);
        }
    };
    record("q", a.q.map(|v| v.to_string()));
    record("m", a.m.map(|v| v.to_string()));
    record("r", a.r.map(|v| v.to_string()));
    record("i", a.i.map(|v| v.to_string()));
    record("n", a.n.map(|v| v.to_string()));
    record("k", a.k.map(|v| v.to_string()));
    record("k1", a.k1.map(|v| v.to_string()));
    record("k2", a.k2.map(|v| v.to_string()));
    record("c1", a.c1.as_ref().map(|p| p.display().to_string()));
    record("c2", a.c2.as_ref().map(|p| p.display().to_string()));
    if a.family == Family::SymplecticMds {
        record("parity", Some(format!("{:?}", a.parity).to_lowercase()));
    }

    let f = a.family;
    let mut seed_used = None;
    let kind = match f {
        Family::Grs => {
            let field = field(need(a.q, "q", f)?)?;
            let n = a.n.unwrap_or(field.order() as usize);
            let k = need(a.k, "k", f)?;
            let spec = GrsSpec::standard(&field, n, k)?;
            let code = grs_code(&field, &spec)?;
            let witness = grs_min_weight_word(&field, &spec)?;
            Kind::Single {
                name: format!("grs q={} n={n} k={k}", field.order()),
                predicted_hamming: Some(CodeParams { len: n, dim: k, distance: Some(n - k + 1), q: field.order() }),
                code,
                witness: Some(witness),
            }
        }
        Family::Grm => {
            let field = field(need(a.q, "q", f)?)?;
            let (r, m) = (need(a.r, "r", f)?, need(a.m, "m", f)?);
            let g = Grm::new(&field, r, m)?;
            Kind::Single {
                name: format!("grm q={} r={r} m={m}", field.order()),
                predicted_hamming: Some(CodeParams {
                    len: g.len(),
                    dim: g.dimension(),
                    distance: Some(g.distance()),
                    q: field.order(),
                }),
                code: g.code(),
                witness: Some(g.min_weight_codeword()),
            }
        }
        Family::Hyperoval => {
            let m = need(a.m, "m", f)?;
            let code = hyperoval_code(m)?;
            let q = 1u32 << m;
            Kind::Single {
                name: format!("hyperoval m={m}"),
                predicted_hamming: Some(CodeParams { len: q as usize + 2, dim: 3, distance: Some(q as usize), q }),
                code,
                witness: None,
            }
        }
        Family::Plotkin => Kind::Pair(Box::new(imported_pair(a, opts)?)),
        Family::NestedMds => {
            let field = field(need(a.q, "q", f)?)?;
            let c = nested_mds_codes(&field, need(a.n, "n", f)?, need(a.k1, "k1", f)?, need(a.k2, "k2", f)?)?;
            Kind::Pair(Box::new(c))
        }
        Family::SymplecticMds => {
            let field = field(need(a.q, "q", f)?)?;
            let parity = match a.parity {
                ParityArg::Even => Parity::Even,
                ParityArg::Odd => Parity::Odd,
            };
            Kind::Pair(Box::new(symplectic_mds_codes(&field, need(a.n, "n", f)?, need(a.k, "k", f)?, parity)?))
        }
        Family::HyperovalMds => {
            seed_used = Some(seed);
            let search = HyperovalSearch { trials: a.trials, seed };
            record("trials", Some(a.trials.to_string()));
            Kind::Pair(Box::new(hyperoval_mds_codes(need(a.m, "m", f)?, &search)?))
        }
        Family::HyperovalSelfDual => Kind::Pair(Box::new(hyperoval_self_dual(need(a.m, "m", f)?)?)),
        Family::GrmPlotkin => {
            let field = field(need(a.q, "q", f)?)?;
            let c = grm_plotkin_codes(&field, need(a.m, "m", f)?, need(a.r, "r", f)?, need(a.i, "i", f)?)?;
            Kind::Pair(Box::new(c))
        }
        Family::MdsSelfDual => {
            let field = field(need(a.q, "q", f)?)?;
            Kind::Pair(Box::new(mds_self_dual(&field, need(a.n, "n", f)?)?))
        }
    };
    Ok(Built { params, seed: seed_used, kind })
}
