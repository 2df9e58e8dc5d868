//! `symcodes`: construct, check and search symplectic codes.

mod family;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use family::{Built, FamilyArgs, Kind};
use symcodes_core::additive::phi_code;
use symcodes_core::enumerate::DEFAULT_BUDGET;
use symcodes_core::families::{extend_by_parity, hamming_code};
use symcodes_core::grm_table::{self, Side, TABLE_BUDGET};
use symcodes_core::lcdsearch::{self, Permutation, SearchConfig, SearchOutcome};
use symcodes_core::report::DistanceRequest;
use symcodes_core::{
    matfile, Analysis, Certified, CertifyOptions, CodeParams, CodeReport, Error, ExtTower, Felt, LinearCode, Matrix,
    Provenance, SearchOptions,
};

#[derive(Parser, Debug)]
#[command(name = "symcodes", version, about = "Symplectic SO, DC and LCD codes from Plotkin sums")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Largest number of projective classes enumerated for an exact distance.
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Depth of the bounded low-weight search when enumeration is too large.
    #[arg(long, global = true, default_value_t = 3)]
    wmax: usize,
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Worker threads; 0 uses every available core.
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
    /// Also write the result as JSON to this path (`-` for stdout).
    #[arg(long, global = true)]
    json: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a code from a family and certify its parameters.
    Construct {
        #[command(flatten)]
        family: FamilyArgs,
        /// Write the generator matrix (the SO code for pairs).
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Check properties of a code given as a matrix file.
    Check(CheckArgs),
    /// Rebuild and verify the GRM Plotkin parameter table.
    GrmTable,
    /// Search for a permutation P with PP(C, CP) symplectic LCD.
    LcdSearch(LcdSearchArgs),
    /// Write a generator matrix of a constructed code.
    Export {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum)]
        which: Option<Which>,
        /// Write the generators of the phi-image over GF(q^2) instead.
        #[arg(long)]
        additive: bool,
    },
}

#[derive(Args, Debug)]
struct CheckArgs {
    file: PathBuf,
    #[arg(long)]
    so: bool,
    #[arg(long)]
    dc: bool,
    #[arg(long)]
    self_dual: bool,
    #[arg(long)]
    lcd: bool,
    /// Claimed symplectic distance, confirmed by bounded search up to it.
    #[arg(long)]
    distance: Option<usize>,
    /// Claimed Hamming distance.
    #[arg(long)]
    hamming_distance: Option<usize>,
    /// A reference permutation name (`P63`) or an explicit `(3 5 2 1 6 4)`.
    #[arg(long)]
    permutation: Option<String>,
    /// Check PP(C, CP) instead of CP.
    #[arg(long, requires = "permutation")]
    lcd_pair: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SourceFamily {
    /// q-ary Hamming code of redundancy --r.
    Hamming,
    /// Hamming code with an overall parity coordinate.
    ExtendedHamming,
}

#[derive(Args, Debug)]
struct LcdSearchArgs {
    #[arg(long, conflicts_with = "family")]
    matrix: Option<PathBuf>,
    #[arg(long, value_enum)]
    family: Option<SourceFamily>,
    #[arg(long, default_value_t = 2)]
    q: u32,
    #[arg(long, default_value_t = 3)]
    r: u32,
    /// Permutations drawn before giving up.
    #[arg(long, default_value_t = 10_000)]
    trials: u64,
    /// Print a progress line to stderr every N trials.
    #[arg(long, default_value_t = 0)]
    progress: u64,
    /// Write the generator of PP(C, CP) when found.
    #[arg(long)]
    export: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Which {
    Code,
    So,
    Dc,
    C1,
    C2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Status {
    Pass,
    Fail,
    /// Not established within the budgets; does not fail the run.
    Open,
}

struct Check {
    name: String,
    status: Status,
}

impl Check {
    fn new(name: impl Into<String>, pass: bool) -> Check {
        Check { name: name.into(), status: if pass { Status::Pass } else { Status::Fail } }
    }

    fn json(&self) -> Value {
        let s = match self.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Open => "open",
        };
        json!({ "name": self.name, "status": s })
    }
}

struct Output {
    text: String,
    json: Value,
    checks: Vec<Check>,
}

impl Global {
    fn certify(&self, default_budget: u64) -> Result<CertifyOptions> {
        let budget = self.budget.unwrap_or(default_budget);
        if budget == 0 {
            return Err(Error::InvalidConfig("--budget must be positive".into()).into());
        }
        if self.wmax == 0 {
            return Err(Error::InvalidConfig("--wmax must be positive".into()).into());
        }
        Ok(CertifyOptions {
            search: SearchOptions { budget, workers: self.workers, ..SearchOptions::default() },
            w_max: self.wmax,
        })
    }
}

fn write_matrix(path: &Path, m: &Matrix) -> Result<()> {
    std::fs::write(path, matfile::format(m)).with_context(|| format!("writing {}", path.display()))
}

fn distance_check(what: &str, c: &Option<Certified>, predicted: Option<usize>) -> Option<Check> {
    let p = predicted?;
    let c = c.as_ref()?;
    Some(match c.value {
        Some(v) => Check::new(format!("{what} = {p}"), v == p),
        None if c.lower > p || c.upper.is_some_and(|u| u < p) => Check::new(format!("{what} = {p}"), false),
        None => Check { name: format!("{what} = {p}"), status: Status::Open },
    })
}

/// Reports for the codes of a construction, with their checks.
fn construction_reports(built: &Built, certify: CertifyOptions) -> Result<(Vec<CodeReport>, Vec<Check>)> {
    let mut reports = Vec::new();
    let mut checks = Vec::new();
    match &built.kind {
        Kind::Single { name, code, predicted_hamming, witness } => {
            let a = Analysis::new(certify).hamming_witness(witness.as_deref());
            let mut r = CodeReport::analyze(name, code, &a)?;
            r.predicted_hamming = *predicted_hamming;
            if let Some(p) = predicted_hamming {
                checks.push(Check::new(format!("{name}: length and dimension"), (r.n, r.k) == (p.len, p.dim)));
                checks.extend(distance_check(&format!("{name}: d_H"), &r.d_hamming, p.distance));
            }
            reports.push(r);
        }
        Kind::Pair(c) => {
            for (side, code, predicted, witness) in [
                ("SO", &c.so, c.predicted_so, c.so_witness.as_deref()),
                ("DC", &c.dc, c.predicted_dc, c.dc_witness.as_deref()),
            ] {
                let name = format!("{} {side}", c.name);
                let a = Analysis::new(certify).symplectic_witness(witness);
                let mut r = CodeReport::analyze(&name, code, &a)?;
                r.predicted = Some(predicted);
                let flag = if side == "SO" { r.flags.so } else { r.flags.dc };
                checks.push(Check::new(format!("{name}: symplectic {side}"), flag == Some(true)));
                checks.push(Check::new(
                    format!("{name}: length and dimension"),
                    (r.n, r.k) == (predicted.len, predicted.dim),
                ));
                checks.extend(distance_check(&format!("{name}: d_s"), &r.d_symplectic, predicted.distance));
                reports.push(r);
            }
        }
    }
    for r in &mut reports {
        r.params = built.params.clone();
        r.seed = built.seed;
    }
    Ok((reports, checks))
}

fn cmd_construct(g: &Global, args: &FamilyArgs, export: Option<&Path>) -> Result<Output> {
    let certify = g.certify(DEFAULT_BUDGET)?;
    let built = family::build(args, g.seed, &certify.search)?;
    let (reports, checks) = construction_reports(&built, certify)?;
    if let Some(path) = export {
        let code = match &built.kind {
            Kind::Single { code, .. } => code,
            Kind::Pair(c) => &c.so,
        };
        write_matrix(path, code.generator())?;
    }
    let text = reports.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n");
    Ok(Output { text, json: json!({ "reports": reports }), checks })
}

fn permutation(spec: &str) -> Result<Permutation> {
    if let Some(p) = lcdsearch::reference_permutation(spec) {
        return Ok(p);
    }
    spec.parse::<Permutation>().map_err(|e| anyhow!("{spec:?} is neither a reference name nor a permutation: {e}"))
}

fn cmd_check(g: &Global, a: &CheckArgs) -> Result<Output> {
    let certify = g.certify(DEFAULT_BUDGET)?;
    let input = family::read_code(&a.file)?;
    let mut checks = Vec::new();
    let mut notes = Vec::new();
    let (name, code) = match &a.permutation {
        None => (a.file.display().to_string(), input),
        Some(spec) => {
            let p = permutation(spec)?;
            if a.lcd_pair {
                let pp = symcodes_core::plotkin::plotkin_sum(&input, &p.apply(&input)?)?;
                notes.push(format!("C ∩ (CP)^⊥E = {{0}}: {}", lcdsearch::lcd_check(&input, &p)?));
                (format!("PP(C, CP) for {} and {spec}", a.file.display()), pp)
            } else {
                (format!("{} permuted by {spec}", a.file.display()), p.apply(&input)?)
            }
        }
    };

    let mut analysis = Analysis::new(certify);
    analysis.symplectic = DistanceRequest { w_max: a.distance, ..DistanceRequest::default() };
    analysis.hamming = DistanceRequest { w_max: a.hamming_distance, ..DistanceRequest::default() };
    let mut r = CodeReport::analyze(&name, &code, &analysis)?;
    r.notes.extend(notes);

    let flags = r.flags.clone();
    for (on, what, flag) in [
        (a.so, "SO", flags.so),
        (a.dc, "DC", flags.dc),
        (a.self_dual, "self-dual", flags.self_dual),
        (a.lcd, "LCD", flags.lcd),
    ] {
        if on {
            checks.push(Check::new(format!("symplectic {what}"), flag == Some(true)));
        }
    }
    checks.extend(distance_check("d_s", &r.d_symplectic, a.distance));
    checks.extend(distance_check("d_H", &r.d_hamming, a.hamming_distance));
    if a.distance.is_some() && r.d_symplectic.is_none() {
        checks.push(Check::new("d_s defined", false));
    }
    Ok(Output { text: r.to_string(), json: json!({ "reports": [r] }), checks })
}

fn provenance_label(p: &Provenance) -> String {
    match p {
        Provenance::Exhaustive { .. } => "exhaustive".into(),
        Provenance::Bounded { w_max } => format!("bounded w_max={w_max}"),
        Provenance::Certificate { w_max } => format!("bounded w_max={w_max} + certificate"),
        Provenance::Formula { .. } => "formula".into(),
    }
}

fn cmd_grm_table(g: &Global) -> Result<Output> {
    let opts = g.certify(TABLE_BUDGET)?;
    let mut text = String::from(" q  m  r  i side  expected           bound  found                provenance\n");
    let mut rows = Vec::new();
    let mut checks = Vec::new();
    for row in &grm_table::ROWS {
        let side = if row.side == Side::So { "SO" } else { "DC" };
        let label = format!("q={} m={} r={} i={} {side}", row.q, row.m, row.r, row.i);
        let c = grm_table::verify_row(row, &opts)?;
        let expected = format!("[{},{},{}]_{}", row.n, row.k, row.d, row.q);
        let found = match c.distance.value {
            Some(d) => format!("[{},{},{}]", c.n, c.k, d),
            None => format!("[{},{},>={}]", c.n, c.k, c.distance.lower),
        };
        text.push_str(&format!(
            "{:>2} {:>2} {:>2} {:>2} {:<4}  {:<18} {:>5}  {:<20} {}  {}\n",
            row.q,
            row.m,
            row.r,
            row.i,
            side,
            expected,
            row.bound,
            found,
            provenance_label(&c.distance.provenance),
            if c.pass { "PASS" } else { "FAIL" }
        ));
        checks.push(Check::new(label, c.pass));
        rows.push(c);
    }
    Ok(Output { text, json: json!({ "rows": rows }), checks })
}

fn source_code(a: &LcdSearchArgs) -> Result<(String, LinearCode)> {
    match (&a.matrix, a.family) {
        (Some(path), _) => Ok((path.display().to_string(), family::read_code(path)?)),
        (None, Some(f)) => {
            let field = family::field(a.q)?;
            let h = hamming_code(&field, a.r)?;
            Ok(match f {
                SourceFamily::Hamming => (format!("hamming q={} r={}", a.q, a.r), h),
                SourceFamily::ExtendedHamming => {
                    (format!("extended-hamming q={} r={}", a.q, a.r), extend_by_parity(&h))
                }
            })
        }
        (None, None) => bail!("lcd-search needs --matrix or --family"),
    }
}

fn cmd_lcd_search(g: &Global, a: &LcdSearchArgs) -> Result<Output> {
    let certify = g.certify(DEFAULT_BUDGET)?;
    let (name, code) = source_code(a)?;
    let cfg = SearchConfig { trials: a.trials, seed: g.seed, report_every: a.progress, workers: g.workers };
    let outcome = lcdsearch::search_with_progress(&code, &cfg, |t| eprintln!("{t} trials"))?;
    let n = code.len();
    let k = code.dim();
    let q = code.field().order();
    let mut text = format!("source {name}: n = {n}, k = {k}, {}\nseed {}\n", code.field().descriptor(), g.seed);
    let mut checks = Vec::new();
    let mut reports = Vec::new();
    let search = match &outcome {
        SearchOutcome::NotFound { trials } => {
            text.push_str(&format!("no LCD permutation in {trials} trials\n"));
            json!({ "found": false, "seed": g.seed, "trials": trials })
        }
        SearchOutcome::Found { permutation, trial } => {
            text.push_str(&format!("found after {} trials\nP = {permutation}\n", trial + 1));
            let (pp, dual) = lcdsearch::build_lcd_pair(&code, permutation)?;
            let dh =
                |c: &LinearCode| symcodes_core::certify::certify_hamming(c, None, &certify).ok().and_then(|c| c.value);
            let predicted = [
                CodeParams { len: 2 * n, dim: 2 * k, distance: dh(&code), q },
                CodeParams { len: 2 * n, dim: 2 * n - 2 * k, distance: dh(&code.dual()), q },
            ];
            for (label, c, p) in [("PP(C, CP)", &pp, predicted[0]), ("PP(C, CP) dual", &dual, predicted[1])] {
                let mut r = CodeReport::analyze(&format!("{label} from {name}"), c, &Analysis::new(certify))?;
                r.predicted = Some(p);
                r.seed = Some(g.seed);
                checks.push(Check::new(format!("{label}: symplectic LCD"), r.flags.lcd == Some(true)));
                checks.extend(distance_check(&format!("{label}: d_s"), &r.d_symplectic, p.distance));
                text.push_str(&format!("{r}\n"));
                reports.push(r);
            }
            if let Some(path) = &a.export {
                write_matrix(path, pp.generator())?;
            }
            json!({
                "found": true,
                "seed": g.seed,
                "trials": trial + 1,
                "permutation": permutation.as_slice(),
                "notation": permutation.to_string(),
            })
        }
    };
    Ok(Output { text, json: json!({ "search": search, "reports": reports }), checks })
}

fn cmd_export(g: &Global, args: &FamilyArgs, out: &Path, which: Option<Which>, additive: bool) -> Result<Output> {
    let certify = g.certify(DEFAULT_BUDGET)?;
    let built = family::build(args, g.seed, &certify.search)?;
    let code = match (&built.kind, which) {
        (Kind::Single { code, .. }, None | Some(Which::Code)) => code.clone(),
        (Kind::Single { .. }, Some(_)) => bail!("--which so/dc/c1/c2 applies to Plotkin constructions only"),
        (Kind::Pair(c), None | Some(Which::So)) => c.so.clone(),
        (Kind::Pair(c), Some(Which::Dc)) => c.dc.clone(),
        (Kind::Pair(c), Some(Which::C1)) => c.c1.clone(),
        (Kind::Pair(c), Some(Which::C2)) => c.c2.clone(),
        (Kind::Pair(_), Some(Which::Code)) => bail!("choose so, dc, c1 or c2 for a Plotkin construction"),
    };
    let m = if additive {
        let tower = Arc::new(ExtTower::new(code.field().clone())?);
        let a = phi_code(&code, &tower)?;
        let rows: Vec<Vec<Felt>> = a.generators().to_vec();
        Matrix::from_rows(tower.ext(), a.len(), &rows)?
    } else {
        code.generator().clone()
    };
    write_matrix(out, &m)?;
    let text = format!("wrote {} x {} matrix over {} to {}", m.rows(), m.cols(), m.field().descriptor(), out.display());
    Ok(Output {
        text,
        json: json!({ "path": out.display().to_string(), "rows": m.rows(), "cols": m.cols() }),
        checks: vec![],
    })
}

fn run(cli: &Cli) -> Result<Output> {
    let g = &cli.global;
    match &cli.command {
        Command::Construct { family, export } => cmd_construct(g, family, export.as_deref()),
        Command::Check(a) => cmd_check(g, a),
        Command::GrmTable => cmd_grm_table(g),
        Command::LcdSearch(a) => cmd_lcd_search(g, a),
        Command::Export { family, out, which, additive } => cmd_export(g, family, out, *which, *additive),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    println!("{}", out.text.trim_end());
    for c in &out.checks {
        let s = match c.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Open => "OPEN",
        };
        println!("{s}  {}", c.name);
    }
    if let Some(path) = &cli.global.json {
        let mut doc = out.json;
        doc["schema"] = json!(symcodes_core::report::SCHEMA_VERSION);
        doc["checks"] = Value::Array(out.checks.iter().map(Check::json).collect());
        let text = serde_json::to_string_pretty(&doc).expect("report serializes");
        let written = if path.as_os_str() == "-" {
            println!("{text}");
            Ok(())
        } else {
            std::fs::write(path, text + "\n")
        };
        if let Err(e) = written {
            eprintln!("error: writing {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if out.checks.iter().any(|c| c.status == Status::Fail) {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
