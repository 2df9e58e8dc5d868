//! Symplectic LCD codes `PP(C, CP)` from a coordinate permutation `P`.
//!
//! `PP(C, CP)` is symplectic LCD exactly when `C ∩ (CP)^⊥E = {0}`. This
//! module applies permutations, runs that test, searches for a suitable `P`
//! at random and holds the reference permutations.

mod reference;

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::code::LinearCode;
use crate::enumerate::SearchOptions;
use crate::error::{Error, Result};
use crate::plotkin;
use crate::rng::XorShift64Star;

/// A permutation of `{1..n}` in array notation: coordinate `i` of a word is
/// moved to position `map[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn new(map: Vec<usize>) -> Result<Permutation> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &v in &map {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!("entry {v} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::InvalidPermutation(format!("entry {v} repeated")));
            }
        }
        Ok(Permutation { map })
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation { map: (1..=n).collect() }
    }

    /// A uniformly shuffled permutation.
    pub fn random(n: usize, rng: &mut XorShift64Star) -> Permutation {
        let mut p = Permutation::identity(n);
        rng.shuffle(&mut p.map);
        p
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// One-based images.
    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.map.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { map: inv }
    }

    /// Composition: apply `self`, then `other`.
    pub fn then(&self, other: &Permutation) -> Result<Permutation> {
        self.check_len(other.len())?;
        Ok(Permutation { map: self.map.iter().map(|&v| other.map[v - 1]).collect() })
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if self.len() != len {
            return Err(Error::SizeMismatch { perm: self.len(), len });
        }
        Ok(())
    }

    /// Zero-based source column for every target column.
    fn sources(&self) -> Vec<usize> {
        let mut src = vec![0; self.len()];
        for (i, &v) in self.map.iter().enumerate() {
            src[v - 1] = i;
        }
        src
    }

    pub fn apply_vec<T: Copy>(&self, x: &[T]) -> Result<Vec<T>> {
        self.check_len(x.len())?;
        Ok(self.sources().into_iter().map(|i| x[i]).collect())
    }

    /// The code `CP`.
    pub fn apply(&self, code: &LinearCode) -> Result<LinearCode> {
        self.check_len(code.len())?;
        Ok(code.select_columns(&self.sources()))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.map.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Parses `(3 5 2 1 6 4)`; parentheses and commas are optional.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Permutation> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let map = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::InvalidPermutation(format!("bad entry {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(map)
    }
}

/// Whether `C ∩ (CP)^⊥E = {0}`.
pub fn lcd_check(code: &LinearCode, p: &Permutation) -> Result<bool> {
    let cp = p.apply(code)?;
    Ok(code.intersection_dim(&cp.dual())? == 0)
}

/// `PP(C, CP)` and its symplectic dual, both symplectic LCD.
pub fn build_lcd_pair(code: &LinearCode, p: &Permutation) -> Result<(LinearCode, LinearCode)> {
    if !lcd_check(code, p)? {
        return Err(Error::CriterionFailed(format!("C ∩ (CP)^⊥E is nonzero for P = {p}")));
    }
    let cp = p.apply(code)?;
    Ok((plotkin::plotkin_sum(code, &cp)?, plotkin::symplectic_dual(code, &cp)?))
}

/// Symplectic distances of the pair from [`build_lcd_pair`] as predicted
/// from `C`: `d_H(C)` and `d_H(C^⊥E)`.
pub fn predicted_lcd_distances(code: &LinearCode, opts: &SearchOptions) -> Result<(usize, usize)> {
    let d = code.min_hamming_distance(opts)?.weight;
    let dd = code.dual().min_hamming_distance(opts)?.weight;
    Ok((d, dd))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub trials: u64,
    pub seed: u64,
    /// Progress callback cadence in trials; 0 disables progress reports.
    pub report_every: u64,
    /// 0 means all available cores.
    pub workers: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { trials: 10_000, seed: 1, report_every: 0, workers: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    /// `trial` is the zero-based index of the winning draw.
    Found {
        permutation: Permutation,
        trial: u64,
    },
    NotFound {
        trials: u64,
    },
}

/// Draws permutations from one xorshift64* stream seeded with `cfg.seed`
/// and returns the first (by draw index) that passes [`lcd_check`].
/// The outcome depends only on the code and the seed, not on `cfg.workers`.
pub fn search(code: &LinearCode, cfg: &SearchConfig) -> Result<SearchOutcome> {
    search_with_progress(code, cfg, |_| {})
}

/// [`search`] calling `progress(trials_done)` roughly every `cfg.report_every` trials.
pub fn search_with_progress(
    code: &LinearCode,
    cfg: &SearchConfig,
    mut progress: impl FnMut(u64),
) -> Result<SearchOutcome> {
    if cfg.trials == 0 {
        return Err(Error::InvalidConfig("trials must be at least 1".into()));
    }
    if code.dim() == 0 {
        return Err(Error::ZeroCode);
    }
    let workers = SearchOptions { workers: cfg.workers, ..SearchOptions::default() }.worker_count();
    let batch = (16 * workers) as u64;
    let mut rng = XorShift64Star::new(cfg.seed);
    let mut done = 0u64;
    let mut next_report = cfg.report_every;
    while done < cfg.trials {
        let size = batch.min(cfg.trials - done);
        let perms: Vec<Permutation> = (0..size).map(|_| Permutation::random(code.len(), &mut rng)).collect();
        let best = AtomicU64::new(u64::MAX);
        let next = AtomicU64::new(0);
        let failure = std::sync::Mutex::new(None);
        std::thread::scope(|s| {
            for _ in 0..workers.min(perms.len()) {
                s.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= size || i > best.load(Ordering::Relaxed) {
                        break;
                    }
                    match lcd_check(code, &perms[i as usize]) {
                        Ok(true) => {
                            best.fetch_min(i, Ordering::Relaxed);
                        }
                        Ok(false) => {}
                        Err(e) => {
                            *failure.lock().unwrap() = Some(e);
                            break;
                        }
                    }
                });
            }
        });
        if let Some(e) = failure.into_inner().unwrap() {
            return Err(e);
        }
        let found = best.into_inner();
        if found != u64::MAX {
            return Ok(SearchOutcome::Found { permutation: perms[found as usize].clone(), trial: done + found });
        }
        done += size;
        if cfg.report_every > 0 && done >= next_report {
            progress(done);
            next_report = done + cfg.report_every;
        }
    }
    Ok(SearchOutcome::NotFound { trials: cfg.trials })
}

/// The ten reference permutations `P46, P52, P56, P58, P62, P63, P64, P70,
/// P72, P74` used with best-known binary codes of the same length.
pub fn reference_permutations() -> Vec<(&'static str, Permutation)> {
    reference::TABLE
        .iter()
        .map(|&(name, map)| {
            let p = Permutation::new(map.iter().map(|&v| v as usize).collect()).expect("reference data is a bijection");
            (name, p)
        })
        .collect()
}

/// Looks up a reference permutation by name (`"P63"` or `"63"`).
pub fn reference_permutation(name: &str) -> Option<Permutation> {
    let key = name.trim_start_matches(['P', 'p']);
    reference_permutations().into_iter().find(|(n, _)| &n[1..] == key).map(|(_, p)| p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;
    use crate::matgf::Matrix;
    use crate::symplectic;
    use proptest::prelude::*;
    use std::sync::Arc;

    fn gf2() -> Arc<Field> {
        Arc::new(Field::of_order(2).unwrap())
    }

    fn hamming7() -> LinearCode {
        let g = Matrix::from_ints(
            &gf2(),
            &[&[1, 0, 0, 0, 0, 1, 1], &[0, 1, 0, 0, 1, 0, 1], &[0, 0, 1, 0, 1, 1, 0], &[0, 0, 0, 1, 1, 1, 1]],
        )
        .unwrap();
        LinearCode::from_generator(&g)
    }

    fn extended_hamming8() -> LinearCode {
        let g = Matrix::from_ints(
            &gf2(),
            &[
                &[1, 0, 0, 0, 0, 1, 1, 1],
                &[0, 1, 0, 0, 1, 0, 1, 1],
                &[0, 0, 1, 0, 1, 1, 0, 1],
                &[0, 0, 0, 1, 1, 1, 1, 0],
            ],
        )
        .unwrap();
        LinearCode::from_generator(&g)
    }

    #[test]
    fn permutation_basics() {
        let p: Permutation = "(3 5 2 1 6 4)".parse().unwrap();
        assert_eq!(p.to_string(), "(3 5 2 1 6 4)");
        // Coordinate 1 goes to position 3.
        assert_eq!(p.apply_vec(&[10, 20, 30, 40, 50, 60]).unwrap(), vec![40, 30, 10, 60, 20, 50]);
        assert_eq!(p.then(&p.inverse()).unwrap(), Permutation::identity(6));
        assert!(matches!("1 1 2".parse::<Permutation>(), Err(Error::InvalidPermutation(_))));
        assert!(matches!("0 1".parse::<Permutation>(), Err(Error::InvalidPermutation(_))));
        assert_eq!(p.apply_vec(&[1, 2]), Err(Error::SizeMismatch { perm: 6, len: 2 }));
    }

    #[test]
    fn apply_preserves_parameters() {
        let c = hamming7();
        let mut rng = XorShift64Star::new(3);
        for _ in 0..10 {
            let p = Permutation::random(7, &mut rng);
            let cp = p.apply(&c).unwrap();
            assert_eq!(cp.min_hamming_distance(&SearchOptions::default()).unwrap().weight, 3);
            assert_eq!(p.inverse().apply(&cp).unwrap(), c);
            for row in c.generator().row_iter() {
                assert!(cp.contains(&p.apply_vec(row).unwrap()).unwrap());
            }
        }
        assert_eq!(Permutation::identity(7).apply(&c).unwrap(), c);
    }

    #[test]
    fn hamming_search_and_pair() {
        let c = hamming7();
        let cfg = SearchConfig { trials: 10_000, seed: 1, ..SearchConfig::default() };
        let out = search(&c, &cfg).unwrap();
        let SearchOutcome::Found { permutation, trial } = out.clone() else { panic!("no permutation found") };
        assert!(trial < 10_000);
        for workers in [1, 3] {
            assert_eq!(search(&c, &SearchConfig { workers, ..cfg }).unwrap(), out);
        }
        let (so, dual) = build_lcd_pair(&c, &permutation).unwrap();
        assert!(symplectic::is_lcd(&so).unwrap() && symplectic::is_lcd(&dual).unwrap());
        let opts = SearchOptions::default();
        assert_eq!((so.len(), so.dim(), symplectic::min_distance(&so, &opts).unwrap().weight), (14, 8, 3));
        assert_eq!((dual.dim(), symplectic::min_distance(&dual, &opts).unwrap().weight), (6, 4));
        assert_eq!(predicted_lcd_distances(&c, &opts).unwrap(), (3, 4));
    }

    #[test]
    fn all_ones_blocks_every_permutation() {
        let c = extended_hamming8();
        assert_eq!(c.dual(), c);
        let out = search(&c, &SearchConfig { trials: 2_000, ..SearchConfig::default() }).unwrap();
        assert_eq!(out, SearchOutcome::NotFound { trials: 2_000 });
        assert!(matches!(build_lcd_pair(&c, &Permutation::identity(8)), Err(Error::CriterionFailed(_))));
    }

    #[test]
    fn euclidean_lcd_with_identity() {
        // The [3,1] repetition code over GF(2) meets its dual trivially.
        let c = LinearCode::from_generator(&Matrix::from_ints(&gf2(), &[&[1, 1, 1]]).unwrap());
        assert!(lcd_check(&c, &Permutation::identity(3)).unwrap());
        let out = search(&c, &SearchConfig::default()).unwrap();
        assert!(matches!(out, SearchOutcome::Found { trial: 0, .. }));
    }

    #[test]
    fn search_config_errors() {
        let c = hamming7();
        assert!(matches!(
            search(&c, &SearchConfig { trials: 0, ..SearchConfig::default() }),
            Err(Error::InvalidConfig(_))
        ));
        assert_eq!(search(&LinearCode::zero(&gf2(), 4), &SearchConfig::default()), Err(Error::ZeroCode));
    }

    #[test]
    fn progress_reports() {
        let mut seen = Vec::new();
        let cfg = SearchConfig { trials: 500, report_every: 100, workers: 1, ..SearchConfig::default() };
        search_with_progress(&extended_hamming8(), &cfg, |t| seen.push(t)).unwrap();
        assert!(!seen.is_empty() && seen.windows(2).all(|w| w[1] - w[0] >= 100));
    }

    #[test]
    fn reference_table() {
        let table = reference_permutations();
        let sizes: Vec<usize> = table.iter().map(|(_, p)| p.len()).collect();
        assert_eq!(sizes, vec![46, 52, 56, 58, 62, 63, 64, 70, 72, 74]);
        for (name, p) in &table {
            assert_eq!(name[1..].parse::<usize>().unwrap(), p.len());
        }
        let p63 = reference_permutation("P63").unwrap();
        assert_eq!(&p63.as_slice()[..4], &[53, 29, 63, 14]);
        assert_eq!(reference_permutation("63"), Some(p63));
        assert_eq!(reference_permutation("P65"), None);
    }

    fn random_code(n: usize, k: usize, seed: u64) -> LinearCode {
        let f = gf2();
        let mut rng = XorShift64Star::new(seed);
        let rows: Vec<Vec<_>> =
            (0..k).map(|_| (0..n).map(|_| crate::gf::Felt(rng.below(2) as u16)).collect()).collect();
        LinearCode::from_generator(&Matrix::from_rows(&f, n, &rows).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn check_agrees_with_symplectic_lcd(n in 2usize..9, k in 1usize..5, seed in any::<u64>()) {
            let c = random_code(n, k.min(n), seed);
            prop_assume!(c.dim() > 0);
            let p = Permutation::random(n, &mut XorShift64Star::new(seed ^ 0x9e37));
            let pp = plotkin::plotkin_sum(&c, &p.apply(&c).unwrap()).unwrap();
            prop_assert_eq!(lcd_check(&c, &p).unwrap(), symplectic::is_lcd(&pp).unwrap());
        }
    }
}
