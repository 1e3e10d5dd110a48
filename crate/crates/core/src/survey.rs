//! Bounded enumeration of Kunz coordinate vectors and `η` profiles.
//!
//! A numerical semigroup of multiplicity `m` is determined by its Kunz
//! vector `x_1..x_{m-1}`, where the Apéry element of residue `i` is
//! `m·x_i + i`. Vectors with entries in `[1, B]` are enumerated depth first,
//! collapsed to distinct Kunz nilsemigroups, and `η` is computed once per
//! nilsemigroup.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::{self, Write as _};
use std::io;
use std::sync::atomic::{AtomicBool, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{self, BoundKind};
use crate::kunz::KunzNilsemigroup;
use crate::semigroup::{NumericalSemigroup, SemigroupError};

/// Environment variable overriding the worker count.
pub const THREADS_ENV: &str = "KUNZKIT_THREADS";

#[derive(Debug, Error)]
pub enum SurveyError {
    #[error("multiplicity {0} is below 2")]
    Multiplicity(u64),
    #[error("coordinate bound must be at least 1")]
    Bound,
    #[error("invalid Kunz vector: {0}")]
    InvalidVector(String),
    #[error("thread pool: {0}")]
    ThreadPool(String),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Kunz coordinates `x_1..x_{m-1}` of a numerical semigroup.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct KunzVector {
    m: u64,
    x: Vec<u32>,
}

impl KunzVector {
    /// Checks positivity and every Kunz inequality.
    pub fn new(m: u64, x: Vec<u32>) -> Result<Self, SurveyError> {
        if m < 2 {
            return Err(SurveyError::Multiplicity(m));
        }
        if x.len() as u64 != m - 1 {
            return Err(SurveyError::InvalidVector(format!("expected {} coordinates, got {}", m - 1, x.len())));
        }
        if let Some(i) = x.iter().position(|&v| v == 0) {
            return Err(SurveyError::InvalidVector(format!("x_{} = 0", i + 1)));
        }
        let v = Self { m, x };
        if let Some((i, j)) = v.violated_condition() {
            return Err(SurveyError::InvalidVector(format!("condition for x_{i} + x_{j} fails")));
        }
        Ok(v)
    }

    pub fn from_semigroup(s: &NumericalSemigroup) -> Result<Self, SurveyError> {
        let m = s.multiplicity();
        if m < 2 {
            return Err(SurveyError::Multiplicity(m));
        }
        let x = s.apery_slice()[1..]
            .iter()
            .enumerate()
            .map(|(k, &a)| ((a - (k as u64 + 1)) / m) as u32)
            .collect();
        Ok(Self { m, x })
    }

    pub fn multiplicity(&self) -> u64 {
        self.m
    }

    pub fn coordinates(&self) -> &[u32] {
        &self.x
    }

    fn coord(&self, i: usize) -> i64 {
        i64::from(self.x[i - 1])
    }

    fn violated_condition(&self) -> Option<(usize, usize)> {
        let m = self.m as usize;
        for i in 1..m {
            for j in i..m {
                let t = (i + j) % m;
                if t == 0 {
                    continue;
                }
                let slack = i64::from(i + j > m);
                if self.coord(i) + self.coord(j) + slack < self.coord(t) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// `a_0, …, a_{m-1}` with `a_i = m·x_i + i`.
    pub fn apery(&self) -> Vec<u64> {
        std::iter::once(0)
            .chain(self.x.iter().enumerate().map(|(k, &v)| self.m * u64::from(v) + k as u64 + 1))
            .collect()
    }

    pub fn nilsemigroup(&self) -> KunzNilsemigroup {
        KunzNilsemigroup::from_apery_unchecked(&self.apery(), None)
    }
}

impl fmt::Display for KunzVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.x.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The semigroup with the given Kunz coordinates, generated by `m` and the
/// Apéry elements at atoms of its nilsemigroup.
pub fn semigroup_from_kunz(v: &KunzVector) -> NumericalSemigroup {
    let apery = v.apery();
    let n = KunzNilsemigroup::from_apery_unchecked(&apery, None);
    let mut gens = vec![v.m];
    gens.extend(n.atoms().iter().map(|&a| apery[a]));
    NumericalSemigroup::new(&gens).expect("Apéry set of a valid Kunz vector")
}

/// Lexicographic depth-first enumeration of Kunz vectors in `[1, B]^{m-1}`.
///
/// Every Kunz inequality is checked as soon as its largest index is
/// assigned, either as an upper bound on the target coordinate or as a lower
/// bound on a summand, so every emitted vector is valid.
#[derive(Debug, Clone)]
pub struct KunzVectors {
    m: usize,
    bound: u32,
    first: Option<u32>,
    x: Vec<u32>,
    hi: Vec<u32>,
    started: bool,
    done: bool,
}

/// All Kunz vectors of multiplicity `m` with entries at most `bound`.
pub fn enumerate_kunz_vectors(m: u64, bound: u32) -> KunzVectors {
    KunzVectors::new(m, bound, None)
}

/// The vectors of [`enumerate_kunz_vectors`] whose first coordinate is `x1`.
pub fn enumerate_kunz_vectors_from(m: u64, bound: u32, x1: u32) -> KunzVectors {
    KunzVectors::new(m, bound, Some(x1))
}

impl KunzVectors {
    fn new(m: u64, bound: u32, first: Option<u32>) -> Self {
        let len = m.saturating_sub(1) as usize;
        Self {
            m: m as usize,
            bound,
            first,
            x: vec![0; len],
            hi: vec![0; len],
            started: false,
            done: m < 2 || bound == 0,
        }
    }

    /// Feasible range for the coordinate at `level` (residue `level + 1`).
    fn range(&self, level: usize) -> (i64, i64) {
        let (mut lo, mut hi) = (1i64, i64::from(self.bound));
        if level == 0 {
            if let Some(v) = self.first {
                lo = lo.max(i64::from(v));
                hi = hi.min(i64::from(v));
            }
        }
        let k = level + 1;
        let x = |i: usize| i64::from(self.x[i - 1]);
        for i in 1..=k / 2 {
            hi = hi.min(x(i) + x(k - i));
        }
        for i in 1..=k {
            if k + i <= self.m {
                continue;
            }
            let t = k + i - self.m;
            if i == k {
                // 2x_k + 1 ≥ x_t, i.e. x_k ≥ ⌊x_t / 2⌋
                lo = lo.max(x(t) / 2);
            } else {
                lo = lo.max(x(t) - x(i) - 1);
            }
        }
        (lo, hi)
    }
}

impl Iterator for KunzVectors {
    type Item = KunzVector;

    fn next(&mut self) -> Option<KunzVector> {
        if self.done {
            return None;
        }
        let n = self.x.len();
        let (mut level, mut descending) = if self.started { (n - 1, false) } else { (0, true) };
        self.started = true;
        loop {
            if descending {
                if level == n {
                    return Some(KunzVector {
                        m: self.m as u64,
                        x: self.x.clone(),
                    });
                }
                let (lo, hi) = self.range(level);
                if lo <= hi {
                    self.x[level] = lo as u32;
                    self.hi[level] = hi as u32;
                    level += 1;
                    continue;
                }
            } else if self.x[level] < self.hi[level] {
                self.x[level] += 1;
                level += 1;
                descending = true;
                continue;
            }
            if level == 0 {
                self.done = true;
                return None;
            }
            level -= 1;
            descending = false;
        }
    }
}

/// Options for [`survey`].
#[derive(Debug, Clone, Default)]
pub struct SurveyConfig {
    /// Coordinate bound; `max(m, 8)` when unset.
    pub bound: Option<u32>,
    pub e_filter: Option<usize>,
    pub max_eta: Option<usize>,
    /// Worker count; falls back to `KUNZKIT_THREADS`, then rayon's default.
    pub threads: Option<usize>,
    /// Also run [`stabilization_check`] for each `m`.
    pub check_stabilization: bool,
}

impl SurveyConfig {
    pub fn bound_for(&self, m: u64) -> u32 {
        self.bound.unwrap_or_else(|| m.max(8) as u32)
    }

    fn thread_count(&self) -> Option<usize> {
        self.threads
            .or_else(|| std::env::var(THREADS_ENV).ok().and_then(|v| v.trim().parse().ok()))
            .filter(|&n| n > 0)
    }
}

/// One distinct Kunz nilsemigroup met by the enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub e: usize,
    pub eta: usize,
    /// Lexicographically smallest vector with this nilsemigroup.
    pub witness: KunzVector,
}

/// Every distinct nilsemigroup found for one multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicitySurvey {
    pub m: u64,
    pub bound: u32,
    /// Ordered by witness.
    pub instances: Vec<Instance>,
    /// Kunz vectors visited, before deduplication.
    pub vectors: u64,
    pub truncated: bool,
}

impl MultiplicitySurvey {
    /// Achieved `(e, η)` pairs.
    pub fn achieved(&self) -> BTreeSet<(usize, usize)> {
        self.instances.iter().map(|i| (i.e, i.eta)).collect()
    }
}

fn table_key(apery: &[u64]) -> Vec<u16> {
    let m = apery.len();
    let mut key = vec![u16::MAX; m * m];
    for i in 0..m {
        for j in 0..m {
            let k = (i + j) % m;
            if apery[i] + apery[j] == apery[k] {
                key[i * m + j] = k as u16;
            }
        }
    }
    key
}

fn with_pool<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, SurveyError> {
    match threads {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| SurveyError::ThreadPool(e.to_string()))?;
            Ok(pool.install(f))
        }
        None => Ok(f()),
    }
}

/// Enumerates and deduplicates every Kunz nilsemigroup of multiplicity `m`
/// reachable with coordinates at most `bound`. Shards are the values of
/// `x_1`, and the merge keeps the smallest witness, so the output does not
/// depend on scheduling. Setting `cancel` stops early with `truncated`.
pub fn survey_multiplicity(m: u64, bound: u32, cancel: &AtomicBool) -> Result<MultiplicitySurvey, SurveyError> {
    if m < 2 {
        return Err(SurveyError::Multiplicity(m));
    }
    if bound == 0 {
        return Err(SurveyError::Bound);
    }
    let shards: Vec<(HashMap<Vec<u16>, KunzVector>, u64, bool)> = (1..=bound)
        .into_par_iter()
        .map(|x1| {
            let mut seen: HashMap<Vec<u16>, KunzVector> = HashMap::new();
            let mut count = 0u64;
            for v in enumerate_kunz_vectors_from(m, bound, x1) {
                if cancel.load(Ordering::Relaxed) {
                    return (seen, count, true);
                }
                count += 1;
                seen.entry(table_key(&v.apery())).or_insert(v);
            }
            (seen, count, false)
        })
        .collect();

    let mut merged: HashMap<Vec<u16>, KunzVector> = HashMap::new();
    let mut vectors = 0;
    let mut truncated = false;
    for (seen, count, cut) in shards {
        vectors += count;
        truncated |= cut;
        for (key, v) in seen {
            merged
                .entry(key)
                .and_modify(|w| {
                    if v < *w {
                        *w = v.clone();
                    }
                })
                .or_insert(v);
        }
    }

    let mut witnesses: Vec<KunzVector> = merged.into_values().collect();
    witnesses.sort();
    let instances = witnesses
        .into_par_iter()
        .map(|witness| {
            let n = witness.nilsemigroup();
            Instance {
                e: n.embedding_dimension(),
                eta: n.eta().eta,
                witness,
            }
        })
        .collect();
    Ok(MultiplicitySurvey {
        m,
        bound,
        instances,
        vectors,
        truncated,
    })
}

/// True when bounds `B` and `2B` give the same achieved `(e, η)` set.
pub fn stabilization_check(m: u64, bound: u32) -> Result<bool, SurveyError> {
    let never = AtomicBool::new(false);
    let a = survey_multiplicity(m, bound, &never)?.achieved();
    let b = survey_multiplicity(m, bound * 2, &never)?.achieved();
    Ok(a == b)
}

/// One achieved `(m, e, η)` with a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileEntry {
    pub m: u64,
    pub e: usize,
    pub eta: usize,
    pub witness_generators: Vec<u64>,
    pub nilsemigroup_count: usize,
    pub bound_b: u32,
    pub stabilized: Option<bool>,
}

/// Achieved `η` values per `(m, e)`, sorted by `(m, e, η)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EtaProfile {
    pub entries: Vec<ProfileEntry>,
    pub truncated: bool,
}

#[derive(Debug, Serialize, Deserialize)]
struct CsvRow {
    m: u64,
    e: usize,
    eta: usize,
    witness_generators: String,
    nilsemigroup_count: usize,
    bound_b: u32,
    stabilized: Option<bool>,
}

impl EtaProfile {
    /// Aggregates surveys, applying the `e` and `η` filters of `config`.
    pub fn from_surveys(
        surveys: &[MultiplicitySurvey],
        stabilized: &BTreeMap<u64, bool>,
        config: &SurveyConfig,
    ) -> Self {
        let mut entries = Vec::new();
        let mut truncated = false;
        for s in surveys {
            truncated |= s.truncated;
            let mut groups: BTreeMap<(usize, usize), (usize, &KunzVector)> = BTreeMap::new();
            for inst in &s.instances {
                if config.e_filter.is_some_and(|e| e != inst.e) || config.max_eta.is_some_and(|h| inst.eta > h) {
                    continue;
                }
                let slot = groups.entry((inst.e, inst.eta)).or_insert((0, &inst.witness));
                slot.0 += 1;
                if inst.witness < *slot.1 {
                    slot.1 = &inst.witness;
                }
            }
            for ((e, eta), (count, witness)) in groups {
                entries.push(ProfileEntry {
                    m: s.m,
                    e,
                    eta,
                    witness_generators: semigroup_from_kunz(witness).generators().to_vec(),
                    nilsemigroup_count: count,
                    bound_b: s.bound,
                    stabilized: stabilized.get(&s.m).copied(),
                });
            }
        }
        Self { entries, truncated }
    }

    /// Achieved `η` values at `(m, e)`.
    pub fn achieved(&self, m: u64, e: usize) -> BTreeSet<usize> {
        self.entries.iter().filter(|r| r.m == m && r.e == e).map(|r| r.eta).collect()
    }

    pub fn multiplicities(&self) -> BTreeSet<u64> {
        self.entries.iter().map(|r| r.m).collect()
    }

    pub fn to_json(&self) -> Result<String, SurveyError> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self, SurveyError> {
        Ok(serde_json::from_str(text)?)
    }

    /// CSV rows; the truncation marker is a trailing `# truncated` line.
    pub fn write_csv<W: io::Write>(&self, out: W) -> Result<(), SurveyError> {
        let mut w = csv::Writer::from_writer(out);
        for r in &self.entries {
            let gens: Vec<String> = r.witness_generators.iter().map(u64::to_string).collect();
            w.serialize(CsvRow {
                m: r.m,
                e: r.e,
                eta: r.eta,
                witness_generators: gens.join(";"),
                nilsemigroup_count: r.nilsemigroup_count,
                bound_b: r.bound_b,
                stabilized: r.stabilized,
            })?;
        }
        if self.entries.is_empty() {
            w.write_record([
                "m",
                "e",
                "eta",
                "witness_generators",
                "nilsemigroup_count",
                "bound_b",
                "stabilized",
            ])?;
        }
        let mut out = w.into_inner().map_err(|e| SurveyError::Io(e.into_error()))?;
        if self.truncated {
            writeln!(out, "# truncated")?;
        }
        Ok(())
    }

    pub fn read_csv<R: io::Read>(input: R) -> Result<Self, SurveyError> {
        let mut rdr = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(input);
        let mut entries = Vec::new();
        for row in rdr.deserialize() {
            let row: CsvRow = row?;
            let witness_generators = row
                .witness_generators
                .split(';')
                .map(|g| g.trim().parse::<u64>())
                .collect::<Result<_, _>>()
                .map_err(|e| SurveyError::InvalidVector(e.to_string()))?;
            entries.push(ProfileEntry {
                m: row.m,
                e: row.e,
                eta: row.eta,
                witness_generators,
                nilsemigroup_count: row.nilsemigroup_count,
                bound_b: row.bound_b,
                stabilized: row.stabilized,
            });
        }
        Ok(Self {
            entries,
            truncated: false,
        })
    }

    /// Text staircase: one block per `m`, one row per `e`.
    pub fn render_text(&self) -> String {
        let mut s = String::new();
        for m in self.multiplicities() {
            let rows: Vec<&ProfileEntry> = self.entries.iter().filter(|r| r.m == m).collect();
            let bound = rows.first().map_or(0, |r| r.bound_b);
            let stab = match rows.first().and_then(|r| r.stabilized) {
                Some(true) => ", stabilized",
                Some(false) => ", not stabilized",
                None => "",
            };
            let _ = writeln!(s, "m = {m} (B = {bound}{stab})");
            let es: BTreeSet<usize> = rows.iter().map(|r| r.e).collect();
            for e in es {
                let etas: Vec<String> = rows
                    .iter()
                    .filter(|r| r.e == e)
                    .map(|r| format!("[{}]", r.eta))
                    .collect();
                let _ = writeln!(s, "  e = {e:>2} | {}", etas.join(" "));
            }
        }
        if self.truncated {
            s.push_str("truncated\n");
        }
        s
    }
}

/// Surveys every multiplicity in `ms`.
pub fn survey(ms: &[u64], config: &SurveyConfig, cancel: &AtomicBool) -> Result<(EtaProfile, Vec<MultiplicitySurvey>), SurveyError> {
    with_pool(config.thread_count(), || {
        let mut surveys = Vec::with_capacity(ms.len());
        let mut stabilized = BTreeMap::new();
        for &m in ms {
            let bound = config.bound_for(m);
            let s = survey_multiplicity(m, bound, cancel)?;
            let stop = s.truncated;
            if config.check_stabilization && !stop {
                let doubled = survey_multiplicity(m, bound * 2, cancel)?;
                if !doubled.truncated {
                    stabilized.insert(m, doubled.achieved() == s.achieved());
                }
            }
            surveys.push(s);
            if stop {
                break;
            }
        }
        let profile = EtaProfile::from_surveys(&surveys, &stabilized, config);
        Ok((profile, surveys))
    })?
}

/// A bound that fails at an achieved `(m, e, η)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundViolation {
    pub kind: BoundKind,
    pub m: u64,
    pub e: usize,
    pub eta: usize,
    pub witness_generators: Vec<u64>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub checked: usize,
    pub violations: Vec<BoundViolation>,
}

impl BoundsReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the lower bound, the small-codimension upper bounds and the
/// complete-intersection multiplicity bound on every profile entry. The
/// bounds depend only on `(m, e, η)`, so checking entries covers every
/// instance behind them.
pub fn verify_bounds(profile: &EtaProfile) -> BoundsReport {
    let mut report = BoundsReport::default();
    for r in &profile.entries {
        report.checked += 1;
        for kind in bounds::violations(r.m, r.e as u64, r.eta as u64) {
            report.violations.push(BoundViolation {
                kind,
                m: r.m,
                e: r.e,
                eta: r.eta,
                witness_generators: r.witness_generators.clone(),
            });
        }
    }
    report
}

/// `η` values achieved at `(m, 4)` that none of the interval, embedding
/// dimension 4 and `η = 3` constructions produce.
pub fn embdim4_uncovered(profile: &EtaProfile, m: u64) -> Vec<usize> {
    use crate::families;
    let mut produced = BTreeSet::new();
    if m >= 4 {
        for s in 0..=(m - 4).min(2) {
            if let Ok(f) = families::interval(4, m - 4, s) {
                produced.insert(f.eta_kunz);
            }
        }
    }
    for eta in profile.achieved(m, 4) {
        if eta >= 6 && families::embdim4(m, eta as u64).is_ok() {
            produced.insert(eta);
        }
    }
    if m >= 8 {
        produced.insert(3);
    }
    profile.achieved(m, 4).into_iter().filter(|h| !produced.contains(h)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coords(m: u64, b: u32) -> Vec<Vec<u32>> {
        enumerate_kunz_vectors(m, b).map(|v| v.x).collect()
    }

    /// Every vector in the box, filtered by the inequalities.
    fn brute(m: u64, b: u32) -> Vec<Vec<u32>> {
        let n = (m - 1) as usize;
        let mut out = Vec::new();
        let mut cur = vec![1u32; n];
        loop {
            if let Ok(v) = KunzVector::new(m, cur.clone()) {
                out.push(v.x);
            }
            let mut i = n;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cur[i] < b {
                    cur[i] += 1;
                    for c in &mut cur[i + 1..] {
                        *c = 1;
                    }
                    break;
                }
            }
        }
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(coords(3, 2), vec![vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]]);
        assert_eq!(coords(2, 3), vec![vec![1], vec![2], vec![3]]);
        for (m, b) in [(4, 4), (5, 3), (6, 3), (7, 2)] {
            assert_eq!(coords(m, b), brute(m, b), "m={m} B={b}");
        }
    }

    #[test]
    fn shards_partition_the_stream() {
        let all = coords(6, 4);
        let sharded: Vec<Vec<u32>> = (1..=4)
            .flat_map(|x1| enumerate_kunz_vectors_from(6, 4, x1).map(|v| v.x))
            .collect();
        assert_eq!(all, sharded);
    }

    #[test]
    fn vector_of_s3() {
        let s = NumericalSemigroup::new(&[10, 22, 23, 24]).unwrap();
        let v = KunzVector::from_semigroup(&s).unwrap();
        assert_eq!(v.coordinates(), &[7, 2, 2, 2, 4, 4, 4, 4, 6]);
        assert!(KunzVector::new(10, v.coordinates().to_vec()).is_ok());
        assert_eq!(semigroup_from_kunz(&v), s);
    }

    #[test]
    fn semigroup_from_vectors() {
        let g = |x: Vec<u32>| semigroup_from_kunz(&KunzVector::new(3, x).unwrap()).generators().to_vec();
        assert_eq!(g(vec![1, 1]), vec![3, 4, 5]);
        assert_eq!(g(vec![2, 2]), vec![3, 7, 8]);
        assert_eq!(g(vec![1, 2]), vec![3, 4]);
        assert!(KunzVector::new(3, vec![1, 3]).is_err());
    }

    #[test]
    fn small_surveys() {
        let never = AtomicBool::new(false);
        let s4 = survey_multiplicity(4, 8, &never).unwrap();
        assert!(s4.achieved().contains(&(4, 6)));
        assert_eq!(s4.instances.iter().filter(|i| i.e == 4).count(), 1);
        let s2 = survey_multiplicity(2, 5, &never).unwrap();
        assert_eq!(s2.achieved(), [(2, 1)].into());
        assert!(stabilization_check(2, 1).unwrap());
        assert!(!stabilization_check(3, 1).unwrap());
    }

    #[test]
    fn bounds_flag_fake_entry() {
        let profile = EtaProfile {
            entries: vec![ProfileEntry {
                m: 12,
                e: 5,
                eta: 4,
                witness_generators: vec![],
                nilsemigroup_count: 1,
                bound_b: 8,
                stabilized: None,
            }],
            truncated: false,
        };
        let report = verify_bounds(&profile);
        assert_eq!(report.violations.len(), 1);
        assert_eq!(report.violations[0].kind, BoundKind::MinimalEta);
    }
}
