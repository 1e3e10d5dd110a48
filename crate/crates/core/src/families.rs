//! Parametric families of numerical semigroups with known `(m, e, η)`.
//!
//! Every constructor checks its hypotheses strictly, builds the generator
//! list from the closed form, insists that list is already minimal, and then
//! verifies `(m, e, η)` through the Kunz nilsemigroup and, for `m ≤ 14`,
//! through the direct factorization scan.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::kunz::{KunzError, KunzNilsemigroup};
use crate::semigroup::{binomial2, glue, Factorizer, NumericalSemigroup, SemigroupError};

/// Largest multiplicity at which the direct oracle also runs.
pub const DIRECT_CHECK_LIMIT: u64 = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Kunz(#[from] KunzError),
    #[error("postcondition failed: {0}")]
    Postcondition(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyName {
    MaxEmbdim,
    Rosales,
    Interval,
    ExtraBetti,
    Eta3,
    Embdim4,
    Extend,
    Fixture,
}

impl FamilyName {
    pub const ALL: [FamilyName; 8] = [
        FamilyName::MaxEmbdim,
        FamilyName::Rosales,
        FamilyName::Interval,
        FamilyName::ExtraBetti,
        FamilyName::Eta3,
        FamilyName::Embdim4,
        FamilyName::Extend,
        FamilyName::Fixture,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyName::MaxEmbdim => "max_embdim",
            FamilyName::Rosales => "rosales",
            FamilyName::Interval => "interval",
            FamilyName::ExtraBetti => "extra_betti",
            FamilyName::Eta3 => "eta3",
            FamilyName::Embdim4 => "embdim4",
            FamilyName::Extend => "extend",
            FamilyName::Fixture => "fixture",
        }
    }
}

impl fmt::Display for FamilyName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyName {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| FamilyError::Hypothesis(format!("unknown family {s:?}")))
    }
}

/// Family name, its parameters and the claimed `(m, e, η)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilySpec {
    pub name: FamilyName,
    pub parameters: BTreeMap<String, u64>,
    pub expected: (u64, usize, usize),
}

/// A verified family member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyMember {
    pub spec: FamilySpec,
    pub semigroup: NumericalSemigroup,
    pub eta_kunz: usize,
    /// `None` above [`DIRECT_CHECK_LIMIT`].
    pub eta_direct: Option<usize>,
    /// Whether every Apéry element has one factorization; recorded only for
    /// the explicit generator lists whose construction relies on it.
    pub apery_unique: Option<bool>,
}

fn hypothesis(ok: bool, what: impl FnOnce() -> String) -> Result<(), FamilyError> {
    if ok {
        Ok(())
    } else {
        Err(FamilyError::Hypothesis(what()))
    }
}

fn params(pairs: &[(&str, u64)]) -> BTreeMap<String, u64> {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest prime strictly greater than `n`.
pub fn next_prime(n: u64) -> u64 {
    let mut p = n + 1;
    while !is_prime(p) {
        p += 1;
    }
    p
}

/// Every Apéry element has a single factorization.
pub fn apery_factorizations_unique(s: &NumericalSemigroup) -> bool {
    let ap = s.apery_set();
    let fz = Factorizer::new(s.generators(), ap.max());
    ap.elements().iter().all(|&a| fz.factorizations(a).len() == 1)
}

fn finish(spec: FamilySpec, raw: &[u64], apery_unique: bool) -> Result<FamilyMember, FamilyError> {
    let s = NumericalSemigroup::canonicalize(raw)?;
    let mut sorted = raw.to_vec();
    sorted.sort_unstable();
    if sorted != s.generators() {
        return Err(FamilyError::Postcondition(format!(
            "generator list {raw:?} is not minimal; minimal generators are {s}"
        )));
    }
    let (m, e, eta) = spec.expected;
    if s.multiplicity() != m || s.embedding_dimension() != e {
        return Err(FamilyError::Postcondition(format!(
            "{s} has (m, e) = ({}, {}), expected ({m}, {e})",
            s.multiplicity(),
            s.embedding_dimension()
        )));
    }
    let eta_kunz = KunzNilsemigroup::from_semigroup(&s)?.eta().eta;
    if eta_kunz != eta {
        return Err(FamilyError::Postcondition(format!("{s} has eta {eta_kunz} via Kunz, expected {eta}")));
    }
    let eta_direct = if m <= DIRECT_CHECK_LIMIT {
        let d = s.eta_direct()?;
        if d != eta {
            return Err(FamilyError::Postcondition(format!("{s} has eta {d} via direct scan, expected {eta}")));
        }
        Some(d)
    } else {
        None
    };
    let apery_unique = apery_unique.then(|| apery_factorizations_unique(&s));
    Ok(FamilyMember {
        spec,
        semigroup: s,
        eta_kunz,
        eta_direct,
        apery_unique,
    })
}

/// `⟨m, m+1, …, 2m−1⟩` with `η = C(m,2)`.
pub fn max_embdim(m: u64) -> Result<FamilyMember, FamilyError> {
    hypothesis(m >= 2, || format!("m = {m} < 2"))?;
    let raw: Vec<u64> = (m..2 * m).collect();
    let spec = FamilySpec {
        name: FamilyName::MaxEmbdim,
        parameters: params(&[("m", m)]),
        expected: (m, m as usize, binomial2(m) as usize),
    };
    finish(spec, &raw, false)
}

/// `⟨m, m+1, (r+1)m+(r+2), …, (r+1)m+(m−1)⟩` with `η = C(e,2)`.
///
/// With coefficient `r+2` the first extra generator would be `(r+2)(m+1)`,
/// so the list would never be minimal; `r+1` keeps every residue's Apéry
/// element below the matching multiple of `m+1` and gives `⟨m, …, 2m−1⟩` at
/// `r = 0`.
pub fn rosales(m: u64, e: u64) -> Result<FamilyMember, FamilyError> {
    hypothesis(e >= 3, || format!("e = {e} < 3"))?;
    hypothesis(e <= m, || format!("e = {e} > m = {m}"))?;
    let r = m - e;
    let mut raw = vec![m, m + 1];
    raw.extend((r + 2..m).map(|i| (r + 1) * m + i));
    let spec = FamilySpec {
        name: FamilyName::Rosales,
        parameters: params(&[("m", m), ("e", e)]),
        expected: (m, e as usize, binomial2(e) as usize),
    };
    finish(spec, &raw, false)
}

/// Multiplicity `e + r`, embedding dimension `e` and `η = C(e,2) − s`.
pub fn interval(e: u64, r: u64, s: u64) -> Result<FamilyMember, FamilyError> {
    hypothesis(e >= 4, || format!("e = {e} < 4"))?;
    hypothesis(s <= e - 2, || format!("s = {s} > e - 2 = {}", e - 2))?;
    hypothesis(s <= r, || format!("s = {s} > r = {r}"))?;
    let m = e + r;
    let spec = FamilySpec {
        name: FamilyName::Interval,
        parameters: params(&[("e", e), ("r", r), ("s", s)]),
        expected: (m, e as usize, (binomial2(e) - s) as usize),
    };
    if s == e - 2 {
        let t = NumericalSemigroup::new(&(e - 1..=2 * e - 3).collect::<Vec<_>>())?;
        // m ≥ 2e − 2 should make m a non-atom of t; glue re-checks it.
        let q = next_prime(m);
        let glued = glue(&t, &NumericalSemigroup::naturals(), m, q)?;
        // Apéry elements of a gluing can factor several ways; only the
        // explicit list below has unique Apéry factorizations.
        return finish(spec, glued.generators(), false);
    }
    let mut raw = vec![m, 4 * m - 1, (2 * r - 2 * s + 3) * m + (s + 1)];
    raw.extend((1..=s).map(|i| (2 * r - 2 * s + 4) * m + i));
    raw.extend((2 * s + 2..=e + s - 2).map(|j| (4 * r - 4 * s + 5) * m + j));
    finish(spec, &raw, true)
}

/// `⟨m, 2m−1, (r−1)m+2, (2r−2)m+i : i ∈ {3} ∪ [5, e]⟩` with `η = C(e,2) + 1`.
pub fn extra_betti(e: u64, r: u64) -> Result<FamilyMember, FamilyError> {
    hypothesis(e >= 5, || format!("e = {e} < 5"))?;
    hypothesis(r >= 3, || format!("r = {r} < 3"))?;
    let m = e + r;
    let mut raw = vec![m, 2 * m - 1, (r - 1) * m + 2, (2 * r - 2) * m + 3];
    raw.extend((5..=e).map(|i| (2 * r - 2) * m + i));
    let spec = FamilySpec {
        name: FamilyName::ExtraBetti,
        parameters: params(&[("e", e), ("r", r)]),
        expected: (m, e as usize, binomial2(e) as usize + 1),
    };
    finish(spec, &raw, true)
}

/// `m·ℤ≥0 + a·⟨4,5,6⟩` with `a` the smallest prime above `m`; `(m, 4, 3)`.
pub fn eta3(m: u64) -> Result<FamilyMember, FamilyError> {
    hypothesis(m >= 8, || format!("m = {m} < 8"))?;
    let a = next_prime(m);
    let glued = glue(&NumericalSemigroup::new(&[4, 5, 6])?, &NumericalSemigroup::naturals(), m, a)?;
    let spec = FamilySpec {
        name: FamilyName::Eta3,
        parameters: params(&[("m", m), ("a", a)]),
        expected: (m, 4, 3),
    };
    finish(spec, glued.generators(), false)
}

/// Embedding dimension 4 with any `η ≥ 6` once `4m ≥ (η−2)²`.
pub fn embdim4(m: u64, eta: u64) -> Result<FamilyMember, FamilyError> {
    hypothesis(eta >= 6, || format!("eta = {eta} < 6"))?;
    hypothesis(4 * m >= (eta - 2) * (eta - 2), || {
        format!("4m = {} < (eta - 2)^2 = {}", 4 * m, (eta - 2) * (eta - 2))
    })?;
    let (raw, k) = if eta.is_multiple_of(2) {
        let k = (eta - 4) / 2;
        let c = m - k * k - k;
        (vec![m, (k + 1) * m - 1, c * m + k, c * m + k + 1], k)
    } else {
        let k = (eta - 3) / 2;
        let c = m - k * k - 1;
        (vec![m, k * m - 1, c * m + k, c * m + k + 1], k)
    };
    let spec = FamilySpec {
        name: FamilyName::Embdim4,
        parameters: params(&[("m", m), ("eta", eta), ("k", k)]),
        expected: (m, 4, eta as usize),
    };
    finish(spec, &raw, true)
}

/// `m·ℤ≥0 + (m+1)·S′`, raising `e` and `η` by one with multiplicity `m`.
pub fn extend_eta(base: &NumericalSemigroup, m: u64) -> Result<FamilyMember, FamilyError> {
    let f = if base.multiplicity() == 1 { 0 } else { base.frobenius()? };
    // f(ℤ≥0) = −1
    let threshold = (base.multiplicity() + f).saturating_sub(u64::from(base.multiplicity() == 1));
    hypothesis(m >= threshold, || format!("m = {m} < m(S') + f(S') = {threshold}"))?;
    hypothesis(m >= 2, || format!("m = {m} < 2"))?;
    let base_eta = if base.multiplicity() == 1 {
        0
    } else {
        KunzNilsemigroup::from_semigroup(base)?.eta().eta
    };
    let glued = glue(&NumericalSemigroup::naturals(), base, m + 1, m).map_err(|err| match err {
        SemigroupError::InvalidGluing(why) => FamilyError::Hypothesis(why),
        other => other.into(),
    })?;
    let mut parameters = params(&[("m", m)]);
    for (i, g) in base.generators().iter().enumerate() {
        parameters.insert(format!("base{i}"), *g);
    }
    let spec = FamilySpec {
        name: FamilyName::Extend,
        parameters,
        expected: (m, base.embedding_dimension() + 1, base_eta + 1),
    };
    finish(spec, glued.generators(), false)
}

/// `⟨7, 15, 17, 33⟩`, whose nilsemigroup has two outer Betti elements with
/// the same support.
pub fn fixture_extra_betti_e4() -> Result<FamilyMember, FamilyError> {
    let spec = FamilySpec {
        name: FamilyName::Fixture,
        parameters: BTreeMap::new(),
        expected: (7, 4, 7),
    };
    finish(spec, &[7, 15, 17, 33], false)
}
