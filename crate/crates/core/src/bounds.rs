//! Known inequalities between `m`, `e` and `η`, as pure predicates.

use std::fmt;

use serde::Serialize;

use crate::semigroup::binomial2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    /// `η ≥ C(e,2) − r`.
    Lower,
    /// `η ≤ C(e,2)` when `r ≤ 2`, `η ≤ C(e,2) + 1` when `r = 3`.
    SmallCodimension,
    /// `η = e − 1` forces `m ≥ 2^(e−1)`.
    MinimalEta,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundKind::Lower => "eta >= C(e,2) - r",
            BoundKind::SmallCodimension => "eta <= C(e,2) (+1 when r = 3)",
            BoundKind::MinimalEta => "eta = e - 1 implies m >= 2^(e-1)",
        })
    }
}

/// `C(e,2) − r`, which may be negative for tiny `e`.
pub fn lower_bound(m: u64, e: u64) -> i64 {
    binomial2(e) as i64 - (m as i64 - e as i64)
}

/// Upper bound on `η` known for codimension at most 3.
pub fn upper_bound(m: u64, e: u64) -> Option<u64> {
    match m.checked_sub(e)? {
        0..=2 => Some(binomial2(e)),
        3 => Some(binomial2(e) + 1),
        _ => None,
    }
}

/// Every bound that `(m, e, η)` violates.
pub fn violations(m: u64, e: u64, eta: u64) -> Vec<BoundKind> {
    let mut out = Vec::new();
    if (eta as i64) < lower_bound(m, e) {
        out.push(BoundKind::Lower);
    }
    if upper_bound(m, e).is_some_and(|u| eta > u) {
        out.push(BoundKind::SmallCodimension);
    }
    if e >= 1 && eta == e - 1 && (e > 64 || m < 1u64 << (e - 1)) {
        out.push(BoundKind::MinimalEta);
    }
    out
}
