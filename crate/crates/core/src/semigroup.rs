//! Numerical semigroups given by generators.
//!
//! Everything here works on exact 64-bit integers with checked arithmetic:
//! canonical minimal generators, Apéry sets via shortest paths on `ℤ_m`,
//! membership, factorization sets and their support graphs, and the direct
//! minimal presentation obtained by scanning factorization graphs. The
//! direct presentation is deliberately independent of the nilsemigroup code
//! in [`crate::kunz`] so that each can check the other.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph;

/// Largest multiplicity accepted. The Apéry set is stored densely.
pub const MAX_MULTIPLICITY: u64 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("empty generator list")]
    Empty,
    #[error("generators must be positive integers")]
    NonPositive,
    #[error("not cofinite: generators share the factor {0}")]
    NotCofinite(u64),
    #[error("multiplicity {0} exceeds the supported maximum")]
    TooLarge(u64),
    #[error("no gaps: the semigroup is all of the nonnegative integers")]
    NoGaps,
    #[error("{0} is not an element of the semigroup")]
    NotMember(u64),
    #[error("invalid gluing: {0}")]
    InvalidGluing(String),
    #[error("exponent vector {exponents:?} does not factor {element}")]
    BadFactorization { exponents: Vec<u32>, element: u64 },
    #[error("integer overflow")]
    Overflow,
    #[error("postcondition failed: {0}")]
    Postcondition(String),
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn binomial2(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

/// Exponent vector over a fixed list of generators.
///
/// Ordering is lexicographic on the exponents, which is the enumeration
/// order used everywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Factorization(Vec<u32>);

impl Factorization {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn zero(width: usize) -> Self {
        Self(vec![0; width])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn into_exponents(self) -> Vec<u32> {
        self.0
    }

    pub fn width(&self) -> usize {
        self.0.len()
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &z)| z > 0)
            .map(|(i, _)| i)
    }

    pub fn length(&self) -> u64 {
        self.0.iter().map(|&z| u64::from(z)).sum()
    }

    pub fn shares_support(&self, other: &Factorization) -> bool {
        self.0.iter().zip(&other.0).any(|(&a, &b)| a > 0 && b > 0)
    }

    /// `self + e_i`.
    pub fn plus_unit(&self, i: usize) -> Self {
        let mut v = self.0.clone();
        v[i] += 1;
        Self(v)
    }

    /// `self - e_i`, or `None` when coordinate `i` is zero.
    pub fn minus_unit(&self, i: usize) -> Option<Self> {
        if self.0[i] == 0 {
            return None;
        }
        let mut v = self.0.clone();
        v[i] -= 1;
        Some(Self(v))
    }

    /// Zero vector of `width` with coordinate `k` of `self` at `placement[k]`.
    pub(crate) fn embed(&self, width: usize, placement: &[usize]) -> Self {
        let mut v = vec![0; width];
        for (k, &z) in self.0.iter().enumerate() {
            v[placement[k]] = z;
        }
        Self(v)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, z) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{z}")?;
        }
        write!(f, ")")
    }
}

/// A pair of distinct factorizations of the same element.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Trade {
    pub left: Factorization,
    pub right: Factorization,
    pub element: u64,
}

/// A set of trades together with the Betti elements they occur at.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalPresentation {
    pub trades: Vec<Trade>,
    pub betti_elements: Vec<u64>,
    pub eta: usize,
}

impl MinimalPresentation {
    pub fn from_trades(mut trades: Vec<Trade>) -> Self {
        trades.sort();
        let betti: BTreeSet<u64> = trades.iter().map(|t| t.element).collect();
        Self {
            eta: trades.len(),
            betti_elements: betti.into_iter().collect(),
            trades,
        }
    }

    /// Number of trades occurring at `n`.
    pub fn trades_at(&self, n: u64) -> usize {
        self.trades.iter().filter(|t| t.element == n).count()
    }
}

/// `Ap(S) = (a_0, …, a_{m-1})` with `a_i ≡ i (mod m)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AperySet(Vec<u64>);

impl AperySet {
    pub fn elements(&self) -> &[u64] {
        &self.0
    }

    pub fn multiplicity(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, residue: usize) -> u64 {
        self.0[residue]
    }

    pub fn max(&self) -> u64 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn contains_value(&self, n: u64) -> bool {
        let m = self.0.len() as u64;
        self.0[(n % m) as usize] == n
    }
}

/// Shortest-path distances from 0 on `ℤ_m` with arcs `i → i + g` of weight
/// `g`. Unreachable classes stay at `u64::MAX`.
fn residue_distances(m: u64, gens: &[u64]) -> Result<Vec<u64>, SemigroupError> {
    let m_us = m as usize;
    let mut dist = vec![u64::MAX; m_us];
    dist[0] = 0;
    let steps: Vec<u64> = gens.iter().copied().filter(|g| g % m != 0).collect();
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0u64, 0usize)));
    while let Some(Reverse((d, v))) = heap.pop() {
        if d > dist[v] {
            continue;
        }
        for &g in &steps {
            let nd = d.checked_add(g).ok_or(SemigroupError::Overflow)?;
            let w = ((v as u64 + g % m) % m) as usize;
            if nd < dist[w] {
                dist[w] = nd;
                heap.push(Reverse((nd, w)));
            }
        }
    }
    Ok(dist)
}

/// A numerical semigroup stored by its minimal generators (ascending), with
/// the Apéry set with respect to the multiplicity cached.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    apery: Vec<u64>,
}

impl NumericalSemigroup {
    /// Minimal generating set of the semigroup generated by `raw`.
    pub fn new(raw: &[u64]) -> Result<Self, SemigroupError> {
        Self::canonicalize(raw)
    }

    pub fn canonicalize(raw: &[u64]) -> Result<Self, SemigroupError> {
        if raw.is_empty() {
            return Err(SemigroupError::Empty);
        }
        if raw.contains(&0) {
            return Err(SemigroupError::NonPositive);
        }
        let mut sorted = raw.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let g = sorted.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(SemigroupError::NotCofinite(g));
        }
        let m = sorted[0];
        if m > MAX_MULTIPLICITY {
            return Err(SemigroupError::TooLarge(m));
        }
        // A generator can only be a combination of strictly smaller ones.
        let mut kept = vec![m];
        let mut dist = residue_distances(m, &kept)?;
        for &g in &sorted[1..] {
            if dist[(g % m) as usize] <= g {
                continue;
            }
            kept.push(g);
            dist = residue_distances(m, &kept)?;
        }
        debug_assert!(dist.iter().all(|&d| d != u64::MAX));
        Ok(Self {
            generators: kept,
            apery: dist,
        })
    }

    /// The semigroup `ℤ_{≥0} = ⟨1⟩`.
    pub fn naturals() -> Self {
        Self {
            generators: vec![1],
            apery: vec![0],
        }
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    /// Embedding codimension `m - e`.
    pub fn codimension(&self) -> u64 {
        self.multiplicity() - self.embedding_dimension() as u64
    }

    pub fn is_atom(&self, n: u64) -> bool {
        self.generators.binary_search(&n).is_ok()
    }

    pub fn apery_set(&self) -> AperySet {
        AperySet(self.apery.clone())
    }

    pub(crate) fn apery_slice(&self) -> &[u64] {
        &self.apery
    }

    pub fn contains(&self, n: u64) -> bool {
        let m = self.multiplicity();
        n >= self.apery[(n % m) as usize]
    }

    /// Largest integer not in `S`.
    pub fn frobenius(&self) -> Result<u64, SemigroupError> {
        if self.multiplicity() == 1 {
            return Err(SemigroupError::NoGaps);
        }
        let max = self.apery.iter().copied().max().unwrap_or(0);
        Ok(max - self.multiplicity())
    }

    /// `φ_S(z)`.
    pub fn evaluate(&self, z: &Factorization) -> Result<u64, SemigroupError> {
        if z.width() != self.generators.len() {
            return Err(SemigroupError::BadFactorization {
                exponents: z.exponents().to_vec(),
                element: 0,
            });
        }
        z.exponents()
            .iter()
            .zip(&self.generators)
            .try_fold(0u64, |acc, (&c, &g)| {
                u64::from(c)
                    .checked_mul(g)
                    .and_then(|t| acc.checked_add(t))
                    .ok_or(SemigroupError::Overflow)
            })
    }

    /// Builds a factorization of `element`, checking that it evaluates correctly.
    pub fn factorization(&self, exponents: Vec<u32>, element: u64) -> Result<Factorization, SemigroupError> {
        let z = Factorization::new(exponents);
        match self.evaluate(&z) {
            Ok(v) if v == element => Ok(z),
            _ => Err(SemigroupError::BadFactorization {
                exponents: z.into_exponents(),
                element,
            }),
        }
    }

    /// `Z_S(n)` in ascending lexicographic order; empty iff `n ∉ S`.
    pub fn factorizations(&self, n: u64) -> Vec<Factorization> {
        Factorizer::new(&self.generators, n).factorizations(n)
    }

    pub fn factorization_graph(&self, n: u64) -> Result<FactorizationGraph, SemigroupError> {
        if !self.contains(n) {
            return Err(SemigroupError::NotMember(n));
        }
        Ok(FactorizationGraph::new(n, self.factorizations(n)))
    }

    /// Bound on Betti elements: `max Ap(S) + max generator`.
    pub fn betti_candidate_bound(&self) -> Result<u64, SemigroupError> {
        let max_ap = self.apery.iter().copied().max().unwrap_or(0);
        let max_gen = *self.generators.last().expect("nonempty");
        max_ap.checked_add(max_gen).ok_or(SemigroupError::Overflow)
    }

    /// Minimal presentation by scanning factorization graphs up to
    /// [`Self::betti_candidate_bound`].
    pub fn minimal_presentation_direct(&self) -> Result<MinimalPresentation, SemigroupError> {
        self.minimal_presentation_up_to(self.betti_candidate_bound()?)
    }

    /// Same scan with an explicit candidate bound.
    pub fn minimal_presentation_up_to(&self, bound: u64) -> Result<MinimalPresentation, SemigroupError> {
        let fz = Factorizer::new(&self.generators, bound);
        let mut trades = Vec::new();
        for n in 1..=bound {
            // ∇_n is connected unless at least two generators divide n in S.
            let dividing = self
                .generators
                .iter()
                .filter(|&&g| g <= n && self.contains(n - g))
                .count();
            if dividing < 2 {
                continue;
            }
            let graph = FactorizationGraph::new(n, fz.factorizations(n));
            for (left, right) in graph::canonical_pairs(&graph.components) {
                trades.push(Trade {
                    left,
                    right,
                    element: n,
                });
            }
        }
        Ok(MinimalPresentation::from_trades(trades))
    }

    /// `η(S)` through the direct scan.
    pub fn eta_direct(&self) -> Result<usize, SemigroupError> {
        Ok(self.minimal_presentation_direct()?.eta)
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

/// Enumerates factorizations of values up to a fixed bound.
///
/// `reach[i][v]` records whether `v` is a combination of `gens[i..]`, so the
/// lexicographic DFS never enters a dead prefix.
pub struct Factorizer<'a> {
    gens: &'a [u64],
    bound: u64,
    reach: Vec<Vec<bool>>,
}

impl<'a> Factorizer<'a> {
    pub fn new(gens: &'a [u64], bound: u64) -> Self {
        let k = gens.len();
        let size = bound as usize + 1;
        let mut reach = vec![vec![false; size]; k + 1];
        reach[k][0] = true;
        for i in (0..k).rev() {
            let g = gens[i] as usize;
            let (head, tail) = reach.split_at_mut(i + 1);
            let row = &mut head[i];
            let next = &tail[0];
            for v in 0..size {
                row[v] = next[v] || (v >= g && row[v - g]);
            }
        }
        Self { gens, bound, reach }
    }

    pub fn factorizations(&self, n: u64) -> Vec<Factorization> {
        assert!(n <= self.bound, "value {n} above factorizer bound {}", self.bound);
        let mut out = Vec::new();
        if !self.reach[0][n as usize] {
            return out;
        }
        let mut cur = vec![0u32; self.gens.len()];
        self.dfs(0, n, &mut cur, &mut out);
        out
    }

    /// Lex-smallest factorization of `n`, if any.
    pub fn first(&self, n: u64) -> Option<Factorization> {
        if n > self.bound || !self.reach[0][n as usize] {
            return None;
        }
        let mut cur = vec![0u32; self.gens.len()];
        let mut rem = n;
        for i in 0..self.gens.len() {
            let g = self.gens[i];
            let mut c = 0;
            while !self.reach[i + 1][(rem - c * g) as usize] {
                c += 1;
            }
            cur[i] = c as u32;
            rem -= c * g;
        }
        Some(Factorization::new(cur))
    }

    fn dfs(&self, i: usize, rem: u64, cur: &mut [u32], out: &mut Vec<Factorization>) {
        let g = self.gens[i];
        if i + 1 == self.gens.len() {
            if rem.is_multiple_of(g) {
                cur[i] = (rem / g) as u32;
                out.push(Factorization::new(cur.to_vec()));
                cur[i] = 0;
            }
            return;
        }
        let mut c = 0u64;
        while c * g <= rem {
            let r = rem - c * g;
            if self.reach[i + 1][r as usize] {
                cur[i] = c as u32;
                self.dfs(i + 1, r, cur, out);
            }
            c += 1;
        }
        cur[i] = 0;
    }
}

/// `∇_n`: factorizations of `n` joined when their supports meet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationGraph {
    pub element: u64,
    pub factorizations: Vec<Factorization>,
    pub components: Vec<Vec<Factorization>>,
}

impl FactorizationGraph {
    fn new(element: u64, factorizations: Vec<Factorization>) -> Self {
        let components = graph::component_lists(&factorizations);
        Self {
            element,
            factorizations,
            components,
        }
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let f = &self.factorizations;
        let mut out = Vec::new();
        for i in 0..f.len() {
            for j in i + 1..f.len() {
                if f[i].shares_support(&f[j]) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn is_betti(&self) -> bool {
        self.components.len() >= 2
    }
}

/// The gluing `T = a'·S + a·S'`.
///
/// Requires `a ∈ S` and `a' ∈ S'` to be positive non-atoms with
/// `gcd(a, a') = 1`. Checks `e(T) = e(S) + e(S')`, `m(T)` and
/// `η(T) = η(S) + η(S') + 1` on the result.
///
/// The multiplicity of `T` is the *minimum* of `a'·m(S)` and `a·m(S')`; the
/// smallest element of a union of generating sets is its smallest member.
pub fn glue(
    s: &NumericalSemigroup,
    s2: &NumericalSemigroup,
    a: u64,
    a2: u64,
) -> Result<NumericalSemigroup, SemigroupError> {
    let check = |sg: &NumericalSemigroup, x: u64, name: &str| -> Result<(), SemigroupError> {
        if x == 0 || !sg.contains(x) {
            return Err(SemigroupError::InvalidGluing(format!("{name} = {x} is not a nonzero element of {sg}")));
        }
        if sg.is_atom(x) {
            return Err(SemigroupError::InvalidGluing(format!("{name} = {x} is an atom of {sg}")));
        }
        Ok(())
    };
    check(s, a, "a")?;
    check(s2, a2, "a'")?;
    if gcd(a, a2) != 1 {
        return Err(SemigroupError::InvalidGluing(format!("gcd({a}, {a2}) != 1")));
    }
    let mut raw = Vec::with_capacity(s.embedding_dimension() + s2.embedding_dimension());
    for &g in s.generators() {
        raw.push(g.checked_mul(a2).ok_or(SemigroupError::Overflow)?);
    }
    for &g in s2.generators() {
        raw.push(g.checked_mul(a).ok_or(SemigroupError::Overflow)?);
    }
    let t = NumericalSemigroup::canonicalize(&raw)?;

    if t.embedding_dimension() != s.embedding_dimension() + s2.embedding_dimension() {
        return Err(SemigroupError::Postcondition(format!(
            "gluing {t} has embedding dimension {}, expected {}",
            t.embedding_dimension(),
            s.embedding_dimension() + s2.embedding_dimension()
        )));
    }
    let m = (a2 * s.multiplicity()).min(a * s2.multiplicity());
    if t.multiplicity() != m {
        return Err(SemigroupError::Postcondition(format!(
            "gluing {t} has multiplicity {}, expected {m}",
            t.multiplicity()
        )));
    }
    let eta = |x: &NumericalSemigroup| if x.multiplicity() == 1 { Ok(0) } else { x.eta_direct() };
    let expected = eta(s)? + eta(s2)? + 1;
    let got = eta(&t)?;
    if got != expected {
        return Err(SemigroupError::Postcondition(format!(
            "gluing {t} has eta {got}, expected {expected}"
        )));
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(g: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::new(g).unwrap()
    }

    /// Membership by brute-force subset sums, independent of the Apéry route.
    fn member_brute(gens: &[u64], limit: u64) -> Vec<bool> {
        let mut r = vec![false; limit as usize + 1];
        r[0] = true;
        for v in 1..=limit as usize {
            r[v] = gens.iter().any(|&g| v >= g as usize && r[v - g as usize]);
        }
        r
    }

    #[test]
    fn canonicalize_examples() {
        let s = sg(&[6, 9, 20]);
        assert_eq!(s.generators(), &[6, 9, 20]);
        assert_eq!((s.multiplicity(), s.embedding_dimension(), s.codimension()), (6, 3, 3));

        // 28 = 14 + 14
        let s2 = sg(&[8, 9, 28, 14, 15]);
        assert_eq!(s2.generators(), &[8, 9, 14, 15]);
        assert!(member_brute(&[8, 9, 14, 15], 28)[28]);

        assert_eq!(NumericalSemigroup::new(&[4, 6]), Err(SemigroupError::NotCofinite(2)));
        assert_eq!(NumericalSemigroup::new(&[]), Err(SemigroupError::Empty));
        assert_eq!(NumericalSemigroup::new(&[0, 3]), Err(SemigroupError::NonPositive));
        assert_eq!(sg(&[5, 1, 7]).generators(), &[1]);
    }

    #[test]
    fn membership_examples() {
        assert!(sg(&[10, 22, 23, 24]).contains(46));
        assert!(!sg(&[6, 9, 20]).contains(43));
        assert!(sg(&[6, 9, 20]).contains(0));
    }

    #[test]
    fn apery_examples() {
        assert_eq!(sg(&[10, 22, 23, 24]).apery_set().elements(), &[0, 71, 22, 23, 24, 45, 46, 47, 48, 69]);
        assert_eq!(sg(&[6, 7, 8, 9, 10, 11]).apery_set().elements(), &[0, 7, 8, 9, 10, 11]);
        // Brute-force oracle: least member per residue class.
        let member = member_brute(&[6, 9, 20], 200);
        let oracle: Vec<u64> = (0..6u64)
            .map(|i| (0..=200u64).find(|&n| n % 6 == i && member[n as usize]).unwrap())
            .collect();
        assert_eq!(oracle, vec![0, 49, 20, 9, 40, 29]);
        assert_eq!(sg(&[6, 9, 20]).apery_set().elements(), oracle.as_slice());
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(sg(&[6, 9, 20]).frobenius(), Ok(43));
        assert_eq!(sg(&[6, 7, 8, 9, 10, 11]).frobenius(), Ok(5));
        let member = member_brute(&[4, 5, 6], 50);
        let brute = (0..=50).rev().find(|&n| !member[n]).unwrap() as u64;
        assert_eq!(brute, 7);
        assert_eq!(sg(&[4, 5, 6]).frobenius(), Ok(brute));
        assert_eq!(NumericalSemigroup::naturals().frobenius(), Err(SemigroupError::NoGaps));
    }

    #[test]
    fn factorization_examples() {
        let f = |v: Vec<u32>| Factorization::new(v);
        assert_eq!(sg(&[6, 9, 20]).factorizations(18), vec![f(vec![0, 2, 0]), f(vec![3, 0, 0])]);
        assert_eq!(
            sg(&[10, 22, 23, 24]).factorizations(46),
            vec![f(vec![0, 0, 2, 0]), f(vec![0, 1, 0, 1])]
        );
        assert_eq!(sg(&[6, 9, 20]).factorizations(0), vec![f(vec![0, 0, 0])]);
        assert!(sg(&[6, 9, 20]).factorizations(43).is_empty());
    }

    #[test]
    fn factorization_checked_construction() {
        let s = sg(&[6, 9, 20]);
        assert!(s.factorization(vec![4, 4, 0], 60).is_ok());
        // 4·6 + 4·7 is not a factorization of 60 over ⟨6,9,20⟩.
        assert!(s.factorization(vec![4, 0, 0], 60).is_err());
    }

    #[test]
    fn factorization_graph_examples() {
        let g = sg(&[10, 22, 23, 24]).factorization_graph(46).unwrap();
        assert_eq!(g.components.len(), 2);
        assert!(g.is_betti());

        let g = sg(&[6, 7, 8, 9]).factorization_graph(25).unwrap();
        assert_eq!(g.factorizations.len(), 3);
        assert_eq!(g.components.len(), 1);
        assert!(!g.is_betti());

        let g = sg(&[6, 7, 8, 9]).factorization_graph(6).unwrap();
        assert_eq!(g.factorizations.len(), 1);
        assert!(!g.is_betti());

        assert_eq!(
            sg(&[6, 9, 20]).factorization_graph(43),
            Err(SemigroupError::NotMember(43))
        );
    }

    #[test]
    fn direct_presentation_examples() {
        let p = sg(&[6, 9, 20]).minimal_presentation_direct().unwrap();
        assert_eq!(p.eta, 2);
        assert_eq!(p.betti_elements, vec![18, 60]);
        // The 60 trade uses 4·6 + 4·9; the other component is (0,0,3).
        let g60 = sg(&[6, 9, 20]).factorization_graph(60).unwrap();
        assert!(g60.factorizations.contains(&Factorization::new(vec![4, 4, 0])));
        assert!(g60.factorizations.contains(&Factorization::new(vec![0, 0, 3])));

        let p = sg(&[10, 22, 23, 24]).minimal_presentation_direct().unwrap();
        assert_eq!(p.eta, 4);
        assert_eq!(p.betti_elements, vec![44, 46, 70, 72]);

        for m in 2..12 {
            assert_eq!(sg(&[m, m + 1]).eta_direct().unwrap(), 1);
        }
    }

    #[test]
    fn max_embedding_dimension_law() {
        for m in 3..=9u64 {
            let gens: Vec<u64> = (m..2 * m).collect();
            assert_eq!(sg(&gens).eta_direct().unwrap() as u64, binomial2(m));
        }
    }

    #[test]
    fn glue_examples() {
        let t = glue(&NumericalSemigroup::naturals(), &sg(&[4, 5, 6]), 11, 8).unwrap();
        assert_eq!(t.generators(), &[8, 44, 55, 66]);
        assert_eq!(t.eta_direct().unwrap(), 3);

        let t = glue(&sg(&[2, 3]), &NumericalSemigroup::naturals(), 5, 2).unwrap();
        assert_eq!(t.generators(), &[4, 5, 6]);
        assert_eq!(t.eta_direct().unwrap(), 2);

        assert!(matches!(
            glue(&sg(&[2, 3]), &NumericalSemigroup::naturals(), 3, 2),
            Err(SemigroupError::InvalidGluing(_))
        ));
        assert!(matches!(
            glue(&sg(&[2, 3]), &NumericalSemigroup::naturals(), 4, 2),
            Err(SemigroupError::InvalidGluing(_))
        ));
        assert!(matches!(
            glue(&sg(&[3, 5]), &NumericalSemigroup::naturals(), 1, 2),
            Err(SemigroupError::InvalidGluing(_))
        ));
    }

    #[test]
    fn complete_intersections_from_iterated_gluing() {
        // ⟨2,3⟩ → glue with ℤ≥0 repeatedly; each step adds one generator and one trade.
        let mut s = sg(&[2, 3]);
        for a2 in 2u64..5 {
            let a = (s.frobenius().unwrap() + 1..).find(|x| gcd(*x, a2) == 1 && !s.is_atom(*x)).unwrap();
            let t = glue(&s, &NumericalSemigroup::naturals(), a, a2).unwrap();
            assert_eq!(t.eta_direct().unwrap(), t.embedding_dimension() - 1);
            s = t;
        }
    }

    #[test]
    fn doubled_betti_bound_is_stable() {
        for g in [&[6u64, 9, 20][..], &[10, 22, 23, 24], &[6, 7, 8, 9], &[7, 15, 17, 33], &[5, 6, 13]] {
            let s = sg(g);
            let b = s.betti_candidate_bound().unwrap();
            assert_eq!(s.minimal_presentation_up_to(b).unwrap(), s.minimal_presentation_up_to(2 * b).unwrap());
        }
    }
}
