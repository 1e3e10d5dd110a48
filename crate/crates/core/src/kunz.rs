//! Kunz nilsemigroups, their posets, factorizations and outer Betti elements.
//!
//! A [`KunzNilsemigroup`] is a finite partly cancellative nilsemigroup stored
//! as a dense addition table on its non-nil elements. Elements are addressed
//! by index `0..m`, index `0` is the identity, and each index carries a
//! display label (the residue class mod `m` for nilsemigroups coming from a
//! numerical semigroup). Sums landing on nil are `None`.
//!
//! Exponent vectors are taken over the atoms in ascending label order.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;
use std::sync::{Arc, OnceLock};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;
use thiserror::Error;

use crate::graph::{self, UnionFind};
use crate::semigroup::{Factorization, Factorizer, MinimalPresentation, NumericalSemigroup, SemigroupError, Trade};

const NIL: u16 = u16::MAX;

/// Tables up to this size get the exhaustive associativity check.
pub const FULL_ASSOCIATIVITY_LIMIT: usize = 64;
const ASSOCIATIVITY_SAMPLES: usize = 200_000;
const ASSOCIATIVITY_SEED: u64 = 0x6b75_6e7a;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KunzError {
    #[error("addition table must be {expected}x{expected}")]
    Dimension { expected: usize },
    #[error("table entry ({p}, {q}) = {value} is out of range")]
    EntryOutOfRange { p: usize, q: usize, value: usize },
    #[error("no identity: 0 + {p} != {p}")]
    NoIdentity { p: usize },
    #[error("nil is not absorbing at ({p}, {q})")]
    NilNotAbsorbing { p: usize, q: usize },
    #[error("not commutative: {p} + {q} != {q} + {p}")]
    NotCommutative { p: usize, q: usize },
    #[error("not associative at ({p}, {q}, {r})")]
    NotAssociative { p: usize, q: usize, r: usize },
    #[error("not partly cancellative: {a} + {b} = {a} + {c} is non-nil with {b} != {c}")]
    NotPartlyCancellative { a: usize, b: usize, c: usize },
    #[error("element {p} is not nilpotent")]
    NotNilpotent { p: usize },
    #[error("declared atoms {given:?} differ from the minimal generators {expected:?}")]
    AtomMismatch { given: Vec<usize>, expected: Vec<usize> },
    #[error("element {0} is nil or out of range")]
    NilElement(usize),
    #[error("element {0} is not maximal")]
    NotMaximal(usize),
    #[error("the identity cannot be identified with nil")]
    ZeroElement,
    #[error("multiplicity {0} is too small for a Kunz nilsemigroup")]
    MultiplicityTooSmall(u64),
    #[error("nilsemigroup does not come from {0}")]
    WrongOrigin(String),
    #[error("lifted presentation disagrees with the direct scan: {0}")]
    LiftMismatch(String),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

/// Trade between two factorizations of a non-nil element.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct NilTrade {
    pub left: Factorization,
    pub right: Factorization,
    pub element: usize,
}

/// A set of minimal nil factorizations satisfying both outer Betti conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OuterBettiElement {
    /// Ascending lexicographic order.
    pub factorizations: Vec<Factorization>,
    pub support: Vec<usize>,
    /// `(i, p)` with `B - e_i = Z_N(p)` for each `i` in the support.
    pub divisors: Vec<(usize, usize)>,
}

impl OuterBettiElement {
    pub fn is_divisible_by(&self, p: usize) -> bool {
        self.divisors.iter().any(|&(_, q)| q == p)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilPresentationSummary {
    pub trades: Vec<NilTrade>,
    pub betti_elements: Vec<usize>,
    pub outer_betti_count: usize,
    pub eta: usize,
}

/// Factorization data shared by the presentation queries.
#[derive(Debug)]
struct Structure {
    by_element: Vec<Vec<Factorization>>,
    value_of: HashMap<Factorization, usize>,
    minimal_nil: Vec<Factorization>,
}

#[derive(Debug, Clone)]
pub struct KunzNilsemigroup {
    size: usize,
    labels: Vec<u32>,
    table: Vec<u16>,
    atoms: Vec<usize>,
    origin: Option<NumericalSemigroup>,
    cache: OnceLock<Arc<Structure>>,
}

impl PartialEq for KunzNilsemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size && self.labels == other.labels && self.table == other.table
    }
}

impl Eq for KunzNilsemigroup {}

fn encode(x: Option<usize>) -> u16 {
    x.map_or(NIL, |v| v as u16)
}

impl KunzNilsemigroup {
    fn from_parts(size: usize, labels: Vec<u32>, table: Vec<u16>, origin: Option<NumericalSemigroup>) -> Self {
        let mut n = Self {
            size,
            labels,
            table,
            atoms: Vec::new(),
            origin,
            cache: OnceLock::new(),
        };
        n.atoms = n.compute_atoms();
        n
    }

    /// Kunz nilsemigroup of `s`: `i ⊕ j = i + j mod m` when
    /// `a_i + a_j = a_{i+j}`, nil otherwise.
    pub fn from_semigroup(s: &NumericalSemigroup) -> Result<Self, KunzError> {
        let m = s.multiplicity();
        if m < 2 {
            return Err(KunzError::MultiplicityTooSmall(m));
        }
        if m >= u64::from(NIL) {
            return Err(SemigroupError::TooLarge(m).into());
        }
        let n = Self::from_apery_unchecked(s.apery_slice(), Some(s.clone()));
        let expected: Vec<u32> = {
            let mut r: Vec<u32> = s.generators()[1..].iter().map(|g| (g % m) as u32).collect();
            r.sort_unstable();
            r
        };
        let got: Vec<u32> = n.atoms.iter().map(|&a| n.labels[a]).collect();
        if got != expected || n.embedding_dimension() != s.embedding_dimension() {
            return Err(SemigroupError::Postcondition(format!("nilsemigroup atoms {got:?} do not match generators of {s}")).into());
        }
        Ok(n)
    }

    /// Table built straight from an Apéry set `a_0..a_{m-1}`.
    pub(crate) fn from_apery_unchecked(apery: &[u64], origin: Option<NumericalSemigroup>) -> Self {
        let m = apery.len();
        let mut table = vec![NIL; m * m];
        for i in 0..m {
            for j in 0..m {
                let k = (i + j) % m;
                if apery[i] + apery[j] == apery[k] {
                    table[i * m + j] = k as u16;
                }
            }
        }
        Self::from_parts(m, (0..m as u32).collect(), table, origin)
    }

    /// Validates a full addition table over `{0..m-1} ∪ {nil}`; row and
    /// column `m` stand for nil, and `None` entries are nil.
    pub fn validate_table(m: usize, table: &[Vec<Option<usize>>], atoms: &[usize]) -> Result<Self, KunzError> {
        if m == 0 || m >= NIL as usize || table.len() != m + 1 || table.iter().any(|r| r.len() != m + 1) {
            return Err(KunzError::Dimension { expected: m + 1 });
        }
        for (p, row) in table.iter().enumerate() {
            for (q, &v) in row.iter().enumerate() {
                if let Some(v) = v {
                    if v >= m {
                        return Err(KunzError::EntryOutOfRange { p, q, value: v });
                    }
                }
            }
        }
        for p in 0..=m {
            if table[m][p].is_some() {
                return Err(KunzError::NilNotAbsorbing { p: m, q: p });
            }
            if table[p][m].is_some() {
                return Err(KunzError::NilNotAbsorbing { p, q: m });
            }
        }
        for p in 0..m {
            if table[0][p] != Some(p) || table[p][0] != Some(p) {
                return Err(KunzError::NoIdentity { p });
            }
        }
        for p in 0..m {
            for q in p + 1..m {
                if table[p][q] != table[q][p] {
                    return Err(KunzError::NotCommutative { p, q });
                }
            }
        }
        let add = |x: Option<usize>, y: Option<usize>| match (x, y) {
            (Some(a), Some(b)) => table[a][b],
            _ => None,
        };
        let assoc = |p: usize, q: usize, r: usize| add(add(Some(p), Some(q)), Some(r)) == add(Some(p), add(Some(q), Some(r)));
        if m <= FULL_ASSOCIATIVITY_LIMIT {
            for p in 0..m {
                for q in 0..m {
                    for r in 0..m {
                        if !assoc(p, q, r) {
                            return Err(KunzError::NotAssociative { p, q, r });
                        }
                    }
                }
            }
        } else {
            let mut rng = StdRng::seed_from_u64(ASSOCIATIVITY_SEED);
            for _ in 0..ASSOCIATIVITY_SAMPLES {
                let (p, q, r) = (rng.random_range(0..m), rng.random_range(0..m), rng.random_range(0..m));
                if !assoc(p, q, r) {
                    return Err(KunzError::NotAssociative { p, q, r });
                }
            }
        }
        for a in 0..m {
            let mut seen = vec![usize::MAX; m];
            for b in 0..m {
                if let Some(v) = table[a][b] {
                    if seen[v] != usize::MAX {
                        return Err(KunzError::NotPartlyCancellative { a, b: seen[v], c: b });
                    }
                    seen[v] = b;
                }
            }
        }
        for p in 1..m {
            let mut x = Some(p);
            let mut steps = 0;
            while let Some(v) = x {
                steps += 1;
                if steps > m {
                    return Err(KunzError::NotNilpotent { p });
                }
                x = table[v][p];
            }
        }
        let mut flat = vec![NIL; m * m];
        for p in 0..m {
            for q in 0..m {
                flat[p * m + q] = encode(table[p][q]);
            }
        }
        let n = Self::from_parts(m, (0..m as u32).collect(), flat, None);
        let mut given = atoms.to_vec();
        given.sort_unstable();
        if given != n.atoms {
            return Err(KunzError::AtomMismatch {
                given: atoms.to_vec(),
                expected: n.atoms.clone(),
            });
        }
        Ok(n)
    }

    fn compute_atoms(&self) -> Vec<usize> {
        let m = self.size;
        let mut decomposable = vec![false; m];
        for q in 1..m {
            for r in 1..m {
                if let Some(p) = self.add(q, r) {
                    decomposable[p] = true;
                }
            }
        }
        let mut atoms: Vec<usize> = (1..m).filter(|&p| !decomposable[p]).collect();
        atoms.sort_by_key(|&p| self.labels[p]);
        atoms
    }

    /// `p ⊕ q`, `None` for nil.
    pub fn add(&self, p: usize, q: usize) -> Option<usize> {
        let v = self.table[p * self.size + q];
        (v != NIL).then_some(v as usize)
    }

    pub fn add_opt(&self, p: Option<usize>, q: Option<usize>) -> Option<usize> {
        self.add(p?, q?)
    }

    /// Number of non-nil elements.
    pub fn multiplicity(&self) -> usize {
        self.size
    }

    /// One more than the number of atoms.
    pub fn embedding_dimension(&self) -> usize {
        self.atoms.len() + 1
    }

    pub fn codimension(&self) -> usize {
        self.size - self.embedding_dimension()
    }

    /// Atoms as element indices, ascending by label.
    pub fn atoms(&self) -> &[usize] {
        &self.atoms
    }

    pub fn label(&self, p: usize) -> u32 {
        self.labels[p]
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn index_of_label(&self, label: u32) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    pub fn origin(&self) -> Option<&NumericalSemigroup> {
        self.origin.as_ref()
    }

    pub fn is_atom(&self, p: usize) -> bool {
        self.atoms.contains(&p)
    }

    /// Nonzero elements killed by every nonzero addition.
    pub fn maximal_elements(&self) -> Vec<usize> {
        (1..self.size)
            .filter(|&p| (1..self.size).all(|q| self.add(p, q).is_none()))
            .collect()
    }

    /// Non-nil rows of the table, `None` for nil.
    pub fn addition_table(&self) -> Vec<Vec<Option<usize>>> {
        (0..self.size)
            .map(|p| (0..self.size).map(|q| self.add(p, q)).collect())
            .collect()
    }

    /// Table over `{0..m-1} ∪ {nil}` in the layout taken by [`Self::validate_table`].
    pub fn full_table(&self) -> Vec<Vec<Option<usize>>> {
        let m = self.size;
        (0..=m)
            .map(|p| {
                (0..=m)
                    .map(|q| if p == m || q == m { None } else { self.add(p, q) })
                    .collect()
            })
            .collect()
    }

    /// Row-major table bytes; equal fingerprints mean equal nilsemigroups
    /// (as labelled tables).
    pub fn fingerprint(&self) -> Vec<u16> {
        self.table.clone()
    }

    /// `φ_N(z)` over the atom order.
    pub fn evaluate(&self, z: &Factorization) -> Option<usize> {
        let mut v = Some(0);
        for (t, &c) in z.exponents().iter().enumerate() {
            for _ in 0..c {
                v = self.add_opt(v, Some(self.atoms[t]));
                v?;
            }
        }
        v
    }

    fn structure(&self) -> Arc<Structure> {
        self.cache.get_or_init(|| Arc::new(self.build_structure())).clone()
    }

    fn build_structure(&self) -> Structure {
        let k = self.atoms.len();
        let mut by_element = vec![Vec::new(); self.size];
        let mut value_of = HashMap::new();
        // Each non-nil vector is reached once, by adding its last support
        // coordinate to its predecessor. The non-nil vectors are downward
        // closed because nil is absorbing.
        let mut stack = vec![(Factorization::zero(k), 0usize, 0usize)];
        while let Some((z, v, start)) = stack.pop() {
            for t in start..k {
                if let Some(w) = self.add(v, self.atoms[t]) {
                    stack.push((z.plus_unit(t), w, t));
                }
            }
            by_element[v].push(z.clone());
            value_of.insert(z, v);
        }
        for facts in &mut by_element {
            facts.sort();
        }

        let mut minimal_nil = Vec::new();
        for (v, facts) in by_element.iter().enumerate() {
            for z in facts {
                let start = z.support().last().unwrap_or(0);
                for t in start..k {
                    if self.add(v, self.atoms[t]).is_some() {
                        continue;
                    }
                    let w = z.plus_unit(t);
                    let minimal = w
                        .support()
                        .filter(|&j| j != t)
                        .all(|j| value_of.contains_key(&w.minus_unit(j).expect("in support")));
                    if minimal {
                        minimal_nil.push(w);
                    }
                }
            }
        }
        minimal_nil.sort();
        Structure {
            by_element,
            value_of,
            minimal_nil,
        }
    }

    /// `Z_N(p)` for a non-nil `p`, ascending.
    pub fn element_factorizations(&self, p: usize) -> Result<Vec<Factorization>, KunzError> {
        if p >= self.size {
            return Err(KunzError::NilElement(p));
        }
        Ok(self.structure().by_element[p].clone())
    }

    /// Componentwise-minimal elements of `Z_N(∞)`, ascending.
    pub fn minimal_nil_factorizations(&self) -> Vec<Factorization> {
        self.structure().minimal_nil.clone()
    }

    /// Outer Betti elements, ordered by their lex-smallest member.
    ///
    /// Candidates are the components of the graph on minimal nil
    /// factorizations where `z ~ z'` if `z - e_i` and `z' - e_i` factor the
    /// same non-nil element for a shared `i`. A component survives when every
    /// `B - e_i` is a full factorization set.
    pub fn outer_betti_elements(&self) -> Vec<OuterBettiElement> {
        let st = self.structure();
        let w = &st.minimal_nil;
        let mut uf = UnionFind::new(w.len());
        let mut bucket: HashMap<(usize, usize), usize> = HashMap::new();
        for (idx, z) in w.iter().enumerate() {
            for i in z.support() {
                let below = z.minus_unit(i).expect("in support");
                let p = st.value_of[&below];
                match bucket.get(&(i, p)) {
                    Some(&first) => uf.union(first, idx),
                    None => {
                        bucket.insert((i, p), idx);
                    }
                }
            }
        }

        let mut out = Vec::new();
        'component: for group in uf.groups() {
            let members: Vec<Factorization> = group.iter().map(|&g| w[g].clone()).collect();
            let support: BTreeSet<usize> = members.iter().flat_map(|z| z.support().collect::<Vec<_>>()).collect();
            let mut divisors = Vec::with_capacity(support.len());
            for &i in &support {
                let shifted: BTreeSet<Factorization> = members.iter().filter_map(|z| z.minus_unit(i)).collect();
                let targets: BTreeSet<usize> = shifted.iter().map(|y| st.value_of[y]).collect();
                if targets.len() != 1 {
                    continue 'component;
                }
                let p = *targets.iter().next().expect("one target");
                let full = &st.by_element[p];
                if full.len() != shifted.len() || !full.iter().all(|y| shifted.contains(y)) {
                    continue 'component;
                }
                divisors.push((i, p));
            }
            out.push(OuterBettiElement {
                factorizations: members,
                support: support.into_iter().collect(),
                divisors,
            });
        }
        out.sort_by(|a, b| a.factorizations[0].cmp(&b.factorizations[0]));
        out
    }

    /// Trades at non-nil elements with disconnected factorization graphs,
    /// chosen canonically; never any trade at nil.
    pub fn nil_minimal_presentation(&self) -> Vec<NilTrade> {
        let st = self.structure();
        let mut trades = Vec::new();
        for (p, facts) in st.by_element.iter().enumerate() {
            if facts.len() < 2 {
                continue;
            }
            let comps = graph::component_lists(facts);
            for (left, right) in graph::canonical_pairs(&comps) {
                trades.push(NilTrade { left, right, element: p });
            }
        }
        trades
    }

    /// Number of trades at `p` in a minimal presentation.
    pub fn relations_at(&self, p: usize) -> usize {
        let st = self.structure();
        match st.by_element.get(p) {
            Some(f) if f.len() >= 2 => graph::support_components(f).len() - 1,
            _ => 0,
        }
    }

    /// `η(N) = b(N) + |ρ|`.
    pub fn eta(&self) -> NilPresentationSummary {
        let trades = self.nil_minimal_presentation();
        let outer_betti_count = self.outer_betti_elements().len();
        let betti: BTreeSet<usize> = trades.iter().map(|t| t.element).collect();
        NilPresentationSummary {
            eta: outer_betti_count + trades.len(),
            betti_elements: betti.into_iter().collect(),
            outer_betti_count,
            trades,
        }
    }

    pub fn kunz_poset(&self) -> KunzPoset {
        KunzPoset::new(self)
    }

    /// `N/p` for a maximal `p`: every sum landing on `p` becomes nil and `p`
    /// is dropped from the element set. If `p` is an atom it is dropped from
    /// the generators as well.
    pub fn quotient_by_maximal(&self, p: usize) -> Result<Self, KunzError> {
        if p == 0 {
            return Err(KunzError::ZeroElement);
        }
        if p >= self.size {
            return Err(KunzError::NilElement(p));
        }
        if (1..self.size).any(|q| self.add(p, q).is_some()) {
            return Err(KunzError::NotMaximal(p));
        }
        let keep: Vec<usize> = (0..self.size).filter(|&q| q != p).collect();
        let new_index = |q: usize| if q < p { q } else { q - 1 };
        let size = keep.len();
        let mut table = vec![NIL; size * size];
        for (a, &x) in keep.iter().enumerate() {
            for (b, &y) in keep.iter().enumerate() {
                table[a * size + b] = match self.add(x, y) {
                    Some(s) if s != p => new_index(s) as u16,
                    _ => NIL,
                };
            }
        }
        let labels = keep.iter().map(|&q| self.labels[q]).collect();
        Ok(Self::from_parts(size, labels, table, None))
    }

    /// Quotients by the nonzero non-atoms one at a time, always taking the
    /// smallest-label maximal non-atom of the current nilsemigroup. The last
    /// step leaves only 0, nil and the atoms.
    pub fn quotient_chain(&self) -> Vec<QuotientStep> {
        let mut steps = Vec::new();
        let mut cur = self.clone();
        loop {
            let next = cur
                .maximal_elements()
                .into_iter()
                .filter(|&q| !cur.is_atom(q))
                .min_by_key(|&q| cur.labels[q]);
            let Some(p) = next else { break };
            let relations = cur.relations_at(p);
            let label = cur.labels[p];
            let quotient = cur.quotient_by_maximal(p).expect("p is maximal");
            steps.push(QuotientStep {
                label,
                relations,
                quotient: quotient.clone(),
            });
            cur = quotient;
        }
        steps
    }

    /// Lifts a presentation of `N` to one of `S`: one trade per outer Betti
    /// element plus every nilsemigroup trade with a zero prepended. The
    /// result is checked against [`NumericalSemigroup::minimal_presentation_direct`].
    pub fn lift_presentation(&self, s: &NumericalSemigroup) -> Result<MinimalPresentation, KunzError> {
        let lifted = self.lifted_presentation(s)?;
        let direct = s.minimal_presentation_direct()?;
        if lifted.eta != direct.eta || lifted.betti_elements != direct.betti_elements {
            return Err(KunzError::LiftMismatch(format!(
                "lifted eta {} betti {:?}, direct eta {} betti {:?}",
                lifted.eta, lifted.betti_elements, direct.eta, direct.betti_elements
            )));
        }
        Ok(lifted)
    }

    /// [`Self::lift_presentation`] without the comparison to the direct scan.
    pub fn lifted_presentation(&self, s: &NumericalSemigroup) -> Result<MinimalPresentation, KunzError> {
        let own = Self::from_semigroup(s)?;
        if own.table != self.table || own.labels != self.labels {
            return Err(KunzError::WrongOrigin(s.to_string()));
        }
        let m = s.multiplicity();
        let gens = s.generators();
        let width = gens.len();
        let placement: Vec<usize> = self
            .atoms
            .iter()
            .map(|&a| {
                let label = u64::from(self.labels[a]);
                1 + gens[1..].iter().position(|g| g % m == label).expect("atom residue")
            })
            .collect();
        let lift = |z: &Factorization| z.embed(width, &placement);

        let outer = self.outer_betti_elements();
        let bound = s.betti_candidate_bound()?;
        let fz = Factorizer::new(gens, bound);
        let mut trades = Vec::new();
        for b in &outer {
            let left = lift(&b.factorizations[0]);
            let n = s.evaluate(&left)?;
            let below = n
                .checked_sub(m)
                .and_then(|r| fz.first(r))
                .ok_or_else(|| KunzError::LiftMismatch(format!("{n} - {m} has no factorization")))?;
            let right = below.plus_unit(0);
            trades.push(Trade { left, right, element: n });
        }
        for t in self.nil_minimal_presentation() {
            let left = lift(&t.left);
            let right = lift(&t.right);
            let element = s.evaluate(&left)?;
            if s.evaluate(&right)? != element {
                return Err(KunzError::LiftMismatch(format!("trade {} ~ {} does not lift", t.left, t.right)));
            }
            trades.push(Trade { left, right, element });
        }
        Ok(MinimalPresentation::from_trades(trades))
    }
}

/// One quotient in [`KunzNilsemigroup::quotient_chain`].
#[derive(Debug, Clone)]
pub struct QuotientStep {
    pub label: u32,
    /// Minimal relations at the removed element before removal.
    pub relations: usize,
    pub quotient: KunzNilsemigroup,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cover {
    pub lower: usize,
    pub upper: usize,
    /// Position of the atom in the atom order.
    pub atom: usize,
}

/// Divisibility poset of the non-nil elements, with covers labelled by atoms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KunzPoset {
    labels: Vec<u32>,
    atoms: Vec<usize>,
    covers: Vec<Cover>,
    below: Vec<Vec<bool>>,
}

const DOT_COLORS: [&str; 10] = [
    "red", "blue", "green4", "orange", "purple", "brown", "magenta", "cyan4", "gold3", "gray40",
];

impl KunzPoset {
    fn new(n: &KunzNilsemigroup) -> Self {
        let m = n.size;
        // Partial cancellativity makes every atom step a cover.
        let mut covers = Vec::new();
        for b in 0..m {
            for (t, &a) in n.atoms.iter().enumerate() {
                if let Some(c) = n.add(b, a) {
                    covers.push(Cover { lower: b, upper: c, atom: t });
                }
            }
        }
        let mut below = vec![vec![false; m]; m];
        for b in 0..m {
            for x in 0..m {
                if let Some(c) = n.add(b, x) {
                    below[b][c] = true;
                }
            }
        }
        Self {
            labels: n.labels.clone(),
            atoms: n.atoms.clone(),
            covers,
            below,
        }
    }

    pub fn covers(&self) -> &[Cover] {
        &self.covers
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// `b ≼ c`.
    pub fn precedes(&self, b: usize, c: usize) -> bool {
        self.below[b][c]
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        let m = self.labels.len();
        (0..m).filter(|&c| (0..m).all(|b| b == c || !self.below[b][c])).collect()
    }

    /// Elements covering `c`'s lower neighbours, grouped: `lower_covers(c)`.
    pub fn lower_covers(&self, c: usize) -> Vec<usize> {
        let mut v: Vec<usize> = self.covers.iter().filter(|cv| cv.upper == c).map(|cv| cv.lower).collect();
        v.sort_unstable();
        v
    }

    /// Rebuilds the addition table from the labelled covers alone.
    pub fn addition_table(&self) -> Vec<Vec<Option<usize>>> {
        let m = self.labels.len();
        let mut step: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for c in &self.covers {
            step.insert((c.lower, c.atom), c.upper);
        }
        // An atom word reaching each element from 0.
        let mut word: Vec<Option<Vec<usize>>> = vec![None; m];
        word[0] = Some(Vec::new());
        let mut queue = std::collections::VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (t, _) in self.atoms.iter().enumerate() {
                if let Some(&y) = step.get(&(x, t)) {
                    if word[y].is_none() {
                        let mut w = word[x].clone().expect("visited");
                        w.push(t);
                        word[y] = Some(w);
                        queue.push_back(y);
                    }
                }
            }
        }
        (0..m)
            .map(|p| {
                (0..m)
                    .map(|q| {
                        let w = word[q].as_ref()?;
                        w.iter().try_fold(p, |x, &t| step.get(&(x, t)).copied())
                    })
                    .collect()
            })
            .collect()
    }

    /// Hasse diagram in Graphviz DOT, one colour per atom.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph kunz_poset {\n  rankdir=BT;\n  node [shape=circle, fontsize=10];\n");
        for (i, l) in self.labels.iter().enumerate() {
            let _ = writeln!(s, "  n{i} [label=\"{l}\"];");
        }
        for c in &self.covers {
            let _ = writeln!(
                s,
                "  n{} -> n{} [color=\"{}\"];",
                c.lower,
                c.upper,
                DOT_COLORS[c.atom % DOT_COLORS.len()]
            );
        }
        s.push_str("}\n");
        s
    }
}
