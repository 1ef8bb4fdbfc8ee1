//! Exhaustive and randomized machine checks of the characterization
//! theorems, over labeled posets and random orthosets.
//!
//! Labeled posets on `0..n` are generated by adding one element at a time:
//! a poset on `0..=k` is a poset on `0..k` plus the down-set `L` and up-set
//! `U` of the new element, subject to `L ∩ U = ∅` and `l < u` for all
//! `l ∈ L`, `u ∈ U`. Each labeled poset arises exactly once. Work is sharded
//! by the restriction to the first [`SHARD_PREFIX`] elements, so shard `i`
//! is the `i`-th labeled poset on that prefix together with everything the
//! depth-first generator grows from it, and concatenating shards in order
//! reproduces the sequential enumeration order.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bridges::{incomparability_orthoset, strict_comparability_orthoset};
use crate::error::{Error, Result};
use crate::limits::{Limits, CENSUS_HARD_CAP};
use crate::logic::{AxiomReport, BooleanVerdict, Logic, OrthomodularVerdict};
use crate::orthoset::{CompatibilityVerdict, DaceyVerdict, Orthoset};
use crate::poset::Poset;
use crate::structure::{self, NWitness};
use crate::subset::SubsetMask;

/// Number of leading elements whose induced poset identifies a shard.
pub const SHARD_PREFIX: usize = 4;

// ---------------------------------------------------------------------------
// Labeled poset enumeration
// ---------------------------------------------------------------------------

/// Ways to add element `rows.len()` to the poset given by `rows`, as
/// `(down-set, up-set)` pairs in increasing order.
fn extensions(rows: &[SubsetMask]) -> Vec<(SubsetMask, SubsetMask)> {
    let k = rows.len();
    let mut below = vec![SubsetMask::EMPTY; k];
    for (x, row) in rows.iter().enumerate() {
        for y in *row {
            below[y].insert(x);
        }
    }
    let subsets = || (0..1u64 << k).map(SubsetMask::from_bits);
    let downsets: Vec<_> = subsets()
        .filter(|s| s.iter().all(|x| below[x].is_subset(*s)))
        .collect();
    let upsets: Vec<_> = subsets()
        .filter(|s| s.iter().all(|x| rows[x].is_subset(*s)))
        .collect();
    let mut out = Vec::new();
    for &down in &downsets {
        let allowed = down
            .iter()
            .fold(SubsetMask::full(k), |acc, l| acc & rows[l]);
        for &up in &upsets {
            if up.is_subset(allowed) && up.is_disjoint(down) {
                out.push((down, up));
            }
        }
    }
    out
}

fn extend(rows: &[SubsetMask], down: SubsetMask, up: SubsetMask) -> Vec<SubsetMask> {
    let v = rows.len();
    let mut next = rows.to_vec();
    for l in down {
        next[l].insert(v);
    }
    next.push(up);
    next
}

struct Frame {
    rows: Vec<SubsetMask>,
    exts: Vec<(SubsetMask, SubsetMask)>,
    next: usize,
}

impl Frame {
    fn new(rows: Vec<SubsetMask>) -> Frame {
        let exts = extensions(&rows);
        Frame {
            rows,
            exts,
            next: 0,
        }
    }
}

/// Depth-first stream of the labeled posets on `0..n` growing from a root
/// poset on a prefix `0..k`.
pub struct LabeledPosets {
    n: usize,
    stack: Vec<Frame>,
    pending: Option<Vec<SubsetMask>>,
}

impl LabeledPosets {
    fn from_root(root: Vec<SubsetMask>, n: usize) -> LabeledPosets {
        debug_assert!(root.len() <= n);
        if root.len() == n {
            LabeledPosets {
                n,
                stack: Vec::new(),
                pending: Some(root),
            }
        } else {
            LabeledPosets {
                n,
                stack: vec![Frame::new(root)],
                pending: None,
            }
        }
    }
}

impl Iterator for LabeledPosets {
    type Item = Poset;

    fn next(&mut self) -> Option<Poset> {
        if let Some(rows) = self.pending.take() {
            return Some(Poset::from_closed_order(rows));
        }
        while let Some(frame) = self.stack.last_mut() {
            let Some(&(down, up)) = frame.exts.get(frame.next) else {
                self.stack.pop();
                continue;
            };
            frame.next += 1;
            let child = extend(&frame.rows, down, up);
            if child.len() == self.n {
                return Some(Poset::from_closed_order(child));
            }
            self.stack.push(Frame::new(child));
        }
        None
    }
}

/// Every labeled poset on `0..n`, each exactly once, in a fixed order.
pub fn enumerate_labeled_posets(n: usize) -> Result<LabeledPosets> {
    enumerate_labeled_posets_with(n, &Limits::default())
}

pub fn enumerate_labeled_posets_with(n: usize, limits: &Limits) -> Result<LabeledPosets> {
    limits.check_census_n(n)?;
    Ok(LabeledPosets::from_root(Vec::new(), n))
}

fn shard_roots(n: usize) -> Vec<Vec<SubsetMask>> {
    let k = n.min(SHARD_PREFIX);
    LabeledPosets::from_root(Vec::new(), k)
        .map(|p| p.order_rows().to_vec())
        .collect()
}

/// Number of shards the posets on `n` elements are split into.
pub fn shard_count(n: usize) -> usize {
    shard_roots(n).len()
}

fn shard_posets(n: usize, shard: usize) -> Result<LabeledPosets> {
    let root = shard_roots(n).into_iter().nth(shard).ok_or_else(|| {
        Error::InvalidParameter(format!("shard {shard} out of range for n = {n}"))
    })?;
    Ok(LabeledPosets::from_root(root, n))
}

/// Smallest code of the strict order over all relabelings; two posets on
/// the same number of elements are isomorphic iff their codes agree.
pub fn canonical_code(p: &Poset) -> u64 {
    let n = p.len();
    assert!(n <= 8, "canonical form is only used for n <= 8");
    let rows = p.order_rows();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    permute(&mut perm, 0, &mut |perm| {
        let mut code = 0u64;
        for x in 0..n {
            for y in rows[x] {
                code |= 1 << (perm[x] * n + perm[y]);
            }
        }
        best = best.min(code);
    });
    best
}

fn permute(perm: &mut [usize], k: usize, f: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, f);
        perm.swap(k, i);
    }
}

// ---------------------------------------------------------------------------
// Seeded random generators
// ---------------------------------------------------------------------------

fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "edge probability {p} not in [0, 1]"
        )))
    }
}

/// Random poset: shuffle `0..n` with a ChaCha8 stream seeded by `seed`,
/// add each forward pair of the shuffled order independently with
/// probability `edge_prob`, then take the transitive closure.
pub fn random_poset(n: usize, seed: u64, edge_prob: f64) -> Result<Poset> {
    check_probability(edge_prob)?;
    let limits = Limits {
        max_elements: crate::subset::MAX_ELEMENTS,
        ..Limits::default()
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(edge_prob) {
                pairs.push((order[i], order[j]));
            }
        }
    }
    Poset::from_covers_with(n, &pairs, &limits)
}

/// Random orthoset: each pair `x < y` orthogonal independently with
/// probability `edge_prob`, drawn from a ChaCha8 stream seeded by `seed`.
pub fn random_orthoset(n: usize, seed: u64, edge_prob: f64) -> Result<Orthoset> {
    check_probability(edge_prob)?;
    crate::limits::check("element count", n, crate::subset::MAX_ELEMENTS)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut adj = vec![SubsetMask::EMPTY; n];
    for x in 0..n {
        for y in x + 1..n {
            if rng.random_bool(edge_prob) {
                adj[x].insert(y);
                adj[y].insert(x);
            }
        }
    }
    Ok(Orthoset::from_rows_unchecked(adj))
}

// ---------------------------------------------------------------------------
// Theorem verification for one poset
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Verdicts {
    pub n_free: bool,
    pub covering_n_free: bool,
    pub weak_n_free: bool,
    pub chain_antichain: bool,
    pub dacey: bool,
    pub compatible: bool,
    pub orthomodular: bool,
    pub boolean: bool,
}

/// Projects the two sides of an equivalence out of the verdicts.
pub type Sides = fn(&Verdicts) -> (bool, bool);

/// Each equivalence the census expects, with the predicates it relates.
pub const EQUIVALENCES: [(&str, Sides); 6] = [
    ("n_free<=>dacey", |v| (v.n_free, v.dacey)),
    ("dacey<=>orthomodular", |v| (v.dacey, v.orthomodular)),
    ("weak_n_free<=>compatible", |v| {
        (v.weak_n_free, v.compatible)
    }),
    ("compatible<=>boolean", |v| (v.compatible, v.boolean)),
    ("n_free<=>chain_antichain", |v| {
        (v.n_free, v.chain_antichain)
    }),
    ("n_free<=>covering_n_free", |v| {
        (v.n_free, v.covering_n_free)
    }),
];

impl Verdicts {
    /// Names of the expected equivalences (and implications) that fail.
    pub fn violations(&self) -> Vec<String> {
        let mut out: Vec<String> = EQUIVALENCES
            .iter()
            .filter(|(_, f)| {
                let (a, b) = f(self);
                a != b
            })
            .map(|(name, _)| name.to_string())
            .collect();
        if self.compatible && !self.dacey {
            out.push("compatible=>dacey".into());
        }
        if self.boolean && !self.orthomodular {
            out.push("boolean=>orthomodular".into());
        }
        if !self.n_free && self.weak_n_free {
            out.push("weak_n_free=>n_free".into());
        }
        out
    }
}

/// Every predicate of a poset, its incomparability orthoset and its logic,
/// with witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Analysis {
    pub verdicts: Verdicts,
    pub n_witness: Option<NWitness>,
    pub covering_n_witness: Option<NWitness>,
    pub weak_n_witness: Option<NWitness>,
    /// A maximal chain and a maximal antichain that do not meet.
    pub chain_antichain_witness: Option<(SubsetMask, SubsetMask)>,
    pub dacey: DaceyVerdict,
    pub compatible: CompatibilityVerdict,
    pub orthomodular: OrthomodularVerdict,
    pub boolean: BooleanVerdict,
    pub ortholattice: AxiomReport,
    pub lattice_size: usize,
    pub violations: Vec<String>,
}

pub fn verify_theorems(p: &Poset) -> Result<Analysis> {
    verify_theorems_with(p, &Limits::default())
}

pub fn verify_theorems_with(p: &Poset, limits: &Limits) -> Result<Analysis> {
    let n_witness = structure::find_n(p);
    let covering_n_witness = structure::find_covering_n(p);
    let weak_n_witness = structure::find_weak_n(p);
    let chain_antichain_witness = structure::chain_antichain_counterexample(p, limits)?;

    let o = incomparability_orthoset(p);
    let dacey = o.is_dacey_with(limits)?;
    let compatible = o.is_compatible_with(limits)?;
    let logic = Logic::build_with(&o, limits)?;
    let orthomodular = logic.is_orthomodular();
    let boolean = logic.is_boolean()?;
    let ortholattice = logic.verify_ortholattice();

    let verdicts = Verdicts {
        n_free: n_witness.is_none(),
        covering_n_free: covering_n_witness.is_none(),
        weak_n_free: weak_n_witness.is_none(),
        chain_antichain: chain_antichain_witness.is_none(),
        dacey: dacey.dacey,
        compatible: compatible.compatible,
        orthomodular: orthomodular.orthomodular,
        boolean: boolean.boolean,
    };
    let mut violations = verdicts.violations();
    if !ortholattice.passed {
        violations.push("ortholattice_axioms".into());
    }
    Ok(Analysis {
        verdicts,
        n_witness,
        covering_n_witness,
        weak_n_witness,
        chain_antichain_witness,
        dacey,
        compatible,
        orthomodular,
        boolean,
        ortholattice,
        lattice_size: logic.len(),
        violations,
    })
}

// ---------------------------------------------------------------------------
// Census
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub shard: usize,
    /// Position within the shard's enumeration.
    pub offset: usize,
    pub covers: Vec<(usize, usize)>,
    pub failed: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct CensusSummary {
    pub n: usize,
    pub total_posets: u64,
    pub n_free: u64,
    pub covering_n_free: u64,
    pub weak_n_free: u64,
    pub chain_antichain: u64,
    pub dacey: u64,
    pub compatible: u64,
    pub orthomodular: u64,
    pub boolean: u64,
    pub violations: Vec<Violation>,
}

impl CensusSummary {
    fn empty(n: usize) -> CensusSummary {
        CensusSummary {
            n,
            ..CensusSummary::default()
        }
    }

    fn record(&mut self, v: &Verdicts) {
        self.total_posets += 1;
        self.n_free += v.n_free as u64;
        self.covering_n_free += v.covering_n_free as u64;
        self.weak_n_free += v.weak_n_free as u64;
        self.chain_antichain += v.chain_antichain as u64;
        self.dacey += v.dacey as u64;
        self.compatible += v.compatible as u64;
        self.orthomodular += v.orthomodular as u64;
        self.boolean += v.boolean as u64;
    }

    /// Associative, commutative merge; violations stay in enumeration order.
    pub fn merge(mut self, other: CensusSummary) -> CensusSummary {
        debug_assert_eq!(self.n, other.n);
        self.total_posets += other.total_posets;
        self.n_free += other.n_free;
        self.covering_n_free += other.covering_n_free;
        self.weak_n_free += other.weak_n_free;
        self.chain_antichain += other.chain_antichain;
        self.dacey += other.dacey;
        self.compatible += other.compatible;
        self.orthomodular += other.orthomodular;
        self.boolean += other.boolean;
        self.violations.extend(other.violations);
        self.violations.sort_by_key(|v| (v.shard, v.offset));
        self
    }

    /// The counts agree the way the characterization theorems require and
    /// no individual poset was flagged.
    pub fn is_consistent(&self) -> bool {
        self.violations.is_empty()
            && self.n_free == self.dacey
            && self.dacey == self.orthomodular
            && self.n_free == self.chain_antichain
            && self.n_free == self.covering_n_free
            && self.weak_n_free == self.compatible
            && self.compatible == self.boolean
    }
}

/// Runs [`verify_theorems_with`] on every poset of one shard.
pub fn census_shard(n: usize, shard: usize, limits: &Limits) -> Result<CensusSummary> {
    limits.check_census_n(n)?;
    let mut summary = CensusSummary::empty(n);
    for (offset, p) in shard_posets(n, shard)?.enumerate() {
        let analysis = verify_theorems_with(&p, limits)?;
        summary.record(&analysis.verdicts);
        if !analysis.violations.is_empty() {
            summary.violations.push(Violation {
                shard,
                offset,
                covers: p.cover_pairs(),
                failed: analysis.violations,
            });
        }
    }
    Ok(summary)
}

fn pool(workers: usize) -> Result<rayon::ThreadPool> {
    if workers == 0 {
        return Err(Error::InvalidParameter("workers must be at least 1".into()));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::InvalidParameter(e.to_string()))
}

/// Census of every `n` in `0..=max_n`, sharded over `workers` threads. The
/// result does not depend on `workers`.
pub fn census_run(max_n: usize, workers: usize, limits: &Limits) -> Result<Vec<CensusSummary>> {
    limits.check_census_n(max_n)?;
    let pool = pool(workers)?;
    (0..=max_n).map(|n| census_size(n, &pool, limits)).collect()
}

fn census_size(n: usize, pool: &rayon::ThreadPool, limits: &Limits) -> Result<CensusSummary> {
    let shards = shard_count(n);
    let parts: Vec<Result<CensusSummary>> = pool.install(|| {
        (0..shards)
            .into_par_iter()
            .map(|s| census_shard(n, s, limits))
            .collect()
    });
    parts
        .into_iter()
        .try_fold(CensusSummary::empty(n), |acc, part| Ok(acc.merge(part?)))
}

// ---------------------------------------------------------------------------
// Counterexample search
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchPredicate {
    /// N-free, yet the strict comparability orthoset is not Dacey.
    NfreeButStrictNotDacey,
    /// The strict comparability orthoset is Dacey.
    StrictDacey,
}

impl SearchPredicate {
    pub const ALL: [SearchPredicate; 2] = [
        SearchPredicate::NfreeButStrictNotDacey,
        SearchPredicate::StrictDacey,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SearchPredicate::NfreeButStrictNotDacey => "nfree_but_strict_not_dacey",
            SearchPredicate::StrictDacey => "strict_dacey",
        }
    }

    pub fn holds(self, p: &Poset, limits: &Limits) -> Result<bool> {
        Ok(match self {
            SearchPredicate::NfreeButStrictNotDacey => {
                structure::is_n_free(p)
                    && !strict_comparability_orthoset(p)
                        .is_dacey_with(limits)?
                        .dacey
            }
            SearchPredicate::StrictDacey => {
                strict_comparability_orthoset(p)
                    .is_dacey_with(limits)?
                    .dacey
            }
        })
    }
}

impl fmt::Display for SearchPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SearchPredicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SearchPredicate::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown predicate `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Found {
    pub n: usize,
    pub shard: usize,
    pub offset: usize,
    pub poset: Poset,
}

fn first_in_shard(
    predicate: SearchPredicate,
    n: usize,
    shard: usize,
    limits: &Limits,
) -> Result<Option<(usize, Poset)>> {
    for (offset, p) in shard_posets(n, shard)?.enumerate() {
        if predicate.holds(&p, limits)? {
            return Ok(Some((offset, p)));
        }
    }
    Ok(None)
}

/// The first labeled poset (by size, then enumeration order) satisfying
/// `predicate`, searching sizes `0..=max_n` (at most 7).
pub fn search_counterexample(
    predicate: SearchPredicate,
    max_n: usize,
    workers: usize,
    limits: &Limits,
) -> Result<Option<Found>> {
    crate::limits::check("search size", max_n, CENSUS_HARD_CAP)?;
    let pool = pool(workers)?;
    for n in 0..=max_n {
        let hits: Vec<Result<Option<(usize, Poset)>>> = pool.install(|| {
            (0..shard_count(n))
                .into_par_iter()
                .map(|s| first_in_shard(predicate, n, s, limits))
                .collect()
        });
        for (shard, hit) in hits.into_iter().enumerate() {
            if let Some((offset, poset)) = hit? {
                return Ok(Some(Found {
                    n,
                    shard,
                    offset,
                    poset,
                }));
            }
        }
    }
    Ok(None)
}

/// All posets up to isomorphism on `0..=max_n` elements satisfying
/// `predicate`; each class is represented by its first labeled member.
pub fn explore(predicate: SearchPredicate, max_n: usize, limits: &Limits) -> Result<Vec<Poset>> {
    limits.check_census_n(max_n)?;
    let mut out = Vec::new();
    for n in 0..=max_n {
        let mut seen = std::collections::HashSet::new();
        for p in enumerate_labeled_posets_with(n, limits)? {
            if seen.insert(canonical_code(&p)) && predicate.holds(&p, limits)? {
                out.push(p);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Counts strict orders on `0..n` by filtering every irreflexive relation.
    fn brute_count(n: usize) -> usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
            .collect();
        (0..1u64 << pairs.len())
            .filter(|code| {
                let rel = |x: usize, y: usize| {
                    x != y && {
                        let i = pairs.iter().position(|&p| p == (x, y)).unwrap();
                        code >> i & 1 == 1
                    }
                };
                (0..n).all(|x| {
                    (0..n).all(|y| {
                        !(rel(x, y) && rel(y, x))
                            && (0..n).all(|z| !(rel(x, y) && rel(y, z)) || rel(x, z))
                    })
                })
            })
            .count()
    }

    #[test]
    fn counts_match_relation_filter() {
        for n in 0..=4 {
            let count = enumerate_labeled_posets(n).unwrap().count();
            assert_eq!(count, brute_count(n), "n = {n}");
        }
        assert_eq!(brute_count(2), 3);
        assert_eq!(brute_count(3), 19);
        assert_eq!(brute_count(4), 219);
    }

    #[test]
    fn enumeration_is_duplicate_free_and_valid() {
        let posets: Vec<_> = enumerate_labeled_posets(4).unwrap().collect();
        let distinct: std::collections::HashSet<_> =
            posets.iter().map(|p| p.order_rows().to_vec()).collect();
        assert_eq!(distinct.len(), posets.len());
        for p in &posets {
            p.validate().unwrap();
        }
    }

    #[test]
    fn shards_concatenate_to_the_sequential_order() {
        for n in [3, 5] {
            let sequential: Vec<_> = enumerate_labeled_posets(n).unwrap().collect();
            let sharded: Vec<_> = (0..shard_count(n))
                .flat_map(|s| shard_posets(n, s).unwrap())
                .collect();
            assert_eq!(sequential, sharded);
        }
    }

    #[test]
    fn enumeration_cap() {
        assert!(matches!(
            enumerate_labeled_posets(7),
            Err(Error::SizeLimit { .. })
        ));
        let limits = Limits {
            max_census_n: 9,
            ..Limits::default()
        };
        assert!(matches!(
            enumerate_labeled_posets_with(8, &limits),
            Err(Error::SizeLimit { limit: 7, .. })
        ));
    }

    #[test]
    fn unlabeled_counts() {
        // 1, 1, 2, 5, 16 posets up to isomorphism
        for (n, expected) in [(0, 1), (1, 1), (2, 2), (3, 5), (4, 16)] {
            let codes: std::collections::HashSet<_> = enumerate_labeled_posets(n)
                .unwrap()
                .map(|p| canonical_code(&p))
                .collect();
            assert_eq!(codes.len(), expected);
        }
    }

    #[test]
    fn random_generators() {
        assert_eq!(random_poset(5, 7, 0.0).unwrap(), Poset::antichain(5));
        let full = random_poset(6, 7, 1.0).unwrap();
        assert_eq!(full.maximal_chains().unwrap(), vec![full.universe()]);
        assert_eq!(canonical_code(&full), canonical_code(&Poset::chain(6)));
        assert_eq!(
            random_poset(5, 42, 0.5).unwrap(),
            random_poset(5, 42, 0.5).unwrap()
        );
        assert_eq!(random_orthoset(6, 1, 0.0).unwrap(), Orthoset::edgeless(6));
        assert_eq!(random_orthoset(6, 1, 1.0).unwrap(), Orthoset::complete(6));
        assert_eq!(
            random_orthoset(8, 3, 0.4).unwrap(),
            random_orthoset(8, 3, 0.4).unwrap()
        );
        assert!(random_poset(3, 0, 1.5).is_err());
        assert!(random_orthoset(3, 0, -0.1).is_err());
    }

    #[test]
    fn theorems_on_fixtures() {
        let a = verify_theorems(&Poset::n_shape()).unwrap();
        assert!(!a.verdicts.n_free && !a.verdicts.dacey && !a.verdicts.orthomodular);
        assert!(a.violations.is_empty());

        let a = verify_theorems(&Poset::diamond22()).unwrap();
        let v = a.verdicts;
        assert!(v.n_free && v.dacey && v.orthomodular);
        assert!(!v.weak_n_free && !v.compatible && !v.boolean);
        assert_eq!(a.lattice_size, 6);
        assert!(a.violations.is_empty());

        let a = verify_theorems(&Poset::chain(4)).unwrap();
        let v = a.verdicts;
        assert!(
            v.n_free && v.weak_n_free && v.dacey && v.compatible && v.orthomodular && v.boolean
        );
        assert_eq!(a.lattice_size, 2);
    }

    #[test]
    fn verdict_violations() {
        let mut v = Verdicts {
            n_free: true,
            covering_n_free: true,
            weak_n_free: true,
            chain_antichain: true,
            dacey: true,
            compatible: true,
            orthomodular: true,
            boolean: true,
        };
        assert!(v.violations().is_empty());
        v.dacey = false;
        assert_eq!(
            v.violations(),
            vec![
                "n_free<=>dacey",
                "dacey<=>orthomodular",
                "compatible=>dacey"
            ]
        );
    }

    #[test]
    fn small_census() {
        let summaries = census_run(3, 2, &Limits::default()).unwrap();
        let totals: Vec<_> = summaries.iter().map(|s| s.total_posets).collect();
        assert_eq!(totals, vec![1, 1, 3, 19]);
        assert!(summaries.iter().all(CensusSummary::is_consistent));
        assert_eq!(summaries, census_run(3, 1, &Limits::default()).unwrap());
        assert!(census_run(3, 0, &Limits::default()).is_err());
    }

    #[test]
    fn shard_replay() {
        let limits = Limits::default();
        let whole = census_run(4, 3, &limits).unwrap().pop().unwrap();
        let replayed = (0..shard_count(4))
            .map(|s| census_shard(4, s, &limits).unwrap())
            .fold(CensusSummary::empty(4), CensusSummary::merge);
        assert_eq!(whole, replayed);
        assert_eq!(whole.total_posets, 219);
    }

    #[test]
    fn predicate_names() {
        for p in SearchPredicate::ALL {
            assert_eq!(p.name().parse::<SearchPredicate>().unwrap(), p);
        }
        assert!("bogus".parse::<SearchPredicate>().is_err());
    }

    #[test]
    fn chains_and_antichains_are_not_strict_counterexamples() {
        let limits = Limits::default();
        for k in 0..7 {
            for p in [Poset::chain(k), Poset::antichain(k)] {
                assert!(!SearchPredicate::NfreeButStrictNotDacey
                    .holds(&p, &limits)
                    .unwrap());
            }
        }
    }

    #[test]
    fn strict_dacey_explorer_contains_the_two_chain() {
        let found = explore(SearchPredicate::StrictDacey, 4, &Limits::default()).unwrap();
        let chain2 = canonical_code(&Poset::chain(2));
        assert!(found
            .iter()
            .any(|p| p.len() == 2 && canonical_code(p) == chain2));
    }
}
