//! Orthosets: the perp operator, its closure, orthoclosed sets, bases, and
//! the Dacey and compatibility tests.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::cliques::maximal_cliques;
use crate::error::{Error, Result};
use crate::limits::{self, Limits};
use crate::subset::SubsetMask;

/// A finite set with an irreflexive symmetric orthogonality relation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Orthoset {
    n: usize,
    adj: Vec<SubsetMask>,
}

impl Orthoset {
    /// Builds an orthoset from unordered orthogonal pairs.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Orthoset> {
        Limits::default().check_elements(n)?;
        let mut adj = vec![SubsetMask::EMPTY; n];
        for &(x, y) in edges {
            crate::poset::check_index(x, n)?;
            crate::poset::check_index(y, n)?;
            if x == y {
                return Err(Error::InvalidParameter(format!(
                    "orthogonality must be irreflexive, got {x} ⊥ {x}"
                )));
            }
            adj[x].insert(y);
            adj[y].insert(x);
        }
        Ok(Orthoset { n, adj })
    }

    /// Builds an orthoset from adjacency rows, checking irreflexivity and symmetry.
    pub fn from_rows(adj: Vec<SubsetMask>) -> Result<Orthoset> {
        let n = adj.len();
        crate::limits::check("element count", n, crate::subset::MAX_ELEMENTS)?;
        for (x, row) in adj.iter().enumerate() {
            if !row.is_subset(SubsetMask::full(n)) {
                return Err(Error::InvalidParameter(format!("row {x} out of range")));
            }
            if row.contains(x) {
                return Err(Error::InvalidParameter(format!("{x} ⊥ {x}")));
            }
            if let Some(y) = row.iter().find(|&y| !adj[y].contains(x)) {
                return Err(Error::InvalidParameter(format!(
                    "{x} ⊥ {y} but not {y} ⊥ {x}"
                )));
            }
        }
        Ok(Orthoset { n, adj })
    }

    pub(crate) fn from_rows_unchecked(adj: Vec<SubsetMask>) -> Orthoset {
        Orthoset { n: adj.len(), adj }
    }

    /// No orthogonal pairs.
    pub fn edgeless(n: usize) -> Orthoset {
        Orthoset::from_rows_unchecked(vec![SubsetMask::EMPTY; n])
    }

    /// Every distinct pair orthogonal.
    pub fn complete(n: usize) -> Orthoset {
        Orthoset::from_rows_unchecked((0..n).map(|x| SubsetMask::full(n).without(x)).collect())
    }

    /// The path `0 – 1 – 2 – 3`.
    pub fn path4() -> Orthoset {
        Orthoset::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).expect("valid fixture")
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn universe(&self) -> SubsetMask {
        SubsetMask::full(self.n)
    }

    /// `x^⊥`.
    pub fn neighbours(&self, x: usize) -> SubsetMask {
        self.adj[x]
    }

    pub fn rows(&self) -> &[SubsetMask] {
        &self.adj
    }

    pub fn orthogonal(&self, x: usize, y: usize) -> bool {
        self.adj[x].contains(y)
    }

    /// Unordered orthogonal pairs `(x, y)` with `x < y`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|x| {
                self.adj[x]
                    .iter()
                    .filter(move |&y| y > x)
                    .map(move |y| (x, y))
            })
            .collect()
    }

    /// The complementary orthoset: distinct `x, y` are orthogonal iff they were not.
    pub fn complement(&self) -> Orthoset {
        Orthoset::from_rows_unchecked(
            (0..self.n)
                .map(|x| self.universe().minus(self.adj[x]).without(x))
                .collect(),
        )
    }

    /// `X` and `Y` are elementwise orthogonal.
    pub fn sets_orthogonal(&self, x: SubsetMask, y: SubsetMask) -> bool {
        x.iter().all(|i| y.is_subset(self.adj[i]))
    }

    /// `S^⊥`: every element orthogonal to all of `S`. `∅^⊥` is the whole set.
    pub fn perp(&self, s: SubsetMask) -> SubsetMask {
        s.iter().fold(self.universe(), |acc, x| acc & self.adj[x])
    }

    /// `S^⊥⊥`.
    pub fn double_perp(&self, s: SubsetMask) -> SubsetMask {
        self.perp(self.perp(s))
    }

    pub fn is_orthoclosed(&self, s: SubsetMask) -> bool {
        self.double_perp(s) == s
    }

    /// Pairwise orthogonal (distinct elements).
    pub fn is_orthogonal_set(&self, s: SubsetMask) -> bool {
        s.iter().all(|x| s.without(x).is_subset(self.adj[x]))
    }

    pub fn enumerate_orthoclosed(&self) -> Result<Vec<SubsetMask>> {
        self.enumerate_orthoclosed_with(&Limits::default())
    }

    /// All orthoclosed sets in increasing bit-vector order.
    ///
    /// The orthoclosed sets are exactly the intersections of subfamilies of
    /// `{x^⊥}` (the empty subfamily giving the whole set), so the family is
    /// grown breadth-first from the whole set by intersecting with each `x^⊥`.
    pub fn enumerate_orthoclosed_with(&self, limits: &Limits) -> Result<Vec<SubsetMask>> {
        limits.check_closed_elements(self.n)?;
        let top = self.universe();
        let mut seen: HashSet<SubsetMask> = HashSet::from([top]);
        let mut frontier = vec![top];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for set in frontier {
                for &generator in &self.adj {
                    let meet = set & generator;
                    if seen.insert(meet) {
                        limits::check("orthoclosed family size", seen.len(), limits.max_family)?;
                        next.push(meet);
                    }
                }
            }
            frontier = next;
        }
        let mut family: Vec<_> = seen.into_iter().collect();
        family.sort_unstable();
        Ok(family)
    }

    /// Maximal pairwise orthogonal subsets of `x`, sorted. Meant for
    /// orthoclosed `x`, but defined for any subset.
    pub fn bases(&self, x: SubsetMask) -> Vec<SubsetMask> {
        maximal_cliques(&self.adj, x)
    }

    /// `x` (assumed orthoclosed) is Dacey: `B^⊥ ⊆ X^⊥` for every basis `B`.
    pub fn is_dacey_subset(&self, x: SubsetMask) -> bool {
        self.dacey_failure(x, DaceyCriterion::PerpContained)
            .is_none()
    }

    /// The first basis of `x` violating `criterion`, if any.
    pub fn dacey_failure(&self, x: SubsetMask, criterion: DaceyCriterion) -> Option<SubsetMask> {
        let x_perp = self.perp(x);
        self.bases(x).into_iter().find(|&b| {
            let ok = match criterion {
                DaceyCriterion::Closure => self.double_perp(b) == x,
                DaceyCriterion::PerpEqual => self.perp(b) == x_perp,
                DaceyCriterion::PerpContained => self.perp(b).is_subset(x_perp),
            };
            !ok
        })
    }

    pub fn is_dacey(&self) -> Result<DaceyVerdict> {
        self.is_dacey_with(&Limits::default())
    }

    /// Checks every orthoclosed set; the witness is the lexicographically
    /// smallest failing `(X, B)`.
    pub fn is_dacey_with(&self, limits: &Limits) -> Result<DaceyVerdict> {
        for x in self.enumerate_orthoclosed_with(limits)? {
            if let Some(b) = self.dacey_failure(x, DaceyCriterion::PerpContained) {
                return Ok(DaceyVerdict {
                    dacey: false,
                    witness: Some(DaceyWitness {
                        closed: x,
                        basis: b,
                    }),
                });
            }
        }
        Ok(DaceyVerdict {
            dacey: true,
            witness: None,
        })
    }

    /// Does the pair `(x, y)` violate compatibility, i.e. `x ⊥̸ y` and no
    /// `z` has `x^⊥ ∪ y^⊥ ⊆ z^⊥`?
    pub fn compatibility_fails_at(&self, x: usize, y: usize) -> bool {
        if self.orthogonal(x, y) {
            return false;
        }
        let union = self.adj[x] | self.adj[y];
        !(0..self.n).any(|z| union.is_subset(self.adj[z]))
    }

    /// Compatibility by its definition: first failing pair `(x, y)`, `x ≤ y`.
    pub fn compatibility_failure(&self) -> Option<(usize, usize)> {
        (0..self.n)
            .flat_map(|x| (x..self.n).map(move |y| (x, y)))
            .find(|&(x, y)| self.compatibility_fails_at(x, y))
    }

    /// Compatibility via closures: first pair `(x, y)`, `x ≤ y`, with
    /// disjoint `x^⊥⊥`, `y^⊥⊥` that is not orthogonal.
    pub fn closure_compatibility_failure(&self) -> Option<(usize, usize)> {
        let closures: Vec<_> = (0..self.n)
            .map(|x| self.double_perp(SubsetMask::singleton(x)))
            .collect();
        (0..self.n)
            .flat_map(|x| (x..self.n).map(move |y| (x, y)))
            .find(|&(x, y)| closures[x].is_disjoint(closures[y]) && !self.orthogonal(x, y))
    }

    pub fn is_compatible(&self) -> Result<CompatibilityVerdict> {
        self.is_compatible_with(&Limits::default())
    }

    /// Evaluates both formulations and fails loudly if they disagree.
    pub fn is_compatible_with(&self, limits: &Limits) -> Result<CompatibilityVerdict> {
        limits.check_closed_elements(self.n)?;
        let by_definition = self.compatibility_failure();
        let by_closures = self.closure_compatibility_failure();
        if by_definition.is_some() != by_closures.is_some() {
            return Err(Error::Invariant(format!(
                "compatibility formulations disagree: {by_definition:?} vs {by_closures:?}"
            )));
        }
        Ok(CompatibilityVerdict {
            compatible: by_definition.is_none(),
            witness: by_definition,
        })
    }

    /// `X` orthoclosed with `Y = X^⊥`, decided without computing any perp:
    /// `X ⊥ Y` and every `z ∉ X ∪ Y` is non-orthogonal to some member of
    /// each side.
    pub fn orthocomplement_pair_check(&self, x: SubsetMask, y: SubsetMask) -> bool {
        if !self.sets_orthogonal(x, y) {
            return false;
        }
        self.universe().minus(x | y).iter().all(|z| {
            let far = self.universe().minus(self.adj[z]);
            far.intersects(x) && far.intersects(y)
        })
    }
}

/// The three equivalent ways to state that an orthoclosed `X` is Dacey,
/// each quantified over all bases `B` of `X`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DaceyCriterion {
    /// `X = B^⊥⊥`
    Closure,
    /// `B^⊥ = X^⊥`
    PerpEqual,
    /// `B^⊥ ⊆ X^⊥`
    PerpContained,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DaceyWitness {
    pub closed: SubsetMask,
    pub basis: SubsetMask,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DaceyVerdict {
    pub dacey: bool,
    pub witness: Option<DaceyWitness>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompatibilityVerdict {
    pub compatible: bool,
    pub witness: Option<(usize, usize)>,
}
