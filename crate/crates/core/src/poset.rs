//! Finite posets stored as strict-order and cover rows over dense indices.

use serde::{Deserialize, Serialize};

use crate::cliques::maximal_cliques;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::subset::SubsetMask;

/// A finite partially ordered set on the elements `0..n`.
///
/// Row `x` of `lt` holds every `y` with `x < y`; row `x` of `cover` holds
/// every `y` covering `x`. The relation is immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Poset {
    n: usize,
    labels: Option<Vec<String>>,
    lt: Vec<SubsetMask>,
    gt: Vec<SubsetMask>,
    cover: Vec<SubsetMask>,
}

impl Poset {
    /// Builds a poset from any acyclic relation: the order is its transitive
    /// closure and the covers its transitive reduction, so the listed pairs
    /// need not be covers.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Poset> {
        Self::from_covers_with(n, covers, &Limits::default())
    }

    pub fn from_covers_with(n: usize, covers: &[(usize, usize)], limits: &Limits) -> Result<Poset> {
        limits.check_elements(n)?;
        let mut lt = vec![SubsetMask::EMPTY; n];
        for &(x, y) in covers {
            check_index(x, n)?;
            check_index(y, n)?;
            lt[x].insert(y);
        }
        // Warshall over bitset rows.
        for k in 0..n {
            for i in 0..n {
                if lt[i].contains(k) {
                    let row = lt[k];
                    lt[i] |= row;
                }
            }
        }
        if let Some(x) = (0..n).find(|&x| lt[x].contains(x)) {
            return Err(Error::Cycle(x));
        }
        Ok(Self::from_closed_order(lt))
    }

    /// Builds a poset from strict-order rows, validating every order axiom.
    pub fn from_strict_order(lt: Vec<SubsetMask>) -> Result<Poset> {
        let n = lt.len();
        Limits::default().check_elements(n)?;
        for (x, row) in lt.iter().enumerate() {
            if !row.is_subset(SubsetMask::full(n)) {
                return Err(Error::Index {
                    index: row.iter().last().unwrap_or(0),
                    n,
                });
            }
            if row.contains(x) {
                return Err(Error::Cycle(x));
            }
            for y in *row {
                if lt[y].contains(x) {
                    return Err(Error::Cycle(x));
                }
                if !lt[y].is_subset(*row) {
                    return Err(Error::Invariant(format!(
                        "strict order is not transitive at {x} < {y}"
                    )));
                }
            }
        }
        Ok(Self::from_closed_order(lt))
    }

    /// `lt` must already be irreflexive, antisymmetric and transitive.
    pub(crate) fn from_closed_order(lt: Vec<SubsetMask>) -> Poset {
        let n = lt.len();
        let mut gt = vec![SubsetMask::EMPTY; n];
        for (x, row) in lt.iter().enumerate() {
            for y in *row {
                gt[y].insert(x);
            }
        }
        let cover = lt
            .iter()
            .map(|&row| {
                let mut reachable_in_two = SubsetMask::EMPTY;
                for z in row {
                    reachable_in_two |= lt[z];
                }
                row.minus(reachable_in_two)
            })
            .collect();
        Poset {
            n,
            labels: None,
            lt,
            gt,
            cover,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Poset> {
        if labels.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "{} labels for {} elements",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn chain(n: usize) -> Poset {
        let covers: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Poset::from_covers(n, &covers).expect("a chain is acyclic")
    }

    pub fn antichain(n: usize) -> Poset {
        Poset::from_covers(n, &[]).expect("an antichain is acyclic")
    }

    /// The four-element N: `a < c`, `b < c`, `b < d`, indices `a,b,c,d = 0,1,2,3`.
    pub fn n_shape() -> Poset {
        Poset::from_covers(4, &[(0, 2), (1, 2), (1, 3)])
            .and_then(|p| p.with_labels(abcd()))
            .expect("valid fixture")
    }

    /// Two minimal elements below two maximal ones: `a, b < c, d`.
    pub fn diamond22() -> Poset {
        Poset::from_covers(4, &[(0, 2), (0, 3), (1, 2), (1, 3)])
            .and_then(|p| p.with_labels(abcd()))
            .expect("valid fixture")
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of element `x`: its label, or its index.
    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(labels) => labels[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn universe(&self) -> SubsetMask {
        SubsetMask::full(self.n)
    }

    /// Elements strictly above `x`.
    pub fn above(&self, x: usize) -> SubsetMask {
        self.lt[x]
    }

    /// Elements strictly below `x`.
    pub fn below(&self, x: usize) -> SubsetMask {
        self.gt[x]
    }

    /// Elements covering `x`.
    pub fn upper_covers(&self, x: usize) -> SubsetMask {
        self.cover[x]
    }

    /// Elements distinct from `x` and comparable to it.
    pub fn comparable_to(&self, x: usize) -> SubsetMask {
        self.lt[x] | self.gt[x]
    }

    /// Elements incomparable to `x` (never `x` itself).
    pub fn incomparable_to(&self, x: usize) -> SubsetMask {
        self.universe().minus(self.comparable_to(x)).without(x)
    }

    pub fn lt(&self, x: usize, y: usize) -> Result<bool> {
        self.check_pair(x, y)?;
        Ok(self.lt[x].contains(y))
    }

    pub fn leq(&self, x: usize, y: usize) -> Result<bool> {
        self.check_pair(x, y)?;
        Ok(x == y || self.lt[x].contains(y))
    }

    pub fn incomparable(&self, x: usize, y: usize) -> Result<bool> {
        self.check_pair(x, y)?;
        Ok(self.incomparable_to(x).contains(y))
    }

    /// `y` covers `x`.
    pub fn covers(&self, x: usize, y: usize) -> Result<bool> {
        self.check_pair(x, y)?;
        Ok(self.cover[x].contains(y))
    }

    /// Cover pairs `(x, y)` with `x ≺ y`, in lexicographic order.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|x| self.cover[x].iter().map(move |y| (x, y)))
            .collect()
    }

    /// Strict-order rows, `rows[x]` = elements above `x`.
    pub fn order_rows(&self) -> &[SubsetMask] {
        &self.lt
    }

    /// The order-reversed poset; labels are kept.
    pub fn dual(&self) -> Poset {
        let mut cover = vec![SubsetMask::EMPTY; self.n];
        for (x, y) in self.cover_pairs() {
            cover[y].insert(x);
        }
        Poset {
            n: self.n,
            labels: self.labels.clone(),
            lt: self.gt.clone(),
            gt: self.lt.clone(),
            cover,
        }
    }

    pub fn maximal_chains(&self) -> Result<Vec<SubsetMask>> {
        self.maximal_chains_with(&Limits::default())
    }

    pub fn maximal_chains_with(&self, limits: &Limits) -> Result<Vec<SubsetMask>> {
        limits.check_elements(self.n)?;
        let comparability: Vec<_> = (0..self.n).map(|x| self.comparable_to(x)).collect();
        Ok(maximal_cliques(&comparability, self.universe()))
    }

    pub fn maximal_antichains(&self) -> Result<Vec<SubsetMask>> {
        self.maximal_antichains_with(&Limits::default())
    }

    pub fn maximal_antichains_with(&self, limits: &Limits) -> Result<Vec<SubsetMask>> {
        limits.check_elements(self.n)?;
        let incomparability: Vec<_> = (0..self.n).map(|x| self.incomparable_to(x)).collect();
        Ok(maximal_cliques(&incomparability, self.universe()))
    }

    /// Re-checks the order axioms and the cover/order consistency from scratch.
    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        let fail = |msg: String| Err(Error::Invariant(msg));
        for x in 0..n {
            if self.lt[x].contains(x) {
                return fail(format!("{x} < {x}"));
            }
            for y in 0..n {
                let xy = self.lt[x].contains(y);
                if xy && self.lt[y].contains(x) {
                    return fail(format!("{x} < {y} < {x}"));
                }
                if xy != self.gt[y].contains(x) {
                    return fail(format!("lower and upper rows disagree on {x} < {y}"));
                }
                let between = (0..n).any(|z| self.lt[x].contains(z) && self.lt[z].contains(y));
                if self.cover[x].contains(y) != (xy && !between) {
                    return fail(format!("cover relation wrong at ({x}, {y})"));
                }
                for z in 0..n {
                    if xy && self.lt[y].contains(z) && !self.lt[x].contains(z) {
                        return fail(format!("{x} < {y} < {z} but not {x} < {z}"));
                    }
                }
            }
        }
        // lt must be the transitive closure of cover
        let mut closure = self.cover.clone();
        for k in 0..n {
            for i in 0..n {
                if closure[i].contains(k) {
                    let row = closure[k];
                    closure[i] |= row;
                }
            }
        }
        if closure != self.lt {
            return fail("order is not the closure of the covers".into());
        }
        Ok(())
    }

    fn check_pair(&self, x: usize, y: usize) -> Result<()> {
        check_index(x, self.n)?;
        check_index(y, self.n)
    }
}

fn abcd() -> Vec<String> {
    ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect()
}

pub(crate) fn check_index(index: usize, n: usize) -> Result<()> {
    if index < n {
        Ok(())
    } else {
        Err(Error::Index { index, n })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> SubsetMask {
        SubsetMask::from_indices(xs.iter().copied())
    }

    /// Filters all 2^n subsets for ⊆-maximal ones satisfying `pred`.
    fn brute_maximal(n: usize, pred: impl Fn(SubsetMask) -> bool) -> Vec<SubsetMask> {
        let good: Vec<_> = (0..1u64 << n)
            .map(SubsetMask::from_bits)
            .filter(|&s| pred(s))
            .collect();
        good.iter()
            .copied()
            .filter(|s| !good.iter().any(|t| t != s && s.is_subset(*t)))
            .collect()
    }

    #[test]
    fn chain_closure_is_transitive() {
        let p = Poset::from_covers(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(p.lt(0, 2).unwrap());
        assert!(!p.covers(0, 2).unwrap());
        assert!(p.covers(1, 2).unwrap());
        assert!(!p.incomparable(0, 2).unwrap());
        p.validate().unwrap();
    }

    #[test]
    fn n_shape_incomparable_pairs() {
        let p = Poset::n_shape();
        let mut pairs = vec![];
        for x in 0..4 {
            for y in x + 1..4 {
                if p.incomparable(x, y).unwrap() {
                    pairs.push((x, y));
                }
            }
        }
        // {a,b}, {a,d}, {c,d}
        assert_eq!(pairs, vec![(0, 1), (0, 3), (2, 3)]);
        assert!(p.incomparable(0, 3).unwrap());
    }

    #[test]
    fn cycle_is_rejected() {
        assert_eq!(
            Poset::from_covers(2, &[(0, 1), (1, 0)]),
            Err(Error::Cycle(0))
        );
        assert!(matches!(
            Poset::from_covers(1, &[(0, 0)]),
            Err(Error::Cycle(0))
        ));
    }

    #[test]
    fn bad_indices() {
        assert_eq!(
            Poset::from_covers(2, &[(0, 2)]),
            Err(Error::Index { index: 2, n: 2 })
        );
        let p = Poset::chain(2);
        assert!(matches!(p.lt(0, 5), Err(Error::Index { index: 5, .. })));
        assert!(matches!(p.incomparable(3, 0), Err(Error::Index { .. })));
    }

    #[test]
    fn non_cover_input_is_reduced() {
        let p = Poset::from_covers(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(p, Poset::chain(3));
        assert_eq!(p.cover_pairs(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn size_cap() {
        assert!(matches!(
            Poset::from_covers(25, &[]),
            Err(Error::SizeLimit { .. })
        ));
        let limits = Limits {
            max_elements: 40,
            ..Limits::default()
        };
        assert_eq!(Poset::from_covers_with(40, &[], &limits).unwrap().len(), 40);
    }

    #[test]
    fn antichain_is_all_incomparable() {
        let p = Poset::antichain(3);
        assert!(p.incomparable(0, 1).unwrap());
        assert!(!p.incomparable(1, 1).unwrap());
        assert!(p.leq(1, 1).unwrap());
    }

    #[test]
    fn dual_behaviour() {
        let c = Poset::chain(3).dual();
        assert!(c.lt(2, 0).unwrap());
        assert!(!c.lt(0, 2).unwrap());
        c.validate().unwrap();

        let n = Poset::n_shape();
        assert_eq!(n.dual().dual(), n);
        for x in 0..4 {
            assert_eq!(n.incomparable_to(x), n.dual().incomparable_to(x));
        }
    }

    #[test]
    fn chains_and_antichains_of_small_fixtures() {
        let c = Poset::chain(3);
        assert_eq!(c.maximal_chains().unwrap(), vec![set(&[0, 1, 2])]);
        assert_eq!(
            c.maximal_antichains().unwrap(),
            vec![set(&[0]), set(&[1]), set(&[2])]
        );
        assert_eq!(
            Poset::antichain(3).maximal_antichains().unwrap(),
            vec![set(&[0, 1, 2])]
        );

        // a,b,c,d = 0,1,2,3; expected sets from brute force, sorted by value
        let n = Poset::n_shape();
        assert_eq!(
            n.maximal_chains().unwrap(),
            vec![set(&[0, 2]), set(&[1, 2]), set(&[1, 3])]
        );
        assert_eq!(
            n.maximal_antichains().unwrap(),
            vec![set(&[0, 1]), set(&[0, 3]), set(&[2, 3])]
        );
    }

    #[test]
    fn chains_match_subset_filter() {
        let p = Poset::from_covers(6, &[(0, 2), (1, 2), (1, 3), (2, 4), (3, 5), (0, 5)]).unwrap();
        let is_chain = |s: SubsetMask| s.iter().all(|x| s.without(x).is_subset(p.comparable_to(x)));
        let is_antichain = |s: SubsetMask| s.iter().all(|x| p.comparable_to(x).is_disjoint(s));
        assert_eq!(p.maximal_chains().unwrap(), brute_maximal(6, is_chain));
        assert_eq!(
            p.maximal_antichains().unwrap(),
            brute_maximal(6, is_antichain)
        );
    }

    #[test]
    fn strict_order_validation() {
        let ok = Poset::from_strict_order(vec![set(&[1, 2]), set(&[2]), set(&[])]).unwrap();
        assert_eq!(ok, Poset::chain(3));
        assert!(Poset::from_strict_order(vec![set(&[1]), set(&[2]), set(&[])]).is_err());
        assert!(Poset::from_strict_order(vec![set(&[1]), set(&[0])]).is_err());
    }

    #[test]
    fn labels_must_match_size() {
        assert!(Poset::chain(2).with_labels(vec!["x".into()]).is_err());
        assert_eq!(Poset::n_shape().label(3), "d");
        assert_eq!(Poset::chain(2).label(1), "1");
    }
}
