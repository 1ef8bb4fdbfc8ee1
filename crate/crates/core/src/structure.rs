//! Forbidden-pattern detection (N, covering N, weak N) and the maximal
//! chain / maximal antichain intersection property.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::limits::Limits;
use crate::poset::Poset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NKind {
    /// `a<c`, `b≺c`, `b<d`; `a,b`, `a,d` and `c,d` incomparable.
    N,
    /// An N whose three comparable pairs are all covers.
    CoveringN,
    /// `a<c`, `b≺c`, `b<d`, `a⊥b`, `c⊥d`; `a,d` unconstrained.
    WeakN,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NWitness {
    pub kind: NKind,
    /// `(a, b, c, d)`.
    pub quad: [usize; 4],
}

impl NWitness {
    /// Re-checks the defining conditions of `self.kind` against `p`.
    pub fn holds_in(&self, p: &Poset) -> bool {
        let [a, b, c, d] = self.quad;
        if self.quad.iter().any(|&x| x >= p.len()) {
            return false;
        }
        matches_kind(p, self.kind, a, b, c, d)
    }
}

fn matches_kind(p: &Poset, kind: NKind, a: usize, b: usize, c: usize, d: usize) -> bool {
    let lt = |x: usize, y: usize| p.above(x).contains(y);
    let inc = |x: usize, y: usize| p.incomparable_to(x).contains(y);
    let base = lt(a, c) && p.upper_covers(b).contains(c) && lt(b, d) && inc(a, b) && inc(c, d);
    match kind {
        NKind::WeakN => base,
        NKind::N => base && inc(a, d),
        NKind::CoveringN => {
            base && inc(a, d) && p.upper_covers(a).contains(c) && p.upper_covers(b).contains(d)
        }
    }
}

/// Lexicographically smallest `(a,b,c,d)` of the given kind.
fn find(p: &Poset, kind: NKind) -> Option<NWitness> {
    let n = p.len();
    for a in 0..n {
        let a_incomparable = p.incomparable_to(a);
        for b in a_incomparable {
            // c ranges over upper covers of b that lie above a
            let cs = p.upper_covers(b) & p.above(a);
            if cs.is_empty() {
                continue;
            }
            for c in cs {
                let mut ds = p.above(b) & p.incomparable_to(c);
                if kind != NKind::WeakN {
                    ds &= a_incomparable;
                }
                if kind == NKind::CoveringN {
                    if !p.upper_covers(a).contains(c) {
                        continue;
                    }
                    ds &= p.upper_covers(b);
                }
                if let Some(d) = ds.first() {
                    return Some(NWitness {
                        kind,
                        quad: [a, b, c, d],
                    });
                }
            }
        }
    }
    None
}

pub fn find_n(p: &Poset) -> Option<NWitness> {
    find(p, NKind::N)
}

pub fn find_covering_n(p: &Poset) -> Option<NWitness> {
    find(p, NKind::CoveringN)
}

pub fn find_weak_n(p: &Poset) -> Option<NWitness> {
    find(p, NKind::WeakN)
}

pub fn is_n_free(p: &Poset) -> bool {
    find_n(p).is_none()
}

pub fn is_weak_n_free(p: &Poset) -> bool {
    find_weak_n(p).is_none()
}

/// A maximal chain and a maximal antichain that do not meet, if any.
///
/// The empty poset has no counterexample: its only maximal chain and
/// antichain are both `∅`, and there is no element to miss.
pub fn chain_antichain_counterexample(
    p: &Poset,
    limits: &Limits,
) -> Result<Option<(crate::SubsetMask, crate::SubsetMask)>> {
    if p.is_empty() {
        return Ok(None);
    }
    let chains = p.maximal_chains_with(limits)?;
    let antichains = p.maximal_antichains_with(limits)?;
    for &chain in &chains {
        if let Some(&antichain) = antichains.iter().find(|a| a.is_disjoint(chain)) {
            return Ok(Some((chain, antichain)));
        }
    }
    Ok(None)
}

/// Every maximal chain meets every maximal antichain.
pub fn chain_antichain_property(p: &Poset) -> Result<bool> {
    Ok(chain_antichain_counterexample(p, &Limits::default())?.is_none())
}
