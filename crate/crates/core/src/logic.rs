//! The logic of an orthoset: its orthoclosed sets as an ortholattice, with
//! the ortholattice axioms, the orthomodular law and distributivity checked
//! by exhaustive evaluation.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::{self, Limits};
use crate::orthoset::Orthoset;
use crate::subset::SubsetMask;

/// The complete ortholattice of orthoclosed sets, with operation tables.
///
/// Elements are sorted by bit-vector value, so index 0 is `∅` and the last
/// index is the whole set.
#[derive(Debug, Clone)]
pub struct Logic {
    elements: Vec<SubsetMask>,
    index: HashMap<SubsetMask, usize>,
    ocompl: Vec<usize>,
    meet: Vec<u32>,
    join: Vec<u32>,
}

impl Logic {
    pub fn build(o: &Orthoset) -> Result<Logic> {
        Self::build_with(o, &Limits::default())
    }

    pub fn build_with(o: &Orthoset, limits: &Limits) -> Result<Logic> {
        let elements = o.enumerate_orthoclosed_with(limits)?;
        let m = elements.len();
        limits::check("logic size", m, limits.max_lattice)?;
        let index: HashMap<_, _> = elements.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let lookup = |s: SubsetMask, what: &str| {
            index
                .get(&s)
                .copied()
                .ok_or_else(|| Error::Invariant(format!("{what} {s:?} is not orthoclosed")))
        };

        let mut meet = vec![0u32; m * m];
        let mut join = vec![0u32; m * m];
        let perps: Vec<_> = elements.iter().map(|&s| o.perp(s)).collect();
        for i in 0..m {
            for j in i..m {
                let (a, b) = (elements[i], elements[j]);
                let k = lookup(a & b, "meet")? as u32;
                meet[i * m + j] = k;
                meet[j * m + i] = k;

                let via_union = o.double_perp(a | b);
                let via_perps = o.perp(perps[i] & perps[j]);
                if via_union != via_perps {
                    return Err(Error::Invariant(format!(
                        "join of {a:?} and {b:?}: {via_union:?} vs {via_perps:?}"
                    )));
                }
                let k = lookup(via_union, "join")? as u32;
                join[i * m + j] = k;
                join[j * m + i] = k;
            }
        }
        let ocompl = perps
            .iter()
            .map(|&s| lookup(s, "orthocomplement"))
            .collect::<Result<Vec<_>>>()?;

        Ok(Logic {
            elements,
            index,
            ocompl,
            meet,
            join,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[SubsetMask] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> SubsetMask {
        self.elements[i]
    }

    pub fn index_of(&self, s: SubsetMask) -> Option<usize> {
        self.index.get(&s).copied()
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.elements.len() - 1
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.elements[i].is_subset(self.elements[j])
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i * self.len() + j] as usize
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join[i * self.len() + j] as usize
    }

    pub fn ocompl(&self, i: usize) -> usize {
        self.ocompl[i]
    }

    /// Cover pairs `(i, j)` of the inclusion order.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let m = self.len();
        let mut out = Vec::new();
        for i in 0..m {
            let above: Vec<usize> = (0..m).filter(|&j| j != i && self.leq(i, j)).collect();
            for &j in &above {
                if !above.iter().any(|&k| k != j && self.leq(k, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Checks every ortholattice axiom over all elements and pairs, plus
    /// that the order is bounded by `∅` and the whole set.
    pub fn verify_ortholattice(&self) -> AxiomReport {
        let (bot, top) = (self.bottom(), self.top());
        let m = self.len();
        let fail = |axiom: &'static str, elements: &[usize]| AxiomReport {
            passed: false,
            failure: Some(AxiomFailure {
                axiom: axiom.to_string(),
                elements: elements.iter().map(|&i| self.elements[i]).collect(),
            }),
        };

        if !self.elements[bot].is_empty() {
            return fail("bottom is empty", &[bot]);
        }
        if let Some(i) = (0..m).find(|&i| !self.leq(bot, i) || !self.leq(i, top)) {
            return fail("bounded order", &[i]);
        }
        if self.ocompl(bot) != top {
            return fail("0^⊥ = 1", &[bot]);
        }
        if self.ocompl(top) != bot {
            return fail("1^⊥ = 0", &[top]);
        }
        for x in 0..m {
            let xc = self.ocompl(x);
            if self.ocompl(xc) != x {
                return fail("x^⊥⊥ = x", &[x]);
            }
            if self.meet(x, xc) != bot {
                return fail("x ∧ x^⊥ = 0", &[x]);
            }
            if self.join(x, xc) != top {
                return fail("x ∨ x^⊥ = 1", &[x]);
            }
        }
        for x in 0..m {
            for y in 0..m {
                let (xc, yc) = (self.ocompl(x), self.ocompl(y));
                if self.ocompl(self.join(x, y)) != self.meet(xc, yc) {
                    return fail("(x ∨ y)^⊥ = x^⊥ ∧ y^⊥", &[x, y]);
                }
                if self.ocompl(self.meet(x, y)) != self.join(xc, yc) {
                    return fail("(x ∧ y)^⊥ = x^⊥ ∨ y^⊥", &[x, y]);
                }
                if self.leq(x, y) && !self.leq(yc, xc) {
                    return fail("antitone", &[x, y]);
                }
            }
        }
        AxiomReport {
            passed: true,
            failure: None,
        }
    }

    /// First comparable pair `x ≤ y` with `y ≠ x ∨ (y ∧ x^⊥)`.
    pub fn is_orthomodular(&self) -> OrthomodularVerdict {
        let m = self.len();
        for x in 0..m {
            for y in 0..m {
                if self.leq(x, y) && self.join(x, self.meet(y, self.ocompl(x))) != y {
                    return OrthomodularVerdict {
                        orthomodular: false,
                        witness: Some((self.elements[x], self.elements[y])),
                    };
                }
            }
        }
        OrthomodularVerdict {
            orthomodular: true,
            witness: None,
        }
    }

    /// First pair with `a ∧ b = 0` but not `a ≤ b^⊥`.
    pub fn disjointness_failure(&self) -> Option<(usize, usize)> {
        let m = self.len();
        (0..m)
            .flat_map(|a| (0..m).map(move |b| (a, b)))
            .find(|&(a, b)| self.meet(a, b) == self.bottom() && !self.leq(a, self.ocompl(b)))
    }

    /// Full distributivity scan, cross-checked against the disjointness
    /// criterion for Boolean ortholattices.
    pub fn is_boolean(&self) -> Result<BooleanVerdict> {
        let m = self.len();
        let mut witness = None;
        'scan: for x in 0..m {
            for y in 0..m {
                for z in 0..m {
                    let lhs = self.meet(x, self.join(y, z));
                    let rhs = self.join(self.meet(x, y), self.meet(x, z));
                    if lhs != rhs {
                        witness = Some((x, y, z));
                        break 'scan;
                    }
                }
            }
        }
        let by_disjointness = self.disjointness_failure();
        if witness.is_some() != by_disjointness.is_some() {
            return Err(Error::Invariant(format!(
                "distributivity ({witness:?}) and disjointness ({by_disjointness:?}) disagree"
            )));
        }
        Ok(BooleanVerdict {
            boolean: witness.is_none(),
            witness: witness
                .map(|(x, y, z)| (self.elements[x], self.elements[y], self.elements[z])),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomFailure {
    pub axiom: String,
    pub elements: Vec<SubsetMask>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub passed: bool,
    pub failure: Option<AxiomFailure>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrthomodularVerdict {
    pub orthomodular: bool,
    /// `(x, y)` with `x ≤ y` violating the orthomodular law.
    pub witness: Option<(SubsetMask, SubsetMask)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BooleanVerdict {
    pub boolean: bool,
    /// `(x, y, z)` with `x ∧ (y ∨ z) ≠ (x ∧ y) ∨ (x ∧ z)`.
    pub witness: Option<(SubsetMask, SubsetMask, SubsetMask)>,
}
