//! Poset text files, Graphviz output and JSON reports.
//!
//! A poset file is line oriented:
//!
//! ```text
//! # the N
//! element a
//! element b
//! cover a b      # a < b
//! ```
//!
//! `cover x y` states `x < y`; listed pairs need not be covers. Everything
//! from `#` to the end of a line is ignored, as are blank lines.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::bridges::incomparability_orthoset;
use crate::census::{Analysis, Verdicts};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::logic::Logic;
use crate::poset::Poset;
use crate::structure::NWitness;
use crate::subset::SubsetMask;

pub fn parse_poset_file(text: &str) -> Result<Poset> {
    parse_poset_file_with(text, &Limits::default())
}

pub fn parse_poset_file_with(text: &str, limits: &Limits) -> Result<Poset> {
    let mut names: Vec<String> = Vec::new();
    let mut pairs = Vec::new();
    let lookup = |names: &[String], name: &str, line: usize| {
        names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownElement {
                line,
                name: name.to_string(),
            })
    };
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            ["element", name] => {
                if names.iter().any(|n| n == name) {
                    return Err(Error::DuplicateElement {
                        line,
                        name: name.to_string(),
                    });
                }
                names.push(name.to_string());
            }
            ["cover", x, y] => {
                let x = lookup(&names, x, line)?;
                let y = lookup(&names, y, line)?;
                pairs.push((x, y));
            }
            [keyword, ..] if *keyword == "element" || *keyword == "cover" => {
                return Err(Error::Syntax {
                    line,
                    message: format!("wrong number of arguments to `{keyword}`"),
                });
            }
            [other, ..] => {
                return Err(Error::Syntax {
                    line,
                    message: format!("unknown directive `{other}`"),
                });
            }
        }
    }
    Poset::from_covers_with(names.len(), &pairs, limits)?.with_labels(names)
}

/// Writes `p` in the poset file format, listing only cover pairs.
pub fn to_poset_file(p: &Poset) -> String {
    let mut out = String::new();
    for x in 0..p.len() {
        writeln!(out, "element {}", p.label(x)).unwrap();
    }
    for (x, y) in p.cover_pairs() {
        writeln!(out, "cover {} {}", p.label(x), p.label(y)).unwrap();
    }
    out
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Hasse diagram as a DOT digraph; edges point upward from `x` to each `y ≻ x`.
pub fn emit_dot_hasse(p: &Poset) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n");
    for x in 0..p.len() {
        writeln!(out, "  n{x} [label={}];", quote(&p.label(x))).unwrap();
    }
    for (x, y) in p.cover_pairs() {
        writeln!(out, "  n{x} -> n{y};").unwrap();
    }
    out.push_str("}\n");
    out
}

fn set_name(s: SubsetMask, names: &[String]) -> String {
    let members: Vec<&str> = s.iter().map(|i| names[i].as_str()).collect();
    format!("{{{}}}", members.join(","))
}

fn names_of(p: &Poset) -> Vec<String> {
    (0..p.len()).map(|x| p.label(x)).collect()
}

/// The logic's Hasse diagram as a DOT digraph. Each node is labelled by its
/// orthoclosed set and annotated with its orthocomplement.
pub fn emit_dot_lattice(l: &Logic, names: &[String]) -> String {
    let mut out = String::from("digraph logic {\n  rankdir=BT;\n  node [shape=box];\n");
    for i in 0..l.len() {
        writeln!(
            out,
            "  l{i} [label={}, xlabel={}];",
            quote(&set_name(l.element(i), names)),
            quote(&format!("⊥ {}", set_name(l.element(l.ocompl(i)), names)))
        )
        .unwrap();
    }
    for (i, j) in l.cover_pairs() {
        writeln!(out, "  l{i} -> l{j};").unwrap();
    }
    out.push_str("}\n");
    out
}

// ---------------------------------------------------------------------------
// JSON reports
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainAntichain {
    pub chain: Vec<String>,
    pub antichain: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DaceyFailure {
    pub closed: Vec<String>,
    pub basis: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrthomodularFailure {
    pub x: Vec<String>,
    pub y: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistributivityFailure {
    pub x: Vec<String>,
    pub y: Vec<String>,
    pub z: Vec<String>,
}

/// Counterexamples, as element labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witnesses {
    pub n: Option<[String; 4]>,
    pub covering_n: Option<[String; 4]>,
    pub weak_n: Option<[String; 4]>,
    pub chain_antichain: Option<ChainAntichain>,
    pub dacey: Option<DaceyFailure>,
    pub compatible: Option<(String, String)>,
    pub orthomodular: Option<OrthomodularFailure>,
    pub boolean: Option<DistributivityFailure>,
}

/// Everything `analyze` reports about one poset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub input: InputEcho,
    pub verdicts: Verdicts,
    pub witnesses: Witnesses,
    pub lattice_size: usize,
    pub ortholattice_axioms: bool,
    pub violations: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_us: Option<u64>,
}

impl Report {
    pub fn new(p: &Poset, a: &Analysis) -> Report {
        let names = names_of(p);
        let set = |s: SubsetMask| s.iter().map(|i| names[i].clone()).collect::<Vec<_>>();
        let quad = |w: &Option<NWitness>| w.map(|w| w.quad.map(|i| names[i].clone()));
        Report {
            input: InputEcho {
                elements: names.clone(),
                covers: p
                    .cover_pairs()
                    .into_iter()
                    .map(|(x, y)| (names[x].clone(), names[y].clone()))
                    .collect(),
            },
            verdicts: a.verdicts,
            witnesses: Witnesses {
                n: quad(&a.n_witness),
                covering_n: quad(&a.covering_n_witness),
                weak_n: quad(&a.weak_n_witness),
                chain_antichain: a.chain_antichain_witness.map(|(c, ac)| ChainAntichain {
                    chain: set(c),
                    antichain: set(ac),
                }),
                dacey: a.dacey.witness.map(|w| DaceyFailure {
                    closed: set(w.closed),
                    basis: set(w.basis),
                }),
                compatible: a
                    .compatible
                    .witness
                    .map(|(x, y)| (names[x].clone(), names[y].clone())),
                orthomodular: a.orthomodular.witness.map(|(x, y)| OrthomodularFailure {
                    x: set(x),
                    y: set(y),
                }),
                boolean: a.boolean.witness.map(|(x, y, z)| DistributivityFailure {
                    x: set(x),
                    y: set(y),
                    z: set(z),
                }),
            },
            lattice_size: a.lattice_size,
            ortholattice_axioms: a.ortholattice.passed,
            violations: a.violations.clone(),
            timing_us: None,
        }
    }

    /// Re-derives every witness from `p` alone: each must exist exactly when
    /// its predicate is false and must actually violate that predicate.
    pub fn revalidate(&self, p: &Poset) -> bool {
        let names = names_of(p);
        if self.input.elements != names {
            return false;
        }
        let index = |s: &String| names.iter().position(|n| n == s);
        let mask = |v: &[String]| -> Option<SubsetMask> {
            v.iter()
                .map(index)
                .collect::<Option<Vec<_>>>()
                .map(SubsetMask::from_iter)
        };
        let o = incomparability_orthoset(p);
        let w = &self.witnesses;
        let v = &self.verdicts;

        let quad_ok = |q: &Option<[String; 4]>, free: bool, kind| match q {
            None => free,
            Some(q) => {
                !free
                    && q.iter()
                        .map(index)
                        .collect::<Option<Vec<_>>>()
                        .is_some_and(|idx| {
                            NWitness {
                                kind,
                                quad: [idx[0], idx[1], idx[2], idx[3]],
                            }
                            .holds_in(p)
                        })
            }
        };
        use crate::structure::NKind;
        let structure_ok = quad_ok(&w.n, v.n_free, NKind::N)
            && quad_ok(&w.covering_n, v.covering_n_free, NKind::CoveringN)
            && quad_ok(&w.weak_n, v.weak_n_free, NKind::WeakN);

        let chains_ok = match &w.chain_antichain {
            None => v.chain_antichain,
            Some(ca) => {
                !v.chain_antichain
                    && match (mask(&ca.chain), mask(&ca.antichain)) {
                        (Some(c), Some(a)) => {
                            c.is_disjoint(a)
                                && p.maximal_chains().is_ok_and(|cs| cs.contains(&c))
                                && p.maximal_antichains().is_ok_and(|as_| as_.contains(&a))
                        }
                        _ => false,
                    }
            }
        };

        let dacey_ok = match &w.dacey {
            None => v.dacey,
            Some(d) => {
                !v.dacey
                    && match (mask(&d.closed), mask(&d.basis)) {
                        (Some(x), Some(b)) => {
                            o.is_orthoclosed(x)
                                && o.bases(x).contains(&b)
                                && !o.perp(b).is_subset(o.perp(x))
                        }
                        _ => false,
                    }
            }
        };

        let compatible_ok = match &w.compatible {
            None => v.compatible,
            Some((x, y)) => {
                !v.compatible
                    && match (index(x), index(y)) {
                        (Some(x), Some(y)) => o.compatibility_fails_at(x, y),
                        _ => false,
                    }
            }
        };

        let lattice_ok = match (&w.orthomodular, &w.boolean) {
            (None, None) => v.orthomodular && v.boolean,
            _ => Logic::build(&o).is_ok_and(|l| {
                let idx = |s: &[String]| mask(s).and_then(|m| l.index_of(m));
                let om_ok = match &w.orthomodular {
                    None => v.orthomodular,
                    Some(f) => {
                        !v.orthomodular
                            && match (idx(&f.x), idx(&f.y)) {
                                (Some(x), Some(y)) => {
                                    l.leq(x, y) && l.join(x, l.meet(y, l.ocompl(x))) != y
                                }
                                _ => false,
                            }
                    }
                };
                let bool_ok = match &w.boolean {
                    None => v.boolean,
                    Some(f) => {
                        !v.boolean
                            && match (idx(&f.x), idx(&f.y), idx(&f.z)) {
                                (Some(x), Some(y), Some(z)) => {
                                    l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))
                                }
                                _ => false,
                            }
                    }
                };
                om_ok && bool_ok
            }),
        };

        structure_ok && chains_ok && dacey_ok && compatible_ok && lattice_ok
    }
}

/// The logic as a JSON-friendly document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LogicReport {
    pub elements: Vec<Vec<String>>,
    /// Cover pairs of the inclusion order, as element indices.
    pub covers: Vec<(usize, usize)>,
    pub orthocomplement: Vec<usize>,
    pub ortholattice_axioms: bool,
    pub orthomodular: bool,
    pub boolean: bool,
}

impl LogicReport {
    pub fn new(l: &Logic, names: &[String]) -> Result<LogicReport> {
        let set = |s: SubsetMask| s.iter().map(|i| names[i].clone()).collect::<Vec<_>>();
        Ok(LogicReport {
            elements: l.elements().iter().map(|&s| set(s)).collect(),
            covers: l.cover_pairs(),
            orthocomplement: (0..l.len()).map(|i| l.ocompl(i)).collect(),
            ortholattice_axioms: l.verify_ortholattice().passed,
            orthomodular: l.is_orthomodular().orthomodular,
            boolean: l.is_boolean()?.boolean,
        })
    }
}

/// Canonical JSON: object keys sorted, arrays in their stable order,
/// two-space indentation, trailing newline.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    // serde_json's default map is ordered by key
    let value: Value = serde_json::to_value(value).expect("report types serialize");
    let mut out = serde_json::to_string_pretty(&value).expect("values serialize");
    out.push('\n');
    out
}

pub fn emit_json_report(report: &Report) -> String {
    to_canonical_json(report)
}
