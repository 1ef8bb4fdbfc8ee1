//! Maximal clique enumeration over bitset adjacency rows.

use crate::subset::SubsetMask;

/// All maximal cliques of the graph `adj` induced on `within`, sorted by
/// bit-vector value. The empty vertex set has exactly one maximal clique, `∅`.
///
/// `adj[v]` must be irreflexive and symmetric.
pub fn maximal_cliques(adj: &[SubsetMask], within: SubsetMask) -> Vec<SubsetMask> {
    let mut out = Vec::new();
    bron_kerbosch(adj, SubsetMask::EMPTY, within, SubsetMask::EMPTY, &mut out);
    out.sort_unstable();
    out
}

// Tomita-style pivoting: branch only on candidates outside the pivot's
// neighbourhood, with the pivot maximizing |P ∩ N(u)| over P ∪ X.
fn bron_kerbosch(
    adj: &[SubsetMask],
    r: SubsetMask,
    mut p: SubsetMask,
    mut x: SubsetMask,
    out: &mut Vec<SubsetMask>,
) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r);
        }
        return;
    }
    let pivot = p
        .union(x)
        .iter()
        .max_by_key(|&u| (p & adj[u]).len())
        .expect("p is nonempty");
    for v in p.minus(adj[pivot]) {
        bron_kerbosch(adj, r.with(v), p & adj[v], x & adj[v], out);
        p.remove(v);
        x.insert(v);
    }
}
