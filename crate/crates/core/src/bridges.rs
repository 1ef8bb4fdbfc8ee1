//! Orthosets derived from a poset, and the up/down split of the elements
//! lying outside an orthoclosed set and its orthocomplement.

use crate::error::{Error, Result};
use crate::orthoset::Orthoset;
use crate::poset::Poset;
use crate::subset::SubsetMask;

/// `x ⊥ y` iff `x` and `y` are incomparable.
pub fn incomparability_orthoset(p: &Poset) -> Orthoset {
    Orthoset::from_rows_unchecked((0..p.len()).map(|x| p.incomparable_to(x)).collect())
}

/// `x ⊥ y` iff `x < y` or `y < x`.
pub fn strict_comparability_orthoset(p: &Poset) -> Orthoset {
    Orthoset::from_rows_unchecked((0..p.len()).map(|x| p.comparable_to(x)).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UpDown {
    /// Elements outside `X ∪ X^⊥` above some `x ∈ X` and some `y ∈ X^⊥`.
    pub up: SubsetMask,
    /// Elements outside `X ∪ X^⊥` below some `x ∈ X` and some `y ∈ X^⊥`.
    pub down: SubsetMask,
}

/// Splits `P ∖ (X ∪ X^⊥)` for an `X` orthoclosed in the incomparability orthoset.
pub fn ud_decomposition(p: &Poset, x: SubsetMask) -> Result<UpDown> {
    let o = incomparability_orthoset(p);
    if !x.is_subset(p.universe()) || !o.is_orthoclosed(x) {
        return Err(Error::NotOrthoclosed(x.bits()));
    }
    let x_perp = o.perp(x);
    let outside = p.universe().minus(x | x_perp);
    let mut up = SubsetMask::EMPTY;
    let mut down = SubsetMask::EMPTY;
    for z in outside {
        if p.below(z).intersects(x) && p.below(z).intersects(x_perp) {
            up.insert(z);
        }
        if p.above(z).intersects(x) && p.above(z).intersects(x_perp) {
            down.insert(z);
        }
    }
    Ok(UpDown { up, down })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> SubsetMask {
        SubsetMask::from_indices(xs.iter().copied())
    }

    #[test]
    fn n_shape_gives_the_four_path() {
        // a,b,c,d = 0,1,2,3; the path b – a – d – c
        let o = incomparability_orthoset(&Poset::n_shape());
        assert_eq!(o.edges(), vec![(0, 1), (0, 3), (2, 3)]);
        // relabel the path as 1..4 via b→1, a→2, d→3, c→4 and compare to P4
        let relabel = [1, 0, 3, 2];
        let path = Orthoset::path4();
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(path.orthogonal(x, y), o.orthogonal(relabel[x], relabel[y]));
            }
        }
    }

    #[test]
    fn chains_and_antichains() {
        for n in 0..6 {
            assert_eq!(
                incomparability_orthoset(&Poset::chain(n)),
                Orthoset::edgeless(n)
            );
            assert_eq!(
                incomparability_orthoset(&Poset::antichain(n)),
                Orthoset::complete(n)
            );
            assert_eq!(
                strict_comparability_orthoset(&Poset::chain(n)),
                Orthoset::complete(n)
            );
            assert_eq!(
                strict_comparability_orthoset(&Poset::antichain(n)),
                Orthoset::edgeless(n)
            );
        }
    }

    #[test]
    fn the_two_orthosets_are_complementary() {
        for p in [Poset::n_shape(), Poset::diamond22()] {
            assert_eq!(
                strict_comparability_orthoset(&p),
                incomparability_orthoset(&p).complement()
            );
            assert_eq!(
                incomparability_orthoset(&p),
                incomparability_orthoset(&p.dual())
            );
        }
    }

    #[test]
    fn n_shape_split() {
        let p = Poset::n_shape();
        let o = incomparability_orthoset(&p);
        let x = o.double_perp(set(&[2]));
        // c^⊥ = {d}, d^⊥ = {a, c}
        assert_eq!(x, set(&[0, 2]));
        let ud = ud_decomposition(&p, x).unwrap();
        // outside X ∪ X^⊥ = {a,c} ∪ {d} is just b, which lies below c and d
        assert_eq!(ud.up, SubsetMask::EMPTY);
        assert_eq!(ud.down, set(&[1]));
    }

    #[test]
    fn whole_chain_leaves_nothing_outside() {
        let p = Poset::chain(3);
        let ud = ud_decomposition(&p, p.universe()).unwrap();
        assert_eq!(
            ud,
            UpDown {
                up: SubsetMask::EMPTY,
                down: SubsetMask::EMPTY
            }
        );
    }

    #[test]
    fn diamond_split() {
        let p = Poset::diamond22();
        let o = incomparability_orthoset(&p);
        // {a} is closed with {a}^⊥ = {b}; c and d sit above both
        let ud = ud_decomposition(&p, set(&[0])).unwrap();
        assert_eq!(o.perp(set(&[0])), set(&[1]));
        assert_eq!(ud.up, set(&[2, 3]));
        assert_eq!(ud.down, SubsetMask::EMPTY);
    }

    #[test]
    fn rejects_non_closed_input() {
        let p = Poset::diamond22();
        assert_eq!(
            ud_decomposition(&p, set(&[0, 1])),
            Err(Error::NotOrthoclosed(0b11))
        );
        assert!(ud_decomposition(&p, set(&[7])).is_err());
    }
}
