use std::collections::HashSet;

use serde::Serialize;

use super::hypergraph::Hypergraph;
use super::triples::TripleSystem;

/// Structural predicates of a 4-hypergraph, all computed exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DesignProfile {
    pub n: usize,
    pub num_blocks: usize,
    pub is_pliable: bool,
    pub is_connected: bool,
    /// Present iff every pair of points lies on exactly `lambda` blocks.
    pub lambda: Option<usize>,
    pub is_supersimple: bool,
    pub is_regular_two_graph: bool,
    pub has_triangle_property: bool,
}

impl Hypergraph {
    pub fn profile(&self) -> DesignProfile {
        let is_pliable = self.is_pliable();
        let lambda = self.lambda();
        let is_supersimple = lambda.is_some_and(|l| l > 0) && is_pliable && self.is_simple();
        let triples = TripleSystem::collinear_triples_unchecked(self);
        DesignProfile {
            n: self.n(),
            num_blocks: self.blocks().len(),
            is_pliable,
            is_connected: self.is_connected(),
            lambda,
            is_supersimple,
            is_regular_two_graph: triples.is_regular_two_graph(),
            has_triangle_property: self.has_triangle_property(),
        }
    }

    /// Common pair multiplicity, if the hypergraph is a 2-design.
    pub fn lambda(&self) -> Option<usize> {
        let n = self.n();
        if n < 2 {
            return None;
        }
        let counts = self.pair_counts();
        let l = counts[0][1];
        for (x, row) in counts.iter().enumerate() {
            for &c in &row[x + 1..] {
                if c != l {
                    return None;
                }
            }
        }
        Some(l)
    }

    /// Whether any two blocks meeting in exactly two points have their
    /// symmetric difference as a block.
    pub fn has_triangle_property(&self) -> bool {
        let masks: HashSet<u128> = self.blocks().iter().map(Hypergraph::block_mask).collect();
        for lines in self.lines_through_pairs().values() {
            for (i, b1) in lines.iter().enumerate() {
                let m1 = Hypergraph::block_mask(b1);
                for b2 in &lines[i + 1..] {
                    let m2 = Hypergraph::block_mask(b2);
                    if (m1 & m2).count_ones() == 2 && !masks.contains(&(m1 ^ m2)) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designs::families;

    #[test]
    fn pg23_profile() {
        let p = families::pg23().profile();
        assert!(p.is_pliable && p.is_connected && p.is_supersimple);
        assert_eq!(p.lambda, Some(1));
        assert!(!p.is_regular_two_graph);
        // Two lines of a projective plane never share exactly two points.
        assert!(p.has_triangle_property);
    }

    #[test]
    fn boolean3_profile() {
        let p = families::boolean_system(3).unwrap().profile();
        assert_eq!(p.lambda, Some(3));
        assert!(p.is_supersimple && p.is_regular_two_graph && p.has_triangle_property);
    }

    #[test]
    fn three_shared_points_profile() {
        let h = Hypergraph::new(5, vec![[0, 1, 2, 3], [0, 1, 2, 4]], "x").unwrap();
        let p = h.profile();
        assert!(!p.is_pliable);
        assert!(!p.is_supersimple);
    }

    #[test]
    fn pairs_is_not_a_design() {
        let p = families::pairs_hypergraph(4).unwrap().profile();
        assert_eq!(p.lambda, None);
        assert!(p.is_pliable && p.is_connected && !p.is_supersimple);
    }
}
