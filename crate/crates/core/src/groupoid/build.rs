use std::collections::VecDeque;

use crate::designs::Hypergraph;
use crate::error::{Error, Result};
use crate::permgroup::{BigOrder, PermutationGroup, Permutation};

use super::moves::{DesignMoves, MoveSystem};

/// The Conway groupoid `L∞` of a move system, stored as the hole stabilizer
/// `π∞` together with one walk `t_a` from the hole to every position.
///
/// Every walk from the hole to `a` equals `h·t_a` for a unique `h ∈ π∞`.
#[derive(Clone, Debug)]
pub struct Groupoid<M> {
    system: M,
    home: usize,
    /// Breadth-first tree from the hole; `tree_parent[home]` is `None`.
    tree_parent: Vec<Option<usize>>,
    /// `t_a`: walk from the hole to `a` along the tree.
    outward: Vec<Permutation>,
    /// `r_a`: walk from `a` back to the hole.
    inward: Vec<Permutation>,
    hole_stabilizer: PermutationGroup,
}

/// The groupoid of a pliable, connected 4-hypergraph.
pub type ConwayGroupoid = Groupoid<DesignMoves>;

/// Builds `L∞(H)` with hole `home`.
pub fn build_groupoid(h: &Hypergraph, home: usize) -> Result<ConwayGroupoid> {
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    Groupoid::build(DesignMoves::new(h)?, home)
}

fn bfs_tree(n: usize, root: usize, adj: &[Vec<usize>]) -> Vec<Option<usize>> {
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                parent[y] = Some(x);
                queue.push_back(y);
            }
        }
    }
    if seen.iter().any(|&s| !s) {
        return Vec::new();
    }
    parent
}

impl<M: MoveSystem> Groupoid<M> {
    pub fn build(system: M, home: usize) -> Result<Self> {
        Self::build_with_base(system, home, &[])
    }

    /// As [`build`](Self::build), with the hole stabilizer's base starting with `base_prefix`.
    pub fn build_with_base(system: M, home: usize, base_prefix: &[usize]) -> Result<Self> {
        let n = system.positions();
        if home >= n {
            return Err(Error::InvalidArgument(format!(
                "hole {home} out of range for {n} positions"
            )));
        }
        let forward: Vec<Vec<usize>> = (0..n).map(|a| system.targets(a)).collect();
        let tree_parent = bfs_tree(n, home, &forward);
        if tree_parent.is_empty() {
            return Err(Error::Disconnected);
        }
        let step = |a: usize, b: usize| {
            system
                .step(a, b)
                .expect("targets() only lists legal steps")
        };

        let degree = system.degree();
        let mut outward: Vec<Option<Permutation>> = vec![None; n];
        outward[home] = Some(Permutation::identity(degree));
        for a in bfs_order(home, &tree_parent) {
            if let Some(p) = tree_parent[a] {
                let t = outward[p].as_ref().unwrap().then(&step(p, a));
                outward[a] = Some(t);
            }
        }
        let outward: Vec<Permutation> = outward.into_iter().map(Option::unwrap).collect();

        let inward: Vec<Permutation> = if system.is_symmetric() {
            outward.iter().map(Permutation::inverse).collect()
        } else {
            let mut backward = vec![Vec::new(); n];
            for (a, ts) in forward.iter().enumerate() {
                for &b in ts {
                    backward[b].push(a);
                }
            }
            let toward = bfs_tree(n, home, &backward);
            if toward.is_empty() {
                return Err(Error::Disconnected);
            }
            let mut inward: Vec<Option<Permutation>> = vec![None; n];
            inward[home] = Some(Permutation::identity(degree));
            for a in bfs_order(home, &toward) {
                if let Some(next) = toward[a] {
                    let r = step(a, next).then(inward[next].as_ref().unwrap());
                    inward[a] = Some(r);
                }
            }
            inward.into_iter().map(Option::unwrap).collect()
        };

        // Closed walks telescope into t_a·step(a,b)·r_b and t_a·r_a.
        let mut group = PermutationGroup::with_base_prefix(degree, &[], base_prefix)?;
        for a in 0..n {
            if !system.is_symmetric() {
                group.add_generator(&outward[a].then(&inward[a]));
            }
            for &b in &forward[a] {
                if system.is_symmetric() && (b < a || tree_parent[b] == Some(a) || tree_parent[a] == Some(b)) {
                    continue;
                }
                let g = outward[a].then(&step(a, b)).then(&inward[b]);
                group.add_generator(&g);
            }
        }

        Ok(Groupoid {
            system,
            home,
            tree_parent,
            outward,
            inward,
            hole_stabilizer: group,
        })
    }

    pub fn system(&self) -> &M {
        &self.system
    }

    pub fn home(&self) -> usize {
        self.home
    }

    pub fn positions(&self) -> usize {
        self.system.positions()
    }

    pub fn degree(&self) -> usize {
        self.system.degree()
    }

    pub fn hole_stabilizer(&self) -> &PermutationGroup {
        &self.hole_stabilizer
    }

    pub fn tree_parent(&self) -> &[Option<usize>] {
        &self.tree_parent
    }

    /// `t_a`, the tree walk from the hole to `a`.
    pub fn coset_rep(&self, a: usize) -> &Permutation {
        &self.outward[a]
    }

    pub fn coset_reps(&self) -> &[Permutation] {
        &self.outward
    }

    /// `r_a`, a walk from `a` back to the hole.
    pub fn return_walk(&self, a: usize) -> &Permutation {
        &self.inward[a]
    }

    /// Tree path from the hole to `a`, both ends included.
    pub fn tree_path(&self, a: usize) -> Vec<usize> {
        let mut path = vec![a];
        let mut x = a;
        while let Some(p) = self.tree_parent[x] {
            path.push(p);
            x = p;
        }
        path.reverse();
        path
    }

    /// Symbols moved by the hole stabilizer's natural domain.
    pub fn domain(&self) -> Vec<usize> {
        let hole = self.system.hole_symbols(self.home);
        (0..self.degree()).filter(|x| !hole.contains(x)).collect()
    }

    pub fn hole_stabilizer_order(&self) -> BigOrder {
        self.hole_stabilizer.order()
    }

    /// `|L∞| = positions · |π∞|`: the cosets `π∞·t_a` are disjoint and cover `L∞`.
    pub fn size(&self) -> BigOrder {
        self.hole_stabilizer.order() * BigOrder::from(self.positions())
    }

    /// Whether `g` is the permutation of some walk from the hole.
    pub fn contains(&self, g: &Permutation) -> Result<bool> {
        if g.degree() != self.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: g.degree(),
            });
        }
        match self.system.locate(self.home, g) {
            Some(a) => self.hole_stabilizer.contains(&g.then(&self.outward[a].inverse())),
            None => Ok(false),
        }
    }

    /// Whether `L∞` is closed under composition.
    ///
    /// Checks `t_a·t_b ∈ L∞` for all `a, b`, and `t_a·h ∈ L∞` for every strong
    /// generator `h` of `π∞`. Together these give
    /// `(h₁t_a)(h₂t_b) = h₁(t_a h₂)t_b ∈ L∞`.
    pub fn is_group(&self) -> bool {
        let n = self.positions();
        for a in 0..n {
            for b in 0..n {
                let g = self.outward[a].then(&self.outward[b]);
                if !self.contains(&g).unwrap_or(false) {
                    return false;
                }
            }
        }
        let strong = self.hole_stabilizer.strong_generators();
        (0..n).all(|a| {
            strong
                .iter()
                .all(|h| self.contains(&self.outward[a].then(h)).unwrap_or(false))
        })
    }

    /// `L∞` as a permutation group, when it is one; its order is cross-checked
    /// against `positions · |π∞|`.
    pub fn as_group(&self) -> Result<Option<PermutationGroup>> {
        if !self.is_group() {
            return Ok(None);
        }
        let mut gens = self.hole_stabilizer.strong_generators();
        gens.extend(self.outward.iter().cloned());
        let g = PermutationGroup::from_generators(self.degree(), &gens)?;
        if g.order() != self.size() {
            return Err(Error::NotAGroup(format!(
                "closure has order {} but |L∞| = {}",
                g.order(),
                self.size()
            )));
        }
        Ok(Some(g))
    }
}

fn bfs_order(root: usize, parent: &[Option<usize>]) -> Vec<usize> {
    let n = parent.len();
    let mut children = vec![Vec::new(); n];
    for (x, p) in parent.iter().enumerate() {
        if let Some(p) = p {
            children[*p].push(x);
        }
    }
    let mut order = vec![root];
    let mut head = 0;
    while head < order.len() {
        let x = order[head];
        head += 1;
        order.extend(children[x].iter().copied());
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designs::families;

    #[test]
    fn pg23_hole_stabilizer_is_m12_sized() {
        let g = build_groupoid(&families::pg23(), 0).unwrap();
        assert_eq!(g.hole_stabilizer_order(), BigOrder::from(95040u32));
        assert_eq!(g.size(), BigOrder::from(1_235_520u32));
        assert!(g.hole_stabilizer().verify());
        assert!(!g.is_group());
    }

    #[test]
    fn boolean_groupoid_is_the_translation_group() {
        for m in 2..=4 {
            let g = build_groupoid(&families::boolean_system(m).unwrap(), 0).unwrap();
            assert!(g.hole_stabilizer().is_trivial());
            assert_eq!(g.size(), BigOrder::from(1u32 << m));
            assert!(g.is_group());
        }
    }

    #[test]
    fn coset_reps_move_the_hole() {
        let g = build_groupoid(&families::quadratic_system(2, 0).unwrap(), 3).unwrap();
        for a in 0..10 {
            assert_eq!(g.coset_rep(a).image(3), a);
            assert!(g.contains(g.coset_rep(a)).unwrap());
            let path = g.tree_path(a);
            assert_eq!(path[0], 3);
            assert_eq!(*path.last().unwrap(), a);
        }
    }

    #[test]
    fn closed_walks_are_in_the_hole_stabilizer() {
        let h = families::pg23();
        let g = build_groupoid(&h, 0).unwrap();
        let w = g.system().sequence(&[0, 4, 9, 2, 0]).unwrap();
        assert!(g.hole_stabilizer().contains(&w).unwrap());
        let open = g.system().sequence(&[0, 4, 9]).unwrap();
        assert!(g.contains(&open).unwrap());
        assert!(!g.hole_stabilizer().contains(&open).unwrap());
    }

    #[test]
    fn disconnected_input_is_rejected() {
        let h = Hypergraph::new(8, vec![[0, 1, 2, 3], [4, 5, 6, 7]], "x").unwrap();
        assert!(matches!(build_groupoid(&h, 0), Err(Error::Disconnected)));
    }

    #[test]
    fn pairs_group_orders() {
        let g = build_groupoid(&families::pairs_hypergraph(3).unwrap(), 0).unwrap();
        assert_eq!(g.hole_stabilizer_order(), BigOrder::from(8u32));
    }
}
