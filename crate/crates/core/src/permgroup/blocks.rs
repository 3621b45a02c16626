//! Block systems, primitivity, multiple transitivity and Alt/Sym detection.

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use super::bsgs::PermutationGroup;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockSystem {
    pub degree: usize,
    /// Block id per point of the underlying domain; `None` for points outside it.
    pub block_of: Vec<Option<usize>>,
    pub num_blocks: usize,
    pub block_size: usize,
}

impl BlockSystem {
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_blocks];
        for (x, b) in self.block_of.iter().enumerate() {
            if let Some(b) = b {
                out[*b].push(x);
            }
        }
        out
    }

    pub fn is_trivial(&self) -> bool {
        self.num_blocks == 1 || self.block_size == 1
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> Option<(usize, usize)> {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return None;
        }
        let (keep, drop) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[drop] = keep;
        Some((keep, drop))
    }
}

impl PermutationGroup {
    fn check_transitive_on(&self, domain: &[usize]) -> Result<()> {
        if !self.is_transitive(domain)? {
            return Err(Error::Intransitive);
        }
        Ok(())
    }

    /// Finest block system on the transitive set `domain` in which `a` and `b`
    /// share a block (Atkinson's union-find closure).
    pub fn minimal_block(&self, domain: &[usize], a: usize, b: usize) -> Result<BlockSystem> {
        self.check_transitive_on(domain)?;
        let n = self.degree();
        let mut uf = UnionFind::new(n);
        let mut queue = Vec::new();
        if let Some(pair) = uf.union(a, b) {
            queue.push(pair);
        }
        while let Some((x, y)) = queue.pop() {
            for g in self.generators() {
                if let Some(pair) = uf.union(g.image(x), g.image(y)) {
                    queue.push(pair);
                }
            }
        }
        let mut sorted = domain.to_vec();
        sorted.sort_unstable();
        let mut block_of = vec![None; n];
        let mut root_id = vec![usize::MAX; n];
        let mut sizes: Vec<usize> = Vec::new();
        for &x in &sorted {
            let r = uf.find(x);
            if root_id[r] == usize::MAX {
                root_id[r] = sizes.len();
                sizes.push(0);
            }
            block_of[x] = Some(root_id[r]);
            sizes[root_id[r]] += 1;
        }
        let block_size = sizes[0];
        debug_assert!(sizes.iter().all(|&s| s == block_size));
        Ok(BlockSystem {
            degree: n,
            block_of,
            num_blocks: sizes.len(),
            block_size,
        })
    }

    /// A non-trivial block system on `domain` if one exists.
    pub fn find_block_system(&self, domain: &[usize]) -> Result<Option<BlockSystem>> {
        self.check_transitive_on(domain)?;
        if domain.len() <= 2 {
            return Ok(None);
        }
        let mut sorted = domain.to_vec();
        sorted.sort_unstable();
        let a = sorted[0];
        for &b in &sorted[1..] {
            let sys = self.minimal_block(&sorted, a, b)?;
            if !sys.is_trivial() {
                return Ok(Some(sys));
            }
        }
        Ok(None)
    }

    pub fn is_primitive(&self, domain: &[usize]) -> Result<bool> {
        Ok(self.find_block_system(domain)?.is_none())
    }

    /// Largest `k` with the group `k`-transitive on the invariant set `domain`.
    pub fn transitivity_degree(&self, domain: &[usize]) -> Result<usize> {
        self.orbits(domain)?;
        if domain.is_empty() {
            return Ok(0);
        }
        let mut sorted = domain.to_vec();
        sorted.sort_unstable();
        let chain = self.rebase(&sorted)?;
        let lengths = chain.orbit_lengths();
        let m = sorted.len();
        let mut k = 0;
        while k < m && lengths[k] == m - k {
            k += 1;
        }
        Ok(k)
    }

    /// `true` iff the group acts only on `domain` and has order at least `|domain|!/2`.
    pub fn contains_alternating(&self, domain: &[usize]) -> Result<bool> {
        self.orbits(domain)?;
        if !self.moves_only(domain) {
            return Ok(false);
        }
        let full = factorial(domain.len());
        let order = self.order();
        Ok(order.clone() * 2u32 >= full)
    }

    /// Orbit sizes of the stabilizer of `point` on the transitive set `domain`, ascending.
    pub fn subdegrees(&self, domain: &[usize], point: usize) -> Result<Vec<usize>> {
        self.check_transitive_on(domain)?;
        let stab = self.stabilizer(point)?;
        let mut sizes: Vec<usize> = stab.orbits(domain)?.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        Ok(sizes)
    }

    pub fn contains_symmetric(&self, domain: &[usize]) -> Result<bool> {
        self.orbits(domain)?;
        Ok(self.moves_only(domain) && self.order() == factorial(domain.len()))
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::Permutation;

    fn cyclic4() -> PermutationGroup {
        let c = Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap();
        PermutationGroup::from_generators(4, &[c]).unwrap()
    }

    #[test]
    fn cyclic_four_has_antipodal_blocks() {
        let g = cyclic4();
        let sys = g.minimal_block(&[0, 1, 2, 3], 0, 2).unwrap();
        assert_eq!(sys.blocks(), vec![vec![0, 2], vec![1, 3]]);
        assert!(!g.is_primitive(&[0, 1, 2, 3]).unwrap());
    }

    #[test]
    fn minimal_block_requires_transitivity() {
        let g = PermutationGroup::trivial(3);
        assert!(matches!(
            g.minimal_block(&[0, 1, 2], 0, 1),
            Err(Error::Intransitive)
        ));
    }

    #[test]
    fn symmetric_group_transitivity() {
        let gens: Vec<_> = (0..4).map(|i| Permutation::transposition(5, i, i + 1)).collect();
        let g = PermutationGroup::from_generators(5, &gens).unwrap();
        let all = [0, 1, 2, 3, 4];
        assert_eq!(g.transitivity_degree(&all).unwrap(), 5);
        assert!(g.is_primitive(&all).unwrap());
        assert!(g.contains_symmetric(&all).unwrap());
        assert_eq!(PermutationGroup::trivial(4).transitivity_degree(&[0, 1, 2, 3]).unwrap(), 0);
    }

    #[test]
    fn alternating_detection() {
        let gens: Vec<_> = (0..4)
            .map(|i| Permutation::from_cycles(6, &[&[i, i + 1, i + 2]]).unwrap())
            .collect();
        let g = PermutationGroup::from_generators(6, &gens).unwrap();
        let all = [0, 1, 2, 3, 4, 5];
        assert_eq!(g.order(), BigUint::from(360u32));
        assert!(g.contains_alternating(&all).unwrap());
        assert!(!g.contains_symmetric(&all).unwrap());
        assert!(!cyclic4().contains_alternating(&[0, 1, 2, 3]).unwrap());
    }

    #[test]
    fn factorial_is_exact_for_large_degrees() {
        let f = factorial(70);
        assert_eq!(f.to_string().len(), 101);
    }
}
