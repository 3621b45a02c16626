//! Deterministic Schreier–Sims.
//!
//! The base is extended with the smallest point moved by a new strong
//! generator, so the chain depends only on the order of the input generators
//! and on an optional base prefix.

use num_bigint::BigUint;
use num_traits::One;
use rand::Rng;

use super::perm::Permutation;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
struct Level {
    base_point: usize,
    /// Generators of the stabilizer of all earlier base points.
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    /// `transversal[β] = (u, u⁻¹)` with `base_point^u = β`.
    transversal: Vec<Option<(Permutation, Permutation)>>,
}

impl Level {
    fn new(degree: usize, base_point: usize) -> Self {
        let mut level = Level {
            base_point,
            gens: Vec::new(),
            orbit: Vec::new(),
            transversal: vec![None; degree],
        };
        level.rebuild_orbit(degree);
        level
    }

    fn rebuild_orbit(&mut self, degree: usize) {
        for t in self.transversal.iter_mut() {
            *t = None;
        }
        let id = Permutation::identity(degree);
        self.transversal[self.base_point] = Some((id.clone(), id));
        self.orbit.clear();
        self.orbit.push(self.base_point);
        let mut head = 0;
        while head < self.orbit.len() {
            let beta = self.orbit[head];
            head += 1;
            for s in &self.gens {
                let gamma = s.image(beta);
                if self.transversal[gamma].is_none() {
                    let u = self.transversal[beta].as_ref().unwrap().0.then(s);
                    let inv = u.inverse();
                    self.transversal[gamma] = Some((u, inv));
                    self.orbit.push(gamma);
                }
            }
        }
    }
}

/// A permutation group stored as a base and strong generating set.
#[derive(Clone, Debug)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    levels: Vec<Level>,
}

impl PermutationGroup {
    pub fn trivial(degree: usize) -> Self {
        PermutationGroup {
            degree,
            generators: Vec::new(),
            levels: Vec::new(),
        }
    }

    /// Builds a verified stabilizer chain for the group generated by `generators`.
    pub fn from_generators(degree: usize, generators: &[Permutation]) -> Result<Self> {
        Self::with_base_prefix(degree, generators, &[])
    }

    /// As [`from_generators`](Self::from_generators), with the base starting
    /// with `prefix` (points may be redundant).
    pub fn with_base_prefix(
        degree: usize,
        generators: &[Permutation],
        prefix: &[usize],
    ) -> Result<Self> {
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        if let Some(&p) = prefix.iter().find(|&&p| p >= degree) {
            return Err(Error::InvalidArgument(format!(
                "base point {p} out of range for degree {degree}"
            )));
        }
        let mut group = PermutationGroup {
            degree,
            generators: Vec::new(),
            levels: prefix.iter().map(|&b| Level::new(degree, b)).collect(),
        };
        for g in generators {
            group.add_generator(g);
        }
        Ok(group)
    }

    /// Adds `g` to the generating set unless it is already a member, extending
    /// the chain as needed. Returns whether the group grew.
    pub fn add_generator(&mut self, g: &Permutation) -> bool {
        if g.is_identity() {
            return false;
        }
        let (residue, level) = self.sift_from(g.clone(), 0);
        if level == self.levels.len() && residue.is_identity() {
            return false;
        }
        self.generators.push(g.clone());
        let top = self.insert_strong_generator(residue, 0, level);
        self.complete_from(top);
        true
    }

    /// Adds `h` to levels `from..=to`, appending a base point when `to` is past the end.
    /// Returns the deepest level touched.
    fn insert_strong_generator(&mut self, h: Permutation, from: usize, to: usize) -> usize {
        let mut to = to;
        if to == self.levels.len() {
            let b = h.first_moved_point().expect("non-identity residue");
            self.levels.push(Level::new(self.degree, b));
            to = self.levels.len() - 1;
        }
        for l in from..=to {
            self.levels[l].gens.push(h.clone());
            self.levels[l].rebuild_orbit(self.degree);
        }
        to
    }

    /// Holt's Schreier–Sims loop; levels deeper than `start` must already be complete.
    fn complete_from(&mut self, start: usize) {
        let mut i = start as isize;
        'outer: while i >= 0 {
            let li = i as usize;
            let orbit = self.levels[li].orbit.clone();
            let gens = self.levels[li].gens.clone();
            for &beta in &orbit {
                for s in &gens {
                    let gamma = s.image(beta);
                    let (u_beta, _) = self.levels[li].transversal[beta].as_ref().unwrap();
                    let (_, u_gamma_inv) = self.levels[li].transversal[gamma].as_ref().unwrap();
                    let schreier = u_beta.then(s).then(u_gamma_inv);
                    if schreier.is_identity() {
                        continue;
                    }
                    let (residue, level) = self.sift_from(schreier, li + 1);
                    if level < self.levels.len() || !residue.is_identity() {
                        let top = self.insert_strong_generator(residue, li + 1, level);
                        i = top as isize;
                        continue 'outer;
                    }
                }
            }
            i -= 1;
        }
    }

    fn sift_from(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(start) {
            let beta = g.image(level.base_point);
            match &level.transversal[beta] {
                Some((_, inv)) => g = g.then(inv),
                None => return (g, l),
            }
        }
        (g, self.levels.len())
    }

    /// Sifts `g` through the chain; returns the residue and the level it stopped at.
    pub fn sift(&self, g: &Permutation) -> (Permutation, usize) {
        self.sift_from(g.clone(), 0)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    /// Fundamental orbit lengths along the chain.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Deduplicated union of the strong generators at every level.
    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut seen = std::collections::HashSet::new();
        let mut out: Vec<Permutation> = Vec::new();
        for level in &self.levels {
            for g in &level.gens {
                if seen.insert(g.clone()) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    /// Generators of the stabilizer of the first `k` base points.
    pub fn level_generators(&self, k: usize) -> &[Permutation] {
        self.levels.get(k).map(|l| l.gens.as_slice()).unwrap_or(&[])
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// Order as `u128`; orders of interest here are far below that bound.
    pub fn order_u128(&self) -> Option<u128> {
        self.levels
            .iter()
            .try_fold(1u128, |acc, l| acc.checked_mul(l.orbit.len() as u128))
    }

    pub fn is_trivial(&self) -> bool {
        self.levels.iter().all(|l| l.orbit.len() == 1)
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: p.degree(),
            });
        }
        let (residue, level) = self.sift(p);
        Ok(level == self.levels.len() && residue.is_identity())
    }

    /// Re-checks the chain: strong generators fix earlier base points,
    /// transversals map the base point correctly, and every input generator
    /// sifts to the identity.
    pub fn verify(&self) -> bool {
        for (l, level) in self.levels.iter().enumerate() {
            for g in &level.gens {
                if self.levels[..l].iter().any(|e| !g.fixes(e.base_point)) {
                    return false;
                }
            }
            for &beta in &level.orbit {
                let (u, inv) = level.transversal[beta].as_ref().unwrap();
                if u.image(level.base_point) != beta || !u.then(inv).is_identity() {
                    return false;
                }
            }
        }
        self.generators
            .iter()
            .all(|g| self.contains(g).unwrap_or(false))
    }

    /// Uniformly random element: a product of random transversal elements.
    pub fn random_element<R: Rng>(&self, rng: &mut R) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        for level in self.levels.iter().rev() {
            let beta = level.orbit[rng.gen_range(0..level.orbit.len())];
            g = g.then(&level.transversal[beta].as_ref().unwrap().0);
        }
        g
    }

    /// Every element of the group. Intended for small groups only.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for h in &out {
                for &beta in &level.orbit {
                    next.push(h.then(&level.transversal[beta].as_ref().unwrap().0));
                }
            }
            out = next;
        }
        out
    }

    /// Rebuilds the chain so that the base starts with `prefix`.
    pub fn rebase(&self, prefix: &[usize]) -> Result<PermutationGroup> {
        let gens = self.strong_generators();
        let mut g = PermutationGroup::with_base_prefix(self.degree, &gens, prefix)?;
        g.generators = self.generators.clone();
        Ok(g)
    }

    /// Stabilizer of `point`.
    pub fn stabilizer(&self, point: usize) -> Result<PermutationGroup> {
        let chain = self.rebase(&[point])?;
        let gens = chain.level_generators(1).to_vec();
        PermutationGroup::from_generators(self.degree, &gens)
    }

    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut orbit = vec![point];
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            head += 1;
            for g in &self.generators {
                let y = g.image(x);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
        }
        orbit.sort_unstable();
        orbit
    }

    /// Orbit partition of an invariant set `domain`; each orbit sorted, orbits
    /// ordered by smallest element.
    pub fn orbits(&self, domain: &[usize]) -> Result<Vec<Vec<usize>>> {
        let mut inside = vec![false; self.degree];
        for &x in domain {
            if x >= self.degree {
                return Err(Error::InvalidArgument(format!("point {x} out of range")));
            }
            inside[x] = true;
        }
        for g in &self.generators {
            if domain.iter().any(|&x| !inside[g.image(x)]) {
                return Err(Error::NonInvariant);
            }
        }
        let mut sorted = domain.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut done = vec![false; self.degree];
        let mut out = Vec::new();
        for x in sorted {
            if done[x] {
                continue;
            }
            let orbit = self.orbit(x);
            for &y in &orbit {
                done[y] = true;
            }
            out.push(orbit);
        }
        Ok(out)
    }

    pub fn is_transitive(&self, domain: &[usize]) -> Result<bool> {
        Ok(self.orbits(domain)?.len() <= 1)
    }

    pub fn moves_only(&self, domain: &[usize]) -> bool {
        let mut inside = vec![false; self.degree];
        for &x in domain {
            inside[x] = true;
        }
        self.generators
            .iter()
            .all(|g| g.support().into_iter().all(|x| inside[x]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_elements_are_members_and_reproducible() {
        let g = PermutationGroup::from_generators(7, &sym(7)[..3]).unwrap();
        let draw = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..20).map(|_| g.random_element(&mut rng)).collect::<Vec<_>>()
        };
        let a = draw(7);
        assert_eq!(a, draw(7));
        assert!(a.iter().all(|x| g.contains(x).unwrap() && x.fixes(4) && x.fixes(5)));
    }

    fn sym(n: usize) -> Vec<Permutation> {
        (0..n - 1)
            .map(|i| Permutation::transposition(n, i, i + 1))
            .collect()
    }

    #[test]
    fn empty_generators_give_trivial_group() {
        let g = PermutationGroup::from_generators(4, &[]).unwrap();
        assert_eq!(g.order(), BigUint::one());
        assert!(g.contains(&Permutation::identity(4)).unwrap());
    }

    #[test]
    fn symmetric_group_order() {
        let g = PermutationGroup::from_generators(5, &sym(5)).unwrap();
        assert_eq!(g.order(), BigUint::from(120u32));
        assert!(g.verify());
        let s4 = PermutationGroup::from_generators(4, &sym(4)).unwrap();
        assert_eq!(s4.order(), BigUint::from(24u32));
    }

    #[test]
    fn membership_detects_outsiders() {
        // Alt(4) does not contain a transposition.
        let a = Permutation::from_cycles(4, &[&[0, 1, 2]]).unwrap();
        let b = Permutation::from_cycles(4, &[&[1, 2, 3]]).unwrap();
        let g = PermutationGroup::from_generators(4, &[a, b]).unwrap();
        assert_eq!(g.order(), BigUint::from(12u32));
        assert!(!g.contains(&Permutation::transposition(4, 0, 1)).unwrap());
        assert!(g
            .contains(&Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap())
            .unwrap());
        assert!(g.contains(&Permutation::identity(5)).is_err());
    }

    #[test]
    fn base_prefix_is_respected() {
        let g = PermutationGroup::with_base_prefix(5, &sym(5), &[4, 3]).unwrap();
        assert_eq!(&g.base()[..2], &[4, 3]);
        assert_eq!(g.orbit_lengths(), vec![5, 4, 3, 2]);
        let s = g.stabilizer(0).unwrap();
        assert_eq!(s.order(), BigUint::from(24u32));
    }

    #[test]
    fn elements_enumerates_the_group() {
        let g = PermutationGroup::from_generators(4, &sym(4)).unwrap();
        let mut els = g.elements();
        els.sort();
        els.dedup();
        assert_eq!(els.len(), 24);
    }

    #[test]
    fn trivial_group_orbits_are_singletons() {
        let g = PermutationGroup::trivial(4);
        assert_eq!(
            g.orbits(&[0, 1, 2, 3]).unwrap(),
            vec![vec![0], vec![1], vec![2], vec![3]]
        );
    }

    #[test]
    fn orbits_reject_non_invariant_sets() {
        let g = PermutationGroup::from_generators(4, &sym(4)).unwrap();
        assert!(matches!(g.orbits(&[0, 1]), Err(Error::NonInvariant)));
    }
}
