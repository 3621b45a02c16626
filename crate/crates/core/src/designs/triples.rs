use serde::Serialize;

use super::hypergraph::Hypergraph;
use crate::error::{Error, Result};

/// A set of 3-subsets of `{0, …, n-1}`, with `mu` the common pair multiplicity
/// when the set is a 2-design.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TripleSystem {
    n: usize,
    triples: Vec<[u32; 3]>,
    mu: Option<usize>,
    #[serde(skip)]
    member: Vec<bool>,
}

impl TripleSystem {
    fn build(n: usize, mut triples: Vec<[u32; 3]>) -> Result<Self> {
        for t in triples.iter_mut() {
            t.sort_unstable();
            if t.iter().any(|&x| x as usize >= n) || t[0] == t[1] || t[1] == t[2] {
                return Err(Error::InvalidDesign(format!("bad triple {t:?}")));
            }
        }
        triples.sort_unstable();
        triples.dedup();
        let mut member = vec![false; n * n * n];
        for t in &triples {
            let (a, b, c) = (t[0] as usize, t[1] as usize, t[2] as usize);
            for (x, y, z) in [(a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
                member[(x * n + y) * n + z] = true;
            }
        }
        let mut sys = TripleSystem {
            n,
            triples,
            mu: None,
            member,
        };
        sys.mu = sys.pair_multiplicity();
        Ok(sys)
    }

    /// A 2-(n,3,μ) design; fails unless every pair lies in the same number of triples.
    pub fn new(n: usize, triples: Vec<[u32; 3]>) -> Result<Self> {
        let sys = Self::build(n, triples)?;
        if sys.mu.is_none() {
            return Err(Error::InvalidDesign(
                "triples do not cover every pair equally often".into(),
            ));
        }
        Ok(sys)
    }

    /// Triples of collinear points; requires a supersimple design, giving μ = 2λ.
    pub fn collinear_triples(h: &Hypergraph) -> Result<Self> {
        let profile_lambda = h.lambda();
        if !(h.is_simple() && h.is_pliable() && profile_lambda.is_some_and(|l| l > 0)) {
            return Err(Error::NotSupersimple(h.label().to_string()));
        }
        Self::new(h.n(), Self::triples_of(h))
    }

    pub(crate) fn collinear_triples_unchecked(h: &Hypergraph) -> Self {
        Self::build(h.n(), Self::triples_of(h)).expect("blocks are validated")
    }

    fn triples_of(h: &Hypergraph) -> Vec<[u32; 3]> {
        let mut out = Vec::with_capacity(h.blocks().len() * 4);
        for b in h.blocks() {
            for skip in 0..4 {
                let mut t = [0u32; 3];
                let mut k = 0;
                for (i, &x) in b.iter().enumerate() {
                    if i != skip {
                        t[k] = x;
                        k += 1;
                    }
                }
                out.push(t);
            }
        }
        out
    }

    fn pair_multiplicity(&self) -> Option<usize> {
        if self.n < 2 {
            return None;
        }
        let mut counts = vec![0usize; self.n * self.n];
        for t in &self.triples {
            let (a, b, c) = (t[0] as usize, t[1] as usize, t[2] as usize);
            counts[a * self.n + b] += 1;
            counts[a * self.n + c] += 1;
            counts[b * self.n + c] += 1;
        }
        let mu = counts[1];
        for x in 0..self.n {
            for y in x + 1..self.n {
                if counts[x * self.n + y] != mu {
                    return None;
                }
            }
        }
        Some(mu)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn triples(&self) -> &[[u32; 3]] {
        &self.triples
    }

    pub fn mu(&self) -> Option<usize> {
        self.mu
    }

    #[inline]
    pub fn contains(&self, a: usize, b: usize, c: usize) -> bool {
        self.member[(a * self.n + b) * self.n + c]
    }

    /// Points `c` with `{a, b, c}` a triple.
    pub fn third_points(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.n).filter(|&c| self.contains(a, b, c)).collect()
    }

    /// A 2-design in which every 4-subset contains 0, 2 or 4 triples.
    pub fn is_regular_two_graph(&self) -> bool {
        if self.mu.is_none() {
            return false;
        }
        let n = self.n;
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    let abc = self.contains(a, b, c) as u8;
                    for d in c + 1..n {
                        let count = abc
                            + self.contains(a, b, d) as u8
                            + self.contains(a, c, d) as u8
                            + self.contains(b, c, d) as u8;
                        if count % 2 == 1 {
                            return false;
                        }
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
    fn pg23_collinear_triples() {
        let t = TripleSystem::collinear_triples(&families::pg23()).unwrap();
        assert_eq!(t.mu(), Some(2));
        assert_eq!(t.triples().len(), 13 * 4);
    }

    #[test]
    fn boolean2_collinear_triples() {
        let t = TripleSystem::collinear_triples(&families::boolean_system(2).unwrap()).unwrap();
        assert_eq!(t.triples().len(), 4);
        assert_eq!(t.mu(), Some(2));
    }

    #[test]
    fn quadratic_2_0_mu() {
        let h = families::quadratic_system(2, 0).unwrap();
        let t = TripleSystem::collinear_triples(&h).unwrap();
        assert_eq!(t.mu(), Some(4));
    }

    #[test]
    fn non_supersimple_input_is_rejected() {
        let h = families::pairs_hypergraph(3).unwrap();
        assert!(TripleSystem::collinear_triples(&h).is_err());
    }

    #[test]
    fn unbalanced_triples_rejected() {
        assert!(TripleSystem::new(4, vec![[0, 1, 2]]).is_err());
        let all = TripleSystem::new(4, vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]).unwrap();
        assert_eq!(all.mu(), Some(2));
        assert!(all.is_regular_two_graph());
    }
}
