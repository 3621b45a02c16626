use rayon::prelude::*;
use serde::Serialize;

use super::field::{Field, Word};
use super::linear::LinearCode;
use crate::budget;
use crate::error::Result;

/// Coset leader weights for every syndrome, from a breadth-first sweep of the
/// syndrome space by single-coordinate changes.
#[derive(Clone, Debug)]
pub struct CosetTable {
    field: Field,
    n: usize,
    r: usize,
    /// `steps[i·(q−1) + j]` = syndrome of `c·e_i` for the `j`-th unit `c`.
    steps: Vec<Word>,
    leader_weight: Vec<u8>,
    covering_radius: usize,
    pow3: Vec<u64>,
}

/// One coset, identified by its syndrome, with a minimum-weight member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CosetWitness {
    pub syndrome: String,
    pub leader: String,
    pub distance: usize,
    /// Neighbours of any coset member, counted by distance class.
    pub profile: Vec<u32>,
}

/// Two cosets at the same distance whose neighbour counts disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularityWitness {
    pub distance: usize,
    pub first: CosetWitness,
    pub second: CosetWitness,
}

#[derive(Clone, Debug, Serialize)]
pub struct Regularity {
    pub completely_regular: bool,
    /// The common neighbour profile of each distance class, when it is constant.
    pub class_profiles: Vec<Option<Vec<u32>>>,
    pub witness: Option<RegularityWitness>,
}

impl CosetTable {
    pub fn new(code: &LinearCode) -> Result<Self> {
        let field = code.field();
        let q = field.q();
        let (n, r) = (code.length(), code.redundancy());
        let size = budget::power(q, r);
        budget::check("syndromes", size, budget::syndrome_budget())?;
        let size = size as usize;

        let mut steps = Vec::with_capacity(n * (q as usize - 1));
        for i in 0..n {
            let mut e = Word::ZERO;
            e.set(i, 1);
            let s = code.syndrome(&e);
            for &c in field.units() {
                steps.push(s.scale(c, field));
            }
        }
        let pow3 = (0..64).map(|i| 3u64.saturating_pow(i)).collect();
        let mut table = CosetTable {
            field,
            n,
            r,
            steps,
            leader_weight: vec![u8::MAX; size],
            covering_radius: 0,
            pow3,
        };
        table.sweep();
        Ok(table)
    }

    fn sweep(&mut self) {
        self.leader_weight[0] = 0;
        let mut frontier = vec![Word::ZERO];
        let mut d = 0u8;
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for s in &frontier {
                for step in &self.steps {
                    let t = s.add(*step, self.field);
                    let idx = self.index(&t);
                    if self.leader_weight[idx] == u8::MAX {
                        self.leader_weight[idx] = d + 1;
                        next.push(t);
                    }
                }
            }
            if !next.is_empty() {
                d += 1;
            }
            frontier = next;
        }
        self.covering_radius = d as usize;
    }

    #[inline]
    fn index(&self, s: &Word) -> usize {
        match self.field {
            Field::F2 => s.p as usize,
            Field::F3 => {
                let mut idx = 0u64;
                let mut bits = s.support_mask();
                while bits != 0 {
                    let i = bits.trailing_zeros() as usize;
                    idx += self.pow3[i] * s.get(i) as u64;
                    bits &= bits - 1;
                }
                idx as usize
            }
        }
    }

    fn word(&self, mut idx: usize) -> Word {
        let q = self.field.q() as usize;
        let mut w = Word::ZERO;
        for i in 0..self.r {
            w.set(i, (idx % q) as u8);
            idx /= q;
        }
        w
    }

    pub fn syndromes(&self) -> usize {
        self.leader_weight.len()
    }

    pub fn covering_radius(&self) -> usize {
        self.covering_radius
    }

    /// Distance to the code of any vector with syndrome `s`.
    pub fn leader_weight(&self, s: &Word) -> usize {
        self.leader_weight[self.index(s)] as usize
    }

    /// Number of cosets at each distance `0..=ρ`.
    pub fn class_sizes(&self) -> Vec<u64> {
        let mut sizes = vec![0u64; self.covering_radius + 1];
        for &w in &self.leader_weight {
            sizes[w as usize] += 1;
        }
        sizes
    }

    /// Neighbours of a coset member, counted by distance class.
    pub fn profile(&self, s: &Word) -> Vec<u32> {
        let mut counts = vec![0u32; self.covering_radius + 1];
        for step in &self.steps {
            counts[self.leader_weight(&s.add(*step, self.field))] += 1;
        }
        counts
    }

    /// A minimum-weight vector with syndrome `s`, found by walking down the sweep.
    pub fn leader(&self, s: &Word) -> Word {
        let units = self.field.units().len();
        let mut s = *s;
        let mut leader = Word::ZERO;
        while !s.is_zero() {
            let d = self.leader_weight(&s);
            let (k, t) = self
                .steps
                .iter()
                .enumerate()
                .map(|(k, step)| (k, s.sub(*step, self.field)))
                .find(|(_, t)| self.leader_weight(t) + 1 == d)
                .expect("every non-zero syndrome has a parent in the sweep");
            let (i, c) = (k / units, self.field.units()[k % units]);
            leader.set(i, self.field.add(leader.get(i), c));
            s = t;
        }
        leader
    }

    fn witness(&self, idx: usize) -> CosetWitness {
        let s = self.word(idx);
        CosetWitness {
            syndrome: s.to_string(self.r),
            leader: self.leader(&s).to_string(self.n),
            distance: self.leader_weight[idx] as usize,
            profile: self.profile(&s),
        }
    }

    /// Whether the distance partition is equitable, with a witness when it is not.
    pub fn regularity(&self) -> Regularity {
        let rho = self.covering_radius;
        let mut first: Vec<Option<usize>> = vec![None; rho + 1];
        for (idx, &w) in self.leader_weight.iter().enumerate() {
            first[w as usize].get_or_insert(idx);
        }
        let reference: Vec<Vec<u32>> = first
            .iter()
            .map(|i| self.profile(&self.word(i.expect("every distance up to ρ occurs"))))
            .collect();
        let len = self.leader_weight.len();
        let consistent = (0..len)
            .into_par_iter()
            .fold(
                || vec![true; rho + 1],
                |mut acc, idx| {
                    let d = self.leader_weight[idx] as usize;
                    if acc[d] && self.profile(&self.word(idx)) != reference[d] {
                        acc[d] = false;
                    }
                    acc
                },
            )
            .reduce(
                || vec![true; rho + 1],
                |a, b| a.iter().zip(b).map(|(x, y)| *x && y).collect(),
            );
        let witness = consistent.iter().position(|ok| !ok).map(|d| {
            let idx = (0..len)
                .into_par_iter()
                .find_first(|&idx| {
                    self.leader_weight[idx] as usize == d
                        && self.profile(&self.word(idx)) != reference[d]
                })
                .expect("an inconsistent class has a differing coset");
            RegularityWitness {
                distance: d,
                first: self.witness(first[d].unwrap()),
                second: self.witness(idx),
            }
        });
        let class_profiles = reference
            .into_iter()
            .zip(&consistent)
            .map(|(p, &ok)| ok.then_some(p))
            .collect();
        Regularity {
            completely_regular: witness.is_none(),
            class_profiles,
            witness,
        }
    }
}
