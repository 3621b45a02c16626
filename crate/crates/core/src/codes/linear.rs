use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::field::{Field, Word, MAX_LENGTH};
use crate::budget;
use crate::designs::Hypergraph;
use crate::error::{Error, Result};

/// A linear code over GF(2) or GF(3), kept in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    field: Field,
    n: usize,
    generator: Vec<Word>,
    pivots: Vec<usize>,
    parity_check: Vec<Word>,
}

/// Weight distribution of a code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightProfile {
    /// Weight → number of codewords of that weight, including weight 0.
    pub counts: BTreeMap<usize, u64>,
    /// Number of distinct non-zero weights.
    pub degree: usize,
    pub min_distance: Option<usize>,
}

impl WeightProfile {
    fn from_counts(counts: Vec<u64>) -> Self {
        let counts: BTreeMap<usize, u64> = counts
            .into_iter()
            .enumerate()
            .filter(|(_, c)| *c > 0)
            .collect();
        let nonzero: Vec<usize> = counts.keys().copied().filter(|&w| w > 0).collect();
        WeightProfile {
            degree: nonzero.len(),
            min_distance: nonzero.first().copied(),
            counts,
        }
    }

    pub fn total(&self) -> u128 {
        self.counts.values().map(|&c| c as u128).sum()
    }

    pub fn count(&self, w: usize) -> u64 {
        self.counts.get(&w).copied().unwrap_or(0)
    }

    pub fn nonzero_weights(&self) -> Vec<usize> {
        self.counts.keys().copied().filter(|&w| w > 0).collect()
    }
}

impl LinearCode {
    /// The row span of `rows`, each of length `n`.
    pub fn from_rows(field: Field, n: usize, rows: &[Vec<u8>]) -> Result<Self> {
        if n > MAX_LENGTH {
            return Err(Error::InvalidArgument(format!(
                "code length {n} exceeds {MAX_LENGTH}"
            )));
        }
        if let Some(r) = rows.iter().find(|r| r.len() != n || r.iter().any(|&x| x >= field.q())) {
            return Err(Error::InvalidArgument(format!("bad row {r:?} for length {n}")));
        }
        let words: Vec<Word> = rows.iter().map(|r| Word::from_entries(r)).collect();
        Ok(Self::from_words(field, n, words))
    }

    pub fn from_words(field: Field, n: usize, mut rows: Vec<Word>) -> Self {
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..n {
            let Some(i) = (rank..rows.len()).find(|&i| rows[i].get(col) != 0) else {
                continue;
            };
            rows.swap(rank, i);
            let lead = rows[rank].get(col);
            rows[rank] = rows[rank].scale(field.inv(lead), field);
            for j in 0..rows.len() {
                let c = rows[j].get(col);
                if j != rank && c != 0 {
                    rows[j] = rows[j].sub(rows[rank].scale(c, field), field);
                }
            }
            pivots.push(col);
            rank += 1;
        }
        rows.truncate(rank);

        let mut parity_check = Vec::with_capacity(n - rank);
        for free in (0..n).filter(|c| !pivots.contains(c)) {
            let mut h = Word::ZERO;
            h.set(free, 1);
            for (i, &p) in pivots.iter().enumerate() {
                h.set(p, field.neg(rows[i].get(free)));
            }
            parity_check.push(h);
        }
        LinearCode {
            field,
            n,
            generator: rows,
            pivots,
            parity_check,
        }
    }

    /// Row span of the block-by-point incidence matrix.
    pub fn from_design(h: &Hypergraph, field: Field) -> Result<Self> {
        let rows: Vec<Vec<u8>> = h.incidence_matrix();
        Self::from_rows(field, h.n(), &rows)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.generator.len()
    }

    pub fn redundancy(&self) -> usize {
        self.n - self.dimension()
    }

    pub fn generator(&self) -> &[Word] {
        &self.generator
    }

    pub fn parity_check(&self) -> &[Word] {
        &self.parity_check
    }

    pub fn generator_matrix(&self) -> Vec<Vec<u8>> {
        self.generator.iter().map(|w| w.entries(self.n)).collect()
    }

    pub fn parity_check_matrix(&self) -> Vec<Vec<u8>> {
        self.parity_check.iter().map(|w| w.entries(self.n)).collect()
    }

    pub fn dual(&self) -> LinearCode {
        LinearCode::from_words(self.field, self.n, self.parity_check.clone())
    }

    /// `Hxᵀ`, packed with entry `j` for parity row `j`.
    pub fn syndrome(&self, x: &Word) -> Word {
        let mut s = Word::ZERO;
        for (j, h) in self.parity_check.iter().enumerate() {
            s.set(j, h.dot(x, self.field));
        }
        s
    }

    pub fn contains(&self, x: &Word) -> bool {
        self.syndrome(x).is_zero()
    }

    /// Number of codewords, `q^k`.
    pub fn size(&self) -> u128 {
        budget::power(self.field.q(), self.dimension())
    }

    /// Folds `f` over every codeword in parallel, within the codeword budget.
    pub fn fold_codewords<T, I, F, M>(&self, init: I, f: F, merge: M) -> Result<T>
    where
        T: Send,
        I: Fn() -> T + Sync + Send,
        F: Fn(&mut T, Word) + Sync + Send,
        M: Fn(T, T) -> T + Sync + Send,
    {
        budget::check("codewords", self.size(), budget::codeword_budget())?;
        let field = self.field;
        let q = field.q() as usize;
        let k = self.dimension();
        let split = k.min(6);
        let (head, tail) = self.generator.split_at(split);
        let tasks = q.pow(split as u32);
        let result = (0..tasks)
            .into_par_iter()
            .fold(&init, |mut acc, t| {
                let mut base = Word::ZERO;
                let mut rest = t;
                for row in head {
                    base = base.add(row.scale((rest % q) as u8, field), field);
                    rest /= q;
                }
                // Odometer over the tail: bumping a digit adds its row once,
                // and a wrap-around adds it once more to return to zero.
                let mut digits = vec![0u8; tail.len()];
                let mut w = base;
                loop {
                    f(&mut acc, w);
                    let mut i = 0;
                    loop {
                        if i == tail.len() {
                            return acc;
                        }
                        w = w.add(tail[i], field);
                        digits[i] += 1;
                        if (digits[i] as usize) < q {
                            break;
                        }
                        digits[i] = 0;
                        i += 1;
                    }
                }
            })
            .reduce(&init, merge);
        Ok(result)
    }

    pub fn weight_profile(&self) -> Result<WeightProfile> {
        let n = self.n;
        let counts = self.fold_codewords(
            || vec![0u64; n + 1],
            |acc, w| acc[w.weight()] += 1,
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        )?;
        Ok(WeightProfile::from_counts(counts))
    }

    /// Every codeword of weight exactly `w`, sorted.
    pub fn words_of_weight(&self, w: usize) -> Result<Vec<Word>> {
        let mut words = self.fold_codewords(
            Vec::new,
            |acc, x| {
                if x.weight() == w {
                    acc.push(x)
                }
            },
            |mut a, b| {
                a.extend(b);
                a
            },
        )?;
        words.sort_unstable();
        Ok(words)
    }

    /// Every codeword, sorted. Small codes only.
    pub fn codewords(&self) -> Result<Vec<Word>> {
        let mut words = self.fold_codewords(
            Vec::new,
            |acc, x| acc.push(x),
            |mut a, b| {
                a.extend(b);
                a
            },
        )?;
        words.sort_unstable();
        Ok(words)
    }

    /// The code on the coordinates in `keep`, renumbered in order.
    pub fn restrict(&self, keep: &[usize]) -> LinearCode {
        let rows = self.generator.iter().map(|w| w.select(keep)).collect();
        LinearCode::from_words(self.field, keep.len(), rows)
    }

    /// Deletes coordinate `i`.
    pub fn puncture(&self, i: usize) -> LinearCode {
        let keep: Vec<usize> = (0..self.n).filter(|&j| j != i).collect();
        self.restrict(&keep)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designs::families;

    #[test]
    fn plane_code_over_gf3_is_13_7() {
        let c = LinearCode::from_design(&families::pg23(), Field::F3).unwrap();
        assert_eq!((c.length(), c.dimension()), (13, 7));
        for g in c.generator() {
            for h in c.parity_check() {
                assert_eq!(g.dot(h, Field::F3), 0);
            }
        }
        let d = c.dual();
        assert_eq!(d.dimension(), 6);
        assert_eq!(d.dual(), c);
    }

    #[test]
    fn weight_profile_of_the_plane_code() {
        let c = LinearCode::from_design(&families::pg23(), Field::F3).unwrap();
        let w = c.weight_profile().unwrap();
        assert_eq!(w.total(), 2187);
        assert_eq!(w.min_distance, Some(4));
        assert_eq!(w.count(4), 26);
        assert!(w.nonzero_weights().iter().all(|x| x % 3 != 2));
        let d = c.dual().weight_profile().unwrap();
        assert_eq!(d.nonzero_weights(), vec![6, 9, 12]);
    }

    #[test]
    fn empty_and_repetition_codes() {
        let empty = LinearCode::from_rows(Field::F2, 5, &[]).unwrap();
        assert_eq!(empty.dimension(), 0);
        assert_eq!(empty.weight_profile().unwrap().total(), 1);
        let rep = LinearCode::from_rows(Field::F2, 4, &[vec![1, 1, 1, 1]]).unwrap();
        assert_eq!(rep.weight_profile().unwrap().min_distance, Some(4));
        assert_eq!(rep.dual().dimension(), 3);
    }

    #[test]
    fn enumeration_respects_the_budget() {
        let c = LinearCode::from_rows(Field::F2, 30, &(0..25).map(|i| {
            let mut r = vec![0u8; 30];
            r[i] = 1;
            r
        }).collect::<Vec<_>>()).unwrap();
        assert!(matches!(c.weight_profile(), Err(Error::BudgetExceeded { .. })));
    }
}
