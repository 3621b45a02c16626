use std::collections::HashMap;

use serde::Serialize;

use super::field::Word;
use super::linear::LinearCode;
use crate::budget;
use crate::error::Result;

/// A weight-`t` vertex and how many chosen codewords cover it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coverage {
    pub vertex: String,
    pub covered_by: u64,
}

/// Whether the weight-`w` codewords form a q-ary `t`-design.
#[derive(Clone, Debug, Serialize)]
pub struct QaryDesign {
    pub weight: usize,
    pub t: usize,
    pub words: usize,
    pub lambda: Option<u64>,
    /// The first vertex, and the first one covered a different number of times.
    pub witness: Option<(Coverage, Coverage)>,
}

/// `β` covers `α` when they agree on the support of `α`.
pub fn covers(beta: &Word, alpha: &Word) -> bool {
    let s = alpha.support_mask();
    (beta.p & s) == alpha.p && (beta.m & s) == alpha.m
}

fn subsets(mask: u64, t: usize, out: &mut Vec<u64>) {
    fn go(bits: &[u32], start: usize, t: usize, acc: u64, out: &mut Vec<u64>) {
        if t == 0 {
            out.push(acc);
            return;
        }
        for i in start..bits.len() {
            go(bits, i + 1, t - 1, acc | (1 << bits[i]), out);
        }
    }
    let bits: Vec<u32> = (0..64).filter(|i| mask >> i & 1 == 1).collect();
    go(&bits, 0, t, 0, out);
}

/// Every weight-`t` vertex of length `n`, ordered by support then entries.
fn vertices(code: &LinearCode, t: usize) -> Vec<Word> {
    let n = code.length();
    let units = code.field().units();
    let mut supports = Vec::new();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    subsets(full, t, &mut supports);
    let combos = units.len().pow(t as u32);
    let mut out = Vec::with_capacity(supports.len() * combos);
    for s in supports {
        let pos: Vec<usize> = (0..n).filter(|i| s >> i & 1 == 1).collect();
        for c in 0..combos {
            let mut rest = c;
            let mut w = Word::ZERO;
            for &i in pos.iter().rev() {
                w.set(i, units[rest % units.len()]);
                rest /= units.len();
            }
            out.push(w);
        }
    }
    out
}

/// Counts, for every weight-`t` vertex, the weight-`w` codewords covering it.
pub fn qary_design_check(code: &LinearCode, w: usize, t: usize) -> Result<QaryDesign> {
    let n = code.length();
    let units = code.field().units().len() as u128;
    let binom = (0..t).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128);
    budget::check(
        "weight-t vertices",
        binom * units.pow(t as u32),
        budget::codeword_budget(),
    )?;
    let words = code.words_of_weight(w)?;
    let mut counts: HashMap<Word, u64> = HashMap::new();
    let mut subs = Vec::new();
    for beta in &words {
        subs.clear();
        subsets(beta.support_mask(), t, &mut subs);
        for &s in &subs {
            let alpha = Word {
                p: beta.p & s,
                m: beta.m & s,
            };
            *counts.entry(alpha).or_default() += 1;
        }
    }
    let all = vertices(code, t);
    let count = |v: &Word| counts.get(v).copied().unwrap_or(0);
    let first = all[0];
    let lambda = count(&first);
    let witness = all.iter().find(|v| count(v) != lambda).map(|v| {
        (
            Coverage {
                vertex: first.to_string(n),
                covered_by: lambda,
            },
            Coverage {
                vertex: v.to_string(n),
                covered_by: count(v),
            },
        )
    });
    Ok(QaryDesign {
        weight: w,
        t,
        words: words.len(),
        lambda: witness.is_none().then_some(lambda),
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::Field;
    use crate::designs::families;

    #[test]
    fn covering_relation() {
        let beta = Word::from_entries(&[2, 1, 1, 0]);
        assert!(covers(&beta, &Word::from_entries(&[2, 1, 0, 0])));
        assert!(!covers(&beta, &Word::from_entries(&[1, 1, 0, 0])));
    }

    #[test]
    fn weight_four_words_of_the_plane_code() {
        let c = LinearCode::from_design(&families::pg23(), Field::F3).unwrap();
        let two = qary_design_check(&c, 4, 2).unwrap();
        assert_eq!(two.words, 26);
        assert_eq!(two.lambda, None);
        let (a, b) = two.witness.unwrap();
        assert_eq!((a.vertex.as_str(), a.covered_by), ("1100000000000", 1));
        assert_eq!((b.vertex.as_str(), b.covered_by), ("1200000000000", 0));
        let one = qary_design_check(&c, 4, 1).unwrap();
        assert_eq!(one.lambda, Some(4));
    }

    #[test]
    fn full_space_is_a_design() {
        let rows: Vec<Vec<u8>> = (0..6)
            .map(|i| (0..6).map(|j| (i == j) as u8).collect())
            .collect();
        let c = LinearCode::from_rows(Field::F2, 6, &rows).unwrap();
        // C(n−t, w−t) = C(4, 1).
        assert_eq!(qary_design_check(&c, 3, 2).unwrap().lambda, Some(4));
    }
}
