//! From the ternary code of PG(2,3) down to the perfect ternary Golay code.

use serde::Serialize;

use super::field::{Field, Word};
use super::linear::LinearCode;
use crate::designs::families;
use crate::error::Result;

/// `[n, k, d]` of a code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Parameters {
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
}

impl Parameters {
    pub fn of(code: &LinearCode) -> Result<Self> {
        Ok(Parameters {
            n: code.length(),
            k: code.dimension(),
            d: code.weight_profile()?.min_distance,
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GolayChain {
    pub plane_code: Parameters,
    pub point: usize,
    /// Line-sum identity `Σ_P α = Σ_ℓ α` checked on every codeword and line.
    pub line_sums_hold: bool,
    pub codewords_checked: usize,
    pub lines_checked: usize,
    pub subcode_dimension: usize,
    pub extended: Parameters,
    pub punctured: Parameters,
    /// `3^n` and `3^k · Σ_{i≤e} C(n,i)·2^i` with `e = ⌊(d−1)/2⌋`.
    pub sphere_packing: (String, String),
    pub perfect: bool,
    pub holds: bool,
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Whether Hamming spheres of radius `⌊(d−1)/2⌋` around codewords tile the space exactly.
pub fn sphere_packing(p: Parameters, q: u8) -> (u128, u128) {
    let e = p.d.map_or(0, |d| (d - 1) / 2) as u128;
    let q = q as u128;
    let ball: u128 = (0..=e).map(|i| binomial(p.n as u128, i) * (q - 1).pow(i as u32)).sum();
    (q.pow(p.n as u32), q.pow(p.k as u32) * ball)
}

/// Builds `C = C_F3(PG(2,3))`, the subcode `C_p = {α : α_p = −Σ α}`, its
/// restriction away from `p`, and that restriction punctured once more.
pub fn golay_chain(point: usize) -> Result<GolayChain> {
    let field = Field::F3;
    let plane = families::pg23();
    let code = LinearCode::from_design(&plane, field)?;
    let words = code.codewords()?;

    let line_masks: Vec<u64> = plane
        .blocks()
        .iter()
        .map(|b| b.iter().fold(0u64, |m, &x| m | 1 << x))
        .collect();
    let line_sums_hold = words.iter().all(|w| {
        let total = w.entry_sum(field);
        line_masks.iter().all(|&m| {
            let on_line = Word {
                p: w.p & m,
                m: w.m & m,
            };
            on_line.entry_sum(field) == total
        })
    });

    let subcode: Vec<Word> = words
        .iter()
        .copied()
        .filter(|w| w.get(point) == field.neg(w.entry_sum(field)))
        .collect();
    let subcode = LinearCode::from_words(field, 13, subcode);
    let keep: Vec<usize> = (0..13).filter(|&i| i != point).collect();
    let extended_code = subcode.restrict(&keep);
    let punctured_code = extended_code.puncture(0);

    let extended = Parameters::of(&extended_code)?;
    let punctured = Parameters::of(&punctured_code)?;
    let (space, packed) = sphere_packing(punctured, 3);
    let perfect = space == packed;
    let plane_code = Parameters::of(&code)?;
    let holds = line_sums_hold
        && plane_code == Parameters { n: 13, k: 7, d: Some(4) }
        && extended == Parameters { n: 12, k: 6, d: Some(6) }
        && punctured == Parameters { n: 11, k: 6, d: Some(5) }
        && perfect;
    Ok(GolayChain {
        plane_code,
        point,
        line_sums_hold,
        codewords_checked: words.len(),
        lines_checked: line_masks.len(),
        subcode_dimension: subcode.dimension(),
        extended,
        punctured,
        sphere_packing: (space.to_string(), packed.to_string()),
        perfect,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_reaches_the_perfect_code() {
        let g = golay_chain(0).unwrap();
        assert!(g.line_sums_hold);
        assert_eq!(g.codewords_checked, 2187);
        assert_eq!(g.subcode_dimension, 6);
        assert_eq!(g.extended, Parameters { n: 12, k: 6, d: Some(6) });
        assert_eq!(g.punctured, Parameters { n: 11, k: 6, d: Some(5) });
        assert_eq!(g.sphere_packing, ("177147".to_string(), "177147".to_string()));
        assert!(g.holds);
    }

    #[test]
    fn every_point_gives_a_golay_code() {
        for p in 1..13 {
            assert!(golay_chain(p).unwrap().holds, "point {p}");
        }
    }
}
