use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest point count supported by the bitmask-based predicates.
pub const MAX_POINTS: usize = 128;

pub type Block = [u32; 4];

/// A 4-hypergraph: `n` points and a multiset of 4-point lines.
///
/// Blocks are stored sorted and the multiset is kept in lexicographic order,
/// so equal hypergraphs serialize identically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "HypergraphWire", into = "HypergraphWire")]
pub struct Hypergraph {
    n: usize,
    blocks: Vec<Block>,
    label: String,
}

#[derive(Serialize, Deserialize)]
struct HypergraphWire {
    n: usize,
    blocks: Vec<Vec<u32>>,
    #[serde(default = "custom_label")]
    label: String,
}

fn custom_label() -> String {
    "custom".to_string()
}

impl TryFrom<HypergraphWire> for Hypergraph {
    type Error = Error;

    fn try_from(w: HypergraphWire) -> Result<Self> {
        let blocks = w
            .blocks
            .into_iter()
            .map(|b| {
                <[u32; 4]>::try_from(b.as_slice()).map_err(|_| {
                    Error::InvalidDesign(format!("block {b:?} does not have exactly 4 points"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Hypergraph::new(w.n, blocks, w.label)
    }
}

impl From<Hypergraph> for HypergraphWire {
    fn from(h: Hypergraph) -> Self {
        HypergraphWire {
            n: h.n,
            blocks: h.blocks.iter().map(|b| b.to_vec()).collect(),
            label: h.label,
        }
    }
}

impl Hypergraph {
    pub fn new<L: Into<String>>(n: usize, blocks: Vec<Block>, label: L) -> Result<Self> {
        if n > MAX_POINTS {
            return Err(Error::InvalidDesign(format!(
                "{n} points exceeds the supported maximum of {MAX_POINTS}"
            )));
        }
        let mut sorted = Vec::with_capacity(blocks.len());
        for mut b in blocks {
            b.sort_unstable();
            if b.iter().any(|&x| x as usize >= n) {
                return Err(Error::InvalidDesign(format!(
                    "block {b:?} has a point outside 0..{n}"
                )));
            }
            if b.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidDesign(format!(
                    "block {b:?} repeats a point"
                )));
            }
            sorted.push(b);
        }
        sorted.sort_unstable();
        Ok(Hypergraph {
            n,
            blocks: sorted,
            label: label.into(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label<L: Into<String>>(mut self, label: L) -> Self {
        self.label = label.into();
        self
    }

    pub fn points(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn block_mask(b: &Block) -> u128 {
        b.iter().fold(0u128, |m, &x| m | (1u128 << x))
    }

    /// Number of blocks (with multiplicity) through each unordered pair, as an `n × n` table.
    pub fn pair_counts(&self) -> Vec<Vec<usize>> {
        let mut counts = vec![vec![0usize; self.n]; self.n];
        for b in &self.blocks {
            for i in 0..4 {
                for j in i + 1..4 {
                    let (x, y) = (b[i] as usize, b[j] as usize);
                    counts[x][y] += 1;
                    counts[y][x] += 1;
                }
            }
        }
        counts
    }

    /// Distinct lines (as point sets) through each unordered pair, keyed by `(min, max)`.
    pub fn lines_through_pairs(&self) -> HashMap<(u32, u32), Vec<Block>> {
        let mut map: HashMap<(u32, u32), Vec<Block>> = HashMap::new();
        for b in &self.blocks {
            for i in 0..4 {
                for j in i + 1..4 {
                    let entry = map.entry((b[i], b[j])).or_default();
                    if !entry.contains(b) {
                        entry.push(*b);
                    }
                }
            }
        }
        map
    }

    /// First pair of lines that share three or more points without being equal.
    pub fn pliability_violation(&self) -> Option<(Block, Block)> {
        let mut by_triple: HashMap<[u32; 3], Block> = HashMap::new();
        for b in &self.blocks {
            for skip in 0..4 {
                let mut t = [0u32; 3];
                let mut k = 0;
                for (i, &x) in b.iter().enumerate() {
                    if i != skip {
                        t[k] = x;
                        k += 1;
                    }
                }
                match by_triple.get(&t) {
                    Some(other) if other != b => return Some((*other, *b)),
                    Some(_) => {}
                    None => {
                        by_triple.insert(t, *b);
                    }
                }
            }
        }
        None
    }

    pub fn is_pliable(&self) -> bool {
        self.pliability_violation().is_none()
    }

    pub fn collinear(&self, a: usize, b: usize) -> bool {
        a == b && a < self.n
            || self.blocks.iter().any(|bl| {
                bl.contains(&(a as u32)) && bl.contains(&(b as u32))
            })
    }

    /// Connected components of the collinearity graph.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for b in &self.blocks {
            let r0 = find(&mut parent, b[0] as usize);
            for &x in &b[1..] {
                let r = find(&mut parent, x as usize);
                if r != r0 {
                    let (lo, hi) = if r < r0 { (r, r0) } else { (r0, r) };
                    parent[hi] = lo;
                }
            }
        }
        let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
        for x in 0..self.n {
            let r = find(&mut parent, x);
            groups.entry(r).or_default().push(x);
        }
        let mut out: Vec<Vec<usize>> = groups.into_values().collect();
        out.sort();
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    pub fn is_simple(&self) -> bool {
        self.blocks.windows(2).all(|w| w[0] != w[1])
    }

    /// Incidence matrix with one row per block and one column per point.
    pub fn incidence_matrix(&self) -> Vec<Vec<u8>> {
        self.blocks
            .iter()
            .map(|b| {
                let mut row = vec![0u8; self.n];
                for &x in b {
                    row[x as usize] = 1;
                }
                row
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("hypergraph serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_and_round_trip() {
        let h = Hypergraph::new(6, vec![[5, 4, 3, 2], [3, 2, 1, 0]], "t").unwrap();
        assert_eq!(h.blocks(), &[[0, 1, 2, 3], [2, 3, 4, 5]]);
        let json = h.to_json();
        assert_eq!(
            json,
            r#"{"n":6,"blocks":[[0,1,2,3],[2,3,4,5]],"label":"t"}"#
        );
        assert_eq!(Hypergraph::from_json(&json).unwrap(), h);
    }

    #[test]
    fn rejects_malformed_blocks() {
        assert!(Hypergraph::new(4, vec![[0, 1, 2, 4]], "x").is_err());
        assert!(Hypergraph::new(4, vec![[0, 1, 1, 2]], "x").is_err());
        assert!(Hypergraph::from_json(r#"{"n":5,"blocks":[[0,1,2]]}"#).is_err());
        let h = Hypergraph::from_json(r#"{"n":4,"blocks":[[3,2,1,0]]}"#).unwrap();
        assert_eq!(h.label(), "custom");
    }

    #[test]
    fn three_shared_points_break_pliability() {
        let h = Hypergraph::new(5, vec![[0, 1, 2, 3], [0, 1, 2, 4]], "x").unwrap();
        assert!(!h.is_pliable());
        let dup = Hypergraph::new(4, vec![[0, 1, 2, 3], [0, 1, 2, 3]], "x").unwrap();
        assert!(dup.is_pliable());
        assert!(!dup.is_simple());
    }

    #[test]
    fn connectivity() {
        let h = Hypergraph::new(8, vec![[0, 1, 2, 3], [4, 5, 6, 7]], "x").unwrap();
        assert!(!h.is_connected());
        assert_eq!(h.components().len(), 2);
        let h = Hypergraph::new(7, vec![[0, 1, 2, 3], [3, 4, 5, 6]], "x").unwrap();
        assert!(h.is_connected());
    }
}
