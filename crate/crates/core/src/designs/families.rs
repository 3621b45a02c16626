//! Constructors for the design families used throughout the crate.

use super::forms::QuadraticFormSpace;
use super::hypergraph::{Block, Hypergraph};
use crate::error::{Error, Result};

/// Normalized projective points of PG(2,3) (first non-zero coordinate 1), in lexicographic order.
pub fn pg23_points() -> Vec<[u8; 3]> {
    let mut pts = Vec::new();
    for x in 0..3u8 {
        for y in 0..3u8 {
            for z in 0..3u8 {
                let v = [x, y, z];
                if let Some(&lead) = v.iter().find(|&&c| c != 0) {
                    if lead == 1 {
                        pts.push(v);
                    }
                }
            }
        }
    }
    pts
}

/// The projective plane of order 3: 13 points, 13 lines, every pair on one line.
pub fn pg23() -> Hypergraph {
    let pts = pg23_points();
    let blocks = pts
        .iter()
        .map(|line| {
            let on: Vec<u32> = pts
                .iter()
                .enumerate()
                .filter(|(_, p)| (0..3).map(|i| p[i] as u32 * line[i] as u32).sum::<u32>() % 3 == 0)
                .map(|(i, _)| i as u32)
                .collect();
            <[u32; 4]>::try_from(on.as_slice()).expect("four points per line")
        })
        .collect();
    Hypergraph::new(13, blocks, "pg23").expect("valid plane")
}

/// All 4-subsets of `0..n` (as integers) whose XOR is zero and which pass `keep`.
fn zero_sum_quadruples(n: u32, mut keep: impl FnMut(&Block) -> bool) -> Vec<Block> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let d = a ^ b ^ c;
                if d > c && d < n {
                    let blk = [a, b, c, d];
                    if keep(&blk) {
                        out.push(blk);
                    }
                }
            }
        }
    }
    out
}

/// Boolean quadruple system on `GF(2)^m`: all 4-subsets summing to zero.
pub fn boolean_system(m: u32) -> Result<Hypergraph> {
    if !(2..=6).contains(&m) {
        return Err(Error::InvalidArgument(format!(
            "boolean system needs 2 <= m <= 6, got {m}"
        )));
    }
    let n = 1u32 << m;
    Hypergraph::new(n as usize, zero_sum_quadruples(n, |_| true), format!("boolean:{m}"))
}

/// Symplectic quadruple system on `GF(2)^{2m}`: zero-sum 4-subsets with `Σ θ(v_i) = 0`.
pub fn symplectic_system(m: u32) -> Result<Hypergraph> {
    if !(2..=3).contains(&m) {
        return Err(Error::InvalidArgument(format!(
            "symplectic system supported for m in 2..=3, got {m}"
        )));
    }
    let q = QuadraticFormSpace::new(m)?;
    let blocks = zero_sum_quadruples(q.size(), |b| b.iter().map(|&v| q.theta(v)).sum::<u32>() % 2 == 0);
    Hypergraph::new(q.size() as usize, blocks, format!("symplectic:{m}"))
}

/// Vectors `v` with `θ(v) = ε`, ascending; point `i` of the quadratic system is `θ_{v_i}`.
pub fn quadratic_points(m: u32, eps: u32) -> Result<Vec<u32>> {
    let q = QuadraticFormSpace::new(m)?;
    Ok((0..q.size()).filter(|&v| q.theta(v) == eps).collect())
}

/// Quadratic quadruple system `D^ε`; `m >= 3`, or `m = 2` with `ε = 0`.
pub fn quadratic_system(m: u32, eps: u32) -> Result<Hypergraph> {
    let allowed = eps <= 1 && (m == 3 || (m == 2 && eps == 0));
    if !allowed {
        return Err(Error::InvalidArgument(format!(
            "quadratic system supported for (m, eps) in {{(2,0), (3,0), (3,1)}}, got ({m},{eps})"
        )));
    }
    let pts = quadratic_points(m, eps)?;
    let n = pts.len() as u32;
    let mut blocks = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let target = pts[a as usize] ^ pts[b as usize] ^ pts[c as usize];
                if let Ok(d) = pts.binary_search(&target) {
                    let d = d as u32;
                    if d > c {
                        blocks.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    Hypergraph::new(n as usize, blocks, format!("quadratic:{m}:{eps}"))
}

/// Points `x_i = 2i`, `y_i = 2i + 1`; lines `{x_i, y_i, x_j, y_j}` for `i < j`.
pub fn pairs_hypergraph(n: usize) -> Result<Hypergraph> {
    if !(3..=32).contains(&n) {
        return Err(Error::InvalidArgument(format!(
            "pairs hypergraph needs 3 <= n <= 32, got {n}"
        )));
    }
    let mut blocks = Vec::new();
    for i in 0..n as u32 {
        for j in i + 1..n as u32 {
            blocks.push([2 * i, 2 * i + 1, 2 * j, 2 * j + 1]);
        }
    }
    Hypergraph::new(2 * n, blocks, format!("pairs:{n}"))
}

/// Replaces every block of a 2-(n, 2^{α+1}, 1) design by a Boolean quadruple
/// system on its points, identifying the sorted block with `GF(2)^{α+1}`.
pub fn boolean_inflation(n: usize, base_blocks: &[Vec<usize>], alpha: u32) -> Result<Hypergraph> {
    if alpha == 0 || alpha > 5 {
        return Err(Error::InvalidArgument(format!("alpha = {alpha} out of range")));
    }
    let k = 1usize << (alpha + 1);
    let mut cover = vec![vec![0usize; n]; n];
    for b in base_blocks {
        let mut sorted = b.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != k || sorted.iter().any(|&x| x >= n) {
            return Err(Error::InvalidDesign(format!(
                "base block {b:?} is not a {k}-subset of 0..{n}"
            )));
        }
        for i in 0..k {
            for j in i + 1..k {
                cover[sorted[i]][sorted[j]] += 1;
            }
        }
    }
    for (x, row) in cover.iter().enumerate() {
        for (y, &c) in row.iter().enumerate().skip(x + 1) {
            if c != 1 {
                return Err(Error::InvalidDesign(format!(
                    "pair {{{x}, {y}}} lies in {c} base blocks, expected 1"
                )));
            }
        }
    }
    let local = zero_sum_quadruples(k as u32, |_| true);
    let mut blocks = Vec::new();
    for b in base_blocks {
        let mut sorted = b.clone();
        sorted.sort_unstable();
        for q in &local {
            blocks.push(q.map(|i| sorted[i as usize] as u32));
        }
    }
    Hypergraph::new(n, blocks, format!("inflation:alpha={alpha}"))
}

/// Lines of the projective plane PG(2,p) over a prime field, as sorted point lists.
///
/// Points are normalized vectors (first non-zero coordinate 1) in lexicographic order.
pub fn prime_plane_lines(p: u32) -> Result<Vec<Vec<usize>>> {
    if p < 2 || (2..p).any(|d| p % d == 0) || p > 7 {
        return Err(Error::InvalidArgument(format!("plane order {p} is not a prime up to 7")));
    }
    let mut pts = Vec::new();
    for x in 0..p {
        for y in 0..p {
            for z in 0..p {
                let v = [x, y, z];
                if v.iter().find(|&&c| c != 0) == Some(&1) {
                    pts.push(v);
                }
            }
        }
    }
    Ok(pts
        .iter()
        .map(|line| {
            pts.iter()
                .enumerate()
                .filter(|(_, q)| (0..3).map(|i| q[i] * line[i]).sum::<u32>() % p == 0)
                .map(|(i, _)| i)
                .collect()
        })
        .collect())
}

/// Boolean inflation of `PG(2, 2^{α+1}−1)`: every line of size `2^{α+1}`
/// carries a copy of the Boolean system. `α = 1` is PG(2,3) itself and
/// `α = 2` gives 57 points with `λ = 3`.
pub fn inflated_plane(alpha: u32) -> Result<Hypergraph> {
    let order = match alpha {
        1 => 3,
        2 => 7,
        _ => return Err(Error::InvalidArgument(format!("alpha = {alpha}, expected 1 or 2"))),
    };
    let lines = prime_plane_lines(order)?;
    let n = (order * order + order + 1) as usize;
    Ok(boolean_inflation(n, &lines, alpha)?.with_label(format!("inflation:{alpha}")))
}

/// The affine plane AG(2,4): 16 points, 20 lines, a 2-(16,4,1) design.
pub fn ag24() -> Hypergraph {
    // GF(4) = {0, 1, w, w²} as 0..4; addition is XOR.
    const MUL: [[u32; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];
    let idx = |x: u32, y: u32| 4 * x + y;
    let mut blocks = Vec::new();
    for slope in 0..4 {
        for c in 0..4 {
            let mut b = [0u32; 4];
            for x in 0..4 {
                b[x as usize] = idx(x, MUL[slope][x as usize] ^ c);
            }
            blocks.push(b);
        }
    }
    for c in 0..4 {
        blocks.push([idx(c, 0), idx(c, 1), idx(c, 2), idx(c, 3)]);
    }
    Hypergraph::new(16, blocks, "ag24").expect("valid plane")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pg23_counts() {
        let h = pg23();
        assert_eq!(h.n(), 13);
        assert_eq!(h.blocks().len(), 13);
        assert_eq!(h.lambda(), Some(1));
        assert_eq!(pg23_points()[0], [0, 0, 1]);
        assert_eq!(pg23_points()[12], [1, 2, 2]);
    }

    #[test]
    fn boolean_parameters() {
        let b2 = boolean_system(2).unwrap();
        assert_eq!(b2.blocks(), &[[0, 1, 2, 3]]);
        let b3 = boolean_system(3).unwrap();
        assert_eq!(b3.blocks().len(), 14);
        assert_eq!(b3.lambda(), Some(3));
        assert_eq!(boolean_system(4).unwrap().lambda(), Some(7));
        assert!(boolean_system(1).is_err());
    }

    #[test]
    fn symplectic_parameters() {
        let s = symplectic_system(2).unwrap();
        assert_eq!(s.n(), 16);
        // Lines through {0, v} are {0, v, c, c + v} with φ(c, v) = 0: (|v⊥| - 2) / 2 = 2^{2m-2} - 1.
        assert_eq!(s.lambda(), Some(3));
        assert_eq!(symplectic_system(3).unwrap().lambda(), Some(15));
        assert!(s.blocks().iter().all(|b| b[0] ^ b[1] ^ b[2] ^ b[3] == 0));
        assert!(symplectic_system(1).is_err());
    }

    #[test]
    fn symplectic_lambda_by_brute_force() {
        // Count blocks through the pair {0, 1} directly from the definition.
        let q = QuadraticFormSpace::new(2).unwrap();
        let mut count = 0;
        for c in 2..16u32 {
            for d in c + 1..16u32 {
                if 1 ^ c ^ d == 0 && (q.theta(0) + q.theta(1) + q.theta(c) + q.theta(d)) % 2 == 0 {
                    count += 1;
                }
            }
        }
        assert_eq!(count, 3);
    }

    #[test]
    fn quadratic_parameters() {
        let d = quadratic_system(2, 0).unwrap();
        assert_eq!(d.n(), 10);
        assert_eq!(d.lambda(), Some(2));
        assert_eq!(quadratic_system(3, 0).unwrap().n(), 36);
        assert_eq!(quadratic_system(3, 1).unwrap().n(), 28);
        assert!(quadratic_system(2, 1).is_err());
        assert!(quadratic_system(3, 2).is_err());
    }

    #[test]
    fn pairs_parameters() {
        let p = pairs_hypergraph(3).unwrap();
        assert_eq!(p.n(), 6);
        assert_eq!(p.blocks().len(), 3);
        let p4 = pairs_hypergraph(4).unwrap();
        let counts = p4.pair_counts();
        assert_eq!(counts[0][2], 1); // {x1, x2}
        assert_eq!(counts[0][1], 3); // {x1, y1}
        assert!(pairs_hypergraph(2).is_err());
    }

    #[test]
    fn inflation_reproduces_boolean_and_plane() {
        let single4 = boolean_inflation(4, &[vec![0, 1, 2, 3]], 1).unwrap();
        assert_eq!(single4.blocks(), boolean_system(2).unwrap().blocks());
        let single8 = boolean_inflation(8, &[(0..8).collect()], 2).unwrap();
        assert_eq!(single8.blocks(), boolean_system(3).unwrap().blocks());
        let pg = pg23();
        let lines: Vec<Vec<usize>> = pg
            .blocks()
            .iter()
            .map(|b| b.iter().map(|&x| x as usize).collect())
            .collect();
        assert_eq!(boolean_inflation(13, &lines, 1).unwrap().blocks(), pg.blocks());
        assert!(boolean_inflation(8, &[vec![0, 1, 2, 3]], 1).is_err());
    }

    #[test]
    fn inflated_fano_like_plane() {
        let h = inflated_plane(2).unwrap();
        assert_eq!(h.n(), 57);
        assert_eq!(h.blocks().len(), 57 * 14);
        assert_eq!(h.lambda(), Some(3));
        assert!(h.profile().is_supersimple);
        assert_eq!(inflated_plane(1).unwrap().blocks(), pg23().blocks());
        assert!(inflated_plane(3).is_err());
    }

    #[test]
    fn ag24_is_a_steiner_system() {
        let h = ag24();
        assert_eq!(h.blocks().len(), 20);
        assert_eq!(h.lambda(), Some(1));
        assert!(h.profile().is_supersimple);
    }
}
