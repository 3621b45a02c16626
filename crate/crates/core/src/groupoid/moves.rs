use std::collections::HashMap;

use crate::designs::Hypergraph;
use crate::error::{Error, Result};
use crate::permgroup::Permutation;

/// A puzzle in which a hole walks over `positions()` and each step permutes
/// `degree()` symbols.
///
/// Designs, pliable functions and the signed and dual games on PG(2,3) all
/// fit this shape; the groupoid machinery is written once against it.
pub trait MoveSystem: Sync {
    fn positions(&self) -> usize;

    fn degree(&self) -> usize;

    /// Positions reachable from `from` in one step, ascending, excluding `from`.
    fn targets(&self, from: usize) -> Vec<usize>;

    /// The permutation of one step, or `None` when the step is illegal.
    fn step(&self, from: usize, to: usize) -> Option<Permutation>;

    /// Position reached by a walk from `home` whose accumulated permutation is
    /// `g`, or `None` if no walk can produce `g`'s action on the hole.
    fn locate(&self, home: usize, g: &Permutation) -> Option<usize>;

    /// Symbols fixed by every closed walk at `home`.
    fn hole_symbols(&self, home: usize) -> Vec<usize>;

    /// Whether `step(b, a)` is always the inverse of `step(a, b)`.
    fn is_symmetric(&self) -> bool {
        false
    }

    fn label(&self) -> String;
}

/// `[a,b] = (a,b)·∏(c,d)` over the distinct lines `{a,b,c,d}`; `[a,a]` is the identity.
pub fn elementary_move(h: &Hypergraph, a: usize, b: usize) -> Result<Permutation> {
    let n = h.n();
    if a >= n || b >= n {
        return Err(Error::InvalidArgument(format!(
            "point out of range: {a}, {b} (n = {n})"
        )));
    }
    if a == b {
        return Ok(Permutation::identity(n));
    }
    let mut lines: Vec<[u32; 4]> = h
        .blocks()
        .iter()
        .filter(|bl| bl.contains(&(a as u32)) && bl.contains(&(b as u32)))
        .copied()
        .collect();
    lines.dedup();
    move_from_lines(n, a, b, &lines)
}

fn move_from_lines(n: usize, a: usize, b: usize, lines: &[[u32; 4]]) -> Result<Permutation> {
    if lines.is_empty() {
        return Err(Error::NonCollinear { a, b });
    }
    let mut images: Vec<u32> = (0..n as u32).collect();
    images[a] = b as u32;
    images[b] = a as u32;
    let mut owner: Vec<Option<[u32; 4]>> = vec![None; n];
    for line in lines {
        let rest: Vec<u32> = line
            .iter()
            .copied()
            .filter(|&x| x as usize != a && x as usize != b)
            .collect();
        let (c, d) = (rest[0] as usize, rest[1] as usize);
        for x in [c, d] {
            if let Some(other) = owner[x] {
                return Err(Error::NotPliable {
                    first: other,
                    second: *line,
                });
            }
            owner[x] = Some(*line);
        }
        images[c] = d as u32;
        images[d] = c as u32;
    }
    Permutation::from_images(images)
}

/// `[a₀,a₁]·[a₁,a₂]⋯[a_{k-1},a_k]`, applied left to right.
pub fn move_sequence(h: &Hypergraph, points: &[usize]) -> Result<Permutation> {
    let mut acc = Permutation::identity(h.n());
    for w in points.windows(2) {
        acc = acc.then(&elementary_move(h, w[0], w[1])?);
    }
    if let Some(&p) = points.first() {
        if p >= h.n() {
            return Err(Error::InvalidArgument(format!("point {p} out of range")));
        }
    }
    Ok(acc)
}

/// The moving-counter game on a pliable 4-hypergraph, with every elementary
/// move precomputed.
#[derive(Clone, Debug)]
pub struct DesignMoves {
    hypergraph: Hypergraph,
    moves: Vec<Option<Permutation>>,
    targets: Vec<Vec<usize>>,
}

impl DesignMoves {
    pub fn new(h: &Hypergraph) -> Result<Self> {
        if let Some((first, second)) = h.pliability_violation() {
            return Err(Error::NotPliable { first, second });
        }
        let n = h.n();
        let lines = h.lines_through_pairs();
        let mut moves = vec![None; n * n];
        let mut targets = vec![Vec::new(); n];
        for a in 0..n {
            moves[a * n + a] = Some(Permutation::identity(n));
        }
        let mut keys: Vec<&(u32, u32)> = lines.keys().collect();
        keys.sort_unstable();
        for &&(a, b) in &keys {
            let (a, b) = (a as usize, b as usize);
            let m = move_from_lines(n, a, b, &lines[&(a as u32, b as u32)])?;
            moves[b * n + a] = Some(m.clone());
            moves[a * n + b] = Some(m);
            targets[a].push(b);
            targets[b].push(a);
        }
        for t in targets.iter_mut() {
            t.sort_unstable();
        }
        Ok(DesignMoves {
            hypergraph: h.clone(),
            moves,
            targets,
        })
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.hypergraph
    }

    /// The cached elementary move `[a,b]`.
    pub fn elementary(&self, a: usize, b: usize) -> Result<&Permutation> {
        let n = self.hypergraph.n();
        if a >= n || b >= n {
            return Err(Error::InvalidArgument(format!(
                "point out of range: {a}, {b} (n = {n})"
            )));
        }
        self.moves[a * n + b]
            .as_ref()
            .ok_or(Error::NonCollinear { a, b })
    }

    pub fn collinear(&self, a: usize, b: usize) -> bool {
        let n = self.hypergraph.n();
        a < n && b < n && self.moves[a * n + b].is_some()
    }

    pub fn sequence(&self, points: &[usize]) -> Result<Permutation> {
        let mut acc = Permutation::identity(self.hypergraph.n());
        for w in points.windows(2) {
            acc = acc.then(self.elementary(w[0], w[1])?);
        }
        Ok(acc)
    }

    /// Distinct elementary moves `[a,b]` with `a < b`.
    pub fn elementary_moves(&self) -> Vec<&Permutation> {
        let n = self.hypergraph.n();
        let mut out = Vec::new();
        for a in 0..n {
            for &b in &self.targets[a] {
                if a < b {
                    out.push(self.moves[a * n + b].as_ref().unwrap());
                }
            }
        }
        out
    }

    /// Lines through each collinear pair, for callers that need the geometry.
    pub fn lines_through(&self) -> HashMap<(u32, u32), Vec<[u32; 4]>> {
        self.hypergraph.lines_through_pairs()
    }
}

impl MoveSystem for DesignMoves {
    fn positions(&self) -> usize {
        self.hypergraph.n()
    }

    fn degree(&self) -> usize {
        self.hypergraph.n()
    }

    fn targets(&self, from: usize) -> Vec<usize> {
        self.targets[from].clone()
    }

    fn step(&self, from: usize, to: usize) -> Option<Permutation> {
        self.elementary(from, to).ok().cloned()
    }

    fn locate(&self, home: usize, g: &Permutation) -> Option<usize> {
        Some(g.image(home))
    }

    fn hole_symbols(&self, home: usize) -> Vec<usize> {
        vec![home]
    }

    fn is_symmetric(&self) -> bool {
        true
    }

    fn label(&self) -> String {
        self.hypergraph.label().to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designs::families;

    #[test]
    fn pg23_moves_are_double_transpositions() {
        let h = families::pg23();
        let line = h.blocks()[0];
        let (a, b) = (line[0] as usize, line[1] as usize);
        let m = elementary_move(&h, a, b).unwrap();
        let expected = Permutation::from_cycles(13, &[&[a, b], &[line[2] as usize, line[3] as usize]]).unwrap();
        assert_eq!(m, expected);
        assert!(m.then(&elementary_move(&h, b, a).unwrap()).is_identity());
    }

    #[test]
    fn boolean2_move() {
        let h = families::boolean_system(2).unwrap();
        assert_eq!(elementary_move(&h, 0, 1).unwrap().cycle_string(), "(0 1)(2 3)");
        assert!(elementary_move(&h, 2, 2).unwrap().is_identity());
    }

    #[test]
    fn non_collinear_is_rejected() {
        let h = families::pairs_hypergraph(3).unwrap();
        assert!(elementary_move(&h, 0, 1).is_ok());
        let h = Hypergraph::new(8, vec![[0, 1, 2, 3], [4, 5, 6, 7]], "x").unwrap();
        assert!(matches!(
            elementary_move(&h, 0, 4),
            Err(Error::NonCollinear { a: 0, b: 4 })
        ));
    }

    #[test]
    fn walks_compose_left_to_right() {
        let h = families::pg23();
        assert!(move_sequence(&h, &[3]).unwrap().is_identity());
        assert!(move_sequence(&h, &[0, 5, 0]).unwrap().is_identity());
        let line = h.blocks()[4];
        let pts: Vec<usize> = line.iter().map(|&x| x as usize).collect();
        // A triangle inside one line closes up to the identity.
        assert!(move_sequence(&h, &[pts[0], pts[1], pts[2], pts[0]]).unwrap().is_identity());
        let g = move_sequence(&h, &[0, 1, 2]).unwrap();
        assert_eq!(g.image(0), 2);
    }

    #[test]
    fn cached_moves_match_direct_computation() {
        let h = families::quadratic_system(2, 0).unwrap();
        let dm = DesignMoves::new(&h).unwrap();
        for a in 0..h.n() {
            for b in 0..h.n() {
                assert_eq!(dm.elementary(a, b).unwrap(), &elementary_move(&h, a, b).unwrap());
            }
        }
        assert_eq!(dm.elementary_moves().len(), 45);
    }

    #[test]
    fn supports_stay_within_the_pair_union() {
        let h = families::symplectic_system(2).unwrap();
        let lambda = h.lambda().unwrap();
        let dm = DesignMoves::new(&h).unwrap();
        for m in dm.elementary_moves() {
            assert_eq!(m.support().len(), 2 * lambda + 2);
            assert_eq!(m.order(), 2);
        }
    }
}
