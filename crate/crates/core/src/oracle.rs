//! Brute-force cross-checks for the fast algorithms.
//!
//! Each oracle recomputes a quantity by plain enumeration, sharing nothing with
//! the fast path except the input: group orders by closure under
//! multiplication, groupoids by breadth-first search over walks, and covering
//! radii by a breadth-first sweep of the whole Hamming space.

use std::collections::{HashSet, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use crate::codes::{CosetTable, Field, LinearCode};
use crate::error::{Error, Result};
use crate::groupoid::{Groupoid, MoveSystem};
use crate::permgroup::{Permutation, PermutationGroup};

pub const GROUP_LIMIT: usize = 10_000;
pub const WALK_LIMIT: usize = 50_000;
pub const SWEEP_LIMIT: u64 = 1 << 20;

fn over(what: &'static str, needed: usize, budget: usize) -> Error {
    Error::BudgetExceeded {
        what,
        needed: needed as u128,
        budget: budget as u128,
    }
}

/// Every product of `gens`, by breadth-first search from the identity.
pub fn closure(degree: usize, gens: &[Permutation], limit: usize) -> Result<HashSet<Permutation>> {
    let id = Permutation::identity(degree);
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.then(g);
            if seen.insert(y.clone()) {
                if seen.len() > limit {
                    return Err(over("closure elements", seen.len(), limit));
                }
                queue.push_back(y);
            }
        }
    }
    Ok(seen)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupAgreement {
    pub label: String,
    pub degree: usize,
    pub closure_size: usize,
    pub bsgs_order: String,
    /// The closure equals the set of elements listed from the BSGS.
    pub same_elements: bool,
    pub agrees: bool,
}

/// Compares a BSGS against the closure of its original generators.
pub fn check_group(label: &str, g: &PermutationGroup, limit: usize) -> Result<GroupAgreement> {
    let c = closure(g.degree(), g.generators(), limit)?;
    let listed: HashSet<Permutation> = g.elements().into_iter().collect();
    let same_elements = listed == c;
    let bsgs_order = g.order();
    Ok(GroupAgreement {
        label: label.to_string(),
        degree: g.degree(),
        closure_size: c.len(),
        agrees: same_elements && bsgs_order == c.len().into(),
        bsgs_order: bsgs_order.to_string(),
        same_elements,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupoidAgreement {
    pub label: String,
    /// Distinct (position, permutation) pairs reached by walks from the hole.
    pub walks: usize,
    pub groupoid_size: String,
    /// Closed walks found by search.
    pub closed_walks: usize,
    pub hole_stabilizer_order: String,
    /// Every walk found lies in `π∞ · t_a` for its end position `a`.
    pub members: bool,
    /// Every position is reached by exactly `|π∞|` walks.
    pub uniform_cosets: bool,
    pub agrees: bool,
}

/// Breadth-first search over all walks from the hole, compared with the groupoid.
pub fn check_groupoid<M: MoveSystem>(g: &Groupoid<M>, limit: usize) -> Result<GroupoidAgreement> {
    let sys = g.system();
    let home = g.home();
    let start = (home, Permutation::identity(g.degree()));
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some((a, p)) = queue.pop_front() {
        for b in sys.targets(a) {
            let step = sys.step(a, b).expect("targets are legal");
            let next = (b, p.then(&step));
            if seen.insert(next.clone()) {
                if seen.len() > limit {
                    return Err(over("walks", seen.len(), limit));
                }
                queue.push_back(next);
            }
        }
    }
    let mut per_position = vec![0usize; g.positions()];
    let mut members = true;
    for (a, p) in &seen {
        per_position[*a] += 1;
        members &= sys.locate(home, p) == Some(*a) && g.contains(p)?;
    }
    let order = g.hole_stabilizer_order();
    let uniform_cosets = per_position.iter().all(|&c| order == c.into());
    let size = g.size();
    Ok(GroupoidAgreement {
        label: sys.label(),
        walks: seen.len(),
        closed_walks: per_position[home],
        agrees: members && uniform_cosets && size == seen.len().into(),
        groupoid_size: size.to_string(),
        hole_stabilizer_order: order.to_string(),
        members,
        uniform_cosets,
    })
}

/// Distances from a code to every vector of `GF(q)^n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FullSweep {
    pub q: u8,
    pub n: usize,
    pub vertices: u64,
    pub covering_radius: usize,
    /// Vertices at each distance from the code.
    pub distance_counts: Vec<u64>,
    /// Whether the distance partition is equitable.
    pub equitable: bool,
}

/// Multi-source breadth-first search over the Hamming graph from every codeword.
pub fn hamming_sweep(code: &LinearCode, limit: u64) -> Result<FullSweep> {
    let q = code.field().q() as u64;
    let n = code.length();
    let size = q.checked_pow(n as u32).filter(|&s| s <= limit).ok_or(Error::BudgetExceeded {
        what: "Hamming space",
        needed: (q as u128).saturating_pow(n as u32),
        budget: limit as u128,
    })?;
    let pow: Vec<u64> = (0..n).map(|i| q.pow(i as u32)).collect();
    let index = |entries: &[u8]| -> u64 {
        entries.iter().zip(&pow).map(|(&e, &p)| e as u64 * p).sum()
    };
    let neighbours = |v: u64, out: &mut Vec<u64>| {
        out.clear();
        for &p in &pow {
            let digit = (v / p) % q;
            for c in 0..q {
                if c != digit {
                    out.push(v - digit * p + c * p);
                }
            }
        }
    };

    let mut dist = vec![u8::MAX; size as usize];
    let mut frontier: Vec<u64> = Vec::new();
    for w in code.codewords()? {
        let v = index(&w.entries(n));
        dist[v as usize] = 0;
        frontier.push(v);
    }
    let mut d = 0u8;
    let mut buf = Vec::new();
    loop {
        let mut next = Vec::new();
        for &v in &frontier {
            neighbours(v, &mut buf);
            for &u in &buf {
                if dist[u as usize] == u8::MAX {
                    dist[u as usize] = d + 1;
                    next.push(u);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        d += 1;
        frontier = next;
    }
    let rho = d as usize;
    let mut distance_counts = vec![0u64; rho + 1];
    for &x in &dist {
        distance_counts[x as usize] += 1;
    }

    let profile = |v: u64, buf: &mut Vec<u64>| -> Vec<u32> {
        let mut counts = vec![0u32; rho + 1];
        neighbours(v, buf);
        for &u in buf.iter() {
            counts[dist[u as usize] as usize] += 1;
        }
        counts
    };
    let mut reference: Vec<Option<Vec<u32>>> = vec![None; rho + 1];
    let mut buf = Vec::new();
    for v in 0..size {
        let class = dist[v as usize] as usize;
        if reference[class].is_none() {
            reference[class] = Some(profile(v, &mut buf));
        }
    }
    let equitable = (0..size).into_par_iter().all(|v| {
        let mut buf = Vec::new();
        let class = dist[v as usize] as usize;
        reference[class].as_deref() == Some(profile(v, &mut buf).as_slice())
    });
    Ok(FullSweep {
        q: q as u8,
        n,
        vertices: size,
        covering_radius: rho,
        distance_counts,
        equitable,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodeAgreement {
    pub label: String,
    pub field: Field,
    pub length: usize,
    pub dimension: usize,
    pub sweep_radius: usize,
    pub syndrome_radius: usize,
    pub sweep_equitable: bool,
    pub syndrome_completely_regular: bool,
    /// Cosets per distance times `q^k` equals vertices per distance.
    pub class_sizes_match: bool,
    pub agrees: bool,
}

/// Compares the syndrome-based analysis with a full sweep.
pub fn check_code(label: &str, code: &LinearCode, limit: u64) -> Result<CodeAgreement> {
    let sweep = hamming_sweep(code, limit)?;
    let table = CosetTable::new(code)?;
    let regular = table.regularity().completely_regular;
    let per_coset = code.size() as u64;
    let scaled: Vec<u64> = table.class_sizes().iter().map(|c| c * per_coset).collect();
    let class_sizes_match = scaled == sweep.distance_counts;
    Ok(CodeAgreement {
        label: label.to_string(),
        field: code.field(),
        length: code.length(),
        dimension: code.dimension(),
        sweep_radius: sweep.covering_radius,
        syndrome_radius: table.covering_radius(),
        sweep_equitable: sweep.equitable,
        syndrome_completely_regular: regular,
        class_sizes_match,
        agrees: sweep.covering_radius == table.covering_radius()
            && sweep.equitable == regular
            && class_sizes_match,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designs::families;
    use crate::groupoid::build_groupoid;

    #[test]
    fn closure_of_a_dihedral_group() {
        let r = Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap();
        let s = Permutation::from_cycles(5, &[&[1, 4], &[2, 3]]).unwrap();
        assert_eq!(closure(5, &[r.clone(), s.clone()], 100).unwrap().len(), 10);
        let g = PermutationGroup::from_generators(5, &[r, s]).unwrap();
        assert!(check_group("D5", &g, 100).unwrap().agrees);
        assert!(closure(8, &[Permutation::from_cycles(8, &[&[0, 1, 2, 3, 4, 5, 6, 7]]).unwrap(), Permutation::transposition(8, 0, 1)], 1000).is_err());
    }

    #[test]
    fn walks_of_small_designs() {
        for h in [families::boolean_system(3).unwrap(), families::pairs_hypergraph(4).unwrap()] {
            let g = build_groupoid(&h, 0).unwrap();
            let a = check_groupoid(&g, WALK_LIMIT).unwrap();
            assert!(a.agrees, "{a:?}");
        }
    }

    #[test]
    fn sweep_matches_cosets_on_the_plane_code() {
        let code = LinearCode::from_design(&families::pg23(), Field::F3).unwrap();
        let a = check_code("pg23", &code, 2_000_000).unwrap();
        assert_eq!(a.sweep_radius, 3);
        assert!(!a.sweep_equitable);
        assert!(a.agrees);
        assert!(hamming_sweep(&code, SWEEP_LIMIT).is_err());
    }

    #[test]
    fn repetition_code_sweep() {
        let code = LinearCode::from_rows(Field::F2, 5, &[vec![1; 5]]).unwrap();
        let s = hamming_sweep(&code, SWEEP_LIMIT).unwrap();
        assert_eq!(s.distance_counts, vec![2, 10, 20]);
        assert!(s.equitable);
    }
}
