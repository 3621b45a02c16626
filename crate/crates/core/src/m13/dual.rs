//! The dualized game: the hole is a flag, and each step moves a point along a
//! line and a line about a point at once.

use serde::Serialize;

use crate::designs::{families, Hypergraph};
use crate::error::{Error, Result};
use crate::groupoid::{DesignMoves, Groupoid, GroupoidReport, MoveSystem};
use crate::permgroup::{order_string, BigOrder, Permutation, PermutationGroup};

/// An incident point-line pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Flag {
    pub point: usize,
    pub line: usize,
}

/// The dual structure: one block per point, listing the lines through it.
pub fn dual_hypergraph(h: &Hypergraph) -> Result<Hypergraph> {
    let blocks = (0..h.n())
        .map(|x| {
            let through: Vec<u32> = h
                .blocks()
                .iter()
                .enumerate()
                .filter(|(_, b)| b.contains(&(x as u32)))
                .map(|(i, _)| i as u32)
                .collect();
            <[u32; 4]>::try_from(through.as_slice())
                .map_err(|_| Error::InvalidDesign(format!("point {x} is not on exactly 4 lines")))
        })
        .collect::<Result<Vec<_>>>()?;
    Hypergraph::new(h.blocks().len(), blocks, format!("dual:{}", h.label()))
}

/// Flag walks on a symmetric 4-design; points are symbols `0..n`, lines `n..2n`.
#[derive(Clone, Debug)]
pub struct DualMoves {
    plane: Hypergraph,
    points: DesignMoves,
    lines: DesignMoves,
    flags: Vec<Flag>,
    index: Vec<Option<usize>>,
}

impl DualMoves {
    pub fn new(h: &Hypergraph) -> Result<Self> {
        if h.blocks().len() != h.n() || h.lambda() != Some(1) {
            return Err(Error::InvalidDesign(
                "the dual game needs a projective plane".into(),
            ));
        }
        let dual = dual_hypergraph(h)?;
        let n = h.n();
        let mut flags = Vec::new();
        let mut index = vec![None; n * n];
        for point in 0..n {
            for (line, b) in h.blocks().iter().enumerate() {
                if b.contains(&(point as u32)) {
                    index[point * n + line] = Some(flags.len());
                    flags.push(Flag { point, line });
                }
            }
        }
        Ok(DualMoves {
            plane: h.clone(),
            points: DesignMoves::new(h)?,
            lines: DesignMoves::new(&dual)?,
            flags,
            index,
        })
    }

    pub fn plane() -> Self {
        DualMoves::new(&families::pg23()).expect("PG(2,3) is a projective plane")
    }

    pub fn flags(&self) -> &[Flag] {
        &self.flags
    }

    pub fn flag_index(&self, point: usize, line: usize) -> Option<usize> {
        let n = self.plane.n();
        (point < n && line < n).then(|| self.index[point * n + line]).flatten()
    }

    fn incident(&self, point: usize, line: usize) -> bool {
        self.plane.blocks()[line].contains(&(point as u32))
    }
}

impl MoveSystem for DualMoves {
    fn positions(&self) -> usize {
        self.flags.len()
    }

    fn degree(&self) -> usize {
        2 * self.plane.n()
    }

    /// Flags `(p', q')` with `p'` on the current line.
    fn targets(&self, from: usize) -> Vec<usize> {
        let f = self.flags[from];
        (0..self.flags.len())
            .filter(|&i| i != from && self.incident(self.flags[i].point, f.line))
            .collect()
    }

    /// `[p, p']` on the points times `[q, q']` on the lines.
    fn step(&self, from: usize, to: usize) -> Option<Permutation> {
        let (f, t) = (self.flags[from], self.flags[to]);
        if from == to || !self.incident(t.point, f.line) {
            return None;
        }
        let n = self.plane.n();
        let p = self.points.elementary(f.point, t.point).ok()?;
        let q = self.lines.elementary(f.line, t.line).ok()?;
        let images: Vec<u32> = p
            .images()
            .iter()
            .copied()
            .chain(q.images().iter().map(|&x| x + n as u32))
            .collect();
        Permutation::from_images(images).ok()
    }

    fn locate(&self, home: usize, g: &Permutation) -> Option<usize> {
        let n = self.plane.n();
        let f = self.flags[home];
        let line = g.image(n + f.line).checked_sub(n)?;
        self.flag_index(g.image(f.point), line)
    }

    fn hole_symbols(&self, home: usize) -> Vec<usize> {
        let f = self.flags[home];
        vec![f.point, self.plane.n() + f.line]
    }

    fn label(&self) -> String {
        format!("dual:{}", self.plane.label())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DualGameReport {
    pub hole: Flag,
    pub groupoid: GroupoidReport,
    /// Orbits on the 24 non-hole symbols; lines appear as `n + index`.
    pub orbits: Vec<Vec<usize>>,
    /// Every orbit lies inside the points or inside the lines.
    pub refines_point_line_split: bool,
    #[serde(serialize_with = "order_string::serialize")]
    pub point_restriction_order: BigOrder,
    /// Restricting to the points loses nothing.
    pub point_restriction_faithful: bool,
}

/// Builds the dual game on PG(2,3) with hole flag number `home`.
pub fn dual_groupoid(home: usize) -> Result<DualGameReport> {
    let moves = DualMoves::plane();
    if home >= moves.positions() {
        return Err(Error::InvalidArgument(format!("flag {home} out of range")));
    }
    let n = moves.plane.n();
    let hole = moves.flags[home];
    let g = Groupoid::build(moves, home)?;
    let pi = g.hole_stabilizer();
    let domain = g.domain();
    let orbits = pi.orbits(&domain)?;
    let refines_point_line_split = orbits
        .iter()
        .all(|o| o.iter().all(|&x| x < n) || o.iter().all(|&x| x >= n));

    let points: Vec<usize> = (0..n).collect();
    let restricted = pi
        .generators()
        .iter()
        .map(|s| s.restrict(&points))
        .collect::<Result<Vec<_>>>()?;
    let restriction = PermutationGroup::from_generators(n, &restricted)?;
    let point_restriction_order = restriction.order();

    Ok(DualGameReport {
        hole,
        point_restriction_faithful: point_restriction_order == pi.order(),
        point_restriction_order,
        refines_point_line_split,
        orbits,
        groupoid: g.classify()?,
    })
}
