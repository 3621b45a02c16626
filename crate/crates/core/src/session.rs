//! The moving-counter puzzle as a stateful session.
//!
//! A session remembers the walk of the hole, starting at its home point, and
//! the accumulated permutation of that walk. The accumulated permutation always
//! equals replaying the history move by move.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groupoid::{ConwayGroupoid, MoveSystem};
use crate::permgroup::Permutation;

/// A permutation in both wire forms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PermutationView {
    pub degree: usize,
    pub images: Vec<u32>,
    pub cycles: String,
}

impl From<&Permutation> for PermutationView {
    fn from(p: &Permutation) -> Self {
        PermutationView {
            degree: p.degree(),
            images: p.images().to_vec(),
            cycles: p.cycle_string(),
        }
    }
}

/// What a client sees after every request.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SessionState {
    pub id: String,
    pub design: String,
    pub n: usize,
    pub home: usize,
    pub hole: usize,
    pub history: Vec<usize>,
    /// Composed left to right along the walk.
    pub accumulated: PermutationView,
    pub at_home: bool,
    pub is_identity: bool,
    /// Only meaningful once the hole is back home; `None` elsewhere.
    pub in_hole_stabilizer: Option<bool>,
    /// Points the hole may move to next.
    pub legal_moves: Vec<usize>,
    /// Transpositions of the most recent move, if any.
    pub last_move: Option<Vec<[usize; 2]>>,
}

#[derive(Clone, Debug)]
pub struct PuzzleSession {
    id: String,
    groupoid: Arc<ConwayGroupoid>,
    history: Vec<usize>,
    accumulated: Permutation,
}

impl PuzzleSession {
    /// A fresh session with the hole at the groupoid's home point.
    pub fn new(id: impl Into<String>, groupoid: Arc<ConwayGroupoid>) -> Self {
        let home = groupoid.home();
        let degree = groupoid.degree();
        PuzzleSession {
            id: id.into(),
            groupoid,
            history: vec![home],
            accumulated: Permutation::identity(degree),
        }
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn hole(&self) -> usize {
        *self.history.last().expect("history starts at home")
    }

    pub fn history(&self) -> &[usize] {
        &self.history
    }

    pub fn accumulated(&self) -> &Permutation {
        &self.accumulated
    }

    fn elementary(&self, to: usize) -> Result<&Permutation> {
        let n = self.groupoid.positions();
        if to >= n {
            return Err(Error::InvalidArgument(format!("point {to} is not in 0..{n}")));
        }
        self.groupoid.system().elementary(self.hole(), to)
    }

    /// Moves the hole to `to`, if `to` is collinear with the hole.
    pub fn apply(&mut self, to: usize) -> Result<SessionState> {
        let m = self.elementary(to)?.clone();
        self.accumulated = self.accumulated.then(&m);
        self.history.push(to);
        Ok(self.state())
    }

    /// Takes back the last move; returns `false` when the hole is already at the start.
    pub fn undo(&mut self) -> bool {
        if self.history.len() == 1 {
            return false;
        }
        let to = self.history.pop().expect("non-empty");
        let from = self.hole();
        let m = self
            .groupoid
            .system()
            .elementary(from, to)
            .expect("a recorded move was legal")
            .clone();
        // Elementary moves are involutions, so multiplying again removes the move.
        self.accumulated = self.accumulated.then(&m);
        true
    }

    /// The state `apply(to)` would produce, leaving this session untouched.
    pub fn preview(&self, to: usize) -> Result<SessionState> {
        let mut copy = self.clone();
        copy.apply(to)
    }

    /// The walk's permutation recomputed from the history alone.
    pub fn replay(&self) -> Result<Permutation> {
        self.groupoid.system().sequence(&self.history)
    }

    pub fn state(&self) -> SessionState {
        let g = &self.groupoid;
        let hole = self.hole();
        let at_home = hole == g.home();
        let in_hole_stabilizer = at_home.then(|| {
            g.hole_stabilizer()
                .contains(&self.accumulated)
                .expect("degrees agree")
        });
        let legal_moves = g.system().targets(hole);
        let last_move = (self.history.len() > 1).then(|| {
            let from = self.history[self.history.len() - 2];
            g.system()
                .elementary(from, hole)
                .expect("a recorded move was legal")
                .cycles()
                .into_iter()
                .filter(|c| c.len() == 2)
                .map(|c| [c[0], c[1]])
                .collect()
        });
        SessionState {
            id: self.id.clone(),
            design: g.system().hypergraph().label().to_string(),
            n: g.positions(),
            home: g.home(),
            hole,
            history: self.history.clone(),
            accumulated: PermutationView::from(&self.accumulated),
            at_home,
            is_identity: self.accumulated.is_identity(),
            in_hole_stabilizer,
            legal_moves,
            last_move,
        }
    }
}
