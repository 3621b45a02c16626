//! Universal donors and recipients among ordered 6-tuples of points of PG(2,3).

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::Serialize;

use crate::designs::Hypergraph;
use crate::groupoid::ConwayGroupoid;
use crate::permgroup::Permutation;

const POINTS: usize = 13;
const LEN: usize = 6;

/// Number of keys `13⁶`.
pub const KEY_SPACE: usize = 4_826_809;

/// Ordered 6-tuples of distinct points: `13·12·11·10·9·8`.
pub const TUPLE_COUNT: usize = 1_235_520;

/// Six distinct points, keyed in base 13 with the first entry most significant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SixTuple(pub [u8; LEN]);

impl SixTuple {
    pub fn new(entries: [u8; LEN]) -> Option<Self> {
        let distinct = (0..LEN).all(|i| (i + 1..LEN).all(|j| entries[i] != entries[j]));
        let in_range = entries.iter().all(|&x| (x as usize) < POINTS);
        (distinct && in_range).then_some(SixTuple(entries))
    }

    pub fn key(&self) -> usize {
        self.0.iter().fold(0, |k, &x| k * POINTS + x as usize)
    }

    pub fn from_key(mut key: usize) -> Self {
        let mut e = [0u8; LEN];
        for slot in e.iter_mut().rev() {
            *slot = (key % POINTS) as u8;
            key /= POINTS;
        }
        SixTuple(e)
    }

    pub fn is_distinct(&self) -> bool {
        SixTuple::new(self.0).is_some()
    }

    pub fn apply(&self, g: &Permutation) -> SixTuple {
        SixTuple(self.0.map(|x| g.image(x as usize) as u8))
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.iter().any(|&e| e as usize == x)
    }

    /// Whether all four points of some line occur among the entries.
    pub fn contains_line(&self, h: &Hypergraph) -> bool {
        h.blocks()
            .iter()
            .any(|b| b.iter().all(|&p| self.contains(p as usize)))
    }
}

/// Every ordered 6-tuple of distinct points, in key order.
pub fn all_tuples() -> impl Iterator<Item = SixTuple> {
    (0..KEY_SPACE)
        .map(SixTuple::from_key)
        .filter(SixTuple::is_distinct)
}

/// The orbit of `p` under the hole stabilizer, by breadth-first search on its strong generators.
pub fn hole_stabilizer_orbit(g: &ConwayGroupoid, p: SixTuple) -> Vec<SixTuple> {
    let gens = g.hole_stabilizer().strong_generators();
    let mut seen = FixedBitSet::with_capacity(KEY_SPACE);
    seen.insert(p.key());
    let mut orbit = vec![p];
    let mut head = 0;
    while head < orbit.len() {
        let t = orbit[head];
        head += 1;
        for s in &gens {
            let u = t.apply(s);
            if !seen.put(u.key()) {
                orbit.push(u);
            }
        }
    }
    orbit
}

/// `{p^g : g ∈ L∞}` as a bitset over keys, using `L∞ = ⋃_a π∞·t_a`.
pub fn donor_image_set(g: &ConwayGroupoid, p: SixTuple) -> FixedBitSet {
    let mut image = FixedBitSet::with_capacity(KEY_SPACE);
    let orbit = hole_stabilizer_orbit(g, p);
    for t_a in g.coset_reps() {
        for q in &orbit {
            image.insert(q.apply(t_a).key());
        }
    }
    image
}

pub fn is_universal_donor(g: &ConwayGroupoid, p: SixTuple) -> bool {
    donor_image_set(g, p).count_ones(..) == TUPLE_COUNT
}

/// Representatives of the hole stabilizer's orbits on all 6-tuples, with orbit sizes.
pub fn orbit_representatives(g: &ConwayGroupoid) -> Vec<(SixTuple, usize)> {
    let mut done = FixedBitSet::with_capacity(KEY_SPACE);
    let mut reps = Vec::new();
    for t in all_tuples() {
        if done.contains(t.key()) {
            continue;
        }
        let orbit = hole_stabilizer_orbit(g, t);
        for q in &orbit {
            done.insert(q.key());
        }
        reps.push((t, orbit.len()));
    }
    reps
}

/// One hole-stabilizer orbit of 6-tuples and its donor verdict.
#[derive(Clone, Debug, Serialize)]
pub struct OrbitSummary {
    pub representative: SixTuple,
    pub orbit_size: usize,
    pub contains_hole: bool,
    pub image_size: usize,
    pub universal_donor: bool,
}

/// Result of the exhaustive donor/recipient sweep.
#[derive(Clone, Debug, Serialize)]
pub struct DonorRecipientReport {
    pub hole: usize,
    pub tuples: usize,
    pub orbits: Vec<OrbitSummary>,
    /// Every orbit is a donor orbit exactly when it contains the hole.
    pub donors_match_hole: bool,
    pub universal_recipients: usize,
    pub tuples_containing_a_line: usize,
    /// Universal recipients are exactly the tuples containing a line.
    pub recipients_match_lines: bool,
    pub holds: bool,
}

/// Sweeps every 6-tuple: donors are decided per orbit, recipients by
/// intersecting the donor image sets of all orbit representatives.
///
/// Donor image sets are constant on hole-stabilizer orbits because
/// `h·L∞ = L∞` for `h ∈ π∞`, so the representatives suffice.
pub fn verify_donors_and_recipients(g: &ConwayGroupoid, h: &Hypergraph) -> DonorRecipientReport {
    let hole = g.home();
    let reps = orbit_representatives(g);
    let images: Vec<FixedBitSet> = reps
        .par_iter()
        .map(|(p, _)| donor_image_set(g, *p))
        .collect();

    let orbits: Vec<OrbitSummary> = reps
        .iter()
        .zip(&images)
        .map(|((p, size), img)| {
            let image_size = img.count_ones(..);
            OrbitSummary {
                representative: *p,
                orbit_size: *size,
                contains_hole: p.contains(hole),
                image_size,
                universal_donor: image_size == TUPLE_COUNT,
            }
        })
        .collect();
    let donors_match_hole = orbits.iter().all(|o| o.universal_donor == o.contains_hole);

    let mut recipients = images[0].clone();
    for img in &images[1..] {
        recipients.intersect_with(img);
    }
    let (agree, recipient_count, line_count) = all_tuples()
        .par_bridge()
        .map(|t| {
            let r = recipients.contains(t.key());
            let l = t.contains_line(h);
            ((r == l) as usize, r as usize, l as usize)
        })
        .reduce(|| (0, 0, 0), |a, b| (a.0 + b.0, a.1 + b.1, a.2 + b.2));
    let tuples = orbits.iter().map(|o| o.orbit_size).sum();
    let recipients_match_lines = agree == TUPLE_COUNT;

    DonorRecipientReport {
        hole,
        tuples,
        orbits,
        donors_match_hole,
        universal_recipients: recipient_count,
        tuples_containing_a_line: line_count,
        recipients_match_lines,
        holds: donors_match_hole && recipients_match_lines && tuples == TUPLE_COUNT,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designs::families;
    use crate::groupoid::build_groupoid;

    #[test]
    fn keys_round_trip() {
        let t = SixTuple::new([12, 0, 3, 4, 7, 1]).unwrap();
        assert_eq!(SixTuple::from_key(t.key()), t);
        assert!(SixTuple::new([1, 1, 2, 3, 4, 5]).is_none());
        assert_eq!(all_tuples().count(), TUPLE_COUNT);
    }

    #[test]
    fn tuples_through_the_hole_are_donors() {
        let g = build_groupoid(&families::pg23(), 0).unwrap();
        let p = SixTuple::new([0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(donor_image_set(&g, p).count_ones(..), TUPLE_COUNT);
        let q = SixTuple::new([1, 2, 3, 4, 5, 6]).unwrap();
        assert!(!is_universal_donor(&g, q));
    }

    #[test]
    fn orbit_structure_on_tuples() {
        let g = build_groupoid(&families::pg23(), 0).unwrap();
        let reps = orbit_representatives(&g);
        // Six orbits through the hole (one per slot) and seven regular orbits avoiding it.
        assert_eq!(reps.len(), 13);
        assert!(reps.iter().all(|(_, s)| *s == 95040));
    }
}
