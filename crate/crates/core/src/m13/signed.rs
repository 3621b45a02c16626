//! The signed game: counters carry a sign, and the pair opposite the moving
//! counter swaps with negation.

use serde::Serialize;

use crate::designs::{families, Hypergraph};
use crate::error::{Error, Result};
use crate::groupoid::{build_groupoid, DesignMoves, Groupoid, GroupoidReport, MoveSystem};
use crate::permgroup::{order_string, BigOrder, Permutation, PermutationGroup};

/// Symbol for `x⁺`.
pub fn plus(x: usize) -> usize {
    2 * x
}

/// Symbol for `x⁻`.
pub fn minus(x: usize) -> usize {
    2 * x + 1
}

/// A permutation of the `2n` symbols `x^±` that commutes with negation `ν`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPermutation(Permutation);

impl SignedPermutation {
    pub fn new(p: Permutation) -> Result<Self> {
        if p.degree() % 2 != 0 {
            return Err(Error::InvalidPermutation("odd degree for a signed permutation".into()));
        }
        let nu = negation(p.degree() / 2);
        if p.then(&nu) != nu.then(&p) {
            return Err(Error::InvalidPermutation(format!(
                "{} does not commute with negation",
                p.cycle_string()
            )));
        }
        Ok(SignedPermutation(p))
    }

    pub fn as_permutation(&self) -> &Permutation {
        &self.0
    }

    pub fn into_permutation(self) -> Permutation {
        self.0
    }

    /// The induced permutation of the `n` unsigned points.
    pub fn unsigned(&self) -> Permutation {
        let n = self.0.degree() / 2;
        Permutation::from_images((0..n).map(|x| (self.0.image(plus(x)) / 2) as u32))
            .expect("commuting with negation makes the quotient a bijection")
    }
}

/// `ν = ∏ (x⁺, x⁻)` over all `n` points.
pub fn negation(n: usize) -> Permutation {
    negation_off(n, &[])
}

/// `ν` restricted to the points outside `skip`.
pub fn negation_off(n: usize, skip: &[usize]) -> Permutation {
    let mut images: Vec<u32> = (0..2 * n as u32).collect();
    for x in (0..n).filter(|x| !skip.contains(x)) {
        images.swap(plus(x), minus(x));
    }
    Permutation::from_images(images).expect("product of disjoint transpositions")
}

/// Signed moves on a hypergraph whose lines meet every collinear pair once.
#[derive(Clone, Debug)]
pub struct SignedMoves {
    plain: DesignMoves,
}

impl SignedMoves {
    pub fn new(h: &Hypergraph) -> Result<Self> {
        if h.lambda() != Some(1) {
            return Err(Error::InvalidDesign(
                "the signed game needs every pair on exactly one line".into(),
            ));
        }
        Ok(SignedMoves {
            plain: DesignMoves::new(h)?,
        })
    }

    pub fn plane() -> Self {
        SignedMoves::new(&families::pg23()).expect("PG(2,3) is a Steiner system")
    }

    /// `a⁺↔b⁺, a⁻↔b⁻, c⁺↔d⁻, c⁻↔d⁺` for the line `{a,b,c,d}`.
    pub fn signed_move(&self, a: usize, b: usize) -> Result<SignedPermutation> {
        let n = self.plain.positions();
        let unsigned = self.plain.elementary(a, b)?;
        let mut images: Vec<u32> = (0..2 * n as u32).collect();
        for x in unsigned.support() {
            let y = unsigned.image(x);
            if x == a || x == b {
                images[plus(x)] = plus(y) as u32;
                images[minus(x)] = minus(y) as u32;
            } else {
                images[plus(x)] = minus(y) as u32;
                images[minus(x)] = plus(y) as u32;
            }
        }
        SignedPermutation::new(Permutation::from_images(images)?)
    }
}

impl MoveSystem for SignedMoves {
    fn positions(&self) -> usize {
        self.plain.positions()
    }

    fn degree(&self) -> usize {
        2 * self.plain.positions()
    }

    fn targets(&self, from: usize) -> Vec<usize> {
        self.plain.targets(from)
    }

    fn step(&self, from: usize, to: usize) -> Option<Permutation> {
        self.signed_move(from, to).ok().map(SignedPermutation::into_permutation)
    }

    fn locate(&self, home: usize, g: &Permutation) -> Option<usize> {
        let img = g.image(plus(home));
        (img % 2 == 0).then_some(img / 2)
    }

    fn hole_symbols(&self, home: usize) -> Vec<usize> {
        vec![plus(home), minus(home)]
    }

    fn is_symmetric(&self) -> bool {
        true
    }

    fn label(&self) -> String {
        format!("signed:{}", self.plain.label())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SignedGameReport {
    pub groupoid: GroupoidReport,
    /// Negation on the 24 signed non-hole symbols lies in the hole stabilizer.
    pub negation_in_group: bool,
    /// Negation commutes with every generator of the hole stabilizer.
    pub negation_central: bool,
    #[serde(serialize_with = "order_string::serialize")]
    pub quotient_order: BigOrder,
    /// The unsigned images of the generators lie in the plain hole stabilizer.
    pub quotient_matches_plain: bool,
}

/// Builds the signed game on PG(2,3) with hole `home` and checks the double-cover fingerprint.
pub fn signed_groupoid(home: usize) -> Result<SignedGameReport> {
    let moves = SignedMoves::plane();
    let n = moves.positions();
    let g = Groupoid::build(moves, home)?;
    let pi = g.hole_stabilizer();
    let nu = negation_off(n, &[home]);
    let negation_in_group = pi.contains(&nu)?;
    let negation_central = pi
        .generators()
        .iter()
        .all(|s| s.then(&nu) == nu.then(s));

    let plain = build_groupoid(&families::pg23(), home)?;
    let mut quotient_gens = Vec::new();
    let mut quotient_matches_plain = true;
    for s in pi.generators() {
        let u = SignedPermutation::new(s.clone())?.unsigned();
        quotient_matches_plain &= plain.hole_stabilizer().contains(&u)?;
        quotient_gens.push(u);
    }
    let quotient = PermutationGroup::from_generators(n, &quotient_gens)?;
    quotient_matches_plain &= quotient.order() == plain.hole_stabilizer_order();

    Ok(SignedGameReport {
        groupoid: g.classify()?,
        negation_in_group,
        negation_central,
        quotient_order: quotient.order(),
        quotient_matches_plain,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signed_moves_are_involutions_commuting_with_negation() {
        let s = SignedMoves::plane();
        let m = s.signed_move(0, 1).unwrap();
        let p = m.as_permutation();
        assert!(p.then(p).is_identity());
        assert_eq!(p.image(plus(0)), plus(1));
        assert_eq!(m.unsigned(), *s.plain.elementary(0, 1).unwrap());
        // Two positive swaps and two negated swaps on the 26 symbols.
        assert_eq!(p.support().len(), 8);
    }

    #[test]
    fn non_commuting_permutations_are_rejected() {
        let t = Permutation::transposition(4, 0, 2);
        assert!(SignedPermutation::new(t).is_err());
    }

    #[test]
    fn double_cover_fingerprint() {
        let r = signed_groupoid(0).unwrap();
        assert_eq!(r.groupoid.hole_stabilizer_order, BigOrder::from(190_080u32));
        assert!(r.negation_in_group);
        assert!(r.negation_central);
        assert_eq!(r.quotient_order, BigOrder::from(95040u32));
        assert!(r.quotient_matches_plain);
    }
}
