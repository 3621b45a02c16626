use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::permgroup::{order_string, BigOrder, Parity, Permutation, PermutationGroup};

use super::build::Groupoid;
use super::moves::MoveSystem;

/// Where a hole stabilizer sits in the trivial → intransitive → imprimitive →
/// primitive → Alt/Sym progression.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    Trivial,
    Intransitive,
    TransitiveImprimitive,
    Primitive,
    Alternating,
    Symmetric,
}

impl Classification {
    pub fn as_str(&self) -> &'static str {
        match self {
            Classification::Trivial => "trivial",
            Classification::Intransitive => "intransitive",
            Classification::TransitiveImprimitive => "transitive-imprimitive",
            Classification::Primitive => "primitive",
            Classification::Alternating => "alternating",
            Classification::Symmetric => "symmetric",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockSummary {
    pub num_blocks: usize,
    pub block_size: usize,
    pub blocks: Vec<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ParityClass {
    Even,
    Mixed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParityProfile {
    pub hole_stabilizer: ParityClass,
    pub groupoid: ParityClass,
}

/// Everything the pipeline reports about one groupoid.
#[derive(Clone, Debug, Serialize)]
pub struct GroupoidReport {
    pub label: String,
    pub positions: usize,
    pub degree: usize,
    pub hole: usize,
    #[serde(serialize_with = "order_string::serialize")]
    pub hole_stabilizer_order: BigOrder,
    #[serde(serialize_with = "order_string::serialize")]
    pub groupoid_size: BigOrder,
    pub classification: Classification,
    pub orbit_sizes: Vec<usize>,
    pub transitivity_degree: usize,
    /// Order equals `m(m-1)⋯(m-k+1)` for the transitivity degree `k`.
    pub sharply_transitive: bool,
    pub block_system: Option<BlockSummary>,
    /// Orbit sizes of a point stabilizer, when the hole stabilizer is transitive.
    pub subdegrees: Option<Vec<usize>>,
    pub is_group: bool,
    /// Primitivity of `L∞` on all symbols, when it is a group.
    pub groupoid_primitive: Option<bool>,
    /// A block system of `L∞` on all symbols, when it is a transitive imprimitive group.
    pub groupoid_block_system: Option<BlockSummary>,
    pub is_3_transposition: bool,
    pub parity_profile: ParityProfile,
    pub base: Vec<usize>,
}

/// Classifies `G` acting on the invariant set `domain`.
pub fn classify_group(g: &PermutationGroup, domain: &[usize]) -> Result<(Classification, Option<BlockSummary>)> {
    if domain.is_empty() || g.is_trivial() {
        return Ok((Classification::Trivial, None));
    }
    if !g.is_transitive(domain)? {
        return Ok((Classification::Intransitive, None));
    }
    if let Some(sys) = g.find_block_system(domain)? {
        let summary = BlockSummary {
            num_blocks: sys.num_blocks,
            block_size: sys.block_size,
            blocks: sys.blocks(),
        };
        return Ok((Classification::TransitiveImprimitive, Some(summary)));
    }
    if g.contains_symmetric(domain)? {
        Ok((Classification::Symmetric, None))
    } else if g.contains_alternating(domain)? {
        Ok((Classification::Alternating, None))
    } else {
        Ok((Classification::Primitive, None))
    }
}

fn parity_class<'a>(perms: impl IntoIterator<Item = &'a Permutation>) -> ParityClass {
    if perms.into_iter().all(|p| p.parity() == Parity::Even) {
        ParityClass::Even
    } else {
        ParityClass::Mixed
    }
}

/// Distinct non-identity single-step permutations of a move system.
pub fn elementary_moves<M: MoveSystem>(system: &M) -> Vec<Permutation> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for a in 0..system.positions() {
        for b in system.targets(a) {
            if let Some(p) = system.step(a, b) {
                if !p.is_identity() && seen.insert(p.clone()) {
                    out.push(p);
                }
            }
        }
    }
    out
}

/// Whether every product of two elementary moves has order at most 3.
pub fn is_three_transposition(moves: &[Permutation]) -> bool {
    moves.par_iter().enumerate().all(|(i, e)| {
        moves[i + 1..].iter().all(|f| e.then(f).order() <= 3)
    })
}

/// Product `m(m-1)⋯(m-k+1)`.
pub fn falling_factorial(m: usize, k: usize) -> BigOrder {
    (0..k).fold(BigOrder::from(1u32), |acc, i| acc * BigOrder::from(m - i))
}

impl<M: MoveSystem> Groupoid<M> {
    pub fn classify(&self) -> Result<GroupoidReport> {
        let pi = self.hole_stabilizer();
        let domain = self.domain();
        let (classification, block_system) = classify_group(pi, &domain)?;
        let orbit_sizes = pi.orbits(&domain)?.iter().map(Vec::len).collect();
        let transitivity_degree = pi.transitivity_degree(&domain)?;
        let order = pi.order();
        let sharply_transitive = transitivity_degree > 0
            && order == falling_factorial(domain.len(), transitivity_degree);
        let subdegrees = match classification {
            Classification::Trivial | Classification::Intransitive => None,
            _ => Some(pi.subdegrees(&domain, domain[0])?),
        };
        let group = self.as_group()?;
        let (groupoid_primitive, groupoid_block_system) = match &group {
            Some(g) => {
                let all: Vec<usize> = (0..self.degree()).collect();
                let (class, blocks) = classify_group(g, &all)?;
                let primitive = matches!(
                    class,
                    Classification::Primitive | Classification::Alternating | Classification::Symmetric
                );
                (Some(primitive), blocks)
            }
            None => (None, None),
        };
        let hole_parity = parity_class(pi.generators());
        let groupoid_parity = match hole_parity {
            ParityClass::Even => parity_class(self.coset_reps()),
            ParityClass::Mixed => ParityClass::Mixed,
        };
        Ok(GroupoidReport {
            label: self.system().label(),
            positions: self.positions(),
            degree: self.degree(),
            hole: self.home(),
            hole_stabilizer_order: order,
            groupoid_size: self.size(),
            classification,
            orbit_sizes,
            transitivity_degree,
            sharply_transitive,
            block_system,
            subdegrees,
            is_group: group.is_some(),
            groupoid_primitive,
            groupoid_block_system,
            is_3_transposition: is_three_transposition(&elementary_moves(self.system())),
            parity_profile: ParityProfile {
                hole_stabilizer: hole_parity,
                groupoid: groupoid_parity,
            },
            base: pi.base(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designs::families;
    use crate::groupoid::build_groupoid;

    #[test]
    fn pg23_report() {
        let r = build_groupoid(&families::pg23(), 0).unwrap().classify().unwrap();
        assert_eq!(r.classification, Classification::Primitive);
        assert_eq!(r.transitivity_degree, 5);
        assert!(r.sharply_transitive);
        assert!(!r.is_group);
        assert_eq!(r.groupoid_primitive, None);
        assert!(!r.is_3_transposition);
        assert_eq!(r.orbit_sizes, vec![12]);
    }

    #[test]
    fn quadratic_2_0_has_the_product_action_fingerprint() {
        let r = build_groupoid(&families::quadratic_system(2, 0).unwrap(), 0)
            .unwrap()
            .classify()
            .unwrap();
        assert_eq!(r.hole_stabilizer_order, BigOrder::from(72u32));
        // Sym(3)≀Sym(2) on a 3×3 grid: rank 3, the non-trivial suborbits
        // being "same row or column" and "neither".
        assert_eq!(r.classification, Classification::Primitive);
        assert_eq!(r.subdegrees, Some(vec![1, 4, 4]));
        assert!(r.is_group);
        assert_eq!(r.groupoid_size, BigOrder::from(720u32));
        assert!(r.is_3_transposition);
    }

    #[test]
    fn boolean_report_is_trivial() {
        let r = build_groupoid(&families::boolean_system(4).unwrap(), 0)
            .unwrap()
            .classify()
            .unwrap();
        assert_eq!(r.classification, Classification::Trivial);
        assert!(r.is_group);
        // The regular translation group preserves the cosets of any subspace.
        assert_eq!(r.groupoid_primitive, Some(false));
    }

    #[test]
    fn report_serializes_orders_as_strings() {
        let r = build_groupoid(&families::pg23(), 0).unwrap().classify().unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["hole_stabilizer_order"], "95040");
        assert_eq!(v["groupoid_size"], "1235520");
        assert_eq!(v["classification"], "primitive");
    }

    #[test]
    fn falling_factorials() {
        assert_eq!(falling_factorial(12, 5), BigOrder::from(95040u32));
        assert_eq!(falling_factorial(7, 0), BigOrder::from(1u32));
    }
}
