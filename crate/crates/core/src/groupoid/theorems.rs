use serde::Serialize;

use crate::designs::Hypergraph;
use crate::error::{Error, Result};
use crate::permgroup::{order_string, BigOrder};

use super::build::{build_groupoid, ConwayGroupoid};
use super::classify::{elementary_moves, is_three_transposition, Classification};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable,
}

/// One implication `hypothesis ⇒ conclusion`, evaluated on a design.
#[derive(Clone, Debug, Serialize)]
pub struct ImplicationCheck {
    pub name: &'static str,
    pub statement: &'static str,
    pub hypothesis: bool,
    pub conclusion: bool,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl ImplicationCheck {
    fn new(name: &'static str, statement: &'static str, hypothesis: bool, conclusion: bool) -> Self {
        let status = match (hypothesis, conclusion) {
            (false, _) => CheckStatus::NotApplicable,
            (true, true) => CheckStatus::Pass,
            (true, false) => CheckStatus::Fail,
        };
        ImplicationCheck {
            name,
            statement,
            hypothesis,
            conclusion,
            status,
            detail: None,
        }
    }

    fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

/// Which outcome of the collinear-triangle trichotomy a design lands in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TriangleOutcome {
    Boolean,
    ProjectivePlane,
    ContainsAlternating,
    None,
}

/// The structural facts about a design that the checks consume.
#[derive(Clone, Debug, Serialize)]
pub struct TheoremFacts {
    pub n: usize,
    pub lambda: usize,
    #[serde(serialize_with = "order_string::serialize")]
    pub hole_stabilizer_order: BigOrder,
    pub classification: Classification,
    pub is_group: bool,
    pub groupoid_primitive: Option<bool>,
    pub regular_two_graph: bool,
    pub triangle_property: bool,
    pub collinear_triangles_trivial: bool,
    pub triangle_outcome: TriangleOutcome,
    pub is_3_transposition: bool,
    /// Largest support of a closed triangle `[∞,a,b,∞]`.
    pub max_triangle_support: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub label: String,
    pub facts: TheoremFacts,
    pub checks: Vec<ImplicationCheck>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }
}

/// Whether every 3-subset lies in exactly one block.
fn is_steiner_quadruple_system(h: &Hypergraph) -> bool {
    let n = h.n();
    let mut count = vec![0u8; n * n * n];
    for b in h.blocks() {
        for skip in 0..4 {
            let t: Vec<usize> = (0..4).filter(|&i| i != skip).map(|i| b[i] as usize).collect();
            let idx = (t[0] * n + t[1]) * n + t[2];
            count[idx] = count[idx].saturating_add(1);
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if count[(a * n + b) * n + c] != 1 {
                    return false;
                }
            }
        }
    }
    true
}

/// Parameters of a Boolean quadruple system: `n = 2^m`, `λ = 2^{m-1} − 1`, a 3-(n,4,1) design.
fn has_boolean_fingerprint(h: &Hypergraph, lambda: usize) -> bool {
    let n = h.n();
    n >= 4 && n.is_power_of_two() && lambda == n / 2 - 1 && is_steiner_quadruple_system(h)
}

/// Orders `2^m`, `2^{2m}` or `2^{2m-1} ± 2^{m-1}` of the three regular-two-graph families.
fn has_two_graph_family_order(n: usize) -> bool {
    if n.is_power_of_two() {
        return true;
    }
    (2..=6).any(|m: u32| {
        let big = 1usize << (2 * m - 1);
        let small = 1usize << (m - 1);
        n == big + small || n == big - small
    })
}

/// Evaluates the structural theorems about supersimple designs on `h` at hole `home`.
pub fn verify_theorems(h: &Hypergraph, home: usize) -> Result<TheoremReport> {
    let profile = h.profile();
    let lambda = match (profile.is_supersimple, profile.lambda) {
        (true, Some(l)) => l,
        _ => return Err(Error::NotSupersimple(h.label().to_string())),
    };
    let g = build_groupoid(h, home)?;
    let report = g.classify()?;
    let n = h.n();
    let pi = g.hole_stabilizer();
    let domain = g.domain();
    let contains_alt = pi.contains_alternating(&domain)?;
    let moves = g.system();

    let mut triangles_trivial = true;
    let mut max_support = 0;
    for a in 0..n {
        for b in 0..n {
            if a == home || b == home || a == b || !moves.collinear(home, a) || !moves.collinear(a, b) || !moves.collinear(b, home) {
                continue;
            }
            let t = moves.sequence(&[home, a, b, home])?;
            max_support = max_support.max(t.support().len());
            let on_one_line = h.blocks().iter().any(|bl| {
                [home, a, b].iter().all(|&x| bl.contains(&(x as u32)))
            });
            if on_one_line && !t.is_identity() {
                triangles_trivial = false;
            }
        }
    }

    let is_boolean = has_boolean_fingerprint(h, lambda) && pi.is_trivial();
    let is_plane = n == 13 && lambda == 1 && pi.order() == BigOrder::from(95040u32);
    let outcome = if is_boolean {
        TriangleOutcome::Boolean
    } else if is_plane {
        TriangleOutcome::ProjectivePlane
    } else if contains_alt {
        TriangleOutcome::ContainsAlternating
    } else {
        TriangleOutcome::None
    };

    let l = lambda;
    let big = n > 2 * l + 2;
    let rtg = profile.is_regular_two_graph;
    let tri = profile.has_triangle_property;
    let transitive = !matches!(report.classification, Classification::Trivial | Classification::Intransitive)
        || (domain.len() <= 1);
    let primitive = matches!(
        report.classification,
        Classification::Primitive | Classification::Alternating | Classification::Symmetric
    );
    let three_t = is_three_transposition(&elementary_moves(moves));

    let checks = vec![
        ImplicationCheck::new(
            "alt-above-quadratic-bound",
            "n > 144λ² + 120λ + 26 ⇒ π∞ ⊇ Alt(Ω∖{∞})",
            n > 144 * l * l + 120 * l + 26,
            contains_alt,
        ),
        ImplicationCheck::new("nontrivial-above-2λ+2", "n > 2λ+2 ⇒ π∞ non-trivial", big, !pi.is_trivial()),
        ImplicationCheck::new("transitive-above-4λ+1", "n > 4λ+1 ⇒ π∞ transitive", n > 4 * l + 1, transitive),
        ImplicationCheck::new("primitive-above-9λ+1", "n > 9λ+1 ⇒ π∞ primitive", n > 9 * l + 1, primitive),
        ImplicationCheck::new(
            "alt-or-plane-above-9λ²-12λ+5",
            "n > 9λ² − 12λ + 5 and n > 2λ+2 ⇒ π∞ ⊇ Alt(Ω∖{∞}) or (PG(2,3), M12)",
            // The single block (n = 2λ+2 = 4) satisfies the quadratic bound but has trivial π∞.
            (n as i64) > 9 * (l as i64) * (l as i64) - 12 * (l as i64) + 5 && big,
            contains_alt || is_plane,
        ),
        ImplicationCheck::new(
            "collinear-triangle-trichotomy",
            "collinear triangles trivial ⇒ Boolean, PG(2,3) or ⊇ Alt",
            triangles_trivial,
            outcome != TriangleOutcome::None,
        )
        .with_detail(format!("{outcome:?}")),
        ImplicationCheck::new(
            "group-implies-primitive-groupoid",
            "n > 2λ+2 and L∞ a group ⇒ L∞ primitive",
            big && report.is_group,
            report.groupoid_primitive == Some(true),
        ),
        ImplicationCheck::new(
            "two-graph-implies-transitive",
            "n > 2λ+2 and regular two-graph ⇒ π∞ transitive",
            big && rtg,
            transitive,
        ),
        ImplicationCheck::new(
            "two-graph-group-implies-primitive",
            "n > 2λ+2, regular two-graph and L∞ a group ⇒ π∞ primitive",
            big && rtg && report.is_group,
            primitive,
        ),
        ImplicationCheck::new(
            "two-graph-triangles-imply-group",
            "n > 2λ+2, regular two-graph and (△) ⇒ L∞ a group",
            big && rtg && tri,
            report.is_group,
        ),
        ImplicationCheck::new(
            "3-transposition",
            "regular two-graph, (△) and L∞ a group ⇒ elementary moves are 3-transpositions",
            rtg && tri && report.is_group,
            three_t,
        ),
        ImplicationCheck::new(
            "two-graph-family-order",
            "regular two-graph and (△) ⇒ order of a Boolean, Symplectic or Quadratic system",
            rtg && tri,
            has_two_graph_family_order(n),
        ),
        ImplicationCheck::new(
            "triangle-support-bound",
            "supersimple ⇒ |supp [∞,a,b,∞]| ≤ 6λ+2",
            true,
            max_support <= 6 * l + 2,
        ),
        ImplicationCheck::new("supersimple-bound", "supersimple ⇒ n ≥ 2λ+2", true, n >= 2 * l + 2),
    ];
    Ok(TheoremReport {
        label: h.label().to_string(),
        facts: TheoremFacts {
            n,
            lambda,
            hole_stabilizer_order: report.hole_stabilizer_order,
            classification: report.classification,
            is_group: report.is_group,
            groupoid_primitive: report.groupoid_primitive,
            regular_two_graph: rtg,
            triangle_property: tri,
            collinear_triangles_trivial: triangles_trivial,
            triangle_outcome: outcome,
            is_3_transposition: three_t,
            max_triangle_support: max_support,
        },
        checks,
    })
}

/// Outcome of comparing hole stabilizers at every base point.
#[derive(Clone, Debug, Serialize)]
pub struct BaseIndependence {
    pub label: String,
    pub bases_checked: usize,
    #[serde(serialize_with = "order_string::serialize")]
    pub order: BigOrder,
    pub holds: bool,
}

/// Checks `g⁻¹·π_{∞₁}·g = π_{∞₂}` for every `∞₂`, with `g` the tree walk `∞₁ → ∞₂`.
///
/// Containment is tested on generators; equal orders then give equality.
pub fn verify_base_independence(h: &Hypergraph) -> Result<BaseIndependence> {
    let first = build_groupoid(h, 0)?;
    let order = first.hole_stabilizer_order();
    let gens = first.hole_stabilizer().generators().to_vec();
    let mut holds = true;
    for other in 1..h.n() {
        let second: ConwayGroupoid = build_groupoid(h, other)?;
        let g = first.coset_rep(other);
        holds &= second.hole_stabilizer_order() == order;
        for p in &gens {
            holds &= second.hole_stabilizer().contains(&p.conjugate_by(g))?;
        }
    }
    Ok(BaseIndependence {
        label: h.label().to_string(),
        bases_checked: h.n(),
        order,
        holds,
    })
}

/// The Boolean fingerprint, exposed for the catalog sweep.
pub fn is_boolean_like(h: &Hypergraph) -> bool {
    h.lambda().is_some_and(|l| has_boolean_fingerprint(h, l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designs::families;

    fn assert_all_pass(r: &TheoremReport) {
        for c in &r.checks {
            assert_ne!(c.status, CheckStatus::Fail, "{}: {:?}", r.label, c);
        }
    }

    #[test]
    fn pg23_lands_in_the_plane_outcome() {
        let r = verify_theorems(&families::pg23(), 0).unwrap();
        assert_all_pass(&r);
        assert!(r.facts.collinear_triangles_trivial);
        assert_eq!(r.facts.triangle_outcome, TriangleOutcome::ProjectivePlane);
    }

    #[test]
    fn boolean3_lands_in_the_boolean_outcome() {
        let r = verify_theorems(&families::boolean_system(3).unwrap(), 0).unwrap();
        assert_all_pass(&r);
        assert!(r.facts.collinear_triangles_trivial);
        assert_eq!(r.facts.triangle_outcome, TriangleOutcome::Boolean);
    }

    #[test]
    fn non_designs_are_rejected() {
        assert!(verify_theorems(&families::pairs_hypergraph(4).unwrap(), 0).is_err());
    }

    #[test]
    fn base_independence_on_small_cases() {
        let r = verify_base_independence(&families::pg23()).unwrap();
        assert!(r.holds);
        assert_eq!(r.bases_checked, 13);
        assert!(verify_base_independence(&families::pairs_hypergraph(4).unwrap()).unwrap().holds);
    }
}
