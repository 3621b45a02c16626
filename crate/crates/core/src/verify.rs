//! The acceptance sweep: fifteen numbered criteria, each checked exactly.
//!
//! Every criterion records what it measured, the list of mismatches, any
//! checks skipped for budget reasons, and how long it took against its time
//! limit. A criterion passes when nothing mismatched, nothing required was
//! skipped, and it finished within its limit.

use std::fmt::Debug;
use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::{Map, Value};

use crate::catalog;
use crate::codes::{analyze, golay_chain, Field};
use crate::designs::families;
use crate::error::{Error, Result};
use crate::groupoid::{
    build_groupoid, falling_factorial, verify_base_independence, verify_theorems, CheckStatus,
    Classification, Groupoid, MoveSystem, TriangleOutcome,
};
use crate::m13::{dual_groupoid, signed_groupoid, verify_donors_and_recipients};
use crate::oracle;
use crate::permgroup::{BigOrder, PermutationGroup};
use crate::pliable::{self, GroupTable, PliableFunction};

pub const CRITERIA: u8 = 15;

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub measured: Value,
    pub failures: Vec<String>,
    /// Optional checks left out because they exceed an enumeration budget.
    pub budget_skipped: Vec<String>,
    /// A required check hit the budget, so the criterion could not be decided.
    pub budget_exceeded: bool,
    pub limit_secs: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CriterionResult {
    /// One line for the console.
    pub fn summary(&self) -> String {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        let mut line = format!(
            "criterion {:>2} {verdict}  {}  ({:.2}s of {}s)",
            self.id,
            self.title,
            self.elapsed.as_secs_f64(),
            self.limit_secs
        );
        for f in &self.failures {
            line.push_str(&format!("\n    mismatch: {f}"));
        }
        for s in &self.budget_skipped {
            line.push_str(&format!("\n    budget-skipped: {s}"));
        }
        line
    }
}

/// Accumulates measurements and mismatches for one criterion.
#[derive(Default)]
struct Check {
    measured: Map<String, Value>,
    failures: Vec<String>,
    skipped: Vec<String>,
}

impl Check {
    fn record(&mut self, key: &str, v: impl Serialize) {
        let v = serde_json::to_value(v).expect("measurements serialize");
        self.measured.insert(key.to_string(), v);
    }

    fn expect<T: Serialize + PartialEq + Debug>(&mut self, key: &str, actual: T, expected: T) {
        if actual != expected {
            self.failures
                .push(format!("{key}: got {actual:?}, expected {expected:?}"));
        }
        self.record(key, actual);
    }

    fn require(&mut self, key: &str, ok: bool) {
        self.expect(key, ok, true);
    }

    fn expect_order(&mut self, key: &str, actual: &BigOrder, expected: u128) {
        self.expect(key, actual.to_string(), expected.to_string());
    }
}

const TITLES: [&str; 15] = [
    "pg23 hole stabilizer is sharply 5-transitive of order 95040",
    "pg23 groupoid has 1235520 elements and is not a group",
    "donors contain the hole, recipients contain a line",
    "signed game: order 190080 with central negation",
    "dual game: order 95040, orbits split points from lines",
    "Boolean systems: trivial hole stabilizer, elementary abelian groupoid",
    "symplectic systems: orders, primitivity, groupoid is a group",
    "quadratic systems: orders and the wreath-product fingerprint",
    "structural theorems hold on every catalog design",
    "hole stabilizers do not depend on the base point",
    "ternary plane code, coset witness and the Golay chain",
    "binary symplectic and quadratic codes",
    "pliable functions: paley6, group tables, affine complement",
    "pair hypergraphs: wreath-product orders",
    "oracle agreement: closure, walks and Hamming sweeps",
];

const LIMITS: [u64; 15] = [5, 5, 600, 30, 60, 5, 300, 600, 900, 120, 120, 600, 60, 60, 900];

pub fn title(id: u8) -> &'static str {
    TITLES[(id - 1) as usize]
}

/// Runs criterion `id` (1 to 15).
pub fn run_criterion(id: u8) -> Result<CriterionResult> {
    if !(1..=CRITERIA).contains(&id) {
        return Err(Error::InvalidArgument(format!("criterion {id} is not in 1..={CRITERIA}")));
    }
    let start = Instant::now();
    let mut c = Check::default();
    let outcome = match id {
        1 => plane_hole_stabilizer(&mut c),
        2 => plane_groupoid(&mut c),
        3 => donors_recipients(&mut c),
        4 => signed_game(&mut c),
        5 => dual_game(&mut c),
        6 => boolean_systems(&mut c),
        7 => symplectic_systems(&mut c),
        8 => quadratic_systems(&mut c),
        9 => theorem_sweep(&mut c),
        10 => base_independence(&mut c),
        11 => plane_codes(&mut c),
        12 => binary_codes(&mut c),
        13 => pliable_functions(&mut c),
        14 => pair_hypergraphs(&mut c),
        _ => oracles(&mut c),
    };
    let mut budget_exceeded = false;
    if let Err(e) = outcome {
        budget_exceeded = matches!(e, Error::BudgetExceeded { .. });
        c.failures.push(format!("error: {e}"));
    }
    let elapsed = start.elapsed();
    let limit_secs = LIMITS[(id - 1) as usize];
    if elapsed > Duration::from_secs(limit_secs) {
        c.failures.push(format!(
            "took {:.1}s, limit {limit_secs}s",
            elapsed.as_secs_f64()
        ));
    }
    Ok(CriterionResult {
        id,
        title: title(id),
        passed: c.failures.is_empty(),
        measured: Value::Object(c.measured),
        failures: c.failures,
        budget_skipped: c.skipped,
        budget_exceeded,
        limit_secs,
        elapsed,
    })
}

pub fn run_all() -> Vec<CriterionResult> {
    (1..=CRITERIA)
        .map(|id| run_criterion(id).expect("ids are in range"))
        .collect()
}

fn plane_hole_stabilizer(c: &mut Check) -> Result<()> {
    let g = build_groupoid(&families::pg23(), 0)?;
    let r = g.classify()?;
    c.expect_order("hole_stabilizer_order", &r.hole_stabilizer_order, 95_040);
    c.expect("points", r.orbit_sizes.clone(), vec![12]);
    c.expect("transitivity_degree", r.transitivity_degree, 5);
    c.expect(
        "falling_factorial_12_5",
        falling_factorial(12, 5).to_string(),
        r.hole_stabilizer_order.to_string(),
    );
    c.require("sharply_transitive", r.sharply_transitive);
    Ok(())
}

fn plane_groupoid(c: &mut Check) -> Result<()> {
    let g = build_groupoid(&families::pg23(), 0)?;
    c.expect_order("groupoid_size", &g.size(), 13 * 95_040);
    c.expect("is_group", g.is_group(), false);
    Ok(())
}

fn donors_recipients(c: &mut Check) -> Result<()> {
    let h = families::pg23();
    let g = build_groupoid(&h, 0)?;
    let r = verify_donors_and_recipients(&g, &h);
    c.expect("tuples", r.tuples, 1_235_520);
    c.record("orbits", r.orbits.len());
    c.record("orbit_sizes", r.orbits.iter().map(|o| o.orbit_size).collect::<Vec<_>>());
    c.record(
        "donor_orbits",
        r.orbits.iter().filter(|o| o.universal_donor).count(),
    );
    c.require("donors_match_hole", r.donors_match_hole);
    c.record("universal_recipients", r.universal_recipients);
    c.record("tuples_containing_a_line", r.tuples_containing_a_line);
    c.require("recipients_match_lines", r.recipients_match_lines);
    c.require("holds", r.holds);
    Ok(())
}

fn signed_game(c: &mut Check) -> Result<()> {
    let r = signed_groupoid(0)?;
    c.expect_order("hole_stabilizer_order", &r.groupoid.hole_stabilizer_order, 190_080);
    c.require("negation_in_group", r.negation_in_group);
    c.require("negation_central", r.negation_central);
    c.expect_order("quotient_order", &r.quotient_order, 95_040);
    c.require("quotient_matches_plain", r.quotient_matches_plain);
    Ok(())
}

fn dual_game(c: &mut Check) -> Result<()> {
    let r = dual_groupoid(0)?;
    c.expect_order("hole_stabilizer_order", &r.groupoid.hole_stabilizer_order, 95_040);
    c.record("orbit_sizes", r.orbits.iter().map(Vec::len).collect::<Vec<_>>());
    c.expect(
        "non_hole_symbols",
        r.orbits.iter().map(Vec::len).sum::<usize>(),
        24,
    );
    c.require("refines_point_line_split", r.refines_point_line_split);
    c.require("point_restriction_faithful", r.point_restriction_faithful);
    Ok(())
}

/// Every non-identity element has order 2 (which forces commutativity).
fn elementary_abelian(g: &PermutationGroup) -> bool {
    g.elements().iter().all(|x| x.order() <= 2)
}

fn boolean_systems(c: &mut Check) -> Result<()> {
    for m in 2..=4u32 {
        let g = build_groupoid(&families::boolean_system(m)?, 0)?;
        let r = g.classify()?;
        c.expect(&format!("boolean:{m}.classification"), r.classification, Classification::Trivial);
        c.expect_order(&format!("boolean:{m}.groupoid_size"), &r.groupoid_size, 1 << m);
        let l = g.as_group()?;
        c.require(&format!("boolean:{m}.is_group"), l.is_some());
        c.require(
            &format!("boolean:{m}.elementary_abelian"),
            l.as_ref().is_some_and(elementary_abelian),
        );
    }
    Ok(())
}

/// `|Sp_{2m}(2)| = 2^{m²} ∏_{i=1}^{m} (2^{2i} − 1)`.
fn symplectic_order(m: u32) -> u128 {
    (1..=m).fold(1u128 << (m * m), |acc, i| acc * ((1u128 << (2 * i)) - 1))
}

fn symplectic_systems(c: &mut Check) -> Result<()> {
    for (m, pi, l) in [(2u32, 720u128, 11_520u128), (3, 1_451_520, 92_897_280)] {
        let key = |k: &str| format!("symplectic:{m}.{k}");
        let g = build_groupoid(&families::symplectic_system(m)?, 0)?;
        let r = g.classify()?;
        c.expect(&key("order_formula"), symplectic_order(m), pi);
        c.expect_order(&key("hole_stabilizer_order"), &r.hole_stabilizer_order, pi);
        c.expect_order(&key("groupoid_size"), &r.groupoid_size, l);
        c.expect(&key("classification"), r.classification, Classification::Primitive);
        c.require(&key("is_group"), r.is_group);
        // The group closure of L∞ must agree with positions · |π∞|.
        let closure = g.as_group()?.map(|x| x.order().to_string());
        c.expect(&key("groupoid_closure_order"), closure, Some(l.to_string()));
    }
    Ok(())
}

fn quadratic_systems(c: &mut Check) -> Result<()> {
    let g = build_groupoid(&families::quadratic_system(2, 0)?, 0)?;
    let r = g.classify()?;
    c.expect_order("quadratic:2:0.hole_stabilizer_order", &r.hole_stabilizer_order, 72);
    c.expect(
        "quadratic:2:0.classification",
        r.classification,
        Classification::Primitive,
    );
    c.expect("quadratic:2:0.subdegrees", r.subdegrees.clone(), Some(vec![1, 4, 4]));
    c.expect_order("quadratic:2:0.groupoid_size", &r.groupoid_size, 720);
    c.record(
        "quadratic:2:0.note",
        "the order-72 wreath product acts in product action on a 3x3 grid, which is primitive",
    );
    for (m, eps, points, pi) in [(3u32, 0u32, 35usize, 40_320u128), (3, 1, 27, 51_840)] {
        let key = |k: &str| format!("quadratic:{m}:{eps}.{k}");
        let g = build_groupoid(&families::quadratic_system(m, eps)?, 0)?;
        let r = g.classify()?;
        c.expect_order(&key("hole_stabilizer_order"), &r.hole_stabilizer_order, pi);
        c.expect(&key("points"), r.orbit_sizes.iter().sum::<usize>(), points);
        c.expect_order(&key("groupoid_size"), &r.groupoid_size, 1_451_520);
    }
    Ok(())
}

fn theorem_sweep(c: &mut Check) -> Result<()> {
    let mut checked = Vec::new();
    let mut not_supersimple = Vec::new();
    let mut applied = 0usize;
    for name in catalog::STANDARD {
        let h = catalog::design(name)?;
        if !h.profile().is_supersimple {
            not_supersimple.push(*name);
            continue;
        }
        let r = verify_theorems(&h, 0)?;
        for check in r.checks.iter().filter(|k| k.status == CheckStatus::Fail) {
            c.failures.push(format!("{name}: {} failed", check.name));
        }
        applied += r.checks.iter().filter(|k| k.status == CheckStatus::Pass).count();
        match *name {
            "boolean:3" => c.expect("boolean:3.outcome", r.facts.triangle_outcome, TriangleOutcome::Boolean),
            "pg23" => c.expect("pg23.outcome", r.facts.triangle_outcome, TriangleOutcome::ProjectivePlane),
            _ => {}
        }
        checked.push(*name);
    }
    c.record("designs_checked", checked);
    c.record("not_supersimple", not_supersimple);
    c.record("implications_applied", applied);
    Ok(())
}

fn base_independence(c: &mut Check) -> Result<()> {
    for name in ["pg23", "quadratic:2:0", "pairs:3", "pairs:4", "pairs:5"] {
        let h = catalog::design(name)?;
        let r = verify_base_independence(&h)?;
        c.expect(&format!("{name}.bases_checked"), r.bases_checked, h.n());
        c.require(&format!("{name}.holds"), r.holds);
    }
    Ok(())
}

fn plane_codes(c: &mut Check) -> Result<()> {
    let r = analyze(&families::pg23(), Field::F3, true)?;
    c.expect("dimension", r.dimension, 7);
    c.expect("min_distance", r.min_distance, Some(4));
    c.expect(
        "weight_4_words",
        r.weights.as_ref().and_then(|w| w.get(&4).copied()),
        Some(26),
    );
    let dual: Vec<usize> = r
        .dual_weights
        .as_ref()
        .map(|w| w.keys().copied().filter(|&x| x > 0).collect())
        .unwrap_or_default();
    c.require("dual_weights_in_6_9_12", dual.iter().all(|w| [6, 9, 12].contains(w)));
    c.record("dual_weights", &dual);
    c.expect("dual_min_distance", dual.first().copied(), Some(6));
    c.expect("covering_radius", r.covering_radius, Some(3));
    c.expect("s_star", r.s_star, Some(3));
    c.expect("uniformly_packed", r.uniformly_packed, Some(true));
    c.expect("completely_regular", r.completely_regular, Some(false));
    c.require("has_coset_witness", r.witnesses.is_some());
    c.record("witness", &r.witnesses);

    let g = golay_chain(0)?;
    c.require("line_sums_hold", g.line_sums_hold);
    c.record("codewords_checked", g.codewords_checked);
    c.expect("extended", (g.extended.n, g.extended.k, g.extended.d), (12, 6, Some(6)));
    c.expect("punctured", (g.punctured.n, g.punctured.k, g.punctured.d), (11, 6, Some(5)));
    c.record("sphere_packing", &g.sphere_packing);
    c.require("perfect", g.perfect);
    Ok(())
}

fn binary_codes(c: &mut Check) -> Result<()> {
    let r = analyze(&families::symplectic_system(2)?, Field::F2, false)?;
    c.expect("symplectic:2.min_distance", r.min_distance, Some(4));
    c.expect("symplectic:2.covering_radius", r.covering_radius, Some(4));
    c.expect("symplectic:2.completely_regular", r.completely_regular, Some(true));

    let r = analyze(&families::quadratic_system(3, 1)?, Field::F2, false)?;
    if r.min_distance.is_none() || r.covering_radius.is_none() {
        c.skipped.push(format!("quadratic:3:1: {}", r.skipped.join("; ")));
        c.record("quadratic:3:1.budget_skipped", true);
    } else {
        c.expect("quadratic:3:1.min_distance", r.min_distance, Some(4));
        c.expect("quadratic:3:1.covering_radius", r.covering_radius, Some(3));
        c.record("quadratic:3:1.completely_regular", r.completely_regular);
    }
    Ok(())
}

fn pliable_functions(c: &mut Check) -> Result<()> {
    let paley = pliable::primitivity_check(&pliable::paley6())?;
    c.expect("paley6.groupoid_size", paley.groupoid.groupoid_size.to_string(), "60".into());
    let mut statuses = vec![("paley6".to_string(), paley.status)];

    for (name, table, order) in [
        ("C5", GroupTable::cyclic(5), 5u128),
        ("Klein", GroupTable::elementary_abelian(2), 4),
    ] {
        let f = pliable::from_group(&table)?;
        let r = pliable::primitivity_check(&f)?;
        c.expect_order(&format!("{name}.groupoid_size"), &r.groupoid.groupoid_size, order);
        c.expect(
            &format!("{name}.classification"),
            r.groupoid.classification,
            Classification::Trivial,
        );
        statuses.push((name.to_string(), r.status));
    }

    let affine = pliable::primitivity_check(&pliable::affine_complement(2)?)?;
    c.expect_order("affine:2.groupoid_size", &affine.groupoid.groupoid_size, 18);
    c.expect("affine:2.primitive", affine.primitive, Some(false));
    let blocks = affine
        .groupoid
        .groupoid_block_system
        .as_ref()
        .map(|b| (b.num_blocks, b.block_size));
    c.expect("affine:2.blocks", blocks, Some((3, 3)));
    c.expect("affine:2.n_mu", (affine.n, affine.mu), (9, 6));
    c.require("affine:2.sharpness_witness", affine.sharpness_witness);
    statuses.push(("affine:2".into(), affine.status));

    for (name, s) in &statuses {
        if *s == CheckStatus::Fail {
            c.failures.push(format!("{name}: primitivity criterion failed"));
        }
    }
    c.record("primitivity_checks", statuses);
    Ok(())
}

/// `|Sym(2) ≀ Sym(n−1)| = 2^{n−1}(n−1)!`, halved for even `n`.
fn pairs_order(n: u32) -> u128 {
    let full = (1u128 << (n - 1)) * (1..n as u128).product::<u128>();
    if n % 2 == 1 {
        full
    } else {
        full / 2
    }
}

fn pair_hypergraphs(c: &mut Check) -> Result<()> {
    for (n, expected) in [(3u32, 8u128), (4, 24), (5, 384), (6, 1920)] {
        let g = build_groupoid(&families::pairs_hypergraph(n as usize)?, 0)?;
        let key = |k: &str| format!("pairs:{n}.{k}");
        c.expect(&key("formula"), pairs_order(n), expected);
        c.expect_order(&key("hole_stabilizer_order"), &g.hole_stabilizer_order(), expected);
        c.expect_order(&key("groupoid_size"), &g.size(), 2 * n as u128 * expected);
    }
    Ok(())
}

/// Groupoids small enough for the walk oracle, plus the groups they contain.
fn oracle_groupoids<M: MoveSystem>(
    c: &mut Check,
    g: &Groupoid<M>,
    groups: &mut Vec<(String, PermutationGroup)>,
    walks: &mut Vec<String>,
) -> Result<()> {
    let label = g.system().label();
    if g.size() <= BigOrder::from(oracle::WALK_LIMIT) {
        let a = oracle::check_groupoid(g, oracle::WALK_LIMIT)?;
        if !a.agrees {
            c.failures.push(format!("walk oracle disagrees on {label}: {a:?}"));
        }
        walks.push(label.clone());
    }
    let pi = g.hole_stabilizer();
    if pi.order() <= BigOrder::from(oracle::GROUP_LIMIT) {
        groups.push((format!("{label} hole stabilizer"), pi.clone()));
    }
    if g.size() <= BigOrder::from(oracle::GROUP_LIMIT) {
        if let Some(l) = g.as_group()? {
            groups.push((format!("{label} groupoid"), l));
        }
    }
    Ok(())
}

fn oracles(c: &mut Check) -> Result<()> {
    let mut groups: Vec<(String, PermutationGroup)> = Vec::new();
    let mut walks = Vec::new();
    for name in catalog::STANDARD {
        let h = catalog::design(name)?;
        let g = build_groupoid(&h, 0)?;
        oracle_groupoids(c, &g, &mut groups, &mut walks)?;
    }
    let functions: Vec<PliableFunction> = vec![
        pliable::paley6(),
        pliable::affine_complement(2)?,
        pliable::from_group(&GroupTable::cyclic(5))?,
        pliable::from_group(&GroupTable::elementary_abelian(2))?,
        pliable::from_group(&GroupTable::elementary_abelian(3))?,
    ];
    for f in functions {
        let g = Groupoid::build(f, 0)?;
        oracle_groupoids(c, &g, &mut groups, &mut walks)?;
    }
    // Point stabilizers inside the Mathieu group, down to order 72.
    let plane = build_groupoid(&families::pg23(), 0)?;
    let mut stab = plane.hole_stabilizer().clone();
    for p in 1..4 {
        stab = stab.stabilizer(p)?;
        if stab.order() <= BigOrder::from(oracle::GROUP_LIMIT) {
            groups.push((format!("pg23 hole stabilizer fixing 1..={p}"), stab.clone()));
        }
    }

    let mut group_labels = Vec::new();
    for (label, g) in &groups {
        let a = oracle::check_group(label, g, oracle::GROUP_LIMIT)?;
        if !a.agrees {
            c.failures.push(format!("closure oracle disagrees on {label}: {a:?}"));
        }
        group_labels.push(format!("{label} ({})", a.closure_size));
    }

    let mut codes = Vec::new();
    for name in catalog::STANDARD {
        let h = catalog::design(name)?;
        for field in [Field::F2, Field::F3] {
            let size = (field.q() as u128).checked_pow(h.n() as u32);
            if size.map_or(true, |s| s > oracle::SWEEP_LIMIT as u128) {
                continue;
            }
            let code = crate::codes::LinearCode::from_design(&h, field)?;
            let label = format!("{name} over GF({})", field.q());
            let a = oracle::check_code(&label, &code, oracle::SWEEP_LIMIT)?;
            if !a.agrees {
                c.failures.push(format!("sweep oracle disagrees on {label}: {a:?}"));
            }
            codes.push(label);
        }
    }
    // The ternary plane code is larger than the sweep limit but still cheap.
    let plane_code = crate::codes::LinearCode::from_design(&families::pg23(), Field::F3)?;
    let a = oracle::check_code("pg23 over GF(3)", &plane_code, 3u64.pow(13))?;
    if !a.agrees {
        c.failures.push(format!("sweep oracle disagrees on pg23 over GF(3): {a:?}"));
    }
    codes.push("pg23 over GF(3)".into());

    c.record("groups", group_labels);
    c.record("groupoids", walks);
    c.record("codes", codes);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_formulas() {
        assert_eq!(symplectic_order(1), 6);
        assert_eq!(symplectic_order(2), 720);
        assert_eq!(pairs_order(3), 8);
        assert_eq!(pairs_order(6), 1920);
    }

    #[test]
    fn out_of_range_ids() {
        assert!(run_criterion(0).is_err());
        assert!(run_criterion(16).is_err());
    }

    #[test]
    fn quick_criteria_pass() {
        for id in [1, 2, 6, 14] {
            let r = run_criterion(id).unwrap();
            assert!(r.passed, "{}", r.summary());
        }
    }
}
