//! Pliable functions: a permutation `[a,b]` for every ordered pair of points
//! of a 2-(n,3,μ) triple system, generalizing elementary moves.

use serde::{Deserialize, Serialize};

use crate::designs::{Hypergraph, TripleSystem};
use crate::error::{Error, Result};
use crate::groupoid::{CheckStatus, DesignMoves, Groupoid, GroupoidReport, MoveSystem};
use crate::permgroup::Permutation;

/// A validated pliable function, with its `n²` permutations materialized.
#[derive(Clone, Debug)]
pub struct PliableFunction {
    triples: TripleSystem,
    table: Vec<Permutation>,
    label: String,
}

/// The first axiom a candidate table violates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom", rename_all = "kebab-case")]
pub enum Violation {
    TableShape { expected: usize, found: usize },
    DiagonalNotIdentity { a: usize },
    DoesNotSendAToB { a: usize, b: usize },
    NotInverse { a: usize, b: usize },
    WrongSupport { a: usize, b: usize, expected: Vec<usize>, found: Vec<usize> },
}

/// Checks both axioms over every ordered pair; `None` when the table is pliable.
pub fn find_violation(triples: &TripleSystem, table: &[Permutation]) -> Option<Violation> {
    let n = triples.n();
    if table.len() != n * n || table.iter().any(|p| p.degree() != n) {
        return Some(Violation::TableShape {
            expected: n * n,
            found: table.len(),
        });
    }
    for a in 0..n {
        if !table[a * n + a].is_identity() {
            return Some(Violation::DiagonalNotIdentity { a });
        }
        for b in (0..n).filter(|&b| b != a) {
            let ab = &table[a * n + b];
            if ab.image(a) != b {
                return Some(Violation::DoesNotSendAToB { a, b });
            }
            if !ab.then(&table[b * n + a]).is_identity() {
                return Some(Violation::NotInverse { a, b });
            }
            let mut expected = triples.third_points(a, b);
            expected.extend([a, b]);
            expected.sort_unstable();
            let found = ab.support();
            if found != expected {
                return Some(Violation::WrongSupport { a, b, expected, found });
            }
        }
    }
    None
}

impl PliableFunction {
    /// Validates `table[a·n + b] = [a,b]` against `triples`.
    pub fn new(triples: TripleSystem, table: Vec<Permutation>, label: impl Into<String>) -> Result<Self> {
        if triples.n() < 3 {
            return Err(Error::InvalidPliable("at least three points are needed".into()));
        }
        if let Some(v) = find_violation(&triples, &table) {
            return Err(Error::InvalidPliable(format!("{v:?}")));
        }
        Ok(PliableFunction {
            triples,
            table,
            label: label.into(),
        })
    }

    pub fn n(&self) -> usize {
        self.triples.n()
    }

    pub fn mu(&self) -> usize {
        self.triples.mu().expect("validated triple systems are 2-designs")
    }

    pub fn triples(&self) -> &TripleSystem {
        &self.triples
    }

    pub fn get(&self, a: usize, b: usize) -> &Permutation {
        &self.table[a * self.n() + b]
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }
}

impl MoveSystem for PliableFunction {
    fn positions(&self) -> usize {
        self.n()
    }

    fn degree(&self) -> usize {
        self.n()
    }

    fn targets(&self, from: usize) -> Vec<usize> {
        (0..self.n()).filter(|&b| b != from).collect()
    }

    fn step(&self, from: usize, to: usize) -> Option<Permutation> {
        (from < self.n() && to < self.n()).then(|| self.get(from, to).clone())
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
        self.label.clone()
    }
}

/// The elementary moves of a supersimple design.
pub fn from_design(h: &Hypergraph) -> Result<PliableFunction> {
    let triples = TripleSystem::collinear_triples(h)?;
    let moves = DesignMoves::new(h)?;
    let n = h.n();
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            table.push(moves.elementary(a, b)?.clone());
        }
    }
    PliableFunction::new(triples, table, format!("design:{}", h.label()))
}

/// A finite group as a multiplication table: `table[x][y] = x·y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupTable(pub Vec<Vec<usize>>);

impl GroupTable {
    pub fn cyclic(n: usize) -> Self {
        GroupTable((0..n).map(|x| (0..n).map(|y| (x + y) % n).collect()).collect())
    }

    /// `(C₂)^m` with XOR as the operation.
    pub fn elementary_abelian(m: u32) -> Self {
        let n = 1usize << m;
        GroupTable((0..n).map(|x| (0..n).map(|y| x ^ y).collect()).collect())
    }

    /// Checks closure, associativity, identity and inverses; returns the identity and inverse map.
    pub fn validate(&self) -> Result<(usize, Vec<usize>)> {
        let t = &self.0;
        let n = t.len();
        if n == 0 || t.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return Err(Error::NotAGroup("table must be square with entries in range".into()));
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if t[t[x][y]][z] != t[x][t[y][z]] {
                        return Err(Error::NotAGroup(format!("({x}·{y})·{z} ≠ {x}·({y}·{z})")));
                    }
                }
            }
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|x| t[e][x] == x && t[x][e] == x))
            .ok_or_else(|| Error::NotAGroup("no identity".into()))?;
        let inverse = (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| t[x][y] == e)
                    .ok_or_else(|| Error::NotAGroup(format!("{x} has no inverse")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((e, inverse))
    }
}

/// `[a,b]` = right multiplication by `a⁻¹b`, over the triple system of all 3-subsets.
pub fn from_group(g: &GroupTable) -> Result<PliableFunction> {
    let (_, inverse) = g.validate()?;
    let t = &g.0;
    let n = t.len();
    if n < 3 {
        return Err(Error::InvalidPliable("groups of order below 3 carry no triple system".into()));
    }
    let mut all = Vec::new();
    for a in 0..n as u32 {
        for b in a + 1..n as u32 {
            for c in b + 1..n as u32 {
                all.push([a, b, c]);
            }
        }
    }
    let triples = TripleSystem::new(n, all)?;
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let s = t[inverse[a]][b];
            table.push(Permutation::from_images((0..n).map(|x| t[x][s] as u32))?);
        }
    }
    PliableFunction::new(triples, table, format!("group:{n}"))
}

pub fn cyclic(n: usize) -> Result<PliableFunction> {
    Ok(from_group(&GroupTable::cyclic(n))?.with_label(format!("cyclic:{n}")))
}

/// The ten lines of the unique 2-(6,3,2) design.
pub const PALEY6_LINES: [[u32; 3]; 10] = [
    [0, 1, 2],
    [0, 2, 3],
    [0, 3, 4],
    [0, 4, 5],
    [0, 5, 1],
    [1, 2, 4],
    [2, 3, 5],
    [3, 4, 1],
    [4, 5, 2],
    [5, 1, 3],
];

/// `[a,b] = (a,b)(c,d)` where `{a,b,c}` and `{a,b,d}` are the two lines through `a, b`.
pub fn paley6() -> PliableFunction {
    let triples = TripleSystem::new(6, PALEY6_LINES.to_vec()).expect("a 2-(6,3,2) design");
    let mut table = Vec::with_capacity(36);
    for a in 0..6 {
        for b in 0..6 {
            if a == b {
                table.push(Permutation::identity(6));
                continue;
            }
            let cd = triples.third_points(a, b);
            let p = Permutation::from_cycles(6, &[&[a, b], &[cd[0], cd[1]]])
                .expect("disjoint transpositions");
            table.push(p);
        }
    }
    PliableFunction::new(triples, table, "paley6").expect("the displayed function is pliable")
}

fn to_digits(x: usize, k: u32) -> Vec<usize> {
    (0..k).map(|i| x / 3usize.pow(i) % 3).collect()
}

fn from_digits(d: &[usize]) -> usize {
    d.iter().rev().fold(0, |acc, &x| acc * 3 + x)
}

fn combine(x: usize, y: usize, k: u32, sx: usize, sy: usize) -> usize {
    let (dx, dy) = (to_digits(x, k), to_digits(y, k));
    let d: Vec<usize> = dx.iter().zip(&dy).map(|(a, b)| (sx * a + sy * b) % 3).collect();
    from_digits(&d)
}

/// Over `(F₃)^k`: triples with non-zero sum, and `[a,b] = ∏_{w+a+b≠0} (w, a+b−w)`.
///
/// The product formula gives the reflection `w ↦ a+b−w` at `a = b` too, so
/// the diagonal is set to the identity separately.
pub fn affine_complement(k: u32) -> Result<PliableFunction> {
    if !(2..=4).contains(&k) {
        return Err(Error::InvalidArgument(format!("affine_complement needs 2 ≤ k ≤ 4, got {k}")));
    }
    let n = 3usize.pow(k);
    let add = |x, y| combine(x, y, k, 1, 1);
    let sub = |x, y| combine(x, y, k, 1, 2);
    let mut triples = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if add(add(a, b), c) != 0 {
                    triples.push([a as u32, b as u32, c as u32]);
                }
            }
        }
    }
    let triples = TripleSystem::new(n, triples)?;
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            if a == b {
                table.push(Permutation::identity(n));
                continue;
            }
            let s = add(a, b);
            let images = (0..n).map(|w| if add(w, s) == 0 { w } else { sub(s, w) } as u32);
            table.push(Permutation::from_images(images)?);
        }
    }
    PliableFunction::new(triples, table, format!("affine:{k}"))
}

/// Whether `n > (3/2)μ`, `μ > 4` and `L∞` a group force a primitive `L∞`.
#[derive(Clone, Debug, Serialize)]
pub struct PrimitivityCheck {
    pub label: String,
    pub n: usize,
    pub mu: usize,
    pub is_group: bool,
    pub primitive: Option<bool>,
    pub hypothesis: bool,
    pub status: CheckStatus,
    /// `2n = 3μ` with an imprimitive group: the bound cannot be lowered.
    pub sharpness_witness: bool,
    /// The weaker threshold `n > μ + 3`: recorded, never asserted.
    pub exploratory: ExploratoryThreshold,
    pub groupoid: GroupoidReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExploratoryThreshold {
    pub applies: bool,
    /// A group above the weaker threshold that is not primitive.
    pub counterexample_candidate: bool,
}

pub fn primitivity_check(f: &PliableFunction) -> Result<PrimitivityCheck> {
    let g = Groupoid::build(f.clone(), 0)?;
    let report = g.classify()?;
    let (n, mu) = (f.n(), f.mu());
    let primitive = report.groupoid_primitive;
    let hypothesis = 2 * n > 3 * mu && mu > 4 && report.is_group;
    let status = match (hypothesis, primitive) {
        (false, _) => CheckStatus::NotApplicable,
        (true, Some(true)) => CheckStatus::Pass,
        (true, _) => CheckStatus::Fail,
    };
    let applies = n > mu + 3 && report.is_group;
    Ok(PrimitivityCheck {
        label: f.label.clone(),
        n,
        mu,
        is_group: report.is_group,
        primitive,
        hypothesis,
        status,
        sharpness_witness: 2 * n == 3 * mu && primitive == Some(false),
        exploratory: ExploratoryThreshold {
            applies,
            counterexample_candidate: applies && primitive == Some(false),
        },
        groupoid: report,
    })
}

/// Parses `paley6`, `affine:k`, `cyclic:n`, `group:<file>` or `design:<file>`.
pub fn from_spec(spec: &str) -> Result<PliableFunction> {
    let (kind, arg) = spec.split_once(':').unwrap_or((spec, ""));
    let number = |s: &str| {
        s.parse::<u32>()
            .map_err(|_| Error::InvalidArgument(format!("expected a number in `{spec}`")))
    };
    match kind {
        "paley6" => Ok(paley6()),
        "affine" => affine_complement(number(arg)?),
        "cyclic" => cyclic(number(arg)? as usize),
        "group" => {
            let table: GroupTable = serde_json::from_str(&std::fs::read_to_string(arg)?)?;
            from_group(&table)
        }
        "design" => from_design(&Hypergraph::from_json(&std::fs::read_to_string(arg)?)?),
        _ => Err(Error::UnknownCatalogEntry(spec.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designs::families;
    use crate::permgroup::BigOrder;

    #[test]
    fn paley6_groupoid_has_order_60() {
        let f = paley6();
        assert_eq!(f.mu(), 2);
        let g = Groupoid::build(f.clone(), 0).unwrap();
        assert_eq!(g.size(), BigOrder::from(60u32));
        for a in 0..6 {
            for b in (0..6).filter(|&b| b != a) {
                assert_eq!(f.get(a, b).support().len(), 4);
                assert_eq!(f.get(a, b).order(), 2);
            }
        }
    }

    #[test]
    fn bare_transpositions_are_not_pliable() {
        let triples = paley6().triples().clone();
        let table: Vec<Permutation> = (0..36)
            .map(|i| {
                let (a, b) = (i / 6, i % 6);
                if a == b {
                    Permutation::identity(6)
                } else {
                    Permutation::transposition(6, a, b)
                }
            })
            .collect();
        assert!(matches!(
            find_violation(&triples, &table),
            Some(Violation::WrongSupport { .. })
        ));
    }

    #[test]
    fn group_functions_are_regular() {
        for table in [GroupTable::cyclic(5), GroupTable::elementary_abelian(2)] {
            let f = from_group(&table).unwrap();
            let g = Groupoid::build(f, 0).unwrap();
            assert!(g.hole_stabilizer().is_trivial());
            assert_eq!(g.size(), BigOrder::from(table.0.len()));
            assert!(g.is_group());
        }
    }

    #[test]
    fn klein_group_matches_boolean_moves() {
        let f = from_group(&GroupTable::elementary_abelian(2)).unwrap();
        let d = from_design(&families::boolean_system(2).unwrap()).unwrap();
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(f.get(a, b), d.get(a, b));
            }
        }
    }

    #[test]
    fn tables_that_are_not_groups_are_rejected() {
        let bad = GroupTable(vec![vec![0, 1, 2], vec![1, 1, 0], vec![2, 0, 1]]);
        assert!(matches!(from_group(&bad), Err(Error::NotAGroup(_))));
        assert!(from_group(&GroupTable::cyclic(2)).is_err());
    }

    #[test]
    fn affine_moves_depend_only_on_the_sum() {
        for k in [2, 3] {
            let f = affine_complement(k).unwrap();
            let n = f.n();
            assert_eq!(f.mu(), n - 3);
            for a in 0..n {
                for b in (0..n).filter(|&b| b != a) {
                    let p = f.get(a, b);
                    assert_eq!(p.support().len(), n - 1);
                    assert_eq!(p.order(), 2);
                    for c in 0..n {
                        let d = combine(combine(a, b, k, 1, 1), c, k, 1, 2);
                        if c != d {
                            assert_eq!(p, f.get(c, d));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn affine_plane_complement_is_imprimitive_at_the_bound() {
        let c = primitivity_check(&affine_complement(2).unwrap()).unwrap();
        assert_eq!(c.groupoid.groupoid_size, BigOrder::from(18u32));
        assert!(c.is_group);
        assert_eq!(c.primitive, Some(false));
        assert!(!c.hypothesis);
        assert!(c.sharpness_witness);
    }

    #[test]
    fn design_function_reproduces_the_design_groupoid() {
        let f = from_design(&families::pg23()).unwrap();
        let g = Groupoid::build(f, 0).unwrap();
        assert_eq!(g.size(), BigOrder::from(1_235_520u32));
    }
}
