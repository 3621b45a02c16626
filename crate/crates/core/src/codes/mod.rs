//! Linear codes spanned by incidence matrices over GF(2) and GF(3), with
//! weight, covering-radius and distance-partition analysis.

mod cosets;
mod field;
mod golay;
mod linear;
mod qary;

use std::collections::BTreeMap;

use serde::Serialize;

pub use cosets::{CosetTable, CosetWitness, Regularity, RegularityWitness};
pub use field::{Field, Word, MAX_LENGTH};
pub use golay::{golay_chain, sphere_packing, GolayChain, Parameters};
pub use linear::{LinearCode, WeightProfile};
pub use qary::{covers, qary_design_check, Coverage, QaryDesign};

use crate::designs::Hypergraph;
use crate::error::{Error, Result};

/// Everything `code analyze` reports. Fields that need an enumeration beyond
/// budget are left empty and named in `skipped`.
#[derive(Clone, Debug, Serialize)]
pub struct CodeReport {
    pub label: String,
    pub field: Field,
    pub length: usize,
    pub dimension: usize,
    pub min_distance: Option<usize>,
    pub weights: Option<BTreeMap<usize, u64>>,
    pub dual_weights: Option<BTreeMap<usize, u64>>,
    pub s: Option<usize>,
    pub s_star: Option<usize>,
    pub covering_radius: Option<usize>,
    pub uniformly_packed: Option<bool>,
    pub completely_regular: Option<bool>,
    pub witnesses: Option<RegularityWitness>,
    /// Number of cosets at each distance from the code.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class_sizes: Option<Vec<u64>>,
    /// Whether minimum-weight codewords form a q-ary `⌊d/2⌋`-design.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minimum_weight_design: Option<QaryDesign>,
    pub skipped: Vec<String>,
}

impl CodeReport {
    pub fn budget_skipped(&self) -> bool {
        !self.skipped.is_empty()
    }
}

/// Turns a budget overrun into `None` plus a note; other errors propagate.
fn within_budget<T>(r: Result<T>, skipped: &mut Vec<String>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(e @ Error::BudgetExceeded { .. }) => {
            skipped.push(e.to_string());
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

/// Analyzes `C_F(H)`; `full` adds the coset class sizes and the q-ary design check.
pub fn analyze(h: &Hypergraph, field: Field, full: bool) -> Result<CodeReport> {
    let code = LinearCode::from_design(h, field)?;
    analyze_code(&code, h.label(), full)
}

pub fn analyze_code(code: &LinearCode, label: &str, full: bool) -> Result<CodeReport> {
    let mut skipped = Vec::new();
    let weights = within_budget(code.weight_profile(), &mut skipped)?;
    let dual_weights = within_budget(code.dual().weight_profile(), &mut skipped)?;
    let table = within_budget(CosetTable::new(code), &mut skipped)?;
    let regularity = table.as_ref().map(CosetTable::regularity);

    let covering_radius = table.as_ref().map(CosetTable::covering_radius);
    let s_star = dual_weights.as_ref().map(|w| w.degree);
    let uniformly_packed = match (covering_radius, s_star) {
        (Some(r), Some(s)) => Some(r == s),
        _ => None,
    };
    let min_distance = weights.as_ref().and_then(|w| w.min_distance);
    let minimum_weight_design = match (full, min_distance) {
        (true, Some(d)) => within_budget(qary_design_check(code, d, d / 2), &mut skipped)?,
        _ => None,
    };
    Ok(CodeReport {
        label: label.to_string(),
        field: code.field(),
        length: code.length(),
        dimension: code.dimension(),
        min_distance,
        s: weights.as_ref().map(|w| w.degree),
        weights: weights.map(|w| w.counts),
        s_star,
        dual_weights: dual_weights.map(|w| w.counts),
        covering_radius,
        uniformly_packed,
        completely_regular: regularity.as_ref().map(|r| r.completely_regular),
        witnesses: regularity.and_then(|r| r.witness),
        class_sizes: if full { table.as_ref().map(CosetTable::class_sizes) } else { None },
        minimum_weight_design,
        skipped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designs::families;

    #[test]
    fn plane_code_report() {
        let r = analyze(&families::pg23(), Field::F3, true).unwrap();
        assert_eq!((r.length, r.dimension, r.min_distance), (13, 7, Some(4)));
        assert_eq!(r.s_star, Some(3));
        assert_eq!(r.covering_radius, Some(3));
        assert_eq!(r.uniformly_packed, Some(true));
        assert_eq!(r.completely_regular, Some(false));
        assert!(r.witnesses.is_some());
        assert!(r.skipped.is_empty());
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["field"], 3);
        assert_eq!(v["weights"]["4"], 26);
    }

    #[test]
    fn symplectic_code_is_completely_regular() {
        let r = analyze(&families::symplectic_system(2).unwrap(), Field::F2, false).unwrap();
        assert_eq!(r.min_distance, Some(4));
        assert_eq!(r.covering_radius, Some(4));
        assert_eq!(r.completely_regular, Some(true));
        assert_eq!(r.uniformly_packed, Some(true));
    }
}
