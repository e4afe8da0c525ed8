//! Factor existence criteria as executable predicates, constructive factor
//! finders, and the brute-force enumerator the rest is validated against.

mod construct;
mod criteria;
mod enumerate;

pub use construct::{
    find_f_factor, find_interval_factor, find_list_factor, find_two_point_factor,
    TWO_POINT_BUDGET,
};
pub use criteria::{
    check_lovasz_condition, check_tutte_lemma_form, lovasz_deficiency, omega_gf,
    CriterionOutcome, LOVASZ_CAP,
};
pub use enumerate::{enumerate_factors, first_factor_exhaustive, ENUMERATION_CAP};

use thiserror::Error;

use crate::graph::{Factor, GraphError, MultiGraph, VertexIntMap, VertexListMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorError {
    #[error("{what} is exhaustive only up to {cap}, input has {size}")]
    TooLarge {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("invalid degree functions: {0}")]
    InvalidFunctions(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub(crate) fn check_pair(
    g: &MultiGraph,
    lo: &VertexIntMap,
    hi: &VertexIntMap,
) -> Result<(), FactorError> {
    lo.check(g)?;
    hi.check(g)?;
    if let Some(v) = g.vertices().find(|&v| lo[v] > hi[v]) {
        return Err(FactorError::InvalidFunctions(format!(
            "g({0}) = {1} exceeds f({0}) = {2}",
            v + 1,
            lo[v],
            hi[v]
        )));
    }
    Ok(())
}

/// Whether the degrees of `f` all lie in their lists.
pub fn satisfies_lists(g: &MultiGraph, f: &Factor, lists: &VertexListMap) -> bool {
    match g.factor_degrees(f) {
        Ok(d) => d
            .iter()
            .enumerate()
            .all(|(v, &dv)| lists.allows(v, dv as i64)),
        Err(_) => false,
    }
}
