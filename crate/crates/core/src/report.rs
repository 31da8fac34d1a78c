//! Serializable summaries used by the command-line driver.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::error::Result;
use crate::hat::homology_hat;
use crate::marking::Marking;
use crate::operators::graded_suture_quotient;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HatReport {
    pub n: usize,
    pub signs: String,
    pub dim_chain: usize,
    pub rank_boundary: usize,
    pub dim_homology: usize,
    /// `None` for markings without sutures.
    pub suture_span_rank: Option<usize>,
    pub graded: Option<BTreeMap<i64, usize>>,
}

pub fn hat_report(marking: &Arc<Marking>) -> Result<HatReport> {
    let h = homology_hat(marking);
    let graded = if marking.is_alternating() && marking.basepoint() == 0 { Some(graded_suture_quotient(marking)?) } else { None };
    Ok(HatReport {
        n: marking.n(),
        signs: marking.signature(),
        dim_chain: h.dim_chain(),
        rank_boundary: h.rank_boundary(),
        dim_homology: h.dimension(),
        suture_span_rank: h.suture_span_rank(),
        graded,
    })
}
