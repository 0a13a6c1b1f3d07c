//! Benchmark fixtures shared by the criterion targets.

use std::sync::Arc;

use toricode::{FiniteField, ToricData};

pub fn hirzebruch(q: u64, ell: u32) -> ToricData {
    let field = Arc::new(FiniteField::new(q, 1).expect("prime"));
    ToricData::hirzebruch(field, ell).expect("valid")
}
