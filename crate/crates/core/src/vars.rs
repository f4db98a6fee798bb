//! Shared variable contexts used across the families.

use std::sync::{Arc, OnceLock};

use crate::laurent::VarContext;

macro_rules! context {
    ($fn:ident, [$($name:literal),+]) => {
        pub fn $fn() -> Arc<VarContext> {
            static CTX: OnceLock<Arc<VarContext>> = OnceLock::new();
            CTX.get_or_init(|| VarContext::new(&[$($name),+]).expect("valid context"))
                .clone()
        }
    };
}

context!(q, ["q"]);
context!(t, ["t"]);
context!(qp, ["q", "p"]);
context!(az, ["a", "z"]);
