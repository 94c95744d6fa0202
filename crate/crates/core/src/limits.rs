//! Process-wide guardrails on problem size.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{Error, Result};

pub const DEFAULT_DIM_CAP: usize = 6;
pub const DEFAULT_MAX_GENERATORS: usize = 12;
pub const DEFAULT_MAX_POWER_DIM: usize = 2000;

/// Environment variable read by the command-line front end to override the dimension cap.
pub const DIM_CAP_ENV: &str = "OKOUNKOV_DIM_CAP";

static DIM_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_DIM_CAP);
static MAX_POWER_DIM: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_POWER_DIM);

pub fn dim_cap() -> usize {
    DIM_CAP.load(Ordering::Relaxed)
}

pub fn set_dim_cap(cap: usize) {
    DIM_CAP.store(cap, Ordering::Relaxed);
}

pub fn max_power_dim() -> usize {
    MAX_POWER_DIM.load(Ordering::Relaxed)
}

pub fn set_max_power_dim(bound: usize) {
    MAX_POWER_DIM.store(bound, Ordering::Relaxed);
}

pub fn check_dim(dim: usize) -> Result<()> {
    let cap = dim_cap();
    if dim > cap {
        Err(Error::DimCapExceeded { dim, cap })
    } else {
        Ok(())
    }
}
