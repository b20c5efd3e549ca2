//! Process-wide resource caps.

use std::cell::Cell;
use std::sync::RwLock;

use crate::error::{Error, Result};

/// Caps that turn runaway computations into explicit errors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of polynomials in an intermediate Gröbner basis.
    pub max_basis: usize,
    /// Maximum number of queued critical pairs.
    pub max_pairs: usize,
    /// Largest truncation degree tried when certifying a finite length.
    pub length_cap: u32,
    /// Largest k sampled by the inner Hilbert–Samuel fits.
    pub inner_k_cap: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_basis: 5000, max_pairs: 1_000_000, length_cap: 40, inner_k_cap: 30 }
    }
}

static CURRENT: RwLock<Option<Limits>> = RwLock::new(None);

thread_local! {
    static SCOPED: Cell<Option<Limits>> = const { Cell::new(None) };
}

impl Limits {
    pub fn current() -> Limits {
        SCOPED
            .with(|s| s.get())
            .unwrap_or_else(|| CURRENT.read().unwrap().unwrap_or_default())
    }

    /// Runs `f` with these limits on the current thread only.
    pub fn scoped<T>(self, f: impl FnOnce() -> T) -> T {
        let prev = SCOPED.with(|s| s.replace(Some(self)));
        let out = f();
        SCOPED.with(|s| s.set(prev));
        out
    }

    /// Replaces the process-wide limits.
    pub fn install(self) {
        *CURRENT.write().unwrap() = Some(self);
    }

    /// Parses an override string: either a bare integer (basis size) or a
    /// comma-separated list of `basis=`, `pairs=`, `length=`, `krange=` entries.
    pub fn with_overrides(mut self, spec: &str) -> Result<Limits> {
        let spec = spec.trim();
        if spec.is_empty() {
            return Ok(self);
        }
        if let Ok(n) = spec.parse::<usize>() {
            self.max_basis = n;
            return Ok(self);
        }
        for part in spec.split(',') {
            let (key, val) = part
                .split_once('=')
                .ok_or_else(|| Error::invalid(format!("malformed budget entry '{part}'")))?;
            let n: u64 = val
                .trim()
                .parse()
                .map_err(|_| Error::invalid(format!("budget value '{val}' is not an integer")))?;
            match key.trim() {
                "basis" => self.max_basis = n as usize,
                "pairs" => self.max_pairs = n as usize,
                "length" => self.length_cap = n as u32,
                "krange" => self.inner_k_cap = n as u32,
                other => return Err(Error::invalid(format!("unknown budget key '{other}'"))),
            }
        }
        Ok(self)
    }
}
