//! Resource limits shared by the enumerators.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Caps {
    /// Longest 2-component cycle explored, in vertices.
    pub cycle_max_len: usize,
    /// Most 2-component cycles enumerated per component pair.
    pub cycle_max_count: usize,
    /// Longest kernel-search word, in A_Δ letters.
    pub kernel_depth: usize,
    /// Most live cells in a completion before it is abandoned.
    pub cell_cap: usize,
    /// Most A_Δ elements held by one kernel-search ball.
    pub kernel_ball_cap: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            cycle_max_len: 20,
            cycle_max_count: 10_000,
            kernel_depth: 10,
            cell_cap: 50_000,
            kernel_ball_cap: 250_000,
        }
    }
}

impl Caps {
    /// Apply `key=value` pairs separated by commas, e.g. `kernel_depth=8,cell_cap=100`.
    pub fn apply_overrides(&mut self, spec: &str) -> Result<()> {
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::BadParams(format!("cap override {item:?} is not key=value")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::BadParams(format!("cap {key} needs a positive integer")))?;
            self.set(key.trim(), value)?;
        }
        Ok(())
    }

    pub fn set(&mut self, key: &str, value: usize) -> Result<()> {
        if value == 0 {
            return Err(Error::BadParams(format!("cap {key} must be positive")));
        }
        let slot = match key {
            "cycle_max_len" => &mut self.cycle_max_len,
            "cycle_max_count" => &mut self.cycle_max_count,
            "kernel_depth" => &mut self.kernel_depth,
            "cell_cap" => &mut self.cell_cap,
            "kernel_ball_cap" => &mut self.kernel_ball_cap,
            other => return Err(Error::BadParams(format!("unknown cap {other}"))),
        };
        *slot = value;
        Ok(())
    }
}
