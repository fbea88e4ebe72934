//! Work estimates for the exponential computations and the limits that gate them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;

/// Limits, in abstract work units, above which a computation is refused.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CostGate {
    /// Vertex subsets visited by the Hochster sum (`2^n`).
    pub hochster_subsets: u64,
    /// Lattice degrees times upper-Koszul complex size.
    pub koszul_units: u64,
    /// Exponent vectors swept by the bounded symbolic-power enumeration.
    pub enumeration_points: u64,
}

impl Default for CostGate {
    fn default() -> Self {
        CostGate {
            hochster_subsets: 1 << 27,
            koszul_units: 1 << 28,
            enumeration_points: 1 << 24,
        }
    }
}

impl CostGate {
    pub fn unlimited() -> Self {
        CostGate {
            hochster_subsets: u64::MAX,
            koszul_units: u64::MAX,
            enumeration_points: u64::MAX,
        }
    }

    pub fn check_hochster(&self, n: usize) -> Result<()> {
        let est = 1u64.checked_shl(n as u32).unwrap_or(u64::MAX);
        gate("Hochster sum", est, self.hochster_subsets)
    }

    /// Upper bound before the lcm lattice is built: the exponent box times `2^n`.
    pub fn check_koszul_box(&self, ideal: &MonomialIdeal) -> Result<()> {
        gate("upper-Koszul box", koszul_box_estimate(ideal), self.koszul_units)
    }

    pub fn check_koszul_lattice(&self, lattice_size: usize, n: usize) -> Result<()> {
        let est = (lattice_size as u64).saturating_mul(1u64.checked_shl(n as u32).unwrap_or(u64::MAX));
        gate("upper-Koszul lattice", est, self.koszul_units)
    }

    pub fn check_enumeration(&self, n: usize, s: u32) -> Result<()> {
        let est = (s as u64 + 1).checked_pow(n as u32).unwrap_or(u64::MAX);
        gate("symbolic-power enumeration", est, self.enumeration_points)
    }
}

fn gate(what: &str, estimate: u64, limit: u64) -> Result<()> {
    if estimate > limit {
        Err(Error::CostExceeded {
            what: what.to_string(),
            estimate,
            limit,
        })
    } else {
        Ok(())
    }
}

/// `prod_i (#distinct exponents of x_i + 1)`, an upper bound for the lcm lattice,
/// times the largest possible Koszul simplex count `2^n`. Saturates.
pub fn koszul_box_estimate(ideal: &MonomialIdeal) -> u64 {
    let n = ideal.n();
    let mut bound: u64 = 1;
    for i in 0..n {
        let mut exps: Vec<u32> = ideal.gens().iter().map(|g| g.exponents()[i]).filter(|&e| e > 0).collect();
        exps.sort_unstable();
        exps.dedup();
        bound = bound.saturating_mul(exps.len() as u64 + 1);
    }
    bound.saturating_mul(1u64.checked_shl(n as u32).unwrap_or(u64::MAX))
}
