//! Size guards for the exhaustive routines.

use crate::error::{Error, Result};

/// Upper bounds on enumeration sizes. Each exhaustive operation refuses to
/// start when its search space exceeds the matching bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// `p^dim` for the brute-force ideal check.
    pub ideal_oracle: u128,
    /// `p^dim` for the exhaustive trace search.
    pub trace_search: u128,
    /// `|R|^k` when enumerating a code over `R` from `k` generator rows.
    pub codeword_enumeration: u128,
    /// `|R|^n` for the brute-force dual code.
    pub dual_code: u128,
    /// Number of codewords handed to parameter computation.
    pub code_params: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            ideal_oracle: 1 << 12,
            trace_search: 1 << 20,
            codeword_enumeration: 1 << 22,
            dual_code: 1 << 24,
            code_params: 1 << 22,
        }
    }
}

impl Limits {
    /// Default limits multiplied by `factor`.
    pub fn scaled(factor: u128) -> Self {
        let d = Self::default();
        Self {
            ideal_oracle: d.ideal_oracle.saturating_mul(factor),
            trace_search: d.trace_search.saturating_mul(factor),
            codeword_enumeration: d.codeword_enumeration.saturating_mul(factor),
            dual_code: d.dual_code.saturating_mul(factor),
            code_params: d.code_params.saturating_mul(factor),
        }
    }
}

pub(crate) fn check(guard: &'static str, required: u128, limit: u128) -> Result<()> {
    if required > limit {
        return Err(Error::GuardExceeded {
            guard,
            required,
            limit,
        });
    }
    Ok(())
}

/// `base^exp`, saturating at `u128::MAX`.
pub(crate) fn pow_sat(base: u128, exp: usize) -> u128 {
    base.saturating_pow(exp.min(u32::MAX as usize) as u32)
}
