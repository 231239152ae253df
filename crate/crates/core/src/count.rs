//! Exact counts paired with the closed form they were evaluated from.

use alloc::string::String;
use core::fmt;

use num_bigint::BigUint;
use num_traits::One;

/// An exact integer together with the symbolic expression in `p` that
/// produced it, e.g. `756` tagged `p^3(p^3+1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Count {
    pub value: BigUint,
    pub formula: String,
}

impl Count {
    pub fn new(value: BigUint, formula: impl Into<String>) -> Self {
        Count {
            value,
            formula: formula.into(),
        }
    }

    pub fn one() -> Self {
        Count::new(BigUint::one(), "1")
    }

    /// Renders as `value = formula @ p=<p>`.
    pub fn audit(&self, p: u64) -> String {
        alloc::format!("{} = {} @ p={}", self.value, self.formula, p)
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.value, self.formula)
    }
}
