use std::fmt;

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Enumerativity {
    /// Counts actual maps for large degree, provided the target is weakly
    /// g-convex (or is a Grassmannian).
    EnumerativeIfWeaklyConvex,
    VirtualOnly,
    OutOfRegime,
}

impl fmt::Display for Enumerativity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Enumerativity::EnumerativeIfWeaklyConvex => "enumerative-if-weakly-convex",
            Enumerativity::VirtualOnly => "virtual-only",
            Enumerativity::OutOfRegime => "out-of-regime",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Advisory {
    pub kind: Enumerativity,
    pub reason: String,
}

impl Advisory {
    pub fn new(kind: Enumerativity, reason: impl Into<String>) -> Self {
        Advisory {
            kind,
            reason: reason.into(),
        }
    }
}

/// An exact virtual intersection number.
#[derive(Clone, Debug, PartialEq)]
pub struct VirtualCount {
    pub value: Rational,
    pub is_integer: bool,
    pub advisory: Advisory,
}

impl VirtualCount {
    /// Wraps a value that must be an integer; anything else is an internal
    /// error, never rounded.
    pub fn certified(value: Rational, advisory: Advisory) -> Result<Self> {
        if !value.is_integer() {
            return Err(Error::NonIntegral { value });
        }
        Ok(VirtualCount {
            value,
            is_integer: true,
            advisory,
        })
    }

    /// Wraps a value without demanding integrality; the flag records it.
    pub fn reported(value: Rational, advisory: Advisory) -> Self {
        VirtualCount {
            is_integer: value.is_integer(),
            value,
            advisory,
        }
    }

    pub fn approx(&self) -> f64 {
        self.value.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for VirtualCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}
