use std::fmt;

use serde::{Deserialize, Serialize};

/// A glue on one side of a tile.
///
/// The empty label is the null glue; it never binds and must carry strength 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Glue {
    pub label: String,
    pub strength: u32,
}

impl Glue {
    pub fn new(label: impl Into<String>, strength: u32) -> Self {
        Self { label: label.into(), strength }
    }

    pub fn null() -> Self {
        Self { label: String::new(), strength: 0 }
    }

    pub fn is_null(&self) -> bool {
        self.label.is_empty()
    }
}

impl Default for Glue {
    fn default() -> Self {
        Self::null()
    }
}

impl fmt::Display for Glue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_null() {
            f.write_str("-")
        } else {
            write!(f, "{}:{}", self.label, self.strength)
        }
    }
}

/// Strength with which two facing glues bind: the shared strength when the
/// labels match and are non-null, zero otherwise.
pub fn glue_interaction(a: &Glue, b: &Glue) -> u32 {
    if !a.is_null() && a.label == b.label && a.strength == b.strength {
        a.strength
    } else {
        0
    }
}
