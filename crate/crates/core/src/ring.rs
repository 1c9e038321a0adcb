use std::sync::Arc;

use crate::error::{Error, Result};

/// The ambient polynomial ring, reduced to what monomial arithmetic needs:
/// an ordered list of variable names. The coefficient field is never
/// represented; all computations are coefficient-free.
///
/// Cloning is cheap (the name list is shared), so ideals carry their context
/// by value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingContext {
    names: Arc<[String]>,
}

impl RingContext {
    /// Builds a context from variable names. Names must be nonempty and
    /// pairwise distinct.
    pub fn new<S, I>(names: I) -> Result<Self>
    where
        S: Into<String>,
        I: IntoIterator<Item = S>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() || names.iter().any(String::is_empty) {
            return Err(Error::BadRing);
        }
        for (i, a) in names.iter().enumerate() {
            if names[i + 1..].contains(a) {
                return Err(Error::BadRing);
            }
        }
        Ok(Self {
            names: names.into(),
        })
    }

    /// Number of variables.
    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }
}
