use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// The ambient polynomial ring `Q[x1, ..., xn]`. Its homogeneous maximal
/// ideal is generated by all variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
}

impl Ring {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Arc<Ring>> {
        if names.is_empty() {
            return Err(Error::InvalidRing("at least one variable is required".into()));
        }
        let mut seen = HashSet::new();
        let mut out = Vec::with_capacity(names.len());
        for name in names {
            let name = name.as_ref().trim();
            let valid = name
                .chars()
                .next()
                .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::InvalidRing(format!("bad variable name `{name}`")));
            }
            if !seen.insert(name.to_string()) {
                return Err(Error::InvalidRing(format!("duplicate variable `{name}`")));
            }
            out.push(name.to_string());
        }
        Ok(Arc::new(Ring { names: out }))
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub(crate) fn same(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
        Arc::ptr_eq(a, b) || a == b
    }

    pub(crate) fn check(a: &Arc<Ring>, b: &Arc<Ring>) -> Result<()> {
        if Ring::same(a, b) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}]", self.names.join(","))
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_empty() {
        assert!(Ring::new(&["x", "x"]).is_err());
        assert!(Ring::new::<&str>(&[]).is_err());
        assert!(Ring::new(&["1x"]).is_err());
        let r = Ring::new(&["x", "y", "z"]).unwrap();
        assert_eq!(r.nvars(), 3);
        assert_eq!(r.to_string(), "Q[x,y,z]");
        assert_eq!(r.index_of("z"), Some(2));
    }
}
