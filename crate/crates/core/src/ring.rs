use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

/// Ordered list of variable names of a polynomial ring over ℚ.
#[derive(Clone)]
pub struct Ring {
    names: Arc<[String]>,
}

impl Ring {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        Ring {
            names: names.iter().map(|s| s.as_ref().to_string()).collect(),
        }
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

    /// A name not already used by this ring, derived from `base`.
    pub fn fresh_name(&self, base: &str) -> String {
        if self.index_of(base).is_none() {
            return base.to_string();
        }
        (1..)
            .map(|k| format!("{base}{k}"))
            .find(|cand| self.index_of(cand).is_none())
            .expect("unbounded search")
    }

    /// Ring with an extra variable inserted at position `at`.
    pub fn insert(&self, at: usize, name: &str) -> Ring {
        let mut names: Vec<String> = self.names.to_vec();
        names.insert(at, name.to_string());
        Ring { names: names.into() }
    }

    /// Ring with the variable at `at` removed.
    pub fn remove(&self, at: usize) -> Ring {
        let mut names: Vec<String> = self.names.to_vec();
        names.remove(at);
        Ring { names: names.into() }
    }

    /// Ring whose variables are this ring's variables reordered by `perm`
    /// (new position `i` holds old variable `perm[i]`).
    pub fn permuted(&self, perm: &[usize]) -> Ring {
        Ring {
            names: perm.iter().map(|&i| self.names[i].clone()).collect(),
        }
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}]", self.names.join(","))
    }
}
