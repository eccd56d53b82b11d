//! Per-n tables of W_n: elements in window-lexicographic order, an index,
//! inverses, lengths and a lazily built multiplication table.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::error::{check_envelope, Result};
use crate::perm::SignedPerm;

/// Largest n for which group tables are materialized.
pub const MAX_N: usize = 6;

/// Largest n for which the full multiplication table is built.
pub const MAX_MUL_N: usize = 5;

pub fn order(n: usize) -> usize {
    (1..=n).product::<usize>() << n
}

pub struct GroupTable {
    pub n: usize,
    pub elems: Vec<SignedPerm>,
    index: HashMap<SignedPerm, usize>,
    pub inv: Vec<usize>,
    pub len: Vec<usize>,
    pub identity: usize,
    mul: OnceLock<Vec<u32>>,
}

impl GroupTable {
    fn build(n: usize) -> Self {
        let elems = if n == 0 { vec![SignedPerm::empty()] } else { SignedPerm::all(n) };
        let index: HashMap<SignedPerm, usize> =
            elems.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        let inv = elems.iter().map(|w| index[&w.inverse()]).collect();
        let len = elems.iter().map(|w| w.length()).collect();
        let identity = index[&SignedPerm::identity(n)];
        GroupTable { n, elems, index, inv, len, identity, mul: OnceLock::new() }
    }

    pub fn size(&self) -> usize {
        self.elems.len()
    }

    pub fn index_of(&self, w: &SignedPerm) -> usize {
        self.index[w]
    }

    pub fn get(&self, w: &SignedPerm) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// Index of `elems[a] ∘ elems[b]`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        if self.n <= MAX_MUL_N {
            self.mul_table()[a * self.size() + b] as usize
        } else {
            self.index[&self.elems[a].compose_unchecked(&self.elems[b])]
        }
    }

    fn mul_table(&self) -> &[u32] {
        self.mul.get_or_init(|| {
            let m = self.size();
            let mut t = vec![0u32; m * m];
            for (a, u) in self.elems.iter().enumerate() {
                for (b, v) in self.elems.iter().enumerate() {
                    t[a * m + b] = self.index[&u.compose_unchecked(v)] as u32;
                }
            }
            t
        })
    }
}

static TABLES: [OnceLock<GroupTable>; MAX_N + 1] = [
    OnceLock::new(),
    OnceLock::new(),
    OnceLock::new(),
    OnceLock::new(),
    OnceLock::new(),
    OnceLock::new(),
    OnceLock::new(),
];

/// The shared table for W_n, built on first use.
pub fn table(n: usize) -> Result<&'static GroupTable> {
    check_envelope("group tables", n, MAX_N)?;
    Ok(TABLES[n].get_or_init(|| GroupTable::build(n)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_are_consistent() {
        for n in 0..=3 {
            let g = table(n).unwrap();
            assert_eq!(g.size(), order(n));
            for a in 0..g.size() {
                assert_eq!(g.mul(a, g.inv[a]), g.identity);
                assert_eq!(g.mul(g.identity, a), a);
            }
        }
        assert!(table(7).is_err());
    }
}
