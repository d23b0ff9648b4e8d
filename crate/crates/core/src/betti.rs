//! Graded Betti tables.
//!
//! `BettiTable` is indexed by the ideal: entry `(i, j)` is the rank of the
//! `i`-th syzygy module of `I` in internal degree `j`, so `i = 0` counts
//! minimal generators. The free module `F_{i+1}` in a resolution of `R/I`
//! corresponds to index `i`.

use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i32), u64>,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, i: usize, j: i32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, i: usize, j: i32, r: u64) {
        if r == 0 {
            return;
        }
        *self.entries.entry((i, j)).or_insert(0) += r;
    }

    /// Nonzero entries `(i, j, rank)` in increasing `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, i32, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &r)| (i, j, r))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest homological index with a nonzero entry.
    pub fn length(&self) -> Option<usize> {
        self.entries.keys().map(|k| k.0).max()
    }

    /// Total rank at homological index `i`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries.iter().filter(|(k, _)| k.0 == i).map(|(_, r)| r).sum()
    }

    /// Castelnuovo–Mumford regularity of the ideal, `max(j - i)`.
    pub fn regularity(&self) -> Option<i32> {
        self.entries.keys().map(|&(i, j)| j - i as i32).max()
    }

    /// Numerator `K(t)` of the Hilbert series of `R/I` over `(1-t)^N`.
    ///
    /// Index 0 of the result is the constant coefficient.
    pub fn hilbert_numerator(&self) -> Vec<i64> {
        let top = self.entries.keys().map(|k| k.1).max().unwrap_or(0).max(0) as usize;
        let mut out = vec![0i64; top + 1];
        out[0] = 1;
        for (&(i, j), &r) in &self.entries {
            // F_{i+1} enters with sign (-1)^{i+1}
            let s = if i % 2 == 0 { -1 } else { 1 };
            out[j as usize] += s * r as i64;
        }
        trim(&mut out);
        out
    }
}

pub(crate) fn trim(v: &mut Vec<i64>) {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
}

impl fmt::Display for BettiTable {
    /// Macaulay-style diagram: row `r` column `i` holds `β_{i, i+r}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return writeln!(f, "(zero)");
        }
        let cols = self.length().unwrap() + 1;
        let rmin = self.entries.keys().map(|&(i, j)| j - i as i32).min().unwrap();
        let rmax = self.regularity().unwrap();
        let cells: Vec<Vec<String>> = (rmin..=rmax)
            .map(|r| {
                (0..cols)
                    .map(|i| match self.get(i, r + i as i32) {
                        0 => ".".to_string(),
                        v => v.to_string(),
                    })
                    .collect()
            })
            .collect();
        let w = cells.iter().flatten().map(|s| s.len()).max().unwrap_or(1).max(cols.to_string().len());
        write!(f, "{:>4}:", "")?;
        for i in 0..cols {
            write!(f, " {:>w$}", i)?;
        }
        writeln!(f)?;
        for (k, row) in cells.iter().enumerate() {
            write!(f, "{:>4}:", rmin + k as i32)?;
            for c in row {
                write!(f, " {:>w$}", c)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn koszul_numerator() {
        // (x0, x1): two generators of degree 1, one syzygy of degree 2
        let mut b = BettiTable::new();
        b.add(0, 1, 2);
        b.add(1, 2, 1);
        assert_eq!(b.hilbert_numerator(), vec![1, -2, 1]);
        assert_eq!(b.regularity(), Some(1));
        assert_eq!(b.length(), Some(1));
    }
}
