//! Set-valued tableaux over the marked alphabet 1′ < 1 < 2′ < 2 < ⋯.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::{precedes, render_grid, shifted_shape_of, young_shape_of, Cell, Partition, StrictPartition};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Marked {
    pub value: u32,
    pub primed: bool,
}

impl Marked {
    pub fn plain(value: u32) -> Marked {
        Marked { value, primed: false }
    }

    pub fn primed(value: u32) -> Marked {
        Marked { value, primed: true }
    }

    fn key(self) -> (u32, bool) {
        (self.value, !self.primed)
    }
}

impl Ord for Marked {
    fn cmp(&self, other: &Marked) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Marked {
    fn partial_cmp(&self, other: &Marked) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Marked {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.value, if self.primed { "'" } else { "" })
    }
}

/// A map from cells to nonempty multisets of marked letters, each stored
/// sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetValuedTableau {
    cells: BTreeMap<Cell, Vec<Marked>>,
}

impl SetValuedTableau {
    pub fn new() -> SetValuedTableau {
        SetValuedTableau::default()
    }

    pub fn from_cells(cells: impl IntoIterator<Item = (Cell, Vec<Marked>)>) -> SetValuedTableau {
        let mut t = SetValuedTableau::new();
        for (c, entries) in cells {
            for m in entries {
                t.add(c, m);
            }
        }
        t
    }

    /// Parse rows written bottom first, boxes separated by spaces and
    /// entries inside a box by commas, e.g. `["1 2',3'", "4"]`.
    pub fn shifted_from_rows(rows: &[&str]) -> Result<SetValuedTableau> {
        let mut t = SetValuedTableau::new();
        for (k, row) in rows.iter().enumerate() {
            for (c, cell) in row.split_whitespace().enumerate() {
                for e in cell.split(',') {
                    let (digits, primed) = match e.strip_suffix('\'') {
                        Some(d) => (d, true),
                        None => (e, false),
                    };
                    let value: u32 = digits.parse().map_err(|_| Error::Malformed(format!("entry {e:?}")))?;
                    t.add((k + 1, k + 1 + c), Marked { value, primed });
                }
            }
        }
        Ok(t)
    }

    pub fn get(&self, cell: Cell) -> Option<&[Marked]> {
        self.cells.get(&cell).map(Vec::as_slice)
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.contains_key(&cell)
    }

    pub fn add(&mut self, cell: Cell, m: Marked) {
        let entries = self.cells.entry(cell).or_default();
        let at = entries.partition_point(|e| *e <= m);
        entries.insert(at, m);
    }

    /// Remove one copy of `m` from `cell`, dropping the cell if it empties.
    pub fn remove_entry(&mut self, cell: Cell, m: Marked) -> bool {
        let Some(entries) = self.cells.get_mut(&cell) else {
            return false;
        };
        let Some(k) = entries.iter().position(|e| *e == m) else {
            return false;
        };
        entries.remove(k);
        if entries.is_empty() {
            self.cells.remove(&cell);
        }
        true
    }

    pub fn iter(&self) -> impl Iterator<Item = (Cell, &[Marked])> + '_ {
        self.cells.iter().map(|(&c, v)| (c, v.as_slice()))
    }

    /// `|T|`, the total number of entries.
    pub fn size(&self) -> usize {
        self.cells.values().map(Vec::len).sum()
    }

    pub fn num_cells(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn num_rows(&self) -> usize {
        self.cells.keys().map(|c| c.0).max().unwrap_or(0)
    }

    pub fn num_cols(&self) -> usize {
        self.cells.keys().map(|c| c.1).max().unwrap_or(0)
    }

    pub fn shifted_shape(&self) -> Option<StrictPartition> {
        shifted_shape_of(self.cells.keys())
    }

    pub fn young_shape(&self) -> Option<Partition> {
        young_shape_of(self.cells.keys())
    }

    pub fn domain(&self) -> BTreeSet<Cell> {
        self.cells.keys().copied().collect()
    }

    /// Number of entries with each value, primed or not.
    pub fn weight(&self) -> BTreeMap<u32, usize> {
        let mut w = BTreeMap::new();
        for m in self.cells.values().flatten() {
            *w.entry(m.value).or_insert(0) += 1;
        }
        w
    }

    /// Exponent vector of `x^T` in `m` variables; `None` if a value exceeds m.
    pub fn monomial(&self, m: usize) -> Option<Vec<u32>> {
        let mut exps = vec![0u32; m];
        for e in self.cells.values().flatten() {
            *exps.get_mut(e.value as usize - 1)? += 1;
        }
        Some(exps)
    }

    /// Cell and primedness of the label `n` in a standard tableau.
    pub fn find(&self, n: u32) -> Option<(Cell, bool)> {
        self.iter().find_map(|(c, es)| es.iter().find(|e| e.value == n).map(|e| (c, e.primed)))
    }

    /// Replace every entry `j`/`j′` by `seq[j−1]`/`seq[j−1]′`.
    pub fn relabel(&self, seq: &[u32]) -> SetValuedTableau {
        let mut t = SetValuedTableau::new();
        for (c, es) in self.iter() {
            for e in es {
                t.add(c, Marked { value: seq[e.value as usize - 1], primed: e.primed });
            }
        }
        t
    }

    fn increasing_pairs(&self, strict: bool) -> bool {
        self.cells.iter().all(|(&p, a)| {
            self.cells.iter().all(|(&q, b)| {
                if !precedes(p, q) {
                    return true;
                }
                let (hi, lo) = (*a.last().unwrap(), b[0]);
                if strict {
                    hi < lo
                } else {
                    hi <= lo
                }
            })
        })
    }

    fn diagonal_unprimed(&self) -> bool {
        self.iter().filter(|((i, j), _)| i == j).all(|(_, es)| es.iter().all(|e| !e.primed))
    }

    pub fn is_standard(&self) -> bool {
        self.standard_violation().is_none()
    }

    fn standard_violation(&self) -> Option<String> {
        if self.shifted_shape().is_none() {
            return Some("domain is not a shifted diagram".into());
        }
        if !self.diagonal_unprimed() {
            return Some("primed entry on the diagonal".into());
        }
        let mut values: Vec<u32> = self.cells.values().flatten().map(|m| m.value).collect();
        values.sort_unstable();
        if values.iter().enumerate().any(|(k, &v)| v as usize != k + 1) {
            return Some("labels are not exactly 1..n".into());
        }
        if !self.increasing_pairs(true) {
            return Some("not increasing".into());
        }
        None
    }

    pub fn check_standard(&self) -> Result<()> {
        match self.standard_violation() {
            None => Ok(()),
            Some(msg) => Err(Error::NotStandard(msg)),
        }
    }

    /// Semistandard shifted weak set-valued: weakly increasing, no primes on
    /// the diagonal, each unprimed value in at most one box per column and
    /// each primed value in at most one box per row.
    pub fn is_semistandard_weak(&self) -> bool {
        self.semistandard_violation().is_none()
    }

    fn semistandard_violation(&self) -> Option<String> {
        if self.shifted_shape().is_none() {
            return Some("domain is not a shifted diagram".into());
        }
        if !self.diagonal_unprimed() {
            return Some("primed entry on the diagonal".into());
        }
        if !self.increasing_pairs(false) {
            return Some("not weakly increasing".into());
        }
        for (&(i, j), a) in &self.cells {
            for (&(x, y), b) in &self.cells {
                if (i, j) >= (x, y) {
                    continue;
                }
                let shared =
                    a.iter().any(|e| b.contains(e) && ((j == y && !e.primed) || (i == x && e.primed)));
                if shared {
                    return Some(format!("repeated entry in boxes {:?} and {:?}", (i, j), (x, y)));
                }
            }
        }
        None
    }

    pub fn check_semistandard(&self) -> Result<()> {
        match self.semistandard_violation() {
            None => Ok(()),
            Some(msg) => Err(Error::NotSemistandard(msg)),
        }
    }

    /// Semistandard with genuine sets in every box.
    pub fn is_semistandard_set(&self) -> bool {
        self.is_semistandard_weak() && self.cells.values().all(|es| es.windows(2).all(|w| w[0] != w[1]))
    }

    pub fn is_marked(&self) -> bool {
        self.cells.values().all(|es| es.len() == 1)
    }

    /// Rows bottom first; each box rendered as `{a,b'}` or a bare entry.
    pub fn render(&self) -> String {
        render_grid(self.num_rows(), self.num_cols(), |c| {
            self.get(c).map(|es| {
                let inner: Vec<String> = es.iter().map(|e| e.to_string()).collect();
                if es.len() == 1 {
                    inner[0].clone()
                } else {
                    format!("{{{}}}", inner.join(","))
                }
            })
        })
    }
}

impl fmt::Display for SetValuedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Positions of labels 1..n in a standard tableau.
fn label_positions(q: &SetValuedTableau) -> Vec<(Cell, bool)> {
    let mut pos = vec![((0, 0), false); q.size()];
    for (c, es) in q.iter() {
        for e in es {
            pos[e.value as usize - 1] = (c, e.primed);
        }
    }
    pos
}

/// Descent set of a standard shifted set-valued tableau.
pub fn tableau_descents(q: &SetValuedTableau) -> Result<BTreeSet<usize>> {
    q.check_standard()?;
    let pos = label_positions(q);
    Ok((1..pos.len())
        .filter(|&i| {
            let ((r1, c1), p1) = pos[i - 1];
            let ((r2, c2), p2) = pos[i];
            (!p1 && p2) || (!p1 && !p2 && r2 > r1) || (p1 && p2 && c2 > c1)
        })
        .collect())
}

/// Non-descents by the complementary description: `i′` then `i+1`; `i`
/// then `i+1` weakly right and not in a higher row; `i′` then `(i+1)′`
/// weakly above and not in a column further right.
///
/// The last two clauses need the "not" parts: when `i+1` sits directly above
/// `i` (or `(i+1)′` directly right of `i′`) the position is a descent.
pub fn tableau_non_descents(q: &SetValuedTableau) -> Result<BTreeSet<usize>> {
    q.check_standard()?;
    let pos = label_positions(q);
    Ok((1..pos.len())
        .filter(|&i| {
            let ((r1, c1), p1) = pos[i - 1];
            let ((r2, c2), p2) = pos[i];
            (p1 && !p2) || (!p1 && !p2 && c2 >= c1 && r2 <= r1) || (p1 && p2 && r2 >= r1 && c2 <= c1)
        })
        .collect())
}

/// Standardization: relabel 1s left to right, then 2′s bottom to top, then
/// 2s left to right, and so on. Returns the standard tableau and the
/// weakly increasing sequence recording the original values.
pub fn standardize(q: &SetValuedTableau) -> Result<(SetValuedTableau, Vec<u32>)> {
    q.check_semistandard()?;
    let mut occurrences: Vec<(Marked, Cell)> = Vec::with_capacity(q.size());
    for (c, es) in q.iter() {
        occurrences.extend(es.iter().map(|&e| (e, c)));
    }
    occurrences.sort_by_key(|&(e, (i, j))| {
        let order = if e.primed { (i, j) } else { (j, i) };
        (e, order)
    });
    let mut std = SetValuedTableau::new();
    let mut seq = Vec::with_capacity(occurrences.len());
    for (k, (e, c)) in occurrences.into_iter().enumerate() {
        std.add(c, Marked { value: k as u32 + 1, primed: e.primed });
        seq.push(e.value);
    }
    debug_assert!(std.is_standard());
    Ok((std, seq))
}
