//! Shifted and unshifted tableaux in French notation: row 1 is the bottom
//! row, and row i of a shifted diagram starts in column i.

mod enumerate;
mod setvalued;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coxeter::Word;
use crate::error::{Error, Result};

pub use enumerate::{
    enumerate_increasing, enumerate_increasing_shifted, enumerate_setvalued, enumerate_standard,
    strict_partitions_within, SetFamily, SetValuedIter,
};
pub use setvalued::{standardize, tableau_descents, tableau_non_descents, Marked, SetValuedTableau};

pub type Cell = (usize, usize);

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct StrictPartition(Vec<usize>);

impl StrictPartition {
    pub fn new(parts: Vec<usize>) -> Result<StrictPartition> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::NotStrictPartition(parts));
        }
        Ok(StrictPartition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Cells of the shifted diagram `SD_λ`.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for (k, &part) in self.0.iter().enumerate() {
            let i = k + 1;
            out.extend((i..i + part).map(|j| (i, j)));
        }
        out
    }
}

impl TryFrom<Vec<usize>> for StrictPartition {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<StrictPartition> {
        StrictPartition::new(v)
    }
}

impl From<StrictPartition> for Vec<usize> {
    fn from(p: StrictPartition) -> Vec<usize> {
        p.0
    }
}

/// Written `4,2` as in the expansion tables.
impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    let s: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
    f.write_str(&s.join(","))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Partition> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Cells of the Young diagram `D_λ`.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for (k, &part) in self.0.iter().enumerate() {
            out.extend((1..=part).map(|j| (k + 1, j)));
        }
        out
    }

    /// All partitions whose diagram fits in a `rows × cols` box.
    pub fn within(rows: usize, cols: usize) -> Vec<Partition> {
        fn rec(rows: usize, max_part: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition(cur.clone()));
            if cur.len() == rows {
                return;
            }
            for p in 1..=max_part {
                cur.push(p);
                rec(rows, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(rows, cols, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Partition> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

/// A shifted or Young diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Shape {
    Shifted(StrictPartition),
    Young(Partition),
}

impl Shape {
    pub fn cells(&self) -> Vec<Cell> {
        match self {
            Shape::Shifted(p) => p.cells(),
            Shape::Young(p) => p.cells(),
        }
    }

    pub fn parts(&self) -> &[usize] {
        match self {
            Shape::Shifted(p) => p.parts(),
            Shape::Young(p) => p.parts(),
        }
    }

    pub fn is_shifted(&self) -> bool {
        matches!(self, Shape::Shifted(_))
    }
}

/// Shape of a finite set of cells, if it is a shifted diagram.
pub fn shifted_shape_of<'a>(cells: impl IntoIterator<Item = &'a Cell>) -> Option<StrictPartition> {
    let set: BTreeSet<Cell> = cells.into_iter().copied().collect();
    let mut parts = Vec::new();
    let mut i = 1;
    while set.range((i, 0)..(i + 1, 0)).next().is_some() {
        parts.push(set.range((i, 0)..(i + 1, 0)).count());
        i += 1;
    }
    let shape = StrictPartition::new(parts).ok()?;
    (shape.cells().into_iter().collect::<BTreeSet<_>>() == set).then_some(shape)
}

/// Shape of a finite set of cells, if it is a Young diagram.
pub fn young_shape_of<'a>(cells: impl IntoIterator<Item = &'a Cell>) -> Option<Partition> {
    let set: BTreeSet<Cell> = cells.into_iter().copied().collect();
    let mut parts = Vec::new();
    let mut i = 1;
    while set.range((i, 0)..(i + 1, 0)).next().is_some() {
        parts.push(set.range((i, 0)..(i + 1, 0)).count());
        i += 1;
    }
    let shape = Partition::new(parts).ok()?;
    (shape.cells().into_iter().collect::<BTreeSet<_>>() == set).then_some(shape)
}

/// `(a,b) ≺ (x,y)`: weakly southwest and distinct.
pub fn precedes(p: Cell, q: Cell) -> bool {
    p != q && p.0 <= q.0 && p.1 <= q.1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReadingOrder {
    Row,
    Col,
    NorthEast,
    SouthWest,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Closure {
    pub row_column: bool,
    pub row_diagonal: bool,
    pub column_diagonal: bool,
}

/// A map from finitely many cells to positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    cells: BTreeMap<Cell, u32>,
}

impl Tableau {
    pub fn new() -> Tableau {
        Tableau::default()
    }

    pub fn from_cells(cells: impl IntoIterator<Item = (Cell, u32)>) -> Tableau {
        Tableau { cells: cells.into_iter().collect() }
    }

    /// Shifted tableau from its rows, bottom row first.
    pub fn shifted(rows: &[&[u32]]) -> Tableau {
        let mut t = Tableau::new();
        for (k, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                t.set((k + 1, k + 1 + c), v);
            }
        }
        t
    }

    /// Young tableau from its rows, bottom row first.
    pub fn young(rows: &[&[u32]]) -> Tableau {
        let mut t = Tableau::new();
        for (k, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                t.set((k + 1, c + 1), v);
            }
        }
        t
    }

    pub fn get(&self, cell: Cell) -> Option<u32> {
        self.cells.get(&cell).copied()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.contains_key(&cell)
    }

    pub fn set(&mut self, cell: Cell, value: u32) {
        self.cells.insert(cell, value);
    }

    pub fn remove(&mut self, cell: Cell) -> Option<u32> {
        self.cells.remove(&cell)
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Cell, u32)> + '_ {
        self.cells.iter().map(|(&c, &v)| (c, v))
    }

    /// Entries of row i, left to right.
    pub fn row(&self, i: usize) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.cells.range((i, 0)..(i + 1, 0)).map(|(&(_, j), &v)| (j, v))
    }

    /// Entries of column j, bottom to top.
    pub fn col(&self, j: usize) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.cells.iter().filter(move |(&(_, c), _)| c == j).map(|(&(i, _), &v)| (i, v))
    }

    pub fn row_len(&self, i: usize) -> usize {
        self.row(i).count()
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

    /// Strictly increasing along every comparable pair of cells.
    pub fn is_increasing(&self) -> bool {
        self.cells.iter().all(|(&p, &a)| self.cells.iter().all(|(&q, &b)| !precedes(p, q) || a < b))
    }

    pub fn is_increasing_shifted(&self) -> bool {
        self.shifted_shape().is_some() && self.is_increasing()
    }

    pub fn reading_word(&self, order: ReadingOrder) -> Word {
        let mut cells: Vec<(Cell, u32)> = self.iter().collect();
        let key = |&((i, j), _): &(Cell, u32)| -> (i64, i64) {
            let (i, j) = (i as i64, j as i64);
            match order {
                ReadingOrder::Row => (-i, j),
                ReadingOrder::Col => (j, -i),
                ReadingOrder::NorthEast => (j - i, i),
                ReadingOrder::SouthWest => (j - i, -i),
            }
        };
        cells.sort_by_key(key);
        cells.into_iter().map(|(_, v)| v).collect()
    }

    pub fn row_word(&self) -> Word {
        self.reading_word(ReadingOrder::Row)
    }

    pub fn col_word(&self) -> Word {
        self.reading_word(ReadingOrder::Col)
    }

    pub fn closure(&self) -> Closure {
        let cells: Vec<Cell> = self.cells.keys().copied().collect();
        let mut c = Closure { row_column: true, row_diagonal: true, column_diagonal: true };
        for &(a, b) in &cells {
            for &(x, y) in &cells {
                if !precedes((a, b), (x, y)) {
                    continue;
                }
                if !self.contains((a, y)) {
                    c.row_column = false;
                }
                let (d1, d2) = (y as i64 - x as i64, b as i64 - a as i64);
                if d1 - d2 >= 0 {
                    let col = y as i64 - (d1 - d2);
                    if col < 1 || !self.contains((x, col as usize)) {
                        c.row_diagonal = false;
                    }
                }
                if d2 - d1 >= 0 && !self.contains((a + (d2 - d1) as usize, b)) {
                    c.column_diagonal = false;
                }
            }
        }
        c
    }

    /// Removable cells of a shifted tableau.
    pub fn inner_corners(&self) -> BTreeSet<Cell> {
        self.cells
            .keys()
            .copied()
            .filter(|&(i, j)| !self.contains((i, j + 1)) && !self.contains((i + 1, j)))
            .collect()
    }

    /// Addable cells of a shifted tableau.
    pub fn outer_corners(&self) -> BTreeSet<Cell> {
        let rows = self.num_rows();
        (1..=rows + 1).map(|i| (i, i + self.row_len(i))).filter(|&c| self.is_outer_corner(c)).collect()
    }

    pub fn is_outer_corner(&self, (i, j): Cell) -> bool {
        j >= 1
            && !self.contains((i, j))
            && (i == j || (j > 1 && self.contains((i, j - 1))))
            && (i == 1 || self.contains((i - 1, j)))
    }

    pub fn scale2(&self) -> Tableau {
        Tableau { cells: self.cells.iter().map(|(&c, &v)| (c, 2 * v)).collect() }
    }

    pub fn halve(&self) -> Result<Tableau> {
        if self.cells.values().any(|v| v % 2 == 1) {
            return Err(Error::OddEntry);
        }
        Ok(Tableau { cells: self.cells.iter().map(|(&c, &v)| (c, v / 2)).collect() })
    }

    /// Rows bottom first, each listed left to right.
    pub fn rows(&self) -> Vec<Vec<u32>> {
        (1..=self.num_rows()).map(|i| self.row(i).map(|(_, v)| v).collect()).collect()
    }

    /// Plain-text rendering with the bottom row last, as drawn in French
    /// notation.
    pub fn render(&self) -> String {
        render_grid(self.num_rows(), self.num_cols(), |c| self.get(c).map(|v| v.to_string()))
    }
}

pub(crate) fn render_grid(rows: usize, cols: usize, entry: impl Fn(Cell) -> Option<String>) -> String {
    let width = (1..=rows)
        .flat_map(|i| (1..=cols).map(move |j| (i, j)))
        .filter_map(&entry)
        .map(|s| s.chars().count())
        .max()
        .unwrap_or(1);
    let mut lines = Vec::new();
    for i in (1..=rows).rev() {
        let line: Vec<String> =
            (1..=cols).map(|j| format!("{:>width$}", entry((i, j)).unwrap_or_default())).collect();
        lines.push(line.join(" ").trim_end().to_string());
    }
    lines.join("\n")
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn example() -> Tableau {
        Tableau::from_cells([((1, 1), 1), ((1, 2), 2), ((2, 3), 3), ((3, 2), 4)])
    }

    #[test]
    fn reading_words() {
        let t = example();
        assert_eq!(t.reading_word(ReadingOrder::Row), w("4312"));
        assert_eq!(t.reading_word(ReadingOrder::Col), w("1423"));
        assert_eq!(t.reading_word(ReadingOrder::NorthEast), w("4123"));
        assert_eq!(t.reading_word(ReadingOrder::SouthWest), w("4132"));
        let single = Tableau::from_cells([((1, 1), 5)]);
        for o in [ReadingOrder::Row, ReadingOrder::Col, ReadingOrder::NorthEast, ReadingOrder::SouthWest] {
            assert_eq!(single.reading_word(o), w("5"));
        }
        assert_eq!(Tableau::shifted(&[&[2, 3, 4], &[4]]).row_word(), w("4234"));
    }

    #[test]
    fn closure_examples() {
        let t = Tableau::shifted(&[&[1, 2, 4, 7], &[3, 5, 8], &[6]]);
        assert_eq!(t.closure(), Closure { row_column: true, row_diagonal: true, column_diagonal: true });
        let e = Tableau::new().closure();
        assert!(e.row_column && e.row_diagonal && e.column_diagonal);
        let sparse = Tableau::from_cells([((1, 1), 1), ((2, 3), 2)]);
        assert!(!sparse.closure().row_column);
    }

    /// Add or remove a cell and re-test the shape.
    fn corner_oracle(t: &Tableau) -> (BTreeSet<Cell>, BTreeSet<Cell>) {
        let inner = t
            .iter()
            .map(|(c, _)| c)
            .filter(|&c| {
                let mut u = t.clone();
                u.remove(c);
                u.shifted_shape().is_some()
            })
            .collect();
        let mut outer = BTreeSet::new();
        for i in 1..=t.num_rows() + 1 {
            for j in i..=t.num_cols() + 1 {
                if !t.contains((i, j)) {
                    let mut u = t.clone();
                    u.set((i, j), 1);
                    if u.shifted_shape().is_some() {
                        outer.insert((i, j));
                    }
                }
            }
        }
        (inner, outer)
    }

    #[test]
    fn corners() {
        let t = Tableau::shifted(&[&[1, 2]]);
        assert_eq!(t.inner_corners(), BTreeSet::from([(1, 2)]));
        assert_eq!(t.outer_corners(), BTreeSet::from([(1, 3), (2, 2)]));
        assert!(Tableau::new().inner_corners().is_empty());
        assert_eq!(Tableau::new().outer_corners(), BTreeSet::from([(1, 1)]));
        let t = Tableau::shifted(&[&[1, 2, 3, 4], &[5, 6]]);
        assert_eq!(t.inner_corners(), BTreeSet::from([(1, 4), (2, 3)]));
        for shape in strict_partitions_within(5) {
            let t = Tableau::from_cells(shape.cells().into_iter().map(|c| (c, 1)));
            let (inner, outer) = corner_oracle(&t);
            assert_eq!(t.inner_corners(), inner, "{shape}");
            assert_eq!(t.outer_corners(), outer, "{shape}");
        }
    }

    #[test]
    fn doubling() {
        assert_eq!(w("3412").doubled(), w("6824"));
        let t = Tableau::shifted(&[&[2, 4, 8], &[6]]);
        assert_eq!(t.halve().unwrap(), Tableau::shifted(&[&[1, 2, 4], &[3]]));
        assert_eq!(t.halve().unwrap().scale2(), t);
        assert_eq!(Tableau::new().scale2(), Tableau::new());
        assert_eq!(Tableau::shifted(&[&[1]]).halve(), Err(Error::OddEntry));
    }

    #[test]
    fn shapes() {
        assert_eq!(Tableau::shifted(&[&[1, 2, 3], &[4]]).shifted_shape(), Some(StrictPartition(vec![3, 1])));
        assert_eq!(example().shifted_shape(), None);
        assert_eq!(Tableau::young(&[&[1, 2], &[3, 4]]).young_shape(), Some(Partition(vec![2, 2])));
        assert!(StrictPartition::new(vec![2, 2]).is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn render_french() {
        let t = Tableau::shifted(&[&[2, 3, 5], &[4, 6]]);
        assert_eq!(t.render(), "  4 6\n2 3 5");
    }
}
