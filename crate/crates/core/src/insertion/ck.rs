//! Direct bumping for (FPF-)involution words, without insertion states.

use serde::{Deserialize, Serialize};

use crate::coxeter::{orthogonal_fold, symplectic_fold};
use crate::error::{Error, Result};
use crate::tableau::{Cell, Tableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CkMode {
    /// FPF-involution words; agrees with symplectic Hecke insertion.
    Fpf,
    /// Involution words; agrees with orthogonal Hecke insertion.
    Inv,
}

fn is_reduced(w: &[u32], mode: CkMode) -> bool {
    match mode {
        CkMode::Fpf => symplectic_fold(w).fpf().is_some_and(|z| z.stats().ell_hat == w.len()),
        CkMode::Inv => orthogonal_fold(w).stats().ell_hat == w.len(),
    }
}

#[derive(Clone, Copy)]
enum Line {
    Row(usize),
    Col(usize),
}

impl Line {
    fn cells(self, t: &Tableau) -> Vec<(Cell, u32)> {
        match self {
            Line::Row(i) => t.row(i).map(|(j, v)| ((i, j), v)).collect(),
            Line::Col(j) => t.col(j).map(|(i, v)| ((i, j), v)).collect(),
        }
    }

    fn end(self, t: &Tableau) -> Cell {
        match self {
            Line::Row(i) => (i, i + t.row_len(i)),
            Line::Col(j) => (t.col(j).count() + 1, j),
        }
    }

    fn after(self, (i, j): Cell) -> Cell {
        match self {
            Line::Row(_) => (i, j + 1),
            Line::Col(_) => (i + 1, j),
        }
    }
}

/// Inserts `a` into `t` by row/column bumping, returning the new tableau
/// and the bumped positions. Requires `row(t)·a` to be an FPF-involution
/// word (`Fpf`) or an involution word (`Inv`).
pub fn ck_insert(t: &Tableau, a: u32, mode: CkMode) -> Result<(Tableau, Vec<Cell>)> {
    let mut word = t.row_word().into_vec();
    word.push(a);
    if !is_reduced(&word, mode) {
        return Err(Error::NotReducedWord);
    }
    let mut t = t.clone();
    let mut path = Vec::new();
    let mut a = a;
    let mut diagonal = false;
    for k in 1.. {
        let line = if diagonal { Line::Col(k) } else { Line::Row(k) };
        let cells = line.cells(&t);
        let Some(idx) = cells.iter().position(|&(_, b)| a <= b) else {
            let end = line.end(&t);
            t.set(end, a);
            path.push(end);
            break;
        };
        let (cell, b) = cells[idx];
        let (from, bumped) = match mode {
            CkMode::Fpf if a == b => {
                let next = line.after(cell);
                let Some(&(c, _)) = cells.get(idx + 1).filter(|(c, _)| *c == next) else {
                    return Err(Error::NotReducedWord);
                };
                (c, a + 1)
            }
            CkMode::Fpf if matches!(line, Line::Row(_)) && idx == 0 && a % 2 != b % 2 => (cell, a + 2),
            CkMode::Inv if a == b => (cell, a + 1),
            _ => {
                t.set(cell, a);
                (cell, b)
            }
        };
        path.push(from);
        diagonal |= from.0 == from.1;
        a = bumped;
    }
    Ok((t, path))
}

/// Inserts a whole (FPF-)involution word from the empty tableau.
pub fn ck_insertion_tableau(w: &[u32], mode: CkMode) -> Result<Tableau> {
    w.iter().try_fold(Tableau::new(), |t, &a| ck_insert(&t, a, mode).map(|r| r.0))
}
