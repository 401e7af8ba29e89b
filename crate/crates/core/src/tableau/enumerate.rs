//! Bounded enumerators for increasing, standard and semistandard tableaux.

use super::{precedes, Cell, Marked, SetValuedTableau, Shape, StrictPartition, Tableau};
use crate::error::{Error, Result};

const SHAPE_CELL_CAP: usize = 64;
const CANDIDATE_CAP: usize = 2_000_000;

/// All strict partitions with largest part at most `max_part`, including the
/// empty one.
pub fn strict_partitions_within(max_part: usize) -> Vec<StrictPartition> {
    let mut out = Vec::new();
    for mask in 0u64..(1 << max_part) {
        let parts: Vec<usize> = (1..=max_part).rev().filter(|p| mask >> (p - 1) & 1 == 1).collect();
        out.push(StrictPartition::new(parts).unwrap());
    }
    out.sort();
    out
}

/// Left and lower neighbours of each cell, as indices into `cells` (which
/// lists cells row by row, bottom row first).
fn neighbours(cells: &[Cell]) -> Vec<(Option<usize>, Option<usize>)> {
    cells
        .iter()
        .map(|&(i, j)| {
            let left = cells.iter().position(|&c| c == (i, j.wrapping_sub(1)));
            let below = cells.iter().position(|&c| c == (i.wrapping_sub(1), j));
            (left, below)
        })
        .collect()
}

/// All increasing tableaux of the given shape with entries in `[max_entry]`.
pub fn enumerate_increasing(shape: &Shape, max_entry: u32) -> Result<Vec<Tableau>> {
    let cells = shape.cells();
    if cells.len() > SHAPE_CELL_CAP {
        return Err(Error::CapExceeded { what: "shape size", limit: SHAPE_CELL_CAP });
    }
    let nb = neighbours(&cells);
    let mut out = Vec::new();
    let mut values = vec![0u32; cells.len()];
    fn rec(
        k: usize,
        cells: &[Cell],
        nb: &[(Option<usize>, Option<usize>)],
        max_entry: u32,
        values: &mut Vec<u32>,
        out: &mut Vec<Tableau>,
    ) {
        if k == cells.len() {
            out.push(Tableau::from_cells(cells.iter().copied().zip(values.iter().copied())));
            return;
        }
        let (l, b) = nb[k];
        let lo = l.map_or(0, |x| values[x]).max(b.map_or(0, |x| values[x])) + 1;
        for v in lo..=max_entry {
            values[k] = v;
            rec(k + 1, cells, nb, max_entry, values, out);
        }
    }
    rec(0, &cells, &nb, max_entry, &mut values, &mut out);
    Ok(out)
}

pub fn enumerate_increasing_shifted(shape: &StrictPartition, max_entry: u32) -> Result<Vec<Tableau>> {
    enumerate_increasing(&Shape::Shifted(shape.clone()), max_entry)
}

/// All standard shifted set-valued tableaux of the given shape with labels
/// `1..=n`.
pub fn enumerate_standard(shape: &StrictPartition, n: usize) -> Vec<SetValuedTableau> {
    let cells = shape.cells();
    if n < cells.len() {
        return Vec::new();
    }
    let before: Vec<Vec<usize>> =
        cells.iter().map(|&c| (0..cells.len()).filter(|&k| precedes(cells[k], c)).collect()).collect();
    let after: Vec<Vec<usize>> =
        cells.iter().map(|&c| (0..cells.len()).filter(|&k| precedes(c, cells[k])).collect()).collect();
    let mut out = Vec::new();
    let mut filled = vec![0usize; cells.len()];
    let mut t = SetValuedTableau::new();
    #[allow(clippy::too_many_arguments)]
    fn rec(
        label: usize,
        n: usize,
        cells: &[Cell],
        before: &[Vec<usize>],
        after: &[Vec<usize>],
        filled: &mut Vec<usize>,
        t: &mut SetValuedTableau,
        out: &mut Vec<SetValuedTableau>,
    ) {
        let empty = filled.iter().filter(|&&f| f == 0).count();
        if label > n {
            if empty == 0 {
                out.push(t.clone());
            }
            return;
        }
        if n - label + 1 < empty {
            return;
        }
        for k in 0..cells.len() {
            if before[k].iter().any(|&b| filled[b] == 0) || after[k].iter().any(|&a| filled[a] > 0) {
                continue;
            }
            let diagonal = cells[k].0 == cells[k].1;
            for primed in [false, true] {
                if primed && diagonal {
                    continue;
                }
                let m = Marked { value: label as u32, primed };
                t.add(cells[k], m);
                filled[k] += 1;
                rec(label + 1, n, cells, before, after, filled, t, out);
                filled[k] -= 1;
                t.remove_entry(cells[k], m);
            }
        }
    }
    rec(1, n, &cells, &before, &after, &mut filled, &mut t, &mut out);
    out.sort();
    out
}

/// Families of semistandard set-valued tableaux.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetFamily {
    /// Shifted, sets of marked letters (the tableaux behind `GP_λ`).
    ShiftedSet,
    /// Shifted, multisets of marked letters (recording tableaux `Q(w, i)`).
    ShiftedWeak,
    /// Shifted, one marked letter per box.
    ShiftedMarked,
    /// Young diagram, sets of unprimed letters (the tableaux behind `G_λ`).
    YoungSet,
}

impl SetFamily {
    fn shifted(self) -> bool {
        !matches!(self, SetFamily::YoungSet)
    }
}

/// Streams every tableau of `family` on `shape` with values in
/// `[max_value]` and at most `max_length` entries in total.
pub fn enumerate_setvalued(
    shape: &Shape,
    family: SetFamily,
    max_value: u32,
    max_length: usize,
) -> Result<SetValuedIter> {
    if shape.is_shifted() != family.shifted() {
        return Err(Error::Malformed("tableau family does not match the diagram kind".into()));
    }
    let cells = shape.cells();
    if cells.len() > SHAPE_CELL_CAP {
        return Err(Error::CapExceeded { what: "shape size", limit: SHAPE_CELL_CAP });
    }
    let alphabet: Vec<Marked> = (1..=max_value)
        .flat_map(|v| {
            let primed = family.shifted().then_some(Marked::primed(v));
            primed.into_iter().chain([Marked::plain(v)])
        })
        .collect();
    let max_box = match family {
        SetFamily::ShiftedMarked => 1,
        _ => (max_length + 1).saturating_sub(cells.len()),
    };
    let repeats = family == SetFamily::ShiftedWeak;
    let mut candidates = Vec::new();
    let mut cur = Vec::new();
    collect_candidates(&alphabet, 0, max_box, repeats, &mut cur, &mut candidates)?;
    candidates.sort_by(|a: &Vec<Marked>, b| (a.len(), a).cmp(&(b.len(), b)));
    Ok(SetValuedIter {
        nb: neighbours(&cells),
        cells,
        family,
        candidates,
        max_length,
        stack: Vec::new(),
        used: vec![0],
        resume: 0,
        done: max_length < shape.cells().len(),
    })
}

fn collect_candidates(
    alphabet: &[Marked],
    from: usize,
    max_box: usize,
    repeats: bool,
    cur: &mut Vec<Marked>,
    out: &mut Vec<Vec<Marked>>,
) -> Result<()> {
    if !cur.is_empty() {
        if out.len() >= CANDIDATE_CAP {
            return Err(Error::CapExceeded { what: "box contents", limit: CANDIDATE_CAP });
        }
        out.push(cur.clone());
    }
    if cur.len() == max_box {
        return Ok(());
    }
    for k in from..alphabet.len() {
        cur.push(alphabet[k]);
        collect_candidates(alphabet, if repeats { k } else { k + 1 }, max_box, repeats, cur, out)?;
        cur.pop();
    }
    Ok(())
}

/// Depth-first iterator over one family of set-valued tableaux.
pub struct SetValuedIter {
    cells: Vec<Cell>,
    nb: Vec<(Option<usize>, Option<usize>)>,
    family: SetFamily,
    candidates: Vec<Vec<Marked>>,
    max_length: usize,
    /// Candidate index chosen for each filled cell.
    stack: Vec<usize>,
    /// Running entry counts; `used[k]` is the total over the first k cells.
    used: Vec<usize>,
    resume: usize,
    done: bool,
}

impl SetValuedIter {
    fn fits(&self, k: usize, cand: &[Marked]) -> bool {
        let remaining = self.cells.len() - k - 1;
        if self.used[k] + cand.len() + remaining > self.max_length {
            return false;
        }
        let (i, j) = self.cells[k];
        let lo = cand[0];
        if self.family.shifted() && i == j && cand.iter().any(|m| m.primed) {
            return false;
        }
        let (left, below) = self.nb[k];
        if let Some(l) = left {
            let hi = *self.candidates[self.stack[l]].last().unwrap();
            if hi > lo || (hi == lo && hi.primed) {
                return false;
            }
        }
        if let Some(b) = below {
            let hi = *self.candidates[self.stack[b]].last().unwrap();
            let clash = match self.family {
                SetFamily::YoungSet => hi == lo,
                _ => hi == lo && !hi.primed,
            };
            if hi > lo || clash {
                return false;
            }
        }
        true
    }

    fn build(&self) -> SetValuedTableau {
        SetValuedTableau::from_cells(
            self.cells.iter().zip(&self.stack).map(|(&c, &k)| (c, self.candidates[k].clone())),
        )
    }
}

impl Iterator for SetValuedIter {
    type Item = SetValuedTableau;

    fn next(&mut self) -> Option<SetValuedTableau> {
        if self.done {
            return None;
        }
        loop {
            let d = self.stack.len();
            if d == self.cells.len() {
                let out = self.build();
                match self.stack.pop() {
                    Some(k) => {
                        self.used.pop();
                        self.resume = k + 1;
                    }
                    None => self.done = true,
                }
                return Some(out);
            }
            let found = (self.resume..self.candidates.len()).find(|&k| self.fits(d, &self.candidates[k]));
            match found {
                Some(k) => {
                    self.stack.push(k);
                    self.used.push(self.used[d] + self.candidates[k].len());
                    self.resume = 0;
                }
                None => match self.stack.pop() {
                    Some(k) => {
                        self.used.pop();
                        self.resume = k + 1;
                    }
                    None => {
                        self.done = true;
                        return None;
                    }
                },
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::Partition;
    use std::collections::BTreeSet;

    fn sp(parts: &[usize]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    /// Brute force over every assignment of entries in `[max]`.
    fn brute_increasing(shape: &StrictPartition, max: u32) -> usize {
        let cells = shape.cells();
        let mut count = 0;
        let total = (max as usize).pow(cells.len() as u32);
        for code in 0..total {
            let mut c = code;
            let t = Tableau::from_cells(cells.iter().map(|&cell| {
                let v = (c % max as usize) as u32 + 1;
                c /= max as usize;
                (cell, v)
            }));
            if t.is_increasing() {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn increasing_examples() {
        let got = enumerate_increasing_shifted(&sp(&[2]), 3).unwrap();
        let want =
            vec![Tableau::shifted(&[&[1, 2]]), Tableau::shifted(&[&[1, 3]]), Tableau::shifted(&[&[2, 3]])];
        assert_eq!(got.into_iter().collect::<BTreeSet<_>>(), want.into_iter().collect());
        assert_eq!(enumerate_increasing_shifted(&sp(&[1]), 1).unwrap(), vec![Tableau::shifted(&[&[1]])]);
        assert_eq!(
            enumerate_increasing_shifted(&sp(&[3, 1]), 4).unwrap().len(),
            brute_increasing(&sp(&[3, 1]), 4)
        );
        for shape in strict_partitions_within(4) {
            if shape.size() <= 5 {
                assert_eq!(
                    enumerate_increasing_shifted(&shape, 5).unwrap().len(),
                    brute_increasing(&shape, 5)
                );
            }
        }
    }

    fn all_multisets(alphabet: &[Marked], max: usize, repeats: bool) -> Vec<Vec<Marked>> {
        let mut out = Vec::new();
        collect_candidates(alphabet, 0, max, repeats, &mut Vec::new(), &mut out).unwrap();
        out
    }

    /// Assign every box every candidate and filter with the validators.
    fn brute_setvalued(
        shape: &StrictPartition,
        family: SetFamily,
        max_value: u32,
        max_length: usize,
    ) -> BTreeSet<SetValuedTableau> {
        let cells = shape.cells();
        let alphabet: Vec<Marked> =
            (1..=max_value).flat_map(|v| [Marked::primed(v), Marked::plain(v)]).collect();
        let boxes = match family {
            SetFamily::ShiftedMarked => all_multisets(&alphabet, 1, false),
            SetFamily::ShiftedSet => all_multisets(&alphabet, max_length, false),
            _ => all_multisets(&alphabet, max_length, true),
        };
        let mut out = BTreeSet::new();
        let mut idx = vec![0usize; cells.len()];
        loop {
            let t =
                SetValuedTableau::from_cells(cells.iter().zip(&idx).map(|(&c, &k)| (c, boxes[k].clone())));
            let ok = t.size() <= max_length
                && match family {
                    SetFamily::ShiftedSet => t.is_semistandard_set(),
                    _ => t.is_semistandard_weak(),
                };
            if ok {
                out.insert(t);
            }
            let mut k = 0;
            loop {
                if k == idx.len() {
                    return out;
                }
                idx[k] += 1;
                if idx[k] < boxes.len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    }

    #[test]
    fn setvalued_matches_brute_force() {
        for (parts, family, m, len) in [
            (vec![2], SetFamily::ShiftedMarked, 2, 2),
            (vec![2], SetFamily::ShiftedSet, 2, 4),
            (vec![2], SetFamily::ShiftedWeak, 2, 4),
            (vec![2, 1], SetFamily::ShiftedWeak, 3, 4),
            (vec![3], SetFamily::ShiftedSet, 2, 4),
            (vec![1], SetFamily::ShiftedWeak, 3, 3),
        ] {
            let shape = sp(&parts);
            let got: Vec<SetValuedTableau> =
                enumerate_setvalued(&Shape::Shifted(shape.clone()), family, m, len).unwrap().collect();
            let set: BTreeSet<_> = got.iter().cloned().collect();
            assert_eq!(set.len(), got.len());
            assert_eq!(set, brute_setvalued(&shape, family, m, len), "{parts:?} {family:?}");
        }
    }

    #[test]
    fn setvalued_examples() {
        let marked: Vec<_> =
            enumerate_setvalued(&Shape::Shifted(sp(&[2])), SetFamily::ShiftedMarked, 2, 2).unwrap().collect();
        let rows = |s: &[&str]| SetValuedTableau::shifted_from_rows(s).unwrap();
        assert!(marked.contains(&rows(&["1 2"])));
        assert!(marked.contains(&rows(&["1 2'"])));
        assert_eq!(
            enumerate_setvalued(&Shape::Shifted(sp(&[2])), SetFamily::ShiftedSet, 3, 1).unwrap().count(),
            0
        );
        let young: BTreeSet<Vec<u32>> =
            enumerate_setvalued(&Shape::Young(Partition::new(vec![1]).unwrap()), SetFamily::YoungSet, 2, 2)
                .unwrap()
                .map(|t| t.get((1, 1)).unwrap().iter().map(|m| m.value).collect())
                .collect();
        assert_eq!(young, BTreeSet::from([vec![1], vec![2], vec![1, 2]]));
        let empty: Vec<_> =
            enumerate_setvalued(&Shape::Shifted(sp(&[])), SetFamily::ShiftedSet, 2, 2).unwrap().collect();
        assert_eq!(empty, vec![SetValuedTableau::new()]);
    }

    #[test]
    fn young_columns_strict() {
        let shape = Shape::Young(Partition::new(vec![1, 1]).unwrap());
        for t in enumerate_setvalued(&shape, SetFamily::YoungSet, 3, 4).unwrap() {
            let (a, b) = (t.get((1, 1)).unwrap(), t.get((2, 1)).unwrap());
            assert!(a.last().unwrap() < &b[0]);
        }
    }

    #[test]
    fn standard_tableaux() {
        let all = enumerate_standard(&sp(&[2, 1]), 3);
        assert!(all.iter().all(SetValuedTableau::is_standard));
        // (2,1): labels 1,2,3 in cells (1,1),(1,2),(2,2); 2 may be primed.
        assert_eq!(all.len(), 2);
        let four = enumerate_standard(&sp(&[2]), 3);
        assert!(four.iter().all(|t| t.is_standard() && t.size() == 3));
        assert_eq!(four.len(), brute_standard(&sp(&[2]), 3));
        assert_eq!(enumerate_standard(&sp(&[3, 1]), 5).len(), brute_standard(&sp(&[3, 1]), 5));
    }

    fn brute_standard(shape: &StrictPartition, n: usize) -> usize {
        let cells = shape.cells();
        let choices = cells.len() * 2;
        let mut count = 0;
        for code in 0..choices.pow(n as u32) {
            let mut c = code;
            let mut t = SetValuedTableau::new();
            for label in 1..=n as u32 {
                let k = c % choices;
                c /= choices;
                t.add(cells[k / 2], Marked { value: label, primed: k % 2 == 1 });
            }
            if t.domain().len() == cells.len() && t.is_standard() {
                count += 1;
            }
        }
        count
    }
}
