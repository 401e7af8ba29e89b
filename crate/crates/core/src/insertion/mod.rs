//! Symplectic Hecke insertion as walks in the forward transition graph, its
//! inverse graph, and the recording tableaux built from both.
//!
//! An insertion state is an increasing shifted tableau plus at most one
//! outer box. The outer box sits either at the far right of some row or at
//! the top of some column; only that side, its index and its value matter,
//! so the ambient frame is not stored.

mod ck;

use serde::{Deserialize, Serialize};

use crate::coxeter::{symplectic_fold, SpFold, Word};
use crate::error::{Error, Result};
use crate::tableau::{Cell, Marked, SetValuedTableau, Tableau};
use crate::words::word_descents;

pub use ck::{ck_insert, ck_insertion_tableau, CkMode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "side", rename_all = "lowercase")]
pub enum Outer {
    Row { row: usize, value: u32 },
    Col { col: usize, value: u32 },
}

impl Outer {
    pub fn value(&self) -> u32 {
        match *self {
            Outer::Row { value, .. } | Outer::Col { value, .. } => value,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InsertionState {
    pub base: Tableau,
    pub outer: Option<Outer>,
}

impl InsertionState {
    /// `T ⊕ a`: the outer box goes to the end of the first row.
    pub fn initial(base: Tableau, a: u32) -> InsertionState {
        InsertionState { base, outer: Some(Outer::Row { row: 1, value: a }) }
    }

    pub fn terminal(base: Tableau) -> InsertionState {
        InsertionState { base, outer: None }
    }

    pub fn is_terminal(&self) -> bool {
        self.outer.is_none()
    }

    pub fn is_initial(&self) -> bool {
        matches!(self.outer, Some(Outer::Row { row: 1, .. }))
    }

    /// The base with the outer box placed in its own extra column (row
    /// outer boxes) or extra row (column outer boxes), one cell away from
    /// the base.
    pub fn framed(&self) -> Tableau {
        let mut t = self.base.clone();
        match self.outer {
            Some(Outer::Row { row, value }) => t.set((row, self.base.num_cols() + 2), value),
            Some(Outer::Col { col, value }) => t.set((self.base.num_rows() + 2, col), value),
            None => {}
        }
        t
    }

    pub fn row_word(&self) -> Word {
        self.framed().row_word()
    }

    pub fn col_word(&self) -> Word {
        self.framed().col_word()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    R1,
    R2,
    R3,
    R4,
    D1,
    D2,
    D3,
    D4,
    C1,
    C2,
    C3,
    C4,
    #[serde(rename = "iR1")]
    IR1,
    #[serde(rename = "iR2")]
    IR2,
    #[serde(rename = "iR3")]
    IR3,
    #[serde(rename = "iR4")]
    IR4,
    #[serde(rename = "iD1")]
    ID1,
    #[serde(rename = "iD2")]
    ID2,
    #[serde(rename = "iD3")]
    ID3,
    #[serde(rename = "iD4")]
    ID4,
    #[serde(rename = "iC1")]
    IC1,
    #[serde(rename = "iC2")]
    IC2,
    #[serde(rename = "iC3a")]
    IC3a,
    #[serde(rename = "iC3b")]
    IC3b,
    #[serde(rename = "iC4")]
    IC4,
}

impl Kind {
    pub fn name(self) -> &'static str {
        use Kind::*;
        match self {
            R1 => "R1",
            R2 => "R2",
            R3 => "R3",
            R4 => "R4",
            D1 => "D1",
            D2 => "D2",
            D3 => "D3",
            D4 => "D4",
            C1 => "C1",
            C2 => "C2",
            C3 => "C3",
            C4 => "C4",
            IR1 => "iR1",
            IR2 => "iR2",
            IR3 => "iR3",
            IR4 => "iR4",
            ID1 => "iD1",
            ID2 => "iD2",
            ID3 => "iD3",
            ID4 => "iD4",
            IC1 => "iC1",
            IC2 => "iC2",
            IC3a => "iC3a",
            IC3b => "iC3b",
            IC4 => "iC4",
        }
    }

    /// The forward kind undone by an inverse kind (and vice versa for
    /// forward kinds, which map to themselves).
    pub fn forward(self) -> Kind {
        use Kind::*;
        match self {
            IR1 => R1,
            IR2 => R2,
            IR3 => R3,
            IR4 => R4,
            ID1 => D1,
            ID2 => D2,
            ID3 => D3,
            ID4 => D4,
            IC1 => C1,
            IC2 => C2,
            IC3a | IC3b => C3,
            IC4 => C4,
            k => k,
        }
    }

    /// Row and diagonal transitions; the rest are column transitions.
    pub fn is_row_or_diagonal(self) -> bool {
        use Kind::*;
        matches!(self.forward(), R1 | R2 | R3 | R4 | D1 | D2 | D3 | D4)
    }
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TransitionLabel {
    pub pos: Cell,
    pub kind: Kind,
}

/// Positions and kinds of one insertion. `split` counts the row-bumped
/// positions: everything up to and including the first diagonal cell, or
/// the whole path if it never meets the diagonal. The rest is column-bumped.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct BumpRecord {
    pub path: Vec<Cell>,
    pub kinds: Vec<Kind>,
    pub split: usize,
}

impl BumpRecord {
    fn from_labels(labels: &[TransitionLabel]) -> BumpRecord {
        BumpRecord {
            path: labels.iter().map(|l| l.pos).collect(),
            kinds: labels.iter().map(|l| l.kind).collect(),
            split: labels.iter().position(|l| l.pos.0 == l.pos.1).map_or(labels.len(), |k| k + 1),
        }
    }

    pub fn last(&self) -> Option<(Cell, Kind)> {
        Some((*self.path.last()?, *self.kinds.last()?))
    }
}

fn get(t: &Tableau, i: usize, j: usize) -> Option<u32> {
    if i == 0 || j == 0 {
        None
    } else {
        t.get((i, j))
    }
}

/// Whether writing `a` into `cell` keeps the neighbourhood increasing.
fn fits(t: &Tableau, (i, j): Cell, a: u32) -> bool {
    get(t, i, j - 1).is_none_or(|b| b < a)
        && get(t, i - 1, j).is_none_or(|b| b < a)
        && get(t, i, j + 1).is_none_or(|b| a < b)
        && get(t, i + 1, j).is_none_or(|b| a < b)
}

fn fits_new(t: &Tableau, cell: Cell, a: u32) -> bool {
    t.is_outer_corner(cell) && fits(t, cell, a)
}

/// The unique outgoing edge of a non-terminal state.
pub fn forward_step(u: &InsertionState) -> Result<(TransitionLabel, InsertionState)> {
    use Kind::*;
    let outer = u.outer.ok_or(Error::Terminal)?;
    let t = &u.base;
    let mut base = t.clone();
    let (pos, kind, next) = match outer {
        Outer::Row { row: i, value: a } => match t.row(i).find(|&(_, b)| a < b) {
            None => {
                let j = i + t.row_len(i);
                if fits_new(t, (i, j), a) {
                    base.set((i, j), a);
                    ((i, j), R1, None)
                } else {
                    ((i, j), R2, None)
                }
            }
            Some((x, b)) if x > i => {
                if fits(t, (i, x), a) {
                    base.set((i, x), a);
                    ((i, x), R4, Some(Outer::Row { row: i + 1, value: b }))
                } else if x > i + 1 || t.row_len(i + 1) > 0 {
                    ((i, x), R3, Some(Outer::Row { row: i + 1, value: b }))
                } else {
                    ((i, x), D1, Some(Outer::Col { col: i + 1, value: b }))
                }
            }
            Some((_, b)) => {
                if a % 2 != b % 2 {
                    ((i, i), D4, Some(Outer::Col { col: i + 1, value: b + 1 }))
                } else if fits(t, (i, i), a) {
                    base.set((i, i), a);
                    ((i, i), D3, Some(Outer::Col { col: i + 1, value: b }))
                } else {
                    ((i, i), D2, Some(Outer::Col { col: i + 1, value: b }))
                }
            }
        },
        Outer::Col { col: j, value: a } => match t.col(j).find(|&(_, b)| a < b) {
            None => {
                let i = t.col(j).count() + 1;
                if fits_new(t, (i, j), a) {
                    base.set((i, j), a);
                    ((i, j), C1, None)
                } else {
                    ((i, j), C2, None)
                }
            }
            Some((x, b)) => {
                let next = Some(Outer::Col { col: j + 1, value: b });
                if fits(t, (x, j), a) {
                    base.set((x, j), a);
                    ((x, j), C4, next)
                } else {
                    ((x, j), C3, next)
                }
            }
        },
    };
    Ok((TransitionLabel { pos, kind }, InsertionState { base, outer: next }))
}

/// Every edge of the walk from `T ⊕ a` to its terminal state.
pub fn insertion_path(t: &Tableau, a: u32) -> Vec<(TransitionLabel, InsertionState)> {
    let mut state = InsertionState::initial(t.clone(), a);
    let mut steps = Vec::new();
    while !state.is_terminal() {
        let (label, next) = forward_step(&state).expect("non-terminal state has an edge");
        steps.push((label, next.clone()));
        state = next;
    }
    steps
}

/// `T ←Sp a`, together with the bumping path.
pub fn sp_insert(t: &Tableau, a: u32) -> (Tableau, BumpRecord) {
    let steps = insertion_path(t, a);
    let labels: Vec<TransitionLabel> = steps.iter().map(|(l, _)| *l).collect();
    let result = match steps.into_iter().last() {
        Some((_, s)) => s.base,
        None => t.clone(),
    };
    (result, BumpRecord::from_labels(&labels))
}

/// `P_Sp(w)`, defined for every word.
pub fn sp_insertion_tableau(w: &[u32]) -> Tableau {
    w.iter().fold(Tableau::new(), |t, &a| sp_insert(&t, a).0)
}

fn is_symplectic(w: &[u32]) -> bool {
    symplectic_fold(w) != SpFold::Zero
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InsertionMode {
    Sp,
    O,
}

impl std::str::FromStr for InsertionMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<InsertionMode> {
        match s {
            "sp" => Ok(InsertionMode::Sp),
            "o" => Ok(InsertionMode::O),
            _ => Err(Error::Malformed(format!("unknown insertion mode {s:?}"))),
        }
    }
}

/// The result of inserting a whole word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Insertion {
    pub p: Tableau,
    pub q: SetValuedTableau,
    pub records: Vec<BumpRecord>,
}

fn last_in_column(q: &SetValuedTableau, j: usize) -> Option<Cell> {
    q.iter().map(|(c, _)| c).filter(|c| c.1 == j).max_by_key(|c| c.0)
}

fn last_in_row(q: &SetValuedTableau, i: usize) -> Option<Cell> {
    q.iter().map(|(c, _)| c).filter(|c| c.0 == i).max_by_key(|c| c.1)
}

/// Symplectic Hecke insertion of a symplectic Hecke word, recording each
/// step. Walk states are checked for admissibility in debug builds.
pub fn sp_insertion(w: &[u32]) -> Result<Insertion> {
    if !is_symplectic(w) {
        return Err(Error::NotSymplectic);
    }
    let mut p = Tableau::new();
    let mut q = SetValuedTableau::new();
    let mut records = Vec::with_capacity(w.len());
    for (k, &a) in w.iter().enumerate() {
        let n = k as u32 + 1;
        let steps = insertion_path(&p, a);
        debug_assert!(steps.iter().all(|(_, s)| is_admissible(s)));
        let labels: Vec<TransitionLabel> = steps.iter().map(|(l, _)| *l).collect();
        let last = *labels.last().expect("insertion takes at least one step");
        let (i, j) = last.pos;
        let (cell, mark) = match last.kind {
            Kind::R1 => ((i, j), Marked::plain(n)),
            Kind::C1 => ((i, j), Marked::primed(n)),
            Kind::R2 => (last_in_column(&q, j - 1).ok_or(Error::NotSymplectic)?, Marked::plain(n)),
            Kind::C2 => (last_in_row(&q, i - 1).ok_or(Error::NotSymplectic)?, Marked::primed(n)),
            _ => unreachable!("walks end with R1, R2, C1 or C2"),
        };
        q.add(cell, mark);
        p = steps.into_iter().last().expect("non-empty").1.base;
        records.push(BumpRecord::from_labels(&labels));
    }
    Ok(Insertion { p, q, records })
}

/// Orthogonal Hecke insertion: insert the doubled word symplectically and
/// halve the insertion tableau.
pub fn o_insertion(w: &[u32]) -> Result<Insertion> {
    let doubled: Vec<u32> = w.iter().map(|&a| 2 * a).collect();
    let ins = sp_insertion(&doubled)?;
    Ok(Insertion { p: ins.p.halve()?, ..ins })
}

pub fn insertion(w: &[u32], mode: InsertionMode) -> Result<Insertion> {
    match mode {
        InsertionMode::Sp => sp_insertion(w),
        InsertionMode::O => o_insertion(w),
    }
}

/// `(P, Q)` for the given mode.
pub fn p_and_q(w: &[u32], mode: InsertionMode) -> Result<(Tableau, SetValuedTableau)> {
    let ins = insertion(w, mode)?;
    Ok((ins.p, ins.q))
}

/// Checks that `i` is weakly increasing with a strict rise at each descent
/// of `w`.
pub fn check_factorization(w: &[u32], i: &[u32]) -> Result<()> {
    if w.len() != i.len() || i.contains(&0) {
        return Err(Error::NotAFactorization);
    }
    let des = word_descents(w);
    for k in 1..i.len() {
        if i[k - 1] > i[k] || (des.contains(&k) && i[k - 1] == i[k]) {
            return Err(Error::NotAFactorization);
        }
    }
    Ok(())
}

/// `Q(w, i)`: the recording tableau with label `j` replaced by `i_j`.
pub fn semistandard_record(w: &[u32], i: &[u32], mode: InsertionMode) -> Result<(Tableau, SetValuedTableau)> {
    check_factorization(w, i)?;
    let (p, q) = p_and_q(w, mode)?;
    Ok((p, q.relabel(i)))
}

/// Inverse of [`semistandard_record`]: standardize, then uninsert.
pub fn semistandard_inverse(
    p: &Tableau,
    q: &SetValuedTableau,
    mode: InsertionMode,
) -> Result<(Word, Vec<u32>)> {
    let (std, seq) = crate::tableau::standardize(q)?;
    let w = reconstruct_word(p, &std, mode)?;
    Ok((w, seq))
}

/// Full admissibility check; the error names the failed condition.
pub fn check_admissible(s: &InsertionState) -> Result<()> {
    let fail = |why: &str| Err(Error::NotAdmissible(why.to_string()));
    let t = &s.base;
    if !t.is_increasing_shifted() {
        return fail("base is not an increasing shifted tableau");
    }
    let val = |i: usize, j: usize| get(t, i, j).map_or(u64::MAX, u64::from);
    match s.outer {
        None => {
            if !is_symplectic(&t.row_word()) {
                return fail("reading word is not a symplectic Hecke word");
            }
        }
        Some(Outer::Row { row: i, value: a }) => {
            let a64 = u64::from(a);
            let weak = i == 1 || (i..=t.num_cols() + 1).any(|x| val(i - 1, x) <= a64 && a64 < val(i, x));
            if !weak {
                return fail("row outer box is not weakly admissible");
            }
            if !is_symplectic(&s.row_word()) {
                return fail("row reading word is not a symplectic Hecke word");
            }
            if i > 1 && get(t, i - 1, i) == Some(a) && !t.contains((i, i)) {
                return fail("outer value equals the entry below an empty diagonal box");
            }
        }
        Some(Outer::Col { col: j, value: a }) => {
            if j < 2 {
                return fail("column outer box in the first column");
            }
            let a64 = u64::from(a);
            let weak = get(t, j - 1, j) == Some(a) || (1..j).any(|x| val(x, j - 1) <= a64 && a64 < val(x, j));
            if !weak {
                return fail("column outer box is not weakly admissible");
            }
            if !is_symplectic(&s.col_word()) {
                return fail("column reading word is not a symplectic Hecke word");
            }
            if get(t, j - 1, j) == Some(a) && t.contains((j, j)) && a % 2 == 0 {
                return fail("even outer value equals the entry below an occupied diagonal box");
            }
            if get(t, 1, j - 1) == Some(a) {
                return fail("outer value equals the first-row entry of the previous column");
            }
        }
    }
    Ok(())
}

pub fn is_admissible(s: &InsertionState) -> bool {
    check_admissible(s).is_ok()
}

/// Which family of inverse edges to follow out of a terminal state.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Row,
    Col,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Seed {
    pub corner: Cell,
    pub flavor: Flavor,
}

fn larger(a: Option<u32>, b: Option<u32>) -> Option<u32> {
    a.max(b)
}

/// One edge `V ⇝ U` of the inverse transition graph, returned with the
/// label of the forward edge `U → V` it undoes. Terminal states need a
/// seed; every other non-initial admissible state has exactly one edge.
pub fn inverse_step(v: &InsertionState, seed: Option<Seed>) -> Result<(InsertionState, TransitionLabel)> {
    use Kind::*;
    check_admissible(v)?;
    let t = &v.base;
    let mut base = t.clone();
    let bad = |why: &str| Err(Error::NotAdmissible(why.to_string()));
    let (pos, kind, outer) = match v.outer {
        None => {
            let seed = seed.ok_or_else(|| Error::BadSeed("terminal state needs a seed".into()))?;
            let (i, j) = seed.corner;
            let inner = t.inner_corners().contains(&(i, j));
            let outer_corner = i >= 1 && j >= 1 && t.is_outer_corner((i, j));
            let corner_value = || larger(get(t, i - 1, j), get(t, i, j - 1));
            match seed.flavor {
                Flavor::Row if inner => {
                    let value = base.remove((i, j)).expect("inner corner is occupied");
                    ((i, j), IR1, Outer::Row { row: i, value })
                }
                Flavor::Row if outer_corner && i < j => {
                    let value = corner_value().expect("off-diagonal outer corner has a neighbour");
                    ((i, j), IR2, Outer::Row { row: i, value })
                }
                Flavor::Col if inner && i < j => {
                    let value = base.remove((i, j)).expect("inner corner is occupied");
                    ((i, j), IC1, Outer::Col { col: j, value })
                }
                Flavor::Col if outer_corner && i > 1 => {
                    let value = corner_value().expect("outer corner above row 1 has a neighbour");
                    ((i, j), IC2, Outer::Col { col: j, value })
                }
                _ => {
                    return Err(Error::BadSeed(format!(
                        "no {:?} inverse edge at corner ({i},{j})",
                        seed.flavor
                    )))
                }
            }
        }
        Some(_) if seed.is_some() => return Err(Error::BadSeed("only terminal states take seeds".into())),
        Some(Outer::Row { row: 1, .. }) => return Err(Error::Initial),
        Some(Outer::Row { row: i, value: a }) => {
            let Some(x) = (i..=t.num_cols()).rev().find(|&x| get(t, i - 1, x).is_some_and(|b| b <= a)) else {
                return bad("no entry below the outer value");
            };
            let b = get(t, i - 1, x).expect("found above");
            if b == a {
                let Some(value) = larger(get(t, i - 1, x - 1), get(t, i - 2, x)) else {
                    return bad("no replacement value for a row transition");
                };
                ((i - 1, x), IR3, Outer::Row { row: i - 1, value })
            } else {
                base.set((i - 1, x), a);
                ((i - 1, x), IR4, Outer::Row { row: i - 1, value: b })
            }
        }
        Some(Outer::Col { col: j, value: a }) => match get(t, j - 1, j - 1).filter(|&d| d <= a) {
            Some(d) => {
                let e = get(t, j - 1, j);
                if d == a {
                    let Some(f) = get(t, j - 2, j - 1) else {
                        return bad("outer value equals a diagonal entry in the first row");
                    };
                    if f % 2 == 0 {
                        ((j - 1, j - 1), ID2, Outer::Row { row: j - 1, value: f })
                    } else {
                        ((j - 1, j - 1), IC3a, Outer::Col { col: j - 1, value: f })
                    }
                } else if a % 2 == 1 {
                    ((j - 1, j - 1), ID4, Outer::Row { row: j - 1, value: d - 1 })
                } else if e == Some(a) {
                    let value = larger(Some(d), get(t, j - 2, j)).expect("d is defined");
                    ((j - 1, j), ID1, Outer::Row { row: j - 1, value })
                } else if e.is_none_or(|e| a < e) {
                    base.set((j - 1, j - 1), a);
                    ((j - 1, j - 1), ID3, Outer::Row { row: j - 1, value: d })
                } else {
                    return bad("outer value exceeds the entry right of the diagonal");
                }
            }
            None => {
                let Some(x) =
                    (1..j.saturating_sub(1)).rev().find(|&x| get(t, x, j - 1).is_some_and(|b| b <= a))
                else {
                    return bad("no entry below the outer value in the previous column");
                };
                let b = get(t, x, j - 1).expect("found above");
                if b == a {
                    let Some(value) = larger(get(t, x - 1, j - 1), get(t, x, j - 2)) else {
                        return bad("no replacement value for a column transition");
                    };
                    ((x, j - 1), IC3b, Outer::Col { col: j - 1, value })
                } else {
                    base.set((x, j - 1), a);
                    ((x, j - 1), IC4, Outer::Col { col: j - 1, value: b })
                }
            }
        },
    };
    Ok((InsertionState { base, outer: Some(outer) }, TransitionLabel { pos, kind }))
}

/// Follows inverse edges from `v` until an initial state is reached.
pub fn inverse_walk(
    v: &InsertionState,
    seed: Option<Seed>,
) -> Result<Vec<(InsertionState, TransitionLabel)>> {
    let mut steps = vec![inverse_step(v, seed)?];
    while !steps.last().expect("non-empty").0.is_initial() {
        let next = inverse_step(&steps.last().expect("non-empty").0, None)?;
        steps.push(next);
    }
    Ok(steps)
}

fn shape_domain(q: &SetValuedTableau) -> Tableau {
    Tableau::from_cells(q.domain().into_iter().map(|c| (c, 1)))
}

/// The seed that undoes the step which recorded the largest label of `q`.
pub fn uninsert_seed(q: &SetValuedTableau) -> Result<Seed> {
    let n = q.size() as u32;
    if n == 0 {
        return Err(Error::EmptyQ);
    }
    let ((i, j), primed) = q.find(n).ok_or_else(|| Error::NotStandard("largest label missing".into()))?;
    let alone = q.get((i, j)).map_or(0, |es| es.len()) == 1;
    let shape = shape_domain(q);
    let outer = shape.outer_corners();
    let seed = match (primed, alone) {
        (false, true) => Seed { corner: (i, j), flavor: Flavor::Row },
        (true, true) => Seed { corner: (i, j), flavor: Flavor::Col },
        (false, false) => {
            let corner = outer
                .iter()
                .copied()
                .find(|c| c.1 == j + 1)
                .ok_or_else(|| Error::BadSeed(format!("no outer corner in column {}", j + 1)))?;
            Seed { corner, flavor: Flavor::Row }
        }
        (true, false) => {
            let corner = outer
                .iter()
                .copied()
                .find(|c| c.0 == i + 1)
                .ok_or_else(|| Error::BadSeed(format!("no outer corner in row {}", i + 1)))?;
            Seed { corner, flavor: Flavor::Col }
        }
    };
    Ok(seed)
}

/// Removes the largest label of `q` and undoes the insertion that put it
/// there, prepending the uninserted letter to `w`.
pub fn uninsert(p: &Tableau, q: &SetValuedTableau, w: &Word) -> Result<(Tableau, SetValuedTableau, Word)> {
    if q.is_empty() {
        return Err(Error::EmptyQ);
    }
    q.check_standard()?;
    if !p.is_increasing_shifted() {
        return Err(Error::NotIncreasingShifted);
    }
    if p.shifted_shape() != q.shifted_shape() {
        return Err(Error::ShapeMismatch);
    }
    let mut full = p.row_word().into_vec();
    full.extend_from_slice(w);
    if !is_symplectic(&full) {
        return Err(Error::NotSymplectic);
    }
    let seed = uninsert_seed(q)?;
    let walk = inverse_walk(&InsertionState::terminal(p.clone()), Some(seed))?;
    let last = walk.into_iter().last().expect("non-empty").0;
    let a = last.outer.expect("initial state has an outer box").value();
    let n = q.size() as u32;
    let (cell, primed) = q.find(n).expect("checked by the seed");
    let mut q_hat = q.clone();
    q_hat.remove_entry(cell, Marked { value: n, primed });
    Ok((last.base, q_hat, w.prepend(a)))
}

/// The word whose insertion gives `(P, Q)`.
pub fn reconstruct_word(p: &Tableau, q: &SetValuedTableau, mode: InsertionMode) -> Result<Word> {
    if mode == InsertionMode::O {
        return reconstruct_word(&p.scale2(), q, InsertionMode::Sp)?.halved();
    }
    if p.shifted_shape() != q.shifted_shape() {
        return Err(Error::ShapeMismatch);
    }
    let (mut p, mut q, mut w) = (p.clone(), q.clone(), Word::empty());
    while !q.is_empty() {
        (p, q, w) = uninsert(&p, &q, &w)?;
    }
    if !p.is_empty() {
        return Err(Error::ShapeMismatch);
    }
    Ok(w)
}

#[cfg(test)]
mod tests;
