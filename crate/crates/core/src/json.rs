//! JSON forms of tableaux, insertion states and insertion traces.
//!
//! A tableau is `{"shape": [..], "kind": "shifted"|"young", "cells": [..]}`
//! with each cell carrying a list of `{"n", "primed"}` entries; integer
//! tableaux use a single unprimed entry per cell.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::insertion::{forward_step, insertion_path, InsertionState, Kind, Outer, TransitionLabel};
use crate::tableau::{
    shifted_shape_of, young_shape_of, Cell, Marked, Partition, SetValuedTableau, Shape, StrictPartition,
    Tableau,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ShapeKind {
    Shifted,
    Young,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    pub n: u32,
    pub primed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellJson {
    pub row: usize,
    pub col: usize,
    pub entries: Vec<EntryJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauJson {
    pub shape: Vec<usize>,
    pub kind: ShapeKind,
    pub cells: Vec<CellJson>,
}

/// Shifted if possible, otherwise Young.
fn shape_of(cells: &BTreeSet<Cell>) -> Result<Shape> {
    if let Some(s) = shifted_shape_of(cells) {
        return Ok(Shape::Shifted(s));
    }
    young_shape_of(cells)
        .map(Shape::Young)
        .ok_or_else(|| Error::Malformed("cells do not form a shifted or Young diagram".into()))
}

fn build(cells: Vec<CellJson>) -> Result<TableauJson> {
    let domain: BTreeSet<Cell> = cells.iter().map(|c| (c.row, c.col)).collect();
    let shape = shape_of(&domain)?;
    let kind = if shape.is_shifted() { ShapeKind::Shifted } else { ShapeKind::Young };
    Ok(TableauJson { shape: shape.parts().to_vec(), kind, cells })
}

impl TableauJson {
    pub fn from_tableau(t: &Tableau) -> Result<TableauJson> {
        build(
            t.iter()
                .map(|((row, col), n)| CellJson { row, col, entries: vec![EntryJson { n, primed: false }] })
                .collect(),
        )
    }

    pub fn from_setvalued(q: &SetValuedTableau) -> Result<TableauJson> {
        build(
            q.iter()
                .map(|((row, col), es)| CellJson {
                    row,
                    col,
                    entries: es.iter().map(|e| EntryJson { n: e.value, primed: e.primed }).collect(),
                })
                .collect(),
        )
    }

    /// Checks that the listed cells are exactly the diagram of `shape`.
    fn check_shape(&self) -> Result<()> {
        let shape = match self.kind {
            ShapeKind::Shifted => Shape::Shifted(StrictPartition::new(self.shape.clone())?),
            ShapeKind::Young => Shape::Young(Partition::new(self.shape.clone())?),
        };
        let want: BTreeSet<Cell> = shape.cells().into_iter().collect();
        let have: BTreeSet<Cell> = self.cells.iter().map(|c| (c.row, c.col)).collect();
        if want != have || have.len() != self.cells.len() {
            return Err(Error::Malformed("cells do not match the declared shape".into()));
        }
        if self.cells.iter().any(|c| c.entries.is_empty() || c.entries.iter().any(|e| e.n == 0)) {
            return Err(Error::Malformed("cells need nonempty lists of positive entries".into()));
        }
        Ok(())
    }

    pub fn to_tableau(&self) -> Result<Tableau> {
        self.check_shape()?;
        let mut t = Tableau::new();
        for c in &self.cells {
            match c.entries[..] {
                [EntryJson { n, primed: false }] => t.set((c.row, c.col), n),
                _ => {
                    return Err(Error::Malformed(format!(
                        "cell ({}, {}) must hold one unprimed entry",
                        c.row, c.col
                    )))
                }
            }
        }
        Ok(t)
    }

    pub fn to_setvalued(&self) -> Result<SetValuedTableau> {
        self.check_shape()?;
        Ok(SetValuedTableau::from_cells(self.cells.iter().map(|c| {
            let es = c.entries.iter().map(|e| Marked { value: e.n, primed: e.primed }).collect();
            ((c.row, c.col), es)
        })))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateJson {
    #[serde(flatten)]
    pub base: TableauJson,
    pub outer: Option<Outer>,
}

impl StateJson {
    pub fn from_state(s: &InsertionState) -> Result<StateJson> {
        Ok(StateJson { base: TableauJson::from_tableau(&s.base)?, outer: s.outer })
    }

    pub fn to_state(&self) -> Result<InsertionState> {
        Ok(InsertionState { base: self.base.to_tableau()?, outer: self.outer })
    }
}

/// One traced transition and the state it leads to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub label: [usize; 2],
    pub kind: Kind,
    pub state: StateJson,
}

impl TraceStep {
    pub fn new(label: TransitionLabel, state: &InsertionState) -> Result<TraceStep> {
        Ok(TraceStep {
            label: [label.pos.0, label.pos.1],
            kind: label.kind,
            state: StateJson::from_state(state)?,
        })
    }
}

/// Re-applies `forward_step` from `start` and checks every traced label and
/// state. Returns the final state.
pub fn replay(start: &InsertionState, trace: &[TraceStep]) -> Result<InsertionState> {
    let mut cur = start.clone();
    for (k, step) in trace.iter().enumerate() {
        let (label, next) = forward_step(&cur)?;
        if [label.pos.0, label.pos.1] != step.label
            || label.kind != step.kind
            || next != step.state.to_state()?
        {
            return Err(Error::Malformed(format!("trace diverges at step {}", k + 1)));
        }
        cur = next;
    }
    Ok(cur)
}

/// The steps of inserting every letter of `w` from the empty tableau, in
/// order, as one flat list.
pub fn insertion_trace(w: &[u32]) -> Result<Vec<TraceStep>> {
    let mut t = Tableau::new();
    let mut out = Vec::new();
    for &a in w {
        for (label, state) in insertion_path(&t, a) {
            out.push(TraceStep::new(label, &state)?);
            t = state.base;
        }
    }
    Ok(out)
}

/// Replays a flat trace of `w`: each letter starts from the previous
/// terminal state, and its walk runs to the next terminal step. Returns the
/// final tableau.
pub fn replay_word(w: &[u32], trace: &[TraceStep]) -> Result<Tableau> {
    let mut t = Tableau::new();
    let mut rest = trace;
    for &a in w {
        let len = rest
            .iter()
            .position(|s| s.state.outer.is_none())
            .ok_or_else(|| Error::Malformed("trace ends before the word does".into()))?;
        t = replay(&InsertionState::initial(t, a), &rest[..=len])?.base;
        rest = &rest[len + 1..];
    }
    if !rest.is_empty() {
        return Err(Error::Malformed("trace is longer than the word".into()));
    }
    Ok(t)
}
