//! Hecke, orthogonal Hecke and symplectic Hecke words: membership,
//! bounded enumeration, atoms, and congruence closures.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coxeter::{
    demazure_product, orthogonal_fold, symplectic_fold, FpfInvolution, Involution, Permutation, SpFold, Word,
};
use crate::error::{Error, Result};

/// A word family together with its target.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "mode", content = "target", rename_all = "lowercase")]
pub enum WordMode {
    Plain(Permutation),
    Orthogonal(Involution),
    Symplectic(FpfInvolution),
}

impl WordMode {
    /// The bound n: member words only use letters below n.
    pub fn support(&self) -> usize {
        match self {
            WordMode::Plain(p) => p.support(),
            WordMode::Orthogonal(y) => y.support(),
            WordMode::Symplectic(z) => z.support(),
        }
    }

    /// Length of the reduced member words: ℓ(π), ℓ̂(y) or ℓ̂_FPF(z).
    pub fn min_length(&self) -> usize {
        match self {
            WordMode::Plain(p) => p.length(),
            WordMode::Orthogonal(y) => y.stats().ell_hat,
            WordMode::Symplectic(z) => z.stats().ell_hat,
        }
    }

    pub fn is_member(&self, w: &[u32], reduced_only: bool) -> bool {
        let folds = match self {
            WordMode::Plain(p) => demazure_product(w) == *p,
            WordMode::Orthogonal(y) => orthogonal_fold(w) == *y,
            WordMode::Symplectic(z) => symplectic_fold(w).fpf() == Some(z),
        };
        folds && (!reduced_only || w.len() == self.min_length())
    }

    /// The same family for the starred target.
    pub fn star(&self) -> WordMode {
        match self {
            WordMode::Plain(p) => WordMode::Plain(p.star()),
            WordMode::Orthogonal(y) => WordMode::Orthogonal(y.star()),
            WordMode::Symplectic(z) => WordMode::Symplectic(z.star()),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            WordMode::Plain(_) => "plain",
            WordMode::Orthogonal(_) => "o",
            WordMode::Symplectic(_) => "sp",
        }
    }

    pub fn target_oneline(&self) -> &[u32] {
        match self {
            WordMode::Plain(p) => p.oneline(),
            WordMode::Orthogonal(y) => y.perm().oneline(),
            WordMode::Symplectic(z) => z.oneline(),
        }
    }

    fn start(&self) -> FoldState {
        match self {
            WordMode::Plain(_) => FoldState::Plain(Permutation::identity()),
            WordMode::Orthogonal(_) => FoldState::Orthogonal(Involution::identity()),
            WordMode::Symplectic(_) => FoldState::Symplectic(SpFold::Fpf(FpfInvolution::theta())),
        }
    }
}

impl fmt::Display for WordMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordMode::Plain(p) => write!(f, "plain {p}"),
            WordMode::Orthogonal(y) => write!(f, "o {y}"),
            WordMode::Symplectic(z) => write!(f, "sp {z}"),
        }
    }
}

#[derive(Clone, Debug)]
enum FoldState {
    Plain(Permutation),
    Orthogonal(Involution),
    Symplectic(SpFold),
}

impl FoldState {
    fn step(&self, i: u32) -> FoldState {
        match self {
            FoldState::Plain(p) => FoldState::Plain(p.demazure_right(i)),
            FoldState::Orthogonal(y) => FoldState::Orthogonal(y.demazure_conjugate(i)),
            FoldState::Symplectic(z) => FoldState::Symplectic(z.step(i)),
        }
    }

    fn dense(&self, n: usize) -> Option<Vec<u32>> {
        match self {
            FoldState::Plain(p) => Some(p.dense(n)),
            FoldState::Orthogonal(y) => Some(y.perm().dense(n)),
            FoldState::Symplectic(SpFold::Fpf(z)) => Some(z.dense(n)),
            FoldState::Symplectic(SpFold::Zero) => None,
        }
    }
}

/// Every fold is monotone in Bruhat order, so a prefix whose state is not
/// below the target can be abandoned.
fn below(state: &[u32], target: &[u32]) -> bool {
    if state.len() != target.len() {
        return false;
    }
    Permutation::new(state.to_vec()).unwrap().bruhat_le(&Permutation::new(target.to_vec()).unwrap())
}

/// Limits for the exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub max_len: usize,
    pub node_budget: usize,
}

impl Default for Caps {
    fn default() -> Caps {
        Caps { max_len: 10, node_budget: 20_000_000 }
    }
}

/// All member words of length at most `max_len`.
pub fn enumerate_words(mode: &WordMode, max_len: usize) -> Result<BTreeSet<Word>> {
    enumerate_words_with(mode, max_len, None, &Caps::default())
}

/// Like [`enumerate_words`], optionally over a larger alphabet `[alphabet]`
/// instead of `[n − 1]`.
pub fn enumerate_words_with(
    mode: &WordMode,
    max_len: usize,
    alphabet: Option<u32>,
    caps: &Caps,
) -> Result<BTreeSet<Word>> {
    if max_len > caps.max_len {
        return Err(Error::CapExceeded { what: "word length", limit: caps.max_len });
    }
    let n = mode.support();
    let alphabet = alphabet.unwrap_or(n.saturating_sub(1) as u32);
    let width = n.max(alphabet as usize + 1);
    let width = width + width % 2;
    let target = match mode {
        WordMode::Symplectic(z) => z.dense(width),
        WordMode::Plain(p) => p.dense(width),
        WordMode::Orthogonal(y) => y.perm().dense(width),
    };
    let mut out = BTreeSet::new();
    let mut nodes = 0usize;
    let mut stack = vec![(Vec::<u32>::new(), mode.start())];
    while let Some((w, state)) = stack.pop() {
        nodes += 1;
        if nodes > caps.node_budget {
            return Err(Error::CapExceeded { what: "word enumeration nodes", limit: caps.node_budget });
        }
        let Some(dense) = state.dense(width) else {
            continue;
        };
        if !below(&dense, &target) {
            continue;
        }
        if dense == target {
            out.insert(Word::new(w.clone()).unwrap());
        }
        if w.len() == max_len {
            continue;
        }
        for a in (1..=alphabet).rev() {
            let mut w2 = w.clone();
            w2.push(a);
            stack.push((w2, state.step(a)));
        }
    }
    debug_assert!(out.iter().all(|w| mode.is_member(w, false)));
    Ok(out)
}

/// All words over `[alphabet]` of length at most `max_len`, shortlex order.
pub fn all_words(alphabet: u32, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Vec::<u32>::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * alphabet as usize);
        for w in &layer {
            for a in 1..=alphabet {
                let mut w2 = w.clone();
                w2.push(a);
                next.push(w2);
            }
        }
        out.extend(next.iter().map(|w| Word::new(w.clone()).unwrap()));
        layer = next;
    }
    out
}

pub fn word_descents(w: &[u32]) -> BTreeSet<usize> {
    (1..w.len()).filter(|&i| w[i - 1] > w[i]).collect()
}

/// How the cycle word of a target is turned into a permutation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AtomConvention {
    /// Write each cycle as `b a` (larger first) instead of `a b`.
    pub larger_first: bool,
    /// Invert the permutation whose one-line notation is the cycle word.
    pub invert: bool,
}

/// Selected by checking membership in the grouped atom sets for every
/// target of support at most 6 (see the test `atom_convention_selection`).
pub const ORTHOGONAL_ATOM_CONVENTION: AtomConvention = AtomConvention { larger_first: true, invert: true };
pub const SYMPLECTIC_ATOM_CONVENTION: AtomConvention = AtomConvention { larger_first: false, invert: true };

/// The cycle word `a1 b1 a2 b2 ⋯` with `a1 < a2 < ⋯`, where the pairs are the
/// cycles of the target (fixed points contribute a single letter).
pub fn min_atom_with(mode: &WordMode, conv: AtomConvention) -> Result<Permutation> {
    let n = mode.support() as u32;
    let f = |i: u32| match mode {
        WordMode::Orthogonal(y) => Ok(y.perm().apply(i)),
        WordMode::Symplectic(z) => Ok(z.apply(i)),
        WordMode::Plain(_) => Err(Error::Malformed("atoms need an involution target".into())),
    };
    let mut word = Vec::with_capacity(n as usize);
    for a in 1..=n {
        let b = f(a)?;
        if a == b {
            word.push(a);
        } else if a < b {
            if conv.larger_first {
                word.extend([b, a]);
            } else {
                word.extend([a, b]);
            }
        }
    }
    let p = Permutation::new(word).expect("cycle word is a permutation");
    Ok(if conv.invert { p.inverse() } else { p })
}

pub fn min_atom(mode: &WordMode) -> Result<Permutation> {
    let conv = match mode {
        WordMode::Symplectic(_) => SYMPLECTIC_ATOM_CONVENTION,
        _ => ORTHOGONAL_ATOM_CONVENTION,
    };
    min_atom_with(mode, conv)
}

const ATOM_SUPPORT_CAP: usize = 9;

/// `A(y)`/`A_FPF(z)` (`hecke = false`) or `B(y)`/`B_FPF(z)` (`hecke = true`),
/// by grouping: every permutation of [n] whose Hecke words are member words.
pub fn atoms(mode: &WordMode, hecke: bool) -> Result<BTreeSet<Permutation>> {
    if matches!(mode, WordMode::Plain(_)) {
        return Err(Error::Malformed("atoms need an involution target".into()));
    }
    let n = mode.support();
    if n > ATOM_SUPPORT_CAP {
        return Err(Error::CapExceeded { what: "atom support", limit: ATOM_SUPPORT_CAP });
    }
    let ell0 = mode.min_length();
    Ok(Permutation::all(n)
        .into_iter()
        .filter(|p| (hecke || p.length() == ell0) && mode.is_member(&p.reduced_word(), false))
        .collect())
}

/// Closure of the distinguished atom under `~_B` (orthogonal) or
/// `~_B_FPF` (symplectic).
pub fn hecke_atom_closure(mode: &WordMode) -> Result<BTreeSet<Permutation>> {
    let start = min_atom(mode)?;
    let symplectic = matches!(mode, WordMode::Symplectic(_));
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(p) = queue.pop_front() {
        let inv = p.inverse();
        let v = inv.dense(mode.support());
        let moved = if symplectic { fpf_window_moves(&v) } else { window_moves(&v) };
        for u in moved {
            let q = Permutation::new(u).unwrap().inverse();
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    Ok(seen)
}

/// Rank pattern of a window: position k holds the rank of v[k] among v.
fn pattern(v: &[u32]) -> Vec<usize> {
    v.iter().map(|x| v.iter().filter(|y| *y < x).count()).collect()
}

fn apply_pattern(v: &[u32], pat: &[usize]) -> Vec<u32> {
    let mut sorted = v.to_vec();
    sorted.sort_unstable();
    pat.iter().map(|&r| sorted[r]).collect()
}

fn rewrite_windows(v: &[u32], width: usize, step: usize, family: &[&[usize]]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut i = 0;
    while i + width <= v.len() {
        let window = &v[i..i + width];
        let pat = pattern(window);
        if family.contains(&pat.as_slice()) {
            for f in family.iter().filter(|f| **f != pat.as_slice()) {
                let mut u = v.to_vec();
                u[i..i + width].copy_from_slice(&apply_pattern(window, f));
                out.push(u);
            }
        }
        i += step;
    }
    out
}

/// Windows `π_i π_{i+1} π_{i+2}` in {cba, bca, cab}.
fn window_moves(v: &[u32]) -> Vec<Vec<u32>> {
    rewrite_windows(v, 3, 1, &[&[2, 1, 0], &[1, 2, 0], &[2, 0, 1]])
}

/// Windows at positions i+1..i+4, i even, in {adbc, bcad, bdac}.
fn fpf_window_moves(v: &[u32]) -> Vec<Vec<u32>> {
    rewrite_windows(v, 4, 2, &[&[0, 3, 1, 2], &[1, 2, 0, 3], &[1, 3, 0, 2]])
}

/// Word relations, each a finite rewriting system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    Braid,
    HeckeBraid,
    OrthoReduced,
    OrthoHecke,
    SpReduced,
    SpHecke,
    #[serde(rename = "ck")]
    CK,
    KKnuth,
    #[serde(rename = "sp-ck")]
    SpCK,
    SpKKnuth,
    /// Coxeter–Knuth moves plus swapping the first two letters.
    #[serde(rename = "o-ck")]
    OCK,
    OKKnuth,
}

impl Relation {
    pub const ALL: [Relation; 12] = [
        Relation::Braid,
        Relation::HeckeBraid,
        Relation::OrthoReduced,
        Relation::OrthoHecke,
        Relation::SpReduced,
        Relation::SpHecke,
        Relation::CK,
        Relation::KKnuth,
        Relation::SpCK,
        Relation::SpKKnuth,
        Relation::OCK,
        Relation::OKKnuth,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Relation::Braid => "braid",
            Relation::HeckeBraid => "hecke-braid",
            Relation::OrthoReduced => "ortho-reduced",
            Relation::OrthoHecke => "ortho-hecke",
            Relation::SpReduced => "sp-reduced",
            Relation::SpHecke => "sp-hecke",
            Relation::CK => "ck",
            Relation::KKnuth => "k-knuth",
            Relation::SpCK => "sp-ck",
            Relation::SpKKnuth => "sp-k-knuth",
            Relation::OCK => "o-ck",
            Relation::OKKnuth => "o-k-knuth",
        }
    }

    fn braid_family(self) -> bool {
        matches!(
            self,
            Relation::Braid
                | Relation::HeckeBraid
                | Relation::OrthoReduced
                | Relation::OrthoHecke
                | Relation::SpReduced
                | Relation::SpHecke
        )
    }

    fn idempotent(self) -> bool {
        matches!(
            self,
            Relation::HeckeBraid
                | Relation::OrthoHecke
                | Relation::SpHecke
                | Relation::KKnuth
                | Relation::SpKKnuth
                | Relation::OKKnuth
        )
    }

    fn swaps_start(self) -> bool {
        matches!(self, Relation::OrthoReduced | Relation::OrthoHecke | Relation::OCK | Relation::OKKnuth)
    }

    fn symplectic_start(self) -> bool {
        matches!(self, Relation::SpReduced | Relation::SpHecke | Relation::SpCK | Relation::SpKKnuth)
    }

    fn parity_swap(self) -> bool {
        matches!(self, Relation::SpCK | Relation::SpKKnuth)
    }
}

impl std::str::FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Relation> {
        Relation::ALL
            .into_iter()
            .find(|r| r.name() == s || r.name().replace('-', "") == s.replace('-', ""))
            .ok_or_else(|| Error::Malformed(format!("unknown relation {s:?}")))
    }
}

fn neighbors(rel: Relation, w: &[u32], out: &mut Vec<Vec<u32>>) {
    let len = w.len();
    let swapped = |k: usize| {
        let mut u = w.to_vec();
        u.swap(k, k + 1);
        u
    };
    if rel.braid_family() {
        for k in 0..len.saturating_sub(1) {
            if w[k].abs_diff(w[k + 1]) > 1 {
                out.push(swapped(k));
            }
        }
        for k in 0..len.saturating_sub(2) {
            let (x, y, z) = (w[k], w[k + 1], w[k + 2]);
            if x == z && x.abs_diff(y) == 1 {
                let mut u = w.to_vec();
                u[k..k + 3].copy_from_slice(&[y, x, y]);
                out.push(u);
            }
        }
    } else {
        for k in 0..len.saturating_sub(2) {
            let (x, y, z) = (w[k], w[k + 1], w[k + 2]);
            // cab <-> acb
            if (x > z && z > y) || (y > z && z > x) {
                out.push(swapped(k));
            }
            // bca <-> bac
            if (y > x && x > z) || (z > x && x > y) {
                out.push(swapped(k + 1));
            }
            // aba <-> bab
            if x == z && x != y {
                let mut u = w.to_vec();
                u[k..k + 3].copy_from_slice(&[y, x, y]);
                out.push(u);
            }
        }
    }
    if rel.idempotent() {
        for k in 0..len {
            let mut u = w.to_vec();
            u.insert(k, w[k]);
            out.push(u);
            if k + 1 < len && w[k] == w[k + 1] {
                let mut u = w.to_vec();
                u.remove(k);
                out.push(u);
            }
        }
    }
    if len >= 2 {
        let (a, b) = (w[0], w[1]);
        if rel.swaps_start() && a != b {
            out.push(swapped(0));
        }
        if rel.parity_swap() && a != b && a % 2 == b % 2 {
            out.push(swapped(0));
        }
        if rel.symplectic_start() {
            if a == b + 1 {
                let mut u = w.to_vec();
                u[1] = a + 1;
                out.push(u);
            }
            if b == a + 1 && a >= 2 {
                let mut u = w.to_vec();
                u[1] = a - 1;
                out.push(u);
            }
        }
    }
}

pub const CLASS_NODE_BUDGET: usize = 2_000_000;

/// Breadth-first closure of `w` under `rel`, restricted to words of length
/// at most `len_cap` over `[alpha_cap]`.
pub fn congruence_class(w: &[u32], rel: Relation, len_cap: usize, alpha_cap: u32) -> Result<BTreeSet<Word>> {
    congruence_class_budget(w, rel, len_cap, alpha_cap, CLASS_NODE_BUDGET)
}

pub fn congruence_class_budget(
    w: &[u32],
    rel: Relation,
    len_cap: usize,
    alpha_cap: u32,
    budget: usize,
) -> Result<BTreeSet<Word>> {
    let start = Word::new(w.to_vec())?;
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    let mut buf = Vec::new();
    while let Some(u) = queue.pop_front() {
        buf.clear();
        neighbors(rel, &u, &mut buf);
        for v in buf.drain(..) {
            if v.len() > len_cap || v.iter().any(|&a| a > alpha_cap) {
                continue;
            }
            let v = Word::new(v).unwrap();
            if !seen.contains(&v) {
                if seen.len() >= budget {
                    return Err(Error::CapExceeded { what: "congruence class size", limit: budget });
                }
                seen.insert(v.clone());
                queue.push_back(v);
            }
        }
    }
    Ok(seen)
}
