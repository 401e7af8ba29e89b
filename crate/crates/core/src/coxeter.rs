//! Finite-support permutations, the 0-Hecke (Demazure) monoid, and the
//! module actions behind Hecke, orthogonal Hecke, and symplectic Hecke words.
//!
//! Words act left to right: the word `w1 w2 ... wl` names the product
//! `s_{w1} s_{w2} ... s_{wl}`, and right multiplication by `s_i` swaps
//! positions `i` and `i+1` of the one-line notation.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite word of positive letters.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Result<Word> {
        if letters.contains(&0) {
            return Err(Error::ZeroLetter);
        }
        Ok(Word(letters))
    }

    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    pub fn push(&mut self, letter: u32) {
        assert!(letter > 0, "letters must be positive");
        self.0.push(letter);
    }

    /// Prepend a letter, as uninsertion does.
    pub fn prepend(&self, letter: u32) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(letter);
        v.extend_from_slice(&self.0);
        Word(v)
    }

    /// The word `2[w]` obtained by doubling every letter.
    pub fn doubled(&self) -> Word {
        Word(self.0.iter().map(|&a| 2 * a).collect())
    }

    pub fn halved(&self) -> Result<Word> {
        if self.0.iter().any(|a| a % 2 == 1) {
            return Err(Error::OddEntry);
        }
        Ok(Word(self.0.iter().map(|&a| a / 2).collect()))
    }
}

impl Deref for Word {
    type Target = [u32];

    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl TryFrom<Vec<u32>> for Word {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Word> {
        Word::new(v)
    }
}

impl From<Word> for Vec<u32> {
    fn from(w: Word) -> Vec<u32> {
        w.0
    }
}

impl FromIterator<u32> for Word {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Word {
        Word::new(iter.into_iter().collect()).expect("letters must be positive")
    }
}

/// Accepts `"4,2,2,3"` or, when every letter is a single digit, `"4223"`.
/// A trailing comma is allowed, so `"12,"` is the one-letter word 12.
impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::empty());
        }
        let parsed: Option<Vec<u32>> = if s.contains(',') {
            s.strip_suffix(',').unwrap_or(s).split(',').map(|t| t.trim().parse().ok()).collect()
        } else {
            s.chars().map(|c| c.to_digit(10)).collect()
        };
        Word::new(parsed.ok_or_else(|| Error::Malformed(format!("word {s:?}")))?)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_juxtaposed(f, &self.0)?;
        if let [a] = self.0[..] {
            if a >= 10 {
                f.write_str(",")?;
            }
        }
        Ok(())
    }
}

fn write_juxtaposed(f: &mut fmt::Formatter<'_>, values: &[u32]) -> fmt::Result {
    let sep = if values.iter().all(|&v| v < 10) { "" } else { "," };
    for (k, v) in values.iter().enumerate() {
        if k > 0 {
            f.write_str(sep)?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

/// A bijection of the positive integers fixing all but finitely many points.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation {
    oneline: Vec<u32>,
}

impl Permutation {
    pub fn identity() -> Permutation {
        Permutation { oneline: Vec::new() }
    }

    /// Validates a one-line notation and trims trailing fixed points.
    pub fn new(oneline: Vec<u32>) -> Result<Permutation> {
        let n = oneline.len();
        let mut seen = vec![false; n + 1];
        for &v in &oneline {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(oneline));
            }
            seen[v] = true;
        }
        Ok(Permutation::from_dense(oneline))
    }

    fn from_dense(mut oneline: Vec<u32>) -> Permutation {
        while oneline.last().is_some_and(|&v| v as usize == oneline.len()) {
            oneline.pop();
        }
        Permutation { oneline }
    }

    pub fn oneline(&self) -> &[u32] {
        &self.oneline
    }

    /// Smallest n with π(i) = i for all i > n.
    pub fn support(&self) -> usize {
        self.oneline.len()
    }

    pub fn is_identity(&self) -> bool {
        self.oneline.is_empty()
    }

    pub fn apply(&self, i: u32) -> u32 {
        match self.oneline.get(i as usize - 1) {
            Some(&v) => v,
            None => i,
        }
    }

    /// One-line notation padded with fixed points to length `n`.
    pub fn dense(&self, n: usize) -> Vec<u32> {
        let mut v = self.oneline.clone();
        v.extend(v.len() as u32 + 1..=n.max(v.len()) as u32);
        v
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.oneline.len()];
        for (i, &v) in self.oneline.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Permutation { oneline: inv }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        inversions(&self.oneline)
    }

    /// The composition `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        let n = self.support().max(other.support());
        let v = (1..=n as u32).map(|i| self.apply(other.apply(i))).collect();
        Permutation::from_dense(v)
    }

    pub fn simple(i: u32) -> Permutation {
        assert!(i > 0);
        Permutation::identity().times_simple(i)
    }

    /// `π·s_i`: swap positions i and i+1.
    pub fn times_simple(&self, i: u32) -> Permutation {
        let mut v = self.dense(i as usize + 1);
        v.swap(i as usize - 1, i as usize);
        Permutation::from_dense(v)
    }

    /// `s_i·π`: swap values i and i+1.
    pub fn simple_times(&self, i: u32) -> Permutation {
        let v = self
            .dense(i as usize + 1)
            .into_iter()
            .map(|x| {
                if x == i {
                    i + 1
                } else if x == i + 1 {
                    i
                } else {
                    x
                }
            })
            .collect();
        Permutation::from_dense(v)
    }

    /// Demazure product with `s_i` on the right.
    pub fn demazure_right(&self, i: u32) -> Permutation {
        if self.apply(i) < self.apply(i + 1) {
            self.times_simple(i)
        } else {
            self.clone()
        }
    }

    /// Demazure product with `s_i` on the left.
    pub fn demazure_left(&self, i: u32) -> Permutation {
        let inv = self.inverse();
        if inv.apply(i) < inv.apply(i + 1) {
            self.simple_times(i)
        } else {
            self.clone()
        }
    }

    /// Demazure product `D(self, other)`.
    pub fn demazure(&self, other: &Permutation) -> Permutation {
        other.reduced_word().iter().fold(self.clone(), |acc, &i| acc.demazure_right(i))
    }

    /// Lexicographically-last-descent reduced word.
    pub fn reduced_word(&self) -> Word {
        let mut v = self.oneline.clone();
        let mut rev = Vec::new();
        while let Some(i) = (0..v.len().saturating_sub(1)).rev().find(|&k| v[k] > v[k + 1]) {
            v.swap(i, i + 1);
            rev.push(i as u32 + 1);
        }
        rev.reverse();
        Word(rev)
    }

    pub fn is_involution(&self) -> bool {
        self.oneline.iter().enumerate().all(|(i, &v)| self.oneline[v as usize - 1] == i as u32 + 1)
    }

    /// Conjugate by the reversal `n⋯21` where n is the support.
    pub fn star(&self) -> Permutation {
        self.star_in(self.support())
    }

    /// Conjugate by the reversal `n⋯21`; requires `n ≥ support`.
    pub fn star_in(&self, n: usize) -> Permutation {
        assert!(n >= self.support());
        let n = n as u32;
        let v = (1..=n).map(|i| n + 1 - self.apply(n + 1 - i)).collect();
        Permutation::from_dense(v)
    }

    /// Bruhat order via rank matrices.
    pub fn bruhat_le(&self, other: &Permutation) -> bool {
        let n = self.support().max(other.support());
        bruhat_le_dense(&self.dense(n), &other.dense(n))
    }

    /// All permutations of [n] in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut v: Vec<u32> = (1..=n as u32).collect();
        loop {
            out.push(Permutation::from_dense(v.clone()));
            if !next_permutation(&mut v) {
                break;
            }
        }
        out
    }
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Permutation> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Vec<u32> {
        p.oneline
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Permutation> {
        Permutation::new(s.parse::<Word>()?.into_vec())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.oneline.is_empty() {
            return f.write_str("id");
        }
        write_juxtaposed(f, &self.oneline)
    }
}

pub(crate) fn inversions(v: &[u32]) -> usize {
    let mut count = 0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                count += 1;
            }
        }
    }
    count
}

fn bruhat_le_dense(u: &[u32], v: &[u32]) -> bool {
    let n = u.len();
    for k in 1..=n as u32 {
        let (mut cu, mut cv) = (0, 0);
        for i in 0..n {
            cu += (u[i] >= k) as usize;
            cv += (v[i] >= k) as usize;
            if cu > cv {
                return false;
            }
        }
    }
    true
}

fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// An involution of the positive integers with finite support.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Involution(Permutation);

impl Involution {
    pub fn identity() -> Involution {
        Involution(Permutation::identity())
    }

    pub fn new(p: Permutation) -> Result<Involution> {
        if !p.is_involution() {
            return Err(Error::NotAnInvolution(p.oneline));
        }
        Ok(Involution(p))
    }

    pub fn perm(&self) -> &Permutation {
        &self.0
    }

    pub fn support(&self) -> usize {
        self.0.support()
    }

    pub fn star(&self) -> Involution {
        Involution(self.0.star())
    }

    pub fn star_in(&self, n: usize) -> Involution {
        Involution(self.0.star_in(n))
    }

    pub fn stats(&self) -> LengthStats {
        let ell = self.0.length();
        let kappa = two_cycles(self.0.oneline());
        LengthStats { ell, ell_hat: (ell + kappa) / 2, kappa }
    }

    /// `D(s_i, y, s_i)`.
    pub fn demazure_conjugate(&self, i: u32) -> Involution {
        let p = self.0.demazure_left(i).demazure_right(i);
        debug_assert!(p.is_involution());
        Involution(p)
    }

    /// All involutions of [n] (support at most n).
    pub fn all(n: usize) -> Vec<Involution> {
        Permutation::all(n).into_iter().filter(Permutation::is_involution).map(Involution).collect()
    }
}

impl TryFrom<Vec<u32>> for Involution {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Involution> {
        Involution::new(Permutation::new(v)?)
    }
}

impl From<Involution> for Vec<u32> {
    fn from(y: Involution) -> Vec<u32> {
        y.0.oneline
    }
}

impl FromStr for Involution {
    type Err = Error;

    fn from_str(s: &str) -> Result<Involution> {
        Involution::new(s.parse()?)
    }
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn two_cycles(v: &[u32]) -> usize {
    v.iter().enumerate().filter(|&(i, &x)| x as usize > i + 1).count()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LengthStats {
    pub ell: usize,
    pub ell_hat: usize,
    pub kappa: usize,
}

/// `Θ(i) = i − (−1)^i`.
fn theta(i: u32) -> u32 {
    if i % 2 == 1 {
        i + 1
    } else {
        i - 1
    }
}

/// A fixed-point-free involution that agrees with Θ = (1 2)(3 4)⋯ beyond an
/// even prefix. The stored prefix is the shortest such one.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct FpfInvolution {
    oneline: Vec<u32>,
}

impl FpfInvolution {
    pub fn theta() -> FpfInvolution {
        FpfInvolution { oneline: Vec::new() }
    }

    pub fn new(oneline: Vec<u32>) -> Result<FpfInvolution> {
        let n = oneline.len();
        let valid = n.is_multiple_of(2)
            && oneline.iter().enumerate().all(|(i, &v)| {
                v as usize >= 1
                    && v as usize <= n
                    && v as usize != i + 1
                    && oneline[v as usize - 1] as usize == i + 1
            });
        if !valid {
            return Err(Error::NotFpf(oneline));
        }
        Ok(FpfInvolution::from_dense(oneline))
    }

    fn from_dense(mut oneline: Vec<u32>) -> FpfInvolution {
        loop {
            let n = oneline.len();
            if n >= 2 && oneline[n - 1] as usize == n - 1 && oneline[n - 2] as usize == n {
                oneline.truncate(n - 2);
            } else {
                break;
            }
        }
        FpfInvolution { oneline }
    }

    pub fn oneline(&self) -> &[u32] {
        &self.oneline
    }

    /// Minimal even n with z(i) = Θ(i) for all i > n.
    pub fn support(&self) -> usize {
        self.oneline.len()
    }

    pub fn apply(&self, i: u32) -> u32 {
        match self.oneline.get(i as usize - 1) {
            Some(&v) => v,
            None => theta(i),
        }
    }

    pub fn dense(&self, n: usize) -> Vec<u32> {
        let n = n.max(self.support());
        let n = n + n % 2;
        (1..=n as u32).map(|i| self.apply(i)).collect()
    }

    /// `s_i z s_i`.
    pub fn conjugate(&self, i: u32) -> FpfInvolution {
        let s = |x: u32| {
            if x == i {
                i + 1
            } else if x == i + 1 {
                i
            } else {
                x
            }
        };
        let n = self.support().max(i as usize + 1);
        let n = n + n % 2;
        let v = (1..=n as u32).map(|k| s(self.apply(s(k)))).collect();
        FpfInvolution::from_dense(v)
    }

    /// The restricted involution z̄: z on [n], fixing everything above n.
    pub fn restricted(&self) -> Involution {
        Involution(Permutation::from_dense(self.oneline.clone()))
    }

    pub fn stats(&self) -> LengthStats {
        let ell = inversions(&self.oneline);
        let kappa = self.support() / 2;
        LengthStats { ell, ell_hat: (ell - kappa) / 2, kappa }
    }

    pub fn star(&self) -> FpfInvolution {
        self.star_in(self.support())
    }

    /// Conjugate by `n⋯21`; requires an even `n ≥ support`.
    pub fn star_in(&self, n: usize) -> FpfInvolution {
        assert!(n >= self.support() && n.is_multiple_of(2));
        let n = n as u32;
        let v = (1..=n).map(|i| n + 1 - self.apply(n + 1 - i)).collect();
        FpfInvolution::from_dense(v)
    }

    /// All FPF involutions whose minimal support is at most n (n even).
    pub fn all(n: usize) -> Vec<FpfInvolution> {
        let mut out = Vec::new();
        let mut v = vec![0u32; n];
        fn rec(v: &mut Vec<u32>, out: &mut Vec<FpfInvolution>) {
            let Some(i) = v.iter().position(|&x| x == 0) else {
                out.push(FpfInvolution::from_dense(v.clone()));
                return;
            };
            for j in i + 1..v.len() {
                if v[j] == 0 {
                    v[i] = j as u32 + 1;
                    v[j] = i as u32 + 1;
                    rec(v, out);
                    v[i] = 0;
                    v[j] = 0;
                }
            }
        }
        rec(&mut v, &mut out);
        out.sort();
        out
    }
}

impl TryFrom<Vec<u32>> for FpfInvolution {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<FpfInvolution> {
        FpfInvolution::new(v)
    }
}

impl From<FpfInvolution> for Vec<u32> {
    fn from(z: FpfInvolution) -> Vec<u32> {
        z.oneline
    }
}

impl FromStr for FpfInvolution {
    type Err = Error;

    fn from_str(s: &str) -> Result<FpfInvolution> {
        FpfInvolution::new(s.parse::<Word>()?.into_vec())
    }
}

impl fmt::Display for FpfInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.oneline.is_empty() {
            return f.write_str("Θ");
        }
        write_juxtaposed(f, &self.oneline)
    }
}

/// Result of the symplectic fold: an FPF involution, or the absorbing zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SpFold {
    Fpf(FpfInvolution),
    #[serde(with = "zero_tag")]
    Zero,
}

mod zero_tag {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str("zero")
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<(), D::Error> {
        let s = String::deserialize(d)?;
        if s == "zero" {
            Ok(())
        } else {
            Err(serde::de::Error::custom("expected \"zero\""))
        }
    }
}

impl SpFold {
    pub fn fpf(&self) -> Option<&FpfInvolution> {
        match self {
            SpFold::Fpf(z) => Some(z),
            SpFold::Zero => None,
        }
    }

    /// One application of `U_i` to `N_z`.
    pub fn step(&self, i: u32) -> SpFold {
        let SpFold::Fpf(z) = self else {
            return SpFold::Zero;
        };
        let (a, b) = (z.apply(i), z.apply(i + 1));
        if a < b {
            SpFold::Fpf(z.conjugate(i))
        } else if a == i + 1 {
            SpFold::Zero
        } else {
            self.clone()
        }
    }
}

pub fn demazure_product(w: &[u32]) -> Permutation {
    w.iter().fold(Permutation::identity(), |acc, &i| acc.demazure_right(i))
}

pub fn orthogonal_fold(w: &[u32]) -> Involution {
    w.iter().fold(Involution::identity(), |acc, &i| acc.demazure_conjugate(i))
}

pub fn symplectic_fold(w: &[u32]) -> SpFold {
    w.iter().fold(SpFold::Fpf(FpfInvolution::theta()), |acc, &i| acc.step(i))
}
