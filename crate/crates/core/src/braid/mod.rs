//! Braid words over the virtual braid generators, their permutation images,
//! and the distinguished pure-braid elements.
//!
//! Indices are 1-based in every public interface. Braid text syntax:
//! `s2 r1 S1 s3^-1 (r1 s2)^6`, where `s<k>`/`r<k>` are the generators,
//! an upper-case letter or `^-1` denotes the inverse, and parenthesised
//! groups may carry an integer power. `1` is the empty braid.

mod elements;
mod fvp3;
mod perm;
mod rewrite;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{parse_err, Error, Result};

pub use elements::{
    eta, lambda, normal_generators_intersection, x_elem, NormalFamily, NormalGenerator,
};
pub use fvp3::{fvp3_normal_form, parse_abc, Fvp3NormalForm, Syllable};
pub use perm::Permutation;
pub use rewrite::{
    abc_alphabet, rewrite_to_lambda, rewrite_to_x, to_abc, IndexedLetter, LambdaWord, XWord,
};

/// Which braid-like group a word is read in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BraidMode {
    /// Virtual braids.
    #[serde(rename = "vb")]
    Vb,
    /// Flat virtual braids: `σ_i² = 1`.
    #[serde(rename = "fvb")]
    Fvb,
    /// Gauss virtual braids: flat, plus `σ_i ρ_i = ρ_i σ_i`.
    #[serde(rename = "gvb")]
    Gvb,
    /// Welded braids: virtual braids modulo the forbidden relation.
    #[serde(rename = "wb")]
    Wb,
    /// Flat welded braids.
    #[serde(rename = "fwb")]
    Fwb,
}

impl BraidMode {
    pub const ALL: [BraidMode; 5] = [
        BraidMode::Vb,
        BraidMode::Fvb,
        BraidMode::Gvb,
        BraidMode::Wb,
        BraidMode::Fwb,
    ];

    /// Whether `σ_i² = 1` holds.
    pub fn sigma_involutive(self) -> bool {
        matches!(self, BraidMode::Fvb | BraidMode::Gvb | BraidMode::Fwb)
    }

    /// Whether `σ_i ρ_i = ρ_i σ_i` is imposed.
    pub fn gauss(self) -> bool {
        self == BraidMode::Gvb
    }

    /// Whether `ρ_i σ_{i+1} σ_i = σ_{i+1} σ_i ρ_{i+1}` is imposed.
    pub fn welded(self) -> bool {
        matches!(self, BraidMode::Wb | BraidMode::Fwb)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            BraidMode::Vb => "vb",
            BraidMode::Fvb => "fvb",
            BraidMode::Gvb => "gvb",
            BraidMode::Wb => "wb",
            BraidMode::Fwb => "fwb",
        }
    }
}

impl FromStr for BraidMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BraidMode::ALL
            .into_iter()
            .find(|m| m.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownMode(s.to_owned()))
    }
}

impl fmt::Display for BraidMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.as_str().to_ascii_uppercase())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    Sigma,
    Rho,
}

/// `σ_i^{±1}` or `ρ_i^{±1}` with a 1-based strand position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BraidLetter {
    pub kind: Gen,
    pub index: usize,
    pub inverse: bool,
}

impl BraidLetter {
    pub fn sigma(index: usize) -> Self {
        BraidLetter {
            kind: Gen::Sigma,
            index,
            inverse: false,
        }
    }

    pub fn sigma_inv(index: usize) -> Self {
        BraidLetter {
            kind: Gen::Sigma,
            index,
            inverse: true,
        }
    }

    pub fn rho(index: usize) -> Self {
        BraidLetter {
            kind: Gen::Rho,
            index,
            inverse: false,
        }
    }

    pub fn inv(self) -> Self {
        BraidLetter {
            inverse: !self.inverse,
            ..self
        }
    }
}

impl fmt::Display for BraidLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match (self.kind, self.inverse) {
            (Gen::Sigma, false) => 's',
            (Gen::Sigma, true) => 'S',
            (Gen::Rho, false) => 'r',
            (Gen::Rho, true) => 'R',
        };
        write!(f, "{c}{}", self.index)
    }
}

/// A word in the generators of the virtual braid group on `n` strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, Vec::new())
    }

    pub fn new(n: usize, letters: Vec<BraidLetter>) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewStrands(n));
        }
        if let Some(l) = letters.iter().find(|l| l.index == 0 || l.index >= n) {
            return Err(Error::IndexOutOfRange { index: l.index, n });
        }
        Ok(BraidWord { n, letters })
    }

    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let letters = Parser::new(text).parse_all()?;
        Self::new(n, letters)
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        BraidWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    /// Concatenation. Panics if the strand counts differ.
    pub fn then(&self, other: &BraidWord) -> Self {
        assert_eq!(self.n, other.n, "strand count mismatch");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { n: self.n, letters }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord { n: self.n, letters }
    }

    /// The same word read in a group with more strands.
    pub fn widen(&self, n: usize) -> Result<Self> {
        Self::new(n, self.letters.clone())
    }

    pub(crate) fn push(&mut self, l: BraidLetter) {
        debug_assert!(l.index >= 1 && l.index < self.n);
        self.letters.push(l);
    }
}

impl Serialize for BraidWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Recursive-descent parser for the braid text syntax.
struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_ws(&mut self) {
        while self
            .peek()
            .is_some_and(|c| c.is_whitespace() || c == ',' || c == '*')
        {
            self.bump();
        }
    }

    fn parse_all(&mut self) -> Result<Vec<BraidLetter>> {
        let out = self.parse_seq()?;
        self.skip_ws();
        match self.peek() {
            None => Ok(out),
            Some(c) => Err(parse_err(
                &self.src[self.pos..],
                format!("unexpected `{c}`"),
            )),
        }
    }

    fn parse_seq(&mut self) -> Result<Vec<BraidLetter>> {
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            let start = self.pos;
            let item: Vec<BraidLetter> = match self.peek() {
                None | Some(')') => return Ok(out),
                Some('(') => {
                    self.bump();
                    let inner = self.parse_seq()?;
                    self.skip_ws();
                    if self.bump() != Some(')') {
                        return Err(parse_err(&self.src[start..], "unbalanced parenthesis"));
                    }
                    inner
                }
                Some('1') => {
                    self.bump();
                    Vec::new()
                }
                Some(c @ ('s' | 'S' | 'r' | 'R')) => {
                    self.bump();
                    let digits = self.take_digits();
                    let index: usize = digits
                        .parse()
                        .map_err(|_| parse_err(&self.src[start..self.pos], "missing index"))?;
                    let kind = if c.eq_ignore_ascii_case(&'s') {
                        Gen::Sigma
                    } else {
                        Gen::Rho
                    };
                    vec![BraidLetter {
                        kind,
                        index,
                        inverse: c.is_ascii_uppercase(),
                    }]
                }
                Some(_) => {
                    let end = self.src[start..]
                        .find(char::is_whitespace)
                        .map_or(self.src.len(), |e| start + e);
                    return Err(parse_err(
                        &self.src[start..end],
                        "expected s<k>, r<k> or a group",
                    ));
                }
            };
            let k = self.parse_power()?;
            let base: Vec<BraidLetter> = if k < 0 {
                item.iter().rev().map(|l| l.inv()).collect()
            } else {
                item
            };
            for _ in 0..k.unsigned_abs() {
                out.extend_from_slice(&base);
            }
        }
    }

    fn take_digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        &self.src[start..self.pos]
    }

    fn parse_power(&mut self) -> Result<i64> {
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.bump();
        let start = self.pos;
        if self.peek() == Some('-') {
            self.bump();
        }
        self.take_digits();
        self.src[start..self.pos]
            .parse()
            .map_err(|_| parse_err(&self.src[start - 1..self.pos], "bad exponent"))
    }
}

/// Free reduction of a braid word. Cancels `g g^-1`, and `g g` whenever the
/// mode makes `g` an involution (`ρ` always, `σ` in flat modes). This is a
/// normalization convenience, not a solution of the word problem.
pub fn free_reduce_braid(b: &BraidWord, mode: BraidMode) -> BraidWord {
    let mut out: Vec<BraidLetter> = Vec::with_capacity(b.len());
    for &l in &b.letters {
        if let Some(&last) = out.last() {
            let involutive = l.kind == Gen::Rho || mode.sigma_involutive();
            if last.kind == l.kind
                && last.index == l.index
                && (last.inverse != l.inverse || involutive)
            {
                out.pop();
                continue;
            }
        }
        out.push(l);
    }
    BraidWord {
        n: b.n,
        letters: out,
    }
}

/// Permutation sending `σ_i` and `ρ_i` to `(i, i+1)`, composed in word order.
pub fn iota1(b: &BraidWord) -> Permutation {
    let mut p = Permutation::identity(b.n);
    for l in &b.letters {
        p.swap_after(l.index - 1);
    }
    p
}

/// Permutation sending `σ_i` to the identity and `ρ_i` to `(i, i+1)`.
pub fn iota2(b: &BraidWord) -> Permutation {
    let mut p = Permutation::identity(b.n);
    for l in b.letters.iter().filter(|l| l.kind == Gen::Rho) {
        p.swap_after(l.index - 1);
    }
    p
}
