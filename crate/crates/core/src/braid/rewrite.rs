use std::fmt;
use std::sync::Arc;

use serde::ser::SerializeTuple;
use serde::{Serialize, Serializer};

use super::elements::{lambda, x_elem};
use super::{iota1, iota2, BraidMode, BraidWord, Gen};
use crate::error::{Error, Result};
use crate::words::{Alphabet, Letter, Word};

/// A power of an indexed generator `λ_{i,j}` or `x_{i,j}`, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IndexedLetter {
    pub i: usize,
    pub j: usize,
    pub exponent: i32,
}

impl Serialize for IndexedLetter {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut t = s.serialize_tuple(3)?;
        t.serialize_element(&self.i)?;
        t.serialize_element(&self.j)?;
        t.serialize_element(&self.exponent)?;
        t.end()
    }
}

fn fmt_indexed(f: &mut fmt::Formatter<'_>, tag: char, letters: &[IndexedLetter]) -> fmt::Result {
    if letters.is_empty() {
        return f.write_str("1");
    }
    for (k, l) in letters.iter().enumerate() {
        if k > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{tag}({},{})", l.i, l.j)?;
        if l.exponent != 1 {
            write!(f, "^{}", l.exponent)?;
        }
    }
    Ok(())
}

/// Cancels adjacent letters with equal indices and opposite exponents.
fn free_reduce(letters: Vec<IndexedLetter>) -> Vec<IndexedLetter> {
    let mut out: Vec<IndexedLetter> = Vec::with_capacity(letters.len());
    for l in letters {
        match out.last_mut() {
            Some(last) if last.i == l.i && last.j == l.j => {
                last.exponent += l.exponent;
                if last.exponent == 0 {
                    out.pop();
                }
            }
            _ => out.push(l),
        }
    }
    out
}

fn expand(
    letters: &[IndexedLetter],
    n: usize,
    f: fn(usize, usize, usize) -> Result<BraidWord>,
) -> Result<BraidWord> {
    let mut out = BraidWord::empty(n)?;
    for l in letters {
        out = out.then(&f(l.i, l.j, n)?.pow(l.exponent as i64));
    }
    Ok(out)
}

macro_rules! indexed_word {
    ($name:ident, $tag:literal, $elem:path) => {
        #[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
        #[serde(transparent)]
        pub struct $name {
            letters: Vec<IndexedLetter>,
        }

        impl $name {
            /// Wraps the letters as written; no reduction.
            pub fn new(letters: Vec<IndexedLetter>) -> Self {
                $name { letters }
            }

            pub fn letters(&self) -> &[IndexedLetter] {
                &self.letters
            }

            pub fn is_empty(&self) -> bool {
                self.letters.is_empty()
            }

            pub fn free_reduce(&self) -> Self {
                $name {
                    letters: free_reduce(self.letters.clone()),
                }
            }

            /// Expands every letter into its defining braid word.
            pub fn to_braid(&self, n: usize) -> Result<BraidWord> {
                expand(&self.letters, n, $elem)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt_indexed(f, $tag, &self.letters)
            }
        }
    };
}

indexed_word!(LambdaWord, 'L', lambda);
indexed_word!(XWord, 'X', x_elem);

/// Tracks `P`, the accumulated ρ-prefix acting on indices, so that
/// `R λ_{i,j} R^-1 = λ_{P(i),P(j)}`.
struct Prefix(Vec<usize>);

impl Prefix {
    fn new(n: usize) -> Self {
        Prefix((0..=n).collect())
    }

    fn push_rho(&mut self, k: usize) {
        self.0.swap(k, k + 1);
    }

    fn at(&self, i: usize) -> usize {
        self.0[i]
    }
}

/// Rewrites a pure braid as a word in the `λ_{i,j}`.
///
/// Uses `σ_k = λ_{k,k+1}^-1 ρ_k` and `σ_k^-1 = ρ_k λ_{k,k+1}`, then moves every
/// `ρ` to the right through the conjugation law. In flat modes `λ_{j,i}` with
/// `j > i` is written as `λ_{i,j}^-1`. The result is freely reduced.
pub fn rewrite_to_lambda(b: &BraidWord, mode: BraidMode) -> Result<LambdaWord> {
    let p = iota1(b);
    if !p.is_identity() {
        return Err(Error::NotPure(p.to_string()));
    }
    let mut prefix = Prefix::new(b.strands());
    let mut out = Vec::new();
    let mut emit = |i: usize, j: usize, exponent: i32| {
        if mode.sigma_involutive() && i > j {
            out.push(IndexedLetter {
                i: j,
                j: i,
                exponent: -exponent,
            });
        } else {
            out.push(IndexedLetter { i, j, exponent });
        }
    };
    for l in b.letters() {
        let k = l.index;
        match (l.kind, l.inverse) {
            (Gen::Rho, _) => prefix.push_rho(k),
            (Gen::Sigma, false) => {
                emit(prefix.at(k), prefix.at(k + 1), -1);
                prefix.push_rho(k);
            }
            (Gen::Sigma, true) => {
                prefix.push_rho(k);
                emit(prefix.at(k), prefix.at(k + 1), 1);
            }
        }
    }
    Ok(LambdaWord::new(free_reduce(out)))
}

/// Rewrites a braid of the Rabenda subgroup as a word in the `x_{i,j}`,
/// using `σ_k = x_{k,k+1}` and the conjugation law for `ρ`.
pub fn rewrite_to_x(b: &BraidWord) -> Result<XWord> {
    let p = iota2(b);
    if !p.is_identity() {
        return Err(Error::NotRabenda(p.to_string()));
    }
    let mut prefix = Prefix::new(b.strands());
    let mut out = Vec::new();
    for l in b.letters() {
        match l.kind {
            Gen::Rho => prefix.push_rho(l.index),
            Gen::Sigma => out.push(IndexedLetter {
                i: prefix.at(l.index),
                j: prefix.at(l.index + 1),
                exponent: if l.inverse { -1 } else { 1 },
            }),
        }
    }
    Ok(XWord::new(free_reduce(out)))
}

/// The free alphabet `{a, b, c}` of the three generators of `FVP_3`.
pub fn abc_alphabet() -> Arc<Alphabet> {
    Alphabet::free(["a", "b", "c"]).expect("static alphabet")
}

/// Substitutes `λ_{1,3} → b^-1 a`, `λ_{2,3} → b`, `λ_{1,2} → c^-1 b`.
pub fn to_abc(lw: &LambdaWord) -> Result<Word> {
    let alpha = abc_alphabet();
    let (a, b, c) = (0, 1, 2);
    let mut letters = Vec::new();
    for l in lw.letters() {
        let image: &[Letter] = match (l.i, l.j) {
            (1, 3) => &[Letter::neg(b), Letter::pos(a)],
            (2, 3) => &[Letter::pos(b)],
            (1, 2) => &[Letter::neg(c), Letter::pos(b)],
            _ => {
                return Err(Error::IndexOutOfRange {
                    index: l.i.max(l.j),
                    n: 3,
                })
            }
        };
        let inv: Vec<Letter> = image.iter().rev().map(|x| x.inv()).collect();
        let piece = if l.exponent < 0 { &inv[..] } else { image };
        for _ in 0..l.exponent.unsigned_abs() {
            letters.extend_from_slice(piece);
        }
    }
    Word::normalize(&alpha, letters)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bw(s: &str, n: usize) -> BraidWord {
        BraidWord::parse(s, n).unwrap()
    }

    #[test]
    fn lambda_rewrites() {
        let l = rewrite_to_lambda(&bw("r1 S1", 2), BraidMode::Vb).unwrap();
        assert_eq!(l.to_string(), "L(1,2)");
        assert!(
            rewrite_to_lambda(&BraidWord::empty(3).unwrap(), BraidMode::Fvb)
                .unwrap()
                .is_empty()
        );
        assert!(matches!(
            rewrite_to_lambda(&bw("s1", 2), BraidMode::Vb),
            Err(Error::NotPure(_))
        ));
        let l = rewrite_to_lambda(&bw("S1 r1", 2), BraidMode::Vb).unwrap();
        assert_eq!(l.to_string(), "L(2,1)");
        let l = rewrite_to_lambda(&bw("S1 r1", 2), BraidMode::Fvb).unwrap();
        assert_eq!(l.to_string(), "L(1,2)^-1");
    }

    #[test]
    fn x_rewrites() {
        assert_eq!(rewrite_to_x(&bw("s1", 2)).unwrap().to_string(), "X(1,2)");
        assert_eq!(
            rewrite_to_x(&bw("r1 s1 r1", 2)).unwrap().to_string(),
            "X(2,1)"
        );
        assert_eq!(
            rewrite_to_x(&bw("s1 s1", 2)).unwrap().to_string(),
            "X(1,2)^2"
        );
        assert!(matches!(
            rewrite_to_x(&bw("r1", 2)),
            Err(Error::NotRabenda(_))
        ));
    }

    #[test]
    fn x_round_trip_is_literal_for_distinguished_elements() {
        for n in 2..5 {
            for i in 1..=n {
                for j in 1..=n {
                    if i != j {
                        let w = x_elem(i, j, n).unwrap();
                        let x = rewrite_to_x(&w).unwrap();
                        assert_eq!(x.letters(), &[IndexedLetter { i, j, exponent: 1 }]);
                    }
                }
            }
        }
    }

    #[test]
    fn abc_substitution() {
        let l = |i, j, exponent| IndexedLetter { i, j, exponent };
        assert_eq!(
            to_abc(&LambdaWord::new(vec![l(2, 3, 1)]))
                .unwrap()
                .to_string(),
            "b"
        );
        let w = LambdaWord::new(vec![l(1, 3, -1), l(1, 2, 1), l(2, 3, 1)]);
        assert_eq!(to_abc(&w).unwrap().to_string(), "a^-1 b c^-1 b^2");
        assert!(to_abc(&LambdaWord::default()).unwrap().is_identity());
        assert!(to_abc(&LambdaWord::new(vec![l(1, 4, 1)])).is_err());
    }

    #[test]
    fn json_triples() {
        let w = LambdaWord::new(vec![IndexedLetter {
            i: 1,
            j: 3,
            exponent: -1,
        }]);
        assert_eq!(serde_json::to_string(&w).unwrap(), "[[1,3,-1]]");
    }

    #[test]
    fn expansion_is_pure() {
        let w = rewrite_to_lambda(&bw("(r1 s2)^6", 3), BraidMode::Fvb).unwrap();
        let b = w.to_braid(3).unwrap();
        assert!(iota1(&b).is_identity());
        assert!(b.letters().iter().all(|l| l.index < 3));
    }
}
