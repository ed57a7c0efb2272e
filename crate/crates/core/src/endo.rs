//! Endomorphisms of word groups, given by the images of the generators.
//!
//! Composition is a right action in word order: `e1.then(e2)` sends a symbol
//! `s` to `e2(e1(s))`.

use std::fmt;
use std::sync::Arc;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::words::{same_alphabet, Alphabet, Letter, Reducer, Word};

#[derive(Clone, PartialEq, Eq)]
pub struct Endomorphism {
    alphabet: Arc<Alphabet>,
    images: Vec<Word>,
}

impl Endomorphism {
    pub fn identity(alphabet: &Arc<Alphabet>) -> Self {
        Endomorphism {
            alphabet: alphabet.clone(),
            images: (0..alphabet.len())
                .map(|s| Word::letter(alphabet, Letter::pos(s)))
                .collect(),
        }
    }

    /// Sends each listed symbol to its word; unlisted symbols are fixed.
    pub fn from_images<S: AsRef<str>>(
        alphabet: &Arc<Alphabet>,
        images: impl IntoIterator<Item = (S, Word)>,
    ) -> Result<Self> {
        let mut e = Self::identity(alphabet);
        for (name, w) in images {
            let s = alphabet.lookup(name.as_ref())?;
            if !same_alphabet(alphabet, w.alphabet()) {
                return Err(Error::AlphabetMismatch);
            }
            e.images[s] = w;
        }
        Ok(e)
    }

    /// Like [`Endomorphism::from_images`] with images written as text.
    pub fn parse(alphabet: &Arc<Alphabet>, images: &[(&str, &str)]) -> Result<Self> {
        let words = images
            .iter()
            .map(|&(s, w)| Ok((s, Word::parse(alphabet, w)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_images(alphabet, words)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    /// Image of the symbol with the given index.
    pub fn image_of(&self, symbol: usize) -> &Word {
        &self.images[symbol]
    }

    pub fn image(&self, name: &str) -> Result<&Word> {
        Ok(&self.images[self.alphabet.lookup(name)?])
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        if !same_alphabet(&self.alphabet, w.alphabet()) {
            return Err(Error::AlphabetMismatch);
        }
        Ok(self.apply_unchecked(w))
    }

    fn apply_unchecked(&self, w: &Word) -> Word {
        let mut r = Reducer::new(&self.alphabet);
        for l in w.letters() {
            let img = self.images[l.symbol()].letters();
            if l.is_inverse() {
                r.extend(img.iter().rev().map(|x| x.inv()));
            } else {
                r.extend(img.iter().copied());
            }
        }
        Word::from_reducer(&self.alphabet, r)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Endomorphism) -> Result<Endomorphism> {
        if !same_alphabet(&self.alphabet, &other.alphabet) {
            return Err(Error::AlphabetMismatch);
        }
        Ok(Endomorphism {
            alphabet: self.alphabet.clone(),
            images: self
                .images
                .iter()
                .map(|w| other.apply_unchecked(w))
                .collect(),
        })
    }

    /// `k`-fold composite; `power(0)` is the identity.
    pub fn power(&self, k: u32) -> Endomorphism {
        let mut acc = Self::identity(&self.alphabet);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.then(&base).expect("same alphabet");
            }
            k >>= 1;
            if k > 0 {
                base = base.then(&base).expect("same alphabet");
            }
        }
        acc
    }

    /// Equality of endomorphisms, failing on different alphabets.
    pub fn equal(&self, other: &Endomorphism) -> Result<bool> {
        if !same_alphabet(&self.alphabet, &other.alphabet) {
            return Err(Error::AlphabetMismatch);
        }
        Ok(self.images == other.images)
    }

    /// Symbols on which the two endomorphisms disagree, in alphabet order.
    pub fn differing(&self, other: &Endomorphism) -> Vec<usize> {
        (0..self.images.len())
            .filter(|&s| self.images[s] != other.images[s])
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(s, w)| w.letters() == [Letter::pos(s)])
    }

    /// Symbols whose image differs from the symbol itself.
    pub fn moved(&self) -> impl Iterator<Item = usize> + '_ {
        self.images
            .iter()
            .enumerate()
            .filter(|(s, w)| w.letters() != [Letter::pos(*s)])
            .map(|(s, _)| s)
    }
}

impl std::hash::Hash for Endomorphism {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.images.hash(state);
    }
}

impl fmt::Display for Endomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for s in self.moved() {
            if any {
                writeln!(f)?;
            }
            any = true;
            write!(f, "{} -> {}", self.alphabet.symbol(s), self.images[s])?;
        }
        if !any {
            f.write_str("identity")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Endomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .moved()
            .map(|s| format!("{} -> {}", self.alphabet.symbol(s), self.images[s]))
            .collect();
        write!(f, "Endomorphism{{{}}}", parts.join(", "))
    }
}

/// Serializes as a map from every symbol, in alphabet order, to its image.
impl Serialize for Endomorphism {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.images.len()))?;
        for (i, w) in self.images.iter().enumerate() {
            m.serialize_entry(self.alphabet.symbol(i), &w.to_string())?;
        }
        m.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alpha() -> Arc<Alphabet> {
        Alphabet::free(["x1", "x2", "y1", "y2"]).unwrap()
    }

    fn w(a: &Arc<Alphabet>, s: &str) -> Word {
        Word::parse(a, s).unwrap()
    }

    fn s1(a: &Arc<Alphabet>) -> Endomorphism {
        Endomorphism::parse(a, &[("x1", "x2 y2"), ("x2", "x1 y2^-1")]).unwrap()
    }

    fn r1(a: &Arc<Alphabet>) -> Endomorphism {
        Endomorphism::parse(a, &[("x1", "x2"), ("x2", "x1"), ("y1", "y2"), ("y2", "y1")]).unwrap()
    }

    #[test]
    fn apply_examples() {
        let a = alpha();
        let id = Endomorphism::identity(&a);
        assert_eq!(
            id.apply(&w(&a, "x1 y2^-1 x2")).unwrap(),
            w(&a, "x1 y2^-1 x2")
        );
        assert_eq!(s1(&a).apply(&w(&a, "x1")).unwrap(), w(&a, "x2 y2"));
        assert_eq!(s1(&a).apply(&w(&a, "x1^-1")).unwrap(), w(&a, "y2^-1 x2^-1"));
        let other = Alphabet::free(["x1"]).unwrap();
        assert_eq!(s1(&a).apply(&w(&other, "x1")), Err(Error::AlphabetMismatch));
    }

    #[test]
    fn involutions() {
        let a = alpha();
        assert!(r1(&a).then(&r1(&a)).unwrap().is_identity());
        assert!(s1(&a).then(&s1(&a)).unwrap().is_identity());
        assert!(s1(&a).power(2).is_identity());
        assert_eq!(s1(&a).power(0), Endomorphism::identity(&a));
        let e = s1(&a).then(&r1(&a)).unwrap();
        assert_eq!(e.power(2), e.then(&e).unwrap());
        assert_eq!(e.then(&Endomorphism::identity(&a)).unwrap(), e);
    }

    #[test]
    fn right_action_order() {
        let a = alpha();
        // x1 -s1-> x2 y2 -r1-> x1 y1
        let e = s1(&a).then(&r1(&a)).unwrap();
        assert_eq!(e.image("x1").unwrap(), &w(&a, "x1 y1"));
        let x = w(&a, "x1 y2 x2^-1");
        assert_eq!(
            e.apply(&x).unwrap(),
            r1(&a).apply(&s1(&a).apply(&x).unwrap()).unwrap()
        );
    }

    #[test]
    fn power_formula_rho_sigma() {
        let a = alpha();
        let e = r1(&a).then(&s1(&a)).unwrap();
        for k in 0..6u32 {
            let img = e.power(2 * k).image("x1").unwrap().clone();
            let expected = w(&a, "x1")
                .multiply(&w(&a, "y1 y2").pow(-(k as i64)))
                .unwrap();
            assert_eq!(img, expected);
        }
    }

    #[test]
    fn display_suppresses_fixed() {
        let a = alpha();
        assert_eq!(s1(&a).to_string(), "x1 -> x2 y2\nx2 -> x1 y2^-1");
        assert_eq!(Endomorphism::identity(&a).to_string(), "identity");
        let j = serde_json::to_string(&s1(&a)).unwrap();
        assert_eq!(j, r#"{"x1":"x2 y2","x2":"x1 y2^-1","y1":"y1","y2":"y2"}"#);
    }
}
