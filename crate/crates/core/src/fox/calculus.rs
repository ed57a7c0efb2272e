use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::{variables, LaurentPoly, RingMatrix};
use crate::endo::Endomorphism;
use crate::error::{Error, Result};
use crate::words::{same_alphabet, Alphabet, Letter, Word};

/// Integer linear combination of reduced words of a free group.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupRingElement {
    alphabet: Arc<Alphabet>,
    terms: BTreeMap<Vec<Letter>, BigInt>,
}

impl GroupRingElement {
    pub fn zero(alphabet: &Arc<Alphabet>) -> Self {
        GroupRingElement {
            alphabet: alphabet.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(alphabet: &Arc<Alphabet>) -> Self {
        Self::from_word(&Word::identity(alphabet))
    }

    pub fn from_word(w: &Word) -> Self {
        Self::term(w, BigInt::one())
    }

    pub fn term(w: &Word, coeff: BigInt) -> Self {
        let mut g = Self::zero(w.alphabet());
        g.add_term(w.letters().to_vec(), coeff);
        g
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Word, &BigInt)> + '_ {
        self.terms.iter().map(|(ls, c)| {
            let w = Word::normalize(&self.alphabet, ls.iter().copied()).expect("stored word");
            (w, c)
        })
    }

    fn add_term(&mut self, letters: Vec<Letter>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(letters).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    fn check(&self, other: &GroupRingElement) -> Result<()> {
        if same_alphabet(&self.alphabet, &other.alphabet) {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }

    pub fn add(&self, other: &GroupRingElement) -> Result<GroupRingElement> {
        self.check(other)?;
        let mut g = self.clone();
        for (ls, c) in &other.terms {
            g.add_term(ls.clone(), c.clone());
        }
        Ok(g)
    }

    pub fn neg(&self) -> GroupRingElement {
        GroupRingElement {
            alphabet: self.alphabet.clone(),
            terms: self.terms.iter().map(|(l, c)| (l.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &GroupRingElement) -> Result<GroupRingElement> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &GroupRingElement) -> Result<GroupRingElement> {
        self.check(other)?;
        let mut g = Self::zero(&self.alphabet);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let w = Word::normalize(&self.alphabet, a.iter().chain(b).copied())?;
                g.add_term(w.letters().to_vec(), ca * cb);
            }
        }
        Ok(g)
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms().enumerate() {
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if w.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{abs} {w}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupRingElement({self})")
    }
}

fn require_free(alphabet: &Alphabet) -> Result<()> {
    if alphabet.is_free() {
        Ok(())
    } else {
        Err(Error::NotFree)
    }
}

fn derivative_at(w: &Word, s: usize) -> GroupRingElement {
    let alpha = w.alphabet();
    let mut out = GroupRingElement::zero(alpha);
    let mut prefix: Vec<Letter> = Vec::with_capacity(w.len());
    for &l in w.letters() {
        if l.symbol() == s && !l.is_inverse() {
            out.add_term(prefix.clone(), BigInt::one());
        }
        prefix.push(l);
        if l.symbol() == s && l.is_inverse() {
            out.add_term(prefix.clone(), -BigInt::one());
        }
    }
    out
}

/// `∂w/∂s` in the integral group ring of a free group.
pub fn fox_derivative(w: &Word, symbol: &str) -> Result<GroupRingElement> {
    require_free(w.alphabet())?;
    let s = w.alphabet().lookup(symbol)?;
    Ok(derivative_at(w, s))
}

/// A homomorphism from a free group onto a free abelian group, given by a
/// monomial for each symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    vars: Arc<[String]>,
    images: HashMap<String, Vec<i64>>,
}

impl Assignment {
    pub fn new(vars: &Arc<[String]>) -> Self {
        Assignment {
            vars: vars.clone(),
            images: HashMap::new(),
        }
    }

    /// Sends `symbol` to `Π vars[k]^exponents[k]`.
    pub fn with(mut self, symbol: &str, exponents: Vec<i64>) -> Self {
        assert_eq!(exponents.len(), self.vars.len(), "exponent vector length");
        self.images.insert(symbol.to_owned(), exponents);
        self
    }

    /// `x_i ↦ p_i`, `y_i ↦ q_i` over `ℤ[p_1^{±1}, .., p_n^{±1}, q_1^{±1}, .., q_n^{±1}]`.
    pub fn generic(n: usize) -> Self {
        let names = (1..=n)
            .map(|i| format!("p{i}"))
            .chain((1..=n).map(|i| format!("q{i}")));
        let mut a = Self::new(&variables(names));
        for i in 0..n {
            let mut p = vec![0; 2 * n];
            p[i] = 1;
            let mut q = vec![0; 2 * n];
            q[n + i] = 1;
            a = a
                .with(&format!("x{}", i + 1), p)
                .with(&format!("y{}", i + 1), q);
        }
        a
    }

    /// `x_i ↦ p`, `y_i ↦ 1` over `ℤ[p^{±1}]`.
    pub fn specialized(n: usize) -> Self {
        let mut a = Self::new(&variables(["p"]));
        for i in 1..=n {
            a = a
                .with(&format!("x{i}"), vec![1])
                .with(&format!("y{i}"), vec![0]);
        }
        a
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn monomial(&self, symbol: &str) -> Result<&[i64]> {
        self.images
            .get(symbol)
            .map(Vec::as_slice)
            .ok_or_else(|| Error::MissingAssignment(symbol.to_owned()))
    }

    fn word_exponents(&self, alphabet: &Alphabet, letters: &[Letter]) -> Result<Vec<i64>> {
        let mut e = vec![0; self.vars.len()];
        for l in letters {
            let m = self.monomial(alphabet.symbol(l.symbol()))?;
            for (o, &d) in e.iter_mut().zip(m) {
                *o += l.exponent() * d;
            }
        }
        Ok(e)
    }
}

/// Pushes a group ring element forward along the assignment.
pub fn abelianize(g: &GroupRingElement, assignment: &Assignment) -> Result<LaurentPoly> {
    let mut out = LaurentPoly::zero(&assignment.vars);
    for (letters, c) in &g.terms {
        let e = assignment.word_exponents(&g.alphabet, letters)?;
        out = &out + &LaurentPoly::monomial(&assignment.vars, e, c.clone());
    }
    Ok(out)
}

/// Matrix whose entry `(i, j)` is the abelianized derivative of the image of
/// symbol `i` with respect to symbol `j`.
pub fn magnus_matrix(e: &Endomorphism, assignment: &Assignment) -> Result<RingMatrix> {
    let alpha = e.alphabet();
    require_free(alpha)?;
    for s in alpha.symbols() {
        assignment.monomial(s)?;
    }
    let n = alpha.len();
    let mut m = RingMatrix::zero(&assignment.vars, n, n);
    for i in 0..n {
        for j in 0..n {
            let d = derivative_at(e.image_of(i), j);
            m.set(i, j, abelianize(&d, assignment)?);
        }
    }
    Ok(m)
}
