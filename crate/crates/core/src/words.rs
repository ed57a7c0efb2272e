//! Reduced words in free groups and in partially commutative (graph) groups.
//!
//! Every [`Word`] is kept in a canonical normal form. Letters are first
//! cancelled modulo the commutation relations of the alphabet, then the
//! reduced word is rearranged into the lexicographically least member of its
//! commutation class. Letters are ordered by symbol declaration order, with
//! `s` before `s^-1`. For an alphabet without commuting pairs this is plain
//! free reduction.
//!
//! Text syntax: whitespace separated tokens `x1 y2^-1 z^3`; the empty word is
//! written `1`.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{parse_err, Error, Result};

/// An ordered list of distinct generator names, with an optional set of
/// commuting generator pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<String>,
    commuting: BTreeSet<(usize, usize)>,
    masks: Vec<Vec<u64>>,
    involutive: Vec<bool>,
}

impl Alphabet {
    /// Alphabet of a free group.
    pub fn free<S: AsRef<str>>(symbols: impl IntoIterator<Item = S>) -> Result<Arc<Alphabet>> {
        Self::partially_commutative(symbols, &[] as &[(&str, &str)])
    }

    /// Alphabet of the graph group where each listed pair of symbols commutes.
    pub fn partially_commutative<S: AsRef<str>, P: AsRef<str>>(
        symbols: impl IntoIterator<Item = S>,
        pairs: &[(P, P)],
    ) -> Result<Arc<Alphabet>> {
        Self::with_involutions(symbols, pairs, &[] as &[&str])
    }

    /// Like [`Alphabet::partially_commutative`], with the listed symbols of
    /// order two. Their letters are always written with exponent `+1`.
    pub fn with_involutions<S: AsRef<str>, P: AsRef<str>, I: AsRef<str>>(
        symbols: impl IntoIterator<Item = S>,
        pairs: &[(P, P)],
        involutions: &[I],
    ) -> Result<Arc<Alphabet>> {
        let symbols: Vec<String> = symbols.into_iter().map(|s| s.as_ref().to_owned()).collect();
        let mut seen = BTreeSet::new();
        for s in &symbols {
            if s.is_empty()
                || s == "1"
                || !s
                    .chars()
                    .all(|c| c.is_alphanumeric() || c == '_' || c == '.' || c == '\'')
            {
                return Err(parse_err(s.clone(), "invalid symbol name"));
            }
            if !seen.insert(s.as_str()) {
                return Err(Error::DuplicateSymbol(s.clone()));
            }
        }
        let lookup = |name: &str| {
            symbols
                .iter()
                .position(|s| s == name)
                .ok_or_else(|| Error::UnknownSymbol(name.to_owned()))
        };
        let mut commuting = BTreeSet::new();
        for (a, b) in pairs {
            let (a, b) = (lookup(a.as_ref())?, lookup(b.as_ref())?);
            if a != b {
                commuting.insert((a.min(b), a.max(b)));
            }
        }
        let words = symbols.len().div_ceil(64).max(1);
        let mut masks = vec![vec![0u64; words]; symbols.len()];
        for &(a, b) in &commuting {
            masks[a][b / 64] |= 1 << (b % 64);
            masks[b][a / 64] |= 1 << (a % 64);
        }
        let mut involutive = vec![false; symbols.len()];
        for name in involutions {
            involutive[lookup(name.as_ref())?] = true;
        }
        Ok(Arc::new(Alphabet {
            symbols,
            commuting,
            masks,
            involutive,
        }))
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn symbol(&self, index: usize) -> &str {
        &self.symbols[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s == name)
    }

    pub fn lookup(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownSymbol(name.to_owned()))
    }

    /// Commuting pairs as symbol indices, each with the smaller index first.
    pub fn commuting_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.commuting.iter().copied()
    }

    /// True when no pair of symbols commutes and no symbol has order two.
    pub fn is_free(&self) -> bool {
        self.commuting.is_empty() && !self.involutive.contains(&true)
    }

    pub fn is_involution(&self, symbol: usize) -> bool {
        self.involutive[symbol]
    }

    /// Whether distinct symbols `a` and `b` commute. A symbol never commutes
    /// with itself in this sense.
    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.masks[a][b / 64] & (1 << (b % 64)) != 0
    }
}

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    symbol: u32,
    inverse: bool,
}

impl Letter {
    pub fn new(symbol: usize, inverse: bool) -> Letter {
        Letter {
            symbol: symbol as u32,
            inverse,
        }
    }

    pub fn pos(symbol: usize) -> Letter {
        Letter::new(symbol, false)
    }

    pub fn neg(symbol: usize) -> Letter {
        Letter::new(symbol, true)
    }

    pub fn symbol(self) -> usize {
        self.symbol as usize
    }

    pub fn is_inverse(self) -> bool {
        self.inverse
    }

    /// `+1` or `-1`.
    pub fn exponent(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn inv(self) -> Letter {
        Letter {
            symbol: self.symbol,
            inverse: !self.inverse,
        }
    }
}

/// Accumulates letters, cancelling as it goes.
pub(crate) struct Reducer<'a> {
    alphabet: &'a Alphabet,
    out: Vec<Letter>,
}

impl<'a> Reducer<'a> {
    pub(crate) fn new(alphabet: &'a Alphabet) -> Self {
        Reducer {
            alphabet,
            out: Vec::new(),
        }
    }

    pub(crate) fn push(&mut self, mut letter: Letter) {
        let involution = self.alphabet.involutive[letter.symbol()];
        if involution {
            letter.inverse = false;
        }
        // Walk back over letters commuting with `letter`; the first one that
        // does not commute either cancels it or blocks it.
        let mut p = self.out.len();
        while p > 0 {
            let prev = self.out[p - 1];
            if prev.symbol == letter.symbol {
                if prev.inverse != letter.inverse || involution {
                    self.out.remove(p - 1);
                    return;
                }
                break;
            }
            if !self.alphabet.commute(prev.symbol(), letter.symbol()) {
                break;
            }
            p -= 1;
        }
        self.out.push(letter);
    }

    pub(crate) fn extend(&mut self, letters: impl IntoIterator<Item = Letter>) {
        for l in letters {
            self.push(l);
        }
    }

    pub(crate) fn finish(self) -> Vec<Letter> {
        if self.alphabet.commuting.is_empty() {
            self.out
        } else {
            lex_least(self.alphabet, self.out)
        }
    }
}

/// Lexicographically least rearrangement of a reduced word under the
/// commutation relations.
fn lex_least(alphabet: &Alphabet, mut rest: Vec<Letter>) -> Vec<Letter> {
    let words = alphabet.symbols.len().div_ceil(64).max(1);
    let mut seen = vec![0u64; words];
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        seen.iter_mut().for_each(|w| *w = 0);
        let mut best = 0usize;
        for k in 1..rest.len() {
            let prev = rest[k - 1].symbol();
            if alphabet.masks[prev].iter().all(|&m| m == 0) {
                break;
            }
            seen[prev / 64] |= 1 << (prev % 64);
            let s = rest[k].symbol();
            if seen[s / 64] & (1 << (s % 64)) != 0 {
                continue;
            }
            let movable = seen
                .iter()
                .zip(&alphabet.masks[s])
                .all(|(&a, &m)| a & !m == 0);
            if movable && rest[k] < rest[best] {
                best = k;
            }
        }
        out.push(rest.remove(best));
    }
    out
}

/// A group element as a canonical word over an [`Alphabet`].
#[derive(Clone)]
pub struct Word {
    alphabet: Arc<Alphabet>,
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity(alphabet: &Arc<Alphabet>) -> Word {
        Word {
            alphabet: alphabet.clone(),
            letters: Vec::new(),
        }
    }

    pub fn generator(alphabet: &Arc<Alphabet>, name: &str) -> Result<Word> {
        let s = alphabet.lookup(name)?;
        Ok(Word {
            alphabet: alphabet.clone(),
            letters: vec![Letter::pos(s)],
        })
    }

    pub fn letter(alphabet: &Arc<Alphabet>, letter: Letter) -> Word {
        Word {
            alphabet: alphabet.clone(),
            letters: vec![letter],
        }
    }

    /// Normal form of a raw letter sequence.
    pub fn normalize(
        alphabet: &Arc<Alphabet>,
        letters: impl IntoIterator<Item = Letter>,
    ) -> Result<Word> {
        let mut r = Reducer::new(alphabet);
        for l in letters {
            if l.symbol() >= alphabet.len() {
                return Err(Error::UnknownSymbol(format!("#{}", l.symbol())));
            }
            r.push(l);
        }
        Ok(Word {
            alphabet: alphabet.clone(),
            letters: r.finish(),
        })
    }

    /// Builds a word from letters already known to be in range.
    pub(crate) fn from_reducer(alphabet: &Arc<Alphabet>, r: Reducer<'_>) -> Word {
        Word {
            alphabet: alphabet.clone(),
            letters: r.finish(),
        }
    }

    /// Parses `x1 y2^-1 z^3`; `1` denotes the identity.
    pub fn parse(alphabet: &Arc<Alphabet>, text: &str) -> Result<Word> {
        Word::normalize(alphabet, parse_letters(alphabet, text)?)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn same_alphabet(&self, other: &Word) -> bool {
        same_alphabet(&self.alphabet, &other.alphabet)
    }

    fn check(&self, other: &Word) -> Result<()> {
        if self.same_alphabet(other) {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }

    pub fn multiply(&self, other: &Word) -> Result<Word> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Word) -> Word {
        if other.is_empty() {
            return self.clone();
        }
        if self.is_empty() {
            return other.clone();
        }
        let mut r = Reducer::new(&self.alphabet);
        r.extend(self.letters.iter().copied());
        r.extend(other.letters.iter().copied());
        Word::from_reducer(&self.alphabet, r)
    }

    pub fn invert(&self) -> Word {
        let letters: Vec<Letter> = self.letters.iter().rev().map(|l| l.inv()).collect();
        if self.alphabet.is_free() {
            Word {
                alphabet: self.alphabet.clone(),
                letters,
            }
        } else {
            let mut r = Reducer::new(&self.alphabet);
            r.extend(letters);
            Word::from_reducer(&self.alphabet, r)
        }
    }

    /// `g^-1 w g`.
    pub fn conjugate(&self, g: &Word) -> Result<Word> {
        self.check(g)?;
        let mut r = Reducer::new(&self.alphabet);
        r.extend(g.letters.iter().rev().map(|l| l.inv()));
        r.extend(self.letters.iter().copied());
        r.extend(g.letters.iter().copied());
        Ok(Word::from_reducer(&self.alphabet, r))
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let mut r = Reducer::new(&self.alphabet);
        for _ in 0..k.unsigned_abs() {
            r.extend(base.letters.iter().copied());
        }
        Word::from_reducer(&self.alphabet, r)
    }

    /// Signed number of occurrences of the named symbol.
    pub fn exponent_sum(&self, name: &str) -> Result<i64> {
        Ok(self.exponent_sum_of(self.alphabet.lookup(name)?))
    }

    pub fn exponent_sum_of(&self, symbol: usize) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.symbol() == symbol)
            .map(|l| l.exponent())
            .sum()
    }

    /// Whether the named symbol occurs at all.
    pub fn contains_symbol(&self, symbol: usize) -> bool {
        self.letters.iter().any(|l| l.symbol() == symbol)
    }
}

pub(crate) fn same_alphabet(a: &Arc<Alphabet>, b: &Arc<Alphabet>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Splits `x1 y2^-1 z^3` into letters without reducing.
pub fn parse_letters(alphabet: &Alphabet, text: &str) -> Result<Vec<Letter>> {
    let mut out = Vec::new();
    for token in text.split_whitespace() {
        let (name, exp) = match token.split_once('^') {
            Some((name, e)) => {
                let k: i64 = e
                    .parse()
                    .map_err(|_| parse_err(token, "exponent is not an integer"))?;
                (name, k)
            }
            None => (token, 1),
        };
        if name == "1" && alphabet.index_of("1").is_none() {
            continue;
        }
        let s = alphabet
            .index_of(name)
            .ok_or_else(|| Error::UnknownSymbol(name.to_owned()))?;
        let l = Letter::new(s, exp < 0);
        out.extend(std::iter::repeat_n(l, exp.unsigned_abs() as usize));
    }
    Ok(out)
}

/// Formats letters with runs collapsed into powers.
pub(crate) fn format_letters(alphabet: &Alphabet, letters: &[Letter]) -> String {
    if letters.is_empty() {
        return "1".to_owned();
    }
    let mut parts = Vec::new();
    let mut i = 0;
    while i < letters.len() {
        let l = letters[i];
        let mut j = i;
        while j < letters.len() && letters[j] == l {
            j += 1;
        }
        let run = (j - i) as i64 * l.exponent();
        let name = alphabet.symbol(l.symbol());
        if run == 1 {
            parts.push(name.to_owned());
        } else {
            parts.push(format!("{name}^{run}"));
        }
        i = j;
    }
    parts.join(" ")
}

impl PartialEq for Word {
    fn eq(&self, other: &Word) -> bool {
        self.letters == other.letters && self.same_alphabet(other)
    }
}

impl Eq for Word {}

impl std::hash::Hash for Word {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.letters.hash(state);
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_letters(&self.alphabet, &self.letters))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::{HashSet, VecDeque};

    fn free3() -> Arc<Alphabet> {
        Alphabet::free(["x1", "x2", "x3", "y1", "y2", "y3"]).unwrap()
    }

    fn graph() -> Arc<Alphabet> {
        Alphabet::partially_commutative(["x1", "x2", "y1", "y2", "z"], &[("y1", "z"), ("y2", "z")])
            .unwrap()
    }

    fn w(a: &Arc<Alphabet>, s: &str) -> Word {
        Word::parse(a, s).unwrap()
    }

    #[test]
    fn inverse_cancellation() {
        let a = free3();
        assert!(w(&a, "x1 x1^-1").is_empty());
    }

    #[test]
    fn commutation_then_cancellation() {
        let a = Alphabet::partially_commutative(["x1", "y1", "z"], &[("y1", "z")]).unwrap();
        assert_eq!(w(&a, "z y1 z^-1"), w(&a, "y1"));
    }

    #[test]
    fn hand_reduction() {
        let a = free3();
        assert_eq!(w(&a, "x1 y2 y2 x1^-1 x1").to_string(), "x1 y2^2");
    }

    #[test]
    fn multiply_examples() {
        let a = free3();
        assert!(w(&a, "x1").multiply(&w(&a, "x1^-1")).unwrap().is_empty());
        assert_eq!(
            w(&a, "x1 y2")
                .multiply(&w(&a, "y2^-1 x3"))
                .unwrap()
                .to_string(),
            "x1 x3"
        );
        let u = w(&a, "x2 y3^-1 x1");
        assert_eq!(u.multiply(&Word::identity(&a)).unwrap(), u);
    }

    #[test]
    fn alphabet_mismatch() {
        let a = free3();
        let b = graph();
        assert_eq!(
            w(&a, "x1").multiply(&w(&b, "x1")),
            Err(Error::AlphabetMismatch)
        );
    }

    #[test]
    fn invert_examples() {
        let a = free3();
        assert!(Word::identity(&a).invert().is_empty());
        assert_eq!(w(&a, "x1 y2").invert().to_string(), "y2^-1 x1^-1");
    }

    #[test]
    fn conjugate_examples() {
        let a = Alphabet::partially_commutative(["x1", "x2", "y1", "z"], &[("y1", "z")]).unwrap();
        assert_eq!(
            w(&a, "y1").conjugate(&Word::identity(&a)).unwrap(),
            w(&a, "y1")
        );
        assert_eq!(w(&a, "y1").conjugate(&w(&a, "z")).unwrap(), w(&a, "y1"));
        let f = free3();
        assert_eq!(
            w(&f, "x1").conjugate(&w(&f, "x2")).unwrap().to_string(),
            "x2^-1 x1 x2"
        );
    }

    #[test]
    fn exponent_sum_examples() {
        let a = Alphabet::free(["x1", "y1", "z"]).unwrap();
        assert_eq!(w(&a, "z y1 z").exponent_sum("z").unwrap(), 2);
        assert_eq!(Word::identity(&a).exponent_sum("z").unwrap(), 0);
        assert_eq!(w(&a, "x1 z^-1 y1 z^-1").exponent_sum("z").unwrap(), -2);
        assert!(matches!(
            w(&a, "z").exponent_sum("q"),
            Err(Error::UnknownSymbol(_))
        ));
    }

    #[test]
    fn unknown_symbol_is_an_input_error() {
        let a = free3();
        assert_eq!(
            Word::parse(&a, "x1 q7"),
            Err(Error::UnknownSymbol("q7".into()))
        );
        assert!(Word::normalize(&a, [Letter::pos(17)]).is_err());
    }

    #[test]
    fn duplicate_and_bad_alphabets() {
        assert!(matches!(
            Alphabet::free(["a", "b", "a"]),
            Err(Error::DuplicateSymbol(_))
        ));
        assert!(Alphabet::partially_commutative(["a", "b"], &[("a", "c")]).is_err());
        assert!(Alphabet::free(["a b"]).is_err());
    }

    #[test]
    fn display_and_parse_powers() {
        let a = free3();
        let u = w(&a, "x1^-3 y2^2 x1");
        assert_eq!(u.to_string(), "x1^-3 y2^2 x1");
        assert_eq!(w(&a, &u.to_string()), u);
        assert_eq!(Word::identity(&a).to_string(), "1");
        assert!(w(&a, "1").is_empty());
    }

    #[test]
    fn graph_normal_form_is_lex_least() {
        let a = graph();
        // z commutes with y's; x blocks.
        assert_eq!(w(&a, "z y1").to_string(), "y1 z");
        assert_eq!(w(&a, "z x1 z^-1 y2 z").to_string(), "z x1 y2");
        assert_eq!(w(&a, "x2 z y1 z^-1").to_string(), "x2 y1");
        assert_eq!(w(&a, "y2 z y1").to_string(), "y2 y1 z");
    }

    // Independent oracle: BFS over all words reachable by commuting swaps and
    // cancellations, returning the shortlex-least one.
    fn brute_normal(alpha: &Alphabet, raw: &[Letter]) -> Vec<Letter> {
        let mut seen: HashSet<Vec<Letter>> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(raw.to_vec());
        queue.push_back(raw.to_vec());
        let mut best = raw.to_vec();
        while let Some(cur) = queue.pop_front() {
            if (cur.len(), &cur) < (best.len(), &best) {
                best = cur.clone();
            }
            for i in 0..cur.len().saturating_sub(1) {
                let (p, q) = (cur[i], cur[i + 1]);
                let mut next = None;
                if p.symbol() == q.symbol() && p.is_inverse() != q.is_inverse() {
                    let mut c = cur.clone();
                    c.drain(i..i + 2);
                    next = Some(c);
                } else if p.symbol() != q.symbol() && alpha.commute(p.symbol(), q.symbol()) {
                    let mut c = cur.clone();
                    c.swap(i, i + 1);
                    next = Some(c);
                }
                if let Some(c) = next {
                    if seen.insert(c.clone()) {
                        queue.push_back(c);
                    }
                }
            }
        }
        best
    }

    fn letters_strategy(nsym: usize, max: usize) -> impl Strategy<Value = Vec<Letter>> {
        prop::collection::vec((0..nsym, any::<bool>()), 0..=max)
            .prop_map(|v| v.into_iter().map(|(s, i)| Letter::new(s, i)).collect())
    }

    proptest! {
        #[test]
        fn normal_form_matches_brute_force(raw in letters_strategy(5, 9)) {
            let a = graph();
            let nf = Word::normalize(&a, raw.clone()).unwrap();
            let expected = brute_normal(&a, &raw);
            prop_assert_eq!(nf.letters(), expected.as_slice());
        }

        #[test]
        fn normal_form_is_idempotent(raw in letters_strategy(5, 40)) {
            let a = graph();
            let nf = Word::normalize(&a, raw).unwrap();
            let again = Word::normalize(&a, nf.letters().to_vec()).unwrap();
            prop_assert_eq!(nf, again);
        }

        #[test]
        fn group_laws(u in letters_strategy(5, 20), v in letters_strategy(5, 20), t in letters_strategy(5, 20)) {
            let a = graph();
            let (u, v, t) = (
                Word::normalize(&a, u).unwrap(),
                Word::normalize(&a, v).unwrap(),
                Word::normalize(&a, t).unwrap(),
            );
            let e = Word::identity(&a);
            prop_assert_eq!(
                u.multiply(&v).unwrap().multiply(&t).unwrap(),
                u.multiply(&v.multiply(&t).unwrap()).unwrap()
            );
            prop_assert_eq!(u.invert().invert(), u.clone());
            prop_assert!(u.multiply(&u.invert()).unwrap().is_empty());
            prop_assert_eq!(e.multiply(&u).unwrap(), u.clone());
            prop_assert_eq!(u.multiply(&e).unwrap(), u.clone());
        }

        #[test]
        fn exponent_sum_is_additive(u in letters_strategy(5, 20), v in letters_strategy(5, 20)) {
            let a = graph();
            let (u, v) = (Word::normalize(&a, u).unwrap(), Word::normalize(&a, v).unwrap());
            for s in 0..a.len() {
                prop_assert_eq!(
                    u.multiply(&v).unwrap().exponent_sum_of(s),
                    u.exponent_sum_of(s) + v.exponent_sum_of(s)
                );
            }
        }

        #[test]
        fn free_length_is_classical_reduced_length(raw in letters_strategy(3, 40)) {
            let a = Alphabet::free(["a", "b", "c"]).unwrap();
            // classical stack reduction
            let mut stack: Vec<Letter> = Vec::new();
            for l in &raw {
                if stack.last() == Some(&l.inv()) { stack.pop(); } else { stack.push(*l); }
            }
            prop_assert_eq!(Word::normalize(&a, raw).unwrap().len(), stack.len());
        }
    }

    /// Applies cancellations and commutations in a random order until no
    /// cancellation is available anywhere.
    fn random_reduce(
        alpha: &Alphabet,
        mut cur: Vec<Letter>,
        rng: &mut impl rand::Rng,
    ) -> Vec<Letter> {
        loop {
            // shuffle via random commuting swaps
            for _ in 0..cur.len() {
                if cur.len() < 2 {
                    break;
                }
                let i = rng.gen_range(0..cur.len() - 1);
                let (p, q) = (cur[i], cur[i + 1]);
                if p.symbol() != q.symbol() && alpha.commute(p.symbol(), q.symbol()) {
                    cur.swap(i, i + 1);
                }
            }
            // all cancellable pairs (letter, later inverse with commuting middle)
            let mut pairs = Vec::new();
            for i in 0..cur.len() {
                for j in i + 1..cur.len() {
                    if cur[j] == cur[i].inv() {
                        pairs.push((i, j));
                        break;
                    }
                    if cur[j].symbol() == cur[i].symbol()
                        || !alpha.commute(cur[i].symbol(), cur[j].symbol())
                    {
                        break;
                    }
                }
            }
            if pairs.is_empty() {
                return cur;
            }
            let (i, j) = pairs[rng.gen_range(0..pairs.len())];
            cur.remove(j);
            cur.remove(i);
        }
    }

    #[test]
    fn confluence_under_random_reduction_order() {
        use rand::{Rng, SeedableRng};
        let a = graph();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10_000 {
            let len = rng.gen_range(0..=64);
            let raw: Vec<Letter> = (0..len)
                .map(|_| Letter::new(rng.gen_range(0..a.len()), rng.gen()))
                .collect();
            let nf = Word::normalize(&a, raw.clone()).unwrap();
            let other = random_reduce(&a, raw, &mut rng);
            assert_eq!(other.len(), nf.len());
            assert_eq!(Word::normalize(&a, other).unwrap(), nf);
        }
    }

    #[test]
    fn order_two_symbols() {
        let a =
            Alphabet::with_involutions(["x1", "x2", "y1", "z"], &[("y1", "z")], &["z"]).unwrap();
        assert!(!a.is_free());
        assert_eq!(w(&a, "x1 z^-1").to_string(), "x1 z");
        assert!(w(&a, "z z").is_empty());
        assert!(w(&a, "z y1 z").to_string() == "y1");
        assert_eq!(w(&a, "x1 z x2").invert().to_string(), "x2^-1 z x1^-1");
        let u = w(&a, "x1 z x2 y1");
        assert!(u.multiply(&u.invert()).unwrap().is_empty());
        assert_eq!(w(&a, "z^3").to_string(), "z");
    }
}
