use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::smith::AbelianInvariants;
use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::reps::{apply_rep, theta};
use crate::words::{Alphabet, Letter, Word};

/// A finite presentation over a free alphabet. Relators are reduced and
/// nontrivial.
#[derive(Clone, PartialEq, Eq)]
pub struct Presentation {
    alphabet: Arc<Alphabet>,
    relators: Vec<Word>,
}

impl Presentation {
    /// Keeps the nontrivial relators, dropping exact repeats.
    pub fn new(alphabet: &Arc<Alphabet>, relators: impl IntoIterator<Item = Word>) -> Result<Self> {
        if !alphabet.is_free() {
            return Err(Error::NotFree);
        }
        let mut seen = HashSet::new();
        let mut kept = Vec::new();
        for r in relators {
            if !Arc::ptr_eq(r.alphabet(), alphabet) && **r.alphabet() != **alphabet {
                return Err(Error::AlphabetMismatch);
            }
            if !r.is_empty() && seen.insert(r.letters().to_vec()) {
                kept.push(r);
            }
        }
        Ok(Presentation {
            alphabet: alphabet.clone(),
            relators: kept,
        })
    }

    /// Parses `generators` and relators written as words.
    pub fn parse(generators: &[&str], relators: &[&str]) -> Result<Self> {
        let alpha = Alphabet::free(generators)?;
        let words = relators
            .iter()
            .map(|r| Word::parse(&alpha, r))
            .collect::<Result<Vec<_>>>()?;
        Self::new(&alpha, words)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn generators(&self) -> &[String] {
        self.alphabet.symbols()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Relator-by-generator matrix of exponent sums.
    pub fn exponent_matrix(&self) -> Vec<Vec<BigInt>> {
        self.relators
            .iter()
            .map(|r| {
                (0..self.alphabet.len())
                    .map(|s| BigInt::from(r.exponent_sum_of(s)))
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| r.to_string()).collect();
        let gens = self.generators().join(", ");
        if rels.is_empty() {
            write!(f, "< {gens} | >")
        } else {
            write!(f, "< {gens} | {} >", rels.join(", "))
        }
    }
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Presentation({self})")
    }
}

/// Serializes as `{"generators": [..], "relators": [..]}` with relators in
/// word syntax.
impl Serialize for Presentation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rels: Vec<String> = self.relators.iter().map(|r| r.to_string()).collect();
        let mut st = s.serialize_struct("Presentation", 2)?;
        st.serialize_field("generators", self.generators())?;
        st.serialize_field("relators", &rels)?;
        st.end()
    }
}

/// The group of the closure of `b`: the quotient of `F(x_1, .., x_n, y)` by
/// `π(θ(b)(x_i)) = x_i` and `π(θ(b)(y_j)) = y`, where `π` sends every `y_j`
/// to `y`.
pub fn link_group(b: &BraidWord) -> Result<Presentation> {
    let n = b.strands();
    let e = apply_rep(&theta(n)?, b)?;
    let names: Vec<String> = (1..=n)
        .map(|i| format!("x{i}"))
        .chain(std::iter::once("y".to_owned()))
        .collect();
    let alpha = Alphabet::free(&names)?;
    let project = |w: &Word| {
        let letters = w.letters().iter().map(|l| {
            let s = if l.symbol() < n { l.symbol() } else { n };
            Letter::new(s, l.is_inverse())
        });
        Word::normalize(&alpha, letters).expect("projected symbols are in range")
    };
    let mut relators = Vec::new();
    for s in 0..2 * n {
        let target = Letter::neg(s.min(n));
        let r = project(e.image_of(s)).mul_unchecked(&Word::letter(&alpha, target));
        relators.push(r);
    }
    Presentation::new(&alpha, relators)
}

type Rel = Vec<Letter>;

fn reduce(letters: impl IntoIterator<Item = Letter>) -> Rel {
    let mut out: Rel = Vec::new();
    for l in letters {
        if out.last() == Some(&l.inv()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

fn cyclic_reduce(r: &[Letter]) -> Rel {
    let mut r = reduce(r.iter().copied());
    while r.len() >= 2 && r[0] == r[r.len() - 1].inv() {
        r.pop();
        r.remove(0);
    }
    r
}

fn inverse(r: &[Letter]) -> Rel {
    r.iter().rev().map(|l| l.inv()).collect()
}

fn rotate(r: &[Letter], k: usize) -> Rel {
    r[k..].iter().chain(&r[..k]).copied().collect()
}

/// Least rotation of the relator or its inverse; equal keys give the same
/// normal closure.
fn cyclic_key(r: &[Letter]) -> Rel {
    let inv = inverse(r);
    (0..r.len())
        .flat_map(|k| [rotate(r, k), rotate(&inv, k)])
        .min()
        .unwrap_or_default()
}

struct Work {
    names: Vec<String>,
    alive: Vec<bool>,
    relators: Vec<Rel>,
}

impl Work {
    /// Cyclically reduces, drops trivial relators and repeats up to rotation
    /// and inversion, and inverts relators of negative exponent sum.
    fn tidy(&mut self) -> bool {
        let before = self.relators.clone();
        let mut seen = HashSet::new();
        self.relators = std::mem::take(&mut self.relators)
            .into_iter()
            .map(|r| {
                let r = cyclic_reduce(&r);
                if r.iter().map(|l| l.exponent()).sum::<i64>() < 0 {
                    inverse(&r)
                } else {
                    r
                }
            })
            .filter(|r| !r.is_empty() && seen.insert(cyclic_key(r)))
            .collect();
        self.relators != before
    }

    /// Removes a generator occurring exactly once in some relator, preferring
    /// the shortest such relator.
    fn eliminate(&mut self) -> bool {
        let mut best: Option<(usize, usize)> = None;
        for (k, r) in self.relators.iter().enumerate() {
            for g in 0..self.names.len() {
                if !self.alive[g] || r.iter().filter(|l| l.symbol() == g).count() != 1 {
                    continue;
                }
                let better = best.is_none_or(|(bk, _)| r.len() < self.relators[bk].len());
                if better {
                    best = Some((k, g));
                }
                break;
            }
        }
        let Some((k, g)) = best else {
            return false;
        };
        let r = self.relators.remove(k);
        let pos = r.iter().position(|l| l.symbol() == g).expect("occurs once");
        let rot = rotate(&r, pos);
        let rest = &rot[1..];
        // g^e rest = 1, so g = rest^-1 for e = 1 and g = rest for e = -1.
        let value: Rel = if rot[0].is_inverse() {
            rest.to_vec()
        } else {
            inverse(rest)
        };
        let value_inv = inverse(&value);
        for rel in &mut self.relators {
            let expanded = rel.iter().flat_map(|&l| {
                if l.symbol() != g {
                    vec![l]
                } else if l.is_inverse() {
                    value_inv.clone()
                } else {
                    value.clone()
                }
            });
            *rel = reduce(expanded);
        }
        self.alive[g] = false;
        true
    }

    /// Replaces a cyclic subword of a relator that is more than half of a
    /// cyclic conjugate of a shorter relator by the inverse of the remainder.
    fn substitute(&mut self) -> bool {
        for si in 0..self.relators.len() {
            for ri in 0..self.relators.len() {
                if si == ri || self.relators[si].len() > self.relators[ri].len() {
                    continue;
                }
                if let Some(new) = shorten(&self.relators[ri], &self.relators[si]) {
                    self.relators[ri] = new;
                    return true;
                }
            }
        }
        false
    }
}

fn shorten(r: &[Letter], s: &[Letter]) -> Option<Rel> {
    let len = s.len();
    let inv = inverse(s);
    for base in [s, inv.as_slice()] {
        for k in 0..len {
            let t = rotate(base, k);
            for ulen in (len / 2 + 1..=len).rev() {
                let (u, v) = t.split_at(ulen);
                for start in 0..r.len() {
                    let rot = rotate(r, start);
                    if rot.len() >= ulen && rot[..ulen] == *u {
                        let replaced = inverse(v).into_iter().chain(rot[ulen..].iter().copied());
                        return Some(cyclic_reduce(&reduce(replaced)));
                    }
                }
            }
        }
    }
    None
}

pub const DEFAULT_TIETZE_PASSES: usize = 100;

/// Greedy Tietze simplification, at most `max_passes` rounds of one
/// elimination or substitution each. The result presents an isomorphic group.
pub fn tietze_simplify(p: &Presentation, max_passes: usize) -> Presentation {
    let mut w = Work {
        names: p.generators().to_vec(),
        alive: vec![true; p.alphabet.len()],
        relators: p.relators.iter().map(|r| r.letters().to_vec()).collect(),
    };
    let mut changed = w.tidy();
    for _ in 0..max_passes {
        if !(w.eliminate() || w.substitute()) {
            break;
        }
        changed = true;
        w.tidy();
    }
    if !changed {
        return p.clone();
    }
    let map: Vec<Option<usize>> = {
        let mut next = 0;
        w.alive
            .iter()
            .map(|&a| {
                a.then(|| {
                    next += 1;
                    next - 1
                })
            })
            .collect()
    };
    let names: Vec<&String> = w
        .names
        .iter()
        .zip(&w.alive)
        .filter(|(_, &a)| a)
        .map(|(s, _)| s)
        .collect();
    let alpha = Alphabet::free(names).expect("subset of distinct symbols");
    let relators = w.relators.iter().map(|r| {
        let letters = r
            .iter()
            .map(|l| Letter::new(map[l.symbol()].expect("live generator"), l.is_inverse()));
        Word::normalize(&alpha, letters).expect("remapped symbols are in range")
    });
    Presentation::new(&alpha, relators).expect("free alphabet")
}

/// Abelian invariants of the group presented by `p`.
pub fn abelianization(p: &Presentation) -> AbelianInvariants {
    AbelianInvariants::from_relation_matrix(p.alphabet.len(), &p.exponent_matrix())
}

/// Simplified presentation of the group of a closure with its abelian
/// invariants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinkInvariant {
    pub presentation: Presentation,
    pub abelian: AbelianInvariants,
}

impl fmt::Display for LinkInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.presentation)?;
        write!(f, "{}", self.abelian)
    }
}

pub fn link_invariant(b: &BraidWord) -> Result<LinkInvariant> {
    let p = tietze_simplify(&link_group(b)?, DEFAULT_TIETZE_PASSES);
    let abelian = abelianization(&p);
    Ok(LinkInvariant {
        presentation: p,
        abelian,
    })
}
