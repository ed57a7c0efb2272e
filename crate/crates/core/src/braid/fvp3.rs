use std::fmt;

use serde::Serialize;

use super::rewrite::abc_alphabet;
use crate::error::{Error, Result};
use crate::words::Word;

/// A nontrivial syllable of the free product `⟨a, c | [a,c]⟩ ∗ ⟨b⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Syllable {
    /// `a^p c^q`, not both zero.
    Ac(i64, i64),
    /// `b^r`, `r != 0`.
    B(i64),
}

/// Alternating sequence of syllables; equal elements of `FVP_3` have equal
/// normal forms.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct Fvp3NormalForm {
    syllables: Vec<Syllable>,
}

impl Fvp3NormalForm {
    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_trivial(&self) -> bool {
        self.syllables.is_empty()
    }

    fn push(&mut self, s: Syllable) {
        let merged = match (self.syllables.last(), s) {
            (Some(&Syllable::Ac(p, q)), Syllable::Ac(dp, dq)) => Syllable::Ac(p + dp, q + dq),
            (Some(&Syllable::B(r)), Syllable::B(dr)) => Syllable::B(r + dr),
            _ => {
                self.syllables.push(s);
                return;
            }
        };
        self.syllables.pop();
        if merged != Syllable::Ac(0, 0) && merged != Syllable::B(0) {
            self.syllables.push(merged);
        }
    }
}

fn power(f: &mut fmt::Formatter<'_>, name: &str, e: i64) -> fmt::Result {
    if e == 1 {
        f.write_str(name)
    } else {
        write!(f, "{name}^{e}")
    }
}

impl fmt::Display for Fvp3NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| {
            if !std::mem::take(&mut first) {
                f.write_str(" ")?;
            }
            Ok(())
        };
        for s in &self.syllables {
            match *s {
                Syllable::Ac(p, q) => {
                    if p != 0 {
                        sep(f)?;
                        power(f, "a", p)?;
                    }
                    if q != 0 {
                        sep(f)?;
                        power(f, "c", q)?;
                    }
                }
                Syllable::B(r) => {
                    sep(f)?;
                    power(f, "b", r)?;
                }
            }
        }
        Ok(())
    }
}

/// Parses a word over `{a, b, c}`.
pub fn parse_abc(text: &str) -> Result<Word> {
    Word::parse(&abc_alphabet(), text)
}

/// Normal form in `ℤ² ∗ ℤ` of a word whose symbols are among `a`, `b`, `c`.
pub fn fvp3_normal_form(w: &Word) -> Result<Fvp3NormalForm> {
    let alpha = w.alphabet();
    let mut out = Fvp3NormalForm::default();
    for l in w.letters() {
        let e = l.exponent();
        let s = match alpha.symbol(l.symbol()) {
            "a" => Syllable::Ac(e, 0),
            "c" => Syllable::Ac(0, e),
            "b" => Syllable::B(e),
            other => return Err(Error::UnknownSymbol(other.to_owned())),
        };
        out.push(s);
    }
    Ok(out)
}
