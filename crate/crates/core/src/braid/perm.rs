use std::fmt;

use serde::{Deserialize, Serialize};

/// A permutation of `{1..n}`, composed in word order: `p.then(q)` applies
/// `p` first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// The transposition `(a b)`, 1-based.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(a - 1, b - 1);
        p
    }

    /// From a 1-based one-line image list; `None` unless it is a bijection.
    pub fn from_one_line(images: &[usize]) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in images {
            if i == 0 || i > n || std::mem::replace(&mut seen[i - 1], true) {
                return None;
            }
        }
        Some(Permutation {
            images: images.iter().map(|i| i - 1).collect(),
        })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of `i`, 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|i| i + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    /// Right-multiplies in place by the transposition of the 0-based points
    /// `k` and `k + 1`.
    pub(crate) fn swap_after(&mut self, k: usize) {
        for v in self.images.iter_mut() {
            if *v == k {
                *v = k + 1;
            } else if *v == k + 1 {
                *v = k;
            }
        }
    }

    /// Disjoint cycles of length at least two, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut done = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if done[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !done[i] {
                done[i] = true;
                cycle.push(i + 1);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.one_line()
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = String;

    fn try_from(v: Vec<usize>) -> Result<Self, String> {
        Permutation::from_one_line(&v).ok_or_else(|| format!("{v:?} is not a permutation"))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|i| i.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_is_word_order() {
        let a = Permutation::transposition(3, 1, 2);
        let b = Permutation::transposition(3, 2, 3);
        // apply a then b: 1 -> 2 -> 3
        assert_eq!(a.then(&b).apply(1), 3);
        assert_eq!(a.then(&b).to_string(), "(1 3 2)");
        assert!(a.then(&a).is_identity());
        let c = a.then(&b);
        assert!(c.then(&c.inverse()).is_identity());
    }

    #[test]
    fn one_line_validation() {
        assert!(Permutation::from_one_line(&[2, 1, 3]).is_some());
        assert!(Permutation::from_one_line(&[2, 2, 3]).is_none());
        assert!(Permutation::from_one_line(&[0, 1]).is_none());
        assert_eq!(Permutation::identity(4).to_string(), "()");
    }
}
