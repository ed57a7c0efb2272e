use serde::Serialize;

use super::rewrite::{IndexedLetter, LambdaWord};
use super::{BraidLetter, BraidMode, BraidWord};
use crate::error::{Error, Result};

fn check_pair(i: usize, j: usize, n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::TooFewStrands(n));
    }
    for k in [i, j] {
        if k == 0 || k > n {
            return Err(Error::IndexOutOfRange { index: k, n });
        }
    }
    if i == j {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    Ok(())
}

/// Wraps `core` in `ρ_{b-1} … ρ_{a+1} · core · ρ_{a+1} … ρ_{b-1}`.
fn conjugate_by_rhos(n: usize, a: usize, b: usize, core: &[BraidLetter]) -> BraidWord {
    let mut w = BraidWord::empty(n).expect("n >= 2");
    for k in (a + 1..b).rev() {
        w.push(BraidLetter::rho(k));
    }
    for &l in core {
        w.push(l);
    }
    for k in a + 1..b {
        w.push(BraidLetter::rho(k));
    }
    w
}

/// The braid word of `λ_{i,j}`: `λ_{i,i+1} = ρ_i σ_i^-1`,
/// `λ_{i+1,i} = σ_i^-1 ρ_i`, and the general element by conjugating with
/// `ρ_{j-1} … ρ_{i+1}`.
pub fn lambda(i: usize, j: usize, n: usize) -> Result<BraidWord> {
    check_pair(i, j, n)?;
    let (a, b) = (i.min(j), i.max(j));
    let core = if i < j {
        [BraidLetter::rho(a), BraidLetter::sigma_inv(a)]
    } else {
        [BraidLetter::sigma_inv(a), BraidLetter::rho(a)]
    };
    Ok(conjugate_by_rhos(n, a, b, &core))
}

/// The braid word of `x_{i,j}`: `x_{i,i+1} = σ_i`, `x_{i+1,i} = ρ_i σ_i ρ_i`,
/// conjugated like [`lambda`].
pub fn x_elem(i: usize, j: usize, n: usize) -> Result<BraidWord> {
    check_pair(i, j, n)?;
    let (a, b) = (i.min(j), i.max(j));
    let core: &[BraidLetter] = if i < j {
        &[BraidLetter::sigma(a)]
    } else {
        &[
            BraidLetter::rho(a),
            BraidLetter::sigma(a),
            BraidLetter::rho(a),
        ]
    };
    Ok(conjugate_by_rhos(n, a, b, core))
}

/// `η_i = σ_i ρ_i`.
pub fn eta(i: usize, n: usize) -> Result<BraidWord> {
    if i == 0 || i + 1 > n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    BraidWord::new(n, vec![BraidLetter::sigma(i), BraidLetter::rho(i)])
}

/// Families of normal generators of the intersection of the pure and
/// Rabenda subgroups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NormalFamily {
    /// `λ_{s,t} λ_{t,s}^-1`, `s < t`.
    Pair,
    /// `λ_{t,s}²`, `s < t`.
    Square,
    /// `[λ_{t,s}, λ_{r,q}]` for non-interleaved index pairs.
    Commutator,
    /// `λ_{t,s} λ_{s,r} λ_{t,s}^-1 λ_{t,r}^-1`, `t > s > r`.
    ConjugateLeft,
    /// `λ_{t,s} λ_{s,r} λ_{t,r}^-1 λ_{s,r}^-1`, `t > s > r`.
    ConjugateRight,
}

#[derive(Debug, Clone, Serialize)]
pub struct NormalGenerator {
    pub family: NormalFamily,
    pub lambda_word: LambdaWord,
    pub braid: BraidWord,
}

/// Every normal generator of `VP_n ∩ H_n` (and of its flat and Gauss
/// analogues), expanded into braid words.
///
/// Flat modes drop the square family; the Gauss mode drops the pair and
/// square families. Welded modes use the list of their unwelded parents.
pub fn normal_generators_intersection(n: usize, mode: BraidMode) -> Result<Vec<NormalGenerator>> {
    if n < 2 {
        return Err(Error::TooFewStrands(n));
    }
    let l = |i: usize, j: usize, e: i32| IndexedLetter { i, j, exponent: e };
    let mut words: Vec<(NormalFamily, Vec<IndexedLetter>)> = Vec::new();
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|t| (1..t).map(move |s| (t, s))).collect();
    let keep_pair = !mode.gauss();
    let keep_square = !mode.sigma_involutive();
    for &(t, s) in &pairs {
        if keep_pair {
            words.push((NormalFamily::Pair, vec![l(s, t, 1), l(t, s, -1)]));
        }
    }
    for &(t, s) in &pairs {
        if keep_square {
            words.push((NormalFamily::Square, vec![l(t, s, 1), l(t, s, 1)]));
        }
    }
    for &(t, s) in &pairs {
        for &(r, q) in &pairs {
            let sign = (t as i64 - r as i64)
                * (t as i64 - q as i64)
                * (s as i64 - r as i64)
                * (s as i64 - q as i64);
            if sign > 0 {
                words.push((
                    NormalFamily::Commutator,
                    vec![l(t, s, 1), l(r, q, 1), l(t, s, -1), l(r, q, -1)],
                ));
            }
        }
    }
    for t in 1..=n {
        for s in 1..t {
            for r in 1..s {
                words.push((
                    NormalFamily::ConjugateLeft,
                    vec![l(t, s, 1), l(s, r, 1), l(t, s, -1), l(t, r, -1)],
                ));
            }
        }
    }
    for t in 1..=n {
        for s in 1..t {
            for r in 1..s {
                words.push((
                    NormalFamily::ConjugateRight,
                    vec![l(t, s, 1), l(s, r, 1), l(t, r, -1), l(s, r, -1)],
                ));
            }
        }
    }
    words
        .into_iter()
        .map(|(family, letters)| {
            let lambda_word = LambdaWord::new(letters);
            let braid = lambda_word.to_braid(n)?;
            Ok(NormalGenerator {
                family,
                lambda_word,
                braid,
            })
        })
        .collect()
}
