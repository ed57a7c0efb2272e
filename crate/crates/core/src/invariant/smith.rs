use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::fox::serialize_bigint;

/// Invariant factors `d_1 | d_2 | .. | d_rank`, all positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub diagonal: Vec<BigInt>,
    pub rank: usize,
}

/// Smith normal form of an integer matrix given by its rows.
pub fn smith_normal_form(matrix: &[Vec<BigInt>]) -> SmithForm {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = min_entry(&a, t..rows, t..cols) else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = a[t][t].clone();
            let mut clean = true;
            for i in t + 1..rows {
                let q = a[i][t].div_floor(&p);
                if !q.is_zero() {
                    add_row_multiple(&mut a, i, t, &-q, t);
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..cols {
                let q = a[t][j].div_floor(&p);
                if !q.is_zero() {
                    for row in a.iter_mut().skip(t) {
                        let d = &q * &row[t];
                        row[j] -= d;
                    }
                }
                clean &= a[t][j].is_zero();
            }
            if !clean {
                let (pi, pj) = cross_min(&a, t, rows, cols);
                a.swap(t, pi);
                for row in a.iter_mut() {
                    row.swap(t, pj);
                }
                continue;
            }
            let bad =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            match bad {
                Some(i) => add_row_multiple(&mut a, t, i, &BigInt::one(), t),
                None => break,
            }
        }
        t += 1;
    }
    let diagonal: Vec<BigInt> = (0..t).map(|k| a[k][k].abs()).collect();
    SmithForm {
        rank: diagonal.len(),
        diagonal,
    }
}

/// `row[dst] += q * row[src]` from column `from` on.
fn add_row_multiple(a: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt, from: usize) {
    let (d, s) = if dst < src {
        let (lo, hi) = a.split_at_mut(src);
        (&mut lo[dst], &hi[0])
    } else {
        let (lo, hi) = a.split_at_mut(dst);
        (&mut hi[0], &lo[src])
    };
    for (x, y) in d[from..].iter_mut().zip(&s[from..]) {
        *x += q * y;
    }
}

fn min_entry(
    a: &[Vec<BigInt>],
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            if a[i][j].is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Smallest nonzero entry in row `t` and column `t`, the pivot included.
fn cross_min(a: &[Vec<BigInt>], t: usize, rows: usize, cols: usize) -> (usize, usize) {
    let mut best = (t, t);
    let mut consider = |i: usize, j: usize| {
        let v = &a[i][j];
        if !v.is_zero() && v.abs() < a[best.0][best.1].abs() {
            best = (i, j);
        }
    };
    for i in t + 1..rows {
        consider(i, t);
    }
    for j in t + 1..cols {
        consider(t, j);
    }
    best
}

/// A finitely generated abelian group `ℤ^free_rank ⊕ ℤ/d_1 ⊕ .. ⊕ ℤ/d_k`
/// with `d_1 | .. | d_k` and every `d_i ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianInvariants {
    /// The group presented by `generators` generators and relation rows
    /// `matrix`.
    pub fn from_relation_matrix(generators: usize, matrix: &[Vec<BigInt>]) -> Self {
        let snf = smith_normal_form(matrix);
        AbelianInvariants {
            free_rank: generators - snf.rank,
            torsion: snf.diagonal.into_iter().filter(|d| !d.is_one()).collect(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_owned()),
            k => parts.push(format!("Z^{k}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Serializes as `{"free_rank": r, "torsion": [d1, ..]}`.
impl Serialize for AbelianInvariants {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Torsion<'a>(&'a [BigInt]);
        impl Serialize for Torsion<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                use serde::ser::SerializeSeq;
                let mut seq = s.serialize_seq(Some(self.0.len()))?;
                for d in self.0 {
                    seq.serialize_element(&Int(d))?;
                }
                seq.end()
            }
        }
        struct Int<'a>(&'a BigInt);
        impl Serialize for Int<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                serialize_bigint(self.0, s)
            }
        }
        let mut st = s.serialize_struct("AbelianInvariants", 2)?;
        st.serialize_field("free_rank", &self.free_rank)?;
        st.serialize_field("torsion", &Torsion(&self.torsion))?;
        st.end()
    }
}
