use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Builds a shared variable list.
pub fn variables<S: AsRef<str>>(names: impl IntoIterator<Item = S>) -> Arc<[String]> {
    names.into_iter().map(|s| s.as_ref().to_owned()).collect()
}

/// Writes an integer as a JSON number when it fits in `i64` and as a decimal
/// string otherwise.
pub(crate) fn serialize_bigint<S: Serializer>(
    n: &BigInt,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match n.to_i64() {
        Some(v) => s.serialize_i64(v),
        None => s.serialize_str(&n.to_string()),
    }
}

/// Sparse Laurent polynomial with integer coefficients.
///
/// Terms are kept in lexicographic order of their exponent vectors and no
/// stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    vars: Arc<[String]>,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl LaurentPoly {
    pub fn zero(vars: &Arc<[String]>) -> Self {
        LaurentPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &Arc<[String]>) -> Self {
        Self::constant(vars, 1)
    }

    pub fn constant(vars: &Arc<[String]>, c: impl Into<BigInt>) -> Self {
        Self::monomial(vars, vec![0; vars.len()], c)
    }

    /// `coeff · Π vars[k]^exponents[k]`.
    pub fn monomial(vars: &Arc<[String]>, exponents: Vec<i64>, coeff: impl Into<BigInt>) -> Self {
        assert_eq!(exponents.len(), vars.len(), "exponent vector length");
        let mut p = Self::zero(vars);
        p.add_term(exponents, coeff.into());
        p
    }

    pub fn var(vars: &Arc<[String]>, name: &str) -> Result<Self> {
        let k = vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownSymbol(name.to_owned()))?;
        let mut e = vec![0; vars.len()];
        e[k] = 1;
        Ok(Self::monomial(vars, e, 1))
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    /// Terms in lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&[i64], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coeff(&self, exponents: &[i64]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(e, c)| c.is_one() && e.iter().all(|&k| k == 0))
    }

    fn add_term(&mut self, exponents: Vec<i64>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponents);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &LaurentPoly) {
        assert!(
            Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars,
            "Laurent polynomials over different variables"
        );
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        let mut p = Self::zero(&self.vars);
        for (e, k) in &self.terms {
            p.add_term(e.clone(), k * c);
        }
        p
    }

    /// Sends each variable to a monomial over `target`, given by its exponent
    /// vector.
    pub fn substitute(&self, target: &Arc<[String]>, images: &[Vec<i64>]) -> LaurentPoly {
        assert_eq!(images.len(), self.vars.len(), "one image per variable");
        let mut p = Self::zero(target);
        for (e, c) in &self.terms {
            let mut out = vec![0i64; target.len()];
            for (k, &power) in e.iter().enumerate() {
                for (o, &d) in out.iter_mut().zip(&images[k]) {
                    *o += power * d;
                }
            }
            p.add_term(out, c.clone());
        }
        p
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, other: &LaurentPoly) -> LaurentPoly {
        self.check_vars(other);
        let mut p = self.clone();
        for (e, c) in &other.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, other: &LaurentPoly) -> LaurentPoly {
        self + &(-other)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, other: &LaurentPoly) -> LaurentPoly {
        self.check_vars(other);
        let mut p = LaurentPoly::zero(&self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                p.add_term(e, c1 * c2);
            }
        }
        p
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, vars: &[String], e: &[i64]) -> fmt::Result {
    let mut first = true;
    for (v, &k) in vars.iter().zip(e) {
        if k == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if k == 1 {
            f.write_str(v)?;
        } else {
            write!(f, "{v}^{k}")?;
        }
    }
    Ok(())
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let constant = e.iter().all(|&x| x == 0);
            if constant {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, &self.vars, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

struct Term<'a>(&'a [i64], &'a BigInt);

impl Serialize for Term<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Coeff<'a>(&'a BigInt);
        impl Serialize for Coeff<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                serialize_bigint(self.0, s)
            }
        }
        let mut st = s.serialize_struct("Term", 2)?;
        st.serialize_field("exponents", self.0)?;
        st.serialize_field("coeff", &Coeff(self.1))?;
        st.end()
    }
}

/// Serializes as a list of `{"exponents": [..], "coeff": c}` terms.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&Term(e, c))?;
        }
        seq.end()
    }
}

/// Dense matrix over a Laurent polynomial ring. Rows are images of basis
/// vectors, so products are taken in word order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingMatrix {
    vars: Arc<[String]>,
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly>,
}

impl RingMatrix {
    pub fn zero(vars: &Arc<[String]>, rows: usize, cols: usize) -> Self {
        RingMatrix {
            vars: vars.clone(),
            rows,
            cols,
            entries: vec![LaurentPoly::zero(vars); rows * cols],
        }
    }

    pub fn identity(vars: &Arc<[String]>, n: usize) -> Self {
        let mut m = Self::zero(vars, n, n);
        for i in 0..n {
            m.set(i, i, LaurentPoly::one(vars));
        }
        m
    }

    pub fn from_fn(
        vars: &Arc<[String]>,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> LaurentPoly,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let e = f(i, j);
                assert!(e.vars == *vars, "entry variables");
                entries.push(e);
            }
        }
        RingMatrix {
            vars: vars.clone(),
            rows,
            cols,
            entries,
        }
    }

    /// Integer matrix viewed over the given ring.
    pub fn from_integers(vars: &Arc<[String]>, rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        Self::from_fn(vars, r, c, |i, j| LaurentPoly::constant(vars, rows[i][j]))
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: LaurentPoly) {
        assert!(value.vars == self.vars, "entry variables");
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[LaurentPoly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn mul(&self, other: &RingMatrix) -> Result<RingMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut m = Self::zero(&self.vars, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * m.cols + j;
                    m.entries[idx] = &m.entries[idx] + &(a * b);
                }
            }
        }
        Ok(m)
    }

    /// Block diagonal sum; all blocks must share the variable list.
    pub fn block_diag(blocks: &[&RingMatrix]) -> Result<RingMatrix> {
        let vars = match blocks.first() {
            Some(b) => b.vars.clone(),
            None => return Err(Error::Dimension("empty block list".to_owned())),
        };
        if blocks.iter().any(|b| b.vars != vars) {
            return Err(Error::Dimension("blocks over different rings".to_owned()));
        }
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zero(&vars, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m.set(r0 + i, c0 + j, b.get(i, j).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        Ok(m)
    }

    /// Applies [`LaurentPoly::substitute`] entrywise.
    pub fn substitute(&self, target: &Arc<[String]>, images: &[Vec<i64>]) -> RingMatrix {
        RingMatrix {
            vars: target.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|e| e.substitute(target, images))
                .collect(),
        }
    }

    /// The same linear map in a reordered basis: new basis vector `a` is old
    /// basis vector `order[a]`.
    pub fn reindex(&self, order: &[usize]) -> RingMatrix {
        assert_eq!(self.rows, self.cols, "square matrix");
        assert_eq!(order.len(), self.rows, "full reordering");
        Self::from_fn(&self.vars, self.rows, self.cols, |a, b| {
            self.get(order[a], order[b]).clone()
        })
    }

    /// Row `i` written as a combination of the named basis vectors.
    pub fn row_string(&self, i: usize, basis: &[String]) -> String {
        let mut parts: Vec<String> = Vec::new();
        for (j, e) in self.row(i).iter().enumerate() {
            if e.is_zero() {
                continue;
            }
            let name = &basis[j];
            let text = if e.is_one() {
                name.clone()
            } else if e.terms.len() == 1 {
                format!("{e}*{name}")
            } else {
                format!("({e})*{name}")
            };
            parts.push(text);
        }
        if parts.is_empty() {
            return "0".to_owned();
        }
        let mut out = String::new();
        for (k, p) in parts.iter().enumerate() {
            match (k, p.strip_prefix('-')) {
                (0, _) => out.push_str(p),
                (_, Some(rest)) => {
                    out.push_str(" - ");
                    out.push_str(rest);
                }
                (_, None) => {
                    out.push_str(" + ");
                    out.push_str(p);
                }
            }
        }
        out
    }
}

impl fmt::Display for RingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        let mut widths = vec![0; self.cols];
        for (k, c) in cells.iter().enumerate() {
            let w = &mut widths[k % self.cols.max(1)];
            *w = (*w).max(c.chars().count());
        }
        for i in 0..self.rows {
            if i > 0 {
                writeln!(f)?;
            }
            f.write_str("[")?;
            for j in 0..self.cols {
                let c = &cells[i * self.cols + j];
                let pad = widths[j] - c.chars().count();
                write!(f, " {}{}", " ".repeat(pad), c)?;
            }
            f.write_str(" ]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for RingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingMatrix {}x{}\n{self}", self.rows, self.cols)
    }
}

/// Serializes as `{"variables", "rows", "cols", "entries"}` with `entries`
/// a row-major nested array of term lists.
impl Serialize for RingMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<&[LaurentPoly]> = (0..self.rows).map(|i| self.row(i)).collect();
        let mut st = s.serialize_struct("RingMatrix", 4)?;
        st.serialize_field("variables", &*self.vars)?;
        st.serialize_field("rows", &self.rows)?;
        st.serialize_field("cols", &self.cols)?;
        st.serialize_field("entries", &rows)?;
        st.end()
    }
}
