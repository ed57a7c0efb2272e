use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use super::calculus::{magnus_matrix, Assignment};
use super::poly::{variables, LaurentPoly, RingMatrix};
use crate::braid::{BraidLetter, BraidMode, BraidWord, Gen};
use crate::error::{Error, Result};
use crate::reps::{
    theta, verify_defining_relations, BraidAction, Difference, RelationReport, Role,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum LinearKind {
    /// `Θ` over `ℤ[p^{±1}]`, dimension `2n`.
    Theta,
    /// `Δ` over `ℤ`, dimension `3n`.
    Delta,
    /// `Θ ⊕ Δ` over `ℤ[p^{±1}]`, dimension `5n`.
    ThetaDelta,
    /// Magnus matrices of the `θ` letters over `ℤ[p_i^{±1}, q_i^{±1}]`.
    GenericTheta,
}

impl LinearKind {
    pub const SELECTORS: [&'static str; 3] = ["Theta", "Delta", "ThetaDelta"];

    pub fn build(self, n: usize) -> Result<LinearRep> {
        match self {
            LinearKind::Theta => linear_theta(n),
            LinearKind::Delta => linear_delta(n),
            LinearKind::ThetaDelta => linear_theta_delta(n),
            LinearKind::GenericTheta => generic_theta(n),
        }
    }
}

impl fmt::Display for LinearKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LinearKind::Theta => "Theta",
            LinearKind::Delta => "Delta",
            LinearKind::ThetaDelta => "ThetaDelta",
            LinearKind::GenericTheta => "generic-Theta",
        })
    }
}

impl FromStr for LinearKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Theta" => Ok(LinearKind::Theta),
            "Delta" => Ok(LinearKind::Delta),
            "ThetaDelta" => Ok(LinearKind::ThetaDelta),
            "generic-Theta" => Ok(LinearKind::GenericTheta),
            _ => Err(Error::UnknownRepresentation(s.to_owned())),
        }
    }
}

/// Order of the basis vectors indexing rows and columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Layout {
    /// `e1, f1, e2, f2, ..`
    InterleavedEf,
    /// `e1, f1, g1, e2, f2, g2, ..`
    InterleavedEfg,
    /// The `Θ` basis followed by the primed `Δ` basis.
    ThetaThenDelta,
    /// `e1, .., en, f1, .., fn`, the order of `x1, .., xn, y1, .., yn`.
    Block,
}

/// A linear representation given by one matrix per letter.
#[derive(Debug, Clone, Serialize)]
pub struct LinearRep {
    kind: LinearKind,
    n: usize,
    layout: Layout,
    basis: Vec<String>,
    #[serde(skip)]
    vars: Arc<[String]>,
    #[serde(skip)]
    sigma: Vec<RingMatrix>,
    #[serde(skip)]
    sigma_inv: Vec<RingMatrix>,
    #[serde(skip)]
    rho: Vec<RingMatrix>,
}

impl LinearRep {
    pub fn kind(&self) -> LinearKind {
        self.kind
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn layout(&self) -> Layout {
        self.layout
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn basis_index(&self, name: &str) -> Result<usize> {
        self.basis
            .iter()
            .position(|b| b == name)
            .ok_or_else(|| Error::UnknownSymbol(name.to_owned()))
    }

    pub fn letter(&self, l: BraidLetter) -> &RingMatrix {
        let k = l.index - 1;
        match (l.kind, l.inverse) {
            (Gen::Sigma, false) => &self.sigma[k],
            (Gen::Sigma, true) => &self.sigma_inv[k],
            (Gen::Rho, _) => &self.rho[k],
        }
    }
}

/// Ordered product of the letter matrices of `b`.
pub fn apply_linear(rep: &LinearRep, b: &BraidWord) -> Result<RingMatrix> {
    rep.act(b)
}

impl BraidAction for LinearRep {
    type Image = RingMatrix;

    fn name(&self) -> String {
        self.kind.to_string()
    }

    fn strands(&self) -> usize {
        self.n
    }

    fn identity(&self) -> RingMatrix {
        RingMatrix::identity(&self.vars, self.dimension())
    }

    fn letter_image(&self, l: BraidLetter) -> RingMatrix {
        self.letter(l).clone()
    }

    fn compose(&self, a: &RingMatrix, b: &RingMatrix) -> RingMatrix {
        a.mul(b).expect("square matrices of one dimension")
    }

    fn differences(&self, a: &RingMatrix, b: &RingMatrix) -> Vec<Difference> {
        (0..self.dimension())
            .filter(|&i| a.row(i) != b.row(i))
            .map(|i| Difference {
                symbol: self.basis[i].clone(),
                left: a.row_string(i, &self.basis),
                right: b.row_string(i, &self.basis),
            })
            .collect()
    }
}

type Images = Vec<(usize, Vec<(usize, LaurentPoly)>)>;

/// Identity matrix with the listed rows replaced.
fn from_action(vars: &Arc<[String]>, dim: usize, images: Images) -> RingMatrix {
    let mut m = RingMatrix::identity(vars, dim);
    for (row, combo) in images {
        for j in 0..dim {
            m.set(row, j, LaurentPoly::zero(vars));
        }
        for (j, c) in combo {
            let sum = m.get(row, j) + &c;
            m.set(row, j, sum);
        }
    }
    m
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        Err(Error::TooFewStrands(n))
    } else {
        Ok(())
    }
}

fn swaps(vars: &Arc<[String]>, dim: usize, pairs: &[(usize, usize)]) -> RingMatrix {
    let one = LaurentPoly::one(vars);
    let mut images = Images::new();
    for &(a, b) in pairs {
        images.push((a, vec![(b, one.clone())]));
        images.push((b, vec![(a, one.clone())]));
    }
    from_action(vars, dim, images)
}

fn theta_matrices(n: usize, vars: &Arc<[String]>) -> (Vec<RingMatrix>, Vec<RingMatrix>) {
    let dim = 2 * n;
    let e = |k: usize| 2 * (k - 1);
    let f = |k: usize| 2 * (k - 1) + 1;
    let one = LaurentPoly::one(vars);
    let p = LaurentPoly::var(vars, "p").expect("variable p");
    let mut sigma = Vec::new();
    let mut rho = Vec::new();
    for i in 1..n {
        sigma.push(from_action(
            vars,
            dim,
            vec![
                (e(i), vec![(e(i + 1), one.clone()), (f(i + 1), p.clone())]),
                (e(i + 1), vec![(e(i), one.clone()), (f(i + 1), -&p)]),
            ],
        ));
        rho.push(swaps(vars, dim, &[(e(i), e(i + 1)), (f(i), f(i + 1))]));
    }
    (sigma, rho)
}

fn delta_matrices(n: usize, vars: &Arc<[String]>) -> (Vec<RingMatrix>, Vec<RingMatrix>) {
    let dim = 3 * n;
    let e = |k: usize| 3 * (k - 1);
    let f = |k: usize| 3 * (k - 1) + 1;
    let g = |k: usize| 3 * (k - 1) + 2;
    let one = LaurentPoly::one(vars);
    let minus = -&one;
    let mut sigma = Vec::new();
    let mut rho = Vec::new();
    for i in 1..n {
        sigma.push(from_action(
            vars,
            dim,
            vec![
                (e(i), vec![(e(i + 1), one.clone()), (g(i), one.clone())]),
                (
                    e(i + 1),
                    vec![(e(i), one.clone()), (g(i + 1), minus.clone())],
                ),
                (g(i), vec![(g(i + 1), one.clone())]),
                (g(i + 1), vec![(g(i), one.clone())]),
            ],
        ));
        rho.push(swaps(
            vars,
            dim,
            &[(e(i), e(i + 1)), (f(i), f(i + 1)), (g(i), g(i + 1))],
        ));
    }
    (sigma, rho)
}

fn names(n: usize, letters: &[char], suffix: &str) -> Vec<String> {
    (1..=n)
        .flat_map(|k| letters.iter().map(move |c| format!("{c}{k}{suffix}")))
        .collect()
}

/// `Θ`: `σ_i` sends `e_i ↦ e_{i+1} + p f_{i+1}` and `e_{i+1} ↦ e_i - p f_{i+1}`;
/// `ρ_i` swaps `e_i, e_{i+1}` and `f_i, f_{i+1}`.
pub fn linear_theta(n: usize) -> Result<LinearRep> {
    check_n(n)?;
    let vars = variables(["p"]);
    let (sigma, rho) = theta_matrices(n, &vars);
    Ok(LinearRep {
        kind: LinearKind::Theta,
        n,
        layout: Layout::InterleavedEf,
        basis: names(n, &['e', 'f'], ""),
        vars,
        sigma_inv: sigma.clone(),
        sigma,
        rho,
    })
}

/// `Δ`: `σ_i` sends `e_i ↦ e_{i+1} + g_i`, `e_{i+1} ↦ e_i - g_{i+1}` and swaps
/// `g_i, g_{i+1}`; `ρ_i` swaps the `e`, `f` and `g` vectors at `i, i + 1`.
pub fn linear_delta(n: usize) -> Result<LinearRep> {
    check_n(n)?;
    let vars = variables::<&str>([]);
    let (sigma, rho) = delta_matrices(n, &vars);
    Ok(LinearRep {
        kind: LinearKind::Delta,
        n,
        layout: Layout::InterleavedEfg,
        basis: names(n, &['e', 'f', 'g'], ""),
        vars,
        sigma_inv: sigma.clone(),
        sigma,
        rho,
    })
}

/// `Θ ⊕ Δ`; the `Δ` basis vectors carry a prime.
pub fn linear_theta_delta(n: usize) -> Result<LinearRep> {
    check_n(n)?;
    let vars = variables(["p"]);
    let (ts, tr) = theta_matrices(n, &vars);
    let (ds, dr) = delta_matrices(n, &vars);
    let sum = |a: &[RingMatrix], b: &[RingMatrix]| -> Vec<RingMatrix> {
        a.iter()
            .zip(b)
            .map(|(x, y)| RingMatrix::block_diag(&[x, y]).expect("same ring"))
            .collect()
    };
    let sigma = sum(&ts, &ds);
    let mut basis = names(n, &['e', 'f'], "");
    basis.extend(names(n, &['e', 'f', 'g'], "'"));
    Ok(LinearRep {
        kind: LinearKind::ThetaDelta,
        n,
        layout: Layout::ThetaThenDelta,
        basis,
        vars,
        sigma_inv: sigma.clone(),
        sigma,
        rho: sum(&tr, &dr),
    })
}

/// Magnus matrices of the `θ` letters with `x_i ↦ p_i`, `y_i ↦ q_i`.
pub fn generic_theta(n: usize) -> Result<LinearRep> {
    magnus_rep(n, &Assignment::generic(n), LinearKind::GenericTheta)
}

fn magnus_rep(n: usize, assignment: &Assignment, kind: LinearKind) -> Result<LinearRep> {
    let rep = theta(n)?;
    let mat = |l| magnus_matrix(rep.letter(l), assignment);
    let mut sigma = Vec::new();
    let mut sigma_inv = Vec::new();
    let mut rho = Vec::new();
    for i in 1..n {
        sigma.push(mat(BraidLetter::sigma(i))?);
        sigma_inv.push(mat(BraidLetter::sigma_inv(i))?);
        rho.push(mat(BraidLetter::rho(i))?);
    }
    let basis = (1..=n)
        .map(|k| format!("e{k}"))
        .chain((1..=n).map(|k| format!("f{k}")))
        .collect();
    Ok(LinearRep {
        kind,
        n,
        layout: Layout::Block,
        basis,
        vars: assignment.vars().clone(),
        sigma,
        sigma_inv,
        rho,
    })
}

/// Per-family outcome of the generic Magnus check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyCheck {
    pub family: &'static str,
    pub instances: usize,
    pub generic_holding: usize,
    pub specialized_holding: usize,
}

impl FamilyCheck {
    pub fn generic_holds(&self) -> bool {
        self.generic_holding == self.instances
    }

    pub fn specialized_holds(&self) -> bool {
        self.specialized_holding == self.instances
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GenericMagnusReport {
    pub n: usize,
    pub families: Vec<FamilyCheck>,
    pub generic: RelationReport,
    pub specialized: RelationReport,
}

impl GenericMagnusReport {
    /// Families with an instance failing over the generic ring.
    pub fn generic_failures(&self) -> impl Iterator<Item = &FamilyCheck> {
        self.families.iter().filter(|f| !f.generic_holds())
    }

    pub fn specialized_all_hold(&self) -> bool {
        self.families.iter().all(FamilyCheck::specialized_holds)
    }
}

impl fmt::Display for GenericMagnusReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "generic Magnus check on {} strands", self.n)?;
        write!(f, "{:<16} {:<10} p_i -> p, q_i -> 1", "family", "generic")?;
        for c in &self.families {
            let generic = format!("{}/{}", c.generic_holding, c.instances);
            write!(
                f,
                "\n{:<16} {generic:<10} {}/{}",
                c.family, c.specialized_holding, c.instances
            )?;
        }
        Ok(())
    }
}

/// Checks the defining relations of `FVB_n` on the Magnus matrices of the `θ`
/// letters, first over `ℤ[p_i^{±1}, q_i^{±1}]` and then after `p_i ↦ p`,
/// `q_i ↦ 1`. Only families with instances for this `n` are listed.
pub fn generic_magnus_check(n: usize) -> Result<GenericMagnusReport> {
    if !(2..=4).contains(&n) {
        return Err(Error::Dimension(format!(
            "generic Magnus check needs 2 <= n <= 4, got {n}"
        )));
    }
    let generic = generic_theta(n)?;
    let target = variables(["p"]);
    let images: Vec<Vec<i64>> = (0..2 * n).map(|k| vec![i64::from(k < n)]).collect();
    let specialize = |ms: &[RingMatrix]| -> Vec<RingMatrix> {
        ms.iter().map(|m| m.substitute(&target, &images)).collect()
    };
    let specialized = LinearRep {
        vars: target.clone(),
        sigma: specialize(&generic.sigma),
        sigma_inv: specialize(&generic.sigma_inv),
        rho: specialize(&generic.rho),
        ..generic.clone()
    };
    let g = verify_defining_relations(&generic, BraidMode::Fvb);
    let s = verify_defining_relations(&specialized, BraidMode::Fvb);
    let mut families: Vec<FamilyCheck> = Vec::new();
    for (a, b) in g.instances.iter().zip(&s.instances) {
        if a.role != Role::Defining {
            continue;
        }
        let pos = match families.iter().position(|c| c.family == a.family) {
            Some(k) => k,
            None => {
                families.push(FamilyCheck {
                    family: a.family,
                    instances: 0,
                    generic_holding: 0,
                    specialized_holding: 0,
                });
                families.len() - 1
            }
        };
        let c = &mut families[pos];
        c.instances += 1;
        c.generic_holding += usize::from(a.holds);
        c.specialized_holding += usize::from(b.holds);
    }
    Ok(GenericMagnusReport {
        n,
        families,
        generic: g,
        specialized: s,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::apply_rep;

    fn bw(s: &str, n: usize) -> BraidWord {
        BraidWord::parse(s, n).unwrap()
    }

    #[test]
    fn theta_sigma_block() {
        let t = linear_theta(2).unwrap();
        let m = t.letter(BraidLetter::sigma(1));
        assert_eq!(
            m.to_string(),
            "[ 0 0 1  p ]\n[ 0 1 0  0 ]\n[ 1 0 0 -p ]\n[ 0 0 0  1 ]"
        );
        let r = t.letter(BraidLetter::rho(1));
        assert_eq!(
            r.to_string(),
            "[ 0 0 1 0 ]\n[ 0 0 0 1 ]\n[ 1 0 0 0 ]\n[ 0 1 0 0 ]"
        );
        assert!(r.mul(r).unwrap().is_identity());
        assert!(m.mul(m).unwrap().is_identity());
    }

    #[test]
    fn delta_blocks() {
        let d = linear_delta(2).unwrap();
        let s = d.letter(BraidLetter::sigma(1));
        let expected = RingMatrix::from_integers(
            d.vars(),
            &[
                &[0, 0, 1, 1, 0, 0],
                &[0, 1, 0, 0, 0, 0],
                &[0, 0, 0, 0, 0, 1],
                &[1, 0, 0, 0, 0, -1],
                &[0, 0, 0, 0, 1, 0],
                &[0, 0, 1, 0, 0, 0],
            ],
        );
        assert_eq!(s, &expected);
        let r = d.letter(BraidLetter::rho(1));
        let expected = RingMatrix::from_integers(
            d.vars(),
            &[
                &[0, 0, 0, 1, 0, 0],
                &[0, 0, 0, 0, 1, 0],
                &[0, 0, 0, 0, 0, 1],
                &[1, 0, 0, 0, 0, 0],
                &[0, 1, 0, 0, 0, 0],
                &[0, 0, 1, 0, 0, 0],
            ],
        );
        assert_eq!(r, &expected);
        assert!(s.mul(s).unwrap().is_identity());
    }

    #[test]
    fn sizes_and_selectors() {
        for n in 2..5 {
            assert_eq!(linear_theta(n).unwrap().dimension(), 2 * n);
            assert_eq!(linear_delta(n).unwrap().dimension(), 3 * n);
            assert_eq!(linear_theta_delta(n).unwrap().dimension(), 5 * n);
            assert_eq!(generic_theta(n).unwrap().dimension(), 2 * n);
        }
        assert_eq!(linear_theta(1).unwrap_err(), Error::TooFewStrands(1));
        for s in LinearKind::SELECTORS {
            assert_eq!(s.parse::<LinearKind>().unwrap().to_string(), s);
        }
        assert!("theta".parse::<LinearKind>().is_err());
    }

    #[test]
    fn specialized_magnus_is_theta_in_block_layout() {
        let n = 4;
        let m = magnus_rep(n, &Assignment::specialized(n), LinearKind::Theta).unwrap();
        let t = linear_theta(n).unwrap();
        // interleaved position 2k is e_{k+1}, 2k + 1 is f_{k+1}
        let order: Vec<usize> = (0..2 * n)
            .map(|a| if a % 2 == 0 { a / 2 } else { n + a / 2 })
            .collect();
        for i in 1..n {
            for l in [
                BraidLetter::sigma(i),
                BraidLetter::sigma_inv(i),
                BraidLetter::rho(i),
            ] {
                assert_eq!(m.letter(l).reindex(&order), *t.letter(l), "{l}");
            }
        }
    }

    #[test]
    fn delta_sees_the_kernel_witness() {
        let n = 3;
        let b = bw("(r1 s2)^6", n);
        assert!(apply_linear(&linear_theta(n).unwrap(), &b)
            .unwrap()
            .is_identity());
        let d = linear_delta(n).unwrap();
        let m = apply_linear(&d, &b).unwrap();
        assert_eq!(m.row_string(0, d.basis()), "e1 - 2*g2 + 2*g3");
        assert!(apply_linear(&d, &BraidWord::empty(n).unwrap())
            .unwrap()
            .is_identity());
        assert!(apply_linear(&d, &bw("s1", 2)).is_err());
    }

    #[test]
    fn forbidden_witness_for_delta() {
        let d = linear_delta(4).unwrap();
        let report = verify_defining_relations(&d, BraidMode::Fvb);
        assert!(report.defining_hold());
        for r in report.family("forbidden") {
            assert!(!r.holds);
            let i = r.indices[0];
            let f = r
                .differing
                .iter()
                .find(|d| d.symbol == format!("f{i}"))
                .expect("f_i differs");
            assert_eq!(f.left, format!("f{}", i + 1));
            assert_eq!(f.right, format!("f{i}"));
        }
    }

    #[test]
    fn theta_kernel_contains_theta_kernel() {
        let rep = theta(4).unwrap();
        let lin = linear_theta(4).unwrap();
        for w in [
            "(r1 s2)^6",
            "(r2 s3)^6",
            "s1 (r1 s2)^6 s1",
            "r3 (r2 s3)^-6 r3",
        ] {
            let b = bw(w, 4);
            assert!(apply_rep(&rep, &b).unwrap().is_identity());
            assert!(apply_linear(&lin, &b).unwrap().is_identity());
        }
    }

    #[test]
    fn generic_check_small() {
        let r = generic_magnus_check(3).unwrap();
        assert!(r.generic_failures().count() > 0, "{r}");
        assert!(r.specialized_all_hold(), "{r}");
        let r2 = generic_magnus_check(2).unwrap();
        assert!(r2.families.iter().all(|f| f.instances > 0));
        assert!(r2.families.iter().all(|f| f.family != "sigma-braid"));
        assert!(generic_magnus_check(5).is_err());
    }
}
