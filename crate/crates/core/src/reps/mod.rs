//! Representations of flat virtual and Gauss virtual braid groups by
//! automorphisms of free and partially commutative groups, and the harness
//! that checks braid relations against any [`BraidAction`].

mod checks;
mod harness;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use crate::braid::{BraidLetter, BraidWord, Gen};
use crate::endo::Endomorphism;
use crate::error::{Error, Result};
use crate::words::{Alphabet, Word};

pub use checks::{
    gauss_image, kernel_witness_check, switch_axiom_check, GaussImage, SwitchEquation, SwitchReport,
};
pub use harness::{
    verify_defining_relations, BraidAction, Difference, RelationInstance, RelationReport, Role,
};

/// The automorphism representations in the catalogue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum RepKind {
    /// `θ` on `F_{2n}`.
    Theta,
    /// `θ_{1,m}` on `F_{2n}`.
    Theta1(i64),
    /// `θ_2` on `F_{2n+1}`, with `y_{i+1}` conjugated by `z`.
    Theta2,
    /// `θ_3` on `F_n ∗ (F_n × ℤ)`, `ρ_i` multiplying by `z^{±1}`.
    Theta3,
    /// `θ_4` on `F_n ∗ (F_n × ℤ)`, `ρ_i` conjugating by `z^{±1}`.
    Theta4,
    /// `θ_G` on `F_n ∗ ℤ/2`; it satisfies the forbidden relations.
    ThetaG,
    /// `θ_G^*` on `F_{2n} ∗ ℤ/2`.
    ThetaGStar,
}

impl RepKind {
    pub const SELECTORS: &'static [&'static str] = &[
        "theta",
        "theta1:<m>",
        "theta2",
        "theta3",
        "theta4",
        "thetaG",
        "thetaGstar",
    ];

    pub fn build(self, n: usize) -> Result<Representation> {
        match self {
            RepKind::Theta => theta(n),
            RepKind::Theta1(m) => theta1(n, m),
            RepKind::Theta2 => theta2(n),
            RepKind::Theta3 => theta3(n),
            RepKind::Theta4 => theta4(n),
            RepKind::ThetaG => theta_g(n),
            RepKind::ThetaGStar => theta_g_star(n),
        }
    }

    /// Whether the representation is defined on Gauss virtual braids.
    pub fn is_gauss(self) -> bool {
        matches!(self, RepKind::ThetaG | RepKind::ThetaGStar)
    }
}

impl fmt::Display for RepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepKind::Theta => f.write_str("theta"),
            RepKind::Theta1(m) => write!(f, "theta1:{m}"),
            RepKind::Theta2 => f.write_str("theta2"),
            RepKind::Theta3 => f.write_str("theta3"),
            RepKind::Theta4 => f.write_str("theta4"),
            RepKind::ThetaG => f.write_str("thetaG"),
            RepKind::ThetaGStar => f.write_str("thetaGstar"),
        }
    }
}

impl FromStr for RepKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let kind = match s {
            "theta" => RepKind::Theta,
            "theta2" => RepKind::Theta2,
            "theta3" => RepKind::Theta3,
            "theta4" => RepKind::Theta4,
            "thetaG" => RepKind::ThetaG,
            "thetaGstar" => RepKind::ThetaGStar,
            _ => match s.strip_prefix("theta1:").map(str::parse) {
                Some(Ok(m)) => RepKind::Theta1(m),
                _ => return Err(Error::UnknownRepresentation(s.to_owned())),
            },
        };
        Ok(kind)
    }
}

/// Automorphism images of the generators `σ_i`, `ρ_i` and their inverses.
#[derive(Debug, Clone)]
pub struct Representation {
    kind: RepKind,
    n: usize,
    alphabet: Arc<Alphabet>,
    sigma: Vec<Endomorphism>,
    sigma_inv: Vec<Endomorphism>,
    rho: Vec<Endomorphism>,
}

impl Representation {
    pub fn kind(&self) -> RepKind {
        self.kind
    }

    pub fn name(&self) -> String {
        self.kind.to_string()
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    /// Image of a single braid letter.
    pub fn letter(&self, l: BraidLetter) -> &Endomorphism {
        let k = l.index - 1;
        match (l.kind, l.inverse) {
            (Gen::Sigma, false) => &self.sigma[k],
            (Gen::Sigma, true) => &self.sigma_inv[k],
            (Gen::Rho, _) => &self.rho[k],
        }
    }
}

/// Image of a braid word: letter images composed in word order.
pub fn apply_rep(rep: &Representation, b: &BraidWord) -> Result<Endomorphism> {
    if b.strands() != rep.n {
        return Err(Error::StrandMismatch {
            expected: rep.n,
            found: b.strands(),
        });
    }
    let mut acc = Endomorphism::identity(&rep.alphabet);
    for &l in b.letters() {
        acc = acc.then(rep.letter(l))?;
    }
    Ok(acc)
}

fn x(i: usize) -> String {
    format!("x{i}")
}

fn y(i: usize) -> String {
    format!("y{i}")
}

struct Builder {
    alphabet: Arc<Alphabet>,
}

impl Builder {
    fn new(n: usize, with_y: bool, with_z: bool, z_commutes_with_y: bool) -> Result<Self> {
        Self::with_z_order(n, with_y, with_z, z_commutes_with_y, false)
    }

    fn with_z_order(
        n: usize,
        with_y: bool,
        with_z: bool,
        z_commutes_with_y: bool,
        z_involution: bool,
    ) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewStrands(n));
        }
        let mut symbols: Vec<String> = (1..=n).map(x).collect();
        if with_y {
            symbols.extend((1..=n).map(y));
        }
        if with_z {
            symbols.push("z".to_owned());
        }
        let pairs: Vec<(String, String)> = if z_commutes_with_y {
            (1..=n).map(|i| (y(i), "z".to_owned())).collect()
        } else {
            Vec::new()
        };
        let involutions: &[&str] = if z_involution { &["z"] } else { &[] };
        Ok(Builder {
            alphabet: Alphabet::with_involutions(symbols, &pairs, involutions)?,
        })
    }

    fn endo(&self, images: &[(String, String)]) -> Endomorphism {
        let words = images.iter().map(|(s, w)| {
            (
                s.as_str(),
                Word::parse(&self.alphabet, w).expect("valid image"),
            )
        });
        Endomorphism::from_images(&self.alphabet, words).expect("valid image")
    }

    /// Assembles a representation whose σ images are involutions.
    fn finish(
        self,
        kind: RepKind,
        n: usize,
        sigma: impl Fn(usize) -> Vec<(String, String)>,
        rho: impl Fn(usize) -> Vec<(String, String)>,
    ) -> Representation {
        let sigma: Vec<Endomorphism> = (1..n).map(|i| self.endo(&sigma(i))).collect();
        let rho: Vec<Endomorphism> = (1..n).map(|i| self.endo(&rho(i))).collect();
        Representation {
            kind,
            n,
            alphabet: self.alphabet,
            sigma_inv: sigma.clone(),
            sigma,
            rho,
        }
    }
}

fn swap_xy(i: usize) -> Vec<(String, String)> {
    vec![
        (x(i), x(i + 1)),
        (x(i + 1), x(i)),
        (y(i), y(i + 1)),
        (y(i + 1), y(i)),
    ]
}

fn sigma_m(i: usize, m: i64) -> Vec<(String, String)> {
    vec![
        (x(i), format!("x{} y{}^{m}", i + 1, i + 1)),
        (x(i + 1), format!("x{i} y{}^{}", i + 1, -m)),
    ]
}

/// `θ`: `σ_i` sends `x_i ↦ x_{i+1} y_{i+1}`, `x_{i+1} ↦ x_i y_{i+1}^-1`;
/// `ρ_i` swaps `x_i, x_{i+1}` and `y_i, y_{i+1}`.
pub fn theta(n: usize) -> Result<Representation> {
    Ok(Builder::new(n, true, false, false)?.finish(RepKind::Theta, n, |i| sigma_m(i, 1), swap_xy))
}

/// `θ_{1,m}`: as `θ` with `y_{i+1}^{±m}`.
pub fn theta1(n: usize, m: i64) -> Result<Representation> {
    Ok(Builder::new(n, true, false, false)?.finish(
        RepKind::Theta1(m),
        n,
        |i| sigma_m(i, m),
        swap_xy,
    ))
}

/// `θ_2`: `x_i ↦ x_{i+1} z^-1 y_{i+1} z`, `x_{i+1} ↦ x_i z^-1 y_{i+1}^-1 z`.
pub fn theta2(n: usize) -> Result<Representation> {
    Ok(Builder::new(n, true, true, false)?.finish(
        RepKind::Theta2,
        n,
        |i| {
            vec![
                (x(i), format!("x{} z^-1 y{} z", i + 1, i + 1)),
                (x(i + 1), format!("x{i} z^-1 y{}^-1 z", i + 1)),
            ]
        },
        swap_xy,
    ))
}

/// `θ_3` on `F_n ∗ (F_n × ℤ)`: `ρ_i` sends `x_i ↦ x_{i+1} z`,
/// `x_{i+1} ↦ x_i z^-1`.
pub fn theta3(n: usize) -> Result<Representation> {
    Ok(Builder::new(n, true, true, true)?.finish(
        RepKind::Theta3,
        n,
        |i| sigma_m(i, 1),
        |i| {
            let mut v = swap_xy(i);
            v[0].1 = format!("x{} z", i + 1);
            v[1].1 = format!("x{i} z^-1");
            v
        },
    ))
}

/// `θ_4` on `F_n ∗ (F_n × ℤ)`: `ρ_i` sends `x_i ↦ z^-1 x_{i+1} z`,
/// `x_{i+1} ↦ z x_i z^-1`.
pub fn theta4(n: usize) -> Result<Representation> {
    Ok(Builder::new(n, true, true, true)?.finish(
        RepKind::Theta4,
        n,
        |i| sigma_m(i, 1),
        |i| {
            let mut v = swap_xy(i);
            v[0].1 = format!("z^-1 x{} z", i + 1);
            v[1].1 = format!("z x{i} z^-1");
            v
        },
    ))
}

fn gauss_sign(i: usize) -> i64 {
    if i.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn gauss_sigma(i: usize) -> Vec<(String, String)> {
    let s = gauss_sign(i);
    vec![
        (x(i), format!("x{} z^{s}", i + 1)),
        (x(i + 1), format!("x{i} z^{}", -s)),
    ]
}

/// `θ_G` on `⟨x_1..x_n⟩ ∗ ⟨z | z²⟩`: `σ_i` sends `x_i ↦ x_{i+1} z^{(-1)^i}`,
/// `x_{i+1} ↦ x_i z^{(-1)^{i+1}}`; `ρ_i` swaps the `x` and inverts `z`.
///
/// `z` has order two here. With `z` of infinite order these formulas break
/// `σ_i ρ_j = ρ_j σ_i` for `|i - j| ≥ 2` and `ρ_i ρ_{i+1} σ_i = σ_{i+1} ρ_i ρ_{i+1}`
/// as soon as `n ≥ 3`.
pub fn theta_g(n: usize) -> Result<Representation> {
    Ok(Builder::with_z_order(n, false, true, false, true)?.finish(
        RepKind::ThetaG,
        n,
        gauss_sigma,
        |i| {
            vec![
                (x(i), x(i + 1)),
                (x(i + 1), x(i)),
                ("z".to_owned(), "z^-1".to_owned()),
            ]
        },
    ))
}

/// `θ_G^*` on `F_{2n} ∗ ⟨z | z²⟩`: `σ_i` as in `θ_G`; `ρ_i` swaps the `x` and
/// the `y` and inverts `z`. See [`theta_g`] for the order of `z`.
pub fn theta_g_star(n: usize) -> Result<Representation> {
    Ok(Builder::with_z_order(n, true, true, false, true)?.finish(
        RepKind::ThetaGStar,
        n,
        gauss_sigma,
        |i| {
            let mut v = swap_xy(i);
            v.push(("z".to_owned(), "z^-1".to_owned()));
            v
        },
    ))
}
