use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::{apply_rep, Representation};
use crate::braid::{BraidLetter, BraidMode, BraidWord};
use crate::endo::Endomorphism;
use crate::error::{Error, Result};

/// Anything that assigns an invertible image to each braid letter, with a
/// composition in word order and a decidable equality.
pub trait BraidAction: Sync {
    type Image: Clone + PartialEq + Send;

    fn name(&self) -> String;

    fn strands(&self) -> usize;

    fn identity(&self) -> Self::Image;

    fn letter_image(&self, l: BraidLetter) -> Self::Image;

    /// `a` followed by `b`.
    fn compose(&self, a: &Self::Image, b: &Self::Image) -> Self::Image;

    /// Basis elements or symbols on which the images disagree.
    fn differences(&self, a: &Self::Image, b: &Self::Image) -> Vec<Difference>;

    fn act(&self, b: &BraidWord) -> Result<Self::Image> {
        if b.strands() != self.strands() {
            return Err(Error::StrandMismatch {
                expected: self.strands(),
                found: b.strands(),
            });
        }
        let mut acc = self.identity();
        for &l in b.letters() {
            acc = self.compose(&acc, &self.letter_image(l));
        }
        Ok(acc)
    }
}

impl BraidAction for Representation {
    type Image = Endomorphism;

    fn name(&self) -> String {
        Representation::name(self)
    }

    fn strands(&self) -> usize {
        Representation::strands(self)
    }

    fn identity(&self) -> Endomorphism {
        Endomorphism::identity(self.alphabet())
    }

    fn letter_image(&self, l: BraidLetter) -> Endomorphism {
        self.letter(l).clone()
    }

    fn compose(&self, a: &Endomorphism, b: &Endomorphism) -> Endomorphism {
        a.then(b).expect("images share the target alphabet")
    }

    fn differences(&self, a: &Endomorphism, b: &Endomorphism) -> Vec<Difference> {
        a.differing(b)
            .into_iter()
            .map(|s| Difference {
                symbol: self.alphabet().symbol(s).to_owned(),
                left: a.image_of(s).to_string(),
                right: b.image_of(s).to_string(),
            })
            .collect()
    }

    fn act(&self, b: &BraidWord) -> Result<Endomorphism> {
        apply_rep(self, b)
    }
}

/// A generator on which the two sides of a relation act differently.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Difference {
    pub symbol: String,
    pub left: String,
    pub right: String,
}

/// Whether a relation family is imposed in the chosen mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Defining,
    Forbidden,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationInstance {
    pub family: &'static str,
    pub indices: Vec<usize>,
    pub role: Role,
    pub left: String,
    pub right: String,
    pub holds: bool,
    /// First differing symbol in alphabet order.
    pub witness: Option<String>,
    pub differing: Vec<Difference>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationReport {
    pub representation: String,
    pub n: usize,
    pub mode: BraidMode,
    pub instances: Vec<RelationInstance>,
}

impl RelationReport {
    /// Whether every defining relation holds.
    pub fn defining_hold(&self) -> bool {
        self.instances
            .iter()
            .filter(|r| r.role == Role::Defining)
            .all(|r| r.holds)
    }

    pub fn failures(&self, role: Role) -> impl Iterator<Item = &RelationInstance> {
        self.instances
            .iter()
            .filter(move |r| r.role == role && !r.holds)
    }

    pub fn family(&self, family: &str) -> impl Iterator<Item = &RelationInstance> + '_ {
        let family = family.to_owned();
        self.instances.iter().filter(move |r| r.family == family)
    }
}

impl fmt::Display for RelationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "representation {} on {} strands, mode {}",
            self.representation, self.n, self.mode
        )?;
        writeln!(
            f,
            "{:<16} {:<10} {:<9} {:<6} witness",
            "family", "indices", "role", "holds"
        )?;
        for r in &self.instances {
            let idx: Vec<String> = r.indices.iter().map(|i| i.to_string()).collect();
            let role = match r.role {
                Role::Defining => "defining",
                Role::Forbidden => "forbidden",
            };
            let witness = match r.differing.first() {
                Some(d) => format!("{}: {} vs {}", d.symbol, d.left, d.right),
                None => "-".to_owned(),
            };
            writeln!(
                f,
                "{:<16} {:<10} {:<9} {:<6} {}",
                r.family,
                idx.join(","),
                role,
                if r.holds { "yes" } else { "no" },
                witness
            )?;
        }
        let defining = self.instances.iter().filter(|r| r.role == Role::Defining);
        let total = defining.clone().count();
        let ok = defining.filter(|r| r.holds).count();
        let forbidden_failed = self.failures(Role::Forbidden).count();
        write!(
            f,
            "defining relations: {ok}/{total} hold; forbidden relations failing: {forbidden_failed}"
        )
    }
}

struct Instance {
    family: &'static str,
    indices: Vec<usize>,
    role: Role,
    left: Vec<BraidLetter>,
    right: Vec<BraidLetter>,
}

fn instances(n: usize, mode: BraidMode) -> Vec<Instance> {
    use BraidLetter as L;
    let s = L::sigma;
    let r = L::rho;
    let mut out = Vec::new();
    let mut push = |family, indices: Vec<usize>, role, left: Vec<L>, right: Vec<L>| {
        out.push(Instance {
            family,
            indices,
            role,
            left,
            right,
        })
    };
    let d = Role::Defining;
    let far = |i: usize, j: usize| i.abs_diff(j) >= 2;
    for i in 1..n {
        for j in i + 1..n {
            if far(i, j) {
                push(
                    "sigma-commute",
                    vec![i, j],
                    d,
                    vec![s(i), s(j)],
                    vec![s(j), s(i)],
                );
            }
        }
    }
    for i in 1..n.saturating_sub(1) {
        push(
            "sigma-braid",
            vec![i],
            d,
            vec![s(i), s(i + 1), s(i)],
            vec![s(i + 1), s(i), s(i + 1)],
        );
    }
    for i in 1..n {
        push("rho-square", vec![i], d, vec![r(i), r(i)], vec![]);
    }
    for i in 1..n {
        for j in i + 1..n {
            if far(i, j) {
                push(
                    "rho-commute",
                    vec![i, j],
                    d,
                    vec![r(i), r(j)],
                    vec![r(j), r(i)],
                );
            }
        }
    }
    for i in 1..n.saturating_sub(1) {
        push(
            "rho-braid",
            vec![i],
            d,
            vec![r(i), r(i + 1), r(i)],
            vec![r(i + 1), r(i), r(i + 1)],
        );
    }
    for i in 1..n {
        for j in 1..n {
            if far(i, j) {
                push(
                    "mixed-commute",
                    vec![i, j],
                    d,
                    vec![s(i), r(j)],
                    vec![r(j), s(i)],
                );
            }
        }
    }
    for i in 1..n.saturating_sub(1) {
        push(
            "mixed-braid",
            vec![i],
            d,
            vec![r(i), r(i + 1), s(i)],
            vec![s(i + 1), r(i), r(i + 1)],
        );
    }
    if mode.sigma_involutive() {
        for i in 1..n {
            push("sigma-square", vec![i], d, vec![s(i), s(i)], vec![]);
        }
    }
    if mode.gauss() {
        for i in 1..n {
            push("gauss", vec![i], d, vec![s(i), r(i)], vec![r(i), s(i)]);
        }
    }
    let forbidden_role = if mode.welded() { d } else { Role::Forbidden };
    let mirror_role = if mode == BraidMode::Fwb {
        d
    } else {
        Role::Forbidden
    };
    for i in 1..n.saturating_sub(1) {
        push(
            "forbidden",
            vec![i],
            forbidden_role,
            vec![r(i), s(i + 1), s(i)],
            vec![s(i + 1), s(i), r(i + 1)],
        );
    }
    for i in 1..n.saturating_sub(1) {
        push(
            "forbidden-mirror",
            vec![i],
            mirror_role,
            vec![r(i + 1), s(i), s(i + 1)],
            vec![s(i), s(i + 1), r(i)],
        );
    }
    out
}

fn show(letters: &[BraidLetter]) -> String {
    if letters.is_empty() {
        return "1".to_owned();
    }
    letters
        .iter()
        .map(|l| l.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Evaluates every instance of every relation family of `mode` on `n`
/// strands, together with both forbidden families.
///
/// The forbidden families are defining relations in the welded modes and are
/// reported with [`Role::Forbidden`] otherwise. Instances are evaluated in
/// parallel; the report order is fixed.
pub fn verify_defining_relations<A: BraidAction>(action: &A, mode: BraidMode) -> RelationReport {
    let n = action.strands();
    let results = instances(n, mode)
        .into_par_iter()
        .map(|inst| {
            let eval = |w: &[BraidLetter]| {
                w.iter().fold(action.identity(), |acc, &l| {
                    action.compose(&acc, &action.letter_image(l))
                })
            };
            let (a, b) = (eval(&inst.left), eval(&inst.right));
            let holds = a == b;
            let differing = if holds {
                Vec::new()
            } else {
                action.differences(&a, &b)
            };
            RelationInstance {
                family: inst.family,
                indices: inst.indices,
                role: inst.role,
                left: show(&inst.left),
                right: show(&inst.right),
                holds,
                witness: differing.first().map(|d| d.symbol.clone()),
                differing,
            }
        })
        .collect();
    RelationReport {
        representation: action.name(),
        n,
        mode,
        instances: results,
    }
}
