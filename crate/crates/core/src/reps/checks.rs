use std::fmt;

use serde::Serialize;

use super::harness::BraidAction;
use super::{apply_rep, theta_g_star};
use crate::braid::{BraidWord, Permutation};
use crate::error::Result;
use crate::words::{Alphabet, Word};

/// Whether `b` acts trivially.
pub fn kernel_witness_check<A: BraidAction>(action: &A, b: &BraidWord) -> Result<bool> {
    Ok(action.act(b)? == action.identity())
}

/// The image of a Gauss virtual braid under `θ_G^*`, split into the
/// permutations of the `x` and `y` generators and the `z`-exponents (0 or 1,
/// as `z` has order two) that follow each `x_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GaussImage {
    pub x_permutation: Permutation,
    pub y_permutation: Permutation,
    pub z_residuals: Vec<i64>,
}

impl GaussImage {
    pub fn is_identity(&self) -> bool {
        self.x_permutation.is_identity()
            && self.y_permutation.is_identity()
            && self.z_residuals.iter().all(|&k| k == 0)
    }
}

impl fmt::Display for GaussImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "x permutation: {}", self.x_permutation)?;
        writeln!(f, "y permutation: {}", self.y_permutation)?;
        let r: Vec<String> = self.z_residuals.iter().map(|k| k.to_string()).collect();
        write!(f, "z residuals: [{}]", r.join(", "))
    }
}

/// Reads off `θ_G^*(b)`: every `x_i` goes to some `x_j z^k` and every `y_i`
/// to some `y_j`.
pub fn gauss_image(b: &BraidWord) -> Result<GaussImage> {
    let n = b.strands();
    let rep = theta_g_star(n)?;
    let e = apply_rep(&rep, b)?;
    let z = rep.alphabet().lookup("z")?;
    let mut xs = Vec::with_capacity(n);
    let mut ys = Vec::with_capacity(n);
    let mut residuals = Vec::with_capacity(n);
    for i in 0..n {
        let img = e.image_of(i);
        let head = img
            .letters()
            .iter()
            .find(|l| l.symbol() != z)
            .expect("x image keeps one x letter");
        xs.push(head.symbol() + 1);
        residuals.push(img.exponent_sum_of(z));
        let yimg = e.image_of(n + i);
        ys.push(yimg.letters()[0].symbol() - n + 1);
    }
    Ok(GaussImage {
        x_permutation: Permutation::from_one_line(&xs).expect("bijection on x"),
        y_permutation: Permutation::from_one_line(&ys).expect("bijection on y"),
        z_residuals: residuals,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SwitchEquation {
    pub name: &'static str,
    pub holds: bool,
    pub left: Vec<String>,
    pub right: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SwitchReport {
    pub equations: Vec<SwitchEquation>,
}

impl SwitchReport {
    pub fn all_hold(&self) -> bool {
        self.equations.iter().all(|e| e.holds)
    }
}

impl fmt::Display for SwitchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, e) in self.equations.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(
                f,
                "{:<14} {:<6} ({})",
                e.name,
                if e.holds { "holds" } else { "fails" },
                e.left.join(", ")
            )?;
            if !e.holds {
                write!(f, " vs ({})", e.right.join(", "))?;
            }
        }
        Ok(())
    }
}

type Pair = (Word, Word);
type Triple = [Pair; 3];

/// `S((a, x), (b, y)) = ((b y, x), (a y^-1, y))`.
fn s_map(p: &Pair, q: &Pair) -> (Pair, Pair) {
    let (a, x) = p;
    let (b, y) = q;
    (
        (b.mul_unchecked(y), x.clone()),
        (a.mul_unchecked(&y.invert()), y.clone()),
    )
}

fn v_map(p: &Pair, q: &Pair) -> (Pair, Pair) {
    (q.clone(), p.clone())
}

type Op = fn(&Pair, &Pair) -> (Pair, Pair);

/// Applies `op` to positions `k, k + 1` of the triple.
fn at(t: Triple, k: usize, op: Op) -> Triple {
    let [p0, p1, p2] = t;
    match k {
        0 => {
            let (a, b) = op(&p0, &p1);
            [a, b, p2]
        }
        _ => {
            let (b, c) = op(&p1, &p2);
            [p0, b, c]
        }
    }
}

fn run(t: &Triple, steps: &[(usize, Op)]) -> Triple {
    steps.iter().fold(t.clone(), |acc, &(k, op)| at(acc, k, op))
}

fn flatten(t: &Triple) -> Vec<String> {
    t.iter()
        .flat_map(|(a, x)| [a.to_string(), x.to_string()])
        .collect()
}

/// Checks the switch `S(a, b; x, y) = (b y, a y^-1; x, y)` with the swap `V`
/// on the generic triple `((a, x), (b, y), (c, z))` of a free group: the
/// Yang–Baxter equation for `S`, `V² = id`, and the mixed relation
/// `(id × V)(S × id)(id × V) = (V × id)(id × S)(V × id)`.
pub fn switch_axiom_check() -> SwitchReport {
    let alpha = Alphabet::free(["a", "b", "c", "x", "y", "z"]).expect("static alphabet");
    let g = |s: &str| Word::generator(&alpha, s).expect("static symbol");
    let t: Triple = [(g("a"), g("x")), (g("b"), g("y")), (g("c"), g("z"))];
    let s: Op = s_map;
    let v: Op = v_map;
    let eq = |name, l: &[(usize, Op)], r: &[(usize, Op)]| {
        let (a, b) = (run(&t, l), run(&t, r));
        SwitchEquation {
            name,
            holds: a == b,
            left: flatten(&a),
            right: flatten(&b),
        }
    };
    SwitchReport {
        equations: vec![
            eq(
                "yang-baxter",
                &[(0, s), (1, s), (0, s)],
                &[(1, s), (0, s), (1, s)],
            ),
            eq("involution", &[(0, v), (0, v)], &[]),
            eq(
                "mixed",
                &[(1, v), (0, s), (1, v)],
                &[(0, v), (1, s), (0, v)],
            ),
        ],
    }
}
