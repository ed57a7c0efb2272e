mod common;

use common::*;
use flatbraid::braid::{fvp3_normal_form, rewrite_to_lambda, rewrite_to_x, BraidMode};
use flatbraid::invariant::link_invariant;
use flatbraid::reps::{kernel_witness_check, theta, theta1, theta2, theta3, theta4};
use flatbraid::{apply_rep, BraidLetter, BraidWord, Representation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn kernel_witness(i: usize, n: usize) -> BraidWord {
    BraidWord::new(n, vec![BraidLetter::rho(i), BraidLetter::sigma(i + 1)])
        .unwrap()
        .pow(6)
}

fn conjugate(w: &BraidWord, b: &BraidWord) -> BraidWord {
    w.then(b).then(&w.inverse())
}

#[test]
fn closure_invariant_is_stable_under_conjugation_and_stabilization() {
    let mut r = rng(11);
    let hopf = BraidWord::parse("r1 s1", 2).unwrap();
    for m in 0..=8 {
        let b = hopf.pow(m);
        let base = link_invariant(&b).unwrap().abelian;
        for _ in 0..6 {
            let w = random_braid(&mut r, 2, 8, false);
            assert_eq!(
                link_invariant(&conjugate(&w, &b)).unwrap().abelian,
                base,
                "m={m} w={w}"
            );
        }
        let wide = b.widen(3).unwrap();
        for last in ["s2", "r2", "S2"] {
            let st = wide.then(&BraidWord::parse(last, 3).unwrap());
            assert_eq!(link_invariant(&st).unwrap().abelian, base, "m={m} {last}");
            let w = random_braid(&mut r, 3, 8, false);
            let c = conjugate(&w, &st);
            assert_eq!(link_invariant(&c).unwrap().abelian, base, "m={m} {c}");
        }
    }
}

#[test]
fn kernel_membership_agrees_across_equivalent_representations() {
    let mut r = rng(23);
    for n in 2..=4 {
        let reps: Vec<Representation> = vec![
            theta(n).unwrap(),
            theta1(n, -2).unwrap(),
            theta1(n, -1).unwrap(),
            theta1(n, 2).unwrap(),
            theta1(n, 3).unwrap(),
            theta2(n).unwrap(),
            theta3(n).unwrap(),
            theta4(n).unwrap(),
        ];
        let mut in_kernel = 0;
        for k in 0..120 {
            let b = if n >= 3 && k % 2 == 0 {
                let w = random_braid(&mut r, n, 6, true);
                let i = r.gen_range(1..=n - 2);
                let core = kernel_witness(i, n);
                let tail = if k % 4 == 0 {
                    BraidWord::empty(n).unwrap()
                } else {
                    random_braid(&mut r, n, 4, true)
                };
                conjugate(&w, &core).then(&tail)
            } else {
                random_braid(&mut r, n, 16, true)
            };
            let first = kernel_witness_check(&reps[0], &b).unwrap();
            in_kernel += usize::from(first);
            for rep in &reps[1..] {
                assert_eq!(
                    kernel_witness_check(rep, &b).unwrap(),
                    first,
                    "{} on {b}",
                    rep.name()
                );
            }
        }
        if n >= 3 {
            assert!(in_kernel >= 20, "n={n}: only {in_kernel} kernel samples");
        }
    }
}

#[test]
fn two_strand_words_are_detected() {
    let rep = theta(2).unwrap();
    let sr = BraidWord::parse("s1 r1", 2).unwrap();
    let r1 = BraidWord::parse("r1", 2).unwrap();
    for eps in 0..=1 {
        for k in -50..=50i64 {
            if eps == 0 && k == 0 {
                continue;
            }
            let head = if eps == 1 {
                r1.clone()
            } else {
                BraidWord::empty(2).unwrap()
            };
            let b = head.then(&sr.pow(k));
            assert!(
                !apply_rep(&rep, &b).unwrap().is_identity(),
                "eps={eps} k={k}"
            );
        }
    }
}

#[test]
fn kernel_elements_lie_in_both_permutation_kernels() {
    let mut r = rng(37);
    for n in 3..=5 {
        let rep = theta(n).unwrap();
        for _ in 0..30 {
            let mut b = BraidWord::empty(n).unwrap();
            for _ in 0..r.gen_range(1..=3) {
                let w = random_braid(&mut r, n, 8, false);
                let i = r.gen_range(1..=n - 2);
                let k = kernel_witness(i, n);
                let k = if r.gen_bool(0.5) { k } else { k.inverse() };
                b = b.then(&conjugate(&w, &k));
            }
            assert!(kernel_witness_check(&rep, &b).unwrap());
            assert!(is_pure_and_rabenda(&b), "{b}");
        }
    }
}

#[test]
fn lambda_rewriting_preserves_theta_image() {
    let mut r = rng(41);
    for _ in 0..200 {
        let n = r.gen_range(2..=5);
        let b = make_pure(&random_braid(&mut r, n, 12, false));
        let rep = theta(n).unwrap();
        for mode in [BraidMode::Vb, BraidMode::Fvb] {
            let lw = rewrite_to_lambda(&b, mode).unwrap();
            let back = lw.to_braid(n).unwrap();
            assert_eq!(
                apply_rep(&rep, &back).unwrap(),
                apply_rep(&rep, &b).unwrap(),
                "{b}"
            );
        }
    }
}

#[test]
fn x_rewriting_preserves_theta_image() {
    let mut r = rng(43);
    for _ in 0..200 {
        let n = r.gen_range(2..=5);
        let raw = random_braid(&mut r, n, 12, false);
        let mut letters = raw.letters().to_vec();
        let mut p = permutation_oracle(&raw, true);
        let pos = |p: &[usize], v: usize| p.iter().position(|&x| x == v).unwrap();
        while let Some(u) = (1..n).find(|&u| pos(&p, u + 1) < pos(&p, u)) {
            letters.push(BraidLetter::rho(u));
            let (i, j) = (pos(&p, u), pos(&p, u + 1));
            p.swap(i, j);
        }
        let b = BraidWord::new(n, letters).unwrap();
        let rep = theta(n).unwrap();
        let xw = rewrite_to_x(&b).unwrap();
        let back = xw.to_braid(n).unwrap();
        assert_eq!(
            apply_rep(&rep, &back).unwrap(),
            apply_rep(&rep, &b).unwrap(),
            "{b}"
        );
    }
}

/// `u` with cancelling pairs inserted and commuting neighbours swapped.
fn disguise<R: Rng>(r: &mut R, u: &[AbcCode], budget: usize) -> Vec<AbcCode> {
    let mut v = u.to_vec();
    while v.len() + 2 <= budget && r.gen_bool(0.7) {
        let at = r.gen_range(0..=v.len());
        let x: AbcCode = r.gen_range(0..6);
        v.splice(at..at, [x, x ^ 1]);
    }
    for _ in 0..4 {
        if v.len() < 2 {
            break;
        }
        let i = r.gen_range(0..v.len() - 1);
        let (s, t) = (v[i] / 2, v[i + 1] / 2);
        if s != t && s != 1 && t != 1 {
            v.swap(i, i + 1);
        }
    }
    v
}

#[test]
fn fvp3_normal_form_matches_rewriting_oracle_on_random_pairs() {
    let mut r = rng(53);
    let nf = |w: &[AbcCode]| fvp3_normal_form(&abc_word(w)).unwrap();
    let mut equal_pairs = 0;
    for k in 0..3000 {
        let len = r.gen_range(0..=8);
        let u: Vec<AbcCode> = (0..len).map(|_| r.gen_range(0..6)).collect();
        let v = if k % 3 == 2 {
            let len = r.gen_range(0..=12);
            (0..len).map(|_| r.gen_range(0..6)).collect()
        } else {
            disguise(&mut r, &u, 12)
        };
        let same = abc_bfs_canonical(&u) == abc_bfs_canonical(&v);
        assert_eq!(nf(&u) == nf(&v), same, "{u:?} vs {v:?}");
        equal_pairs += usize::from(same);
    }
    assert!(equal_pairs >= 1500);
}
