//! Oracles and generators shared by the integration tests and the acceptance
//! suite. The oracles work on plain vectors and never call the routines they
//! check.
#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use flatbraid::braid::abc_alphabet;
use flatbraid::{BraidLetter, BraidWord, Letter, Word};
use rand::Rng;

/// Uniform random braid word of length `0..=max_len` on `n` strands. With
/// `flat` set, `σ_i^-1` never appears.
pub fn random_braid<R: Rng>(rng: &mut R, n: usize, max_len: usize, flat: bool) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len).map(|_| random_letter(rng, n, flat)).collect();
    BraidWord::new(n, letters).unwrap()
}

pub fn random_letter<R: Rng>(rng: &mut R, n: usize, flat: bool) -> BraidLetter {
    let i = rng.gen_range(1..n);
    match rng.gen_range(0..if flat { 2 } else { 3 }) {
        0 => BraidLetter::sigma(i),
        1 => BraidLetter::rho(i),
        _ => BraidLetter::sigma_inv(i),
    }
}

/// One-line images of the permutation of `b` under `σ_i ↦ t_i`, `ρ_i ↦ t_i`
/// (or `σ_i ↦ 1` when `sigma_trivial`), multiplied left to right by swapping
/// the values `i` and `i + 1`.
pub fn permutation_oracle(b: &BraidWord, sigma_trivial: bool) -> Vec<usize> {
    let mut p: Vec<usize> = (1..=b.strands()).collect();
    for l in b.letters() {
        if sigma_trivial && l.kind == flatbraid::braid::Gen::Sigma {
            continue;
        }
        let i = l.index;
        for v in p.iter_mut() {
            if *v == i {
                *v = i + 1;
            } else if *v == i + 1 {
                *v = i;
            }
        }
    }
    p
}

pub fn is_pure_and_rabenda(b: &BraidWord) -> bool {
    let id: Vec<usize> = (1..=b.strands()).collect();
    permutation_oracle(b, false) == id && permutation_oracle(b, true) == id
}

/// Appends ρ-letters that undo the permutation of `b`, giving a pure braid.
pub fn make_pure(b: &BraidWord) -> BraidWord {
    let mut p = permutation_oracle(b, false);
    let mut letters = b.letters().to_vec();
    let pos = |p: &[usize], v: usize| p.iter().position(|&x| x == v).unwrap();
    while let Some(u) = (1..p.len()).find(|&u| pos(&p, u + 1) < pos(&p, u)) {
        letters.push(BraidLetter::rho(u));
        let (i, j) = (pos(&p, u), pos(&p, u + 1));
        p.swap(i, j);
    }
    BraidWord::new(b.strands(), letters).unwrap()
}

/// Letters of `{a, b, c}^±` encoded as `2 * symbol + inverse`.
pub type AbcCode = u8;

pub fn abc_word(code: &[AbcCode]) -> Word {
    Word::normalize(
        &abc_alphabet(),
        code.iter()
            .map(|&c| Letter::new(usize::from(c / 2), c % 2 == 1)),
    )
    .unwrap()
}

fn abc_commute(x: AbcCode, y: AbcCode) -> bool {
    let (s, t) = (x / 2, y / 2);
    s != t && s != 1 && t != 1
}

/// Breadth-first closure of `w` under free cancellation and `ac = ca`,
/// returning the shortest, then lexicographically least, word reached.
pub fn abc_bfs_canonical(w: &[AbcCode]) -> Vec<AbcCode> {
    assert!(w.len() <= 16, "packed words hold at most 16 letters");
    let start = pack(w);
    let mut seen: HashSet<u64> = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    let mut best = w.to_vec();
    let mut buf = Vec::with_capacity(w.len());
    while let Some(u) = queue.pop_front() {
        unpack(u, &mut buf);
        if (buf.len(), &buf) < (best.len(), &best) {
            best.clone_from(&buf);
        }
        for i in 0..buf.len().saturating_sub(1) {
            let (x, y) = (buf[i], buf[i + 1]);
            let next = if x ^ 1 == y {
                let mut v = buf.clone();
                v.drain(i..i + 2);
                pack(&v)
            } else if abc_commute(x, y) {
                buf.swap(i, i + 1);
                let v = pack(&buf);
                buf.swap(i, i + 1);
                v
            } else {
                continue;
            };
            if seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    best
}

/// Four bits per letter, `code + 1`, first letter lowest.
fn pack(w: &[AbcCode]) -> u64 {
    w.iter()
        .rev()
        .fold(0, |acc, &c| (acc << 4) | u64::from(c + 1))
}

fn unpack(mut v: u64, out: &mut Vec<AbcCode>) {
    out.clear();
    while v != 0 {
        out.push((v & 0xf) as AbcCode - 1);
        v >>= 4;
    }
}

/// The `k`-th word of length `len` over the six letters.
pub fn abc_word_by_index(mut k: u64, len: usize) -> Vec<AbcCode> {
    let mut out = vec![0; len];
    for slot in out.iter_mut() {
        *slot = (k % 6) as AbcCode;
        k /= 6;
    }
    out
}
