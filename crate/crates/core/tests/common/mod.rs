//! Independent oracles and samplers shared by the integration targets.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use cliffweyl_core::cartan::CartanMatrix;
use cliffweyl_core::clifford::{Blade, Multivector};
use cliffweyl_core::exactform::{QVector, QuadSpace};
use cliffweyl_core::matrix::RatMatrix;
use cliffweyl_core::rational::{int, rat};
use cliffweyl_core::Rational;
use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type Word = Vec<usize>;

/// Multiplies two elements given as linear combinations of generator words by
/// repeatedly rewriting the leftmost out-of-order adjacent pair with
/// `g_i g_j = −g_j g_i − 2S(g_i, g_j)` (and `g_i g_i = −q(g_i)`), until every
/// word is strictly increasing.
pub fn rewrite_product(gram: &RatMatrix, a: &BTreeMap<Word, Rational>, b: &BTreeMap<Word, Rational>) -> BTreeMap<Word, Rational> {
    let mut pending: Vec<(Word, Rational)> = Vec::new();
    for (wa, ca) in a {
        for (wb, cb) in b {
            let mut w = wa.clone();
            w.extend(wb);
            pending.push((w, ca * cb));
        }
    }
    let mut done: BTreeMap<Word, Rational> = BTreeMap::new();
    while let Some((w, c)) = pending.pop() {
        if c.is_zero() {
            continue;
        }
        match (0..w.len().saturating_sub(1)).find(|&k| w[k] >= w[k + 1]) {
            None => {
                let e = done.entry(w).or_insert_with(Rational::zero);
                *e += c;
            }
            Some(k) => {
                let (i, j) = (w[k], w[k + 1]);
                let s = gram[(i, j)].clone();
                let mut contracted = w[..k].to_vec();
                contracted.extend(&w[k + 2..]);
                if i == j {
                    pending.push((contracted, -&c * &s));
                } else {
                    let mut swapped = w.clone();
                    swapped.swap(k, k + 1);
                    pending.push((swapped, -c.clone()));
                    pending.push((contracted, -int(2) * &s * &c));
                }
            }
        }
    }
    done.retain(|_, c| !c.is_zero());
    done
}

pub fn to_words(x: &Multivector) -> BTreeMap<Word, Rational> {
    x.terms().map(|(b, c)| (b.indices(), c.clone())).collect()
}

/// Highest root by closing the simple roots under reflections, in
/// simple-root coordinates, with `s_i(β) = β − (Σ_j β_j c_ij) α_i`.
pub fn highest_root_by_closure(c: &CartanMatrix) -> Vec<i64> {
    let n = c.rank();
    let mut roots: HashSet<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    let mut frontier: Vec<Vec<i64>> = roots.iter().cloned().collect();
    while let Some(beta) = frontier.pop() {
        for i in 0..n {
            let pairing: i64 = (0..n).map(|j| beta[j] * c.get(i, j)).sum();
            let mut r = beta.clone();
            r[i] -= pairing;
            if roots.insert(r.clone()) {
                frontier.push(r);
            }
        }
    }
    roots.into_iter().max_by_key(|r| r.iter().sum::<i64>()).expect("nonempty")
}

/// Integer matrices of the simple reflections on the root lattice, column
/// `j` being `s_i(α_j) = α_j − c_ij α_i`.
pub fn root_lattice_reflections(c: &CartanMatrix) -> Vec<Vec<Vec<i64>>> {
    let n = c.rank();
    (0..n)
        .map(|i| {
            let mut m = vec![vec![0i64; n]; n];
            for (j, row) in m.iter_mut().enumerate() {
                row[j] = 1;
            }
            for (j, x) in m[i].iter_mut().enumerate() {
                *x -= c.get(i, j);
            }
            m
        })
        .collect()
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

/// Number of distinct group elements expressible as products of at most `l`
/// generators, for each `l ≤ max_len`: breadth-first closure of integer
/// matrices.
pub fn matrix_closure_counts(gens: &[Vec<Vec<i64>>], max_len: usize) -> Vec<usize> {
    let n = gens[0].len();
    let id: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut frontier = vec![id];
    let mut counts = vec![1];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for m in &frontier {
            for g in gens {
                let p = mat_mul(m, g);
                if seen.insert(p.clone()) {
                    next.push(p);
                }
            }
        }
        counts.push(seen.len());
        frontier = next;
    }
    counts
}

pub fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    let n = rng.gen_range(-4i64..=4);
    let d = [1i64, 1, 1, 2, 3][rng.gen_range(0..5)];
    rat(n, d)
}

/// A random nonsingular quadratic space of dimension `n`; off-diagonal
/// entries appear when `general` is set.
pub fn random_space(rng: &mut ChaCha8Rng, n: usize, general: bool) -> Arc<QuadSpace> {
    loop {
        let mut g = RatMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let x = if i == j {
                    int(rng.gen_range(-3i64..=3))
                } else if general && rng.gen_bool(0.4) {
                    rat(rng.gen_range(-2i64..=2), [1, 2][rng.gen_range(0..2)])
                } else {
                    Rational::zero()
                };
                g[(i, j)] = x.clone();
                g[(j, i)] = x;
            }
        }
        let s = QuadSpace::new(g).expect("symmetric");
        if s.is_nonsingular() {
            return Arc::new(s);
        }
    }
}

pub fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> QVector {
    QVector((0..n).map(|_| small_rational(rng)).collect())
}

pub fn random_nonisotropic(rng: &mut ChaCha8Rng, s: &QuadSpace) -> QVector {
    loop {
        let v = random_vector(rng, s.dim());
        if !s.quadratic(&v).expect("dimension").is_zero() {
            return v;
        }
    }
}

/// A sparse random multivector with at most `terms` terms.
pub fn random_multivector(rng: &mut ChaCha8Rng, s: &Arc<QuadSpace>, terms: usize) -> Multivector {
    let n = s.dim();
    let t: Vec<(Blade, Rational)> =
        (0..terms).map(|_| (Blade::from_bits(rng.gen_range(0..1u64 << n)), small_rational(rng))).collect();
    Multivector::from_terms(s, t).expect("blades fit")
}
