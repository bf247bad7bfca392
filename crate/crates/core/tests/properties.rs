mod common;

use std::sync::Arc;

use cliffweyl_core::cartan::{symmetrize, CartanMatrix, Family, FiniteType};
use cliffweyl_core::clifford::{Blade, GroupElement, Multivector};
use cliffweyl_core::exactform::{squarefree_class, QVector, QuadSpace};
use cliffweyl_core::matrix::RatMatrix;
use cliffweyl_core::rational::{int, rat};
use cliffweyl_core::Rational;
use num_traits::Zero;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| rat(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |x| !x.is_zero())
}

/// A nonsingular space of dimension 1–4, possibly non-diagonal.
fn space() -> impl Strategy<Value = Arc<QuadSpace>> {
    (1usize..=4)
        .prop_flat_map(|n| proptest::collection::vec(-2i64..=2, n * n).prop_map(move |e| (n, e)))
        .prop_filter_map("singular", |(n, e)| {
            let g = RatMatrix::from_fn(n, n, |i, j| {
                let (a, b) = (i.min(j), i.max(j));
                if a == b {
                    int(e[a * n + b])
                } else {
                    rat(e[a * n + b], 2)
                }
            });
            let s = QuadSpace::new(g).ok()?;
            s.is_nonsingular().then(|| Arc::new(s))
        })
}

fn element(s: &Arc<QuadSpace>) -> impl Strategy<Value = Multivector> {
    let n = s.dim();
    let s = s.clone();
    proptest::collection::vec((0..1u64 << n, rational()), 0..4)
        .prop_map(move |t| Multivector::from_terms(&s, t.into_iter().map(|(b, c)| (Blade::from_bits(b), c))).unwrap())
}

fn vector(s: &Arc<QuadSpace>) -> impl Strategy<Value = QVector> {
    proptest::collection::vec(rational(), s.dim()).prop_map(QVector)
}

fn space_with_elements() -> impl Strategy<Value = (Arc<QuadSpace>, Multivector, Multivector, Multivector)> {
    space().prop_flat_map(|s| (Just(s.clone()), element(&s), element(&s), element(&s)))
}

fn space_with_mirrors() -> impl Strategy<Value = (Arc<QuadSpace>, Vec<QVector>)> {
    space().prop_flat_map(|s| {
        let s2 = s.clone();
        (Just(s.clone()), proptest::collection::vec(vector(&s), 1..4)).prop_filter("isotropic mirror", move |(_, vs)| {
            vs.iter().all(|v| !s2.quadratic(v).unwrap().is_zero())
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_is_associative_and_distributive((_s, x, y, z) in space_with_elements()) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
    }

    #[test]
    fn involution_laws((_s, x, y, _z) in space_with_elements()) {
        let xy = &x * &y;
        prop_assert_eq!(xy.grade_involution(), &x.grade_involution() * &y.grade_involution());
        prop_assert_eq!(xy.reversion(), &y.reversion() * &x.reversion());
        prop_assert_eq!(xy.conjugation(), &y.conjugation() * &x.conjugation());
        prop_assert_eq!(x.reversion().reversion(), x.clone());
        prop_assert_eq!(x.conjugation(), x.reversion().grade_involution());
    }

    #[test]
    fn vectors_square_to_minus_q((s, v) in space().prop_flat_map(|s| (Just(s.clone()), vector(&s)))) {
        let m = Multivector::vector(&s, &v).unwrap();
        prop_assert_eq!(&m * &m, Multivector::scalar(&s, -s.quadratic(&v).unwrap()));
        prop_assert_eq!(m.reversion(), m.clone());
        prop_assert_eq!(m.grade_involution(), -&m);
    }

    #[test]
    fn matches_rewriting_oracle((s, x, y, _z) in space_with_elements()) {
        let fast = common::to_words(&(&x * &y));
        let slow = common::rewrite_product(s.gram(), &common::to_words(&x), &common::to_words(&y));
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn signature_is_congruence_invariant(s in space(), seed in proptest::collection::vec(-2i64..=2, 16)) {
        let n = s.dim();
        let p = RatMatrix::from_fn(n, n, |i, j| int(seed[i * 4 + j] + if i == j { 5 } else { 0 }));
        prop_assume!(!p.determinant().unwrap().is_zero());
        let t = QuadSpace::new(&(&p.transpose() * s.gram()) * &p).unwrap();
        prop_assert_eq!(t.signature(), s.signature());
        let sig = s.signature();
        prop_assert_eq!(sig.pos + sig.neg + sig.zero, n);
    }

    #[test]
    fn reflection_is_an_involutive_isometry((s, vs) in space_with_mirrors(), w_seed in proptest::collection::vec(rational(), 4)) {
        let w = QVector(w_seed[..s.dim()].to_vec());
        let v = &vs[0];
        let r = s.reflection(v).unwrap();
        prop_assert!(s.is_isometry(r.matrix()));
        prop_assert!(r.compose(&r).is_identity());
        prop_assert_eq!(r.apply(v), -v);
        prop_assert_eq!(s.quadratic(&s.reflect(v, &w).unwrap()).unwrap(), s.quadratic(&w).unwrap());
        prop_assert_eq!(r.determinant(), int(-1));
    }

    #[test]
    fn squarefree_class_is_multiplicative(a in nonzero_rational(), b in nonzero_rational(), c in nonzero_rational()) {
        let ab = squarefree_class(&(&a * &b)).unwrap();
        prop_assert_eq!(ab, &squarefree_class(&a).unwrap() * &squarefree_class(&b).unwrap());
        prop_assert_eq!(squarefree_class(&(&a * &c * &c)).unwrap(), squarefree_class(&a).unwrap());
    }

    #[test]
    fn rho_is_a_homomorphism_killing_scalars((s, vs) in space_with_mirrors(), k in nonzero_rational()) {
        let g = GroupElement::from_mirrors(&s, vs.clone()).unwrap();
        let h = GroupElement::from_mirrors(&s, vs.iter().rev().cloned().collect()).unwrap();
        let gh = g.compose(&h).unwrap();
        prop_assert_eq!(gh.value().rho().unwrap(), g.value().rho().unwrap().compose(&h.value().rho().unwrap()));
        prop_assert!(g.verify().unwrap());
        let scaled = g.value().scale(&k);
        prop_assert_eq!(scaled.rho().unwrap(), g.value().rho().unwrap());
        prop_assert!(g.value().in_clifford_group().unwrap());
    }

    #[test]
    fn norm_is_multiplicative((s, vs) in space_with_mirrors()) {
        let x = Multivector::product_of_vectors(&s, &vs).unwrap();
        let y = Multivector::product_of_vectors(&s, &vs[..1]).unwrap();
        prop_assert_eq!((&x * &y).norm_n().unwrap(), x.norm_n().unwrap() * y.norm_n().unwrap());
        let prod: Rational = vs.iter().map(|v| s.quadratic(v).unwrap()).product();
        prop_assert_eq!(x.norm_n().unwrap(), prod);
    }

    #[test]
    fn cartan_dieudonne_recomposes((s, vs) in space_with_mirrors()) {
        let sigma = s.compose_reflections(&vs).unwrap();
        let cd = s.cartan_dieudonne(&sigma).unwrap();
        prop_assert!(cd.len() <= 2 * s.dim());
        prop_assert_eq!(s.compose_reflections(&cd).unwrap(), sigma.clone());
        prop_assert_eq!(s.spinor_norm(&sigma).unwrap(), s.mirror_class(&vs).unwrap());
    }

    #[test]
    fn symmetrization_is_permutation_invariant(idx in 0usize..8, perm_seed in any::<u64>()) {
        let types = [(Family::A, 4), (Family::B, 4), (Family::C, 4), (Family::D, 5), (Family::E, 6), (Family::F, 4), (Family::G, 2), (Family::B, 3)];
        let (f, n) = types[idx];
        let c = FiniteType::new(f, n).unwrap().cartan_matrix();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = perm_seed;
        for i in (1..n).rev() {
            perm.swap(i, (s % (i as u64 + 1)) as usize);
            s /= i as u64 + 1;
        }
        let d = symmetrize(&c).unwrap().d;
        let pc: CartanMatrix = c.permuted(&perm);
        let pd = symmetrize(&pc).unwrap().d;
        // node i of the permuted matrix is node perm[i] of the original
        let expect: Vec<i64> = perm.iter().map(|&p| d[p]).collect();
        prop_assert_eq!(pd, expect);
        prop_assert!(symmetrize(&pc).unwrap().b_matrix().is_symmetric());
    }
}
