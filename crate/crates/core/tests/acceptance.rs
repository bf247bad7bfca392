//! Acceptance gate: one PASS/FAIL line per criterion. All comparisons are
//! exact; the only tolerances are the wall-clock limits printed with each
//! line.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use cliffweyl_core::cartan::{Family, FiniteType};
use cliffweyl_core::clifford::Multivector;
use cliffweyl_core::exactform::{Isometry, QVector, QuadSpace};
use cliffweyl_core::matrix::RatMatrix;
use cliffweyl_core::outer::spinor_table;
use cliffweyl_core::paravector::{dagger, worked_example_a1, worked_example_a2, HermitianElement, ParaSpace, Paravector};
use cliffweyl_core::rational::one;
use cliffweyl_core::Rational;
use cliffweyl_core::vahlen::{enumerate_weyl, generator_matrices, CliffMat2, Frame, Verdict, WeylLimits};
use num_traits::Zero;
use rand::{seq::SliceRandom, Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ft(f: Family, n: usize) -> FiniteType {
    FiniteType::new(f, n).expect("valid type")
}

fn simply_laced() -> Vec<FiniteType> {
    let mut v: Vec<FiniteType> = (1..=7).map(|n| ft(Family::A, n)).collect();
    v.extend((4..=8).map(|n| ft(Family::D, n)));
    v.extend((6..=8).map(|n| ft(Family::E, n)));
    v
}

fn rank_at_most_six() -> Vec<FiniteType> {
    let mut v: Vec<FiniteType> = (1..=6).map(|n| ft(Family::A, n)).collect();
    v.extend((2..=6).map(|n| ft(Family::B, n)));
    v.extend((3..=6).map(|n| ft(Family::C, n)));
    v.extend((4..=6).map(|n| ft(Family::D, n)));
    v.extend([ft(Family::E, 6), ft(Family::F, 4), ft(Family::G, 2)]);
    v
}

fn c1_spinor_table() -> Outcome {
    let pairs: [(FiniteType, i64, i64); 11] = [
        (ft(Family::A, 2), 3, -1),
        (ft(Family::A, 3), 2, -1),
        (ft(Family::A, 4), 5, -1),
        (ft(Family::A, 5), 3, -1),
        (ft(Family::A, 6), 7, -1),
        (ft(Family::A, 7), 1, -1),
        (ft(Family::D, 5), 2, -1),
        (ft(Family::D, 6), 2, -2),
        (ft(Family::D, 7), 2, -1),
        (ft(Family::D, 8), 2, -2),
        (ft(Family::E, 6), 3, -1),
    ];
    let cls = |c: &cliffweyl_core::exactform::SquarefreeClass| c.to_i64().expect("small class");
    for (t, a, ma) in pairs {
        let tab = spinor_table(t).map_err(|e| format!("{t}: {e}"))?;
        ensure(tab.entries.len() == 1, || format!("{}: {} outer automorphisms", tab.name, tab.entries.len()))?;
        let e = &tab.entries[0];
        let got = (cls(&e.spinor_a), cls(&e.spinor_minus_a));
        ensure(got == (a, ma), || format!("{} {}: got {got:?}, want ({a}, {ma})", tab.name, e.cycles))?;
    }
    let d4 = spinor_table(ft(Family::D, 4)).map_err(|e| e.to_string())?;
    ensure(d4.entries.len() == 5, || format!("D4++: {} outer automorphisms", d4.entries.len()))?;
    for e in &d4.entries {
        let cycle_len = e.automorphism.perm.iter().enumerate().filter(|(i, p)| *i != **p).count();
        let want = if cycle_len == 2 { 2 } else { 1 };
        ensure(cls(&e.spinor_a) == want, || format!("D4++ {}: got {}", e.cycles, e.spinor_a))?;
    }
    ensure(cls(&d4.spinor_minus_id) == -1, || format!("D4++ -id: {}", d4.spinor_minus_id))?;
    for t in [ft(Family::E, 7), ft(Family::E, 8), ft(Family::A, 1)] {
        let tab = spinor_table(t).map_err(|e| e.to_string())?;
        ensure(tab.entries.is_empty(), || format!("{} has outer automorphisms", tab.name))?;
    }
    Ok("11 single-automorphism types, D4++ (5 automorphisms), 3 rigid types".into())
}

fn c2_golden() -> Outcome {
    let b3 = ft(Family::B, 3).double_extend();
    let golden = [
        vec![2, -1, 0, 0, 0],
        vec![-1, 2, 0, -1, 0],
        vec![0, 0, 2, -1, 0],
        vec![0, -1, -1, 2, -1],
        vec![0, 0, 0, -2, 2],
    ];
    ensure(b3.cartan.entries() == golden, || format!("B3++ = {:?}", b3.cartan.entries()))?;
    type Row = (FiniteType, Box<dyn Fn(usize) -> Vec<i64>>, i64);
    let rows: Vec<Row> = vec![
        (ft(Family::A, 5), Box::new(|n| vec![1; n]), 2),
        (ft(Family::B, 5), Box::new(|n| (0..n).map(|i| if i == 0 { 1 } else { 2 }).collect()), 4),
        (ft(Family::C, 5), Box::new(|n| (0..n).map(|i| if i + 1 == n { 1 } else { 2 }).collect()), 4),
        (ft(Family::D, 6), Box::new(|n| (0..n).map(|i| if i == 0 || i + 2 >= n { 1 } else { 2 }).collect()), 2),
        (ft(Family::G, 2), Box::new(|_| vec![2, 3]), 6),
        (ft(Family::F, 4), Box::new(|_| vec![2, 3, 4, 2]), 4),
        (ft(Family::E, 6), Box::new(|_| vec![1, 2, 3, 2, 1, 2]), 2),
        (ft(Family::E, 7), Box::new(|_| vec![2, 3, 4, 3, 2, 1, 2]), 2),
        (ft(Family::E, 8), Box::new(|_| vec![2, 3, 4, 5, 6, 4, 2, 3]), 2),
    ];
    for (t, theta, m) in &rows {
        let want = (theta(t.rank()), *m);
        ensure(t.highest_root() == want, || format!("{t}: got {:?}, want {want:?}", t.highest_root()))?;
    }
    // the parametric rows at every rank from their lower bound to 8, against
    // reflection closure
    for (f, lo) in [(Family::A, 1), (Family::B, 2), (Family::C, 3), (Family::D, 4)] {
        for n in lo..=8 {
            let t = ft(f, n);
            let (theta, _) = t.highest_root();
            let oracle = highest_root_by_closure(&t.cartan_matrix());
            ensure(theta == oracle, || format!("{t}: table {theta:?}, closure {oracle:?}"))?;
        }
    }
    Ok("B3++ matrix and nine (θ, m) rows; A/B/C/D up to rank 8 agree with root closure".into())
}

fn c3_reflections() -> Outcome {
    let mut n = 0;
    for t in simply_laced() {
        let ext = t.double_extend();
        for (i, x) in generator_matrices(&ext).iter().enumerate() {
            let eta = x.eta().map_err(|e| format!("{}: X_{}: {e}", ext.name(), ext.cartan.labels()[i]))?;
            ensure(eta == ext.simple_reflection(i), || format!("{}: η(X_{}) ≠ r", ext.name(), ext.cartan.labels()[i]))?;
            n += 1;
        }
    }
    Ok(format!("{n} generators over 15 types"))
}

fn c4_phi(rng: &mut ChaCha8Rng) -> Outcome {
    let samples = 200;
    let types = rank_at_most_six();
    for t in &types {
        let ext = t.double_extend();
        let frame = Frame::for_extension(&ext);
        let w = frame.w().clone();
        for _ in 0..samples {
            let x = random_multivector(rng, &w, 3);
            let y = random_multivector(rng, &w, 3);
            let fx = frame.phi(&x).map_err(|e| e.to_string())?;
            let fy = frame.phi(&y).map_err(|e| e.to_string())?;
            let fxy = frame.phi(&(&x * &y)).map_err(|e| e.to_string())?;
            ensure(fxy == fx.multiply(&fy).map_err(|e| e.to_string())?, || format!("{t}++: φ(xy) ≠ φ(x)φ(y) for {x:?}, {y:?}"))?;
            ensure(frame.phi(&x.grade_involution()).map_err(|e| e.to_string())? == fx.alpha(), || format!("{t}++: φ(x′) ≠ α(φ(x)) for {x:?}"))?;
            ensure(frame.phi(&x.reversion()).map_err(|e| e.to_string())? == fx.beta(), || format!("{t}++: φ(x*) ≠ β(φ(x)) for {x:?}"))?;
            ensure(frame.phi(&x.conjugation()).map_err(|e| e.to_string())? == fx.gamma(), || format!("{t}++: φ(x̄) ≠ γ(φ(x)) for {x:?}"))?;
            let v = random_vector(rng, w.dim());
            let fv = frame.phi_vector(&v).map_err(|e| e.to_string())?;
            ensure(fv == frame.phi(&Multivector::vector(&w, &v).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?, || format!("{t}++: φ_vector disagrees with φ on {v:?}"))?;
            let sq = fv.multiply(&fv).map_err(|e| e.to_string())?;
            let q = w.quadratic(&v).map_err(|e| e.to_string())?;
            ensure(sq.is_scalar_matrix(&-q), || format!("{t}++: φ(w)² ≠ −q(w)I for {v:?}"))?;
        }
    }
    Ok(format!("{} types of rank ≤ 6, {samples} samples each", types.len()))
}

fn c5_closure(rng: &mut ChaCha8Rng) -> Outcome {
    let words = 100;
    for t in [ft(Family::A, 1), ft(Family::A, 2), ft(Family::D, 4)] {
        let ext = t.double_extend();
        let xs = generator_matrices(&ext);
        for _ in 0..words {
            let len = rng.gen_range(0..=6);
            let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..xs.len())).collect();
            let mut a = CliffMat2::identity(xs[0].space());
            for &i in &word {
                a = a.multiply(&xs[i]).map_err(|e| e.to_string())?;
            }
            let v = a.is_vahlen_order().map_err(|e| e.to_string())?;
            let lambda = match &v {
                Verdict::Member { lambda } if *lambda == one() || *lambda == -one() => lambda.clone(),
                _ => return Err(format!("{}++ word {word:?}: {v:?}", t)),
            };
            let ga = a.gamma().multiply(&a).map_err(|e| e.to_string())?;
            ensure(ga.is_scalar_matrix(&lambda), || format!("{t}++ word {word:?}: γ(A)A ≠ λI"))?;
        }
    }
    Ok(format!("{words} words per type in A1++, A2++, D4++"))
}

fn permutation_matrix(perm: &[usize]) -> RatMatrix {
    let n = perm.len();
    RatMatrix::from_fn(n, n, |r, c| if perm[c] == r { one() } else { Rational::zero() })
}

fn c6_cartan_dieudonne(rng: &mut ChaCha8Rng) -> Outcome {
    let cases = 200;
    for case in 0..cases {
        let n = 2 + case % 5;
        let s = random_space(rng, n, case % 2 == 1);
        let k = rng.gen_range(1..=n + 2);
        let mirrors: Vec<QVector> = (0..k).map(|_| random_nonisotropic(rng, &s)).collect();
        let sigma = s.compose_reflections(&mirrors).map_err(|e| e.to_string())?;
        let want = s.mirror_class(&mirrors).map_err(|e| e.to_string())?;
        let cd = s.cartan_dieudonne(&sigma).map_err(|e| format!("case {case}: {e}"))?;
        ensure(cd.len() <= 2 * n, || format!("case {case}: {} mirrors in dimension {n}", cd.len()))?;
        ensure(s.compose_reflections(&cd).map_err(|e| e.to_string())? == sigma, || format!("case {case}: recomposition differs"))?;
        let got = s.spinor_norm(&sigma).map_err(|e| e.to_string())?;
        ensure(got == want, || format!("case {case}: spinor norm {got}, mirrors give {want}"))?;

        let mut basis = s.orthogonal_basis().map_err(|e| e.to_string())?;
        basis.shuffle(rng);
        let alt = s.cartan_dieudonne_with_basis(&sigma, &basis).map_err(|e| e.to_string())?;
        ensure(s.compose_reflections(&alt).map_err(|e| e.to_string())? == sigma, || format!("case {case}: permuted-basis recomposition differs"))?;
        let alt_class = s.mirror_class(&alt).map_err(|e| e.to_string())?;
        ensure(alt_class == want, || format!("case {case}: permuted orthogonal basis gives {alt_class}"))?;

        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        let p = permutation_matrix(&perm);
        let pinv = p.transpose();
        let s2 = QuadSpace::new(&(&pinv * s.gram()) * &p).map_err(|e| e.to_string())?;
        let sigma2 = Isometry::new(&s2, &(&pinv * sigma.matrix()) * &p).map_err(|e| e.to_string())?;
        let got2 = s2.spinor_norm(&sigma2).map_err(|e| e.to_string())?;
        ensure(got2 == want, || format!("case {case}: permuted coordinates give {got2}"))?;
    }
    Ok(format!("{cases} products in dimensions 2–6"))
}

fn c7_rewriting(rng: &mut ChaCha8Rng) -> Outcome {
    let pairs = 200;
    let mut spaces = 0;
    for n in 1..=6 {
        for general in [false, true] {
            let s = random_space(rng, n, general);
            spaces += 1;
            for _ in 0..pairs {
                let x = random_multivector(rng, &s, 4);
                let y = random_multivector(rng, &s, 4);
                let fast = to_words(&(&x * &y));
                let slow = rewrite_product(s.gram(), &to_words(&x), &to_words(&y));
                ensure(fast == slow, || format!("{s:?}: {x:?} · {y:?}"))?;
            }
        }
    }
    Ok(format!("{spaces} spaces, {pairs} pairs each"))
}

fn c8_enumeration() -> Outcome {
    let max_len = 6;
    let ext = ft(Family::A, 1).double_extend();
    let xs = generator_matrices(&ext);
    let elems = enumerate_weyl(&ext, max_len, WeylLimits::default()).map_err(|e| e.to_string())?;
    let refl: Vec<Isometry> = (0..xs.len()).map(|i| ext.simple_reflection(i)).collect();

    // every reflection word and its Vahlen word, without deduplication
    let mut direct = BTreeSet::new();
    let mut via_eta = BTreeSet::new();
    let mut frontier: Vec<(Vec<usize>, Isometry, CliffMat2)> =
        vec![(vec![], Isometry::identity(ext.space.dim()), CliffMat2::identity(xs[0].space()))];
    let mut words = 0;
    for len in 0..=max_len {
        let mut next = Vec::new();
        for (w, iso, m) in &frontier {
            words += 1;
            direct.insert(iso.matrix().clone());
            let eta = m.eta().map_err(|e| format!("word {w:?}: {e}"))?;
            via_eta.insert(eta.matrix().clone());
            if len < max_len {
                for s in 0..xs.len() {
                    let mut w2 = w.clone();
                    w2.push(s);
                    next.push((w2, iso.compose(&refl[s]), m.multiply(&xs[s]).map_err(|e| e.to_string())?));
                }
            }
        }
        frontier = next;
    }
    ensure(direct == via_eta, || "reflection words and η images give different sets".into())?;
    let enumerated: BTreeSet<RatMatrix> = elems.iter().map(|e| e.isometry.matrix().clone()).collect();
    ensure(enumerated == direct, || format!("enumeration has {} elements, direct words {}", enumerated.len(), direct.len()))?;
    for e in &elems {
        ensure(e.vahlen.eta().map_err(|x| x.to_string())? == e.isometry, || format!("η mismatch at {:?}", e.word))?;
        let v = e.vahlen.is_vahlen_order().map_err(|x| x.to_string())?;
        ensure(v == Verdict::Member { lambda: one() }, || format!("word {:?}: order-plus check gives {v:?}", e.word))?;
    }
    let oracle = matrix_closure_counts(&root_lattice_reflections(&ext.cartan), max_len);
    let ours: Vec<usize> = (0..=max_len).map(|l| elems.iter().filter(|e| e.word.len() <= l).count()).collect();
    ensure(ours == oracle, || format!("ball sizes {ours:?}, oracle {oracle:?}"))?;
    Ok(format!("{} elements from {words} words; ball sizes {ours:?}", elems.len()))
}

fn random_para_space(rng: &mut ChaCha8Rng, k: usize, general: bool) -> ParaSpace {
    ParaSpace::new(random_space(rng, k, general)).expect("nonsingular")
}

fn c9_paravector(rng: &mut ChaCha8Rng) -> Outcome {
    let rounds = 30;
    let err = |e: cliffweyl_core::Error| e.to_string();
    let mut checks = BTreeMap::<&str, usize>::new();
    for round in 0..rounds {
        let p = random_para_space(rng, 1 + round % 3, round % 2 == 1);
        let para = p.para_space().clone();
        let x1 = random_nonisotropic(rng, &para);
        let x2 = random_nonisotropic(rng, &para);
        let y = random_vector(rng, para.dim());
        let px1 = Paravector::from_coords(&x1);
        let px2 = Paravector::from_coords(&x2);
        let m1 = p.embed(&px1).map_err(err)?;
        let m2 = p.embed(&px2).map_err(err)?;

        let g = p.rho_para(&m1).map_err(err)?;
        let expect = -&para.reflect(&x1, &Paravector::from_coords(&y).conjugate().coords()).map_err(err)?;
        ensure(g.apply(&y) == expect, || format!("ρ_para(x)(y) ≠ −r_x(ȳ) for x = {x1:?}"))?;
        *checks.entry("rho_para").or_default() += 1;

        let prod = &m1 * &m2.conjugation();
        let r12 = para.reflection(&x1).map_err(err)?.compose(&para.reflection(&x2).map_err(err)?);
        ensure(p.rho_para(&prod).map_err(err)? == r12, || "ρ_para(x₁x̄₂) ≠ r_{x₁}r_{x₂}".into())?;
        *checks.entry("rho_para_pair").or_default() += 1;

        // ξ: multiplicative, even, e·ξ(x′) = ξ(x)·e, and Σ∘ρ_para = ρ∘ξ
        let a = random_multivector(rng, p.u(), 3);
        let b = random_multivector(rng, p.u(), 3);
        let xa = p.xi(&a).map_err(err)?;
        ensure(p.xi(&(&a * &b)).map_err(err)? == &xa * &p.xi(&b).map_err(err)?, || "ξ not multiplicative".into())?;
        ensure(xa.is_even(), || "ξ image not even".into())?;
        let e = Multivector::generator(p.v(), p.u().dim()).map_err(err)?;
        ensure(&e * &p.xi(&a.grade_involution()).map_err(err)? == &xa * &e, || "e·ξ(x′) ≠ ξ(x)·e".into())?;
        let x3 = Paravector::from_coords(&random_nonisotropic(rng, &para));
        let word = &prod * &p.embed(&x3).map_err(err)?;
        ensure(p.big_sigma(&p.rho_para(&word).map_err(err)?).map_err(err)? == p.xi(&word).map_err(err)?.rho().map_err(err)?, || "Σ∘ρ_para ≠ ρ∘ξ".into())?;
        let yv = Paravector::from_coords(&y);
        let lhs = &(&p.xi(&word).map_err(err)? * &Multivector::vector(p.v(), &p.sigma(&yv)).map_err(err)?) * &p.xi(&word).map_err(err)?.inverse().map_err(err)?;
        let rhs_para = p.rho_para(&word).map_err(err)?.apply(&y);
        ensure(lhs.as_vector() == Some(p.sigma(&Paravector::from_coords(&rhs_para))), || "ξ(x)σ(y)ξ(x)⁻¹ ≠ σ(xy(x′)⁻¹)".into())?;
        *checks.entry("xi").or_default() += 1;

        // Ξ on products of H₂(U_para) elements
        let h2 = p.h2_space();
        let hx: Vec<QVector> = (0..3).map(|_| random_nonisotropic(rng, &h2)).collect();
        let hm: Vec<CliffMat2> = hx.iter().map(|c| p.h2_matrix(c)).collect::<Result<_, _>>().map_err(err)?;
        let a2 = hm[0].multiply(&hm[1]).map_err(err)?;
        let a3 = a2.multiply(&hm[2]).map_err(err)?;
        for m in [&hm[0], &a2, &a3] {
            ensure(m.is_vahlen_para().is_member(), || format!("{m:?} not in 𝒱(U_para)"))?;
            let xm = p.big_xi(m).map_err(err)?;
            ensure(xm.is_vahlen().is_member() && xm.is_even(), || "Ξ(A) not an even Vahlen matrix".into())?;
            ensure(p.big_sigma_h2(&p.eta_para(m).map_err(err)?).map_err(err)? == xm.eta().map_err(err)?, || "Σ∘η_para ≠ η∘Ξ".into())?;
        }
        ensure(p.big_xi(&a3).map_err(err)? == p.big_xi(&a2).map_err(err)?.multiply(&p.big_xi(&hm[2]).map_err(err)?).map_err(err)?, || "Ξ not multiplicative".into())?;
        let yh = random_vector(rng, h2.dim());
        let expect = -&h2.reflect(&hx[0], &p.gamma_coords(&yh)).map_err(err)?;
        ensure(p.eta_para(&hm[0]).map_err(err)?.apply(&yh) == expect, || "η(X)(Y) ≠ −r_X(γ(Y))".into())?;
        *checks.entry("big_xi").or_default() += 1;

        // Hermitian picture
        let e2 = CliffMat2::swap(p.u());
        ensure(e2.is_vahlen_para().is_member(), || "E₂ ∉ 𝒱(U_para)".into())?;
        ensure(dagger(&a3).map_err(err)? == e2.multiply(&a3.sharp().map_err(err)?).map_err(err)?.multiply(&e2).map_err(err)?, || "A^† ≠ E₂A^♯E₂".into())?;
        let xh = p.h2_matrix(&yh).map_err(err)?;
        let moved = a3.multiply(&xh).map_err(err)?.multiply(&a3.sharp().map_err(err)?).map_err(err)?;
        let herm = p.hermitian_from_matrix(&p.psi(&xh).map_err(err)?).ok_or("ψ(X) not Hermitian")?;
        let t = p.hermitian_transport(&a3, &herm).map_err(err)?;
        ensure(p.hermitian_matrix(&t).map_err(err)? == p.psi(&moved).map_err(err)?, || "ψ does not intertwine the actions".into())?;
        let g2 = p.h2_matrix(&p.gamma_coords(&hx[1])).map_err(err)?;
        let pair = hm[0].multiply(&g2).map_err(err)?;
        let r = h2.reflection(&hx[0]).map_err(err)?.compose(&h2.reflection(&hx[1]).map_err(err)?);
        let out: HermitianElement = p.hermitian_transport(&pair, &herm).map_err(err)?;
        let mut oc = out.x.coords().0;
        oc.push(out.l1);
        oc.push(out.l2);
        ensure(QVector(oc) == r.apply(&yh), || "η̃(X₁γ(X₂)) ≠ r_{ψX₁}r_{ψX₂}".into())?;
        *checks.entry("hermitian").or_default() += 1;
    }
    let a1 = worked_example_a1(&ft(Family::A, 1).double_extend()).map_err(err)?;
    let a2 = worked_example_a2(&ft(Family::A, 2).double_extend()).map_err(err)?;
    for c in a1.checks.iter().chain(&a2.checks) {
        ensure(c.pass, || format!("worked example check {} failed: {}", c.name, c.witness))?;
    }
    Ok(format!("{checks:?} rounds; A1++ {} checks, A2++ {} checks", a1.checks.len(), a2.checks.len()))
}

fn main() -> ExitCode {
    let mut rng = ChaCha8Rng::seed_from_u64(0x00C1_1FF0);
    let mut failed = 0;
    let mut run = |id: u8, name: &str, limit: Option<Duration>, f: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let res = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let took = start.elapsed();
        let res = match (res, limit) {
            (Ok(_), Some(l)) if took > l => Err(format!("took {:.1} s, limit {} s", took.as_secs_f64(), l.as_secs())),
            (r, _) => r,
        };
        let timing = match limit {
            Some(l) => format!("{:.2} s, limit {} s", took.as_secs_f64(), l.as_secs()),
            None => format!("{:.2} s", took.as_secs_f64()),
        };
        match res {
            Ok(detail) => println!("PASS {id} {name}: {detail} ({timing}; exact)"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {id} {name}: {detail} ({timing})");
            }
        }
    };
    run(1, "spinor norms of outer automorphisms", Some(Duration::from_secs(30)), &mut c1_spinor_table);
    run(2, "golden Cartan matrix and highest roots", None, &mut c2_golden);
    run(3, "η(X_i) = r_{X_i}", Some(Duration::from_secs(120)), &mut c3_reflections);
    let mut r4 = ChaCha8Rng::seed_from_u64(4);
    run(4, "φ isomorphism suite", None, &mut || c4_phi(&mut r4));
    let mut r5 = ChaCha8Rng::seed_from_u64(5);
    run(5, "integral Vahlen closure", None, &mut || c5_closure(&mut r5));
    run(6, "Cartan–Dieudonné and spinor norms", None, &mut || c6_cartan_dieudonne(&mut rng));
    let mut r7 = ChaCha8Rng::seed_from_u64(7);
    run(7, "blade product against rewriting", None, &mut || c7_rewriting(&mut r7));
    run(8, "A1++ enumeration cross-check", None, &mut c8_enumeration);
    let mut r9 = ChaCha8Rng::seed_from_u64(9);
    run(9, "paravector bridge", None, &mut || c9_paravector(&mut r9));
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
