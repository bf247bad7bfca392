//! Paravectors `U_para = F ⊥ U` inside `C(U)`, their Vahlen matrices, and
//! the bridge to the even Clifford algebra of `V = U ⊥ L`, `L = Fe`,
//! `q(e) = 1`.
//!
//! `e` is always the last generator of `V`. Coordinates on `U_para` put the
//! scalar slot first; coordinates on `H₂(U_para)` are
//! `(scalar, u_1, …, u_k, λ₁, λ₂)`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::cartan::{ExtensionSpec, Family};
use crate::clifford::{Blade, Multivector};
use crate::error::{Error, Result};
use crate::exactform::{Isometry, QVector, QuadSpace};
use crate::matrix::RatMatrix;
use crate::rational::{self, Rational};
use crate::vahlen::{enumerate_weyl, CliffMat2, Frame, Verdict, WeylLimits};

/// `λ + u` with `λ ∈ F`, `u ∈ U`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Paravector {
    pub scalar: Rational,
    pub vec: QVector,
}

impl Paravector {
    /// From `U_para` coordinates `(λ, u_1, …, u_k)`.
    pub fn from_coords(c: &QVector) -> Self {
        Paravector {
            scalar: c.0[0].clone(),
            vec: QVector(c.0[1..].to_vec()),
        }
    }

    pub fn coords(&self) -> QVector {
        let mut c = vec![self.scalar.clone()];
        c.extend(self.vec.0.iter().cloned());
        QVector(c)
    }

    /// `x̄ = λ − u`.
    pub fn conjugate(&self) -> Self {
        Paravector {
            scalar: self.scalar.clone(),
            vec: -&self.vec,
        }
    }
}

/// `X = (λ₁, x; x̄, λ₂)` with `Q(X) = q_para(x) − λ₁λ₂`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HermitianElement {
    pub l1: Rational,
    pub l2: Rational,
    pub x: Paravector,
}

/// The data attached to a nonsingular `U`.
#[derive(Clone, Debug)]
pub struct ParaSpace {
    u: Arc<QuadSpace>,
    para: QuadSpace,
    v: Arc<QuadSpace>,
}

impl ParaSpace {
    pub fn new(u: Arc<QuadSpace>) -> Result<Self> {
        if !u.is_nonsingular() {
            return Err(Error::SingularSpace);
        }
        let one = QuadSpace::diagonal(&[Rational::one()]);
        let para = one.orthogonal_sum(&u);
        let v = Arc::new(u.orthogonal_sum(&one));
        Ok(ParaSpace { u, para, v })
    }

    pub fn u(&self) -> &Arc<QuadSpace> {
        &self.u
    }

    /// `U_para` with `S_para(λ₁ + u₁, λ₂ + u₂) = λ₁λ₂ + S(u₁, u₂)`.
    pub fn para_space(&self) -> &QuadSpace {
        &self.para
    }

    /// `V = U ⊥ L`.
    pub fn v(&self) -> &Arc<QuadSpace> {
        &self.v
    }

    fn k(&self) -> usize {
        self.u.dim()
    }

    pub fn embed(&self, x: &Paravector) -> Result<Multivector> {
        Multivector::vector(&self.u, &x.vec)?.try_add(&Multivector::scalar(&self.u, x.scalar.clone()))
    }

    pub fn as_paravector(&self, x: &Multivector) -> Option<Paravector> {
        let s = x.scalar_part();
        let rest = x.try_add(&Multivector::scalar(x.space(), -s.clone())).ok()?;
        Some(Paravector {
            scalar: s,
            vec: rest.as_vector()?,
        })
    }

    /// `q_para(x) = x·x̄`.
    pub fn q_para(&self, x: &Paravector) -> Result<Rational> {
        self.para.quadratic(&x.coords())
    }

    /// `ρ_para(x): y ↦ x·y·(x′)⁻¹` on `U_para`; fails when the action leaves
    /// the paravectors.
    pub fn rho_para(&self, x: &Multivector) -> Result<Isometry> {
        let tw = x.grade_involution().inverse()?;
        let mut columns = Vec::with_capacity(self.k() + 1);
        for i in 0..=self.k() {
            let y = self.embed(&Paravector::from_coords(&QVector::basis(self.k() + 1, i)))?;
            let img = x.multiply(&y)?.multiply(&tw)?;
            let p = self.as_paravector(&img).ok_or(Error::NotInCliffordGroup)?;
            columns.push(p.coords().0);
        }
        Isometry::new(&self.para, RatMatrix::from_columns(self.k() + 1, &columns))
    }

    /// `ξ(x) = x₀ + e·x₁`, an isomorphism `C(U) → C⁰(V)`.
    pub fn xi(&self, x: &Multivector) -> Result<Multivector> {
        let lift = self.lift(x)?;
        let e = Multivector::generator(&self.v, self.k())?;
        lift.even_part().try_add(&e.multiply(&lift.odd_part())?)
    }

    /// The inclusion `C(U) ⊂ C(V)`.
    pub fn lift(&self, x: &Multivector) -> Result<Multivector> {
        if x.space().as_ref() != self.u.as_ref() {
            return Err(Error::SpaceMismatch);
        }
        Multivector::from_terms(&self.v, x.terms().map(|(b, c)| (*b, c.clone())))
    }

    /// `σ(λ + u) = λe + u`.
    pub fn sigma(&self, x: &Paravector) -> QVector {
        let mut c = x.vec.0.clone();
        c.push(x.scalar.clone());
        QVector(c)
    }

    /// `σ` as a matrix from `U_para` coordinates to `V` coordinates.
    fn sigma_matrix(&self, extra: usize) -> RatMatrix {
        let k = self.k();
        let n = k + 1 + extra;
        // source slot 0 (scalar) goes to target slot k (e); u_i shifts down
        RatMatrix::from_fn(n, n, |r, c| {
            let target = if c == 0 {
                k
            } else if c <= k {
                c - 1
            } else {
                c
            };
            if r == target {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    /// `Σ(g) = σ∘g∘σ⁻¹`, from `O(U_para)` to `O(V)`.
    pub fn big_sigma(&self, g: &Isometry) -> Result<Isometry> {
        let s = self.sigma_matrix(0);
        Isometry::new(&self.v, &(&s * g.matrix()) * &s.inverse()?)
    }

    /// `Ξ(A) = (g₁a + g₂a′, g₁b − g₂b′; g₂c − g₁c′, g₂d + g₁d′)` with
    /// `g₁ = (1+e)/2`, `g₂ = (1−e)/2`.
    pub fn big_xi(&self, m: &CliffMat2) -> Result<CliffMat2> {
        let e = Multivector::generator(&self.v, self.k())?;
        let one = Multivector::one(&self.v);
        let half = rational::rat(1, 2);
        let g1 = one.try_add(&e)?.scale(&half);
        let g2 = one.try_add(&-&e)?.scale(&half);
        let l = |x: &Multivector| self.lift(x);
        let comb = |p: &Multivector, x: &Multivector, s: i64, q: &Multivector| -> Result<Multivector> {
            let y = l(x)?;
            let t = q.multiply(&y.grade_involution())?;
            p.multiply(&y)?.try_add(&t.scale(&rational::int(s)))
        };
        CliffMat2::new(comb(&g1, &m.a, 1, &g2)?, comb(&g1, &m.b, -1, &g2)?, comb(&g2, &m.c, -1, &g1)?, comb(&g2, &m.d, 1, &g1)?)
    }

    /// `(x, λ₁; λ₂, x̄)` from `H₂(U_para)` coordinates.
    pub fn h2_matrix(&self, c: &QVector) -> Result<CliffMat2> {
        let k = self.k();
        let x = Paravector::from_coords(&QVector(c.0[..=k].to_vec()));
        let xm = self.embed(&x)?;
        CliffMat2::new(
            xm.clone(),
            Multivector::scalar(&self.u, c.0[k + 1].clone()),
            Multivector::scalar(&self.u, c.0[k + 2].clone()),
            xm.conjugation(),
        )
    }

    pub fn h2_coords(&self, m: &CliffMat2) -> Option<QVector> {
        let x = self.as_paravector(&m.a)?;
        if m.d != m.a.conjugation() {
            return None;
        }
        let mut c = x.coords().0;
        c.push(m.b.as_scalar()?);
        c.push(m.c.as_scalar()?);
        Some(QVector(c))
    }

    /// `W_para = F ⊥ U ⊥ P`, the geometry of `H₂(U_para)`.
    pub fn h2_space(&self) -> QuadSpace {
        self.para.orthogonal_sum(&QuadSpace::hyperbolic_plane())
    }

    /// `η(A): X ↦ A·X·A^♯` on `H₂(U_para)`.
    pub fn eta_para(&self, m: &CliffMat2) -> Result<Isometry> {
        if let Verdict::Fails { condition } = m.is_vahlen_para() {
            return Err(Error::NotVahlen(condition));
        }
        let n = self.k() + 3;
        let sharp = m.sharp()?;
        let mut columns = Vec::with_capacity(n);
        for i in 0..n {
            let x = self.h2_matrix(&QVector::basis(n, i))?;
            let y = m.multiply(&x)?.multiply(&sharp)?;
            columns.push(self.h2_coords(&y).ok_or_else(|| Error::Internal("η image leaves H₂(U_para)".into()))?.0);
        }
        Isometry::new(&self.h2_space(), RatMatrix::from_columns(n, &columns))
    }

    /// `Σ` on `H₂`: conjugation by the isometry `H₂(U_para) → H₂(V)` induced
    /// by `σ`.
    pub fn big_sigma_h2(&self, g: &Isometry) -> Result<Isometry> {
        let s = self.sigma_matrix(2);
        let w = crate::vahlen::h2_space(&self.v);
        Isometry::new(&w, &(&s * g.matrix()) * &s.inverse()?)
    }

    /// `γ(Y)` in `H₂(U_para)` coordinates: `(x̄, −λ₁; −λ₂, x)`.
    pub fn gamma_coords(&self, c: &QVector) -> QVector {
        let k = self.k();
        QVector(c.0.iter().enumerate().map(|(i, x)| if i == 0 { x.clone() } else { -x }).take(k + 3).collect())
    }

    /// `ψ(X) = X·E₂`.
    pub fn psi(&self, m: &CliffMat2) -> Result<CliffMat2> {
        m.multiply(&CliffMat2::swap(&self.u))
    }

    pub fn hermitian_matrix(&self, h: &HermitianElement) -> Result<CliffMat2> {
        let x = self.embed(&h.x)?;
        CliffMat2::new(
            Multivector::scalar(&self.u, h.l1.clone()),
            x.clone(),
            x.conjugation(),
            Multivector::scalar(&self.u, h.l2.clone()),
        )
    }

    pub fn hermitian_from_matrix(&self, m: &CliffMat2) -> Option<HermitianElement> {
        if m.c != m.b.conjugation() {
            return None;
        }
        Some(HermitianElement {
            l1: m.a.as_scalar()?,
            l2: m.d.as_scalar()?,
            x: self.as_paravector(&m.b)?,
        })
    }

    pub fn hermitian_q(&self, h: &HermitianElement) -> Result<Rational> {
        Ok(self.q_para(&h.x)? - &h.l1 * &h.l2)
    }

    /// `A ↦ A·X·A^†` on `H̃₂(U_para)`.
    pub fn hermitian_transport(&self, m: &CliffMat2, h: &HermitianElement) -> Result<HermitianElement> {
        if let Verdict::Fails { condition } = m.is_vahlen_para() {
            return Err(Error::NotVahlen(condition));
        }
        let x = self.hermitian_matrix(h)?;
        let y = m.multiply(&x)?.multiply(&dagger(m)?)?;
        self.hermitian_from_matrix(&y).ok_or_else(|| Error::Internal("transport leaves H̃₂(U_para)".into()))
    }
}

/// `A^† = (ā, c̄; b̄, d̄)/λ`.
pub fn dagger(m: &CliffMat2) -> Result<CliffMat2> {
    let l = match m.pseudo_determinant() {
        Some(l) if !l.is_zero() => l,
        _ => return Err(Error::NotVahlen(1)),
    };
    let s = Rational::one() / l;
    CliffMat2::new(
        m.a.conjugation().scale(&s),
        m.c.conjugation().scale(&s),
        m.b.conjugation().scale(&s),
        m.d.conjugation().scale(&s),
    )
}

/// One named check of a worked example.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub witness: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    fn push(&mut self, name: &str, pass: bool, witness: String) {
        self.checks.push(Check {
            name: name.to_string(),
            pass,
            witness,
        });
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn require(ext: &ExtensionSpec, family: Family, rank: usize) -> Result<()> {
    if ext.base.family() != family || ext.base.rank() != rank {
        return Err(Error::InvalidType {
            family: ext.base.family().letter(),
            rank: ext.base.rank(),
        });
    }
    Ok(())
}

fn int_matrix(u: &Arc<QuadSpace>, e: [[i64; 4]; 1]) -> CliffMat2 {
    let s = |x: i64| Multivector::scalar(u, rational::int(x));
    CliffMat2::new(s(e[0][0]), s(e[0][1]), s(e[0][2]), s(e[0][3])).expect("same space")
}

/// `A₁⁺⁺` with `U = 0`: `V^{1/2} = L`, `𝒱(U_para) = GL(2, ℚ)`. Checks that
/// `Ξ` sends the unimodular generators `S = (0, −1; 1, 0)` and
/// `T = (1, 1; 0, 1)` into `S𝒱⁺(𝒪)`, that their `η` images are even
/// elements of the Weyl group, and that `Ξ` is multiplicative on short words.
pub fn worked_example_a1(ext: &ExtensionSpec) -> Result<Report> {
    require(ext, Family::A, 1)?;
    let frame = Frame::for_extension(ext);
    let ps = ParaSpace::new(Arc::new(QuadSpace::diagonal(&[])))?;
    if ps.v().as_ref() != frame.v().as_ref() {
        return Err(Error::Internal("U ⊥ L differs from V^{1/2}".into()));
    }
    let u = ps.u().clone();
    let s = int_matrix(&u, [[0, -1, 1, 0]]);
    let t = int_matrix(&u, [[1, 1, 0, 1]]);
    let s_inv = int_matrix(&u, [[0, 1, -1, 0]]);
    let t_inv = int_matrix(&u, [[1, -1, 0, 1]]);
    let mut r = Report::default();

    let weyl = enumerate_weyl(ext, 6, WeylLimits::default())?;
    for (name, m) in [("S", &s), ("T", &t)] {
        let x = ps.big_xi(m)?;
        // Ξ lands in the even integral Vahlen group with λ = 1
        let v = x.is_vahlen_order()?;
        r.push(
            &format!("xi_{name}_in_sv_plus_order"),
            v == Verdict::Member { lambda: Rational::one() } && x.is_even(),
            format!("{x:?}"),
        );
        let eta = x.eta()?;
        let found = weyl.iter().find(|w| w.isometry == eta);
        r.push(
            &format!("eta_xi_{name}_even_weyl"),
            found.is_some_and(|w| w.word.len() % 2 == 0),
            match found {
                Some(w) => format!("word {:?}", w.word),
                None => "not found up to length 6".into(),
            },
        );
    }
    let e = Multivector::generator(ps.v(), 0)?;
    let zero = Multivector::zero(ps.v());
    let one = Multivector::one(ps.v());
    let expect_s = CliffMat2::new(zero.clone(), -&e, -&e, zero.clone())?;
    let expect_t = CliffMat2::new(one.clone(), e.clone(), zero, one)?;
    r.push("xi_S_explicit", ps.big_xi(&s)? == expect_s, format!("{expect_s:?}"));
    r.push("xi_T_explicit", ps.big_xi(&t)? == expect_t, format!("{expect_t:?}"));

    let letters = [&s, &t, &s_inv, &t_inv];
    let mut words: Vec<Vec<usize>> = vec![vec![]];
    let mut frontier = words.clone();
    for _ in 0..3 {
        frontier = frontier
            .iter()
            .flat_map(|w| (0..4).map(move |l| [w.as_slice(), &[l]].concat()))
            .collect();
        words.extend(frontier.iter().cloned());
    }
    let mut hom_ok = true;
    let mut witness = format!("{} words", words.len());
    for w in &words {
        let mut m = CliffMat2::identity(&u);
        let mut x = CliffMat2::identity(ps.v());
        for &l in w {
            m = m.multiply(letters[l])?;
            x = x.multiply(&ps.big_xi(letters[l])?)?;
        }
        if ps.big_xi(&m)? != x {
            hom_ok = false;
            witness = format!("word {w:?}");
            break;
        }
    }
    r.push("xi_multiplicative_on_words", hom_ok, witness);
    Ok(r)
}

/// `A₂⁺⁺`: the orthogonal basis `β₁ = α₁`, `β₂ = α₁ + 2α₂` of `V^{1/2}`
/// identifies `C(V^{1/2})` with the quaternions `i = β₁`, `j = β₂`,
/// `i² = −1`, `j² = −3`, and the order `ℤ[α₁, α₂]` with
/// `⟨1, i, (j − i)/2, (k + 1)/2⟩`.
pub fn worked_example_a2(ext: &ExtensionSpec) -> Result<Report> {
    require(ext, Family::A, 2)?;
    let frame = Frame::for_extension(ext);
    let v = frame.v().clone();
    let mut r = Report::default();
    let vecm = |c: [i64; 2]| Multivector::vector(&v, &QVector::from_ints(&c));
    let i = vecm([1, 0])?;
    let j = vecm([1, 2])?;
    let k = i.multiply(&j)?;
    let one = Multivector::one(&v);
    let half = rational::rat(1, 2);
    r.push("i_squared", (&i * &i) == Multivector::scalar(&v, rational::int(-1)), format!("{:?}", &i * &i));
    r.push("j_squared", (&j * &j) == Multivector::scalar(&v, rational::int(-3)), format!("{:?}", &j * &j));
    r.push("ij_anticommute", (&i * &j) == -&(&j * &i), format!("k = {k:?}"));

    let basis = [one.clone(), i.clone(), (&j - &i).scale(&half), (&k + &one).scale(&half)];
    let names = ["1", "i", "(j-i)/2", "(k+1)/2"];
    let mut closed = true;
    let mut witness = String::from("all products integral");
    for (x, nx) in basis.iter().zip(names) {
        for (y, ny) in basis.iter().zip(names) {
            if !(x * y).order_member()? {
                closed = false;
                witness = format!("{nx}·{ny}");
            }
        }
    }
    r.push("order_basis_closed_under_product", closed, witness);

    let mut inv_ok = true;
    let mut table = Vec::new();
    for (x, nx) in basis.iter().zip(names) {
        let imgs = [x.grade_involution(), x.reversion(), x.conjugation()];
        inv_ok &= imgs.iter().map(|y| y.order_member()).collect::<Result<Vec<_>>>()?.into_iter().all(|b| b);
        table.push(format!("{nx}: ′={:?} *={:?} ‾={:?}", imgs[0], imgs[1], imgs[2]));
    }
    r.push("order_basis_closed_under_involutions", inv_ok, table.join("; "));

    let star = basis[3].reversion();
    let expect = (&one - &k).scale(&half);
    r.push("star_of_(k+1)/2", star == expect, format!("{star:?}"));

    // ℤ-span equality: each quaternion basis element is in ℤ[α₁, α₂] and each
    // α-monomial has integral coordinates over the quaternion basis
    let monomials = [Blade::ONE, Blade::generator(0), Blade::generator(1), Blade::from_bits(0b11)];
    let cols: Vec<Vec<Rational>> = basis.iter().map(|x| monomials.iter().map(|&b| x.coefficient(b)).collect()).collect();
    let bmat = RatMatrix::from_columns(4, &cols);
    let inv = bmat.inverse()?;
    let forward = bmat.is_integral();
    let backward = inv.is_integral();
    r.push(
        "order_basis_equals_alpha_span",
        forward && backward,
        format!("change of basis {bmat:?}, inverse {inv:?}"),
    );

    // Ξ of SL(2, O₋₃) generators, carried to V^{1/2} by u ↦ β₂, e ↦ β₁
    let ps = ParaSpace::new(Arc::new(QuadSpace::diagonal(&[rational::int(3)])))?;
    let images = [QVector::from_ints(&[1, 2]), QVector::from_ints(&[1, 0])];
    let uu = ps.u().clone();
    let sc = |x: i64| Multivector::scalar(&uu, rational::int(x));
    let omega = sc(1).try_add(&Multivector::generator(&uu, 0)?)?.scale(&half);
    let gens = [
        ("S", CliffMat2::new(sc(0), sc(-1), sc(1), sc(0))?),
        ("T", CliffMat2::new(sc(1), sc(1), sc(0), sc(1))?),
        ("T_omega", CliffMat2::new(sc(1), omega, sc(0), sc(1))?),
    ];
    for (name, m) in gens {
        let x = ps.big_xi(&m)?;
        let carried = CliffMat2::new(
            x.a.transport(&v, &images)?,
            x.b.transport(&v, &images)?,
            x.c.transport(&v, &images)?,
            x.d.transport(&v, &images)?,
        )?;
        let verdict = carried.is_vahlen_order()?;
        r.push(
            &format!("xi_{name}_in_sv_plus_order"),
            verdict == Verdict::Member { lambda: Rational::one() } && carried.is_even(),
            format!("{carried:?}"),
        );
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::FiniteType;
    use crate::rational::int;

    fn ps(g: &[i64]) -> ParaSpace {
        ParaSpace::new(Arc::new(QuadSpace::diagonal(&g.iter().map(|&x| int(x)).collect::<Vec<_>>()))).unwrap()
    }

    fn pv(c: &[i64]) -> Paravector {
        Paravector::from_coords(&QVector::from_ints(c))
    }

    #[test]
    fn rho_para_of_scalars_is_identity() {
        let p = ps(&[2, 3]);
        assert!(p.rho_para(&Multivector::scalar(p.u(), int(5))).unwrap().is_identity());
        let one = p.embed(&pv(&[1, 0, 0])).unwrap();
        let y = pv(&[2, -1, 4]);
        let img = p.rho_para(&one).unwrap().apply(&y.coords());
        let formula = -&p.para_space().reflect(&pv(&[1, 0, 0]).coords(), &y.conjugate().coords()).unwrap();
        assert_eq!(img, y.coords());
        assert_eq!(formula, y.coords());
    }

    #[test]
    fn xi_examples() {
        let p = ps(&[2, 5]);
        let one = Multivector::one(p.u());
        assert_eq!(p.xi(&one).unwrap(), Multivector::one(p.v()));
        let u = Multivector::generator(p.u(), 1).unwrap();
        let e = Multivector::generator(p.v(), 2).unwrap();
        assert_eq!(p.xi(&u).unwrap(), &e * &p.lift(&u).unwrap());
        let u0 = Multivector::generator(p.u(), 0).unwrap();
        let prod = &u0 * &u;
        assert_eq!(p.xi(&prod).unwrap(), &p.xi(&u0).unwrap() * &p.xi(&u).unwrap());
    }

    #[test]
    fn xi_of_identity_matrix() {
        let p = ps(&[3]);
        assert_eq!(p.big_xi(&CliffMat2::identity(p.u())).unwrap(), CliffMat2::identity(p.v()));
    }

    #[test]
    fn e2_is_vahlen_para() {
        let p = ps(&[3]);
        assert!(CliffMat2::swap(p.u()).is_vahlen_para().is_member());
    }

    #[test]
    fn worked_examples_pass() {
        let a1 = worked_example_a1(&FiniteType::new(Family::A, 1).unwrap().double_extend()).unwrap();
        assert!(a1.all_pass(), "{a1:?}");
        let a2 = worked_example_a2(&FiniteType::new(Family::A, 2).unwrap().double_extend()).unwrap();
        assert!(a2.all_pass(), "{a2:?}");
    }

    fn h2(p: &ParaSpace, c: &[i64]) -> CliffMat2 {
        p.h2_matrix(&QVector::from_ints(c)).unwrap()
    }

    fn samples() -> Vec<Vec<i64>> {
        vec![vec![1, 2, 0, 1, -1], vec![0, 1, 1, 2, 1], vec![2, 0, -1, 0, 3], vec![1, 1, 1, -1, 2]]
    }

    #[test]
    fn rho_para_is_minus_reflection_of_conjugate() {
        let p = ps(&[2, -3]);
        for x in [pv(&[1, 1, 0]), pv(&[0, 1, 1]), pv(&[3, -1, 2])] {
            let g = p.rho_para(&p.embed(&x).unwrap()).unwrap();
            for y in [pv(&[1, 0, 0]), pv(&[2, 5, -1]), pv(&[0, 0, 1])] {
                let expect = -&p.para_space().reflect(&x.coords(), &y.conjugate().coords()).unwrap();
                assert_eq!(g.apply(&y.coords()), expect);
            }
        }
    }

    #[test]
    fn rho_para_of_x1_xbar2_is_two_reflections() {
        let p = ps(&[2, -3]);
        let xs = [pv(&[1, 1, 0]), pv(&[0, 1, 1]), pv(&[3, -1, 2])];
        for x1 in &xs {
            for x2 in &xs {
                let m = &p.embed(x1).unwrap() * &p.embed(&x2.conjugate()).unwrap();
                let r = p.para_space().reflection(&x1.coords()).unwrap().compose(&p.para_space().reflection(&x2.coords()).unwrap());
                assert_eq!(p.rho_para(&m).unwrap(), r);
            }
        }
    }

    #[test]
    fn sigma_intertwines_rho_para_and_rho() {
        let p = ps(&[2, -3]);
        let x = &p.embed(&pv(&[1, 1, 0])).unwrap() * &p.embed(&pv(&[2, 0, 1])).unwrap();
        let x = &x * &p.embed(&pv(&[0, 1, 1])).unwrap();
        let lhs = p.big_sigma(&p.rho_para(&x).unwrap()).unwrap();
        let rhs = p.xi(&x).unwrap().rho().unwrap();
        assert_eq!(lhs, rhs);
        let e = Multivector::generator(p.v(), 2).unwrap();
        assert_eq!(&e * &p.xi(&x.grade_involution()).unwrap(), &p.xi(&x).unwrap() * &e);
    }

    #[test]
    fn h2_elements_are_vahlen_para() {
        let p = ps(&[2, -3]);
        for c in samples() {
            let x = h2(&p, &c);
            assert!(x.is_vahlen_para().is_member(), "{x:?}");
        }
    }

    #[test]
    fn eta_para_of_h2_element_is_minus_reflection_of_gamma() {
        let p = ps(&[2, -3]);
        let w = p.h2_space();
        for c in samples() {
            let g = p.eta_para(&h2(&p, &c)).unwrap();
            for d in samples() {
                let y = QVector::from_ints(&d);
                let expect = -&w.reflect(&QVector::from_ints(&c), &p.gamma_coords(&y)).unwrap();
                assert_eq!(g.apply(&y), expect);
            }
        }
    }

    #[test]
    fn xi_intertwines_eta() {
        let p = ps(&[2, -3]);
        let ss = samples();
        for c1 in &ss {
            for c2 in &ss {
                let a = h2(&p, c1).multiply(&h2(&p, c2)).unwrap();
                let xa = p.big_xi(&a).unwrap();
                assert!(xa.is_vahlen().is_member());
                assert_eq!(p.big_sigma_h2(&p.eta_para(&a).unwrap()).unwrap(), xa.eta().unwrap());
                let b = h2(&p, c2);
                assert_eq!(p.big_xi(&a.multiply(&b).unwrap()).unwrap(), xa.multiply(&p.big_xi(&b).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn hermitian_picture_matches_h2_picture() {
        let p = ps(&[2, -3]);
        let w = p.h2_space();
        let e2 = CliffMat2::swap(p.u());
        let ss = samples();
        for c1 in &ss {
            let a = h2(&p, c1);
            assert_eq!(dagger(&a).unwrap(), e2.multiply(&a.sharp().unwrap()).unwrap().multiply(&e2).unwrap());
            for c2 in &ss {
                let x = h2(&p, c2);
                let moved = a.multiply(&x).unwrap().multiply(&a.sharp().unwrap()).unwrap();
                let h = p.hermitian_from_matrix(&p.psi(&x).unwrap()).unwrap();
                let th = p.hermitian_transport(&a, &h).unwrap();
                assert_eq!(p.hermitian_matrix(&th).unwrap(), p.psi(&moved).unwrap());
                assert_eq!(p.hermitian_q(&th).unwrap(), p.hermitian_q(&h).unwrap());
                // X₁·γ(X₂) acts as r_{ψX₁} r_{ψX₂}
                let g = p.h2_matrix(&p.gamma_coords(&QVector::from_ints(c2))).unwrap();
                let m = a.multiply(&g).unwrap();
                let r = w.reflection(&QVector::from_ints(c1)).unwrap().compose(&w.reflection(&QVector::from_ints(c2)).unwrap());
                for c3 in &ss {
                    let hy = p.hermitian_from_matrix(&p.psi(&h2(&p, c3)).unwrap()).unwrap();
                    let out = p.hermitian_transport(&m, &hy).unwrap();
                    let mut oc = out.x.coords().0;
                    oc.push(out.l1);
                    oc.push(out.l2);
                    assert_eq!(QVector(oc), r.apply(&QVector::from_ints(c3)));
                }
            }
        }
    }
}
