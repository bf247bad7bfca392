//! 2×2 matrices over `C(V)`, the isomorphism `φ: C(V ⊥ P) → M₂(C(V))`, and
//! Vahlen groups over ℚ and over the order `𝒪 = ℤ[α₁, …, α_n]`.
//!
//! `P` is the hyperbolic plane on `f₁, f₂` appended after the generators of
//! `V`; `φ(v + λ₁f₁ + λ₂f₂) = (v, λ₁; λ₂, v̄)`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::cartan::ExtensionSpec;
use crate::clifford::{Blade, Multivector};
use crate::error::{Error, Result};
use crate::exactform::{Isometry, QVector, QuadSpace};
use crate::matrix::RatMatrix;
use crate::rational::{self, Rational};

/// `(a, b; c, d)` with entries in `C(V)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CliffMat2 {
    pub a: Multivector,
    pub b: Multivector,
    pub c: Multivector,
    pub d: Multivector,
}

/// Outcome of a Vahlen membership test.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Verdict {
    Member { lambda: Rational },
    /// Fails the numbered condition.
    Fails { condition: u8 },
    /// Some entry lies outside the order.
    NotIntegral,
}

impl Verdict {
    pub fn is_member(&self) -> bool {
        matches!(self, Verdict::Member { .. })
    }

    pub fn lambda(&self) -> Option<&Rational> {
        match self {
            Verdict::Member { lambda } => Some(lambda),
            _ => None,
        }
    }
}

enum Ring {
    Field,
    Order,
}

/// Where conditions (5)–(7) test membership and quantify.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Target {
    /// `V = span(g_i)`.
    Vectors,
    /// `F ⊕ V`.
    Paravectors,
}

impl CliffMat2 {
    pub fn new(a: Multivector, b: Multivector, c: Multivector, d: Multivector) -> Result<Self> {
        if !(a.same_space(&b) && a.same_space(&c) && a.same_space(&d)) {
            return Err(Error::SpaceMismatch);
        }
        Ok(CliffMat2 { a, b, c, d })
    }

    pub fn identity(space: &Arc<QuadSpace>) -> Self {
        Self::scalar(space, Rational::one())
    }

    pub fn scalar(space: &Arc<QuadSpace>, s: Rational) -> Self {
        let z = Multivector::zero(space);
        let x = Multivector::scalar(space, s);
        CliffMat2 {
            a: x.clone(),
            b: z.clone(),
            c: z,
            d: x,
        }
    }

    /// `E₂ = (0, 1; 1, 0)`.
    pub fn swap(space: &Arc<QuadSpace>) -> Self {
        let z = Multivector::zero(space);
        let o = Multivector::one(space);
        CliffMat2 {
            a: z.clone(),
            b: o.clone(),
            c: o,
            d: z,
        }
    }

    pub fn space(&self) -> &Arc<QuadSpace> {
        self.a.space()
    }

    pub fn entries(&self) -> [&Multivector; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    fn map(&self, f: impl Fn(&Multivector) -> Multivector) -> Self {
        CliffMat2 {
            a: f(&self.a),
            b: f(&self.b),
            c: f(&self.c),
            d: f(&self.d),
        }
    }

    pub fn multiply(&self, o: &CliffMat2) -> Result<Self> {
        let e = |x: &Multivector, y: &Multivector, z: &Multivector, w: &Multivector| -> Result<Multivector> {
            x.multiply(y)?.try_add(&z.multiply(w)?)
        };
        Ok(CliffMat2 {
            a: e(&self.a, &o.a, &self.b, &o.c)?,
            b: e(&self.a, &o.b, &self.b, &o.d)?,
            c: e(&self.c, &o.a, &self.d, &o.c)?,
            d: e(&self.c, &o.b, &self.d, &o.d)?,
        })
    }

    pub fn try_add(&self, o: &CliffMat2) -> Result<Self> {
        Ok(CliffMat2 {
            a: self.a.try_add(&o.a)?,
            b: self.b.try_add(&o.b)?,
            c: self.c.try_add(&o.c)?,
            d: self.d.try_add(&o.d)?,
        })
    }

    pub fn scale(&self, s: &Rational) -> Self {
        self.map(|x| x.scale(s))
    }

    pub fn neg(&self) -> Self {
        self.map(|x| -x)
    }

    pub fn is_scalar_matrix(&self, s: &Rational) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a.as_scalar().as_ref() == Some(s) && self.d.as_scalar().as_ref() == Some(s)
    }

    /// `α(A) = (a′, −b′; −c′, d′)`, transporting `x ↦ x′`.
    pub fn alpha(&self) -> Self {
        CliffMat2 {
            a: self.a.grade_involution(),
            b: -&self.b.grade_involution(),
            c: -&self.c.grade_involution(),
            d: self.d.grade_involution(),
        }
    }

    /// `β(A) = (d̄, b̄; c̄, ā)`, transporting `x ↦ x*`.
    pub fn beta(&self) -> Self {
        CliffMat2 {
            a: self.d.conjugation(),
            b: self.b.conjugation(),
            c: self.c.conjugation(),
            d: self.a.conjugation(),
        }
    }

    /// `γ(A) = (d*, −b*; −c*, a*)`, transporting `x ↦ x̄`.
    pub fn gamma(&self) -> Self {
        CliffMat2 {
            a: self.d.reversion(),
            b: -&self.b.reversion(),
            c: -&self.c.reversion(),
            d: self.a.reversion(),
        }
    }

    /// `λ` with `ad* − bc* = d*a − b*c = λ ∈ F`, if both sides agree on a
    /// scalar.
    pub fn pseudo_determinant(&self) -> Option<Rational> {
        let l = self.a.multiply(&self.d.reversion()).ok()?.try_add(&-&self.b.multiply(&self.c.reversion()).ok()?).ok()?;
        let r = self.d.reversion().multiply(&self.a).ok()?.try_add(&-&self.b.reversion().multiply(&self.c).ok()?).ok()?;
        let l = l.as_scalar()?;
        (r.as_scalar()? == l).then_some(l)
    }

    /// `A^♯ = β(A)/λ = α(A)⁻¹`.
    pub fn sharp(&self) -> Result<Self> {
        match self.pseudo_determinant() {
            Some(l) if !l.is_zero() => Ok(self.beta().scale(&(Rational::one() / l))),
            _ => Err(Error::NotVahlen(1)),
        }
    }

    /// `A⁻¹ = γ(A)/λ`.
    pub fn inverse(&self) -> Result<Self> {
        match self.pseudo_determinant() {
            Some(l) if !l.is_zero() => Ok(self.gamma().scale(&(Rational::one() / l))),
            _ => Err(Error::NotVahlen(1)),
        }
    }

    /// `N(A) = A·γ(A)`.
    pub fn norm(&self) -> Result<Self> {
        self.multiply(&self.gamma())
    }

    /// Conditions (1)–(7) characterizing `𝒱(V)`; the quantified conditions
    /// are linear in `v` and are checked on the generators.
    pub fn is_vahlen(&self) -> Verdict {
        self.check(Ring::Field, Target::Vectors)
    }

    /// The same seven conditions with `V` replaced by the paravectors
    /// `F ⊕ V`, characterizing `𝒱(V_para)`.
    pub fn is_vahlen_para(&self) -> Verdict {
        self.check(Ring::Field, Target::Paravectors)
    }

    /// The integral conditions: entries in `𝒪`, `λ = ±1`, scalars in ℤ and
    /// vectors in `Λ`, quantifiers over the ℤ-basis of `Λ`.
    pub fn is_vahlen_order(&self) -> Result<Verdict> {
        for x in self.entries() {
            if !x.order_member()? {
                return Ok(Verdict::NotIntegral);
            }
        }
        Ok(self.check(Ring::Order, Target::Vectors))
    }

    /// Member with `λ = 1`.
    pub fn is_vahlen_plus(&self) -> bool {
        self.is_vahlen().lambda().is_some_and(One::is_one)
    }

    /// `a, d` even and `b, c` odd.
    pub fn is_even(&self) -> bool {
        self.a.is_even() && self.d.is_even() && self.b.is_odd() && self.c.is_odd()
    }

    fn check(&self, ring: Ring, target: Target) -> Verdict {
        match self.check_inner(&ring, target) {
            Ok(None) => Verdict::Member {
                lambda: self.pseudo_determinant().expect("condition 1 passed"),
            },
            Ok(Some(k)) => Verdict::Fails { condition: k },
            Err(_) => Verdict::Fails { condition: 1 },
        }
    }

    fn check_inner(&self, ring: &Ring, target: Target) -> Result<Option<u8>> {
        let space = self.space().clone();
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let in_f = |x: &Multivector| match x.as_scalar() {
            Some(s) => !matches!(ring, Ring::Order) || rational::is_integer(&s),
            None => false,
        };
        let in_v = |x: &Multivector| {
            let rest = match target {
                Target::Vectors => x.clone(),
                Target::Paravectors => x.try_add(&Multivector::scalar(x.space(), -x.scalar_part())).expect("same space"),
            };
            match rest.as_vector() {
                Some(v) => !matches!(ring, Ring::Order) || (v.is_integral() && rational::is_integer(&x.scalar_part())),
                None => false,
            }
        };
        let sub = |x: Multivector, y: Multivector| x.try_add(&-&y);
        let add = |x: Multivector, y: Multivector| x.try_add(&y);

        match self.pseudo_determinant() {
            Some(l) if !l.is_zero() => {
                if matches!(ring, Ring::Order) && l.abs() != Rational::one() {
                    return Ok(Some(1));
                }
            }
            _ => return Ok(Some(1)),
        }
        if !sub(b * &a.reversion(), a * &b.reversion())?.is_zero() || !sub(c * &d.reversion(), d * &c.reversion())?.is_zero() {
            return Ok(Some(2));
        }
        if !sub(&a.reversion() * c, &c.reversion() * a)?.is_zero() || !sub(&d.reversion() * b, &b.reversion() * d)?.is_zero() {
            return Ok(Some(3));
        }
        if ![a, b, c, d].iter().all(|x| in_f(&(*x * &x.conjugation()))) {
            return Ok(Some(4));
        }
        if !in_v(&(b * &d.conjugation())) || !in_v(&(a * &c.conjugation())) {
            return Ok(Some(5));
        }
        let mut gens: Vec<Multivector> = (0..space.dim()).map(|i| Multivector::generator(&space, i)).collect::<Result<_>>()?;
        if target == Target::Paravectors {
            gens.push(Multivector::one(&space));
        }
        let (ab, bb, cb, db) = (a.conjugation(), b.conjugation(), c.conjugation(), d.conjugation());
        for v in &gens {
            let vb = v.conjugation();
            let x = add(&(a * v) * &bb, &(b * &vb) * &ab)?;
            let y = add(&(c * v) * &db, &(d * &vb) * &cb)?;
            if !in_f(&x) || !in_f(&y) {
                return Ok(Some(6));
            }
        }
        for v in &gens {
            let vb = v.conjugation();
            if !in_v(&add(&(a * v) * &db, &(b * &vb) * &cb)?) {
                return Ok(Some(7));
            }
        }
        Ok(None)
    }

    /// `η(A): X ↦ A·X·A^♯` on `H₂(V)`, in the basis
    /// `(g_1, …, g_n, λ₁-slot, λ₂-slot)`. Checks membership first.
    pub fn eta(&self) -> Result<Isometry> {
        match self.is_vahlen() {
            Verdict::Member { .. } => {}
            Verdict::Fails { condition } => return Err(Error::NotVahlen(condition)),
            Verdict::NotIntegral => unreachable!(),
        }
        self.eta_unchecked()
    }

    /// [`eta`](Self::eta) for a matrix already known to be Vahlen, e.g. a
    /// product of `H₂` elements.
    pub fn eta_unchecked(&self) -> Result<Isometry> {
        let space = self.space();
        let n = space.dim();
        let sharp = self.sharp()?;
        let mut columns = Vec::with_capacity(n + 2);
        for k in 0..n + 2 {
            let x = H2Element::basis(n, k).to_matrix(space)?;
            let y = self.multiply(&x)?.multiply(&sharp)?;
            let h = H2Element::from_matrix(&y).ok_or_else(|| Error::Internal("η image leaves H₂(V)".into()))?;
            columns.push(h.to_w_coords().0);
        }
        let w = h2_space(space);
        Isometry::new(&w, RatMatrix::from_columns(n + 2, &columns))
    }

    /// `±A` with the first nonzero coefficient (entries `a, b, c, d`, blades
    /// in order) positive.
    pub fn sign_normalized(&self) -> Self {
        let first = self.entries().into_iter().find_map(|x| x.terms().next().map(|(_, c)| c.clone()));
        match first {
            Some(c) if c.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }
}

impl fmt::Debug for CliffMat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?}; {:?}, {:?})", self.a, self.b, self.c, self.d)
    }
}

/// The quadratic space `V ⊥ P` carried by `H₂(V)`.
pub fn h2_space(v: &QuadSpace) -> QuadSpace {
    v.orthogonal_sum(&QuadSpace::hyperbolic_plane())
}

/// `X = (v, λ₁; λ₂, v̄)` with `Q(X) = q(v) − λ₁λ₂`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct H2Element {
    pub v: QVector,
    pub l1: Rational,
    pub l2: Rational,
}

impl H2Element {
    /// Basis element `k` of `H₂(V)` for `dim V = n`: `g_k` for `k < n`, then
    /// the two off-diagonal slots.
    pub fn basis(n: usize, k: usize) -> Self {
        let mut h = H2Element {
            v: QVector::zeros(n),
            l1: Rational::zero(),
            l2: Rational::zero(),
        };
        match k.checked_sub(n) {
            None => h.v = QVector::basis(n, k),
            Some(0) => h.l1 = Rational::one(),
            _ => h.l2 = Rational::one(),
        }
        h
    }

    /// From `W = V ⊥ P` coordinates `(v, λ₁, λ₂)`.
    pub fn from_w_coords(w: &QVector) -> Self {
        let n = w.len() - 2;
        H2Element {
            v: QVector(w.0[..n].to_vec()),
            l1: w.0[n].clone(),
            l2: w.0[n + 1].clone(),
        }
    }

    pub fn to_w_coords(&self) -> QVector {
        let mut c = self.v.0.clone();
        c.push(self.l1.clone());
        c.push(self.l2.clone());
        QVector(c)
    }

    pub fn to_matrix(&self, space: &Arc<QuadSpace>) -> Result<CliffMat2> {
        let v = Multivector::vector(space, &self.v)?;
        Ok(CliffMat2 {
            d: v.conjugation(),
            a: v,
            b: Multivector::scalar(space, self.l1.clone()),
            c: Multivector::scalar(space, self.l2.clone()),
        })
    }

    pub fn from_matrix(m: &CliffMat2) -> Option<Self> {
        let v = m.a.as_vector()?;
        if m.d != m.a.conjugation() {
            return None;
        }
        Some(H2Element {
            v,
            l1: m.b.as_scalar()?,
            l2: m.c.as_scalar()?,
        })
    }

    pub fn q_form(&self, space: &QuadSpace) -> Result<Rational> {
        Ok(space.quadratic(&self.v)? - &self.l1 * &self.l2)
    }
}

/// The splitting `W = V ⊥ P` with `f₁, f₂` the last two generators.
#[derive(Clone, Debug)]
pub struct Frame {
    v: Arc<QuadSpace>,
    w: Arc<QuadSpace>,
}

impl Frame {
    pub fn new(v: Arc<QuadSpace>) -> Self {
        let w = Arc::new(h2_space(&v));
        Frame { v, w }
    }

    /// Splits a space whose last two generators span a hyperbolic plane
    /// orthogonal to the rest.
    pub fn split(w: &Arc<QuadSpace>) -> Result<Self> {
        let m = w.dim().checked_sub(2).ok_or(Error::NotHyperbolicExtension)?;
        let g = w.gram();
        let tail_ok = g[(m, m)].is_zero() && g[(m + 1, m + 1)].is_zero() && g[(m, m + 1)] == rational::rat(-1, 2);
        let cross_ok = (0..m).all(|i| g[(i, m)].is_zero() && g[(i, m + 1)].is_zero());
        if !(tail_ok && cross_ok) {
            return Err(Error::NotHyperbolicExtension);
        }
        let v = RatMatrix::from_fn(m, m, |i, j| g[(i, j)].clone());
        Ok(Frame {
            v: Arc::new(QuadSpace::new(v)?),
            w: w.clone(),
        })
    }

    pub fn for_extension(ext: &ExtensionSpec) -> Self {
        Self::split(&Arc::new(ext.space.clone())).expect("extensions end in a hyperbolic plane")
    }

    pub fn v(&self) -> &Arc<QuadSpace> {
        &self.v
    }

    pub fn w(&self) -> &Arc<QuadSpace> {
        &self.w
    }

    /// `φ(e_J·F) = diag(e_J, e_J′)·φ(F)` for `e_J` in `C(V)` and `F` one of
    /// `1, f₁, f₂, f₁f₂`, where `φ(f₁) = (0, 1; 0, 0)`, `φ(f₂) = (0, 0; 1, 0)`.
    pub fn phi(&self, x: &Multivector) -> Result<CliffMat2> {
        if !x.space().as_ref().eq(self.w.as_ref()) {
            return Err(Error::NotHyperbolicExtension);
        }
        let n = self.v.dim();
        let low = (1u64 << n) - 1;
        let mut parts: [BTreeMap<Blade, Rational>; 4] = Default::default();
        for (b, c) in x.terms() {
            let j = Blade::from_bits(b.bits() & low);
            let f = (b.bits() >> n) as usize;
            parts[f].insert(j, c.clone());
        }
        let mk = |m: &BTreeMap<Blade, Rational>| Multivector::from_terms(&self.v, m.iter().map(|(b, c)| (*b, c.clone())));
        let [p, q, r, s] = &parts;
        let (p, q, r, s) = (mk(p)?, mk(q)?, mk(r)?, mk(s)?);
        Ok(CliffMat2 {
            a: p.try_add(&s)?,
            b: q,
            c: r.grade_involution(),
            d: p.grade_involution(),
        })
    }

    /// The inverse of [`phi`](Self::phi).
    pub fn phi_inverse(&self, m: &CliffMat2) -> Result<Multivector> {
        let n = self.v.dim();
        let p = m.d.grade_involution();
        let s = m.a.try_add(&-&p)?;
        let q = m.b.clone();
        let r = m.c.grade_involution();
        let mut terms = Vec::new();
        for (f, part) in [p, q, r, s].iter().enumerate() {
            for (b, c) in part.terms() {
                terms.push((Blade::from_bits(b.bits() | (f as u64) << n), c.clone()));
            }
        }
        Multivector::from_terms(&self.w, terms)
    }

    /// `φ(w)` for `w ∈ W`.
    pub fn phi_vector(&self, w: &QVector) -> Result<CliffMat2> {
        H2Element::from_w_coords(w).to_matrix(&self.v)
    }
}

/// `X₋₁, X₀, X₁, …, X_n` as `H₂` elements; they are the simple roots of
/// `T_n⁺⁺` read through `φ`.
pub fn generators(ext: &ExtensionSpec) -> Vec<H2Element> {
    ext.simple_roots.iter().map(H2Element::from_w_coords).collect()
}

/// The generators as matrices over `C(V^{1/m})`.
pub fn generator_matrices(ext: &ExtensionSpec) -> Vec<CliffMat2> {
    let frame = Frame::for_extension(ext);
    generators(ext).iter().map(|h| h.to_matrix(frame.v()).expect("dimensions agree")).collect()
}

/// Coefficients `c` over `(X₋₁, X₀, X₁, …, X_n)` with
/// `(0, n₁; n₂, 0) = Σ c_i X_i`, namely
/// `−(n₁+n₂)X₀ − n₂X₋₁ − (n₁+n₂)·(θ, 0; 0, θ̄)`.
pub fn lattice_decomposition(ext: &ExtensionSpec, n1: i64, n2: i64) -> Vec<i64> {
    let mut c = vec![-n2, -(n1 + n2)];
    c.extend(ext.theta.iter().map(|t| -(n1 + n2) * t));
    c
}

/// Checks `Λ⁺⁺ = H₂(Λ)` on generators: each `X_i` has integral coordinates,
/// and the elementary elements `(α_i, 0; 0, ᾱ_i)`, `(0, 1; 0, 0)`,
/// `(0, 0; 1, 0)` are ℤ-combinations of the `X_i`.
pub fn lattice_identity_check(ext: &ExtensionSpec) -> Result<bool> {
    if !ext.base.is_simply_laced() {
        return Err(Error::NotSimplyLaced);
    }
    let n = ext.base.rank();
    let xs = generators(ext);
    if !xs.iter().all(|x| x.to_w_coords().is_integral()) {
        return Ok(false);
    }
    for (n1, n2) in [(1, 0), (0, 1)] {
        let coeffs = lattice_decomposition(ext, n1, n2);
        let mut sum = QVector::zeros(n + 2);
        for (c, x) in coeffs.iter().zip(&xs) {
            sum = &sum + &x.to_w_coords().scale(&rational::int(*c));
        }
        let target = H2Element {
            v: QVector::zeros(n),
            l1: rational::int(n1),
            l2: rational::int(n2),
        };
        if sum != target.to_w_coords() {
            return Ok(false);
        }
    }
    Ok((0..n).all(|i| xs[i + 2].v == QVector::basis(n, i) && xs[i + 2].l1.is_zero() && xs[i + 2].l2.is_zero()))
}

/// One element of the Weyl group ball.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeylElement {
    /// Indices into the simple roots `α₋₁, α₀, α₁, …` (0-based).
    pub word: Vec<usize>,
    /// `r_{w_1} ∘ … ∘ r_{w_k}`.
    pub isometry: Isometry,
    /// `±X_{w_1}·…·X_{w_k}`, sign normalized.
    pub vahlen: CliffMat2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeylLimits {
    pub max_len: usize,
    pub max_elements: usize,
}

impl Default for WeylLimits {
    fn default() -> Self {
        WeylLimits {
            max_len: 10,
            max_elements: 200_000,
        }
    }
}

/// All Weyl group elements of reflection length at most `max_len`, in
/// shortlex order of their minimal words, each with its Vahlen word and the
/// verified identity `η(X_{w_1}·…·X_{w_k}) = r_{w_1} ∘ … ∘ r_{w_k}`.
pub fn enumerate_weyl(ext: &ExtensionSpec, max_len: usize, limits: WeylLimits) -> Result<Vec<WeylElement>> {
    if max_len > limits.max_len {
        return Err(Error::ResourceBound(format!("word length {max_len} exceeds the bound {}", limits.max_len)));
    }
    let frame = Frame::for_extension(ext);
    let xs = generator_matrices(ext);
    let refl: Vec<Isometry> = (0..ext.simple_roots.len()).map(|i| ext.simple_reflection(i)).collect();
    let dim = ext.space.dim();
    let mut seen: BTreeSet<RatMatrix> = BTreeSet::new();
    seen.insert(RatMatrix::identity(dim));
    let mut out = vec![WeylElement {
        word: Vec::new(),
        isometry: Isometry::identity(dim),
        vahlen: CliffMat2::identity(frame.v()),
    }];
    let mut frontier = vec![0usize];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for &idx in &frontier {
            for s in 0..refl.len() {
                if out[idx].word.last() == Some(&s) {
                    continue;
                }
                let iso = out[idx].isometry.compose(&refl[s]);
                if !seen.insert(iso.matrix().clone()) {
                    continue;
                }
                let vahlen = out[idx].vahlen.multiply(&xs[s])?;
                let mut word = out[idx].word.clone();
                word.push(s);
                if out.len() >= limits.max_elements {
                    return Err(Error::ResourceBound(format!("more than {} elements", limits.max_elements)));
                }
                next.push(out.len());
                out.push(WeylElement { word, isometry: iso, vahlen });
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    for e in &mut out {
        if e.vahlen.eta_unchecked()? != e.isometry {
            return Err(Error::Internal(format!("η mismatch for word {:?}", e.word)));
        }
        e.vahlen = e.vahlen.sign_normalized();
    }
    Ok(out)
}
