//! Quadratic spaces over ℚ.
//!
//! A [`QuadSpace`] is a finite-dimensional rational vector space with a
//! symmetric bilinear form `S` given by its Gram matrix on a fixed generator
//! basis; `q(v) = S(v, v)`. Vectors are coordinate columns in that basis and
//! isometries are matrices acting on those columns.

mod squarefree;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::rational::{self, Rational};

pub use squarefree::SquarefreeClass;

/// The class of `x` in `ℚ^× / ℚ^×²`.
pub fn squarefree_class(x: &Rational) -> Result<SquarefreeClass> {
    SquarefreeClass::of(x)
}

/// Coordinates of a vector in the generator basis of a [`QuadSpace`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QVector(pub Vec<Rational>);

impl QVector {
    pub fn zeros(n: usize) -> Self {
        QVector(vec![Rational::zero(); n])
    }

    /// The `i`-th generator `g_i`.
    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = Rational::one();
        v
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        QVector(xs.iter().map(|&x| rational::int(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        QVector(self.0.iter().map(|x| x * s).collect())
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(rational::is_integer)
    }
}

impl Add for &QVector {
    type Output = QVector;
    fn add(self, rhs: &QVector) -> QVector {
        assert_eq!(self.len(), rhs.len());
        QVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &QVector {
    type Output = QVector;
    fn sub(self, rhs: &QVector) -> QVector {
        assert_eq!(self.len(), rhs.len());
        QVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &QVector {
    type Output = QVector;
    fn neg(self) -> QVector {
        QVector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Debug for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// Counts of positive, negative and zero entries of a diagonalized Gram
/// matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    pub pos: usize,
    pub neg: usize,
    pub zero: usize,
}

impl Signature {
    pub fn is_lorentzian(&self) -> bool {
        self.neg == 1 && self.zero == 0
    }
}

/// A finite-dimensional orthogonal geometry `(V, S)` over ℚ.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadSpace {
    gram: RatMatrix,
    nonsingular: bool,
}

impl QuadSpace {
    pub fn new(gram: RatMatrix) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::NotSquare);
        }
        if !gram.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let nonsingular = gram.rows() == 0 || !gram.determinant()?.is_zero();
        Ok(QuadSpace { gram, nonsingular })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        Self::new(RatMatrix::from_rows(rows)?)
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        let n = entries.len();
        let gram = RatMatrix::from_fn(n, n, |i, j| if i == j { entries[i].clone() } else { Rational::zero() });
        Self::new(gram).expect("diagonal matrices are symmetric")
    }

    /// The hyperbolic plane with Gram matrix `[[0, -1/2], [-1/2, 0]]`; its
    /// generators form a hyperbolic pair.
    pub fn hyperbolic_plane() -> Self {
        let h = rational::rat(-1, 2);
        Self::from_rows(vec![vec![Rational::zero(), h.clone()], vec![h, Rational::zero()]]).expect("symmetric")
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &RatMatrix {
        &self.gram
    }

    pub fn is_nonsingular(&self) -> bool {
        self.nonsingular
    }

    pub fn is_diagonal(&self) -> bool {
        self.gram.is_diagonal()
    }

    fn check(&self, v: &QVector) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        Ok(())
    }

    /// `S(v, w) = vᵀ · G · w`.
    pub fn bilinear(&self, v: &QVector, w: &QVector) -> Result<Rational> {
        self.check(v)?;
        self.check(w)?;
        let gw = self.gram.mul_vec(&w.0);
        Ok(v.0
            .iter()
            .zip(&gw)
            .filter(|(a, b)| !a.is_zero() && !b.is_zero())
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b))
    }

    pub fn quadratic(&self, v: &QVector) -> Result<Rational> {
        self.bilinear(v, v)
    }

    /// `V^λ`: the same space with the form multiplied by `λ`.
    pub fn rescale(&self, lambda: &Rational) -> Result<Self> {
        if lambda.is_zero() {
            return Err(Error::ZeroScale);
        }
        Self::new(self.gram.scale(lambda))
    }

    /// `self ⊥ other`, generators of `self` first.
    pub fn orthogonal_sum(&self, other: &QuadSpace) -> Self {
        Self::new(self.gram.block_diag(&other.gram)).expect("block sum of symmetric matrices")
    }

    pub fn radical(&self) -> Vec<QVector> {
        self.gram.nullspace().into_iter().map(QVector).collect()
    }

    /// Exact congruence diagonalization: returns pairwise orthogonal vectors
    /// `t_1, …, t_n` forming a basis together with `q(t_i)`.
    ///
    /// Pivots on a nonzero diagonal entry when one remains; otherwise a
    /// nonzero off-diagonal entry `a_ij` is turned into the diagonal entry
    /// `2 a_ij` by adding generator `j` to generator `i`.
    pub fn diagonalize(&self) -> Vec<(QVector, Rational)> {
        let n = self.dim();
        let mut a = self.gram.clone();
        let mut t = RatMatrix::identity(n);
        let mut k = 0;
        while k < n {
            if let Some(p) = (k..n).find(|&p| !a[(p, p)].is_zero()) {
                swap_congruent(&mut a, &mut t, k, p);
            } else if let Some((i, j)) =
                (k..n).flat_map(|i| (k..n).map(move |j| (i, j))).find(|&(i, j)| i != j && !a[(i, j)].is_zero())
            {
                add_congruent(&mut a, &mut t, i, j, &Rational::one());
                swap_congruent(&mut a, &mut t, k, i);
            } else {
                break;
            }
            let pivot = a[(k, k)].clone();
            for j in k + 1..n {
                if a[(j, k)].is_zero() {
                    continue;
                }
                let f = -(&a[(j, k)] / &pivot);
                add_congruent(&mut a, &mut t, j, k, &f);
            }
            k += 1;
        }
        (0..n).map(|i| (QVector(t.column(i)), a[(i, i)].clone())).collect()
    }

    pub fn signature(&self) -> Signature {
        let mut s = Signature { pos: 0, neg: 0, zero: 0 };
        for (_, d) in self.diagonalize() {
            if d.is_positive() {
                s.pos += 1;
            } else if d.is_negative() {
                s.neg += 1;
            } else {
                s.zero += 1;
            }
        }
        s
    }

    /// An orthogonal basis of non-isotropic vectors.
    pub fn orthogonal_basis(&self) -> Result<Vec<QVector>> {
        if !self.nonsingular {
            return Err(Error::SingularSpace);
        }
        Ok(self.diagonalize().into_iter().map(|(v, _)| v).collect())
    }

    /// `r_v(w) = w − 2·S(w,v)/S(v,v)·v`.
    pub fn reflect(&self, v: &QVector, w: &QVector) -> Result<QVector> {
        let qv = self.quadratic(v)?;
        if qv.is_zero() {
            return Err(Error::IsotropicMirror);
        }
        let c = rational::int(2) * self.bilinear(w, v)? / qv;
        Ok(w - &v.scale(&c))
    }

    /// The matrix of `r_v`.
    pub fn reflection(&self, v: &QVector) -> Result<Isometry> {
        let qv = self.quadratic(v)?;
        if qv.is_zero() {
            return Err(Error::IsotropicMirror);
        }
        let gv = self.gram.mul_vec(&v.0);
        let c = rational::int(2) / qv;
        let n = self.dim();
        let m = RatMatrix::from_fn(n, n, |i, j| {
            let d = if i == j { Rational::one() } else { Rational::zero() };
            d - &c * &v.0[i] * &gv[j]
        });
        Ok(Isometry { matrix: m })
    }

    pub fn is_isometry(&self, m: &RatMatrix) -> bool {
        m.rows() == self.dim() && m.cols() == self.dim() && &(&m.transpose() * &self.gram) * m == self.gram
    }

    /// Mirrors `v_1, …, v_k` with `σ = r_{v_1} ∘ … ∘ r_{v_k}`, `k ≤ 2·dim`.
    pub fn cartan_dieudonne(&self, sigma: &Isometry) -> Result<Vec<QVector>> {
        let basis = self.orthogonal_basis()?;
        self.cartan_dieudonne_with_basis(sigma, &basis)
    }

    /// As [`cartan_dieudonne`](Self::cartan_dieudonne) with a caller-chosen
    /// orthogonal basis of non-isotropic vectors.
    ///
    /// For each basis vector `e_i` in turn, with `τ` the isometry reached so
    /// far (initially `σ`) and `u = τ(e_i)`: nothing happens when `u = e_i`;
    /// otherwise `ψ = r_{u−e_i}` when `u − e_i` is non-isotropic and
    /// `ψ = r_{e_i} ∘ r_{u+e_i}` when not, and `τ ← ψ ∘ τ`. The product of the
    /// inverses of the `ψ` in order recovers `σ`.
    pub fn cartan_dieudonne_with_basis(&self, sigma: &Isometry, basis: &[QVector]) -> Result<Vec<QVector>> {
        if !self.nonsingular {
            return Err(Error::SingularSpace);
        }
        if !self.is_isometry(&sigma.matrix) {
            return Err(Error::NotIsometry);
        }
        if basis.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: basis.len(),
            });
        }
        for (i, e) in basis.iter().enumerate() {
            if self.quadratic(e)?.is_zero() {
                return Err(Error::IsotropicMirror);
            }
            for f in &basis[..i] {
                if !self.bilinear(e, f)?.is_zero() {
                    return Err(Error::Internal("basis is not orthogonal".into()));
                }
            }
        }
        let mut tau = sigma.matrix.clone();
        let mut mirrors = Vec::new();
        for e in basis {
            let u = QVector(tau.mul_vec(&e.0));
            if &u == e {
                continue;
            }
            let diff = &u - e;
            if !self.quadratic(&diff)?.is_zero() {
                tau = &self.reflection(&diff)?.matrix * &tau;
                mirrors.push(diff);
            } else {
                let sum = &u + e;
                let psi = &self.reflection(e)?.matrix * &self.reflection(&sum)?.matrix;
                tau = &psi * &tau;
                mirrors.push(sum);
                mirrors.push(e.clone());
            }
        }
        if !tau.is_identity() {
            return Err(Error::Internal("reflection decomposition did not terminate at the identity".into()));
        }
        Ok(mirrors)
    }

    /// `r_{v_1} ∘ … ∘ r_{v_k}`.
    pub fn compose_reflections(&self, mirrors: &[QVector]) -> Result<Isometry> {
        let mut m = RatMatrix::identity(self.dim());
        for v in mirrors {
            m = &m * &self.reflection(v)?.matrix;
        }
        Ok(Isometry { matrix: m })
    }

    /// Class of `∏ q(v_i)` over a reflection decomposition of `σ`.
    pub fn spinor_norm(&self, sigma: &Isometry) -> Result<SquarefreeClass> {
        let mirrors = self.cartan_dieudonne(sigma)?;
        self.mirror_class(&mirrors)
    }

    /// Class of `∏ q(v_i)`.
    pub fn mirror_class(&self, mirrors: &[QVector]) -> Result<SquarefreeClass> {
        let mut prod = Rational::one();
        for v in mirrors {
            prod *= self.quadratic(v)?;
        }
        SquarefreeClass::of(&prod)
    }

    /// Some vector with `q < 0`, if the form takes negative values.
    pub fn timelike_witness(&self) -> Option<QVector> {
        self.diagonalize().into_iter().find(|(_, d)| d.is_negative()).map(|(v, _)| v)
    }

    /// Whether `σ` preserves each of the two cones of time-like vectors in a
    /// space of signature `(k, 1, 0)`: `S(σ(w), w) < 0` for the time-like
    /// witness `w`.
    pub fn o_plus_member(&self, sigma: &Isometry, witness: &QVector) -> Result<bool> {
        let sig = self.signature();
        if !sig.is_lorentzian() {
            return Err(Error::WrongSignature {
                p: sig.pos,
                q: sig.neg,
                r: sig.zero,
            });
        }
        if !self.quadratic(witness)?.is_negative() {
            return Err(Error::NotTimelike);
        }
        let image = sigma.apply(witness);
        Ok(self.bilinear(&image, witness)?.is_negative())
    }
}

fn swap_congruent(a: &mut RatMatrix, t: &mut RatMatrix, i: usize, j: usize) {
    a.swap_rows(i, j);
    a.swap_cols(i, j);
    t.swap_cols(i, j);
}

/// Replaces basis vector `i` by `t_i + f·t_j`.
fn add_congruent(a: &mut RatMatrix, t: &mut RatMatrix, i: usize, j: usize, f: &Rational) {
    let n = a.rows();
    for c in 0..n {
        let v = &a[(i, c)] + f * &a[(j, c)];
        a[(i, c)] = v;
    }
    for r in 0..n {
        let v = &a[(r, i)] + f * &a[(r, j)];
        a[(r, i)] = v;
    }
    for r in 0..n {
        let v = &t[(r, i)] + f * &t[(r, j)];
        t[(r, i)] = v;
    }
}

impl fmt::Debug for QuadSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadSpace({:?})", self.gram)
    }
}

/// A matrix `M` with `Mᵀ·G·M = G`, acting on coordinate columns.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Isometry {
    matrix: RatMatrix,
}

impl Isometry {
    pub fn new(space: &QuadSpace, matrix: RatMatrix) -> Result<Self> {
        if matrix.rows() != space.dim() || matrix.cols() != space.dim() {
            return Err(Error::DimensionMismatch {
                expected: space.dim(),
                found: matrix.rows(),
            });
        }
        if !space.is_isometry(&matrix) {
            return Err(Error::NotIsometry);
        }
        Ok(Isometry { matrix })
    }

    /// Wraps a matrix the caller has already checked.
    pub(crate) fn from_matrix_unchecked(matrix: RatMatrix) -> Self {
        Isometry { matrix }
    }

    pub fn identity(n: usize) -> Self {
        Isometry {
            matrix: RatMatrix::identity(n),
        }
    }

    pub fn minus_identity(n: usize) -> Self {
        Isometry {
            matrix: RatMatrix::identity(n).neg(),
        }
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> RatMatrix {
        self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, v: &QVector) -> QVector {
        QVector(self.matrix.mul_vec(&v.0))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Isometry) -> Isometry {
        Isometry {
            matrix: &self.matrix * &other.matrix,
        }
    }

    pub fn inverse(&self) -> Isometry {
        Isometry {
            matrix: self.matrix.inverse().expect("isometries of nonsingular spaces are invertible"),
        }
    }

    pub fn negate(&self) -> Isometry {
        Isometry {
            matrix: self.matrix.neg(),
        }
    }

    pub fn determinant(&self) -> Rational {
        self.matrix.determinant().expect("square")
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }
}

/// Isotropic `f1`, `f2` with `S(f1, f2) = −1/2`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HyperbolicPair {
    pub f1: QVector,
    pub f2: QVector,
}

impl HyperbolicPair {
    pub fn new(space: &QuadSpace, f1: QVector, f2: QVector) -> Result<Self> {
        let ok = space.quadratic(&f1)?.is_zero()
            && space.quadratic(&f2)?.is_zero()
            && space.bilinear(&f1, &f2)? == rational::rat(-1, 2);
        if !ok {
            return Err(Error::NotHyperbolicExtension);
        }
        Ok(HyperbolicPair { f1, f2 })
    }
}
