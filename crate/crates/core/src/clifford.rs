//! The universal Clifford algebra `C(V)` of a rational quadratic space,
//! defined by `v·w + w·v = −2S(v, w)` (so `v² = −q(v)`).
//!
//! Elements are expanded on the normal-ordered monomials
//! `e_I = g_{i_1}·…·g_{i_s}` with `i_1 < … < i_s` in the generators `g_i` of
//! the space. These are products, not wedges: when the Gram matrix has
//! off-diagonal entries the number of factors of `e_I` is only a filtration
//! degree, but parity is preserved by the product.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactform::{Isometry, QVector, QuadSpace, SquarefreeClass};
use crate::matrix::RatMatrix;
use crate::rational::{self, Rational};

/// Default cap on `dim V` for dense solves in the `2^dim`-dimensional algebra.
pub const DENSE_DIM_LIMIT: usize = 10;

/// The monomial `e_I`, stored as the bitmask of `I`.
///
/// Ordered lexicographically by ascending index lists, so `1 < e_0 < e_{0,1}
/// < e_{0,1,2} < e_{0,2} < e_1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Blade(u64);

impl Blade {
    pub const ONE: Blade = Blade(0);

    pub fn from_bits(bits: u64) -> Self {
        Blade(bits)
    }

    /// From a strictly increasing index list; `None` otherwise or when an
    /// index is 64 or more.
    pub fn from_indices(indices: &[usize]) -> Option<Self> {
        let mut bits = 0u64;
        let mut last = None;
        for &i in indices {
            if i >= 64 || last.is_some_and(|l| l >= i) {
                return None;
            }
            bits |= 1 << i;
            last = Some(i);
        }
        Some(Blade(bits))
    }

    pub fn generator(i: usize) -> Self {
        assert!(i < 64);
        Blade(1 << i)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_even(self) -> bool {
        self.grade().is_multiple_of(2)
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn indices(self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        core::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i)
        })
    }

    fn max_index(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    fn without(self, i: usize) -> Self {
        Blade(self.0 & !(1 << i))
    }

    fn with(self, i: usize) -> Self {
        Blade(self.0 | 1 << i)
    }
}

impl Ord for Blade {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.0 == other.0 {
            return Ordering::Equal;
        }
        // index lists agree below the lowest differing index t
        let t = (self.0 ^ other.0).trailing_zeros();
        let above = if t == 63 { 0 } else { !0u64 << (t + 1) };
        let (lacks, flip) = if self.0 >> t & 1 == 1 { (other.0, false) } else { (self.0, true) };
        let ord = if lacks & above != 0 { Ordering::Less } else { Ordering::Greater };
        if flip {
            ord.reverse()
        } else {
            ord
        }
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("1");
        }
        f.write_str("e")?;
        for (n, i) in self.iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

type Terms = BTreeMap<Blade, Rational>;

fn accumulate(out: &mut Terms, b: Blade, c: Rational) {
    if c.is_zero() {
        return;
    }
    match out.entry(b) {
        alloc::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        alloc::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Product rules for the monomials of one space.
struct Rules<'a> {
    gram: &'a RatMatrix,
    diagonal: bool,
}

impl<'a> Rules<'a> {
    fn new(space: &'a QuadSpace) -> Self {
        Rules {
            gram: space.gram(),
            diagonal: space.is_diagonal(),
        }
    }

    /// Adds `c · e_a · e_b` to `out`.
    fn blade_product(&self, a: Blade, b: Blade, c: &Rational, out: &mut Terms) {
        if self.diagonal {
            let mut swaps = 0u32;
            for j in b.iter() {
                swaps += (a.0 >> j >> 1).count_ones();
            }
            let mut coeff = if swaps.is_multiple_of(2) { c.clone() } else { -c };
            for i in Blade(a.0 & b.0).iter() {
                coeff *= -&self.gram[(i, i)];
            }
            accumulate(out, Blade(a.0 ^ b.0), coeff);
            return;
        }
        if a.max_index().is_none_or(|m| b.0 & (2u64 << m).wrapping_sub(1) == 0) {
            // every index of b exceeds every index of a
            accumulate(out, Blade(a.0 | b.0), c.clone());
            return;
        }
        let mut acc: Terms = BTreeMap::new();
        acc.insert(a, c.clone());
        for k in b.iter() {
            let mut next = BTreeMap::new();
            for (j, cj) in acc {
                self.times_generator(j, k, cj, &mut next);
            }
            acc = next;
        }
        for (j, cj) in acc {
            accumulate(out, j, cj);
        }
    }

    /// Adds `c · e_I · g_k` to `out`, normal ordering with
    /// `g_j g_k = −g_k g_j − 2S(g_j, g_k)`.
    fn times_generator(&self, i: Blade, k: usize, c: Rational, out: &mut Terms) {
        match i.max_index() {
            Some(j) if j >= k => {
                let rest = i.without(j);
                if j == k {
                    accumulate(out, rest, -c * &self.gram[(k, k)]);
                    return;
                }
                let s = &self.gram[(j, k)];
                if !s.is_zero() {
                    accumulate(out, rest, -rational::int(2) * s * &c);
                }
                let mut tmp = BTreeMap::new();
                self.times_generator(rest, k, -c, &mut tmp);
                // every blade of e_rest·g_k has indices below j
                for (b, v) in tmp {
                    accumulate(out, b.with(j), v);
                }
            }
            _ => accumulate(out, i.with(k), c),
        }
    }

    fn product(&self, x: &Terms, y: &Terms) -> Terms {
        let mut out = BTreeMap::new();
        for (a, ca) in x {
            for (b, cb) in y {
                self.blade_product(*a, *b, &(ca * cb), &mut out);
            }
        }
        out
    }
}

/// An element of `C(V)`.
#[derive(Clone)]
pub struct Multivector {
    space: Arc<QuadSpace>,
    terms: Terms,
}

fn check_space(space: &QuadSpace) -> Result<()> {
    if space.dim() > 64 {
        return Err(Error::TooManyGenerators(space.dim()));
    }
    Ok(())
}

impl Multivector {
    pub fn zero(space: &Arc<QuadSpace>) -> Self {
        Multivector {
            space: space.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(space: &Arc<QuadSpace>, c: Rational) -> Self {
        Self::from_terms(space, [(Blade::ONE, c)]).expect("scalar blade is always valid")
    }

    pub fn one(space: &Arc<QuadSpace>) -> Self {
        Self::scalar(space, Rational::one())
    }

    /// `g_i`.
    pub fn generator(space: &Arc<QuadSpace>, i: usize) -> Result<Self> {
        Self::from_terms(space, [(Blade::from_indices(&[i]).ok_or(Error::TooManyGenerators(i + 1))?, Rational::one())])
    }

    pub fn blade(space: &Arc<QuadSpace>, b: Blade) -> Result<Self> {
        Self::from_terms(space, [(b, Rational::one())])
    }

    /// The image `Σ v_i g_i` of a vector.
    pub fn vector(space: &Arc<QuadSpace>, v: &QVector) -> Result<Self> {
        if v.len() != space.dim() {
            return Err(Error::DimensionMismatch {
                expected: space.dim(),
                found: v.len(),
            });
        }
        Self::from_terms(space, v.coords().iter().enumerate().map(|(i, c)| (Blade::generator(i), c.clone())))
    }

    pub fn from_terms(space: &Arc<QuadSpace>, terms: impl IntoIterator<Item = (Blade, Rational)>) -> Result<Self> {
        check_space(space)?;
        let n = space.dim();
        let mut out = BTreeMap::new();
        for (b, c) in terms {
            if b.max_index().is_some_and(|m| m >= n) {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: b.max_index().unwrap() + 1,
                });
            }
            accumulate(&mut out, b, c);
        }
        Ok(Multivector {
            space: space.clone(),
            terms: out,
        })
    }

    /// `v_1 · … · v_k`.
    pub fn product_of_vectors(space: &Arc<QuadSpace>, vs: &[QVector]) -> Result<Self> {
        let mut x = Self::one(space);
        for v in vs {
            x = x.multiply(&Self::vector(space, v)?)?;
        }
        Ok(x)
    }

    /// The normal ordering of the generator word `g_{w_1} · … · g_{w_k}`.
    pub fn word(space: &Arc<QuadSpace>, word: &[usize]) -> Result<Self> {
        let mut x = Self::one(space);
        for &i in word {
            x = x.multiply(&Self::generator(space, i)?)?;
        }
        Ok(x)
    }

    pub fn space(&self) -> &Arc<QuadSpace> {
        &self.space
    }

    /// The image under the algebra map `C(V) → C(V')` induced by the
    /// isometry sending `g_i` to `images[i]`.
    pub fn transport(&self, target: &Arc<QuadSpace>, images: &[QVector]) -> Result<Self> {
        let n = self.space.dim();
        if images.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: images.len(),
            });
        }
        for i in 0..n {
            for j in 0..n {
                if target.bilinear(&images[i], &images[j])? != self.space.gram()[(i, j)] {
                    return Err(Error::NotIsometry);
                }
            }
        }
        let gens: Vec<Multivector> = images.iter().map(|v| Self::vector(target, v)).collect::<Result<_>>()?;
        let mut out = Self::zero(target);
        for (b, c) in &self.terms {
            let mut m = Self::scalar(target, c.clone());
            for i in b.iter() {
                m = m.multiply(&gens[i])?;
            }
            out = out.try_add(&m)?;
        }
        Ok(out)
    }

    pub fn same_space(&self, other: &Multivector) -> bool {
        Arc::ptr_eq(&self.space, &other.space) || self.space == other.space
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, b: Blade) -> Rational {
        self.terms.get(&b).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scalar_part(&self) -> Rational {
        self.coefficient(Blade::ONE)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_scalar(&self) -> Option<Rational> {
        self.terms.keys().all(|b| *b == Blade::ONE).then(|| self.scalar_part())
    }

    pub fn is_scalar(&self) -> bool {
        self.as_scalar().is_some()
    }

    /// The coordinates when `self` lies in `V`.
    pub fn as_vector(&self) -> Option<QVector> {
        let mut v = QVector::zeros(self.space.dim());
        for (b, c) in &self.terms {
            if b.grade() != 1 {
                return None;
            }
            v.0[b.iter().next().unwrap()] = c.clone();
        }
        Some(v)
    }

    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|b| b.is_even())
    }

    pub fn is_odd(&self) -> bool {
        self.terms.keys().all(|b| !b.is_even())
    }

    pub fn even_part(&self) -> Self {
        self.filter(|b| b.is_even())
    }

    pub fn odd_part(&self) -> Self {
        self.filter(|b| !b.is_even())
    }

    fn filter(&self, keep: impl Fn(Blade) -> bool) -> Self {
        Multivector {
            space: self.space.clone(),
            terms: self.terms.iter().filter(|(b, _)| keep(**b)).map(|(b, c)| (*b, c.clone())).collect(),
        }
    }

    fn with_terms(&self, terms: Terms) -> Self {
        Multivector {
            space: self.space.clone(),
            terms,
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero(&self.space);
        }
        self.with_terms(self.terms.iter().map(|(b, c)| (*b, c * s)).collect())
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(rational::is_integer)
    }

    pub fn multiply(&self, other: &Multivector) -> Result<Self> {
        if !self.same_space(other) {
            return Err(Error::SpaceMismatch);
        }
        Ok(self.with_terms(Rules::new(&self.space).product(&self.terms, &other.terms)))
    }

    pub fn try_add(&self, other: &Multivector) -> Result<Self> {
        if !self.same_space(other) {
            return Err(Error::SpaceMismatch);
        }
        let mut out = self.terms.clone();
        for (b, c) in &other.terms {
            accumulate(&mut out, *b, c.clone());
        }
        Ok(self.with_terms(out))
    }

    /// `x ↦ x′`, the automorphism extending `v ↦ −v`.
    pub fn grade_involution(&self) -> Self {
        self.with_terms(self.terms.iter().map(|(b, c)| (*b, if b.is_even() { c.clone() } else { -c })).collect())
    }

    /// `x ↦ x*`, the anti-automorphism extending `v ↦ v`.
    ///
    /// `e_I* = g_{i_s} · … · g_{i_1}`. On an orthogonal basis this is the sign
    /// `(−1)^{s(s−1)/2}`; otherwise the reversed word is normal ordered again.
    pub fn reversion(&self) -> Self {
        let rules = Rules::new(&self.space);
        let mut out = BTreeMap::new();
        for (b, c) in &self.terms {
            let s = b.grade();
            if rules.diagonal || s < 2 {
                let sign = if (s * (s.saturating_sub(1)) / 2) % 2 == 0 { c.clone() } else { -c };
                accumulate(&mut out, *b, sign);
                continue;
            }
            let mut acc: Terms = BTreeMap::new();
            acc.insert(Blade::ONE, c.clone());
            for k in b.indices().into_iter().rev() {
                let mut next = BTreeMap::new();
                for (j, cj) in acc {
                    rules.times_generator(j, k, cj, &mut next);
                }
                acc = next;
            }
            for (j, cj) in acc {
                accumulate(&mut out, j, cj);
            }
        }
        self.with_terms(out)
    }

    /// `x̄ = (x′)*`, the anti-automorphism extending `v ↦ −v`.
    pub fn conjugation(&self) -> Self {
        self.grade_involution().reversion()
    }

    /// `x·x̄`, when it is a scalar.
    pub fn norm_n(&self) -> Result<Rational> {
        self.multiply(&self.conjugation())?.as_scalar().ok_or(Error::NormNotScalar)
    }

    pub fn inverse(&self) -> Result<Self> {
        self.inverse_with_limit(DENSE_DIM_LIMIT)
    }

    /// Two-sided inverse. Uses `x⁻¹ = x̄/λ` when `x·x̄ = x̄·x = λ` is a
    /// nonzero scalar, and otherwise solves `L_x · y = 1` for the left-regular
    /// matrix `L_x`, provided `dim V ≤ limit`.
    pub fn inverse_with_limit(&self, limit: usize) -> Result<Self> {
        let bar = self.conjugation();
        let left = self.multiply(&bar)?.as_scalar();
        if let Some(l) = left.filter(|l| !l.is_zero()) {
            if bar.multiply(self)?.as_scalar().as_ref() == Some(&l) {
                return Ok(bar.scale(&(Rational::one() / l)));
            }
        }
        if self.is_zero() {
            return Err(Error::NotInvertible);
        }
        let n = self.space.dim();
        if n > limit {
            return Err(Error::TooLarge { dim: n, limit });
        }
        let size = 1usize << n;
        let rules = Rules::new(&self.space);
        let mut columns = Vec::with_capacity(size);
        for bits in 0..size {
            let mut col = vec![Rational::zero(); size];
            let e = [(Blade(bits as u64), Rational::one())].into_iter().collect();
            for (b, c) in rules.product(&self.terms, &e) {
                col[b.0 as usize] = c;
            }
            columns.push(col);
        }
        let l = RatMatrix::from_columns(size, &columns);
        let mut rhs = vec![Rational::zero(); size];
        rhs[0] = Rational::one();
        let y = l.solve(&rhs)?;
        let inv = self.with_terms(
            y.into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (Blade(i as u64), c))
                .collect(),
        );
        if inv.multiply(self)?.as_scalar() != Some(Rational::one()) {
            return Err(Error::Internal("left inverse is not a right inverse".into()));
        }
        Ok(inv)
    }

    /// Columns `act(g_i)` as an isometry candidate, or `None` when some image
    /// leaves `V`.
    fn action_matrix(&self, act: impl Fn(&Multivector) -> Result<Multivector>) -> Result<Option<RatMatrix>> {
        let n = self.space.dim();
        let mut columns = Vec::with_capacity(n);
        for i in 0..n {
            match act(&Self::generator(&self.space, i)?)?.as_vector() {
                Some(v) => columns.push(v.0),
                None => return Ok(None),
            }
        }
        Ok(Some(RatMatrix::from_columns(n, &columns)))
    }

    fn twisted_action(&self) -> Result<Option<RatMatrix>> {
        let inv = self.grade_involution().inverse()?;
        self.action_matrix(|g| self.multiply(g)?.multiply(&inv))
    }

    /// Whether `x` is a unit with `x·v·(x′)⁻¹ ∈ V` for every `v ∈ V`.
    ///
    /// On a nonsingular space `Γ(V)` is generated by scalars and
    /// non-isotropic vectors, so `x·x̄` must be a nonzero scalar and no dense
    /// solve is needed.
    pub fn in_clifford_group(&self) -> Result<bool> {
        if self.space.is_nonsingular() {
            match self.multiply(&self.conjugation())?.as_scalar() {
                Some(l) if !l.is_zero() => {}
                _ => return Ok(false),
            }
        }
        match self.twisted_action() {
            Ok(m) => Ok(m.is_some()),
            Err(Error::NotInvertible) => Ok(false),
            Err(e) => Err(e),
        }
    }

    /// `ρ(x): v ↦ x·v·(x′)⁻¹`.
    pub fn rho(&self) -> Result<Isometry> {
        match self.twisted_action()? {
            Some(m) => Ok(Isometry::from_matrix_unchecked(m)),
            None => Err(Error::NotInCliffordGroup),
        }
    }

    /// `χ(x): v ↦ x·v·x⁻¹`.
    pub fn chi(&self) -> Result<Isometry> {
        let inv = self.inverse()?;
        match self.action_matrix(|g| self.multiply(g)?.multiply(&inv))? {
            Some(m) => Ok(Isometry::from_matrix_unchecked(m)),
            None => Err(Error::NotInCliffordGroup),
        }
    }

    /// `x ∈ Γ(V)` with `N(x) = 1`.
    pub fn pin_plus_member(&self) -> bool {
        self.in_clifford_group().unwrap_or(false) && self.norm_n().is_ok_and(|n| n.is_one())
    }

    pub fn spin_plus_member(&self) -> bool {
        self.is_even() && self.pin_plus_member()
    }

    /// Whether `x` lies in the order spanned over ℤ by the monomials `e_I`.
    ///
    /// That span is a ring exactly when every `q(g_i)` and `2S(g_i, g_j)` is
    /// an integer, which holds for `V^{1/2}` of a simply-laced root lattice
    /// and its hyperbolic extensions.
    pub fn order_member(&self) -> Result<bool> {
        let g = self.space.gram();
        let n = self.space.dim();
        for i in 0..n {
            for j in 0..n {
                let v = if i == j { g[(i, i)].clone() } else { rational::int(2) * &g[(i, j)] };
                if !rational::is_integer(&v) {
                    return Err(Error::UnsupportedOrder);
                }
            }
        }
        Ok(self.is_integral())
    }
}

/// A basis of the center `Z(C(V))`, by solving `g_i·x = x·g_i` for all `i`.
pub fn center(space: &Arc<QuadSpace>) -> Result<Vec<Multivector>> {
    check_space(space)?;
    let n = space.dim();
    if n > DENSE_DIM_LIMIT {
        return Err(Error::TooLarge {
            dim: n,
            limit: DENSE_DIM_LIMIT,
        });
    }
    let size = 1usize << n;
    let rules = Rules::new(space);
    let mut columns = Vec::with_capacity(size);
    for bits in 0..size {
        let e: Terms = [(Blade(bits as u64), Rational::one())].into_iter().collect();
        let mut col = vec![Rational::zero(); n * size];
        for i in 0..n {
            let g: Terms = [(Blade::generator(i), Rational::one())].into_iter().collect();
            let mut comm = rules.product(&g, &e);
            for (b, c) in rules.product(&e, &g) {
                accumulate(&mut comm, b, -c);
            }
            for (b, c) in comm {
                col[i * size + b.0 as usize] = c;
            }
        }
        columns.push(col);
    }
    let m = RatMatrix::from_columns(n * size, &columns);
    let m = if n == 0 { RatMatrix::zeros(0, 1) } else { m };
    Ok(m.nullspace()
        .into_iter()
        .map(|v| Multivector {
            space: space.clone(),
            terms: v
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (Blade(i as u64), c))
                .collect(),
        })
        .collect())
}

impl PartialEq for Multivector {
    fn eq(&self, other: &Self) -> bool {
        self.same_space(other) && self.terms == other.terms
    }
}

impl Eq for Multivector {}

impl core::hash::Hash for Multivector {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl PartialOrd for Multivector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Multivector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.terms.cmp(&other.terms)
    }
}

/// Panics when the operands live over different spaces.
impl Mul for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        self.multiply(rhs).expect("multivectors over the same space")
    }
}

/// Panics when the operands live over different spaces.
impl Add for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        self.try_add(rhs).expect("multivectors over the same space")
    }
}

/// Panics when the operands live over different spaces.
impl Sub for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        self.try_add(&-rhs).expect("multivectors over the same space")
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.with_terms(self.terms.iter().map(|(b, c)| (*b, -c)).collect())
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (b, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            if *b == Blade::ONE {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*{b:?}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// An element of `Γ(V)`, optionally certified by mirrors `v_1, …, v_m` with
/// `value = v_1 · … · v_m`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupElement {
    value: Multivector,
    mirrors: Option<Vec<QVector>>,
}

impl GroupElement {
    pub fn from_mirrors(space: &Arc<QuadSpace>, mirrors: Vec<QVector>) -> Result<Self> {
        for v in &mirrors {
            if space.quadratic(v)?.is_zero() {
                return Err(Error::IsotropicMirror);
            }
        }
        Ok(GroupElement {
            value: Multivector::product_of_vectors(space, &mirrors)?,
            mirrors: Some(mirrors),
        })
    }

    /// Checks membership with the generator test.
    pub fn from_value(value: Multivector) -> Result<Self> {
        if !value.in_clifford_group()? {
            return Err(Error::NotInCliffordGroup);
        }
        Ok(GroupElement { value, mirrors: None })
    }

    pub fn value(&self) -> &Multivector {
        &self.value
    }

    pub fn mirrors(&self) -> Option<&[QVector]> {
        self.mirrors.as_deref()
    }

    pub fn is_certified(&self) -> bool {
        self.mirrors.is_some()
    }

    /// `ρ` from the mirrors as `r_{v_1} ∘ … ∘ r_{v_m}` when certified.
    pub fn rho(&self) -> Result<Isometry> {
        match &self.mirrors {
            Some(ms) => self.value.space().compose_reflections(ms),
            None => self.value.rho(),
        }
    }

    /// `N(x)`; `∏ q(v_i)` when certified.
    pub fn norm(&self) -> Result<Rational> {
        match &self.mirrors {
            Some(ms) => {
                let mut p = Rational::one();
                for v in ms {
                    p *= self.value.space().quadratic(v)?;
                }
                Ok(p)
            }
            None => self.value.norm_n(),
        }
    }

    pub fn spinor_norm(&self) -> Result<SquarefreeClass> {
        SquarefreeClass::of(&self.norm()?)
    }

    pub fn compose(&self, other: &GroupElement) -> Result<Self> {
        let mirrors = match (&self.mirrors, &other.mirrors) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).cloned().collect()),
            _ => None,
        };
        Ok(GroupElement {
            value: self.value.multiply(&other.value)?,
            mirrors,
        })
    }

    /// Compares the mirror route against the conjugation route for `ρ` and
    /// `N`; uncertified elements trivially agree.
    pub fn verify(&self) -> Result<bool> {
        if self.mirrors.is_none() {
            return Ok(true);
        }
        let nv = self.value.norm_n()?;
        Ok(self.rho()? == self.value.rho()? && self.norm()? == nv)
    }
}
