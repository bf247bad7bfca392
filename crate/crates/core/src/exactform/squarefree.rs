//! Canonical representatives of `ℚ^× / ℚ^×²`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A nonzero signed squarefree integer. Spinor norms take values here.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquarefreeClass(BigInt);

impl SquarefreeClass {
    pub fn one() -> Self {
        SquarefreeClass(BigInt::one())
    }

    /// The class of `x` modulo nonzero squares: the squarefree part of
    /// `numerator · denominator` with the sign of `x`.
    pub fn of(x: &Rational) -> Result<Self> {
        if x.is_zero() {
            return Err(Error::ZeroClass);
        }
        let n = x.numer() * x.denom();
        let sign = n.sign();
        let part = squarefree_part(n.magnitude().clone());
        Ok(SquarefreeClass(BigInt::from_biguint(sign, part)))
    }

    /// Wraps an integer that is already squarefree; `None` otherwise.
    pub fn from_squarefree(v: BigInt) -> Option<Self> {
        if v.is_zero() {
            return None;
        }
        (squarefree_part(v.magnitude().clone()) == *v.magnitude()).then_some(SquarefreeClass(v))
    }

    pub fn value(&self) -> &BigInt {
        &self.0
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.0.to_i64()
    }

    pub fn is_trivial(&self) -> bool {
        self.0.is_one()
    }
}

impl Mul for &SquarefreeClass {
    type Output = SquarefreeClass;
    fn mul(self, rhs: &SquarefreeClass) -> SquarefreeClass {
        SquarefreeClass::of(&Rational::from_integer(&self.0 * &rhs.0)).expect("nonzero product")
    }
}

impl fmt::Display for SquarefreeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for SquarefreeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SquarefreeClass({})", self.0)
    }
}

const TRIAL_LIMIT: u32 = 1 << 12;

/// Product of the primes dividing `n` to an odd power.
pub(crate) fn squarefree_part(mut n: BigUint) -> BigUint {
    let mut out = BigUint::one();
    if n.is_zero() {
        return out;
    }
    let mut p = 2u32;
    while p < TRIAL_LIMIT {
        let bp = BigUint::from(p);
        if &bp * &bp > n {
            break;
        }
        let mut odd = false;
        while (&n % &bp).is_zero() {
            n /= &bp;
            odd = !odd;
        }
        if odd {
            out *= &bp;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n.is_one() {
        return out;
    }
    // every remaining prime factor is >= p, so small cofactors are prime
    let bp = BigUint::from(p);
    if &bp * &bp > n {
        return out * n;
    }
    let mut exps: BTreeMap<BigUint, u32> = BTreeMap::new();
    for f in factor(n) {
        *exps.entry(f).or_insert(0) += 1;
    }
    for (f, e) in exps {
        if e % 2 == 1 {
            out *= f;
        }
    }
    out
}

/// Prime factors with multiplicity (unordered).
fn factor(n: BigUint) -> Vec<BigUint> {
    let mut out = Vec::new();
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            out.push(m);
            continue;
        }
        let r = m.sqrt();
        if &r * &r == m {
            stack.push(r.clone());
            stack.push(r);
            continue;
        }
        let d = pollard_brent(&m);
        stack.push(&m / &d);
        stack.push(d);
    }
    out
}

/// Miller–Rabin with the first twelve prime bases; deterministic below
/// 3.3·10²⁴.
fn is_probable_prime(n: &BigUint) -> bool {
    const BASES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    for b in BASES {
        let b = BigUint::from(b);
        if *n == b {
            return true;
        }
        if (n % &b).is_zero() {
            return false;
        }
    }
    let n1 = n - 1u32;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    'bases: for b in BASES {
        let mut x = BigUint::from(b).modpow(&d, n);
        if x.is_one() || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// A nontrivial factor of the odd composite non-square `n`.
fn pollard_brent(n: &BigUint) -> BigUint {
    if n.is_even() {
        return BigUint::from(2u32);
    }
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut x = BigUint::from(2u32);
        let mut y = x.clone();
        let mut d = BigUint::one();
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            d = diff.gcd(n);
        }
        if &d != n {
            return d;
        }
        c += 1u32;
    }
}
