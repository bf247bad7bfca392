//! Generalized Cartan matrices, finite types, and the Lorentzian double
//! extensions `T_n⁺⁺`.
//!
//! Convention: `c_ij = 2κ(α_i, α_j) / κ(α_i, α_i)`, so a short root `α_i`
//! next to a long one carries the `−2` (or `−3`) in row `i`, and the
//! symmetrization is `B = D·C` with `(D·C)_ij = ε_i c_ij`.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactform::{HyperbolicPair, Isometry, QVector, QuadSpace, Signature};
use crate::matrix::RatMatrix;
use crate::rational::{self, Rational};

/// A square integer matrix with row/column labels.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CartanMatrix {
    labels: Vec<String>,
    entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    /// Validates the generalized Cartan matrix axioms.
    pub fn new(labels: Vec<String>, entries: Vec<Vec<i64>>) -> Result<Self> {
        if labels.len() != entries.len() {
            return Err(Error::InvalidCartan(format!("{} labels for {} rows", labels.len(), entries.len())));
        }
        let m = CartanMatrix { labels, entries };
        if m.entries.iter().any(|r| r.len() != m.entries.len()) {
            return Err(Error::NotSquare);
        }
        if let Some(why) = m.violation() {
            return Err(Error::InvalidCartan(why));
        }
        Ok(m)
    }

    /// Labels `1..=n`.
    pub fn from_entries(entries: Vec<Vec<i64>>) -> Result<Self> {
        let labels = (1..=entries.len()).map(|i| i.to_string()).collect();
        Self::new(labels, entries)
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    fn violation(&self) -> Option<String> {
        let n = self.rank();
        for i in 0..n {
            if self.entries[i][i] != 2 {
                return Some(format!("diagonal entry {i} is not 2"));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if self.entries[i][j] > 0 {
                    return Some(format!("entry ({i}, {j}) is positive"));
                }
                if (self.entries[i][j] == 0) != (self.entries[j][i] == 0) {
                    return Some(format!("entries ({i}, {j}) and ({j}, {i}) are not both zero"));
                }
            }
        }
        None
    }

    /// The principal submatrix on `keep`, labels carried along.
    pub fn submatrix(&self, keep: &[usize]) -> CartanMatrix {
        CartanMatrix {
            labels: keep.iter().map(|&i| self.labels[i].clone()).collect(),
            entries: keep.iter().map(|&i| keep.iter().map(|&j| self.entries[i][j]).collect()).collect(),
        }
    }

    /// Connected components of the Dynkin diagram on the vertex subset.
    fn components(&self, vertices: &[usize]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.rank()];
        let inside: Vec<bool> = (0..self.rank()).map(|i| vertices.contains(&i)).collect();
        let mut out = Vec::new();
        for &s in vertices {
            if seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([s]);
            seen[s] = true;
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for w in 0..self.rank() {
                    if inside[w] && !seen[w] && self.entries[v][w] != 0 {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_irreducible(&self) -> bool {
        let all: Vec<usize> = (0..self.rank()).collect();
        self.components(&all).len() <= 1
    }

    pub fn permuted(&self, perm: &[usize]) -> CartanMatrix {
        self.submatrix(perm)
    }
}

impl fmt::Display for CartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x:>2}")?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

/// The three generalized Cartan matrix axioms.
pub fn is_gcm(entries: &[Vec<i64>]) -> bool {
    entries.iter().all(|r| r.len() == entries.len())
        && CartanMatrix {
            labels: vec![String::new(); entries.len()],
            entries: entries.to_vec(),
        }
        .violation()
        .is_none()
}

/// `D = diag(ε_i)` with positive coprime integers and `B = D·C` symmetric.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Symmetrization {
    pub d: Vec<i64>,
    pub b: Vec<Vec<i64>>,
}

impl Symmetrization {
    pub fn b_matrix(&self) -> RatMatrix {
        let n = self.d.len();
        RatMatrix::from_fn(n, n, |i, j| rational::int(self.b[i][j]))
    }
}

/// Propagates `ε_j = ε_i c_ij / c_ji` along the diagram and normalizes.
pub fn symmetrize(c: &CartanMatrix) -> Result<Symmetrization> {
    let n = c.rank();
    if !c.is_irreducible() {
        return Err(Error::Reducible);
    }
    let mut eps: Vec<Option<Rational>> = vec![None; n];
    if n > 0 {
        eps[0] = Some(Rational::one());
    }
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        if n == 0 {
            break;
        }
        let ei = eps[i].clone().expect("visited");
        for (j, slot) in eps.iter_mut().enumerate() {
            if i == j || c.get(i, j) == 0 {
                continue;
            }
            let ej = &ei * rational::int(c.get(i, j)) / rational::int(c.get(j, i));
            match slot {
                Some(existing) if *existing != ej => return Err(Error::NotSymmetrizable),
                Some(_) => {}
                None => {
                    *slot = Some(ej);
                    queue.push_back(j);
                }
            }
        }
    }
    let eps: Vec<Rational> = eps.into_iter().map(|e| e.expect("connected")).collect();
    let lcm = eps.iter().fold(num_bigint::BigInt::one(), |acc, e| acc.lcm(e.denom()));
    let ints: Vec<num_bigint::BigInt> = eps.iter().map(|e| (e * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(num_bigint::BigInt::zero(), |acc, x| acc.gcd(x));
    let d: Vec<i64> = ints
        .iter()
        .map(|x| i64::try_from(x / &g).map_err(|_| Error::InvalidCartan("symmetrizer overflows i64".into())))
        .collect::<Result<_>>()?;
    let b: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| d[i] * c.get(i, j)).collect()).collect();
    if (0..n).any(|i| (0..n).any(|j| b[i][j] != b[j][i])) {
        return Err(Error::NotSymmetrizable);
    }
    Ok(Symmetrization { d, b })
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Kind {
    Finite,
    Affine,
    Indefinite,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Classification {
    pub kind: Kind,
    /// Exactly one negative and no zero eigenvalue of `B`.
    pub lorentzian: bool,
    /// Indefinite, and every proper connected subdiagram is finite or affine.
    pub hyperbolic: bool,
    pub signature: Signature,
}

fn kind_of(c: &CartanMatrix) -> Result<(Kind, Signature)> {
    let sym = symmetrize(c)?;
    let sig = QuadSpace::new(sym.b_matrix())?.signature();
    let kind = match (sig.neg, sig.zero) {
        (0, 0) => Kind::Finite,
        (0, 1) => Kind::Affine,
        _ => Kind::Indefinite,
    };
    Ok((kind, sig))
}

pub fn classify(c: &CartanMatrix) -> Result<Classification> {
    let (kind, signature) = kind_of(c)?;
    let mut hyperbolic = kind == Kind::Indefinite;
    if hyperbolic {
        'outer: for v in 0..c.rank() {
            let rest: Vec<usize> = (0..c.rank()).filter(|&i| i != v).collect();
            for comp in c.components(&rest) {
                if kind_of(&c.submatrix(&comp))?.0 == Kind::Indefinite {
                    hyperbolic = false;
                    break 'outer;
                }
            }
        }
    }
    Ok(Classification {
        kind,
        lorentzian: signature.is_lorentzian(),
        hyperbolic,
        signature,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// An irreducible finite root system `T_n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct FiniteType {
    family: Family,
    rank: usize,
}

impl FiniteType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(Error::InvalidType {
                family: family.letter(),
                rank,
            });
        }
        Ok(FiniteType { family, rank })
    }

    /// Parses names like `A2`, `d4`, `E8`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(|| Error::InvalidCartan("empty type name".into()))?;
        let family = Family::from_letter(letter).ok_or_else(|| Error::InvalidCartan(format!("unknown family {letter}")))?;
        let rank = chars
            .as_str()
            .parse()
            .map_err(|_| Error::InvalidCartan(format!("bad rank in {s}")))?;
        Self::new(family, rank)
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    pub fn name(self) -> String {
        format!("{}{}", self.family.letter(), self.rank)
    }

    /// Labels `1..=n`; chains are numbered from one end, the branch node of
    /// `D_n` is `n−2`, and the extra node of `E_n` is `n`.
    pub fn cartan_matrix(self) -> CartanMatrix {
        let n = self.rank;
        let mut c = vec![vec![0i64; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            c[i - 1][j - 1] = -1;
            c[j - 1][i - 1] = -1;
        };
        match self.family {
            Family::A | Family::B | Family::C | Family::F | Family::G => {
                for i in 1..n {
                    link(i, i + 1);
                }
            }
            Family::D => {
                for i in 1..n - 1 {
                    link(i, i + 1);
                }
                link(n - 2, n);
            }
            Family::E => {
                let branch = if n == 8 { 5 } else { 3 };
                for i in 1..n - 1 {
                    link(i, i + 1);
                }
                link(branch, n);
            }
        }
        match self.family {
            Family::B => c[n - 1][n - 2] = -2,
            Family::C => c[n - 2][n - 1] = -2,
            Family::F => c[2][1] = -2,
            Family::G => c[1][0] = -3,
            _ => {}
        }
        CartanMatrix::from_entries(c).expect("finite type matrices satisfy the axioms")
    }

    /// Coefficients of the highest root and `m = κ(θ, θ)`.
    pub fn highest_root(self) -> (Vec<i64>, i64) {
        let n = self.rank;
        let theta: Vec<i64> = match self.family {
            Family::A => vec![1; n],
            Family::B => (0..n).map(|i| if i == 0 { 1 } else { 2 }).collect(),
            Family::C => (0..n).map(|i| if i + 1 == n { 1 } else { 2 }).collect(),
            Family::D => (0..n).map(|i| if i == 0 || i + 2 >= n { 1 } else { 2 }).collect(),
            Family::E => match n {
                6 => vec![1, 2, 3, 2, 1, 2],
                7 => vec![2, 3, 4, 3, 2, 1, 2],
                _ => vec![2, 3, 4, 5, 6, 4, 2, 3],
            },
            Family::F => vec![2, 3, 4, 2],
            Family::G => vec![2, 3],
        };
        let sym = symmetrize(&self.cartan_matrix()).expect("finite types are symmetrizable");
        let m = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| theta[i] * sym.b[i][j] * theta[j])
            .sum();
        (theta, m)
    }

    pub fn double_extend(self) -> ExtensionSpec {
        ExtensionSpec::build(self)
    }
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// `T_n⁺⁺`: the lattice `W = V^{1/m} ⊥ P` with simple roots
/// `α₋₁ = f₁ − f₂`, `α₀ = −f₁ − θ`, `α₁, …, α_n`.
///
/// Coordinates on `W` are `(α₁, …, α_n, f₁, f₂)`; simple roots are listed in
/// the order `α₋₁, α₀, α₁, …, α_n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtensionSpec {
    pub base: FiniteType,
    pub theta: Vec<i64>,
    pub m: i64,
    pub space: QuadSpace,
    pub simple_roots: Vec<QVector>,
    pub pair: HyperbolicPair,
    pub cartan: CartanMatrix,
}

impl ExtensionSpec {
    fn build(base: FiniteType) -> Self {
        let n = base.rank();
        let (theta, m) = base.highest_root();
        let sym = symmetrize(&base.cartan_matrix()).expect("finite types are symmetrizable");
        let v = QuadSpace::new(sym.b_matrix()).expect("symmetric").rescale(&rational::rat(1, m)).expect("m > 0");
        let space = v.orthogonal_sum(&QuadSpace::hyperbolic_plane());
        let f1 = QVector::basis(n + 2, n);
        let f2 = QVector::basis(n + 2, n + 1);
        let pair = HyperbolicPair::new(&space, f1.clone(), f2.clone()).expect("P is hyperbolic");
        let mut theta_w = QVector::zeros(n + 2);
        for (i, t) in theta.iter().enumerate() {
            theta_w.0[i] = rational::int(*t);
        }
        let mut simple_roots = vec![&f1 - &f2, &(-&f1) - &theta_w];
        simple_roots.extend((0..n).map(|i| QVector::basis(n + 2, i)));
        let mut labels: Vec<String> = vec!["-1".into(), "0".into()];
        labels.extend((1..=n).map(|i| i.to_string()));
        let entries = pairing_matrix(&space, &simple_roots);
        let cartan = CartanMatrix::new(labels, entries).expect("extension pairing is a generalized Cartan matrix");
        ExtensionSpec {
            base,
            theta,
            m,
            space,
            simple_roots,
            pair,
            cartan,
        }
    }

    pub fn name(&self) -> String {
        format!("{}++", self.base.name())
    }

    /// Columns are the simple roots in `W` coordinates.
    pub fn root_basis(&self) -> RatMatrix {
        RatMatrix::from_columns(self.space.dim(), &self.simple_roots.iter().map(|v| v.0.clone()).collect::<Vec<_>>())
    }

    /// The isometry of `W` with `α_i ↦ α_{perm(i)}`.
    pub fn automorphism_isometry(&self, a: &DiagramAutomorphism) -> Result<Isometry> {
        let r = self.root_basis();
        let n = r.rows();
        if a.perm.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: a.perm.len(),
            });
        }
        let p = RatMatrix::from_fn(n, n, |i, j| if a.perm[j] == i { Rational::one() } else { Rational::zero() });
        let m = &(&r * &p) * &r.inverse()?;
        Isometry::new(&self.space, m)
    }

    /// `r_{α_i}` as a matrix on `W`; `i` indexes [`simple_roots`](Self::simple_roots).
    pub fn simple_reflection(&self, i: usize) -> Isometry {
        self.space.reflection(&self.simple_roots[i]).expect("simple roots are non-isotropic")
    }
}

/// `⟨α_i, α_j⟩ = 2S(α_i, α_j) / S(α_i, α_i)`.
fn pairing_matrix(space: &QuadSpace, roots: &[QVector]) -> Vec<Vec<i64>> {
    roots
        .iter()
        .map(|a| {
            let qa = space.quadratic(a).expect("dimensions agree");
            roots
                .iter()
                .map(|b| {
                    let x = rational::int(2) * space.bilinear(a, b).expect("dimensions agree") / &qa;
                    assert!(rational::is_integer(&x), "non-integral pairing");
                    i64::try_from(x.to_integer()).expect("small pairing")
                })
                .collect()
        })
        .collect()
}

/// A permutation `σ` of the nodes with `c_{σ(i)σ(j)} = c_ij`, stored as
/// `perm[i] = σ(i)` over row indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct DiagramAutomorphism {
    pub perm: Vec<usize>,
}

impl DiagramAutomorphism {
    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// Disjoint cycles in the labels of `c`, e.g. `(1 3 4)`; `()` for the
    /// identity.
    pub fn cycle_notation(&self, labels: &[String]) -> String {
        let mut seen = vec![false; self.perm.len()];
        let mut out = String::new();
        for start in 0..self.perm.len() {
            if seen[start] || self.perm[start] == start {
                continue;
            }
            out.push('(');
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    out.push(' ');
                }
                out.push_str(&labels[i]);
                first = false;
                i = self.perm[i];
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

/// All entry-preserving permutations, by backtracking with row-multiset
/// pruning. The identity comes first.
pub fn diagram_automorphisms(c: &CartanMatrix) -> Vec<DiagramAutomorphism> {
    let n = c.rank();
    let signature = |i: usize| {
        let mut row: Vec<i64> = c.entries[i].clone();
        row.sort_unstable();
        let mut col: Vec<i64> = (0..n).map(|j| c.entries[j][i]).collect();
        col.sort_unstable();
        (row, col)
    };
    let sigs: Vec<_> = (0..n).map(signature).collect();
    let mut out = Vec::new();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    search(c, &sigs, 0, &mut perm, &mut used, &mut out);
    out.sort();
    out
}

fn search<S: PartialEq>(
    c: &CartanMatrix,
    sigs: &[S],
    k: usize,
    perm: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<DiagramAutomorphism>,
) {
    let n = c.rank();
    if k == n {
        out.push(DiagramAutomorphism { perm: perm.clone() });
        return;
    }
    for t in 0..n {
        if used[t] || sigs[t] != sigs[k] {
            continue;
        }
        let consistent = (0..k).all(|i| c.entries[perm[i]][t] == c.entries[i][k] && c.entries[t][perm[i]] == c.entries[k][i]);
        if !consistent {
            continue;
        }
        perm[k] = t;
        used[t] = true;
        search(c, sigs, k + 1, perm, used, out);
        used[t] = false;
        perm[k] = usize::MAX;
    }
}
