//! The grading group `Γ ⊂ ℂ²`, the Cartan part `T = span{∂₁, ∂₂}` and the
//! pairing between them.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::{BasisSym, LieElt};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A degree `α = (α₁, α₂) ∈ Γ`.
///
/// The derived order compares `c1` first, then `c2`, each with the
/// lexicographic order on [`Scalar`]; it is a total order compatible with
/// addition.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Degree {
    pub c1: Scalar,
    pub c2: Scalar,
}

impl Degree {
    pub fn new(c1: Scalar, c2: Scalar) -> Self {
        Degree { c1, c2 }
    }

    /// Integer degree `(p, q)`.
    pub fn int(p: i64, q: i64) -> Self {
        Degree::new(Scalar::from_int(p), Scalar::from_int(q))
    }

    pub fn zero() -> Self {
        Degree::int(0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.c1.is_zero() && self.c2.is_zero()
    }

    /// Positive in the group order: `c1 > 0`, or `c1 = 0` and `c2 > 0`.
    pub fn is_positive(&self) -> bool {
        *self > Degree::zero()
    }

    /// `α₁β₂ − β₁α₂`, the structure constant of `[L_α, L_β]`.
    pub fn det(&self, other: &Degree) -> Scalar {
        &self.c1 * &other.c2 - &other.c1 * &self.c2
    }

    pub fn scale(&self, s: &Scalar) -> Degree {
        Degree::new(&self.c1 * s, &self.c2 * s)
    }

    pub fn coord(&self, i: usize) -> &Scalar {
        match i {
            1 => &self.c1,
            2 => &self.c2,
            _ => panic!("degree coordinate index must be 1 or 2, got {i}"),
        }
    }
}

impl Add<&Degree> for &Degree {
    type Output = Degree;
    fn add(self, rhs: &Degree) -> Degree {
        Degree::new(&self.c1 + &rhs.c1, &self.c2 + &rhs.c2)
    }
}

impl Sub<&Degree> for &Degree {
    type Output = Degree;
    fn sub(self, rhs: &Degree) -> Degree {
        Degree::new(&self.c1 - &rhs.c1, &self.c2 - &rhs.c2)
    }
}

impl Add for Degree {
    type Output = Degree;
    fn add(self, rhs: Degree) -> Degree {
        &self + &rhs
    }
}

impl Sub for Degree {
    type Output = Degree;
    fn sub(self, rhs: Degree) -> Degree {
        &self - &rhs
    }
}

impl Neg for &Degree {
    type Output = Degree;
    fn neg(self) -> Degree {
        Degree::new(-&self.c1, -&self.c2)
    }
}

impl Neg for Degree {
    type Output = Degree;
    fn neg(self) -> Degree {
        -&self
    }
}

/// Degree literal grammar: `(c1;c2)`.
impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};{})", self.c1, self.c2)
    }
}

impl fmt::Debug for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `∂ = a₁∂₁ + a₂∂₂ ∈ T`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CartanElt {
    pub a1: Scalar,
    pub a2: Scalar,
}

impl CartanElt {
    pub fn new(a1: Scalar, a2: Scalar) -> Self {
        CartanElt { a1, a2 }
    }

    pub fn d1() -> Self {
        CartanElt::new(Scalar::one(), Scalar::zero())
    }

    pub fn d2() -> Self {
        CartanElt::new(Scalar::zero(), Scalar::one())
    }

    pub fn is_zero(&self) -> bool {
        self.a1.is_zero() && self.a2.is_zero()
    }

    pub fn to_elt(&self) -> LieElt {
        LieElt::from_terms([
            (BasisSym::D1, self.a1.clone()),
            (BasisSym::D2, self.a2.clone()),
        ])
    }

    /// Reads a Cartan element back from `L(Γ)`; `None` if `x` has an `L_α`
    /// component.
    pub fn from_elt(x: &LieElt) -> Option<Self> {
        let mut out = CartanElt::new(Scalar::zero(), Scalar::zero());
        for (s, c) in x.iter() {
            match s {
                BasisSym::D1 => out.a1 = c.clone(),
                BasisSym::D2 => out.a2 = c.clone(),
                BasisSym::L(_) => return None,
            }
        }
        Some(out)
    }
}

impl fmt::Display for CartanElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_elt())
    }
}

/// `⟨∂, α⟩ = a₁α₁ + a₂α₂`.
pub fn pairing(d: &CartanElt, a: &Degree) -> Scalar {
    &d.a1 * &a.c1 + &d.a2 * &a.c2
}

/// Finds `∂ ∈ T` with `⟨∂, α⟩ ≠ 0` for every listed `α`.
///
/// Tries `∂₁`, `∂₂`, then `∂₁ + k∂₂` for `k = 1, 2, …`. Each nonzero `α`
/// rules out at most one `k`, so the search ends within `|degrees| + 1`
/// candidates after the first two.
pub fn separating_cartan<'a, I>(degrees: I) -> Result<CartanElt>
where
    I: IntoIterator<Item = &'a Degree>,
{
    let degrees: Vec<&Degree> = degrees.into_iter().collect();
    if degrees.iter().any(|a| a.is_zero()) {
        return Err(Error::ZeroDegree);
    }
    let separates = |d: &CartanElt| degrees.iter().all(|a| !pairing(d, a).is_zero());
    let candidates = [CartanElt::d1(), CartanElt::d2()]
        .into_iter()
        .chain((1..).map(|k| CartanElt::new(Scalar::one(), Scalar::from_int(k))));
    for d in candidates {
        if separates(&d) {
            return Ok(d);
        }
    }
    unreachable!("candidate stream is infinite")
}

/// A finitely generated subgroup of `ℂ²` with `ℚ(i)` coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Lattice {
    pub generators: Vec<Degree>,
}

impl Lattice {
    pub fn new(generators: Vec<Degree>) -> Self {
        Lattice { generators }
    }

    /// `ℤ²` with its standard basis.
    pub fn standard() -> Self {
        Lattice::new(vec![Degree::int(1, 0), Degree::int(0, 1)])
    }

    /// True iff the generators span `ℂ²`. A `2×k` matrix has rank 2 iff some
    /// `2×2` minor is nonzero, and rank over `ℚ(i)` equals rank over `ℂ`.
    pub fn check_nondegenerate(&self) -> bool {
        self.independent_pair().is_some()
    }

    fn independent_pair(&self) -> Option<(usize, usize)> {
        let g = &self.generators;
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                if !g[i].det(&g[j]).is_zero() {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// True iff `a` is an integer combination of the generators.
    ///
    /// Coordinates are viewed in `ℚ⁴ ≅ ℚ(i)²`, denominators are cleared, and
    /// membership is decided against the Hermite normal form of the integer
    /// generator matrix.
    pub fn member(&self, a: &Degree) -> bool {
        let mut rows: Vec<[BigInt; 4]> = Vec::new();
        let all: Vec<[num_rational::BigRational; 4]> = self
            .generators
            .iter()
            .chain(std::iter::once(a))
            .map(real_coords)
            .collect();
        let mut lcm = BigInt::one();
        for v in &all {
            for q in v {
                lcm = lcm.lcm(q.denom());
            }
        }
        for v in &all {
            let row: [BigInt; 4] = std::array::from_fn(|k| (&v[k] * &lcm).to_integer());
            rows.push(row);
        }
        let target = rows.pop().expect("target row");
        let hnf = hermite_normal_form(rows);
        reduces_to_zero(&hnf, target)
    }

    /// Basis change sending the first independent pair of generators
    /// `ε₁, ε₂` to `(1,0), (0,1)`.
    pub fn coordinate_change(&self) -> Option<CoordinateChange> {
        let (i, j) = self.independent_pair()?;
        Some(CoordinateChange::new(
            self.generators[i].clone(),
            self.generators[j].clone(),
        ))
    }
}

fn real_coords(d: &Degree) -> [num_rational::BigRational; 4] {
    [
        d.c1.re().clone(),
        d.c1.im().clone(),
        d.c2.re().clone(),
        d.c2.im().clone(),
    ]
}

/// Row-style Hermite normal form over `ℤ`: nonzero rows in echelon form with
/// positive pivots and entries above each pivot reduced into `[0, pivot)`.
pub fn hermite_normal_form<const N: usize>(mut m: Vec<[BigInt; N]>) -> Vec<[BigInt; N]> {
    let mut r = 0;
    for col in 0..N {
        if r == m.len() {
            break;
        }
        for i in r + 1..m.len() {
            if m[i][col].is_zero() {
                continue;
            }
            let a = m[r][col].clone();
            let b = m[i][col].clone();
            let eg = a.extended_gcd(&b);
            let (ag, bg) = (&a / &eg.gcd, &b / &eg.gcd);
            let top: [BigInt; N] = std::array::from_fn(|k| &eg.x * &m[r][k] + &eg.y * &m[i][k]);
            let bottom: [BigInt; N] = std::array::from_fn(|k| &ag * &m[i][k] - &bg * &m[r][k]);
            m[r] = top;
            m[i] = bottom;
        }
        if m[r][col].is_zero() {
            continue;
        }
        if m[r][col].is_negative() {
            for v in m[r].iter_mut() {
                *v = -&*v;
            }
        }
        let pivot = m[r][col].clone();
        for i in 0..r {
            let q = m[i][col].div_floor(&pivot);
            if !q.is_zero() {
                #[allow(clippy::needless_range_loop)]
                for k in 0..N {
                    let t = &q * &m[r][k];
                    m[i][k] -= t;
                }
            }
        }
        r += 1;
    }
    m.truncate(r);
    m
}

fn reduces_to_zero<const N: usize>(hnf: &[[BigInt; N]], mut v: [BigInt; N]) -> bool {
    for row in hnf {
        let Some(col) = row.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        if v[..col].iter().any(|x| !x.is_zero()) {
            return false;
        }
        let (q, rem) = v[col].div_rem(&row[col]);
        if !rem.is_zero() {
            return false;
        }
        for k in 0..N {
            let t = &q * &row[k];
            v[k] -= t;
        }
    }
    v.iter().all(Zero::is_zero)
}

/// Coordinates relative to a basis `ε₁, ε₂ ⊂ Γ` of `ℂ²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateChange {
    pub e1: Degree,
    pub e2: Degree,
    det: Scalar,
}

impl CoordinateChange {
    /// Panics if `e1, e2` are linearly dependent.
    pub fn new(e1: Degree, e2: Degree) -> Self {
        let det = e1.det(&e2);
        assert!(!det.is_zero(), "coordinate basis must be independent");
        CoordinateChange { e1, e2, det }
    }

    /// `(p, q)` with `α = p·ε₁ + q·ε₂`.
    pub fn to_coords(&self, a: &Degree) -> Degree {
        let p = (&a.c1 * &self.e2.c2 - &a.c2 * &self.e2.c1) / &self.det;
        let q = (&self.e1.c1 * &a.c2 - &self.e1.c2 * &a.c1) / &self.det;
        Degree::new(p, q)
    }

    pub fn from_coords(&self, pq: &Degree) -> Degree {
        &self.e1.scale(&pq.c1) + &self.e2.scale(&pq.c2)
    }

    /// `∂′ᵢ` with `⟨∂′ᵢ, εⱼ⟩ = δᵢⱼ`.
    pub fn dual_cartan(&self, i: usize) -> CartanElt {
        match i {
            1 => CartanElt::new(&self.e2.c2 / &self.det, -&self.e2.c1 / &self.det),
            2 => CartanElt::new(-&self.e1.c2 / &self.det, &self.e1.c1 / &self.det),
            _ => panic!("dual Cartan index must be 1 or 2, got {i}"),
        }
    }

    /// `{∂₁, ∂₂} ∪ {L_{pε₁+qε₂} : (p,q) ∈ {±(1,0), ±(0,1), ±(1,1)}}`.
    pub fn standard_window(&self) -> Vec<BasisSym> {
        let mut w = vec![BasisSym::D1, BasisSym::D2];
        for (p, q) in [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1)] {
            let d = self.from_coords(&Degree::int(p, q));
            w.push(BasisSym::L(d));
        }
        w
    }
}
