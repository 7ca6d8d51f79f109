//! Finite sparse linear combinations over [`Scalar`].
//!
//! One type serves elements of `L(Γ)` (keys are [`BasisSym`]) and of its
//! tensor powers (keys are `[BasisSym; N]`). Zero coefficients are never
//! stored, so structural equality is equality of vectors.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::Zero;

use crate::algebra::BasisSym;
use crate::lattice::Degree;
use crate::scalar::Scalar;

/// A basis key of a graded vector space.
pub trait Key: Ord + Clone + fmt::Debug {
    /// Degree of the basis vector in the `Γ`-grading.
    fn degree(&self) -> Degree;

    /// Writes the key in the expression grammar.
    fn write_key(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result;
}

impl Key for BasisSym {
    fn degree(&self) -> Degree {
        BasisSym::degree(self)
    }

    fn write_key(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<const N: usize> Key for [BasisSym; N] {
    fn degree(&self) -> Degree {
        self.iter()
            .fold(Degree::zero(), |acc, s| &acc + &BasisSym::degree(s))
    }

    fn write_key(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" (x) ")?;
            }
            fmt::Display::fmt(s, f)?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Combination<K: Key> {
    terms: BTreeMap<K, Scalar>,
}

impl<K: Key> Combination<K> {
    pub fn zero() -> Self {
        Combination {
            terms: BTreeMap::new(),
        }
    }

    pub fn from_key(key: K) -> Self {
        Self::from_term(key, Scalar::one())
    }

    pub fn from_term(key: K, coeff: Scalar) -> Self {
        let mut c = Self::zero();
        c.add_term(key, coeff);
        c
    }

    pub fn from_terms<I: IntoIterator<Item = (K, Scalar)>>(terms: I) -> Self {
        let mut c = Self::zero();
        for (k, s) in terms {
            c.add_term(k, s);
        }
        c
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn contains(&self, key: &K) -> bool {
        self.terms.contains_key(key)
    }

    /// Terms in canonical order.
    pub fn iter(&self) -> btree_map::Iter<'_, K, Scalar> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, Scalar> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, key: K, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += coeff · other`.
    pub fn add_scaled(&mut self, other: &Self, coeff: &Scalar) {
        if coeff.is_zero() {
            return;
        }
        for (k, c) in other.iter() {
            self.add_term(k.clone(), c * coeff);
        }
    }

    pub fn scale(&self, coeff: &Scalar) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        Combination {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c * coeff))
                .collect(),
        }
    }

    /// Applies a linear map given on basis keys.
    pub fn map_keys<K2: Key, F: FnMut(&K) -> K2>(&self, mut f: F) -> Combination<K2> {
        Combination::from_terms(self.iter().map(|(k, c)| (f(k), c.clone())))
    }

    /// `Some(d)` when every term has degree `d`; `None` for zero or mixed.
    pub fn homogeneous_degree(&self) -> Option<Degree> {
        let mut it = self.keys().map(Key::degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }
}

impl<K: Key> Default for Combination<K> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Key> FromIterator<(K, Scalar)> for Combination<K> {
    fn from_iter<I: IntoIterator<Item = (K, Scalar)>>(iter: I) -> Self {
        Self::from_terms(iter)
    }
}

impl<K: Key> IntoIterator for Combination<K> {
    type Item = (K, Scalar);
    type IntoIter = btree_map::IntoIter<K, Scalar>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, K: Key> IntoIterator for &'a Combination<K> {
    type Item = (&'a K, &'a Scalar);
    type IntoIter = btree_map::Iter<'a, K, Scalar>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

/// Splits a combination into its homogeneous components.
pub fn degree_decompose<K: Key>(x: &Combination<K>) -> BTreeMap<Degree, Combination<K>> {
    let mut out: BTreeMap<Degree, Combination<K>> = BTreeMap::new();
    for (k, c) in x.iter() {
        out.entry(k.degree())
            .or_default()
            .add_term(k.clone(), c.clone());
    }
    out
}

impl<K: Key> AddAssign<&Combination<K>> for Combination<K> {
    fn add_assign(&mut self, rhs: &Combination<K>) {
        for (k, c) in rhs.iter() {
            self.add_term(k.clone(), c.clone());
        }
    }
}

impl<K: Key> SubAssign<&Combination<K>> for Combination<K> {
    fn sub_assign(&mut self, rhs: &Combination<K>) {
        for (k, c) in rhs.iter() {
            self.add_term(k.clone(), -c);
        }
    }
}

impl<K: Key> Add<&Combination<K>> for &Combination<K> {
    type Output = Combination<K>;
    fn add(self, rhs: &Combination<K>) -> Combination<K> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Key> Sub<&Combination<K>> for &Combination<K> {
    type Output = Combination<K>;
    fn sub(self, rhs: &Combination<K>) -> Combination<K> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: Key> Add for Combination<K> {
    type Output = Combination<K>;
    fn add(mut self, rhs: Combination<K>) -> Combination<K> {
        self += &rhs;
        self
    }
}

impl<K: Key> Sub for Combination<K> {
    type Output = Combination<K>;
    fn sub(mut self, rhs: Combination<K>) -> Combination<K> {
        self -= &rhs;
        self
    }
}

impl<K: Key> Neg for &Combination<K> {
    type Output = Combination<K>;
    fn neg(self) -> Combination<K> {
        Combination {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }
}

impl<K: Key> Neg for Combination<K> {
    type Output = Combination<K>;
    fn neg(self) -> Combination<K> {
        -&self
    }
}

impl<K: Key> Mul<&Combination<K>> for &Scalar {
    type Output = Combination<K>;
    fn mul(self, rhs: &Combination<K>) -> Combination<K> {
        rhs.scale(self)
    }
}

impl<K: Key> Mul<Combination<K>> for Scalar {
    type Output = Combination<K>;
    fn mul(self, rhs: Combination<K>) -> Combination<K> {
        rhs.scale(&self)
    }
}

/// Writes `coeff*` (or nothing for 1) for a coefficient already stripped of
/// its leading sign.
fn write_coeff(f: &mut fmt::Formatter<'_>, c: &Scalar) -> fmt::Result {
    if c.is_one() {
        Ok(())
    } else if !c.re().is_zero() && !c.im().is_zero() {
        write!(f, "({c})*")
    } else {
        write!(f, "{c}*")
    }
}

/// Canonical rendering in the expression grammar, e.g.
/// `-1/2*d1 + 2*L(1;0)` or `d1 (x) L(1;0) - L(1;0) (x) d1`. Zero prints as `0`.
impl<K: Key> fmt::Display for Combination<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.iter().enumerate() {
            let neg = c.is_negative();
            let mag = if neg { -c } else { c.clone() };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write_coeff(f, &mag)?;
            k.write_key(f)?;
        }
        Ok(())
    }
}

impl<K: Key> fmt::Debug for Combination<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}
