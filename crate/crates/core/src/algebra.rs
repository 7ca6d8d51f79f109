//! The Lie algebra `L(Γ)`: basis symbols, sparse elements and the bracket.

use std::fmt;

use crate::combination::Combination;
use crate::lattice::Degree;
use crate::scalar::Scalar;

/// A basis vector of `L(Γ)`.
///
/// Variant order gives the canonical term order `∂₁ < ∂₂ < L_α`, with the
/// `L_α` ordered by degree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisSym {
    D1,
    D2,
    /// `L_α` for `α ≠ 0`. Build through [`BasisSym::l`] or [`LieElt::l`],
    /// which enforce the invariant.
    L(Degree),
}

impl BasisSym {
    /// `L_α`, or `None` when `α = 0` (the algebra has no `L_0`).
    pub fn l(deg: Degree) -> Option<BasisSym> {
        (!deg.is_zero()).then_some(BasisSym::L(deg))
    }

    pub fn d(i: usize) -> BasisSym {
        match i {
            1 => BasisSym::D1,
            2 => BasisSym::D2,
            _ => panic!("Cartan index must be 1 or 2, got {i}"),
        }
    }

    pub fn degree(&self) -> Degree {
        match self {
            BasisSym::L(d) => d.clone(),
            _ => Degree::zero(),
        }
    }

    pub fn is_cartan(&self) -> bool {
        !matches!(self, BasisSym::L(_))
    }
}

impl fmt::Display for BasisSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisSym::D1 => f.write_str("d1"),
            BasisSym::D2 => f.write_str("d2"),
            BasisSym::L(d) => write!(f, "L{d}"),
        }
    }
}

impl fmt::Debug for BasisSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A finite linear combination of basis symbols.
pub type LieElt = Combination<BasisSym>;

impl LieElt {
    /// `L_α`; the zero element when `α = 0`.
    pub fn l(deg: Degree) -> LieElt {
        BasisSym::l(deg).map_or_else(LieElt::zero, LieElt::from_key)
    }

    pub fn d1() -> LieElt {
        LieElt::from_key(BasisSym::D1)
    }

    pub fn d2() -> LieElt {
        LieElt::from_key(BasisSym::D2)
    }
}

/// Bracket of two basis symbols as `(symbol, coefficient)`, or `None` when it
/// vanishes.
pub fn bracket_basis(a: &BasisSym, b: &BasisSym) -> Option<(BasisSym, Scalar)> {
    use BasisSym::*;
    match (a, b) {
        (L(x), L(y)) => {
            let c = x.det(y);
            if c.is_zero() {
                return None;
            }
            BasisSym::l(x + y).map(|s| (s, c))
        }
        (D1, L(y)) | (D2, L(y)) => {
            let i = if *a == D1 { 1 } else { 2 };
            let c = y.coord(i).clone();
            (!c.is_zero()).then(|| (b.clone(), c))
        }
        (L(x), D1) | (L(x), D2) => {
            let i = if *b == D1 { 1 } else { 2 };
            let c = -x.coord(i);
            (!c.is_zero()).then(|| (a.clone(), c))
        }
        _ => None,
    }
}

/// `[x, y]`, the bilinear extension of the basis rules.
pub fn bracket(x: &LieElt, y: &LieElt) -> LieElt {
    let mut out = LieElt::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            if let Some((s, c)) = bracket_basis(a, b) {
                out.add_term(s, c * ca * cb);
            }
        }
    }
    out
}

/// `[x,[y,z]] + [y,[z,x]] + [z,[x,y]]`.
pub fn check_jacobi(x: &LieElt, y: &LieElt, z: &LieElt) -> LieElt {
    let mut out = bracket(x, &bracket(y, z));
    out += &bracket(y, &bracket(z, x));
    out += &bracket(z, &bracket(x, y));
    out
}
