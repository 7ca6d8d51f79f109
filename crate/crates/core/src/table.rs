//! Linear maps `L(Γ) → L⊗L` given by their values on a finite window of
//! basis symbols.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::algebra::{BasisSym, LieElt};
use crate::combination::{degree_decompose, Key};
use crate::error::{Error, Result};
use crate::lattice::Degree;
use crate::tensor::{act2, Tensor2};

/// Values of a derivation (or cobracket) on a window of basis symbols.
///
/// Window symbols without an explicit value map to zero. Nothing outside the
/// span of the window is ever extrapolated.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct DerivationSpec {
    window: Vec<BasisSym>,
    values: BTreeMap<BasisSym, Tensor2>,
}

impl DerivationSpec {
    pub fn new(window: Vec<BasisSym>, mut values: BTreeMap<BasisSym, Tensor2>) -> Self {
        let mut seen = BTreeSet::new();
        let window: Vec<BasisSym> = window
            .into_iter()
            .chain(values.keys().cloned())
            .filter(|s| seen.insert(s.clone()))
            .collect();
        for s in &window {
            values.entry(s.clone()).or_default();
        }
        DerivationSpec { window, values }
    }

    /// Tabulates `x ↦ f(x)` on `window`.
    pub fn tabulate<F: FnMut(&BasisSym) -> Tensor2>(window: &[BasisSym], mut f: F) -> Self {
        let values = window.iter().map(|s| (s.clone(), f(s))).collect();
        DerivationSpec::new(window.to_vec(), values)
    }

    /// The inner derivation `u_inn: x ↦ x·u` restricted to `window`.
    pub fn inner(u: &Tensor2, window: &[BasisSym]) -> Self {
        Self::tabulate(window, |s| act2(&LieElt::from_key(s.clone()), u))
    }

    pub fn window(&self) -> &[BasisSym] {
        &self.window
    }

    pub fn values(&self) -> &BTreeMap<BasisSym, Tensor2> {
        &self.values
    }

    pub fn contains(&self, s: &BasisSym) -> bool {
        self.values.contains_key(s)
    }

    /// True when every term of `x` is a window symbol.
    pub fn spans(&self, x: &LieElt) -> bool {
        x.keys().all(|s| self.contains(s))
    }

    pub fn eval_sym(&self, s: &BasisSym) -> Result<&Tensor2> {
        self.values
            .get(s)
            .ok_or_else(|| Error::OutOfWindow(s.clone()))
    }

    pub fn eval(&self, x: &LieElt) -> Result<Tensor2> {
        let mut out = Tensor2::zero();
        for (s, c) in x.iter() {
            out.add_scaled(self.eval_sym(s)?, c);
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.values.values().all(Tensor2::is_zero)
    }

    /// Degrees `α` of the homogeneous components `D_α` that are nonzero on
    /// the window.
    pub fn component_degrees(&self) -> BTreeSet<Degree> {
        let mut out = BTreeSet::new();
        for (s, v) in &self.values {
            let beta = s.degree();
            for gamma in degree_decompose(v).keys() {
                out.insert(gamma - &beta);
            }
        }
        out
    }

    /// The homogeneous component `D_α`: on `x` of degree `β` it keeps the
    /// `V_{α+β}` part of `D(x)`.
    pub fn component(&self, alpha: &Degree) -> DerivationSpec {
        let values = self
            .values
            .iter()
            .map(|(s, v)| {
                let target = alpha + &s.degree();
                let part = v
                    .iter()
                    .filter(|(k, _)| k.degree() == target)
                    .map(|(k, c)| (k.clone(), c.clone()))
                    .collect();
                (s.clone(), part)
            })
            .collect();
        DerivationSpec {
            window: self.window.clone(),
            values,
        }
    }
}

/// `{d1: …, L(1;0): …}` in window order.
impl fmt::Display for DerivationSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, s) in self.window.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{s}: {}", self.values[s])?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;
    use crate::tensor::tensor2;

    fn l(p: i64, q: i64) -> LieElt {
        LieElt::l(Degree::int(p, q))
    }

    fn ls(p: i64, q: i64) -> BasisSym {
        BasisSym::L(Degree::int(p, q))
    }

    #[test]
    fn eval_is_linear_and_bounded_by_window() {
        let u = tensor2(&l(1, 0), &LieElt::d1());
        let d = DerivationSpec::inner(&u, &[BasisSym::D1, BasisSym::D2, ls(0, 1)]);
        let x = &LieElt::d1().scale(&Scalar::from_int(2)) + &l(0, 1);
        let expected = &act2(&LieElt::d1(), &u).scale(&Scalar::from_int(2)) + &act2(&l(0, 1), &u);
        assert_eq!(d.eval(&x).unwrap(), expected);
        assert_eq!(d.eval(&l(5, 5)), Err(Error::OutOfWindow(ls(5, 5))));
    }

    #[test]
    fn components_split_by_degree() {
        let u = &tensor2(&l(1, 0), &LieElt::d1()) + &tensor2(&LieElt::d1(), &LieElt::d2());
        let d = DerivationSpec::inner(&u, &[BasisSym::D1, ls(0, 1)]);
        let degs = d.component_degrees();
        assert_eq!(
            degs.into_iter().collect::<Vec<_>>(),
            vec![Degree::zero(), Degree::int(1, 0)]
        );
        let d1 = d.component(&Degree::int(1, 0));
        assert_eq!(
            d1.eval_sym(&ls(0, 1)).unwrap(),
            &act2(&l(0, 1), &tensor2(&l(1, 0), &LieElt::d1()))
        );
    }

    #[test]
    fn missing_values_default_to_zero() {
        let d = DerivationSpec::new(vec![BasisSym::D1], BTreeMap::new());
        assert!(d.eval_sym(&BasisSym::D1).unwrap().is_zero());
        assert_eq!(d.to_string(), "{d1: 0}");
    }
}
