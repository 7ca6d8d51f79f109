//! Tensor square and cube of `L(Γ)` with the adjoint diagonal action.

use crate::algebra::{bracket_basis, BasisSym, LieElt};
use crate::combination::Combination;
use crate::scalar::Scalar;

/// An element of `L(Γ)^{⊗N}`.
pub type Tensor<const N: usize> = Combination<[BasisSym; N]>;
pub type Tensor2 = Tensor<2>;
pub type Tensor3 = Tensor<3>;

/// `a ⊗ b` for elements.
pub fn tensor2(a: &LieElt, b: &LieElt) -> Tensor2 {
    let mut out = Tensor2::zero();
    for (x, cx) in a.iter() {
        for (y, cy) in b.iter() {
            out.add_term([x.clone(), y.clone()], cx * cy);
        }
    }
    out
}

/// `a ⊗ t` with `t ∈ L⊗L`.
pub fn tensor_left(a: &LieElt, t: &Tensor2) -> Tensor3 {
    let mut out = Tensor3::zero();
    for (x, cx) in a.iter() {
        for ([y, z], c) in t.iter() {
            out.add_term([x.clone(), y.clone(), z.clone()], cx * c);
        }
    }
    out
}

/// `t ⊗ a` with `t ∈ L⊗L`.
pub fn tensor_right(t: &Tensor2, a: &LieElt) -> Tensor3 {
    let mut out = Tensor3::zero();
    for ([x, y], c) in t.iter() {
        for (z, cz) in a.iter() {
            out.add_term([x.clone(), y.clone(), z.clone()], c * cz);
        }
    }
    out
}

/// `τ: x⊗y ↦ y⊗x`.
pub fn twist(t: &Tensor2) -> Tensor2 {
    t.map_keys(|[a, b]| [b.clone(), a.clone()])
}

/// `ξ: x⊗y⊗z ↦ y⊗z⊗x`.
pub fn cyclic(t: &Tensor3) -> Tensor3 {
    t.map_keys(|[a, b, c]| [b.clone(), c.clone(), a.clone()])
}

/// `(1 + ξ + ξ²)t`.
pub fn cyclic_sum(t: &Tensor3) -> Tensor3 {
    let once = cyclic(t);
    let twice = cyclic(&once);
    let mut out = t.clone();
    out += &once;
    out += &twice;
    out
}

/// `(1 − τ)t`.
pub fn alt(t: &Tensor2) -> Tensor2 {
    t - &twist(t)
}

/// `t + τ(t)`; zero iff `t ∈ Im(1 − τ)`.
pub fn antisym_defect(t: &Tensor2) -> Tensor2 {
    t + &twist(t)
}

/// Adjoint diagonal action `x·(a₁⊗…⊗a_N) = Σ_k a₁⊗…⊗[x,a_k]⊗…⊗a_N`.
pub fn act<const N: usize>(x: &LieElt, t: &Tensor<N>) -> Tensor<N> {
    let mut out = Tensor::<N>::zero();
    for (key, c) in t.iter() {
        for slot in 0..N {
            for (s, cs) in x.iter() {
                if let Some((b, cb)) = bracket_basis(s, &key[slot]) {
                    let mut k = key.clone();
                    k[slot] = b;
                    out.add_term(k, cb * cs * c);
                }
            }
        }
    }
    out
}

pub fn act2(x: &LieElt, t: &Tensor2) -> Tensor2 {
    act(x, t)
}

pub fn act3(x: &LieElt, t: &Tensor3) -> Tensor3 {
    act(x, t)
}

/// Convenience: `c·(a ⊗ b)` for basis symbols.
pub fn basis2(a: BasisSym, b: BasisSym, c: Scalar) -> Tensor2 {
    Tensor2::from_term([a, b], c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::bracket;
    use crate::combination::degree_decompose;
    use crate::lattice::Degree;

    fn l(p: i64, q: i64) -> LieElt {
        LieElt::l(Degree::int(p, q))
    }

    fn ls(p: i64, q: i64) -> BasisSym {
        BasisSym::L(Degree::int(p, q))
    }

    #[test]
    fn twist_examples() {
        let t = tensor2(&LieElt::d1(), &l(1, 0));
        assert_eq!(twist(&t), tensor2(&l(1, 0), &LieElt::d1()));
        let u = &t + &tensor2(&l(2, 3), &l(-1, 1)).scale(&Scalar::i());
        assert_eq!(twist(&twist(&u)), u);
        let x = &l(1, 0) + &LieElt::d2();
        let xx = tensor2(&x, &x);
        assert_eq!(twist(&xx), xx);
    }

    #[test]
    fn cyclic_examples() {
        let t = Tensor3::from_key([BasisSym::D1, ls(1, 0), ls(0, 1)]);
        assert_eq!(
            cyclic(&t),
            Tensor3::from_key([ls(1, 0), ls(0, 1), BasisSym::D1])
        );
        assert_eq!(cyclic(&cyclic(&cyclic(&t))), t);
        let expected = Tensor3::from_terms([
            ([BasisSym::D1, ls(1, 0), ls(0, 1)], Scalar::one()),
            ([ls(1, 0), ls(0, 1), BasisSym::D1], Scalar::one()),
            ([ls(0, 1), BasisSym::D1, ls(1, 0)], Scalar::one()),
        ]);
        assert_eq!(cyclic_sum(&t), expected);
    }

    #[test]
    fn act2_examples() {
        let t = tensor2(&l(1, 0), &l(2, 0));
        assert_eq!(act2(&LieElt::d1(), &t), t.scale(&Scalar::from_int(3)));

        let r = &tensor2(&LieElt::d1(), &l(1, 0)) - &tensor2(&l(1, 0), &LieElt::d1());
        let expected = &tensor2(&l(1, 1), &LieElt::d1()) - &tensor2(&LieElt::d1(), &l(1, 1));
        assert_eq!(act2(&l(0, 1), &r), expected);

        assert!(act2(&l(3, 1), &Tensor2::zero()).is_zero());
    }

    #[test]
    fn antisym_defect_examples() {
        let ab = tensor2(&l(1, 0), &l(0, 1));
        assert!(antisym_defect(&alt(&ab)).is_zero());
        assert_eq!(antisym_defect(&ab), &ab + &twist(&ab));
        assert!(!antisym_defect(&ab).is_zero());
        let dd = tensor2(&LieElt::d1(), &LieElt::d1());
        assert_eq!(antisym_defect(&dd), dd.scale(&Scalar::from_int(2)));
    }

    #[test]
    fn tensor_decompose_examples() {
        let t = tensor2(&l(1, 0), &l(-1, 0));
        let parts = degree_decompose(&t);
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[&Degree::zero()], t);

        let u = &tensor2(&LieElt::d1(), &l(1, 1)) + &tensor2(&l(1, 0), &l(0, 1));
        let parts = degree_decompose(&u);
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[&Degree::int(1, 1)], u);

        assert!(degree_decompose(&Tensor2::zero()).is_empty());
    }

    #[test]
    fn module_axiom_small() {
        let x = &l(1, 2) + &LieElt::d1();
        let y = &l(-1, 1) - &LieElt::d2();
        let t = &tensor2(&l(0, 1), &l(2, -1)) + &tensor2(&LieElt::d2(), &l(1, 0));
        let lhs = act2(&bracket(&x, &y), &t);
        let rhs = &act2(&x, &act2(&y, &t)) - &act2(&y, &act2(&x, &t));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn tensor_printing() {
        let r = &tensor2(&LieElt::d1(), &l(1, 0)) - &tensor2(&l(1, 0), &LieElt::d1());
        assert_eq!(r.to_string(), "d1 (x) L(1;0) - L(1;0) (x) d1");
    }
}
