//! Seeded generators for test inputs and self-checks.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{BasisSym, LieElt};
use crate::lattice::{pairing, CartanElt, Degree};
use crate::scalar::Scalar;
use crate::tensor::{alt, Tensor, Tensor2};

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Gaussian rational with small numerators and denominators; real about
/// half the time.
pub fn scalar<R: Rng>(rng: &mut R) -> Scalar {
    let re = Scalar::ratio(rng.gen_range(-5..=5), rng.gen_range(1..=3));
    if rng.gen_bool(0.5) {
        re
    } else {
        let im = Scalar::ratio(rng.gen_range(-5..=5), rng.gen_range(1..=3));
        &re + &(&im * &Scalar::i())
    }
}

pub fn nonzero_scalar<R: Rng>(rng: &mut R) -> Scalar {
    loop {
        let s = scalar(rng);
        if !s.is_zero() {
            return s;
        }
    }
}

/// Degree with Gaussian-integer coordinates, real and imaginary parts in
/// `[-radius, radius]`; imaginary parts are zero about half the time.
pub fn degree<R: Rng>(rng: &mut R, radius: i64) -> Degree {
    let complex = rng.gen_bool(0.5);
    let mut coord = || {
        let re = rng.gen_range(-radius..=radius);
        let im = if complex {
            rng.gen_range(-radius..=radius)
        } else {
            0
        };
        Scalar::gaussian(re, im)
    };
    let c1 = coord();
    let c2 = coord();
    Degree::new(c1, c2)
}

pub fn nonzero_degree<R: Rng>(rng: &mut R, radius: i64) -> Degree {
    loop {
        let d = degree(rng, radius);
        if !d.is_zero() {
            return d;
        }
    }
}

pub fn basis_sym<R: Rng>(rng: &mut R, radius: i64) -> BasisSym {
    match rng.gen_range(0..6) {
        0 => BasisSym::D1,
        1 => BasisSym::D2,
        _ => BasisSym::L(nonzero_degree(rng, radius)),
    }
}

/// Element with up to `max_terms` terms.
pub fn element<R: Rng>(rng: &mut R, max_terms: usize, radius: i64) -> LieElt {
    let n = rng.gen_range(0..=max_terms);
    (0..n)
        .map(|_| (basis_sym(rng, radius), nonzero_scalar(rng)))
        .collect()
}

pub fn tensor<const N: usize, R: Rng>(rng: &mut R, max_terms: usize, radius: i64) -> Tensor<N> {
    let n = rng.gen_range(0..=max_terms);
    (0..n)
        .map(|_| {
            let key = std::array::from_fn(|_| basis_sym(rng, radius));
            (key, nonzero_scalar(rng))
        })
        .collect()
}

/// `(1 − τ)s` for a random `s`.
pub fn antisymmetric<R: Rng>(rng: &mut R, max_terms: usize, radius: i64) -> Tensor2 {
    alt(&tensor::<2, _>(rng, max_terms, radius))
}

/// Element of `V₀`: `∂ᵢ⊗∂ⱼ` and `L_β⊗L_{-β}` terms.
pub fn v0<R: Rng>(rng: &mut R, max_terms: usize, radius: i64) -> Tensor2 {
    let n = rng.gen_range(0..=max_terms);
    (0..n)
        .map(|_| {
            let key = if rng.gen_bool(0.25) {
                [
                    BasisSym::d(rng.gen_range(1..=2)),
                    BasisSym::d(rng.gen_range(1..=2)),
                ]
            } else {
                let b = nonzero_degree(rng, radius);
                [BasisSym::L(b.clone()), BasisSym::L(-b)]
            };
            (key, nonzero_scalar(rng))
        })
        .collect()
}

/// Nonzero element of `V_α`: `x ⊗ y` terms with `deg x + deg y = α`.
pub fn homogeneous<R: Rng>(rng: &mut R, alpha: &Degree, max_terms: usize, radius: i64) -> Tensor2 {
    loop {
        let n = rng.gen_range(1..=max_terms.max(1));
        let t: Tensor2 = (0..n)
            .map(|_| {
                let a = basis_sym(rng, radius);
                let b = BasisSym::l(alpha - &a.degree())
                    .unwrap_or_else(|| BasisSym::d(rng.gen_range(1..=2)));
                let key = if rng.gen_bool(0.5) { [a, b] } else { [b, a] };
                (key, nonzero_scalar(rng))
            })
            .collect();
        if !t.is_zero() {
            return t;
        }
    }
}

/// Cartan element and nonzero degree with nonzero pairing.
pub fn michaelis_params<R: Rng>(rng: &mut R, radius: i64) -> (CartanElt, Degree) {
    loop {
        let d = CartanElt::new(scalar(rng), scalar(rng));
        let a = nonzero_degree(rng, radius);
        if !pairing(&d, &a).is_zero() {
            return (d, a);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_is_reproducible() {
        let a: Vec<Tensor2> = {
            let mut r = rng(7);
            (0..5).map(|_| tensor(&mut r, 4, 5)).collect()
        };
        let b: Vec<Tensor2> = {
            let mut r = rng(7);
            (0..5).map(|_| tensor(&mut r, 4, 5)).collect()
        };
        assert_eq!(a, b);
    }

    #[test]
    fn homogeneous_has_requested_degree() {
        let mut r = rng(3);
        for _ in 0..50 {
            let a = nonzero_degree(&mut r, 5);
            let t = homogeneous(&mut r, &a, 4, 5);
            assert_eq!(t.homogeneous_degree(), Some(a));
        }
    }

    #[test]
    fn v0_has_degree_zero() {
        let mut r = rng(1);
        for _ in 0..50 {
            let t = v0(&mut r, 4, 5);
            assert!(t.homogeneous_degree().is_none_or(|d| d.is_zero()));
        }
    }
}
