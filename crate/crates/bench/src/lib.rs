//! Benchmark fixtures shared by the criterion targets.

use virbialg_core::cohomology::standard_window;
use virbialg_core::random::{self, TestRng};
use virbialg_core::{DerivationSpec, LieElt, Tensor2};

pub fn elements(seed: u64, n: usize, terms: usize) -> Vec<LieElt> {
    let mut rng: TestRng = random::rng(seed);
    (0..n)
        .map(|_| random::element(&mut rng, terms, 5))
        .collect()
}

pub fn antisymmetric(seed: u64, n: usize, terms: usize) -> Vec<Tensor2> {
    let mut rng: TestRng = random::rng(seed);
    (0..n)
        .map(|_| random::antisymmetric(&mut rng, terms, 5))
        .collect()
}

/// Inner tables of random degree-0 tensors on the standard window.
pub fn degree_zero_tables(seed: u64, n: usize) -> Vec<DerivationSpec> {
    let mut rng: TestRng = random::rng(seed);
    let w = standard_window();
    (0..n)
        .map(|_| DerivationSpec::inner(&random::v0(&mut rng, 4, 5), &w))
        .collect()
}
