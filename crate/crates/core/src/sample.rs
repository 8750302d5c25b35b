//! Seeded generators for random inputs: value tables, DO polynomials and
//! affine transformations. Every generator is deterministic in its seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::boolfunc::FunctionTable;
use crate::gf2n::FieldSpec;
use crate::linalg::AffineMap;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly random function table.
pub fn random_table(field: FieldSpec, seed: u64) -> FunctionTable {
    let mut r = rng(seed);
    random_table_with(field, &mut r)
}

pub fn random_table_with<R: Rng + ?Sized>(field: FieldSpec, rng: &mut R) -> FunctionTable {
    let values = (0..field.size())
        .map(|_| rng.gen_range(0..field.size() as u32))
        .collect();
    FunctionTable::new(field, values).expect("values are in range")
}

/// A random affine function on the field viewed as F_2^n.
pub fn random_affine_table<R: Rng + ?Sized>(field: FieldSpec, rng: &mut R) -> FunctionTable {
    let map = AffineMap::random(field.n(), rng);
    FunctionTable::from_fn(field, |x| map.apply(x))
}

/// A random affine permutation of the field viewed as F_2^n.
pub fn random_affine_permutation<R: Rng + ?Sized>(field: FieldSpec, rng: &mut R) -> AffineMap {
    AffineMap::random_permutation(field.n(), rng)
}
