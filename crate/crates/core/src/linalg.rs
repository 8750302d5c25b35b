//! Linear algebra over F_2 on bit-packed vectors of at most 32 coordinates.

use rand::Rng;

/// A square matrix over F_2. Column `k` is the image of the basis vector
/// `e_k = 1 << k`, packed into a `u32`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    columns: Vec<u32>,
}

impl BinaryMatrix {
    pub fn from_columns(columns: Vec<u32>) -> Self {
        debug_assert!(columns.len() <= 32);
        BinaryMatrix { columns }
    }

    /// The matrix of an F_2-linear map given as a closure.
    pub fn from_linear_map(dim: u32, map: impl Fn(u32) -> u32) -> Self {
        BinaryMatrix {
            columns: (0..dim).map(|k| map(1 << k)).collect(),
        }
    }

    pub fn identity(dim: u32) -> Self {
        Self::from_linear_map(dim, |v| v)
    }

    pub fn zero(dim: u32) -> Self {
        BinaryMatrix {
            columns: vec![0; dim as usize],
        }
    }

    pub fn dim(&self) -> u32 {
        self.columns.len() as u32
    }

    pub fn columns(&self) -> &[u32] {
        &self.columns
    }

    /// Matrix-vector product.
    #[inline]
    pub fn apply(&self, v: u32) -> u32 {
        let mut acc = 0;
        let mut bits = v;
        while bits != 0 {
            let k = bits.trailing_zeros();
            acc ^= self.columns[k as usize];
            bits &= bits - 1;
        }
        acc
    }

    pub fn rank(&self) -> u32 {
        rank(&self.columns)
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.dim()
    }

    /// Inverse of an invertible matrix, by tracking the column operations
    /// of an elimination.
    pub fn inverse(&self) -> Option<BinaryMatrix> {
        let dim = self.dim() as usize;
        // Rows of [A^T | I]; row-reducing gives the inverse's transpose.
        let mut rows: Vec<(u32, u32)> = self
            .columns
            .iter()
            .enumerate()
            .map(|(k, &c)| (c, 1u32 << k))
            .collect();
        for bit in 0..dim {
            let pivot = (bit..dim).find(|&r| (rows[r].0 >> bit) & 1 == 1)?;
            rows.swap(bit, pivot);
            let (pv, pi) = rows[bit];
            for (r, row) in rows.iter_mut().enumerate() {
                if r != bit && (row.0 >> bit) & 1 == 1 {
                    row.0 ^= pv;
                    row.1 ^= pi;
                }
            }
        }
        // Row `bit` now reads e_bit = sum of the original columns selected
        // by the mask, so the mask is A^-1 e_bit.
        Some(BinaryMatrix {
            columns: rows.into_iter().map(|(_, m)| m).collect(),
        })
    }

    /// Uniformly random invertible `dim x dim` matrix (rejection sampling).
    pub fn random_invertible<R: Rng + ?Sized>(dim: u32, rng: &mut R) -> BinaryMatrix {
        let mask = low_mask(dim);
        loop {
            let m = BinaryMatrix {
                columns: (0..dim).map(|_| rng.gen::<u32>() & mask).collect(),
            };
            if m.is_invertible() {
                return m;
            }
        }
    }
}

/// `x -> Mx + c` on F_2^dim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineMap {
    pub linear: BinaryMatrix,
    pub constant: u32,
}

impl AffineMap {
    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        self.linear.apply(x) ^ self.constant
    }

    pub fn inverse(&self) -> Option<AffineMap> {
        let linear = self.linear.inverse()?;
        let constant = linear.apply(self.constant);
        Some(AffineMap { linear, constant })
    }

    /// Uniformly random affine permutation.
    pub fn random_permutation<R: Rng + ?Sized>(dim: u32, rng: &mut R) -> AffineMap {
        AffineMap {
            linear: BinaryMatrix::random_invertible(dim, rng),
            constant: rng.gen::<u32>() & low_mask(dim),
        }
    }

    /// Uniformly random affine map, not necessarily invertible.
    pub fn random<R: Rng + ?Sized>(dim: u32, rng: &mut R) -> AffineMap {
        let mask = low_mask(dim);
        AffineMap {
            linear: BinaryMatrix::from_columns((0..dim).map(|_| rng.gen::<u32>() & mask).collect()),
            constant: rng.gen::<u32>() & mask,
        }
    }
}

pub(crate) fn low_mask(dim: u32) -> u32 {
    if dim >= 32 {
        u32::MAX
    } else {
        (1u32 << dim) - 1
    }
}

/// Rank over F_2 of a set of bit vectors.
pub fn rank(vectors: &[u32]) -> u32 {
    let mut basis = [0u32; 32];
    let mut r = 0;
    for &v in vectors {
        let mut x = v;
        while x != 0 {
            let top = 31 - x.leading_zeros();
            if basis[top as usize] == 0 {
                basis[top as usize] = x;
                r += 1;
                break;
            }
            x ^= basis[top as usize];
        }
    }
    r
}

/// Reduced row-echelon basis of the span of `vectors`, sorted by
/// descending leading bit. Two sets span the same subspace iff their
/// reduced bases are equal.
pub fn reduced_basis(vectors: &[u32]) -> Vec<u32> {
    let mut rows: Vec<u32> = Vec::new();
    for &v in vectors {
        let mut x = v;
        for &row in &rows {
            let lead = 31 - row.leading_zeros();
            if (x >> lead) & 1 == 1 {
                x ^= row;
            }
        }
        if x != 0 {
            let lead = 31 - x.leading_zeros();
            for row in rows.iter_mut() {
                if (*row >> lead) & 1 == 1 {
                    *row ^= x;
                }
            }
            rows.push(x);
        }
    }
    rows.sort_unstable_by(|a, b| b.cmp(a));
    rows
}

/// All `2^k` elements of the span of `basis`, in Gray-code order starting
/// at 0.
pub fn span(basis: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(1 << basis.len());
    out.push(0);
    for &b in basis {
        let len = out.len();
        for i in 0..len {
            out.push(out[i] ^ b);
        }
    }
    out
}
